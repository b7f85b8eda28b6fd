use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::model::{
    Attribution, BufferState, Network, NodeId, RoutingTable, ScheduleFrame, Transmission,
};

/// Step 3 of the generic scheduling loop: what a scheduled attempt does to
/// the packet buffers.
pub trait BufferUpdatePolicy {
    /// Registers one scheduled attempt by `t`. Returns `true` when a packet
    /// left `t` (and was added to the parent's buffer unless the parent is a
    /// sink).
    fn update_packet_buffers(
        &mut self,
        t: NodeId,
        routing: &RoutingTable,
        net: &Network,
        buffers: &mut BufferState,
    ) -> bool;

    /// Largest number of attempts a single hop may take under this policy.
    fn max_attempts(&self) -> u32 {
        1
    }
}

/// Perfect-channel semantics: every attempt moves one packet.
#[derive(Clone, Copy, Debug, Default)]
pub struct PlainPolicy;

impl BufferUpdatePolicy for PlainPolicy {
    fn update_packet_buffers(
        &mut self,
        t: NodeId,
        routing: &RoutingTable,
        net: &Network,
        buffers: &mut BufferState,
    ) -> bool {
        if buffers.get(t) == 0 {
            return false;
        }
        move_packet(t, routing, net, buffers);
        true
    }
}

pub(crate) fn move_packet(t: NodeId, routing: &RoutingTable, net: &Network, b: &mut BufferState) {
    *b.slot_mut(t) -= 1;
    if let Some(p) = routing.parent(t) {
        if !net.is_sink(p) {
            *b.slot_mut(p) += 1;
        }
    }
}

/// Buffer counts plus a FIFO of packet identities per node, so every
/// attempt can be attributed to the packet it serves.
#[derive(Clone, Debug)]
pub struct PacketTracker {
    buffers: BufferState,
    queues: Vec<VecDeque<Attribution>>,
    moves: u64,
    /// Packets not yet at a sink.
    pending: u64,
}

impl PacketTracker {
    pub fn new(b0: &BufferState) -> Self {
        let queues = b0
            .counts()
            .iter()
            .enumerate()
            .map(|(i, &n)| {
                (0..n)
                    .map(|seq| Attribution {
                        source: NodeId(i),
                        seq,
                        hop: 0,
                    })
                    .collect()
            })
            .collect();
        let pending = b0.counts().iter().map(|&n| n as u64).sum();
        PacketTracker {
            buffers: b0.clone(),
            queues,
            moves: 0,
            pending,
        }
    }

    pub fn buffers(&self) -> &BufferState {
        &self.buffers
    }

    pub fn into_buffers(self) -> BufferState {
        self.buffers
    }

    /// Packet at the head of `t`'s buffer.
    pub fn head(&self, t: NodeId) -> Option<Attribution> {
        self.queues[t.0].front().copied()
    }

    /// Total number of hop transitions so far.
    pub fn moves(&self) -> u64 {
        self.moves
    }

    pub fn is_drained(&self) -> bool {
        debug_assert_eq!(self.pending == 0, self.buffers.is_empty());
        self.pending == 0
    }

    /// Applies one scheduled attempt by `t`. Returns the packet the attempt
    /// was dedicated to, or `None` if `t` had nothing to send.
    pub fn transmit(
        &mut self,
        t: NodeId,
        routing: &RoutingTable,
        net: &Network,
        policy: &mut (impl BufferUpdatePolicy + ?Sized),
    ) -> Result<Option<Attribution>> {
        let parent = routing.parent(t).ok_or(Error::NoParent(t))?;
        let served = self.head(t);
        if policy.update_packet_buffers(t, routing, net, &mut self.buffers) {
            let mut pkt = self.queues[t.0]
                .pop_front()
                .expect("buffer count and packet queue out of sync");
            self.moves += 1;
            if net.is_sink(parent) {
                self.pending -= 1;
            } else {
                pkt.hop += 1;
                self.queues[parent.0].push_back(pkt);
            }
        }
        debug_assert_eq!(self.buffers.get(t) as usize, self.queues[t.0].len());
        Ok(served)
    }
}

/// Replays `frame` assuming every attempt that the policy says moves a
/// packet succeeds, and returns the final buffers. `(frame, routing)` is
/// successful for `b0` iff the result is empty.
pub fn execute_frame_deterministic(
    frame: &ScheduleFrame,
    routing: &RoutingTable,
    net: &Network,
    b0: &BufferState,
    policy: &mut (impl BufferUpdatePolicy + ?Sized),
) -> Result<BufferState> {
    let mut tracker = PacketTracker::new(b0);
    for (_, tx) in frame.transmissions() {
        tracker.transmit(tx.transmitter, routing, net, policy)?;
    }
    Ok(tracker.into_buffers())
}

/// Copy of `frame` where each transmission is attributed to the packet it
/// serves in the deterministic replay. Idle transmissions get `None`.
pub fn attribute_by_replay(
    frame: &ScheduleFrame,
    routing: &RoutingTable,
    net: &Network,
    b0: &BufferState,
    policy: &mut (impl BufferUpdatePolicy + ?Sized),
) -> Result<ScheduleFrame> {
    let mut tracker = PacketTracker::new(b0);
    let mut out = frame.clone();
    for slot in &mut out.slots {
        for tx in &mut slot.transmissions {
            let Transmission { transmitter, .. } = *tx;
            tx.attribution = tracker.transmit(transmitter, routing, net, policy)?;
        }
    }
    Ok(out)
}

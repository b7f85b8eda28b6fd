use std::fmt;

use crate::model::NodeId;

/// The packet a transmission is dedicated to: the `seq`-th packet produced
/// at `source`, on its `hop`-th link (0 = first hop out of the source).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Attribution {
    pub source: NodeId,
    pub seq: u32,
    pub hop: u32,
}

impl Attribution {
    /// Identity of the packet, ignoring the hop.
    pub fn packet(&self) -> (NodeId, u32) {
        (self.source, self.seq)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Transmission {
    pub transmitter: NodeId,
    pub receiver: NodeId,
    pub attribution: Option<Attribution>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Slot {
    pub transmissions: Vec<Transmission>,
}

impl Slot {
    pub fn new(transmissions: Vec<Transmission>) -> Self {
        Slot { transmissions }
    }

    pub fn len(&self) -> usize {
        self.transmissions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.transmissions.is_empty()
    }

    pub fn transmitters(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.transmissions.iter().map(|tx| tx.transmitter)
    }
}

/// An ordered sequence of slots, repeated periodically on the air.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScheduleFrame {
    pub slots: Vec<Slot>,
}

impl ScheduleFrame {
    pub fn new(slots: Vec<Slot>) -> Self {
        ScheduleFrame { slots }
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn push(&mut self, slot: Slot) {
        self.slots.push(slot);
    }

    pub fn transmissions(&self) -> impl Iterator<Item = (usize, &Transmission)> {
        self.slots
            .iter()
            .enumerate()
            .flat_map(|(s, slot)| slot.transmissions.iter().map(move |tx| (s, tx)))
    }

    pub fn transmission_count(&self) -> usize {
        self.slots.iter().map(Slot::len).sum()
    }

    /// Number of slots in which `t` transmits.
    pub fn attempts_by(&self, t: NodeId) -> usize {
        self.transmissions()
            .filter(|(_, tx)| tx.transmitter == t)
            .count()
    }

    pub fn is_attributed(&self) -> bool {
        self.transmissions().all(|(_, tx)| tx.attribution.is_some())
    }
}

/// `|F|`, the latency objective.
pub fn frame_length(frame: &ScheduleFrame) -> usize {
    frame.len()
}

impl fmt::Display for ScheduleFrame {
    /// One line per slot, numbered from 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (s, slot) in self.slots.iter().enumerate() {
            write!(f, "slot {:>4}:", s + 1)?;
            for tx in &slot.transmissions {
                write!(f, " {}->{}", tx.transmitter, tx.receiver)?;
                if let Some(a) = tx.attribution {
                    write!(f, "[{}#{}@{}]", a.source, a.seq, a.hop)?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

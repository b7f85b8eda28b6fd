use std::fmt;

use crate::error::{Error, Result};
use crate::model::{LinkQualityMatrix, Network, NodeId, RoutingTable, ScheduleFrame};

/// Which rule a [`Violation`] breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Constraint {
    /// No node is its own parent.
    C1,
    /// At most one parent per transmitter.
    C2,
    /// A parent edge needs a link.
    C3,
    /// A transmitter must not hear another concurrent transmitter.
    C4,
    /// A receiver must not hear two concurrent transmitters.
    C5,
    /// Every transceiver forwards to a sink.
    Reachability,
    /// Frame or table shape problems not covered by c1..c5.
    Structure,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    SelfParent {
        node: NodeId,
    },
    MultipleParents {
        node: NodeId,
        count: usize,
    },
    MissingLink {
        transmitter: NodeId,
        parent: NodeId,
    },
    NoRoute {
        node: NodeId,
    },
    SinkHasParent {
        sink: NodeId,
    },
    /// `transmitter` and `other` share a slot although one hears the other.
    HalfDuplex {
        slot: usize,
        transmitter: NodeId,
        other: NodeId,
    },
    /// `receiver` is addressed in the slot and hears both transmitters.
    Collision {
        slot: usize,
        receiver: NodeId,
        first: NodeId,
        second: NodeId,
    },
    WrongReceiver {
        slot: usize,
        transmitter: NodeId,
        receiver: NodeId,
    },
    DuplicateTransmitter {
        slot: usize,
        transmitter: NodeId,
    },
    NotTransceiver {
        slot: usize,
        node: NodeId,
    },
}

impl Violation {
    pub fn constraint(&self) -> Constraint {
        match self {
            Violation::SelfParent { .. } => Constraint::C1,
            Violation::MultipleParents { .. } => Constraint::C2,
            Violation::MissingLink { .. } => Constraint::C3,
            Violation::NoRoute { .. } => Constraint::Reachability,
            Violation::HalfDuplex { .. } => Constraint::C4,
            Violation::Collision { .. } => Constraint::C5,
            Violation::SinkHasParent { .. }
            | Violation::WrongReceiver { .. }
            | Violation::DuplicateTransmitter { .. }
            | Violation::NotTransceiver { .. } => Constraint::Structure,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // slots print 1-based
        match *self {
            Violation::SelfParent { node } => write!(f, "c1: {node} is its own parent"),
            Violation::MultipleParents { node, count } => {
                write!(f, "c2: {node} has {count} parents")
            }
            Violation::MissingLink {
                transmitter,
                parent,
            } => {
                write!(f, "c3: no link {transmitter}->{parent}")
            }
            Violation::NoRoute { node } => write!(f, "{node} does not reach a sink"),
            Violation::SinkHasParent { sink } => write!(f, "sink {sink} has a parent"),
            Violation::HalfDuplex {
                slot,
                transmitter,
                other,
            } => write!(
                f,
                "c4: slot {}: {transmitter} and {other} transmit within earshot",
                slot + 1
            ),
            Violation::Collision {
                slot,
                receiver,
                first,
                second,
            } => write!(
                f,
                "c5: slot {}: {receiver} hears both {first} and {second}",
                slot + 1
            ),
            Violation::WrongReceiver {
                slot,
                transmitter,
                receiver,
            } => write!(
                f,
                "slot {}: {transmitter} sends to {receiver}, not its parent",
                slot + 1
            ),
            Violation::DuplicateTransmitter { slot, transmitter } => {
                write!(f, "slot {}: {transmitter} scheduled twice", slot + 1)
            }
            Violation::NotTransceiver { slot, node } => {
                write!(f, "slot {}: {node} is not a transceiver", slot + 1)
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }

    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn len(&self) -> usize {
        self.violations.len()
    }

    pub fn contains(&self, c: Constraint) -> bool {
        self.violations.iter().any(|v| v.constraint() == c)
    }

    pub fn extend(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "valid");
        }
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks c1, c3 and reachability of every transceiver to a sink. c2 cannot
/// be violated by a [`RoutingTable`]; see [`RoutingTable::from_binary_matrix`].
pub fn validate_routing(
    routing: &RoutingTable,
    net: &Network,
    quality: &LinkQualityMatrix,
) -> Result<ValidationReport> {
    quality.check_dimensions(net)?;
    if routing.len() != net.len() {
        return Err(Error::Dimension(format!(
            "routing table covers {} nodes, network has {}",
            routing.len(),
            net.len()
        )));
    }
    if let Some((i, p)) = routing
        .parents()
        .iter()
        .enumerate()
        .find_map(|(i, p)| p.filter(|p| p.0 >= net.len()).map(|p| (i, p)))
    {
        return Err(Error::Dimension(format!(
            "parent {p} of {} is out of range",
            NodeId(i)
        )));
    }

    let mut report = ValidationReport::default();
    for &s in net.sinks() {
        if routing.parent(s).is_some() {
            report.push(Violation::SinkHasParent { sink: s });
        }
    }
    for &t in net.transceivers() {
        match routing.parent(t) {
            Some(p) if p == t => report.push(Violation::SelfParent { node: t }),
            Some(p) if quality.get(t, p) <= 0.0 => report.push(Violation::MissingLink {
                transmitter: t,
                parent: p,
            }),
            _ => {}
        }
    }

    // 0 = unknown, 1 = on current walk, 2 = reaches sink, 3 = dead end
    let mut state = vec![0u8; net.len()];
    for &s in net.sinks() {
        state[s.0] = 2;
    }
    for &t in net.transceivers() {
        let mut walk = Vec::new();
        let mut cur = t;
        let verdict = loop {
            match state[cur.0] {
                2 => break 2,
                1 | 3 => break 3,
                _ => {}
            }
            state[cur.0] = 1;
            walk.push(cur);
            match routing.parent(cur) {
                Some(p) => cur = p,
                None => break 3,
            }
        };
        for n in walk {
            state[n.0] = verdict;
        }
        if verdict == 3 {
            report.push(Violation::NoRoute { node: t });
        }
    }
    Ok(report)
}

/// Checks every slot against c4 and c5 (any `q > 0`, interference entries
/// included, counts as audible) and that each transmission goes to the
/// transmitter's parent.
pub fn validate_schedule(
    frame: &ScheduleFrame,
    routing: &RoutingTable,
    quality: &LinkQualityMatrix,
) -> Result<ValidationReport> {
    if routing.len() != quality.n_nodes() {
        return Err(Error::Dimension(format!(
            "routing table covers {} nodes, quality matrix {}",
            routing.len(),
            quality.n_nodes()
        )));
    }
    let mut report = ValidationReport::default();
    let mut seen = vec![usize::MAX; quality.n_nodes()];
    let mut active = Vec::new();
    for (s, slot) in frame.slots.iter().enumerate() {
        active.clear();
        for tx in &slot.transmissions {
            let t = tx.transmitter;
            if !quality.has_row(t) {
                report.push(Violation::NotTransceiver { slot: s, node: t });
                continue;
            }
            if seen[t.0] == s {
                report.push(Violation::DuplicateTransmitter {
                    slot: s,
                    transmitter: t,
                });
                continue;
            }
            seen[t.0] = s;
            if routing.parent(t) != Some(tx.receiver) {
                report.push(Violation::WrongReceiver {
                    slot: s,
                    transmitter: t,
                    receiver: tx.receiver,
                });
            }
            active.push((t, tx.receiver));
        }

        for (i, &(a, _)) in active.iter().enumerate() {
            for &(b, _) in &active[i + 1..] {
                if quality.audible(a, b) || quality.audible(b, a) {
                    report.push(Violation::HalfDuplex {
                        slot: s,
                        transmitter: a,
                        other: b,
                    });
                }
            }
        }

        let mut receivers: Vec<NodeId> = active.iter().map(|&(_, r)| r).collect();
        receivers.sort_unstable();
        receivers.dedup();
        for r in receivers {
            let heard: Vec<NodeId> = active
                .iter()
                .map(|&(t, _)| t)
                .filter(|&t| quality.audible(t, r))
                .collect();
            for (i, &a) in heard.iter().enumerate() {
                for &b in &heard[i + 1..] {
                    report.push(Violation::Collision {
                        slot: s,
                        receiver: r,
                        first: a,
                        second: b,
                    });
                }
            }
        }
    }
    Ok(report)
}

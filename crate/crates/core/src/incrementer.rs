//! Greedy slot repetition: copy the slot whose repetition raises the exact
//! end-to-end reliability the most, until the demand is met.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::model::{Attribution, LinkQualityMatrix, NodeId, ScheduleFrame};
use crate::schedex::ReliabilityBound;

/// `ln(1 - (1-q)^n)` given `ln(1-q)`.
fn ln_factor(ln_fail: f64, n: u32) -> f64 {
    if n == 0 {
        return f64::NEG_INFINITY;
    }
    (-(n as f64 * ln_fail).exp()).ln_1p()
}

/// A frame whose transmissions all name the (packet, hop) they serve, with
/// the attempt count per (packet, hop) kept alongside.
#[derive(Clone, Debug)]
pub struct AttributedFrame {
    frame: ScheduleFrame,
    /// Key index of every transmission, slot by slot.
    slot_keys: Vec<Vec<u32>>,
    keys: Vec<Attribution>,
    ln_fail: Vec<f64>,
    attempts: Vec<u32>,
    /// Change in `ln` reliability if the key got one more attempt.
    delta: Vec<f64>,
    ln_rel: f64,
}

impl AttributedFrame {
    pub fn new(frame: ScheduleFrame, quality: &LinkQualityMatrix) -> Result<Self> {
        let mut index: HashMap<Attribution, u32> = HashMap::new();
        let mut keys = Vec::new();
        let mut ln_fail = Vec::new();
        let mut attempts = Vec::new();
        let mut slot_keys = Vec::with_capacity(frame.len());
        for (s, slot) in frame.slots.iter().enumerate() {
            let mut ks = Vec::with_capacity(slot.len());
            for tx in &slot.transmissions {
                let a = tx
                    .attribution
                    .ok_or(Error::MissingAttribution { slot: s })?;
                let q = quality.get(tx.transmitter, tx.receiver);
                let k = *index.entry(a).or_insert_with(|| {
                    keys.push(a);
                    ln_fail.push((-q).ln_1p());
                    attempts.push(0);
                    keys.len() as u32 - 1
                });
                attempts[k as usize] += 1;
                ks.push(k);
            }
            slot_keys.push(ks);
        }
        let mut af = AttributedFrame {
            frame,
            slot_keys,
            keys,
            ln_fail,
            attempts,
            delta: Vec::new(),
            ln_rel: 0.0,
        };
        af.delta = (0..af.keys.len()).map(|k| af.key_delta(k)).collect();
        af.ln_rel = (0..af.keys.len())
            .map(|k| ln_factor(af.ln_fail[k], af.attempts[k]))
            .sum();
        Ok(af)
    }

    fn key_delta(&self, k: usize) -> f64 {
        let n = self.attempts[k];
        ln_factor(self.ln_fail[k], n + 1) - ln_factor(self.ln_fail[k], n)
    }

    pub fn frame(&self) -> &ScheduleFrame {
        &self.frame
    }

    pub fn into_frame(self) -> ScheduleFrame {
        self.frame
    }

    pub fn len(&self) -> usize {
        self.frame.len()
    }

    pub fn is_empty(&self) -> bool {
        self.frame.is_empty()
    }

    /// `n_{p,h}` for the given packet hop (0 if never scheduled).
    pub fn attempts(&self, source: NodeId, seq: u32, hop: u32) -> u32 {
        let a = Attribution { source, seq, hop };
        self.keys
            .iter()
            .position(|k| *k == a)
            .map_or(0, |i| self.attempts[i])
    }

    /// Probability that every scheduled (packet, hop) succeeds at least once.
    pub fn reliability(&self) -> f64 {
        self.ln_rel.exp()
    }

    pub fn ln_reliability(&self) -> f64 {
        self.ln_rel
    }

    /// `ln` of the reliability ratio gained by repeating slot `s`.
    pub fn gain(&self, s: usize) -> f64 {
        self.slot_keys[s]
            .iter()
            .map(|&k| self.delta[k as usize])
            .sum()
    }

    /// Slot whose repetition gains the most; the smallest index wins ties.
    pub fn best_repeat(&self) -> Option<usize> {
        let mut best: Option<(usize, f64)> = None;
        for s in 0..self.slot_keys.len() {
            let g = self.gain(s);
            if best.is_none_or(|(_, bg)| g > bg) {
                best = Some((s, g));
            }
        }
        best.map(|(s, _)| s)
    }

    /// Inserts a copy of slot `s` right after it.
    pub fn repeat_slot(&mut self, s: usize) {
        let slot = self.frame.slots[s].clone();
        let ks = self.slot_keys[s].clone();
        for &k in &ks {
            let k = k as usize;
            self.ln_rel += self.delta[k];
            self.attempts[k] += 1;
            self.delta[k] = self.key_delta(k);
        }
        self.frame.slots.insert(s + 1, slot);
        self.slot_keys.insert(s + 1, ks);
    }
}

/// Exact end-to-end reliability of an attributed frame, assuming independent
/// attempts: `Π_{p,h} (1-(1-q)^{n_{p,h}})`.
pub fn exact_reliability(frame: &ScheduleFrame, quality: &LinkQualityMatrix) -> Result<f64> {
    AttributedFrame::new(frame.clone(), quality).map(|af| af.reliability())
}

pub fn best_repeat(frame: &ScheduleFrame, quality: &LinkQualityMatrix) -> Result<usize> {
    AttributedFrame::new(frame.clone(), quality)?
        .best_repeat()
        .ok_or_else(|| Error::Domain("cannot repeat a slot of an empty frame".into()))
}

/// Repeats slots greedily until the reliability reaches `rho`, or fails
/// once the frame would grow past `max_slots`.
pub fn increment_until(
    mut frame: AttributedFrame,
    rho: ReliabilityBound,
    max_slots: usize,
) -> Result<AttributedFrame> {
    let target = rho.ln();
    while frame.ln_rel < target {
        let limit = || Error::IncrementLimit {
            target: rho.value(),
            reached: frame.reliability(),
            max_slots,
        };
        if frame.len() >= max_slots {
            return Err(limit());
        }
        let Some(s) = frame.best_repeat() else {
            return Err(limit());
        };
        if frame.gain(s) <= 0.0 {
            return Err(limit());
        }
        frame.repeat_slot(s);
    }
    Ok(frame)
}

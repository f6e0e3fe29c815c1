//! Streams of partitions of `n` in reverse-lexicographic order
//! (largest first part first, e.g. `4, 31, 22, 211, 1111`).

use crate::partition::Partition;
use crate::restriction::RestrictionSpec;

/// Depth-first generator over partitions whose parts satisfy `allowed` and
/// whose multiplicities stay at or below `cap`.
pub struct PartitionStream<A, C> {
    target: u32,
    parts: Vec<u32>,
    sum: u32,
    allowed: A,
    cap: C,
    started: bool,
    exhausted: bool,
}

impl<A, C> PartitionStream<A, C>
where
    A: Fn(u32) -> bool,
    C: Fn(u32) -> Option<usize>,
{
    pub fn new(target: u32, allowed: A, cap: C) -> Self {
        PartitionStream {
            target,
            parts: Vec::new(),
            sum: 0,
            allowed,
            cap,
            started: false,
            exhausted: false,
        }
    }

    /// Trailing run length of `value` if it were appended.
    fn fits(&self, value: u32) -> bool {
        if !(self.allowed)(value) {
            return false;
        }
        let run = self.parts.iter().rev().take_while(|&&p| p == value).count();
        (self.cap)(value).is_none_or(|c| run < c)
    }

    /// Largest admissible part that is `< below` (and within the ceiling).
    fn candidate(&self, below: u32) -> Option<u32> {
        let ceiling = self
            .parts
            .last()
            .copied()
            .unwrap_or(self.target)
            .min(self.target - self.sum);
        (1..below.min(ceiling + 1)).rev().find(|&v| self.fits(v))
    }

    fn push(&mut self, v: u32) {
        self.parts.push(v);
        self.sum += v;
    }

    /// Greedily completes the current prefix; false on a dead end.
    fn descend(&mut self) -> bool {
        while self.sum < self.target {
            match self.candidate(u32::MAX) {
                Some(v) => self.push(v),
                None => return false,
            }
        }
        true
    }

    /// Replaces the deepest part that can be lowered; false when exhausted.
    fn backtrack(&mut self) -> bool {
        while let Some(v) = self.parts.pop() {
            self.sum -= v;
            if let Some(w) = self.candidate(v) {
                self.push(w);
                return true;
            }
        }
        false
    }
}

impl<A, C> Iterator for PartitionStream<A, C>
where
    A: Fn(u32) -> bool,
    C: Fn(u32) -> Option<usize>,
{
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.exhausted {
            return None;
        }
        if self.started && !self.backtrack() {
            self.exhausted = true;
            return None;
        }
        self.started = true;
        loop {
            if self.descend() {
                return Some(Partition::from_sorted_unchecked(self.parts.clone()));
            }
            if !self.backtrack() {
                self.exhausted = true;
                return None;
            }
        }
    }
}

/// Every partition of `n`.
pub fn enumerate_partitions(n: u32) -> impl Iterator<Item = Partition> {
    PartitionStream::new(n, |_| true, |_| None)
}

/// Partitions of `n` into distinct parts.
pub fn enumerate_distinct(n: u32) -> impl Iterator<Item = Partition> {
    PartitionStream::new(n, |_| true, |_| Some(1))
}

/// Partitions of `n` in `Par(i, k; R, ρ)`.
pub fn enumerate_restricted(spec: &RestrictionSpec, n: u32) -> impl Iterator<Item = Partition> {
    let allow = spec.clone();
    let cap = spec.clone();
    PartitionStream::new(
        n,
        move |v| allow.admits(v),
        move |v| cap.bound(v).map(|b| b as usize - 1),
    )
}

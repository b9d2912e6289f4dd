use std::collections::HashSet;

use crate::error::Error;

/// Closed interval `[left, right]` with a caller-chosen id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    pub id: u64,
    pub left: i64,
    pub right: i64,
}

impl Interval {
    pub fn intersects(&self, other: &Interval) -> bool {
        self.left.max(other.left) <= self.right.min(other.right)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntervalSet {
    pub intervals: Vec<Interval>,
}

impl IntervalSet {
    pub fn new(intervals: Vec<Interval>) -> Result<Self, Error> {
        let mut ids = HashSet::new();
        for iv in &intervals {
            if iv.left > iv.right {
                return Err(Error::InvalidInput(format!(
                    "interval {} has left {} > right {}",
                    iv.id, iv.left, iv.right
                )));
            }
            if !ids.insert(iv.id) {
                return Err(Error::InvalidInput(format!(
                    "duplicate interval id {}",
                    iv.id
                )));
            }
        }
        Ok(IntervalSet { intervals })
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }
}

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn closed() -> bool {
    true
}

/// A real interval. Missing bounds are infinite (and then always open).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    #[serde(default)]
    pub lo: Option<f64>,
    #[serde(default)]
    pub hi: Option<f64>,
    #[serde(default = "closed")]
    pub lo_closed: bool,
    #[serde(default = "closed")]
    pub hi_closed: bool,
}

impl Interval {
    pub fn closed(lo: f64, hi: f64) -> Self {
        Interval {
            lo: Some(lo),
            hi: Some(hi),
            lo_closed: true,
            hi_closed: true,
        }
    }

    pub fn open(lo: f64, hi: f64) -> Self {
        Interval {
            lo_closed: false,
            hi_closed: false,
            ..Self::closed(lo, hi)
        }
    }

    /// `[lo, hi)`
    pub fn half_open(lo: f64, hi: f64) -> Self {
        Interval {
            hi_closed: false,
            ..Self::closed(lo, hi)
        }
    }

    /// `(-∞, hi)`
    pub fn below(hi: f64) -> Self {
        Interval {
            lo: None,
            hi: Some(hi),
            lo_closed: false,
            hi_closed: false,
        }
    }

    /// `[lo, ∞)`
    pub fn at_least(lo: f64) -> Self {
        Interval {
            lo: Some(lo),
            hi: None,
            lo_closed: true,
            hi_closed: false,
        }
    }

    pub fn real_line() -> Self {
        Interval {
            lo: None,
            hi: None,
            lo_closed: false,
            hi_closed: false,
        }
    }

    pub fn contains(&self, x: f64) -> bool {
        let above = match self.lo {
            None => true,
            Some(lo) => x > lo || (self.lo_closed && x == lo),
        };
        let below = match self.hi {
            None => true,
            Some(hi) => x < hi || (self.hi_closed && x == hi),
        };
        above && below
    }

    pub fn is_empty(&self) -> bool {
        match (self.lo, self.hi) {
            (Some(lo), Some(hi)) => lo > hi || (lo == hi && !(self.lo_closed && self.hi_closed)),
            _ => false,
        }
    }

    fn check(&self) -> Result<()> {
        if self.lo.is_some_and(|v| !v.is_finite()) || self.hi.is_some_and(|v| !v.is_finite()) {
            return Err(Error::domain("interval bounds must be finite; omit a bound for ±∞"));
        }
        if let (Some(lo), Some(hi)) = (self.lo, self.hi) {
            if lo > hi {
                return Err(Error::domain(format!("interval has lo {lo} > hi {hi}")));
            }
        }
        Ok(())
    }

    fn cmp_lo(&self, other: &Interval) -> Ordering {
        match (self.lo, other.lo) {
            (None, None) => Ordering::Equal,
            (None, _) => Ordering::Less,
            (_, None) => Ordering::Greater,
            (Some(a), Some(b)) => a
                .total_cmp(&b)
                .then_with(|| other.lo_closed.cmp(&self.lo_closed)),
        }
    }

    /// Whether `self`, starting no later than `next`, shares a point with it.
    fn meets(&self, next: &Interval) -> bool {
        match (self.hi, next.lo) {
            (None, _) | (_, None) => true,
            (Some(h), Some(l)) => h > l || (h == l && self.hi_closed && next.lo_closed),
        }
    }
}

/// A finite union of pairwise-disjoint intervals, kept sorted.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Borelian {
    intervals: Vec<Interval>,
}

impl Borelian {
    /// Empty intervals are dropped; overlapping ones are an error.
    pub fn new(intervals: Vec<Interval>) -> Result<Self> {
        for i in &intervals {
            i.check()?;
        }
        let mut intervals: Vec<Interval> = intervals.into_iter().filter(|i| !i.is_empty()).collect();
        intervals.sort_by(|a, b| a.cmp_lo(b));
        if intervals.windows(2).any(|w| w[0].meets(&w[1])) {
            return Err(Error::domain("Borelian intervals overlap"));
        }
        Ok(Borelian { intervals })
    }

    pub fn empty() -> Self {
        Borelian::default()
    }

    pub fn real_line() -> Self {
        Borelian {
            intervals: vec![Interval::real_line()],
        }
    }

    pub fn interval(i: Interval) -> Result<Self> {
        Self::new(vec![i])
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn contains(&self, x: f64) -> bool {
        self.intervals.iter().any(|i| i.contains(x))
    }

    /// Union of two disjoint Borelians.
    pub fn disjoint_union(&self, other: &Borelian) -> Result<Borelian> {
        let mut all = self.intervals.clone();
        all.extend_from_slice(&other.intervals);
        Self::new(all)
    }
}

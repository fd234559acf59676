//! Indexed families of closed intervals with exact endpoints.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Role {
    OrderRepresentation,
    PermutationRepresentation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub l: Rational,
    pub r: Rational,
}

impl Interval {
    pub fn new(l: Rational, r: Rational) -> Self {
        Interval { l, r }
    }

    pub fn length(&self) -> Rational {
        &self.r - &self.l
    }

    /// `self` lies entirely left of `other`.
    pub fn precedes(&self, other: &Interval) -> bool {
        self.r < other.l
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        !self.precedes(other) && !other.precedes(self)
    }

    /// Proper containment: `self ⊊ other`.
    pub fn strictly_inside(&self, other: &Interval) -> bool {
        other.l <= self.l && self.r <= other.r && self != other
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", rational::format(&self.l), rational::format(&self.r))
    }
}

/// Element `i` (0-based) owns `intervals[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalFamily {
    role: Role,
    intervals: Vec<Interval>,
}

impl IntervalFamily {
    pub fn new(role: Role, intervals: Vec<Interval>) -> Result<Self> {
        if let Some(i) = intervals.iter().position(|iv| iv.l > iv.r) {
            return Err(Error::Parse(format!(
                "interval of element {} has l > r: {}",
                i + 1,
                intervals[i]
            )));
        }
        Ok(IntervalFamily { role, intervals })
    }

    pub fn from_pairs(role: Role, pairs: impl IntoIterator<Item = (Rational, Rational)>) -> Result<Self> {
        Self::new(role, pairs.into_iter().map(|(l, r)| Interval::new(l, r)).collect())
    }

    pub fn from_integers(role: Role, pairs: &[(i64, i64)]) -> Result<Self> {
        Self::from_pairs(
            role,
            pairs.iter().map(|&(l, r)| (rational::int(l), rational::int(r))),
        )
    }

    pub fn role(&self) -> Role {
        self.role
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn get(&self, elem: usize) -> &Interval {
        &self.intervals[elem]
    }

    pub fn lengths(&self) -> impl Iterator<Item = Rational> + '_ {
        self.intervals.iter().map(Interval::length)
    }

    /// Deduplicated interval lengths in increasing order.
    pub fn distinct_lengths(&self) -> Vec<Rational> {
        self.lengths().collect::<BTreeSet<_>>().into_iter().collect()
    }

    pub fn all_integral(&self) -> bool {
        self.intervals
            .iter()
            .all(|iv| rational::is_integer(&iv.l) && rational::is_integer(&iv.r))
    }

    /// Multiplies every endpoint by the lcm of all denominators.
    pub fn scaled_to_integers(&self) -> IntervalFamily {
        let scale = Rational::from_integer(rational::lcm_of_denominators(
            self.intervals.iter().flat_map(|iv| [&iv.l, &iv.r]),
        ));
        IntervalFamily {
            role: self.role,
            intervals: self
                .intervals
                .iter()
                .map(|iv| Interval::new(&iv.l * &scale, &iv.r * &scale))
                .collect(),
        }
    }

    pub fn with_role(mut self, role: Role) -> Self {
        self.role = role;
        self
    }
}

/// Outcome of checking a family against an order or a permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Ok,
    /// 1-based element ids and a short description of what failed.
    Violation { x: usize, y: usize, reason: String },
}

impl Verdict {
    pub fn is_ok(&self) -> bool {
        matches!(self, Verdict::Ok)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn distinct_lengths_sorted_dedup() {
        let f = IntervalFamily::from_integers(
            Role::OrderRepresentation,
            &[(0, 3), (1, 2), (5, 8), (2, 2)],
        )
        .unwrap();
        assert_eq!(f.distinct_lengths(), vec![int(0), int(1), int(3)]);
    }

    #[test]
    fn rejects_reversed_interval() {
        assert!(IntervalFamily::from_integers(Role::OrderRepresentation, &[(2, 1)]).is_err());
    }

    #[test]
    fn scaling_clears_denominators() {
        let f = IntervalFamily::from_pairs(
            Role::OrderRepresentation,
            [(frac(1, 2), frac(2, 3)), (int(1), frac(7, 4))],
        )
        .unwrap();
        let g = f.scaled_to_integers();
        assert!(g.all_integral());
        assert_eq!(g.get(0).l, int(6));
        assert_eq!(g.get(1).r, int(21));
    }
}

use std::collections::BTreeSet;

use super::poset::{IntervalOrder, Poset};
use crate::error::{Error, Result};
use crate::family::{Interval, IntervalFamily, Role, Verdict};
use crate::rational;

/// The representation on endpoints `0..m`, `m` minimal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalRepresentation {
    m: usize,
    intervals: Vec<(usize, usize)>,
}

impl CanonicalRepresentation {
    /// Checks the coverage and singleton invariants; does not check which
    /// order the intervals represent.
    pub fn from_intervals(m: usize, intervals: Vec<(usize, usize)>) -> Result<Self> {
        let bad = |s: String| Err(Error::Parse(format!("not canonical: {s}")));
        if m == 0 || intervals.is_empty() {
            return bad("empty".into());
        }
        let mut lefts = vec![false; m];
        let mut rights = vec![false; m];
        for &(l, r) in &intervals {
            if l > r || r >= m {
                return bad(format!("[{l},{r}] with m={m}"));
            }
            lefts[l] = true;
            rights[r] = true;
        }
        if let Some(i) = (0..m).find(|&i| !lefts[i] || !rights[i]) {
            return bad(format!("line {i} is missing an endpoint"));
        }
        if !intervals.contains(&(0, 0)) || !intervals.contains(&(m - 1, m - 1)) {
            return bad("missing extremal singleton".into());
        }
        Ok(CanonicalRepresentation { m, intervals })
    }

    pub fn magnitude(&self) -> usize {
        self.m
    }

    pub fn intervals(&self) -> &[(usize, usize)] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn sorted_intervals(&self) -> Vec<(usize, usize)> {
        let mut v = self.intervals.clone();
        v.sort_unstable();
        v
    }

    pub fn to_family(&self) -> IntervalFamily {
        let pairs: Vec<(i64, i64)> = self
            .intervals
            .iter()
            .map(|&(l, r)| (l as i64, r as i64))
            .collect();
        IntervalFamily::from_integers(Role::OrderRepresentation, &pairs)
            .expect("canonical intervals are well formed")
    }
}

/// Ranks down-set sizes and up-set sizes; in an interval order both families
/// of sets are chains, so sizes identify the sets.
pub fn canonical_representation(order: &IntervalOrder) -> CanonicalRepresentation {
    let n = order.len();
    let down: Vec<usize> = (0..n).map(|x| order.down_set(x).count()).collect();
    let up: Vec<usize> = (0..n).map(|x| order.up_set(x).count()).collect();
    let down_sizes: Vec<usize> = down.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let up_sizes: Vec<usize> = up.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    debug_assert_eq!(down_sizes.len(), up_sizes.len());
    let m = down_sizes.len();
    let intervals = (0..n)
        .map(|x| {
            let l = down_sizes.binary_search(&down[x]).unwrap();
            let r = m - 1 - up_sizes.binary_search(&up[x]).unwrap();
            (l, r)
        })
        .collect();
    CanonicalRepresentation { m, intervals }
}

pub fn magnitude(order: &IntervalOrder) -> usize {
    canonical_representation(order).magnitude()
}

/// `x ≺ y ⇔ r_x < l_y` for all ordered pairs, reported 1-based.
pub fn verify_order_representation(order: &Poset, family: &IntervalFamily) -> Result<Verdict> {
    let n = order.len();
    if family.len() != n {
        return Err(Error::IndexMismatch { expected: n, found: family.len() });
    }
    let iv: &[Interval] = family.intervals();
    for x in 0..n {
        for y in 0..n {
            if x == y {
                continue;
            }
            let rel = order.lt(x, y);
            let geo = iv[x].r < iv[y].l;
            if rel != geo {
                let reason = if rel {
                    format!(
                        "{} ≺ {} but r={} is not left of l={}",
                        x + 1,
                        y + 1,
                        rational::format(&iv[x].r),
                        rational::format(&iv[y].l)
                    )
                } else {
                    format!("{} ⊀ {} but interval {} lies left of {}", x + 1, y + 1, iv[x], iv[y])
                };
                return Ok(Verdict::Violation { x: x + 1, y: y + 1, reason });
            }
        }
    }
    Ok(Verdict::Ok)
}

#[cfg(test)]
mod tests {
    use super::super::ascent::{order_from_ascent, AscentSequence};
    use super::*;

    fn canon(s: &str) -> CanonicalRepresentation {
        canonical_representation(&order_from_ascent(&AscentSequence::parse(s).unwrap()))
    }

    #[test]
    fn twelve_element_multiset() {
        let c = canon("0,1,0,1,2,1,0,2,0,2,0,3");
        assert_eq!(c.magnitude(), 7);
        let mut want = vec![
            (0, 0), (0, 1), (0, 2), (0, 3), (0, 4), (1, 4),
            (1, 5), (2, 3), (3, 6), (4, 6), (5, 6), (6, 6),
        ];
        want.sort();
        assert_eq!(c.sorted_intervals(), want);
    }

    #[test]
    fn singleton() {
        let c = canon("0");
        assert_eq!((c.magnitude(), c.intervals()), (1, &[(0, 0)][..]));
    }

    #[test]
    fn chain_magnitude() {
        assert_eq!(magnitude(&IntervalOrder::new(Poset::chain(4)).unwrap()), 4);
    }

    #[test]
    fn overlapping_chain_rejected() {
        let p = Poset::chain(2);
        let f = IntervalFamily::from_integers(Role::OrderRepresentation, &[(0, 2), (1, 3)]).unwrap();
        assert!(!verify_order_representation(&p, &f).unwrap().is_ok());
        let short = IntervalFamily::from_integers(Role::OrderRepresentation, &[(0, 2)]).unwrap();
        assert!(verify_order_representation(&p, &short).is_err());
    }
}

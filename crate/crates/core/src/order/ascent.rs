use std::fmt;
use std::str::FromStr;

use super::canonical::{canonical_representation, CanonicalRepresentation};
use super::poset::{IntervalOrder, Poset};
use crate::error::{Error, Result};

/// An ascent sequence: `x[0] = 0`, `x[i] <= asc(x[..i]) + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AscentSequence(Vec<usize>);

/// Number of strict ascents in `xs`.
pub fn asc(xs: &[usize]) -> usize {
    xs.windows(2).filter(|w| w[1] > w[0]).count()
}

impl AscentSequence {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyInput);
        }
        if entries[0] != 0 {
            return Err(Error::FirstEntryNonzero);
        }
        let mut ascents = 0;
        for i in 1..entries.len() {
            if entries[i] > ascents + 1 {
                return Err(Error::AscentBoundViolated(i));
            }
            if entries[i] > entries[i - 1] {
                ascents += 1;
            }
        }
        Ok(AscentSequence(entries))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::EmptyInput);
        }
        let entries = text
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<usize>()
                    .map_err(|_| Error::NotAnInteger(tok.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn asc(&self) -> usize {
        asc(&self.0)
    }
}

impl fmt::Display for AscentSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for AscentSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// Canonical intervals of the order encoded by `seq`, element `i` at
/// position `i`. Returns `(m, intervals)`.
///
/// Each step adds a new maximal element `[v, m-1]`. On an ascent the line
/// `v` is split first: left endpoints at or above `v` move up, and the old
/// maximal elements that start below `v` stop at `v`, so they end up below
/// exactly the elements starting after `v`.
pub(crate) fn ascent_intervals(seq: &AscentSequence) -> (usize, Vec<(usize, usize)>) {
    let xs = seq.entries();
    let mut iv = Vec::with_capacity(xs.len());
    iv.push((0usize, 0usize));
    let mut m = 1usize;
    for i in 1..xs.len() {
        let v = xs[i];
        if v > xs[i - 1] {
            for (l, r) in iv.iter_mut() {
                let nl = if *l >= v { *l + 1 } else { *l };
                let nr = if *r < v {
                    *r
                } else if *r == m - 1 && *l < v {
                    v
                } else {
                    *r + 1
                };
                *l = nl;
                *r = nr;
            }
            m += 1;
        }
        iv.push((v, m - 1));
    }
    (m, iv)
}

pub fn order_from_ascent(seq: &AscentSequence) -> IntervalOrder {
    let (_, iv) = ascent_intervals(seq);
    let n = iv.len();
    let mut below = vec![false; n * n];
    for x in 0..n {
        for y in 0..n {
            below[x * n + y] = iv[x].1 < iv[y].0;
        }
    }
    IntervalOrder::new_unchecked(Poset::from_matrix_unchecked(n, below))
}

/// Reads the sequence back off canonical intervals by undoing the steps of
/// [`ascent_intervals`] from the last element.
fn ascent_from_canonical(canon: &CanonicalRepresentation) -> Result<AscentSequence> {
    let mut iv: Vec<(usize, usize)> = canon.intervals().to_vec();
    let mut m = canon.magnitude();
    let mut rev = Vec::with_capacity(iv.len());
    while !iv.is_empty() {
        // last element: the maximal one starting lowest
        let (pos, &(v, _)) = iv
            .iter()
            .enumerate()
            .filter(|(_, &(_, r))| r + 1 == m)
            .min_by_key(|(_, &(l, _))| l)
            .ok_or_else(|| Error::Internal("no maximal interval".into()))?;
        iv.swap_remove(pos);
        rev.push(v);
        if iv.is_empty() || iv.iter().any(|&(l, _)| l == v) {
            continue;
        }
        for (l, r) in iv.iter_mut() {
            if *r == v {
                *r = m - 1;
            }
            if *l > v {
                *l -= 1;
            }
            if *r > v {
                *r -= 1;
            }
        }
        m -= 1;
    }
    rev.reverse();
    AscentSequence::new(rev).map_err(|e| Error::Internal(format!("inverse bijection: {e}")))
}

/// Inverse of [`order_from_ascent`], up to relabelling of the elements.
pub fn ascent_of_order(order: &Poset) -> Result<AscentSequence> {
    let order = IntervalOrder::new(order.clone())?;
    let canon = canonical_representation(&order);
    let seq = ascent_from_canonical(&canon)?;
    let back = canonical_representation(&order_from_ascent(&seq));
    if back.sorted_intervals() != canon.sorted_intervals() {
        return Err(Error::Internal(format!("ascent sequence {seq} does not round-trip")));
    }
    Ok(seq)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> AscentSequence {
        AscentSequence::parse(s).unwrap()
    }

    #[test]
    fn parse_errors() {
        assert_eq!(AscentSequence::parse("0,2"), Err(Error::AscentBoundViolated(1)));
        assert_eq!(AscentSequence::parse("1"), Err(Error::FirstEntryNonzero));
        assert_eq!(AscentSequence::parse(""), Err(Error::EmptyInput));
        assert!(matches!(AscentSequence::parse("0,x"), Err(Error::NotAnInteger(_))));
        assert_eq!(seq("0,1,2,0,3,2,3,0,2,4,2").len(), 11);
        assert_eq!(seq(" 0 ").to_string(), "0");
    }

    #[test]
    fn two_elements() {
        let anti = order_from_ascent(&seq("0,0"));
        assert!(!anti.comparable(0, 1));
        let chain = order_from_ascent(&seq("0,1"));
        assert!(chain.lt(0, 1));
    }

    // Known labelled intervals for this eleven-element order.
    #[test]
    fn eleven_element_positions() {
        let (m, iv) = ascent_intervals(&seq("0,1,2,0,3,2,3,0,2,4,2"));
        assert_eq!(m, 7);
        assert_eq!(
            iv,
            vec![
                (0, 0),
                (1, 1),
                (3, 3),
                (0, 3),
                (6, 6),
                (3, 5),
                (5, 6),
                (0, 2),
                (2, 4),
                (4, 6),
                (2, 6)
            ]
        );
    }

    #[test]
    fn inverse_simple() {
        for s in ["0", "0,0", "0,1", "0,1,0,1,2,1,0,2,0,2,0,3", "0,1,2,0,3,2,3,0,2,4,2"] {
            let o = order_from_ascent(&seq(s));
            assert_eq!(ascent_of_order(&o).unwrap().to_string(), s);
        }
    }

    #[test]
    fn inverse_rejects_two_plus_two() {
        let p = Poset::from_relation(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(ascent_of_order(&p), Err(Error::NotAnIntervalOrder { .. })));
    }
}

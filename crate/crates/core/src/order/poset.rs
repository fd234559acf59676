use std::ops::Deref;

use crate::error::{Error, Result};

/// A finite strict partial order on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    // below[x * n + y] <=> x ≺ y
    below: Vec<bool>,
    labels: Option<Vec<String>>,
}

impl Poset {
    /// Builds the transitive closure of `pairs` (0-based `(x, y)` meaning
    /// `x ≺ y`). Fails on a cycle or a reflexive pair.
    pub fn from_relation(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut below = vec![false; n * n];
        for &(x, y) in pairs {
            if x >= n || y >= n {
                return Err(Error::NotAPartialOrder(format!(
                    "pair ({}, {}) out of range for n={n}",
                    x + 1,
                    y + 1
                )));
            }
            below[x * n + y] = true;
        }
        // Warshall
        for k in 0..n {
            for i in 0..n {
                if below[i * n + k] {
                    for j in 0..n {
                        if below[k * n + j] {
                            below[i * n + j] = true;
                        }
                    }
                }
            }
        }
        if let Some(x) = (0..n).find(|&x| below[x * n + x]) {
            return Err(Error::NotAPartialOrder(format!(
                "element {} lies on a cycle",
                x + 1
            )));
        }
        Ok(Poset { n, below, labels: None })
    }

    /// Takes an already transitive, irreflexive relation matrix.
    pub fn from_matrix(n: usize, below: Vec<bool>) -> Result<Self> {
        if below.len() != n * n {
            return Err(Error::NotAPartialOrder("matrix size mismatch".into()));
        }
        let p = Poset { n, below, labels: None };
        for x in 0..n {
            if p.lt(x, x) {
                return Err(Error::NotAPartialOrder(format!("{} ≺ {}", x + 1, x + 1)));
            }
            for y in 0..n {
                if !p.lt(x, y) {
                    continue;
                }
                if p.lt(y, x) {
                    return Err(Error::NotAPartialOrder(format!("cycle {} {}", x + 1, y + 1)));
                }
                for z in 0..n {
                    if p.lt(y, z) && !p.lt(x, z) {
                        return Err(Error::NotAPartialOrder(format!(
                            "not transitive at {}, {}, {}",
                            x + 1,
                            y + 1,
                            z + 1
                        )));
                    }
                }
            }
        }
        Ok(p)
    }

    pub(crate) fn from_matrix_unchecked(n: usize, below: Vec<bool>) -> Self {
        debug_assert_eq!(below.len(), n * n);
        Poset { n, below, labels: None }
    }

    pub fn antichain(n: usize) -> Self {
        Poset { n, below: vec![false; n * n], labels: None }
    }

    pub fn chain(n: usize) -> Self {
        let mut below = vec![false; n * n];
        for x in 0..n {
            for y in x + 1..n {
                below[x * n + y] = true;
            }
        }
        Poset { n, below, labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.below[x * self.n + y]
    }

    #[inline]
    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.lt(x, y) || self.lt(y, x)
    }

    #[inline]
    pub fn incomparable(&self, x: usize, y: usize) -> bool {
        x != y && !self.comparable(x, y)
    }

    /// All pairs `(x, y)` with `x ≺ y`, 0-based, lexicographic.
    pub fn relation_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in 0..self.n {
                if self.lt(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Covering pairs of the Hasse diagram.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.relation_pairs()
            .into_iter()
            .filter(|&(x, y)| !(0..self.n).any(|z| self.lt(x, z) && self.lt(z, y)))
            .collect()
    }

    pub fn down_set(&self, y: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&x| self.lt(x, y))
    }

    pub fn up_set(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&y| self.lt(x, y))
    }

    pub fn is_maximal(&self, x: usize) -> bool {
        self.up_set(x).next().is_none()
    }

    pub fn dual(&self) -> Poset {
        let n = self.n;
        let mut below = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                below[x * n + y] = self.lt(y, x);
            }
        }
        Poset { n, below, labels: self.labels.clone() }
    }

    /// Induced subposet on `elems`, relabelled `0..elems.len()` in the given order.
    pub fn induced(&self, elems: &[usize]) -> Poset {
        let k = elems.len();
        let mut below = vec![false; k * k];
        for (i, &x) in elems.iter().enumerate() {
            for (j, &y) in elems.iter().enumerate() {
                below[i * k + j] = self.lt(x, y);
            }
        }
        Poset { n: k, below, labels: None }
    }

    /// Some `a ≺ b`, `c ≺ d` with each of `a, b` incomparable to each of `c, d`.
    /// Quartet enumeration, O(n⁴).
    pub fn find_two_plus_two(&self) -> Option<(usize, usize, usize, usize)> {
        let pairs = self.relation_pairs();
        for (i, &(a, b)) in pairs.iter().enumerate() {
            for &(c, d) in &pairs[i + 1..] {
                if self.incomparable(a, c)
                    && self.incomparable(a, d)
                    && self.incomparable(b, c)
                    && self.incomparable(b, d)
                {
                    return Some((a, b, c, d));
                }
            }
        }
        None
    }
}

/// A poset verified to be 2+2-free.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntervalOrder(Poset);

impl IntervalOrder {
    pub fn new(poset: Poset) -> Result<Self> {
        match poset.find_two_plus_two() {
            Some((a, b, c, d)) => Err(Error::NotAnIntervalOrder {
                a: a + 1,
                b: b + 1,
                c: c + 1,
                d: d + 1,
            }),
            None => Ok(IntervalOrder(poset)),
        }
    }

    pub(crate) fn new_unchecked(poset: Poset) -> Self {
        debug_assert!(poset.find_two_plus_two().is_none());
        IntervalOrder(poset)
    }

    pub fn poset(&self) -> &Poset {
        &self.0
    }

    pub fn into_poset(self) -> Poset {
        self.0
    }

    pub fn dual(&self) -> IntervalOrder {
        IntervalOrder(self.0.dual())
    }

    pub fn induced(&self, elems: &[usize]) -> IntervalOrder {
        IntervalOrder(self.0.induced(elems))
    }
}

impl Deref for IntervalOrder {
    type Target = Poset;

    fn deref(&self) -> &Poset {
        &self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_and_cycle() {
        let p = Poset::from_relation(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(p.lt(0, 2));
        assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
        assert!(Poset::from_relation(2, &[(0, 1), (1, 0)]).is_err());
        assert!(Poset::from_relation(1, &[(0, 0)]).is_err());
    }

    #[test]
    fn two_plus_two_rejected() {
        let p = Poset::from_relation(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(p.find_two_plus_two().is_some());
        assert!(matches!(
            IntervalOrder::new(p),
            Err(Error::NotAnIntervalOrder { .. })
        ));
        let q = Poset::from_relation(4, &[(0, 1), (2, 3), (0, 3)]).unwrap();
        assert!(IntervalOrder::new(q).is_ok());
    }

    #[test]
    fn from_matrix_checks_transitivity() {
        let mut m = vec![false; 9];
        m[1] = true; // 0 < 1
        m[5] = true; // 1 < 2
        assert!(Poset::from_matrix(3, m.clone()).is_err());
        m[2] = true;
        assert!(Poset::from_matrix(3, m).is_ok());
    }
}

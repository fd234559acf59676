//! Permutations, their interval representations and sorted colorings.
//!
//! A representation of `π` is a family `I_1..I_n` with
//! `ℓ_{π(1)} < … < ℓ_{π(n)} < r_1 < … < r_n`. Value `x` nests inside value `y`
//! in every such family exactly when `x < y` and `y` comes first in `π`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{IntervalFamily, Role, Verdict};
use crate::rational::{self, Rational};

/// One-line notation, values `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<usize>,
    pos: Vec<usize>,
}

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::EmptyInput);
        }
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in values.iter().enumerate() {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!("value {v} out of range 1..={n}")));
            }
            if pos[v - 1] != usize::MAX {
                return Err(Error::InvalidPermutation(format!("value {v} repeated")));
            }
            pos[v - 1] = i;
        }
        Ok(Permutation { values, pos })
    }

    pub fn identity(n: usize) -> Self {
        Permutation::new((1..=n).collect()).unwrap()
    }

    /// Accepts `"[4,2,5]"`, with or without brackets.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let t = t.strip_prefix('[').unwrap_or(t);
        let t = t.strip_suffix(']').unwrap_or(t).trim();
        if t.is_empty() {
            return Err(Error::EmptyInput);
        }
        let values = t
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<usize>().map_err(|_| Error::NotAnInteger(tok.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(values)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `π(i)` for 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    /// 1-based position of value `v`.
    pub fn position(&self, v: usize) -> usize {
        self.pos[v - 1] + 1
    }

    /// `x` nests inside `y`.
    pub fn nests(&self, x: usize, y: usize) -> bool {
        x < y && self.pos[y - 1] < self.pos[x - 1]
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::parse(s)
    }
}

/// Longest decreasing subsequence, patience sorting on negated values.
pub fn perm_depth(pi: &Permutation) -> usize {
    let mut piles: Vec<usize> = Vec::new();
    for &v in pi.values() {
        // piles hold the smallest possible tail of a decreasing run, stored
        // as n - v so the tails increase
        let key = pi.len() - v;
        let at = piles.partition_point(|&t| t < key);
        if at == piles.len() {
            piles.push(key);
        } else {
            piles[at] = key;
        }
    }
    piles.len()
}

/// `(inner, outer)` value pairs.
pub fn nesting_pairs(pi: &Permutation) -> BTreeSet<(usize, usize)> {
    let n = pi.len();
    let mut out = BTreeSet::new();
    for x in 1..=n {
        for y in x + 1..=n {
            if pi.nests(x, y) {
                out.insert((x, y));
            }
        }
    }
    out
}

/// Partition of the values `1..=n` into classes `T_1..T_k`, lower index
/// meaning shorter.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SortedColoring {
    classes: Vec<Vec<usize>>,
}

impl SortedColoring {
    /// `classes[i]` lists values (1-based) in class `i + 1`. Every value must
    /// appear exactly once; classes may be empty.
    pub fn new(classes: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = classes.iter().map(Vec::len).sum();
        let mut seen = vec![false; n];
        for &v in classes.iter().flatten() {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidColoring(format!("value {v} out of range or repeated")));
            }
            seen[v - 1] = true;
        }
        let mut classes = classes;
        for c in &mut classes {
            c.sort_unstable();
        }
        Ok(SortedColoring { classes })
    }

    /// `map[v - 1]` is the 0-based class of value `v`.
    pub fn from_class_map(map: &[usize], k: usize) -> Result<Self> {
        let mut classes = vec![Vec::new(); k];
        for (i, &c) in map.iter().enumerate() {
            if c >= k {
                return Err(Error::InvalidColoring(format!("class {} >= k={k}", c + 1)));
            }
            classes[c].push(i + 1);
        }
        Ok(SortedColoring { classes })
    }

    pub fn k(&self) -> usize {
        self.classes.len()
    }

    pub fn n(&self) -> usize {
        self.classes.iter().map(Vec::len).sum()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// 0-based class index of each value, indexed by `v - 1`.
    pub fn class_map(&self) -> Vec<usize> {
        let mut map = vec![0; self.n()];
        for (c, vs) in self.classes.iter().enumerate() {
            for &v in vs {
                map[v - 1] = c;
            }
        }
        map
    }

    pub fn nonempty_classes(&self) -> usize {
        self.classes.iter().filter(|c| !c.is_empty()).count()
    }

    /// Every nesting goes from a lower class to a strictly higher one.
    pub fn check_sorted(&self, pi: &Permutation) -> Result<()> {
        if self.n() != pi.len() {
            return Err(Error::IndexMismatch { expected: pi.len(), found: self.n() });
        }
        let map = self.class_map();
        for (x, y) in nesting_pairs(pi) {
            if map[x - 1] >= map[y - 1] {
                return Err(Error::NotSorted { inner: x, outer: y });
            }
        }
        Ok(())
    }
}

pub fn mirsky_sorted_coloring(pi: &Permutation) -> SortedColoring {
    let n = pi.len();
    let vals = pi.values();
    // level[i]: longest decreasing run starting at position i
    let mut level = vec![1usize; n];
    for i in (0..n).rev() {
        for j in i + 1..n {
            if vals[j] < vals[i] {
                level[i] = level[i].max(level[j] + 1);
            }
        }
    }
    let k = level.iter().copied().max().unwrap_or(0);
    let mut map = vec![0; n];
    for i in 0..n {
        map[vals[i] - 1] = level[i] - 1;
    }
    SortedColoring::from_class_map(&map, k).unwrap()
}

/// Sorted colorings into exactly `k` non-empty classes, lexicographic in
/// `(c(1), …, c(n))`.
pub struct SortedColorings<'a> {
    pi: &'a Permutation,
    k: usize,
    c: Vec<usize>,
    i: usize,
    fresh: bool,
}

pub fn enumerate_sorted_colorings(pi: &Permutation, k: usize) -> SortedColorings<'_> {
    SortedColorings { pi, k, c: vec![0; pi.len()], i: 0, fresh: true }
}

impl SortedColorings<'_> {
    fn fits(&self, i: usize, col: usize) -> bool {
        let x = i + 1;
        // x is the largest value so far, so it can only be an outer element
        if (1..x).any(|w| self.pi.nests(w, x) && self.c[w - 1] >= col) {
            return false;
        }
        let mut used = vec![false; self.k];
        for &d in &self.c[..i] {
            used[d] = true;
        }
        used[col] = true;
        let missing = used.iter().filter(|u| !**u).count();
        missing <= self.pi.len() - 1 - i
    }

    fn advance(&mut self) -> bool {
        let n = self.pi.len();
        if self.k == 0 {
            return false;
        }
        if self.fresh {
            self.fresh = false;
            self.i = 0;
            self.c[0] = 0;
        } else {
            self.i = n - 1;
            self.c[self.i] += 1;
        }
        loop {
            if self.c[self.i] >= self.k {
                if self.i == 0 {
                    return false;
                }
                self.i -= 1;
                self.c[self.i] += 1;
                continue;
            }
            if self.fits(self.i, self.c[self.i]) {
                if self.i + 1 == n {
                    return true;
                }
                self.i += 1;
                self.c[self.i] = 0;
            } else {
                self.c[self.i] += 1;
            }
        }
    }
}

impl Iterator for SortedColorings<'_> {
    type Item = SortedColoring;

    fn next(&mut self) -> Option<SortedColoring> {
        if self.advance() {
            Some(SortedColoring::from_class_map(&self.c, self.k).unwrap())
        } else {
            // exhausted; park the iterator
            self.c = Vec::new();
            self.k = 0;
            None
        }
    }
}

/// `ℓ_{π(i)} = i − n − 1`, `r_j = j`.
pub fn initial_representation(pi: &Permutation) -> IntervalFamily {
    let n = pi.len() as i64;
    let pairs: Vec<(i64, i64)> = (1..=pi.len())
        .map(|v| (pi.position(v) as i64 - n - 1, v as i64))
        .collect();
    IntervalFamily::from_integers(Role::PermutationRepresentation, &pairs).unwrap()
}

pub fn verify_perm_representation(pi: &Permutation, family: &IntervalFamily) -> Result<Verdict> {
    let n = pi.len();
    if family.len() != n {
        return Err(Error::IndexMismatch { expected: n, found: family.len() });
    }
    let l = |v: usize| &family.get(v - 1).l;
    let r = |v: usize| &family.get(v - 1).r;
    for i in 1..n {
        let (x, y) = (pi.at(i), pi.at(i + 1));
        if l(x) >= l(y) {
            return Ok(Verdict::Violation {
                x,
                y,
                reason: format!(
                    "left endpoints out of order: {} >= {}",
                    rational::format(l(x)),
                    rational::format(l(y))
                ),
            });
        }
    }
    let last = pi.at(n);
    if l(last) >= r(1) {
        return Ok(Verdict::Violation {
            x: last,
            y: 1,
            reason: "last left endpoint is not below the first right endpoint".into(),
        });
    }
    for j in 1..n {
        if r(j) >= r(j + 1) {
            return Ok(Verdict::Violation {
                x: j,
                y: j + 1,
                reason: "right endpoints out of order".into(),
            });
        }
    }
    Ok(Verdict::Ok)
}

pub fn distinct_lengths(family: &IntervalFamily) -> Vec<Rational> {
    family.distinct_lengths()
}

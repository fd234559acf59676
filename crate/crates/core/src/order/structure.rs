use std::collections::{BTreeMap, BTreeSet};

use super::poset::{IntervalOrder, Poset};
use crate::error::{Error, Result};
use crate::family::IntervalFamily;

/// Longest chain ending at each element, indexed by element.
fn chain_heights(p: &Poset, allowed: &[bool]) -> Vec<usize> {
    let n = p.len();
    // down-set size is a linear extension key for a transitively closed relation
    let mut idx: Vec<usize> = (0..n).filter(|&x| allowed[x]).collect();
    idx.sort_by_key(|&x| p.down_set(x).count());
    let mut h = vec![0usize; n];
    for &y in &idx {
        h[y] = 1 + idx
            .iter()
            .filter(|&&x| p.lt(x, y))
            .map(|&x| h[x])
            .max()
            .unwrap_or(0);
    }
    h
}

pub fn height(p: &Poset) -> usize {
    chain_heights(p, &vec![true; p.len()]).into_iter().max().unwrap_or(0)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainPlusOne {
    /// Bottom to top.
    pub chain: Vec<usize>,
    pub isolated: usize,
}

/// An `r`-chain together with an element incomparable to all of it.
pub fn find_chain_plus_one(p: &Poset, r: usize) -> Option<ChainPlusOne> {
    assert!(r >= 2, "chain length must be at least 2");
    let n = p.len();
    for x in 0..n {
        let allowed: Vec<bool> = (0..n).map(|y| p.incomparable(x, y)).collect();
        let h = chain_heights(p, &allowed);
        let Some(top) = (0..n).find(|&y| allowed[y] && h[y] >= r) else {
            continue;
        };
        // walk down r-1 steps
        let mut chain = vec![top];
        let mut cur = top;
        while chain.len() < r {
            cur = (0..n)
                .find(|&z| allowed[z] && p.lt(z, cur) && h[z] + 1 == h[cur])
                .expect("height witness");
            chain.push(cur);
        }
        chain.reverse();
        return Some(ChainPlusOne { chain, isolated: x });
    }
    None
}

/// Arcs go from pith to peel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PPGraph {
    pub n: usize,
    pub arcs: BTreeSet<(usize, usize)>,
    /// One `(a, b)` with `a ≺ pith ≺ b`, both incomparable to the peel.
    pub witness: BTreeMap<(usize, usize), (usize, usize)>,
}

impl PPGraph {
    pub fn piths(&self) -> BTreeSet<usize> {
        self.arcs.iter().map(|a| a.0).collect()
    }

    pub fn peels(&self) -> BTreeSet<usize> {
        self.arcs.iter().map(|a| a.1).collect()
    }

    /// Vertex count of a longest directed path; 1 when there are no arcs.
    pub fn longest_path(&self) -> Result<usize> {
        let n = self.n;
        let mut succ = vec![Vec::new(); n];
        for &(y, x) in &self.arcs {
            succ[y].push(x);
        }
        // 0 unvisited, 1 on stack, 2 done
        let mut state = vec![0u8; n];
        let mut best = vec![1usize; n];
        fn visit(
            v: usize,
            succ: &[Vec<usize>],
            state: &mut [u8],
            best: &mut [usize],
        ) -> Result<()> {
            state[v] = 1;
            for &w in &succ[v] {
                match state[w] {
                    1 => return Err(Error::PPCycleDetected(w + 1)),
                    0 => visit(w, succ, state, best)?,
                    _ => {}
                }
                best[v] = best[v].max(best[w] + 1);
            }
            state[v] = 2;
            Ok(())
        }
        for v in 0..n {
            if state[v] == 0 {
                visit(v, &succ, &mut state, &mut best)?;
            }
        }
        Ok(best.into_iter().max().unwrap_or(0).max(1))
    }
}

pub fn pp_graph(p: &Poset) -> PPGraph {
    let n = p.len();
    let mut arcs = BTreeSet::new();
    let mut witness = BTreeMap::new();
    for x in 0..n {
        for y in 0..n {
            if !p.incomparable(x, y) {
                continue;
            }
            let a = p.down_set(y).find(|&a| p.incomparable(a, x));
            let b = p.up_set(y).find(|&b| p.incomparable(b, x));
            if let (Some(a), Some(b)) = (a, b) {
                arcs.insert((y, x));
                witness.insert((y, x), (a, b));
            }
        }
    }
    PPGraph { n, arcs, witness }
}

pub fn depth_order(order: &IntervalOrder) -> Result<usize> {
    pp_graph(order).longest_path()
}

/// Twin classes (equal up-sets and down-sets) and the order on their
/// representatives.
#[derive(Debug, Clone)]
pub struct TwinCollapse {
    pub reduced: IntervalOrder,
    /// Class `i` is represented by `classes[i][0]`, its smallest element.
    pub classes: Vec<Vec<usize>>,
    /// Original element → class index.
    pub class_of: Vec<usize>,
}

impl TwinCollapse {
    pub fn is_identity(&self) -> bool {
        self.classes.len() == self.class_of.len()
    }

    /// Gives every twin its representative's interval.
    pub fn expand(&self, family: &IntervalFamily) -> Result<IntervalFamily> {
        if family.len() != self.classes.len() {
            return Err(Error::IndexMismatch { expected: self.classes.len(), found: family.len() });
        }
        let iv = self.class_of.iter().map(|&c| family.get(c).clone()).collect();
        IntervalFamily::new(family.role(), iv)
    }
}

pub fn collapse_twins(order: &IntervalOrder) -> TwinCollapse {
    let n = order.len();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of = vec![usize::MAX; n];
    for x in 0..n {
        let found = classes.iter().position(|c| {
            let y = c[0];
            (0..n).all(|z| order.lt(z, x) == order.lt(z, y) && order.lt(x, z) == order.lt(y, z))
        });
        match found {
            Some(i) => {
                classes[i].push(x);
                class_of[x] = i;
            }
            None => {
                class_of[x] = classes.len();
                classes.push(vec![x]);
            }
        }
    }
    let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    TwinCollapse { reduced: order.induced(&reps), classes, class_of }
}

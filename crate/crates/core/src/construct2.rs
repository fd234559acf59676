//! 2-count representations of depth-2 permutations.
//!
//! Pipeline: initial representation → sorted 2-coloring → slack intervals →
//! equalize the maximal slacks → widen ST slacks by ε → read off α, β.
//! Short class `S = T_1`, long class `T = T_2`.

use std::fmt;

use crate::error::{Error, Result};
use crate::family::{Interval, IntervalFamily, Role};
use crate::lp::{lp_feasible_strict, Feasibility, LinearSystem, Rel};
use crate::perm::{
    initial_representation, mirsky_sorted_coloring, perm_depth, verify_perm_representation,
    Permutation, SortedColoring,
};
use crate::rational::{self, int, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SlackKind {
    TS,
    ST,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlackInterval {
    pub kind: SlackKind,
    pub left: Rational,
    pub right: Rational,
    /// Adjacent pair in left-endpoint order, values.
    pub pair: (usize, usize),
}

impl SlackInterval {
    pub fn value(&self) -> Rational {
        &self.right - &self.left
    }

    fn strictly_inside(&self, o: &SlackInterval) -> bool {
        o.left <= self.left && self.right <= o.right && (o.left < self.left || self.right < o.right)
    }

    fn touches(&self, o: &SlackInterval) -> bool {
        self.left == o.left || self.right == o.right || self.left == o.right || self.right == o.left
    }
}

impl fmt::Display for SlackInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?}[{}, {}] from ({}, {})",
            self.kind,
            rational::format(&self.left),
            rational::format(&self.right),
            self.pair.0,
            self.pair.1
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SlackFamily {
    pub all: Vec<SlackInterval>,
    pub max_ts: Option<Rational>,
    pub min_st: Option<Rational>,
}

impl SlackFamily {
    fn from_list(all: Vec<SlackInterval>) -> Self {
        let of = |k| all.iter().filter(move |s: &&SlackInterval| s.kind == k).map(|s| s.value());
        let max_ts = of(SlackKind::TS).max();
        let min_st = of(SlackKind::ST).min();
        SlackFamily { all, max_ts, min_st }
    }

    pub fn key_inequality_holds(&self) -> bool {
        match (&self.max_ts, &self.min_st) {
            (Some(a), Some(b)) => a < b,
            _ => true,
        }
    }
}

/// `true` for values in the long class.
fn long_mask(pi: &Permutation, coloring: &SortedColoring) -> Result<Vec<bool>> {
    if coloring.k() > 2 {
        return Err(Error::InvalidColoring(format!("{} classes, expected at most 2", coloring.k())));
    }
    coloring.check_sorted(pi)?;
    let map = coloring.class_map();
    Ok((0..pi.len()).map(|i| map[i] == 1).collect())
}

pub fn compute_slacks(
    pi: &Permutation,
    rep: &IntervalFamily,
    coloring: &SortedColoring,
) -> Result<SlackFamily> {
    let long = long_mask(pi, coloring)?;
    if rep.len() != pi.len() {
        return Err(Error::IndexMismatch { expected: pi.len(), found: rep.len() });
    }
    let r = |v: usize| rep.get(v - 1).r.clone();
    let mut all = Vec::new();
    for i in 1..pi.len() {
        let (x, y) = (pi.at(i), pi.at(i + 1));
        match (long[x - 1], long[y - 1]) {
            (true, false) => {
                if r(x) > r(y) {
                    all.push(SlackInterval { kind: SlackKind::TS, left: r(y), right: r(x), pair: (x, y) });
                }
            }
            (false, true) => {
                if r(x) > r(y) {
                    return Err(Error::NotSorted { inner: y, outer: x });
                }
                all.push(SlackInterval { kind: SlackKind::ST, left: r(x), right: r(y), pair: (x, y) });
            }
            _ => {}
        }
    }
    Ok(SlackFamily::from_list(all))
}

fn violation(a: &SlackInterval, b: &SlackInterval) -> Error {
    Error::StructureViolation { first: a.to_string(), second: b.to_string() }
}

/// Drops every slack strictly inside another and checks what remains.
pub fn maximal_slacks(family: &SlackFamily) -> Result<Vec<SlackInterval>> {
    let all = &family.all;
    for (i, a) in all.iter().enumerate() {
        for b in &all[i + 1..] {
            if a.left == b.left && a.right == b.right {
                return Err(violation(a, b));
            }
        }
        for b in all {
            if a.strictly_inside(b) {
                let shape_ok = a.kind == SlackKind::TS && b.kind == SlackKind::ST;
                if !shape_ok || !(a.left == b.left || a.right == b.right) {
                    return Err(violation(a, b));
                }
            }
        }
    }
    let max: Vec<SlackInterval> = all
        .iter()
        .filter(|a| !all.iter().any(|b| a.strictly_inside(b)))
        .cloned()
        .collect();
    for (i, a) in max.iter().enumerate() {
        for b in &max[i + 1..] {
            if a.touches(b) {
                return Err(violation(a, b));
            }
        }
    }
    Ok(max)
}

fn with_rights(rep: &IntervalFamily, rights: &[Rational]) -> IntervalFamily {
    let iv = rep
        .intervals()
        .iter()
        .zip(rights)
        .map(|(iv, r)| Interval::new(iv.l.clone(), r.clone()))
        .collect();
    IntervalFamily::new(rep.role(), iv).expect("right endpoints stay right of left endpoints")
}

/// Moves the right endpoints, order kept, so that all maximal slacks get one
/// common length. Left endpoints are not touched.
pub fn roberts_normalize(
    pi: &Permutation,
    rep: &IntervalFamily,
    coloring: &SortedColoring,
) -> Result<IntervalFamily> {
    let max = maximal_slacks(&compute_slacks(pi, rep, coloring)?)?;
    if max.len() <= 1 {
        return Ok(rep.clone());
    }
    let n = pi.len();
    let index_of = |value: &Rational| -> usize {
        (0..n).find(|&j| &rep.get(j).r == value).expect("slack ends are right endpoints")
    };
    let lambda = n;
    let mut vars: Vec<String> = (1..=n).map(|j| format!("r{j}")).collect();
    vars.push("lambda".into());
    let mut sys = LinearSystem::new(vars);
    for j in 0..n - 1 {
        sys.push(&[(j, 1), (j + 1, -1)], Rel::Lt, 0);
    }
    // ℓ_{π(n)} < r'_1
    let mut a = vec![rational::zero(); n + 1];
    a[0] = int(-1);
    sys.add_row(a, Rel::Lt, -rep.get(pi.at(n) - 1).l.clone());
    for s in &max {
        let (a, b) = (index_of(&s.left), index_of(&s.right));
        sys.push(&[(b, 1), (a, -1), (lambda, -1)], Rel::Eq, 0);
    }
    let Feasibility::Feasible(point) = lp_feasible_strict(&sys)? else {
        return Err(Error::InfeasibleNormalization);
    };
    let out = with_rights(rep, &point[..n]);
    if !verify_perm_representation(pi, &out)?.is_ok() {
        return Err(Error::InfeasibleNormalization);
    }
    Ok(out)
}

/// A quarter of the smallest gap between consecutive right endpoints, the
/// gap below `r_1` included.
pub fn epsilon(pi: &Permutation, rep: &IntervalFamily) -> Rational {
    let n = pi.len();
    let mut gaps: Vec<Rational> = (1..n).map(|j| &rep.get(j).r - &rep.get(j - 1).r).collect();
    gaps.push(&rep.get(0).r - &rep.get(pi.at(n) - 1).l);
    gaps.into_iter().min().expect("at least one gap") / int(4)
}

pub fn epsilon_expand(
    pi: &Permutation,
    rep: &IntervalFamily,
    coloring: &SortedColoring,
) -> Result<IntervalFamily> {
    let slacks = compute_slacks(pi, rep, coloring)?;
    let max = maximal_slacks(&slacks)?;
    let eps = epsilon(pi, rep);
    let mut rights: Vec<Rational> = rep.intervals().iter().map(|iv| iv.r.clone()).collect();
    for s in max.iter().filter(|s| s.kind == SlackKind::ST) {
        // ST slack [r_x, r_y]: x short, y long
        let (x, y) = s.pair;
        rights[x - 1] -= &eps;
        rights[y - 1] += &eps;
    }
    let out = with_rights(rep, &rights);
    let after = compute_slacks(pi, &out, coloring)?;
    if !after.key_inequality_holds() {
        return Err(Error::KeyInequalityViolated {
            max_ts: after.max_ts.unwrap(),
            min_st: after.min_st.unwrap(),
        });
    }
    Ok(out)
}

/// Gap `β − α` strictly between the slack bounds.
fn length_gap(slacks: &SlackFamily) -> Result<Rational> {
    Ok(match (&slacks.max_ts, &slacks.min_st) {
        (Some(a), Some(b)) if a >= b => {
            return Err(Error::KeyInequalityViolated { max_ts: a.clone(), min_st: b.clone() })
        }
        (Some(a), Some(b)) => rational::midpoint(a, b),
        (Some(a), None) => a + int(1),
        (None, Some(b)) => b / int(2),
        (None, None) => int(1),
    })
}

/// Keeps the right endpoints and sets every left endpoint to `r − α` or
/// `r − β`; returns an integral family.
pub fn assemble_two_count(
    pi: &Permutation,
    rep: &IntervalFamily,
    coloring: &SortedColoring,
) -> Result<IntervalFamily> {
    let long = long_mask(pi, coloring)?;
    let slacks = compute_slacks(pi, rep, coloring)?;
    let gap = length_gap(&slacks)?;
    let n = pi.len();
    let last = pi.at(n);
    let span = &rep.get(last - 1).r - &rep.get(0).r;
    let (mut alpha, mut beta) = if long[last - 1] {
        let beta = std::cmp::max(&span + int(1), &gap + int(1));
        (&beta - &gap, beta)
    } else {
        let alpha = &span + int(1);
        (alpha.clone(), alpha + &gap)
    };
    // Raising both lengths together only moves every left endpoint down by
    // the same amount, so a failure here can only be the closing inequality,
    // which a large enough shift always repairs.
    for _ in 0..64 {
        let iv = (0..n)
            .map(|j| {
                let r = rep.get(j).r.clone();
                let len = if long[j] { &beta } else { &alpha };
                Interval::new(&r - len, r)
            })
            .collect();
        let fam = IntervalFamily::new(Role::PermutationRepresentation, iv)?.scaled_to_integers();
        if verify_perm_representation(pi, &fam)?.is_ok() {
            return Ok(fam);
        }
        let bump = &beta + int(1);
        alpha += &bump;
        beta += &bump;
    }
    Err(Error::Internal(format!("no valid lengths found for {pi}")))
}

/// Every intermediate stage, for inspection.
#[derive(Debug, Clone)]
pub struct Construction {
    pub coloring: SortedColoring,
    pub initial: IntervalFamily,
    pub slacks: SlackFamily,
    pub maximal: Vec<SlackInterval>,
    pub normalized: IntervalFamily,
    pub expanded: IntervalFamily,
    pub representation: IntervalFamily,
}

impl Construction {
    /// `(α, β)`; `β` is absent when the long class is empty.
    pub fn lengths(&self) -> (Rational, Option<Rational>) {
        let map = self.coloring.class_map();
        let len = |c: usize| {
            map.iter()
                .position(|&m| m == c)
                .map(|j| self.representation.get(j).length())
        };
        match (len(0), len(1)) {
            (Some(a), b) => (a, b),
            (None, Some(b)) => (b, None),
            (None, None) => unreachable!("non-empty permutation"),
        }
    }
}

pub fn construct_with_coloring(pi: &Permutation, coloring: &SortedColoring) -> Result<Construction> {
    let initial = initial_representation(pi);
    let slacks = compute_slacks(pi, &initial, coloring)?;
    let maximal = maximal_slacks(&slacks)?;
    let normalized = roberts_normalize(pi, &initial, coloring)?;
    let expanded = epsilon_expand(pi, &normalized, coloring)?;
    let representation = assemble_two_count(pi, &expanded, coloring)?;
    let c = coloring.class_map();
    let ok = verify_perm_representation(pi, &representation)?.is_ok()
        && (0..pi.len()).all(|x| {
            (0..pi.len()).all(|y| {
                let (lx, ly) = (representation.get(x).length(), representation.get(y).length());
                (c[x] < c[y]) == (lx < ly)
            })
        });
    if !ok {
        return Err(Error::Internal(format!("2-count construction for {pi} does not verify")));
    }
    Ok(Construction {
        coloring: coloring.clone(),
        initial,
        slacks,
        maximal,
        normalized,
        expanded,
        representation,
    })
}

/// Any sorted 2-coloring; the representation realizes it exactly.
pub fn two_count_with_coloring(pi: &Permutation, coloring: &SortedColoring) -> Result<IntervalFamily> {
    Ok(construct_with_coloring(pi, coloring)?.representation)
}

pub fn construct(pi: &Permutation) -> Result<Construction> {
    let d = perm_depth(pi);
    if d > 2 {
        return Err(Error::DepthExceeded(d));
    }
    construct_with_coloring(pi, &mirsky_sorted_coloring(pi))
}

pub fn two_count_permutation(pi: &Permutation) -> Result<IntervalFamily> {
    Ok(construct(pi)?.representation)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn p(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    fn sc(classes: Vec<Vec<usize>>) -> SortedColoring {
        SortedColoring::new(classes).unwrap()
    }

    #[test]
    fn middle_permutation_slacks() {
        let pi = p("[1,3,4,5,2]");
        let col = sc(vec![vec![1, 2], vec![3, 4, 5]]);
        let s = compute_slacks(&pi, &initial_representation(&pi), &col).unwrap();
        assert_eq!(s.all.len(), 2);
        assert_eq!((s.all[0].kind, s.all[0].left.clone(), s.all[0].right.clone()), (SlackKind::ST, int(1), int(3)));
        assert_eq!((s.all[1].kind, s.all[1].left.clone(), s.all[1].right.clone()), (SlackKind::TS, int(2), int(5)));
        assert_eq!(s.max_ts, Some(int(3)));
        assert_eq!(s.min_st, Some(int(2)));
        assert_eq!(maximal_slacks(&s).unwrap().len(), 2);
    }

    #[test]
    fn normalization_equalizes() {
        let pi = p("[1,3,4,5,2]");
        let col = sc(vec![vec![1, 2], vec![3, 4, 5]]);
        let init = initial_representation(&pi);
        let norm = roberts_normalize(&pi, &init, &col).unwrap();
        for j in 0..5 {
            assert_eq!(norm.get(j).l, init.get(j).l);
        }
        let s = compute_slacks(&pi, &norm, &col).unwrap();
        assert_eq!(s.all[0].value(), s.all[1].value());
        let exp = epsilon_expand(&pi, &norm, &col).unwrap();
        let s2 = compute_slacks(&pi, &exp, &col).unwrap();
        let eps = epsilon(&pi, &norm);
        assert_eq!(s2.min_st.clone().unwrap(), s.all[0].value() + &eps * int(2));
        assert!(s2.key_inequality_holds());
    }

    #[test]
    fn two_one() {
        let pi = p("[2,1]");
        let col = sc(vec![vec![1], vec![2]]);
        // long 2 directly before short 1 with r_2 > r_1
        let s = compute_slacks(&pi, &initial_representation(&pi), &col).unwrap();
        assert_eq!(s.all.len(), 1);
        assert_eq!((s.all[0].kind, s.all[0].value()), (SlackKind::TS, int(1)));
        let f = two_count_with_coloring(&pi, &col).unwrap();
        assert!(f.get(1).length() > f.get(0).length());
    }

    #[test]
    fn contained_ts_shares_endpoint() {
        // hand-made family: ST [1,4] holding TS [1,2]
        let st = SlackInterval { kind: SlackKind::ST, left: int(1), right: int(4), pair: (1, 4) };
        let ts = SlackInterval { kind: SlackKind::TS, left: int(1), right: int(2), pair: (3, 1) };
        let fam = SlackFamily::from_list(vec![st.clone(), ts]);
        assert_eq!(maximal_slacks(&fam).unwrap(), vec![st]);
        let bad = SlackFamily::from_list(vec![
            SlackInterval { kind: SlackKind::ST, left: int(1), right: int(4), pair: (1, 4) },
            SlackInterval { kind: SlackKind::TS, left: frac(3, 2), right: int(2), pair: (3, 1) },
        ]);
        assert!(matches!(maximal_slacks(&bad), Err(Error::StructureViolation { .. })));
        assert!(maximal_slacks(&SlackFamily::default()).unwrap().is_empty());
    }

    #[test]
    fn monochromatic_and_depth_three() {
        let id = Permutation::identity(4);
        let f = two_count_permutation(&id).unwrap();
        assert_eq!(f.distinct_lengths().len(), 1);
        assert_eq!(two_count_permutation(&p("[3,2,1]")), Err(Error::DepthExceeded(3)));
    }

    #[test]
    fn middle_permutation_end_to_end() {
        let f = two_count_permutation(&p("[1,3,4,5,2]")).unwrap();
        assert!(f.all_integral());
        assert_eq!(f.distinct_lengths().len(), 2);
    }
}

//! 2-count representations of height-3, depth-2 interval orders.
//!
//! Stages: canonical representation of the twin-free order → break ties so
//! no two left (right) endpoints coincide → the intervals through a common
//! point `h` form a depth-2 permutation, solved by [`crate::construct2`] →
//! the remaining extremal intervals are placed around it with the short
//! length.

use crate::construct2::two_count_permutation;
use crate::error::{Error, Result};
use crate::family::{Interval, IntervalFamily, Role};
use crate::order::{
    canonical_representation, collapse_twins, depth_order, height, verify_order_representation,
    CanonicalRepresentation, IntervalOrder, Poset,
};
use crate::perm::{perm_depth, Permutation};
use crate::rational::{frac, int, Rational};

#[derive(Debug, Clone)]
pub struct StagedRepresentation {
    pub family: IntervalFamily,
    pub helly: Rational,
    pub middle: Vec<usize>,
    /// Not in the middle, left of `helly` (they touched line 0).
    pub extremal_left: Vec<usize>,
    /// Not in the middle, right of `helly` (they touched line m−1).
    pub extremal_right: Vec<usize>,
    canon: CanonicalRepresentation,
}

impl StagedRepresentation {
    pub fn canonical(&self) -> &CanonicalRepresentation {
        &self.canon
    }
}

fn canonical_height(canon: &CanonicalRepresentation) -> usize {
    let iv = canon.intervals();
    let n = iv.len();
    let mut below = vec![false; n * n];
    for x in 0..n {
        for y in 0..n {
            below[x * n + y] = iv[x].1 < iv[y].0;
        }
    }
    height(&Poset::from_matrix_unchecked(n, below))
}

/// Point shared by all non-extremal intervals.
fn helly_point(canon: &CanonicalRepresentation) -> Result<Rational> {
    let m = canon.magnitude();
    let inner: Vec<(usize, usize)> = canon
        .intervals()
        .iter()
        .copied()
        .filter(|&(l, r)| l > 0 && r + 1 < m)
        .collect();
    let Some(big_l) = inner.iter().map(|iv| iv.0).max() else {
        return Ok(frac(m as i64 - 1, 2));
    };
    let small_r = inner.iter().map(|iv| iv.1).min().unwrap();
    if big_l > small_r {
        return Err(Error::HeightExceeded(canonical_height(canon)));
    }
    // strictly between lines when possible, so intervals ending at L are
    // not pulled into the middle
    Ok(if big_l < small_r { frac(2 * big_l as i64 + 1, 2) } else { int(big_l as i64) })
}

/// Separates coinciding endpoints of a twin-free canonical representation.
///
/// Left endpoints on a line `i ≤ h` are ordered like their right endpoints;
/// the interval reaching furthest right keeps `i`, the others move into
/// `(i − 1/2, i)`. On the line `h` itself all of them move. Right endpoints
/// on lines `j ≥ h` are treated symmetrically. Positions use the step
/// `1 / (2(1 + M))`, `M` the largest number of endpoints on one line.
pub fn break_ties(canon: &CanonicalRepresentation) -> Result<StagedRepresentation> {
    let h3 = canonical_height(canon);
    if h3 > 3 {
        return Err(Error::HeightExceeded(h3));
    }
    let m = canon.magnitude();
    let iv = canon.intervals();
    let n = iv.len();
    let h = helly_point(canon)?;
    for i in 1..m {
        if int(i as i64) < h && !iv.contains(&(0, i)) {
            return Err(Error::MissingExtremalAtLine(i));
        }
    }
    let mult = (0..m)
        .flat_map(|line| {
            [
                iv.iter().filter(|x| x.0 == line).count(),
                iv.iter().filter(|x| x.1 == line).count(),
            ]
        })
        .max()
        .unwrap_or(1);
    let step = frac(1, 2 * (1 + mult as i64));

    let mut left: Vec<Rational> = iv.iter().map(|x| int(x.0 as i64)).collect();
    let mut right: Vec<Rational> = iv.iter().map(|x| int(x.1 as i64)).collect();
    for line in 0..m {
        let at = int(line as i64);
        if at <= h {
            let mut e: Vec<usize> = (0..n).filter(|&x| iv[x].0 == line).collect();
            e.sort_by_key(|&x| iv[x].1);
            let q = e.len() as i64;
            let shift = if at == h { 1 } else { 0 };
            for (t, &x) in e.iter().enumerate() {
                left[x] = &at - &step * int(q - 1 - t as i64 + shift);
            }
        }
        if at >= h {
            let mut e: Vec<usize> = (0..n).filter(|&x| iv[x].1 == line).collect();
            e.sort_by_key(|&x| iv[x].0);
            let shift = if at == h { 1 } else { 0 };
            for (t, &x) in e.iter().enumerate() {
                right[x] = &at + &step * int(t as i64 + shift);
            }
        }
    }
    let family = IntervalFamily::new(
        Role::OrderRepresentation,
        left.into_iter().zip(right).map(|(l, r)| Interval::new(l, r)).collect(),
    )?;
    let mut middle = Vec::new();
    let mut extremal_left = Vec::new();
    let mut extremal_right = Vec::new();
    for x in 0..n {
        let i = family.get(x);
        if i.l < h && h < i.r {
            middle.push(x);
        } else if i.r < h {
            extremal_left.push(x);
        } else {
            extremal_right.push(x);
        }
    }
    Ok(StagedRepresentation { family, helly: h, middle, extremal_left, extremal_right, canon: canon.clone() })
}

#[derive(Debug, Clone)]
pub struct MiddlePart {
    pub pi: Permutation,
    /// `elems[v - 1]` is the element carrying value `v`, values in right
    /// endpoint order.
    pub elems: Vec<usize>,
    pub leftovers: Vec<usize>,
}

pub fn middle_part(staged: &StagedRepresentation) -> Result<MiddlePart> {
    let f = &staged.family;
    let mut elems = staged.middle.clone();
    elems.sort_by(|&a, &b| f.get(a).r.cmp(&f.get(b).r));
    let mut by_left = elems.clone();
    by_left.sort_by(|&a, &b| f.get(a).l.cmp(&f.get(b).l));
    let value_of = |x: usize| elems.iter().position(|&e| e == x).unwrap() + 1;
    let pi = Permutation::new(by_left.iter().map(|&x| value_of(x)).collect())?;
    let d = perm_depth(&pi);
    if d > 2 {
        return Err(Error::DepthExceeded(d));
    }
    let mut leftovers = staged.extremal_left.clone();
    leftovers.extend(&staged.extremal_right);
    leftovers.sort_unstable();
    Ok(MiddlePart { pi, elems, leftovers })
}

/// Every stage of the construction.
#[derive(Debug, Clone)]
pub struct Height3Construction {
    pub staged: StagedRepresentation,
    pub middle: Option<MiddlePart>,
    /// On the twin-free order.
    pub reduced: IntervalFamily,
    pub representation: IntervalFamily,
}

fn place(
    staged: &StagedRepresentation,
    mid: &MiddlePart,
    rep: &IntervalFamily,
) -> Result<IntervalFamily> {
    let canon = staged.canonical().intervals();
    let k = mid.elems.len();
    let pi = &mid.pi;
    let l = |v: usize| rep.get(v - 1).l.clone();
    let r = |v: usize| rep.get(v - 1).r.clone();

    let mut pts: Vec<Rational> = rep.intervals().iter().flat_map(|i| [i.l.clone(), i.r.clone()]).collect();
    pts.sort();
    pts.dedup();
    let delta = pts
        .windows(2)
        .map(|w| &w[1] - &w[0])
        .min()
        .unwrap_or_else(|| int(1))
        / int(4);

    let span_l = l(pi.at(k)) - l(pi.at(1));
    let span_r = r(k) - r(1);
    let alpha = rep.distinct_lengths()[0].clone();
    let need = std::cmp::max(span_l, span_r) + &delta * int(2);
    // lengthen every middle interval by the same amount: left endpoints keep
    // their order and stay below r_1
    let raise = if alpha > need { int(0) } else { &need - &alpha + int(1) };
    let alpha = &alpha + &raise;

    let n = canon.len();
    let mut out: Vec<Option<Interval>> = vec![None; n];
    for v in 1..=k {
        out[mid.elems[v - 1]] = Some(Interval::new(l(v) - &raise, r(v)));
    }
    for &e in &staged.extremal_left {
        // middle intervals meeting e: a prefix of the left-endpoint order
        let j = (1..=k).take_while(|&i| canon[mid.elems[pi.at(i) - 1]].0 <= canon[e].1).count();
        let re = if j == 0 { l(pi.at(1)) - &raise - &delta } else { l(pi.at(j)) - &raise + &delta };
        out[e] = Some(Interval::new(&re - &alpha, re));
    }
    for &e in &staged.extremal_right {
        // middle intervals entirely left of e: a prefix of the right-endpoint order
        let j = (1..=k).take_while(|&v| canon[mid.elems[v - 1]].1 < canon[e].0).count();
        let le = if j == 0 { r(1) - &delta } else { r(j) + &delta };
        out[e] = Some(Interval::new(le.clone(), le + &alpha));
    }
    IntervalFamily::new(Role::OrderRepresentation, out.into_iter().map(Option::unwrap).collect())
}

pub fn construct_height3(order: &IntervalOrder) -> Result<Height3Construction> {
    let ht = height(order);
    if ht > 3 {
        return Err(Error::HeightExceeded(ht));
    }
    let d = depth_order(order)?;
    if d > 2 {
        return Err(Error::DepthExceeded(d));
    }
    let twins = collapse_twins(order);
    let q = &twins.reduced;
    let canon = canonical_representation(q);
    let staged = break_ties(&canon)?;
    let (middle, reduced) = if staged.middle.is_empty() {
        // twin-free with nothing through h: a 2-chain
        if canon.magnitude() != 2 || q.len() != 2 {
            return Err(Error::Internal("empty middle part outside the 2-chain case".into()));
        }
        let lo = if q.lt(0, 1) { 0 } else { 1 };
        let mut iv = vec![Interval::new(int(2), int(3)); 2];
        iv[lo] = Interval::new(int(0), int(1));
        (None, IntervalFamily::new(Role::OrderRepresentation, iv)?)
    } else {
        let mid = middle_part(&staged)?;
        let rep = two_count_permutation(&mid.pi)?;
        let fam = place(&staged, &mid, &rep)?.scaled_to_integers();
        (Some(mid), fam)
    };
    if !verify_order_representation(q, &reduced)?.is_ok() || reduced.distinct_lengths().len() > 2 {
        return Err(Error::Internal("height-3 construction does not verify on the twin-free order".into()));
    }
    let representation = twins.expand(&reduced)?;
    if !verify_order_representation(order, &representation)?.is_ok() {
        return Err(Error::Internal("height-3 construction does not verify".into()));
    }
    Ok(Height3Construction { staged, middle, reduced, representation })
}

pub fn two_count_height3(order: &IntervalOrder) -> Result<IntervalFamily> {
    Ok(construct_height3(order)?.representation)
}

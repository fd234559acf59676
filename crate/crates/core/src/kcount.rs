//! k-count decision oracles.
//!
//! A class map `c` fixes which of the lengths `α_1 < … < α_k` each interval
//! gets. Writing every left endpoint as `r_x − α_{c(x)}` leaves a linear
//! system in the right endpoints and the α's, so one LP per class map
//! decides it. For orders no endpoint order has to be guessed: the LP's
//! feasible region already ranges over all of them.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::family::{Interval, IntervalFamily, Role};
use crate::lp::{lp_feasible_strict, Feasibility, LinearSystem, Rel};
use crate::order::{pp_graph, verify_order_representation, IntervalOrder};
use crate::perm::{
    enumerate_sorted_colorings, perm_depth, verify_perm_representation, Permutation,
    SortedColoring,
};
use crate::rational::Rational;

/// Largest `k^n` searched without `allow_large`.
pub const MAX_CLASS_MAPS: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Answer {
    /// `coloring[i]` lists the 1-based elements with the `i+1`-th shortest length.
    Yes { coloring: Vec<Vec<usize>>, witness: IntervalFamily },
    No,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KCountVerdict {
    pub k: usize,
    pub answer: Answer,
    /// Class maps examined up to and including the one that succeeded.
    pub colorings_tried: u64,
}

impl KCountVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self.answer, Answer::Yes { .. })
    }

    pub fn witness(&self) -> Option<&IntervalFamily> {
        match &self.answer {
            Answer::Yes { witness, .. } => Some(witness),
            Answer::No => None,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Options {
    pub allow_large: bool,
    /// Skip class maps that give a pith a class no shorter than its peel.
    pub pp_pruning: bool,
    pub parallel: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { allow_large: false, pp_pruning: true, parallel: true }
    }
}

fn var_names(n: usize, k: usize) -> Vec<String> {
    (1..=n)
        .map(|i| format!("r{i}"))
        .chain((1..=k).map(|i| format!("a{i}")))
        .collect()
}

fn length_rows(sys: &mut LinearSystem, n: usize, k: usize) {
    let a = |i: usize| n + i;
    for i in 0..k.saturating_sub(1) {
        sys.push(&[(a(i), 1), (a(i + 1), -1)], Rel::Lt, 0);
    }
    if k > 0 {
        sys.push(&[(a(0), -1)], Rel::Lt, 0);
    }
}

pub fn coloring_system_permutation(pi: &Permutation, coloring: &SortedColoring) -> Result<LinearSystem> {
    coloring.check_sorted(pi)?;
    let n = pi.len();
    let k = coloring.k();
    let c = coloring.class_map();
    let mut sys = LinearSystem::new(var_names(n, k));
    let r = |v: usize| v - 1;
    let a = |v: usize| n + c[v - 1];
    for j in 1..n {
        sys.push(&[(r(j), 1), (r(j + 1), -1)], Rel::Lt, 0);
    }
    length_rows(&mut sys, n, k);
    for i in 1..n {
        let (x, y) = (pi.at(i), pi.at(i + 1));
        // ℓ_x < ℓ_y
        sys.push(&[(r(x), 1), (a(x), -1), (r(y), -1), (a(y), 1)], Rel::Lt, 0);
    }
    let last = pi.at(n);
    sys.push(&[(r(last), 1), (a(last), -1), (r(1), -1)], Rel::Lt, 0);
    Ok(sys)
}

/// Builds intervals `[r_x − α_{c(x)}, r_x]` from an LP point and clears
/// denominators.
fn family_from_point(point: &[Rational], class_map: &[usize], role: Role) -> IntervalFamily {
    let n = class_map.len();
    let iv = (0..n)
        .map(|x| {
            let r = point[x].clone();
            Interval::new(&r - &point[n + class_map[x]], r)
        })
        .collect();
    IntervalFamily::new(role, iv).unwrap().scaled_to_integers()
}

fn classes_of(class_map: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); k];
    for (x, &c) in class_map.iter().enumerate() {
        out[c].push(x + 1);
    }
    out
}

fn try_perm(pi: &Permutation, col: &SortedColoring) -> Result<Option<IntervalFamily>> {
    let sys = coloring_system_permutation(pi, col)?;
    let Feasibility::Feasible(point) = lp_feasible_strict(&sys)? else {
        return Ok(None);
    };
    let fam = family_from_point(&point, &col.class_map(), Role::PermutationRepresentation);
    if !verify_perm_representation(pi, &fam)?.is_ok() || fam.distinct_lengths().len() > col.k() {
        return Err(Error::Internal(format!("k-count witness for {pi} fails verification")));
    }
    Ok(Some(fam))
}

/// First hit in list order; parallel and serial runs agree.
fn first_hit<T: Sync, R: Send>(
    items: &[T],
    parallel: bool,
    f: impl Fn(&T) -> Result<Option<R>> + Sync,
) -> Result<Option<(usize, R)>> {
    let run = |i: usize| -> Option<Result<(usize, R)>> {
        match f(&items[i]) {
            Ok(Some(r)) => Some(Ok((i, r))),
            Ok(None) => None,
            Err(e) => Some(Err(e)),
        }
    };
    let hit = if parallel && items.len() > 8 {
        (0..items.len()).into_par_iter().find_map_first(run)
    } else {
        (0..items.len()).find_map(run)
    };
    hit.transpose()
}

fn perm_search(pi: &Permutation, ks: impl Iterator<Item = usize>, k: usize, opts: Options) -> Result<KCountVerdict> {
    let mut tried = 0u64;
    for kk in ks {
        let cols: Vec<SortedColoring> = enumerate_sorted_colorings(pi, kk).collect();
        if let Some((i, fam)) = first_hit(&cols, opts.parallel, |c| try_perm(pi, c))? {
            return Ok(KCountVerdict {
                k,
                answer: Answer::Yes { coloring: cols[i].classes().to_vec(), witness: fam },
                colorings_tried: tried + i as u64 + 1,
            });
        }
        tried += cols.len() as u64;
    }
    Ok(KCountVerdict { k, answer: Answer::No, colorings_tried: tried })
}

/// At most `k` distinct lengths.
pub fn is_k_count_perm(pi: &Permutation, k: usize) -> Result<KCountVerdict> {
    is_k_count_perm_with(pi, k, Options::default())
}

pub fn is_k_count_perm_with(pi: &Permutation, k: usize, opts: Options) -> Result<KCountVerdict> {
    let lo = perm_depth(pi);
    let hi = k.min(pi.len());
    perm_search(pi, lo..=hi, k, opts)
}

/// Exactly `k` distinct lengths.
pub fn is_exactly_k_count_perm(pi: &Permutation, k: usize) -> Result<KCountVerdict> {
    let ks = (k >= perm_depth(pi) && k <= pi.len()).then_some(k);
    perm_search(pi, ks.into_iter(), k, Options::default())
}

/// `class_map[x]` is the 0-based class of element `x`.
pub fn coloring_system_order(order: &IntervalOrder, class_map: &[usize], k: usize) -> Result<LinearSystem> {
    let n = order.len();
    if class_map.len() != n {
        return Err(Error::IndexMismatch { expected: n, found: class_map.len() });
    }
    if let Some(&c) = class_map.iter().find(|&&c| c >= k) {
        return Err(Error::InvalidColoring(format!("class {} >= k={k}", c + 1)));
    }
    let mut sys = LinearSystem::new(var_names(n, k));
    let a = |x: usize| n + class_map[x];
    length_rows(&mut sys, n, k);
    // covers suffice: r_x < ℓ_y ≤ r_y < ℓ_z
    for (x, y) in order.covers() {
        sys.push(&[(x, 1), (y, -1), (a(y), 1)], Rel::Lt, 0);
    }
    for x in 0..n {
        for y in x + 1..n {
            if order.incomparable(x, y) {
                sys.push(&[(y, 1), (a(y), -1), (x, -1)], Rel::Le, 0);
                sys.push(&[(x, 1), (a(x), -1), (y, -1)], Rel::Le, 0);
            }
        }
    }
    Ok(sys)
}

fn try_order(order: &IntervalOrder, class_map: &[usize], k: usize) -> Result<Option<IntervalFamily>> {
    let sys = coloring_system_order(order, class_map, k)?;
    let Feasibility::Feasible(point) = lp_feasible_strict(&sys)? else {
        return Ok(None);
    };
    let fam = family_from_point(&point, class_map, Role::OrderRepresentation);
    if !verify_order_representation(order, &fam)?.is_ok() || fam.distinct_lengths().len() > k {
        return Err(Error::Internal("k-count witness for order fails verification".into()));
    }
    Ok(Some(fam))
}

/// Class maps whose used classes are `0..u` with `u` in `uses`, lexicographic,
/// honouring the PP arcs when asked.
pub fn order_class_maps(
    order: &IntervalOrder,
    k: usize,
    exact: bool,
    pp_pruning: bool,
) -> Vec<Vec<usize>> {
    let n = order.len();
    let arcs: Vec<(usize, usize)> = if pp_pruning {
        pp_graph(order).arcs.into_iter().collect()
    } else {
        Vec::new()
    };
    let mut out = Vec::new();
    let mut c = vec![0usize; n];
    fn rec(
        i: usize,
        n: usize,
        k: usize,
        exact: bool,
        arcs: &[(usize, usize)],
        c: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == n {
            let mut used = vec![false; k];
            for &x in c.iter() {
                used[x] = true;
            }
            let u = used.iter().take_while(|&&b| b).count();
            if used[u..].iter().all(|&b| !b) && (!exact || u == k) {
                out.push(c.clone());
            }
            return;
        }
        for col in 0..k {
            c[i] = col;
            let ok = arcs.iter().all(|&(pith, peel)| {
                pith.max(peel) > i || c[pith] < c[peel]
            });
            if ok {
                rec(i + 1, n, k, exact, arcs, c, out);
            }
        }
    }
    if n > 0 && k > 0 {
        rec(0, n, k, exact, &arcs, &mut c, &mut out);
    }
    out
}

fn guard(n: usize, k: usize, allow_large: bool) -> Result<()> {
    let big = (k as u64).checked_pow(n as u32).map_or(true, |v| v > MAX_CLASS_MAPS);
    if big && !allow_large {
        return Err(Error::TooLarge { n, k });
    }
    Ok(())
}

fn order_search(order: &IntervalOrder, k: usize, exact: bool, opts: Options) -> Result<KCountVerdict> {
    guard(order.len(), k, opts.allow_large)?;
    let maps = order_class_maps(order, k, exact, opts.pp_pruning);
    let hit = first_hit(&maps, opts.parallel, |m| try_order(order, m, k))?;
    Ok(match hit {
        Some((i, fam)) => KCountVerdict {
            k,
            answer: Answer::Yes { coloring: classes_of(&maps[i], k), witness: fam },
            colorings_tried: i as u64 + 1,
        },
        None => KCountVerdict { k, answer: Answer::No, colorings_tried: maps.len() as u64 },
    })
}

/// At most `k` distinct lengths.
pub fn is_k_count_order(order: &IntervalOrder, k: usize) -> Result<KCountVerdict> {
    order_search(order, k, false, Options::default())
}

pub fn is_k_count_order_with(order: &IntervalOrder, k: usize, opts: Options) -> Result<KCountVerdict> {
    order_search(order, k, false, opts)
}

/// Exactly `k` distinct lengths.
pub fn is_exactly_k_count_order(order: &IntervalOrder, k: usize) -> Result<KCountVerdict> {
    order_search(order, k, true, Options::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::{order_from_ascent, AscentSequence, Poset};

    fn ord(s: &str) -> IntervalOrder {
        order_from_ascent(&AscentSequence::parse(s).unwrap())
    }

    fn perm(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    #[test]
    fn two_one_needs_two_lengths() {
        let p = perm("[2,1]");
        assert!(!is_k_count_perm(&p, 1).unwrap().is_yes());
        let v = is_k_count_perm(&p, 2).unwrap();
        assert!(v.is_yes());
        let col = SortedColoring::new(vec![vec![1], vec![2]]).unwrap();
        let sys = coloring_system_permutation(&p, &col).unwrap();
        assert_eq!(sys.n_vars(), 4);
    }

    #[test]
    fn ten_element_perm_not_three_count() {
        let v = is_k_count_perm(&perm("[4,2,5,10,3,1,7,6,9,8]"), 3).unwrap();
        assert!(!v.is_yes());
        assert!(v.colorings_tried > 0);
    }

    #[test]
    fn three_plus_one_not_unit() {
        let p = IntervalOrder::new(Poset::from_relation(4, &[(0, 1), (1, 2)]).unwrap()).unwrap();
        let sys = coloring_system_order(&p, &[0, 0, 0, 0], 1).unwrap();
        assert!(!lp_feasible_strict(&sys).unwrap().is_feasible());
        assert!(!is_k_count_order(&p, 1).unwrap().is_yes());
        assert!(is_k_count_order(&p, 2).unwrap().is_yes());
        let chain = IntervalOrder::new(Poset::chain(2)).unwrap();
        assert!(is_k_count_order(&chain, 1).unwrap().is_yes());
    }

    #[test]
    fn eleven_and_twelve_element_orders() {
        assert!(!is_k_count_order(&ord("0,1,2,0,3,2,3,0,2,4,2"), 2).unwrap().is_yes());
        let v = is_k_count_order(&ord("0,1,0,1,2,1,0,2,0,2,0,3"), 2).unwrap();
        assert!(v.witness().unwrap().distinct_lengths().len() <= 2);
    }

    #[test]
    fn exactly_two_for_unit_order() {
        let chain = IntervalOrder::new(Poset::chain(3)).unwrap();
        assert!(is_exactly_k_count_order(&chain, 2).unwrap().is_yes());
        let one = IntervalOrder::new(Poset::chain(1)).unwrap();
        assert!(!is_exactly_k_count_order(&one, 2).unwrap().is_yes());
    }

    #[test]
    fn guard_trips() {
        let big = IntervalOrder::new(Poset::antichain(17)).unwrap();
        assert!(matches!(is_k_count_order(&big, 2), Err(Error::TooLarge { n: 17, k: 2 })));
    }

    #[test]
    fn serial_and_parallel_agree() {
        let o = ord("0,1,0,1,2,1,0,2,0,2,0,3");
        let s = is_k_count_order_with(&o, 2, Options { parallel: false, ..Options::default() }).unwrap();
        let p = is_k_count_order_with(&o, 2, Options::default()).unwrap();
        assert_eq!(s, p);
    }
}

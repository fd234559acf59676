mod common;

use std::collections::BTreeSet;

use intervalia::construct2::{construct_with_coloring, two_count_permutation};
use intervalia::explorer::enumerate_permutations;
use intervalia::perm::{
    enumerate_sorted_colorings, initial_representation, mirsky_sorted_coloring, nesting_pairs, perm_depth,
    verify_perm_representation,
};
use intervalia::{IntervalFamily, Permutation, SortedColoring};
use proptest::prelude::*;

fn containments(f: &IntervalFamily) -> BTreeSet<(usize, usize)> {
    let n = f.len();
    let mut out = BTreeSet::new();
    for x in 0..n {
        for y in 0..n {
            if x != y && f.get(x).strictly_inside(f.get(y)) {
                out.insert((x + 1, y + 1));
            }
        }
    }
    out
}

#[test]
fn mirsky_is_sorted_up_to_seven() {
    for n in 1..=7 {
        for pi in enumerate_permutations(n) {
            let c = mirsky_sorted_coloring(&pi);
            c.check_sorted(&pi).unwrap();
            assert_eq!(c.k(), perm_depth(&pi));
            assert_eq!(c.nonempty_classes(), c.k());
        }
    }
}

#[test]
fn depth_is_height_of_nesting_order() {
    for n in 1..=8 {
        for pi in enumerate_permutations(n) {
            let nest = nesting_pairs(&pi);
            let h = common::height_brute(n, |x, y| nest.contains(&(x + 1, y + 1)));
            assert_eq!(perm_depth(&pi), h, "{pi}");
            if n <= 7 {
                assert_eq!(perm_depth(&pi), common::lds_brute(pi.values()), "{pi}");
            }
        }
    }
}

#[test]
fn sorted_coloring_enumeration_self_consistent() {
    for n in 1..=6 {
        for pi in enumerate_permutations(n) {
            for k in 1..=3 {
                let got: Vec<SortedColoring> = enumerate_sorted_colorings(&pi, k).collect();
                // every class map in lexicographic order, filtered from scratch
                let mut want = Vec::new();
                let mut map = vec![0usize; n];
                loop {
                    let used: BTreeSet<usize> = map.iter().copied().collect();
                    if used.len() == k {
                        let c = SortedColoring::from_class_map(&map, k).unwrap();
                        if c.check_sorted(&pi).is_ok() {
                            want.push(c);
                        }
                    }
                    let Some(i) = (0..n).rev().find(|&i| map[i] + 1 < k) else { break };
                    map[i] += 1;
                    map[i + 1..].iter_mut().for_each(|m| *m = 0);
                }
                assert_eq!(got, want, "{pi} k={k}");
            }
        }
    }
}

#[test]
fn nesting_equals_containment_up_to_seven() {
    for n in 1..=7 {
        for pi in enumerate_permutations(n) {
            let nest = nesting_pairs(&pi);
            let init = initial_representation(&pi);
            assert!(verify_perm_representation(&pi, &init).unwrap().is_ok());
            assert_eq!(containments(&init), nest, "{pi}");
            if let Ok(f) = two_count_permutation(&pi) {
                assert!(verify_perm_representation(&pi, &f).unwrap().is_ok());
                assert_eq!(containments(&f), nest, "{pi}");
            }
        }
    }
}

#[test]
fn every_sorted_two_coloring_is_realised() {
    use intervalia::kcount::coloring_system_permutation;
    use intervalia::lp::lp_feasible_strict;
    for n in 1..=7 {
        for pi in enumerate_permutations(n) {
            if perm_depth(&pi) > 2 {
                continue;
            }
            for k in 1..=2 {
                for col in enumerate_sorted_colorings(&pi, k) {
                    let c = construct_with_coloring(&pi, &col).unwrap_or_else(|e| panic!("{pi} {col:?}: {e}"));
                    let f = &c.representation;
                    assert!(f.all_integral());
                    assert!(verify_perm_representation(&pi, f).unwrap().is_ok());
                    // lengths follow the coloring exactly
                    let map = col.class_map();
                    for x in 0..n {
                        for y in 0..n {
                            assert_eq!(map[x] < map[y], f.get(x).length() < f.get(y).length());
                        }
                    }
                    // key inequality on the expanded family
                    let s = intervalia::construct2::compute_slacks(&pi, &c.expanded, &col).unwrap();
                    if let (Some(ts), Some(st)) = (&s.max_ts, &s.min_st) {
                        assert!(ts < st, "{pi} {col:?}");
                    }
                    // normalisation keeps left ends and the right-end order
                    for x in 0..n {
                        assert_eq!(c.normalized.get(x).l, c.initial.get(x).l);
                        for y in 0..n {
                            assert_eq!(
                                c.normalized.get(x).r < c.normalized.get(y).r,
                                c.initial.get(x).r < c.initial.get(y).r
                            );
                        }
                    }
                    assert!(verify_perm_representation(&pi, &c.normalized).unwrap().is_ok());
                    let sys = coloring_system_permutation(&pi, &col).unwrap();
                    assert!(lp_feasible_strict(&sys).unwrap().is_feasible(), "{pi} {col:?}");
                }
            }
        }
    }
}

fn perm_strategy(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

// two interleaved increasing runs: depth at most 2
fn shallow_strategy(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n)
        .prop_flat_map(|n| (proptest::collection::vec(any::<bool>(), n), proptest::collection::vec(any::<bool>(), n)))
        .prop_map(|(pos, val)| {
            let n = pos.len();
            let vals_a: Vec<usize> = (1..=n).filter(|&v| val[v - 1]).collect();
            let vals_b: Vec<usize> = (1..=n).filter(|&v| !val[v - 1]).collect();
            let k = vals_a.len();
            // first k positions flagged true (padded) get the a-values
            let mut slots_a: Vec<usize> = (0..n).filter(|&i| pos[i]).collect();
            slots_a.extend((0..n).filter(|&i| !pos[i]));
            let mut a: Vec<usize> = slots_a[..k].to_vec();
            a.sort_unstable();
            let mut out = vec![0; n];
            let (mut ia, mut ib) = (0, 0);
            for (i, slot) in out.iter_mut().enumerate() {
                if ia < k && a[ia] == i {
                    *slot = vals_a[ia];
                    ia += 1;
                } else {
                    *slot = vals_b[ib];
                    ib += 1;
                }
            }
            Permutation::new(out).unwrap()
        })
}

proptest! {
    #[test]
    fn shallow_perms_build(pi in shallow_strategy(16)) {
        prop_assert!(perm_depth(&pi) <= 2);
        let f = two_count_permutation(&pi).unwrap();
        prop_assert!(verify_perm_representation(&pi, &f).unwrap().is_ok());
        prop_assert!(f.all_integral() && f.distinct_lengths().len() <= 2);
    }

    #[test]
    fn depth_two_larger_perms_build(pi in perm_strategy(14)) {
        match two_count_permutation(&pi) {
            Ok(f) => {
                prop_assert!(perm_depth(&pi) <= 2);
                prop_assert!(verify_perm_representation(&pi, &f).unwrap().is_ok());
                prop_assert!(f.distinct_lengths().len() <= 2);
            }
            Err(_) => prop_assert!(perm_depth(&pi) > 2),
        }
    }

    #[test]
    fn depth_matches_brute(pi in perm_strategy(12)) {
        prop_assert_eq!(perm_depth(&pi), common::lds_brute(pi.values()));
    }
}

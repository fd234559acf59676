use intervalia::explorer::{enumerate_orders, enumerate_permutations};
use intervalia::kcount::{is_k_count_order, is_k_count_order_with, is_k_count_perm, Options};
use intervalia::order::verify_order_representation;
use intervalia::perm::verify_perm_representation;

#[test]
fn monotone_in_k_perms() {
    for n in 1..=6 {
        for pi in enumerate_permutations(n) {
            let mut prev = false;
            for k in 1..=3 {
                let v = is_k_count_perm(&pi, k).unwrap();
                if let Some(f) = v.witness() {
                    assert!(verify_perm_representation(&pi, f).unwrap().is_ok());
                    assert!(f.distinct_lengths().len() <= k);
                }
                assert!(!prev || v.is_yes(), "{pi}: yes at {} but no at {k}", k - 1);
                prev = v.is_yes();
            }
        }
    }
}

#[test]
fn monotone_in_k_orders() {
    for n in 1..=6 {
        for (s, o) in enumerate_orders(n) {
            let mut prev = false;
            for k in 1..=3 {
                let v = is_k_count_order(&o, k).unwrap();
                if let Some(f) = v.witness() {
                    assert!(verify_order_representation(&o, f).unwrap().is_ok());
                    assert!(f.distinct_lengths().len() <= k);
                }
                assert!(!prev || v.is_yes(), "{s}: yes at {} but no at {k}", k - 1);
                prev = v.is_yes();
            }
        }
    }
}

#[test]
fn pruning_is_conservative() {
    let off = Options { pp_pruning: false, ..Default::default() };
    for n in 1..=8 {
        for (s, o) in enumerate_orders(n) {
            let a = is_k_count_order(&o, 2).unwrap().is_yes();
            let b = is_k_count_order_with(&o, 2, off).unwrap().is_yes();
            assert_eq!(a, b, "{s}");
        }
    }
}

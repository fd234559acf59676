use intervalia::explorer::{
    enumerate_ascent_sequences, read_report, reverify, search_non_2count_orders, search_non_3count_perms,
    write_report, OrderFilters, SearchOptions, SearchParameters, SearchReport,
};
use intervalia::SCHEMA;

#[test]
fn parallel_matches_serial() {
    let serial = SearchOptions { jobs: Some(1), ..Default::default() };
    let par = SearchOptions { jobs: Some(4), ..Default::default() };
    let a = search_non_2count_orders(7, OrderFilters::default(), serial).unwrap();
    let b = search_non_2count_orders(7, OrderFilters::default(), par).unwrap();
    assert!(a.same_outcome(&b));
    let a = search_non_3count_perms(7, serial).unwrap();
    let b = search_non_3count_perms(7, par).unwrap();
    assert!(a.same_outcome(&b));
}

#[test]
fn shortcuts_do_not_change_results() {
    let on = SearchOptions::default();
    let off = SearchOptions { shortcuts: false, ..Default::default() };
    let filters = OrderFilters { four_plus_one_free: false, depth_at_most_2: false };
    let a = search_non_2count_orders(7, filters, on).unwrap();
    let b = search_non_2count_orders(7, filters, off).unwrap();
    assert_eq!(a.witnesses, b.witnesses);
    assert!(!a.witnesses.is_empty(), "unfiltered search should meet deep orders");
    let a = search_non_3count_perms(6, on).unwrap();
    let b = search_non_3count_perms(6, off).unwrap();
    assert_eq!(a.witnesses, b.witnesses);
}

#[test]
fn enumeration_is_sorted_and_unique() {
    let all: Vec<_> = enumerate_ascent_sequences(6).collect();
    assert_eq!(all.len(), 217);
    assert!(all.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn witnesses_reload_and_reverify() {
    let dir = tempfile::tempdir().unwrap();
    let report = SearchReport {
        schema: SCHEMA.into(),
        search: "non-2count-orders".into(),
        parameters: SearchParameters {
            n_min: 11,
            n_max: 11,
            k: 2,
            filters: Some(OrderFilters::default()),
            shortcuts: true,
        },
        counts: Vec::new(),
        // the first is a genuine witness, the second has a 2-count representation
        witnesses: vec!["0,1,2,0,3,2,3,0,2,4,2".into(), "0,1,0,1".into()],
        elapsed_ms: 0,
        seed: None,
    };
    let path = write_report(&report, dir.path(), "w").unwrap();
    let back = read_report(&path).unwrap();
    assert_eq!(back, report);
    assert_eq!(reverify(&back).unwrap(), vec!["0,1,0,1".to_string()]);
}

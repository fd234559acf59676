//! Exhaustive searches over small interval orders and permutations.

use std::path::{Path, PathBuf};
use std::time::Instant;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::height3::two_count_height3;
use crate::kcount::{self, is_k_count_order_with, is_k_count_perm_with};
use crate::order::{
    depth_order, find_chain_plus_one, find_springs, order_from_ascent, pp_graph, AscentSequence,
    IntervalOrder,
};
use crate::perm::{perm_depth, Permutation};
use crate::SCHEMA;

pub const ORDER_SEARCH_GUARD: usize = 10;
pub const PERM_SEARCH_GUARD: usize = 9;

/// All ascent sequences of length `n`, lexicographic.
pub struct AscentSequences {
    cur: Option<Vec<usize>>,
}

pub fn enumerate_ascent_sequences(n: usize) -> AscentSequences {
    AscentSequences { cur: (n > 0).then(|| vec![0; n]) }
}

impl Iterator for AscentSequences {
    type Item = AscentSequence;

    fn next(&mut self) -> Option<AscentSequence> {
        let out = self.cur.clone()?;
        let x = self.cur.as_mut().unwrap();
        // bump the rightmost entry that still has room, zero the tail
        let mut asc_before = vec![0usize; x.len()];
        for i in 1..x.len() {
            asc_before[i] = asc_before[i - 1] + usize::from(i >= 2 && x[i - 1] > x[i - 2]);
        }
        let mut i = x.len();
        loop {
            if i <= 1 {
                self.cur = None;
                break;
            }
            i -= 1;
            if x[i] < asc_before[i] + 1 {
                x[i] += 1;
                for v in &mut x[i + 1..] {
                    *v = 0;
                }
                break;
            }
        }
        Some(AscentSequence::new(out).expect("enumeration stays valid"))
    }
}

pub fn enumerate_orders(n: usize) -> impl Iterator<Item = (AscentSequence, IntervalOrder)> {
    enumerate_ascent_sequences(n).map(|s| {
        let o = order_from_ascent(&s);
        (s, o)
    })
}

/// Permutations of `1..=n` in lexicographic order.
pub fn enumerate_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    (1..=n)
        .permutations(n)
        .map(|v| Permutation::new(v).expect("permutation"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderFilters {
    pub four_plus_one_free: bool,
    pub depth_at_most_2: bool,
}

impl Default for OrderFilters {
    fn default() -> Self {
        OrderFilters { four_plus_one_free: true, depth_at_most_2: true }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    pub allow_large: bool,
    /// Cheap certificates before the LP oracle: the height-3 construction
    /// for orders, depth bounds for permutations.
    pub shortcuts: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { jobs: None, allow_large: false, shortcuts: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRow {
    pub n: usize,
    pub total: u64,
    pub examined: u64,
    pub witnesses: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchParameters {
    pub n_min: usize,
    pub n_max: usize,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub filters: Option<OrderFilters>,
    pub shortcuts: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub schema: String,
    pub search: String,
    pub parameters: SearchParameters,
    pub counts: Vec<CountRow>,
    /// Ascent sequences or one-line permutations.
    pub witnesses: Vec<String>,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
}

impl SearchReport {
    /// Equal up to wall-clock time.
    pub fn same_outcome(&self, other: &SearchReport) -> bool {
        self.search == other.search
            && self.parameters == other.parameters
            && self.counts == other.counts
            && self.witnesses == other.witnesses
    }
}

fn in_pool<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> Result<R> {
    match jobs {
        None => Ok(f()),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

fn serial_oracle() -> kcount::Options {
    kcount::Options { parallel: false, ..kcount::Options::default() }
}

pub fn passes_filters(order: &IntervalOrder, filters: OrderFilters) -> Result<bool> {
    if filters.four_plus_one_free && find_chain_plus_one(order, 4).is_some() {
        return Ok(false);
    }
    if filters.depth_at_most_2 && depth_order(order)? > 2 {
        return Ok(false);
    }
    Ok(true)
}

/// `Some(true)` if the order has at most two lengths.
fn order_is_two_count(order: &IntervalOrder, shortcuts: bool) -> Result<bool> {
    if shortcuts && two_count_height3(order).is_ok() {
        return Ok(true);
    }
    Ok(is_k_count_order_with(order, 2, serial_oracle())?.is_yes())
}

pub fn search_non_2count_orders(
    n_max: usize,
    filters: OrderFilters,
    opts: SearchOptions,
) -> Result<SearchReport> {
    if n_max > ORDER_SEARCH_GUARD && !opts.allow_large {
        return Err(Error::TooLarge { n: n_max, k: 2 });
    }
    let start = Instant::now();
    let mut counts = Vec::new();
    let mut witnesses = Vec::new();
    for n in 1..=n_max {
        let seqs: Vec<AscentSequence> = enumerate_ascent_sequences(n).collect();
        let per: Vec<Result<Option<bool>>> = in_pool(opts.jobs, || {
            seqs.par_iter()
                .map(|s| {
                    let o = order_from_ascent(s);
                    if !passes_filters(&o, filters)? {
                        return Ok(None);
                    }
                    Ok(Some(!order_is_two_count(&o, opts.shortcuts)?))
                })
                .collect()
        })?;
        let mut row = CountRow { n, total: seqs.len() as u64, examined: 0, witnesses: 0 };
        for (s, r) in seqs.iter().zip(per) {
            if let Some(bad) = r? {
                row.examined += 1;
                if bad {
                    row.witnesses += 1;
                    witnesses.push(s.to_string());
                }
            }
        }
        counts.push(row);
    }
    Ok(SearchReport {
        schema: SCHEMA.into(),
        search: "non-2count-orders".into(),
        parameters: SearchParameters { n_min: 1, n_max, k: 2, filters: Some(filters), shortcuts: opts.shortcuts },
        counts,
        witnesses,
        elapsed_ms: start.elapsed().as_millis() as u64,
        seed: None,
    })
}

/// Depth ≤ 2 is 2-count and so 3-count; depth ≥ 4 forces four lengths. With
/// shortcuts only depth 3 reaches the oracle.
pub fn search_non_3count_perms(n_max: usize, opts: SearchOptions) -> Result<SearchReport> {
    if n_max > PERM_SEARCH_GUARD && !opts.allow_large {
        return Err(Error::TooLarge { n: n_max, k: 3 });
    }
    let start = Instant::now();
    let mut counts = Vec::new();
    let mut witnesses = Vec::new();
    for n in 1..=n_max {
        let perms: Vec<Permutation> = enumerate_permutations(n).collect();
        let per: Vec<Result<Option<bool>>> = in_pool(opts.jobs, || {
            perms
                .par_iter()
                .map(|p| {
                    let d = perm_depth(p);
                    if opts.shortcuts && d != 3 {
                        return Ok(None);
                    }
                    if d > 3 {
                        // four nested intervals need four lengths
                        return Ok(Some(false));
                    }
                    Ok(Some(!is_k_count_perm_with(p, 3, serial_oracle())?.is_yes()))
                })
                .collect()
        })?;
        let mut row = CountRow { n, total: perms.len() as u64, examined: 0, witnesses: 0 };
        for (p, r) in perms.iter().zip(per) {
            if let Some(bad) = r? {
                row.examined += 1;
                if bad {
                    row.witnesses += 1;
                    witnesses.push(p.to_string());
                }
            }
        }
        counts.push(row);
    }
    Ok(SearchReport {
        schema: SCHEMA.into(),
        search: "non-3count-perms".into(),
        parameters: SearchParameters { n_min: 1, n_max, k: 3, filters: None, shortcuts: opts.shortcuts },
        counts,
        witnesses,
        elapsed_ms: start.elapsed().as_millis() as u64,
        seed: None,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureCheck {
    pub criterion: bool,
    pub two_count: bool,
    pub agree: bool,
}

/// Is there a red/green coloring with peels red, piths green, and no spring
/// whose forced colors all match?
pub fn spring_criterion(order: &IntervalOrder) -> Result<bool> {
    let n = order.len();
    let g = pp_graph(order);
    // None: free; Some(true): red
    let mut fixed: Vec<Option<bool>> = vec![None; n];
    for &p in &g.peels() {
        fixed[p] = Some(true);
    }
    for &p in &g.piths() {
        if fixed[p] == Some(true) {
            return Ok(false);
        }
        fixed[p] = Some(false);
    }
    let springs = find_springs(order);
    let free: Vec<usize> = (0..n).filter(|&x| fixed[x].is_none()).collect();
    // only free elements that sit in a spring's colored roles matter
    let relevant: Vec<usize> = free
        .into_iter()
        .filter(|&x| springs.iter().any(|w| w.long_elements().contains(&x) || w.short_elements().contains(&x)))
        .collect();
    if relevant.len() > 20 {
        return Err(Error::TooLarge { n: relevant.len(), k: 2 });
    }
    for mask in 0u32..(1 << relevant.len()) {
        let mut red = fixed.clone();
        for (b, &x) in relevant.iter().enumerate() {
            red[x] = Some(mask >> b & 1 == 1);
        }
        let hit = springs.iter().any(|w| {
            w.long_elements().iter().all(|&x| red[x] == Some(true))
                && w.short_elements().iter().all(|&x| red[x] == Some(false))
        });
        if !hit {
            return Ok(true);
        }
    }
    Ok(false)
}

pub fn conjecture_check(order: &IntervalOrder) -> Result<ConjectureCheck> {
    if find_chain_plus_one(order, 4).is_some() {
        return Err(Error::NotApplicable("order contains 4+1".into()));
    }
    let d = depth_order(order)?;
    if d > 2 {
        return Err(Error::NotApplicable(format!("depth {d} exceeds 2")));
    }
    let criterion = spring_criterion(order)?;
    let two_count = is_k_count_order_with(order, 2, kcount::Options::default())?.is_yes();
    Ok(ConjectureCheck { criterion, two_count, agree: criterion == two_count })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub schema: String,
    pub n_max: usize,
    pub applicable: Vec<u64>,
    /// Ascent sequences where the criterion and the oracle disagree.
    pub disagreements: Vec<String>,
    pub elapsed_ms: u64,
}

pub fn conjecture_search(n_max: usize, opts: SearchOptions) -> Result<ConjectureReport> {
    if n_max > ORDER_SEARCH_GUARD && !opts.allow_large {
        return Err(Error::TooLarge { n: n_max, k: 2 });
    }
    let start = Instant::now();
    let mut applicable = Vec::new();
    let mut disagreements = Vec::new();
    for n in 1..=n_max {
        let seqs: Vec<AscentSequence> = enumerate_ascent_sequences(n).collect();
        let per: Vec<Result<Option<bool>>> = in_pool(opts.jobs, || {
            seqs.par_iter()
                .map(|s| {
                    let o = order_from_ascent(s);
                    if !passes_filters(&o, OrderFilters::default())? {
                        return Ok(None);
                    }
                    let criterion = spring_criterion(&o)?;
                    let two = order_is_two_count(&o, opts.shortcuts)?;
                    Ok(Some(criterion == two))
                })
                .collect()
        })?;
        let mut count = 0;
        for (s, r) in seqs.iter().zip(per) {
            if let Some(agree) = r? {
                count += 1;
                if !agree {
                    disagreements.push(s.to_string());
                }
            }
        }
        applicable.push(count);
    }
    Ok(ConjectureReport {
        schema: SCHEMA.into(),
        n_max,
        applicable,
        disagreements,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Re-runs the oracle on every archived witness; returns the ones that no
/// longer check out.
pub fn reverify(report: &SearchReport) -> Result<Vec<String>> {
    let mut stale = Vec::new();
    for w in &report.witnesses {
        let still = match report.search.as_str() {
            "non-2count-orders" => {
                let o = order_from_ascent(&AscentSequence::parse(w)?);
                !is_k_count_order_with(&o, 2, kcount::Options { allow_large: true, ..Default::default() })?
                    .is_yes()
            }
            "non-3count-perms" => !is_k_count_perm_with(&Permutation::parse(w)?, 3, Default::default())?.is_yes(),
            other => return Err(Error::Parse(format!("unknown search kind {other:?}"))),
        };
        if !still {
            stale.push(w.clone());
        }
    }
    Ok(stale)
}

pub fn write_report<T: Serialize>(report: &T, dir: &Path, name: &str) -> Result<PathBuf> {
    std::fs::create_dir_all(dir).map_err(|e| Error::Parse(format!("{}: {e}", dir.display())))?;
    let path = dir.join(format!("{name}.json"));
    let text = serde_json::to_string_pretty(report).map_err(|e| Error::Internal(e.to_string()))?;
    std::fs::write(&path, text + "\n").map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    Ok(path)
}

pub fn read_report(path: &Path) -> Result<SearchReport> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))
}

//! Brute-force oracles, written independently of the library algorithms.
#![allow(dead_code)]

use intervalia::lp::{LinearSystem, Rel};
use intervalia::Rational;
use num_traits::{Signed, Zero};

/// Ascent sequences of length `n`, counted straight from the definition.
pub fn count_ascent_sequences(n: usize) -> u64 {
    fn go(left: usize, last: usize, asc: usize) -> u64 {
        if left == 0 {
            return 1;
        }
        (0..=asc + 1)
            .map(|v| go(left - 1, v, asc + usize::from(v > last)))
            .sum()
    }
    if n == 0 {
        0
    } else {
        go(n - 1, 0, 0)
    }
}

/// Longest decreasing subsequence by checking every subset.
pub fn lds_brute(values: &[usize]) -> usize {
    let n = values.len();
    let mut best = 0;
    for mask in 1u32..(1 << n) {
        let picked: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| values[i]).collect();
        if picked.windows(2).all(|w| w[0] > w[1]) {
            best = best.max(picked.len());
        }
    }
    best
}

/// Longest chain in a relation given as `lt(x, y)`, by DFS.
pub fn height_brute(n: usize, lt: impl Fn(usize, usize) -> bool) -> usize {
    fn dfs(x: usize, n: usize, lt: &dyn Fn(usize, usize) -> bool) -> usize {
        1 + (0..n).filter(|&y| lt(x, y)).map(|y| dfs(y, n, lt)).max().unwrap_or(0)
    }
    (0..n).map(|x| dfs(x, n, &lt)).max().unwrap_or(0)
}

#[derive(Clone)]
struct Ineq {
    a: Vec<Rational>,
    strict: bool,
    b: Rational,
}

/// Fourier–Motzkin elimination with strictness tracking. Exact.
pub fn fourier_motzkin_feasible(sys: &LinearSystem) -> bool {
    let n = sys.vars.len();
    // equalities first: solve each for one variable and substitute
    let mut eqs: Vec<(Vec<Rational>, Rational)> = Vec::new();
    let mut rows: Vec<Ineq> = Vec::new();
    for r in &sys.rows {
        match r.rel {
            Rel::Lt => rows.push(Ineq { a: r.a.clone(), strict: true, b: r.b.clone() }),
            Rel::Le => rows.push(Ineq { a: r.a.clone(), strict: false, b: r.b.clone() }),
            Rel::Eq => eqs.push((r.a.clone(), r.b.clone())),
        }
    }
    while let Some((a, b)) = eqs.pop() {
        let Some(j) = (0..n).find(|&j| !a[j].is_zero()) else {
            if !b.is_zero() {
                return false;
            }
            continue;
        };
        let sub = |c: &mut Vec<Rational>, d: &mut Rational| {
            let f = &c[j] / &a[j];
            if f.is_zero() {
                return;
            }
            for i in 0..n {
                c[i] = &c[i] - &f * &a[i];
            }
            *d = &*d - &f * &b;
        };
        for (c, d) in eqs.iter_mut() {
            sub(c, d);
        }
        for r in rows.iter_mut() {
            sub(&mut r.a, &mut r.b);
        }
    }
    rows = prune(rows);
    for j in 0..n {
        let (pos, rest): (Vec<Ineq>, Vec<Ineq>) = rows.into_iter().partition(|r| r.a[j].is_positive());
        let (neg, zero): (Vec<Ineq>, Vec<Ineq>) = rest.into_iter().partition(|r| r.a[j].is_negative());
        let mut next = zero;
        for p in &pos {
            for q in &neg {
                let fp = -q.a[j].clone();
                let fq = p.a[j].clone();
                let a: Vec<Rational> = (0..n).map(|i| &p.a[i] * &fp + &q.a[i] * &fq).collect();
                next.push(Ineq { a, strict: p.strict || q.strict, b: &p.b * &fp + &q.b * &fq });
            }
        }
        rows = prune(next);
        if rows.iter().any(|r| r.a.iter().all(|v| v.is_zero()) && !trivially_true(r)) {
            return false;
        }
    }
    rows.iter().all(trivially_true)
}

fn trivially_true(r: &Ineq) -> bool {
    if r.strict {
        Rational::zero() < r.b
    } else {
        Rational::zero() <= r.b
    }
}

// scale each row so its largest coefficient is ±1, then drop duplicates
// and rows with no variables left that hold anyway
fn prune(rows: Vec<Ineq>) -> Vec<Ineq> {
    let mut out: Vec<Ineq> = Vec::new();
    for mut r in rows {
        let m = r.a.iter().map(|v| v.abs()).max().unwrap_or_else(Rational::zero);
        if m.is_zero() {
            if trivially_true(&r) {
                continue;
            }
        } else {
            r.a.iter_mut().for_each(|v| *v = &*v / &m);
            r.b = &r.b / &m;
        }
        if !out.iter().any(|o| o.a == r.a && o.b == r.b && o.strict == r.strict) {
            out.push(r);
        }
    }
    out
}

/// Pith/peel pairs straight from 3+1 copies: `a < b < c` with `d` unrelated
/// to all three gives the arc `b → d`.
pub fn pp_arcs_brute(n: usize, lt: impl Fn(usize, usize) -> bool) -> std::collections::BTreeSet<(usize, usize)> {
    let inc = |x: usize, y: usize| x != y && !lt(x, y) && !lt(y, x);
    let mut arcs = std::collections::BTreeSet::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if !(lt(a, b) && lt(b, c)) {
                    continue;
                }
                for d in 0..n {
                    if inc(a, d) && inc(b, d) && inc(c, d) {
                        arcs.insert((b, d));
                    }
                }
            }
        }
    }
    arcs
}

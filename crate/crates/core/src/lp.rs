//! Exact feasibility for mixed strict / non-strict linear systems.
//!
//! Strict rows `a·x < b` are relaxed to `a·x + t ≤ b` with a shared margin
//! `0 ≤ t ≤ 1`; the system is feasible iff the maximum `t` is positive.
//! Free variables are split as `x_j = y_j − z`. The simplex is a dense
//! two-phase tableau with Bland's rule. It first runs over `Ratio<i128>` with
//! checked arithmetic and restarts over big rationals on overflow.

use std::fmt;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rel {
    Lt,
    Le,
    Eq,
}

impl Rel {
    pub fn symbol(self) -> &'static str {
        match self {
            Rel::Lt => "<",
            Rel::Le => "<=",
            Rel::Eq => "=",
        }
    }

    pub fn from_symbol(s: &str) -> Result<Rel> {
        match s {
            "<" => Ok(Rel::Lt),
            "<=" => Ok(Rel::Le),
            "=" => Ok(Rel::Eq),
            _ => Err(Error::MalformedSystem(format!("unknown relation {s:?}"))),
        }
    }

    pub fn holds(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Rel::Lt => lhs < rhs,
            Rel::Le => lhs <= rhs,
            Rel::Eq => lhs == rhs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub a: Vec<Rational>,
    pub rel: Rel,
    pub b: Rational,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LinearSystem {
    pub vars: Vec<String>,
    pub rows: Vec<Row>,
}

impl LinearSystem {
    pub fn new(vars: Vec<String>) -> Self {
        LinearSystem { vars, rows: Vec::new() }
    }

    pub fn n_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn add_row(&mut self, a: Vec<Rational>, rel: Rel, b: Rational) {
        self.rows.push(Row { a, rel, b });
    }

    /// Sparse integer form: `Σ coeff·x_var rel b`. Repeated variables add up.
    pub fn push(&mut self, terms: &[(usize, i64)], rel: Rel, b: i64) {
        let mut a = vec![<Rational as Zero>::zero(); self.vars.len()];
        for &(v, c) in terms {
            a[v] += rational::int(c);
        }
        self.add_row(a, rel, rational::int(b));
    }

    pub fn check(&self) -> Result<()> {
        for (i, row) in self.rows.iter().enumerate() {
            if row.a.len() != self.vars.len() {
                return Err(Error::MalformedSystem(format!(
                    "row {i} has {} coefficients for {} variables",
                    row.a.len(),
                    self.vars.len()
                )));
            }
        }
        Ok(())
    }

    /// First row the point fails, if any.
    pub fn violated_row(&self, x: &[Rational]) -> Option<usize> {
        self.rows.iter().position(|row| {
            let lhs: Rational = row.a.iter().zip(x).map(|(a, v)| a * v).sum();
            !row.rel.holds(&lhs, &row.b)
        })
    }

    /// Multiplies row `i` by a positive factor.
    pub fn scale_row(&mut self, i: usize, f: &Rational) {
        assert!(f.is_positive());
        let row = &mut self.rows[i];
        for a in &mut row.a {
            *a *= f;
        }
        row.b *= f;
    }
}

impl fmt::Display for LinearSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let mut first = true;
            for (a, v) in row.a.iter().zip(&self.vars) {
                if Zero::is_zero(a) {
                    continue;
                }
                if !first {
                    f.write_str(" + ")?;
                }
                first = false;
                write!(f, "{}·{}", rational::format(a), v)?;
            }
            if first {
                f.write_str("0")?;
            }
            writeln!(f, " {} {}", row.rel.symbol(), rational::format(&row.b))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    Feasible(Vec<Rational>),
    Infeasible,
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }

    pub fn witness(&self) -> Option<&[Rational]> {
        match self {
            Feasibility::Feasible(w) => Some(w),
            Feasibility::Infeasible => None,
        }
    }
}

/// Field operations that may refuse (overflow).
trait Scalar: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(r: &Rational) -> Option<Self>;
    fn to_rational(&self) -> Rational;
    fn is_zero(&self) -> bool;
    fn is_pos(&self) -> bool;
    fn add(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn div(&self, o: &Self) -> Option<Self>;
    fn lt(&self, o: &Self) -> bool;
}

type Small = Ratio<i128>;

impl Scalar for Small {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_rational(r: &Rational) -> Option<Self> {
        Some(Ratio::new_raw(r.numer().to_i128()?, r.denom().to_i128()?))
    }
    fn to_rational(&self) -> Rational {
        Rational::new(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_pos(&self) -> bool {
        Signed::is_positive(self)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(o)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        self.checked_div(o)
    }
    fn lt(&self, o: &Self) -> bool {
        self < o
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_rational(r: &Rational) -> Option<Self> {
        Some(r.clone())
    }
    fn to_rational(&self) -> Rational {
        self.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_pos(&self) -> bool {
        Signed::is_positive(self)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn div(&self, o: &Self) -> Option<Self> {
        Some(self / o)
    }
    fn lt(&self, o: &Self) -> bool {
        self < o
    }
}

struct Tableau<T> {
    rows: Vec<Vec<T>>,
    rhs: Vec<T>,
    basis: Vec<usize>,
    // reduced costs of the current objective (maximize)
    obj: Vec<T>,
    // columns that may not enter
    banned: Vec<bool>,
}

impl<T: Scalar> Tableau<T> {
    fn pivot(&mut self, p: usize, e: usize) -> Option<()> {
        let piv = self.rows[p][e].clone();
        if piv != T::one() {
            for v in self.rows[p].iter_mut() {
                if !v.is_zero() {
                    *v = v.div(&piv)?;
                }
            }
            self.rhs[p] = self.rhs[p].div(&piv)?;
        }
        let prow = self.rows[p].clone();
        let prhs = self.rhs[p].clone();
        let nz: Vec<usize> = (0..prow.len()).filter(|&j| !prow[j].is_zero()).collect();
        for i in 0..self.rows.len() {
            if i == p {
                continue;
            }
            let f = self.rows[i][e].clone();
            if f.is_zero() {
                continue;
            }
            for &j in &nz {
                let d = f.mul(&prow[j])?;
                self.rows[i][j] = self.rows[i][j].sub(&d)?;
            }
            self.rhs[i] = self.rhs[i].sub(&f.mul(&prhs)?)?;
        }
        let f = self.obj[e].clone();
        if !f.is_zero() {
            for &j in &nz {
                let d = f.mul(&prow[j])?;
                self.obj[j] = self.obj[j].sub(&d)?;
            }
        }
        self.basis[p] = e;
        Some(())
    }

    /// Runs to optimality. The objective is bounded in every use here.
    fn optimize(&mut self) -> Option<()> {
        loop {
            let Some(e) = (0..self.obj.len()).find(|&j| !self.banned[j] && self.obj[j].is_pos())
            else {
                return Some(());
            };
            let mut best: Option<(usize, T)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][e];
                if !a.is_pos() {
                    continue;
                }
                let ratio = self.rhs[i].div(a)?;
                let better = match &best {
                    None => true,
                    Some((bi, br)) => {
                        ratio.lt(br) || (ratio == *br && self.basis[i] < self.basis[*bi])
                    }
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            // unbounded cannot happen: every column is capped through t <= 1
            // or phase-one artificials
            let (p, _) = best?;
            self.pivot(p, e)?;
        }
    }
}

/// Outcome of one solve attempt; `None` means scalar overflow.
fn solve<T: Scalar>(sys: &LinearSystem) -> Option<Option<Vec<Rational>>> {
    let n = sys.n_vars();
    // columns: y_0..y_{n-1}, z, t, slacks, artificials
    let col_z = n;
    let col_t = n + 1;
    let mut cols = n + 2;
    struct Spec<T> {
        coef: Vec<(usize, T)>,
        slack: bool,
        b: T,
    }
    let mut specs: Vec<Spec<T>> = Vec::with_capacity(sys.rows.len() + 1);
    for row in &sys.rows {
        let mut coef = Vec::new();
        let mut zsum = T::zero();
        for (j, a) in row.a.iter().enumerate() {
            if !Zero::is_zero(a) {
                let v = T::from_rational(a)?;
                zsum = zsum.add(&v)?;
                coef.push((j, v));
            }
        }
        if !zsum.is_zero() {
            coef.push((col_z, T::zero().sub(&zsum)?));
        }
        if row.rel == Rel::Lt {
            coef.push((col_t, T::one()));
        }
        specs.push(Spec { coef, slack: row.rel != Rel::Eq, b: T::from_rational(&row.b)? });
    }
    specs.push(Spec { coef: vec![(col_t, T::one())], slack: true, b: T::one() });

    let m = specs.len();
    let slack_col: Vec<Option<usize>> = specs
        .iter()
        .map(|s| {
            s.slack.then(|| {
                cols += 1;
                cols - 1
            })
        })
        .collect();
    let first_art = cols;
    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let mut art_rows = Vec::new();
    // a row starts with its slack in the basis when b >= 0; rows with b < 0
    // are negated, and those and the equalities get an artificial
    let flips: Vec<bool> = specs.iter().map(|s| !s.b.is_pos() && !s.b.is_zero()).collect();
    let n_art = specs
        .iter()
        .zip(&flips)
        .filter(|(s, &f)| !s.slack || f)
        .count();
    let total = first_art + n_art;
    let mut next_art = first_art;
    for (i, s) in specs.iter().enumerate() {
        let mut row = vec![T::zero(); total];
        let sign_neg = flips[i];
        for (j, v) in &s.coef {
            row[*j] = if sign_neg { T::zero().sub(v)? } else { v.clone() };
        }
        let b = if sign_neg { T::zero().sub(&s.b)? } else { s.b.clone() };
        if let Some(sc) = slack_col[i] {
            row[sc] = if sign_neg { T::zero().sub(&T::one())? } else { T::one() };
        }
        if slack_col[i].is_some() && !sign_neg {
            basis.push(slack_col[i].unwrap());
        } else {
            row[next_art] = T::one();
            basis.push(next_art);
            art_rows.push(i);
            next_art += 1;
        }
        rows.push(row);
        rhs.push(b);
    }
    debug_assert_eq!(next_art, total);

    // phase one: maximize -Σ artificials
    let mut obj = vec![T::zero(); total];
    for &i in &art_rows {
        for j in 0..first_art {
            if !rows[i][j].is_zero() {
                obj[j] = obj[j].add(&rows[i][j])?;
            }
        }
    }
    let mut banned = vec![false; total];
    for b in banned.iter_mut().skip(first_art) {
        *b = true;
    }
    let mut tab = Tableau { rows, rhs, basis, obj, banned };
    if !art_rows.is_empty() {
        tab.optimize()?;
        for i in 0..tab.rows.len() {
            if tab.basis[i] >= first_art && !tab.rhs[i].is_zero() {
                return Some(None);
            }
        }
        // drive zero-valued artificials out, dropping redundant rows
        let mut i = 0;
        while i < tab.rows.len() {
            if tab.basis[i] >= first_art {
                match (0..first_art).find(|&j| !tab.rows[i][j].is_zero()) {
                    Some(e) => {
                        tab.pivot(i, e)?;
                        i += 1;
                    }
                    None => {
                        tab.rows.remove(i);
                        tab.rhs.remove(i);
                        tab.basis.remove(i);
                    }
                }
            } else {
                i += 1;
            }
        }
    }

    // phase two: maximize t
    let mut obj = vec![T::zero(); total];
    match tab.basis.iter().position(|&b| b == col_t) {
        Some(p) => {
            for j in 0..first_art {
                if j != col_t && !tab.rows[p][j].is_zero() {
                    obj[j] = T::zero().sub(&tab.rows[p][j])?;
                }
            }
        }
        None => obj[col_t] = T::one(),
    }
    tab.obj = obj;
    tab.optimize()?;

    let mut val = vec![T::zero(); first_art];
    for (i, &b) in tab.basis.iter().enumerate() {
        if b < first_art {
            val[b] = tab.rhs[i].clone();
        }
    }
    if !val[col_t].is_pos() {
        return Some(None);
    }
    let z = val[col_z].to_rational();
    Some(Some((0..n).map(|j| val[j].to_rational() - &z).collect()))
}

/// Decides whether some point satisfies every row with its exact relation.
pub fn lp_feasible_strict(sys: &LinearSystem) -> Result<Feasibility> {
    sys.check()?;
    let point = match solve::<Small>(sys) {
        Some(p) => p,
        None => solve::<Rational>(sys).expect("big rationals do not overflow"),
    };
    match point {
        None => Ok(Feasibility::Infeasible),
        Some(x) => {
            if let Some(i) = sys.violated_row(&x) {
                return Err(Error::Internal(format!("simplex witness violates row {i}")));
            }
            Ok(Feasibility::Feasible(x))
        }
    }
}

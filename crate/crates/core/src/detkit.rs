//! Determinant engines and the determinant identities they verify.
//!
//! Integer matrices go through Bareiss elimination, polynomial matrices
//! through cofactor expansion with memoized minors. Condensation is a third
//! engine used for cross-checks only.
//!
//! Each identity builds its matrix from `seqcore` values and compares the
//! determinant against an independently computed right side. Ratios of
//! determinants are compared cross-multiplied.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactring::{choose2, sign_pow, Bindings, Ring, RingMatrix, SparsePoly, Var};
use crate::hoggatt::{
    hoggatt_coeff, hoggatt_coeff_fib, hoggatt_coeff_general_symbolic, hoggatt_coeff_q, poly_to_json,
};
use crate::par::{map_ordered, Execution};
use crate::seqcore::{binomial, fibonomial, fibonomial_poly, q_binomial};

pub const DEFAULT_LAPLACE_BOUND: usize = 8;

/// Fraction-free elimination. Every division is exact in an integral domain.
pub fn det_bareiss<R: Ring>(m: &RingMatrix<R>) -> R {
    let n = m.dim();
    if n == 0 {
        return R::one();
    }
    let mut a: Vec<Vec<R>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut sign_flip = false;
    let mut prev = R::one();
    for c in 0..n - 1 {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return R::zero();
        };
        if p != c {
            a.swap(p, c);
            sign_flip = !sign_flip;
        }
        for i in c + 1..n {
            for j in c + 1..n {
                let v = a[i][j].mul_ref(&a[c][c]).sub_ref(&a[i][c].mul_ref(&a[c][j]));
                a[i][j] = v.exact_div(&prev).expect("Bareiss quotients are exact");
            }
            a[i][c] = R::zero();
        }
        prev = a[c][c].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign_flip {
        -det
    } else {
        det
    }
}

/// Cofactor expansion along rows, sharing minors over column subsets.
pub fn det_laplace<R: Ring>(m: &RingMatrix<R>) -> Result<R> {
    det_laplace_bounded(m, DEFAULT_LAPLACE_BOUND)
}

pub fn det_laplace_bounded<R: Ring>(m: &RingMatrix<R>, bound: usize) -> Result<R> {
    let n = m.dim();
    if n > bound || n >= usize::BITS as usize {
        return Err(Error::DimensionTooLarge { dim: n, bound });
    }
    // minors[mask] = signed sum over placements of the first |mask| rows into
    // the columns of `mask`
    let mut minors: Vec<R> = vec![R::zero(); 1 << n];
    minors[0] = R::one();
    for mask in 0usize..(1 << n) {
        if minors[mask].is_zero() {
            continue;
        }
        let row = mask.count_ones() as usize;
        if row == n {
            continue;
        }
        for col in 0..n {
            if mask & (1 << col) != 0 || m.get(row, col).is_zero() {
                continue;
            }
            let inversions = (mask >> (col + 1)).count_ones();
            let term = minors[mask].mul_ref(m.get(row, col));
            let slot = &mut minors[mask | (1 << col)];
            *slot = if inversions % 2 == 0 { slot.add_ref(&term) } else { slot.sub_ref(&term) };
        }
    }
    Ok(minors.pop().expect("table is nonempty"))
}

const CONDENSATION_RETRIES: u64 = 8;

/// Dodgson condensation on connected minors. When a connected minor
/// vanishes, the recurrence is retried on `L M U` for fixed unitriangular
/// `L`, `U` (same determinant); the error is returned once every retry fails.
pub fn det_condensation<R: Ring>(m: &RingMatrix<R>) -> Result<R> {
    let first = match condense(m) {
        Err(e @ Error::ZeroInteriorMinor { .. }) => e,
        other => return other,
    };
    for seed in 1..=CONDENSATION_RETRIES {
        let (l, u) = (unitriangular(m.dim(), seed, false), unitriangular(m.dim(), seed, true));
        if let Ok(det) = condense(&l.mul(m).mul(&u)) {
            return Ok(det);
        }
    }
    Err(first)
}

/// Unit diagonal with small nonzero entries on one side, from a fixed LCG.
fn unitriangular<R: Ring>(dim: usize, seed: u64, upper: bool) -> RingMatrix<R> {
    let mut state = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ u64::from(upper);
    RingMatrix::from_fn(dim, |i, j| {
        if i == j {
            R::one()
        } else if (j > i) == upper {
            state = state.wrapping_mul(6_364_136_223_846_793_005).wrapping_add(1_442_695_040_888_963_407);
            R::from_i64(((state >> 33) % 7) as i64 - 3)
        } else {
            R::zero()
        }
    })
}

fn condense<R: Ring>(m: &RingMatrix<R>) -> Result<R> {
    let n = m.dim();
    if n == 0 {
        return Ok(R::one());
    }
    let mut older: Vec<Vec<R>> = vec![vec![R::one(); n + 1]; n + 1];
    let mut cur: Vec<Vec<R>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    for step in 1..n {
        let size = n - step;
        let mut next = Vec::with_capacity(size);
        for i in 0..size {
            let mut row = Vec::with_capacity(size);
            for j in 0..size {
                let pivot = &older[i + 1][j + 1];
                if pivot.is_zero() {
                    return Err(Error::ZeroInteriorMinor { step, row: i + 1, col: j + 1 });
                }
                let cross = cur[i][j].mul_ref(&cur[i + 1][j + 1]).sub_ref(&cur[i][j + 1].mul_ref(&cur[i + 1][j]));
                row.push(cross.exact_div(pivot)?);
            }
            next.push(row);
        }
        older = std::mem::replace(&mut cur, next);
    }
    Ok(cur.swap_remove(0).swap_remove(0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    BinomialShifted2,
    BinomialToeplitz2,
    BinomialHankel,
    BinomialToeplitz,
    BinomialHankelUnit,
    BinomialToeplitzTransposed,
    BinomialShift,
    JacobiTrudi,
    QHankelUnit,
    QHankel,
    QToeplitz,
    QShift,
    QShiftCondensation,
    QJacobiTrudi,
    FibHankel,
    FibToeplitz,
    FibJacobiTrudi,
    StToeplitz,
    StJacobiTrudi,
    StHankel,
    StHankelShifted,
}

impl IdentityId {
    pub const ALL: [IdentityId; 21] = [
        IdentityId::BinomialShifted2,
        IdentityId::BinomialToeplitz2,
        IdentityId::BinomialHankel,
        IdentityId::BinomialToeplitz,
        IdentityId::BinomialHankelUnit,
        IdentityId::BinomialToeplitzTransposed,
        IdentityId::BinomialShift,
        IdentityId::JacobiTrudi,
        IdentityId::QHankelUnit,
        IdentityId::QHankel,
        IdentityId::QToeplitz,
        IdentityId::QShift,
        IdentityId::QShiftCondensation,
        IdentityId::QJacobiTrudi,
        IdentityId::FibHankel,
        IdentityId::FibToeplitz,
        IdentityId::FibJacobiTrudi,
        IdentityId::StToeplitz,
        IdentityId::StJacobiTrudi,
        IdentityId::StHankel,
        IdentityId::StHankelShifted,
    ];

    pub fn tag(self) -> &'static str {
        self.names()[0]
    }

    /// Canonical tag first, then accepted aliases.
    fn names(self) -> &'static [&'static str] {
        use IdentityId::*;
        match self {
            BinomialShifted2 => &["binomial-shifted-2x2", "eq4a"],
            BinomialToeplitz2 => &["binomial-toeplitz-2x2", "eq4b"],
            BinomialHankel => &["binomial-hankel", "eq8a", "eq8"],
            BinomialToeplitz => &["binomial-toeplitz", "eq8b"],
            BinomialHankelUnit => &["binomial-hankel-unit", "eq9"],
            BinomialToeplitzTransposed => &["binomial-toeplitz-transposed", "eq10"],
            BinomialShift => &["binomial-shift", "eq11"],
            JacobiTrudi => &["jacobi-trudi", "eq17"],
            QHankelUnit => &["q-hankel-unit", "eq25"],
            QHankel => &["q-hankel", "qmacmahon", "q-macmahon"],
            QToeplitz => &["q-toeplitz", "q-eq10"],
            QShift => &["q-shift", "eq26"],
            QShiftCondensation => &["q-shift-condensation", "eq26-condensation"],
            QJacobiTrudi => &["q-jacobi-trudi", "eq27"],
            FibHankel => &["fib-hankel", "eq37"],
            FibToeplitz => &["fib-toeplitz", "eq38"],
            FibJacobiTrudi => &["fib-jacobi-trudi", "eq39"],
            StToeplitz => &["st-toeplitz", "eq48"],
            StJacobiTrudi => &["st-jacobi-trudi", "eq51"],
            StHankel => &["st-hankel", "eq52"],
            StHankelShifted => &["st-hankel-shifted", "eq53"],
        }
    }

    /// Identities whose entries carry `q` or `s, t`.
    pub fn is_polynomial(self) -> bool {
        use IdentityId::*;
        matches!(
            self,
            QHankelUnit
                | QHankel
                | QToeplitz
                | QShift
                | QShiftCondensation
                | QJacobiTrudi
                | StToeplitz
                | StJacobiTrudi
                | StHankel
                | StHankelShifted
        )
    }

    pub fn uses_k(self) -> bool {
        !matches!(self, IdentityId::BinomialHankelUnit | IdentityId::QHankelUnit)
    }

    /// `Some(d)` when the identity is stated for one order only.
    pub fn fixed_d(self) -> Option<u32> {
        matches!(self, IdentityId::BinomialShifted2 | IdentityId::BinomialToeplitz2).then_some(2)
    }

    pub fn min_d(self) -> u32 {
        if self == IdentityId::QShiftCondensation {
            2
        } else {
            1
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.to_ascii_lowercase();
        IdentityId::ALL
            .into_iter()
            .find(|id| id.names().contains(&s.as_str()))
            .ok_or(Error::UnknownIdentity(s))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params {
    pub n: i64,
    pub k: i64,
    pub d: u32,
    /// Applied to both sides of the polynomial identities after evaluation.
    pub bindings: Bindings,
}

impl Params {
    pub fn new(n: i64, k: i64, d: u32) -> Self {
        Params { n, k, d, bindings: Bindings::new() }
    }

    pub fn with_bindings(mut self, bindings: Bindings) -> Self {
        self.bindings = bindings;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub params: Params,
    pub left: SparsePoly,
    pub right: SparsePoly,
    pub pass: bool,
}

impl IdentityReport {
    fn new(id: IdentityId, params: Params, left: SparsePoly, right: SparsePoly) -> Self {
        let left = left.substitute(&params.bindings);
        let right = right.substitute(&params.bindings);
        let pass = left == right;
        IdentityReport { id, params, left, right, pass }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "id": self.id.tag(),
            "n": self.params.n,
            "k": self.params.k,
            "d": self.params.d,
        });
        if !self.params.bindings.is_empty() {
            for (var, value) in self.params.bindings.iter() {
                v[var.name()] = poly_to_json(value);
            }
        }
        v["left"] = poly_to_json(&self.left);
        v["right"] = poly_to_json(&self.right);
        v["pass"] = Value::Bool(self.pass);
        v
    }
}

/// The matrix on the left side of an identity.
#[derive(Clone, Debug)]
pub enum BuiltMatrix {
    Integer(RingMatrix<BigInt>),
    Poly(RingMatrix<SparsePoly>),
}

fn dim(size: i64) -> usize {
    size.max(0) as usize
}

fn int_matrix(size: i64, f: impl Fn(i64, i64) -> BigInt) -> RingMatrix<BigInt> {
    RingMatrix::from_fn(dim(size), |i, j| f(i as i64, j as i64))
}

fn poly_matrix(size: i64, f: impl Fn(i64, i64) -> SparsePoly) -> RingMatrix<SparsePoly> {
    RingMatrix::from_fn(dim(size), |i, j| f(i as i64, j as i64))
}

fn q_pow(e: i64) -> SparsePoly {
    SparsePoly::var_pow(1, Var::Q, u32::try_from(e).expect("exponent is nonnegative"))
}

/// `(-t)^e` for `e >= 0`.
fn neg_t_pow(e: i64) -> SparsePoly {
    let e = u32::try_from(e).expect("exponent is nonnegative");
    SparsePoly::var_pow(sign_pow(e as i64), Var::T, e)
}

fn sum_of_squares_below(d: i64) -> i64 {
    (0..d).map(|j| j * j).sum()
}

/// Left-side matrix of `id` at `p`. The condensation identity has no matrix.
pub fn build_matrix(id: IdentityId, p: &Params) -> Option<BuiltMatrix> {
    use IdentityId::*;
    let (n, k, d) = (p.n, p.k, p.d as i64);
    let b = binomial;
    let m = match id {
        BinomialShifted2 => BuiltMatrix::Integer(int_matrix(2, |i, j| b(n + i + j, k + j))),
        BinomialToeplitz2 => BuiltMatrix::Integer(int_matrix(2, |i, j| b(n, k + i - j))),
        BinomialHankel => BuiltMatrix::Integer(int_matrix(d, |i, j| b(n + i + j, k + j))),
        BinomialToeplitz => BuiltMatrix::Integer(int_matrix(d, |i, j| b(n, k + i - j))),
        BinomialHankelUnit => BuiltMatrix::Integer(int_matrix(d, |i, j| b(n + i + j, j))),
        BinomialToeplitzTransposed => BuiltMatrix::Integer(int_matrix(d, |i, j| b(n, k + j - i))),
        BinomialShift => BuiltMatrix::Integer(int_matrix(d, |i, j| b(n + i, k + j))),
        JacobiTrudi => BuiltMatrix::Integer(int_matrix(k, |i, j| b(n + d + j - i - 1, n - 1))),
        QHankelUnit => BuiltMatrix::Poly(poly_matrix(d, |i, j| q_binomial(n + i + j, j))),
        QHankel => BuiltMatrix::Poly(poly_matrix(d, |i, j| q_binomial(n + i + j, k + j))),
        QToeplitz => BuiltMatrix::Poly(poly_matrix(d, |i, j| {
            &q_pow(choose2(j - i)) * &q_binomial(n, k - i + j)
        })),
        QShift => BuiltMatrix::Poly(poly_matrix(d, |i, j| q_binomial(n + i, k + j))),
        QShiftCondensation => return None,
        QJacobiTrudi => {
            BuiltMatrix::Poly(poly_matrix(k, |i, j| q_binomial(n + d + j - i - 1, n - 1)))
        }
        FibHankel => BuiltMatrix::Integer(int_matrix(d, |i, j| fibonomial(n + i + j, k + j))),
        FibToeplitz => BuiltMatrix::Integer(int_matrix(d, |i, j| {
            fibonomial(n, k - i + j) * sign_pow(choose2(i - j))
        })),
        FibJacobiTrudi => {
            BuiltMatrix::Integer(int_matrix(k, |i, j| fibonomial(n + d + j - i - 1, n - 1)))
        }
        StToeplitz => BuiltMatrix::Poly(poly_matrix(d, |i, j| {
            &neg_t_pow(choose2(i - j)) * &fibonomial_poly(n, k - j + i)
        })),
        StJacobiTrudi => {
            BuiltMatrix::Poly(poly_matrix(k, |i, j| fibonomial_poly(n + d + j - i - 1, n - 1)))
        }
        StHankel => BuiltMatrix::Poly(poly_matrix(d, |i, j| fibonomial_poly(n + i + j, k + j))),
        StHankelShifted => {
            BuiltMatrix::Poly(poly_matrix(d, |i, j| fibonomial_poly(n + i + k, k + j)))
        }
    };
    Some(m)
}

fn det_of(m: &BuiltMatrix) -> Result<SparsePoly> {
    Ok(match m {
        BuiltMatrix::Integer(m) => SparsePoly::from(det_bareiss(m)),
        BuiltMatrix::Poly(m) => det_laplace(m)?,
    })
}

fn int(v: BigInt) -> SparsePoly {
    SparsePoly::from(v)
}

/// `q^{C(d,2)(n-k)} <n, k>_{d,q}`, with `X(0, ., .) = 1`.
fn q_shift_value(d: i64, n: i64, k: i64) -> Result<SparsePoly> {
    if d == 0 {
        return Ok(SparsePoly::one());
    }
    if !(0 <= k && k <= n) {
        return Ok(SparsePoly::zero());
    }
    Ok(&q_pow(choose2(d) * (n - k)) * &hoggatt_coeff_q(n, k, d as u32)?)
}

pub fn verify_identity(id: IdentityId, params: &Params) -> Result<IdentityReport> {
    use IdentityId::*;
    let p = params;
    if p.d == 0 {
        return Err(Error::InvalidParameter("order d must be positive".into()));
    }
    if p.d < id.min_d() {
        return Err(Error::InvalidParameter(format!("{id} needs d >= {}", id.min_d())));
    }
    let (n, k) = (p.n, p.k);
    let d = id.fixed_d().unwrap_or(p.d);
    let di = d as i64;

    if id == QShiftCondensation {
        let left = &q_shift_value(di, n, k)? * &q_shift_value(di - 2, n + 1, k + 1)?;
        let right = &(&q_shift_value(di - 1, n, k)? * &q_shift_value(di - 1, n + 1, k + 1)?)
            - &(&q_shift_value(di - 1, n + 1, k)? * &q_shift_value(di - 1, n, k + 1)?);
        return Ok(IdentityReport::new(id, p.clone(), left, right));
    }

    let matrix = build_matrix(id, &Params { d, ..p.clone() }).expect("identity has a matrix");
    let det = det_of(&matrix)?;
    let (left, right) = match id {
        BinomialShifted2 | BinomialToeplitz2 | BinomialHankel | BinomialToeplitz
        | BinomialToeplitzTransposed | BinomialShift | JacobiTrudi => {
            (det, int(hoggatt_coeff(n, k, d)?))
        }
        BinomialHankelUnit => (det, SparsePoly::one()),
        QHankelUnit => (det, q_pow(n * choose2(di) + sum_of_squares_below(di))),
        QHankel => {
            let w = q_pow(n * choose2(di) + sum_of_squares_below(di));
            (det, &hoggatt_coeff_q(n, k, d)? * &w)
        }
        QToeplitz => (det, hoggatt_coeff_q(n, k, d)?),
        QShift => (det, q_shift_value(di, n, k)?),
        QJacobiTrudi => (det, &q_pow(di * choose2(k)) * &hoggatt_coeff_q(n, k, d)?),
        FibHankel => {
            let denom = det_bareiss(&int_matrix(di, |i, j| fibonomial(n + i + j, j)));
            (det, int(hoggatt_coeff_fib(n, k, d)? * denom))
        }
        FibToeplitz => (det, int(hoggatt_coeff_fib(n, k, d)?)),
        FibJacobiTrudi => {
            let signed = &det * &SparsePoly::constant(sign_pow(di * choose2(k)));
            (signed, int(hoggatt_coeff_fib(n, k, d)?))
        }
        StToeplitz => (det, hoggatt_coeff_general_symbolic(n, k, d)?),
        StJacobiTrudi => {
            (det, &neg_t_pow(di * choose2(k)) * &hoggatt_coeff_general_symbolic(n, k, d)?)
        }
        StHankel => {
            let denom = det_laplace(&poly_matrix(di, |i, j| fibonomial_poly(n + i + j, j)))?;
            (det, &hoggatt_coeff_general_symbolic(n, k, d)? * &denom)
        }
        StHankelShifted => {
            let denom = det_laplace(&poly_matrix(di, |i, j| fibonomial_poly(n + i, j)))?;
            (det, &hoggatt_coeff_general_symbolic(n + k, k, d)? * &denom)
        }
        QShiftCondensation => unreachable!(),
    };
    Ok(IdentityReport::new(id, Params { d, ..p.clone() }, left, right))
}

/// Sweep bounds: `d <= d_max` and `0 <= k <= n <= n_max`, separately for
/// integer and polynomial identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Grid {
    pub int_d_max: u32,
    pub int_n_max: i64,
    pub poly_d_max: u32,
    pub poly_n_max: i64,
}

impl Default for Grid {
    fn default() -> Self {
        Grid { int_d_max: 4, int_n_max: 8, poly_d_max: 3, poly_n_max: 6 }
    }
}

impl Grid {
    pub fn uniform(d_max: u32, n_max: i64) -> Self {
        Grid { int_d_max: d_max, int_n_max: n_max, poly_d_max: d_max, poly_n_max: n_max }
    }

    /// Parameter cells for `id`, ordered by `(d, n, k)`.
    pub fn cells(&self, id: IdentityId) -> Vec<Params> {
        let (d_max, n_max) = if id.is_polynomial() {
            (self.poly_d_max, self.poly_n_max)
        } else {
            (self.int_d_max, self.int_n_max)
        };
        let ds: Vec<u32> = match id.fixed_d() {
            Some(d) => vec![d],
            None => (id.min_d()..=d_max).collect(),
        };
        let mut out = Vec::new();
        for d in ds {
            for n in 0..=n_max {
                let ks = if id.uses_k() { 0..=n } else { 0..=0 };
                for k in ks {
                    out.push(Params::new(n, k, d));
                }
            }
        }
        out
    }
}

/// Reports in `(id, d, n, k)` order; the first evaluation error aborts the sweep.
pub fn sweep(grid: &Grid, ids: &[IdentityId], exec: Execution) -> Result<Vec<IdentityReport>> {
    let cells: Vec<(IdentityId, Params)> =
        ids.iter().flat_map(|&id| grid.cells(id).into_iter().map(move |p| (id, p))).collect();
    map_ordered(exec, &cells, |(id, p)| verify_identity(*id, p)).into_iter().collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepSummary {
    pub per_id: BTreeMap<IdentityId, (usize, usize)>,
}

impl SweepSummary {
    pub fn from_reports(reports: &[IdentityReport]) -> Self {
        let mut per_id: BTreeMap<IdentityId, (usize, usize)> = BTreeMap::new();
        for r in reports {
            let slot = per_id.entry(r.id).or_default();
            if r.pass {
                slot.0 += 1;
            } else {
                slot.1 += 1;
            }
        }
        SweepSummary { per_id }
    }

    pub fn passed(&self) -> usize {
        self.per_id.values().map(|c| c.0).sum()
    }

    pub fn failed(&self) -> usize {
        self.per_id.values().map(|c| c.1).sum()
    }

    pub fn to_json(&self) -> Value {
        let per_id: serde_json::Map<String, Value> = self
            .per_id
            .iter()
            .map(|(id, (p, f))| (id.tag().to_string(), json!({ "pass": p, "fail": f })))
            .collect();
        json!({ "passed": self.passed(), "failed": self.failed(), "per_identity": per_id })
    }
}

/// `a(d, n) = det((n+i+j, j)_F)` for `i, j < d`.
pub fn a_sequence(d: u32, n: i64) -> BigInt {
    det_bareiss(&int_matrix(d as i64, |i, j| fibonomial(n + i + j, j)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::p;

    fn ints(rows: &[&[i64]]) -> RingMatrix<BigInt> {
        RingMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect())
            .unwrap()
    }

    fn polys(rows: &[&[&str]]) -> RingMatrix<SparsePoly> {
        RingMatrix::from_rows(rows.iter().map(|r| r.iter().map(|s| p(s)).collect()).collect()).unwrap()
    }

    #[test]
    fn bareiss_examples() {
        assert_eq!(det_bareiss(&ints(&[&[2, 3], &[3, 6]])), BigInt::from(3));
        assert_eq!(det_bareiss(&RingMatrix::<BigInt>::identity(5)), BigInt::one());
        assert_eq!(det_bareiss(&ints(&[&[1, 1, 1], &[1, 1, 2], &[1, 2, 6]])), BigInt::from(-1));
        assert_eq!(det_bareiss(&RingMatrix::<BigInt>::identity(0)), BigInt::one());
        assert_eq!(det_bareiss(&ints(&[&[0, 1], &[0, 5]])), BigInt::zero());
    }

    #[test]
    fn laplace_examples() {
        assert_eq!(det_laplace(&polys(&[&["1 - x"]])).unwrap(), p("1 - x"));
        assert_eq!(det_laplace(&polys(&[&["1", "s"], &["t", "1"]])).unwrap(), p("1 - s*t"));
        let rep = polys(&[&["q", "s", "1"], &["t", "x", "2"], &["q", "s", "1"]]);
        assert!(det_laplace(&rep).unwrap().is_zero());
        let big = RingMatrix::<SparsePoly>::identity(9);
        assert_eq!(det_laplace(&big), Err(Error::DimensionTooLarge { dim: 9, bound: 8 }));
        assert_eq!(det_laplace_bounded(&big, 9).unwrap(), SparsePoly::one());
    }

    #[test]
    fn condensation_examples() {
        assert_eq!(det_condensation(&ints(&[&[2, 3], &[3, 6]])).unwrap(), BigInt::from(3));
        assert_eq!(det_condensation(&RingMatrix::<BigInt>::identity(4)).unwrap(), BigInt::one());
        let Some(BuiltMatrix::Poly(m)) = build_matrix(IdentityId::QShift, &Params::new(4, 2, 3)) else {
            panic!("expected a polynomial matrix");
        };
        let expected = &q_pow(3 * 2) * &hoggatt_coeff_q(4, 2, 3).unwrap();
        assert_eq!(det_condensation(&m).unwrap(), expected);
        assert_eq!(det_laplace(&m).unwrap(), expected);
    }

    #[test]
    fn condensation_reports_zero_minor() {
        let m = ints(&[&[1, 2, 3], &[4, 0, 6], &[7, 8, 9]]);
        assert!(matches!(condense(&m), Err(Error::ZeroInteriorMinor { step: 2, .. })));
        assert_eq!(det_condensation(&m).unwrap(), det_bareiss(&m));
        let zero = RingMatrix::<BigInt>::from_fn(3, |_, _| BigInt::zero());
        assert!(matches!(det_condensation(&zero), Err(Error::ZeroInteriorMinor { .. })));
    }

    #[test]
    fn identity_examples() {
        let r = verify_identity(IdentityId::BinomialHankel, &Params::new(4, 2, 2)).unwrap();
        assert!(r.pass);
        assert_eq!(r.left, SparsePoly::constant(20));
        let r = verify_identity("eq9".parse().unwrap(), &Params::new(3, 0, 4)).unwrap();
        assert!(r.pass);
        assert_eq!(r.right, SparsePoly::one());
        let r = verify_identity(IdentityId::FibToeplitz, &Params::new(4, 2, 3)).unwrap();
        assert!(r.pass);
        assert_eq!(r.left, SparsePoly::constant(300));
    }

    #[test]
    fn unknown_identity() {
        assert_eq!("bogus".parse::<IdentityId>(), Err(Error::UnknownIdentity("bogus".into())));
        for id in IdentityId::ALL {
            assert_eq!(id.tag().parse::<IdentityId>().unwrap(), id);
        }
    }

    #[test]
    fn specialized_polynomial_identity() {
        let params = Params::new(5, 2, 2).with_bindings(Bindings::new().bind(Var::S, 1).bind(Var::T, 1));
        let r = verify_identity(IdentityId::StToeplitz, &params).unwrap();
        assert!(r.pass);
        assert_eq!(r.left, SparsePoly::from(hoggatt_coeff_fib(5, 2, 2).unwrap()));
    }

    #[test]
    fn a_sequence_values() {
        assert_eq!(a_sequence(2, 3), BigInt::from(2));
        assert_eq!(a_sequence(3, 2), BigInt::from(7));
        for n in 0..6 {
            assert_eq!(a_sequence(1, n), BigInt::one());
        }
    }

    #[test]
    fn small_sweep_is_green_in_both_modes() {
        let grid = Grid::uniform(2, 3);
        let par = sweep(&grid, &IdentityId::ALL, Execution::Parallel).unwrap();
        let seq = sweep(&grid, &IdentityId::ALL, Execution::Sequential).unwrap();
        assert_eq!(par, seq);
        let summary = SweepSummary::from_reports(&par);
        assert_eq!(summary.failed(), 0, "{:?}", par.iter().find(|r| !r.pass));
        assert_eq!(summary.per_id.len(), IdentityId::ALL.len());
    }
}

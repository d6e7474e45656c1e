//! Carlitz polynomials, column generating series and Narayana numerators.
//!
//! The column series of a family is `sum_n <n+k, k> x^n`. Multiplying it by
//! the family's kernel polynomial of degree `dk+1` leaves a numerator whose
//! coefficients are the (generalized) Narayana numbers. Extraction works on
//! truncated series and reports whether the tail past the expected degree
//! vanishes; it never assumes it does.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactring::{choose2, sign_pow, Bindings, Monomial, Ring, SparsePoly, TruncatedSeries, Var};
use crate::hoggatt::{
    general_s0_d2, hoggatt_coeff, hoggatt_coeff_fib, hoggatt_coeff_general, hoggatt_coeff_q, Family,
    FamilyKind,
};
use crate::par::{map_ordered, Execution};
use crate::seqcore::{binomial, fibonomial, fibonomial_poly, lucas, lucas_poly, q_int};

fn x_pow(e: u32) -> SparsePoly {
    SparsePoly::var_pow(1, Var::X, e)
}

/// Replaces `x` by `c x`.
fn scale_x(p: &SparsePoly, c: &SparsePoly) -> SparsePoly {
    let mut out = SparsePoly::zero();
    for (e, coeff) in p.split_by(Var::X) {
        out += &(&coeff * &Ring::pow(c, e)) * &x_pow(e);
    }
    out
}

/// `h_k(x) = sum_j (-1)^{C(j+1,2)} (k, j)_F x^j`.
pub fn carlitz_h(k: u32) -> SparsePoly {
    let k = k as i64;
    SparsePoly::from_terms((0..=k).map(|j| {
        (Monomial::var(Var::X, j as u32), fibonomial(k, j) * sign_pow(choose2(j + 1)))
    }))
}

/// `u_n(x) = 1 - L_{n-1} x + (-1)^{n-1} x^2` for `n >= 2`, `u_1 = 1 - x`, `u_0 = 1`.
fn carlitz_u(n: u32) -> SparsePoly {
    match n {
        0 => SparsePoly::one(),
        1 => "1 - x".parse().expect("literal"),
        _ => {
            SparsePoly::one() - SparsePoly::from(lucas(n - 1)) * x_pow(1)
                + SparsePoly::constant(sign_pow(n as i64 - 1)) * x_pow(2)
        }
    }
}

/// `h_k(x) = prod_{j <= k/2} u_{k-2j}((-1)^j x)`.
pub fn carlitz_h_product(k: u32) -> SparsePoly {
    (0..=k / 2).fold(SparsePoly::one(), |acc, j| {
        let factor = scale_x(&carlitz_u(k - 2 * j), &SparsePoly::constant(sign_pow(j as i64)));
        &acc * &factor
    })
}

/// `h_k(x,s,t) = sum_j (-1)^{C(j+1,2)} t^{C(j,2)} (k, j)_{F(s,t)} x^j`.
pub fn h_general(k: u32) -> SparsePoly {
    let k = k as i64;
    let mut out = SparsePoly::zero();
    for j in 0..=k {
        let w = SparsePoly::var_pow(sign_pow(choose2(j + 1)), Var::T, choose2(j) as u32);
        out += &(&w * &fibonomial_poly(k, j)) * &x_pow(j as u32);
    }
    out
}

/// `(-t)^e`.
fn neg_t_pow(e: u32) -> SparsePoly {
    SparsePoly::var_pow(sign_pow(e as i64), Var::T, e)
}

/// `u_n(x,s,t) = 1 - L_{n-1}(s,t) x + (-t)^{n-1} x^2` for `n >= 2`.
fn general_u(n: u32) -> SparsePoly {
    match n {
        0 => SparsePoly::one(),
        1 => "1 - x".parse().expect("literal"),
        _ => SparsePoly::one() - &lucas_poly(n - 1) * &x_pow(1) + &neg_t_pow(n - 1) * &x_pow(2),
    }
}

/// `h_k(x,s,t) = prod_{j <= k/2} u_{k-2j}((-t)^j x, s, t)`.
pub fn h_general_product(k: u32) -> SparsePoly {
    (0..=k / 2).fold(SparsePoly::one(), |acc, j| &acc * &scale_x(&general_u(k - 2 * j), &neg_t_pow(j)))
}

/// `sum_{n < order} <n+k, k> x^n` for `family`.
pub fn column_gf(family: &Family, k: u32, order: usize) -> Result<TruncatedSeries<SparsePoly>> {
    let k = k as i64;
    let coeffs = (0..order as i64).map(|n| family.entry(n + k, k)).collect::<Result<Vec<_>>>()?;
    Ok(TruncatedSeries::new(coeffs))
}

/// Degree-`m` kernel: `(1-x)^m`, `prod_{j<m} (1 - q^j x)`, `h_m(x)` or
/// `h_m(x,s,t)` under the family's bindings.
pub fn kernel(family: &Family, m: u32) -> SparsePoly {
    match family.kind() {
        FamilyKind::Classic => Ring::pow(&"1 - x".parse::<SparsePoly>().expect("literal"), m),
        FamilyKind::Q => (0..m).fold(SparsePoly::one(), |acc, j| {
            let factor = SparsePoly::one() - SparsePoly::monomial(1, mono(&[(Var::Q, j), (Var::X, 1)]));
            &acc * &factor
        }),
        FamilyKind::Fib => carlitz_h(m),
        FamilyKind::General => h_general(m).substitute(family.bindings()),
    }
}

fn mono(exps: &[(Var, u32)]) -> Monomial {
    let mut e = [0u32; 4];
    for &(v, x) in exps {
        e[v.index()] = x;
    }
    Monomial::new(e)
}

/// `kernel(k+1) * sum_n <n+k, k> x^n == 1` through `order`, for `d = 1`.
pub fn reciprocal_check(family: &Family, k: u32, order: usize) -> Result<bool> {
    if family.d() != 1 {
        return Err(Error::InvalidParameter("reciprocal check needs d = 1".into()));
    }
    if order == 0 {
        return Err(Error::InvalidParameter("order must be positive".into()));
    }
    let h = TruncatedSeries::from_poly_in_x(&kernel(family, k + 1), order);
    Ok(h.mul(&column_gf(family, k, order)?).is_one())
}

pub fn expected_degree(d: u32, k: u32) -> u32 {
    (d - 1) * k.saturating_sub(1)
}

pub fn min_order(d: u32, k: u32) -> usize {
    (d * k + expected_degree(d, k)) as usize + 4
}

pub fn default_order(d: u32, k: u32) -> usize {
    min_order(d, k) + 4
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NarayanaReport {
    pub family: FamilyKind,
    pub d: u32,
    pub k: u32,
    pub order: usize,
    /// Product prefix through `order`, as a polynomial in `x`.
    pub numerator: SparsePoly,
    pub expected_degree: u32,
    pub degree: Option<u32>,
    pub degree_ok: bool,
    pub tail_zero: bool,
    pub palindromic: bool,
    /// Every `x`-coefficient palindromic in `q`; `q` family only.
    pub q_palindromic: Option<bool>,
    pub nonnegative: bool,
    /// Value at `x = 1` against the `d`-dimensional Catalan number; classic only.
    pub catalan_sum: Option<bool>,
}

impl NarayanaReport {
    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "family": self.family.tag(),
            "d": self.d,
            "k": self.k,
            "order": self.order,
            "numerator": self.numerator.to_string(),
            "expected_degree": self.expected_degree,
            "degree": self.degree,
            "degree_ok": self.degree_ok,
            "tail_zero": self.tail_zero,
            "palindromic": self.palindromic,
            "nonnegative": self.nonnegative,
        });
        if let Some(b) = self.q_palindromic {
            v["q_palindromic"] = Value::Bool(b);
        }
        if let Some(b) = self.catalan_sum {
            v["catalan_sum"] = Value::Bool(b);
        }
        v
    }
}

pub fn narayana_extract(family: &Family, k: u32, order: usize) -> Result<NarayanaReport> {
    let d = family.d();
    let required = min_order(d, k);
    if order < required {
        return Err(Error::OrderTooSmall { order, required });
    }
    let h = TruncatedSeries::from_poly_in_x(&kernel(family, d * k + 1), order);
    let product = h.mul(&column_gf(family, k, order)?);
    let numerator = product.to_poly_in_x();
    let expected = expected_degree(d, k);
    let degree = numerator.degree_in(Var::X);
    let tail_zero = product.coeffs().iter().skip(expected as usize + 1).all(Zero::is_zero);
    let q_palindromic = (family.kind() == FamilyKind::Q).then(|| {
        numerator.split_by(Var::X).values().all(|c| c.is_palindromic_in(Var::Q))
    });
    let catalan_sum = (family.kind() == FamilyKind::Classic).then(|| {
        let at_one = numerator.substitute(&Bindings::new().bind(Var::X, 1));
        let catalan = q_catalan(k, d).map(|c| c.substitute(&Bindings::new().bind(Var::Q, 1)));
        catalan.is_ok_and(|c| c == at_one)
    });
    Ok(NarayanaReport {
        family: family.kind(),
        d,
        k,
        order,
        palindromic: numerator.is_palindromic_in(Var::X),
        nonnegative: numerator.is_nonnegative(),
        degree_ok: degree == Some(expected),
        numerator,
        expected_degree: expected,
        degree,
        tail_zero,
        q_palindromic,
        catalan_sum,
    })
}

/// Closed form of the `d = 2` numerator for the family.
pub fn narayana_d2_closed_form(family: &Family, k: u32) -> Result<SparsePoly> {
    let k = k as i64;
    let mut out = SparsePoly::zero();
    for j in 0..k {
        let c = match family.kind() {
            FamilyKind::Classic => SparsePoly::from(hoggatt_coeff(k - 1, j, 2)?),
            FamilyKind::Q => {
                &SparsePoly::var_pow(1, Var::Q, (j * (j + 1)) as u32) * &hoggatt_coeff_q(k - 1, j, 2)?
            }
            FamilyKind::Fib => SparsePoly::from(hoggatt_coeff_fib(k - 1, j, 2)?),
            FamilyKind::General => {
                let w = SparsePoly::var_pow(1, Var::T, (j * j + j) as u32);
                (&w * &hoggatt_coeff_general(k - 1, j, 2, &Bindings::new())?).substitute(family.bindings())
            }
        };
        out += &c * &x_pow(j as u32);
    }
    Ok(out)
}

/// For `d = 2`, the extracted numerator equals its closed form. With the
/// general family at `s = 0` the closed form in floor binomials is checked
/// as well.
pub fn narayana_d2_exact(family: &Family, k: u32, order: usize) -> Result<bool> {
    if family.d() != 2 {
        return Err(Error::InvalidParameter("closed form is stated for d = 2".into()));
    }
    if k == 0 {
        return Err(Error::InvalidParameter("closed form needs k >= 1".into()));
    }
    let report = narayana_extract(family, k, order)?;
    let mut ok = report.tail_zero && report.numerator == narayana_d2_closed_form(family, k)?;
    if family.kind() == FamilyKind::General && family.bindings().get(Var::S).is_some_and(Zero::is_zero) {
        ok &= s0_identity_holds(k, order)?.substitute(family.bindings()).is_zero();
    }
    Ok(ok)
}

/// `sum_j C(floor((k-1)/2), floor(j/2)) C(floor(k/2), floor((j+1)/2)) t^{kj} x^j`.
pub fn s0_numerator(k: u32) -> SparsePoly {
    let k = k as i64;
    let mut out = SparsePoly::zero();
    for j in 0..=k {
        let c = binomial((k - 1) / 2, j / 2) * binomial(k / 2, (j + 1) / 2);
        out += SparsePoly::monomial(c, mono(&[(Var::T, (k * j) as u32), (Var::X, j as u32)]));
    }
    out
}

/// `(1 - t^k x)^{k+1} (1 + t^k x)^k`.
pub fn s0_kernel(k: u32) -> SparsePoly {
    let tk = SparsePoly::monomial(1, mono(&[(Var::T, k), (Var::X, 1)]));
    &Ring::pow(&(SparsePoly::one() - tk.clone()), k + 1) * &Ring::pow(&(SparsePoly::one() + tk), k)
}

/// Residual of the `s = 0`, `d = 2` identity through `order`: kernel times
/// the column series built from the floor-binomial closed form, minus
/// [`s0_numerator`]. Zero when the identity holds.
pub fn s0_identity_holds(k: u32, order: usize) -> Result<SparsePoly> {
    if k == 0 {
        return Err(Error::InvalidParameter("needs k >= 1".into()));
    }
    let series = TruncatedSeries::from_fn(order, |n| general_s0_d2(n as i64 + k as i64, k as i64));
    let lhs = TruncatedSeries::from_poly_in_x(&s0_kernel(k), order).mul(&series);
    let rhs = TruncatedSeries::from_poly_in_x(&s0_numerator(k), order);
    Ok(lhs.sub(&rhs).to_poly_in_x())
}

fn q_factorial(n: u32) -> SparsePoly {
    (1..=n).fold(SparsePoly::one(), |acc, j| &acc * &q_int(j))
}

/// `C_n^{(d)}(q) = [dn]_q! prod_{j<d} [j]_q! / [n+j]_q!`.
pub fn q_catalan(n: u32, d: u32) -> Result<SparsePoly> {
    if d == 0 {
        return Err(Error::InvalidParameter("order d must be positive".into()));
    }
    let mut num = q_factorial(d * n);
    let mut den = SparsePoly::one();
    for j in 0..d {
        num = &num * &q_factorial(j);
        den = &den * &q_factorial(n + j);
    }
    num.exact_div(&den)
}

/// The weighted row sum `sum_k q^{k(k+1)} <n, k>_{2,q}` matches the q-Catalan
/// number at index `n + Q_CATALAN_ROW_OFFSET`, fixed by agreement at `q = 1`.
pub const Q_CATALAN_ROW_OFFSET: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowSumReport {
    pub n: u32,
    pub offset: u32,
    pub row_sum: SparsePoly,
    pub catalan: SparsePoly,
    pub pass: bool,
}

pub fn q_catalan_row_sum(n: u32) -> Result<RowSumReport> {
    let mut row_sum = SparsePoly::zero();
    for k in 0..=n as i64 {
        row_sum += &SparsePoly::var_pow(1, Var::Q, (k * (k + 1)) as u32) * &hoggatt_coeff_q(n as i64, k, 2)?;
    }
    let catalan = q_catalan(n + Q_CATALAN_ROW_OFFSET, 2)?;
    Ok(RowSumReport { n, offset: Q_CATALAN_ROW_OFFSET, pass: row_sum == catalan, row_sum, catalan })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Conjecture {
    /// q family: polynomial numerator, palindromic nonnegative q-coefficients.
    QNarayana,
    /// Fibonacci family: polynomial numerator of the expected degree.
    FibNarayana,
    /// General family with the t-weighted kernel.
    StNarayana,
}

impl Conjecture {
    pub const ALL: [Conjecture; 3] = [Conjecture::QNarayana, Conjecture::FibNarayana, Conjecture::StNarayana];

    pub fn tag(self) -> &'static str {
        match self {
            Conjecture::QNarayana => "c10",
            Conjecture::FibNarayana => "c14",
            Conjecture::StNarayana => "c18",
        }
    }

    pub fn family(self, d: u32, bindings: &Bindings) -> Result<Family> {
        match self {
            Conjecture::QNarayana => Family::q(d),
            Conjecture::FibNarayana => Family::fib(d),
            Conjecture::StNarayana => Family::general(d, bindings.clone()),
        }
    }
}

impl fmt::Display for Conjecture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Conjecture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "c10" | "q" => Ok(Conjecture::QNarayana),
            "c14" | "fib" => Ok(Conjecture::FibNarayana),
            "c18" | "st" | "general" => Ok(Conjecture::StNarayana),
            other => Err(Error::InvalidParameter(format!("unknown conjecture `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeRecord {
    pub conjecture: Conjecture,
    pub report: NarayanaReport,
    /// False marks a counterexample candidate.
    pub consistent: bool,
}

impl ProbeRecord {
    pub fn to_json(&self) -> Value {
        let mut v = json!({ "conjecture": self.conjecture.tag() });
        if let (Value::Object(dst), Value::Object(src)) = (&mut v, self.report.to_json()) {
            dst.extend(src);
        }
        v["consistent"] = Value::Bool(self.consistent);
        v
    }
}

/// Evidence for `which` on each `(d, k)` cell at the default order. Never
/// fails on a counterexample; that is recorded in `consistent`.
pub fn conjecture_probe(
    which: Conjecture,
    cells: &[(u32, u32)],
    bindings: &Bindings,
    exec: Execution,
) -> Result<Vec<ProbeRecord>> {
    for &(d, k) in cells {
        if d < 2 || k < 1 {
            return Err(Error::InvalidParameter(format!("probe cells need d >= 2, k >= 1, got ({d}, {k})")));
        }
    }
    let reports = map_ordered(exec, cells, |&(d, k)| {
        let family = which.family(d, bindings)?;
        narayana_extract(&family, k, default_order(d, k))
    });
    reports
        .into_iter()
        .map(|r| {
            let report = r?;
            let mut consistent = report.tail_zero && report.degree_ok;
            if which == Conjecture::QNarayana {
                consistent &= report.q_palindromic == Some(true) && report.nonnegative;
            }
            Ok(ProbeRecord { conjecture: which, report, consistent })
        })
        .collect()
}

/// Cells `2 <= d <= d_max`, `1 <= k <= k_max`, ordered by `(d, k)`.
pub fn probe_grid(d_max: u32, k_max: u32) -> Vec<(u32, u32)> {
    (2..=d_max).flat_map(|d| (1..=k_max).map(move |k| (d, k))).collect()
}

/// `h_{2n}(x,0,t) = (1 - t^{2n-1} x^2)^n`; the other sign convention
/// differs by `(-1)^n`.
pub fn h_general_s0_even(n: u32) -> SparsePoly {
    if n == 0 {
        return SparsePoly::one();
    }
    let w = SparsePoly::monomial(1, mono(&[(Var::T, 2 * n - 1), (Var::X, 2)]));
    Ring::pow(&(SparsePoly::one() - w), n)
}

/// `h_{2n+1}(x,0,t) = (1 - t^n x)^{n+1} (1 + t^n x)^n`.
pub fn h_general_s0_odd(n: u32) -> SparsePoly {
    s0_kernel(n)
}

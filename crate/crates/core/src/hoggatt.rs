//! Hoggatt coefficients of order `d` for the classic, q, Fibonacci and
//! Fibonacci-polynomial families, and triangle generation.
//!
//! Every entry outside `0 <= k <= n` is the zero element. Quotients are
//! formed as one product over another and divided exactly; a remainder is
//! reported as [`Error::InexactDivision`].

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactring::{Bindings, Ring, SparsePoly, Var};
use crate::par::{map_ordered, Execution};
use crate::seqcore::{binomial, fibonomial, fibonomial_poly, q_binomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    Classic,
    Q,
    Fib,
    General,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 4] =
        [FamilyKind::Classic, FamilyKind::Q, FamilyKind::Fib, FamilyKind::General];

    pub fn tag(self) -> &'static str {
        match self {
            FamilyKind::Classic => "classic",
            FamilyKind::Q => "q",
            FamilyKind::Fib => "fib",
            FamilyKind::General => "general",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "classic" => Ok(FamilyKind::Classic),
            "q" => Ok(FamilyKind::Q),
            "fib" | "fibonacci" => Ok(FamilyKind::Fib),
            "general" | "st" => Ok(FamilyKind::General),
            other => Err(Error::InvalidParameter(format!("unknown family `{other}`"))),
        }
    }
}

/// A coefficient family of order `d >= 1`, with optional bindings applied to
/// every entry (typically `s`, `t` for the general family).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    kind: FamilyKind,
    d: u32,
    bindings: Bindings,
}

impl Family {
    pub fn new(kind: FamilyKind, d: u32, bindings: Bindings) -> Result<Self> {
        check_order(d)?;
        Ok(Family { kind, d, bindings })
    }

    pub fn classic(d: u32) -> Result<Self> {
        Self::new(FamilyKind::Classic, d, Bindings::new())
    }

    pub fn q(d: u32) -> Result<Self> {
        Self::new(FamilyKind::Q, d, Bindings::new())
    }

    pub fn fib(d: u32) -> Result<Self> {
        Self::new(FamilyKind::Fib, d, Bindings::new())
    }

    pub fn general(d: u32, bindings: Bindings) -> Result<Self> {
        Self::new(FamilyKind::General, d, bindings)
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn tag(&self) -> &'static str {
        self.kind.tag()
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn bindings(&self) -> &Bindings {
        &self.bindings
    }

    /// `<n, k>` of this family, as a polynomial (a constant for the integer
    /// families or under full specialization).
    pub fn entry(&self, n: i64, k: i64) -> Result<SparsePoly> {
        let raw = match self.kind {
            FamilyKind::Classic => SparsePoly::from(hoggatt_coeff(n, k, self.d)?),
            FamilyKind::Q => hoggatt_coeff_q(n, k, self.d)?,
            FamilyKind::Fib => SparsePoly::from(hoggatt_coeff_fib(n, k, self.d)?),
            FamilyKind::General => {
                if self.d == 2 && self.bindings.get(Var::S).is_some_and(Zero::is_zero) {
                    general_s0_d2(n, k)
                } else {
                    hoggatt_coeff_general_symbolic(n, k, self.d)?
                }
            }
        };
        Ok(raw.substitute(&self.bindings))
    }
}

fn check_order(d: u32) -> Result<()> {
    if d == 0 {
        return Err(Error::InvalidParameter("order d must be positive".into()));
    }
    Ok(())
}

fn in_triangle(n: i64, k: i64) -> bool {
    0 <= k && k <= n
}

/// `<n>_d = C(n+d-1, d)`.
pub fn hoggatt_bracket(n: i64, d: u32) -> BigInt {
    if n <= 0 {
        return BigInt::zero();
    }
    binomial(n + d as i64 - 1, d as i64)
}

/// `<n>_d! = <1>_d <2>_d ... <n>_d`.
pub fn hoggatt_factorial(n: u32, d: u32) -> BigInt {
    (1..=n as i64).map(|j| hoggatt_bracket(j, d)).product()
}

/// `<n>_d!` from `prod_{j<d} (n+j)! / (d-j)^{n+j}`, one exact quotient.
pub fn hoggatt_factorial_closed(n: u32, d: u32) -> Result<BigInt> {
    check_order(d)?;
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..d {
        num *= factorial(n + j);
        den *= Ring::pow(&BigInt::from(d - j), n + j);
    }
    num.exact_div(&den)
}

fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// `<n, k>_d = <n>_d! / (<k>_d! <n-k>_d!)`.
pub fn hoggatt_coeff(n: i64, k: i64, d: u32) -> Result<BigInt> {
    check_order(d)?;
    if !in_triangle(n, k) {
        return Ok(BigInt::zero());
    }
    let num = hoggatt_factorial(n as u32, d);
    let den = hoggatt_factorial(k as u32, d) * hoggatt_factorial((n - k) as u32, d);
    num.exact_div(&den)
}

/// `prod_{j<k} <n-j>_d / <k-j>_d`.
pub fn hoggatt_coeff_brackets(n: i64, k: i64, d: u32) -> Result<BigInt> {
    check_order(d)?;
    ratio_of_products(n, k, (0..k).map(|j| (hoggatt_bracket(n - j, d), hoggatt_bracket(k - j, d))))
}

/// `prod_{j<d} C(n+j, k) / C(k+j, k)`.
pub fn hoggatt_coeff_binomials(n: i64, k: i64, d: u32) -> Result<BigInt> {
    check_order(d)?;
    let d = d as i64;
    ratio_of_products(n, k, (0..d).map(|j| (binomial(n + j, k), binomial(k + j, k))))
}

/// `prod_{j<d} C(n+d-1, k+j) / C(n+d-1, j)`.
pub fn hoggatt_coeff_top(n: i64, k: i64, d: u32) -> Result<BigInt> {
    check_order(d)?;
    let d = d as i64;
    ratio_of_products(n, k, (0..d).map(|j| (binomial(n + d - 1, k + j), binomial(n + d - 1, j))))
}

fn ratio_of_products<R: Ring>(n: i64, k: i64, factors: impl Iterator<Item = (R, R)>) -> Result<R> {
    if !in_triangle(n, k) {
        return Ok(R::zero());
    }
    let (num, den) = factors.fold((R::one(), R::one()), |(a, b), (x, y)| (a.mul_ref(&x), b.mul_ref(&y)));
    num.exact_div(&den)
}

type MemoKey = (FamilyKind, u32, i64, i64);

static MEMO: LazyLock<RwLock<HashMap<MemoKey, SparsePoly>>> = LazyLock::new(Default::default);

fn memoized(key: MemoKey, compute: impl FnOnce() -> Result<SparsePoly>) -> Result<SparsePoly> {
    if let Some(v) = MEMO.read().expect("memo lock poisoned").get(&key) {
        return Ok(v.clone());
    }
    let v = compute()?;
    MEMO.write().expect("memo lock poisoned").entry(key).or_insert_with(|| v.clone());
    Ok(v)
}

/// `<n, k>_{d,q} = prod_{j<d} [n+j, k]_q / [k+j, k]_q`.
pub fn hoggatt_coeff_q(n: i64, k: i64, d: u32) -> Result<SparsePoly> {
    check_order(d)?;
    if !in_triangle(n, k) {
        return Ok(SparsePoly::zero());
    }
    memoized((FamilyKind::Q, d, n, k), || {
        let d = d as i64;
        ratio_of_products(n, k, (0..d).map(|j| (q_binomial(n + j, k), q_binomial(k + j, k))))
    })
}

/// `<n, k>_{d,F} = prod_{j<d} (n+j, k)_F / (k+j, k)_F`.
pub fn hoggatt_coeff_fib(n: i64, k: i64, d: u32) -> Result<BigInt> {
    check_order(d)?;
    let d = d as i64;
    ratio_of_products(n, k, (0..d).map(|j| (fibonomial(n + j, k), fibonomial(k + j, k))))
}

/// `<n, k>_{d,F(s,t)} = prod_{j<k} (n-j+d-1, d)_{F(s,t)} / (k-j+d-1, d)_{F(s,t)}`
/// with `s` and `t` symbolic.
pub fn hoggatt_coeff_general_symbolic(n: i64, k: i64, d: u32) -> Result<SparsePoly> {
    check_order(d)?;
    if !in_triangle(n, k) {
        return Ok(SparsePoly::zero());
    }
    memoized((FamilyKind::General, d, n, k), || {
        let d = d as i64;
        ratio_of_products(
            n,
            k,
            (0..k).map(|j| (fibonomial_poly(n - j + d - 1, d), fibonomial_poly(k - j + d - 1, d))),
        )
    })
}

/// The general family with `bindings` applied to the symbolic value.
pub fn hoggatt_coeff_general(n: i64, k: i64, d: u32, bindings: &Bindings) -> Result<SparsePoly> {
    Ok(hoggatt_coeff_general_symbolic(n, k, d)?.substitute(bindings))
}

/// `<n, k>_{2,F(0,t)} = t^{k(n-k)} C(floor(n/2), floor(k/2)) C(floor((n+1)/2), floor((k+1)/2))`.
pub fn general_s0_d2(n: i64, k: i64) -> SparsePoly {
    if !in_triangle(n, k) {
        return SparsePoly::zero();
    }
    let c = binomial(n / 2, k / 2) * binomial((n + 1) / 2, (k + 1) / 2);
    SparsePoly::var_pow(c, Var::T, (k * (n - k)) as u32)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Bfile,
    Pretty,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "bfile" | "b-file" => Ok(OutputFormat::Bfile),
            "pretty" => Ok(OutputFormat::Pretty),
            other => Err(Error::InvalidParameter(format!("unknown output format `{other}`"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct TriangleQuery {
    pub family: Family,
    pub first_row: u32,
    pub last_row: u32,
    pub format: OutputFormat,
}

impl TriangleQuery {
    pub fn new(family: Family, first_row: u32, last_row: u32) -> Result<Self> {
        if first_row > last_row {
            return Err(Error::InvalidParameter(format!(
                "empty row range {first_row}..{last_row}"
            )));
        }
        Ok(TriangleQuery { family, first_row, last_row, format: OutputFormat::default() })
    }

    pub fn with_format(mut self, format: OutputFormat) -> Self {
        self.format = format;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    pub family: FamilyKind,
    pub d: u32,
    pub first_row: u32,
    pub rows: Vec<Vec<SparsePoly>>,
}

/// Rows `first_row..=last_row`; cells are computed independently.
pub fn triangle(query: &TriangleQuery, exec: Execution) -> Result<Triangle> {
    let cells: Vec<(i64, i64)> = (query.first_row as i64..=query.last_row as i64)
        .flat_map(|n| (0..=n).map(move |k| (n, k)))
        .collect();
    let values = map_ordered(exec, &cells, |&(n, k)| query.family.entry(n, k));
    let mut values = values.into_iter();
    let mut rows = Vec::new();
    for n in query.first_row..=query.last_row {
        let row = values.by_ref().take(n as usize + 1).collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    Ok(Triangle { family: query.family.kind(), d: query.family.d(), first_row: query.first_row, rows })
}

/// A constant becomes a JSON number, anything else its canonical string.
pub fn poly_to_json(p: &SparsePoly) -> Value {
    match p.as_constant() {
        Some(c) => Value::Number(c.to_string().parse().expect("decimal integer is a JSON number")),
        None => Value::String(p.to_string()),
    }
}

impl Triangle {
    pub fn rows_in_order(&self) -> impl Iterator<Item = (u32, &Vec<SparsePoly>)> {
        (self.first_row..).zip(&self.rows)
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> =
            self.rows.iter().map(|row| Value::Array(row.iter().map(poly_to_json).collect())).collect();
        json!({ "family": self.family.tag(), "d": self.d, "rows": rows })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,k,value\n");
        for (n, row) in self.rows_in_order() {
            for (k, e) in row.iter().enumerate() {
                out.push_str(&format!("{n},{k},{}\n", csv_field(&e.to_string())));
            }
        }
        out
    }

    /// `index value` lines, reading the triangle by rows. The index is the
    /// 0-based position in the full triangle, so a range starting past row 0
    /// continues the numbering.
    pub fn to_bfile(&self) -> Result<String> {
        let mut out = String::new();
        for (n, row) in self.rows_in_order() {
            let base = n as u64 * (n as u64 + 1) / 2;
            for (k, e) in row.iter().enumerate() {
                let Some(c) = e.as_constant() else {
                    return Err(Error::InvalidParameter(format!(
                        "b-file entries must be integers, found `{e}` at ({n}, {k})"
                    )));
                };
                out.push_str(&format!("{} {c}\n", base + k as u64));
            }
        }
        Ok(out)
    }

    /// Right-aligned columns.
    pub fn to_pretty(&self) -> String {
        let text: Vec<Vec<String>> =
            self.rows.iter().map(|row| row.iter().map(ToString::to_string).collect()).collect();
        let cols = text.iter().map(Vec::len).max().unwrap_or(0);
        let widths: Vec<usize> = (0..cols)
            .map(|k| text.iter().filter_map(|r| r.get(k)).map(String::len).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for row in &text {
            let cells: Vec<String> =
                row.iter().enumerate().map(|(k, s)| format!("{s:>w$}", w = widths[k])).collect();
            out.push_str(cells.join("  ").trim_end());
            out.push('\n');
        }
        out
    }

    pub fn render(&self, format: OutputFormat) -> Result<String> {
        match format {
            OutputFormat::Json => Ok(self.to_json().to_string() + "\n"),
            OutputFormat::Csv => Ok(self.to_csv()),
            OutputFormat::Bfile => self.to_bfile(),
            OutputFormat::Pretty => Ok(self.to_pretty()),
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', ' ']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

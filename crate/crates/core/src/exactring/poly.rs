//! Sparse multivariate polynomials over the integers in the fixed alphabet
//! `x, q, s, t`.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose order is
//! graded lexicographic with `x < q < s < t`. Zero coefficients are never
//! stored, so structural equality is polynomial equality. The text form
//! prints terms by descending degree, e.g. `s^4 + 3*s^2*t + t^2`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ring::Ring;
use crate::error::{Error, Result};

/// Largest exponent a monomial may carry.
pub const MAX_EXPONENT: u32 = 1 << 31;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Var {
    X,
    Q,
    S,
    T,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::X, Var::Q, Var::S, Var::T];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Q => "q",
            Var::S => "s",
            Var::T => "t",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == name)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector over `(x, q, s, t)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial([u32; 4]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 4]);

    pub fn new(exps: [u32; 4]) -> Self {
        assert!(
            exps.iter().all(|&e| e <= MAX_EXPONENT),
            "exponent exceeds {MAX_EXPONENT}"
        );
        Monomial(exps)
    }

    pub fn var(v: Var, exp: u32) -> Self {
        let mut exps = [0; 4];
        exps[v.index()] = exp;
        Monomial::new(exps)
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn exps(&self) -> [u32; 4] {
        self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; 4]
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    fn with_exp(mut self, v: Var, exp: u32) -> Self {
        self.0[v.index()] = exp;
        self
    }
}

impl Mul for Monomial {
    type Output = Monomial;

    fn mul(self, rhs: Monomial) -> Monomial {
        let mut out = [0u32; 4];
        for (i, slot) in out.iter_mut().enumerate() {
            let e = self.0[i]
                .checked_add(rhs.0[i])
                .filter(|&e| e <= MAX_EXPONENT)
                .expect("monomial exponent overflow");
            *slot = e;
        }
        Monomial(out)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Values assigned to some of the variables, used by
/// [`SparsePoly::substitute`]. Unbound variables stay symbolic.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Bindings {
    values: [Option<SparsePoly>; 4],
}

impl Bindings {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn bind(mut self, v: Var, value: impl Into<SparsePoly>) -> Self {
        self.values[v.index()] = Some(value.into());
        self
    }

    pub fn set(&mut self, v: Var, value: Option<SparsePoly>) {
        self.values[v.index()] = value;
    }

    pub fn get(&self, v: Var) -> Option<&SparsePoly> {
        self.values[v.index()].as_ref()
    }

    pub fn is_empty(&self) -> bool {
        self.values.iter().all(Option::is_none)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Var, &SparsePoly)> {
        Var::ALL
            .into_iter()
            .filter_map(move |v| self.get(v).map(|p| (v, p)))
    }
}

impl fmt::Display for Bindings {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (v, p) in self.iter() {
            if !first {
                f.write_str(", ")?;
            }
            first = false;
            write!(f, "{v}={p}")?;
        }
        if first {
            f.write_str("symbolic")?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SparsePoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl SparsePoly {
    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, Monomial::ONE)
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(1, Monomial::var(v, 1))
    }

    pub fn monomial(c: impl Into<BigInt>, m: Monomial) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        SparsePoly { terms }
    }

    /// `c * v^e`.
    pub fn var_pow(c: impl Into<BigInt>, v: Var, e: u32) -> Self {
        Self::monomial(c, Monomial::var(v, e))
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut out = BTreeMap::new();
        for (m, c) in terms {
            accumulate(&mut out, m, c);
        }
        SparsePoly { terms: out }
    }

    /// Builds a univariate polynomial from its coefficient list, lowest first.
    pub fn from_coeffs(v: Var, coeffs: &[BigInt]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(v, i as u32), c.clone())),
        )
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The integer value of a constant polynomial.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    /// Highest exponent of `v`, `None` for the zero polynomial.
    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exp(v)).max()
    }

    pub fn min_degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exp(v)).min()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Variables that occur with a positive exponent.
    pub fn alphabet(&self) -> BTreeSet<Var> {
        Var::ALL
            .into_iter()
            .filter(|&v| self.terms.keys().any(|m| m.exp(v) > 0))
            .collect()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Groups terms by the exponent of `v`; each value has `v` removed.
    pub fn split_by(&self, v: Var) -> BTreeMap<u32, SparsePoly> {
        let mut out: BTreeMap<u32, SparsePoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.exp(v))
                .or_default()
                .terms
                .insert(m.with_exp(v, 0), c.clone());
        }
        out
    }

    /// Coefficient of `v^e`, as a polynomial in the remaining variables.
    pub fn coeff_of(&self, v: Var, e: u32) -> SparsePoly {
        SparsePoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exp(v) == e)
                .map(|(m, c)| (m.with_exp(v, 0), c.clone()))
                .collect(),
        }
    }

    /// Palindromic in `v`: the coefficient of `v^(lo+i)` equals the
    /// coefficient of `v^(hi-i)`, where `lo..=hi` is the occupied range.
    pub fn is_palindromic_in(&self, v: Var) -> bool {
        let parts = self.split_by(v);
        let (Some(&lo), Some(&hi)) = (parts.keys().next(), parts.keys().next_back()) else {
            return true;
        };
        parts
            .iter()
            .all(|(&e, c)| parts.get(&(lo + hi - e)) == Some(c))
    }

    pub fn mul_monomial(&self, c: &BigInt, m: Monomial) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero();
        }
        SparsePoly {
            terms: self.terms.iter().map(|(k, v)| (*k * m, v * c)).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> SparsePoly {
        self.mul_monomial(c, Monomial::ONE)
    }

    /// Replaces every bound variable by its value. Term-wise evaluation with
    /// cached powers of each bound value.
    pub fn substitute(&self, bindings: &Bindings) -> SparsePoly {
        if bindings.is_empty() {
            return self.clone();
        }
        let mut powers: [HashMap<u32, SparsePoly>; 4] = Default::default();
        let mut out = SparsePoly::zero();
        for (m, c) in &self.terms {
            let mut free = *m;
            let mut factor = SparsePoly::constant(c.clone());
            for v in Var::ALL {
                let Some(value) = bindings.get(v) else {
                    continue;
                };
                let e = m.exp(v);
                free = free.with_exp(v, 0);
                if e == 0 {
                    continue;
                }
                let p = powers[v.index()]
                    .entry(e)
                    .or_insert_with(|| Ring::pow(value, e));
                factor = factor.mul_ref(p);
            }
            out += factor.mul_monomial(&BigInt::one(), free);
        }
        out
    }

    /// Exact division. Uses leading terms under the graded order, which
    /// succeeds term by term exactly when the divisor divides `self`.
    pub fn exact_div(&self, divisor: &SparsePoly) -> Result<SparsePoly> {
        let Some((&lead_m, lead_c)) = divisor.leading_term() else {
            return Err(Error::DivisionByZero);
        };
        let lead_c = lead_c.clone();
        let inexact = || Error::InexactDivision {
            dividend: self.to_string(),
            divisor: divisor.to_string(),
        };
        let mut rem = self.clone();
        let mut quot = BTreeMap::new();
        while let Some((&m, c)) = rem.leading_term() {
            if !lead_m.divides(&m) {
                return Err(inexact());
            }
            let (qc, r) = num_integer::Integer::div_rem(c, &lead_c);
            if !r.is_zero() {
                return Err(inexact());
            }
            let mut qm = [0u32; 4];
            for (i, slot) in qm.iter_mut().enumerate() {
                *slot = m.0[i] - lead_m.0[i];
            }
            let qm = Monomial(qm);
            rem -= divisor.mul_monomial(&qc, qm);
            quot.insert(qm, qc);
        }
        Ok(SparsePoly { terms: quot })
    }

    fn add_assign_ref(&mut self, rhs: &SparsePoly) {
        for (m, c) in &rhs.terms {
            accumulate(&mut self.terms, *m, c.clone());
        }
    }

    fn sub_assign_ref(&mut self, rhs: &SparsePoly) {
        for (m, c) in &rhs.terms {
            accumulate(&mut self.terms, *m, -c);
        }
    }

    fn mul_impl(&self, rhs: &SparsePoly) -> SparsePoly {
        if self.is_zero() || rhs.is_zero() {
            return SparsePoly::zero();
        }
        let mut acc: HashMap<Monomial, BigInt> =
            HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *acc.entry(*ma * *mb).or_default() += ca * cb;
            }
        }
        SparsePoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

fn accumulate(terms: &mut BTreeMap<Monomial, BigInt>, m: Monomial, c: BigInt) {
    if c.is_zero() {
        return;
    }
    match terms.entry(m) {
        std::collections::btree_map::Entry::Vacant(slot) => {
            slot.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut slot) => {
            *slot.get_mut() += c;
            if slot.get().is_zero() {
                slot.remove();
            }
        }
    }
}

impl From<BigInt> for SparsePoly {
    fn from(c: BigInt) -> Self {
        SparsePoly::constant(c)
    }
}

impl From<i64> for SparsePoly {
    fn from(c: i64) -> Self {
        SparsePoly::constant(c)
    }
}

impl From<Var> for SparsePoly {
    fn from(v: Var) -> Self {
        SparsePoly::var(v)
    }
}

impl Zero for SparsePoly {
    fn zero() -> Self {
        SparsePoly::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for SparsePoly {
    fn one() -> Self {
        SparsePoly::constant(1)
    }
}

impl Add for SparsePoly {
    type Output = SparsePoly;

    fn add(mut self, rhs: SparsePoly) -> SparsePoly {
        self.add_assign_ref(&rhs);
        self
    }
}

impl Add<&SparsePoly> for &SparsePoly {
    type Output = SparsePoly;

    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl AddAssign for SparsePoly {
    fn add_assign(&mut self, rhs: SparsePoly) {
        self.add_assign_ref(&rhs);
    }
}

impl AddAssign<&SparsePoly> for SparsePoly {
    fn add_assign(&mut self, rhs: &SparsePoly) {
        self.add_assign_ref(rhs);
    }
}

impl Sub for SparsePoly {
    type Output = SparsePoly;

    fn sub(mut self, rhs: SparsePoly) -> SparsePoly {
        self.sub_assign_ref(&rhs);
        self
    }
}

impl Sub<&SparsePoly> for &SparsePoly {
    type Output = SparsePoly;

    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        out.sub_assign_ref(rhs);
        out
    }
}

impl SubAssign for SparsePoly {
    fn sub_assign(&mut self, rhs: SparsePoly) {
        self.sub_assign_ref(&rhs);
    }
}

impl SubAssign<&SparsePoly> for SparsePoly {
    fn sub_assign(&mut self, rhs: &SparsePoly) {
        self.sub_assign_ref(rhs);
    }
}

impl Mul for SparsePoly {
    type Output = SparsePoly;

    fn mul(self, rhs: SparsePoly) -> SparsePoly {
        self.mul_impl(&rhs)
    }
}

impl Mul<&SparsePoly> for &SparsePoly {
    type Output = SparsePoly;

    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        self.mul_impl(rhs)
    }
}

impl Neg for SparsePoly {
    type Output = SparsePoly;

    fn neg(mut self) -> SparsePoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;

    fn neg(self) -> SparsePoly {
        -self.clone()
    }
}

impl Ring for SparsePoly {
    fn from_i64(v: i64) -> Self {
        SparsePoly::constant(v)
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self.mul_impl(rhs)
    }

    fn exact_div(&self, divisor: &Self) -> Result<Self> {
        SparsePoly::exact_div(self, divisor)
    }

    fn unit_inverse(&self) -> Option<Self> {
        self.as_constant()
            .filter(|c| c.abs().is_one())
            .map(SparsePoly::constant)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for v in Var::ALL {
        let e = m.exp(v);
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{v}")?;
        } else {
            write!(f, "{v}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparsePoly({self})")
    }
}

impl Serialize for SparsePoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SparsePoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

impl FromStr for SparsePoly {
    type Err = Error;

    /// Parses sums, differences, products, integer powers and parentheses
    /// over integers and the variables `x, q, s, t`.
    fn from_str(text: &str) -> Result<Self> {
        let tokens = tokenize(text)?;
        let mut parser = Parser { tokens, pos: 0 };
        let p = parser.expr()?;
        if parser.pos != parser.tokens.len() {
            return Err(Error::Parse(format!("trailing input in `{text}`")));
        }
        Ok(p)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Var(Var),
    Plus,
    Minus,
    Star,
    Caret,
    Open,
    Close,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        match ch {
            c if c.is_whitespace() => {}
            '+' => out.push(Token::Plus),
            '-' => out.push(Token::Minus),
            '*' => out.push(Token::Star),
            '^' => out.push(Token::Caret),
            '(' => out.push(Token::Open),
            ')' => out.push(Token::Close),
            c if c.is_ascii_digit() => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..=i].iter().collect();
                out.push(Token::Int(digits.parse().expect("digits")));
            }
            c => {
                let v = Var::from_name(&c.to_string())
                    .ok_or_else(|| Error::Parse(format!("unexpected character `{c}`")))?;
                out.push(Token::Var(v));
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<SparsePoly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc += self.term()?;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc -= self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<SparsePoly> {
        let mut acc = self.unary()?;
        while self.peek() == Some(&Token::Star) {
            self.pos += 1;
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<SparsePoly> {
        if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<SparsePoly> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        match self.next() {
            Some(Token::Int(e)) => {
                let e: u32 = (&e)
                    .try_into()
                    .map_err(|_| Error::Parse(format!("exponent {e} out of range")))?;
                Ok(Ring::pow(&base, e))
            }
            other => Err(Error::Parse(format!("expected exponent, found {other:?}"))),
        }
    }

    fn atom(&mut self) -> Result<SparsePoly> {
        match self.next() {
            Some(Token::Int(c)) => Ok(SparsePoly::constant(c)),
            Some(Token::Var(v)) => Ok(SparsePoly::var(v)),
            Some(Token::Open) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token::Close) => Ok(inner),
                    other => Err(Error::Parse(format!("expected `)`, found {other:?}"))),
                }
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

/// Shorthand used throughout the tests.
#[cfg(test)]
pub(crate) fn p(text: &str) -> SparsePoly {
    text.parse().unwrap()
}

use std::fmt;

use num_traits::Zero;

use super::poly::{SparsePoly, Var};
use super::ring::Ring;
use crate::error::{Error, Result};

/// Prefix `c_0 .. c_{N-1}` of a formal power series in `x`. The order `N`
/// is part of the value; binary operations truncate to the smaller order.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> TruncatedSeries<R> {
    /// Series of order `coeffs.len()`.
    pub fn new(coeffs: Vec<R>) -> Self {
        TruncatedSeries { coeffs }
    }

    /// Takes the first `order` coefficients of `coeffs`, padding with zeros.
    pub fn with_order(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order, R::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> R) -> Self {
        TruncatedSeries { coeffs: (0..order).map(f).collect() }
    }

    pub fn zero(order: usize) -> Self {
        Self::with_order(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::with_order(vec![R::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> &R {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        TruncatedSeries { coeffs: self.coeffs[..order].to_vec() }
    }

    /// True when every retained coefficient matches the series `1`.
    pub fn is_one(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| if i == 0 { *c == R::one() } else { c.is_zero() })
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        Self::from_fn(n, |i| self.coeffs[i].add_ref(&rhs.coeffs[i]))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        Self::from_fn(n, |i| self.coeffs[i].sub_ref(&rhs.coeffs[i]))
    }

    pub fn scale(&self, c: &R) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|a| a.mul_ref(c)).collect() }
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let mut out = vec![R::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
                }
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// Reciprocal by the recursive convolution
    /// `b_n = -u * sum_{i=1..n} a_i b_{n-i}` with `u = 1/a_0`.
    pub fn invert(&self) -> Result<Self> {
        let n = self.order();
        if n == 0 {
            return Ok(self.clone());
        }
        let u = self.coeffs[0]
            .unit_inverse()
            .ok_or_else(|| Error::NonUnitConstantTerm(self.coeffs[0].to_string()))?;
        let mut out: Vec<R> = Vec::with_capacity(n);
        out.push(u.clone());
        for m in 1..n {
            let mut acc = R::zero();
            for i in 1..=m {
                let a = &self.coeffs[i];
                if !a.is_zero() {
                    acc = acc.add_ref(&a.mul_ref(&out[m - i]));
                }
            }
            out.push(-acc.mul_ref(&u));
        }
        Ok(TruncatedSeries { coeffs: out })
    }
}

impl TruncatedSeries<SparsePoly> {
    /// Reads the `x`-expansion of `p`; other variables stay in the coefficients.
    pub fn from_poly_in_x(p: &SparsePoly, order: usize) -> Self {
        let mut coeffs = vec![SparsePoly::zero(); order];
        for (e, c) in p.split_by(Var::X) {
            if let Some(slot) = coeffs.get_mut(e as usize) {
                *slot = c;
            }
        }
        TruncatedSeries { coeffs }
    }

    /// The retained prefix as a polynomial in `x`.
    pub fn to_poly_in_x(&self) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out += c * &SparsePoly::var_pow(1, Var::X, i as u32);
            }
        }
        out
    }
}

impl<R: Ring> fmt::Debug for TruncatedSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries[order {}](", self.order())?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

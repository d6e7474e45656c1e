//! Base sequences: Fibonacci and Lucas numbers and polynomials, binomials,
//! q-binomials and Fibonomials.
//!
//! Every coefficient family is built from its Pascal-style recurrence, so
//! all intermediate values stay in the ring. Results are memoized in
//! append-only tables behind a [`SeqCache`]; the module-level functions use a
//! process-wide instance.

use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactring::{SparsePoly, Var};

/// Append-only table indexed by `n`. A slot, once filled, never changes.
struct Grow<T> {
    items: RwLock<Vec<Arc<T>>>,
}

impl<T> Grow<T> {
    fn new() -> Self {
        Grow { items: RwLock::new(Vec::new()) }
    }

    fn get(&self, n: usize, mut next: impl FnMut(usize, &[Arc<T>]) -> T) -> Arc<T> {
        if let Some(v) = self.items.read().expect("cache lock poisoned").get(n) {
            return Arc::clone(v);
        }
        let mut items = self.items.write().expect("cache lock poisoned");
        while items.len() <= n {
            let i = items.len();
            let v = next(i, &items);
            items.push(Arc::new(v));
        }
        Arc::clone(&items[n])
    }
}

pub struct SeqCache {
    fib: Grow<BigInt>,
    lucas: Grow<BigInt>,
    fib_poly: Grow<SparsePoly>,
    lucas_poly: Grow<SparsePoly>,
    q_binomial: Grow<Vec<SparsePoly>>,
    fibonomial: Grow<Vec<BigInt>>,
    fibonomial_poly: Grow<Vec<SparsePoly>>,
}

impl Default for SeqCache {
    fn default() -> Self {
        Self::new()
    }
}

static GLOBAL: LazyLock<SeqCache> = LazyLock::new(SeqCache::new);

impl SeqCache {
    pub fn new() -> Self {
        SeqCache {
            fib: Grow::new(),
            lucas: Grow::new(),
            fib_poly: Grow::new(),
            lucas_poly: Grow::new(),
            q_binomial: Grow::new(),
            fibonomial: Grow::new(),
            fibonomial_poly: Grow::new(),
        }
    }

    pub fn global() -> &'static SeqCache {
        &GLOBAL
    }

    pub fn fibonacci(&self, n: u32) -> BigInt {
        let v = self.fib.get(n as usize, |i, prev| match i {
            0 => BigInt::zero(),
            1 => BigInt::one(),
            _ => &*prev[i - 1] + &*prev[i - 2],
        });
        (*v).clone()
    }

    pub fn lucas(&self, n: u32) -> BigInt {
        let v = self.lucas.get(n as usize, |i, prev| match i {
            0 => BigInt::from(2),
            1 => BigInt::one(),
            _ => &*prev[i - 1] + &*prev[i - 2],
        });
        (*v).clone()
    }

    /// `F_n(s,t)` from `F_n = s F_{n-1} + t F_{n-2}`, `F_0 = 0`, `F_1 = 1`.
    pub fn fib_poly(&self, n: u32) -> SparsePoly {
        let v = self.fib_poly.get(n as usize, |i, prev| match i {
            0 => SparsePoly::zero(),
            1 => SparsePoly::one(),
            _ => two_term(&prev[i - 1], &prev[i - 2]),
        });
        (*v).clone()
    }

    /// `L_n(s,t)` from the same recurrence with `L_0 = 2`, `L_1 = s`.
    pub fn lucas_poly(&self, n: u32) -> SparsePoly {
        let v = self.lucas_poly.get(n as usize, |i, prev| match i {
            0 => SparsePoly::constant(2),
            1 => SparsePoly::var(Var::S),
            _ => two_term(&prev[i - 1], &prev[i - 2]),
        });
        (*v).clone()
    }

    /// Gaussian coefficient `[n, k]_q` by `[n,k] = [n-1,k-1] + q^k [n-1,k]`.
    pub fn q_binomial(&self, n: i64, k: i64) -> SparsePoly {
        if n < 0 || k < 0 || k > n {
            return SparsePoly::zero();
        }
        let row = self.q_binomial.get(n as usize, |i, prev| {
            pascal_row(i, prev, |k, left, right| {
                left + &(right * &SparsePoly::var_pow(1, Var::Q, k as u32))
            })
        });
        row[k as usize].clone()
    }

    /// Fibonomial `(n, k)_F` by `(n,k) = F_{k+1} (n-1,k) + F_{n-k-1} (n-1,k-1)`.
    pub fn fibonomial(&self, n: i64, k: i64) -> BigInt {
        if n < 0 || k < 0 || k > n {
            return BigInt::zero();
        }
        let row = self.fibonomial.get(n as usize, |i, prev| {
            pascal_row(i, prev, |k, left, right| {
                self.fibonacci((k + 1) as u32) * right + self.fibonacci((i - k - 1) as u32) * left
            })
        });
        row[k as usize].clone()
    }

    /// `(n, k)_{F(s,t)}` by
    /// `(n,k) = F_{k+1}(s,t) (n-1,k) + t F_{n-k-1}(s,t) (n-1,k-1)`.
    pub fn fibonomial_poly(&self, n: i64, k: i64) -> SparsePoly {
        if n < 0 || k < 0 || k > n {
            return SparsePoly::zero();
        }
        let t = SparsePoly::var(Var::T);
        let row = self.fibonomial_poly.get(n as usize, |i, prev| {
            pascal_row(i, prev, |k, left, right| {
                let a = &self.fib_poly((k + 1) as u32) * right;
                let b = &(&t * &self.fib_poly((i - k - 1) as u32)) * left;
                a + b
            })
        });
        row[k as usize].clone()
    }
}

fn two_term(prev1: &SparsePoly, prev2: &SparsePoly) -> SparsePoly {
    let s = SparsePoly::var(Var::S);
    let t = SparsePoly::var(Var::T);
    &(&s * prev1) + &(&t * prev2)
}

/// Row `i` of a triangle with unit edges; interior entries come from
/// `interior(k, above_left, above)` where `above_left = T(i-1, k-1)` and
/// `above = T(i-1, k)`.
fn pascal_row<T: Clone + One>(
    i: usize,
    prev: &[Arc<Vec<T>>],
    mut interior: impl FnMut(usize, &T, &T) -> T,
) -> Vec<T> {
    if i == 0 {
        return vec![T::one()];
    }
    let above = &prev[i - 1];
    (0..=i)
        .map(|k| {
            if k == 0 || k == i {
                T::one()
            } else {
                interior(k, &above[k - 1], &above[k])
            }
        })
        .collect()
}

pub fn fibonacci(n: u32) -> BigInt {
    SeqCache::global().fibonacci(n)
}

pub fn lucas(n: u32) -> BigInt {
    SeqCache::global().lucas(n)
}

pub fn fib_poly(n: u32) -> SparsePoly {
    SeqCache::global().fib_poly(n)
}

pub fn lucas_poly(n: u32) -> SparsePoly {
    SeqCache::global().lucas_poly(n)
}

pub fn q_binomial(n: i64, k: i64) -> SparsePoly {
    SeqCache::global().q_binomial(n, k)
}

pub fn fibonomial(n: i64, k: i64) -> BigInt {
    SeqCache::global().fibonomial(n, k)
}

pub fn fibonomial_poly(n: i64, k: i64) -> SparsePoly {
    SeqCache::global().fibonomial_poly(n, k)
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    acc
}

/// q-integer `[n]_q = 1 + q + ... + q^{n-1}`.
pub fn q_int(n: u32) -> SparsePoly {
    SparsePoly::from_terms((0..n).map(|e| (crate::exactring::Monomial::var(Var::Q, e), BigInt::one())))
}

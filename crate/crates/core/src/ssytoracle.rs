//! Semistandard Young tableaux of rectangular shape `d^k` (k rows of length
//! d) with entries in `1..=n`: brute-force count and the hook-content product.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactring::Ring;
use crate::par::{map_ordered, Execution};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableauSpec {
    pub rows: u32,
    pub cols: u32,
    pub max_entry: u32,
}

impl TableauSpec {
    pub fn new(rows: u32, cols: u32, max_entry: u32) -> Result<Self> {
        if cols == 0 || max_entry == 0 {
            return Err(Error::InvalidParameter(format!(
                "tableau needs d >= 1 and n >= 1, got d = {cols}, n = {max_entry}"
            )));
        }
        Ok(TableauSpec { rows, cols, max_entry })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBudget {
    pub max_cells: u32,
    pub max_entry: u32,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget { max_cells: 12, max_entry: 8 }
    }
}

/// Weakly increasing rows of length `len` over `1..=n`, each strictly
/// above the matching cell of `above` when given.
fn rows_above(len: usize, n: u32, above: Option<&[u32]>) -> Vec<Vec<u32>> {
    fn go(len: usize, n: u32, above: Option<&[u32]>, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let j = cur.len();
        if j == len {
            out.push(cur.clone());
            return;
        }
        let lo = cur.last().copied().unwrap_or(1).max(above.map_or(1, |a| a[j] + 1));
        for v in lo..=n {
            cur.push(v);
            go(len, n, above, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(len, n, above, &mut Vec::with_capacity(len), &mut out);
    out
}

fn count_below(spec: &TableauSpec, above: &[u32], rows_left: u32) -> u64 {
    if rows_left == 0 {
        return 1;
    }
    rows_above(spec.cols as usize, spec.max_entry, Some(above))
        .iter()
        .map(|row| count_below(spec, row, rows_left - 1))
        .sum()
}

/// Row-by-row enumeration; the choices for the first row are split across
/// workers.
pub fn count_ssyt(spec: &TableauSpec, budget: &EnumerationBudget, exec: Execution) -> Result<BigInt> {
    let cells = spec.rows.saturating_mul(spec.cols);
    if cells > budget.max_cells || spec.max_entry > budget.max_entry {
        return Err(Error::EnumerationBudgetExceeded(format!(
            "{} cells with entries up to {} (limits {} and {})",
            cells, spec.max_entry, budget.max_cells, budget.max_entry
        )));
    }
    if spec.rows == 0 {
        return Ok(BigInt::one());
    }
    let firsts = rows_above(spec.cols as usize, spec.max_entry, None);
    let counts = map_ordered(exec, &firsts, |row| count_below(spec, row, spec.rows - 1));
    Ok(counts.into_iter().map(BigInt::from).sum())
}

/// `prod_{i,j} (n - i + j) / hook(i, j)` over cells `1 <= i <= k`,
/// `1 <= j <= d`, accumulated separately and divided once.
pub fn hook_content_count(spec: &TableauSpec) -> Result<BigInt> {
    let (k, d, n) = (spec.rows as i64, spec.cols as i64, spec.max_entry as i64);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 1..=k {
        for j in 1..=d {
            num *= n - i + j;
            den *= (k - i) + (d - j) + 1;
        }
    }
    num.exact_div(&den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seqcore::binomial;

    fn spec(k: u32, d: u32, n: u32) -> TableauSpec {
        TableauSpec::new(k, d, n).unwrap()
    }

    fn count(s: TableauSpec) -> BigInt {
        count_ssyt(&s, &EnumerationBudget::default(), Execution::Sequential).unwrap()
    }

    #[test]
    fn small_counts() {
        assert_eq!(count(spec(1, 1, 5)), BigInt::from(5));
        assert_eq!(count(spec(2, 1, 4)), BigInt::from(6));
        assert_eq!(count(spec(1, 3, 3)), BigInt::from(10));
        assert_eq!(count(spec(0, 2, 3)), BigInt::one());
        assert_eq!(count(spec(3, 1, 2)), BigInt::from(0));
    }

    #[test]
    fn hook_content_examples() {
        assert_eq!(hook_content_count(&spec(0, 3, 4)).unwrap(), BigInt::one());
        assert_eq!(hook_content_count(&spec(2, 2, 4)).unwrap(), BigInt::from(20));
        assert_eq!(hook_content_count(&spec(1, 2, 3)).unwrap(), BigInt::from(6));
        assert_eq!(hook_content_count(&spec(3, 1, 2)).unwrap(), BigInt::from(0));
    }

    #[test]
    fn single_column_is_binomial() {
        for n in 1..=8 {
            for k in 0..=8 {
                assert_eq!(count(spec(k, 1, n)), binomial(n as i64, k as i64), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn parallel_split_agrees() {
        let s = spec(3, 3, 6);
        let seq = count(s);
        let par = count_ssyt(&s, &EnumerationBudget::default(), Execution::Parallel).unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn budget_guard() {
        let big = spec(4, 4, 6);
        assert!(matches!(
            count_ssyt(&big, &EnumerationBudget::default(), Execution::Sequential),
            Err(Error::EnumerationBudgetExceeded(_))
        ));
        let roomy = EnumerationBudget { max_cells: 16, max_entry: 8 };
        assert_eq!(count_ssyt(&spec(4, 4, 5), &roomy, Execution::Parallel).unwrap(), hook_content_count(&spec(4, 4, 5)).unwrap());
        assert!(TableauSpec::new(1, 0, 3).is_err());
    }
}

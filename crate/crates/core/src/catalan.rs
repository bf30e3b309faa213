//! s-Catalan and spin s-Catalan numbers, and the two reference tables.

use crate::count::Count;
use crate::partitions::HalfInt;
use crate::sbinomial::sbinom_row;

/// The nth s-Catalan number: central minus next-to-central coefficient of
/// (1 + ... + x^s)^{2n}.
pub fn s_catalan<C: Count>(n: usize, s: usize) -> C {
    assert!(n >= 1 && s >= 1, "s_catalan needs n, s >= 1");
    let row = sbinom_row::<C>(2 * n, s);
    let mid = (s * n) as i64;
    row.get(mid) - row.get(mid + 1)
}

/// The nth spin s-Catalan number, s a positive half-integer: the difference
/// of the coefficients at s·n+s and s·n+s+1 in (1 + ... + x^{2s})^n, and 0
/// by convention when n is even and s is not an integer.
pub fn spin_s_catalan<C: Count>(n: usize, s: HalfInt) -> C {
    assert!(n >= 1, "spin_s_catalan needs n >= 1");
    if n.is_multiple_of(2) && !s.is_integer() {
        return C::zero();
    }
    let t = s.twice() as usize;
    // s·n + s = t(n+1)/2, an integer exactly when n is odd or t is even.
    let k = (t * (n + 1) / 2) as i64;
    let row = sbinom_row::<C>(n, t);
    row.get(k) - row.get(k + 1)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TableKind {
    SCatalan,
    SpinSCatalan,
}

/// A materialized table of (spin) s-Catalan numbers: rows indexed by n from
/// 1, columns by s ascending (integer steps for s-Catalan, half-integer
/// steps for the spin table).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalanTable<C> {
    pub kind: TableKind,
    pub cols: Vec<HalfInt>,
    pub values: Vec<Vec<C>>,
}

pub fn build_table<C: Count>(kind: TableKind, n_max: usize, s_max: HalfInt) -> CatalanTable<C> {
    let cols: Vec<HalfInt> = match kind {
        TableKind::SCatalan => (1..=s_max.twice() / 2)
            .map(HalfInt::from_int)
            .collect(),
        TableKind::SpinSCatalan => (1..=s_max.twice())
            .map(|t| HalfInt::from_twice(t).unwrap())
            .collect(),
    };
    let values = (1..=n_max)
        .map(|n| {
            cols.iter()
                .map(|&s| match kind {
                    TableKind::SCatalan => s_catalan(n, s.as_integer() as usize),
                    TableKind::SpinSCatalan => spin_s_catalan(n, s),
                })
                .collect()
        })
        .collect();
    CatalanTable { kind, cols, values }
}

impl<C: Count> CatalanTable<C> {
    /// CSV with a header row; columns keyed by the exact strings
    /// "1/2", "1", "3/2", ... so golden-file diffs stay stable.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n");
        for c in &self.cols {
            out.push(',');
            out.push_str(&c.to_string());
        }
        out.push('\n');
        for (i, row) in self.values.iter().enumerate() {
            out.push_str(&(i + 1).to_string());
            for v in row {
                out.push(',');
                out.push_str(&v.to_string());
            }
            out.push('\n');
        }
        out
    }
}

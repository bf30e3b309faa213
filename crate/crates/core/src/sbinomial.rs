//! s-binomial coefficients: the coefficient of x^k in (1 + x + ... + x^s)^n.
//!
//! Rows are built by exact convolution with a sliding-window update, so each
//! of the n-1 multiplications is linear in the row length. Freund's
//! restricted-occupancy model (k objects in n boxes, at most s per box) is
//! implemented separately as a brute-force oracle.

use crate::count::Count;
use crate::error::Error;

/// Default cap on n·s for the brute-force occupancy oracle.
pub const DEFAULT_ORACLE_BOUND: usize = 30;

/// One full coefficient row of (1 + x + ... + x^s)^n, indices 0..=s·n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffRow<C> {
    pub n: usize,
    pub s: usize,
    coeffs: Vec<C>,
}

impl<C: Count> CoeffRow<C> {
    /// Coefficient at `k`, zero outside 0..=s·n.
    pub fn get(&self, k: i64) -> C {
        if k < 0 || k as usize >= self.coeffs.len() {
            C::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn sum(&self) -> C {
        self.coeffs
            .iter()
            .fold(C::zero(), |acc, c| acc + c.clone())
    }

    pub fn is_palindromic(&self) -> bool {
        let m = self.coeffs.len();
        (0..m / 2).all(|k| self.coeffs[k] == self.coeffs[m - 1 - k])
    }
}

/// Coefficient row of (1 + x + ... + x^s)^n.
///
/// Each multiplication by (1 + ... + x^s) uses the window identity
/// new[k] = new[k-1] + old[k] - old[k-s-1].
pub fn sbinom_row<C: Count>(n: usize, s: usize) -> CoeffRow<C> {
    assert!(n >= 1 && s >= 1, "sbinom_row needs n, s >= 1");
    let mut coeffs: Vec<C> = vec![C::one(); s + 1];
    for step in 2..=n {
        let old = coeffs;
        let len = step * s + 1;
        let mut next: Vec<C> = Vec::with_capacity(len);
        next.push(C::one());
        for k in 1..len {
            let mut v = next[k - 1].clone();
            if k < old.len() {
                v = v + old[k].clone();
            }
            if k > s {
                v = v - old[k - s - 1].clone();
            }
            next.push(v);
        }
        coeffs = next;
    }
    CoeffRow { n, s, coeffs }
}

/// The s-binomial coefficient: x^k coefficient of (1 + ... + x^s)^n,
/// zero for k outside 0..=s·n.
pub fn sbinom<C: Count>(n: usize, k: i64, s: usize) -> C {
    sbinom_row::<C>(n, s).get(k)
}

/// Brute-force occupancy count with the default bound.
pub fn occupancy_oracle<C: Count>(n: usize, k: usize, s: usize) -> Result<C, Error> {
    occupancy_oracle_with_bound(n, k, s, DEFAULT_ORACLE_BOUND)
}

/// Counts vectors (b_1, ..., b_n) with 0 <= b_i <= s and sum k by exhaustive
/// enumeration. Independent of the convolution path; refuses to run past
/// the bound so it is not misused at scale.
pub fn occupancy_oracle_with_bound<C: Count>(
    n: usize,
    k: usize,
    s: usize,
    bound: usize,
) -> Result<C, Error> {
    if n * s > bound {
        return Err(Error::OracleBound {
            actual: n * s,
            limit: bound,
        });
    }
    fn count_rec<C: Count>(boxes_left: usize, remaining: usize, s: usize, acc: &mut C) {
        if boxes_left == 0 {
            if remaining == 0 {
                *acc = acc.clone() + C::one();
            }
            return;
        }
        for b in 0..=s {
            if b <= remaining {
                count_rec(boxes_left - 1, remaining - b, s, acc);
            }
        }
    }
    let mut acc = C::zero();
    count_rec(n, k, s, &mut acc);
    Ok(acc)
}

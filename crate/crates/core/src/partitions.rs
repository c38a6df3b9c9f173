//! Restricted partition counts and Gaussian binomial coefficients.
//!
//! `p(M, N; d)` counts partitions of `d` into at most `M` parts, each of size
//! at most `N`. These counts are exactly the coefficients of the Gaussian
//! binomial coefficient, and the crate keeps both computation paths (DP
//! recurrence and polynomial product formula) so they can be cross-checked.

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::Error;
use crate::poly::Polynomial;

/// Memoized table of restricted partition counts.
///
/// Uses the recurrence `p(M, N; d) = p(M, N-1; d) + p(M-1, N; d-N)`, which
/// splits on whether some part equals `N`.
#[derive(Debug, Default)]
pub struct PartitionTable {
    memo: HashMap<(usize, usize, u64), BigUint>,
}

impl PartitionTable {
    pub fn new() -> Self {
        PartitionTable::default()
    }

    /// `p(M, N; d)`: partitions of `d` into at most `m` parts, each `<= n`.
    /// Zero for `d < 0` or `d > m*n`.
    pub fn count(&mut self, m: usize, n: usize, d: i64) -> BigUint {
        if d < 0 {
            return BigUint::zero();
        }
        let d = d as u64;
        if d == 0 {
            return BigUint::one();
        }
        if d > (m as u64) * (n as u64) {
            return BigUint::zero();
        }
        if let Some(v) = self.memo.get(&(m, n, d)) {
            return v.clone();
        }
        // Here m >= 1, n >= 1 and 1 <= d <= m*n.
        let without_max = self.count(m, n - 1, d as i64);
        let with_max = self.count(m - 1, n, d as i64 - n as i64);
        let v = without_max + with_max;
        self.memo.insert((m, n, d), v.clone());
        v
    }
}

thread_local! {
    static TABLE: RefCell<PartitionTable> = RefCell::new(PartitionTable::new());
}

/// `p(M, N; d)` through a thread-local memo table.
pub fn restricted_partition(m: usize, n: usize, d: i64) -> BigUint {
    TABLE.with(|t| t.borrow_mut().count(m, n, d))
}

/// The polynomial `1 - t^i`.
fn one_minus_t_pow(i: usize) -> Polynomial {
    &Polynomial::one() - &Polynomial::monomial(1, i)
}

/// Gaussian binomial coefficient `(n over k)_t` as an integer polynomial:
/// the product `prod_{i=n-k+1..n} (1 - t^i) / prod_{i=1..k} (1 - t^i)`,
/// of degree `k*(n-k)`, whose coefficient of `t^d` is `p(k, n-k; d)`.
pub fn gaussian_binomial(k: usize, n: usize) -> Result<Polynomial, Error> {
    if k > n {
        return Err(Error::InvalidArgs(format!(
            "gaussian binomial requires k <= n, got k={k}, n={n}"
        )));
    }
    let mut num = Polynomial::one();
    let mut den = Polynomial::one();
    for i in 1..=k {
        num = &num * &one_minus_t_pow(n - k + i);
        den = &den * &one_minus_t_pow(i);
    }
    num.exact_div(&den)
}

/// Ordinary binomial coefficient by the factorial-free multiplicative scheme:
/// each intermediate `c * (n-k+i) / i` is exact.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut c = BigUint::one();
    for i in 1..=k {
        c = c * BigUint::from(n - k + i) / BigUint::from(i);
    }
    c
}

/// Coefficient of `t^d` as a non-negative count, for polynomials known to
/// have non-negative coefficients.
pub(crate) fn coeff_as_count(p: &Polynomial, d: usize) -> BigUint {
    let c: BigInt = p.coeff(d);
    c.try_into().expect("coefficient is non-negative")
}

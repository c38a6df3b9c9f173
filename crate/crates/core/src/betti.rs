//! Poincare polynomials and per-degree Betti numbers of the real Grassmannian
//! G_k(R^n), over Z/2 and over Q.
//!
//! The mod-2 side is the Gaussian binomial coefficient `(n over k)_t`. The
//! rational side substitutes `t -> t^4` into a smaller Gaussian binomial
//! (degree-4 classes generate everything rationally) and, when the manifold
//! dimension `k(n-k)` is odd, carries an extra factor `1 + t^(n-1)` from the
//! top-degree generator.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::Error;
use crate::partitions::{gaussian_binomial, restricted_partition};
use crate::poly::Polynomial;

/// The pair `(k, n)` selecting the Grassmannian G_k(R^n) of k-planes in R^n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GrassmannianParams {
    k: usize,
    n: usize,
}

impl GrassmannianParams {
    pub fn new(k: usize, n: usize) -> Result<Self, Error> {
        if k > n {
            return Err(Error::InvalidArgs(format!(
                "G_k(R^n) requires k <= n, got k={k}, n={n}"
            )));
        }
        Ok(GrassmannianParams { k, n })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Codimension parameter `l = n - k` (the other side of the Young-diagram box).
    pub fn l(&self) -> usize {
        self.n - self.k
    }

    /// Manifold dimension `k * (n - k)`.
    pub fn dimension(&self) -> usize {
        self.k * self.l()
    }
}

impl std::fmt::Display for GrassmannianParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "G_{}(R^{})", self.k, self.n)
    }
}

/// Poincare polynomial of H_*(G_k(R^n), Z/2): the Gaussian binomial `(n over k)_t`.
pub fn mod2_poincare(params: &GrassmannianParams) -> Polynomial {
    gaussian_binomial(params.k, params.n).expect("k <= n is a type invariant")
}

/// Poincare polynomial of H_*(G_k(R^n), Q).
///
/// The base polynomial is `([k/2]+[l/2] over [k/2])_t` with `t -> t^4`; for
/// odd `k*l` (which forces k odd and n even) it is multiplied by `1 + t^(n-1)`.
pub fn rational_poincare(params: &GrassmannianParams) -> Polynomial {
    let kh = params.k / 2;
    let lh = params.l() / 2;
    let base = gaussian_binomial(kh, kh + lh)
        .expect("half-parameters satisfy k <= n")
        .compose_power(4);
    if params.dimension().is_multiple_of(2) {
        base
    } else {
        assert!(
            params.k % 2 == 1 && params.n.is_multiple_of(2),
            "odd dimension forces k odd and n even"
        );
        let top = &Polynomial::one() + &Polynomial::monomial(1, params.n - 1);
        &top * &base
    }
}

/// Mod-2 Betti number in degree `d`: the restricted partition count `p(k, n-k; d)`.
pub fn mod2_betti(params: &GrassmannianParams, d: i64) -> BigUint {
    restricted_partition(params.k, params.l(), d)
}

/// `x / 4` when 4 divides `x` exactly, else `None`.
fn quarter(x: i64) -> Option<i64> {
    (x.rem_euclid(4) == 0).then(|| x.div_euclid(4))
}

/// Rational Betti number in degree `d`, directly from partition counts,
/// with the convention that a non-multiple of 4 contributes zero.
pub fn rational_betti(params: &GrassmannianParams, d: i64) -> BigUint {
    let kh = params.k / 2;
    let lh = params.l() / 2;
    let count = |arg: Option<i64>| match arg {
        Some(q) => restricted_partition(kh, lh, q),
        None => BigUint::zero(),
    };
    let mut total = count(quarter(d));
    if params.dimension() % 2 == 1 {
        total += count(quarter(d - params.n as i64 + 1));
    }
    total
}

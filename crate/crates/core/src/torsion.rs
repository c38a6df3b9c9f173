//! Torsion ranks of the integral homology and cohomology of G_k(R^n).
//!
//! All torsion in H_*(G_k(R^n), Z) has order 2, so in every degree
//! `H_d = Z^FB_d + Z2^TB_d` and `H^d = Z^FB_d + Z2^TB_(d-1)`. Writing `P` for
//! the mod-2 Poincare polynomial and `FP` for the rational one, the universal
//! coefficient theorem gives `P = FP + (1+t) * TP`, so the torsion generating
//! function is the exact quotient `TP = (P - FP) / (1 + t)` and its cohomology
//! counterpart is `t * TP`. The same ranks can be read off degree by degree as
//! an alternating sum, with no polynomial division; both routes are kept and
//! compared.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::betti::{mod2_betti, mod2_poincare, rational_betti, rational_poincare, GrassmannianParams};
use crate::error::Error;
use crate::poly::Polynomial;

/// Generating function of 2-torsion ranks of integral homology:
/// `(P - FP) / (1 + t)`, a polynomial with non-negative coefficients.
pub fn torsion_gf_homology(params: &GrassmannianParams) -> Result<Polynomial, Error> {
    let p = mod2_poincare(params);
    let fp = rational_poincare(params);
    let one_plus_t = Polynomial::from_coeffs([1, 1]);
    (&p - &fp).exact_div(&one_plus_t)
}

/// Generating function of 2-torsion ranks of integral cohomology: `t * TP`.
pub fn torsion_gf_cohomology(params: &GrassmannianParams) -> Result<Polynomial, Error> {
    let tp = torsion_gf_homology(params)?;
    Ok(&Polynomial::monomial(1, 1) * &tp)
}

/// Torsion rank in degree `d` as the alternating sum
/// `(B_d - FB_d) - (B_(d-1) - FB_(d-1)) + ...` down to degree 0.
///
/// Computed from Betti numbers alone; independent of the polynomial-division
/// route, which it is tested against.
pub fn torsion_rank_direct(params: &GrassmannianParams, d: i64) -> BigUint {
    let mut acc = BigInt::zero();
    for j in 0..=d.max(-1) {
        let diff = BigInt::from(mod2_betti(params, j)) - BigInt::from(rational_betti(params, j));
        if (d - j) % 2 == 0 {
            acc += diff;
        } else {
            acc -= diff;
        }
    }
    acc.try_into().expect("torsion rank is non-negative")
}

/// Per-degree Betti data and torsion ranks for one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeGroups {
    /// Degree `d`.
    pub d: usize,
    /// Mod-2 Betti number `B_d`.
    pub betti_mod2: BigUint,
    /// Rank of the free part of `H_d(-, Z)`.
    pub free_rank: BigUint,
    /// Number of `Z2` summands in `H_d(-, Z)`.
    pub torsion_rank: BigUint,
    /// Number of `Z2` summands in `H^d(-, Z)`; equals the torsion rank one
    /// degree below.
    pub cotorsion_rank: BigUint,
}

impl DegreeGroups {
    /// `H_d(-, Z)` in the canonical rendering, e.g. `Z`, `Z2`, `Z + Z2^2`, `0`.
    pub fn homology_group(&self) -> String {
        render_group(&self.free_rank, &self.torsion_rank)
    }

    /// `H^d(-, Z)` in the canonical rendering.
    pub fn cohomology_group(&self) -> String {
        render_group(&self.free_rank, &self.cotorsion_rank)
    }
}

/// Canonical string form of `Z^free + Z2^torsion` with exponent 1 elided and
/// `0` for the trivial group.
pub fn render_group(free: &BigUint, torsion: &BigUint) -> String {
    let one = BigUint::from(1u32);
    let mut parts = Vec::new();
    if !free.is_zero() {
        parts.push(if *free == one {
            "Z".to_string()
        } else {
            format!("Z^{free}")
        });
    }
    if !torsion.is_zero() {
        parts.push(if *torsion == one {
            "Z2".to_string()
        } else {
            format!("Z2^{torsion}")
        });
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

/// Full integral description of `H_*` and `H^*` for one Grassmannian.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyReport {
    pub params: GrassmannianParams,
    /// One entry per degree `0..=dimension`.
    pub rows: Vec<DegreeGroups>,
}

/// Assembles the per-degree group table, re-checking the universal
/// coefficient identity `B_d = FB_d + TB_(d-1) + TB_d`, the vanishing of
/// torsion in the top degree, and non-negativity of every rank. Failures are
/// reported as [`Error::InternalInconsistency`]: they cannot occur unless a
/// formula was transcribed wrongly.
pub fn group_report(params: &GrassmannianParams) -> Result<HomologyReport, Error> {
    let dim = params.dimension();
    let tp = torsion_gf_homology(params)?;

    if tp.degree().is_some_and(|deg| deg >= dim) {
        return Err(Error::InternalInconsistency(format!(
            "torsion generating function of {params} reaches the top degree"
        )));
    }

    let mut rows = Vec::with_capacity(dim + 1);
    let mut prev_torsion = BigUint::zero();
    for d in 0..=dim {
        let betti_mod2 = mod2_betti(params, d as i64);
        let free_rank = rational_betti(params, d as i64);
        let torsion_coeff: BigInt = tp.coeff(d);
        let torsion_rank: BigUint = torsion_coeff.try_into().map_err(|_| {
            Error::InternalInconsistency(format!(
                "negative torsion coefficient for {params} in degree {d}"
            ))
        })?;

        if betti_mod2 != &free_rank + &prev_torsion + &torsion_rank {
            return Err(Error::InternalInconsistency(format!(
                "universal coefficient identity fails for {params} in degree {d}"
            )));
        }

        rows.push(DegreeGroups {
            d,
            betti_mod2,
            free_rank,
            cotorsion_rank: prev_torsion.clone(),
            torsion_rank: torsion_rank.clone(),
        });
        prev_torsion = torsion_rank;
    }

    Ok(HomologyReport {
        params: *params,
        rows,
    })
}

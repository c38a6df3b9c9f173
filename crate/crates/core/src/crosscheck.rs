//! Side-by-side comparison of the two independent computations: the
//! generating-function formulas against the Schubert chain-complex homology.

use num_bigint::BigUint;

use crate::betti::{rational_betti, GrassmannianParams};
use crate::error::Error;
use crate::partitions::coeff_as_count;
use crate::schubert::{integral_homology, DegreeHomology};
use crate::torsion::torsion_gf_homology;

/// One degree of the comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeComparison {
    pub d: usize,
    pub free_formula: BigUint,
    pub free_oracle: BigUint,
    pub torsion_formula: BigUint,
    pub torsion_oracle: BigUint,
    /// True when ranks agree and every oracle torsion factor is exactly 2.
    pub matched: bool,
}

/// Outcome of running both computations for one Grassmannian.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleComparison {
    pub params: GrassmannianParams,
    pub degrees: Vec<DegreeComparison>,
    pub all_match: bool,
}

/// Runs the chain-complex oracle and compares it degree by degree with the
/// formula side. A degree matches when the free ranks agree, the torsion
/// ranks agree, and the oracle produced only order-2 torsion.
pub fn compare_with_oracle(
    params: &GrassmannianParams,
    max_cells: usize,
) -> Result<OracleComparison, Error> {
    let oracle: Vec<DegreeHomology> = integral_homology(params, max_cells)?;
    let tp = torsion_gf_homology(params)?;

    let two = BigUint::from(2u32);
    let mut degrees = Vec::with_capacity(oracle.len());
    let mut all_match = true;
    for (d, h) in oracle.iter().enumerate() {
        let free_formula = rational_betti(params, d as i64);
        let torsion_formula = coeff_as_count(&tp, d);
        let free_oracle = BigUint::from(h.free_rank);
        let torsion_oracle = BigUint::from(h.torsion_factors.len());
        let matched = free_formula == free_oracle
            && torsion_formula == torsion_oracle
            && h.torsion_factors.iter().all(|f| *f == two);
        all_match &= matched;
        degrees.push(DegreeComparison {
            d,
            free_formula,
            free_oracle,
            torsion_formula,
            torsion_oracle,
            matched,
        });
    }

    Ok(OracleComparison {
        params: *params,
        degrees,
        all_match,
    })
}

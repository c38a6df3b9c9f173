//! Schubert-cell chain complex of G_k(R^n) over the integers, and the
//! homology it computes. This side of the crate is deliberately independent
//! of the generating-function formulas: cells are enumerated combinatorially,
//! boundary matrices are written down from the incidence rule, and homology
//! is read off Smith normal forms. Agreement with the formula side is what
//! the cross-check suite certifies.

use std::io::{self, Write};

use num_bigint::{BigInt, BigUint};

use crate::betti::GrassmannianParams;
use crate::error::Error;
use crate::partitions::binomial;
use crate::snf::{smith_normal_form, IntMatrix};

/// Default ceiling on the total number of cells the oracle will process.
pub const DEFAULT_MAX_CELLS: usize = 1000;

/// A Schubert cell of G_k(R^n): a non-decreasing tuple `(a_1, ..., a_k)` with
/// entries in `[0, n-k]`. Its dimension is the sum of the entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SchubertSymbol {
    parts: Vec<usize>,
}

impl SchubertSymbol {
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn dimension(&self) -> usize {
        self.parts.iter().sum()
    }
}

impl std::fmt::Display for SchubertSymbol {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// All degree-`d` Schubert symbols in lexicographic order. Empty outside
/// `[0, k*(n-k)]`. The order is what fixes row/column indexing of every
/// boundary matrix, so it must stay deterministic.
pub fn enumerate_symbols(params: &GrassmannianParams, d: i64) -> Vec<SchubertSymbol> {
    let (k, l) = (params.k(), params.l());
    if d < 0 || d as usize > params.dimension() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut parts = Vec::with_capacity(k);
    fill(&mut out, &mut parts, k, l, 0, d as usize);
    out
}

fn fill(
    out: &mut Vec<SchubertSymbol>,
    parts: &mut Vec<usize>,
    k: usize,
    l: usize,
    min: usize,
    remaining: usize,
) {
    if parts.len() == k {
        if remaining == 0 {
            out.push(SchubertSymbol {
                parts: parts.clone(),
            });
        }
        return;
    }
    let slots_after = k - parts.len() - 1;
    for a in min..=l.min(remaining) {
        // the remaining slots are each >= a and <= l; prune when unreachable
        let rest = remaining - a;
        if rest < a * slots_after || rest > l * slots_after {
            continue;
        }
        parts.push(a);
        fill(out, parts, k, l, a, rest);
        parts.pop();
    }
}

/// Incidence coefficient for lowering entry `i` (0-based) of `symbol` by one.
/// With 1-based position `idx = i + 1`, the coefficient is `+/-2` when
/// `a_i + idx + k` is even and 0 otherwise; the sign comes from the parity of
/// the entries before position `i`. At k = 1 this is the classical
/// projective-space boundary `d(e_a) = (1 + (-1)^a) e_(a-1)`, and the parity
/// flip between consecutive lowerings is what makes the boundary square to
/// zero in general.
fn incidence(symbol: &SchubertSymbol, i: usize, k: usize) -> i64 {
    let a = symbol.parts[i];
    if !(a + (i + 1) + k).is_multiple_of(2) {
        return 0;
    }
    let prefix: usize = symbol.parts[..i].iter().sum();
    let sign = if (prefix + i).is_multiple_of(2) { 1 } else { -1 };
    2 * sign
}

/// Integral boundary matrix from degree-`d` cells to degree-`d-1` cells.
/// Rows are indexed by the lexicographic degree-`d-1` symbols, columns by the
/// degree-`d` ones.
pub fn boundary_matrix(params: &GrassmannianParams, d: usize) -> Result<IntMatrix, Error> {
    if d < 1 || d > params.dimension() {
        return Err(Error::InvalidArgs(format!(
            "boundary degree {d} outside 1..={} for {params}",
            params.dimension()
        )));
    }
    let upper = enumerate_symbols(params, d as i64);
    let lower = enumerate_symbols(params, d as i64 - 1);
    Ok(boundary_between(params.k(), &lower, &upper))
}

fn boundary_between(k: usize, lower: &[SchubertSymbol], upper: &[SchubertSymbol]) -> IntMatrix {
    let mut triplets = Vec::new();
    for (col, symbol) in upper.iter().enumerate() {
        for i in 0..k {
            let a = symbol.parts[i];
            let lowering_valid = a >= 1 && (i == 0 || a > symbol.parts[i - 1]);
            if !lowering_valid {
                continue;
            }
            let c = incidence(symbol, i, k);
            if c == 0 {
                continue;
            }
            let mut lowered = symbol.clone();
            lowered.parts[i] -= 1;
            let row = lower
                .binary_search(&lowered)
                .expect("lowered symbol is a valid cell one degree down");
            triplets.push((row, col, BigInt::from(c)));
        }
    }
    IntMatrix::from_triplets(lower.len(), upper.len(), triplets)
}

/// The full Schubert chain complex: cells by degree plus the boundary matrix
/// for every degree `1..=dimension`.
#[derive(Debug, Clone)]
pub struct ChainComplex {
    params: GrassmannianParams,
    cells: Vec<Vec<SchubertSymbol>>,
    boundaries: Vec<IntMatrix>,
}

impl ChainComplex {
    /// Enumerates all cells and boundary matrices, refusing to start when the
    /// total cell count (binomial(n, k)) exceeds `max_cells`.
    pub fn build(params: &GrassmannianParams, max_cells: usize) -> Result<Self, Error> {
        let total = binomial(params.n(), params.k());
        if total > BigUint::from(max_cells) {
            return Err(Error::ComplexityLimit {
                cells: total,
                limit: max_cells,
            });
        }
        let dim = params.dimension();
        let cells: Vec<Vec<SchubertSymbol>> = (0..=dim as i64)
            .map(|d| enumerate_symbols(params, d))
            .collect();
        let boundaries = (1..=dim)
            .map(|d| boundary_between(params.k(), &cells[d - 1], &cells[d]))
            .collect();
        Ok(ChainComplex {
            params: *params,
            cells,
            boundaries,
        })
    }

    pub fn params(&self) -> &GrassmannianParams {
        &self.params
    }

    /// Cells of each degree, index 0 through the manifold dimension.
    pub fn cells(&self) -> &[Vec<SchubertSymbol>] {
        &self.cells
    }

    /// Boundary matrix from degree `d` to `d-1`; `None` outside `1..=dimension`.
    pub fn boundary(&self, d: usize) -> Option<&IntMatrix> {
        (d >= 1 && d <= self.boundaries.len()).then(|| &self.boundaries[d - 1])
    }

    /// Writes every boundary matrix as plain-text sparse triplets, one
    /// `row col value` line per nonzero entry, with a `# boundary ...` header
    /// line per degree.
    pub fn dump_boundaries(&self, w: &mut impl Write) -> io::Result<()> {
        for (idx, m) in self.boundaries.iter().enumerate() {
            let d = idx + 1;
            writeln!(
                w,
                "# boundary d={} rows={} cols={}",
                d,
                m.rows(),
                m.cols()
            )?;
            for (r, c, v) in m.triplets() {
                writeln!(w, "{r} {c} {v}")?;
            }
        }
        Ok(())
    }
}

/// Integral homology of one degree: `Z^free_rank` plus one cyclic summand of
/// order `f` per torsion factor `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeHomology {
    pub free_rank: usize,
    pub torsion_factors: Vec<BigUint>,
}

impl DegreeHomology {
    /// Canonical rendering such as `Z`, `Z2`, `Z + Z2^2`, `0`.
    pub fn group_string(&self) -> String {
        let mut parts = Vec::new();
        if self.free_rank == 1 {
            parts.push("Z".to_string());
        } else if self.free_rank > 1 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        let mut i = 0;
        while i < self.torsion_factors.len() {
            let f = &self.torsion_factors[i];
            let run = self.torsion_factors[i..].iter().take_while(|g| *g == f).count();
            if run == 1 {
                parts.push(format!("Z{f}"));
            } else {
                parts.push(format!("Z{f}^{run}"));
            }
            i += run;
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

/// Integral homology of G_k(R^n) straight from the chain complex: for each
/// degree, free rank `nullity(d_d) - rank(d_(d+1))` and the invariant factors
/// of `d_(d+1)` that exceed 1.
pub fn integral_homology(
    params: &GrassmannianParams,
    max_cells: usize,
) -> Result<Vec<DegreeHomology>, Error> {
    let complex = ChainComplex::build(params, max_cells)?;
    Ok(homology_of(&complex))
}

/// Homology of an already-built complex.
pub fn homology_of(complex: &ChainComplex) -> Vec<DegreeHomology> {
    let dim = complex.params.dimension();
    let snfs: Vec<_> = (1..=dim)
        .map(|d| smith_normal_form(complex.boundary(d).expect("in range")))
        .collect();
    let rank = |d: usize| {
        if d >= 1 && d <= dim {
            snfs[d - 1].rank()
        } else {
            0
        }
    };
    (0..=dim)
        .map(|d| {
            let cells = complex.cells[d].len();
            let cycles = cells - rank(d);
            let free_rank = cycles - rank(d + 1);
            let torsion_factors = if d < dim {
                let mut t = snfs[d].torsion_factors();
                t.sort();
                t
            } else {
                Vec::new()
            };
            DegreeHomology {
                free_rank,
                torsion_factors,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::restricted_partition;

    fn params(k: usize, n: usize) -> GrassmannianParams {
        GrassmannianParams::new(k, n).unwrap()
    }

    fn symbols(v: &[&[usize]]) -> Vec<SchubertSymbol> {
        v.iter()
            .map(|p| SchubertSymbol { parts: p.to_vec() })
            .collect()
    }

    #[test]
    fn enumeration_is_lexicographic() {
        assert_eq!(
            enumerate_symbols(&params(2, 4), 2),
            symbols(&[&[0, 2], &[1, 1]])
        );
        assert_eq!(enumerate_symbols(&params(3, 7), 0), symbols(&[&[0, 0, 0]]));
        assert_eq!(enumerate_symbols(&params(1, 3), 2), symbols(&[&[2]]));
        assert_eq!(enumerate_symbols(&params(2, 4), 5), Vec::new());
        assert_eq!(enumerate_symbols(&params(2, 4), -1), Vec::new());
    }

    #[test]
    fn cell_counts_match_partition_numbers() {
        for n in 0..=8 {
            for k in 0..=n {
                let pr = params(k, n);
                for d in 0..=pr.dimension() {
                    assert_eq!(
                        BigUint::from(enumerate_symbols(&pr, d as i64).len()),
                        restricted_partition(k, n - k, d as i64),
                        "cells of {pr} in degree {d}"
                    );
                }
            }
        }
    }

    #[test]
    fn projective_plane_boundaries() {
        // d(e^1) = 0 and d(e^2) = +/-2 e^1, the classical cell structure
        let d1 = boundary_matrix(&params(1, 3), 1).unwrap();
        assert!(d1.is_zero());
        let d2 = boundary_matrix(&params(1, 3), 2).unwrap();
        assert_eq!(d2.get(0, 0).magnitude(), &BigUint::from(2u32));
    }

    #[test]
    fn circle_boundary_is_zero() {
        assert!(boundary_matrix(&params(1, 2), 1).unwrap().is_zero());
    }

    #[test]
    fn g2_r4_degree_two_boundary() {
        // columns (0,2) and (1,1) over the single row (0,1): both entries
        // have magnitude 2 and opposite signs, leaving the diagonal cycle
        let m = boundary_matrix(&params(2, 4), 2).unwrap();
        assert_eq!((m.rows(), m.cols()), (1, 2));
        let a = m.get(0, 0).clone();
        let b = m.get(0, 1).clone();
        assert_eq!(a.magnitude(), &BigUint::from(2u32));
        assert_eq!(b.magnitude(), &BigUint::from(2u32));
        assert_eq!(a + b, BigInt::from(0));
    }

    #[test]
    fn boundary_degree_out_of_range() {
        assert!(matches!(
            boundary_matrix(&params(2, 4), 5),
            Err(Error::InvalidArgs(_))
        ));
        assert!(matches!(
            boundary_matrix(&params(2, 4), 0),
            Err(Error::InvalidArgs(_))
        ));
    }

    #[test]
    fn boundaries_square_to_zero_and_are_even() {
        for n in 0..=6 {
            for k in 0..=n {
                let pr = params(k, n);
                let complex = ChainComplex::build(&pr, DEFAULT_MAX_CELLS).unwrap();
                for d in 2..=pr.dimension() {
                    let dd = complex
                        .boundary(d - 1)
                        .unwrap()
                        .mul(complex.boundary(d).unwrap());
                    assert!(dd.is_zero(), "d.d != 0 for {pr} at degree {d}");
                }
                for d in 1..=pr.dimension() {
                    for (_, _, v) in complex.boundary(d).unwrap().triplets() {
                        assert_eq!(v.magnitude(), &BigUint::from(2u32), "{pr} degree {d}");
                    }
                }
            }
        }
    }

    #[test]
    fn circle_homology() {
        let h = integral_homology(&params(1, 2), DEFAULT_MAX_CELLS).unwrap();
        let groups: Vec<String> = h.iter().map(|g| g.group_string()).collect();
        assert_eq!(groups, ["Z", "Z"]);
    }

    #[test]
    fn projective_plane_homology() {
        let h = integral_homology(&params(1, 3), DEFAULT_MAX_CELLS).unwrap();
        let groups: Vec<String> = h.iter().map(|g| g.group_string()).collect();
        assert_eq!(groups, ["Z", "Z2", "0"]);
    }

    #[test]
    fn g2_r4_homology() {
        let h = integral_homology(&params(2, 4), DEFAULT_MAX_CELLS).unwrap();
        let groups: Vec<String> = h.iter().map(|g| g.group_string()).collect();
        assert_eq!(groups, ["Z", "Z2", "Z2", "0", "Z"]);
    }

    #[test]
    fn point_homology() {
        let h = integral_homology(&params(0, 5), DEFAULT_MAX_CELLS).unwrap();
        let groups: Vec<String> = h.iter().map(|g| g.group_string()).collect();
        assert_eq!(groups, ["Z"]);
    }

    #[test]
    fn cell_budget_is_enforced() {
        let err = integral_homology(&params(3, 12), 100).unwrap_err();
        match err {
            Error::ComplexityLimit { cells, limit } => {
                assert_eq!(cells, BigUint::from(220u32));
                assert_eq!(limit, 100);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn dump_format_is_sparse_triplets() {
        let complex = ChainComplex::build(&params(1, 3), DEFAULT_MAX_CELLS).unwrap();
        let mut buf = Vec::new();
        complex.dump_boundaries(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "# boundary d=1 rows=1 cols=1");
        assert_eq!(lines[1], "# boundary d=2 rows=1 cols=1");
        assert_eq!(lines[2], "0 0 2");
    }

    #[test]
    fn group_string_edge_cases() {
        let g = DegreeHomology {
            free_rank: 0,
            torsion_factors: vec![],
        };
        assert_eq!(g.group_string(), "0");
        let g = DegreeHomology {
            free_rank: 2,
            torsion_factors: vec![BigUint::from(2u32), BigUint::from(2u32)],
        };
        assert_eq!(g.group_string(), "Z^2 + Z2^2");
    }
}

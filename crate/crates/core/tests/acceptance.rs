//! Acceptance suite: one test per shipping criterion, each printing a
//! PASS line when its sweep completes. All comparisons are exact; there are
//! no tolerances anywhere.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use grassmann_homology::betti::{mod2_poincare, rational_poincare};
use grassmann_homology::crosscheck::compare_with_oracle;
use grassmann_homology::partitions::{gaussian_binomial, restricted_partition};
use grassmann_homology::schubert::{
    integral_homology, ChainComplex, DEFAULT_MAX_CELLS,
};
use grassmann_homology::torsion::{
    group_report, torsion_gf_cohomology, torsion_gf_homology, torsion_rank_direct,
};
use grassmann_homology::{GrassmannianParams, Polynomial};

fn params(k: usize, n: usize) -> GrassmannianParams {
    GrassmannianParams::new(k, n).unwrap()
}

/// Criterion 1: the chain-complex oracle and the generating-function formulas
/// give identical free ranks and torsion ranks in every degree, for every
/// G_k(R^n) with 1 <= k <= n-1 and n <= 7.
#[test]
fn criterion_1_oracle_and_formulas_agree_up_to_n7() {
    let mut pairs = 0;
    for n in 2..=7 {
        for k in 1..n {
            let pr = params(k, n);
            let cmp = compare_with_oracle(&pr, DEFAULT_MAX_CELLS).unwrap();
            assert!(cmp.all_match, "oracle disagrees with formulas for {pr}");
            pairs += 1;
        }
    }
    println!("ACCEPTANCE 1 PASS: oracle matches formulas on all {pairs} pairs with n <= 7");
}

/// Criterion 2: every torsion invariant factor the oracle produces over the
/// n <= 7 sweep equals exactly 2.
#[test]
fn criterion_2_all_torsion_has_order_two() {
    let two = BigUint::from(2u32);
    let mut factors = 0;
    for n in 2..=7 {
        for k in 1..n {
            let pr = params(k, n);
            for (d, h) in integral_homology(&pr, DEFAULT_MAX_CELLS)
                .unwrap()
                .iter()
                .enumerate()
            {
                for f in &h.torsion_factors {
                    assert_eq!(*f, two, "factor {f} in H_{d} of {pr}");
                    factors += 1;
                }
            }
        }
    }
    println!("ACCEPTANCE 2 PASS: all {factors} oracle torsion factors equal 2");
}

/// Criterion 3: the polynomial-division route and the alternating-sum route
/// to the torsion ranks agree in every degree for all (k, n) with n <= 20.
#[test]
fn criterion_3_torsion_formulas_are_equivalent() {
    let mut checked = 0;
    for n in 0..=20 {
        for k in 0..=n {
            let pr = params(k, n);
            let tp = torsion_gf_homology(&pr).unwrap();
            for d in 0..=pr.dimension() {
                let via_division: BigUint = tp.coeff(d).try_into().unwrap();
                let via_sum = torsion_rank_direct(&pr, d as i64);
                assert_eq!(via_division, via_sum, "{pr} degree {d}");
                checked += 1;
            }
        }
    }
    println!("ACCEPTANCE 3 PASS: both torsion routes agree on {checked} degrees (n <= 20)");
}

/// Criterion 4: P - FP is exactly divisible by 1 + t for all (k, n), n <= 20.
#[test]
fn criterion_4_difference_is_divisible_by_one_plus_t() {
    let one_plus_t = Polynomial::from_coeffs([1, 1]);
    for n in 0..=20 {
        for k in 0..=n {
            let pr = params(k, n);
            let diff = &mod2_poincare(&pr) - &rational_poincare(&pr);
            assert!(
                diff.exact_div(&one_plus_t).is_ok(),
                "P - FP not divisible by 1+t for {pr}"
            );
        }
    }
    println!("ACCEPTANCE 4 PASS: P - FP divisible by 1 + t for all n <= 20");
}

/// Independent brute-force oracle for criterion 5: enumerate non-increasing
/// part tuples rather than using the DP recurrence.
fn enumerate_partitions(m: usize, n: usize, d: i64) -> u64 {
    fn go(parts_left: usize, max_part: usize, remaining: u64) -> u64 {
        if remaining == 0 {
            return 1;
        }
        if parts_left == 0 {
            return 0;
        }
        (1..=max_part.min(remaining as usize))
            .map(|first| go(parts_left - 1, first, remaining - first as u64))
            .sum()
    }
    if d < 0 {
        return 0;
    }
    go(m, n, d as u64)
}

/// Criterion 5: Gaussian binomial coefficients equal restricted partition
/// counts coefficientwise for all n <= 30, and the DP matches brute-force
/// enumeration for all boxes up to 6 x 6.
#[test]
fn criterion_5_gaussian_binomial_partition_identity() {
    for n in 0..=30usize {
        for k in 0..=n {
            let g = gaussian_binomial(k, n).unwrap();
            assert_eq!(g.degree().unwrap_or(0), k * (n - k));
            for d in 0..=(k * (n - k)) {
                let coeff: BigUint = g.coeff(d).try_into().unwrap();
                assert_eq!(
                    coeff,
                    restricted_partition(k, n - k, d as i64),
                    "(n={n}, k={k}) degree {d}"
                );
            }
        }
    }
    for m in 0..=6usize {
        for n in 0..=6usize {
            for d in -2..=(m as i64 * n as i64 + 2) {
                assert_eq!(
                    restricted_partition(m, n, d),
                    BigUint::from(enumerate_partitions(m, n, d)),
                    "p({m},{n};{d})"
                );
            }
        }
    }
    println!("ACCEPTANCE 5 PASS: coefficient identity up to n = 30, DP vs enumeration up to 6 x 6");
}

/// Criterion 6: chain-complex sanity for all (k, n) with n <= 8 — boundaries
/// compose to zero, every entry is even, and cell counts per degree are the
/// restricted partition numbers.
#[test]
fn criterion_6_chain_complex_sanity() {
    let two = BigInt::from(2);
    for n in 0..=8 {
        for k in 0..=n {
            let pr = params(k, n);
            let complex = ChainComplex::build(&pr, DEFAULT_MAX_CELLS).unwrap();
            for (d, cells) in complex.cells().iter().enumerate() {
                assert_eq!(
                    BigUint::from(cells.len()),
                    restricted_partition(k, n - k, d as i64),
                    "cell count of {pr} in degree {d}"
                );
            }
            for d in 1..=pr.dimension() {
                let m = complex.boundary(d).unwrap();
                for (_, _, v) in m.triplets() {
                    assert!((&v % &two).is_zero(), "odd entry {v} in boundary {d} of {pr}");
                }
                if d >= 2 {
                    let dd = complex.boundary(d - 1).unwrap().mul(m);
                    assert!(dd.is_zero(), "d.d != 0 for {pr} at degree {d}");
                }
            }
        }
    }
    println!("ACCEPTANCE 6 PASS: boundary sanity (d.d = 0, even entries, cell counts) for n <= 8");
}

/// Criterion 7: named fixtures — the projective plane, the circle, and
/// G_2(R^4) — produce the frozen torsion generating functions and groups.
#[test]
fn criterion_7_named_fixtures() {
    // G_1(R^3), the projective plane
    let rp2 = params(1, 3);
    assert_eq!(
        torsion_gf_homology(&rp2).unwrap(),
        Polynomial::monomial(1, 1)
    );
    assert_eq!(
        torsion_gf_cohomology(&rp2).unwrap(),
        Polynomial::monomial(1, 2)
    );
    let report = group_report(&rp2).unwrap();
    let groups: Vec<String> = report.rows.iter().map(|r| r.homology_group()).collect();
    assert_eq!(groups, ["Z", "Z2", "0"]);
    let oracle: Vec<String> = integral_homology(&rp2, DEFAULT_MAX_CELLS)
        .unwrap()
        .iter()
        .map(|h| h.group_string())
        .collect();
    assert_eq!(oracle, ["Z", "Z2", "0"]);

    // G_1(R^2), the circle: no torsion at all
    let circle = params(1, 2);
    assert!(torsion_gf_homology(&circle).unwrap().is_zero());
    assert!(torsion_gf_cohomology(&circle).unwrap().is_zero());

    // G_2(R^4)
    let g24 = params(2, 4);
    assert_eq!(
        torsion_gf_homology(&g24).unwrap(),
        Polynomial::from_coeffs([0, 1, 1])
    );
    let report = group_report(&g24).unwrap();
    let groups: Vec<String> = report.rows.iter().map(|r| r.homology_group()).collect();
    assert_eq!(groups, ["Z", "Z2", "Z2", "0", "Z"]);
    let oracle: Vec<String> = integral_homology(&g24, DEFAULT_MAX_CELLS)
        .unwrap()
        .iter()
        .map(|h| h.group_string())
        .collect();
    assert_eq!(oracle, ["Z", "Z2", "Z2", "0", "Z"]);

    println!("ACCEPTANCE 7 PASS: fixtures G_1(R^3), G_1(R^2), G_2(R^4)");
}

/// Criterion 8: P(-1) = FP(-1) (both are the Euler characteristic) for all
/// n <= 20, and both vanish for odd-dimensional Grassmannians.
#[test]
fn criterion_8_euler_characteristic_consistency() {
    let minus_one = BigInt::from(-1);
    for n in 0..=20 {
        for k in 0..=n {
            let pr = params(k, n);
            let chi_p = mod2_poincare(&pr).eval(&minus_one);
            let chi_fp = rational_poincare(&pr).eval(&minus_one);
            assert_eq!(chi_p, chi_fp, "Euler characteristics differ for {pr}");
            if pr.dimension() % 2 == 1 {
                assert!(chi_p.is_zero(), "nonzero chi for odd-dimensional {pr}");
            }
        }
    }
    println!("ACCEPTANCE 8 PASS: Euler characteristic consistency for n <= 20");
}

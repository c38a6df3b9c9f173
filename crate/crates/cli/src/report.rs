//! Report document for one Grassmannian plus its table / JSON / CSV
//! renderings. The JSON field order is fixed by struct declaration order and
//! every value is an exact integer (serde_json's arbitrary-precision numbers),
//! so emitted documents are byte-stable and round-trip losslessly.

use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};
use serde_json::Number;

use grassmann_homology::betti::{mod2_poincare, rational_poincare};
use grassmann_homology::crosscheck::{compare_with_oracle, OracleComparison};
use grassmann_homology::torsion::{group_report, torsion_gf_cohomology, torsion_gf_homology};
use grassmann_homology::{Error, GrassmannianParams, Polynomial};

#[derive(Debug, Serialize, Deserialize)]
pub struct ReportDoc {
    pub k: u64,
    pub n: u64,
    pub dimension: u64,
    pub mod2_poincare: Vec<Number>,
    pub free_part: Vec<Number>,
    pub torsion_homology: Vec<Number>,
    pub torsion_cohomology: Vec<Number>,
    pub groups: Vec<GroupRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct GroupRow {
    pub d: u64,
    pub homology: String,
    pub cohomology: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct OracleDoc {
    pub checked: bool,
    #[serde(rename = "match")]
    pub matched: bool,
    pub detail: Vec<OracleRow>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct OracleRow {
    pub d: u64,
    pub free_formula: Number,
    pub free_oracle: Number,
    pub torsion_formula: Number,
    pub torsion_oracle: Number,
    #[serde(rename = "match")]
    pub matched: bool,
}

fn int_number(x: &BigInt) -> Number {
    serde_json::from_str(&x.to_string()).expect("integer literal is valid JSON")
}

fn uint_number(x: &BigUint) -> Number {
    serde_json::from_str(&x.to_string()).expect("integer literal is valid JSON")
}

/// Coefficients of `p` padded with zeros out to degree `dim` inclusive.
fn coeff_array(p: &Polynomial, dim: usize) -> Vec<Number> {
    (0..=dim).map(|d| int_number(&p.coeff(d))).collect()
}

/// The four generating functions of one report, kept for the table renderer.
pub struct Report {
    pub params: GrassmannianParams,
    pub mod2: Polynomial,
    pub free: Polynomial,
    pub torsion_h: Polynomial,
    pub torsion_c: Polynomial,
    pub doc: ReportDoc,
}

/// Computes everything for one Grassmannian; `max_cells` only matters when
/// `with_oracle` is set.
pub fn build_report(
    params: &GrassmannianParams,
    with_oracle: bool,
    max_cells: usize,
) -> Result<Report, Error> {
    let dim = params.dimension();
    let mod2 = mod2_poincare(params);
    let free = rational_poincare(params);
    let torsion_h = torsion_gf_homology(params)?;
    let torsion_c = torsion_gf_cohomology(params)?;
    let groups = group_report(params)?;

    let oracle = if with_oracle {
        Some(oracle_doc(&compare_with_oracle(params, max_cells)?))
    } else {
        None
    };

    let doc = ReportDoc {
        k: params.k() as u64,
        n: params.n() as u64,
        dimension: dim as u64,
        mod2_poincare: coeff_array(&mod2, dim),
        free_part: coeff_array(&free, dim),
        torsion_homology: coeff_array(&torsion_h, dim),
        torsion_cohomology: coeff_array(&torsion_c, dim),
        groups: groups
            .rows
            .iter()
            .map(|r| GroupRow {
                d: r.d as u64,
                homology: r.homology_group(),
                cohomology: r.cohomology_group(),
            })
            .collect(),
        oracle,
    };

    Ok(Report {
        params: *params,
        mod2,
        free,
        torsion_h,
        torsion_c,
        doc,
    })
}

fn oracle_doc(cmp: &OracleComparison) -> OracleDoc {
    OracleDoc {
        checked: true,
        matched: cmp.all_match,
        detail: cmp
            .degrees
            .iter()
            .map(|row| OracleRow {
                d: row.d as u64,
                free_formula: uint_number(&row.free_formula),
                free_oracle: uint_number(&row.free_oracle),
                torsion_formula: uint_number(&row.torsion_formula),
                torsion_oracle: uint_number(&row.torsion_oracle),
                matched: row.matched,
            })
            .collect(),
    }
}

pub fn render_json(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(&report.doc).expect("report serializes");
    s.push('\n');
    s
}

pub fn render_table(report: &Report) -> String {
    let doc = &report.doc;
    let mut out = String::new();
    out.push_str(&format!(
        "{}  (dimension {})\n",
        report.params, doc.dimension
    ));
    out.push_str(&format!("mod-2 Poincare polynomial: {}\n", report.mod2));
    out.push_str(&format!("free part:                 {}\n", report.free));
    out.push_str(&format!("torsion (homology):        {}\n", report.torsion_h));
    out.push_str(&format!("torsion (cohomology):      {}\n", report.torsion_c));
    out.push('\n');

    let headers = ["d", "B_d", "FB_d", "TB_d", "coTB_d", "H_d(Z)", "H^d(Z)"];
    let mut rows: Vec<[String; 7]> = Vec::new();
    for (d, g) in doc.groups.iter().enumerate() {
        rows.push([
            d.to_string(),
            doc.mod2_poincare[d].to_string(),
            doc.free_part[d].to_string(),
            doc.torsion_homology[d].to_string(),
            doc.torsion_cohomology[d].to_string(),
            g.homology.clone(),
            g.cohomology.clone(),
        ]);
    }
    let widths: Vec<usize> = (0..7)
        .map(|c| {
            rows.iter()
                .map(|r| r[c].len())
                .chain([headers[c].len()])
                .max()
                .unwrap()
        })
        .collect();
    let fmt_row = |cells: &[String]| {
        let mut line = String::new();
        for (c, cell) in cells.iter().enumerate() {
            if c > 0 {
                line.push_str("  ");
            }
            if c < 5 {
                line.push_str(&format!("{cell:>width$}", width = widths[c]));
            } else {
                line.push_str(&format!("{cell:<width$}", width = widths[c]));
            }
        }
        while line.ends_with(' ') {
            line.pop();
        }
        line.push('\n');
        line
    };
    out.push_str(&fmt_row(&headers.map(String::from)));
    for row in &rows {
        out.push_str(&fmt_row(row));
    }

    if let Some(oracle) = &doc.oracle {
        out.push('\n');
        out.push_str("oracle check (Schubert chain complex, Smith normal form):\n");
        for row in &oracle.detail {
            out.push_str(&format!(
                "  d={} free {} vs {}, torsion {} vs {}: {}\n",
                row.d,
                row.free_formula,
                row.free_oracle,
                row.torsion_formula,
                row.torsion_oracle,
                if row.matched { "MATCH" } else { "MISMATCH" }
            ));
        }
        out.push_str(&format!(
            "oracle summary: {}\n",
            if oracle.matched { "MATCH" } else { "MISMATCH" }
        ));
    }
    out
}

pub const CSV_HEADER: &str = "d,B_d,FB_d,TB_d,coTB_d";

/// CSV rows for one report, without a header. With `with_kn`, each row is
/// prefixed by the `k,n` pair (used in batch mode).
pub fn csv_rows(report: &Report, with_kn: bool) -> String {
    let doc = &report.doc;
    let mut out = String::new();
    for d in 0..doc.groups.len() {
        if with_kn {
            out.push_str(&format!("{},{},", doc.k, doc.n));
        }
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            d,
            doc.mod2_poincare[d],
            doc.free_part[d],
            doc.torsion_homology[d],
            doc.torsion_cohomology[d]
        ));
    }
    out
}

//! Integer matrices and Smith normal form over arbitrary-precision integers.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        IntMatrix {
            rows: nrows,
            cols: ncols,
            data: rows
                .into_iter()
                .flatten()
                .map(BigInt::from)
                .collect(),
        }
    }

    /// Builds from `(row, col, value)` triplets; later triplets accumulate.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, BigInt)>,
    ) -> Self {
        let mut m = IntMatrix::zeros(rows, cols);
        for (r, c, v) in triplets {
            *m.get_mut(r, c) += v;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut BigInt {
        &mut self.data[r * self.cols + c]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        *out.get_mut(i, j) += a * b;
                    }
                }
            }
        }
        out
    }

    /// Nonzero entries as `(row, col, value)` triplets in row-major order.
    pub fn triplets(&self) -> Vec<(usize, usize, BigInt)> {
        let mut out = Vec::new();
        for r in 0..self.rows {
            for c in 0..self.cols {
                let v = self.get(r, c);
                if !v.is_zero() {
                    out.push((r, c, v.clone()));
                }
            }
        }
        out
    }
}

/// Invariant factors of an integer matrix: positive integers
/// `d_1 | d_2 | ... | d_r` where `r` is the rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub invariant_factors: Vec<BigUint>,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// Factors greater than 1, i.e. the ones contributing torsion to a
    /// cokernel.
    pub fn torsion_factors(&self) -> Vec<BigUint> {
        self.invariant_factors
            .iter()
            .filter(|f| !f.is_one())
            .cloned()
            .collect()
    }
}

/// Smith normal form by row/column reduction.
///
/// Picks the nonzero entry of minimal absolute value as pivot each round to
/// keep intermediate entries small; arithmetic is exact regardless.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let mut a = m.clone();
    let (nrows, ncols) = (a.rows, a.cols);
    let mut factors = Vec::new();

    let mut t = 0;
    while t < nrows.min(ncols) {
        let Some((pr, pc)) = min_abs_entry(&a, t) else {
            break;
        };
        a.swap_rows(t, pr);
        a.swap_cols(t, pc);

        loop {
            // clear column t below the pivot
            let mut dirty = false;
            for r in t + 1..nrows {
                if !a.get(r, t).is_zero() {
                    let q = a.get(r, t).div_rem(a.get(t, t)).0;
                    a.row_sub_mul(r, t, &q);
                    if !a.get(r, t).is_zero() {
                        // remainder smaller than the pivot; promote it
                        a.swap_rows(t, r);
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            // clear row t right of the pivot
            for c in t + 1..ncols {
                if !a.get(t, c).is_zero() {
                    let q = a.get(t, c).div_rem(a.get(t, t)).0;
                    a.col_sub_mul(c, t, &q);
                    if !a.get(t, c).is_zero() {
                        a.swap_cols(t, c);
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            // enforce the divisibility chain: the pivot must divide every
            // remaining entry; if not, fold the offending row in and redo
            match first_non_multiple(&a, t) {
                Some(r) => {
                    a.row_add(t, r);
                }
                None => break,
            }
        }

        factors.push(
            a.get(t, t)
                .abs()
                .to_biguint()
                .expect("absolute value is non-negative"),
        );
        t += 1;
    }

    SnfResult {
        invariant_factors: factors,
    }
}

fn min_abs_entry(a: &IntMatrix, from: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for r in from..a.rows {
        for c in from..a.cols {
            let v = a.get(r, c);
            if v.is_zero() {
                continue;
            }
            let mag = v.abs();
            match &best {
                Some((_, _, m)) if *m <= mag => {}
                _ => best = Some((r, c, mag)),
            }
        }
    }
    best.map(|(r, c, _)| (r, c))
}

fn first_non_multiple(a: &IntMatrix, t: usize) -> Option<usize> {
    let pivot = a.get(t, t).clone();
    for r in t + 1..a.rows {
        for c in t + 1..a.cols {
            if !a.get(r, c).mod_floor(&pivot).is_zero() {
                return Some(r);
            }
        }
    }
    None
}

impl IntMatrix {
    fn swap_rows(&mut self, r1: usize, r2: usize) {
        if r1 == r2 {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(r1 * self.cols + c, r2 * self.cols + c);
        }
    }

    fn swap_cols(&mut self, c1: usize, c2: usize) {
        if c1 == c2 {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + c1, r * self.cols + c2);
        }
    }

    /// `row[r] -= q * row[src]`
    fn row_sub_mul(&mut self, r: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let v = q * self.get(src, c);
            *self.get_mut(r, c) -= v;
        }
    }

    /// `col[c] -= q * col[src]`
    fn col_sub_mul(&mut self, c: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let v = q * self.get(r, src);
            *self.get_mut(r, c) -= v;
        }
    }

    /// `row[dst] += row[src]`
    fn row_add(&mut self, dst: usize, src: usize) {
        for c in 0..self.cols {
            let v = self.get(src, c).clone();
            *self.get_mut(dst, c) += v;
        }
    }
}

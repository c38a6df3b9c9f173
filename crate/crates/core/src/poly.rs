//! Exact univariate polynomial arithmetic over arbitrary-precision integers.
//!
//! Every generating function in this crate lives here: Poincare polynomials,
//! free-part and torsion generating functions. Coefficients are `BigInt`, so
//! nothing overflows and nothing is ever rounded.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Dense integer polynomial in one variable `t`.
///
/// `coeffs[d]` is the coefficient of `t^d`. Canonical form: the highest stored
/// coefficient is nonzero; the zero polynomial stores no coefficients at all.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Polynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs<I>(coeffs: I) -> Self
    where
        I: IntoIterator,
        I::Item: Into<BigInt>,
    {
        let mut p = Polynomial {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.normalize();
        p
    }

    /// The single term `c * t^degree`.
    pub fn monomial(c: impl Into<BigInt>, degree: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        Polynomial { coeffs }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `t^d` (zero beyond the stored degree).
    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    /// Ascending coefficient slice in canonical form.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Exact quotient `self / den`.
    ///
    /// Classical descending long division over the integers. Any nonzero
    /// remainder, or a quotient step that would need a fractional coefficient,
    /// is reported as [`Error::NonExactDivision`] rather than truncated.
    pub fn exact_div(&self, den: &Polynomial) -> Result<Polynomial, Error> {
        let den_deg = match den.degree() {
            None => return Err(Error::DivisionByZero),
            Some(d) => d,
        };
        if self.is_zero() {
            return Ok(Polynomial::zero());
        }
        let num_deg = self.degree().expect("nonzero");
        if num_deg < den_deg {
            return Err(Error::NonExactDivision);
        }

        let lead = &den.coeffs[den_deg];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); num_deg - den_deg + 1];
        for qd in (0..quot.len()).rev() {
            let c = std::mem::take(&mut rem[qd + den_deg]);
            if c.is_zero() {
                continue;
            }
            let (q, r) = c.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::NonExactDivision);
            }
            for (i, dc) in den.coeffs.iter().enumerate().take(den_deg) {
                rem[qd + i] -= &q * dc;
            }
            quot[qd] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NonExactDivision);
        }
        Ok(Polynomial::from_coeffs(quot))
    }

    /// Substitutes `t -> t^m`: the coefficient of `t^d` moves to `t^(m*d)`.
    pub fn compose_power(&self, m: usize) -> Polynomial {
        assert!(m >= 1, "compose_power requires m >= 1");
        if self.is_zero() {
            return Polynomial::zero();
        }
        let deg = self.degree().expect("nonzero");
        let mut coeffs = vec![BigInt::zero(); m * deg + 1];
        for (d, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[m * d] = c.clone();
            }
        }
        Polynomial { coeffs }
    }

    /// Exact evaluation at an integer point (Horner).
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (i, c) in short.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(self.coeffs.len().max(rhs.coeffs.len()), BigInt::zero());
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Polynomial { coeffs }
    }
}

/// Renders in ascending degree with ASCII powers: `1 + t + 2*t^2`.
/// The coefficient 1 is elided, the zero polynomial prints as `0`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            match d {
                0 => write!(f, "{mag}")?,
                1 if mag.is_one() => write!(f, "t")?,
                1 => write!(f, "{mag}*t")?,
                _ if mag.is_one() => write!(f, "t^{d}")?,
                _ => write!(f, "{mag}*t^{d}")?,
            }
        }
        Ok(())
    }
}

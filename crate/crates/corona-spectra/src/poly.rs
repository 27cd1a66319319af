//! Dense univariate real polynomials.
//!
//! Coefficients are stored in ascending degree order. The arithmetic here is
//! deliberately small — products, sums, scaling, Horner evaluation — because
//! the factors that arise downstream have degree at most four. Real roots are
//! extracted through the companion-matrix eigenproblem, then sharpened with a
//! few guarded Newton steps; a root straying off the real line beyond the
//! caller's tolerance is an error rather than something to round away.

use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// Default bound on the imaginary part a numerically real root may carry.
pub const DEFAULT_IMAG_TOL: f64 = 1e-8;

/// A polynomial with real coefficients, ascending by degree.
#[derive(Debug, Clone, PartialEq)]
pub struct RealPolynomial {
    coeffs: Vec<f64>,
}

impl RealPolynomial {
    /// Builds a polynomial, trimming exactly-zero leading coefficients.
    ///
    /// # Errors
    ///
    /// The zero polynomial (no nonzero coefficient) is rejected.
    pub fn new(mut coeffs: Vec<f64>) -> Result<Self> {
        while coeffs.len() > 1 && *coeffs.last().unwrap() == 0.0 {
            coeffs.pop();
        }
        if coeffs.is_empty() || coeffs == [0.0] {
            return Err(Error::Inconsistent(
                "the zero polynomial has no well-defined degree".into(),
            ));
        }
        Ok(RealPolynomial { coeffs })
    }

    /// The linear polynomial `c0 + c1 x`.
    pub fn linear(c0: f64, c1: f64) -> Self {
        RealPolynomial::new(vec![c0, c1]).expect("a linear polynomial is nonzero")
    }

    /// The constant polynomial `c` (`c != 0`).
    pub fn constant(c: f64) -> Result<Self> {
        RealPolynomial::new(vec![c])
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn leading(&self) -> f64 {
        *self.coeffs.last().unwrap()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> RealPolynomial {
        if self.degree() == 0 {
            return RealPolynomial { coeffs: vec![0.0] };
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| k as f64 * c)
            .collect();
        RealPolynomial { coeffs }
    }

    pub fn scale(&self, factor: f64) -> Result<RealPolynomial> {
        RealPolynomial::new(self.coeffs.iter().map(|&c| c * factor).collect())
    }

    pub fn mul(&self, other: &RealPolynomial) -> RealPolynomial {
        let mut coeffs = vec![0.0; self.degree() + other.degree() + 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RealPolynomial { coeffs }
    }

    /// `self - other`, which may legitimately drop degree.
    pub fn sub(&self, other: &RealPolynomial) -> Result<RealPolynomial> {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![0.0; len];
        for (i, &a) in self.coeffs.iter().enumerate() {
            coeffs[i] += a;
        }
        for (i, &b) in other.coeffs.iter().enumerate() {
            coeffs[i] -= b;
        }
        RealPolynomial::new(coeffs)
    }

    /// Removes a known root at zero by shifting coefficients down one degree.
    ///
    /// # Errors
    ///
    /// The constant coefficient must already be exactly zero (callers build
    /// the polynomial so that it is) and the result must be nonconstant.
    pub fn deflate_zero_root(&self) -> Result<RealPolynomial> {
        if self.coeffs[0] != 0.0 {
            return Err(Error::Inconsistent(format!(
                "cannot deflate a zero root: constant coefficient is {:.3e}",
                self.coeffs[0]
            )));
        }
        RealPolynomial::new(self.coeffs[1..].to_vec())
    }

    /// All roots of a degree-1..=4 polynomial, which must be real.
    ///
    /// Roots come from the eigenvalues of the companion matrix and are then
    /// polished with Newton steps (accepted only while the residual shrinks).
    /// The result is sorted ascending, with multiplicity, as extracted.
    ///
    /// # Errors
    ///
    /// Degrees outside 1..=4, or any root with `|Im| > imag_tol`.
    pub fn real_roots(&self, imag_tol: f64) -> Result<Vec<f64>> {
        let d = self.degree();
        if !(1..=4).contains(&d) {
            return Err(Error::Inconsistent(format!(
                "root extraction handles degrees 1..=4, got {d}"
            )));
        }
        let lead = self.leading();
        let monic: Vec<f64> = self.coeffs.iter().map(|&c| c / lead).collect();

        let mut companion = DMatrix::zeros(d, d);
        for i in 1..d {
            companion[(i, i - 1)] = 1.0;
        }
        for i in 0..d {
            companion[(i, d - 1)] = -monic[i];
        }
        let eigen = companion.complex_eigenvalues();

        let derivative = self.derivative();
        let mut roots = Vec::with_capacity(d);
        for z in eigen.iter() {
            if z.im.abs() > imag_tol {
                return Err(Error::NonrealRoot {
                    imag: z.im.abs(),
                    tol: imag_tol,
                });
            }
            let mut x = z.re;
            let mut residual = self.eval(x).abs();
            for _ in 0..4 {
                let slope = derivative.eval(x);
                if slope == 0.0 {
                    break;
                }
                let candidate = x - self.eval(x) / slope;
                let candidate_residual = self.eval(candidate).abs();
                if !candidate.is_finite() || candidate_residual >= residual {
                    break;
                }
                x = candidate;
                residual = candidate_residual;
            }
            roots.push(x);
        }
        roots.sort_by(f64::total_cmp);
        Ok(roots)
    }
}

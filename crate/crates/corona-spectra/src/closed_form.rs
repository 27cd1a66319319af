//! Closed-form normalized Laplacian spectra of the two corona constructions.
//!
//! For regular operands the corona spectrum decomposes into four families:
//!
//! 1. values `(r1 + r2 μ) / (r1 + r2)` (SVEV) or `(2 + r2 μ) / (2 + r2)`
//!    (SVEE) from the `G2` spectrum, each repeated once per copy of `G2`;
//! 2. values `(1 + r3 η) / (1 + r3)` from the `G3` spectrum, each repeated
//!    once per copy of `G3`;
//! 3. a family tied to the `m1 - n1` surplus midpoints: the two roots of a
//!    fixed quadratic (SVEV) or the fixed values `1` and `2/(2 + r2)` (SVEE);
//! 4. four roots of a quartic for every eigenvalue `θ` of the normalized
//!    Laplacian of `G1`.
//!
//! Families 1 and 2 skip exactly one zero eigenvalue of `G2` resp. `G3`: in
//! the underlying factorization those factors sit against matching poles and
//! cancel. Everything is assembled into a [`SpectrumRecipe`], whose total
//! root count must equal the corona order before any root is extracted.
//!
//! All factor polynomials are kept in cleared-denominator form (integer
//! coefficients scaled by the operand parameters), so evaluating the full
//! characteristic polynomial is an honest polynomial product.

use crate::corona::{predicted_counts, CoronaKind, CoronaOperands};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::{matrix_of, MatrixKind};
use crate::poly::{RealPolynomial, DEFAULT_IMAG_TOL};
use crate::spectrum::{symmetric_eigenvalues, Spectrum};

/// Threshold under which an eigenvalue is treated as the zero mode.
pub const ZERO_EIGENVALUE_TOL: f64 = 1e-8;

/// A spectrum described symbolically: explicit values plus polynomial factors
/// whose roots are still to be extracted.
#[derive(Debug, Clone)]
pub struct SpectrumRecipe {
    order: usize,
    fixed: Vec<(f64, usize)>,
    polynomial: Vec<(RealPolynomial, usize)>,
}

impl SpectrumRecipe {
    /// Assembles a recipe, enforcing the count-closure identity: explicit
    /// multiplicities plus polynomial degrees (times their multiplicities)
    /// must add up to `order` exactly.
    pub fn new(
        order: usize,
        fixed: Vec<(f64, usize)>,
        polynomial: Vec<(RealPolynomial, usize)>,
    ) -> Result<Self> {
        let recipe = SpectrumRecipe {
            order,
            fixed,
            polynomial,
        };
        let total = recipe.total_count();
        if total != order {
            return Err(Error::Inconsistent(format!(
                "recipe accounts for {total} eigenvalues but the target order is {order}"
            )));
        }
        Ok(recipe)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn fixed(&self) -> &[(f64, usize)] {
        &self.fixed
    }

    pub fn polynomial_parts(&self) -> &[(RealPolynomial, usize)] {
        &self.polynomial
    }

    /// Eigenvalues accounted for: fixed multiplicities plus `degree *
    /// multiplicity` for each polynomial part.
    pub fn total_count(&self) -> usize {
        let fixed: usize = self.fixed.iter().map(|&(_, k)| k).sum();
        let poly: usize = self.polynomial.iter().map(|(p, k)| p.degree() * k).sum();
        fixed + poly
    }

    /// Extracts every root and groups the full multiset into a [`Spectrum`].
    pub fn solve(&self, imag_tol: f64, grouping_tol: f64) -> Result<Spectrum> {
        let mut values = Vec::with_capacity(self.order);
        for &(v, k) in &self.fixed {
            values.extend(std::iter::repeat_n(v, k));
        }
        for (p, k) in &self.polynomial {
            let roots = p.real_roots(imag_tol)?;
            for _ in 0..*k {
                values.extend_from_slice(&roots);
            }
        }
        Ok(Spectrum::from_values(values, grouping_tol))
    }
}

/// Normalized Laplacian spectra of the three operands, computed by the
/// eigensolver — these are the inputs the closed forms consume.
pub fn operand_spectra(
    ops: &CoronaOperands,
    grouping_tol: f64,
) -> Result<(Spectrum, Spectrum, Spectrum)> {
    let spectrum_of = |g: &Graph| -> Result<Spectrum> {
        Ok(symmetric_eigenvalues(
            &matrix_of(g, MatrixKind::NormalizedLaplacian)?,
            grouping_tol,
        ))
    };
    Ok((
        spectrum_of(ops.g1())?,
        spectrum_of(ops.g2())?,
        spectrum_of(ops.g3())?,
    ))
}

/// The quartic factor contributed by one eigenvalue `theta` of the first
/// operand's normalized Laplacian, in cleared-denominator form.
pub fn quartic_coefficients(
    kind: CoronaKind,
    ops: &CoronaOperands,
    theta: f64,
) -> Result<RealPolynomial> {
    let (r1, r2, r3) = ops.regular_degrees()?;
    let (n2, n3) = (ops.n2(), ops.n3());
    if n2 == 0 || n3 == 0 {
        return Err(Error::ClosedFormInapplicable(
            "closed forms need nonempty second and third operands".into(),
        ));
    }
    let lam_minus_1 = RealPolynomial::linear(-1.0, 1.0);
    let p3 = RealPolynomial::linear(-1.0, (r3 + 1) as f64);
    let quartic = match kind {
        CoronaKind::Svev => {
            let s = (2 * n2 + n3 + 2) as f64;
            let p2 = RealPolynomial::linear(-(r1 as f64), (r1 + r2) as f64);
            let attach = RealPolynomial::linear(
                -((r1 + r1 * n2) as f64),
                (r1 + r2 + n2 * r1) as f64,
            );
            let term1 = p3
                .mul(&p2)
                .mul(&lam_minus_1)
                .mul(&lam_minus_1)
                .scale(s)?;
            let base = term1.sub(&lam_minus_1.mul(&p2).scale(n3 as f64)?)?;
            // 2 is always an extremal operand eigenvalue candidate; at
            // exactly theta = 2 the attachment term vanishes outright.
            if theta == 2.0 {
                base
            } else {
                base.sub(&attach.mul(&p3).scale(2.0 - theta)?)?
            }
        }
        CoronaKind::Svee => {
            let k = (r1 * n2 + r1 + n3) as f64;
            let p2 = RealPolynomial::linear(-2.0, (r2 + 2) as f64);
            let attach = RealPolynomial::linear(
                -((2 * n2 + 2) as f64),
                (2 * n2 + r2 + 2) as f64,
            );
            let term1 = p3
                .mul(&p2)
                .mul(&lam_minus_1)
                .mul(&lam_minus_1)
                .scale(2.0 * k)?;
            let base = term1.sub(&lam_minus_1.mul(&p2).scale(2.0 * n3 as f64)?)?;
            if theta == 2.0 {
                base
            } else {
                base.sub(&attach.mul(&p3).scale(r1 as f64 * (2.0 - theta))?)?
            }
        }
    };
    if quartic.degree() != 4 {
        return Err(Error::Inconsistent(format!(
            "quartic factor degenerated to degree {}",
            quartic.degree()
        )));
    }
    Ok(quartic)
}

/// The SVEV quadratic whose two roots repeat once per surplus midpoint
/// (`m1 - n1` of them): `s(r3+1) λ² - s(r3+2) λ + s - n3` with
/// `s = 2 n2 + n3 + 2`.
pub fn svev_excess_quadratic(ops: &CoronaOperands) -> Result<RealPolynomial> {
    let (_, _, r3) = ops.regular_degrees()?;
    let (n2, n3) = (ops.n2(), ops.n3());
    if n2 == 0 || n3 == 0 {
        return Err(Error::ClosedFormInapplicable(
            "closed forms need nonempty second and third operands".into(),
        ));
    }
    let s = (2 * n2 + n3 + 2) as f64;
    RealPolynomial::new(vec![
        s - n3 as f64,
        -s * (r3 + 2) as f64,
        s * (r3 + 1) as f64,
    ])
}

pub(crate) fn check_operand_spectrum_orders(
    ops: &CoronaOperands,
    theta: &Spectrum,
    mu: &Spectrum,
    eta: &Spectrum,
) -> Result<()> {
    let expected = [ops.n1(), ops.n2(), ops.n3()];
    let got = [theta.order(), mu.order(), eta.order()];
    if expected != got {
        return Err(Error::Inconsistent(format!(
            "operand spectrum orders {got:?} do not match operand sizes {expected:?}"
        )));
    }
    Ok(())
}

/// Removes one unit of multiplicity from the zero eigenvalue of an operand
/// spectrum (the excluded factor), returning the remaining pairs.
pub(crate) fn drop_one_zero(spec: &Spectrum, which: &str) -> Result<Vec<(f64, usize)>> {
    let mut pairs: Vec<(f64, usize)> = spec
        .entries()
        .iter()
        .map(|e| (e.value, e.multiplicity))
        .collect();
    let zero = pairs
        .iter()
        .position(|&(v, _)| v.abs() <= ZERO_EIGENVALUE_TOL)
        .ok_or_else(|| {
            Error::Inconsistent(format!(
                "normalized Laplacian spectrum of {which} lacks a zero eigenvalue"
            ))
        })?;
    pairs[zero].1 -= 1;
    if pairs[zero].1 == 0 {
        pairs.remove(zero);
    }
    Ok(pairs)
}

pub(crate) fn require_closed_form_shape(ops: &CoronaOperands) -> Result<(usize, usize, usize)> {
    let degrees = ops.regular_degrees()?;
    if ops.n2() == 0 || ops.n3() == 0 {
        return Err(Error::ClosedFormInapplicable(
            "closed forms need nonempty second and third operands".into(),
        ));
    }
    if ops.m1() < ops.n1() {
        // Only G1 = K2 among connected regular graphs; the repeated-root
        // family would then need negative multiplicity m1 - n1.
        return Err(Error::ClosedFormInapplicable(format!(
            "first operand has fewer edges ({}) than vertices ({}); the surplus-midpoint \
             family is empty only when m1 >= n1",
            ops.m1(),
            ops.n1()
        )));
    }
    Ok(degrees)
}

/// Builds the full symbolic recipe for the corona spectrum.
pub fn spectrum_recipe(
    kind: CoronaKind,
    ops: &CoronaOperands,
    theta: &Spectrum,
    mu: &Spectrum,
    eta: &Spectrum,
) -> Result<SpectrumRecipe> {
    let (r1, r2, r3) = require_closed_form_shape(ops)?;
    check_operand_spectrum_orders(ops, theta, mu, eta)?;
    let (n1, m1) = (ops.n1(), ops.m1());
    let surplus = m1 - n1;

    let mut fixed: Vec<(f64, usize)> = Vec::new();
    let mut polynomial: Vec<(RealPolynomial, usize)> = Vec::new();

    match kind {
        CoronaKind::Svev => {
            for (mu_j, k) in drop_one_zero(mu, "G2")? {
                let value = (r1 as f64 + r2 as f64 * mu_j) / (r1 + r2) as f64;
                fixed.push((value, k * n1));
            }
            for (eta_k, k) in drop_one_zero(eta, "G3")? {
                let value = (1.0 + r3 as f64 * eta_k) / (r3 + 1) as f64;
                fixed.push((value, k * m1));
            }
            if surplus > 0 {
                polynomial.push((svev_excess_quadratic(ops)?, surplus));
            }
        }
        CoronaKind::Svee => {
            for (mu_j, k) in drop_one_zero(mu, "G2")? {
                let value = (2.0 + r2 as f64 * mu_j) / (r2 + 2) as f64;
                fixed.push((value, k * m1));
            }
            for (eta_k, k) in drop_one_zero(eta, "G3")? {
                let value = (1.0 + r3 as f64 * eta_k) / (r3 + 1) as f64;
                fixed.push((value, k * n1));
            }
            if surplus > 0 {
                fixed.push((1.0, surplus));
                fixed.push((2.0 / (r2 + 2) as f64, surplus));
            }
        }
    }
    for e in theta.entries() {
        // Snapping the zero mode to an exact 0 keeps the quartic's constant
        // term exactly zero, so the corona's own zero mode is reproduced.
        let theta_i = if e.value.abs() <= ZERO_EIGENVALUE_TOL {
            0.0
        } else {
            e.value
        };
        polynomial.push((quartic_coefficients(kind, ops, theta_i)?, e.multiplicity));
    }

    SpectrumRecipe::new(predicted_counts(kind, ops).n, fixed, polynomial)
}

/// Closed-form spectrum of the SVEV corona.
pub fn svev_spectrum_closed(
    ops: &CoronaOperands,
    theta: &Spectrum,
    mu: &Spectrum,
    eta: &Spectrum,
    grouping_tol: f64,
) -> Result<Spectrum> {
    spectrum_recipe(CoronaKind::Svev, ops, theta, mu, eta)?.solve(DEFAULT_IMAG_TOL, grouping_tol)
}

/// Closed-form spectrum of the SVEE corona.
pub fn svee_spectrum_closed(
    ops: &CoronaOperands,
    theta: &Spectrum,
    mu: &Spectrum,
    eta: &Spectrum,
    grouping_tol: f64,
) -> Result<Spectrum> {
    spectrum_recipe(CoronaKind::Svee, ops, theta, mu, eta)?.solve(DEFAULT_IMAG_TOL, grouping_tol)
}

/// Dispatch over [`CoronaKind`].
pub fn closed_spectrum(
    kind: CoronaKind,
    ops: &CoronaOperands,
    theta: &Spectrum,
    mu: &Spectrum,
    eta: &Spectrum,
    grouping_tol: f64,
) -> Result<Spectrum> {
    match kind {
        CoronaKind::Svev => svev_spectrum_closed(ops, theta, mu, eta, grouping_tol),
        CoronaKind::Svee => svee_spectrum_closed(ops, theta, mu, eta, grouping_tol),
    }
}

/// Characteristic polynomial of the corona normalized Laplacian, evaluated at
/// `lambda` as the cleared-denominator product of all recipe factors (each
/// polynomial factor normalized monic), i.e. `det(lambda I - L)`.
pub fn evaluate_charpoly(
    kind: CoronaKind,
    ops: &CoronaOperands,
    theta: &Spectrum,
    mu: &Spectrum,
    eta: &Spectrum,
    lambda: f64,
) -> Result<f64> {
    let recipe = spectrum_recipe(kind, ops, theta, mu, eta)?;
    let mut value = 1.0;
    for &(v, k) in recipe.fixed() {
        value *= (lambda - v).powi(k as i32);
    }
    for (p, k) in recipe.polynomial_parts() {
        value *= (p.eval(lambda) / p.leading()).powi(*k as i32);
    }
    Ok(value)
}

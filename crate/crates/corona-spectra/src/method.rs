//! Runtime-selectable spectrum strategies.
//!
//! Both ways of obtaining a corona spectrum — the dense eigensolver and the
//! operand-level closed forms — sit behind one trait so that callers (the
//! CLI in particular) can pick a strategy by name and cross-check one
//! against the other without knowing which is which.

use crate::closed_form::{closed_spectrum, operand_spectra};
use crate::corona::{build_corona, CoronaKind, CoronaOperands};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::{matrix_of, MatrixKind};
use crate::spectrum::{symmetric_eigenvalues, Spectrum};

/// A way of producing normalized Laplacian spectra.
pub trait SpectrumMethod: Sync {
    /// Registry key, as accepted on the command line.
    fn name(&self) -> &'static str;

    /// Human-readable label used in reports.
    fn report_label(&self) -> &'static str;

    /// Spectrum of the corona of `ops` under `kind`.
    fn corona_spectrum(
        &self,
        kind: CoronaKind,
        ops: &CoronaOperands,
        grouping_tol: f64,
    ) -> Result<Spectrum>;

    /// Spectrum of an arbitrary graph, when the strategy supports one.
    fn graph_spectrum(&self, g: &Graph, grouping_tol: f64) -> Result<Spectrum>;
}

/// Builds the corona explicitly and diagonalizes its normalized Laplacian.
/// Knows nothing about the spectrum's structure, which is what makes it a
/// useful check on the closed forms.
pub struct EigensolverOracle;

impl SpectrumMethod for EigensolverOracle {
    fn name(&self) -> &'static str {
        "oracle"
    }

    fn report_label(&self) -> &'static str {
        "eigensolver"
    }

    fn corona_spectrum(
        &self,
        kind: CoronaKind,
        ops: &CoronaOperands,
        grouping_tol: f64,
    ) -> Result<Spectrum> {
        self.graph_spectrum(&build_corona(kind, ops), grouping_tol)
    }

    fn graph_spectrum(&self, g: &Graph, grouping_tol: f64) -> Result<Spectrum> {
        Ok(symmetric_eigenvalues(
            &matrix_of(g, MatrixKind::NormalizedLaplacian)?,
            grouping_tol,
        ))
    }
}

/// Assembles the spectrum from operand eigenvalues and the factor
/// polynomials, never touching the corona itself. Only defined for coronas
/// of regular operands.
pub struct ClosedForm;

impl SpectrumMethod for ClosedForm {
    fn name(&self) -> &'static str {
        "closed"
    }

    fn report_label(&self) -> &'static str {
        "closed-form"
    }

    fn corona_spectrum(
        &self,
        kind: CoronaKind,
        ops: &CoronaOperands,
        grouping_tol: f64,
    ) -> Result<Spectrum> {
        let (theta, mu, eta) = operand_spectra(ops, grouping_tol)?;
        closed_spectrum(kind, ops, &theta, &mu, &eta, grouping_tol)
    }

    fn graph_spectrum(&self, _g: &Graph, _grouping_tol: f64) -> Result<Spectrum> {
        Err(Error::ClosedFormInapplicable(
            "the closed-form strategy needs corona operands, not a bare graph".into(),
        ))
    }
}

static METHODS: [&dyn SpectrumMethod; 2] = [&EigensolverOracle, &ClosedForm];

/// Looks a strategy up by its registry name.
pub fn spectrum_method(name: &str) -> Option<&'static dyn SpectrumMethod> {
    METHODS.iter().copied().find(|m| m.name() == name)
}

/// All registered strategy names, in registration order.
pub fn method_names() -> Vec<&'static str> {
    METHODS.iter().map(|m| m.name()).collect()
}

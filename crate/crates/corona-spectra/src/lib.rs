//! Corona constructions on subdivision graphs and their normalized
//! Laplacian spectra.
//!
//! The crate builds two families of composite graphs from an operand triple
//! `(G1, G2, G3)`: subdivide `G1`, then attach a copy of `G2` per vertex or
//! per edge of `G1` and a copy of `G3` the other way around, joined through
//! the subdivision midpoints. For regular operands the normalized Laplacian
//! spectrum of the result decomposes into explicit families — fixed values
//! inherited from the operand spectra plus roots of small polynomials — and
//! the crate computes it both ways:
//!
//! * **closed form**: assembled from the operand eigenvalues alone, without
//!   ever materializing the composite graph;
//! * **eigensolver**: dense diagonalization of the composite graph's
//!   normalized Laplacian, structure-blind by design.
//!
//! The two routes cross-check each other, and the spectrum feeds derived
//! invariants — spanning-tree counts (also computed exactly over big
//! integers), the degree-weighted Kirchhoff index (also computed from
//! effective resistances), Kemeny's constant, and cospectrality tests.
//!
//! The `corona-spectra` binary exposes all of this on the command line with
//! deterministic JSON output; see the crate README for a tour.

pub mod closed_form;
pub mod corona;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod matrix;
pub mod method;
pub mod poly;
pub mod report;
pub mod sampling;
pub mod spectrum;

pub use corona::{
    build_corona, predicted_counts, predicted_degrees, CoronaCounts, CoronaKind, CoronaOperands,
};
pub use error::{Error, Result};
pub use graph::{make_named_graph, Graph, GraphFamily};
pub use method::{method_names, spectrum_method, SpectrumMethod};
pub use spectrum::{symmetric_eigenvalues, Spectrum, SpectrumEntry, DEFAULT_GROUPING_TOL};

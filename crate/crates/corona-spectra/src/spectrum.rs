//! Eigenvalue multisets.
//!
//! A [`Spectrum`] is a sorted list of `(value, multiplicity)` pairs produced
//! by grouping raw eigenvalues: walking the sorted values, a new group starts
//! whenever the gap to the previous value exceeds the grouping tolerance, and
//! each group is represented by its mean. Closed-form recipes and the
//! eigensolver oracle both funnel into this type so their results can be
//! compared entry by entry.

use nalgebra::DMatrix;

use crate::matrix::SymMatrix;

/// Default tolerance for merging near-equal eigenvalues into one entry.
pub const DEFAULT_GROUPING_TOL: f64 = 1e-7;

/// One grouped eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumEntry {
    pub value: f64,
    pub multiplicity: usize,
}

/// A sorted eigenvalue multiset.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    entries: Vec<SpectrumEntry>,
    grouping_tol: f64,
}

impl Spectrum {
    /// Sorts `values`, groups them, and records the tolerance used.
    pub fn from_values(mut values: Vec<f64>, grouping_tol: f64) -> Spectrum {
        values.sort_by(f64::total_cmp);
        let mut entries: Vec<SpectrumEntry> = Vec::new();
        let mut group: Vec<f64> = Vec::new();
        let flush = |group: &mut Vec<f64>, entries: &mut Vec<SpectrumEntry>| {
            if !group.is_empty() {
                let mean = group.iter().sum::<f64>() / group.len() as f64;
                entries.push(SpectrumEntry {
                    value: mean,
                    multiplicity: group.len(),
                });
                group.clear();
            }
        };
        for v in values {
            if let Some(&last) = group.last() {
                if v - last > grouping_tol {
                    flush(&mut group, &mut entries);
                }
            }
            group.push(v);
        }
        flush(&mut group, &mut entries);
        Spectrum {
            entries,
            grouping_tol,
        }
    }

    /// Builds a spectrum from already-grouped `(value, multiplicity)` pairs,
    /// re-grouping through the same path as [`Spectrum::from_values`].
    pub fn from_pairs(pairs: Vec<(f64, usize)>, grouping_tol: f64) -> Spectrum {
        let mut values = Vec::new();
        for (v, k) in pairs {
            values.extend(std::iter::repeat_n(v, k));
        }
        Spectrum::from_values(values, grouping_tol)
    }

    pub fn entries(&self) -> &[SpectrumEntry] {
        &self.entries
    }

    /// Total eigenvalue count (the matrix order).
    pub fn order(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    pub fn grouping_tol(&self) -> f64 {
        self.grouping_tol
    }

    /// The values repeated according to multiplicity, in ascending order.
    pub fn expanded(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.order());
        for e in &self.entries {
            out.extend(std::iter::repeat_n(e.value, e.multiplicity));
        }
        out
    }

    /// Combined multiplicity of all entries within `tol` of `value`.
    pub fn multiplicity_near(&self, value: f64, tol: f64) -> usize {
        self.entries
            .iter()
            .filter(|e| (e.value - value).abs() <= tol)
            .map(|e| e.multiplicity)
            .sum()
    }

    /// Largest per-position gap between the two expanded, sorted value lists.
    ///
    /// Returns `None` when the orders differ (the comparison is meaningless).
    pub fn max_sorted_deviation(&self, other: &Spectrum) -> Option<f64> {
        let a = self.expanded();
        let b = other.expanded();
        if a.len() != b.len() {
            return None;
        }
        Some(
            a.iter()
                .zip(&b)
                .map(|(x, y)| (x - y).abs())
                .fold(0.0, f64::max),
        )
    }
}

/// Eigenvalues of a dense real symmetric matrix, grouped into a [`Spectrum`].
///
/// This is the oracle every closed-form result is judged against, so it stays
/// deliberately independent of the formula machinery: it hands the matrix to
/// a dense symmetric eigendecomposition and only sorts and groups the output.
pub fn symmetric_eigenvalues(matrix: &SymMatrix, grouping_tol: f64) -> Spectrum {
    let m: &DMatrix<f64> = matrix.as_matrix();
    if m.nrows() == 0 {
        return Spectrum::from_values(Vec::new(), grouping_tol);
    }
    let eigen = m.clone().symmetric_eigen();
    Spectrum::from_values(eigen.eigenvalues.iter().copied().collect(), grouping_tol)
}

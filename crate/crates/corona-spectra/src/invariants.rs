//! Derived invariants: spanning-tree counts, the degree-weighted Kirchhoff
//! index, Kemeny's constant, and cospectrality certificates.
//!
//! Each invariant is computed along several independent routes so that they
//! can check one another:
//!
//! * `spanning_trees_exact` — integer matrix-tree determinant, no floating
//!   point at all;
//! * `*_spectral` — from the normalized Laplacian spectrum (any graph);
//! * `*_closed` — from the operand data of a corona, without ever touching
//!   the corona itself;
//! * `kf_star_resistance_oracle` — from pairwise effective resistances via
//!   the Laplacian pseudoinverse.
//!
//! When routes disagree beyond tolerance, the exact determinant and the
//! eigensolver-based routes are the ones to trust; the closed form is the
//! result under test.

use nalgebra::DMatrix;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::closed_form::{
    check_operand_spectrum_orders, drop_one_zero, operand_spectra, quartic_coefficients,
    require_closed_form_shape, svev_excess_quadratic, ZERO_EIGENVALUE_TOL,
};
use crate::corona::{build_corona, predicted_counts, CoronaKind, CoronaOperands};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::{matrix_of, MatrixKind};
use crate::spectrum::{symmetric_eigenvalues, Spectrum};

/// Ascending coefficients of the adjacency characteristic polynomial shared
/// by a classic pair of non-isomorphic cospectral graphs on 14 vertices.
/// Kept as a reference point for users validating their own candidate pairs;
/// nothing in the crate depends on it.
pub const COSPECTRAL_PAIR_14_ADJ_CHARPOLY: [i64; 15] = [
    -12, 40, 216, -160, -800, 168, 1047, -88, -599, 22, 164, -2, -21, 0, 1,
];

/// Exact spanning-tree count by the matrix-tree theorem: the determinant of
/// a Laplacian minor, evaluated with fraction-free (Bareiss) elimination over
/// arbitrary-precision integers. Disconnected graphs give 0; a single vertex
/// gives 1.
pub fn spanning_trees_exact(g: &Graph) -> Result<BigUint> {
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidGraph(
            "spanning trees are undefined for the null graph".into(),
        ));
    }
    if n == 1 {
        return Ok(BigUint::one());
    }
    let profile = g.degree_profile();
    let degrees = profile.degrees();
    let k = n - 1;
    let mut a = vec![vec![BigInt::zero(); k]; k];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = BigInt::from(degrees[i]);
    }
    for &(u, v) in g.edges() {
        if u < k && v < k {
            a[u][v] = -BigInt::one();
            a[v][u] = -BigInt::one();
        }
    }

    // Bareiss elimination: a[i][j] <- (a[i][j] a[p][p] - a[i][p] a[p][j]) / prev,
    // where prev is the previous pivot; every division is exact.
    let mut sign_flips = 0usize;
    let mut prev = BigInt::one();
    for p in 0..k {
        if a[p][p].is_zero() {
            match (p + 1..k).find(|&i| !a[i][p].is_zero()) {
                Some(i) => {
                    a.swap(p, i);
                    sign_flips += 1;
                }
                None => return Ok(BigUint::zero()),
            }
        }
        for i in p + 1..k {
            for j in p + 1..k {
                let num = &a[i][j] * &a[p][p] - &a[i][p] * &a[p][j];
                a[i][j] = num / &prev;
            }
            a[i][p] = BigInt::zero();
        }
        prev = a[p][p].clone();
    }
    let mut det = a[k - 1][k - 1].clone();
    if sign_flips % 2 == 1 {
        det = -det;
    }
    if det.is_negative() {
        return Err(Error::Inconsistent(
            "matrix-tree determinant came out negative".into(),
        ));
    }
    Ok(det.to_biguint().expect("checked nonnegative"))
}

/// The nonzero modes of a connected graph's spectrum: everything except the
/// single (near-)zero eigenvalue.
fn nonzero_modes(g: &Graph, spec: &Spectrum) -> Result<Vec<f64>> {
    if !g.is_connected() {
        return Err(Error::Disconnected(
            "spectral invariants need a connected graph".into(),
        ));
    }
    if spec.order() != g.n() {
        return Err(Error::Inconsistent(format!(
            "spectrum order {} does not match graph order {}",
            spec.order(),
            g.n()
        )));
    }
    let expanded = spec.expanded();
    if expanded[0].abs() > 1e-6 {
        return Err(Error::Inconsistent(format!(
            "smallest eigenvalue {:.3e} is not a zero mode",
            expanded[0]
        )));
    }
    let modes = expanded[1..].to_vec();
    if let Some(&bad) = modes.iter().find(|&&lam| lam <= 0.0) {
        return Err(Error::Inconsistent(format!(
            "nonpositive eigenvalue {bad:.3e} beyond the zero mode"
        )));
    }
    Ok(modes)
}

/// Spanning-tree count from degrees and the normalized Laplacian spectrum:
/// `(prod d_i)(prod of nonzero eigenvalues) / (sum d_i)`, accumulated in log
/// space so large graphs cannot overflow intermediate products.
pub fn spanning_trees_spectral(g: &Graph, spec: &Spectrum) -> Result<f64> {
    if g.n() == 1 {
        return Ok(1.0);
    }
    let modes = nonzero_modes(g, spec)?;
    let profile = g.degree_profile();
    let mut ln = 0.0;
    for &d in profile.degrees() {
        ln += (d as f64).ln();
    }
    for &lam in &modes {
        ln += lam.ln();
    }
    ln -= (2.0 * g.m() as f64).ln();
    Ok(ln.exp())
}

/// Degree-weighted Kirchhoff index from the spectrum:
/// `2m * sum(1 / lambda)` over the nonzero eigenvalues.
pub fn kf_star_spectral(g: &Graph, spec: &Spectrum) -> Result<f64> {
    if g.n() == 1 {
        return Ok(0.0);
    }
    let modes = nonzero_modes(g, spec)?;
    let sum: f64 = modes.iter().map(|&lam| 1.0 / lam).sum();
    Ok(2.0 * g.m() as f64 * sum)
}

/// Kemeny's constant from the spectrum: `sum(1 / lambda)` over the nonzero
/// eigenvalues.
pub fn kemeny_spectral(g: &Graph, spec: &Spectrum) -> Result<f64> {
    if g.n() == 1 {
        return Ok(0.0);
    }
    let modes = nonzero_modes(g, spec)?;
    Ok(modes.iter().map(|&lam| 1.0 / lam).sum())
}

/// Reciprocal-root sum of a polynomial's roots via its first two
/// coefficients: for `c0 + c1 x + ...` with all roots nonzero, the sum of
/// reciprocals is `-c1 / c0`.
fn reciprocal_root_sum(coeffs: &[f64]) -> f64 {
    -coeffs[1] / coeffs[0]
}

/// Kemeny's constant of a corona, computed purely from the operand data: the
/// explicit spectrum families contribute reciprocals directly, and each
/// polynomial family contributes through its coefficients. The factor for
/// the zero mode of `G1` is handled by deflating the known zero root first.
pub fn kemeny_closed(
    kind: CoronaKind,
    ops: &CoronaOperands,
    theta: &Spectrum,
    mu: &Spectrum,
    eta: &Spectrum,
) -> Result<f64> {
    let (r1, r2, r3) = require_closed_form_shape(ops)?;
    check_operand_spectrum_orders(ops, theta, mu, eta)?;
    let (n1, m1) = (ops.n1(), ops.m1());
    let surplus = (m1 - n1) as f64;

    let mut sum = 0.0;
    match kind {
        CoronaKind::Svev => {
            for (mu_j, k) in drop_one_zero(mu, "G2")? {
                sum += (k * n1) as f64 * (r1 + r2) as f64 / (r1 as f64 + r2 as f64 * mu_j);
            }
            for (eta_k, k) in drop_one_zero(eta, "G3")? {
                sum += (k * m1) as f64 * (r3 + 1) as f64 / (1.0 + r3 as f64 * eta_k);
            }
            if m1 > n1 {
                sum += surplus * reciprocal_root_sum(svev_excess_quadratic(ops)?.coeffs());
            }
        }
        CoronaKind::Svee => {
            for (mu_j, k) in drop_one_zero(mu, "G2")? {
                sum += (k * m1) as f64 * (r2 + 2) as f64 / (2.0 + r2 as f64 * mu_j);
            }
            for (eta_k, k) in drop_one_zero(eta, "G3")? {
                sum += (k * n1) as f64 * (r3 + 1) as f64 / (1.0 + r3 as f64 * eta_k);
            }
            if m1 > n1 {
                sum += surplus * (1.0 + (r2 + 2) as f64 / 2.0);
            }
        }
    }

    let mut zero_modes = 0usize;
    for e in theta.entries() {
        if e.value.abs() <= ZERO_EIGENVALUE_TOL {
            zero_modes += e.multiplicity;
            let cubic = quartic_coefficients(kind, ops, 0.0)?.deflate_zero_root()?;
            sum += e.multiplicity as f64 * reciprocal_root_sum(cubic.coeffs());
        } else {
            let quartic = quartic_coefficients(kind, ops, e.value)?;
            sum += e.multiplicity as f64 * reciprocal_root_sum(quartic.coeffs());
        }
    }
    if zero_modes != 1 {
        return Err(Error::Inconsistent(format!(
            "first operand spectrum has {zero_modes} zero modes, expected exactly 1"
        )));
    }
    Ok(sum)
}

/// Degree-weighted Kirchhoff index of a corona from the operand data:
/// `2m * K` with `m` from the counting formulas and `K` from
/// [`kemeny_closed`].
pub fn kf_star_closed(
    kind: CoronaKind,
    ops: &CoronaOperands,
    theta: &Spectrum,
    mu: &Spectrum,
    eta: &Spectrum,
) -> Result<f64> {
    let m = predicted_counts(kind, ops).m;
    Ok(2.0 * m as f64 * kemeny_closed(kind, ops, theta, mu, eta)?)
}

/// Spanning-tree count of a corona from the operand data, accumulated in log
/// space. All factors are strictly positive for valid operands.
pub fn spanning_trees_closed(
    kind: CoronaKind,
    ops: &CoronaOperands,
    theta: &Spectrum,
    mu: &Spectrum,
    eta: &Spectrum,
) -> Result<f64> {
    let (r1, r2, r3) = require_closed_form_shape(ops)?;
    check_operand_spectrum_orders(ops, theta, mu, eta)?;
    let (n1, m1, n2, n3) = (ops.n1(), ops.m1(), ops.n2(), ops.n3());
    let m = predicted_counts(kind, ops).m as f64;

    let mut ln = 0.0;
    let mut zero_modes = 0usize;
    match kind {
        CoronaKind::Svev => {
            for e in theta.entries() {
                if e.value.abs() <= ZERO_EIGENVALUE_TOL {
                    zero_modes += e.multiplicity;
                } else {
                    ln += e.multiplicity as f64 * e.value.ln();
                }
            }
            for (mu_j, k) in drop_one_zero(mu, "G2")? {
                ln += (k * n1) as f64 * (r1 as f64 + r2 as f64 * mu_j).ln();
            }
            for (eta_k, k) in drop_one_zero(eta, "G3")? {
                ln += (k * m1) as f64 * (1.0 + r3 as f64 * eta_k).ln();
            }
            ln += (2 * n1 - 1) as f64 * (r1 as f64).ln();
            ln += (m1 - 1) as f64 * ((1 + n2) as f64).ln();
            ln += (m1 as f64 - n1 as f64 - 1.0) * 2.0_f64.ln();
            let head = (n3 * r1 * r3 + 4 * n2 * r1 + 2 * n2 * r2 + 2 * n3 * r1 + 4 * r1) as f64;
            ln += head.ln() - m.ln();
        }
        CoronaKind::Svee => {
            let scale = (r1 + r1 * n2) as f64;
            for e in theta.entries() {
                if e.value.abs() <= ZERO_EIGENVALUE_TOL {
                    zero_modes += e.multiplicity;
                } else {
                    ln += e.multiplicity as f64 * (scale * e.value).ln();
                }
            }
            for (mu_j, k) in drop_one_zero(mu, "G2")? {
                ln += (k * m1) as f64 * (2.0 + r2 as f64 * mu_j).ln();
            }
            for (eta_k, k) in drop_one_zero(eta, "G3")? {
                ln += (k * n1) as f64 * (1.0 + r3 as f64 * eta_k).ln();
            }
            ln += (2.0 * m1 as f64 - n1 as f64 - 1.0) * 2.0_f64.ln();
            let head = (n2 * r1 * r2 + 4 * n2 * r1 + 2 * n3 * r3 + 4 * n3 + 4 * r1) as f64;
            ln += head.ln() - m.ln();
        }
    }
    if zero_modes != 1 {
        return Err(Error::Inconsistent(format!(
            "first operand spectrum has {zero_modes} zero modes, expected exactly 1"
        )));
    }
    Ok(ln.exp())
}

/// Degree-weighted Kirchhoff index from pairwise effective resistances:
/// `sum over i < j of d_i d_j r_ij`, with `r_ij` read off the Moore-Penrose
/// pseudoinverse of the combinatorial Laplacian. Entirely independent of the
/// normalized Laplacian spectrum.
pub fn kf_star_resistance_oracle(g: &Graph) -> Result<f64> {
    if !g.is_connected() {
        return Err(Error::Disconnected(
            "effective resistances need a connected graph".into(),
        ));
    }
    let n = g.n();
    if n == 1 {
        return Ok(0.0);
    }
    let l = matrix_of(g, MatrixKind::Laplacian)?.into_matrix();
    let eigen = l.symmetric_eigen();
    let max_eig = eigen
        .eigenvalues
        .iter()
        .fold(0.0_f64, |acc, &x| acc.max(x.abs()));
    let cutoff = 1e-9 * max_eig.max(1.0);
    let mut pinv = DMatrix::zeros(n, n);
    for (idx, &lam) in eigen.eigenvalues.iter().enumerate() {
        if lam.abs() > cutoff {
            let v = eigen.eigenvectors.column(idx);
            pinv += (v * v.transpose()) / lam;
        }
    }
    let profile = g.degree_profile();
    let d = profile.degrees();
    let mut kf = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            let r_ij = pinv[(i, i)] + pinv[(j, j)] - 2.0 * pinv[(i, j)];
            kf += (d[i] * d[j]) as f64 * r_ij;
        }
    }
    Ok(kf)
}

/// Whether two spectra agree entrywise (sorted, with multiplicity) within
/// `tol`. Different orders are never cospectral.
pub fn is_cospectral(a: &Spectrum, b: &Spectrum, tol: f64) -> bool {
    a.max_sorted_deviation(b).is_some_and(|d| d <= tol)
}

/// Every invariant the crate can compute for one graph, with the
/// cross-method consistency summarized in `max_rel_dev`.
#[derive(Debug, Clone)]
pub struct InvariantReport {
    pub n: usize,
    pub m: usize,
    pub tau_exact: BigUint,
    pub tau_spectral: Option<f64>,
    pub tau_closed: Option<f64>,
    pub kf_star_spectral: Option<f64>,
    pub kf_star_closed: Option<f64>,
    pub kf_star_resistance: Option<f64>,
    pub kemeny_spectral: Option<f64>,
    pub kemeny_closed: Option<f64>,
    /// Largest relative deviation between any two routes to the same value.
    pub max_rel_dev: f64,
    /// Present when parts of the report had to be skipped (disconnected
    /// input), with the reason.
    pub skipped: Option<String>,
}

fn rel_dev(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / a.abs().max(b.abs())
    }
}

fn fold_dev(max: &mut f64, a: Option<f64>, b: Option<f64>) {
    if let (Some(a), Some(b)) = (a, b) {
        if a.is_finite() && b.is_finite() {
            *max = max.max(rel_dev(a, b));
        }
    }
}

/// Builds the report for an arbitrary graph (no closed-form routes).
pub fn invariant_report_for_graph(g: &Graph, grouping_tol: f64) -> Result<InvariantReport> {
    let tau_exact = spanning_trees_exact(g)?;
    if !g.is_connected() {
        return Ok(InvariantReport {
            n: g.n(),
            m: g.m(),
            tau_exact,
            tau_spectral: None,
            tau_closed: None,
            kf_star_spectral: None,
            kf_star_closed: None,
            kf_star_resistance: None,
            kemeny_spectral: None,
            kemeny_closed: None,
            max_rel_dev: 0.0,
            skipped: Some(
                "graph is disconnected: spectral and resistance invariants are undefined".into(),
            ),
        });
    }
    let spec = symmetric_eigenvalues(&matrix_of(g, MatrixKind::NormalizedLaplacian)?, grouping_tol);
    let tau_spectral = spanning_trees_spectral(g, &spec)?;
    let kf_spectral = kf_star_spectral(g, &spec)?;
    let kemeny = kemeny_spectral(g, &spec)?;
    let kf_resistance = kf_star_resistance_oracle(g)?;

    let mut max_dev: f64 = 0.0;
    fold_dev(&mut max_dev, Some(tau_spectral), tau_exact.to_f64());
    fold_dev(&mut max_dev, Some(kf_spectral), Some(kf_resistance));
    fold_dev(
        &mut max_dev,
        Some(kf_spectral),
        Some(2.0 * g.m() as f64 * kemeny),
    );
    Ok(InvariantReport {
        n: g.n(),
        m: g.m(),
        tau_exact,
        tau_spectral: Some(tau_spectral),
        tau_closed: None,
        kf_star_spectral: Some(kf_spectral),
        kf_star_closed: None,
        kf_star_resistance: Some(kf_resistance),
        kemeny_spectral: Some(kemeny),
        kemeny_closed: None,
        max_rel_dev: max_dev,
        skipped: None,
    })
}

/// Builds the report for a corona given its operands, adding the closed-form
/// routes when they apply (irregular or degenerate operands simply leave
/// those fields empty).
pub fn invariant_report_for_corona(
    kind: CoronaKind,
    ops: &CoronaOperands,
    grouping_tol: f64,
) -> Result<InvariantReport> {
    let g = build_corona(kind, ops);
    let mut report = invariant_report_for_graph(&g, grouping_tol)?;

    let closed = (|| -> Result<(f64, f64, f64)> {
        let (theta, mu, eta) = operand_spectra(ops, grouping_tol)?;
        Ok((
            spanning_trees_closed(kind, ops, &theta, &mu, &eta)?,
            kf_star_closed(kind, ops, &theta, &mu, &eta)?,
            kemeny_closed(kind, ops, &theta, &mu, &eta)?,
        ))
    })();
    match closed {
        Ok((tau, kf, kemeny)) => {
            report.tau_closed = Some(tau);
            report.kf_star_closed = Some(kf);
            report.kemeny_closed = Some(kemeny);
            let mut max_dev = report.max_rel_dev;
            fold_dev(&mut max_dev, Some(tau), report.tau_exact.to_f64());
            fold_dev(&mut max_dev, Some(kf), report.kf_star_spectral);
            fold_dev(&mut max_dev, Some(kemeny), report.kemeny_spectral);
            report.max_rel_dev = max_dev;
        }
        Err(Error::ClosedFormInapplicable(_)) | Err(Error::NotRegular(_)) => {}
        Err(e) => return Err(e),
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_named_graph, GraphFamily};
    use crate::spectrum::DEFAULT_GROUPING_TOL;

    fn named(family: GraphFamily, k: usize) -> Graph {
        make_named_graph(family, k).unwrap()
    }

    fn normalized_spectrum(g: &Graph) -> Spectrum {
        symmetric_eigenvalues(
            &matrix_of(g, MatrixKind::NormalizedLaplacian).unwrap(),
            DEFAULT_GROUPING_TOL,
        )
    }

    #[test]
    fn exact_tree_counts_on_known_graphs() {
        // Cycles have n spanning trees, complete graphs n^(n-2) (Cayley).
        for k in 3..=6 {
            let c = named(GraphFamily::Cycle, k);
            assert_eq!(spanning_trees_exact(&c).unwrap(), BigUint::from(k));
        }
        for k in 3..=7u32 {
            let kg = named(GraphFamily::Complete, k as usize);
            assert_eq!(
                spanning_trees_exact(&kg).unwrap(),
                BigUint::from(k).pow(k - 2)
            );
        }
        // Trees, single vertices, disconnected graphs.
        assert_eq!(
            spanning_trees_exact(&named(GraphFamily::Path, 5)).unwrap(),
            BigUint::one()
        );
        assert_eq!(
            spanning_trees_exact(&named(GraphFamily::Complete, 1)).unwrap(),
            BigUint::one()
        );
        let two_triangles = Graph::new(6, vec![(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])
            .unwrap();
        assert_eq!(
            spanning_trees_exact(&two_triangles).unwrap(),
            BigUint::zero()
        );
    }

    #[test]
    fn exact_tree_count_on_petersen() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        let petersen = Graph::new(10, edges).unwrap();
        assert_eq!(spanning_trees_exact(&petersen).unwrap(), BigUint::from(2000u32));
    }

    #[test]
    fn spectral_tree_count_rounds_to_exact() {
        for g in [
            named(GraphFamily::Cycle, 5),
            named(GraphFamily::Complete, 6),
            named(GraphFamily::Path, 4),
        ] {
            let spec = normalized_spectrum(&g);
            let spectral = spanning_trees_spectral(&g, &spec).unwrap();
            let exact = spanning_trees_exact(&g).unwrap().to_f64().unwrap();
            assert!(
                (spectral - exact).abs() < 0.5,
                "spectral {spectral} vs exact {exact}"
            );
        }
    }

    #[test]
    fn kirchhoff_routes_agree() {
        for g in [
            named(GraphFamily::Cycle, 4),
            named(GraphFamily::Complete, 5),
            named(GraphFamily::Path, 6),
        ] {
            let spec = normalized_spectrum(&g);
            let spectral = kf_star_spectral(&g, &spec).unwrap();
            let resistance = kf_star_resistance_oracle(&g).unwrap();
            assert!(
                rel_dev(spectral, resistance) <= 1e-9,
                "{spectral} vs {resistance}"
            );
            // The index and Kemeny's constant differ by the factor 2m.
            let kemeny = kemeny_spectral(&g, &spec).unwrap();
            assert!(rel_dev(spectral, 2.0 * g.m() as f64 * kemeny) <= 1e-12);
        }
    }

    #[test]
    fn kirchhoff_on_complete_graph_matches_hand_value() {
        // K_n: every pair has resistance 2/n, so Kf* = C(n,2) (n-1)^2 (2/n).
        let n = 5usize;
        let g = named(GraphFamily::Complete, n);
        let expected = (n * (n - 1) / 2) as f64 * ((n - 1) * (n - 1)) as f64 * 2.0 / n as f64;
        let got = kf_star_resistance_oracle(&g).unwrap();
        assert!((got - expected).abs() < 1e-9);
    }

    fn fixture(kind: CoronaKind) -> CoronaOperands {
        let g3 = match kind {
            CoronaKind::Svev => named(GraphFamily::Complete, 2),
            CoronaKind::Svee => named(GraphFamily::Complete, 1),
        };
        CoronaOperands::new(
            named(GraphFamily::Cycle, 4),
            named(GraphFamily::Complete, 2),
            g3,
        )
        .unwrap()
    }

    #[test]
    fn closed_invariants_on_fixtures() {
        // Frozen values, cross-checked against the exact determinant and the
        // resistance oracle in the integration suites.
        let cases = [
            (CoronaKind::Svev, 71_663_616.0, 8492.0 / 3.0, 2123.0 / 60.0),
            (CoronaKind::Svee, 884_736.0, 4912.0 / 3.0, 307.0 / 12.0),
        ];
        for (kind, tau, kf, kemeny) in cases {
            let ops = fixture(kind);
            let (theta, mu, eta) = operand_spectra(&ops, DEFAULT_GROUPING_TOL).unwrap();
            let tau_c = spanning_trees_closed(kind, &ops, &theta, &mu, &eta).unwrap();
            assert!(rel_dev(tau_c, tau) <= 1e-9, "{kind}: tau {tau_c} vs {tau}");
            let kf_c = kf_star_closed(kind, &ops, &theta, &mu, &eta).unwrap();
            assert!(rel_dev(kf_c, kf) <= 1e-10, "{kind}: kf {kf_c} vs {kf}");
            let k_c = kemeny_closed(kind, &ops, &theta, &mu, &eta).unwrap();
            assert!((k_c - kemeny).abs() <= 1e-10, "{kind}: K {k_c} vs {kemeny}");
        }
    }

    #[test]
    fn cospectrality_basics() {
        let c4 = named(GraphFamily::Cycle, 4);
        let spec = normalized_spectrum(&c4);
        let relabeled = c4.relabel(&[3, 1, 0, 2]).unwrap();
        assert!(is_cospectral(&spec, &normalized_spectrum(&relabeled), 1e-9));
        assert!(!is_cospectral(
            &spec,
            &normalized_spectrum(&named(GraphFamily::Complete, 4)),
            1e-7
        ));
        assert!(!is_cospectral(
            &spec,
            &normalized_spectrum(&named(GraphFamily::Cycle, 5)),
            1e-7
        ));
    }

    #[test]
    fn report_for_disconnected_graph() {
        let g = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        let report = invariant_report_for_graph(&g, DEFAULT_GROUPING_TOL).unwrap();
        assert_eq!(report.tau_exact, BigUint::zero());
        assert!(report.tau_spectral.is_none());
        assert!(report.kf_star_spectral.is_none());
        assert!(report.skipped.is_some());
    }

    #[test]
    fn report_for_corona_has_all_routes() {
        let ops = fixture(CoronaKind::Svev);
        let report = invariant_report_for_corona(CoronaKind::Svev, &ops, DEFAULT_GROUPING_TOL)
            .unwrap();
        assert_eq!(report.tau_exact, BigUint::from(71_663_616u64));
        assert!(report.tau_closed.is_some());
        assert!(report.kf_star_resistance.is_some());
        assert!(report.max_rel_dev <= 1e-6, "dev {}", report.max_rel_dev);
    }

    #[test]
    fn report_omits_closed_routes_for_irregular_operands() {
        let ops = CoronaOperands::new(
            named(GraphFamily::Cycle, 4),
            named(GraphFamily::Path, 3),
            named(GraphFamily::Complete, 2),
        )
        .unwrap();
        let report = invariant_report_for_corona(CoronaKind::Svev, &ops, DEFAULT_GROUPING_TOL)
            .unwrap();
        assert!(report.tau_closed.is_none());
        assert!(report.tau_spectral.is_some());
    }
}

//! Graph matrices: adjacency, degree, (signless/normalized) Laplacian, the
//! block form of the corona normalized Laplacian, and two small matrix
//! identities used as cross-checks.
//!
//! The normalized Laplacian follows the convention `L = I - D^{-1/2} A
//! D^{-1/2}` with `L := 0` for edgeless graphs (so a single vertex has
//! spectrum `{0}`); graphs mixing isolated and non-isolated vertices are
//! rejected because no consistent scaling exists for them.

use std::fmt::Write as _;

use nalgebra::DMatrix;

use crate::corona::{CoronaKind, CoronaOperands};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A dense real symmetric matrix.
///
/// The wrapper guarantees squareness, exact (bitwise) symmetry, and finite
/// entries, which lets downstream code hand the contents to a symmetric
/// eigensolver without re-checking.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    inner: DMatrix<f64>,
}

impl SymMatrix {
    /// Wraps a matrix, verifying squareness, symmetry, and finiteness.
    pub fn from_matrix(m: DMatrix<f64>) -> Result<SymMatrix> {
        if m.nrows() != m.ncols() {
            return Err(Error::InvalidGraph(format!(
                "matrix is {}x{}, not square",
                m.nrows(),
                m.ncols()
            )));
        }
        for i in 0..m.nrows() {
            for j in 0..i {
                if m[(i, j)] != m[(j, i)] {
                    return Err(Error::Inconsistent(format!(
                        "matrix entry ({i}, {j}) breaks symmetry"
                    )));
                }
            }
        }
        if m.iter().any(|x| !x.is_finite()) {
            return Err(Error::Inconsistent("matrix has a non-finite entry".into()));
        }
        Ok(SymMatrix { inner: m })
    }

    pub fn zeros(order: usize) -> SymMatrix {
        SymMatrix {
            inner: DMatrix::zeros(order, order),
        }
    }

    pub fn order(&self) -> usize {
        self.inner.nrows()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.inner[(i, j)]
    }

    pub fn as_matrix(&self) -> &DMatrix<f64> {
        &self.inner
    }

    pub fn into_matrix(self) -> DMatrix<f64> {
        self.inner
    }

    /// Largest absolute entrywise difference against another matrix of the
    /// same order (`inf` if the orders differ).
    pub fn max_abs_diff(&self, other: &SymMatrix) -> f64 {
        if self.order() != other.order() {
            return f64::INFINITY;
        }
        self.inner
            .iter()
            .zip(other.inner.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Text dump: a line holding the order, then one row per line with
    /// 17-significant-digit scientific notation (round-trips exactly).
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.order());
        for i in 0..self.order() {
            let row: Vec<String> = (0..self.order())
                .map(|j| format!("{:.16e}", self.inner[(i, j)]))
                .collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
        out
    }

    /// Parses the [`SymMatrix::to_text`] dump format.
    pub fn from_text(text: &str) -> Result<SymMatrix> {
        let mut tokens = text.split_whitespace();
        let order: usize = tokens
            .next()
            .ok_or_else(|| Error::Parse {
                line: 1,
                reason: "missing order header".into(),
            })?
            .parse()
            .map_err(|_| Error::Parse {
                line: 1,
                reason: "order is not an integer".into(),
            })?;
        let mut m = DMatrix::zeros(order, order);
        for i in 0..order {
            for j in 0..order {
                let tok = tokens.next().ok_or_else(|| Error::Parse {
                    line: i + 2,
                    reason: format!("expected {order}x{order} entries"),
                })?;
                m[(i, j)] = tok.parse().map_err(|_| Error::Parse {
                    line: i + 2,
                    reason: format!("{tok:?} is not a number"),
                })?;
            }
        }
        if tokens.next().is_some() {
            return Err(Error::Parse {
                line: order + 1,
                reason: "trailing entries beyond the declared order".into(),
            });
        }
        SymMatrix::from_matrix(m)
    }
}

/// The matrix families derivable from a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixKind {
    Adjacency,
    Degree,
    Laplacian,
    SignlessLaplacian,
    NormalizedLaplacian,
}

impl std::str::FromStr for MatrixKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "adjacency" => Ok(MatrixKind::Adjacency),
            "degree" => Ok(MatrixKind::Degree),
            "laplacian" => Ok(MatrixKind::Laplacian),
            "signless_laplacian" => Ok(MatrixKind::SignlessLaplacian),
            "normalized_laplacian" => Ok(MatrixKind::NormalizedLaplacian),
            other => Err(Error::InvalidGraph(format!("unknown matrix kind {other:?}"))),
        }
    }
}

/// Builds the requested matrix of a graph.
///
/// # Errors
///
/// Only the normalized Laplacian can fail: it is undefined when isolated and
/// non-isolated vertices coexist.
pub fn matrix_of(g: &Graph, kind: MatrixKind) -> Result<SymMatrix> {
    let n = g.n();
    let degrees = g.degree_profile();
    let degrees = degrees.degrees();
    let mut m = DMatrix::zeros(n, n);
    match kind {
        MatrixKind::Adjacency => {
            for &(u, v) in g.edges() {
                m[(u, v)] = 1.0;
                m[(v, u)] = 1.0;
            }
        }
        MatrixKind::Degree => {
            for v in 0..n {
                m[(v, v)] = degrees[v] as f64;
            }
        }
        MatrixKind::Laplacian | MatrixKind::SignlessLaplacian => {
            let sign = if kind == MatrixKind::Laplacian { -1.0 } else { 1.0 };
            for v in 0..n {
                m[(v, v)] = degrees[v] as f64;
            }
            for &(u, v) in g.edges() {
                m[(u, v)] = sign;
                m[(v, u)] = sign;
            }
        }
        MatrixKind::NormalizedLaplacian => {
            if g.m() == 0 {
                // Edgeless graphs get the zero matrix, so Spec(K1) = {0}.
                return Ok(SymMatrix { inner: m });
            }
            if degrees.contains(&0) {
                return Err(Error::MixedIsolatedVertices);
            }
            for v in 0..n {
                m[(v, v)] = 1.0;
            }
            for &(u, v) in g.edges() {
                let w = -1.0 / ((degrees[u] * degrees[v]) as f64).sqrt();
                m[(u, v)] = w;
                m[(v, u)] = w;
            }
        }
    }
    Ok(SymMatrix { inner: m })
}

/// Assembles the corona normalized Laplacian directly from its block
/// structure, without building the corona graph.
///
/// The vertex order matches the construction in [`crate::corona`]: originals,
/// midpoints, `G2` copies, `G3` copies. Agreement of this matrix with
/// `matrix_of(build_corona(..), NormalizedLaplacian)` is the structural
/// cross-check behind all closed-form results.
///
/// # Errors
///
/// Operands must be regular with nonempty `G2` and `G3`.
pub fn assemble_block_normalized_laplacian(
    kind: CoronaKind,
    ops: &CoronaOperands,
) -> Result<SymMatrix> {
    let (r1, r2, r3) = ops.regular_degrees()?;
    let (n1, m1, n2, n3) = (ops.n1(), ops.m1(), ops.n2(), ops.n3());
    if n2 == 0 || n3 == 0 {
        return Err(Error::InvalidOperands(
            "block assembly needs nonempty second and third operands".into(),
        ));
    }

    match kind {
        CoronaKind::Svev => {
            // Degrees: originals r1, midpoints s, G2 copies r1 + r2, G3 copies r3 + 1.
            let s = 2 * n2 + n3 + 2;
            let a = 1.0 / ((r1 * s) as f64).sqrt();
            let b = 1.0 / (((r1 + r2) * s) as f64).sqrt();
            let c = 1.0 / (((r3 + 1) * s) as f64).sqrt();
            let off2 = n1 + m1;
            let off3 = off2 + n1 * n2;
            let order = off3 + m1 * n3;
            let mut m = DMatrix::zeros(order, order);
            for i in 0..order {
                m[(i, i)] = 1.0;
            }
            for (j, &(u, v)) in ops.g1().edges().iter().enumerate() {
                let mid = n1 + j;
                for endpoint in [u, v] {
                    m[(endpoint, mid)] = -a;
                    m[(mid, endpoint)] = -a;
                    for w in 0..n2 {
                        let col = off2 + endpoint * n2 + w;
                        m[(mid, col)] = -b;
                        m[(col, mid)] = -b;
                    }
                }
                for w in 0..n3 {
                    let col = off3 + j * n3 + w;
                    m[(mid, col)] = -c;
                    m[(col, mid)] = -c;
                }
            }
            let w2 = -1.0 / ((r1 + r2) as f64);
            for i in 0..n1 {
                for &(x, y) in ops.g2().edges() {
                    m[(off2 + i * n2 + x, off2 + i * n2 + y)] = w2;
                    m[(off2 + i * n2 + y, off2 + i * n2 + x)] = w2;
                }
            }
            let w3 = -1.0 / ((r3 + 1) as f64);
            for j in 0..m1 {
                for &(x, y) in ops.g3().edges() {
                    m[(off3 + j * n3 + x, off3 + j * n3 + y)] = w3;
                    m[(off3 + j * n3 + y, off3 + j * n3 + x)] = w3;
                }
            }
            Ok(SymMatrix { inner: m })
        }
        CoronaKind::Svee => {
            // Degrees: originals s, midpoints 2, G2 copies r2 + 2, G3 copies r3 + 1.
            let s = r1 * n2 + r1 + n3;
            let a = 1.0 / ((2 * s) as f64).sqrt();
            let b = 1.0 / (((r2 + 2) * s) as f64).sqrt();
            let c = 1.0 / (((r3 + 1) * s) as f64).sqrt();
            let off2 = n1 + m1;
            let off3 = off2 + m1 * n2;
            let order = off3 + n1 * n3;
            let mut m = DMatrix::zeros(order, order);
            for i in 0..order {
                m[(i, i)] = 1.0;
            }
            for (j, &(u, v)) in ops.g1().edges().iter().enumerate() {
                let mid = n1 + j;
                for endpoint in [u, v] {
                    m[(endpoint, mid)] = -a;
                    m[(mid, endpoint)] = -a;
                    for w in 0..n2 {
                        let col = off2 + j * n2 + w;
                        m[(endpoint, col)] = -b;
                        m[(col, endpoint)] = -b;
                    }
                }
            }
            for i in 0..n1 {
                for w in 0..n3 {
                    let col = off3 + i * n3 + w;
                    m[(i, col)] = -c;
                    m[(col, i)] = -c;
                }
            }
            let w2 = -1.0 / ((r2 + 2) as f64);
            for j in 0..m1 {
                for &(x, y) in ops.g2().edges() {
                    m[(off2 + j * n2 + x, off2 + j * n2 + y)] = w2;
                    m[(off2 + j * n2 + y, off2 + j * n2 + x)] = w2;
                }
            }
            let w3 = -1.0 / ((r3 + 1) as f64);
            for i in 0..n1 {
                for &(x, y) in ops.g3().edges() {
                    m[(off3 + i * n3 + x, off3 + i * n3 + y)] = w3;
                    m[(off3 + i * n3 + y, off3 + i * n3 + x)] = w3;
                }
            }
            Ok(SymMatrix { inner: m })
        }
    }
}

/// Coronal of a symmetric matrix whose rows all sum to `t`: the value
/// `1^T (λI - M)^{-1} 1 = n / (λ - t)`.
///
/// # Errors
///
/// `λ = t` is the pole of the expression.
pub fn coronal_constant_row_sum(n: usize, t: f64, lambda: f64) -> Result<f64> {
    if lambda == t {
        return Err(Error::CoronalPole { t });
    }
    Ok(n as f64 / (lambda - t))
}

/// Result of checking the line-graph characteristic-polynomial identity.
#[derive(Debug, Clone, Copy)]
pub struct LineGraphIdentityReport {
    /// Largest deviation of `det(xI - A(line(G)))` from
    /// `(x+2)^{m-n} det((x+2)I - Q(G))` over the sample points, relative to
    /// `max(1, |lhs|, |rhs|)`.
    pub max_deviation: f64,
    /// For regular graphs: the same deviation with the right-hand side
    /// rewritten through the normalized Laplacian spectrum,
    /// `(x+2)^{m-n} prod_i (x - (2r-2) + r λ_i)`.
    pub corollary_max_deviation: Option<f64>,
}

impl LineGraphIdentityReport {
    pub fn passes(&self, tol: f64) -> bool {
        self.max_deviation <= tol && self.corollary_max_deviation.is_none_or(|d| d <= tol)
    }
}

/// Evaluates both sides of the line-graph characteristic-polynomial identity
/// at each sample point, via eigenvalue products.
///
/// For `m < n` (forests) the factor `(x+2)^{m-n}` has a pole at `x = -2`;
/// sample points should avoid it.
pub fn line_graph_charpoly_identity_check(
    g: &Graph,
    sample_points: &[f64],
) -> Result<LineGraphIdentityReport> {
    let exponent = g.m() as i32 - g.n() as i32;
    let line_adj_eigs = symmetric_values(&matrix_of(&g.line_graph(), MatrixKind::Adjacency)?);
    let signless_eigs = symmetric_values(&matrix_of(g, MatrixKind::SignlessLaplacian)?);
    let regular = g.degree_profile().regular_degree();
    let normalized_eigs = match regular {
        Some(_) => Some(symmetric_values(&matrix_of(
            g,
            MatrixKind::NormalizedLaplacian,
        )?)),
        None => None,
    };

    let mut max_deviation: f64 = 0.0;
    let mut corollary_max: Option<f64> = regular.map(|_| 0.0);
    for &x in sample_points {
        let lhs: f64 = line_adj_eigs.iter().map(|&a| x - a).product();
        let shift = (x + 2.0).powi(exponent);
        let rhs: f64 = shift * signless_eigs.iter().map(|&q| x + 2.0 - q).product::<f64>();
        let denom = lhs.abs().max(rhs.abs()).max(1.0);
        max_deviation = max_deviation.max((lhs - rhs).abs() / denom);

        if let (Some(r), Some(eigs)) = (regular, &normalized_eigs) {
            let r = r as f64;
            let alt: f64 = shift
                * eigs
                    .iter()
                    .map(|&lam| x - (2.0 * r - 2.0) + r * lam)
                    .product::<f64>();
            let denom = lhs.abs().max(alt.abs()).max(1.0);
            let dev = (lhs - alt).abs() / denom;
            corollary_max = corollary_max.map(|m| m.max(dev));
        }
    }
    Ok(LineGraphIdentityReport {
        max_deviation,
        corollary_max_deviation: corollary_max,
    })
}

fn symmetric_values(m: &SymMatrix) -> Vec<f64> {
    if m.order() == 0 {
        return Vec::new();
    }
    let eigen = m.as_matrix().clone().symmetric_eigen();
    let mut v: Vec<f64> = eigen.eigenvalues.iter().copied().collect();
    v.sort_by(f64::total_cmp);
    v
}

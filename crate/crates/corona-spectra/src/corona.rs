//! The two subdivision-based corona constructions.
//!
//! Both start from the subdivision `S(G1)` of a connected first operand and
//! then attach copies of `G2` and `G3`:
//!
//! * **SVEV** (`svev_corona`): one copy of `G2` per *vertex* of `G1` and one
//!   copy of `G3` per *edge* of `G1`. The midpoint vertex of edge `(u, v)` is
//!   joined to every vertex of the `u`- and `v`-copies of `G2` and to every
//!   vertex of its own `G3` copy.
//! * **SVEE** (`svee_corona`): one copy of `G2` per *edge* and one copy of
//!   `G3` per *vertex*. Both endpoints of edge `j` are joined to every vertex
//!   of `G2`-copy `j`, and each original vertex is joined to every vertex of
//!   its own `G3` copy.
//!
//! Vertex labels are assigned in blocks, in this order: original vertices of
//! `G1`, midpoint (inserted) vertices in edge-index order, all `G2` copies
//! (each contiguous, in copy order), all `G3` copies. Downstream code that
//! assembles matrices block-by-block relies on exactly this order.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Which of the two constructions is meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoronaKind {
    /// Subdivision-vertex(-edge-vertex) variant: `G2` per vertex, `G3` per edge.
    Svev,
    /// Subdivision-edge(-edge-vertex) variant: `G2` per edge, `G3` per vertex.
    Svee,
}

impl std::str::FromStr for CoronaKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "svev" => Ok(CoronaKind::Svev),
            "svee" => Ok(CoronaKind::Svee),
            other => Err(Error::InvalidOperands(format!(
                "unknown corona kind {other:?} (expected svev or svee)"
            ))),
        }
    }
}

impl std::fmt::Display for CoronaKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CoronaKind::Svev => "svev",
            CoronaKind::Svee => "svee",
        })
    }
}

/// A validated operand triple `(G1, G2, G3)`.
///
/// `G1` must be connected with at least two vertices and one edge. `G2` and
/// `G3` may be anything, including edgeless or entirely empty graphs; the
/// closed-form machinery imposes its own extra requirements (regularity,
/// nonempty `G2`/`G3`) at the point of use.
#[derive(Debug, Clone)]
pub struct CoronaOperands {
    g1: Graph,
    g2: Graph,
    g3: Graph,
}

/// Predicted vertex/edge counts of a corona, straight from the counting
/// formulas (no construction involved).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoronaCounts {
    pub n: usize,
    pub m: usize,
}

/// Predicted degree of each vertex class of a corona of regular operands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PredictedDegrees {
    /// Original vertices of `G1`.
    pub original: usize,
    /// Midpoint vertices inserted by the subdivision.
    pub inserted: usize,
    /// Vertices inside the `G2` copies.
    pub g2_copy: usize,
    /// Vertices inside the `G3` copies.
    pub g3_copy: usize,
}

impl CoronaOperands {
    pub fn new(g1: Graph, g2: Graph, g3: Graph) -> Result<Self> {
        if g1.n() < 2 || g1.m() < 1 {
            return Err(Error::InvalidOperands(format!(
                "first operand needs at least 2 vertices and 1 edge, got n = {}, m = {}",
                g1.n(),
                g1.m()
            )));
        }
        if !g1.is_connected() {
            return Err(Error::InvalidOperands(
                "first operand must be connected".into(),
            ));
        }
        Ok(CoronaOperands { g1, g2, g3 })
    }

    pub fn g1(&self) -> &Graph {
        &self.g1
    }

    pub fn g2(&self) -> &Graph {
        &self.g2
    }

    pub fn g3(&self) -> &Graph {
        &self.g3
    }

    pub fn n1(&self) -> usize {
        self.g1.n()
    }

    pub fn m1(&self) -> usize {
        self.g1.m()
    }

    pub fn n2(&self) -> usize {
        self.g2.n()
    }

    pub fn m2(&self) -> usize {
        self.g2.m()
    }

    pub fn n3(&self) -> usize {
        self.g3.n()
    }

    pub fn m3(&self) -> usize {
        self.g3.m()
    }

    /// The three regular degrees `(r1, r2, r3)`.
    ///
    /// # Errors
    ///
    /// Any irregular operand is reported by position.
    pub fn regular_degrees(&self) -> Result<(usize, usize, usize)> {
        let degree = |g: &Graph, which: &str| {
            g.degree_profile()
                .regular_degree()
                .ok_or_else(|| Error::NotRegular(format!("operand {which} is not regular")))
        };
        Ok((
            degree(&self.g1, "G1")?,
            degree(&self.g2, "G2")?,
            degree(&self.g3, "G3")?,
        ))
    }
}

/// Vertex/edge counts the construction must produce, from the counting
/// formulas alone.
pub fn predicted_counts(kind: CoronaKind, ops: &CoronaOperands) -> CoronaCounts {
    let (n1, m1) = (ops.n1(), ops.m1());
    let (n2, m2) = (ops.n2(), ops.m2());
    let (n3, m3) = (ops.n3(), ops.m3());
    match kind {
        CoronaKind::Svev => CoronaCounts {
            n: n1 + m1 + n1 * n2 + m1 * n3,
            m: 2 * m1 + n1 * m2 + m1 * m3 + 2 * m1 * n2 + m1 * n3,
        },
        CoronaKind::Svee => CoronaCounts {
            n: n1 + m1 + m1 * n2 + n1 * n3,
            m: 2 * m1 + m1 * m2 + n1 * m3 + n1 * n3 + 2 * m1 * n2,
        },
    }
}

/// Degree of each vertex class, for regular operands.
pub fn predicted_degrees(kind: CoronaKind, ops: &CoronaOperands) -> Result<PredictedDegrees> {
    let (r1, r2, r3) = ops.regular_degrees()?;
    let (n2, n3) = (ops.n2(), ops.n3());
    Ok(match kind {
        CoronaKind::Svev => PredictedDegrees {
            original: r1,
            inserted: 2 * n2 + n3 + 2,
            g2_copy: r1 + r2,
            g3_copy: r3 + 1,
        },
        CoronaKind::Svee => PredictedDegrees {
            original: (n2 + 1) * r1 + n3,
            inserted: 2,
            g2_copy: r2 + 2,
            g3_copy: r3 + 1,
        },
    })
}

/// Builds the SVEV corona. See the module docs for the vertex layout.
pub fn svev_corona(ops: &CoronaOperands) -> Graph {
    let (n1, m1, n2, n3) = (ops.n1(), ops.m1(), ops.n2(), ops.n3());
    let base2 = |i: usize| n1 + m1 + i * n2;
    let base3 = |j: usize| n1 + m1 + n1 * n2 + j * n3;

    let mut edges = Vec::new();
    for (j, &(u, v)) in ops.g1.edges().iter().enumerate() {
        let mid = n1 + j;
        edges.push((u, mid));
        edges.push((v, mid));
        for w in 0..n2 {
            edges.push((mid, base2(u) + w));
            edges.push((mid, base2(v) + w));
        }
        for w in 0..n3 {
            edges.push((mid, base3(j) + w));
        }
    }
    for i in 0..n1 {
        for &(x, y) in ops.g2.edges() {
            edges.push((base2(i) + x, base2(i) + y));
        }
    }
    for j in 0..m1 {
        for &(x, y) in ops.g3.edges() {
            edges.push((base3(j) + x, base3(j) + y));
        }
    }
    let counts = predicted_counts(CoronaKind::Svev, ops);
    Graph::new(counts.n, edges).expect("corona construction stays within the vertex range")
}

/// Builds the SVEE corona. See the module docs for the vertex layout.
pub fn svee_corona(ops: &CoronaOperands) -> Graph {
    let (n1, m1, n2, n3) = (ops.n1(), ops.m1(), ops.n2(), ops.n3());
    let base2 = |j: usize| n1 + m1 + j * n2;
    let base3 = |i: usize| n1 + m1 + m1 * n2 + i * n3;

    let mut edges = Vec::new();
    for (j, &(u, v)) in ops.g1.edges().iter().enumerate() {
        let mid = n1 + j;
        edges.push((u, mid));
        edges.push((v, mid));
        for w in 0..n2 {
            edges.push((u, base2(j) + w));
            edges.push((v, base2(j) + w));
        }
    }
    for j in 0..m1 {
        for &(x, y) in ops.g2.edges() {
            edges.push((base2(j) + x, base2(j) + y));
        }
    }
    for i in 0..n1 {
        for w in 0..n3 {
            edges.push((i, base3(i) + w));
        }
        for &(x, y) in ops.g3.edges() {
            edges.push((base3(i) + x, base3(i) + y));
        }
    }
    let counts = predicted_counts(CoronaKind::Svee, ops);
    Graph::new(counts.n, edges).expect("corona construction stays within the vertex range")
}

/// Convenience dispatch over [`CoronaKind`].
pub fn build_corona(kind: CoronaKind, ops: &CoronaOperands) -> Graph {
    match kind {
        CoronaKind::Svev => svev_corona(ops),
        CoronaKind::Svee => svee_corona(ops),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_named_graph, GraphFamily};

    fn named(family: GraphFamily, k: usize) -> Graph {
        make_named_graph(family, k).unwrap()
    }

    fn fixture_svev() -> CoronaOperands {
        CoronaOperands::new(
            named(GraphFamily::Cycle, 4),
            named(GraphFamily::Complete, 2),
            named(GraphFamily::Complete, 2),
        )
        .unwrap()
    }

    fn fixture_svee() -> CoronaOperands {
        CoronaOperands::new(
            named(GraphFamily::Cycle, 4),
            named(GraphFamily::Complete, 2),
            named(GraphFamily::Complete, 1),
        )
        .unwrap()
    }

    #[test]
    fn operand_validation() {
        let c4 = named(GraphFamily::Cycle, 4);
        let k1 = named(GraphFamily::Complete, 1);
        assert!(CoronaOperands::new(k1.clone(), c4.clone(), c4.clone()).is_err());
        let disconnected = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert!(CoronaOperands::new(disconnected, c4.clone(), c4.clone()).is_err());
        assert!(CoronaOperands::new(c4.clone(), k1.clone(), k1).is_ok());
    }

    #[test]
    fn svev_fixture_counts_and_degrees() {
        let ops = fixture_svev();
        let counts = predicted_counts(CoronaKind::Svev, &ops);
        assert_eq!((counts.n, counts.m), (24, 40));
        let g = svev_corona(&ops);
        assert_eq!((g.n(), g.m()), (24, 40));

        let predicted = predicted_degrees(CoronaKind::Svev, &ops).unwrap();
        assert_eq!(
            predicted,
            PredictedDegrees {
                original: 2,
                inserted: 8,
                g2_copy: 3,
                g3_copy: 2
            }
        );
        let degrees = g.degree_profile();
        let degrees = degrees.degrees();
        assert!(degrees[..4].iter().all(|&d| d == predicted.original));
        assert!(degrees[4..8].iter().all(|&d| d == predicted.inserted));
        assert!(degrees[8..16].iter().all(|&d| d == predicted.g2_copy));
        assert!(degrees[16..].iter().all(|&d| d == predicted.g3_copy));
    }

    #[test]
    fn svee_fixture_counts_and_degrees() {
        let ops = fixture_svee();
        let counts = predicted_counts(CoronaKind::Svee, &ops);
        assert_eq!((counts.n, counts.m), (20, 32));
        let g = svee_corona(&ops);
        assert_eq!((g.n(), g.m()), (20, 32));

        let predicted = predicted_degrees(CoronaKind::Svee, &ops).unwrap();
        assert_eq!(
            predicted,
            PredictedDegrees {
                original: 7,
                inserted: 2,
                g2_copy: 3,
                g3_copy: 1
            }
        );
        let degrees = g.degree_profile();
        let degrees = degrees.degrees();
        assert!(degrees[..4].iter().all(|&d| d == predicted.original));
        assert!(degrees[4..8].iter().all(|&d| d == predicted.inserted));
        assert!(degrees[8..16].iter().all(|&d| d == predicted.g2_copy));
        assert!(degrees[16..].iter().all(|&d| d == predicted.g3_copy));
    }

    #[test]
    fn coronas_of_connected_operands_are_connected() {
        for kind in [CoronaKind::Svev, CoronaKind::Svee] {
            let ops = fixture_svev();
            assert!(build_corona(kind, &ops).is_connected());
        }
    }

    #[test]
    fn null_second_operand_degenerates_cleanly() {
        // With no G2 the SVEV corona collapses to a subdivision with G3
        // pendants per edge; only the counting identities are asserted here.
        let ops = CoronaOperands::new(
            named(GraphFamily::Cycle, 4),
            Graph::new(0, vec![]).unwrap(),
            named(GraphFamily::Complete, 2),
        )
        .unwrap();
        let counts = predicted_counts(CoronaKind::Svev, &ops);
        let g = svev_corona(&ops);
        assert_eq!((g.n(), g.m()), (counts.n, counts.m));
        assert_eq!((g.n(), g.m()), ((4 + 4) + 8, (8 + 4) + 8));

        let counts = predicted_counts(CoronaKind::Svee, &ops);
        let g = svee_corona(&ops);
        assert_eq!((g.n(), g.m()), (counts.n, counts.m));
    }

    #[test]
    fn null_third_operand_degenerates_cleanly() {
        let ops = CoronaOperands::new(
            named(GraphFamily::Cycle, 4),
            named(GraphFamily::Complete, 2),
            Graph::new(0, vec![]).unwrap(),
        )
        .unwrap();
        for kind in [CoronaKind::Svev, CoronaKind::Svee] {
            let counts = predicted_counts(kind, &ops);
            let g = build_corona(kind, &ops);
            assert_eq!((g.n(), g.m()), (counts.n, counts.m));
        }
    }

    #[test]
    fn degree_prediction_needs_regular_operands() {
        let path = named(GraphFamily::Path, 3); // irregular
        let ops = CoronaOperands::new(named(GraphFamily::Cycle, 4), path, named(GraphFamily::Complete, 2))
            .unwrap();
        assert!(predicted_degrees(CoronaKind::Svev, &ops).is_err());
        // Counts never need regularity.
        let _ = predicted_counts(CoronaKind::Svev, &ops);
    }
}

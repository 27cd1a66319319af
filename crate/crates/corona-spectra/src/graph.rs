//! Simple undirected graphs with a canonical edge order.
//!
//! A [`Graph`] stores a vertex count and a sorted, deduplicated edge list with
//! every edge `(u, v)` normalized to `u < v`. The position of an edge in that
//! list is its *edge index*; the subdivision and incidence operations both key
//! off it, so keeping the order canonical is what makes vertex labels in
//! derived graphs reproducible.
//!
//! The module also owns the edge-list text format used on disk:
//!
//! ```text
//! # optional comments
//! n m
//! u v
//! ...
//! ```
//!
//! with one `u v` pair per remaining line, `#` starting a comment, and blank
//! lines ignored.

use std::fmt::Write as _;
use std::path::Path;

use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// An undirected simple graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// Per-vertex degrees with a min/max/regularity summary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    degrees: Vec<usize>,
    min: usize,
    max: usize,
}

/// The graph families that can be generated by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFamily {
    Path,
    Cycle,
    Complete,
    Empty,
}

impl std::str::FromStr for GraphFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "path" => Ok(GraphFamily::Path),
            "cycle" => Ok(GraphFamily::Cycle),
            "complete" => Ok(GraphFamily::Complete),
            "empty" => Ok(GraphFamily::Empty),
            other => Err(Error::InvalidGraph(format!(
                "unknown graph family {other:?} (expected path, cycle, complete, or empty)"
            ))),
        }
    }
}

impl std::fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            GraphFamily::Path => "path",
            GraphFamily::Cycle => "cycle",
            GraphFamily::Complete => "complete",
            GraphFamily::Empty => "empty",
        };
        f.write_str(s)
    }
}

impl Graph {
    /// Validates a raw edge list and builds the canonical graph.
    ///
    /// Endpoints are reordered so `u < v`, the list is sorted
    /// lexicographically, and the result is checked for loops, out-of-range
    /// endpoints, and duplicates (all of which are errors rather than being
    /// silently repaired).
    pub fn new(n: usize, raw_edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut edges = Vec::with_capacity(raw_edges.len());
        for (u, v) in raw_edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        Ok(Graph { n, edges })
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// The canonical edge list; the position of an edge is its edge index.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Per-vertex degree list plus summary.
    pub fn degree_profile(&self) -> DegreeProfile {
        let mut degrees = vec![0usize; self.n];
        for &(u, v) in &self.edges {
            degrees[u] += 1;
            degrees[v] += 1;
        }
        let min = degrees.iter().copied().min().unwrap_or(0);
        let max = degrees.iter().copied().max().unwrap_or(0);
        DegreeProfile { degrees, min, max }
    }

    /// Adjacency lists, in increasing neighbor order.
    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Subdivision graph: every edge gains a midpoint vertex.
    ///
    /// Original vertices keep their labels `0..n`; the midpoint of the edge
    /// with index `j` becomes vertex `n + j`.
    pub fn subdivision(&self) -> Graph {
        let mut edges = Vec::with_capacity(2 * self.m());
        for (j, &(u, v)) in self.edges.iter().enumerate() {
            edges.push((u, self.n + j));
            edges.push((v, self.n + j));
        }
        Graph::new(self.n + self.m(), edges).expect("subdivision of a valid graph is valid")
    }

    /// Line graph: vertices are edges of `self` (in edge-index order), joined
    /// when the underlying edges share an endpoint.
    pub fn line_graph(&self) -> Graph {
        let mut incident = vec![Vec::new(); self.n];
        for (j, &(u, v)) in self.edges.iter().enumerate() {
            incident[u].push(j);
            incident[v].push(j);
        }
        let mut edges = Vec::new();
        for list in &incident {
            for (a, &e) in list.iter().enumerate() {
                for &f in &list[a + 1..] {
                    edges.push((e, f));
                }
            }
        }
        // Two distinct simple edges share at most one endpoint, so no pair is
        // generated twice and validation cannot fail.
        Graph::new(self.m(), edges).expect("line graph of a simple graph is simple")
    }

    /// Vertex-edge incidence matrix, `n x m`, with `1.0` where the vertex
    /// meets the edge.
    pub fn incidence_matrix(&self) -> DMatrix<f64> {
        let mut r = DMatrix::zeros(self.n, self.m());
        for (j, &(u, v)) in self.edges.iter().enumerate() {
            r[(u, j)] = 1.0;
            r[(v, j)] = 1.0;
        }
        r
    }

    /// Number of connected components.
    ///
    /// # Errors
    ///
    /// The count is undefined on the null graph (`n = 0`).
    pub fn connected_component_count(&self) -> Result<usize> {
        if self.n == 0 {
            return Err(Error::InvalidGraph(
                "component count is undefined for the null graph".into(),
            ));
        }
        let adj = self.adjacency_lists();
        let mut seen = vec![false; self.n];
        let mut components = 0;
        let mut stack = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            components += 1;
            seen[start] = true;
            stack.push(start);
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        Ok(components)
    }

    /// True when the graph has exactly one connected component.
    pub fn is_connected(&self) -> bool {
        self.connected_component_count().is_ok_and(|c| c == 1)
    }

    /// Applies a vertex relabeling: vertex `v` of `self` becomes `perm[v]`.
    ///
    /// # Errors
    ///
    /// `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidGraph(format!(
                "permutation length {} does not match vertex count {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || seen[p] {
                return Err(Error::InvalidGraph(
                    "relabeling is not a permutation of the vertex set".into(),
                ));
            }
            seen[p] = true;
        }
        let edges = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::new(self.n, edges)
    }

    /// Parses the edge-list text format.
    pub fn from_edge_list_str(text: &str) -> Result<Graph> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (idx, raw_line) in text.lines().enumerate() {
            let line = raw_line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(Error::Parse {
                    line: idx + 1,
                    reason: format!("expected two integers, found {:?}", line),
                });
            }
            let parse = |s: &str| -> Result<usize> {
                s.parse().map_err(|_| Error::Parse {
                    line: idx + 1,
                    reason: format!("{s:?} is not a nonnegative integer"),
                })
            };
            let a = parse(fields[0])?;
            let b = parse(fields[1])?;
            match header {
                None => header = Some((a, b)),
                Some((_, m)) => {
                    if edges.len() == m {
                        return Err(Error::Parse {
                            line: idx + 1,
                            reason: format!("more than the declared {m} edges"),
                        });
                    }
                    edges.push((a, b));
                }
            }
        }
        let (n, m) = header.ok_or(Error::Parse {
            line: text.lines().count().max(1),
            reason: "missing \"n m\" header line".into(),
        })?;
        if edges.len() != m {
            return Err(Error::Parse {
                line: text.lines().count().max(1),
                reason: format!("declared {m} edges but found {}", edges.len()),
            });
        }
        Graph::new(n, edges)
    }

    /// Renders the canonical edge-list text (inverse of
    /// [`Graph::from_edge_list_str`] up to comments and whitespace).
    pub fn to_edge_list_string(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, self.m());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Reads a graph from an edge-list file.
    pub fn read_edge_list_file(path: &Path) -> Result<Graph> {
        let text = std::fs::read_to_string(path)?;
        Graph::from_edge_list_str(&text)
    }

    /// Writes the canonical edge-list file.
    pub fn write_edge_list_file(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_edge_list_string())?;
        Ok(())
    }
}

impl DegreeProfile {
    /// Degrees indexed by vertex.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Smallest degree (0 on the null graph).
    pub fn min(&self) -> usize {
        self.min
    }

    /// Largest degree (0 on the null graph).
    pub fn max(&self) -> usize {
        self.max
    }

    /// The common degree if the graph is regular.
    ///
    /// The null graph is treated as 0-regular so that degenerate operands can
    /// still flow through the constructions.
    pub fn regular_degree(&self) -> Option<usize> {
        if self.degrees.is_empty() || self.min == self.max {
            Some(self.min)
        } else {
            None
        }
    }
}

/// Builds a named graph: `path(k)`, `cycle(k)` (k >= 3), `complete(k)`, or
/// `empty(k)`, each on `k >= 1` vertices.
pub fn make_named_graph(family: GraphFamily, k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidGraph(format!(
            "family {family} needs at least one vertex"
        )));
    }
    let edges: Vec<(usize, usize)> = match family {
        GraphFamily::Path => (0..k - 1).map(|i| (i, i + 1)).collect(),
        GraphFamily::Cycle => {
            if k < 3 {
                return Err(Error::InvalidGraph(format!(
                    "cycle needs at least 3 vertices, got {k}"
                )));
            }
            (0..k).map(|i| (i, (i + 1) % k)).collect()
        }
        GraphFamily::Complete => (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
            .collect(),
        GraphFamily::Empty => Vec::new(),
    };
    Graph::new(k, edges)
}

//! Seeded random graphs and operand triples for verification runs.
//!
//! Everything here is deterministic given the seed, so a failing
//! verification run can be replayed exactly by quoting its seed.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

use crate::corona::CoronaOperands;
use crate::error::{Error, Result};
use crate::graph::{make_named_graph, Graph, GraphFamily};

/// The stream cipher generator keeps sampling reproducible across platforms.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random `r`-regular simple graph on `n` vertices via the pairing model:
/// shuffle `r` stubs per vertex, pair them off, and retry whenever a loop or
/// parallel edge shows up. Retries are cheap for the small sizes used here.
pub fn random_regular_graph<R: Rng>(rng: &mut R, n: usize, r: usize) -> Result<Graph> {
    if r >= n {
        return Err(Error::InvalidGraph(format!(
            "no simple {r}-regular graph on {n} vertices"
        )));
    }
    if !(n * r).is_multiple_of(2) {
        return Err(Error::InvalidGraph(format!(
            "no {r}-regular graph on {n} vertices: odd degree sum"
        )));
    }
    'attempt: for _ in 0..500 {
        let mut stubs: Vec<usize> = (0..n)
            .flat_map(|v| std::iter::repeat_n(v, r))
            .collect();
        stubs.shuffle(rng);
        let mut seen = HashSet::new();
        let mut edges = Vec::with_capacity(n * r / 2);
        for pair in stubs.chunks(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v {
                continue 'attempt;
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                continue 'attempt;
            }
            edges.push(key);
        }
        return Graph::new(n, edges);
    }
    Err(Error::Inconsistent(format!(
        "pairing model kept colliding for a {r}-regular graph on {n} vertices"
    )))
}

/// Like [`random_regular_graph`], but resamples until the result is
/// connected.
pub fn random_connected_regular_graph<R: Rng>(rng: &mut R, n: usize, r: usize) -> Result<Graph> {
    for _ in 0..200 {
        let g = random_regular_graph(rng, n, r)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::Inconsistent(format!(
        "no connected {r}-regular graph on {n} vertices after repeated sampling"
    )))
}

/// A uniformly random permutation of `0..n`.
pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

fn named(family: GraphFamily, k: usize) -> Graph {
    make_named_graph(family, k).expect("pool entries are valid")
}

/// Two disjoint edges — the smallest 1-regular graph that is not connected.
fn two_disjoint_edges() -> Graph {
    Graph::new(4, vec![(0, 1), (2, 3)]).expect("fixed graph")
}

/// First operands: connected regular graphs with at least as many edges as
/// vertices, so every closed-form route applies.
pub fn random_first_operand<R: Rng>(rng: &mut R) -> Result<Graph> {
    match rng.gen_range(0..3) {
        0 => Ok(named(GraphFamily::Cycle, rng.gen_range(3..=8))),
        1 => Ok(named(GraphFamily::Complete, rng.gen_range(3..=5))),
        _ => {
            let n = *[6, 8, 10].choose(rng).expect("nonempty");
            let r = rng.gen_range(3..=4);
            random_connected_regular_graph(rng, n, r)
        }
    }
}

/// Second operands: small regular graphs of degree at least one. Degree-zero
/// choices are excluded because they collapse pairs of quartic roots into
/// exact double roots, which f64 root extraction cannot resolve to the
/// tolerance the verification suites demand.
pub fn random_second_operand<R: Rng>(rng: &mut R) -> Graph {
    match rng.gen_range(0..5) {
        0 => named(GraphFamily::Complete, 2),
        1 => named(GraphFamily::Complete, 3),
        2 => named(GraphFamily::Complete, 4),
        3 => named(GraphFamily::Cycle, 4),
        _ => two_disjoint_edges(),
    }
}

/// Third operands: small regular graphs, edgeless ones included.
pub fn random_third_operand<R: Rng>(rng: &mut R) -> Graph {
    match rng.gen_range(0..8) {
        0 => named(GraphFamily::Complete, 1),
        1 => named(GraphFamily::Complete, 2),
        2 => named(GraphFamily::Complete, 3),
        3 => named(GraphFamily::Complete, 4),
        4 => named(GraphFamily::Cycle, 4),
        5 => two_disjoint_edges(),
        6 => named(GraphFamily::Empty, 2),
        _ => named(GraphFamily::Empty, 3),
    }
}

/// A full operand triple drawn from the pools above.
pub fn random_operand_triple<R: Rng>(rng: &mut R) -> Result<CoronaOperands> {
    CoronaOperands::new(
        random_first_operand(rng)?,
        random_second_operand(rng),
        random_third_operand(rng),
    )
}

//! Deterministic constructions of the standard test families: cycles,
//! cliques, Mycielskians and their multi-level cone generalization, Kneser
//! graphs, and seeded Erdős–Rényi samples.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error)]
pub enum GeneratorError {
    #[error("cycle needs at least 3 vertices, got {0}")]
    CycleTooSmall(usize),
    #[error("complete graph needs at least 1 vertex, got {0}")]
    CompleteTooSmall(usize),
    #[error("generalized mycielskian needs at least 1 level")]
    NoLevels,
    #[error("kneser graph needs n >= 2k >= 2, got n={n}, k={k}")]
    KneserParams { n: usize, k: usize },
    #[error("edge probability must lie in [0, 1], got {0}")]
    ProbabilityOutOfRange(f64),
}

fn build(n: usize, edges: Vec<(usize, usize)>) -> Graph {
    Graph::from_edges(n, &edges).expect("generator emits valid edges")
}

/// Cycle C_n.
pub fn cycle(n: usize) -> Result<Graph, GeneratorError> {
    if n < 3 {
        return Err(GeneratorError::CycleTooSmall(n));
    }
    Ok(build(n, (0..n).map(|v| (v, (v + 1) % n)).collect()))
}

/// Complete graph K_n.
pub fn complete(n: usize) -> Result<Graph, GeneratorError> {
    if n < 1 {
        return Err(GeneratorError::CompleteTooSmall(n));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Ok(build(n, edges))
}

/// Mycielskian of `g`: vertices `V ∪ V' ∪ {z}` with `v' = n + v` and
/// `z = 2n`; edges of `g`, plus `(u', v)` for every edge `uv`, plus `(v', z)`
/// for every `v`. Raises the chromatic number by one and preserves
/// triangle-freeness.
pub fn mycielski(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for (u, v) in g.edges() {
        edges.push((n + u, v));
        edges.push((n + v, u));
    }
    for v in 0..n {
        edges.push((n + v, 2 * n));
    }
    build(2 * n + 1, edges)
}

/// Cone over `g` with `levels` layers: vertex `(v, i)` is `i*n + v`, the apex
/// `z` is `levels*n`. Layer 0 carries the edges of `g`, consecutive layers
/// are joined by bipartite copies of the edge set, and the apex is joined to
/// the top layer. With `levels = 2` this is exactly [`mycielski`]; the
/// construction itself follows the usual cone-over-graph definition.
pub fn generalized_mycielski(g: &Graph, levels: usize) -> Result<Graph, GeneratorError> {
    if levels < 1 {
        return Err(GeneratorError::NoLevels);
    }
    let n = g.n();
    let apex = levels * n;
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for i in 0..levels - 1 {
        for (u, v) in g.edges() {
            edges.push((i * n + u, (i + 1) * n + v));
            edges.push((i * n + v, (i + 1) * n + u));
        }
    }
    for v in 0..n {
        edges.push(((levels - 1) * n + v, apex));
    }
    Ok(build(apex + 1, edges))
}

/// k-subsets of `{0..n-1}` in lexicographic order, as bitmasks.
fn k_subsets(n: usize, k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().fold(0u64, |m, &i| m | 1 << i));
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Kneser graph K(n, k): vertices are the k-subsets of an n-set in
/// lexicographic order, adjacent exactly when disjoint.
pub fn kneser(n: usize, k: usize) -> Result<Graph, GeneratorError> {
    if k < 1 || n < 2 * k {
        return Err(GeneratorError::KneserParams { n, k });
    }
    let subsets = k_subsets(n, k);
    let mut edges = Vec::new();
    for i in 0..subsets.len() {
        for j in i + 1..subsets.len() {
            if subsets[i] & subsets[j] == 0 {
                edges.push((i, j));
            }
        }
    }
    Ok(build(subsets.len(), edges))
}

/// Erdős–Rényi sample G(n, p), reproducible across platforms: a ChaCha8
/// stream keyed by `seed` is consumed one `f64` per vertex pair, pairs
/// scanned in ascending lexicographic order, and the pair becomes an edge
/// exactly when the draw is below `p`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph, GeneratorError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GeneratorError::ProbabilityOutOfRange(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Ok(build(n, edges))
}

//! Micro-scale ground truth by exhaustion.
//!
//! Labeled graphs on `v` vertices are walked in edge-mask order (bit `i` of
//! the mask is the `i`-th vertex pair in ascending lexicographic order). A
//! canonical form — the minimum mask over all vertex permutations — supports
//! isomorphism tests and optional enumeration pruning.
//!
//! [`f_oracle`] finds the exact crossover order for the guarantee "every
//! graph this small whose radius-`r` balls are `c`-colorable is itself
//! `n`-colorable", by scanning orders upward until a counterexample appears.

use thiserror::Error;

use crate::chromatic;
use crate::graph::Graph;

/// Hard cap on enumerable orders: 2^28 labeled graphs on 8 vertices.
pub const MAX_ENUM_VERTICES: usize = 8;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("vertex count {0} outside supported range 1..={MAX_ENUM_VERTICES}")]
    OrderOutOfRange(usize),
}

pub fn pair_count(v: usize) -> usize {
    v * (v - 1) / 2
}

fn pair_index(v: usize, a: usize, b: usize) -> usize {
    debug_assert!(a < b && b < v);
    a * v - a * (a + 1) / 2 + (b - a - 1)
}

/// Edge mask of `g` under the pair ordering above. Needs at most 64 pairs.
pub fn edge_mask(g: &Graph) -> u64 {
    let v = g.n();
    assert!(pair_count(v) <= 64, "graph too large for a 64-bit mask");
    let mut mask = 0u64;
    for (a, b) in g.edges() {
        mask |= 1 << pair_index(v, a, b);
    }
    mask
}

pub fn graph_from_mask(v: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut idx = 0;
    for a in 0..v {
        for b in a + 1..v {
            if mask >> idx & 1 == 1 {
                edges.push((a, b));
            }
            idx += 1;
        }
    }
    Graph::from_edges(v, &edges).expect("mask encodes a simple graph")
}

/// All `v!` permutations of `0..v`, by Heap's algorithm. The identity comes
/// first.
fn permutations(v: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..v).collect();
    let mut stack = vec![0usize; v];
    out.push(items.clone());
    let mut i = 1;
    while i < v {
        if stack[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(stack[i], i);
            }
            out.push(items.clone());
            stack[i] += 1;
            i = 1;
        } else {
            stack[i] = 0;
            i += 1;
        }
    }
    out
}

/// Relabeling machinery for a fixed order `v`, built once and reused across
/// many masks.
struct Relabeler {
    v: usize,
    perms: Vec<Vec<usize>>,
}

impl Relabeler {
    fn new(v: usize) -> Self {
        Relabeler {
            v,
            perms: permutations(v),
        }
    }

    fn apply(&self, perm: &[usize], mask: u64) -> u64 {
        let mut out = 0u64;
        let mut rest = mask;
        while rest != 0 {
            let idx = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            // invert idx back to the pair (a, b)
            let (a, b) = self.pair_of(idx);
            let (pa, pb) = (perm[a], perm[b]);
            out |= 1 << pair_index(self.v, pa.min(pb), pa.max(pb));
        }
        out
    }

    fn pair_of(&self, mut idx: usize) -> (usize, usize) {
        for a in 0..self.v {
            let row = self.v - a - 1;
            if idx < row {
                return (a, a + 1 + idx);
            }
            idx -= row;
        }
        unreachable!("pair index in range")
    }

    /// Minimum mask over all relabelings.
    fn canonical(&self, mask: u64) -> u64 {
        self.perms
            .iter()
            .map(|p| self.apply(p, mask))
            .min()
            .expect("at least the identity permutation")
    }

    /// True iff no relabeling produces a strictly smaller mask. Bails out on
    /// the first witness, which keeps pruned enumeration cheap.
    fn is_canonical(&self, mask: u64) -> bool {
        self.perms.iter().skip(1).all(|p| self.apply(p, mask) >= mask)
    }
}

/// Minimum edge mask of any graph isomorphic to `g`. Equal canonical forms
/// mean isomorphic graphs.
pub fn canonical_form(g: &Graph) -> u64 {
    assert!(
        g.n() <= MAX_ENUM_VERTICES,
        "canonical form enumerates all {}! relabelings",
        g.n()
    );
    Relabeler::new(g.n()).canonical(edge_mask(g))
}

/// All labeled graphs on `v` vertices, each exactly once, in edge-mask order.
pub fn enumerate_graphs(v: usize) -> Result<impl Iterator<Item = Graph>, OracleError> {
    if !(1..=MAX_ENUM_VERTICES).contains(&v) {
        return Err(OracleError::OrderOutOfRange(v));
    }
    let end = 1u64 << pair_count(v);
    Ok((0..end).map(move |mask| graph_from_mask(v, mask)))
}

/// Whether [`f_oracle`] may skip non-canonical masks. Pruning never changes
/// the outcome: the predicate is isomorphism-invariant, the canonical form
/// of any qualifying mask also qualifies and is never larger, and canonical
/// forms are themselves canonical — so the first qualifying canonical mask
/// equals the first qualifying mask outright.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pruning {
    /// Prune for orders above 6, where the labeled count gets out of hand.
    Auto,
    Always,
    Never,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleMode {
    Exact,
    LowerBound,
}

#[derive(Clone, Debug)]
pub struct OracleResult {
    pub mode: OracleMode,
    pub value: u64,
    /// Smallest-mask counterexample at the first failing order: a graph with
    /// `c`-colorable radius-`r` balls whose chromatic number exceeds `n`.
    pub witness: Option<Graph>,
    pub graphs_examined: u64,
}

impl OracleResult {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "mode": match self.mode {
                OracleMode::Exact => "EXACT",
                OracleMode::LowerBound => "LOWER_BOUND",
            },
            "value": self.value,
            "graphs_examined": self.graphs_examined,
            "witness": self.witness.as_ref().map(|g| g.to_dimacs()),
        })
    }
}

/// Scans orders `1..=vmax`. The first order admitting a counterexample —
/// `c`-colorable radius-`r` balls but chromatic number above `n` — pins the
/// exact value at one less (adding isolated vertices preserves
/// counterexamples, so the property is monotone). If no order fails, `vmax`
/// is a lower bound.
pub fn f_oracle(n: usize, r: usize, c: usize, vmax: usize) -> Result<OracleResult, OracleError> {
    f_oracle_with_pruning(n, r, c, vmax, Pruning::Auto)
}

pub fn f_oracle_with_pruning(
    n: usize,
    r: usize,
    c: usize,
    vmax: usize,
    pruning: Pruning,
) -> Result<OracleResult, OracleError> {
    assert!(n >= 1 && r >= 1 && c >= 1, "n, r, c must be positive");
    if !(1..=MAX_ENUM_VERTICES).contains(&vmax) {
        return Err(OracleError::OrderOutOfRange(vmax));
    }
    let mut examined = 0u64;
    for v in 1..=vmax {
        let prune = match pruning {
            Pruning::Auto => v > 6,
            Pruning::Always => true,
            Pruning::Never => false,
        };
        let relabeler = prune.then(|| Relabeler::new(v));
        let end = 1u64 << pair_count(v);
        for mask in 0..end {
            if let Some(rl) = &relabeler {
                if !rl.is_canonical(mask) {
                    continue;
                }
            }
            let g = graph_from_mask(v, mask);
            examined += 1;
            if chromatic::local_chromatic_at_most(&g, r, c)
                && chromatic::k_coloring(&g, n).is_none()
            {
                return Ok(OracleResult {
                    mode: OracleMode::Exact,
                    value: (v - 1) as u64,
                    witness: Some(g),
                    graphs_examined: examined,
                });
            }
        }
    }
    Ok(OracleResult {
        mode: OracleMode::LowerBound,
        value: vmax as u64,
        witness: None,
        graphs_examined: examined,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::gnp;
    use std::collections::HashSet;

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_graphs(1).unwrap().count(), 1);
        assert_eq!(enumerate_graphs(3).unwrap().count(), 8);
        assert_eq!(enumerate_graphs(4).unwrap().count(), 64);
        assert!(enumerate_graphs(0).is_err());
        assert!(enumerate_graphs(9).is_err());
    }

    #[test]
    fn canonical_dedup_counts() {
        // distinct graphs up to isomorphism: 4 on 3 vertices, 11 on 4
        for (v, expect) in [(3usize, 4usize), (4, 11)] {
            let rl = Relabeler::new(v);
            let classes: HashSet<u64> = (0..1u64 << pair_count(v))
                .map(|mask| rl.canonical(mask))
                .collect();
            assert_eq!(classes.len(), expect);
        }
    }

    #[test]
    fn canonical_form_is_relabeling_invariant() {
        let rl = Relabeler::new(6);
        for seed in 0..20u64 {
            let g = gnp(6, 0.5, seed).unwrap();
            let mask = edge_mask(&g);
            let canon = canonical_form(&g);
            for perm in rl.perms.iter().step_by(37) {
                let relabeled = graph_from_mask(6, rl.apply(perm, mask));
                assert_eq!(canonical_form(&relabeled), canon);
            }
            // canonical representatives are fixed points
            assert_eq!(rl.canonical(canon), canon);
            assert!(rl.is_canonical(canon));
        }
    }

    #[test]
    fn mask_round_trip() {
        for seed in 0..10u64 {
            let g = gnp(7, 0.4, seed).unwrap();
            assert_eq!(graph_from_mask(7, edge_mask(&g)), g);
        }
    }

    fn is_cycle_of_length(g: &Graph, len: usize) -> bool {
        g.n() == len
            && g.edge_count() == len
            && (0..len).all(|v| g.degree(v) == 2)
            && g.components().len() == 1
    }

    #[test]
    fn oracle_finds_five_cycle_crossover() {
        // every graph on up to 4 vertices with 2-colorable radius-1 balls is
        // bipartite; the 5-cycle is the first counterexample
        let res = f_oracle(2, 1, 2, 5).unwrap();
        assert_eq!(res.mode, OracleMode::Exact);
        assert_eq!(res.value, 4);
        let witness = res.witness.unwrap();
        assert!(is_cycle_of_length(&witness, 5));
        assert!(chromatic::local_chromatic_at_most(&witness, 1, 2));
        assert_eq!(chromatic::chromatic_number(&witness), 3);
    }

    #[test]
    fn oracle_lower_bound_when_no_counterexample() {
        // no graph on <= 6 vertices with 2-colorable radius-1 balls (i.e.
        // triangle-free) has chromatic number above 5
        let res = f_oracle(5, 1, 2, 6).unwrap();
        assert_eq!(res.mode, OracleMode::LowerBound);
        assert_eq!(res.value, 6);
        assert!(res.witness.is_none());
    }

    #[test]
    fn oracle_all_colorable_balls_case() {
        // balls that are 1-colorable force an edgeless graph, which is
        // 1-colorable: no counterexample exists at any order
        let res = f_oracle(1, 1, 1, 2).unwrap();
        assert_eq!(res.mode, OracleMode::LowerBound);
        assert_eq!(res.value, 2);
    }

    #[test]
    fn oracle_triangle_crossover() {
        // with 3-colorable balls the triangle itself beats n = 2 at order 3
        let res = f_oracle(2, 1, 3, 5).unwrap();
        assert_eq!(res.mode, OracleMode::Exact);
        assert_eq!(res.value, 2);
        let witness = res.witness.unwrap();
        assert_eq!(witness.n(), 3);
        assert_eq!(witness.edge_count(), 3);
    }

    #[test]
    fn pruning_does_not_change_outcomes() {
        for (n, r, c, vmax) in [(2, 1, 2, 5), (1, 1, 1, 3), (2, 1, 3, 4), (3, 1, 2, 5)] {
            let full = f_oracle_with_pruning(n, r, c, vmax, Pruning::Never).unwrap();
            let pruned = f_oracle_with_pruning(n, r, c, vmax, Pruning::Always).unwrap();
            assert_eq!(full.mode, pruned.mode);
            assert_eq!(full.value, pruned.value);
            assert_eq!(
                full.witness.map(|g| edge_mask(&g)),
                pruned.witness.map(|g| edge_mask(&g))
            );
            assert!(pruned.graphs_examined <= full.graphs_examined);
        }
    }
}

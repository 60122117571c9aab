//! Exact coloring machinery: greedy seeds, a deterministic DSATUR-style
//! branch-and-bound decision procedure for k-colorability, the chromatic
//! number, and the radius-r local chromatic number (the largest chromatic
//! number over all radius-r balls).
//!
//! The solver targets desk-scale inputs (balls of a few dozen vertices).
//! Branching is fixed — most-saturated vertex first, ties to the lowest
//! index, new colors introduced one at a time — so results are reproducible.

use std::cmp::Reverse;

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error)]
pub enum ColoringError {
    #[error("order is not a permutation of the vertices")]
    NotAPermutation,
    #[error("coloring covers {got} vertices but the graph has {expected}")]
    NotTotal { expected: usize, got: usize },
}

/// Total assignment of color indices to vertices. `k` is one more than the
/// largest color used (0 for the empty graph). Properness is checked by
/// [`verify_coloring`], not enforced by the type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
    k: usize,
}

impl Coloring {
    pub fn from_colors(colors: Vec<usize>) -> Self {
        let k = colors.iter().max().map_or(0, |&m| m + 1);
        Coloring { colors, k }
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    /// Palette size: one more than the largest color used.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    /// One `v c` line per vertex, ascending, 0-based.
    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        for (v, c) in self.colors.iter().enumerate() {
            out.push_str(&format!("{v} {c}\n"));
        }
        out
    }
}

/// True iff no edge of `g` has endpoints of equal color.
pub fn verify_coloring(g: &Graph, coloring: &Coloring) -> Result<bool, ColoringError> {
    if coloring.n() != g.n() {
        return Err(ColoringError::NotTotal {
            expected: g.n(),
            got: coloring.n(),
        });
    }
    Ok(g.edges().all(|(u, v)| coloring.color(u) != coloring.color(v)))
}

/// Colors vertices in the given order, each with the least color absent from
/// its already-colored neighbors. Uses at most `max_degree + 1` colors.
pub fn greedy_coloring(g: &Graph, order: &[usize]) -> Result<Coloring, ColoringError> {
    let n = g.n();
    if order.len() != n {
        return Err(ColoringError::NotAPermutation);
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || seen[v] {
            return Err(ColoringError::NotAPermutation);
        }
        seen[v] = true;
    }
    let mut colors: Vec<Option<usize>> = vec![None; n];
    for &v in order {
        let mut used: Vec<usize> = g
            .neighbors(v)
            .iter()
            .filter_map(|&u| colors[u])
            .collect();
        used.sort_unstable();
        used.dedup();
        let mut c = 0;
        for u in used {
            if u == c {
                c += 1;
            } else if u > c {
                break;
            }
        }
        colors[v] = Some(c);
    }
    let coloring = Coloring::from_colors(colors.into_iter().map(|c| c.unwrap()).collect());
    debug_assert!(coloring.k() <= g.max_degree() + 1);
    debug_assert!(verify_coloring(g, &coloring).unwrap());
    Ok(coloring)
}

/// Greedily grown clique: repeatedly takes the candidate with the most
/// neighbors among the remaining candidates (ties to the lowest index).
/// Its size is a cheap lower bound on the chromatic number.
pub fn greedy_clique(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut clique = Vec::new();
    let mut candidates = VertexSet::full(n);
    while !candidates.is_empty() {
        let mut best = usize::MAX;
        let mut best_deg = 0;
        for v in candidates.iter() {
            let d = g.neighbors(v).iter().filter(|&&u| candidates.contains(u)).count();
            if best == usize::MAX || d > best_deg {
                best = v;
                best_deg = d;
            }
        }
        clique.push(best);
        let mut next = VertexSet::empty(n);
        for &u in g.neighbors(best) {
            if candidates.contains(u) {
                next.insert(u);
            }
        }
        candidates = next;
    }
    clique
}

struct Dsatur<'a> {
    g: &'a Graph,
    k: usize,
    color: Vec<Option<usize>>,
    /// per vertex, per color: how many colored neighbors use it
    neighbor_count: Vec<Vec<u32>>,
    saturation: Vec<u32>,
    uncolored: usize,
}

impl<'a> Dsatur<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        let n = g.n();
        Dsatur {
            g,
            k,
            color: vec![None; n],
            neighbor_count: vec![vec![0; k]; n],
            saturation: vec![0; n],
            uncolored: n,
        }
    }

    fn pick(&self) -> usize {
        let mut best = usize::MAX;
        let mut best_sat = 0;
        for v in 0..self.g.n() {
            if self.color[v].is_none() && (best == usize::MAX || self.saturation[v] > best_sat) {
                best = v;
                best_sat = self.saturation[v];
            }
        }
        best
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = Some(c);
        self.uncolored -= 1;
        for &u in self.g.neighbors(v) {
            self.neighbor_count[u][c] += 1;
            if self.neighbor_count[u][c] == 1 {
                self.saturation[u] += 1;
            }
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = None;
        self.uncolored += 1;
        for &u in self.g.neighbors(v) {
            self.neighbor_count[u][c] -= 1;
            if self.neighbor_count[u][c] == 0 {
                self.saturation[u] -= 1;
            }
        }
    }

    /// `used` counts the colors touched so far; a vertex may open at most
    /// one fresh color, which breaks color symmetry.
    fn solve(&mut self, used: usize) -> bool {
        if self.uncolored == 0 {
            return true;
        }
        let v = self.pick();
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if self.neighbor_count[v][c] == 0 {
                self.assign(v, c);
                if self.solve(used.max(c + 1)) {
                    return true;
                }
                self.unassign(v, c);
            }
        }
        false
    }
}

fn dsatur_assignment(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let mut solver = Dsatur::new(g, k);
    if solver.solve(0) {
        Some(solver.color.into_iter().map(|c| c.unwrap()).collect())
    } else {
        None
    }
}

/// Proper coloring of `g` with at most `k` colors, or `None` when no such
/// coloring exists. Deterministic for fixed inputs. Components are solved
/// independently, each with the fixed DSATUR branching order.
pub fn k_coloring(g: &Graph, k: usize) -> Option<Coloring> {
    if g.n() == 0 {
        return Some(Coloring::from_colors(Vec::new()));
    }
    if k == 0 {
        return None;
    }
    // n colors always suffice, so larger palettes change nothing but memory
    let k = k.min(g.n());
    if greedy_clique(g).len() > k {
        return None;
    }
    let mut colors = vec![0usize; g.n()];
    for comp in g.components() {
        let view = g.induced(&comp);
        let assignment = dsatur_assignment(view.graph(), k)?;
        for (i, &c) in assignment.iter().enumerate() {
            colors[view.to_parent(i)] = c;
        }
    }
    let coloring = Coloring::from_colors(colors);
    debug_assert!(verify_coloring(g, &coloring).unwrap());
    Some(coloring)
}

/// Smallest `k` for which a proper `k`-coloring exists. The empty graph is
/// assigned 0. Searches upward from the greedy-clique lower bound until the
/// decision procedure succeeds; the greedy upper bound caps the search.
pub fn chromatic_number(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    if g.edge_count() == 0 {
        return 1;
    }
    let lower = greedy_clique(g).len().max(2);
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (Reverse(g.degree(v)), v));
    let upper = greedy_coloring(g, &order)
        .expect("the sorted identity order is a permutation")
        .k();
    for k in lower..upper {
        if k_coloring(g, k).is_some() {
            return k;
        }
    }
    upper
}

/// Largest chromatic number over all radius-`r` balls of `g`.
pub fn local_chromatic(g: &Graph, r: usize) -> usize {
    assert!(r >= 1, "radius must be positive");
    (0..g.n())
        .map(|v| chromatic_number(g.induced(&g.ball(v, r)).graph()))
        .max()
        .unwrap_or(0)
}

/// Decides `local_chromatic(g, r) <= c` without computing the maximum.
///
/// A `c`-coloring of the whole graph settles it immediately (every induced
/// subgraph inherits it); otherwise balls are tested until one fails.
pub fn local_chromatic_at_most(g: &Graph, r: usize, c: usize) -> bool {
    assert!(r >= 1, "radius must be positive");
    if g.n() == 0 {
        return true;
    }
    if k_coloring(g, c).is_some() {
        return true;
    }
    for v in 0..g.n() {
        let ball = g.ball(v, r);
        if ball.len() == g.n() {
            // the ball is the whole graph, which we just found infeasible
            return false;
        }
        if k_coloring(g.induced(&ball).graph(), c).is_none() {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, gnp, mycielski};
    use proptest::prelude::*;

    /// Smallest k admitting a proper assignment, by checking all k^n of them.
    fn brute_force_chromatic(g: &Graph) -> usize {
        let n = g.n();
        if n == 0 {
            return 0;
        }
        for k in 1..=n {
            let mut digits = vec![0usize; n];
            loop {
                if g.edges().all(|(u, v)| digits[u] != digits[v]) {
                    return k;
                }
                let mut i = 0;
                while i < n {
                    digits[i] += 1;
                    if digits[i] < k {
                        break;
                    }
                    digits[i] = 0;
                    i += 1;
                }
                if i == n {
                    break;
                }
            }
        }
        unreachable!("n colors always suffice")
    }

    #[test]
    fn greedy_examples() {
        let k4 = complete(4).unwrap();
        let order: Vec<usize> = vec![2, 0, 3, 1];
        assert_eq!(greedy_coloring(&k4, &order).unwrap().k(), 4);

        // natural order on C_9 alternates 0/1 and closes the cycle with a 2
        let c9 = cycle(9).unwrap();
        let natural: Vec<usize> = (0..9).collect();
        let col = greedy_coloring(&c9, &natural).unwrap();
        assert!(verify_coloring(&c9, &col).unwrap());
        assert_eq!(col.k(), 3);

        let edgeless = Graph::empty(5);
        assert_eq!(greedy_coloring(&edgeless, &[4, 3, 2, 1, 0]).unwrap().k(), 1);

        assert!(matches!(
            greedy_coloring(&edgeless, &[0, 0, 1, 2, 3]),
            Err(ColoringError::NotAPermutation)
        ));
    }

    #[test]
    fn k_coloring_examples() {
        let c5 = cycle(5).unwrap();
        assert!(k_coloring(&c5, 2).is_none());

        // brute-force witness that a 3-coloring of C_5 exists at all
        assert_eq!(brute_force_chromatic(&c5), 3);
        let col = k_coloring(&c5, 3).unwrap();
        assert!(verify_coloring(&c5, &col).unwrap());
        assert!(col.k() <= 3);

        let k4 = complete(4).unwrap();
        let col = k_coloring(&k4, 4).unwrap();
        let mut seen = col.colors().to_vec();
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), 4);
    }

    #[test]
    fn chromatic_number_examples() {
        for n in 1..=6 {
            assert_eq!(chromatic_number(&complete(n).unwrap()), n);
        }
        assert_eq!(chromatic_number(&cycle(5).unwrap()), 3);

        // Mycielskian of C_5: 11 vertices, chromatic number 4
        let grotzsch = mycielski(&cycle(5).unwrap());
        assert_eq!(grotzsch.n(), 11);
        assert!(k_coloring(&grotzsch, 3).is_none());
        let col = k_coloring(&grotzsch, 4).unwrap();
        assert!(verify_coloring(&grotzsch, &col).unwrap());
        assert_eq!(chromatic_number(&grotzsch), 4);
    }

    #[test]
    fn local_chromatic_examples() {
        let c5 = cycle(5).unwrap();
        assert_eq!(local_chromatic(&c5, 1), 2);
        assert_eq!(local_chromatic(&c5, 2), 3);
        let k4 = complete(4).unwrap();
        assert_eq!(local_chromatic(&k4, 1), 4);
        assert_eq!(local_chromatic(&Graph::empty(0), 1), 0);
    }

    #[test]
    fn verify_coloring_examples() {
        let k3 = complete(3).unwrap();
        assert!(verify_coloring(&k3, &Coloring::from_colors(vec![0, 1, 2])).unwrap());
        assert!(!verify_coloring(&k3, &Coloring::from_colors(vec![0, 0, 1])).unwrap());
        assert!(matches!(
            verify_coloring(&k3, &Coloring::from_colors(vec![0, 1])),
            Err(ColoringError::NotTotal { expected: 3, got: 2 })
        ));

        // alternating 0/1 around C_9 with the forced third color at the seam
        let c9 = cycle(9).unwrap();
        let col = Coloring::from_colors(vec![0, 1, 0, 1, 0, 1, 0, 1, 2]);
        assert!(verify_coloring(&c9, &col).unwrap());
    }

    fn is_bipartite(g: &Graph) -> bool {
        let mut side = vec![None::<bool>; g.n()];
        for comp in g.components() {
            let start = comp.first().unwrap();
            side[start] = Some(false);
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in g.neighbors(u) {
                    match side[w] {
                        None => {
                            side[w] = Some(!side[u].unwrap());
                            queue.push_back(w);
                        }
                        Some(s) => {
                            if s == side[u].unwrap() {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    proptest! {
        #[test]
        fn solver_matches_brute_force(n in 1usize..7, seed in any::<u64>(), p_idx in 0usize..3) {
            let p = [0.2, 0.5, 0.8][p_idx];
            let g = gnp(n, p, seed).unwrap();
            prop_assert_eq!(chromatic_number(&g), brute_force_chromatic(&g));
        }

        #[test]
        fn chromatic_number_basic_bounds(n in 1usize..25, seed in any::<u64>()) {
            let g = gnp(n, 0.3, seed).unwrap();
            let chi = chromatic_number(&g);
            prop_assert!(chi <= g.max_degree() + 1);
            prop_assert_eq!(chi == 1, g.edge_count() == 0);
            prop_assert_eq!(chi == 2, g.edge_count() > 0 && is_bipartite(&g));
        }

        #[test]
        fn infeasibility_is_monotone(n in 1usize..10, seed in any::<u64>(), k in 1usize..5) {
            let g = gnp(n, 0.5, seed).unwrap();
            if k_coloring(&g, k).is_none() && k > 1 {
                prop_assert!(k_coloring(&g, k - 1).is_none());
            }
            if let Some(col) = k_coloring(&g, k) {
                prop_assert!(verify_coloring(&g, &col).unwrap());
                prop_assert!(col.k() <= k);
            }
        }

        #[test]
        fn local_chromatic_bounds(n in 1usize..14, seed in any::<u64>()) {
            let g = gnp(n, 0.3, seed).unwrap();
            let chi = chromatic_number(&g);
            let l1 = local_chromatic(&g, 1);
            let l2 = local_chromatic(&g, 2);
            prop_assert!(l1 <= l2);
            prop_assert!(l2 <= chi);
            if (0..n).any(|v| g.ball(v, 2).len() == n) {
                // some ball covers the whole graph, so the maximum is exact
                prop_assert_eq!(l2, chi);
            }
            // the decision form agrees with the exact value
            for c in 1..=4usize {
                prop_assert_eq!(local_chromatic_at_most(&g, 1, c), l1 <= c);
            }
        }
    }
}

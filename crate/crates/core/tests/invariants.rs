//! Cross-module consistency: the enumeration oracle against the solver and
//! the bound formulas, the carve against its verifier on mixed inputs, and
//! the generator families against independent structural checks.

mod common;

use ballcarve::bounds::{self, ratio};
use ballcarve::chromatic::{self, chromatic_number, k_coloring, local_chromatic};
use ballcarve::decomposition::{carve, level_bound, recursive_color, verify_decomposition};
use ballcarve::generators::{complete, cycle, generalized_mycielski, gnp, mycielski};
use ballcarve::oracle::{self, canonical_form, f_oracle, OracleMode};
use common::brute_force_chromatic;
use num::ToPrimitive;

#[test]
fn carve_verifies_on_assorted_graphs() {
    let mut graphs = vec![
        cycle(9).unwrap(),
        complete(7).unwrap(),
        mycielski(&cycle(5).unwrap()),
        ballcarve::Graph::empty(13),
    ];
    for seed in 0..15u64 {
        graphs.push(gnp(50, 0.07, seed).unwrap());
    }
    for g in &graphs {
        for r in 1..=3usize {
            let d = carve(g, r).unwrap();
            let report = verify_decomposition(g, r, &d);
            assert!(report.all_pass(), "n={} r={r}: {report}", g.n());
            assert!(d.parts.iter().all(|p| p.m >= 1 && p.m <= r + 1));
        }
    }
}

#[test]
fn recursive_color_matches_guarantees_when_balls_are_small() {
    for seed in 0..12u64 {
        let g = gnp(45, 0.05, seed).unwrap();
        for (r, c) in [(1, 2), (2, 2), (1, 3), (3, 3)] {
            if !chromatic::local_chromatic_at_most(&g, r, c) {
                continue;
            }
            let rc = recursive_color(&g, r, c).unwrap();
            assert!(chromatic::verify_coloring(&g, &rc.coloring).unwrap());
            assert!(rc.coloring.k() <= c * rc.levels);
            assert!(rc.levels as u64 <= level_bound(g.n() as u64, r as u32));
        }
    }
}

#[test]
fn grotzsch_confirms_the_eleven_vertex_upper_bound() {
    // an 11-vertex graph with 2-colorable radius-1 balls and chromatic
    // number 4 shows the crossover for n = 3, r = 1, c = 2 sits below 11
    let grotzsch = mycielski(&cycle(5).unwrap());
    assert_eq!(grotzsch.n(), 11);
    assert_eq!(local_chromatic(&grotzsch, 1), 2);
    assert_eq!(chromatic_number(&grotzsch), 4);

    // independent exhaustive check that 3 colors cannot work: all 3^11
    // assignments fail somewhere
    let edges: Vec<(usize, usize)> = grotzsch.edges().collect();
    let mut digits = [0usize; 11];
    loop {
        assert!(
            edges.iter().any(|&(u, v)| digits[u] == digits[v]),
            "found a proper 3-coloring of an allegedly 4-chromatic graph"
        );
        let mut i = 0;
        while i < 11 {
            digits[i] += 1;
            if digits[i] < 3 {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
        if i == 11 {
            break;
        }
    }
}

#[test]
fn oracle_witnesses_reverify_independently() {
    for (n, r, c, vmax) in [(2usize, 1usize, 2usize, 5usize), (2, 1, 3, 5), (1, 1, 2, 4)] {
        let res = f_oracle(n, r, c, vmax).unwrap();
        if res.mode != OracleMode::Exact {
            continue;
        }
        let witness = res.witness.expect("exact results carry a witness");
        assert_eq!(witness.n() as u64, res.value + 1);
        assert!(chromatic::local_chromatic_at_most(&witness, r, c));
        assert!(local_chromatic(&witness, r) <= c);
        assert!(brute_force_chromatic(&witness) > n);
    }
}

#[test]
fn oracle_exact_values_respect_the_general_lower_bound() {
    for (n, r, c, vmax) in [(2u64, 1u32, 2u64, 5usize), (2, 1, 3, 5), (1, 1, 2, 4), (3, 1, 4, 5)] {
        let res = f_oracle(n as usize, r as usize, c as usize, vmax).unwrap();
        if res.mode != OracleMode::Exact {
            continue;
        }
        let bound = bounds::bound_gen(n, r, c).unwrap();
        let floor_minus = bound.ceil().to_integer().to_i64().unwrap() - 1;
        assert!(
            (res.value as i64) >= floor_minus.max(0),
            "exact value {} against bound {}",
            res.value,
            bounds::format_rational(&bound)
        );
    }
}

#[test]
fn oracle_exact_values_respect_the_order_upper_bound() {
    // parameters shaped n = k(c-1): the triangle crossover at k = 1, c = 3
    let res = f_oracle(2, 1, 3, 5).unwrap();
    assert_eq!(res.mode, OracleMode::Exact);
    let upper = bounds::bound_upper_bogdnrv(1, 3, 1);
    assert_eq!(upper.n, 2);
    assert!(ratio(res.value as i64, 1) < upper.value);
}

#[test]
fn generalized_mycielski_is_isomorphic_to_mycielski_at_two_levels() {
    // relabel one side and compare canonical forms, exercising genuine
    // isomorphism rather than equality of adjacency lists
    for g in [complete(2).unwrap(), gnp(3, 0.7, 5).unwrap()] {
        let a = generalized_mycielski(&g, 2).unwrap();
        let b = mycielski(&g);
        let n = a.n();
        assert!(n <= 8);
        let relabeled = {
            let perm: Vec<usize> = (0..n).map(|v| (v + 3) % n).collect();
            let edges: Vec<(usize, usize)> = a.edges().map(|(u, v)| (perm[u], perm[v])).collect();
            ballcarve::Graph::from_edges(n, &edges).unwrap()
        };
        assert_eq!(canonical_form(&relabeled), canonical_form(&b));
    }
}

#[test]
fn mycielski_of_an_edge_is_the_five_cycle() {
    let m = mycielski(&complete(2).unwrap());
    assert_eq!(m.n(), 5);
    assert_eq!(canonical_form(&m), canonical_form(&cycle(5).unwrap()));
}

#[test]
fn enumeration_agrees_with_canonical_census_on_five_vertices() {
    // 34 isomorphism classes of graphs on 5 vertices
    let mut classes = std::collections::HashSet::new();
    for g in oracle::enumerate_graphs(5).unwrap() {
        classes.insert(canonical_form(&g));
    }
    assert_eq!(classes.len(), 34);
}

#[test]
fn separator_inequality_holds_at_every_recursion_level() {
    // walk the recursion by hand: carve, verify against that level's vertex
    // count, recurse on the separator
    for seed in [3u64, 11, 27] {
        let g = gnp(80, 0.05, seed).unwrap();
        for r in 1..=2usize {
            let mut active = g.vertex_set_all();
            while !active.is_empty() {
                let view = g.induced(&active);
                let level_graph = view.graph().clone();
                let d = carve(&level_graph, r).unwrap();
                let report = verify_decomposition(&level_graph, r, &d);
                assert!(report.all_pass(), "level with {} vertices:\n{report}", level_graph.n());
                let mut next = ballcarve::VertexSet::empty(g.n());
                for s in d.separator.iter() {
                    next.insert(view.to_parent(s));
                }
                assert!(next.len() < active.len(), "separator must shrink");
                active = next;
            }
        }
    }
}

#[test]
fn level_bound_dominates_observed_recursion_depth() {
    for seed in 0..10u64 {
        let g = gnp(60, 0.04, seed).unwrap();
        if !chromatic::local_chromatic_at_most(&g, 1, 3) {
            continue;
        }
        let rc = recursive_color(&g, 1, 3).unwrap();
        assert!(rc.levels as u64 <= level_bound(g.n() as u64, 1));
    }
    // the bound recurrence itself is monotone in v
    for r in 1..=3u32 {
        for v in 1..400u64 {
            assert!(level_bound(v, r) <= level_bound(v + 1, r));
        }
    }
}

#[test]
fn k_coloring_feasibility_matches_brute_force_on_small_graphs() {
    for seed in 0..80u64 {
        let g = gnp(6, 0.5, seed).unwrap();
        let chi = brute_force_chromatic(&g);
        for k in 1..=5usize {
            assert_eq!(k_coloring(&g, k).is_some(), k >= chi, "seed {seed} k {k}");
        }
    }
}

#![allow(dead_code)] // each test target compiles its own copy and uses a subset

//! Helpers shared by the integration suites: an assignment-enumeration
//! chromatic oracle kept independent of the solver, and the pseudorandom
//! test corpus.

use ballcarve::generators::gnp;
use ballcarve::graph::Graph;

/// Smallest k admitting a proper assignment, found by walking all k^n
/// assignments with an odometer. Usable up to n = 7 or so.
pub fn brute_force_chromatic(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    for k in 1..=n {
        let mut digits = vec![0usize; n];
        loop {
            if edges.iter().all(|&(u, v)| digits[u] != digits[v]) {
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

/// 200 seeded samples: orders 1..=200, edge probabilities cycling through
/// {0.02, 0.05, 0.1, 0.3}.
pub fn corpus() -> Vec<Graph> {
    let ps = [0.02, 0.05, 0.1, 0.3];
    (0..200usize)
        .map(|i| gnp(i + 1, ps[i % 4], 0xC0FFEE + i as u64).expect("valid probability"))
        .collect()
}

//! Ball carving and the coloring it induces.
//!
//! [`carve`] partitions a graph into connected parts, each contained in a
//! ball of radius `r` around its recorded center, plus a separator `N`
//! satisfying the exact inequality `(v - |N|)^(r+1) >= v^r` where `v` is the
//! vertex count. [`recursive_color`] applies the carve level by level, giving
//! each level a fresh palette of `c` colors; [`level_bound`] is the
//! worst-case number of levels implied by the separator inequality.
//!
//! All threshold comparisons use arbitrary-precision integers: selecting the
//! carving radius by cross-multiplied powers avoids the floating-point root
//! that could mis-rank near-ties.

use num::BigUint;
use serde_json::{json, Value};
use thiserror::Error;

use crate::chromatic::{self, Coloring};
use crate::graph::{Graph, VertexSet, UNREACHED};

#[derive(Debug, Error)]
pub enum DecompositionError {
    #[error("radius must be at least 1")]
    RadiusTooSmall,
    #[error("palette must allow at least 1 color")]
    PaletteTooSmall,
    #[error("local chromatic number exceeds {limit} at center {center}")]
    PartNotColorable { center: usize, limit: usize },
}

/// One carved part: the ball of radius `m - 1` (in the residual graph at the
/// time it was carved) around `center`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Part {
    pub center: usize,
    pub m: usize,
    pub vertices: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub parts: Vec<Part>,
    pub separator: VertexSet,
    pub radius: usize,
    pub source_vertex_count: usize,
}

impl Decomposition {
    pub fn part_vertex_count(&self) -> usize {
        self.parts.iter().map(|p| p.vertices.len()).sum()
    }

    /// `{r, v, parts: [{center, m, vertices}], separator}`, vertex lists ascending.
    pub fn to_json(&self) -> Value {
        json!({
            "r": self.radius,
            "v": self.source_vertex_count,
            "parts": self.parts.iter().map(|p| json!({
                "center": p.center,
                "m": p.m,
                "vertices": p.vertices.to_vec(),
            })).collect::<Vec<_>>(),
            "separator": self.separator.to_vec(),
        })
    }
}

/// Carves `g` into parts and a separator.
///
/// While vertices remain, take the lowest-index residual vertex `u`, measure
/// the balls of radius `0..=r+1` around `u` inside the residual graph, and
/// pick the smallest `m` in `1..=r+1` whose ball sizes satisfy
/// `|U_m|^(r+1) <= v * |U_{m-1}|^(r+1)` (`v` is the vertex count of `g`,
/// fixed for the whole run). The ball of radius `m - 1` becomes a part, the
/// sphere at radius `m` joins the separator, and the whole ball of radius `m`
/// leaves the residual. Deterministic by construction.
pub fn carve(g: &Graph, r: usize) -> Result<Decomposition, DecompositionError> {
    if r < 1 {
        return Err(DecompositionError::RadiusTooSmall);
    }
    let n = g.n();
    let exp = (r + 1) as u32;
    let total = BigUint::from(n as u64);
    let mut residual = VertexSet::full(n);
    let mut separator = VertexSet::empty(n);
    let mut parts = Vec::new();
    while let Some(center) = residual.first() {
        let dist = g.bfs_distances(center, Some(&residual), Some(r + 1));
        let mut counts = vec![0u64; r + 2];
        for v in residual.iter() {
            let d = dist[v];
            if d != UNREACHED && (d as usize) <= r + 1 {
                counts[d as usize] += 1;
            }
        }
        let mut ball_sizes = vec![0u64; r + 2];
        let mut acc = 0;
        for (d, &c) in counts.iter().enumerate() {
            acc += c;
            ball_sizes[d] = acc;
        }
        // some m always qualifies: the ratios telescope to |U_{r+1}| <= v
        let m = (1..=r + 1)
            .find(|&m| {
                BigUint::from(ball_sizes[m]).pow(exp)
                    <= &total * BigUint::from(ball_sizes[m - 1]).pow(exp)
            })
            .expect("ball growth ratios telescope below the threshold");
        let mut part = VertexSet::empty(n);
        let mut sphere = VertexSet::empty(n);
        let mut removed = VertexSet::empty(n);
        for v in residual.iter() {
            let d = dist[v];
            if d == UNREACHED || (d as usize) > m {
                continue;
            }
            removed.insert(v);
            if (d as usize) < m {
                part.insert(v);
            } else {
                sphere.insert(v);
            }
        }
        separator.union_with(&sphere);
        residual.subtract(&removed);
        parts.push(Part {
            center,
            m,
            vertices: part,
        });
    }
    Ok(Decomposition {
        parts,
        separator,
        radius: r,
        source_vertex_count: n,
    })
}

#[derive(Clone, Debug)]
pub struct DecompositionCheck {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

/// Outcome of [`verify_decomposition`]: one entry per structural check.
#[derive(Clone, Debug)]
pub struct DecompositionReport {
    pub checks: Vec<DecompositionCheck>,
}

impl DecompositionReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "pass": self.all_pass(),
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name,
                "pass": c.pass,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
        })
    }
}

impl std::fmt::Display for DecompositionReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.checks {
            let status = if c.pass { "pass" } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(f, "{}: {}", c.name, status)?;
            } else {
                writeln!(f, "{}: {} ({})", c.name, status, c.detail)?;
            }
        }
        Ok(())
    }
}

/// Re-derives every promise a decomposition makes, from `g` alone: the parts
/// and separator partition the vertices, part boundaries stop inside the
/// separator, parts sit inside radius-`r` balls around their centers, the
/// exact separator-size inequality holds, and every part is connected.
pub fn verify_decomposition(g: &Graph, r: usize, d: &Decomposition) -> DecompositionReport {
    let n = g.n();
    let mut checks = Vec::new();

    let mut union = VertexSet::empty(n);
    union.union_with(&d.separator);
    let mut multiplicity = d.separator.len();
    for p in &d.parts {
        multiplicity += p.vertices.len();
        union.union_with(&p.vertices);
    }
    let cover_ok = multiplicity == n && union.len() == n && d.source_vertex_count == n;
    checks.push(DecompositionCheck {
        name: "disjoint-cover",
        pass: cover_ok,
        detail: if cover_ok {
            String::new()
        } else {
            format!(
                "n={n}, recorded v={}, members with multiplicity={multiplicity}, union={}",
                d.source_vertex_count,
                union.len()
            )
        },
    });

    let mut boundary_fail = None;
    for (i, p) in d.parts.iter().enumerate() {
        if !g.outer_boundary(&p.vertices).is_subset_of(&d.separator) {
            boundary_fail = Some(i);
            break;
        }
    }
    checks.push(DecompositionCheck {
        name: "part-boundaries-in-separator",
        pass: boundary_fail.is_none(),
        detail: boundary_fail.map_or(String::new(), |i| {
            format!("part {i} (center {}) leaks outside the separator", d.parts[i].center)
        }),
    });

    let mut radius_fail = None;
    for (i, p) in d.parts.iter().enumerate() {
        if !p.vertices.is_subset_of(&g.ball(p.center, r)) {
            radius_fail = Some(i);
            break;
        }
    }
    checks.push(DecompositionCheck {
        name: "parts-within-radius",
        pass: radius_fail.is_none(),
        detail: radius_fail.map_or(String::new(), |i| {
            format!("part {i} exceeds the radius-{r} ball around center {}", d.parts[i].center)
        }),
    });

    let kept = n.saturating_sub(d.separator.len()) as u64;
    let exp = (r + 1) as u32;
    let separator_ok = BigUint::from(kept).pow(exp) >= BigUint::from(n as u64).pow(r as u32);
    checks.push(DecompositionCheck {
        name: "separator-bound",
        pass: separator_ok,
        detail: if separator_ok {
            String::new()
        } else {
            format!("(v - |N|)^(r+1) = {kept}^{exp} falls below v^r = {n}^{r}")
        },
    });

    let mut connect_fail = None;
    for (i, p) in d.parts.iter().enumerate() {
        if let Some(start) = p.vertices.first() {
            let dist = g.bfs_distances(start, Some(&p.vertices), None);
            if p.vertices.iter().any(|v| dist[v] == UNREACHED) {
                connect_fail = Some(i);
                break;
            }
        }
    }
    checks.push(DecompositionCheck {
        name: "parts-connected",
        pass: connect_fail.is_none(),
        detail: connect_fail.map_or(String::new(), |i| {
            format!("part {i} (center {}) is disconnected", d.parts[i].center)
        }),
    });

    DecompositionReport { checks }
}

/// Result of [`recursive_color`]: the combined coloring, how many carving
/// levels were needed, and how many vertices each level colored.
#[derive(Clone, Debug)]
pub struct RecursiveColoring {
    pub coloring: Coloring,
    pub levels: usize,
    pub level_sizes: Vec<usize>,
}

/// Colors `g` by carving it level by level. Level `l` carves the remaining
/// graph, colors every part with the palette `{l*c, .., l*c + c - 1}`, and
/// recurses on the separator. Edges inside a part are handled by the part's
/// own coloring, and all other edges leave a part only toward deeper levels,
/// whose palettes are disjoint — so the result is proper.
///
/// Intended for graphs whose radius-`r` balls are `c`-colorable; a part that
/// is not `c`-colorable is reported as an error naming its center, which
/// certifies that the local chromatic number exceeds `c`.
pub fn recursive_color(
    g: &Graph,
    r: usize,
    c: usize,
) -> Result<RecursiveColoring, DecompositionError> {
    if r < 1 {
        return Err(DecompositionError::RadiusTooSmall);
    }
    if c < 1 {
        return Err(DecompositionError::PaletteTooSmall);
    }
    let n = g.n();
    let mut assigned: Vec<Option<usize>> = vec![None; n];
    let mut active = VertexSet::full(n);
    let mut level_sizes = Vec::new();
    let mut level = 0usize;
    while !active.is_empty() {
        let view = g.induced(&active);
        let d = carve(view.graph(), r)?;
        let mut colored_here = 0usize;
        for part in &d.parts {
            let part_view = view.graph().induced(&part.vertices);
            let coloring = chromatic::k_coloring(part_view.graph(), c).ok_or(
                DecompositionError::PartNotColorable {
                    center: view.to_parent(part.center),
                    limit: c,
                },
            )?;
            for (local, &col) in coloring.colors().iter().enumerate() {
                let original = view.to_parent(part_view.to_parent(local));
                assigned[original] = Some(level * c + col);
            }
            colored_here += part.vertices.len();
        }
        level_sizes.push(colored_here);
        let mut next = VertexSet::empty(n);
        for s in d.separator.iter() {
            next.insert(view.to_parent(s));
        }
        active = next;
        level += 1;
    }
    let colors: Vec<usize> = assigned
        .into_iter()
        .map(|c| c.expect("parts and separator cover every vertex"))
        .collect();
    let coloring = Coloring::from_colors(colors);
    debug_assert!(chromatic::verify_coloring(g, &coloring).unwrap());
    debug_assert!(level as u64 <= level_bound(n as u64, r as u32));
    Ok(RecursiveColoring {
        coloring,
        levels: level,
        level_sizes,
    })
}

/// Smallest `s` with `s^(r+1) >= v^r`, i.e. the exact integer ceiling of
/// `v^(r/(r+1))`: the number of vertices the separator inequality forces a
/// single carve to retire.
pub fn min_carved_count(v: u64, r: u32) -> u64 {
    assert!(r >= 1, "radius must be positive");
    if v == 0 {
        return 0;
    }
    let target = BigUint::from(v).pow(r);
    let (mut lo, mut hi) = (1u64, v);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if BigUint::from(mid).pow(r + 1) >= target {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    lo
}

/// Worst-case number of carve levels on `v` vertices: each level retires at
/// least [`min_carved_count`] vertices, so iterate until nothing remains.
pub fn level_bound(v: u64, r: u32) -> u64 {
    assert!(r >= 1, "radius must be positive");
    let mut remaining = v;
    let mut levels = 0;
    while remaining > 0 {
        remaining -= min_carved_count(remaining, r);
        levels += 1;
    }
    levels
}

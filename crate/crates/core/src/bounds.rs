//! Chromatic bounds: greedy largest-first upper bound, the `⌈n/α⌉` lower
//! bound with an exact independence number, and the exact chromatic number.

use alloc::vec::Vec;
use num_traits::Zero;

use crate::direct::dp_count;
use crate::graph::{ChordGraph, Coloring, Graph};
use crate::record::Limits;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub n: usize,
    pub k: usize,
    pub alpha: usize,
    pub lower: usize,
    pub greedy_upper: usize,
    pub chi: usize,
    pub bipartite: bool,
}

/// Greedy coloring in descending-degree order, ties by ascending index.
/// Returns the number of colors used.
pub fn greedy_upper<G: Graph + ?Sized>(g: &G) -> usize {
    let n = g.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        g.adjacent(b)
            .len()
            .cmp(&g.adjacent(a).len())
            .then(a.cmp(&b))
    });
    let mut color: Vec<Option<usize>> = alloc::vec![None; n];
    let mut used = 0;
    for v in order {
        let taken: Vec<usize> = g.adjacent(v).iter().filter_map(|&u| color[u]).collect();
        let c = (0..).find(|c| !taken.contains(c)).unwrap();
        color[v] = Some(c);
        used = used.max(c + 1);
    }
    used
}

fn bitsets<G: Graph + ?Sized>(g: &G) -> Vec<u64> {
    (0..g.vertex_count())
        .map(|v| g.adjacent(v).iter().fold(0u64, |m, &u| m | (1 << u)))
        .collect()
}

/// Number of cliques in a greedy clique cover of `cand`; bounds the size of
/// any independent subset of `cand`.
fn clique_cover(adj: &[u64], mut cand: u64) -> usize {
    let mut cliques = 0;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= !(1 << v);
        let mut common = adj[v] & cand;
        while common != 0 {
            let u = common.trailing_zeros() as usize;
            cand &= !(1 << u);
            common &= adj[u];
        }
        cliques += 1;
    }
    cliques
}

fn alpha_search(adj: &[u64], cand: u64, size: usize, best: &mut usize) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + clique_cover(adj, cand) <= *best {
        return;
    }
    // Branch on the vertex with most neighbors among the candidates.
    let mut pick = cand.trailing_zeros() as usize;
    let mut pick_deg = 0;
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (adj[v] & cand).count_ones();
        if d > pick_deg {
            pick = v;
            pick_deg = d;
        }
    }
    let bit = 1u64 << pick;
    if pick_deg <= 1 {
        // Some maximum independent set contains a vertex of degree <= 1.
        let v = if pick_deg == 0 {
            pick
        } else {
            // every candidate has degree <= 1; take any of them
            cand.trailing_zeros() as usize
        };
        alpha_search(adj, cand & !adj[v] & !(1 << v), size + 1, best);
        return;
    }
    alpha_search(adj, cand & !adj[pick] & !bit, size + 1, best);
    alpha_search(adj, cand & !bit, size, best);
}

fn guard_alpha(n: usize, limit: usize) -> Result<()> {
    let limit = limit.min(64);
    if n > limit {
        return Err(Error::SizeGuard {
            what: "independence number vertex count",
            size: n as u128,
            limit: limit as u128,
        });
    }
    Ok(())
}

/// Exact independence number by branch and bound with a clique-cover bound.
pub fn independence_number<G: Graph + ?Sized>(g: &G, limits: &Limits) -> Result<usize> {
    let n = g.vertex_count();
    guard_alpha(n, limits.alpha_max_n)?;
    let adj = bitsets(g);
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 0;
    alpha_search(&adj, all, 0, &mut best);
    Ok(best)
}

/// Independence number by checking all `2^n` vertex subsets (`n <= 24`).
pub fn independence_number_exhaustive<G: Graph + ?Sized>(g: &G) -> Result<usize> {
    let n = g.vertex_count();
    guard_alpha(n, 24)?;
    let adj = bitsets(g);
    let mut best = 0;
    for set in 0u64..(1u64 << n) {
        let size = set.count_ones() as usize;
        if size <= best {
            continue;
        }
        let mut rest = set;
        let mut independent = true;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if adj[v] & set != 0 {
                independent = false;
                break;
            }
        }
        if independent {
            best = size;
        }
    }
    Ok(best)
}

/// First edge inside `set`, if any.
pub fn dependent_pair<G: Graph + ?Sized>(g: &G, set: &[usize]) -> Option<(usize, usize)> {
    set.iter().enumerate().find_map(|(i, &a)| {
        set[i + 1..]
            .iter()
            .find(|&&b| g.has_edge(a, b))
            .map(|&b| (a.min(b), a.max(b)))
    })
}

/// `⌈n / α⌉`.
pub fn chi_lower<G: Graph + ?Sized>(g: &G, limits: &Limits) -> Result<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(0);
    }
    let alpha = independence_number(g, limits)?;
    Ok(n.div_ceil(alpha))
}

pub fn is_bipartite<G: Graph + ?Sized>(g: &G) -> bool {
    let n = g.vertex_count();
    let mut side: Vec<Option<bool>> = alloc::vec![None; n];
    let mut queue = Vec::new();
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        queue.push(s);
        while let Some(v) = queue.pop() {
            let here = side[v].unwrap();
            for &u in g.adjacent(v) {
                match side[u] {
                    None => {
                        side[u] = Some(!here);
                        queue.push(u);
                    }
                    Some(x) if x == here => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

/// Some proper `q`-coloring, found by backtracking with forward checking
/// (most constrained vertex first, new colors introduced in order).
pub fn find_coloring<G: Graph + ?Sized>(g: &G, q: u32) -> Option<Coloring> {
    assert!(q <= 64, "at most 64 colors");
    let n = g.vertex_count();
    if n == 0 {
        return Some(Coloring::new(Vec::new()));
    }
    if q == 0 {
        return None;
    }
    let full = if q == 64 { u64::MAX } else { (1u64 << q) - 1 };
    let mut domain = alloc::vec![full; n];
    let mut color: Vec<Option<u32>> = alloc::vec![None; n];
    if search_coloring(g, &mut domain, &mut color, 0) {
        Some(Coloring::new(
            color.into_iter().map(Option::unwrap).collect(),
        ))
    } else {
        None
    }
}

fn search_coloring<G: Graph + ?Sized>(
    g: &G,
    domain: &mut [u64],
    color: &mut [Option<u32>],
    colors_used: u32,
) -> bool {
    let Some(v) = (0..color.len())
        .filter(|&v| color[v].is_none())
        .min_by_key(|&v| {
            (
                domain[v].count_ones(),
                core::cmp::Reverse(g.adjacent(v).len()),
            )
        })
    else {
        return true;
    };
    let mut options = domain[v];
    while options != 0 {
        let c = options.trailing_zeros();
        options &= options - 1;
        // Unused colors are interchangeable: try only the first one.
        if c > colors_used {
            break;
        }
        let bit = 1u64 << c;
        let mut touched = Vec::new();
        let mut wiped = false;
        for &u in g.adjacent(v) {
            if color[u].is_none() && domain[u] & bit != 0 {
                domain[u] &= !bit;
                touched.push(u);
                if domain[u] == 0 {
                    wiped = true;
                }
            }
        }
        color[v] = Some(c);
        if !wiped && search_coloring(g, domain, color, colors_used.max(c + 1)) {
            return true;
        }
        color[v] = None;
        for u in touched {
            domain[u] |= bit;
        }
    }
    false
}

/// Exact chromatic number of `C_n^(k)`: 2 if bipartite, 3 if the 3-coloring
/// count is positive, otherwise the least `q >= 4` admitting a coloring.
pub fn chromatic_number(g: &ChordGraph, limits: &Limits) -> Result<usize> {
    if g.edge_count() == 0 {
        return Ok(1);
    }
    if is_bipartite(g) {
        return Ok(2);
    }
    if !dp_count(g, 3, limits)?.count.is_zero() {
        return Ok(3);
    }
    let mut q = 4;
    while find_coloring(g, q).is_none() {
        q += 1;
    }
    Ok(q as usize)
}

pub fn bounds_report(g: &ChordGraph, limits: &Limits) -> Result<BoundsReport> {
    let alpha = independence_number(g, limits)?;
    Ok(BoundsReport {
        n: g.n(),
        k: g.k(),
        alpha,
        lower: g.n().div_ceil(alpha),
        greedy_upper: greedy_upper(g),
        chi: chromatic_number(g, limits)?,
        bipartite: is_bipartite(g),
    })
}

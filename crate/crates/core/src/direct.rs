//! Ground-truth counters: plain backtracking enumeration and a frontier
//! dynamic program.
//!
//! The frontier DP assigns vertices in index order. Its state at step `p` is
//! the tuple of colors of already-colored vertices that still have an
//! uncolored neighbor, so distinct prefixes that agree on everything the
//! future can see share one table entry. For `C_n^(k)` that is the last `k`
//! colors, the first `k` colors (wrap-around edges) and, for even `n`, the
//! first-half colors whose diameter partner is not yet placed.

use alloc::boxed::Box;
use alloc::format;
use alloc::vec::Vec;

use hashbrown::HashMap;
use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::graph::{ChordGraph, Coloring, Graph};
use crate::record::{CountRecord, Limits, Method};
use crate::{Error, Result};

fn check_q(q: u32) -> Result<()> {
    if q == 0 {
        return Err(Error::ParameterOutOfRange(format!("q = {q}, need q >= 1")));
    }
    Ok(())
}

/// Earlier neighbors of each vertex in index order.
fn back_neighbors<G: Graph + ?Sized>(g: &G) -> Vec<Vec<usize>> {
    (0..g.vertex_count())
        .map(|v| g.adjacent(v).iter().copied().filter(|&u| u < v).collect())
        .collect()
}

/// Calls `visit` on every proper `q`-coloring of `g`, in lexicographic order.
///
/// Backtracking that rejects a partial assignment as soon as an edge to an
/// earlier vertex is monochromatic, and nothing more.
pub fn for_each_proper<G, F>(g: &G, q: u32, limits: &Limits, mut visit: F) -> Result<()>
where
    G: Graph + ?Sized,
    F: FnMut(&[u32]),
{
    check_q(q)?;
    let n = g.vertex_count();
    if n > limits.brute_max_n {
        return Err(Error::SizeGuard {
            what: "brute-force vertex count",
            size: n as u128,
            limit: limits.brute_max_n as u128,
        });
    }
    if n == 0 {
        visit(&[]);
        return Ok(());
    }
    let back = back_neighbors(g);
    let mut colors: Vec<u32> = alloc::vec![0; n];
    let mut v = 0usize;
    let mut next = alloc::vec![0u32; n];
    loop {
        let mut placed = false;
        while next[v] < q {
            let c = next[v];
            next[v] += 1;
            if back[v].iter().all(|&u| colors[u] != c) {
                colors[v] = c;
                placed = true;
                break;
            }
        }
        if placed {
            if v + 1 == n {
                visit(&colors);
            } else {
                v += 1;
                next[v] = 0;
            }
        } else {
            if v == 0 {
                return Ok(());
            }
            v -= 1;
        }
    }
}

/// Number of proper `q`-colorings of any graph by exhaustive enumeration.
pub fn brute_count_graph<G: Graph + ?Sized>(g: &G, q: u32, limits: &Limits) -> Result<BigUint> {
    let mut total: u128 = 0;
    for_each_proper(g, q, limits, |_| total += 1)?;
    Ok(BigUint::from(total))
}

/// Exhaustive count of proper `q`-colorings of `C_n^(k)`.
pub fn brute_count(g: &ChordGraph, q: u32, limits: &Limits) -> Result<CountRecord> {
    let count = brute_count_graph(g, q, limits)?;
    Ok(CountRecord::new(g.n(), g.k(), q, count, Method::Brute))
}

/// Exact count of proper `q`-colorings of `C_n^(k)` by frontier DP.
pub fn dp_count(g: &ChordGraph, q: u32, limits: &Limits) -> Result<CountRecord> {
    let table = FrontierCounter::new(g, q, limits)?;
    Ok(CountRecord::new(
        g.n(),
        g.k(),
        q,
        table.total().clone(),
        Method::Dp,
    ))
}

/// The `index`-th proper coloring in lexicographic order of color sequences.
pub fn unrank_coloring(
    g: &ChordGraph,
    q: u32,
    index: &BigUint,
    limits: &Limits,
) -> Result<Coloring> {
    FrontierCounter::new(g, q, limits)?.unrank(index)
}

#[derive(Debug, Clone, Copy)]
enum Source {
    Old(usize),
    New,
}

#[derive(Debug)]
struct Step {
    /// Positions in the incoming frontier key of earlier neighbors.
    checks: Vec<usize>,
    /// How to build the outgoing key.
    plan: Vec<Source>,
}

#[derive(Debug, Default)]
struct Layer {
    keys: Vec<Box<[u8]>>,
    /// `next[i * q + c]` is the index in the following layer, or `NONE`.
    next: Vec<u32>,
    completions: Vec<BigUint>,
}

const NONE: u32 = u32::MAX;

/// Frontier DP table over a fixed vertex order, with completion counts for
/// every reachable frontier state. Supports counting and unranking.
#[derive(Debug)]
pub struct FrontierCounter {
    q: u32,
    layers: Vec<Layer>,
    total: BigUint,
}

impl FrontierCounter {
    pub fn new<G: Graph + ?Sized>(g: &G, q: u32, limits: &Limits) -> Result<Self> {
        check_q(q)?;
        if q > u32::from(u8::MAX) {
            return Err(Error::ParameterOutOfRange(format!(
                "q = {q}, need q <= 255"
            )));
        }
        let n = g.vertex_count();
        let steps = Self::plan(g);
        let qs = q as usize;

        let mut layers: Vec<Layer> = Vec::with_capacity(n + 1);
        let mut current = Layer {
            keys: alloc::vec![Box::from([])],
            ..Layer::default()
        };
        let mut total_states = 1usize;

        for step in &steps {
            let mut index: HashMap<Box<[u8]>, u32> = HashMap::new();
            let mut keys: Vec<Box<[u8]>> = Vec::new();
            current.next = alloc::vec![NONE; current.keys.len() * qs];
            let mut scratch: Vec<u8> = Vec::with_capacity(step.plan.len());
            for (i, key) in current.keys.iter().enumerate() {
                for c in 0..q as u8 {
                    if step.checks.iter().any(|&pos| key[pos] == c) {
                        continue;
                    }
                    scratch.clear();
                    scratch.extend(step.plan.iter().map(|s| match *s {
                        Source::Old(pos) => key[pos],
                        Source::New => c,
                    }));
                    let j = match index.get(scratch.as_slice()) {
                        Some(&j) => j,
                        None => {
                            let j = keys.len() as u32;
                            let boxed: Box<[u8]> = scratch.as_slice().into();
                            index.insert(boxed.clone(), j);
                            keys.push(boxed);
                            j
                        }
                    };
                    current.next[i * qs + c as usize] = j;
                }
            }
            total_states += keys.len();
            if total_states > limits.dp_max_states {
                return Err(Error::SizeGuard {
                    what: "frontier DP states",
                    size: total_states as u128,
                    limit: limits.dp_max_states as u128,
                });
            }
            layers.push(current);
            current = Layer {
                keys,
                ..Layer::default()
            };
        }

        // After the last vertex the frontier is empty; every surviving path
        // ends in that single state.
        current.completions = alloc::vec![BigUint::one(); current.keys.len()];
        layers.push(current);

        for p in (0..n).rev() {
            let (head, tail) = layers.split_at_mut(p + 1);
            let layer = &mut head[p];
            let after = &tail[0].completions;
            layer.completions = (0..layer.keys.len())
                .map(|i| {
                    layer.next[i * qs..(i + 1) * qs]
                        .iter()
                        .filter(|&&j| j != NONE)
                        .fold(BigUint::zero(), |acc, &j| acc + &after[j as usize])
                })
                .collect();
        }

        let total = layers[0].completions.first().cloned().unwrap_or_default();
        Ok(FrontierCounter { q, layers, total })
    }

    fn plan<G: Graph + ?Sized>(g: &G) -> Vec<Step> {
        let n = g.vertex_count();
        let last_use: Vec<usize> = (0..n)
            .map(|v| g.adjacent(v).iter().copied().max().unwrap_or(v).max(v))
            .collect();
        let mut frontier: Vec<usize> = Vec::new();
        let mut steps = Vec::with_capacity(n);
        for p in 0..n {
            let checks = g
                .adjacent(p)
                .iter()
                .filter(|&&u| u < p)
                .map(|u| {
                    frontier
                        .iter()
                        .position(|w| w == u)
                        .expect("earlier neighbor must be on the frontier")
                })
                .collect();
            let mut out: Vec<usize> = frontier
                .iter()
                .copied()
                .filter(|&w| last_use[w] > p)
                .collect();
            if last_use[p] > p {
                out.push(p);
            }
            let plan = out
                .iter()
                .map(|&w| {
                    if w == p {
                        Source::New
                    } else {
                        Source::Old(frontier.iter().position(|&x| x == w).unwrap())
                    }
                })
                .collect();
            steps.push(Step { checks, plan });
            frontier = out;
        }
        steps
    }

    pub fn total(&self) -> &BigUint {
        &self.total
    }

    /// Total number of frontier states stored across all layers.
    pub fn state_count(&self) -> usize {
        self.layers.iter().map(|l| l.keys.len()).sum()
    }

    /// Lexicographic unranking: walks the table choosing the smallest color
    /// whose completion count still covers the remaining index.
    pub fn unrank(&self, index: &BigUint) -> Result<Coloring> {
        if index >= &self.total {
            return Err(Error::IndexOutOfRange {
                index: index.clone(),
                total: self.total.clone(),
            });
        }
        let qs = self.q as usize;
        let n = self.layers.len() - 1;
        let mut rest = index.clone();
        let mut state = 0usize;
        let mut colors = Vec::with_capacity(n);
        for p in 0..n {
            let layer = &self.layers[p];
            let after = &self.layers[p + 1].completions;
            let mut chosen = None;
            for c in 0..qs {
                let j = layer.next[state * qs + c];
                if j == NONE {
                    continue;
                }
                let here = &after[j as usize];
                if &rest < here {
                    chosen = Some((c, j as usize));
                    break;
                }
                rest -= here;
            }
            let (c, j) = chosen.expect("completion counts cover the index");
            colors.push(c as u32);
            state = j;
        }
        Ok(Coloring::new(colors))
    }
}

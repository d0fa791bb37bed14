//! Generalized circular chord graphs and a small adjacency-list graph type.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Read-only adjacency access shared by the counting and bounds code.
pub trait Graph {
    fn vertex_count(&self) -> usize;

    /// Neighbors of `v`, sorted ascending. `v` must be in range.
    fn adjacent(&self, v: usize) -> &[usize];

    fn edge_count(&self) -> usize {
        (0..self.vertex_count())
            .map(|v| self.adjacent(v).len())
            .sum::<usize>()
            / 2
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacent(u).binary_search(&v).is_ok()
    }
}

fn adjacency_from_edges(n: usize, edges: &BTreeSet<(usize, usize)>) -> Vec<Vec<usize>> {
    let mut adj = alloc::vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    adj
}

/// `C_n^(k)`: vertex set `Z_n` with edges `(i, i+1)`, `(i, i+k)` and, for even
/// `n`, `(i, i+n/2)`. Coinciding edges are merged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordGraph {
    n: usize,
    k: usize,
    edges: BTreeSet<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    offsets: Vec<usize>,
}

impl ChordGraph {
    /// Builds `C_n^(k)` for `n >= 3` and `2 <= k <= n/2`.
    ///
    /// `k = n/2` is accepted (the chords then coincide with the diameters);
    /// [`ChordGraph::chord_is_diameter`] flags that case.
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::ParameterOutOfRange(format!("n = {n}, need n >= 3")));
        }
        if k < 2 || 2 * k > n {
            return Err(Error::ParameterOutOfRange(format!(
                "k = {k}, need 2 <= k <= n/2 = {}",
                n / 2
            )));
        }

        let mut families = alloc::vec![1, k];
        if n % 2 == 0 {
            families.push(n / 2);
        }

        let mut edges = BTreeSet::new();
        for i in 0..n {
            for &d in &families {
                let j = (i + d) % n;
                if i == j {
                    return Err(Error::SelfLoop(i));
                }
                edges.insert((i.min(j), i.max(j)));
            }
        }

        // Offsets in both directions, deduplicated.
        let mut offsets: Vec<usize> = families
            .iter()
            .flat_map(|&d| [d % n, (n - d % n) % n])
            .collect();
        offsets.sort_unstable();
        offsets.dedup();

        let adj = adjacency_from_edges(n, &edges);
        Ok(ChordGraph {
            n,
            k,
            edges,
            adj,
            offsets,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn has_diameters(&self) -> bool {
        self.n % 2 == 0
    }

    /// True when `k = n/2`, outside the strict range `k < n/2`.
    pub fn chord_is_diameter(&self) -> bool {
        2 * self.k == self.n
    }

    /// Canonical `(min, max)` edge set.
    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    /// Distinct neighbor offsets `d` such that `v ~ v + d (mod n)` for every `v`.
    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    pub fn neighbors(&self, v: usize) -> Result<&[usize]> {
        self.adj
            .get(v)
            .map(Vec::as_slice)
            .ok_or(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
    }

    pub fn degree(&self) -> usize {
        self.offsets.len()
    }

    /// Checks that `colors` is a proper coloring.
    pub fn is_proper(&self, colors: &Coloring) -> Result<bool> {
        is_proper(self, colors)
    }
}

impl Graph for ChordGraph {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn adjacent(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    fn edge_count(&self) -> usize {
        self.edges.len()
    }
}

/// Plain undirected simple graph on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
}

impl SimpleGraph {
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: a.max(b),
                    n,
                });
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(SimpleGraph {
            adj: adjacency_from_edges(n, &set),
        })
    }

    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            adj: alloc::vec![Vec::new(); n],
        }
    }

    pub fn cycle(n: usize) -> Result<Self> {
        Self::circulant(n, &[1])
    }

    /// Circulant graph with edges `(i, i+d mod n)` for every `d` in `offsets`.
    pub fn circulant(n: usize, offsets: &[usize]) -> Result<Self> {
        if n < 3 {
            return Err(Error::ParameterOutOfRange(format!("n = {n}, need n >= 3")));
        }
        Self::from_edges(
            n,
            (0..n).flat_map(|i| offsets.iter().map(move |&d| (i, (i + d) % n))),
        )
    }
}

impl From<&ChordGraph> for SimpleGraph {
    fn from(g: &ChordGraph) -> Self {
        SimpleGraph { adj: g.adj.clone() }
    }
}

impl Graph for SimpleGraph {
    fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    fn adjacent(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }
}

/// Color index per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring(pub Vec<u32>);

impl Coloring {
    pub fn new(colors: Vec<u32>) -> Self {
        Coloring(colors)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Vertex `i` of the result gets the color of vertex `i - t`.
    pub fn rotated(&self, t: usize) -> Coloring {
        let mut v = self.0.clone();
        if !v.is_empty() {
            let len = v.len();
            v.rotate_right(t % len);
        }
        Coloring(v)
    }

    pub fn check_range(&self, q: u32) -> Result<()> {
        match self.0.iter().position(|&c| c >= q) {
            Some(vertex) => Err(Error::ColorOutOfRange {
                vertex,
                color: self.0[vertex],
                q,
            }),
            None => Ok(()),
        }
    }
}

impl From<Vec<u32>> for Coloring {
    fn from(v: Vec<u32>) -> Self {
        Coloring(v)
    }
}

/// True iff no edge of `g` joins two vertices of the same color.
pub fn is_proper<G: Graph + ?Sized>(g: &G, colors: &Coloring) -> Result<bool> {
    let n = g.vertex_count();
    if colors.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: colors.len(),
        });
    }
    let c = colors.as_slice();
    Ok((0..n).all(|v| g.adjacent(v).iter().all(|&u| c[u] != c[v])))
}

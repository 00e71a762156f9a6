use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use rand::Rng as _;

use crate::seed;
use crate::{Error, Result};

/// Undirected weighted edge with `i < j`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub i: usize,
    pub j: usize,
    pub w: f64,
}

/// Edge-weighted undirected graph without self-loops or parallel edges.
/// Edges are kept sorted by `(i, j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGraph {
    n: usize,
    edges: Vec<Edge>,
}

impl WeightedGraph {
    /// Endpoints may be given in either order; they are normalized to `i < j`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize, f64)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (a, b, w) in edges {
            if a == b {
                return Err(Error::invalid("self-loop"));
            }
            let (i, j) = if a < b { (a, b) } else { (b, a) };
            if j >= n {
                return Err(Error::InvalidIndex { index: j, n });
            }
            if !w.is_finite() {
                return Err(Error::invalid("non-finite edge weight"));
            }
            if map.insert((i, j), w).is_some() {
                return Err(Error::invalid("duplicate edge"));
            }
        }
        Ok(Self::from_map(n, map))
    }

    fn from_map(n: usize, map: BTreeMap<(usize, usize), f64>) -> Self {
        let edges = map.into_iter().map(|((i, j), w)| Edge { i, j, w }).collect();
        Self { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn total_weight(&self) -> f64 {
        self.edges.iter().map(|e| e.w).sum()
    }

    pub fn weight(&self, a: usize, b: usize) -> f64 {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        self.edges
            .binary_search_by(|e| (e.i, e.j).cmp(&(i, j)))
            .map(|k| self.edges[k].w)
            .unwrap_or(0.0)
    }

    /// Dense symmetric weight matrix with zero diagonal.
    pub fn weight_matrix(&self) -> Vec<Vec<f64>> {
        let mut m = crate::linalg::zeros(self.n);
        for e in &self.edges {
            m[e.i][e.j] = e.w;
            m[e.j][e.i] = e.w;
        }
        m
    }

    /// Neighbor lists `(neighbor, weight)` per node.
    pub fn adjacency(&self) -> Vec<Vec<(usize, f64)>> {
        let mut adj = alloc::vec![Vec::new(); self.n];
        for e in &self.edges {
            adj[e.i].push((e.j, e.w));
            adj[e.j].push((e.i, e.w));
        }
        adj
    }

    /// `½ Σ ω_ij (1 - z_i z_j)` for spins `z_i = ±1`.
    pub fn cut_value(&self, z: &[i8]) -> Result<f64> {
        if z.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: z.len() });
        }
        Ok(self.edges.iter().filter(|e| z[e.i] != z[e.j]).map(|e| e.w).sum())
    }
}

/// Substitute `z_elim = sign · z_keep` and drop node `elim`.
///
/// Returns the reduced graph (nodes above `elim` shift down by one) and the
/// constant `offset` such that
/// `cut(reduced, z') + offset = cut(g, z)` for the extended assignment `z`.
/// Parallel edges produced by the substitution are merged and zero-weight
/// results removed.
pub fn reduce_maxcut(
    g: &WeightedGraph,
    elim: usize,
    keep: usize,
    sign: i8,
) -> Result<(WeightedGraph, f64)> {
    let n = g.n();
    for idx in [elim, keep] {
        if idx >= n {
            return Err(Error::InvalidIndex { index: idx, n });
        }
    }
    if elim == keep {
        return Err(Error::invalid("eliminated and kept node coincide"));
    }
    if sign != 1 && sign != -1 {
        return Err(Error::invalid("sign must be ±1"));
    }
    let s = f64::from(sign);
    let remap = |v: usize| if v > elim { v - 1 } else { v };
    let mut offset = 0.0;
    let mut map: BTreeMap<(usize, usize), f64> = BTreeMap::new();
    let mut add = |a: usize, b: usize, w: f64| {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        *map.entry((remap(i), remap(j))).or_insert(0.0) += w;
    };
    for e in g.edges() {
        let other = if e.i == elim {
            e.j
        } else if e.j == elim {
            e.i
        } else {
            add(e.i, e.j, e.w);
            continue;
        };
        // ω (1 - s z_o z_k)/2 = s ω (1 - z_o z_k)/2 + ω (1 - s)/2
        offset += 0.5 * (1.0 - s) * e.w;
        if other != keep {
            add(other, keep, s * e.w);
        }
    }
    map.retain(|_, w| *w != 0.0);
    Ok((WeightedGraph::from_map(n - 1, map), offset))
}

/// Erdős–Rényi graph: each pair `i < j` is an edge with probability `p_edge`
/// and a weight drawn uniformly from `weight_set`. Zero weights are dropped.
pub fn random_graph(n: usize, p_edge: f64, weight_set: &[f64], seed: u64) -> Result<WeightedGraph> {
    if n < 2 {
        return Err(Error::invalid("graph needs at least two nodes"));
    }
    if weight_set.is_empty() {
        return Err(Error::Empty("weight set"));
    }
    if !(0.0..=1.0).contains(&p_edge) {
        return Err(Error::invalid("edge probability outside [0, 1]"));
    }
    let mut rng = seed::rng(seed, "graph-er", &[]);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.random::<f64>() < p_edge {
                let w = weight_set[rng.random_range(0..weight_set.len())];
                if w != 0.0 {
                    edges.push((i, j, w));
                }
            }
        }
    }
    WeightedGraph::new(n, edges)
}

/// Complete graph with integer weights uniform on `lo..=hi`; pairs that draw
/// zero are left without an edge.
pub fn complete_graph(n: usize, lo: i64, hi: i64, seed: u64) -> Result<WeightedGraph> {
    if n < 2 {
        return Err(Error::invalid("graph needs at least two nodes"));
    }
    if lo > hi {
        return Err(Error::invalid("empty weight range"));
    }
    let mut rng = seed::rng(seed, "graph-complete", &[]);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let w = rng.random_range(lo..=hi);
            if w != 0 {
                edges.push((i, j, w as f64));
            }
        }
    }
    WeightedGraph::new(n, edges)
}

//! Undirected simple graphs in compressed sparse row form.

use crate::bits::BitSet;
use crate::{Error, Result};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::VecDeque;

/// Immutable undirected simple graph. Neighbor rows are strictly increasing,
/// adjacency is symmetric and self-loops are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<usize>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges and self-loops are
    /// tolerated on input: duplicates are merged, self-loops dropped.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                continue;
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut neighbors = Vec::new();
        offsets.push(0);
        for row in &mut adj {
            row.sort_unstable();
            row.dedup();
            neighbors.extend_from_slice(row);
            offsets.push(neighbors.len());
        }
        Ok(Graph { offsets, neighbors })
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.neighbors.len() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Edges as (u, v) pairs with u < v, in CSR order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Open neighborhood N(v) as a bit set.
    pub fn neighborhood(&self, v: usize) -> BitSet {
        BitSet::from_indices(self.n(), self.neighbors(v).iter().copied())
    }

    /// Closed neighborhood N[v] = N(v) ∪ {v}.
    pub fn closed_neighborhood(&self, v: usize) -> BitSet {
        let mut s = self.neighborhood(v);
        s.insert(v);
        s
    }

    /// Vertices with deg(v) ≥ n/k − 1, tested by the integer-exact
    /// inequality k·(deg(v)+1) ≥ n. Any k-dominating set contains one.
    pub fn high_degree_vertices(&self, k: usize) -> Result<BitSet> {
        if k == 0 {
            return Err(Error::parameter("high_degree_vertices requires k >= 1"));
        }
        let n = self.n();
        Ok(BitSet::from_indices(
            n,
            (0..n).filter(|&v| k * (self.degree(v) + 1) >= n),
        ))
    }

    /// The ball B_r(v) = { x : d(x, v) ≤ r }, by breadth-first search.
    pub fn bfs_ball(&self, v: usize, r: usize) -> BitSet {
        let mut seen = BitSet::new(self.n());
        seen.insert(v);
        let mut queue = VecDeque::from([(v, 0usize)]);
        while let Some((u, d)) = queue.pop_front() {
            if d == r {
                continue;
            }
            for &w in self.neighbors(u) {
                if !seen.contains(w) {
                    seen.insert(w);
                    queue.push_back((w, d + 1));
                }
            }
        }
        seen
    }

    /// Subgraph induced by `x`, together with the map from new ids to old.
    pub fn induced_subgraph(&self, x: &BitSet) -> (Graph, Vec<usize>) {
        let old_ids: Vec<usize> = x.iter().collect();
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in old_ids.iter().enumerate() {
            new_id[v] = i;
        }
        let mut edges = Vec::new();
        for &v in &old_ids {
            for &w in self.neighbors(v) {
                if v < w && x.contains(w) {
                    edges.push((new_id[v], new_id[w]));
                }
            }
        }
        let g = Graph::from_edge_list(old_ids.len(), &edges).expect("ids in range");
        (g, old_ids)
    }

    /// Parses the edge-list text format: first line `n m`, then m lines
    /// `u v` (0-based). Lines starting with `#` are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty edge-list file".into()))?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad header line: {header:?}")))?;
        let m: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad header line: {header:?}")))?;
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            let mut it = line.split_whitespace();
            let u: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad edge line: {line:?}")))?;
            let v: usize = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad edge line: {line:?}")))?;
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::Parse(format!(
                "header promises {m} edges, found {}",
                edges.len()
            )));
        }
        Graph::from_edge_list(n, &edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.m());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges=", self.n(), self.m())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edge_list(n, &edges).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    if n > 2 {
        edges.push((n - 1, 0));
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Star K_{1,n-1} with the center at vertex 0.
pub fn star(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Seeded G(n, m): m edges sampled without replacement.
pub fn random_gnm(n: usize, m: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_m = n * (n.saturating_sub(1)) / 2;
    let m = m.min(max_m);
    let mut edges = std::collections::BTreeSet::new();
    while edges.len() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            edges.insert((u.min(v), u.max(v)));
        }
    }
    let edges: Vec<_> = edges.into_iter().collect();
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Seeded G(n, p).
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

/// All graphs on n labelled vertices, enumerated by edge subsets.
/// Intended for exhaustive oracle sweeps with small n only.
pub fn enumerate_all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total = 1u64 << pairs.len();
    (0..total).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edge_list(n, &edges).unwrap()
    })
}

//! Common-neighborhood tables, all-edge triangle counting, and the closed
//! neighborhood containment / (k−1)-covering solvers built on them.

use crate::bits::BitSet;
use crate::graph::Graph;
use crate::{Error, Result};
use itertools::Itertools;
use std::collections::HashMap;

/// Sparse map from sorted k-tuples of distinct vertices to the size of the
/// intersection of their open neighborhoods. Only nonzero entries are kept.
#[derive(Clone, Debug)]
pub struct CommonNbrTable {
    k: usize,
    map: HashMap<Vec<usize>, usize>,
}

impl CommonNbrTable {
    pub fn k(&self) -> usize {
        self.k
    }

    /// Common-neighbor count of the given vertices, in any order.
    pub fn get(&self, vertices: &[usize]) -> usize {
        debug_assert_eq!(vertices.len(), self.k);
        let mut key = vertices.to_vec();
        key.sort_unstable();
        self.map.get(&key).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<usize>, usize)> {
        self.map.iter().map(|(k, &v)| (k, v))
    }
}

/// Edge-driven accumulation: every edge {u,v} contributes one unit to the
/// key {u} ∪ S for each (k−1)-subset S of N(v)\{u} (in both orientations).
/// A common neighbor of a k-tuple is counted once per member, so each
/// accumulator is divisible by k and the final value is accumulator / k.
pub fn common_neighborhood_table(g: &Graph, k: usize) -> Result<CommonNbrTable> {
    if k < 2 {
        return Err(Error::parameter("common-neighborhood table requires k >= 2"));
    }
    let mut acc: HashMap<Vec<usize>, usize> = HashMap::new();
    for u in 0..g.n() {
        for &v in g.neighbors(u) {
            // v plays the common-neighbor role; u is a tuple member
            let others: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| w != u).collect();
            for subset in others.into_iter().combinations(k - 1) {
                let mut key = subset;
                key.push(u);
                key.sort_unstable();
                *acc.entry(key).or_insert(0) += 1;
            }
        }
    }
    let map = acc
        .into_iter()
        .map(|(key, count)| {
            assert_eq!(count % k, 0, "accumulator {count} not divisible by k={k}");
            (key, count / k)
        })
        .collect();
    Ok(CommonNbrTable { k, map })
}

/// Per-edge triangle counts, aligned with `Graph::edges()` order.
#[derive(Clone, Debug)]
pub struct EdgeTriangleCounts {
    edges: Vec<(usize, usize)>,
    counts: Vec<usize>,
    index: HashMap<(usize, usize), usize>,
}

impl EdgeTriangleCounts {
    pub fn count(&self, u: usize, v: usize) -> Option<usize> {
        self.index
            .get(&(u.min(v), u.max(v)))
            .map(|&i| self.counts[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.edges.iter().copied().zip(self.counts.iter().copied())
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}

/// Sorted-merge intersection size of two ascending slices.
pub fn merge_intersection_count(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// For each edge {u,v}: |N(u) ∩ N(v)|. Vertices of degree at least
/// ⌈√(2m)⌉ are "heavy"; heavy-heavy edges are answered from a popcount
/// product of the heavy adjacency rows, everything else by a sorted merge.
pub fn all_edge_triangle_counts(g: &Graph) -> EdgeTriangleCounts {
    let n = g.n();
    let threshold = ((2 * g.m()) as f64).sqrt().ceil() as usize;
    let heavy: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= threshold.max(1)).collect();
    let mut heavy_id = vec![usize::MAX; n];
    for (i, &v) in heavy.iter().enumerate() {
        heavy_id[v] = i;
    }
    let heavy_counts = if heavy.is_empty() {
        None
    } else {
        let mut rows = crate::bitmat::BitMatrix::zeros(heavy.len(), n);
        for (i, &v) in heavy.iter().enumerate() {
            rows.set_row(i, &g.neighborhood(v));
        }
        Some(crate::bitmat::count_product(&rows, &rows).expect("square by construction"))
    };

    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut counts = Vec::with_capacity(edges.len());
    let mut index = HashMap::with_capacity(edges.len());
    for (i, &(u, v)) in edges.iter().enumerate() {
        let c = match (&heavy_counts, heavy_id[u], heavy_id[v]) {
            (Some(p), hu, hv) if hu != usize::MAX && hv != usize::MAX => {
                p.get(hu, hv) as usize
            }
            _ => merge_intersection_count(g.neighbors(u), g.neighbors(v)),
        };
        counts.push(c);
        index.insert((u, v), i);
    }
    EdgeTriangleCounts { edges, counts, index }
}

/// Lexicographically smallest ordered pair (x, y) of distinct vertices with
/// N[x] ⊆ N[y]. Such a pair is necessarily adjacent, and on an edge the
/// containment is equivalent to the edge lying in exactly deg(x)−1
/// triangles.
pub fn closed_containment(g: &Graph) -> Option<(usize, usize)> {
    let tri = all_edge_triangle_counts(g);
    for x in 0..g.n() {
        for &y in g.neighbors(x) {
            if tri.count(x, y) == Some(g.degree(x) - 1) {
                return Some((x, y));
            }
        }
    }
    None
}

/// Pairwise distinct (x_1, ..., x_k) with N[x_1] ⊆ N[x_2] ∪ … ∪ N[x_k],
/// or None. For k = 2 this is closed_containment. For k ≥ 3 the solver
/// fixes an ordered (k−2)-tuple, restricts attention to
/// V_3 = V \ ∪ N[fixed], and looks for an edge {witness, covered} with
/// N[covered] ∩ V_3 ⊆ N[witness] — the bitset form of the tripartite
/// triangle-count criterion. A recursive arity-(k−1) call padded with an
/// unused vertex covers solutions whose covered vertex touches no witness
/// outside the fixed tuple.
pub fn closed_covering(g: &Graph, k: usize) -> Result<Option<Vec<usize>>> {
    if k < 2 {
        return Err(Error::parameter("closed covering requires k >= 2"));
    }
    let n = g.n();
    if k > n {
        return Ok(None);
    }
    if k == 2 {
        return Ok(closed_containment(g).map(|(x, y)| vec![x, y]));
    }
    let closed: Vec<BitSet> = (0..n).map(|v| g.closed_neighborhood(v)).collect();
    for fixed in (0..n).permutations(k - 2) {
        let mut covered_by_fixed = BitSet::new(n);
        for &f in &fixed {
            covered_by_fixed.union_with(&closed[f]);
        }
        let v3 = covered_by_fixed.complement();
        for b in 0..n {
            if fixed.contains(&b) {
                continue;
            }
            let mut rest = closed[b].clone();
            rest.intersect_with(&v3);
            for &a in g.neighbors(b) {
                if a == b || fixed.contains(&a) {
                    continue;
                }
                if rest.is_subset_of(&closed[a]) {
                    let mut tuple = vec![b];
                    tuple.extend(&fixed);
                    tuple.push(a);
                    return Ok(Some(tuple));
                }
            }
        }
    }
    // degenerate overlaps: a (k−1)-covering padded with any unused vertex
    if let Some(mut sub) = closed_covering(g, k - 1)? {
        let pad = (0..n).find(|v| !sub.contains(v)).expect("k <= n");
        sub.push(pad);
        return Ok(Some(sub));
    }
    Ok(None)
}

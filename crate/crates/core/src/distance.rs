//! Distance-r k-Dominating Set: take the boolean r-th power of the
//! reflexive adjacency matrix, clear the diagonal, and solve plain
//! k-domination on the resulting closure graph. A BFS-ball oracle
//! cross-checks the closure route.

use crate::bitmat::adjacency_bitmatrix;
use crate::bits::BitSet;
use crate::domset::{kdomset, DomQuery, SizeMode};
use crate::graph::Graph;
use crate::{Error, Result};
use itertools::Itertools;

/// The closure graph: u ~ v iff 1 ≤ d_G(u, v) ≤ r.
#[derive(Clone, Debug)]
pub struct ClosureResult {
    pub closure: Graph,
    pub r: usize,
}

pub fn distance_r_closure(g: &Graph, r: usize) -> Result<ClosureResult> {
    if r == 0 {
        return Err(Error::parameter("distance closure requires r >= 1"));
    }
    let power = adjacency_bitmatrix(g, true).bool_closure_power(r)?;
    let mut edges = Vec::new();
    for u in 0..g.n() {
        for v in power.row_bits(u) {
            if u < v {
                edges.push((u, v));
            }
        }
    }
    Ok(ClosureResult {
        closure: Graph::from_edge_list(g.n(), &edges)?,
        r,
    })
}

/// k-dominating set of the closure graph, which is exactly a set whose
/// radius-r balls cover g.
pub fn solve_distance_r_kdomset(g: &Graph, k: usize, r: usize) -> Result<Option<BitSet>> {
    if k < 1 {
        return Err(Error::parameter("distance domination requires k >= 1"));
    }
    let closure = distance_r_closure(g, r)?;
    kdomset(&closure.closure, DomQuery::new(k, SizeMode::AtMost)?)
}

/// Exhaustive oracle over k-subsets, covering by BFS balls directly on g.
pub fn brute_force_distance_domset(g: &Graph, k: usize, r: usize) -> Result<Option<BitSet>> {
    let n = g.n();
    if k < 1 || k > n {
        return Err(Error::parameter(format!(
            "brute force needs 1 <= k <= n, got k={k}, n={n}"
        )));
    }
    if r == 0 {
        return Err(Error::parameter("distance domination requires r >= 1"));
    }
    let balls: Vec<BitSet> = (0..n).map(|v| g.bfs_ball(v, r)).collect();
    for combo in (0..n).combinations(k) {
        let mut covered = BitSet::new(n);
        for &v in &combo {
            covered.union_with(&balls[v]);
        }
        if covered.is_full() {
            return Ok(Some(BitSet::from_indices(n, combo)));
        }
    }
    Ok(None)
}

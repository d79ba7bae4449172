//! Max-Entry Matrix Product: decide whether some entry of B·C reaches its
//! row sum, i.e. whether support(row_i(B)) ⊆ support(col_j(C)) for some
//! (i, j). Three routes are provided: the popcount-product naive solver,
//! and a hashed solver that compresses the columns of C bucket-by-degree
//! before searching, then verifies every surviving candidate so the output
//! is exact regardless of hash luck. On top sits the 2-Dominating Set
//! solver that feeds complement-adjacency matrices into the engine.

use crate::bitmat::{adjacency_bitmatrix, count_product, row_subset_pairs, BitMatrix};
use crate::graph::Graph;
use crate::{Error, Result};
use std::collections::BTreeSet;

/// B is ℓ_B × n; C is supplied transposed as C_T (n_C × n), so row j of
/// C_T is column j of C.
#[derive(Clone, Debug)]
pub struct MaxEntryInstance {
    pub b: BitMatrix,
    pub c_t: BitMatrix,
}

impl MaxEntryInstance {
    pub fn new(b: BitMatrix, c_t: BitMatrix) -> Result<Self> {
        if b.cols() != c_t.cols() {
            return Err(Error::DimensionMismatch(format!(
                "B has inner dimension {}, C_T has {}",
                b.cols(),
                c_t.cols()
            )));
        }
        Ok(MaxEntryInstance { b, c_t })
    }

    pub fn inner_dim(&self) -> usize {
        self.b.cols()
    }

    /// Direct check of a single pair against the uncompressed matrices.
    fn pair_holds(&self, i: usize, j: usize) -> bool {
        self.b
            .row(i)
            .iter()
            .zip(self.c_t.row(j))
            .all(|(x, y)| x & !y == 0)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct HashScheme {
    pub seed: u64,
    pub repetitions: usize,
}

impl HashScheme {
    pub fn new(seed: u64, repetitions: usize) -> Result<Self> {
        if repetitions < 1 {
            return Err(Error::parameter("hash scheme needs >= 1 repetition"));
        }
        Ok(HashScheme { seed, repetitions })
    }

    /// Default repetition count ⌈log2 n⌉ + 3 for inner dimension n.
    pub fn for_inner_dim(seed: u64, n: usize) -> Self {
        let log = usize::BITS - n.max(1).next_power_of_two().leading_zeros() - 1;
        HashScheme {
            seed,
            repetitions: log as usize + 3,
        }
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e3779b97f4a7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
    x ^ (x >> 31)
}

/// Deterministic hash [n] → [2^bits] keyed by (seed, repetition, bucket).
fn hash_value(seed: u64, rep: usize, level: u32, x: usize, bits: u32) -> usize {
    let key = splitmix64(seed ^ (rep as u64).rotate_left(17) ^ (level as u64).rotate_left(41));
    (splitmix64(x as u64 ^ key) >> (64 - bits)) as usize
}

/// All (i, j) with (B·C)[i,j] equal to the i-th row sum of B, by full
/// popcount product. A zero row of B pairs with every column.
pub fn max_entry_naive(inst: &MaxEntryInstance) -> Result<Vec<(usize, usize)>> {
    let counts = count_product(&inst.b, &inst.c_t)?;
    let mut pairs = Vec::new();
    for i in 0..inst.b.rows() {
        let target = inst.b.row_popcount(i) as u32;
        for j in 0..inst.c_t.rows() {
            if counts.get(i, j) == target {
                pairs.push((i, j));
            }
        }
    }
    Ok(pairs)
}

/// Nonzero columns of C grouped by ⌊log2 degree⌋, plus the zero-degree
/// columns in their own list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeBuckets {
    pub levels: Vec<(u32, Vec<usize>)>,
    pub zero: Vec<usize>,
}

pub fn bucket_by_degree(c_t: &BitMatrix) -> DegreeBuckets {
    let mut levels: std::collections::BTreeMap<u32, Vec<usize>> = Default::default();
    let mut zero = Vec::new();
    for j in 0..c_t.rows() {
        let deg = c_t.row_popcount(j);
        if deg == 0 {
            zero.push(j);
        } else {
            levels.entry(deg.ilog2()).or_default().push(j);
        }
    }
    DegreeBuckets {
        levels: levels.into_iter().collect(),
        zero,
    }
}

/// The hashed solver. Per bucket of level ℓ and per repetition the column
/// indices [n] are hashed into [2^{ℓ+2}] and both matrices are OR-folded
/// along the hash; subset pairs of the compressed matrices survive as
/// candidates, candidates are intersected across repetitions, and every
/// survivor is re-checked against the original instance. The output is
/// therefore always exactly `max_entry_naive`.
pub fn max_entry_hashed(
    inst: &MaxEntryInstance,
    scheme: &HashScheme,
) -> Result<Vec<(usize, usize)>> {
    let n = inst.inner_dim();
    let rows_b = inst.b.rows();
    let buckets = bucket_by_degree(&inst.c_t);
    let mut verified = BTreeSet::new();

    // Zero-degree columns can only absorb zero rows; check those directly.
    for &j in &buckets.zero {
        for i in 0..rows_b {
            if inst.b.row_is_zero(i) {
                verified.insert((i, j));
            }
        }
    }

    for (level, cols) in &buckets.levels {
        let bits = level + 2;
        let width = 1usize << bits;
        let guard = 4.0 * ((rows_b * cols.len()) as f64).sqrt() * n as f64;
        let mut candidates: Option<BTreeSet<(usize, usize)>> = None;
        for rep in 0..scheme.repetitions {
            let mut h = vec![0usize; n];
            for (x, slot) in h.iter_mut().enumerate() {
                *slot = hash_value(scheme.seed, rep, *level, x, bits);
            }
            let mut b_prime = BitMatrix::zeros(rows_b, width);
            for i in 0..rows_b {
                for k in inst.b.row_bits(i) {
                    b_prime.set(i, h[k], true);
                }
            }
            let mut c_prime_t = BitMatrix::zeros(cols.len(), width);
            for (jj, &j) in cols.iter().enumerate() {
                for k in inst.c_t.row_bits(j) {
                    c_prime_t.set(jj, h[k], true);
                }
            }
            let found: BTreeSet<(usize, usize)> = row_subset_pairs(&b_prime, &c_prime_t)?
                .into_iter()
                .map(|(i, jj)| (i, cols[jj]))
                .collect();
            candidates = Some(match candidates {
                None => found,
                Some(prev) => prev.intersection(&found).copied().collect(),
            });
        }
        let candidates = candidates.unwrap_or_default();
        if candidates.len() as f64 > guard {
            // adversarial seed for this bucket: give up on hashing and
            // test every pair directly
            for i in 0..rows_b {
                for &j in cols {
                    if inst.pair_holds(i, j) {
                        verified.insert((i, j));
                    }
                }
            }
        } else {
            for (i, j) in candidates {
                if inst.pair_holds(i, j) {
                    verified.insert((i, j));
                }
            }
        }
    }
    Ok(verified.into_iter().collect())
}

/// 2-Dominating Set through the max-entry engine. Rows of B are the
/// complemented closed neighborhoods of the high-degree vertices
/// (deg ≥ n/2 − 1); C is the reflexive adjacency matrix. A pair is a
/// solution iff V \ N[u] ⊆ N[v], i.e. N[u] ∪ N[v] = V.
pub fn two_domset(g: &Graph) -> Result<Option<(usize, usize)>> {
    let n = g.n();
    if n < 2 {
        return Err(Error::parameter("two_domset requires n >= 2"));
    }
    let high: Vec<usize> = g.high_degree_vertices(2)?.to_vec();
    if high.is_empty() {
        return Ok(None);
    }
    let adj = adjacency_bitmatrix(g, true);
    let mut b = BitMatrix::zeros(high.len(), n);
    for (i, &u) in high.iter().enumerate() {
        b.set_row(i, &g.closed_neighborhood(u).complement());
    }
    let inst = MaxEntryInstance::new(b, adj)?;
    let scheme = HashScheme::for_inner_dim(0x5eed_d0d0, n);
    let pairs = max_entry_hashed(&inst, &scheme)?;
    let best = pairs
        .into_iter()
        .map(|(i, j)| {
            let u = high[i];
            if u == j {
                // N[u] alone covers V; partner with the smallest other
                // vertex to return a genuine pair
                let other = (0..n).find(|&v| v != u).expect("n >= 2");
                (u.min(other), u.max(other))
            } else {
                (u.min(j), u.max(j))
            }
        })
        .min();
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domset::{brute_force_kdomset, is_dominating};
    use crate::graph::{enumerate_all_graphs, path, random_gnm, Graph};
    use crate::bits::BitSet;
    use rand::{Rng, SeedableRng};

    fn from_rows(rows: &[&[u8]]) -> BitMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = BitMatrix::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v != 0);
            }
        }
        m
    }

    fn random_matrix(rng: &mut rand_chacha::ChaCha8Rng, r: usize, c: usize, p: f64) -> BitMatrix {
        let mut m = BitMatrix::zeros(r, c);
        for i in 0..r {
            for j in 0..c {
                m.set(i, j, rng.gen_bool(p));
            }
        }
        m
    }

    #[test]
    fn naive_examples() {
        let i3 = BitMatrix::identity(3);
        let inst = MaxEntryInstance::new(i3.clone(), i3).unwrap();
        assert_eq!(
            max_entry_naive(&inst).unwrap(),
            vec![(0, 0), (1, 1), (2, 2)]
        );

        let b = from_rows(&[&[0, 0, 0]]);
        let ct = from_rows(&[&[1, 0, 1], &[0, 0, 0]]);
        let inst = MaxEntryInstance::new(b, ct).unwrap();
        assert_eq!(max_entry_naive(&inst).unwrap(), vec![(0, 0), (0, 1)]);

        let b = from_rows(&[&[1, 0, 1]]);
        let ct = from_rows(&[&[1, 0, 1], &[1, 1, 1], &[0, 0, 1]]);
        let inst = MaxEntryInstance::new(b, ct).unwrap();
        assert_eq!(max_entry_naive(&inst).unwrap(), vec![(0, 0), (0, 1)]);
    }

    #[test]
    fn bucket_examples() {
        // column degrees 1, 2, 3, 4
        let ct = from_rows(&[
            &[1, 0, 0, 0],
            &[1, 1, 0, 0],
            &[1, 1, 1, 0],
            &[1, 1, 1, 1],
        ]);
        let b = bucket_by_degree(&ct);
        assert_eq!(
            b.levels,
            vec![(0, vec![0]), (1, vec![1, 2]), (2, vec![3])]
        );
        assert!(b.zero.is_empty());

        let b = bucket_by_degree(&BitMatrix::zeros(3, 4));
        assert!(b.levels.is_empty());
        assert_eq!(b.zero, vec![0, 1, 2]);

        let mut uniform = BitMatrix::zeros(2, 8);
        for j in 0..2 {
            for k in 0..8 {
                uniform.set(j, k, true);
            }
        }
        let b = bucket_by_degree(&uniform);
        assert_eq!(b.levels, vec![(3, vec![0, 1])]);
    }

    #[test]
    fn hashed_identity() {
        let i5 = BitMatrix::identity(5);
        let inst = MaxEntryInstance::new(i5.clone(), i5).unwrap();
        for seed in [0u64, 1, 99] {
            let scheme = HashScheme::new(seed, 4).unwrap();
            assert_eq!(
                max_entry_hashed(&inst, &scheme).unwrap(),
                vec![(0, 0), (1, 1), (2, 2), (3, 3), (4, 4)]
            );
        }
    }

    #[test]
    fn hashed_matches_naive_sweep() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(404);
        for trial in 0..1000 {
            let b = random_matrix(&mut rng, 8, 32, 0.25);
            let ct = random_matrix(&mut rng, 16, 32, 0.5);
            let inst = MaxEntryInstance::new(b, ct).unwrap();
            let scheme = HashScheme::for_inner_dim(trial, 32);
            assert_eq!(
                max_entry_hashed(&inst, &scheme).unwrap(),
                max_entry_naive(&inst).unwrap(),
                "trial {trial}"
            );
        }
    }

    #[test]
    fn hashed_single_repetition_still_exact() {
        // verification alone must keep the output exact even with a
        // maximally collision-prone schedule
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for trial in 0..100 {
            let b = random_matrix(&mut rng, 5, 20, 0.3);
            let ct = random_matrix(&mut rng, 7, 20, 0.6);
            let inst = MaxEntryInstance::new(b, ct).unwrap();
            let scheme = HashScheme::new(trial, 1).unwrap();
            assert_eq!(
                max_entry_hashed(&inst, &scheme).unwrap(),
                max_entry_naive(&inst).unwrap()
            );
        }
    }

    #[test]
    fn two_domset_examples() {
        // two disjoint stars K_{1,3}: centers have degree 3 = n/2 - 1
        let g = Graph::from_edge_list(
            8,
            &[(0, 1), (0, 2), (0, 3), (4, 5), (4, 6), (4, 7)],
        )
        .unwrap();
        let (u, v) = two_domset(&g).unwrap().unwrap();
        assert!(is_dominating(&g, &BitSet::from_indices(8, [u, v])));
        assert_eq!((u, v), (0, 4));

        let p5 = path(5);
        let (u, v) = two_domset(&p5).unwrap().unwrap();
        assert!(is_dominating(&p5, &BitSet::from_indices(5, [u, v])));

        let p7 = path(7);
        assert_eq!(two_domset(&p7).unwrap(), None);

        assert!(two_domset(&Graph::from_edge_list(1, &[]).unwrap()).is_err());
    }

    #[test]
    fn two_domset_matches_oracle_small() {
        for g in enumerate_all_graphs(5) {
            let brute = brute_force_kdomset(&g, 2).unwrap();
            let fast = two_domset(&g).unwrap();
            assert_eq!(brute.is_some(), fast.is_some(), "{g:?}");
            if let Some((u, v)) = fast {
                assert!(is_dominating(&g, &BitSet::from_indices(g.n(), [u, v])));
            }
        }
    }

    #[test]
    fn two_domset_matches_oracle_random() {
        for seed in 0..100 {
            let n = 8 + (seed as usize % 24);
            let g = random_gnm(n, (seed as usize % 3 + 1) * n, seed);
            let brute = brute_force_kdomset(&g, 2).unwrap();
            let fast = two_domset(&g).unwrap();
            assert_eq!(brute.is_some(), fast.is_some(), "n={n} seed={seed}");
        }
    }
}

//! k-Orthogonal-Vectors instances and their brute-force solver.
//!
//! The brute force here is the global correctness oracle for every
//! reduction in the crate; it is deliberately simple and bit-packed so it
//! can sweep thousands of random instances.

use crate::bits::BitSet;
use crate::{Error, Result};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// k sets of d-dimensional binary vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OVInstance {
    k: usize,
    d: usize,
    sets: Vec<Vec<BitSet>>,
}

impl OVInstance {
    pub fn new(k: usize, d: usize, sets: Vec<Vec<BitSet>>) -> Result<Self> {
        if k < 2 {
            return Err(Error::parameter("OV instance requires k >= 2"));
        }
        if d < 1 {
            return Err(Error::parameter("OV instance requires d >= 1"));
        }
        if sets.len() != k {
            return Err(Error::parameter(format!(
                "expected {k} sets, got {}",
                sets.len()
            )));
        }
        for set in &sets {
            for v in set {
                if v.len() != d {
                    return Err(Error::parameter(format!(
                        "vector has {} coordinates, expected {d}",
                        v.len()
                    )));
                }
            }
        }
        Ok(OVInstance { k, d, sets })
    }

    /// Builds an instance from rows of 0/1 coordinates.
    pub fn from_rows(k: usize, d: usize, rows: Vec<Vec<Vec<u8>>>) -> Result<Self> {
        let sets = rows
            .into_iter()
            .map(|set| {
                set.into_iter()
                    .map(|row| {
                        BitSet::from_indices(
                            d,
                            row.iter().enumerate().filter(|(_, &b)| b != 0).map(|(i, _)| i),
                        )
                    })
                    .collect()
            })
            .collect();
        OVInstance::new(k, d, sets)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn set(&self, i: usize) -> &[BitSet] {
        &self.sets[i]
    }

    pub fn set_sizes(&self) -> Vec<usize> {
        self.sets.iter().map(Vec::len).collect()
    }

    pub fn vector(&self, set: usize, idx: usize) -> &BitSet {
        &self.sets[set][idx]
    }

    /// Checks whether the chosen vectors have coordinate-wise product zero
    /// in every dimension.
    pub fn is_orthogonal(&self, witness: &[usize]) -> bool {
        debug_assert_eq!(witness.len(), self.k);
        let mut acc = BitSet::full(self.d);
        for (i, &j) in witness.iter().enumerate() {
            acc.intersect_with(&self.sets[i][j]);
        }
        acc.is_empty()
    }

    /// Parses the OV text format: line 1 `k d`, then for each set a line
    /// `n_i` followed by n_i lines of d characters from {0,1}.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty OV file".into()))?;
        let mut it = header.split_whitespace();
        let k: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad OV header: {header:?}")))?;
        let d: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad OV header: {header:?}")))?;
        let mut sets = Vec::with_capacity(k);
        for _ in 0..k {
            let count: usize = lines
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::Parse("missing set size line".into()))?;
            let mut set = Vec::with_capacity(count);
            for _ in 0..count {
                let row = lines
                    .next()
                    .ok_or_else(|| Error::Parse("missing vector line".into()))?;
                if row.len() != d || !row.bytes().all(|b| b == b'0' || b == b'1') {
                    return Err(Error::Parse(format!("bad vector line: {row:?}")));
                }
                set.push(BitSet::from_indices(
                    d,
                    row.bytes().enumerate().filter(|(_, b)| *b == b'1').map(|(i, _)| i),
                ));
            }
            sets.push(set);
        }
        OVInstance::new(k, d, sets)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.k, self.d);
        for set in &self.sets {
            out.push_str(&format!("{}\n", set.len()));
            for v in set {
                let line: String = (0..self.d)
                    .map(|t| if v.contains(t) { '1' } else { '0' })
                    .collect();
                out.push_str(&line);
                out.push('\n');
            }
        }
        out
    }
}

/// Lexicographically smallest tuple (one index per set) whose vectors are
/// orthogonal, or None.
pub fn solve_ov_bruteforce(inst: &OVInstance) -> Option<Vec<usize>> {
    let mut witness = vec![0usize; inst.k()];
    let full = BitSet::full(inst.d());
    fn rec(
        inst: &OVInstance,
        depth: usize,
        acc: &BitSet,
        witness: &mut Vec<usize>,
    ) -> bool {
        if depth == inst.k() {
            return acc.is_empty();
        }
        for (j, v) in inst.set(depth).iter().enumerate() {
            witness[depth] = j;
            let mut next = acc.clone();
            next.intersect_with(v);
            if rec(inst, depth + 1, &next, witness) {
                return true;
            }
        }
        false
    }
    if rec(inst, 0, &full, &mut witness) {
        Some(witness)
    } else {
        None
    }
}

/// Partitions each set into chunks of at most `sizes[i]` vectors and forms
/// the cross product of chunks. The original instance is a yes-instance iff
/// at least one sub-instance is.
pub fn split_for_unbalanced(inst: &OVInstance, sizes: &[usize]) -> Result<Vec<OVInstance>> {
    if sizes.len() != inst.k() {
        return Err(Error::parameter("one target size per set required"));
    }
    if sizes.iter().any(|&s| s == 0) {
        return Err(Error::parameter("target sizes must be >= 1"));
    }
    let chunked: Vec<Vec<Vec<BitSet>>> = (0..inst.k())
        .map(|i| {
            inst.set(i)
                .chunks(sizes[i])
                .map(|c| c.to_vec())
                .collect::<Vec<_>>()
        })
        .collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; inst.k()];
    loop {
        let sets: Vec<Vec<BitSet>> = choice
            .iter()
            .enumerate()
            .map(|(i, &c)| chunked[i][c].clone())
            .collect();
        out.push(OVInstance::new(inst.k(), inst.d(), sets)?);
        // mixed-radix increment over chunk indices
        let mut pos = inst.k();
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < chunked[pos].len() {
                break;
            }
            choice[pos] = 0;
        }
    }
}

/// Reproducible pseudo-random instance: each coordinate is 1 with
/// probability `one_density`.
pub fn random_instance(
    k: usize,
    n_per_set: &[usize],
    d: usize,
    one_density: f64,
    seed: u64,
) -> Result<OVInstance> {
    if !(0.0..=1.0).contains(&one_density) {
        return Err(Error::parameter("density must be in [0,1]"));
    }
    if n_per_set.len() != k {
        return Err(Error::parameter("one size per set required"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sets = n_per_set
        .iter()
        .map(|&n| {
            (0..n)
                .map(|_| {
                    BitSet::from_indices(
                        d,
                        (0..d).filter(|_| rng.gen_bool(one_density)),
                    )
                })
                .collect()
        })
        .collect();
    OVInstance::new(k, d, sets)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(k: usize, d: usize, rows: Vec<Vec<Vec<u8>>>) -> OVInstance {
        OVInstance::from_rows(k, d, rows).unwrap()
    }

    #[test]
    fn bruteforce_examples() {
        let i = inst(2, 2, vec![vec![vec![1, 0]], vec![vec![0, 1]]]);
        assert_eq!(solve_ov_bruteforce(&i), Some(vec![0, 0]));

        let i = inst(2, 1, vec![vec![vec![1]], vec![vec![1]]]);
        assert_eq!(solve_ov_bruteforce(&i), None);

        let i = inst(3, 2, vec![vec![vec![1, 1]]; 3]);
        assert_eq!(solve_ov_bruteforce(&i), None);
    }

    #[test]
    fn witness_revalidates() {
        for seed in 0..200 {
            let i = random_instance(3, &[3, 2, 3], 3, 0.5, seed).unwrap();
            if let Some(w) = solve_ov_bruteforce(&i) {
                assert!(i.is_orthogonal(&w));
            }
        }
    }

    #[test]
    fn split_examples() {
        let i = random_instance(2, &[4, 3], 3, 0.5, 9).unwrap();
        let whole = split_for_unbalanced(&i, &[4, 3]).unwrap();
        assert_eq!(whole, vec![i.clone()]);

        let halves = split_for_unbalanced(&i, &[2, 3]).unwrap();
        assert_eq!(halves.len(), 2);
        assert!(split_for_unbalanced(&i, &[0, 3]).is_err());
    }

    #[test]
    fn split_disjunction_property() {
        for seed in 0..150 {
            for k in [2usize, 3] {
                let sizes: Vec<usize> = vec![4, 6, 5][..k].to_vec();
                let i = random_instance(k, &sizes, 3, 0.55, seed).unwrap();
                let direct = solve_ov_bruteforce(&i).is_some();
                let targets: Vec<usize> = vec![2, 3, 2][..k].to_vec();
                let split = split_for_unbalanced(&i, &targets).unwrap();
                let any = split.iter().any(|s| solve_ov_bruteforce(s).is_some());
                assert_eq!(direct, any, "seed={seed} k={k}");
                if !direct {
                    assert!(split.iter().all(|s| solve_ov_bruteforce(s).is_none()));
                }
            }
        }
    }

    #[test]
    fn random_instance_contract() {
        let all_ones = random_instance(2, &[2, 2], 3, 1.0, 1).unwrap();
        assert_eq!(solve_ov_bruteforce(&all_ones), None);
        let all_zero = random_instance(2, &[2, 2], 3, 0.0, 1).unwrap();
        assert_eq!(solve_ov_bruteforce(&all_zero), Some(vec![0, 0]));
        let a = random_instance(3, &[4, 4, 4], 5, 0.3, 42).unwrap();
        let b = random_instance(3, &[4, 4, 4], 5, 0.3, 42).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn text_roundtrip() {
        let i = random_instance(3, &[2, 1, 3], 4, 0.4, 7).unwrap();
        let text = i.to_text();
        assert_eq!(OVInstance::parse(&text).unwrap(), i);
    }
}

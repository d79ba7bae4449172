//! Brute-force evaluators for basic properties
//! ∃ x_1 … x_k ∀ w : ℓ_1(x_1,w) ∨ … ∨ ℓ_k(x_k,w)
//! in the monochromatic, bichromatic and multichromatic settings. These are
//! the oracles certifying every reduction in [`crate::hardness`].

use crate::bits::BitSet;
use crate::graph::Graph;
use crate::{Error, Result};
use std::str::FromStr;

/// Sign pattern of the k literals: `true` is the positive literal E(x_i,w),
/// `false` the negated one. Parses from strings like "++-".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicProperty {
    signs: Vec<bool>,
}

impl BasicProperty {
    pub fn new(signs: Vec<bool>) -> Result<Self> {
        if signs.len() < 2 {
            return Err(Error::parameter("basic property requires arity >= 2"));
        }
        Ok(BasicProperty { signs })
    }

    pub fn arity(&self) -> usize {
        self.signs.len()
    }

    pub fn sign(&self, i: usize) -> bool {
        self.signs[i]
    }

    pub fn signs(&self) -> &[bool] {
        &self.signs
    }

    pub fn negative_count(&self) -> usize {
        self.signs.iter().filter(|&&s| !s).count()
    }

    /// The k-Dominating-Set pattern: all literals positive.
    pub fn all_positive(k: usize) -> Result<Self> {
        BasicProperty::new(vec![true; k])
    }
}

impl FromStr for BasicProperty {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let signs = s
            .chars()
            .map(|c| match c {
                '+' => Ok(true),
                '-' => Ok(false),
                _ => Err(Error::Parse(format!("bad sign character {c:?}"))),
            })
            .collect::<Result<Vec<bool>>>()?;
        BasicProperty::new(signs)
    }
}

impl std::fmt::Display for BasicProperty {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for &s in &self.signs {
            write!(f, "{}", if s { '+' } else { '-' })?;
        }
        Ok(())
    }
}

/// Diagonal convention for the edge predicate in the monochromatic setting.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reflexivity {
    Reflexive,
    Irreflexive,
}

/// Single-literal evaluation against an adjacency oracle.
pub fn literal_satisfied(
    prop: &BasicProperty,
    i: usize,
    edge: impl Fn(usize, usize) -> bool,
    x_i: usize,
    w: usize,
    reflexivity: Reflexivity,
) -> bool {
    let e = if x_i == w {
        reflexivity == Reflexivity::Reflexive
    } else {
        edge(x_i, w)
    };
    e == prop.sign(i)
}

/// Bipartite instance: choice domain X, universal domain Y, edges between
/// the sides only. Row x holds the Y-neighborhood of x.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BichromaticInstance {
    y_size: usize,
    adj: Vec<BitSet>,
}

impl BichromaticInstance {
    pub fn new(x_size: usize, y_size: usize) -> Self {
        BichromaticInstance {
            y_size,
            adj: vec![BitSet::new(y_size); x_size],
        }
    }

    pub fn x_size(&self) -> usize {
        self.adj.len()
    }

    pub fn y_size(&self) -> usize {
        self.y_size
    }

    pub fn add_edge(&mut self, x: usize, y: usize) {
        self.adj[x].insert(y);
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.adj[x].contains(y)
    }

    pub fn x_row(&self, x: usize) -> &BitSet {
        &self.adj[x]
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitSet::count).sum()
    }
}

/// Partitioned instance: one choice domain per part, universal domain W.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultichromaticInstance {
    w_size: usize,
    parts: Vec<Vec<BitSet>>,
}

impl MultichromaticInstance {
    pub fn new(part_sizes: &[usize], w_size: usize) -> Self {
        MultichromaticInstance {
            w_size,
            parts: part_sizes
                .iter()
                .map(|&s| vec![BitSet::new(w_size); s])
                .collect(),
        }
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn part_size(&self, i: usize) -> usize {
        self.parts[i].len()
    }

    pub fn w_size(&self) -> usize {
        self.w_size
    }

    pub fn add_edge(&mut self, part: usize, v: usize, w: usize) {
        self.parts[part][v].insert(w);
    }

    pub fn row(&self, part: usize, v: usize) -> &BitSet {
        &self.parts[part][v]
    }

    pub fn edge_count(&self) -> usize {
        self.parts
            .iter()
            .flat_map(|p| p.iter().map(BitSet::count))
            .sum()
    }
}

/// Per-vertex mask of universally-quantified elements satisfied by literal
/// i when x_i = v.
fn literal_mask(row: &BitSet, positive: bool) -> BitSet {
    if positive {
        row.clone()
    } else {
        row.complement()
    }
}

fn search_tuples(masks: &[Vec<BitSet>], distinct: bool, universe: usize) -> Option<Vec<usize>> {
    let k = masks.len();
    let full = BitSet::full(universe);
    let mut tuple = vec![0usize; k];
    fn rec(
        masks: &[Vec<BitSet>],
        depth: usize,
        acc: &BitSet,
        full: &BitSet,
        distinct: bool,
        tuple: &mut Vec<usize>,
    ) -> bool {
        if depth == masks.len() {
            return acc == full;
        }
        for v in 0..masks[depth].len() {
            if distinct && tuple[..depth].contains(&v) {
                continue;
            }
            tuple[depth] = v;
            let mut next = acc.clone();
            next.union_with(&masks[depth][v]);
            if rec(masks, depth + 1, &next, full, distinct, tuple) {
                return true;
            }
        }
        false
    }
    let start = BitSet::new(universe);
    rec(masks, 0, &start, &full, distinct, &mut tuple).then_some(tuple)
}

/// Lexicographically smallest pairwise-distinct tuple satisfying the
/// property on all of V, or None. `k > n` is a no-instance by convention.
pub fn brute_monochromatic(
    g: &Graph,
    prop: &BasicProperty,
    reflexivity: Reflexivity,
) -> Option<Vec<usize>> {
    let n = g.n();
    let k = prop.arity();
    if k > n {
        return None;
    }
    let masks: Vec<Vec<BitSet>> = (0..k)
        .map(|i| {
            (0..n)
                .map(|v| {
                    let mut row = g.neighborhood(v);
                    if reflexivity == Reflexivity::Reflexive {
                        row.insert(v);
                    }
                    literal_mask(&row, prop.sign(i))
                })
                .collect()
        })
        .collect();
    search_tuples(&masks, true, n)
}

/// As monochromatic, with X the choice domain and Y the ∀ domain. No
/// diagonal convention is involved because the sides are disjoint.
pub fn brute_bichromatic(
    bi: &BichromaticInstance,
    prop: &BasicProperty,
) -> Option<Vec<usize>> {
    let k = prop.arity();
    if k > bi.x_size() {
        return None;
    }
    let masks: Vec<Vec<BitSet>> = (0..k)
        .map(|i| {
            (0..bi.x_size())
                .map(|x| literal_mask(bi.x_row(x), prop.sign(i)))
                .collect()
        })
        .collect();
    search_tuples(&masks, true, bi.y_size())
}

/// One vertex per part; distinctness is automatic.
pub fn brute_multichromatic(
    mc: &MultichromaticInstance,
    prop: &BasicProperty,
) -> Result<Option<Vec<usize>>> {
    if prop.arity() != mc.k() {
        return Err(Error::parameter(format!(
            "property arity {} does not match {} parts",
            prop.arity(),
            mc.k()
        )));
    }
    let masks: Vec<Vec<BitSet>> = (0..mc.k())
        .map(|i| {
            (0..mc.part_size(i))
                .map(|v| literal_mask(mc.row(i, v), prop.sign(i)))
                .collect()
        })
        .collect();
    Ok(search_tuples(&masks, false, mc.w_size()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domset::brute_force_kdomset;
    use crate::graph::{complete, cycle, enumerate_all_graphs, star};

    #[test]
    fn property_parsing() {
        let p: BasicProperty = "++-".parse().unwrap();
        assert_eq!(p.arity(), 3);
        assert_eq!(p.negative_count(), 1);
        assert_eq!(p.to_string(), "++-");
        assert!("+x".parse::<BasicProperty>().is_err());
        assert!("+".parse::<BasicProperty>().is_err());
    }

    #[test]
    fn literal_examples() {
        let p = BasicProperty::all_positive(2).unwrap();
        let never = |_: usize, _: usize| false;
        assert!(literal_satisfied(&p, 0, never, 3, 3, Reflexivity::Reflexive));
        assert!(!literal_satisfied(&p, 0, never, 3, 3, Reflexivity::Irreflexive));
        let neg: BasicProperty = "-+".parse().unwrap();
        assert!(literal_satisfied(&neg, 0, never, 1, 2, Reflexivity::Irreflexive));
    }

    #[test]
    fn mono_examples() {
        let k3 = complete(3);
        let p = BasicProperty::all_positive(2).unwrap();
        assert_eq!(
            brute_monochromatic(&k3, &p, Reflexivity::Reflexive),
            Some(vec![0, 1])
        );

        // neighborhood containment: ∀w ¬E(v1,w) ∨ E(v2,w), i.e.
        // N(v1) ⊆ N(v2) in the irreflexive reading
        let contain: BasicProperty = "-+".parse().unwrap();
        let s = star(4);
        let w = brute_monochromatic(&s, &contain, Reflexivity::Irreflexive).unwrap();
        assert_eq!(w, vec![1, 2]);
        let c5 = cycle(5);
        assert_eq!(brute_monochromatic(&c5, &contain, Reflexivity::Irreflexive), None);
    }

    #[test]
    fn mono_all_positive_is_kdomset() {
        for g in enumerate_all_graphs(5) {
            for k in [2usize, 3] {
                let p = BasicProperty::all_positive(k).unwrap();
                let fop = brute_monochromatic(&g, &p, Reflexivity::Reflexive);
                let dom = brute_force_kdomset(&g, k).unwrap();
                assert_eq!(fop.is_some(), dom.is_some(), "{g:?} k={k}");
            }
        }
    }

    #[test]
    fn mono_distinctness_and_small_n() {
        let k1 = complete(1);
        let p = BasicProperty::all_positive(2).unwrap();
        assert_eq!(brute_monochromatic(&k1, &p, Reflexivity::Reflexive), None);

        let c4 = cycle(4);
        if let Some(t) = brute_monochromatic(&c4, &p, Reflexivity::Reflexive) {
            assert_ne!(t[0], t[1]);
        }
    }

    #[test]
    fn bichromatic_examples() {
        let p = BasicProperty::all_positive(2).unwrap();
        // empty Y: vacuous ∀
        let bi = BichromaticInstance::new(3, 0);
        assert_eq!(brute_bichromatic(&bi, &p), Some(vec![0, 1]));

        // biclique: any pair covers Y
        let mut biclique = BichromaticInstance::new(3, 2);
        for x in 0..3 {
            for y in 0..2 {
                biclique.add_edge(x, y);
            }
        }
        assert_eq!(brute_bichromatic(&biclique, &p), Some(vec![0, 1]));

        // no edges at all, positive pattern, nonempty Y
        let empty = BichromaticInstance::new(3, 2);
        assert_eq!(brute_bichromatic(&empty, &p), None);
        let negs: BasicProperty = "--".parse().unwrap();
        assert_eq!(brute_bichromatic(&empty, &negs), Some(vec![0, 1]));
    }

    #[test]
    fn multichromatic_examples() {
        let p = BasicProperty::all_positive(2).unwrap();
        let mc = MultichromaticInstance::new(&[2, 2], 0);
        assert_eq!(brute_multichromatic(&mc, &p).unwrap(), Some(vec![0, 0]));

        let mut mc = MultichromaticInstance::new(&[1, 1], 2);
        mc.add_edge(0, 0, 0);
        assert_eq!(brute_multichromatic(&mc, &p).unwrap(), None);
        mc.add_edge(1, 0, 1);
        assert_eq!(brute_multichromatic(&mc, &p).unwrap(), Some(vec![0, 0]));

        let wrong = BasicProperty::all_positive(3).unwrap();
        assert!(brute_multichromatic(&mc, &wrong).is_err());
    }
}

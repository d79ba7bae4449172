//! Hardness-instance generators: k-OV to sparse k-Dominating Set, k-OV to
//! distance-r domination, and the multichromatic → bichromatic →
//! monochromatic pipeline with its identifier and labeled gadgets. All
//! generators are pure and deterministic; the brute-force evaluators in
//! [`crate::fop`], [`crate::domset`] and [`crate::distance`] certify them.

use crate::fop::{BasicProperty, BichromaticInstance, MultichromaticInstance, Reflexivity};
use crate::graph::Graph;
use crate::ov::OVInstance;
use crate::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// k-OV → k-Dominating Set, for k ≥ 3. Vertices: one hub per set, one
/// vertex per vector, one per dimension. Hubs star their own vectors; all
/// vectors of the first k−1 sets are joined completely to the vectors of
/// set k; a vector connects to dimension t iff its t-th coordinate is 0.
/// The graph has a k-dominating set iff the OV instance has an orthogonal
/// tuple.
pub fn gen_domset_lb(inst: &OVInstance) -> Result<(Graph, Vec<String>)> {
    let k = inst.k();
    if k < 3 {
        return Err(Error::parameter("domset lower-bound generator requires k >= 3"));
    }
    let d = inst.d();
    let sizes = inst.set_sizes();
    if sizes.iter().any(|&s| s == 0) {
        return Err(Error::parameter("every vector set must be nonempty"));
    }
    // layout: hubs 0..k, then vectors set by set, then dimensions
    let mut vec_start = vec![0usize; k];
    let mut next = k;
    for i in 0..k {
        vec_start[i] = next;
        next += sizes[i];
    }
    let dim_start = next;
    let n = dim_start + d;

    let mut roles = vec![String::new(); n];
    let mut edges = Vec::new();
    for i in 0..k {
        roles[i] = format!("hub A_{}", i + 1);
        for j in 0..sizes[i] {
            let v = vec_start[i] + j;
            roles[v] = format!("vector a^{}_{}", i + 1, j + 1);
            edges.push((i, v));
            for t in 0..d {
                if !inst.vector(i, j).contains(t) {
                    edges.push((v, dim_start + t));
                }
            }
        }
    }
    for t in 0..d {
        roles[dim_start + t] = format!("dimension D_{}", t + 1);
    }
    for i in 0..k - 1 {
        for j in 0..sizes[i] {
            for j2 in 0..sizes[k - 1] {
                edges.push((vec_start[i] + j, vec_start[k - 1] + j2));
            }
        }
    }
    Ok((Graph::from_edge_list(n, &edges)?, roles))
}

/// k-OV → Distance-r k-Dominating Set, for k ≥ 2, r ≥ 2. Each set gets a
/// hub A_i joined to its vectors and a pendant hub A_i′ reached from A_i by
/// a path subdivided r−2 times; each dimension gets a D_t–D_t′ pair with an
/// equally subdivided path; a vector connects to D_t iff coordinate t is 0.
/// The balls B_r(A_i′) stay inside their own set gadget and B_r(D_t′)
/// reaches exactly the vectors with a zero in coordinate t, which forces
/// any distance-r dominating set to encode an orthogonal tuple.
pub fn gen_distance_lb(inst: &OVInstance, r: usize) -> Result<(Graph, Vec<String>)> {
    if r < 2 {
        return Err(Error::parameter("distance lower-bound generator requires r >= 2"));
    }
    let k = inst.k();
    let d = inst.d();
    let sizes = inst.set_sizes();
    if sizes.iter().any(|&s| s == 0) {
        return Err(Error::parameter("every vector set must be nonempty"));
    }
    let mut roles = Vec::new();
    let mut edges = Vec::new();
    // a subdivided u–v path with r−2 internal vertices
    let add_path = |u: usize, v: usize, edges: &mut Vec<(usize, usize)>, roles: &mut Vec<String>, tag: &str| {
        let mut prev = u;
        for s in 1..=r.saturating_sub(2) {
            let mid = roles.len();
            roles.push(format!("s_{s}({tag})"));
            edges.push((prev, mid));
            prev = mid;
        }
        edges.push((prev, v));
    };

    let mut vec_start = vec![0usize; k];
    let mut vectors_done = Vec::new();
    for i in 0..k {
        let a = roles.len();
        roles.push(format!("hub A_{}", i + 1));
        let a_prime = roles.len();
        roles.push(format!("hub A_{}'", i + 1));
        add_path(a, a_prime, &mut edges, &mut roles, &format!("A_{}", i + 1));
        vec_start[i] = roles.len();
        for j in 0..sizes[i] {
            roles.push(format!("vector a^{}_{}", i + 1, j + 1));
            edges.push((a, vec_start[i] + j));
        }
        vectors_done.push(vec_start[i]);
    }
    let mut dim_vertex = vec![0usize; d];
    for t in 0..d {
        let dt = roles.len();
        roles.push(format!("dimension D_{}", t + 1));
        let dt_prime = roles.len();
        roles.push(format!("dimension D_{}'", t + 1));
        add_path(dt, dt_prime, &mut edges, &mut roles, &format!("D_{}", t + 1));
        dim_vertex[t] = dt;
    }
    for i in 0..k {
        for j in 0..sizes[i] {
            for t in 0..d {
                if !inst.vector(i, j).contains(t) {
                    edges.push((vec_start[i] + j, dim_vertex[t]));
                }
            }
        }
    }
    let n = roles.len();
    Ok((Graph::from_edge_list(n, &edges)?, roles))
}

/// k-OV → Multichromatic Basic Problem: V_i = A_i, one w_t per dimension.
/// A vertex in a positive part connects to w_t iff its coordinate t is 0;
/// in a negative part iff the coordinate is 1.
pub fn gen_multichromatic(
    inst: &OVInstance,
    prop: &BasicProperty,
) -> Result<MultichromaticInstance> {
    if prop.arity() != inst.k() {
        return Err(Error::parameter(format!(
            "property arity {} does not match OV arity {}",
            prop.arity(),
            inst.k()
        )));
    }
    let sizes = inst.set_sizes();
    let mut mc = MultichromaticInstance::new(&sizes, inst.d());
    for i in 0..inst.k() {
        for j in 0..sizes[i] {
            for t in 0..inst.d() {
                let bit = inst.vector(i, j).contains(t);
                if bit != prop.sign(i) {
                    // positive vertices want a 0, negative vertices a 1
                    mc.add_edge(i, j, t);
                }
            }
        }
    }
    Ok(mc)
}

/// Every arity-2 and arity-3 sign pattern with at least one negative
/// literal — the patterns the pipeline reductions apply to.
pub fn multi_pipeline_patterns() -> Vec<String> {
    let mut out = Vec::new();
    for arity in [2usize, 3] {
        for mask in 0..1u32 << arity {
            if mask == 0 {
                continue; // all-positive has no negative literal
            }
            out.push(
                (0..arity)
                    .map(|i| if mask >> i & 1 == 1 { '-' } else { '+' })
                    .collect(),
            );
        }
    }
    out
}

/// Membership test (x, I, B) ∈ T for an identifier bitstring:
/// ∧_{s} ∨_{t} φ(x)[i_t^{(s)}] = b_t^{(s)}.
pub fn t_member(phi: &[bool], indices: &[Vec<usize>], bits: &[Vec<bool>]) -> bool {
    indices.iter().zip(bits).all(|(row_i, row_b)| {
        row_i
            .iter()
            .zip(row_b)
            .any(|(&i, &b)| phi[i] == b)
    })
}

/// Constructive separator: index/bit tuples such that the T-membership
/// formula holds for every `ids` bitstring and fails for every `outs`
/// bitstring. Row s is built against outs[s]: for each t, pick a bit where
/// ids[t] differs from outs[s] and demand ids[t]'s value there.
pub fn identifier_separator(
    ids: &[Vec<bool>],
    outs: &[Vec<bool>],
) -> Result<(Vec<Vec<usize>>, Vec<Vec<bool>>)> {
    if ids.len() != outs.len() || ids.is_empty() {
        return Err(Error::parameter("need k ids and k outs"));
    }
    let all: Vec<&Vec<bool>> = ids.iter().chain(outs).collect();
    let width = all[0].len();
    if all.iter().any(|v| v.len() != width) {
        return Err(Error::parameter("all bitstrings must have equal length"));
    }
    for (a, x) in all.iter().enumerate() {
        for y in &all[a + 1..] {
            if **x == **y {
                return Err(Error::parameter("bitstrings must be pairwise distinct"));
            }
        }
    }
    let k = ids.len();
    let mut indices = Vec::with_capacity(k);
    let mut bits = Vec::with_capacity(k);
    for y in outs {
        let mut row_i = Vec::with_capacity(k);
        let mut row_b = Vec::with_capacity(k);
        for x in ids {
            let pos = (0..width)
                .find(|&p| x[p] != y[p])
                .expect("distinct bitstrings differ somewhere");
            row_i.push(pos);
            row_b.push(x[pos]);
        }
        indices.push(row_i);
        bits.push(row_b);
    }
    Ok((indices, bits))
}

/// Number of vertices of the identifier gadget J_S:
/// ⌈log2 |S|⌉^{k²} · 2^{k²}, with the identifier width floored at 1.
pub fn identifier_gadget_size(s_len: usize, k: usize) -> usize {
    let width = identifier_width(s_len);
    width.pow((k * k) as u32) * (1usize << (k * k))
}

fn identifier_width(s_len: usize) -> usize {
    let mut w = 0;
    while (1usize << w) < s_len {
        w += 1;
    }
    w.max(1)
}

/// Position-in-S binary identifier of width ⌈log2 |S|⌉ (minimum 1).
fn identifier_of(rank: usize, width: usize) -> Vec<bool> {
    (0..width).map(|b| rank >> b & 1 == 1).collect()
}

/// A bichromatic instance extended by an identifier gadget.
pub struct GadgetAttachment {
    pub instance: BichromaticInstance,
    pub gadget_start: usize,
    pub gadget_size: usize,
}

/// Appends J_S = (index tuples) × (bit tuples) to Y and connects x ∈ S to
/// (I, B) iff (x, I, B) ∈ T. Vertices of X \ S receive no gadget edges.
pub fn attach_identifier_gadget(
    bi: &BichromaticInstance,
    s: &[usize],
    k: usize,
) -> Result<GadgetAttachment> {
    if s.is_empty() {
        return Err(Error::parameter("identifier gadget needs |S| >= 1"));
    }
    if k < 1 {
        return Err(Error::parameter("identifier gadget needs k >= 1"));
    }
    let width = identifier_width(s.len());
    let kk = k * k;
    let size = identifier_gadget_size(s.len(), k);
    let gadget_start = bi.y_size();

    let mut out = BichromaticInstance::new(bi.x_size(), bi.y_size() + size);
    for x in 0..bi.x_size() {
        for y in bi.x_row(x).iter() {
            out.add_edge(x, y);
        }
    }
    // enumerate all (I, B): kk index slots in [width], kk bit slots
    for code in 0..size {
        let mut rest = code;
        let mut flat_i = Vec::with_capacity(kk);
        for _ in 0..kk {
            flat_i.push(rest % width);
            rest /= width;
        }
        let flat_b: Vec<bool> = (0..kk).map(|t| rest >> t & 1 == 1).collect();
        let indices: Vec<Vec<usize>> = flat_i.chunks(k).map(<[usize]>::to_vec).collect();
        let bits: Vec<Vec<bool>> = flat_b.chunks(k).map(<[bool]>::to_vec).collect();
        for (rank, &x) in s.iter().enumerate() {
            if t_member(&identifier_of(rank, width), &indices, &bits) {
                out.add_edge(x, gadget_start + code);
            }
        }
    }
    Ok(GadgetAttachment {
        instance: out,
        gadget_start,
        gadget_size: size,
    })
}

/// Where the pieces of a pipeline bichromatic instance live.
#[derive(Clone, Debug)]
pub struct BichromaticLayout {
    pub part_start: Vec<usize>,
    pub part_size: Vec<usize>,
    pub w_size: usize,
    pub gadget_start: Vec<usize>,
    pub gadget_size: Vec<usize>,
}

/// Multichromatic → bichromatic: X = V_1 ∪ … ∪ V_k, Y = W plus one
/// identifier gadget J_{X \ V_i} per part; positive parts are additionally
/// joined completely to their excluded gadget.
pub fn multi_to_bichromatic(
    mc: &MultichromaticInstance,
    prop: &BasicProperty,
) -> Result<(BichromaticInstance, BichromaticLayout)> {
    if prop.arity() != mc.k() {
        return Err(Error::parameter("property arity does not match part count"));
    }
    let k = mc.k();
    let mut part_start = vec![0usize; k];
    let mut part_size = vec![0usize; k];
    let mut x_size = 0;
    for i in 0..k {
        part_start[i] = x_size;
        part_size[i] = mc.part_size(i);
        x_size += part_size[i];
    }
    let mut bi = BichromaticInstance::new(x_size, mc.w_size());
    for i in 0..k {
        for v in 0..part_size[i] {
            for w in mc.row(i, v).iter() {
                bi.add_edge(part_start[i] + v, w);
            }
        }
    }
    let mut gadget_start = Vec::with_capacity(k);
    let mut gadget_size = Vec::with_capacity(k);
    for i in 0..k {
        let mut s = Vec::new();
        for j in (0..k).filter(|&j| j != i) {
            s.extend(part_start[j]..part_start[j] + part_size[j]);
        }
        let attached = attach_identifier_gadget(&bi, &s, k)?;
        bi = attached.instance;
        gadget_start.push(attached.gadget_start);
        gadget_size.push(attached.gadget_size);
        if prop.sign(i) {
            for v in 0..part_size[i] {
                for g in 0..attached.gadget_size {
                    bi.add_edge(part_start[i] + v, attached.gadget_start + g);
                }
            }
        }
    }
    Ok((
        bi,
        BichromaticLayout {
            part_start,
            part_size,
            w_size: mc.w_size(),
            gadget_start,
            gadget_size,
        },
    ))
}

/// A graph whose vertices carry labels in 1..=n_labels, used as the
/// universal-side gadget of the bichromatic → monochromatic reduction.
#[derive(Clone, Debug)]
pub struct LabeledGadgetGraph {
    pub graph: Graph,
    pub labels: Vec<usize>,
    pub n_labels: usize,
}

impl LabeledGadgetGraph {
    /// A vertex with the given label, outside `adjacent_to` ∪
    /// `nonadjacent_to`, adjacent to everything in the former and to
    /// nothing in the latter.
    pub fn separator_witness(
        &self,
        adjacent_to: &[usize],
        nonadjacent_to: &[usize],
        label: usize,
    ) -> Option<usize> {
        (0..self.graph.n()).find(|&x| {
            self.labels[x] == label
                && !adjacent_to.contains(&x)
                && !nonadjacent_to.contains(&x)
                && adjacent_to.iter().all(|&a| self.graph.has_edge(x, a))
                && nonadjacent_to.iter().all(|&b| !self.graph.has_edge(x, b))
        })
    }

    /// Exhaustive check of the separator property for all choices of
    /// `k_in` distinct "in" vertices, `k_out` distinct "out" vertices
    /// (disjoint from the ins) and every label.
    pub fn verify_separator(&self, k_in: usize, k_out: usize) -> bool {
        let n = self.graph.n();
        let total = k_in + k_out;
        let mut chosen = Vec::with_capacity(total);
        self.verify_rec(&mut chosen, total, k_in, n)
    }

    fn verify_rec(&self, chosen: &mut Vec<usize>, total: usize, k_in: usize, n: usize) -> bool {
        if chosen.len() == total {
            let (ins, outs) = chosen.split_at(k_in);
            return (1..=self.n_labels)
                .all(|label| self.separator_witness(ins, outs, label).is_some());
        }
        for v in 0..n {
            if chosen.contains(&v) {
                continue;
            }
            chosen.push(v);
            let ok = self.verify_rec(chosen, total, k_in, n);
            chosen.pop();
            if !ok {
                return false;
            }
        }
        true
    }
}

fn is_prime(x: usize) -> bool {
    if x < 2 {
        return false;
    }
    let mut f = 2;
    while f * f <= x {
        if x % f == 0 {
            return false;
        }
        f += 1;
    }
    true
}

/// Parameters of the polynomial gadget, derivable without building it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PolynomialGadgetParams {
    pub p: usize,
    pub l: usize,
    pub degree: usize,
    pub r: usize,
    pub vertex_count: usize,
}

pub fn polynomial_gadget_params(n_labels: usize, k: usize) -> Result<PolynomialGadgetParams> {
    if n_labels < 1 || k < 1 {
        return Err(Error::parameter("polynomial gadget needs N >= 1 and k >= 1"));
    }
    // smallest prime p with p > k²(log2 N + k + 2), tested exactly as
    // 2^(p − k²(k+2)) > N^(k²)
    let kk = (k * k) as u32;
    let base = k * k * (k + 2);
    let n_pow = (n_labels as u128).checked_pow(kk).ok_or_else(|| {
        Error::ScaleGuard("label count too large for exact prime threshold".into())
    })?;
    let mut p = base + 1;
    loop {
        let exp = (p - base) as u32;
        let big_enough = exp >= 128 || (1u128 << exp) > n_pow;
        if big_enough && is_prime(p) {
            break;
        }
        p += 1;
    }
    // L = ⌈log_p N⌉: smallest L with p^L ≥ N
    let mut l = 0;
    let mut pl: u128 = 1;
    while pl < n_labels as u128 {
        pl *= p as u128;
        l += 1;
    }
    let degree = l + k;
    let r = l + degree * k + k + 1;
    let vertex_count = (p as u128)
        .checked_pow(degree as u32 + 1)
        .filter(|&v| v <= usize::MAX as u128)
        .ok_or_else(|| Error::ScaleGuard("polynomial gadget vertex count overflows".into()))?;
    Ok(PolynomialGadgetParams {
        p,
        l,
        degree,
        r,
        vertex_count: vertex_count as usize,
    })
}

pub const POLYNOMIAL_GADGET_DEFAULT_CAP: usize = 1_000_000;

/// The deterministic gadget of the monochromatic reduction: vertices are
/// all polynomials of degree ≤ d over F_p, labeled through their values at
/// 1..L (clamped to N), adjacent iff they agree at some point in (L, R].
pub fn polynomial_gadget(n_labels: usize, k: usize) -> Result<LabeledGadgetGraph> {
    polynomial_gadget_with_cap(n_labels, k, POLYNOMIAL_GADGET_DEFAULT_CAP)
}

pub fn polynomial_gadget_with_cap(
    n_labels: usize,
    k: usize,
    cap: usize,
) -> Result<LabeledGadgetGraph> {
    let params = polynomial_gadget_params(n_labels, k)?;
    if params.vertex_count > cap {
        return Err(Error::ScaleGuard(format!(
            "polynomial gadget would have {} vertices (cap {cap})",
            params.vertex_count
        )));
    }
    let (p, l, d, r) = (params.p, params.l, params.degree, params.r);
    // the points 1..=R stay pairwise distinct mod p (R may equal p, in
    // which case the window's last point is 0)
    assert!(p >= r, "evaluation window must fit inside F_p");
    let n = params.vertex_count;

    // evaluation table of every polynomial at 1..=R, Horner over F_p
    let eval = |coeffs: &[usize], x: usize| -> usize {
        coeffs.iter().rev().fold(0, |acc, &c| (acc * x + c) % p)
    };
    let mut labels = Vec::with_capacity(n);
    let mut window = Vec::with_capacity(n);
    let mut coeffs = vec![0usize; d + 1];
    for code in 0..n {
        let mut rest = code;
        for c in coeffs.iter_mut() {
            *c = rest % p;
            rest /= p;
        }
        // ψ: base-p little-endian value of (f(1), ..., f(L)), plus one
        let mut label = 0usize;
        for x in (1..=l).rev() {
            label = label * p + eval(&coeffs, x);
        }
        labels.push((label + 1).min(n_labels));
        window.push((l + 1..=r).map(|x| eval(&coeffs, x)).collect::<Vec<usize>>());
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if window[u].iter().zip(&window[v]).any(|(a, b)| a == b) {
                edges.push((u, v));
            }
        }
    }
    Ok(LabeledGadgetGraph {
        graph: Graph::from_edge_list(n, &edges)?,
        labels,
        n_labels,
    })
}

/// Stand-in gadget at brute-force-friendly size: a circulant graph with
/// round-robin labels, searched deterministically until an exhaustive
/// check confirms the property actually needed by the monochromatic
/// reduction — for every ≤ k signed constraint vertices and every label, a
/// fresh witness with the prescribed adjacencies exists. Verification
/// exploits translation invariance, so only tuples anchored at vertex 0
/// are checked.
pub fn circulant_standin(n_labels: usize, k: usize) -> Result<LabeledGadgetGraph> {
    if n_labels < 1 || !(1..=3).contains(&k) {
        return Err(Error::parameter("circulant stand-in supports 1 <= k <= 3"));
    }
    // class sizes to try, informed by the coupon-collector style failure
    // probability (1 − 2^{-k})^{class size} per signed tuple
    let class_sizes: &[usize] = match k {
        1 => &[8, 12, 16, 24],
        2 => &[40, 48, 56, 64, 80],
        _ => &[120, 140, 160, 200, 240],
    };
    for &c in class_sizes {
        let n = n_labels * c;
        for seed in 0..24u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64) << 20);
            let mut offsets = vec![false; n];
            for t in 1..=n / 2 {
                let bit = rng.gen_bool(0.5);
                offsets[t] = bit;
                offsets[n - t] = bit;
            }
            if circulant_property_holds(&offsets, n, n_labels, k) {
                let edges: Vec<(usize, usize)> = (0..n)
                    .flat_map(|u| {
                        let offsets = &offsets;
                        (u + 1..n).filter_map(move |v| offsets[v - u].then_some((u, v)))
                    })
                    .collect();
                return Ok(LabeledGadgetGraph {
                    graph: Graph::from_edge_list(n, &edges)?,
                    labels: (0..n).map(|v| v % n_labels + 1).collect(),
                    n_labels,
                });
            }
        }
    }
    Err(Error::ScaleGuard(format!(
        "no circulant stand-in found for N={n_labels}, k={k}"
    )))
}

/// Exhaustive check over all signed tuples of 1..=k distinct vertices
/// (first vertex pinned to 0 by translation invariance) and all labels.
fn circulant_property_holds(offsets: &[bool], n: usize, n_labels: usize, k: usize) -> bool {
    let mut tuple = vec![0usize];
    circulant_check_rec(offsets, n, n_labels, k, &mut tuple)
}

fn circulant_check_rec(
    offsets: &[bool],
    n: usize,
    n_labels: usize,
    k: usize,
    tuple: &mut Vec<usize>,
) -> bool {
    for signs in 0..1u32 << tuple.len() {
        for class in 0..n_labels {
            let found = (0..n).any(|j| {
                j % n_labels == class
                    && !tuple.contains(&j)
                    && tuple.iter().enumerate().all(|(s, &jt)| {
                        offsets[(n + j - jt) % n] == (signs >> s & 1 == 1)
                    })
            });
            if !found {
                return false;
            }
        }
    }
    if tuple.len() == k {
        return true;
    }
    let last = *tuple.last().unwrap();
    for j in last + 1..n {
        tuple.push(j);
        let ok = circulant_check_rec(offsets, n, n_labels, k, tuple);
        tuple.pop();
        if !ok {
            return false;
        }
    }
    true
}

/// A monochromatic instance produced by the pipeline: gadget vertices
/// first, then the X vertices, plus the diagonal convention the formula
/// must be evaluated under.
#[derive(Clone, Debug)]
pub struct MonochromaticInstance {
    pub graph: Graph,
    pub reflexivity: Reflexivity,
    pub h_count: usize,
    pub x_count: usize,
}

/// Bichromatic → monochromatic: keep H's internal edges, join x ∈ X to
/// h ∈ H iff x was joined to y_{λ(h)}, add no edges inside X. Requires a
/// gadget labeled by exactly |Y| labels and at least one negative literal
/// (two in the reflexive convention).
pub fn bi_to_monochromatic(
    bi: &BichromaticInstance,
    prop: &BasicProperty,
    h: &LabeledGadgetGraph,
    reflexivity: Reflexivity,
) -> Result<MonochromaticInstance> {
    let needed = match reflexivity {
        Reflexivity::Irreflexive => 1,
        Reflexivity::Reflexive => 2,
    };
    if prop.negative_count() < needed {
        return Err(Error::parameter(format!(
            "monochromatic reduction needs at least {needed} negative literal(s)"
        )));
    }
    if h.n_labels != bi.y_size() {
        return Err(Error::parameter(format!(
            "gadget has {} labels but Y has {} vertices",
            h.n_labels,
            bi.y_size()
        )));
    }
    let h_count = h.graph.n();
    let n = h_count + bi.x_size();
    let mut edges: Vec<(usize, usize)> = h.graph.edges().collect();
    for x in 0..bi.x_size() {
        for hv in 0..h_count {
            if bi.has_edge(x, h.labels[hv] - 1) {
                edges.push((h_count + x, hv));
            }
        }
    }
    Ok(MonochromaticInstance {
        graph: Graph::from_edge_list(n, &edges)?,
        reflexivity,
        h_count,
        x_count: bi.x_size(),
    })
}

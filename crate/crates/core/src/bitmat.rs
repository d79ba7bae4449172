//! Bit-packed boolean matrices with popcount products.
//!
//! These carry every matrix the algorithms touch: adjacency matrices and
//! their complements, the compressed matrices of the hashed max-entry
//! algorithm, and the boolean closure powers of the distance-r solver.
//! Products are word-packed cubic (AND + popcount per word); the second
//! operand is always supplied transposed so both sides stream row-major.

use crate::bits::BitSet;
use crate::graph::Graph;
use crate::{Error, Result};

const WORD_BITS: usize = 64;

#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    wpr: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let wpr = cols.div_ceil(WORD_BITS);
        BitMatrix {
            rows,
            cols,
            wpr,
            data: vec![0; rows * wpr],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BitMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i * self.wpr + j / WORD_BITS] >> (j % WORD_BITS) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        let w = &mut self.data[i * self.wpr + j / WORD_BITS];
        if value {
            *w |= 1 << (j % WORD_BITS);
        } else {
            *w &= !(1 << (j % WORD_BITS));
        }
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.wpr..(i + 1) * self.wpr]
    }

    fn row_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.wpr..(i + 1) * self.wpr]
    }

    pub fn row_popcount(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn row_is_zero(&self, i: usize) -> bool {
        self.row(i).iter().all(|&w| w == 0)
    }

    pub fn row_bits(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(i).iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * WORD_BITS + b)
                }
            })
        })
    }

    pub fn set_row(&mut self, i: usize, bits: &BitSet) {
        debug_assert_eq!(bits.len(), self.cols);
        self.row_mut(i).copy_from_slice(bits.words());
    }

    /// Bitwise negation with padding kept zero. An involution.
    pub fn complement(&self) -> BitMatrix {
        let mut out = self.clone();
        for w in &mut out.data {
            *w = !*w;
        }
        out.mask_padding();
        out
    }

    fn mask_padding(&mut self) {
        let rem = self.cols % WORD_BITS;
        if rem == 0 || self.wpr == 0 {
            return;
        }
        let mask = (1u64 << rem) - 1;
        for i in 0..self.rows {
            self.data[i * self.wpr + self.wpr - 1] &= mask;
        }
    }

    /// Boolean (OR/AND) r-th power of a square matrix with an all-ones
    /// diagonal, by repeated squaring. Entry (i,j) is set iff a walk of
    /// length at most r joins i and j.
    pub fn bool_closure_power(&self, r: usize) -> Result<BitMatrix> {
        if self.rows != self.cols {
            return Err(Error::parameter("bool_closure_power needs a square matrix"));
        }
        if r == 0 {
            return Err(Error::parameter("bool_closure_power requires r >= 1"));
        }
        let mut result = BitMatrix::identity(self.rows);
        let mut base = self.clone();
        let mut e = r;
        loop {
            if e & 1 == 1 {
                result = bool_mul(&result, &base);
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = bool_mul(&base, &base);
        }
        Ok(result)
    }
}

/// Boolean product of square row-major matrices: out[i] = OR of b.row(k)
/// over all k set in a.row(i).
fn bool_mul(a: &BitMatrix, b: &BitMatrix) -> BitMatrix {
    debug_assert_eq!(a.cols, b.rows);
    let mut out = BitMatrix::zeros(a.rows, b.cols);
    for i in 0..a.rows {
        let ks: Vec<usize> = a.row_bits(i).collect();
        let row = out.row_mut(i);
        for k in ks {
            for (o, w) in row.iter_mut().zip(b.row(k)) {
                *o |= w;
            }
        }
    }
    out
}

impl std::fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            for j in 0..self.cols {
                write!(f, "{}", self.get(i, j) as u8)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Integer-valued product of two 0/1 matrices; entries never exceed the
/// inner dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl CountMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }
}

/// Adjacency matrix of `g`; the diagonal is all ones iff `reflexive`.
pub fn adjacency_bitmatrix(g: &Graph, reflexive: bool) -> BitMatrix {
    let n = g.n();
    let mut m = BitMatrix::zeros(n, n);
    for v in 0..n {
        let row = if reflexive {
            g.closed_neighborhood(v)
        } else {
            g.neighborhood(v)
        };
        m.set_row(v, &row);
    }
    m
}

/// Integer product B·C with C supplied transposed:
/// entry (i,j) = popcount(row_i(B) AND row_j(C_T)).
pub fn count_product(b: &BitMatrix, c_t: &BitMatrix) -> Result<CountMatrix> {
    if b.cols != c_t.cols {
        return Err(Error::DimensionMismatch(format!(
            "count_product: B has {} columns, C_T has {}",
            b.cols, c_t.cols
        )));
    }
    let mut data = Vec::with_capacity(b.rows * c_t.rows);
    for i in 0..b.rows {
        let bi = b.row(i);
        for j in 0..c_t.rows {
            let count: u32 = bi
                .iter()
                .zip(c_t.row(j))
                .map(|(x, y)| (x & y).count_ones())
                .sum();
            data.push(count);
        }
    }
    Ok(CountMatrix {
        rows: b.rows,
        cols: c_t.rows,
        data,
    })
}

/// All pairs (i, j) with support(row_i(B)) ⊆ support(row_j(C_T)), i.e. with
/// row_i(B) AND NOT row_j(C_T) = 0. A zero row of B matches every j.
pub fn row_subset_pairs(b: &BitMatrix, c_t: &BitMatrix) -> Result<Vec<(usize, usize)>> {
    if b.cols != c_t.cols {
        return Err(Error::DimensionMismatch(format!(
            "row_subset_pairs: B has {} columns, C_T has {}",
            b.cols, c_t.cols
        )));
    }
    let mut pairs = Vec::new();
    for i in 0..b.rows {
        let bi = b.row(i);
        for j in 0..c_t.rows {
            if bi.iter().zip(c_t.row(j)).all(|(x, y)| x & !y == 0) {
                pairs.push((i, j));
            }
        }
    }
    Ok(pairs)
}

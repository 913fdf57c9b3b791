//! Exact row reduction over GF(2) and over GF(2^n).

use crate::field::{Field, FieldElement};

/// A dense bit-packed matrix over GF(2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    cols: usize,
    words: usize,
    rows: Vec<Vec<u64>>,
}

impl BitMatrix {
    pub fn new(cols: usize) -> Self {
        BitMatrix {
            cols,
            words: cols.div_ceil(64).max(1),
            rows: Vec::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    /// Appends a row given by the indices of its set columns.
    pub fn push_row_from<I: IntoIterator<Item = usize>>(&mut self, ones: I) {
        let mut row = vec![0u64; self.words];
        for c in ones {
            debug_assert!(c < self.cols);
            row[c / 64] ^= 1 << (c % 64);
        }
        self.rows.push(row);
    }

    #[inline]
    fn bit(row: &[u64], c: usize) -> bool {
        (row[c / 64] >> (c % 64)) & 1 == 1
    }

    /// Reduced row echelon form in place; returns pivot columns in ascending order.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows.len() {
                break;
            }
            let Some(p) = (r..self.rows.len()).find(|&i| Self::bit(&self.rows[i], c)) else {
                continue;
            };
            self.rows.swap(r, p);
            let pivot_row = self.rows[r].clone();
            for (i, row) in self.rows.iter_mut().enumerate() {
                if i != r && Self::bit(row, c) {
                    for (w, pw) in row.iter_mut().zip(&pivot_row) {
                        *w ^= pw;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        self.rows.truncate(r);
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// A basis of the right kernel `{v : M v = 0}`, one vector per free
    /// column in ascending order. Each vector is returned as its set columns.
    pub fn kernel(&self) -> Vec<Vec<usize>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![free];
            for (row, &p) in m.rows.iter().zip(&pivots) {
                if Self::bit(row, free) {
                    v.push(p);
                }
            }
            v.sort_unstable();
            basis.push(v);
        }
        basis
    }
}

/// Rank of a dense matrix over GF(2^n). Rows may be ragged only if empty.
pub fn field_rank(field: &Field, rows: &[Vec<FieldElement>]) -> usize {
    let mut m = rows.to_vec();
    field_rref(field, &mut m).len()
}

/// Reduced row echelon form over GF(2^n); returns pivot columns.
pub fn field_rref(field: &Field, m: &mut Vec<Vec<FieldElement>>) -> Vec<usize> {
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = field.inv(m[r][c]).expect("pivot is nonzero");
        for x in m[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c];
            for (x, &p) in row.iter_mut().zip(&pivot_row) {
                *x += field.mul(f, p);
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    pivots
}

/// One nonzero vector of the right kernel over GF(2^n), if any: the vector
/// attached to the lowest free column.
pub fn field_kernel_vector(
    field: &Field,
    rows: &[Vec<FieldElement>],
    cols: usize,
) -> Option<Vec<FieldElement>> {
    let mut m = rows.to_vec();
    let pivots = field_rref(field, &mut m);
    let free = (0..cols).find(|c| !pivots.contains(c))?;
    let mut v = vec![FieldElement::ZERO; cols];
    v[free] = FieldElement::ONE;
    for (row, &p) in m.iter().zip(&pivots) {
        // x_p + row[free] * 1 = 0 in characteristic 2
        v[p] = row[free];
    }
    Some(v)
}

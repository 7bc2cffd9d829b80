//! Exact linear algebra: dense rational matrices (small systems) and sparse
//! integer rank (boundary matrices).

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::lincomb::{Coeff, LinComb};

/// A dense matrix over `Q`, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    cols: usize,
    rows: Vec<Vec<Coeff>>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            cols,
            rows: vec![vec![Coeff::zero(); cols]; rows],
        }
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<Coeff>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Self { cols, rows }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| Coeff::from_integer(x.into())).collect())
                .collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Coeff] {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[Vec<Coeff>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &Coeff {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Coeff) {
        self.rows[i][j] = v;
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.nrows(), "dimension mismatch");
        let mut out = Matrix::zeros(self.nrows(), other.cols);
        for (i, row) in self.rows.iter().enumerate() {
            for (k, a) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.rows[k][j];
                    if !b.is_zero() {
                        out.rows[i][j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(Zero::is_zero))
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = m[r][c].recip();
            for x in m[r].iter_mut() {
                *x *= &inv;
            }
            let pivot_row = m[r].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x -= &f * p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == m.len() {
                break;
            }
        }
        m.truncate(r);
        (
            Matrix {
                cols: self.cols,
                rows: m,
            },
            pivots,
        )
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of `{v : M v = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Coeff>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Coeff::zero(); self.cols];
                v[f] = Coeff::one();
                for (row, &p) in r.rows.iter().zip(&pivots) {
                    v[p] = -row[f].clone();
                }
                v
            })
            .collect()
    }
}

/// Rank of the span of `vectors` (all of the same length).
pub fn span_rank(vectors: &[Vec<Coeff>]) -> usize {
    match vectors.first() {
        None => 0,
        Some(v) => Matrix::from_rows(v.len(), vectors.to_vec()).rank(),
    }
}

/// Whether two lists of vectors span the same subspace.
pub fn same_span(a: &[Vec<Coeff>], b: &[Vec<Coeff>]) -> bool {
    let ra = span_rank(a);
    let rb = span_rank(b);
    let mut both = a.to_vec();
    both.extend_from_slice(b);
    ra == rb && span_rank(&both) == ra
}

/// Dimension of the span of a family of linear combinations.
pub fn lincomb_rank<B: Ord + Clone + Hash>(family: &[LinComb<B>]) -> usize {
    let mut index: HashMap<B, usize> = HashMap::new();
    for v in family {
        for b in v.support() {
            let n = index.len();
            index.entry(b.clone()).or_insert(n);
        }
    }
    let mut rank = SparseRank::new();
    for v in family {
        let mut denom = BigInt::one();
        for (_, c) in v.iter() {
            denom = denom.lcm(c.denom());
        }
        let row = v
            .iter()
            .map(|(b, c)| {
                (
                    index[b],
                    (c * Coeff::from_integer(denom.clone())).to_integer(),
                )
            })
            .collect();
        rank.push_row(row);
    }
    rank.rank()
}

/// Incremental exact rank of a sparse integer matrix.
///
/// Rows are reduced against an echelon basis keyed by leading column, using
/// fraction-free elimination with content removal so entries stay small.
#[derive(Debug, Default)]
pub struct SparseRank {
    pivots: BTreeMap<usize, Vec<(usize, BigInt)>>,
}

fn make_primitive(row: &mut [(usize, BigInt)]) {
    let mut g = BigInt::zero();
    for (_, x) in row.iter() {
        g = g.gcd(x);
        if g.is_one() {
            break;
        }
    }
    if row.first().is_some_and(|(_, x)| x.is_negative()) {
        g = -g;
    }
    if !g.is_one() && !g.is_zero() {
        for (_, x) in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// `a·row - b·pivot` over sorted sparse rows, where the leading entries cancel.
fn combine(
    row: &[(usize, BigInt)],
    a: &BigInt,
    pivot: &[(usize, BigInt)],
    b: &BigInt,
) -> Vec<(usize, BigInt)> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
        let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
        if ci < cj {
            out.push((ci, a * &row[i].1));
            i += 1;
        } else if cj < ci {
            out.push((cj, -(b * &pivot[j].1)));
            j += 1;
        } else {
            let v = a * &row[i].1 - b * &pivot[j].1;
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl SparseRank {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a row given as `(column, value)` pairs in any order; duplicate
    /// columns are summed.
    pub fn push_row(&mut self, entries: Vec<(usize, BigInt)>) -> bool {
        let mut merged: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (c, v) in entries {
            *merged.entry(c).or_insert_with(BigInt::zero) += v;
        }
        let mut row: Vec<(usize, BigInt)> =
            merged.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        while let Some(lead) = row.first().map(|e| e.0) {
            let Some(pivot) = self.pivots.get(&lead) else {
                make_primitive(&mut row);
                self.pivots.insert(lead, row);
                return true;
            };
            let g = row[0].1.gcd(&pivot[0].1);
            let a = &pivot[0].1 / &g;
            let b = &row[0].1 / &g;
            row = combine(&row, &a, pivot, &b);
            make_primitive(&mut row);
        }
        false
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Exact rank of a sparse integer matrix given as rows.
pub fn sparse_rank<I>(rows: I) -> usize
where
    I: IntoIterator<Item = Vec<(usize, BigInt)>>,
{
    let mut r = SparseRank::new();
    for row in rows {
        r.push_row(row);
    }
    r.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(x: i64) -> Coeff {
        Coeff::from_integer(x.into())
    }

    #[test]
    fn rref_of_small_matrix() {
        let m = Matrix::from_i64_rows(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        let (r, pivots) = m.rref();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(r.row(0), &[q(1), q(0), q(1)]);
        assert_eq!(r.row(1), &[q(0), q(1), q(1)]);
        let ns = m.nullspace();
        assert_eq!(ns, vec![vec![q(-1), q(-1), q(1)]]);
    }

    #[test]
    fn same_span_detects_equal_and_unequal() {
        let a = vec![vec![q(1), q(0)], vec![q(0), q(1)]];
        let b = vec![vec![q(1), q(1)], vec![q(1), q(-1)]];
        assert!(same_span(&a, &b));
        assert!(!same_span(&a[..1], &b[..1]));
    }

    #[test]
    fn lincomb_rank_counts_independent_combinations() {
        let f = vec![
            LinComb::from_int_terms([("a", 1), ("b", 1)]),
            LinComb::from_int_terms([("b", 1), ("c", 1)]),
            LinComb::from_int_terms([("a", 1), ("c", -1)]),
        ];
        assert_eq!(lincomb_rank(&f), 2);
    }

    fn dense_to_sparse(m: &[Vec<i64>]) -> Vec<Vec<(usize, BigInt)>> {
        m.iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, &x)| x != 0)
                    .map(|(j, &x)| (j, BigInt::from(x)))
                    .collect()
            })
            .collect()
    }

    proptest! {
        #[test]
        fn sparse_rank_matches_dense_rank(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 6), 0..8)) {
            let dense = if rows.is_empty() { 0 } else { Matrix::from_i64_rows(&rows).rank() };
            prop_assert_eq!(sparse_rank(dense_to_sparse(&rows)), dense);
        }

        #[test]
        fn nullspace_vectors_are_killed(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 1..6)) {
            let m = Matrix::from_i64_rows(&rows);
            let ns = m.nullspace();
            prop_assert_eq!(ns.len() + m.rank(), 5);
            for v in ns {
                for r in m.rows() {
                    let dot: Coeff = r.iter().zip(&v).map(|(a, b)| a * b).sum();
                    prop_assert!(dot.is_zero());
                }
            }
        }
    }
}

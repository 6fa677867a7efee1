//! Sparse exact-rational matrices and fraction-free elimination.
//!
//! Matrices are stored column-major as sorted `(row, value)` lists. Rank and
//! kernel computations clear denominators row-wise and then eliminate over
//! arbitrary-precision integers, keeping every row primitive (content 1), so
//! no intermediate rounding can occur. Row scaling changes neither the rank
//! nor the null space, so the rational kernel is recovered exactly from the
//! integer echelon form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::symfunc::Q;

/// Column-major sparse matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ColMat {
    pub rows: usize,
    cols: Vec<Vec<(u32, Q)>>,
}

impl ColMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        ColMat {
            rows,
            cols: vec![Vec::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ColMat::zero(n, n);
        for i in 0..n {
            m.cols[i].push((i as u32, Q::one()));
        }
        m
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn col(&self, c: usize) -> &[(u32, Q)] {
        &self.cols[c]
    }

    /// Sets a whole column from unsorted entries; drops zeros, merges dups.
    pub fn set_col(&mut self, c: usize, mut entries: Vec<(u32, Q)>) {
        entries.sort_unstable_by_key(|e| e.0);
        let mut merged: Vec<(u32, Q)> = Vec::with_capacity(entries.len());
        for (r, v) in entries {
            debug_assert!((r as usize) < self.rows);
            match merged.last_mut() {
                Some((lr, lv)) if *lr == r => *lv += v,
                _ => merged.push((r, v)),
            }
        }
        merged.retain(|(_, v)| !v.is_zero());
        self.cols[c] = merged;
    }

    pub fn add_entry(&mut self, r: usize, c: usize, v: Q) {
        if v.is_zero() {
            return;
        }
        debug_assert!(r < self.rows && c < self.cols.len());
        let col = &mut self.cols[c];
        match col.binary_search_by_key(&(r as u32), |e| e.0) {
            Ok(k) => {
                col[k].1 += v;
                if col[k].1.is_zero() {
                    col.remove(k);
                }
            }
            Err(k) => col.insert(k, (r as u32, v)),
        }
    }

    pub fn get(&self, r: usize, c: usize) -> Q {
        match self.cols[c].binary_search_by_key(&(r as u32), |e| e.0) {
            Ok(k) => self.cols[c][k].1.clone(),
            Err(_) => Q::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    /// Matrix-vector product with a sparse column.
    pub fn apply(&self, x: &[(u32, Q)]) -> Vec<(u32, Q)> {
        let mut acc: std::collections::BTreeMap<u32, Q> = Default::default();
        for (c, xv) in x {
            for (r, av) in &self.cols[*c as usize] {
                let e = acc.entry(*r).or_insert_with(Q::zero);
                *e += av * xv;
            }
        }
        acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    }

    /// `self · other`.
    pub fn mul(&self, other: &ColMat) -> ColMat {
        assert_eq!(self.ncols(), other.rows);
        let mut out = ColMat::zero(self.rows, other.ncols());
        for c in 0..other.ncols() {
            out.cols[c] = self.apply(other.col(c));
        }
        out
    }

    pub fn scaled(&self, c: &Q) -> ColMat {
        if c.is_zero() {
            return ColMat::zero(self.rows, self.ncols());
        }
        ColMat {
            rows: self.rows,
            cols: self
                .cols
                .iter()
                .map(|col| col.iter().map(|(r, v)| (*r, v * c)).collect())
                .collect(),
        }
    }

    /// `self − other`.
    pub fn sub(&self, other: &ColMat) -> ColMat {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.ncols(), other.ncols());
        let mut out = self.clone();
        for c in 0..other.ncols() {
            for (r, v) in other.col(c) {
                out.add_entry(*r as usize, c, -v.clone());
            }
        }
        out
    }
}

/// Result of eliminating a matrix: rank, pivot/free column split, and a
/// reduced basis of the null space.
///
/// The kernel is `ncols × (ncols − rank)` with `kernel[free_cols[k]][k] = 1`
/// and the only other entries at pivot columns. Those unit rows let the
/// action of any operator on the kernel be read off without solving.
pub struct Elimination {
    pub rank: usize,
    pub pivot_cols: Vec<u32>,
    pub free_cols: Vec<u32>,
    pub kernel: ColMat,
}

/// Row of the integer working matrix, kept primitive.
type IRow = Vec<(u32, BigInt)>;

fn row_content(row: &IRow) -> BigInt {
    let mut g = BigInt::zero();
    for (_, v) in row {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    g
}

fn make_primitive(row: &mut IRow) {
    let g = row_content(row);
    if !g.is_one() && !g.is_zero() {
        for (_, v) in row.iter_mut() {
            *v /= &g;
        }
    }
}

/// `dst = a·dst − b·src`, merging sorted rows; result made primitive.
fn row_combine(dst: &IRow, src: &IRow, a: &BigInt, b: &BigInt) -> IRow {
    let mut out: IRow = Vec::with_capacity(dst.len() + src.len());
    let (mut i, mut j) = (0, 0);
    while i < dst.len() || j < src.len() {
        let next = match (dst.get(i), src.get(j)) {
            (Some((cd, vd)), Some((cs, vs))) => {
                if cd == cs {
                    let v = a * vd - b * vs;
                    i += 1;
                    j += 1;
                    (*cd, v)
                } else if cd < cs {
                    i += 1;
                    (*cd, a * vd)
                } else {
                    j += 1;
                    (*cs, -(b * vs))
                }
            }
            (Some((cd, vd)), None) => {
                i += 1;
                (*cd, a * vd)
            }
            (None, Some((cs, vs))) => {
                j += 1;
                (*cs, -(b * vs))
            }
            (None, None) => unreachable!(),
        };
        if !next.1.is_zero() {
            out.push(next);
        }
    }
    make_primitive(&mut out);
    out
}

fn row_get(row: &IRow, col: u32) -> Option<&BigInt> {
    row.binary_search_by_key(&col, |e| e.0).ok().map(|k| &row[k].1)
}

/// Gaussian elimination with the pivot column sweep fixed left-to-right
/// (so pivot columns are canonical) and pivot rows chosen by sparsity.
pub fn eliminate(mat: &ColMat) -> Elimination {
    let ncols = mat.ncols();

    // rows over BigInt, denominators cleared per row
    let mut rows: Vec<Vec<(u32, Q)>> = vec![Vec::new(); mat.rows];
    for c in 0..ncols {
        for (r, v) in mat.col(c) {
            rows[*r as usize].push((c as u32, v.clone()));
        }
    }
    let mut irows: Vec<IRow> = rows
        .into_iter()
        .map(|row| {
            let mut lcm = BigInt::one();
            for (_, v) in &row {
                lcm = lcm.lcm(v.denom());
            }
            let mut irow: IRow = row
                .into_iter()
                .map(|(c, v)| {
                    let scaled = v.numer() * (&lcm / v.denom());
                    (c, scaled)
                })
                .collect();
            make_primitive(&mut irow);
            irow
        })
        .filter(|r| !r.is_empty())
        .collect();

    let mut pivot_rows: Vec<IRow> = Vec::new();
    let mut pivot_cols: Vec<u32> = Vec::new();

    for c in 0..ncols as u32 {
        // candidate rows with a nonzero in column c; prefer the sparsest
        let mut best: Option<(usize, usize)> = None;
        for (k, row) in irows.iter().enumerate() {
            if row_get(row, c).is_some() {
                let score = row.len();
                if best.is_none_or(|(_, s)| score < s) {
                    best = Some((k, score));
                }
            }
        }
        let Some((k, _)) = best else { continue };
        let pivot_row = irows.swap_remove(k);
        let pv = row_get(&pivot_row, c).unwrap().clone();

        irows = irows
            .into_iter()
            .map(|row| match row_get(&row, c) {
                Some(v) => {
                    let g = pv.gcd(v);
                    row_combine(&row, &pivot_row, &(&pv / &g), &(v / &g))
                }
                None => row,
            })
            .filter(|r| !r.is_empty())
            .collect();

        pivot_rows.push(pivot_row);
        pivot_cols.push(c);
    }
    debug_assert!(irows.iter().all(|r| r.is_empty()));

    // back-eliminate so each pivot row meets no other pivot column
    for k in (0..pivot_rows.len()).rev() {
        let c = pivot_cols[k];
        let pivot_row = pivot_rows[k].clone();
        let pv = row_get(&pivot_row, c).unwrap().clone();
        for j in 0..k {
            if let Some(v) = row_get(&pivot_rows[j], c) {
                let g = pv.gcd(v);
                pivot_rows[j] = row_combine(&pivot_rows[j], &pivot_row, &(&pv / &g), &(v / &g));
            }
        }
    }

    let rank = pivot_cols.len();
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; ncols];
        for &c in &pivot_cols {
            v[c as usize] = true;
        }
        v
    };
    let free_cols: Vec<u32> = (0..ncols as u32).filter(|&c| !is_pivot[c as usize]).collect();

    // null space: unit at each free column, solved values at pivot columns
    let mut kernel = ColMat::zero(ncols, free_cols.len());
    for (kk, &fc) in free_cols.iter().enumerate() {
        let mut entries: Vec<(u32, Q)> = vec![(fc, Q::one())];
        for (pk, prow) in pivot_rows.iter().enumerate() {
            if let Some(v) = row_get(prow, fc) {
                let pv = row_get(prow, pivot_cols[pk]).unwrap();
                entries.push((pivot_cols[pk], -Q::new(v.clone(), pv.clone())));
            }
        }
        kernel.set_col(kk, entries);
    }

    Elimination {
        rank,
        pivot_cols,
        free_cols,
        kernel,
    }
}

pub fn rank(mat: &ColMat) -> usize {
    eliminate(mat).rank
}

//! Exact rational linear algebra: a dense nullspace routine with a fixed
//! pivot rule, and sparse elimination engines for the windowed solvers.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::scalar::{self, Scalar};

/// Exact basis of the right nullspace of a dense matrix, via
/// fraction-preserving Gauss-Jordan elimination. Deterministic: the pivot
/// for each column is the first row (in row-major order) with a nonzero
/// entry there.
pub fn rational_nullspace(matrix: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let rows = matrix.len();
    let cols = matrix.first().map(|r| r.len()).unwrap_or(0);
    let mut m: Vec<Vec<Scalar>> = matrix.to_vec();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut next_row = 0;

    for col in 0..cols {
        let Some(pivot_row) = (next_row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(next_row, pivot_row);
        let inv = m[next_row][col].clone();
        for c in col..cols {
            let v = m[next_row][c].clone() / &inv;
            m[next_row][c] = v;
        }
        for r in 0..rows {
            if r != next_row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..cols {
                    let delta = &m[next_row][c] * &factor;
                    let v = m[r][c].clone() - delta;
                    m[r][c] = v;
                }
            }
        }
        pivot_cols.push(col);
        next_row += 1;
        if next_row == rows {
            break;
        }
    }

    let mut basis = Vec::new();
    let mut is_pivot = vec![false; cols];
    for &c in &pivot_cols {
        is_pivot[c] = true;
    }
    for free in 0..cols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![scalar::zero(); cols];
        v[free] = scalar::one();
        for (row, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -m[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// A sparse vector: entries sorted by column, no zeros stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SparseVec {
    pub entries: Vec<(u32, Scalar)>,
}

impl SparseVec {
    pub fn from_entries(mut entries: Vec<(u32, Scalar)>) -> SparseVec {
        entries.sort_by_key(|e| e.0);
        let mut out: Vec<(u32, Scalar)> = Vec::with_capacity(entries.len());
        for (col, val) in entries {
            match out.last_mut() {
                Some((c, v)) if *c == col => *v += val,
                _ => out.push((col, val)),
            }
        }
        out.retain(|(_, v)| !v.is_zero());
        SparseVec { entries: out }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_col(&self) -> Option<(u32, &Scalar)> {
        self.entries.last().map(|(c, v)| (*c, v))
    }

    pub fn min_col(&self) -> Option<(u32, &Scalar)> {
        self.entries.first().map(|(c, v)| (*c, v))
    }

    pub fn get(&self, col: u32) -> Option<&Scalar> {
        self.entries
            .binary_search_by_key(&col, |e| e.0)
            .ok()
            .map(|i| &self.entries[i].1)
    }

    pub fn scale(&mut self, factor: &Scalar) {
        for (_, v) in &mut self.entries {
            *v *= factor;
        }
    }

    /// `self - factor * other`, merging sorted entry lists.
    pub fn sub_scaled(&self, other: &SparseVec, factor: &Scalar) -> SparseVec {
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut i, mut j) = (0, 0);
        while i < self.entries.len() || j < other.entries.len() {
            let take_self = match (self.entries.get(i), other.entries.get(j)) {
                (Some(a), Some(b)) => {
                    if a.0 == b.0 {
                        let v = &a.1 - &b.1 * factor;
                        if !v.is_zero() {
                            out.push((a.0, v));
                        }
                        i += 1;
                        j += 1;
                        continue;
                    }
                    a.0 < b.0
                }
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (None, None) => break,
            };
            if take_self {
                out.push(self.entries[i].clone());
                i += 1;
            } else {
                let (c, v) = &other.entries[j];
                let v = -(v * factor);
                if !v.is_zero() {
                    out.push((*c, v));
                }
                j += 1;
            }
        }
        SparseVec { entries: out }
    }
}

/// Streaming row-echelon form pivoting each row on its largest column.
/// With columns numbered so that window-boundary unknowns come last, the
/// recursive structure of graded constraints keeps rows short.
#[derive(Default)]
pub struct MaxColEchelon {
    /// pivot column -> row with that maximum column, pivot scaled to 1.
    rows: BTreeMap<u32, SparseVec>,
}

impl MaxColEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Fully reduces a row against the stored pivots, from its top column
    /// downward.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        while let Some((col, coeff)) = v.max_col() {
            match self.rows.get(&col) {
                Some(row) => {
                    let factor = coeff.clone();
                    v = v.sub_scaled(row, &factor);
                }
                None => break,
            }
        }
        v
    }

    /// Reduces and inserts; returns the new pivot column if the row was
    /// independent.
    pub fn insert(&mut self, v: SparseVec) -> Option<u32> {
        let mut v = self.reduce(v);
        let (col, lead) = v.max_col()?;
        let inv = scalar::one() / lead.clone();
        v.scale(&inv);
        self.rows.insert(col, v);
        Some(col)
    }

    pub fn has_pivot(&self, col: u32) -> bool {
        self.rows.contains_key(&col)
    }

    /// Canonical kernel basis: one vector per free column (ascending), with
    /// value 1 there and 0 at the other free columns. Pivot values follow
    /// by back-substitution in ascending pivot order (each stored row only
    /// references columns below its pivot).
    pub fn kernel_basis(&self, ncols: u32) -> Vec<Vec<Scalar>> {
        let mut basis = Vec::new();
        for free in 0..ncols {
            if self.has_pivot(free) {
                continue;
            }
            let mut v = vec![scalar::zero(); ncols as usize];
            v[free as usize] = scalar::one();
            for (&pc, row) in &self.rows {
                if pc < free {
                    continue;
                }
                let mut acc = scalar::zero();
                for (c, coeff) in &row.entries {
                    if *c == pc {
                        continue;
                    }
                    let val = &v[*c as usize];
                    if !val.is_zero() {
                        acc += coeff * val;
                    }
                }
                v[pc as usize] = -acc;
            }
            basis.push(v);
        }
        basis
    }
}

/// Small reduced-row-echelon accumulator with first-nonzero pivots, for
/// ranks, span comparisons and canonical quotient representatives.
#[derive(Clone, Default, Debug)]
pub struct Rref {
    /// pivot column -> fully reduced row with pivot 1, kept back-reduced.
    rows: BTreeMap<u32, SparseVec>,
}

impl Rref {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces a vector by the stored pivot rows.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        loop {
            let mut hit = None;
            for (c, coeff) in &v.entries {
                if let Some(row) = self.rows.get(c) {
                    hit = Some((coeff.clone(), row));
                    break;
                }
            }
            match hit {
                Some((factor, row)) => v = v.sub_scaled(row, &factor),
                None => return v,
            }
        }
    }

    /// Inserts a vector, keeping the set fully back-reduced.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let mut v = self.reduce(v);
        let Some((col, lead)) = v.min_col() else {
            return false;
        };
        let inv = scalar::one() / lead.clone();
        v.scale(&inv);
        let col = col;
        let existing: Vec<u32> = self.rows.keys().copied().collect();
        for pc in existing {
            let row = self.rows.get(&pc).unwrap();
            if let Some(coeff) = row.get(col).cloned() {
                let reduced = row.sub_scaled(&v, &coeff);
                self.rows.insert(pc, reduced);
            }
        }
        self.rows.insert(col, v);
        true
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.values()
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone()).is_zero()
    }
}

/// True when two vector families span the same subspace.
pub fn span_equal(a: &[SparseVec], b: &[SparseVec]) -> bool {
    let mut ra = Rref::new();
    for v in a {
        ra.insert(v.clone());
    }
    let mut rb = Rref::new();
    for v in b {
        rb.insert(v.clone());
    }
    if ra.rank() != rb.rank() {
        return false;
    }
    let equal = ra.rows().zip(rb.rows()).all(|(x, y)| x == y);
    equal
}

/// Exact matrix-vector product used by oracle tests.
pub fn mat_vec(matrix: &[Vec<Scalar>], v: &[Scalar]) -> Vec<Scalar> {
    matrix
        .iter()
        .map(|row| {
            let mut acc = scalar::zero();
            for (a, b) in row.iter().zip(v) {
                if !a.is_zero() && !b.is_zero() {
                    acc += a * b;
                }
            }
            acc
        })
        .collect()
}

pub fn dense_to_sparse(v: &[Scalar]) -> SparseVec {
    SparseVec {
        entries: v
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (i as u32, x.clone()))
            .collect(),
    }
}

fn is_one(s: &Scalar) -> bool {
    s.is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter().map(|r| r.iter().map(|&x| scalar::int(x)).collect()).collect()
    }

    #[test]
    fn identity_has_empty_nullspace() {
        let id = m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert!(rational_nullspace(&id).is_empty());
    }

    #[test]
    fn single_difference_row() {
        let row = m(&[&[1, -1]]);
        let basis = rational_nullspace(&row);
        assert_eq!(basis, vec![vec![scalar::one(), scalar::one()]]);
    }

    #[test]
    fn rank2_sample_verified_by_multiplication() {
        let a = m(&[&[1, 2, 3], &[2, 4, 7]]);
        let basis = rational_nullspace(&a);
        assert_eq!(basis.len(), 1);
        for v in &basis {
            assert!(mat_vec(&a, v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn max_col_echelon_kernel_matches_dense() {
        let a = m(&[&[1, 2, 3, 0], &[0, 1, 1, 1], &[1, 3, 4, 1]]);
        let mut ech = MaxColEchelon::new();
        for row in &a {
            ech.insert(dense_to_sparse(row));
        }
        let kernel = ech.kernel_basis(4);
        assert_eq!(kernel.len(), 4 - ech.rank());
        for v in &kernel {
            assert!(mat_vec(&a, v).iter().all(|x| x.is_zero()));
        }
        assert_eq!(kernel.len(), rational_nullspace(&a).len());
    }

    #[test]
    fn rref_is_canonical() {
        let mut r1 = Rref::new();
        r1.insert(dense_to_sparse(&m(&[&[1, 1, 0]])[0]));
        r1.insert(dense_to_sparse(&m(&[&[0, 1, 1]])[0]));
        let mut r2 = Rref::new();
        r2.insert(dense_to_sparse(&m(&[&[1, 2, 1]])[0]));
        r2.insert(dense_to_sparse(&m(&[&[0, 2, 2]])[0]));
        assert_eq!(r1.rank(), 2);
        let rows1: Vec<_> = r1.rows().cloned().collect();
        let rows2: Vec<_> = r2.rows().cloned().collect();
        assert_eq!(rows1, rows2);
        assert!(is_one(&rows1[0].entries[0].1));
    }

    #[test]
    fn span_comparison() {
        let a = vec![
            dense_to_sparse(&m(&[&[1, 0, 1]])[0]),
            dense_to_sparse(&m(&[&[0, 1, 1]])[0]),
        ];
        let b = vec![
            dense_to_sparse(&m(&[&[1, 1, 2]])[0]),
            dense_to_sparse(&m(&[&[1, -1, 0]])[0]),
        ];
        let c = vec![dense_to_sparse(&m(&[&[1, 1, 1]])[0])];
        assert!(span_equal(&a, &b));
        assert!(!span_equal(&a, &c));
    }
}

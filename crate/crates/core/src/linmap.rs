//! Exact dense linear maps and the echelon machinery behind kernels, ranks,
//! affine solving and quotients.
//!
//! A [`LinearMap`] is stored row-major; column `j` is the image of the `j`-th
//! basis vector of the domain. Pivoting always picks the first nonzero entry
//! in column order, which keeps every echelon form deterministic.

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl LinearMap {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        LinearMap {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a map from the images of the domain basis vectors.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let cols = columns.len();
        let mut m = Self::zeros(field, rows, cols);
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    /// Stacks maps with a common domain on top of each other.
    pub fn stack(parts: &[LinearMap]) -> Self {
        assert!(!parts.is_empty());
        let field = parts[0].field;
        let cols = parts[0].cols;
        let rows = parts.iter().map(|p| p.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for p in parts {
            assert_eq!(p.cols, cols, "stack: domain mismatch");
            data.extend(p.data.iter().cloned());
        }
        LinearMap {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn codomain_dim(&self) -> usize {
        self.rows
    }

    pub fn domain_dim(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "apply: dimension mismatch");
        let mut out = vec![self.field.zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for i in 0..self.rows {
                let m = self.get(i, j);
                if !m.is_zero() {
                    out[i] = out[i].add(&m.mul(x));
                }
            }
        }
        out
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        assert_eq!(self.cols, other.rows, "compose: dimension mismatch");
        let mut out = LinearMap::zeros(self.field, self.rows, other.cols);
        for j in 0..other.cols {
            let img = self.apply(&other.column(j));
            for (i, v) in img.into_iter().enumerate() {
                out.set(i, j, v);
            }
        }
        out
    }

    pub fn add(&self, other: &LinearMap) -> LinearMap {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.add(b))
            .collect();
        LinearMap {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &LinearMap) -> LinearMap {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.sub(b))
            .collect();
        LinearMap {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Kronecker product; acts on the row-major tensor product of the domains.
    pub fn kron(&self, other: &LinearMap) -> LinearMap {
        let mut out = LinearMap::zeros(
            self.field,
            self.rows * other.rows,
            self.cols * other.cols,
        );
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.get(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..other.rows {
                    for j2 in 0..other.cols {
                        let b = other.get(i2, j2);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(i1 * other.rows + i2, j1 * other.cols + j2, a.mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.to_rows();
        rref(&mut rows).len()
    }

    /// Echelonized basis of the null space; empty iff the map is injective.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let mut rows = self.to_rows();
        let pivots = rref(&mut rows);
        kernel_from_rref(self.field, self.cols, &rows, &pivots)
    }

    /// One particular solution of `self * x = target` plus the kernel
    /// dimension, or `None` when the system is inconsistent. Free variables
    /// of the echelon form are set to zero, so the answer is deterministic.
    pub fn solve_affine(&self, target: &[Scalar]) -> Option<AffineSolution> {
        assert_eq!(target.len(), self.rows, "solve_affine: target dimension");
        let mut rows: Vec<Vec<Scalar>> = (0..self.rows)
            .map(|i| {
                let mut r: Vec<Scalar> =
                    (0..self.cols).map(|j| self.get(i, j).clone()).collect();
                r.push(target[i].clone());
                r
            })
            .collect();
        let pivots = rref(&mut rows);
        // A pivot in the augmented column marks an inconsistent system.
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut solution = vec![self.field.zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            solution[p] = rows[r][self.cols].clone();
        }
        let kernel_dim = self.cols - pivots.len();
        Some(AffineSolution {
            solution,
            kernel_dim,
        })
    }

    /// Inverse of a square map, or an error naming the context.
    pub fn inverse(&self, context: &'static str) -> Result<LinearMap> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                context,
                expected: self.rows,
                got: self.cols,
            });
        }
        let n = self.rows;
        let mut rows: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                let mut r: Vec<Scalar> = (0..n).map(|j| self.get(i, j).clone()).collect();
                for k in 0..n {
                    r.push(if k == i {
                        self.field.one()
                    } else {
                        self.field.zero()
                    });
                }
                r
            })
            .collect();
        let pivots = rref(&mut rows);
        if pivots.iter().filter(|&&p| p < n).count() != n {
            return Err(Error::Singular(context));
        }
        let mut out = LinearMap::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, rows[i][n + j].clone());
            }
        }
        Ok(out)
    }

    fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).clone()).collect())
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSolution {
    pub solution: Vec<Scalar>,
    pub kernel_dim: usize,
}

/// In-place reduced row echelon form. Returns the pivot columns in order.
pub fn rref(rows: &mut Vec<Vec<Scalar>>) -> Vec<usize> {
    let nrows = rows.len();
    if nrows == 0 {
        return vec![];
    }
    let ncols = rows[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(pr) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = x.mul(&inv);
        }
        for i in 0..nrows {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                for j in 0..ncols {
                    let s = rows[r][j].mul(&factor);
                    rows[i][j] = rows[i][j].sub(&s);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Kernel basis from an RREF: one echelonized vector per free column.
pub fn kernel_from_rref(
    field: Field,
    ncols: usize,
    rows: &[Vec<Scalar>],
    pivots: &[usize],
) -> Vec<Vec<Scalar>> {
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![field.zero(); ncols];
        v[free] = field.one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = rows[r][free].neg();
        }
        basis.push(v);
    }
    basis
}

/// A subspace presented by an echelonized kernel-style basis: basis vector
/// `j` has coordinate 1 at its own free column and 0 at the other free
/// columns, so coordinates in the basis can be read off directly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    free: Vec<usize>,
}

impl Subspace {
    /// Null space of a map, echelonized.
    pub fn kernel_of(m: &LinearMap) -> Subspace {
        let mut rows = m.to_rows();
        let pivots = rref(&mut rows);
        let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
        let basis = kernel_from_rref(m.field, m.cols, &rows, &pivots);
        Subspace {
            field: m.field,
            ambient: m.cols,
            basis,
            free,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    /// Coordinates of `w` in the basis, or `None` when `w` is outside.
    pub fn coords_of(&self, w: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(w.len(), self.ambient);
        let coords: Vec<Scalar> = self.free.iter().map(|&c| w[c].clone()).collect();
        let mut rebuilt = vec![self.field.zero(); self.ambient];
        for (c, b) in coords.iter().zip(&self.basis) {
            for (k, v) in b.iter().enumerate() {
                rebuilt[k] = rebuilt[k].add(&v.mul(c));
            }
        }
        (rebuilt == w).then_some(coords)
    }

    pub fn contains(&self, w: &[Scalar]) -> bool {
        self.coords_of(w).is_some()
    }

    /// Embedding of the subspace into the ambient space.
    pub fn section_map(&self) -> LinearMap {
        LinearMap::from_columns(self.field, self.ambient, &self.basis)
    }
}

/// Rank of a set of vectors (the row space dimension).
pub fn span_rank(field: Field, vectors: &[Vec<Scalar>], ambient: usize) -> usize {
    let mut rows: Vec<Vec<Scalar>> = vectors.to_vec();
    for v in &rows {
        assert_eq!(v.len(), ambient, "span_rank: vector length");
    }
    if rows.is_empty() {
        return 0;
    }
    let _ = field;
    rref(&mut rows).len()
}

/// Whether `v` lies in the span of `basis` (vectors of equal length).
pub fn in_span(basis: &[Vec<Scalar>], v: &[Scalar]) -> bool {
    if v.iter().all(Scalar::is_zero) {
        return true;
    }
    let mut rows: Vec<Vec<Scalar>> = basis.to_vec();
    let before = rref(&mut rows).len();
    rows.push(v.to_vec());
    let after = rref(&mut rows).len();
    before == after
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> Scalar {
        Field::Rational.integer(n)
    }

    fn map(rows: usize, cols: usize, entries: &[i64]) -> LinearMap {
        assert_eq!(entries.len(), rows * cols);
        let mut m = LinearMap::zeros(Field::Rational, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, q(entries[i * cols + j]));
            }
        }
        m
    }

    #[test]
    fn kernels() {
        assert!(LinearMap::identity(Field::Rational, 2).kernel().is_empty());
        assert_eq!(LinearMap::zeros(Field::Rational, 2, 2).kernel().len(), 2);
        // h ↦ ht - ε(h)t stacked over the group algebra of Z/2 has kernel 1+g.
        let stacked = map(4, 2, &[0, 0, 0, 0, -1, 1, 1, -1]);
        let k = stacked.kernel();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![q(1), q(1)]);
    }

    #[test]
    fn solve() {
        let id = LinearMap::identity(Field::Rational, 2);
        let sol = id.solve_affine(&[q(3), q(4)]).unwrap();
        assert_eq!(sol.solution, vec![q(3), q(4)]);
        assert_eq!(sol.kernel_dim, 0);

        // Inconsistent system.
        let m = map(2, 1, &[1, 1]);
        assert!(m.solve_affine(&[q(1), q(2)]).is_none());

        // 2a = 1 over the rationals.
        let m = map(1, 1, &[2]);
        let sol = m.solve_affine(&[q(1)]).unwrap();
        assert_eq!(sol.solution, vec![Field::Rational.parse("1/2").unwrap()]);
    }

    #[test]
    fn inverse_round_trip() {
        let m = map(2, 2, &[1, 1, 0, 1]);
        let inv = m.inverse("test").unwrap();
        assert_eq!(m.compose(&inv), LinearMap::identity(Field::Rational, 2));
        assert_eq!(inv.compose(&m), LinearMap::identity(Field::Rational, 2));
        assert!(map(2, 2, &[1, 1, 1, 1]).inverse("test").is_err());
    }

    #[test]
    fn kron_shapes() {
        let a = map(2, 2, &[1, 2, 3, 4]);
        let b = LinearMap::identity(Field::Rational, 3);
        let k = a.kron(&b);
        assert_eq!(k.codomain_dim(), 6);
        assert_eq!(*k.get(0, 3), q(2));
        assert_eq!(*k.get(4, 1), q(3));
    }

    proptest! {
        // Exact rank-nullity on random small rational maps.
        #[test]
        fn rank_nullity(entries in proptest::collection::vec(-5i64..5, 12)) {
            let m = map(3, 4, &entries);
            prop_assert_eq!(m.rank() + m.kernel().len(), m.domain_dim());
        }

        // Every kernel vector is annihilated.
        #[test]
        fn kernel_annihilated(entries in proptest::collection::vec(-4i64..4, 12)) {
            let m = map(4, 3, &entries);
            for v in m.kernel() {
                prop_assert!(m.apply(&v).iter().all(Scalar::is_zero));
            }
        }
    }
}

//! Dense coordinate tensors over a fixed ordered basis.
//!
//! A rank-`k` tensor holds the coordinates of an element of a `k`-fold tensor
//! product (for instance `H⊗H⊗H`, or a mixed product like `A⊗H`) in the
//! product basis. Leg addressing is row-major: the flat index of
//! `(i_1, …, i_k)` is `((i_1·d_2 + i_2)·d_3 + i_3)…`, the first leg varying
//! slowest. All files and golden values use this layout.

use crate::error::{Error, Result};
use crate::linmap::LinearMap;
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor {
    field: Field,
    dims: Vec<usize>,
    coords: Vec<Scalar>,
}

impl Tensor {
    pub fn zeros(field: Field, dims: &[usize]) -> Self {
        let len = dims.iter().product();
        Tensor {
            field,
            dims: dims.to_vec(),
            coords: vec![field.zero(); len],
        }
    }

    pub fn from_coords(field: Field, dims: &[usize], coords: Vec<Scalar>) -> Result<Self> {
        let len: usize = dims.iter().product();
        if coords.len() != len {
            return Err(Error::DimensionMismatch {
                context: "tensor coordinates",
                expected: len,
                got: coords.len(),
            });
        }
        Ok(Tensor {
            field,
            dims: dims.to_vec(),
            coords,
        })
    }

    /// Rank-1 tensor from a coordinate vector.
    pub fn from_vector(field: Field, v: &[Scalar]) -> Self {
        Tensor {
            field,
            dims: vec![v.len()],
            coords: v.to_vec(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rank(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn flat_index(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.dims.len());
        let mut flat = 0;
        for (i, d) in idx.iter().zip(&self.dims) {
            debug_assert!(i < d);
            flat = flat * d + i;
        }
        flat
    }

    pub fn unflatten(&self, mut flat: usize) -> Vec<usize> {
        let mut idx = vec![0; self.dims.len()];
        for k in (0..self.dims.len()).rev() {
            idx[k] = flat % self.dims[k];
            flat /= self.dims[k];
        }
        idx
    }

    pub fn get(&self, idx: &[usize]) -> &Scalar {
        &self.coords[self.flat_index(idx)]
    }

    pub fn set(&mut self, idx: &[usize], v: Scalar) {
        let f = self.flat_index(idx);
        self.coords[f] = v;
    }

    pub fn add_at(&mut self, flat: usize, v: &Scalar) {
        if !v.is_zero() {
            self.coords[flat] = self.coords[flat].add(v);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.dims, other.dims, "tensor add: shape mismatch");
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.add(b))
            .collect();
        Tensor {
            field: self.field,
            dims: self.dims.clone(),
            coords,
        }
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.dims, other.dims, "tensor sub: shape mismatch");
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.sub(b))
            .collect();
        Tensor {
            field: self.field,
            dims: self.dims.clone(),
            coords,
        }
    }

    pub fn scale(&self, c: &Scalar) -> Tensor {
        let coords = self.coords.iter().map(|a| a.mul(c)).collect();
        Tensor {
            field: self.field,
            dims: self.dims.clone(),
            coords,
        }
    }

    /// Outer (tensor) product: legs of `self` followed by legs of `other`.
    pub fn outer(&self, other: &Tensor) -> Tensor {
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        let mut coords = Vec::with_capacity(self.coords.len() * other.coords.len());
        for a in &self.coords {
            for b in &other.coords {
                coords.push(a.mul(b));
            }
        }
        Tensor {
            field: self.field,
            dims,
            coords,
        }
    }

    /// Nonzero entries as `(multi_index, scalar)` pairs in row-major order.
    pub fn iter_sparse(&self) -> impl Iterator<Item = (Vec<usize>, &Scalar)> + '_ {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(f, c)| (self.unflatten(f), c))
    }

    /// Maps one leg through a linear map; the leg keeps its position and its
    /// dimension becomes the codomain dimension. Rank is preserved; use
    /// [`Tensor::squeeze_leg`] to drop a leg a counit has collapsed.
    pub fn contract_leg(&self, leg: usize, m: &LinearMap) -> Result<Tensor> {
        if leg >= self.dims.len() {
            return Err(Error::LegOutOfRange {
                leg,
                rank: self.dims.len(),
            });
        }
        if m.domain_dim() != self.dims[leg] {
            return Err(Error::DimensionMismatch {
                context: "contract_leg",
                expected: self.dims[leg],
                got: m.domain_dim(),
            });
        }
        let mut dims = self.dims.clone();
        dims[leg] = m.codomain_dim();
        let mut out = Tensor::zeros(self.field, &dims);
        let outer: usize = self.dims[..leg].iter().product();
        let inner: usize = self.dims[leg + 1..].iter().product();
        let d_old = self.dims[leg];
        let d_new = m.codomain_dim();
        for o in 0..outer {
            for j in 0..d_old {
                for i in 0..inner {
                    let src = &self.coords[(o * d_old + j) * inner + i];
                    if src.is_zero() {
                        continue;
                    }
                    for r in 0..d_new {
                        let c = m.get(r, j);
                        if !c.is_zero() {
                            out.coords[(o * d_new + r) * inner + i] =
                                out.coords[(o * d_new + r) * inner + i].add(&c.mul(src));
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Reinterprets one leg of dimension `∏ parts` as several legs. Row-major
    /// addressing makes this a relabeling, not a data movement.
    pub fn split_leg(&self, leg: usize, parts: &[usize]) -> Result<Tensor> {
        if leg >= self.dims.len() {
            return Err(Error::LegOutOfRange {
                leg,
                rank: self.dims.len(),
            });
        }
        let prod: usize = parts.iter().product();
        if prod != self.dims[leg] {
            return Err(Error::DimensionMismatch {
                context: "split_leg",
                expected: self.dims[leg],
                got: prod,
            });
        }
        let mut dims = self.dims[..leg].to_vec();
        dims.extend_from_slice(parts);
        dims.extend_from_slice(&self.dims[leg + 1..]);
        Ok(Tensor {
            field: self.field,
            dims,
            coords: self.coords.clone(),
        })
    }

    /// Merges consecutive legs `[leg, leg+count)` into one.
    pub fn merge_legs(&self, leg: usize, count: usize) -> Tensor {
        assert!(leg + count <= self.dims.len());
        let merged: usize = self.dims[leg..leg + count].iter().product();
        let mut dims = self.dims[..leg].to_vec();
        dims.push(merged);
        dims.extend_from_slice(&self.dims[leg + count..]);
        Tensor {
            field: self.field,
            dims,
            coords: self.coords.clone(),
        }
    }

    /// Removes a leg of dimension 1.
    pub fn squeeze_leg(&self, leg: usize) -> Result<Tensor> {
        if leg >= self.dims.len() {
            return Err(Error::LegOutOfRange {
                leg,
                rank: self.dims.len(),
            });
        }
        if self.dims[leg] != 1 {
            return Err(Error::DimensionMismatch {
                context: "squeeze_leg",
                expected: 1,
                got: self.dims[leg],
            });
        }
        let mut dims = self.dims.clone();
        dims.remove(leg);
        Ok(Tensor {
            field: self.field,
            dims,
            coords: self.coords.clone(),
        })
    }

    /// Reorders legs: leg `i` of the result is leg `perm[i]` of the input,
    /// so `(·)^{321}` on a rank-3 tensor is `permute(&[2, 1, 0])`.
    pub fn permute(&self, perm: &[usize]) -> Tensor {
        assert_eq!(perm.len(), self.dims.len(), "permute: arity");
        let dims: Vec<usize> = perm.iter().map(|&p| self.dims[p]).collect();
        let mut out = Tensor::zeros(self.field, &dims);
        for (idx, c) in self.iter_sparse() {
            let new_idx: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
            let f = out.flat_index(&new_idx);
            out.coords[f] = c.clone();
        }
        out
    }

    /// Swaps the two legs of a rank-2 tensor.
    pub fn swap21(&self) -> Tensor {
        assert_eq!(self.rank(), 2, "swap21 expects rank 2");
        self.permute(&[1, 0])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        Field::Rational.integer(n)
    }

    fn t(dims: &[usize], entries: &[i64]) -> Tensor {
        Tensor::from_coords(
            Field::Rational,
            dims,
            entries.iter().map(|&n| q(n)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn row_major_addressing() {
        let x = t(&[2, 3], &[0, 1, 2, 3, 4, 5]);
        assert_eq!(*x.get(&[1, 2]), q(5));
        assert_eq!(x.flat_index(&[1, 0]), 3);
        assert_eq!(x.unflatten(4), vec![1, 1]);
    }

    #[test]
    fn identity_contraction_is_identity() {
        let x = t(&[2, 2], &[1, 2, 3, 4]);
        let id = LinearMap::identity(Field::Rational, 2);
        assert_eq!(x.contract_leg(0, &id).unwrap(), x);
        assert_eq!(x.contract_leg(1, &id).unwrap(), x);
        assert!(matches!(
            x.contract_leg(2, &id),
            Err(Error::LegOutOfRange { .. })
        ));
    }

    #[test]
    fn counit_collapse_and_squeeze() {
        // ε of the group algebra of Z/2 applied to leg 2 of 1⊗g.
        let one_g = t(&[2, 2], &[0, 1, 0, 0]);
        let mut eps = LinearMap::zeros(Field::Rational, 1, 2);
        eps.set(0, 0, q(1));
        eps.set(0, 1, q(1));
        let collapsed = one_g.contract_leg(1, &eps).unwrap();
        assert_eq!(collapsed.dims(), &[2, 1]);
        let squeezed = collapsed.squeeze_leg(1).unwrap();
        assert_eq!(squeezed, t(&[2], &[1, 0]));
    }

    #[test]
    fn comultiplication_splits_a_leg() {
        // Δ(g) = g⊗g on the group algebra of Z/2, applied to leg 1 of g⊗1.
        let g_one = t(&[2, 2], &[0, 0, 1, 0]);
        let mut comul = LinearMap::zeros(Field::Rational, 4, 2);
        comul.set(0, 0, q(1)); // Δ(1) = 1⊗1
        comul.set(3, 1, q(1)); // Δ(g) = g⊗g
        let expanded = g_one
            .contract_leg(0, &comul)
            .unwrap()
            .split_leg(0, &[2, 2])
            .unwrap();
        assert_eq!(expanded, t(&[2, 2, 2], &[0, 0, 0, 0, 0, 0, 1, 0]));
    }

    #[test]
    fn permute_round_trip() {
        let x = t(&[2, 2, 2], &[1, 2, 3, 4, 5, 6, 7, 8]);
        let rev = x.permute(&[2, 1, 0]);
        assert_eq!(*rev.get(&[0, 1, 1]), *x.get(&[1, 1, 0]));
        assert_eq!(rev.permute(&[2, 1, 0]), x);
        let y = t(&[2, 3], &[1, 2, 3, 4, 5, 6]);
        assert_eq!(y.swap21().swap21(), y);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            // Identity contraction is the identity on random tensors.
            #[test]
            fn identity_contraction(entries in proptest::collection::vec(-9i64..9, 24), leg in 0usize..3) {
                let x = t(&[2, 3, 4], &entries);
                let id = LinearMap::identity(Field::Rational, x.dims()[leg]);
                prop_assert_eq!(x.contract_leg(leg, &id).unwrap(), x);
            }

            // Splitting a leg and merging it back is the identity.
            #[test]
            fn split_merge_round_trip(entries in proptest::collection::vec(-9i64..9, 24)) {
                let x = t(&[4, 6], &entries);
                let split = x.split_leg(1, &[2, 3]).unwrap();
                prop_assert_eq!(split.merge_legs(1, 2), x);
            }
        }
    }
}

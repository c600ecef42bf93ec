//! Quotients of coordinate spaces by spans of relation vectors.
//!
//! Balanced tensor products like `A⊗_B A` are realized as quotients of plain
//! tensor products by explicit balancing relations. The projection sends a
//! vector to its coordinates on the non-pivot complement of the echelonized
//! relation space; the section embeds that complement back, so
//! `project ∘ section = id` and the projection annihilates exactly the span
//! of the relations.

use crate::linmap::{rref, LinearMap};
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone)]
pub struct QuotientSpace {
    ambient_dim: usize,
    dim: usize,
    /// RREF rows of the relation span, with their pivot columns.
    rel_rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
    free: Vec<usize>,
    field: Field,
}

impl QuotientSpace {
    pub fn new(field: Field, ambient_dim: usize, relations: &[Vec<Scalar>]) -> Self {
        for r in relations {
            assert_eq!(r.len(), ambient_dim, "relation vector length");
        }
        let mut rows: Vec<Vec<Scalar>> = relations
            .iter()
            .filter(|r| !r.iter().all(Scalar::is_zero))
            .cloned()
            .collect();
        let pivots = rref(&mut rows);
        rows.truncate(pivots.len());
        let free: Vec<usize> = (0..ambient_dim).filter(|c| !pivots.contains(c)).collect();
        QuotientSpace {
            ambient_dim,
            dim: free.len(),
            rel_rows: rows,
            pivots,
            free,
            field,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Coordinates of the class of `v` on the complement basis.
    pub fn project_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient_dim);
        let mut w = v.to_vec();
        for (row, &p) in self.rel_rows.iter().zip(&self.pivots) {
            if !w[p].is_zero() {
                let factor = w[p].clone();
                for j in 0..self.ambient_dim {
                    let s = row[j].mul(&factor);
                    w[j] = w[j].sub(&s);
                }
            }
        }
        self.free.iter().map(|&c| w[c].clone()).collect()
    }

    /// Representative in the ambient space of the `j`-th complement vector.
    pub fn section_vec(&self, j: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.ambient_dim];
        v[self.free[j]] = self.field.one();
        v
    }

    pub fn project_map(&self) -> LinearMap {
        let cols: Vec<Vec<Scalar>> = (0..self.ambient_dim)
            .map(|j| {
                let mut v = vec![self.field.zero(); self.ambient_dim];
                v[j] = self.field.one();
                self.project_vec(&v)
            })
            .collect();
        LinearMap::from_columns(self.field, self.dim, &cols)
    }

    pub fn section_map(&self) -> LinearMap {
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| self.section_vec(j)).collect();
        LinearMap::from_columns(self.field, self.ambient_dim, &cols)
    }

    /// Whether `v` is annihilated by the projection, i.e. lies in the span of
    /// the relations.
    pub fn annihilates(&self, v: &[Scalar]) -> bool {
        self.project_vec(v).iter().all(Scalar::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        Field::Rational.integer(n)
    }

    #[test]
    fn no_relations_is_the_ambient_space() {
        let qt = QuotientSpace::new(Field::Rational, 3, &[]);
        assert_eq!(qt.dim(), 3);
        let v = vec![q(1), q(2), q(3)];
        assert_eq!(qt.project_vec(&v), v);
    }

    #[test]
    fn full_relations_give_zero() {
        let rels = vec![
            vec![q(1), q(0)],
            vec![q(0), q(1)],
            vec![q(1), q(1)],
        ];
        let qt = QuotientSpace::new(Field::Rational, 2, &rels);
        assert_eq!(qt.dim(), 0);
        assert!(qt.annihilates(&[q(5), q(-3)]));
    }

    #[test]
    fn project_section_is_identity() {
        let rels = vec![vec![q(1), q(-1), q(0)], vec![q(0), q(2), q(-2)]];
        let qt = QuotientSpace::new(Field::Rational, 3, &rels);
        assert_eq!(qt.dim(), 1);
        let p = qt.project_map();
        let s = qt.section_map();
        assert_eq!(
            p.compose(&s),
            LinearMap::identity(Field::Rational, qt.dim())
        );
        for r in &rels {
            assert!(qt.annihilates(r));
        }
        // 1 - g ≡ 0, so the class of g equals the class of 1.
        assert_eq!(
            qt.project_vec(&[q(1), q(0), q(0)]),
            qt.project_vec(&[q(0), q(1), q(0)])
        );
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            // project∘section = id and the relations are annihilated, on
            // random relation sets.
            #[test]
            fn quotient_laws(rels in proptest::collection::vec(
                proptest::collection::vec(-4i64..4, 5), 0..6)
            ) {
                let rels: Vec<Vec<Scalar>> = rels
                    .into_iter()
                    .map(|r| r.into_iter().map(q).collect())
                    .collect();
                let qt = QuotientSpace::new(Field::Rational, 5, &rels);
                let p = qt.project_map();
                let s = qt.section_map();
                prop_assert_eq!(
                    p.compose(&s),
                    LinearMap::identity(Field::Rational, qt.dim())
                );
                for r in &rels {
                    prop_assert!(qt.annihilates(r));
                }
                prop_assert_eq!(qt.dim() + rels_rank(&rels), 5);
            }
        }

        fn rels_rank(rels: &[Vec<Scalar>]) -> usize {
            let mut rows = rels.to_vec();
            crate::linmap::rref(&mut rows).len()
        }
    }
}

//! Quasi-bialgebras and quasi-Hopf algebras by structure constants, their
//! axiom verification, op/cop variants, the dual weak actions and convolution,
//! and Drinfeld's gauge element.

use crate::algebra::{mul_tensors, ActionTable, FiniteAlgebra, MulTable};
use crate::error::{Error, Result};
use crate::exec::{first_failure_with, Exec};
use crate::linmap::LinearMap;
use crate::report::{coords_string, Failure, Report};
use crate::scalar::{Field, Scalar};
use crate::tensor::Tensor;

/// A quasi-bialgebra: an associative algebra with comultiplication, counit
/// and an invertible associator in `H⊗H⊗H` controlling coassociativity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiBialgebra {
    pub algebra: FiniteAlgebra,
    /// `H → H⊗H`, row-major codomain.
    pub comul: LinearMap,
    /// `H → k`.
    pub counit: LinearMap,
    pub phi: Tensor,
    pub phi_inv: Tensor,
}

impl QuasiBialgebra {
    pub fn new(
        algebra: FiniteAlgebra,
        comul: LinearMap,
        counit: LinearMap,
        phi: Tensor,
        phi_inv: Tensor,
    ) -> Result<Self> {
        let n = algebra.dim();
        let expect = |context, expected, got| {
            if expected != got {
                Err(Error::DimensionMismatch {
                    context,
                    expected,
                    got,
                })
            } else {
                Ok(())
            }
        };
        expect("comultiplication domain", n, comul.domain_dim())?;
        expect("comultiplication codomain", n * n, comul.codomain_dim())?;
        expect("counit domain", n, counit.domain_dim())?;
        expect("counit codomain", 1, counit.codomain_dim())?;
        expect("associator rank", 3, phi.rank())?;
        expect("associator leg", n, phi.dims()[0])?;
        expect("associator inverse rank", 3, phi_inv.rank())?;
        Ok(QuasiBialgebra {
            algebra,
            comul,
            counit,
            phi,
            phi_inv,
        })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        self.algebra.basis_vector(i)
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.algebra.unit
    }

    pub fn mul_vec(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.algebra.mul_vec(a, b)
    }

    /// Product in `H^{⊗k}`.
    pub fn hmul(&self, a: &Tensor, b: &Tensor) -> Tensor {
        let legs: Vec<&MulTable> = (0..a.rank()).map(|_| &self.algebra.mul).collect();
        mul_tensors(&legs, a, b)
    }

    /// `Δ(v)` as a rank-2 tensor.
    pub fn comul_tensor(&self, v: &[Scalar]) -> Tensor {
        let n = self.dim();
        Tensor::from_vector(self.field(), &self.comul.apply(v))
            .split_leg(0, &[n, n])
            .expect("comultiplication shape")
    }

    /// Applies `Δ` to one leg, splitting it in place.
    pub fn comul_leg(&self, t: &Tensor, leg: usize) -> Tensor {
        let n = self.dim();
        t.contract_leg(leg, &self.comul)
            .and_then(|t| t.split_leg(leg, &[n, n]))
            .expect("comul_leg shape")
    }

    /// Applies `ε` to one leg and drops it.
    pub fn counit_leg(&self, t: &Tensor, leg: usize) -> Tensor {
        t.contract_leg(leg, &self.counit)
            .and_then(|t| t.squeeze_leg(leg))
            .expect("counit_leg shape")
    }

    pub fn counit_of(&self, v: &[Scalar]) -> Scalar {
        self.counit.apply(v)[0].clone()
    }

    /// `1⊗…⊗1` with `k` legs.
    pub fn unit_tensor(&self, k: usize) -> Tensor {
        let one = Tensor::from_vector(self.field(), self.unit());
        let mut t = one.clone();
        for _ in 1..k {
            t = t.outer(&one);
        }
        t
    }

    /// Functional evaluation `h*(v)` in the dual basis.
    pub fn eval(&self, f: &[Scalar], v: &[Scalar]) -> Scalar {
        f.iter()
            .zip(v)
            .fold(self.field().zero(), |acc, (a, b)| acc.add(&a.mul(b)))
    }

    /// Convolution on `H*`: `(f ⋆ g)(h) = f(h₁) g(h₂)`.
    pub fn convolve(&self, f: &[Scalar], g: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![self.field().zero(); n];
        for m in 0..n {
            let dm = self.comul.column(m);
            let mut acc = self.field().zero();
            for (i, fi) in f.iter().enumerate() {
                if fi.is_zero() {
                    continue;
                }
                for (j, gj) in g.iter().enumerate() {
                    if gj.is_zero() {
                        continue;
                    }
                    let c = &dm[i * n + j];
                    if !c.is_zero() {
                        acc = acc.add(&fi.mul(gj).mul(c));
                    }
                }
            }
            out[m] = acc;
        }
        out
    }

    /// `h ⇀ h*` where `(h ⇀ h*)(g) = h*(gh)`.
    pub fn dual_left_act(&self, h: &[Scalar], f: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        (0..n)
            .map(|g| {
                let gh = self.mul_vec(&self.basis_vector(g), h);
                self.eval(f, &gh)
            })
            .collect()
    }

    /// `h* ↼ h` where `(h* ↼ h)(g) = h*(hg)`.
    pub fn dual_right_act(&self, f: &[Scalar], h: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        (0..n)
            .map(|g| {
                let hg = self.mul_vec(h, &self.basis_vector(g));
                self.eval(f, &hg)
            })
            .collect()
    }

    /// `h* ⇀ h = h*(h₂) h₁`.
    pub fn weak_left(&self, f: &[Scalar], h: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let dh = self.comul.apply(h);
        let mut out = vec![self.field().zero(); n];
        for a in 0..n {
            for b in 0..n {
                let c = &dh[a * n + b];
                if !c.is_zero() && !f[b].is_zero() {
                    out[a] = out[a].add(&c.mul(&f[b]));
                }
            }
        }
        out
    }

    /// `h ↼ h* = h*(h₁) h₂`.
    pub fn weak_right(&self, h: &[Scalar], f: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let dh = self.comul.apply(h);
        let mut out = vec![self.field().zero(); n];
        for a in 0..n {
            for b in 0..n {
                let c = &dh[a * n + b];
                if !c.is_zero() && !f[a].is_zero() {
                    out[b] = out[b].add(&c.mul(&f[a]));
                }
            }
        }
        out
    }

    /// Functional `f ∘ m` in dual coordinates.
    pub fn precompose(&self, f: &[Scalar], m: &LinearMap) -> Vec<Scalar> {
        (0..m.domain_dim())
            .map(|j| self.eval(f, &m.column(j)))
            .collect()
    }
}

/// Verifies all quasi-bialgebra axioms by exact coordinate equality.
pub fn verify_quasi_bialgebra(b: &QuasiBialgebra, subject: &str) -> Report {
    verify_quasi_bialgebra_with(b, subject, Exec::default())
}

pub fn verify_quasi_bialgebra_with(b: &QuasiBialgebra, subject: &str, mode: Exec) -> Report {
    let n = b.dim();
    let mut report = b.algebra.verify_with(subject, mode);

    // Δ is an algebra morphism.
    let comul_unit = b.comul_tensor(b.unit());
    let unit2 = b.unit_tensor(2);
    report.record(
        "comul-morphism",
        if comul_unit != unit2 {
            Some(Failure {
                witness: vec![],
                lhs: coords_string(comul_unit.coords()),
                rhs: coords_string(unit2.coords()),
            })
        } else {
            first_failure_with(mode, n * n, |t| {
                let (i, j) = (t / n, t % n);
                let lhs = b.comul_tensor(&b.mul_vec(&b.basis_vector(i), &b.basis_vector(j)));
                let rhs = b.hmul(
                    &b.comul_tensor(&b.basis_vector(i)),
                    &b.comul_tensor(&b.basis_vector(j)),
                );
                (lhs != rhs).then(|| Failure {
                    witness: vec![i, j],
                    lhs: coords_string(lhs.coords()),
                    rhs: coords_string(rhs.coords()),
                })
            })
        },
    );

    // ε is an algebra morphism.
    report.record("counit-morphism", {
        let one = b.counit_of(b.unit());
        if !one.is_one() {
            Some(Failure {
                witness: vec![],
                lhs: one.to_string(),
                rhs: "1".into(),
            })
        } else {
            first_failure_with(mode, n * n, |t| {
                let (i, j) = (t / n, t % n);
                let lhs = b.counit_of(&b.mul_vec(&b.basis_vector(i), &b.basis_vector(j)));
                let rhs = b
                    .counit_of(&b.basis_vector(i))
                    .mul(&b.counit_of(&b.basis_vector(j)));
                (lhs != rhs).then(|| Failure {
                    witness: vec![i, j],
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                })
            })
        }
    });

    // Quasi-coassociativity: φ (Δ⊗I)Δ(h) = (I⊗Δ)Δ(h) φ.
    report.record(
        "coassociativity",
        first_failure_with(mode, n, |h| {
            let dh = b.comul_tensor(&b.basis_vector(h));
            let left = b.hmul(&b.phi, &b.comul_leg(&dh, 0));
            let right = b.hmul(&b.comul_leg(&dh, 1), &b.phi);
            (left != right).then(|| Failure {
                witness: vec![h],
                lhs: coords_string(left.coords()),
                rhs: coords_string(right.coords()),
            })
        }),
    );

    // Counit law: (I⊗ε)Δ(h) = (ε⊗I)Δ(h) = h.
    report.record(
        "counit",
        first_failure_with(mode, n, |h| {
            let e = b.basis_vector(h);
            let dh = b.comul_tensor(&e);
            let l = b.counit_leg(&dh, 1).into_coords();
            let r = b.counit_leg(&dh, 0).into_coords();
            (l != e || r != e).then(|| Failure {
                witness: vec![h],
                lhs: coords_string(&l),
                rhs: coords_string(&r),
            })
        }),
    );

    // Pentagon: (I⊗I⊗Δ)(φ)(Δ⊗I⊗I)(φ) = (1⊗φ)(I⊗Δ⊗I)(φ)(φ⊗1).
    {
        let lhs = b.hmul(&b.comul_leg(&b.phi, 2), &b.comul_leg(&b.phi, 0));
        let one = Tensor::from_vector(b.field(), b.unit());
        let rhs = b.hmul(
            &b.hmul(&one.outer(&b.phi), &b.comul_leg(&b.phi, 1)),
            &b.phi.outer(&one),
        );
        report.record(
            "pentagon",
            (lhs != rhs).then(|| Failure {
                witness: vec![],
                lhs: coords_string(lhs.coords()),
                rhs: coords_string(rhs.coords()),
            }),
        );
    }

    // (I⊗ε⊗I)(φ) = 1⊗1.
    {
        let mid = b.counit_leg(&b.phi, 1);
        let unit2 = b.unit_tensor(2);
        report.record(
            "associator-counit-middle",
            (mid != unit2).then(|| Failure {
                witness: vec![],
                lhs: coords_string(mid.coords()),
                rhs: coords_string(unit2.coords()),
            }),
        );
    }

    // The implied outer collapses: (ε⊗I⊗I)(φ) = (I⊗I⊗ε)(φ) = 1⊗1.
    {
        let l = b.counit_leg(&b.phi, 0);
        let r = b.counit_leg(&b.phi, 2);
        let unit2 = b.unit_tensor(2);
        report.record(
            "associator-counit-outer",
            (l != unit2 || r != unit2).then(|| Failure {
                witness: vec![],
                lhs: coords_string(l.coords()),
                rhs: coords_string(r.coords()),
            }),
        );
    }

    // φ φ⁻¹ = φ⁻¹ φ = 1⊗1⊗1.
    {
        let unit3 = b.unit_tensor(3);
        let l = b.hmul(&b.phi, &b.phi_inv);
        let r = b.hmul(&b.phi_inv, &b.phi);
        report.record(
            "associator-invertible",
            (l != unit3 || r != unit3).then(|| Failure {
                witness: vec![],
                lhs: coords_string(l.coords()),
                rhs: coords_string(r.coords()),
            }),
        );
    }

    report
}

/// A quasi-Hopf algebra: a quasi-bialgebra with an antipode triple
/// `(S, α, β)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiHopfAlgebra {
    pub bialgebra: QuasiBialgebra,
    pub antipode: LinearMap,
    pub alpha: Vec<Scalar>,
    pub beta: Vec<Scalar>,
}

impl std::ops::Deref for QuasiHopfAlgebra {
    type Target = QuasiBialgebra;

    fn deref(&self) -> &QuasiBialgebra {
        &self.bialgebra
    }
}

impl QuasiHopfAlgebra {
    pub fn new(
        bialgebra: QuasiBialgebra,
        antipode: LinearMap,
        alpha: Vec<Scalar>,
        beta: Vec<Scalar>,
    ) -> Result<Self> {
        let n = bialgebra.dim();
        if antipode.domain_dim() != n || antipode.codomain_dim() != n {
            return Err(Error::DimensionMismatch {
                context: "antipode",
                expected: n,
                got: antipode.domain_dim(),
            });
        }
        if alpha.len() != n || beta.len() != n {
            return Err(Error::DimensionMismatch {
                context: "alpha/beta",
                expected: n,
                got: alpha.len(),
            });
        }
        Ok(QuasiHopfAlgebra {
            bialgebra,
            antipode,
            alpha,
            beta,
        })
    }

    /// `S⁻¹`; bijectivity is asserted rather than assumed.
    pub fn antipode_inv(&self) -> Result<LinearMap> {
        self.antipode.inverse("antipode")
    }

    pub fn apply_s(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.antipode.apply(v)
    }
}

/// Verifies the antipode axioms on top of the quasi-bialgebra axioms.
pub fn verify_quasi_hopf(h: &QuasiHopfAlgebra, subject: &str) -> Report {
    verify_quasi_hopf_with(h, subject, Exec::default())
}

pub fn verify_quasi_hopf_with(h: &QuasiHopfAlgebra, subject: &str, mode: Exec) -> Report {
    let mut report = verify_quasi_bialgebra_with(&h.bialgebra, subject, mode);
    let n = h.dim();
    let s = &h.antipode;

    // S is an anti-algebra morphism.
    report.record("antipode-anti-hom", {
        let s_one = s.apply(h.unit());
        if s_one != h.unit() {
            Some(Failure {
                witness: vec![],
                lhs: coords_string(&s_one),
                rhs: coords_string(h.unit()),
            })
        } else {
            first_failure_with(mode, n * n, |t| {
                let (i, j) = (t / n, t % n);
                let lhs = s.apply(&h.mul_vec(&h.basis_vector(i), &h.basis_vector(j)));
                let rhs = h.mul_vec(&s.apply(&h.basis_vector(j)), &s.apply(&h.basis_vector(i)));
                (lhs != rhs).then(|| Failure {
                    witness: vec![i, j],
                    lhs: coords_string(&lhs),
                    rhs: coords_string(&rhs),
                })
            })
        }
    });

    report.record(
        "antipode-bijective",
        h.antipode_inv().err().map(|e| Failure {
            witness: vec![],
            lhs: e.to_string(),
            rhs: "invertible antipode".into(),
        }),
    );

    // ε ∘ S = ε.
    report.record(
        "counit-antipode",
        first_failure_with(mode, n, |i| {
            let l = h.counit_of(&s.apply(&h.basis_vector(i)));
            let r = h.counit_of(&h.basis_vector(i));
            (l != r).then(|| Failure {
                witness: vec![i],
                lhs: l.to_string(),
                rhs: r.to_string(),
            })
        }),
    );

    // S(h₁) α h₂ = ε(h) α.
    report.record(
        "antipode-alpha",
        first_failure_with(mode, n, |i| {
            let e = h.basis_vector(i);
            let dh = h.comul_tensor(&e);
            let mut lhs = vec![h.field().zero(); n];
            for (idx, c) in dh.iter_sparse() {
                let term = h.mul_vec(
                    &h.mul_vec(&s.apply(&h.basis_vector(idx[0])), &h.alpha),
                    &h.basis_vector(idx[1]),
                );
                for (k, v) in term.iter().enumerate() {
                    lhs[k] = lhs[k].add(&v.mul(c));
                }
            }
            let eps = h.counit_of(&e);
            let rhs: Vec<Scalar> = h.alpha.iter().map(|a| a.mul(&eps)).collect();
            (lhs != rhs).then(|| Failure {
                witness: vec![i],
                lhs: coords_string(&lhs),
                rhs: coords_string(&rhs),
            })
        }),
    );

    // h₁ β S(h₂) = ε(h) β.
    report.record(
        "antipode-beta",
        first_failure_with(mode, n, |i| {
            let e = h.basis_vector(i);
            let dh = h.comul_tensor(&e);
            let mut lhs = vec![h.field().zero(); n];
            for (idx, c) in dh.iter_sparse() {
                let term = h.mul_vec(
                    &h.mul_vec(&h.basis_vector(idx[0]), &h.beta),
                    &s.apply(&h.basis_vector(idx[1])),
                );
                for (k, v) in term.iter().enumerate() {
                    lhs[k] = lhs[k].add(&v.mul(c));
                }
            }
            let eps = h.counit_of(&e);
            let rhs: Vec<Scalar> = h.beta.iter().map(|b| b.mul(&eps)).collect();
            (lhs != rhs).then(|| Failure {
                witness: vec![i],
                lhs: coords_string(&lhs),
                rhs: coords_string(&rhs),
            })
        }),
    );

    // X¹ β S(X²) α X³ = 1.
    {
        let mut acc = vec![h.field().zero(); n];
        for (idx, c) in h.phi.iter_sparse() {
            let term = h.mul_vec(
                &h.mul_vec(
                    &h.mul_vec(
                        &h.mul_vec(&h.basis_vector(idx[0]), &h.beta),
                        &s.apply(&h.basis_vector(idx[1])),
                    ),
                    &h.alpha,
                ),
                &h.basis_vector(idx[2]),
            );
            for (k, v) in term.iter().enumerate() {
                acc[k] = acc[k].add(&v.mul(c));
            }
        }
        report.record(
            "antipode-zigzag-forward",
            (acc != h.unit()).then(|| Failure {
                witness: vec![],
                lhs: coords_string(&acc),
                rhs: coords_string(h.unit()),
            }),
        );
    }

    // S(x¹) α x² β S(x³) = 1.
    {
        let mut acc = vec![h.field().zero(); n];
        for (idx, c) in h.phi_inv.iter_sparse() {
            let term = h.mul_vec(
                &h.mul_vec(
                    &h.mul_vec(
                        &h.mul_vec(&s.apply(&h.basis_vector(idx[0])), &h.alpha),
                        &h.basis_vector(idx[1]),
                    ),
                    &h.beta,
                ),
                &s.apply(&h.basis_vector(idx[2])),
            );
            for (k, v) in term.iter().enumerate() {
                acc[k] = acc[k].add(&v.mul(c));
            }
        }
        report.record(
            "antipode-zigzag-backward",
            (acc != h.unit()).then(|| Failure {
                witness: vec![],
                lhs: coords_string(&acc),
                rhs: coords_string(h.unit()),
            }),
        );
    }

    // Normalization ε(α) = ε(β) = 1.
    {
        let ea = h.counit_of(&h.alpha);
        let eb = h.counit_of(&h.beta);
        report.record(
            "alpha-beta-normalized",
            (!ea.is_one() || !eb.is_one()).then(|| Failure {
                witness: vec![],
                lhs: ea.to_string(),
                rhs: eb.to_string(),
            }),
        );
    }

    report
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Op,
    Cop,
    OpCop,
}

/// The op, cop and op-cop quasi-Hopf structures.
pub fn op_cop_variant(h: &QuasiHopfAlgebra, which: Variant) -> Result<QuasiHopfAlgebra> {
    let n = h.dim();
    let field = h.field();
    let s_inv = h.antipode_inv()?;
    let swap_comul = |comul: &LinearMap| {
        let cols: Vec<Vec<Scalar>> = (0..n)
            .map(|j| {
                let col = comul.column(j);
                let mut out = vec![field.zero(); n * n];
                for a in 0..n {
                    for b in 0..n {
                        out[b * n + a] = col[a * n + b].clone();
                    }
                }
                out
            })
            .collect();
        LinearMap::from_columns(field, n * n, &cols)
    };

    let (algebra, comul, phi, phi_inv, antipode, alpha, beta) = match which {
        Variant::Op => (
            FiniteAlgebra::new(h.algebra.mul.opposite(), h.algebra.unit.clone())?,
            h.comul.clone(),
            h.phi_inv.clone(),
            h.phi.clone(),
            s_inv.clone(),
            s_inv.apply(&h.beta),
            s_inv.apply(&h.alpha),
        ),
        Variant::Cop => (
            h.algebra.clone(),
            swap_comul(&h.comul),
            h.phi_inv.permute(&[2, 1, 0]),
            h.phi.permute(&[2, 1, 0]),
            s_inv.clone(),
            s_inv.apply(&h.alpha),
            s_inv.apply(&h.beta),
        ),
        Variant::OpCop => (
            FiniteAlgebra::new(h.algebra.mul.opposite(), h.algebra.unit.clone())?,
            swap_comul(&h.comul),
            h.phi.permute(&[2, 1, 0]),
            h.phi_inv.permute(&[2, 1, 0]),
            h.antipode.clone(),
            h.beta.clone(),
            h.alpha.clone(),
        ),
    };
    let bialgebra = QuasiBialgebra::new(algebra, comul, h.counit.clone(), phi, phi_inv)?;
    QuasiHopfAlgebra::new(bialgebra, antipode, alpha, beta)
}

/// The convolution product on `H*` and the four weak actions, as explicit
/// tables, plus the bracketed quasi-associativity law of the convolution.
#[derive(Debug, Clone)]
pub struct DualStructure {
    /// Convolution on `H*` in the dual basis (not associative in general).
    pub convolution: MulTable,
    /// Two-sided convolution unit: the counit as a dual vector.
    pub counit_vector: Vec<Scalar>,
    /// `h ⇀ h*` with actor `H`.
    pub h_act_left: ActionTable,
    /// `h* ↼ h` with actor `H`.
    pub h_act_right: ActionTable,
    /// `h* ⇀ h` with actor `H*`.
    pub dual_act_left: ActionTable,
    /// `h ↼ h*` with actor `H*`.
    pub dual_act_right: ActionTable,
}

pub fn dual_structure(h: &QuasiHopfAlgebra) -> Result<(DualStructure, Report)> {
    let n = h.dim();
    let field = h.field();
    let basis = |i: usize| h.basis_vector(i);
    let dual_basis = |i: usize| {
        let mut v = vec![field.zero(); n];
        v[i] = field.one();
        v
    };

    let mut conv_products = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            conv_products.push(h.convolve(&dual_basis(i), &dual_basis(j)));
        }
    }
    let convolution = MulTable::from_products(field, n, &conv_products)?;

    let table_of = |f: &dyn Fn(usize, usize) -> Vec<Scalar>| -> Result<ActionTable> {
        let mut products = Vec::with_capacity(n * n);
        for a in 0..n {
            for i in 0..n {
                products.push(f(a, i));
            }
        }
        ActionTable::from_products(field, n, n, &products)
    };

    let h_act_left = table_of(&|a, i| h.dual_left_act(&basis(a), &dual_basis(i)))?;
    let h_act_right = table_of(&|a, i| h.dual_right_act(&dual_basis(i), &basis(a)))?;
    let dual_act_left = table_of(&|a, i| h.weak_left(&dual_basis(a), &basis(i)))?;
    let dual_act_right = table_of(&|a, i| h.weak_right(&basis(i), &dual_basis(a)))?;

    let counit_vector: Vec<Scalar> = (0..n).map(|i| h.counit_of(&basis(i))).collect();

    let mut report = Report::new("dual-structure");

    // Harpoon tables agree with their defining evaluations coordinatewise.
    report.record(
        "weak-actions-coordinatewise",
        (0..n * n).find_map(|t| {
            let (a, i) = (t / n, t % n);
            let lhs = h.dual_left_act(&basis(a), &dual_basis(i));
            let expect: Vec<Scalar> = (0..n)
                .map(|g| h.eval(&dual_basis(i), &h.mul_vec(&basis(g), &basis(a))))
                .collect();
            let rhs = h.dual_right_act(&dual_basis(i), &basis(a));
            let expect_r: Vec<Scalar> = (0..n)
                .map(|g| h.eval(&dual_basis(i), &h.mul_vec(&basis(a), &basis(g))))
                .collect();
            (lhs != expect || rhs != expect_r).then(|| Failure {
                witness: vec![a, i],
                lhs: coords_string(&lhs),
                rhs: coords_string(&expect),
            })
        }),
    );

    // ε is a two-sided convolution unit.
    report.record(
        "convolution-unit",
        (0..n).find_map(|i| {
            let l = h.convolve(&counit_vector, &dual_basis(i));
            let r = h.convolve(&dual_basis(i), &counit_vector);
            (l != dual_basis(i) || r != dual_basis(i)).then(|| Failure {
                witness: vec![i],
                lhs: coords_string(&l),
                rhs: coords_string(&r),
            })
        }),
    );

    // (h* g*) l* = (X¹⇀h*↼x¹)[(X²⇀g*↼x²)(X³⇀l*↼x³)].
    report.record(
        "convolution-quasi-associativity",
        (0..n * n * n).find_map(|t| {
            let (i, j, k) = (t / (n * n), (t / n) % n, t % n);
            let lhs = h.convolve(&h.convolve(&dual_basis(i), &dual_basis(j)), &dual_basis(k));
            let mut rhs = vec![field.zero(); n];
            for (xi, cx) in h.phi.iter_sparse() {
                for (yi, cy) in h.phi_inv.iter_sparse() {
                    let f1 = h.dual_right_act(
                        &h.dual_left_act(&basis(xi[0]), &dual_basis(i)),
                        &basis(yi[0]),
                    );
                    let f2 = h.dual_right_act(
                        &h.dual_left_act(&basis(xi[1]), &dual_basis(j)),
                        &basis(yi[1]),
                    );
                    let f3 = h.dual_right_act(
                        &h.dual_left_act(&basis(xi[2]), &dual_basis(k)),
                        &basis(yi[2]),
                    );
                    let term = h.convolve(&f1, &h.convolve(&f2, &f3));
                    let c = cx.mul(cy);
                    for (m, v) in term.iter().enumerate() {
                        rhs[m] = rhs[m].add(&v.mul(&c));
                    }
                }
            }
            (lhs != rhs).then(|| Failure {
                witness: vec![i, j, k],
                lhs: coords_string(&lhs),
                rhs: coords_string(&rhs),
            })
        }),
    );

    Ok((
        DualStructure {
            convolution,
            counit_vector,
            h_act_left,
            h_act_right,
            dual_act_left,
            dual_act_right,
        },
        report,
    ))
}

/// Drinfeld's gauge element `f ∈ H⊗H` with its inverse.
///
/// The element is found by solving the intertwining law
/// `f Δ(h) = (S⊗S)(Δ^{cop}(S⁻¹(h))) f`, the counit normalization, and the
/// consistency law `f Δ(q_L¹) p_R (1⊗S(q_L²)) = (S⊗S)(q_R^{21})` as one
/// affine linear system, then post-checking invertibility and the cube
/// compatibility
/// `(S⊗S⊗S)(φ^{321}) = (1⊗f)(I⊗Δ)(f) φ (Δ⊗I)(f⁻¹)(f⁻¹⊗1)`.
///
/// The consistency law is what ties the element to the `U_R`-based
/// canonical map: without it the intertwining-plus-normalization family can
/// contain members (the unit among them, on the twisted two-dimensional
/// algebra) for which `Ξ∘can = can′` fails.
///
/// The solution family can still be positive-dimensional; candidates are
/// tried in a deterministic order (`1⊗1` first when it solves the system,
/// then the echelon particular solution, then particular plus single kernel
/// vectors) and the first candidate passing every post-check is returned.
pub fn compute_gauge_f(h: &QuasiHopfAlgebra) -> Result<(Tensor, Tensor)> {
    let pre = verify_quasi_hopf(h, "gauge precondition");
    if !pre.all_passed() {
        let failing = pre
            .first_failure()
            .map(|c| c.name.clone())
            .unwrap_or_default();
        return Err(Error::Verification(format!(
            "gauge element requires a verified quasi-Hopf algebra; {failing} fails"
        )));
    }
    let n = h.dim();
    let field = h.field();
    let n2 = n * n;
    let s_inv = h.antipode_inv()?;

    // (S⊗S)(Δ^{cop}(S⁻¹(e_j))) for each basis j.
    let targets: Vec<Tensor> = (0..n)
        .map(|j| {
            let d = h.comul_tensor(&s_inv.apply(&h.basis_vector(j))).swap21();
            d.contract_leg(0, &h.antipode)
                .and_then(|t| t.contract_leg(1, &h.antipode))
                .expect("antipode legs")
        })
        .collect();

    // Right multiplication by Δ(e_j) minus left multiplication by the target,
    // acting on the coordinates of f.
    let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(n * n2 + 2 * n);
    let mut rhs: Vec<Scalar> = Vec::new();
    let basis2 = |a: usize, b: usize| {
        let mut t = Tensor::zeros(field, &[n, n]);
        t.set(&[a, b], field.one());
        t
    };
    for j in 0..n {
        let dj = h.comul_tensor(&h.basis_vector(j));
        let mut block = vec![vec![field.zero(); n2]; n2];
        for a in 0..n {
            for b in 0..n {
                let e = basis2(a, b);
                let right = h.hmul(&e, &dj);
                let left = h.hmul(&targets[j], &e);
                let diff = right.sub(&left);
                for (idx, c) in diff.iter_sparse() {
                    block[idx[0] * n + idx[1]][a * n + b] = c.clone();
                }
            }
        }
        rows.extend(block);
        rhs.extend(std::iter::repeat(field.zero()).take(n2));
    }
    // (I⊗ε)(f) = 1 and (ε⊗I)(f) = 1.
    for i in 0..n {
        let mut row = vec![field.zero(); n2];
        for j in 0..n {
            row[i * n + j] = h.counit_of(&h.basis_vector(j));
        }
        rows.push(row);
        rhs.push(h.unit()[i].clone());
    }
    for j in 0..n {
        let mut row = vec![field.zero(); n2];
        for i in 0..n {
            row[i * n + j] = h.counit_of(&h.basis_vector(i));
        }
        rows.push(row);
        rhs.push(h.unit()[j].clone());
    }

    // f · K = (S⊗S)(q_R^{21}) with K = Δ(q_L¹) p_R (1⊗S(q_L²)).
    let (anchor_k, anchor_m) = gauge_anchor(h)?;
    {
        let mut block = vec![vec![field.zero(); n2]; n2];
        for a in 0..n {
            for b in 0..n {
                let img = h.hmul(&basis2(a, b), &anchor_k);
                for (idx, c) in img.iter_sparse() {
                    block[idx[0] * n + idx[1]][a * n + b] = c.clone();
                }
            }
        }
        rows.extend(block);
        rhs.extend(anchor_m.coords().iter().cloned());
    }

    let mut system = LinearMap::zeros(field, rows.len(), n2);
    for (i, row) in rows.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if !v.is_zero() {
                system.set(i, j, v.clone());
            }
        }
    }
    let solved = system.solve_affine(&rhs).ok_or(Error::GaugeNoSolution)?;
    let residual_zero = |cand: &[Scalar]| system.apply(cand) == rhs;

    let mut candidates: Vec<Vec<Scalar>> = Vec::new();
    let one_one = h.unit_tensor(2);
    if residual_zero(one_one.coords()) {
        candidates.push(one_one.coords().to_vec());
    }
    candidates.push(solved.solution.clone());
    if solved.kernel_dim > 0 {
        for k in system.kernel() {
            let shifted: Vec<Scalar> = solved
                .solution
                .iter()
                .zip(&k)
                .map(|(a, b)| a.add(b))
                .collect();
            candidates.push(shifted);
        }
    }

    let mut saw_invertible = false;
    for cand in candidates {
        let f = Tensor::from_coords(field, &[n, n], cand)?;
        let Some(f_inv) = invert_in_tensor_square(h, &f) else {
            continue;
        };
        saw_invertible = true;
        if gauge_post_checks(h, &s_inv, &f, &f_inv) {
            return Ok((f, f_inv));
        }
    }
    if !saw_invertible {
        Err(Error::GaugeNonInvertible)
    } else if solved.kernel_dim > 0 {
        Err(Error::GaugeAmbiguous {
            dim: solved.kernel_dim,
        })
    } else {
        Err(Error::Verification(
            "gauge candidate failed the cube compatibility post-check".into(),
        ))
    }
}

/// The two sides of the gauge consistency law: `K = Δ(q_L¹) p_R (1⊗S(q_L²))`
/// and `M = (S⊗S)(q_R^{21})`, so that Drinfeld's element satisfies
/// `f·K = M`, equivalently `M⁻¹-free`: `K = f⁻¹ M`, which makes
/// `f⁻¹(S⊗S)(q_R^{21})` the element the canonical-map comparison needs.
fn gauge_anchor(h: &QuasiHopfAlgebra) -> Result<(Tensor, Tensor)> {
    let pq = crate::derived::compute_pq(h)?;
    let n = h.dim();
    let mut k = Tensor::zeros(h.field(), &[n, n]);
    let one = Tensor::from_vector(h.field(), h.unit());
    for (idx, c) in pq.q_l.iter_sparse() {
        let term = h.hmul(
            &h.hmul(&h.comul_tensor(&h.basis_vector(idx[0])), &pq.p_r),
            &one.outer(&Tensor::from_vector(
                h.field(),
                &h.apply_s(&h.basis_vector(idx[1])),
            )),
        );
        k = k.add(&term.scale(c));
    }
    let m = pq
        .q_r
        .swap21()
        .contract_leg(0, &h.antipode)
        .and_then(|t| t.contract_leg(1, &h.antipode))
        .expect("rank-2 antipode legs");
    Ok((k, m))
}

/// Two-sided inverse of an element of `H⊗H`, if any.
pub fn invert_in_tensor_square(h: &QuasiHopfAlgebra, f: &Tensor) -> Option<Tensor> {
    let n = h.dim();
    let field = h.field();
    let n2 = n * n;
    let mut left_mul = LinearMap::zeros(field, n2, n2);
    for a in 0..n {
        for b in 0..n {
            let mut e = Tensor::zeros(field, &[n, n]);
            e.set(&[a, b], field.one());
            let img = h.hmul(f, &e);
            for (idx, c) in img.iter_sparse() {
                left_mul.set(idx[0] * n + idx[1], a * n + b, c.clone());
            }
        }
    }
    let target = h.unit_tensor(2);
    let sol = left_mul.solve_affine(target.coords())?;
    if sol.kernel_dim != 0 {
        return None;
    }
    let inv = Tensor::from_coords(field, &[n, n], sol.solution).ok()?;
    (h.hmul(&inv, f) == target && h.hmul(f, &inv) == target).then_some(inv)
}

fn gauge_post_checks(
    h: &QuasiHopfAlgebra,
    s_inv: &LinearMap,
    f: &Tensor,
    f_inv: &Tensor,
) -> bool {
    let n = h.dim();
    // Intertwining with the actual inverse in place.
    for j in 0..n {
        let dj = h.comul_tensor(&h.basis_vector(j));
        let lhs = h.hmul(&h.hmul(f, &dj), f_inv);
        let target = {
            let d = h.comul_tensor(&s_inv.apply(&h.basis_vector(j))).swap21();
            d.contract_leg(0, &h.antipode)
                .and_then(|t| t.contract_leg(1, &h.antipode))
                .expect("antipode legs")
        };
        if lhs != target {
            return false;
        }
    }
    // Counit normalization.
    let one = Tensor::from_vector(h.field(), h.unit());
    if h.counit_leg(f, 0) != one || h.counit_leg(f, 1) != one {
        return false;
    }
    // (S⊗S⊗S)(φ^{321}) = (1⊗f)(I⊗Δ)(f) φ (Δ⊗I)(f⁻¹)(f⁻¹⊗1).
    let lhs = {
        let rev = h.phi.permute(&[2, 1, 0]);
        rev.contract_leg(0, &h.antipode)
            .and_then(|t| t.contract_leg(1, &h.antipode))
            .and_then(|t| t.contract_leg(2, &h.antipode))
            .expect("antipode legs")
    };
    let one1 = Tensor::from_vector(h.field(), h.unit());
    let rhs = h.hmul(
        &h.hmul(&h.hmul(&one1.outer(f), &h.comul_leg(f, 1)), &h.phi),
        &h.hmul(&h.comul_leg(f_inv, 0), &f_inv.outer(&one1)),
    );
    if lhs != rhs {
        return false;
    }
    // Δ(q_L¹) p_R (1⊗S(q_L²)) = f⁻¹ (S⊗S)(q_R^{21}).
    match gauge_anchor(h) {
        Ok((k, m)) => k == h.hmul(f_inv, &m),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn kz2_gauge_is_trivial() {
        let h = catalog::kz2(Field::Rational).unwrap();
        let (f, f_inv) = compute_gauge_f(&h).unwrap();
        assert_eq!(f, h.unit_tensor(2));
        assert_eq!(f_inv, h.unit_tensor(2));
    }

    #[test]
    fn gauge_requires_verified_input() {
        let mut h = catalog::kz2(Field::Rational).unwrap();
        h.antipode.set(0, 1, Field::Rational.one());
        assert!(matches!(compute_gauge_f(&h), Err(Error::Verification(_))));
    }

    #[test]
    fn gauge_intertwines_without_needing_the_inverse() {
        // f Δ(h) = (S⊗S)(Δ^{cop}(S⁻¹(h))) f for every basis h.
        for name in ["KZ2", "H2TW", "SW4"] {
            let h = catalog::quasi_hopf(name, Field::Rational).unwrap();
            let (f, _) = compute_gauge_f(&h).unwrap();
            let s_inv = h.antipode_inv().unwrap();
            for j in 0..h.dim() {
                let lhs = h.hmul(&f, &h.comul_tensor(&h.basis_vector(j)));
                let target = h
                    .comul_tensor(&s_inv.apply(&h.basis_vector(j)))
                    .swap21()
                    .contract_leg(0, &h.antipode)
                    .and_then(|t| t.contract_leg(1, &h.antipode))
                    .unwrap();
                let rhs = h.hmul(&target, &f);
                assert_eq!(lhs, rhs, "{name} at basis {j}");
            }
        }
    }

    #[test]
    fn variants_verify_and_opcop_is_involutive() {
        for name in ["KZ2", "H2TW", "SW4"] {
            let h = catalog::quasi_hopf(name, Field::Rational).unwrap();
            for which in [Variant::Op, Variant::Cop, Variant::OpCop] {
                let v = op_cop_variant(&h, which).unwrap();
                let report = verify_quasi_hopf(&v, "variant");
                assert!(report.all_passed(), "{name} {which:?}: {report}");
            }
            let back =
                op_cop_variant(&op_cop_variant(&h, Variant::OpCop).unwrap(), Variant::OpCop)
                    .unwrap();
            assert_eq!(back, h, "{name}: opcop twice");
        }
    }

    #[test]
    fn op_of_kz2_is_kz2() {
        let h = catalog::kz2(Field::Rational).unwrap();
        let op = op_cop_variant(&h, Variant::Op).unwrap();
        assert_eq!(op, h);
    }

    #[test]
    fn cop_of_h2tw_keeps_alpha_g() {
        let h = catalog::h2tw(Field::Rational).unwrap();
        let cop = op_cop_variant(&h, Variant::Cop).unwrap();
        assert!(verify_quasi_hopf(&cop, "cop").all_passed());
        // S = id on the twisted group algebra, so α_cop = S⁻¹(α) = g.
        assert_eq!(cop.alpha, h.alpha);
    }

    #[test]
    fn dual_structure_of_kz2_is_the_dual_group_algebra() {
        let h = catalog::kz2(Field::Rational).unwrap();
        let (dual, report) = dual_structure(&h).unwrap();
        assert!(report.all_passed(), "{report}");
        let q = |n: i64| Field::Rational.integer(n);
        // Dual-basis vectors are the orthogonal idempotents of the dual group
        // algebra.
        assert_eq!(dual.convolution.basis_product_dense(0, 0), vec![q(1), q(0)]);
        assert_eq!(dual.convolution.basis_product_dense(0, 1), vec![q(0), q(0)]);
        assert_eq!(dual.convolution.basis_product_dense(1, 1), vec![q(0), q(1)]);
        // g ⇀ e^1 = e^g.
        let g = h.basis_vector(1);
        let e1 = vec![q(1), q(0)];
        assert_eq!(h.dual_left_act(&g, &e1), vec![q(0), q(1)]);
    }

    #[test]
    fn dual_structure_quasi_associativity_holds_on_h2tw() {
        let h = catalog::h2tw(Field::Rational).unwrap();
        let (_, report) = dual_structure(&h).unwrap();
        assert!(report.all_passed(), "{report}");
    }
}

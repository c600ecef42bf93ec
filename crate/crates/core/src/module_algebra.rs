//! Left module algebras over a quasi-Hopf algebra, their invariants, the
//! smash product, and relative Hopf modules with the adjunction counit.
//!
//! The multiplication of a module algebra is associative only up to the
//! associator acting on the factors, so it is stored as a plain bilinear
//! table and never asserted associative; the invariants, by contrast, form an
//! honest associative algebra and are verified as one.

use crate::algebra::{ActionTable, FiniteAlgebra, MulTable};
use crate::error::{Error, Result};
use crate::exec::{first_failure_with, Exec};
use crate::linmap::{LinearMap, Subspace};
use crate::quasihopf::QuasiHopfAlgebra;
use crate::quotient::QuotientSpace;
use crate::report::{coords_string, Failure, Report};
use crate::scalar::Scalar;

/// A left `H`-module algebra: a (possibly nonassociative) unital
/// multiplication on `A` together with a unital `H`-module structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleAlgebra {
    pub mul: MulTable,
    pub unit: Vec<Scalar>,
    /// `H ⊗ A → A`.
    pub action: ActionTable,
}

impl ModuleAlgebra {
    pub fn new(mul: MulTable, unit: Vec<Scalar>, action: ActionTable) -> Result<Self> {
        if unit.len() != mul.dim() {
            return Err(Error::DimensionMismatch {
                context: "module algebra unit",
                expected: mul.dim(),
                got: unit.len(),
            });
        }
        if action.v_dim() != mul.dim() {
            return Err(Error::DimensionMismatch {
                context: "module algebra action",
                expected: mul.dim(),
                got: action.v_dim(),
            });
        }
        Ok(ModuleAlgebra { mul, unit, action })
    }

    pub fn dim(&self) -> usize {
        self.mul.dim()
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.mul.field().zero(); self.dim()];
        v[i] = self.mul.field().one();
        v
    }

    pub fn mul_vec(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.mul.mul_vec(a, b)
    }

    pub fn act(&self, h: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        self.action.act(h, a)
    }
}

/// Verifies the module-algebra axioms over all basis tuples.
pub fn verify_module_algebra(h: &QuasiHopfAlgebra, a: &ModuleAlgebra) -> Report {
    verify_module_algebra_with(h, a, Exec::default())
}

pub fn verify_module_algebra_with(h: &QuasiHopfAlgebra, a: &ModuleAlgebra, mode: Exec) -> Report {
    let mut report = Report::new("module-algebra");
    let n = h.dim();
    let m = a.dim();
    if a.action.h_dim() != n {
        report.record(
            "action-arity",
            Some(Failure {
                witness: vec![],
                lhs: a.action.h_dim().to_string(),
                rhs: n.to_string(),
            }),
        );
        return report;
    }

    // Unit laws of A.
    report.record(
        "mul-unit",
        (0..m).find_map(|i| {
            let e = a.basis_vector(i);
            let l = a.mul_vec(&a.unit, &e);
            let r = a.mul_vec(&e, &a.unit);
            (l != e || r != e).then(|| Failure {
                witness: vec![i],
                lhs: coords_string(&l),
                rhs: coords_string(&r),
            })
        }),
    );

    // 1_H · a = a and (gh) · a = g · (h · a).
    report.record(
        "action-unit",
        (0..m).find_map(|i| {
            let e = a.basis_vector(i);
            let l = a.act(h.unit(), &e);
            (l != e).then(|| Failure {
                witness: vec![i],
                lhs: coords_string(&l),
                rhs: coords_string(&e),
            })
        }),
    );
    report.record(
        "action-module",
        first_failure_with(mode, n * n * m, |t| {
            let (i, j, k) = (t / (n * m), (t / m) % n, t % m);
            let gh = h.mul_vec(&h.basis_vector(i), &h.basis_vector(j));
            let lhs = a.act(&gh, &a.basis_vector(k));
            let rhs = a.act(&h.basis_vector(i), &a.act(&h.basis_vector(j), &a.basis_vector(k)));
            (lhs != rhs).then(|| Failure {
                witness: vec![i, j, k],
                lhs: coords_string(&lhs),
                rhs: coords_string(&rhs),
            })
        }),
    );

    // (ab)c = (X¹·a)[(X²·b)(X³·c)].
    report.record(
        "mul-quasi-associative",
        first_failure_with(mode, m * m * m, |t| {
            let (i, j, k) = (t / (m * m), (t / m) % m, t % m);
            let (ea, eb, ec) = (a.basis_vector(i), a.basis_vector(j), a.basis_vector(k));
            let lhs = a.mul_vec(&a.mul_vec(&ea, &eb), &ec);
            let mut rhs = vec![h.field().zero(); m];
            for (idx, c) in h.phi.iter_sparse() {
                let xa = a.act(&h.basis_vector(idx[0]), &ea);
                let xb = a.act(&h.basis_vector(idx[1]), &eb);
                let xc = a.act(&h.basis_vector(idx[2]), &ec);
                let term = a.mul_vec(&xa, &a.mul_vec(&xb, &xc));
                for (w, v) in term.iter().enumerate() {
                    rhs[w] = rhs[w].add(&v.mul(c));
                }
            }
            (lhs != rhs).then(|| Failure {
                witness: vec![i, j, k],
                lhs: coords_string(&lhs),
                rhs: coords_string(&rhs),
            })
        }),
    );

    // h·(ab) = (h₁·a)(h₂·b).
    report.record(
        "action-mul-compat",
        first_failure_with(mode, n * m * m, |t| {
            let (i, j, k) = (t / (m * m), (t / m) % m, t % m);
            let (ea, eb) = (a.basis_vector(j), a.basis_vector(k));
            let lhs = a.act(&h.basis_vector(i), &a.mul_vec(&ea, &eb));
            let dh = h.comul_tensor(&h.basis_vector(i));
            let mut rhs = vec![h.field().zero(); m];
            for (idx, c) in dh.iter_sparse() {
                let term = a.mul_vec(
                    &a.act(&h.basis_vector(idx[0]), &ea),
                    &a.act(&h.basis_vector(idx[1]), &eb),
                );
                for (w, v) in term.iter().enumerate() {
                    rhs[w] = rhs[w].add(&v.mul(c));
                }
            }
            (lhs != rhs).then(|| Failure {
                witness: vec![i, j, k],
                lhs: coords_string(&lhs),
                rhs: coords_string(&rhs),
            })
        }),
    );

    // h·1_A = ε(h)1_A.
    report.record(
        "action-counit-unit",
        (0..n).find_map(|i| {
            let lhs = a.act(&h.basis_vector(i), &a.unit);
            let eps = h.counit_of(&h.basis_vector(i));
            let rhs: Vec<Scalar> = a.unit.iter().map(|u| u.mul(&eps)).collect();
            (lhs != rhs).then(|| Failure {
                witness: vec![i],
                lhs: coords_string(&lhs),
                rhs: coords_string(&rhs),
            })
        }),
    );

    report
}

/// Invariant vectors of an `H`-action: `{v : h·v = ε(h)v}` as an
/// echelonized subspace.
pub fn invariant_subspace(h: &QuasiHopfAlgebra, action: &ActionTable) -> Subspace {
    let n = h.dim();
    let d = action.v_dim();
    let parts: Vec<LinearMap> = (0..n)
        .map(|i| {
            let act = action.act_map(&h.basis_vector(i));
            let eps = h.counit_of(&h.basis_vector(i));
            let mut scaled_id = LinearMap::zeros(h.field(), d, d);
            for j in 0..d {
                scaled_id.set(j, j, eps.clone());
            }
            act.sub(&scaled_id)
        })
        .collect();
    Subspace::kernel_of(&LinearMap::stack(&parts))
}

/// The invariants `B = A^H` with their induced associative multiplication.
#[derive(Debug, Clone)]
pub struct InvariantsData {
    pub subspace: Subspace,
    /// Multiplication of `B` in the echelon basis of the subspace.
    pub mul: MulTable,
}

impl InvariantsData {
    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    /// The `j`-th basis invariant as a vector in `A`.
    pub fn basis_in_ambient(&self, j: usize) -> Vec<Scalar> {
        self.subspace.basis()[j].clone()
    }
}

/// Computes `B = A^H`, asserting closure under multiplication and
/// associativity; a closure failure signals an inconsistent module algebra.
pub fn invariants(h: &QuasiHopfAlgebra, a: &ModuleAlgebra) -> Result<InvariantsData> {
    let subspace = invariant_subspace(h, &a.action);
    let d = subspace.dim();
    let mut products = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            let p = a.mul_vec(&subspace.basis()[i], &subspace.basis()[j]);
            let coords = subspace.coords_of(&p).ok_or_else(|| {
                Error::Verification(format!(
                    "invariants are not closed under multiplication at pair ({i}, {j})"
                ))
            })?;
            products.push(coords);
        }
    }
    let mul = MulTable::from_products(h.field(), d, &products)?;
    // B is an honest associative algebra.
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let ij = mul.basis_product_dense(i, j);
                let jk = mul.basis_product_dense(j, k);
                let mut ek = vec![h.field().zero(); d];
                ek[k] = h.field().one();
                let mut ei = vec![h.field().zero(); d];
                ei[i] = h.field().one();
                if mul.mul_vec(&ij, &ek) != mul.mul_vec(&ei, &jk) {
                    return Err(Error::Verification(format!(
                        "invariants are not associative at triple ({i}, {j}, {k})"
                    )));
                }
            }
        }
    }
    Ok(InvariantsData { subspace, mul })
}

/// The smash product `A#H` on `A⊗H` (the `A` leg first, row-major), with the
/// induced left `H`-action `h × (a#g) = h₁·a # h₂g`.
#[derive(Debug, Clone)]
pub struct SmashAlgebra {
    pub algebra: FiniteAlgebra,
    /// `H ⊗ (A#H) → A#H` from multiplying by `1_A#h` on the left.
    pub h_action: ActionTable,
    pub a_dim: usize,
    pub h_dim: usize,
    pub a_unit: Vec<Scalar>,
    pub h_unit: Vec<Scalar>,
}

impl SmashAlgebra {
    pub fn flat(&self, a: usize, h: usize) -> usize {
        a * self.h_dim + h
    }

    pub fn dim(&self) -> usize {
        self.a_dim * self.h_dim
    }

    /// `a # h` for vectors `a ∈ A`, `h ∈ H`.
    pub fn pair(&self, a: &[Scalar], h: &[Scalar]) -> Vec<Scalar> {
        let field = self.algebra.field();
        let mut out = vec![field.zero(); self.dim()];
        for (i, ca) in a.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, ch) in h.iter().enumerate() {
                if !ch.is_zero() {
                    out[self.flat(i, j)] = ca.mul(ch);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        self.algebra.mul_vec(u, v)
    }
}

/// Builds `A#H` with multiplication
/// `(a#h)(b#g) = (x¹·a)(x²h₁·b) # x³h₂g`, verifying associativity, the unit
/// `1_A#1`, the embedding `h ↦ 1_A#h`, and that the induced `H`-action is
/// left multiplication by the embedded element.
pub fn smash_product(h: &QuasiHopfAlgebra, a: &ModuleAlgebra) -> Result<(SmashAlgebra, Report)> {
    smash_product_with(h, a, Exec::default())
}

pub fn smash_product_with(
    h: &QuasiHopfAlgebra,
    a: &ModuleAlgebra,
    mode: Exec,
) -> Result<(SmashAlgebra, Report)> {
    let n = h.dim();
    let m = a.dim();
    let dim = m * n;
    let field = h.field();
    let flat = |ai: usize, hi: usize| ai * n + hi;

    let mut products: Vec<Vec<Scalar>> = vec![vec![field.zero(); dim]; dim * dim];
    for ai in 0..m {
        for hi in 0..n {
            let dh = h.comul_tensor(&h.basis_vector(hi));
            for bi in 0..m {
                for gi in 0..n {
                    let mut out = vec![field.zero(); dim];
                    for (xi, cx) in h.phi_inv.iter_sparse() {
                        for (di, cd) in dh.iter_sparse() {
                            let u = a.act(&h.basis_vector(xi[0]), &a.basis_vector(ai));
                            let x2h1 =
                                h.mul_vec(&h.basis_vector(xi[1]), &h.basis_vector(di[0]));
                            let v = a.act(&x2h1, &a.basis_vector(bi));
                            let w = a.mul_vec(&u, &v);
                            let x3h2 =
                                h.mul_vec(&h.basis_vector(xi[2]), &h.basis_vector(di[1]));
                            let z = h.mul_vec(&x3h2, &h.basis_vector(gi));
                            let c = cx.mul(cd);
                            for (wi, wc) in w.iter().enumerate() {
                                if wc.is_zero() {
                                    continue;
                                }
                                for (zi, zc) in z.iter().enumerate() {
                                    if !zc.is_zero() {
                                        out[flat(wi, zi)] =
                                            out[flat(wi, zi)].add(&wc.mul(zc).mul(&c));
                                    }
                                }
                            }
                        }
                    }
                    products[flat(ai, hi) * dim + flat(bi, gi)] = out;
                }
            }
        }
    }
    let mul = MulTable::from_products(field, dim, &products)?;
    let mut unit = vec![field.zero(); dim];
    for (i, ca) in a.unit.iter().enumerate() {
        for (j, ch) in h.unit().iter().enumerate() {
            if !ca.is_zero() && !ch.is_zero() {
                unit[flat(i, j)] = ca.mul(ch);
            }
        }
    }
    let algebra = FiniteAlgebra::new(mul, unit)?;
    let mut report = algebra.verify_with("smash-product", mode);

    // Embedding h ↦ 1_A#h is an algebra morphism.
    let embed = |hv: &[Scalar]| -> Vec<Scalar> {
        let mut out = vec![field.zero(); dim];
        for (i, ca) in a.unit.iter().enumerate() {
            for (j, ch) in hv.iter().enumerate() {
                if !ca.is_zero() && !ch.is_zero() {
                    out[flat(i, j)] = ca.mul(ch);
                }
            }
        }
        out
    };
    report.record(
        "smash-embedding-morphism",
        (0..n * n).find_map(|t| {
            let (i, j) = (t / n, t % n);
            let lhs = embed(&h.mul_vec(&h.basis_vector(i), &h.basis_vector(j)));
            let rhs = algebra.mul_vec(&embed(&h.basis_vector(i)), &embed(&h.basis_vector(j)));
            (lhs != rhs).then(|| Failure {
                witness: vec![i, j],
                lhs: coords_string(&lhs),
                rhs: coords_string(&rhs),
            })
        }),
    );

    // h × (a#g) = h₁·a # h₂g, tabulated.
    let mut action_products: Vec<Vec<Scalar>> = Vec::with_capacity(n * dim);
    for hi in 0..n {
        let dh = h.comul_tensor(&h.basis_vector(hi));
        for u in 0..dim {
            let (ai, gi) = (u / n, u % n);
            let mut out = vec![field.zero(); dim];
            for (di, cd) in dh.iter_sparse() {
                let xa = a.act(&h.basis_vector(di[0]), &a.basis_vector(ai));
                let hg = h.mul_vec(&h.basis_vector(di[1]), &h.basis_vector(gi));
                for (wi, wc) in xa.iter().enumerate() {
                    if wc.is_zero() {
                        continue;
                    }
                    for (zi, zc) in hg.iter().enumerate() {
                        if !zc.is_zero() {
                            out[flat(wi, zi)] = out[flat(wi, zi)].add(&wc.mul(zc).mul(cd));
                        }
                    }
                }
            }
            action_products.push(out);
        }
    }
    let h_action = ActionTable::from_products(field, n, dim, &action_products)?;

    // The induced action is left multiplication by the embedded element.
    report.record(
        "smash-h-action-is-left-mult",
        (0..n * dim).find_map(|t| {
            let (hi, u) = (t / dim, t % dim);
            let mut eu = vec![field.zero(); dim];
            eu[u] = field.one();
            let lhs = h_action.act(&h.basis_vector(hi), &eu);
            let rhs = algebra.mul_vec(&embed(&h.basis_vector(hi)), &eu);
            (lhs != rhs).then(|| Failure {
                witness: vec![hi, u],
                lhs: coords_string(&lhs),
                rhs: coords_string(&rhs),
            })
        }),
    );

    Ok((
        SmashAlgebra {
            algebra,
            h_action,
            a_dim: m,
            h_dim: n,
            a_unit: a.unit.clone(),
            h_unit: h.unit().to_vec(),
        },
        report,
    ))
}

/// A left `(H, A)`-Hopf module: an `H`-module with a weak `A`-action.
#[derive(Debug, Clone)]
pub struct RelativeModule {
    /// `H ⊗ M → M`.
    pub h_action: ActionTable,
    /// `A ⊗ M → M`.
    pub a_action: ActionTable,
}

impl RelativeModule {
    pub fn dim(&self) -> usize {
        self.h_action.v_dim()
    }

    /// `A` over itself, with its regular structures.
    pub fn regular(a: &ModuleAlgebra) -> Result<RelativeModule> {
        let m = a.dim();
        let field = a.mul.field();
        let mut a_products = Vec::with_capacity(m * m);
        for i in 0..m {
            for j in 0..m {
                a_products.push(a.mul.basis_product_dense(i, j));
            }
        }
        Ok(RelativeModule {
            h_action: a.action.clone(),
            a_action: ActionTable::from_products(field, m, m, &a_products)?,
        })
    }

    /// `A#H` with the action of `H` and `A` along the embeddings
    /// `a·m = (a#1)m`, `h·m = (1_A#h)m`.
    pub fn from_smash(smash: &SmashAlgebra) -> Result<RelativeModule> {
        let dim = smash.dim();
        let m = smash.a_dim;
        let field = smash.algebra.field();
        let mut a_products = Vec::with_capacity(m * dim);
        for ai in 0..m {
            let mut ea = vec![field.zero(); m];
            ea[ai] = field.one();
            let embedded = smash.pair(&ea, &smash.h_unit);
            for u in 0..dim {
                let mut eu = vec![field.zero(); dim];
                eu[u] = field.one();
                a_products.push(smash.mul_vec(&embedded, &eu));
            }
        }
        Ok(RelativeModule {
            h_action: smash.h_action.clone(),
            a_action: ActionTable::from_products(field, m, dim, &a_products)?,
        })
    }
}

/// Verifies the three relative Hopf-module axioms and that the induced
/// `A#H`-action `(a#h)m = a(hm)` is a unital algebra action.
pub fn verify_relative_module(
    h: &QuasiHopfAlgebra,
    a: &ModuleAlgebra,
    m: &RelativeModule,
    smash: &SmashAlgebra,
) -> Report {
    let mut report = Report::new("relative-module");
    let n = h.dim();
    let ma = a.dim();
    let md = m.dim();
    let field = h.field();

    // 1_A m = m.
    report.record(
        "module-unit",
        (0..md).find_map(|u| {
            let mut eu = vec![field.zero(); md];
            eu[u] = field.one();
            let l = m.a_action.act(&a.unit, &eu);
            (l != eu).then(|| Failure {
                witness: vec![u],
                lhs: coords_string(&l),
                rhs: coords_string(&eu),
            })
        }),
    );

    // (ab)m = (X¹·a)[(X²·b)(X³m)].
    report.record(
        "module-quasi-associative",
        first_failure_with(Exec::default(), ma * ma * md, |t| {
            let (i, j, u) = (t / (ma * md), (t / md) % ma, t % md);
            let mut eu = vec![field.zero(); md];
            eu[u] = field.one();
            let ab = a.mul_vec(&a.basis_vector(i), &a.basis_vector(j));
            let lhs = m.a_action.act(&ab, &eu);
            let mut rhs = vec![field.zero(); md];
            for (idx, c) in h.phi.iter_sparse() {
                let xa = a.act(&h.basis_vector(idx[0]), &a.basis_vector(i));
                let xb = a.act(&h.basis_vector(idx[1]), &a.basis_vector(j));
                let xm = m.h_action.act(&h.basis_vector(idx[2]), &eu);
                let term = m.a_action.act(&xa, &m.a_action.act(&xb, &xm));
                for (w, v) in term.iter().enumerate() {
                    rhs[w] = rhs[w].add(&v.mul(c));
                }
            }
            (lhs != rhs).then(|| Failure {
                witness: vec![i, j, u],
                lhs: coords_string(&lhs),
                rhs: coords_string(&rhs),
            })
        }),
    );

    // h(am) = (h₁·a)(h₂m).
    report.record(
        "module-action-compat",
        first_failure_with(Exec::default(), n * ma * md, |t| {
            let (i, j, u) = (t / (ma * md), (t / md) % ma, t % md);
            let mut eu = vec![field.zero(); md];
            eu[u] = field.one();
            let lhs = m.h_action.act(
                &h.basis_vector(i),
                &m.a_action.act(&a.basis_vector(j), &eu),
            );
            let dh = h.comul_tensor(&h.basis_vector(i));
            let mut rhs = vec![field.zero(); md];
            for (idx, c) in dh.iter_sparse() {
                let xa = a.act(&h.basis_vector(idx[0]), &a.basis_vector(j));
                let xm = m.h_action.act(&h.basis_vector(idx[1]), &eu);
                let term = m.a_action.act(&xa, &xm);
                for (w, v) in term.iter().enumerate() {
                    rhs[w] = rhs[w].add(&v.mul(c));
                }
            }
            (lhs != rhs).then(|| Failure {
                witness: vec![i, j, u],
                lhs: coords_string(&lhs),
                rhs: coords_string(&rhs),
            })
        }),
    );

    // (a#h)m := a(hm) is an algebra action of A#H.
    let smash_act = |s: usize, mv: &[Scalar]| -> Vec<Scalar> {
        let (ai, hi) = (s / n, s % n);
        m.a_action.act(
            &a.basis_vector(ai),
            &m.h_action.act(&h.basis_vector(hi), mv),
        )
    };
    report.record(
        "smash-action-valid",
        first_failure_with(Exec::default(), smash.dim() * smash.dim() * md, |t| {
            let d = smash.dim();
            let (u, v, w) = (t / (d * md), (t / md) % d, t % md);
            let mut ew = vec![field.zero(); md];
            ew[w] = field.one();
            let mut eu = vec![field.zero(); d];
            eu[u] = field.one();
            let mut ev = vec![field.zero(); d];
            ev[v] = field.one();
            let uv = smash.mul_vec(&eu, &ev);
            // [(u v)] m
            let mut lhs = vec![field.zero(); md];
            for (s, c) in uv.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let term = smash_act(s, &ew);
                for (k, x) in term.iter().enumerate() {
                    lhs[k] = lhs[k].add(&x.mul(c));
                }
            }
            let rhs = smash_act(u, &smash_act(v, &ew));
            (lhs != rhs).then(|| Failure {
                witness: vec![u, v, w],
                lhs: coords_string(&lhs),
                rhs: coords_string(&rhs),
            })
        }),
    );

    report
}

/// The adjunction counit `ε_M : A⊗_B M^H → M`, `a⊗m ↦ am`, as a concrete
/// matrix on the balanced quotient, with its bijectivity verdict and the
/// `A#H`-linearity check.
#[derive(Debug, Clone)]
pub struct CounitData {
    pub invariants_m: Subspace,
    pub quotient: QuotientSpace,
    /// Matrix of `ε_M` on the quotient basis.
    pub eps: LinearMap,
    pub bijective: bool,
    pub report: Report,
}

pub fn counit_epsilon_m(
    h: &QuasiHopfAlgebra,
    a: &ModuleAlgebra,
    b: &InvariantsData,
    m: &RelativeModule,
) -> Result<CounitData> {
    let field = h.field();
    let ma = a.dim();
    let md = m.dim();
    let n = h.dim();
    let inv_m = invariant_subspace(h, &m.h_action);
    let dm = inv_m.dim();
    let ambient = ma * dm;
    let flat = |ai: usize, mi: usize| ai * dm + mi;

    // Balancing relations (a·b)⊗m − a⊗(b·m) over basis elements.
    let mut relations = Vec::new();
    for bi in 0..b.dim() {
        let bv = b.basis_in_ambient(bi);
        for ai in 0..ma {
            let ab = a.mul_vec(&a.basis_vector(ai), &bv);
            for mi in 0..dm {
                let bm = m.a_action.act(&bv, &inv_m.basis()[mi]);
                let bm_coords = inv_m.coords_of(&bm).ok_or_else(|| {
                    Error::Verification(
                        "invariants of the module are not stable under B".to_string(),
                    )
                })?;
                let mut rel = vec![field.zero(); ambient];
                for (k, c) in ab.iter().enumerate() {
                    rel[flat(k, mi)] = rel[flat(k, mi)].add(c);
                }
                for (k, c) in bm_coords.iter().enumerate() {
                    let cur = rel[flat(ai, k)].clone();
                    rel[flat(ai, k)] = cur.sub(c);
                }
                relations.push(rel);
            }
        }
    }
    let quotient = QuotientSpace::new(field, ambient, &relations);

    // ε_M on the ambient space.
    let mut ambient_eps = LinearMap::zeros(field, md, ambient);
    for ai in 0..ma {
        for mi in 0..dm {
            let am = m.a_action.act(&a.basis_vector(ai), &inv_m.basis()[mi]);
            for (k, c) in am.iter().enumerate() {
                ambient_eps.set(k, flat(ai, mi), c.clone());
            }
        }
    }
    let mut report = Report::new("adjunction-counit");

    // ε_M descends to the quotient.
    report.record(
        "counit-descends",
        relations
            .iter()
            .enumerate()
            .find_map(|(i, rel)| {
                let img = ambient_eps.apply(rel);
                img.iter().any(|c| !c.is_zero()).then(|| Failure {
                    witness: vec![i],
                    lhs: coords_string(&img),
                    rhs: "0".to_string(),
                })
            }),
    );

    let eps = ambient_eps.compose(&quotient.section_map());
    let bijective = quotient.dim() == md && eps.rank() == md;

    // ε_M is left A#H-linear: ε_M((a#h)(b⊗m)) = (a#h)ε_M(b⊗m), where
    // (a#h)(b⊗m) = a(h·b)⊗m on the domain.
    report.record(
        "counit-linear",
        first_failure_with(Exec::default(), ma * n * ma * dm, |t| {
            let (ai, hi, bi, mi) = (
                t / (n * ma * dm),
                (t / (ma * dm)) % n,
                (t / dm) % ma,
                t % dm,
            );
            let hb = a.act(&h.basis_vector(hi), &a.basis_vector(bi));
            let ahb = a.mul_vec(&a.basis_vector(ai), &hb);
            let mut dom = vec![field.zero(); ambient];
            for (k, c) in ahb.iter().enumerate() {
                dom[flat(k, mi)] = c.clone();
            }
            let lhs = ambient_eps.apply(&dom);
            let bm = m.a_action.act(&a.basis_vector(bi), &inv_m.basis()[mi]);
            let rhs = m.a_action.act(
                &a.basis_vector(ai),
                &m.h_action.act(&h.basis_vector(hi), &bm),
            );
            (lhs != rhs).then(|| Failure {
                witness: vec![ai, hi, bi, mi],
                lhs: coords_string(&lhs),
                rhs: coords_string(&rhs),
            })
        }),
    );
    report.verdict("counit-bijective", bijective);

    Ok(CounitData {
        invariants_m: inv_m,
        quotient,
        eps,
        bijective,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::scalar::Field;

    #[test]
    fn trivial_module_algebra_passes() {
        for name in ["KZ2", "H2TW", "SW4"] {
            let h = catalog::quasi_hopf(name, Field::Rational).unwrap();
            let a = catalog::trivial_module_algebra(&h).unwrap();
            let report = verify_module_algebra(&h, &a);
            assert!(report.all_passed(), "{name}: {report}");
            let b = invariants(&h, &a).unwrap();
            assert_eq!(b.dim(), 1);
        }
    }

    #[test]
    fn an_algebra_acting_on_itself_by_multiplication_is_rejected() {
        // Left multiplication is not a module-algebra action: the unit
        // axiom h·1 = ε(h)1 already fails at h = g.
        let h = catalog::h2tw(Field::Rational).unwrap();
        let field = Field::Rational;
        let mut products = Vec::new();
        for i in 0..2 {
            for j in 0..2 {
                products.push(h.algebra.mul.basis_product_dense(i, j));
            }
        }
        let action = ActionTable::from_products(field, 2, 2, &products).unwrap();
        let a = ModuleAlgebra::new(h.algebra.mul.clone(), h.algebra.unit.clone(), action).unwrap();
        let report = verify_module_algebra(&h, &a);
        let c = report.check("action-counit-unit").unwrap();
        assert_eq!(c.status, crate::report::Status::Fail);
        assert_eq!(c.witness, Some(vec![1]));
    }

    #[test]
    fn trivial_action_that_ignores_the_counit_fails() {
        let h = catalog::sw4(Field::Rational).unwrap();
        let field = Field::Rational;
        let mul = MulTable::from_products(field, 1, &[vec![field.one()]]).unwrap();
        // h·1 = (coefficient sum)·1 instead of ε(h)·1 breaks the axioms at x.
        let products: Vec<Vec<Scalar>> = (0..4).map(|_| vec![field.one()]).collect();
        let action = ActionTable::from_products(field, 4, 1, &products).unwrap();
        let a = ModuleAlgebra::new(mul, vec![field.one()], action).unwrap();
        let report = verify_module_algebra(&h, &a);
        assert!(!report.all_passed());
        let c = report.check("action-counit-unit").unwrap();
        assert_eq!(c.status, crate::report::Status::Fail);
    }

    #[test]
    fn smash_of_trivial_is_the_algebra_itself() {
        let h = catalog::kz2(Field::Rational).unwrap();
        let a = catalog::trivial_module_algebra(&h).unwrap();
        let (smash, report) = smash_product(&h, &a).unwrap();
        assert!(report.all_passed(), "{report}");
        assert_eq!(smash.dim(), 2);
        // A = k collapses a#h to h: the product table is the one of H.
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(
                    smash.algebra.mul.basis_product_dense(i, j),
                    h.algebra.mul.basis_product_dense(i, j)
                );
            }
        }
    }

    #[test]
    fn regular_module_is_a_relative_module() {
        let h = catalog::h2tw(Field::Rational).unwrap();
        let a = catalog::trivial_module_algebra(&h).unwrap();
        let (smash, _) = smash_product(&h, &a).unwrap();
        let m = RelativeModule::regular(&a).unwrap();
        let report = verify_relative_module(&h, &a, &m, &smash);
        assert!(report.all_passed(), "{report}");
    }

    #[test]
    fn smash_product_is_a_relative_module_over_itself() {
        let h = catalog::h2tw(Field::Rational).unwrap();
        let a = catalog::trivial_module_algebra(&h).unwrap();
        let (smash, _) = smash_product(&h, &a).unwrap();
        let m = RelativeModule::from_smash(&smash).unwrap();
        let report = verify_relative_module(&h, &a, &m, &smash);
        assert!(report.all_passed(), "{report}");
    }

    #[test]
    fn zero_a_action_fails_the_unit_axiom() {
        let h = catalog::kz2(Field::Rational).unwrap();
        let a = catalog::trivial_module_algebra(&h).unwrap();
        let (smash, _) = smash_product(&h, &a).unwrap();
        let field = Field::Rational;
        let zero = vec![vec![field.zero(); 1]; 1];
        let m = RelativeModule {
            h_action: a.action.clone(),
            a_action: ActionTable::from_products(field, 1, 1, &zero).unwrap(),
        };
        let report = verify_relative_module(&h, &a, &m, &smash);
        let unit = report.check("module-unit").unwrap();
        assert_eq!(unit.status, crate::report::Status::Fail);
    }

    #[test]
    fn counit_for_trivial_module_algebra_over_itself() {
        // M = A = k over the group algebra of Z/2 in characteristic zero:
        // A⊗_B A^H = k and ε is bijective.
        let h = catalog::kz2(Field::Rational).unwrap();
        let a = catalog::trivial_module_algebra(&h).unwrap();
        let b = invariants(&h, &a).unwrap();
        let m = RelativeModule::regular(&a).unwrap();
        let data = counit_epsilon_m(&h, &a, &b, &m).unwrap();
        assert!(data.report.all_passed(), "{}", data.report);
        assert!(data.bijective);
    }

    #[test]
    fn smash_invariants_have_the_dimension_of_a() {
        let h = catalog::h2tw(Field::Rational).unwrap();
        let a = catalog::trivial_module_algebra(&h).unwrap();
        let (smash, _) = smash_product(&h, &a).unwrap();
        let inv = invariant_subspace(&h, &smash.h_action);
        assert_eq!(inv.dim(), a.dim());
    }
}

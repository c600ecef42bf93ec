//! Left integrals, the modular element, and the Frobenius-type isomorphism
//! `θ_t : H* → H` with its two-sided inverse built from the projection onto
//! the integral space.

use crate::derived::{compute_pq, PqElements};
use crate::error::{Error, Result};
use crate::linmap::{in_span, LinearMap, Subspace};
use crate::quasihopf::QuasiHopfAlgebra;
use crate::report::{coords_string, Failure, Report};
use crate::scalar::Scalar;
use crate::tensor::Tensor;

/// A chosen nonzero left integral with the modular data built from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralData {
    /// Normalized so its first nonzero coordinate is 1.
    pub t: Vec<Scalar>,
    pub integral_dim: usize,
    /// The algebra morphism `γ` with `t·h = γ(h)·t`, in dual coordinates.
    pub gamma: Vec<Scalar>,
    /// `Λ = γ(q_L²) q_L¹`.
    pub lambda: Vec<Scalar>,
}

/// The space of left integrals `{t : h·t = ε(h)t}`; returns the normalized
/// spanning vector and asserts it is one-dimensional.
pub fn left_integrals(h: &QuasiHopfAlgebra) -> Result<(Vec<Scalar>, usize)> {
    let n = h.dim();
    let parts: Vec<LinearMap> = (0..n)
        .map(|i| {
            let left = h.algebra.mul.left_mul_map(&h.basis_vector(i));
            let eps = h.counit_of(&h.basis_vector(i));
            let mut scaled = LinearMap::zeros(h.field(), n, n);
            for j in 0..n {
                scaled.set(j, j, eps.clone());
            }
            left.sub(&scaled)
        })
        .collect();
    let kernel = Subspace::kernel_of(&LinearMap::stack(&parts));
    let dim = kernel.dim();
    if dim == 0 {
        return Err(Error::ZeroIntegralSpace);
    }
    if dim != 1 {
        return Err(Error::IntegralDimension(dim));
    }
    let mut t = kernel.basis()[0].clone();
    let lead = t
        .iter()
        .find(|c| !c.is_zero())
        .cloned()
        .expect("kernel vector is nonzero");
    let inv = lead.inv().expect("leading coordinate is nonzero");
    for c in t.iter_mut() {
        *c = c.mul(&inv);
    }
    Ok((t, dim))
}

/// Extracts `γ` from `t·h ∈ span(t)` coordinate by coordinate, verifies it
/// is a unital algebra morphism, and computes `Λ = γ(q_L²) q_L¹`.
pub fn modular_element(
    h: &QuasiHopfAlgebra,
    t: &[Scalar],
) -> Result<(Vec<Scalar>, Vec<Scalar>)> {
    let n = h.dim();
    let lead = t
        .iter()
        .position(|c| !c.is_zero())
        .ok_or(Error::ZeroIntegralSpace)?;
    let lead_inv = t[lead].inv().expect("nonzero");
    let mut gamma = Vec::with_capacity(n);
    for j in 0..n {
        let th = h.mul_vec(t, &h.basis_vector(j));
        let coeff = th[lead].mul(&lead_inv);
        // Proportionality to t must be exact.
        let expect: Vec<Scalar> = t.iter().map(|c| c.mul(&coeff)).collect();
        if th != expect {
            return Err(Error::NotProportional(j));
        }
        gamma.push(coeff);
    }
    // Multiplicative and unital.
    for i in 0..n {
        for j in 0..n {
            let gij = h.eval(&gamma, &h.mul_vec(&h.basis_vector(i), &h.basis_vector(j)));
            if gij != gamma[i].mul(&gamma[j]) {
                return Err(Error::Verification(format!(
                    "modular element is not multiplicative at pair ({i}, {j})"
                )));
            }
        }
    }
    if !h.eval(&gamma, h.unit()).is_one() {
        return Err(Error::Verification(
            "modular element is not unital".to_string(),
        ));
    }
    let pq = compute_pq(h)?;
    let mut lambda = vec![h.field().zero(); n];
    for (idx, c) in pq.q_l.iter_sparse() {
        let weight = gamma[idx[1]].mul(c);
        lambda[idx[0]] = lambda[idx[0]].add(&weight);
    }
    Ok((gamma, lambda))
}

/// Convenience: integral, dimension, modular element and `Λ` together.
pub fn integral_data(h: &QuasiHopfAlgebra) -> Result<IntegralData> {
    let (t, integral_dim) = left_integrals(h)?;
    let (gamma, lambda) = modular_element(h, &t)?;
    Ok(IntegralData {
        t,
        integral_dim,
        gamma,
        lambda,
    })
}

/// `S(t) = Λ (γ ⇀ t)`, checked exactly.
pub fn check_s_of_t(h: &QuasiHopfAlgebra, data: &IntegralData) -> Report {
    let mut report = Report::new("antipode-of-integral");
    let lhs = h.apply_s(&data.t);
    let rhs = h.mul_vec(&data.lambda, &h.weak_left(&data.gamma, &data.t));
    report.record(
        "antipode-of-integral",
        (lhs != rhs).then(|| Failure {
            witness: vec![],
            lhs: coords_string(&lhs),
            rhs: coords_string(&rhs),
        }),
    );
    report
}

/// The projection `P(h) = Σ_i e^i(S⁻²(q_L¹ e_{i1} S(β)) h) q_L² e_{i2}`
/// onto the space of left integrals.
pub fn projection_p(h: &QuasiHopfAlgebra, pq: &PqElements) -> Result<LinearMap> {
    let n = h.dim();
    let s_inv = h.antipode_inv()?;
    let s_inv2 = s_inv.compose(&s_inv);
    let s_beta = h.apply_s(&h.beta);
    let mut p = LinearMap::zeros(h.field(), n, n);
    for j in 0..n {
        let mut col = vec![h.field().zero(); n];
        for i in 0..n {
            let di = h.comul_tensor(&h.basis_vector(i));
            for (didx, cd) in di.iter_sparse() {
                for (qidx, cq) in pq.q_l.iter_sparse() {
                    let inner = h.mul_vec(
                        &h.mul_vec(&h.basis_vector(qidx[0]), &h.basis_vector(didx[0])),
                        &s_beta,
                    );
                    let w = h.mul_vec(&s_inv2.apply(&inner), &h.basis_vector(j));
                    let scalar = w[i].mul(cd).mul(cq);
                    if scalar.is_zero() {
                        continue;
                    }
                    let tail = h.mul_vec(&h.basis_vector(qidx[1]), &h.basis_vector(didx[1]));
                    for (k, v) in tail.iter().enumerate() {
                        col[k] = col[k].add(&v.mul(&scalar));
                    }
                }
            }
        }
        for (k, v) in col.into_iter().enumerate() {
            p.set(k, j, v);
        }
    }
    Ok(p)
}

/// The Frobenius-type map `θ_t(h*) = h*(q_L¹ t₁ p_L¹) q_L² t₂ p_L²` as a
/// matrix `H* → H` in the dual/primal bases.
pub fn frobenius_theta_t(
    h: &QuasiHopfAlgebra,
    t: &[Scalar],
    pq: &PqElements,
) -> Result<LinearMap> {
    let n = h.dim();
    let dt = h.comul_tensor(t);
    let mut theta = LinearMap::zeros(h.field(), n, n);
    for (tidx, ct) in dt.iter_sparse() {
        for (qidx, cq) in pq.q_l.iter_sparse() {
            for (pidx, cp) in pq.p_l.iter_sparse() {
                let left = h.mul_vec(
                    &h.mul_vec(&h.basis_vector(qidx[0]), &h.basis_vector(tidx[0])),
                    &h.basis_vector(pidx[0]),
                );
                let right = h.mul_vec(
                    &h.mul_vec(&h.basis_vector(qidx[1]), &h.basis_vector(tidx[1])),
                    &h.basis_vector(pidx[1]),
                );
                let c = ct.mul(cq).mul(cp);
                for i in 0..n {
                    let scalar = left[i].mul(&c);
                    if scalar.is_zero() {
                        continue;
                    }
                    for (k, v) in right.iter().enumerate() {
                        if !v.is_zero() {
                            let cur = theta.get(k, i).clone();
                            theta.set(k, i, cur.add(&v.mul(&scalar)));
                        }
                    }
                }
            }
        }
    }
    if theta.rank() != n {
        return Err(Error::ThetaSingular);
    }
    Ok(theta)
}

/// Verifies the projection and Frobenius maps: `P` lands in the integral
/// space and is nonzero, `θ_t` and the inverse built from `P` compose to the
/// identity both ways, and `θ_t` intertwines the `H`-actions.
pub fn verify_theta(h: &QuasiHopfAlgebra, data: &IntegralData) -> Result<Report> {
    let mut report = Report::new("frobenius");
    let n = h.dim();
    let pq = compute_pq(h)?;
    let p = projection_p(h, &pq)?;
    let s_inv = h.antipode_inv()?;

    // P(h) ∈ ∫ for all basis h, and P ≠ 0.
    let span = vec![data.t.clone()];
    report.record(
        "projection-lands-in-integrals",
        (0..n).find_map(|j| {
            let img = p.column(j);
            (!in_span(&span, &img)).then(|| Failure {
                witness: vec![j],
                lhs: coords_string(&img),
                rhs: format!("span of {}", coords_string(&data.t)),
            })
        }),
    );
    if p.is_zero() {
        return Err(Error::ProjectionZero);
    }
    report.pass("projection-nonzero");

    let theta = frobenius_theta_t(h, &data.t, &pq)?;

    // Θ⁻¹(h) = Σ_i P(e_i h) ⊗ e^i S⁻¹ on the t-slice: coefficients of t.
    let lead = data.t.iter().position(|c| !c.is_zero()).expect("t nonzero");
    let lead_inv = data.t[lead].inv().expect("nonzero");
    let mut theta_inv = LinearMap::zeros(h.field(), n, n);
    for j in 0..n {
        let mut col = vec![h.field().zero(); n];
        for i in 0..n {
            let img = p.apply(&h.mul_vec(&h.basis_vector(i), &h.basis_vector(j)));
            let coeff = img[lead].mul(&lead_inv);
            if coeff.is_zero() {
                continue;
            }
            // e^i ∘ S⁻¹ in dual coordinates is row i of S⁻¹.
            for k in 0..n {
                let v = s_inv.get(i, k);
                if !v.is_zero() {
                    col[k] = col[k].add(&v.mul(&coeff));
                }
            }
        }
        for (k, v) in col.into_iter().enumerate() {
            theta_inv.set(k, j, v);
        }
    }

    let id = LinearMap::identity(h.field(), n);
    let fwd = theta.compose(&theta_inv);
    let bwd = theta_inv.compose(&theta);
    report.record(
        "theta-two-sided-inverse",
        (fwd != id || bwd != id).then(|| Failure {
            witness: vec![],
            lhs: format!("theta∘theta⁻¹ rank {}", fwd.rank()),
            rhs: format!("theta⁻¹∘theta rank {}", bwd.rank()),
        }),
    );

    // H-linearity: θ_t(h* ↼ S(h)) = h · θ_t(h*).
    report.record(
        "theta-h-linear",
        (0..n * n).find_map(|w| {
            let (hi, fi) = (w / n, w % n);
            let mut dual = vec![h.field().zero(); n];
            dual[fi] = h.field().one();
            let moved = h.dual_right_act(&dual, &h.apply_s(&h.basis_vector(hi)));
            let lhs = theta.apply(&moved);
            let rhs = h.mul_vec(&h.basis_vector(hi), &theta.apply(&dual));
            (lhs != rhs).then(|| Failure {
                witness: vec![hi, fi],
                lhs: coords_string(&lhs),
                rhs: coords_string(&rhs),
            })
        }),
    );

    report.verdict("theta-bijective", true);
    Ok(report)
}

/// The four integral identities in `H⊗H`: the antipode switches across
/// `q_L Δ(t)` and `q_R Δ(t)`, and the `β`-absorption laws.
pub fn verify_integral_identities(h: &QuasiHopfAlgebra, t: &[Scalar]) -> Result<Report> {
    let mut report = Report::new("integral-identities");
    let n = h.dim();
    let pq = compute_pq(h)?;
    let s_inv = h.antipode_inv()?;
    let dt = h.comul_tensor(t);
    let one = Tensor::from_vector(h.field(), h.unit());
    let tensor_left = |v: &[Scalar]| Tensor::from_vector(h.field(), v).outer(&one);
    let tensor_right = |v: &[Scalar]| one.outer(&Tensor::from_vector(h.field(), v));

    let ql_dt = h.hmul(&pq.q_l, &dt);
    let qr_dt = h.hmul(&pq.q_r, &dt);

    // (S(h)⊗1) q Δ(t) = (1⊗h) q Δ(t) for q = q_L and q_R.
    for (name, q_dt) in [("integral-antipode-switch-ql", &ql_dt),
        ("integral-antipode-switch-qr", &qr_dt)]
    {
        report.record(
            name,
            (0..n).find_map(|i| {
                let lhs = h.hmul(&tensor_left(&h.apply_s(&h.basis_vector(i))), q_dt);
                let rhs = h.hmul(&tensor_right(&h.basis_vector(i)), q_dt);
                (lhs != rhs).then(|| Failure {
                    witness: vec![i],
                    lhs: coords_string(lhs.coords()),
                    rhs: coords_string(rhs.coords()),
                })
            }),
        );
    }

    // Δ(t) = (β⊗1) q Δ(t) for both q.
    {
        let l = h.hmul(&tensor_left(&h.beta), &ql_dt);
        let r = h.hmul(&tensor_left(&h.beta), &qr_dt);
        report.record(
            "integral-beta-absorb",
            (l != dt || r != dt).then(|| Failure {
                witness: vec![],
                lhs: coords_string(l.coords()),
                rhs: coords_string(dt.coords()),
            }),
        );
    }
    // Δ(t) = (1⊗S⁻¹(β)) q Δ(t) for both q.
    {
        let sb = s_inv.apply(&h.beta);
        let l = h.hmul(&tensor_right(&sb), &ql_dt);
        let r = h.hmul(&tensor_right(&sb), &qr_dt);
        report.record(
            "integral-antipode-beta-absorb",
            (l != dt || r != dt).then(|| Failure {
                witness: vec![],
                lhs: coords_string(l.coords()),
                rhs: coords_string(dt.coords()),
            }),
        );
    }

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::scalar::Field;

    fn q(n: i64) -> Scalar {
        Field::Rational.integer(n)
    }

    #[test]
    fn kz2_integral_is_one_plus_g() {
        let h = catalog::kz2(Field::Rational).unwrap();
        let data = integral_data(&h).unwrap();
        assert_eq!(data.t, vec![q(1), q(1)]);
        assert_eq!(data.integral_dim, 1);
        // γ = ε and Λ = 1.
        assert_eq!(data.gamma, vec![q(1), q(1)]);
        assert_eq!(data.lambda, vec![q(1), q(0)]);
        assert!(check_s_of_t(&h, &data).all_passed());
    }

    #[test]
    fn h2tw_integral_has_lambda_g() {
        let h = catalog::h2tw(Field::Rational).unwrap();
        let data = integral_data(&h).unwrap();
        assert_eq!(data.t, vec![q(1), q(1)]);
        assert_eq!(data.gamma, vec![q(1), q(1)]);
        assert_eq!(data.lambda, vec![q(0), q(1)]);
        assert!(check_s_of_t(&h, &data).all_passed());
    }

    #[test]
    fn sw4_integral_and_modular_element() {
        let h = catalog::sw4(Field::Rational).unwrap();
        let data = integral_data(&h).unwrap();
        assert_eq!(data.t, vec![q(0), q(0), q(1), q(1)]);
        assert_eq!(data.integral_dim, 1);
        // t·g = −t, t·x = 0, t·gx = 0.
        assert_eq!(data.gamma, vec![q(1), q(-1), q(0), q(0)]);
        assert_eq!(data.lambda, vec![q(1), q(0), q(0), q(0)]);
        assert!(check_s_of_t(&h, &data).all_passed());
    }

    #[test]
    fn gamma_composed_with_antipode_is_multiplicative() {
        let h = catalog::sw4(Field::Rational).unwrap();
        let data = integral_data(&h).unwrap();
        let n = h.dim();
        let gs: Vec<Scalar> = (0..n)
            .map(|i| h.eval(&data.gamma, &h.apply_s(&h.basis_vector(i))))
            .collect();
        for i in 0..n {
            for j in 0..n {
                let prod = h.eval(&gs, &h.mul_vec(&h.basis_vector(i), &h.basis_vector(j)));
                assert_eq!(prod, gs[i].mul(&gs[j]));
            }
        }
    }

    #[test]
    fn theta_of_kz2_is_the_identity_matrix() {
        let h = catalog::kz2(Field::Rational).unwrap();
        let data = integral_data(&h).unwrap();
        let pq = compute_pq(&h).unwrap();
        let theta = frobenius_theta_t(&h, &data.t, &pq).unwrap();
        assert_eq!(theta, LinearMap::identity(Field::Rational, 2));
    }

    #[test]
    fn theta_suite_passes_on_all_catalog_algebras() {
        for name in ["KZ2", "H2TW", "SW4"] {
            let h = catalog::quasi_hopf(name, Field::Rational).unwrap();
            let data = integral_data(&h).unwrap();
            let report = verify_theta(&h, &data).unwrap();
            assert!(report.all_passed(), "{name}: {report}");
        }
    }

    #[test]
    fn integral_identities_pass_and_corrupt_t_fails() {
        for name in ["KZ2", "H2TW", "SW4"] {
            let h = catalog::quasi_hopf(name, Field::Rational).unwrap();
            let data = integral_data(&h).unwrap();
            let report = verify_integral_identities(&h, &data.t).unwrap();
            assert!(report.all_passed(), "{name}: {report}");
        }
        let h = catalog::kz2(Field::Rational).unwrap();
        let corrupt = vec![q(1), q(0)]; // 1 is not a left integral of kZ/2
        let report = verify_integral_identities(&h, &corrupt).unwrap();
        let check = report.check("integral-antipode-switch-ql").unwrap();
        assert_eq!(check.status, crate::report::Status::Fail);
        assert_eq!(check.witness, Some(vec![1]));
    }

    #[test]
    fn corrupted_integral_is_not_proportional() {
        let h = catalog::kz2(Field::Rational).unwrap();
        // 1 is not an integral: 1·g = g is not a multiple of 1.
        let err = modular_element(&h, &[q(1), q(0)]).unwrap_err();
        assert_eq!(err, crate::error::Error::NotProportional(1));
    }

    #[test]
    fn kz2_over_f2_still_has_a_one_dimensional_integral_space() {
        let h = catalog::kz2(Field::Fp(2)).unwrap();
        let data = integral_data(&h).unwrap();
        assert_eq!(data.integral_dim, 1);
        // ε(t) = 0 in characteristic 2: the integral is degenerate.
        assert!(h.counit_of(&data.t).is_zero());
    }
}

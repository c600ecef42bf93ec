//! The derived elements of a quasi-Hopf algebra: the four p/q elements built
//! from the associator and antipode data, and the four U/V elements built
//! from them and the gauge element. All of their defining identities are
//! checked coordinatewise.

use crate::error::Result;
use crate::linmap::LinearMap;
use crate::quasihopf::QuasiHopfAlgebra;
use crate::report::{coords_string, Failure, Report};
use crate::scalar::Scalar;
use crate::tensor::Tensor;

/// The elements `p_L, q_L, p_R, q_R ∈ H⊗H` repairing non-coassociativity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PqElements {
    pub p_l: Tensor,
    pub q_l: Tensor,
    pub p_r: Tensor,
    pub q_r: Tensor,
}

/// Evaluates the four defining formulas:
/// `p_L = X² S⁻¹(X¹β) ⊗ X³`, `q_L = S(x¹) α x² ⊗ x³`,
/// `p_R = x¹ ⊗ x² β S(x³)`, `q_R = X¹ ⊗ S⁻¹(α X³) X²`.
pub fn compute_pq(h: &QuasiHopfAlgebra) -> Result<PqElements> {
    let n = h.dim();
    let field = h.field();
    let s_inv = h.antipode_inv()?;
    let mut p_l = Tensor::zeros(field, &[n, n]);
    let mut q_l = Tensor::zeros(field, &[n, n]);
    let mut p_r = Tensor::zeros(field, &[n, n]);
    let mut q_r = Tensor::zeros(field, &[n, n]);

    let accumulate = |target: &mut Tensor, left: Vec<Scalar>, right: Vec<Scalar>, c: &Scalar| {
        for (i, a) in left.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in right.iter().enumerate() {
                if !b.is_zero() {
                    let f = target.flat_index(&[i, j]);
                    target.add_at(f, &a.mul(b).mul(c));
                }
            }
        }
    };

    for (idx, c) in h.phi.iter_sparse() {
        let (x1, x2, x3) = (idx[0], idx[1], idx[2]);
        // p_L = X² S⁻¹(X¹ β) ⊗ X³
        accumulate(
            &mut p_l,
            h.mul_vec(
                &h.basis_vector(x2),
                &s_inv.apply(&h.mul_vec(&h.basis_vector(x1), &h.beta)),
            ),
            h.basis_vector(x3),
            c,
        );
        // q_R = X¹ ⊗ S⁻¹(α X³) X²
        accumulate(
            &mut q_r,
            h.basis_vector(x1),
            h.mul_vec(
                &s_inv.apply(&h.mul_vec(&h.alpha, &h.basis_vector(x3))),
                &h.basis_vector(x2),
            ),
            c,
        );
    }
    for (idx, c) in h.phi_inv.iter_sparse() {
        let (x1, x2, x3) = (idx[0], idx[1], idx[2]);
        // q_L = S(x¹) α x² ⊗ x³
        accumulate(
            &mut q_l,
            h.mul_vec(
                &h.mul_vec(&h.apply_s(&h.basis_vector(x1)), &h.alpha),
                &h.basis_vector(x2),
            ),
            h.basis_vector(x3),
            c,
        );
        // p_R = x¹ ⊗ x² β S(x³)
        accumulate(
            &mut p_r,
            h.basis_vector(x1),
            h.mul_vec(
                &h.mul_vec(&h.basis_vector(x2), &h.beta),
                &h.apply_s(&h.basis_vector(x3)),
            ),
            c,
        );
    }
    Ok(PqElements { p_l, q_l, p_r, q_r })
}

fn tensor_left(h: &QuasiHopfAlgebra, v: &[Scalar]) -> Tensor {
    Tensor::from_vector(h.field(), v).outer(&Tensor::from_vector(h.field(), h.unit()))
}

fn tensor_right(h: &QuasiHopfAlgebra, v: &[Scalar]) -> Tensor {
    Tensor::from_vector(h.field(), h.unit()).outer(&Tensor::from_vector(h.field(), v))
}

/// Checks the twelve identities the p/q elements obey: the four
/// intertwinings with `Δ`, the four two-sided cancellations, and the four
/// associator compatibilities (as equalities in `H⊗H⊗H`).
pub fn verify_pq_identities(h: &QuasiHopfAlgebra, pq: &PqElements) -> Report {
    let mut report = Report::new("pq-identities");
    let n = h.dim();
    let s_inv = match h.antipode_inv() {
        Ok(m) => m,
        Err(e) => {
            report.record(
                "antipode-bijective",
                Some(Failure {
                    witness: vec![],
                    lhs: e.to_string(),
                    rhs: "invertible antipode".into(),
                }),
            );
            return report;
        }
    };

    let per_basis = |name: &str,
                     report: &mut Report,
                     f: &dyn Fn(usize) -> (Tensor, Tensor)| {
        report.record(
            name,
            (0..n).find_map(|i| {
                let (lhs, rhs) = f(i);
                (lhs != rhs).then(|| Failure {
                    witness: vec![i],
                    lhs: coords_string(lhs.coords()),
                    rhs: coords_string(rhs.coords()),
                })
            }),
        );
    };

    // Δ(h₂) p_L (S⁻¹(h₁)⊗1) = p_L (1⊗h)
    per_basis("p-left-intertwine", &mut report, &|i| {
        let dh = h.comul_tensor(&h.basis_vector(i));
        let mut lhs = Tensor::zeros(h.field(), &[n, n]);
        for (idx, c) in dh.iter_sparse() {
            let term = h.hmul(
                &h.hmul(&h.comul_tensor(&h.basis_vector(idx[1])), &pq.p_l),
                &tensor_left(h, &s_inv.apply(&h.basis_vector(idx[0]))),
            );
            lhs = lhs.add(&term.scale(c));
        }
        let rhs = h.hmul(&pq.p_l, &tensor_right(h, &h.basis_vector(i)));
        (lhs, rhs)
    });

    // (S(h₁)⊗1) q_L Δ(h₂) = (1⊗h) q_L
    per_basis("q-left-intertwine", &mut report, &|i| {
        let dh = h.comul_tensor(&h.basis_vector(i));
        let mut lhs = Tensor::zeros(h.field(), &[n, n]);
        for (idx, c) in dh.iter_sparse() {
            let term = h.hmul(
                &h.hmul(
                    &tensor_left(h, &h.apply_s(&h.basis_vector(idx[0]))),
                    &pq.q_l,
                ),
                &h.comul_tensor(&h.basis_vector(idx[1])),
            );
            lhs = lhs.add(&term.scale(c));
        }
        let rhs = h.hmul(&tensor_right(h, &h.basis_vector(i)), &pq.q_l);
        (lhs, rhs)
    });

    // Δ(h₁) p_R (1⊗S(h₂)) = p_R (h⊗1)
    per_basis("p-right-intertwine", &mut report, &|i| {
        let dh = h.comul_tensor(&h.basis_vector(i));
        let mut lhs = Tensor::zeros(h.field(), &[n, n]);
        for (idx, c) in dh.iter_sparse() {
            let term = h.hmul(
                &h.hmul(&h.comul_tensor(&h.basis_vector(idx[0])), &pq.p_r),
                &tensor_right(h, &h.apply_s(&h.basis_vector(idx[1]))),
            );
            lhs = lhs.add(&term.scale(c));
        }
        let rhs = h.hmul(&pq.p_r, &tensor_left(h, &h.basis_vector(i)));
        (lhs, rhs)
    });

    // (1⊗S⁻¹(h₂)) q_R Δ(h₁) = (h⊗1) q_R
    per_basis("q-right-intertwine", &mut report, &|i| {
        let dh = h.comul_tensor(&h.basis_vector(i));
        let mut lhs = Tensor::zeros(h.field(), &[n, n]);
        for (idx, c) in dh.iter_sparse() {
            let term = h.hmul(
                &h.hmul(
                    &tensor_right(h, &s_inv.apply(&h.basis_vector(idx[1]))),
                    &pq.q_r,
                ),
                &h.comul_tensor(&h.basis_vector(idx[0])),
            );
            lhs = lhs.add(&term.scale(c));
        }
        let rhs = h.hmul(&tensor_left(h, &h.basis_vector(i)), &pq.q_r);
        (lhs, rhs)
    });

    let cancellation = |name: &str, report: &mut Report, lhs: Tensor| {
        let unit2 = h.unit_tensor(2);
        report.record(
            name,
            (lhs != unit2).then(|| Failure {
                witness: vec![],
                lhs: coords_string(lhs.coords()),
                rhs: coords_string(unit2.coords()),
            }),
        );
    };

    // Δ(q_L²) p_L (S⁻¹(q_L¹)⊗1) = 1⊗1
    {
        let mut acc = Tensor::zeros(h.field(), &[n, n]);
        for (idx, c) in pq.q_l.iter_sparse() {
            let term = h.hmul(
                &h.hmul(&h.comul_tensor(&h.basis_vector(idx[1])), &pq.p_l),
                &tensor_left(h, &s_inv.apply(&h.basis_vector(idx[0]))),
            );
            acc = acc.add(&term.scale(c));
        }
        cancellation("q-left-p-left-cancel", &mut report, acc);
    }
    // (S(p_L¹)⊗1) q_L Δ(p_L²) = 1⊗1
    {
        let mut acc = Tensor::zeros(h.field(), &[n, n]);
        for (idx, c) in pq.p_l.iter_sparse() {
            let term = h.hmul(
                &h.hmul(
                    &tensor_left(h, &h.apply_s(&h.basis_vector(idx[0]))),
                    &pq.q_l,
                ),
                &h.comul_tensor(&h.basis_vector(idx[1])),
            );
            acc = acc.add(&term.scale(c));
        }
        cancellation("p-left-q-left-cancel", &mut report, acc);
    }
    // Δ(q_R¹) p_R (1⊗S(q_R²)) = 1⊗1
    {
        let mut acc = Tensor::zeros(h.field(), &[n, n]);
        for (idx, c) in pq.q_r.iter_sparse() {
            let term = h.hmul(
                &h.hmul(&h.comul_tensor(&h.basis_vector(idx[0])), &pq.p_r),
                &tensor_right(h, &h.apply_s(&h.basis_vector(idx[1]))),
            );
            acc = acc.add(&term.scale(c));
        }
        cancellation("q-right-p-right-cancel", &mut report, acc);
    }
    // (1⊗S⁻¹(p_R²)) q_R Δ(p_R¹) = 1⊗1
    {
        let mut acc = Tensor::zeros(h.field(), &[n, n]);
        for (idx, c) in pq.p_r.iter_sparse() {
            let term = h.hmul(
                &h.hmul(
                    &tensor_right(h, &s_inv.apply(&h.basis_vector(idx[1]))),
                    &pq.q_r,
                ),
                &h.comul_tensor(&h.basis_vector(idx[0])),
            );
            acc = acc.add(&term.scale(c));
        }
        cancellation("p-right-q-right-cancel", &mut report, acc);
    }

    let rank3 = |name: &str, report: &mut Report, lhs: Tensor, rhs: Tensor| {
        report.record(
            name,
            (lhs != rhs).then(|| Failure {
                witness: vec![],
                lhs: coords_string(lhs.coords()),
                rhs: coords_string(rhs.coords()),
            }),
        );
    };

    // φ⁻¹ (I⊗Δ)(p_L) = (Δ(X²) p_L ⊗ X³)(S⁻¹(X¹)⊗1⊗1)
    {
        let lhs = h.hmul(&h.phi_inv, &h.comul_leg(&pq.p_l, 1));
        let mut rhs = Tensor::zeros(h.field(), &[n, n, n]);
        for (idx, c) in h.phi.iter_sparse() {
            let head = h.hmul(&h.comul_tensor(&h.basis_vector(idx[1])), &pq.p_l);
            let t = head.outer(&Tensor::from_vector(h.field(), &h.basis_vector(idx[2])));
            let factor = tensor_left(h, &s_inv.apply(&h.basis_vector(idx[0])))
                .outer(&Tensor::from_vector(h.field(), h.unit()));
            rhs = rhs.add(&h.hmul(&t, &factor).scale(c));
        }
        rank3("associator-p-left", &mut report, lhs, rhs);
    }
    // (I⊗Δ)(q_L) φ = (S(x¹)⊗1⊗1)(q_L Δ(x²) ⊗ x³)
    {
        let lhs = h.hmul(&h.comul_leg(&pq.q_l, 1), &h.phi);
        let mut rhs = Tensor::zeros(h.field(), &[n, n, n]);
        for (idx, c) in h.phi_inv.iter_sparse() {
            let head = h.hmul(&pq.q_l, &h.comul_tensor(&h.basis_vector(idx[1])));
            let t = head.outer(&Tensor::from_vector(h.field(), &h.basis_vector(idx[2])));
            let factor = tensor_left(h, &h.apply_s(&h.basis_vector(idx[0])))
                .outer(&Tensor::from_vector(h.field(), h.unit()));
            rhs = rhs.add(&h.hmul(&factor, &t).scale(c));
        }
        rank3("q-left-associator", &mut report, lhs, rhs);
    }
    // φ (Δ⊗I)(p_R) = (x¹ ⊗ Δ(x²) p_R)(1⊗1⊗S(x³))
    {
        let lhs = h.hmul(&h.phi, &h.comul_leg(&pq.p_r, 0));
        let mut rhs = Tensor::zeros(h.field(), &[n, n, n]);
        for (idx, c) in h.phi_inv.iter_sparse() {
            let tail = h.hmul(&h.comul_tensor(&h.basis_vector(idx[1])), &pq.p_r);
            let t = Tensor::from_vector(h.field(), &h.basis_vector(idx[0])).outer(&tail);
            let factor = h
                .unit_tensor(2)
                .outer(&Tensor::from_vector(h.field(), &h.apply_s(&h.basis_vector(idx[2]))));
            rhs = rhs.add(&h.hmul(&t, &factor).scale(c));
        }
        rank3("associator-p-right", &mut report, lhs, rhs);
    }
    // (Δ⊗I)(q_R) φ⁻¹ = (1⊗1⊗S⁻¹(X³))(X¹ ⊗ q_R Δ(X²))
    {
        let lhs = h.hmul(&h.comul_leg(&pq.q_r, 0), &h.phi_inv);
        let mut rhs = Tensor::zeros(h.field(), &[n, n, n]);
        for (idx, c) in h.phi.iter_sparse() {
            let tail = h.hmul(&pq.q_r, &h.comul_tensor(&h.basis_vector(idx[1])));
            let t = Tensor::from_vector(h.field(), &h.basis_vector(idx[0])).outer(&tail);
            let factor = h
                .unit_tensor(2)
                .outer(&Tensor::from_vector(h.field(), &s_inv.apply(&h.basis_vector(idx[2]))));
            rhs = rhs.add(&h.hmul(&factor, &t).scale(c));
        }
        rank3("q-right-associator", &mut report, lhs, rhs);
    }

    report
}

/// The elements `U_L, V_L, U_R, V_R` built from the p/q elements and the
/// gauge element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UvElements {
    pub f: Tensor,
    pub f_inv: Tensor,
    pub u_l: Tensor,
    pub v_l: Tensor,
    pub u_r: Tensor,
    pub v_r: Tensor,
}

/// `V_L = (S⊗S)(p_L^{21}) f`, `U_L = (S⁻¹⊗S⁻¹)((q_L f⁻¹)^{21})`,
/// `V_R = (S⁻¹⊗S⁻¹)((f p_R)^{21})`, `U_R = f⁻¹ (S⊗S)(q_R^{21})`.
pub fn compute_uv(
    h: &QuasiHopfAlgebra,
    f: &Tensor,
    f_inv: &Tensor,
    pq: &PqElements,
) -> Result<UvElements> {
    let s_inv = h.antipode_inv()?;
    let s_both = |t: &Tensor, m: &LinearMap| -> Tensor {
        t.contract_leg(0, m)
            .and_then(|t| t.contract_leg(1, m))
            .expect("rank-2 antipode legs")
    };
    let v_l = h.hmul(&s_both(&pq.p_l.swap21(), &h.antipode), f);
    let u_l = s_both(&h.hmul(&pq.q_l, f_inv).swap21(), &s_inv);
    let v_r = s_both(&h.hmul(f, &pq.p_r).swap21(), &s_inv);
    let u_r = h.hmul(f_inv, &s_both(&pq.q_r.swap21(), &h.antipode));
    Ok(UvElements {
        f: f.clone(),
        f_inv: f_inv.clone(),
        u_l,
        v_l,
        u_r,
        v_r,
    })
}

/// The four intertwining relations of the U/V elements, plus a guard that
/// none of them is zero.
pub fn verify_uv(h: &QuasiHopfAlgebra, uv: &UvElements) -> Report {
    let mut report = Report::new("uv-relations");
    let n = h.dim();
    let s_inv = match h.antipode_inv() {
        Ok(m) => m,
        Err(e) => {
            report.record(
                "antipode-bijective",
                Some(Failure {
                    witness: vec![],
                    lhs: e.to_string(),
                    rhs: "invertible antipode".into(),
                }),
            );
            return report;
        }
    };

    report.record(
        "uv-nonzero",
        [&uv.u_l, &uv.v_l, &uv.u_r, &uv.v_r]
            .iter()
            .position(|t| t.is_zero())
            .map(|w| Failure {
                witness: vec![w],
                lhs: "0".into(),
                rhs: "a nonzero element".into(),
            }),
    );

    let per_basis = |name: &str,
                     report: &mut Report,
                     f: &dyn Fn(usize) -> (Tensor, Tensor)| {
        report.record(
            name,
            (0..n).find_map(|i| {
                let (lhs, rhs) = f(i);
                (lhs != rhs).then(|| Failure {
                    witness: vec![i],
                    lhs: coords_string(lhs.coords()),
                    rhs: coords_string(rhs.coords()),
                })
            }),
        );
    };

    // (1⊗h₁) V_L ΔS(h₂) = (S(h)⊗1) V_L
    per_basis("v-left-intertwine", &mut report, &|i| {
        let dh = h.comul_tensor(&h.basis_vector(i));
        let mut lhs = Tensor::zeros(h.field(), &[n, n]);
        for (idx, c) in dh.iter_sparse() {
            let term = h.hmul(
                &h.hmul(&tensor_right(h, &h.basis_vector(idx[0])), &uv.v_l),
                &h.comul_tensor(&h.apply_s(&h.basis_vector(idx[1]))),
            );
            lhs = lhs.add(&term.scale(c));
        }
        let rhs = h.hmul(&tensor_left(h, &h.apply_s(&h.basis_vector(i))), &uv.v_l);
        (lhs, rhs)
    });

    // ΔS⁻¹(h₂) U_L (1⊗h₁) = U_L (S⁻¹(h)⊗1)
    per_basis("u-left-intertwine", &mut report, &|i| {
        let dh = h.comul_tensor(&h.basis_vector(i));
        let mut lhs = Tensor::zeros(h.field(), &[n, n]);
        for (idx, c) in dh.iter_sparse() {
            let term = h.hmul(
                &h.hmul(
                    &h.comul_tensor(&s_inv.apply(&h.basis_vector(idx[1]))),
                    &uv.u_l,
                ),
                &tensor_right(h, &h.basis_vector(idx[0])),
            );
            lhs = lhs.add(&term.scale(c));
        }
        let rhs = h.hmul(&uv.u_l, &tensor_left(h, &s_inv.apply(&h.basis_vector(i))));
        (lhs, rhs)
    });

    // (h₂⊗1) V_R ΔS⁻¹(h₁) = (1⊗S⁻¹(h)) V_R
    per_basis("v-right-intertwine", &mut report, &|i| {
        let dh = h.comul_tensor(&h.basis_vector(i));
        let mut lhs = Tensor::zeros(h.field(), &[n, n]);
        for (idx, c) in dh.iter_sparse() {
            let term = h.hmul(
                &h.hmul(&tensor_left(h, &h.basis_vector(idx[1])), &uv.v_r),
                &h.comul_tensor(&s_inv.apply(&h.basis_vector(idx[0]))),
            );
            lhs = lhs.add(&term.scale(c));
        }
        let rhs = h.hmul(&tensor_right(h, &s_inv.apply(&h.basis_vector(i))), &uv.v_r);
        (lhs, rhs)
    });

    // ΔS(h₁) U_R (h₂⊗1) = U_R (1⊗S(h))
    per_basis("u-right-intertwine", &mut report, &|i| {
        let dh = h.comul_tensor(&h.basis_vector(i));
        let mut lhs = Tensor::zeros(h.field(), &[n, n]);
        for (idx, c) in dh.iter_sparse() {
            let term = h.hmul(
                &h.hmul(
                    &h.comul_tensor(&h.apply_s(&h.basis_vector(idx[0]))),
                    &uv.u_r,
                ),
                &tensor_left(h, &h.basis_vector(idx[1])),
            );
            lhs = lhs.add(&term.scale(c));
        }
        let rhs = h.hmul(&uv.u_r, &tensor_right(h, &h.apply_s(&h.basis_vector(i))));
        (lhs, rhs)
    });

    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::quasihopf::{compute_gauge_f, op_cop_variant, Variant};
    use crate::scalar::Field;

    fn frac(n: i64, d: i64) -> Scalar {
        Field::Rational
            .integer(n)
            .checked_div(&Field::Rational.integer(d))
            .unwrap()
    }

    #[test]
    fn kz2_pq_elements_are_trivial() {
        let h = catalog::kz2(Field::Rational).unwrap();
        let pq = compute_pq(&h).unwrap();
        let unit2 = h.unit_tensor(2);
        assert_eq!(pq.p_l, unit2);
        assert_eq!(pq.q_l, unit2);
        assert_eq!(pq.p_r, unit2);
        assert_eq!(pq.q_r, unit2);
    }

    #[test]
    fn h2tw_pq_elements_match_hand_expansion() {
        let h = catalog::h2tw(Field::Rational).unwrap();
        let pq = compute_pq(&h).unwrap();
        // p_L = 1⊗1 − 2p⊗p with p = (1−g)/2: coordinates (1/2)·[1,1,1,-1].
        let p_l = Tensor::from_coords(
            Field::Rational,
            &[2, 2],
            vec![frac(1, 2), frac(1, 2), frac(1, 2), frac(-1, 2)],
        )
        .unwrap();
        assert_eq!(pq.p_l, p_l);
        // q_L = g⊗1 + 2p⊗p: coordinates (1/2)·[1,-1,1,1] on (1,g)⊗(1,g)...
        let q_l = Tensor::from_coords(
            Field::Rational,
            &[2, 2],
            vec![frac(1, 2), frac(-1, 2), frac(1, 2), frac(1, 2)],
        )
        .unwrap();
        assert_eq!(pq.q_l, q_l);
    }

    #[test]
    fn pq_identities_hold_on_all_catalog_algebras() {
        for name in ["KZ2", "H2TW", "SW4"] {
            let h = catalog::quasi_hopf(name, Field::Rational).unwrap();
            let pq = compute_pq(&h).unwrap();
            let report = verify_pq_identities(&h, &pq);
            assert!(report.all_passed(), "{name}: {report}");
        }
    }

    #[test]
    fn corrupted_p_left_fails_the_cancellation() {
        let h = catalog::h2tw(Field::Rational).unwrap();
        let mut pq = compute_pq(&h).unwrap();
        pq.p_l = h.unit_tensor(2);
        let report = verify_pq_identities(&h, &pq);
        let check = report.check("q-left-p-left-cancel").unwrap();
        assert_eq!(check.status, crate::report::Status::Fail);
    }

    #[test]
    fn pq_identities_hold_on_the_op_variant() {
        // Passing to the opposite algebra interchanges the roles of the
        // elements; the full identity set still holds there.
        for name in ["H2TW", "SW4"] {
            let h = catalog::quasi_hopf(name, Field::Rational).unwrap();
            let op = op_cop_variant(&h, Variant::Op).unwrap();
            let pq = compute_pq(&op).unwrap();
            let report = verify_pq_identities(&op, &pq);
            assert!(report.all_passed(), "{name} op: {report}");
        }
    }

    #[test]
    fn uv_elements_of_kz2_are_trivial_and_pass() {
        let h = catalog::kz2(Field::Rational).unwrap();
        let (f, f_inv) = compute_gauge_f(&h).unwrap();
        let pq = compute_pq(&h).unwrap();
        let uv = compute_uv(&h, &f, &f_inv, &pq).unwrap();
        assert_eq!(uv.u_r, h.unit_tensor(2));
        let report = verify_uv(&h, &uv);
        assert!(report.all_passed(), "{report}");
    }

    #[test]
    fn uv_relations_hold_on_h2tw_and_sw4() {
        for name in ["H2TW", "SW4"] {
            let h = catalog::quasi_hopf(name, Field::Rational).unwrap();
            let (f, f_inv) = compute_gauge_f(&h).unwrap();
            let pq = compute_pq(&h).unwrap();
            let uv = compute_uv(&h, &f, &f_inv, &pq).unwrap();
            let report = verify_uv(&h, &uv);
            assert!(report.all_passed(), "{name}: {report}");
        }
    }

    #[test]
    fn zero_uv_trips_the_guard() {
        let h = catalog::kz2(Field::Rational).unwrap();
        let (f, f_inv) = compute_gauge_f(&h).unwrap();
        let pq = compute_pq(&h).unwrap();
        let mut uv = compute_uv(&h, &f, &f_inv, &pq).unwrap();
        uv.v_l = Tensor::zeros(Field::Rational, &[2, 2]);
        let report = verify_uv(&h, &uv);
        let guard = report.check("uv-nonzero").unwrap();
        assert_eq!(guard.status, crate::report::Status::Fail);
    }

    #[test]
    fn double_leg_swap_is_identity() {
        let h = catalog::h2tw(Field::Rational).unwrap();
        let pq = compute_pq(&h).unwrap();
        assert_eq!(pq.p_l.swap21().swap21(), pq.p_l);
    }
}

//! The Hopf algebras carried by the coefficient spaces of a pentagon solution.

use super::{verify_candidate_hopf_iso, HopfData, LinearHopfMap};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{bilinear_coords, Mat, SpanSolver};
use crate::pentagon::PentagonSolution;
use crate::tensor::Tensor2;

/// A Hopf algebra together with its realization inside Mₙ.
#[derive(Clone, Debug)]
pub struct HopfEmbedding {
    pub hopf: HopfData,
    /// `carrier[i]` is the matrix of basis element `i`.
    pub carrier: Vec<Mat>,
}

/// `P`, spanned by the left tensor factors, with `Δ(a) = R⁻¹(1⊗a)R`.
pub fn construct_p(s: &PentagonSolution) -> Result<HopfEmbedding> {
    let id = Mat::identity(s.field(), s.n());
    let hopf = assemble(
        s,
        s.a_basis(),
        s.a_span(),
        |a| {
            let x = Tensor2::simple(&id, a)?;
            s.u().mul(&x)?.mul(s.r())
        },
        s.one_in_p(),
        s.one_in_h(),
        s.gamma().clone(),
        "a",
    )?;
    Ok(HopfEmbedding {
        hopf,
        carrier: s.a_basis().to_vec(),
    })
}

/// `H`, spanned by the right tensor factors, with `Δ(b) = R(b⊗1)R⁻¹`.
pub fn construct_h(s: &PentagonSolution) -> Result<HopfEmbedding> {
    let id = Mat::identity(s.field(), s.n());
    let hopf = assemble(
        s,
        s.b_basis(),
        s.b_span(),
        |b| {
            let x = Tensor2::simple(b, &id)?;
            s.r().mul(&x)?.mul(s.u())
        },
        s.one_in_h(),
        s.one_in_p(),
        s.gamma().transpose(),
        "b",
    )?;
    Ok(HopfEmbedding {
        hopf,
        carrier: s.b_basis().to_vec(),
    })
}

#[allow(clippy::too_many_arguments)]
fn assemble(
    s: &PentagonSolution,
    basis: &[Mat],
    span: &SpanSolver,
    coproduct: impl Fn(&Mat) -> Result<Tensor2>,
    unit: &[Scalar],
    counit: &[Scalar],
    antipode: Mat,
    prefix: &str,
) -> Result<HopfData> {
    let m = basis.len();
    let closure = |what: String| {
        move |e: Error| match e {
            Error::NotInSpan => Error::ClosureViolation(what),
            e => e,
        }
    };
    let mut mult = Vec::with_capacity(m * m * m);
    for (p, x) in basis.iter().enumerate() {
        for (q, y) in basis.iter().enumerate() {
            let c = span.coords((x * y).entries()).map_err(closure(format!(
                "{prefix}{}·{prefix}{}",
                p + 1,
                q + 1
            )))?;
            mult.extend(c);
        }
    }
    let mut comult = Vec::with_capacity(m * m * m);
    for (p, x) in basis.iter().enumerate() {
        let d = coproduct(x)?;
        let g = bilinear_coords(span, span, &d.coefficient_matrix())
            .map_err(closure(format!("Δ({prefix}{})", p + 1)))?;
        comult.extend(g.into_entries());
    }
    let names = (1..=m).map(|i| format!("{prefix}{i}")).collect();
    let hopf = HopfData::new(
        s.field(),
        names,
        mult,
        unit.to_vec(),
        comult,
        counit.to_vec(),
        antipode,
    )?;
    let report = hopf.check_axioms();
    if !report.all_pass() {
        let names: Vec<_> = report.failures().map(|c| c.name).collect();
        return Err(Error::AxiomsFail(names.join(", ")));
    }
    Ok(hopf)
}

/// Whether `aⱼ* ↦ bⱼ` is an isomorphism of Hopf algebras `P* → H`.
pub fn check_dual_iso_f(s: &PentagonSolution) -> Result<bool> {
    let p = construct_p(s)?.hopf;
    let h = construct_h(s)?.hopf;
    let map = LinearHopfMap::new(p.dual(), h, Mat::identity(s.field(), s.length()))?;
    Ok(verify_candidate_hopf_iso(&map).all_pass())
}

/// Whether `P` of `second` in the basis `u·aᵢ·u⁻¹` has exactly the structure
/// constants of `P` of `first`, where `second` is `first` conjugated by `u⊗u`.
pub fn conjugated_p_matches(
    first: &PentagonSolution,
    second: &PentagonSolution,
    u: &Mat,
) -> Result<bool> {
    let u_inv = u.invert()?;
    let p1 = construct_p(first)?.hopf;
    let p2 = construct_p(second)?.hopf;
    if p1.dim() != p2.dim() {
        return Ok(false);
    }
    let mut cols = Vec::with_capacity(p1.dim());
    for a in first.a_basis() {
        match second.p_coords(&(&(u * a) * &u_inv)) {
            Ok(c) => cols.push(c),
            Err(Error::NotInSpan) => return Ok(false),
            Err(e) => return Err(e),
        }
    }
    let basis = Mat::from_fn(second.field(), p2.dim(), p2.dim(), |i, j| {
        cols[j][i].clone()
    });
    let rebased = p2.rebase(&basis)?;
    Ok(rebased.mult_constants() == p1.mult_constants()
        && rebased.comult_constants() == p1.comult_constants()
        && rebased.unit() == p1.unit()
        && rebased.counit() == p1.counit()
        && rebased.antipode() == p1.antipode())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::field::Field::Rationals as Q;
    use crate::gallery;
    use crate::pentagon::analyze;
    use crate::tensor::Leg;
    use proptest::prelude::*;

    fn solution(r: Tensor2) -> PentagonSolution {
        analyze(&r).unwrap()
    }

    #[test]
    fn cyclic2_p_is_dual_group_algebra() {
        let s = solution(gallery::cyclic(Q, 2).unwrap());
        let p = construct_p(&s).unwrap();
        assert_eq!(
            p.carrier,
            vec![Mat::unit(Q, 2, 0, 0), Mat::unit(Q, 2, 1, 1)]
        );
        let h = &p.hopf;
        // Orthogonal idempotents.
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    let expected = if i == j && j == k { Q.one() } else { Q.zero() };
                    assert_eq!(h.mult(i, j, k), &expected);
                }
            }
        }
        // Δ(p₁) = p₁⊗p₁ + p₂⊗p₂, Δ(p₂) = p₁⊗p₂ + p₂⊗p₁.
        let one = Q.one();
        let zero = Q.zero();
        assert_eq!(
            h.coproduct(&h.basis_vector(0)),
            vec![one.clone(), zero.clone(), zero.clone(), one.clone()]
        );
        assert_eq!(
            h.coproduct(&h.basis_vector(1)),
            vec![zero.clone(), one.clone(), one.clone(), zero.clone()]
        );
        assert_eq!(h.counit(), &[one.clone(), zero.clone()]);
        assert_eq!(h.unit(), &[one.clone(), one]);
    }

    #[test]
    fn cyclic_h_generator_is_grouplike() {
        for n in 2..=4 {
            let s = solution(gallery::cyclic(Q, n).unwrap());
            let h = construct_h(&s).unwrap();
            let a = gallery::cyclic_shift(Q, n);
            let coords = s.h_coords(&a).unwrap();
            let d = h.hopf.coproduct(&coords);
            let expected: Vec<Scalar> = coords
                .iter()
                .flat_map(|x| coords.iter().map(move |y| x * y))
                .collect();
            assert_eq!(d, expected);
            assert_eq!(h.hopf.counit_of(&coords), Q.one());
            let inv = s.h_coords(&a.pow(n as u32 - 1)).unwrap();
            assert_eq!(h.hopf.antipode_of(&coords), inv);
        }
    }

    #[test]
    fn nilsol_p_has_primitive_generator() {
        let f2 = Field::prime(2).unwrap();
        let s = solution(gallery::nilsol1(f2, 1).unwrap());
        let p = construct_p(&s).unwrap();
        assert_eq!(p.hopf.dim(), 2);
        let a = Mat::unit(f2, 2, 0, 1);
        let ca = s.p_coords(&a).unwrap();
        let one = s.one_in_p().to_vec();
        // Δ(a) = a⊗1 + 1⊗a, ε(a) = 0, S(a) = a (= −a).
        let mut expected = vec![f2.zero(); 4];
        for i in 0..2 {
            for j in 0..2 {
                expected[i * 2 + j] = &(&ca[i] * &one[j]) + &(&one[i] * &ca[j]);
            }
        }
        assert_eq!(p.hopf.coproduct(&ca), expected);
        assert!(p.hopf.counit_of(&ca).is_zero());
        assert_eq!(p.hopf.antipode_of(&ca), ca);
    }

    #[test]
    fn trivial_solution_gives_ground_field() {
        let s = solution(Tensor2::identity(Q, 3));
        let h = construct_h(&s).unwrap();
        assert_eq!(h.hopf.dim(), 1);
        assert_eq!(h.carrier, vec![Mat::identity(Q, 3)]);
        assert!(check_dual_iso_f(&s).unwrap());
    }

    #[test]
    fn dual_iso_on_gallery() {
        for r in [
            gallery::cyclic(Q, 2).unwrap(),
            gallery::cyclic(Q, 3).unwrap(),
            gallery::sweedler4(Q).unwrap(),
        ] {
            assert!(check_dual_iso_f(&solution(r)).unwrap());
        }
    }

    #[test]
    fn conjugation_preserves_p() {
        let f5 = Field::prime(5).unwrap();
        for (r, f) in [
            (gallery::cyclic(Q, 3).unwrap(), Q),
            (gallery::sweedler4(Q).unwrap(), Q),
            (gallery::sweedler4(f5).unwrap(), f5),
        ] {
            let s = solution(r.clone());
            for seed in 0..3 {
                let u = gallery::random_conjugator(r.n(), f, seed);
                let t = solution(r.conjugate(&u).unwrap());
                assert!(conjugated_p_matches(&s, &t, &u).unwrap());
            }
        }
        // A different conjugator does not line the bases up.
        let r = gallery::cyclic(Q, 3).unwrap();
        let s = solution(r.clone());
        let u = gallery::random_conjugator(3, Q, 7);
        let t = solution(r.conjugate(&u).unwrap());
        let other = Mat::identity(Q, 3);
        assert!(!conjugated_p_matches(&s, &t, &other).unwrap());
    }

    #[test]
    fn sweedler_h_relations() {
        let s = solution(gallery::sweedler4(Q).unwrap());
        let h = construct_h(&s).unwrap();
        assert_eq!(h.hopf.dim(), 4);
        assert!(construct_p(&s).unwrap().hopf.check_axioms().all_pass());
        let g = Mat::from_ints(Q, &[[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]);
        let x = Mat::from_ints(
            Q,
            &[[0, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 0], [0, -1, 0, 0]],
        );
        let cg = s.h_coords(&g).unwrap();
        let cx = s.h_coords(&x).unwrap();
        let c1 = s.one_in_h().to_vec();
        let tensor = |u: &[Scalar], v: &[Scalar]| -> Vec<Scalar> {
            u.iter()
                .flat_map(|a| v.iter().map(move |b| a * b))
                .collect()
        };
        assert_eq!(h.hopf.coproduct(&cg), tensor(&cg, &cg));
        let dx: Vec<Scalar> = tensor(&cx, &cg)
            .iter()
            .zip(tensor(&c1, &cx))
            .map(|(a, b)| a + &b)
            .collect();
        assert_eq!(h.hopf.coproduct(&cx), dx);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]

        // Coassociativity of Δ(x) = R⁻¹(1⊗x)R on all of Mₙ, not only on P:
        // (Δ⊗id)Δ(x) = U¹²(Δx)²³R¹² and (id⊗Δ)Δ(x) = U²³(Δx)¹³R²³.
        #[test]
        fn right_coproduct_coassociative_everywhere(seed in any::<u64>(), which in 0usize..3) {
            let r = match which {
                0 => gallery::cyclic(Q, 2).unwrap(),
                1 => gallery::cyclic(Q, 3).unwrap(),
                _ => gallery::nilsol1(Field::prime(2).unwrap(), 1).unwrap(),
            };
            let s = solution(r);
            let f = s.field();
            let x = gallery::random_conjugator(s.n(), f, seed);
            let id = Mat::identity(f, s.n());
            let dx = s.u().mul(&Tensor2::simple(&id, &x).unwrap()).unwrap().mul(s.r()).unwrap();
            let left = s.u().leg_embed(Leg::L12).mul(&dx.leg_embed(Leg::L23)).mul(&s.r().leg_embed(Leg::L12));
            let right = s.u().leg_embed(Leg::L23).mul(&dx.leg_embed(Leg::L13)).mul(&s.r().leg_embed(Leg::L23));
            prop_assert_eq!(left, right);
        }

        // The same for Δ(y) = R(y⊗1)R⁻¹:
        // (Δ⊗id)Δ(y) = R¹²(Δy)¹³U¹² and (id⊗Δ)Δ(y) = R²³(Δy)¹²U²³.
        #[test]
        fn left_coproduct_coassociative_everywhere(seed in any::<u64>(), which in 0usize..3) {
            let r = match which {
                0 => gallery::cyclic(Q, 2).unwrap(),
                1 => gallery::cyclic(Q, 3).unwrap(),
                _ => gallery::nilsol1(Field::prime(2).unwrap(), 1).unwrap(),
            };
            let s = solution(r);
            let f = s.field();
            let y = gallery::random_conjugator(s.n(), f, seed);
            let id = Mat::identity(f, s.n());
            let dy = s.r().mul(&Tensor2::simple(&y, &id).unwrap()).unwrap().mul(s.u()).unwrap();
            let left = s.r().leg_embed(Leg::L12).mul(&dy.leg_embed(Leg::L13)).mul(&s.u().leg_embed(Leg::L12));
            let right = s.r().leg_embed(Leg::L23).mul(&dy.leg_embed(Leg::L12)).mul(&s.u().leg_embed(Leg::L23));
            prop_assert_eq!(left, right);
        }
    }
}

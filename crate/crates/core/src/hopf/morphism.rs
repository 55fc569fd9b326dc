//! Linear maps between Hopf algebras and the check that one is an isomorphism.

use super::{apply, HopfData};
use crate::check::{first_violation, tuples, CheckReport};
use crate::error::{Error, Result};
use crate::linalg::Mat;

/// A linear map given by its matrix: column `j` is the image of source basis
/// vector `j` in target coordinates.
#[derive(Clone, Debug)]
pub struct LinearHopfMap {
    pub source: HopfData,
    pub target: HopfData,
    pub matrix: Mat,
}

impl LinearHopfMap {
    pub fn new(source: HopfData, target: HopfData, matrix: Mat) -> Result<LinearHopfMap> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::ShapeMismatch(format!(
                "map matrix must be {}×{}",
                target.dim(),
                source.dim()
            )));
        }
        source.field().check(&target.field())?;
        source.field().check(&matrix.field())?;
        Ok(LinearHopfMap {
            source,
            target,
            matrix,
        })
    }
}

/// Bijectivity and compatibility with every structure map, each as an exact
/// identity on basis elements.
pub fn verify_candidate_hopf_iso(map: &LinearHopfMap) -> CheckReport {
    let (src, tgt, phi) = (&map.source, &map.target, &map.matrix);
    let m = src.dim();
    let t = tgt.dim();
    let image = |j: usize| phi.column(j);
    let mut report = CheckReport::default();

    let rank = phi.rank();
    report.push("bijective", (m != t || rank != m).then(|| vec![rank]));
    report.push(
        "multiplicative",
        first_violation(tuples(m, 2), |ij| {
            let lhs = apply(
                phi,
                &src.product(&src.basis_vector(ij[0]), &src.basis_vector(ij[1])),
            );
            lhs == tgt.product(&image(ij[0]), &image(ij[1]))
        }),
    );
    report.push(
        "unit",
        first_violation([vec![]], |_| apply(phi, src.unit()) == tgt.unit()),
    );
    report.push(
        "comultiplicative",
        first_violation(tuples(m, 1), |i| {
            // (φ⊗φ)Δ(eᵢ) as a t×t matrix is φ·D·φᵀ.
            let d = Mat::from_vec(src.field(), m, m, src.coproduct(&src.basis_vector(i[0])))
                .expect("m² entries");
            let pushed = &(phi * &d) * &phi.transpose();
            pushed.entries() == tgt.coproduct(&image(i[0]))
        }),
    );
    report.push(
        "counit",
        first_violation(tuples(m, 1), |i| {
            tgt.counit_of(&image(i[0])) == src.counit()[i[0]]
        }),
    );
    report.push(
        "antipode",
        first_violation(tuples(m, 1), |i| {
            apply(phi, &src.antipode_of(&src.basis_vector(i[0]))) == tgt.antipode_of(&image(i[0]))
        }),
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field::Rationals as Q;
    use crate::gallery;

    #[test]
    fn identity_on_sweedler() {
        let h = gallery::sweedler_hopf(Q).unwrap();
        let map = LinearHopfMap::new(h.clone(), h, Mat::identity(Q, 4)).unwrap();
        assert!(verify_candidate_hopf_iso(&map).all_pass());
    }

    #[test]
    fn cube_automorphism_of_z4() {
        // gⁱ ↦ g³ⁱ.
        let h = gallery::group_hopf(Q, 4).unwrap();
        let phi = Mat::from_fn(
            Q,
            4,
            4,
            |i, j| if i == (3 * j) % 4 { Q.one() } else { Q.zero() },
        );
        let map = LinearHopfMap::new(h.clone(), h, phi).unwrap();
        assert!(verify_candidate_hopf_iso(&map).all_pass());
    }

    #[test]
    fn doubling_map_of_z4_is_not_bijective() {
        let h = gallery::group_hopf(Q, 4).unwrap();
        let phi = Mat::from_fn(
            Q,
            4,
            4,
            |i, j| if i == (2 * j) % 4 { Q.one() } else { Q.zero() },
        );
        let report = verify_candidate_hopf_iso(&LinearHopfMap::new(h.clone(), h, phi).unwrap());
        let bij = report.get("bijective").unwrap();
        assert!(!bij.passed);
        assert_eq!(bij.witness, Some(vec![2]));
        assert!(report.get("multiplicative").unwrap().passed);
    }

    #[test]
    fn swapping_g_and_x_is_not_an_algebra_map() {
        let h = gallery::sweedler_hopf(Q).unwrap();
        let swap = Mat::from_ints(Q, &[[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]);
        let report = verify_candidate_hopf_iso(&LinearHopfMap::new(h.clone(), h, swap).unwrap());
        let mult = report.get("multiplicative").unwrap();
        assert!(!mult.passed);
        // φ(g·g) = φ(1) = 1, but φ(g)φ(g) = x·x = 0.
        assert_eq!(mult.witness, Some(vec![1, 1]));
        assert!(report.get("bijective").unwrap().passed);
    }

    #[test]
    fn shape_checked() {
        let h = gallery::sweedler_hopf(Q).unwrap();
        let k = gallery::group_hopf(Q, 2).unwrap();
        assert!(LinearHopfMap::new(h, k, Mat::identity(Q, 4)).is_err());
    }
}

//! Right integrals and the projection of R-invariant matrices onto them.

use super::{construct_p, HopfData};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{Mat, SpanSolver};
use crate::pentagon::{PentagonSolution, Side};

/// A basis of `{t | t·x = ε(x)·t for all x}`, in coordinates.
pub fn right_integrals(l: &HopfData) -> Vec<Vec<Scalar>> {
    let m = l.dim();
    let f = l.field();
    // Row (j, k), column i: μᵢⱼᵏ − εⱼ·δᵢₖ.
    let system = Mat::from_fn(f, m * m, m, |row, i| {
        let (j, k) = (row / m, row % m);
        let mut v = l.mult(i, j, k).clone();
        if i == k {
            v = &v - &l.counit()[j];
        }
        v
    });
    system.rref().nullspace
}

pub fn is_right_integral(l: &HopfData, t: &[Scalar]) -> bool {
    (0..l.dim()).all(|j| {
        let lhs = l.product(t, &l.basis_vector(j));
        let rhs: Vec<Scalar> = t.iter().map(|x| x * &l.counit()[j]).collect();
        lhs == rhs
    })
}

/// Projects a right R-invariant `a` (`(a⊗1)R = a⊗1`) to a right integral of
/// `P`, returned in `P`-coordinates.
///
/// Every matrix is uniquely `Σₖ cₖ·xₖ` with `cₖ` running over a basis of the
/// right coinvariants and `xₖ ∈ P`; the projection keeps the `x` paired with
/// the first coinvariant.
pub fn integral_from_invariant(s: &PentagonSolution, a: &Mat) -> Result<Vec<Scalar>> {
    if !s.is_right_invariant(a) {
        return Err(Error::NotInvariant);
    }
    let coinv = s.coinvariants(Side::Right)?;
    let m = s.length();
    let products: Vec<Vec<Scalar>> = coinv
        .iter()
        .flat_map(|c| s.a_basis().iter().map(move |x| (c * x).into_entries()))
        .collect();
    let n2 = s.n() * s.n();
    if products.len() != n2 {
        return Err(Error::Inconsistent(format!(
            "{} coinvariant-times-P products for a space of dimension {n2}",
            products.len()
        )));
    }
    let solver = SpanSolver::new(s.field(), n2, &products)
        .map_err(|_| Error::Inconsistent("coinvariants ⊗ P does not multiply onto Mₙ".into()))?;
    let lambda = solver.coords(a.entries())?;
    Ok(lambda[..m].to_vec())
}

/// [`integral_from_invariant`] followed by the integral identity in `P`.
pub fn verified_integral_from_invariant(
    s: &PentagonSolution,
    a: &Mat,
) -> Result<(Vec<Scalar>, bool)> {
    let t = integral_from_invariant(s, a)?;
    let p = construct_p(s)?;
    let ok = is_right_integral(&p.hopf, &t);
    Ok((t, ok))
}

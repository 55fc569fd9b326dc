//! Pentagon solutions in Mₙ⊗Mₙ: verification, length, coefficient bases,
//! (co)invariant subspaces and the Lagrange dimension count.

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{bilinear_coords, rank_factorize, Mat, SpanSolver};
use crate::tensor::{Leg, Tensor2};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Method {
    /// The n³×n³ identity `R¹²R¹³R²³ = R²³R¹²`.
    Legs,
    /// The n² block identities `(Σⱼ A_{ij}⊗A_{jp})·R = R·(A_{ip}⊗Iₙ)`.
    Blocks,
    /// Both, which must agree.
    #[default]
    Both,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    /// 0-based. Legs: `[row, col]` in the n³×n³ matrices. Blocks:
    /// `[i, p, row, col]`, block `(i, p)` and the position inside the n²×n²
    /// identity. With [`Method::Both`] the legs witness is reported.
    pub witness: Option<Vec<usize>>,
}

fn legs_witness(r: &Tensor2) -> Option<Vec<usize>> {
    let r12 = r.leg_embed(Leg::L12);
    let r13 = r.leg_embed(Leg::L13);
    let r23 = r.leg_embed(Leg::L23);
    let lhs = r12.mul(&r13).mul(&r23);
    let rhs = r23.mul(&r12);
    lhs.matrix()
        .first_difference(rhs.matrix())
        .map(|(i, j)| vec![i, j])
}

fn blocks_witness(r: &Tensor2) -> Option<Vec<usize>> {
    let n = r.n();
    let f = r.field();
    let blocks = r.blocks();
    let id = Mat::identity(f, n);
    // All block sums at once: X[(i,a,c), j] = (A_ij)_ac and Y[j, (p,b,d)] =
    // (A_jp)_bd give (XY)[(i,a,c), (p,b,d)] = (Σⱼ A_ij⊗A_jp)[(a,b), (c,d)].
    let n3 = n * n * n;
    let x = Mat::from_fn(f, n3, n, |row, j| {
        let (i, a, c) = (row / (n * n), row / n % n, row % n);
        blocks[i][j][(a, c)].clone()
    });
    let y = Mat::from_fn(f, n, n3, |j, col| {
        let (p, b, d) = (col / (n * n), col / n % n, col % n);
        blocks[j][p][(b, d)].clone()
    });
    let sums = &x * &y;
    for i in 0..n {
        for p in 0..n {
            let sum = Mat::from_fn(f, n * n, n * n, |row, col| {
                let (a, b, c, d) = (row / n, row % n, col / n, col % n);
                sums[((i * n + a) * n + c, (p * n + b) * n + d)].clone()
            });
            let lhs = &sum * r.matrix();
            let rhs = r.matrix() * &blocks[i][p].kron(&id).expect("same field");
            if let Some((a, b)) = lhs.first_difference(&rhs) {
                return Some(vec![i, p, a, b]);
            }
        }
    }
    None
}

pub fn verify_pentagon(r: &Tensor2, method: Method) -> Result<Verdict> {
    let blocks = || -> Result<Option<Vec<usize>>> {
        if r.matrix().rank() < r.matrix().rows() {
            return Err(Error::NotInvertible);
        }
        Ok(blocks_witness(r))
    };
    let witness = match method {
        Method::Legs => legs_witness(r),
        Method::Blocks => blocks()?,
        Method::Both => {
            let legs = legs_witness(r);
            let blk = blocks()?;
            if legs.is_some() != blk.is_some() {
                return Err(Error::Inconsistent(format!(
                    "legs and blocks verdicts disagree ({legs:?} vs {blk:?})"
                )));
            }
            legs
        }
    };
    Ok(Verdict {
        holds: witness.is_none(),
        witness,
    })
}

/// `T = R⁻¹`, which solves the Hopf equation exactly when `R` solves the
/// pentagon equation.
pub fn hopf_transform(r: &Tensor2) -> Result<Tensor2> {
    r.invert()
}

/// `T¹²T²³ = T²³T¹³T¹²`.
pub fn verify_hopf_equation(t: &Tensor2) -> bool {
    let t12 = t.leg_embed(Leg::L12);
    let t13 = t.leg_embed(Leg::L13);
    let t23 = t.leg_embed(Leg::L23);
    t12.mul(&t23) == t23.mul(&t13).mul(&t12)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A validated invertible pentagon solution `R = Σᵢ aᵢ⊗bᵢ` of minimal length.
#[derive(Clone, Debug)]
pub struct PentagonSolution {
    r: Tensor2,
    u: Tensor2,
    a_basis: Vec<Mat>,
    b_basis: Vec<Mat>,
    gamma: Mat,
    one_in_p: Vec<Scalar>,
    one_in_h: Vec<Scalar>,
    a_span: SpanSolver,
    b_span: SpanSolver,
}

pub fn analyze(r: &Tensor2) -> Result<PentagonSolution> {
    if r.is_zero() {
        return Err(Error::ZeroTensor);
    }
    let u = r.invert()?;
    let verdict = verify_pentagon(r, Method::Both)?;
    if let Some(witness) = verdict.witness {
        return Err(Error::PentagonFails { witness });
    }
    let n = r.n();
    let f = r.field();
    let fac = rank_factorize(&r.coefficient_matrix());
    let m = fac.left.cols();
    let a_basis: Vec<Mat> = (0..m).map(|t| reshape(f, n, fac.left.column(t))).collect();
    let b_basis: Vec<Mat> = (0..m)
        .map(|t| reshape(f, n, fac.right.row(t).to_vec()))
        .collect();
    let a_span = span_of(f, n, &a_basis)?;
    let b_span = span_of(f, n, &b_basis)?;

    let gamma =
        bilinear_coords(&a_span, &b_span, &u.coefficient_matrix()).map_err(|e| match e {
            Error::NotInSpan => Error::GammaOutsideSpan,
            e => e,
        })?;
    let id = Mat::identity(f, n).into_entries();
    let one_in_p = a_span
        .coords(&id)
        .map_err(|_| Error::UnitarityFails("left"))?;
    let one_in_h = b_span
        .coords(&id)
        .map_err(|_| Error::UnitarityFails("right"))?;

    Ok(PentagonSolution {
        r: r.clone(),
        u,
        a_basis,
        b_basis,
        gamma,
        one_in_p,
        one_in_h,
        a_span,
        b_span,
    })
}

fn reshape(f: Field, n: usize, v: Vec<Scalar>) -> Mat {
    Mat::from_vec(f, n, n, v).expect("n² entries")
}

fn span_of(f: Field, n: usize, mats: &[Mat]) -> Result<SpanSolver> {
    let vecs: Vec<Vec<Scalar>> = mats.iter().map(|m| m.entries().to_vec()).collect();
    SpanSolver::new(f, n * n, &vecs)
}

impl PentagonSolution {
    pub fn n(&self) -> usize {
        self.r.n()
    }

    pub fn field(&self) -> Field {
        self.r.field()
    }

    pub fn r(&self) -> &Tensor2 {
        &self.r
    }

    /// `R⁻¹`.
    pub fn u(&self) -> &Tensor2 {
        &self.u
    }

    /// The length `m = l(R)`.
    pub fn length(&self) -> usize {
        self.a_basis.len()
    }

    /// Basis of the left coefficient space `P`.
    pub fn a_basis(&self) -> &[Mat] {
        &self.a_basis
    }

    /// Basis of the right coefficient space `H`.
    pub fn b_basis(&self) -> &[Mat] {
        &self.b_basis
    }

    /// `R⁻¹ = Σ γᵢⱼ aᵢ⊗bⱼ`.
    pub fn gamma(&self) -> &Mat {
        &self.gamma
    }

    pub fn one_in_p(&self) -> &[Scalar] {
        &self.one_in_p
    }

    pub fn one_in_h(&self) -> &[Scalar] {
        &self.one_in_h
    }

    pub fn p_coords(&self, x: &Mat) -> Result<Vec<Scalar>> {
        self.a_span.coords(x.entries())
    }

    pub fn h_coords(&self, x: &Mat) -> Result<Vec<Scalar>> {
        self.b_span.coords(x.entries())
    }

    pub(crate) fn a_span(&self) -> &SpanSolver {
        &self.a_span
    }

    pub(crate) fn b_span(&self) -> &SpanSolver {
        &self.b_span
    }

    /// Right coinvariants `{a | (1⊗a)R = 1⊗a}` or left `{a | R(a⊗1) = a⊗1}`.
    pub fn coinvariants(&self, side: Side) -> Result<Vec<Mat>> {
        let id = Mat::identity(self.field(), self.n());
        let r = self.r.matrix();
        let basis = match side {
            Side::Right => solve_condition(self.n(), self.field(), |a| {
                let x = id.kron(a).expect("same field");
                (&x * r).try_sub(&x).expect("same shape")
            }),
            Side::Left => solve_condition(self.n(), self.field(), |a| {
                let x = a.kron(&id).expect("same field");
                (r * &x).try_sub(&x).expect("same shape")
            }),
        };
        nonempty(basis, "coinvariant")
    }

    /// Left R-invariants `{a | R(1⊗a) = 1⊗a}` or right `{a | (a⊗1)R = a⊗1}`.
    pub fn r_invariants(&self, side: Side) -> Result<Vec<Mat>> {
        let id = Mat::identity(self.field(), self.n());
        let r = self.r.matrix();
        let basis = match side {
            Side::Left => solve_condition(self.n(), self.field(), |a| {
                let x = id.kron(a).expect("same field");
                (r * &x).try_sub(&x).expect("same shape")
            }),
            Side::Right => solve_condition(self.n(), self.field(), |a| {
                let x = a.kron(&id).expect("same field");
                (&x * r).try_sub(&x).expect("same shape")
            }),
        };
        nonempty(basis, "R-invariant")
    }

    pub fn is_right_invariant(&self, a: &Mat) -> bool {
        if a.rows() != self.n() || a.cols() != self.n() || a.field() != self.field() {
            return false;
        }
        let x = a
            .kron(&Mat::identity(self.field(), self.n()))
            .expect("same field");
        &x * self.r.matrix() == x
    }

    /// The subalgebra generated by `P ∪ H`, closed under products.
    pub fn generated_subalgebra(&self) -> Result<Vec<Mat>> {
        let n = self.n();
        let f = self.field();
        let mut basis: Vec<Mat> = Vec::new();
        let mut span = span_of(f, n, &basis)?;
        let push = |x: Mat, basis: &mut Vec<Mat>, span: &mut SpanSolver| -> Result<bool> {
            if span.contains(x.entries()) {
                return Ok(false);
            }
            basis.push(x);
            *span = span_of(f, n, basis)?;
            Ok(true)
        };
        for x in self.a_basis.iter().chain(&self.b_basis) {
            push(x.clone(), &mut basis, &mut span)?;
        }
        let mut grew = true;
        while grew {
            grew = false;
            let current = basis.clone();
            for x in &current {
                for y in &current {
                    grew |= push(x * y, &mut basis, &mut span)?;
                }
            }
        }
        let bound = self.length() * self.length();
        if basis.len() > bound {
            return Err(Error::BoundViolated {
                dim: basis.len(),
                bound,
            });
        }
        // Canonical basis: the nonzero rows of the reduced spanning matrix.
        let rows = Mat::from_fn(f, basis.len(), n * n, |i, j| basis[i].entries()[j].clone());
        let red = rows.rref();
        Ok((0..red.rank)
            .map(|i| reshape(f, n, red.reduced.row(i).to_vec()))
            .collect())
    }

    pub fn lagrange_report(&self) -> Result<LagrangeReport> {
        let n2 = self.n() * self.n();
        let m = self.length();
        let dim_coinv_l = self.coinvariants(Side::Left)?.len();
        let dim_coinv_r = self.coinvariants(Side::Right)?.len();
        Ok(LagrangeReport {
            n: self.n(),
            dim_p: self.a_basis.len(),
            dim_h: self.b_basis.len(),
            dim_coinv_l,
            dim_coinv_r,
            relations_hold: m * dim_coinv_r == n2
                && m * dim_coinv_l == n2
                && self.a_basis.len() == m
                && self.b_basis.len() == m,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LagrangeReport {
    pub n: usize,
    pub dim_p: usize,
    pub dim_h: usize,
    pub dim_coinv_l: usize,
    pub dim_coinv_r: usize,
    /// `dim P · dim A^{R,r} = dim H · dim A^{R,l} = n²` and `dim P = dim H`.
    pub relations_hold: bool,
}

/// Kernel of a linear map `Mₙ → M_{n²}` given by its action on matrix units.
fn solve_condition(n: usize, f: Field, residual: impl Fn(&Mat) -> Mat) -> Vec<Mat> {
    let n2 = n * n;
    let columns: Vec<Mat> = (0..n2)
        .map(|t| residual(&Mat::unit(f, n, t / n, t % n)))
        .collect();
    let system = Mat::from_fn(f, n2 * n2, n2, |row, col| {
        columns[col].entries()[row].clone()
    });
    system
        .rref()
        .nullspace
        .into_iter()
        .map(|v| reshape(f, n, v))
        .collect()
}

fn nonempty(basis: Vec<Mat>, what: &str) -> Result<Vec<Mat>> {
    if basis.is_empty() {
        Err(Error::Inconsistent(format!("{what} space is zero")))
    } else {
        Ok(basis)
    }
}

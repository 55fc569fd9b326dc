//! Finite-dimensional Hopf algebras by structure constants.
//!
//! In a basis `e₀ … e_{m−1}`:
//!
//! * `eᵢeⱼ = Σₖ mult[i][j][k] eₖ`, unit `1 = Σ unit[i] eᵢ`;
//! * `Δ(eᵢ) = Σⱼₖ comult[i][j][k] eⱼ⊗eₖ`, `ε(eᵢ) = counit[i]`;
//! * `S(eⱼ) = Σᵢ antipode[(i, j)] eᵢ`, i.e. the antipode matrix acts on
//!   coordinate columns.

mod construct;
mod integral;
mod morphism;

pub use construct::{
    check_dual_iso_f, conjugated_p_matches, construct_h, construct_p, HopfEmbedding,
};
pub use integral::{
    integral_from_invariant, is_right_integral, right_integrals, verified_integral_from_invariant,
};
pub use morphism::{verify_candidate_hopf_iso, LinearHopfMap};

use crate::check::{first_violation, tuples, CheckReport};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::Mat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfData {
    field: Field,
    dim: usize,
    basis_names: Vec<String>,
    mult: Vec<Scalar>,
    unit: Vec<Scalar>,
    comult: Vec<Scalar>,
    counit: Vec<Scalar>,
    antipode: Mat,
}

impl HopfData {
    /// Assembles structure constants after checking shapes and fields. The
    /// Hopf axioms are *not* checked here; see [`HopfData::check_axioms`].
    pub fn new(
        field: Field,
        basis_names: Vec<String>,
        mult: Vec<Scalar>,
        unit: Vec<Scalar>,
        comult: Vec<Scalar>,
        counit: Vec<Scalar>,
        antipode: Mat,
    ) -> Result<HopfData> {
        let m = basis_names.len();
        if m == 0 {
            return Err(Error::Shape("a Hopf algebra needs a nonempty basis".into()));
        }
        let lens = [
            ("mult", mult.len(), m * m * m),
            ("unit", unit.len(), m),
            ("comult", comult.len(), m * m * m),
            ("counit", counit.len(), m),
        ];
        for (what, got, want) in lens {
            if got != want {
                return Err(Error::Shape(format!(
                    "{what} has {got} entries, expected {want}"
                )));
            }
        }
        if antipode.rows() != m || antipode.cols() != m {
            return Err(Error::Shape(format!("antipode must be {m}×{m}")));
        }
        field.check(&antipode.field())?;
        for s in mult.iter().chain(&unit).chain(&comult).chain(&counit) {
            field.check(&s.field())?;
        }
        Ok(HopfData {
            field,
            dim: m,
            basis_names,
            mult,
            unit,
            comult,
            counit,
            antipode,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn with_names(mut self, names: Vec<String>) -> HopfData {
        assert_eq!(names.len(), self.dim);
        self.basis_names = names;
        self
    }

    pub fn mult(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.mult[(i * self.dim + j) * self.dim + k]
    }

    pub fn comult(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.comult[(i * self.dim + j) * self.dim + k]
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn antipode(&self) -> &Mat {
        &self.antipode
    }

    pub fn mult_constants(&self) -> &[Scalar] {
        &self.mult
    }

    pub fn comult_constants(&self) -> &[Scalar] {
        &self.comult
    }

    /// `(eᵢ)` as a coordinate vector.
    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let m = self.dim;
        let mut out = vec![self.field.zero(); m];
        for (i, xi) in x.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
                let c = xi * yj;
                for (k, o) in out.iter_mut().enumerate() {
                    let s = self.mult(i, j, k);
                    if !s.is_zero() {
                        o.add_product(&c, s);
                    }
                }
            }
        }
        out
    }

    /// `Δ(x)` as a vector indexed by `j·m + k`.
    pub fn coproduct(&self, x: &[Scalar]) -> Vec<Scalar> {
        let m = self.dim;
        let mut out = vec![self.field.zero(); m * m];
        for (i, xi) in x.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
            for (t, o) in out.iter_mut().enumerate() {
                let s = &self.comult[i * m * m + t];
                if !s.is_zero() {
                    o.add_product(xi, s);
                }
            }
        }
        out
    }

    pub fn counit_of(&self, x: &[Scalar]) -> Scalar {
        let mut acc = self.field.zero();
        for (xi, ei) in x.iter().zip(&self.counit) {
            acc.add_product(xi, ei);
        }
        acc
    }

    pub fn antipode_of(&self, x: &[Scalar]) -> Vec<Scalar> {
        apply(&self.antipode, x)
    }

    /// Product in `L⊗L` of two vectors indexed by `j·m + k`.
    pub fn product2(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let m = self.dim;
        let f = self.field;
        // First legs: T[(a, q, u)] = Σ_{p,r} x_{pq} y_{ru} μ_{pr}^a.
        let mut first = vec![f.zero(); m * m * m];
        for (s, xs) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            let (p, q) = (s / m, s % m);
            for (t, yt) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let (r, u) = (t / m, t % m);
                let c = xs * yt;
                for a in 0..m {
                    let ma = self.mult(p, r, a);
                    if !ma.is_zero() {
                        first[(a * m + q) * m + u].add_product(&c, ma);
                    }
                }
            }
        }
        let mut out = vec![f.zero(); m * m];
        for (s, c) in first.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            let (a, q, u) = (s / (m * m), s / m % m, s % m);
            for b in 0..m {
                let mb = self.mult(q, u, b);
                if !mb.is_zero() {
                    out[a * m + b].add_product(c, mb);
                }
            }
        }
        out
    }

    pub fn check_axioms(&self) -> CheckReport {
        let m = self.dim;
        let f = self.field;
        let e = |i: usize| self.basis_vector(i);
        let delta = |i: usize, j: usize| if i == j { f.one() } else { f.zero() };
        let mut report = CheckReport::default();

        // Element-level identities keep each witness at basis granularity.
        report.push(
            "associativity",
            first_violation(tuples(m, 3), |t| {
                let (a, b, c) = (e(t[0]), e(t[1]), e(t[2]));
                self.product(&self.product(&a, &b), &c) == self.product(&a, &self.product(&b, &c))
            }),
        );
        report.push(
            "left unit",
            first_violation(tuples(m, 1), |t| {
                self.product(&self.unit, &e(t[0])) == e(t[0])
            }),
        );
        report.push(
            "right unit",
            first_violation(tuples(m, 1), |t| {
                self.product(&e(t[0]), &self.unit) == e(t[0])
            }),
        );
        report.push(
            "coassociativity",
            first_violation(tuples(m, 1), |t| {
                let d = self.coproduct(&e(t[0]));
                self.delta_left(&d) == self.delta_right(&d)
            }),
        );
        report.push(
            "left counit",
            first_violation(tuples(m, 1), |t| {
                let d = self.coproduct(&e(t[0]));
                (0..m).all(|k| {
                    let mut acc = f.zero();
                    for j in 0..m {
                        acc.add_product(&self.counit[j], &d[j * m + k]);
                    }
                    acc == delta(t[0], k)
                })
            }),
        );
        report.push(
            "right counit",
            first_violation(tuples(m, 1), |t| {
                let d = self.coproduct(&e(t[0]));
                (0..m).all(|j| {
                    let mut acc = f.zero();
                    for k in 0..m {
                        acc.add_product(&self.counit[k], &d[j * m + k]);
                    }
                    acc == delta(t[0], j)
                })
            }),
        );
        report.push(
            "comultiplication multiplicative",
            first_violation(tuples(m, 2), |t| {
                let (a, b) = (e(t[0]), e(t[1]));
                self.coproduct(&self.product(&a, &b))
                    == self.product2(&self.coproduct(&a), &self.coproduct(&b))
            }),
        );
        report.push(
            "comultiplication unital",
            first_violation([vec![]], |_| {
                let mut one_one = vec![f.zero(); m * m];
                for j in 0..m {
                    for k in 0..m {
                        one_one[j * m + k] = &self.unit[j] * &self.unit[k];
                    }
                }
                self.coproduct(&self.unit) == one_one
            }),
        );
        report.push(
            "counit multiplicative",
            first_violation(tuples(m, 2), |t| {
                self.counit_of(&self.product(&e(t[0]), &e(t[1])))
                    == &self.counit[t[0]] * &self.counit[t[1]]
            }),
        );
        report.push(
            "counit unital",
            first_violation([vec![]], |_| self.counit_of(&self.unit) == f.one()),
        );
        report.push(
            "left antipode",
            first_violation(tuples(m, 1), |t| {
                // Σ S(x₍₁₎)x₍₂₎ = ε(x)1
                let d = self.coproduct(&e(t[0]));
                let mut acc = vec![f.zero(); m];
                for j in 0..m {
                    for k in 0..m {
                        let c = &d[j * m + k];
                        if c.is_zero() {
                            continue;
                        }
                        let p = self.product(&self.antipode.column(j), &e(k));
                        for (a, pv) in acc.iter_mut().zip(&p) {
                            a.add_product(c, pv);
                        }
                    }
                }
                acc == scaled(&self.unit, &self.counit[t[0]])
            }),
        );
        report.push(
            "right antipode",
            first_violation(tuples(m, 1), |t| {
                // Σ x₍₁₎S(x₍₂₎) = ε(x)1
                let d = self.coproduct(&e(t[0]));
                let mut acc = vec![f.zero(); m];
                for j in 0..m {
                    for k in 0..m {
                        let c = &d[j * m + k];
                        if c.is_zero() {
                            continue;
                        }
                        let p = self.product(&e(j), &self.antipode.column(k));
                        for (a, pv) in acc.iter_mut().zip(&p) {
                            a.add_product(c, pv);
                        }
                    }
                }
                acc == scaled(&self.unit, &self.counit[t[0]])
            }),
        );
        report
    }

    /// `(Δ⊗id)` applied to an element of `L⊗L`, indexed `(a·m + b)·m + c`.
    fn delta_left(&self, d: &[Scalar]) -> Vec<Scalar> {
        let m = self.dim;
        let mut out = vec![self.field.zero(); m * m * m];
        for (s, ds) in d.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            let (j, c) = (s / m, s % m);
            for ab in 0..m * m {
                let x = self.comult(j, ab / m, ab % m);
                if !x.is_zero() {
                    out[ab * m + c].add_product(ds, x);
                }
            }
        }
        out
    }

    /// `(id⊗Δ)` applied to an element of `L⊗L`.
    fn delta_right(&self, d: &[Scalar]) -> Vec<Scalar> {
        let m = self.dim;
        let mut out = vec![self.field.zero(); m * m * m];
        for (s, ds) in d.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            let (a, k) = (s / m, s % m);
            for bc in 0..m * m {
                let x = self.comult(k, bc / m, bc % m);
                if !x.is_zero() {
                    out[a * m * m + bc].add_product(ds, x);
                }
            }
        }
        out
    }

    /// The dual Hopf algebra in the dual basis: multiplication and
    /// comultiplication swap roles, as do unit and counit; the antipode is
    /// transposed.
    pub fn dual(&self) -> HopfData {
        let m = self.dim;
        let mut mult = Vec::with_capacity(m * m * m);
        let mut comult = Vec::with_capacity(m * m * m);
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    mult.push(self.comult(k, i, j).clone());
                    comult.push(self.mult(j, k, i).clone());
                }
            }
        }
        HopfData {
            field: self.field,
            dim: m,
            basis_names: self.basis_names.iter().map(|n| format!("{n}*")).collect(),
            mult,
            unit: self.counit.clone(),
            comult,
            counit: self.unit.clone(),
            antipode: self.antipode.transpose(),
        }
    }

    /// The same algebra in the basis whose vectors are the columns of `basis`
    /// (old coordinates).
    pub fn rebase(&self, basis: &Mat) -> Result<HopfData> {
        let m = self.dim;
        if basis.rows() != m || basis.cols() != m {
            return Err(Error::ShapeMismatch(format!(
                "change of basis must be {m}×{m}"
            )));
        }
        self.field.check(&basis.field())?;
        let inv = basis.invert()?;
        let new_vec = |i: usize| basis.column(i);
        let to_new = |v: &[Scalar]| apply(&inv, v);
        let mut mult = Vec::with_capacity(m * m * m);
        let mut comult = Vec::with_capacity(m * m * m);
        for i in 0..m {
            for j in 0..m {
                mult.extend(to_new(&self.product(&new_vec(i), &new_vec(j))));
            }
            let d = self.coproduct(&new_vec(i));
            // (T⁻¹⊗T⁻¹)·d
            let dm = Mat::from_vec(self.field, m, m, d).expect("m² entries");
            let conv = &(&inv * &dm) * &inv.transpose();
            comult.extend(conv.into_entries());
        }
        let counit = (0..m).map(|i| self.counit_of(&new_vec(i))).collect();
        Ok(HopfData {
            field: self.field,
            dim: m,
            basis_names: (0..m).map(|i| format!("f{}", i + 1)).collect(),
            mult,
            unit: to_new(&self.unit),
            comult,
            counit,
            antipode: &(&inv * &self.antipode) * basis,
        })
    }

    /// Number of individual structure constants, in the order
    /// mult, unit, comult, counit, antipode.
    pub fn num_constants(&self) -> usize {
        let m = self.dim;
        2 * m * m * m + 2 * m + m * m
    }

    /// A copy with one structure constant shifted by `delta`.
    pub fn perturbed(&self, index: usize, delta: &Scalar) -> HopfData {
        let m = self.dim;
        let mut out = self.clone();
        let m3 = m * m * m;
        let slot: &mut Scalar = match index {
            i if i < m3 => &mut out.mult[i],
            i if i < m3 + m => &mut out.unit[i - m3],
            i if i < 2 * m3 + m => &mut out.comult[i - m3 - m],
            i if i < 2 * m3 + 2 * m => &mut out.counit[i - 2 * m3 - m],
            i => {
                let i = i - 2 * m3 - 2 * m;
                assert!(i < m * m, "constant index out of range");
                &mut out.antipode[(i / m, i % m)]
            }
        };
        *slot += delta;
        out
    }
}

pub(crate) fn apply(a: &Mat, v: &[Scalar]) -> Vec<Scalar> {
    (0..a.rows())
        .map(|i| {
            let mut acc = a.field().zero();
            for (aij, vj) in a.row(i).iter().zip(v) {
                if !aij.is_zero() && !vj.is_zero() {
                    acc.add_product(aij, vj);
                }
            }
            acc
        })
        .collect()
}

fn scaled(v: &[Scalar], c: &Scalar) -> Vec<Scalar> {
    v.iter().map(|x| x * c).collect()
}

//! The Heisenberg double `L # L*`, its canonical element, and the matrix
//! realization that turns a Hopf algebra back into a pentagon solution.
//!
//! Basis element `eᵢ # eⱼ*` has index `i·m + j`. Elements of `D⊗D` and
//! `D⊗D⊗D` are dense coefficient vectors over the corresponding index tuples.

use crate::check::{first_violation, tuples, CheckReport};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::hopf::{construct_p, verify_candidate_hopf_iso, HopfData, LinearHopfMap};
use crate::linalg::Mat;
use crate::pentagon::{analyze, PentagonSolution};
use crate::tensor::Tensor2;

#[derive(Clone, Debug)]
pub struct HeisenbergDouble {
    base: HopfData,
    /// Nonzero terms of each basis product, indexed `u·dim + v`.
    prod: Vec<Vec<(usize, Scalar)>>,
    unit: Vec<Scalar>,
}

pub fn build_double(l: &HopfData) -> Result<HeisenbergDouble> {
    let report = l.check_axioms();
    if !report.all_pass() {
        let names: Vec<_> = report.failures().map(|c| c.name).collect();
        return Err(Error::AxiomsFail(names.join(", ")));
    }
    let m = l.dim();
    let f = l.field();
    let dim = m * m;
    // (e_a # e_b*)(e_c # e_d*) = Σ c_a^{pq} μ_{qc}^r μ_{tp}^d c_s^{bt} e_r # e_s*
    let mut prod = Vec::with_capacity(dim * dim);
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                for d in 0..m {
                    let mut out = vec![f.zero(); dim];
                    for p in 0..m {
                        for q in 0..m {
                            let cpq = l.comult(a, p, q);
                            if cpq.is_zero() {
                                continue;
                            }
                            for t in 0..m {
                                let mu = l.mult(t, p, d);
                                if mu.is_zero() {
                                    continue;
                                }
                                let left = cpq * mu;
                                for r in 0..m {
                                    let mr = l.mult(q, c, r);
                                    if mr.is_zero() {
                                        continue;
                                    }
                                    let lr = &left * mr;
                                    for s in 0..m {
                                        let cs = l.comult(s, b, t);
                                        if !cs.is_zero() {
                                            out[r * m + s].add_product(&lr, cs);
                                        }
                                    }
                                }
                            }
                        }
                    }
                    prod.push(sparse(out));
                }
            }
        }
    }
    let unit = (0..dim)
        .map(|u| &l.unit()[u / m] * &l.counit()[u % m])
        .collect();
    let double = HeisenbergDouble {
        base: l.clone(),
        prod,
        unit,
    };
    let one = &double.unit;
    let unit_law = (0..dim).all(|u| {
        let e = double.basis_vector(u);
        double.product(one, &e) == e && double.product(&e, one) == e
    });
    if !unit_law {
        return Err(Error::Inconsistent("smash product unit law fails".into()));
    }
    Ok(double)
}

fn sparse(v: Vec<Scalar>) -> Vec<(usize, Scalar)> {
    v.into_iter()
        .enumerate()
        .filter(|(_, s)| !s.is_zero())
        .collect()
}

impl HeisenbergDouble {
    pub fn base(&self) -> &HopfData {
        &self.base
    }

    pub fn field(&self) -> Field {
        self.base.field()
    }

    /// `m²` for a base of dimension `m`.
    pub fn dim(&self) -> usize {
        self.base.dim() * self.base.dim()
    }

    /// Index of `eᵢ # eⱼ*`.
    pub fn index(&self, i: usize, j: usize) -> usize {
        i * self.base.dim() + j
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn basis_vector(&self, u: usize) -> Vec<Scalar> {
        let mut v = vec![self.field().zero(); self.dim()];
        v[u] = self.field().one();
        v
    }

    /// Structure constant: coefficient of basis `w` in `u·v`.
    pub fn mult(&self, u: usize, v: usize, w: usize) -> Scalar {
        self.prod[u * self.dim() + v]
            .iter()
            .find(|(k, _)| *k == w)
            .map_or_else(|| self.field().zero(), |(_, s)| s.clone())
    }

    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.tensor_product(1, x, y)
    }

    /// Product in `D^{⊗k}`, coefficients indexed by base-`dim` digit tuples.
    pub fn tensor_product(&self, k: u32, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        if k == 2 {
            return self.product2(x, y);
        }
        let d = self.dim();
        let mut out = vec![self.field().zero(); d.pow(k)];
        let digits = |mut idx: usize| {
            let mut v = vec![0; k as usize];
            for slot in v.iter_mut().rev() {
                *slot = idx % d;
                idx /= d;
            }
            v
        };
        for (xi, xs) in x.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
            let xd = digits(xi);
            for (yi, ys) in y.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
                let yd = digits(yi);
                // Expand the factorwise products into output terms.
                let mut terms: Vec<(usize, Scalar)> = vec![(0, xs * ys)];
                for (a, b) in xd.iter().zip(&yd) {
                    let factor = &self.prod[a * d + b];
                    let mut next = Vec::with_capacity(terms.len() * factor.len());
                    for (idx, c) in &terms {
                        for (w, s) in factor {
                            next.push((idx * d + w, c * s));
                        }
                    }
                    terms = next;
                    if terms.is_empty() {
                        break;
                    }
                }
                for (idx, c) in terms {
                    out[idx] += &c;
                }
            }
        }
        out
    }

    /// Product in `D⊗D`, contracting the first legs before the second.
    fn product2(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let d = self.dim();
        let zero = self.field().zero();
        // t[(w·d + v)·d + v'] = Σ_{u,u'} x[u, v] y[u', v'] μ(u, u'; w)
        let mut t = vec![zero.clone(); d * d * d];
        for u in 0..d {
            for u2 in 0..d {
                let factor = &self.prod[u * d + u2];
                if factor.is_empty() {
                    continue;
                }
                for v in 0..d {
                    let xv = &x[u * d + v];
                    if xv.is_zero() {
                        continue;
                    }
                    for v2 in 0..d {
                        let yv = &y[u2 * d + v2];
                        if yv.is_zero() {
                            continue;
                        }
                        let c = xv * yv;
                        for (w, s) in factor {
                            t[(w * d + v) * d + v2].add_product(&c, s);
                        }
                    }
                }
            }
        }
        let mut out = vec![zero; d * d];
        for w in 0..d {
            for v in 0..d {
                for v2 in 0..d {
                    let c = &t[(w * d + v) * d + v2];
                    if c.is_zero() {
                        continue;
                    }
                    for (z, s) in &self.prod[v * d + v2] {
                        out[w * d + z].add_product(c, s);
                    }
                }
            }
        }
        out
    }

    /// `1⊗…⊗1` in `D^{⊗k}`.
    pub fn tensor_unit(&self, k: u32) -> Vec<Scalar> {
        (1..k).fold(self.unit.clone(), |acc, _| outer(&acc, &self.unit))
    }

    /// Associativity, unit law, and multiplicativity of the slices
    /// `l ↦ l # ε` and `l* ↦ 1 # l*`.
    pub fn sanity_report(&self) -> CheckReport {
        let l = &self.base;
        let m = l.dim();
        let d = self.dim();
        let e = |u: usize| self.basis_vector(u);
        let mut report = CheckReport::default();
        report.push(
            "associativity",
            first_violation(tuples(d, 3), |t| {
                let (a, b, c) = (e(t[0]), e(t[1]), e(t[2]));
                self.product(&self.product(&a, &b), &c) == self.product(&a, &self.product(&b, &c))
            }),
        );
        report.push(
            "unit",
            first_violation(tuples(d, 1), |t| {
                self.product(&self.unit, &e(t[0])) == e(t[0])
                    && self.product(&e(t[0]), &self.unit) == e(t[0])
            }),
        );
        let i_l = |x: &[Scalar]| outer(x, l.counit());
        let i_dual = |x: &[Scalar]| outer(l.unit(), x);
        report.push(
            "base embedding multiplicative",
            first_violation(tuples(m, 2), |t| {
                let (a, b) = (l.basis_vector(t[0]), l.basis_vector(t[1]));
                self.product(&i_l(&a), &i_l(&b)) == i_l(&l.product(&a, &b))
            }),
        );
        let dual = l.dual();
        report.push(
            "dual embedding multiplicative",
            first_violation(tuples(m, 2), |t| {
                let (a, b) = (dual.basis_vector(t[0]), dual.basis_vector(t[1]));
                self.product(&i_dual(&a), &i_dual(&b)) == i_dual(&dual.product(&a, &b))
            }),
        );
        report
    }
}

/// `x⊗y` as a coefficient vector indexed `i·len(y) + j`.
fn outer(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    x.iter()
        .flat_map(|a| y.iter().map(move |b| a * b))
        .collect()
}

/// `Σᵢ (eᵢ # ε)⊗(1 # eᵢ*)` and its inverse `Σᵢ (S(eᵢ) # ε)⊗(1 # eᵢ*)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canonical {
    pub canon: Vec<Scalar>,
    pub canon_inv: Vec<Scalar>,
}

pub fn canonical_element(d: &HeisenbergDouble) -> Result<Canonical> {
    let l = &d.base;
    let m = l.dim();
    let dim = d.dim();
    let f = d.field();
    let mut canon = vec![f.zero(); dim * dim];
    let mut canon_inv = vec![f.zero(); dim * dim];
    // Coefficient on (a, j)⊗(k, l): δ_{al}εⱼη_k, resp. S[a, l]εⱼη_k.
    for a in 0..m {
        for j in 0..m {
            let ej = &l.counit()[j];
            if ej.is_zero() {
                continue;
            }
            for k in 0..m {
                let ek = ej * &l.unit()[k];
                if ek.is_zero() {
                    continue;
                }
                for i in 0..m {
                    let idx = d.index(a, j) * dim + d.index(k, i);
                    if a == i {
                        canon[idx] = ek.clone();
                    }
                    canon_inv[idx] = &ek * &l.antipode()[(a, i)];
                }
            }
        }
    }
    let one = d.tensor_unit(2);
    if d.tensor_product(2, &canon, &canon_inv) != one
        || d.tensor_product(2, &canon_inv, &canon) != one
    {
        return Err(Error::InverseFails);
    }
    Ok(Canonical { canon, canon_inv })
}

/// `canon¹²canon¹³canon²³ = canon²³canon¹²` in `D⊗D⊗D`.
pub fn verify_double_pentagon(d: &HeisenbergDouble, canonical: &Canonical) -> bool {
    let dim = d.dim();
    let f = d.field();
    let one = d.unit();
    let embed = |legs: (usize, usize)| {
        let mut out = vec![f.zero(); dim * dim * dim];
        for (t, c) in canonical
            .canon
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.is_zero())
        {
            let (x, y) = (t / dim, t % dim);
            for (z, u) in one.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
                let mut slots = [z; 3];
                slots[legs.0] = x;
                slots[legs.1] = y;
                out[(slots[0] * dim + slots[1]) * dim + slots[2]] += &(c * u);
            }
        }
        out
    };
    let r12 = embed((0, 1));
    let r13 = embed((0, 2));
    let r23 = embed((1, 2));
    let lhs = d.tensor_product(3, &d.tensor_product(3, &r12, &r13), &r23);
    let rhs = d.tensor_product(3, &r23, &r12);
    lhs == rhs
}

/// The double acting on `L` by `m•(l # l*) = ⟨l*, m₍₁₎⟩ m₍₂₎ l`.
#[derive(Clone, Debug)]
pub struct RegularRep {
    /// `images[u]` is the m×m matrix of basis element `u`.
    pub images: Vec<Mat>,
    /// Rank of the images as vectors in M_m.
    pub rank: usize,
    pub bijective: bool,
    pub multiplicative: bool,
}

/// The action is a right action, so its matrices (column = image) reverse
/// products; their transposes, used here, form an algebra map `D → M_m`.
/// Entry `(c, r)` of the image of `eᵢ # eⱼ*` is `Σ_q c_c^{jq} μ_{qi}^r`.
pub fn regular_rep(d: &HeisenbergDouble) -> RegularRep {
    let l = &d.base;
    let m = l.dim();
    let f = d.field();
    let images: Vec<Mat> = (0..d.dim())
        .map(|u| {
            let (i, j) = (u / m, u % m);
            Mat::from_fn(f, m, m, |c, r| {
                let mut acc = f.zero();
                for q in 0..m {
                    let cq = l.comult(c, j, q);
                    if !cq.is_zero() {
                        acc.add_product(cq, l.mult(q, i, r));
                    }
                }
                acc
            })
        })
        .collect();
    let stacked = Mat::from_fn(f, images.len(), m * m, |u, t| {
        images[u].entries()[t].clone()
    });
    let rank = stacked.rank();
    let bijective = rank == d.dim();
    let image_of = |x: &[Scalar]| {
        let mut acc = Mat::zeros(f, m, m);
        for (u, c) in x.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
            acc.add_scaled(c, &images[u]);
        }
        acc
    };
    let multiplicative = image_of(d.unit()) == Mat::identity(f, m)
        && tuples(d.dim(), 2).all(|t| {
            let prod = d.product(&d.basis_vector(t[0]), &d.basis_vector(t[1]));
            image_of(&prod) == &images[t[0]] * &images[t[1]]
        });
    RegularRep {
        images,
        rank,
        bijective,
        multiplicative,
    }
}

/// `Σ c·(x⊗y)` pushed through a family of matrices for the basis of `D`.
fn push_forward(images: &[Mat], element: &[Scalar], dim: usize) -> Result<Tensor2> {
    let f = images[0].field();
    let n = images[0].rows();
    let mut kron = Mat::zeros(f, n * n, n * n);
    for (t, c) in element.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
        kron.add_scaled(c, &images[t / dim].kron(&images[t % dim])?);
    }
    Tensor2::new(n, kron)
}

/// `(rep⊗rep)(canon)` in M_m⊗M_m, analyzed.
pub fn matrix_solution(l: &HopfData) -> Result<PentagonSolution> {
    let d = build_double(l)?;
    let canonical = canonical_element(&d)?;
    let rep = regular_rep(&d);
    if !rep.bijective {
        return Err(Error::RepNotBijective {
            rank: rep.rank,
            expected: d.dim(),
        });
    }
    let r = push_forward(&rep.images, &canonical.canon, d.dim())?;
    analyze(&r)
}

/// Compares `L` with `P` of its matrix solution through `eᵢ ↦ rep(eᵢ # ε)`.
pub fn splitting_check(l: &HopfData) -> Result<CheckReport> {
    splitting_check_conjugated(l, &Mat::identity(l.field(), l.dim()))
}

/// As [`splitting_check`], after conjugating the matrix solution by `u`; the
/// candidate map becomes `eᵢ ↦ u·rep(eᵢ # ε)·u⁻¹`.
pub fn splitting_check_conjugated(l: &HopfData, u: &Mat) -> Result<CheckReport> {
    let base = matrix_solution(l)?;
    let u_inv = u.invert()?;
    let s = if *u == Mat::identity(l.field(), l.dim()) {
        base
    } else {
        analyze(&base.r().conjugate(u)?)?
    };
    let p = construct_p(&s)?;
    let d = build_double(l)?;
    let rep = regular_rep(&d);
    let m = l.dim();
    let mut columns = Vec::with_capacity(m);
    for i in 0..m {
        // eᵢ # ε = Σⱼ εⱼ eᵢ # eⱼ*
        let mut x = Mat::zeros(l.field(), m, m);
        for (j, c) in l.counit().iter().enumerate().filter(|(_, s)| !s.is_zero()) {
            x.add_scaled(c, &rep.images[d.index(i, j)]);
        }
        let conj = &(u * &x) * &u_inv;
        columns.push(s.p_coords(&conj).map_err(|e| match e {
            Error::NotInSpan => {
                Error::ClosureViolation(format!("image of basis element {}", i + 1))
            }
            e => e,
        })?);
    }
    let f = l.field();
    let matrix = Mat::from_fn(f, s.length(), m, |r, c| columns[c][r].clone());
    let map = LinearHopfMap::new(l.clone(), p.hopf, matrix)?;
    Ok(verify_candidate_hopf_iso(&map))
}

/// `F(aᵢ # aⱼ*) = bⱼ·aᵢ` from the double of `P` into Mₙ.
#[derive(Clone, Debug)]
pub struct HeisenbergMap {
    /// Image of each basis element of the double.
    pub images: Vec<Mat>,
    pub is_algebra_map: bool,
    /// `(F⊗F)(canon) = R`.
    pub recovers_r: bool,
}

pub fn heisenberg_map(s: &PentagonSolution, d: &HeisenbergDouble) -> Result<HeisenbergMap> {
    let m = s.length();
    if d.base().dim() != m {
        return Err(Error::ShapeMismatch(
            "double is not built on P of this solution".into(),
        ));
    }
    let f = s.field();
    let n = s.n();
    let images: Vec<Mat> = (0..d.dim())
        .map(|u| &s.b_basis()[u % m] * &s.a_basis()[u / m])
        .collect();
    let image_of = |x: &[Scalar]| {
        let mut acc = Mat::zeros(f, n, n);
        for (u, c) in x.iter().enumerate().filter(|(_, s)| !s.is_zero()) {
            acc.add_scaled(c, &images[u]);
        }
        acc
    };
    let is_algebra_map = image_of(d.unit()) == Mat::identity(f, n)
        && tuples(d.dim(), 2).all(|t| {
            let prod = d.product(&d.basis_vector(t[0]), &d.basis_vector(t[1]));
            image_of(&prod) == &images[t[0]] * &images[t[1]]
        });
    let canonical = canonical_element(d)?;
    let recovers_r = push_forward(&images, &canonical.canon, d.dim())? == *s.r();
    Ok(HeisenbergMap {
        images,
        is_algebra_map,
        recovers_r,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field::Rationals as Q;
    use crate::gallery;
    use crate::pentagon::{verify_pentagon, Method};

    fn ground(f: Field) -> HopfData {
        gallery::group_hopf(f, 1).unwrap()
    }

    #[test]
    fn trivial_double() {
        let d = build_double(&ground(Q)).unwrap();
        assert_eq!(d.dim(), 1);
        let c = canonical_element(&d).unwrap();
        assert_eq!(c.canon, vec![Q.one()]);
        assert!(verify_double_pentagon(&d, &c));
        let rep = regular_rep(&d);
        assert_eq!(rep.images, vec![Mat::identity(Q, 1)]);
        let s = matrix_solution(&ground(Q)).unwrap();
        assert_eq!(s.length(), 1);
        assert!(splitting_check(&ground(Q)).unwrap().all_pass());
    }

    #[test]
    fn z2_smash_product() {
        // (g # ε)(1 # e_g*) = g # e₁* because g·e_g* = e₁*.
        let l = gallery::group_hopf(Q, 2).unwrap();
        let d = build_double(&l).unwrap();
        let g_eps: Vec<Scalar> = outer(&l.basis_vector(1), l.counit());
        let one_eg = outer(l.unit(), &l.basis_vector(1));
        let prod = d.product(&g_eps, &one_eg);
        assert_eq!(prod, d.basis_vector(d.index(1, 0)));
        assert!(d.sanity_report().all_pass());
    }

    #[test]
    fn z2_canonical_element_is_involutive() {
        let l = gallery::group_hopf(Q, 2).unwrap();
        let d = build_double(&l).unwrap();
        let c = canonical_element(&d).unwrap();
        assert_eq!(c.canon, c.canon_inv);
        let mut expected = vec![Q.zero(); 16];
        // (1#ε)⊗(1#e₁*) + (g#ε)⊗(1#e_g*), with ε = e₁* + e_g*.
        for j in 0..2 {
            expected[d.index(0, j) * 4 + d.index(0, 0)] = Q.one();
            expected[d.index(1, j) * 4 + d.index(0, 1)] = Q.one();
        }
        assert_eq!(c.canon, expected);
    }

    #[test]
    fn doubles_solve_the_pentagon() {
        for l in [
            ground(Q),
            gallery::group_hopf(Q, 2).unwrap(),
            gallery::group_hopf(Q, 3).unwrap(),
            gallery::sweedler_hopf(Q).unwrap(),
        ] {
            let d = build_double(&l).unwrap();
            let c = canonical_element(&d).unwrap();
            assert!(verify_double_pentagon(&d, &c));
        }
    }

    #[test]
    fn regular_rep_is_bijective_algebra_map() {
        for (l, rank) in [
            (gallery::group_hopf(Q, 2).unwrap(), 4),
            (gallery::sweedler_hopf(Q).unwrap(), 16),
        ] {
            let rep = regular_rep(&build_double(&l).unwrap());
            assert!(rep.bijective);
            assert!(rep.multiplicative);
            assert_eq!(rep.images.len(), rank);
        }
    }

    #[test]
    fn matrix_solutions_and_splitting() {
        for l in [
            gallery::group_hopf(Q, 2).unwrap(),
            gallery::group_hopf(Q, 3).unwrap(),
            gallery::sweedler_hopf(Q).unwrap(),
        ] {
            let s = matrix_solution(&l).unwrap();
            assert!(verify_pentagon(s.r(), Method::Both).unwrap().holds);
            assert_eq!(s.length(), l.dim());
            let report = s.lagrange_report().unwrap();
            assert!(report.relations_hold);
            assert_eq!(report.dim_coinv_r, l.dim());
            let split = splitting_check(&l).unwrap();
            assert!(split.all_pass(), "{split:?}");
        }
    }

    #[test]
    fn conjugated_splitting() {
        let l = gallery::sweedler_hopf(Q).unwrap();
        for seed in 0..3 {
            let u = gallery::random_conjugator(4, Q, seed);
            assert!(splitting_check_conjugated(&l, &u).unwrap().all_pass());
        }
    }

    #[test]
    fn canonical_element_is_basis_independent() {
        let l = gallery::sweedler_hopf(Q).unwrap();
        let d = build_double(&l).unwrap();
        let canon = canonical_element(&d).unwrap().canon;
        for seed in 0..3 {
            let t = gallery::random_conjugator(4, Q, seed);
            let t_inv = t.invert().unwrap();
            let lt = l.rebase(&t).unwrap();
            let dt = build_double(&lt).unwrap();
            let canon_t = canonical_element(&dt).unwrap().canon;
            // fᵢ # fⱼ* = Σ T[a, i]·T⁻¹[j, b] eₐ # e_b*.
            let m = 4;
            let phi = Mat::from_fn(Q, 16, 16, |ab, ij| {
                let (a, b) = (ab / m, ab % m);
                let (i, j) = (ij / m, ij % m);
                &t[(a, i)] * &t_inv[(j, b)]
            });
            let c = Mat::from_vec(Q, 16, 16, canon_t).unwrap();
            let mapped = &(&phi * &c) * &phi.transpose();
            assert_eq!(mapped.into_entries(), canon);
        }
    }

    #[test]
    fn heisenberg_map_recovers_solution() {
        for r in [
            Tensor2::identity(Q, 2),
            gallery::cyclic(Q, 2).unwrap(),
            gallery::sweedler4(Q).unwrap(),
        ] {
            let s = analyze(&r).unwrap();
            let p = construct_p(&s).unwrap().hopf;
            let d = build_double(&p).unwrap();
            let map = heisenberg_map(&s, &d).unwrap();
            assert!(map.is_algebra_map);
            assert!(map.recovers_r);
            // Universal property: F(a # ε) = a and F(1 # p*) = f(p*).
            for i in 0..s.length() {
                let mut a = Mat::zeros(Q, s.n(), s.n());
                let mut b = Mat::zeros(Q, s.n(), s.n());
                for j in 0..s.length() {
                    a.add_scaled(&p.counit()[j], &map.images[d.index(i, j)]);
                    b.add_scaled(&p.unit()[j], &map.images[d.index(j, i)]);
                }
                assert_eq!(a, s.a_basis()[i]);
                assert_eq!(b, s.b_basis()[i]);
            }
        }
    }

    #[test]
    fn broken_base_rejected() {
        let l = gallery::sweedler_hopf(Q).unwrap().perturbed(0, &Q.one());
        assert!(matches!(build_double(&l), Err(Error::AxiomsFail(_))));
    }
}

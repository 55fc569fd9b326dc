//! Concrete solutions and Hopf algebras: the trivial and cyclic solutions,
//! the Sweedler solution in M₄, the characteristic-2 nilpotent families, the
//! group algebras kℤₙ, Sweedler's H₄, and seeded random conjugators.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::hopf::HopfData;
use crate::linalg::Mat;
use crate::tensor::Tensor2;

/// `Iₙ⊗Iₙ`.
pub fn trivial(field: Field, n: usize) -> Result<Tensor2> {
    if n == 0 {
        return Err(Error::BadParams("n must be positive".into()));
    }
    Ok(Tensor2::identity(field, n))
}

/// The cyclic shift `A = Σ e_{i+1,i} + e_{1n}` (1-based), of order n.
pub fn cyclic_shift(field: Field, n: usize) -> Mat {
    Mat::from_fn(field, n, n, |i, j| {
        if i == (j + 1) % n {
            field.one()
        } else {
            field.zero()
        }
    })
}

/// `R = Σᵢ eᵢᵢ⊗Aⁱ` with `A` the cyclic shift.
pub fn cyclic(field: Field, n: usize) -> Result<Tensor2> {
    if n == 0 {
        return Err(Error::BadParams("n must be positive".into()));
    }
    let a = cyclic_shift(field, n);
    let mut blocks = vec![vec![Mat::zeros(field, n, n); n]; n];
    let mut power = Mat::identity(field, n);
    for (i, row) in blocks.iter_mut().enumerate() {
        row[i] = power.clone();
        power = &power * &a;
    }
    Tensor2::from_blocks(&blocks)
}

/// The solution in M₄⊗M₄ whose right coefficient space is Sweedler's algebra.
pub fn sweedler4(field: Field) -> Result<Tensor2> {
    if field.characteristic() == 2 {
        return Err(Error::BadParams(
            "sweedler4 needs characteristic ≠ 2".into(),
        ));
    }
    let e = |i: usize, j: usize| Mat::unit(field, 4, i - 1, j - 1);
    let sum = |ms: &[Mat]| {
        ms.iter().fold(Mat::zeros(field, 4, 4), |acc, m| {
            acc.try_add(m).expect("same shape")
        })
    };
    let diff = |a: Mat, b: Mat| a.try_sub(&b).expect("same shape");
    let g = sum(&[e(1, 2), e(2, 1), e(3, 4), e(4, 3)]);
    let terms = [
        (sum(&[e(1, 1), e(4, 4)]), Mat::identity(field, 4)),
        (sum(&[e(2, 2), e(3, 3)]), g),
        (e(1, 3), diff(e(3, 1), e(4, 2))),
        (e(2, 4), diff(e(4, 1), e(3, 2))),
    ];
    let mut kron = Mat::zeros(field, 16, 16);
    for (a, b) in &terms {
        kron.add_scaled(&field.one(), &a.kron(b)?);
    }
    Tensor2::new(4, kron)
}

/// `a = Σ e_{2i−1,2i}`, `b = Σ e_{2i,2i−1}` in M_{2q}, so `a² = b² = 0` and
/// `ab − ba = 1` in characteristic 2.
pub fn nilsol1_factors(field: Field, q: usize) -> Result<(Mat, Mat)> {
    if field.characteristic() != 2 {
        return Err(Error::BadParams("nilsol1 needs characteristic 2".into()));
    }
    if q == 0 {
        return Err(Error::BadParams("q must be positive".into()));
    }
    let n = 2 * q;
    let mut a = Mat::zeros(field, n, n);
    let mut b = Mat::zeros(field, n, n);
    for i in 0..q {
        a[(2 * i, 2 * i + 1)] = field.one();
        b[(2 * i + 1, 2 * i)] = field.one();
    }
    Ok((a, b))
}

/// `b = e₁₁ + … + e_qq` and `a = [[I, X⁻¹], [X, I]]` in M_{2q}, so `a² = 0`,
/// `b² = b` and `ab − ba = a + 1` in characteristic 2.
pub fn nilsol2_factors(field: Field, x: &Mat) -> Result<(Mat, Mat)> {
    if field.characteristic() != 2 {
        return Err(Error::BadParams("nilsol2 needs characteristic 2".into()));
    }
    field.check(&x.field())?;
    let q = x.rows();
    if q == 0 || !x.is_square() {
        return Err(Error::BadParams(
            "X must be a nonempty square matrix".into(),
        ));
    }
    let x_inv = x
        .invert()
        .map_err(|_| Error::BadParams("X must be invertible".into()))?;
    let n = 2 * q;
    let a = Mat::from_fn(field, n, n, |i, j| match (i < q, j < q) {
        (true, true) | (false, false) => {
            if i == j {
                field.one()
            } else {
                field.zero()
            }
        }
        (true, false) => x_inv[(i, j - q)].clone(),
        (false, true) => x[(i - q, j)].clone(),
    });
    let b = Mat::from_fn(field, n, n, |i, j| {
        if i == j && i < q {
            field.one()
        } else {
            field.zero()
        }
    });
    Ok((a, b))
}

/// Whether `a² = b² = 0` and `ab − ba = 1`.
pub fn satisfies_nilsol1(a: &Mat, b: &Mat) -> bool {
    let id = Mat::identity(a.field(), a.rows());
    (a * a).is_zero() && (b * b).is_zero() && (a * b).try_sub(&(b * a)).ok() == Some(id)
}

/// Whether `a² = 0`, `b² = b` and `ab − ba = a + 1`.
pub fn satisfies_nilsol2(a: &Mat, b: &Mat) -> bool {
    let id = Mat::identity(a.field(), a.rows());
    (a * a).is_zero() && &(b * b) == b && (a * b).try_sub(&(b * a)).ok() == a.try_add(&id).ok()
}

fn one_plus(a: &Mat, b: &Mat) -> Result<Tensor2> {
    let n = a.rows();
    let kron = Mat::identity(a.field(), n * n).try_add(&a.kron(b)?)?;
    Tensor2::new(n, kron)
}

/// `I⊗I + a⊗b` from [`nilsol1_factors`].
pub fn nilsol1(field: Field, q: usize) -> Result<Tensor2> {
    let (a, b) = nilsol1_factors(field, q)?;
    if !satisfies_nilsol1(&a, &b) {
        return Err(Error::Inconsistent(
            "nilsol1 factors violate their relations".into(),
        ));
    }
    one_plus(&a, &b)
}

/// `I⊗I + a⊗b` from [`nilsol2_factors`].
pub fn nilsol2(field: Field, x: &Mat) -> Result<Tensor2> {
    let (a, b) = nilsol2_factors(field, x)?;
    if !satisfies_nilsol2(&a, &b) {
        return Err(Error::Inconsistent(
            "nilsol2 factors violate their relations".into(),
        ));
    }
    one_plus(&a, &b)
}

/// The group algebra kℤₙ in the basis `1, g, …, g^{n−1}`.
pub fn group_hopf(field: Field, n: usize) -> Result<HopfData> {
    if n == 0 {
        return Err(Error::BadParams("n must be positive".into()));
    }
    let kd = |a: usize, b: usize| if a == b { field.one() } else { field.zero() };
    let mut mult = Vec::with_capacity(n * n * n);
    let mut comult = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                mult.push(kd((i + j) % n, k));
                comult.push(if i == j && j == k {
                    field.one()
                } else {
                    field.zero()
                });
            }
        }
    }
    let names = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{i}"),
        })
        .collect();
    let unit = (0..n).map(|i| kd(i, 0)).collect();
    let counit = vec![field.one(); n];
    let antipode = Mat::from_fn(field, n, n, |i, j| kd(i, (n - j) % n));
    HopfData::new(field, names, mult, unit, comult, counit, antipode)
}

/// Sweedler's H₄ in the basis `(1, g, x, gx)` with `g² = 1`, `x² = 0`,
/// `xg = −gx`, `Δ(g) = g⊗g` and `Δ(x) = x⊗g + 1⊗x`.
pub fn sweedler_hopf(field: Field) -> Result<HopfData> {
    if field.characteristic() == 2 {
        return Err(Error::BadParams(
            "sweedler_hopf needs characteristic ≠ 2".into(),
        ));
    }
    const ONE: usize = 0;
    const G: usize = 1;
    const X: usize = 2;
    const GX: usize = 3;
    let m = 4;
    let mut mult = vec![field.zero(); m * m * m];
    let mut set_mult =
        |i: usize, j: usize, k: usize, v: i64| mult[(i * m + j) * m + k] = field.from_i64(v);
    for i in 0..m {
        set_mult(ONE, i, i, 1);
        set_mult(i, ONE, i, 1);
    }
    set_mult(G, G, ONE, 1);
    set_mult(G, X, GX, 1);
    set_mult(G, GX, X, 1);
    set_mult(X, G, GX, -1);
    set_mult(GX, G, X, -1);

    let mut comult = vec![field.zero(); m * m * m];
    let mut set_co = |i: usize, j: usize, k: usize| comult[(i * m + j) * m + k] = field.one();
    set_co(ONE, ONE, ONE);
    set_co(G, G, G);
    set_co(X, X, G);
    set_co(X, ONE, X);
    set_co(GX, GX, ONE);
    set_co(GX, G, GX);

    let unit = vec![field.one(), field.zero(), field.zero(), field.zero()];
    let counit = vec![field.one(), field.one(), field.zero(), field.zero()];
    // S(1) = 1, S(g) = g, S(x) = gx, S(gx) = −x.
    let antipode = Mat::from_ints(
        field,
        &[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]],
    );
    let names = ["1", "g", "x", "gx"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    HopfData::new(field, names, mult, unit, comult, counit, antipode)
}

/// A seeded invertible n×n matrix: entries in [−3, 3] over ℚ, uniform
/// residues over 𝔽ₚ, redrawn until invertible.
pub fn random_conjugator(n: usize, field: Field, seed: u64) -> Mat {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let m = Mat::from_fn(field, n, n, |_, _| random_scalar(&mut rng, field));
        if m.rank() == n {
            return m;
        }
    }
}

fn random_scalar(rng: &mut impl Rng, field: Field) -> Scalar {
    match field {
        Field::Rationals => field.from_i64(rng.gen_range(-3..=3)),
        Field::Prime(p) => field.from_i64(rng.gen_range(0..p) as i64),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GalleryName {
    Trivial,
    Cyclic,
    Sweedler4,
    Nilsol1,
    Nilsol2,
    GroupHopf,
    SweedlerHopf,
}

impl GalleryName {
    pub const ALL: [GalleryName; 7] = [
        GalleryName::Trivial,
        GalleryName::Cyclic,
        GalleryName::Sweedler4,
        GalleryName::Nilsol1,
        GalleryName::Nilsol2,
        GalleryName::GroupHopf,
        GalleryName::SweedlerHopf,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GalleryName::Trivial => "trivial",
            GalleryName::Cyclic => "cyclic",
            GalleryName::Sweedler4 => "sweedler4",
            GalleryName::Nilsol1 => "nilsol1",
            GalleryName::Nilsol2 => "nilsol2",
            GalleryName::GroupHopf => "group_hopf",
            GalleryName::SweedlerHopf => "sweedler_hopf",
        }
    }

    pub fn is_hopf(self) -> bool {
        matches!(self, GalleryName::GroupHopf | GalleryName::SweedlerHopf)
    }
}

impl fmt::Display for GalleryName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GalleryName {
    type Err = Error;

    fn from_str(s: &str) -> Result<GalleryName> {
        GalleryName::ALL
            .into_iter()
            .find(|g| g.as_str() == s)
            .ok_or_else(|| Error::BadParams(format!("unknown gallery entry `{s}`")))
    }
}

#[derive(Clone, Debug)]
pub struct GallerySpec {
    pub name: GalleryName,
    pub field: Field,
    pub n: Option<usize>,
    pub q: Option<usize>,
    /// The q×q matrix of nilsol2; defaults to `I_q`.
    pub x: Option<Mat>,
    /// For solutions, conjugate by [`random_conjugator`]; for nilsol2 without
    /// an explicit `x`, draw `X` instead.
    pub seed: Option<u64>,
}

impl GallerySpec {
    pub fn new(name: GalleryName, field: Field) -> GallerySpec {
        GallerySpec {
            name,
            field,
            n: None,
            q: None,
            x: None,
            seed: None,
        }
    }
}

#[derive(Clone, Debug)]
pub enum GalleryItem {
    Solution(Tensor2),
    Hopf(HopfData),
}

pub fn generate(spec: &GallerySpec) -> Result<GalleryItem> {
    let f = spec.field;
    let need_n = || {
        spec.n
            .ok_or_else(|| Error::BadParams(format!("{} needs --n", spec.name)))
    };
    if spec.name.is_hopf() && spec.seed.is_some() {
        return Err(Error::BadParams(format!("{} takes no seed", spec.name)));
    }
    let solution = match spec.name {
        GalleryName::Trivial => trivial(f, spec.n.unwrap_or(1))?,
        GalleryName::Cyclic => cyclic(f, need_n()?)?,
        GalleryName::Sweedler4 => sweedler4(f)?,
        GalleryName::Nilsol1 => nilsol1(f, spec.q.unwrap_or(1))?,
        GalleryName::Nilsol2 => {
            let q = spec.q.unwrap_or(1);
            let x = match (&spec.x, spec.seed) {
                (Some(x), _) => x.clone(),
                (None, Some(seed)) => random_conjugator(q, f, seed),
                (None, None) => Mat::identity(f, q),
            };
            return Ok(GalleryItem::Solution(nilsol2(f, &x)?));
        }
        GalleryName::GroupHopf => return Ok(GalleryItem::Hopf(group_hopf(f, need_n()?)?)),
        GalleryName::SweedlerHopf => return Ok(GalleryItem::Hopf(sweedler_hopf(f)?)),
    };
    let solution = match spec.seed {
        Some(seed) => solution.conjugate(&random_conjugator(solution.n(), f, seed))?,
        None => solution,
    };
    Ok(GalleryItem::Solution(solution))
}

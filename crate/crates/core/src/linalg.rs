//! Dense exact matrices and the row-reduction toolkit built on them.
//!
//! Everything is deterministic: the leftmost available pivot is always taken,
//! so bases derived from [`Mat::rref`] are canonical for a given input.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    /// The matrix unit `e_{ij}` (0-based indices).
    pub fn unit(field: Field, n: usize, i: usize, j: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        m[(i, j)] = field.one();
        m
    }

    pub fn from_fn(
        field: Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Mat {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let s = f(i, j);
                debug_assert_eq!(s.field(), field);
                data.push(s);
            }
        }
        Mat {
            rows,
            cols,
            field,
            data,
        }
    }

    /// Row-major data; every entry must live in `field`.
    pub fn from_vec(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Mat> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}×{cols} matrix",
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|s| s.field() != field) {
            return Err(Error::FieldMismatch(field, bad.field()));
        }
        Ok(Mat {
            rows,
            cols,
            field,
            data,
        })
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Mat> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Mat::from_vec(field, r, c, rows.into_iter().flatten().collect())
    }

    /// Small integer matrices, mostly for tests and generators.
    pub fn from_ints<R: AsRef<[i64]>>(field: Field, rows: &[R]) -> Mat {
        let data: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Mat::from_rows(field, data).expect("rectangular integer matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.data
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    /// First position where the two matrices differ, row-major.
    pub fn first_difference(&self, other: &Mat) -> Option<(usize, usize)> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .position(|(a, b)| a != b)
            .map(|k| (k / self.cols, k % self.cols))
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.field, self.cols, self.rows, |i, j| {
            self[(j, i)].clone()
        })
    }

    pub fn scale(&self, c: &Scalar) -> Mat {
        Mat {
            data: self.data.iter().map(|x| x * c).collect(),
            ..self.clone()
        }
    }

    pub fn try_add(&self, other: &Mat) -> Result<Mat> {
        self.same_shape(other)?;
        Ok(Mat {
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
            ..self.clone()
        })
    }

    pub fn try_sub(&self, other: &Mat) -> Result<Mat> {
        self.same_shape(other)?;
        Ok(Mat {
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
            ..self.clone()
        })
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Scalar, other: &Mat) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if c.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                a.add_product(c, b);
            }
        }
    }

    pub fn try_mul(&self, other: &Mat) -> Result<Mat> {
        self.field.check(&other.field)?;
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}×{} by {}×{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.field == Field::Rationals {
            return Ok(self.mul_rational(other));
        }
        let mut out = Mat::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                let brow = other.row(k);
                let orow = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (o, b) in orow.iter_mut().zip(brow) {
                    if !b.is_zero() {
                        o.add_product(a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Clears denominators row-wise on the left and column-wise on the right,
    /// so the inner loop runs over integers and each entry is reduced once.
    fn mul_rational(&self, other: &Mat) -> Mat {
        let (n, inner, p) = (self.rows, self.cols, other.cols);
        fn ratio(s: &Scalar) -> &BigRational {
            match s {
                Scalar::Rational(r) => r,
                Scalar::Residue { .. } => unreachable!("rational matrix"),
            }
        }
        let lcm_of = |it: &mut dyn Iterator<Item = &Scalar>| {
            it.fold(BigInt::one(), |acc, s| acc.lcm(ratio(s).denom()))
        };
        let scaled = |s: &Scalar, scale: &BigInt| -> Option<BigInt> {
            let r = ratio(s);
            (!r.is_zero()).then(|| r.numer() * (scale / r.denom()))
        };
        let row_scale: Vec<BigInt> = (0..n).map(|i| lcm_of(&mut self.row(i).iter())).collect();
        let col_scale: Vec<BigInt> = (0..p)
            .map(|j| lcm_of(&mut (0..inner).map(|k| &other[(k, j)])))
            .collect();
        let a: Vec<Option<BigInt>> = (0..n * inner)
            .map(|t| scaled(&self.data[t], &row_scale[t / inner]))
            .collect();
        let b: Vec<Option<BigInt>> = (0..inner * p)
            .map(|t| scaled(&other.data[t], &col_scale[t % p]))
            .collect();
        let mut acc = vec![BigInt::zero(); n * p];
        for i in 0..n {
            let out = &mut acc[i * p..(i + 1) * p];
            for k in 0..inner {
                let Some(x) = &a[i * inner + k] else { continue };
                for (o, y) in out.iter_mut().zip(&b[k * p..(k + 1) * p]) {
                    if let Some(y) = y {
                        *o += x * y;
                    }
                }
            }
        }
        let data = acc
            .into_iter()
            .enumerate()
            .map(|(t, num)| {
                if num.is_zero() {
                    Scalar::Rational(BigRational::zero())
                } else {
                    let den = &row_scale[t / p] * &col_scale[t % p];
                    Scalar::Rational(BigRational::new(num, den))
                }
            })
            .collect();
        Mat {
            rows: n,
            cols: p,
            field: Field::Rationals,
            data,
        }
    }

    pub fn pow(&self, e: u32) -> Mat {
        assert!(self.is_square());
        (0..e).fold(Mat::identity(self.field, self.rows), |acc, _| &acc * self)
    }

    /// Kronecker product: block `(i, j)` of the result is `self[i][j] · other`.
    pub fn kron(&self, other: &Mat) -> Result<Mat> {
        self.field.check(&other.field)?;
        let (p, q) = (other.rows, other.cols);
        let mut out = Mat::zeros(self.field, self.rows * p, self.cols * q);
        let oc = out.cols;
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..p {
                    for l in 0..q {
                        let b = &other[(k, l)];
                        if !b.is_zero() {
                            out.data[(i * p + k) * oc + j * q + l] = a * b;
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().expect("pivot is nonzero");
            for x in &mut m.data[r * m.cols..(r + 1) * m.cols] {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
            let pivot_row = m.row(r).to_vec();
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let factor = -&m[(i, c)];
                let row = &mut m.data[i * m.cols..(i + 1) * m.cols];
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                    if !p.is_zero() {
                        x.add_product(&factor, p);
                    }
                }
            }
            pivot_cols.push(c);
            r += 1;
        }
        let rank = pivot_cols.len();
        let mut nullspace = Vec::new();
        for free in (0..m.cols).filter(|c| !pivot_cols.contains(c)) {
            let mut v = vec![m.field.zero(); m.cols];
            v[free] = m.field.one();
            for (row, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -&m[(row, free)];
            }
            nullspace.push(v);
        }
        Rref {
            rank,
            pivot_cols,
            reduced: m,
            nullspace,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    pub fn invert(&self) -> Result<Mat> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch(format!(
                "cannot invert a {}×{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut aug = Mat::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = self.field.one();
        }
        let red = aug.rref();
        if red.pivot_cols.iter().copied().ne(0..n) {
            return Err(Error::NotInvertible);
        }
        Ok(Mat::from_fn(self.field, n, n, |i, j| {
            red.reduced[(i, n + j)].clone()
        }))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn same_shape(&self, other: &Mat) -> Result<()> {
        self.field.check(&other.field)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::ShapeMismatch(format!(
                "{}×{} vs {}×{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

/// Panics on mismatched shapes or fields; use [`Mat::try_mul`] for untrusted input.
impl Mul for &Mat {
    type Output = Mat;
    fn mul(self, rhs: &Mat) -> Mat {
        self.try_mul(rhs).expect("matrix product")
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Output of [`Mat::rref`].
#[derive(Clone, Debug)]
pub struct Rref {
    pub rank: usize,
    /// Strictly increasing, 0-based.
    pub pivot_cols: Vec<usize>,
    pub reduced: Mat,
    /// One vector per free column `f`: a 1 at `f`, minus the reduced column
    /// entries at the pivot positions, zero elsewhere.
    pub nullspace: Vec<Vec<Scalar>>,
}

/// `c = left · right` with `left` of full column rank and `right` of full row rank.
#[derive(Clone, Debug)]
pub struct RankFactorization {
    pub left: Mat,
    pub right: Mat,
}

/// Leftmost-pivot rank factorization: `left` collects the columns of `c` at
/// the pivot columns of `rref(c)`, `right` the nonzero rows of `rref(c)`.
pub fn rank_factorize(c: &Mat) -> RankFactorization {
    let red = c.rref();
    let r = red.rank;
    let left = Mat::from_fn(c.field(), c.rows(), r, |i, t| {
        c[(i, red.pivot_cols[t])].clone()
    });
    let right = Mat::from_fn(c.field(), r, c.cols(), |t, j| red.reduced[(t, j)].clone());
    RankFactorization { left, right }
}

/// Solves `Σ cᵢ·basisᵢ = v` repeatedly against a fixed independent family.
#[derive(Clone, Debug)]
pub struct SpanSolver {
    field: Field,
    len: usize,
    basis: Vec<Vec<Scalar>>,
    /// Rows of the basis matrix on which it is invertible.
    rows: Vec<usize>,
    /// Inverse of the basis matrix restricted to `rows`.
    inverse: Mat,
}

impl SpanSolver {
    pub fn new(field: Field, len: usize, basis: &[Vec<Scalar>]) -> Result<SpanSolver> {
        let k = basis.len();
        if basis.iter().any(|b| b.len() != len) {
            return Err(Error::ShapeMismatch(
                "basis vectors of unequal length".into(),
            ));
        }
        if let Some(bad) = basis.iter().flatten().find(|s| s.field() != field) {
            return Err(Error::FieldMismatch(field, bad.field()));
        }
        // Rows of `B` (len × k, basis as columns) are columns of `Bᵀ`.
        let bt = Mat::from_fn(field, k, len, |i, j| basis[i][j].clone());
        let red = bt.rref();
        if red.rank < k {
            return Err(Error::DependentBasis);
        }
        let rows = red.pivot_cols;
        let square = Mat::from_fn(field, k, k, |i, j| basis[j][rows[i]].clone());
        let inverse = square.invert().map_err(|_| Error::DependentBasis)?;
        Ok(SpanSolver {
            field,
            len,
            basis: basis.to_vec(),
            rows,
            inverse,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn coords(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.len {
            return Err(Error::ShapeMismatch(format!(
                "vector of length {} against basis of length {}",
                v.len(),
                self.len
            )));
        }
        let k = self.basis.len();
        let mut c = vec![self.field.zero(); k];
        for (i, ci) in c.iter_mut().enumerate() {
            for (t, &r) in self.rows.iter().enumerate() {
                if !v[r].is_zero() {
                    ci.add_product(&self.inverse[(i, t)], &v[r]);
                }
            }
        }
        // The restricted solve only sees `rows`; confirm every coordinate.
        let mut recon = vec![self.field.zero(); self.len];
        for (b, ci) in self.basis.iter().zip(&c) {
            if ci.is_zero() {
                continue;
            }
            for (x, bj) in recon.iter_mut().zip(b) {
                if !bj.is_zero() {
                    x.add_product(ci, bj);
                }
            }
        }
        if recon != v {
            return Err(Error::NotInSpan);
        }
        Ok(c)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coords(v).is_ok()
    }
}

/// Coordinates of `v` in an independent family, checked exactly.
pub fn coords_in_span(field: Field, v: &[Scalar], basis: &[Vec<Scalar>]) -> Result<Vec<Scalar>> {
    SpanSolver::new(field, v.len(), basis)?.coords(v)
}

/// Given `x = Σ_{ij} Γ_{ij} lᵢ ⊗ rⱼ` encoded as `x[p][q] = Σ Γ_{ij} lᵢ[p] rⱼ[q]`,
/// recover `Γ`.
pub fn bilinear_coords(left: &SpanSolver, right: &SpanSolver, x: &Mat) -> Result<Mat> {
    // Column q of x lies in span(l): x = L·Y.
    let y: Vec<Vec<Scalar>> = (0..x.cols())
        .map(|q| left.coords(&x.column(q)))
        .collect::<Result<_>>()?;
    // Row i of Y lies in span(r): Y = Γ·Rᵀ.
    let k = left.dim();
    let rows: Vec<Vec<Scalar>> = (0..k)
        .map(|i| {
            let yi: Vec<Scalar> = y.iter().map(|col| col[i].clone()).collect();
            right.coords(&yi)
        })
        .collect::<Result<_>>()?;
    Mat::from_vec(
        left.field,
        k,
        right.dim(),
        rows.into_iter().flatten().collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field::Rationals as Q;
    use proptest::prelude::*;

    fn q(rows: &[&[i64]]) -> Mat {
        Mat::from_ints(Q, rows)
    }

    #[test]
    fn rref_identity() {
        let r = Mat::identity(Q, 3).rref();
        assert_eq!(r.rank, 3);
        assert_eq!(r.pivot_cols, vec![0, 1, 2]);
        assert!(r.nullspace.is_empty());
    }

    #[test]
    fn rref_zero() {
        let r = Mat::zeros(Q, 2, 2).rref();
        assert_eq!(r.rank, 0);
        assert_eq!(
            r.nullspace,
            vec![vec![Q.one(), Q.zero()], vec![Q.zero(), Q.one()]]
        );
    }

    #[test]
    fn rref_rank_one() {
        let r = q(&[&[1, 2], &[2, 4]]).rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivot_cols, vec![0]);
        assert_eq!(r.reduced, q(&[&[1, 2], &[0, 0]]));
        assert_eq!(r.nullspace, vec![vec![Q.from_i64(-2), Q.from_i64(1)]]);
    }

    #[test]
    fn invert_cases() {
        assert_eq!(Mat::identity(Q, 4).invert().unwrap(), Mat::identity(Q, 4));
        assert_eq!(q(&[&[1, 1], &[1, 1]]).invert(), Err(Error::NotInvertible));
        let a = q(&[&[2, 1], &[7, 4]]);
        assert_eq!(a.invert().unwrap(), q(&[&[4, -1], &[-7, 2]]));
        let f5 = Field::Prime(5);
        let b = Mat::from_ints(f5, &[[2, 0], [0, 3]]);
        assert_eq!(b.invert().unwrap(), Mat::from_ints(f5, &[[3, 0], [0, 2]]));
        assert!(q(&[&[1, 2, 3]]).invert().is_err());
    }

    #[test]
    fn span_coordinates() {
        let b1 = vec![Q.from_i64(1), Q.from_i64(0), Q.from_i64(1)];
        let b2 = vec![Q.from_i64(0), Q.from_i64(1), Q.from_i64(1)];
        let basis = vec![b1.clone(), b2.clone()];
        assert_eq!(
            coords_in_span(Q, &b1, &basis).unwrap(),
            vec![Q.one(), Q.zero()]
        );
        let v = vec![Q.from_i64(3), Q.from_i64(-2), Q.from_i64(1)];
        assert_eq!(
            coords_in_span(Q, &v, &basis).unwrap(),
            vec![Q.from_i64(3), Q.from_i64(-2)]
        );
        let outside = vec![Q.from_i64(1), Q.from_i64(0), Q.from_i64(0)];
        assert_eq!(coords_in_span(Q, &outside, &basis), Err(Error::NotInSpan));
        let dependent = vec![b1.clone(), b1];
        assert_eq!(
            coords_in_span(Q, &v, &dependent),
            Err(Error::DependentBasis)
        );
    }

    #[test]
    fn matrix_units_outside_span() {
        // e12 against {I2, e21}, both flattened row-major.
        let e12 = Mat::unit(Q, 2, 0, 1).into_entries();
        let basis = vec![
            Mat::identity(Q, 2).into_entries(),
            Mat::unit(Q, 2, 1, 0).into_entries(),
        ];
        assert_eq!(coords_in_span(Q, &e12, &basis), Err(Error::NotInSpan));
    }

    #[test]
    fn rank_factorize_cases() {
        let id = Mat::identity(Q, 3);
        let f = rank_factorize(&id);
        assert_eq!((f.left.clone(), f.right.clone()), (id.clone(), id));

        let outer = q(&[&[2, -4, 6], &[1, -2, 3]]);
        let f = rank_factorize(&outer);
        assert_eq!(f.left.cols(), 1);
        assert_eq!(&f.left * &f.right, outer);

        let zero = Mat::zeros(Q, 2, 3);
        let f = rank_factorize(&zero);
        assert_eq!((f.left.cols(), f.right.rows()), (0, 0));
    }

    #[test]
    fn kron_block_layout() {
        let a = q(&[&[1, 2], &[3, 4]]);
        let b = q(&[&[0, 1], &[1, 0]]);
        assert_eq!(
            a.kron(&b).unwrap(),
            q(&[&[0, 1, 0, 2], &[1, 0, 2, 0], &[0, 3, 0, 4], &[3, 0, 4, 0]])
        );
        assert!(a.kron(&Mat::identity(Field::Prime(3), 2)).is_err());
    }

    fn small_mat(field: Field) -> impl Strategy<Value = Mat> {
        (1usize..5, 1usize..5).prop_flat_map(move |(r, c)| {
            proptest::collection::vec(-3i64..4, r * c).prop_map(move |v| {
                let rows: Vec<Vec<i64>> = v.chunks(c).map(<[i64]>::to_vec).collect();
                Mat::from_ints(field, &rows)
            })
        })
    }

    fn any_mat() -> impl Strategy<Value = Mat> {
        prop_oneof![
            small_mat(Q),
            small_mat(Field::Prime(2)),
            small_mat(Field::Prime(5))
        ]
    }

    fn fractions(rows: usize, cols: usize) -> impl Strategy<Value = Mat> {
        proptest::collection::vec((-9i64..=9, 1i64..=12), rows * cols).prop_map(move |v| {
            let data = v
                .into_iter()
                .map(|(a, b)| Q.fraction(&a.into(), &b.into()).unwrap())
                .collect();
            Mat::from_vec(Q, rows, cols, data).unwrap()
        })
    }

    proptest! {
        #[test]
        fn rational_product_matches_entrywise_sum(
            (a, b) in (1usize..5, 1usize..5, 1usize..5)
                .prop_flat_map(|(n, k, p)| (fractions(n, k), fractions(k, p)))
        ) {
            let expected = Mat::from_fn(Q, a.rows(), b.cols(), |i, j| {
                (0..a.cols()).fold(Q.zero(), |acc, k| &acc + &(&a[(i, k)] * &b[(k, j)]))
            });
            prop_assert_eq!(&a * &b, expected);
        }

        #[test]
        fn rank_factorization_reproduces(m in any_mat()) {
            let f = rank_factorize(&m);
            let r = m.rank();
            prop_assert_eq!(f.left.cols(), r);
            prop_assert_eq!(f.left.rank(), r);
            prop_assert_eq!(f.right.rank(), r);
            if r > 0 {
                prop_assert_eq!(&f.left * &f.right, m);
            } else {
                prop_assert!(m.is_zero());
            }
        }

        #[test]
        fn rref_is_idempotent(m in any_mat()) {
            let once = m.rref();
            let twice = once.reduced.rref();
            prop_assert_eq!(&twice.reduced, &once.reduced);
            prop_assert_eq!(twice.pivot_cols, once.pivot_cols.clone());
            prop_assert!(once.pivot_cols.windows(2).all(|w| w[0] < w[1]));
            prop_assert_eq!(once.nullspace.len(), m.cols() - once.rank);
            for v in &once.nullspace {
                let col = Mat::from_vec(m.field(), v.len(), 1, v.clone()).unwrap();
                prop_assert!((&m * &col).is_zero());
            }
        }

        #[test]
        fn inverse_agrees_with_rank(m in any_mat()) {
            if m.is_square() {
                match m.invert() {
                    Ok(inv) => {
                        let id = Mat::identity(m.field(), m.rows());
                        prop_assert_eq!(&inv * &m, id.clone());
                        prop_assert_eq!(&m * &inv, id);
                    }
                    Err(e) => {
                        prop_assert_eq!(e, Error::NotInvertible);
                        prop_assert!(m.rank() < m.rows());
                    }
                }
            }
        }
    }
}

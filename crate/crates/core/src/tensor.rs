//! Elements of Mₙ⊗Mₙ and Mₙ⊗Mₙ⊗Mₙ stored as Kronecker matrices.
//!
//! Pair indices `(i, k)` map to `i·n + k` and triples `(i, k, s)` to
//! `i·n² + k·n + s` (0-based here, 1-based in the file formats). With this
//! convention `A⊗B` is literally the Kronecker product, and block `(i, j)` of
//! a [`Tensor2`] is the matrix `A_{ij}` in `R = Σ e_{ij}⊗A_{ij}`.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Mat;

/// Kronecker product of two square matrices over one field.
pub fn kron(a: &Mat, b: &Mat) -> Result<Mat> {
    if !a.is_square() || !b.is_square() {
        return Err(Error::ShapeMismatch("kron expects square factors".into()));
    }
    a.kron(b)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor2 {
    n: usize,
    kron: Mat,
}

/// Which two of the three tensor legs a [`Tensor2`] occupies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Leg {
    L12,
    L13,
    L23,
}

impl Tensor2 {
    pub fn new(n: usize, kron: Mat) -> Result<Tensor2> {
        if n == 0 || kron.rows() != n * n || kron.cols() != n * n {
            return Err(Error::ShapeMismatch(format!(
                "expected a {0}×{0} Kronecker matrix, got {1}×{2}",
                n * n,
                kron.rows(),
                kron.cols()
            )));
        }
        Ok(Tensor2 { n, kron })
    }

    pub fn identity(field: Field, n: usize) -> Tensor2 {
        Tensor2 {
            n,
            kron: Mat::identity(field, n * n),
        }
    }

    /// The simple tensor `a⊗b`.
    pub fn simple(a: &Mat, b: &Mat) -> Result<Tensor2> {
        if a.rows() != b.rows() {
            return Err(Error::ShapeMismatch("factors of different sizes".into()));
        }
        Tensor2::new(a.rows(), kron(a, b)?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> Field {
        self.kron.field()
    }

    pub fn matrix(&self) -> &Mat {
        &self.kron
    }

    pub fn is_zero(&self) -> bool {
        self.kron.is_zero()
    }

    pub fn invert(&self) -> Result<Tensor2> {
        Ok(Tensor2 {
            n: self.n,
            kron: self.kron.invert()?,
        })
    }

    pub fn mul(&self, other: &Tensor2) -> Result<Tensor2> {
        Ok(Tensor2 {
            n: self.n,
            kron: self.kron.try_mul(&other.kron)?,
        })
    }

    pub fn leg_embed(&self, leg: Leg) -> Tensor3 {
        let n = self.n;
        let f = self.field();
        let id = Mat::identity(f, n);
        let mat = match leg {
            Leg::L12 => self.kron.kron(&id).expect("same field"),
            Leg::L23 => id.kron(&self.kron).expect("same field"),
            Leg::L13 => {
                let nn = n * n;
                let mut out = Mat::zeros(f, n * nn, n * nn);
                for r in 0..nn {
                    let (i, k) = (r / n, r % n);
                    for c in 0..nn {
                        let t = &self.kron[(r, c)];
                        if t.is_zero() {
                            continue;
                        }
                        let (j, l) = (c / n, c % n);
                        for a in 0..n {
                            out[(i * nn + a * n + k, j * nn + a * n + l)] = t.clone();
                        }
                    }
                }
                out
            }
        };
        Tensor3 { n, mat }
    }

    /// Reshuffle with `C[(i,j),(k,l)] = (A_{ij})_{kl}`, so that
    /// `R = Σ C[(i,j),(k,l)] e_{ij}⊗e_{kl}` and `rank C` is the tensor length.
    pub fn coefficient_matrix(&self) -> Mat {
        let n = self.n;
        Mat::from_fn(self.field(), n * n, n * n, |row, col| {
            let (i, j) = (row / n, row % n);
            let (k, l) = (col / n, col % n);
            self.kron[(i * n + k, j * n + l)].clone()
        })
    }

    pub fn from_coefficient_matrix(n: usize, c: &Mat) -> Result<Tensor2> {
        if c.rows() != n * n || c.cols() != n * n {
            return Err(Error::ShapeMismatch(
                "coefficient matrix must be n²×n²".into(),
            ));
        }
        let kron = Mat::from_fn(c.field(), n * n, n * n, |row, col| {
            let (i, k) = (row / n, row % n);
            let (j, l) = (col / n, col % n);
            c[(i * n + j, k * n + l)].clone()
        });
        Tensor2::new(n, kron)
    }

    /// `blocks()[i][j] = A_{ij}`.
    pub fn blocks(&self) -> Vec<Vec<Mat>> {
        let n = self.n;
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        Mat::from_fn(self.field(), n, n, |k, l| {
                            self.kron[(i * n + k, j * n + l)].clone()
                        })
                    })
                    .collect()
            })
            .collect()
    }

    pub fn from_blocks(blocks: &[Vec<Mat>]) -> Result<Tensor2> {
        let n = blocks.len();
        if n == 0 || blocks.iter().any(|row| row.len() != n) {
            return Err(Error::ShapeMismatch(format!(
                "expected an n×n array of blocks, got {n} rows of lengths {:?}",
                blocks.iter().map(Vec::len).collect::<Vec<_>>()
            )));
        }
        let field = blocks[0][0].field();
        for b in blocks.iter().flatten() {
            field.check(&b.field())?;
            if b.rows() != n || b.cols() != n {
                return Err(Error::ShapeMismatch(format!(
                    "block of size {}×{}",
                    b.rows(),
                    b.cols()
                )));
            }
        }
        let kron = Mat::from_fn(field, n * n, n * n, |row, col| {
            blocks[row / n][col / n][(row % n, col % n)].clone()
        });
        Tensor2::new(n, kron)
    }

    /// `(u⊗u)·T·(u⊗u)⁻¹`.
    pub fn conjugate(&self, u: &Mat) -> Result<Tensor2> {
        if u.rows() != self.n || !u.is_square() {
            return Err(Error::ShapeMismatch("conjugator must be n×n".into()));
        }
        self.field().check(&u.field())?;
        let uu = u.kron(u)?;
        let uu_inv = uu.invert()?;
        Ok(Tensor2 {
            n: self.n,
            kron: &(&uu * &self.kron) * &uu_inv,
        })
    }

    pub fn length(&self) -> usize {
        self.coefficient_matrix().rank()
    }
}

/// An element of Mₙ⊗Mₙ⊗Mₙ as an n³×n³ matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    n: usize,
    mat: Mat,
}

impl Tensor3 {
    pub fn identity(field: Field, n: usize) -> Tensor3 {
        Tensor3 {
            n,
            mat: Mat::identity(field, n * n * n),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &Mat {
        &self.mat
    }

    pub fn mul(&self, other: &Tensor3) -> Tensor3 {
        Tensor3 {
            n: self.n,
            mat: &self.mat * &other.mat,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field::Rationals as Q;
    use proptest::prelude::*;

    fn cyclic2() -> Tensor2 {
        let a = Mat::from_ints(Q, &[[0, 1], [1, 0]]);
        let r = kron(&Mat::unit(Q, 2, 0, 0), &Mat::identity(Q, 2))
            .unwrap()
            .try_add(&kron(&Mat::unit(Q, 2, 1, 1), &a).unwrap())
            .unwrap();
        Tensor2::new(2, r).unwrap()
    }

    #[test]
    fn kron_examples() {
        assert_eq!(
            kron(&Mat::identity(Q, 2), &Mat::identity(Q, 2)).unwrap(),
            Mat::identity(Q, 4)
        );
        let k = kron(&Mat::unit(Q, 2, 0, 1), &Mat::identity(Q, 2)).unwrap();
        let nonzero: Vec<(usize, usize)> = (0..4)
            .flat_map(|i| (0..4).map(move |j| (i, j)))
            .filter(|&(i, j)| !k[(i, j)].is_zero())
            .collect();
        assert_eq!(nonzero, vec![(0, 2), (1, 3)]);
        assert!(kron(&Mat::identity(Q, 2), &Mat::identity(Field::Prime(2), 2)).is_err());
    }

    #[test]
    fn leg_embeddings() {
        let id = Tensor2::identity(Q, 2);
        assert_eq!(id.leg_embed(Leg::L12), Tensor3::identity(Q, 2));

        let t = cyclic2();
        assert_eq!(
            t.leg_embed(Leg::L23).matrix(),
            &kron(&Mat::identity(Q, 2), t.matrix()).unwrap()
        );

        // e12⊗e21 in leg 13: nonzero exactly at ((1,a,2),(2,a,1)), 1-based.
        let t = Tensor2::simple(&Mat::unit(Q, 2, 0, 1), &Mat::unit(Q, 2, 1, 0)).unwrap();
        let m = t.leg_embed(Leg::L13);
        let mut nonzero = Vec::new();
        for r in 0..8 {
            for c in 0..8 {
                if !m.matrix()[(r, c)].is_zero() {
                    nonzero.push((r, c));
                }
            }
        }
        let idx = |i: usize, a: usize, k: usize| (i - 1) * 4 + (a - 1) * 2 + (k - 1);
        let expected: Vec<(usize, usize)> = (1..=2).map(|a| (idx(1, a, 2), idx(2, a, 1))).collect();
        assert_eq!(nonzero, expected);
    }

    #[test]
    fn coefficient_matrix_examples() {
        let id = Tensor2::identity(Q, 3);
        let c = id.coefficient_matrix();
        assert_eq!(c.rank(), 1);
        for i in 0..3 {
            for j in 0..3 {
                let expected = if i == j {
                    Mat::identity(Q, 3).into_entries()
                } else {
                    vec![Q.zero(); 9]
                };
                assert_eq!(c.row(i * 3 + j), &expected[..]);
            }
        }

        let c = cyclic2().coefficient_matrix();
        assert_eq!(c.rank(), 2);
        assert_eq!(
            c,
            Mat::from_ints(Q, &[[1, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0], [0, 1, 1, 0]])
        );
        assert_eq!(Tensor2::from_coefficient_matrix(2, &c).unwrap(), cyclic2());
    }

    #[test]
    fn blocks_examples() {
        let b = Tensor2::identity(Q, 3).blocks();
        for (i, row) in b.iter().enumerate() {
            for (j, blk) in row.iter().enumerate() {
                let expect = if i == j {
                    Mat::identity(Q, 3)
                } else {
                    Mat::zeros(Q, 3, 3)
                };
                assert_eq!(blk, &expect);
            }
        }

        let b = cyclic2().blocks();
        assert_eq!(b[0][0], Mat::identity(Q, 2));
        assert_eq!(b[1][1], Mat::from_ints(Q, &[[0, 1], [1, 0]]));
        assert!(b[0][1].is_zero() && b[1][0].is_zero());
        assert_eq!(
            Tensor2::from_blocks(&b).unwrap().matrix(),
            &Mat::from_ints(Q, &[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
        );

        let bad = vec![vec![Mat::identity(Q, 2)], vec![Mat::identity(Q, 2)]];
        assert!(matches!(
            Tensor2::from_blocks(&bad),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn conjugation_examples() {
        let t = cyclic2();
        assert_eq!(t.conjugate(&Mat::identity(Q, 2)).unwrap(), t);
        let c = Mat::identity(Q, 2).scale(&Q.from_i64(-5));
        assert_eq!(t.conjugate(&c).unwrap(), t);
        let singular = Mat::from_ints(Q, &[[1, 1], [1, 1]]);
        assert_eq!(t.conjugate(&singular), Err(Error::NotInvertible));
        let swap = Mat::from_ints(Q, &[[0, 1], [1, 0]]);
        assert_eq!(t.conjugate(&swap).unwrap().length(), 2);
    }

    fn tensor(n: usize) -> impl Strategy<Value = Tensor2> {
        proptest::collection::vec(-2i64..3, n.pow(4)).prop_map(move |v| {
            let rows: Vec<Vec<i64>> = v.chunks(n * n).map(<[i64]>::to_vec).collect();
            Tensor2::new(n, Mat::from_ints(Q, &rows)).unwrap()
        })
    }

    fn invertible(n: usize) -> impl Strategy<Value = Mat> {
        proptest::collection::vec(-3i64..4, n * n)
            .prop_map(move |v| {
                let rows: Vec<Vec<i64>> = v.chunks(n).map(<[i64]>::to_vec).collect();
                Mat::from_ints(Q, &rows)
            })
            .prop_filter("singular", |m| m.rank() == m.rows())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn leg_embedding_is_multiplicative(t in tensor(2), s in tensor(2)) {
            let ts = t.mul(&s).unwrap();
            for leg in [Leg::L12, Leg::L13, Leg::L23] {
                prop_assert_eq!(
                    t.leg_embed(leg).mul(&s.leg_embed(leg)),
                    ts.leg_embed(leg)
                );
            }
        }

        #[test]
        fn reshuffles_round_trip(t in tensor(2)) {
            let c = t.coefficient_matrix();
            prop_assert_eq!(Tensor2::from_coefficient_matrix(2, &c).unwrap(), t.clone());
            prop_assert_eq!(Tensor2::from_blocks(&t.blocks()).unwrap(), t);
        }

        #[test]
        fn conjugation_is_a_group_action(t in tensor(2), u in invertible(2), v in invertible(2)) {
            let uv = &u * &v;
            prop_assert_eq!(
                t.conjugate(&uv).unwrap(),
                t.conjugate(&v).unwrap().conjugate(&u).unwrap()
            );
            prop_assert_eq!(t.conjugate(&u).unwrap().length(), t.length());
        }
    }
}

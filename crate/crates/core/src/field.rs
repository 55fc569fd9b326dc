//! Exact scalars over ℚ and prime fields 𝔽ₚ.
//!
//! A [`Scalar`] carries its field with it. Arithmetic between scalars of
//! different fields is a programming error and panics; matrix-level entry
//! points check fields up front and report [`Error::FieldMismatch`] instead.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Moduli must stay below this bound so products fit in `u128` comfortably.
pub const MAX_MODULUS: u64 = 1 << 61;

/// The ground field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if p >= MAX_MODULUS {
            return Err(Error::BadField(format!("modulus {p} exceeds 2^61")));
        }
        if !is_prime(p) {
            return Err(Error::BadField(format!("{p} is not prime")));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match *self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Residue {
                value: v.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    /// `num / den` reduced into the field; `None` if `den` vanishes in it.
    pub fn fraction(&self, num: &BigInt, den: &BigInt) -> Option<Scalar> {
        match *self {
            Field::Rationals => {
                if den.is_zero() {
                    None
                } else {
                    Some(Scalar::Rational(BigRational::new(num.clone(), den.clone())))
                }
            }
            Field::Prime(p) => {
                let m = BigInt::from(p);
                let reduce = |x: &BigInt| -> u64 {
                    let r = ((x % &m) + &m) % &m;
                    u64::try_from(r).expect("residue fits in u64")
                };
                let n = Scalar::Residue {
                    value: reduce(num),
                    modulus: p,
                };
                let d = Scalar::Residue {
                    value: reduce(den),
                    modulus: p,
                };
                d.inv().map(|d| &n * &d)
            }
        }
    }

    /// Parses `"a"`, `"-a"` or `"a/b"`. Residues may be given unreduced.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let bad = || Error::Parse(format!("invalid scalar {text:?}"));
        let text = text.trim();
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        self.fraction(&num, &den)
            .ok_or_else(|| Error::Parse(format!("zero denominator in {text:?}")))
    }

    pub fn check(&self, other: &Field) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::FieldMismatch(*self, *other))
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

/// Deterministic Miller–Rabin, exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// An exact field element in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Residue { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    /// Textual form used by the file formats: `"n"` or `"n/d"` over ℚ,
    /// the residue in `[0, p)` over 𝔽ₚ.
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Scalar::Rational(_) => serde_json::Value::String(self.to_string()),
            Scalar::Residue { value, .. } => serde_json::Value::from(*value),
        }
    }

    fn same_field(&self, other: &Scalar) {
        assert_eq!(self.field(), other.field(), "mixed-field scalar arithmetic");
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.same_field(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => {
                let s = a + b;
                Scalar::Residue {
                    value: if s >= *modulus { s - modulus } else { s },
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.same_field(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => {
                Scalar::Residue {
                    value: if a >= b { a - b } else { a + modulus - b },
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.same_field(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => {
                Scalar::Residue {
                    value: mul_mod(*a, *b, *modulus),
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.same_field(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a += b,
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => {
                let s = *a + b;
                *a = if s >= *modulus { s - *modulus } else { s };
            }
            _ => unreachable!(),
        }
    }
}

impl Scalar {
    /// `self += a * b`, the inner-loop operation of every product.
    pub fn add_product(&mut self, a: &Scalar, b: &Scalar) {
        match (&mut *self, a, b) {
            (
                Scalar::Residue { value, modulus },
                Scalar::Residue { value: x, .. },
                Scalar::Residue { value: y, .. },
            ) => {
                a.same_field(b);
                let m = *modulus as u128;
                *value = ((*value as u128 + *x as u128 * *y as u128) % m) as u64;
            }
            _ => *self += &(a * b),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_negative(),
            Scalar::Residue { .. } => false,
        }
    }
}

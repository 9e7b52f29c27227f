//! Exact ground fields: prime fields `F_p` and the rationals.
//!
//! Scalars carry their field so that arithmetic needs no context. Mixing
//! scalars of different fields is a programming error and panics.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default characteristic. Large enough that the trace-form radical is
/// valid for every endomorphism ring met at desk scale.
pub const DEFAULT_PRIME: u64 = 32003;

/// Largest prime accepted; keeps products of representatives inside `u64`.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Fp(u64),
    Rationals,
}

impl Default for Field {
    fn default() -> Self {
        Field::Fp(DEFAULT_PRIME)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Fp(p) => write!(f, "Fp {p}"),
            Field::Rationals => write!(f, "Q"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::invalid("field", format!("{p} is not prime")));
        }
        if p > MAX_PRIME {
            return Err(Error::invalid("field", format!("prime {p} exceeds {MAX_PRIME}")));
        }
        Ok(Field::Fp(p))
    }

    /// `Some(p)` for prime fields, `None` in characteristic zero.
    pub fn characteristic(&self) -> Option<u64> {
        match self {
            Field::Fp(p) => Some(*p),
            Field::Rationals => None,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Fp(p) => Scalar::Fp { v: 0, p: *p },
            Field::Rationals => Scalar::Q(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Fp(p) => {
                let p = *p as i64;
                Scalar::Fp {
                    v: n.rem_euclid(p) as u64,
                    p: p as u64,
                }
            }
            Field::Rationals => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
        }
    }

    fn reduce_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            Field::Fp(p) => {
                let m = BigInt::from(*p);
                let r = ((n % &m) + &m) % &m;
                Scalar::Fp {
                    v: r.to_u64().expect("reduced value fits"),
                    p: *p,
                }
            }
            Field::Rationals => Scalar::Q(BigRational::from_integer(n.clone())),
        }
    }

    /// Parses an integer or a fraction `a/b`.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let bad = || Error::invalid("parse", format!("invalid coefficient '{text}'"));
        let (num, den) = match text.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (text.trim(), "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad())?;
        let den: BigInt = den.parse().map_err(|_| bad())?;
        let d = self.reduce_bigint(&den);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.reduce_bigint(&num).div(&d)
    }

    /// Seeded random scalar; over `Q` a small integer.
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Scalar {
        match self {
            Field::Fp(p) => Scalar::Fp {
                v: rng.gen_range(0..*p),
                p: *p,
            },
            Field::Rationals => self.from_i64(rng.gen_range(-1000..=1000)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Fp { v: u64, p: u64 },
    Q(BigRational),
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Fp { p, .. } => Field::Fp(*p),
            Scalar::Q(_) => Field::Rationals,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Fp { v, .. } => *v == 0,
            Scalar::Q(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Fp { v, .. } => *v == 1,
            Scalar::Q(q) => q.is_one(),
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Fp { v, p } => Scalar::Fp {
                v: pow_mod(*v, p - 2, *p),
                p: *p,
            },
            Scalar::Q(q) => Scalar::Q(q.recip()),
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self * &other.inv()?)
    }

    /// Integer representative for `F_p`, numerator/denominator for `Q`.
    pub fn as_rational_parts(&self) -> (BigInt, BigInt) {
        match self {
            Scalar::Fp { v, .. } => (BigInt::from(*v), BigInt::one()),
            Scalar::Q(q) => (q.numer().clone(), q.denom().clone()),
        }
    }

    pub(crate) fn is_negative_rational(&self) -> bool {
        matches!(self, Scalar::Q(q) if q.is_negative())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Fp { v, .. } => write!(f, "{v}"),
            Scalar::Q(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $fp:expr, $q:expr) => {
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) => {
                        assert_eq!(p, q, "mixed prime fields");
                        Scalar::Fp {
                            v: $fp(*a, *b, *p),
                            p: *p,
                        }
                    }
                    (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q($q(a, b)),
                    _ => panic!("mixed fields"),
                }
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}

binop!(
    Add,
    add,
    |a: u64, b: u64, p: u64| (a + b) % p,
    |a: &BigRational, b: &BigRational| a + b
);
binop!(
    Sub,
    sub,
    |a: u64, b: u64, p: u64| (a + p - b) % p,
    |a: &BigRational, b: &BigRational| a - b
);
binop!(
    Mul,
    mul,
    |a: u64, b: u64, p: u64| a * b % p,
    |a: &BigRational, b: &BigRational| a * b
);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Fp { v, p } => Scalar::Fp { v: (p - v) % p, p: *p },
            Scalar::Q(q) => Scalar::Q(-q),
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
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn fp_representatives_are_canonical() {
        let f = Field::Fp(7);
        assert_eq!(f.from_i64(-1), Scalar::Fp { v: 6, p: 7 });
        assert_eq!(f.from_i64(15), Scalar::Fp { v: 1, p: 7 });
        assert_eq!(f.parse_scalar("1/2").unwrap(), f.from_i64(4));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let f = Field::Rationals;
        assert_eq!(f.zero().inv(), Err(Error::DivisionByZero));
        assert_eq!(f.parse_scalar("3/0"), Err(Error::DivisionByZero));
        assert_eq!(Field::Fp(5).parse_scalar("1/5"), Err(Error::DivisionByZero));
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(Field::prime(32003).is_ok());
        assert!(Field::prime(32001).is_err());
    }

    #[test]
    fn rational_display() {
        let f = Field::Rationals;
        assert_eq!(f.parse_scalar("-6/4").unwrap().to_string(), "-3/2");
    }

    proptest! {
        #[test]
        fn fp_inverse(a in 1i64..32003) {
            let f = Field::default();
            let x = f.from_i64(a);
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }

        #[test]
        fn fp_distributive(a in any::<i32>(), b in any::<i32>(), c in any::<i32>()) {
            let f = Field::default();
            let (a, b, c) = (f.from_i64(a as i64), f.from_i64(b as i64), f.from_i64(c as i64));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }
    }
}

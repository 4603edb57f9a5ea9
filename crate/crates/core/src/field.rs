//! Exact coefficient fields: the rationals (arbitrary precision) and prime
//! fields `F_p` for word-sized primes.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Prime used when a prime field is requested without an explicit modulus.
pub const DEFAULT_PRIME: u64 = 32003;

/// A coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    /// Builds `F_p`, rejecting composites and moduli that would overflow
    /// 64-bit products.
    pub fn prime(p: u64) -> Result<Field> {
        if !(2..1 << 32).contains(&p) {
            return Err(Error::InvalidField(format!(
                "modulus {p} out of range [2, 2^32)"
            )));
        }
        let mut d = 2u64;
        while d * d <= p {
            if p.is_multiple_of(d) {
                return Err(Error::InvalidField(format!("{p} is not prime")));
            }
            d += 1;
        }
        Ok(Field::Prime(p))
    }

    /// Parses `QQ` / `qq` or `fp:<p>` / `GF(<p>)`.
    pub fn parse(s: &str) -> Result<Field> {
        let t = s.trim();
        let lower = t.to_ascii_lowercase();
        if lower == "qq" || lower == "q" {
            return Ok(Field::Rationals);
        }
        let digits = if let Some(rest) = lower.strip_prefix("fp:") {
            rest
        } else if let Some(rest) = lower.strip_prefix("gf(").and_then(|r| r.strip_suffix(')')) {
            rest
        } else {
            return Err(Error::InvalidField(t.to_string()));
        };
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::InvalidField(t.to_string()))?;
        Field::prime(p)
    }

    pub fn zero(self) -> Scalar {
        Scalar::from_i64(self, 0)
    }

    pub fn one(self) -> Scalar {
        Scalar::from_i64(self, 1)
    }

    /// A uniformly random element of `F_p`, or a small random rational for `Q`.
    pub fn random<R: Rng + ?Sized>(self, rng: &mut R) -> Scalar {
        match self {
            Field::Rationals => Scalar::from_i64(self, rng.gen_range(-20..=20)),
            Field::Prime(p) => Scalar::Modular {
                value: rng.gen_range(0..p),
                modulus: p,
            },
        }
    }

    /// A random nonzero element.
    pub fn random_nonzero<R: Rng + ?Sized>(self, rng: &mut R) -> Scalar {
        loop {
            let s = self.random(rng);
            if !s.is_zero() {
                return s;
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

/// An exact field element.
///
/// Rationals are kept in lowest terms with positive denominator (guaranteed
/// by `BigRational`); residues are kept in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn from_i64(field: Field, v: i64) -> Scalar {
        match field {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Modular {
                value: v.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    pub fn from_ratio(field: Field, num: i64, den: i64) -> Result<Scalar> {
        Scalar::from_i64(field, num).try_div(&Scalar::from_i64(field, den))
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Modular { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    fn mismatch(&self, other: &Scalar) -> Error {
        Error::FieldMismatch(self.field().to_string(), other.field().to_string())
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a + b)),
            (
                Scalar::Modular {
                    value: a,
                    modulus: p,
                },
                Scalar::Modular {
                    value: b,
                    modulus: q,
                },
            ) if p == q => Ok(Scalar::Modular {
                value: (a + b) % p,
                modulus: *p,
            }),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a * b)),
            (
                Scalar::Modular {
                    value: a,
                    modulus: p,
                },
                Scalar::Modular {
                    value: b,
                    modulus: q,
                },
            ) if p == q => Ok(Scalar::Modular {
                value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                modulus: *p,
            }),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        self.try_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            Scalar::Rational(r) => Ok(Scalar::Rational(r.recip())),
            Scalar::Modular { value, modulus } => Ok(Scalar::Modular {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            }),
        }
    }

    fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Re-normalizes the representative. Values built through the public
    /// API are already normal, so this is the identity on them.
    pub fn normalize(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => {
                Scalar::Rational(BigRational::new(r.numer().clone(), r.denom().clone()))
            }
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: value % modulus,
                modulus: *modulus,
            },
        }
    }

    /// Parses a scalar in the given field from `"p/q"` or `"p"`.
    pub fn parse(field: Field, s: &str) -> Result<Scalar> {
        let t = s.trim();
        let bad = |why: &str| Error::ParseScalar(t.to_string(), why.to_string());
        let (num, den) = match t.split_once('/') {
            Some((a, b)) => (a.trim(), Some(b.trim())),
            None => (t, None),
        };
        let num: BigInt = num.parse().map_err(|_| bad("bad numerator"))?;
        let den: BigInt = match den {
            Some(d) => d.parse().map_err(|_| bad("bad denominator"))?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(bad("zero denominator"));
        }
        match field {
            Field::Rationals => Ok(Scalar::Rational(BigRational::new(num, den))),
            Field::Prime(p) => {
                let pb = BigInt::from(p);
                let reduce = |x: &BigInt| {
                    let r = ((x % &pb) + &pb) % &pb;
                    r.to_u64().unwrap_or(0)
                };
                let n = Scalar::Modular {
                    value: reduce(&num),
                    modulus: p,
                };
                let d = Scalar::Modular {
                    value: reduce(&den),
                    modulus: p,
                };
                n.try_div(&d)
                    .map_err(|_| bad("denominator vanishes modulo p"))
            }
        }
    }

    /// Numerator and denominator for rationals; `None` for residues.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Modular { .. } => None,
        }
    }

    /// Small integer view, when the value is one.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Rational(r) if r.is_integer() => r.numer().to_i64(),
            Scalar::Rational(_) => None,
            Scalar::Modular { value, .. } => Some(*value as i64),
        }
    }

    /// True when the printed form needs no leading minus sign.
    pub(crate) fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_negative(),
            Scalar::Modular { .. } => false,
        }
    }
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % m as u128) as u64;
        }
        b = ((b as u128 * b as u128) % m as u128) as u64;
        e >>= 1;
    }
    acc
}

/// The inverse of `a` modulo `m`, as the representative in `[0, m)`.
pub fn mod_inverse(a: i64, m: i64) -> Result<i64> {
    if m < 2 {
        return Err(Error::Precondition(format!("modulus {m} < 2")));
    }
    let (mut old_r, mut r) = (a.rem_euclid(m), m);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return Err(Error::NotInvertible(a, m));
    }
    Ok(old_s.rem_euclid(m))
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a.cmp(b),
            (
                Scalar::Modular {
                    value: a,
                    modulus: p,
                },
                Scalar::Modular {
                    value: b,
                    modulus: q,
                },
            ) => (p, a).cmp(&(q, b)),
            (Scalar::Rational(_), Scalar::Modular { .. }) => Ordering::Less,
            (Scalar::Modular { .. }, Scalar::Rational(_)) => Ordering::Greater,
        }
    }
}

// Operator forms panic on mixed fields; every polynomial and ideal checks its
// field once at construction, so mixing inside the engine is a bug.
macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs)
                    .expect(concat!("Scalar::", stringify!($method)))
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);
binop!(Div, div, try_div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

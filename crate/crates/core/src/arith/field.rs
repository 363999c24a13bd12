//! Ground fields and their elements.
//!
//! Two perfect fields are supported: the rationals (arbitrary precision) and
//! prime fields `GF(p)`. A [`Scalar`] always carries enough information to do
//! arithmetic on its own; mixing elements of different fields is a logic error
//! and panics.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The ground field of an algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

impl FieldSpec {
    /// `GF(p)`, rejecting composite `p`.
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(FieldSpec::PrimeField(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    /// 0 for the rationals.
    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => p,
        }
    }

    /// Number of elements, or `None` for an infinite field.
    pub fn order(self) -> Option<u64> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::PrimeField(p) => Some(p),
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::PrimeField(p) => Scalar::Residue {
                value: (v as i128).rem_euclid(p as i128) as u64,
                modulus: p,
            },
        }
    }

    /// The `index`-th element in a fixed enumeration of a finite field.
    pub fn element(self, index: u64) -> Scalar {
        match self {
            FieldSpec::Rationals => panic!("the rationals cannot be enumerated"),
            FieldSpec::PrimeField(p) => Scalar::Residue {
                value: index % p,
                modulus: p,
            },
        }
    }

    /// Parses the textual scalar encoding: `a` or `a/b` for rationals, a
    /// (possibly negative or fractional) integer reduced mod `p` otherwise.
    pub fn parse(self, text: &str) -> Result<Scalar> {
        let err = |reason: &str| Error::ScalarParse {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let t = text.trim();
        let (num, den) = match t.split_once('/') {
            Some((a, b)) => (a.trim(), Some(b.trim())),
            None => (t, None),
        };
        let num: BigInt = num.parse().map_err(|_| err("bad numerator"))?;
        let den: BigInt = match den {
            Some(d) => d.parse().map_err(|_| err("bad denominator"))?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(err("zero denominator"));
        }
        match self {
            FieldSpec::Rationals => Ok(Scalar::Rational(BigRational::new(num, den))),
            FieldSpec::PrimeField(p) => {
                let reduce = |v: &BigInt| -> u64 {
                    let m = BigInt::from(p);
                    let r = ((v % &m) + &m) % &m;
                    u64::try_from(r).expect("residue fits in u64")
                };
                let d = Scalar::Residue {
                    value: reduce(&den),
                    modulus: p,
                };
                let n = Scalar::Residue {
                    value: reduce(&num),
                    modulus: p,
                };
                let dinv = d.inv().ok_or_else(|| err("denominator vanishes mod p"))?;
                Ok(&n * &dinv)
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum FieldRepr {
    Name(String),
    Prime {
        #[serde(rename = "GF")]
        gf: u64,
    },
}

impl Serialize for FieldSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match *self {
            FieldSpec::Rationals => FieldRepr::Name("Q".into()),
            FieldSpec::PrimeField(p) => FieldRepr::Prime { gf: p },
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        match FieldRepr::deserialize(d)? {
            FieldRepr::Name(n) if n == "Q" => Ok(FieldSpec::Rationals),
            FieldRepr::Name(n) => Err(D::Error::custom(format!("unknown field {n:?}"))),
            FieldRepr::Prime { gf } => FieldSpec::prime(gf).map_err(D::Error::custom),
        }
    }
}

/// Deterministic Miller-Rabin; exact for all `u64`.
fn is_prime(n: u64) -> bool {
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

/// An exact field element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    /// Always in lowest terms with positive denominator.
    Rational(BigRational),
    /// `value < modulus`, `modulus` prime.
    Residue { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Residue { modulus, .. } => FieldSpec::PrimeField(*modulus),
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

    /// Multiplicative inverse; `None` for zero.
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

    /// Index in the enumeration used by [`FieldSpec::element`].
    pub fn residue(&self) -> Option<u64> {
        match self {
            Scalar::Rational(_) => None,
            Scalar::Residue { value, .. } => Some(*value),
        }
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

fn mismatch() -> ! {
    panic!("arithmetic on scalars from different fields")
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (
                Scalar::Residue { value: a, modulus: p },
                Scalar::Residue { value: b, modulus: q },
            ) if p == q => Scalar::Residue {
                value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                modulus: *p,
            },
            _ => mismatch(),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (
                Scalar::Residue { value: a, modulus: p },
                Scalar::Residue { value: b, modulus: q },
            ) if p == q => Scalar::Residue {
                value: ((*a as u128 + *p as u128 - *b as u128) % *p as u128) as u64,
                modulus: *p,
            },
            _ => mismatch(),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (
                Scalar::Residue { value: a, modulus: p },
                Scalar::Residue { value: b, modulus: q },
            ) if p == q => Scalar::Residue {
                value: mul_mod(*a, *b, *p),
                modulus: *p,
            },
            _ => mismatch(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

//! Exact field scalars: arbitrary-precision rationals or a prime field `F_p`.
//!
//! Every computation in this crate is exact; no floating point appears
//! anywhere. A [`FieldSpec`] picks the ground field once and all scalars
//! carry their field so that cross-field arithmetic is rejected loudly.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Zero};
use std::fmt;

use crate::error::SpechtError;

/// The ground field: the rationals (characteristic 0) or `F_p` for a prime `p < 2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

impl FieldSpec {
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    /// Build a field from a characteristic given on the command line.
    pub fn from_characteristic(c: u64) -> Result<FieldSpec, SpechtError> {
        if c == 0 {
            return Ok(FieldSpec::Rational);
        }
        if c >= 1 << 31 {
            return Err(SpechtError::BadField(format!(
                "characteristic {c} too large"
            )));
        }
        if !is_prime(c) {
            return Err(SpechtError::BadField(format!(
                "characteristic {c} is not prime"
            )));
        }
        Ok(FieldSpec::Prime(c))
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rat(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::Prime(p) => {
                let m = v.rem_euclid(*p as i64) as u64;
                Scalar::Fp { p: *p, v: m }
            }
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar::Rat(BigRational::from_integer(v.clone())),
            FieldSpec::Prime(p) => {
                let m = v.mod_floor_u64(*p);
                Scalar::Fp { p: *p, v: m }
            }
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

trait ModFloor {
    fn mod_floor_u64(&self, p: u64) -> u64;
}

impl ModFloor for BigInt {
    fn mod_floor_u64(&self, p: u64) -> u64 {
        use num::Integer;
        let m = self.mod_floor(&BigInt::from(p));
        let (_, digits) = m.to_u64_digits();
        *digits.first().unwrap_or(&0)
    }
}

/// An exact field element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Fp { p: u64, v: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rat(_) => FieldSpec::Rational,
            Scalar::Fp { p, .. } => FieldSpec::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Fp { p, v: a }, Scalar::Fp { p: q, v: b }) if p == q => Scalar::Fp {
                p: *p,
                v: addmod(*a, *b, *p),
            },
            _ => panic!("scalar field mismatch"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Fp { p, v: a }, Scalar::Fp { p: q, v: b }) if p == q => Scalar::Fp {
                p: *p,
                v: mulmod(*a, *b, *p),
            },
            _ => panic!("scalar field mismatch"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Fp { p, v } => Scalar::Fp {
                p: *p,
                v: if *v == 0 { 0 } else { p - v },
            },
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => {
                assert!(!a.is_zero(), "inverse of zero");
                Scalar::Rat(a.recip())
            }
            Scalar::Fp { p, v } => {
                assert!(*v != 0, "inverse of zero");
                Scalar::Fp {
                    p: *p,
                    v: powmod(*v, p - 2, *p),
                }
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }

    pub fn scale_i64(&self, k: i64) -> Scalar {
        self.mul(&self.field().from_i64(k))
    }

    /// For rationals that are in fact integers, the integer value.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self {
            Scalar::Rat(r) if r.denom().is_one() => Some(r.numer().clone()),
            _ => None,
        }
    }

    /// Reduce a rational (with denominator coprime to `p`) into `F_p`.
    pub fn reduce_mod(&self, p: u64) -> Scalar {
        match self {
            Scalar::Rat(r) => {
                let f = FieldSpec::Prime(p);
                let num = f.from_bigint(r.numer());
                let den = f.from_bigint(r.denom());
                num.div(&den)
            }
            Scalar::Fp { .. } => panic!("reduce_mod of a prime-field scalar"),
        }
    }

    /// Canonical string form: `num/den` over the rationals, `k mod p` over `F_p`.
    pub fn to_display_string(&self) -> String {
        match self {
            Scalar::Rat(r) => format!("{}/{}", r.numer(), r.denom()),
            Scalar::Fp { p, v } => format!("{v} mod {p}"),
        }
    }

    pub fn parse(s: &str, field: FieldSpec) -> Result<Scalar, SpechtError> {
        let bad = || SpechtError::Parse(format!("bad scalar {s:?}"));
        match field {
            FieldSpec::Rational => {
                let (n, d) = s.split_once('/').ok_or_else(bad)?;
                let n: BigInt = n.parse().map_err(|_| bad())?;
                let d: BigInt = d.parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(Scalar::Rat(BigRational::new(n, d)))
            }
            FieldSpec::Prime(p) => {
                let (v, rest) = s.split_once(" mod ").ok_or_else(bad)?;
                let v: u64 = v.parse().map_err(|_| bad())?;
                let q: u64 = rest.parse().map_err(|_| bad())?;
                if q != p || v >= p {
                    return Err(bad());
                }
                Ok(Scalar::Fp { p, v })
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

fn addmod(a: u64, b: u64, p: u64) -> u64 {
    (a + b) % p
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

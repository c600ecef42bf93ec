//! Exact scalars: arbitrary-precision rationals and residues modulo a prime.
//!
//! Every computation in this crate is exact. A [`Scalar`] is either a reduced
//! fraction over the integers or a residue in a prime field `F_p`; the four
//! field operations are closed within one field and mixing fields is rejected.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The base field: the rationals or a prime field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Fp(u64),
}

impl Field {
    pub fn zero(self) -> Scalar {
        match self {
            Field::Rational => Scalar::Rat(BigRational::zero()),
            Field::Fp(p) => Scalar::Fp { p, value: 0 },
        }
    }

    pub fn one(self) -> Scalar {
        match self {
            Field::Rational => Scalar::Rat(BigRational::one()),
            Field::Fp(p) => Scalar::Fp { p, value: 1 % p },
        }
    }

    /// Scalar for a (possibly negative) machine integer.
    pub fn integer(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rat(BigRational::from(BigInt::from(n))),
            Field::Fp(p) => {
                let r = n.rem_euclid(p as i64) as u64;
                Scalar::Fp { p, value: r % p }
            }
        }
    }

    /// Parses a scalar literal: `"p/q"` or `"n"` over the rationals, a
    /// decimal residue over `F_p` (an optional sign is accepted and reduced).
    pub fn parse(self, literal: &str) -> Result<Scalar> {
        let bad = |reason: &str| Error::BadScalar {
            literal: literal.to_string(),
            reason: reason.to_string(),
        };
        let s = literal.trim();
        if s.is_empty() {
            return Err(bad("empty"));
        }
        match self {
            Field::Rational => {
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (n, Some(d)),
                    None => (s, None),
                };
                let n = BigInt::from_str(num).map_err(|e| bad(&e.to_string()))?;
                let d = match den {
                    Some(d) => BigInt::from_str(d).map_err(|e| bad(&e.to_string()))?,
                    None => BigInt::one(),
                };
                if d.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Scalar::Rat(BigRational::new(n, d)))
            }
            Field::Fp(p) => {
                if s.contains('/') {
                    return Err(bad("fractions are not valid residues"));
                }
                let n = BigInt::from_str(s).map_err(|e| bad(&e.to_string()))?;
                let p_big = BigInt::from(p);
                let mut r = n % &p_big;
                if r.is_negative() {
                    r += &p_big;
                }
                let (_, digits) = r.to_u64_digits();
                Ok(Scalar::Fp {
                    p,
                    value: digits.first().copied().unwrap_or(0),
                })
            }
        }
    }

    pub fn check_prime(self) -> Result<()> {
        match self {
            Field::Rational => Ok(()),
            Field::Fp(p) => {
                if is_prime(p) {
                    Ok(())
                } else {
                    Err(Error::NotPrime(p))
                }
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "rational"),
            Field::Fp(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "rational" {
            return Ok(Field::Rational);
        }
        if let Some(p) = s.strip_prefix("fp:") {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::Format(format!("invalid field spec {s:?}")))?;
            let field = Field::Fp(p);
            field.check_prime()?;
            return Ok(field);
        }
        Err(Error::Format(format!("invalid field spec {s:?}")))
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).map_or(false, |dd| dd <= p) {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact field element. Fractions are kept reduced with a positive
/// denominator; residues lie in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Rat(BigRational),
    Fp { p: u64, value: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rational,
            Scalar::Fp { p, .. } => Field::Fp(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fp { p, value } => *value == 1 % *p,
        }
    }

    fn same_field(&self, other: &Scalar) -> Result<()> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.field(), other.field()))
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Fp { p, value: a }, Scalar::Fp { value: b, .. }) => Scalar::Fp {
                p: *p,
                value: ((*a as u128 + *b as u128) % *p as u128) as u64,
            },
            _ => unreachable!(),
        })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            (Scalar::Fp { p, value: a }, Scalar::Fp { value: b, .. }) => Scalar::Fp {
                p: *p,
                value: ((*a as u128 + (*p - *b) as u128) % *p as u128) as u64,
            },
            _ => unreachable!(),
        })
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Fp { p, value: a }, Scalar::Fp { value: b, .. }) => Scalar::Fp {
                p: *p,
                value: ((*a as u128 * *b as u128) % *p as u128) as u64,
            },
            _ => unreachable!(),
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        let inv = other.inv().ok_or(Error::DivisionByZero)?;
        self.checked_mul(&inv)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rat(r) => {
                if r.is_zero() {
                    None
                } else {
                    Some(Scalar::Rat(r.recip()))
                }
            }
            Scalar::Fp { p, value } => {
                if *value == 0 {
                    None
                } else {
                    Some(Scalar::Fp {
                        p: *p,
                        value: mod_pow(*value, *p - 2, *p),
                    })
                }
            }
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Fp { p, value } => Scalar::Fp {
                p: *p,
                value: if *value == 0 { 0 } else { p - value },
            },
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.checked_add(other).expect("scalar add: field mismatch")
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.checked_sub(other).expect("scalar sub: field mismatch")
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.checked_mul(other).expect("scalar mul: field mismatch")
    }
}

fn mod_pow(base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut b = base as u128 % p as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p as u128;
        }
        b = b * b % p as u128;
        exp >>= 1;
    }
    acc as u64
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
            Scalar::Fp { value, .. } => write!(f, "{value}"),
        }
    }
}

/// The four field operations with full checking, as exposed by the CLI.
pub fn scalar_arith(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
        ArithOp::Div => a.checked_div(b),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(s: &str) -> Scalar {
        Field::Rational.parse(s).unwrap()
    }

    #[test]
    fn fraction_arithmetic() {
        assert_eq!(q("1/2").add(&q("1/3")), q("5/6"));
        assert_eq!(q("1/2").sub(&q("1/2")), q("0"));
        assert_eq!(q("-2/4").to_string(), "-1/2");
        assert_eq!(q("6/3").to_string(), "2");
    }

    #[test]
    fn modular_arithmetic() {
        let f = Field::Fp(5);
        let three = f.parse("3").unwrap();
        let four = f.parse("4").unwrap();
        assert_eq!(three.mul(&four), f.parse("2").unwrap());
        assert_eq!(f.parse("-1").unwrap(), f.parse("4").unwrap());
        assert_eq!(four.inv().unwrap(), four);
    }

    #[test]
    fn division_by_zero_is_rejected() {
        assert_eq!(
            scalar_arith(&q("1"), &q("0"), ArithOp::Div),
            Err(Error::DivisionByZero)
        );
        assert_eq!(Field::Rational.parse("1/0"), Err(Error::DivisionByZero));
    }

    #[test]
    fn field_mismatch_is_rejected() {
        let a = q("1");
        let b = Field::Fp(5).parse("1").unwrap();
        assert!(matches!(
            scalar_arith(&a, &b, ArithOp::Add),
            Err(Error::FieldMismatch(..))
        ));
        let c = Field::Fp(7).parse("1").unwrap();
        assert!(matches!(
            scalar_arith(&b, &c, ArithOp::Add),
            Err(Error::FieldMismatch(..))
        ));
    }

    #[test]
    fn prime_check() {
        assert!(Field::Fp(2).check_prime().is_ok());
        assert!(Field::Fp(97).check_prime().is_ok());
        assert_eq!(Field::Fp(1).check_prime(), Err(Error::NotPrime(1)));
        assert_eq!(Field::Fp(91).check_prime(), Err(Error::NotPrime(91)));
    }

    proptest! {
        // Round-tripping any computed scalar through its string form is exact.
        #[test]
        fn rational_string_round_trip(n in -1000i64..1000, d in 1i64..1000, m in -50i64..50) {
            let x = Field::Rational.integer(n)
                .checked_div(&Field::Rational.integer(d)).unwrap()
                .add(&Field::Rational.integer(m));
            let back = Field::Rational.parse(&x.to_string()).unwrap();
            prop_assert_eq!(back, x);
        }

        #[test]
        fn fp_string_round_trip(v in 0u64..97, w in 1u64..97) {
            let f = Field::Fp(97);
            let x = f.parse(&v.to_string()).unwrap()
                .checked_div(&f.parse(&w.to_string()).unwrap()).unwrap();
            let back = f.parse(&x.to_string()).unwrap();
            prop_assert_eq!(back, x);
        }

        #[test]
        fn field_axioms_sample(a in -40i64..40, b in -40i64..40, c in 1i64..40) {
            let f = Field::Rational;
            let (x, y, z) = (f.integer(a), f.integer(b), f.integer(c));
            prop_assert_eq!(x.add(&y), y.add(&x));
            prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
            prop_assert_eq!(z.mul(&z.inv().unwrap()), f.one());
        }
    }
}

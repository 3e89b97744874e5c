//! Exact field elements: arbitrary-precision rationals and prime-field residues.
//!
//! A [`Scalar`] is either a `BigRational` in lowest terms or a residue mod an odd
//! prime. Mixed rational/residue arithmetic promotes the rational operand into the
//! prime field (this is what makes `Ring::zero()`/`one()` possible without a field
//! handle); mixing two distinct prime fields is a programming error and panics.
//! No operation ever rounds.

use crate::error::{Error, Result};
use crate::ring::Ring;
use num::bigint::Sign;
use num::{BigInt, BigRational, One, Zero};
use std::fmt;

/// Which exact field a computation runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

impl FieldSpec {
    /// Parses a field descriptor: `QQ` or `Fp:<prime>`.
    pub fn parse(text: &str) -> Result<FieldSpec> {
        let t = text.trim();
        if t == "QQ" {
            return Ok(FieldSpec::Rational);
        }
        if let Some(p) = t.strip_prefix("Fp:") {
            let p: u64 = p.parse().map_err(|_| Error::Parse {
                position: 3,
                message: format!("bad prime in field descriptor {t:?}"),
            })?;
            if p < 2 || !is_prime(p) {
                return Err(Error::UnsupportedField(
                    t.to_string(),
                    "modulus is not prime".into(),
                ));
            }
            return Ok(FieldSpec::Prime(p));
        }
        Err(Error::Parse {
            position: 0,
            message: format!("unknown field descriptor {t:?} (expected QQ or Fp:<prime>)"),
        })
    }

    pub fn descriptor(&self) -> String {
        match self {
            FieldSpec::Rational => "QQ".to_string(),
            FieldSpec::Prime(p) => format!("Fp:{p}"),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.descriptor())
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact field element.
#[derive(Debug, Clone)]
pub enum Scalar {
    Rat(BigRational),
    Mod { r: u64, p: u64 },
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(!a.is_multiple_of(p), "division by zero in F_{p}");
    // p is prime, so Fermat inversion is exact.
    pow_mod(a, p - 2, p)
}

fn bigint_mod(n: &BigInt, p: u64) -> u64 {
    let m = (n % BigInt::from(p)).magnitude().to_u64_digits();
    let r = m.first().copied().unwrap_or(0);
    if n.sign() == Sign::Minus && r != 0 {
        p - r
    } else {
        r
    }
}

impl Scalar {
    pub fn from_int(n: i64) -> Scalar {
        Scalar::Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Scalar {
        assert!(den != 0, "zero denominator");
        Scalar::Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Scalar {
        assert!(!den.is_zero(), "zero denominator");
        Scalar::Rat(BigRational::new(num, den))
    }

    pub fn residue(r: u64, p: u64) -> Scalar {
        Scalar::Mod { r: r % p, p }
    }

    /// The zero/one of a specific field (unlike `Ring::zero`, carries the modulus).
    pub fn field_zero(field: FieldSpec) -> Scalar {
        Scalar::from_int(0).into_field(field)
    }

    pub fn field_one(field: FieldSpec) -> Scalar {
        Scalar::from_int(1).into_field(field)
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rat(_) => FieldSpec::Rational,
            Scalar::Mod { p, .. } => FieldSpec::Prime(*p),
        }
    }

    /// Moves the value into `field`. Rational -> F_p reduces numerator and
    /// denominator; panics if p divides the denominator (callers validate via
    /// [`Scalar::try_into_field`] where user input is involved).
    pub fn into_field(self, field: FieldSpec) -> Scalar {
        self.try_into_field(field).expect("field coercion failed")
    }

    pub fn try_into_field(self, field: FieldSpec) -> Result<Scalar> {
        match (self, field) {
            (s @ Scalar::Rat(_), FieldSpec::Rational) => Ok(s),
            (s @ Scalar::Mod { .. }, FieldSpec::Prime(p)) => {
                if s.field() == FieldSpec::Prime(p) {
                    Ok(s)
                } else {
                    Err(Error::UnsupportedField(
                        format!("{}", s.field()),
                        format!("cannot move a residue into F_{p}"),
                    ))
                }
            }
            (Scalar::Rat(q), FieldSpec::Prime(p)) => {
                let den = bigint_mod(q.denom(), p);
                if den == 0 {
                    return Err(Error::UnsupportedField(
                        format!("Fp:{p}"),
                        format!("{} has denominator divisible by {p}", q),
                    ));
                }
                let num = bigint_mod(q.numer(), p);
                Ok(Scalar::Mod {
                    r: mul_mod(num, inv_mod(den, p), p),
                    p,
                })
            }
            (Scalar::Mod { .. }, FieldSpec::Rational) => Err(Error::UnsupportedField(
                "QQ".into(),
                "cannot lift a residue back to the rationals".into(),
            )),
        }
    }

    /// Applies a binary operation after promoting a rational operand into the
    /// other operand's prime field, if any.
    fn promote<'a>(&'a self, rhs: &'a Scalar) -> (Scalar, Scalar) {
        match (self, rhs) {
            (Scalar::Rat(_), Scalar::Rat(_)) => (self.clone(), rhs.clone()),
            (Scalar::Mod { p, .. }, Scalar::Mod { p: q, .. }) => {
                assert_eq!(p, q, "mixed prime fields F_{p} and F_{q}");
                (self.clone(), rhs.clone())
            }
            (Scalar::Rat(_), Scalar::Mod { p, .. }) => {
                (self.clone().into_field(FieldSpec::Prime(*p)), rhs.clone())
            }
            (Scalar::Mod { p, .. }, Scalar::Rat(_)) => {
                (self.clone(), rhs.clone().into_field(FieldSpec::Prime(*p)))
            }
        }
    }

    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Rat(q) => {
                assert!(!q.is_zero(), "division by zero");
                Scalar::Rat(q.recip())
            }
            Scalar::Mod { r, p } => Scalar::Mod {
                r: inv_mod(*r, *p),
                p: *p,
            },
        }
    }

    pub fn div(&self, rhs: &Scalar) -> Scalar {
        self.mul(&rhs.inv())
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = Scalar::field_one(self.field());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Parses `integer` or `integer/integer` (arbitrary precision), then moves the
    /// value into `field`.
    pub fn parse(text: &str, field: FieldSpec) -> Result<Scalar> {
        let t = text.trim();
        let parse_int = |s: &str, offset: usize| -> Result<BigInt> {
            s.trim().parse::<BigInt>().map_err(|_| Error::Parse {
                position: offset,
                message: format!("bad integer {:?}", s.trim()),
            })
        };
        let q = match t.split_once('/') {
            Some((n, d)) => {
                let den = parse_int(d, n.len() + 1)?;
                if den.is_zero() {
                    return Err(Error::Parse {
                        position: n.len() + 1,
                        message: "zero denominator".into(),
                    });
                }
                BigRational::new(parse_int(n, 0)?, den)
            }
            None => BigRational::from_integer(parse_int(t, 0)?),
        };
        Scalar::Rat(q).try_into_field(field)
    }

    /// Residue value for prime-field scalars.
    pub fn residue_value(&self) -> Option<u64> {
        match self {
            Scalar::Mod { r, .. } => Some(*r),
            Scalar::Rat(_) => None,
        }
    }
}

/// The smallest common field of a list of scalars: rationals promote into any
/// prime field, distinct prime fields do not mix.
pub fn joint_field(scalars: &[&Scalar]) -> Result<FieldSpec> {
    let mut field = FieldSpec::Rational;
    for s in scalars {
        match (field, s.field()) {
            (_, FieldSpec::Rational) => {}
            (FieldSpec::Rational, f) => field = f,
            (FieldSpec::Prime(p), FieldSpec::Prime(q)) if p == q => {}
            (FieldSpec::Prime(p), FieldSpec::Prime(q)) => {
                return Err(Error::UnsupportedField(
                    format!("F_{q}"),
                    format!("cannot mix residues modulo {p} and {q}"),
                ));
            }
        }
    }
    Ok(field)
}

impl Ring for Scalar {
    fn zero() -> Scalar {
        Scalar::from_int(0)
    }

    fn one() -> Scalar {
        Scalar::from_int(1)
    }

    fn from_integer(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn add(&self, rhs: &Scalar) -> Scalar {
        match self.promote(rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Mod { r: a, p }, Scalar::Mod { r: b, .. }) => {
                Scalar::Mod { r: (a + b) % p, p }
            }
            _ => unreachable!(),
        }
    }

    fn sub(&self, rhs: &Scalar) -> Scalar {
        self.add(&rhs.neg())
    }

    fn mul(&self, rhs: &Scalar) -> Scalar {
        match self.promote(rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Mod { r: a, p }, Scalar::Mod { r: b, .. }) => Scalar::Mod {
                r: mul_mod(a, b, p),
                p,
            },
            _ => unreachable!(),
        }
    }

    fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(q) => Scalar::Rat(-q),
            Scalar::Mod { r, p } => Scalar::Mod {
                r: if *r == 0 { 0 } else { p - r },
                p: *p,
            },
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(q) => q.is_zero(),
            Scalar::Mod { r, .. } => *r == 0,
        }
    }
}

impl PartialEq for Scalar {
    /// Semantic equality across the rational -> prime-field promotion, so a
    /// polynomial built from mixed constants compares predictably.
    fn eq(&self, other: &Scalar) -> bool {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a == b,
            _ => match self.promote(other) {
                (Scalar::Mod { r: a, .. }, Scalar::Mod { r: b, .. }) => a == b,
                _ => unreachable!(),
            },
        }
    }
}

impl Eq for Scalar {}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Mod { r, .. } => write!(f, "{r}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn test_field_spec_parse() {
        assert_eq!(FieldSpec::parse("QQ").unwrap(), FieldSpec::Rational);
        assert_eq!(FieldSpec::parse("Fp:11").unwrap(), FieldSpec::Prime(11));
        assert_eq!(FieldSpec::parse(" Fp:101 ").unwrap(), FieldSpec::Prime(101));
        assert!(FieldSpec::parse("Fp:12").is_err());
        assert!(FieldSpec::parse("RR").is_err());
        assert_eq!(FieldSpec::Prime(7).descriptor(), "Fp:7");
    }

    #[test]
    fn test_rational_arithmetic() {
        let a = Scalar::from_ratio(1, 2);
        let b = Scalar::from_ratio(1, 3);
        assert_eq!(a.add(&b), Scalar::from_ratio(5, 6));
        assert_eq!(a.mul(&b), Scalar::from_ratio(1, 6));
        assert_eq!(a.sub(&a), Scalar::zero());
        assert_eq!(a.inv(), Scalar::from_int(2));
        assert_eq!(a.pow(3), Scalar::from_ratio(1, 8));
        assert_eq!(format!("{}", Scalar::from_ratio(-3, 6)), "-1/2");
        assert_eq!(format!("{}", Scalar::from_int(4)), "4");
    }

    #[test]
    fn test_prime_field_arithmetic() {
        let p = 7;
        let three = Scalar::residue(3, p);
        let five = Scalar::residue(5, p);
        assert_eq!(three.mul(&five), Scalar::residue(1, p));
        assert_eq!(three.add(&five), Scalar::residue(1, p));
        assert_eq!(three.neg(), Scalar::residue(4, p));
        assert_eq!(five.inv(), Scalar::residue(3, p));
        assert_eq!(five.pow(0), Scalar::residue(1, p));
    }

    #[test]
    fn test_promotion_and_equality() {
        let half = Scalar::from_ratio(1, 2);
        let four = Scalar::residue(4, 7); // 1/2 mod 7
        assert_eq!(half.clone().into_field(FieldSpec::Prime(7)), four);
        assert_eq!(half, four);
        assert_eq!(half.add(&Scalar::residue(0, 7)), four);
        assert_eq!(Scalar::zero().add(&four), four);
        assert!(Scalar::from_ratio(1, 7)
            .try_into_field(FieldSpec::Prime(7))
            .is_err());
    }

    #[test]
    fn test_scalar_parse_display_round_trip() {
        for s in ["0", "17", "-4", "3/4", "-22/7"] {
            let v = Scalar::parse(s, FieldSpec::Rational).unwrap();
            assert_eq!(format!("{v}"), s);
        }
        assert_eq!(
            Scalar::parse("3/4", FieldSpec::Prime(11)).unwrap(),
            Scalar::residue(9, 11) // 3 * 4^{-1} = 3*3 = 9
        );
        assert!(Scalar::parse("1/11", FieldSpec::Prime(11)).is_err());
        assert!(Scalar::parse("x", FieldSpec::Rational).is_err());
        assert!(Scalar::parse("1/0", FieldSpec::Rational).is_err());
    }

    #[test]
    fn test_bigint_mod_negative() {
        let v = Scalar::parse("-1", FieldSpec::Prime(5)).unwrap();
        assert_eq!(v, Scalar::residue(4, 5));
        let w = Scalar::parse("-10", FieldSpec::Prime(5)).unwrap();
        assert_eq!(w, Scalar::residue(0, 5));
    }
}

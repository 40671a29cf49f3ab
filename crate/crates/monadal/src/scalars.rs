//! Exact field elements: rationals with a small-integer fast path, and prime-field residues.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Error;

/// The base field of a category instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self, Error> {
        if p < 2 || !is_prime(p) {
            return Err(Error::Parse(format!("modulus {p} is not prime")));
        }
        if p >= 1 << 32 {
            return Err(Error::Parse(format!("modulus {p} exceeds 32 bits")));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Q(Rat::Small(0, 1)),
            FieldSpec::Prime(p) => Scalar::F { v: 0, p },
        }
    }

    pub fn one(self) -> Scalar {
        self.int(1)
    }

    pub fn int(self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Q(Rat::Small(n, 1)),
            FieldSpec::Prime(p) => Scalar::F { v: n.rem_euclid(p as i64) as u64, p },
        }
    }

    /// Parses `"Q"` or `"Fp:<p>"`.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let t = text.trim();
        if t == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(rest) = t.strip_prefix("Fp:") {
            let p: u64 = rest
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad field modulus in {text:?}")))?;
            return FieldSpec::prime(p);
        }
        Err(Error::Parse(format!("unknown field {text:?}")))
    }

    pub fn render(self) -> String {
        match self {
            FieldSpec::Rationals => "Q".to_string(),
            FieldSpec::Prime(p) => format!("Fp:{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Canonical rational: `Small(n, d)` with `d > 0` and `gcd(n, d) = 1` whenever it fits,
/// otherwise a boxed big rational.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Rat {
    Small(i64, i64),
    Big(Box<BigRational>),
}

impl Rat {
    fn from_big(r: BigRational) -> Rat {
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            if n != i64::MIN && d != i64::MIN {
                return Rat::Small(n, d);
            }
        }
        Rat::Big(Box::new(r))
    }

    fn to_big(&self) -> BigRational {
        match self {
            Rat::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Rat::Big(b) => (**b).clone(),
        }
    }

    fn from_i128(n: i128, d: i128) -> Rat {
        let g = n.gcd(&d);
        let (mut n, mut d) = if g == 0 { (0, 1) } else { (n / g, d / g) };
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(a), Ok(b)) if a != i64::MIN => Rat::Small(a, b),
            _ => Rat::Big(Box::new(BigRational::new_raw(BigInt::from(n), BigInt::from(d)))),
        }
    }

    fn is_zero(&self) -> bool {
        matches!(self, Rat::Small(0, _))
    }

    fn add(&self, o: &Rat) -> Rat {
        match (self, o) {
            (Rat::Small(a, b), Rat::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    Rat::from_i128(a + c, b)
                } else {
                    Rat::from_i128(a * d + c * b, b * d)
                }
            }
            _ => Rat::from_big(self.to_big() + o.to_big()),
        }
    }

    fn neg(&self) -> Rat {
        match self {
            Rat::Small(a, b) => Rat::Small(-a, *b),
            Rat::Big(x) => Rat::from_big(-(**x).clone()),
        }
    }

    fn mul(&self, o: &Rat) -> Rat {
        match (self, o) {
            (Rat::Small(1, 1), x) | (x, Rat::Small(1, 1)) => x.clone(),
            (Rat::Small(a, b), Rat::Small(c, d)) => {
                Rat::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Rat::from_big(self.to_big() * o.to_big()),
        }
    }

    fn inv(&self) -> Option<Rat> {
        match self {
            Rat::Small(0, _) => None,
            Rat::Small(a, b) => Some(if *a < 0 { Rat::Small(-b, -a) } else { Rat::Small(*b, *a) }),
            Rat::Big(x) => Some(Rat::from_big(x.recip())),
        }
    }
}

/// An exact scalar. Values are always canonical, so structural equality is field equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(Rat),
    F { v: u64, p: u64 },
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

/// Arithmetic operation selector for [`Scalar::arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Q(_) => FieldSpec::Rationals,
            Scalar::F { p, .. } => FieldSpec::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::F { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => matches!(r, Rat::Small(1, 1)),
            Scalar::F { v, .. } => *v == 1,
        }
    }

    /// Checked arithmetic: fails on field mismatch or division by zero.
    pub fn arith(&self, b: &Scalar, op: Op) -> Result<Scalar, Error> {
        if self.field() != b.field() {
            return Err(Error::FieldMismatch);
        }
        Ok(match op {
            Op::Add => self.add_u(b),
            Op::Sub => self.add_u(&b.neg()),
            Op::Mul => self.mul_u(b),
            Op::Div => self.mul_u(&b.inv().ok_or(Error::DivisionByZero)?),
        })
    }

    fn add_u(&self, b: &Scalar) -> Scalar {
        match (self, b) {
            (Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x.add(y)),
            (Scalar::F { v, p }, Scalar::F { v: w, .. }) => Scalar::F { v: (v + w) % p, p: *p },
            _ => panic!("field mismatch"),
        }
    }

    fn mul_u(&self, b: &Scalar) -> Scalar {
        match (self, b) {
            (Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x.mul(y)),
            (Scalar::F { v, p }, Scalar::F { v: w, .. }) => Scalar::F { v: v * w % p, p: *p },
            _ => panic!("field mismatch"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(x) => Scalar::Q(x.neg()),
            Scalar::F { v, p } => Scalar::F { v: (p - v) % p, p: *p },
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Q(x) => x.inv().map(Scalar::Q),
            Scalar::F { v: 0, .. } => None,
            Scalar::F { v, p } => Some(Scalar::F { v: pow_mod(*v, p - 2, *p), p: *p }),
        }
    }

    pub fn pow(&self, e: i64) -> Option<Scalar> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut r = self.field().one();
        for _ in 0..e.unsigned_abs() {
            r = &r * &base;
        }
        Some(r)
    }

    /// Grammar: `int` or `int/int` (the latter only meaningful over the rationals,
    /// but accepted in a prime field as a division).
    pub fn parse(text: &str, field: FieldSpec) -> Result<Scalar, Error> {
        let t = text.trim();
        let bad = || Error::Parse(format!("malformed scalar {text:?}"));
        let int = |s: &str| -> Result<BigInt, Error> {
            let s = s.trim();
            let digits = s.strip_prefix('-').unwrap_or(s);
            if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
                return Err(bad());
            }
            s.parse::<BigInt>().map_err(|_| bad())
        };
        let (n, d) = match t.split_once('/') {
            Some((a, b)) => (int(a)?, int(b)?),
            None => (int(t)?, BigInt::one()),
        };
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {text:?}")));
        }
        match field {
            FieldSpec::Rationals => Ok(Scalar::Q(Rat::from_big(BigRational::new(n, d)))),
            FieldSpec::Prime(p) => {
                let pb = BigInt::from(p);
                let red = |x: &BigInt| x.mod_floor(&pb).to_u64().unwrap();
                let nv = Scalar::F { v: red(&n), p };
                let dv = Scalar::F { v: red(&d), p };
                nv.arith(&dv, Op::Div)
                    .map_err(|_| Error::Parse(format!("denominator divisible by {p} in {text:?}")))
            }
        }
    }

    pub fn render(&self) -> String {
        match self {
            Scalar::Q(Rat::Small(n, 1)) => n.to_string(),
            Scalar::Q(Rat::Small(n, d)) => format!("{n}/{d}"),
            Scalar::Q(Rat::Big(b)) => {
                if b.denom().is_one() {
                    b.numer().to_string()
                } else {
                    format!("{}/{}", b.numer(), b.denom())
                }
            }
            Scalar::F { v, .. } => v.to_string(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Q(Rat::Small(n, _)) => *n < 0,
            Scalar::Q(Rat::Big(b)) => b.is_negative(),
            Scalar::F { .. } => false,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl std::ops::Add for &Scalar {
    type Output = Scalar;
    fn add(self, b: &Scalar) -> Scalar {
        self.add_u(b)
    }
}

impl std::ops::Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, b: &Scalar) -> Scalar {
        self.add_u(&b.neg())
    }
}

impl std::ops::Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, b: &Scalar) -> Scalar {
        self.mul_u(b)
    }
}

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Scalar {
        Scalar::parse(s, FieldSpec::Rationals).unwrap()
    }

    #[test]
    fn rational_examples() {
        assert_eq!(q("1/2").arith(&q("1/3"), Op::Add).unwrap(), q("5/6"));
        assert_eq!(q("-3/6"), q("-1/2"));
        assert_eq!(q("-3/6").render(), "-1/2");
        assert_eq!(q("0/1"), FieldSpec::Rationals.zero());
        assert_eq!(q("4/-6").render(), "-2/3");
    }

    #[test]
    fn prime_examples() {
        let f5 = FieldSpec::prime(5).unwrap();
        let a = Scalar::parse("3", f5).unwrap();
        let b = Scalar::parse("4", f5).unwrap();
        assert_eq!(a.arith(&b, Op::Div).unwrap(), f5.int(2));
        assert_eq!(Scalar::parse("7", f5).unwrap(), f5.int(2));
        assert_eq!(Scalar::parse("-1", f5).unwrap().render(), "4");
    }

    #[test]
    fn errors() {
        let f5 = FieldSpec::prime(5).unwrap();
        assert!(matches!(q("1").arith(&f5.one(), Op::Add), Err(Error::FieldMismatch)));
        assert!(matches!(q("1").arith(&q("0"), Op::Div), Err(Error::DivisionByZero)));
        assert!(Scalar::parse("1/0", FieldSpec::Rationals).is_err());
        assert!(Scalar::parse("abc", FieldSpec::Rationals).is_err());
        assert!(Scalar::parse("1/5", f5).is_err());
        assert!(FieldSpec::prime(6).is_err());
        assert_eq!(FieldSpec::parse("Fp:7").unwrap(), FieldSpec::Prime(7));
    }

    #[test]
    fn overflow_promotes_to_big() {
        let big = FieldSpec::Rationals.int(i64::MAX);
        let sq = &big * &big;
        assert!(matches!(sq, Scalar::Q(Rat::Big(_))));
        let back = sq.arith(&big, Op::Div).unwrap();
        assert_eq!(back, big);
        assert!(matches!(back, Scalar::Q(Rat::Small(..))));
        let p = Scalar::parse("170141183460469231731687303715884105727/3", FieldSpec::Rationals).unwrap();
        assert_eq!(Scalar::parse(&p.render(), FieldSpec::Rationals).unwrap(), p);
    }
}

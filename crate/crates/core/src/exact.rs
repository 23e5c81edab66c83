//! Exact scalars: arbitrary-precision rationals and rational multiples of
//! square roots of squarefree integers.
//!
//! Every matrix element of the irreps built in this crate has the form
//! `r * sqrt(d)`, and every identity we check (commutators, Casimirs) only
//! ever sums values within one square class, so [`SqrtRational`] never needs
//! a general algebraic-number representation.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::bigint::{BigInt, BigUint};
use num::rational::BigRational;
use num::{Integer, One, Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest trial divisor used when extracting square factors.
pub const TRIAL_DIVISION_LIMIT: u64 = 1_000_000;

/// Reduced fraction with a positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        let denom = denom.into();
        assert!(!denom.is_zero(), "zero denominator");
        Rational(BigRational::new(numer.into(), denom))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// True for 0, 1/2, 1, 3/2, ...
    pub fn is_nonneg_half_integer(&self) -> bool {
        !self.is_negative() && (self.clone() * Rational::from(2)).is_integer()
    }

    /// The value as a nonnegative integer, if it is one.
    pub fn to_nonneg_integer(&self) -> Option<u64> {
        if self.is_integer() && !self.is_negative() {
            self.numer().to_u64()
        } else {
            None
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        Rational(self.0.recip())
    }

    pub fn floor(&self) -> Self {
        Rational(self.0.floor())
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut out = Rational::one();
        for _ in 0..exp {
            out *= self;
        }
        out
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::from_integer(n)
    }
}

impl From<u64> for Rational {
    fn from(n: u64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<usize> for Rational {
    fn from(n: usize) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// Accepts `p` or `p/q` with optional sign; decimals and exponents are rejected.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |msg: &str| Error::Parse {
            pos: 0,
            msg: format!("{msg}: {s:?}"),
        };
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let parse_int = |t: &str| -> Result<BigInt> {
            let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad("expected an exact rational p or p/q"));
            }
            t.parse::<BigInt>()
                .map_err(|_| bad("expected an exact rational p or p/q"))
        };
        let n = parse_int(num)?;
        let d = match den {
            Some(d) => parse_int(d)?,
            None => BigInt::one(),
        };
        if d.is_zero() {
            return Err(bad("zero denominator"));
        }
        Ok(Rational::new(n, d))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl<'a> $tr<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $tr<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

/// Shorthand for `Rational::new(p, q)` with machine integers.
pub fn q(p: i64, d: i64) -> Rational {
    Rational::new(p, d)
}

/// `coeff * sqrt(radicand)` with `radicand` squarefree.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SqrtRational {
    coeff: Rational,
    radicand: u64,
}

impl SqrtRational {
    pub fn zero() -> Self {
        SqrtRational {
            coeff: Rational::zero(),
            radicand: 1,
        }
    }

    pub fn one() -> Self {
        SqrtRational::from_rational(Rational::one())
    }

    pub fn from_rational(coeff: Rational) -> Self {
        SqrtRational { coeff, radicand: 1 }
    }

    /// Builds `coeff * sqrt(radicand)` for an arbitrary nonnegative radicand,
    /// moving square factors into the coefficient.
    pub fn new(coeff: Rational, radicand: u64) -> Result<Self> {
        let (root, free) = squarefree_split(&BigUint::from(radicand))?;
        Ok(SqrtRational::normalized(
            coeff * Rational::from(BigInt::from(root)),
            free,
        ))
    }

    fn normalized(coeff: Rational, radicand: u64) -> Self {
        if coeff.is_zero() || radicand == 0 {
            SqrtRational::zero()
        } else {
            SqrtRational { coeff, radicand }
        }
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// The value as a rational, if the radicand is 1.
    pub fn as_rational(&self) -> Option<&Rational> {
        (self.radicand == 1).then_some(&self.coeff)
    }

    /// Exact square, `coeff^2 * radicand`.
    pub fn square(&self) -> Rational {
        &self.coeff * &self.coeff * Rational::from(self.radicand)
    }

    pub fn to_f64(&self) -> f64 {
        self.coeff.to_f64() * (self.radicand as f64).sqrt()
    }

    pub fn scale(&self, r: &Rational) -> Self {
        SqrtRational::normalized(&self.coeff * r, self.radicand)
    }

    /// Product; square factors of the radicand product are moved out via the
    /// gcd of the two (already squarefree) radicands.
    pub fn mul(&self, other: &SqrtRational) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(SqrtRational::zero());
        }
        let g = self.radicand.gcd(&other.radicand);
        let left = self.radicand / g;
        let right = other.radicand / g;
        let radicand = left
            .checked_mul(right)
            .ok_or_else(|| Error::RadicandTooLarge(format!("{left}*{right}")))?;
        Ok(SqrtRational::normalized(
            &self.coeff * &other.coeff * Rational::from(g),
            radicand,
        ))
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("reciprocal of zero".into()));
        }
        let denom = &self.coeff * Rational::from(self.radicand);
        Ok(SqrtRational::normalized(denom.recip(), self.radicand))
    }

    pub fn div(&self, other: &SqrtRational) -> Result<Self> {
        self.mul(&other.recip()?)
    }

    /// Sum within one square class.
    pub fn add_same_class(&self, other: &SqrtRational) -> Result<Self> {
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if self.radicand != other.radicand {
            return Err(Error::NotClosed {
                left: self.radicand,
                right: other.radicand,
            });
        }
        Ok(SqrtRational::normalized(
            &self.coeff + &other.coeff,
            self.radicand,
        ))
    }

    pub fn sub_same_class(&self, other: &SqrtRational) -> Result<Self> {
        self.add_same_class(&-other)
    }
}

impl Neg for &SqrtRational {
    type Output = SqrtRational;
    fn neg(self) -> SqrtRational {
        SqrtRational::normalized(-&self.coeff, self.radicand)
    }
}

impl Neg for SqrtRational {
    type Output = SqrtRational;
    fn neg(self) -> SqrtRational {
        -&self
    }
}

impl From<Rational> for SqrtRational {
    fn from(r: Rational) -> Self {
        SqrtRational::from_rational(r)
    }
}

impl fmt::Display for SqrtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radicand == 1 {
            write!(f, "{}", self.coeff)
        } else if self.coeff == Rational::one() {
            write!(f, "√{}", self.radicand)
        } else {
            write!(f, "{}·√{}", self.coeff, self.radicand)
        }
    }
}

impl fmt::Debug for SqrtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})·√{}", self.coeff, self.radicand)
    }
}

/// Exact square root of a nonnegative rational: `sqrt(p/q) = (1/q) sqrt(pq)`
/// with square factors of `pq` moved into the coefficient.
pub fn sqrt_exact(x: &Rational) -> Result<SqrtRational> {
    if x.is_negative() {
        return Err(Error::Domain(format!("square root of negative value {x}")));
    }
    if x.is_zero() {
        return Ok(SqrtRational::zero());
    }
    let p = x.numer().magnitude();
    let d = x.denom().magnitude();
    let (root, free) = squarefree_split(&(p * d))?;
    let coeff = Rational::new(BigInt::from(root), BigInt::from(d.clone()));
    Ok(SqrtRational::normalized(coeff, free))
}

/// Splits `n = root^2 * free` with `free` squarefree.
///
/// Trial division runs up to [`TRIAL_DIVISION_LIMIT`]. A leftover cofactor is
/// accepted when it is provably prime (below the limit squared) or a perfect
/// square; anything else is reported rather than guessed.
pub fn squarefree_split(n: &BigUint) -> Result<(BigUint, u64)> {
    if n.is_zero() {
        return Ok((BigUint::zero(), 1));
    }
    let mut rest = n.clone();
    let mut root = BigUint::one();
    let mut free = BigUint::one();
    let mut d: u64 = 2;
    loop {
        let dd = BigUint::from(d) * d;
        if dd > rest || d > TRIAL_DIVISION_LIMIT {
            break;
        }
        let big_d = BigUint::from(d);
        let mut exp = 0u32;
        while (&rest % &big_d).is_zero() {
            rest /= &big_d;
            exp += 1;
        }
        if exp > 0 {
            root *= big_d.pow(exp / 2);
            if exp % 2 == 1 {
                free *= &big_d;
            }
        }
        d = if d == 2 { 3 } else { d + 2 };
    }
    if !rest.is_one() {
        let limit_sq = BigUint::from(TRIAL_DIVISION_LIMIT) * TRIAL_DIVISION_LIMIT;
        if rest < limit_sq || BigUint::from(d) * d > rest {
            // no divisor up to sqrt(rest): prime
            free *= &rest;
        } else {
            let s = rest.sqrt();
            if &s * &s == rest {
                root *= s;
            } else {
                return Err(Error::RadicandTooLarge(n.to_string()));
            }
        }
    }
    let free = free
        .to_u64()
        .ok_or_else(|| Error::RadicandTooLarge(n.to_string()))?;
    Ok((root, free))
}

/// Trial-division squarefree test, used by tests and invariant checks.
pub fn is_squarefree(n: u64) -> bool {
    if n == 0 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d * d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_of_perfect_square() {
        let s = sqrt_exact(&q(9, 4)).unwrap();
        assert_eq!(s.coeff(), &q(3, 2));
        assert_eq!(s.radicand(), 1);
    }

    #[test]
    fn sqrt_normalizes_denominator() {
        let s = sqrt_exact(&q(1, 2)).unwrap();
        assert_eq!(s.coeff(), &q(1, 2));
        assert_eq!(s.radicand(), 2);
    }

    #[test]
    fn sqrt_of_q_minus_two_entry() {
        // 2l + 1/2 at l = 1/4
        let l = q(1, 4);
        let x = Rational::from(2) * &l + q(1, 2);
        let s = sqrt_exact(&x).unwrap();
        assert_eq!(s, SqrtRational::one());
        assert!((s.to_f64() - x.to_f64().sqrt()).abs() < 1e-15);
    }

    #[test]
    fn sqrt_rejects_negative() {
        assert!(matches!(sqrt_exact(&q(-1, 3)), Err(Error::Domain(_))));
    }

    #[test]
    fn mul_examples() {
        let r2 = SqrtRational::new(Rational::one(), 2).unwrap();
        let r3 = SqrtRational::new(Rational::one(), 3).unwrap();
        assert_eq!(r2.mul(&r2).unwrap(), SqrtRational::from_rational(q(2, 1)));
        assert_eq!(r2.mul(&r3).unwrap(), SqrtRational::new(Rational::one(), 6).unwrap());
        let a = SqrtRational::new(q(1, 2), 6).unwrap();
        let b = SqrtRational::new(q(1, 3), 6).unwrap();
        let p = a.mul(&b).unwrap();
        assert_eq!(p, SqrtRational::one());
        assert!((p.to_f64() - a.to_f64() * b.to_f64()).abs() < 1e-14);
    }

    #[test]
    fn add_same_class_examples() {
        let a = SqrtRational::new(Rational::one(), 2).unwrap();
        let b = SqrtRational::new(q(2, 1), 2).unwrap();
        assert_eq!(a.add_same_class(&b).unwrap(), SqrtRational::new(q(3, 1), 2).unwrap());
        let five_r3 = SqrtRational::new(q(5, 1), 3).unwrap();
        assert_eq!(five_r3.add_same_class(&SqrtRational::zero()).unwrap(), five_r3);
        let r3 = SqrtRational::new(Rational::one(), 3).unwrap();
        assert_eq!(
            a.add_same_class(&r3),
            Err(Error::NotClosed { left: 2, right: 3 })
        );
    }

    #[test]
    fn zero_is_normalized() {
        let z = SqrtRational::new(Rational::zero(), 7).unwrap();
        assert_eq!(z.radicand(), 1);
        let a = SqrtRational::new(q(2, 1), 5).unwrap();
        assert_eq!(a.sub_same_class(&a).unwrap(), SqrtRational::zero());
    }

    #[test]
    fn new_extracts_square_factors() {
        let s = SqrtRational::new(Rational::one(), 72).unwrap();
        assert_eq!(s.coeff(), &q(6, 1));
        assert_eq!(s.radicand(), 2);
    }

    #[test]
    fn recip_and_div() {
        let s = SqrtRational::new(q(4, 1), 17).unwrap();
        let inv = s.recip().unwrap();
        assert_eq!(s.mul(&inv).unwrap(), SqrtRational::one());
        assert_eq!(s.div(&s).unwrap(), SqrtRational::one());
    }

    #[test]
    fn large_prime_cofactor_is_accepted() {
        // 999983 is prime and below the trial limit; its square root is irrational.
        let n = BigUint::from(999_983u64) * 4u32;
        let (root, free) = squarefree_split(&n).unwrap();
        assert_eq!(root, BigUint::from(2u32));
        assert_eq!(free, 999_983);
    }

    #[test]
    fn square_of_large_prime_is_extracted() {
        let p = BigUint::from(1_000_003u64);
        let (root, free) = squarefree_split(&(&p * &p * 3u32)).unwrap();
        assert_eq!(root, p);
        assert_eq!(free, 3);
    }

    #[test]
    fn product_of_two_large_primes_is_refused() {
        let n = BigUint::from(1_000_003u64) * BigUint::from(1_000_033u64);
        assert!(matches!(squarefree_split(&n), Err(Error::RadicandTooLarge(_))));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("3/6".parse::<Rational>().unwrap(), q(1, 2));
        assert_eq!("-7".parse::<Rational>().unwrap(), q(-7, 1));
        assert_eq!(q(-3, 4).to_string(), "-3/4");
        assert!("0.5".parse::<Rational>().is_err());
        assert!("1/0".parse::<Rational>().is_err());
        assert!("1e3".parse::<Rational>().is_err());
    }

    #[test]
    fn json_shapes() {
        let s = SqrtRational::new(q(1, 2), 6).unwrap();
        let v = serde_json::to_string(&s).unwrap();
        assert_eq!(v, r#"{"coeff":"1/2","radicand":6}"#);
        let back: SqrtRational = serde_json::from_str(&v).unwrap();
        assert_eq!(back, s);
    }
}

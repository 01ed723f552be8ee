//! Exact scalars over the rationals and prime fields.
//!
//! Every coefficient in the crate is a [`Scalar`] tagged with the field it
//! lives in. Rationals are arbitrary precision and always kept reduced;
//! prime-field elements are canonical residues in `0..p`. Equality is
//! therefore structural.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use thiserror::Error;

/// Largest modulus accepted for a prime field.
pub const MAX_PRIME: u64 = 1 << 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a prime below 2^32")]
    NotPrime(u64),
    #[error("invalid scalar literal `{0}`")]
    InvalidLiteral(String),
    #[error("invalid field `{0}` (expected Q or GF(p))")]
    InvalidField(String),
}

/// The base field: either `Q` or `GF(p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self, ScalarError> {
        if p > MAX_PRIME || !is_prime(p) {
            return Err(ScalarError::NotPrime(p));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::Prime(p) => Some(*p),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, FieldSpec::Prime(_))
    }

    /// All field elements in canonical order. Only for prime fields.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        self.modulus().map(|p| (0..p).map(|v| Scalar::Modular { value: v, p }).collect())
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t == "Q" || t == "QQ" {
            return Ok(FieldSpec::Rationals);
        }
        let inner = t
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| ScalarError::InvalidField(s.to_string()))?;
        let p: u64 = inner.trim().parse().map_err(|_| ScalarError::InvalidField(s.to_string()))?;
        FieldSpec::prime(p)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// An exact field element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, p: u64 },
}

fn mod_inverse(a: u64, p: u64) -> Option<u64> {
    // extended Euclid on signed 128-bit values
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(p as i128) as u64)
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

impl Scalar {
    pub fn zero(field: FieldSpec) -> Self {
        Self::from_i64(field, 0)
    }

    pub fn one(field: FieldSpec) -> Self {
        Self::from_i64(field, 1)
    }

    pub fn from_i64(field: FieldSpec, n: i64) -> Self {
        match field {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(n.into())),
            FieldSpec::Prime(p) => Scalar::Modular { value: (n as i128).rem_euclid(p as i128) as u64, p },
        }
    }

    pub fn from_bigint(field: FieldSpec, n: &BigInt) -> Self {
        match field {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(n.clone())),
            FieldSpec::Prime(p) => {
                let pb = BigInt::from(p);
                let r = ((n % &pb) + &pb) % &pb;
                Scalar::Modular { value: r.to_u64().expect("residue fits in u64"), p }
            }
        }
    }

    /// `num / den` in the given field.
    pub fn from_ratio(field: FieldSpec, num: i64, den: i64) -> Result<Self, ScalarError> {
        Scalar::from_i64(field, num).checked_div(&Scalar::from_i64(field, den))
    }

    /// Residue for a prime-field element.
    pub fn residue(&self) -> Option<u64> {
        match self {
            Scalar::Modular { value, .. } => Some(*value),
            Scalar::Rational(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Modular { .. } => None,
        }
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Modular { p, .. } => FieldSpec::Prime(*p),
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

    fn same_field(&self, other: &Scalar) -> Result<(), ScalarError> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(ScalarError::FieldMismatch(self.field(), other.field()))
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Modular { value: a, p }, Scalar::Modular { value: b, .. }) => {
                Scalar::Modular { value: ((*a as u128 + *b as u128) % *p as u128) as u64, p: *p }
            }
            _ => unreachable!(),
        })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.same_field(other)?;
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Modular { value: a, p }, Scalar::Modular { value: b, .. }) => {
                Scalar::Modular { value: mul_mod(*a, *b, *p), p: *p }
            }
            _ => unreachable!(),
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.same_field(other)?;
        self.checked_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Modular { value, p } => {
                Scalar::Modular { value: mod_inverse(*value, *p).ok_or(ScalarError::DivisionByZero)?, p: *p }
            }
        })
    }

    fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Modular { value, p } => Scalar::Modular { value: if *value == 0 { 0 } else { p - value }, p: *p },
        }
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one(self.field());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Some `r` with `r^n = self`, if the field has one.
    ///
    /// Over `GF(p)` this is an exhaustive scan returning the smallest
    /// residue; it is meant for small desk-scale primes (p up to ~10^4).
    /// Over `Q` only exact rational roots are found.
    pub fn nth_root(&self, n: u32) -> Option<Scalar> {
        assert!(n >= 1, "root degree must be positive");
        match self {
            Scalar::Modular { p, .. } => {
                (0..*p).map(|v| Scalar::Modular { value: v, p: *p }).find(|r| &r.pow(n as u64) == self)
            }
            Scalar::Rational(q) => {
                let negative = q.is_negative();
                if negative && n.is_multiple_of(2) {
                    return None;
                }
                let num = q.numer().abs();
                let den = q.denom().clone();
                let rn = num.nth_root(n);
                let rd = den.nth_root(n);
                if num_traits::pow(rn.clone(), n as usize) != num || num_traits::pow(rd.clone(), n as usize) != den {
                    return None;
                }
                let r = BigRational::new(if negative { -rn } else { rn }, rd);
                Some(Scalar::Rational(r))
            }
        }
    }

    /// Parse a literal (`-3`, `3/2`) into the given field.
    pub fn parse(field: FieldSpec, s: &str) -> Result<Scalar, ScalarError> {
        let t = s.trim();
        let bad = || ScalarError::InvalidLiteral(s.to_string());
        let (num, den) = match t.split_once('/') {
            Some((a, b)) => (a.trim(), Some(b.trim())),
            None => (t, None),
        };
        let parse_int = |x: &str| -> Result<BigInt, ScalarError> {
            if x.is_empty()
                || !x.trim_start_matches(['-', '+']).chars().all(|c| c.is_ascii_digit())
                || x.trim_start_matches(['-', '+']).is_empty()
                || x.len() - x.trim_start_matches(['-', '+']).len() > 1
            {
                return Err(bad());
            }
            x.parse::<BigInt>().map_err(|_| bad())
        };
        let n = Scalar::from_bigint(field, &parse_int(num)?);
        match den {
            None => Ok(n),
            Some(d) => {
                let d = parse_int(d)?;
                n.checked_div(&Scalar::from_bigint(field, &d))
            }
        }
    }

    /// A small random element: uniform over `GF(p)`, small fractions over `Q`.
    pub fn random<R: Rng + ?Sized>(field: FieldSpec, rng: &mut R) -> Scalar {
        match field {
            FieldSpec::Prime(p) => Scalar::Modular { value: rng.gen_range(0..p), p },
            FieldSpec::Rationals => {
                let num: i64 = rng.gen_range(-6..=6);
                let den: i64 = *[1i64, 1, 1, 2, 3].get(rng.gen_range(0..5)).unwrap();
                Scalar::from_ratio(field, num, den).expect("nonzero denominator")
            }
        }
    }

    pub fn random_nonzero<R: Rng + ?Sized>(field: FieldSpec, rng: &mut R) -> Scalar {
        loop {
            let s = Scalar::random(field, rng);
            if !s.is_zero() {
                return s;
            }
        }
    }
}

/// Checked binary arithmetic.
pub fn arith(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar, ScalarError> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
        ArithOp::Div => a.checked_div(b),
    }
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

// Operator impls panic on a field mismatch; that is always a programming
// error inside the crate. Public entry points use the checked forms.
impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.checked_add(rhs).expect("scalar field mismatch")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.checked_sub(rhs).expect("scalar field mismatch")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.checked_mul(rhs).expect("scalar field mismatch")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::from_ratio(Q, n, d).unwrap()
    }

    #[test]
    fn rational_addition() {
        assert_eq!(arith(&q(1, 2), &q(1, 3), ArithOp::Add).unwrap(), q(5, 6));
    }

    #[test]
    fn modular_multiplication_reduces() {
        let f = FieldSpec::prime(7).unwrap();
        let r = arith(&Scalar::from_i64(f, 2), &Scalar::from_i64(f, 4), ArithOp::Mul).unwrap();
        assert_eq!(r, Scalar::from_i64(f, 1));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let e = arith(&q(1, 1), &q(0, 1), ArithOp::Div).unwrap_err();
        assert_eq!(e, ScalarError::DivisionByZero);
        assert_eq!(e.to_string(), "division by zero");
        let f = FieldSpec::prime(5).unwrap();
        assert!(Scalar::from_i64(f, 10).inv().is_err());
    }

    #[test]
    fn field_mismatch_is_an_error() {
        let f = FieldSpec::prime(5).unwrap();
        assert!(matches!(q(1, 1).checked_add(&Scalar::one(f)), Err(ScalarError::FieldMismatch(..))));
        let g = FieldSpec::prime(7).unwrap();
        assert!(Scalar::one(f).checked_mul(&Scalar::one(g)).is_err());
    }

    #[test]
    fn nth_roots() {
        assert_eq!(q(16, 1).nth_root(4), Some(q(2, 1)));
        assert_eq!(q(2, 1).nth_root(2), None);
        assert_eq!(q(-27, 8).nth_root(3), Some(q(-3, 2)));
        assert_eq!(q(-4, 1).nth_root(2), None);
        let f7 = FieldSpec::prime(7).unwrap();
        // exhaustive: r in 0..7 with r^2 = 2 are 3 and 4
        let roots: Vec<u64> = (0..7).filter(|r| (r * r) % 7 == 2).collect();
        assert_eq!(roots, vec![3, 4]);
        assert_eq!(Scalar::from_i64(f7, 2).nth_root(2), Some(Scalar::from_i64(f7, 3)));
        assert_eq!(Scalar::from_i64(f7, 3).nth_root(2), None);
    }

    #[test]
    fn field_parsing_and_display() {
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), Q);
        assert_eq!("GF(11)".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(11));
        assert!("GF(12)".parse::<FieldSpec>().is_err());
        assert!("GF(1)".parse::<FieldSpec>().is_err());
        assert!("R".parse::<FieldSpec>().is_err());
        assert_eq!(FieldSpec::Prime(5).to_string(), "GF(5)");
        assert!(FieldSpec::prime(2147483647).is_ok());
    }

    #[test]
    fn literal_parsing() {
        assert_eq!(Scalar::parse(Q, "-3").unwrap(), q(-3, 1));
        assert_eq!(Scalar::parse(Q, "6/4").unwrap(), q(3, 2));
        assert!(Scalar::parse(Q, "1.5").is_err());
        assert!(Scalar::parse(Q, "--1").is_err());
        assert!(Scalar::parse(Q, "").is_err());
        let f2 = FieldSpec::prime(2).unwrap();
        assert_eq!(Scalar::parse(f2, "1/2").unwrap_err(), ScalarError::DivisionByZero);
        assert_eq!(Scalar::parse(FieldSpec::Prime(7), "-1").unwrap().to_string(), "6");
        assert_eq!(q(3, 2).to_string(), "3/2");
    }

    #[test]
    fn large_prime_inverse() {
        let f = FieldSpec::prime(2147483647).unwrap();
        let a = Scalar::from_i64(f, 123456789);
        assert!((&a * &a.inv().unwrap()).is_one());
    }

    fn field_strategy() -> impl Strategy<Value = FieldSpec> {
        prop_oneof![
            Just(FieldSpec::Rationals),
            Just(FieldSpec::Prime(2)),
            Just(FieldSpec::Prime(7)),
            Just(FieldSpec::Prime(13)),
            Just(FieldSpec::Prime(2147483647)),
        ]
    }

    fn elem(f: FieldSpec, n: i64, d: i64) -> Scalar {
        Scalar::from_i64(f, n).checked_div(&Scalar::from_i64(f, d)).unwrap_or_else(|_| Scalar::from_i64(f, n))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn field_axioms(f in field_strategy(),
                        a in (-50i64..50, 1i64..9),
                        b in (-50i64..50, 1i64..9),
                        c in (-50i64..50, 1i64..9)) {
            let (a, b, c) = (elem(f, a.0, a.1), elem(f, b.0, b.1), elem(f, c.0, c.1));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert!((&a - &a).is_zero());
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn nth_root_is_a_root(f in field_strategy(), a in -40i64..40, n in 1u32..6) {
            let x = Scalar::from_i64(f, a);
            if f.modulus().is_none_or(|p| p < 10_000) {
                if let Some(r) = x.nth_root(n) {
                    prop_assert_eq!(r.pow(n as u64), x);
                }
            }
        }

        #[test]
        fn canonical_display_round_trips(n in -1000i64..1000, d in 1i64..50) {
            let x = q(n, d);
            prop_assert_eq!(Scalar::parse(Q, &x.to_string()).unwrap(), x);
        }
    }
}

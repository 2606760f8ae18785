//! Vectors over the prime fields F_2 and F_3, their dense integer codes, and
//! exact rational numbers.
//!
//! A card of any vector-model deck is stored as a [`Card`] code: the vector's
//! coordinates read as big-endian base-`p` digits, so coordinate 0 is the most
//! significant digit. For `p = 2` the code is the familiar bit string, e.g.
//! `011010`, and the group operation is bitwise XOR.

use std::fmt;
use std::ops::{Add, BitXor, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense integer code of a card.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Card(pub u32);

impl Card {
    pub const ZERO: Card = Card(0);

    pub fn code(self) -> u32 {
        self.0
    }

    /// Bit string of the low `width` bits, most significant first.
    pub fn bits(self, width: u32) -> String {
        (0..width)
            .rev()
            .map(|i| if self.0 >> i & 1 == 1 { '1' } else { '0' })
            .collect()
    }

    /// Parses a bit string such as `011010`.
    pub fn from_bits(s: &str) -> Result<Card> {
        let s = s.trim();
        if s.is_empty() || s.len() > 31 || !s.bytes().all(|b| b == b'0' || b == b'1') {
            return Err(Error::InvalidLabel(s.to_string()));
        }
        Ok(Card(u32::from_str_radix(s, 2).expect("validated binary digits")))
    }
}

impl fmt::Display for Card {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl BitXor for Card {
    type Output = Card;
    fn bitxor(self, rhs: Card) -> Card {
        Card(self.0 ^ rhs.0)
    }
}

/// XOR of a collection of binary codes. The empty collection folds to zero.
pub fn xor_all<'a>(cards: impl IntoIterator<Item = &'a Card>) -> Card {
    cards.into_iter().fold(Card::ZERO, |acc, &c| acc ^ c)
}

/// The vector space F_p^n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Space {
    pub p: u32,
    pub n: u32,
}

impl Space {
    /// The SET deck, F_3^4.
    pub const SET: Space = Space { p: 3, n: 4 };
    /// Socks and EvenQuads, F_2^6.
    pub const BINARY6: Space = Space { p: 2, n: 6 };

    pub fn new(p: u32, n: u32) -> Space {
        Space { p, n }
    }

    /// Number of vectors, p^n.
    pub fn size(&self) -> u32 {
        self.p.pow(self.n)
    }

    pub fn contains(&self, card: Card) -> bool {
        card.0 < self.size()
    }

    pub fn zero(&self) -> FpVector {
        FpVector {
            p: self.p,
            coords: vec![0; self.n as usize],
        }
    }

    pub fn vector(&self, coords: &[u32]) -> Result<FpVector> {
        if coords.len() != self.n as usize {
            return Err(Error::MixedSpaces(self.p, self.n, self.p, coords.len() as u32));
        }
        FpVector::new(self.p, coords.to_vec())
    }

    pub fn encode(&self, v: &FpVector) -> Result<Card> {
        self.check(v)?;
        Ok(Card(v.coords.iter().fold(0, |acc, &c| acc * self.p + c)))
    }

    pub fn decode(&self, card: Card) -> Result<FpVector> {
        if !self.contains(card) {
            return Err(Error::InvalidCode(card.0));
        }
        Ok(FpVector {
            p: self.p,
            coords: self.digits(card),
        })
    }

    /// Base-p digits of a code, most significant first. The caller guarantees
    /// the code is in range.
    pub fn digits(&self, card: Card) -> Vec<u32> {
        let mut rem = card.0;
        let mut coords = vec![0; self.n as usize];
        for slot in coords.iter_mut().rev() {
            *slot = rem % self.p;
            rem /= self.p;
        }
        coords
    }

    fn from_digits(&self, digits: impl Iterator<Item = u32>) -> Card {
        Card(digits.fold(0, |acc, d| acc * self.p + d))
    }

    /// Group sum of two codes.
    pub fn add(&self, a: Card, b: Card) -> Card {
        if self.p == 2 {
            return a ^ b;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        self.from_digits(da.iter().zip(&db).map(|(x, y)| (x + y) % self.p))
    }

    pub fn neg(&self, a: Card) -> Card {
        if self.p == 2 {
            return a;
        }
        self.from_digits(self.digits(a).into_iter().map(|x| (self.p - x) % self.p))
    }

    pub fn sum_codes<'a>(&self, cards: impl IntoIterator<Item = &'a Card>) -> Card {
        cards.into_iter().fold(Card::ZERO, |acc, &c| self.add(acc, c))
    }

    /// Coordinatewise sum mod p. An empty list sums to the zero vector.
    pub fn group_sum(&self, vs: &[FpVector]) -> Result<FpVector> {
        let mut acc = self.zero();
        for v in vs {
            self.check(v)?;
            for (a, c) in acc.coords.iter_mut().zip(&v.coords) {
                *a = (*a + c) % self.p;
            }
        }
        Ok(acc)
    }

    fn check(&self, v: &FpVector) -> Result<()> {
        if v.p != self.p || v.coords.len() != self.n as usize {
            return Err(Error::MixedSpaces(self.p, self.n, v.p, v.coords.len() as u32));
        }
        Ok(())
    }

    /// Dense addition table over all codes, `table[a * size + b] = a + b`.
    pub fn addition_table(&self) -> Vec<u32> {
        let size = self.size();
        let mut table = Vec::with_capacity((size * size) as usize);
        for a in 0..size {
            for b in 0..size {
                table.push(self.add(Card(a), Card(b)).0);
            }
        }
        table
    }
}

/// A vector in F_p^n with every coordinate in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FpVector {
    p: u32,
    coords: Vec<u32>,
}

impl FpVector {
    pub fn new(p: u32, coords: Vec<u32>) -> Result<FpVector> {
        if let Some(&coord) = coords.iter().find(|&&c| c >= p) {
            return Err(Error::InvalidCoordinate { coord, p });
        }
        Ok(FpVector { p, coords })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> u32 {
        self.coords.len() as u32
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn space(&self) -> Space {
        Space::new(self.p, self.dim())
    }

    pub fn negate(&self) -> FpVector {
        FpVector {
            p: self.p,
            coords: self.coords.iter().map(|&c| (self.p - c) % self.p).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn checked_add(&self, other: &FpVector) -> Result<FpVector> {
        self.space().group_sum(&[self.clone(), other.clone()])
    }
}

impl fmt::Display for FpVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Arbitrary-precision fraction, always fully reduced with a positive
/// denominator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Rational> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    /// Shorthand for small literals; panics on a zero denominator.
    pub fn ratio(numer: i64, denom: i64) -> Rational {
        Rational::new(numer, denom).expect("nonzero denominator")
    }

    pub fn from_big(numer: BigUint, denom: BigUint) -> Result<Rational> {
        Rational::new(BigInt::from(numer), BigInt::from(denom))
    }

    pub fn integer(n: i64) -> Rational {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Rational {
        Rational(BigRational::zero())
    }

    pub fn one() -> Rational {
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

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Decimal rendering rounded half away from zero to `places` digits.
    pub fn to_decimal(&self, places: usize) -> String {
        let scale = BigInt::from(10u32).pow(places as u32);
        let scaled = &self.0 * BigRational::from_integer(scale.clone());
        let rounded = scaled.round().to_integer();
        let negative = rounded.is_negative();
        let digits = rounded.abs().to_string();
        let digits = format!("{digits:0>width$}", width = places + 1);
        let (int_part, frac_part) = digits.split_at(digits.len() - places);
        let sign = if negative { "-" } else { "" };
        if places == 0 {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac_part}")
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Rational> {
        let bad = || Error::InvalidLabel(s.to_string());
        match s.trim().split_once('/') {
            Some((n, d)) => Rational::new(
                n.trim().parse::<BigInt>().map_err(|_| bad())?,
                d.trim().parse::<BigInt>().map_err(|_| bad())?,
            ),
            None => Ok(Rational(BigRational::from_integer(
                s.trim().parse::<BigInt>().map_err(|_| bad())?,
            ))),
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $tr<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RationalOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact arithmetic on two rationals; only division can fail.
pub fn rational_ops(a: &Rational, b: &Rational, op: RationalOp) -> Result<Rational> {
    match op {
        RationalOp::Add => Ok(a + b),
        RationalOp::Sub => Ok(a - b),
        RationalOp::Mul => Ok(a * b),
        RationalOp::Div => a.checked_div(b),
    }
}

/// Binomial coefficient C(n, k), zero when k > n.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}

/// n!! with the conventions (-1)!! = 0!! = 1!! = 1.
pub fn double_factorial(n: i64) -> BigUint {
    let mut acc = BigUint::one();
    let mut k = n;
    while k > 1 {
        acc *= BigUint::from(k as u64);
        k -= 2;
    }
    acc
}

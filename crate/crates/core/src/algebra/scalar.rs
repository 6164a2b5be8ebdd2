use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::TriPoly;
use crate::{Error, Label, Result};

/// Commutative ring the recursions are written over: exact rationals for
/// pointwise evaluation, [`TriPoly`] for symbolic work.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn from_int(n: i64) -> Self;

    fn powu(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * &base;
            }
        }
        acc
    }

    fn sq(&self) -> Self {
        self.clone() * self
    }
}

impl Scalar for BigRational {
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

impl Scalar for TriPoly {
    fn from_int(n: i64) -> Self {
        TriPoly::constant(BigInt::from(n))
    }
}

/// One value per label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Weights<S> {
    pub a: S,
    pub b: S,
    pub c: S,
}

pub type WeightTriple = Weights<BigRational>;

impl<S> Weights<S> {
    pub fn new(a: S, b: S, c: S) -> Self {
        Weights { a, b, c }
    }

    pub fn get(&self, l: Label) -> &S {
        match l {
            Label::A => &self.a,
            Label::B => &self.b,
            Label::C => &self.c,
        }
    }

    pub fn map<T>(&self, f: impl Fn(&S) -> T) -> Weights<T> {
        Weights { a: f(&self.a), b: f(&self.b), c: f(&self.c) }
    }
}

impl<S: Scalar> Weights<S> {
    pub fn sum(&self) -> S {
        self.a.clone() + &self.b + &self.c
    }

    pub fn ones() -> Self {
        Weights::new(S::one(), S::one(), S::one())
    }
}

impl Weights<TriPoly> {
    /// The generic point `(a, b, c)`.
    pub fn symbolic() -> Self {
        Weights::new(TriPoly::var(Label::A), TriPoly::var(Label::B), TriPoly::var(Label::C))
    }
}

impl WeightTriple {
    pub fn from_ints(a: i64, b: i64, c: i64) -> Self {
        Weights::new(BigRational::from_int(a), BigRational::from_int(b), BigRational::from_int(c))
    }

    pub fn parse(a: &str, b: &str, c: &str) -> Result<Self> {
        Ok(Weights::new(parse_rational(a)?, parse_rational(b)?, parse_rational(c)?))
    }

    pub fn to_strings(&self) -> [String; 3] {
        [self.a.to_string(), self.b.to_string(), self.c.to_string()]
    }
}

/// Parses `p` or `p/q`. Decimal notation is rejected so that inputs stay exact.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim();
    let bad = || Error::Parse(format!("'{s}' is not an exact rational p/q"));
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("'{s}' has zero denominator")));
    }
    Ok(BigRational::new(num, den))
}

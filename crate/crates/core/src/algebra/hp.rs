//! High-precision reals for logarithms of values far outside `f64` range.
//!
//! Backed by `astro-float` at a fixed 256-bit mantissa.

use std::cell::RefCell;
use std::fmt;

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::{Error, Result};

pub const PRECISION: usize = 256;
const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("astro-float constants cache"));
}

fn with_cc<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

#[derive(Clone)]
pub struct HpReal(BigFloat);

impl HpReal {
    pub fn zero() -> Self {
        HpReal(BigFloat::from_word(0, PRECISION))
    }

    pub fn from_f64(x: f64) -> Self {
        HpReal(BigFloat::from_f64(x, PRECISION))
    }

    pub fn from_bigint(n: &BigInt) -> Self {
        let s = n.to_string();
        HpReal(with_cc(|cc| BigFloat::parse(&s, Radix::Dec, PRECISION, RM, cc)))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::from_bigint(r.numer()).div(&Self::from_bigint(r.denom()))
    }

    /// `ln |r|` computed as `ln |num| - ln den`, so `r` may be astronomically large.
    pub fn ln_rational(r: &BigRational) -> Result<Self> {
        if !r.is_positive() {
            return Err(Error::Domain(format!("logarithm of non-positive value {r}")));
        }
        Ok(Self::from_bigint(r.numer()).ln()?.sub(&Self::from_bigint(r.denom()).ln()?))
    }

    pub fn ln(&self) -> Result<Self> {
        if !self.0.is_positive() || self.0.is_zero() {
            return Err(Error::Domain("logarithm of non-positive value".into()));
        }
        Ok(HpReal(with_cc(|cc| self.0.ln(PRECISION, RM, cc))))
    }

    pub fn exp(&self) -> Self {
        HpReal(with_cc(|cc| self.0.exp(PRECISION, RM, cc)))
    }

    pub fn sqrt(&self) -> Self {
        HpReal(self.0.sqrt(PRECISION, RM))
    }

    pub fn add(&self, o: &Self) -> Self {
        HpReal(self.0.add(&o.0, PRECISION, RM))
    }

    pub fn sub(&self, o: &Self) -> Self {
        HpReal(self.0.sub(&o.0, PRECISION, RM))
    }

    pub fn mul(&self, o: &Self) -> Self {
        HpReal(self.0.mul(&o.0, PRECISION, RM))
    }

    pub fn div(&self, o: &Self) -> Self {
        HpReal(self.0.div(&o.0, PRECISION, RM))
    }

    pub fn mul_int(&self, k: &BigInt) -> Self {
        self.mul(&Self::from_bigint(k))
    }

    pub fn is_finite(&self) -> bool {
        !self.0.is_nan() && !self.0.is_inf()
    }

    pub fn to_f64(&self) -> f64 {
        self.to_string().parse().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for HpReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for HpReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HpReal({})", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ln_of_huge_integer() {
        // ln(2^5000) = 5000 ln 2
        let n = BigInt::from(2).pow(5000);
        let got = HpReal::ln_rational(&BigRational::from_integer(n)).unwrap().to_f64();
        assert!((got - 5000.0 * std::f64::consts::LN_2).abs() < 1e-9);
    }

    #[test]
    fn exp_ln_roundtrip() {
        let x = HpReal::from_f64(3.25);
        let y = x.ln().unwrap().exp();
        assert!((y.to_f64() - 3.25).abs() < 1e-15);
    }

    #[test]
    fn domain_errors() {
        assert!(HpReal::ln_rational(&BigRational::from_integer(BigInt::from(-3))).is_err());
        assert!(HpReal::zero().ln().is_err());
    }
}

//! Products `2^e2 * 3^e3 * 5^e5 * prod base_i^k_i` with big-integer exponents.
//!
//! The closed forms have exponents that grow like `3^n`, so they are kept
//! factored and only expanded on request.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::hp::HpReal;
use super::{Scalar, TriPoly, WeightTriple};
use crate::{Error, Label, Result};

pub const PRIMES: [u32; 3] = [2, 3, 5];

/// Exponents above this are refused for exact evaluation.
pub const EXACT_EXPONENT_CAP: u64 = 1 << 22;

#[derive(Clone, Debug, PartialEq)]
pub struct Factored<S> {
    pub primes: [BigInt; 3],
    pub factors: Vec<(S, BigInt)>,
}

pub type FactoredPoly = Factored<TriPoly>;

impl<S: Scalar> Factored<S> {
    pub fn one() -> Self {
        Factored { primes: Default::default(), factors: Vec::new() }
    }

    pub fn prime_power(prime: u32, e: impl Into<BigInt>) -> Self {
        let mut f = Self::one();
        let i = PRIMES.iter().position(|&p| p == prime).expect("prime in {2,3,5}");
        f.primes[i] = e.into();
        f
    }

    pub fn base(b: S, e: impl Into<BigInt>) -> Self {
        let mut f = Self::one();
        f.push(b, e.into());
        f
    }

    fn push(&mut self, b: S, e: BigInt) {
        if e.is_zero() {
            return;
        }
        if let Some(slot) = self.factors.iter_mut().find(|(x, _)| *x == b) {
            slot.1 += e;
        } else {
            self.factors.push((b, e));
        }
        self.factors.retain(|(_, e)| !e.is_zero());
    }

    pub fn mul(mut self, o: &Self) -> Self {
        for i in 0..3 {
            self.primes[i] += &o.primes[i];
        }
        for (b, e) in &o.factors {
            self.push(b.clone(), e.clone());
        }
        self
    }

    pub fn times_base(self, b: S, e: impl Into<BigInt>) -> Self {
        self.mul(&Self::base(b, e))
    }

    pub fn times_prime(self, prime: u32, e: impl Into<BigInt>) -> Self {
        self.mul(&Self::prime_power(prime, e))
    }

    /// Every exponent, prime or base, is non-negative.
    pub fn exponents_nonnegative(&self) -> bool {
        self.primes.iter().chain(self.factors.iter().map(|(_, e)| e)).all(|e| !e.is_negative())
    }
}

fn exponent_u64(e: &BigInt) -> Result<u64> {
    let v = e
        .abs()
        .to_u64()
        .filter(|&v| v <= EXACT_EXPONENT_CAP)
        .ok_or_else(|| Error::Capability(format!("exponent {e} too large for exact evaluation")))?;
    Ok(v)
}

fn rational_pow(b: &BigRational, e: &BigInt) -> Result<BigRational> {
    let mag = exponent_u64(e)?;
    let p = b.powu(mag);
    if e.is_negative() {
        if p.is_zero() {
            return Err(Error::Domain("zero base with negative exponent".into()));
        }
        Ok(p.recip())
    } else {
        Ok(p)
    }
}

impl Factored<BigRational> {
    /// Exact product. Refuses exponents above [`EXACT_EXPONENT_CAP`].
    pub fn value(&self) -> Result<BigRational> {
        let mut acc = BigRational::one();
        for (i, e) in self.primes.iter().enumerate() {
            acc *= rational_pow(&BigRational::from_int(PRIMES[i] as i64), e)?;
        }
        for (b, e) in &self.factors {
            acc *= rational_pow(b, e)?;
        }
        Ok(acc)
    }

    /// Natural logarithm of the product; every base must be positive.
    pub fn ln(&self) -> Result<HpReal> {
        let mut acc = HpReal::zero();
        for (i, e) in self.primes.iter().enumerate() {
            if !e.is_zero() {
                let l = HpReal::ln_rational(&BigRational::from_int(PRIMES[i] as i64))?;
                acc = acc.add(&l.mul_int(e));
            }
        }
        for (b, e) in &self.factors {
            acc = acc.add(&HpReal::ln_rational(b)?.mul_int(e));
        }
        Ok(acc)
    }
}

impl FactoredPoly {
    pub fn eval_bases(&self, w: &WeightTriple) -> Factored<BigRational> {
        Factored {
            primes: self.primes.clone(),
            factors: self.factors.iter().map(|(b, e)| (b.eval(w), e.clone())).collect(),
        }
    }

    /// Exact value at `w`, without expanding the product.
    pub fn eval(&self, w: &WeightTriple) -> Result<BigRational> {
        self.eval_bases(w).value()
    }

    pub fn ln_at(&self, w: &WeightTriple) -> Result<HpReal> {
        self.eval_bases(w).ln()
    }

    /// Multiplies the product out, refusing when the result would exceed
    /// `degree_cap` in total degree.
    pub fn expand(&self, degree_cap: u32) -> Result<TriPoly> {
        let mut deg = BigInt::zero();
        for (b, e) in &self.factors {
            deg += BigInt::from(b.total_degree().unwrap_or(0)) * e;
        }
        if deg > BigInt::from(degree_cap) || self.factors.iter().any(|(_, e)| e.is_negative()) {
            return Err(Error::Capability(format!("expansion of degree {deg} exceeds cap {degree_cap}")));
        }
        let mut c = BigInt::one();
        for (i, e) in self.primes.iter().enumerate() {
            if e.is_negative() {
                return Err(Error::Capability("negative prime exponent does not expand to a polynomial".into()));
            }
            c *= BigInt::from(PRIMES[i]).pow(exponent_u64(e)? as u32);
        }
        let mut p = TriPoly::constant(c);
        for (b, e) in &self.factors {
            p = p * b.powu(exponent_u64(e)?);
        }
        Ok(p)
    }

    /// First and second derivatives of `ln F` along `l` at `w`, exactly.
    ///
    /// With `F = prod b_i^k_i`: `(ln F)' = sum k_i b_i'/b_i` and
    /// `(ln F)'' = sum k_i (b_i'' b_i - b_i'^2) / b_i^2`.
    pub fn log_derivatives(&self, w: &WeightTriple, l: Label) -> Result<(BigRational, BigRational)> {
        let mut d1 = BigRational::zero();
        let mut d2 = BigRational::zero();
        for (b, e) in &self.factors {
            let v = b.eval(w);
            if v.is_zero() {
                return Err(Error::Domain(format!("factor {b} vanishes at the evaluation point")));
            }
            let db = b.derivative(l);
            let v1 = db.eval(w);
            let v2 = db.derivative(l).eval(w);
            let k = BigRational::from_integer(e.clone());
            d1 += &k * &v1 / &v;
            d2 += k * (v2 * &v - &v1 * &v1) / (&v * &v);
        }
        Ok((d1, d2))
    }
}

impl<S: fmt::Display> fmt::Display for Factored<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, e) in self.primes.iter().enumerate() {
            if !e.is_zero() {
                parts.push(if e.is_one() { PRIMES[i].to_string() } else { format!("{}^{}", PRIMES[i], e) });
            }
        }
        for (b, e) in &self.factors {
            let s = b.to_string();
            let simple = s.chars().all(|c| c.is_ascii_alphanumeric());
            let s = if simple { s } else { format!("({s})") };
            parts.push(if e.is_one() { s } else { format!("{s}^{e}") });
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" * "))
        }
    }
}

#[derive(Serialize)]
struct FactorRecord {
    base: String,
    exponent: String,
}

impl<S: fmt::Display> Serialize for Factored<S> {
    fn serialize<Se: serde::Serializer>(&self, s: Se) -> std::result::Result<Se::Ok, Se::Error> {
        use serde::ser::SerializeStruct;
        let primes: std::collections::BTreeMap<String, String> =
            PRIMES.iter().zip(&self.primes).map(|(p, e)| (p.to_string(), e.to_string())).collect();
        let factors: Vec<FactorRecord> = self
            .factors
            .iter()
            .map(|(b, e)| FactorRecord { base: b.to_string(), exponent: e.to_string() })
            .collect();
        let mut st = s.serialize_struct("Factored", 3)?;
        st.serialize_field("text", &self.to_string())?;
        st.serialize_field("primes", &primes)?;
        st.serialize_field("factors", &factors)?;
        st.end()
    }
}

use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Scalar, Weights};
use crate::Label;

pub type Exponent = [u32; 3];

/// Sparse polynomial in `a, b, c` with integer coefficients.
///
/// No stored coefficient is ever zero, so structural equality is polynomial
/// equality.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TriPoly {
    terms: BTreeMap<Exponent, BigInt>,
}

impl TriPoly {
    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, [0, 0, 0])
    }

    pub fn var(l: Label) -> Self {
        let mut e = [0; 3];
        e[l.index()] = 1;
        Self::monomial(BigInt::one(), e)
    }

    pub fn monomial(c: BigInt, e: Exponent) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        TriPoly { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Exponent, BigInt)>) -> Self {
        let mut p = TriPoly::default();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: Exponent, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, e: Exponent) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Largest exponent of `l` over all terms.
    pub fn degree_in(&self, l: Label) -> u32 {
        self.terms.keys().map(|e| e[l.index()]).max().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| *e == [0, 0, 0])
    }

    pub fn constant_term(&self) -> BigInt {
        self.coefficient([0, 0, 0])
    }

    /// True when every monomial has the same total degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    /// Sum of coefficients, i.e. the value at `(1, 1, 1)`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn derivative(&self, l: Label) -> TriPoly {
        let i = l.index();
        TriPoly::from_terms(self.terms.iter().filter(|(e, _)| e[i] > 0).map(|(e, c)| {
            let mut e2 = *e;
            e2[i] -= 1;
            (e2, c * BigInt::from(e[i]))
        }))
    }

    /// Substitutes `w` for `(a, b, c)` in any ring; with `w` polynomial this is composition.
    pub fn eval<S: Scalar>(&self, w: &Weights<S>) -> S {
        let mut pows: [Vec<S>; 3] = [vec![S::one()], vec![S::one()], vec![S::one()]];
        for l in Label::ALL {
            let d = self.degree_in(l) as usize;
            let base = w.get(l);
            let v = &mut pows[l.index()];
            while v.len() <= d {
                let next = v[v.len() - 1].clone() * base;
                v.push(next);
            }
        }
        let mut acc = S::zero();
        for (e, c) in &self.terms {
            let c = bigint_to_scalar::<S>(c);
            let t = c * &pows[0][e[0] as usize] * &pows[1][e[1] as usize] * &pows[2][e[2] as usize];
            acc = acc + t;
        }
        acc
    }

    fn mul_ref(&self, o: &TriPoly) -> TriPoly {
        let mut out = TriPoly::default();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                out.add_term([e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]], c1 * c2);
            }
        }
        out
    }

    /// Terms in graded-lexicographic order: higher total degree first, then
    /// `a` before `b` before `c`.
    pub fn graded_terms(&self) -> Vec<(Exponent, BigInt)> {
        let mut v: Vec<_> = self.terms.iter().map(|(e, c)| (*e, c.clone())).collect();
        v.sort_by_key(|(e, _)| (Reverse(e.iter().sum::<u32>()), Reverse(*e)));
        v
    }
}

// Large integers cannot go through `from_int`; split into 62-bit limbs.
fn bigint_to_scalar<S: Scalar>(c: &BigInt) -> S {
    if let Ok(small) = i64::try_from(c) {
        return S::from_int(small);
    }
    let base = S::from_int(1 << 62);
    let neg = c.is_negative();
    let mut mag = c.abs();
    let chunk = BigInt::from(1u64 << 62);
    let mut digits = Vec::new();
    while !mag.is_zero() {
        let r = &mag % &chunk;
        digits.push(i64::try_from(&r).expect("limb fits"));
        mag /= &chunk;
    }
    let mut acc = S::zero();
    for d in digits.into_iter().rev() {
        acc = acc * &base + S::from_int(d);
    }
    if neg {
        -acc
    } else {
        acc
    }
}

impl fmt::Display for TriPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.graded_terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            if !mag.is_one() || *e == [0, 0, 0] {
                factors.push(mag.to_string());
            }
            for l in Label::ALL {
                match e[l.index()] {
                    0 => {}
                    1 => factors.push(l.to_string()),
                    p => factors.push(format!("{l}^{p}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for TriPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TriPoly({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    exp: Exponent,
    coef: String,
}

impl Serialize for TriPoly {
    fn serialize<Se: Serializer>(&self, s: Se) -> Result<Se::Ok, Se::Error> {
        let recs: Vec<TermRecord> = self
            .graded_terms()
            .into_iter()
            .map(|(exp, c)| TermRecord { exp, coef: c.to_string() })
            .collect();
        recs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for TriPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let recs = Vec::<TermRecord>::deserialize(d)?;
        let mut p = TriPoly::default();
        for r in recs {
            let c: BigInt = r.coef.parse().map_err(serde::de::Error::custom)?;
            p.add_term(r.exp, c);
        }
        Ok(p)
    }
}

impl Zero for TriPoly {
    fn zero() -> Self {
        TriPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for TriPoly {
    fn one() -> Self {
        TriPoly::constant(BigInt::one())
    }
}

impl Neg for TriPoly {
    type Output = TriPoly;
    fn neg(mut self) -> TriPoly {
        for c in self.terms.values_mut() {
            *c = -&*c;
        }
        self
    }
}

impl<'a> Add<&'a TriPoly> for TriPoly {
    type Output = TriPoly;
    fn add(mut self, o: &'a TriPoly) -> TriPoly {
        for (e, c) in &o.terms {
            self.add_term(*e, c.clone());
        }
        self
    }
}

impl<'a> Sub<&'a TriPoly> for TriPoly {
    type Output = TriPoly;
    fn sub(mut self, o: &'a TriPoly) -> TriPoly {
        for (e, c) in &o.terms {
            self.add_term(*e, -c);
        }
        self
    }
}

impl<'a> Mul<&'a TriPoly> for TriPoly {
    type Output = TriPoly;
    fn mul(self, o: &'a TriPoly) -> TriPoly {
        self.mul_ref(o)
    }
}

impl Add for TriPoly {
    type Output = TriPoly;
    fn add(self, o: TriPoly) -> TriPoly {
        self + &o
    }
}

impl Sub for TriPoly {
    type Output = TriPoly;
    fn sub(self, o: TriPoly) -> TriPoly {
        self - &o
    }
}

impl Mul for TriPoly {
    type Output = TriPoly;
    fn mul(self, o: TriPoly) -> TriPoly {
        self.mul_ref(&o)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn abc() -> (TriPoly, TriPoly, TriPoly) {
        (TriPoly::var(Label::A), TriPoly::var(Label::B), TriPoly::var(Label::C))
    }

    #[test]
    fn canonical_text() {
        let (a, b, c) = abc();
        let p = c.clone() * &c - TriPoly::from_int(2) * &b + a.clone() * &a * &b * TriPoly::from_int(3);
        assert_eq!(p.to_string(), "3*a^2*b + c^2 - 2*b");
        assert_eq!(TriPoly::zero().to_string(), "0");
        assert_eq!((-TriPoly::one()).to_string(), "-1");
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let (a, b, _) = abc();
        let p = (a.clone() + &b) - &a - &b;
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
    }

    #[test]
    fn eval_and_compose() {
        let (a, b, c) = abc();
        let p = a.clone() * &b + c.clone();
        let w = Weights::new(
            BigRational::from_int(2),
            BigRational::from_int(3),
            BigRational::new(1.into(), 2.into()),
        );
        assert_eq!(p.eval(&w), BigRational::new(13.into(), 2.into()));
        let sq = Weights::new(a.sq(), b.sq(), c.sq());
        assert_eq!(p.eval(&sq).to_string(), "a^2*b^2 + c^2");
    }

    #[test]
    fn huge_coefficients_survive_eval() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let p = TriPoly::monomial(big.clone(), [1, 0, 0]);
        let v = p.eval(&Weights::new(BigRational::from_int(-1), BigRational::from_int(0), BigRational::from_int(0)));
        assert_eq!(v, BigRational::from_integer(-big));
    }

    #[test]
    fn derivative() {
        let (a, b, _) = abc();
        let p = a.clone() * &a * &b;
        assert_eq!(p.derivative(Label::A).to_string(), "2*a*b");
        assert!(p.derivative(Label::C).is_zero());
    }

    #[test]
    fn json_roundtrip() {
        let (a, b, c) = abc();
        let p = a * &b - c * TriPoly::from_int(7);
        let j = serde_json::to_string(&p).unwrap();
        let q: TriPoly = serde_json::from_str(&j).unwrap();
        assert_eq!(p, q);
    }
}

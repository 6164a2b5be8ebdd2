//! The decimation map `P` on nine-entry states and its denominator `D`.
//!
//! A state `x1..x9` describes one level of the masked Hanoi Laplacian:
//! `x1..x3` are the weights `a, b, c` (never change), `x4..x6` the couplings
//! between the three copies and `x7..x9` their diagonal entries. Eliminating
//! the vertices that are not inherited by the next level rescales the
//! couplings and diagonals by `P`, and contributes the factor `D`.

use std::borrow::Cow;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::tables::*;
use crate::algebra::{Scalar, WeightTriple};
use crate::{Error, Result};

pub type Term = (i64, [u8; 9]);

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SchurState(#[serde(serialize_with = "ser_state")] pub [BigRational; 9]);

fn ser_state<Se: serde::Serializer>(v: &[BigRational; 9], s: Se) -> std::result::Result<Se::Ok, Se::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(9))?;
    for x in v {
        seq.serialize_element(&x.to_string())?;
    }
    seq.end()
}

impl SchurState {
    /// `(a, b, c, a, b, c, a+b+c, a+b+c, a+b+c)`.
    pub fn initial(w: &WeightTriple) -> Self {
        let e = w.sum();
        SchurState([
            w.a.clone(),
            w.b.clone(),
            w.c.clone(),
            w.a.clone(),
            w.b.clone(),
            w.c.clone(),
            e.clone(),
            e.clone(),
            e,
        ])
    }

    /// One-based accessor matching the `x1..x9` naming.
    pub fn x(&self, i: usize) -> &BigRational {
        &self.0[i - 1]
    }

    pub fn weights(&self) -> WeightTriple {
        WeightTriple::new(self.0[0].clone(), self.0[1].clone(), self.0[2].clone())
    }
}

/// Which term tables drive the map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SchurMapVariant {
    /// Denominator and `P7` rederived from the Schur complement; the default.
    Corrected,
    /// The original hand-derived tables. Wrong at generic states in `D` and `P7`.
    Printed,
    /// Corrected tables with the sign of the first `P4` term flipped; a
    /// negative control for the verifier.
    CorruptedP4,
}

impl SchurMapVariant {
    pub fn name(self) -> &'static str {
        match self {
            SchurMapVariant::Corrected => "corrected",
            SchurMapVariant::Printed => "printed",
            SchurMapVariant::CorruptedP4 => "corrupted-p4",
        }
    }

    pub fn transcription(self) -> Transcription {
        let c = |t: &'static [Term]| Cow::Borrowed(t);
        match self {
            SchurMapVariant::Corrected => Transcription {
                d: c(CORRECTED_D),
                num: [c(CORRECTED_P4), c(CORRECTED_P5), c(CORRECTED_P6), c(CORRECTED_P7), c(CORRECTED_P8), c(CORRECTED_P9)],
            },
            SchurMapVariant::Printed => Transcription {
                d: c(PRINTED_D),
                num: [c(PRINTED_P4), c(PRINTED_P5), c(PRINTED_P6), c(PRINTED_P7), c(PRINTED_P8), c(PRINTED_P9)],
            },
            SchurMapVariant::CorruptedP4 => {
                let mut t = SchurMapVariant::Corrected.transcription();
                let mut p4 = t.num[0].to_vec();
                p4[0].0 = -p4[0].0;
                t.num[0] = Cow::Owned(p4);
                t
            }
        }
    }
}

impl std::str::FromStr for SchurMapVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        [SchurMapVariant::Corrected, SchurMapVariant::Printed, SchurMapVariant::CorruptedP4]
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown schur map '{s}'")))
    }
}

/// `D` and the six numerators of `P4..P9` as monomial tables.
///
/// `P_i = N_i / D` for `i = 4, 5, 6` and `P_i = x_i + N_i / D` for `i = 7, 8, 9`.
#[derive(Clone, Debug)]
pub struct Transcription {
    pub d: Cow<'static, [Term]>,
    pub num: [Cow<'static, [Term]>; 6],
}

fn eval_terms(terms: &[Term], pows: &[Vec<BigRational>; 9]) -> BigRational {
    let mut acc = BigRational::zero();
    for (c, e) in terms {
        let mut t = BigRational::from_int(*c);
        for (i, &k) in e.iter().enumerate() {
            if k > 0 {
                t *= &pows[i][k as usize];
            }
        }
        acc += t;
    }
    acc
}

fn powers(s: &SchurState) -> [Vec<BigRational>; 9] {
    std::array::from_fn(|i| {
        let mut v = vec![BigRational::one()];
        for _ in 0..6 {
            let next = v.last().unwrap() * &s.0[i];
            v.push(next);
        }
        v
    })
}

impl Transcription {
    pub fn denominator(&self, s: &SchurState) -> BigRational {
        eval_terms(&self.d, &powers(s))
    }

    pub fn numerators(&self, s: &SchurState) -> [BigRational; 6] {
        let p = powers(s);
        std::array::from_fn(|i| eval_terms(&self.num[i], &p))
    }

    pub fn apply(&self, s: &SchurState) -> Result<SchurState> {
        let p = powers(s);
        let d = eval_terms(&self.d, &p);
        if d.is_zero() {
            return Err(Error::DecimationSingular { step: 0 });
        }
        let mut out = s.0.clone();
        for i in 0..6 {
            let q = eval_terms(&self.num[i], &p) / &d;
            out[i + 3] = if i < 3 { q } else { q + &s.0[i + 3] };
        }
        Ok(SchurState(out))
    }
}

pub fn schur_denominator(s: &SchurState) -> BigRational {
    SchurMapVariant::Corrected.transcription().denominator(s)
}

/// `P(s)`; fails with [`Error::DecimationSingular`] when `D(s) = 0`.
pub fn schur_map(s: &SchurState) -> Result<SchurState> {
    SchurMapVariant::Corrected.transcription().apply(s)
}

/// Random state with positive rational entries, numerators and denominators up to 97.
pub fn random_state(rng: &mut impl rand::Rng) -> SchurState {
    SchurState(std::array::from_fn(|_| crate::algebra::sampling::random_rational(rng)))
}

//! Label counts in a uniformly random spanning tree.
//!
//! If `X_l` counts the `l`-edges of a uniform spanning tree then
//! `E[e^{s X_l}] = T(e^s at l, 1 elsewhere) / T(1,1,1)`, so the mean and
//! variance are the first two derivatives of `log T` in that variable
//! (plus the mean, for the variance, since `x d/dx` is the derivative in `s`).

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::algebra::hp::HpReal;
use crate::algebra::{FactoredPoly, Scalar, TriPoly, WeightTriple, Weights};
use crate::error::check_level;
use crate::gf::{five_bundle, rot_closed, FiveModel, SYMBOLIC_LEVEL_CAP};
use crate::{Error, Label, Result};

/// Largest rotational level for exact log-derivatives of the factored form.
pub const ROT_STATS_CAP: u32 = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StatModel {
    Rotational,
    Directional,
    Schreier,
    Hanoi,
}

impl StatModel {
    pub const ALL: [StatModel; 4] = [StatModel::Rotational, StatModel::Directional, StatModel::Schreier, StatModel::Hanoi];

    pub fn name(self) -> &'static str {
        match self {
            StatModel::Rotational => "rotational",
            StatModel::Directional => "directional",
            StatModel::Schreier => "schreier",
            StatModel::Hanoi => "hanoi",
        }
    }

    fn five(self) -> Option<FiveModel> {
        match self {
            StatModel::Rotational => None,
            StatModel::Directional => Some(FiveModel::Directional),
            StatModel::Schreier => Some(FiveModel::Schreier),
            StatModel::Hanoi => Some(FiveModel::Hanoi),
        }
    }
}

impl FromStr for StatModel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        StatModel::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown model '{s}'")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabelStat {
    pub n: u32,
    pub label: Label,
    #[serde(serialize_with = "ser_q")]
    pub mean: BigRational,
    #[serde(serialize_with = "ser_q")]
    pub variance: BigRational,
}

fn ser_q<Se: serde::Serializer>(v: &BigRational, s: Se) -> std::result::Result<Se::Ok, Se::Error> {
    s.serialize_str(&v.to_string())
}

/// `(log T)'` and `(log T)''` at ones along `label`.
fn log_derivatives(model: StatModel, n: u32, label: Label) -> Result<(BigRational, BigRational)> {
    check_level(n)?;
    let ones = WeightTriple::ones();
    match model.five() {
        None => {
            if n > ROT_STATS_CAP {
                return Err(Error::Capability(format!("rotational statistics run up to level {ROT_STATS_CAP}")));
            }
            rot_closed(n)?.t.log_derivatives(&ones, label)
        }
        Some(m) => {
            if n > SYMBOLIC_LEVEL_CAP {
                return Err(Error::Capability(format!(
                    "{} statistics need symbolic bundles, available up to level {SYMBOLIC_LEVEL_CAP}",
                    model.name()
                )));
            }
            let t = five_bundle(m, n, &Weights::<TriPoly>::symbolic())?.t;
            let d1 = t.derivative(label);
            let d2 = d1.derivative(label);
            let v0: BigRational = t.eval(&ones);
            let r1 = d1.eval(&ones) / &v0;
            let r2 = d2.eval(&ones) / &v0;
            Ok((r1.clone(), r2 - r1.sq()))
        }
    }
}

pub fn label_mean_gf(model: StatModel, n: u32, label: Label) -> Result<BigRational> {
    Ok(log_derivatives(model, n, label)?.0)
}

pub fn label_variance_gf(model: StatModel, n: u32, label: Label) -> Result<BigRational> {
    let (d1, d2) = log_derivatives(model, n, label)?;
    Ok(d2 + d1)
}

pub fn label_stat_gf(model: StatModel, n: u32, label: Label) -> Result<LabelStat> {
    let (d1, d2) = log_derivatives(model, n, label)?;
    Ok(LabelStat { n, label, mean: d1.clone(), variance: d2 + d1 })
}

/// Rotational model: the closed mean and variance formulas.
pub fn label_stat_closed(n: u32, label: Label) -> LabelStat {
    let p = BigInt::from(3).pow(n);
    let q = |num: BigInt, den: i64| BigRational::new(num, BigInt::from(den));
    let (mean, variance) = match label {
        Label::A | Label::B => (q(16 * &p + 7, 30), q(199 * &p + 28, 900)),
        Label::C => (q(13 * &p + 1, 30), q(34 * &p - 2, 225)),
    };
    LabelStat { n, label, mean, variance }
}

fn hp_int(k: i64) -> HpReal {
    HpReal::from_bigint(&BigInt::from(k))
}

/// MGF of `(c_n - mu) / sigma` on the rotational model, from its closed
/// product form. Evaluated as a logarithm: the exponents are about `3^n`.
pub fn mgf_normalized(n: u32, t: f64) -> Result<HpReal> {
    check_level(n)?;
    let p = BigInt::from(3).pow(n);
    let half = |num: BigInt, den: i64| HpReal::from_bigint(&num).div(&hp_int(den));
    let root = HpReal::from_bigint(&(34 * &p - 2)).sqrt();
    let t = HpReal::from_f64(t);
    let e = hp_int(15).mul(&t).div(&root).exp();
    let e_phi = half(&p + 1, 2);
    let e_ab3c = half(&p - 3, 6);
    let log = e_phi
        .mul(&hp_int(1).add(&hp_int(2).mul(&e)).ln()?.sub(&hp_int(3).ln()?))
        .add(&e_ab3c.mul(&hp_int(2).add(&hp_int(3).mul(&e)).ln()?.sub(&hp_int(5).ln()?)))
        .sub(&half(13 * &p + 1, 2).mul(&t).div(&root));
    Ok(log.exp())
}

fn pow_hp(x: &HpReal, k: u32) -> HpReal {
    (0..k).fold(hp_int(1), |acc, _| acc.mul(x))
}

/// Base evaluated at `x` in slot `label` and 1 elsewhere.
fn eval_slot(b: &TriPoly, label: Label, x: &HpReal) -> HpReal {
    let i = label.index();
    let mut acc = HpReal::zero();
    for (e, c) in b.terms() {
        acc = acc.add(&HpReal::from_bigint(c).mul(&pow_hp(x, e[i])));
    }
    acc
}

fn log_ratio(t: &FactoredPoly, label: Label, x: &HpReal) -> Result<HpReal> {
    let one = hp_int(1);
    let mut acc = HpReal::zero();
    for (b, e) in &t.factors {
        let d = eval_slot(b, label, x).ln()?.sub(&eval_slot(b, label, &one).ln()?);
        acc = acc.add(&d.mul_int(e));
    }
    Ok(acc)
}

/// Normalised MGF for any label of the rotational model, computed from
/// `T_n(e^{t/sigma})/T_n(1)` with the factored form and the exact moments.
pub fn mgf_normalized_label(n: u32, label: Label, t: f64) -> Result<HpReal> {
    let stat = label_stat_gf(StatModel::Rotational, n, label)?;
    let sigma = HpReal::from_rational(&stat.variance).sqrt();
    let ts = HpReal::from_f64(t).div(&sigma);
    let tree = rot_closed(n)?.t;
    let log = log_ratio(&tree, label, &ts.exp())?.sub(&HpReal::from_rational(&stat.mean).mul(&ts));
    Ok(log.exp())
}

/// `-2, -1.5, ..., 2`.
pub fn default_grid() -> Vec<f64> {
    (-4..=4).map(|k| k as f64 / 2.0).collect()
}

fn gap_with(grid: &[f64], f: impl Fn(f64) -> Result<HpReal>) -> Result<f64> {
    let mut worst = 0.0f64;
    for &t in grid {
        let m = f(t)?.to_f64();
        worst = worst.max((m - (t * t / 2.0).exp()).abs());
    }
    Ok(worst)
}

/// Largest distance on `grid` between the MGF of the normalised `c` count
/// and the standard normal MGF `e^{t^2/2}`.
pub fn normality_gap(n: u32, grid: &[f64]) -> Result<f64> {
    gap_with(grid, |t| mgf_normalized(n, t))
}

pub fn normality_gap_label(n: u32, label: Label, grid: &[f64]) -> Result<f64> {
    match label {
        Label::C => normality_gap(n, grid),
        _ => gap_with(grid, |t| mgf_normalized_label(n, label, t)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn level_one_rotational() {
        assert_eq!(label_mean_gf(StatModel::Rotational, 1, Label::C).unwrap(), q(4, 3));
        assert_eq!(label_variance_gf(StatModel::Rotational, 1, Label::C).unwrap(), q(4, 9));
        assert_eq!(label_mean_gf(StatModel::Rotational, 1, Label::A).unwrap(), q(11, 6));
        assert_eq!(label_stat_closed(1, Label::A).variance, q(25, 36));
        assert_eq!(label_stat_closed(2, Label::C).mean, q(118, 30));
    }

    #[test]
    fn mgf_at_zero_is_one() {
        for n in [1, 5, 12] {
            assert!((mgf_normalized(n, 0.0).unwrap().to_f64() - 1.0).abs() < 1e-30);
        }
    }

    #[test]
    fn printed_and_factored_mgf_agree_for_c() {
        for t in [-1.5, 0.5, 2.0] {
            let a = mgf_normalized(5, t).unwrap().to_f64();
            let b = mgf_normalized_label(5, Label::C, t).unwrap().to_f64();
            assert!((a - b).abs() < 1e-12, "{a} vs {b}");
        }
    }

    #[test]
    fn symbolic_route_for_other_models() {
        let s = label_stat_gf(StatModel::Hanoi, 1, Label::A).unwrap();
        // triangle: each label is in 2 of the 3 trees
        assert_eq!(s.mean, q(2, 3));
        assert_eq!(s.variance, q(2, 9));
        assert!(matches!(label_mean_gf(StatModel::Directional, 4, Label::A), Err(Error::Capability(_))));
    }
}

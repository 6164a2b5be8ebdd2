//! Spanning-tree and boundary-forest generating functions.
//!
//! A bundle holds, for one level, the tree function `T` together with the
//! forest functions needed to close the recursion: 2-forests separating one
//! outmost vertex from the other two, and 3-forests separating all three.

mod directional;
mod hanoi;
mod rotational;
mod schreier;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

pub use directional::{dir_closed, dir_initial, dir_step, f_map, f_poly, phi};
pub use hanoi::{hanoi_counts_closed, hanoi_counts_recursive, hanoi_growth, hanoi_initial, hanoi_step};
pub use rotational::{rot_closed, rot_counts, rot_growth, rot_initial, rot_step};
pub use schreier::{g_map, g_poly, psi, schreier_closed, schreier_initial, schreier_step};

use crate::algebra::{BigRational, Factored, Scalar, WeightTriple, Weights};
use crate::error::check_level;
use crate::{Error, Result};

/// Largest level for symbolic (polynomial) bundles.
pub const SYMBOLIC_LEVEL_CAP: u32 = 3;
/// Largest level for closed forms built with symbolic `F`/`G` iterates.
pub const SYMBOLIC_CLOSED_CAP: u32 = 6;
/// Largest level for bundles evaluated at a rational point.
pub const EVALUATED_LEVEL_CAP: u32 = 12;

/// Rotation-invariant labelling: one 2-forest function `S` serves all corners.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RotBundle<S> {
    pub level: u32,
    pub t: S,
    pub s: S,
    pub q: S,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FiveModel {
    Directional,
    Schreier,
    Hanoi,
}

/// `U`, `R`, `L` isolate the top, right and left outmost vertex respectively.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FiveBundle<S> {
    pub level: u32,
    pub model: FiveModel,
    pub t: S,
    pub u: S,
    pub r: S,
    pub l: S,
    pub q: S,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountsTriple {
    #[serde(serialize_with = "ser_string")]
    pub tau: BigInt,
    #[serde(serialize_with = "ser_string")]
    pub s: BigInt,
    #[serde(serialize_with = "ser_string")]
    pub q: BigInt,
}

fn ser_string<T: ToString, Se: serde::Serializer>(v: &T, s: Se) -> std::result::Result<Se::Ok, Se::Error> {
    s.serialize_str(&v.to_string())
}

impl<S> RotBundle<S> {
    pub fn components(&self) -> [(&'static str, &S); 3] {
        [("T", &self.t), ("S", &self.s), ("Q", &self.q)]
    }

    pub fn map<V>(&self, f: impl Fn(&S) -> V) -> RotBundle<V> {
        RotBundle { level: self.level, t: f(&self.t), s: f(&self.s), q: f(&self.q) }
    }
}

impl<S> FiveBundle<S> {
    pub fn components(&self) -> [(&'static str, &S); 5] {
        [("T", &self.t), ("U", &self.u), ("R", &self.r), ("L", &self.l), ("Q", &self.q)]
    }

    pub fn map<V>(&self, f: impl Fn(&S) -> V) -> FiveBundle<V> {
        FiveBundle {
            level: self.level,
            model: self.model,
            t: f(&self.t),
            u: f(&self.u),
            r: f(&self.r),
            l: f(&self.l),
            q: f(&self.q),
        }
    }

    pub fn try_map<V>(&self, f: impl Fn(&S) -> Result<V>) -> Result<FiveBundle<V>> {
        Ok(FiveBundle {
            level: self.level,
            model: self.model,
            t: f(&self.t)?,
            u: f(&self.u)?,
            r: f(&self.r)?,
            l: f(&self.l)?,
            q: f(&self.q)?,
        })
    }
}

impl<S> RotBundle<S> {
    pub fn try_map<V>(&self, f: impl Fn(&S) -> Result<V>) -> Result<RotBundle<V>> {
        Ok(RotBundle { level: self.level, t: f(&self.t)?, s: f(&self.s)?, q: f(&self.q)? })
    }
}

/// Recursive bundle at level `n` for any of the gasket or Hanoi models.
pub fn five_bundle<S: Scalar>(model: FiveModel, n: u32, w: &Weights<S>) -> Result<FiveBundle<S>> {
    check_level(n)?;
    let mut b = match model {
        FiveModel::Directional => dir_initial(w),
        FiveModel::Schreier => schreier_initial(w),
        FiveModel::Hanoi => hanoi_initial(w),
    };
    for _ in 1..n {
        b = match model {
            FiveModel::Directional => dir_step(&b),
            FiveModel::Schreier => schreier_step(&b),
            FiveModel::Hanoi => hanoi_step(&b, w),
        };
    }
    Ok(b)
}

pub fn rot_bundle<S: Scalar>(n: u32, w: &Weights<S>) -> Result<RotBundle<S>> {
    check_level(n)?;
    let mut b = rot_initial(w);
    for _ in 1..n {
        b = rot_step(&b);
    }
    Ok(b)
}

/// Closed form of a gasket model evaluated at a rational point; the
/// `F`/`G` iterates are computed on numbers, so any level works.
pub fn five_closed_at(model: FiveModel, n: u32, w: &WeightTriple) -> Result<FiveBundle<BigRational>> {
    let f = match model {
        FiveModel::Directional => dir_closed(n, w)?,
        FiveModel::Schreier => schreier_closed(n, w)?,
        FiveModel::Hanoi => return Err(Error::Capability("Hanoi has no weighted closed form".into())),
    };
    f.try_map(Factored::value)
}

pub fn rot_closed_at(n: u32, w: &WeightTriple) -> Result<RotBundle<BigRational>> {
    rot_closed(n)?.try_map(|f| f.eval(w))
}

pub(crate) fn pow3(k: u32) -> BigInt {
    BigInt::from(3).pow(k)
}

/// `num / den`, which the closed forms guarantee to be an integer.
pub(crate) fn exact_div(num: BigInt, den: i64) -> BigInt {
    let (q, r) = num.div_rem(&BigInt::from(den));
    assert!(r.is_zero(), "closed-form exponent {num}/{den} is not integral");
    q
}

//! Seeded random rational points and Schwartz-Zippel style identity checks.

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{FactoredPoly, TriPoly, WeightTriple, Weights};
use crate::Result;

pub const MAX_SAMPLE_ENTRY: i64 = 97;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Positive rational with numerator and denominator in `1..=97`.
pub fn random_rational(rng: &mut impl Rng) -> BigRational {
    let n = rng.gen_range(1..=MAX_SAMPLE_ENTRY);
    let d = rng.gen_range(1..=MAX_SAMPLE_ENTRY);
    BigRational::new(n.into(), d.into())
}

/// Random weights with pairwise distinct coordinates.
pub fn random_weights(rng: &mut impl Rng) -> WeightTriple {
    loop {
        let w = Weights::new(random_rational(rng), random_rational(rng), random_rational(rng));
        if w.a != w.b && w.b != w.c && w.a != w.c {
            return w;
        }
    }
}

pub fn sample_points(seed: u64, trials: usize) -> Vec<WeightTriple> {
    let mut r = rng(seed);
    (0..trials).map(|_| random_weights(&mut r)).collect()
}

/// Anything with an exact value at a rational point.
pub trait Evaluate {
    fn eval_at(&self, w: &WeightTriple) -> Result<BigRational>;
}

impl Evaluate for TriPoly {
    fn eval_at(&self, w: &WeightTriple) -> Result<BigRational> {
        Ok(self.eval(w))
    }
}

impl Evaluate for FactoredPoly {
    fn eval_at(&self, w: &WeightTriple) -> Result<BigRational> {
        self.eval(w)
    }
}

impl<F: Fn(&WeightTriple) -> Result<BigRational>> Evaluate for F {
    fn eval_at(&self, w: &WeightTriple) -> Result<BigRational> {
        self(w)
    }
}

/// First sampled point where `p` and `q` differ, if any.
pub fn first_disagreement(
    p: &impl Evaluate,
    q: &impl Evaluate,
    trials: usize,
    seed: u64,
) -> Result<Option<WeightTriple>> {
    for w in sample_points(seed, trials) {
        if p.eval_at(&w)? != q.eval_at(&w)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Probabilistic polynomial identity test on `trials` seeded random points.
pub fn poly_equal_by_sampling(p: &impl Evaluate, q: &impl Evaluate, trials: usize, seed: u64) -> Result<bool> {
    Ok(first_disagreement(p, q, trials, seed)?.is_none())
}

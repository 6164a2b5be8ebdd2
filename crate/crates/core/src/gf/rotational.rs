use num_bigint::BigInt;

use super::{exact_div, pow3, CountsTriple, RotBundle};
use crate::algebra::hp::HpReal;
use crate::algebra::{BigRational, FactoredPoly, Scalar, TriPoly, Weights};
use crate::error::check_level;
use crate::Result;

pub fn rot_initial<S: Scalar>(w: &Weights<S>) -> RotBundle<S> {
    let (a, b, c) = (&w.a, &w.b, &w.c);
    let ab = a.clone() + b;
    let ab3c = ab.clone() + &(S::from_int(3) * c);
    let phi1 = a.clone() * b + &(a.clone() * c) + &(b.clone() * c);
    RotBundle {
        level: 1,
        t: S::from_int(3) * &ab * &phi1.sq(),
        s: ab.clone() * &ab3c * &phi1,
        q: ab * &ab3c.sq(),
    }
}

pub fn rot_step<S: Scalar>(x: &RotBundle<S>) -> RotBundle<S> {
    let (t, s, q) = (&x.t, &x.s, &x.q);
    let t2 = t.sq();
    RotBundle {
        level: x.level + 1,
        t: S::from_int(6) * &t2 * s,
        s: S::from_int(7) * t * &s.sq() + t2.clone() * q,
        q: S::from_int(12) * t * s * q + S::from_int(14) * &s.powu(3),
    }
}

/// Factored closed forms; the bases are `a+b`, `a+b+3c` and `ab+ac+bc`.
pub fn rot_closed(n: u32) -> Result<RotBundle<FactoredPoly>> {
    check_level(n)?;
    let w = Weights::<TriPoly>::symbolic();
    let ab = w.a.clone() + &w.b;
    let ab3c = ab.clone() + &(TriPoly::from_int(3) * &w.c);
    let phi1 = w.a.clone() * &w.b + &(w.a.clone() * &w.c) + &(w.b.clone() * &w.c);
    let (p, p1) = (pow3(n), pow3(n - 1));
    let ni = BigInt::from(n);
    let build = |e3: BigInt, e5: BigInt, e_ab3c: BigInt, e_phi: BigInt| {
        FactoredPoly::prime_power(2, exact_div(&p1 - 1, 2))
            .times_prime(3, e3)
            .times_prime(5, e5)
            .times_base(ab.clone(), p1.clone())
            .times_base(ab3c.clone(), e_ab3c)
            .times_base(phi1.clone(), e_phi)
    };
    Ok(RotBundle {
        level: n,
        t: build(
            exact_div(&p + 2 * &ni - 1, 4),
            exact_div(&p1 - 2 * &ni + 1, 4),
            exact_div(&p1 - 1, 2),
            exact_div(&p + 1, 2),
        ),
        s: build(
            exact_div(&p - 2 * &ni - 1, 4),
            exact_div(&p1 + 2 * &ni - 3, 4),
            exact_div(&p1 + 1, 2),
            exact_div(&p - 1, 2),
        ),
        q: build(
            exact_div(&p - 6 * &ni + 3, 4),
            exact_div(&p1 + 6 * &ni - 7, 4),
            exact_div(&p1 + 3, 2),
            exact_div(&p - 3, 2),
        ),
    })
}

/// Unweighted counts straight from the prime-exponent formulas.
pub fn rot_counts(n: u32) -> Result<CountsTriple> {
    check_level(n)?;
    let (p, pp) = (pow3(n), pow3(n + 1));
    let ni = BigInt::from(n);
    let e2 = exact_div(&p - 1, 2);
    let val = |e3: BigInt, e5: BigInt| -> BigInt {
        let u = |e: &BigInt| u32::try_from(e).expect("count exponent fits in u32");
        BigInt::from(2).pow(u(&e2)) * BigInt::from(3).pow(u(&e3)) * BigInt::from(5).pow(u(&e5))
    };
    Ok(CountsTriple {
        tau: val(exact_div(&pp + 2 * &ni + 1, 4), exact_div(&p - 2 * &ni - 1, 4)),
        s: val(exact_div(&pp - 2 * &ni - 3, 4), exact_div(&p + 2 * &ni - 1, 4)),
        q: val(exact_div(&pp - 6 * &ni - 3, 4), exact_div(&p + 6 * &ni - 1, 4)),
    })
}

/// `ln 2 / 3 + ln 3 / 2 + ln 5 / 6`.
pub fn rot_growth() -> HpReal {
    let ln = |k: i64| HpReal::ln_rational(&BigRational::from_int(k)).expect("positive");
    let third = HpReal::from_rational(&BigRational::new(1.into(), 3.into()));
    let half = HpReal::from_rational(&BigRational::new(1.into(), 2.into()));
    let sixth = HpReal::from_rational(&BigRational::new(1.into(), 6.into()));
    ln(2).mul(&third).add(&ln(3).mul(&half)).add(&ln(5).mul(&sixth))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::WeightTriple;

    #[test]
    fn level_one_at_ones() {
        let b = rot_initial(&WeightTriple::ones());
        assert_eq!((b.t, b.s, b.q), (BigRational::from_int(54), BigRational::from_int(30), BigRational::from_int(50)));
    }

    #[test]
    fn level_two_at_ones() {
        let b = rot_step(&rot_initial(&WeightTriple::ones()));
        assert_eq!(b.t, BigRational::from_int(524880));
        assert_eq!(b.s, BigRational::from_int(486000));
    }

    #[test]
    fn closed_level_one_shape() {
        let c = rot_closed(1).unwrap();
        assert_eq!(c.t.to_string(), "3 * (a + b) * (a*b + a*c + b*c)^2");
    }

    #[test]
    fn counts_match_recursion() {
        let mut b = rot_initial(&WeightTriple::ones());
        for n in 1..=6 {
            let c = rot_counts(n).unwrap();
            assert_eq!(b.t, BigRational::from_integer(c.tau));
            assert_eq!(b.s, BigRational::from_integer(c.s));
            assert_eq!(b.q, BigRational::from_integer(c.q));
            b = rot_step(&b);
        }
    }

    #[test]
    fn growth_constant_value() {
        let g = rot_growth().to_f64();
        let want = 2f64.ln() / 3.0 + 3f64.ln() / 2.0 + 5f64.ln() / 6.0;
        assert!((g - want).abs() < 1e-15);
    }
}

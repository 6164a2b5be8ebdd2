use num_bigint::BigInt;

use super::directional::phi1;
use super::{exact_div, pow3, CountsTriple, FiveBundle, FiveModel};
use crate::algebra::hp::HpReal;
use crate::algebra::{BigRational, Scalar, Weights};
use crate::error::check_level;
use crate::Result;

pub fn hanoi_initial<S: Scalar>(w: &Weights<S>) -> FiveBundle<S> {
    FiveBundle { model: FiveModel::Hanoi, ..super::dir_initial(w) }
}

/// One level up. Unlike the gasket models the weights enter every step,
/// through the edges joining the three copies.
pub fn hanoi_step<S: Scalar>(x: &FiveBundle<S>, w: &Weights<S>) -> FiveBundle<S> {
    let (t, u, r, l, q) = (&x.t, &x.u, &x.r, &x.l, &x.q);
    let (a, b, c) = (&w.a, &w.b, &w.c);
    let k = |n: i64| S::from_int(n);
    let p1 = phi1(w);
    let abc = a.clone() * b * c;
    let t2 = t.sq();
    let t3 = t2.clone() * t;
    let abc_t2q = abc.clone() * &t2 * q;
    let sum = u.clone() + r + l;

    // v is the isolated-corner function, wv its weight; o1, o2 the other two.
    let head = |v: &S, wv: &S, o1: &S, w1: &S, o2: &S, w2: &S| {
        wv.clone() * &t3
            + t2.clone() * &(p1.clone() * v + &(k(2) * wv * &(w1.clone() * o1 + &(w2.clone() * o2))))
            + abc.clone() * t * &(k(3) * o1 * o2 + &(v.clone() * &(o1.clone() + o2 + &(k(2) * v))))
            + &abc_t2q
    };

    let q_next = k(4) * &abc * t * q * &sum
        + t2.clone()
            * &((k(2) * b + a + c) * u + &((k(2) * a + b + c) * r) + &((k(2) * c + a + b) * l))
        + t2.clone() * q * &p1
        + t3.clone()
        + k(2)
            * &abc
            * &(u.sq() * &(r.clone() + l)
                + &(r.sq() * &(u.clone() + l))
                + &(l.sq() * &(u.clone() + r))
                + &(u.clone() * r * l))
        + k(2)
            * t
            * &(u.clone() * r * &(a.clone() * c + &(b.clone() * c) + &(k(2) * a * b))
                + &(u.clone() * l * &(a.clone() * b + &(a.clone() * c) + &(k(2) * b * c)))
                + &(r.clone() * l * &(a.clone() * b + &(b.clone() * c) + &(k(2) * a * c)))
                + &(b.clone() * &u.sq() * &(a.clone() + c))
                + &(a.clone() * &r.sq() * &(b.clone() + c))
                + &(c.clone() * &l.sq() * &(a.clone() + b)));

    FiveBundle {
        level: x.level + 1,
        model: FiveModel::Hanoi,
        t: t3.clone() * &p1 + k(2) * &abc * &t2 * &sum,
        u: head(u, b, r, a, l, c),
        r: head(r, a, u, b, l, c),
        l: head(l, c, r, a, u, b),
        q: q_next,
    }
}

/// Unweighted counts by iterating the integer recursion from `(3, 1, 1)`.
pub fn hanoi_counts_recursive(n: u32) -> Result<CountsTriple> {
    check_level(n)?;
    let (mut tau, mut s, mut q) = (BigInt::from(3), BigInt::from(1), BigInt::from(1));
    for _ in 1..n {
        let t2 = &tau * &tau;
        let t3 = &t2 * &tau;
        let s2 = &s * &s;
        let nt = 3 * &t3 + 6 * &t2 * &s;
        let ns = &t3 + 7 * &t2 * &s + 7 * &tau * &s2 + &t2 * &q;
        let nq = 3 * &t2 * &q + 12 * &tau * &s * &q + 14 * &s2 * &s + 12 * &t2 * &s + &t3 + 36 * &tau * &s2;
        (tau, s, q) = (nt, ns, nq);
    }
    Ok(CountsTriple { tau, s, q })
}

pub fn hanoi_counts_closed(n: u32) -> Result<CountsTriple> {
    check_level(n)?;
    let p = pow3(n);
    let ni = BigInt::from(n);
    let pw = |base: u32, e: BigInt| BigInt::from(base).pow(u32::try_from(&e).expect("exponent fits in u32"));
    let five = pw(5, exact_div(&p - 2 * &ni - 1, 4));
    let h = (BigInt::from(5).pow(n) - BigInt::from(3).pow(n)) / 2;
    Ok(CountsTriple {
        tau: pw(3, exact_div(&p + 2 * &ni - 1, 4)) * &five,
        s: pw(3, exact_div(&p - 2 * &ni - 1, 4)) * &five * &h,
        q: pw(3, exact_div(&p - 6 * &ni + 3, 4)) * &five * &h * &h,
    })
}

/// `(ln 3 + ln 5) / 4`.
pub fn hanoi_growth() -> HpReal {
    HpReal::ln_rational(&BigRational::from_int(15))
        .expect("positive")
        .div(&HpReal::from_f64(4.0))
}

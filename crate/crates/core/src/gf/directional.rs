use num_bigint::BigInt;

use super::{exact_div, pow3, FiveBundle, FiveModel};
use crate::algebra::{Factored, Scalar, Weights};
use crate::error::check_level;
use crate::Result;

pub fn dir_initial<S: Scalar>(w: &Weights<S>) -> FiveBundle<S> {
    FiveBundle {
        level: 1,
        model: FiveModel::Directional,
        t: phi1(w),
        u: w.b.clone(),
        r: w.a.clone(),
        l: w.c.clone(),
        q: S::one(),
    }
}

pub fn dir_step<S: Scalar>(x: &FiveBundle<S>) -> FiveBundle<S> {
    let (t, u, r, l, q) = (&x.t, &x.u, &x.r, &x.l, &x.q);
    let two = S::from_int(2);
    let three = S::from_int(3);
    let t2q = t.sq() * q;
    let head = |v: &S, o1: &S, o2: &S| {
        t.clone() * v * &(two.clone() * o1 + &(two.clone() * o2) + &(three.clone() * v)) + &t2q
    };
    let sum = u.clone() + r + l;
    let q_next = S::from_int(4) * t * q * &sum
        + two.clone()
            * &(u.sq() * &(r.clone() + l) + &(r.sq() * &(l.clone() + u)) + &(l.sq() * &(r.clone() + u)))
        + two.clone() * u * r * l;
    FiveBundle {
        level: x.level + 1,
        model: FiveModel::Directional,
        t: two.clone() * &t.sq() * &sum,
        u: head(u, r, l),
        r: head(r, l, u),
        l: head(l, r, u),
        q: q_next,
    }
}

pub(super) fn phi1<S: Scalar>(w: &Weights<S>) -> S {
    w.a.clone() * &w.b + &(w.a.clone() * &w.c) + &(w.b.clone() * &w.c)
}

/// `3a^2b + 3ab^2 + 3a^2c + 3ac^2 + 3b^2c + 3bc^2 + 7abc`.
pub fn f_poly<S: Scalar>(w: &Weights<S>) -> S {
    let (a, b, c) = (&w.a, &w.b, &w.c);
    let sym = a.sq() * b + &(a.clone() * &b.sq()) + &(a.sq() * c) + &(a.clone() * &c.sq()) + &(b.sq() * c)
        + &(b.clone() * &c.sq());
    S::from_int(3) * &sym + S::from_int(7) * a * b * c
}

/// `F(x, y, z)`; the result's `a`, `b`, `c` slots hold `F_1`, `F_2`, `F_3`.
pub fn f_map<S: Scalar>(w: &Weights<S>) -> Weights<S> {
    let (x, y, z) = (&w.a, &w.b, &w.c);
    let three = S::from_int(3);
    let comp = |p: &S, q: &S, r: &S| three.clone() * &p.sq() + &(three.clone() * p * r) + &(three.clone() * p * q) + &(q.clone() * r);
    Weights::new(comp(x, y, z), comp(y, x, z), comp(z, x, y))
}

fn f_iterates<S: Scalar>(w: &Weights<S>, k: u32) -> Vec<Weights<S>> {
    let mut v = vec![w.clone()];
    for _ in 0..k {
        let next = f_map(v.last().unwrap());
        v.push(next);
    }
    v
}

/// `phi_1 = ab+ac+bc`, `phi_k = phi_2(F^(k-2))` with `phi_2 = a+b+c`.
pub fn phi<S: Scalar>(k: u32, w: &Weights<S>) -> S {
    assert!(k >= 1);
    if k == 1 {
        phi1(w)
    } else {
        f_iterates(w, k - 2).pop().unwrap().sum()
    }
}

/// Closed forms with bases of type `S`: pass symbolic weights for factored
/// polynomials, rational weights for numbers.
pub fn dir_closed<S: Scalar>(n: u32, w: &Weights<S>) -> Result<FiveBundle<Factored<S>>> {
    check_level(n)?;
    let it = f_iterates(w, n.saturating_sub(1));
    let phis: Vec<S> = (1..=n).map(|k| if k == 1 { phi1(w) } else { it[k as usize - 2].sum() }).collect();
    let ni = BigInt::from(n);
    let p = pow3(n);
    let prod = |upto: u32, shift: i64| {
        let mut f = Factored::one();
        for k in 1..=upto {
            let e = exact_div(pow3(n - k + 1) + shift, 6);
            f = f.times_base(phis[k as usize - 1].clone(), e);
        }
        f
    };
    let t = prod(n, 3).times_prime(2, exact_div(&p + 6 * &ni - 9, 12));
    let (u, r, l) = if n == 1 {
        (Factored::base(w.b.clone(), 1), Factored::base(w.a.clone(), 1), Factored::base(w.c.clone(), 1))
    } else {
        let common = prod(n - 1, -3).times_prime(2, exact_div(&p - 6 * &ni + 3, 12));
        let last = &it[n as usize - 1];
        (
            common.clone().times_base(last.b.clone(), 1),
            common.clone().times_base(last.a.clone(), 1),
            common.times_base(last.c.clone(), 1),
        )
    };
    let q = match n {
        1 => Factored::one(),
        2 => Factored::prime_power(2, 1).times_base(f_poly(w), 1),
        _ => prod(n - 2, -9)
            .times_prime(2, exact_div(&p - 18 * &ni + 39, 12))
            .times_base(f_poly(&it[n as usize - 2]), 1),
    };
    Ok(FiveBundle { level: n, model: FiveModel::Directional, t, u, r, l, q })
}

use num_bigint::BigInt;

use super::directional::phi1;
use super::{exact_div, pow3, FiveBundle, FiveModel};
use crate::algebra::{Factored, Scalar, Weights};
use crate::error::check_level;
use crate::Result;

/// Same initial data as the directional model.
pub fn schreier_initial<S: Scalar>(w: &Weights<S>) -> FiveBundle<S> {
    FiveBundle { model: FiveModel::Schreier, ..super::dir_initial(w) }
}

pub fn schreier_step<S: Scalar>(x: &FiveBundle<S>) -> FiveBundle<S> {
    let (t, u, r, l, q) = (&x.t, &x.u, &x.r, &x.l, &x.q);
    let two = S::from_int(2);
    let t2q = t.sq() * q;
    let head = |v: &S, o1: &S, o2: &S| {
        t.clone() * &(S::from_int(3) * o1 * o2 + &(v.clone() * o1) + &(v.clone() * o2) + &(two.clone() * &v.sq()))
            + &t2q
    };
    let sum = u.clone() + r + l;
    let q_next = S::from_int(4) * t * q * &sum
        + two.clone()
            * &(u.sq() * &(l.clone() + r) + &(r.sq() * &(u.clone() + l)) + &(l.sq() * &(r.clone() + u)))
        + two.clone() * u * r * l;
    FiveBundle {
        level: x.level + 1,
        model: FiveModel::Schreier,
        t: two.clone() * &t.sq() * &sum,
        u: head(u, l, r),
        r: head(r, u, l),
        l: head(l, u, r),
        q: q_next,
    }
}

/// Identical to [`super::f_poly`]; kept separate so the two models stay independent.
pub fn g_poly<S: Scalar>(w: &Weights<S>) -> S {
    let (a, b, c) = (&w.a, &w.b, &w.c);
    let mut acc = S::from_int(7) * a * b * c;
    for (p, q) in [(a, b), (b, a), (a, c), (c, a), (b, c), (c, b)] {
        acc = acc + S::from_int(3) * &p.sq() * q;
    }
    acc
}

/// `G(x, y, z)`; the result's `a`, `b`, `c` slots hold `G_1`, `G_2`, `G_3`.
pub fn g_map<S: Scalar>(w: &Weights<S>) -> Weights<S> {
    let (x, y, z) = (&w.a, &w.b, &w.c);
    let comp = |p: &S, q: &S, r: &S| p.sq() + &(S::from_int(2) * q * r) + &(p.clone() * q) + &(p.clone() * r);
    Weights::new(comp(x, y, z), comp(y, x, z), comp(z, x, y))
}

fn g_iterates<S: Scalar>(w: &Weights<S>, k: u32) -> Vec<Weights<S>> {
    let mut v = vec![w.clone()];
    for _ in 0..k {
        let next = g_map(v.last().unwrap());
        v.push(next);
    }
    v
}

/// `psi_1 = ab+ac+bc`, `psi_k = psi_2(G^(k-2))` with `psi_2 = a+b+c`.
pub fn psi<S: Scalar>(k: u32, w: &Weights<S>) -> S {
    assert!(k >= 1);
    if k == 1 {
        phi1(w)
    } else {
        g_iterates(w, k - 2).pop().unwrap().sum()
    }
}

pub fn schreier_closed<S: Scalar>(n: u32, w: &Weights<S>) -> Result<FiveBundle<Factored<S>>> {
    check_level(n)?;
    let it = g_iterates(w, n.saturating_sub(1));
    let psis: Vec<S> = (1..=n).map(|k| if k == 1 { phi1(w) } else { it[k as usize - 2].sum() }).collect();
    let two_exp = exact_div(pow3(n - 1) - 1, 2);
    let prod = |upto: u32, shift: i64| {
        let mut f = Factored::one();
        for k in 1..=upto {
            let e = exact_div(pow3(n - k) + shift, 2);
            f = f.times_base(psis[k as usize - 1].clone(), e);
        }
        f.times_prime(2, two_exp.clone())
    };
    let t = prod(n, 1);
    let (u, r, l) = if n == 1 {
        (Factored::base(w.b.clone(), 1), Factored::base(w.a.clone(), 1), Factored::base(w.c.clone(), 1))
    } else {
        let common = prod(n - 1, -1);
        let last = &it[n as usize - 1];
        (
            common.clone().times_base(last.b.clone(), 1),
            common.clone().times_base(last.a.clone(), 1),
            common.times_base(last.c.clone(), 1),
        )
    };
    let q = match n {
        1 => Factored::one(),
        2 => Factored::prime_power(2, BigInt::from(1)).times_base(g_poly(w), 1),
        _ => prod(n - 2, -3).times_base(g_poly(&it[n as usize - 2]), 1),
    };
    Ok(FiveBundle { level: n, model: FiveModel::Schreier, t, u, r, l, q })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{BigRational, TriPoly, WeightTriple};

    #[test]
    fn level_three_at_ones() {
        let w = WeightTriple::ones();
        let b = schreier_step(&schreier_step(&schreier_initial(&w)));
        assert_eq!(b.t, BigRational::from_int(524880));
    }

    #[test]
    fn printed_small_cases() {
        let s = Weights::<TriPoly>::symbolic();
        let two = TriPoly::from_int(2);
        let c2 = schreier_closed(2, &s).unwrap();
        let g = g_map(&s);
        assert_eq!(c2.u.expand(20).unwrap(), two.clone() * &phi1(&s) * &g.b);
        let c3 = schreier_closed(3, &s).unwrap();
        let want = TriPoly::from_int(16) * &phi1(&s).powu(3) * &g_poly(&g);
        assert_eq!(c3.q.expand(40).unwrap(), want);
    }
}

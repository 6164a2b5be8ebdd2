use fractal_forest::algebra::{parse_rational, BigInt, BigRational, Scalar, TriPoly, WeightTriple, Weights};
use fractal_forest::gf::{
    dir_step, f_map, f_poly, five_bundle, five_closed_at, g_map, g_poly, rot_bundle, rot_closed, rot_closed_at,
    rot_step, schreier_step, FiveBundle, FiveModel, RotBundle,
};
use fractal_forest::graph::{build, Family};
use fractal_forest::matrix_tree::{cofactor_at, schur_map, schur_map_rederived, RationalMatrix, SchurState};
use fractal_forest::stats::{label_stat_closed, label_stat_gf, StatModel};
use fractal_forest::Label;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = BigRational> {
    (1i64..=60, 1i64..=60).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn weights() -> impl Strategy<Value = WeightTriple> {
    (rational(), rational(), rational()).prop_map(|(a, b, c)| Weights::new(a, b, c))
}

fn poly() -> impl Strategy<Value = TriPoly> {
    prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), -5i64..=5), 0..6)
        .prop_map(|ts| TriPoly::from_terms(ts.into_iter().map(|((i, j, k), c)| ([i, j, k], BigInt::from(c)))))
}

fn int_matrix(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-6i64..=6, n), n)
}

fn to_matrix(m: &[Vec<i64>]) -> RationalMatrix {
    let mut out = RationalMatrix::zeros(m.len());
    for (i, row) in m.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            out.set(i, j, BigRational::from_int(v));
        }
    }
    out
}

// Laplace expansion along the first row; independent of the elimination code.
fn laplace(m: &[Vec<i64>]) -> BigInt {
    if m.is_empty() {
        return BigInt::from(1);
    }
    let mut acc = BigInt::from(0);
    for j in 0..m.len() {
        let sub: Vec<Vec<i64>> =
            m[1..].iter().map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect()).collect();
        let term = BigInt::from(m[0][j]) * laplace(&sub);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

proptest! {
    #[test]
    fn poly_ring_laws(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(p.clone() * &q, q.clone() * &p);
        prop_assert_eq!(p.clone() * &(q.clone() + &r), p.clone() * &q + p.clone() * &r);
        prop_assert_eq!((p.clone() + &q) - &q, p.clone());
    }

    #[test]
    fn eval_is_a_homomorphism(p in poly(), q in poly(), w in weights()) {
        let prod: BigRational = (p.clone() * &q).eval(&w);
        prop_assert_eq!(prod, p.eval(&w) * q.eval(&w));
    }

    #[test]
    fn leibniz_rule(p in poly(), q in poly()) {
        for l in Label::ALL {
            let lhs = (p.clone() * &q).derivative(l);
            prop_assert_eq!(lhs, p.derivative(l) * &q + p.clone() * &q.derivative(l));
        }
    }

    #[test]
    fn poly_text_roundtrips_through_json(p in poly()) {
        let s = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<TriPoly>(&s).unwrap(), p);
    }

    #[test]
    fn rational_parse_roundtrip(x in rational()) {
        prop_assert_eq!(parse_rational(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn determinant_matches_laplace(m in int_matrix(4)) {
        prop_assert_eq!(to_matrix(&m).determinant(), BigRational::from_integer(laplace(&m)));
    }

    #[test]
    fn determinant_is_multiplicative(a in int_matrix(3), b in int_matrix(3)) {
        let ab: Vec<Vec<i64>> = (0..3).map(|i| (0..3).map(|j| (0..3).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect();
        prop_assert_eq!(to_matrix(&ab).determinant(), to_matrix(&a).determinant() * to_matrix(&b).determinant());
    }

    #[test]
    fn f_and_g_polys_agree(w in weights()) {
        prop_assert_eq!(f_poly(&w), g_poly(&w));
    }

    #[test]
    fn collapsing_corners_gives_rotational_step(t in rational(), s in rational(), q in rational()) {
        let rot = rot_step(&RotBundle { level: 1, t: t.clone(), s: s.clone(), q: q.clone() });
        for model in [FiveModel::Directional, FiveModel::Schreier] {
            let b = FiveBundle { level: 1, model, t: t.clone(), u: s.clone(), r: s.clone(), l: s.clone(), q: q.clone() };
            let next = if model == FiveModel::Directional { dir_step(&b) } else { schreier_step(&b) };
            prop_assert_eq!(&next.t, &rot.t);
            prop_assert_eq!(&next.u, &rot.s);
            prop_assert_eq!(&next.r, &rot.s);
            prop_assert_eq!(&next.l, &rot.s);
            prop_assert_eq!(&next.q, &rot.q);
        }
    }

    #[test]
    fn label_means_a_b_symmetric(n in 1u32..=10) {
        let (a, b) = (label_stat_gf(StatModel::Rotational, n, Label::A).unwrap(), label_stat_gf(StatModel::Rotational, n, Label::B).unwrap());
        prop_assert_eq!(&a.mean, &b.mean);
        prop_assert_eq!(&a.variance, &b.variance);
        prop_assert_eq!(label_stat_closed(n, Label::A).mean, a.mean);
        prop_assert!(a.variance > BigRational::from_int(0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn rotational_closed_equals_recursion(w in weights(), n in 1u32..=4) {
        prop_assert_eq!(rot_closed_at(n, &w).unwrap(), rot_bundle(n, &w).unwrap());
    }

    #[test]
    fn gasket_closed_equals_recursion(w in weights(), n in 1u32..=5) {
        for m in [FiveModel::Directional, FiveModel::Schreier] {
            prop_assert_eq!(five_closed_at(m, n, &w).unwrap(), five_bundle(m, n, &w).unwrap());
        }
    }

    #[test]
    fn symmetric_weights_give_equal_corners(x in rational(), n in 1u32..=5) {
        let w = Weights::new(x.clone(), x.clone(), x);
        for m in [FiveModel::Directional, FiveModel::Schreier, FiveModel::Hanoi] {
            let b = five_bundle(m, n, &w).unwrap();
            prop_assert_eq!(&b.u, &b.r);
            prop_assert_eq!(&b.r, &b.l);
        }
    }

    #[test]
    fn bundles_positive(w in weights(), n in 1u32..=4) {
        let zero = BigRational::from_int(0);
        for m in [FiveModel::Directional, FiveModel::Schreier, FiveModel::Hanoi] {
            let b = five_bundle(m, n, &w).unwrap();
            prop_assert!(b.components().iter().all(|(_, v)| **v > zero));
        }
        let r = rot_bundle(n, &w).unwrap();
        prop_assert!(r.t > zero && r.s > zero && r.q > zero);
    }

    #[test]
    fn cofactor_independent_of_deleted_vertex(w in weights(), fam in 0usize..4) {
        let g = build(Family::ALL[fam], 2, false).unwrap();
        let base = cofactor_at(&g, &w, 0).unwrap();
        for i in 1..g.num_vertices() {
            prop_assert_eq!(&cofactor_at(&g, &w, i).unwrap(), &base);
        }
    }

    #[test]
    fn factored_log_derivative_matches_expansion(w in weights()) {
        let t = rot_closed(2).unwrap().t;
        let p = t.expand(200).unwrap();
        for l in Label::ALL {
            let (d1, _) = t.log_derivatives(&w, l).unwrap();
            let v: BigRational = p.eval(&w);
            let dv: BigRational = p.derivative(l).eval(&w);
            prop_assert_eq!(d1, dv / v);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn decimation_map_matches_schur_complement(xs in prop::array::uniform9(rational())) {
        let s = SchurState(xs);
        let (p, _) = schur_map_rederived(&s).unwrap();
        prop_assert_eq!(&p, &schur_map(&s).unwrap());
        prop_assert_eq!(&p.0[..3], &s.0[..3]);
    }
}

#[test]
fn f_map_differs_from_g_map() {
    let w = WeightTriple::from_ints(1, 2, 3);
    assert_ne!(f_map(&w), g_map(&w));
}

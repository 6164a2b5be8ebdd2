//! Brute-force enumeration against the recursions and the matrix-tree cofactor.

use fractal_forest::algebra::sampling::sample_points;
use fractal_forest::algebra::{BigInt, BigRational, TriPoly, WeightTriple, Weights};
use fractal_forest::gf::{five_bundle, hanoi_initial, hanoi_step, rot_bundle, FiveModel};
use fractal_forest::graph::{build, census, Family, LabelledGraph};
use fractal_forest::matrix_tree::tree_gf_cofactor;
use fractal_forest::oracle::{count_trees, enumerate_gf, Corner, ForestSpec, MAX_ORACLE_EDGES};

fn corpus() -> Vec<LabelledGraph> {
    let mut out = Vec::new();
    for f in Family::ALL {
        for n in 1..=3 {
            let g = build(f, n, false).unwrap();
            if g.non_loop_edges().count() <= MAX_ORACLE_EDGES {
                out.push(g);
            }
        }
    }
    out
}

fn model(f: Family) -> Option<FiveModel> {
    match f {
        Family::Hanoi => Some(FiveModel::Hanoi),
        Family::SierpinskiDirectional => Some(FiveModel::Directional),
        Family::SierpinskiSchreier => Some(FiveModel::Schreier),
        Family::SierpinskiRotational => None,
    }
}

#[test]
fn corpus_covers_every_family() {
    let c = corpus();
    for f in Family::ALL {
        assert!(c.iter().filter(|g| g.family == f).count() >= 2, "{f}");
    }
}

#[test]
fn tree_polynomial_equals_cofactor() {
    for g in corpus() {
        let p = enumerate_gf(&g, ForestSpec::Tree).unwrap();
        for w in sample_points(31, 10) {
            assert_eq!(p.eval(&w), tree_gf_cofactor(&g, &w).unwrap(), "{} level {}", g.family, g.level);
        }
    }
}

#[test]
fn forest_degrees() {
    for g in corpus() {
        let v = g.num_vertices() as u32;
        let specs = [
            (ForestSpec::Tree, 1),
            (ForestSpec::TwoForest(Corner::Top), 2),
            (ForestSpec::TwoForest(Corner::Left), 2),
            (ForestSpec::ThreeForest, 3),
        ];
        for (spec, k) in specs {
            let p = enumerate_gf(&g, spec).unwrap();
            assert!(p.terms().all(|(e, _)| e.iter().sum::<u32>() == v - k), "{} level {} {spec:?}", g.family, g.level);
        }
    }
}

/// Every forest function of every bundle, symbolically, wherever the oracle reaches.
#[test]
fn bundles_equal_enumeration() {
    let sym = Weights::<TriPoly>::symbolic();
    for g in corpus() {
        let e = |s| enumerate_gf(&g, s).unwrap();
        match model(g.family) {
            Some(m) => {
                let b = five_bundle(m, g.level, &sym).unwrap();
                let ctx = format!("{} level {}", g.family, g.level);
                assert_eq!(b.t, e(ForestSpec::Tree), "T {ctx}");
                assert_eq!(b.u, e(ForestSpec::TwoForest(Corner::Top)), "U {ctx}");
                assert_eq!(b.r, e(ForestSpec::TwoForest(Corner::Right)), "R {ctx}");
                assert_eq!(b.l, e(ForestSpec::TwoForest(Corner::Left)), "L {ctx}");
                assert_eq!(b.q, e(ForestSpec::ThreeForest), "Q {ctx}");
            }
            None => {
                let b = rot_bundle(g.level, &sym).unwrap();
                assert_eq!(b.t, e(ForestSpec::Tree));
                for c in [Corner::Top, Corner::Left, Corner::Right] {
                    assert_eq!(b.s, e(ForestSpec::TwoForest(c)));
                }
                assert_eq!(b.q, e(ForestSpec::ThreeForest));
            }
        }
    }
}

/// Each right-hand side of the Hanoi step, at five points, against level-2 enumeration.
#[test]
fn hanoi_step_transcription() {
    let g = build(Family::Hanoi, 2, false).unwrap();
    let e = |s| enumerate_gf(&g, s).unwrap();
    let want = [
        e(ForestSpec::Tree),
        e(ForestSpec::TwoForest(Corner::Top)),
        e(ForestSpec::TwoForest(Corner::Right)),
        e(ForestSpec::TwoForest(Corner::Left)),
        e(ForestSpec::ThreeForest),
    ];
    for w in sample_points(77, 5) {
        let b = hanoi_step(&hanoi_initial(&w), &w);
        let got = [b.t, b.u, b.r, b.l, b.q];
        for (i, (x, p)) in got.iter().zip(&want).enumerate() {
            let v: BigRational = p.eval(&w);
            assert_eq!(*x, v, "component {i} at {:?}", w.to_strings());
        }
    }
}

#[test]
fn reference_counts() {
    let t = |f, n| count_trees(&build(f, n, false).unwrap()).unwrap();
    assert_eq!(t(Family::Hanoi, 1), BigInt::from(3));
    assert_eq!(t(Family::Hanoi, 2), BigInt::from(135));
    assert_eq!(t(Family::SierpinskiRotational, 1), BigInt::from(54));
    // with unit weights the three labellings are the same graph
    assert_eq!(t(Family::SierpinskiDirectional, 2), BigInt::from(54));
    assert_eq!(t(Family::SierpinskiSchreier, 2), BigInt::from(54));
}

#[test]
fn census_of_standard_graphs() {
    let c = census(&build(Family::Hanoi, 3, true).unwrap());
    // 3^n vertices, 3(3^n - 1)/2 edges, 3 loops at the corners
    assert_eq!((c.vertices, c.edges, c.loops), (27, 39, 3));
    let c = census(&build(Family::SierpinskiRotational, 3, false).unwrap());
    assert_eq!((c.vertices, c.edges), (42, 81));
    assert!(c.label_counts.values().all(|&k| k == 27));
}

#[test]
fn hanoi_level_two_bundle_at_ones() {
    let b = five_bundle(FiveModel::Hanoi, 2, &WeightTriple::ones()).unwrap();
    let i = |k: i64| BigRational::from_integer(k.into());
    assert_eq!((b.t, b.u.clone(), b.r, b.l), (i(135), i(120), i(120), i(120)));
}

use std::collections::BTreeMap;

use super::hanoi::contract_hanoi;
use super::{Corners, Edge, Family, LabelledGraph, VertexKey};
use crate::error::check_level;
use crate::{Error, Label, Result};

pub const MAX_GASKET_LEVEL: u32 = 12;

type Pt = (i64, i64);
type Seg = (Pt, Pt, Label);

// Level-1 rotational gasket (side 2). Boundary edges alternate a/b going
// around; the inner triangle is all c.
const ROT_BASE: [Seg; 9] = [
    ((0, 1), (0, 2), Label::A),
    ((0, 0), (0, 1), Label::B),
    ((0, 0), (1, 0), Label::A),
    ((1, 0), (2, 0), Label::B),
    ((2, 0), (1, 1), Label::A),
    ((0, 2), (1, 1), Label::B),
    ((0, 1), (1, 1), Label::C),
    ((0, 1), (1, 0), Label::C),
    ((1, 0), (1, 1), Label::C),
];

// Unit triangle labelled by direction: along x is b, along y is a, the
// remaining diagonal is c.
const DIR_BASE: [Seg; 3] = [
    ((0, 0), (1, 0), Label::B),
    ((0, 0), (0, 1), Label::A),
    ((1, 0), (0, 1), Label::C),
];

/// Three translated copies at the left, right and top corners.
fn grow(segs: &[Seg], side: i64) -> Vec<Seg> {
    [(0, 0), (side, 0), (0, side)]
        .iter()
        .flat_map(|&(dx, dy)| {
            segs.iter()
                .map(move |&((x1, y1), (x2, y2), l)| ((x1 + dx, y1 + dy), (x2 + dx, y2 + dy), l))
        })
        .collect()
}

fn assemble(family: Family, level: u32, side: i64, segs: Vec<Seg>) -> LabelledGraph {
    // canonical order: by row from the top, then offset along the row
    let key = |p: Pt| ((side - p.1) as u32, p.0 as u32);
    let mut points: BTreeMap<(u32, u32), Pt> = BTreeMap::new();
    for (p, q, _) in &segs {
        points.insert(key(*p), *p);
        points.insert(key(*q), *q);
    }
    let index: BTreeMap<(u32, u32), usize> = points.keys().enumerate().map(|(i, k)| (*k, i)).collect();
    let edges = segs
        .iter()
        .map(|(p, q, l)| Edge { u: index[&key(*p)], v: index[&key(*q)], label: *l })
        .collect();
    let mut g = LabelledGraph {
        family,
        level,
        vertices: points.keys().map(|&(row, offset)| VertexKey::Lattice { row, offset }).collect(),
        edges,
        corners: Corners {
            top: index[&key((0, side))],
            left: index[&key((0, 0))],
            right: index[&key((side, 0))],
        },
        lattice: points.values().copied().collect(),
    };
    g.canonicalize_edges();
    g
}

/// Gasket graph of the given labelling family.
///
/// Rotational level `n` has side `2^n`; directional and Schreier level `n`
/// have side `2^(n-1)`, so rotational `n` and the other two at `n + 1` share
/// the same underlying graph.
pub fn build_sierpinski(n: u32, family: Family) -> Result<LabelledGraph> {
    check_level(n)?;
    if n > MAX_GASKET_LEVEL {
        return Err(Error::Capability(format!("gasket graphs are built up to level {MAX_GASKET_LEVEL}")));
    }
    match family {
        Family::SierpinskiRotational | Family::SierpinskiDirectional => {
            let (mut segs, mut side) = if family == Family::SierpinskiRotational {
                (ROT_BASE.to_vec(), 2)
            } else {
                (DIR_BASE.to_vec(), 1)
            };
            for _ in 1..n {
                segs = grow(&segs, side);
                side *= 2;
            }
            Ok(assemble(family, n, side, segs))
        }
        Family::SierpinskiSchreier => {
            let segs = contract_hanoi(n)?;
            Ok(assemble(family, n, 1 << (n - 1), segs))
        }
        Family::Hanoi => Err(Error::Parse("hanoi is not a gasket family".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degrees(g: &LabelledGraph) -> Vec<usize> {
        let mut d = vec![0; g.num_vertices()];
        for e in g.non_loop_edges() {
            d[e.u] += 1;
            d[e.v] += 1;
        }
        d
    }

    #[test]
    fn rotational_level_one() {
        let g = build_sierpinski(1, Family::SierpinskiRotational).unwrap();
        assert_eq!(g.num_vertices(), 6);
        assert_eq!(g.edges.len(), 9);
        assert_eq!(degrees(&g), vec![2, 4, 4, 2, 4, 2]);
        assert_eq!(g.corners.top, 0);
    }

    #[test]
    fn same_underlying_graph() {
        for n in 1..=4 {
            let r = build_sierpinski(n, Family::SierpinskiRotational).unwrap();
            let d = build_sierpinski(n + 1, Family::SierpinskiDirectional).unwrap();
            let s = build_sierpinski(n + 1, Family::SierpinskiSchreier).unwrap();
            let shape = |g: &LabelledGraph| {
                let mut v: Vec<_> = g.edges.iter().map(|e| (e.u, e.v)).collect();
                v.sort();
                v
            };
            assert_eq!(r.vertices, d.vertices);
            assert_eq!(r.vertices, s.vertices);
            assert_eq!(shape(&r), shape(&d));
            assert_eq!(shape(&r), shape(&s));
        }
    }

    #[test]
    fn schreier_level_two_labels() {
        // vertices: row 0: top; row 1: two; row 2: three
        let g = build_sierpinski(2, Family::SierpinskiSchreier).unwrap();
        assert_eq!(g.num_vertices(), 6);
        let counts: Vec<usize> =
            Label::ALL.iter().map(|l| g.edges.iter().filter(|e| e.label == *l).count()).collect();
        assert_eq!(counts, vec![3, 3, 3]);
    }
}

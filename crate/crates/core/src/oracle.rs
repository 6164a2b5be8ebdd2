//! Brute-force enumeration of spanning trees and boundary forests.
//!
//! Shares nothing with the linear-algebra or recursion code, which is the
//! point: it is the reference the other methods are tested against.

use std::collections::HashMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::algebra::TriPoly;
use crate::graph::LabelledGraph;
use crate::{Error, Result};

pub const MAX_ORACLE_EDGES: usize = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Corner {
    Top,
    Left,
    Right,
}

/// What to enumerate. `TwoForest(x)` keeps the other two corners together
/// and puts `x` in the second component.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ForestSpec {
    Tree,
    TwoForest(Corner),
    ThreeForest,
}

impl ForestSpec {
    fn components(self) -> usize {
        match self {
            ForestSpec::Tree => 1,
            ForestSpec::TwoForest(_) => 2,
            ForestSpec::ThreeForest => 3,
        }
    }
}

// Union-find with undo; no path compression so that unions can be rolled back.
struct Dsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    log: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect(), size: vec![1; n], log: Vec::new() }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.log.push(b);
    }

    fn undo(&mut self) {
        let b = self.log.pop().expect("undo without union");
        let a = self.parent[b];
        self.size[a] -= self.size[b];
        self.parent[b] = b;
    }
}

struct Search<'a> {
    edges: Vec<(usize, usize, usize)>,
    target: usize,
    separate: Vec<(usize, usize)>,
    together: Option<(usize, usize)>,
    dsu: Dsu,
    exps: [u32; 3],
    out: &'a mut HashMap<[u32; 3], u64>,
}

impl Search<'_> {
    fn run(&mut self, i: usize, chosen: usize) {
        if chosen == self.target {
            if let Some((x, y)) = self.together {
                if self.dsu.find(x) != self.dsu.find(y) {
                    return;
                }
            }
            *self.out.entry(self.exps).or_insert(0) += 1;
            return;
        }
        if self.edges.len() - i < self.target - chosen {
            return;
        }
        let (u, v, l) = self.edges[i];
        let (ru, rv) = (self.dsu.find(u), self.dsu.find(v));
        if ru != rv {
            let joins_separated = self.separate.iter().any(|&(x, y)| {
                let (rx, ry) = (self.dsu.find(x), self.dsu.find(y));
                (rx == ru && ry == rv) || (rx == rv && ry == ru)
            });
            if !joins_separated {
                self.dsu.union(u, v);
                self.exps[l] += 1;
                self.run(i + 1, chosen + 1);
                self.exps[l] -= 1;
                self.dsu.undo();
            }
        }
        self.run(i + 1, chosen);
    }
}

/// Weighted generating function of the spanning subgraphs described by
/// `spec`. Loops are ignored (no forest can use one).
pub fn enumerate_gf(g: &LabelledGraph, spec: ForestSpec) -> Result<TriPoly> {
    let edges: Vec<(usize, usize, usize)> = g.non_loop_edges().map(|e| (e.u, e.v, e.label.index())).collect();
    if edges.len() > MAX_ORACLE_EDGES {
        return Err(Error::Capability(format!(
            "oracle enumerates at most {MAX_ORACLE_EDGES} edges, graph has {}",
            edges.len()
        )));
    }
    let n = g.num_vertices();
    let k = spec.components();
    if n < k {
        return Ok(TriPoly::default());
    }
    let c = g.corners;
    let corner = |x: Corner| match x {
        Corner::Top => c.top,
        Corner::Left => c.left,
        Corner::Right => c.right,
    };
    let (separate, together) = match spec {
        ForestSpec::Tree => (vec![], None),
        ForestSpec::TwoForest(x) => {
            let others: Vec<usize> =
                [Corner::Top, Corner::Left, Corner::Right].into_iter().filter(|&y| y != x).map(corner).collect();
            (vec![(corner(x), others[0]), (corner(x), others[1])], Some((others[0], others[1])))
        }
        ForestSpec::ThreeForest => (vec![(c.top, c.left), (c.top, c.right), (c.left, c.right)], None),
    };
    let mut counts = HashMap::new();
    let mut s = Search {
        edges,
        target: n - k,
        separate,
        together,
        dsu: Dsu::new(n),
        exps: [0; 3],
        out: &mut counts,
    };
    s.run(0, 0);
    Ok(TriPoly::from_terms(counts.into_iter().map(|(e, m)| (e, BigInt::from(m)))))
}

/// Number of spanning trees.
pub fn count_trees(g: &LabelledGraph) -> Result<BigInt> {
    Ok(enumerate_gf(g, ForestSpec::Tree)?.coefficient_sum())
}

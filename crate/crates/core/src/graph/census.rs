use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;

use super::LabelledGraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Census {
    pub family: String,
    pub level: u32,
    pub vertices: usize,
    /// Non-loop edges.
    pub edges: usize,
    pub loops: usize,
    /// Non-loop edges per label.
    pub label_counts: BTreeMap<String, usize>,
    /// Degree (a loop counts once) to number of vertices.
    pub degree_histogram: BTreeMap<usize, usize>,
    pub connected: bool,
}

pub fn census(g: &LabelledGraph) -> Census {
    let mut label_counts = BTreeMap::new();
    let mut deg = vec![0usize; g.num_vertices()];
    let mut loops = 0;
    for e in &g.edges {
        if e.is_loop() {
            loops += 1;
            deg[e.u] += 1;
        } else {
            *label_counts.entry(e.label.to_string()).or_insert(0) += 1;
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
    }
    let mut degree_histogram = BTreeMap::new();
    for d in deg {
        *degree_histogram.entry(d).or_insert(0) += 1;
    }
    Census {
        family: g.family.to_string(),
        level: g.level,
        vertices: g.num_vertices(),
        edges: g.edges.len() - loops,
        loops,
        label_counts,
        degree_histogram,
        connected: g.is_connected(),
    }
}

/// Graphviz rendering; node ids are canonical indices, node labels the vertex keys.
pub fn to_dot(g: &LabelledGraph) -> String {
    let mut s = String::new();
    let name = g.family.name().replace('-', "_");
    writeln!(s, "graph {}_{} {{", name, g.level).unwrap();
    for (i, v) in g.vertices.iter().enumerate() {
        let (x, y) = g.position(i);
        writeln!(s, "  n{i} [label=\"{v}\", pos=\"{x:.3},{y:.3}!\"];").unwrap();
    }
    for e in &g.edges {
        let extra = if e.is_loop() { ", class=\"loop\"" } else { "" };
        writeln!(s, "  n{} -- n{} [label=\"{}\"{}];", e.u, e.v, e.label, extra).unwrap();
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_hanoi, build_sierpinski, Family};

    #[test]
    fn hanoi_two_census() {
        let c = census(&build_hanoi(2, false).unwrap());
        assert_eq!((c.vertices, c.edges, c.loops), (9, 12, 0));
        assert_eq!(c.degree_histogram, BTreeMap::from([(2, 3), (3, 6)]));
        let c = census(&build_hanoi(1, true).unwrap());
        assert_eq!((c.edges, c.loops), (3, 3));
        assert_eq!(c.degree_histogram, BTreeMap::from([(3, 3)]));
    }

    #[test]
    fn rotational_two_census() {
        let c = census(&build_sierpinski(2, Family::SierpinskiRotational).unwrap());
        assert_eq!((c.vertices, c.edges), (15, 27));
        assert!(c.label_counts.values().all(|&k| k == 9));
        assert!(c.connected);
    }

    #[test]
    fn dot_lines() {
        let d = to_dot(&build_hanoi(1, false).unwrap());
        assert_eq!(d.lines().filter(|l| l.contains("[label=") && !l.contains("--")).count(), 3);
        assert_eq!(d.lines().filter(|l| l.contains("--")).count(), 3);
    }
}

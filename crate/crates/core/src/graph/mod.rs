//! Labelled graphs: Hanoi Towers Schreier graphs and the three labellings of
//! the Sierpinski gasket graph.

mod census;
mod hanoi;
mod sierpinski;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use census::{census, to_dot, Census};
pub use hanoi::{apply_generator, build_hanoi, hanoi_words, schreier_embedding};
pub use sierpinski::build_sierpinski;

use crate::{Error, Label};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "hanoi")]
    Hanoi,
    #[serde(rename = "sierpinski-rot")]
    SierpinskiRotational,
    #[serde(rename = "sierpinski-dir")]
    SierpinskiDirectional,
    #[serde(rename = "sierpinski-schreier")]
    SierpinskiSchreier,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::Hanoi,
        Family::SierpinskiRotational,
        Family::SierpinskiDirectional,
        Family::SierpinskiSchreier,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Hanoi => "hanoi",
            Family::SierpinskiRotational => "sierpinski-rot",
            Family::SierpinskiDirectional => "sierpinski-dir",
            Family::SierpinskiSchreier => "sierpinski-schreier",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family '{s}'")))
    }
}

/// Word over `{0, 1, 2}`; index 0 is the letter the generators touch first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<u8>);

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &x in &self.0 {
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Vertex identity. Gasket vertices are lattice points addressed by row
/// (0 at the top corner) and offset within the row.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexKey {
    Word(Word),
    Lattice { row: u32, offset: u32 },
}

impl fmt::Display for VertexKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexKey::Word(w) => write!(f, "{w}"),
            VertexKey::Lattice { row, offset } => write!(f, "({row},{offset})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub label: Label,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }
}

/// The three outmost vertices, named by where they sit in the usual drawing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Corners {
    pub top: usize,
    pub left: usize,
    pub right: usize,
}

#[derive(Clone, Debug)]
pub struct LabelledGraph {
    pub family: Family,
    pub level: u32,
    pub vertices: Vec<VertexKey>,
    /// Canonically sorted, `u <= v` in every edge.
    pub edges: Vec<Edge>,
    pub corners: Corners,
    /// Drawing coordinates on the triangular lattice, `(x, y)` with `y` up.
    pub lattice: Vec<(i64, i64)>,
}

impl LabelledGraph {
    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn non_loop_edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(|e| !e.is_loop())
    }

    /// Euclidean drawing coordinates of vertex `v` (unit edge length).
    pub fn position(&self, v: usize) -> (f64, f64) {
        let (x, y) = self.lattice[v];
        (x as f64 + 0.5 * y as f64, y as f64 * 3f64.sqrt() / 2.0)
    }

    /// Connectivity ignoring loops.
    pub fn is_connected(&self) -> bool {
        let n = self.num_vertices();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut comps = n;
        for e in self.non_loop_edges() {
            let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
            if a != b {
                parent[a] = b;
                comps -= 1;
            }
        }
        comps <= 1
    }

    pub(crate) fn canonicalize_edges(&mut self) {
        for e in &mut self.edges {
            if e.u > e.v {
                std::mem::swap(&mut e.u, &mut e.v);
            }
        }
        self.edges.sort();
    }
}

/// Builds the level-`n` graph of `family`; loops only matter for Hanoi.
pub fn build(family: Family, n: u32, include_loops: bool) -> crate::Result<LabelledGraph> {
    match family {
        Family::Hanoi => build_hanoi(n, include_loops),
        _ => build_sierpinski(n, family),
    }
}

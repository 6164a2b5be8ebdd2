use std::collections::HashMap;

use super::{Corners, Edge, Family, LabelledGraph, VertexKey, Word};
use crate::error::check_level;
use crate::{Error, Label, Result};

pub const MAX_HANOI_LEVEL: u32 = 12;

/// Letter left alone by each generator: `a` swaps 0/1, `b` swaps 0/2, `c` swaps 1/2.
fn fixed_letter(l: Label) -> u8 {
    match l {
        Label::A => 2,
        Label::B => 1,
        Label::C => 0,
    }
}

/// Action of generator `l`: skip leading fixed letters, swap the first other one.
/// Words made only of the fixed letter are fixed points (they carry loops).
pub fn apply_generator(l: Label, w: &Word) -> Word {
    let fixed = fixed_letter(l);
    let mut out = w.0.clone();
    if let Some(i) = out.iter().position(|&x| x != fixed) {
        out[i] = 3 - fixed - out[i];
    }
    Word(out)
}

/// All words of length `n` in lexicographic order.
pub fn hanoi_words(n: u32) -> Vec<Word> {
    let mut words = vec![Word(Vec::new())];
    for _ in 0..n {
        words = words
            .into_iter()
            .flat_map(|w| {
                (0..3u8).map(move |x| {
                    let mut v = w.0.clone();
                    v.push(x);
                    Word(v)
                })
            })
            .collect();
    }
    words
}

fn word_index(w: &Word) -> usize {
    w.0.iter().fold(0, |acc, &x| acc * 3 + x as usize)
}

/// Triangular-lattice position of a word.
///
/// The last letter picks the corner copy (0 left, 1 top, 2 right); the copy is
/// reflected about the bisectrix through that corner. With `contracted` the
/// edges joining elementary triangles shrink to points, which lands every
/// word on its vertex of the Schreier gasket graph.
pub fn schreier_embedding(w: &Word, contracted: bool) -> (i64, i64) {
    let first = |x: u8| match x {
        0 => (0, 0),
        1 => (0, 1),
        _ => (1, 0),
    };
    let (mut x, mut y) = first(w.0[0]);
    for (k, &letter) in w.0.iter().enumerate().skip(1) {
        // piece currently spans levels 1..=k
        let side: i64 = if contracted { 1 << (k - 1) } else { (1 << k) - 1 };
        let shift: i64 = if contracted { side } else { side + 1 };
        let (rx, ry) = match letter {
            0 => (y, x),
            1 => (side - x - y, y),
            _ => (x, side - x - y),
        };
        (x, y) = match letter {
            0 => (rx, ry),
            1 => (rx, ry + shift),
            _ => (rx + shift, ry),
        };
    }
    (x, y)
}

pub fn build_hanoi(n: u32, include_loops: bool) -> Result<LabelledGraph> {
    check_level(n)?;
    if n > MAX_HANOI_LEVEL {
        return Err(Error::Capability(format!("Hanoi graphs are built up to level {MAX_HANOI_LEVEL}")));
    }
    let words = hanoi_words(n);
    let mut edges = Vec::new();
    for (i, w) in words.iter().enumerate() {
        for l in Label::ALL {
            let j = word_index(&apply_generator(l, w));
            if j > i || (j == i && include_loops) {
                edges.push(Edge { u: i, v: j, label: l });
            }
        }
    }
    let corner = |x: u8| word_index(&Word(vec![x; n as usize]));
    let lattice = words.iter().map(|w| schreier_embedding(w, false)).collect();
    let mut g = LabelledGraph {
        family: Family::Hanoi,
        level: n,
        corners: Corners { top: corner(1), left: corner(0), right: corner(2) },
        vertices: words.into_iter().map(VertexKey::Word).collect(),
        edges,
        lattice,
    };
    g.canonicalize_edges();
    Ok(g)
}

/// Contracts the edges between elementary triangles `{0u, 1u, 2u}` of the
/// Hanoi graph. Returns the lattice point of every class and the surviving
/// (triangle) edges as point pairs.
pub(super) fn contract_hanoi(n: u32) -> Result<Vec<((i64, i64), (i64, i64), Label)>> {
    let g = build_hanoi(n, false)?;
    let words: Vec<&Word> = g
        .vertices
        .iter()
        .map(|k| match k {
            VertexKey::Word(w) => w,
            VertexKey::Lattice { .. } => unreachable!(),
        })
        .collect();
    let mut parent: Vec<usize> = (0..words.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let same_triangle = |e: &Edge| words[e.u].0[1..] == words[e.v].0[1..];
    for e in g.edges.iter().filter(|e| !same_triangle(e)) {
        let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
        parent[a] = b;
    }
    let mut class_point: HashMap<usize, (i64, i64)> = HashMap::new();
    for (i, w) in words.iter().enumerate() {
        let r = find(&mut parent, i);
        let p = schreier_embedding(w, true);
        if let Some(prev) = class_point.insert(r, p) {
            if prev != p {
                return Err(Error::PatternMismatch(format!("contraction class of {w} is not a single lattice point")));
            }
        }
    }
    let mut seen = HashMap::new();
    for (r, p) in &class_point {
        if let Some(other) = seen.insert(*p, *r) {
            if other != *r {
                return Err(Error::PatternMismatch(format!("two contraction classes share lattice point {p:?}")));
            }
        }
    }
    Ok(g.edges
        .iter()
        .filter(|e| same_triangle(e))
        .map(|e| (schreier_embedding(words[e.u], true), schreier_embedding(words[e.v], true), e.label))
        .collect())
}

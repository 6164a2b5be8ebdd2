use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::schur::{SchurMapVariant, SchurState, Transcription};
use super::{tree_gf_cofactor, RationalMatrix};
use crate::algebra::{Scalar, WeightTriple};
use crate::error::check_level;
use crate::graph::build_hanoi;
use crate::{Error, Label, Result};

/// Largest level accepted by the decimation pipeline.
pub const SCHUR_LEVEL_CAP: u32 = 10;

fn place(dst: &mut RationalMatrix, src: &RationalMatrix, r0: usize, c0: usize) {
    for i in 0..src.dim() {
        for j in 0..src.dim() {
            let v = src.get(i, j);
            if !v.is_zero() {
                dst.set(r0 + i, c0 + j, v.clone());
            }
        }
    }
}

fn scaled_identity(dim: usize, x: &BigRational) -> RationalMatrix {
    let mut m = RationalMatrix::zeros(dim);
    for i in 0..dim {
        m.set(i, i, x.clone());
    }
    m
}

/// Weighted action matrix of generator `l` on words of length `n`, built
/// from the block recursion (not from the word action).
pub fn generator_matrix(l: Label, n: u32, w: &WeightTriple) -> RationalMatrix {
    assert!(n >= 1);
    let x = w.get(l);
    // blocks that swap, and the block that recurses
    let (swap, fixed) = match l {
        Label::A => ((0, 1), 2),
        Label::B => ((0, 2), 1),
        Label::C => ((1, 2), 0),
    };
    let m = 3usize.pow(n - 1);
    let mut out = RationalMatrix::zeros(3 * m);
    let inner = if n == 1 { scaled_identity(1, x) } else { generator_matrix(l, n - 1, w) };
    let id = scaled_identity(m, x);
    place(&mut out, &id, swap.0 * m, swap.1 * m);
    place(&mut out, &id, swap.1 * m, swap.0 * m);
    place(&mut out, &inner, fixed * m, fixed * m);
    out
}

/// Masked level-`k` matrix with the state entries in place of couplings and
/// diagonals:
///
/// ```text
/// [ x7~I - c,  -x4 I0,    -x5 I0   ]
/// [ -x4 I0,    x8 I - b,  -x6 I    ]
/// [ -x5 I0,    -x6 I,     x9 I - a ]
/// ```
///
/// with `a, b, c` the level `k-1` generator matrices in `x1, x2, x3`, `I0` the
/// identity minus its first diagonal unit, and `x7~I` equal to `x7 I` except
/// for a first diagonal entry of `x1 + x2 + x3`.
pub fn lambda_matrix(k: u32, s: &SchurState) -> RationalMatrix {
    assert!(k >= 2, "lambda_matrix needs k >= 2");
    let w = s.weights();
    let m = 3usize.pow(k - 1);
    let gen = |l| generator_matrix(l, k - 1, &w);
    let mut out = RationalMatrix::zeros(3 * m);
    let diag = [(0, 7, Label::C), (1, 8, Label::B), (2, 9, Label::A)];
    for (blk, xi, l) in diag {
        let g = gen(l);
        for i in 0..m {
            for j in 0..m {
                let mut v = -g.get(i, j).clone();
                if i == j {
                    v += if blk == 0 && i == 0 { w.sum() } else { s.x(xi).clone() };
                }
                out.set(blk * m + i, blk * m + j, v);
            }
        }
    }
    let couplings = [((0, 1), 4, true), ((0, 2), 5, true), ((1, 2), 6, false)];
    for ((bi, bj), xi, masked) in couplings {
        let start = usize::from(masked);
        let v = -s.x(xi).clone();
        for i in start..m {
            out.set(bi * m + i, bj * m + i, v.clone());
            out.set(bj * m + i, bi * m + i, v.clone());
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct SchurOutcome {
    #[serde(serialize_with = "ser_q")]
    pub value: BigRational,
    /// `D` along the orbit `s0, P(s0), ...`, as exact fractions.
    #[serde(serialize_with = "ser_qs")]
    pub d_orbit: Vec<BigRational>,
    /// Set when level 1 or 2 was handed to the direct cofactor.
    pub delegated: bool,
}

fn ser_q<Se: serde::Serializer>(v: &BigRational, s: Se) -> std::result::Result<Se::Ok, Se::Error> {
    s.serialize_str(&v.to_string())
}

fn ser_qs<Se: serde::Serializer>(v: &[BigRational], s: Se) -> std::result::Result<Se::Ok, Se::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

/// `T_n` by repeated decimation with the default (corrected) map.
pub fn hanoi_tn_schur(n: u32, w: &WeightTriple) -> Result<SchurOutcome> {
    hanoi_tn_schur_with(&SchurMapVariant::Corrected.transcription(), n, w)
}

/// `T_n = prod_{k=0}^{n-3} D(s_k)^(3^(n-k-2)) * det lambda(2, s_{n-2}) / (a+b)`
/// with `s_0` the initial state and `s_{k+1} = P(s_k)`.
pub fn hanoi_tn_schur_with(map: &Transcription, n: u32, w: &WeightTriple) -> Result<SchurOutcome> {
    check_level(n)?;
    if n > SCHUR_LEVEL_CAP {
        return Err(Error::Capability(format!("decimation pipeline runs up to level {SCHUR_LEVEL_CAP}")));
    }
    if n <= 2 {
        let g = build_hanoi(n, false)?;
        return Ok(SchurOutcome { value: tree_gf_cofactor(&g, w)?, d_orbit: Vec::new(), delegated: true });
    }
    let ab = w.a.clone() + &w.b;
    if ab.is_zero() {
        return Err(Error::DecimationSingular { step: 0 });
    }
    let mut s = SchurState::initial(w);
    let mut acc = BigRational::from_int(1);
    let mut orbit = Vec::new();
    for k in 0..=(n - 3) {
        let d = map.denominator(&s);
        if d.is_zero() {
            return Err(Error::DecimationSingular { step: k as usize });
        }
        acc *= d.powu(3u64.pow(n - k - 2));
        orbit.push(d);
        s = map.apply(&s).map_err(|_| Error::DecimationSingular { step: k as usize })?;
    }
    let value = acc * lambda_matrix(2, &s).determinant() / ab;
    Ok(SchurOutcome { value, d_orbit: orbit, delegated: false })
}

/// `P(s)` and `D(s)` recovered from scratch: build `lambda_matrix(3, s)`,
/// eliminate the 18 vertices not inherited by level 2, and read the entries
/// off the complement. Every entry of the complement and of the eliminated
/// block is checked against the expected pattern.
pub fn schur_map_rederived(s: &SchurState) -> Result<(SchurState, BigRational)> {
    let big = lambda_matrix(3, s);
    // word index = 9*first + 3*second + third; keep first == second
    let keep: Vec<usize> = (0..27).filter(|i| i / 9 == (i / 3) % 3).collect();
    let elim: Vec<usize> = (0..27).filter(|i| i / 9 != (i / 3) % 3).collect();

    // eliminated block is K (6x6) tensored with the 3x3 identity
    let ee = big.principal(&elim);
    let k_idx: Vec<usize> = (0..6).map(|b| 3 * b).collect();
    let k = ee.principal(&k_idx);
    for i in 0..18 {
        for j in 0..18 {
            let want = if i % 3 == j % 3 { k.get(i / 3, j / 3).clone() } else { BigRational::zero() };
            if *ee.get(i, j) != want {
                return Err(Error::PatternMismatch(format!("eliminated block entry ({i},{j})")));
            }
        }
    }
    let d = k.determinant();
    if d.is_zero() {
        return Err(Error::DecimationSingular { step: 0 });
    }

    let r = big.schur_complement(&elim, &keep)?;
    let mut out = s.0.clone();
    out[3] = -r.get(1, 4).clone();
    out[4] = -r.get(1, 7).clone();
    out[5] = -r.get(3, 6).clone();
    out[6] = r.get(1, 1).clone();
    out[7] = r.get(3, 3).clone();
    out[8] = r.get(6, 6).clone();
    let next = SchurState(out);
    if lambda_matrix(2, &next) != r {
        return Err(Error::PatternMismatch("Schur complement does not have the level-2 shape".into()));
    }
    Ok((next, d))
}

/// Coordinates (`"D"`, `"P4"`..`"P9"`) where a transcription disagrees with
/// the rederived map at `s`. Numerators are compared, so an error in `D`
/// does not smear into every `P_i`.
pub fn divergence(map: &Transcription, s: &SchurState) -> Result<Vec<String>> {
    let (next, d) = schur_map_rederived(s)?;
    let mut out = Vec::new();
    if map.denominator(s) != d {
        out.push("D".to_string());
    }
    let nums = map.numerators(s);
    for i in 0..6 {
        let base = if i < 3 { BigRational::zero() } else { s.0[i + 3].clone() };
        let true_num = (next.0[i + 3].clone() - base) * &d;
        if nums[i] != true_num {
            out.push(format!("P{}", i + 4));
        }
    }
    Ok(out)
}

/// Exponent `3^(n-k-2)` of the `k`-th denominator, as a big integer for reports.
pub fn orbit_exponent(n: u32, k: u32) -> BigInt {
    BigInt::from(3).pow(n - k - 2)
}

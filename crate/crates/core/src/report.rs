//! Serializable reports and the method dispatch shared by the CLI and the web demo.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use serde::Serialize;

use crate::algebra::{TriPoly, WeightTriple, Weights};
use crate::gf::{
    five_bundle, five_closed_at, hanoi_counts_closed, hanoi_counts_recursive, rot_bundle, rot_closed, rot_closed_at,
    rot_counts, CountsTriple, FiveModel, EVALUATED_LEVEL_CAP, SYMBOLIC_CLOSED_CAP, SYMBOLIC_LEVEL_CAP,
};
use crate::gf::{dir_closed, schreier_closed};
use crate::graph::{build, Family};
use crate::matrix_tree::{hanoi_tn_schur_with, tree_gf_cofactor, SchurMapVariant};
use crate::oracle::{enumerate_gf, ForestSpec};
use crate::stats::{default_grid, label_stat_closed, label_stat_gf, normality_gap_label, StatModel};
use crate::{Error, Label, Result};

/// Cofactor determinants are only attempted up to this many vertices.
pub const MAX_COFACTOR_VERTICES: usize = 130;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GfMethod {
    Recursion,
    Closed,
    Cofactor,
    Schur,
    Oracle,
}

impl GfMethod {
    pub const ALL: [GfMethod; 5] = [GfMethod::Recursion, GfMethod::Closed, GfMethod::Cofactor, GfMethod::Schur, GfMethod::Oracle];

    pub fn name(self) -> &'static str {
        match self {
            GfMethod::Recursion => "recursion",
            GfMethod::Closed => "closed",
            GfMethod::Cofactor => "cofactor",
            GfMethod::Schur => "schur",
            GfMethod::Oracle => "oracle",
        }
    }
}

impl FromStr for GfMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        GfMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown method '{s}'")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Symbolic,
    Evaluated,
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "symbolic" => Ok(Mode::Symbolic),
            "evaluated" => Ok(Mode::Evaluated),
            _ => Err(Error::Parse(format!("unknown mode '{s}'"))),
        }
    }
}

/// A tree generating function either as a number or as a polynomial.
#[derive(Clone, Debug, PartialEq)]
pub enum GfValue {
    Exact(BigRational),
    Poly(TriPoly),
}

impl fmt::Display for GfValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GfValue::Exact(q) => write!(f, "{q}"),
            GfValue::Poly(p) => write!(f, "{p}"),
        }
    }
}

fn five_model(f: Family) -> Option<FiveModel> {
    match f {
        Family::Hanoi => Some(FiveModel::Hanoi),
        Family::SierpinskiDirectional => Some(FiveModel::Directional),
        Family::SierpinskiSchreier => Some(FiveModel::Schreier),
        Family::SierpinskiRotational => None,
    }
}

fn cap(msg: String) -> Error {
    Error::Capability(msg)
}

#[derive(Clone, Debug)]
pub struct GfRequest {
    pub family: Family,
    pub level: u32,
    pub weights: WeightTriple,
    pub mode: Mode,
    pub schur_map: SchurMapVariant,
    /// Let a singular decimation fall back to the direct cofactor.
    pub allow_fallback: bool,
}

impl GfRequest {
    pub fn new(family: Family, level: u32, weights: WeightTriple) -> Self {
        GfRequest {
            family,
            level,
            weights,
            mode: Mode::Evaluated,
            schur_map: SchurMapVariant::Corrected,
            allow_fallback: true,
        }
    }
}

/// Outcome of one method, with whatever side information it produced.
#[derive(Clone, Debug, Serialize)]
pub struct MethodResult {
    pub method: GfMethod,
    /// Fraction string or canonical polynomial text; absent when skipped.
    pub value: Option<String>,
    /// Why the method did not produce a value.
    pub skipped: Option<String>,
    pub fallbacks: Vec<String>,
    #[serde(rename = "D_orbit")]
    pub d_orbit: Vec<String>,
    #[serde(skip)]
    pub raw: Option<GfValue>,
}

fn run_symbolic(req: &GfRequest, m: GfMethod) -> Result<TriPoly> {
    let n = req.level;
    let sym = Weights::<TriPoly>::symbolic();
    match m {
        GfMethod::Recursion => {
            if n > SYMBOLIC_LEVEL_CAP {
                return Err(cap(format!("symbolic recursion runs up to level {SYMBOLIC_LEVEL_CAP}")));
            }
            match five_model(req.family) {
                Some(fm) => Ok(five_bundle(fm, n, &sym)?.t),
                None => Ok(rot_bundle(n, &sym)?.t),
            }
        }
        GfMethod::Closed => {
            let degree_cap = 400;
            match req.family {
                Family::SierpinskiRotational => rot_closed(n)?.t.expand(degree_cap),
                Family::SierpinskiDirectional | Family::SierpinskiSchreier => {
                    if n > SYMBOLIC_CLOSED_CAP {
                        return Err(cap(format!("symbolic closed forms run up to level {SYMBOLIC_CLOSED_CAP}")));
                    }
                    let f = if req.family == Family::SierpinskiDirectional {
                        dir_closed(n, &sym)?
                    } else {
                        schreier_closed(n, &sym)?
                    };
                    f.t.expand(degree_cap)
                }
                Family::Hanoi => Err(cap("Hanoi has no weighted closed form".into())),
            }
        }
        GfMethod::Oracle => enumerate_gf(&build(req.family, n, false)?, ForestSpec::Tree),
        GfMethod::Cofactor | GfMethod::Schur => Err(cap(format!("{} works on rational weights only", m.name()))),
    }
}

fn run_evaluated(req: &GfRequest, m: GfMethod, out: &mut MethodResult) -> Result<BigRational> {
    let (n, w) = (req.level, &req.weights);
    if n > EVALUATED_LEVEL_CAP && m != GfMethod::Closed {
        return Err(cap(format!("evaluated bundles run up to level {EVALUATED_LEVEL_CAP}")));
    }
    match m {
        GfMethod::Recursion => match five_model(req.family) {
            Some(fm) => Ok(five_bundle(fm, n, w)?.t),
            None => Ok(rot_bundle(n, w)?.t),
        },
        GfMethod::Closed => match five_model(req.family) {
            Some(FiveModel::Hanoi) => {
                if *w != WeightTriple::ones() {
                    return Err(cap("Hanoi closed form is for unit weights only".into()));
                }
                Ok(BigRational::from_integer(hanoi_counts_closed(n)?.tau))
            }
            Some(fm) => Ok(five_closed_at(fm, n, w)?.t),
            None => Ok(rot_closed_at(n, w)?.t),
        },
        GfMethod::Cofactor => cofactor(req),
        GfMethod::Oracle => Ok(enumerate_gf(&build(req.family, n, false)?, ForestSpec::Tree)?.eval(w)),
        GfMethod::Schur => {
            if req.family != Family::Hanoi {
                return Err(cap("Schur decimation is implemented for Hanoi graphs".into()));
            }
            match hanoi_tn_schur_with(&req.schur_map.transcription(), n, w) {
                Ok(o) => {
                    if o.delegated {
                        out.fallbacks.push(format!("level {n} delegated to cofactor"));
                    }
                    out.d_orbit = o.d_orbit.iter().map(|d| d.to_string()).collect();
                    Ok(o.value)
                }
                Err(Error::DecimationSingular { step }) if req.allow_fallback => {
                    out.fallbacks.push(format!("D vanished at step {step}; used cofactor"));
                    cofactor(req)
                }
                Err(e) => Err(e),
            }
        }
    }
}

fn cofactor(req: &GfRequest) -> Result<BigRational> {
    let g = build(req.family, req.level, false)?;
    if g.num_vertices() > MAX_COFACTOR_VERTICES {
        return Err(cap(format!(
            "cofactor is attempted up to {MAX_COFACTOR_VERTICES} vertices, graph has {}",
            g.num_vertices()
        )));
    }
    tree_gf_cofactor(&g, &req.weights)
}

/// Runs a single method. Capability errors propagate.
pub fn run_method(req: &GfRequest, m: GfMethod) -> Result<MethodResult> {
    let mut out = MethodResult { method: m, value: None, skipped: None, fallbacks: vec![], d_orbit: vec![], raw: None };
    let v = match req.mode {
        Mode::Symbolic => GfValue::Poly(run_symbolic(req, m)?),
        Mode::Evaluated => GfValue::Exact(run_evaluated(req, m, &mut out)?),
    };
    out.value = Some(v.to_string());
    out.raw = Some(v);
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct GfReport {
    pub family: Family,
    pub n: u32,
    pub mode: Mode,
    pub weights: [String; 3],
    /// Method name, or `all`.
    pub method: String,
    pub value: Option<String>,
    pub fallbacks: Vec<String>,
    #[serde(rename = "D_orbit")]
    pub d_orbit: Vec<String>,
    /// Present for `all`: every method that produced a value agrees.
    pub agreement: Option<bool>,
    pub results: Vec<MethodResult>,
}

fn weights_strings(req: &GfRequest) -> [String; 3] {
    match req.mode {
        Mode::Evaluated => req.weights.to_strings(),
        Mode::Symbolic => ["a".into(), "b".into(), "c".into()],
    }
}

pub fn gf_report(req: &GfRequest, method: GfMethod) -> Result<GfReport> {
    let r = run_method(req, method)?;
    Ok(GfReport {
        family: req.family,
        n: req.level,
        mode: req.mode,
        weights: weights_strings(req),
        method: method.name().into(),
        value: r.value.clone(),
        fallbacks: r.fallbacks.clone(),
        d_orbit: r.d_orbit.clone(),
        agreement: None,
        results: vec![r],
    })
}

/// Every applicable method; those refused for capability reasons are listed as skipped.
pub fn gf_report_all(req: &GfRequest) -> Result<GfReport> {
    let mut results = Vec::new();
    for m in GfMethod::ALL {
        match run_method(req, m) {
            Ok(r) => results.push(r),
            Err(Error::Capability(why)) => results.push(MethodResult {
                method: m,
                value: None,
                skipped: Some(why),
                fallbacks: vec![],
                d_orbit: vec![],
                raw: None,
            }),
            Err(e) => return Err(e),
        }
    }
    let values: Vec<&GfValue> = results.iter().filter_map(|r| r.raw.as_ref()).collect();
    if values.is_empty() {
        return Err(cap(format!("no method applies to {} level {}", req.family, req.level)));
    }
    let agreement = values.windows(2).all(|p| p[0] == p[1]);
    Ok(GfReport {
        family: req.family,
        n: req.level,
        mode: req.mode,
        weights: weights_strings(req),
        method: "all".into(),
        value: Some(values[0].to_string()),
        fallbacks: results.iter().flat_map(|r| r.fallbacks.clone()).collect(),
        d_orbit: results.iter().flat_map(|r| r.d_orbit.clone()).collect(),
        agreement: Some(agreement),
        results,
    })
}

/// Component-by-component bundle at one level.
#[derive(Clone, Debug, Serialize)]
pub struct BundleReport {
    pub family: Family,
    pub n: u32,
    pub mode: Mode,
    pub weights: [String; 3],
    /// `(name, value)` for `T, S, Q` or `T, U, R, L, Q`.
    pub components: Vec<(String, String)>,
    /// Recursion equals closed form component-wise; absent for Hanoi.
    pub closed_agrees: Option<bool>,
}

pub fn bundle_report(req: &GfRequest) -> Result<BundleReport> {
    let n = req.level;
    let (components, closed_agrees) = match req.mode {
        Mode::Evaluated => {
            if n > EVALUATED_LEVEL_CAP {
                return Err(cap(format!("evaluated bundles run up to level {EVALUATED_LEVEL_CAP}")));
            }
            let w = &req.weights;
            match five_model(req.family) {
                Some(fm) => {
                    let b = five_bundle(fm, n, w)?;
                    let agree = match fm {
                        FiveModel::Hanoi => None,
                        _ => Some(five_closed_at(fm, n, w)? == b),
                    };
                    (b.components().iter().map(|(k, v)| (k.to_string(), v.to_string())).collect(), agree)
                }
                None => {
                    let b = rot_bundle(n, w)?;
                    let agree = rot_closed_at(n, w)? == b;
                    (b.components().iter().map(|(k, v)| (k.to_string(), v.to_string())).collect(), Some(agree))
                }
            }
        }
        Mode::Symbolic => {
            if n > SYMBOLIC_LEVEL_CAP {
                return Err(cap(format!("symbolic bundles run up to level {SYMBOLIC_LEVEL_CAP}")));
            }
            let sym = Weights::<TriPoly>::symbolic();
            match five_model(req.family) {
                Some(fm) => {
                    let b = five_bundle(fm, n, &sym)?;
                    (b.components().iter().map(|(k, v)| (k.to_string(), v.to_string())).collect(), None)
                }
                None => {
                    let b = rot_bundle(n, &sym)?;
                    let c = rot_closed(n)?;
                    let agree = c.t.expand(400)? == b.t && c.s.expand(400)? == b.s && c.q.expand(400)? == b.q;
                    (b.components().iter().map(|(k, v)| (k.to_string(), v.to_string())).collect(), Some(agree))
                }
            }
        }
    };
    Ok(BundleReport { family: req.family, n, mode: req.mode, weights: weights_strings(req), components, closed_agrees })
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossCheck {
    pub name: String,
    pub passed: bool,
}

/// Unweighted `(tau, s, q)` for Hanoi or rotational graphs.
#[derive(Clone, Debug, Serialize)]
pub struct CountsReport {
    pub family: Family,
    pub n: u32,
    #[serde(flatten)]
    pub counts: CountsTriple,
    pub method: GfMethod,
    pub cross_checks: Vec<CrossCheck>,
}

pub fn counts_report(family: Family, n: u32, method: GfMethod) -> Result<CountsReport> {
    let ones = WeightTriple::ones();
    let int = |q: &BigRational| q.to_integer();
    let (recursive, closed) = match family {
        Family::Hanoi => {
            let b = if n <= EVALUATED_LEVEL_CAP { Some(five_bundle(FiveModel::Hanoi, n, &ones)?) } else { None };
            let rec = b.map(|b| CountsTriple { tau: int(&b.t), s: int(&b.u), q: int(&b.q) });
            (rec, hanoi_counts_closed(n)?)
        }
        Family::SierpinskiRotational => {
            let rec = if n <= EVALUATED_LEVEL_CAP {
                let b = rot_bundle(n, &ones)?;
                Some(CountsTriple { tau: int(&b.t), s: int(&b.s), q: int(&b.q) })
            } else {
                None
            };
            (rec, rot_counts(n)?)
        }
        _ => return Err(cap("unweighted count formulas exist for hanoi and sierpinski-rot".into())),
    };
    let mut checks = Vec::new();
    if let Some(r) = &recursive {
        checks.push(CrossCheck { name: "weighted recursion at ones = closed".into(), passed: *r == closed });
    }
    if family == Family::Hanoi && n <= EVALUATED_LEVEL_CAP {
        let ints = hanoi_counts_recursive(n)?;
        checks.push(CrossCheck { name: "integer recursion = closed".into(), passed: ints == closed });
        if n <= 4 {
            let g = build(family, n, false)?;
            let c = tree_gf_cofactor(&g, &ones)?;
            checks.push(CrossCheck { name: "cofactor = tau".into(), passed: c == BigRational::from_integer(closed.tau.clone()) });
        }
    }
    if family == Family::SierpinskiRotational && n <= 3 {
        let g = build(family, n, false)?;
        let c = tree_gf_cofactor(&g, &ones)?;
        checks.push(CrossCheck { name: "cofactor = tau".into(), passed: c == BigRational::from_integer(closed.tau.clone()) });
    }
    let counts = match method {
        GfMethod::Closed => closed,
        GfMethod::Recursion => match recursive {
            Some(r) => r,
            None => return Err(cap(format!("recursion runs up to level {EVALUATED_LEVEL_CAP}"))),
        },
        m => return Err(cap(format!("counts are reported by recursion or closed, not {}", m.name()))),
    };
    Ok(CountsReport { family, n, counts, method, cross_checks: checks })
}

#[derive(Clone, Debug, Serialize)]
pub struct StatsReport {
    pub model: StatModel,
    pub n: u32,
    pub label: Label,
    pub mean: String,
    pub variance: String,
    /// Rotational model only.
    pub normality_gap: Option<f64>,
    /// Log-derivative values equal the closed formulas (rotational only).
    pub closed_agrees: Option<bool>,
}

pub fn stats_report(model: StatModel, n: u32, label: Label) -> Result<StatsReport> {
    let s = label_stat_gf(model, n, label)?;
    let (gap, agrees) = if model == StatModel::Rotational {
        (Some(normality_gap_label(n, label, &default_grid())?), Some(label_stat_closed(n, label) == s))
    } else {
        (None, None)
    };
    Ok(StatsReport {
        model,
        n,
        label,
        mean: s.mean.to_string(),
        variance: s.variance.to_string(),
        normality_gap: gap,
        closed_agrees: agrees,
    })
}

//! Cross-method consistency runs over a level range.

use std::ops::RangeInclusive;

use serde::Serialize;

use crate::algebra::sampling::{rng, sample_points};
use crate::algebra::WeightTriple;
use crate::graph::Family;
use crate::matrix_tree::{divergence, random_state, SchurMapVariant};
use crate::report::{run_method, GfMethod, GfRequest, GfValue, Mode};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub families: Vec<Family>,
    pub levels: RangeInclusive<u32>,
    pub trials: usize,
    pub seed: u64,
    pub schur_map: SchurMapVariant,
}

#[derive(Clone, Debug, Serialize)]
pub struct Mismatch {
    pub method: String,
    pub value: String,
    pub reference_method: String,
    pub reference_value: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub family: Family,
    pub level: Option<u32>,
    pub name: String,
    pub weights: Option<[String; 3]>,
    pub passed: bool,
    /// Methods compared (those refused for capability reasons are not listed).
    pub methods: Vec<String>,
    pub mismatches: Vec<Mismatch>,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub trials: usize,
    pub schur_map: SchurMapVariant,
    pub passed: bool,
    pub checks: Vec<Check>,
}

/// Parses `"1..4"` (inclusive) or a single level.
pub fn parse_levels(s: &str) -> Result<RangeInclusive<u32>> {
    let bad = || Error::Parse(format!("bad level range '{s}', expected e.g. 1..4"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim_start_matches('=').trim().parse().map_err(|_| bad())?),
        None => {
            let v = s.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo == 0 || lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

fn compare(req: &GfRequest, family: Family, name: String) -> Result<Check> {
    let mut got: Vec<(GfMethod, GfValue)> = Vec::new();
    for m in GfMethod::ALL {
        match run_method(req, m) {
            Ok(r) => got.push((m, r.raw.expect("value present"))),
            Err(Error::Capability(_)) => {}
            Err(e) => return Err(e),
        }
    }
    let mut mismatches = Vec::new();
    if let Some((m0, v0)) = got.first() {
        for (m, v) in &got[1..] {
            if v != v0 {
                mismatches.push(Mismatch {
                    method: m.name().into(),
                    value: v.to_string(),
                    reference_method: m0.name().into(),
                    reference_value: v0.to_string(),
                });
            }
        }
    }
    // a single surviving method verifies nothing
    let detail = (got.len() < 2).then(|| "fewer than two methods applicable".to_string());
    Ok(Check {
        family,
        level: Some(req.level),
        name,
        weights: (req.mode == Mode::Evaluated).then(|| req.weights.to_strings()),
        passed: mismatches.is_empty() && got.len() >= 2,
        methods: got.iter().map(|(m, _)| m.name().to_string()).collect(),
        mismatches,
        detail,
    })
}

/// Checks the selected decimation map against the one rederived from the
/// Schur complement at random states.
fn transcription_check(cfg: &VerifyConfig) -> Result<Check> {
    let map = cfg.schur_map.transcription();
    let mut r = rng(cfg.seed ^ 0x5c4u64);
    let mut bad = std::collections::BTreeSet::new();
    for _ in 0..cfg.trials.max(1) {
        let s = random_state(&mut r);
        bad.extend(divergence(&map, &s)?);
    }
    let bad: Vec<String> = bad.into_iter().collect();
    Ok(Check {
        family: Family::Hanoi,
        level: None,
        name: format!("decimation map '{}' = rederived Schur complement", cfg.schur_map.name()),
        weights: None,
        passed: bad.is_empty(),
        methods: vec![],
        mismatches: vec![],
        detail: (!bad.is_empty()).then(|| format!("differs in {}", bad.join(", "))),
    })
}

pub fn run_verify(cfg: &VerifyConfig) -> Result<VerifyReport> {
    let mut checks = Vec::new();
    let points = sample_points(cfg.seed, cfg.trials);
    for &family in &cfg.families {
        for n in cfg.levels.clone() {
            let mut req = GfRequest::new(family, n, WeightTriple::ones());
            req.schur_map = cfg.schur_map;
            checks.push(compare(&req, family, "tree function at (1,1,1)".into())?);
            for w in &points {
                req.weights = w.clone();
                checks.push(compare(&req, family, "tree function at random weights".into())?);
            }
            if n <= crate::gf::SYMBOLIC_LEVEL_CAP {
                req.mode = Mode::Symbolic;
                let c = compare(&req, family, "symbolic tree polynomial".into())?;
                // a lone symbolic method is not a failure, the evaluated checks cover the level
                if c.methods.len() >= 2 {
                    checks.push(c);
                }
            }
        }
        if family == Family::Hanoi {
            checks.push(transcription_check(cfg)?);
        }
    }
    Ok(VerifyReport {
        seed: cfg.seed,
        trials: cfg.trials,
        schur_map: cfg.schur_map,
        passed: checks.iter().all(|c| c.passed),
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level_ranges() {
        assert_eq!(parse_levels("1..4").unwrap(), 1..=4);
        assert_eq!(parse_levels("3").unwrap(), 3..=3);
        assert!(parse_levels("0..2").is_err());
        assert!(parse_levels("4..1").is_err());
    }

    #[test]
    fn corrupted_map_is_caught() {
        let cfg = VerifyConfig {
            families: vec![Family::Hanoi],
            levels: 1..=3,
            trials: 2,
            seed: 7,
            schur_map: SchurMapVariant::CorruptedP4,
        };
        let r = run_verify(&cfg).unwrap();
        assert!(!r.passed);
        let t = r.checks.iter().find(|c| c.level.is_none()).unwrap();
        assert_eq!(t.detail.as_deref(), Some("differs in P4"));
    }
}

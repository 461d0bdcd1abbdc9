//! Committed base decompositions, each stored with its expected report.
//!
//! Every fixture is re-verified when loaded: the report recomputed from the
//! JSON must equal the stored one exactly.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::periodic::{Decomposition, Step};
use crate::verify::{report, Mode};

/// The prevalence a fixture is known to have.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Claim {
    BiPrevalent,
    VerticallyPrevalent,
    Terminal,
}

#[derive(Debug, Clone, Copy)]
pub struct Fixture {
    pub name: &'static str,
    pub mode: Mode,
    pub claim: Claim,
    pub json: &'static str,
    pub verdict: &'static str,
}

macro_rules! fixture {
    ($name:literal, $mode:expr, $claim:expr) => {
        Fixture {
            name: $name,
            mode: $mode,
            claim: $claim,
            json: include_str!(concat!("../../../../fixtures/", $name, ".json")),
            verdict: include_str!(concat!("../../../../fixtures/", $name, ".verdict.json")),
        }
    };
}

pub const FIXTURES: [Fixture; 10] = [
    fixture!("G42_rays", Mode::DoubleRays, Claim::BiPrevalent),
    fixture!("G40_rays", Mode::DoubleRays, Claim::BiPrevalent),
    fixture!("G22_rays", Mode::DoubleRays, Claim::VerticallyPrevalent),
    fixture!("G40_circles", Mode::Circles, Claim::BiPrevalent),
    fixture!("G42_circles", Mode::Circles, Claim::BiPrevalent),
    fixture!("G41_mixed", Mode::Mixed, Claim::BiPrevalent),
    fixture!("G21_mixed", Mode::Mixed, Claim::Terminal),
    fixture!("G22_circles", Mode::Circles, Claim::Terminal),
    fixture!("G31_circles", Mode::Circles, Claim::BiPrevalent),
    fixture!("G32_mixed", Mode::Mixed, Claim::BiPrevalent),
];

pub fn fixture(name: &str) -> Result<&'static Fixture> {
    FIXTURES
        .iter()
        .find(|f| f.name == name)
        .ok_or_else(|| Error::UnknownFixture(name.to_string()))
}

fn mismatch(name: &str, detail: impl Into<String>) -> Error {
    Error::FixtureMismatch {
        name: name.to_string(),
        detail: detail.into(),
    }
}

/// Loads a fixture and checks it against its stored report and prevalence claim.
pub fn base_pattern(name: &str) -> Result<Decomposition> {
    let f = fixture(name)?;
    let d = Decomposition::from_json(f.json)?;
    let fresh = report(&d, f.mode);
    let stored: serde_json::Value = serde_json::from_str(f.verdict)?;
    if serde_json::to_value(&fresh)? != stored {
        return Err(mismatch(name, "recomputed report differs from the stored one"));
    }
    if !fresh.verdict.passed {
        return Err(mismatch(name, format!("does not verify in mode {}", f.mode)));
    }
    let prevalence_ok = match f.claim {
        Claim::BiPrevalent => fresh.prevalence.bi_prevalent,
        Claim::VerticallyPrevalent => fresh.prevalence.vertically_prevalent,
        Claim::Terminal => true,
    };
    if !prevalence_ok {
        return Err(mismatch(name, format!("prevalence claim {:?} fails", f.claim)));
    }
    Ok(d.with_provenance(vec![Step::Fixture {
        name: name.to_string(),
    }]))
}

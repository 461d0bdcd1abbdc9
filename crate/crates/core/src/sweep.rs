//! Construct-and-check runs over a range of `(k, l)`.
//!
//! Every job builds a decomposition with the planner and checks it twice: with
//! the winding classifier and with the window oracle on `N = m·p·(k+|l|)`
//! levels. Jobs share no state, so they run under any [`Exec`] strategy and
//! the rows come back in parameter order either way.

use serde::Serialize;

use crate::constructor::{decompose_with, resolve_mode, PlanOptions, Target};
use crate::error::Result;
use crate::group::GklParams;
use crate::par::Exec;
use crate::periodic::Decomposition;
use crate::verify::{verify, window_oracle, Mode, OracleVerdict, Verdict};

/// Default factor `m` in the oracle window `N = m·p·(k+|l|)`.
pub const DEFAULT_ORACLE_MULTIPLIER: i64 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepOptions {
    pub oracle_multiplier: i64,
    pub plan: PlanOptions,
    pub exec: Exec,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            oracle_multiplier: DEFAULT_ORACLE_MULTIPLIER,
            plan: PlanOptions::default(),
            exec: Exec::default(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub k: i64,
    pub l: i64,
    pub mode: Mode,
    pub period: i64,
    pub verdict: Verdict,
    pub oracle: OracleVerdict,
    #[serde(skip)]
    pub decomposition: Decomposition,
}

impl SweepRow {
    /// Construction verified and both checks agree class by class.
    pub fn ok(&self) -> bool {
        self.verdict.passed && self.oracle.agrees
    }
}

/// Normalized 4-regular parameters `0 <= l <= k <= kmax`, in lexicographic order.
pub fn normalized_params(kmax: i64) -> Vec<GklParams> {
    (1..=kmax)
        .flat_map(|k| (0..=k).map(move |l| (k, l)))
        .filter_map(|(k, l)| GklParams::new(k, l).ok())
        .filter(GklParams::is_four_regular)
        .collect()
}

/// Parameters of `normalized_params(kmax)` that admit `target`.
pub fn sweep_params(kmax: i64, target: Target) -> Vec<GklParams> {
    normalized_params(kmax)
        .into_iter()
        .filter(|g| resolve_mode(*g, target, Mode::DoubleRays).is_ok())
        .collect()
}

/// Oracle window for a decomposition: `m·p·(k+|l|)` levels each way.
pub fn oracle_levels(d: &Decomposition, multiplier: i64) -> i64 {
    let g = d.params();
    multiplier * d.period() * (g.k() + g.l().abs())
}

pub fn run_job(params: GklParams, target: Target, options: &SweepOptions) -> Result<SweepRow> {
    let mode = resolve_mode(params, target, options.plan.auto_preference)?;
    let d = decompose_with(params, target, options.plan)?;
    let verdict = verify(&d, mode);
    let oracle = window_oracle(&d, oracle_levels(&d, options.oracle_multiplier))?;
    Ok(SweepRow {
        k: params.k(),
        l: params.l(),
        mode,
        period: d.period(),
        verdict,
        oracle,
        decomposition: d,
    })
}

pub fn sweep(kmax: i64, target: Target, options: &SweepOptions) -> Vec<(GklParams, Result<SweepRow>)> {
    let params = sweep_params(kmax, target);
    options
        .exec
        .map(params, |g| (g, run_job(g, target, options)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn param_ranges() {
        let all = normalized_params(3);
        let pairs: Vec<(i64, i64)> = all.iter().map(|g| (g.k(), g.l())).collect();
        // (1,0), (1,1), (2,0) are not 4-regular.
        assert_eq!(pairs, vec![(2, 1), (2, 2), (3, 0), (3, 1), (3, 2), (3, 3)]);
        let rays = sweep_params(3, Mode::DoubleRays.into());
        assert!(rays.iter().all(|g| g.satisfies_parity()));
        assert_eq!(sweep_params(3, Target::Auto).len(), all.len());
    }

    #[test]
    fn strategies_agree() {
        let seq = SweepOptions {
            exec: Exec::Sequential,
            ..SweepOptions::default()
        };
        let a = sweep(5, Target::Auto, &seq);
        let b = sweep(5, Target::Auto, &SweepOptions::default());
        assert_eq!(a.len(), b.len());
        for ((ga, ra), (gb, rb)) in a.iter().zip(&b) {
            assert_eq!(ga, gb);
            let (ra, rb) = (ra.as_ref().unwrap(), rb.as_ref().unwrap());
            assert!(ra.ok(), "{ga}");
            assert!(ra.decomposition.same_coloring(&rb.decomposition));
        }
    }
}

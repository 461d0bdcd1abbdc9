//! Construction of decompositions: fixtures, quotient lifts, the two
//! extension steps, exhaustive search, and the planner tying them together.

pub mod extend;
pub mod fixtures;
pub mod lift;
pub mod search;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::GklParams;
use crate::iso::normalize;
use crate::lattice::Classification;
use crate::periodic::Decomposition;
use crate::verify::{verify, Mode};

pub use extend::{extend_k, extend_k_traced, extend_l, ExtensionTrace};
pub use fixtures::base_pattern;
pub use lift::{lift_base, solve_lift, LiftSpec};
pub use search::{search_decomposition, SearchOptions};

/// Requested shape: a fixed mode, or whatever condition (P) allows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Target {
    Fixed(Mode),
    Auto,
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Fixed(m) => m.fmt(f),
            Target::Auto => f.write_str("auto"),
        }
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Target::Auto),
            other => other.parse().map(Target::Fixed),
        }
    }
}

impl From<Mode> for Target {
    fn from(m: Mode) -> Self {
        Target::Fixed(m)
    }
}

/// Picks the mode for `params`, rejecting modes that contradict the parity of `k - l`.
///
/// `preference` is used by [`Target::Auto`] when condition (P) holds and must
/// be `DoubleRays` or `Circles`.
pub fn resolve_mode(params: GklParams, target: Target, preference: Mode) -> Result<Mode> {
    params.require_four_regular()?;
    let parity = params.satisfies_parity();
    let mode = match target {
        Target::Fixed(m) => m,
        Target::Auto if parity => preference,
        Target::Auto => Mode::Mixed,
    };
    if mode.needs_parity() != parity {
        return Err(Error::ParityMismatch {
            k: params.k(),
            l: params.l(),
            mode: mode.to_string(),
            cut_size: params.k() + params.l().abs(),
        });
    }
    Ok(mode)
}

/// The base decomposition for normalized `(k, l)`, before any extension.
fn base_for(k: i64, l: i64, mode: Mode) -> Result<Decomposition> {
    let g = |k, l| GklParams::new(k, l);
    match mode {
        Mode::DoubleRays => match (k, l) {
            (2, 2) => base_pattern("G22_rays"),
            (_, 0) => base_pattern("G40_rays"),
            _ if l % 2 == 1 => lift_base(g(3, 1)?, mode),
            _ => lift_base(g(4, 2)?, mode),
        },
        Mode::Circles => match (k, l) {
            (2, 2) => base_pattern("G22_circles"),
            (_, 0) => lift_base(g(4, 0)?, mode),
            _ if l % 2 == 0 => base_pattern("G42_circles"),
            _ => base_pattern("G31_circles"),
        },
        Mode::Mixed => match (k, l) {
            (2, 1) => base_pattern("G21_mixed"),
            (3, 2) => lift_base(g(3, 2)?, mode),
            (_, 0) => lift_base(g(3, 0)?, mode),
            _ if l % 2 == 1 => lift_base(g(4, 1)?, mode),
            _ => lift_base(g(5, 2)?, mode),
        },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlanOptions {
    /// Mode used by [`Target::Auto`] when condition (P) holds.
    pub auto_preference: Mode,
    /// Re-check the final result with the classifier. Turning this off is
    /// only meant for benchmarking; the extension steps still self-check.
    pub verify: bool,
}

impl Default for PlanOptions {
    fn default() -> Self {
        PlanOptions {
            auto_preference: Mode::DoubleRays,
            verify: true,
        }
    }
}

pub fn decompose(params: GklParams, target: Target) -> Result<Decomposition> {
    decompose_with(params, target, PlanOptions::default())
}

/// Builds a decomposition of `G(k,l)` of the requested shape.
///
/// Works in normalized coordinates `k >= l >= 0`: picks a base, applies
/// `extend_l` until `l` is reached and then `extend_k`, and transports the
/// result back to the caller's coordinates.
pub fn decompose_with(params: GklParams, target: Target, options: PlanOptions) -> Result<Decomposition> {
    let mode = resolve_mode(params, target, options.auto_preference)?;
    let (norm, chain) = normalize(params)?;
    let base = base_for(norm.k(), norm.l(), mode)?;
    let built = extend::extend_to(base, norm.k(), norm.l())?;
    let out = if chain.is_identity() {
        built
    } else {
        built.transport(&chain.inverse())?
    };
    if out.params() != params {
        return Err(Error::VerificationRegression(format!(
            "planner produced {} instead of {params}",
            out.params()
        )));
    }
    if !options.verify {
        return Ok(out);
    }
    let verdict = verify(&out, mode);
    if !verdict.passed {
        return Err(Error::VerificationRegression(format!(
            "planner output for {params} in mode {mode}: {} / {}",
            verdict.class1, verdict.class2
        )));
    }
    Ok(out)
}

/// [`decompose`] for the output of the group classifier.
pub fn decompose_classified(c: &Classification, target: Target) -> Result<Decomposition> {
    match c {
        Classification::SquareGrid => Err(Error::SquareGridUnsupported),
        Classification::Gkl { k, l, .. } => decompose(GklParams::new(*k, *l)?, target),
        Classification::NotFourRegularInfinite { .. } | Classification::FiniteGroup { .. } => {
            Err(Error::Malformed(format!("no G(k,l) to decompose: {c:?}")))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{prevalence, window_oracle};

    fn p(k: i64, l: i64) -> GklParams {
        GklParams::new(k, l).unwrap()
    }

    #[test]
    fn planner_examples() {
        let d = decompose(p(6, 2), Mode::DoubleRays.into()).unwrap();
        assert!(verify(&d, Mode::DoubleRays).passed);
        assert!(prevalence(&d).bi_prevalent);
        let fig = extend_k(&base_pattern("G42_rays").unwrap()).unwrap();
        assert!(d.same_coloring(&fig));

        let d = decompose(p(2, -4), Mode::Circles.into()).unwrap();
        assert_eq!(d.params(), p(2, -4));
        assert!(verify(&d, Mode::Circles).passed);

        assert!(matches!(
            decompose(p(4, 2), Mode::Mixed.into()),
            Err(Error::ParityMismatch { cut_size: 6, .. })
        ));
        assert!(matches!(
            decompose(p(2, 1), Mode::DoubleRays.into()),
            Err(Error::ParityMismatch { cut_size: 3, .. })
        ));
        assert!(matches!(decompose(p(2, 0), Target::Auto), Err(Error::NotFourRegular { .. })));
    }

    #[test]
    fn auto_mode_follows_parity() {
        let d = decompose(p(5, 3), Target::Auto).unwrap();
        assert!(verify(&d, Mode::DoubleRays).passed);
        let d = decompose_with(
            p(5, 3),
            Target::Auto,
            PlanOptions {
                auto_preference: Mode::Circles,
                ..PlanOptions::default()
            },
        )
        .unwrap();
        assert!(verify(&d, Mode::Circles).passed);
        let d = decompose(p(5, 2), Target::Auto).unwrap();
        assert!(verify(&d, Mode::Mixed).passed);
    }

    #[test]
    fn small_sweep_all_modes() {
        for k in 1..=7 {
            for l in -7..=7 {
                let g = p(k, l);
                if !g.is_four_regular() {
                    continue;
                }
                for mode in Mode::ALL {
                    if mode.needs_parity() != g.satisfies_parity() {
                        continue;
                    }
                    let d = decompose(g, mode.into()).unwrap_or_else(|e| panic!("{g} {mode}: {e}"));
                    let n = 4 * d.period() * (k + l.abs());
                    let o = window_oracle(&d, n.min(400)).unwrap();
                    assert!(o.agrees, "{g} {mode}");
                }
            }
        }
    }

    #[test]
    fn square_grid_is_rejected() {
        assert!(matches!(
            decompose_classified(&Classification::SquareGrid, Target::Auto),
            Err(Error::SquareGridUnsupported)
        ));
    }
}

//! Regenerates `fixtures/*.json` and their stored reports.
//!
//! Run with `cargo run --release --example regen_fixtures`. The output is
//! deterministic; after a change to the report format, rerun it and review the
//! diff of the `.verdict.json` files.

use hamcay::constructor::lift::{lift_base, lift_with_spec, solve_lift};
use hamcay::constructor::search::{search_decomposition, SearchOptions};
use hamcay::sweep::oracle_levels;
use hamcay::verify::{report, window_oracle, Mode};
use hamcay::{Decomposition, Dir, GklParams, PeriodicEdgeSet};

/// A period-2 pattern given by "is this edge in class 1" at `(m, n, dir)`.
fn table(k: i64, l: i64, class1: impl Fn(i64, i64, Dir) -> bool) -> Decomposition {
    let g = GklParams::new(k, l).unwrap();
    Decomposition::from_class1(PeriodicEdgeSet::from_fn(g, 2, |e| class1(e.base.m, e.base.n, e.dir)).unwrap())
}

fn main() {
    let g = |k, l| GklParams::new(k, l).unwrap();
    // Alternating columns with a shifted last column: the G(4,0) drawings.
    let alternating = |m: i64, n: i64, d: Dir| {
        let even = n % 2 == 0;
        match (m, d) {
            (3, Dir::H) => !even,
            (1, _) => !even,
            _ => even,
        }
    };
    let g22_rays = |m: i64, n: i64, d: Dir| {
        let even = n % 2 == 0;
        match (m, d) {
            (1, Dir::H) => !even,
            _ => even,
        }
    };
    // The G(4,1) drawing is the lift with H-edges at quotient positions 1..=3.
    let mut spec41 = solve_lift(g(4, 1), Mode::Mixed).unwrap();
    spec41.positions = vec![1, 2, 3];
    let bi = SearchOptions {
        require_bi_prevalent: true,
        ..SearchOptions::default()
    };
    let fixtures: Vec<(&str, Mode, Decomposition)> = vec![
        ("G42_rays", Mode::DoubleRays, lift_base(g(4, 2), Mode::DoubleRays).unwrap()),
        ("G40_rays", Mode::DoubleRays, table(4, 0, alternating)),
        ("G22_rays", Mode::DoubleRays, table(2, 2, g22_rays)),
        ("G40_circles", Mode::Circles, lift_base(g(4, 0), Mode::Circles).unwrap()),
        ("G42_circles", Mode::Circles, table(4, 2, alternating)),
        ("G41_mixed", Mode::Mixed, lift_with_spec(&spec41).unwrap()),
        ("G21_mixed", Mode::Mixed, Decomposition::hv_split(g(2, 1))),
        ("G22_circles", Mode::Circles, Decomposition::hv_split(g(2, 2))),
        ("G31_circles", Mode::Circles, search_decomposition(g(3, 1), 4, Mode::Circles, bi).unwrap().unwrap()),
        ("G32_mixed", Mode::Mixed, lift_base(g(3, 2), Mode::Mixed).unwrap()),
    ];
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    for (name, mode, d) in fixtures {
        let r = report(&d, mode);
        let o = window_oracle(&d, oracle_levels(&d, 4)).unwrap();
        assert!(r.verdict.passed && o.agrees, "{name} does not verify");
        println!(
            "{name}: period {} bi-prevalent {} vertical cuts {:?} horizontal cuts {:?}",
            d.period(),
            r.prevalence.bi_prevalent,
            r.prevalence.common_vertical_cuts,
            r.prevalence.common_horizontal_cuts
        );
        std::fs::write(dir.join(format!("{name}.json")), d.to_json()).unwrap();
        let verdict = serde_json::to_string_pretty(&r).unwrap() + "\n";
        std::fs::write(dir.join(format!("{name}.verdict.json")), verdict).unwrap();
    }
}

//! Base decompositions lifted from a Hamiltonian cycle of a finite quotient.
//!
//! Let `D = Right^{-1} Up`. The quotient of `Z^2/<(k,l)>` by `<D>` is cyclic of
//! order `q = |k+l|`, with projection `(m, n) -> (m + n) mod q`; both `Right`
//! and `Up` act as `+1`, so its Cayley graph is a `q`-cycle with doubled
//! edges. A Hamiltonian cycle `C` of it chooses, at each of the `q` positions,
//! the H-labelled or the V-labelled edge; the complementary choices form a
//! second Hamiltonian cycle. If `C` uses `a` H-edges and `b` V-edges, its
//! generator sum `(a, b)` lies in `<D>`, say `(a, b) = D^t`; the preimage of `C`
//! in `G(k,l)` is then `|t|` disjoint double-rays (finite cycles if `t = 0`).
//! So `|t| = 1` gives a Hamiltonian double-ray and `|t| = 2` a Hamiltonian
//! circle. `(a, b) = D^t` means `(a + t, b - t)` is a multiple of `(k, l)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Dir, GklParams};
use crate::periodic::{Color, Decomposition, Step};
use crate::verify::{verify, Mode};

/// Edge counts of one colour class on the quotient cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassCount {
    pub horizontal: i64,
    pub vertical: i64,
    /// The exponent `t` with `(horizontal, vertical) = D^t`.
    pub target: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LiftSpec {
    pub k: i64,
    pub l: i64,
    /// Order of the quotient, `|k + l|`.
    pub q: i64,
    pub class1: ClassCount,
    pub class2: ClassCount,
    /// Quotient positions where class 1 takes the H-labelled edge.
    pub positions: Vec<i64>,
}

fn in_lattice(g: &GklParams, x: i64, y: i64) -> bool {
    x % g.k() == 0 && y == (x / g.k()) * g.l()
}

fn targets(mode: Mode) -> ([i64; 2], [i64; 2]) {
    match mode {
        Mode::DoubleRays => ([1, -1], [1, -1]),
        Mode::Circles => ([2, -2], [2, -2]),
        Mode::Mixed => ([1, -1], [2, -2]),
    }
}

fn find_target(g: &GklParams, a: i64, b: i64, allowed: [i64; 2]) -> Option<i64> {
    allowed.into_iter().find(|&t| in_lattice(g, a + t, b - t))
}

/// Finds the smallest admissible number of H-edges for class 1.
///
/// In mixed mode class 1 is the double-ray and class 2 the circle.
pub fn solve_lift(params: GklParams, mode: Mode) -> Result<LiftSpec> {
    params.require_four_regular()?;
    let q = (params.k() + params.l()).abs();
    if q < 3 {
        return Err(Error::QuotientTooSmall(q));
    }
    let (first, second) = targets(mode);
    for a in 0..=q {
        let b = q - a;
        let Some(t1) = find_target(&params, a, b, first) else {
            continue;
        };
        let Some(t2) = find_target(&params, b, a, second) else {
            continue;
        };
        return Ok(LiftSpec {
            k: params.k(),
            l: params.l(),
            q,
            class1: ClassCount {
                horizontal: a,
                vertical: b,
                target: t1,
            },
            class2: ClassCount {
                horizontal: b,
                vertical: a,
                target: t2,
            },
            positions: (0..a).collect(),
        });
    }
    Err(Error::NoLiftSolution {
        k: params.k(),
        l: params.l(),
        mode: mode.to_string(),
    })
}

/// Preimage of the quotient cycle described by `spec`, with period `q`.
pub fn lift_with_spec(spec: &LiftSpec) -> Result<Decomposition> {
    let g = GklParams::new(spec.k, spec.l)?;
    let q = spec.q;
    // D^k = Up^{k+l}: the colouring is invariant under D, hence under Up^q.
    assert_eq!(
        g.canonicalize(-g.k(), g.k()),
        g.canonicalize(0, g.k() + g.l()),
        "diagonal relation"
    );
    let mut horizontal = vec![false; q as usize];
    for &r in &spec.positions {
        horizontal[r as usize] = true;
    }
    let d = Decomposition::from_fn(g, q, |e| {
        let r = (e.base.m + e.base.n).rem_euclid(q) as usize;
        if horizontal[r] == (e.dir == Dir::H) {
            Color::One
        } else {
            Color::Two
        }
    })?;
    Ok(d.with_step(Step::Lift {
        k: spec.k,
        l: spec.l,
        class1: (spec.class1.horizontal, spec.class1.vertical),
        class2: (spec.class2.horizontal, spec.class2.vertical),
    }))
}

pub fn lift_base(params: GklParams, mode: Mode) -> Result<Decomposition> {
    let spec = solve_lift(params, mode)?;
    let d = lift_with_spec(&spec)?;
    let verdict = verify(&d, mode);
    if !verdict.passed {
        return Err(Error::VerificationRegression(format!(
            "lift of {params} in mode {mode} gives {} / {}",
            verdict.class1, verdict.class2
        )));
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::periodic::window_edges;

    fn p(k: i64, l: i64) -> GklParams {
        GklParams::new(k, l).unwrap()
    }

    fn counts(spec: &LiftSpec) -> ((i64, i64), (i64, i64)) {
        (
            (spec.class1.horizontal, spec.class1.vertical),
            (spec.class2.horizontal, spec.class2.vertical),
        )
    }

    #[test]
    fn lift_arithmetic() {
        assert_eq!(counts(&solve_lift(p(4, 2), Mode::DoubleRays).unwrap()), ((3, 3), (3, 3)));
        assert_eq!(counts(&solve_lift(p(4, 1), Mode::Mixed).unwrap()), ((3, 2), (2, 3)));
        assert_eq!(counts(&solve_lift(p(4, 0), Mode::Circles).unwrap()), ((2, 2), (2, 2)));
        let s32 = solve_lift(p(3, 2), Mode::Mixed).unwrap();
        assert_eq!(counts(&s32), ((4, 1), (1, 4)));
        assert_eq!(s32.class1.target.abs(), 1);
        assert_eq!(s32.class2.target.abs(), 2);
        assert_eq!(solve_lift(p(3, 0), Mode::Mixed).unwrap().class1.horizontal, 2);
        assert_eq!(solve_lift(p(3, 1), Mode::DoubleRays).unwrap().class1.horizontal, 2);
    }

    #[test]
    fn lift_errors() {
        assert!(matches!(solve_lift(p(3, 1), Mode::Circles), Err(Error::NoLiftSolution { .. })));
        assert!(matches!(solve_lift(p(4, 2), Mode::Circles), Err(Error::NoLiftSolution { .. })));
        assert!(matches!(solve_lift(p(3, -1), Mode::DoubleRays), Err(Error::QuotientTooSmall(2))));
        assert!(matches!(solve_lift(p(2, 0), Mode::DoubleRays), Err(Error::NotFourRegular { .. })));
    }

    #[test]
    fn lifts_verify_and_count() {
        for (k, l, mode) in [
            (4, 2, Mode::DoubleRays),
            (3, 1, Mode::DoubleRays),
            (4, 0, Mode::Circles),
            (4, 1, Mode::Mixed),
            (3, 2, Mode::Mixed),
            (3, 0, Mode::Mixed),
            (5, 2, Mode::Mixed),
        ] {
            let g = p(k, l);
            let spec = solve_lift(g, mode).unwrap();
            let d = lift_base(g, mode).unwrap();
            assert_eq!(d.period(), spec.q);
            let class1 = d.class_edges(Color::One);
            let h = class1.members().filter(|e| e.dir == Dir::H).count() as i64;
            let v = class1.members().filter(|e| e.dir == Dir::V).count() as i64;
            // Each column meets every quotient position once per period, so it
            // holds exactly a H-edges and b V-edges of class 1.
            assert_eq!((h, v), (spec.class1.horizontal * k, spec.class1.vertical * k), "{g}");
            for m in 0..k {
                let col_h = class1.members().filter(|e| e.base.m == m && e.dir == Dir::H).count() as i64;
                assert_eq!(col_h, spec.class1.horizontal);
            }
            assert_eq!(spec.q % d.minimize_period().period(), 0);
            if mode == Mode::Mixed {
                assert!(verify(&d, mode).class1.is_ray());
            }
        }
    }

    #[test]
    fn g42_ray_period_divides_six() {
        let d = lift_base(p(4, 2), Mode::DoubleRays).unwrap().minimize_period();
        assert!([1, 2, 3, 6].contains(&d.period()));
        assert!(window_edges(d.params(), 6).all(|e| d.color(e) == lift_base(p(4, 2), Mode::DoubleRays).unwrap().color(e)));
    }
}

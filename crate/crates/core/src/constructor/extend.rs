//! The induction steps `G(k,l) -> G(k+2,l)` and `G(k,l) -> G(k,l+2)`.
//!
//! `extend_k` inserts two new columns between column `k-1` and the wrap. The
//! wrap edge `e_n = (k-1,n)(0,n-l)` of class `i` is replaced by the walk
//! `W_n = (k-1,n)[R][U]^{h-1}[R][D]^{h-1}[R]` of class `i`, where `h = h_n` is
//! the distance to the next wrap edge of the same class. These walks are
//! edge-disjoint and cover the new columns exactly once; every other edge
//! keeps its colour. `extend_l` is `extend_k` conjugated by the transpose.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Dir, Edge, GeneratorWord, GklParams, Letter};
use crate::iso::IsomorphismChain;
use crate::periodic::{window_edges, Color, Decomposition, Step};
use crate::verify::{detect_mode, prevalence, verify};

/// The data `extend_k` reads off the wrap column.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionTrace {
    /// The column of the input used as the vertical cut.
    pub column: i64,
    /// Class of the wrap edge `e_n` (after rotating `column` to `k-1`), per residue `n`.
    pub owners: Vec<Color>,
    /// `h_n`: distance to the next wrap edge of the same class, cyclically.
    pub gaps: Vec<i64>,
}

impl ExtensionTrace {
    fn new(d: &Decomposition, column: i64) -> Self {
        let g = d.params();
        let p = d.period();
        let owners: Vec<Color> = (0..p).map(|n| d.color(Edge::new(g.k() - 1, n, Dir::H))).collect();
        let gaps = (0..p)
            .map(|n| {
                (1..=p)
                    .find(|h| owners[((n + h) % p) as usize] == owners[n as usize])
                    .expect("a wrap edge recurs after one period")
            })
            .collect();
        ExtensionTrace {
            column,
            owners,
            gaps,
        }
    }
}

/// The walk replacing `e_n` in `G(k+2, l)`.
pub fn walk_word(h: i64) -> GeneratorWord {
    let h = h as u32;
    GeneratorWord::new()
        .push(&[Letter::Right], 1)
        .push(&[Letter::Up], h - 1)
        .push(&[Letter::Right], 1)
        .push(&[Letter::Down], h - 1)
        .push(&[Letter::Right], 1)
}

fn walk_edges(g: &GklParams, start: crate::group::Vertex, word: &GeneratorWord) -> Vec<Edge> {
    let mut here = start;
    word.letters()
        .map(|letter| {
            let e = g.edge_from_step(here, letter);
            here = g.step(here, letter);
            e
        })
        .collect()
}

fn regression(msg: String) -> Error {
    Error::VerificationRegression(msg)
}

/// `extend_k` together with the trace it used.
pub fn extend_k_traced(d: &Decomposition) -> Result<(Decomposition, ExtensionTrace)> {
    let mode = detect_mode(d).ok_or(Error::NotADecomposition)?;
    let before = prevalence(d);
    let Some(&column) = before.common_vertical_cuts.last() else {
        return Err(Error::NotPrevalent(Box::new(before)));
    };
    let g = d.params();
    let (k, l, p) = (g.k(), g.l(), d.period());
    let rotated = if column == k - 1 {
        d.clone()
    } else {
        d.translate(k - 1 - column, 0)
    };
    let trace = ExtensionTrace::new(&rotated, column);

    let target = GklParams::new(k + 2, l)?;
    let mut colors: Vec<Option<Color>> = vec![None; (2 * (k + 2) * p) as usize];
    let slot = |e: Edge| (2 * (e.base.n.rem_euclid(p) * (k + 2) + e.base.m)) as usize + e.dir.index();
    for e in window_edges(target, p) {
        let inherited = match e.dir {
            Dir::H => e.base.m < k - 1,
            Dir::V => e.base.m < k,
        };
        if inherited {
            colors[slot(e)] = Some(rotated.color(e));
        }
    }
    for n in 0..p {
        let class = trace.owners[n as usize];
        let word = walk_word(trace.gaps[n as usize]);
        for e in walk_edges(&target, crate::group::Vertex::new(k - 1, n), &word) {
            let cell = &mut colors[slot(e)];
            if cell.is_some() {
                return Err(regression(format!("walk W_{n} reuses edge {e}")));
            }
            *cell = Some(class);
        }
    }
    if let Some(i) = colors.iter().position(Option::is_none) {
        return Err(regression(format!("window slot {i} left uncoloured")));
    }
    let out = Decomposition::from_fn(target, p, |e| colors[slot(e)].expect("all edges coloured"))?
        .with_provenance(rotated.provenance().to_vec())
        .with_step(Step::ExtendK { k, l, column });

    let verdict = verify(&out, mode);
    if !verdict.passed {
        return Err(regression(format!(
            "extend_k on {g} lost mode {mode}: {} / {}",
            verdict.class1, verdict.class2
        )));
    }
    let after = prevalence(&out);
    if !after.common_vertical_cuts.contains(&(k + 1)) {
        return Err(regression("new wrap column is not a common vertical cut".into()));
    }
    if before.horizontally_prevalent && !after.horizontally_prevalent {
        return Err(regression("extend_k lost horizontal prevalence".into()));
    }
    Ok((out, trace))
}

pub fn extend_k(d: &Decomposition) -> Result<Decomposition> {
    extend_k_traced(d).map(|(out, _)| out)
}

pub fn extend_l(d: &Decomposition) -> Result<Decomposition> {
    let g = d.params();
    if g.l() <= 0 {
        return Err(Error::LNotPositive);
    }
    let mode = detect_mode(d).ok_or(Error::NotADecomposition)?;
    let before = prevalence(d);
    if !before.horizontally_prevalent {
        return Err(Error::NotPrevalent(Box::new(before)));
    }
    let there = IsomorphismChain::identity(g).then_transpose()?;
    let extended = extend_k(&d.transport(&there)?)?;
    let back = IsomorphismChain::identity(extended.params()).then_transpose()?;
    let out = extended
        .transport(&back)?
        .with_provenance(d.provenance().to_vec())
        .with_step(Step::ExtendL { k: g.k(), l: g.l() });
    debug_assert_eq!(out.params(), GklParams::new(g.k(), g.l() + 2)?);

    let verdict = verify(&out, mode);
    if !verdict.passed {
        return Err(regression(format!(
            "extend_l on {g} lost mode {mode}: {} / {}",
            verdict.class1, verdict.class2
        )));
    }
    let after = prevalence(&out);
    if !after.horizontally_prevalent {
        return Err(regression("extend_l lost horizontal prevalence".into()));
    }
    if before.vertically_prevalent && !after.vertically_prevalent {
        return Err(regression("extend_l lost vertical prevalence".into()));
    }
    Ok(out)
}

/// Applies `extend_l` then `extend_k` until `d` lives on `G(k, l)`.
pub fn extend_to(mut d: Decomposition, k: i64, l: i64) -> Result<Decomposition> {
    while d.params().l() < l {
        d = extend_l(&d)?;
    }
    while d.params().k() < k {
        d = extend_k(&d)?;
    }
    if d.params() != GklParams::new(k, l)? {
        return Err(regression(format!("extensions overshot G({k},{l}): reached {}", d.params())));
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructor::lift::lift_base;
    use crate::verify::Mode;

    fn p(k: i64, l: i64) -> GklParams {
        GklParams::new(k, l).unwrap()
    }

    #[test]
    fn degenerate_walk_is_three_h_edges() {
        let g = p(6, 2);
        let edges = walk_edges(&g, crate::group::Vertex::new(3, 5), &walk_word(1));
        assert_eq!(
            edges,
            vec![Edge::new(3, 5, Dir::H), Edge::new(4, 5, Dir::H), Edge::new(5, 5, Dir::H)]
        );
        assert_eq!(g.endpoints(edges[2]).1, crate::group::Vertex::new(0, 3));
    }

    #[test]
    fn g42_rays_to_g62() {
        let d = lift_base(p(4, 2), Mode::DoubleRays).unwrap();
        let (out, trace) = extend_k_traced(&d).unwrap();
        assert_eq!(out.params(), p(6, 2));
        assert!(verify(&out, Mode::DoubleRays).passed);
        assert!(prevalence(&out).bi_prevalent);
        // Gaps of one class sum to the period.
        for c in [Color::One, Color::Two] {
            let sum: i64 = trace
                .owners
                .iter()
                .zip(&trace.gaps)
                .filter(|(o, _)| **o == c)
                .map(|(_, h)| h)
                .sum();
            assert_eq!(sum, d.period());
        }
    }

    #[test]
    fn restriction_law() {
        let d = lift_base(p(5, 2), Mode::Mixed).unwrap();
        let (out, trace) = extend_k_traced(&d).unwrap();
        let k = d.params().k();
        let rotated = d.translate(k - 1 - trace.column, 0);
        for e in window_edges(d.params(), d.period()) {
            let kept = match e.dir {
                Dir::H => e.base.m < k - 1,
                Dir::V => true,
            };
            if kept {
                assert_eq!(out.color(e), rotated.color(e), "{e}");
            }
        }
    }

    #[test]
    fn extension_errors() {
        let split = Decomposition::hv_split(p(2, 1));
        assert!(matches!(extend_k(&split), Err(Error::NotPrevalent(_))));
        let d40 = lift_base(p(4, 0), Mode::Circles).unwrap();
        assert!(matches!(extend_l(&d40), Err(Error::LNotPositive)));
        let junk = Decomposition::hv_split(p(3, 1));
        assert!(matches!(extend_k(&junk), Err(Error::NotADecomposition)));
    }

    #[test]
    fn extend_l_examples() {
        let d = lift_base(p(3, 1), Mode::DoubleRays).unwrap();
        let out = extend_l(&d).unwrap();
        assert_eq!(out.params(), p(3, 3));
        assert!(verify(&out, Mode::DoubleRays).passed);
    }
}

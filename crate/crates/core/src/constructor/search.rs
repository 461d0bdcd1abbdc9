//! Bounded exhaustive search over degree-feasible periodic colourings.

use bitvec::prelude::*;

use crate::error::{Error, Result};
use crate::group::{Edge, GklParams, Vertex};
use crate::par::Exec;
use crate::periodic::{window_edges, Decomposition, PeriodicEdgeSet, Step};
use crate::verify::{prevalence, verify, Mode};

/// Default bound on the number of window edges `2 k p` per candidate.
pub const DEFAULT_SEARCH_BUDGET: i64 = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub require_bi_prevalent: bool,
    pub budget: i64,
    pub exec: Exec,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            require_bi_prevalent: false,
            budget: DEFAULT_SEARCH_BUDGET,
            exec: Exec::default(),
        }
    }
}

/// All colourings of the `k x p` window in which every vertex meets each
/// colour exactly twice, in lexicographic order with colour 1 first.
pub fn degree_feasible_colorings(params: GklParams, period: i64) -> Vec<BitVec> {
    let k = params.k();
    let slot = |v: Vertex| (v.n.rem_euclid(period) * k + v.m) as usize;
    let ends: Vec<(usize, usize)> = window_edges(params, period)
        .map(|e: Edge| {
            let (a, b) = params.endpoints(e);
            (slot(a), slot(b))
        })
        .collect();
    let vertices = (k * period) as usize;
    let mut counts = vec![[0u8; 2]; vertices];
    let mut current = bitvec![0; ends.len()];
    let mut found = Vec::new();

    fn go(
        i: usize,
        ends: &[(usize, usize)],
        counts: &mut [[u8; 2]],
        current: &mut BitVec,
        found: &mut Vec<BitVec>,
    ) {
        if i == ends.len() {
            found.push(current.clone());
            return;
        }
        let (a, b) = ends[i];
        for colour in 0..2 {
            counts[a][colour] += 1;
            counts[b][colour] += 1;
            if counts[a][colour] <= 2 && counts[b][colour] <= 2 {
                current.set(i, colour == 0);
                go(i + 1, ends, counts, current, found);
            }
            counts[a][colour] -= 1;
            counts[b][colour] -= 1;
        }
    }
    go(0, &ends, &mut counts, &mut current, &mut found);
    found
}

/// The first decomposition (by period, then lexicographically) passing
/// `verify(mode)`, or `None` if there is none with period at most `max_period`.
pub fn search_decomposition(
    params: GklParams,
    max_period: i64,
    mode: Mode,
    options: SearchOptions,
) -> Result<Option<Decomposition>> {
    params.require_four_regular()?;
    let size = 2 * params.k() * max_period;
    if size > options.budget {
        return Err(Error::BudgetExceeded(format!(
            "search over {size} window edges exceeds the budget of {}",
            options.budget
        )));
    }
    for period in 1..=max_period {
        let candidates = degree_feasible_colorings(params, period);
        let accept = |bits: &BitVec| {
            let set = PeriodicEdgeSet::from_fn(params, period, |e| {
                bits[2 * (e.base.n * params.k() + e.base.m) as usize + e.dir.index()]
            })
            .expect("period >= 1");
            let d = Decomposition::from_class1(set);
            verify(&d, mode).passed && (!options.require_bi_prevalent || prevalence(&d).bi_prevalent)
        };
        if let Some(bits) = options.exec.find_first(candidates, accept) {
            let set = PeriodicEdgeSet::from_fn(params, period, |e| {
                bits[2 * (e.base.n * params.k() + e.base.m) as usize + e.dir.index()]
            })?;
            return Ok(Some(Decomposition::from_class1(set).with_step(Step::Search { period })));
        }
    }
    Ok(None)
}

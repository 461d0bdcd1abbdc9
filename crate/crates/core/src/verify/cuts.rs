//! Exhaustive count of small two-sided finite cuts in a truncation of `G(k,l)`.
//!
//! A two-sided finite cut is `δ(S)` for a vertex set `S` that contains every
//! vertex far below and no vertex far above. In the truncation to levels
//! `-N..=N` the bottom `max(1,|l|)` levels are forced into `S` and the top ones
//! out of it; since every edge leaving the truncation starts in one of these
//! bands, `δ(S)` computed inside the truncation is exactly the cut in `G`.
//!
//! The enumeration is a transfer-matrix sweep over vertices in row-major order.
//! A state records the side of the last `W` vertices (the longest backward
//! edge) and the number of cut edges so far; states above the edge bound are
//! dropped, so the count is exact for every size up to the bound.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{GklParams, Vertex};
use crate::periodic::incident_edges;

/// Largest edge bound accepted (covers `k + |l|` for all `k, |l| <= 5`).
pub const MAX_CUT_EDGES: usize = 10;
/// Largest truncation half-height accepted.
pub const MAX_CUT_WINDOW: i64 = 30;
/// Default cap on the number of live sweep states.
pub const DEFAULT_STATE_BUDGET: usize = 4_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutCensus {
    pub max_edges: usize,
    pub levels: i64,
    /// Number of vertex sets `S` (with the band constraints) whose cut has the given size.
    pub counts: BTreeMap<usize, u128>,
}

impl CutCensus {
    /// The distinct cut sizes found, ascending.
    pub fn sizes(&self) -> Vec<usize> {
        self.counts.keys().copied().collect()
    }

    pub fn contains(&self, size: usize) -> bool {
        self.counts.contains_key(&size)
    }

    pub fn has_odd(&self) -> bool {
        self.counts.keys().any(|s| s % 2 == 1)
    }
}

pub fn enumerate_small_cuts(params: GklParams, max_edges: usize, levels: i64) -> Result<CutCensus> {
    enumerate_small_cuts_with_budget(params, max_edges, levels, DEFAULT_STATE_BUDGET)
}

pub fn enumerate_small_cuts_with_budget(
    params: GklParams,
    max_edges: usize,
    levels: i64,
    state_budget: usize,
) -> Result<CutCensus> {
    params.require_four_regular()?;
    if max_edges > MAX_CUT_EDGES {
        return Err(Error::BudgetExceeded(format!(
            "cut size bound {max_edges} exceeds {MAX_CUT_EDGES}"
        )));
    }
    if levels > MAX_CUT_WINDOW {
        return Err(Error::BudgetExceeded(format!(
            "window {levels} exceeds {MAX_CUT_WINDOW} levels"
        )));
    }
    let k = params.k();
    let band = params.l().abs().max(1);
    if levels < band {
        return Err(Error::WindowTooSmall { levels, min: band });
    }

    let index = |v: Vertex| (v.n.abs() <= levels).then(|| ((v.n + levels) * k + v.m) as usize);
    let total = ((2 * levels + 1) * k) as usize;
    let mut back: Vec<Vec<usize>> = Vec::with_capacity(total);
    let mut forced: Vec<Option<bool>> = Vec::with_capacity(total);
    for i in 0..total {
        let v = Vertex::new(i as i64 % k, i as i64 / k - levels);
        let mut offsets = Vec::new();
        for e in incident_edges(&params, v) {
            let (a, b) = params.endpoints(e);
            let u = if a == v { b } else { a };
            if let Some(j) = index(u) {
                if j < i {
                    offsets.push(i - j);
                }
            }
        }
        back.push(offsets);
        forced.push(if v.n < -levels + band {
            Some(true)
        } else if v.n > levels - band {
            Some(false)
        } else {
            None
        });
    }
    let width = back.iter().flatten().copied().max().unwrap_or(1);
    if width > 63 {
        return Err(Error::BudgetExceeded(format!(
            "sweep width {width} exceeds 63 vertices"
        )));
    }
    let keep: u64 = (1u64 << width) - 1;

    let mut states: HashMap<(u64, usize), u128> = HashMap::new();
    states.insert((0, 0), 1);
    for i in 0..total {
        let mut next: HashMap<(u64, usize), u128> = HashMap::with_capacity(states.len());
        let sides: &[bool] = match forced[i] {
            Some(true) => &[true],
            Some(false) => &[false],
            None => &[false, true],
        };
        for (&(mask, cut), &count) in &states {
            for &side in sides {
                let crossing = back[i]
                    .iter()
                    .filter(|&&off| ((mask >> (off - 1)) & 1 == 1) != side)
                    .count();
                let cut = cut + crossing;
                if cut > max_edges {
                    continue;
                }
                let mask = ((mask << 1) | side as u64) & keep;
                *next.entry((mask, cut)).or_insert(0) += count;
            }
        }
        if next.len() > state_budget {
            return Err(Error::BudgetExceeded(format!(
                "{} sweep states exceed the budget of {state_budget}",
                next.len()
            )));
        }
        states = next;
    }

    let mut counts = BTreeMap::new();
    for ((_, cut), count) in states {
        *counts.entry(cut).or_insert(0u128) += count;
    }
    Ok(CutCensus {
        max_edges,
        levels,
        counts,
    })
}

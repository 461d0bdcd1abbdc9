use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Edge, Vertex};
use crate::periodic::{incident_edges, window_vertices, PeriodicEdgeSet};

/// One closed trajectory of a class in the `Up^p`-quotient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientCycle {
    /// Number of quotient edges (self-loops and parallel edges count individually).
    pub length: usize,
    /// Window vertices in traversal order, starting with the first one reached.
    pub covered: Vec<Vertex>,
    /// Net vertical displacement of one traversal, in units of the period.
    pub winding: i64,
    /// Window index of each traversed edge and the direction (+1 base to head).
    #[serde(skip)]
    pub traversal: Vec<(usize, i8)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    pub period: i64,
    pub window_vertices: usize,
    pub covered_vertices: usize,
    pub cycles: Vec<QuotientCycle>,
}

impl ComponentReport {
    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    pub fn total_abs_winding(&self) -> i64 {
        self.cycles.iter().map(|c| c.winding.abs()).sum()
    }

    pub(crate) fn first_uncovered(&self, s: &PeriodicEdgeSet) -> Option<Vertex> {
        if self.covered_vertices == self.window_vertices {
            return None;
        }
        window_vertices(s.params(), s.period()).find(|&v| s.degree(v) == 0)
    }
}

/// Traces the closed trajectories of a class in the quotient by `Up^p`.
///
/// The walk runs in `G(k,l)` itself, leaving each vertex by the member edge it
/// did not arrive on, and stops when it reaches a translate of its start
/// vertex by a multiple of `p`. Window vertices with no member edge are
/// skipped (and left uncovered); any vertex of degree other than 0 or 2 is an
/// error.
pub fn quotient_components(s: &PeriodicEdgeSet) -> Result<ComponentReport> {
    let g = s.params();
    let p = s.period();
    let k = g.k();
    let slot = |v: Vertex| (v.n.rem_euclid(p) * k + v.m) as usize;
    let total = (k * p) as usize;

    for v in window_vertices(g, p) {
        let d = s.degree(v);
        if d != 0 && d != 2 {
            return Err(Error::NotTwoRegular(v));
        }
    }

    let mut seen = vec![false; total];
    let mut cycles = Vec::new();
    let mut covered_vertices = 0;
    for start in window_vertices(g, p) {
        if seen[slot(start)] || s.degree(start) == 0 {
            continue;
        }
        let mut covered = vec![start];
        let mut traversal = Vec::new();
        seen[slot(start)] = true;
        let mut here = start;
        let mut arrived: Option<Edge> = None;
        loop {
            let next = incident_edges(&g, here)
                .into_iter()
                .find(|&e| s.contains(e) && Some(e) != arrived)
                .expect("degree 2 leaves an unused member edge");
            let (base, head) = g.endpoints(next);
            let (sign, there) = if base == here { (1, head) } else { (-1, base) };
            traversal.push((s.index_of(next), sign));
            arrived = Some(next);
            here = there;
            if here.m == start.m && (here.n - start.n).rem_euclid(p) == 0 {
                break;
            }
            assert!(traversal.len() <= total, "trajectory failed to close");
            seen[slot(here)] = true;
            covered.push(g.canonicalize(here.m, here.n.rem_euclid(p)));
        }
        covered_vertices += covered.len();
        cycles.push(QuotientCycle {
            length: traversal.len(),
            covered,
            winding: (here.n - start.n) / p,
            traversal,
        });
    }
    Ok(ComponentReport {
        period: p,
        window_vertices: total,
        covered_vertices,
        cycles,
    })
}

//! Independent check of class verdicts on a finite truncation of `G(k,l)`.
//!
//! The truncation keeps the levels `-N..=N` of every column. A Hamiltonian
//! double-ray restricted to it is, away from the boundary, a single path
//! running from the bottom band to the top band; a Hamiltonian circle is two
//! such paths. Pieces that enter and leave through the same band are boundary
//! effects and are ignored, as long as they stay clear of the central levels.

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{GklParams, Vertex};
use crate::periodic::{incident_edges, Color, Decomposition, PeriodicEdgeSet};
use crate::verify::{classify_class, ClassVerdict, FailureReason, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleClass {
    pub components: usize,
    pub through_paths: usize,
    pub verdict: ClassVerdict,
    /// The verdict of the winding classifier, for comparison.
    pub classifier: ClassVerdict,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleVerdict {
    pub levels: i64,
    pub class1: OracleClass,
    pub class2: OracleClass,
    pub agrees: bool,
}

struct Truncation {
    g: GklParams,
    n: i64,
}

impl Truncation {
    fn index(&self, v: Vertex) -> Option<usize> {
        (v.n.abs() <= self.n).then(|| ((v.n + self.n) * self.g.k() + v.m) as usize)
    }

    fn vertex(&self, i: usize) -> Vertex {
        let i = i as i64;
        Vertex::new(i % self.g.k(), i / self.g.k() - self.n)
    }

    fn len(&self) -> usize {
        ((2 * self.n + 1) * self.g.k()) as usize
    }
}

fn other(reason: FailureReason, witness: Witness) -> ClassVerdict {
    ClassVerdict::Other { reason, witness }
}

fn oracle_class(s: &PeriodicEdgeSet, levels: i64) -> OracleClass {
    let g = s.params();
    let p = s.period();
    let t = Truncation { g, n: levels };
    let band = g.k() + g.l().abs();
    let total = t.len();

    let mut uf = UnionFind::<usize>::new(total);
    let mut degree = vec![0usize; total];
    let mut edge_count = vec![0usize; total];
    for i in 0..total {
        let v = t.vertex(i);
        for e in incident_edges(&g, v) {
            if !s.contains(e) || e.base != v {
                continue;
            }
            let (_, head) = g.endpoints(e);
            if let Some(j) = t.index(head) {
                degree[i] += 1;
                degree[j] += 1;
                uf.union(i, j);
                edge_count[i] += 1;
            }
        }
    }
    let labels = uf.into_labeling();
    let mut comp_vertices = vec![0usize; total];
    let mut comp_edges = vec![0usize; total];
    let mut comp_ends: Vec<Vec<usize>> = vec![Vec::new(); total];
    for i in 0..total {
        comp_vertices[labels[i]] += 1;
        comp_edges[labels[i]] += edge_count[i];
        for _ in degree[i]..2 {
            comp_ends[labels[i]].push(i);
        }
    }
    let roots: Vec<usize> = (0..total).filter(|&i| labels[i] == i).collect();
    let classifier = classify_class(s);
    let finish = |verdict: ClassVerdict, through_paths: usize| OracleClass {
        components: roots.len(),
        through_paths,
        agrees: verdict.same_kind(&classifier),
        verdict,
        classifier: classifier.clone(),
    };

    if let Some(i) = (0..total).find(|&i| degree[i] > 2) {
        let witness = Witness::Vertex {
            vertex: t.vertex(i),
            degree: degree[i],
        };
        return finish(other(FailureReason::NotTwoRegular, witness), 0);
    }
    if let Some(&r) = roots.iter().find(|&&r| comp_edges[r] == comp_vertices[r]) {
        let witness = Witness::Cycle {
            start: t.vertex(r),
            length: comp_edges[r],
            winding: 0,
        };
        return finish(other(FailureReason::FiniteCycle, witness), 0);
    }
    let depth = |i: usize| {
        let n = t.vertex(i).n;
        (n + levels).min(levels - n)
    };
    if let Some(i) = (0..total).find(|&i| degree[i] < 2 && depth(i) >= band) {
        let v = t.vertex(i);
        let witness = Witness::Vertex {
            vertex: v,
            degree: degree[i],
        };
        let reason = if degree[i] == 0 {
            FailureReason::NotSpanning
        } else {
            FailureReason::NotTwoRegular
        };
        return finish(other(reason, witness), 0);
    }

    // Every remaining component is a path with both ends near the boundary.
    let bottom = |i: usize| t.vertex(i).n < -levels + band;
    let mut through = vec![false; total];
    for &r in &roots {
        let ends = &comp_ends[r];
        through[r] = ends.len() == 2 && bottom(ends[0]) != bottom(ends[1]);
    }
    let through_paths = roots.iter().filter(|&&r| through[r]).count();
    let core_missed = (0..total).find(|&i| t.vertex(i).n.abs() <= p && !through[labels[i]]);
    if let Some(i) = core_missed {
        let ends = &comp_ends[labels[i]];
        let witness = Witness::Path {
            ends: (t.vertex(ends[0]), t.vertex(ends[ends.len() - 1])),
        };
        return finish(other(FailureReason::NotSpanning, witness), through_paths);
    }
    let verdict = match through_paths {
        1 => ClassVerdict::HamiltonianDoubleRay,
        2 => ClassVerdict::HamiltonianCircle,
        count => other(
            FailureReason::TooManyComponents,
            Witness::ThroughPaths { count },
        ),
    };
    finish(verdict, through_paths)
}

/// Classifies both classes on the truncation to levels `-levels..=levels` and
/// compares with [`classify_class`].
pub fn window_oracle(d: &Decomposition, levels: i64) -> Result<OracleVerdict> {
    let min = 3 * d.period();
    if levels < min {
        return Err(Error::WindowTooSmall { levels, min });
    }
    if let Err(v) = d.check_degrees() {
        return Err(Error::NotTwoRegular(v.vertex));
    }
    let class1 = oracle_class(&d.class_edges(Color::One), levels);
    let class2 = oracle_class(&d.class_edges(Color::Two), levels);
    Ok(OracleVerdict {
        levels,
        agrees: class1.agrees && class2.agrees,
        class1,
        class2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Dir;

    fn p(k: i64, l: i64) -> GklParams {
        GklParams::new(k, l).unwrap()
    }

    #[test]
    fn g21_split() {
        let v = window_oracle(&Decomposition::hv_split(p(2, 1)), 20).unwrap();
        assert!(v.agrees);
        assert_eq!(v.class1.through_paths, 1);
        assert_eq!(v.class2.through_paths, 2);
        assert_eq!(v.class1.verdict, ClassVerdict::HamiltonianDoubleRay);
        assert_eq!(v.class2.verdict, ClassVerdict::HamiltonianCircle);
    }

    #[test]
    fn g22_split() {
        let v = window_oracle(&Decomposition::hv_split(p(2, 2)), 20).unwrap();
        assert!(v.agrees);
        assert_eq!(v.class1.through_paths, 2);
        assert_eq!(v.class2.through_paths, 2);
    }

    #[test]
    fn too_many_components_agree() {
        let v = window_oracle(&Decomposition::hv_split(p(3, 1)), 12).unwrap();
        assert!(v.agrees);
        assert_eq!(v.class2.through_paths, 3);
    }

    #[test]
    fn finite_cycles_agree() {
        // G(4,0) tiled by unit squares: both classes are unions of 4-cycles.
        let g = p(4, 0);
        let d = Decomposition::from_class1(
            PeriodicEdgeSet::from_fn(g, 2, |e| match e.dir {
                Dir::H => e.base.m % 2 == 0,
                Dir::V => e.base.n % 2 == 0,
            })
            .unwrap(),
        );
        assert!(d.check_degrees().is_ok());
        let v = window_oracle(&d, 12).unwrap();
        assert!(v.agrees, "{v:?}");
        assert!(matches!(
            v.class2.verdict,
            ClassVerdict::Other {
                reason: FailureReason::FiniteCycle,
                ..
            }
        ));
    }

    #[test]
    fn rejects_bad_input() {
        let d = Decomposition::hv_split(p(2, 1)).with_period(4).unwrap();
        assert!(matches!(window_oracle(&d, 11), Err(Error::WindowTooSmall { .. })));
        let bad = Decomposition::from_class1(PeriodicEdgeSet::from_fn(p(3, 1), 1, |e| e.base.m == 0).unwrap());
        assert!(matches!(window_oracle(&bad, 20), Err(Error::NotTwoRegular(_))));
    }
}

//! Window criteria for prevalence.
//!
//! A vertical cut is the orbit of an H-edge under `Up`, i.e. all H-edges of one
//! column. A horizontal cut is the orbit of a V-edge under `Right`; it meets
//! every column, at the levels `n - t l`, so modulo the period it consists of
//! the V-edges whose level is congruent to `n` modulo `gcd(p, |l|)` (for
//! `l = 0` this is a single level modulo `p`).
//!
//! For an `Up^p`-invariant set a single member edge in a cut has member
//! translates arbitrarily far along the cut in both directions, so a class
//! prevails in a cut iff it owns at least one window edge of that cut.

use num_integer::Integer;
use serde::Serialize;

use crate::group::Dir;
use crate::periodic::{Color, Decomposition};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassPrevalence {
    /// Columns where the class owns an H-edge (vertical cuts it prevails in).
    pub vertical_cuts: Vec<i64>,
    /// Horizontal cut indices (level residues mod `cut_modulus`) it prevails in.
    pub horizontal_cuts: Vec<i64>,
    /// Whether every column contains at least one V-edge of the class.
    pub every_column_has_v: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrevalenceReport {
    /// Number of distinct horizontal cuts modulo the period: `gcd(p, |l|)`.
    pub cut_modulus: i64,
    pub class1: ClassPrevalence,
    pub class2: ClassPrevalence,
    /// Columns usable by `extend_k`: both classes own an H-edge there.
    pub common_vertical_cuts: Vec<i64>,
    /// Horizontal cuts in which both classes prevail (usable by `extend_l`).
    pub common_horizontal_cuts: Vec<i64>,
    pub vertically_prevalent: bool,
    pub horizontally_prevalent: bool,
    pub bi_prevalent: bool,
}

impl PrevalenceReport {
    pub fn class(&self, c: Color) -> &ClassPrevalence {
        match c {
            Color::One => &self.class1,
            Color::Two => &self.class2,
        }
    }
}

fn class_prevalence(d: &Decomposition, c: Color, modulus: i64) -> ClassPrevalence {
    let s = d.class_edges(c);
    let k = d.params().k();
    let mut vertical = vec![false; k as usize];
    let mut horizontal = vec![false; modulus as usize];
    let mut v_columns = vec![false; k as usize];
    for e in s.members() {
        match e.dir {
            Dir::H => vertical[e.base.m as usize] = true,
            Dir::V => {
                horizontal[e.base.n.mod_floor(&modulus) as usize] = true;
                v_columns[e.base.m as usize] = true;
            }
        }
    }
    let indices = |flags: &[bool]| {
        flags
            .iter()
            .enumerate()
            .filter_map(|(i, &f)| f.then_some(i as i64))
            .collect::<Vec<_>>()
    };
    ClassPrevalence {
        vertical_cuts: indices(&vertical),
        horizontal_cuts: indices(&horizontal),
        every_column_has_v: v_columns.iter().all(|&f| f),
    }
}

fn common(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().copied().filter(|x| b.contains(x)).collect()
}

pub fn prevalence(d: &Decomposition) -> PrevalenceReport {
    let modulus = d.period().gcd(&d.params().l().abs());
    let class1 = class_prevalence(d, Color::One, modulus);
    let class2 = class_prevalence(d, Color::Two, modulus);
    let common_vertical_cuts = common(&class1.vertical_cuts, &class2.vertical_cuts);
    let common_horizontal_cuts = common(&class1.horizontal_cuts, &class2.horizontal_cuts);
    let vertically_prevalent = !common_vertical_cuts.is_empty();
    let horizontally_prevalent = !common_horizontal_cuts.is_empty();
    PrevalenceReport {
        cut_modulus: modulus,
        class1,
        class2,
        common_vertical_cuts,
        common_horizontal_cuts,
        vertically_prevalent,
        horizontally_prevalent,
        bi_prevalent: vertically_prevalent && horizontally_prevalent,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GklParams;
    use crate::periodic::PeriodicEdgeSet;

    #[test]
    fn g21_split_is_not_vertically_prevalent() {
        let r = prevalence(&Decomposition::hv_split(GklParams::new(2, 1).unwrap()));
        assert!(!r.vertically_prevalent);
        assert_eq!(r.class1.vertical_cuts, vec![0, 1]);
        assert!(r.class2.vertical_cuts.is_empty());
        assert!(!r.bi_prevalent);
    }

    #[test]
    fn cut_modulus_and_translation() {
        let g = GklParams::new(4, 2).unwrap();
        let d = Decomposition::from_class1(
            PeriodicEdgeSet::from_fn(g, 6, |e| ((e.base.m + e.base.n).rem_euclid(6) < 3) == (e.dir == Dir::H))
                .unwrap(),
        );
        let r = prevalence(&d);
        assert_eq!(r.cut_modulus, 2);
        let t = prevalence(&d.translate(1, 0));
        // Translation by Right rotates the columns.
        let rotated: Vec<i64> = {
            let mut v: Vec<i64> = r.common_vertical_cuts.iter().map(|m| (m + 1) % 4).collect();
            v.sort();
            v
        };
        assert_eq!(t.common_vertical_cuts, rotated);
    }
}

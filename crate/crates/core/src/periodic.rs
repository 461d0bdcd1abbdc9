//! Vertically periodic edge sets and edge 2-colourings of `G(k,l)`.
//!
//! A set invariant under `Up^p` is stored as a dense bit table over the
//! window `{(m, n, dir) : 0 <= m < k, 0 <= n < p}`. The window index of
//! `(m, n, dir)` is `2 (n k + m) + dir`, which is also the canonical
//! `(n, m, dir)` sort order used by the JSON format.

use std::fmt;
use std::fmt::Write as _;

use bitvec::prelude::*;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Dir, Edge, GklParams, Letter, Vertex};
use crate::iso::IsomorphismChain;

#[derive(Clone, PartialEq, Eq)]
pub struct PeriodicEdgeSet {
    params: GklParams,
    period: i64,
    bits: BitVec,
}

impl fmt::Debug for PeriodicEdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PeriodicEdgeSet({}, p={}, ", self.params, self.period)?;
        for b in self.bits.iter() {
            f.write_char(if *b { '1' } else { '0' })?;
        }
        f.write_char(')')
    }
}

fn window_len(params: &GklParams, period: i64) -> usize {
    (2 * params.k() * period) as usize
}

fn check_period(period: i64) -> Result<()> {
    if period < 1 {
        return Err(Error::Malformed(format!("period must be >= 1, got {period}")));
    }
    Ok(())
}

/// The four edges incident to `v`, in the order `+Right, +Up, -Right, -Up`.
pub fn incident_edges(params: &GklParams, v: Vertex) -> [Edge; 4] {
    Letter::ALL.map(|s| params.edge_from_step(v, s))
}

/// All `2 k p` window edges in canonical order.
pub fn window_edges(params: GklParams, period: i64) -> impl Iterator<Item = Edge> {
    let k = params.k();
    (0..period).flat_map(move |n| {
        (0..k).flat_map(move |m| [Edge::new(m, n, Dir::H), Edge::new(m, n, Dir::V)])
    })
}

pub fn window_vertices(params: GklParams, period: i64) -> impl Iterator<Item = Vertex> {
    let k = params.k();
    (0..period).flat_map(move |n| (0..k).map(move |m| Vertex::new(m, n)))
}

impl PeriodicEdgeSet {
    pub fn empty(params: GklParams, period: i64) -> Result<Self> {
        check_period(period)?;
        Ok(PeriodicEdgeSet {
            params,
            period,
            bits: bitvec![0; window_len(&params, period)],
        })
    }

    pub fn from_fn(params: GklParams, period: i64, mut member: impl FnMut(Edge) -> bool) -> Result<Self> {
        let mut set = Self::empty(params, period)?;
        for (i, e) in window_edges(params, period).enumerate() {
            set.bits.set(i, member(e));
        }
        Ok(set)
    }

    pub fn all_of_dir(params: GklParams, dir: Dir) -> Self {
        Self::from_fn(params, 1, |e| e.dir == dir).expect("period 1")
    }

    pub fn params(&self) -> GklParams {
        self.params
    }

    pub fn period(&self) -> i64 {
        self.period
    }

    pub fn bits(&self) -> &BitSlice {
        &self.bits
    }

    pub fn index_of(&self, e: Edge) -> usize {
        let n = e.base.n.mod_floor(&self.period);
        (2 * (n * self.params.k() + e.base.m)) as usize + e.dir.index()
    }

    /// Membership of any edge of `G(k,l)`, given in canonical form.
    pub fn contains(&self, e: Edge) -> bool {
        self.bits[self.index_of(e)]
    }

    pub fn set(&mut self, e: Edge, member: bool) {
        let i = self.index_of(e);
        self.bits.set(i, member);
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.not_any()
    }

    pub fn members(&self) -> impl Iterator<Item = Edge> + '_ {
        window_edges(self.params, self.period)
            .zip(self.bits.iter().by_vals())
            .filter_map(|(e, b)| b.then_some(e))
    }

    pub fn degree(&self, v: Vertex) -> usize {
        incident_edges(&self.params, v)
            .iter()
            .filter(|e| self.contains(**e))
            .count()
    }

    pub fn complement(&self) -> Self {
        PeriodicEdgeSet {
            params: self.params,
            period: self.period,
            bits: !self.bits.clone(),
        }
    }

    /// Image under the automorphism `v -> v + (dm, dn)`.
    pub fn translate(&self, dm: i64, dn: i64) -> Self {
        let g = self.params;
        Self::from_fn(g, self.period, |e| {
            self.contains(Edge {
                base: g.add(e.base, -dm, -dn),
                dir: e.dir,
            })
        })
        .expect("period unchanged")
    }

    /// Same infinite set, stored over a window of `period` levels.
    pub fn with_period(&self, period: i64) -> Result<Self> {
        Self::from_fn(self.params, period, |e| self.contains(e))
    }

    fn repeats_with(&self, d: i64) -> bool {
        let row = 2 * self.params.k() as usize;
        let d_len = row * d as usize;
        (d_len..self.bits.len()).all(|i| self.bits[i] == self.bits[i % d_len])
    }

    pub fn minimize_period(&self) -> Self {
        let p = self.period;
        let best = (1..=p)
            .filter(|d| p % d == 0)
            .find(|&d| self.repeats_with(d))
            .unwrap_or(p);
        if best == p {
            return self.clone();
        }
        PeriodicEdgeSet {
            params: self.params,
            period: best,
            bits: self.bits[..window_len(&self.params, best)].to_bitvec(),
        }
    }

    /// Equal as infinite edge sets (periods may differ).
    pub fn same_set(&self, other: &Self) -> bool {
        if self.params != other.params {
            return false;
        }
        let p = self.period.lcm(&other.period);
        window_edges(self.params, p).all(|e| self.contains(e) == other.contains(e))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub enum Color {
    One,
    Two,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::One => Color::Two,
            Color::Two => Color::One,
        }
    }

    pub fn number(self) -> u8 {
        match self {
            Color::One => 1,
            Color::Two => 2,
        }
    }
}

impl From<Color> for u8 {
    fn from(c: Color) -> u8 {
        c.number()
    }
}

impl TryFrom<u8> for Color {
    type Error = String;

    fn try_from(v: u8) -> std::result::Result<Self, String> {
        match v {
            1 => Ok(Color::One),
            2 => Ok(Color::Two),
            other => Err(format!("color must be 1 or 2, got {other}")),
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

/// One step of the construction history of a decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum Step {
    Fixture { name: String },
    Lift { k: i64, l: i64, class1: (i64, i64), class2: (i64, i64) },
    ExtendK { k: i64, l: i64, column: i64 },
    ExtendL { k: i64, l: i64 },
    Transport { chain: String },
    Translate { dm: i64, dn: i64 },
    Search { period: i64 },
    Loaded,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Fixture { name } => write!(f, "fixture {name}"),
            Step::Lift { k, l, class1, class2 } => {
                write!(f, "lift G({k},{l}) with (H,V) counts {class1:?}/{class2:?}")
            }
            Step::ExtendK { k, l, column } => {
                write!(f, "extend_k G({k},{l}) -> G({},{l}) at column {column}", k + 2)
            }
            Step::ExtendL { k, l } => write!(f, "extend_l G({k},{l}) -> G({k},{})", l + 2),
            Step::Transport { chain } => write!(f, "transport {chain}"),
            Step::Translate { dm, dn } => write!(f, "translate by ({dm},{dn})"),
            Step::Search { period } => write!(f, "exhaustive search, period {period}"),
            Step::Loaded => write!(f, "loaded from JSON"),
        }
    }
}

/// A 2-colouring of all edges of `G(k,l)`, periodic under `Up^p`.
///
/// Colour 1 is stored as a [`PeriodicEdgeSet`]; colour 2 is its complement, so
/// the partition property holds by construction. The degree condition (two
/// edges of each colour at every vertex) is checked by [`Decomposition::check_degrees`].
#[derive(Debug, Clone)]
pub struct Decomposition {
    class1: PeriodicEdgeSet,
    provenance: Vec<Step>,
}

/// A vertex where the degree condition fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeViolation {
    pub vertex: Vertex,
    pub color1_degree: usize,
}

impl Decomposition {
    pub fn from_fn(params: GklParams, period: i64, mut color: impl FnMut(Edge) -> Color) -> Result<Self> {
        Ok(Decomposition {
            class1: PeriodicEdgeSet::from_fn(params, period, |e| color(e) == Color::One)?,
            provenance: Vec::new(),
        })
    }

    pub fn from_class1(class1: PeriodicEdgeSet) -> Self {
        Decomposition {
            class1,
            provenance: Vec::new(),
        }
    }

    /// Horizontal edges in one class, vertical edges in the other.
    pub fn hv_split(params: GklParams) -> Self {
        Self::from_class1(PeriodicEdgeSet::all_of_dir(params, Dir::H))
    }

    pub fn params(&self) -> GklParams {
        self.class1.params
    }

    pub fn period(&self) -> i64 {
        self.class1.period
    }

    pub fn provenance(&self) -> &[Step] {
        &self.provenance
    }

    pub fn with_step(mut self, step: Step) -> Self {
        self.provenance.push(step);
        self
    }

    pub fn with_provenance(mut self, steps: Vec<Step>) -> Self {
        self.provenance = steps;
        self
    }

    pub fn color(&self, e: Edge) -> Color {
        if self.class1.contains(e) {
            Color::One
        } else {
            Color::Two
        }
    }

    pub fn class_edges(&self, c: Color) -> PeriodicEdgeSet {
        match c {
            Color::One => self.class1.clone(),
            Color::Two => self.class1.complement(),
        }
    }

    pub fn check_degrees(&self) -> std::result::Result<(), DegreeViolation> {
        for v in window_vertices(self.params(), self.period()) {
            let d = self.class1.degree(v);
            if d != 2 {
                return Err(DegreeViolation {
                    vertex: v,
                    color1_degree: d,
                });
            }
        }
        Ok(())
    }

    pub fn translate(&self, dm: i64, dn: i64) -> Self {
        Decomposition {
            class1: self.class1.translate(dm, dn),
            provenance: self.provenance.clone(),
        }
        .with_step(Step::Translate { dm, dn })
    }

    pub fn swap_colors(&self) -> Self {
        Decomposition {
            class1: self.class1.complement(),
            provenance: self.provenance.clone(),
        }
    }

    pub fn minimize_period(&self) -> Self {
        Decomposition {
            class1: self.class1.minimize_period(),
            provenance: self.provenance.clone(),
        }
    }

    pub fn with_period(&self, period: i64) -> Result<Self> {
        Ok(Decomposition {
            class1: self.class1.with_period(period)?,
            provenance: self.provenance.clone(),
        })
    }

    /// Same colouring of `G(k,l)`, ignoring period and provenance.
    pub fn same_coloring(&self, other: &Self) -> bool {
        self.class1.same_set(&other.class1)
    }

    /// Carries the colouring along `chain` and minimizes the resulting period.
    pub fn transport(&self, chain: &IsomorphismChain) -> Result<Self> {
        let g = self.params();
        if chain.source() != g {
            return Err(Error::ChainMismatch {
                chain_k: chain.source().k(),
                chain_l: chain.source().l(),
                k: g.k(),
                l: g.l(),
            });
        }
        let mut current = self.class1.clone();
        for map in chain.maps() {
            let back = map.inverse();
            let period = map.image_period(current.period);
            let src = &current;
            current = PeriodicEdgeSet::from_fn(map.target, period, |e| src.contains(back.map_edge(e)))?
                .minimize_period();
        }
        Ok(Decomposition {
            class1: current,
            provenance: self.provenance.clone(),
        }
        .with_step(Step::Transport {
            chain: chain.to_string(),
        }))
    }

    /// Canonical JSON: fixed key order, one edge object per line, trailing newline.
    pub fn to_json(&self) -> String {
        let g = self.params();
        let mut out = String::new();
        let _ = writeln!(out, "{{");
        let _ = writeln!(out, "  \"k\": {},", g.k());
        let _ = writeln!(out, "  \"l\": {},", g.l());
        let _ = writeln!(out, "  \"period\": {},", self.period());
        let _ = writeln!(out, "  \"edges\": [");
        let total = window_len(&g, self.period());
        for (i, e) in window_edges(g, self.period()).enumerate() {
            let sep = if i + 1 == total { "" } else { "," };
            let _ = writeln!(
                out,
                "    {{\"m\": {}, \"n\": {}, \"dir\": \"{:?}\", \"color\": {}}}{sep}",
                e.base.m,
                e.base.n,
                e.dir,
                self.color(e)
            );
        }
        let _ = writeln!(out, "  ]");
        let _ = writeln!(out, "}}");
        out
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: DecompositionFile = serde_json::from_str(text)?;
        file.into_decomposition()
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct EdgeEntry {
    m: i64,
    n: i64,
    dir: Dir,
    color: Color,
}

#[derive(Debug, Serialize, Deserialize)]
struct DecompositionFile {
    k: i64,
    l: i64,
    period: i64,
    edges: Vec<EdgeEntry>,
}

impl DecompositionFile {
    fn into_decomposition(self) -> Result<Decomposition> {
        let g = GklParams::new(self.k, self.l)?;
        check_period(self.period)?;
        let expected = window_len(&g, self.period);
        if self.edges.len() != expected {
            return Err(Error::Malformed(format!(
                "expected {expected} edges, found {}",
                self.edges.len()
            )));
        }
        let mut class1 = PeriodicEdgeSet::empty(g, self.period)?;
        let mut seen = bitvec![0; expected];
        for entry in &self.edges {
            if !(0..g.k()).contains(&entry.m) || !(0..self.period).contains(&entry.n) {
                return Err(Error::Malformed(format!(
                    "edge ({},{}) lies outside the {}x{} window",
                    entry.m,
                    entry.n,
                    g.k(),
                    self.period
                )));
            }
            let e = Edge::new(entry.m, entry.n, entry.dir);
            let i = class1.index_of(e);
            if seen[i] {
                return Err(Error::Malformed(format!("edge {e} listed twice")));
            }
            seen.set(i, true);
            class1.set(e, entry.color == Color::One);
        }
        Ok(Decomposition::from_class1(class1).with_step(Step::Loaded))
    }
}

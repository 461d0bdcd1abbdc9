//! Group and graph arithmetic for `G(k,l)`, the Cayley graph of `Z^2 / <(k,l)>`
//! with generators `Right = (1,0)` and `Up = (0,1)`.
//!
//! Every group element is stored as its canonical coset representative
//! `(m, n)` with `0 <= m < k`. Moving right off column `k-1` lands on
//! column `0`, `l` levels lower.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GklParams {
    k: i64,
    l: i64,
}

/// Canonical representative `Right^m Up^n` of a group element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Vertex {
    pub m: i64,
    pub n: i64,
}

impl Vertex {
    pub const fn new(m: i64, n: i64) -> Self {
        Vertex { m, n }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.n)
    }
}

/// Edge orientation: `H` joins `v` and `v+Right`, `V` joins `v` and `v+Up`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Dir {
    H,
    V,
}

impl Dir {
    pub fn index(self) -> usize {
        match self {
            Dir::H => 0,
            Dir::V => 1,
        }
    }
}

/// An undirected edge in canonical form: the base is the tail under `+Right` / `+Up`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub base: Vertex,
    pub dir: Dir,
}

impl Edge {
    pub const fn new(m: i64, n: i64, dir: Dir) -> Self {
        Edge {
            base: Vertex { m, n },
            dir,
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{:?})", self.base.m, self.base.n, self.dir)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    Right,
    Up,
    Left,
    Down,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::Right, Letter::Up, Letter::Left, Letter::Down];

    pub fn delta(self) -> (i64, i64) {
        match self {
            Letter::Right => (1, 0),
            Letter::Up => (0, 1),
            Letter::Left => (-1, 0),
            Letter::Down => (0, -1),
        }
    }

    pub fn inverse(self) -> Letter {
        match self {
            Letter::Right => Letter::Left,
            Letter::Left => Letter::Right,
            Letter::Up => Letter::Down,
            Letter::Down => Letter::Up,
        }
    }

    pub fn from_delta(d: (i64, i64)) -> Option<Letter> {
        Letter::ALL.into_iter().find(|l| l.delta() == d)
    }

    fn from_char(c: char) -> Option<Letter> {
        match c {
            'R' | 'r' | '→' => Some(Letter::Right),
            'U' | 'u' | '↑' => Some(Letter::Up),
            'L' | 'l' | '←' => Some(Letter::Left),
            'D' | 'd' | '↓' => Some(Letter::Down),
            _ => None,
        }
    }

    fn as_char(self) -> char {
        match self {
            Letter::Right => 'R',
            Letter::Up => 'U',
            Letter::Left => 'L',
            Letter::Down => 'D',
        }
    }
}

/// One bracketed group of a walk word, repeated `exp` times.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordPart {
    pub letters: Vec<Letter>,
    pub exp: u32,
}

/// A walk specification such as `[R][UR]^2[UU]`.
///
/// The textual form accepts `R U L D` or the arrows `→ ↑ ← ↓`; a bare
/// letter outside brackets is its own group.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GeneratorWord {
    pub parts: Vec<WordPart>,
}

impl GeneratorWord {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(mut self, letters: &[Letter], exp: u32) -> Self {
        self.parts.push(WordPart {
            letters: letters.to_vec(),
            exp,
        });
        self
    }

    /// The flat letter sequence with all exponents expanded.
    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.parts.iter().flat_map(|part| {
            (0..part.exp).flat_map(move |_| part.letters.iter().copied())
        })
    }

    pub fn len(&self) -> usize {
        self.parts
            .iter()
            .map(|p| p.letters.len() * p.exp as usize)
            .sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for part in &self.parts {
            f.write_str("[")?;
            for l in &part.letters {
                write!(f, "{}", l.as_char())?;
            }
            f.write_str("]")?;
            if part.exp != 1 {
                write!(f, "^{}", part.exp)?;
            }
        }
        Ok(())
    }
}

impl FromStr for GeneratorWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Malformed(format!("walk word `{s}`: {msg}"));
        let mut word = GeneratorWord::new();
        let mut chars = s.chars().filter(|c| !c.is_whitespace()).peekable();
        while let Some(c) = chars.next() {
            let letters = if c == '[' {
                let mut group = Vec::new();
                loop {
                    match chars.next() {
                        Some(']') => break,
                        Some(ch) => group.push(Letter::from_char(ch).ok_or_else(|| bad("unknown letter"))?),
                        None => return Err(bad("unclosed bracket")),
                    }
                }
                group
            } else {
                vec![Letter::from_char(c).ok_or_else(|| bad("unknown letter"))?]
            };
            let mut exp = 1u32;
            if chars.peek() == Some(&'^') {
                chars.next();
                let mut digits = String::new();
                while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    digits.push(*d);
                    chars.next();
                }
                exp = digits.parse().map_err(|_| bad("bad exponent"))?;
            } else if let Some(sup) = chars.peek().and_then(|c| superscript_digit(*c)) {
                exp = sup;
                chars.next();
            }
            word.parts.push(WordPart { letters, exp });
        }
        Ok(word)
    }
}

fn superscript_digit(c: char) -> Option<u32> {
    "⁰¹²³⁴⁵⁶⁷⁸⁹".chars().position(|s| s == c).map(|p| p as u32)
}

impl GklParams {
    pub fn new(k: i64, l: i64) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidParams { k, l });
        }
        Ok(GklParams { k, l })
    }

    /// Like [`GklParams::new`] but also rejects graphs that are not 4-regular.
    pub fn four_regular(k: i64, l: i64) -> Result<Self> {
        let params = Self::new(k, l)?;
        params.require_four_regular()?;
        Ok(params)
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn l(&self) -> i64 {
        self.l
    }

    pub fn canonicalize(&self, m: i64, n: i64) -> Vertex {
        let (q, r) = m.div_mod_floor(&self.k);
        Vertex { m: r, n: n - self.l * q }
    }

    pub fn add(&self, v: Vertex, dm: i64, dn: i64) -> Vertex {
        self.canonicalize(v.m + dm, v.n + dn)
    }

    pub fn step(&self, v: Vertex, letter: Letter) -> Vertex {
        let (dm, dn) = letter.delta();
        self.add(v, dm, dn)
    }

    /// The edge traversed when leaving `v` along `letter`.
    pub fn edge_from_step(&self, v: Vertex, letter: Letter) -> Edge {
        match letter {
            Letter::Right => Edge { base: v, dir: Dir::H },
            Letter::Up => Edge { base: v, dir: Dir::V },
            Letter::Left => Edge {
                base: self.step(v, Letter::Left),
                dir: Dir::H,
            },
            Letter::Down => Edge {
                base: self.step(v, Letter::Down),
                dir: Dir::V,
            },
        }
    }

    pub fn endpoints(&self, e: Edge) -> (Vertex, Vertex) {
        let head = match e.dir {
            Dir::H => self.step(e.base, Letter::Right),
            Dir::V => self.step(e.base, Letter::Up),
        };
        (e.base, head)
    }

    /// Net change of level when an edge is traversed from base to head.
    pub fn edge_rise(&self, e: Edge) -> i64 {
        match e.dir {
            Dir::V => 1,
            Dir::H if e.base.m == self.k - 1 => -self.l,
            Dir::H => 0,
        }
    }

    pub fn is_wrap(&self, e: Edge) -> bool {
        e.dir == Dir::H && e.base.m == self.k - 1
    }

    pub fn is_four_regular(&self) -> bool {
        let origin = self.canonicalize(0, 0);
        let images: Vec<Vertex> = Letter::ALL
            .iter()
            .map(|&s| self.step(origin, s))
            .collect();
        images.iter().all(|&v| v != origin)
            && (0..4).all(|i| (i + 1..4).all(|j| images[i] != images[j]))
    }

    pub fn require_four_regular(&self) -> Result<()> {
        if self.is_four_regular() {
            Ok(())
        } else {
            Err(Error::NotFourRegular {
                k: self.k,
                l: self.l,
            })
        }
    }

    /// Condition (P): every finite cut is even, which holds iff `k - l` is even.
    pub fn satisfies_parity(&self) -> bool {
        (self.k - self.l).is_even()
    }

    /// The neighbours of `v` in the order `+Right, +Up, -Right, -Up`.
    pub fn neighbors(&self, v: Vertex) -> Result<[Vertex; 4]> {
        self.require_four_regular()?;
        Ok(Letter::ALL.map(|s| self.step(v, s)))
    }

    /// Vertex sequence of the walk that starts at `start` and follows `word`.
    pub fn apply_word(&self, start: Vertex, word: &GeneratorWord) -> Vec<Vertex> {
        let mut walk = Vec::with_capacity(word.len() + 1);
        let mut cur = self.canonicalize(start.m, start.n);
        walk.push(cur);
        for letter in word.letters() {
            cur = self.step(cur, letter);
            walk.push(cur);
        }
        walk
    }

    /// Edges with exactly one endpoint below level `c`: the `k` vertical edges
    /// leaving level `c-1` plus the `|l|` wrap edges that straddle level `c`.
    pub fn level_cut(&self, c: i64) -> Result<Vec<Edge>> {
        self.require_four_regular()?;
        let mut cut: Vec<Edge> = (0..self.k).map(|m| Edge::new(m, c - 1, Dir::V)).collect();
        let wraps = if self.l > 0 {
            c..c + self.l
        } else {
            c + self.l..c
        };
        cut.extend(wraps.map(|n| Edge::new(self.k - 1, n, Dir::H)));
        Ok(cut)
    }
}

impl fmt::Display for GklParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{})", self.k, self.l)
    }
}

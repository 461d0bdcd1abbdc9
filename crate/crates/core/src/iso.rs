//! Coordinate changes between isomorphic `G(k,l)`.
//!
//! Each primitive is a group isomorphism (or a translation) that sends the
//! generator set `{±Right, ±Up}` onto the generator set of the target, so it is
//! also a graph isomorphism.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Edge, GklParams, Letter, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MapKind {
    Identity,
    /// `(x, y) -> (x, -y)`: `G(k,l) -> G(k,-l)`.
    Flip,
    /// `(x, y) -> (y, x)`: `G(k,l) -> G(l,k)` for `l > 0`, `G(-l,-k)` for `l < 0`.
    Transpose,
    /// `v -> v + (dm, dn)` within one graph.
    Translate { dm: i64, dn: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Primitive {
    pub kind: MapKind,
    pub source: GklParams,
    pub target: GklParams,
}

impl Primitive {
    pub fn identity(params: GklParams) -> Self {
        Primitive {
            kind: MapKind::Identity,
            source: params,
            target: params,
        }
    }

    pub fn flip(source: GklParams) -> Self {
        let target = GklParams::new(source.k(), -source.l()).expect("k unchanged");
        Primitive {
            kind: MapKind::Flip,
            source,
            target,
        }
    }

    pub fn transpose(source: GklParams) -> Result<Self> {
        let (k, l) = (source.k(), source.l());
        let target = match l.signum() {
            1 => GklParams::new(l, k)?,
            -1 => GklParams::new(-l, -k)?,
            _ => return Err(Error::DegenerateTranspose),
        };
        Ok(Primitive {
            kind: MapKind::Transpose,
            source,
            target,
        })
    }

    pub fn translate(params: GklParams, dm: i64, dn: i64) -> Self {
        Primitive {
            kind: MapKind::Translate { dm, dn },
            source: params,
            target: params,
        }
    }

    /// Image of a generator letter under the linear part of the map.
    pub fn map_letter(&self, letter: Letter) -> Letter {
        match self.kind {
            MapKind::Identity | MapKind::Translate { .. } => letter,
            MapKind::Flip => match letter {
                Letter::Up => Letter::Down,
                Letter::Down => Letter::Up,
                other => other,
            },
            MapKind::Transpose => match letter {
                Letter::Right => Letter::Up,
                Letter::Up => Letter::Right,
                Letter::Left => Letter::Down,
                Letter::Down => Letter::Left,
            },
        }
    }

    pub fn map_vertex(&self, v: Vertex) -> Vertex {
        let t = &self.target;
        match self.kind {
            MapKind::Identity => v,
            MapKind::Flip => t.canonicalize(v.m, -v.n),
            MapKind::Transpose => t.canonicalize(v.n, v.m),
            MapKind::Translate { dm, dn } => t.add(v, dm, dn),
        }
    }

    pub fn map_edge(&self, e: Edge) -> Edge {
        let letter = match e.dir {
            crate::group::Dir::H => Letter::Right,
            crate::group::Dir::V => Letter::Up,
        };
        self.target
            .edge_from_step(self.map_vertex(e.base), self.map_letter(letter))
    }

    pub fn inverse(&self) -> Primitive {
        let kind = match self.kind {
            MapKind::Translate { dm, dn } => MapKind::Translate { dm: -dm, dn: -dn },
            other => other,
        };
        Primitive {
            kind,
            source: self.target,
            target: self.source,
        }
    }

    /// A vertical period for the image of an `Up^p`-invariant set.
    ///
    /// Transpose turns `Up^p` into `Right^p`; in the target `Right^{|l|}` is a
    /// power of `Up` of size `k`, which gives `k p / gcd(p, |l|)`.
    pub fn image_period(&self, p: i64) -> i64 {
        match self.kind {
            MapKind::Transpose => self.source.k() * p / p.gcd(&self.source.l().abs()),
            _ => p,
        }
    }
}

impl fmt::Display for Primitive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            MapKind::Identity => write!(f, "Identity"),
            MapKind::Flip => write!(f, "Flip"),
            MapKind::Transpose => write!(f, "Transpose"),
            MapKind::Translate { dm, dn } => write!(f, "Translate({dm},{dn})"),
        }?;
        write!(f, "[{}->{}]", self.source, self.target)
    }
}

/// An ordered composition of primitive maps; the first map is applied first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsomorphismChain {
    source: GklParams,
    maps: Vec<Primitive>,
}

impl IsomorphismChain {
    pub fn identity(params: GklParams) -> Self {
        IsomorphismChain {
            source: params,
            maps: Vec::new(),
        }
    }

    pub fn source(&self) -> GklParams {
        self.source
    }

    pub fn target(&self) -> GklParams {
        self.maps.last().map_or(self.source, |p| p.target)
    }

    pub fn maps(&self) -> &[Primitive] {
        &self.maps
    }

    pub fn is_identity(&self) -> bool {
        self.maps.iter().all(|p| p.kind == MapKind::Identity)
    }

    pub fn then(mut self, map: Primitive) -> Result<Self> {
        let here = self.target();
        if map.source != here {
            return Err(Error::ChainMismatch {
                chain_k: map.source.k(),
                chain_l: map.source.l(),
                k: here.k(),
                l: here.l(),
            });
        }
        self.maps.push(map);
        Ok(self)
    }

    pub fn then_flip(self) -> Self {
        let map = Primitive::flip(self.target());
        self.then(map).expect("flip starts at the chain target")
    }

    pub fn then_transpose(self) -> Result<Self> {
        let map = Primitive::transpose(self.target())?;
        self.then(map)
    }

    pub fn then_translate(self, dm: i64, dn: i64) -> Self {
        let map = Primitive::translate(self.target(), dm, dn);
        self.then(map).expect("translate starts at the chain target")
    }

    pub fn inverse(&self) -> IsomorphismChain {
        IsomorphismChain {
            source: self.target(),
            maps: self.maps.iter().rev().map(Primitive::inverse).collect(),
        }
    }

    pub fn map_vertex(&self, v: Vertex) -> Vertex {
        self.maps.iter().fold(v, |v, p| p.map_vertex(v))
    }

    pub fn map_edge(&self, e: Edge) -> Edge {
        self.maps.iter().fold(e, |e, p| p.map_edge(e))
    }
}

impl fmt::Display for IsomorphismChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "Identity[{}]", self.source);
        }
        let parts: Vec<String> = self.maps.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(" ; "))
    }
}

/// Brings a 4-regular `G(k,l)` to coordinates with `k >= l >= 0`.
pub fn normalize(params: GklParams) -> Result<(GklParams, IsomorphismChain)> {
    params.require_four_regular()?;
    let mut chain = IsomorphismChain::identity(params);
    if chain.target().l() < 0 {
        chain = chain.then_flip();
    }
    if chain.target().l() > chain.target().k() {
        chain = chain.then_transpose()?;
    }
    Ok((chain.target(), chain))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Dir;
    use proptest::prelude::*;

    fn p(k: i64, l: i64) -> GklParams {
        GklParams::new(k, l).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let (t, chain) = normalize(p(3, -2)).unwrap();
        assert_eq!(t, p(3, 2));
        assert_eq!(chain.maps().len(), 1);
        assert_eq!(chain.maps()[0].kind, MapKind::Flip);

        let (t, chain) = normalize(p(2, 5)).unwrap();
        assert_eq!(t, p(5, 2));
        assert_eq!(chain.maps()[0].kind, MapKind::Transpose);

        let (t, chain) = normalize(p(4, 2)).unwrap();
        assert_eq!(t, p(4, 2));
        assert!(chain.is_identity());

        let (t, chain) = normalize(p(2, -4)).unwrap();
        assert_eq!(t, p(4, 2));
        let kinds: Vec<MapKind> = chain.maps().iter().map(|m| m.kind).collect();
        assert_eq!(kinds, vec![MapKind::Flip, MapKind::Transpose]);

        assert!(normalize(p(2, 0)).is_err());
    }

    #[test]
    fn map_through_examples() {
        let tr = IsomorphismChain::identity(p(2, 5)).then_transpose().unwrap();
        assert_eq!(tr.target(), p(5, 2));
        assert_eq!(tr.map_vertex(Vertex::new(1, 3)), Vertex::new(3, 1));

        let fl = IsomorphismChain::identity(p(3, -2)).then_flip();
        assert_eq!(
            fl.map_edge(Edge::new(0, 0, Dir::V)),
            Edge::new(0, -1, Dir::V)
        );

        let id = IsomorphismChain::identity(p(3, 1));
        assert_eq!(id.map_vertex(Vertex::new(2, 9)), Vertex::new(2, 9));
        assert_eq!(id.map_edge(Edge::new(2, 9, Dir::H)), Edge::new(2, 9, Dir::H));
    }

    #[test]
    fn transpose_swaps_orientation() {
        let tr = IsomorphismChain::identity(p(4, 3)).then_transpose().unwrap();
        assert_eq!(tr.map_edge(Edge::new(1, 2, Dir::H)).dir, Dir::V);
        assert_eq!(tr.map_edge(Edge::new(1, 2, Dir::V)).dir, Dir::H);
        let neg = IsomorphismChain::identity(p(4, -3)).then_transpose().unwrap();
        assert_eq!(neg.target(), p(3, -4));
    }

    #[test]
    fn chain_mismatch() {
        let chain = IsomorphismChain::identity(p(3, 1));
        assert!(matches!(
            chain.then(Primitive::flip(p(4, 1))),
            Err(Error::ChainMismatch { .. })
        ));
        assert!(matches!(
            IsomorphismChain::identity(p(3, 0)).then_transpose(),
            Err(Error::DegenerateTranspose)
        ));
    }

    fn adjacent(g: &GklParams, a: Vertex, b: Vertex) -> bool {
        Letter::ALL.iter().any(|&s| g.step(a, s) == b)
    }

    proptest! {
        #[test]
        fn normalize_chain_is_graph_isomorphism(k in 1i64..=10, l in -10i64..=10, dm in -3i64..3, dn in -3i64..3) {
            let g = p(k, l);
            prop_assume!(g.is_four_regular());
            let (t, chain) = normalize(g).unwrap();
            prop_assert!(t.k() >= t.l() && t.l() >= 0);
            let chain = chain.then_translate(dm, dn);
            let inv = chain.inverse();
            let verts: Vec<Vertex> = (0..200)
                .map(|i| g.canonicalize(i % 7 - 3, i / 7 - 14))
                .collect();
            for &v in &verts {
                let w = chain.map_vertex(v);
                prop_assert_eq!(inv.map_vertex(w), v);
                for s in Letter::ALL {
                    let u = g.step(v, s);
                    prop_assert!(adjacent(&t, w, chain.map_vertex(u)));
                    let e = g.edge_from_step(v, s);
                    prop_assert_eq!(inv.map_edge(chain.map_edge(e)), e);
                }
                // Non-adjacency is preserved too (bijection on a 4-regular graph).
                let far = g.add(v, 0, 2);
                prop_assert_eq!(adjacent(&g, v, far), adjacent(&t, w, chain.map_vertex(far)));
            }
        }
    }
}

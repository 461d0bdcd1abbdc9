//! Hamiltonian decompositions of the 4-regular Cayley graphs `G(k,l)` of
//! `Z^2 / <(k,l)>`: construction, verification and rendering of periodic
//! edge 2-colourings whose classes are Hamiltonian double-rays or circles.

pub mod error;
pub mod group;
pub mod iso;
pub mod lattice;
pub mod periodic;
pub mod verify;

pub use error::{Error, Result};
pub use group::{Dir, Edge, GeneratorWord, GklParams, Letter, Vertex};
pub use periodic::{Color, Decomposition, PeriodicEdgeSet};
pub use verify::Mode;
pub mod constructor;
pub mod par;
pub mod render;
pub mod sweep;
pub mod cli;

//! Classification of 4-regular Cayley graphs of `Z ⊕ Z_m` with two generators.
//!
//! The generators `a, b` induce `phi: Z^2 -> Z ⊕ Z_m`; the Cayley graph is the
//! graph of `Z^2 / ker(phi)`. The kernel is computed exactly with unimodular
//! column operations on the relation matrix
//!
//! ```text
//! [ a1  b1  0 ]
//! [ a2  b2  m ]
//! ```
//!
//! whose integer null space, projected to the first two coordinates, is `ker(phi)`.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::GklParams;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "tag")]
pub enum Classification {
    SquareGrid,
    Gkl {
        k: i64,
        l: i64,
        /// Generator of the kernel lattice before normalization.
        kernel: (i64, i64),
        /// The kernel generator had first coordinate 0 and the axes were swapped.
        transposed: bool,
    },
    NotFourRegularInfinite {
        kernel: (i64, i64),
        reason: String,
    },
    FiniteGroup {
        reason: String,
    },
}

impl Classification {
    pub fn params(&self) -> Option<GklParams> {
        match *self {
            Classification::Gkl { k, l, .. } => GklParams::new(k, l).ok(),
            _ => None,
        }
    }
}

/// Column-style echelon form of a 2x3 integer matrix.
///
/// Returns `(h, u, rank)` with `h = a * u`, `u` unimodular and the first
/// `rank` columns of `h` carrying the pivots; the remaining columns of `u`
/// span the integer null space of `a`.
fn column_echelon(mut a: [[i64; 3]; 2]) -> ([[i64; 3]; 2], [[i64; 3]; 3], usize) {
    let mut u = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
    let mut pivot = 0usize;
    for row in 0..2 {
        if pivot >= 3 {
            break;
        }
        for j in pivot + 1..3 {
            let (ap, aj) = (a[row][pivot], a[row][j]);
            if aj == 0 {
                continue;
            }
            let eg = ap.extended_gcd(&aj);
            let (g, x, y) = (eg.gcd, eg.x, eg.y);
            let (s, t) = (-aj / g, ap / g);
            // [col_p, col_j] <- [x col_p + y col_j, s col_p + t col_j]; det = x t - y s = 1.
            for r in a.iter_mut() {
                let (cp, cj) = (r[pivot], r[j]);
                r[pivot] = x * cp + y * cj;
                r[j] = s * cp + t * cj;
            }
            for r in u.iter_mut() {
                let (cp, cj) = (r[pivot], r[j]);
                r[pivot] = x * cp + y * cj;
                r[j] = s * cp + t * cj;
            }
        }
        if a[row][pivot] != 0 {
            pivot += 1;
        }
    }
    (a, u, pivot)
}

/// Reduces a list of vectors in `Z^2` to a basis of the lattice they span
/// (row Hermite form): zero, one or two vectors.
pub fn lattice_basis(vectors: &[(i64, i64)]) -> Vec<(i64, i64)> {
    // `lead` carries the row with the gcd of first coordinates; `second` the gcd
    // of second coordinates of rows whose first coordinate was eliminated.
    let mut lead = (0i64, 0i64);
    let mut second = 0i64;
    for &v in vectors {
        if v.0 == 0 {
            second = second.gcd(&v.1);
        } else if lead.0 == 0 {
            lead = v;
        } else {
            let eg = lead.0.extended_gcd(&v.0);
            let g = eg.gcd;
            let residual = (-v.0 / g) * lead.1 + (lead.0 / g) * v.1;
            second = second.gcd(&residual);
            lead = (g, eg.x * lead.1 + eg.y * v.1);
        }
    }
    let mut basis = Vec::new();
    if lead.0 != 0 {
        if lead.0 < 0 {
            lead = (-lead.0, -lead.1);
        }
        if second != 0 {
            lead.1 = lead.1.mod_floor(&second);
        }
        basis.push(lead);
    }
    if second != 0 {
        basis.push((0, second));
    }
    basis
}

/// Classifies `Cay(Z ⊕ Z_m, {a, b})`.
///
/// `torsion = 0` means the group `Z^2`, `torsion = 1` means `Z` (the second
/// coordinates of `a` and `b` are then ignored), and `torsion >= 2` means
/// `Z ⊕ Z_m` with second coordinates read modulo `m`.
pub fn classify_generators(torsion: i64, a: (i64, i64), b: (i64, i64)) -> Result<Classification> {
    if torsion < 0 {
        return Err(Error::Malformed(format!("torsion must be >= 0, got {torsion}")));
    }
    let (a2, b2) = match torsion {
        0 => (a.1, b.1),
        1 => (0, 0),
        m => (a.1.mod_floor(&m), b.1.mod_floor(&m)),
    };
    let matrix = [[a.0, b.0, 0], [a2, b2, torsion]];
    let (h, u, rank) = column_echelon(matrix);

    // Image of (a, b, torsion relation) must be all of Z^2.
    if rank < 2 || (h[0][0] * h[1][1]).abs() != 1 {
        return Err(Error::NotGenerating);
    }

    let kernel: Vec<(i64, i64)> = (rank..3).map(|j| (u[0][j], u[1][j])).collect();
    let basis = lattice_basis(&kernel);
    match basis.len() {
        0 => Ok(Classification::SquareGrid),
        1 => {
            let (x, y) = basis[0];
            let (k, l, transposed) = if x != 0 {
                if x < 0 {
                    (-x, -y, false)
                } else {
                    (x, y, false)
                }
            } else {
                (y.abs(), 0, true)
            };
            let params = GklParams::new(k, l)?;
            if params.is_four_regular() {
                Ok(Classification::Gkl {
                    k,
                    l,
                    kernel: (x, y),
                    transposed,
                })
            } else {
                Ok(Classification::NotFourRegularInfinite {
                    kernel: (x, y),
                    reason: format!("generators collide in G({k},{l})"),
                })
            }
        }
        _ => Ok(Classification::FiniteGroup {
            reason: format!("kernel has rank 2 (basis {basis:?})"),
        }),
    }
}

/// Element of the Klein four-group `V4 = Z_2 ⊕ Z_2`.
pub type Klein = (u8, u8);

/// The three-generator case `Z ⊕ V4` with generators `t` (infinite order) and
/// two involutions `u`, `v` of `V4`. Whenever these generate the group the
/// Cayley graph is the prism `C4 × Z`, i.e. `G(4,0)`.
pub fn classify_with_involutions(t: (i64, Klein), u: Klein, v: Klein) -> Result<Classification> {
    let norm = |x: Klein| (x.0 & 1, x.1 & 1);
    let (u, v) = (norm(u), norm(v));
    if u == (0, 0) || v == (0, 0) || u == v || t.0.abs() != 1 {
        return Err(Error::NotGenerating);
    }
    Ok(Classification::Gkl {
        k: 4,
        l: 0,
        kernel: (4, 0),
        transposed: false,
    })
}

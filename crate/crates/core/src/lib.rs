//! Exact cohomology of two-point configuration spaces of real
//! projective spaces: mod-2 and integral ring presentations as
//! rewriting systems, a Bockstein spectral sequence engine for the
//! additive tables, and cup-length certificates for the symmetric
//! topological complexity bounds.

pub mod bockstein;
pub mod dihedral;
pub mod exactalg;
pub mod cli;
pub mod intrings;
pub mod mod2rings;
pub mod tcs;
pub mod verify;

/// Which configuration space: ordered (F) or unordered (B) pairs.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Space {
    F,
    B,
}

impl std::fmt::Display for Space {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Space::F => write!(f, "F"),
            Space::B => write!(f, "B"),
        }
    }
}

//! Exact root-system and character machinery for studying the graded
//! invariant algebras `S(g)_Ψ^g` and `Λ(g)_Ψ^g` attached to a simple Lie
//! algebra `g` and a set of roots `Ψ(ξ)`.
//!
//! Everything here is exact: weights are integer vectors in the
//! fundamental-weight basis, the bilinear form is rational, and every
//! multiplicity is an arbitrary-precision integer. The crate is `no_std`
//! (it needs `alloc`); file formats, the persistent cache and the command
//! line live in the companion `liekoszul` crate.
//!
//! Layout:
//!
//! * [`rootsys`] builds roots, the Cartan matrix and the normalized form.
//! * [`charlib`] computes characters: Freudenthal multiplicities, Weyl
//!   dimensions, Racah–Speiser decompositions and the symmetric/exterior
//!   powers of the adjoint representation.
//! * [`psi`] computes `Ψ(ξ)`, the order `≤_Ψ`, the distance `d_Ψ` and finite
//!   slices of the poset of dominant weights.
//! * [`koszul`] assembles Hilbert matrices over a slice and checks the
//!   numerical Koszul criterion, quadratic duality and global dimension.
//! * [`meshquiver`] models the mesh-relation algebra on the `ℤ₊ × ℤ₊`
//!   translation quiver.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod charlib;
pub mod error;
pub mod koszul;
mod linalg;
pub mod meshquiver;
pub mod poly;
pub mod psi;
pub mod rootsys;
pub mod weight;

pub use charlib::{Character, DecompositionList, PowerKind, PowerTable, VirtualCharacter};
pub use error::{Error, Result};
pub use koszul::KoszulReport;
pub use poly::{Poly, PolyMatrix};
pub use psi::{PosetSlice, PsiSet};
pub use rootsys::{Family, LieType, RootSystem};
pub use weight::Weight;

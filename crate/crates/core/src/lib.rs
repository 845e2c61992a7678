//! Centralizers of wall elements in groups given by triangle presentations.
//!
//! A triangle presentation describes a torsion-free group `Γ` acting simply
//! transitively on the vertices of a building of type Ã2. For an element `g`
//! spelled by a positive cyclic *wall word*, the quotient of the tree of axial
//! walls of `g` by `Z_Γ(g)/⟨g⟩` is a finite graph of finite cyclic groups.
//! This crate builds that graph, its fundamental group, and a simplified
//! free-product description.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod abelian;
pub mod bassserre;
pub mod error;
pub mod presentation;
pub mod quotient;
pub mod strips;
pub mod walls;
pub mod word;

pub use bassserre::{
    fundamental_group, full_centralizer_presentation, simplify, GroupPresentation, IsoType,
    Simplified,
};
pub use error::Error;
pub use presentation::{Strictness, TrianglePresentation, ValidationError, Violation};
pub use quotient::{build_quotient, Classification, QuotientGraph};
pub use strips::{enumerate_periodic_strips, Strip};
pub use walls::{wall_word, Necklace};
pub use word::FormalWord;

/// Generator index `i` of the generator `x_i`.
pub type Gen = u8;

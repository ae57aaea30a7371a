//! Exact-arithmetic workbench for Nichols and pre-Nichols algebras of
//! diagonal type.
//!
//! The coefficient field is `K = Q(ζ_M)(t)`: one cyclotomic layer over the
//! rationals and one transcendental, with every computation carried out in
//! canonical exact form. On top of that the crate provides:
//!
//! - braiding matrices, Dynkin diagrams, the bicharacter and the diagram
//!   criteria that screen for infinite Gelfand-Kirillov dimension
//!   ([`braiding`]),
//! - Weyl-groupoid reflections and positive-root enumeration ([`weyl`]),
//! - the braided free algebra `T(V)`: products, braided commutators, the
//!   shuffle coproduct and a small relation DSL ([`freealg`]),
//! - graded quotients by two-sided homogeneous ideals: per-degree bases,
//!   normal forms, Hilbert tables, primitivity and q-centrality
//!   ([`quotient`]),
//! - the catalog of exceptional presentations with their PBW data and
//!   closed-form Hilbert series ([`catalog`], [`series`]),
//! - the verification layer: PBW checks, Hilbert comparisons, GK-dimension
//!   by pole order, eminent-gap reports and obstruction screens
//!   ([`verify`]).

pub mod braiding;
pub mod coeff;
pub mod degree;
pub mod error;
pub mod freealg;
pub mod lex;
pub mod weyl;

pub use coeff::{GroundField, Scalar};
pub use degree::MultiDegree;
pub use error::{Error, Result};

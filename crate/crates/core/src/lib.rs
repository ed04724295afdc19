//! Garside-structure toolkit for the braid groups of complex reflection
//! type (e,e,r).
//!
//! The crate builds the circular presentation of the braid monoid of type
//! (e,e,r) and exposes the machinery its Garside structure supports:
//!
//! * [`presentation`] — alphabets, relations, complement tables, and the
//!   diagram morphisms (rotation, reversal, folding);
//! * [`reversing`] — signed-word reversing, the cube condition, and
//!   completeness checking;
//! * [`garside`] — divisibility, lcm/gcd, the Garside element and its
//!   simples (closed form and brute-force oracle), greedy normal forms,
//!   and the monoid/group word problems;
//! * [`combinatorics`] — Poincaré polynomials, simple counts, zeta
//!   polynomials by multichain counting, and the numerical duality table;
//! * [`reflection`] — the monomial-matrix model of the reflection group
//!   G(e,e,r) and the projection from braid words;
//! * [`cli`] — the `eer` command-line front end.

pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod garside;
pub mod presentation;
pub mod reflection;
pub mod reversing;

pub use error::{Error, Result};
pub use presentation::{Generator, Presentation, Relation, Sign, SignedWord, Word};
pub use reversing::DEFAULT_BUDGET;

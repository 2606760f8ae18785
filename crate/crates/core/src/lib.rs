//! Finite-geometry engine for SET, Socks (Projective SET), Spot It! and
//! EvenQuads.
//!
//! Cards are vectors: SET lives in F_3^4, Socks and EvenQuads in F_2^6, and
//! Spot It! decks are projective planes PG(2, q). Every game rule becomes a
//! statement about sums of vectors or incidences, and most results in this
//! crate are checked against an independent brute-force count.

pub mod algebra;
pub mod capsearch;
pub mod analysis;
pub mod decks;
pub mod error;
pub mod projective;
pub mod rng;
pub mod rules;
pub mod sim;
pub mod verify;
pub mod xmap;

pub use algebra::{Card, FpVector, Rational, Space};
pub use decks::{Deck, DeckKind};
pub use error::{Error, Result};

//! Exact group computations for surface braid groups of the torus and the
//! Klein bottle.
//!
//! Engines: free groups ([`word`]), the Klein bottle group ([`klein`]),
//! the pure and full 2-string braid groups of the torus ([`torus_braid`]).
//! On top of those sit the embedding of the Klein bottle group into
//! `B2(T)` ([`embeddings`]), Smith normal form and coinvariant quotients
//! ([`abelian`]), and a table of cohomological dimensions ([`dimensions`]).

pub mod abelian;
pub mod dimensions;
pub mod embeddings;
pub mod error;
pub mod exec;
pub mod group;
pub mod klein;
pub mod sampling;
pub mod torus_braid;
pub mod word;

pub use error::{AlgebraError, ParseError, Result};
pub use exec::Execution;
pub use group::GroupEngine;
pub use klein::{KleinElement, KleinEndo, KleinGroup};
pub use torus_braid::{B2tElement, B2tGroup, P2tElement, P2tGroup};
pub use word::{Alphabet, FreeGroup, FreeWord, Presentation};

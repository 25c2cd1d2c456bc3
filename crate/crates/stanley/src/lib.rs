//! Stanley decompositions and depth bounds for monomial ideals over ℚ.
//!
//! Given a monomial ideal I in S = ℚ[x_1, ..., x_n], this crate computes the
//! linear and affine rank of its minimal generator exponents, checks the
//! weakly polymatroidal property, and constructs verified Stanley
//! decompositions of I and S/I witnessing the bounds
//!
//! ```text
//! sdepth(I)   ≥ n − arank(I) + 1          (weakly polymatroidal I)
//! sdepth(S/I) ≥ n − arank(I)
//! sdepth(I)   ≥ n − rank(I) + 1           (squarefree I)
//! sdepth(S/I) ≥ n − rank(I)
//! ```
//!
//! Independent oracles — an exact Stanley depth search over interval
//! partitions of the characteristic poset, Betti numbers via upper Koszul
//! simplicial homology, and associated primes via irreducible decomposition —
//! cross-check every bound. The `stanley` binary exposes the lot, plus a
//! seeded corpus runner, as a command-line tool.

pub mod cli;
pub mod corpus;
pub mod decomp;
pub mod error;
pub mod exponent;
pub mod ideal;
pub mod json;
pub mod oracles;
pub mod parse;
pub mod rank;
pub mod report;
pub mod ring;
pub mod wpm;

pub use decomp::{StanleyDecomposition, StanleySpace, Target};
pub use error::Error;
pub use exponent::Exponent;
pub use ideal::{minimalize, MonomialIdeal};
pub use parse::parse_ideal;
pub use ring::PolyRing;

pub type Result<T> = std::result::Result<T, Error>;

//! Independent oracles: exact Stanley depth, Betti numbers / depth, and
//! associated primes. These do not share logic with the decomposition
//! constructions they cross-check (the one deliberate exception: Betti
//! homology ranks go through the same exact rational elimination as the
//! rank module).

mod betti;
mod poset;
mod primes;

pub use betti::{betti_numbers, depth_quotient, BettiCaps, BettiTable};
pub use poset::{characteristic_poset, exact_sdepth, CharacteristicPoset, ExactSdepth, OracleCaps};
pub use primes::{
    associated_primes, irreducible_decomposition, max_ass_height, IrreducibleComponent,
    PrimeCaps,
};

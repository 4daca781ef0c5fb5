//! Exact combinatorics of admissible sequences over the symbols L, C, R:
//! the parity ordering, maximality, the twin map µ, the pairing map ν,
//! shuffles, and orbit enumeration. No floating point anywhere.

mod enumerate;
mod sequence;
mod shuffle;

pub use enumerate::{enumerate_min_period_orbits, min_period_point_count, moebius, symbolic_matching, SequencePair};
pub use sequence::{compare_words, FiniteItinerary, PeriodicSequence, Symbol};
pub use shuffle::{gamma_half_shift, shuffle_of, Shuffle};

use thiserror::Error;

/// Errors from constructing or transforming symbolic values.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolicError {
    #[error("empty symbol block")]
    EmptyBlock,
    #[error("symbol C is not allowed in a periodic block")]
    CInPeriodicBlock,
    #[error("invalid character {found:?} at position {position}")]
    InvalidCharacter { found: char, position: usize },
    #[error("C may only appear as the final symbol (found at position {position} of {len})")]
    InteriorC { position: usize, len: usize },
    #[error("period {n} outside supported range 1..={max}")]
    PeriodOutOfRange { n: usize, max: usize },
    #[error("half-period shift needs an even length, got {n}")]
    OddLength { n: usize },
    #[error("entries are not a permutation of 0..{n}")]
    NotAPermutation { n: usize },
}

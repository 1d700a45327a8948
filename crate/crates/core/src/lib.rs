//! farahidi: an Arabic root lexicon engine.
//!
//! Every Arabic root of 2 to 5 letters maps to a unique integer through the
//! Al-Farahidi letter weights, with zero collisions and no unused slots in
//! the `[1, 17_847_760]` index space. The crate owns four pieces:
//!
//! - [`alphabet`]: the 29-letter weight table and text normalization;
//! - [`indexer`]: the root-to-index encoding and its exact inverse;
//! - [`combinatorics`]: the classical 12,305,412 root-count theorem and the
//!   permute (taqālīb) enumeration;
//! - [`store`]: a direct-access binary lexicon keyed by index.

pub mod alphabet;
pub mod combinatorics;
pub mod indexer;
pub mod store;

pub use alphabet::{normalize_text, FarahidiLetter, LetterWeight, NormalizeError};
pub use combinatorics::{
    count_roots, enumerate_permutations, hash_space_size, total_root_count, LetterSet,
    FARAHIDI_ROOT_COUNT,
};
pub use indexer::{
    decode, encode, index_range, word_length_of, DigitVector, LexIndex, RootWord, SyllableLength,
};
pub use store::{Lexicon, LexiconEntry, LexiconStats, Record, StoreError};

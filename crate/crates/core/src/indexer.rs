//! Collision-free root indexing.
//!
//! A root of letters with weights d1..dL (d1 = first letter in reading
//! order, dk = 0 beyond the word) maps to
//!
//! ```text
//! index = d5*28^4 + d4*28^3 + d3*28^2 + (d2 - 1)*28 + d1
//! ```
//!
//! The `(d2 - 1)` term anchors the smallest word عع at index 1; the digits
//! d3..d5 behave as bijective base-28 numerals (no zero digit), so the four
//! length classes tile `[1, 17_847_760]` exactly: every index decodes to one
//! word and every word of length 2..=5 owns one index. The map is a minimal
//! perfect hash over the full with-repetition word space, no modular
//! reduction or bit masking involved.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::alphabet::{
    self, letter_of, normalize_text, weight_of, FarahidiLetter, LetterWeight, NormalizeError,
};

const RADIX: u64 = alphabet::ROOT_LETTER_COUNT as u64;
/// 28^2, the size of the two-letter block that the (d2 - 1) term compacts.
const PAIR_SPACE: u64 = RADIX * RADIX;

/// Shortest and longest admissible root.
pub const MIN_ROOT_LEN: usize = 2;
pub const MAX_ROOT_LEN: usize = 5;

/// Inclusive ends of the length-r index blocks, r = 2..=5.
/// RANGE_END[k] = 28^2 + ... + 28^(k+2).
const RANGE_END: [u64; 4] = {
    let mut ends = [0u64; 4];
    let mut acc = 0u64;
    let mut r = 0;
    while r < 4 {
        acc += RADIX.pow(r as u32 + 2);
        ends[r] = acc;
        r += 1;
    }
    ends
};

/// A root of 2..=5 letters in reading order. Letters may repeat; hamza is
/// excluded by construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootWord {
    letters: Vec<FarahidiLetter>,
}

/// Length class of a root: 2, 3, 4 or 5 letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SyllableLength(u8);

/// The per-letter weights of a root, zero-padded to five digits.
/// `digits()[k]` is the weight of letter k+1 in reading order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DigitVector {
    digits: [u8; MAX_ROOT_LEN],
    len: usize,
}

/// A lexicon index: an integer in `[1, 17_847_760]` naming exactly one root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LexIndex(u64);

/// The letters do not form a valid root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum InvalidRoot {
    #[error("a root has 2 to 5 letters, got {0}")]
    BadLength(usize),
    #[error("letter {0} of a root cannot be the weight-0 hamza")]
    HamzaLetter(usize),
}

/// Value outside the global index range `[1, 17_847_760]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("index {0} is out of range (expected 1..={max})", max = LexIndex::MAX.value())]
pub struct IndexOutOfRange(pub u64);

/// Length outside {2, 3, 4, 5}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("syllable length {0} is out of range (expected 2..=5)")]
pub struct InvalidSyllable(pub u8);

/// Raw text failed to parse as a root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ParseRootError {
    #[error(transparent)]
    Normalize(#[from] NormalizeError),
    #[error(transparent)]
    Invalid(#[from] InvalidRoot),
}

impl RootWord {
    /// Builds a root from letters in reading order, validating length and
    /// the no-hamza rule.
    pub fn new(letters: Vec<FarahidiLetter>) -> Result<Self, InvalidRoot> {
        if !(MIN_ROOT_LEN..=MAX_ROOT_LEN).contains(&letters.len()) {
            return Err(InvalidRoot::BadLength(letters.len()));
        }
        if let Some(pos) = letters.iter().position(|l| l.is_hamza()) {
            return Err(InvalidRoot::HamzaLetter(pos + 1));
        }
        Ok(RootWord { letters })
    }

    /// Normalizes raw text and builds the root it spells.
    pub fn parse(raw: &str) -> Result<Self, ParseRootError> {
        Ok(RootWord::new(normalize_text(raw)?)?)
    }

    pub fn letters(&self) -> &[FarahidiLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a valid root always has at least two letters
    }

    pub fn syllable_length(&self) -> SyllableLength {
        SyllableLength(self.letters.len() as u8)
    }

    pub fn digits(&self) -> DigitVector {
        let mut digits = [0u8; MAX_ROOT_LEN];
        for (slot, letter) in digits.iter_mut().zip(&self.letters) {
            *slot = weight_of(*letter).value();
        }
        DigitVector {
            digits,
            len: self.letters.len(),
        }
    }

    /// True when no letter repeats, i.e. the word is one of the roots the
    /// classical count enumerates.
    pub fn has_distinct_letters(&self) -> bool {
        let mut seen = [false; alphabet::ROOT_LETTER_COUNT as usize + 1];
        self.letters.iter().all(|l| {
            let w = weight_of(*l).value() as usize;
            !std::mem::replace(&mut seen[w], true)
        })
    }
}

impl fmt::Display for RootWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for RootWord {
    type Err = ParseRootError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RootWord::parse(s)
    }
}

impl SyllableLength {
    pub const ALL: [SyllableLength; 4] = [
        SyllableLength(2),
        SyllableLength(3),
        SyllableLength(4),
        SyllableLength(5),
    ];

    pub fn new(r: u8) -> Result<Self, InvalidSyllable> {
        if (MIN_ROOT_LEN..=MAX_ROOT_LEN).contains(&(r as usize)) {
            Ok(SyllableLength(r))
        } else {
            Err(InvalidSyllable(r))
        }
    }

    pub fn get(self) -> u8 {
        self.0
    }
}

impl fmt::Display for SyllableLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl DigitVector {
    /// All five digits, zero-padded beyond the word length.
    pub fn padded(&self) -> [u8; MAX_ROOT_LEN] {
        self.digits
    }

    /// The word's own digits, no padding.
    pub fn digits(&self) -> &[u8] {
        &self.digits[..self.len]
    }
}

impl fmt::Display for DigitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.digits().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl LexIndex {
    pub const MIN: LexIndex = LexIndex(1);
    pub const MAX: LexIndex = LexIndex(RANGE_END[3]);

    pub fn new(value: u64) -> Result<Self, IndexOutOfRange> {
        if (LexIndex::MIN.0..=LexIndex::MAX.0).contains(&value) {
            Ok(LexIndex(value))
        } else {
            Err(IndexOutOfRange(value))
        }
    }

    pub fn value(self) -> u64 {
        self.0
    }
}

impl fmt::Display for LexIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Index of a root. Injective over all roots of all lengths 2..=5.
pub fn encode(word: &RootWord) -> LexIndex {
    let d = word.digits().padded().map(u64::from);
    let value =
        d[4] * RADIX.pow(4) + d[3] * RADIX.pow(3) + d[2] * RADIX.pow(2) + (d[1] - 1) * RADIX + d[0];
    LexIndex(value)
}

/// Exact inverse of [`encode`], total on `[1, 17_847_760]`.
///
/// The two-letter part is recovered from `(i - 1) mod 784`; what remains,
/// divided by 784, is a bijective base-28 numeral whose digits are d3..dL.
pub fn decode(index: LexIndex) -> RootWord {
    let i = index.value();
    let pair = (i - 1) % PAIR_SPACE + 1;
    let d1 = (pair - 1) % RADIX + 1;
    let d2 = (pair - 1) / RADIX + 1;

    let mut weights = vec![d1, d2];
    let mut rest = (i - pair) / PAIR_SPACE;
    while rest > 0 {
        let digit = (rest - 1) % RADIX + 1;
        weights.push(digit);
        rest = (rest - digit) / RADIX;
    }
    debug_assert!(weights.len() <= MAX_ROOT_LEN);

    let letters = weights
        .into_iter()
        .map(|w| letter_of(LetterWeight::new(w as u16).expect("digit is 1..=28")))
        .collect();
    RootWord::new(letters).expect("decoded digits always form a valid root")
}

/// Inclusive index interval occupied by all length-r words.
///
/// The four intervals are contiguous, pairwise disjoint, of size 28^r each,
/// and tile the whole range: (1,784), (785,22736), (22737,637392),
/// (637393,17847760).
pub fn index_range(r: SyllableLength) -> (LexIndex, LexIndex) {
    let k = (r.get() - 2) as usize;
    let lo = if k == 0 { 1 } else { RANGE_END[k - 1] + 1 };
    (LexIndex(lo), LexIndex(RANGE_END[k]))
}

/// The unique length class whose interval contains `index`.
pub fn word_length_of(index: LexIndex) -> SyllableLength {
    let i = index.value();
    for r in SyllableLength::ALL {
        if i <= RANGE_END[(r.get() - 2) as usize] {
            return r;
        }
    }
    unreachable!("LexIndex is validated against the global range")
}

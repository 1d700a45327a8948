//! Root counting and the classical permute (taqālīb) enumeration.
//!
//! Al-Suyuti reports that Al-Farahidi counted 12,305,412 Arabic roots, used
//! and unused, across the 2..=5 letter classes. With 28 root letters and no
//! letter repeated inside a root, the length-r class holds
//! 28!/(28-r)! ordered words, and the four classes sum to exactly that
//! figure. This module computes the counts (as falling factorials; 28!
//! itself would overflow u64), re-derives them by brute-force enumeration,
//! and generates the k! orderings of a letter set.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::alphabet::{self, weight_of, FarahidiLetter};
use crate::indexer::{RootWord, SyllableLength};

const N: u64 = alphabet::ROOT_LETTER_COUNT as u64;

/// The classical total: distinct-letter roots of length 2..=5 over 28 letters.
pub const FARAHIDI_ROOT_COUNT: u64 = 12_305_412;

/// A set of 2..=5 pairwise-distinct root letters, the raw material of the
/// permute system. Held sorted by weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LetterSet {
    letters: Vec<FarahidiLetter>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum LetterSetError {
    #[error("a letter set has 2 to 5 letters, got {0}")]
    BadSize(usize),
    #[error("letter '{0}' appears more than once")]
    DuplicateLetter(FarahidiLetter),
    #[error("the weight-0 hamza cannot belong to a letter set")]
    Hamza,
}

impl LetterSet {
    pub fn new(letters: impl IntoIterator<Item = FarahidiLetter>) -> Result<Self, LetterSetError> {
        let mut sorted: Vec<FarahidiLetter> = letters.into_iter().collect();
        sorted.sort_by_key(|l| weight_of(*l));

        if !(2..=5).contains(&sorted.len()) {
            return Err(LetterSetError::BadSize(sorted.len()));
        }
        if sorted[0].is_hamza() {
            return Err(LetterSetError::Hamza);
        }
        if let Some(dup) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(LetterSetError::DuplicateLetter(dup[0]));
        }
        Ok(LetterSet { letters: sorted })
    }

    /// Letters in ascending weight order.
    pub fn letters(&self) -> &[FarahidiLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a valid set always has at least two letters
    }
}

/// Number of length-r words with pairwise-distinct letters: 28!/(28-r)!.
///
/// Computed as the falling factorial 28·27·…·(28-r+1).
pub fn count_roots(r: SyllableLength) -> u64 {
    (0..r.get() as u64).map(|k| N - k).product()
}

/// Sum of [`count_roots`] over all four length classes.
pub fn total_root_count() -> u64 {
    SyllableLength::ALL.into_iter().map(count_roots).sum()
}

/// Size of the with-repetition word space of length r: 28^r. This, not
/// [`count_roots`], is what a length-r index block spans; the surplus over
/// the root count is exactly the repeated-letter words.
pub fn hash_space_size(r: SyllableLength) -> u64 {
    N.pow(r.get() as u32)
}

/// Counts the distinct-letter words of length r the slow way: walk every
/// one of the 28^r weight tuples and test for repeats.
///
/// Independent of [`count_roots`] on purpose, so the two can check each
/// other. Takes a few seconds for r = 5.
pub fn count_roots_by_enumeration(r: SyllableLength) -> u64 {
    let len = r.get() as usize;
    let mut tuple = vec![1u8; len];
    let mut total = 0u64;
    loop {
        let distinct = tuple
            .iter()
            .enumerate()
            .all(|(i, a)| tuple[..i].iter().all(|b| b != a));
        if distinct {
            total += 1;
        }
        // odometer over [1, 28]^len
        let mut pos = len;
        loop {
            if pos == 0 {
                return total;
            }
            pos -= 1;
            if tuple[pos] < N as u8 {
                tuple[pos] += 1;
                break;
            }
            tuple[pos] = 1;
        }
    }
}

/// All |s|! orderings of a letter set, in ascending lexicographic order of
/// their weight tuples. The classical system's 2, 6, 24 or 120 forms.
pub fn enumerate_permutations(set: &LetterSet) -> Vec<RootWord> {
    let mut remaining: Vec<FarahidiLetter> = set.letters().to_vec();
    let mut current = Vec::with_capacity(remaining.len());
    let mut out = Vec::new();
    permute_rec(&mut remaining, &mut current, &mut out);
    out
}

// Picks the remaining letters in ascending weight order at every level, so
// the output comes out sorted by weight tuple without a final sort.
fn permute_rec(
    remaining: &mut Vec<FarahidiLetter>,
    current: &mut Vec<FarahidiLetter>,
    out: &mut Vec<RootWord>,
) {
    if remaining.is_empty() {
        let word = RootWord::new(current.clone()).expect("letter set invariants make a valid root");
        out.push(word);
        return;
    }
    for i in 0..remaining.len() {
        let letter = remaining.remove(i);
        current.push(letter);
        permute_rec(remaining, current, out);
        current.pop();
        remaining.insert(i, letter);
    }
}

/// Convenience: the distinct letters of `word` as a set.
pub fn letter_set_of(word: &RootWord) -> Result<LetterSet, LetterSetError> {
    let unique: BTreeSet<FarahidiLetter> = word.letters().iter().copied().collect();
    if unique.len() != word.len() {
        let dup = word
            .letters()
            .iter()
            .copied()
            .find(|l| word.letters().iter().filter(|m| *m == l).count() > 1)
            .expect("a duplicate exists when the set is smaller than the word");
        return Err(LetterSetError::DuplicateLetter(dup));
    }
    LetterSet::new(unique)
}

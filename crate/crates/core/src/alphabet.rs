//! The Al-Farahidi alphabet: the fixed letter-to-weight bijection and the
//! Unicode normalization that reduces raw Arabic text to base letters.
//!
//! Al-Khalil bin Ahmed Al-Farahidi ordered the Arabic letters phonetically,
//! from the deepest throat letter ع (weight 1) out to the lips and ا
//! (weight 28). The hamza ء gets weight 0 and never appears in a root, so
//! weight 0 doubles as the "no letter here" padding digit of the index
//! arithmetic in [`crate::indexer`].

use std::fmt;

use thiserror::Error;

/// Number of weighted root letters (hamza excluded).
pub const ROOT_LETTER_COUNT: u8 = 28;

/// All 29 letters in weight order, index = weight. Hamza sits at slot 0.
const LETTERS_BY_WEIGHT: [char; 29] = [
    '\u{0621}', // 0  ء hamza
    '\u{0639}', // 1  ع ain
    '\u{062D}', // 2  ح hah
    '\u{0647}', // 3  ه heh
    '\u{062E}', // 4  خ khah
    '\u{063A}', // 5  غ ghain
    '\u{0642}', // 6  ق qaf
    '\u{0643}', // 7  ك kaf
    '\u{062C}', // 8  ج jeem
    '\u{0634}', // 9  ش sheen
    '\u{0636}', // 10 ض dad
    '\u{0635}', // 11 ص sad
    '\u{0633}', // 12 س seen
    '\u{0632}', // 13 ز zain
    '\u{0637}', // 14 ط tah
    '\u{062A}', // 15 ت teh
    '\u{062F}', // 16 د dal
    '\u{0638}', // 17 ظ zah
    '\u{0630}', // 18 ذ thal
    '\u{062B}', // 19 ث theh
    '\u{0631}', // 20 ر reh
    '\u{0644}', // 21 ل lam
    '\u{0646}', // 22 ن noon
    '\u{0641}', // 23 ف feh
    '\u{0628}', // 24 ب beh
    '\u{0645}', // 25 م meem
    '\u{0648}', // 26 و waw
    '\u{064A}', // 27 ي yeh
    '\u{0627}', // 28 ا alef
];

/// One letter of the canonical 29-letter table.
///
/// Construction validates the codepoint, so a value of this type always
/// carries a defined weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FarahidiLetter(char);

/// Phonetic rank of a letter: 0 for hamza, 1..=28 for root letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LetterWeight(u8);

/// The codepoint is not one of the 29 canonical letters. Usually a sign of
/// un-normalized input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("'{0}' (U+{:04X}) is not a letter of the Farahidi alphabet", *.0 as u32)]
pub struct UnknownLetter(pub char);

/// Requested weight lies outside [0, 28].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("letter weight {0} is out of range (expected 0..=28)")]
pub struct WeightOutOfRange(pub u16);

/// Why a string could not be normalized to root letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum NormalizeError {
    /// A character survived normalization but is not a canonical letter.
    /// Position is the 0-based char offset in the raw input.
    #[error("'{ch}' (U+{:04X}) at position {position} cannot be mapped to a root letter", *.ch as u32)]
    UnmappableCharacter { position: usize, ch: char },
    /// A standalone hamza remained. Hamza has weight 0 and can never be a
    /// digit of an encodable root.
    #[error("bare hamza at position {position} cannot be a root letter")]
    BareHamza { position: usize },
}

impl FarahidiLetter {
    /// Validates that `c` is one of the 29 canonical letters.
    pub fn new(c: char) -> Result<Self, UnknownLetter> {
        if LETTERS_BY_WEIGHT.contains(&c) {
            Ok(FarahidiLetter(c))
        } else {
            Err(UnknownLetter(c))
        }
    }

    /// The underlying Unicode scalar.
    pub fn as_char(self) -> char {
        self.0
    }

    /// True for ء, the only weight-0 letter.
    pub fn is_hamza(self) -> bool {
        self.0 == LETTERS_BY_WEIGHT[0]
    }

    /// All 29 letters in ascending weight order, hamza first.
    pub fn all() -> impl Iterator<Item = FarahidiLetter> {
        LETTERS_BY_WEIGHT.iter().map(|&c| FarahidiLetter(c))
    }
}

impl TryFrom<char> for FarahidiLetter {
    type Error = UnknownLetter;

    fn try_from(c: char) -> Result<Self, Self::Error> {
        FarahidiLetter::new(c)
    }
}

impl fmt::Display for FarahidiLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl LetterWeight {
    /// Weight of the hamza, reserved and never a root digit.
    pub const HAMZA: LetterWeight = LetterWeight(0);

    pub fn new(value: u16) -> Result<Self, WeightOutOfRange> {
        if value <= ROOT_LETTER_COUNT as u16 {
            Ok(LetterWeight(value as u8))
        } else {
            Err(WeightOutOfRange(value))
        }
    }

    pub fn value(self) -> u8 {
        self.0
    }
}

impl fmt::Display for LetterWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Table weight of a letter. Total on all 29 letters.
pub fn weight_of(letter: FarahidiLetter) -> LetterWeight {
    // Linear scan over 29 entries; the table is tiny and cache-resident.
    let idx = LETTERS_BY_WEIGHT
        .iter()
        .position(|&c| c == letter.as_char())
        .expect("FarahidiLetter is always in the table");
    LetterWeight(idx as u8)
}

/// Inverse of [`weight_of`].
pub fn letter_of(weight: LetterWeight) -> FarahidiLetter {
    FarahidiLetter(LETTERS_BY_WEIGHT[weight.value() as usize])
}

/// Reduces one raw Arabic word to its sequence of base letters.
///
/// Applied per character, in order:
/// - diacritics U+064B..=U+065F, U+0670 and the tatweel U+0640 are stripped;
/// - hamza-carrier letters reduce to their carrier: أ إ آ ٱ → ا, ؤ → و,
///   ئ → ي; alef maqsura ى → ي; ta marbuta ة → ه;
/// - canonical letters pass through unchanged.
///
/// One call normalizes one word: whitespace and anything else that is not
/// Arabic is an error, as is a standalone ء (weight 0 is unencodable).
pub fn normalize_text(raw: &str) -> Result<Vec<FarahidiLetter>, NormalizeError> {
    let mut letters = Vec::new();
    for (position, ch) in raw.chars().enumerate() {
        let mapped = match ch {
            // tashkeel, superscript alef, tatweel: carry no root information
            '\u{064B}'..='\u{065F}' | '\u{0670}' | '\u{0640}' => continue,
            // hamza carriers reduce to the carrier letter
            '\u{0623}' | '\u{0625}' | '\u{0622}' | '\u{0671}' => '\u{0627}', // أ إ آ ٱ → ا
            '\u{0624}' => '\u{0648}',                                        // ؤ → و
            '\u{0626}' => '\u{064A}',                                        // ئ → ي
            '\u{0649}' => '\u{064A}',                                        // ى → ي
            '\u{0629}' => '\u{0647}',                                        // ة → ه
            '\u{0621}' => return Err(NormalizeError::BareHamza { position }),
            other => other,
        };
        match FarahidiLetter::new(mapped) {
            Ok(letter) => letters.push(letter),
            Err(_) => return Err(NormalizeError::UnmappableCharacter { position, ch }),
        }
    }
    Ok(letters)
}

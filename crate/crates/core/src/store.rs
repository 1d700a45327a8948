//! Persistent lexicon keyed by root index.
//!
//! Build takes headword/definition records, keys each one by the index of
//! its normalized headword, and refuses duplicates. The on-disk layout is a
//! sparse sorted-record file, not a dense 17.8M-slot array: real corpora
//! fill a sliver of the index space, and an in-memory map restores the
//! constant-time direct access the index was designed for.
//!
//! File layout, all integers little-endian, text UTF-8 without BOM:
//!
//! ```text
//! offset 0   magic "FRHD"
//! offset 4   format version, one byte, = 1
//! offset 5   record count n, u64
//! offset 13  n fixed records, ascending by index:
//!              u64 index | u64 blob offset | u32 headword len | u32 definition len
//! then       blob section: concatenated headword and definition bytes
//! ```

use std::collections::HashMap;
use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use thiserror::Error;

use crate::alphabet::NormalizeError;
use crate::indexer::{
    self, encode, word_length_of, InvalidRoot, LexIndex, RootWord, SyllableLength,
};

const MAGIC: [u8; 4] = *b"FRHD";
const FORMAT_VERSION: u8 = 1;
const HEADER_LEN: u64 = 13;
const RECORD_LEN: u64 = 24;

/// One lexicon record. The headword keeps its original orthography; the
/// index is always the one its normalization encodes to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexiconEntry {
    pub index: LexIndex,
    pub headword: String,
    pub definition: String,
}

/// An input record before keying, with its source line for diagnostics.
/// `line` is 1-based; use [`Record::new`] for records with no file origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Record {
    pub line: usize,
    pub headword: String,
    pub definition: String,
}

impl Record {
    pub fn new(headword: impl Into<String>, definition: impl Into<String>) -> Self {
        Record {
            line: 0,
            headword: headword.into(),
            definition: definition.into(),
        }
    }
}

/// An immutable lexicon with constant-time lookup by index.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Lexicon {
    entries: HashMap<u64, LexiconEntry>,
}

/// Entry counts partitioned by word length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct LexiconStats {
    counts: [u64; 4],
}

#[derive(Debug, Error)]
pub enum StoreError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("line {line}: invalid UTF-8")]
    BadEncoding { line: usize },
    #[error("line {line}: {source}")]
    Normalize { line: usize, source: NormalizeError },
    #[error("line {line}: {source}")]
    InvalidRoot { line: usize, source: InvalidRoot },
    #[error("line {line}: duplicate index {index} for \"{second}\"; already taken by \"{first}\"")]
    DuplicateIndex {
        line: usize,
        index: u64,
        first: String,
        second: String,
    },
    #[error("bad magic bytes (not a lexicon file)")]
    BadMagic,
    #[error("unsupported lexicon format version {0}")]
    BadVersion(u8),
    #[error("corrupt record at byte offset {0}")]
    CorruptRecord(u64),
    #[error("lexicon file is truncated")]
    TruncatedFile,
}

/// Lookup failure, keeping "no entry for a valid root" apart from
/// "the query was not a valid root at all".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum LookupError {
    #[error(transparent)]
    Normalize(#[from] NormalizeError),
    #[error(transparent)]
    InvalidRoot(#[from] InvalidRoot),
    #[error("no entry at index {0}")]
    NotFound(LexIndex),
}

/// Parses the input TSV: one `headword<TAB>definition` per line, `#` lines
/// and blank lines ignored. A line without a tab is a headword with an
/// empty definition.
pub fn parse_tsv<R: BufRead>(reader: R) -> Result<Vec<Record>, StoreError> {
    let mut records = Vec::new();
    for (idx, raw) in reader.split(b'\n').enumerate() {
        let line = idx + 1;
        let mut bytes = raw?;
        if bytes.last() == Some(&b'\r') {
            bytes.pop();
        }
        let text = String::from_utf8(bytes).map_err(|_| StoreError::BadEncoding { line })?;
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let (headword, definition) = match text.split_once('\t') {
            Some((h, d)) => (h.to_string(), d.to_string()),
            None => (text, String::new()),
        };
        records.push(Record {
            line,
            headword,
            definition,
        });
    }
    Ok(records)
}

impl Lexicon {
    /// Builds a lexicon from records, one entry per record, keyed by the
    /// index of the normalized headword. Two records landing on the same
    /// index is a hard error: either duplicate input or two surface forms
    /// normalizing to the same root, and silently merging would hide both.
    pub fn build(records: impl IntoIterator<Item = Record>) -> Result<Self, StoreError> {
        let mut entries: HashMap<u64, LexiconEntry> = HashMap::new();
        for record in records {
            let Record {
                line,
                headword,
                definition,
            } = record;
            let root = RootWord::parse(&headword).map_err(|e| match e {
                indexer::ParseRootError::Normalize(source) => {
                    StoreError::Normalize { line, source }
                }
                indexer::ParseRootError::Invalid(source) => {
                    StoreError::InvalidRoot { line, source }
                }
            })?;
            let index = encode(&root);
            let entry = LexiconEntry {
                index,
                headword,
                definition,
            };
            if let Some(first) = entries.get(&index.value()) {
                return Err(StoreError::DuplicateIndex {
                    line,
                    index: index.value(),
                    first: first.headword.clone(),
                    second: entry.headword,
                });
            }
            entries.insert(index.value(), entry);
        }
        Ok(Lexicon { entries })
    }

    /// Normalizes a raw headword, encodes it, and fetches the entry.
    pub fn lookup(&self, raw: &str) -> Result<&LexiconEntry, LookupError> {
        let root = RootWord::parse(raw).map_err(|e| match e {
            indexer::ParseRootError::Normalize(s) => LookupError::Normalize(s),
            indexer::ParseRootError::Invalid(s) => LookupError::InvalidRoot(s),
        })?;
        self.lookup_root(&root)
    }

    /// Lookup by an already-parsed root.
    pub fn lookup_root(&self, root: &RootWord) -> Result<&LexiconEntry, LookupError> {
        let index = encode(root);
        self.get(index).ok_or(LookupError::NotFound(index))
    }

    /// Direct fetch by index.
    pub fn get(&self, index: LexIndex) -> Option<&LexiconEntry> {
        self.entries.get(&index.value())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in ascending index order, the serialized order.
    pub fn entries_sorted(&self) -> Vec<&LexiconEntry> {
        let mut entries: Vec<&LexiconEntry> = self.entries.values().collect();
        entries.sort_by_key(|e| e.index);
        entries
    }

    /// Entry counts per length class plus total.
    pub fn stats(&self) -> LexiconStats {
        let mut counts = [0u64; 4];
        for entry in self.entries.values() {
            counts[(word_length_of(entry.index).get() - 2) as usize] += 1;
        }
        LexiconStats { counts }
    }

    /// Writes the bit-exact file format.
    pub fn serialize<W: Write>(&self, mut sink: W) -> io::Result<()> {
        let entries = self.entries_sorted();
        sink.write_all(&MAGIC)?;
        sink.write_all(&[FORMAT_VERSION])?;
        sink.write_all(&(entries.len() as u64).to_le_bytes())?;

        let mut offset = 0u64;
        for entry in &entries {
            sink.write_all(&entry.index.value().to_le_bytes())?;
            sink.write_all(&offset.to_le_bytes())?;
            sink.write_all(&(entry.headword.len() as u32).to_le_bytes())?;
            sink.write_all(&(entry.definition.len() as u32).to_le_bytes())?;
            offset += entry.headword.len() as u64 + entry.definition.len() as u64;
        }
        for entry in &entries {
            sink.write_all(entry.headword.as_bytes())?;
            sink.write_all(entry.definition.as_bytes())?;
        }
        Ok(())
    }

    /// Reads a file produced by [`Lexicon::serialize`], verifying structure
    /// and the keying invariant (index = encode of the normalized headword).
    pub fn deserialize<R: Read>(mut source: R) -> Result<Self, StoreError> {
        let mut magic = [0u8; 4];
        read_exact_or_truncated(&mut source, &mut magic)?;
        if magic != MAGIC {
            return Err(StoreError::BadMagic);
        }
        let mut version = [0u8; 1];
        read_exact_or_truncated(&mut source, &mut version)?;
        if version[0] != FORMAT_VERSION {
            return Err(StoreError::BadVersion(version[0]));
        }
        let mut count_bytes = [0u8; 8];
        read_exact_or_truncated(&mut source, &mut count_bytes)?;
        let count = u64::from_le_bytes(count_bytes);

        struct RawRecord {
            index: u64,
            offset: u64,
            headword_len: u32,
            definition_len: u32,
        }

        let mut raws = Vec::new();
        let mut prev_index = 0u64;
        let mut expected_offset = 0u64;
        for k in 0..count {
            let file_offset = HEADER_LEN + k * RECORD_LEN;
            let mut buf = [0u8; RECORD_LEN as usize];
            read_exact_or_truncated(&mut source, &mut buf)?;
            let raw = RawRecord {
                index: u64::from_le_bytes(buf[0..8].try_into().unwrap()),
                offset: u64::from_le_bytes(buf[8..16].try_into().unwrap()),
                headword_len: u32::from_le_bytes(buf[16..20].try_into().unwrap()),
                definition_len: u32::from_le_bytes(buf[20..24].try_into().unwrap()),
            };
            // strictly ascending, in range, blobs packed back to back
            if LexIndex::new(raw.index).is_err()
                || raw.index <= prev_index
                || raw.offset != expected_offset
            {
                return Err(StoreError::CorruptRecord(file_offset));
            }
            prev_index = raw.index;
            expected_offset += raw.headword_len as u64 + raw.definition_len as u64;
            raws.push(raw);
        }

        let blob_start = HEADER_LEN + count * RECORD_LEN;
        let mut blob = Vec::new();
        source.read_to_end(&mut blob)?;
        match blob.len() as u64 {
            n if n < expected_offset => return Err(StoreError::TruncatedFile),
            n if n > expected_offset => {
                return Err(StoreError::CorruptRecord(blob_start + expected_offset))
            }
            _ => {}
        }

        let mut entries = HashMap::with_capacity(raws.len());
        for (k, raw) in raws.iter().enumerate() {
            let record_offset = HEADER_LEN + k as u64 * RECORD_LEN;
            let start = raw.offset as usize;
            let mid = start + raw.headword_len as usize;
            let end = mid + raw.definition_len as usize;
            let headword = std::str::from_utf8(&blob[start..mid])
                .map_err(|_| StoreError::CorruptRecord(record_offset))?
                .to_string();
            let definition = std::str::from_utf8(&blob[mid..end])
                .map_err(|_| StoreError::CorruptRecord(record_offset))?
                .to_string();
            let index = LexIndex::new(raw.index).expect("validated above");
            // the keying invariant must survive the disk
            let recoded = RootWord::parse(&headword)
                .map(|r| encode(&r))
                .map_err(|_| StoreError::CorruptRecord(record_offset))?;
            if recoded != index {
                return Err(StoreError::CorruptRecord(record_offset));
            }
            entries.insert(
                raw.index,
                LexiconEntry {
                    index,
                    headword,
                    definition,
                },
            );
        }
        Ok(Lexicon { entries })
    }

    /// Serialize to a file path.
    pub fn save(&self, path: impl AsRef<Path>) -> io::Result<()> {
        let mut writer = BufWriter::new(File::create(path)?);
        self.serialize(&mut writer)?;
        writer.flush()
    }

    /// Deserialize from a file path.
    pub fn load(path: impl AsRef<Path>) -> Result<Self, StoreError> {
        Self::deserialize(BufReader::new(File::open(path)?))
    }
}

fn read_exact_or_truncated<R: Read>(source: &mut R, buf: &mut [u8]) -> Result<(), StoreError> {
    source.read_exact(buf).map_err(|e| {
        if e.kind() == io::ErrorKind::UnexpectedEof {
            StoreError::TruncatedFile
        } else {
            StoreError::Io(e)
        }
    })
}

impl LexiconStats {
    pub fn count_for(&self, r: SyllableLength) -> u64 {
        self.counts[(r.get() - 2) as usize]
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Cursor;

    fn fixture() -> Vec<Record> {
        vec![
            Record::new("عم", "paternal uncle"),
            Record::new("عمر", "a proper name"),
            Record::new("جواد", "a steed"),
        ]
    }

    #[test]
    fn build_keys_by_normalized_headword() {
        let lex = Lexicon::build([Record::new("عمر", "a proper name")]).unwrap();
        assert_eq!(lex.len(), 1);
        let entry = lex.get(LexIndex::new(16353).unwrap()).unwrap();
        assert_eq!(entry.headword, "عمر");
        assert_eq!(entry.definition, "a proper name");
    }

    #[test]
    fn build_empty_is_empty() {
        let lex = Lexicon::build([]).unwrap();
        assert!(lex.is_empty());
        assert_eq!(lex.stats().total(), 0);
    }

    #[test]
    fn duplicate_index_is_a_hard_error() {
        // same root through two surface spellings
        let err = Lexicon::build([
            Record {
                line: 1,
                headword: "عَمَر".into(),
                definition: "x".into(),
            },
            Record {
                line: 2,
                headword: "عمر".into(),
                definition: "y".into(),
            },
        ])
        .unwrap_err();
        match err {
            StoreError::DuplicateIndex {
                line,
                index,
                first,
                second,
            } => {
                assert_eq!(line, 2);
                assert_eq!(index, 16353);
                assert_eq!(first, "عَمَر");
                assert_eq!(second, "عمر");
            }
            other => panic!("expected DuplicateIndex, got {other:?}"),
        }
    }

    #[test]
    fn build_propagates_normalization_errors_with_lines() {
        let err = Lexicon::build([
            Record {
                line: 3,
                headword: "عم".into(),
                definition: String::new(),
            },
            Record {
                line: 7,
                headword: "ءب".into(),
                definition: String::new(),
            },
        ])
        .unwrap_err();
        assert!(
            matches!(err, StoreError::Normalize { line: 7, .. }),
            "{err:?}"
        );
    }

    #[test]
    fn lookup_distinguishes_not_found_from_bad_input() {
        let lex = Lexicon::build(fixture()).unwrap();
        assert_eq!(lex.lookup("عمر").unwrap().definition, "a proper name");
        // fetch through a diacritized spelling of the same root
        assert_eq!(lex.lookup("عَمَر").unwrap().headword, "عمر");
        assert_eq!(
            lex.lookup("سفرجل"),
            Err(LookupError::NotFound(LexIndex::new(13099700).unwrap()))
        );
        assert!(matches!(lex.lookup("ءء"), Err(LookupError::Normalize(_))));
    }

    #[test]
    fn stats_partition_by_length() {
        let lex = Lexicon::build(fixture()).unwrap();
        let stats = lex.stats();
        let get = |r: u8| stats.count_for(SyllableLength::new(r).unwrap());
        assert_eq!(get(2), 1);
        assert_eq!(get(3), 1);
        assert_eq!(get(4), 1);
        assert_eq!(get(5), 0);
        assert_eq!(stats.total(), 3);
    }

    #[test]
    fn serialize_roundtrip() {
        let lex = Lexicon::build(fixture()).unwrap();
        let mut buf = Vec::new();
        lex.serialize(&mut buf).unwrap();
        let back = Lexicon::deserialize(Cursor::new(&buf)).unwrap();
        assert_eq!(back, lex);
    }

    #[test]
    fn deserialize_rejects_bad_magic() {
        let lex = Lexicon::build(fixture()).unwrap();
        let mut buf = Vec::new();
        lex.serialize(&mut buf).unwrap();
        buf[0] = b'X';
        assert!(matches!(
            Lexicon::deserialize(Cursor::new(&buf)),
            Err(StoreError::BadMagic)
        ));
    }

    #[test]
    fn deserialize_rejects_bad_version() {
        let lex = Lexicon::build(fixture()).unwrap();
        let mut buf = Vec::new();
        lex.serialize(&mut buf).unwrap();
        buf[4] = 9;
        assert!(matches!(
            Lexicon::deserialize(Cursor::new(&buf)),
            Err(StoreError::BadVersion(9))
        ));
    }

    #[test]
    fn deserialize_rejects_truncation() {
        let lex = Lexicon::build(fixture()).unwrap();
        let mut buf = Vec::new();
        lex.serialize(&mut buf).unwrap();
        for cut in [2, 8, 20, buf.len() - 1] {
            let short = &buf[..cut];
            assert!(
                matches!(
                    Lexicon::deserialize(Cursor::new(short)),
                    Err(StoreError::TruncatedFile)
                ),
                "cut at {cut}"
            );
        }
    }

    #[test]
    fn deserialize_rejects_unsorted_and_trailing_garbage() {
        let lex = Lexicon::build(fixture()).unwrap();
        let mut buf = Vec::new();
        lex.serialize(&mut buf).unwrap();

        // swap the first two record headers: indices no longer ascend
        let mut swapped = buf.clone();
        let (h, rest) = swapped.split_at_mut(HEADER_LEN as usize + RECORD_LEN as usize);
        h[HEADER_LEN as usize..].swap_with_slice(&mut rest[..RECORD_LEN as usize]);
        assert!(matches!(
            Lexicon::deserialize(Cursor::new(&swapped)),
            Err(StoreError::CorruptRecord(_))
        ));

        let mut padded = buf.clone();
        padded.push(0xFF);
        assert!(matches!(
            Lexicon::deserialize(Cursor::new(&padded)),
            Err(StoreError::CorruptRecord(_))
        ));
    }

    #[test]
    fn deserialize_rejects_headword_index_mismatch() {
        // hand-build a file whose record index disagrees with its headword
        let lex = Lexicon::build([Record::new("عم", "x")]).unwrap();
        let mut buf = Vec::new();
        lex.serialize(&mut buf).unwrap();
        // عم encodes to 673; overwrite the stored index with 674
        buf[HEADER_LEN as usize..HEADER_LEN as usize + 8].copy_from_slice(&674u64.to_le_bytes());
        assert!(matches!(
            Lexicon::deserialize(Cursor::new(&buf)),
            Err(StoreError::CorruptRecord(13))
        ));
    }

    #[test]
    fn parse_tsv_skips_comments_and_tracks_lines() {
        let src = "# fixture\n\nعم\tuncle\nقد\t\nسفرجل\n";
        let records = parse_tsv(Cursor::new(src)).unwrap();
        assert_eq!(records.len(), 3);
        assert_eq!(
            records[0],
            Record {
                line: 3,
                headword: "عم".into(),
                definition: "uncle".into()
            }
        );
        assert_eq!(
            records[1],
            Record {
                line: 4,
                headword: "قد".into(),
                definition: String::new()
            }
        );
        assert_eq!(
            records[2],
            Record {
                line: 5,
                headword: "سفرجل".into(),
                definition: String::new()
            }
        );
    }

    #[test]
    fn parse_tsv_reports_bad_utf8_line() {
        let mut bytes = b"\xd8\xb9\xd9\x85\tok\n".to_vec();
        bytes.extend_from_slice(b"\xff\xfe\tbad\n");
        let err = parse_tsv(Cursor::new(bytes)).unwrap_err();
        assert!(
            matches!(err, StoreError::BadEncoding { line: 2 }),
            "{err:?}"
        );
    }

    #[test]
    fn parse_tsv_handles_crlf() {
        let records = parse_tsv(Cursor::new("عم\tuncle\r\n")).unwrap();
        assert_eq!(records[0].definition, "uncle");
    }

    #[test]
    fn definition_keeps_embedded_tabs() {
        let records = parse_tsv(Cursor::new("عم\ta\tb\n")).unwrap();
        assert_eq!(records[0].definition, "a\tb");
    }
}

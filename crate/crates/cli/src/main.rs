//! farahidi: build, query and verify Al-Farahidi root lexicons.
//!
//! Exit codes are stable across subcommands: 0 success, 1 input or format
//! error, 2 lookup miss. Results go to stdout one record per line;
//! diagnostics go to stderr.

mod verify;

use std::error::Error;
use std::fs::File;
use std::io::BufReader;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use farahidi::alphabet::normalize_text;
use farahidi::combinatorics::{enumerate_permutations, LetterSet};
use farahidi::indexer::{decode, encode, LexIndex, RootWord, SyllableLength};
use farahidi::store::{parse_tsv, Lexicon, LexiconStats, LookupError};

const EXIT_OK: u8 = 0;
const EXIT_ERROR: u8 = 1;
const EXIT_NOT_FOUND: u8 = 2;

#[derive(Parser)]
#[command(
    name = "farahidi",
    version,
    propagate_version = true,
    about = "Arabic root lexicon tool built on the Al-Farahidi letter weights"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a binary lexicon from a headword<TAB>definition TSV file
    Build {
        /// Input TSV file; # lines and blank lines are ignored
        #[arg(long, value_name = "TSV")]
        input: PathBuf,
        /// Output lexicon file
        #[arg(long, value_name = "LEX")]
        output: PathBuf,
    },
    /// Look up a word in a lexicon and print its entry
    Lookup {
        /// The word to look up (normalized before encoding)
        word: String,
        /// Lexicon file to query
        #[arg(long, value_name = "LEX")]
        lexicon: PathBuf,
    },
    /// Print the index and digit vector of a word
    Index { word: String },
    /// Print the word stored at an index and its length class
    Word { index: u64 },
    /// Print every ordering of a word's letters with their indices
    Permute { letters: String },
    /// Print entry counts per word length
    Stats {
        #[arg(long, value_name = "LEX")]
        lexicon: PathBuf,
    },
    /// Check the classical root-count theorem two independent ways
    Verify {
        /// Also enumerate the 4- and 5-letter classes (walks 17.8M tuples)
        #[arg(long)]
        full: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_ERROR,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn run(command: Command) -> Result<u8, Box<dyn Error>> {
    match command {
        Command::Build { input, output } => cmd_build(&input, &output),
        Command::Lookup { word, lexicon } => cmd_lookup(&word, &lexicon),
        Command::Index { word } => cmd_index(&word),
        Command::Word { index } => cmd_word(index),
        Command::Permute { letters } => cmd_permute(&letters),
        Command::Stats { lexicon } => cmd_stats(&lexicon),
        Command::Verify { full } => cmd_verify(full),
    }
}

fn open(path: &Path) -> Result<BufReader<File>, Box<dyn Error>> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|e| format!("{}: {e}", path.display()).into())
}

fn load_lexicon(path: &Path) -> Result<Lexicon, Box<dyn Error>> {
    Lexicon::deserialize(open(path)?).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn print_stats(stats: &LexiconStats) {
    for r in SyllableLength::ALL {
        println!("{r}\t{}", stats.count_for(r));
    }
    println!("total\t{}", stats.total());
}

fn cmd_build(input: &Path, output: &Path) -> Result<u8, Box<dyn Error>> {
    let records = parse_tsv(open(input)?).map_err(|e| format!("{}: {e}", input.display()))?;
    let lexicon = Lexicon::build(records).map_err(|e| format!("{}: {e}", input.display()))?;
    lexicon
        .save(output)
        .map_err(|e| format!("{}: {e}", output.display()))?;
    print_stats(&lexicon.stats());
    Ok(EXIT_OK)
}

fn cmd_lookup(word: &str, lexicon: &Path) -> Result<u8, Box<dyn Error>> {
    let lexicon = load_lexicon(lexicon)?;
    match lexicon.lookup(word) {
        Ok(entry) => {
            println!("{}\t{}\t{}", entry.index, entry.headword, entry.definition);
            Ok(EXIT_OK)
        }
        Err(LookupError::NotFound(index)) => {
            println!("{index}");
            eprintln!("no entry for {word} (index {index})");
            Ok(EXIT_NOT_FOUND)
        }
        Err(e) => Err(e.into()),
    }
}

fn cmd_index(word: &str) -> Result<u8, Box<dyn Error>> {
    let root = RootWord::parse(word)?;
    println!("{}\t{}", encode(&root), root.digits());
    Ok(EXIT_OK)
}

fn cmd_word(index: u64) -> Result<u8, Box<dyn Error>> {
    let index = LexIndex::new(index)?;
    let word = decode(index);
    println!("{word}\t{}", word.syllable_length());
    Ok(EXIT_OK)
}

fn cmd_permute(letters: &str) -> Result<u8, Box<dyn Error>> {
    let set = LetterSet::new(normalize_text(letters)?)?;
    for word in enumerate_permutations(&set) {
        println!("{word}\t{}", encode(&word));
    }
    Ok(EXIT_OK)
}

fn cmd_stats(lexicon: &Path) -> Result<u8, Box<dyn Error>> {
    let lexicon = load_lexicon(lexicon)?;
    print_stats(&lexicon.stats());
    Ok(EXIT_OK)
}

fn cmd_verify(full: bool) -> Result<u8, Box<dyn Error>> {
    let report = verify::run(full);
    print!("{report}");
    Ok(if report.passes() { EXIT_OK } else { EXIT_ERROR })
}

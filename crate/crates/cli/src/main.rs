use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use pseudopower::detect::{find_all, first_hit};
use pseudopower::search::{dfs_search_parallel, SearchReport};
use pseudopower::{
    Algorithm, Alphabet, Budget, Builtin, Error, Involution, Letter, PeriodicityProfile, PseudoPowerHit, Word,
    INFINITY,
};

/// Appends a line to the output buffer.
macro_rules! out {
    ($buf:expr, $($arg:tt)*) => {{
        use std::fmt::Write as _;
        writeln!($buf, $($arg)*).expect("writing to a String");
    }};
}

const EXIT_FREE: u8 = 0;
const EXIT_HIT: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_HALTED: u8 = 3;

/// Detect pseudo-powers of words under antimorphic involutions.
#[derive(Parser)]
#[command(name = "pseudopower", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test whether a word contains a pseudo k-th power (exit 0 free, 1 hit).
    Test(TestArgs),
    /// Print the rmp, lmp and cmp vectors of a word.
    Profile(ProfileArgs),
    /// Print a prefix of a built-in morphic word.
    Generate(GenerateArgs),
    /// Enumerate the trie of pseudo-k-th-power-free words (exit 3 if a budget stops it).
    Search(SearchArgs),
    /// Print the transposition decomposition of an involution.
    Decompose(DecomposeArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Output {
    Json,
    Text,
}

#[derive(Args)]
struct InvolutionArgs {
    /// Alphabet letters in order, e.g. `012` or `ACGT`; use commas for
    /// multi-character letters (`ab,cd`). Defaults to the built-in
    /// morphism's alphabet when `--builtin` is given.
    #[arg(long)]
    alphabet: Option<String>,
    /// Involution as `mir` or `(a,b),(c,d).mir`.
    #[arg(long, default_value = "mir")]
    involution: String,
}

#[derive(Args)]
struct WordArgs {
    /// The word, one character per letter.
    #[arg(long, group = "source")]
    word: Option<String>,
    /// Read the word from a file; letters may be separated by whitespace.
    #[arg(long, group = "source")]
    word_file: Option<PathBuf>,
    /// Use a prefix of a built-in morphic word (seed 0).
    #[arg(long, group = "source", requires = "len")]
    builtin: Option<Builtin>,
    /// Prefix length for `--builtin`.
    #[arg(long)]
    len: Option<usize>,
}

#[derive(Args)]
struct TestArgs {
    #[command(flatten)]
    involution: InvolutionArgs,
    #[command(flatten)]
    word: WordArgs,
    /// Exponent k >= 2.
    #[arg(long)]
    k: usize,
    #[arg(long, value_enum, default_value = "auto")]
    algorithm: AlgorithmArg,
    /// List every occurrence instead of the first.
    #[arg(long)]
    all: bool,
    #[arg(long, value_enum, default_value = "text")]
    output: Output,
}

#[derive(Args)]
struct ProfileArgs {
    #[command(flatten)]
    involution: InvolutionArgs,
    #[command(flatten)]
    word: WordArgs,
    #[arg(long, value_enum, default_value = "json")]
    output: Output,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long)]
    builtin: Builtin,
    #[arg(long)]
    len: usize,
}

#[derive(Args)]
struct SearchArgs {
    #[command(flatten)]
    involution: InvolutionArgs,
    #[arg(long)]
    k: usize,
    /// Do not expand free words of this length.
    #[arg(long)]
    max_depth: Option<usize>,
    /// Stop after counting this many nodes.
    #[arg(long)]
    max_nodes: Option<u64>,
    /// Worker threads; ignored when `--max-nodes` is set.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, value_enum, default_value = "json")]
    output: Output,
}

#[derive(Args)]
struct DecomposeArgs {
    #[command(flatten)]
    involution: InvolutionArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgorithmArg {
    Auto,
    Naive,
    Matrix,
    Linear,
    Quadratic,
}

impl From<AlgorithmArg> for Algorithm {
    fn from(a: AlgorithmArg) -> Self {
        match a {
            AlgorithmArg::Auto => Algorithm::Auto,
            AlgorithmArg::Naive => Algorithm::Naive,
            AlgorithmArg::Matrix => Algorithm::Matrix,
            AlgorithmArg::Linear => Algorithm::Linear,
            AlgorithmArg::Quadratic => Algorithm::Quadratic,
        }
    }
}

#[derive(Debug)]
enum CliError {
    Core(Error),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => e.fmt(f),
            CliError::Usage(msg) => f.write_str(msg),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn parse_alphabet(text: &str) -> CliResult<Arc<Alphabet>> {
    let alphabet = if text.contains(',') {
        Alphabet::new(text.split(',').map(str::trim))?
    } else {
        Alphabet::from_chars(text)?
    };
    Ok(Arc::new(alphabet))
}

fn resolve_involution(args: &InvolutionArgs, builtin: Option<Builtin>) -> CliResult<Involution> {
    let alphabet = match (&args.alphabet, builtin) {
        (Some(text), _) => parse_alphabet(text)?,
        (None, Some(h)) => Arc::clone(h.morphism().alphabet()),
        (None, None) => return Err(CliError::Usage("--alphabet is required".into())),
    };
    Ok(Involution::parse(alphabet, &args.involution)?)
}

fn resolve_word(args: &WordArgs, alphabet: &Arc<Alphabet>) -> CliResult<Word> {
    if let Some(text) = &args.word {
        return Ok(Word::parse(alphabet, text)?);
    }
    if let Some(path) = &args.word_file {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        if alphabet.is_single_char() {
            let compact: String = text.split_whitespace().collect();
            return Ok(Word::parse(alphabet, &compact)?);
        }
        return Ok(Word::from_tokens(alphabet, &text)?);
    }
    if let (Some(h), Some(len)) = (args.builtin, args.len) {
        return Ok(generate(h, len, alphabet)?);
    }
    Err(CliError::Usage("one of --word, --word-file or --builtin is required".into()))
}

/// The length-`len` prefix of `h^ω(0)`, over `alphabet`.
fn generate(h: Builtin, len: usize, alphabet: &Arc<Alphabet>) -> Result<Word, Error> {
    let morphism = h.morphism();
    if len == 0 {
        return Ok(Word::empty(Arc::clone(alphabet)));
    }
    let mut letters = morphism.fixed_point_prefix(0, len)?.into_letters();
    letters.truncate(len);
    if alphabet.size() != morphism.alphabet().size() {
        return Err(Error::AlphabetMismatch);
    }
    Word::from_letters(Arc::clone(alphabet), letters)
}

#[derive(Serialize)]
struct HitJson {
    start: usize,
    block_len: usize,
    k: usize,
    pattern: Vec<&'static str>,
    factor: String,
}

impl HitJson {
    fn new(hit: &PseudoPowerHit, w: &Word) -> Self {
        HitJson {
            start: hit.start,
            block_len: hit.block_len,
            k: hit.k,
            pattern: hit.pattern.iter().map(|t| t.name()).collect(),
            factor: w.factor(hit.start, hit.len()).map(|f| f.to_string()).unwrap_or_default(),
        }
    }
}

fn cmd_test(args: &TestArgs, out: &mut String) -> CliResult<u8> {
    let phi = resolve_involution(&args.involution, args.word.builtin)?;
    let w = resolve_word(&args.word, phi.alphabet())?;
    let algorithm = Algorithm::from(args.algorithm);
    let resolved = algorithm.resolve(args.k, w.len())?;
    let hits = if args.all {
        find_all(&w, &phi, args.k, algorithm)?
    } else {
        first_hit(&w, &phi, args.k, algorithm)?.into_iter().collect()
    };
    let free = hits.is_empty();
    match args.output {
        Output::Json => {
            #[derive(Serialize)]
            struct Report {
                free: bool,
                k: usize,
                length: usize,
                algorithm: &'static str,
                hits: Vec<HitJson>,
            }
            let report = Report {
                free,
                k: args.k,
                length: w.len(),
                algorithm: if args.all { algorithm.name() } else { resolved.name() },
                hits: hits.iter().map(|h| HitJson::new(h, &w)).collect(),
            };
            out!(out, "{}", serde_json::to_string_pretty(&report).expect("serialisable"));
        }
        Output::Text => {
            if free {
                out!(out, "free: no pseudo-power of exponent {} in a word of length {}", args.k, w.len());
            } else {
                for h in &hits {
                    out!(out, "hit: {h}");
                }
            }
        }
    }
    Ok(if free { EXIT_FREE } else { EXIT_HIT })
}

fn finite(v: &[usize]) -> Vec<Option<usize>> {
    v.iter().map(|&x| (x != INFINITY).then_some(x)).collect()
}

fn cmd_profile(args: &ProfileArgs, out: &mut String) -> CliResult<u8> {
    let phi = resolve_involution(&args.involution, args.word.builtin)?;
    let w = resolve_word(&args.word, phi.alphabet())?;
    let p = PeriodicityProfile::compute(&w, &phi)?;
    match args.output {
        Output::Json => {
            #[derive(Serialize)]
            struct Report {
                word_len: usize,
                rmp: Vec<Option<usize>>,
                lmp: Vec<Option<usize>>,
                cmp: Vec<usize>,
            }
            let report = Report {
                word_len: p.word_len,
                rmp: finite(&p.rmp),
                lmp: finite(&p.lmp),
                cmp: p.cmp,
            };
            out!(out, "{}", serde_json::to_string_pretty(&report).expect("serialisable"));
        }
        Output::Text => {
            let show = |v: &[usize]| {
                v.iter()
                    .map(|&x| if x == INFINITY { "inf".to_string() } else { x.to_string() })
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            out!(out, "rmp: {}", show(&p.rmp));
            out!(out, "lmp: {}", show(&p.lmp));
            out!(out, "cmp: {}", show(&p.cmp));
        }
    }
    Ok(EXIT_FREE)
}

fn cmd_generate(args: &GenerateArgs, out: &mut String) -> CliResult<u8> {
    let alphabet = Arc::clone(args.builtin.morphism().alphabet());
    out!(out, "{}", generate(args.builtin, args.len, &alphabet)?);
    Ok(EXIT_FREE)
}

fn cmd_search(args: &SearchArgs, out: &mut String) -> CliResult<u8> {
    let phi = resolve_involution(&args.involution, None)?;
    let budget = Budget {
        max_depth: args.max_depth,
        max_nodes: args.max_nodes,
    };
    let r: SearchReport = dfs_search_parallel(phi.alphabet(), &phi, args.k, budget, args.jobs.max(1))?;
    match args.output {
        Output::Json => {
            #[derive(Serialize)]
            struct Report {
                nodes: u64,
                leaves: u64,
                depth: usize,
                free: u64,
                longest: Vec<String>,
                exhausted: bool,
            }
            let report = Report {
                nodes: r.total_nodes,
                leaves: r.leaf_nodes,
                depth: r.depth,
                free: r.free_words,
                longest: r.longest_free_words.iter().map(ToString::to_string).collect(),
                exhausted: r.exhausted,
            };
            out!(out, "{}", serde_json::to_string_pretty(&report).expect("serialisable"));
        }
        Output::Text => {
            out!(out, "nodes: {}", r.total_nodes);
            out!(out, "leaves: {}", r.leaf_nodes);
            out!(out, "depth: {}", r.depth);
            out!(out, "exhausted: {}", r.exhausted);
            for w in &r.longest_free_words {
                out!(out, "longest: {w}");
            }
        }
    }
    Ok(if r.exhausted { EXIT_FREE } else { EXIT_HALTED })
}

fn letter_set(alphabet: &Alphabet, letters: &[Letter]) -> String {
    let symbols: Vec<&str> = letters.iter().map(|&a| alphabet.symbol(a)).collect();
    format!("{{{}}}", symbols.join(","))
}

fn cmd_decompose(args: &DecomposeArgs, out: &mut String) -> CliResult<u8> {
    let phi = resolve_involution(&args.involution, None)?;
    let class = phi.classify();
    let sigma = phi.alphabet();
    if class.weighted_size() != sigma.size() {
        return Err(CliError::Usage(format!(
            "internal check failed: |Idt| + 2|Trn| = {} but the alphabet has {} letters",
            class.weighted_size(),
            sigma.size()
        )));
    }
    out!(out, 
        "{phi}  Idt={} Trn={}",
        letter_set(sigma, &class.idt),
        letter_set(sigma, &class.trn)
    );
    Ok(EXIT_FREE)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = match &cli.command {
        Command::Test(a) => cmd_test(a, &mut out),
        Command::Profile(a) => cmd_profile(a, &mut out),
        Command::Generate(a) => cmd_generate(a, &mut out),
        Command::Search(a) => cmd_search(a, &mut out),
        Command::Decompose(a) => cmd_decompose(a, &mut out),
    };
    // A closed pipe (`| head`) is not an error worth reporting.
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

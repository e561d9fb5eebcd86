//! The `patwilf` command line. [`run`] does all the work and returns the
//! process exit code; `main` only parses arguments.
//!
//! Exit codes: 0 success, 1 a negative answer (sets distinguished, additivity
//! check failed) or an I/O failure, 2 bad arguments, 3 a request the engines
//! refuse (contract, domain or resource limits), 4 recursion and brute force
//! disagree.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use patwilf_core::mobius::{mobius_poset_oracle, mobius_product_closed};
use patwilf_core::oracle::{check_cap, DEFAULT_ENUMERATION_CAP};
use patwilf_core::perm::block_decompose;
use patwilf_core::recursion::st_poly_rec_sequence;
use patwilf_core::stats::find_dagger_violation;
use patwilf_core::wilf::check_equiv;
use patwilf_core::{CanonicalPatternSet, MemoTable, Permutation, QPolynomial, Statistic};

use crate::cache::{self, resolve_cache_path};
use crate::formats::{
    parse_pattern_list, report_line, search_hit_line, PolyResults, ReportJson, SearchHitJson,
};
use crate::parallel::{par_search_nontrivial, par_st_poly_brute, SharedMemo};
use crate::{Error, StatRegistry};

/// Largest `n_max` accepted by `verify-dagger`.
pub const DAGGER_CHECK_CAP: usize = 11;

#[derive(Debug, Parser)]
#[command(name = "patwilf", version, about = "Statistic-refined enumeration of pattern-avoiding permutations")]
pub struct Cli {
    /// Worker threads for enumeration and search (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print F_n(Π; q) for n = 0..=N.
    Poly(PolyArgs),
    /// Compare two pattern sets under a statistic.
    Equiv(EquivArgs),
    /// Search for nontrivial equivalences {312, π} ≡ {312, π'}.
    Search(SearchArgs),
    /// Split a 312-avoiding permutation into its blocks.
    Decompose {
        perm: String,
    },
    /// Möbius value of the product lattice, closed form and by brute force.
    Mobius {
        /// Comma-separated ranks r_1,...,r_m.
        #[arg(long, value_delimiter = ',', required = true)]
        ranks: Vec<usize>,
    },
    /// Check the additivity property of a statistic up to a size bound.
    VerifyDagger {
        #[arg(long)]
        stat: String,
        #[arg(long, default_value_t = 7)]
        n_max: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Rec,
    Brute,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct CacheArg {
    /// Memo cache file (JSON Lines). Falls back to $PATWILF_CACHE.
    #[arg(long)]
    pub cache: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PolyArgs {
    #[arg(long)]
    pub stat: String,
    /// Pattern list, e.g. `312,1432` or `3,1,2;1,4,3,2`.
    #[arg(long)]
    pub patterns: String,
    #[arg(long)]
    pub n: usize,
    /// Defaults to `rec` when 312 is in the set, `brute` otherwise.
    #[arg(long, value_enum)]
    pub method: Option<MethodArg>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(flatten)]
    pub cache: CacheArg,
}

#[derive(Debug, Args)]
pub struct EquivArgs {
    #[arg(long)]
    pub stat: String,
    #[arg(long)]
    pub left: String,
    #[arg(long)]
    pub right: String,
    #[arg(long, default_value_t = 10)]
    pub max_n: usize,
    /// `text` or `json`.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(flatten)]
    pub cache: CacheArg,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub stat: String,
    #[arg(long, default_value_t = 5)]
    pub max_len: usize,
    #[arg(long, default_value_t = 2)]
    pub max_blocks: usize,
    #[arg(long, default_value_t = 10)]
    pub max_n: usize,
    /// `text` or `json`.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(flatten)]
    pub cache: CacheArg,
}

/// Why a command stopped, with its exit code.
#[derive(Debug)]
enum Failure {
    /// Downstream reader went away; stop quietly.
    PipeClosed,
    Negative,
    Usage(String),
    Refused(String),
    Mismatch(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::PipeClosed => 0,
            Failure::Negative | Failure::Io(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Refused(_) => 3,
            Failure::Mismatch(_) => 4,
        }
    }
}

impl From<patwilf_core::Error> for Failure {
    fn from(e: patwilf_core::Error) -> Self {
        use patwilf_core::Error as E;
        match e {
            E::Parse { .. } | E::Argument(_) | E::UnknownStatistic(_) => Failure::Usage(e.to_string()),
            _ => Failure::Refused(e.to_string()),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Core(c) => c.into(),
            Error::Io { .. } => Failure::Io(e.to_string()),
            Error::Duplicate(_) | Error::NotAdditive { .. } => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Failure::PipeClosed;
        }
        Failure::Io(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

/// Runs one command, writing data to `out` and diagnostics to `err`.
pub fn run(cli: Cli, registry: &StatRegistry, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if let Some(k) = cli.threads {
        if k == 0 {
            let _ = writeln!(err, "error: --threads must be at least 1");
            return 2;
        }
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
    }
    let result = match cli.command {
        Command::Poly(a) => poly(a, registry, out, err),
        Command::Equiv(a) => equiv(a, registry, out, err),
        Command::Search(a) => search(a, registry, out, err),
        Command::Decompose { perm } => decompose(&perm, out),
        Command::Mobius { ranks } => mobius(&ranks, out),
        Command::VerifyDagger { stat, n_max } => verify(&stat, n_max, registry, out),
    };
    match result {
        Ok(()) => 0,
        Err(f) => {
            match &f {
                Failure::Negative | Failure::PipeClosed => {}
                Failure::Usage(m) | Failure::Refused(m) | Failure::Mismatch(m) | Failure::Io(m) => {
                    let _ = writeln!(err, "error: {m}");
                }
            }
            f.code()
        }
    }
}

struct CacheSession {
    path: Option<PathBuf>,
    memo: SharedMemo,
}

impl CacheSession {
    fn open(arg: &CacheArg, err: &mut dyn Write) -> Result<Self, Failure> {
        let path = resolve_cache_path(arg.cache.as_deref());
        let table = match &path {
            Some(p) => {
                let (table, summary) = cache::load(p)?;
                if summary.discarded > 0 {
                    writeln!(
                        err,
                        "warning: discarded {} invalid cache entries from {}",
                        summary.discarded,
                        p.display()
                    )?;
                }
                table
            }
            None => MemoTable::new(),
        };
        Ok(Self {
            path,
            memo: SharedMemo::from_table(&table),
        })
    }

    fn close(self) -> Outcome {
        if let Some(p) = &self.path {
            cache::save(p, &self.memo.to_table())?;
        }
        Ok(())
    }
}

fn contains_312(patterns: &[Permutation]) -> bool {
    patterns.iter().any(|p| p.values() == [3, 1, 2])
}

fn brute_sequence(n: usize, patterns: &[Permutation], stat: &Statistic) -> Result<Vec<QPolynomial>, Failure> {
    check_cap(n, DEFAULT_ENUMERATION_CAP)?;
    (0..=n)
        .map(|k| par_st_poly_brute(k, patterns, stat).map_err(Failure::from))
        .collect()
}

fn poly(a: PolyArgs, registry: &StatRegistry, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let stat = registry.get(&a.stat)?;
    let patterns = parse_pattern_list(&a.patterns)?;
    let method = a.method.unwrap_or(if contains_312(&patterns) {
        MethodArg::Rec
    } else {
        MethodArg::Brute
    });

    let rec = if method == MethodArg::Brute {
        None
    } else {
        let session = CacheSession::open(&a.cache, err)?;
        let set = CanonicalPatternSet::new(patterns.clone())?;
        let polys = st_poly_rec_sequence(a.n, &set, &stat, &session.memo)?;
        session.close()?;
        Some(polys)
    };
    let brute = if method == MethodArg::Rec {
        None
    } else {
        Some(brute_sequence(a.n, &patterns, &stat)?)
    };
    if let (Some(r), Some(b)) = (&rec, &brute) {
        if let Some(n) = (0..=a.n).find(|&n| r[n] != b[n]) {
            return Err(Failure::Mismatch(format!(
                "methods disagree at n={n}: recursion {} vs brute force {}",
                r[n], b[n]
            )));
        }
    }
    let polys = rec.or(brute).expect("at least one method ran");
    let results = PolyResults::new(stat.name(), &patterns, &polys);
    match a.format {
        Format::Text => out.write_all(results.to_text().as_bytes())?,
        Format::Csv => out.write_all(results.to_csv().as_bytes())?,
        Format::Json => writeln!(out, "{}", serde_json::to_string(&results).expect("serializable"))?,
    }
    Ok(())
}

fn no_csv(format: Format) -> Outcome {
    if format == Format::Csv {
        return Err(Failure::Usage("csv output is only available for `poly`".into()));
    }
    Ok(())
}

fn equiv(a: EquivArgs, registry: &StatRegistry, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    no_csv(a.format)?;
    let stat = registry.get(&a.stat)?;
    let left = parse_pattern_list(&a.left)?;
    let right = parse_pattern_list(&a.right)?;
    let session = CacheSession::open(&a.cache, err)?;
    let report = check_equiv(&left, &right, &stat, a.max_n, &session.memo)?;
    session.close()?;
    match a.format {
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string(&ReportJson::from(&report)).expect("serializable")
        )?,
        _ => writeln!(out, "{}", report_line(&report))?,
    }
    if report.verdict.is_equivalent() {
        Ok(())
    } else {
        Err(Failure::Negative)
    }
}

fn search(a: SearchArgs, registry: &StatRegistry, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    no_csv(a.format)?;
    let stat = registry.get(&a.stat)?;
    let session = CacheSession::open(&a.cache, err)?;
    let hits = par_search_nontrivial(&stat, a.max_len, a.max_blocks, a.max_n, &session.memo)?;
    session.close()?;
    match a.format {
        Format::Json => {
            let rows: Vec<SearchHitJson> = hits.iter().map(SearchHitJson::from).collect();
            writeln!(out, "{}", serde_json::to_string(&rows).expect("serializable"))?;
        }
        _ => {
            for hit in &hits {
                writeln!(out, "{}", search_hit_line(hit))?;
            }
        }
    }
    writeln!(err, "{} classes found", hits.len())?;
    Ok(())
}

fn decompose(perm: &str, out: &mut dyn Write) -> Outcome {
    let pi: Permutation = perm.parse()?;
    let blocks = block_decompose(&pi)?;
    let names: Vec<String> = blocks.blocks().iter().map(ToString::to_string).collect();
    if names.is_empty() {
        writeln!(out, "blocks:")?;
    } else {
        writeln!(out, "blocks: {}", names.join(", "))?;
    }
    Ok(())
}

fn mobius(ranks: &[usize], out: &mut dyn Write) -> Outcome {
    let closed = mobius_product_closed(ranks)?;
    let oracle = mobius_poset_oracle(ranks)?;
    writeln!(out, "closed={closed} oracle={oracle}")?;
    if closed != oracle {
        return Err(Failure::Mismatch("closed form and poset computation disagree".into()));
    }
    Ok(())
}

fn verify(name: &str, n_max: usize, registry: &StatRegistry, out: &mut dyn Write) -> Outcome {
    let stat = registry.get(name)?;
    if n_max > DAGGER_CHECK_CAP {
        return Err(Failure::Refused(format!(
            "n_max {n_max} exceeds the check cap {DAGGER_CHECK_CAP}"
        )));
    }
    match find_dagger_violation(&stat, n_max) {
        None => {
            writeln!(out, "PASS {name} up to n={n_max}")?;
            Ok(())
        }
        Some(v) => {
            writeln!(out, "FAIL {name}: {v}")?;
            Err(Failure::Negative)
        }
    }
}

//! Memo tables persisted as JSON Lines, one entry per line:
//!
//! ```text
//! {"stat":"inv","patterns":["312","1432"],"n":4,"coeffs":["1","3","4","3","2"]}
//! ```
//!
//! Loading checks each entry and skips the ones that cannot be right: bad
//! syntax, a pattern list that is not in canonical form, negative
//! coefficients, trailing zeros, or more permutations than `n!`.

use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use patwilf_core::{CanonicalPatternSet, Memo, MemoKey, MemoTable, Permutation, QPolynomial};
use serde::{Deserialize, Serialize};

use crate::formats::{coeff_strings, pattern_strings, poly_from_strings};
use crate::Error;

/// Environment variable naming a cache file when `--cache` is absent.
pub const CACHE_ENV: &str = "PATWILF_CACHE";

#[derive(Debug, Clone, Serialize, Deserialize)]
struct Entry {
    stat: String,
    patterns: Vec<String>,
    n: usize,
    coeffs: Vec<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LoadSummary {
    pub loaded: usize,
    pub discarded: usize,
}

/// `--cache` wins over the environment; neither means no cache.
pub fn resolve_cache_path(flag: Option<&Path>) -> Option<PathBuf> {
    flag.map(Path::to_path_buf).or_else(|| {
        std::env::var_os(CACHE_ENV)
            .filter(|v| !v.is_empty())
            .map(PathBuf::from)
    })
}

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

fn is_canonical(patterns: &[Permutation]) -> bool {
    let matches = |set: patwilf_core::Result<CanonicalPatternSet>| {
        set.is_ok_and(|s| s.patterns() == patterns)
    };
    matches(CanonicalPatternSet::new(patterns.iter().cloned()))
        || matches(CanonicalPatternSet::unreduced(patterns.iter().cloned()))
}

fn decode(line: &str) -> Option<(MemoKey, QPolynomial)> {
    let entry: Entry = serde_json::from_str(line).ok()?;
    if entry.stat.is_empty() {
        return None;
    }
    let patterns = entry
        .patterns
        .iter()
        .map(|p| p.parse())
        .collect::<Result<Vec<Permutation>, _>>()
        .ok()?;
    if !is_canonical(&patterns) {
        return None;
    }
    let poly = poly_from_strings(&entry.coeffs).ok()?;
    // normalization dropped something: the entry had trailing zeros
    if poly.coeffs().len() != entry.coeffs.len() {
        return None;
    }
    if !poly.has_nonnegative_coeffs() || poly.eval_at_one() > factorial(entry.n) {
        return None;
    }
    let key = MemoKey {
        stat: entry.stat,
        patterns,
        n: entry.n,
    };
    Some((key, poly))
}

/// Reads a cache file. A missing file is an empty cache.
pub fn load(path: &Path) -> Result<(MemoTable, LoadSummary), Error> {
    let io_err = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    let mut table = MemoTable::new();
    let mut summary = LoadSummary::default();
    let file = match fs::File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok((table, summary)),
        Err(e) => return Err(io_err(e)),
    };
    for line in BufReader::new(file).lines() {
        let line = line.map_err(io_err)?;
        if line.trim().is_empty() {
            continue;
        }
        match decode(&line) {
            Some((key, poly)) => {
                table.record(key, poly);
                summary.loaded += 1;
            }
            None => summary.discarded += 1,
        }
    }
    Ok((table, summary))
}

/// Writes every entry, replacing the file atomically.
pub fn save(path: &Path, table: &MemoTable) -> Result<(), Error> {
    let io_err = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    {
        let mut out = BufWriter::new(fs::File::create(&tmp).map_err(io_err)?);
        for (key, poly) in table.iter() {
            let entry = Entry {
                stat: key.stat.clone(),
                patterns: pattern_strings(&key.patterns),
                n: key.n,
                coeffs: coeff_strings(poly),
            };
            let line = serde_json::to_string(&entry).expect("cache entries serialize");
            writeln!(out, "{line}").map_err(io_err)?;
        }
        out.flush().map_err(io_err)?;
    }
    fs::rename(&tmp, path).map_err(io_err)
}

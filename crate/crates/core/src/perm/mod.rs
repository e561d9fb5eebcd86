//! Permutations in one-line notation and the operations the recursion needs.

mod blocks;
mod containment;
mod d4;

use alloc::string::ToString;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

pub use blocks::{block_decompose, prefix_pattern, suffix_pattern, BlockDecomposition};
pub use containment::{avoids, avoids_all, contains, PatternMatcher};
pub use d4::{transpose, D4Element};

/// Longest permutation representable with `u8` entries.
pub const MAX_LEN: usize = u8::MAX as usize;

/// A permutation of `{1, …, n}` in one-line notation. The empty permutation
/// (`n = 0`) is written `e`.
///
/// Ordering is shortlex: shorter permutations first, then lexicographic.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn new(values: Vec<u8>) -> Result<Self> {
        if values.len() > MAX_LEN {
            return Err(Error::Argument(alloc::format!(
                "permutations are limited to length {MAX_LEN}"
            )));
        }
        let mut seen = alloc::vec![false; values.len()];
        for &v in &values {
            let idx = usize::from(v).wrapping_sub(1);
            if idx >= values.len() || seen[idx] {
                return Err(Error::Argument(alloc::format!(
                    "{values:?} is not a permutation of 1..={}",
                    values.len()
                )));
            }
            seen[idx] = true;
        }
        Ok(Self(values))
    }

    /// Caller guarantees `values` is a permutation of `1..=values.len()`.
    pub(crate) fn from_vec_unchecked(values: Vec<u8>) -> Self {
        debug_assert!(Self::new(values.clone()).is_ok());
        Self(values)
    }

    pub const fn empty() -> Self {
        Self(Vec::new())
    }

    /// `12…n`.
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_LEN);
        Self((1..=n as u8).collect())
    }

    /// `n…21`.
    pub fn decreasing(n: usize) -> Self {
        assert!(n <= MAX_LEN);
        Self((1..=n as u8).rev().collect())
    }

    /// The permutation order-isomorphic to a sequence of distinct values.
    pub fn standardize(seq: &[u8]) -> Self {
        let mut order: Vec<usize> = (0..seq.len()).collect();
        order.sort_unstable_by_key(|&i| seq[i]);
        let mut out = alloc::vec![0u8; seq.len()];
        for (rank, &i) in order.iter().enumerate() {
            out[i] = (rank + 1) as u8;
        }
        Self(out)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[u8] {
        &self.0
    }

    pub fn into_values(self) -> Vec<u8> {
        self.0
    }

    pub fn inverse(&self) -> Self {
        let mut out = alloc::vec![0u8; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            out[usize::from(v) - 1] = (i + 1) as u8;
        }
        Self(out)
    }

    /// `π_* = 21[π, 1]`: the matrix of `π` with one extra box in the lower
    /// right corner.
    pub fn star(&self) -> Self {
        let mut out: Vec<u8> = self.0.iter().map(|&v| v + 1).collect();
        out.push(1);
        Self(out)
    }

    /// All permutations of length `n` in lexicographic order.
    pub fn all(n: usize) -> LexPermutations {
        LexPermutations::new(n)
    }

    /// Compact form (`32415`) when every entry is a single digit, else
    /// comma-separated.
    fn is_compact(&self) -> bool {
        self.len() <= 9
    }
}

impl Ord for Permutation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("e");
        }
        if self.is_compact() {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            return Ok(());
        }
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_err = |reason| Error::Parse {
            input: s.to_string(),
            reason,
        };
        if s == "e" || s == "ε" {
            return Ok(Self::empty());
        }
        if s.is_empty() {
            return Err(parse_err("empty input (write `e` for the empty permutation)"));
        }
        let values: Vec<u8> = if s.contains(',') {
            s.split(',')
                .map(|tok| tok.trim().parse::<u8>().map_err(|_| parse_err("bad entry")))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| match c.to_digit(10) {
                    Some(d) if d > 0 => Ok(d as u8),
                    _ => Err(parse_err("compact form takes digits 1-9")),
                })
                .collect::<Result<_>>()?
        };
        Self::new(values).map_err(|_| parse_err("entries must be exactly 1..=n, each once"))
    }
}

/// Inflation `π[σ_1, …, σ_k]`: the matrix of each `σ_i` placed left to right,
/// stacked vertically in the relative order of `π`.
pub fn inflate(pi: &Permutation, parts: &[Permutation]) -> Result<Permutation> {
    if pi.len() != parts.len() {
        return Err(Error::Argument(alloc::format!(
            "inflation of a length-{} permutation needs {} parts, got {}",
            pi.len(),
            pi.len(),
            parts.len()
        )));
    }
    let total: usize = parts.iter().map(Permutation::len).sum();
    if total > MAX_LEN {
        return Err(Error::Argument(alloc::format!(
            "inflated length {total} exceeds {MAX_LEN}"
        )));
    }
    // offset[i] = sizes of the parts placed below part i
    let mut offset = alloc::vec![0usize; parts.len()];
    for (i, &vi) in pi.values().iter().enumerate() {
        offset[i] = pi
            .values()
            .iter()
            .zip(parts)
            .filter(|(&vj, _)| vj < vi)
            .map(|(_, p)| p.len())
            .sum();
    }
    let mut out = Vec::with_capacity(total);
    for (part, off) in parts.iter().zip(offset) {
        out.extend(part.values().iter().map(|&v| v + off as u8));
    }
    Ok(Permutation::from_vec_unchecked(out))
}

/// `π_* = 21[π, 1]`.
pub fn star(pi: &Permutation) -> Permutation {
    pi.star()
}

/// `ι_r[σ_1, …, σ_r]`: the blocks laid out along the main diagonal.
pub fn direct_sum<'a, I>(parts: I) -> Permutation
where
    I: IntoIterator<Item = &'a Permutation>,
{
    let mut out = Vec::new();
    for part in parts {
        let off = out.len() as u8;
        out.extend(part.values().iter().map(|&v| v + off));
    }
    Permutation::from_vec_unchecked(out)
}

/// Lexicographic successor iteration over `S_n`, optionally restricted to a
/// fixed first entry.
#[derive(Debug, Clone)]
pub struct LexPermutations {
    current: Option<Vec<u8>>,
    pinned_first: Option<u8>,
}

impl LexPermutations {
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_LEN);
        Self {
            current: Some((1..=n as u8).collect()),
            pinned_first: None,
        }
    }

    /// Permutations of length `n` whose first entry is `first`, in
    /// lexicographic order. Empty when `first` is not in `1..=n`.
    pub fn with_first(n: usize, first: usize) -> Self {
        assert!(n <= MAX_LEN);
        if first == 0 || first > n {
            return Self {
                current: None,
                pinned_first: None,
            };
        }
        let first = first as u8;
        let mut start = alloc::vec![first];
        start.extend((1..=n as u8).filter(|&v| v != first));
        Self {
            current: Some(start),
            pinned_first: Some(first),
        }
    }
}

impl Iterator for LexPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.current.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ)
            && self.pinned_first.is_none_or(|f| succ.first() == Some(&f))
        {
            self.current = Some(succ);
        }
        Some(Permutation::from_vec_unchecked(current))
    }
}

/// Rearranges `seq` into its lexicographic successor. Returns `false` (and
/// leaves `seq` unchanged) when `seq` is the last arrangement.
pub fn next_permutation(seq: &mut [u8]) -> bool {
    let n = seq.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && seq[i - 1] >= seq[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while seq[j] <= seq[i - 1] {
        j -= 1;
    }
    seq.swap(i - 1, j);
    seq[i..].reverse();
    true
}

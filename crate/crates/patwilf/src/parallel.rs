//! Thread-parallel enumeration and a memo table shared between threads.

use std::collections::HashMap;
use std::sync::RwLock;

use patwilf_core::oracle::{self, check_cap, DEFAULT_ENUMERATION_CAP};
use patwilf_core::wilf::{self, SearchHit};
use patwilf_core::{Memo, MemoKey, MemoTable, Permutation, QPolynomial, Result, Statistic};
use rayon::prelude::*;

/// Memo table with concurrent lookups and serialized inserts. Two threads
/// racing to insert the same key store equal values, so the first wins.
#[derive(Debug, Default)]
pub struct SharedMemo {
    inner: RwLock<HashMap<MemoKey, QPolynomial>>,
}

impl SharedMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_table(table: &MemoTable) -> Self {
        let map = table.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        Self {
            inner: RwLock::new(map),
        }
    }

    pub fn to_table(&self) -> MemoTable {
        let mut table = MemoTable::new();
        table.extend(
            self.inner
                .read()
                .unwrap()
                .iter()
                .map(|(k, v)| (k.clone(), v.clone())),
        );
        table
    }

    pub fn len(&self) -> usize {
        self.inner.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl Memo for &SharedMemo {
    fn lookup(&self, key: &MemoKey) -> Option<QPolynomial> {
        self.inner.read().unwrap().get(key).cloned()
    }

    fn record(&mut self, key: MemoKey, value: QPolynomial) {
        self.inner.write().unwrap().entry(key).or_insert(value);
    }
}

fn firsts(n: usize) -> Vec<usize> {
    if n == 0 {
        vec![0]
    } else {
        (1..=n).collect()
    }
}

/// `S_n(Π)` in lexicographic order, one task per first entry.
pub fn par_avoiders(n: usize, patterns: &[Permutation]) -> Result<Vec<Permutation>> {
    check_cap(n, DEFAULT_ENUMERATION_CAP)?;
    let chunks: Vec<Vec<Permutation>> = firsts(n)
        .into_par_iter()
        .map(|first| oracle::avoiders_with_first(n, first, patterns))
        .collect();
    Ok(chunks.concat())
}

/// Brute-force polynomials for several statistics; chunk results are
/// merged by polynomial addition.
pub fn par_st_polys_brute(
    n: usize,
    patterns: &[Permutation],
    stats: &[&Statistic],
) -> Result<Vec<QPolynomial>> {
    check_cap(n, DEFAULT_ENUMERATION_CAP)?;
    let zero = || vec![QPolynomial::zero(); stats.len()];
    Ok(firsts(n)
        .into_par_iter()
        .map(|first| {
            oracle::stat_counts_with_first(n, first, patterns, stats)
                .iter()
                .map(|c| QPolynomial::from_counts(c))
                .collect::<Vec<_>>()
        })
        .reduce(zero, |a, b| a.into_iter().zip(b).map(|(x, y)| x + y).collect()))
}

pub fn par_st_poly_brute(n: usize, patterns: &[Permutation], stat: &Statistic) -> Result<QPolynomial> {
    Ok(par_st_polys_brute(n, patterns, &[stat])?.remove(0))
}

/// [`wilf::search_nontrivial`] with candidates verified in parallel. Output
/// order matches the sequential search.
pub fn par_search_nontrivial(
    stat: &Statistic,
    max_pattern_len: usize,
    max_blocks: usize,
    max_n: usize,
    memo: &SharedMemo,
) -> Result<Vec<SearchHit>> {
    wilf::check_search_budget(stat, max_n)?;
    let candidates = wilf::search_candidates(stat, max_pattern_len, max_blocks)?;
    let verified: Vec<Option<SearchHit>> = candidates
        .par_iter()
        .map(|c| wilf::verify_candidate(c, stat, max_n, memo))
        .collect::<Result<_>>()?;
    Ok(verified.into_iter().flatten().collect())
}

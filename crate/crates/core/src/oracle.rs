//! Brute-force ground truth: enumerate `S_n`, keep the permutations that
//! avoid every pattern, and sum `q^st(σ)` over them.
//!
//! The reference enumeration walks `S_n` in lexicographic order by the
//! successor rule and filters. Enumeration splits cleanly by first entry
//! ([`avoiders_with_first`]) so callers with threads can fan out.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::perm::{next_permutation, Permutation, PatternMatcher};
use crate::qpoly::QPolynomial;
use crate::stats::Statistic;

pub const DEFAULT_ENUMERATION_CAP: usize = 11;

pub fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    Ok(())
}

/// Matchers for a pattern set, shortest pattern first.
pub fn matchers(patterns: &[Permutation]) -> Vec<PatternMatcher> {
    let mut sorted: Vec<&Permutation> = patterns.iter().collect();
    sorted.sort_by_key(|p| p.len());
    sorted.into_iter().map(PatternMatcher::new).collect()
}

fn avoids_matchers(text: &[u8], matchers: &[PatternMatcher]) -> bool {
    !matchers.iter().any(|m| m.occurs_in(text))
}

/// Visits every `σ ∈ S_n` with `σ(1) = first` that avoids all matchers, in
/// lexicographic order. `first = 0` means no restriction.
fn visit_avoiders<F>(n: usize, first: usize, matchers: &[PatternMatcher], mut visit: F)
where
    F: FnMut(&[u8]),
{
    let mut buf: Vec<u8> = if first == 0 {
        (1..=n as u8).collect()
    } else {
        if first > n {
            return;
        }
        let mut b = alloc::vec![first as u8];
        b.extend((1..=n as u8).filter(|&v| usize::from(v) != first));
        b
    };
    loop {
        if avoids_matchers(&buf, matchers) {
            visit(&buf);
        }
        if !next_permutation(&mut buf) || (first != 0 && usize::from(buf[0]) != first) {
            break;
        }
    }
}

/// `S_n(Π)` in lexicographic order, with the default cap.
pub fn avoiders(n: usize, patterns: &[Permutation]) -> Result<Vec<Permutation>> {
    avoiders_with_cap(n, patterns, DEFAULT_ENUMERATION_CAP)
}

pub fn avoiders_with_cap(n: usize, patterns: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    check_cap(n, cap)?;
    let ms = matchers(patterns);
    let mut out = Vec::new();
    visit_avoiders(n, 0, &ms, |s| out.push(Permutation::from_vec_unchecked(s.to_vec())));
    Ok(out)
}

/// The avoiders with `σ(1) = first`; for `n = 0` use `first = 0`. No cap is
/// applied, callers check it.
pub fn avoiders_with_first(n: usize, first: usize, patterns: &[Permutation]) -> Vec<Permutation> {
    let ms = matchers(patterns);
    let mut out = Vec::new();
    if n == 0 && first != 0 {
        return out;
    }
    visit_avoiders(n, first, &ms, |s| out.push(Permutation::from_vec_unchecked(s.to_vec())));
    out
}

/// Distribution counts `counts[stat][value]` over the avoiders with the
/// given first entry (`0` = all).
pub fn stat_counts_with_first(
    n: usize,
    first: usize,
    patterns: &[Permutation],
    stats: &[&Statistic],
) -> Vec<Vec<u64>> {
    let ms = matchers(patterns);
    let mut counts = alloc::vec![Vec::new(); stats.len()];
    if n == 0 && first != 0 {
        return counts;
    }
    let mut scratch = Permutation::empty();
    visit_avoiders(n, first, &ms, |s| {
        scratch = Permutation::from_vec_unchecked(s.to_vec());
        for (stat, c) in stats.iter().zip(counts.iter_mut()) {
            let v = stat.eval(&scratch);
            if c.len() <= v {
                c.resize(v + 1, 0);
            }
            c[v] += 1;
        }
    });
    counts
}

/// Alternative generator: grow `S_n(Π)` from `S_{n-1}(Π)` by inserting `n`
/// at every position. Avoidance classes are closed under deleting the
/// largest entry, so nothing is missed. Returned in lexicographic order.
pub fn avoiders_by_extension(n: usize, patterns: &[Permutation]) -> Result<Vec<Permutation>> {
    check_cap(n, DEFAULT_ENUMERATION_CAP)?;
    let ms = matchers(patterns);
    let mut level: Vec<Vec<u8>> = if avoids_matchers(&[], &ms) {
        alloc::vec![Vec::new()]
    } else {
        Vec::new()
    };
    for len in 1..=n {
        let mut next = Vec::new();
        for parent in &level {
            for pos in 0..=parent.len() {
                let mut child = parent.clone();
                child.insert(pos, len as u8);
                if avoids_matchers(&child, &ms) {
                    next.push(child);
                }
            }
        }
        level = next;
    }
    level.sort_unstable();
    Ok(level.into_iter().map(Permutation::from_vec_unchecked).collect())
}

/// `Σ q^st(σ)` over a list of permutations.
pub fn st_poly_of(perms: &[Permutation], stat: &Statistic) -> QPolynomial {
    let mut counts: Vec<u64> = Vec::new();
    for sigma in perms {
        let v = stat.eval(sigma);
        if counts.len() <= v {
            counts.resize(v + 1, 0);
        }
        counts[v] += 1;
    }
    QPolynomial::from_counts(&counts)
}

/// `F_n(Π; q)` by exhaustive enumeration.
pub fn st_poly_brute(n: usize, patterns: &[Permutation], stat: &Statistic) -> Result<QPolynomial> {
    Ok(st_polys_brute(n, patterns, &[stat])?.remove(0))
}

/// Several statistics over one enumeration of `S_n(Π)`.
pub fn st_polys_brute(n: usize, patterns: &[Permutation], stats: &[&Statistic]) -> Result<Vec<QPolynomial>> {
    check_cap(n, DEFAULT_ENUMERATION_CAP)?;
    Ok(stat_counts_with_first(n, 0, patterns, stats)
        .iter()
        .map(|c| QPolynomial::from_counts(c))
        .collect())
}

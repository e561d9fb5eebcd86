//! st-Wilf equivalence: checking, trivial witnesses, and the construction of
//! equivalent pairs by transposing blocks.
//!
//! If `{312, π_i}` and `{312, π'_i}` are st-Wilf equivalent for every `i`,
//! then so are `{312, ι_r[(π_1)_*, …]}` and `{312, ι_r[(π'_1)_*, …]}`. For a
//! statistic that is invariant under transposition on 312-avoiders (`inv`,
//! `des`) each `π'_i` may be `π_i` or `π_i^t`, which routinely produces pairs
//! no symmetry of the square relates.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::oracle::{self, DEFAULT_ENUMERATION_CAP};
use crate::perm::{avoids, contains, direct_sum, transpose, D4Element, Permutation};
use crate::qpoly::QPolynomial;
use crate::recursion::{st_poly_rec_sequence, CanonicalPatternSet, Memo};
use crate::stats::Statistic;

pub const SEARCH_MAX_PATTERN_LEN: usize = 8;
pub const SEARCH_MAX_N: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Polynomials agree for every `n ≤ max_n`.
    EquivalentUpTo(usize),
    /// Smallest `n` where they differ.
    DistinguishedAt(usize),
}

impl Verdict {
    pub fn is_equivalent(self) -> bool {
        matches!(self, Verdict::EquivalentUpTo(_))
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::EquivalentUpTo(n) => write!(f, "EQUIVALENT up to n={n}"),
            Verdict::DistinguishedAt(n) => write!(f, "DISTINGUISHED at n={n}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Recursion,
    BruteForce,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerN {
    pub n: usize,
    pub left: QPolynomial,
    pub right: QPolynomial,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub left: Vec<Permutation>,
    pub right: Vec<Permutation>,
    pub stat: String,
    pub max_n: usize,
    pub method: Method,
    pub per_n: Vec<PerN>,
    pub verdict: Verdict,
    /// A statistic-preserving symmetry mapping `left` onto `right`.
    pub trivial_witness: Option<D4Element>,
    /// Set when the pair comes from the block-transposition construction for
    /// a statistic where that construction is a theorem; `verdict` still only
    /// covers `n ≤ max_n`.
    pub corollary_guaranteed: bool,
}

impl EquivalenceReport {
    pub fn is_nontrivial_equivalence(&self) -> bool {
        self.verdict.is_equivalent() && self.trivial_witness.is_none()
    }
}

fn sorted(patterns: &[Permutation]) -> Vec<Permutation> {
    let mut v = patterns.to_vec();
    v.sort();
    v.dedup();
    v
}

/// Minimal members of a pattern set. Two sets have the same avoiders for
/// every `n` iff their bases coincide.
pub fn basis(patterns: &[Permutation]) -> Vec<Permutation> {
    let all = sorted(patterns);
    all.iter()
        .filter(|p| !all.iter().any(|q| q != *p && contains(p, q)))
        .cloned()
        .collect()
}

fn image(f: D4Element, patterns: &[Permutation]) -> Vec<Permutation> {
    let mut v: Vec<Permutation> = patterns.iter().map(|p| f.apply(p)).collect();
    v.sort();
    v
}

/// First element of `group` carrying the class of `left` onto the class of
/// `right`.
pub fn trivial_witness_in(
    left: &[Permutation],
    right: &[Permutation],
    group: &[D4Element],
) -> Option<D4Element> {
    let (l, r) = (basis(left), basis(right));
    group.iter().copied().find(|&f| image(f, &l) == r)
}

/// Searches the symmetries that preserve `stat` (for `inv`: `R0, R180, r_-1,
/// r_1`; for `des`: `R0, R180`).
pub fn trivial_witness(
    left: &[Permutation],
    right: &[Permutation],
    stat: &Statistic,
) -> Option<D4Element> {
    trivial_witness_in(left, right, stat.symmetries())
}

fn sequence<M: Memo>(
    patterns: &[Permutation],
    stat: &Statistic,
    max_n: usize,
    method: Method,
    memo: M,
) -> Result<(Vec<Permutation>, Vec<QPolynomial>)> {
    match method {
        Method::Recursion => {
            let set = CanonicalPatternSet::new(patterns.iter().cloned())?;
            let seq = st_poly_rec_sequence(max_n, &set, stat, memo)?;
            Ok((set.patterns().to_vec(), seq))
        }
        Method::BruteForce => {
            let seq = (0..=max_n)
                .map(|n| oracle::st_poly_brute(n, patterns, stat))
                .collect::<Result<_>>()?;
            Ok((sorted(patterns), seq))
        }
    }
}

fn has_312(patterns: &[Permutation]) -> bool {
    patterns.iter().any(|p| p.values() == [3, 1, 2])
}

/// Compares `F_n(left)` and `F_n(right)` for `n = 0..=max_n`. Uses the
/// recursion when both sets contain 312 and the statistic is additive,
/// brute force otherwise (within the enumeration cap).
pub fn check_equiv<M: Memo>(
    left: &[Permutation],
    right: &[Permutation],
    stat: &Statistic,
    max_n: usize,
    mut memo: M,
) -> Result<EquivalenceReport> {
    let method = if has_312(left) && has_312(right) && stat.is_additive() {
        Method::Recursion
    } else if max_n <= DEFAULT_ENUMERATION_CAP {
        Method::BruteForce
    } else {
        return Err(Error::Contract(alloc::format!(
            "recursion needs 312 in both sets and an additive statistic; \
             brute force is capped at n = {DEFAULT_ENUMERATION_CAP}"
        )));
    };
    let (left_set, left_seq) = sequence(left, stat, max_n, method, &mut memo)?;
    let (right_set, right_seq) = sequence(right, stat, max_n, method, &mut memo)?;
    let per_n: Vec<PerN> = left_seq
        .into_iter()
        .zip(right_seq)
        .enumerate()
        .map(|(n, (l, r))| PerN {
            n,
            equal: l == r,
            left: l,
            right: r,
        })
        .collect();
    let verdict = per_n
        .iter()
        .find(|row| !row.equal)
        .map_or(Verdict::EquivalentUpTo(max_n), |row| Verdict::DistinguishedAt(row.n));
    let trivial_witness = trivial_witness(&left_set, &right_set, stat);
    Ok(EquivalenceReport {
        left: left_set,
        right: right_set,
        stat: stat.name().to_string(),
        max_n,
        method,
        per_n,
        verdict,
        trivial_witness,
        corollary_guaranteed: false,
    })
}

fn check_blocks(blocks: &[Permutation], flips: &[bool]) -> Result<()> {
    if blocks.len() != flips.len() {
        return Err(Error::Argument(alloc::format!(
            "{} blocks but {} flip flags",
            blocks.len(),
            flips.len()
        )));
    }
    let p312 = Permutation::from_vec_unchecked(alloc::vec![3, 1, 2]);
    if let Some(bad) = blocks.iter().find(|b| !avoids(b, &p312)) {
        return Err(Error::Contains312(bad.clone()));
    }
    Ok(())
}

fn flipped(blocks: &[Permutation], flips: &[bool]) -> Vec<Permutation> {
    blocks
        .iter()
        .zip(flips)
        .map(|(b, &f)| if f { transpose(b) } else { b.clone() })
        .collect()
}

fn assemble(blocks: &[Permutation]) -> Permutation {
    let starred: Vec<Permutation> = blocks.iter().map(Permutation::star).collect();
    direct_sum(&starred)
}

/// `(ι_r[(π_1)_*, …], ι_r[(π'_1)_*, …])` with `π'_i = π_i^t` where
/// `flips[i]` is set.
pub fn build_pair(blocks: &[Permutation], flips: &[bool]) -> Result<(Permutation, Permutation)> {
    check_blocks(blocks, flips)?;
    Ok((assemble(blocks), assemble(&flipped(blocks, flips))))
}

/// [`build_pair`] applied pattern by pattern.
pub fn build_multi_pair(
    block_lists: &[Vec<Permutation>],
    flip_lists: &[Vec<bool>],
) -> Result<(Vec<Permutation>, Vec<Permutation>)> {
    if block_lists.len() != flip_lists.len() {
        return Err(Error::Argument(alloc::format!(
            "{} block lists but {} flip lists",
            block_lists.len(),
            flip_lists.len()
        )));
    }
    let mut left = Vec::with_capacity(block_lists.len());
    let mut right = Vec::with_capacity(block_lists.len());
    for (blocks, flips) in block_lists.iter().zip(flip_lists) {
        let (a, b) = build_pair(blocks, flips)?;
        left.push(a);
        right.push(b);
    }
    Ok((left, right))
}

/// For every tuple `I = (i_1, …, i_m)` the pair of sets
/// `{312, π⁽¹⁾_{i_1}, …}` and `{312, π'⁽¹⁾_{i_1}, …}` whose equivalence the
/// multi-pattern construction requires.
pub fn corollary_component_sets(
    block_lists: &[Vec<Permutation>],
    flip_lists: &[Vec<bool>],
) -> Result<Vec<(Vec<Permutation>, Vec<Permutation>)>> {
    build_multi_pair(block_lists, flip_lists)?;
    let flipped_lists: Vec<Vec<Permutation>> = block_lists
        .iter()
        .zip(flip_lists)
        .map(|(b, f)| flipped(b, f))
        .collect();
    let m = block_lists.len();
    if block_lists.iter().any(Vec::is_empty) {
        return Ok(Vec::new());
    }
    let p312 = Permutation::from_vec_unchecked(alloc::vec![3, 1, 2]);
    let mut out = Vec::new();
    let mut index = alloc::vec![0usize; m];
    loop {
        let mut left = alloc::vec![p312.clone()];
        let mut right = alloc::vec![p312.clone()];
        for j in 0..m {
            left.push(block_lists[j][index[j]].clone());
            right.push(flipped_lists[j][index[j]].clone());
        }
        out.push((left, right));
        let mut j = 0;
        while j < m && index[j] + 1 == block_lists[j].len() {
            index[j] = 0;
            j += 1;
        }
        if j == m {
            break;
        }
        index[j] += 1;
    }
    Ok(out)
}

/// Checks every component equivalence up to `max_n`.
pub fn verify_corollary_preconditions<M: Memo>(
    block_lists: &[Vec<Permutation>],
    flip_lists: &[Vec<bool>],
    stat: &Statistic,
    max_n: usize,
    mut memo: M,
) -> Result<bool> {
    for (left, right) in corollary_component_sets(block_lists, flip_lists)? {
        if !check_equiv(&left, &right, stat, max_n, &mut memo)?.verdict.is_equivalent() {
            return Ok(false);
        }
    }
    Ok(true)
}

type PairKey = (Vec<Permutation>, Vec<Permutation>);

/// Least representative of the orbit of the unordered pair under `group`.
pub fn orbit_key(left: &[Permutation], right: &[Permutation], group: &[D4Element]) -> PairKey {
    let (l, r) = (basis(left), basis(right));
    group
        .iter()
        .map(|&f| {
            let (a, b) = (image(f, &l), image(f, &r));
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .min()
        .expect("group contains at least the identity")
}

/// A constructed pair that survived the filters, before verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchCandidate {
    pub pattern: Permutation,
    pub partner: Permutation,
    pub blocks: Vec<Permutation>,
    pub flips: Vec<bool>,
    /// Every constructed `(π, π')` that fell into this symmetry class.
    pub constructions: Vec<(Permutation, Permutation)>,
    pub orbit_key: PairKey,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchHit {
    pub report: EquivalenceReport,
    pub blocks: Vec<Permutation>,
    pub flips: Vec<bool>,
    pub constructions: Vec<(Permutation, Permutation)>,
}

fn block_tuples(
    by_len: &[Vec<Permutation>],
    budget: usize,
    remaining_blocks: usize,
    prefix: &mut Vec<Permutation>,
    out: &mut Vec<Vec<Permutation>>,
) {
    if remaining_blocks == 0 {
        out.push(prefix.clone());
        return;
    }
    // each block costs its length plus the starred box
    for (len, blocks) in by_len.iter().enumerate() {
        if len + 1 > budget {
            break;
        }
        for b in blocks {
            prefix.push(b.clone());
            block_tuples(by_len, budget - len - 1, remaining_blocks - 1, prefix, out);
            prefix.pop();
        }
    }
}

/// Enumerates block tuples of total inflated length `≤ max_pattern_len` with
/// at most `max_blocks` blocks, all flip vectors, and keeps one candidate per
/// symmetry class among pairs that differ and have no trivial witness.
pub fn search_candidates(
    stat: &Statistic,
    max_pattern_len: usize,
    max_blocks: usize,
) -> Result<Vec<SearchCandidate>> {
    if max_pattern_len > SEARCH_MAX_PATTERN_LEN {
        return Err(Error::Resource(alloc::format!(
            "pattern length {max_pattern_len} exceeds the search budget {SEARCH_MAX_PATTERN_LEN}"
        )));
    }
    let p312 = Permutation::from_vec_unchecked(alloc::vec![3, 1, 2]);
    let by_len: Vec<Vec<Permutation>> = (0..max_pattern_len)
        .map(|len| oracle::avoiders(len, core::slice::from_ref(&p312)))
        .collect::<Result<_>>()?;
    let group = stat.symmetries();

    let mut candidates: Vec<SearchCandidate> = Vec::new();
    let mut seen: BTreeMap<PairKey, usize> = BTreeMap::new();
    for r in 1..=max_blocks.min(max_pattern_len) {
        let mut tuples = Vec::new();
        block_tuples(&by_len, max_pattern_len, r, &mut Vec::new(), &mut tuples);
        for blocks in tuples {
            for mask in 1u32..(1 << r) {
                let flips: Vec<bool> = (0..r).map(|i| mask >> i & 1 == 1).collect();
                let (pi, pi2) = build_pair(&blocks, &flips)?;
                if pi == pi2 {
                    continue;
                }
                let left = [p312.clone(), pi.clone()];
                let right = [p312.clone(), pi2.clone()];
                if trivial_witness_in(&left, &right, group).is_some() {
                    continue;
                }
                let key = orbit_key(&left, &right, group);
                match seen.get(&key) {
                    Some(&idx) => {
                        let c = &mut candidates[idx];
                        if !c.constructions.contains(&(pi.clone(), pi2.clone())) {
                            c.constructions.push((pi, pi2));
                        }
                    }
                    None => {
                        seen.insert(key.clone(), candidates.len());
                        candidates.push(SearchCandidate {
                            pattern: pi.clone(),
                            partner: pi2.clone(),
                            blocks: blocks.clone(),
                            flips,
                            constructions: alloc::vec![(pi, pi2)],
                            orbit_key: key,
                        });
                    }
                }
            }
        }
    }
    Ok(candidates)
}

/// Verifies one candidate up to `max_n`; `None` if the polynomials differ
/// or a witness turns up after canonicalization.
pub fn verify_candidate<M: Memo>(
    candidate: &SearchCandidate,
    stat: &Statistic,
    max_n: usize,
    memo: M,
) -> Result<Option<SearchHit>> {
    let p312 = Permutation::from_vec_unchecked(alloc::vec![3, 1, 2]);
    let mut report = check_equiv(
        &[p312.clone(), candidate.pattern.clone()],
        &[p312, candidate.partner.clone()],
        stat,
        max_n,
        memo,
    )?;
    if !report.is_nontrivial_equivalence() {
        return Ok(None);
    }
    report.corollary_guaranteed = stat.transpose_invariant_on_312();
    Ok(Some(SearchHit {
        report,
        blocks: candidate.blocks.clone(),
        flips: candidate.flips.clone(),
        constructions: candidate.constructions.clone(),
    }))
}

pub fn check_search_budget(stat: &Statistic, max_n: usize) -> Result<()> {
    if !stat.is_additive() {
        return Err(Error::Contract(alloc::format!(
            "search needs an additive statistic, `{}` is not",
            stat.name()
        )));
    }
    if max_n > SEARCH_MAX_N {
        return Err(Error::Resource(alloc::format!(
            "max_n {max_n} exceeds the search budget {SEARCH_MAX_N}"
        )));
    }
    Ok(())
}

/// Nontrivial st-Wilf equivalent pairs `{312, π} ≡ {312, π'}` from block
/// transpositions, verified up to `max_n`, one per symmetry class.
pub fn search_nontrivial<M: Memo>(
    stat: &Statistic,
    max_pattern_len: usize,
    max_blocks: usize,
    max_n: usize,
    mut memo: M,
) -> Result<Vec<SearchHit>> {
    check_search_budget(stat, max_n)?;
    let mut hits = Vec::new();
    for candidate in search_candidates(stat, max_pattern_len, max_blocks)? {
        if let Some(hit) = verify_candidate(&candidate, stat, max_n, &mut memo)? {
            hits.push(hit);
        }
    }
    Ok(hits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recursion::MemoTable;
    use alloc::vec;
    use num_bigint::BigInt;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn pats(list: &[&str]) -> Vec<Permutation> {
        list.iter().map(|s| p(s)).collect()
    }

    #[test]
    fn counterexample_pair_is_equivalent_and_nontrivial() {
        let report = check_equiv(
            &pats(&["312", "32415"]),
            &pats(&["312", "24315"]),
            &Statistic::inv(),
            10,
            MemoTable::new(),
        )
        .unwrap();
        assert_eq!(report.verdict, Verdict::EquivalentUpTo(10));
        assert_eq!(report.trivial_witness, None);
        assert_eq!(report.per_n.len(), 11);
        assert!(report.per_n.iter().all(|row| row.equal));
    }

    #[test]
    fn identical_sets_have_identity_witness() {
        for stat in [Statistic::inv(), Statistic::des(), Statistic::c213()] {
            let set = pats(&["312", "2143"]);
            let report = check_equiv(&set, &set, &stat, 6, MemoTable::new()).unwrap();
            assert_eq!(report.verdict, Verdict::EquivalentUpTo(6));
            assert_eq!(report.trivial_witness, Some(D4Element::R0));
        }
    }

    #[test]
    fn fibonacci_and_two_to_the_n_split_at_four() {
        let report = check_equiv(
            &pats(&["312", "1432"]),
            &pats(&["312", "2314", "2143"]),
            &Statistic::inv(),
            5,
            MemoTable::new(),
        )
        .unwrap();
        assert_eq!(report.verdict, Verdict::DistinguishedAt(4));
        assert_eq!(report.per_n[4].left.eval_at_one(), BigInt::from(13));
        assert_eq!(report.per_n[4].right.eval_at_one(), BigInt::from(12));
    }

    #[test]
    fn brute_force_fallback_without_312() {
        let report = check_equiv(
            &pats(&["123"]),
            &pats(&["321"]),
            &Statistic::inv(),
            6,
            MemoTable::new(),
        )
        .unwrap();
        assert_eq!(report.method, Method::BruteForce);
        // complement reverses inv, so the q-polynomials differ from n = 3 on
        assert_eq!(report.verdict, Verdict::DistinguishedAt(3));
        assert!(matches!(
            check_equiv(&pats(&["123"]), &pats(&["321"]), &Statistic::inv(), 12, MemoTable::new()),
            Err(Error::Contract(_))
        ));
        // the same sets under a count-only comparison would agree; check the
        // plain enumeration through inv's preserving group instead
        let r = check_equiv(&pats(&["132"]), &pats(&["213"]), &Statistic::inv(), 6, MemoTable::new())
            .unwrap();
        assert_eq!(r.trivial_witness, Some(D4Element::R180));
        assert!(r.verdict.is_equivalent());
    }

    #[test]
    fn witness_examples() {
        let inv = Statistic::inv();
        let left = pats(&["312", "1432"]);
        let right: Vec<Permutation> = left.iter().map(transpose).collect();
        assert_eq!(trivial_witness(&left, &right, &inv), Some(D4Element::AntiDiagonal));
        assert_eq!(
            trivial_witness(&pats(&["312", "32415"]), &pats(&["312", "24315"]), &inv),
            None
        );
        assert_eq!(
            trivial_witness(&pats(&["312"]), &pats(&["312"]), &Statistic::des()),
            Some(D4Element::R0)
        );
        // redundant members do not matter
        assert_eq!(
            trivial_witness(&pats(&["312", "3412"]), &pats(&["312"]), &inv),
            Some(D4Element::R0)
        );
    }

    #[test]
    fn witness_is_symmetric() {
        let inv = Statistic::inv();
        let sample: Vec<Permutation> = (1..=4).flat_map(Permutation::all).collect();
        for a in &sample {
            for b in &sample {
                let (l, r) = (vec![p("312"), a.clone()], vec![p("312"), b.clone()]);
                assert_eq!(
                    trivial_witness(&l, &r, &inv).is_some(),
                    trivial_witness(&r, &l, &inv).is_some()
                );
            }
        }
    }

    #[test]
    fn build_pair_examples() {
        assert_eq!(
            build_pair(&pats(&["213", "e"]), &[true, false]).unwrap(),
            (p("32415"), p("24315"))
        );
        let blocks = pats(&["21", "1"]);
        let (a, b) = build_pair(&blocks, &[true, false]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, p("32154"));
        let (a, b) = build_pair(&pats(&["132", "1", "e"]), &[false; 3]).unwrap();
        assert_eq!(a, b);
        assert_eq!(
            build_pair(&pats(&["312"]), &[true]),
            Err(Error::Contains312(p("312")))
        );
        assert!(matches!(build_pair(&pats(&["1"]), &[]), Err(Error::Argument(_))));
    }

    #[test]
    fn build_multi_pair_examples() {
        let lists = vec![pats(&["12", "e"]), pats(&["1", "1"])];
        assert_eq!(
            build_multi_pair(&lists, &[vec![false, false], vec![false, false]]).unwrap(),
            (pats(&["2314", "2143"]), pats(&["2314", "2143"]))
        );
        assert_eq!(
            build_multi_pair(&[pats(&["213", "e"])], &[vec![true, false]]).unwrap(),
            (pats(&["32415"]), pats(&["24315"]))
        );
        let lists = vec![pats(&["213", "e"]), pats(&["1", "1"])];
        let flips = vec![vec![true, false], vec![false, false]];
        let (left, right) = build_multi_pair(&lists, &flips).unwrap();
        assert_eq!(left, pats(&["32415", "2143"]));
        assert_eq!(right, pats(&["24315", "2143"]));
        assert_eq!(corollary_component_sets(&lists, &flips).unwrap().len(), 4);
        let inv = Statistic::inv();
        assert!(verify_corollary_preconditions(&lists, &flips, &inv, 8, MemoTable::new()).unwrap());
        let mut l = vec![p("312")];
        l.extend(left);
        let mut r = vec![p("312")];
        r.extend(right);
        let report = check_equiv(&l, &r, &inv, 9, MemoTable::new()).unwrap();
        assert_eq!(report.verdict, Verdict::EquivalentUpTo(9));
    }

    #[test]
    fn small_budget_search_is_empty() {
        let hits = search_nontrivial(&Statistic::inv(), 3, 2, 9, MemoTable::new()).unwrap();
        assert!(hits.is_empty());
    }

    #[test]
    fn search_finds_the_length_five_pair() {
        let inv = Statistic::inv();
        let hits = search_nontrivial(&inv, 5, 2, 9, MemoTable::new()).unwrap();
        assert!(!hits.is_empty());
        assert!(hits
            .iter()
            .any(|h| h.constructions.contains(&(p("32415"), p("24315")))));
        for h in &hits {
            assert!(h.report.is_nontrivial_equivalence());
            assert!(h.report.corollary_guaranteed);
        }
        // one hit per symmetry class
        let mut keys: Vec<_> = hits
            .iter()
            .map(|h| orbit_key(&h.report.left, &h.report.right, inv.symmetries()))
            .collect();
        let before = keys.len();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), before);
    }

    #[test]
    fn search_budget_errors() {
        assert!(matches!(
            search_nontrivial(&Statistic::inv(), 9, 2, 9, MemoTable::new()),
            Err(Error::Resource(_))
        ));
        assert!(matches!(
            search_nontrivial(&Statistic::inv(), 5, 2, 40, MemoTable::new()),
            Err(Error::Resource(_))
        ));
        assert!(matches!(
            search_nontrivial(&Statistic::maj(), 5, 2, 9, MemoTable::new()),
            Err(Error::Contract(_))
        ));
    }
}

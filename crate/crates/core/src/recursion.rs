//! Recursive computation of `F_n(Π; q)` for pattern sets containing 312.
//!
//! Write `Π = {312, π⁽¹⁾, …, π⁽ᵐ⁾}` with block decompositions
//! `π⁽ʲ⁾ = ι_{r_j}[(π⁽ʲ⁾_1)_*, …]`. A 312-avoider of length `n + 1` with its
//! minimum at position `k + 1` is `213[σ1, 1, σ2]`, and it avoids `π⁽ʲ⁾` iff
//! for some `i` the left part avoids the `i`-th prefix sub-pattern and the
//! right part avoids the `i`-th suffix sub-pattern. Inclusion-exclusion over
//! those conditions (the Möbius values of `L̂_{r_1} × … × L̂_{r_m}` reduce to
//! subset signs) gives
//!
//! ```text
//! F_{n+1}(Π) = Σ_k q^f(k, n-k) Σ_{S ⊆ [m]} (-1)^|S|
//!              Σ_{1 ≤ i_j ≤ r_j - δ_j} F_k(prefix set of I) · F_{n-k}(suffix set of I + δ)
//! ```
//!
//! with `F_0(Π) = 0` if `ε ∈ Π` and `1` otherwise.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::perm::{contains, BlockDecomposition, Permutation};
use crate::qpoly::QPolynomial;
use crate::stats::Statistic;

fn is_312(p: &Permutation) -> bool {
    p.values() == [3, 1, 2]
}

/// A sorted, deduplicated pattern set that always contains 312 and whose
/// other members avoid 312.
///
/// In reduced form no member contains another member (312 itself is kept
/// regardless); patterns made redundant by a smaller member are dropped,
/// which does not change the avoiders.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalPatternSet {
    patterns: Vec<Permutation>,
    reduced: bool,
}

impl CanonicalPatternSet {
    /// Reduced canonical form. Fails if 312 is missing.
    pub fn new<I: IntoIterator<Item = Permutation>>(patterns: I) -> Result<Self> {
        Self::build(patterns.into_iter().collect(), true)
    }

    /// Canonical form without removing redundant supersets (patterns that
    /// contain 312 are still dropped).
    pub fn unreduced<I: IntoIterator<Item = Permutation>>(patterns: I) -> Result<Self> {
        Self::build(patterns.into_iter().collect(), false)
    }

    fn build(mut patterns: Vec<Permutation>, reduced: bool) -> Result<Self> {
        patterns.sort();
        patterns.dedup();
        if !patterns.iter().any(is_312) {
            return Err(Error::Contract(alloc::format!(
                "pattern set {} does not contain 312",
                join(&patterns)
            )));
        }
        let p312 = Permutation::from_vec_unchecked(alloc::vec![3, 1, 2]);
        patterns.retain(|p| is_312(p) || !contains(p, &p312));
        if reduced {
            let all = patterns.clone();
            patterns.retain(|p| is_312(p) || !all.iter().any(|q| q != p && contains(p, q)));
        }
        Ok(Self { patterns, reduced })
    }

    /// Same reduction mode as `self`.
    fn sibling(&self, patterns: Vec<Permutation>) -> Self {
        Self::build(patterns, self.reduced).expect("sub-pattern sets keep 312")
    }

    pub fn patterns(&self) -> &[Permutation] {
        &self.patterns
    }

    /// The members other than 312.
    pub fn others(&self) -> impl Iterator<Item = &Permutation> {
        self.patterns.iter().filter(|p| !is_312(p))
    }

    pub fn has_empty(&self) -> bool {
        self.patterns.first().is_some_and(Permutation::is_empty)
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }
}

fn join(patterns: &[Permutation]) -> String {
    let mut out = String::new();
    for (i, p) in patterns.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&p.to_string());
    }
    out
}

impl fmt::Display for CanonicalPatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.patterns))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MemoKey {
    pub stat: String,
    pub patterns: Vec<Permutation>,
    pub n: usize,
}

/// Storage for computed polynomials. Entries never change once written.
pub trait Memo {
    fn lookup(&self, key: &MemoKey) -> Option<QPolynomial>;
    fn record(&mut self, key: MemoKey, value: QPolynomial);
}

impl<M: Memo + ?Sized> Memo for &mut M {
    fn lookup(&self, key: &MemoKey) -> Option<QPolynomial> {
        (**self).lookup(key)
    }
    fn record(&mut self, key: MemoKey, value: QPolynomial) {
        (**self).record(key, value)
    }
}

#[derive(Debug, Clone, Default)]
pub struct MemoTable {
    entries: BTreeMap<MemoKey, QPolynomial>,
}

impl MemoTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, key: &MemoKey) -> Option<&QPolynomial> {
        self.entries.get(key)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&MemoKey, &QPolynomial)> {
        self.entries.iter()
    }
}

impl Memo for MemoTable {
    fn lookup(&self, key: &MemoKey) -> Option<QPolynomial> {
        self.entries.get(key).cloned()
    }

    fn record(&mut self, key: MemoKey, value: QPolynomial) {
        self.entries.entry(key).or_insert(value);
    }
}

impl Extend<(MemoKey, QPolynomial)> for MemoTable {
    fn extend<T: IntoIterator<Item = (MemoKey, QPolynomial)>>(&mut self, iter: T) {
        for (k, v) in iter {
            self.record(k, v);
        }
    }
}

/// Recomputes everything; for cross-checking the memoized path.
#[derive(Debug, Clone, Copy, Default)]
pub struct NoMemo;

impl Memo for NoMemo {
    fn lookup(&self, _: &MemoKey) -> Option<QPolynomial> {
        None
    }
    fn record(&mut self, _: MemoKey, _: QPolynomial) {}
}

/// `(coefficient, prefix set, suffix set)` after merging equal pairs.
type Terms = Vec<(i64, CanonicalPatternSet, CanonicalPatternSet)>;

struct Engine<'a, M> {
    stat: &'a Statistic,
    memo: M,
}

impl<M: Memo> Engine<'_, M> {
    fn poly(&mut self, n: usize, set: &CanonicalPatternSet) -> QPolynomial {
        let key = MemoKey {
            stat: self.stat.name().to_string(),
            patterns: set.patterns().to_vec(),
            n,
        };
        if let Some(hit) = self.memo.lookup(&key) {
            return hit;
        }
        let value = self.compute(n, set);
        self.memo.record(key, value.clone());
        value
    }

    fn compute(&mut self, n: usize, set: &CanonicalPatternSet) -> QPolynomial {
        if n == 0 {
            return if set.has_empty() {
                QPolynomial::zero()
            } else {
                QPolynomial::one()
            };
        }
        let top = n - 1;
        let terms = inclusion_exclusion_terms(set);
        let mut total = QPolynomial::zero();
        for k in 0..=top {
            let mut inner = QPolynomial::zero();
            for (coeff, prefix, suffix) in &terms {
                let left = self.poly(k, prefix);
                if left.is_zero() {
                    continue;
                }
                let right = self.poly(top - k, suffix);
                inner += &(&left * &right).scale(*coeff);
            }
            total += &inner.shift(self.stat.combine(k, top - k));
        }
        total
    }
}

/// Expands the signed sum over `S ⊆ [m]` and index tuples `I` into pairs of
/// sub-problem pattern sets, merging coefficients of identical pairs.
fn inclusion_exclusion_terms(set: &CanonicalPatternSet) -> Terms {
    let decomps: Vec<BlockDecomposition> = set
        .others()
        .map(|p| BlockDecomposition::of(p).expect("members other than 312 avoid 312"))
        .collect();
    let m = decomps.len();
    let p312 = Permutation::from_vec_unchecked(alloc::vec![3, 1, 2]);
    let mut merged: BTreeMap<(CanonicalPatternSet, CanonicalPatternSet), i64> = BTreeMap::new();

    for subset in 0u64..(1u64 << m) {
        let delta = |j: usize| usize::from(subset >> j & 1 == 1);
        let sign = if subset.count_ones() % 2 == 0 { 1 } else { -1 };
        // i_j ranges over 1..=r_j - δ_j
        let upper: Vec<usize> = (0..m)
            .map(|j| decomps[j].len().saturating_sub(delta(j)))
            .collect();
        if upper.contains(&0) {
            continue;
        }
        let mut index = alloc::vec![1usize; m];
        loop {
            let mut prefix = alloc::vec![p312.clone()];
            let mut suffix = alloc::vec![p312.clone()];
            for j in 0..m {
                prefix.push(decomps[j].prefix(index[j]).expect("index in range"));
                suffix.push(decomps[j].suffix(index[j] + delta(j)).expect("index in range"));
            }
            *merged
                .entry((set.sibling(prefix), set.sibling(suffix)))
                .or_default() += sign;

            // odometer step
            let mut j = 0;
            while j < m && index[j] == upper[j] {
                index[j] = 1;
                j += 1;
            }
            if j == m {
                break;
            }
            index[j] += 1;
        }
    }
    merged
        .into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|((a, b), c)| (c, a, b))
        .collect()
}

fn require_additive(stat: &Statistic) -> Result<()> {
    if !stat.is_additive() {
        return Err(Error::Contract(alloc::format!(
            "statistic `{}` is not known to split additively over 213[s1,1,s2]",
            stat.name()
        )));
    }
    Ok(())
}

/// `F_n(Π; q)` by the recursion, sharing sub-results through `memo`.
pub fn st_poly_rec<M: Memo>(
    n: usize,
    set: &CanonicalPatternSet,
    stat: &Statistic,
    memo: M,
) -> Result<QPolynomial> {
    require_additive(stat)?;
    Ok(Engine { stat, memo }.poly(n, set))
}

/// `F_0, …, F_max_n`.
pub fn st_poly_rec_sequence<M: Memo>(
    max_n: usize,
    set: &CanonicalPatternSet,
    stat: &Statistic,
    memo: M,
) -> Result<Vec<QPolynomial>> {
    require_additive(stat)?;
    let mut engine = Engine { stat, memo };
    Ok((0..=max_n).map(|n| engine.poly(n, set)).collect())
}

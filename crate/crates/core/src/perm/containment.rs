use alloc::vec::Vec;

use super::Permutation;

/// A pattern preprocessed for repeated occurrence tests.
///
/// For each pattern position `j` we record which earlier positions hold the
/// nearest smaller and nearest larger value. Extending a partial match at
/// position `j` then only needs two comparisons.
#[derive(Debug, Clone)]
pub struct PatternMatcher {
    len: usize,
    below: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
}

impl PatternMatcher {
    pub fn new(pattern: &Permutation) -> Self {
        let vals = pattern.values();
        let mut below = Vec::with_capacity(vals.len());
        let mut above = Vec::with_capacity(vals.len());
        for (j, &v) in vals.iter().enumerate() {
            let prev = &vals[..j];
            below.push(
                prev.iter()
                    .enumerate()
                    .filter(|(_, &w)| w < v)
                    .max_by_key(|(_, &w)| w)
                    .map(|(i, _)| i),
            );
            above.push(
                prev.iter()
                    .enumerate()
                    .filter(|(_, &w)| w > v)
                    .min_by_key(|(_, &w)| w)
                    .map(|(i, _)| i),
            );
        }
        Self {
            len: vals.len(),
            below,
            above,
        }
    }

    pub fn pattern_len(&self) -> usize {
        self.len
    }

    /// Whether some subsequence of `text` is order-isomorphic to the pattern.
    pub fn occurs_in(&self, text: &[u8]) -> bool {
        if self.len == 0 {
            return true;
        }
        if self.len > text.len() {
            return false;
        }
        let mut matched = [0u8; super::MAX_LEN];
        self.extend(text, 0, 0, &mut matched)
    }

    fn extend(&self, text: &[u8], j: usize, from: usize, matched: &mut [u8]) -> bool {
        if j == self.len {
            return true;
        }
        let lo = self.below[j].map_or(0, |i| u16::from(matched[i]));
        let hi = self.above[j].map_or(u16::MAX, |i| u16::from(matched[i]));
        // leave room for the remaining pattern entries
        let last = text.len() - (self.len - j);
        for (idx, &v) in text.iter().enumerate().take(last + 1).skip(from) {
            let w = u16::from(v);
            if w > lo && w < hi {
                matched[j] = v;
                if self.extend(text, j + 1, idx + 1, matched) {
                    return true;
                }
            }
        }
        false
    }
}

/// True iff some subsequence of `sigma` has the same relative order as `pi`.
/// Every permutation contains the empty pattern.
pub fn contains(sigma: &Permutation, pi: &Permutation) -> bool {
    PatternMatcher::new(pi).occurs_in(sigma.values())
}

pub fn avoids(sigma: &Permutation, pi: &Permutation) -> bool {
    !contains(sigma, pi)
}

pub fn avoids_all<'a, I>(sigma: &Permutation, patterns: I) -> bool
where
    I: IntoIterator<Item = &'a Permutation>,
{
    patterns.into_iter().all(|pi| avoids(sigma, pi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{next_permutation, Permutation};
    use alloc::vec::Vec;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    /// Tries every index subset of `sigma`.
    fn contains_by_subsets(sigma: &Permutation, pi: &Permutation) -> bool {
        let n = sigma.len();
        let k = pi.len();
        (0u32..1 << n)
            .filter(|mask| mask.count_ones() as usize == k)
            .any(|mask| {
                let sub: Vec<u8> = (0..n)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| sigma.values()[i])
                    .collect();
                Permutation::standardize(&sub) == *pi
            })
    }

    #[test]
    fn introduction_examples() {
        assert!(contains(&p("46127538"), &p("3142")));
        assert!(!contains(&p("46123578"), &p("3142")));
        // the highlighted occurrence
        assert_eq!(Permutation::standardize(&[4, 1, 7, 3]), p("3142"));
        assert!(contains(&p("312"), &p("312")));
    }

    #[test]
    fn everything_contains_the_empty_pattern() {
        assert!(contains(&Permutation::empty(), &Permutation::empty()));
        for sigma in Permutation::all(3) {
            assert!(contains(&sigma, &Permutation::empty()));
        }
        assert!(!contains(&Permutation::empty(), &p("1")));
    }

    #[test]
    fn agrees_with_subset_search() {
        let patterns: Vec<Permutation> = (0..=4).flat_map(Permutation::all).collect();
        for n in 0..=6 {
            let mut buf: Vec<u8> = (1..=n as u8).collect();
            loop {
                let sigma = Permutation::new(buf.clone()).unwrap();
                for pi in &patterns {
                    assert_eq!(
                        contains(&sigma, pi),
                        contains_by_subsets(&sigma, pi),
                        "{sigma} vs {pi}"
                    );
                }
                if !next_permutation(&mut buf) {
                    break;
                }
            }
        }
    }

    #[test]
    fn containment_is_monotone() {
        // if pi ≤ pi2 and sigma avoids pi then sigma avoids pi2
        let patterns: Vec<Permutation> = (1..=5).flat_map(Permutation::all).collect();
        let small: Vec<Permutation> = (1..=4).flat_map(Permutation::all).collect();
        for n in 0..=7 {
            let sample: Vec<Permutation> = Permutation::all(n).step_by(7).collect();
            for sigma in &sample {
                for pi in &small {
                    if contains(sigma, pi) {
                        continue;
                    }
                    for pi2 in patterns.iter().filter(|q| contains(q, pi)) {
                        assert!(avoids(sigma, pi2), "{sigma} {pi} {pi2}");
                    }
                }
            }
        }
    }
}

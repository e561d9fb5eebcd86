//! Permutation statistics that split additively over the 312 decomposition.
//!
//! A statistic `st` qualifies for the recursive engine when there is a
//! combiner `f` with
//!
//! ```text
//! st(213[σ1, 1, σ2]) = f(|σ1|, |σ2|) + st(σ1) + st(σ2)
//! ```
//!
//! for all `σ1`, `σ2`. `inv`, `des` and the consecutive-213 count do;
//! the major index does not, and is kept here only as a convenience.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::perm::{inflate, D4Element, Permutation};

pub type EvaluateFn = Arc<dyn Fn(&Permutation) -> usize + Send + Sync>;
pub type CombinerFn = Arc<dyn Fn(usize, usize) -> usize + Send + Sync>;

/// Bound used when a user statistic is registered.
pub const DEFAULT_DAGGER_BOUND: usize = 7;

/// How much is known about the additivity condition of a statistic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Additivity {
    /// Holds for all lengths (built-in statistics).
    Proven,
    /// Checked exhaustively for `|σ1| + |σ2| + 1 ≤ n_max`.
    Verified { n_max: usize },
    /// Not established; the recursive engine refuses these.
    Unverified,
}

/// A statistic together with its combiner `f(k, m)`.
#[derive(Clone)]
pub struct Statistic {
    name: String,
    evaluate: EvaluateFn,
    combiner: CombinerFn,
    additivity: Additivity,
    transpose_invariant_on_312: bool,
    symmetries: Vec<D4Element>,
}

impl fmt::Debug for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Statistic")
            .field("name", &self.name)
            .field("additivity", &self.additivity)
            .finish_non_exhaustive()
    }
}

/// A triple on which the additivity condition fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DaggerViolation {
    pub left: Permutation,
    pub right: Permutation,
    pub composed: Permutation,
    /// `st(213[σ1, 1, σ2])`
    pub actual: usize,
    /// `f(k, m) + st(σ1) + st(σ2)`
    pub predicted: usize,
}

impl fmt::Display for DaggerViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "sigma1={} sigma2={} sigma={}: st(sigma)={} but f(k,m)+st(sigma1)+st(sigma2)={}",
            self.left, self.right, self.composed, self.actual, self.predicted
        )
    }
}

impl Statistic {
    fn builtin(
        name: &str,
        evaluate: fn(&Permutation) -> usize,
        combiner: fn(usize, usize) -> usize,
        transpose_invariant_on_312: bool,
        symmetries: &[D4Element],
    ) -> Self {
        Self {
            name: name.to_string(),
            evaluate: Arc::new(evaluate),
            combiner: Arc::new(combiner),
            additivity: Additivity::Proven,
            transpose_invariant_on_312,
            symmetries: symmetries.to_vec(),
        }
    }

    pub fn inv() -> Self {
        Self::builtin("inv", inv, inv_combiner, true, &D4Element::INV_PRESERVING)
    }

    pub fn des() -> Self {
        Self::builtin(
            "des",
            des,
            des_combiner,
            true,
            &[D4Element::R0, D4Element::R180],
        )
    }

    pub fn c213() -> Self {
        Self::builtin("c213", c213, c213_combiner, false, &[D4Element::R0])
    }

    /// Major index with the candidate combiner `f(k, m) = k`. It fails the
    /// additivity condition and is flagged accordingly.
    pub fn maj() -> Self {
        Self {
            additivity: Additivity::Unverified,
            ..Self::builtin("maj", maj, inv_combiner, false, &[D4Element::R0])
        }
    }

    /// `inv`, `des`, `c213` or `maj`.
    pub fn by_name(name: &str) -> Result<Self> {
        match name {
            "inv" => Ok(Self::inv()),
            "des" => Ok(Self::des()),
            "c213" => Ok(Self::c213()),
            "maj" => Ok(Self::maj()),
            _ => Err(Error::UnknownStatistic(name.to_string())),
        }
    }

    /// A user statistic with no additivity claim. Preserving symmetries
    /// default to the identity only.
    pub fn unchecked<E, C>(name: impl Into<String>, evaluate: E, combiner: C) -> Self
    where
        E: Fn(&Permutation) -> usize + Send + Sync + 'static,
        C: Fn(usize, usize) -> usize + Send + Sync + 'static,
    {
        Self {
            name: name.into(),
            evaluate: Arc::new(evaluate),
            combiner: Arc::new(combiner),
            additivity: Additivity::Unverified,
            transpose_invariant_on_312: false,
            symmetries: alloc::vec![D4Element::R0],
        }
    }

    /// Checks additivity up to `n_max` and marks the statistic verified, or
    /// returns the first violating triple.
    pub fn verified(self, n_max: usize) -> core::result::Result<Self, DaggerViolation> {
        match find_dagger_violation(&self, n_max) {
            Some(v) => Err(v),
            None => Ok(Self {
                additivity: Additivity::Verified { n_max },
                ..self
            }),
        }
    }

    /// Overrides the symmetries considered statistic-preserving when looking
    /// for trivial equivalences.
    pub fn with_symmetries(mut self, symmetries: Vec<D4Element>) -> Self {
        self.symmetries = symmetries;
        self
    }

    /// Declares `st(σ^t) = st(σ)` on 312-avoiders.
    pub fn with_transpose_invariance(mut self, invariant: bool) -> Self {
        self.transpose_invariant_on_312 = invariant;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn eval(&self, sigma: &Permutation) -> usize {
        (self.evaluate)(sigma)
    }

    pub fn combine(&self, k: usize, m: usize) -> usize {
        (self.combiner)(k, m)
    }

    pub fn combiner(&self) -> CombinerFn {
        self.combiner.clone()
    }

    pub fn additivity(&self) -> Additivity {
        self.additivity
    }

    /// Whether the recursive engine may use this statistic.
    pub fn is_additive(&self) -> bool {
        self.additivity != Additivity::Unverified
    }

    pub fn transpose_invariant_on_312(&self) -> bool {
        self.transpose_invariant_on_312
    }

    pub fn symmetries(&self) -> &[D4Element] {
        &self.symmetries
    }
}

pub fn inv(sigma: &Permutation) -> usize {
    let v = sigma.values();
    (0..v.len())
        .map(|i| v[i + 1..].iter().filter(|&&w| w < v[i]).count())
        .sum()
}

pub fn des(sigma: &Permutation) -> usize {
    sigma.values().windows(2).filter(|w| w[0] > w[1]).count()
}

/// Occurrences of the consecutive pattern 213: `σ(i+1) < σ(i) < σ(i+2)`.
pub fn c213(sigma: &Permutation) -> usize {
    sigma
        .values()
        .windows(3)
        .filter(|w| w[1] < w[0] && w[0] < w[2])
        .count()
}

/// Sum of descent positions (1-indexed).
pub fn maj(sigma: &Permutation) -> usize {
    sigma
        .values()
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(i, _)| i + 1)
        .sum()
}

pub fn inv_combiner(k: usize, _m: usize) -> usize {
    k
}

pub fn des_combiner(k: usize, _m: usize) -> usize {
    usize::from(k != 0)
}

pub fn c213_combiner(k: usize, m: usize) -> usize {
    usize::from(k != 0 && m != 0)
}

/// The combiner of a built-in statistic.
pub fn combiner_of(name: &str) -> Result<fn(usize, usize) -> usize> {
    match name {
        "inv" | "maj" => Ok(inv_combiner),
        "des" => Ok(des_combiner),
        "c213" => Ok(c213_combiner),
        _ => Err(Error::UnknownStatistic(name.to_string())),
    }
}

/// First triple `(σ1, σ2, 213[σ1, 1, σ2])` with `|σ1| + |σ2| + 1 ≤ n_max`
/// that breaks additivity, scanning by total length, then `|σ1|`, then
/// lexicographically.
pub fn find_dagger_violation(stat: &Statistic, n_max: usize) -> Option<DaggerViolation> {
    let p213 = Permutation::from_vec_unchecked(alloc::vec![2, 1, 3]);
    let one = Permutation::identity(1);
    for total in 0..n_max {
        for k in 0..=total {
            let m = total - k;
            let rights: Vec<Permutation> = Permutation::all(m).collect();
            for left in Permutation::all(k) {
                let st_left = stat.eval(&left);
                for right in &rights {
                    let composed = inflate(&p213, &[left.clone(), one.clone(), right.clone()])
                        .expect("three parts for 213");
                    let actual = stat.eval(&composed);
                    let predicted = stat.combine(k, m) + st_left + stat.eval(right);
                    if actual != predicted {
                        return Some(DaggerViolation {
                            left,
                            right: right.clone(),
                            composed,
                            actual,
                            predicted,
                        });
                    }
                }
            }
        }
    }
    None
}

pub fn verify_dagger(stat: &Statistic, n_max: usize) -> bool {
    find_dagger_violation(stat, n_max).is_none()
}

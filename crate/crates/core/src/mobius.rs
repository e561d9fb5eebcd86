//! Möbius values `μ(0̂, 1̂)` on `L̂_r` and on `L̂ = (L_{r_1} × … × L_{r_m})^`.
//!
//! `L_r` is the set of lattice points `(a, b)` with `a, b ≥ 0` and `a + b < r`
//! ordered componentwise; a hat means a new maximum is adjoined. The closed
//! forms are what the recursion relies on; [`mobius_poset_oracle`] computes
//! the same values from the defining recurrence.

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Largest poset the oracle will build.
pub const ORACLE_SIZE_CAP: usize = 100_000;

fn check_ranks(ranks: &[usize]) -> Result<()> {
    if let Some(&r) = ranks.iter().find(|&&r| r == 0) {
        return Err(Error::Argument(alloc::format!("rank {r} must be at least 1")));
    }
    Ok(())
}

/// `μ_{L̂_r}(0̂, 1̂)`: −1 for `r = 1`, 1 for `r = 2`, 0 otherwise.
pub fn mobius_lr_closed(r: usize) -> Result<i64> {
    check_ranks(&[r])?;
    Ok(match r {
        1 => -1,
        2 => 1,
        _ => 0,
    })
}

/// `μ(0̂, 1̂)` on the product: 0 unless every `r_i ∈ {1, 2}`, in which case
/// `(−1)^{|S|+1}` with `S = {i : r_i = 2}`.
pub fn mobius_product_closed(ranks: &[usize]) -> Result<i64> {
    check_ranks(ranks)?;
    if ranks.iter().any(|&r| r > 2) {
        return Ok(0);
    }
    let twos = ranks.iter().filter(|&&r| r == 2).count();
    Ok(if twos % 2 == 0 { -1 } else { 1 })
}

/// Builds the product poset explicitly, adjoins a top, and evaluates
/// `μ(0̂, 1̂)` from `μ(x, x) = 1` and `Σ_{x ≤ z ≤ y} μ(x, z) = 0`.
pub fn mobius_poset_oracle(ranks: &[usize]) -> Result<i64> {
    check_ranks(ranks)?;
    let size = ranks
        .iter()
        .try_fold(1usize, |acc, &r| acc.checked_mul(r * (r + 1) / 2))
        .filter(|&s| s <= ORACLE_SIZE_CAP)
        .ok_or_else(|| {
            Error::Resource(alloc::format!(
                "poset for ranks {ranks:?} exceeds {ORACLE_SIZE_CAP} elements"
            ))
        })?;

    // points of the product, each coordinate a pair (a, b)
    let mut elements: Vec<Vec<(usize, usize)>> = alloc::vec![Vec::new()];
    for &r in ranks {
        let factor: Vec<(usize, usize)> = (0..r)
            .flat_map(|a| (0..r - a).map(move |b| (a, b)))
            .collect();
        elements = elements
            .iter()
            .flat_map(|prefix| {
                factor.iter().map(move |&pt| {
                    let mut e = prefix.clone();
                    e.push(pt);
                    e
                })
            })
            .collect();
    }
    debug_assert_eq!(elements.len(), size);
    // a linear extension: by total rank
    elements.sort_by_key(|e| e.iter().map(|&(a, b)| a + b).sum::<usize>());

    let leq = |x: &[(usize, usize)], y: &[(usize, usize)]| {
        x.iter().zip(y).all(|(p, q)| p.0 <= q.0 && p.1 <= q.1)
    };

    // mu[i] = μ(0̂, elements[i]); elements[0] is 0̂
    let mut mu: Vec<i64> = Vec::with_capacity(elements.len());
    for (i, y) in elements.iter().enumerate() {
        if i == 0 {
            mu.push(1);
            continue;
        }
        let below: i64 = elements[..i]
            .iter()
            .zip(&mu)
            .filter(|(z, _)| leq(z, y))
            .map(|(_, &m)| m)
            .sum();
        mu.push(-below);
    }
    // 1̂ lies above everything
    Ok(-mu.iter().sum::<i64>())
}

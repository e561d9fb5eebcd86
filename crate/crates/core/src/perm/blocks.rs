use alloc::vec::Vec;

use super::{avoids, direct_sum, Permutation};
use crate::error::{Error, Result};

/// The unique blocks `π_1, …, π_r` with `π = ι_r[(π_1)_*, …, (π_r)_*]` of a
/// 312-avoiding permutation. Each block avoids 312; `ε` has no blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockDecomposition {
    blocks: Vec<Permutation>,
}

impl BlockDecomposition {
    /// Decomposes a 312-avoider by repeatedly splitting at the position of its
    /// minimum: `π = 213[π_1, 1, π'] = 12[(π_1)_*, π']`.
    pub fn of(pi: &Permutation) -> Result<Self> {
        if !avoids(pi, &pattern_312()) {
            return Err(Error::Contains312(pi.clone()));
        }
        let vals = pi.values();
        let mut blocks = Vec::new();
        let mut start = 0usize;
        // entries from `start` on are exactly {base+1, …, n}
        let mut base = 0u8;
        while start < vals.len() {
            let min_at = start
                + vals[start..]
                    .iter()
                    .position(|&v| v == base + 1)
                    .expect("suffix of a 312-avoider holds the next minimum");
            let block: Vec<u8> = vals[start..min_at].iter().map(|&v| v - base - 1).collect();
            blocks.push(Permutation::from_vec_unchecked(block));
            base += (min_at - start + 1) as u8;
            start = min_at + 1;
        }
        Ok(Self { blocks })
    }

    /// Builds the decomposition directly from blocks; every block must avoid 312.
    pub fn from_blocks(blocks: Vec<Permutation>) -> Result<Self> {
        let p312 = pattern_312();
        if let Some(bad) = blocks.iter().find(|b| !avoids(b, &p312)) {
            return Err(Error::Contains312(bad.clone()));
        }
        Ok(Self { blocks })
    }

    pub fn blocks(&self) -> &[Permutation] {
        &self.blocks
    }

    /// Number of blocks `r`.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// `ι_r[(π_1)_*, …, (π_r)_*]`.
    pub fn compose(&self) -> Permutation {
        compose_starred(&self.blocks)
    }

    /// The prefix sub-pattern: `π_1` for `i = 1` (unstarred), otherwise
    /// `ι_i[(π_1)_*, …, (π_i)_*]`.
    pub fn prefix(&self, i: usize) -> Result<Permutation> {
        self.check_index(i)?;
        Ok(if i == 1 {
            self.blocks[0].clone()
        } else {
            compose_starred(&self.blocks[..i])
        })
    }

    /// The suffix sub-pattern `ι_{r-i+1}[(π_i)_*, …, (π_r)_*]`.
    pub fn suffix(&self, i: usize) -> Result<Permutation> {
        self.check_index(i)?;
        Ok(compose_starred(&self.blocks[i - 1..]))
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.len() {
            return Err(Error::Argument(alloc::format!(
                "block index {i} outside 1..={}",
                self.len()
            )));
        }
        Ok(())
    }
}

fn compose_starred(blocks: &[Permutation]) -> Permutation {
    let starred: Vec<Permutation> = blocks.iter().map(Permutation::star).collect();
    direct_sum(&starred)
}

pub(crate) fn pattern_312() -> Permutation {
    Permutation::from_vec_unchecked(alloc::vec![3, 1, 2])
}

pub fn block_decompose(pi: &Permutation) -> Result<BlockDecomposition> {
    BlockDecomposition::of(pi)
}

pub fn prefix_pattern(pi: &Permutation, i: usize) -> Result<Permutation> {
    BlockDecomposition::of(pi)?.prefix(i)
}

pub fn suffix_pattern(pi: &Permutation, i: usize) -> Result<Permutation> {
    BlockDecomposition::of(pi)?.suffix(i)
}

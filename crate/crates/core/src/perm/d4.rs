use alloc::vec;
use core::fmt;
use core::str::FromStr;

use super::Permutation;
use crate::error::{Error, Result};

/// The symmetries of the square acting on permutation matrices.
///
/// The box of entry `i` sits at `(i, σ(i))` with `x` to the right and `y`
/// upward. Rotations are counter-clockwise; reflections are named by the
/// slope of their axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum D4Element {
    R0,
    R90,
    R180,
    R270,
    /// Reflection in the anti-diagonal (slope −1): matrix transposition.
    AntiDiagonal,
    /// Reflection in a horizontal line (slope 0): complement.
    Horizontal,
    /// Reflection in the main diagonal (slope 1): inverse.
    Diagonal,
    /// Reflection in a vertical line (infinite slope): reverse.
    Vertical,
}

type Matrix = [[i32; 2]; 2];

impl D4Element {
    pub const ALL: [D4Element; 8] = [
        D4Element::R0,
        D4Element::R90,
        D4Element::R180,
        D4Element::R270,
        D4Element::AntiDiagonal,
        D4Element::Horizontal,
        D4Element::Diagonal,
        D4Element::Vertical,
    ];

    /// Elements that leave `inv` unchanged.
    pub const INV_PRESERVING: [D4Element; 4] = [
        D4Element::R0,
        D4Element::R180,
        D4Element::AntiDiagonal,
        D4Element::Diagonal,
    ];

    /// Action on coordinates centred at the middle of the grid.
    fn matrix(self) -> Matrix {
        match self {
            D4Element::R0 => [[1, 0], [0, 1]],
            D4Element::R90 => [[0, -1], [1, 0]],
            D4Element::R180 => [[-1, 0], [0, -1]],
            D4Element::R270 => [[0, 1], [-1, 0]],
            D4Element::AntiDiagonal => [[0, -1], [-1, 0]],
            D4Element::Horizontal => [[1, 0], [0, -1]],
            D4Element::Diagonal => [[0, 1], [1, 0]],
            D4Element::Vertical => [[-1, 0], [0, 1]],
        }
    }

    fn from_matrix(m: Matrix) -> Self {
        *Self::ALL
            .iter()
            .find(|e| e.matrix() == m)
            .expect("D4 is closed under composition")
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(self, other: D4Element) -> D4Element {
        let (a, b) = (self.matrix(), other.matrix());
        let mut m = [[0; 2]; 2];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        Self::from_matrix(m)
    }

    pub fn inverse(self) -> D4Element {
        *Self::ALL
            .iter()
            .find(|e| e.compose(self) == D4Element::R0)
            .unwrap()
    }

    pub fn apply(self, sigma: &Permutation) -> Permutation {
        let n = sigma.len() as i32;
        let m = self.matrix();
        let mut out = vec![0u8; sigma.len()];
        for (i, &v) in sigma.values().iter().enumerate() {
            let u = 2 * (i as i32 + 1) - (n + 1);
            let w = 2 * i32::from(v) - (n + 1);
            let x = (m[0][0] * u + m[0][1] * w + n + 1) / 2;
            let y = (m[1][0] * u + m[1][1] * w + n + 1) / 2;
            out[(x - 1) as usize] = y as u8;
        }
        Permutation::from_vec_unchecked(out)
    }

    pub fn tag(self) -> &'static str {
        match self {
            D4Element::R0 => "R0",
            D4Element::R90 => "R90",
            D4Element::R180 => "R180",
            D4Element::R270 => "R270",
            D4Element::AntiDiagonal => "r_-1",
            D4Element::Horizontal => "r_0",
            D4Element::Diagonal => "r_1",
            D4Element::Vertical => "r_inf",
        }
    }
}

impl fmt::Display for D4Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for D4Element {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .iter()
            .copied()
            .find(|e| e.tag() == s)
            .ok_or_else(|| Error::Argument(alloc::format!("unknown D4 element `{s}`")))
    }
}

/// `σ^t`, the reflection of the matrix in the anti-diagonal.
pub fn transpose(sigma: &Permutation) -> Permutation {
    D4Element::AntiDiagonal.apply(sigma)
}

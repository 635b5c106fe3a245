use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::ObjectError;

/// A coin fountain, stored as the sizes of its north-east diagonals from
/// left to right.
///
/// Diagonal `j` holds the coins at offset `j` on levels `0..d_j`. A coin at
/// level `l >= 1`, offset `j` rests on the coins at level `l - 1`, offsets
/// `j` and `j + 1`, which gives `d_j <= d_{j+1} + 1` and `d_m = 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "FountainRepr", into = "FountainRepr")]
pub struct CoinFountain {
    diagonals: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct FountainRepr {
    diagonals: Vec<i64>,
}

/// Coin counts by level parity; the bottom level is level 0 and even.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FountainStats {
    pub e: usize,
    pub o: usize,
    pub m: usize,
    #[serde(rename = "firstDiag")]
    pub first_diag: usize,
}

impl FountainStats {
    pub const NAMES: [&'static str; 6] = ["e", "o", "m", "firstDiag", "coins", "twoEMinusO"];

    pub fn get(&self, name: &str) -> Option<usize> {
        Some(match name {
            "e" => self.e,
            "o" => self.o,
            "m" => self.m,
            "firstDiag" => self.first_diag,
            "coins" => self.e + self.o,
            "twoEMinusO" => 2 * self.e - self.o,
            _ => return None,
        })
    }
}

impl CoinFountain {
    pub fn new(diagonals: impl IntoIterator<Item = i64>) -> Result<Self, ObjectError> {
        let raw: Vec<i64> = diagonals.into_iter().collect();
        let Some(&last) = raw.last() else {
            return Err(ObjectError::EmptyInput);
        };
        if let Some(index) = raw.iter().position(|&d| d < 1) {
            return Err(ObjectError::NonPositiveDiagonal { index: index + 1 });
        }
        if last != 1 {
            return Err(ObjectError::BadLastDiagonal(last));
        }
        if let Some(index) = raw.windows(2).position(|w| w[0] > w[1] + 1) {
            return Err(ObjectError::DiagonalDrop { index: index + 1 });
        }
        Ok(Self {
            diagonals: raw.into_iter().map(|d| d as usize).collect(),
        })
    }

    pub(crate) fn from_diagonals_unchecked(diagonals: Vec<usize>) -> Self {
        debug_assert!(Self::new(diagonals.iter().map(|&d| d as i64)).is_ok());
        Self { diagonals }
    }

    pub fn single_coin() -> Self {
        Self { diagonals: vec![1] }
    }

    pub fn diagonals(&self) -> &[usize] {
        &self.diagonals
    }

    pub fn total_coins(&self) -> usize {
        self.diagonals.iter().sum()
    }

    pub fn stats(&self) -> FountainStats {
        FountainStats {
            e: self.diagonals.iter().map(|d| d.div_ceil(2)).sum(),
            o: self.diagonals.iter().map(|d| d / 2).sum(),
            m: self.diagonals.len(),
            first_diag: self.diagonals[0],
        }
    }

    /// Every coin as `(level, offset)`.
    pub fn coins(&self) -> BTreeSet<(usize, usize)> {
        self.diagonals
            .iter()
            .enumerate()
            .flat_map(|(j, &d)| (0..d).map(move |level| (level, j)))
            .collect()
    }

    /// Reads the diagonal sizes back off a coin set. The set must have a
    /// contiguous bottom level starting at offset 0; support is checked by
    /// the constructor.
    pub fn from_coins(coins: &BTreeSet<(usize, usize)>) -> Result<Self, ObjectError> {
        let width = coins.iter().filter(|(l, _)| *l == 0).count();
        let mut diagonals = vec![0i64; width];
        for &(level, j) in coins {
            if j >= width || (level > 0 && !coins.contains(&(level - 1, j))) {
                return Err(ObjectError::NonPositiveDiagonal { index: j + 1 });
            }
            diagonals[j] += 1;
        }
        Self::new(diagonals)
    }
}

impl TryFrom<FountainRepr> for CoinFountain {
    type Error = ObjectError;
    fn try_from(r: FountainRepr) -> Result<Self, ObjectError> {
        Self::new(r.diagonals)
    }
}

impl From<CoinFountain> for FountainRepr {
    fn from(c: CoinFountain) -> Self {
        FountainRepr {
            diagonals: c.diagonals.iter().map(|&d| d as i64).collect(),
        }
    }
}

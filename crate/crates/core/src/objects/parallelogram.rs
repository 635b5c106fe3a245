use serde::{Deserialize, Serialize};

use super::ObjectError;

/// A vertical run of `height` cells whose lowest cell sits at row `bottom`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Column {
    pub bottom: usize,
    pub height: usize,
}

impl Column {
    /// Row index of the highest cell.
    pub fn top(&self) -> usize {
        self.bottom + self.height - 1
    }
}

/// A polyomino bounded by two non-crossing north/east lattice paths,
/// stored column by column from the left.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "ParallelogramRepr", into = "ParallelogramRepr")]
pub struct ParallelogramPolyomino {
    columns: Vec<Column>,
}

#[derive(Serialize, Deserialize)]
struct ParallelogramRepr {
    columns: Vec<[i64; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ParallelogramStats {
    pub area: usize,
    pub col_count: usize,
    pub overlaps: Vec<usize>,
}

impl ParallelogramPolyomino {
    pub fn new(columns: impl IntoIterator<Item = (i64, i64)>) -> Result<Self, ObjectError> {
        let raw: Vec<(i64, i64)> = columns.into_iter().collect();
        if raw.is_empty() {
            return Err(ObjectError::EmptyInput);
        }
        if let Some(column) = raw.iter().position(|&(b, h)| b < 0 || h < 1) {
            return Err(ObjectError::BadColumn { column: column + 1 });
        }
        if raw[0].0 != 0 {
            return Err(ObjectError::NotAnchored { start: raw[0].0 });
        }
        for (i, w) in raw.windows(2).enumerate() {
            let (b0, h0) = w[0];
            let (b1, h1) = w[1];
            let column = i + 2;
            if b1 < b0 || b1 + h1 < b0 + h0 {
                return Err(ObjectError::NonMonotoneBoundary { column });
            }
            if b1 > b0 + h0 - 1 {
                return Err(ObjectError::DisconnectedColumns { column });
            }
        }
        Ok(Self {
            columns: raw
                .into_iter()
                .map(|(b, h)| Column {
                    bottom: b as usize,
                    height: h as usize,
                })
                .collect(),
        })
    }

    pub(crate) fn from_columns_unchecked(columns: Vec<Column>) -> Self {
        debug_assert!(
            Self::new(columns.iter().map(|c| (c.bottom as i64, c.height as i64))).is_ok()
        );
        Self { columns }
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn area(&self) -> usize {
        self.columns.iter().map(|c| c.height).sum()
    }

    /// Rows shared by each pair of neighbouring columns.
    pub fn overlaps(&self) -> Vec<usize> {
        self.columns
            .windows(2)
            .map(|w| w[0].top() + 1 - w[1].bottom)
            .collect()
    }

    pub fn stats(&self) -> ParallelogramStats {
        ParallelogramStats {
            area: self.area(),
            col_count: self.columns.len(),
            overlaps: self.overlaps(),
        }
    }
}

impl TryFrom<ParallelogramRepr> for ParallelogramPolyomino {
    type Error = ObjectError;
    fn try_from(r: ParallelogramRepr) -> Result<Self, ObjectError> {
        Self::new(r.columns.into_iter().map(|[b, h]| (b, h)))
    }
}

impl From<ParallelogramPolyomino> for ParallelogramRepr {
    fn from(p: ParallelogramPolyomino) -> Self {
        ParallelogramRepr {
            columns: p
                .columns
                .iter()
                .map(|c| [c.bottom as i64, c.height as i64])
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example() {
        let bottoms = [0, 0, 2, 2, 3, 5, 5, 5];
        let heights = [3, 4, 2, 4, 4, 2, 2, 3];
        let p = ParallelogramPolyomino::new(bottoms.into_iter().zip(heights)).unwrap();
        let s = p.stats();
        assert_eq!((s.area, s.col_count), (24, 8));
        assert_eq!(s.overlaps, vec![3, 2, 2, 3, 2, 2, 2]);
    }

    #[test]
    fn small_shapes() {
        assert_eq!(ParallelogramPolyomino::new([(0, 1)]).unwrap().area(), 1);
        let p = ParallelogramPolyomino::new([(0, 1), (0, 3)]).unwrap();
        assert_eq!(p.overlaps(), vec![1]);
    }

    #[test]
    fn rejects_invalid_columns() {
        assert_eq!(
            ParallelogramPolyomino::new([(0, 2), (2, 1)]),
            Err(ObjectError::DisconnectedColumns { column: 2 })
        );
        assert_eq!(
            ParallelogramPolyomino::new([(0, 3), (0, 2)]),
            Err(ObjectError::NonMonotoneBoundary { column: 2 })
        );
        assert_eq!(
            ParallelogramPolyomino::new([(0, 3), (1, 1)]),
            Err(ObjectError::NonMonotoneBoundary { column: 2 })
        );
        assert_eq!(
            ParallelogramPolyomino::new([]),
            Err(ObjectError::EmptyInput)
        );
    }
}

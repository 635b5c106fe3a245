use serde::{Deserialize, Serialize};

use super::ObjectError;

/// A horizontal run of cells: `len` cells starting at column `start`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Row {
    pub start: usize,
    pub len: usize,
}

impl Row {
    /// One past the last occupied column.
    pub fn end(&self) -> usize {
        self.start + self.len
    }
}

/// A parallelogram polyomino whose rows, read bottom to top, begin and end
/// strictly to the right of the row below.
///
/// Rows are stored bottom first. The bottom row starts at column 0 and
/// consecutive rows share at least one column.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "StanleyRepr", into = "StanleyRepr")]
pub struct StanleyPolyomino {
    rows: Vec<Row>,
}

#[derive(Serialize, Deserialize)]
struct StanleyRepr {
    rows: Vec<[i64; 2]>,
}

impl TryFrom<StanleyRepr> for StanleyPolyomino {
    type Error = ObjectError;

    fn try_from(repr: StanleyRepr) -> Result<Self, Self::Error> {
        Self::new(repr.rows.into_iter().map(|[s, l]| (s, l)))
    }
}

impl From<StanleyPolyomino> for StanleyRepr {
    fn from(p: StanleyPolyomino) -> Self {
        StanleyRepr {
            rows: p
                .rows
                .iter()
                .map(|r| [r.start as i64, r.len as i64])
                .collect(),
        }
    }
}

/// The nine statistics carried by a Stanley polyomino.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StanleyStats {
    pub col: usize,
    pub row: usize,
    pub sper: usize,
    pub area: usize,
    pub point: usize,
    pub edgint: usize,
    pub adja: usize,
    pub first: usize,
    #[serde(rename = "firstD")]
    pub first_d: usize,
}

impl StanleyStats {
    pub const NAMES: [&'static str; 9] = [
        "col", "row", "sper", "area", "point", "edgint", "adja", "first", "firstD",
    ];

    pub fn get(&self, name: &str) -> Option<usize> {
        Some(match name {
            "col" => self.col,
            "row" => self.row,
            "sper" => self.sper,
            "area" => self.area,
            "point" => self.point,
            "edgint" => self.edgint,
            "adja" => self.adja,
            "first" => self.first,
            "firstD" => self.first_d,
            _ => return None,
        })
    }
}

impl StanleyPolyomino {
    /// Validates `(start, len)` pairs listed bottom row first.
    pub fn new(rows: impl IntoIterator<Item = (i64, i64)>) -> Result<Self, ObjectError> {
        let raw: Vec<(i64, i64)> = rows.into_iter().collect();
        if raw.is_empty() {
            return Err(ObjectError::EmptyInput);
        }
        for (i, &(start, len)) in raw.iter().enumerate() {
            if len < 1 {
                return Err(ObjectError::NegativeOrZeroLength { row: i + 1 });
            }
            if i == 0 && start != 0 {
                return Err(ObjectError::NotAnchored { start });
            }
        }
        for (i, pair) in raw.windows(2).enumerate() {
            let (s0, l0) = pair[0];
            let (s1, l1) = pair[1];
            let row = i + 2;
            if s1 <= s0 {
                return Err(ObjectError::NotLeftShifted { row });
            }
            if s1 + l1 <= s0 + l0 {
                return Err(ObjectError::NotRightShifted { row });
            }
            if s1 > s0 + l0 - 1 {
                return Err(ObjectError::RowsDisconnected { row });
            }
        }
        Ok(Self {
            rows: raw
                .into_iter()
                .map(|(s, l)| Row {
                    start: s as usize,
                    len: l as usize,
                })
                .collect(),
        })
    }

    /// Builds from rows already known to satisfy every invariant.
    pub(crate) fn from_rows_unchecked(rows: Vec<Row>) -> Self {
        debug_assert!(Self::new(rows.iter().map(|r| (r.start as i64, r.len as i64))).is_ok());
        Self { rows }
    }

    /// The single row of `len` cells.
    pub fn single_row(len: usize) -> Self {
        assert!(len >= 1);
        Self {
            rows: vec![Row { start: 0, len }],
        }
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Row> {
        self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn columns(&self) -> usize {
        self.rows.last().map(Row::end).unwrap_or(0)
    }

    pub fn area(&self) -> usize {
        self.rows.iter().map(|r| r.len).sum()
    }

    /// Columns shared by row `i` and row `i + 1` (0-based), for each `i`.
    pub fn overlaps(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.windows(2).map(|w| w[0].end() - w[1].start)
    }

    /// Length of the run of cells on the diagonal through the bottom-left
    /// cell, i.e. the largest `m` with `start_i = i` for all `i < m`.
    pub fn first_diagonal(&self) -> usize {
        self.rows
            .iter()
            .enumerate()
            .take_while(|(i, r)| r.start == *i)
            .count()
    }

    pub fn stats(&self) -> StanleyStats {
        let col = self.columns();
        let row = self.row_count();
        let area = self.area();
        let (mut point, mut edgint, mut adja) = (0, 0, 0);
        for overlap in self.overlaps() {
            point += overlap - 1;
            edgint += overlap.saturating_sub(2);
            adja += overlap;
        }
        StanleyStats {
            col,
            row,
            sper: col + row,
            area,
            point,
            edgint,
            adja,
            first: self.rows[0].len,
            first_d: self.first_diagonal(),
        }
    }

    /// The `a` and `b` sequences: `a` counts the new cells sticking out on
    /// the right of each row, `b` the cells of each row not covered by the
    /// row above (with the first/last entries reduced by one).
    pub fn ab_sequences(&self) -> (Vec<usize>, Vec<usize>) {
        let k = self.rows.len();
        let mut a = Vec::with_capacity(k);
        let mut b = Vec::with_capacity(k);
        a.push(self.rows[0].len - 1);
        for w in self.rows.windows(2) {
            a.push(w[1].end() - w[0].end());
            b.push(w[1].start - w[0].start);
        }
        b.push(self.rows[k - 1].len - 1);
        (a, b)
    }

    /// Inverse of [`ab_sequences`](Self::ab_sequences).
    pub fn from_ab_sequences(a: &[usize], b: &[usize]) -> Result<Self, ObjectError> {
        if a.is_empty() || a.len() != b.len() {
            return Err(ObjectError::EmptyInput);
        }
        let mut rows = Vec::with_capacity(a.len());
        let (mut start, mut end) = (0i64, a[0] as i64 + 1);
        rows.push((start, end - start));
        for i in 1..a.len() {
            start += b[i - 1] as i64;
            end += a[i] as i64;
            rows.push((start, end - start));
        }
        Self::new(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn five_rows() -> StanleyPolyomino {
        StanleyPolyomino::new([(0, 6), (3, 6), (4, 7), (10, 3), (11, 5)]).unwrap()
    }

    #[test]
    fn worked_example_statistics() {
        let s = five_rows().stats();
        assert_eq!((s.col, s.row, s.sper, s.area), (16, 5, 21, 27));
        assert_eq!((s.point, s.edgint, s.adja), (7, 4, 11));
        assert_eq!(s.first, 6);
    }

    #[test]
    fn worked_example_ab() {
        let (a, b) = five_rows().ab_sequences();
        assert_eq!(a, vec![5, 3, 2, 2, 3]);
        assert_eq!(b, vec![3, 1, 6, 1, 4]);
        assert_eq!(
            StanleyPolyomino::from_ab_sequences(&a, &b).unwrap(),
            five_rows()
        );
    }

    #[test]
    fn single_cell() {
        let p = StanleyPolyomino::new([(0, 1)]).unwrap();
        let s = p.stats();
        assert_eq!(
            (s.col, s.row, s.area, s.point, s.edgint, s.first, s.first_d),
            (1, 1, 1, 0, 0, 1, 1)
        );
        assert_eq!(p.ab_sequences(), (vec![0], vec![0]));
    }

    #[test]
    fn small_shapes() {
        let p = StanleyPolyomino::new([(0, 2), (1, 3)]).unwrap();
        assert_eq!((p.stats().first_d, p.stats().first), (2, 2));
        let q = StanleyPolyomino::new([(0, 2), (1, 2)]).unwrap();
        assert_eq!(q.ab_sequences(), (vec![1, 1], vec![1, 1]));
    }

    #[test]
    fn rejects_invalid_rows() {
        assert_eq!(StanleyPolyomino::new([]), Err(ObjectError::EmptyInput));
        assert_eq!(
            StanleyPolyomino::new([(0, 3), (3, 2)]),
            Err(ObjectError::RowsDisconnected { row: 2 })
        );
        assert_eq!(
            StanleyPolyomino::new([(0, 3), (0, 4)]),
            Err(ObjectError::NotLeftShifted { row: 2 })
        );
        assert_eq!(
            StanleyPolyomino::new([(0, 3), (1, 2)]),
            Err(ObjectError::NotRightShifted { row: 2 })
        );
        assert_eq!(
            StanleyPolyomino::new([(0, 0)]),
            Err(ObjectError::NegativeOrZeroLength { row: 1 })
        );
        assert_eq!(
            StanleyPolyomino::new([(1, 2)]),
            Err(ObjectError::NotAnchored { start: 1 })
        );
    }

    #[test]
    fn json_encoding() {
        let p = five_rows();
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(text, r#"{"rows":[[0,6],[3,6],[4,7],[10,3],[11,5]]}"#);
        assert_eq!(serde_json::from_str::<StanleyPolyomino>(&text).unwrap(), p);
        assert!(serde_json::from_str::<StanleyPolyomino>(r#"{"rows":[[0,3],[3,2]]}"#).is_err());
        let stats = serde_json::to_value(p.stats()).unwrap();
        assert_eq!(stats["firstD"], 1);
    }
}

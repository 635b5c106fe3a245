//! Validated combinatorial objects and their statistics.
//!
//! Every type here is an immutable value: constructors reject invalid input
//! instead of repairing it, and statistics are plain integer records.

mod any;
mod fountain;
mod parallelogram;
mod paths;
mod stanley;

pub use any::{Family, Object};
pub use fountain::{CoinFountain, FountainStats};
pub use parallelogram::{Column, ParallelogramPolyomino, ParallelogramStats};
pub(crate) use paths::{axis_steps, first_return};
pub use paths::{DyckPath, DyckStats, MotzkinPath, MotzkinStats, Step};
pub use stanley::{Row, StanleyPolyomino, StanleyStats};

use thiserror::Error;

/// Reasons a constructor refuses its input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ObjectError {
    #[error("empty input")]
    EmptyInput,
    #[error("row {row}: length must be at least 1")]
    NegativeOrZeroLength { row: usize },
    #[error("first row/column must start at offset 0, got {start}")]
    NotAnchored { start: i64 },
    #[error("row {row}: start does not strictly increase")]
    NotLeftShifted { row: usize },
    #[error("row {row}: end does not strictly increase")]
    NotRightShifted { row: usize },
    #[error("row {row} shares no column with the row below")]
    RowsDisconnected { row: usize },
    #[error("column {column} shares no row with the column to its left")]
    DisconnectedColumns { column: usize },
    #[error("column {column}: bottom or top boundary decreases")]
    NonMonotoneBoundary { column: usize },
    #[error("column {column}: negative bottom or height below 1")]
    BadColumn { column: usize },
    #[error("invalid step {0:?}")]
    BadStep(char),
    #[error("path dips below the axis at step {step}")]
    BelowAxis { step: usize },
    #[error("path ends at height {height}, not on the axis")]
    Unbalanced { height: i64 },
    #[error("Dyck path contains a flat step")]
    FlatInDyck,
    #[error("diagonal {index} must hold at least one coin")]
    NonPositiveDiagonal { index: usize },
    #[error("last diagonal must hold exactly one coin, got {0}")]
    BadLastDiagonal(i64),
    #[error("diagonal {index} exceeds its right neighbour by more than one")]
    DiagonalDrop { index: usize },
}

//! Verification suites: every closed form and bijection checked against
//! exhaustive enumeration, with one [`Report`] per suite.

mod bijections;
mod counts;
mod series;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::bijections::BijectionError;
use crate::catalog::CatalogError;
use crate::enumerate::{statistic, EnumError, Enumerator, FamilyBound};
use crate::objects::Object;
use crate::report::Report;
use crate::series::SeriesError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Enumeration(#[from] EnumError),
    #[error(transparent)]
    Bijection(#[from] BijectionError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Catalan,
    Transport,
    Bijections,
    FullFunction,
    Columns,
    Semiperimeter,
    Area,
    Cf,
    RowsColumns,
    Fountains,
    All,
}

impl Suite {
    pub const EACH: [Suite; 10] = [
        Suite::Catalan,
        Suite::Transport,
        Suite::Bijections,
        Suite::FullFunction,
        Suite::Columns,
        Suite::Semiperimeter,
        Suite::Area,
        Suite::Cf,
        Suite::RowsColumns,
        Suite::Fountains,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Catalan => "catalan",
            Suite::Transport => "table1",
            Suite::Bijections => "bijections",
            Suite::FullFunction => "thm-full",
            Suite::Columns => "columns",
            Suite::Semiperimeter => "semiperimeter",
            Suite::Area => "area",
            Suite::Cf => "cf",
            Suite::RowsColumns => "corollary-2-13",
            Suite::Fountains => "fountains",
            Suite::All => "all",
        }
    }

    /// Size used when none is given.
    pub fn default_size(self) -> usize {
        match self {
            Suite::Catalan | Suite::Bijections | Suite::Columns | Suite::RowsColumns => 12,
            Suite::Transport => 9,
            Suite::FullFunction => 6,
            Suite::Semiperimeter | Suite::Area => 14,
            Suite::Cf => 10,
            Suite::Fountains => 18,
            Suite::All => 0,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// Runs `suite`, or every suite for [`Suite::All`]. `max_size` replaces
/// each suite's default size.
pub fn run(
    suite: Suite,
    max_size: Option<usize>,
    en: &Enumerator,
) -> Result<Vec<Report>, VerifyError> {
    if suite == Suite::All {
        let mut reports = Vec::new();
        for s in Suite::EACH {
            reports.extend(run(s, max_size, en)?);
        }
        return Ok(reports);
    }
    let n = max_size.unwrap_or_else(|| suite.default_size());
    let report = match suite {
        Suite::Catalan => counts::catalan_counts(n, en)?,
        Suite::Transport => counts::transport(n, en)?,
        Suite::Bijections => bijections::bijections(n, en)?,
        Suite::FullFunction => series::thm_full(n, en)?,
        Suite::Columns => series::columns(n, en)?,
        Suite::Semiperimeter => series::semiperimeter(n, en)?,
        Suite::Area => series::area(n, en)?,
        Suite::Cf => series::cf(n, en)?,
        Suite::RowsColumns => counts::rows_and_columns(n, en)?,
        Suite::Fountains => counts::fountains(n, en)?,
        Suite::All => unreachable!(),
    };
    Ok(vec![report])
}

/// Objects of every size in `values`, concatenated.
fn collect_all(
    en: &Enumerator,
    values: impl IntoIterator<Item = usize>,
    bound: impl Fn(usize) -> FamilyBound,
) -> Result<Vec<Object>, VerifyError> {
    let mut out = Vec::new();
    for v in values {
        out.extend(en.collect(bound(v))?);
    }
    Ok(out)
}

fn stat(obj: &Object, name: &str) -> usize {
    statistic(obj, name).expect("suites only read defined statistics")
}

fn report(suite: Suite) -> Report {
    Report::new(suite.name())
}

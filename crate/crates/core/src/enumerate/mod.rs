//! Exhaustive, duplicate-free generation of every family under a size
//! bound, in canonical order.
//!
//! Objects are produced by a depth-first walk over canonical prefixes, so
//! the order is lexicographic on the JSON field encoding. Parallel runs
//! split the walk at its upper levels and concatenate the pieces in order,
//! giving the same stream as a sequential run.

mod cache;
mod trees;

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use thiserror::Error;

use crate::objects::{Family, Object};
use crate::series::{Coeff, SeriesError, TruncatedSeries, Vars};
use trees::{Dfs, Tree, TreeVisitor};

/// Default bound on the length of one stream.
pub const DEFAULT_CAP: usize = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("family {family} cannot be bounded by {measure}")]
    UnsupportedPair { family: Family, measure: Measure },
    #[error("stream exceeds the cap of {cap} objects")]
    CapExceeded { cap: usize },
    #[error("statistic {statistic:?} is not defined on {family}")]
    UnknownStatistic { family: Family, statistic: String },
    #[error("cache: {0}")]
    Cache(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// The size parameter a stream is bounded by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Measure {
    Columns,
    Semiperimeter,
    Area,
    Semilength,
    Steps,
    Diagonals,
    EvenCoins,
    Coins,
}

impl Measure {
    pub const ALL: [Measure; 8] = [
        Measure::Columns,
        Measure::Semiperimeter,
        Measure::Area,
        Measure::Semilength,
        Measure::Steps,
        Measure::Diagonals,
        Measure::EvenCoins,
        Measure::Coins,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Measure::Columns => "columns",
            Measure::Semiperimeter => "semiperimeter",
            Measure::Area => "area",
            Measure::Semilength => "semilength",
            Measure::Steps => "steps",
            Measure::Diagonals => "diagonals",
            Measure::EvenCoins => "evenCoins",
            Measure::Coins => "coins",
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Measure {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Measure::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown measure {s:?}"))
    }
}

/// A family together with the exact size of the objects wanted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilyBound {
    pub family: Family,
    pub measure: Measure,
    pub value: usize,
}

impl FamilyBound {
    pub fn new(family: Family, measure: Measure, value: usize) -> Result<Self, EnumError> {
        use Family::*;
        use Measure::*;
        let supported = matches!(
            (family, measure),
            (Stanley, Columns | Semiperimeter | Area)
                | (Dyck, Semilength)
                | (PeaklessMotzkin, Steps)
                | (Fountain, Diagonals | EvenCoins | Coins)
                | (Parallelogram, Area)
        );
        if supported {
            Ok(Self {
                family,
                measure,
                value,
            })
        } else {
            Err(EnumError::UnsupportedPair { family, measure })
        }
    }

    pub fn stanley_columns(n: usize) -> Self {
        Self {
            family: Family::Stanley,
            measure: Measure::Columns,
            value: n,
        }
    }

    pub fn stanley_semiperimeter(n: usize) -> Self {
        Self {
            family: Family::Stanley,
            measure: Measure::Semiperimeter,
            value: n,
        }
    }

    pub fn stanley_area(n: usize) -> Self {
        Self {
            family: Family::Stanley,
            measure: Measure::Area,
            value: n,
        }
    }

    pub fn dyck(semilength: usize) -> Self {
        Self {
            family: Family::Dyck,
            measure: Measure::Semilength,
            value: semilength,
        }
    }

    pub fn peakless_motzkin(steps: usize) -> Self {
        Self {
            family: Family::PeaklessMotzkin,
            measure: Measure::Steps,
            value: steps,
        }
    }

    pub fn fountain_diagonals(m: usize) -> Self {
        Self {
            family: Family::Fountain,
            measure: Measure::Diagonals,
            value: m,
        }
    }

    pub fn fountain_even_coins(n: usize) -> Self {
        Self {
            family: Family::Fountain,
            measure: Measure::EvenCoins,
            value: n,
        }
    }

    pub fn fountain_coins(n: usize) -> Self {
        Self {
            family: Family::Fountain,
            measure: Measure::Coins,
            value: n,
        }
    }

    pub fn parallelogram_area(n: usize) -> Self {
        Self {
            family: Family::Parallelogram,
            measure: Measure::Area,
            value: n,
        }
    }
}

impl fmt::Display for FamilyBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} with {} = {}", self.family, self.measure, self.value)
    }
}

/// Lazy canonical stream; yields `CapExceeded` once instead of the object
/// past the cap, then stops.
pub struct Enumeration {
    inner: Box<dyn Iterator<Item = Object> + Send>,
    cap: usize,
    produced: usize,
    failed: bool,
}

impl Iterator for Enumeration {
    type Item = Result<Object, EnumError>;
    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        let obj = self.inner.next()?;
        if self.produced == self.cap {
            self.failed = true;
            return Some(Err(EnumError::CapExceeded { cap: self.cap }));
        }
        self.produced += 1;
        Some(Ok(obj))
    }
}

/// Canonical stream of `bound` with the default cap.
pub fn enumerate(bound: FamilyBound) -> Enumeration {
    Enumerator::default().stream(bound)
}

/// Enumeration settings.
#[derive(Debug, Clone)]
pub struct Enumerator {
    pub cap: usize,
    pub jobs: usize,
    pub cache_dir: Option<PathBuf>,
}

impl Default for Enumerator {
    fn default() -> Self {
        Self {
            cap: DEFAULT_CAP,
            jobs: 1,
            cache_dir: None,
        }
    }
}

struct Streamer;

impl TreeVisitor<Box<dyn Iterator<Item = Object> + Send>> for Streamer {
    fn visit<T: Tree>(self, tree: T) -> Box<dyn Iterator<Item = Object> + Send> {
        let root = tree.root();
        Box::new(Dfs::new(tree, root))
    }
}

struct Parallel<'a> {
    pool: &'a rayon::ThreadPool,
    cap: usize,
}

/// Piece of the split walk: an object emitted at an upper level, or a
/// subtree still to be walked.
enum Piece<N> {
    Done(Object),
    Subtree(N),
}

impl TreeVisitor<Result<Vec<Object>, EnumError>> for Parallel<'_> {
    fn visit<T: Tree>(self, tree: T) -> Result<Vec<Object>, EnumError> {
        let target = 8 * self.pool.current_num_threads();
        let mut pieces = vec![Piece::Subtree(tree.root())];
        for _ in 0..6 {
            if pieces.len() >= target {
                break;
            }
            let mut next = Vec::with_capacity(pieces.len() * 2);
            for piece in pieces {
                match piece {
                    Piece::Done(obj) => next.push(Piece::Done(obj)),
                    Piece::Subtree(node) => {
                        if let Some(obj) = tree.emit(&node) {
                            next.push(Piece::Done(obj));
                        }
                        next.extend(tree.children(&node).into_iter().map(Piece::Subtree));
                    }
                }
            }
            pieces = next;
        }
        let cap = self.cap;
        let parts: Vec<Result<Vec<Object>, EnumError>> = self.pool.install(|| {
            pieces
                .into_par_iter()
                .map(|piece| match piece {
                    Piece::Done(obj) => Ok(vec![obj]),
                    Piece::Subtree(node) => {
                        let mut out = Vec::new();
                        for obj in Dfs::new(tree.clone(), node) {
                            if out.len() == cap {
                                return Err(EnumError::CapExceeded { cap });
                            }
                            out.push(obj);
                        }
                        Ok(out)
                    }
                })
                .collect()
        });
        let mut all = Vec::new();
        for part in parts {
            all.extend(part?);
            if all.len() > cap {
                return Err(EnumError::CapExceeded { cap });
            }
        }
        Ok(all)
    }
}

impl Enumerator {
    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs.max(1);
        self
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn with_cache_dir(mut self, dir: Option<PathBuf>) -> Self {
        self.cache_dir = dir;
        self
    }

    /// Lazy sequential stream. Never touches the cache.
    pub fn stream(&self, bound: FamilyBound) -> Enumeration {
        Enumeration {
            inner: trees::with_tree(&bound, Streamer),
            cap: self.cap,
            produced: 0,
            failed: false,
        }
    }

    /// The whole stream, using the cache and worker threads when
    /// configured.
    pub fn collect(&self, bound: FamilyBound) -> Result<Vec<Object>, EnumError> {
        if let Some(dir) = &self.cache_dir {
            if let Some(hit) = cache::load(dir, &bound)? {
                if hit.len() > self.cap {
                    return Err(EnumError::CapExceeded { cap: self.cap });
                }
                return Ok(hit);
            }
        }
        let objects = if self.jobs > 1 {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(self.jobs)
                .build()
                .map_err(|e| EnumError::Cache(e.to_string()))?;
            trees::with_tree(
                &bound,
                Parallel {
                    pool: &pool,
                    cap: self.cap,
                },
            )?
        } else {
            self.stream(bound).collect::<Result<Vec<_>, _>>()?
        };
        if let Some(dir) = &self.cache_dir {
            cache::store(dir, &bound, &objects)?;
        }
        Ok(objects)
    }

    pub fn count(&self, bound: FamilyBound) -> Result<usize, EnumError> {
        if self.cache_dir.is_none() && self.jobs <= 1 {
            let mut n = 0;
            for item in self.stream(bound) {
                item?;
                n += 1;
            }
            return Ok(n);
        }
        Ok(self.collect(bound)?.len())
    }

    /// Sum over the stream of `prod var^statistic`. The first mark is the
    /// grade variable and the order is the largest exponent it reaches.
    pub fn aggregate_polynomial(
        &self,
        bound: FamilyBound,
        marks: &[(&str, &str)],
    ) -> Result<TruncatedSeries, EnumError> {
        self.aggregate_filtered(bound, marks, |_| true)
    }

    /// As [`aggregate_polynomial`](Self::aggregate_polynomial), over the
    /// objects accepted by `keep`.
    pub fn aggregate_filtered(
        &self,
        bound: FamilyBound,
        marks: &[(&str, &str)],
        keep: impl Fn(&Object) -> bool,
    ) -> Result<TruncatedSeries, EnumError> {
        assert!(!marks.is_empty(), "at least one mark is needed");
        let names: Vec<&str> = marks.iter().map(|(_, v)| *v).collect();
        let vars = Vars::new(&names, names[0])?.shared();
        let objects: Vec<Object> = self
            .collect(bound)?
            .into_iter()
            .filter(|o| keep(o))
            .collect();
        let mut order = 0;
        for obj in &objects {
            order = order.max(statistic(obj, marks[0].0)? as i32);
        }
        aggregate(&objects, marks, &vars, order)
    }

    /// Number of objects for each value of `statistic`.
    pub fn count_grouped(
        &self,
        bound: FamilyBound,
        statistic_name: &str,
    ) -> Result<BTreeMap<usize, usize>, EnumError> {
        let mut groups = BTreeMap::new();
        for obj in self.collect(bound)? {
            *groups.entry(statistic(&obj, statistic_name)?).or_insert(0) += 1;
        }
        Ok(groups)
    }
}

/// A statistic by record name, or `UnknownStatistic`.
pub fn statistic(obj: &Object, name: &str) -> Result<usize, EnumError> {
    obj.statistic(name)
        .ok_or_else(|| EnumError::UnknownStatistic {
            family: obj.family(),
            statistic: name.to_string(),
        })
}

/// Sum of `prod var^statistic` over `objects`, as a series over `vars`.
pub fn aggregate(
    objects: &[Object],
    marks: &[(&str, &str)],
    vars: &Arc<Vars>,
    order: i32,
) -> Result<TruncatedSeries, EnumError> {
    let slots: Vec<usize> = marks
        .iter()
        .map(|(_, v)| vars.index(v))
        .collect::<Result<_, _>>()?;
    let mut terms = Vec::with_capacity(objects.len());
    for obj in objects {
        let mut e = [0; crate::series::MAX_VARS];
        for ((stat, _), &slot) in marks.iter().zip(&slots) {
            e[slot] += statistic(obj, stat)? as i32;
        }
        terms.push((e, Coeff::from_integer(1.into())));
    }
    Ok(TruncatedSeries::from_terms(vars, order, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn count(bound: FamilyBound) -> usize {
        Enumerator::default().count(bound).unwrap()
    }

    #[test]
    fn small_counts() {
        assert_eq!(count(FamilyBound::stanley_columns(4)), 5);
        assert_eq!(count(FamilyBound::stanley_semiperimeter(7)), 8);
        assert_eq!(count(FamilyBound::stanley_area(6)), 6);
        assert_eq!(count(FamilyBound::peakless_motzkin(4)), 4);
        assert_eq!(count(FamilyBound::fountain_diagonals(3)), 5);
    }

    #[test]
    fn empty_path_is_the_only_path_of_length_zero() {
        let all: Vec<Object> = enumerate(FamilyBound::dyck(0))
            .map(Result::unwrap)
            .collect();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].to_json(), r#"{"word":""}"#);
        assert_eq!(count(FamilyBound::peakless_motzkin(0)), 1);
    }

    #[test]
    fn streams_are_sorted_and_duplicate_free() {
        let bounds = [
            FamilyBound::stanley_columns(6),
            FamilyBound::stanley_semiperimeter(9),
            FamilyBound::stanley_area(9),
            FamilyBound::dyck(5),
            FamilyBound::peakless_motzkin(7),
            FamilyBound::fountain_diagonals(6),
            FamilyBound::fountain_even_coins(6),
            FamilyBound::fountain_coins(9),
            FamilyBound::parallelogram_area(7),
        ];
        for bound in bounds {
            let all: Vec<Object> = enumerate(bound).map(Result::unwrap).collect();
            assert!(all.windows(2).all(|w| w[0] < w[1]), "{bound}");
            let distinct: HashSet<String> = all.iter().map(Object::to_json).collect();
            assert_eq!(distinct.len(), all.len());
        }
    }

    #[test]
    fn grouped_counts() {
        let e = Enumerator::default();
        let g = e
            .count_grouped(FamilyBound::stanley_area(6), "row")
            .unwrap();
        assert_eq!(g, BTreeMap::from([(1, 1), (2, 4), (3, 1)]));
        let g = e
            .count_grouped(FamilyBound::parallelogram_area(4), "colCount")
            .unwrap();
        assert_eq!(g[&2], 4);
        let g = e
            .count_grouped(FamilyBound::stanley_columns(2), "row")
            .unwrap();
        assert_eq!(g, BTreeMap::from([(1, 1)]));
        assert!(matches!(
            e.count_grouped(FamilyBound::dyck(2), "area"),
            Err(EnumError::UnknownStatistic { .. })
        ));
    }

    #[test]
    fn unsupported_pairs_and_caps() {
        assert!(matches!(
            FamilyBound::new(Family::Dyck, Measure::Area, 3),
            Err(EnumError::UnsupportedPair { .. })
        ));
        let small = Enumerator::default().with_cap(4);
        let items: Vec<_> = small.stream(FamilyBound::stanley_columns(4)).collect();
        assert_eq!(items.len(), 5);
        assert_eq!(items[4], Err(EnumError::CapExceeded { cap: 4 }));
        assert_eq!(
            small.with_jobs(3).collect(FamilyBound::stanley_columns(4)),
            Err(EnumError::CapExceeded { cap: 4 })
        );
    }

    #[test]
    fn parallel_matches_sequential() {
        for bound in [
            FamilyBound::stanley_columns(8),
            FamilyBound::dyck(6),
            FamilyBound::fountain_even_coins(7),
        ] {
            let seq = Enumerator::default().collect(bound).unwrap();
            let par = Enumerator::default().with_jobs(4).collect(bound).unwrap();
            assert_eq!(seq, par);
        }
    }

    #[test]
    fn aggregate_polynomials() {
        let e = Enumerator::default();
        let marks = [("col", "x"), ("row", "y"), ("area", "z"), ("point", "q")];
        let p = e
            .aggregate_polynomial(FamilyBound::stanley_columns(4), &marks)
            .unwrap();
        let expected =
            TruncatedSeries::parse(p.vars(), 4, "x^4(yz^4 + y^3z^6 + qz^6y^2 + 2z^5y^2)").unwrap();
        assert_eq!(p, expected);
        let p = e
            .aggregate_polynomial(FamilyBound::stanley_columns(1), &marks[..3])
            .unwrap();
        assert_eq!(p.to_string(), "x*y*z");
    }
}

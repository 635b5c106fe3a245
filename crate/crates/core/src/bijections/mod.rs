//! Maps between Stanley polyominoes and the other families.
//!
//! Recursive definitions are run with an explicit list of pending
//! operations: the word or fountain is peeled from the left, and the
//! recorded operations are then applied to the base polyomino in reverse.

use thiserror::Error;

use crate::enumerate::{EnumError, Enumerator, FamilyBound};
use crate::objects::{
    axis_steps, first_return, CoinFountain, DyckPath, MotzkinPath, Object, ObjectError,
    ParallelogramPolyomino, Row, StanleyPolyomino, Step,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("path has a peak")]
    NotPeakless,
    #[error("path contains UUU or DDD")]
    ContainsTriple,
    #[error("polyomino has a single column")]
    TooSmall,
    #[error("no preimage found")]
    NoPreimage,
    #[error("{count} preimages found")]
    MultiplePreimages { count: usize },
    #[error("preimage size {size} exceeds the bound {bound}")]
    SizeBound { size: usize, bound: usize },
    #[error(transparent)]
    Object(#[from] ObjectError),
    #[error(transparent)]
    Enumeration(#[from] EnumError),
}

/// Dyck path `U^{a_1} D^{b_1} ... U^{a_k} D^{b_k}` built from the `a` and
/// `b` sequences.
pub fn phi(p: &StanleyPolyomino) -> DyckPath {
    let (a, b) = p.ab_sequences();
    let mut steps = Vec::with_capacity(2 * (p.columns() - 1));
    for (&up, &down) in a.iter().zip(&b) {
        steps.extend(std::iter::repeat_n(Step::U, up));
        steps.extend(std::iter::repeat_n(Step::D, down));
    }
    DyckPath::from_steps_unchecked(steps)
}

pub fn phi_inv(d: &DyckPath) -> StanleyPolyomino {
    if d.is_empty() {
        return StanleyPolyomino::single_row(1);
    }
    let (a, b): (Vec<usize>, Vec<usize>) = d.runs().into_iter().unzip();
    StanleyPolyomino::from_ab_sequences(&a, &b).expect("Dyck runs give valid a and b sequences")
}

/// Edits applied to a polyomino while unwinding a recursion.
#[derive(Debug, Clone, Copy)]
enum Edit {
    /// One more cell on the left of each of the first `n` rows.
    Widen(usize),
    /// A new bottom row of `len` cells starting one unit left of the
    /// current first row.
    RowBelow(usize),
}

fn apply(rows: &mut Vec<Row>, edit: Edit) {
    for r in rows.iter_mut() {
        r.start += 1;
    }
    match edit {
        Edit::Widen(n) => {
            for r in rows.iter_mut().take(n) {
                r.start -= 1;
                r.len += 1;
            }
        }
        Edit::RowBelow(len) => rows.insert(0, Row { start: 0, len }),
    }
}

fn build(base: usize, edits: &[Edit]) -> StanleyPolyomino {
    let mut rows = vec![Row {
        start: 0,
        len: base,
    }];
    for &edit in edits.iter().rev() {
        apply(&mut rows, edit);
    }
    StanleyPolyomino::from_rows_unchecked(rows)
}

fn hills(steps: &[Step]) -> usize {
    let mut h = 0i64;
    let mut n = 0;
    for w in steps.windows(2) {
        if h == 0 && w[0] == Step::U && w[1] == Step::D {
            n += 1;
        }
        h += if w[0] == Step::U { 1 } else { -1 };
    }
    n
}

/// Peakless Motzkin path of length `n` to a polyomino of semiperimeter
/// `n + 2`.
pub fn chi(m: &MotzkinPath) -> Result<StanleyPolyomino, BijectionError> {
    if !m.is_peakless() {
        return Err(BijectionError::NotPeakless);
    }
    let mut word = m.steps().to_vec();
    let mut edits = Vec::new();
    while let Some(&head) = word.first() {
        if head == Step::F {
            edits.push(Edit::Widen(1));
            word.remove(0);
            continue;
        }
        let r = first_return(&word);
        let k = axis_steps(&word) + 1;
        debug_assert_eq!(k, axis_steps(&word[r..]) + 2);
        edits.push(Edit::RowBelow(k));
        let mut rest = word[1..r - 1].to_vec();
        rest.extend_from_slice(&word[r..]);
        word = rest;
    }
    Ok(build(1, &edits))
}

/// Dyck path avoiding `UUU` and `DDD` of semilength `n` to a polyomino of
/// semiperimeter `n + 3`.
pub fn chi_prime(d: &DyckPath) -> Result<StanleyPolyomino, BijectionError> {
    if !d.avoids_triples() {
        return Err(BijectionError::ContainsTriple);
    }
    let mut word = d.steps().to_vec();
    let mut edits = Vec::new();
    while !word.is_empty() {
        if word[1] == Step::D {
            edits.push(Edit::Widen(1));
            word.drain(..2);
            continue;
        }
        // word = U beta U D D gamma, where U beta U D D is the first
        // return factor. The rest is gamma followed by beta, so that gamma
        // is recovered as the part before the (hills(gamma) + 1)-th hill.
        let r = first_return(&word);
        edits.push(Edit::RowBelow(hills(&word[r..]) + 2));
        let mut rest = word[r..].to_vec();
        rest.extend_from_slice(&word[1..r - 3]);
        word = rest;
    }
    Ok(build(2, &edits))
}

/// Coin fountain with `m` diagonals to a polyomino with `m + 1` columns and
/// area `2e - o`.
pub fn f_map(c: &CoinFountain) -> StanleyPolyomino {
    let d = c.diagonals();
    let edits: Vec<Edit> = d[..d.len() - 1]
        .iter()
        .map(|&k| {
            if k % 2 == 1 {
                Edit::RowBelow(k / 2 + 2)
            } else {
                Edit::Widen(k / 2)
            }
        })
        .collect();
    build(2, &edits)
}

pub fn f_inv(p: &StanleyPolyomino) -> Result<CoinFountain, BijectionError> {
    if p.columns() < 2 {
        return Err(BijectionError::TooSmall);
    }
    let mut rows = p.rows().to_vec();
    let mut diagonals = Vec::new();
    while rows.len() > 1 || rows[0].len > 2 {
        let current = StanleyPolyomino::new(rows.iter().map(|r| (r.start as i64, r.len as i64)))?;
        let d = current.first_diagonal();
        let r = rows[0].len;
        if r >= d + 2 {
            diagonals.push(2 * d);
            for row in rows.iter_mut().take(d) {
                row.len -= 1;
            }
            for row in rows.iter_mut().skip(d) {
                row.start -= 1;
            }
        } else {
            debug_assert!(r >= 2 && d + 1 >= r);
            diagonals.push(2 * r - 3);
            rows.remove(0);
            let shift = rows[0].start;
            for row in rows.iter_mut() {
                row.start -= shift;
            }
        }
    }
    diagonals.push(1);
    Ok(CoinFountain::new(diagonals.into_iter().map(|d| d as i64))?)
}

/// Dyck path whose peaks are the column heights and whose valleys are the
/// overlaps minus one.
pub fn h_map(p: &ParallelogramPolyomino) -> DyckPath {
    let cols = p.columns();
    let overlaps = p.overlaps();
    let mut steps = vec![Step::U; cols[0].height];
    for (i, &o) in overlaps.iter().enumerate() {
        steps.extend(std::iter::repeat_n(Step::D, cols[i].height - o + 1));
        steps.extend(std::iter::repeat_n(Step::U, cols[i + 1].height - o + 1));
    }
    steps.extend(std::iter::repeat_n(Step::D, cols[cols.len() - 1].height));
    DyckPath::from_steps_unchecked(steps)
}

/// Parallelogram polyomino of area `n` with `k` columns to a fountain with
/// `e = n` and `o = n - k`.
pub fn psi(p: &ParallelogramPolyomino) -> Result<CoinFountain, BijectionError> {
    f_inv(&phi_inv(&h_map(p)))
}

/// The maps without a constructive inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableMap {
    Chi,
    ChiPrime,
}

/// Finds the unique preimage of `target` by listing the source family at
/// the matching size, which must not exceed `size_bound`.
pub fn table_inverse(
    map: TableMap,
    target: &StanleyPolyomino,
    size_bound: usize,
) -> Result<Object, BijectionError> {
    let sper = target.stats().sper;
    let (bound, size) = match map {
        TableMap::Chi => {
            let n = sper.checked_sub(2).ok_or(BijectionError::NoPreimage)?;
            (FamilyBound::peakless_motzkin(n), n)
        }
        TableMap::ChiPrime => {
            let n = sper.checked_sub(3).ok_or(BijectionError::NoPreimage)?;
            (FamilyBound::dyck(n), n)
        }
    };
    if size > size_bound {
        return Err(BijectionError::SizeBound {
            size,
            bound: size_bound,
        });
    }
    let mut found = Vec::new();
    for obj in Enumerator::default().stream(bound) {
        let obj = obj?;
        let image = match (&obj, map) {
            (Object::Motzkin(m), TableMap::Chi) => chi(m)?,
            (Object::Dyck(d), TableMap::ChiPrime) if d.avoids_triples() => chi_prime(d)?,
            _ => continue,
        };
        if &image == target {
            found.push(obj);
        }
    }
    match found.len() {
        0 => Err(BijectionError::NoPreimage),
        1 => Ok(found.remove(0)),
        count => Err(BijectionError::MultiplePreimages { count }),
    }
}

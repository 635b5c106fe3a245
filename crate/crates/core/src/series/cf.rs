use super::{SeriesError, TruncatedSeries};

/// Iterates `s <- phi(s)` from `seed` until two successive iterates agree.
/// A contracting map gains at least one correct order per round, so more
/// than `order + 2` rounds means `phi` does not contract.
pub fn solve_fixed_point<F>(phi: F, seed: TruncatedSeries) -> Result<TruncatedSeries, SeriesError>
where
    F: Fn(&TruncatedSeries) -> Result<TruncatedSeries, SeriesError>,
{
    let rounds = seed.order().max(0) as usize + 2;
    let mut current = seed;
    for _ in 0..rounds {
        let next = phi(&current)?;
        if next == current {
            return Ok(next);
        }
        current = next;
    }
    Err(SeriesError::NoContraction { rounds })
}

/// Evaluates `N_0 / T_1` where `T_k = D_k - N_k / T_{k+1}` and the
/// innermost level `T_{depth+1}` is `tail`. The result is accepted only if
/// evaluating one level deeper gives the same truncated series.
pub fn continued_fraction<N, D>(
    numerator: N,
    denominator: D,
    tail: &TruncatedSeries,
    depth: usize,
) -> Result<TruncatedSeries, SeriesError>
where
    N: Fn(usize) -> Result<TruncatedSeries, SeriesError>,
    D: Fn(usize) -> Result<TruncatedSeries, SeriesError>,
{
    let order = tail.order();
    if depth == 0 {
        return Err(SeriesError::Unstable { depth, order });
    }
    let eval = |depth: usize| -> Result<TruncatedSeries, SeriesError> {
        let mut t = tail.clone();
        for k in (1..=depth).rev() {
            t = denominator(k)?.try_sub(&numerator(k)?.try_div(&t)?)?;
        }
        numerator(0)?.try_div(&t)
    };
    let shallow = eval(depth)?;
    if shallow != eval(depth + 1)? {
        return Err(SeriesError::Unstable { depth, order });
    }
    Ok(shallow)
}

//! Dyck paths by peaks (p), sum of peak heights (q) and sum of valley
//! heights (v), as a continued fraction, with its specializations.

use std::sync::Arc;

use serde::Serialize;

use super::{
    fibonacci, gf_area, integers, mono, poly, strings, univariate, univariate_vars, CatalogError,
};
use crate::report::Check;
use crate::series::{continued_fraction, int, TruncatedSeries, Vars};

/// Layout of `A(p, q, v)`: graded by q, with v allowed negative powers so
/// that every level of the fraction starts with the monomial `v`.
pub fn pqv_vars() -> Arc<Vars> {
    Vars::new(&["p", "q", "v"], "q")
        .and_then(|v| v.with_laurent(&["v"]))
        .expect("fixed layout")
        .shared()
}

fn default_depth(order: usize, depth: Option<usize>) -> usize {
    depth.unwrap_or(order + 2)
}

/// `A(p, q, v) = -1 + v / (1 + v - p q v - v / (1 + v - p q^2 v^2 - ...))`
/// through `q^order`.
pub fn a_pqv(order: usize, depth: Option<usize>) -> Result<TruncatedSeries, CatalogError> {
    let v = pqv_vars();
    let n = order as i32;
    let var_v = TruncatedSeries::var(&v, n, "v")?;
    let one = TruncatedSeries::one(&v, n);
    let level = |k: usize| {
        let k = k as i32;
        Ok(&one + &var_v - mono(&v, n, 1, &[("p", 1), ("q", k), ("v", k)]))
    };
    let fraction = continued_fraction(
        |_| Ok(var_v.clone()),
        level,
        &var_v,
        default_depth(order, depth),
    )?;
    let a = fraction - one;
    if a.has_negative_exponents() {
        return Err(CatalogError::CancellationFailure("A(p, q, v)".into()));
    }
    Ok(a)
}

/// `-1 + 1 / (2 - q^2 - 1 / (2 - q^3 - ...))` through `q^order`.
pub fn a_qq1_direct(order: usize, depth: Option<usize>) -> Result<TruncatedSeries, CatalogError> {
    let v = univariate_vars("q");
    let n = order as i32;
    let one = TruncatedSeries::one(&v, n);
    let level = |k: usize| Ok(poly(&v, n, "2") - mono(&v, n, 1, &[("q", k as i32 + 1)]));
    let fraction = continued_fraction(
        |_| Ok(one.clone()),
        level,
        &one,
        default_depth(order, depth),
    )?;
    Ok(fraction - one)
}

#[derive(Debug, Clone, Serialize)]
pub struct ContinuedFractions {
    pub order: usize,
    pub depth: usize,
    pub a: TruncatedSeries,
    pub a_qq1: TruncatedSeries,
    pub a_1q1: TruncatedSeries,
    pub a_1qq: TruncatedSeries,
    pub a_pp0: TruncatedSeries,
    pub checks: Vec<Check>,
}

/// `A(p, q, v)` and its specializations `A(q, q, 1)`, `A(1, q, 1)`,
/// `A(1, q, q)` and `A(p, p, 0)`.
pub fn gf_continued_fractions(
    order: usize,
    depth: Option<usize>,
) -> Result<ContinuedFractions, CatalogError> {
    let depth = default_depth(order, depth);
    let a = a_pqv(order, Some(depth))?;
    let p_to_q = |s: &TruncatedSeries| s.substitute_monomial("p", &int(1), &[("q", 1)]);
    let a_qq1 = univariate(&p_to_q(&a.evaluate("v", &int(1))?)?)?;
    let a_1q1 = univariate(&a.evaluate("p", &int(1))?.evaluate("v", &int(1))?)?;
    let a_1qq = univariate(&a.evaluate("p", &int(1))?.substitute_monomial(
        "v",
        &int(1),
        &[("q", 1)],
    )?)?;
    let p_vars = univariate_vars("p");
    let n = order as i32;
    let a_pp0 = p_to_q(&a.evaluate("v", &int(0))?)?.project(&p_vars, n, &[("q", "p")])?;

    let direct = a_qq1_direct(order, Some(depth))?;
    let closed = poly(&p_vars, n, "p^2") * poly(&p_vars, n, "1 - p - p^2").invert()?;
    let fib: Vec<_> = (2..=order as u32).map(|m| fibonacci(m - 1)).collect();
    let pp0 = integers(&a_pp0, "A(p, p, 0)")?;
    let by_area = gf_area(order)?.project(&univariate_vars("q"), n, &[("z", "q")])?;
    let single_cell = mono(&univariate_vars("q"), n, 1, &[("q", 1)]);
    let checks = vec![
        Check::equal(
            "A(q, q, 1) = direct continued fraction",
            direct.to_string(),
            a_qq1.to_string(),
        ),
        Check::equal(
            "A(q, q, 1) + q = series by area",
            by_area.to_string(),
            (&a_qq1 + &single_cell).to_string(),
        ),
        Check::equal(
            "A(p, p, 0) = p^2/(1 - p - p^2)",
            closed.to_string(),
            a_pp0.to_string(),
        ),
        Check::equal(
            "[p^n]A(p, p, 0) = F(n-1)",
            strings(&fib),
            strings(&pp0.into_iter().skip(2).collect::<Vec<_>>()),
        ),
    ];
    Ok(ContinuedFractions {
        order,
        depth,
        a,
        a_qq1,
        a_1q1,
        a_1qq,
        a_pp0,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_order_terms() {
        let a = a_pqv(6, None).unwrap();
        let v = pqv_vars();
        let q4 = TruncatedSeries::parse(&v, 6, "p + 3p^2 + 3p^3 + p^4 + p^2v").unwrap();
        assert_eq!(a.coefficient_of("q", 4).unwrap().terms(), q4.terms());
        let q6 = TruncatedSeries::parse(
            &v,
            6,
            "p(p^5 + 5p^4 + 3p^3v + p^2v^2 + 10p^3 + 6p^2v + pv^2 + 10p^2 + 3pv + 5p + 1)",
        )
        .unwrap();
        assert_eq!(a.coefficient_of("q", 6).unwrap().terms(), q6.terms());
    }

    #[test]
    fn specializations() {
        let cf = gf_continued_fractions(9, None).unwrap();
        assert!(cf.checks.iter().all(Check::passed), "{:?}", cf.checks);
        assert_eq!(
            cf.a_1q1.integer_coefficients().unwrap(),
            vec![0, 1, 2, 4, 9, 20, 46, 105, 242, 557]
        );
        assert_eq!(
            cf.a_1qq.integer_coefficients().unwrap(),
            vec![0, 1, 2, 4, 8, 17, 36, 76, 162, 345]
        );
    }
}

//! Generating functions by columns and by semiperimeter, with `u` marking
//! the length of the first row. Kernel roots are obtained as fixed points
//! of their quadratic equations, so no square roots are taken.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::{binomial, catalan, fibonacci, integers, poly, strings, univariate, CatalogError};
use crate::report::Check;
use crate::series::{int, solve_fixed_point, Coeff, TruncatedSeries, Vars};

/// `G(u)` together with `G(1)`.
#[derive(Debug, Clone, Serialize)]
pub struct KernelGf {
    pub g_u: TruncatedSeries,
    pub g_one: TruncatedSeries,
    pub checks: Vec<Check>,
}

fn xu_vars() -> Arc<Vars> {
    Vars::new(&["x", "u"], "x").expect("fixed layout").shared()
}

fn coefficient_checks(
    name: &str,
    s: &TruncatedSeries,
    from: usize,
    expected: impl Fn(u32) -> BigInt,
) -> Result<Check, CatalogError> {
    let actual = integers(s, name)?;
    let order = s.order().max(0) as usize;
    let want: Vec<BigInt> = (from..=order).map(|n| expected(n as u32)).collect();
    let got: Vec<BigInt> = actual.into_iter().skip(from).collect();
    Ok(Check::equal(name, strings(&want), strings(&got)))
}

/// Columns: the root `r = 1 + x r^2` gives `G(u) = x u / (1 - x r u)`.
pub fn gf_columns(order_x: usize) -> Result<KernelGf, CatalogError> {
    let v = xu_vars();
    let n = order_x as i32;
    let one = TruncatedSeries::one(&v, n);
    let x = TruncatedSeries::var(&v, n, "x")?;
    let r = solve_fixed_point(|r| Ok(&one + &(&x * &(r * r))), one.clone())?;
    let g_u = poly(&v, n, "x u") * (&one - &poly(&v, n, "x u") * &r).invert()?;
    let g_one = univariate(&g_u.evaluate("u", &int(1))?)?;
    let other = univariate(&((&r - &one) * r.invert()?))?;
    let mut checks = vec![Check::equal(
        "G(1) = (r - 1)/r",
        other.to_string(),
        g_one.to_string(),
    )];
    checks.push(coefficient_checks(
        "[x^n]G(1) = binom(2n-2, n-1)/n",
        &g_one,
        1,
        |n| catalan(n - 1),
    )?);
    Ok(KernelGf { g_u, g_one, checks })
}

fn out_of_range(what: &'static str, n: usize, k: usize) -> CatalogError {
    CatalogError::OutOfRange {
        what,
        n: n as i64,
        k: k as i64,
    }
}

/// Stanley polyominoes with `n` columns and `k` cells in the first row.
pub fn coeff_columns(n: usize, k: usize) -> Result<BigInt, CatalogError> {
    if n < 2 || k < 1 || k > n {
        return Err(out_of_range("coeff_columns", n, k));
    }
    let (n, k) = (n as i64, k as i64);
    let top = Coeff::from_integer(BigInt::from(k - 1) * binomial(2 * n - k - 1, n - k));
    let value = top / Coeff::from_integer(BigInt::from(2 * n - k - 1));
    assert!(value.is_integer());
    Ok(value.to_integer())
}

#[derive(Debug, Clone, Serialize)]
pub struct ColumnsCorollaries {
    /// Total number of first-row cells, by columns.
    pub first_row_total: TruncatedSeries,
    /// Polyominoes without strictly internal edges.
    pub edgint_free: TruncatedSeries,
    /// Polyominoes without interior points.
    pub point_free: TruncatedSeries,
    /// Mean first-row length `C_n / C_{n-1}` for `n = 1..=order`.
    pub average_first_row: Vec<String>,
    pub checks: Vec<Check>,
}

pub fn gf_columns_corollaries(order_x: usize) -> Result<ColumnsCorollaries, CatalogError> {
    let gf = gf_columns(order_x)?;
    let first_row_total = univariate(&gf.g_u.derivative("u")?.evaluate("u", &int(1))?)?;
    let x = super::univariate_vars("x");
    let n = order_x as i32;
    let edgint_free = poly(&x, n, "x (1 - 2x)") * poly(&x, n, "x^2 - 3x + 1").invert()?;
    let point_free = poly(&x, n, "x (1 - x)") * poly(&x, n, "1 - 2x").invert()?;
    let mut checks = vec![coefficient_checks(
        "[x^n] first-row total = C_n",
        &first_row_total,
        1,
        catalan,
    )?];
    checks.push(coefficient_checks(
        "[x^n] edgint-free = F(2n-3)",
        &edgint_free,
        2,
        |n| fibonacci(2 * n - 3),
    )?);
    checks.push(coefficient_checks(
        "[x^n] point-free = 2^(n-2)",
        &point_free,
        2,
        |n| BigInt::from(2).pow(n - 2),
    )?);
    let average_first_row = (1..=order_x as u32)
        .map(|n| Coeff::new(catalan(n), catalan(n - 1)).to_string())
        .collect();
    Ok(ColumnsCorollaries {
        first_row_total,
        edgint_free,
        point_free,
        average_first_row,
        checks,
    })
}

/// Semiperimeter: with `t = 1 + x - x^2` the root `R = x r` of
/// `R = (x + R^2) / t` gives `G(u) = x^2 u / (1 - R u)`.
pub fn gf_semiperimeter(order_x: usize) -> Result<KernelGf, CatalogError> {
    let v = xu_vars();
    let n = order_x as i32;
    let one = TruncatedSeries::one(&v, n);
    let x = TruncatedSeries::var(&v, n, "x")?;
    let t_inv = poly(&v, n, "1 + x - x^2").invert()?;
    let big_r = solve_fixed_point(|r| Ok((&x + &(r * r)) * &t_inv), x.clone())?;
    let kernel = &big_r * &big_r - poly(&v, n, "1 + x - x^2") * &big_r + &x;
    let g_u = poly(&v, n, "x^2 u") * (&one - &(&big_r * &poly(&v, n, "u"))).invert()?;
    let g_one = univariate(&g_u.evaluate("u", &int(1))?)?;
    let other = univariate(&(poly(&v, n, "x^2") * (&one - &big_r).invert()?))?;
    let checks = vec![
        Check::equal(
            "R^2 - (1 + x - x^2) R + x = 0",
            "0".to_string(),
            kernel.to_string(),
        ),
        Check::equal("G(1) = x^2/(1 - R)", other.to_string(), g_one.to_string()),
    ];
    Ok(KernelGf { g_u, g_one, checks })
}

/// Stanley polyominoes with semiperimeter `n` and `k` cells in the first
/// row, by the double binomial sum.
pub fn coeff_semiperimeter(n: usize, k: usize) -> Result<BigInt, CatalogError> {
    if n < 2 || k < 1 || k > n {
        return Err(out_of_range("coeff_semiperimeter", n, k));
    }
    if k == 1 {
        return Ok(BigInt::from((n == 2) as u8));
    }
    if n < k + 1 {
        return Ok(BigInt::zero());
    }
    let (n, k) = (n as i64, k as i64);
    let mut total = Coeff::zero();
    for j in 0..=n - k - 1 {
        let l = n - k - 1 - j;
        let lead = Coeff::new(
            BigInt::from(k - 1) * binomial(2 * j + k - 1, j),
            BigInt::from(2 * j + k - 1),
        );
        let mut inner = BigInt::zero();
        for b in 0..=l / 2 {
            inner += binomial(n + j - b - 3, l - b) * binomial(l - b, b);
        }
        if l % 2 == 1 {
            inner = -inner;
        }
        total += lead * Coeff::from_integer(inner);
    }
    assert!(total.is_integer());
    Ok(total.to_integer())
}

#[derive(Debug, Clone, Serialize)]
pub struct SemiperimeterCorollaries {
    /// Total number of first-row cells, by semiperimeter.
    pub first_row_total: TruncatedSeries,
    /// `G(1) / x`, whose self-convolution is the first-row total.
    pub shifted_g_one: TruncatedSeries,
    /// Polyominoes without strictly internal edges.
    pub edgint_free: TruncatedSeries,
    pub checks: Vec<Check>,
}

pub fn gf_semiperimeter_corollaries(
    order_x: usize,
) -> Result<SemiperimeterCorollaries, CatalogError> {
    let gf = gf_semiperimeter(order_x)?;
    let first_row_total = univariate(&gf.g_u.derivative("u")?.evaluate("u", &int(1))?)?;
    let shifted_g_one = gf.g_one.shift(&[("x", -1)])?;
    let a = integers(&shifted_g_one, "G(1)/x")?;
    let convolution: Vec<BigInt> = (0..=order_x)
        .map(|m| {
            (0..=m)
                .filter(|&i| i < a.len() && m - i < a.len())
                .map(|i| &a[i] * &a[m - i])
                .fold(BigInt::zero(), |s, t| s + t)
        })
        .collect();
    let total = integers(&first_row_total, "first-row total")?;
    let shared = total.len().min(a.len());
    let mut checks = vec![Check::equal(
        "first-row total = (G(1)/x)^2 by convolution",
        strings(&convolution[..shared]),
        strings(&total[..shared]),
    )];
    let x = super::univariate_vars("x");
    let n = order_x as i32;
    let edgint_free = poly(&x, n, "x^3 - x") * poly(&x, n, "x^2 + x - 1").invert()?;
    checks.push(coefficient_checks(
        "[x^n] edgint-free = F(n-1)",
        &edgint_free,
        2,
        |n| fibonacci(n - 1),
    )?);
    Ok(SemiperimeterCorollaries {
        first_row_total,
        shifted_g_one,
        edgint_free,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xu(order: i32, text: &str) -> TruncatedSeries {
        TruncatedSeries::parse(&xu_vars(), order, text).unwrap()
    }

    #[test]
    fn columns_expansion() {
        let gf = gf_columns(7).unwrap();
        let printed = xu(
            7,
            "xu + x^2u^2 + u^2(1 + u)x^3 + u^2(u^2 + 2u + 2)x^4 + u^2(u^3 + 3u^2 + 5u + 5)x^5 \
             + u^2(u^4 + 4u^3 + 9u^2 + 14u + 14)x^6 + u^2(u^5 + 5u^4 + 14u^3 + 28u^2 + 42u + 42)x^7",
        );
        assert_eq!(gf.g_u, printed);
        assert!(gf.checks.iter().all(Check::passed));
        assert_eq!(coeff_columns(6, 3).unwrap(), BigInt::from(14));
        assert_eq!(coeff_columns(6, 4).unwrap(), BigInt::from(9));
        assert_eq!(coeff_columns(2, 2).unwrap(), BigInt::from(1));
        assert!(coeff_columns(1, 1).is_err());
        assert_eq!(gf_columns(1).unwrap().g_u.to_string(), "x*u");
    }

    #[test]
    fn columns_corollaries() {
        let c = gf_columns_corollaries(12).unwrap();
        assert!(c.checks.iter().all(Check::passed), "{:?}", c.checks);
        assert_eq!(c.first_row_total.coefficient(&[("x", 5)]).unwrap(), int(42));
        assert_eq!(c.edgint_free.coefficient(&[("x", 5)]).unwrap(), int(13));
        assert_eq!(c.point_free.coefficient(&[("x", 5)]).unwrap(), int(8));
        assert_eq!(c.average_first_row[1], "2");
    }

    #[test]
    fn semiperimeter_expansion() {
        let gf = gf_semiperimeter(8).unwrap();
        let printed = xu(
            8,
            "x^2u + u^2x^3 + u^3x^4 + (u^4 + u^2)x^5 + u^2(u^3 + 2u + 1)x^6 \
             + u^2(u^4 + 3u^2 + 2u + 2)x^7 + u^2(u^5 + 4u^3 + 3u^2 + 5u + 4)x^8",
        );
        assert_eq!(gf.g_u, printed);
        assert!(gf.checks.iter().all(Check::passed), "{:?}", gf.checks);
        assert_eq!(coeff_semiperimeter(7, 4).unwrap(), BigInt::from(3));
        assert_eq!(coeff_semiperimeter(7, 3).unwrap(), BigInt::from(2));
        assert_eq!(coeff_semiperimeter(8, 3).unwrap(), BigInt::from(5));
    }

    #[test]
    fn semiperimeter_corollaries() {
        let c = gf_semiperimeter_corollaries(12).unwrap();
        assert!(c.checks.iter().all(Check::passed), "{:?}", c.checks);
        assert_eq!(c.edgint_free.coefficient(&[("x", 7)]).unwrap(), int(8));
        assert_eq!(c.edgint_free.coefficient(&[("x", 3)]).unwrap(), int(1));
    }
}

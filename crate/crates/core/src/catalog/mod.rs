//! Generating functions and coefficient formulas for Stanley polyominoes,
//! computed from their closed forms with truncated series.
//!
//! Each entry also carries the internal consistency checks that need no
//! enumeration (two closed forms agreeing, integrality, known number
//! sequences); comparison against enumeration lives in
//! [`verify`](crate::verify).

mod area;
mod cf;
mod full;
mod kernel;

pub use area::gf_area;
pub use cf::{a_pqv, a_qq1_direct, gf_continued_fractions, pqv_vars, ContinuedFractions};
pub use full::{full_vars, gf_full, gf_full_forms, max_area, FullForms};
pub use kernel::{
    coeff_columns, coeff_semiperimeter, gf_columns, gf_columns_corollaries, gf_semiperimeter,
    gf_semiperimeter_corollaries, ColumnsCorollaries, KernelGf, SemiperimeterCorollaries,
};

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::series::{Coeff, SeriesError, TruncatedSeries, Vars};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("negative exponents survive in {0}")]
    CancellationFailure(String),
    #[error("the two forms of {0} disagree")]
    MismatchBetweenForms(String),
    #[error("{what} is undefined for n = {n}, k = {k}")]
    OutOfRange { what: &'static str, n: i64, k: i64 },
    #[error("{0} has non-integer coefficients")]
    NotIntegral(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

pub fn catalan(n: u32) -> BigInt {
    binomial(2 * n as i64, n as i64) / BigInt::from(n + 1)
}

pub fn fibonacci(n: u32) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// Series in the single variable `name`, graded by it.
pub fn univariate_vars(name: &str) -> Arc<Vars> {
    Vars::new(&[name], name)
        .expect("variable is its own grade")
        .shared()
}

/// Projects onto the grade variable alone, failing if any other variable
/// still occurs.
fn univariate(s: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
    let name = s.vars().grade_name().to_string();
    s.project(&univariate_vars(&name), s.order(), &[])
}

fn mono(vars: &Arc<Vars>, order: i32, c: i64, pairs: &[(&str, i32)]) -> TruncatedSeries {
    TruncatedSeries::monomial(vars, order, Coeff::from_integer(c.into()), pairs)
        .expect("catalog variables exist")
}

fn poly(vars: &Arc<Vars>, order: i32, text: &str) -> TruncatedSeries {
    TruncatedSeries::parse(vars, order, text).expect("catalog expressions parse")
}

/// Integer coefficients of a univariate series, indexed by exponent.
fn integers(s: &TruncatedSeries, what: &str) -> Result<Vec<BigInt>, CatalogError> {
    s.univariate_coefficients()?
        .into_iter()
        .map(|c| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(CatalogError::NotIntegral(what.to_string()))
            }
        })
        .collect()
}

fn ensure_integral(s: &TruncatedSeries, what: &str) -> Result<(), CatalogError> {
    if s.all_integer() {
        Ok(())
    } else {
        Err(CatalogError::NotIntegral(what.to_string()))
    }
}

fn strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(BigInt::to_string).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_sequences() {
        let c: Vec<BigInt> = (0..8).map(catalan).collect();
        assert_eq!(strings(&c), ["1", "1", "2", "5", "14", "42", "132", "429"]);
        let f: Vec<BigInt> = (0..10).map(fibonacci).collect();
        assert_eq!(
            strings(&f),
            ["0", "1", "1", "2", "3", "5", "8", "13", "21", "34"]
        );
        assert_eq!(binomial(5, 7), BigInt::zero());
    }
}

//! Truncated multivariate formal power series with exact rational
//! coefficients.
//!
//! A series lives over a [`Vars`] description: an ordered list of variable
//! names, the subset that may carry negative exponents (Laurent variables),
//! one grade variable whose degree is truncated at `order`, and optional
//! degree caps on further non-Laurent variables. Every operation keeps the
//! invariants: no stored term exceeds `order` in the grade variable or a cap
//! in a capped variable, no stored coefficient is zero, and non-Laurent
//! exponents are nonnegative.

mod cf;
mod json;
mod parse;

pub use cf::{continued_fraction, solve_fixed_point};

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Exact coefficient type.
pub type Coeff = BigRational;

/// Maximum number of variables a series can carry.
pub const MAX_VARS: usize = 8;

/// Exponent vector; slots past the variable count stay zero.
pub type Exps = [i32; MAX_VARS];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series are over different variable sets")]
    VariableMismatch,
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("series is not invertible: {0}")]
    NotInvertible(String),
    #[error("substitution would lower the degree of a truncated variable")]
    UnsoundSubstitution,
    #[error("fixed-point iteration did not stabilise within {rounds} rounds")]
    NoContraction { rounds: usize },
    #[error("continued fraction not stable at depth {depth} up to order {order}")]
    Unstable { depth: usize, order: i32 },
    #[error("division by a monomial left a remainder")]
    NotDivisible,
    #[error("parse error: {0}")]
    Parse(String),
}

/// Variable layout shared by all series of one computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vars {
    names: Vec<String>,
    laurent: Vec<bool>,
    caps: Vec<Option<i32>>,
    grade: usize,
}

impl Vars {
    pub fn new(names: &[&str], grade: &str) -> Result<Self, SeriesError> {
        assert!(names.len() <= MAX_VARS, "at most {MAX_VARS} variables");
        let grade = names
            .iter()
            .position(|n| *n == grade)
            .ok_or_else(|| SeriesError::UnknownVariable(grade.to_string()))?;
        Ok(Self {
            names: names.iter().map(|s| s.to_string()).collect(),
            laurent: vec![false; names.len()],
            caps: vec![None; names.len()],
            grade,
        })
    }

    /// Allows negative exponents in `names`. The grade variable cannot be
    /// Laurent.
    pub fn with_laurent(mut self, names: &[&str]) -> Result<Self, SeriesError> {
        for n in names {
            let i = self.index(n)?;
            assert!(i != self.grade, "grade variable cannot be Laurent");
            self.laurent[i] = true;
        }
        Ok(self)
    }

    /// Drops every term whose exponent of `name` exceeds `max`.
    pub fn with_cap(mut self, name: &str, max: i32) -> Result<Self, SeriesError> {
        let i = self.index(name)?;
        assert!(!self.laurent[i] && i != self.grade);
        self.caps[i] = Some(max);
        Ok(self)
    }

    pub fn shared(self) -> Arc<Self> {
        Arc::new(self)
    }

    pub fn index(&self, name: &str) -> Result<usize, SeriesError> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| SeriesError::UnknownVariable(name.to_string()))
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn grade(&self) -> usize {
        self.grade
    }

    pub fn grade_name(&self) -> &str {
        &self.names[self.grade]
    }

    pub fn is_laurent(&self, i: usize) -> bool {
        self.laurent[i]
    }

    pub fn cap(&self, i: usize) -> Option<i32> {
        self.caps[i]
    }

    fn within_caps(&self, e: &Exps) -> bool {
        self.caps
            .iter()
            .zip(e)
            .all(|(cap, &x)| cap.is_none_or(|c| x <= c))
    }

    /// Exponent vector from `(name, exponent)` pairs.
    pub fn exps(&self, pairs: &[(&str, i32)]) -> Result<Exps, SeriesError> {
        let mut e = [0; MAX_VARS];
        for (name, k) in pairs {
            e[self.index(name)?] += k;
        }
        Ok(e)
    }
}

fn add_exps(a: &Exps, b: &Exps) -> Exps {
    let mut out = [0; MAX_VARS];
    for i in 0..MAX_VARS {
        out[i] = a[i] + b[i];
    }
    out
}

/// A truncated series over a [`Vars`] layout.
#[derive(Debug, Clone)]
pub struct TruncatedSeries {
    vars: Arc<Vars>,
    order: i32,
    terms: BTreeMap<Exps, Coeff>,
}

impl PartialEq for TruncatedSeries {
    fn eq(&self, other: &Self) -> bool {
        *self.vars == *other.vars && self.order == other.order && self.terms == other.terms
    }
}

impl TruncatedSeries {
    pub fn zero(vars: &Arc<Vars>, order: i32) -> Self {
        Self {
            vars: Arc::clone(vars),
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &Arc<Vars>, order: i32) -> Self {
        Self::constant(vars, order, Coeff::one())
    }

    pub fn constant(vars: &Arc<Vars>, order: i32, c: Coeff) -> Self {
        Self::from_terms(vars, order, [([0; MAX_VARS], c)])
    }

    pub fn integer(vars: &Arc<Vars>, order: i32, c: i64) -> Self {
        Self::constant(vars, order, Coeff::from_integer(c.into()))
    }

    /// `c * prod(name^k)`.
    pub fn monomial(
        vars: &Arc<Vars>,
        order: i32,
        c: Coeff,
        pairs: &[(&str, i32)],
    ) -> Result<Self, SeriesError> {
        let e = vars.exps(pairs)?;
        Ok(Self::from_terms(vars, order, [(e, c)]))
    }

    /// The series consisting of the single variable `name`.
    pub fn var(vars: &Arc<Vars>, order: i32, name: &str) -> Result<Self, SeriesError> {
        Self::monomial(vars, order, Coeff::one(), &[(name, 1)])
    }

    /// Builds a series, summing repeated exponents and dropping zero or
    /// out-of-range terms.
    pub fn from_terms(
        vars: &Arc<Vars>,
        order: i32,
        terms: impl IntoIterator<Item = (Exps, Coeff)>,
    ) -> Self {
        let mut acc: BTreeMap<Exps, Coeff> = BTreeMap::new();
        for (e, c) in terms {
            for (i, &x) in e.iter().enumerate().skip(vars.len()) {
                assert_eq!(x, 0, "exponent slot {i} is beyond the variable list");
            }
            for ((&x, &laurent), name) in e.iter().zip(&vars.laurent).zip(&vars.names) {
                assert!(
                    laurent || x >= 0,
                    "negative exponent of non-Laurent variable {name}"
                );
            }
            if e[vars.grade] > order || !vars.within_caps(&e) {
                continue;
            }
            *acc.entry(e).or_insert_with(Coeff::zero) += c;
        }
        acc.retain(|_, c| !c.is_zero());
        Self {
            vars: Arc::clone(vars),
            order,
            terms: acc,
        }
    }

    pub fn vars(&self) -> &Arc<Vars> {
        &self.vars
    }

    pub fn order(&self) -> i32 {
        self.order
    }

    pub fn terms(&self) -> &BTreeMap<Exps, Coeff> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn check(&self, other: &Self) -> Result<(), SeriesError> {
        if Arc::ptr_eq(&self.vars, &other.vars) || *self.vars == *other.vars {
            Ok(())
        } else {
            Err(SeriesError::VariableMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check(other)?;
        Ok(self.combine(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check(other)?;
        Ok(self.combine(other, true))
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        let order = self.order.min(other.order);
        let g = self.vars.grade;
        let mut terms: BTreeMap<Exps, Coeff> = self
            .terms
            .iter()
            .filter(|(e, _)| e[g] <= order)
            .map(|(e, c)| (*e, c.clone()))
            .collect();
        for (e, c) in other.terms.iter().filter(|(e, _)| e[g] <= order) {
            let slot = terms.entry(*e).or_insert_with(Coeff::zero);
            if negate {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Self {
            vars: Arc::clone(&self.vars),
            order,
            terms,
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check(other)?;
        let order = self.order.min(other.order);
        let g = self.vars.grade;
        let mut right: Vec<(&Exps, &Coeff)> = other.terms.iter().collect();
        right.sort_by_key(|(e, _)| e[g]);
        let mut acc: HashMap<Exps, Coeff> = HashMap::new();
        for (ea, ca) in &self.terms {
            let room = order - ea[g];
            if room < 0 {
                continue;
            }
            for (eb, cb) in &right {
                if eb[g] > room {
                    break;
                }
                let e = add_exps(ea, eb);
                if !self.vars.within_caps(&e) {
                    continue;
                }
                let prod = ca * *cb;
                match acc.get_mut(&e) {
                    Some(slot) => *slot += prod,
                    None => {
                        acc.insert(e, prod);
                    }
                }
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(Self {
            vars: Arc::clone(&self.vars),
            order,
            terms,
        })
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars, self.order);
        }
        Self {
            vars: Arc::clone(&self.vars),
            order: self.order,
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&Coeff::from_integer(c.into()))
    }

    /// Multiplies by `prod(name^k)`; exponents may be negative only for
    /// Laurent variables, or when every term is divisible.
    pub fn shift(&self, pairs: &[(&str, i32)]) -> Result<Self, SeriesError> {
        let m = self.vars.exps(pairs)?;
        let g = self.vars.grade;
        let order = self.order + m[g].min(0);
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let e2 = add_exps(e, &m);
            if (0..self.vars.len()).any(|i| !self.vars.laurent[i] && e2[i] < 0) {
                return Err(SeriesError::NotDivisible);
            }
            if e2[g] <= order && self.vars.within_caps(&e2) {
                terms.insert(e2, c.clone());
            }
        }
        Ok(Self {
            vars: Arc::clone(&self.vars),
            order,
            terms,
        })
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one(&self.vars, self.order);
        for _ in 0..n {
            result = &result * self;
        }
        result
    }

    /// Multiplicative inverse. The part of degree 0 in the grade variable
    /// must be a single monomial `c * m` with `m` built from Laurent
    /// variables only.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let g = self.vars.grade;
        let order = self.order;
        let n = order.max(0) as usize;
        let mut pieces: Vec<Vec<(Exps, Coeff)>> = vec![Vec::new(); n + 1];
        for (e, c) in &self.terms {
            if e[g] >= 0 && (e[g] as usize) <= n {
                pieces[e[g] as usize].push((*e, c.clone()));
            }
        }
        if pieces[0].len() != 1 {
            return Err(SeriesError::NotInvertible(format!(
                "{} terms of {}-degree 0",
                pieces[0].len(),
                self.vars.grade_name()
            )));
        }
        let (m, c) = pieces[0][0].clone();
        for ((&x, &laurent), name) in m.iter().zip(&self.vars.laurent).zip(&self.vars.names) {
            if x != 0 && !laurent {
                return Err(SeriesError::NotInvertible(format!(
                    "leading monomial involves non-Laurent variable {name}"
                )));
            }
        }
        let mut inv_m = [0; MAX_VARS];
        for i in 0..MAX_VARS {
            inv_m[i] = -m[i];
        }
        let inv_c = c.recip();
        let mut out: Vec<HashMap<Exps, Coeff>> = vec![HashMap::new(); n + 1];
        out[0].insert(inv_m, inv_c.clone());
        for k in 1..=n {
            let mut acc: HashMap<Exps, Coeff> = HashMap::new();
            for j in 1..=k {
                for (ea, ca) in &pieces[j] {
                    for (eb, cb) in &out[k - j] {
                        let e = add_exps(ea, eb);
                        if !self.vars.within_caps(&e) {
                            continue;
                        }
                        *acc.entry(e).or_insert_with(Coeff::zero) += ca * cb;
                    }
                }
            }
            let mut level = HashMap::new();
            for (e, s) in acc {
                if s.is_zero() {
                    continue;
                }
                let e2 = add_exps(&e, &inv_m);
                if self.vars.within_caps(&e2) {
                    level.insert(e2, -(s * &inv_c));
                }
            }
            out[k] = level;
        }
        let terms = out
            .into_iter()
            .flatten()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Ok(Self {
            vars: Arc::clone(&self.vars),
            order,
            terms,
        })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check(other)?;
        self.try_mul(&other.invert()?)
    }

    /// Replaces `var` by `c * prod(name^k)`. Rejected when some term would
    /// lose degree in the grade variable or a capped variable.
    pub fn substitute_monomial(
        &self,
        var: &str,
        c: &Coeff,
        pairs: &[(&str, i32)],
    ) -> Result<Self, SeriesError> {
        let vi = self.vars.index(var)?;
        let m = self.vars.exps(pairs)?;
        let watched: Vec<usize> = (0..self.vars.len())
            .filter(|&i| i == self.vars.grade || self.vars.caps[i].is_some())
            .collect();
        let mut acc: BTreeMap<Exps, Coeff> = BTreeMap::new();
        for (e, coeff) in &self.terms {
            let k = e[vi];
            if k < 0
                && (c.is_zero() || (0..self.vars.len()).any(|i| m[i] != 0 && !self.vars.laurent[i]))
            {
                return Err(SeriesError::UnsoundSubstitution);
            }
            let mut e2 = *e;
            e2[vi] = 0;
            for i in 0..MAX_VARS {
                e2[i] += k * m[i];
            }
            if watched.iter().any(|&i| e2[i] < e[i]) {
                return Err(SeriesError::UnsoundSubstitution);
            }
            if e2
                .iter()
                .zip(&self.vars.laurent)
                .any(|(&x, &laurent)| !laurent && x < 0)
            {
                return Err(SeriesError::UnsoundSubstitution);
            }
            let factor = if k == 0 {
                Coeff::one()
            } else if c.is_zero() {
                continue;
            } else if k > 0 {
                num_traits::pow(c.clone(), k as usize)
            } else {
                num_traits::pow(c.recip(), (-k) as usize)
            };
            if e2[self.vars.grade] > self.order || !self.vars.within_caps(&e2) {
                continue;
            }
            *acc.entry(e2).or_insert_with(Coeff::zero) += coeff * factor;
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Self {
            vars: Arc::clone(&self.vars),
            order: self.order,
            terms: acc,
        })
    }

    /// `var -> value` for a rational constant.
    pub fn evaluate(&self, var: &str, value: &Coeff) -> Result<Self, SeriesError> {
        self.substitute_monomial(var, value, &[])
    }

    /// Formal partial derivative. Differentiating in the grade variable
    /// lowers the order by one.
    pub fn derivative(&self, var: &str) -> Result<Self, SeriesError> {
        let vi = self.vars.index(var)?;
        let order = if vi == self.vars.grade {
            self.order - 1
        } else {
            self.order
        };
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e[vi] != 0)
            .map(|(e, c)| {
                let mut e2 = *e;
                e2[vi] -= 1;
                (e2, c * Coeff::from_integer(e[vi].into()))
            })
            .filter(|(e, _)| e[self.vars.grade] <= order)
            .collect();
        Ok(Self {
            vars: Arc::clone(&self.vars),
            order,
            terms,
        })
    }

    /// Coefficient of an exact monomial.
    pub fn coefficient(&self, pairs: &[(&str, i32)]) -> Result<Coeff, SeriesError> {
        let e = self.vars.exps(pairs)?;
        Ok(self.terms.get(&e).cloned().unwrap_or_else(Coeff::zero))
    }

    /// The part with `var` to the power `k`, with that power removed.
    pub fn coefficient_of(&self, var: &str, k: i32) -> Result<Self, SeriesError> {
        let vi = self.vars.index(var)?;
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e[vi] == k)
            .map(|(e, c)| {
                let mut e2 = *e;
                e2[vi] = 0;
                (e2, c.clone())
            })
            .collect();
        let order = if vi == self.vars.grade {
            self.order - k
        } else {
            self.order
        };
        Ok(Self {
            vars: Arc::clone(&self.vars),
            order,
            terms,
        })
    }

    /// Coefficients of a series whose only nonzero exponents are in the
    /// grade variable, indexed by that exponent.
    pub fn univariate_coefficients(&self) -> Result<Vec<Coeff>, SeriesError> {
        let g = self.vars.grade;
        let mut out = vec![Coeff::zero(); self.order.max(-1).saturating_add(1) as usize];
        for (e, c) in &self.terms {
            if (0..self.vars.len()).any(|i| i != g && e[i] != 0) {
                return Err(SeriesError::Parse(format!(
                    "series is not univariate in {}",
                    self.vars.grade_name()
                )));
            }
            out[e[g] as usize] = c.clone();
        }
        Ok(out)
    }

    /// Same as [`univariate_coefficients`](Self::univariate_coefficients)
    /// but demands integers.
    pub fn integer_coefficients(&self) -> Result<Vec<i64>, SeriesError> {
        self.univariate_coefficients()?
            .into_iter()
            .map(|c| {
                if c.is_integer() {
                    c.to_integer()
                        .to_i64()
                        .ok_or_else(|| SeriesError::Parse("overflow".into()))
                } else {
                    Err(SeriesError::Parse(format!("non-integer coefficient {c}")))
                }
            })
            .collect()
    }

    /// Moves truncation to another variable. Terms above `order` in the new
    /// grade variable are dropped; the caller vouches that no lower term
    /// was lost to the old truncation.
    pub fn retruncate(&self, vars: &Arc<Vars>, order: i32) -> Result<Self, SeriesError> {
        if vars.names != self.vars.names {
            return Err(SeriesError::VariableMismatch);
        }
        let terms = self.terms.iter().map(|(e, c)| (*e, c.clone()));
        Ok(Self::from_terms(vars, order, terms))
    }

    /// Re-expresses the series over `target`. Each variable keeps its name
    /// unless listed in `renames` as `(old, new)`; variables missing from
    /// `target` must not occur in any term.
    pub fn project(
        &self,
        target: &Arc<Vars>,
        order: i32,
        renames: &[(&str, &str)],
    ) -> Result<Self, SeriesError> {
        let mut slots = Vec::with_capacity(self.vars.len());
        for name in &self.vars.names {
            let new = renames
                .iter()
                .find(|(old, _)| old == name)
                .map_or(name.as_str(), |(_, new)| *new);
            slots.push(target.index(new).ok());
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            let mut e2 = [0; MAX_VARS];
            for (i, slot) in slots.iter().enumerate() {
                match slot {
                    Some(j) => e2[*j] += e[i],
                    None if e[i] != 0 => return Err(SeriesError::VariableMismatch),
                    None => {}
                }
            }
            if (0..target.len()).any(|i| e2[i] < 0 && !target.laurent[i]) {
                return Err(SeriesError::NotDivisible);
            }
            terms.push((e2, c.clone()));
        }
        Ok(Self::from_terms(target, order, terms))
    }

    /// Lowers the order, dropping the terms above it.
    pub fn truncate(&self, order: i32) -> Self {
        let order = order.min(self.order);
        let g = self.vars.grade;
        Self {
            vars: Arc::clone(&self.vars),
            order,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[g] <= order)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    pub fn has_negative_exponents(&self) -> bool {
        self.terms.keys().any(|e| e.iter().any(|&x| x < 0))
    }

    pub fn all_integer(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn all_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Parses a polynomial expression such as `2*x^2y + (1-x)^3`.
    pub fn parse(vars: &Arc<Vars>, order: i32, text: &str) -> Result<Self, SeriesError> {
        parse::parse(vars, order, text)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let g = self.vars.grade;
        let mut terms: Vec<(&Exps, &Coeff)> = self.terms.iter().collect();
        terms.sort_by(|a, b| a.0[g].cmp(&b.0[g]).then(a.0.cmp(b.0)));
        for (n, (e, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if n == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() {
                factors.push(abs.to_string());
            }
            for (i, &k) in e.iter().take(self.vars.len()).enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(self.vars.names[i].clone()),
                    _ => factors.push(format!("{}^{}", self.vars.names[i], k)),
                }
            }
            if factors.is_empty() {
                factors.push("1".into());
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&TruncatedSeries> for &TruncatedSeries {
            type Output = TruncatedSeries;
            /// Panics when the variable layouts differ.
            fn $method(self, rhs: &TruncatedSeries) -> TruncatedSeries {
                self.$try(rhs).expect("series over the same variables")
            }
        }
        impl $trait<TruncatedSeries> for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $method(self, rhs: TruncatedSeries) -> TruncatedSeries {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&TruncatedSeries> for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $method(self, rhs: &TruncatedSeries) -> TruncatedSeries {
                (&self).$method(rhs)
            }
        }
        impl $trait<TruncatedSeries> for &TruncatedSeries {
            type Output = TruncatedSeries;
            fn $method(self, rhs: TruncatedSeries) -> TruncatedSeries {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        self.scale_int(-1)
    }
}

impl Neg for TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        self.scale_int(-1)
    }
}

/// `n` as an exact coefficient.
pub fn int(n: i64) -> Coeff {
    Coeff::from_integer(BigInt::from(n))
}

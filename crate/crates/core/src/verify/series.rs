use num_bigint::BigInt;
use serde_json::json;

use super::{collect_all, report, stat, Suite, VerifyError};
use crate::catalog::{
    coeff_columns, coeff_semiperimeter, gf_area, gf_columns, gf_columns_corollaries,
    gf_continued_fractions, gf_full_forms, gf_semiperimeter, gf_semiperimeter_corollaries,
    univariate_vars,
};
use crate::catalog::{full_vars, pqv_vars};
use crate::enumerate::{aggregate, Enumerator, FamilyBound};
use crate::objects::Object;
use crate::report::{Check, Report};
use crate::series::{int, Exps, TruncatedSeries, Vars, MAX_VARS};

/// Collapses `s` onto one variable whose exponent is `exponent(e)`.
fn collapse(
    s: &TruncatedSeries,
    name: &str,
    order: i32,
    exponent: impl Fn(&Exps) -> i32,
) -> TruncatedSeries {
    let terms = s.terms().iter().map(|(e, c)| {
        let mut x = [0; MAX_VARS];
        x[0] = exponent(e);
        (x, c.clone())
    });
    TruncatedSeries::from_terms(&univariate_vars(name), order, terms)
}

/// `s` without its terms of grade below `k`.
fn without_low(s: &TruncatedSeries, k: i32) -> TruncatedSeries {
    let g = s.vars().grade();
    let terms = s
        .terms()
        .iter()
        .filter(|(e, _)| e[g] >= k)
        .map(|(e, c)| (*e, c.clone()));
    TruncatedSeries::from_terms(s.vars(), s.order(), terms)
}

/// Number of objects for each value of the grade statistic, as a series.
fn counting_series(
    objects: &[Object],
    stat_name: &str,
    var: &str,
    order: usize,
) -> Result<TruncatedSeries, VerifyError> {
    Ok(aggregate(
        objects,
        &[(stat_name, var)],
        &univariate_vars(var),
        order as i32,
    )?)
}

fn xu(order: usize, text: &str) -> TruncatedSeries {
    let v = Vars::new(&["x", "u"], "x").expect("fixed layout").shared();
    TruncatedSeries::parse(&v, order as i32, text).expect("fixed expression")
}

fn same(name: impl Into<String>, expected: &TruncatedSeries, actual: &TruncatedSeries) -> Check {
    Check::verdict(
        name,
        expected == actual,
        json!(expected.to_string()),
        json!(actual.to_string()),
    )
}

fn coefficient(s: &TruncatedSeries, pairs: &[(&str, i32)]) -> Result<BigInt, VerifyError> {
    let c = s.coefficient(pairs)?;
    Ok(c.to_integer())
}

/// The five-variable function: both forms against enumeration, the
/// printed expansion, and its three one-variable specializations.
pub(super) fn thm_full(max: usize, en: &Enumerator) -> Result<Report, VerifyError> {
    let mut r = report(Suite::FullFunction);
    let forms = gf_full_forms(max)?;
    r.push(Check::verdict(
        "closed form = iterated form, no negative exponents",
        forms.closed == forms.iterated && !forms.closed.has_negative_exponents(),
        json!(forms.closed.len()),
        json!(forms.iterated.len()),
    ));
    let n = max as i32;
    let f = forms.closed.project(&full_vars(), n, &[])?;
    let objects = collect_all(en, 1..=max, FamilyBound::stanley_columns)?;
    let marks = [
        ("col", "x"),
        ("row", "y"),
        ("area", "z"),
        ("edgint", "p"),
        ("point", "q"),
    ];
    let oracle = aggregate(&objects, &marks, &full_vars(), n)?;
    r.push(same(
        format!("F = enumeration through x^{max}"),
        &oracle,
        &f,
    ));
    if max >= 5 {
        let printed = TruncatedSeries::parse(
            &full_vars(),
            5,
            "xyz + z^2yx^2 + yz^3(yz + 1)x^3 + (yz^4 + y^3z^6 + qz^6y^2 + 2z^5y^2)x^4 \
             + z^5(1 + y^3z^3 + z^2(q^2z^2 + 2qz + 3)y^2 + (pq^2z^3 + 2qz^2 + 3z)y)yx^5",
        )?;
        r.push(same(
            "printed expansion through x^5",
            &printed,
            &f.truncate(5),
        ));
    }
    let by_columns = collapse(&f, "x", n, |e| e[0]);
    let g1 = gf_columns(max)?.g_one;
    r.push(same("F(x,1,1,1,1) = G(1) by columns", &g1, &by_columns));
    let by_sper = collapse(&f, "x", n, |e| e[0] + e[1]);
    let s1 = gf_semiperimeter(max)?.g_one;
    r.push(same("F(x,x,1,1,1) = G(1) by semiperimeter", &s1, &by_sper));
    let by_area = collapse(&f, "z", n, |e| e[2]);
    r.push(same(
        "F(1,1,z,1,1) = series by area",
        &gf_area(max)?,
        &by_area,
    ));
    Ok(r)
}

pub(super) fn columns(max: usize, en: &Enumerator) -> Result<Report, VerifyError> {
    let mut r = report(Suite::Columns);
    let gf = gf_columns(max)?;
    r.extend(gf.checks.clone());
    if max >= 7 {
        let printed = xu(
            7,
            "xu + x^2u^2 + u^2(1 + u)x^3 + u^2(u^2 + 2u + 2)x^4 + u^2(u^3 + 3u^2 + 5u + 5)x^5 \
             + u^2(u^4 + 4u^3 + 9u^2 + 14u + 14)x^6 + u^2(u^5 + 5u^4 + 14u^3 + 28u^2 + 42u + 42)x^7",
        );
        r.push(same(
            "printed G(u) through x^7",
            &printed,
            &gf.g_u.truncate(7),
        ));
    }
    for n in 2..=max {
        let objects = en.collect(FamilyBound::stanley_columns(n))?;
        let mut formula = Vec::new();
        let mut series = Vec::new();
        let mut counted = Vec::new();
        for k in 1..=n {
            formula.push(coeff_columns(n, k)?.to_string());
            series.push(coefficient(&gf.g_u, &[("x", n as i32), ("u", k as i32)])?.to_string());
            counted.push(
                objects
                    .iter()
                    .filter(|o| stat(o, "first") == k)
                    .count()
                    .to_string(),
            );
        }
        r.push(Check::verdict(
            format!("[x^{n} u^k], k = 1..{n}: formula = series = enumeration"),
            formula == series && series == counted,
            json!({"formula": formula, "series": series}),
            json!(counted),
        ));
    }
    let c = gf_columns_corollaries(max)?;
    r.extend(c.checks.clone());
    let objects = collect_all(en, 1..=max, FamilyBound::stanley_columns)?;
    let total_first = aggregate_weighted(&objects, "col", "first", "x", max);
    r.push(same(
        "first-row total = enumeration",
        &total_first,
        &c.first_row_total,
    ));
    let edgint_free: Vec<Object> = objects
        .iter()
        .filter(|o| stat(o, "edgint") == 0)
        .cloned()
        .collect();
    let point_free: Vec<Object> = objects
        .iter()
        .filter(|o| stat(o, "point") == 0)
        .cloned()
        .collect();
    r.push(same(
        "edgint-free = enumeration",
        &without_low(&counting_series(&edgint_free, "col", "x", max)?, 2),
        &without_low(&c.edgint_free, 2),
    ));
    r.push(same(
        "point-free = enumeration",
        &without_low(&counting_series(&point_free, "col", "x", max)?, 2),
        &without_low(&c.point_free, 2),
    ));
    Ok(r)
}

/// `sum over objects of weight * var^grade`.
fn aggregate_weighted(
    objects: &[Object],
    grade: &str,
    weight: &str,
    var: &str,
    order: usize,
) -> TruncatedSeries {
    let terms = objects.iter().map(|o| {
        let mut e = [0; MAX_VARS];
        e[0] = stat(o, grade) as i32;
        (e, int(stat(o, weight) as i64))
    });
    TruncatedSeries::from_terms(&univariate_vars(var), order as i32, terms)
}

pub(super) fn semiperimeter(max: usize, en: &Enumerator) -> Result<Report, VerifyError> {
    let mut r = report(Suite::Semiperimeter);
    let gf = gf_semiperimeter(max)?;
    r.extend(gf.checks.clone());
    if max >= 8 {
        let printed = xu(
            8,
            "x^2u + u^2x^3 + u^3x^4 + (u^4 + u^2)x^5 + u^2(u^3 + 2u + 1)x^6 \
             + u^2(u^4 + 3u^2 + 2u + 2)x^7 + u^2(u^5 + 4u^3 + 3u^2 + 5u + 4)x^8",
        );
        r.push(same(
            "printed G(u) through x^8",
            &printed,
            &gf.g_u.truncate(8),
        ));
    }
    let motzkin: Vec<String> = (2..=max)
        .map(|n| {
            en.count(FamilyBound::peakless_motzkin(n - 2))
                .map(|c| c.to_string())
        })
        .collect::<Result<_, _>>()?;
    let g1: Vec<String> = (2..=max)
        .map(|n| coefficient(&gf.g_one, &[("x", n as i32)]).map(|c| c.to_string()))
        .collect::<Result<_, _>>()?;
    r.push(Check::equal(
        format!("[x^n]G(1) = peakless Motzkin paths with n - 2 steps, n <= {max}"),
        motzkin,
        g1,
    ));
    for n in 2..=max {
        let objects = en.collect(FamilyBound::stanley_semiperimeter(n))?;
        let mut formula = Vec::new();
        let mut series = Vec::new();
        let mut counted = Vec::new();
        for k in 1..=n {
            formula.push(coeff_semiperimeter(n, k)?.to_string());
            series.push(coefficient(&gf.g_u, &[("x", n as i32), ("u", k as i32)])?.to_string());
            counted.push(
                objects
                    .iter()
                    .filter(|o| stat(o, "first") == k)
                    .count()
                    .to_string(),
            );
        }
        r.push(Check::verdict(
            format!("[x^{n} u^k], k = 1..{n}: formula = series = enumeration"),
            formula == series && series == counted,
            json!({"formula": formula, "series": series}),
            json!(counted),
        ));
    }
    let c = gf_semiperimeter_corollaries(max)?;
    r.extend(c.checks.clone());
    let objects = collect_all(en, 2..=max, FamilyBound::stanley_semiperimeter)?;
    let total_first = aggregate_weighted(&objects, "sper", "first", "x", max);
    r.push(same(
        "first-row total = enumeration",
        &total_first,
        &c.first_row_total,
    ));
    let edgint_free: Vec<Object> = objects
        .iter()
        .filter(|o| stat(o, "edgint") == 0)
        .cloned()
        .collect();
    r.push(same(
        "edgint-free = enumeration",
        &counting_series(&edgint_free, "sper", "x", max)?,
        &without_low(&c.edgint_free, 2),
    ));
    Ok(r)
}

pub(super) fn area(max: usize, en: &Enumerator) -> Result<Report, VerifyError> {
    let mut r = report(Suite::Area);
    let by_area = gf_area(max)?;
    let objects = collect_all(en, 1..=max, FamilyBound::stanley_area)?;
    r.push(same(
        "series by area = enumeration",
        &counting_series(&objects, "area", "z", max)?,
        &by_area,
    ));
    let cf = gf_continued_fractions(max, None)?;
    let a_qq1 = cf
        .a_qq1
        .project(&univariate_vars("z"), max as i32, &[("q", "z")])?;
    r.push(same("A(q,q,1) = series by area", &by_area, &a_qq1));
    let single_cell =
        TruncatedSeries::monomial(&univariate_vars("z"), max as i32, int(1), &[("z", 1)])?;
    r.push(same(
        "A(q,q,1) + q = series by area",
        &by_area,
        &(a_qq1 + single_cell),
    ));
    let printed = [1, 1, 1, 2, 3, 6, 10, 19, 34, 63, 115];
    let shown = printed.len().min(max);
    let actual = by_area.integer_coefficients()?;
    r.push(Check::equal(
        "printed coefficients",
        printed[..shown].to_vec(),
        actual.iter().skip(1).take(shown).copied().collect(),
    ));
    Ok(r)
}

pub(super) fn cf(max: usize, en: &Enumerator) -> Result<Report, VerifyError> {
    let mut r = report(Suite::Cf);
    let cf = gf_continued_fractions(max, None)?;
    r.extend(cf.checks.clone());
    let paths = collect_all(en, 1..=max, FamilyBound::dyck)?;
    let marks = [("sump", "q"), ("nbp", "p"), ("sumv", "v")];
    let oracle = aggregate(&paths, &marks, &pqv_vars(), max as i32)?;
    r.push(same(
        format!("A(p,q,v) = Dyck enumeration through q^{max}"),
        &oracle,
        &cf.a,
    ));
    let flat = counting_series(&paths, "sump", "q", max)?;
    r.push(same(
        format!("A(1,q,1) = Dyck enumeration through q^{max}"),
        &flat,
        &cf.a_1q1,
    ));
    let parallelograms = collect_all(en, 1..=max, FamilyBound::parallelogram_area)?;
    r.push(same(
        "A(1,q,1) = parallelogram polyominoes by area",
        &counting_series(&parallelograms, "area", "q", max)?,
        &cf.a_1q1,
    ));
    let q4 = TruncatedSeries::parse(&pqv_vars(), max as i32, "p + 3p^2 + 3p^3 + p^4 + p^2v")?;
    if max >= 4 {
        r.push(Check::equal(
            "[q^4]A(p,q,v)",
            q4.to_string(),
            cf.a.coefficient_of("q", 4)?
                .retruncate(&pqv_vars(), max as i32)?
                .to_string(),
        ));
    }
    if max >= 6 {
        let q6 = TruncatedSeries::parse(
            &pqv_vars(),
            max as i32,
            "p(p^5 + 5p^4 + 3p^3v + p^2v^2 + 10p^3 + 6p^2v + pv^2 + 10p^2 + 3pv + 5p + 1)",
        )?;
        r.push(Check::equal(
            "[q^6]A(p,q,v)",
            q6.to_string(),
            cf.a.coefficient_of("q", 6)?
                .retruncate(&pqv_vars(), max as i32)?
                .to_string(),
        ));
        r.push(Check::equal(
            "[p^6]A(p,p,0)",
            "5".to_string(),
            coefficient(&cf.a_pp0, &[("p", 6)])?.to_string(),
        ));
    }
    let shown = 9.min(max);
    let a1q1 = [1, 2, 4, 9, 20, 46, 105, 242, 557];
    let a1qq = [1, 2, 4, 8, 17, 36, 76, 162, 345];
    r.push(Check::equal(
        "printed A(1,q,1)",
        a1q1[..shown].to_vec(),
        cf.a_1q1
            .integer_coefficients()?
            .into_iter()
            .skip(1)
            .take(shown)
            .collect(),
    ));
    r.push(Check::equal(
        "printed A(1,q,q)",
        a1qq[..shown].to_vec(),
        cf.a_1qq
            .integer_coefficients()?
            .into_iter()
            .skip(1)
            .take(shown)
            .collect(),
    ));
    Ok(r)
}

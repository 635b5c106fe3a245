//! The five-variable generating function by columns (x), rows (y),
//! area (z), strictly internal edges (p) and interior points (q).
//!
//! Both forms divide by factors such as `x z (z p q)^l - 1`, whose part of
//! degree 0 in x is not a monomial. Grading by z instead makes every such
//! factor start with a unit, so the work is done graded by area with the
//! column count capped, and then re-graded by columns. A polyomino with
//! `c` columns and `k` rows has at most `k (c - k + 1)` cells, so area up
//! to `floor((N + 1)^2 / 4)` captures every polyomino with at most `N`
//! columns.

use std::sync::Arc;

use serde::Serialize;

use super::{ensure_integral, mono, CatalogError};
use crate::series::{int, TruncatedSeries, Vars};

const NAMES: [&str; 5] = ["x", "y", "z", "p", "q"];

/// Both assembled forms, already compared.
#[derive(Debug, Clone, Serialize)]
pub struct FullForms {
    pub order_x: usize,
    pub closed: TruncatedSeries,
    pub iterated: TruncatedSeries,
}

/// Largest area of a polyomino with at most `n` columns.
pub fn max_area(n: usize) -> usize {
    (n + 1) * (n + 1) / 4
}

fn work_vars(order_x: usize, with_u: bool) -> Arc<Vars> {
    let mut names = NAMES.to_vec();
    if with_u {
        names.push("u");
    }
    Vars::new(&names, "z")
        .and_then(|v| v.with_laurent(&["p", "q"]))
        .and_then(|v| v.with_cap("x", order_x as i32))
        .expect("fixed layout")
        .shared()
}

/// The x-graded layout of the result.
pub fn full_vars() -> Arc<Vars> {
    Vars::new(&NAMES, "x").expect("fixed layout").shared()
}

fn tri(n: usize) -> i32 {
    (n * (n + 1) / 2) as i32
}

/// Closed form `G / (1 + H)`, graded by z.
fn closed_form(order_x: usize) -> Result<TruncatedSeries, CatalogError> {
    let v = work_vars(order_x, false);
    let z_order = max_area(order_x) as i32;
    let m = |c: i64, pairs: &[(&str, i32)]| mono(&v, z_order, c, pairs);
    let one = m(1, &[]);
    let p_minus_1 = m(1, &[("p", 1)]) - &one;
    let mut g = TruncatedSeries::zero(&v, z_order);
    let mut h = TruncatedSeries::zero(&v, z_order);
    let mut poch = one.clone();
    for l in 0..order_x {
        let li = l as i32;
        let delta = poch.invert()?;
        // x z (z p q)^l - 1
        let d1 = m(1, &[("x", 1), ("z", li + 1), ("p", li), ("q", li)]) - &one;
        // (z p q)^l z q p - 1
        let d2 = m(1, &[("z", li + 1), ("p", li + 1), ("q", li + 1)]) - &one;
        let pq_a = tri(l + 1) - 1; // l (l + 3) / 2
        let pq_b = tri(l);
        let g_num = m(
            1,
            &[
                ("x", li + 2),
                ("y", li + 2),
                ("p", pq_a),
                ("q", pq_a),
                ("z", tri(l + 2)),
            ],
        ) * &p_minus_1
            - m(
                1,
                &[
                    ("x", li + 1),
                    ("y", li + 1),
                    ("z", tri(l + 1)),
                    ("p", pq_b + 1),
                    ("q", pq_b),
                ],
            );
        let g_l = g_num.shift(&[("p", -(2 * li + 1)), ("q", -li)])? * d1.invert()? * &delta;
        g = g + g_l;
        let pq_c = (l * (l + 5) / 2) as i32;
        let h_num = (m(
            -1,
            &[
                ("p", pq_a),
                ("q", pq_a),
                ("z", ((l + 4) * (l + 1) / 2) as i32),
            ],
        ) + m(
            1,
            &[
                ("z", ((l + 6) * (l + 1) / 2) as i32),
                ("q", pq_c + 1),
                ("p", pq_c),
            ],
        ) * &p_minus_1)
            .shift(&[("x", li + 1), ("y", li + 1), ("p", -2 * li), ("q", -li)])?;
        let h_l = h_num * (d1 * d2).invert()? * &delta;
        h = h + h_l;
        // Extend the two Pochhammer products by their factor i = l.
        let f1 = &one - &m(1, &[("x", 1), ("z", li + 1), ("p", li), ("q", li)]);
        let f2 = m(1, &[("z", li + 1), ("p", li + 1), ("q", li + 1)]) - &one;
        poch = poch * f1 * f2;
    }
    Ok(g * (one + h).invert()?)
}

/// Iterated functional equation `F(u) = A(u) + B(u) F(1) + C(u) F(zpqu)`
/// solved at `u = 1`, graded by z.
fn iterated_form(order_x: usize) -> Result<TruncatedSeries, CatalogError> {
    let v = work_vars(order_x, true);
    let z_order = max_area(order_x) as i32;
    let p = |text: &str| TruncatedSeries::parse(&v, z_order, text).expect("fixed expression");
    let a_u = p("x z u y (x y z^2 (p - 1) u - p)") * p("p (u x z - 1)").invert()?;
    let b_u = p("u^2 z^2 y x (1 - q z (p - 1) u)") * p("(u x z - 1)(u z q p - 1)").invert()?;
    let c_u = p("y x u z") * p("(1 - u x z)(u z q p - 1) q p^2").invert()?;
    let at = |s: &TruncatedSeries, l: i32| {
        s.substitute_monomial("u", &int(1), &[("z", l), ("p", l), ("q", l)])
    };
    let mut top = TruncatedSeries::zero(&v, z_order);
    let mut bottom = TruncatedSeries::zero(&v, z_order);
    let mut prod_c = TruncatedSeries::one(&v, z_order);
    for l in 0..=order_x as i32 {
        top = top + at(&a_u, l)? * &prod_c;
        bottom = bottom + at(&b_u, l)? * &prod_c;
        prod_c = prod_c * at(&c_u, l)?;
    }
    let f = top * (TruncatedSeries::one(&v, z_order) - bottom).invert()?;
    let target = work_vars(order_x, false);
    Ok(f.project(&target, z_order, &[])?)
}

/// Both forms of the five-variable function, compared term by term.
pub fn gf_full_forms(order_x: usize) -> Result<FullForms, CatalogError> {
    assert!(order_x >= 1, "order must be at least 1");
    let closed = closed_form(order_x)?;
    let iterated = iterated_form(order_x)?;
    for (name, s) in [("closed form", &closed), ("iterated form", &iterated)] {
        if s.has_negative_exponents() {
            return Err(CatalogError::CancellationFailure(name.to_string()));
        }
        ensure_integral(s, name)?;
    }
    if closed != iterated {
        return Err(CatalogError::MismatchBetweenForms(
            "the five-variable function".into(),
        ));
    }
    Ok(FullForms {
        order_x,
        closed,
        iterated,
    })
}

/// The five-variable function through `x^order_x`, graded by x.
pub fn gf_full(order_x: usize) -> Result<TruncatedSeries, CatalogError> {
    let forms = gf_full_forms(order_x)?;
    Ok(forms.closed.project(&full_vars(), order_x as i32, &[])?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_expansion_through_x5() {
        let f = gf_full(5).unwrap();
        let printed = TruncatedSeries::parse(
            &full_vars(),
            5,
            "xyz + z^2yx^2 + yz^3(yz + 1)x^3 + (yz^4 + y^3z^6 + qz^6y^2 + 2z^5y^2)x^4 \
             + z^5(1 + y^3z^3 + z^2(q^2z^2 + 2qz + 3)y^2 + (pq^2z^3 + 2qz^2 + 3z)y)yx^5",
        )
        .unwrap();
        assert_eq!(f, printed);
    }

    #[test]
    fn area_bound() {
        assert_eq!(max_area(4), 6);
        assert_eq!(max_area(6), 12);
    }
}

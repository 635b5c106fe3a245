//! Stanley polyominoes by area, as a ratio of two q-series.

use super::{mono, univariate_vars};
use crate::series::{SeriesError, TruncatedSeries};

/// The generating function by area through `z^order_z`.
pub fn gf_area(order_z: usize) -> Result<TruncatedSeries, SeriesError> {
    let v = univariate_vars("z");
    let n = order_z as i32;
    let one = TruncatedSeries::one(&v, n);
    let z_pow = |k: usize| mono(&v, n, 1, &[("z", k as i32)]);
    let sign = |l: usize| if l.is_multiple_of(2) { 1 } else { -1 };
    let mut top = TruncatedSeries::zero(&v, n);
    let mut bottom = one.clone();
    // (z, z)_l, extended by one factor per round.
    let mut poch = one.clone();
    for l in 0.. {
        let top_exp = (l + 2) * (l + 1) / 2;
        if top_exp > order_z {
            break;
        }
        let next = &poch * (&one - &z_pow(l + 1));
        let top_den = &poch * &poch * (&one - &z_pow(l + 1));
        top = top + mono(&v, n, sign(l), &[("z", top_exp as i32)]) * top_den.invert()?;
        let bottom_exp = (l + 4) * (l + 1) / 2;
        if bottom_exp <= order_z {
            let bottom_term =
                mono(&v, n, sign(l), &[("z", bottom_exp as i32)]) * (&next * &next).invert()?;
            bottom = bottom - bottom_term;
        }
        poch = next;
    }
    top.try_div(&bottom)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_expansion() {
        let f = gf_area(11).unwrap();
        assert_eq!(
            f.integer_coefficients().unwrap(),
            vec![0, 1, 1, 1, 2, 3, 6, 10, 19, 34, 63, 115]
        );
    }
}

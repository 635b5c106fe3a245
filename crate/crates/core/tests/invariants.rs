use proptest::prelude::*;

use stanley_core::bijections::{f_inv, f_map, h_map, phi, phi_inv, psi};
use stanley_core::objects::{DyckPath, Object, ParallelogramPolyomino, StanleyPolyomino, Step};
use stanley_core::series::{TruncatedSeries, Vars};

/// Reads a Dyck path off a bit string: an up step when the bit allows it,
/// otherwise a down step when one is possible.
fn dyck_from_bits(bits: &[bool]) -> DyckPath {
    let n = bits.len() / 2;
    let (mut ups, mut height) = (0, 0);
    let mut steps = Vec::with_capacity(2 * n);
    for &bit in bits {
        if ups < n && (bit || height == 0) {
            steps.push(Step::U);
            ups += 1;
            height += 1;
        } else if height > 0 {
            steps.push(Step::D);
            height -= 1;
        }
    }
    while ups < n {
        steps.push(Step::U);
        ups += 1;
        height += 1;
    }
    steps.extend(std::iter::repeat_n(Step::D, height));
    DyckPath::new(steps).unwrap()
}

fn dyck() -> impl Strategy<Value = DyckPath> {
    prop::collection::vec(any::<bool>(), 0..40).prop_map(|b| dyck_from_bits(&b))
}

fn stanley() -> impl Strategy<Value = StanleyPolyomino> {
    dyck().prop_map(|d| phi_inv(&d))
}

fn parallelogram() -> impl Strategy<Value = ParallelogramPolyomino> {
    prop::collection::vec((0i64..4, 1i64..5), 1..8).prop_map(|raw| {
        let mut columns = Vec::new();
        let (mut bottom, mut top) = (0i64, 0i64);
        for (i, (lift, height)) in raw.into_iter().enumerate() {
            if i == 0 {
                top = height;
            } else {
                bottom += lift.min(top - 1 - bottom);
                top = (bottom + height).max(top);
            }
            columns.push((bottom, top - bottom));
        }
        ParallelogramPolyomino::new(columns).unwrap()
    })
}

proptest! {
    #[test]
    fn stanley_statistics_are_consistent(p in stanley()) {
        let s = p.stats();
        prop_assert_eq!(s.sper, s.col + s.row);
        prop_assert_eq!(s.adja, s.point + s.row - 1);
        prop_assert!(s.edgint <= s.point);
        prop_assert!(s.first_d >= 1 && s.first_d <= s.row);
    }

    #[test]
    fn phi_round_trips(d in dyck()) {
        let p = phi_inv(&d);
        prop_assert_eq!(phi(&p), d.clone());
        prop_assert_eq!(p.columns(), d.semilength() + 1);
    }

    #[test]
    fn f_round_trips(p in stanley()) {
        prop_assume!(p.columns() >= 2);
        let c = f_inv(&p).unwrap();
        let s = c.stats();
        prop_assert_eq!(f_map(&c), p.clone());
        prop_assert_eq!(s.m + 1, p.columns());
        prop_assert_eq!(2 * s.e - s.o, p.area());
    }

    #[test]
    fn psi_sends_area_and_columns(p in parallelogram()) {
        let d = h_map(&p).stats();
        prop_assert_eq!(d.sump, p.area());
        prop_assert_eq!(d.nbp, p.columns().len());
        let s = psi(&p).unwrap().stats();
        prop_assert_eq!(s.e, p.area());
        prop_assert_eq!(s.o, p.area() - p.columns().len());
    }

    #[test]
    fn objects_round_trip_through_json(p in stanley(), d in dyck()) {
        for obj in [Object::Stanley(p), Object::Dyck(d)] {
            let back = obj.family().parse_json(&obj.to_json()).unwrap();
            prop_assert_eq!(back, obj);
        }
    }

    #[test]
    fn division_undoes_multiplication(
        a in prop::collection::vec(-5i64..6, 1..6),
        b in prop::collection::vec(-5i64..6, 1..6),
    ) {
        prop_assume!(b[0] != 0);
        let v = Vars::new(&["x"], "x").unwrap().shared();
        let poly = |c: &[i64]| {
            TruncatedSeries::from_terms(&v, 8, c.iter().enumerate().map(|(i, &k)| {
                let mut e = [0; stanley_core::series::MAX_VARS];
                e[0] = i as i32;
                (e, stanley_core::series::int(k))
            }))
        };
        let (a, b) = (poly(&a), poly(&b));
        prop_assert_eq!((&a * &b).try_div(&b).unwrap(), a);
    }
}

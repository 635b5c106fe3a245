use std::collections::{BTreeMap, BTreeSet};

use serde_json::json;

use super::{collect_all, report, Suite, VerifyError};
use crate::bijections::{chi, chi_prime, f_inv, f_map, h_map, phi, phi_inv, psi};
use crate::enumerate::{Enumerator, FamilyBound};
use crate::objects::{Object, StanleyPolyomino};
use crate::report::{Check, Report};

fn stanley(o: &Object) -> &StanleyPolyomino {
    o.as_stanley().expect("stanley stream")
}

/// Round trips, statistic transport, injectivity and image counts.
pub(super) fn bijections(max: usize, en: &Enumerator) -> Result<Report, VerifyError> {
    let mut r = report(Suite::Bijections);

    let polyominoes = collect_all(en, 1..=max, FamilyBound::stanley_columns)?;
    let ok = polyominoes
        .iter()
        .filter(|o| phi_inv(&phi(stanley(o))) == *stanley(o))
        .count();
    r.push(Check::equal(
        format!("phi_inv . phi = id, columns <= {max}"),
        polyominoes.len(),
        ok,
    ));
    let paths = collect_all(en, 0..max, FamilyBound::dyck)?;
    let ok = paths
        .iter()
        .filter(|o| {
            let d = o.as_dyck().expect("dyck stream");
            phi(&phi_inv(d)) == *d
        })
        .count();
    r.push(Check::equal(
        format!("phi . phi_inv = id, semilength < {max}"),
        paths.len(),
        ok,
    ));

    for m in 1..=max {
        let fountains = en.collect(FamilyBound::fountain_diagonals(m))?;
        let mut round = 0;
        let mut columns = 0;
        let mut area = 0;
        for o in &fountains {
            let c = o.as_fountain().expect("fountain stream");
            let p = f_map(c);
            round += usize::from(f_inv(&p).as_ref() == Ok(c));
            columns += usize::from(p.columns() == m + 1);
            let s = c.stats();
            area += usize::from(p.area() == 2 * s.e - s.o);
        }
        let n = fountains.len();
        r.push(Check::equal(
            format!("f_inv . f = id, {m} diagonals"),
            n,
            round,
        ));
        r.push(Check::equal(
            format!("f: {m} diagonals to {} columns", m + 1),
            n,
            columns,
        ));
        r.push(Check::equal(
            format!("f: area = 2e - o, {m} diagonals"),
            n,
            area,
        ));
        let targets = en.collect(FamilyBound::stanley_columns(m + 1))?;
        let back = targets
            .iter()
            .filter(|o| f_inv(stanley(o)).is_ok_and(|c| f_map(&c) == *stanley(o)))
            .count();
        r.push(Check::equal(
            format!("f . f_inv = id, {} columns", m + 1),
            targets.len(),
            back,
        ));
    }

    for n in 0..=max {
        let sources = en.collect(FamilyBound::peakless_motzkin(n))?;
        let images: Result<BTreeSet<StanleyPolyomino>, _> = sources
            .iter()
            .map(|o| chi(o.as_motzkin().expect("motzkin stream")))
            .collect();
        let images = images?;
        let in_class = images.iter().filter(|p| p.stats().sper == n + 2).count();
        let first = sources
            .iter()
            .filter_map(|o| o.as_motzkin())
            .filter(|m| chi(m).is_ok_and(|p| p.stats().first == m.axis_steps() + 1))
            .count();
        r.push(Check::equal(
            format!("chi: first = axis steps + 1, {n} steps"),
            sources.len(),
            first,
        ));
        let target = en.count(FamilyBound::stanley_semiperimeter(n + 2))?;
        r.push(Check::verdict(
            format!("chi: {n} steps onto semiperimeter {}", n + 2),
            images.len() == sources.len() && in_class == images.len() && target == images.len(),
            json!({"sources": sources.len(), "targets": target}),
            json!({"distinctImages": images.len(), "inClass": in_class}),
        ));
    }

    for n in 0..=max {
        let sources: Vec<Object> = en
            .collect(FamilyBound::dyck(n))?
            .into_iter()
            .filter(|o| o.as_dyck().expect("dyck stream").avoids_triples())
            .collect();
        let images: Result<BTreeSet<StanleyPolyomino>, _> = sources
            .iter()
            .map(|o| chi_prime(o.as_dyck().expect("dyck stream")))
            .collect();
        let images = images?;
        let in_class = images.iter().filter(|p| p.stats().sper == n + 3).count();
        let first = sources
            .iter()
            .filter_map(|o| o.as_dyck())
            .filter(|d| chi_prime(d).is_ok_and(|p| p.stats().first == d.stats().hills + 2))
            .count();
        r.push(Check::equal(
            format!("chi': first = hills + 2, semilength {n}"),
            sources.len(),
            first,
        ));
        let target = en.count(FamilyBound::stanley_semiperimeter(n + 3))?;
        r.push(Check::verdict(
            format!("chi': semilength {n} onto semiperimeter {}", n + 3),
            images.len() == sources.len() && in_class == images.len() && target == images.len(),
            json!({"sources": sources.len(), "targets": target}),
            json!({"distinctImages": images.len(), "inClass": in_class}),
        ));
    }

    for n in 1..=max {
        let sources = en.collect(FamilyBound::parallelogram_area(n))?;
        let mut transported = 0;
        let mut by_class: BTreeMap<(usize, usize), BTreeSet<Vec<usize>>> = BTreeMap::new();
        let mut sizes: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for o in &sources {
            let p = o.as_parallelogram().expect("parallelogram stream");
            let k = p.columns().len();
            let d = h_map(p).stats();
            transported += usize::from(d.sump == n && d.nbp == k);
            let c = psi(p)?;
            let s = c.stats();
            by_class
                .entry((s.e, s.o))
                .or_default()
                .insert(c.diagonals().to_vec());
            *sizes.entry((n, n - k)).or_insert(0) += 1;
        }
        r.push(Check::equal(
            format!("h: sump = area, nbp = columns, area {n}"),
            sources.len(),
            transported,
        ));
        let mut targets: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for o in en.collect(FamilyBound::fountain_even_coins(n))? {
            let s = o.as_fountain().expect("fountain stream").stats();
            *targets.entry((s.e, s.o)).or_insert(0) += 1;
        }
        let images: BTreeMap<(usize, usize), usize> =
            by_class.iter().map(|(k, v)| (*k, v.len())).collect();
        let key = |m: &BTreeMap<(usize, usize), usize>| -> BTreeMap<String, usize> {
            m.iter()
                .map(|((e, o), c)| (format!("e={e},o={o}"), *c))
                .collect()
        };
        r.push(Check::verdict(
            format!("psi: area {n} onto fountains with e = {n}"),
            images == sizes && images == targets,
            json!({"sources": key(&sizes), "fountains": key(&targets)}),
            json!(key(&images)),
        ));
    }
    Ok(r)
}

use std::collections::BTreeSet;

use serde_json::json;

use super::{collect_all, report, Suite, VerifyError};
use crate::bijections::phi;
use crate::catalog::catalan;
use crate::enumerate::{Enumerator, FamilyBound};
use crate::objects::{CoinFountain, DyckStats, StanleyPolyomino, StanleyStats};
use crate::report::{Check, Report};

/// Stanley polyominoes with `m + 1` columns number `Catalan(m)`.
pub(super) fn catalan_counts(max: usize, en: &Enumerator) -> Result<Report, VerifyError> {
    let mut r = report(Suite::Catalan);
    for m in 1..=max {
        let count = en.count(FamilyBound::stanley_columns(m + 1))?;
        r.push(Check::equal(
            format!("columns {}: count = Catalan({m})", m + 1),
            catalan(m as u32).to_string(),
            count.to_string(),
        ));
    }
    Ok(r)
}

type Identity = (&'static str, fn(&StanleyStats, &DyckStats) -> bool);

const TABLE: [Identity; 8] = [
    ("col = semilength + 1", |s, d| s.col == d.semilength + 1),
    ("row = nbp", |s, d| s.row == d.nbp),
    ("sper = nbp + semilength + 1", |s, d| {
        s.sper == d.nbp + d.semilength + 1
    }),
    ("first = first peak height + 1", |s, d| {
        s.first == d.first_peak_height + 1
    }),
    ("area = sump + nbp", |s, d| s.area == d.sump + d.nbp),
    ("point = sumv", |s, d| s.point == d.sumv),
    ("adja = sumv + nbv", |s, d| s.adja == d.sumv + d.nbv),
    (
        "edgint = sum of 1-valley heights - number of 1-valleys",
        |s, d| s.edgint + d.one_valleys == d.sum_one_valleys,
    ),
];

/// The statistics of a polyomino against those of its Dyck path.
pub(super) fn transport(max: usize, en: &Enumerator) -> Result<Report, VerifyError> {
    let objects = collect_all(en, 1..=max, FamilyBound::stanley_columns)?;
    let pairs: Vec<(&StanleyPolyomino, StanleyStats, DyckStats)> = objects
        .iter()
        .map(|o| {
            let p = o.as_stanley().expect("stanley stream");
            (p, p.stats(), phi(p).stats())
        })
        .collect();
    let mut r = report(Suite::Transport);
    for (name, holds) in TABLE {
        let violations: Vec<&StanleyPolyomino> = pairs
            .iter()
            .filter(|(_, s, d)| !holds(s, d))
            .map(|(p, _, _)| *p)
            .collect();
        r.push(Check::verdict(
            format!("{name}, columns <= {max}"),
            violations.is_empty(),
            json!({"objects": pairs.len(), "violations": 0}),
            json!({"objects": pairs.len(), "violations": violations.len(), "examples": &violations[..violations.len().min(3)]}),
        ));
    }
    Ok(r)
}

/// Stanley polyominoes of area `n` with `r` rows, parallelogram
/// polyominoes of area `n - r` with `r` columns, and fountains with
/// `e = n - r` and `o = n - 2r` are equinumerous.
pub(super) fn rows_and_columns(max: usize, en: &Enumerator) -> Result<Report, VerifyError> {
    let mut r = report(Suite::RowsColumns);
    for n in 2..=max {
        let stanley = en.count_grouped(FamilyBound::stanley_area(n), "row")?;
        for rows in 1..=n {
            let m = n - rows;
            let (para, fountains) = if m == 0 {
                (0, 0)
            } else {
                let by_cols = en.count_grouped(FamilyBound::parallelogram_area(m), "colCount")?;
                let by_odd = en.count_grouped(FamilyBound::fountain_even_coins(m), "o")?;
                let odd =
                    (n >= 2 * rows).then(|| by_odd.get(&(n - 2 * rows)).copied().unwrap_or(0));
                (by_cols.get(&rows).copied().unwrap_or(0), odd.unwrap_or(0))
            };
            let s = stanley.get(&rows).copied().unwrap_or(0);
            r.push(Check::verdict(
                format!("area {n}, {rows} rows"),
                s == para && para == fountains,
                json!(s),
                json!({"parallelogram": para, "fountain": fountains}),
            ));
        }
    }
    Ok(r)
}

/// All fountains with `n` coins, built level by level: a contiguous bottom
/// row at offsets `0..b`, then any set of coins each resting on two
/// adjacent coins of the level below.
fn level_sets(n: usize) -> BTreeSet<BTreeSet<(usize, usize)>> {
    fn grow(
        coins: &mut BTreeSet<(usize, usize)>,
        level: usize,
        below: &[usize],
        budget: usize,
        out: &mut BTreeSet<BTreeSet<(usize, usize)>>,
    ) {
        if budget == 0 {
            out.insert(coins.clone());
            return;
        }
        let slots: Vec<usize> = below
            .windows(2)
            .filter(|w| w[1] == w[0] + 1)
            .map(|w| w[0])
            .collect();
        choose(coins, level, &slots, 0, &mut Vec::new(), budget, out);
    }

    fn choose(
        coins: &mut BTreeSet<(usize, usize)>,
        level: usize,
        slots: &[usize],
        from: usize,
        picked: &mut Vec<usize>,
        budget: usize,
        out: &mut BTreeSet<BTreeSet<(usize, usize)>>,
    ) {
        if !picked.is_empty() {
            let row = picked.clone();
            grow(coins, level + 1, &row, budget, out);
        }
        for i in from..slots.len() {
            if budget == 0 {
                break;
            }
            coins.insert((level, slots[i]));
            picked.push(slots[i]);
            choose(coins, level, slots, i + 1, picked, budget - 1, out);
            picked.pop();
            coins.remove(&(level, slots[i]));
        }
    }

    let mut out = BTreeSet::new();
    for b in 1..=n {
        let bottom: Vec<usize> = (0..b).collect();
        let mut coins: BTreeSet<(usize, usize)> = bottom.iter().map(|&j| (0, j)).collect();
        if b == n {
            out.insert(coins);
            continue;
        }
        let slots: Vec<usize> = (0..b - 1).collect();
        let mut picked = Vec::new();
        choose(&mut coins, 1, &slots, 0, &mut picked, n - b, &mut out);
    }
    out
}

/// The diagonal encoding against coin sets built from the support rule.
pub(super) fn fountains(max: usize, en: &Enumerator) -> Result<Report, VerifyError> {
    let mut r = report(Suite::Fountains);
    for n in 1..=max {
        let brute = level_sets(n);
        let listed: BTreeSet<BTreeSet<(usize, usize)>> = en
            .collect(FamilyBound::fountain_coins(n))?
            .iter()
            .map(|o| o.as_fountain().expect("fountain stream").coins())
            .collect();
        let decoded = brute
            .iter()
            .filter(|set| CoinFountain::from_coins(set).is_ok_and(|c| &c.coins() == *set))
            .count();
        r.push(Check::verdict(
            format!("{n} coins"),
            brute == listed && decoded == brute.len(),
            json!({"levelSets": brute.len()}),
            json!({"diagonalSequences": listed.len(), "decoded": decoded}),
        ));
    }
    Ok(r)
}

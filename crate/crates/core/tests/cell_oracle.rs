//! Statistics recomputed from the cell set of each polyomino.

use std::collections::BTreeSet;

use stanley_core::enumerate::{Enumerator, FamilyBound};
use stanley_core::objects::StanleyPolyomino;

/// Cells as `(column, row)` of their lower left corner.
fn cells(p: &StanleyPolyomino) -> BTreeSet<(usize, usize)> {
    p.rows()
        .iter()
        .enumerate()
        .flat_map(|(y, r)| (r.start..r.start + r.len).map(move |x| (x, y)))
        .collect()
}

struct CellStats {
    columns: usize,
    area: usize,
    point: usize,
    edgint: usize,
    adja: usize,
    perimeter: usize,
}

fn measure(cells: &BTreeSet<(usize, usize)>) -> CellStats {
    let has = |x: isize, y: isize| x >= 0 && y >= 0 && cells.contains(&(x as usize, y as usize));
    // A lattice point (x, y) is interior when the four cells around it exist.
    let interior =
        |x: isize, y: isize| has(x - 1, y - 1) && has(x, y - 1) && has(x - 1, y) && has(x, y);
    let width = cells.iter().map(|c| c.0).max().unwrap() as isize + 2;
    let height = cells.iter().map(|c| c.1).max().unwrap() as isize + 2;
    let mut point = 0;
    let mut edgint = 0;
    for x in 0..=width {
        for y in 0..=height {
            if interior(x, y) {
                point += 1;
                if interior(x + 1, y) {
                    edgint += 1;
                }
            }
        }
    }
    let adja = cells
        .iter()
        .filter(|&&(x, y)| cells.contains(&(x, y + 1)))
        .count();
    let mut perimeter = 0;
    for &(x, y) in cells {
        let (x, y) = (x as isize, y as isize);
        for (dx, dy) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
            if !has(x + dx, y + dy) {
                perimeter += 1;
            }
        }
    }
    let columns = cells.iter().map(|c| c.0).collect::<BTreeSet<_>>().len();
    CellStats {
        columns,
        area: cells.len(),
        point,
        edgint,
        adja,
        perimeter,
    }
}

#[test]
fn statistics_match_cell_counts() {
    let en = Enumerator::default();
    let mut seen = 0;
    for n in 1..=7 {
        for obj in en.collect(FamilyBound::stanley_columns(n)).unwrap() {
            let p = obj.as_stanley().unwrap();
            let s = p.stats();
            let c = measure(&cells(p));
            assert_eq!(s.col, c.columns, "{p:?}");
            assert_eq!(s.area, c.area, "{p:?}");
            assert_eq!(s.point, c.point, "{p:?}");
            assert_eq!(s.edgint, c.edgint, "{p:?}");
            assert_eq!(s.adja, c.adja, "{p:?}");
            assert_eq!(2 * s.sper, c.perimeter, "{p:?}");
            seen += 1;
        }
    }
    assert_eq!(seen, 1 + 1 + 2 + 5 + 14 + 42 + 132);
}

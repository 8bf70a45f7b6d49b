use super::associated::AssociatedQuandle;
use crate::algebra::{validate_axioms, OperationTable, Profile};
use crate::error::{Error, Result};
use crate::report::AxiomReport;

/// `(x, s) * (y, t) = (f_{s,t}(x, y), g_{x,y}(s, t))` on `X × S`.
///
/// `f_maps[s][t]` is a table on `X`, `g_maps[x][y]` a table on `S`. The report
/// checks the characterising conditions: `P1` idempotency, `P2` bijectivity
/// of each right translation (witness `[y, t]`), `P3a`/`P3b` the two
/// distributivity identities (witness `[x, y, z, s, t, u]`).
pub fn general_product_quandle(
    f_maps: &[Vec<OperationTable>],
    g_maps: &[Vec<OperationTable>],
) -> Result<(AssociatedQuandle, AxiomReport)> {
    let s_size = f_maps.len();
    let x_size = g_maps.len();
    if s_size == 0 || x_size == 0 {
        return Err(Error::InvalidTable("empty carrier".into()));
    }
    let shape_ok = f_maps
        .iter()
        .all(|row| row.len() == s_size && row.iter().all(|t| t.size() == x_size))
        && g_maps
            .iter()
            .all(|row| row.len() == x_size && row.iter().all(|t| t.size() == s_size));
    if !shape_ok {
        return Err(Error::InvalidTable(
            "f_maps must be |S|x|S| tables on X and g_maps |X|x|X| tables on S".into(),
        ));
    }
    let f = |s: usize, t: usize, x: usize, y: usize| f_maps[s][t].get(x, y);
    let g = |x: usize, y: usize, s: usize, t: usize| g_maps[x][y].get(s, t);
    let table = OperationTable::from_fn(x_size * s_size, |a, b| {
        let (x, s) = (a / s_size, a % s_size);
        let (y, t) = (b / s_size, b % s_size);
        f(s, t, x, y) * s_size + g(x, y, s, t)
    });

    let mut r = AxiomReport::new();
    for x in 0..x_size {
        for s in 0..s_size {
            r.check(f(s, s, x, x) == x && g(x, x, s, s) == s, "P1", &[x, s]);
        }
    }
    if let Some(col) = table.non_invertible_column() {
        r.record("P2", &[col / s_size, col % s_size]);
        for c in (col + 1)..table.size() {
            if !crate::algebra::is_permutation(&table.column(c)) {
                r.record("P2", &[c / s_size, c % s_size]);
            }
        }
    }
    for x in 0..x_size {
        for y in 0..x_size {
            for z in 0..x_size {
                for s in 0..s_size {
                    for t in 0..s_size {
                        for u in 0..s_size {
                            let (xy, st) = (f(s, t, x, y), g(x, y, s, t));
                            let (xz, su) = (f(s, u, x, z), g(x, z, s, u));
                            let (yz, tu) = (f(t, u, y, z), g(y, z, t, u));
                            let w = [x, y, z, s, t, u];
                            r.check(f(st, u, xy, z) == f(su, tu, xz, yz), "P3a", &w);
                            r.check(g(xy, z, st, u) == g(xz, yz, su, tu), "P3b", &w);
                        }
                    }
                }
            }
        }
    }
    Ok((AssociatedQuandle::new(table, x_size, s_size), r))
}

/// The special case `g_{x,y}(s, t) = s ∘ t` for a quandle `(S, ∘)`.
pub fn specialised_product_quandle(
    f_maps: &[Vec<OperationTable>],
    circ: &OperationTable,
) -> Result<(AssociatedQuandle, AxiomReport)> {
    let x_size = f_maps.first().and_then(|r| r.first()).map(|t| t.size()).unwrap_or(0);
    let g_maps = vec![vec![circ.clone(); x_size]; x_size];
    general_product_quandle(f_maps, &g_maps)
}

/// Whether the characterising conditions agree with a direct quandle check.
pub fn product_verdicts_agree(q: &AssociatedQuandle, report: &AxiomReport) -> bool {
    validate_axioms(q.table(), Profile::Quandle).valid == report.valid
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{standard_quandle, GroupTable, QuandleKind};
    use crate::family::{associated_quandle, SystemData};
    use proptest::prelude::*;

    fn quandle(kind: QuandleKind) -> OperationTable {
        standard_quandle(&kind).unwrap()
    }

    #[test]
    fn trivial_components_give_trivial_quandle() {
        let tx = quandle(QuandleKind::Trivial(2));
        let ts = quandle(QuandleKind::Trivial(3));
        let f_maps = vec![vec![tx; 3]; 3];
        let g_maps = vec![vec![ts; 2]; 2];
        let (q, r) = general_product_quandle(&f_maps, &g_maps).unwrap();
        assert!(r.valid);
        assert_eq!(q.table(), &quandle(QuandleKind::Trivial(6)));
    }

    #[test]
    fn g_family_encoding_matches_associated_quandle() {
        let grp = GroupTable::cyclic(2);
        let stars = vec![quandle(QuandleKind::Trivial(3)), quandle(QuandleKind::Dihedral(3))];
        let sys = SystemData::g_family(grp.clone(), stars.clone()).unwrap();
        let f_maps: Vec<Vec<_>> = (0..2).map(|_| stars.clone()).collect();
        let conj = OperationTable::from_fn(2, |s, t| grp.conjugate(s, t));
        let (q, r) = specialised_product_quandle(&f_maps, &conj).unwrap();
        assert!(r.valid);
        assert_eq!(q.table(), associated_quandle(&sys).0.table());
    }

    #[test]
    fn idempotency_failure_is_named() {
        let bad = OperationTable::from_fn(2, |_, _| 0);
        let f_maps = vec![vec![bad]];
        let (_, r) = specialised_product_quandle(&f_maps, &quandle(QuandleKind::Trivial(1))).unwrap();
        assert_eq!(r.violations[0].axiom, "P1");
        assert_eq!(r.violations[0].witness, vec![1, 0]);
    }

    #[test]
    fn shape_is_checked() {
        let t2 = quandle(QuandleKind::Trivial(2));
        assert!(general_product_quandle(&[vec![t2.clone()]], &[vec![t2]]).is_err());
    }

    fn small_table(n: usize) -> impl Strategy<Value = OperationTable> {
        prop::collection::vec(0..n, n * n).prop_map(move |e| OperationTable::from_flat(n, e).unwrap())
    }

    proptest! {
        #[test]
        fn conditions_characterise_quandles(
            f00 in small_table(2), f01 in small_table(2),
            f10 in small_table(2), f11 in small_table(2),
            g in prop::collection::vec(small_table(2), 4),
        ) {
            let f_maps = vec![vec![f00, f01], vec![f10, f11]];
            let g_maps = vec![vec![g[0].clone(), g[1].clone()], vec![g[2].clone(), g[3].clone()]];
            let (q, r) = general_product_quandle(&f_maps, &g_maps).unwrap();
            prop_assert!(product_verdicts_agree(&q, &r));
        }

        #[test]
        fn conditions_characterise_quandles_near_valid(
            flips in prop::collection::vec((0usize..2, 0usize..3, 0usize..3, 0usize..3), 0..2),
        ) {
            // start from the T3 x Z2 G-family encoding and perturb single entries
            let mut f_maps = vec![
                vec![quandle(QuandleKind::Trivial(3)), quandle(QuandleKind::Dihedral(3))];
                2
            ];
            for (t, x, y, v) in flips {
                for row in f_maps.iter_mut() {
                    row[t].set(x, y, v).unwrap();
                }
            }
            let (q, r) = specialised_product_quandle(&f_maps, &quandle(QuandleKind::Trivial(2))).unwrap();
            prop_assert!(product_verdicts_agree(&q, &r));
        }
    }
}

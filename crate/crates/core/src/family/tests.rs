use super::*;
use crate::algebra::{
    permutations, standard_quandle, validate_axioms, GroupTable, OperationTable, Profile, QuandleKind,
};

fn quandle(kind: QuandleKind) -> OperationTable {
    standard_quandle(&kind).unwrap()
}

fn t3r3() -> SystemData {
    SystemData::g_family(
        GroupTable::cyclic(2),
        vec![quandle(QuandleKind::Trivial(3)), quandle(QuandleKind::Dihedral(3))],
    )
    .unwrap()
}

/// The three quandles of order 3.
fn order_three_quandles() -> Vec<OperationTable> {
    let third = OperationTable::from_rows(vec![vec![0, 0, 1], vec![1, 1, 0], vec![2, 2, 2]]).unwrap();
    vec![
        quandle(QuandleKind::Trivial(3)),
        quandle(QuandleKind::Dihedral(3)),
        third,
    ]
}

/// Klein four-group with an order-3 automorphism and the G-family over Z3 it induces.
fn tetrahedral_family() -> (GroupTable, Vec<OperationTable>) {
    let v4 = GroupTable::cyclic(2).product(&GroupTable::cyclic(2));
    let mut phi = vec![0, 1, 2, 3];
    let step = [0, 2, 3, 1];
    let mut stars = Vec::new();
    for _ in 0..3 {
        stars.push(quandle(QuandleKind::Alexander(v4.clone(), phi.clone())));
        phi = phi.iter().map(|&i| step[i]).collect();
    }
    (GroupTable::cyclic(3), stars)
}

#[test]
fn paper_examples_are_g_families() {
    let t2 = quandle(QuandleKind::Trivial(2));
    let s = SystemData::g_family(GroupTable::cyclic(2), vec![t2.clone(), t2]).unwrap();
    assert!(validate_family(&s, &FamilyKind::GFamily).unwrap().valid);
    let r = validate_family(&t3r3(), &FamilyKind::GFamily).unwrap();
    assert!(r.valid, "{r}");
}

#[test]
fn swapped_family_breaks_identity_axiom() {
    let s = SystemData::g_family(
        GroupTable::cyclic(2),
        vec![quandle(QuandleKind::Dihedral(3)), quandle(QuandleKind::Trivial(3))],
    )
    .unwrap();
    let r = validate_family(&s, &FamilyKind::GFamily).unwrap();
    assert!(r.has_failure("GF2e"));
    assert!(r.has_failure("GF2"));
}

#[test]
fn g_families_are_trivalent_compatible_and_associative() {
    for kind in [
        FamilyKind::FwSystem,
        FamilyKind::TrivalentCompatible,
        FamilyKind::AssociativeComposition,
    ] {
        let r = validate_family(&t3r3(), &kind).unwrap();
        assert!(r.valid, "{kind}: {r}");
    }
    let (grp, stars) = tetrahedral_family();
    let s = SystemData::g_family(grp, stars).unwrap();
    assert!(validate_family(&s, &FamilyKind::GFamily).unwrap().valid);
    assert!(validate_family(&s, &FamilyKind::TrivalentCompatible).unwrap().valid);
}

#[test]
fn f_depending_on_first_argument_violates_condition_two() {
    let mut s = t3r3();
    s.f = vec![vec![0, 0], vec![1, 1]];
    let r = validate_family(&s, &FamilyKind::TrivalentCompatible).unwrap();
    assert!(r.has_failure("TC2"));
    let w = &r.violations.iter().find(|v| v.axiom == "TC2").unwrap().witness;
    assert_ne!(s.f(w[0], w[2]), s.f(w[1], w[2]));
}

#[test]
fn missing_fields_are_errors() {
    let t3 = quandle(QuandleKind::Trivial(3));
    let s = SystemData::new(
        vec![t3.clone(), t3],
        vec![vec![0, 1]; 2],
        quandle(QuandleKind::Trivial(2)),
    )
    .unwrap();
    assert!(validate_family(&s, &FamilyKind::GFamily).is_err());
    assert!(validate_family(&s, &FamilyKind::TrivalentCompatible).is_err());
    assert!(validate_family(&s, &FamilyKind::NCompatible(vec![3])).is_err());
    assert!(validate_family(&s, &FamilyKind::FwSystem).unwrap().valid);
    assert!(validate_family(&s, &FamilyKind::QFamily).unwrap().valid);
}

#[test]
fn kind_names_round_trip() {
    for name in [
        "g_family",
        "gsf_family",
        "q_family",
        "fw_system",
        "trivalent_compatible",
        "associative_composition",
        "n_compatible:3,4",
    ] {
        let k: FamilyKind = name.parse().unwrap();
        assert_eq!(k.to_string(), name);
    }
    assert!("n_compatible:1".parse::<FamilyKind>().is_err());
    assert!("nope".parse::<FamilyKind>().is_err());
}

#[test]
fn g_family_is_gsf_family_with_conjugation() {
    let s = t3r3();
    assert!(validate_family(&s, &FamilyKind::GsfFamily).unwrap().valid);
    assert!(check_lemma_for(&s).unwrap().valid);
    let (grp, stars) = tetrahedral_family();
    let s = SystemData::g_family(grp, stars).unwrap();
    assert!(check_lemma_for(&s).unwrap().valid);
}

#[test]
fn trivial_quandle_on_abelian_group_satisfies_lemma() {
    let (grp, stars) = tetrahedral_family();
    let f = (0..3).map(|_| (0..3).collect()).collect();
    let s = SystemData::gsf_family(grp, quandle(QuandleKind::Trivial(3)), f, stars).unwrap();
    assert!(validate_family(&s, &FamilyKind::GsfFamily).unwrap().valid);
    assert!(check_lemma_for(&s).unwrap().valid);
}

/// Every f: Z3 x Z3 -> Z3 over the tetrahedral family with Takasaki `*` on Z3.
fn all_f_over_z3() -> impl Iterator<Item = SystemData> {
    let (grp, stars) = tetrahedral_family();
    let tak = quandle(QuandleKind::Takasaki(grp.clone()));
    (0..3usize.pow(9)).map(move |code| {
        let mut digits = vec![0; 9];
        crate::family::system::decode(code, 3, &mut digits);
        let f = digits.chunks(3).map(|c| c.to_vec()).collect();
        SystemData::gsf_family(grp.clone(), tak.clone(), f, stars.clone()).unwrap()
    })
}

#[test]
fn lemma_follows_from_gsf_axioms_exhaustively() {
    let mut valid = 0;
    let mut lemma_failures = 0;
    for s in all_f_over_z3() {
        let lemma = lemma_report(&s).unwrap();
        if validate_family(&s, &FamilyKind::GsfFamily).unwrap().valid {
            valid += 1;
            assert!(lemma.valid);
        } else if !lemma.valid {
            lemma_failures += 1;
            let w = &lemma.violations[0].witness;
            let (x, y, g, h, q) = (w[0], w[1], w[2], w[3], w[4]);
            let grp = s.group.as_ref().unwrap();
            let left = grp.mul(s.f(g, h), s.f(s.otimes(g, h), q));
            let right = grp.mul(s.f(g, q), s.f(s.otimes(g, q), s.otimes(h, q)));
            assert_ne!(s.star(left, x, y), s.star(right, x, y));
        }
    }
    assert!(valid > 0);
    assert!(lemma_failures > 0);
}

#[test]
fn lemma_requires_valid_family() {
    let mut s = t3r3();
    s.stars.swap(0, 1);
    assert!(matches!(check_lemma_for(&s), Err(crate::Error::Precondition { .. })));
}

#[test]
fn q_family_example() {
    // Q-family over a one-element quandle may be any quandle
    for q in order_three_quandles() {
        let s = SystemData::new(vec![q], vec![vec![0]], quandle(QuandleKind::Trivial(1))).unwrap();
        assert!(validate_family(&s, &FamilyKind::QFamily).unwrap().valid);
    }
    let mut bad = quandle(QuandleKind::Dihedral(3));
    bad.set(0, 1, 0).unwrap();
    let s = SystemData::new(vec![bad], vec![vec![0]], quandle(QuandleKind::Trivial(1))).unwrap();
    assert!(validate_family(&s, &FamilyKind::QFamily).unwrap().has_failure("QF2"));
}

#[test]
fn small_carrier_gsf_families_have_idempotent_invertible_operations() {
    let grp = GroupTable::cyclic(2);
    let qs = order_three_quandles();
    for a in &qs {
        for b in &qs {
            for code in 0..16 {
                let f: Vec<Vec<usize>> = (0..2)
                    .map(|g| (0..2).map(|h| (code >> (2 * g + h)) & 1).collect())
                    .collect();
                let s = SystemData::gsf_family(
                    grp.clone(),
                    quandle(QuandleKind::Trivial(2)),
                    f,
                    vec![a.clone(), b.clone()],
                )
                .unwrap();
                if !validate_family(&s, &FamilyKind::GsfFamily).unwrap().valid {
                    continue;
                }
                assert!(check_lemma_for(&s).unwrap().valid);
                for g in 0..2 {
                    for h in 0..2 {
                        let op = &s.stars[s.f(g, h)];
                        assert!(op.is_right_invertible());
                        assert!((0..3).all(|x| s.star(g, x, x) == x));
                    }
                }
            }
        }
    }
}

#[test]
fn fw_system_with_quandle_otimes_gives_quandle() {
    let qs = order_three_quandles();
    let mut checked = 0;
    for a in &qs {
        for b in &qs {
            for code in 0..16 {
                let f: Vec<Vec<usize>> = (0..2)
                    .map(|g| (0..2).map(|h| (code >> (2 * g + h)) & 1).collect())
                    .collect();
                let s = SystemData::new(vec![a.clone(), b.clone()], f, quandle(QuandleKind::Trivial(2))).unwrap();
                let fw = validate_family(&s, &FamilyKind::FwSystem).unwrap();
                let (_, q) = associated_quandle(&s);
                if fw.valid {
                    checked += 1;
                    assert!(q.valid);
                }
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn n_compatibility_of_arity_two_matches_trivalent_conditions() {
    let pairs = [
        ("N1", "OPLUS"),
        ("N2", "TC1"),
        ("N3", "TC2"),
        ("N4", "TC3"),
        ("N5", "TC4"),
        ("N6", "TC5"),
    ];
    let mut systems = vec![t3r3()];
    let mut s = t3r3();
    s.f = vec![vec![0, 0], vec![1, 1]];
    systems.push(s);
    let mut s = t3r3();
    s.rho = Some(vec![vec![0, 1]; 3]);
    s.oplus = Some(OperationTable::from_fn(2, |_, h| h));
    systems.push(s);
    let mut s = t3r3();
    s.otimes = quandle(QuandleKind::Trivial(2));
    s.oplus = Some(OperationTable::from_fn(2, |g, _| g));
    systems.push(s);
    for s in &systems {
        let tc = validate_family(s, &FamilyKind::TrivalentCompatible).unwrap();
        let nc = validate_family(s, &FamilyKind::NCompatible(vec![2])).unwrap();
        for (n, t) in pairs {
            assert_eq!(nc.has_failure(&format!("n2:{n}")), tc.has_failure(t), "{n} vs {t}");
        }
        let n7 = nc.has_failure("n2:N7");
        assert_eq!(n7, tc.has_failure("TC6a") || tc.has_failure("TC6b"));
    }
}

#[test]
fn composition_fold_is_n_compatible() {
    for n in 2..=4 {
        let (s, r) = gamma_from_oplus(&t3r3(), n).unwrap();
        assert!(r.valid, "arity {n}: {r}");
        assert!(s.supported_valences().contains(&(n + 1)));
    }
    let (s, _) = gamma_from_oplus(&t3r3(), 3).unwrap();
    let g = s.gamma(3).unwrap();
    assert_eq!(g.eval(&[1, 1, 1]), 1);
    assert_eq!(g.eval(&[1, 0, 1]), 0);
    assert!(gamma_from_oplus(&t3r3(), 5).is_err());
}

#[test]
fn composition_fold_over_s3_is_n_compatible() {
    let g = GroupTable::symmetric(3);
    let t1 = quandle(QuandleKind::Trivial(1));
    let s = SystemData::g_family(g.clone(), vec![t1; 6]).unwrap();
    let (s3, r) = gamma_from_oplus(&s, 3).unwrap();
    assert!(r.valid, "{r}");
    let perms = permutations(3);
    let a = perms.iter().position(|p| p == &vec![1, 0, 2]).unwrap();
    let b = perms.iter().position(|p| p == &vec![0, 2, 1]).unwrap();
    assert_eq!(s3.gamma(3).unwrap().eval(&[a, b, a]), g.mul(g.mul(a, b), a));
}

#[test]
fn composition_fold_rejects_non_compatible_input() {
    let mut s = t3r3();
    s.f = vec![vec![0, 0], vec![1, 1]];
    assert!(matches!(
        gamma_from_oplus(&s, 3),
        Err(crate::Error::Precondition { .. })
    ));
}

#[test]
fn associated_quandle_of_quandle_otimes_is_checked() {
    let (q, r) = associated_quandle(&t3r3());
    assert_eq!(r, validate_axioms(q.table(), Profile::Quandle));
}

use std::collections::BTreeSet;

use super::*;
use crate::colour::{count_colourings, CountMode};
use crate::diagram::{validate_diagram, Crossing, Diagram, Sign};
use crate::family::gamma_from_oplus;
use crate::fixtures;

fn count(d: &Diagram, name: &str) -> u64 {
    count_colourings(d, &fixtures::system(name).unwrap(), CountMode::All).unwrap()
}

#[test]
fn r1_on_free_loop_is_a_single_arc_kink() {
    let m = MoveSpec::new(MoveKind::R1Insert { over_incoming: true }, 0, false);
    let out = apply_move(&Diagram::unknot(), &m).unwrap();
    assert_eq!(
        out.diagram,
        Diagram::new(1, vec![Crossing::new(0, 0, 0, Sign::Positive)], vec![])
    );
    assert_eq!(out.inverse, None);
}

#[test]
fn every_candidate_preserves_counts_on_fixtures() {
    let systems = ["conj-s3", "t3r3z2", "axet-s3"];
    for name in fixtures::DIAGRAM_NAMES {
        let d = fixtures::diagram(name).unwrap();
        for family in MoveFamily::ALL {
            for m in candidate_moves(&d, family) {
                let out = apply_move(&d, &m).unwrap().diagram;
                assert!(validate_diagram(&out).valid, "{name} {m}");
                for sys in systems {
                    assert_eq!(count(&d, sys), count(&out, sys), "{name} {m:?} {sys}");
                }
            }
        }
    }
}

fn shape(d: &Diagram) -> (usize, Vec<usize>, BTreeSet<(i64, usize)>) {
    let signs = d
        .crossings
        .iter()
        .enumerate()
        .map(|(i, c)| (c.sign.value(), i))
        .collect::<BTreeSet<_>>();
    let signs = signs
        .into_iter()
        .map(|(s, _)| s)
        .enumerate()
        .map(|(i, s)| (s, i))
        .collect();
    (d.arc_count, d.valences(), signs)
}

#[test]
fn reversible_moves_round_trip() {
    for name in fixtures::DIAGRAM_NAMES {
        let d = fixtures::diagram(name).unwrap();
        let mut seen = 0;
        for family in [MoveFamily::Tr2, MoveFamily::Sr, MoveFamily::Rotate] {
            for m in candidate_moves(&d, family) {
                let out = apply_move(&d, &m).unwrap();
                let inv = out.inverse.expect("reversible");
                let back = apply_move(&out.diagram, &inv).unwrap().diagram;
                if family == MoveFamily::Tr2 {
                    assert_eq!(shape(&back), shape(&d), "{name} {m:?}");
                    assert_eq!(count(&back, "conj-s3"), count(&d, "conj-s3"));
                } else {
                    assert_eq!(back, d, "{name} {m:?}");
                }
                seen += 1;
            }
        }
        if !fixtures::diagram(name).unwrap().vertices.is_empty() {
            assert!(seen > 0, "{name}");
        }
    }
}

#[test]
fn tr2_forward_then_backward_on_prepared_site() {
    let theta = fixtures::diagram("theta").unwrap();
    let base = Diagram::new(theta.arc_count + 1, theta.crossings.clone(), theta.vertices.clone());
    let s = theta.arc_count;
    let near = base.vertices[0].ends[0].arc;
    for (site, partner) in [(near, s), (s, near)] {
        let r2 = MoveSpec::new(
            MoveKind::R2Insert {
                partner,
                site_over: false,
            },
            site,
            false,
        );
        let d = apply_move(&base, &r2).unwrap().diagram;
        let fw: Vec<_> = candidate_moves(&d, MoveFamily::Tr2)
            .into_iter()
            .filter(|m| matches!(m.kind, MoveKind::Tr2Slide { forward: true, .. }))
            .collect();
        assert!(!fw.is_empty());
        for m in fw {
            let out = apply_move(&d, &m).unwrap();
            let back = apply_move(&out.diagram, &out.inverse.unwrap()).unwrap().diagram;
            assert_eq!(shape(&back), shape(&d));
            for sys in ["conj-s3", "t3r3z2"] {
                assert_eq!(count(&out.diagram, sys), count(&d, sys), "{m:?}");
            }
        }
    }
}

#[test]
fn sr_moves_edge_endpoints() {
    let d = fixtures::diagram("theta").unwrap();
    let m = candidate_moves(&d, MoveFamily::Sr)[0];
    let out = apply_move(&d, &m).unwrap().diagram;
    assert_ne!(out, d);
    assert_eq!(count(&out, "conj-s3"), count(&d, "conj-s3"));
}

#[test]
fn random_diagram_is_reproducible() {
    assert_eq!(random_diagram(0, 0, 0, &[]), Diagram::unknot());
    let a = random_diagram(42, 4, 2, &[3]);
    assert_eq!(a, random_diagram(42, 4, 2, &[3]));
    assert!(validate_diagram(&a).valid);
    assert_eq!(a.valences(), vec![3]);
    assert!(a.crossings.len() <= 4 && a.vertices.len() <= 2);
}

#[test]
fn random_diagrams_are_valid() {
    for seed in 0..200 {
        let d = random_diagram(seed, 6, 4, &[3, 4]);
        assert!(validate_diagram(&d).valid, "{seed}");
        assert!(d.crossings.len() <= 6 && d.vertices.len() <= 4);
    }
}

#[test]
fn fuzz_on_compatible_systems_finds_no_mismatch() {
    for (name, scope) in [
        ("conj-s3", FuzzScope::Handlebody),
        ("axet-s3", FuzzScope::Handlebody),
        ("t3r3z2", FuzzScope::Trivalent),
        ("r3", FuzzScope::Links),
    ] {
        let sys = fixtures::system(name).unwrap();
        let report = fuzz_invariance(&sys, &FuzzConfig::new(scope, 60, 7)).unwrap();
        assert_eq!(report.mismatches(), 0, "{name}\n{report}");
    }
}

#[test]
fn fuzz_covers_every_move_kind() {
    let sys = fixtures::system("conj-s3").unwrap();
    let report = fuzz_invariance(&sys, &FuzzConfig::new(FuzzScope::Handlebody, 200, 1)).unwrap();
    let names: BTreeSet<&str> = report.trials.iter().map(|t| t.move_name.as_str()).collect();
    for n in [
        "r1_insert",
        "r2_insert",
        "tr1_insert",
        "tr2_slide",
        "sr_forward",
        "sr_backward",
        "vertex_rotate",
    ] {
        assert!(names.contains(n), "{n} missing from {names:?}");
    }
}

#[test]
fn fuzz_is_deterministic() {
    let sys = fixtures::system("t3r3z2").unwrap();
    let c = FuzzConfig::new(FuzzScope::Trivalent, 30, 99);
    assert_eq!(fuzz_invariance(&sys, &c).unwrap(), fuzz_invariance(&sys, &c).unwrap());
}

#[test]
fn fuzz_n_valent_with_folded_composition() {
    let base = fixtures::system("conj-s3").unwrap();
    let (sys, report) = gamma_from_oplus(&base, 3).unwrap();
    assert!(report.valid);
    let report = fuzz_invariance(&sys, &FuzzConfig::new(FuzzScope::NValent, 40, 3)).unwrap();
    assert_eq!(report.mismatches(), 0, "{report}");
}

#[test]
fn fuzz_refuses_mismatched_scope() {
    let broken = fixtures::system("broken-tc4").unwrap();
    let err = fuzz_invariance(&broken, &FuzzConfig::new(FuzzScope::Trivalent, 5, 0)).unwrap_err();
    assert!(matches!(err, crate::Error::Precondition { .. }));
    let r3 = fixtures::system("r3").unwrap();
    assert!(fuzz_invariance(&r3, &FuzzConfig::new(FuzzScope::Trivalent, 5, 0)).is_err());
}

#[test]
fn broken_system_fails_under_tr2() {
    let broken = fixtures::system("broken-tc4").unwrap();
    let mut c = FuzzConfig::new(FuzzScope::Trivalent, 100, 5);
    c.moves = vec![MoveFamily::Tr2];
    c.unchecked = true;
    let report = fuzz_invariance(&broken, &c).unwrap();
    assert!(report.mismatches() > 0, "{report}");
}

#[test]
fn move_family_names_round_trip() {
    for m in MoveFamily::ALL {
        assert_eq!(m.to_string().parse::<MoveFamily>().unwrap(), m);
    }
    assert!("r3".parse::<MoveFamily>().is_err());
    assert_eq!("n_valent".parse::<FuzzScope>().unwrap(), FuzzScope::NValent);
}

use std::collections::BTreeSet;

use super::*;
use crate::algebra::GroupTable;
use crate::colour::{count_colourings, CountMode};
use crate::diagram::Diagram;
use crate::fixtures;
use crate::moves::{apply_move, candidate_moves, MoveFamily};

fn pres(name: &str) -> GroupPresentation {
    wirtinger_presentation(&fixtures::diagram(name).unwrap()).unwrap()
}

fn word(s: &str, names: &str) -> Vec<Letter> {
    // lowercase letter = generator, uppercase = inverse
    s.chars()
        .map(|c| {
            let g = names.find(c.to_ascii_lowercase()).unwrap();
            Letter::new(g, c.is_ascii_uppercase())
        })
        .collect()
}

/// Brute force over all assignments.
fn brute_homs(p: &GroupPresentation, g: &GroupTable) -> u64 {
    let n = g.order();
    let total = n.pow(p.generator_count as u32);
    (0..total)
        .filter(|&code| {
            let asg: Vec<usize> = (0..p.generator_count).map(|i| code / n.pow(i as u32) % n).collect();
            p.relators.iter().all(|r| {
                r.iter().fold(g.identity(), |acc, l| {
                    let a = asg[l.generator];
                    g.mul(acc, if l.inverse { g.inv(a) } else { a })
                }) == g.identity()
            })
        })
        .count() as u64
}

#[test]
fn unknot_presentation_is_free_on_one_generator() {
    let p = wirtinger_presentation(&Diagram::unknot()).unwrap();
    assert_eq!(p, GroupPresentation::new(1, vec![]).unwrap());
}

#[test]
fn free_and_torsion_examples() {
    let s3 = GroupTable::symmetric(3);
    assert_eq!(group_hom_count(&GroupPresentation::new(2, vec![]).unwrap(), &s3), 36);
    let a2 = GroupPresentation::new(1, vec![vec![Letter::gen(0), Letter::gen(0)]]).unwrap();
    assert_eq!(group_hom_count(&a2, &GroupTable::cyclic(3)), 1);
    assert_eq!(group_hom_count(&a2, &GroupTable::cyclic(2)), 2);
    assert!(GroupPresentation::new(1, vec![vec![Letter::gen(1)]]).is_err());
}

#[test]
fn mwf_relators_match_the_known_relations() {
    // a b c d f g h
    let names = "abcdfgh";
    let got: BTreeSet<Vec<Letter>> = pres("mwf").relators.into_iter().collect();
    let want: BTreeSet<Vec<Letter>> = [
        "CacD", // a c = c d
        "DcdF", // c d = d f
        "HbhG", // b h = h g
        "BhbH", // h b = b h
        "AdB",  // d = a b
        "gfC",  // c = g f
    ]
    .iter()
    .map(|w| word(w, names))
    .collect();
    assert_eq!(got, want);
}

#[test]
fn mlf_relators_match_the_known_relations() {
    let names = "abcdf";
    let got: BTreeSet<Vec<Letter>> = pres("mlf").relators.into_iter().collect();
    let want: BTreeSet<Vec<Letter>> = ["CacD", "DcdF", "AdB", "bfC"].iter().map(|w| word(w, names)).collect();
    assert_eq!(got, want);
}

#[test]
fn mlf_and_muf_groups_look_free_of_rank_two() {
    let panel = standard_panel();
    let free2: Vec<u64> = panel.iter().map(|g| (g.order() * g.order()) as u64).collect();
    assert_eq!(hom_fingerprint(&pres("mlf"), &panel), free2);
    assert_eq!(hom_fingerprint(&pres("muf"), &panel), free2);
}

#[test]
fn propagation_matches_brute_force() {
    let groups = [GroupTable::cyclic(2), GroupTable::cyclic(3), GroupTable::symmetric(3)];
    for name in fixtures::DIAGRAM_NAMES {
        let p = pres(name);
        for g in &groups {
            if g.order().pow(p.generator_count as u32) > 300_000 {
                continue;
            }
            assert_eq!(group_hom_count(&p, g), brute_homs(&p, g), "{name}");
        }
    }
}

#[test]
fn hom_counts_match_conjugation_colourings_on_links() {
    let s3 = GroupTable::symmetric(3);
    let conj = fixtures::system("conj-s3").unwrap();
    for name in ["unknot", "trefoil", "hopf"] {
        let d = fixtures::diagram(name).unwrap();
        let colours = count_colourings(&d, &conj, CountMode::All).unwrap();
        assert_eq!(
            group_hom_count(&wirtinger_presentation(&d).unwrap(), &s3),
            colours,
            "{name}"
        );
    }
    // transpositions form a conjugacy class: the trefoil has 9 colourings by R3
    let transpositions: Vec<usize> = (0..6).filter(|&g| s3.element_order(g) == 2).collect();
    let r3 = fixtures::system("r3").unwrap();
    let d = fixtures::diagram("trefoil").unwrap();
    assert_eq!(
        group_hom_count_within(&pres("trefoil"), &s3, &transpositions),
        count_colourings(&d, &r3, CountMode::All).unwrap()
    );
}

#[test]
fn hom_counts_survive_moves() {
    let s3 = GroupTable::symmetric(3);
    for name in ["theta", "mlf", "mwuf"] {
        let d = fixtures::diagram(name).unwrap();
        let base = group_hom_count(&wirtinger_presentation(&d).unwrap(), &s3);
        for family in MoveFamily::ALL {
            for m in candidate_moves(&d, family).into_iter().take(12) {
                let out = apply_move(&d, &m).unwrap().diagram;
                assert_eq!(
                    group_hom_count(&wirtinger_presentation(&out).unwrap(), &s3),
                    base,
                    "{name} {m}"
                );
            }
        }
    }
}

#[test]
fn linking_examples() {
    let hopf = linking_matrix(&fixtures::diagram("hopf").unwrap()).unwrap();
    assert_eq!(hopf.matrix, vec![vec![0, 1], vec![1, 0]]);
    let unlink = linking_matrix(&Diagram::new(2, vec![], vec![])).unwrap();
    assert_eq!(unlink.matrix, vec![vec![0, 0], vec![0, 0]]);
    let trefoil = linking_matrix(&fixtures::diagram("trefoil").unwrap()).unwrap();
    assert_eq!(trefoil.matrix, vec![vec![0]]);
    assert!(linking_matrix(&fixtures::diagram("theta").unwrap()).is_err());
}

#[test]
fn linking_survives_r1_and_r2() {
    let hopf = fixtures::diagram("hopf").unwrap();
    let base = linking_matrix(&hopf).unwrap().sorted_entries();
    for family in [MoveFamily::R1, MoveFamily::R2] {
        for m in candidate_moves(&hopf, family) {
            let out = apply_move(&hopf, &m).unwrap().diagram;
            assert_eq!(linking_matrix(&out).unwrap().sorted_entries(), base, "{m:?}");
        }
    }
}

fn linking_summary(name: &str) -> Vec<KauffmanValue> {
    kauffman_summary(&fixtures::diagram(name).unwrap(), &KauffmanInvariant::Linking).unwrap()
}

#[test]
fn theta_constituents_are_three_knots() {
    let theta = fixtures::diagram("theta").unwrap();
    let cs = kauffman_constituents(&theta).unwrap();
    assert_eq!(cs.len(), 3);
    assert!(cs
        .iter()
        .all(|c| c.is_link() && link_components(c).unwrap().iter().all(|&k| k == 0)));
    assert_eq!(linking_summary("theta"), vec![KauffmanValue::Linking(vec![]); 3]);
}

#[test]
fn finger_graphs_differ_by_linking() {
    let mlf = linking_summary("mlf");
    let muf = linking_summary("muf");
    assert!(mlf
        .iter()
        .any(|v| matches!(v, KauffmanValue::Linking(e) if e.iter().any(|x| x.abs() == 1))));
    assert!(muf
        .iter()
        .all(|v| matches!(v, KauffmanValue::Linking(e) if e.iter().all(|&x| x == 0))));
}

#[test]
fn athletes_differ_by_linking() {
    assert_eq!(
        linking_summary("athlete-happy"),
        vec![KauffmanValue::Linking(vec![0, 1, 1])]
    );
    assert_eq!(
        linking_summary("athlete-unhappy"),
        vec![KauffmanValue::Linking(vec![0, 0, 1])]
    );
}

#[test]
fn kauffman_colour_summary_and_errors() {
    let conj = fixtures::system("conj-s3").unwrap();
    let theta = fixtures::diagram("theta").unwrap();
    let v = kauffman_summary(&theta, &KauffmanInvariant::ColourCount(&conj)).unwrap();
    assert_eq!(v, vec![KauffmanValue::Count(6); 3]);
    let hopf = fixtures::diagram("hopf").unwrap();
    assert_eq!(kauffman_constituents(&hopf).unwrap(), vec![hopf]);
    let four = crate::moves::insert_bubble(&Diagram::unknot(), 0, 4).unwrap();
    assert!(kauffman_constituents(&four).is_err());
}

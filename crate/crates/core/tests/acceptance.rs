//! Acceptance criteria, one line each: `criterion <n> PASS|FAIL <summary> (<time>)`.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use hlink::algebra::{permutations, standard_quandle, validate_axioms, Profile, QuandleKind};
use hlink::colour::{brute_force_count, count_colourings, CountMode};
use hlink::family::{
    associated_involution, associated_quandle, axet_to_system, check_lemma_for, gamma_from_oplus, validate_family,
    validate_involution, FamilyKind,
};
use hlink::invariants::{hom_fingerprint, kauffman_summary, wirtinger_presentation, KauffmanInvariant, KauffmanValue};
use hlink::moves::{fuzz_invariance, random_diagram, FuzzConfig, FuzzScope, MoveFamily};
use hlink::{fixtures, GroupTable, OperationTable, SystemData};
use rayon::prelude::*;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn quandle(kind: QuandleKind) -> OperationTable {
    standard_quandle(&kind).unwrap()
}

fn t3r3z2() -> SystemData {
    SystemData::g_family(
        GroupTable::cyclic(2),
        vec![quandle(QuandleKind::Trivial(3)), quandle(QuandleKind::Dihedral(3))],
    )
    .unwrap()
}

fn t2t2z2() -> SystemData {
    SystemData::g_family(GroupTable::cyclic(2), vec![quandle(QuandleKind::Trivial(2)); 2]).unwrap()
}

fn criterion_1() -> Outcome {
    let s = t3r3z2();
    ensure(
        validate_family(&s, &FamilyKind::GFamily).map_err(err)?.valid,
        "not a G-family",
    )?;
    let (q, report) = associated_quandle(&s);
    ensure(q.table().size() == 6, format!("{} elements", q.table().size()))?;
    ensure(
        report.valid && validate_axioms(q.table(), Profile::Quandle).valid,
        "associated table is not a quandle",
    )?;
    Ok("(T3,R3 | Z2) is a G-family with a 6-element associated quandle".into())
}

fn criterion_2() -> Outcome {
    let (q, _) = associated_quandle(&t2t2z2());
    let n = q.table().size();
    ensure(n == 4, format!("{n} elements"))?;
    ensure(
        (0..n).all(|a| (0..n).all(|b| q.table().get(a, b) == a)),
        "some product moves its left factor",
    )?;
    Ok("(T2,T2 | Z2) gives the 4-element trivial quandle".into())
}

/// Every table of the given size, in lexicographic order.
fn all_tables(n: usize) -> Vec<OperationTable> {
    let cells = n * n;
    (0..n.pow(cells as u32))
        .map(|mut code| {
            let mut entries = vec![0; cells];
            for e in entries.iter_mut().rev() {
                *e = code % n;
                code /= n;
            }
            OperationTable::from_flat(n, entries).unwrap()
        })
        .collect()
}

fn criterion_3() -> Outcome {
    let groups = [GroupTable::cyclic(1), GroupTable::cyclic(2)];
    let mut found = 0usize;
    let mut checked = 0usize;
    for g in &groups {
        let n = g.order();
        let fs: Vec<Vec<Vec<usize>>> = all_tables(n)
            .iter()
            .map(|t| t.rows().map(|r| r.to_vec()).collect())
            .collect();
        for m in 1..=2 {
            let xs = all_tables(m);
            // every choice of one X-operation per element of G
            let star_choices: Vec<Vec<OperationTable>> = (0..xs.len().pow(n as u32))
                .map(|mut code| {
                    (0..n)
                        .map(|_| {
                            let t = xs[code % xs.len()].clone();
                            code /= xs.len();
                            t
                        })
                        .collect()
                })
                .collect();
            for otimes in all_tables(n) {
                let results: Vec<(usize, usize, Option<String>)> = fs
                    .par_iter()
                    .map(|f| {
                        let (mut found, mut checked, mut bad) = (0, 0, None);
                        for stars in &star_choices {
                            let s =
                                SystemData::gsf_family(g.clone(), otimes.clone(), f.clone(), stars.clone()).unwrap();
                            checked += 1;
                            if validate_family(&s, &FamilyKind::GsfFamily).unwrap().valid {
                                found += 1;
                                if !check_lemma_for(&s).map(|r| r.valid).unwrap_or(false) {
                                    bad = Some(format!("lemma fails for |X|={m}, |G|={n}, f={f:?}"));
                                }
                            }
                        }
                        (found, checked, bad)
                    })
                    .collect();
                for (f, c, bad) in results {
                    found += f;
                    checked += c;
                    if let Some(b) = bad {
                        return Err(b);
                    }
                }
            }
        }
    }
    ensure(found > 0, "no families found")?;
    Ok(format!(
        "{found} gsf families among {checked} candidates, all satisfy the lemma"
    ))
}

fn small_quandles() -> Vec<(String, OperationTable)> {
    let mut out = Vec::new();
    let mut groups: Vec<(String, GroupTable)> = (1..=6).map(|n| (format!("Z{n}"), GroupTable::cyclic(n))).collect();
    groups.push(("S3".into(), GroupTable::symmetric(3)));
    groups.push(("Z2xZ2".into(), GroupTable::cyclic(2).product(&GroupTable::cyclic(2))));
    for n in 1..=6 {
        out.push((format!("T{n}"), quandle(QuandleKind::Trivial(n))));
        out.push((format!("R{n}"), quandle(QuandleKind::Dihedral(n))));
    }
    for (name, g) in &groups {
        for k in 1..=g.exponent() {
            out.push((format!("Conj({name},{k})"), quandle(QuandleKind::Conj(g.clone(), k))));
        }
        if g.is_abelian() {
            out.push((format!("Tak({name})"), quandle(QuandleKind::Takasaki(g.clone()))));
            for phi in permutations(g.order()) {
                if g.is_automorphism(&phi) {
                    out.push((
                        format!("Alex({name},{phi:?})"),
                        quandle(QuandleKind::Alexander(g.clone(), phi)),
                    ));
                }
            }
        }
    }
    out.retain(|(_, t)| validate_axioms(t, Profile::Quandle).valid);
    out
}

fn criterion_4() -> Outcome {
    for s in [t3r3z2(), t2t2z2()] {
        let (q, _) = associated_quandle(&s);
        let rho = associated_involution(&s);
        let r = validate_involution(q.table(), &rho).map_err(err)?;
        ensure(r.valid, format!("(x,g) -> (x,g^-1) is not good: {r}"))?;
    }
    let qs = small_quandles();
    let perms: Vec<Vec<Vec<usize>>> = (0..=6).map(permutations).collect();
    let checks: usize = qs
        .par_iter()
        .map(|(name, q)| {
            let mut n = 0;
            for rho in &perms[q.size()] {
                let r = validate_involution(q, rho).unwrap();
                assert!(!r.has_failure("I2-EQUIV"), "{name} {rho:?}");
                n += 1;
            }
            n
        })
        .sum();
    Ok(format!(
        "inverse involution is good on both families; I2 and I2' agree on {checks} permutations of {} quandles",
        qs.len()
    ))
}

const MWUF_GENERATING: u64 = 18;
const MWF_GENERATING: u64 = 0;
const MWUF_ALL: u64 = 72;
const MWF_ALL: u64 = 54;

fn criterion_5() -> Outcome {
    let sys = t3r3z2();
    let count = |name: &str, mode| count_colourings(&fixtures::diagram(name).unwrap(), &sys, mode).map_err(err);
    let (wu, w) = (
        count("mwuf", CountMode::Generating)?,
        count("mwf", CountMode::Generating)?,
    );
    ensure(wu > 0 && w == 0, format!("generating counts mwuf {wu}, mwf {w}"))?;
    ensure(
        (wu, w) == (MWUF_GENERATING, MWF_GENERATING),
        format!("generating counts {wu}/{w} differ from golden values"),
    )?;
    let (au, a) = (count("mwuf", CountMode::All)?, count("mwf", CountMode::All)?);
    ensure(
        (au, a) == (MWUF_ALL, MWF_ALL),
        format!("all counts {au}/{a} differ from golden values"),
    )?;
    Ok(format!("generating colourings: mwuf {wu}, mwf {w} (all: {au}, {a})"))
}

fn criterion_6() -> Outcome {
    let report = fuzz_invariance(&t3r3z2(), &FuzzConfig::new(FuzzScope::Handlebody, 200, 2024)).map_err(err)?;
    ensure(report.trials.len() == 200, "wrong trial count")?;
    ensure(
        report.mismatches() == 0,
        format!("{} mismatches:\n{report}", report.mismatches()),
    )?;
    Ok("200 handlebody trials, 0 mismatches".into())
}

fn criterion_7() -> Outcome {
    let systems = [t3r3z2(), fixtures::system("conj-s3").unwrap()];
    let mut diagrams = Vec::new();
    let mut seed = 0u64;
    while diagrams.len() < 50 {
        let d = random_diagram(seed, 3, 2, &[3]);
        seed += 1;
        if d.arc_count <= 5 {
            diagrams.push(d);
        }
    }
    for d in &diagrams {
        for s in &systems {
            let fast = count_colourings(d, s, CountMode::All).map_err(err)?;
            let slow = brute_force_count(d, s, 1 << 24).map_err(err)?;
            ensure(
                fast == slow,
                format!("backtracking {fast} vs brute force {slow} on {d:?}"),
            )?;
        }
    }
    Ok(format!(
        "50 diagrams (seeds 0..{seed}) x 2 systems agree with brute force"
    ))
}

fn criterion_8() -> Outcome {
    let linking = |name: &str| kauffman_summary(&fixtures::diagram(name).unwrap(), &KauffmanInvariant::Linking);
    let mlf = linking("mlf").map_err(err)?;
    let muf = linking("muf").map_err(err)?;
    let entries = |v: &[KauffmanValue]| -> Vec<i64> {
        v.iter()
            .flat_map(|x| match x {
                KauffmanValue::Linking(e) => e.clone(),
                KauffmanValue::Count(_) => Vec::new(),
            })
            .collect()
    };
    ensure(
        entries(&mlf).iter().any(|x| x.abs() == 1),
        format!("mlf summary {mlf:?}"),
    )?;
    ensure(entries(&muf).iter().all(|&x| x == 0), format!("muf summary {muf:?}"))?;
    let panel = [GroupTable::cyclic(2), GroupTable::cyclic(3), GroupTable::symmetric(3)];
    let fp = |name: &str| {
        hom_fingerprint(
            &wirtinger_presentation(&fixtures::diagram(name).unwrap()).unwrap(),
            &panel,
        )
    };
    let (a, b) = (fp("mlf"), fp("muf"));
    ensure(a == b, format!("fingerprints differ: {a:?} vs {b:?}"))?;
    Ok(format!("mlf has |lk| = 1, muf is split; both fingerprints {a:?}"))
}

fn criterion_9() -> Outcome {
    let (sys, conversion) = axet_to_system(&fixtures::s3_axet()).map_err(err)?;
    ensure(conversion.valid, format!("conversion report:\n{conversion}"))?;
    for kind in [
        FamilyKind::FwSystem,
        FamilyKind::TrivalentCompatible,
        FamilyKind::AssociativeComposition,
    ] {
        let r = validate_family(&sys, &kind).map_err(err)?;
        ensure(r.valid, format!("{kind}:\n{r}"))?;
    }
    let (_, r) = gamma_from_oplus(&sys, 3).map_err(err)?;
    ensure(r.valid, format!("n=3 composition:\n{r}"))?;
    Ok("axet system passes fw, trivalent, associative and n=3 checks".into())
}

fn criterion_10() -> Outcome {
    let broken = fixtures::system("broken-tc4").unwrap();
    let r = validate_family(&broken, &FamilyKind::TrivalentCompatible).map_err(err)?;
    ensure(!r.valid, "broken system passes")?;
    ensure(
        r.failed_axioms() == vec!["TC4"],
        format!("fails {:?}", r.failed_axioms()),
    )?;
    let mut c = FuzzConfig::new(FuzzScope::Trivalent, 100, 5);
    c.moves = vec![MoveFamily::Tr2];
    c.unchecked = true;
    let report = fuzz_invariance(&broken, &c).map_err(err)?;
    ensure(report.mismatches() > 0, "no mismatch found")?;
    Ok(format!(
        "rejected (TC4 only); TR2 fuzz finds {} mismatches in 100 trials",
        report.mismatches()
    ))
}

fn main() {
    let criteria: [fn() -> Outcome; 10] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
        criterion_10,
    ];
    let mut failed = 0;
    for (i, c) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(c)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("criterion {} PASS {msg} ({secs:.2}s)", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {} FAIL {msg} ({secs:.2}s)", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}

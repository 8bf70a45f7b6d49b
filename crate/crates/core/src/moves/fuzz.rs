use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::apply::{apply_move, insert_bubble, MoveKind, MoveSpec};
use super::random::random_diagram;
use crate::colour::{count_colourings, CountMode};
use crate::diagram::{serialize_diagram, Diagram};
use crate::error::{Error, Result};
use crate::family::{
    associated_involution, associated_quandle, validate_family, validate_involution, FamilyKind, SystemData,
};
use crate::report::AxiomReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveFamily {
    R1,
    R2,
    Tr1,
    Tr2,
    Sr,
    Rotate,
}

impl MoveFamily {
    pub const ALL: [MoveFamily; 6] = [
        MoveFamily::R1,
        MoveFamily::R2,
        MoveFamily::Tr1,
        MoveFamily::Tr2,
        MoveFamily::Sr,
        MoveFamily::Rotate,
    ];

    fn needs_vertex(self) -> bool {
        !matches!(self, MoveFamily::R1 | MoveFamily::R2)
    }
}

impl fmt::Display for MoveFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MoveFamily::R1 => "r1",
            MoveFamily::R2 => "r2",
            MoveFamily::Tr1 => "tr1",
            MoveFamily::Tr2 => "tr2",
            MoveFamily::Sr => "sr",
            MoveFamily::Rotate => "rotate",
        })
    }
}

impl FromStr for MoveFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MoveFamily::ALL
            .into_iter()
            .find(|m| m.to_string() == s)
            .ok_or_else(|| Error::UnknownResource(format!("move:{s}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FuzzScope {
    Links,
    Trivalent,
    Handlebody,
    NValent,
}

impl FuzzScope {
    pub fn default_moves(self) -> Vec<MoveFamily> {
        use MoveFamily::*;
        match self {
            FuzzScope::Links => vec![R1, R2],
            FuzzScope::Trivalent | FuzzScope::NValent => vec![R1, R2, Tr1, Tr2, Rotate],
            FuzzScope::Handlebody => MoveFamily::ALL.to_vec(),
        }
    }
}

impl fmt::Display for FuzzScope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FuzzScope::Links => "links",
            FuzzScope::Trivalent => "trivalent",
            FuzzScope::Handlebody => "handlebody",
            FuzzScope::NValent => "n_valent",
        })
    }
}

impl FromStr for FuzzScope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            FuzzScope::Links,
            FuzzScope::Trivalent,
            FuzzScope::Handlebody,
            FuzzScope::NValent,
        ]
        .into_iter()
        .find(|m| m.to_string() == s)
        .ok_or_else(|| Error::UnknownResource(format!("scope:{s}")))
    }
}

/// Every move of `family` applicable to `d`.
pub fn candidate_moves(d: &Diagram, family: MoveFamily) -> Vec<MoveSpec> {
    let mut out = Vec::new();
    let bools = [false, true];
    match family {
        MoveFamily::R1 => {
            for a in 0..d.arc_count {
                for over_incoming in bools {
                    for mirror in bools {
                        out.push(MoveSpec::new(MoveKind::R1Insert { over_incoming }, a, mirror));
                    }
                }
            }
        }
        MoveFamily::R2 => {
            for a in 0..d.arc_count {
                for partner in 0..d.arc_count {
                    for site_over in bools {
                        for mirror in bools {
                            out.push(MoveSpec::new(MoveKind::R2Insert { partner, site_over }, a, mirror));
                        }
                    }
                }
            }
        }
        MoveFamily::Tr1 | MoveFamily::Tr2 | MoveFamily::Rotate => {
            for (v, vx) in d.vertices.iter().enumerate() {
                for end in 0..vx.valence() {
                    for mirror in bools {
                        match family {
                            MoveFamily::Tr1 => out.push(MoveSpec::new(MoveKind::Tr1Insert { end }, v, mirror)),
                            MoveFamily::Tr2 => {
                                for forward in bools {
                                    out.push(MoveSpec::new(MoveKind::Tr2Slide { end, forward }, v, mirror));
                                }
                            }
                            _ if end == 0 => {
                                out.push(MoveSpec::new(MoveKind::VertexRotate { forward: mirror }, v, false))
                            }
                            _ => {}
                        }
                    }
                }
            }
        }
        MoveFamily::Sr => {
            for a in 0..d.arc_count {
                out.push(MoveSpec::new(MoveKind::SrForward, a, false));
                out.push(MoveSpec::new(MoveKind::SrBackward, a, false));
            }
        }
    }
    out.retain(|m| apply_move(d, m).is_ok());
    out
}

/// Axiom checks a system must pass before fuzzing moves of `scope`.
pub fn scope_report(sys: &SystemData, scope: FuzzScope) -> Result<AxiomReport> {
    let mut report = AxiomReport::new();
    let (q, qr) = associated_quandle(sys);
    report.merge_prefixed("quandle", qr);
    if scope == FuzzScope::Links {
        return Ok(report);
    }
    sys.require_rho(&scope.to_string())?;
    report.merge_prefixed(
        "involution",
        validate_involution(q.table(), &associated_involution(sys))?,
    );
    let kinds = match scope {
        FuzzScope::Trivalent => vec![FamilyKind::TrivalentCompatible],
        FuzzScope::Handlebody => vec![FamilyKind::TrivalentCompatible, FamilyKind::AssociativeComposition],
        _ => {
            let mut arities: Vec<usize> = sys.supported_valences().iter().map(|v| v - 1).collect();
            arities.retain(|&n| n >= 3);
            let mut kinds = Vec::new();
            if sys.oplus.is_some() {
                kinds.push(FamilyKind::TrivalentCompatible);
            }
            if !arities.is_empty() {
                kinds.push(FamilyKind::NCompatible(arities));
            }
            kinds
        }
    };
    for k in kinds {
        report.merge_prefixed(&k.to_string(), validate_family(sys, &k)?);
    }
    Ok(report)
}

#[derive(Debug, Clone)]
pub struct FuzzConfig {
    pub trials: usize,
    pub seed: u64,
    pub moves: Vec<MoveFamily>,
    pub scope: FuzzScope,
    /// Skips the scope check, for probing systems known to break a condition.
    pub unchecked: bool,
    pub crossings_max: usize,
}

impl FuzzConfig {
    pub fn new(scope: FuzzScope, trials: usize, seed: u64) -> Self {
        FuzzConfig {
            trials,
            seed,
            moves: scope.default_moves(),
            scope,
            unchecked: false,
            crossings_max: 4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrialOutcome {
    pub index: usize,
    pub seed: u64,
    pub move_name: String,
    pub site: usize,
    pub spec: String,
    pub before: u64,
    pub after: u64,
    pub diagram: String,
}

impl TrialOutcome {
    pub fn ok(&self) -> bool {
        self.before == self.after
    }
}

impl fmt::Display for TrialOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "trial {} seed {} move {}@{} before {} after {} {}",
            self.index,
            self.seed,
            self.move_name,
            self.site,
            self.before,
            self.after,
            if self.ok() { "OK" } else { "FAIL" }
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FuzzReport {
    pub trials: Vec<TrialOutcome>,
}

impl FuzzReport {
    pub fn mismatches(&self) -> usize {
        self.trials.iter().filter(|t| !t.ok()).count()
    }
}

impl fmt::Display for FuzzReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.trials {
            writeln!(f, "{t}")?;
        }
        writeln!(f, "{} trials, {} mismatches", self.trials.len(), self.mismatches())
    }
}

fn scope_valences(sys: &SystemData, scope: FuzzScope) -> Vec<usize> {
    match scope {
        FuzzScope::Links => Vec::new(),
        FuzzScope::Trivalent | FuzzScope::Handlebody => vec![3],
        FuzzScope::NValent => sys.supported_valences(),
    }
}

/// Random moves on random diagrams, comparing colouring counts before and after.
pub fn fuzz_invariance(sys: &SystemData, config: &FuzzConfig) -> Result<FuzzReport> {
    if config.moves.is_empty() {
        return Err(Error::NotApplicable("no moves selected".into()));
    }
    let valences = scope_valences(sys, config.scope);
    if config.scope != FuzzScope::Links && valences.is_empty() {
        return Err(Error::MissingField {
            field: "oplus",
            kind: config.scope.to_string(),
        });
    }
    if config.scope == FuzzScope::Links && config.moves.iter().any(|m| m.needs_vertex()) {
        return Err(Error::NotApplicable("link scope only admits r1 and r2".into()));
    }
    if !config.unchecked {
        let report = scope_report(sys, config.scope)?;
        if !report.valid {
            return Err(Error::precondition(
                format!("system does not satisfy the {} scope", config.scope),
                report,
            ));
        }
    }
    let mut master = ChaCha8Rng::seed_from_u64(config.seed);
    let seeds: Vec<u64> = (0..config.trials).map(|_| master.next_u64()).collect();
    let trials = seeds
        .par_iter()
        .enumerate()
        .map(|(i, &s)| run_trial(sys, config, &valences, i, s))
        .collect::<Result<Vec<_>>>()?;
    Ok(FuzzReport { trials })
}

fn run_trial(
    sys: &SystemData,
    config: &FuzzConfig,
    valences: &[usize],
    index: usize,
    seed: u64,
) -> Result<TrialOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vmax = if valences.is_empty() { 0 } else { 2 };
    let mut d = random_diagram(rng.gen(), config.crossings_max, vmax, valences);
    let family = *config.moves.choose(&mut rng).unwrap();
    let mut candidates = prepare(&mut d, family, valences, &mut rng);
    if candidates.is_empty() {
        candidates = candidate_moves(&d, MoveFamily::R2);
    }
    let m = *candidates.choose(&mut rng).expect("r2 always applies");
    let before = count_colourings(&d, sys, CountMode::All)?;
    let moved = apply_move(&d, &m)?.diagram;
    let after = count_colourings(&moved, sys, CountMode::All)?;
    Ok(TrialOutcome {
        index,
        seed,
        move_name: m.name().to_string(),
        site: m.site,
        spec: format!("{m:?}"),
        before,
        after,
        diagram: serialize_diagram(&d)?,
    })
}

/// Rewrites `d` until `family` has a site, returning the candidates.
fn prepare(d: &mut Diagram, family: MoveFamily, valences: &[usize], rng: &mut ChaCha8Rng) -> Vec<MoveSpec> {
    if family.needs_vertex() && d.vertices.is_empty() {
        let v = if family == MoveFamily::Sr {
            3
        } else {
            *valences.choose(rng).unwrap_or(&3)
        };
        *d = insert_bubble(d, rng.gen_range(0..d.arc_count), v).expect("bubble");
    }
    let mut candidates = candidate_moves(d, family);
    match family {
        MoveFamily::Sr if candidates.is_empty() => {
            *d = insert_bubble(d, rng.gen_range(0..d.arc_count), 3).expect("bubble");
            candidates = candidate_moves(d, family);
        }
        MoveFamily::Tr2 => {
            for _ in 0..8 {
                if !candidates.is_empty() {
                    break;
                }
                if let Some(next) = tr2_setup(d, rng) {
                    *d = next;
                }
                candidates = candidate_moves(d, family);
            }
            // sometimes slide forward first so the backward slide is exercised
            if rng.gen_bool(0.5) {
                let forward: Vec<MoveSpec> = candidates
                    .iter()
                    .copied()
                    .filter(|m| matches!(m.kind, MoveKind::Tr2Slide { forward: true, .. }))
                    .collect();
                if let Some(m) = forward.choose(rng) {
                    *d = apply_move(d, m).expect("candidate applies").diagram;
                    candidates = candidate_moves(d, family);
                    candidates.retain(|c| matches!(c.kind, MoveKind::Tr2Slide { forward: false, .. }));
                }
            }
        }
        _ => {}
    }
    candidates
}

/// Places a strand crossing an edge next to a vertex with an R2 insertion.
fn tr2_setup(d: &Diagram, rng: &mut ChaCha8Rng) -> Option<Diagram> {
    let v = rng.gen_range(0..d.vertices.len());
    let k = rng.gen_range(0..d.vertices[v].valence());
    let arcs: Vec<usize> = d.vertices[v].ends.iter().map(|e| e.arc).collect();
    let mut base = d.clone();
    let free: Vec<usize> = (0..base.arc_count).filter(|a| !arcs.contains(a)).collect();
    let s = match free.choose(rng) {
        Some(&s) => s,
        None => {
            base.arc_count += 1;
            base.arc_count - 1
        }
    };
    let near = arcs[k];
    let (site, partner) = if rng.gen_bool(0.5) { (near, s) } else { (s, near) };
    let m = MoveSpec::new(
        MoveKind::R2Insert {
            partner,
            site_over: false,
        },
        site,
        rng.gen_bool(0.5),
    );
    apply_move(&base, &m).ok().map(|o| o.diagram)
}

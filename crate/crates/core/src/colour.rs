//! Proper colourings of diagrams by associated quandles.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{closure_with_dual, dual_operation, OperationTable};
use crate::diagram::{Diagram, Direction, Sign};
use crate::error::{Error, Result};
use crate::family::{associated_quandle, Gamma, SystemData};
use crate::report::AxiomReport;

/// Arc colours as pair indices `x |G| + g` of the associated quandle.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Colouring {
    pub assignment: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMode {
    All,
    /// Only colourings whose image generates the whole associated quandle.
    Generating,
}

impl std::str::FromStr for CountMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(CountMode::All),
            "generating" => Ok(CountMode::Generating),
            _ => Err(Error::NotApplicable(format!("unknown mode `{s}`"))),
        }
    }
}

#[derive(Debug, Clone)]
enum Constraint {
    Crossing {
        over: usize,
        under_in: usize,
        under_out: usize,
        sign: Sign,
    },
    Vertex {
        ends: Vec<(usize, Direction)>,
        gamma: Gamma,
    },
}

enum Outcome {
    Conflict,
    Force(usize, usize),
    Open,
}

/// Everything the search needs, precomputed once per (diagram, system) pair.
struct Problem<'a> {
    sys: &'a SystemData,
    table: OperationTable,
    dual: Option<OperationTable>,
    n_pairs: usize,
    arcs: usize,
    constraints: Vec<Constraint>,
    incident: Vec<Vec<usize>>,
    order: Vec<usize>,
}

impl<'a> Problem<'a> {
    fn new(d: &Diagram, sys: &'a SystemData) -> Result<Self> {
        d.ensure_valid()?;
        sys.check_shape()?;
        if !d.vertices.is_empty() {
            sys.require_rho("vertex colouring")?;
        }
        let mut gammas: BTreeMap<usize, Gamma> = BTreeMap::new();
        for v in d.valences() {
            let g = sys.gamma(v - 1).ok_or(Error::MissingGamma { valence: v })?;
            gammas.insert(v, g);
        }
        let (q, _) = associated_quandle(sys);
        let table = q.into_table();
        let dual = dual_operation(&table).ok();
        let mut constraints = Vec::new();
        for c in &d.crossings {
            constraints.push(Constraint::Crossing {
                over: c.over,
                under_in: c.under_in,
                under_out: c.under_out,
                sign: c.sign,
            });
        }
        for v in &d.vertices {
            constraints.push(Constraint::Vertex {
                ends: v.ends.iter().map(|e| (e.arc, e.dir)).collect(),
                gamma: gammas[&v.valence()].clone(),
            });
        }
        let mut incident = vec![Vec::new(); d.arc_count];
        for (i, c) in constraints.iter().enumerate() {
            let mut arcs: Vec<usize> = match c {
                Constraint::Crossing {
                    over,
                    under_in,
                    under_out,
                    ..
                } => vec![*over, *under_in, *under_out],
                Constraint::Vertex { ends, .. } => ends.iter().map(|e| e.0).collect(),
            };
            arcs.sort_unstable();
            arcs.dedup();
            for a in arcs {
                incident[a].push(i);
            }
        }
        let degree = d.incidence();
        let mut order: Vec<usize> = (0..d.arc_count).collect();
        order.sort_by_key(|&a| (std::cmp::Reverse(degree[a]), a));
        Ok(Problem {
            sys,
            n_pairs: table.size(),
            table,
            dual,
            arcs: d.arc_count,
            constraints,
            incident,
            order,
        })
    }

    #[inline]
    fn split(&self, p: usize) -> (usize, usize) {
        (p / self.sys.g_size, p % self.sys.g_size)
    }

    /// The vertex equation on a fully known set of end colours, X-elements assumed equal.
    fn vertex_holds(&self, x: usize, gs: &[usize], ends: &[(usize, Direction)], gamma: &Gamma) -> bool {
        let hat = |i: usize| match ends[i].1 {
            Direction::In => gs[i],
            Direction::Out => self.sys.rho(x, gs[i]),
        };
        let v = ends.len();
        let args: Vec<usize> = (0..v - 1).map(hat).collect();
        gamma.eval(&args) == self.sys.rho(x, hat(v - 1))
    }

    fn evaluate(&self, c: &Constraint, colour: &[Option<usize>]) -> Outcome {
        match c {
            Constraint::Crossing {
                over,
                under_in,
                under_out,
                sign,
            } => {
                let (o, i, u) = (colour[*over], colour[*under_in], colour[*under_out]);
                let Some(o) = o else { return Outcome::Open };
                // positive: u = i·o ; negative: i = u·o
                let (src, dst, dst_arc, src_arc) = match sign {
                    Sign::Positive => (i, u, *under_out, *under_in),
                    Sign::Negative => (u, i, *under_in, *under_out),
                };
                match (src, dst) {
                    (Some(s), Some(t)) => {
                        if self.table.get(s, o) == t {
                            Outcome::Open
                        } else {
                            Outcome::Conflict
                        }
                    }
                    (Some(s), None) => Outcome::Force(dst_arc, self.table.get(s, o)),
                    (None, Some(t)) => match &self.dual {
                        Some(dual) => Outcome::Force(src_arc, dual.get(t, o)),
                        None => Outcome::Open,
                    },
                    (None, None) => Outcome::Open,
                }
            }
            Constraint::Vertex { ends, gamma } => {
                let mut x = None;
                let mut missing = None;
                for &(a, _) in ends {
                    match colour[a] {
                        Some(p) => {
                            let px = self.split(p).0;
                            if *x.get_or_insert(px) != px {
                                return Outcome::Conflict;
                            }
                        }
                        None => match missing {
                            None => missing = Some(a),
                            Some(m) if m == a => {}
                            Some(_) => return Outcome::Open,
                        },
                    }
                }
                let Some(x) = x else { return Outcome::Open };
                let mut gs: Vec<usize> = ends
                    .iter()
                    .map(|&(a, _)| colour[a].map(|p| self.split(p).1).unwrap_or(0))
                    .collect();
                match missing {
                    None => {
                        if self.vertex_holds(x, &gs, ends, gamma) {
                            Outcome::Open
                        } else {
                            Outcome::Conflict
                        }
                    }
                    Some(m) => {
                        let mut found = None;
                        for g in 0..self.sys.g_size {
                            for (slot, &(a, _)) in gs.iter_mut().zip(ends) {
                                if a == m {
                                    *slot = g;
                                }
                            }
                            if self.vertex_holds(x, &gs, ends, gamma) {
                                if found.is_some() {
                                    return Outcome::Open;
                                }
                                found = Some(g);
                            }
                        }
                        match found {
                            Some(g) => Outcome::Force(m, x * self.sys.g_size + g),
                            None => Outcome::Conflict,
                        }
                    }
                }
            }
        }
    }

    /// Assigns and propagates; on conflict returns false, leaving the trail to be undone.
    fn assign(&self, arc: usize, value: usize, colour: &mut [Option<usize>], trail: &mut Vec<usize>) -> bool {
        colour[arc] = Some(value);
        trail.push(arc);
        let mut queue = vec![arc];
        while let Some(a) = queue.pop() {
            for &ci in &self.incident[a] {
                match self.evaluate(&self.constraints[ci], colour) {
                    Outcome::Conflict => return false,
                    Outcome::Open => {}
                    Outcome::Force(b, v) => match colour[b] {
                        Some(w) if w != v => return false,
                        Some(_) => {}
                        None => {
                            colour[b] = Some(v);
                            trail.push(b);
                            queue.push(b);
                        }
                    },
                }
            }
        }
        true
    }

    fn undo(colour: &mut [Option<usize>], trail: &mut Vec<usize>, mark: usize) {
        for a in trail.drain(mark..) {
            colour[a] = None;
        }
    }

    fn next_arc(&self, colour: &[Option<usize>]) -> Option<usize> {
        self.order.iter().copied().find(|&a| colour[a].is_none())
    }

    /// Depth-first search; `visit` returns false to stop.
    fn search(
        &self,
        colour: &mut Vec<Option<usize>>,
        trail: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[Option<usize>]) -> bool,
    ) -> bool {
        let Some(a) = self.next_arc(colour) else {
            return visit(colour);
        };
        for v in 0..self.n_pairs {
            let mark = trail.len();
            let ok = self.assign(a, v, colour, trail);
            let go_on = if ok { self.search(colour, trail, visit) } else { true };
            Self::undo(colour, trail, mark);
            if !go_on {
                return false;
            }
        }
        true
    }

    fn generates(&self, colour: &[Option<usize>]) -> Result<bool> {
        let dual = self.dual.as_ref().ok_or_else(|| {
            Error::NotApplicable("generating mode needs a right-invertible associated quandle".into())
        })?;
        let seeds: BTreeSet<usize> = colour.iter().map(|c| c.expect("complete")).collect();
        Ok(closure_with_dual(&self.table, dual, &seeds)?.len() == self.n_pairs)
    }

    fn verify(&self, d: &Diagram, assignment: &[usize]) -> AxiomReport {
        let mut r = AxiomReport::new();
        if assignment.len() != self.arcs || assignment.iter().any(|&v| v >= self.n_pairs) {
            r.record("RANGE", &[]);
            return r;
        }
        for (i, k) in d.crossings.iter().enumerate() {
            let (o, ui, uo) = (assignment[k.over], assignment[k.under_in], assignment[k.under_out]);
            let ok = match k.sign {
                Sign::Positive => self.table.get(ui, o) == uo,
                Sign::Negative => self.table.get(uo, o) == ui,
            };
            r.check(ok, "CROSSING", &[i]);
        }
        let colour: Vec<Option<usize>> = assignment.iter().map(|&v| Some(v)).collect();
        for (i, v) in d.vertices.iter().enumerate() {
            let x = self.split(assignment[v.ends[0].arc]).0;
            if v.ends.iter().any(|e| self.split(assignment[e.arc]).0 != x) {
                r.record("VERTEX-X", &[i]);
                continue;
            }
            let c = &self.constraints[d.crossings.len() + i];
            r.check(!matches!(self.evaluate(c, &colour), Outcome::Conflict), "VERTEX", &[i]);
        }
        r
    }

    fn count(&self, mode: CountMode) -> Result<u64> {
        if mode == CountMode::Generating && self.dual.is_none() {
            return Err(Error::NotApplicable(
                "generating mode needs a right-invertible associated quandle".into(),
            ));
        }
        if self.arcs == 0 {
            return Ok(match mode {
                CountMode::All => 1,
                CountMode::Generating => u64::from(self.n_pairs == 0),
            });
        }
        let first = self.order[0];
        let counts: Vec<u64> = (0..self.n_pairs)
            .into_par_iter()
            .map(|v| {
                let mut colour = vec![None; self.arcs];
                let mut trail = Vec::new();
                if !self.assign(first, v, &mut colour, &mut trail) {
                    return 0;
                }
                let mut n = 0u64;
                self.search(&mut colour, &mut trail, &mut |c| {
                    if mode == CountMode::All || self.generates(c).unwrap_or(false) {
                        n += 1;
                    }
                    true
                });
                n
            })
            .collect();
        Ok(counts.iter().sum())
    }
}

/// Ids: `RANGE`, `CROSSING` (crossing index), `VERTEX-X` and `VERTEX` (vertex index).
pub fn verify_colouring(d: &Diagram, sys: &SystemData, c: &Colouring) -> Result<AxiomReport> {
    Ok(Problem::new(d, sys)?.verify(d, &c.assignment))
}

pub fn count_colourings(d: &Diagram, sys: &SystemData, mode: CountMode) -> Result<u64> {
    Problem::new(d, sys)?.count(mode)
}

/// The first `cap` proper colourings in search order.
pub fn enumerate_colourings(d: &Diagram, sys: &SystemData, cap: usize) -> Result<Vec<Colouring>> {
    let p = Problem::new(d, sys)?;
    let mut out = Vec::new();
    if cap == 0 {
        return Ok(out);
    }
    let mut colour = vec![None; p.arcs];
    let mut trail = Vec::new();
    p.search(&mut colour, &mut trail, &mut |c| {
        out.push(Colouring {
            assignment: c.iter().map(|v| v.expect("complete")).collect(),
        });
        out.len() < cap
    });
    Ok(out)
}

/// Whether the image of `c` generates the whole associated quandle.
pub fn is_generating(d: &Diagram, sys: &SystemData, c: &Colouring) -> Result<bool> {
    let p = Problem::new(d, sys)?;
    let colour: Vec<Option<usize>> = c.assignment.iter().map(|&v| Some(v)).collect();
    p.generates(&colour)
}

/// Exhaustive count over all `|X × G|^arcs` assignments; refuses more than `limit` of them.
pub fn brute_force_count(d: &Diagram, sys: &SystemData, limit: u64) -> Result<u64> {
    let p = Problem::new(d, sys)?;
    let total = (p.n_pairs as u64)
        .checked_pow(p.arcs as u32)
        .filter(|&t| t <= limit)
        .ok_or_else(|| Error::NotApplicable(format!("more than {limit} assignments")))?;
    let mut n = 0;
    let mut c = Colouring {
        assignment: vec![0; p.arcs],
    };
    for code in 0..total {
        let mut k = code;
        for slot in c.assignment.iter_mut().rev() {
            *slot = (k % p.n_pairs as u64) as usize;
            k /= p.n_pairs as u64;
        }
        if p.verify(d, &c.assignment).valid {
            n += 1;
        }
    }
    Ok(n)
}

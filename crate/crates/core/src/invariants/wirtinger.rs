use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::GroupTable;
use crate::diagram::{Diagram, Direction, Sign};
use crate::error::{Error, Result};

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        Letter { generator, inverse }
    }

    pub fn gen(generator: usize) -> Self {
        Letter::new(generator, false)
    }

    pub fn inv(generator: usize) -> Self {
        Letter::new(generator, true)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupPresentation {
    pub generator_count: usize,
    pub relators: Vec<Vec<Letter>>,
}

impl GroupPresentation {
    pub fn new(generator_count: usize, relators: Vec<Vec<Letter>>) -> Result<Self> {
        if let Some(l) = relators.iter().flatten().find(|l| l.generator >= generator_count) {
            return Err(Error::InvalidTable(format!(
                "relator uses generator {} of {generator_count}",
                l.generator
            )));
        }
        Ok(GroupPresentation {
            generator_count,
            relators,
        })
    }
}

/// One generator per arc. A positive crossing gives `o⁻¹·i·o·u⁻¹` and a
/// negative one `o·i·o⁻¹·u⁻¹` (over `o`, under arcs `i` then `u`); a vertex
/// gives the product of its ends in order, outgoing ends inverted.
pub fn wirtinger_presentation(d: &Diagram) -> Result<GroupPresentation> {
    d.ensure_valid()?;
    let mut relators = Vec::new();
    for c in &d.crossings {
        let flip = c.sign == Sign::Negative;
        relators.push(vec![
            Letter::new(c.over, !flip),
            Letter::gen(c.under_in),
            Letter::new(c.over, flip),
            Letter::inv(c.under_out),
        ]);
    }
    for v in &d.vertices {
        relators.push(
            v.ends
                .iter()
                .map(|e| Letter::new(e.arc, e.dir == Direction::Out))
                .collect(),
        );
    }
    GroupPresentation::new(d.arc_count, relators)
}

struct HomSearch<'a> {
    p: &'a GroupPresentation,
    g: &'a GroupTable,
    allowed: Vec<usize>,
    is_allowed: Vec<bool>,
}

impl HomSearch<'_> {
    fn value(&self, l: Letter, a: usize) -> usize {
        if l.inverse {
            self.g.inv(a)
        } else {
            a
        }
    }

    /// Fills in forced generators; `false` on a violated relator.
    fn propagate(&self, asg: &mut [Option<usize>]) -> bool {
        loop {
            let mut changed = false;
            for r in &self.p.relators {
                let mut unknown = r.iter().filter(|l| asg[l.generator].is_none()).map(|l| l.generator);
                let missing = unknown.next();
                let missing_count = match missing {
                    None => 0,
                    Some(x) if unknown.next().is_none() && r.iter().filter(|l| l.generator == x).count() == 1 => 1,
                    Some(_) => 2,
                };
                match missing_count {
                    0 => {
                        let w = r.iter().fold(self.g.identity(), |acc, l| {
                            self.g.mul(acc, self.value(*l, asg[l.generator].unwrap()))
                        });
                        if w != self.g.identity() {
                            return false;
                        }
                    }
                    1 => {
                        // r = A·x^ε·B = 1 gives x^ε = A⁻¹·B⁻¹
                        let x = missing.unwrap();
                        let pos = r.iter().position(|l| l.generator == x).unwrap();
                        let prod = |ls: &[Letter]| {
                            ls.iter().fold(self.g.identity(), |acc, l| {
                                self.g.mul(acc, self.value(*l, asg[l.generator].unwrap()))
                            })
                        };
                        let a = prod(&r[..pos]);
                        let b = prod(&r[pos + 1..]);
                        let xe = self.g.mul(self.g.inv(a), self.g.inv(b));
                        let val = if r[pos].inverse { self.g.inv(xe) } else { xe };
                        if !self.is_allowed[val] {
                            return false;
                        }
                        asg[x] = Some(val);
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn count(&self, asg: &mut [Option<usize>]) -> u64 {
        if !self.propagate(asg) {
            return 0;
        }
        let Some(x) = asg.iter().position(Option::is_none) else {
            return 1;
        };
        let mut total = 0;
        for &a in &self.allowed {
            let mut next = asg.to_vec();
            next[x] = Some(a);
            total += self.count(&mut next);
        }
        total
    }
}

/// Number of homomorphisms from the presented group to `g`.
pub fn group_hom_count(p: &GroupPresentation, g: &GroupTable) -> u64 {
    let all: Vec<usize> = (0..g.order()).collect();
    group_hom_count_within(p, g, &all)
}

/// Homomorphisms sending every generator into `allowed`.
pub fn group_hom_count_within(p: &GroupPresentation, g: &GroupTable, allowed: &[usize]) -> u64 {
    let mut is_allowed = vec![false; g.order()];
    for &a in allowed {
        is_allowed[a] = true;
    }
    let search = HomSearch {
        p,
        g,
        allowed: allowed.to_vec(),
        is_allowed,
    };
    if p.generator_count == 0 {
        return search.count(&mut Vec::new());
    }
    search
        .allowed
        .par_iter()
        .map(|&a| {
            let mut asg = vec![None; p.generator_count];
            asg[0] = Some(a);
            search.count(&mut asg)
        })
        .sum()
}

/// Hom counts into each group of `panel`.
pub fn hom_fingerprint(p: &GroupPresentation, panel: &[GroupTable]) -> Vec<u64> {
    panel.iter().map(|g| group_hom_count(p, g)).collect()
}

/// The comparison panel `Z2, Z3, S3, Z4, D4`.
pub fn standard_panel() -> Vec<GroupTable> {
    vec![
        GroupTable::cyclic(2),
        GroupTable::cyclic(3),
        GroupTable::symmetric(3),
        GroupTable::cyclic(4),
        GroupTable::dihedral(4),
    ]
}

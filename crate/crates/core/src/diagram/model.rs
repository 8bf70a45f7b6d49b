use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::report::AxiomReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn from_value(v: i64) -> Sign {
        if v >= 0 {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Direction {
    In,
    Out,
}

impl Direction {
    pub fn flip(self) -> Direction {
        match self {
            Direction::In => Direction::Out,
            Direction::Out => Direction::In,
        }
    }

    /// `+1` for an incoming end, `-1` for an outgoing one.
    pub fn value(self) -> i64 {
        match self {
            Direction::In => 1,
            Direction::Out => -1,
        }
    }
}

/// The under-strand runs from `under_in` to `under_out` beneath `over`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Crossing {
    pub over: usize,
    pub under_in: usize,
    pub under_out: usize,
    pub sign: Sign,
}

impl Crossing {
    pub fn new(over: usize, under_in: usize, under_out: usize, sign: Sign) -> Self {
        Crossing {
            over,
            under_in,
            under_out,
            sign,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct End {
    pub arc: usize,
    pub dir: Direction,
}

impl End {
    pub fn new(arc: usize, dir: Direction) -> Self {
        End { arc, dir }
    }

    pub fn incoming(arc: usize) -> Self {
        End::new(arc, Direction::In)
    }

    pub fn outgoing(arc: usize) -> Self {
        End::new(arc, Direction::Out)
    }
}

/// Ends in cyclic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Vertex {
    pub ends: Vec<End>,
}

impl Vertex {
    pub fn new(ends: Vec<End>) -> Self {
        Vertex { ends }
    }

    pub fn valence(&self) -> usize {
        self.ends.len()
    }
}

/// Where an arc starts or stops.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Slot {
    Crossing(usize),
    /// Vertex index and end position.
    Vertex(usize, usize),
}

/// Arcs are indexed `0..arc_count`; each runs from its producer (an
/// `under_out` slot or outgoing vertex end) to its consumer (an `under_in`
/// slot or incoming vertex end). Arcs with neither are free loops.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
pub struct Diagram {
    pub arc_count: usize,
    pub crossings: Vec<Crossing>,
    pub vertices: Vec<Vertex>,
}

impl Diagram {
    pub fn new(arc_count: usize, crossings: Vec<Crossing>, vertices: Vec<Vertex>) -> Self {
        Diagram {
            arc_count,
            crossings,
            vertices,
        }
    }

    pub fn unknot() -> Self {
        Diagram::new(1, vec![], vec![])
    }

    /// Producer slot of each arc; the first one found when there are several.
    pub fn producers(&self) -> Vec<Option<Slot>> {
        let mut out = vec![None; self.arc_count];
        for (i, c) in self.crossings.iter().enumerate() {
            if let Some(s) = out.get_mut(c.under_out) {
                s.get_or_insert(Slot::Crossing(i));
            }
        }
        for (v, vx) in self.vertices.iter().enumerate() {
            for (p, e) in vx.ends.iter().enumerate() {
                if e.dir == Direction::Out {
                    if let Some(s) = out.get_mut(e.arc) {
                        s.get_or_insert(Slot::Vertex(v, p));
                    }
                }
            }
        }
        out
    }

    /// Consumer slot of each arc; the first one found when there are several.
    pub fn consumers(&self) -> Vec<Option<Slot>> {
        let mut out = vec![None; self.arc_count];
        for (i, c) in self.crossings.iter().enumerate() {
            if let Some(s) = out.get_mut(c.under_in) {
                s.get_or_insert(Slot::Crossing(i));
            }
        }
        for (v, vx) in self.vertices.iter().enumerate() {
            for (p, e) in vx.ends.iter().enumerate() {
                if e.dir == Direction::In {
                    if let Some(s) = out.get_mut(e.arc) {
                        s.get_or_insert(Slot::Vertex(v, p));
                    }
                }
            }
        }
        out
    }

    pub fn free_loops(&self) -> Vec<usize> {
        let (p, c) = (self.producers(), self.consumers());
        (0..self.arc_count)
            .filter(|&a| p[a].is_none() && c[a].is_none())
            .collect()
    }

    pub fn max_valence(&self) -> usize {
        self.vertices.iter().map(Vertex::valence).max().unwrap_or(0)
    }

    pub fn valences(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.vertices.iter().map(Vertex::valence).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn is_link(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Number of constraints each arc takes part in (crossing slots and vertex ends).
    pub fn incidence(&self) -> Vec<usize> {
        let mut deg = vec![0; self.arc_count];
        for c in &self.crossings {
            for a in [c.over, c.under_in, c.under_out] {
                deg[a] += 1;
            }
        }
        for v in &self.vertices {
            for e in &v.ends {
                deg[e.arc] += 1;
            }
        }
        deg
    }

    /// Errors with the report when the diagram is invalid.
    pub fn ensure_valid(&self) -> Result<()> {
        let r = validate_diagram(self);
        if r.valid {
            Ok(())
        } else {
            Err(Error::InvalidDiagram(r.to_string().trim_end().to_string()))
        }
    }
}

/// Axiom ids: `RANGE` (record index), `VALENCE` (vertex index), `PRODUCER`
/// and `CONSUMER` (arc with several), `DANGLING` (arc with only one of the two).
pub fn validate_diagram(d: &Diagram) -> AxiomReport {
    let n = d.arc_count;
    let mut r = AxiomReport::new();
    let mut produced = vec![0usize; n];
    let mut consumed = vec![0usize; n];
    for (i, c) in d.crossings.iter().enumerate() {
        if [c.over, c.under_in, c.under_out].iter().any(|&a| a >= n) {
            r.record("RANGE", &[i]);
            continue;
        }
        produced[c.under_out] += 1;
        consumed[c.under_in] += 1;
    }
    for (v, vx) in d.vertices.iter().enumerate() {
        r.check(vx.valence() >= 3, "VALENCE", &[v]);
        for e in &vx.ends {
            if e.arc >= n {
                r.record("RANGE", &[d.crossings.len() + v]);
                continue;
            }
            match e.dir {
                Direction::Out => produced[e.arc] += 1,
                Direction::In => consumed[e.arc] += 1,
            }
        }
    }
    for a in 0..n {
        r.check(produced[a] <= 1, "PRODUCER", &[a]);
        r.check(consumed[a] <= 1, "CONSUMER", &[a]);
        r.check(
            produced[a] == consumed[a] || produced[a] > 1 || consumed[a] > 1,
            "DANGLING",
            &[a],
        );
    }
    r
}

/// Canonical text: the `arcs` line, crossings, then vertices, in stored order.
pub fn serialize_diagram(d: &Diagram) -> Result<String> {
    d.ensure_valid()?;
    Ok(d.to_string())
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "arcs {}", self.arc_count)?;
        for c in &self.crossings {
            writeln!(
                f,
                "crossing over={} under_in={} under_out={} sign={}",
                c.over,
                c.under_in,
                c.under_out,
                c.sign.symbol()
            )?;
        }
        for v in &self.vertices {
            let ends: Vec<String> = v
                .ends
                .iter()
                .map(|e| {
                    let dir = match e.dir {
                        Direction::In => "in",
                        Direction::Out => "out",
                    };
                    format!("{}:{dir}", e.arc)
                })
                .collect();
            writeln!(f, "vertex ends={}", ends.join(","))?;
        }
        Ok(())
    }
}

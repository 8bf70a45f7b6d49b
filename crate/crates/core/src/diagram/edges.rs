use std::collections::BTreeSet;

use super::model::{Diagram, Direction, Slot, Vertex};
use crate::error::{Error, Result};

/// Arcs of one graph edge in travel order, chained through undercrossings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub arcs: Vec<usize>,
    /// `(vertex, end position)` where the edge leaves and where it arrives;
    /// `None` for a closed loop.
    pub endpoints: Option<((usize, usize), (usize, usize))>,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.endpoints.is_none()
    }
}

/// Partition of the arcs into edges: first the edges leaving vertices (in
/// vertex and end order), then closed loops by lowest arc index.
pub fn compute_edges(d: &Diagram) -> Result<Vec<Edge>> {
    d.ensure_valid()?;
    let consumers = d.consumers();
    let mut seen = vec![false; d.arc_count];
    let mut out = Vec::new();
    let follow = |start: usize, seen: &mut Vec<bool>| -> (Vec<usize>, Option<(usize, usize)>) {
        let mut arcs = Vec::new();
        let mut a = start;
        loop {
            seen[a] = true;
            arcs.push(a);
            match consumers[a] {
                Some(Slot::Crossing(c)) => {
                    a = d.crossings[c].under_out;
                    if a == start {
                        return (arcs, None);
                    }
                }
                Some(Slot::Vertex(v, p)) => return (arcs, Some((v, p))),
                None => return (arcs, None),
            }
        }
    };
    for (v, vx) in d.vertices.iter().enumerate() {
        for (p, e) in vx.ends.iter().enumerate() {
            if e.dir == Direction::Out {
                let (arcs, end) = follow(e.arc, &mut seen);
                let end = end.expect("valid diagram: edges from vertices end at vertices");
                out.push(Edge {
                    arcs,
                    endpoints: Some(((v, p), end)),
                });
            }
        }
    }
    for a in 0..d.arc_count {
        if !seen[a] {
            let (arcs, _) = follow(a, &mut seen);
            out.push(Edge { arcs, endpoints: None });
        }
    }
    Ok(out)
}

/// Reverses every arc in `arcs`: under-strands swap ends, every touched
/// crossing changes sign once per reversed strand, vertex ends flip direction.
pub fn reverse_arcs(d: &Diagram, arcs: &BTreeSet<usize>) -> Diagram {
    let mut out = d.clone();
    for c in &mut out.crossings {
        if arcs.contains(&c.over) {
            c.sign = c.sign.flip();
        }
        if arcs.contains(&c.under_in) {
            std::mem::swap(&mut c.under_in, &mut c.under_out);
            c.sign = c.sign.flip();
        }
    }
    for v in &mut out.vertices {
        for e in &mut v.ends {
            if arcs.contains(&e.arc) {
                e.dir = e.dir.flip();
            }
        }
    }
    out
}

/// Reverses the orientation of one edge.
pub fn reverse_edge(d: &Diagram, edge: &Edge) -> Diagram {
    reverse_arcs(d, &edge.arcs.iter().copied().collect())
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, a: usize) -> usize {
        let mut r = a;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut a = a;
        while self.0[a] != r {
            let next = self.0[a];
            self.0[a] = r;
            a = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.0[hi] = lo;
        }
    }
}

/// Deletes the edges with the given indices (into [`compute_edges`]) and
/// smooths the vertices, which must each keep exactly two ends. Surviving
/// edges are reoriented cycle by cycle so the result is a consistently
/// oriented link diagram.
pub fn delete_edges(d: &Diagram, edges: &BTreeSet<usize>) -> Result<Diagram> {
    let all = compute_edges(d)?;
    if let Some(&bad) = edges.iter().find(|&&e| e >= all.len()) {
        return Err(Error::NotApplicable(format!(
            "edge {bad} does not exist ({} edges)",
            all.len()
        )));
    }
    let mut dead_arc = vec![false; d.arc_count];
    for &e in edges {
        for &a in &all[e].arcs {
            dead_arc[a] = true;
        }
    }
    // edge index at each vertex end
    let mut end_edge: Vec<Vec<usize>> = d.vertices.iter().map(|v| vec![usize::MAX; v.valence()]).collect();
    for (i, e) in all.iter().enumerate() {
        if let Some(((v0, p0), (v1, p1))) = e.endpoints {
            end_edge[v0][p0] = i;
            end_edge[v1][p1] = i;
        }
    }
    let mut kept_ends: Vec<Vec<usize>> = Vec::new();
    for (v, vx) in d.vertices.iter().enumerate() {
        let kept: Vec<usize> = (0..vx.valence())
            .filter(|&p| !edges.contains(&end_edge[v][p]))
            .collect();
        if kept.len() != 2 {
            return Err(Error::NotApplicable(format!(
                "vertex {v} keeps {} ends after deletion, needs 2",
                kept.len()
            )));
        }
        kept_ends.push(kept);
    }

    // orient each cycle of surviving vertex-joined edges along its first edge
    let mut reversed = vec![false; all.len()];
    let mut visited = vec![false; all.len()];
    for start in 0..all.len() {
        if visited[start] || edges.contains(&start) || all[start].is_loop() {
            continue;
        }
        visited[start] = true;
        let mut cur = start;
        loop {
            let ((sv, sp), (ev, ep)) = all[cur].endpoints.unwrap();
            let (v, p) = if reversed[cur] { (sv, sp) } else { (ev, ep) };
            let other = kept_ends[v].iter().copied().find(|&q| q != p).unwrap();
            let next = end_edge[v][other];
            if visited[next] {
                break;
            }
            visited[next] = true;
            let ((nsv, nsp), _) = all[next].endpoints.unwrap();
            reversed[next] = !(nsv == v && nsp == other);
            cur = next;
        }
    }
    let flip: BTreeSet<usize> = (0..all.len())
        .filter(|&i| reversed[i])
        .flat_map(|i| all[i].arcs.iter().copied())
        .collect();
    let d = reverse_arcs(d, &flip);

    let mut uf = UnionFind((0..d.arc_count).collect());
    let mut crossings = Vec::new();
    for c in &d.crossings {
        if dead_arc[c.under_in] {
            continue;
        }
        if dead_arc[c.over] {
            uf.union(c.under_in, c.under_out);
        } else {
            crossings.push(*c);
        }
    }
    for (v, kept) in kept_ends.iter().enumerate() {
        let (a, b) = (d.vertices[v].ends[kept[0]], d.vertices[v].ends[kept[1]]);
        debug_assert_ne!(a.dir, b.dir);
        uf.union(a.arc, b.arc);
    }
    let mut index = vec![usize::MAX; d.arc_count];
    let mut count = 0;
    for a in 0..d.arc_count {
        if dead_arc[a] {
            continue;
        }
        let r = uf.find(a);
        if index[r] == usize::MAX {
            index[r] = count;
            count += 1;
        }
        index[a] = index[r];
    }
    for c in &mut crossings {
        c.over = index[c.over];
        c.under_in = index[c.under_in];
        c.under_out = index[c.under_out];
    }
    let out = Diagram::new(count, crossings, Vec::<Vertex>::new());
    out.ensure_valid()?;
    Ok(out)
}

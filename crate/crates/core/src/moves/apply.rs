use std::fmt;

use crate::diagram::{Crossing, Diagram, Direction, End, Sign, Slot};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoveKind {
    /// Kink on the site arc; the over-strand is the incoming part or the outgoing part.
    R1Insert {
        over_incoming: bool,
    },
    /// The site arc and `partner` cross twice; `site_over` puts the site on top.
    R2Insert {
        partner: usize,
        site_over: bool,
    },
    /// Twists the vertex ends at positions `end` and `end + 1`; the first passes under.
    Tr1Insert {
        end: usize,
    },
    /// Slides a strand across the vertex past end `end`: forward goes from one
    /// crossing (with the edge at `end`) to crossings with all other edges.
    Tr2Slide {
        end: usize,
        forward: bool,
    },
    /// Contracts the single-arc edge at the site and re-expands it transversally.
    SrForward,
    SrBackward,
    VertexRotate {
        forward: bool,
    },
}

/// A move at a site (an arc for R1, R2 and SR, a vertex otherwise). `mirror`
/// selects the primed variant: flipped signs for R1 and R2, the second end
/// passing under for TR1, and a strand passing under the vertex for TR2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MoveSpec {
    pub kind: MoveKind,
    pub site: usize,
    pub mirror: bool,
}

impl MoveSpec {
    pub fn new(kind: MoveKind, site: usize, mirror: bool) -> Self {
        MoveSpec { kind, site, mirror }
    }

    pub fn name(&self) -> &'static str {
        match self.kind {
            MoveKind::R1Insert { .. } => "r1_insert",
            MoveKind::R2Insert { .. } => "r2_insert",
            MoveKind::Tr1Insert { .. } => "tr1_insert",
            MoveKind::Tr2Slide { .. } => "tr2_slide",
            MoveKind::SrForward => "sr_forward",
            MoveKind::SrBackward => "sr_backward",
            MoveKind::VertexRotate { .. } => "vertex_rotate",
        }
    }
}

impl fmt::Display for MoveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.name(), self.site)
    }
}

/// The rewritten diagram and, for reversible moves, the move undoing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveOutcome {
    pub diagram: Diagram,
    pub inverse: Option<MoveSpec>,
}

fn inapplicable(m: &MoveSpec, why: impl fmt::Display) -> Error {
    Error::NotApplicable(format!("{m}: {why}"))
}

pub fn apply_move(d: &Diagram, m: &MoveSpec) -> Result<MoveOutcome> {
    d.ensure_valid()?;
    let mut out = d.clone();
    let inverse = match m.kind {
        MoveKind::R1Insert { over_incoming } => {
            check_arc(d, m)?;
            let sign = if m.mirror { Sign::Negative } else { Sign::Positive };
            r1(&mut out, m.site, over_incoming, sign);
            None
        }
        MoveKind::R2Insert { partner, site_over } => {
            check_arc(d, m)?;
            if partner >= d.arc_count {
                return Err(inapplicable(m, "partner arc out of range"));
            }
            let (under, over) = if site_over {
                (partner, m.site)
            } else {
                (m.site, partner)
            };
            let sign = if m.mirror { Sign::Negative } else { Sign::Positive };
            r2(&mut out, under, over, sign);
            None
        }
        MoveKind::Tr1Insert { end } => {
            tr1(&mut out, m, end)?;
            None
        }
        MoveKind::Tr2Slide { end, forward } => {
            match (forward, m.mirror) {
                (true, false) => tr2_over_forward(&mut out, m, end)?,
                (false, false) => tr2_over_backward(&mut out, m, end)?,
                (true, true) => tr2_under_forward(&mut out, m, end)?,
                (false, true) => tr2_under_backward(&mut out, m, end)?,
            }
            Some(MoveSpec::new(
                MoveKind::Tr2Slide { end, forward: !forward },
                m.site,
                m.mirror,
            ))
        }
        MoveKind::SrForward | MoveKind::SrBackward => {
            let forward = m.kind == MoveKind::SrForward;
            sr(&mut out, m, forward)?;
            let back = if forward {
                MoveKind::SrBackward
            } else {
                MoveKind::SrForward
            };
            Some(MoveSpec::new(back, m.site, m.mirror))
        }
        MoveKind::VertexRotate { forward } => {
            let v = out
                .vertices
                .get_mut(m.site)
                .ok_or_else(|| inapplicable(m, "no such vertex"))?;
            if forward {
                v.ends.rotate_left(1);
            } else {
                v.ends.rotate_right(1);
            }
            Some(MoveSpec::new(
                MoveKind::VertexRotate { forward: !forward },
                m.site,
                m.mirror,
            ))
        }
    };
    debug_assert!(crate::diagram::validate_diagram(&out).valid, "{m} broke {d:?}");
    Ok(MoveOutcome { diagram: out, inverse })
}

fn check_arc(d: &Diagram, m: &MoveSpec) -> Result<()> {
    if m.site >= d.arc_count {
        return Err(inapplicable(m, "no such arc"));
    }
    Ok(())
}

fn new_arc(d: &mut Diagram) -> usize {
    d.arc_count += 1;
    d.arc_count - 1
}

fn set_slot_consumer(d: &mut Diagram, slot: Slot, arc: usize) {
    match slot {
        Slot::Crossing(c) => d.crossings[c].under_in = arc,
        Slot::Vertex(v, p) => d.vertices[v].ends[p].arc = arc,
    }
}

/// Splits `a` at its head: a fresh arc takes over `a`'s consumer slot.
/// Returns `None` for a free loop, which has no head.
fn split_head(d: &mut Diagram, a: usize) -> Option<usize> {
    let slot = d.consumers()[a]?;
    let b = new_arc(d);
    set_slot_consumer(d, slot, b);
    Some(b)
}

fn is_over_arc(d: &Diagram, a: usize) -> bool {
    d.crossings.iter().any(|c| c.over == a)
}

/// Replaces every reference to `a` by `by`, then removes `a` by moving the last arc into its slot.
fn merge_into(d: &mut Diagram, a: usize, by: usize) -> usize {
    let rename = |x: &mut usize, from: usize, to: usize| {
        if *x == from {
            *x = to;
        }
    };
    for c in &mut d.crossings {
        rename(&mut c.over, a, by);
        rename(&mut c.under_in, a, by);
        rename(&mut c.under_out, a, by);
    }
    for v in &mut d.vertices {
        for e in &mut v.ends {
            rename(&mut e.arc, a, by);
        }
    }
    let last = d.arc_count - 1;
    if a != last {
        for c in &mut d.crossings {
            rename(&mut c.over, last, a);
            rename(&mut c.under_in, last, a);
            rename(&mut c.under_out, last, a);
        }
        for v in &mut d.vertices {
            for e in &mut v.ends {
                rename(&mut e.arc, last, a);
            }
        }
    }
    d.arc_count -= 1;
    if by == last {
        a
    } else {
        by
    }
}

/// Merges several `(arc, into)` pairs, highest arc first so earlier indices stay put.
fn merge_all(d: &mut Diagram, mut pairs: Vec<(usize, usize)>) {
    pairs.sort_by_key(|p| std::cmp::Reverse(p.0));
    for i in 0..pairs.len() {
        let (a, by) = pairs[i];
        let last = d.arc_count - 1;
        let merged = merge_into(d, a, by);
        for p in pairs.iter_mut().skip(i + 1) {
            if p.1 == a {
                p.1 = merged;
            } else if p.1 == last {
                p.1 = a;
            }
        }
    }
}

fn r1(d: &mut Diagram, a: usize, over_incoming: bool, sign: Sign) {
    match split_head(d, a) {
        None => d.crossings.push(Crossing::new(a, a, a, sign)),
        Some(b) => {
            let over = if over_incoming { a } else { b };
            d.crossings.push(Crossing::new(over, a, b, sign));
        }
    }
}

fn r2(d: &mut Diagram, under: usize, over: usize, sign: Sign) {
    let tail = split_head(d, under);
    let mid = new_arc(d);
    let out = tail.unwrap_or(under);
    d.crossings.push(Crossing::new(over, under, mid, sign));
    d.crossings.push(Crossing::new(over, mid, out, sign.flip()));
}

fn vertex_arcs(d: &Diagram, v: usize) -> Vec<usize> {
    d.vertices[v].ends.iter().map(|e| e.arc).collect()
}

fn vertex_of<'a>(d: &'a Diagram, m: &MoveSpec) -> Result<&'a crate::diagram::Vertex> {
    d.vertices.get(m.site).ok_or_else(|| inapplicable(m, "no such vertex"))
}

/// Splits the arc at vertex end `(v, p)`: the part next to the vertex becomes a
/// fresh arc. Returns `(near, far)`; the under-strand runs far→near for an
/// incoming end and near→far for an outgoing one.
fn split_at_end(d: &mut Diagram, v: usize, p: usize) -> (usize, usize) {
    let far = d.vertices[v].ends[p].arc;
    let near = new_arc(d);
    d.vertices[v].ends[p].arc = near;
    (near, far)
}

fn strand(dir: Direction, near: usize, far: usize) -> (usize, usize) {
    match dir {
        Direction::In => (far, near),
        Direction::Out => (near, far),
    }
}

fn tr1(d: &mut Diagram, m: &MoveSpec, p: usize) -> Result<()> {
    let vx = vertex_of(d, m)?;
    let val = vx.valence();
    if p >= val {
        return Err(inapplicable(m, "no such end"));
    }
    let q = (p + 1) % val;
    let (a, b) = (vx.ends[p], vx.ends[q]);
    if a.arc == b.arc {
        return Err(inapplicable(m, "adjacent ends share an arc"));
    }
    let sab = a.dir.value() * b.dir.value();
    let v = m.site;
    if !m.mirror {
        // a passes under b; new order (b, a')
        let (near, far) = split_at_end(d, v, p);
        let (ui, uo) = strand(a.dir, near, far);
        d.vertices[v].ends[p] = b;
        d.vertices[v].ends[q] = End::new(near, a.dir);
        d.crossings.push(Crossing::new(b.arc, ui, uo, Sign::from_value(sab)));
    } else {
        // b passes under a; new order (b', a)
        let (near, far) = split_at_end(d, v, q);
        let (ui, uo) = strand(b.dir, near, far);
        d.vertices[v].ends[p] = End::new(near, b.dir);
        d.vertices[v].ends[q] = a;
        d.crossings.push(Crossing::new(a.arc, ui, uo, Sign::from_value(-sab)));
    }
    Ok(())
}

/// The crossing on the far side of the arc at end `k`, with the far arc.
fn far_crossing(d: &Diagram, v: usize, k: usize) -> Option<(usize, usize)> {
    let e = d.vertices[v].ends[k];
    match e.dir {
        Direction::In => match d.producers()[e.arc]? {
            Slot::Crossing(c) => Some((c, d.crossings[c].under_in)),
            Slot::Vertex(..) => None,
        },
        Direction::Out => match d.consumers()[e.arc]? {
            Slot::Crossing(c) => Some((c, d.crossings[c].under_out)),
            Slot::Vertex(..) => None,
        },
    }
}

fn end_count(d: &Diagram, v: usize, arc: usize) -> usize {
    d.vertices[v].ends.iter().filter(|e| e.arc == arc).count()
}

fn tr2_over_forward(d: &mut Diagram, m: &MoveSpec, k: usize) -> Result<()> {
    let vx = vertex_of(d, m)?;
    if k >= vx.valence() {
        return Err(inapplicable(m, "no such end"));
    }
    let v = m.site;
    let ends = vx.ends.clone();
    let arcs = vertex_arcs(d, v);
    let (c, far) = far_crossing(d, v, k).ok_or_else(|| inapplicable(m, "no crossing next to the end"))?;
    let near = ends[k].arc;
    let s = d.crossings[c].over;
    if arcs.contains(&s) || arcs.contains(&far) || s == far {
        return Err(inapplicable(m, "strand or far arc touches the vertex"));
    }
    if is_over_arc(d, near) {
        return Err(inapplicable(m, "near arc is an over-arc"));
    }
    let sign_old = d.crossings[c].sign.value();
    let sk = ends[k].dir.value();
    d.crossings.remove(c);
    for (i, e) in ends.iter().enumerate() {
        if i == k {
            continue;
        }
        let (n, f) = split_at_end(d, v, i);
        let (ui, uo) = strand(e.dir, n, f);
        let sign = Sign::from_value(-sign_old * sk * e.dir.value());
        d.crossings.push(Crossing::new(s, ui, uo, sign));
    }
    merge_into(d, near, far);
    Ok(())
}

fn tr2_over_backward(d: &mut Diagram, m: &MoveSpec, k: usize) -> Result<()> {
    let vx = vertex_of(d, m)?;
    if k >= vx.valence() {
        return Err(inapplicable(m, "no such end"));
    }
    let v = m.site;
    let ends = vx.ends.clone();
    let arcs = vertex_arcs(d, v);
    let mut strand_arc = None;
    let mut effect = None;
    let mut removals = Vec::new();
    let mut merges = Vec::new();
    for (i, e) in ends.iter().enumerate() {
        if i == k {
            continue;
        }
        let (c, far) = far_crossing(d, v, i).ok_or_else(|| inapplicable(m, "missing crossing"))?;
        let cr = d.crossings[c];
        if *strand_arc.get_or_insert(cr.over) != cr.over {
            return Err(inapplicable(m, "crossings use different strands"));
        }
        let eff = cr.sign.value() * e.dir.value();
        if *effect.get_or_insert(eff) != eff {
            return Err(inapplicable(m, "crossing signs disagree"));
        }
        if arcs.contains(&far) || end_count(d, v, e.arc) != 1 || is_over_arc(d, e.arc) || removals.contains(&c) {
            return Err(inapplicable(m, "near arcs are not isolated"));
        }
        removals.push(c);
        merges.push((e.arc, far));
    }
    let (s, eff) = (strand_arc.unwrap(), effect.unwrap());
    if arcs.contains(&s) || merges.iter().any(|&(_, f)| f == s) {
        return Err(inapplicable(m, "strand touches the vertex"));
    }
    removals.sort_unstable_by(|a, b| b.cmp(a));
    for c in removals {
        d.crossings.remove(c);
    }
    let ek = ends[k];
    let (n, f) = split_at_end(d, v, k);
    let (ui, uo) = strand(ek.dir, n, f);
    d.crossings
        .push(Crossing::new(s, ui, uo, Sign::from_value(-eff * ek.dir.value())));
    merge_all(d, merges);
    Ok(())
}

/// Order in which the strand meets the other ends when passing under the vertex.
fn under_order(val: usize, k: usize, s_ref: i64) -> Vec<usize> {
    (1..val)
        .map(|j| if s_ref > 0 { (k + j) % val } else { (k + val - j) % val })
        .collect()
}

fn tr2_under_forward(d: &mut Diagram, m: &MoveSpec, k: usize) -> Result<()> {
    let vx = vertex_of(d, m)?;
    let val = vx.valence();
    if k >= val {
        return Err(inapplicable(m, "no such end"));
    }
    let v = m.site;
    let ends = vx.ends.clone();
    let arcs = vertex_arcs(d, v);
    let c = d
        .crossings
        .iter()
        .position(|c| c.over == ends[k].arc && !arcs.contains(&c.under_in) && !arcs.contains(&c.under_out))
        .ok_or_else(|| inapplicable(m, "no strand under the edge"))?;
    let old = d.crossings.remove(c);
    let s_ref = -old.sign.value() * ends[k].dir.value();
    let order = under_order(val, k, s_ref);
    let mut prev = old.under_in;
    for (j, &i) in order.iter().enumerate() {
        let next = if j + 1 == order.len() {
            old.under_out
        } else {
            new_arc(d)
        };
        let sign = Sign::from_value(s_ref * ends[i].dir.value());
        d.crossings.push(Crossing::new(ends[i].arc, prev, next, sign));
        prev = next;
    }
    Ok(())
}

fn tr2_under_backward(d: &mut Diagram, m: &MoveSpec, k: usize) -> Result<()> {
    let vx = vertex_of(d, m)?;
    let val = vx.valence();
    if k >= val {
        return Err(inapplicable(m, "no such end"));
    }
    let v = m.site;
    let ends = vx.ends.clone();
    let arcs = vertex_arcs(d, v);
    let consumers = d.consumers();
    for s_ref in [1i64, -1] {
        let order = under_order(val, k, s_ref);
        let want = |j: usize| (ends[order[j]].arc, Sign::from_value(s_ref * ends[order[j]].dir.value()));
        'start: for first in 0..d.crossings.len() {
            let mut chain = vec![first];
            for j in 0..order.len() {
                let c = d.crossings[chain[j]];
                if (c.over, c.sign) != want(j) {
                    continue 'start;
                }
                if j + 1 < order.len() {
                    let mid = c.under_out;
                    if arcs.contains(&mid) || is_over_arc(d, mid) {
                        continue 'start;
                    }
                    match consumers[mid] {
                        Some(Slot::Crossing(n)) if !chain.contains(&n) => chain.push(n),
                        _ => continue 'start,
                    }
                }
            }
            let (ui, uo) = (
                d.crossings[chain[0]].under_in,
                d.crossings[*chain.last().unwrap()].under_out,
            );
            if arcs.contains(&ui) || arcs.contains(&uo) {
                continue;
            }
            let mids: Vec<usize> = chain[..chain.len() - 1]
                .iter()
                .map(|&c| d.crossings[c].under_out)
                .collect();
            let sign = Sign::from_value(-s_ref * ends[k].dir.value());
            let mut sorted = chain.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            for c in sorted {
                d.crossings.remove(c);
            }
            d.crossings.push(Crossing::new(ends[k].arc, ui, uo, sign));
            // intermediate arcs are referenced only by the removed crossings
            merge_all(d, mids.into_iter().map(|a| (a, ui)).collect());
            return Ok(());
        }
    }
    Err(inapplicable(m, "no strand passing under the other edges"))
}

fn sr(d: &mut Diagram, m: &MoveSpec, forward: bool) -> Result<()> {
    check_arc(d, m)?;
    let a = m.site;
    let (Some(Slot::Vertex(u, pu)), Some(Slot::Vertex(w, pw))) = (d.producers()[a], d.consumers()[a]) else {
        return Err(inapplicable(m, "arc does not join two vertices"));
    };
    if u == w || d.vertices[u].valence() != 3 || d.vertices[w].valence() != 3 {
        return Err(inapplicable(m, "needs two distinct trivalent vertices"));
    }
    if is_over_arc(d, a) {
        return Err(inapplicable(m, "edge is an over-arc"));
    }
    let eu = &d.vertices[u].ends;
    let ew = &d.vertices[w].ends;
    let (p, q) = (eu[(pu + 1) % 3], eu[(pu + 2) % 3]);
    let (r, s) = (ew[(pw + 1) % 3], ew[(pw + 2) % 3]);
    let (nu, nw) = if forward { ([q, r], [s, p]) } else { ([s, p], [q, r]) };
    d.vertices[u].ends[(pu + 1) % 3] = nu[0];
    d.vertices[u].ends[(pu + 2) % 3] = nu[1];
    d.vertices[w].ends[(pw + 1) % 3] = nw[0];
    d.vertices[w].ends[(pw + 2) % 3] = nw[1];
    Ok(())
}

/// Splits `a` with a pair of trivalent-or-higher vertices joined by
/// `valence - 1` parallel single-arc edges.
pub fn insert_bubble(d: &Diagram, a: usize, valence: usize) -> Result<Diagram> {
    if valence < 3 || a >= d.arc_count {
        return Err(Error::NotApplicable(format!("bubble of valence {valence} on arc {a}")));
    }
    let mut out = d.clone();
    let tail = split_head(&mut out, a);
    let edges: Vec<usize> = (0..valence - 1).map(|_| new_arc(&mut out)).collect();
    let last = tail.unwrap_or(a);
    let mut first = vec![End::incoming(a)];
    first.extend(edges.iter().map(|&e| End::outgoing(e)));
    let mut second: Vec<End> = edges.iter().rev().map(|&e| End::incoming(e)).collect();
    second.push(End::outgoing(last));
    out.vertices.push(crate::diagram::Vertex::new(first));
    out.vertices.push(crate::diagram::Vertex::new(second));
    Ok(out)
}

/// Adds a crossing with `over` on top, cutting `under` at its head.
pub fn insert_crossing(d: &Diagram, under: usize, over: usize, sign: Sign) -> Result<Diagram> {
    if under >= d.arc_count || over >= d.arc_count {
        return Err(Error::NotApplicable("crossing arcs out of range".into()));
    }
    let mut out = d.clone();
    match split_head(&mut out, under) {
        None => out.crossings.push(Crossing::new(over, under, under, sign)),
        Some(b) => out.crossings.push(Crossing::new(over, under, b, sign)),
    }
    Ok(out)
}

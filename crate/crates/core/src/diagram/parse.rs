use super::model::{Crossing, Diagram, Direction, End, Sign, Vertex};
use crate::error::{Error, Result};

/// Whitespace-separated token with its 1-based column.
struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push(Token {
                    text: &line[s..i],
                    column: line[..s].chars().count() + 1,
                });
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push(Token {
            text: &line[s..],
            column: line[..s].chars().count() + 1,
        });
    }
    out
}

/// Parses the diagram text format; errors carry 1-based line and column.
pub fn parse_diagram(text: &str) -> Result<Diagram> {
    let mut arc_count: Option<usize> = None;
    let mut d = Diagram::default();
    let mut loops = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let toks = tokens(raw);
        let head = &toks[0];
        let Some(n) = arc_count else {
            if head.text != "arcs" {
                return Err(Error::parse(line, head.column, "expected `arcs <N>` first"));
            }
            if toks.len() != 2 {
                return Err(Error::parse(line, head.column, "`arcs` takes one count"));
            }
            let n = toks[1]
                .text
                .parse::<usize>()
                .map_err(|_| Error::parse(line, toks[1].column, "arc count must be a non-negative integer"))?;
            arc_count = Some(n);
            d.arc_count = n;
            continue;
        };
        let arc = |t: &Token, s: &str| -> Result<usize> {
            let a = s
                .parse::<usize>()
                .map_err(|_| Error::parse(line, t.column, format!("bad arc index `{s}`")))?;
            if a >= n {
                return Err(Error::parse(line, t.column, format!("arc {a} out of range 0..{n}")));
            }
            Ok(a)
        };
        match head.text {
            "arcs" => return Err(Error::parse(line, head.column, "duplicate `arcs` record")),
            "crossing" => {
                let mut slots: [Option<usize>; 3] = [None; 3];
                let mut sign = None;
                for t in &toks[1..] {
                    let (key, value) = t
                        .text
                        .split_once('=')
                        .ok_or_else(|| Error::parse(line, t.column, "expected key=value"))?;
                    let slot = match key {
                        "over" => 0,
                        "under_in" => 1,
                        "under_out" => 2,
                        "sign" => {
                            if sign.is_some() {
                                return Err(Error::parse(line, t.column, "duplicate sign"));
                            }
                            sign = Some(match value {
                                "+" => Sign::Positive,
                                "-" => Sign::Negative,
                                _ => return Err(Error::parse(line, t.column, format!("malformed sign `{value}`"))),
                            });
                            continue;
                        }
                        _ => return Err(Error::parse(line, t.column, format!("unknown crossing field `{key}`"))),
                    };
                    if slots[slot].is_some() {
                        return Err(Error::parse(line, t.column, format!("duplicate `{key}`")));
                    }
                    slots[slot] = Some(arc(t, value)?);
                }
                let missing = ["over", "under_in", "under_out"]
                    .iter()
                    .zip(slots.iter())
                    .find(|(_, s)| s.is_none())
                    .map(|(k, _)| *k)
                    .or(if sign.is_none() { Some("sign") } else { None });
                if let Some(k) = missing {
                    return Err(Error::parse(line, head.column, format!("crossing lacks `{k}`")));
                }
                d.crossings.push(Crossing::new(
                    slots[0].unwrap(),
                    slots[1].unwrap(),
                    slots[2].unwrap(),
                    sign.unwrap(),
                ));
            }
            "vertex" => {
                if toks.len() != 2 {
                    return Err(Error::parse(line, head.column, "expected `vertex ends=...`"));
                }
                let t = &toks[1];
                let list = t
                    .text
                    .strip_prefix("ends=")
                    .ok_or_else(|| Error::parse(line, t.column, "expected `ends=`"))?;
                let mut ends = Vec::new();
                let mut offset = t.column + "ends=".len();
                for item in list.split(',') {
                    let at = Token {
                        text: item,
                        column: offset,
                    };
                    let (a, dir) = item
                        .split_once(':')
                        .ok_or_else(|| Error::parse(line, offset, format!("expected <arc>:<in|out>, got `{item}`")))?;
                    let dir = match dir {
                        "in" => Direction::In,
                        "out" => Direction::Out,
                        _ => {
                            return Err(Error::parse(
                                line,
                                offset + a.len() + 1,
                                format!("malformed direction `{dir}`"),
                            ))
                        }
                    };
                    ends.push(End::new(arc(&at, a)?, dir));
                    offset += item.chars().count() + 1;
                }
                d.vertices.push(Vertex::new(ends));
            }
            "loop" => {
                if toks.len() != 2 {
                    return Err(Error::parse(line, head.column, "expected `loop <arc>`"));
                }
                loops.push((line, toks[1].column, arc(&toks[1], toks[1].text)?));
            }
            other => {
                return Err(Error::parse(line, head.column, format!("unknown record `{other}`")));
            }
        }
    }
    if arc_count.is_none() {
        return Err(Error::parse(1, 1, "missing `arcs <N>` record"));
    }
    let (producers, consumers) = (d.producers(), d.consumers());
    for (line, column, a) in loops {
        if producers[a].is_some() || consumers[a].is_some() {
            return Err(Error::parse(line, column, format!("arc {a} is not a free loop")));
        }
    }
    Ok(d)
}

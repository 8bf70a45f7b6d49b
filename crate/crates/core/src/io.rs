//! Text formats for tables, groups, systems, axets and presentations.
//!
//! All formats are line based, ignore blank lines and lines starting with
//! `#`, and name elements by 0-based index.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::algebra::{GroupTable, OperationTable};
use crate::error::{Error, Result};
use crate::family::{AxetData, Gamma, SystemData};
use crate::invariants::{GroupPresentation, Letter};

#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    col: usize,
    text: &'a str,
}

#[derive(Debug, Clone)]
struct Line<'a> {
    no: usize,
    tokens: Vec<Token<'a>>,
}

impl<'a> Line<'a> {
    fn err(&self, i: usize, msg: impl Into<String>) -> Error {
        let col = self.tokens.get(i).map(|t| t.col).unwrap_or(1);
        Error::parse(self.no, col, msg)
    }

    fn head(&self) -> &'a str {
        self.tokens[0].text
    }

    fn number(&self, i: usize, bound: usize) -> Result<usize> {
        let t = self.tokens.get(i).ok_or_else(|| self.err(i, "missing number"))?;
        parse_index(t.text, bound).map_err(|m| Error::parse(self.no, t.col, m))
    }

    fn numbers(&self, from: usize, count: usize, bound: usize) -> Result<Vec<usize>> {
        if self.tokens.len() != from + count {
            return Err(self.err(
                from.min(self.tokens.len().saturating_sub(1)),
                format!(
                    "expected {count} entries, found {}",
                    self.tokens.len().saturating_sub(from)
                ),
            ));
        }
        (from..from + count).map(|i| self.number(i, bound)).collect()
    }

    /// Value of a `key=value` token at position `i`.
    fn keyed(&self, i: usize, key: &str) -> Result<(&'a str, usize)> {
        let t = self
            .tokens
            .get(i)
            .ok_or_else(|| self.err(i, format!("missing `{key}=`")))?;
        match t.text.split_once('=') {
            Some((k, v)) if k == key => Ok((v, t.col + key.len() + 1)),
            _ => Err(Error::parse(self.no, t.col, format!("expected `{key}=...`"))),
        }
    }
}

fn parse_index(s: &str, bound: usize) -> std::result::Result<usize, String> {
    let v: usize = s.parse().map_err(|_| format!("`{s}` is not a non-negative integer"))?;
    if v >= bound {
        return Err(format!("{v} is out of range (must be below {bound})"));
    }
    Ok(v)
}

struct Reader<'a> {
    lines: Vec<Line<'a>>,
    pos: usize,
    end_line: usize,
}

impl<'a> Reader<'a> {
    fn new(text: &'a str) -> Self {
        let mut lines = Vec::new();
        let mut end_line = 1;
        for (i, raw) in text.lines().enumerate() {
            end_line = i + 2;
            let trimmed = raw.trim_start();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let mut tokens = Vec::new();
            let mut start = None;
            for (j, c) in raw.char_indices().chain(std::iter::once((raw.len(), ' '))) {
                match (c.is_whitespace(), start) {
                    (false, None) => start = Some(j),
                    (true, Some(s)) => {
                        tokens.push(Token {
                            col: raw[..s].chars().count() + 1,
                            text: &raw[s..j],
                        });
                        start = None;
                    }
                    _ => {}
                }
            }
            lines.push(Line { no: i + 1, tokens });
        }
        Reader {
            lines,
            pos: 0,
            end_line,
        }
    }

    fn peek(&self) -> Option<&Line<'a>> {
        self.lines.get(self.pos)
    }

    fn next(&mut self, what: &str) -> Result<Line<'a>> {
        let l = self
            .lines
            .get(self.pos)
            .cloned()
            .ok_or_else(|| Error::parse(self.end_line, 1, format!("unexpected end of input, expected {what}")))?;
        self.pos += 1;
        Ok(l)
    }

    fn keyword(&mut self, kw: &str) -> Result<Line<'a>> {
        let l = self.next(&format!("`{kw}`"))?;
        if l.head() != kw {
            return Err(l.err(0, format!("expected `{kw}`, found `{}`", l.head())));
        }
        Ok(l)
    }

    fn matrix(&mut self, rows: usize, cols: usize, bound: usize) -> Result<Vec<Vec<usize>>> {
        (0..rows)
            .map(|_| self.next("a table row")?.numbers(0, cols, bound))
            .collect()
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            Some(l) => Err(l.err(0, format!("unexpected `{}`", l.head()))),
            None => Ok(()),
        }
    }
}

fn table_from(rows: Vec<Vec<usize>>, line: &Line) -> Result<OperationTable> {
    OperationTable::from_rows(rows).map_err(|e| line.err(0, e.to_string()))
}

fn write_rows(out: &mut String, rows: impl Iterator<Item = impl AsRef<[usize]>>) {
    for r in rows {
        let s: Vec<String> = r.as_ref().iter().map(usize::to_string).collect();
        out.push_str(&s.join(" "));
        out.push('\n');
    }
}

fn join(v: &[usize], sep: &str) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(sep)
}

fn read_table(r: &mut Reader) -> Result<(OperationTable, Option<usize>, usize)> {
    let head = r.keyword("magma")?;
    let n = head.number(1, usize::MAX)?;
    if n == 0 || head.tokens.len() != 2 {
        return Err(head.err(1, "expected `magma <size>` with a positive size"));
    }
    let identity = match r.peek() {
        Some(l) if l.head() == "identity" => {
            let l = r.next("identity")?;
            if l.tokens.len() != 2 {
                return Err(l.err(0, "expected `identity <k>`"));
            }
            Some(l.number(1, n)?)
        }
        _ => None,
    };
    let rows = r.matrix(n, n, n)?;
    let table = table_from(rows, &head)?;
    Ok((table, identity, head.no))
}

/// `magma <n>` followed by `n` rows; row `i` lists `i ∗ j`.
pub fn parse_table(text: &str) -> Result<OperationTable> {
    let mut r = Reader::new(text);
    let (t, identity, head) = read_table(&mut r)?;
    if identity.is_some() {
        return Err(Error::parse(
            head + 1,
            1,
            "identity line in a plain table; parse it as a group",
        ));
    }
    r.finish()?;
    Ok(t)
}

pub fn serialize_table(t: &OperationTable) -> String {
    let mut out = format!("magma {}\n", t.size());
    write_rows(&mut out, t.rows());
    out
}

/// A table file with its optional `identity <k>` line, unchecked.
pub fn parse_magma(text: &str) -> Result<(OperationTable, Option<usize>)> {
    let mut r = Reader::new(text);
    let (t, identity, _) = read_table(&mut r)?;
    r.finish()?;
    Ok((t, identity))
}

/// A table file with an `identity <k>` line after the header.
pub fn parse_group(text: &str) -> Result<GroupTable> {
    let mut r = Reader::new(text);
    let (t, identity, head) = read_table(&mut r)?;
    let identity = identity.ok_or_else(|| Error::parse(head + 1, 1, "missing `identity <k>` line"))?;
    r.finish()?;
    GroupTable::new(t, identity)
}

pub fn serialize_group(g: &GroupTable) -> String {
    let mut out = format!("magma {}\nidentity {}\n", g.order(), g.identity());
    write_rows(&mut out, g.table().rows());
    out
}

/// Sectioned system file; see [`serialize_system`] for the layout.
pub fn parse_system(text: &str) -> Result<SystemData> {
    let mut r = Reader::new(text);
    let head = r.keyword("system")?;
    if head.tokens.len() != 1 {
        return Err(head.err(1, "unexpected text after `system`"));
    }
    let m = r.keyword("X")?.number(1, usize::MAX)?;
    let n = r.keyword("G")?.number(1, usize::MAX)?;
    if m == 0 || n == 0 {
        return Err(Error::parse(head.no, 1, "carriers must be non-empty"));
    }
    let mut group: Option<(Line, usize, Vec<usize>, Option<OperationTable>)> = None;
    let mut otimes = None;
    let mut oplus = None;
    let mut f = None;
    let mut stars: BTreeMap<usize, OperationTable> = BTreeMap::new();
    let mut rho: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut gammas: Vec<(Line, Gamma)> = Vec::new();
    while let Some(l) = r.peek().cloned() {
        r.pos += 1;
        let dup = |l: &Line| l.err(0, format!("duplicate `{}` section", l.head()));
        match l.head() {
            "group" => {
                if group.is_some() {
                    return Err(dup(&l));
                }
                let (v, col) = l.keyed(1, "identity")?;
                let id = parse_index(v, n).map_err(|e| Error::parse(l.no, col, e))?;
                let (v, col) = l.keyed(2, "inverse")?;
                let inv = v
                    .split(',')
                    .map(|s| parse_index(s, n))
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|e| Error::parse(l.no, col, e))?;
                if inv.len() != n || l.tokens.len() != 3 {
                    return Err(l.err(2, format!("inverse must list {n} entries")));
                }
                let rows = match r.peek() {
                    Some(next) if next.head().parse::<usize>().is_ok() => Some(table_from(r.matrix(n, n, n)?, &l)?),
                    _ => None,
                };
                group = Some((l, id, inv, rows));
            }
            "otimes" | "oplus" | "f" => {
                let slot = match l.head() {
                    "otimes" => &mut otimes,
                    "oplus" => &mut oplus,
                    _ => &mut f,
                };
                if slot.is_some() {
                    return Err(dup(&l));
                }
                *slot = Some((r.matrix(n, n, n)?, l));
            }
            "star" => {
                let g = l.number(1, n)?;
                let t = table_from(r.matrix(m, m, m)?, &l)?;
                if stars.insert(g, t).is_some() {
                    return Err(dup(&l));
                }
            }
            "rho" => {
                let x = l.number(1, m)?;
                if l.tokens.get(2).map(|t| t.text) != Some("=") {
                    return Err(l.err(2, "expected `rho <x> = <permutation>`"));
                }
                let p = l.numbers(3, n, n)?;
                if rho.insert(x, p).is_some() {
                    return Err(dup(&l));
                }
            }
            "gamma" => {
                let k = l.number(1, Gamma::MAX_ARITY + 1)?;
                if k < 2 {
                    return Err(l.err(1, "arity must be at least 2"));
                }
                let rows = r.matrix(n.pow(k as u32 - 1), n, n)?;
                let gamma = Gamma::new(k, n, rows.concat()).map_err(|e| l.err(0, e.to_string()))?;
                gammas.push((l, gamma));
            }
            other => return Err(l.err(0, format!("unknown section `{other}`"))),
        }
    }
    let missing = |what: &str| Error::parse(r.end_line, 1, format!("missing `{what}` section"));
    let (otimes_rows, ol) = otimes.ok_or_else(|| missing("otimes"))?;
    let (f_rows, _) = f.ok_or_else(|| missing("f"))?;
    if stars.len() != n {
        let g = (0..n).find(|g| !stars.contains_key(g)).unwrap();
        return Err(missing(&format!("star {g}")));
    }
    let mut sys = SystemData::new(stars.into_values().collect(), f_rows, table_from(otimes_rows, &ol)?)?;
    if let Some((rows, l)) = oplus {
        sys = sys.with_oplus(table_from(rows, &l)?)?;
    }
    if let Some((l, id, inv, rows)) = group {
        let table = match rows.or_else(|| sys.oplus.clone()) {
            Some(t) => t,
            None => return Err(l.err(0, "`group` needs an `oplus` section or its own rows")),
        };
        let g = GroupTable::new(table, id).map_err(|e| l.err(0, e.to_string()))?;
        if g.inverses() != inv.as_slice() {
            return Err(l.err(2, "inverse disagrees with the group table"));
        }
        sys = sys.with_group(g)?;
    }
    if !rho.is_empty() {
        if rho.len() != m {
            let x = (0..m).find(|x| !rho.contains_key(x)).unwrap();
            return Err(missing(&format!("rho {x}")));
        }
        sys = sys.with_rho(rho.into_values().collect())?;
    }
    for (l, g) in gammas {
        sys = sys.with_gamma(g).map_err(|e| l.err(0, e.to_string()))?;
    }
    Ok(sys)
}

/// Layout: `system`, `X <m>`, `G <n>`, optional `group identity=<k>
/// inverse=<i0,i1,..>` (followed by its rows when the group is not `oplus`),
/// `otimes` rows, optional `oplus` rows, `f` rows, one `star <g>` block per
/// `g`, optional `rho <x> = <permutation>` lines and `gamma <k>` blocks of
/// `n^(k-1)` rows.
pub fn serialize_system(sys: &SystemData) -> String {
    let mut out = format!("system\nX {}\nG {}\n", sys.x_size, sys.g_size);
    if let Some(g) = &sys.group {
        let _ = writeln!(
            out,
            "group identity={} inverse={}",
            g.identity(),
            join(g.inverses(), ",")
        );
        if sys.oplus.as_ref() != Some(g.table()) {
            write_rows(&mut out, g.table().rows());
        }
    }
    out.push_str("otimes\n");
    write_rows(&mut out, sys.otimes.rows());
    if let Some(op) = &sys.oplus {
        out.push_str("oplus\n");
        write_rows(&mut out, op.rows());
    }
    out.push_str("f\n");
    write_rows(&mut out, sys.f.iter());
    for (g, s) in sys.stars.iter().enumerate() {
        let _ = writeln!(out, "star {g}");
        write_rows(&mut out, s.rows());
    }
    if let Some(rho) = &sys.rho {
        for (x, p) in rho.iter().enumerate() {
            let _ = writeln!(out, "rho {x} = {}", join(p, " "));
        }
    }
    for (k, gamma) in &sys.gammas {
        let _ = writeln!(out, "gamma {k}");
        write_rows(&mut out, gamma.entries().chunks(sys.g_size));
    }
    out
}

fn read_group_block(r: &mut Reader, key: &str) -> Result<GroupTable> {
    let l = r.keyword(key)?;
    let n = l.number(1, usize::MAX)?;
    let (v, col) = l.keyed(2, "identity")?;
    let id = parse_index(v, n).map_err(|e| Error::parse(l.no, col, e))?;
    let t = table_from(r.matrix(n, n, n)?, &l)?;
    GroupTable::new(t, id).map_err(|e| l.err(0, e.to_string()))
}

/// Layout: `axet`, `X <m>`, `S <n> identity=<k>` and `G <n> identity=<k>`
/// each followed by their rows, `action <g> = <permutation of X>` for every
/// `g`, then `tau` and `m` rows of `|S|` entries (row `x` lists `τ_x(s)`).
pub fn parse_axet(text: &str) -> Result<AxetData> {
    let mut r = Reader::new(text);
    r.keyword("axet")?;
    let m = r.keyword("X")?.number(1, usize::MAX)?;
    let s_group = read_group_block(&mut r, "S")?;
    let g_group = read_group_block(&mut r, "G")?;
    let ng = g_group.order();
    let mut action = Vec::with_capacity(ng);
    for g in 0..ng {
        let l = r.keyword("action")?;
        if l.number(1, ng)? != g || l.tokens.get(2).map(|t| t.text) != Some("=") {
            return Err(l.err(1, format!("expected `action {g} = ...`")));
        }
        action.push(l.numbers(3, m, m)?);
    }
    r.keyword("tau")?;
    let tau = r.matrix(m, s_group.order(), ng)?;
    r.finish()?;
    Ok(AxetData {
        s_group,
        g_group,
        x_size: m,
        action,
        tau,
    })
}

pub fn serialize_axet(a: &AxetData) -> String {
    let mut out = format!("axet\nX {}\n", a.x_size);
    for (key, g) in [("S", &a.s_group), ("G", &a.g_group)] {
        let _ = writeln!(out, "{key} {} identity={}", g.order(), g.identity());
        write_rows(&mut out, g.table().rows());
    }
    for (g, p) in a.action.iter().enumerate() {
        let _ = writeln!(out, "action {g} = {}", join(p, " "));
    }
    out.push_str("tau\n");
    write_rows(&mut out, a.tau.iter());
    out
}

/// `gens <n>` then one `rel` line per relator of signed generator indices.
pub fn parse_presentation(text: &str) -> Result<GroupPresentation> {
    let mut r = Reader::new(text);
    let head = r.keyword("gens")?;
    let n = head.number(1, usize::MAX)?;
    let mut relators = Vec::new();
    while r.peek().is_some() {
        let l = r.keyword("rel")?;
        let word = l.tokens[1..]
            .iter()
            .map(|t| {
                let (inverse, digits) = match t.text.as_bytes().first() {
                    Some(b'+') => (false, &t.text[1..]),
                    Some(b'-') => (true, &t.text[1..]),
                    _ => {
                        return Err(Error::parse(
                            l.no,
                            t.col,
                            "letters need an explicit sign, e.g. `+0` or `-1`",
                        ))
                    }
                };
                let g = parse_index(digits, n).map_err(|e| Error::parse(l.no, t.col, e))?;
                Ok(Letter::new(g, inverse))
            })
            .collect::<Result<Vec<_>>>()?;
        relators.push(word);
    }
    GroupPresentation::new(n, relators)
}

pub fn serialize_presentation(p: &GroupPresentation) -> String {
    let mut out = format!("gens {}\n", p.generator_count);
    for r in &p.relators {
        out.push_str("rel");
        for l in r {
            let _ = write!(out, " {}{}", if l.inverse { '-' } else { '+' }, l.generator);
        }
        out.push('\n');
    }
    out
}

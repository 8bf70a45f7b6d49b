//! Loading inputs from files or from the bundled `fixtures:`, `systems:`,
//! `groups:` and `quandles:` resources.

use std::fs;

use hlink::algebra::{standard_quandle, QuandleKind};
use hlink::diagram::parse_diagram;
use hlink::family::{axet_to_system, AxetData};
use hlink::invariants::{wirtinger_presentation, GroupPresentation};
use hlink::io::{parse_axet, parse_magma, parse_presentation, parse_system};
use hlink::{fixtures, Diagram, Error, GroupTable, OperationTable, Result, SystemData};

fn read(path: &str) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{path}: {e}"))))
}

fn sized(name: &str, prefix: &str) -> Option<usize> {
    name.strip_prefix(prefix)?.parse().ok().filter(|&n| n > 0)
}

pub fn group(spec: &str) -> Result<GroupTable> {
    if let Some(name) = spec.strip_prefix("groups:") {
        let unknown = || Error::UnknownResource(spec.to_string());
        return match name {
            _ if sized(name, "z").is_some() => Ok(GroupTable::cyclic(sized(name, "z").unwrap())),
            _ if sized(name, "s").is_some_and(|n| n <= 5) => Ok(GroupTable::symmetric(sized(name, "s").unwrap())),
            _ if sized(name, "d").is_some_and(|n| n >= 3) => Ok(GroupTable::dihedral(sized(name, "d").unwrap())),
            _ => Err(unknown()),
        };
    }
    hlink::io::parse_group(&read(spec)?)
}

/// A table with the identity named in its file, if any.
pub fn magma(spec: &str) -> Result<(OperationTable, Option<usize>)> {
    if let Some(name) = spec.strip_prefix("quandles:") {
        let kind = if let Some(n) = sized(name, "t") {
            QuandleKind::Trivial(n)
        } else if let Some(n) = sized(name, "r") {
            QuandleKind::Dihedral(n)
        } else {
            return Err(Error::UnknownResource(spec.to_string()));
        };
        return Ok((standard_quandle(&kind)?, None));
    }
    if spec.starts_with("groups:") {
        let g = group(spec)?;
        return Ok((g.table().clone(), Some(g.identity())));
    }
    parse_magma(&read(spec)?)
}

pub fn diagram(spec: &str) -> Result<Diagram> {
    match spec.strip_prefix("fixtures:") {
        Some(name) => fixtures::diagram(name),
        None => parse_diagram(&read(spec)?),
    }
}

pub enum SystemSource {
    System(SystemData),
    Axet(AxetData),
}

/// A system file, an axet file or a bundled system.
pub fn system_source(spec: &str) -> Result<SystemSource> {
    if let Some(name) = spec.strip_prefix("systems:") {
        return fixtures::system(name).map(SystemSource::System);
    }
    let text = read(spec)?;
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap_or("");
    if first == "axet" {
        parse_axet(&text).map(SystemSource::Axet)
    } else {
        parse_system(&text).map(SystemSource::System)
    }
}

pub fn system(spec: &str) -> Result<SystemData> {
    match system_source(spec)? {
        SystemSource::System(s) => Ok(s),
        SystemSource::Axet(a) => axet_to_system(&a).map(|(s, _)| s),
    }
}

/// A presentation file, or the Wirtinger presentation of a bundled diagram.
pub fn presentation(spec: &str) -> Result<GroupPresentation> {
    if spec.starts_with("fixtures:") {
        return wirtinger_presentation(&diagram(spec)?);
    }
    parse_presentation(&read(spec)?)
}

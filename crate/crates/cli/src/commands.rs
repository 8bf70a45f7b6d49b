use std::fmt::Write as _;
use std::fs;

use hlink::algebra::{validate_axioms, Profile};
use hlink::colour::{count_colourings, CountMode};
use hlink::family::{associated_quandle, axet_to_system, search_involutions, validate_family, FamilyKind};
use hlink::invariants::{group_hom_count, kauffman_summary, wirtinger_presentation, KauffmanInvariant};
use hlink::io::{serialize_presentation, serialize_system, serialize_table};
use hlink::moves::{fuzz_invariance, FuzzConfig, FuzzScope, MoveFamily};
use hlink::{fixtures, AxiomReport, Error, Result};
use serde_json::{json, Value};

use crate::resource::{self, SystemSource};
use crate::{Command, FixturesAction, ProfileArg};

pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub ok: bool,
}

impl Outcome {
    fn done(text: String, json: Value) -> Self {
        Outcome { text, json, ok: true }
    }

    fn report(report: AxiomReport) -> Self {
        Outcome {
            text: report.to_string(),
            ok: report.valid,
            json: json!(report),
        }
    }
}

/// Bad option values count as usage errors.
fn usage<T>(what: &str, value: &str, r: Result<T>) -> Result<T> {
    r.map_err(|_| Error::UnknownResource(format!("{what} `{value}`")))
}

fn write_or_print(output: &Option<String>, text: &str) -> Result<Option<String>> {
    match output {
        Some(path) => {
            fs::write(path, text)?;
            Ok(None)
        }
        None => Ok(Some(text.to_string())),
    }
}

pub fn run(command: &Command) -> Result<Outcome> {
    match command {
        Command::CheckTable { file, profile } => {
            let (table, identity) = resource::magma(file)?;
            let profile = match profile {
                ProfileArg::Quandle => Profile::Quandle,
                ProfileArg::Rack => Profile::Rack,
                ProfileArg::Kei => Profile::Kei,
                ProfileArg::Group => {
                    let n = table.size();
                    let two_sided = |e: usize| (0..n).all(|x| table.get(e, x) == x && table.get(x, e) == x);
                    Profile::Group {
                        identity: identity.or_else(|| (0..n).find(|&e| two_sided(e))).unwrap_or(0),
                    }
                }
            };
            Ok(Outcome::report(validate_axioms(&table, profile)))
        }
        Command::CheckSystem { file, kind } => {
            let kind: FamilyKind = usage("kind", kind, kind.parse())?;
            let mut report = AxiomReport::new();
            let sys = match resource::system_source(file)? {
                SystemSource::System(s) => s,
                SystemSource::Axet(a) => {
                    let (s, r) = axet_to_system(&a)?;
                    report.merge_prefixed("axet", r);
                    s
                }
            };
            report.merge(validate_family(&sys, &kind)?);
            Ok(Outcome::report(report))
        }
        Command::Associated { file, output } => {
            let sys = resource::system(file)?;
            let (q, report) = associated_quandle(&sys);
            let table = serialize_table(q.table());
            let mut text = write_or_print(output, &table)?.unwrap_or_default();
            text.push_str(&report.to_string());
            Ok(Outcome {
                text,
                ok: report.valid,
                json: json!({ "quandle": q.listing(), "report": report }),
            })
        }
        Command::Involutions { file } => {
            let (table, _) = resource::magma(file)?;
            let all = search_involutions(&table);
            let mut text = String::new();
            for p in &all {
                let s: Vec<String> = p.iter().map(usize::to_string).collect();
                let _ = writeln!(text, "{}", s.join(" "));
            }
            let _ = writeln!(text, "{} good involutions", all.len());
            Ok(Outcome::done(text, json!({ "involutions": all })))
        }
        Command::Color { diagram, system, mode } => {
            let mode: CountMode = usage("mode", mode, mode.parse())?;
            let d = resource::diagram(diagram)?;
            let sys = resource::system(system)?;
            let n = count_colourings(&d, &sys, mode)?;
            Ok(Outcome::done(format!("{n}\n"), json!({ "count": n })))
        }
        Command::Fuzz {
            system,
            scope,
            trials,
            seed,
            moves,
            unchecked,
            crossings,
        } => {
            let scope: FuzzScope = usage("scope", scope, scope.parse())?;
            let mut config = FuzzConfig::new(scope, *trials, *seed);
            if let Some(ms) = moves {
                config.moves = ms
                    .iter()
                    .map(|m| usage("move", m, m.parse::<MoveFamily>()))
                    .collect::<Result<_>>()?;
            }
            config.unchecked = *unchecked;
            config.crossings_max = *crossings;
            let sys = resource::system(system)?;
            let report = fuzz_invariance(&sys, &config)?;
            Ok(Outcome {
                text: report.to_string(),
                ok: report.mismatches() == 0,
                json: json!(report),
            })
        }
        Command::Wirtinger { diagram, output } => {
            let p = wirtinger_presentation(&resource::diagram(diagram)?)?;
            let text = write_or_print(output, &serialize_presentation(&p))?.unwrap_or_default();
            Ok(Outcome::done(text, json!(p)))
        }
        Command::Homs { presentation, group } => {
            let p = resource::presentation(presentation)?;
            let g = resource::group(group)?;
            let n = group_hom_count(&p, &g);
            Ok(Outcome::done(format!("{n}\n"), json!({ "count": n })))
        }
        Command::Kauffman { diagram, invariant } => {
            let d = resource::diagram(diagram)?;
            let sys;
            let inv = match invariant.as_str() {
                "linking" => KauffmanInvariant::Linking,
                other => match other.strip_prefix("colour:").or_else(|| other.strip_prefix("color:")) {
                    Some(spec) => {
                        sys = resource::system(spec)?;
                        KauffmanInvariant::ColourCount(&sys)
                    }
                    None => return Err(Error::UnknownResource(format!("invariant `{other}`"))),
                },
            };
            let values = kauffman_summary(&d, &inv)?;
            let text: String = values.iter().map(|v| format!("{v}\n")).collect();
            Ok(Outcome::done(text, json!(values)))
        }
        Command::Fixtures { action } => match action {
            FixturesAction::List => {
                let mut text = String::new();
                for n in fixtures::DIAGRAM_NAMES {
                    let _ = writeln!(text, "fixtures:{n}");
                }
                for n in fixtures::SYSTEM_NAMES {
                    let _ = writeln!(text, "systems:{n}");
                }
                let json = json!({ "diagrams": fixtures::DIAGRAM_NAMES, "systems": fixtures::SYSTEM_NAMES });
                Ok(Outcome::done(text, json))
            }
            FixturesAction::Show { name } => {
                let name = name.strip_prefix("fixtures:").unwrap_or(name);
                let text = match name.strip_prefix("systems:") {
                    Some(s) => serialize_system(&fixtures::system(s)?),
                    None => match fixtures::diagram_text(name) {
                        Ok(t) => t.to_string(),
                        Err(e) => fixtures::system(name).map(|s| serialize_system(&s)).map_err(|_| e)?,
                    },
                };
                Ok(Outcome::done(text.clone(), json!({ "name": name, "text": text })))
            }
        },
    }
}

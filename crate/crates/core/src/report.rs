use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

/// Witnesses kept per axiom id.
pub const MAX_WITNESSES: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: String,
    pub witness: Vec<usize>,
}

/// Outcome of an exhaustive axiom check.
///
/// Witnesses are recorded in the order the checker visits them, which is
/// lexicographic in the quantified variables; at most [`MAX_WITNESSES`] are
/// kept per axiom, while `counts` tracks every failure.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
    #[serde(skip)]
    counts: BTreeMap<String, usize>,
}

impl AxiomReport {
    pub fn new() -> Self {
        AxiomReport {
            valid: true,
            violations: Vec::new(),
            counts: BTreeMap::new(),
        }
    }

    pub fn record(&mut self, axiom: &str, witness: &[usize]) {
        self.valid = false;
        let seen = self.counts.entry(axiom.to_string()).or_insert(0);
        *seen += 1;
        if *seen <= MAX_WITNESSES {
            self.violations.push(Violation {
                axiom: axiom.to_string(),
                witness: witness.to_vec(),
            });
        }
    }

    /// Records a failure when `ok` is false; returns `ok`.
    pub fn check(&mut self, ok: bool, axiom: &str, witness: &[usize]) -> bool {
        if !ok {
            self.record(axiom, witness);
        }
        ok
    }

    pub fn merge(&mut self, other: AxiomReport) {
        for v in other.violations {
            self.valid = false;
            self.violations.push(v);
        }
        for (k, n) in other.counts {
            *self.counts.entry(k).or_insert(0) += n;
        }
        self.valid &= other.valid;
    }

    /// Merges with every axiom id prefixed, e.g. `assoc:Q3`.
    pub fn merge_prefixed(&mut self, prefix: &str, other: AxiomReport) {
        for mut v in other.violations {
            v.axiom = format!("{prefix}:{}", v.axiom);
            self.violations.push(v);
        }
        for (k, n) in other.counts {
            *self.counts.entry(format!("{prefix}:{k}")).or_insert(0) += n;
        }
        self.valid &= other.valid;
    }

    pub fn failure_count(&self, axiom: &str) -> usize {
        self.counts.get(axiom).copied().unwrap_or(0)
    }

    pub fn failed_axioms(&self) -> Vec<&str> {
        self.counts.keys().map(String::as_str).collect()
    }

    pub fn has_failure(&self, axiom: &str) -> bool {
        self.failure_count(axiom) > 0
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.valid {
            return writeln!(f, "valid");
        }
        writeln!(f, "invalid")?;
        for v in &self.violations {
            let w: Vec<String> = v.witness.iter().map(|i| i.to_string()).collect();
            writeln!(f, "  {} ({})", v.axiom, w.join(", "))?;
        }
        for (axiom, &n) in &self.counts {
            if n > MAX_WITNESSES {
                writeln!(f, "  {axiom}: {} more not shown", n - MAX_WITNESSES)?;
            }
        }
        Ok(())
    }
}

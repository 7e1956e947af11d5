use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::freelie::BasisRecord;

/// One checked instance of a claim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckItem {
    pub label: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckItem {
    pub fn new(label: impl Into<String>, passed: bool) -> CheckItem {
        CheckItem {
            label: label.into(),
            passed,
            detail: None,
            witness: None,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> CheckItem {
        self.detail = Some(detail.into());
        self
    }

    pub fn with_witness(mut self, witness: impl Into<String>) -> CheckItem {
        self.witness = Some(witness.into());
        self
    }
}

/// Outcome of a verification run. Items keep the order in which the
/// parameters were enumerated, so a report depends only on its inputs
/// (apart from `elapsed_ms`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: String,
    pub parameters: BTreeMap<String, u32>,
    pub items: Vec<CheckItem>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub bases: Vec<BasisRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl VerificationReport {
    pub fn new(claim: impl Into<String>) -> VerificationReport {
        VerificationReport {
            claim: claim.into(),
            parameters: BTreeMap::new(),
            items: Vec::new(),
            notes: Vec::new(),
            bases: Vec::new(),
            elapsed_ms: None,
        }
    }

    pub fn param(mut self, key: &str, value: u32) -> VerificationReport {
        self.parameters.insert(key.to_string(), value);
        self
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn push(&mut self, item: CheckItem) {
        self.items.push(item);
    }

    /// Appends the items of `other`, prefixing their labels.
    pub fn absorb(&mut self, prefix: &str, other: VerificationReport) {
        for mut it in other.items {
            it.label = format!("{prefix}: {}", it.label);
            self.items.push(it);
        }
        self.notes.extend(other.notes);
        self.bases.extend(other.bases);
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|i| !i.passed)
    }

    pub fn summary(&self) -> String {
        let ok = self.items.iter().filter(|i| i.passed).count();
        let params: Vec<String> = self
            .parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        format!(
            "{} [{}]: {}/{} passed{}",
            self.claim,
            params.join(", "),
            ok,
            self.items.len(),
            if self.passed() { "" } else { " -- FAILED" }
        )
    }

    pub fn without_timing(mut self) -> VerificationReport {
        self.elapsed_ms = None;
        self
    }

    /// Runs `f` and stores its wall-clock time in the returned report.
    pub fn timed(f: impl FnOnce() -> VerificationReport) -> VerificationReport {
        let t = Instant::now();
        let mut r = f();
        r.elapsed_ms = Some(t.elapsed().as_millis() as u64);
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_and_json_round_trip() {
        let mut r = VerificationReport::new("demo").param("max_weight", 3);
        r.push(CheckItem::new("(1,0)", true));
        r.push(CheckItem::new("(2,1)", false).with_witness("x0 x1"));
        assert!(!r.passed());
        assert_eq!(r.failures().count(), 1);
        assert_eq!(r.summary(), "demo [max_weight=3]: 1/2 passed -- FAILED");
        let s = serde_json::to_string(&r).unwrap();
        let back: VerificationReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
        assert!(!s.contains("elapsed_ms"));
    }

    #[test]
    fn absorb_prefixes_labels() {
        let mut a = VerificationReport::new("all");
        let mut b = VerificationReport::new("part");
        b.push(CheckItem::new("m=2", true));
        a.absorb("part", b);
        assert_eq!(a.items[0].label, "part: m=2");
    }
}

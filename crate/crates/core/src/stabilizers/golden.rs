//! Golden files: JSON arrays of basis records, written on the first verified
//! run and compared on later runs.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use crate::error::Result;
use crate::freelie::BasisRecord;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GoldenOutcome {
    Recorded,
    Matched,
    /// One line per differing or missing record.
    Mismatch(Vec<String>),
}

/// `<dir>/<claim>-<cap>.json`.
pub fn golden_path(dir: impl AsRef<Path>, claim: &str, cap: u32) -> PathBuf {
    dir.as_ref().join(format!("{claim}-{cap}.json"))
}

pub fn write_records(path: &Path, records: &[BasisRecord]) -> Result<()> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent)?;
        }
    }
    let mut s = serde_json::to_string_pretty(records)?;
    s.push('\n');
    fs::write(path, s)?;
    Ok(())
}

pub fn read_records(path: &Path) -> Result<Vec<BasisRecord>> {
    Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
}

/// Compares `records` against the file at `path`, or writes the file if it
/// does not exist yet.
pub fn check_or_record(path: &Path, records: &[BasisRecord]) -> Result<GoldenOutcome> {
    if !path.exists() {
        write_records(path, records)?;
        return Ok(GoldenOutcome::Recorded);
    }
    let stored = read_records(path)?;
    let key = |r: &BasisRecord| (r.space.clone(), r.m, r.n);
    let old: BTreeMap<_, _> = stored.iter().map(|r| (key(r), r)).collect();
    let new: BTreeMap<_, _> = records.iter().map(|r| (key(r), r)).collect();
    let mut diffs = Vec::new();
    for (k, r) in &new {
        match old.get(k) {
            None => diffs.push(format!("{}[{},{}]: not in golden file", k.0, k.1, k.2)),
            Some(o) if o.dim != r.dim => diffs.push(format!(
                "{}[{},{}]: dim {} (golden {})",
                k.0, k.1, k.2, r.dim, o.dim
            )),
            Some(o) if o.basis != r.basis => {
                diffs.push(format!("{}[{},{}]: basis differs", k.0, k.1, k.2))
            }
            Some(_) => {}
        }
    }
    for k in old.keys().filter(|k| !new.contains_key(*k)) {
        diffs.push(format!("{}[{},{}]: missing from this run", k.0, k.1, k.2));
    }
    Ok(if diffs.is_empty() {
        GoldenOutcome::Matched
    } else {
        GoldenOutcome::Mismatch(diffs)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(m: u32, dim: usize) -> BasisRecord {
        BasisRecord {
            space: "ls".into(),
            m,
            n: 1,
            dim,
            basis: vec!["x0 x1".into(); dim],
        }
    }

    #[test]
    fn record_then_match_then_mismatch() {
        let dir = std::env::temp_dir().join(format!("dsl-golden-{}", std::process::id()));
        let path = golden_path(&dir, "demo", 3);
        let _ = fs::remove_file(&path);
        let recs = vec![rec(3, 1), rec(4, 0)];
        assert_eq!(
            check_or_record(&path, &recs).unwrap(),
            GoldenOutcome::Recorded
        );
        assert_eq!(
            check_or_record(&path, &recs).unwrap(),
            GoldenOutcome::Matched
        );
        let changed = vec![rec(3, 0), rec(5, 1)];
        match check_or_record(&path, &changed).unwrap() {
            GoldenOutcome::Mismatch(d) => assert_eq!(d.len(), 3, "{d:?}"),
            other => panic!("{other:?}"),
        }
        fs::remove_dir_all(&dir).unwrap();
    }
}

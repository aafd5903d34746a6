//! On-disk schemas: the classification dataset and involution lists.

use anyhow::{bail, Context, Result};
use serde::Deserialize;

use dirac_core::dataset::{RawRow, SpinLkt, SummaryStats, TableEntry};
use dirac_core::linalg::RatMat;
use dirac_core::norms::KTypeWeight;
use dirac_core::qfmt;
use dirac_core::screener::InvolutionMatrix;
use dirac_core::{Rat, E7};

#[derive(Deserialize)]
struct DatasetFile {
    paper_version: String,
    entries: Vec<EntryRow>,
    stats: StatsRow,
}

#[derive(Deserialize)]
struct EntryRow {
    kgb_x: u32,
    inf_char: [i64; 7],
    #[serde(default)]
    dual_of: Option<u32>,
    #[serde(default)]
    lambda: Option<Vec<String>>,
    #[serde(default)]
    nu: Option<Vec<String>>,
    #[serde(default)]
    spin_lkts: Option<Vec<SpinRow>>,
    #[serde(default)]
    star: bool,
    #[serde(default)]
    club: bool,
    #[serde(default)]
    lkt_marked: Option<usize>,
    #[serde(default)]
    multiplicity_two: bool,
}

#[derive(Deserialize)]
struct SpinRow {
    mu: [i64; 7],
    #[serde(default = "one")]
    mult: u32,
}

fn one() -> u32 {
    1
}

#[derive(Deserialize)]
struct StatsRow {
    fs_scattered: u64,
    strings_total: u64,
    nu_norm_multiset: Vec<(String, u64)>,
    string_counts: [u64; 7],
    n6_support_counts: Vec<(String, u64)>,
    phi_counts: [u64; 12],
}

/// A parsed dataset: expanded entries plus the quoted statistics.
pub struct Dataset {
    pub paper_version: String,
    pub entries: Vec<TableEntry>,
    pub stats: SummaryStats,
}

fn parse_rat7(values: &[String], what: &str, x: u32) -> Result<Vec<Rat>> {
    if values.len() != 7 {
        bail!("entry {x}: {what} must have 7 coordinates");
    }
    values
        .iter()
        .map(|s| qfmt::parse(s).with_context(|| format!("entry {x}: bad {what} value {s:?}")))
        .collect()
}

/// Parse and expand a dataset document.
pub fn load_dataset(text: &str) -> Result<Dataset> {
    let doc: DatasetFile = serde_json::from_str(text).context("dataset does not match schema")?;
    let mut rows = Vec::with_capacity(doc.entries.len());
    for e in &doc.entries {
        let row = match e.dual_of {
            Some(partner) => RawRow::DualStub {
                kgb_x: e.kgb_x,
                inf_char: e.inf_char,
                dual_of: partner,
                star: e.star,
                club: e.club,
                multiplicity_two: e.multiplicity_two,
            },
            None => {
                let lambda = parse_rat7(
                    e.lambda.as_deref().context("full entry missing lambda")?,
                    "lambda",
                    e.kgb_x,
                )?;
                let nu =
                    parse_rat7(e.nu.as_deref().context("full entry missing nu")?, "nu", e.kgb_x)?;
                let spin_lkts = e
                    .spin_lkts
                    .as_deref()
                    .context("full entry missing spin_lkts")?
                    .iter()
                    .map(|s| {
                        KTypeWeight::new(s.mu)
                            .map(|mu| SpinLkt { mu, mult: s.mult })
                            .with_context(|| format!("entry {}: bad spin LKT", e.kgb_x))
                    })
                    .collect::<Result<Vec<_>>>()?;
                RawRow::Full(TableEntry {
                    kgb_x: e.kgb_x,
                    inf_char: e.inf_char,
                    lambda,
                    nu,
                    spin_lkts,
                    star: e.star,
                    club: e.club,
                    dual_of: None,
                    lkt_marked: e.lkt_marked,
                    multiplicity_two: e.multiplicity_two,
                })
            }
        };
        rows.push(row);
    }
    let entries = dirac_core::dataset::expand_rows(&rows).context("dual expansion failed")?;

    let mut nu_norm_multiset = std::collections::BTreeMap::new();
    for (value, count) in &doc.stats.nu_norm_multiset {
        let q = qfmt::parse(value).with_context(|| format!("bad multiset value {value:?}"))?;
        if nu_norm_multiset.insert(q, *count).is_some() {
            bail!("duplicate multiset value {value:?}");
        }
    }
    let stats = SummaryStats {
        fs_scattered: doc.stats.fs_scattered,
        strings_total: doc.stats.strings_total,
        nu_norm_multiset,
        string_counts: doc.stats.string_counts,
        n6_support_counts: doc.stats.n6_support_counts.clone(),
        phi_counts: doc.stats.phi_counts,
    };
    Ok(Dataset { paper_version: doc.paper_version, entries, stats })
}

#[derive(Deserialize)]
struct InvolutionRow {
    matrix: Vec<Vec<String>>,
    #[serde(default)]
    tag: String,
}

/// Parse and validate an involution list; errors carry the offending index.
pub fn load_involutions(text: &str, e7: &E7) -> Result<Vec<InvolutionMatrix>> {
    let rows: Vec<InvolutionRow> =
        serde_json::from_str(text).context("involution file does not match schema")?;
    let mut out = Vec::with_capacity(rows.len());
    for (idx, row) in rows.iter().enumerate() {
        if row.matrix.len() != 8 || row.matrix.iter().any(|r| r.len() != 8) {
            bail!("involution {idx}: matrix must be 8x8");
        }
        let mut m = RatMat::zero(8, 8);
        for (i, r) in row.matrix.iter().enumerate() {
            for (j, s) in r.iter().enumerate() {
                m[(i, j)] = qfmt::parse(s)
                    .with_context(|| format!("involution {idx}: bad entry {s:?}"))?;
            }
        }
        let theta = InvolutionMatrix { matrix: m, source_tag: row.tag.clone() };
        theta
            .validate(e7)
            .map_err(|e| anyhow::anyhow!("involution {idx} ({}): {e}", row.tag))?;
        out.push(theta);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_dataset_loads() {
        let ds = load_dataset(crate::BUNDLED_DATASET).unwrap();
        assert_eq!(ds.entries.len(), 125);
        assert_eq!(ds.stats.fs_scattered, 125);
        let starred = ds.entries.iter().filter(|e| e.star).count();
        assert_eq!(starred, 19);
        let clubs = ds.entries.iter().filter(|e| e.club).count();
        assert_eq!(clubs, 15);
        let total: u64 = ds.stats.string_counts.iter().sum();
        assert_eq!(total, 2057);
    }

    #[test]
    fn empty_input_is_schema_error() {
        assert!(load_dataset("").is_err());
        assert!(load_dataset("{}").is_err());
    }

    #[test]
    fn trivial_entry_is_present() {
        let ds = load_dataset(crate::BUNDLED_DATASET).unwrap();
        let triv = ds
            .entries
            .iter()
            .find(|e| e.kgb_x == 20925 && e.inf_char == [1; 7])
            .expect("trivial representation entry");
        assert_eq!(triv.spin_lkts.len(), 1);
        assert_eq!(triv.spin_lkts[0].mu.varpi, [0; 7]);
        assert!(triv.lambda.iter().all(|c| *c == dirac_core::rat(1)));
        assert!(triv.nu.iter().all(|c| *c == dirac_core::rat(1)));
    }
}

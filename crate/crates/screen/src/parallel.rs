//! Rayon drivers for the embarrassingly parallel operations. All results
//! are sorted canonically afterwards, so the parallelism degree never
//! changes any output.

use rayon::prelude::*;

use dirac_core::dataset::{self, TableEntry, VerifyReport};
use dirac_core::norms::KTypeWeight;
use dirac_core::screener::CertEntry;
use dirac_core::E7;

/// Parallel u-small census.
pub fn usmall_census(e7: &E7) -> Vec<KTypeWeight> {
    let mut found: Vec<KTypeWeight> = e7
        .usmall_candidates()
        .into_par_iter()
        .filter(|mu| e7.is_usmall(mu))
        .collect();
    found.sort();
    found
}

/// Parallel certificate filter over a census.
pub fn certs_census(e7: &E7, usmall: &[KTypeWeight]) -> Vec<CertEntry> {
    let threshold = dirac_core::screener::hj_threshold();
    let mut out: Vec<CertEntry> = usmall
        .par_iter()
        .filter_map(|mu| {
            let (spin, _) = e7.spin_norm_sq(mu);
            let lambda = e7.lambda_norm_sq(mu);
            if &spin - &lambda >= threshold {
                Some(CertEntry { ktype: *mu, spin_norm_sq: spin, lambda_norm_sq: lambda })
            } else {
                None
            }
        })
        .collect();
    out.sort_by(|a, b| a.ktype.cmp(&b.ktype));
    out
}

/// Parallel per-entry verification; failures merge in (kgb, character)
/// order.
pub fn verify_entries(e7: &E7, entries: &[TableEntry]) -> VerifyReport {
    let mut reports: Vec<(u32, [i64; 7], VerifyReport)> = entries
        .par_iter()
        .map(|e| (e.kgb_x, e.inf_char, dataset::verify_entry(e7, e)))
        .collect();
    reports.sort_by_key(|(x, c, _)| (*x, *c));
    let mut merged = VerifyReport::default();
    for (_, _, r) in reports {
        merged.merge(r);
    }
    merged
}

/// Candidate-character counts per largest coordinate, in parallel over
/// the coordinate bound.
pub fn phi_counts(e7: &E7, max: i64) -> Vec<u64> {
    (1..=max).into_par_iter().map(|k| e7.count_inf_chars(k)).collect()
}

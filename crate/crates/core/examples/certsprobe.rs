//! Scratch probe for the certificate-set criterion.

use std::collections::BTreeMap;

use dirac_core::norms::KTypeWeight;
use dirac_core::{ratio, Rat, E7};

fn main() {
    let e7 = E7::new();
    let usmall = e7.enumerate_usmall_ktypes();
    println!("u-small: {}", usmall.len());

    let mut gaps: Vec<(Rat, Rat, Rat, KTypeWeight)> = Vec::new();
    for mu in &usmall {
        let (spin, _) = e7.spin_norm_sq(mu);
        let lambda = e7.lambda_norm_sq(mu);
        let gap = &spin - &lambda;
        if gap >= ratio(157, 2) {
            gaps.push((gap, spin, lambda, *mu));
        }
    }
    println!("gap >= 157/2: {}", gaps.len());
    let mut hist: BTreeMap<Rat, usize> = BTreeMap::new();
    for (g, _, _, _) in &gaps {
        *hist.entry(g.clone()).or_insert(0) += 1;
    }
    println!("gap histogram:");
    for (g, n) in &hist {
        println!("  {g} : {n}");
    }
    // Candidate refinements.
    let c115 = gaps.iter().filter(|(g, _, _, _)| *g <= ratio(231, 2)).count();
    println!("gap in [157/2, 231/2]: {c115}");
    let c140 = gaps.iter().filter(|(_, s, _, _)| *s <= ratio(280, 2)).count();
    println!("gap >= 157/2 and spin^2 <= 140: {c140}");
    let spin140 = gaps.iter().filter(|(_, s, _, _)| *s <= ratio(231, 2)).count();
    println!("gap >= 157/2 and spin^2 <= 231/2: {spin140}");
    // How many of the gap-passing mus are K-types vs k-types (sanity).
    let kt = gaps.iter().filter(|(_, _, _, m)| m.is_k_type()).count();
    println!("K-types among them: {kt}");
    // Norm bound of the K-type itself.
    for bound in [20i64, 24, 28, 30, 40] {
        let c = gaps
            .iter()
            .filter(|(_, _, _, m)| {
                let x = m.x8();
                dirac_core::su8::norm64(&x) <= 64 * bound
            })
            .count();
        println!("gap-passing with |mu|^2 <= {bound}: {c}");
    }
}

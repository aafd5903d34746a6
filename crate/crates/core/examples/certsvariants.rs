//! Try variant readings of the certificate criterion against the census.

use dirac_core::norms::KTypeWeight;
use dirac_core::su8;
use dirac_core::{rat, ratio, Rat, E7};

fn main() {
    let e7 = E7::new();
    let usmall = e7.enumerate_usmall_ktypes();
    println!("u-small: {}", usmall.len());
    let threshold = ratio(157, 2);

    // V1: literal projection lambda.
    // V2: unprojected |mu + 2 rho_c - rho_j|^2 at the first admissible j.
    // V3: max over admissible j of the V2 quantity.
    // V4: min over ALL j (admissible or not) of |mu + 2 rho_c - rho_j|^2.
    let mut v = [0usize; 5];
    let mut v2_max_lambda = rat(0);
    let mut v4_max_lambda = rat(0);
    let mut v2_set_sizes: Vec<KTypeWeight> = Vec::new();
    for mu in &usmall {
        let (spin, _) = e7.spin_norm_sq(mu);
        let lam_proj = e7.lambda_norm_sq(mu);
        if &spin - &lam_proj >= threshold {
            v[1] += 1;
        }
        // Unprojected norms: |mu + 2rho_c|^2 - 2 B(mu + 2rho_c, rho_j) + |rho|^2.
        let x = mu.x8();
        let shift = su8::add(&x, &su8::add(&su8::RHO_C_X8, &su8::RHO_C_X8));
        let shift_norm = ratio(su8::norm64(&shift), 64);
        let admissible = e7.admissible_chambers(mu);
        let mut per_chamber: Vec<Rat> = Vec::new();
        for &j in &admissible {
            let c = &e7.chambers[j];
            let rho_j = c.rho_j();
            // B(mu + 2 rho_c, rho_j): via ambient pairing.
            let mu_amb = e7
                .tables
                .to_ambient(&mu.weight())
                .unwrap();
            let mut sum = rat(0);
            for t in 0..8 {
                sum += (&mu_amb[t] + &e7.tables.rho_c[t] * rat(2)) * &rho_j[t];
            }
            let val = &shift_norm - rat(2) * sum + ratio(399, 2);
            per_chamber.push(val);
        }
        let first = per_chamber[0].clone();
        if &spin - &first >= threshold {
            v[2] += 1;
            if first > v2_max_lambda {
                v2_max_lambda = first.clone();
            }
            v2_set_sizes.push(*mu);
        }
        let vmax = per_chamber.iter().max().unwrap().clone();
        if &spin - &vmax >= threshold {
            v[3] += 1;
        }
        let vmin_all: Rat = (0..72)
            .map(|j| {
                let c = &e7.chambers[j];
                let rho_j = c.rho_j();
                let mu_amb = e7.tables.to_ambient(&mu.weight()).unwrap();
                let mut sum = rat(0);
                for t in 0..8 {
                    sum += (&mu_amb[t] + &e7.tables.rho_c[t] * rat(2)) * &rho_j[t];
                }
                &shift_norm - rat(2) * sum + ratio(399, 2)
            })
            .min()
            .unwrap();
        if &spin - &vmin_all >= threshold {
            v[4] += 1;
            if vmin_all > v4_max_lambda {
                v4_max_lambda = vmin_all.clone();
            }
        }
    }
    println!("V1 literal: {}", v[1]);
    println!("V2 unprojected first admissible: {} (max lambda {})", v[2], v2_max_lambda);
    println!("V3 unprojected max admissible: {}", v[3]);
    println!("V4 unprojected min over all chambers: {} (max lambda {})", v[4], v4_max_lambda);
    if v[2] < 100 {
        println!("V2 members:");
        for m in &v2_set_sizes {
            println!("  {:?}", m.varpi);
        }
    }
}

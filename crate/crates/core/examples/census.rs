//! Scratch census run: u-small count, certificate count, norm extremes.

use std::time::Instant;

use dirac_core::E7;

fn main() {
    let t0 = Instant::now();
    let e7 = E7::new();
    println!("context built in {:?}", t0.elapsed());

    let t1 = Instant::now();
    let candidates = e7.usmall_candidates();
    println!("candidates: {} in {:?}", candidates.len(), t1.elapsed());
    println!("caps: {:?}", e7.usmall_coordinate_caps());
    println!("ball bound (64x): {}", e7.usmall_ball_bound64());

    let t2 = Instant::now();
    let mut usmall = Vec::new();
    for (i, mu) in candidates.iter().enumerate() {
        if e7.is_usmall(mu) {
            usmall.push(*mu);
        }
        if i % 20000 == 19999 {
            println!("  ... {} / {} ({:?})", i + 1, candidates.len(), t2.elapsed());
        }
    }
    println!("u-small K-types: {} in {:?}", usmall.len(), t2.elapsed());

    let t3 = Instant::now();
    let certs = e7.certs_census(&usmall);
    println!("certs: {} in {:?}", certs.len(), t3.elapsed());
    let max_lambda = certs.iter().map(|c| c.lambda_norm_sq.clone()).max().unwrap();
    println!("max lambda norm sq over certs: {}", max_lambda);
}

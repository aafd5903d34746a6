//! Dump the u-small census with both squared norms to a TSV cache, plus
//! auxiliary frozen-value candidates.

use std::io::Write;

use dirac_core::norms::KTypeWeight;
use dirac_core::E7;

fn main() {
    let e7 = E7::new();

    // Outer-shell regression set: 2 rho_n + 2 beta membership per chamber.
    let mut shifted_flags = Vec::new();
    for c in &e7.chambers {
        let mut v = c.rho_n_varpi;
        for x in &mut v {
            *x *= 2;
        }
        v[3] += 2;
        shifted_flags.push(e7.is_usmall(&KTypeWeight::new(v).unwrap()));
    }
    let true_idx: Vec<usize> =
        (0..72).filter(|&j| shifted_flags[j]).collect();
    eprintln!("2rho_n+2beta usmall true at: {true_idx:?}");

    // Integral characters with squared norm in [157/2, 280/2]; the doubled
    // Gram matrix is integral, so compare 157 <= q^T N q <= 280.
    let mut n2 = [[0i64; 7]; 7];
    for i in 0..7 {
        for j in 0..7 {
            let d = e7.tables.gram_zeta[(i, j)].clone() * dirac_core::rat(2);
            n2[i][j] = d.numer().try_into().unwrap();
        }
    }
    let mut omega = 0u64;
    let mut v = [0i64; 7];
    fn rec(slot: usize, v: &mut [i64; 7], n2: &[[i64; 7]; 7], omega: &mut u64) {
        if slot == 7 {
            let mut q = 0i64;
            for i in 0..7 {
                for j in 0..7 {
                    q += v[i] * v[j] * n2[i][j];
                }
            }
            if (157..=280).contains(&q) {
                *omega += 1;
            }
            return;
        }
        // All Gram entries are positive, so the form grows with each
        // coordinate; stop as soon as the diagonal term alone passes 280.
        let mut c = 0;
        while c * c * n2[slot][slot] <= 280 {
            v[slot] = c;
            rec(slot + 1, v, n2, omega);
            c += 1;
        }
        v[slot] = 0;
    }
    rec(0, &mut v, &n2, &mut omega);
    eprintln!("integral characters with norm^2 in [78.5, 140]: {omega}");

    let usmall = e7.enumerate_usmall_ktypes();
    let mut out =
        std::io::BufWriter::new(std::fs::File::create("target/census_cache.tsv").unwrap());
    for mu in &usmall {
        let (spin, achieving) = e7.spin_norm_sq(mu);
        let lambda = e7.lambda_norm_sq(mu);
        let coords: Vec<String> = mu.varpi.iter().map(|c| c.to_string()).collect();
        writeln!(out, "{}\t{}\t{}\t{}", coords.join(","), spin, lambda, achieving.len()).unwrap();
    }
    eprintln!("wrote {} rows", usmall.len());
}

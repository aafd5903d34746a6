//! Anchors for the lambda norm: rows whose lowest K-type is marked let us
//! solve |lambda_a(LKT)|^2 = |character|^2 - |nu|^2 from printed data.

use dirac_core::norms::KTypeWeight;
use dirac_core::{rat, ratio, Rat, E7};

fn q7(v: [i64; 7]) -> Vec<Rat> {
    v.iter().map(|&x| rat(x)).collect()
}

fn qh(v: [(i64, i64); 7]) -> Vec<Rat> {
    v.iter().map(|&(p, q)| ratio(p, q)).collect()
}

fn main() {
    let e7 = E7::new();

    let anchors: Vec<([i64; 7], Vec<Rat>, Vec<Rat>)> = vec![
        // (LKT, inf char, nu)
        (
            [0, 1, 0, 0, 0, 0, 10],
            q7([1, 0, 0, 1, 0, 1, 1]),
            qh([(5, 2), (0, 1), (-5, 2), (5, 2), (-5, 2), (0, 1), (5, 2)]),
        ),
        (
            [0, 0, 0, 4, 0, 3, 0],
            q7([1, 1, 0, 1, 0, 1, 1]),
            q7([5, 1, -4, 1, -2, 3, 1]),
        ),
        (
            [0, 0, 4, 0, 0, 0, 6],
            q7([1, 1, 0, 1, 0, 1, 1]),
            q7([1, 1, -4, 5, -4, 1, 1]),
        ),
        (
            [0, 0, 0, 4, 0, 4, 0],
            q7([1, 1, 0, 1, 1, 0, 1]),
            q7([5, 1, -4, 1, 1, -3, 4]),
        ),
        (
            [0, 0, 0, 7, 0, 0, 0],
            q7([1, 1, 0, 1, 1, 1, 1]),
            qh([(15, 2), (1, 1), (-13, 2), (1, 1), (1, 1), (1, 1), (1, 1)]),
        ),
        (
            [0, 0, 0, 0, 0, 0, 0],
            q7([1, 1, 1, 1, 1, 1, 1]),
            q7([1, 1, 1, 1, 1, 1, 1]),
        ),
        (
            [0, 0, 0, 0, 0, 0, 0],
            q7([1, 1, 1, 0, 1, 1, 1]),
            q7([1, 1, 1, 0, 1, 1, 1]),
        ),
    ];

    for (lkt, lam, nu) in anchors {
        let mu = KTypeWeight::new(lkt).unwrap();
        let lam_norm = e7.zeta_norm_sq(&lam);
        let nu_norm = e7.nu_norm_sq(&nu);
        let expect = &lam_norm - &nu_norm;
        let got = e7.lambda_norm_sq(&mu);
        let ok = if got == expect { "OK " } else { "BAD" };
        println!(
            "{ok} LKT {:?}: |Lambda|^2={} |nu|^2={} expect lambda^2={} got {}",
            lkt, lam_norm, nu_norm, expect, got
        );
    }
}

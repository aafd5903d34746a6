//! Scratch probe for cross-checking chamber and pencil data.

use dirac_core::norms::KTypeWeight;
use dirac_core::{rat, Rat, E7};

fn main() {
    let e7 = E7::new();

    println!("== chambers containing the four reference rho_n vectors ==");
    for target in [
        [2i64, 0, 2, 1, 0, 2, 2],
        [1, 0, 3, 0, 1, 2, 1],
        [1, 1, 1, 1, 1, 1, 3],
        [0, 1, 2, 0, 2, 1, 2],
    ] {
        let hit = e7.chambers.iter().find(|c| c.rho_n_varpi == target);
        match hit {
            Some(c) => println!("rho_n {:?} -> chamber {} length {}", target, c.index, c.length),
            None => println!("rho_n {:?} -> MISSING", target),
        }
    }

    println!("== spin profile along n*beta at character [1,1,1,0,1,1,1] ==");
    let lam: Vec<Rat> = [1, 1, 1, 0, 1, 1, 1].iter().map(|&c| rat(c)).collect();
    let lam_norm = e7.zeta_norm_sq(&lam);
    println!("character norm^2 = {}", lam_norm);
    for n in 0..=10i64 {
        let mu = KTypeWeight::trivial().plus_n_beta(n);
        let (s, ach) = e7.spin_norm_sq(&mu);
        let marker = if s == lam_norm { "  <== equality" } else { "" };
        println!("n={n}: spin^2 = {} ({} achieving){marker}", s, ach.len());
        if s == lam_norm {
            if let Some(contrib) = e7.spin_contribution(&mu, &lam) {
                for c in contrib {
                    println!(
                        "    chamber {} len {} parity {:+} gamma {:?} hp={}",
                        c.chamber,
                        e7.chambers[c.chamber].length,
                        c.parity,
                        c.gamma,
                        c.hp_holds
                    );
                }
            }
        }
    }

    println!("== contributions of the 16648 spin LKTs at [1,0,0,1,0,1,0] ==");
    let lam42: Vec<Rat> = [1, 0, 0, 1, 0, 1, 0].iter().map(|&c| rat(c)).collect();
    for target in [
        [2i64, 0, 2, 1, 0, 2, 2],
        [1, 0, 3, 0, 1, 2, 1],
        [1, 1, 1, 1, 1, 1, 3],
        [0, 1, 2, 0, 2, 1, 2],
    ] {
        let mu = KTypeWeight::new(target).unwrap();
        match e7.spin_contribution(&mu, &lam42) {
            None => println!("mu {:?}: no contribution", target),
            Some(cs) => {
                for c in cs {
                    println!(
                        "mu {:?}: chamber {} len {} parity {:+} gamma {:?} hp={}",
                        target,
                        c.chamber,
                        e7.chambers[c.chamber].length,
                        c.parity,
                        c.gamma,
                        c.hp_holds
                    );
                }
            }
        }
    }

    println!("== rho_n of the identity chamber ==");
    println!("{:?}", e7.chambers[0].rho_n_varpi);

    println!("== chamber parity sum ==");
    println!("{}", e7.chamber_parity_sum());

    println!("== lambda_a of the trivial K-type ==");
    let lam_a = e7.lambda_a(&KTypeWeight::trivial());
    println!("ambient {lam_a}");
    println!("norm^2 {}", e7.lambda_norm_sq(&KTypeWeight::trivial()));
}

//! Independent oracles for the projection, the membership test, and the
//! weight-multiplicity machinery. Each oracle recomputes its target along
//! a different route from the implementation it checks.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use dirac_core::linalg::{self, RatMat};
use dirac_core::norms::KTypeWeight;
use dirac_core::reptheory;
use dirac_core::su8;
use dirac_core::weight::{Frame, Weight};
use dirac_core::{rat, ratio, Rat, UInt, E7};

fn ctx() -> &'static E7 {
    static CTX: OnceLock<E7> = OnceLock::new();
    CTX.get_or_init(E7::new)
}

/// Nearest point of the chamber-j cone by exhaustive face search: solve
/// the normal equations on every subset of generators, keep feasible
/// solutions, take the global distance minimizer. No optimality
/// conditions are consulted, so this is independent of the active-set
/// route used by the implementation.
fn oracle_project(e7: &E7, j: usize, xi: &[Rat]) -> (Vec<Rat>, Rat) {
    let gens = &e7.chambers[j].fw_image;
    let mut best: Option<(Vec<Rat>, Rat)> = None;
    for mask in 0u16..128 {
        let idx: Vec<usize> = (0..7).filter(|&i| mask & (1 << i) != 0).collect();
        let point = if idx.is_empty() {
            vec![rat(0); 8]
        } else {
            let mut gram = RatMat::zero(idx.len(), idx.len());
            for (a, &i) in idx.iter().enumerate() {
                for (b, &k) in idx.iter().enumerate() {
                    gram[(a, b)] = linalg::dot(&gens[i], &gens[k]);
                }
            }
            let rhs: Vec<Rat> = idx.iter().map(|&i| linalg::dot(xi, &gens[i])).collect();
            let coeffs = match gram.solve(&rhs) {
                Some(c) => c,
                None => continue,
            };
            if coeffs.iter().any(|c| c < &rat(0)) {
                continue;
            }
            let mut p = vec![rat(0); 8];
            for (a, &i) in idx.iter().enumerate() {
                for t in 0..8 {
                    p[t] += &coeffs[a] * &gens[i][t];
                }
            }
            p
        };
        let diff = linalg::sub(xi, &point);
        let dist = linalg::dot(&diff, &diff);
        let better = match &best {
            None => true,
            Some((_, d)) => dist < *d,
        };
        if better {
            best = Some((point, dist));
        }
    }
    best.expect("the apex face is always feasible")
}

fn random_ambient(rng: &mut ChaCha8Rng, e7: &E7) -> Vec<Rat> {
    let coeffs: Vec<Rat> =
        (0..7).map(|_| ratio(rng.gen_range(-40..=40), rng.gen_range(1..=4))).collect();
    let w = Weight::new(coeffs, Frame::Zeta);
    e7.tables.to_ambient(&w).unwrap()
}

#[test]
fn projection_matches_min_distance_oracle_and_kkt() {
    let e7 = ctx();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for trial in 0..1000 {
        let j = rng.gen_range(0..72);
        let xi = random_ambient(&mut rng, e7);
        let (point_w, proj) =
            e7.project_dominant_cone(&Weight::new(xi.clone(), Frame::Ambient), j);
        let point = point_w.coords;
        // KKT certificate: non-negative coefficients, residual pairings
        // non-positive, residual orthogonal to the projection.
        assert!(proj.coeffs.iter().all(|c| c >= &rat(0)));
        let resid = linalg::sub(&xi, &point);
        for i in 0..7 {
            let pairing = linalg::dot(&resid, &e7.chambers[j].fw_image[i]);
            assert!(pairing <= rat(0), "trial {trial}: positive residual pairing");
        }
        assert_eq!(linalg::dot(&resid, &point), rat(0), "trial {trial}: residual not orthogonal");
        // Independent oracle agreement.
        let (oracle_point, oracle_dist) = oracle_project(e7, j, &xi);
        assert_eq!(point, oracle_point, "trial {trial}: projection disagrees with oracle");
        let diff = linalg::sub(&xi, &point);
        assert_eq!(linalg::dot(&diff, &diff), oracle_dist);
        assert_eq!(linalg::dot(&point, &point), proj.norm_sq);
    }
}

#[test]
fn lambda_of_trivial_matches_oracle() {
    let e7 = ctx();
    let mu = KTypeWeight::trivial();
    let lam = e7.lambda_a(&mu);
    for &j in &e7.admissible_chambers(&mu) {
        let two_rho_c: Vec<Rat> = e7.tables.rho_c.iter().map(|c| c * rat(2)).collect();
        let xi = linalg::sub(&two_rho_c, &e7.chambers[j].rho_j());
        let (point, _) = oracle_project(e7, j, &xi);
        assert_eq!(lam.coords, point);
    }
    assert!(lam.is_zero());
    assert_eq!(e7.lambda_norm_sq(&mu), rat(0));
}

#[test]
fn usmall_agrees_with_support_certificates_on_samples() {
    let e7 = ctx();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..400 {
        let coords: [i64; 7] = core::array::from_fn(|_| rng.gen_range(0..6));
        let mu = KTypeWeight::new(coords).unwrap();
        let by_support = e7.usmall_support_separator(&mu).is_none();
        let by_lp = e7.is_usmall(&mu);
        assert_eq!(by_support, by_lp, "support certificate disagrees with LP for {coords:?}");
    }
}

/// Weight multiplicities of the gl(8) irreducible with the given top row,
/// counted by enumerating Gelfand-Tsetlin patterns.
fn gt_weight_multiplicities(top: [i64; 8]) -> BTreeMap<[i64; 8], UInt> {
    let mut result: BTreeMap<[i64; 8], UInt> = BTreeMap::new();
    // row_sums[k] holds the sum of the row with 8-k entries (top first).
    fn descend(row: &[i64], row_sums: &mut Vec<i64>, result: &mut BTreeMap<[i64; 8], UInt>) {
        row_sums.push(row.iter().sum());
        if row.len() == 1 {
            // row_sums = [S_8, S_7, ..., S_1]; weight_k = S_k - S_{k-1}.
            let mut weight = [0i64; 8];
            for k in 1..=8usize {
                let s_k = row_sums[8 - k];
                let s_prev = if k == 1 { 0 } else { row_sums[9 - k] };
                weight[k - 1] = s_k - s_prev;
            }
            *result.entry(weight).or_insert_with(|| UInt::from(0u32)) += UInt::from(1u32);
        } else {
            let m = row.len() - 1;
            let mut next = vec![0i64; m];
            fn choose(
                pos: usize,
                row: &[i64],
                next: &mut Vec<i64>,
                row_sums: &mut Vec<i64>,
                result: &mut BTreeMap<[i64; 8], UInt>,
            ) {
                if pos == next.len() {
                    descend(&next.clone(), row_sums, result);
                    return;
                }
                // Interlacing: row[pos] >= next[pos] >= row[pos + 1].
                for v in row[pos + 1]..=row[pos] {
                    next[pos] = v;
                    choose(pos + 1, row, next, row_sums, result);
                }
            }
            choose(0, row, &mut next, row_sums, result);
        }
        row_sums.pop();
    }
    let mut sums = Vec::new();
    descend(&top, &mut sums, &mut result);
    result
}

fn varpi_to_partition(a: &[i64; 7]) -> [i64; 8] {
    let mut part = [0i64; 8];
    for i in (0..7).rev() {
        part[i] = part[i + 1] + a[i];
    }
    part
}

#[test]
fn freudenthal_matches_gelfand_tsetlin_counts() {
    // Every dominant weight with Weyl dimension at most 10^4; the
    // dimension grows in each coordinate, which prunes the enumeration.
    let cap = UInt::from(10_000u32);
    let mut lambdas: Vec<[i64; 7]> = Vec::new();
    fn grow(prefix: &mut [i64; 7], slot: usize, cap: &UInt, out: &mut Vec<[i64; 7]>) {
        if slot == 7 {
            out.push(*prefix);
            return;
        }
        let mut v = 0;
        loop {
            prefix[slot] = v;
            if su8::weyl_dim(prefix) > *cap {
                break;
            }
            grow(prefix, slot + 1, cap, out);
            v += 1;
        }
        prefix[slot] = 0;
    }
    let mut prefix = [0i64; 7];
    grow(&mut prefix, 0, &cap, &mut lambdas);
    assert!(lambdas.len() > 100, "expected a substantial sample, got {}", lambdas.len());

    for lam in &lambdas {
        let mu = KTypeWeight::new(*lam).unwrap();
        let freud = reptheory::freudenthal_weights(&mu, None).unwrap();
        assert_eq!(freud.total_dim(), su8::weyl_dim(lam), "dimension mismatch for {lam:?}");
        let gt = gt_weight_multiplicities(varpi_to_partition(lam));
        let mut from_gt: BTreeMap<[i64; 7], UInt> = BTreeMap::new();
        for (w, m) in &gt {
            let mut sorted = *w;
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            if &sorted != w {
                continue; // keep only dominant representatives
            }
            let mut varpi = [0i64; 7];
            for i in 0..7 {
                varpi[i] = w[i] - w[i + 1];
            }
            from_gt.insert(varpi, m.clone());
        }
        assert_eq!(freud.dominant, from_gt, "weight multiplicities differ for {lam:?}");
    }
}

#[test]
fn klimyk_matches_character_product() {
    // Full character check: the weight multiset of the product equals the
    // sum of the constituents' weight multisets.
    let cases = [
        ([1, 0, 0, 0, 0, 0, 0], [1, 0, 0, 0, 0, 0, 0]),
        ([1, 0, 0, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0, 2]),
        ([0, 1, 0, 0, 0, 0, 0], [1, 0, 0, 0, 0, 0, 1]),
        ([0, 0, 0, 1, 0, 0, 0], [0, 0, 0, 1, 0, 0, 0]),
        ([1, 0, 0, 0, 0, 0, 1], [0, 1, 0, 0, 0, 1, 0]),
    ];
    for (a, b) in cases {
        let small = KTypeWeight::new(a).unwrap();
        let other = KTypeWeight::new(b).unwrap();
        let decomp = reptheory::klimyk_tensor(&small, &other, 100_000).unwrap();

        let mut product: BTreeMap<[i64; 8], UInt> = BTreeMap::new();
        let wa = reptheory::freudenthal_weights(&small, None).unwrap();
        let wb = reptheory::freudenthal_weights(&other, None).unwrap();
        for (xa, ma) in wa.expand() {
            for (xb, mb) in wb.expand() {
                let key = su8::add(&xa, &xb);
                *product.entry(key).or_insert_with(|| UInt::from(0u32)) += &ma * &mb;
            }
        }
        let mut sum: BTreeMap<[i64; 8], UInt> = BTreeMap::new();
        for (term, mult) in &decomp.terms {
            let wt =
                reptheory::freudenthal_weights(&KTypeWeight::new(*term).unwrap(), None).unwrap();
            for (x, m) in wt.expand() {
                *sum.entry(x).or_insert_with(|| UInt::from(0u32)) += m * UInt::from(*mult);
            }
        }
        assert_eq!(product, sum, "character mismatch for {a:?} (x) {b:?}");
    }
}

//! su(8) representation arithmetic and Dirac-cohomology candidates: Weyl
//! dimensions, Freudenthal weight multiplicities, Klimyk tensor expansion,
//! the 72 spin-module constituents, and the conjugacy/parity bookkeeping
//! behind the Dirac index.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::norms::KTypeWeight;
use crate::su8::{self, X8};
use crate::weight::{Frame, Weight};
use crate::weyl::{self, System};
use crate::{Rat, UInt, E7};

/// Default ceiling on the dimension of the iterated tensor factor.
pub const KLIMYK_DIM_CAP: u64 = 100_000;

/// Weight multiplicities of one irreducible, keyed by dominant weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightMultiplicities {
    pub highest: KTypeWeight,
    /// Multiplicity of each dominant weight.
    pub dominant: BTreeMap<[i64; 7], UInt>,
}

impl WeightMultiplicities {
    /// Total weight count (multiplicities times orbit sizes); equals the
    /// Weyl dimension when the table is complete.
    pub fn total_dim(&self) -> UInt {
        let mut acc = UInt::from(0u32);
        for (w, m) in &self.dominant {
            acc += m * UInt::from(su8::orbit_size(&su8::from_varpi(w)));
        }
        acc
    }

    /// Multiplicity of an arbitrary (not necessarily dominant) weight.
    pub fn multiplicity(&self, x: &X8) -> UInt {
        let dom = su8::dominant(x);
        match su8::to_varpi(&dom) {
            Some(v) => self.dominant.get(&v).cloned().unwrap_or_else(|| UInt::from(0u32)),
            None => UInt::from(0u32),
        }
    }

    /// Every weight with its multiplicity, orbit by orbit.
    pub fn expand(&self) -> Vec<(X8, UInt)> {
        let mut out = Vec::new();
        for (w, m) in &self.dominant {
            for p in su8::orbit(&su8::from_varpi(w)) {
                out.push((p, m.clone()));
            }
        }
        out
    }
}

/// Multiset of irreducible constituents with positive multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrrepDecomposition {
    pub terms: BTreeMap<[i64; 7], u64>,
}

impl IrrepDecomposition {
    pub fn dimension(&self) -> UInt {
        let mut acc = UInt::from(0u32);
        for (w, m) in &self.terms {
            acc += su8::weyl_dim(w) * UInt::from(*m);
        }
        acc
    }
}

/// Errors from the representation-theory operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepError {
    /// Freudenthal descent hit the configured level cap before the weight
    /// system was exhausted.
    DepthCapExhausted { cap: u32 },
    /// The small tensor factor exceeds the dimension cap.
    DimCapExceeded { dim: UInt, cap: u64 },
    /// Input weight was expected to be dominant.
    NonDominant,
}

impl core::fmt::Display for RepError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            RepError::DepthCapExhausted { cap } => {
                write!(f, "weight descent exceeded the level cap {cap}")
            }
            RepError::DimCapExceeded { dim, cap } => {
                write!(f, "tensor factor of dimension {dim} exceeds cap {cap}")
            }
            RepError::NonDominant => write!(f, "weight is not dominant"),
        }
    }
}

impl core::error::Error for RepError {}

/// Weyl dimension of the su(8) irreducible with the given highest weight.
pub fn weyl_dim(lambda: &KTypeWeight) -> UInt {
    su8::weyl_dim(&lambda.varpi)
}

/// Level of `mu` below `lambda`: the total simple-root coefficient count
/// of the difference, or `None` when `mu` is not below `lambda`.
fn level_below(lambda_x: &X8, mu_x: &X8) -> Option<i64> {
    let mut prefix = 0i64;
    let mut total = 0i64;
    for i in 0..7 {
        prefix += lambda_x[i] - mu_x[i];
        if prefix < 0 || prefix % 8 != 0 {
            return None;
        }
        total += prefix / 8;
    }
    Some(total)
}

/// Freudenthal's recursion for all weight multiplicities of `L(lambda)`.
///
/// `depth_cap` bounds the descent level below the highest weight; hitting
/// the cap with weights still unprocessed is an error distinct from
/// success.
pub fn freudenthal_weights(
    lambda: &KTypeWeight,
    depth_cap: Option<u32>,
) -> Result<WeightMultiplicities, RepError> {
    let lam_x = lambda.x8();

    // Dominant weights below lambda: same coordinate residue, majorized
    // prefix sums. Enumerate descending tuples recursively.
    let mut dominant_list: Vec<(X8, i64)> = Vec::new();
    let residue = lam_x[0].rem_euclid(8);
    let mut prefix_caps = [0i64; 8];
    let mut acc = 0;
    for i in 0..8 {
        acc += lam_x[i];
        prefix_caps[i] = acc;
    }
    let mut cur = [0i64; 8];
    fn recurse(
        slot: usize,
        prev: i64,
        prefix: i64,
        residue: i64,
        caps: &[i64; 8],
        cur: &mut X8,
        out: &mut Vec<(X8, i64)>,
    ) {
        if slot == 8 {
            if prefix == 0 {
                out.push((*cur, 0));
            }
            return;
        }
        // Remaining slots must be able to bring the running sum back to 0
        // while staying descending: each later entry is at most v.
        let mut v = prev;
        while (residue - v).rem_euclid(8) != 0 {
            v -= 1;
        }
        while v * ((8 - slot) as i64) >= -prefix {
            let p = prefix + v;
            if p <= caps[slot] {
                cur[slot] = v;
                recurse(slot + 1, v, p, residue, caps, cur, out);
            }
            v -= 8;
        }
    }
    recurse(0, lam_x[0], 0, residue, &prefix_caps, &mut cur, &mut dominant_list);

    for entry in &mut dominant_list {
        entry.1 = level_below(&lam_x, &entry.0).expect("enumerated below lambda");
    }
    dominant_list.sort_by_key(|&(_, lvl)| lvl);
    debug_assert_eq!(dominant_list[0].0, lam_x);

    if let Some(cap) = depth_cap {
        if dominant_list.iter().any(|&(_, lvl)| lvl > cap as i64) {
            return Err(RepError::DepthCapExhausted { cap });
        }
    }

    // Positive A7 roots in scaled coordinates.
    let mut pos_roots: Vec<X8> = Vec::with_capacity(28);
    for i in 0..8 {
        for j in (i + 1)..8 {
            let mut r = [0i64; 8];
            r[i] = 8;
            r[j] = -8;
            pos_roots.push(r);
        }
    }

    let lam_rho = su8::add(&lam_x, &su8::RHO_C_X8);
    let lam_rho_norm = su8::norm64(&lam_rho);

    let mut table: BTreeMap<[i64; 7], UInt> = BTreeMap::new();
    let lookup = |table: &BTreeMap<[i64; 7], UInt>, x: &X8| -> Option<UInt> {
        let dom = su8::dominant(x);
        su8::to_varpi(&dom).and_then(|v| table.get(&v).cloned())
    };
    for &(mu_x, lvl) in &dominant_list {
        let key = su8::to_varpi(&mu_x).expect("dominant integral weight");
        if lvl == 0 {
            table.insert(key, UInt::from(1u32));
            continue;
        }
        let mu_rho = su8::add(&mu_x, &su8::RHO_C_X8);
        let denom = lam_rho_norm - su8::norm64(&mu_rho);
        debug_assert!(denom > 0);
        let mut rhs = crate::Int::from(0);
        for alpha in &pos_roots {
            let mut k = 1i64;
            loop {
                let mut shifted = mu_x;
                for t in 0..8 {
                    shifted[t] += k * alpha[t];
                }
                let m = match lookup(&table, &shifted) {
                    Some(m) if !m.is_zero() => m,
                    _ => break,
                };
                let mut pair = 0i64;
                for t in 0..8 {
                    pair += shifted[t] * alpha[t];
                }
                debug_assert_eq!(pair % 64, 0);
                // pair is 64 B(mu + k alpha, alpha); terms may be negative
                // on the lower end of a root string.
                rhs += crate::Int::from(m) * crate::Int::from(2 * (pair / 64));
                k += 1;
            }
        }
        // denom is 64 * (|lambda+rho|^2 - |mu+rho|^2); rhs carries the
        // same 1/64 scale, so the quotient is the exact multiplicity.
        let denom = crate::Int::from(denom / 64);
        assert!(rhs.is_positive(), "weights below the highest have positive mass");
        debug_assert!((&rhs % &denom).is_zero());
        let m = (rhs / denom).to_biguint().expect("positive multiplicity");
        table.insert(key, m);
    }

    Ok(WeightMultiplicities { highest: *lambda, dominant: table })
}

/// Signed Klimyk expansion of `E_small (x) E_other`.
pub fn klimyk_tensor(
    small: &KTypeWeight,
    other: &KTypeWeight,
    dim_cap: u64,
) -> Result<IrrepDecomposition, RepError> {
    let dim = weyl_dim(small);
    if dim > UInt::from(dim_cap) {
        return Err(RepError::DimCapExceeded { dim, cap: dim_cap });
    }
    let weights = freudenthal_weights(small, None)?;
    let target = su8::add(&other.x8(), &su8::RHO_C_X8);
    let mut signed: BTreeMap<[i64; 7], i64> = BTreeMap::new();
    for (w, m) in &weights.dominant {
        let m = m.to_i64().expect("multiplicity bounded by the dimension cap");
        for p in su8::orbit(&su8::from_varpi(w)) {
            let t = su8::add(&target, &p);
            if let Some((dom, sign)) = su8::dominant_signed(&t) {
                let key_x = su8::sub(&dom, &su8::RHO_C_X8);
                let key = su8::to_varpi(&key_x).expect("integral");
                *signed.entry(key).or_insert(0) += sign as i64 * m;
            }
        }
    }
    signed.retain(|_, v| *v != 0);
    let mut terms = BTreeMap::new();
    for (k, v) in signed {
        assert!(v > 0, "all multiplicities must be positive after cancellation");
        terms.insert(k, v as u64);
    }
    let decomp = IrrepDecomposition { terms };
    debug_assert_eq!(decomp.dimension(), weyl_dim(small) * weyl_dim(other));
    Ok(decomp)
}

/// One could-contribute K-tilde-type for a fixed infinitesimal character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiracCandidate {
    /// Highest weight in varpi coordinates (rational for non-integral
    /// characters).
    pub gamma: Vec<Rat>,
    /// Chamber solutions: (chamber index, length, parity).
    pub solutions: Vec<(usize, usize, i32)>,
}

impl DiracCandidate {
    /// Minimal length over the chamber solutions.
    pub fn min_length(&self) -> usize {
        self.solutions.iter().map(|&(_, l, _)| l).min().unwrap()
    }

    pub fn parity_of_min(&self) -> i32 {
        let l = self.min_length();
        if l % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// One spin-norm-achieving chamber's contribution for a K-type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinContributionEntry {
    pub chamber: usize,
    pub gamma: [i64; 7],
    pub parity: i32,
    /// Whether gamma + rho_c is conjugate to the infinitesimal character.
    pub hp_holds: bool,
}

impl E7 {
    /// The 72 spin-module constituents with their parities.
    pub fn spin_module_parts(&self) -> Vec<(KTypeWeight, i32)> {
        self.chambers
            .iter()
            .map(|c| {
                let parity = if c.length % 2 == 0 { 1 } else { -1 };
                (KTypeWeight::new(c.rho_n_varpi).expect("rho_n is dominant"), parity)
            })
            .collect()
    }

    /// All dominant k-weights gamma with gamma + rho_c in the Weyl orbit
    /// of `lambda` (given in zeta coordinates, dominant), with their
    /// chamber solutions. Regular integral characters give exactly 72; for
    /// singular ones duplicates merge.
    pub fn dirac_candidate_ktypes(
        &self,
        lambda_zeta: &[Rat],
    ) -> Result<Vec<DiracCandidate>, RepError> {
        if lambda_zeta.len() != 7 || lambda_zeta.iter().any(|c| c.is_negative()) {
            return Err(RepError::NonDominant);
        }
        let lam = Weight::new(lambda_zeta.to_vec(), Frame::Zeta);
        let ambient = self.tables.to_ambient(&lam).expect("zeta frame is always in span");
        let mut by_gamma: BTreeMap<Vec<(num_bigint::BigInt, num_bigint::BigInt)>, DiracCandidate> =
            BTreeMap::new();
        for chamber in &self.chambers {
            let image = chamber.w.apply(&ambient);
            // varpi coordinates of w Lambda - rho_c.
            let gamma: Vec<Rat> = (0..7)
                .map(|i| {
                    self.tables.pair_rat_amb2(&image, &self.tables.simple_k2[i]) - crate::rat(1)
                })
                .collect();
            if gamma.iter().any(|c| c.is_negative()) {
                continue;
            }
            let parity = if chamber.length % 2 == 0 { 1 } else { -1 };
            let key: Vec<_> =
                gamma.iter().map(|c| (c.numer().clone(), c.denom().clone())).collect();
            by_gamma
                .entry(key)
                .or_insert_with(|| DiracCandidate { gamma: gamma.clone(), solutions: Vec::new() })
                .solutions
                .push((chamber.index, chamber.length, parity));
        }
        Ok(by_gamma.into_values().collect())
    }

    /// The contributions of a K-type to Dirac cohomology at infinitesimal
    /// character `lambda` (zeta coordinates, dominant): `None` unless the
    /// spin norm matches the character norm; otherwise one entry per
    /// achieving chamber with the chamber parity and the conjugacy check.
    pub fn spin_contribution(
        &self,
        mu: &KTypeWeight,
        lambda_zeta: &[Rat],
    ) -> Option<Vec<SpinContributionEntry>> {
        let lam_norm = self.zeta_norm_sq(lambda_zeta);
        let (spin, achieving) = self.spin_norm_sq(mu);
        if spin != lam_norm {
            return None;
        }
        let lam = Weight::new(lambda_zeta.to_vec(), Frame::Zeta);
        let lam_ambient = self.tables.to_ambient(&lam).expect("zeta frame in span");
        let x = mu.x8();
        let entries = achieving
            .into_iter()
            .map(|j| {
                let dom = su8::dominant(&su8::sub(&x, &self.rho_n_x8[j]));
                let gamma = su8::to_varpi(&dom).expect("integral k-weight");
                let parity = if self.chambers[j].length % 2 == 0 { 1 } else { -1 };
                // gamma + rho_c, conjugated to the dominant chamber, must
                // reproduce lambda.
                let mut shifted = [0i64; 7];
                for i in 0..7 {
                    shifted[i] = gamma[i] + 1;
                }
                let shifted_w = Weight::from_ints(&shifted, Frame::Varpi);
                let ambient = self.tables.to_ambient(&shifted_w).expect("varpi in span");
                let (dom_g, _) = weyl::descend_to_dominant(&self.tables, &ambient, System::G);
                let hp_holds = dom_g == lam_ambient;
                SpinContributionEntry { chamber: j, gamma, parity, hp_holds }
            })
            .collect();
        Some(entries)
    }

    /// Signed chamber count: the sum of parities over all 72 chambers.
    pub fn chamber_parity_sum(&self) -> i64 {
        self.chambers.iter().map(|c| if c.length % 2 == 0 { 1i64 } else { -1 }).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn ctx() -> &'static E7 {
        use std::sync::OnceLock;
        static CTX: OnceLock<E7> = OnceLock::new();
        CTX.get_or_init(E7::new)
    }

    #[test]
    fn weyl_dim_examples() {
        assert_eq!(weyl_dim(&KTypeWeight::trivial()).to_u64(), Some(1));
        assert_eq!(weyl_dim(&KTypeWeight::new([0, 0, 0, 1, 0, 0, 0]).unwrap()).to_u64(), Some(70));
        assert_eq!(weyl_dim(&KTypeWeight::new([1, 0, 0, 0, 0, 0, 1]).unwrap()).to_u64(), Some(63));
    }

    #[test]
    fn freudenthal_trivial_and_adjoint() {
        let triv = freudenthal_weights(&KTypeWeight::trivial(), None).unwrap();
        assert_eq!(triv.dominant.len(), 1);
        assert_eq!(triv.total_dim().to_u64(), Some(1));

        let adj = freudenthal_weights(&KTypeWeight::new([1, 0, 0, 0, 0, 0, 1]).unwrap(), None)
            .unwrap();
        // Zero weight with multiplicity 7 (the rank), plus the 56 roots.
        assert_eq!(adj.multiplicity(&[0; 8]).to_u64(), Some(7));
        assert_eq!(adj.total_dim().to_u64(), Some(63));
    }

    #[test]
    fn freudenthal_p_has_seventy_weights() {
        let beta = KTypeWeight::new([0, 0, 0, 1, 0, 0, 0]).unwrap();
        let w = freudenthal_weights(&beta, None).unwrap();
        assert_eq!(w.total_dim().to_u64(), Some(70));
        // Multiplicity-free: a single dominant orbit of size 70.
        assert_eq!(w.dominant.len(), 1);
    }

    #[test]
    fn freudenthal_cap_reporting() {
        let adj = KTypeWeight::new([1, 0, 0, 0, 0, 0, 1]).unwrap();
        match freudenthal_weights(&adj, Some(1)) {
            Err(RepError::DepthCapExhausted { cap: 1 }) => {}
            other => panic!("expected cap exhaustion, got {other:?}"),
        }
        assert!(freudenthal_weights(&adj, Some(16)).is_ok());
    }

    #[test]
    fn klimyk_small_cases() {
        let triv = KTypeWeight::trivial();
        let mu = KTypeWeight::new([2, 0, 1, 0, 0, 1, 3]).unwrap();
        let d = klimyk_tensor(&triv, &mu, KLIMYK_DIM_CAP).unwrap();
        assert_eq!(d.terms.len(), 1);
        assert_eq!(d.terms.get(&mu.varpi), Some(&1));

        let v8 = KTypeWeight::new([1, 0, 0, 0, 0, 0, 0]).unwrap();
        let d = klimyk_tensor(&v8, &v8, KLIMYK_DIM_CAP).unwrap();
        assert_eq!(d.terms.len(), 2);
        assert_eq!(d.terms.get(&[2, 0, 0, 0, 0, 0, 0]), Some(&1));
        assert_eq!(d.terms.get(&[0, 1, 0, 0, 0, 0, 0]), Some(&1));
    }

    #[test]
    fn klimyk_cap_refusal() {
        let big = KTypeWeight::new([3, 3, 3, 3, 3, 3, 3]).unwrap();
        let mu = KTypeWeight::trivial();
        assert!(matches!(
            klimyk_tensor(&big, &mu, 1000),
            Err(RepError::DimCapExceeded { .. })
        ));
    }

    #[test]
    fn prv_multiplicity_one_in_adjoint_square() {
        let e7 = ctx();
        let adj = KTypeWeight::new([1, 0, 0, 0, 0, 0, 1]).unwrap();
        let prv = e7.prv_component(&adj, &adj);
        assert_eq!(prv, KTypeWeight::trivial());
        let d = klimyk_tensor(&adj, &adj, KLIMYK_DIM_CAP).unwrap();
        assert_eq!(d.terms.get(&prv.varpi), Some(&1));
    }

    #[test]
    fn candidates_at_rho_are_the_rho_ns() {
        let e7 = ctx();
        let rho: Vec<Rat> = (0..7).map(|_| rat(1)).collect();
        let cands = e7.dirac_candidate_ktypes(&rho).unwrap();
        assert_eq!(cands.len(), 72);
        let mut got: Vec<[i64; 7]> = cands
            .iter()
            .map(|c| {
                let mut v = [0i64; 7];
                for (i, q) in c.gamma.iter().enumerate() {
                    v[i] = q.to_integer().to_i64().unwrap();
                }
                v
            })
            .collect();
        got.sort_unstable();
        let mut expect: Vec<[i64; 7]> = e7.chambers.iter().map(|c| c.rho_n_varpi).collect();
        expect.sort_unstable();
        assert_eq!(got, expect);
    }

    #[test]
    fn non_dominant_character_rejected() {
        let e7 = ctx();
        let bad: Vec<Rat> = [1, -1, 0, 0, 0, 0, 0].iter().map(|&x| rat(x)).collect();
        assert!(e7.dirac_candidate_ktypes(&bad).is_err());
    }
}

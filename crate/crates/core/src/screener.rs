//! Non-unitarity screening: the Dirac inequality on K-types and pencils,
//! the sharpened nu-norm bound, infinitesimal-character enumeration, and
//! the census of certificate K-types.

use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::linalg::RatMat;
use crate::norms::KTypeWeight;
use crate::weight::{Frame, Weight};
use crate::{rat, ratio, Rat, E7};

/// An infinitesimal character in zeta coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfChar {
    pub zeta: Vec<Rat>,
}

impl InfChar {
    pub fn new(zeta: Vec<Rat>) -> Self {
        assert_eq!(zeta.len(), 7);
        Self { zeta }
    }

    pub fn from_ints(coords: &[i64; 7]) -> Self {
        Self::new(coords.iter().map(|&c| rat(c)).collect())
    }

    /// Integral in the sense relevant here: non-negative integers.
    pub fn integral(&self) -> bool {
        self.zeta.iter().all(|c| c.denom().is_one() && !c.numer().is_negative())
    }

    pub fn as_ints(&self) -> Option<[i64; 7]> {
        let mut out = [0i64; 7];
        for (i, c) in self.zeta.iter().enumerate() {
            if !c.denom().is_one() {
                return None;
            }
            out[i] = c.numer().to_i64()?;
        }
        Some(out)
    }
}

/// An ingested Cartan-involution matrix with provenance.
#[derive(Clone, Debug)]
pub struct InvolutionMatrix {
    pub matrix: RatMat,
    pub source_tag: String,
}

/// Validation failure for one involution matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvolutionError {
    NotInvolutive,
    NotOrthogonal,
    NotRootPermuting,
}

impl core::fmt::Display for InvolutionError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let what = match self {
            InvolutionError::NotInvolutive => "matrix squared is not the identity",
            InvolutionError::NotOrthogonal => "matrix does not preserve the form",
            InvolutionError::NotRootPermuting => "matrix does not permute the roots",
        };
        write!(f, "{what}")
    }
}

impl core::error::Error for InvolutionError {}

impl InvolutionMatrix {
    pub fn validate(&self, e7: &E7) -> Result<(), InvolutionError> {
        if self.matrix.rows() != 8 || self.matrix.cols() != 8 {
            return Err(InvolutionError::NotInvolutive);
        }
        if self.matrix.mul(&self.matrix) != RatMat::identity(8) {
            return Err(InvolutionError::NotInvolutive);
        }
        if self.matrix.transpose().mul(&self.matrix) != RatMat::identity(8) {
            return Err(InvolutionError::NotOrthogonal);
        }
        for r in &e7.tables.roots {
            let image = self.matrix.apply(&r.amb2.iter().map(|&c| ratio(c, 2)).collect::<Vec<_>>());
            match crate::roots::try_amb2(&image) {
                Some(v) if e7.tables.roots.iter().any(|s| s.amb2 == v) => {}
                _ => return Err(InvolutionError::NotRootPermuting),
            }
        }
        Ok(())
    }
}

/// Outcome of a Dirac-inequality screen.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScreenVerdict {
    /// Spin norm equals the character norm: compatible with non-zero
    /// Dirac cohomology.
    PassesEquality { witness: Witness },
    /// Spin norm strictly above the character norm on the whole scan.
    PassesStrict,
    /// Some pencil member violates the Dirac inequality.
    FailsDiracInequality { witness: Witness },
    /// The nu parameter violates the sharpened norm bound.
    FailsHJBound { nu_norm_sq: Rat },
}

/// The K-type exhibiting a verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub ktype: KTypeWeight,
    pub pencil_index: i64,
    pub spin_norm_sq: Rat,
}

/// Profile of spin norms along a pencil.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilScan {
    /// Squared spin norms for n = 0..profile.len().
    pub profile: Vec<Rat>,
    /// Index attaining the minimum.
    pub min_index: i64,
    pub min_value: Rat,
    /// False when the scan hit the cap before the stop rule fired.
    pub conclusive: bool,
}

/// The sharpened squared-norm threshold 157/2.
pub fn hj_threshold() -> Rat {
    ratio(157, 2)
}

impl E7 {
    /// Compare the spin norm of one K-type with the character norm.
    pub fn dirac_inequality_check(&self, mu: &KTypeWeight, lambda: &InfChar) -> ScreenVerdict {
        let lam_norm = self.zeta_norm_sq(&lambda.zeta);
        let (spin, _) = self.spin_norm_sq(mu);
        let witness = Witness { ktype: *mu, pencil_index: 0, spin_norm_sq: spin.clone() };
        match spin.cmp(&lam_norm) {
            core::cmp::Ordering::Less => ScreenVerdict::FailsDiracInequality { witness },
            core::cmp::Ordering::Equal => ScreenVerdict::PassesEquality { witness },
            core::cmp::Ordering::Greater => ScreenVerdict::PassesStrict,
        }
    }

    /// Scan spin norms along the pencil `mu + n beta` for `n = 0..=cap`,
    /// stopping early once the profile has strictly increased beyond both
    /// the running minimum and the character norm.
    pub fn pencil_min_spin(&self, mu: &KTypeWeight, lambda: &InfChar, cap: u32) -> PencilScan {
        let lam_norm = self.zeta_norm_sq(&lambda.zeta);
        let mut profile: Vec<Rat> = Vec::new();
        let mut min_index = 0i64;
        let mut min_value: Option<Rat> = None;
        let mut conclusive = false;
        for n in 0..=cap {
            let shifted = mu.plus_n_beta(n as i64);
            let (s, _) = self.spin_norm_sq(&shifted);
            profile.push(s.clone());
            match &min_value {
                None => {
                    min_value = Some(s);
                    min_index = n as i64;
                }
                Some(m) => {
                    if s < *m {
                        min_value = Some(s);
                        min_index = n as i64;
                    } else if s > *m && s > lam_norm {
                        conclusive = true;
                        break;
                    }
                }
            }
        }
        PencilScan {
            profile,
            min_index,
            min_value: min_value.expect("cap is inclusive, profile non-empty"),
            conclusive,
        }
    }

    /// Combined screen: the nu-norm bound if nu is supplied, then the
    /// Dirac inequality along the Vogan pencil from `mu`.
    pub fn screen(
        &self,
        mu: &KTypeWeight,
        lambda: &InfChar,
        nu: Option<&[Rat]>,
        cap: u32,
    ) -> Result<ScreenVerdict, Inconclusive> {
        if let Some(nu) = nu {
            let nn = self.zeta_norm_sq(nu);
            if nn >= hj_threshold() {
                return Ok(ScreenVerdict::FailsHJBound { nu_norm_sq: nn });
            }
        }
        let lam_norm = self.zeta_norm_sq(&lambda.zeta);
        let scan = self.pencil_min_spin(mu, lambda, cap);
        if scan.min_value < lam_norm {
            let witness = Witness {
                ktype: mu.plus_n_beta(scan.min_index),
                pencil_index: scan.min_index,
                spin_norm_sq: scan.min_value,
            };
            return Ok(ScreenVerdict::FailsDiracInequality { witness });
        }
        if !scan.conclusive {
            return Err(Inconclusive { cap });
        }
        if let Some(n) = scan.profile.iter().position(|s| *s == lam_norm) {
            let witness = Witness {
                ktype: mu.plus_n_beta(n as i64),
                pencil_index: n as i64,
                spin_norm_sq: lam_norm,
            };
            return Ok(ScreenVerdict::PassesEquality { witness });
        }
        Ok(ScreenVerdict::PassesStrict)
    }

    /// Squared norm of a zeta-coordinate vector (the quadratic form of the
    /// fundamental-weight Gram matrix).
    pub fn nu_norm_sq(&self, nu_zeta: &[Rat]) -> Rat {
        self.zeta_norm_sq(nu_zeta)
    }

    /// The sharpened bound filter. With an ingested involution list this
    /// asks for some theta with `|(Lambda - theta Lambda)/2|^2 < 157/2`.
    /// Without one it quantifies over all involutions in the Weyl group;
    /// since the identity is among them the fallback accepts everything,
    /// an explicit over-approximation of the true filter.
    pub fn hj_filter(&self, lambda: &InfChar, involutions: Option<&[InvolutionMatrix]>) -> bool {
        let list = match involutions {
            None => return true,
            Some(l) => l,
        };
        let lam = Weight::new(lambda.zeta.clone(), Frame::Zeta);
        let ambient = self.tables.to_ambient(&lam).expect("zeta frame");
        let threshold = hj_threshold();
        list.iter().any(|theta| {
            let image = theta.matrix.apply(&ambient);
            let nu: Vec<Rat> =
                ambient.iter().zip(&image).map(|(a, b)| (a - b) / rat(2)).collect();
            self.tables.norm_sq(&nu) < threshold
        })
    }

    /// Visit every integer vector in `[0, max]^7` whose largest coordinate
    /// is exactly `max`, whose minimum is zero, and whose consecutive
    /// support conditions hold: a+c, b+d, c+d, d+e, e+f, f+g all positive.
    pub fn for_each_inf_char<F: FnMut(&[i64; 7])>(&self, max_coord: i64, mut f: F) {
        assert!(max_coord >= 1);
        let mut v = [0i64; 7];
        fn recurse<F: FnMut(&[i64; 7])>(
            slot: usize,
            max: i64,
            has_max: bool,
            has_zero: bool,
            v: &mut [i64; 7],
            f: &mut F,
        ) {
            if slot == 7 {
                if has_max
                    && has_zero
                    && v[0] + v[2] > 0
                    && v[1] + v[3] > 0
                    && v[2] + v[3] > 0
                    && v[3] + v[4] > 0
                    && v[4] + v[5] > 0
                    && v[5] + v[6] > 0
                {
                    f(v);
                }
                return;
            }
            for c in 0..=max {
                v[slot] = c;
                recurse(slot + 1, max, has_max || c == max, has_zero || c == 0, v, f);
            }
            v[slot] = 0;
        }
        recurse(0, max_coord, false, false, &mut v, &mut f);
    }

    /// Enumerate the characters of [`Self::for_each_inf_char`], optionally
    /// keeping only those passing the involution filter.
    pub fn enumerate_inf_chars(
        &self,
        max_coord: i64,
        involutions: Option<&[InvolutionMatrix]>,
    ) -> Vec<InfChar> {
        let mut out = Vec::new();
        self.for_each_inf_char(max_coord, |v| {
            let lam = InfChar::from_ints(v);
            if involutions.is_none() || self.hj_filter(&lam, involutions) {
                out.push(lam);
            }
        });
        out
    }

    /// Count-only variant for large coordinate bounds.
    pub fn count_inf_chars(&self, max_coord: i64) -> u64 {
        let mut n = 0u64;
        self.for_each_inf_char(max_coord, |_| n += 1);
        n
    }

    /// True when every chamber image of the character has a vanishing
    /// varpi coordinate, so no dominant k-weight can match it.
    pub fn lemma_vanishing_check(&self, lambda: &InfChar) -> bool {
        let lam = Weight::new(lambda.zeta.clone(), Frame::Zeta);
        let ambient = self.tables.to_ambient(&lam).expect("zeta frame");
        self.chambers.iter().all(|c| {
            let image = c.w.apply(&ambient);
            (0..7).any(|i| {
                self.tables.pair_rat_amb2(&image, &self.tables.simple_k2[i]).is_zero()
            })
        })
    }

    /// Filter the u-small census down to the certificate K-types: spin
    /// norm minus lambda norm at least 157/2.
    pub fn certs_census(&self, usmall: &[KTypeWeight]) -> Vec<CertEntry> {
        let threshold = hj_threshold();
        let mut out: Vec<CertEntry> = usmall
            .iter()
            .filter_map(|mu| {
                let (spin, _) = self.spin_norm_sq(mu);
                let lambda = self.lambda_norm_sq(mu);
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
}

/// A pencil scan that hit its cap before the stop rule fired.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inconclusive {
    pub cap: u32,
}

impl core::fmt::Display for Inconclusive {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "pencil scan inconclusive at cap {}", self.cap)
    }
}

impl core::error::Error for Inconclusive {}

/// One certificate K-type with its two squared norms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertEntry {
    pub ktype: KTypeWeight,
    pub spin_norm_sq: Rat,
    pub lambda_norm_sq: Rat,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> &'static E7 {
        use std::sync::OnceLock;
        static CTX: OnceLock<E7> = OnceLock::new();
        CTX.get_or_init(E7::new)
    }

    #[test]
    fn nu_norm_examples() {
        let e7 = ctx();
        let q = |v: &[i64; 7]| -> Vec<Rat> { v.iter().map(|&x| rat(x)).collect() };
        assert_eq!(e7.nu_norm_sq(&q(&[1, 1, 1, 0, 1, 0, 1])), ratio(159, 2));
        assert_eq!(e7.nu_norm_sq(&q(&[1, 1, 1, 0, 1, 1, 1])), ratio(231, 2));
        assert_eq!(e7.nu_norm_sq(&q(&[1, 1, 1, 1, 1, 1, 1])), ratio(399, 2));
        assert_eq!(e7.nu_norm_sq(&q(&[0; 7])), rat(0));
        assert_eq!(e7.nu_norm_sq(&q(&[1, 0, 0, 1, 0, 1, 0])), rat(42));
    }

    #[test]
    fn dirac_inequality_examples() {
        let e7 = ctx();
        let lam42 = InfChar::from_ints(&[1, 0, 0, 1, 0, 1, 0]);
        let eq = e7.dirac_inequality_check(
            &KTypeWeight::new([0, 1, 0, 1, 0, 0, 8]).unwrap(),
            &lam42,
        );
        assert!(matches!(eq, ScreenVerdict::PassesEquality { .. }));
        let strict = e7.dirac_inequality_check(
            &KTypeWeight::new([0, 0, 0, 0, 1, 2, 7]).unwrap(),
            &lam42,
        );
        assert_eq!(strict, ScreenVerdict::PassesStrict);
        let rho = InfChar::from_ints(&[1; 7]);
        let triv = e7.dirac_inequality_check(&KTypeWeight::trivial(), &rho);
        assert!(matches!(triv, ScreenVerdict::PassesEquality { .. }));
    }

    #[test]
    fn pencil_cap_zero() {
        let e7 = ctx();
        let lam = InfChar::from_ints(&[1; 7]);
        let scan = e7.pencil_min_spin(&KTypeWeight::trivial(), &lam, 0);
        assert_eq!(scan.profile.len(), 1);
        assert_eq!(scan.min_index, 0);
        assert!(!scan.conclusive);
    }

    #[test]
    fn minimal_representation_pencil() {
        let e7 = ctx();
        let lam = InfChar::from_ints(&[1, 1, 1, 0, 1, 1, 1]);
        let lam_norm = e7.zeta_norm_sq(&lam.zeta);
        assert_eq!(lam_norm, ratio(231, 2));
        let mut equal = alloc::vec::Vec::new();
        for n in 0..=10i64 {
            let (s, _) = e7.spin_norm_sq(&KTypeWeight::trivial().plus_n_beta(n));
            if s == lam_norm {
                equal.push(n);
            }
        }
        assert_eq!(equal, alloc::vec![3, 4, 5, 6]);
        // The early-stopping scan finds the same minimum.
        let scan = e7.pencil_min_spin(&KTypeWeight::trivial(), &lam, 10);
        assert_eq!(scan.min_value, lam_norm);
        assert!(scan.conclusive);
    }

    #[test]
    fn hj_fallback_always_passes() {
        let e7 = ctx();
        let lam = InfChar::from_ints(&[12, 12, 12, 12, 12, 12, 12]);
        assert!(e7.hj_filter(&lam, None));
    }

    #[test]
    fn hj_with_synthetic_involutions() {
        let e7 = ctx();
        // A simple reflection is an involution preserving the form and the
        // roots; lambda = rho gives nu = B(rho, alpha) alpha / 2 with norm
        // 1/2 < 157/2, so the filter passes.
        let refl = crate::weyl::reflection_matrix(&e7.tables.simple_g2[0]);
        let theta = InvolutionMatrix { matrix: refl, source_tag: "s1".into() };
        theta.validate(e7).unwrap();
        let lam = InfChar::from_ints(&[1; 7]);
        assert!(e7.hj_filter(&lam, Some(core::slice::from_ref(&theta))));
        // The negated identity is also a valid involution; it gives
        // nu = Lambda, whose norm 399/2 violates the bound.
        let mut neg = RatMat::identity(8);
        for i in 0..8 {
            neg[(i, i)] = rat(-1);
        }
        let minus = InvolutionMatrix { matrix: neg, source_tag: "-1".into() };
        minus.validate(e7).unwrap();
        assert!(!e7.hj_filter(&lam, Some(core::slice::from_ref(&minus))));
    }

    #[test]
    fn involution_validation_rejects_bad_matrices() {
        let e7 = ctx();
        let mut m = RatMat::identity(8);
        m[(0, 0)] = rat(2);
        let bad = InvolutionMatrix { matrix: m, source_tag: "scale".into() };
        assert!(bad.validate(e7).is_err());
        // An orthogonal involution that does not permute the roots:
        // reflection in a coordinate axis.
        let mut m = RatMat::identity(8);
        m[(0, 0)] = rat(-1);
        let bad = InvolutionMatrix { matrix: m, source_tag: "axis".into() };
        assert_eq!(bad.validate(e7), Err(InvolutionError::NotRootPermuting));
    }

    #[test]
    fn vanishing_lemma_examples() {
        let e7 = ctx();
        assert!(e7.lemma_vanishing_check(&InfChar::from_ints(&[0, 1, 0, 1, 1, 1, 1])));
        assert!(e7.lemma_vanishing_check(&InfChar::from_ints(&[0; 7])));
        assert!(!e7.lemma_vanishing_check(&InfChar::from_ints(&[1; 7])));
    }

    #[test]
    fn inf_char_invariants() {
        assert!(InfChar::from_ints(&[0, 1, 2, 0, 0, 3, 1]).integral());
        assert!(!InfChar::new(alloc::vec![
            ratio(1, 2),
            rat(1),
            rat(1),
            rat(0),
            rat(1),
            rat(0),
            rat(1)
        ])
        .integral());
    }
}

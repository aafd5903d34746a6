//! Lambda norm, spin norm, PRV components, and u-small membership.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::cone::Projection;
use crate::lp::{self, Feasibility};
use crate::linalg::RatMat;
use crate::su8::{self, X8};
use crate::weight::{Frame, Weight};
use crate::{rat, ratio, Rat, E7};

/// A dominant k-weight in varpi coordinates. Genuine K-types additionally
/// satisfy the parity condition `a + c + e + g` even; odd ones are k-types
/// only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KTypeWeight {
    pub varpi: [i64; 7],
}

/// Construction failure for [`KTypeWeight`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonDominantError(pub [i64; 7]);

impl core::fmt::Display for NonDominantError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "k-weight {:?} has a negative coordinate", self.0)
    }
}

impl core::error::Error for NonDominantError {}

impl KTypeWeight {
    pub fn new(varpi: [i64; 7]) -> Result<Self, NonDominantError> {
        if varpi.iter().any(|&c| c < 0) {
            return Err(NonDominantError(varpi));
        }
        Ok(Self { varpi })
    }

    pub fn trivial() -> Self {
        Self { varpi: [0; 7] }
    }

    /// The parity criterion distinguishing K-types among k-types.
    pub fn is_k_type(&self) -> bool {
        (self.varpi[0] + self.varpi[2] + self.varpi[4] + self.varpi[6]) % 2 == 0
    }

    /// Contragredient: reverse the coordinates.
    pub fn contragredient(&self) -> Self {
        let mut v = self.varpi;
        v.reverse();
        Self { varpi: v }
    }

    pub fn x8(&self) -> X8 {
        su8::from_varpi(&self.varpi)
    }

    pub fn weight(&self) -> Weight {
        Weight::from_ints(&self.varpi, Frame::Varpi)
    }

    /// Shift along the pencil direction: `self + n beta`.
    pub fn plus_n_beta(&self, n: i64) -> Self {
        let mut v = self.varpi;
        v[3] += n;
        Self { varpi: v }
    }
}

/// Everything the `norm` surface reports for one k-type.
#[derive(Clone, Debug)]
pub struct NormReport {
    pub ktype: KTypeWeight,
    pub is_k_type: bool,
    pub lambda_a: Weight,
    pub lambda_norm_sq: Rat,
    pub spin_norm_sq: Rat,
    pub achieving_chambers: Vec<usize>,
    pub usmall: bool,
}

impl E7 {
    /// Spin norm squared of a dominant k-weight, with every chamber
    /// achieving the minimum.
    ///
    /// The minimum over the 72 chambers of the squared norm of
    /// `{mu - rho_n_j} + rho_c`, computed entirely in scaled integer A7
    /// coordinates (braces denote the dominant representative).
    pub fn spin_norm_sq(&self, mu: &KTypeWeight) -> (Rat, Vec<usize>) {
        let x = mu.x8();
        let mut best: i64 = i64::MAX;
        let mut achieving = Vec::new();
        for (j, rn) in self.rho_n_x8.iter().enumerate() {
            let shifted = su8::dominant(&su8::sub(&x, rn));
            let s = su8::norm64(&su8::add(&shifted, &su8::RHO_C_X8));
            if s < best {
                best = s;
                achieving.clear();
                achieving.push(j);
            } else if s == best {
                achieving.push(j);
            }
        }
        (ratio(best, 64), achieving)
    }

    /// The chambers whose closed cone contains `mu + 2 rho_c`.
    pub fn admissible_chambers(&self, mu: &KTypeWeight) -> Vec<usize> {
        let mut shifted = [0i64; 7];
        for i in 0..7 {
            shifted[i] = mu.varpi[i] + 2;
        }
        (0..self.chambers.len())
            .filter(|&j| {
                self.alpha_pair[j].iter().all(|col| {
                    let mut s = 0i64;
                    for i in 0..7 {
                        s += shifted[i] * col[i];
                    }
                    s >= 0
                })
            })
            .collect()
    }

    /// Nearest point of chamber `j`'s closed dominant cone to an ambient
    /// weight, with the coefficient certificate.
    pub fn project_dominant_cone(&self, xi: &Weight, j: usize) -> (Weight, Projection) {
        let ambient = self.tables.to_ambient(xi).expect("weight in root span");
        let b: alloc::vec::Vec<Rat> =
            (0..7).map(|i| crate::linalg::dot(&ambient, &self.chambers[j].fw_image[i])).collect();
        let proj = self.projector.project(&b);
        let mut point = alloc::vec![Rat::zero(); 8];
        for (k, c) in proj.coeffs.iter().enumerate() {
            if !c.is_zero() {
                for t in 0..8 {
                    point[t] += c * &self.chambers[j].fw_image[k][t];
                }
            }
        }
        (Weight::new(point, Frame::Ambient), proj)
    }

    /// Project `mu + 2 rho_c - rho_j` onto chamber `j`'s dominant cone.
    pub fn lambda_a_in_chamber(&self, mu: &KTypeWeight, j: usize) -> (Weight, Projection) {
        let mut b: [Rat; 7] = core::array::from_fn(|_| Rat::zero());
        for (k, bk) in b.iter_mut().enumerate() {
            let mut acc = Rat::zero();
            for i in 0..7 {
                let coeff = mu.varpi[i] + 2;
                if coeff != 0 {
                    acc += rat(coeff) * &self.zeta_pair[j][k][i];
                }
            }
            acc -= self.rho_zeta[k].clone();
            *bk = acc;
        }
        let proj = self.projector.project(&b);
        let mut ambient = alloc::vec![Rat::zero(); 8];
        for (k, c) in proj.coeffs.iter().enumerate() {
            if !c.is_zero() {
                for t in 0..8 {
                    ambient[t] += c * &self.chambers[j].fw_image[k][t];
                }
            }
        }
        (Weight::new(ambient, Frame::Ambient), proj)
    }

    /// The lambda parameter of a dominant k-weight: project
    /// `mu + 2 rho_c - rho_j` onto the cone of any chamber whose closed
    /// cone contains `mu + 2 rho_c`. The result does not depend on that
    /// choice.
    pub fn lambda_a(&self, mu: &KTypeWeight) -> Weight {
        let j = *self
            .admissible_chambers(mu)
            .first()
            .expect("the compact cone is covered by the 72 chambers");
        self.lambda_a_in_chamber(mu, j).0
    }

    /// Squared lambda norm.
    pub fn lambda_norm_sq(&self, mu: &KTypeWeight) -> Rat {
        let j = *self
            .admissible_chambers(mu)
            .first()
            .expect("the compact cone is covered by the 72 chambers");
        self.lambda_a_in_chamber(mu, j).1.norm_sq
    }

    /// The component of `E_mu (x) E_nu` that always occurs exactly once:
    /// the dominant representative of `mu + w0 nu`.
    pub fn prv_component(&self, mu: &KTypeWeight, nu: &KTypeWeight) -> KTypeWeight {
        let x = su8::add(&mu.x8(), &su8::w0(&nu.x8()));
        let dom = su8::dominant(&x);
        KTypeWeight { varpi: su8::to_varpi(&dom).expect("integral weight") }
    }

    /// Zonotope membership: is `mu` a sum of the positive noncompact roots
    /// with coefficients in [-1, 1]?
    ///
    /// A failed support inequality is a certificate of non-membership and
    /// settles the question immediately; otherwise exact LP feasibility
    /// decides and provides the coefficient witness.
    pub fn is_usmall(&self, mu: &KTypeWeight) -> bool {
        if self.usmall_support_separator(mu).is_some() {
            return false;
        }
        self.usmall_lp(&mu.x8())
    }

    /// Index of a violated support inequality (a separating chamber
    /// generator direction), if any. For dominant weights the support
    /// function of the hull is linear on every chamber, so these 504
    /// inequalities are a complete description.
    pub fn usmall_support_separator(&self, mu: &KTypeWeight) -> Option<usize> {
        self.usmall_face8.iter().position(|(row, bound)| {
            let mut lhs = 0i64;
            for k in 0..7 {
                lhs += mu.varpi[k] * row[k];
            }
            lhs > *bound
        })
    }

    fn usmall_lp(&self, x: &X8) -> bool {
        // Equality system over the first seven scaled coordinates; the
        // eighth is implied because both sides sum to zero.
        let mut rows = alloc::vec::Vec::with_capacity(7);
        for r in 0..7 {
            rows.push(
                self.noncompact_x8.iter().map(|g| rat(g[r])).collect::<alloc::vec::Vec<_>>(),
            );
        }
        let a = RatMat::from_rows(rows);
        let b: Vec<Rat> = (0..7).map(|r| rat(x[r])).collect();
        let lo = alloc::vec![rat(-1); self.noncompact_x8.len()];
        let hi = alloc::vec![rat(1); self.noncompact_x8.len()];
        matches!(lp::feasible(&a, &b, &lo, &hi), Feasibility::Feasible(_))
    }

    /// 64 times the support function of the zonotope in direction `u`.
    fn support64(&self, u: &X8) -> i64 {
        self.noncompact_x8
            .iter()
            .map(|g| {
                let mut d = 0i64;
                for k in 0..8 {
                    d += g[k] * u[k];
                }
                d.abs()
            })
            .sum()
    }

    /// Per-coordinate caps for the u-small enumeration, from the support
    /// function evaluated at the simple-root and fundamental-weight
    /// directions of the compact system.
    pub fn usmall_coordinate_caps(&self) -> [i64; 7] {
        core::array::from_fn(|i| {
            let mut gamma = [0i64; 7];
            // gamma_i in varpi coordinates is the i-th row of the A7
            // Cartan matrix.
            gamma[i] = 2;
            if i > 0 {
                gamma[i - 1] = -1;
            }
            if i < 6 {
                gamma[i + 1] = -1;
            }
            let cap_gamma = self.support64(&su8::from_varpi(&gamma)) / 64;
            let mut varpi = [0i64; 7];
            varpi[i] = 1;
            let w = su8::from_varpi(&varpi);
            // B(mu, varpi_i) <= h(varpi_i) and B(varpi_i, varpi_i) > 0
            // bound the i-th coefficient as well.
            let h = self.support64(&w);
            let g_ii = su8::norm64(&w);
            let cap_varpi = h / ((i as i64 + 1) * (8 - (i as i64 + 1)) * 8);
            debug_assert_eq!(g_ii, (i as i64 + 1) * (8 - (i as i64 + 1)) * 8);
            cap_gamma.min(cap_varpi)
        })
    }

    /// Largest squared norm (times 64) among the zonotope generators'
    /// vertex sums, an outer ball for the hull.
    pub fn usmall_ball_bound64(&self) -> i64 {
        self.rho_n_x8.iter().map(|rn| 4 * su8::norm64(rn)).max().unwrap()
    }

    /// All dominant K-type candidates inside the enumeration box and the
    /// outer ball, before the exact membership test. The census applies
    /// [`Self::is_usmall`] to each.
    pub fn usmall_candidates(&self) -> Vec<KTypeWeight> {
        let caps = self.usmall_coordinate_caps();
        let ball = self.usmall_ball_bound64();
        let basis: [X8; 7] = core::array::from_fn(|i| {
            let mut a = [0i64; 7];
            a[i] = 1;
            su8::from_varpi(&a)
        });
        let mut out = Vec::new();
        let mut coords = [0i64; 7];
        fn recurse(
            depth: usize,
            acc: &X8,
            coords: &mut [i64; 7],
            caps: &[i64; 7],
            ball: i64,
            basis: &[X8; 7],
            out: &mut Vec<KTypeWeight>,
        ) {
            if su8::norm64(acc) > ball {
                return;
            }
            if depth == 7 {
                let parity = coords[0] + coords[2] + coords[4] + coords[6];
                if parity % 2 == 0 {
                    out.push(KTypeWeight { varpi: *coords });
                }
                return;
            }
            let mut cur = *acc;
            for v in 0..=caps[depth] {
                coords[depth] = v;
                recurse(depth + 1, &cur, coords, caps, ball, basis, out);
                cur = su8::add(&cur, &basis[depth]);
                if su8::norm64(&cur) > ball && v + 1 <= caps[depth] {
                    // Adding more of a fixed direction only grows the norm.
                    break;
                }
            }
            coords[depth] = 0;
        }
        recurse(0, &[0i64; 8], &mut coords, &caps, ball, &basis, &mut out);
        out
    }

    /// Enumerate every u-small K-type (sequential; the census).
    pub fn enumerate_usmall_ktypes(&self) -> Vec<KTypeWeight> {
        let mut found: Vec<KTypeWeight> = self
            .usmall_candidates()
            .into_iter()
            .filter(|mu| self.is_usmall(mu))
            .collect();
        found.sort();
        found
    }

    /// Full [`NormReport`] for one k-type.
    pub fn norm_report(&self, mu: &KTypeWeight) -> NormReport {
        let (spin, achieving) = self.spin_norm_sq(mu);
        let j = *self.admissible_chambers(mu).first().expect("admissible chamber");
        let (lambda_a, proj) = self.lambda_a_in_chamber(mu, j);
        NormReport {
            ktype: *mu,
            is_k_type: mu.is_k_type(),
            lambda_a,
            lambda_norm_sq: proj.norm_sq,
            spin_norm_sq: spin,
            achieving_chambers: achieving,
            usmall: self.is_usmall(mu),
        }
    }
}

//! Construction of the E7 root system in the coordinates used throughout:
//! 126 roots in R^8, the compact/noncompact split for the real form with
//! maximal compact su(8), fundamental weight bases for both systems, and
//! exact frame conversions.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::linalg::{self, RatMat};
use crate::weight::{Frame, Weight};
use crate::{rat, ratio, Rat};

/// Ambient vector with doubled integer coordinates (`2 * value`), the
/// representation used by the integer fast paths.
pub type Amb2 = [i64; 8];

/// One root with its expansion over the simple roots.
#[derive(Clone, Debug)]
pub struct Root {
    /// Doubled ambient coordinates.
    pub amb2: Amb2,
    /// Integer coefficients over alpha_1..alpha_7.
    pub coeffs: [i64; 7],
    /// Positive for the fixed base system.
    pub positive: bool,
    /// Compact root (root space inside k).
    pub compact: bool,
}

/// The full coordinate tables for E7(7).
pub struct RootSystemTables {
    /// All 126 roots, sorted by coefficient vector.
    pub roots: Vec<Root>,
    /// Indices of the 63 positive roots.
    pub positive: Vec<usize>,
    /// Indices of the 28 positive compact roots.
    pub positive_compact: Vec<usize>,
    /// Indices of the 35 positive noncompact roots.
    pub positive_noncompact: Vec<usize>,
    /// Simple roots alpha_1..alpha_7 (doubled).
    pub simple_g2: [Amb2; 7],
    /// Simple roots gamma_1..gamma_7 of the compact subsystem (doubled).
    pub simple_k2: [Amb2; 7],
    /// Fundamental weights zeta_1..zeta_7 (ambient, exact).
    pub fw_g: Vec<Vec<Rat>>,
    /// Fundamental weights varpi_1..varpi_7 (ambient, exact).
    pub fw_k: Vec<Vec<Rat>>,
    /// Half sum of positive roots (ambient).
    pub rho: Vec<Rat>,
    /// Half sum of positive compact roots (ambient).
    pub rho_c: Vec<Rat>,
    /// Doubled integer copies of rho and rho_c.
    pub rho2: Amb2,
    pub rho_c2: Amb2,
    /// Pairwise form values B(zeta_i, zeta_j).
    pub gram_zeta: RatMat,
    /// Pairwise form values B(varpi_i, varpi_j).
    pub gram_varpi: RatMat,
}

/// Frame-conversion failures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConvertError {
    /// Ambient vector with a component orthogonal to the root span.
    SpanViolation,
}

impl core::fmt::Display for ConvertError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ConvertError::SpanViolation => {
                write!(f, "ambient vector lies outside the span of the roots")
            }
        }
    }
}

impl core::error::Error for ConvertError {}

pub(crate) fn dot2(a: &Amb2, b: &Amb2) -> i64 {
    let mut s = 0;
    for i in 0..8 {
        s += a[i] * b[i];
    }
    s
}

/// Form value of two doubled vectors: `B(x, y)` times 4.
pub fn pairing4(a: &Amb2, b: &Amb2) -> i64 {
    dot2(a, b)
}

/// Reflect the doubled vector `v` in the root `alpha` (doubled). Requires
/// the pairing to be integral, which holds on every lattice this crate
/// traverses.
pub fn reflect2(v: &Amb2, alpha: &Amb2) -> Amb2 {
    let num = dot2(v, alpha);
    debug_assert_eq!(num % 4, 0, "non-integral pairing in reflection");
    let q = num / 4;
    let mut out = *v;
    for i in 0..8 {
        out[i] -= q * alpha[i];
    }
    out
}

fn amb2_to_rat(v: &Amb2) -> Vec<Rat> {
    v.iter().map(|&c| ratio(c, 2)).collect()
}

pub(crate) fn try_amb2(v: &[Rat]) -> Option<Amb2> {
    use num_traits::ToPrimitive;
    let mut out = [0i64; 8];
    for (i, c) in v.iter().enumerate() {
        let doubled = c * rat(2);
        if !doubled.denom().is_one() {
            return None;
        }
        out[i] = doubled.numer().to_i64()?;
    }
    Some(out)
}

impl RootSystemTables {
    /// Build every table, verifying the structural facts the rest of the
    /// crate relies on. A violated check is an implementation bug, so the
    /// constructor panics rather than returning an error.
    pub fn build() -> Self {
        let simple_g2: [Amb2; 7] = [
            [1, -1, -1, -1, -1, -1, -1, 1],
            [2, 2, 0, 0, 0, 0, 0, 0],
            [-2, 2, 0, 0, 0, 0, 0, 0],
            [0, -2, 2, 0, 0, 0, 0, 0],
            [0, 0, -2, 2, 0, 0, 0, 0],
            [0, 0, 0, -2, 2, 0, 0, 0],
            [0, 0, 0, 0, -2, 2, 0, 0],
        ];
        for a in &simple_g2 {
            assert_eq!(dot2(a, a), 8, "simple root squared length");
        }

        // Close the simple roots under the simple reflections, tracking
        // integer coefficients over the simple basis.
        let mut seen: hashbrown::HashSet<Amb2> = hashbrown::HashSet::new();
        let mut queue: Vec<(Amb2, [i64; 7])> = Vec::new();
        for (i, a) in simple_g2.iter().enumerate() {
            let mut c = [0i64; 7];
            c[i] = 1;
            seen.insert(*a);
            queue.push((*a, c));
        }
        let mut idx = 0;
        while idx < queue.len() {
            let (v, c) = queue[idx];
            idx += 1;
            for (i, a) in simple_g2.iter().enumerate() {
                let num = dot2(&v, a);
                debug_assert_eq!(num % 4, 0);
                let q = num / 4;
                let mut nv = v;
                let mut nc = c;
                for k in 0..8 {
                    nv[k] -= q * a[k];
                }
                nc[i] -= q;
                if seen.insert(nv) {
                    queue.push((nv, nc));
                }
            }
        }
        assert_eq!(queue.len(), 126, "E7 root count");

        let mut entries: Vec<(Amb2, [i64; 7])> = queue;
        entries.sort_by_key(|(_, c)| *c);
        let roots: Vec<Root> = entries
            .into_iter()
            .map(|(amb2, coeffs)| {
                assert_eq!(dot2(&amb2, &amb2), 8, "root squared length");
                let pos = coeffs.iter().all(|&x| x >= 0);
                let neg = coeffs.iter().all(|&x| x <= 0);
                assert!(pos || neg, "root with mixed-sign coefficients");
                Root { amb2, coeffs, positive: pos, compact: coeffs[1] % 2 == 0 }
            })
            .collect();

        let positive: Vec<usize> =
            roots.iter().enumerate().filter(|(_, r)| r.positive).map(|(i, _)| i).collect();
        assert_eq!(positive.len(), 63);
        let positive_compact: Vec<usize> =
            positive.iter().copied().filter(|&i| roots[i].compact).collect();
        let positive_noncompact: Vec<usize> =
            positive.iter().copied().filter(|&i| !roots[i].compact).collect();
        assert_eq!(roots.iter().filter(|r| r.compact).count(), 56);
        assert_eq!(roots.iter().filter(|r| !r.compact).count(), 70);
        assert_eq!(positive_compact.len(), 28);
        assert_eq!(positive_noncompact.len(), 35);

        // gamma_1 = alpha_1, gamma_i = alpha_{i+1} for 2 <= i <= 6, and
        // gamma_7 = alpha_1 + 2 alpha_2 + 2 alpha_3 + 3 alpha_4 + 2 alpha_5 + alpha_6.
        let gamma7_coeffs: [i64; 7] = [1, 2, 2, 3, 2, 1, 0];
        let mut gamma7 = [0i64; 8];
        for (c, a) in gamma7_coeffs.iter().zip(&simple_g2) {
            for k in 0..8 {
                gamma7[k] += c * a[k];
            }
        }
        let simple_k2: [Amb2; 7] = [
            simple_g2[0],
            simple_g2[2],
            simple_g2[3],
            simple_g2[4],
            simple_g2[5],
            simple_g2[6],
            gamma7,
        ];
        // The gammas must be compact, positive, and form an A7 diagram.
        for (i, g) in simple_k2.iter().enumerate() {
            let r = roots.iter().find(|r| r.amb2 == *g).expect("gamma is a root");
            assert!(r.compact && r.positive, "gamma_{} compact positive", i + 1);
            for (j, h) in simple_k2.iter().enumerate() {
                let expect = if i == j {
                    8
                } else if i + 1 == j || j + 1 == i {
                    -4
                } else {
                    0
                };
                assert_eq!(dot2(g, h), expect, "A7 Cartan entry ({i},{j})");
            }
        }

        // Half sums.
        let mut rho2 = [0i64; 8];
        for &i in &positive {
            for k in 0..8 {
                rho2[k] += roots[i].amb2[k];
            }
        }
        for c in &mut rho2 {
            *c /= 2;
        }
        let mut rho_c2 = [0i64; 8];
        for &i in &positive_compact {
            for k in 0..8 {
                rho_c2[k] += roots[i].amb2[k];
            }
        }
        for c in &mut rho_c2 {
            *c /= 2;
        }
        assert_eq!(rho_c2, [-5, -3, -1, 1, 3, 5, -7, 7], "rho_c coordinates");
        assert_eq!(dot2(&rho2, &rho2), 798, "rho squared norm, 4 * 399/2");
        assert_eq!(dot2(&rho_c2, &rho_c2), 4 * 42, "rho_c squared norm");

        // Fundamental weights: solve against the simple roots plus the
        // span condition (orthogonality to e7 + e8).
        let fw_g = fundamental_weights(&simple_g2);
        let fw_k = fundamental_weights(&simple_k2);

        let gram_zeta = gram(&fw_g);
        let gram_varpi = gram(&fw_k);

        let rho = amb2_to_rat(&rho2);
        let rho_c = amb2_to_rat(&rho_c2);

        let tables = Self {
            roots,
            positive,
            positive_compact,
            positive_noncompact,
            simple_g2,
            simple_k2,
            fw_g,
            fw_k,
            rho,
            rho_c,
            rho2,
            rho_c2,
            gram_zeta,
            gram_varpi,
        };
        tables.validate();
        tables
    }

    fn validate(&self) {
        // B(zeta_i, alpha_j) = delta_ij and B(varpi_i, gamma_j) = delta_ij.
        for i in 0..7 {
            for j in 0..7 {
                let expect = if i == j { rat(1) } else { rat(0) };
                assert_eq!(self.pair_rat_amb2(&self.fw_g[i], &self.simple_g2[j]), expect);
                assert_eq!(self.pair_rat_amb2(&self.fw_k[i], &self.simple_k2[j]), expect);
            }
        }
        // rho is the sum of the fundamental weights; same for rho_c.
        let mut zsum = vec![Rat::zero(); 8];
        let mut wsum = vec![Rat::zero(); 8];
        for i in 0..7 {
            zsum = linalg::add(&zsum, &self.fw_g[i]);
            wsum = linalg::add(&wsum, &self.fw_k[i]);
        }
        assert_eq!(zsum, self.rho);
        assert_eq!(wsum, self.rho_c);
        // rho_c in the zeta frame is [1,-4,1,1,1,1,1].
        let rc = Weight::new(self.rho_c.clone(), Frame::Ambient);
        let z = self.convert(&rc, Frame::Zeta).unwrap();
        assert_eq!(z.as_ints().unwrap(), vec![1, -4, 1, 1, 1, 1, 1]);
        // The varpi Gram matrix is the inverse A7 Cartan matrix.
        for i in 0..7 {
            for j in 0..7 {
                let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
                let expect = ratio(((lo + 1) * (8 - (hi + 1))) as i64, 8);
                assert_eq!(self.gram_varpi[(i, j)], expect);
            }
        }
    }

    /// Form value `B(x, y)` of a rational ambient vector against a doubled
    /// integer vector.
    pub fn pair_rat_amb2(&self, x: &[Rat], y: &Amb2) -> Rat {
        let mut acc = Rat::zero();
        for i in 0..8 {
            if y[i] != 0 {
                acc += &x[i] * ratio(y[i], 2);
            }
        }
        acc
    }

    /// Euclidean form on ambient rational vectors.
    pub fn form(&self, x: &[Rat], y: &[Rat]) -> Rat {
        linalg::dot(x, y)
    }

    /// Squared norm of an ambient rational vector.
    pub fn norm_sq(&self, x: &[Rat]) -> Rat {
        linalg::dot(x, x)
    }

    /// Exact frame conversion. Round-trips are exact; ambient inputs must
    /// lie in the root span.
    pub fn convert(&self, w: &Weight, target: Frame) -> Result<Weight, ConvertError> {
        let ambient = self.to_ambient(w)?;
        if target == Frame::Ambient {
            return Ok(Weight::new(ambient, Frame::Ambient));
        }
        let coords = match target {
            Frame::Zeta | Frame::AtlasK => {
                (0..7).map(|i| self.pair_rat_amb2(&ambient, &self.simple_g2[i])).collect()
            }
            Frame::Varpi => {
                (0..7).map(|i| self.pair_rat_amb2(&ambient, &self.simple_k2[i])).collect()
            }
            Frame::Ambient => unreachable!(),
        };
        Ok(Weight::new(coords, target))
    }

    /// Ambient coordinates of a weight in any frame.
    pub fn to_ambient(&self, w: &Weight) -> Result<Vec<Rat>, ConvertError> {
        match w.frame {
            Frame::Ambient => {
                let tail = &w.coords[6] + &w.coords[7];
                if !tail.is_zero() {
                    return Err(ConvertError::SpanViolation);
                }
                Ok(w.coords.clone())
            }
            Frame::Zeta | Frame::AtlasK => Ok(self.combine(&self.fw_g, &w.coords)),
            Frame::Varpi => Ok(self.combine(&self.fw_k, &w.coords)),
        }
    }

    fn combine(&self, basis: &[Vec<Rat>], coeffs: &[Rat]) -> Vec<Rat> {
        let mut acc = vec![Rat::zero(); 8];
        for (c, b) in coeffs.iter().zip(basis) {
            if !c.is_zero() {
                for k in 0..8 {
                    acc[k] += c * &b[k];
                }
            }
        }
        acc
    }

    /// The K-type coordinate shift: integer labels `y` from the external
    /// parameterization to varpi coordinates
    /// `[y1, y3, y4, y5, y6, y7, y1 + 2 y2 + 2 y3 + 3 y4 + 2 y5 + y6]`.
    /// The result is flagged non-dominant when some entry is negative.
    pub fn atlas_k_shift(&self, y: &[i64; 7]) -> (Weight, bool) {
        let coords = [
            y[0],
            y[2],
            y[3],
            y[4],
            y[5],
            y[6],
            y[0] + 2 * y[1] + 2 * y[2] + 3 * y[3] + 2 * y[4] + y[5],
        ];
        let dominant = coords.iter().all(|&c| c >= 0);
        (Weight::from_ints(&coords, Frame::Varpi), dominant)
    }

    /// beta, the highest weight of p as a k-module, in ambient form.
    pub fn beta_amb2(&self) -> Amb2 {
        let coeffs: [i64; 7] = [1, 1, 2, 3, 3, 2, 1];
        let mut v = [0i64; 8];
        for (c, a) in coeffs.iter().zip(&self.simple_g2) {
            for k in 0..8 {
                v[k] += c * a[k];
            }
        }
        v
    }
}

fn fundamental_weights(simples: &[Amb2; 7]) -> Vec<Vec<Rat>> {
    let mut rows: Vec<Vec<Rat>> = simples.iter().map(|a| amb2_to_rat(a)).collect();
    // Span condition: orthogonal to e7 + e8.
    let mut span = vec![Rat::zero(); 8];
    span[6] = rat(1);
    span[7] = rat(1);
    rows.push(span);
    let m = RatMat::from_rows(rows);
    (0..7)
        .map(|i| {
            let mut rhs = vec![Rat::zero(); 8];
            rhs[i] = rat(1);
            m.solve(&rhs).expect("simple roots plus span direction are independent")
        })
        .collect()
}

fn gram(basis: &[Vec<Rat>]) -> RatMat {
    let mut g = RatMat::zero(7, 7);
    for i in 0..7 {
        for j in 0..7 {
            g[(i, j)] = linalg::dot(&basis[i], &basis[j]);
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_with_expected_counts() {
        let t = RootSystemTables::build();
        assert_eq!(t.roots.len(), 126);
        assert_eq!(t.positive.len(), 63);
        assert_eq!(t.positive_noncompact.len(), 35);
        assert_eq!(t.norm_sq(&t.rho), ratio(399, 2));
        assert_eq!(t.norm_sq(&t.rho_c), rat(42));
    }

    #[test]
    fn rho_c_ambient_matches() {
        let t = RootSystemTables::build();
        let expect: Vec<Rat> =
            [-5, -3, -1, 1, 3, 5, -7, 7].iter().map(|&n| ratio(n, 2)).collect();
        assert_eq!(t.rho_c, expect);
    }

    #[test]
    fn frame_round_trips() {
        let t = RootSystemTables::build();
        let w = Weight::from_ints(&[1, -4, 1, 1, 1, 1, 1], Frame::Zeta);
        for frame in [Frame::Ambient, Frame::Varpi, Frame::AtlasK, Frame::Zeta] {
            let there = t.convert(&w, frame).unwrap();
            let back = t.convert(&there, Frame::Zeta).unwrap();
            assert_eq!(back.coords, w.coords);
        }
        let zero = Weight::zero(Frame::Varpi);
        for frame in [Frame::Ambient, Frame::Zeta, Frame::AtlasK] {
            assert!(t.convert(&zero, frame).unwrap().is_zero());
        }
    }

    #[test]
    fn rho_c_varpi_all_ones() {
        let t = RootSystemTables::build();
        let w = Weight::new(t.rho_c.clone(), Frame::Ambient);
        let v = t.convert(&w, Frame::Varpi).unwrap();
        assert_eq!(v.as_ints().unwrap(), vec![1; 7]);
        // And back through the zeta frame.
        let z = t.convert(&v, Frame::Zeta).unwrap();
        assert_eq!(z.as_ints().unwrap(), vec![1, -4, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn beta_is_the_fourth_varpi() {
        let t = RootSystemTables::build();
        let beta = Weight::new(amb2_to_rat(&t.beta_amb2()), Frame::Ambient);
        let v = t.convert(&beta, Frame::Varpi).unwrap();
        assert_eq!(v.as_ints().unwrap(), vec![0, 0, 0, 1, 0, 0, 0]);
    }

    #[test]
    fn span_violation_rejected() {
        let t = RootSystemTables::build();
        let mut coords = vec![Rat::zero(); 8];
        coords[6] = rat(1);
        coords[7] = rat(1);
        let w = Weight::new(coords, Frame::Ambient);
        assert_eq!(t.convert(&w, Frame::Zeta), Err(ConvertError::SpanViolation));
    }

    #[test]
    fn atlas_shift_examples() {
        let t = RootSystemTables::build();
        let (b, dom) = t.atlas_k_shift(&[0, -1, 0, 0, 1, 0, 0]);
        assert_eq!(b.as_ints().unwrap(), vec![0, 0, 0, 1, 0, 0, 0]);
        assert!(dom);
        let (z, dom) = t.atlas_k_shift(&[0, 0, 0, 0, 0, 0, 0]);
        assert!(z.is_zero() && dom);
        let (rc, dom) = t.atlas_k_shift(&[1, -4, 1, 1, 1, 1, 1]);
        assert_eq!(rc.as_ints().unwrap(), vec![1; 7]);
        assert!(dom);
        // The shift agrees with the zeta -> varpi change of basis.
        let y = [3, -2, 1, 0, 2, 5, 1];
        let (shifted, _) = t.atlas_k_shift(&y);
        let via_frames = t
            .convert(&Weight::from_ints(&y, Frame::AtlasK), Frame::Varpi)
            .unwrap();
        assert_eq!(shifted.coords, via_frames.coords);
    }

    #[test]
    fn zeta_gram_row_sums_give_rho_norm() {
        let t = RootSystemTables::build();
        let mut total = Rat::zero();
        for i in 0..7 {
            for j in 0..7 {
                total += t.gram_zeta[(i, j)].clone();
            }
        }
        assert_eq!(total, ratio(399, 2));
    }
}

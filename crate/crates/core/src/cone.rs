//! Exact nearest-point projection onto a simplicial cone spanned by the
//! (images of the) fundamental weights.
//!
//! Because every chamber's generator set is an orthogonal image of the base
//! fundamental weights, the Gram matrix is chamber-independent and the whole
//! computation happens in pairing coordinates: the input is the vector of
//! form values against the seven generators, the output the non-negative
//! coefficient vector of the projection.

use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::linalg::RatMat;
use crate::Rat;

/// Result of a cone projection, in generator coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projection {
    /// Non-negative coefficients over the seven generators.
    pub coeffs: Vec<Rat>,
    /// Active face as a bitmask over generator indices.
    pub face: u8,
    /// Squared norm of the projected point.
    pub norm_sq: Rat,
}

/// Precomputed face inverses for one Gram matrix.
pub struct ConeProjector {
    gram: RatMat,
    face_inverse: Vec<Option<RatMat>>,
}

impl ConeProjector {
    pub fn new(gram: RatMat) -> Self {
        assert_eq!(gram.rows(), 7);
        assert_eq!(gram.cols(), 7);
        let mut face_inverse = Vec::with_capacity(128);
        for mask in 0u8..=127 {
            if mask == 0 {
                face_inverse.push(None);
                continue;
            }
            let idx: Vec<usize> = (0..7).filter(|&i| mask & (1 << i) != 0).collect();
            let mut sub = RatMat::zero(idx.len(), idx.len());
            for (a, &i) in idx.iter().enumerate() {
                for (b, &j) in idx.iter().enumerate() {
                    sub[(a, b)] = gram[(i, j)].clone();
                }
            }
            face_inverse.push(Some(sub.inverse().expect("principal minor of a Gram matrix")));
        }
        Self { gram, face_inverse }
    }

    pub fn gram(&self) -> &RatMat {
        &self.gram
    }

    /// Solve the normal equations on one face. Returns the full-length
    /// coefficient vector (zero off the face).
    fn solve_face(&self, mask: u8, b: &[Rat]) -> Vec<Rat> {
        let mut c = alloc::vec![Rat::zero(); 7];
        if mask == 0 {
            return c;
        }
        let idx: Vec<usize> = (0..7).filter(|&i| mask & (1 << i) != 0).collect();
        let inv = self.face_inverse[mask as usize].as_ref().unwrap();
        let sub_b: Vec<Rat> = idx.iter().map(|&i| b[i].clone()).collect();
        let sol = inv.apply(&sub_b);
        for (a, &i) in idx.iter().enumerate() {
            c[i] = sol[a].clone();
        }
        c
    }

    fn feasible(c: &[Rat]) -> bool {
        c.iter().all(|x| !x.is_negative())
    }

    /// Residual pairings `b - G c`; the projection is optimal iff none is
    /// positive off the face (on the face they vanish by construction).
    fn residual(&self, b: &[Rat], c: &[Rat]) -> Vec<Rat> {
        let gc = self.gram.apply(c);
        b.iter().zip(&gc).map(|(x, y)| x - y).collect()
    }

    fn kkt_holds(&self, mask: u8, b: &[Rat], c: &[Rat]) -> bool {
        if !Self::feasible(c) {
            return false;
        }
        let r = self.residual(b, c);
        (0..7).all(|i| mask & (1 << i) != 0 || !r[i].is_positive())
    }

    /// Project the point with the given generator pairings onto the cone.
    ///
    /// An active-set walk handles almost every input in a few face solves;
    /// if it fails to settle it falls back to scanning all 128 faces, so
    /// the computation is unconditionally exact and total.
    pub fn project(&self, b: &[Rat]) -> Projection {
        assert_eq!(b.len(), 7);
        let mut mask: u8 = 127;
        let mut visited = [false; 128];
        for _ in 0..32 {
            if visited[mask as usize] {
                break;
            }
            visited[mask as usize] = true;
            let c = self.solve_face(mask, b);
            if !Self::feasible(&c) {
                for i in 0..7 {
                    if c[i].is_negative() {
                        mask &= !(1 << i);
                    }
                }
                continue;
            }
            let r = self.residual(b, &c);
            let worst = (0..7)
                .filter(|&i| mask & (1 << i) == 0 && r[i].is_positive())
                .max_by(|&i, &j| r[i].cmp(&r[j]));
            match worst {
                None => return self.finish(mask, c),
                Some(i) => mask |= 1 << i,
            }
        }
        for mask in 0u8..=127 {
            let c = self.solve_face(mask, b);
            if self.kkt_holds(mask, b, &c) {
                return self.finish(mask, c);
            }
        }
        unreachable!("a face satisfying the optimality conditions always exists");
    }

    fn finish(&self, face: u8, coeffs: Vec<Rat>) -> Projection {
        let gc = self.gram.apply(&coeffs);
        let norm_sq = crate::linalg::dot(&coeffs, &gc);
        Projection { coeffs, face, norm_sq }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn projector() -> ConeProjector {
        ConeProjector::new(crate::roots::RootSystemTables::build().gram_zeta)
    }

    #[test]
    fn interior_point_is_fixed() {
        let p = projector();
        // b = G c for a positive c, so the point is inside the cone.
        let c: Vec<Rat> = (1..=7).map(rat).collect();
        let b = p.gram().apply(&c);
        let proj = p.project(&b);
        assert_eq!(proj.coeffs, c);
        assert_eq!(proj.face, 127);
    }

    #[test]
    fn polar_point_projects_to_apex() {
        let p = projector();
        let b: Vec<Rat> = (0..7).map(|_| rat(-1)).collect();
        let proj = p.project(&b);
        assert!(proj.coeffs.iter().all(|c| c.is_zero()));
        assert!(proj.norm_sq.is_zero());
    }

    #[test]
    fn mixed_point_lands_on_boundary() {
        let p = projector();
        let mut c: Vec<Rat> = (1..=7).map(rat).collect();
        c[3] = rat(0);
        let mut b = p.gram().apply(&c);
        b[3] -= rat(5);
        let proj = p.project(&b);
        assert!(proj.coeffs[3].is_zero());
        assert!(proj.face & (1 << 3) == 0 || proj.coeffs[3].is_zero());
    }
}

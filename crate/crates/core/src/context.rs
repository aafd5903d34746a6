//! The shared read-only context: root tables, the 72 chambers, and the
//! derived pairing tables every norm computation runs on. Built once,
//! then safe to use concurrently (all operations take `&self`).

use alloc::vec::Vec;

use num_traits::{One, ToPrimitive, Zero};

use crate::cone::ConeProjector;
use crate::linalg;
use crate::roots::RootSystemTables;
use crate::su8::{self, X8};
use crate::weyl::{self, Chamber};
use crate::Rat;

pub struct E7 {
    pub tables: RootSystemTables,
    pub chambers: Vec<Chamber>,
    pub(crate) projector: ConeProjector,
    /// Scaled A7 coordinates of each chamber's rho_n.
    pub(crate) rho_n_x8: Vec<X8>,
    /// Scaled A7 coordinates of the positive noncompact roots.
    pub(crate) noncompact_x8: Vec<X8>,
    /// zeta_pair[j][k][i] = B(varpi_i, w_j zeta_k).
    pub(crate) zeta_pair: Vec<[[Rat; 7]; 7]>,
    /// alpha_pair[j][k][i] = 2 B(varpi_i, w_j alpha_k), integral.
    pub(crate) alpha_pair: Vec<[[i64; 7]; 7]>,
    /// B(rho, zeta_k): column sums of the zeta Gram matrix.
    pub(crate) rho_zeta: [Rat; 7],
    /// 2 B(varpi_i, gamma-coordinates of beta) precomputation: beta in
    /// varpi coordinates (it is [0,0,0,1,0,0,0]).
    pub(crate) beta_varpi: [i64; 7],
    /// Support data for the u-small hull: for every chamber generator
    /// w_j zeta_i, the scaled pairings 8 B(varpi_k, w_j zeta_i) and the
    /// scaled support value 8 B(2 rho_n_j, w_j zeta_i). A dominant weight
    /// lies in the hull iff all 504 inequalities hold, because the hull's
    /// support function is linear on each chamber.
    pub(crate) usmall_face8: Vec<([i64; 7], i64)>,
}

impl E7 {
    /// Build all tables. Takes a few seconds: the Weyl orbit of rho is
    /// closed exhaustively to find the chambers.
    pub fn new() -> Self {
        let tables = RootSystemTables::build();
        let chambers = weyl::chambers(&tables);

        let rho_n_x8: Vec<X8> =
            chambers.iter().map(|c| su8::from_varpi(&c.rho_n_varpi)).collect();

        let noncompact_x8: Vec<X8> = tables
            .positive_noncompact
            .iter()
            .map(|&i| {
                let mut varpi = [0i64; 7];
                for (k, g) in tables.simple_k2.iter().enumerate() {
                    let p4 = crate::roots::pairing4(&tables.roots[i].amb2, g);
                    debug_assert_eq!(p4 % 4, 0);
                    varpi[k] = p4 / 4;
                }
                su8::from_varpi(&varpi)
            })
            .collect();

        let zeta_pair: Vec<[[Rat; 7]; 7]> = chambers
            .iter()
            .map(|c| {
                core::array::from_fn(|k| {
                    core::array::from_fn(|i| linalg::dot(&tables.fw_k[i], &c.fw_image[k]))
                })
            })
            .collect();

        let alpha_pair: Vec<[[i64; 7]; 7]> = chambers
            .iter()
            .map(|c| {
                core::array::from_fn(|k| {
                    core::array::from_fn(|i| {
                        let doubled =
                            tables.pair_rat_amb2(&tables.fw_k[i], &c.simple_image2[k])
                                * crate::rat(2);
                        assert!(doubled.denom().is_one());
                        doubled.numer().to_i64().expect("pairing fits i64")
                    })
                })
            })
            .collect();

        let rho_zeta: [Rat; 7] = core::array::from_fn(|k| {
            let mut s = Rat::zero();
            for i in 0..7 {
                s += tables.gram_zeta[(i, k)].clone();
            }
            s
        });

        let projector = ConeProjector::new(tables.gram_zeta.clone());

        let beta = tables.beta_amb2();
        let mut beta_varpi = [0i64; 7];
        for (k, g) in tables.simple_k2.iter().enumerate() {
            let p4 = crate::roots::pairing4(&beta, g);
            beta_varpi[k] = p4 / 4;
        }
        assert_eq!(beta_varpi, [0, 0, 0, 1, 0, 0, 0]);

        let to_i64_times8 = |q: &Rat| -> i64 {
            let scaled = q * crate::rat(8);
            assert!(scaled.denom().is_one(), "pairing with denominator beyond 8");
            scaled.numer().to_i64().expect("scaled pairing fits i64")
        };
        let mut usmall_face8 = Vec::with_capacity(72 * 7);
        for (j, c) in chambers.iter().enumerate() {
            for i in 0..7 {
                let row: [i64; 7] = core::array::from_fn(|k| to_i64_times8(&zeta_pair[j][i][k]));
                let rho_n = c.rho_n_j();
                let bound = to_i64_times8(
                    &(linalg::dot(&rho_n, &c.fw_image[i]) * crate::rat(2)),
                );
                usmall_face8.push((row, bound));
            }
        }

        Self {
            tables,
            chambers,
            projector,
            rho_n_x8,
            noncompact_x8,
            zeta_pair,
            alpha_pair,
            rho_zeta,
            beta_varpi,
            usmall_face8,
        }
    }

    /// beta in varpi coordinates.
    pub fn beta_varpi(&self) -> [i64; 7] {
        self.beta_varpi
    }

    /// Squared norm of a weight expressed in zeta coordinates.
    pub fn zeta_norm_sq(&self, coords: &[Rat]) -> Rat {
        let gq = self.tables.gram_zeta.apply(coords);
        linalg::dot(coords, &gq)
    }
}

impl Default for E7 {
    fn default() -> Self {
        Self::new()
    }
}

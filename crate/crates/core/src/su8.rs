//! Integer model of the compact subalgebra su(8).
//!
//! The compact root system is isometric to A7 in its standard realization:
//! the simple roots gamma_i map to f_i - f_{i+1} in the trace-zero subspace
//! of R^8. Weights are stored as 8-tuples scaled by 8 so that every k-weight
//! has integer coordinates. Under this model the dominant representative is
//! a descending sort, contragredience is coordinate reversal, and the
//! squared norm is the coordinate sum of squares divided by 64.

use alloc::vec::Vec;

use num_traits::ToPrimitive;

use crate::UInt;

/// A k-weight in scaled A7 coordinates: 8 integers summing to zero, equal
/// to 8 times the true coordinates.
pub type X8 = [i64; 8];

/// Scaled coordinates of the compact half sum rho_c (the A7 rho).
pub const RHO_C_X8: X8 = [28, 20, 12, 4, -4, -12, -20, -28];

/// Map varpi coordinates to scaled A7 coordinates.
pub fn from_varpi(a: &[i64; 7]) -> X8 {
    let mut x = [0i64; 8];
    for (i, &ai) in a.iter().enumerate() {
        // 8 * varpi_{i+1} has entry 8 - (i+1) in the first i+1 slots and
        // -(i+1) in the rest.
        let hi = 8 - (i as i64 + 1);
        let lo = -(i as i64 + 1);
        for (k, xv) in x.iter_mut().enumerate() {
            *xv += ai * if k <= i { hi } else { lo };
        }
    }
    debug_assert_eq!(x.iter().sum::<i64>(), 0);
    x
}

/// Recover varpi coordinates; entries are `(x_i - x_{i+1}) / 8`.
pub fn to_varpi(x: &X8) -> Option<[i64; 7]> {
    let mut a = [0i64; 7];
    for i in 0..7 {
        let d = x[i] - x[i + 1];
        if d % 8 != 0 {
            return None;
        }
        a[i] = d / 8;
    }
    Some(a)
}

/// 64 times the squared norm of the weight.
pub fn norm64(x: &X8) -> i64 {
    x.iter().map(|&c| c * c).sum()
}

/// Dominant representative: sort descending.
pub fn dominant(x: &X8) -> X8 {
    let mut y = *x;
    y.sort_unstable_by(|a, b| b.cmp(a));
    y
}

/// Dominant representative together with the sign of the sorting
/// permutation; `None` if two entries coincide (singular point).
pub fn dominant_signed(x: &X8) -> Option<(X8, i32)> {
    let mut y = *x;
    let mut sign = 1;
    // Insertion sort, counting swaps.
    for i in 1..8 {
        let mut j = i;
        while j > 0 {
            if y[j - 1] < y[j] {
                y.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            } else if y[j - 1] == y[j] {
                return None;
            } else {
                break;
            }
        }
    }
    Some((y, sign))
}

/// Contragredient (negative of the lowest weight): negate and reverse.
pub fn contragredient(x: &X8) -> X8 {
    let mut y = [0i64; 8];
    for i in 0..8 {
        y[i] = -x[7 - i];
    }
    y
}

/// Action of the longest Weyl element: reverse the coordinates.
pub fn w0(x: &X8) -> X8 {
    let mut y = *x;
    y.reverse();
    y
}

/// Componentwise sum.
pub fn add(a: &X8, b: &X8) -> X8 {
    let mut y = [0i64; 8];
    for i in 0..8 {
        y[i] = a[i] + b[i];
    }
    y
}

/// Componentwise difference.
pub fn sub(a: &X8, b: &X8) -> X8 {
    let mut y = [0i64; 8];
    for i in 0..8 {
        y[i] = a[i] - b[i];
    }
    y
}

/// Weyl dimension of the irreducible with this dominant highest weight.
pub fn weyl_dim(a: &[i64; 7]) -> UInt {
    let x = from_varpi(a);
    let l = add(&x, &RHO_C_X8);
    let mut num = UInt::from(1u32);
    let mut den = UInt::from(1u32);
    for i in 0..8 {
        for j in (i + 1)..8 {
            let d = l[i] - l[j];
            assert!(d > 0, "weyl_dim requires a dominant weight");
            num *= UInt::from(d as u64);
            den *= UInt::from((8 * (j - i)) as u64);
        }
    }
    debug_assert!((&num % &den).to_u32() == Some(0));
    num / den
}

/// Size of the Weyl orbit of a dominant weight: 8! over the factorials of
/// the runs of equal coordinates.
pub fn orbit_size(x: &X8) -> u64 {
    const FACT: [u64; 9] = [1, 1, 2, 6, 24, 120, 720, 5040, 40320];
    let mut denom = 1u64;
    let mut run = 1usize;
    for i in 1..8 {
        if x[i] == x[i - 1] {
            run += 1;
        } else {
            denom *= FACT[run];
            run = 1;
        }
    }
    denom *= FACT[run];
    FACT[8] / denom
}

/// All distinct permutations of a weight, in descending lexicographic
/// order starting from the dominant representative.
pub fn orbit(x: &X8) -> Vec<X8> {
    let start = dominant(x);
    let mut out = Vec::with_capacity(orbit_size(&start) as usize);
    let mut cur = start;
    loop {
        out.push(cur);
        // Next permutation in descending enumeration: standard algorithm
        // mirrored (cur steps through all distinct arrangements).
        let mut i = 7;
        while i > 0 && cur[i - 1] <= cur[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = 7;
        while cur[j] >= cur[i - 1] {
            j -= 1;
        }
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rho_c_image() {
        assert_eq!(from_varpi(&[1; 7]), RHO_C_X8);
        assert_eq!(norm64(&RHO_C_X8), 64 * 42);
    }

    #[test]
    fn varpi_round_trip() {
        let a = [3, 0, 2, 5, 0, 1, 4];
        assert_eq!(to_varpi(&from_varpi(&a)), Some(a));
    }

    #[test]
    fn gram_matches_inverse_cartan() {
        // B(varpi_i, varpi_j) = min(i,j) (8 - max(i,j)) / 8.
        for i in 0..7usize {
            for j in 0..7usize {
                let mut a = [0i64; 7];
                a[i] = 1;
                let mut b = [0i64; 7];
                b[j] = 1;
                let xi = from_varpi(&a);
                let xj = from_varpi(&b);
                let dot: i64 = (0..8).map(|k| xi[k] * xj[k]).sum();
                let (lo, hi) = if i <= j { (i + 1, j + 1) } else { (j + 1, i + 1) };
                assert_eq!(dot, (lo * (8 - hi)) as i64 * 8);
            }
        }
    }

    #[test]
    fn dims() {
        assert_eq!(weyl_dim(&[0; 7]).to_u64(), Some(1));
        assert_eq!(weyl_dim(&[1, 0, 0, 0, 0, 0, 0]).to_u64(), Some(8));
        assert_eq!(weyl_dim(&[0, 0, 0, 1, 0, 0, 0]).to_u64(), Some(70));
        assert_eq!(weyl_dim(&[1, 0, 0, 0, 0, 0, 1]).to_u64(), Some(63));
    }

    #[test]
    fn orbits() {
        let adj = from_varpi(&[1, 0, 0, 0, 0, 0, 1]);
        assert_eq!(orbit_size(&adj), 56);
        assert_eq!(orbit(&adj).len(), 56);
        let triv = from_varpi(&[0; 7]);
        assert_eq!(orbit_size(&triv), 1);
        let fund = from_varpi(&[1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(orbit(&fund).len(), 8);
    }

    #[test]
    fn signed_sort() {
        let x = [1, 5, 3, 7, -1, -3, -5, -7];
        let (dom, sign) = dominant_signed(&x).unwrap();
        assert_eq!(dom, [7, 5, 3, 1, -1, -3, -5, -7]);
        // Five inversions against descending order.
        assert_eq!(sign, -1);
        assert!(dominant_signed(&[1, 1, 2, 3, 4, 5, 6, -22]).is_none());
    }

    #[test]
    fn contragredient_is_reversal_in_varpi() {
        let a = [3, 0, 2, 5, 0, 1, 4];
        let c = contragredient(&from_varpi(&a));
        assert_eq!(to_varpi(&c), Some([4, 1, 0, 5, 2, 0, 3]));
    }
}

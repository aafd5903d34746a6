//! Exact rational feasibility testing for box-constrained linear systems:
//! does `A x = b` admit a solution with `l_j <= x_j <= u_j`?
//!
//! Phase-1 simplex on the bounded-variable formulation, with Bland's rule
//! throughout so cycling is impossible. Only the row dimension drives the
//! tableau size, which keeps the zonotope membership tests cheap.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::linalg::RatMat;
use crate::Rat;

/// Outcome of a feasibility run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility {
    /// A witness assignment for the structural variables.
    Feasible(Vec<Rat>),
    Infeasible,
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Where {
    Lower,
    Upper,
    Basic,
}

/// Decide feasibility of `A x = b` subject to `lower <= x <= upper`
/// componentwise. Bounds must satisfy `lower <= upper`.
pub fn feasible(a: &RatMat, b: &[Rat], lower: &[Rat], upper: &[Rat]) -> Feasibility {
    let m = a.rows();
    let n = a.cols();
    assert_eq!(b.len(), m);
    assert_eq!(lower.len(), n);
    assert_eq!(upper.len(), n);
    debug_assert!(lower.iter().zip(upper).all(|(l, u)| l <= u));

    // Structural variables start at their lower bound; artificial i absorbs
    // the residual of row i with a sign fixed so its value is non-negative.
    let mut residual: Vec<Rat> = b.to_vec();
    for j in 0..n {
        if !lower[j].is_zero() {
            for i in 0..m {
                let d = &a[(i, j)] * &lower[j];
                residual[i] -= d;
            }
        }
    }
    let total = n + m;
    // Tableau starts as diag(sign) * A | I, rhs = |residual|.
    let mut t = RatMat::zero(m, total);
    let mut rhs = vec![Rat::zero(); m];
    for i in 0..m {
        let flip = residual[i].is_negative();
        for j in 0..n {
            t[(i, j)] = if flip { -&a[(i, j)] } else { a[(i, j)].clone() };
        }
        t[(i, n + i)] = Rat::from_integer(1.into());
        rhs[i] = if flip { -&residual[i] } else { residual[i].clone() };
    }
    let mut state: Vec<Where> = vec![Where::Lower; total];
    let mut basis: Vec<usize> = (0..m).map(|i| n + i).collect();
    for i in 0..m {
        state[n + i] = Where::Basic;
    }

    // Row value of the objective (sum of artificials) is sum of rhs over
    // rows whose basic variable is artificial; reduced costs follow from
    // the same cost vector.
    let reduced_cost = |t: &RatMat, basis: &[usize], j: usize| -> Rat {
        let mut z = if j >= n { Rat::from_integer(1.into()) } else { Rat::zero() };
        for i in 0..m {
            if basis[i] >= n && !t[(i, j)].is_zero() {
                z -= t[(i, j)].clone();
            }
        }
        z
    };

    let span = |j: usize| -> Option<Rat> {
        if j >= n {
            None // artificials are unbounded above
        } else {
            Some(&upper[j] - &lower[j])
        }
    };

    loop {
        // Bland: smallest-index structural variable with improving cost.
        let mut entering: Option<(usize, bool)> = None; // (var, increasing)
        for j in 0..n {
            match state[j] {
                Where::Basic => continue,
                Where::Lower => {
                    if reduced_cost(&t, &basis, j).is_negative() {
                        entering = Some((j, true));
                        break;
                    }
                }
                Where::Upper => {
                    if reduced_cost(&t, &basis, j).is_positive() {
                        entering = Some((j, false));
                        break;
                    }
                }
            }
        }
        let (j, increasing) = match entering {
            Some(e) => e,
            None => break,
        };

        // Ratio test: how far can x_j move before a basic variable or the
        // entering variable's own opposite bound blocks.
        let dir: i32 = if increasing { 1 } else { -1 };
        let mut limit: Option<Rat> = span(j);
        let mut leaving: Option<usize> = None; // row index
        for i in 0..m {
            let w = &t[(i, j)];
            if w.is_zero() {
                continue;
            }
            let k = basis[i];
            // x_basic(i) moves by -dir * step * w.
            let decreasing_basic = (dir > 0) == w.is_positive();
            let room = if decreasing_basic {
                // distance down to the basic variable's lower bound
                if k >= n { rhs[i].clone() } else { &rhs[i] - &lower[k] }
            } else {
                match k >= n {
                    true => continue, // artificial has no upper bound
                    false => &upper[k] - &rhs[i],
                }
            };
            let step = &room / &w.abs();
            let tighter = match &limit {
                None => true,
                Some(cur) => {
                    step < *cur || (step == *cur && leaving.map_or(false, |r| basis[i] < basis[r]))
                }
            };
            if tighter {
                limit = Some(step);
                leaving = Some(i);
            }
        }
        let step = limit.expect("phase-1 step is always bounded");

        match leaving {
            None => {
                // Bound flip of the entering variable; basics shift.
                for i in 0..m {
                    if !t[(i, j)].is_zero() {
                        let delta = &t[(i, j)] * &step;
                        if increasing {
                            rhs[i] -= delta;
                        } else {
                            rhs[i] += delta;
                        }
                    }
                }
                state[j] = if increasing { Where::Upper } else { Where::Lower };
            }
            Some(r) => {
                // Update basic values for the move, then pivot on (r, j).
                if !step.is_zero() {
                    for i in 0..m {
                        if !t[(i, j)].is_zero() {
                            let delta = &t[(i, j)] * &step;
                            if increasing {
                                rhs[i] -= delta;
                            } else {
                                rhs[i] += delta;
                            }
                        }
                    }
                }
                let old = basis[r];
                // Leaving variable lands on the bound it hit.
                let w_pos = t[(r, j)].is_positive();
                let decreasing_basic = (dir > 0) == w_pos;
                state[old] = if decreasing_basic { Where::Lower } else { Where::Upper };
                // Entering variable's current value.
                let enter_val = if increasing { &lower[j] + &step } else { &upper[j] - &step };
                basis[r] = j;
                state[j] = Where::Basic;
                // Row reduce so column j becomes the r-th unit vector.
                let pivot = t[(r, j)].clone();
                let inv = pivot.recip();
                for col in 0..total {
                    if !t[(r, col)].is_zero() {
                        let v = &t[(r, col)] * &inv;
                        t[(r, col)] = v;
                    }
                }
                // rhs entries already hold the post-move basic values, so
                // the elimination below touches only the tableau.
                rhs[r] = enter_val;
                for i in 0..m {
                    if i == r || t[(i, j)].is_zero() {
                        continue;
                    }
                    let f = t[(i, j)].clone();
                    for col in 0..total {
                        if !t[(r, col)].is_zero() {
                            let d = &f * &t[(r, col)];
                            t[(i, col)] -= d;
                        }
                    }
                }
            }
        }
    }

    // Optimal: feasible iff all artificial mass is gone.
    let mut infeasibility = Rat::zero();
    for i in 0..m {
        if basis[i] >= n {
            infeasibility += rhs[i].clone();
        }
    }
    if !infeasibility.is_zero() {
        return Feasibility::Infeasible;
    }
    let mut x = vec![Rat::zero(); n];
    for j in 0..n {
        x[j] = match state[j] {
            Where::Lower => lower[j].clone(),
            Where::Upper => upper[j].clone(),
            Where::Basic => Rat::zero(), // filled below
        };
    }
    for i in 0..m {
        if basis[i] < n {
            x[basis[i]] = rhs[i].clone();
        }
    }
    Feasibility::Feasible(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio};

    fn mat(rows: &[&[i64]]) -> RatMat {
        RatMat::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect(),
        )
    }

    fn box_bounds(n: usize) -> (Vec<Rat>, Vec<Rat>) {
        (vec![rat(-1); n], vec![rat(1); n])
    }

    fn check_witness(a: &RatMat, b: &[Rat], x: &[Rat]) {
        let ax = a.apply(x);
        assert_eq!(ax, b);
        assert!(x.iter().all(|v| *v >= rat(-1) && *v <= rat(1)));
    }

    #[test]
    fn one_dimensional() {
        let a = mat(&[&[2]]);
        let (lo, hi) = box_bounds(1);
        match feasible(&a, &[rat(1)], &lo, &hi) {
            Feasibility::Feasible(x) => check_witness(&a, &[rat(1)], &x),
            Feasibility::Infeasible => panic!("1/2 is inside [-1,1] after scaling"),
        }
        assert_eq!(feasible(&a, &[rat(3)], &lo, &hi), Feasibility::Infeasible);
        assert_eq!(feasible(&a, &[rat(-3)], &lo, &hi), Feasibility::Infeasible);
    }

    #[test]
    fn square_zonotope() {
        // Generators (1,0), (0,1), (1,1): reachable set is the hexagon
        // |x|<=2, |y|<=2, |x-y|... just probe a few points.
        let a = mat(&[&[1, 0, 1], &[0, 1, 1]]);
        let (lo, hi) = box_bounds(3);
        for (x, y, expect) in [
            (0, 0, true),
            (2, 2, true),
            (2, -2, false),
            (1, -1, true),
            (-2, -2, true),
            (3, 0, false),
        ] {
            let b = [rat(x), rat(y)];
            let got = feasible(&a, &b, &lo, &hi);
            assert_eq!(got.is_feasible(), expect, "point ({x},{y})");
            if let Feasibility::Feasible(w) = got {
                check_witness(&a, &b, &w);
            }
        }
    }

    #[test]
    fn rational_target() {
        let a = mat(&[&[1, 1], &[1, -1]]);
        let (lo, hi) = box_bounds(2);
        let b = [ratio(1, 2), ratio(-3, 2)];
        match feasible(&a, &b, &lo, &hi) {
            Feasibility::Feasible(x) => check_witness(&a, &b, &x),
            Feasibility::Infeasible => panic!("expected feasible"),
        }
    }

    #[test]
    fn redundant_row_consistent() {
        let a = mat(&[&[1, 1], &[2, 2]]);
        let (lo, hi) = box_bounds(2);
        assert!(feasible(&a, &[rat(1), rat(2)], &lo, &hi).is_feasible());
        assert_eq!(feasible(&a, &[rat(1), rat(1)], &lo, &hi), Feasibility::Infeasible);
    }
}

// Copyright 2026 The pbr-verify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Group reduction of `n` devices onto the two-qubit construction, and the
//! minimal device counts of both proofs.

use alloc::vec::Vec;
use core::f64::consts::LN_2;

use crate::linalg::inner_product;
use crate::state::{make_pair, product_state, reduce_pair, OverlapAngle, SymmetricPair};
use crate::tol::{BOUNDARY_COS, MAX_COPIES, TOL_BOUNDARY, TOL_NORM};
use crate::{Error, Result};

/// Split of `n` devices into two groups of `n/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroupingPlan {
    /// Per-device overlap.
    pub omega: OverlapAngle,
    /// Total device count (even).
    pub n: usize,
    /// Devices per group, `n/2`.
    pub group_size: usize,
    /// Overlap of the group product states, `cos Ω = cos^(n/2) ω`.
    pub big_omega: OverlapAngle,
}

/// Minimal device counts of both proofs at one overlap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinNComparison {
    /// `cos ω`.
    pub cos_omega: f64,
    /// Minimal `n` with `tan(ω/2) >= 2^{1/n} − 1`.
    pub n_pbr: usize,
    /// Minimal even `n` with `cos^(n/2) ω <= √2/2`.
    pub n_alt: usize,
}

fn powi(x: f64, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, _| acc * x)
}

fn group_feasible(cos: f64, group_size: usize) -> bool {
    powi(cos, group_size) <= BOUNDARY_COS + TOL_BOUNDARY
}

/// Smallest even `n` such that the group overlap `cos^(n/2) ω` is at most `√2/2`.
///
/// The logarithmic estimate `n/2 >= ln(√2/2) / ln cos ω` seeds the search;
/// direct powering decides.
pub fn grouping_plan(omega: OverlapAngle) -> GroupingPlan {
    let c = omega.cos();
    let mut m = if group_feasible(c, 1) {
        1
    } else {
        let estimate = libm::ceil(-0.5 * LN_2 / libm::log(c));
        (estimate as usize).max(1)
    };
    while !group_feasible(c, m) {
        m += 1;
    }
    while m > 1 && group_feasible(c, m - 1) {
        m -= 1;
    }
    let big_omega = OverlapAngle::from_cos(powi(c, m)).expect("power of a cosine in [0, 1)");
    GroupingPlan {
        omega,
        n: 2 * m,
        group_size: m,
        big_omega,
    }
}

/// `tan(ω/2)` through `tan²(ω/2) = (1 − cos ω)/(1 + cos ω)`.
fn tan_half(omega: OverlapAngle) -> f64 {
    let c = omega.cos();
    libm::sqrt((1.0 - c) / (1.0 + c))
}

fn pbr_condition(t: f64, n: usize) -> bool {
    t + TOL_BOUNDARY >= libm::exp2(1.0 / n as f64) - 1.0
}

/// The raw lower bound `ln 2 / ln(1 + tan(ω/2))` on the original proof's `n`.
pub fn pbr_bound_raw(omega: OverlapAngle) -> f64 {
    LN_2 / libm::log1p(tan_half(omega))
}

/// Smallest `n >= 2` with `tan(ω/2) >= 2^{1/n} − 1`.
pub fn min_n_pbr(omega: OverlapAngle) -> usize {
    let t = tan_half(omega);
    let mut n = (libm::ceil(pbr_bound_raw(omega)) as usize).max(2);
    while !pbr_condition(t, n) {
        n += 1;
    }
    while n > 2 && pbr_condition(t, n - 1) {
        n -= 1;
    }
    n
}

/// The printed bound `n >= −½ · ln 2 / ln cos ω`.
///
/// It is half of what `cos^(n/2) ω <= √2/2` actually requires; kept only for
/// side-by-side output.
pub fn alt_bound_printed(omega: OverlapAngle) -> f64 {
    -0.5 * LN_2 / libm::log(omega.cos())
}

/// The bound `n >= −ln 2 / ln cos ω` implied by `cos^(n/2) ω <= √2/2`.
pub fn alt_bound_raw(omega: OverlapAngle) -> f64 {
    -LN_2 / libm::log(omega.cos())
}

/// The effective pair of the two group product states for `n` devices.
///
/// For `n/2 <= 10` the product states are built explicitly and reduced; the
/// recovered overlap must match `cos^(n/2) ω` within `1e-10`.
pub fn effective_pair(omega: OverlapAngle, n: usize) -> Result<SymmetricPair> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::InvalidGroupCount { n });
    }
    let m = n / 2;
    let analytic = powi(omega.cos(), m);
    if m <= MAX_COPIES {
        let pair = make_pair(omega);
        let big_psi = product_state(&pair.psi, m)?;
        let big_phi = product_state(&pair.phi, m)?;
        let explicit = reduce_pair(&big_psi, &big_phi)?.omega.cos();
        let direct = inner_product(&big_psi, &big_phi)?.abs();
        for value in [explicit, direct] {
            if (value - analytic).abs() > TOL_NORM {
                return Err(Error::ReductionMismatch {
                    explicit: value,
                    analytic,
                });
            }
        }
    }
    Ok(make_pair(OverlapAngle::from_cos(analytic)?))
}

/// Minimal `n` of both proofs over a grid of `cos ω` values in `(0, 1)`.
pub fn comparison_table(cos_omega_grid: &[f64]) -> Result<Vec<MinNComparison>> {
    cos_omega_grid
        .iter()
        .map(|&c| {
            if !(c > 0.0 && c < 1.0) {
                return Err(Error::GridOutOfRange { value: c });
            }
            let omega = OverlapAngle::from_cos(c)?;
            Ok(MinNComparison {
                cos_omega: c,
                n_pbr: min_n_pbr(omega),
                n_alt: grouping_plan(omega).n,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measurement::solve_beta;
    use core::f64::consts::FRAC_1_SQRT_2;
    use proptest::prelude::*;

    fn angle(c: f64) -> OverlapAngle {
        OverlapAngle::from_cos(c).unwrap()
    }

    #[test]
    fn plan_examples() {
        assert_eq!(grouping_plan(angle(0.5)).n, 2);
        assert_eq!(grouping_plan(angle(FRAC_1_SQRT_2)).n, 2);
        let plan = grouping_plan(angle(0.9));
        assert_eq!(plan.n, 8);
        assert_eq!(plan.group_size, 4);
        assert!((plan.big_omega.cos() - 0.6561).abs() < 1e-12);
        assert_eq!(grouping_plan(angle(0.0)).n, 2);
    }

    #[test]
    fn pbr_examples() {
        assert_eq!(min_n_pbr(angle(FRAC_1_SQRT_2)), 2);
        assert_eq!(min_n_pbr(angle(0.5)), 2);
        assert_eq!(min_n_pbr(angle(0.9)), 4);
        assert_eq!(min_n_pbr(angle(0.0)), 2);
    }

    #[test]
    fn printed_alt_bound_is_half_the_operative_one() {
        let w = angle(FRAC_1_SQRT_2);
        assert!((alt_bound_printed(w) - 1.0).abs() < 1e-12);
        assert!((alt_bound_raw(w) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn effective_pair_examples() {
        let w = angle(0.9);
        assert!((effective_pair(w, 2).unwrap().omega.cos() - 0.9).abs() < 1e-15);
        assert!((effective_pair(w, 8).unwrap().omega.cos() - 0.6561).abs() < 1e-12);
        assert_eq!(effective_pair(w, 3), Err(Error::InvalidGroupCount { n: 3 }));
        assert_eq!(effective_pair(w, 0), Err(Error::InvalidGroupCount { n: 0 }));
        // beyond the explicit cap only the analytic route runs
        let far = effective_pair(w, 40).unwrap();
        assert!((far.omega.cos() - powi(0.9, 20)).abs() < 1e-15);
    }

    #[test]
    fn table_examples() {
        let t = comparison_table(&[0.3, 0.9]).unwrap();
        assert_eq!((t[0].n_pbr, t[0].n_alt), (2, 2));
        assert_eq!((t[1].n_pbr, t[1].n_alt), (4, 8));
        assert_eq!(comparison_table(&[0.0]), Err(Error::GridOutOfRange { value: 0.0 }));
        assert_eq!(comparison_table(&[1.0]), Err(Error::GridOutOfRange { value: 1.0 }));
    }

    proptest! {
        #[test]
        fn plan_is_minimal_and_feasible(c in 0.0..0.995f64) {
            let plan = grouping_plan(angle(c));
            prop_assert_eq!(plan.n % 2, 0);
            prop_assert!(powi(c, plan.group_size) <= BOUNDARY_COS + 1e-12);
            if plan.n > 2 {
                prop_assert!(powi(c, plan.group_size - 1) > BOUNDARY_COS);
            }
            prop_assert!((plan.big_omega.cos() - powi(c, plan.group_size)).abs() < 1e-12);
            prop_assert!(solve_beta(plan.big_omega).feasible);
        }

        #[test]
        fn pbr_is_minimal(c in 0.0..0.995f64) {
            let w = angle(c);
            let t = libm::tan(w.omega() / 2.0);
            let n = min_n_pbr(w);
            prop_assert!(t >= libm::exp2(1.0 / n as f64) - 1.0 - 1e-12);
            if n > 2 {
                prop_assert!(t < libm::exp2(1.0 / (n - 1) as f64) - 1.0);
            }
        }

        #[test]
        fn alt_never_beats_pbr(c in 0.001..0.999f64) {
            let row = comparison_table(&[c]).unwrap()[0];
            prop_assert!(row.n_alt >= row.n_pbr);
            if c <= FRAC_1_SQRT_2 {
                prop_assert_eq!((row.n_pbr, row.n_alt), (2, 2));
            }
        }

        #[test]
        fn effective_pair_matches_explicit_states(c in 0.05..0.98f64, half in 1usize..=10) {
            let pair = effective_pair(angle(c), 2 * half).unwrap();
            prop_assert!((pair.omega.cos() - powi(c, half)).abs() < 1e-10);
        }
    }
}

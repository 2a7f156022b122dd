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

//! End to end: an arbitrary close pair in a larger space is reduced, grouped,
//! and measured with the solved two-qubit basis.

use pbr_core::{
    contradiction_report, effective_pair, grouping_plan, inner_product, reduce_pair, sample_outcomes, solve,
    Complex, Error, StateVector,
};

fn close_pair() -> (StateVector, StateVector) {
    // dim 6, ⟨ψ|φ⟩ = 0.93·e^{-0.4i}
    let psi = StateVector::new(
        [(0.2, 0.1), (0.4, -0.3), (0.1, 0.0), (-0.5, 0.2), (0.3, 0.3), (0.0, -0.4)]
            .iter()
            .map(|&(r, i)| Complex::new(r, i))
            .collect(),
    )
    .unwrap()
    .normalized()
    .unwrap();
    let seed = StateVector::from_real(&[1.0, -1.0, 0.5, 0.0, 0.25, 2.0]).unwrap();
    let perp = seed
        .axpy(-inner_product(&psi, &seed).unwrap(), &psi)
        .unwrap()
        .normalized()
        .unwrap();
    let r: f64 = 0.93;
    let phi = psi
        .scale(Complex::from_polar(r, -0.4))
        .axpy(Complex::real((1.0 - r * r).sqrt()), &perp)
        .unwrap();
    (psi, phi)
}

#[test]
fn close_pair_goes_through_the_group_reduction() {
    let (psi, phi) = close_pair();
    let pair = reduce_pair(&psi, &phi).unwrap();
    assert!((pair.omega.cos() - 0.93).abs() < 1e-12);
    assert!((pair.phase_applied + 0.4).abs() < 1e-12);

    // two-qubit construction fails directly
    assert!(matches!(solve(pair.omega), Err(Error::Infeasible { .. })));

    let plan = grouping_plan(pair.omega);
    // 0.93^4 = 0.748 > √2/2, 0.93^5 = 0.6957
    assert_eq!(plan.n, 10);
    let effective = effective_pair(pair.omega, plan.n).unwrap();
    assert!((effective.omega.cos() - 0.93f64.powi(5)).abs() < 1e-12);

    let p = solve(effective.omega).unwrap().outcome_matrix().unwrap();
    assert!(p.max_diagonal() <= 1e-10);
    for j in 1..=4 {
        let counts = sample_outcomes(&p, j, 20_000, j as u64).unwrap();
        assert_eq!(counts.forbidden_count(), 0);
    }

    let report = contradiction_report(pair.omega, 0.05).unwrap();
    assert_eq!(report.n, 10);
    assert!(report.contradiction);
}

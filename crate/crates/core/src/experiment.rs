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

//! Monte-Carlo measurement statistics and the ε^n contradiction report.

use alloc::string::String;
use core::fmt::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::measurement::{solve, OutcomeMatrix};
use crate::reduction::grouping_plan;
use crate::state::OverlapAngle;
use crate::tol::{TOL_NORM, TOL_ZERO_PROB};
use crate::{Error, Result};

/// Identifier of the generator behind [`sample_outcomes`].
pub const RNG_ALGORITHM: &str = "chacha8/seed_from_u64";

/// Outcome tallies for one preparation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OutcomeCounts {
    /// Counts per outcome `1..=4` (stored zero-based).
    pub counts: [u64; 4],
    /// Number of draws.
    pub trials: u64,
    /// Preparation `j` in `1..=4`.
    pub preparation: usize,
    /// Generator seed.
    pub seed: u64,
    /// Generator identifier, always [`RNG_ALGORITHM`].
    pub rng: &'static str,
}

impl OutcomeCounts {
    /// Empirical frequencies.
    pub fn frequencies(&self) -> [f64; 4] {
        core::array::from_fn(|k| self.counts[k] as f64 / self.trials as f64)
    }

    /// Count of the outcome that shares the preparation's label.
    pub fn forbidden_count(&self) -> u64 {
        self.counts[self.preparation - 1]
    }

    /// Total variation distance to a reference distribution.
    pub fn total_variation(&self, reference: &[f64; 4]) -> f64 {
        0.5 * self
            .frequencies()
            .iter()
            .zip(reference)
            .map(|(f, p)| (f - p).abs())
            .sum::<f64>()
    }
}

/// Cumulative distribution of one column, with near-zero entries snapped to
/// exact zeros so that they can never be drawn.
fn column_cdf(column: [f64; 4]) -> [f64; 4] {
    let cleaned = column.map(|p| if p < TOL_ZERO_PROB { 0.0 } else { p });
    let total: f64 = cleaned.iter().sum();
    let mut acc = 0.0;
    cleaned.map(|p| {
        acc += p / total;
        acc
    })
}

fn draw(cdf: &[f64; 4], u: f64) -> usize {
    match cdf.iter().position(|&c| u < c) {
        Some(k) => k,
        // u landed in the rounding gap below 1.0; use the last outcome with mass
        None => (0..4)
            .rev()
            .find(|&k| cdf[k] > if k == 0 { 0.0 } else { cdf[k - 1] })
            .unwrap_or(3),
    }
}

/// Samples `trials` outcomes for preparation `j` (1-based) by inverse CDF.
pub fn sample_outcomes(p: &OutcomeMatrix, preparation: usize, trials: u64, seed: u64) -> Result<OutcomeCounts> {
    if !(1..=4).contains(&preparation) {
        return Err(Error::BadPreparation { index: preparation });
    }
    if trials == 0 {
        return Err(Error::NoTrials);
    }
    let cdf = column_cdf(p.column(preparation - 1));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts = [0u64; 4];
    for _ in 0..trials {
        let u: f64 = rng.random();
        counts[draw(&cdf, u)] += 1;
    }
    Ok(OutcomeCounts {
        counts,
        trials,
        preparation,
        seed,
        rng: RNG_ALGORITHM,
    })
}

/// Outcome of confronting an ε-overlap hypothesis with the solved measurement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContradictionReport {
    /// Per-device overlap.
    pub omega: OverlapAngle,
    /// Hypothesized probability that one device is compatible with both states.
    pub epsilon: f64,
    /// Devices used (from [`grouping_plan`]).
    pub n: usize,
    /// Overlap of the group states the measurement acts on.
    pub big_omega: OverlapAngle,
    /// Measurement phase `α` at `Ω`.
    pub alpha: f64,
    /// Measurement phase `β` at `Ω`.
    pub beta: f64,
    /// Lower bound `ε^n` on a jointly compatible preparation.
    pub compat_bound: f64,
    /// Largest forbidden-outcome probability.
    pub max_diagonal: f64,
    /// `ε > 0` together with all forbidden outcomes at zero probability.
    pub contradiction: bool,
}

const STATE_LABELS: [(&str, &str); 4] = [("ψ", "ψ"), ("ψ", "φ"), ("φ", "ψ"), ("φ", "φ")];

impl ContradictionReport {
    /// Plain-text rendering.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let grouped = self.n > 2;
        // writing into a String cannot fail
        let _ = writeln!(out, "cos(omega) = {}", self.omega.cos());
        let _ = writeln!(
            out,
            "devices: n = {} (two groups of {}), cos(Omega) = {}",
            self.n,
            self.n / 2,
            self.big_omega.cos()
        );
        let _ = writeln!(out, "measurement: alpha = {}, beta = {}", self.alpha, self.beta);
        for (j, (a, b)) in STATE_LABELS.iter().enumerate() {
            let (a, b) = if grouped { (upper(a), upper(b)) } else { (*a, *b) };
            let _ = writeln!(
                out,
                "preparation {}: |{}>|{}> -> forbidden outcome {}",
                j + 1,
                a,
                b,
                j + 1
            );
        }
        let _ = writeln!(out, "max forbidden probability = {:e}", self.max_diagonal);
        let _ = writeln!(
            out,
            "epsilon = {}, joint compatibility bound epsilon^n = {:e}",
            self.epsilon, self.compat_bound
        );
        let _ = writeln!(
            out,
            "contradiction: {}",
            if self.contradiction { "yes" } else { "no" }
        );
        out
    }
}

fn upper(s: &str) -> &'static str {
    if s == "ψ" {
        "Ψ"
    } else {
        "Φ"
    }
}

/// Builds the report for overlap `omega` and hypothesized overlap probability `epsilon`.
pub fn contradiction_report(omega: OverlapAngle, epsilon: f64) -> Result<ContradictionReport> {
    if !(0.0..=1.0).contains(&epsilon) {
        return Err(Error::BadEpsilon { epsilon });
    }
    let plan = grouping_plan(omega);
    let sol = solve(plan.big_omega)?;
    let p = sol.outcome_matrix()?;
    let max_diagonal = p.max_diagonal();
    let compat_bound = libm::pow(epsilon, plan.n as f64);
    Ok(ContradictionReport {
        omega,
        epsilon,
        n: plan.n,
        big_omega: plan.big_omega,
        alpha: sol.alpha.unwrap_or_default(),
        beta: sol.beta.unwrap_or_default(),
        compat_bound,
        max_diagonal,
        contradiction: epsilon > 0.0 && max_diagonal <= TOL_NORM,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measurement::outcome_matrix;
    use core::f64::consts::{FRAC_PI_2, PI};

    fn solved(c: f64) -> OutcomeMatrix {
        solve(OverlapAngle::from_cos(c).unwrap())
            .unwrap()
            .outcome_matrix()
            .unwrap()
    }

    #[test]
    fn deterministic_at_right_angle() {
        let p = outcome_matrix(OverlapAngle::new(FRAC_PI_2).unwrap(), 0.0, PI);
        let c = sample_outcomes(&p, 1, 1000, 7).unwrap();
        assert_eq!(c.counts, [0, 0, 0, 1000]);
    }

    #[test]
    fn forbidden_never_fires() {
        let p = solved(0.5);
        for j in 1..=4 {
            let c = sample_outcomes(&p, j, 100_000, 11 + j as u64).unwrap();
            assert_eq!(c.forbidden_count(), 0);
            assert_eq!(c.counts.iter().sum::<u64>(), 100_000);
        }
    }

    #[test]
    fn repeatable_for_fixed_seed() {
        let p = solved(0.3);
        let a = sample_outcomes(&p, 2, 1, 42).unwrap();
        let b = sample_outcomes(&p, 2, 1, 42).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.rng, RNG_ALGORITHM);
    }

    #[test]
    fn bad_inputs() {
        let p = solved(0.3);
        assert_eq!(sample_outcomes(&p, 0, 10, 1), Err(Error::BadPreparation { index: 0 }));
        assert_eq!(sample_outcomes(&p, 5, 10, 1), Err(Error::BadPreparation { index: 5 }));
        assert_eq!(sample_outcomes(&p, 1, 0, 1), Err(Error::NoTrials));
    }

    #[test]
    fn frequencies_converge_on_grid() {
        for i in 1..=10 {
            let c = 0.07 * i as f64;
            let p = solved(c);
            for j in 1..=4 {
                let counts = sample_outcomes(&p, j, 100_000, 1000 * i + j as u64).unwrap();
                assert!(counts.total_variation(&p.column(j - 1)) < 0.01);
                assert_eq!(counts.forbidden_count(), 0);
            }
        }
    }

    #[test]
    fn cdf_snaps_tiny_masses() {
        let cdf = column_cdf([1e-13, 0.5, 0.0, 0.5]);
        assert_eq!(cdf[0], 0.0);
        assert_eq!(draw(&cdf, 0.0), 1);
        assert_eq!(draw(&cdf, 0.999_999), 3);
        // rounding gap below one falls back to the last outcome with mass
        assert_eq!(draw(&[0.0, 0.5, 0.9999999, 0.9999999], 0.99999995), 2);
    }

    #[test]
    fn report_examples() {
        let w = |c: f64| OverlapAngle::from_cos(c).unwrap();
        let r = contradiction_report(w(0.5), 0.0).unwrap();
        assert!(!r.contradiction);

        let r = contradiction_report(w(0.5), 0.1).unwrap();
        assert_eq!(r.n, 2);
        assert!((r.compat_bound - 0.01).abs() < 1e-15);
        assert!(r.contradiction);

        let r = contradiction_report(w(0.9), 0.2).unwrap();
        assert_eq!(r.n, 8);
        assert!((r.compat_bound - 2.56e-6).abs() < 1e-18);
        assert!(r.max_diagonal <= 1e-10);
        assert!(r.contradiction);
        let text = r.render();
        assert!(text.contains("preparation 1: |Ψ>|Ψ> -> forbidden outcome 1"));
        assert!(text.contains("preparation 4: |Φ>|Φ> -> forbidden outcome 4"));
        assert!(text.contains("contradiction: yes"));

        assert_eq!(
            contradiction_report(w(0.5), 1.5),
            Err(Error::BadEpsilon { epsilon: 1.5 })
        );
    }
}

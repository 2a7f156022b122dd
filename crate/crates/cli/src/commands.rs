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

//! Subcommand definitions and dispatch.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use pbr_core::experiment::RNG_ALGORITHM;
use pbr_core::{
    build_c, build_m, contradiction_report, grouping_plan, outcome_matrix, reduce_pair, sample_outcomes,
    solve_alpha, solve_beta, OutcomeCounts, OverlapAngle,
};
use serde::Serialize;

use crate::figures::{fig1_rows, fig2_rows, write_fig1, write_fig2, DEFAULT_RESOLUTION};
use crate::format::{complex, num, operator, short};
use crate::input::load_pair;
use crate::CliError;

/// Numerical checks of the two-qubit PBR construction and its group reduction.
#[derive(Debug, Parser)]
#[command(name = "pbr", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve the measurement phases for one overlap and print M, C and P.
    Solve {
        #[arg(long, allow_negative_numbers = true)]
        cos_omega: f64,
    },
    /// Emit cos(beta) against cos(omega) as CSV.
    Fig1 {
        #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
        resolution: usize,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the minimal device counts of both proofs as CSV.
    Fig2 {
        #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
        resolution: usize,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reduce a JSON state pair to symmetric qubit form and plan the grouping.
    Reduce {
        #[arg(long = "in", value_name = "PATH")]
        input: PathBuf,
    },
    /// Sample the measurement for all four preparations.
    Simulate {
        #[arg(long, allow_negative_numbers = true)]
        cos_omega: f64,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        /// Also write the counts as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Confront an epsilon-overlap hypothesis with the solved measurement.
    Report {
        #[arg(long, allow_negative_numbers = true)]
        cos_omega: f64,
        #[arg(long, allow_negative_numbers = true)]
        epsilon: f64,
        /// Print a JSON record instead of text.
        #[arg(long)]
        json: bool,
    },
}

/// Runs one command, returning the exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match &cli.command {
        Command::Solve { cos_omega } => cmd_solve(*cos_omega, out),
        Command::Fig1 { resolution, out: path } => emit(path.as_deref(), out, |w| {
            write_fig1(&fig1_rows(*resolution)?, w).map_err(CliError::from)
        }),
        Command::Fig2 { resolution, out: path } => emit(path.as_deref(), out, |w| {
            write_fig2(&fig2_rows(*resolution)?, w).map_err(CliError::from)
        }),
        Command::Reduce { input } => cmd_reduce(input, out, err),
        Command::Simulate {
            cos_omega,
            trials,
            seed,
            csv,
        } => cmd_simulate(*cos_omega, *trials, *seed, csv.as_deref(), out),
        Command::Report {
            cos_omega,
            epsilon,
            json,
        } => cmd_report(*cos_omega, *epsilon, *json, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn overlap_flag(cos_omega: f64) -> Result<OverlapAngle, CliError> {
    if !(0.0..1.0).contains(&cos_omega) {
        return Err(CliError::Usage(format!("--cos-omega must lie in [0, 1), got {cos_omega}")));
    }
    Ok(OverlapAngle::from_cos(cos_omega)?)
}

fn emit(
    path: Option<&Path>,
    stdout: &mut dyn Write,
    body: impl FnOnce(&mut dyn Write) -> Result<(), CliError>,
) -> Result<i32, CliError> {
    match path {
        None => body(stdout)?,
        Some(p) => {
            let io_err = |source| CliError::Io {
                path: p.to_path_buf(),
                source,
            };
            let mut w = BufWriter::new(File::create(p).map_err(io_err)?);
            body(&mut w)?;
            w.flush().map_err(io_err)?;
        }
    }
    Ok(0)
}

fn cmd_solve(cos_omega: f64, out: &mut dyn Write) -> Result<i32, CliError> {
    let omega = overlap_flag(cos_omega)?;
    let sol = solve_beta(omega);
    writeln!(out, "cos_omega = {}", num(omega.cos()))?;
    writeln!(out, "omega = {}", num(omega.omega()))?;
    writeln!(out, "cos_beta_raw = {}", num(sol.cos_beta_raw))?;
    writeln!(out, "C =\n{}", operator(&build_c(omega)).trim_end())?;
    let Some(beta) = sol.beta else {
        writeln!(out, "INFEASIBLE: cos_beta_raw = {} > 1, no real beta exists", num(sol.cos_beta_raw))?;
        return Ok(2);
    };
    let alpha = solve_alpha(omega, beta)?;
    writeln!(out, "beta = {}", num(beta))?;
    writeln!(out, "alpha = {}", num(alpha))?;
    writeln!(out, "M =\n{}", operator(&build_m(alpha, beta)).trim_end())?;
    let p = outcome_matrix(omega, alpha, beta);
    writeln!(out, "P (row = outcome k, column = preparation j) =")?;
    for row in p.p {
        let cells: Vec<String> = row.iter().map(|&x| num(x)).collect();
        writeln!(out, "  [{}]", cells.join(", "))?;
    }
    writeln!(out, "max_diagonal = {}", num(p.max_diagonal()))?;
    Ok(0)
}

fn cmd_reduce(path: &Path, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let pair = load_pair(path)?;
    for w in &pair.warnings {
        writeln!(err, "{w}")?;
    }
    let reduced = reduce_pair(&pair.psi, &pair.phi).map_err(|e| match e {
        pbr_core::Error::DegeneratePair { overlap } => CliError::Degenerate { overlap },
        other => other.into(),
    })?;
    let plan = grouping_plan(reduced.omega);
    let vector = |v: &pbr_core::StateVector| -> String {
        let parts: Vec<String> = v.amplitudes().iter().map(|&a| complex(a)).collect();
        format!("[{}]", parts.join(", "))
    };
    writeln!(out, "dim = {}", pair.psi.dim())?;
    writeln!(out, "cos_omega = {}", num(reduced.omega.cos()))?;
    writeln!(out, "omega = {}", num(reduced.omega.omega()))?;
    writeln!(out, "phase_applied = {}", num(reduced.phase_applied))?;
    writeln!(out, "basis0 = {}", vector(&reduced.basis0))?;
    writeln!(out, "basis1 = {}", vector(&reduced.basis1))?;
    writeln!(out, "n = {}", plan.n)?;
    writeln!(out, "group_size = {}", plan.group_size)?;
    writeln!(out, "cos_Omega = {}", num(plan.big_omega.cos()))?;
    writeln!(out, "Omega = {}", num(plan.big_omega.omega()))?;
    Ok(0)
}

fn cmd_simulate(
    cos_omega: f64,
    trials: u64,
    seed: u64,
    csv: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let omega = overlap_flag(cos_omega)?;
    if trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    let plan = grouping_plan(omega);
    if plan.n > 2 {
        writeln!(
            out,
            "reduced: n={}, cos Ω={}",
            plan.n,
            short(plan.big_omega.cos())
        )?;
    }
    let target = plan.big_omega;
    let sol = pbr_core::solve(target)?;
    let p = sol.outcome_matrix()?;
    writeln!(
        out,
        "cos_omega = {}, alpha = {}, beta = {}, rng = {RNG_ALGORITHM}",
        short(target.cos()),
        short(sol.alpha.unwrap_or_default()),
        short(sol.beta.unwrap_or_default())
    )?;
    let mut all = Vec::with_capacity(4);
    for j in 1..=4 {
        // one independent stream per preparation
        let counts = sample_outcomes(&p, j, trials, seed.wrapping_add(j as u64 - 1))?;
        writeln!(
            out,
            "preparation {j}: counts = {:?}, forbidden = {}, tv = {}",
            counts.counts,
            counts.forbidden_count(),
            short(counts.total_variation(&p.column(j - 1)))
        )?;
        all.push(counts);
    }
    if let Some(path) = csv {
        emit(Some(path), out, |w| write_counts(&all, w).map_err(CliError::from))?;
    }
    let fired: Vec<usize> = all
        .iter()
        .filter(|c| c.forbidden_count() > 0)
        .map(|c| c.preparation)
        .collect();
    if fired.is_empty() {
        writeln!(out, "forbidden outcomes: none observed")?;
        Ok(0)
    } else {
        writeln!(out, "CONTRADICTION: forbidden outcome observed for preparations {fired:?}")?;
        Ok(4)
    }
}

/// CSV of per-preparation counts.
pub fn write_counts(all: &[OutcomeCounts], w: &mut dyn Write) -> std::io::Result<()> {
    writeln!(w, "preparation,outcome1,outcome2,outcome3,outcome4,trials,seed,rng")?;
    for c in all {
        writeln!(
            w,
            "{},{},{},{},{},{},{},{}",
            c.preparation, c.counts[0], c.counts[1], c.counts[2], c.counts[3], c.trials, c.seed, c.rng
        )?;
    }
    Ok(())
}

/// Machine-readable contradiction report.
#[derive(Debug, Serialize)]
pub struct ReportRecord {
    pub cos_omega: f64,
    pub epsilon: f64,
    pub n: usize,
    pub cos_big_omega: f64,
    pub alpha: f64,
    pub beta: f64,
    pub compat_bound: f64,
    pub max_diagonal: f64,
    pub contradiction: bool,
}

fn cmd_report(cos_omega: f64, epsilon: f64, json: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let omega = overlap_flag(cos_omega)?;
    if !(0.0..=1.0).contains(&epsilon) {
        return Err(CliError::Usage(format!("--epsilon must lie in [0, 1], got {epsilon}")));
    }
    let r = contradiction_report(omega, epsilon)?;
    if json {
        let record = ReportRecord {
            cos_omega: r.omega.cos(),
            epsilon: r.epsilon,
            n: r.n,
            cos_big_omega: r.big_omega.cos(),
            alpha: r.alpha,
            beta: r.beta,
            compat_bound: r.compat_bound,
            max_diagonal: r.max_diagonal,
            contradiction: r.contradiction,
        };
        serde_json::to_writer_pretty(&mut *out, &record).map_err(|e| CliError::Stream(e.into()))?;
        writeln!(out)?;
    } else {
        write!(out, "{}", r.render())?;
    }
    Ok(0)
}

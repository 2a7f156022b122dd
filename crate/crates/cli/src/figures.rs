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

//! CSV data behind the two figures.
//!
//! Both figures share a grid of `resolution` evenly spaced values of
//! `cos ω` over `[0.01, 0.99]`, with the feasibility boundary `√2/2`
//! inserted as an extra row (unless it already lies on the grid) so the
//! crossing at `cos β = 1` appears exactly.

use std::io::Write;

use pbr_core::measurement::solve_beta;
use pbr_core::reduction::alt_bound_printed;
use pbr_core::tol::BOUNDARY_COS;
use pbr_core::{comparison_table, OverlapAngle};

use crate::format::num;
use crate::CliError;

/// Lower end of the figure grid.
pub const GRID_MIN: f64 = 0.01;
/// Upper end of the figure grid.
pub const GRID_MAX: f64 = 0.99;
/// Default number of grid points.
pub const DEFAULT_RESOLUTION: usize = 200;

/// Header of the first figure's CSV.
pub const FIG1_HEADER: &str = "cos_omega,cos_beta,feasible";
/// Header of the second figure's CSV.
pub const FIG2_HEADER: &str = "cos_omega,n_pbr,n_alt,n_alt_eq19_raw";

/// Figure grid with the boundary row inserted in order.
pub fn grid(resolution: usize) -> Result<Vec<f64>, CliError> {
    if resolution < 2 {
        return Err(CliError::Usage(format!("resolution must be at least 2, got {resolution}")));
    }
    let step = (GRID_MAX - GRID_MIN) / (resolution - 1) as f64;
    let mut points: Vec<f64> = (0..resolution)
        .map(|i| if i + 1 == resolution { GRID_MAX } else { GRID_MIN + step * i as f64 })
        .collect();
    if !points.contains(&BOUNDARY_COS) {
        let at = points.partition_point(|&c| c < BOUNDARY_COS);
        points.insert(at, BOUNDARY_COS);
    }
    Ok(points)
}

/// One row of the first figure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Fig1Row {
    /// `cos ω`.
    pub cos_omega: f64,
    /// Unclamped `cos β`.
    pub cos_beta: f64,
    /// Whether a real `β` exists.
    pub feasible: bool,
}

/// One row of the second figure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Fig2Row {
    /// `cos ω`.
    pub cos_omega: f64,
    /// Minimal `n` for the original multi-partite proof.
    pub n_pbr: usize,
    /// Minimal even `n` for the group reduction.
    pub n_alt: usize,
    /// The printed (halved) logarithmic bound, for comparison.
    pub n_alt_eq19_raw: f64,
}

/// Rows of the first figure.
pub fn fig1_rows(resolution: usize) -> Result<Vec<Fig1Row>, CliError> {
    grid(resolution)?
        .into_iter()
        .map(|c| {
            let sol = solve_beta(OverlapAngle::from_cos(c)?);
            Ok(Fig1Row {
                cos_omega: c,
                cos_beta: sol.cos_beta_raw,
                feasible: sol.feasible,
            })
        })
        .collect()
}

/// Rows of the second figure.
pub fn fig2_rows(resolution: usize) -> Result<Vec<Fig2Row>, CliError> {
    let points = grid(resolution)?;
    comparison_table(&points)?
        .into_iter()
        .map(|row| {
            Ok(Fig2Row {
                cos_omega: row.cos_omega,
                n_pbr: row.n_pbr,
                n_alt: row.n_alt,
                n_alt_eq19_raw: alt_bound_printed(OverlapAngle::from_cos(row.cos_omega)?),
            })
        })
        .collect()
}

/// Writes the first figure as CSV.
pub fn write_fig1(rows: &[Fig1Row], out: &mut (impl Write + ?Sized)) -> std::io::Result<()> {
    writeln!(out, "{FIG1_HEADER}")?;
    for r in rows {
        writeln!(out, "{},{},{}", num(r.cos_omega), num(r.cos_beta), r.feasible)?;
    }
    Ok(())
}

/// Writes the second figure as CSV.
pub fn write_fig2(rows: &[Fig2Row], out: &mut (impl Write + ?Sized)) -> std::io::Result<()> {
    writeln!(out, "{FIG2_HEADER}")?;
    for r in rows {
        writeln!(
            out,
            "{},{},{},{}",
            num(r.cos_omega),
            r.n_pbr,
            r.n_alt,
            num(r.n_alt_eq19_raw)
        )?;
    }
    Ok(())
}

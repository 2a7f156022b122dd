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

//! Number formatting shared by all outputs.

use pbr_core::{Complex, Operator};

/// Seventeen significant digits, enough to round-trip any `f64`.
pub fn num(x: f64) -> String {
    format!("{x:.16e}")
}

/// A short human-readable rendering: at most twelve decimals, trailing zeros trimmed.
pub fn short(x: f64) -> String {
    let s = format!("{x:.12}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

/// `re+imi` with short components.
pub fn complex(z: Complex) -> String {
    let im = short(z.im.abs());
    let sign = if z.im < 0.0 && im != "0" { '-' } else { '+' };
    format!("{}{}{}i", short(z.re), sign, im)
}

/// One matrix row per line.
pub fn operator(op: &Operator) -> String {
    let mut out = String::new();
    for i in 0..op.dim() {
        let row: Vec<String> = (0..op.dim()).map(|j| complex(op.get(i, j))).collect();
        out.push_str("  [");
        out.push_str(&row.join(", "));
        out.push_str("]\n");
    }
    out
}

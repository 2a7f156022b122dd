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

//! Command-line front end for `pbr-core`.
//!
//! Subcommands print to a caller-supplied writer and return the process
//! exit code, so the same entry point serves the binary and the tests.
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | usage, parse or IO error |
//! | 2 | overlap above the two-qubit feasibility boundary |
//! | 3 | degenerate input pair |
//! | 4 | a forbidden outcome was sampled |

pub mod commands;
mod error;
pub mod figures;
pub mod format;
pub mod input;

pub use crate::commands::{run, Cli, Command};
pub use crate::error::CliError;

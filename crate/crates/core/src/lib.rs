// Copyright 2026 The flowopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Causal-flow preserving ZX-calculus optimisation of Clifford+T circuits.
//!
//! The pipeline converts a circuit into a graph-like ZX-diagram, lowers its
//! T-count by phase teleportation, greedily applies local complementations,
//! pivots and identity fusions that keep a causal flow and reduce the
//! two-qubit gate count, and finally extracts a circuit along the flow.
//!
//! ```
//! use flowopt::{optimizer::{flow_opt, OptimizerConfig}, qasm::parse_qasm};
//!
//! let c = parse_qasm("qreg q[2]; cx q[0],q[1]; t q[1]; cx q[0],q[1];").unwrap();
//! let out = flow_opt(&c, &OptimizerConfig::default()).unwrap();
//! assert!(out.two_qubit_count() <= 2);
//! ```

pub mod basic_opt;
pub mod circuit;
pub mod convert;
pub mod error;
pub mod extract;
pub mod flow;
pub mod graph;
pub mod optimizer;
pub mod phase;
pub mod qasm;
pub mod random;
pub mod rewrite;
pub mod suite;
pub mod teleport;
pub mod verify;

pub use circuit::{Circuit, Gate};
pub use error::{Error, ParseError, Result};
pub use graph::{VertexId, ZxDiagram};
pub use phase::{Phase, PhaseExpr};

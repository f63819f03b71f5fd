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

//! Clifford+T circuits.

use std::fmt;

use crate::error::{Error, Result};
use crate::phase::Phase;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Gate {
    H(usize),
    X(usize),
    Z(usize),
    S(usize),
    Sdg(usize),
    T(usize),
    Tdg(usize),
    /// Rotation `diag(1, e^{iπθ})` with θ in units of π.
    Rz(usize, Phase),
    Cnot {
        control: usize,
        target: usize,
    },
    Cz(usize, usize),
}

impl Gate {
    /// The canonical single-qubit gate for a Z rotation, or `None` for the
    /// identity.
    pub fn phase(q: usize, p: Phase) -> Option<Gate> {
        let g = match (p.numer(), p.denom()) {
            (0, _) => return None,
            (1, 1) => Gate::Z(q),
            (1, 2) => Gate::S(q),
            (3, 2) => Gate::Sdg(q),
            (1, 4) => Gate::T(q),
            (7, 4) => Gate::Tdg(q),
            _ => Gate::Rz(q, p),
        };
        Some(g)
    }

    /// The qubit and angle of a diagonal single-qubit gate.
    pub fn z_rotation(&self) -> Option<(usize, Phase)> {
        match *self {
            Gate::Z(q) => Some((q, Phase::pi())),
            Gate::S(q) => Some((q, Phase::new(1, 2))),
            Gate::Sdg(q) => Some((q, Phase::new(3, 2))),
            Gate::T(q) => Some((q, Phase::new(1, 4))),
            Gate::Tdg(q) => Some((q, Phase::new(7, 4))),
            Gate::Rz(q, p) => Some((q, p)),
            _ => None,
        }
    }

    pub fn qubits(&self) -> Vec<usize> {
        match *self {
            Gate::Cnot { control, target } => vec![control, target],
            Gate::Cz(a, b) => vec![a, b],
            Gate::H(q)
            | Gate::X(q)
            | Gate::Z(q)
            | Gate::S(q)
            | Gate::Sdg(q)
            | Gate::T(q)
            | Gate::Tdg(q) => vec![q],
            Gate::Rz(q, _) => vec![q],
        }
    }

    pub fn acts_on(&self, q: usize) -> bool {
        self.qubits().contains(&q)
    }

    pub fn is_two_qubit(&self) -> bool {
        matches!(self, Gate::Cnot { .. } | Gate::Cz(..))
    }

    /// A diagonal gate whose phase is not a multiple of π/2.
    pub fn is_non_clifford(&self) -> bool {
        self.z_rotation().is_some_and(|(_, p)| !p.is_clifford())
    }

    /// The inverse gate.
    pub fn inverse(&self) -> Gate {
        match *self {
            Gate::S(q) => Gate::Sdg(q),
            Gate::Sdg(q) => Gate::S(q),
            Gate::T(q) => Gate::Tdg(q),
            Gate::Tdg(q) => Gate::T(q),
            Gate::Rz(q, p) => Gate::Rz(q, -p),
            g => g,
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Gate::H(q) => write!(f, "h q[{q}]"),
            Gate::X(q) => write!(f, "x q[{q}]"),
            Gate::Z(q) => write!(f, "z q[{q}]"),
            Gate::S(q) => write!(f, "s q[{q}]"),
            Gate::Sdg(q) => write!(f, "sdg q[{q}]"),
            Gate::T(q) => write!(f, "t q[{q}]"),
            Gate::Tdg(q) => write!(f, "tdg q[{q}]"),
            Gate::Rz(q, p) => write!(f, "rz({p}) q[{q}]"),
            Gate::Cnot { control, target } => write!(f, "cx q[{control}],q[{target}]"),
            Gate::Cz(a, b) => write!(f, "cz q[{a}],q[{b}]"),
        }
    }
}

/// Gate counts used throughout reporting.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct GateCounts {
    pub two_qubit: usize,
    pub t: usize,
    pub total: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Circuit {
    pub n_qubits: usize,
    pub gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(n_qubits: usize) -> Circuit {
        Circuit {
            n_qubits,
            gates: Vec::new(),
        }
    }

    /// Append a gate, checking qubit indices.
    pub fn try_push(&mut self, g: Gate) -> Result<()> {
        let qs = g.qubits();
        if let Some(&q) = qs.iter().find(|&&q| q >= self.n_qubits) {
            return Err(Error::Invariant(format!(
                "qubit {q} out of range for {} qubits",
                self.n_qubits
            )));
        }
        if qs.len() == 2 && qs[0] == qs[1] {
            return Err(Error::Invariant(format!(
                "two-qubit gate on a single qubit {}",
                qs[0]
            )));
        }
        self.gates.push(g);
        Ok(())
    }

    /// Append a gate. Panics on invalid qubit indices.
    pub fn push(&mut self, g: Gate) {
        self.try_push(g).unwrap_or_else(|e| panic!("{e}"));
    }

    pub fn extend(&mut self, gates: impl IntoIterator<Item = Gate>) {
        for g in gates {
            self.push(g);
        }
    }

    /// Toffoli via the standard seven-T Clifford+T decomposition.
    pub fn ccx(&mut self, a: usize, b: usize, c: usize) {
        self.push(Gate::H(c));
        self.ccz(a, b, c);
        self.push(Gate::H(c));
    }

    /// Doubly controlled Z via the seven-T decomposition.
    pub fn ccz(&mut self, a: usize, b: usize, c: usize) {
        use Gate::*;
        self.extend([
            Cnot {
                control: b,
                target: c,
            },
            Tdg(c),
            Cnot {
                control: a,
                target: c,
            },
            T(c),
            Cnot {
                control: b,
                target: c,
            },
            Tdg(c),
            Cnot {
                control: a,
                target: c,
            },
            T(b),
            T(c),
        ]);
        self.extend([
            Cnot {
                control: a,
                target: b,
            },
            T(a),
            Tdg(b),
            Cnot {
                control: a,
                target: b,
            },
        ]);
    }

    pub fn two_qubit_count(&self) -> usize {
        self.gates.iter().filter(|g| g.is_two_qubit()).count()
    }

    pub fn t_count(&self) -> usize {
        self.gates.iter().filter(|g| g.is_non_clifford()).count()
    }

    pub fn counts(&self) -> GateCounts {
        GateCounts {
            two_qubit: self.two_qubit_count(),
            t: self.t_count(),
            total: self.gates.len(),
        }
    }

    /// The inverse circuit.
    pub fn adjoint(&self) -> Circuit {
        Circuit {
            n_qubits: self.n_qubits,
            gates: self.gates.iter().rev().map(Gate::inverse).collect(),
        }
    }
}

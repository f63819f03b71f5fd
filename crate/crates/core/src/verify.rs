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

//! Dense unitaries for circuits and diagrams, compared up to global phase.
//! Only for small instances; everything here is floating point.

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use crate::circuit::{Circuit, Gate};
use crate::error::{Error, Result};
use crate::graph::{EdgeKind, ZxDiagram};

/// Largest qubit count the dense oracle accepts.
pub const MAX_QUBITS: usize = 12;

/// Default comparison tolerance.
pub const TOLERANCE: f64 = 1e-8;

/// A `2^n × 2^n` complex matrix, row-major. Qubit `q` is bit `q` of a basis
/// index.
#[derive(Clone, PartialEq, Debug)]
pub struct DenseUnitary {
    pub n_qubits: usize,
    pub data: Vec<Complex64>,
}

impl DenseUnitary {
    pub fn identity(n_qubits: usize) -> DenseUnitary {
        let dim = 1 << n_qubits;
        let mut data = vec![Complex64::new(0.0, 0.0); dim * dim];
        for i in 0..dim {
            data[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        DenseUnitary { n_qubits, data }
    }

    pub fn dim(&self) -> usize {
        1 << self.n_qubits
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim() + col]
    }

    /// Largest deviation of `U†U` from the identity.
    pub fn unitarity_error(&self) -> f64 {
        let dim = self.dim();
        let mut worst: f64 = 0.0;
        for a in 0..dim {
            for b in 0..dim {
                let mut s = Complex64::new(0.0, 0.0);
                for r in 0..dim {
                    s += self.get(r, a).conj() * self.get(r, b);
                }
                let want = if a == b { 1.0 } else { 0.0 };
                worst = worst.max((s - want).norm());
            }
        }
        worst
    }

    fn apply_1q(&mut self, q: usize, m: [[Complex64; 2]; 2]) {
        let dim = self.dim();
        let bit = 1 << q;
        for row in 0..dim {
            if row & bit != 0 {
                continue;
            }
            let (r0, r1) = (row * dim, (row | bit) * dim);
            for col in 0..dim {
                let (a, b) = (self.data[r0 + col], self.data[r1 + col]);
                self.data[r0 + col] = m[0][0] * a + m[0][1] * b;
                self.data[r1 + col] = m[1][0] * a + m[1][1] * b;
            }
        }
    }

    fn apply_phase(&mut self, q: usize, theta: f64) {
        let dim = self.dim();
        let z = Complex64::from_polar(1.0, theta);
        for row in 0..dim {
            if row & (1 << q) != 0 {
                for x in &mut self.data[row * dim..(row + 1) * dim] {
                    *x *= z;
                }
            }
        }
    }

    fn apply_cnot(&mut self, c: usize, t: usize) {
        let dim = self.dim();
        for row in 0..dim {
            if row & (1 << c) != 0 && row & (1 << t) == 0 {
                let other = row | (1 << t);
                for col in 0..dim {
                    self.data.swap(row * dim + col, other * dim + col);
                }
            }
        }
    }

    fn apply_cz(&mut self, a: usize, b: usize) {
        let dim = self.dim();
        for row in 0..dim {
            if row & (1 << a) != 0 && row & (1 << b) != 0 {
                for x in &mut self.data[row * dim..(row + 1) * dim] {
                    *x = -*x;
                }
            }
        }
    }
}

/// The unitary of a circuit, gates applied in order.
pub fn circuit_unitary(c: &Circuit) -> Result<DenseUnitary> {
    if c.n_qubits > MAX_QUBITS {
        return Err(Error::TooLarge {
            what: "circuit",
            qubits: c.n_qubits,
            limit: MAX_QUBITS,
        });
    }
    let mut u = DenseUnitary::identity(c.n_qubits);
    let h = Complex64::new(FRAC_1_SQRT_2, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    for g in &c.gates {
        match *g {
            Gate::H(q) => u.apply_1q(q, [[h, h], [h, -h]]),
            Gate::X(q) => u.apply_1q(q, [[zero, one], [one, zero]]),
            Gate::Cnot { control, target } => u.apply_cnot(control, target),
            Gate::Cz(a, b) => u.apply_cz(a, b),
            _ => {
                let (q, p) = g.z_rotation().expect("diagonal gate");
                u.apply_phase(q, p.to_radians());
            }
        }
    }
    Ok(u)
}

/// Whether `a = c·b` for some unit complex `c`, entrywise within `tol`.
/// `c` is read off the largest-magnitude entry of `b`.
pub fn equal_up_to_global_phase(a: &DenseUnitary, b: &DenseUnitary, tol: f64) -> Result<bool> {
    if a.n_qubits != b.n_qubits {
        return Err(Error::Invariant(format!(
            "comparing {} and {} qubit matrices",
            a.n_qubits, b.n_qubits
        )));
    }
    let Some((k, _)) = b
        .data
        .iter()
        .enumerate()
        .max_by(|x, y| x.1.norm().total_cmp(&y.1.norm()))
    else {
        return Ok(true);
    };
    if b.data[k].norm() < 1e-12 {
        return Ok(a.data.iter().all(|x| x.norm() <= tol));
    }
    let ratio = a.data[k] / b.data[k];
    if ratio.norm() < 1e-12 {
        return Ok(false);
    }
    let c = ratio / ratio.norm();
    Ok(a.data
        .iter()
        .zip(&b.data)
        .all(|(x, y)| (x - c * y).norm() <= tol))
}

struct Factor {
    scope: Vec<usize>,
    table: Vec<Complex64>,
}

impl Factor {
    fn value(&self, assignment: &[u8]) -> Complex64 {
        let mut idx = 0;
        for (k, &v) in self.scope.iter().enumerate() {
            idx |= usize::from(assignment[v]) << k;
        }
        self.table[idx]
    }
}

/// Largest intermediate factor scope before contraction gives up.
const MAX_WIDTH: usize = 24;

/// The linear map of a diagram with inputs as columns and outputs as rows,
/// rescaled to Frobenius norm `2^{n/2}` so that diagrams of unitaries come
/// out unitary up to global phase.
pub fn diagram_tensor(d: &ZxDiagram) -> Result<DenseUnitary> {
    let n = d.num_inputs();
    if n != d.num_outputs() {
        return Err(Error::Unsupported("tensor of a non-square diagram".into()));
    }
    if n > MAX_QUBITS {
        return Err(Error::TooLarge {
            what: "diagram",
            qubits: n,
            limit: MAX_QUBITS,
        });
    }
    // Variables: one per spider, then one per input and output wire.
    let mut var_of = vec![usize::MAX; d.id_bound()];
    let mut n_vars = 0;
    for v in d.vertices() {
        var_of[v.index()] = n_vars;
        n_vars += 1;
    }
    let in_var = |k: usize| n_vars + k;
    let out_var = |k: usize| n_vars + n + k;
    let total_vars = n_vars + 2 * n;

    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let mut factors = Vec::new();
    let pair = |a: usize, b: usize, hadamard: bool| {
        let table = if hadamard {
            vec![one, one, one, -one]
        } else {
            vec![one, zero, zero, one]
        };
        Factor {
            scope: vec![a, b],
            table,
        }
    };
    for v in d.vertices() {
        let s = d.spider(v).expect("live");
        let p = s.phase.as_constant().ok_or(Error::UnresolvedVariable(v))?;
        let x = var_of[v.index()];
        factors.push(Factor {
            scope: vec![x],
            table: vec![one, Complex64::from_polar(1.0, p.to_radians())],
        });
        if let Some(w) = s.input {
            factors.push(pair(x, in_var(w.index), w.hadamard));
        }
        if let Some(w) = s.output {
            factors.push(pair(x, out_var(w.index), w.hadamard));
        }
    }
    for (u, v, k) in d.edges() {
        factors.push(pair(
            var_of[u.index()],
            var_of[v.index()],
            k == EdgeKind::Hadamard,
        ));
    }

    let mut alive: Vec<Option<Factor>> = factors.into_iter().map(Some).collect();
    let mut pending: Vec<usize> = (0..n_vars).collect();
    while !pending.is_empty() {
        // Eliminate the variable whose merged scope is smallest.
        let mut best: Option<(usize, usize, Vec<usize>)> = None;
        for (pos, &x) in pending.iter().enumerate() {
            let mut scope: Vec<usize> = Vec::new();
            for f in alive.iter().flatten() {
                if f.scope.contains(&x) {
                    scope.extend(f.scope.iter().copied().filter(|&y| y != x));
                }
            }
            scope.sort_unstable();
            scope.dedup();
            if best.as_ref().is_none_or(|b| scope.len() < b.2.len()) {
                best = Some((pos, x, scope));
            }
        }
        let (pos, x, scope) = best.expect("pending is non-empty");
        pending.swap_remove(pos);
        if scope.len() > MAX_WIDTH {
            return Err(Error::TooLarge {
                what: "contraction width",
                qubits: scope.len(),
                limit: MAX_WIDTH,
            });
        }
        let involved: Vec<Factor> = alive
            .iter_mut()
            .filter(|f| f.as_ref().is_some_and(|f| f.scope.contains(&x)))
            .map(|f| f.take().expect("checked"))
            .collect();
        let mut assignment = vec![0u8; total_vars];
        let mut table = vec![zero; 1 << scope.len()];
        for (idx, slot) in table.iter_mut().enumerate() {
            for (k, &y) in scope.iter().enumerate() {
                assignment[y] = ((idx >> k) & 1) as u8;
            }
            let mut acc = zero;
            for bit in 0..2 {
                assignment[x] = bit;
                acc += involved.iter().fold(one, |p, f| p * f.value(&assignment));
            }
            *slot = acc;
        }
        alive.push(Some(Factor { scope, table }));
    }

    let dim = 1usize << n;
    let mut data = vec![zero; dim * dim];
    let rest: Vec<Factor> = alive.into_iter().flatten().collect();
    let mut assignment = vec![0u8; total_vars];
    for row in 0..dim {
        for col in 0..dim {
            for k in 0..n {
                assignment[out_var(k)] = ((row >> k) & 1) as u8;
                assignment[in_var(k)] = ((col >> k) & 1) as u8;
            }
            data[row * dim + col] = rest.iter().fold(one, |p, f| p * f.value(&assignment));
        }
    }
    let norm: f64 = data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if norm > 0.0 {
        let scale = (dim as f64).sqrt() / norm;
        for z in &mut data {
            *z *= scale;
        }
    }
    Ok(DenseUnitary { n_qubits: n, data })
}

/// Whether a diagram and a circuit denote the same unitary up to phase.
pub fn diagram_equals_circuit(d: &ZxDiagram, c: &Circuit) -> Result<bool> {
    equal_up_to_global_phase(&diagram_tensor(d)?, &circuit_unitary(c)?, TOLERANCE)
}

/// Whether two circuits denote the same unitary up to phase.
pub fn circuits_equal(a: &Circuit, b: &Circuit) -> Result<bool> {
    equal_up_to_global_phase(&circuit_unitary(a)?, &circuit_unitary(b)?, TOLERANCE)
}

/// Whether two diagrams denote the same map up to a scalar.
pub fn diagrams_equal(a: &ZxDiagram, b: &ZxDiagram) -> Result<bool> {
    equal_up_to_global_phase(&diagram_tensor(a)?, &diagram_tensor(b)?, TOLERANCE)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convert::{circuit_to_diagram, graph_like_from_circuit};
    use crate::phase::Phase;

    fn c(n: usize, gates: Vec<Gate>) -> Circuit {
        Circuit { n_qubits: n, gates }
    }

    #[test]
    fn hadamard_matrix() {
        let u = circuit_unitary(&c(1, vec![Gate::H(0)])).unwrap();
        let h = FRAC_1_SQRT_2;
        let want = [h, h, h, -h];
        for (x, w) in u.data.iter().zip(want) {
            assert!((x - Complex64::new(w, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn cnot_matrix() {
        let u = circuit_unitary(&c(
            2,
            vec![Gate::Cnot {
                control: 0,
                target: 1,
            }],
        ))
        .unwrap();
        // Basis index = q0 + 2 q1: |01> (q0 = 1) maps to |11>.
        let perm = [0, 3, 2, 1];
        for (col, &row) in perm.iter().enumerate() {
            assert!((u.get(row, col) - 1.0).norm() < 1e-12);
        }
        assert!(u.unitarity_error() < 1e-12);
    }

    #[test]
    fn global_phase_comparisons() {
        let a = circuit_unitary(&c(1, vec![Gate::T(0), Gate::T(0)])).unwrap();
        let b = circuit_unitary(&c(1, vec![Gate::S(0)])).unwrap();
        assert!(equal_up_to_global_phase(&a, &b, TOLERANCE).unwrap());
        let mut rotated = a.clone();
        for z in &mut rotated.data {
            *z *= Complex64::from_polar(1.0, std::f64::consts::PI / 7.0);
        }
        assert!(equal_up_to_global_phase(&rotated, &a, TOLERANCE).unwrap());
        let h = circuit_unitary(&c(1, vec![Gate::H(0)])).unwrap();
        let x = circuit_unitary(&c(1, vec![Gate::X(0)])).unwrap();
        assert!(!equal_up_to_global_phase(&h, &x, TOLERANCE).unwrap());
        let cz = c(2, vec![Gate::H(1), Gate::Cz(0, 1), Gate::H(1)]);
        assert!(circuits_equal(
            &cz,
            &c(
                2,
                vec![Gate::Cnot {
                    control: 0,
                    target: 1
                }]
            )
        )
        .unwrap());
        assert!(
            equal_up_to_global_phase(&h, &circuit_unitary(&c(2, vec![])).unwrap(), TOLERANCE)
                .is_err()
        );
    }

    #[test]
    fn z_spider_tensor() {
        let mut d = ZxDiagram::new();
        let v = d.add_spider(Phase::new(1, 3));
        d.push_input(v, false).unwrap();
        d.push_output(v, false).unwrap();
        let t = diagram_tensor(&d).unwrap();
        let want = circuit_unitary(&c(1, vec![Gate::Rz(0, Phase::new(1, 3))])).unwrap();
        assert!(equal_up_to_global_phase(&t, &want, TOLERANCE).unwrap());
    }

    #[test]
    fn graph_like_cnot_and_identity() {
        let cnot = c(
            2,
            vec![Gate::Cnot {
                control: 0,
                target: 1,
            }],
        );
        assert!(diagram_equals_circuit(&circuit_to_diagram(&cnot), &cnot).unwrap());
        assert!(diagram_equals_circuit(&graph_like_from_circuit(&cnot), &cnot).unwrap());
        let id = c(3, vec![]);
        assert!(diagram_equals_circuit(&graph_like_from_circuit(&id), &id).unwrap());
    }

    #[test]
    fn toffoli_decomposition() {
        let mut t = Circuit::new(3);
        t.ccx(0, 1, 2);
        let u = circuit_unitary(&t).unwrap();
        let mut want = DenseUnitary::identity(3);
        want.data = vec![Complex64::new(0.0, 0.0); 64];
        for col in 0..8 {
            let row = if col & 3 == 3 { col ^ 4 } else { col };
            want.data[row * 8 + col] = Complex64::new(1.0, 0.0);
        }
        assert!(equal_up_to_global_phase(&u, &want, TOLERANCE).unwrap());
    }

    #[test]
    fn size_cap() {
        assert!(matches!(
            circuit_unitary(&Circuit::new(13)),
            Err(Error::TooLarge { .. })
        ));
    }
}

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

//! Peephole gate cancellation with commutation.

use crate::circuit::{Circuit, Gate};

/// Whether `g` can be moved past `other` (in either direction) unchanged.
fn commutes(g: &Gate, other: &Gate) -> bool {
    let oq = other.qubits();
    if !g.qubits().iter().any(|q| oq.contains(q)) {
        return true;
    }
    let diagonal = |x: &Gate| x.z_rotation().is_some() || matches!(x, Gate::Cz(..));
    if diagonal(g) && diagonal(other) {
        return true;
    }
    match (*g, *other) {
        (
            Gate::Cnot {
                control: c1,
                target: t1,
            },
            Gate::Cnot {
                control: c2,
                target: t2,
            },
        ) => c1 != t2 && t1 != c2,
        (Gate::Cnot { control, target }, x) | (x, Gate::Cnot { control, target }) => match x {
            Gate::Cz(a, b) => a != target && b != target,
            Gate::X(q) => q == target,
            _ => x.z_rotation().is_some_and(|(q, _)| q == control),
        },
        _ => false,
    }
}

/// Try to merge `g` into `partner`, returning the gates that replace both
/// (possibly none), or `None` when they do not merge.
fn merge(partner: &Gate, g: &Gate) -> Option<Vec<Gate>> {
    match (*partner, *g) {
        (Gate::H(a), Gate::H(b)) | (Gate::X(a), Gate::X(b)) if a == b => Some(vec![]),
        (Gate::Cz(a, b), Gate::Cz(c, d)) if (a, b) == (c, d) || (a, b) == (d, c) => Some(vec![]),
        (
            Gate::Cnot {
                control: a,
                target: b,
            },
            Gate::Cnot {
                control: c,
                target: d,
            },
        ) if (a, b) == (c, d) => Some(vec![]),
        (Gate::Cnot { control, target }, Gate::Cz(a, b))
        | (Gate::Cz(a, b), Gate::Cnot { control, target })
            if (a, b) == (control, target) || (b, a) == (control, target) =>
        {
            // A controlled iY (or -iY), written with one CNOT.
            let c = if matches!(partner, Gate::Cnot { .. }) {
                Gate::S(control)
            } else {
                Gate::Sdg(control)
            };
            Some(vec![
                Gate::Sdg(target),
                Gate::Cnot { control, target },
                Gate::S(target),
                c,
            ])
        }
        _ => {
            let (q1, p1) = partner.z_rotation()?;
            let (q2, p2) = g.z_rotation()?;
            (q1 == q2).then(|| Gate::phase(q1, p1 + p2).into_iter().collect())
        }
    }
}

/// One left-to-right cancellation sweep. Returns whether anything changed.
fn cancel_pass(gates: &[Gate]) -> (Vec<Gate>, bool) {
    let mut out: Vec<Gate> = Vec::with_capacity(gates.len());
    let mut changed = false;
    'next: for g in gates {
        for i in (0..out.len()).rev() {
            if let Some(m) = merge(&out[i], g) {
                out.splice(i..=i, m);
                changed = true;
                continue 'next;
            }
            if !commutes(g, &out[i]) {
                break;
            }
        }
        out.push(*g);
    }
    (out, changed)
}

/// Replace `H(t) CZ(c,t) H(t)` by `CNOT(c,t)` when nothing else touches `t`
/// in between.
fn cnot_pass(gates: &[Gate]) -> (Vec<Gate>, bool) {
    let mut out: Vec<Option<Gate>> = gates.iter().copied().map(Some).collect();
    let mut changed = false;
    for i in 0..out.len() {
        let Some(Gate::Cz(a, b)) = out[i] else {
            continue;
        };
        for (c, t) in [(a, b), (b, a)] {
            let before = (0..i).rev().find(|&j| out[j].is_some_and(|g| g.acts_on(t)));
            let after = (i + 1..out.len()).find(|&j| out[j].is_some_and(|g| g.acts_on(t)));
            if let (Some(j), Some(k)) = (before, after) {
                if out[j] == Some(Gate::H(t)) && out[k] == Some(Gate::H(t)) {
                    out[j] = None;
                    out[k] = None;
                    out[i] = Some(Gate::Cnot {
                        control: c,
                        target: t,
                    });
                    changed = true;
                    break;
                }
            }
        }
    }
    (out.into_iter().flatten().collect(), changed)
}

/// Cancel and fuse gates until nothing changes: `H·H`, `X·X`, repeated CZ
/// or CNOT pairs, and adjacent Z rotations, looking past gates that
/// commute in either direction. A CZ meeting a CNOT on the same pair
/// becomes one CNOT with S gates. Finally rebuild CNOTs from Hadamard-conjugated CZs. Never
/// increases the two-qubit or T count.
pub fn basic_optimize(c: &Circuit) -> Circuit {
    let mut gates = c.gates.clone();
    loop {
        let (g1, a) = cancel_pass(&gates);
        // The same sweep on the adjoint moves gates to the right instead.
        let inv: Vec<Gate> = g1.iter().rev().map(Gate::inverse).collect();
        let (g2, b) = cancel_pass(&inv);
        let g2: Vec<Gate> = g2.iter().rev().map(Gate::inverse).collect();
        let (g3, c) = cnot_pass(&g2);
        gates = g3;
        if !a && !b && !c {
            break;
        }
    }
    Circuit {
        n_qubits: c.n_qubits,
        gates,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phase::Phase;

    fn run(n: usize, gates: Vec<Gate>) -> Vec<Gate> {
        basic_optimize(&Circuit { n_qubits: n, gates }).gates
    }

    #[test]
    fn hadamard_pair() {
        assert_eq!(run(1, vec![Gate::H(0), Gate::H(0)]), vec![]);
    }

    #[test]
    fn t_t_is_s() {
        assert_eq!(run(1, vec![Gate::T(0), Gate::T(0)]), vec![Gate::S(0)]);
        assert_eq!(run(1, vec![Gate::T(0), Gate::Tdg(0)]), vec![]);
        assert_eq!(
            run(1, vec![Gate::S(0), Gate::T(0)]),
            vec![Gate::Rz(0, Phase::new(3, 4))]
        );
    }

    #[test]
    fn cz_pair_around_phase() {
        assert_eq!(
            run(2, vec![Gate::Cz(0, 1), Gate::Z(0), Gate::Cz(1, 0)]),
            vec![Gate::Z(0)]
        );
    }

    #[test]
    fn cnot_commutation() {
        let cx = |c, t| Gate::Cnot {
            control: c,
            target: t,
        };
        assert_eq!(run(3, vec![cx(0, 1), cx(0, 2), cx(0, 1)]), vec![cx(0, 2)]);
        assert_eq!(
            run(2, vec![cx(0, 1), Gate::T(0), cx(0, 1)]),
            vec![Gate::T(0)]
        );
        assert_eq!(run(2, vec![cx(0, 1), Gate::T(1), cx(0, 1)]).len(), 3);
        assert_eq!(
            run(2, vec![cx(0, 1), Gate::X(1), cx(0, 1)]),
            vec![Gate::X(1)]
        );
    }

    #[test]
    fn rebuilds_cnot() {
        let g = run(2, vec![Gate::H(1), Gate::Cz(0, 1), Gate::H(1)]);
        assert_eq!(
            g,
            vec![Gate::Cnot {
                control: 0,
                target: 1
            }]
        );
        let g = run(2, vec![Gate::H(0), Gate::Cz(0, 1), Gate::T(0), Gate::H(0)]);
        assert_eq!(g.len(), 4);
    }

    #[test]
    fn cz_folds_into_cnot() {
        let cx = Gate::Cnot {
            control: 0,
            target: 1,
        };
        for gates in [
            vec![cx, Gate::Cz(1, 0)],
            vec![Gate::Cz(0, 1), Gate::T(0), cx],
        ] {
            let c = Circuit { n_qubits: 2, gates };
            let out = basic_optimize(&c);
            assert_eq!(out.two_qubit_count(), 1);
            assert!(crate::verify::circuits_equal(&c, &out).unwrap());
        }
    }

    #[test]
    fn idempotent() {
        let gates = vec![
            Gate::H(0),
            Gate::Cz(0, 1),
            Gate::H(0),
            Gate::T(1),
            Gate::Cnot {
                control: 1,
                target: 0,
            },
            Gate::H(0),
            Gate::H(0),
        ];
        let once = basic_optimize(&Circuit { n_qubits: 2, gates });
        assert_eq!(basic_optimize(&once), once);
    }
}

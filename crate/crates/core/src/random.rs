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

//! Seeded random Clifford+T circuits.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::circuit::{Circuit, Gate};
use crate::error::{Error, Result};

/// Draw `n_gates` gates independently: with probability `p_t` a T gate on a
/// uniform qubit, otherwise H, S or CNOT with equal probability on uniform
/// qubits (distinct for CNOT). Single-qubit circuits draw only H and S.
pub fn random_circuit(n_qubits: usize, n_gates: usize, p_t: f64, seed: u64) -> Result<Circuit> {
    if !(0.0..=1.0).contains(&p_t) {
        return Err(Error::InvalidArgument(format!(
            "T probability {p_t} is not in [0, 1]"
        )));
    }
    if n_qubits == 0 && n_gates > 0 {
        return Err(Error::InvalidArgument(
            "cannot place gates on zero qubits".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut c = Circuit::new(n_qubits);
    for _ in 0..n_gates {
        let q = rng.gen_range(0..n_qubits);
        if rng.gen_bool(p_t) {
            c.push(Gate::T(q));
            continue;
        }
        let kinds = if n_qubits > 1 { 3 } else { 2 };
        match rng.gen_range(0..kinds) {
            0 => c.push(Gate::H(q)),
            1 => c.push(Gate::S(q)),
            _ => {
                let t = (q + rng.gen_range(1..n_qubits)) % n_qubits;
                c.push(Gate::Cnot {
                    control: q,
                    target: t,
                });
            }
        }
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clifford_only_without_t() {
        let c = random_circuit(5, 300, 0.0, 7).unwrap();
        assert_eq!(c.gates.len(), 300);
        assert_eq!(c.t_count(), 0);
    }

    #[test]
    fn deterministic_per_seed() {
        assert_eq!(
            random_circuit(4, 50, 0.2, 3).unwrap(),
            random_circuit(4, 50, 0.2, 3).unwrap()
        );
        assert_ne!(
            random_circuit(4, 50, 0.2, 3).unwrap(),
            random_circuit(4, 50, 0.2, 4).unwrap()
        );
    }

    #[test]
    fn t_fraction_is_binomial() {
        // 100 seeds × 400 gates at p = 0.1: mean 4000, sd = sqrt(40000·0.09) = 60.
        let total: usize = (0..100)
            .map(|s| random_circuit(8, 400, 0.1, s).unwrap().t_count())
            .sum();
        assert!((total as f64 - 4000.0).abs() < 5.0 * 60.0, "{total}");
    }

    #[test]
    fn rejects_bad_probability() {
        assert!(random_circuit(2, 10, 1.5, 0).is_err());
        assert!(random_circuit(2, 10, f64::NAN, 0).is_err());
        assert!(random_circuit(0, 1, 0.5, 0).is_err());
    }
}

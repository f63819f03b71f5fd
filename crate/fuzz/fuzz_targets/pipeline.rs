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

#![no_main]

use flowopt::optimizer::{flow_opt, OptimizerConfig};
use flowopt::qasm::parse_qasm;
use flowopt::verify::circuits_equal;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(src) = std::str::from_utf8(data) else { return };
    let Ok(c) = parse_qasm(src) else { return };
    if c.n_qubits > 5 || c.gates.len() > 80 {
        return;
    }
    let out = flow_opt(&c, &OptimizerConfig::default()).expect("pipeline succeeds on valid circuits");
    assert!(circuits_equal(&c, &out).unwrap(), "optimised circuit differs");
});

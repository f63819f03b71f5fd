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

//! Replays the checked-in fuzz corpus with the checks of each fuzz target.

use std::fs;
use std::path::PathBuf;

use flowopt::optimizer::{flow_opt, OptimizerConfig};
use flowopt::phase::parse_phase;
use flowopt::qasm::{emit_qasm, parse_qasm};
use flowopt::verify::circuits_equal;

fn corpus(target: &str) -> Vec<(PathBuf, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut files: Vec<PathBuf> = fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    files.sort();
    assert!(!files.is_empty(), "empty corpus {}", dir.display());
    files
        .into_iter()
        .filter_map(|p| {
            let text = String::from_utf8(fs::read(&p).unwrap()).ok()?;
            Some((p, text))
        })
        .collect()
}

#[test]
fn parse_qasm_seeds() {
    let results: Vec<bool> = corpus("parse_qasm")
        .iter()
        .map(|(_, s)| parse_qasm(s).is_ok())
        .collect();
    assert!(results.contains(&true) && results.contains(&false));
}

#[test]
fn qasm_roundtrip_seeds() {
    for (path, src) in corpus("qasm_roundtrip") {
        let c = parse_qasm(&src).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        let text = emit_qasm(&c);
        let back = parse_qasm(&text).unwrap();
        assert_eq!(back, c);
        assert_eq!(emit_qasm(&back), text);
    }
}

#[test]
fn parse_phase_seeds() {
    for (_, src) in corpus("parse_phase") {
        if let Ok(p) = parse_phase(&src) {
            assert_eq!(parse_phase(&p.to_string()), Ok(p));
        }
    }
}

#[test]
fn pipeline_seeds() {
    for (path, src) in corpus("pipeline") {
        let c = parse_qasm(&src).unwrap();
        let out = flow_opt(&c, &OptimizerConfig::default()).unwrap();
        assert!(circuits_equal(&c, &out).unwrap(), "{}", path.display());
    }
}

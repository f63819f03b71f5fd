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

//! A reader and writer for the OpenQASM 2.0 subset used by Clifford+T
//! benchmark circuits.
//!
//! Accepted statements: an optional `OPENQASM 2.0;` header, `include`, a
//! single `qreg`, any number of `creg` and `barrier` (both ignored), and the
//! gates `h x y z s sdg t tdg rz cx cz ccx ccz`. `ccx` and `ccz` expand into
//! their seven-T decompositions and `y` into `z; x` (equal up to a global
//! phase).

use std::fmt::Write as _;

use crate::circuit::{Circuit, Gate};
use crate::error::ParseError;
use crate::phase::parse_phase;

/// Largest register accepted by the parser.
pub const MAX_QUBITS: usize = 1 << 16;

struct Statement<'a> {
    line: usize,
    text: &'a str,
    terminated: bool,
}

fn statements(src: &str) -> Vec<Statement<'_>> {
    let mut out = Vec::new();
    let mut line = 1;
    let mut start: Option<(usize, usize)> = None;
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c == b'/' && bytes.get(i + 1) == Some(&b'/') {
            while i < bytes.len() && bytes[i] != b'\n' {
                i += 1;
            }
            continue;
        }
        match c {
            b'\n' => line += 1,
            b';' => {
                let (s, l) = start.take().unwrap_or((i, line));
                out.push(Statement {
                    line: l,
                    text: &src[s..i],
                    terminated: true,
                });
            }
            c if !c.is_ascii_whitespace() && start.is_none() => start = Some((i, line)),
            _ => {}
        }
        i += 1;
    }
    if let Some((s, l)) = start {
        out.push(Statement {
            line: l,
            text: &src[s..],
            terminated: false,
        });
    }
    out
}

/// Strip `//` comments that begin inside a statement's text.
fn without_comments(text: &str) -> String {
    text.lines()
        .map(|l| l.split("//").next().unwrap_or(""))
        .collect::<Vec<_>>()
        .join("\n")
}

/// Parse QASM source into a circuit.
pub fn parse_qasm(src: &str) -> Result<Circuit, ParseError> {
    let mut reg: Option<(String, usize)> = None;
    let mut circuit = Circuit::new(0);
    for (k, st) in statements(src).into_iter().enumerate() {
        let text = without_comments(st.text);
        let text = text.trim();
        let line = st.line;
        if text.is_empty() {
            continue;
        }
        if !st.terminated {
            return Err(ParseError::new(line, "missing `;`"));
        }
        let (head, rest) = split_head(text);
        match head {
            "OPENQASM" => {
                if k != 0 {
                    return Err(ParseError::new(line, "OPENQASM header must come first"));
                }
                if rest.trim() != "2.0" {
                    return Err(ParseError::new(
                        line,
                        format!("unsupported OpenQASM version `{}`", rest.trim()),
                    ));
                }
            }
            "include" => {}
            "qreg" => {
                if reg.is_some() {
                    return Err(ParseError::new(line, "only a single qreg is supported"));
                }
                let (name, size) = parse_register(rest, line)?;
                if size > MAX_QUBITS {
                    return Err(ParseError::new(
                        line,
                        format!("register of {size} qubits exceeds {MAX_QUBITS}"),
                    ));
                }
                circuit.n_qubits = size;
                reg = Some((name, size));
            }
            "creg" => {
                parse_register(rest, line)?;
            }
            "barrier" => {}
            _ => {
                let Some((name, size)) = &reg else {
                    return Err(ParseError::new(line, "gate before qreg declaration"));
                };
                parse_gate(text, name, *size, line, &mut circuit)?;
            }
        }
    }
    Ok(circuit)
}

fn split_head(text: &str) -> (&str, &str) {
    let end = text
        .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
        .unwrap_or(text.len());
    (&text[..end], &text[end..])
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    chars
        .next()
        .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parses `name[size]`.
fn parse_register(rest: &str, line: usize) -> Result<(String, usize), ParseError> {
    let (name, index) = parse_indexed(rest.trim(), line)?;
    Ok((name.to_string(), index))
}

fn parse_indexed(s: &str, line: usize) -> Result<(&str, usize), ParseError> {
    let malformed = || ParseError::new(line, format!("expected `name[index]`, found `{s}`"));
    let open = s.find('[').ok_or_else(malformed)?;
    if !s.ends_with(']') {
        return Err(malformed());
    }
    let name = s[..open].trim();
    if !is_identifier(name) {
        return Err(malformed());
    }
    let idx = s[open + 1..s.len() - 1].trim();
    let idx: usize = idx.parse().map_err(|_| malformed())?;
    Ok((name, idx))
}

fn parse_gate(
    text: &str,
    reg: &str,
    size: usize,
    line: usize,
    c: &mut Circuit,
) -> Result<(), ParseError> {
    let (name, mut rest) = split_head(text);
    let mut param = None;
    let trimmed = rest.trim_start();
    if let Some(after) = trimmed.strip_prefix('(') {
        let mut depth = 1;
        let close = after
            .char_indices()
            .find(|&(_, ch)| {
                match ch {
                    '(' => depth += 1,
                    ')' => depth -= 1,
                    _ => {}
                }
                depth == 0
            })
            .map(|(i, _)| i)
            .ok_or_else(|| ParseError::new(line, "unbalanced parentheses"))?;
        param = Some(&after[..close]);
        rest = &after[close + 1..];
    }
    let args: Vec<usize> = if rest.trim().is_empty() {
        Vec::new()
    } else {
        rest.split(',')
            .map(|a| {
                let (r, i) = parse_indexed(a.trim(), line)?;
                if r != reg {
                    return Err(ParseError::new(line, format!("unknown register `{r}`")));
                }
                if i >= size {
                    return Err(ParseError::new(
                        line,
                        format!("qubit index {i} out of range for {reg}[{size}]"),
                    ));
                }
                Ok(i)
            })
            .collect::<Result<_, _>>()?
    };
    let arity = match name {
        "h" | "x" | "y" | "z" | "s" | "sdg" | "t" | "tdg" | "rz" => 1,
        "cx" | "CX" | "cz" => 2,
        "ccx" | "ccz" => 3,
        _ => return Err(ParseError::new(line, format!("unknown gate `{name}`"))),
    };
    if args.len() != arity {
        return Err(ParseError::new(
            line,
            format!("`{name}` takes {arity} qubit(s), found {}", args.len()),
        ));
    }
    for i in 0..args.len() {
        if args[i + 1..].contains(&args[i]) {
            return Err(ParseError::new(
                line,
                format!("repeated qubit {} in `{name}`", args[i]),
            ));
        }
    }
    if (name == "rz") != param.is_some() {
        return Err(ParseError::new(
            line,
            format!("wrong parameters for `{name}`"),
        ));
    }
    let q = args[0];
    match name {
        "h" => c.push(Gate::H(q)),
        "x" => c.push(Gate::X(q)),
        "y" => c.extend([Gate::Z(q), Gate::X(q)]),
        "z" => c.push(Gate::Z(q)),
        "s" => c.push(Gate::S(q)),
        "sdg" => c.push(Gate::Sdg(q)),
        "t" => c.push(Gate::T(q)),
        "tdg" => c.push(Gate::Tdg(q)),
        "rz" => {
            let p = parse_phase(param.unwrap_or_default())
                .map_err(|e| ParseError::from_phase(line, e))?;
            c.push(Gate::Rz(q, p));
        }
        "cx" | "CX" => c.push(Gate::Cnot {
            control: q,
            target: args[1],
        }),
        "cz" => c.push(Gate::Cz(q, args[1])),
        "ccx" => c.ccx(q, args[1], args[2]),
        "ccz" => c.ccz(q, args[1], args[2]),
        _ => unreachable!(),
    }
    Ok(())
}

/// Render a circuit as OpenQASM 2.0. Parsing the result gives back the same
/// gate list.
pub fn emit_qasm(c: &Circuit) -> String {
    let mut out = String::new();
    out.push_str("OPENQASM 2.0;\ninclude \"qelib1.inc\";\n");
    let _ = writeln!(out, "qreg q[{}];", c.n_qubits);
    for g in &c.gates {
        let _ = writeln!(out, "{g};");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phase::Phase;
    use proptest::prelude::*;

    #[test]
    fn minimal_program() {
        let c = parse_qasm("qreg q[2]; cx q[0],q[1];").unwrap();
        assert_eq!(
            c,
            Circuit {
                n_qubits: 2,
                gates: vec![Gate::Cnot {
                    control: 0,
                    target: 1
                }]
            }
        );
    }

    #[test]
    fn two_t_gates() {
        let c = parse_qasm("OPENQASM 2.0;\nqreg q[1];\nt q[0];\nt q[0];\n").unwrap();
        assert_eq!(c.t_count(), 2);
    }

    #[test]
    fn comments_and_classical_registers() {
        let src = "// header\nOPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[3]; // data\ncreg c[3];\nh q[2]; // trailing\nrz(-pi/4) q[1];\n";
        let c = parse_qasm(src).unwrap();
        assert_eq!(c.gates, vec![Gate::H(2), Gate::Rz(1, Phase::new(7, 4))]);
    }

    #[test]
    fn toffoli_expands() {
        let c = parse_qasm("qreg q[3]; ccx q[0],q[1],q[2];").unwrap();
        assert_eq!(c.counts().two_qubit, 6);
        assert_eq!(c.t_count(), 7);
        assert_eq!(c.gates.len(), 15);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("qreg q[2];\nfoo q[0];", 2),
            ("qreg q[2];\n\n cx q[0],q[2];", 3),
            ("OPENQASM 3.0;", 1),
            ("h q[0];", 1),
            ("qreg q[1];\nrz(0.3) q[0];", 2),
            ("qreg q[2];\nqreg r[2];", 2),
            ("qreg q[2];\ncx q[0],q[0];", 2),
            ("qreg q[2];\nh r[0];", 2),
            ("qreg q[2];\nh q[0]", 2),
            ("qreg q[1];\nh q[0],q[0];", 2),
        ];
        for (src, line) in cases {
            let e = parse_qasm(src).unwrap_err();
            assert_eq!(e.line, line, "{src}: {e}");
        }
    }

    #[test]
    fn empty_circuit_emits_header_only() {
        let text = emit_qasm(&Circuit::new(2));
        assert_eq!(text, "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\n");
    }

    #[test]
    fn emits_hadamard() {
        let mut c = Circuit::new(1);
        c.push(Gate::H(0));
        assert!(emit_qasm(&c).ends_with("h q[0];\n"));
    }

    fn arb_gate(n: usize) -> impl Strategy<Value = Gate> {
        let q = 0..n;
        prop_oneof![
            q.clone().prop_map(Gate::H),
            q.clone().prop_map(Gate::X),
            q.clone().prop_map(Gate::Z),
            q.clone().prop_map(Gate::S),
            q.clone().prop_map(Gate::Sdg),
            q.clone().prop_map(Gate::T),
            q.clone().prop_map(Gate::Tdg),
            (q.clone(), -40i64..40, 0u32..5)
                .prop_map(|(q, k, e)| Gate::Rz(q, Phase::new(k, 1 << e))),
            (q.clone(), 1..n).prop_map(move |(a, o)| Gate::Cnot {
                control: a,
                target: (a + o) % n
            }),
            (q, 1..n).prop_map(move |(a, o)| Gate::Cz(a, (a + o) % n)),
        ]
    }

    proptest! {
        #[test]
        fn round_trip(gates in proptest::collection::vec(arb_gate(4), 0..40)) {
            let c = Circuit { n_qubits: 4, gates };
            prop_assert_eq!(parse_qasm(&emit_qasm(&c)).unwrap(), c);
        }

        #[test]
        fn never_panics(src in "[a-z0-9;\\[\\]()\\n ,/.*+-]{0,80}") {
            let _ = parse_qasm(&src);
        }
    }
}

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

//! The standard arithmetic benchmark circuits.
//!
//! Circuits with a published construction are rebuilt here from Toffoli
//! and CNOT gates using the seven-T Toffoli decomposition. The others can
//! be supplied as `<name>.qasm` files through [`load`].

use std::fs;
use std::path::Path;

use crate::circuit::{Circuit, Gate};
use crate::error::{Error, Result};
use crate::qasm::parse_qasm;

/// Published counts for one benchmark: the original circuit and the
/// result of flow-preserving optimisation with subsets of size at most 2.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Reference {
    pub name: &'static str,
    pub qubits: usize,
    pub two_qubit: usize,
    pub t: usize,
    pub optimised_two_qubit: usize,
    pub optimised_t: usize,
}

const fn r(
    name: &'static str,
    q: usize,
    two_qubit: usize,
    t: usize,
    o2q: usize,
    ot: usize,
) -> Reference {
    Reference {
        name,
        qubits: q,
        two_qubit,
        t,
        optimised_two_qubit: o2q,
        optimised_t: ot,
    }
}

pub const REFERENCES: [Reference; 22] = [
    r("adder_8", 24, 409, 399, 277, 173),
    r("barenco_tof_4", 7, 48, 56, 37, 28),
    r("barenco_tof_5", 9, 72, 84, 55, 40),
    r("barenco_tof_10", 19, 192, 224, 146, 100),
    r("tof_4", 7, 30, 35, 24, 23),
    r("tof_5", 9, 42, 49, 33, 31),
    r("tof_10", 19, 102, 119, 78, 71),
    r("csla_mux_3", 15, 80, 70, 73, 62),
    r("csum_mux_9", 30, 168, 196, 140, 84),
    r("gf2^4_mult", 12, 99, 112, 94, 68),
    r("gf2^5_mult", 15, 154, 175, 146, 115),
    r("gf2^6_mult", 18, 221, 252, 209, 150),
    r("gf2^7_mult", 21, 300, 343, 283, 217),
    r("gf2^8_mult", 24, 405, 448, 383, 264),
    r("mod_mult_55", 9, 48, 49, 40, 35),
    r("mod_red_21", 11, 105, 119, 83, 73),
    r("mod5_4", 5, 28, 28, 21, 8),
    r("qcla_adder_10", 36, 233, 238, 182, 162),
    r("qcla_com_7", 24, 186, 203, 133, 95),
    r("qcla_mod_7", 26, 382, 413, 296, 237),
    r("rc_adder_6", 14, 93, 77, 71, 47),
    r("vbe_adder_3", 10, 70, 70, 39, 24),
];

pub fn reference(name: &str) -> Option<&'static Reference> {
    REFERENCES.iter().find(|r| r.name == name)
}

/// A reversible gate of a benchmark construction.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Op {
    X(usize),
    Cx(usize, usize),
    Ccx(usize, usize, usize),
}

fn build(n: usize, ops: &[Op]) -> Circuit {
    let mut c = Circuit::new(n);
    for op in ops {
        match *op {
            Op::X(q) => c.push(Gate::X(q)),
            Op::Cx(a, b) => c.push(Gate::Cnot {
                control: a,
                target: b,
            }),
            Op::Ccx(a, b, t) => c.ccx(a, b, t),
        }
    }
    c
}

fn tof_ops(n: usize) -> Vec<Op> {
    let anc = |i: usize| n + i;
    let mut ladder = vec![Op::Ccx(0, 1, anc(0))];
    for i in 2..n - 1 {
        ladder.push(Op::Ccx(i, anc(i - 2), anc(i - 1)));
    }
    let mut ops = ladder.clone();
    ops.push(Op::Ccx(n - 1, anc(n - 3), 2 * n - 2));
    ops.extend(ladder.iter().rev());
    ops
}

/// Multi-controlled Toffoli with `n` controls and `n - 2` clean ancillas,
/// computed and uncomputed along a ladder.
pub fn tof(n: usize) -> Circuit {
    assert!(n >= 3, "tof needs at least three controls");
    build(2 * n - 1, &tof_ops(n))
}

fn barenco_ops(n: usize) -> Vec<Op> {
    let ctrl = |k: usize| k - 1;
    let anc = |k: usize| n + k - 1;
    let ladder: Vec<Op> = (0..n - 2)
        .map(|j| {
            let t = if j == 0 { 2 * n - 2 } else { anc(n - 1 - j) };
            Op::Ccx(ctrl(n - j), anc(n - 2 - j), t)
        })
        .collect();
    let bottom = Op::Ccx(ctrl(1), ctrl(2), anc(1));
    let mut ops = Vec::new();
    for half in [&ladder[..], &ladder[1..]] {
        ops.extend(half.iter().copied());
        ops.push(bottom);
        ops.extend(half.iter().rev().copied());
    }
    ops
}

/// Multi-controlled Toffoli with `n` controls and `n - 2` dirty ancillas
/// in the usual V-shaped arrangement.
pub fn barenco_tof(n: usize) -> Circuit {
    assert!(n >= 3, "barenco_tof needs at least three controls");
    build(2 * n - 1, &barenco_ops(n))
}

/// Reduction terms `k` with `x^n = 1 + Σ x^k` for the field polynomials
/// used by the multiplier benchmarks.
fn gf_terms(n: usize) -> Option<&'static [usize]> {
    Some(match n {
        4 | 6 | 7 => &[1],
        5 => &[2],
        8 => &[1, 3, 4],
        _ => return None,
    })
}

/// Returns the ops and the qubit holding each coefficient of the product.
fn gf_ops(n: usize) -> Option<(Vec<Op>, Vec<usize>)> {
    let terms = gf_terms(n)?;
    let mut ops = Vec::new();
    let mut perm: Vec<usize> = (2 * n..3 * n).collect();
    for i in (0..n).rev() {
        for (j, &p) in perm.iter().enumerate() {
            ops.push(Op::Ccx(j, n + i, p));
        }
        if i > 0 {
            perm.rotate_right(1);
            for &k in terms {
                ops.push(Op::Cx(perm[0], perm[k]));
            }
        }
    }
    Some((ops, perm))
}

/// Multiplication in GF(2^n) into a clean register, in Horner form.
pub fn gf2_mult(n: usize) -> Option<Circuit> {
    gf_ops(n).map(|(ops, _)| build(3 * n, &ops))
}

fn vbe_ops() -> Vec<Op> {
    let a = |i: usize| i;
    let b = |i: usize| 3 + i;
    let cr = |i: usize| 7 + i;
    let carry = |ci, ai, bi, co| [Op::Ccx(ai, bi, co), Op::Cx(ai, bi), Op::Ccx(ci, bi, co)];
    let uncarry = |ci, ai, bi, co| [Op::Ccx(ci, bi, co), Op::Cx(ai, bi), Op::Ccx(ai, bi, co)];
    let sum = |ci, ai, bi| [Op::Cx(ai, bi), Op::Cx(ci, bi)];
    let mut ops = Vec::new();
    ops.extend(carry(cr(0), a(0), b(0), cr(1)));
    ops.extend(carry(cr(1), a(1), b(1), cr(2)));
    ops.extend(carry(cr(2), a(2), b(2), b(3)));
    ops.push(Op::Cx(cr(2), b(2)));
    ops.extend(uncarry(cr(1), a(1), b(1), cr(2)));
    ops.extend(sum(cr(1), a(1), b(1)));
    ops.extend(uncarry(cr(0), a(0), b(0), cr(1)));
    ops.extend(sum(cr(0), a(0), b(0)));
    ops
}

/// Ripple-carry adder of Vedral, Barenco and Ekert on three-bit inputs.
pub fn vbe_adder_3() -> Circuit {
    build(10, &vbe_ops())
}

#[rustfmt::skip]
const RC_ADDER_6: [Op; 46] = {
    use Op::*;
    [
        Cx(4, 3), Cx(6, 5), Cx(8, 7), Cx(10, 9), Cx(12, 11), Cx(4, 2),
        Ccx(0, 1, 2), Cx(6, 4), Ccx(2, 3, 4), Cx(8, 6), Ccx(4, 5, 6), Cx(10, 8),
        Ccx(6, 7, 8), Cx(12, 10), Ccx(8, 9, 10), Cx(12, 13),
        X(3), X(5), X(7), X(9),
        Ccx(10, 11, 13),
        Cx(2, 3), Cx(4, 5), Cx(6, 7), Cx(8, 9), Cx(10, 11),
        Ccx(8, 9, 10), Ccx(6, 7, 8), X(9), Cx(12, 10), Ccx(4, 5, 6), X(7),
        Cx(10, 8), Ccx(2, 3, 4), X(5), Cx(8, 6), Ccx(0, 1, 2), X(3), Cx(6, 4),
        Cx(4, 2), Cx(1, 0), Cx(4, 3), Cx(6, 5), Cx(8, 7), Cx(10, 9), Cx(12, 11),
    ]
};

/// Cuccaro ripple-carry adder on six-bit inputs (RevLib 0410184).
pub fn rc_adder_6() -> Circuit {
    build(14, &RC_ADDER_6)
}

#[rustfmt::skip]
const MOD5_4: [Op; 9] = {
    use Op::*;
    [X(4), Ccx(0, 3, 4), Ccx(2, 3, 4), Cx(3, 4), Ccx(1, 2, 4), Cx(2, 4), Ccx(0, 1, 4), Cx(1, 4), Cx(0, 4)]
};

/// Four-bit residue modulo 5 (RevLib 4mod5).
pub fn mod5_4() -> Circuit {
    build(5, &MOD5_4)
}

/// The built-in construction of a benchmark, if there is one.
pub fn construct(name: &str) -> Option<Circuit> {
    let gf = |s: &str| s.strip_prefix("gf2^")?.strip_suffix("_mult")?.parse().ok();
    match name {
        "tof_4" => Some(tof(4)),
        "tof_5" => Some(tof(5)),
        "tof_10" => Some(tof(10)),
        "barenco_tof_4" => Some(barenco_tof(4)),
        "barenco_tof_5" => Some(barenco_tof(5)),
        "barenco_tof_10" => Some(barenco_tof(10)),
        "vbe_adder_3" => Some(vbe_adder_3()),
        "rc_adder_6" => Some(rc_adder_6()),
        "mod5_4" => Some(mod5_4()),
        _ => gf(name).and_then(gf2_mult),
    }
}

/// Load a benchmark: `<dir>/<name>.qasm` if `dir` is given and the file
/// exists, otherwise the built-in construction.
pub fn load(name: &str, dir: Option<&Path>) -> Result<Option<Circuit>> {
    if let Some(dir) = dir {
        let path = dir.join(format!("{name}.qasm"));
        if path.exists() {
            let text = fs::read_to_string(&path).map_err(|e| {
                Error::InvalidArgument(format!("cannot read {}: {e}", path.display()))
            })?;
            return Ok(Some(parse_qasm(&text)?));
        }
    }
    Ok(construct(name))
}

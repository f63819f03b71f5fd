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

//! Circuit extraction from graph-like diagrams with a causal flow.
//!
//! Each flow dipath becomes a qubit line. Spiders contribute phase gates,
//! edges along a dipath Hadamard gates, and every other edge one CZ. The
//! two-qubit gate count of the result is therefore `|E| - |V| + |I|`.

use std::collections::BTreeSet;

use crate::circuit::{Circuit, Gate};
use crate::error::{Error, Result};
use crate::flow::{find_cflow, verify_cflow, CausalFlow};
use crate::graph::{VertexId, ZxDiagram};
use crate::phase::Phase;

fn phase_of(d: &ZxDiagram, v: VertexId) -> Result<Phase> {
    d.phase(v).as_constant().ok_or(Error::UnresolvedVariable(v))
}

fn push_phase(c: &mut Circuit, q: usize, p: Phase) {
    if let Some(g) = Gate::phase(q, p) {
        c.push(g);
    }
}

/// Extract a circuit over `{CZ, Rz, H}` realising `d` using the flow `f`.
///
/// When the dipaths connect input `i` to an output other than `i`, the
/// extracted lines are permuted back with SWAPs built from CZ and H.
pub fn extract_circuit(d: &ZxDiagram, f: &CausalFlow) -> Result<Circuit> {
    let g = d.underlying_open_graph()?;
    if !verify_cflow(&g, f) {
        return Err(Error::Extraction(
            "not a causal flow of this diagram".into(),
        ));
    }
    let n = d.num_inputs();
    let mut line = vec![usize::MAX; d.id_bound()];
    for (q, &start) in d.inputs().iter().enumerate() {
        let mut v = start;
        loop {
            line[v.index()] = q;
            match f.successor(v) {
                Some(w) => v = w,
                None => break,
            }
        }
    }
    if let Some(v) = d.vertices().find(|v| line[v.index()] == usize::MAX) {
        return Err(Error::Extraction(format!("{v} lies on no dipath")));
    }
    let on_path = |a: VertexId, b: VertexId| f.successor(a) == Some(b) || f.successor(b) == Some(a);

    let mut c = Circuit::new(n);
    let mut entered = vec![false; d.id_bound()];
    let mut left = vec![false; d.id_bound()];
    let mut emitted: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();

    let mut enter =
        |c: &mut Circuit, v: VertexId, entered: &mut Vec<bool>, left: &Vec<bool>| -> Result<()> {
            entered[v.index()] = true;
            for w in d.neighbours(v) {
                if !entered[w.index()] || on_path(v, w) {
                    continue;
                }
                if left[w.index()] {
                    return Err(Error::Extraction(format!(
                        "edge {v}-{w} is not schedulable"
                    )));
                }
                if emitted.insert((v.min(w), v.max(w))) {
                    c.push(Gate::Cz(line[v.index()], line[w.index()]));
                }
            }
            Ok(())
        };

    for (q, &v) in d.inputs().iter().enumerate() {
        if d.input_wire(v).is_some_and(|w| w.hadamard) {
            c.push(Gate::H(q));
        }
    }
    for &v in d.inputs() {
        enter(&mut c, v, &mut entered, &left)?;
    }
    let mut order: Vec<VertexId> = d.vertices().filter(|&v| f.successor(v).is_some()).collect();
    order.sort_by_key(|&v| {
        (
            std::cmp::Reverse(f.depth(v).unwrap_or(0)),
            line[v.index()],
            v,
        )
    });
    for v in order {
        let q = line[v.index()];
        let next = f.successor(v).expect("non-output");
        if !entered[v.index()] {
            return Err(Error::Extraction(format!(
                "{v} is scheduled before it is reached"
            )));
        }
        push_phase(&mut c, q, phase_of(d, v)?);
        c.push(Gate::H(q));
        left[v.index()] = true;
        enter(&mut c, next, &mut entered, &left)?;
    }
    let mut perm = vec![0; n];
    for (j, &o) in d.outputs().iter().enumerate() {
        let q = line[o.index()];
        push_phase(&mut c, q, phase_of(d, o)?);
        if d.output_wire(o).is_some_and(|w| w.hadamard) {
            c.push(Gate::H(q));
        }
        perm[q] = j;
    }
    permute_lines(&mut c, &perm);
    Ok(c)
}

/// Move the state of line `q` onto wire `perm[q]`.
fn permute_lines(c: &mut Circuit, perm: &[usize]) {
    let mut at: Vec<usize> = (0..perm.len()).collect();
    let mut holder: Vec<usize> = (0..perm.len()).collect();
    for target in 0..perm.len() {
        let q = (0..perm.len())
            .find(|&q| perm[q] == target)
            .expect("permutation");
        let src = at[q];
        if src == target {
            continue;
        }
        for (a, b) in [(src, target), (target, src), (src, target)] {
            c.extend([Gate::H(b), Gate::Cz(a, b), Gate::H(b)]);
        }
        let other = holder[target];
        at[other] = src;
        holder[src] = other;
        at[q] = target;
        holder[target] = q;
    }
}

/// Find a flow and extract. Fails if the diagram has no causal flow.
pub fn extract(d: &ZxDiagram) -> Result<Circuit> {
    let g = d.underlying_open_graph()?;
    let f =
        find_cflow(&g)?.ok_or_else(|| Error::Extraction("diagram has no causal flow".into()))?;
    extract_circuit(d, &f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convert::graph_like_from_circuit;
    use crate::graph::EdgeKind;

    #[test]
    fn identity_extracts_to_hadamard_pairs() {
        let d = graph_like_from_circuit(&Circuit::new(1));
        let c = extract(&d).unwrap();
        assert_eq!(c.gates, vec![Gate::H(0), Gate::H(0)]);
    }

    #[test]
    fn cnot_gives_one_cz() {
        let mut circ = Circuit::new(2);
        circ.push(Gate::Cnot {
            control: 0,
            target: 1,
        });
        let d = graph_like_from_circuit(&circ);
        let c = extract(&d).unwrap();
        assert_eq!(c.two_qubit_count(), 1);
        assert!(matches!(
            c.gates.iter().find(|g| g.is_two_qubit()),
            Some(Gate::Cz(..))
        ));
    }

    #[test]
    fn gadget_has_no_flow() {
        let mut d = graph_like_from_circuit(&Circuit::new(1));
        let i = d.inputs()[0];
        let base = d.add_spider(Phase::zero());
        let top = d.add_spider(Phase::new(1, 4));
        d.add_edge(i, base, EdgeKind::Hadamard).unwrap();
        d.add_edge(base, top, EdgeKind::Hadamard).unwrap();
        assert!(matches!(extract(&d), Err(Error::Extraction(_))));
    }

    #[test]
    fn swaps_realise_permutation() {
        let mut c = Circuit::new(3);
        permute_lines(&mut c, &[2, 0, 1]);
        assert_eq!(c.two_qubit_count(), 6);
        let mut id = Circuit::new(3);
        permute_lines(&mut id, &[0, 1, 2]);
        assert!(id.gates.is_empty());
    }
}

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

//! Translation from circuits to ZX-diagrams and normalisation to graph-like
//! form.

use crate::circuit::{Circuit, Gate};
use crate::error::Result;
use crate::graph::{EdgeKind, VertexId, ZxDiagram};
use crate::phase::Phase;

#[derive(Clone, Copy)]
struct Frontier {
    last: Option<VertexId>,
    first: Option<(VertexId, bool)>,
    pending_h: bool,
}

struct Builder {
    d: ZxDiagram,
    lines: Vec<Frontier>,
}

impl Builder {
    /// Place a new Z-spider on qubit `q`. With `x_type` the spider stands
    /// for an X-spider: both of its wire legs get an extra Hadamard.
    fn place(&mut self, q: usize, phase: Phase, x_type: bool) -> VertexId {
        let v = self.d.add_spider(phase);
        let line = &mut self.lines[q];
        let h = line.pending_h ^ x_type;
        match line.last {
            None => line.first = Some((v, h)),
            Some(prev) => {
                let kind = if h {
                    EdgeKind::Hadamard
                } else {
                    EdgeKind::Simple
                };
                self.d.add_edge_smart(prev, v, kind).expect("fresh spider");
            }
        }
        line.last = Some(v);
        line.pending_h = x_type;
        v
    }
}

/// Translate a circuit gate by gate: one Z-spider per phase gate, a Z/X
/// spider pair per CNOT, two Z-spiders joined by a Hadamard edge per CZ.
/// Hadamard gates become edge or wire annotations. The result may contain
/// plain edges; see [`to_graph_like`].
pub fn circuit_to_diagram(c: &Circuit) -> ZxDiagram {
    let blank = Frontier {
        last: None,
        first: None,
        pending_h: false,
    };
    let mut b = Builder {
        d: ZxDiagram::new(),
        lines: vec![blank; c.n_qubits],
    };
    for g in &c.gates {
        match *g {
            Gate::H(q) => b.lines[q].pending_h ^= true,
            Gate::X(q) => {
                b.place(q, Phase::pi(), true);
            }
            Gate::Cnot { control, target } => {
                let u = b.place(control, Phase::zero(), false);
                let v = b.place(target, Phase::zero(), true);
                b.d.add_edge_smart(u, v, EdgeKind::Hadamard)
                    .expect("distinct spiders");
            }
            Gate::Cz(p, q) => {
                let u = b.place(p, Phase::zero(), false);
                let v = b.place(q, Phase::zero(), false);
                b.d.add_edge_smart(u, v, EdgeKind::Hadamard)
                    .expect("distinct spiders");
            }
            _ => {
                let (q, p) = g.z_rotation().expect("diagonal gate");
                b.place(q, p, false);
            }
        }
    }
    for q in 0..c.n_qubits {
        if b.lines[q].last.is_none() {
            let v = b.d.add_spider(Phase::zero());
            let line = &mut b.lines[q];
            line.first = Some((v, false));
            line.last = Some(v);
        }
    }
    for q in 0..c.n_qubits {
        let (v, h) = b.lines[q].first.expect("every line has a spider");
        b.d.push_input(v, h).expect("one input per line");
    }
    for q in 0..c.n_qubits {
        let line = b.lines[q];
        b.d.push_output(line.last.expect("every line has a spider"), line.pending_h)
            .expect("one output per line");
    }
    b.d
}

/// Fuse spiders along plain edges, then give every spider at most one
/// boundary wire. The result satisfies [`ZxDiagram::check_graph_like`].
pub fn to_graph_like(mut d: ZxDiagram) -> Result<ZxDiagram> {
    loop {
        let plain = d.vertices().find_map(|u| {
            d.incident(u)
                .iter()
                .find(|e| e.1 == EdgeKind::Simple)
                .map(|e| (u, e.0))
        });
        let Some((u, v)) = plain else { break };
        let clash = (d.input_wire(u).is_some() && d.input_wire(v).is_some())
            || (d.output_wire(u).is_some() && d.output_wire(v).is_some());
        if clash {
            // Keep both spiders: a plain edge equals H - Z(0) - H.
            d.remove_edge(u, v)?;
            let w = d.add_spider(Phase::zero());
            d.add_edge(u, w, EdgeKind::Hadamard)?;
            d.add_edge(w, v, EdgeKind::Hadamard)?;
            continue;
        }
        fuse_plain(&mut d, u, v)?;
    }
    let doubles: Vec<VertexId> = d
        .vertices()
        .filter(|&v| d.input_wire(v).is_some() && d.output_wire(v).is_some())
        .collect();
    for v in doubles {
        let w = d.add_spider(Phase::zero());
        d.add_edge(v, w, EdgeKind::Hadamard)?;
        d.move_output(v, w, true)?;
    }
    d.check_graph_like()?;
    Ok(d)
}

/// Merge `v` into `u` along the plain edge between them.
fn fuse_plain(d: &mut ZxDiagram, u: VertexId, v: VertexId) -> Result<()> {
    d.remove_edge(u, v)?;
    let p = d.phase(v);
    let merged = d
        .phase(u)
        .checked_add(p)
        .expect("conversion uses constant phases");
    d.set_phase(u, merged);
    let edges: Vec<_> = d.incident(v).to_vec();
    for (w, k) in edges {
        d.remove_edge(v, w)?;
        d.add_edge_smart(u, w, k)?;
    }
    d.move_boundary(v, u, false)?;
    d.remove_spider(v)
}

/// `to_graph_like(circuit_to_diagram(c))`.
pub fn graph_like_from_circuit(c: &Circuit) -> ZxDiagram {
    to_graph_like(circuit_to_diagram(c)).expect("circuit diagrams normalise")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cnot_before_and_after_normalisation() {
        let mut c = Circuit::new(2);
        c.push(Gate::Cnot {
            control: 0,
            target: 1,
        });
        let d = circuit_to_diagram(&c);
        assert_eq!(d.num_vertices(), 2);
        assert_eq!(d.num_edges(), 1);
        let g = to_graph_like(d).unwrap();
        assert_eq!((g.num_vertices(), g.num_edges(), g.num_inputs()), (4, 3, 2));
        assert_eq!(g.count_2q(), 1);
        let og = g.underlying_open_graph().unwrap();
        assert_eq!((og.len(), og.inputs().len(), og.outputs().len()), (4, 2, 2));
    }

    #[test]
    fn identity_is_bare_wires() {
        let d = circuit_to_diagram(&Circuit::new(3));
        assert_eq!(d.num_edges(), 0);
        let g = to_graph_like(d).unwrap();
        assert_eq!((g.num_vertices(), g.num_edges()), (6, 3));
        assert_eq!(g.count_2q(), 0);
    }

    #[test]
    fn t_gate_is_one_spider() {
        let mut c = Circuit::new(1);
        c.push(Gate::T(0));
        let d = circuit_to_diagram(&c);
        assert_eq!(d.num_vertices(), 1);
        let v = d.inputs()[0];
        assert_eq!(d.phase(v).clifford, Phase::new(1, 4));
        let g = to_graph_like(d).unwrap();
        assert_eq!(g.stats().non_clifford, 1);
    }

    #[test]
    fn s_gate_is_clifford() {
        let mut c = Circuit::new(1);
        c.push(Gate::S(0));
        assert_eq!(graph_like_from_circuit(&c).stats().non_clifford, 0);
    }

    #[test]
    fn chain_of_phases_fuses() {
        let mut c = Circuit::new(1);
        c.extend([Gate::T(0), Gate::T(0), Gate::S(0)]);
        let g = graph_like_from_circuit(&c);
        assert_eq!(g.num_vertices(), 2);
        assert_eq!(g.phase(g.inputs()[0]).clifford, Phase::pi());
    }
}

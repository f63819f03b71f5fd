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

use super::*;
use crate::graph::EdgeKind;
use crate::phase::Phase;
use crate::verify::diagrams_equal;

/// `n` qubit lines `input_i -H- output_i`.
fn lines(n: usize) -> (ZxDiagram, Vec<VertexId>, Vec<VertexId>) {
    let mut d = ZxDiagram::new();
    let ins: Vec<_> = (0..n).map(|_| d.add_spider(Phase::zero())).collect();
    let outs: Vec<_> = (0..n).map(|_| d.add_spider(Phase::zero())).collect();
    for i in 0..n {
        d.add_edge(ins[i], outs[i], EdgeKind::Hadamard).unwrap();
        d.push_input(ins[i], false).unwrap();
    }
    for &o in &outs {
        d.push_output(o, false).unwrap();
    }
    (d, ins, outs)
}

fn h(d: &mut ZxDiagram, a: VertexId, b: VertexId) {
    d.add_edge(a, b, EdgeKind::Hadamard).unwrap();
}

/// Apply and check the recorded deltas, graph-likeness and the tensor.
fn apply_checked(d: &ZxDiagram, kind: &RewriteKind) -> (ZxDiagram, RewriteMatch) {
    let predicted = check(d, kind).unwrap();
    let mut after = d.clone();
    let m = apply(&mut after, kind).unwrap();
    assert_eq!(m, predicted);
    assert_eq!(
        after.num_edges() as i64 - d.num_edges() as i64,
        m.delta_e,
        "ΔE of {kind:?}"
    );
    assert_eq!(
        after.num_vertices() as i64 - d.num_vertices() as i64,
        m.delta_v,
        "ΔV of {kind:?}"
    );
    after.check_graph_like().unwrap();
    assert!(
        diagrams_equal(d, &after).unwrap(),
        "tensor changed by {kind:?}"
    );
    (after, m)
}

#[test]
fn id_fuse_chain() {
    // in - x - a(π/4) - v(0) - b(π/4) - y - out
    let mut d = ZxDiagram::new();
    let x = d.add_spider(Phase::zero());
    let a = d.add_spider(Phase::new(1, 4));
    let v = d.add_spider(Phase::zero());
    let b = d.add_spider(Phase::new(1, 4));
    let y = d.add_spider(Phase::zero());
    for (p, q) in [(x, a), (a, v), (v, b), (b, y)] {
        h(&mut d, p, q);
    }
    d.push_input(x, false).unwrap();
    d.push_output(y, false).unwrap();
    let (after, m) = apply_checked(&d, &RewriteKind::IdFuse { v });
    assert_eq!((m.delta_e, m.delta_v), (-2, -2));
    assert_eq!(after.phase(a).clifford, Phase::half_pi());
    assert!(!after.contains(b));
    assert!(after.connected(a, y));
}

#[test]
fn id_fuse_with_direct_edge() {
    let (mut d, ins, outs) = lines(2);
    let a = d.add_spider(Phase::new(1, 4));
    let b = d.add_spider(Phase::new(3, 4));
    let v = d.add_spider(Phase::zero());
    d.remove_edge(ins[0], outs[0]).unwrap();
    d.remove_edge(ins[1], outs[1]).unwrap();
    for (p, q) in [
        (ins[0], a),
        (a, outs[0]),
        (ins[1], b),
        (b, outs[1]),
        (a, v),
        (v, b),
        (a, b),
    ] {
        h(&mut d, p, q);
    }
    let (after, _) = apply_checked(&d, &RewriteKind::IdFuse { v });
    assert_eq!(
        after.phase(a).clifford,
        Phase::new(1, 4) + Phase::new(3, 4) + Phase::pi()
    );
}

#[test]
fn id_fuse_rejects_degree_three() {
    let (mut d, ins, outs) = lines(3);
    let v = d.add_spider(Phase::zero());
    for &x in &ins {
        h(&mut d, v, x);
    }
    assert!(matches!(id_fuse(&mut d, v), Err(crate::Error::NoMatch(_))));
    let _ = outs;
}

#[test]
fn lcomp_on_independent_neighbours() {
    let (mut d, ins, _) = lines(3);
    let v = d.add_spider(Phase::half_pi());
    for &x in &ins {
        h(&mut d, v, x);
    }
    let (after, m) = apply_checked(&d, &RewriteKind::LComp { v, unfuse: None });
    assert_eq!((m.delta_e, m.delta_v, m.delta_2q()), (0, -1, 1));
    assert!(
        after.connected(ins[0], ins[1])
            && after.connected(ins[1], ins[2])
            && after.connected(ins[0], ins[2])
    );
    assert_eq!(after.phase(ins[0]).clifford, Phase::new(3, 2));
}

#[test]
fn lcomp_on_triangle() {
    let (mut d, ins, _) = lines(3);
    let v = d.add_spider(Phase::new(3, 2));
    for &x in &ins {
        h(&mut d, v, x);
    }
    h(&mut d, ins[0], ins[1]);
    h(&mut d, ins[1], ins[2]);
    h(&mut d, ins[0], ins[2]);
    let (_, m) = apply_checked(&d, &RewriteKind::LComp { v, unfuse: None });
    assert_eq!((m.delta_e, m.delta_v, m.delta_2q()), (-6, -1, -5));
    assert_eq!(m.score(), 5);
}

#[test]
fn lcomp_rejects_t_phase() {
    let (mut d, ins, _) = lines(2);
    let v = d.add_spider(Phase::new(1, 4));
    h(&mut d, v, ins[0]);
    h(&mut d, v, ins[1]);
    assert!(matches!(
        local_comp(&mut d, v, None),
        Err(crate::Error::NoMatch(_))
    ));
}

#[test]
fn lcomp_with_unfusion() {
    let (mut d, ins, _) = lines(3);
    let v = d.add_spider(Phase::new(1, 4));
    for &x in &ins {
        h(&mut d, v, x);
    }
    let s = Unfusion::new(vec![ins[2]], false);
    let (_, m) = apply_checked(&d, &RewriteKind::LComp { v, unfuse: Some(s) });
    // k = 2 kept neighbours + w1 = 3: ΔE = 2 - 3 + 3 = 2, ΔV = +1.
    assert_eq!((m.delta_e, m.delta_v), (2, 1));
}

#[test]
fn lcomp_on_boundary_needs_its_wire() {
    let (mut d, ins, outs) = lines(2);
    d.set_phase(ins[0], Phase::half_pi());
    h(&mut d, ins[0], ins[1]);
    assert!(check(
        &d,
        &RewriteKind::LComp {
            v: ins[0],
            unfuse: None
        }
    )
    .is_err());
    let without = Unfusion::new(vec![outs[0]], false);
    assert!(check(
        &d,
        &RewriteKind::LComp {
            v: ins[0],
            unfuse: Some(without)
        }
    )
    .is_err());
    let with = Unfusion::new(vec![], true);
    apply_checked(
        &d,
        &RewriteKind::LComp {
            v: ins[0],
            unfuse: Some(with),
        },
    );
}

#[test]
fn pivot_private_neighbours() {
    // b - u(0) - v(π) - c, with b, c on separate qubit lines.
    let (mut d, ins, _) = lines(2);
    let u = d.add_spider(Phase::zero());
    let v = d.add_spider(Phase::pi());
    h(&mut d, ins[0], u);
    h(&mut d, u, v);
    h(&mut d, v, ins[1]);
    let (after, m) = apply_checked(
        &d,
        &RewriteKind::Pivot {
            u,
            v,
            unfuse_u: None,
            unfuse_v: None,
        },
    );
    assert!(after.connected(ins[0], ins[1]));
    // Three edges removed, one created.
    assert_eq!((m.delta_e, m.delta_v, m.delta_2q()), (-2, -2, 0));
    assert_eq!(after.phase(ins[0]).clifford, Phase::pi());
    assert_eq!(after.phase(ins[1]).clifford, Phase::zero());
}

#[test]
fn pivot_shared_neighbours() {
    let (mut d, ins, _) = lines(2);
    let u = d.add_spider(Phase::zero());
    let v = d.add_spider(Phase::zero());
    h(&mut d, u, v);
    for &x in &ins {
        h(&mut d, u, x);
        h(&mut d, v, x);
    }
    let (after, _) = apply_checked(
        &d,
        &RewriteKind::Pivot {
            u,
            v,
            unfuse_u: None,
            unfuse_v: None,
        },
    );
    for &x in &ins {
        assert_eq!(after.phase(x).clifford, Phase::pi());
    }
    assert!(!after.connected(ins[0], ins[1]));
}

#[test]
fn pivot_rejects_t_phase() {
    let (mut d, ins, _) = lines(2);
    let u = d.add_spider(Phase::new(1, 4));
    let v = d.add_spider(Phase::zero());
    h(&mut d, u, v);
    h(&mut d, u, ins[0]);
    h(&mut d, v, ins[1]);
    assert!(pivot(&mut d, u, v, None, None).is_err());
    let gadgetise = Unfusion::default();
    apply_checked(
        &d,
        &RewriteKind::Pivot {
            u,
            v,
            unfuse_u: Some(gadgetise),
            unfuse_v: None,
        },
    );
}

#[test]
fn unfusion_examples() {
    let (mut d, ins, _) = lines(2);
    let v = d.add_spider(Phase::new(1, 4));
    h(&mut d, v, ins[0]);
    h(&mut d, v, ins[1]);
    let (after, m) = apply_checked(
        &d,
        &RewriteKind::NeighbourUnfuse {
            v,
            unfuse: Unfusion::default(),
        },
    );
    assert_eq!((m.delta_e, m.delta_v, m.delta_2q()), (2, 2, 0));
    assert_eq!(after.degree(v), 3);

    let s = Unfusion::new(vec![ins[0]], false);
    let (after, _) = apply_checked(&d, &RewriteKind::NeighbourUnfuse { v, unfuse: s });
    let nb: Vec<_> = after.neighbours(ins[0]).collect();
    assert_eq!(nb.len(), 2);
    assert!(!after.connected(v, ins[0]));
    let w2 = *nb.iter().find(|&&w| w != after.outputs()[0]).unwrap();
    assert_eq!(after.degree(w2), 2);

    let bad = Unfusion::new(vec![after.outputs()[1]], false);
    assert!(check(&d, &RewriteKind::NeighbourUnfuse { v, unfuse: bad }).is_err());
}

#[test]
fn unfusion_then_two_id_fusions_is_identity() {
    let (mut d, ins, _) = lines(3);
    let v = d.add_spider(Phase::new(1, 4));
    for &x in &ins {
        h(&mut d, v, x);
    }
    let mut e = d.clone();
    let (w1, _) = unfuse_with(
        &mut e,
        v,
        &Unfusion::new(vec![ins[1], ins[2]], false),
        None,
        &mut NoTracking,
    )
    .unwrap();
    id_fuse(&mut e, w1).unwrap();
    assert_eq!(e.num_vertices(), d.num_vertices());
    assert_eq!(e.num_edges(), d.num_edges());
    for &x in &ins {
        assert!(e.connected(v, x));
    }
    assert_eq!(e.phase(v), d.phase(v));
}

fn gadget(d: &mut ZxDiagram, legs: &[VertexId], base: Phase, top: Phase) -> (VertexId, VertexId) {
    let b = d.add_spider(base);
    let t = d.add_spider(top);
    h(d, b, t);
    for &l in legs {
        h(d, b, l);
    }
    (b, t)
}

#[test]
fn gadget_fusion() {
    let (mut d, ins, _) = lines(3);
    let (_, t1) = gadget(&mut d, &[ins[0], ins[1]], Phase::zero(), Phase::new(1, 4));
    let (_, t2) = gadget(&mut d, &[ins[0], ins[1]], Phase::zero(), Phase::new(1, 8));
    let (_, t3) = gadget(&mut d, &[ins[0], ins[2]], Phase::zero(), Phase::new(1, 8));
    let (after, m) = apply_checked(&d, &RewriteKind::GadgetFuse { top1: t1, top2: t2 });
    assert_eq!((m.delta_e, m.delta_v), (-3, -2));
    assert_eq!(after.phase(t1).clifford, Phase::new(3, 8));
    assert!(check(&d, &RewriteKind::GadgetFuse { top1: t1, top2: t3 }).is_err());
}

#[test]
fn gadget_deletion() {
    let (mut d, ins, _) = lines(2);
    d.set_phase(ins[0], Phase::new(1, 8));
    let (_, t) = gadget(&mut d, &[ins[0]], Phase::zero(), Phase::new(1, 4));
    let (after, _) = apply_checked(&d, &RewriteKind::GadgetDelete { top: t });
    assert_eq!(after.phase(ins[0]).clifford, Phase::new(3, 8));

    let (mut d, ins, _) = lines(2);
    let (b, t) = gadget(&mut d, &[ins[0], ins[1]], Phase::pi(), Phase::new(1, 4));
    let (after, m) = apply_checked(&d, &RewriteKind::GadgetDelete { top: t });
    assert_eq!((m.delta_e, m.delta_v), (0, 0));
    assert_eq!(after.phase(b).clifford, Phase::zero());
    assert_eq!(after.phase(t).clifford, Phase::new(7, 4));

    let (mut d, ins, _) = lines(2);
    let (_, t) = gadget(&mut d, &[ins[0], ins[1]], Phase::zero(), Phase::new(1, 4));
    assert!(check(&d, &RewriteKind::GadgetDelete { top: t }).is_err());
}

#[test]
fn scores_and_acceptance() {
    let m = |e, v| RewriteMatch {
        kind: RewriteKind::IdFuse { v: VertexId(0) },
        delta_e: e,
        delta_v: v,
    };
    assert_eq!(m(-6, -1).score(), 5);
    assert_eq!(m(0, -1).score(), -1);
    assert_eq!(m(-1, -1).score(), 0);
    assert!(m(-3, -1).accept());
    assert!(m(-1, -1).accept());
    assert!(!m(0, -1).accept());
    assert!(!m(2, 2).accept());
}

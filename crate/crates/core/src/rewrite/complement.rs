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

//! Neighbour unfusion, local complementation and pivoting.

use std::collections::BTreeSet;

use super::{
    edges_between, require, require_vertex, NoTracking, PhaseTracker, RewriteKind, RewriteMatch,
    Unfusion,
};
use crate::error::Result;
use crate::graph::{EdgeKind, VertexId, ZxDiagram};
use crate::phase::{Phase, PhaseExpr};

pub(super) fn check_unfusion(d: &ZxDiagram, v: VertexId, s: &Unfusion) -> Result<()> {
    require_vertex(d, v)?;
    require(s.neighbours.windows(2).all(|w| w[0] < w[1]), || {
        "unfused neighbours must be sorted and distinct".into()
    })?;
    for &n in &s.neighbours {
        require(d.contains(n) && d.connected(v, n), || {
            format!("{n} is not a neighbour of {v}")
        })?;
    }
    require(!s.boundary || d.is_boundary(v), || {
        format!("{v} has no boundary wire to unfuse")
    })?;
    Ok(())
}

/// Split `v` into the chain `v - w1 - w2`, moving the neighbours in
/// `s.neighbours` (and the boundary wire if `s.boundary`) onto `w2`. With
/// `residual = Some(r)`, `v` keeps the constant phase `r` and `w2` takes the
/// rest of the original phase; with `None`, `v` keeps everything. Returns
/// `(w1, w2)`.
pub fn unfuse_with(
    d: &mut ZxDiagram,
    v: VertexId,
    s: &Unfusion,
    residual: Option<Phase>,
    t: &mut impl PhaseTracker,
) -> Result<(VertexId, VertexId)> {
    check_unfusion(d, v, s)?;
    let w1 = d.add_spider(Phase::zero());
    let w2 = d.add_spider(Phase::zero());
    if let Some(r) = residual {
        let mut rest = d.phase(v);
        rest.add_constant(-r);
        d.set_phase(w2, rest);
        d.set_phase(v, PhaseExpr::constant(r));
        t.moved(v, w2);
    }
    for &n in &s.neighbours {
        d.remove_edge(v, n)?;
        d.add_edge(w2, n, EdgeKind::Hadamard)?;
    }
    if s.boundary {
        d.move_boundary(v, w2, false)?;
    }
    d.add_edge(v, w1, EdgeKind::Hadamard)?;
    d.add_edge(w1, w2, EdgeKind::Hadamard)?;
    Ok((w1, w2))
}

/// Neighbour unfusion keeping the whole phase on `v`: `v - w1(0) - w2(0)`
/// with the chosen neighbours re-attached to `w2`.
pub fn neighbour_unfuse(d: &mut ZxDiagram, v: VertexId, s: &Unfusion) -> Result<RewriteMatch> {
    unfuse_with(d, v, s, None, &mut NoTracking)?;
    Ok(RewriteMatch {
        kind: RewriteKind::NeighbourUnfuse {
            v,
            unfuse: s.clone(),
        },
        delta_e: 2,
        delta_v: 2,
    })
}

/// Phase left on `v` by an unfusion ahead of local complementation:
/// `α` itself when it is already ±π/2, otherwise π/2.
pub fn lcomp_residual(p: PhaseExpr) -> Phase {
    match p.as_constant() {
        Some(a) if a.is_proper_clifford() => a,
        _ => Phase::half_pi(),
    }
}

/// Phase left on a pivot vertex by an unfusion: `α` if it is 0 or π,
/// otherwise 0.
pub fn pivot_residual(p: PhaseExpr) -> Phase {
    match p.as_constant() {
        Some(a) if a.is_pauli() => a,
        _ => Phase::zero(),
    }
}

pub(super) fn lcomp_delta(
    d: &ZxDiagram,
    v: VertexId,
    unfuse: Option<&Unfusion>,
) -> Result<(i64, i64)> {
    require_vertex(d, v)?;
    match unfuse {
        None => {
            require(d.is_internal(v), || format!("{v} is a boundary spider"))?;
            require(d.phase(v).is_proper_clifford(), || {
                format!("{v} does not have phase ±π/2")
            })?;
            let nb: Vec<VertexId> = d.neighbours(v).collect();
            let k = nb.len() as i64;
            let e_in = edges_between(d, &nb, &nb) / 2;
            Ok((-k + k * (k - 1) / 2 - 2 * e_in, -1))
        }
        Some(s) => {
            check_unfusion(d, v, s)?;
            require(!d.is_boundary(v) || s.boundary, || {
                format!("unfusion of {v} must take its boundary wire")
            })?;
            let kept: Vec<VertexId> = d
                .neighbours(v)
                .filter(|n| s.neighbours.binary_search(n).is_err())
                .collect();
            let k = kept.len() as i64 + 1;
            let e_in = edges_between(d, &kept, &kept) / 2;
            Ok((2 - k + k * (k - 1) / 2 - 2 * e_in, 1))
        }
    }
}

/// Local complementation about `v`: complement the edges among its
/// neighbours, subtract its phase from each of them, and delete `v`. With an
/// unfusion, `v` is first split so that the part being removed has phase
/// ±π/2 and no boundary.
pub fn local_comp(
    d: &mut ZxDiagram,
    v: VertexId,
    unfuse: Option<&Unfusion>,
) -> Result<RewriteMatch> {
    local_comp_with(d, v, unfuse, &mut NoTracking)
}

pub fn local_comp_with(
    d: &mut ZxDiagram,
    v: VertexId,
    unfuse: Option<&Unfusion>,
    t: &mut impl PhaseTracker,
) -> Result<RewriteMatch> {
    let (delta_e, delta_v) = lcomp_delta(d, v, unfuse)?;
    if let Some(s) = unfuse {
        let r = lcomp_residual(d.phase(v));
        unfuse_with(d, v, s, Some(r), t)?;
    }
    let a = d.phase(v).as_constant().expect("checked");
    let nb: Vec<VertexId> = d.neighbours(v).collect();
    for (i, &x) in nb.iter().enumerate() {
        for &y in &nb[i + 1..] {
            d.toggle_edge(x, y)?;
        }
        d.add_to_phase(x, -a);
    }
    d.remove_spider(v)?;
    Ok(RewriteMatch {
        kind: RewriteKind::LComp {
            v,
            unfuse: unfuse.cloned(),
        },
        delta_e,
        delta_v,
    })
}

/// Post-unfusion neighbourhood of a pivot vertex, excluding its partner.
/// A freshly inserted `w1` is represented by `None`.
fn pivot_side(
    d: &ZxDiagram,
    x: VertexId,
    partner: VertexId,
    unfuse: Option<&Unfusion>,
) -> Result<(BTreeSet<VertexId>, bool)> {
    match unfuse {
        None => {
            require(d.is_internal(x), || format!("{x} is a boundary spider"))?;
            require(d.phase(x).is_pauli(), || {
                format!("{x} does not have phase 0 or π")
            })?;
            Ok((d.neighbours(x).filter(|&n| n != partner).collect(), false))
        }
        Some(s) => {
            check_unfusion(d, x, s)?;
            require(!s.neighbours.contains(&partner), || {
                format!("cannot unfuse the pivot partner {partner}")
            })?;
            require(!d.is_boundary(x) || s.boundary, || {
                format!("unfusion of {x} must take its boundary wire")
            })?;
            let kept = d
                .neighbours(x)
                .filter(|&n| n != partner && s.neighbours.binary_search(&n).is_err())
                .collect();
            Ok((kept, true))
        }
    }
}

pub(super) fn pivot_delta(
    d: &ZxDiagram,
    u: VertexId,
    v: VertexId,
    unfuse_u: Option<&Unfusion>,
    unfuse_v: Option<&Unfusion>,
) -> Result<(i64, i64)> {
    require_vertex(d, u)?;
    require_vertex(d, v)?;
    require(u != v && d.connected(u, v), || {
        format!("{u} and {v} are not adjacent")
    })?;
    let (nu, fresh_u) = pivot_side(d, u, v, unfuse_u)?;
    let (nv, fresh_v) = pivot_side(d, v, u, unfuse_v)?;
    let a: Vec<VertexId> = nu.intersection(&nv).copied().collect();
    let b: Vec<VertexId> = nu.difference(&nv).copied().collect();
    let c: Vec<VertexId> = nv.difference(&nu).copied().collect();
    let (na, nb, nc) = (
        a.len() as i64,
        b.len() as i64 + i64::from(fresh_u),
        c.len() as i64 + i64::from(fresh_v),
    );
    let unfusions = i64::from(fresh_u) + i64::from(fresh_v);
    let removed =
        (nu.len() as i64 + i64::from(fresh_u)) + (nv.len() as i64 + i64::from(fresh_v)) + 1;
    let flips = (na * nb - 2 * edges_between(d, &a, &b))
        + (na * nc - 2 * edges_between(d, &a, &c))
        + (nb * nc - 2 * edges_between(d, &b, &c));
    Ok((2 * unfusions - removed + flips, 2 * unfusions - 2))
}

/// Pivot about the edge `u-v`: complement edges between the sets of common
/// neighbours, exclusive neighbours of `u` and exclusive neighbours of `v`,
/// propagate their π phases, and delete both. Unfusions first reduce either
/// vertex to an internal Pauli spider.
pub fn pivot(
    d: &mut ZxDiagram,
    u: VertexId,
    v: VertexId,
    unfuse_u: Option<&Unfusion>,
    unfuse_v: Option<&Unfusion>,
) -> Result<RewriteMatch> {
    pivot_with(d, u, v, unfuse_u, unfuse_v, &mut NoTracking)
}

pub fn pivot_with(
    d: &mut ZxDiagram,
    u: VertexId,
    v: VertexId,
    unfuse_u: Option<&Unfusion>,
    unfuse_v: Option<&Unfusion>,
    t: &mut impl PhaseTracker,
) -> Result<RewriteMatch> {
    let (delta_e, delta_v) = pivot_delta(d, u, v, unfuse_u, unfuse_v)?;
    if let Some(s) = unfuse_u {
        let r = pivot_residual(d.phase(u));
        unfuse_with(d, u, s, Some(r), t)?;
    }
    if let Some(s) = unfuse_v {
        let r = pivot_residual(d.phase(v));
        unfuse_with(d, v, s, Some(r), t)?;
    }
    let pu = d.phase(u).as_constant().expect("checked");
    let pv = d.phase(v).as_constant().expect("checked");
    let nu: BTreeSet<VertexId> = d.neighbours(u).filter(|&n| n != v).collect();
    let nv: BTreeSet<VertexId> = d.neighbours(v).filter(|&n| n != u).collect();
    let a: Vec<VertexId> = nu.intersection(&nv).copied().collect();
    let b: Vec<VertexId> = nu.difference(&nv).copied().collect();
    let c: Vec<VertexId> = nv.difference(&nu).copied().collect();
    for (xs, ys) in [(&a, &b), (&a, &c), (&b, &c)] {
        for &x in xs.iter() {
            for &y in ys.iter() {
                d.toggle_edge(x, y)?;
            }
        }
    }
    for &x in &b {
        d.add_to_phase(x, pv);
    }
    for &x in &c {
        d.add_to_phase(x, pu);
    }
    for &x in &a {
        d.add_to_phase(x, pu + pv + Phase::pi());
    }
    d.remove_spider(u)?;
    d.remove_spider(v)?;
    Ok(RewriteMatch {
        kind: RewriteKind::Pivot {
            u,
            v,
            unfuse_u: unfuse_u.cloned(),
            unfuse_v: unfuse_v.cloned(),
        },
        delta_e,
        delta_v,
    })
}

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

//! Identity removal.

use super::{require, require_vertex, PhaseTracker, RewriteKind, RewriteMatch};
use crate::error::{Error, Result};
use crate::graph::{VertexId, ZxDiagram};
use crate::phase::Phase;

/// The two neighbours of an identity spider, ordered so that the first is
/// the one that survives the fusion.
fn id_fuse_pair(d: &ZxDiagram, v: VertexId) -> Result<(VertexId, VertexId)> {
    require_vertex(d, v)?;
    require(d.is_internal(v), || format!("{v} is a boundary spider"))?;
    require(d.phase(v).is_constant_zero(), || {
        format!("{v} has non-zero phase")
    })?;
    require(d.degree(v) == 2, || {
        format!("{v} has degree {}", d.degree(v))
    })?;
    let mut nb = d.neighbours(v);
    let (a, b) = (nb.next().expect("degree 2"), nb.next().expect("degree 2"));
    require(!(d.is_boundary(a) && d.is_boundary(b)), || {
        format!("both neighbours of {v} are boundary spiders")
    })?;
    Ok(if d.is_boundary(b) { (b, a) } else { (a, b) })
}

pub(super) fn id_fuse_delta(d: &ZxDiagram, v: VertexId) -> Result<(i64, i64)> {
    let (a, b) = id_fuse_pair(d, v)?;
    let mut de = -2;
    for w in d.neighbours(b) {
        if w == v {
            continue;
        }
        de -= 1;
        if w != a {
            de += if d.connected(a, w) { -1 } else { 1 };
        }
    }
    Ok((de, -2))
}

/// Remove a phase-free internal spider of degree two and fuse its two
/// neighbours. Edges of the absorbed neighbour are toggled onto the
/// survivor, and a direct edge between the two becomes a π phase.
pub fn id_fuse(d: &mut ZxDiagram, v: VertexId) -> Result<RewriteMatch> {
    id_fuse_with(d, v, &mut super::NoTracking)
}

pub fn id_fuse_with(
    d: &mut ZxDiagram,
    v: VertexId,
    t: &mut impl PhaseTracker,
) -> Result<RewriteMatch> {
    let (delta_e, delta_v) = id_fuse_delta(d, v)?;
    let (a, b) = id_fuse_pair(d, v)?;
    d.remove_spider(v)?;
    fuse_into(d, a, b, t)?;
    Ok(RewriteMatch {
        kind: RewriteKind::IdFuse { v },
        delta_e,
        delta_v,
    })
}

/// Fuse `b` into `a`, where `a` and `b` are linked through an identity
/// that has already been removed (so their union behaves like a single
/// spider). Parallel Hadamard edges cancel and a direct `a-b` edge adds π.
pub(crate) fn fuse_into(
    d: &mut ZxDiagram,
    a: VertexId,
    b: VertexId,
    t: &mut impl PhaseTracker,
) -> Result<()> {
    let merged = d
        .phase(a)
        .checked_add(d.phase(b))
        .ok_or_else(|| Error::Unsupported(format!("fusing two symbolic phases on {a} and {b}")))?;
    d.set_phase(a, merged);
    t.fused(a, b);
    let nbrs: Vec<VertexId> = d.neighbours(b).collect();
    for w in nbrs {
        d.remove_edge(b, w)?;
        if w == a {
            d.add_to_phase(a, Phase::pi());
        } else {
            d.toggle_edge(a, w)?;
        }
    }
    d.move_boundary(b, a, false)?;
    d.remove_spider(b)
}

/// Remove a phase-free boundary spider whose only neighbour carries no
/// boundary: the wire moves onto the neighbour with its Hadamard flag
/// flipped. Returns the neighbour.
pub fn remove_boundary_identity(d: &mut ZxDiagram, v: VertexId) -> Result<VertexId> {
    require_vertex(d, v)?;
    require(d.is_boundary(v), || format!("{v} is internal"))?;
    require(d.phase(v).is_constant_zero(), || {
        format!("{v} has non-zero phase")
    })?;
    require(d.degree(v) == 1, || {
        format!("{v} has degree {}", d.degree(v))
    })?;
    let n = d.neighbours(v).next().expect("degree 1");
    require(!d.is_boundary(n), || {
        format!("{n} already holds a boundary")
    })?;
    let s = d.spider(v).expect("exists");
    require(s.input.is_none() || s.output.is_none(), || {
        format!("{v} holds two wires")
    })?;
    d.remove_edge(v, n)?;
    d.move_boundary(v, n, true)?;
    d.remove_spider(v)?;
    Ok(n)
}

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

//! Phase gadget rules.
//!
//! A phase gadget is an internal degree-one spider (the top) hanging off an
//! internal spider with phase 0 or π (the base). The base's other
//! neighbours are the gadget's legs.

use super::fusion::fuse_into;
use super::{require, require_vertex, NoTracking, PhaseTracker, RewriteKind, RewriteMatch};
use crate::error::Result;
use crate::graph::{VertexId, ZxDiagram};

/// The base of the gadget whose top is `top`, if `top` is one.
pub fn gadget_base(d: &ZxDiagram, top: VertexId) -> Option<VertexId> {
    if !d.is_internal(top) || d.degree(top) != 1 {
        return None;
    }
    let base = d.neighbours(top).next()?;
    (d.is_internal(base) && d.phase(base).is_pauli() && d.degree(base) >= 2).then_some(base)
}

/// The legs of the gadget with top `top`, sorted.
pub fn gadget_legs(d: &ZxDiagram, top: VertexId) -> Option<Vec<VertexId>> {
    let base = gadget_base(d, top)?;
    Some(d.neighbours(base).filter(|&n| n != top).collect())
}

fn fuse_parts(d: &ZxDiagram, top1: VertexId, top2: VertexId) -> Result<(VertexId, Vec<VertexId>)> {
    require_vertex(d, top1)?;
    require_vertex(d, top2)?;
    require(top1 != top2, || "a gadget cannot fuse with itself".into())?;
    let b1 = gadget_base(d, top1)
        .ok_or_else(|| crate::Error::NoMatch(format!("{top1} is not a gadget top")))?;
    let b2 = gadget_base(d, top2)
        .ok_or_else(|| crate::Error::NoMatch(format!("{top2} is not a gadget top")))?;
    require(b1 != b2, || "both tops hang off the same base".into())?;
    require(
        d.phase(b1).is_constant_zero() && d.phase(b2).is_constant_zero(),
        || "gadget bases must have phase 0".into(),
    )?;
    let (l1, l2) = (
        gadget_legs(d, top1).expect("gadget"),
        gadget_legs(d, top2).expect("gadget"),
    );
    require(l1 == l2, || {
        format!("gadgets {top1} and {top2} have different legs")
    })?;
    Ok((b2, l2))
}

pub(super) fn gadget_fuse_delta(
    d: &ZxDiagram,
    top1: VertexId,
    top2: VertexId,
) -> Result<(i64, i64)> {
    let (_, legs) = fuse_parts(d, top1, top2)?;
    Ok((-(legs.len() as i64) - 1, -2))
}

/// Merge two gadgets with the same legs: the phase of `top2` is added to
/// `top1` and the second gadget is deleted.
pub fn gadget_fuse(d: &mut ZxDiagram, top1: VertexId, top2: VertexId) -> Result<RewriteMatch> {
    gadget_fuse_with(d, top1, top2, &mut NoTracking)
}

pub fn gadget_fuse_with(
    d: &mut ZxDiagram,
    top1: VertexId,
    top2: VertexId,
    t: &mut impl PhaseTracker,
) -> Result<RewriteMatch> {
    let (delta_e, delta_v) = gadget_fuse_delta(d, top1, top2)?;
    let (b2, _) = fuse_parts(d, top1, top2)?;
    d.remove_spider(b2)?;
    fuse_into(d, top1, top2, t)?;
    Ok(RewriteMatch {
        kind: RewriteKind::GadgetFuse { top1, top2 },
        delta_e,
        delta_v,
    })
}

pub(super) fn gadget_delete_delta(d: &ZxDiagram, top: VertexId) -> Result<(i64, i64)> {
    require_vertex(d, top)?;
    let base = gadget_base(d, top)
        .ok_or_else(|| crate::Error::NoMatch(format!("{top} is not a gadget top")))?;
    if !d.phase(base).is_constant_zero() {
        return Ok((0, 0));
    }
    require(d.degree(base) == 2, || {
        format!("gadget {top} has more than one leg")
    })?;
    Ok((-2, -2))
}

/// Remove a gadget that acts trivially on the structure. If the base has
/// phase π, copy it through the top: the base becomes 0 and the top phase
/// is negated. Otherwise, if the gadget has a single leg, fuse the top's
/// phase onto that leg and delete the gadget.
pub fn gadget_delete(d: &mut ZxDiagram, top: VertexId) -> Result<RewriteMatch> {
    gadget_delete_with(d, top, &mut NoTracking)
}

pub fn gadget_delete_with(
    d: &mut ZxDiagram,
    top: VertexId,
    t: &mut impl PhaseTracker,
) -> Result<RewriteMatch> {
    let (delta_e, delta_v) = gadget_delete_delta(d, top)?;
    let base = gadget_base(d, top).expect("checked");
    if !d.phase(base).is_constant_zero() {
        d.set_phase(base, crate::phase::Phase::zero());
        d.negate_phase(top);
        t.negated(top);
    } else {
        let leg = d.neighbours(base).find(|&n| n != top).expect("one leg");
        d.remove_spider(base)?;
        // `top` is now isolated; fusing it into the leg only adds its phase.
        fuse_into(d, leg, top, t)?;
    }
    Ok(RewriteMatch {
        kind: RewriteKind::GadgetDelete { top },
        delta_e,
        delta_v,
    })
}

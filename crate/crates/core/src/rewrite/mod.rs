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

//! Rewrite rules on graph-like diagrams.
//!
//! Every rule comes as a read-only check returning a [`RewriteMatch`] with
//! the exact change in edge and vertex count, and an application that
//! mutates the diagram and returns the same record. Rules that move or
//! combine phases report this to a [`PhaseTracker`], which is how phase
//! teleportation follows symbolic phases through a simplification.

mod complement;
mod fusion;
mod gadget;

pub use complement::{
    lcomp_residual, local_comp, local_comp_with, neighbour_unfuse, pivot, pivot_residual,
    pivot_with, unfuse_with,
};
pub use fusion::{id_fuse, id_fuse_with, remove_boundary_identity};
pub use gadget::{
    gadget_base, gadget_delete, gadget_delete_with, gadget_fuse, gadget_fuse_with, gadget_legs,
};

use crate::error::{Error, Result};
use crate::graph::{VertexId, ZxDiagram};

/// Neighbours detached from a spider by neighbour unfusion. `boundary`
/// moves the spider's boundary wire along with them.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Unfusion {
    /// Sorted, distinct.
    pub neighbours: Vec<VertexId>,
    pub boundary: bool,
}

impl Unfusion {
    pub fn new(mut neighbours: Vec<VertexId>, boundary: bool) -> Unfusion {
        neighbours.sort_unstable();
        neighbours.dedup();
        Unfusion {
            neighbours,
            boundary,
        }
    }

    /// Subset size, counting the boundary wire as one element.
    pub fn len(&self) -> usize {
        self.neighbours.len() + usize::from(self.boundary)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum RewriteKind {
    IdFuse {
        v: VertexId,
    },
    LComp {
        v: VertexId,
        unfuse: Option<Unfusion>,
    },
    Pivot {
        u: VertexId,
        v: VertexId,
        unfuse_u: Option<Unfusion>,
        unfuse_v: Option<Unfusion>,
    },
    NeighbourUnfuse {
        v: VertexId,
        unfuse: Unfusion,
    },
    GadgetFuse {
        top1: VertexId,
        top2: VertexId,
    },
    GadgetDelete {
        top: VertexId,
    },
}

impl RewriteKind {
    /// Position in the tie-break order IdFuse < LComp < Pivot < others.
    pub fn rank(&self) -> u8 {
        match self {
            RewriteKind::IdFuse { .. } => 0,
            RewriteKind::LComp { .. } => 1,
            RewriteKind::Pivot { .. } => 2,
            RewriteKind::NeighbourUnfuse { .. } => 3,
            RewriteKind::GadgetFuse { .. } => 4,
            RewriteKind::GadgetDelete { .. } => 5,
        }
    }

    /// The vertices the rule is anchored at, in increasing order.
    pub fn anchors(&self) -> Vec<VertexId> {
        let mut a = match *self {
            RewriteKind::IdFuse { v }
            | RewriteKind::LComp { v, .. }
            | RewriteKind::NeighbourUnfuse { v, .. } => vec![v],
            RewriteKind::Pivot { u, v, .. } => vec![u, v],
            RewriteKind::GadgetFuse { top1, top2 } => vec![top1, top2],
            RewriteKind::GadgetDelete { top } => vec![top],
        };
        a.sort_unstable();
        a
    }

    /// Whether any neighbour unfusion is part of the rule.
    pub fn unfuses(&self) -> bool {
        match self {
            RewriteKind::LComp { unfuse, .. } => unfuse.is_some(),
            RewriteKind::Pivot {
                unfuse_u, unfuse_v, ..
            } => unfuse_u.is_some() || unfuse_v.is_some(),
            RewriteKind::NeighbourUnfuse { .. } => true,
            _ => false,
        }
    }
}

/// A rewrite together with its exact effect on `|E|` and `|V|`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RewriteMatch {
    pub kind: RewriteKind,
    pub delta_e: i64,
    pub delta_v: i64,
}

impl RewriteMatch {
    /// Change in two-qubit gate count, `ΔE − ΔV`.
    pub fn delta_2q(&self) -> i64 {
        self.delta_e - self.delta_v
    }

    /// `−ΔN₂Q`; larger is better.
    pub fn score(&self) -> i64 {
        -self.delta_2q()
    }

    /// Reduces the two-qubit count, or keeps it while removing vertices.
    pub fn accept(&self) -> bool {
        let d = self.delta_2q();
        d < 0 || (d == 0 && self.delta_v < 0)
    }
}

/// Receives notifications whenever a rule moves or merges spider phases.
pub trait PhaseTracker {
    /// The phase of `removed` was added onto `kept`, and `removed` is gone.
    fn fused(&mut self, _kept: VertexId, _removed: VertexId) {}
    /// The phase of `v` was negated.
    fn negated(&mut self, _v: VertexId) {}
    /// The non-constant part of `from`'s phase now lives on `to`.
    fn moved(&mut self, _from: VertexId, _to: VertexId) {}
}

/// A tracker that ignores everything.
#[derive(Clone, Copy, Debug, Default)]
pub struct NoTracking;

impl PhaseTracker for NoTracking {}

/// Compute the match record for `kind` without changing the diagram.
pub fn check(d: &ZxDiagram, kind: &RewriteKind) -> Result<RewriteMatch> {
    let (delta_e, delta_v) = match kind {
        RewriteKind::IdFuse { v } => fusion::id_fuse_delta(d, *v),
        RewriteKind::LComp { v, unfuse } => complement::lcomp_delta(d, *v, unfuse.as_ref()),
        RewriteKind::Pivot {
            u,
            v,
            unfuse_u,
            unfuse_v,
        } => complement::pivot_delta(d, *u, *v, unfuse_u.as_ref(), unfuse_v.as_ref()),
        RewriteKind::NeighbourUnfuse { v, unfuse } => {
            complement::check_unfusion(d, *v, unfuse)?;
            Ok((2, 2))
        }
        RewriteKind::GadgetFuse { top1, top2 } => gadget::gadget_fuse_delta(d, *top1, *top2),
        RewriteKind::GadgetDelete { top } => gadget::gadget_delete_delta(d, *top),
    }?;
    Ok(RewriteMatch {
        kind: kind.clone(),
        delta_e,
        delta_v,
    })
}

/// Apply `kind` to `d`.
pub fn apply(d: &mut ZxDiagram, kind: &RewriteKind) -> Result<RewriteMatch> {
    apply_with(d, kind, &mut NoTracking)
}

/// Apply `kind` to `d`, reporting phase movements to `t`.
pub fn apply_with(
    d: &mut ZxDiagram,
    kind: &RewriteKind,
    t: &mut impl PhaseTracker,
) -> Result<RewriteMatch> {
    match kind {
        RewriteKind::IdFuse { v } => id_fuse_with(d, *v, t),
        RewriteKind::LComp { v, unfuse } => local_comp_with(d, *v, unfuse.as_ref(), t),
        RewriteKind::Pivot {
            u,
            v,
            unfuse_u,
            unfuse_v,
        } => pivot_with(d, *u, *v, unfuse_u.as_ref(), unfuse_v.as_ref(), t),
        RewriteKind::NeighbourUnfuse { v, unfuse } => neighbour_unfuse(d, *v, unfuse),
        RewriteKind::GadgetFuse { top1, top2 } => gadget_fuse_with(d, *top1, *top2, t),
        RewriteKind::GadgetDelete { top } => gadget_delete_with(d, *top, t),
    }
}

pub(crate) fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::NoMatch(msg()))
    }
}

pub(crate) fn require_vertex(d: &ZxDiagram, v: VertexId) -> Result<()> {
    if d.contains(v) {
        Ok(())
    } else {
        Err(Error::MissingVertex(v))
    }
}

/// Number of edges between two vertex sets (each pair counted once).
pub(crate) fn edges_between(d: &ZxDiagram, xs: &[VertexId], ys: &[VertexId]) -> i64 {
    let mut n = 0;
    for &x in xs {
        if !d.contains(x) {
            continue;
        }
        for &y in ys {
            if x != y && d.contains(y) && d.connected(x, y) {
                n += 1;
            }
        }
    }
    n
}

#[cfg(test)]
mod tests;

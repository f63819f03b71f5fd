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

//! Graph-like ZX-diagrams and their underlying open graphs.
//!
//! Every spider is a Z-spider. Edges are either plain or Hadamard; plain
//! edges only occur while a circuit is being converted and disappear in
//! [`crate::convert::to_graph_like`]. A spider may carry an input wire, an
//! output wire, or (before conversion) both. Boundary wires carry their own
//! Hadamard flag, so an input that enters a spider through a Hadamard gate
//! needs no helper spider.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::phase::{Phase, PhaseExpr};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Debug for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum EdgeKind {
    Simple,
    Hadamard,
}

/// A boundary wire attached to a spider.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Wire {
    /// Position in the diagram's input or output list.
    pub index: usize,
    /// Whether a Hadamard sits between the boundary and the spider.
    pub hadamard: bool,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Spider {
    pub phase: PhaseExpr,
    pub input: Option<Wire>,
    pub output: Option<Wire>,
}

impl Spider {
    pub fn is_boundary(&self) -> bool {
        self.input.is_some() || self.output.is_some()
    }
}

/// Summary counts; see [`ZxDiagram::stats`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DiagramStats {
    pub vertices: usize,
    pub edges: usize,
    pub internal: usize,
    pub non_clifford: usize,
}

#[derive(Clone, Default, PartialEq, Eq)]
pub struct ZxDiagram {
    spiders: Vec<Option<Spider>>,
    adj: Vec<Vec<(VertexId, EdgeKind)>>,
    inputs: Vec<VertexId>,
    outputs: Vec<VertexId>,
    n_spiders: usize,
    n_edges: usize,
}

impl ZxDiagram {
    pub fn new() -> ZxDiagram {
        ZxDiagram::default()
    }

    pub fn add_spider(&mut self, phase: impl Into<PhaseExpr>) -> VertexId {
        let id = VertexId(u32::try_from(self.spiders.len()).expect("vertex id space exhausted"));
        self.spiders.push(Some(Spider {
            phase: phase.into(),
            input: None,
            output: None,
        }));
        self.adj.push(Vec::new());
        self.n_spiders += 1;
        id
    }

    /// Remove a spider and all its edges. Spiders holding a boundary wire
    /// cannot be removed.
    pub fn remove_spider(&mut self, v: VertexId) -> Result<()> {
        let s = self.spider(v).ok_or(Error::MissingVertex(v))?;
        if s.is_boundary() {
            return Err(Error::Invariant(format!(
                "cannot remove boundary spider {v}"
            )));
        }
        let nbrs = std::mem::take(&mut self.adj[v.index()]);
        for (w, _) in &nbrs {
            let list = &mut self.adj[w.index()];
            if let Ok(pos) = list.binary_search_by_key(&v, |e| e.0) {
                list.remove(pos);
            }
        }
        self.n_edges -= nbrs.len();
        self.spiders[v.index()] = None;
        self.n_spiders -= 1;
        Ok(())
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.spider(v).is_some()
    }

    pub fn spider(&self, v: VertexId) -> Option<&Spider> {
        self.spiders.get(v.index()).and_then(Option::as_ref)
    }

    fn spider_mut(&mut self, v: VertexId) -> &mut Spider {
        self.spiders[v.index()]
            .as_mut()
            .unwrap_or_else(|| panic!("no spider {v}"))
    }

    /// Phase of `v`. Panics if `v` does not exist.
    pub fn phase(&self, v: VertexId) -> PhaseExpr {
        self.spider(v)
            .unwrap_or_else(|| panic!("no spider {v}"))
            .phase
    }

    pub fn set_phase(&mut self, v: VertexId, p: impl Into<PhaseExpr>) {
        self.spider_mut(v).phase = p.into();
    }

    pub fn add_to_phase(&mut self, v: VertexId, p: Phase) {
        self.spider_mut(v).phase.add_constant(p);
    }

    pub fn negate_phase(&mut self, v: VertexId) {
        self.spider_mut(v).phase.negate();
    }

    /// Neighbours of `v` in increasing id order.
    pub fn neighbours(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj[v.index()].iter().map(|e| e.0)
    }

    pub fn incident(&self, v: VertexId) -> &[(VertexId, EdgeKind)] {
        &self.adj[v.index()]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v.index()].len()
    }

    pub fn edge(&self, u: VertexId, v: VertexId) -> Option<EdgeKind> {
        let list = self.adj.get(u.index())?;
        list.binary_search_by_key(&v, |e| e.0)
            .ok()
            .map(|i| list[i].1)
    }

    pub fn connected(&self, u: VertexId, v: VertexId) -> bool {
        self.edge(u, v).is_some()
    }

    fn check_pair(&self, u: VertexId, v: VertexId) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        for w in [u, v] {
            if !self.contains(w) {
                return Err(Error::MissingVertex(w));
            }
        }
        Ok(())
    }

    fn insert_half(&mut self, u: VertexId, v: VertexId, kind: EdgeKind) {
        let list = &mut self.adj[u.index()];
        let pos = list.binary_search_by_key(&v, |e| e.0).unwrap_err();
        list.insert(pos, (v, kind));
    }

    fn remove_half(&mut self, u: VertexId, v: VertexId) -> EdgeKind {
        let list = &mut self.adj[u.index()];
        let pos = list
            .binary_search_by_key(&v, |e| e.0)
            .expect("edge present");
        list.remove(pos).1
    }

    /// Add a new edge. Fails on self-loops and on existing edges.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId, kind: EdgeKind) -> Result<()> {
        self.check_pair(u, v)?;
        if self.connected(u, v) {
            return Err(Error::Invariant(format!("edge {u}-{v} already present")));
        }
        self.insert_half(u, v, kind);
        self.insert_half(v, u, kind);
        self.n_edges += 1;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeKind> {
        self.check_pair(u, v)?;
        if !self.connected(u, v) {
            return Err(Error::Invariant(format!("no edge {u}-{v}")));
        }
        self.remove_half(v, u);
        self.n_edges -= 1;
        Ok(self.remove_half(u, v))
    }

    /// Add the Hadamard edge `u-v` if absent, remove it if present.
    pub fn toggle_edge(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        self.check_pair(u, v)?;
        match self.edge(u, v) {
            Some(EdgeKind::Hadamard) => {
                self.remove_edge(u, v)?;
            }
            Some(EdgeKind::Simple) => {
                return Err(Error::NotGraphLike(format!("plain edge {u}-{v}")));
            }
            None => self.add_edge(u, v, EdgeKind::Hadamard)?,
        }
        Ok(())
    }

    /// Add an edge, resolving self-loops and parallel edges the way the
    /// rewrite rules do: plain self-loops vanish, Hadamard self-loops add π,
    /// parallel Hadamard edges cancel, and a Hadamard edge parallel to a plain
    /// one becomes a π on `u`.
    pub fn add_edge_smart(&mut self, u: VertexId, v: VertexId, kind: EdgeKind) -> Result<()> {
        if u == v {
            if !self.contains(u) {
                return Err(Error::MissingVertex(u));
            }
            if kind == EdgeKind::Hadamard {
                self.add_to_phase(u, Phase::pi());
            }
            return Ok(());
        }
        self.check_pair(u, v)?;
        match (self.edge(u, v), kind) {
            (None, k) => self.add_edge(u, v, k)?,
            (Some(EdgeKind::Simple), EdgeKind::Simple) => {}
            (Some(EdgeKind::Hadamard), EdgeKind::Hadamard) => {
                self.remove_edge(u, v)?;
            }
            (Some(EdgeKind::Hadamard), EdgeKind::Simple) => {
                self.remove_edge(u, v)?;
                self.add_edge(u, v, EdgeKind::Simple)?;
                self.add_to_phase(u, Phase::pi());
            }
            (Some(EdgeKind::Simple), EdgeKind::Hadamard) => self.add_to_phase(u, Phase::pi()),
        }
        Ok(())
    }

    pub fn input_wire(&self, v: VertexId) -> Option<Wire> {
        self.spider(v).and_then(|s| s.input)
    }

    pub fn output_wire(&self, v: VertexId) -> Option<Wire> {
        self.spider(v).and_then(|s| s.output)
    }

    /// Attach the next input wire to `v`.
    pub fn push_input(&mut self, v: VertexId, hadamard: bool) -> Result<()> {
        let index = self.inputs.len();
        let s = self
            .spiders
            .get_mut(v.index())
            .and_then(Option::as_mut)
            .ok_or(Error::MissingVertex(v))?;
        if s.input.is_some() {
            return Err(Error::Invariant(format!("{v} already has an input")));
        }
        s.input = Some(Wire { index, hadamard });
        self.inputs.push(v);
        Ok(())
    }

    /// Attach the next output wire to `v`.
    pub fn push_output(&mut self, v: VertexId, hadamard: bool) -> Result<()> {
        let index = self.outputs.len();
        let s = self
            .spiders
            .get_mut(v.index())
            .and_then(Option::as_mut)
            .ok_or(Error::MissingVertex(v))?;
        if s.output.is_some() {
            return Err(Error::Invariant(format!("{v} already has an output")));
        }
        s.output = Some(Wire { index, hadamard });
        self.outputs.push(v);
        Ok(())
    }

    /// Move the input wire of `from` to `to`, optionally toggling its
    /// Hadamard flag.
    pub fn move_input(&mut self, from: VertexId, to: VertexId, toggle: bool) -> Result<()> {
        let mut w = self
            .input_wire(from)
            .ok_or_else(|| Error::Invariant(format!("{from} has no input")))?;
        if self.input_wire(to).is_some() {
            return Err(Error::Invariant(format!("{to} already has an input")));
        }
        w.hadamard ^= toggle;
        self.spider_mut(from).input = None;
        self.spider_mut(to).input = Some(w);
        self.inputs[w.index] = to;
        Ok(())
    }

    /// Move the output wire of `from` to `to`, optionally toggling its
    /// Hadamard flag.
    pub fn move_output(&mut self, from: VertexId, to: VertexId, toggle: bool) -> Result<()> {
        let mut w = self
            .output_wire(from)
            .ok_or_else(|| Error::Invariant(format!("{from} has no output")))?;
        if self.output_wire(to).is_some() {
            return Err(Error::Invariant(format!("{to} already has an output")));
        }
        w.hadamard ^= toggle;
        self.spider_mut(from).output = None;
        self.spider_mut(to).output = Some(w);
        self.outputs[w.index] = to;
        Ok(())
    }

    /// Move whichever boundary wires `from` holds onto `to`.
    pub fn move_boundary(&mut self, from: VertexId, to: VertexId, toggle: bool) -> Result<()> {
        if self.input_wire(from).is_some() {
            self.move_input(from, to, toggle)?;
        }
        if self.output_wire(from).is_some() {
            self.move_output(from, to, toggle)?;
        }
        Ok(())
    }

    pub fn set_input_hadamard(&mut self, v: VertexId, hadamard: bool) {
        if let Some(w) = &mut self.spider_mut(v).input {
            w.hadamard = hadamard;
        }
    }

    pub fn set_output_hadamard(&mut self, v: VertexId, hadamard: bool) {
        if let Some(w) = &mut self.spider_mut(v).output {
            w.hadamard = hadamard;
        }
    }

    pub fn inputs(&self) -> &[VertexId] {
        &self.inputs
    }

    pub fn outputs(&self) -> &[VertexId] {
        &self.outputs
    }

    pub fn is_boundary(&self, v: VertexId) -> bool {
        self.spider(v).is_some_and(Spider::is_boundary)
    }

    pub fn is_internal(&self, v: VertexId) -> bool {
        self.spider(v).is_some_and(|s| !s.is_boundary())
    }

    /// Live spiders in increasing id order.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.spiders
            .iter()
            .enumerate()
            .filter(|(_, s)| s.is_some())
            .map(|(i, _)| VertexId(i as u32))
    }

    /// One past the largest id ever allocated.
    pub fn id_bound(&self) -> usize {
        self.spiders.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.n_spiders
    }

    pub fn num_edges(&self) -> usize {
        self.n_edges
    }

    pub fn num_inputs(&self) -> usize {
        self.inputs.len()
    }

    pub fn num_outputs(&self) -> usize {
        self.outputs.len()
    }

    /// All edges `(u, v, kind)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId, EdgeKind)> {
        let mut out = Vec::with_capacity(self.n_edges);
        for u in self.vertices() {
            for &(v, k) in &self.adj[u.index()] {
                if u < v {
                    out.push((u, v, k));
                }
            }
        }
        out
    }

    /// `|E| - |V| + |I|`, the two-qubit gate count of the circuit extracted
    /// from this diagram when it has a causal flow.
    pub fn count_2q(&self) -> i64 {
        self.n_edges as i64 - self.n_spiders as i64 + self.inputs.len() as i64
    }

    pub fn stats(&self) -> DiagramStats {
        let mut internal = 0;
        let mut non_clifford = 0;
        for s in self.spiders.iter().flatten() {
            if !s.is_boundary() {
                internal += 1;
            }
            if !s.phase.is_clifford() {
                non_clifford += 1;
            }
        }
        DiagramStats {
            vertices: self.n_spiders,
            edges: self.n_edges,
            internal,
            non_clifford,
        }
    }

    /// Number of spiders whose phase is not a multiple of π/2.
    pub fn t_count(&self) -> usize {
        self.stats().non_clifford
    }

    /// Check the graph-like conditions: only Hadamard edges and at most one
    /// boundary wire per spider. Self-loops and parallel edges cannot be
    /// represented at all.
    pub fn check_graph_like(&self) -> Result<()> {
        for v in self.vertices() {
            let s = self.spider(v).expect("live");
            if s.input.is_some() && s.output.is_some() {
                return Err(Error::NotGraphLike(format!(
                    "{v} holds both an input and an output"
                )));
            }
            if let Some(&(w, _)) = self.adj[v.index()].iter().find(|e| e.1 == EdgeKind::Simple) {
                return Err(Error::NotGraphLike(format!("plain edge {v}-{w}")));
            }
        }
        Ok(())
    }

    pub fn is_graph_like(&self) -> bool {
        self.check_graph_like().is_ok()
    }

    /// The open graph with spiders as vertices, Hadamard edges as edges and
    /// input/output spiders as `I`/`O`.
    pub fn underlying_open_graph(&self) -> Result<OpenGraph> {
        self.check_graph_like()?;
        let ids: Vec<VertexId> = self.vertices().collect();
        let mut dense = vec![usize::MAX; self.spiders.len()];
        for (i, v) in ids.iter().enumerate() {
            dense[v.index()] = i;
        }
        let adj = ids
            .iter()
            .map(|v| {
                self.adj[v.index()]
                    .iter()
                    .map(|e| dense[e.0.index()])
                    .collect()
            })
            .collect();
        let inputs = self.inputs.iter().map(|v| dense[v.index()]).collect();
        let outputs = self.outputs.iter().map(|v| dense[v.index()]).collect();
        Ok(OpenGraph::from_parts(ids, adj, inputs, outputs))
    }

    /// Whether two diagrams have identical spiders, boundaries and edges,
    /// ignoring phases.
    pub fn same_structure(&self, other: &ZxDiagram) -> bool {
        self.inputs == other.inputs
            && self.outputs == other.outputs
            && self.vertices().eq(other.vertices())
            && self.edges() == other.edges()
            && self.vertices().all(|v| {
                let (a, b) = (self.spider(v).unwrap(), other.spider(v).unwrap());
                a.input == b.input && a.output == b.output
            })
    }
}

impl fmt::Debug for ZxDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "ZxDiagram(inputs={:?}, outputs={:?})",
            self.inputs, self.outputs
        )?;
        for v in self.vertices() {
            let s = self.spider(v).unwrap();
            write!(f, "  {v} [{}]", s.phase)?;
            if let Some(w) = s.input {
                write!(f, " in{}{}", w.index, if w.hadamard { "h" } else { "" })?;
            }
            if let Some(w) = s.output {
                write!(f, " out{}{}", w.index, if w.hadamard { "h" } else { "" })?;
            }
            let nb: Vec<String> = self.adj[v.index()]
                .iter()
                .map(|(w, k)| format!("{w}{}", if *k == EdgeKind::Simple { "(s)" } else { "" }))
                .collect();
            writeln!(f, " -> {}", nb.join(" "))?;
        }
        Ok(())
    }
}

/// An open graph `(G, I, O)` over dense vertex indices `0..len()`.
///
/// `ids` maps each index back to the spider it came from; graphs built with
/// [`OpenGraph::new`] use `VertexId(i)` for index `i`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct OpenGraph {
    ids: Vec<VertexId>,
    adj: Vec<Vec<usize>>,
    inputs: Vec<usize>,
    outputs: Vec<usize>,
    is_input: Vec<bool>,
    is_output: Vec<bool>,
}

impl OpenGraph {
    /// Build from an edge list. Panics on self-loops or out-of-range indices.
    pub fn new(
        n: usize,
        edges: &[(usize, usize)],
        inputs: Vec<usize>,
        outputs: Vec<usize>,
    ) -> OpenGraph {
        let mut sets = vec![BTreeSet::new(); n];
        for &(u, v) in edges {
            assert!(u != v && u < n && v < n, "bad edge ({u}, {v})");
            sets[u].insert(v);
            sets[v].insert(u);
        }
        let adj = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        let ids = (0..n).map(|i| VertexId(i as u32)).collect();
        OpenGraph::from_parts(ids, adj, inputs, outputs)
    }

    fn from_parts(
        ids: Vec<VertexId>,
        adj: Vec<Vec<usize>>,
        inputs: Vec<usize>,
        outputs: Vec<usize>,
    ) -> OpenGraph {
        let n = ids.len();
        let mut is_input = vec![false; n];
        let mut is_output = vec![false; n];
        for &i in &inputs {
            is_input[i] = true;
        }
        for &o in &outputs {
            is_output[o] = true;
        }
        OpenGraph {
            ids,
            adj,
            inputs,
            outputs,
            is_input,
            is_output,
        }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[VertexId] {
        &self.ids
    }

    pub fn id(&self, i: usize) -> VertexId {
        self.ids[i]
    }

    pub fn index_of(&self, v: VertexId) -> Option<usize> {
        self.ids.binary_search(&v).ok()
    }

    pub fn neighbours(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i].binary_search(&j).is_ok()
    }

    pub fn inputs(&self) -> &[usize] {
        &self.inputs
    }

    pub fn outputs(&self) -> &[usize] {
        &self.outputs
    }

    pub fn is_input(&self, i: usize) -> bool {
        self.is_input[i]
    }

    pub fn is_output(&self, i: usize) -> bool {
        self.is_output[i]
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair() -> (ZxDiagram, VertexId, VertexId) {
        let mut d = ZxDiagram::new();
        let a = d.add_spider(Phase::zero());
        let b = d.add_spider(Phase::zero());
        (d, a, b)
    }

    #[test]
    fn toggle_adds_and_removes() {
        let (mut d, a, b) = pair();
        d.toggle_edge(a, b).unwrap();
        assert_eq!(d.edges(), vec![(a, b, EdgeKind::Hadamard)]);
        d.toggle_edge(b, a).unwrap();
        assert!(d.edges().is_empty());
        assert_eq!(d.num_edges(), 0);
        assert_eq!(d.toggle_edge(a, a), Err(Error::SelfLoop(a)));
    }

    #[test]
    fn identity_counts() {
        let (mut d, a, b) = pair();
        d.push_input(a, false).unwrap();
        d.push_output(b, false).unwrap();
        d.add_edge(a, b, EdgeKind::Hadamard).unwrap();
        assert_eq!(d.count_2q(), 0);
        assert_eq!(
            d.stats(),
            DiagramStats {
                vertices: 2,
                edges: 1,
                internal: 0,
                non_clifford: 0
            }
        );
        let g = d.underlying_open_graph().unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g.inputs(), &[0]);
        assert_eq!(g.outputs(), &[1]);
        assert_eq!(g.edges(), vec![(0, 1)]);
    }

    #[test]
    fn empty_open_graph() {
        let g = ZxDiagram::new().underlying_open_graph().unwrap();
        assert!(g.is_empty());
        assert_eq!(g.num_edges(), 0);
    }

    #[test]
    fn smart_edges_resolve_parallel_and_loops() {
        let (mut d, a, b) = pair();
        d.add_edge_smart(a, a, EdgeKind::Hadamard).unwrap();
        assert_eq!(d.phase(a).clifford, Phase::pi());
        d.add_edge_smart(a, a, EdgeKind::Simple).unwrap();
        assert_eq!(d.phase(a).clifford, Phase::pi());
        d.add_edge_smart(a, b, EdgeKind::Hadamard).unwrap();
        d.add_edge_smart(a, b, EdgeKind::Hadamard).unwrap();
        assert_eq!(d.num_edges(), 0);
        d.add_edge_smart(a, b, EdgeKind::Simple).unwrap();
        d.add_edge_smart(a, b, EdgeKind::Hadamard).unwrap();
        assert_eq!(d.edge(a, b), Some(EdgeKind::Simple));
        assert_eq!(d.phase(a).clifford, Phase::zero());
    }

    #[test]
    fn removal_keeps_counts() {
        let mut d = ZxDiagram::new();
        let vs: Vec<_> = (0..4).map(|_| d.add_spider(Phase::zero())).collect();
        for i in 0..4 {
            for j in i + 1..4 {
                d.add_edge(vs[i], vs[j], EdgeKind::Hadamard).unwrap();
            }
        }
        assert_eq!(d.num_edges(), 6);
        d.remove_spider(vs[1]).unwrap();
        assert_eq!(d.num_edges(), 3);
        assert_eq!(d.num_vertices(), 3);
        assert!(!d.contains(vs[1]));
        let fresh = d.add_spider(Phase::zero());
        assert_eq!(fresh, VertexId(4), "ids are never reused");
    }

    #[test]
    fn graph_like_detects_double_boundary() {
        let mut d = ZxDiagram::new();
        let a = d.add_spider(Phase::zero());
        d.push_input(a, false).unwrap();
        d.push_output(a, false).unwrap();
        assert!(!d.is_graph_like());
    }
}

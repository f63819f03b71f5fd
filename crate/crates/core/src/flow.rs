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

//! Causal flow on open graphs.
//!
//! A causal flow is a successor function `f` from non-outputs to
//! non-inputs with `u ~ f(u)`, plus a partial order in which `u` precedes
//! `f(u)` and every other neighbour of `f(u)`. The dipaths `u, f(u), f(f(u)),
//! ...` become the qubit lines of the extracted circuit.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::graph::{OpenGraph, VertexId};

/// A successor function with depth labels. Outputs have depth 0 and
/// `depth(u) > depth(v)` whenever `u` must come before `v`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CausalFlow {
    successor: BTreeMap<VertexId, VertexId>,
    depth: BTreeMap<VertexId, usize>,
}

impl CausalFlow {
    pub fn successor(&self, v: VertexId) -> Option<VertexId> {
        self.successor.get(&v).copied()
    }

    pub fn depth(&self, v: VertexId) -> Option<usize> {
        self.depth.get(&v).copied()
    }

    pub fn successors(&self) -> &BTreeMap<VertexId, VertexId> {
        &self.successor
    }

    pub fn depths(&self) -> &BTreeMap<VertexId, usize> {
        &self.depth
    }

    /// Build a flow from a successor map, deriving depths as longest paths
    /// in the influencing digraph. `None` if that digraph has a cycle.
    pub fn from_successor(
        g: &OpenGraph,
        successor: BTreeMap<VertexId, VertexId>,
    ) -> Option<CausalFlow> {
        let succ = dense_successor(g, &successor)?;
        let depth = depth_labels(g, &succ)?;
        let depth = (0..g.len()).map(|i| (g.id(i), depth[i])).collect();
        Some(CausalFlow { successor, depth })
    }

    /// Whether every influencing arc `u -> v` has `depth(u) > depth(v)`.
    pub fn depths_consistent(&self, g: &OpenGraph) -> bool {
        let Some(succ) = dense_successor(g, &self.successor) else {
            return false;
        };
        let d = |i: usize| self.depth.get(&g.id(i)).copied();
        for (u, v) in influencing_arcs(g, &succ) {
            match (d(u), d(v)) {
                (Some(a), Some(b)) if a > b => {}
                _ => return false,
            }
        }
        true
    }

    /// For each input position, the output position its dipath ends at.
    pub fn path_permutation(&self, g: &OpenGraph) -> Option<Vec<usize>> {
        let mut out_pos = HashMap::new();
        for (j, &o) in g.outputs().iter().enumerate() {
            out_pos.insert(g.id(o), j);
        }
        let mut perm = Vec::with_capacity(g.inputs().len());
        for &i in g.inputs() {
            let mut v = g.id(i);
            let mut steps = 0;
            while !out_pos.contains_key(&v) {
                v = self.successor(v)?;
                steps += 1;
                if steps > g.len() {
                    return None;
                }
            }
            perm.push(out_pos[&v]);
        }
        Some(perm)
    }
}

fn dense_successor(
    g: &OpenGraph,
    successor: &BTreeMap<VertexId, VertexId>,
) -> Option<Vec<Option<usize>>> {
    let mut succ = vec![None; g.len()];
    for (&u, &v) in successor {
        succ[g.index_of(u)?] = Some(g.index_of(v)?);
    }
    Some(succ)
}

/// Arcs `u -> f(u)` and `u -> w` for `w ∈ N(f(u)) \ {u}`.
fn influencing_arcs(g: &OpenGraph, succ: &[Option<usize>]) -> Vec<(usize, usize)> {
    let mut arcs = Vec::new();
    for (u, s) in succ.iter().enumerate() {
        if let Some(fu) = *s {
            if fu != u {
                arcs.push((u, fu));
            }
            arcs.extend(
                g.neighbours(fu)
                    .iter()
                    .filter(|&&w| w != u)
                    .map(|&w| (u, w)),
            );
        }
    }
    arcs
}

/// Longest-path depths over the influencing digraph; `None` if cyclic.
fn depth_labels(g: &OpenGraph, succ: &[Option<usize>]) -> Option<Vec<usize>> {
    let n = g.len();
    let arcs = influencing_arcs(g, succ);
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut indeg = vec![0usize; n];
    for &(u, v) in &arcs {
        out[u].push(v);
        indeg[v] += 1;
    }
    let order = topological_order(&out, &mut indeg)?;
    let mut depth = vec![0usize; n];
    for &u in order.iter().rev() {
        depth[u] = out[u].iter().map(|&v| depth[v] + 1).max().unwrap_or(0);
    }
    Some(depth)
}

fn topological_order(out: &[Vec<usize>], indeg: &mut [usize]) -> Option<Vec<usize>> {
    let mut stack: Vec<usize> = (0..out.len()).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(out.len());
    while let Some(u) = stack.pop() {
        order.push(u);
        for &v in &out[u] {
            indeg[v] -= 1;
            if indeg[v] == 0 {
                stack.push(v);
            }
        }
    }
    (order.len() == out.len()).then_some(order)
}

/// The influencing digraph of a successor function.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct InfluencingDigraph {
    pub vertices: Vec<VertexId>,
    pub arcs: BTreeSet<(VertexId, VertexId)>,
}

impl InfluencingDigraph {
    pub fn is_acyclic(&self) -> bool {
        let index: HashMap<VertexId, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i))
            .collect();
        let mut out = vec![Vec::new(); self.vertices.len()];
        let mut indeg = vec![0; self.vertices.len()];
        for (u, v) in &self.arcs {
            let (Some(&a), Some(&b)) = (index.get(u), index.get(v)) else {
                return false;
            };
            out[a].push(b);
            indeg[b] += 1;
        }
        topological_order(&out, &mut indeg).is_some()
    }
}

pub fn influencing_digraph(g: &OpenGraph, f: &CausalFlow) -> InfluencingDigraph {
    let vertices = g.ids().to_vec();
    let arcs = match dense_successor(g, &f.successor) {
        Some(succ) => influencing_arcs(g, &succ)
            .into_iter()
            .map(|(u, v)| (g.id(u), g.id(v)))
            .collect(),
        None => BTreeSet::new(),
    };
    InfluencingDigraph { vertices, arcs }
}

/// Dense Mhalla–Perdrix search. Returns successors and depth labels.
pub(crate) fn find_cflow_dense(g: &OpenGraph) -> Option<(Vec<Option<usize>>, Vec<usize>)> {
    let n = g.len();
    let mut processed = vec![false; n];
    let mut count = vec![0usize; n];
    let mut sum = vec![0usize; n];
    for v in 0..n {
        count[v] = g.neighbours(v).len();
        sum[v] = g.neighbours(v).iter().sum();
    }
    let mut succ = vec![None; n];
    let mut depth = vec![0usize; n];
    let mut is_corrector = vec![false; n];
    let mut done = 0;
    for &o in g.outputs() {
        if !processed[o] {
            processed[o] = true;
            done += 1;
        }
    }
    for &o in g.outputs() {
        for &w in g.neighbours(o) {
            count[w] -= 1;
            sum[w] -= o;
        }
    }
    let mut ready = Vec::new();
    for &o in g.outputs() {
        if !g.is_input(o) && !is_corrector[o] {
            is_corrector[o] = true;
            if count[o] == 1 {
                ready.push(o);
            }
        }
    }
    let mut layer = 1;
    while !ready.is_empty() {
        ready.sort_unstable();
        ready.dedup();
        let mut newly = Vec::new();
        for &v in &ready {
            if count[v] != 1 || !is_corrector[v] {
                continue;
            }
            let u = sum[v];
            if processed[u] || succ[u].is_some() {
                continue;
            }
            succ[u] = Some(v);
            depth[u] = layer;
            is_corrector[v] = false;
            newly.push(u);
        }
        let mut next = Vec::new();
        for &u in &newly {
            processed[u] = true;
            done += 1;
        }
        for &u in &newly {
            for &w in g.neighbours(u) {
                count[w] -= 1;
                sum[w] -= u;
                if is_corrector[w] && count[w] == 1 {
                    next.push(w);
                }
            }
        }
        for &u in &newly {
            if !g.is_input(u) {
                is_corrector[u] = true;
                if count[u] == 1 {
                    next.push(u);
                }
            }
        }
        ready = next;
        layer += 1;
    }
    (done == n).then_some((succ, depth))
}

/// Find a causal flow, or `None` if the open graph has none.
///
/// Runs in `O(|V| + |E|)`; depth labels are the layer at which each vertex
/// was resolved, counting back from the outputs.
pub fn find_cflow(g: &OpenGraph) -> Result<Option<CausalFlow>> {
    if g.inputs().len() != g.outputs().len() {
        return Err(Error::Unsupported(format!(
            "causal flow needs |I| = |O|, found {} inputs and {} outputs",
            g.inputs().len(),
            g.outputs().len()
        )));
    }
    Ok(find_cflow_dense(g).map(|(succ, depth)| {
        let successor = succ
            .iter()
            .enumerate()
            .filter_map(|(u, s)| s.map(|v| (g.id(u), g.id(v))))
            .collect();
        let depth = depth
            .iter()
            .enumerate()
            .map(|(u, &d)| (g.id(u), d))
            .collect();
        CausalFlow { successor, depth }
    }))
}

/// Whether `f` is a causal flow of `g`: defined exactly on the non-outputs,
/// mapping each vertex to a distinct non-input neighbour, with an acyclic
/// influencing digraph.
pub fn verify_cflow(g: &OpenGraph, f: &CausalFlow) -> bool {
    verify_successor(g, &f.successor)
}

pub(crate) fn verify_successor(g: &OpenGraph, successor: &BTreeMap<VertexId, VertexId>) -> bool {
    if g.inputs().len() != g.outputs().len() {
        return false;
    }
    let Some(succ) = dense_successor(g, successor) else {
        return false;
    };
    let mut used = vec![false; g.len()];
    for (u, s) in succ.iter().enumerate() {
        match (*s, g.is_output(u)) {
            (None, true) => {}
            (Some(v), false) => {
                if g.is_input(v) || !g.adjacent(u, v) || used[v] {
                    return false;
                }
                used[v] = true;
            }
            _ => return false,
        }
    }
    depth_labels(g, &succ).is_some()
}

/// `m <= k·n − k(k+1)/2`: the largest edge count of an `n`-vertex open
/// graph with `k` inputs that can still carry a causal flow.
pub fn edge_bound_ok(n: u64, k: u64, m: u64) -> bool {
    let n = i128::from(n);
    let k = i128::from(k);
    i128::from(m) <= k * n - k * (k + 1) / 2
}

/// Outcome of [`check_local_preservation`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LocalVerdict {
    /// The rewritten graph has the given flow.
    Preserved(CausalFlow),
    /// The local conditions do not decide; recompute the flow globally.
    Indeterminate,
}

/// Decide from local information whether a rewrite `g -> g2` keeps a causal
/// flow. `changed` is the set of vertices of `g2` whose neighbourhood was
/// altered or which are new. A `Preserved` verdict is always correct; an
/// `Indeterminate` one says nothing.
pub fn check_local_preservation(
    g: &OpenGraph,
    g2: &OpenGraph,
    f: &CausalFlow,
    changed: &BTreeSet<VertexId>,
) -> LocalVerdict {
    local_preservation(g, g2, f, changed)
        .map_or(LocalVerdict::Indeterminate, LocalVerdict::Preserved)
}

fn local_preservation(
    g: &OpenGraph,
    g2: &OpenGraph,
    f: &CausalFlow,
    changed: &BTreeSet<VertexId>,
) -> Option<CausalFlow> {
    if g2.inputs().len() != g2.outputs().len() {
        return None;
    }
    let n2 = g2.len();
    let mut in_s = vec![false; n2];
    for &v in changed {
        in_s[g2.index_of(v)?] = true;
    }
    let s_list: Vec<usize> = (0..n2).filter(|&i| in_s[i]).collect();
    let old_succ = |v: VertexId| -> Option<usize> { f.successor(v).and_then(|w| g2.index_of(w)) };

    // Open subgraph on S: inputs are entered from outside, outputs leave it.
    let mut entered = vec![false; n2];
    for u in (0..n2).filter(|&u| !in_s[u]) {
        if let Some(v) = old_succ(g2.id(u)) {
            entered[v] = true;
        }
    }
    let mut sub_index = vec![usize::MAX; n2];
    for (k, &v) in s_list.iter().enumerate() {
        sub_index[v] = k;
    }
    let mut sub_edges = Vec::new();
    for &v in &s_list {
        for &w in g2.neighbours(v) {
            if in_s[w] && v < w {
                sub_edges.push((sub_index[v], sub_index[w]));
            }
        }
    }
    let sub_inputs: Vec<usize> = s_list
        .iter()
        .filter(|&&v| g2.is_input(v) || entered[v])
        .map(|&v| sub_index[v])
        .collect();
    let leaves = |v: usize| g2.is_output(v) || old_succ(g2.id(v)).is_some_and(|w| !in_s[w]);
    let sub_outputs: Vec<usize> = s_list
        .iter()
        .filter(|&&v| leaves(v))
        .map(|&v| sub_index[v])
        .collect();
    if sub_inputs.len() != sub_outputs.len() {
        return None;
    }
    let sub = OpenGraph::new(s_list.len(), &sub_edges, sub_inputs, sub_outputs);
    let (sub_succ, _) = find_cflow_dense(&sub)?;

    // Stitch the local flow into the old one.
    let mut succ: Vec<Option<usize>> = vec![None; n2];
    for v in 0..n2 {
        if g2.is_output(v) {
            continue;
        }
        if in_s[v] && !leaves(v) {
            succ[v] = Some(s_list[sub_succ[sub_index[v]]?]);
        } else {
            succ[v] = Some(old_succ(g2.id(v))?);
        }
    }

    // Influencing subdigraph on the closed neighbourhood of S.
    let mut in_nb = in_s.clone();
    for &v in &s_list {
        for &w in g2.neighbours(v) {
            in_nb[w] = true;
        }
    }
    let nb_list: Vec<usize> = (0..n2).filter(|&i| in_nb[i]).collect();
    let mut local_out: Vec<Vec<usize>> = vec![Vec::new(); n2];
    for &u in &nb_list {
        if let Some(fu) = succ[u] {
            if in_nb[fu] && fu != u {
                local_out[u].push(fu);
            }
            for &w in g2.neighbours(fu) {
                if w != u && in_nb[w] {
                    local_out[u].push(w);
                }
            }
        }
    }
    if has_cycle_within(&local_out, &nb_list) {
        return None;
    }

    // Pre-order relations on N(S) \ S, new (local) and old (global).
    let boundary: Vec<usize> = nb_list.iter().copied().filter(|&v| !in_s[v]).collect();
    let mut combined: Vec<Vec<usize>> = vec![Vec::new(); n2];
    for &a in &boundary {
        let reach = reachable(&local_out, a);
        combined[a].extend(boundary.iter().copied().filter(|&b| b != a && reach[b]));
    }
    let old_succ_dense = dense_successor(g, &f.successor)?;
    let mut old_out: Vec<Vec<usize>> = vec![Vec::new(); g.len()];
    for (u, v) in influencing_arcs(g, &old_succ_dense) {
        old_out[u].push(v);
    }
    for &a in &boundary {
        let Some(ga) = g.index_of(g2.id(a)) else {
            continue;
        };
        let reach = reachable(&old_out, ga);
        for &b in &boundary {
            if b != a && g.index_of(g2.id(b)).is_some_and(|gb| reach[gb]) {
                combined[a].push(b);
            }
        }
    }
    if has_cycle_within(&combined, &boundary) {
        return None;
    }

    let successor: BTreeMap<VertexId, VertexId> = succ
        .iter()
        .enumerate()
        .filter_map(|(u, s)| s.map(|v| (g2.id(u), g2.id(v))))
        .collect();
    let flow = CausalFlow::from_successor(g2, successor);
    debug_assert!(
        flow.is_some(),
        "local preservation accepted a graph without flow"
    );
    flow
}

fn reachable(out: &[Vec<usize>], from: usize) -> Vec<bool> {
    let mut seen = vec![false; out.len()];
    let mut stack = vec![from];
    while let Some(u) = stack.pop() {
        for &v in &out[u] {
            if !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen
}

fn has_cycle_within(out: &[Vec<usize>], vertices: &[usize]) -> bool {
    let mut index = HashMap::new();
    for (i, &v) in vertices.iter().enumerate() {
        index.insert(v, i);
    }
    let mut local = vec![Vec::new(); vertices.len()];
    let mut indeg = vec![0; vertices.len()];
    for (i, &v) in vertices.iter().enumerate() {
        for w in &out[v] {
            if let Some(&j) = index.get(w) {
                local[i].push(j);
                indeg[j] += 1;
            }
        }
    }
    topological_order(&local, &mut indeg).is_none()
}

/// Measurement plane of a non-output vertex in a labelled open graph.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Plane {
    XY,
    YZ,
    XZ,
}

/// An open graph whose non-outputs carry measurement planes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LabelledOpenGraph {
    pub graph: OpenGraph,
    /// Indexed like `graph`; ignored for outputs.
    pub planes: Vec<Plane>,
}

/// Causal flow for a labelled open graph whose gadget vertices sit in the YZ
/// plane. Each YZ vertex is its own successor and must precede all its
/// neighbours; the XY part is solved with [`find_cflow`].
pub fn cflow_with_gadgets(lg: &LabelledOpenGraph) -> Result<Option<CausalFlow>> {
    let g = &lg.graph;
    if lg.planes.len() != g.len() {
        return Err(Error::Invariant(
            "plane labels do not match the graph".into(),
        ));
    }
    let yz: Vec<bool> = (0..g.len())
        .map(|v| !g.is_output(v) && lg.planes[v] == Plane::YZ)
        .collect();
    if let Some(v) = (0..g.len()).find(|&v| !g.is_output(v) && lg.planes[v] == Plane::XZ) {
        return Err(Error::Unsupported(format!(
            "vertex {} is measured in the XZ plane",
            g.id(v)
        )));
    }
    if yz.iter().enumerate().any(|(v, &y)| y && g.is_input(v)) {
        return Ok(None);
    }
    let keep: Vec<usize> = (0..g.len()).filter(|&v| !yz[v]).collect();
    let mut idx = vec![usize::MAX; g.len()];
    for (k, &v) in keep.iter().enumerate() {
        idx[v] = k;
    }
    let edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(a, b)| !yz[a] && !yz[b])
        .map(|(a, b)| (idx[a], idx[b]))
        .collect();
    let rest = OpenGraph::new(
        keep.len(),
        &edges,
        g.inputs().iter().map(|&v| idx[v]).collect(),
        g.outputs().iter().map(|&v| idx[v]).collect(),
    );
    if rest.inputs().len() != rest.outputs().len() {
        return Err(Error::Unsupported("causal flow needs |I| = |O|".into()));
    }
    let Some((rest_succ, _)) = find_cflow_dense(&rest) else {
        return Ok(None);
    };

    let mut succ: Vec<Option<usize>> = vec![None; g.len()];
    for (k, &v) in keep.iter().enumerate() {
        succ[v] = rest_succ[k].map(|s| keep[s]);
    }
    for v in 0..g.len() {
        if yz[v] {
            succ[v] = Some(v);
        }
    }
    // Order: u -> f(u) and u -> N(f(u)) \ {u}, which for a YZ vertex is
    // "precede every neighbour".
    let Some(depth) = depth_labels(g, &succ) else {
        return Ok(None);
    };
    let successor = succ
        .iter()
        .enumerate()
        .filter_map(|(u, s)| s.map(|v| (g.id(u), g.id(v))))
        .collect();
    let depth = depth
        .iter()
        .enumerate()
        .map(|(u, &d)| (g.id(u), d))
        .collect();
    Ok(Some(CausalFlow { successor, depth }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn identity(n: usize) -> OpenGraph {
        let edges: Vec<_> = (0..n).map(|i| (i, n + i)).collect();
        OpenGraph::new(2 * n, &edges, (0..n).collect(), (n..2 * n).collect())
    }

    #[test]
    fn identity_flow() {
        let g = identity(3);
        let f = find_cflow(&g).unwrap().unwrap();
        for i in 0..3 {
            assert_eq!(f.successor(VertexId(i)), Some(VertexId(3 + i)));
            assert_eq!(f.depth(VertexId(i)), Some(1));
            assert_eq!(f.depth(VertexId(3 + i)), Some(0));
        }
        assert!(verify_cflow(&g, &f));
        let arcs: Vec<_> = influencing_digraph(&g, &f).arcs.into_iter().collect();
        assert_eq!(
            arcs,
            (0..3)
                .map(|i| (VertexId(i), VertexId(3 + i)))
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn shared_successor_has_no_flow() {
        // a=0 input, b=1 internal, c=2 output; edges a-c, b-c.
        let g = OpenGraph::new(3, &[(0, 2), (1, 2)], vec![0], vec![2]);
        assert_eq!(find_cflow(&g).unwrap(), None);
    }

    #[test]
    fn unequal_boundaries_are_rejected() {
        let g = OpenGraph::new(2, &[(0, 1)], vec![0], vec![]);
        assert!(find_cflow(&g).is_err());
    }

    #[test]
    fn two_cycle_is_rejected() {
        // Inputs 0,1 -> internal 2,3 -> outputs 4,5, with the cross edges
        // 0-3 and 1-2: 0 must precede 1 (1 ~ f(0)) and vice versa.
        let edges = [(0, 2), (1, 3), (2, 4), (3, 5), (0, 3), (1, 2)];
        let g = OpenGraph::new(6, &edges, vec![0, 1], vec![4, 5]);
        let succ: BTreeMap<_, _> = [(0, 2), (1, 3), (2, 4), (3, 5)]
            .iter()
            .map(|&(a, b)| (VertexId(a), VertexId(b)))
            .collect();
        assert!(!verify_successor(&g, &succ));
        assert_eq!(find_cflow(&g).unwrap(), None);
    }

    #[test]
    fn non_injective_is_rejected() {
        let g = OpenGraph::new(3, &[(0, 2), (1, 2)], vec![0, 1], vec![2, 1]);
        let succ: BTreeMap<_, _> = [(VertexId(0), VertexId(2))].into_iter().collect();
        assert!(verify_successor(&g, &succ));
        let bad: BTreeMap<_, _> = [(VertexId(0), VertexId(2)), (VertexId(1), VertexId(2))]
            .into_iter()
            .collect();
        assert!(!verify_successor(&g, &bad));
    }

    #[test]
    fn cross_arcs_appear() {
        // 0 -> 2 -> 4 and 1 -> 3 -> 5, plus an edge between 2 and 3.
        let g = OpenGraph::new(
            6,
            &[(0, 2), (2, 4), (1, 3), (3, 5), (2, 3)],
            vec![0, 1],
            vec![4, 5],
        );
        let f = find_cflow(&g).unwrap().unwrap();
        let arcs = influencing_digraph(&g, &f).arcs;
        assert!(arcs.contains(&(VertexId(0), VertexId(3))));
        assert!(arcs.contains(&(VertexId(1), VertexId(2))));
        assert!(influencing_digraph(&g, &f).is_acyclic());
        assert!(f.depths_consistent(&g));
    }

    #[test]
    fn empty_graph() {
        let g = OpenGraph::new(0, &[], vec![], vec![]);
        let f = find_cflow(&g).unwrap().unwrap();
        assert!(influencing_digraph(&g, &f).arcs.is_empty());
    }

    #[test]
    fn edge_bound() {
        assert!(edge_bound_ok(4, 2, 5));
        assert!(!edge_bound_ok(3, 1, 3));
        assert!(edge_bound_ok(5, 5, 0));
    }

    #[test]
    fn gadget_extension() {
        // Line 0 - 1 - 2 with a gadget vertex 3 attached to 1.
        let graph = OpenGraph::new(4, &[(0, 1), (1, 2), (1, 3)], vec![0], vec![2]);
        let lg = LabelledOpenGraph {
            graph: graph.clone(),
            planes: vec![Plane::XY, Plane::XY, Plane::XY, Plane::YZ],
        };
        let f = cflow_with_gadgets(&lg).unwrap().unwrap();
        assert_eq!(f.successor(VertexId(3)), Some(VertexId(3)));
        assert_eq!(f.successor(VertexId(0)), Some(VertexId(1)));
        // The gadget precedes its neighbour, and 0 precedes the gadget
        // because it neighbours f(0) = 1.
        assert!(f.depth(VertexId(3)).unwrap() > f.depth(VertexId(1)).unwrap());
        assert!(f.depth(VertexId(0)).unwrap() > f.depth(VertexId(3)).unwrap());
        assert!(find_cflow(&graph).unwrap().is_none());

        let plain = LabelledOpenGraph {
            graph: identity(2),
            planes: vec![Plane::XY; 4],
        };
        assert_eq!(
            cflow_with_gadgets(&plain).unwrap(),
            find_cflow(&identity(2)).unwrap()
        );

        let xz = LabelledOpenGraph {
            graph,
            planes: vec![Plane::XY, Plane::XY, Plane::XY, Plane::XZ],
        };
        assert!(cflow_with_gadgets(&xz).is_err());
    }
}

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

//! Greedy causal-flow preserving optimisation.
//!
//! Every identity fusion, local complementation and pivot, including those
//! preceded by neighbour unfusion of up to `s_max` neighbours, is scored by
//! its exact change in two-qubit count. The best match is applied to a
//! copy of the diagram and kept only if the copy still has a causal flow
//! whose dipaths connect each input to the output of the same qubit.
//! Matches near the rewritten region are then re-enumerated.

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::hash::{Hash, Hasher};

use crate::basic_opt::basic_optimize;
use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::extract::extract_circuit;
use crate::flow::{check_local_preservation, find_cflow, CausalFlow, LocalVerdict};
use crate::graph::{OpenGraph, VertexId, ZxDiagram};
use crate::rewrite::{self, RewriteKind, RewriteMatch, Unfusion};
use crate::teleport::{teleport_reduce, ReduceOrder};

/// Settings of [`optimize`] and [`flow_opt`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OptimizerConfig {
    /// Largest neighbour-unfusion subset tried for local complementation.
    pub s_max_lcomp: usize,
    /// Largest neighbour-unfusion subset tried on each side of a pivot.
    pub s_max_pivot: usize,
    /// Stop after this many accepted rewrites.
    pub max_iterations: Option<usize>,
    /// `None` breaks ties between equally scored matches by vertex id;
    /// `Some(seed)` breaks them pseudo-randomly.
    pub rng_seed: Option<u64>,
    /// Try the local flow-preservation test before a full flow search.
    pub local_flow_check: bool,
    /// Only run phase teleportation; no graph rewriting.
    pub teleport_only: bool,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        OptimizerConfig {
            s_max_lcomp: 2,
            s_max_pivot: 2,
            max_iterations: None,
            rng_seed: None,
            local_flow_check: false,
            teleport_only: false,
        }
    }
}

impl OptimizerConfig {
    pub fn with_s_max(s_max: usize) -> Self {
        OptimizerConfig {
            s_max_lcomp: s_max,
            s_max_pivot: s_max,
            ..Default::default()
        }
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
struct MatchKey {
    neg_score: i64,
    delta_v: i64,
    tie: u64,
    anchors: Vec<VertexId>,
    rank: u8,
    kind: RewriteKind,
}

/// Candidate matches in priority order: best score first, then the larger
/// vertex reduction, then lower vertex ids, then IdFuse, LComp, Pivot.
#[derive(Clone, Debug, Default)]
pub struct MatchList {
    ordered: BTreeMap<MatchKey, RewriteMatch>,
    by_anchor: HashMap<VertexId, BTreeSet<MatchKey>>,
    seed: Option<u64>,
}

fn tie(seed: Option<u64>, kind: &RewriteKind) -> u64 {
    seed.map_or(0, |s| {
        let mut h = DefaultHasher::new();
        s.hash(&mut h);
        kind.hash(&mut h);
        h.finish()
    })
}

impl MatchList {
    fn new(seed: Option<u64>) -> MatchList {
        MatchList {
            seed,
            ..Default::default()
        }
    }

    fn key(&self, m: &RewriteMatch) -> MatchKey {
        MatchKey {
            neg_score: -m.score(),
            delta_v: m.delta_v,
            tie: tie(self.seed, &m.kind),
            anchors: m.kind.anchors(),
            rank: m.kind.rank(),
            kind: m.kind.clone(),
        }
    }

    fn insert(&mut self, m: RewriteMatch) {
        let key = self.key(&m);
        for &a in &key.anchors {
            self.by_anchor.entry(a).or_default().insert(key.clone());
        }
        self.ordered.insert(key, m);
    }

    fn remove_key(&mut self, key: &MatchKey) -> Option<RewriteMatch> {
        let m = self.ordered.remove(key)?;
        for a in &key.anchors {
            if let Some(set) = self.by_anchor.get_mut(a) {
                set.remove(key);
                if set.is_empty() {
                    self.by_anchor.remove(a);
                }
            }
        }
        Some(m)
    }

    /// Remove every match anchored at `v`.
    fn remove_anchor(&mut self, v: VertexId) {
        if let Some(keys) = self.by_anchor.remove(&v) {
            for k in keys {
                self.remove_key(&k);
            }
        }
    }

    /// Remove a match by its rule.
    pub fn remove(&mut self, m: &RewriteMatch) -> bool {
        let key = self.key(m);
        self.remove_key(&key).is_some()
    }

    pub fn len(&self) -> usize {
        self.ordered.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordered.is_empty()
    }

    /// The highest priority match.
    pub fn first(&self) -> Option<&RewriteMatch> {
        self.ordered.values().next()
    }

    pub fn pop_first(&mut self) -> Option<RewriteMatch> {
        let key = self.ordered.keys().next()?.clone();
        self.remove_key(&key)
    }

    /// Matches in priority order.
    pub fn iter(&self) -> impl Iterator<Item = &RewriteMatch> + '_ {
        self.ordered.values()
    }

    pub fn contains(&self, m: &RewriteMatch) -> bool {
        self.ordered.contains_key(&self.key(m))
    }
}

/// Subsets of `items` with sizes in `lo..=hi`, each sorted.
fn subsets(items: &[VertexId], lo: usize, hi: usize) -> Vec<Vec<VertexId>> {
    fn go(
        items: &[VertexId],
        start: usize,
        hi: usize,
        cur: &mut Vec<VertexId>,
        lo: usize,
        out: &mut Vec<Vec<VertexId>>,
    ) {
        if cur.len() >= lo {
            out.push(cur.clone());
        }
        if cur.len() == hi {
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            go(items, i + 1, hi, cur, lo, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, 0, hi, &mut Vec::new(), lo, &mut out);
    out
}

/// Non-empty unfusion subsets of `v` of size at most `s_max`, excluding
/// `partner`. A boundary spider must unfuse its wire.
fn unfusions(d: &ZxDiagram, v: VertexId, partner: Option<VertexId>, s_max: usize) -> Vec<Unfusion> {
    let nb: Vec<VertexId> = d.neighbours(v).filter(|&n| Some(n) != partner).collect();
    if d.is_boundary(v) {
        if s_max == 0 {
            return Vec::new();
        }
        subsets(&nb, 0, s_max - 1)
            .into_iter()
            .map(|s| Unfusion::new(s, true))
            .collect()
    } else {
        subsets(&nb, 1, s_max)
            .into_iter()
            .map(|s| Unfusion::new(s, false))
            .collect()
    }
}

fn push_if_accepted(d: &ZxDiagram, kind: RewriteKind, out: &mut Vec<RewriteMatch>) {
    if let Ok(m) = rewrite::check(d, &kind) {
        if m.accept() {
            out.push(m);
        }
    }
}

/// Identity fusion and local complementation matches anchored at `v`.
fn vertex_matches(d: &ZxDiagram, v: VertexId, cfg: &OptimizerConfig, out: &mut Vec<RewriteMatch>) {
    push_if_accepted(d, RewriteKind::IdFuse { v }, out);
    if d.is_internal(v) && d.phase(v).is_proper_clifford() {
        push_if_accepted(d, RewriteKind::LComp { v, unfuse: None }, out);
    }
    if d.phase(v).as_constant().is_none() {
        return;
    }
    for s in unfusions(d, v, None, cfg.s_max_lcomp) {
        push_if_accepted(d, RewriteKind::LComp { v, unfuse: Some(s) }, out);
    }
}

fn pivot_options(
    d: &ZxDiagram,
    u: VertexId,
    partner: VertexId,
    s_max: usize,
) -> Vec<Option<Unfusion>> {
    let mut opts = Vec::new();
    if d.phase(u).as_constant().is_none() {
        return opts;
    }
    if d.is_internal(u) && d.phase(u).is_pauli() {
        opts.push(None);
    }
    opts.extend(unfusions(d, u, Some(partner), s_max).into_iter().map(Some));
    opts
}

/// Pivot matches on the edge `u - v`, `u < v`.
fn edge_matches(
    d: &ZxDiagram,
    u: VertexId,
    v: VertexId,
    cfg: &OptimizerConfig,
    out: &mut Vec<RewriteMatch>,
) {
    let ou = pivot_options(d, u, v, cfg.s_max_pivot);
    if ou.is_empty() {
        return;
    }
    let ov = pivot_options(d, v, u, cfg.s_max_pivot);
    for a in &ou {
        for b in &ov {
            let kind = RewriteKind::Pivot {
                u,
                v,
                unfuse_u: a.clone(),
                unfuse_v: b.clone(),
            };
            push_if_accepted(d, kind, out);
        }
    }
}

/// All acceptable IdFuse, LComp and Pivot matches of `d`.
pub fn find_matches(d: &ZxDiagram, cfg: &OptimizerConfig) -> MatchList {
    let mut list = MatchList::new(cfg.rng_seed);
    let mut found = Vec::new();
    for v in d.vertices() {
        vertex_matches(d, v, cfg, &mut found);
    }
    for (u, v, _) in d.edges() {
        edge_matches(d, u, v, cfg, &mut found);
    }
    for m in found {
        list.insert(m);
    }
    list
}

/// Vertices present in only one of the diagrams, or whose phase, boundary
/// wires or incident edges differ.
pub fn changed_vertices(d: &ZxDiagram, d2: &ZxDiagram) -> BTreeSet<VertexId> {
    let bound = d.id_bound().max(d2.id_bound());
    (0..bound)
        .map(|i| VertexId(i as u32))
        .filter(|&v| match (d.spider(v), d2.spider(v)) {
            (None, None) => false,
            (Some(a), Some(b)) => a != b || d.incident(v) != d2.incident(v),
            _ => true,
        })
        .collect()
}

/// Bring `list`, valid for `d`, up to date with `d2` after `applied`.
/// Matches anchored within distance one of a changed vertex are dropped
/// and enumerated afresh.
pub fn update_matches(
    list: &mut MatchList,
    applied: &RewriteMatch,
    d: &ZxDiagram,
    d2: &ZxDiagram,
    cfg: &OptimizerConfig,
) -> BTreeSet<VertexId> {
    let changed = changed_vertices(d, d2);
    let mut affected: BTreeSet<VertexId> = changed.clone();
    affected.extend(applied.kind.anchors());
    for &v in &changed {
        if d.contains(v) {
            affected.extend(d.neighbours(v));
        }
        if d2.contains(v) {
            affected.extend(d2.neighbours(v));
        }
    }
    for &v in &affected {
        list.remove_anchor(v);
    }
    let mut found = Vec::new();
    let mut edges = BTreeSet::new();
    for &v in affected.iter().filter(|&&v| d2.contains(v)) {
        vertex_matches(d2, v, cfg, &mut found);
        for n in d2.neighbours(v) {
            edges.insert((v.min(n), v.max(n)));
        }
    }
    for (u, v) in edges {
        edge_matches(d2, u, v, cfg, &mut found);
    }
    for m in found {
        list.insert(m);
    }
    changed
}

/// Hooks into the optimisation loop.
pub trait Observer {
    /// `m` was applied; `d` is the new diagram and `f` its flow.
    fn accepted(&mut self, _m: &RewriteMatch, _d: &ZxDiagram, _f: &CausalFlow) {}
    /// `m` was discarded because the rewritten diagram lost its flow.
    fn rejected(&mut self, _m: &RewriteMatch) {}
}

impl Observer for () {}

/// Counters of one optimisation run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OptimizeStats {
    pub accepted: usize,
    pub rejected: usize,
    pub initial_2q: i64,
    pub final_2q: i64,
}

fn identity_paths(g: &OpenGraph, f: &CausalFlow) -> bool {
    f.path_permutation(g)
        .is_some_and(|p| p.iter().enumerate().all(|(i, &j)| i == j))
}

fn flow_of(d: &ZxDiagram) -> Result<Option<(OpenGraph, CausalFlow)>> {
    let g = d.underlying_open_graph()?;
    Ok(find_cflow(&g)?
        .filter(|f| identity_paths(&g, f))
        .map(|f| (g, f)))
}

/// Run the greedy loop on a diagram that has a causal flow.
pub fn optimize(
    d: ZxDiagram,
    cfg: &OptimizerConfig,
    obs: &mut impl Observer,
) -> Result<(ZxDiagram, CausalFlow, OptimizeStats)> {
    let Some((mut g, mut flow)) = flow_of(&d)? else {
        return Err(Error::InvalidArgument(
            "diagram has no causal flow along its qubit lines".into(),
        ));
    };
    let mut d = d;
    let mut stats = OptimizeStats {
        initial_2q: d.count_2q(),
        ..Default::default()
    };
    let mut list = find_matches(&d, cfg);
    while let Some(m) = list.pop_first() {
        if cfg.max_iterations.is_some_and(|cap| stats.accepted >= cap) {
            break;
        }
        let mut d2 = d.clone();
        let applied = rewrite::apply(&mut d2, &m.kind)?;
        debug_assert_eq!(applied, m);
        debug_assert_eq!(d2.num_edges() as i64 - d.num_edges() as i64, m.delta_e);
        debug_assert_eq!(
            d2.num_vertices() as i64 - d.num_vertices() as i64,
            m.delta_v
        );
        let g2 = d2.underlying_open_graph()?;
        let mut f2 = None;
        if cfg.local_flow_check {
            let changed: BTreeSet<VertexId> = changed_vertices(&d, &d2)
                .into_iter()
                .filter(|&v| d2.contains(v))
                .collect();
            if let LocalVerdict::Preserved(f) = check_local_preservation(&g, &g2, &flow, &changed) {
                f2 = Some(f);
            }
        }
        if f2.is_none() {
            f2 = find_cflow(&g2)?;
        }
        match f2.filter(|f| identity_paths(&g2, f)) {
            Some(f) => {
                debug_assert!(crate::flow::verify_cflow(&g2, &f));
                obs.accepted(&m, &d2, &f);
                stats.accepted += 1;
                update_matches(&mut list, &m, &d, &d2, cfg);
                d = d2;
                g = g2;
                flow = f;
            }
            None => {
                obs.rejected(&m);
                stats.rejected += 1;
            }
        }
    }
    stats.final_2q = d.count_2q();
    Ok((d, flow, stats))
}

/// Everything produced by [`flow_opt_with`].
#[derive(Clone, Debug)]
pub struct FlowOptResult {
    pub circuit: Circuit,
    /// The circuit read off the final diagram, before gate cancellation.
    pub extracted: Circuit,
    pub diagram: ZxDiagram,
    pub stats: OptimizeStats,
}

/// The full pipeline with an observer on the rewriting loop.
pub fn flow_opt_with(
    c: &Circuit,
    cfg: &OptimizerConfig,
    obs: &mut impl Observer,
) -> Result<FlowOptResult> {
    let d = teleport_reduce(c, ReduceOrder::Canonical)?;
    let (d, flow, stats) = if cfg.teleport_only {
        let Some((_, f)) = flow_of(&d)? else {
            return Err(Error::Invariant(
                "circuit diagram has no causal flow".into(),
            ));
        };
        let n = d.count_2q();
        (
            d,
            f,
            OptimizeStats {
                initial_2q: n,
                final_2q: n,
                ..Default::default()
            },
        )
    } else {
        optimize(d, cfg, obs)?
    };
    let extracted = extract_circuit(&d, &flow)?;
    let circuit = basic_optimize(&extracted);
    Ok(FlowOptResult {
        circuit,
        extracted,
        diagram: d,
        stats,
    })
}

/// Optimise a circuit: phase teleportation, flow-preserving rewriting,
/// extraction along the flow and gate cancellation.
pub fn flow_opt(c: &Circuit, cfg: &OptimizerConfig) -> Result<Circuit> {
    flow_opt_with(c, cfg, &mut ()).map(|r| r.circuit)
}

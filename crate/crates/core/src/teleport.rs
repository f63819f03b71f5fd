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

//! Phase teleportation.
//!
//! Every non-Clifford spider of the circuit diagram is given a variable.
//! A scratch copy of the diagram is then simplified to reduced gadget form
//! while a [`PhaseTable`] records which variables were fused together and
//! with which sign. Each fused group can keep its combined phase on a
//! single member and zero the others, which lowers the T-count without
//! touching the structure of the original diagram.

use std::collections::{BTreeMap, HashMap, VecDeque};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::circuit::Circuit;
use crate::convert::graph_like_from_circuit;
use crate::error::{Error, Result};
use crate::graph::{VertexId, ZxDiagram};
use crate::phase::{Phase, PhaseExpr, VarId, VarRef};
use crate::rewrite::{self, gadget_base, PhaseTracker, RewriteKind, Unfusion};

/// Index of a fusion group in a [`PhaseTable`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct GroupId(pub usize);

/// Variables whose phases have been fused, each with its multiplier.
#[derive(Clone, Debug)]
pub struct Group {
    members: Vec<VarRef>,
    live: bool,
    resolved: bool,
    host: Option<VertexId>,
}

impl Group {
    /// Members sorted by variable id.
    pub fn members(&self) -> &[VarRef] {
        &self.members
    }

    /// The scratch spider currently carrying the group's phase, if any.
    pub fn host(&self) -> Option<VertexId> {
        self.host
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    fn multiplier(&self, id: VarId) -> Option<VarRef> {
        self.members.iter().copied().find(|m| m.id == id)
    }
}

/// Original variable values and the fusion groups found between them.
#[derive(Clone, Debug, Default)]
pub struct PhaseTable {
    values: BTreeMap<VarId, Phase>,
    origin: BTreeMap<VarId, VertexId>,
    groups: Vec<Group>,
    group_of: BTreeMap<VarId, GroupId>,
    resolved: BTreeMap<VarId, Phase>,
}

fn signed(p: Phase, r: VarRef) -> Phase {
    if r.negated {
        -p
    } else {
        p
    }
}

impl PhaseTable {
    pub fn new() -> PhaseTable {
        PhaseTable::default()
    }

    /// Register the phase of spider `v` as a new variable in its own group.
    pub fn insert(&mut self, v: VertexId, value: Phase) -> Result<VarId> {
        let id = VarId(v.0);
        if self.values.contains_key(&id) {
            return Err(Error::InvalidArgument(format!(
                "{v} already carries a variable"
            )));
        }
        self.values.insert(id, value);
        self.origin.insert(id, v);
        self.group_of.insert(id, GroupId(self.groups.len()));
        self.groups.push(Group {
            members: vec![VarRef { id, negated: false }],
            live: true,
            resolved: false,
            host: Some(v),
        });
        Ok(id)
    }

    pub fn num_vars(&self) -> usize {
        self.values.len()
    }

    pub fn value(&self, id: VarId) -> Option<Phase> {
        self.values.get(&id).copied()
    }

    /// The phase assigned by phase fixing, once the group is resolved.
    pub fn resolved(&self, id: VarId) -> Option<Phase> {
        self.resolved.get(&id).copied()
    }

    /// The spider the variable was taken from.
    pub fn origin(&self, id: VarId) -> Option<VertexId> {
        self.origin.get(&id).copied()
    }

    pub fn group_of(&self, id: VarId) -> Option<GroupId> {
        self.group_of.get(&id).copied()
    }

    pub fn group(&self, g: GroupId) -> Option<&Group> {
        self.groups.get(g.0).filter(|gr| gr.live)
    }

    /// Live groups in creation order.
    pub fn groups(&self) -> impl Iterator<Item = (GroupId, &Group)> + '_ {
        self.groups
            .iter()
            .enumerate()
            .filter(|(_, g)| g.live)
            .map(|(i, g)| (GroupId(i), g))
    }

    fn live(&self, g: GroupId) -> Result<&Group> {
        self.group(g)
            .ok_or_else(|| Error::Invariant(format!("group {} is not live", g.0)))
    }

    /// Merge two disjoint live groups. No phase is resolved. The merged
    /// group keeps the host of `a`.
    pub fn fuse_variables(&mut self, a: GroupId, b: GroupId) -> Result<GroupId> {
        if a == b {
            return Err(Error::Invariant(format!("group {} fused with itself", a.0)));
        }
        let host = self.live(a)?.host;
        self.live(b)?;
        let (keep, drop) = if self.groups[a.0].len() >= self.groups[b.0].len() {
            (a, b)
        } else {
            (b, a)
        };
        let moved = std::mem::take(&mut self.groups[drop.0].members);
        self.groups[drop.0].live = false;
        for m in &moved {
            self.group_of.insert(m.id, keep);
        }
        let g = &mut self.groups[keep.0];
        g.members.extend(moved);
        g.members.sort();
        g.host = host;
        Ok(keep)
    }

    /// Flip every multiplier of the group, as a π-copy through its host does.
    pub fn negate_group(&mut self, g: GroupId) -> Result<()> {
        self.live(g)?;
        for m in &mut self.groups[g.0].members {
            m.negated = !m.negated;
        }
        Ok(())
    }

    /// `Σ m_j α_j` over the group.
    pub fn combined(&self, g: GroupId) -> Result<Phase> {
        Ok(self
            .live(g)?
            .members
            .iter()
            .fold(Phase::zero(), |acc, &m| acc + signed(self.values[&m.id], m)))
    }

    /// The member that keeps the combined phase: the variable taken from
    /// the host spider if that spider still carries the group, otherwise
    /// the member with the lowest id.
    pub fn survivor(&self, g: GroupId) -> Result<VarId> {
        let group = self.live(g)?;
        let hosted = group
            .host
            .and_then(|h| group.members.iter().find(|m| self.origin[&m.id] == h));
        Ok(hosted.unwrap_or(&group.members[0]).id)
    }

    /// Set `kappa` to `beta`. The survivor takes
    /// `m_σ((Σ m_j α_j) - m_κ β)` and every other member becomes 0.
    pub fn fix_phase(&mut self, g: GroupId, kappa: VarId, beta: Phase) -> Result<()> {
        let group = self.live(g)?;
        let mk = group.multiplier(kappa).ok_or_else(|| {
            Error::InvalidArgument(format!("variable {} is not in group {}", kappa.0, g.0))
        })?;
        let preferred = self.survivor(g)?;
        let sigma = if preferred != kappa {
            Some(preferred)
        } else {
            group.members.iter().map(|m| m.id).find(|&id| id != kappa)
        };
        let rest = self.combined(g)? - signed(beta, mk);
        let Some(sigma) = sigma else {
            if !rest.is_zero() {
                return Err(Error::InvalidArgument(format!(
                    "variable {} is alone in its group and cannot be fixed to {beta}",
                    kappa.0
                )));
            }
            self.resolved.insert(kappa, beta);
            self.groups[g.0].resolved = true;
            return Ok(());
        };
        let ms = self.groups[g.0].multiplier(sigma).expect("member");
        for m in self.groups[g.0].members.clone() {
            let p = if m.id == kappa {
                beta
            } else if m.id == sigma {
                signed(rest, ms)
            } else {
                Phase::zero()
            };
            self.resolved.insert(m.id, p);
        }
        self.groups[g.0].resolved = true;
        Ok(())
    }

    /// Resolve a group with the default policy: the survivor carries the
    /// whole combined phase.
    pub fn resolve_group(&mut self, g: GroupId) -> Result<()> {
        let sigma = self.survivor(g)?;
        let ms = self.groups[g.0].multiplier(sigma).expect("member");
        let total = signed(self.combined(g)?, ms);
        for m in self.groups[g.0].members.clone() {
            let p = if m.id == sigma { total } else { Phase::zero() };
            self.resolved.insert(m.id, p);
        }
        self.groups[g.0].resolved = true;
        Ok(())
    }
}

/// Replace every variable of `d` by its resolved value, resolving any
/// group that has not been fixed yet.
pub fn resolve_all(table: &mut PhaseTable, d: &ZxDiagram) -> Result<ZxDiagram> {
    let pending: Vec<GroupId> = table
        .groups()
        .filter(|(_, g)| !g.resolved)
        .map(|(i, _)| i)
        .collect();
    for g in pending {
        table.resolve_group(g)?;
    }
    let mut out = d.clone();
    for v in d.vertices() {
        let p = d.phase(v);
        if let Some(r) = p.var {
            let value = table.resolved(r.id).ok_or(Error::UnresolvedVariable(v))?;
            out.set_phase(v, p.clifford + signed(value, r));
        }
    }
    Ok(out)
}

/// The order in which [`full_reduce`] tries its rewrites.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum ReduceOrder {
    /// Fixed rule priority, vertices in id order.
    #[default]
    Canonical,
    /// Rules and candidates shuffled by a seeded generator.
    Shuffled(u64),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Rule {
    IdFuse,
    BoundaryIdentity,
    LComp,
    Pivot,
    PivotBoundary,
    PivotGadget,
    PiCopy,
    GadgetFuse,
}

const RULES: [Rule; 8] = [
    Rule::IdFuse,
    Rule::BoundaryIdentity,
    Rule::LComp,
    Rule::Pivot,
    Rule::PivotBoundary,
    Rule::PivotGadget,
    Rule::PiCopy,
    Rule::GadgetFuse,
];

#[derive(Clone, Copy, Debug)]
enum Step {
    One(Rule, VertexId),
    Two(Rule, VertexId, VertexId),
}

/// Follows variables through the scratch simplification.
struct Labels<'a> {
    table: &'a mut PhaseTable,
    host: HashMap<VertexId, GroupId>,
    error: Option<Error>,
}

impl PhaseTracker for Labels<'_> {
    fn fused(&mut self, kept: VertexId, removed: VertexId) {
        let Some(gr) = self.host.remove(&removed) else {
            return;
        };
        let g = match self.host.get(&kept) {
            Some(&gk) => match self.table.fuse_variables(gk, gr) {
                Ok(g) => g,
                Err(e) => {
                    self.error.get_or_insert(e);
                    return;
                }
            },
            None => gr,
        };
        self.host.insert(kept, g);
    }

    fn negated(&mut self, v: VertexId) {
        if let Some(&g) = self.host.get(&v) {
            if let Err(e) = self.table.negate_group(g) {
                self.error.get_or_insert(e);
            }
        }
    }

    fn moved(&mut self, from: VertexId, to: VertexId) {
        if let Some(g) = self.host.remove(&from) {
            self.host.insert(to, g);
        }
    }
}

fn is_pauli(d: &ZxDiagram, v: VertexId) -> bool {
    d.phase(v).is_pauli()
}

/// Internal Pauli spider that is not the base of a non-Pauli gadget.
fn pivotable(d: &ZxDiagram, v: VertexId) -> bool {
    d.is_internal(v)
        && is_pauli(d, v)
        && !d
            .neighbours(v)
            .any(|t| !is_pauli(d, t) && gadget_base(d, t) == Some(v))
}

fn single_wire(d: &ZxDiagram, v: VertexId) -> bool {
    d.spider(v)
        .is_some_and(|s| s.input.is_some() != s.output.is_some())
}

fn valid(d: &ZxDiagram, step: Step) -> bool {
    let live = |v: VertexId| d.contains(v);
    match step {
        Step::One(rule, v) => {
            live(v)
                && match rule {
                    Rule::IdFuse => rewrite::check(d, &RewriteKind::IdFuse { v }).is_ok(),
                    Rule::BoundaryIdentity => {
                        single_wire(d, v)
                            && d.phase(v).is_constant_zero()
                            && d.degree(v) == 1
                            && d.neighbours(v).all(|n| d.is_internal(n))
                    }
                    Rule::LComp => d.is_internal(v) && d.phase(v).is_proper_clifford(),
                    Rule::PiCopy => gadget_base(d, v)
                        .is_some_and(|b| d.phase(b).as_constant() == Some(Phase::pi())),
                    _ => false,
                }
        }
        Step::Two(rule, u, v) => {
            live(u)
                && live(v)
                && d.connected(u, v)
                && match rule {
                    Rule::Pivot => pivotable(d, u) && pivotable(d, v),
                    Rule::PivotBoundary => pivotable(d, u) && single_wire(d, v),
                    Rule::PivotGadget => {
                        d.is_internal(u)
                            && !is_pauli(d, u)
                            && gadget_base(d, u).is_none()
                            && pivotable(d, v)
                            && (d.degree(u) > 1 || d.degree(v) > 1)
                    }
                    Rule::GadgetFuse => false,
                    _ => false,
                }
        }
    }
}

fn gadget_fuse_valid(d: &ZxDiagram, t1: VertexId, t2: VertexId) -> bool {
    d.contains(t1)
        && d.contains(t2)
        && rewrite::check(d, &RewriteKind::GadgetFuse { top1: t1, top2: t2 }).is_ok()
}

fn candidates(d: &ZxDiagram, rule: Rule) -> Vec<Step> {
    let mut out = Vec::new();
    match rule {
        Rule::IdFuse | Rule::BoundaryIdentity | Rule::LComp | Rule::PiCopy => {
            out.extend(
                d.vertices()
                    .map(|v| Step::One(rule, v))
                    .filter(|&s| valid(d, s)),
            );
        }
        Rule::Pivot => {
            for (u, v, _) in d.edges() {
                if valid(d, Step::Two(rule, u, v)) {
                    out.push(Step::Two(rule, u, v));
                }
            }
        }
        Rule::PivotBoundary | Rule::PivotGadget => {
            for u in d.vertices() {
                for v in d.neighbours(u) {
                    if valid(d, Step::Two(rule, u, v)) {
                        out.push(Step::Two(rule, u, v));
                    }
                }
            }
        }
        Rule::GadgetFuse => {
            let mut by_legs: BTreeMap<Vec<VertexId>, VertexId> = BTreeMap::new();
            for t in d.vertices() {
                let Some(b) = gadget_base(d, t) else { continue };
                if is_pauli(d, t) || !d.phase(b).is_constant_zero() {
                    continue;
                }
                let legs: Vec<VertexId> = d.neighbours(b).filter(|&n| n != t).collect();
                match by_legs.get(&legs) {
                    Some(&first) => out.push(Step::Two(rule, first, t)),
                    None => {
                        by_legs.insert(legs, t);
                    }
                }
            }
        }
    }
    out
}

fn try_apply(d: &mut ZxDiagram, step: Step, t: &mut Labels<'_>) -> Result<bool> {
    if let Step::Two(Rule::GadgetFuse, t1, t2) = step {
        if !gadget_fuse_valid(d, t1, t2) {
            return Ok(false);
        }
        rewrite::gadget_fuse_with(d, t1, t2, t)?;
        return Ok(true);
    }
    if !valid(d, step) {
        return Ok(false);
    }
    match step {
        Step::One(Rule::IdFuse, v) => {
            rewrite::id_fuse_with(d, v, t)?;
        }
        Step::One(Rule::BoundaryIdentity, v) => {
            rewrite::remove_boundary_identity(d, v)?;
        }
        Step::One(Rule::LComp, v) => {
            rewrite::local_comp_with(d, v, None, t)?;
        }
        Step::One(Rule::PiCopy, v) => {
            rewrite::gadget_delete_with(d, v, t)?;
        }
        Step::Two(Rule::Pivot, u, v) => {
            rewrite::pivot_with(d, u, v, None, None, t)?;
        }
        Step::Two(Rule::PivotBoundary, u, v) => {
            let p = d.phase(v);
            let rho = rewrite::pivot_residual(p);
            if p.as_constant() != Some(rho) {
                rewrite::unfuse_with(d, v, &Unfusion::default(), Some(rho), t)?;
            }
            let wire = Unfusion::new(Vec::new(), true);
            let (_, w2) = rewrite::unfuse_with(d, v, &wire, None, t)?;
            rewrite::pivot_with(d, u, v, None, None, t)?;
            rewrite::remove_boundary_identity(d, w2)?;
        }
        Step::Two(Rule::PivotGadget, u, v) => {
            rewrite::pivot_with(d, u, v, Some(&Unfusion::default()), None, t)?;
        }
        _ => unreachable!("validated step {step:?}"),
    }
    Ok(true)
}

/// Remove connected components that touch no boundary wire. They only
/// contribute a scalar.
fn remove_scalars(d: &mut ZxDiagram) -> Result<bool> {
    let mut seen = vec![false; d.id_bound()];
    let mut queue: VecDeque<VertexId> = d.vertices().filter(|&v| d.is_boundary(v)).collect();
    for v in &queue {
        seen[v.0 as usize] = true;
    }
    while let Some(v) = queue.pop_front() {
        for n in d.neighbours(v) {
            if !seen[n.0 as usize] {
                seen[n.0 as usize] = true;
                queue.push_back(n);
            }
        }
    }
    let dead: Vec<VertexId> = d.vertices().filter(|v| !seen[v.0 as usize]).collect();
    for &v in &dead {
        d.remove_spider(v)?;
    }
    Ok(!dead.is_empty())
}

/// Simplify `d` to reduced gadget form, recording phase fusions between
/// the variables of `table` whose spiders appear in `d`. Phases of `d` must
/// be numeric. Returns the number of rewrites applied.
pub fn full_reduce(d: &mut ZxDiagram, table: &mut PhaseTable, order: ReduceOrder) -> Result<usize> {
    let host: HashMap<VertexId, GroupId> = table
        .groups()
        .filter_map(|(g, gr)| gr.host.filter(|&h| d.contains(h)).map(|h| (h, g)))
        .collect();
    let mut labels = Labels {
        table,
        host,
        error: None,
    };
    let mut rng = match order {
        ReduceOrder::Canonical => None,
        ReduceOrder::Shuffled(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
    };
    // Every rewrite except gadgetisation removes a spider.
    let limit = 8 * (d.id_bound() + d.num_edges()) + 64;
    let mut applied = 0;
    loop {
        let mut rules = RULES;
        if let Some(r) = rng.as_mut() {
            rules.shuffle(r);
        }
        let mut progressed = false;
        for rule in rules {
            let mut steps = candidates(d, rule);
            if let Some(r) = rng.as_mut() {
                steps.shuffle(r);
            }
            for s in steps {
                if try_apply(d, s, &mut labels)? {
                    applied += 1;
                    progressed = true;
                }
            }
            if let Some(e) = labels.error.take() {
                return Err(e);
            }
            if progressed && rng.is_none() {
                break;
            }
        }
        progressed |= remove_scalars(d)?;
        if !progressed {
            break;
        }
        if applied > limit {
            return Err(Error::Invariant(format!(
                "simplification did not settle after {applied} rewrites"
            )));
        }
    }
    let hosts: Vec<(VertexId, GroupId)> = labels.host.into_iter().collect();
    for gr in &mut labels.table.groups {
        gr.host = None;
    }
    for (h, g) in hosts {
        if d.contains(h) && labels.table.groups[g.0].live {
            labels.table.groups[g.0].host = Some(h);
        }
    }
    Ok(applied)
}

/// Give every non-Clifford spider of `d` its own variable.
pub fn label_phases(d: &ZxDiagram) -> Result<(ZxDiagram, PhaseTable)> {
    let mut table = PhaseTable::new();
    let mut labelled = d.clone();
    for v in d.vertices() {
        let p = d.phase(v);
        let Some(value) = p.as_constant() else {
            return Err(Error::InvalidArgument(format!(
                "{v} already has a symbolic phase"
            )));
        };
        if !value.is_clifford() {
            let id = table.insert(v, value)?;
            labelled.set_phase(v, PhaseExpr::var(id));
        }
    }
    Ok((labelled, table))
}

/// Result of phase teleportation on a circuit.
#[derive(Clone, Debug)]
pub struct Teleported {
    /// The graph-like circuit diagram with non-Clifford phases replaced by
    /// variables.
    pub diagram: ZxDiagram,
    pub table: PhaseTable,
    /// The scratch copy in reduced gadget form.
    pub reduced: ZxDiagram,
    pub rewrites: usize,
}

/// Teleport phases with a chosen simplification order.
pub fn teleport_with(c: &Circuit, order: ReduceOrder) -> Result<Teleported> {
    let d = graph_like_from_circuit(c);
    let (diagram, mut table) = label_phases(&d)?;
    let mut reduced = d;
    let rewrites = full_reduce(&mut reduced, &mut table, order)?;
    Ok(Teleported {
        diagram,
        table,
        reduced,
        rewrites,
    })
}

/// The labelled circuit diagram and the phase table after simplifying a
/// scratch copy.
pub fn teleport_phases(c: &Circuit) -> Result<(ZxDiagram, PhaseTable)> {
    let t = teleport_with(c, ReduceOrder::Canonical)?;
    Ok((t.diagram, t.table))
}

/// The circuit diagram with teleported phases resolved: same structure as
/// the graph-like circuit diagram, fewer non-Clifford phases.
pub fn teleport_reduce(c: &Circuit, order: ReduceOrder) -> Result<ZxDiagram> {
    let mut t = teleport_with(c, order)?;
    resolve_all(&mut t.table, &t.diagram)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::Gate;
    use crate::random::random_circuit;
    use crate::verify::diagram_equals_circuit;

    fn circuit(n: usize, gates: &[Gate]) -> Circuit {
        let mut c = Circuit::new(n);
        c.extend(gates.iter().copied());
        c
    }

    #[test]
    fn adjacent_t_gates_merge_at_conversion() {
        let c = circuit(1, &[Gate::T(0), Gate::T(0)]);
        let d = teleport_reduce(&c, ReduceOrder::Canonical).unwrap();
        assert_eq!(d.t_count(), 0);
        assert!(diagram_equals_circuit(&d, &c).unwrap());
    }

    #[test]
    fn parity_t_gates_fuse() {
        let cx = Gate::Cnot {
            control: 0,
            target: 1,
        };
        let c = circuit(
            2,
            &[
                cx,
                Gate::T(1),
                cx,
                Gate::H(0),
                Gate::H(1),
                Gate::H(0),
                Gate::H(1),
                cx,
                Gate::T(1),
                cx,
            ],
        );
        let t = teleport_with(&c, ReduceOrder::Canonical).unwrap();
        assert_eq!(t.table.num_vars(), 2);
        let groups: Vec<_> = t.table.groups().collect();
        assert_eq!(groups.len(), 1);
        assert_eq!(groups[0].1.len(), 2);
        assert_eq!(t.table.combined(groups[0].0).unwrap(), Phase::half_pi());
        let mut table = t.table.clone();
        let d = resolve_all(&mut table, &t.diagram).unwrap();
        assert_eq!(d.t_count(), 0);
        let resolved: Vec<Phase> = groups[0]
            .1
            .members()
            .iter()
            .map(|m| table.resolved(m.id).unwrap())
            .collect();
        assert!(
            resolved.contains(&Phase::zero()) && resolved.iter().any(|p| p.is_proper_clifford())
        );
        assert!(d.same_structure(&graph_like_from_circuit(&c)));
        assert!(diagram_equals_circuit(&d, &c).unwrap());
    }

    #[test]
    fn single_t_survives() {
        let c = circuit(1, &[Gate::T(0)]);
        let d = teleport_reduce(&c, ReduceOrder::Canonical).unwrap();
        assert_eq!(d.t_count(), 1);
        assert!(diagram_equals_circuit(&d, &c).unwrap());
    }

    #[test]
    fn no_fusion_restores_phases() {
        let c = circuit(
            2,
            &[
                Gate::T(0),
                Gate::Cnot {
                    control: 0,
                    target: 1,
                },
                Gate::H(1),
                Gate::T(1),
            ],
        );
        let before = graph_like_from_circuit(&c);
        let d = teleport_reduce(&c, ReduceOrder::Canonical).unwrap();
        for v in before.vertices() {
            assert_eq!(d.phase(v), before.phase(v));
        }
    }

    #[test]
    fn fuse_and_fix() {
        let mut t = PhaseTable::new();
        let a = t.insert(VertexId(1), Phase::new(1, 4)).unwrap();
        let b = t.insert(VertexId(2), Phase::new(1, 4)).unwrap();
        let c = t.insert(VertexId(3), Phase::new(1, 8)).unwrap();
        let (ga, gb, gc) = (
            t.group_of(a).unwrap(),
            t.group_of(b).unwrap(),
            t.group_of(c).unwrap(),
        );
        let g = t.fuse_variables(ga, gb).unwrap();
        assert!(t.fuse_variables(g, g).is_err());
        assert_eq!(t.group(g).unwrap().len(), 2);
        let mut fixed = t.clone();
        fixed.fix_phase(g, a, Phase::zero()).unwrap();
        assert_eq!(fixed.resolved(a), Some(Phase::zero()));
        assert_eq!(fixed.resolved(b), Some(Phase::half_pi()));
        let mut full = t.clone();
        full.fix_phase(g, a, Phase::half_pi()).unwrap();
        assert_eq!(full.resolved(b), Some(Phase::zero()));
        assert!(t.fix_phase(g, c, Phase::zero()).is_err());

        t.negate_group(gc).unwrap();
        let g3 = t.fuse_variables(g, gc).unwrap();
        assert_eq!(t.group(g3).unwrap().len(), 3);
        assert_eq!(t.combined(g3).unwrap(), Phase::new(3, 8));
        assert!(t.group_of(c) == Some(g3));
    }

    #[test]
    fn negated_member_keeps_sign() {
        let mut t = PhaseTable::new();
        let a = t.insert(VertexId(1), Phase::new(1, 4)).unwrap();
        let b = t.insert(VertexId(2), Phase::new(3, 4)).unwrap();
        let gb = t.group_of(b).unwrap();
        t.negate_group(gb).unwrap();
        let g = t.fuse_variables(t.group_of(a).unwrap(), gb).unwrap();
        // α₁ - α₂ = -π/2.
        assert_eq!(t.combined(g).unwrap(), Phase::new(3, 2));
        let mut s = t.clone();
        s.fix_phase(g, a, Phase::zero()).unwrap();
        // The survivor has multiplier -1, so it takes π/2.
        assert_eq!(s.resolved(b), Some(Phase::half_pi()));
        t.fix_phase(g, b, Phase::zero()).unwrap();
        assert_eq!(t.resolved(a), Some(Phase::new(3, 2)));
    }

    #[test]
    fn clifford_circuits_reduce_without_non_clifford_spiders() {
        for seed in 0..10 {
            let c = random_circuit(4, 60, 0.0, seed).unwrap();
            let t = teleport_with(&c, ReduceOrder::Canonical).unwrap();
            assert_eq!(t.reduced.t_count(), 0);
            assert_eq!(t.table.num_vars(), 0);
            assert!(
                t.reduced
                    .vertices()
                    .filter(|&v| t.reduced.is_internal(v))
                    .count()
                    <= 4,
                "seed {seed}"
            );
        }
    }

    #[test]
    fn reduced_form_is_a_fixed_point() {
        let c = random_circuit(3, 40, 0.3, 7).unwrap();
        let mut t = teleport_with(&c, ReduceOrder::Canonical).unwrap();
        let mut again = t.reduced.clone();
        assert_eq!(
            full_reduce(&mut again, &mut t.table, ReduceOrder::Canonical).unwrap(),
            0
        );
    }

    #[test]
    fn teleportation_preserves_the_unitary() {
        for seed in 0..25 {
            let c = random_circuit(4, 50, 0.3, seed).unwrap();
            let t = teleport_with(&c, ReduceOrder::Canonical).unwrap();
            assert!(
                diagram_equals_circuit(&t.reduced, &c).unwrap(),
                "scratch, seed {seed}"
            );
            let mut table = t.table.clone();
            let d = resolve_all(&mut table, &t.diagram).unwrap();
            assert!(d.same_structure(&graph_like_from_circuit(&c)));
            assert!(
                diagram_equals_circuit(&d, &c).unwrap(),
                "resolved, seed {seed}"
            );
            assert_eq!(d.t_count(), t.reduced.t_count(), "seed {seed}");
        }
    }
}

//! Deciding `G -> (a_1, ..., a_r)`: does every `r`-coloring of `V(G)` put an
//! `a_i`-clique inside class `i` for some `i`?
//!
//! [`arrows`] is a depth-first search over vertex colorings in a fixed vertex
//! order. Color `i` is refused for `v` as soon as `N(v) ∩ V_i` already holds an
//! `(a_i - 1)`-clique, so forbidden cliques are caught when they are created.
//! Interchangeable colors (equal thresholds) are opened in index order, and an
//! optional group of automorphisms restricts one vertex orbit.
//!
//! [`arrows_exhaustive`] enumerates all `r^n` colorings and shares no code with
//! the search or the clique solver; it exists to cross-check the search.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::clique::{clique_number, has_k_clique_in_rows, has_k_clique_within};
use crate::construct::ArrowInstance;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexPermutation, VertexSet};

/// A vertex coloring; `colors[v]` is in `1..=r`, or 0 for unassigned.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coloring {
    pub colors: Vec<usize>,
}

impl Coloring {
    pub const UNASSIGNED: usize = 0;

    pub fn new(colors: Vec<usize>) -> Self {
        Coloring { colors }
    }

    /// Builds a coloring from classes `V_1..V_r`.
    pub fn from_classes(n: usize, classes: &[VertexSet]) -> Self {
        let mut colors = vec![Self::UNASSIGNED; n];
        for (i, class) in classes.iter().enumerate() {
            for v in class {
                colors[v] = i + 1;
            }
        }
        Coloring { colors }
    }

    /// `V_i` for a 1-based color `i`.
    pub fn class(&self, i: usize) -> VertexSet {
        self.colors
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c == i)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn is_complete(&self) -> bool {
        self.colors.iter().all(|&c| c != Self::UNASSIGNED)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Arrows,
    NotArrows,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchStats {
    pub nodes: u64,
    pub prunes: u64,
    /// Omitted in deterministic mode so output is reproducible.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowResult {
    pub verdict: Verdict,
    /// Present iff the verdict is `NotArrows`; always a free coloring.
    pub witness: Option<Coloring>,
    pub stats: SearchStats,
}

impl ArrowResult {
    pub fn arrows(&self) -> bool {
        self.verdict == Verdict::Arrows
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum VertexOrder {
    /// Descending degree, ties by index.
    #[default]
    DescendingDegree,
    /// Ascending degree, ties by index.
    AscendingDegree,
    /// `0, 1, ..., n-1`.
    Natural,
    Explicit(Vec<usize>),
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub vertex_order: VertexOrder,
    /// Automorphisms of the searched graph; each is verified before use.
    pub symmetry_generators: Vec<VertexPermutation>,
    /// Single-threaded with reproducible statistics.
    pub deterministic: bool,
    /// Parallel subtrees; 0 means the rayon default.
    pub worker_width: usize,
    /// Abort after this many search nodes.
    pub node_budget: Option<u64>,
    /// Break the symmetry between equal-threshold colors.
    pub color_symmetry: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            vertex_order: VertexOrder::default(),
            symmetry_generators: Vec::new(),
            deterministic: true,
            worker_width: 0,
            node_budget: None,
            color_symmetry: true,
        }
    }
}

impl SearchConfig {
    pub fn parallel() -> Self {
        SearchConfig {
            deterministic: false,
            ..Default::default()
        }
    }

    pub fn with_order(mut self, order: VertexOrder) -> Self {
        self.vertex_order = order;
        self
    }

    pub fn with_generators(mut self, gens: Vec<VertexPermutation>) -> Self {
        self.symmetry_generators = gens;
        self
    }

    pub fn with_budget(mut self, budget: Option<u64>) -> Self {
        self.node_budget = budget;
        self
    }
}

/// Is `c` an `(a_1, ..., a_r)`-free coloring of `g`?
pub fn is_free_coloring(g: &Graph, inst: &ArrowInstance, c: &Coloring) -> Result<bool> {
    if c.colors.len() != g.n() {
        return Err(Error::invalid(format!(
            "coloring has {} entries for {} vertices",
            c.colors.len(),
            g.n()
        )));
    }
    if let Some(v) = c.colors.iter().position(|&x| x == Coloring::UNASSIGNED) {
        return Err(Error::invalid(format!("vertex {v} is unassigned")));
    }
    if let Some(v) = c.colors.iter().position(|&x| x > inst.r()) {
        return Err(Error::invalid(format!(
            "vertex {v} has color {} outside 1..={}",
            c.colors[v],
            inst.r()
        )));
    }
    for (i, &a) in inst.tuple.iter().enumerate() {
        if has_k_clique_within(g, &c.class(i + 1), a)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn order_vertices(g: &Graph, policy: &VertexOrder) -> Result<Vec<usize>> {
    let n = g.n();
    let order = match policy {
        VertexOrder::Natural => (0..n).collect(),
        VertexOrder::DescendingDegree => {
            let mut o: Vec<usize> = (0..n).collect();
            o.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
            o
        }
        VertexOrder::AscendingDegree => {
            let mut o: Vec<usize> = (0..n).collect();
            o.sort_by_key(|&v| (g.degree(v), v));
            o
        }
        VertexOrder::Explicit(o) => {
            VertexPermutation::new(o.clone()).map_err(|_| {
                Error::invalid("explicit vertex order is not a permutation of the vertices")
            })?;
            if o.len() != n {
                return Err(Error::invalid("explicit vertex order has the wrong length"));
            }
            o.clone()
        }
    };
    Ok(order)
}

/// Orbit of `x` under the group generated by `gens`.
pub fn orbit(x: usize, gens: &[VertexPermutation]) -> VertexSet {
    let mut orbit = VertexSet::singleton(x);
    let mut frontier = vec![x];
    while let Some(v) = frontier.pop() {
        for g in gens {
            let w = g.apply(v);
            if !orbit.contains(w) {
                orbit.insert(w);
                frontier.push(w);
            }
        }
    }
    orbit
}

/// Immutable description of the reduced search problem, shared by workers.
struct Problem<'a> {
    rows: &'a [VertexSet],
    order: Vec<usize>,
    /// Original 0-based color index of each searched color slot.
    slot_color: Vec<usize>,
    /// `a_i - 1` per slot.
    slot_need: Vec<usize>,
    /// Slot that must be non-empty before this slot may be used.
    opens_after: Vec<Option<usize>>,
    /// Orbit restriction: if the first vertex is not colored from
    /// `orbit_slots`, no vertex of `orbit` may be.
    orbit: VertexSet,
    orbit_slots: Vec<bool>,
    budget: Option<u64>,
}

struct Shared {
    found: AtomicBool,
    nodes: AtomicU64,
    over_budget: AtomicBool,
}

struct Worker<'a> {
    problem: &'a Problem<'a>,
    shared: &'a Shared,
    classes: Vec<VertexSet>,
    /// Slot of `order[0]` once assigned.
    first_slot: Option<usize>,
    nodes: u64,
    prunes: u64,
    unflushed: u64,
}

const FLUSH_EVERY: u64 = 4096;

impl<'a> Worker<'a> {
    fn new(problem: &'a Problem<'a>, shared: &'a Shared) -> Self {
        Worker {
            problem,
            shared,
            classes: vec![VertexSet::EMPTY; problem.slot_color.len()],
            first_slot: None,
            nodes: 0,
            prunes: 0,
            unflushed: 0,
        }
    }

    /// Slots `v` (at position `pos`) may take right now.
    fn allowed(&mut self, pos: usize, v: usize, out: &mut Vec<usize>) {
        out.clear();
        let pr = self.problem;
        let restrict_orbit =
            pos > 0 && pr.orbit.contains(v) && self.first_slot.is_some_and(|s| !pr.orbit_slots[s]);
        for slot in 0..pr.slot_color.len() {
            if let Some(prev) = pr.opens_after[slot] {
                if self.classes[prev].is_empty() {
                    continue;
                }
            }
            if restrict_orbit && pr.orbit_slots[slot] {
                continue;
            }
            let nbrs = pr.rows[v] & self.classes[slot];
            if has_k_clique_in_rows(pr.rows, nbrs, pr.slot_need[slot]) {
                self.prunes += 1;
                continue;
            }
            out.push(slot);
        }
    }

    fn assign(&mut self, pos: usize, v: usize, slot: usize) {
        self.classes[slot].insert(v);
        if pos == 0 {
            self.first_slot = Some(slot);
        }
    }

    fn unassign(&mut self, pos: usize, v: usize, slot: usize) {
        self.classes[slot].remove(v);
        if pos == 0 {
            self.first_slot = None;
        }
    }

    /// Counts a node; false when the search must stop.
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        self.unflushed += 1;
        if self.unflushed >= FLUSH_EVERY {
            let total = self
                .shared
                .nodes
                .fetch_add(self.unflushed, Ordering::Relaxed)
                + self.unflushed;
            self.unflushed = 0;
            if let Some(b) = self.problem.budget {
                if total > b {
                    self.shared.over_budget.store(true, Ordering::Relaxed);
                }
            }
        }
        !(self.shared.found.load(Ordering::Relaxed)
            || self.shared.over_budget.load(Ordering::Relaxed))
    }

    fn flush(&mut self) {
        let total = self
            .shared
            .nodes
            .fetch_add(self.unflushed, Ordering::Relaxed)
            + self.unflushed;
        self.unflushed = 0;
        if let Some(b) = self.problem.budget {
            if total > b {
                self.shared.over_budget.store(true, Ordering::Relaxed);
            }
        }
    }

    /// Depth-first search from position `pos`; true when a free coloring
    /// is complete in `self.classes`.
    fn dfs(&mut self, pos: usize) -> bool {
        if !self.tick() {
            return false;
        }
        let pr = self.problem;
        if pos == pr.order.len() {
            return true;
        }
        let v = pr.order[pos];
        let mut slots = Vec::with_capacity(pr.slot_color.len());
        self.allowed(pos, v, &mut slots);
        for slot in slots {
            self.assign(pos, v, slot);
            if self.dfs(pos + 1) {
                return true;
            }
            self.unassign(pos, v, slot);
        }
        false
    }
}

/// Decides `g -> inst.tuple`. The verdict does not depend on `cfg`.
pub fn arrows(g: &Graph, inst: &ArrowInstance, cfg: &SearchConfig) -> Result<ArrowResult> {
    let start = Instant::now();
    for (i, gen) in cfg.symmetry_generators.iter().enumerate() {
        if !g.is_automorphism(gen)? {
            return Err(Error::invalid(format!(
                "symmetry generator {i} is not an automorphism of the graph"
            )));
        }
    }
    let n = g.n();
    let order = order_vertices(g, &cfg.vertex_order)?;

    // a_i = 1 colors must stay empty and are dropped from the search
    let slot_color: Vec<usize> = (0..inst.r()).filter(|&i| inst.tuple[i] >= 2).collect();
    let slot_need: Vec<usize> = slot_color.iter().map(|&i| inst.tuple[i] - 1).collect();
    let opens_after: Vec<Option<usize>> = (0..slot_color.len())
        .map(|s| {
            if !cfg.color_symmetry {
                return None;
            }
            (0..s).rev().find(|&t| slot_need[t] == slot_need[s])
        })
        .collect();

    let mut orbit_set = VertexSet::EMPTY;
    let mut orbit_slots = vec![false; slot_color.len()];
    if !cfg.symmetry_generators.is_empty() && n > 0 && !slot_color.is_empty() {
        // the representative is the first vertex searched; the restricted
        // group is the highest-threshold one
        let x = order[0];
        orbit_set = orbit(x, &cfg.symmetry_generators);
        let top = *slot_need.iter().max().expect("non-empty");
        for (s, flag) in orbit_slots.iter_mut().enumerate() {
            *flag = slot_need[s] == top;
        }
    }

    let problem = Problem {
        rows: g.rows(),
        order,
        slot_color,
        slot_need,
        opens_after,
        orbit: orbit_set,
        orbit_slots,
        budget: cfg.node_budget,
    };
    let shared = Shared {
        found: AtomicBool::new(false),
        nodes: AtomicU64::new(0),
        over_budget: AtomicBool::new(false),
    };

    let (witness_classes, nodes, prunes) = if cfg.deterministic || n < 3 {
        let mut w = Worker::new(&problem, &shared);
        let found = w.dfs(0);
        w.flush();
        (found.then(|| w.classes.clone()), w.nodes, w.prunes)
    } else {
        run_parallel(&problem, &shared, cfg.worker_width)
    };

    if shared.over_budget.load(Ordering::Relaxed) && witness_classes.is_none() {
        return Err(Error::BudgetExceeded {
            budget: cfg.node_budget.unwrap_or(0),
        });
    }

    let stats = SearchStats {
        nodes,
        prunes,
        wall_ms: (!cfg.deterministic).then(|| start.elapsed().as_millis() as u64),
    };
    let result = match witness_classes {
        None => ArrowResult {
            verdict: Verdict::Arrows,
            witness: None,
            stats,
        },
        Some(classes) => {
            let mut full = vec![VertexSet::EMPTY; inst.r()];
            for (slot, class) in classes.into_iter().enumerate() {
                full[problem.slot_color[slot]] = class;
            }
            let witness = Coloring::from_classes(n, &full);
            assert!(
                is_free_coloring(g, inst, &witness)?,
                "search produced a coloring that is not free"
            );
            ArrowResult {
                verdict: Verdict::NotArrows,
                witness: Some(witness),
                stats,
            }
        }
    };
    Ok(result)
}

/// Splits the tree at depth two and searches the subtrees in parallel.
fn run_parallel(
    problem: &Problem<'_>,
    shared: &Shared,
    width: usize,
) -> (Option<Vec<VertexSet>>, u64, u64) {
    let mut root = Worker::new(problem, shared);
    let mut prefixes = Vec::new();
    let mut first = Vec::new();
    let mut second = Vec::new();
    let v0 = problem.order[0];
    let v1 = problem.order[1];
    root.tick();
    root.allowed(0, v0, &mut first);
    for &s0 in &first {
        root.assign(0, v0, s0);
        root.tick();
        root.allowed(1, v1, &mut second);
        for &s1 in &second {
            prefixes.push((s0, s1));
        }
        root.unassign(0, v0, s0);
    }
    root.flush();

    let winner: Mutex<Option<Vec<VertexSet>>> = Mutex::new(None);
    let totals = Mutex::new((root.nodes, root.prunes));
    let run = || {
        prefixes.par_iter().for_each(|&(s0, s1)| {
            if shared.found.load(Ordering::Relaxed) || shared.over_budget.load(Ordering::Relaxed) {
                return;
            }
            let mut w = Worker::new(problem, shared);
            w.assign(0, v0, s0);
            w.assign(1, v1, s1);
            let found = w.dfs(2);
            w.flush();
            if found {
                shared.found.store(true, Ordering::Relaxed);
                let mut slot = winner.lock().expect("poisoned");
                if slot.is_none() {
                    *slot = Some(w.classes.clone());
                }
            }
            let mut t = totals.lock().expect("poisoned");
            t.0 += w.nodes;
            t.1 += w.prunes;
        })
    };
    if width > 0 {
        match rayon::ThreadPoolBuilder::new().num_threads(width).build() {
            Ok(pool) => pool.install(run),
            Err(_) => run(),
        }
    } else {
        run();
    }
    let (nodes, prunes) = totals.into_inner().expect("poisoned");
    (winner.into_inner().expect("poisoned"), nodes, prunes)
}

/// Largest `r^n` the exhaustive oracle accepts.
pub const EXHAUSTIVE_LIMIT: u64 = 100_000_000;

/// All `k`-cliques of `g` as bitmasks, by plain extension (no bounding).
fn all_cliques(g: &Graph, k: usize) -> Vec<u64> {
    let n = g.n();
    let adj: Vec<u64> = (0..n)
        .map(|v| {
            (0..n)
                .filter(|&u| g.has_edge(v, u))
                .fold(0u64, |m, u| m | 1 << u)
        })
        .collect();
    let mut out = Vec::new();
    fn extend(adj: &[u64], clique: u64, size: usize, k: usize, start: usize, out: &mut Vec<u64>) {
        if size == k {
            out.push(clique);
            return;
        }
        for v in start..adj.len() {
            if clique & !adj[v] == 0 {
                extend(adj, clique | 1 << v, size + 1, k, v + 1, out);
            }
        }
    }
    if k == 0 {
        out.push(0);
    } else {
        extend(&adj, 0, 0, k, 0, &mut out);
    }
    out
}

/// Decides `g -> inst.tuple` by enumerating all `r^n` colorings.
pub fn arrows_exhaustive(g: &Graph, inst: &ArrowInstance) -> Result<ArrowResult> {
    let start = Instant::now();
    let n = g.n();
    let r = inst.r();
    let total = (r as u64)
        .checked_pow(n as u32)
        .filter(|&t| t <= EXHAUSTIVE_LIMIT);
    let Some(total) = total else {
        return Err(Error::InstanceTooLarge(format!(
            "{r}^{n} colorings exceed the exhaustive limit {EXHAUSTIVE_LIMIT}"
        )));
    };
    if n > 64 {
        return Err(Error::InstanceTooLarge(format!(
            "exhaustive oracle handles at most 64 vertices, got {n}"
        )));
    }
    let forbidden: Vec<Vec<u64>> = inst.tuple.iter().map(|&a| all_cliques(g, a)).collect();

    let mut digits = vec![0usize; n];
    let mut nodes = 0u64;
    for _ in 0..total {
        nodes += 1;
        let mut classes = vec![0u64; r];
        for (v, &d) in digits.iter().enumerate() {
            classes[d] |= 1 << v;
        }
        let free = classes
            .iter()
            .zip(&forbidden)
            .all(|(&class, cliques)| cliques.iter().all(|&q| q & !class != 0));
        if free {
            return Ok(ArrowResult {
                verdict: Verdict::NotArrows,
                witness: Some(Coloring::new(digits.iter().map(|d| d + 1).collect())),
                stats: SearchStats {
                    nodes,
                    prunes: 0,
                    wall_ms: Some(start.elapsed().as_millis() as u64),
                },
            });
        }
        for d in digits.iter_mut() {
            *d += 1;
            if *d < r {
                break;
            }
            *d = 0;
        }
    }
    Ok(ArrowResult {
        verdict: Verdict::Arrows,
        witness: None,
        stats: SearchStats {
            nodes,
            prunes: 0,
            wall_ms: Some(start.elapsed().as_millis() as u64),
        },
    })
}

/// `g ∈ H(a_1, ..., a_r; q)`: `g` arrows the tuple and `cl(g) < q`.
pub fn in_h(g: &Graph, inst: &ArrowInstance, q: usize, cfg: &SearchConfig) -> Result<bool> {
    if q < 1 {
        return Err(Error::invalid("q must be at least 1"));
    }
    if clique_number(g).size >= q {
        return Ok(false);
    }
    Ok(arrows(g, inst, cfg)?.arrows())
}

/// `χ(g) > r`, decided as `g -> (2, ..., 2)` with `r` twos.
pub fn chromatic_exceeds(g: &Graph, r: usize, cfg: &SearchConfig) -> Result<bool> {
    if r < 1 {
        return Err(Error::invalid("r must be at least 1"));
    }
    let inst = ArrowInstance::new(vec![2; r], None)?;
    Ok(arrows(g, &inst, cfg)?.arrows())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{build_gamma, make_instance};

    fn inst(t: &[usize]) -> ArrowInstance {
        make_instance(t, None).unwrap()
    }

    fn det() -> SearchConfig {
        SearchConfig::default()
    }

    #[test]
    fn free_coloring_checks() {
        let k4 = Graph::complete(4).unwrap();
        let c = Coloring::new(vec![1, 1, 2, 2]);
        assert!(is_free_coloring(&k4, &inst(&[3, 3]), &c).unwrap());
        let k5 = Graph::complete(5).unwrap();
        for mask in 0u32..32 {
            let c = Coloring::new((0..5).map(|v| 1 + (mask >> v & 1) as usize).collect());
            assert!(!is_free_coloring(&k5, &inst(&[3, 3]), &c).unwrap());
        }
        let c = Coloring::new(vec![1, 2, 2, 2]);
        assert!(!is_free_coloring(&Graph::empty(4).unwrap(), &inst(&[1, 5]), &c).unwrap());
        assert!(is_free_coloring(
            &Graph::empty(4).unwrap(),
            &inst(&[1, 5]),
            &Coloring::new(vec![2; 4])
        )
        .unwrap());
        assert!(is_free_coloring(&k4, &inst(&[3, 3]), &Coloring::new(vec![1, 0, 2, 2])).is_err());
        assert!(is_free_coloring(&k4, &inst(&[3, 3]), &Coloring::new(vec![1, 3, 2, 2])).is_err());
    }

    #[test]
    fn complete_graph_thresholds() {
        let k5 = Graph::complete(5).unwrap();
        assert!(arrows(&k5, &inst(&[3, 3]), &det()).unwrap().arrows());
        let k4 = Graph::complete(4).unwrap();
        let r = arrows(&k4, &inst(&[3, 3]), &det()).unwrap();
        assert_eq!(r.verdict, Verdict::NotArrows);
        let w = r.witness.unwrap();
        assert_eq!(w.class(1).len(), 2);
        assert_eq!(w.class(2).len(), 2);
    }

    #[test]
    fn gamma_3_arrows_3_3() {
        let g = build_gamma(3).unwrap();
        assert!(arrows(&g.graph, &inst(&[3, 3]), &det()).unwrap().arrows());
        let cfg = det().with_generators(vec![g.sigma.clone()]);
        assert!(arrows(&g.graph, &inst(&[3, 3]), &cfg).unwrap().arrows());
    }

    #[test]
    fn odd_cycle_needs_three_colors() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(arrows(&c5, &inst(&[2, 2]), &det()).unwrap().arrows());
        assert!(chromatic_exceeds(&c5, 2, &det()).unwrap());
        assert!(!chromatic_exceeds(&Graph::cycle(6).unwrap(), 2, &det()).unwrap());
    }

    #[test]
    fn exhaustive_oracle_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert!(arrows_exhaustive(&k3, &inst(&[2, 2])).unwrap().arrows());
        let p3 = Graph::path(3).unwrap();
        let r = arrows_exhaustive(&p3, &inst(&[2, 2])).unwrap();
        let w = r.witness.unwrap();
        assert!(w.colors == vec![1, 2, 1] || w.colors == vec![2, 1, 2]);
        let big = Graph::empty(30).unwrap();
        assert!(matches!(
            arrows_exhaustive(&big, &inst(&[2, 2])),
            Err(Error::InstanceTooLarge(_))
        ));
    }

    #[test]
    fn exhaustive_gamma_3_2_2_3() {
        let g = build_gamma(3).unwrap();
        assert!(arrows_exhaustive(&g.graph, &inst(&[2, 2, 3]))
            .unwrap()
            .arrows());
    }

    #[test]
    fn membership_in_h() {
        let g = build_gamma(3).unwrap().graph;
        assert!(in_h(&g, &inst(&[3, 3]), 4, &det()).unwrap());
        assert!(!in_h(&Graph::complete(5).unwrap(), &inst(&[3, 3]), 4, &det()).unwrap());
        assert!(!in_h(&Graph::complete(4).unwrap(), &inst(&[3, 3]), 5, &det()).unwrap());
    }

    #[test]
    fn unit_thresholds_force_empty_classes() {
        let e3 = Graph::empty(3).unwrap();
        assert!(arrows(&e3, &inst(&[1]), &det()).unwrap().arrows());
        let r = arrows(&e3, &inst(&[1, 2]), &det()).unwrap();
        assert_eq!(r.witness.unwrap().colors, vec![2, 2, 2]);
        let e0 = Graph::empty(0).unwrap();
        assert!(!arrows(&e0, &inst(&[1]), &det()).unwrap().arrows());
    }

    #[test]
    fn invalid_generator_rejected() {
        let p3 = Graph::path(3).unwrap();
        let swap = VertexPermutation::new(vec![1, 0, 2]).unwrap();
        let cfg = det().with_generators(vec![swap]);
        assert!(matches!(
            arrows(&p3, &inst(&[2, 2]), &cfg),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn budget_exceeded() {
        let g = build_gamma(3).unwrap().graph;
        let cfg = det().with_budget(Some(10));
        assert!(matches!(
            arrows(&g, &inst(&[2, 2, 3]), &cfg),
            Err(Error::BudgetExceeded { budget: 10 })
        ));
    }

    #[test]
    fn orbits() {
        let g = build_gamma(3).unwrap();
        let o = orbit(0, std::slice::from_ref(&g.sigma));
        assert_eq!(o.to_vec(), (0..7).collect::<Vec<_>>());
        assert_eq!(orbit(3, &[]).to_vec(), vec![3]);
    }
}

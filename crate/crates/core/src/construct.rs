//! Arrowing instances, the graph `Γ_p`, and the witness graphs `K_{m-p-2} + Γ_p`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexPermutation, VertexSet};

/// A color-threshold tuple `(a_1, ..., a_r)` with its derived `m` and `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowInstance {
    pub tuple: Vec<usize>,
    /// `sum (a_i - 1) + 1`
    pub m: usize,
    /// `max a_i`
    pub p: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
}

impl ArrowInstance {
    pub fn new(tuple: Vec<usize>, q: Option<usize>) -> Result<Self> {
        if tuple.is_empty() {
            return Err(Error::invalid("tuple must be non-empty"));
        }
        if let Some(i) = tuple.iter().position(|&a| a == 0) {
            return Err(Error::invalid(format!(
                "tuple entry a_{} must be positive",
                i + 1
            )));
        }
        let m = tuple.iter().map(|a| a - 1).sum::<usize>() + 1;
        let p = *tuple.iter().max().expect("non-empty");
        Ok(ArrowInstance { tuple, m, p, q })
    }

    pub fn r(&self) -> usize {
        self.tuple.len()
    }

    /// Checks that `m` and `p` agree with the tuple; used after deserialization.
    pub fn validate(&self) -> Result<()> {
        let fresh = ArrowInstance::new(self.tuple.clone(), self.q)?;
        if fresh.m != self.m || fresh.p != self.p {
            return Err(Error::invalid(format!(
                "instance declares m={}, p={} but tuple {:?} gives m={}, p={}",
                self.m, self.p, self.tuple, fresh.m, fresh.p
            )));
        }
        Ok(())
    }
}

pub fn make_instance(tuple: &[usize], q: Option<usize>) -> Result<ArrowInstance> {
    ArrowInstance::new(tuple.to_vec(), q)
}

/// `F(a_1, ..., a_r; q)` exists iff `q > max a_i`.
pub fn existence_check(inst: &ArrowInstance, q: usize) -> bool {
    q > inst.p
}

/// `Γ_p` with its labeling and cyclic automorphism.
///
/// Layout: indices `0..=2p` are `v_1..v_{2p+1}`, indices `2p+1..=4p+1` are
/// `u_1..u_{2p+1}`.
#[derive(Clone, Debug)]
pub struct GammaGraph {
    pub p: usize,
    pub graph: Graph,
    pub v_labels: Vec<usize>,
    pub u_labels: Vec<usize>,
    pub sigma: VertexPermutation,
    /// `M_1..M_{2p+1}`; `M_i` is the neighborhood of `u_i`.
    pub m_sets: Vec<VertexSet>,
}

impl GammaGraph {
    /// Index of `v_i`, 1-based label.
    pub fn v(&self, i: usize) -> usize {
        self.v_labels[i - 1]
    }

    /// Index of `u_i`, 1-based label.
    pub fn u(&self, i: usize) -> usize {
        self.u_labels[i - 1]
    }

    pub fn labels(&self) -> Vec<String> {
        let mut out = vec![String::new(); self.graph.n()];
        for (i, &v) in self.v_labels.iter().enumerate() {
            out[v] = format!("v_{}", i + 1);
        }
        for (i, &u) in self.u_labels.iter().enumerate() {
            out[u] = format!("u_{}", i + 1);
        }
        out
    }

    /// Checks every structural property `Γ_p` is supposed to have.
    pub fn check_invariants(&self) -> Result<()> {
        let p = self.p;
        let cyc = 2 * p + 1;
        let vset: VertexSet = self.v_labels.iter().copied().collect();
        let uset: VertexSet = self.u_labels.iter().copied().collect();
        let fail = |msg: String| Err(Error::invalid(format!("Γ_{p}: {msg}")));

        if self.graph.n() != 4 * p + 2 {
            return fail(format!("has {} vertices", self.graph.n()));
        }
        let (vpart, back) = self.graph.induced(&vset)?;
        let expected = Graph::cycle(cyc)?.complement();
        let v_order: Vec<usize> = self.v_labels.clone();
        if back != v_order || vpart != expected {
            return fail("v-part is not the complement of C_{2p+1}".into());
        }
        if self
            .u_labels
            .iter()
            .any(|&u| self.graph.neighbors(u).intersects(&uset))
        {
            return fail("u-vertices are not independent".into());
        }
        for i in 1..=cyc {
            let m_i = self.m_sets[i - 1];
            if *self.graph.neighbors(self.u(i)) != m_i {
                return fail(format!("N(u_{i}) != M_{i}"));
            }
            if m_i.len() != 2 * p - 2 {
                return fail(format!("|M_{i}| = {}", m_i.len()));
            }
            if self.sigma.pow(i - 1).apply_set(&self.m_sets[0]) != m_i {
                return fail(format!("M_{i} is not σ^{}(M_1)", i - 1));
            }
        }
        if !self.graph.is_automorphism(&self.sigma)? {
            return fail("σ is not an automorphism".into());
        }
        Ok(())
    }
}

/// Builds `Γ_p`: the complement of `C_{2p+1}` plus independent vertices
/// `u_i` with `N(u_i) = M_i = σ^{i-1}(M_1)`, where
/// `M_1 = V(C_{2p+1}) \ {v_1, v_{2p-1}, v_{2p-2}}`.
pub fn build_gamma(p: usize) -> Result<GammaGraph> {
    if p < 2 {
        return Err(Error::invalid(format!("Γ_p needs p >= 2, got {p}")));
    }
    let cyc = 2 * p + 1;
    let n = 2 * cyc;
    let v_labels: Vec<usize> = (0..cyc).collect();
    let u_labels: Vec<usize> = (cyc..n).collect();

    let sigma = VertexPermutation::new(
        (0..cyc)
            .map(|i| (i + 1) % cyc)
            .chain((0..cyc).map(|i| cyc + (i + 1) % cyc))
            .collect(),
    )?;

    let excluded = [1, 2 * p - 1, 2 * p - 2];
    let m1: VertexSet = (1..=cyc)
        .filter(|i| !excluded.contains(i))
        .map(|i| v_labels[i - 1])
        .collect();
    let m_sets: Vec<VertexSet> = (0..cyc).map(|k| sigma.pow(k).apply_set(&m1)).collect();

    let mut graph = Graph::cycle(cyc)?.complement().join(&Graph::empty(cyc)?)?;
    // join added every v-u edge; keep only u_i -- M_i
    let mut adj: Vec<VertexSet> = graph.rows().to_vec();
    for (i, &u) in u_labels.iter().enumerate() {
        let drop = VertexSet::full(cyc) - m_sets[i];
        adj[u] -= drop;
        for v in &drop {
            adj[v].remove(u);
        }
    }
    graph = Graph::from_adjacency(adj)?;

    Ok(GammaGraph {
        p,
        graph,
        v_labels,
        u_labels,
        sigma,
        m_sets,
    })
}

/// `K_{m-p-2} + Γ_p` with its labeling; the complete block comes first.
#[derive(Clone, Debug)]
pub struct WitnessGraph {
    pub instance: ArrowInstance,
    pub graph: Graph,
    /// Size of the `K_{m-p-2}` block at indices `0..clique_block`.
    pub clique_block: usize,
    pub gamma: GammaGraph,
}

impl WitnessGraph {
    /// `σ` acting on the `Γ_p` block, fixing the complete block.
    pub fn sigma(&self) -> VertexPermutation {
        let k = self.clique_block;
        let image = (0..k)
            .chain((0..self.gamma.graph.n()).map(|v| k + self.gamma.sigma.apply(v)))
            .collect();
        VertexPermutation::new(image).expect("shifted σ is a permutation")
    }

    pub fn labels(&self) -> Vec<String> {
        (1..=self.clique_block)
            .map(|i| format!("k_{i}"))
            .chain(self.gamma.labels())
            .collect()
    }
}

pub fn witness(inst: &ArrowInstance) -> Result<WitnessGraph> {
    if inst.m < inst.p + 2 {
        return Err(Error::ConstructionUndefined {
            m: inst.m,
            p: inst.p,
        });
    }
    if inst.p < 3 {
        return Err(Error::OutOfTheoremRange(format!(
            "witness construction requires p >= 3, got p = {}",
            inst.p
        )));
    }
    let gamma = build_gamma(inst.p)?;
    let clique_block = inst.m - inst.p - 2;
    let graph = Graph::complete(clique_block)?.join(&gamma.graph)?;
    Ok(WitnessGraph {
        instance: inst.clone(),
        graph,
        clique_block,
        gamma,
    })
}

/// `K_{m-p-2} + Γ_p`, on exactly `m + 3p` vertices.
pub fn witness_graph(inst: &ArrowInstance) -> Result<Graph> {
    Ok(witness(inst)?.graph)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Bound {
    pub value: i64,
    pub valid: bool,
}

/// The known bounds on `F(a_1, ..., a_r; m-1)`, each with its validity window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundReport {
    pub tuple: Vec<usize>,
    pub m: usize,
    pub p: usize,
    /// Whether `F(...; m-1)` exists at all (`m >= p + 2`).
    pub exists: bool,
    /// `m + 3p`, for `p >= 3` and `m >= p + 2`.
    pub upper_main: Bound,
    /// `m + p^2`, for `m >= 2p + 2`.
    pub upper_lru_large: Bound,
    /// `3p^2 + p - mp + 2m - 3`, for `p + 3 <= m <= 2p + 1`.
    pub upper_lru_mid: Bound,
    /// `m + p + 2`, for `p >= 2`.
    pub lower: Bound,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// Hypothesis note recorded wherever the `m + 3p` bound is reported.
pub const MAIN_HYPOTHESIS_NOTE: &str =
    "main bound is stated under m >= p; the construction K_{m-p-2} + Γ_p and existence of F(...;m-1) need m >= p+2, which is enforced";

pub fn bounds_report(inst: &ArrowInstance) -> BoundReport {
    let m = inst.m as i64;
    let p = inst.p as i64;
    let exists = m >= p + 2;
    let mut notes = vec![MAIN_HYPOTHESIS_NOTE.to_string()];
    if p < 3 {
        notes.push(format!(
            "p = {p} < 3: upper_main is outside the proven range"
        ));
    }
    BoundReport {
        tuple: inst.tuple.clone(),
        m: inst.m,
        p: inst.p,
        exists,
        upper_main: Bound {
            value: m + 3 * p,
            valid: p >= 3 && exists,
        },
        upper_lru_large: Bound {
            value: m + p * p,
            valid: m >= 2 * p + 2,
        },
        upper_lru_mid: Bound {
            value: 3 * p * p + p - m * p + 2 * m - 3,
            valid: p + 3 <= m && m <= 2 * p + 1,
        },
        lower: Bound {
            value: m + p + 2,
            valid: p >= 2,
        },
        notes,
    }
}

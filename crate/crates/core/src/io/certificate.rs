//! JSON certificates binding a graph, an instance and a result.
//!
//! Certificates are strict: unknown fields are rejected, and [`Certificate::replay`]
//! re-validates every witness against the embedded graph before accepting.

use serde::{Deserialize, Serialize};

use crate::arrowing::{
    arrows, is_free_coloring, ArrowResult, Coloring, SearchConfig, SearchStats, Verdict,
};
use crate::clique::{clique_number, CliqueResult};
use crate::construct::ArrowInstance;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::io::graph6;
use crate::oracle::{CheckReport, CheckVerdict};

pub const SCHEMA_VERSION: &str = "folkman-certificate/1";
pub const TOOL_VERSION: &str = concat!("folkman ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateVerdict {
    Arrows,
    NotArrows,
    CliqueValue,
    CheckReport,
}

impl From<Verdict> for CertificateVerdict {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::Arrows => CertificateVerdict::Arrows,
            Verdict::NotArrows => CertificateVerdict::NotArrows,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub enum Witness {
    /// Color per vertex, in graph6 vertex order, values `1..=r`.
    Coloring(Vec<usize>),
    /// Clique members as 1-based vertex numbers.
    Clique(Vec<usize>),
}

/// How the result was searched for.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchSettings {
    pub deterministic: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub node_budget: Option<u64>,
    /// Names of the automorphisms used for symmetry reduction.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub symmetry: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Certificate {
    pub schema_version: String,
    pub tool_version: String,
    pub verdict: CertificateVerdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph_g6: Option<String>,
    /// `v_i` / `u_i` / `k_i` label per vertex when the graph was constructed.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub instance: Option<ArrowInstance>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub clique_value: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stats: Option<SearchStats>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub search: Option<SearchSettings>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub reports: Vec<CheckReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Certificate {
    fn blank(verdict: CertificateVerdict) -> Self {
        Certificate {
            schema_version: SCHEMA_VERSION.into(),
            tool_version: TOOL_VERSION.into(),
            verdict,
            graph_g6: None,
            labels: None,
            instance: None,
            clique_value: None,
            witness: None,
            stats: None,
            search: None,
            reports: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn for_arrowing(
        g: &Graph,
        labels: Option<Vec<String>>,
        inst: &ArrowInstance,
        result: &ArrowResult,
        search: SearchSettings,
    ) -> Result<Self> {
        let mut c = Certificate::blank(result.verdict.into());
        c.graph_g6 = Some(graph6::encode(g)?);
        c.labels = labels;
        c.instance = Some(inst.clone());
        c.witness = result
            .witness
            .as_ref()
            .map(|w| Witness::Coloring(w.colors.clone()));
        c.stats = Some(result.stats.clone());
        c.search = Some(search);
        Ok(c)
    }

    pub fn for_clique(
        g: &Graph,
        labels: Option<Vec<String>>,
        result: &CliqueResult,
    ) -> Result<Self> {
        let mut c = Certificate::blank(CertificateVerdict::CliqueValue);
        c.graph_g6 = Some(graph6::encode(g)?);
        c.labels = labels;
        c.clique_value = Some(result.size);
        c.witness = Some(Witness::Clique(
            result.witness.iter().map(|v| v + 1).collect(),
        ));
        c.stats = Some(SearchStats {
            nodes: result.nodes_explored,
            prunes: 0,
            wall_ms: None,
        });
        Ok(c)
    }

    pub fn for_reports(reports: Vec<CheckReport>) -> Self {
        let mut c = Certificate::blank(CertificateVerdict::CheckReport);
        c.reports = reports;
        c
    }

    pub fn all_passed(&self) -> bool {
        self.reports.iter().all(CheckReport::passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Certificate(e.to_string()))
    }

    fn graph(&self) -> Result<Graph> {
        let g6 = self
            .graph_g6
            .as_deref()
            .ok_or_else(|| Error::Certificate("graph_g6 is missing".into()))?;
        let g = graph6::decode(g6)?;
        if let Some(labels) = &self.labels {
            if labels.len() != g.n() {
                return Err(Error::Certificate(format!(
                    "{} labels for {} vertices",
                    labels.len(),
                    g.n()
                )));
            }
        }
        Ok(g)
    }

    fn instance(&self) -> Result<&ArrowInstance> {
        let inst = self
            .instance
            .as_ref()
            .ok_or_else(|| Error::Certificate("instance is missing".into()))?;
        inst.validate()
            .map_err(|e| Error::Certificate(e.to_string()))?;
        Ok(inst)
    }

    /// Re-validates the certificate. Free colorings and cliques are replayed
    /// directly; an `arrows` verdict is re-searched under `cfg`; failed check
    /// reports must carry a counterexample that fails again.
    pub fn replay(&self, cfg: &SearchConfig) -> Result<()> {
        let reject = |msg: String| Err(Error::Certificate(msg));
        if self.schema_version != SCHEMA_VERSION {
            return reject(format!(
                "unsupported schema version {:?}",
                self.schema_version
            ));
        }
        match self.verdict {
            CertificateVerdict::NotArrows => {
                let g = self.graph()?;
                let inst = self.instance()?;
                let Some(Witness::Coloring(colors)) = &self.witness else {
                    return reject("not-arrows certificate without a coloring witness".into());
                };
                let coloring = Coloring::new(colors.clone());
                match is_free_coloring(&g, inst, &coloring) {
                    Ok(true) => Ok(()),
                    Ok(false) => reject("witness coloring is not free".into()),
                    Err(e) => reject(format!("witness coloring is malformed: {e}")),
                }
            }
            CertificateVerdict::Arrows => {
                let g = self.graph()?;
                let inst = self.instance()?;
                if self.witness.is_some() {
                    return reject("arrows certificate must not carry a witness".into());
                }
                let result = arrows(&g, inst, cfg)?;
                if result.arrows() {
                    Ok(())
                } else {
                    reject("re-search found a free coloring".into())
                }
            }
            CertificateVerdict::CliqueValue => {
                let g = self.graph()?;
                let value = self
                    .clique_value
                    .ok_or_else(|| Error::Certificate("clique_value is missing".into()))?;
                let Some(Witness::Clique(members)) = &self.witness else {
                    return reject("clique certificate without a clique witness".into());
                };
                if members.iter().any(|&v| v == 0 || v > g.n()) {
                    return reject("clique witness has a vertex out of range".into());
                }
                let set: VertexSet = members.iter().map(|v| v - 1).collect();
                if set.len() != members.len() || set.len() != value || !g.is_clique(&set) {
                    return reject(format!("witness is not a clique of size {value}"));
                }
                let exact = clique_number(&g).size;
                if exact != value {
                    return reject(format!(
                        "clique number is {exact}, certificate says {value}"
                    ));
                }
                Ok(())
            }
            CertificateVerdict::CheckReport => {
                if self.reports.is_empty() {
                    return reject("check-report certificate has no reports".into());
                }
                for r in &self.reports {
                    match (&r.verdict, &r.counterexample) {
                        (CheckVerdict::Pass, None) => {}
                        (CheckVerdict::Pass, Some(_)) => {
                            return reject(format!(
                                "{}: passing report carries a counterexample",
                                r.check_id
                            ))
                        }
                        (CheckVerdict::Fail, None) => {
                            return reject(format!(
                                "{}: failing report lacks a counterexample",
                                r.check_id
                            ))
                        }
                        (CheckVerdict::Fail, Some(cx)) => {
                            if !cx.replay()? {
                                return reject(format!(
                                    "{}: counterexample does not fail on replay",
                                    r.check_id
                                ));
                            }
                        }
                    }
                }
                Ok(())
            }
        }
    }
}

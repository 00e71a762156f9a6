//! On-disk formats: the plain-text edge list, portfolio instance JSON,
//! Gram factor JSON and QAOA result JSON.

use serde::{Deserialize, Serialize};
use wsqopt_core::problem::{PortfolioInstance, WeightedGraph};
use wsqopt_core::relaxation::GramFactor;
use wsqopt_core::variational::QaoaResult;

use crate::error::{CliError, CliResult};

/// `n m` on the first line, then `m` lines `i j w` (0-based). Blank lines
/// and lines starting with `#` are skipped.
pub fn parse_graph(text: &str) -> CliResult<WeightedGraph> {
    let bad = |line: usize, msg: &str| CliError::Format(format!("graph line {line}: {msg}"));
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hl, header) = lines.next().ok_or_else(|| CliError::Format("empty graph file".into()))?;
    let head: Vec<&str> = header.split_whitespace().collect();
    let [n, m] = head.as_slice() else {
        return Err(bad(hl, "expected `n m`"));
    };
    let n: usize = n.parse().map_err(|_| bad(hl, "bad node count"))?;
    let m: usize = m.parse().map_err(|_| bad(hl, "bad edge count"))?;
    let mut edges = Vec::with_capacity(m);
    for (k, line) in lines {
        let f: Vec<&str> = line.split_whitespace().collect();
        let [i, j, w] = f.as_slice() else {
            return Err(bad(k, "expected `i j w`"));
        };
        let i: usize = i.parse().map_err(|_| bad(k, "bad endpoint"))?;
        let j: usize = j.parse().map_err(|_| bad(k, "bad endpoint"))?;
        let w: f64 = w.parse().map_err(|_| bad(k, "bad weight"))?;
        edges.push((i, j, w));
    }
    if edges.len() != m {
        return Err(CliError::Format(format!("header announces {m} edges, found {}", edges.len())));
    }
    WeightedGraph::new(n, edges).map_err(|e| CliError::Format(e.to_string()))
}

/// Shortest round-trip decimal for every weight.
pub fn write_graph(g: &WeightedGraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edges().len());
    for e in g.edges() {
        out.push_str(&format!("{} {} {}\n", e.i, e.j, e.w));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PortfolioFile {
    pub sigma: Vec<Vec<f64>>,
    pub mu: Vec<f64>,
    pub q: f64,
    #[serde(rename = "B")]
    pub budget: usize,
    pub lambda: f64,
    pub seed: Option<u64>,
}

impl PortfolioFile {
    pub fn from_instance(p: &PortfolioInstance, seed: Option<u64>) -> Self {
        Self { sigma: p.sigma.clone(), mu: p.mu.clone(), q: p.q, budget: p.budget, lambda: p.lambda, seed }
    }

    pub fn instance(&self) -> CliResult<PortfolioInstance> {
        PortfolioInstance::new(self.sigma.clone(), self.mu.clone(), self.q, self.budget, self.lambda)
            .map_err(|e| CliError::Format(e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GramFile {
    pub k: usize,
    pub vectors: Vec<Vec<f64>>,
}

impl From<&GramFactor> for GramFile {
    fn from(f: &GramFactor) -> Self {
        Self { k: f.k(), vectors: f.vectors().to_vec() }
    }
}

impl GramFile {
    pub fn factor(&self, g: &WeightedGraph) -> CliResult<GramFactor> {
        if self.vectors.iter().any(|v| v.len() != self.k) {
            return Err(CliError::Format("vector length differs from k".into()));
        }
        GramFactor::new(g, self.vectors.clone()).map_err(|e| CliError::Format(e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QaoaFile {
    pub betas: Vec<f64>,
    pub gammas: Vec<f64>,
    pub energy: f64,
    pub evals: usize,
    pub p_target: Option<f64>,
}

impl From<&QaoaResult> for QaoaFile {
    fn from(r: &QaoaResult) -> Self {
        Self {
            betas: r.params.betas.clone(),
            gammas: r.params.gammas.clone(),
            energy: r.energy,
            evals: r.evals,
            p_target: r.p_target,
        }
    }
}

/// Either instance kind accepted by `solve`.
#[derive(Debug, Clone)]
pub enum Instance {
    Graph(WeightedGraph),
    Portfolio(PortfolioInstance),
}

/// JSON documents (first non-blank character `{`) are portfolios; anything
/// else is parsed as a graph.
pub fn parse_instance(text: &str) -> CliResult<Instance> {
    if text.trim_start().starts_with('{') {
        let file: PortfolioFile = serde_json::from_str(text)?;
        Ok(Instance::Portfolio(file.instance()?))
    } else {
        Ok(Instance::Graph(parse_graph(text)?))
    }
}

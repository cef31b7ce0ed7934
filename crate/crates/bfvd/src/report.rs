//! Machine-readable run records for the bench harness and the CLI.

use serde::Serialize;

/// One record per run. Fields are omitted when they do not apply; reruns
/// with the same configuration reproduce everything except `wall_ms`.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct RunReport {
    pub index: usize,
    pub family: String,
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fen: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fvs_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_agrees: Option<bool>,
    /// kernel graph size before expansion (vertices, edges)
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kernel_vertices: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kernel_edges: Option<usize>,
    /// expanded unweighted kernel size
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expanded_vertices: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expanded_edges: Option<usize>,
    /// linear-kernel size for the i >= 2 rules (vertices + edges)
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bfvd_kernel_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rule_applications: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nodes: Option<u64>,
    pub wall_ms: f64,
    pub timed_out: bool,
}

impl RunReport {
    pub fn new(index: usize, family: &str, seed: u64, n: usize, m: usize) -> RunReport {
        RunReport {
            index,
            family: family.to_string(),
            seed,
            n,
            m,
            i: None,
            j: None,
            k: None,
            r: None,
            d: None,
            fen: None,
            fvs_size: None,
            verdict: None,
            oracle_agrees: None,
            kernel_vertices: None,
            kernel_edges: None,
            expanded_vertices: None,
            expanded_edges: None,
            bfvd_kernel_size: None,
            rule_applications: None,
            nodes: None,
            wall_ms: 0.0,
            timed_out: false,
        }
    }

    /// Human-readable single line.
    pub fn render(&self) -> String {
        let mut parts = vec![format!(
            "[{}] {} seed={} n={} m={}",
            self.index, self.family, self.seed, self.n, self.m
        )];
        if let (Some(i), Some(j)) = (self.i, self.j) {
            parts.push(format!("i={i} j={j}"));
        }
        if let Some(k) = self.k {
            parts.push(format!("k={k}"));
        }
        if let Some(r) = self.r {
            parts.push(format!("r={r}"));
        }
        if let Some(d) = self.d {
            parts.push(format!("d={d}"));
        }
        if let Some(fen) = self.fen {
            parts.push(format!("fen={fen}"));
        }
        if let Some(fvs) = self.fvs_size {
            parts.push(format!("fvs={fvs}"));
        }
        if let Some(v) = self.verdict {
            parts.push(format!("verdict={}", if v { "yes" } else { "no" }));
        }
        if let Some(a) = self.oracle_agrees {
            parts.push(format!("oracle_agrees={a}"));
        }
        if let (Some(n), Some(m)) = (self.kernel_vertices, self.kernel_edges) {
            parts.push(format!("kernel={n}v/{m}e"));
        }
        if let (Some(n), Some(m)) = (self.expanded_vertices, self.expanded_edges) {
            parts.push(format!("expanded={n}v/{m}e"));
        }
        if let Some(s) = self.bfvd_kernel_size {
            parts.push(format!("bfvd_kernel={s}"));
        }
        if let Some(rules) = self.rule_applications {
            parts.push(format!("rules={rules}"));
        }
        parts.push(format!("wall_ms={:.2}", self.wall_ms));
        if self.timed_out {
            parts.push("TIMEOUT".to_string());
        }
        parts.join(" ")
    }
}

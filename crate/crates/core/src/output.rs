//! Tabular and machine-readable rendering of configurations.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::ci::CompleteIntersection;
use crate::cover::{factored_k_top, CoverSpec};
use crate::enumerate::Configuration;
use crate::obstruction::{CiObstruction, InfeasibleReason, ObstructionResult};

/// Header of the CSV rendering.
pub const CSV_HEADER: &str = "m,n,k,l,N,s,multidegree,Lm,Km,pg,summary,ci_status,obstruction";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionRow {
    /// `Solvable`, `Infeasible` or `SearchBudgetExceeded`.
    pub result: String,
    /// `AMGM` or `ExhaustedSearch` when infeasible.
    pub reason: Option<String>,
    #[serde(rename = "S")]
    pub target_sum: i64,
    #[serde(rename = "P")]
    pub target_prod: String,
    pub r: i64,
    pub witnesses: Vec<Vec<i64>>,
}

impl From<&CiObstruction> for ObstructionRow {
    fn from(o: &CiObstruction) -> Self {
        let (result, reason) = match &o.result {
            ObstructionResult::Solvable(_) => ("Solvable", None),
            ObstructionResult::Infeasible(InfeasibleReason::AmGm) => ("Infeasible", Some("AMGM")),
            ObstructionResult::Infeasible(InfeasibleReason::ExhaustedSearch) => {
                ("Infeasible", Some("ExhaustedSearch"))
            }
            ObstructionResult::SearchBudgetExceeded => ("SearchBudgetExceeded", None),
        };
        ObstructionRow {
            result: result.into(),
            reason: reason.map(Into::into),
            target_sum: o.target_sum,
            target_prod: o.target_prod.to_string(),
            r: o.parts,
            witnesses: o.result.witnesses().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowFlags {
    pub surface_mode: bool,
    pub complete_series: bool,
    pub assumptions: Vec<String>,
}

/// One configuration with all of its computed data. Big integers are
/// decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[allow(non_snake_case)]
pub struct OutputRow {
    pub m: i64,
    pub n_total: u64,
    /// Order of the leading cyclic factor.
    pub n: u64,
    pub cover: String,
    pub k: i64,
    pub l: Option<i64>,
    pub N: i64,
    pub s: i64,
    pub multidegree: Vec<i64>,
    pub Lm: String,
    pub Km: String,
    pub Km_factored: String,
    pub pg: String,
    pub behaviors: Vec<String>,
    pub certificates: Vec<String>,
    pub summary: String,
    pub ci_status: String,
    pub obstruction: ObstructionRow,
    pub flags: RowFlags,
}

/// `(n, k, l)` as the tables use them: the leading factor's order and
/// twist, and the second factor's twist.
pub fn leading_parameters(spec: &CoverSpec) -> (u64, i64, Option<i64>) {
    match spec {
        CoverSpec::SimpleCyclic { n, k } => (*n, *k, None),
        CoverSpec::CyclicProduct { factors } => {
            (factors[0].order, factors[0].twist, factors.get(1).map(|f| f.twist))
        }
        CoverSpec::ExplicitSplit { .. } => (spec.degree(), spec.min_twist(), None),
    }
}

/// Evaluates a single `(ci, spec)` pair.
pub fn evaluate(ci: CompleteIntersection, spec: CoverSpec) -> Configuration {
    let (n, k, l) = leading_parameters(&spec);
    Configuration::evaluate(ci.dim(), n, k, l, ci, spec)
}

impl From<&Configuration> for OutputRow {
    fn from(c: &Configuration) -> Self {
        let mut assumptions = Vec::new();
        if c.ci.surface_mode() {
            assumptions.push("surface: Y and X are smooth surfaces".to_string());
        }
        if let CoverSpec::ExplicitSplit { .. } = c.spec {
            assumptions.push("ramification twist supplied by the caller".to_string());
        }
        if !c.analysis.complete_series {
            assumptions.push("k_1 = 1: the morphism is not given by the complete series".to_string());
        }
        OutputRow {
            m: c.m,
            n_total: c.analysis.degree,
            n: c.n,
            cover: c.spec.to_string(),
            k: c.k,
            l: c.l,
            N: c.ci.ambient_dim(),
            s: c.s,
            multidegree: c.ci.degrees().to_vec(),
            Lm: c.analysis.l_top.to_string(),
            Km: c.analysis.k_top.to_string(),
            Km_factored: factored_k_top(&c.analysis),
            pg: c.analysis.geometric_genus.to_string(),
            behaviors: c.verdict.behaviors().iter().map(|b| b.name().to_string()).collect(),
            certificates: c.verdict.certificates.iter().map(ToString::to_string).collect(),
            summary: c.verdict.summary.name().to_string(),
            ci_status: c.verdict.ci_status.to_string(),
            obstruction: ObstructionRow::from(&c.obstruction),
            flags: RowFlags {
                surface_mode: c.ci.surface_mode(),
                complete_series: c.analysis.complete_series,
                assumptions,
            },
        }
    }
}

/// The JSON document: the query that produced the rows, and the rows.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub query: serde_json::Value,
    pub rows: Vec<OutputRow>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Markdown,
    Csv,
    Json,
}

pub fn tuple(xs: &[i64]) -> String {
    let inner: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("({})", inner.join(","))
}

fn obstruction_cell(o: &ObstructionRow) -> String {
    match (&o.reason, o.witnesses.is_empty()) {
        (Some(reason), _) => format!("{}({reason})", o.result),
        (None, false) => {
            let ws: Vec<String> = o.witnesses.iter().map(|w| tuple(w)).collect();
            format!("{}[{}]", o.result, ws.join(";"))
        }
        (None, true) => o.result.clone(),
    }
}

pub fn render_markdown(rows: &[OutputRow]) -> String {
    let mut out = String::from("| m | n | k | l | N | s | d | K^m | p_g |\n");
    out.push_str("|---|---|---|---|---|---|---|---|---|\n");
    for r in rows {
        let l = r.l.map(|l| l.to_string()).unwrap_or_default();
        let km = if r.Km == r.Km_factored {
            r.Km.clone()
        } else {
            format!("{} ({})", r.Km, r.Km_factored)
        };
        writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} | {} | {} | {} |",
            r.m,
            r.n,
            r.k,
            l,
            r.N,
            r.s,
            tuple(&r.multidegree),
            km,
            r.pg
        )
        .expect("writing to a String cannot fail");
    }
    out
}

pub fn render_csv(rows: &[OutputRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER.split(',')).expect("in-memory CSV");
    for r in rows {
        let record = [
            r.m.to_string(),
            r.n.to_string(),
            r.k.to_string(),
            r.l.map(|l| l.to_string()).unwrap_or_default(),
            r.N.to_string(),
            r.s.to_string(),
            tuple(&r.multidegree),
            r.Lm.clone(),
            r.Km.clone(),
            r.pg.clone(),
            r.summary.clone(),
            r.ci_status.clone(),
            obstruction_cell(&r.obstruction),
        ];
        w.write_record(&record).expect("in-memory CSV");
    }
    String::from_utf8(w.into_inner().expect("in-memory CSV")).expect("CSV output is UTF-8")
}

pub fn render_json(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("rows are serialisable");
    s.push('\n');
    s
}

/// One row as a JSON object.
pub fn row_json(row: &OutputRow) -> String {
    serde_json::to_string(row).expect("rows are serialisable")
}

pub fn render(format: Format, report: &Report) -> String {
    match format {
        Format::Markdown => render_markdown(&report.rows),
        Format::Csv => render_csv(&report.rows),
        Format::Json => render_json(report),
    }
}

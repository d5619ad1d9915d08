//! Invariant reports for evaluated groups.

use std::fmt::Write as _;
use std::time::Instant;

use grp_core::bounds::CS_TABLE;
use grp_core::group::{prime_factorization, Finding};
use grp_core::{AnyGroup, SeriesReport};
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub check: String,
    pub index: Option<usize>,
    pub status: String,
    pub detail: String,
}

impl From<&Finding> for CheckRecord {
    fn from(f: &Finding) -> Self {
        CheckRecord {
            check: f.check.to_string(),
            index: f.index,
            status: f.status.as_str().to_string(),
            detail: f.detail.clone(),
        }
    }
}

/// Field order here is the JSON key order.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub spec: String,
    pub order: u128,
    pub order_factored: Vec<(u128, u32)>,
    pub solvable: bool,
    pub c: Option<u32>,
    pub d: Option<usize>,
    pub n: Vec<u32>,
    pub derived_orders: Vec<u128>,
    pub checks: Vec<CheckRecord>,
    pub engine: String,
    pub elapsed_ms: u64,
}

/// Whether `r` has the minimal composition length for its derived length.
pub fn in_cs(r: &SeriesReport) -> bool {
    match (r.d, r.c) {
        (Some(d), Some(c)) => CS_TABLE.get(d).is_some_and(|&v| v == c as u64),
        _ => false,
    }
}

impl Report {
    /// Derived series of `g`, plus the structural checks when `checks` is set.
    pub fn build(spec: &str, g: &AnyGroup, checks: bool, started: Instant) -> grp_core::Result<Report> {
        let (series, findings) = if checks {
            g.analyze(in_cs)?
        } else {
            (g.series()?, Vec::new())
        };
        let order = series.order();
        Ok(Report {
            spec: spec.to_string(),
            order,
            order_factored: prime_factorization(order),
            solvable: series.solvable,
            c: series.c,
            d: series.d,
            n: series.n.clone(),
            derived_orders: series.derived_orders.clone(),
            checks: findings.iter().map(CheckRecord::from).collect(),
            engine: g.engine_kind().as_str().to_string(),
            elapsed_ms: started.elapsed().as_millis() as u64,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let factored: Vec<String> = self
            .order_factored
            .iter()
            .map(|&(p, e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        let opt = |x: Option<String>| x.unwrap_or_else(|| "-".into());
        writeln!(s, "spec      {}", self.spec).unwrap();
        writeln!(s, "order     {} = {}", self.order, if factored.is_empty() { "1".into() } else { factored.join(" * ") }).unwrap();
        writeln!(s, "solvable  {}", self.solvable).unwrap();
        writeln!(s, "c         {}", opt(self.c.map(|c| c.to_string()))).unwrap();
        writeln!(s, "d         {}", opt(self.d.map(|d| d.to_string()))).unwrap();
        writeln!(s, "n         {:?}", self.n).unwrap();
        writeln!(s, "derived   {:?}", self.derived_orders).unwrap();
        writeln!(s, "engine    {}", self.engine).unwrap();
        for c in &self.checks {
            writeln!(s, "{}", render_check(c)).unwrap();
        }
        write!(s, "elapsed   {} ms", self.elapsed_ms).unwrap();
        s
    }
}

pub fn render_check(c: &CheckRecord) -> String {
    let name = match c.index {
        Some(i) => format!("{}[{}]", c.check, i),
        None => c.check.clone(),
    };
    format!("check {:<10} {:<15} {}", name, c.status, c.detail)
}

/// JSON schema for [`Report`], shipped with the CLI.
pub const REPORT_SCHEMA: &str = include_str!("../schema/report.schema.json");

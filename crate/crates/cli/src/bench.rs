//! Wall-clock comparison of the three ways to find equal sums.

use std::io::Write;
use std::time::Instant;

use equalpow::oracle::{ComponentRange, NAIVE_LIMIT_MAX};
use equalpow::{
    build_index_with, gen_quadruple, multi_representations, naive_multi_representations, Exponent,
};

use crate::error::{CliError, Status};

pub const BENCH_CSV_HEADER: &str =
    "method,parameter,wall_time_ms,solutions_found,pairs,quartic_model_ops";

/// One CSV row. `pairs` and `quartic_model_ops` are empty for the generator.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub method: &'static str,
    pub parameter: u64,
    pub wall_time_ms: f64,
    pub solutions_found: usize,
    pub pairs: Option<u64>,
    pub quartic_model_ops: Option<u128>,
}

impl BenchRow {
    pub fn to_csv(&self) -> String {
        let opt = |v: Option<String>| v.unwrap_or_default();
        format!(
            "{},{},{:.3},{},{},{}",
            self.method,
            self.parameter,
            self.wall_time_ms,
            self.solutions_found,
            opt(self.pairs.map(|p| p.to_string())),
            opt(self.quartic_model_ops.map(|p| p.to_string())),
        )
    }
}

fn millis(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

/// Runs every workload; naive and indexed searches must agree exactly.
pub fn run_bench(
    n: Exponent,
    limits: &[u32],
    c1s: &[u64],
    naive: bool,
    budget: u64,
) -> Result<Vec<BenchRow>, CliError> {
    let mut rows = Vec::new();
    for &c1 in c1s {
        let start = Instant::now();
        let q = gen_quadruple(c1)?;
        let wall_time_ms = millis(start);
        rows.push(BenchRow {
            method: "generator",
            parameter: c1,
            wall_time_ms,
            solutions_found: usize::from(!q.is_trivial()),
            pairs: None,
            quartic_model_ops: None,
        });
    }
    let range = ComponentRange::Positive;
    for &limit in limits {
        let model = Some(u128::from(limit).pow(4));
        let start = Instant::now();
        let index = build_index_with(n, limit, range, budget)?;
        let reps = multi_representations(&index, 2)?;
        rows.push(BenchRow {
            method: "oracle-mitm",
            parameter: limit.into(),
            wall_time_ms: millis(start),
            solutions_found: reps.len(),
            pairs: Some(index.pair_count()),
            quartic_model_ops: model,
        });
        if naive && limit <= NAIVE_LIMIT_MAX {
            let start = Instant::now();
            let brute = naive_multi_representations(n, limit, range, 2)?;
            rows.push(BenchRow {
                method: "naive-pairs",
                parameter: limit.into(),
                wall_time_ms: millis(start),
                solutions_found: brute.len(),
                pairs: Some(range.pair_count(limit)),
                quartic_model_ops: model,
            });
            if brute != reps {
                return Err(CliError::SelfCheck(format!(
                    "naive and indexed searches disagree at N = {limit}"
                )));
            }
        }
    }
    Ok(rows)
}

pub fn cmd_bench(
    n: Exponent,
    limits: &[u32],
    c1s: &[u64],
    naive: bool,
    budget: u64,
    out: &mut dyn Write,
) -> Result<Status, CliError> {
    if naive {
        for &limit in limits.iter().filter(|&&l| l > NAIVE_LIMIT_MAX) {
            eprintln!("note: skipping naive-pairs at N = {limit} (limit {NAIVE_LIMIT_MAX})");
        }
    }
    let rows = run_bench(n, limits, c1s, naive, budget)?;
    writeln!(out, "{BENCH_CSV_HEADER}")?;
    for row in &rows {
        writeln!(out, "{}", row.to_csv())?;
    }
    Ok(Status::Found)
}

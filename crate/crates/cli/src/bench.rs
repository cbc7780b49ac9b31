//! Operation-count scaling measurements.

use std::fmt::Write;
use std::time::Instant;

use artemis_core::engine::{color_artemis_with, find_special_even_pair_counted};
use artemis_core::{EngineError, OpCounters};

use crate::generate::{generate, Family, GenerateError};

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    pub contractions: usize,
    pub colors: usize,
    pub counters: OpCounters,
    /// Operations of one special-even-pair search on the input graph.
    pub pair_ops: u64,
    pub seconds: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchTable {
    pub family: Family,
    pub rows: Vec<BenchRow>,
    /// Log-log slope of total operations against `n²m`.
    pub slope_total: Option<f64>,
    /// Log-log slope of one pair search against `n·m`.
    pub slope_pair: Option<f64>,
}

#[derive(Debug, thiserror::Error)]
pub enum BenchError {
    #[error(transparent)]
    Generate(#[from] GenerateError),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

/// Edge density used when the caller does not choose one.
pub const DEFAULT_DENSITY: f64 = 0.5;

/// Least-squares slope of `ln y` on `ln x`; `None` below two points or when
/// all `x` coincide.
pub fn log_log_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let k = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / k;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// One row per size; instance `i` uses seed `seed + i`.
pub fn bench(
    family: Family,
    sizes: &[usize],
    density: f64,
    seed: u64,
) -> Result<BenchTable, BenchError> {
    let mut rows = Vec::with_capacity(sizes.len());
    for (i, &n) in sizes.iter().enumerate() {
        let graph = generate(family, n, density, seed.wrapping_add(i as u64))?;
        let mut single = OpCounters::default();
        find_special_even_pair_counted(&graph, &mut single)?;
        let start = Instant::now();
        let run = color_artemis_with(&graph, |_| {})?;
        rows.push(BenchRow {
            n,
            m: graph.m(),
            contractions: run.trace.len(),
            colors: run.coloring.num_colors,
            counters: run.counters,
            pair_ops: single.total(),
            seconds: start.elapsed().as_secs_f64(),
        });
    }
    let fit = |x: fn(&BenchRow) -> f64, y: fn(&BenchRow) -> f64| {
        let points: Vec<_> = rows
            .iter()
            .filter(|r| r.m > 0)
            .map(|r| (x(r), y(r)))
            .collect();
        log_log_slope(&points)
    };
    let slope_total = fit(
        |r| (r.n as f64).powi(2) * r.m as f64,
        |r| r.counters.total().max(1) as f64,
    );
    let slope_pair = fit(|r| r.n as f64 * r.m as f64, |r| r.pair_ops.max(1) as f64);
    Ok(BenchTable {
        family,
        rows,
        slope_total,
        slope_pair,
    })
}

impl BenchTable {
    pub fn render(&self) -> String {
        let mut out = format!("# family {}\n", self.family);
        out.push_str("n\tm\tcontractions\tcolors\tops_interesting\tops_outer_path\tops_even_pair\tops_total\tpair_ops\tseconds\n");
        for r in &self.rows {
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{:.6}",
                r.n,
                r.m,
                r.contractions,
                r.colors,
                r.counters.interesting,
                r.counters.outer_path,
                r.counters.even_pair,
                r.counters.total(),
                r.pair_ops,
                r.seconds
            )
            .expect("writing to a String");
        }
        if let Some(s) = self.slope_total {
            writeln!(out, "# slope of ops_total against n^2*m: {s:.3}")
                .expect("writing to a String");
        }
        if let Some(s) = self.slope_pair {
            writeln!(out, "# slope of pair_ops against n*m: {s:.3}").expect("writing to a String");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_fit() {
        let pts: Vec<_> = [1.0, 2.0, 4.0, 8.0]
            .iter()
            .map(|&x: &f64| (x, 3.0 * x.powi(2)))
            .collect();
        assert!((log_log_slope(&pts).unwrap() - 2.0).abs() < 1e-9);
        assert_eq!(log_log_slope(&pts[..1]), None);
        assert_eq!(log_log_slope(&[(2.0, 1.0), (2.0, 5.0)]), None);
    }

    #[test]
    fn one_size_has_no_slope() {
        let table = bench(Family::Chordal, &[20], DEFAULT_DENSITY, 1).unwrap();
        assert_eq!(table.rows.len(), 1);
        assert_eq!(table.slope_total, None);
        assert!(!table.render().contains("slope"));
    }
}

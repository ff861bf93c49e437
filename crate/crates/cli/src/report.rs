//! Table-style experiment rows: predicted vs empirical label sizes next to
//! the closed-form bounds.

use std::fmt::Write as _;

use powerlabel::labeling::{predicted_threshold, sweep_thresholds, theoretical_bounds};
use powerlabel::{constants, Graph, Mode};

pub const HEADER: &str = "dataset,n,m,max_degree,alpha,predicted_threshold,predicted_bits,\
empirical_threshold,empirical_bits,bound_bits,sparse_bits,bd_bits,aktz_bits,mode,seed";

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentReport {
    pub dataset: String,
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub alpha: Option<f64>,
    pub predicted_threshold: Option<usize>,
    pub predicted_bits: Option<usize>,
    pub empirical_threshold: usize,
    pub empirical_bits: usize,
    pub bound_bits: Option<u64>,
    pub sparse_bits: Option<u64>,
    pub bd_bits: Option<u64>,
    pub aktz_bits: Option<u64>,
    pub mode: Mode,
    pub seed: Option<u64>,
}

impl ExperimentReport {
    /// Fields that need `alpha > 1` or `n >= 3` are left empty when those
    /// do not hold.
    pub fn compute(
        dataset: &str,
        g: &Graph,
        alpha: Option<f64>,
        mode: Mode,
        seed: Option<u64>,
    ) -> Self {
        let n = g.vertex_count();
        let m = g.edge_count();
        let max_degree = g.max_degree();
        let sweep = sweep_thresholds(g, mode);
        let predicted_threshold = alpha.and_then(|a| predicted_threshold(n, a).ok());
        let predicted_bits = predicted_threshold.map(|t| sweep.max_label_at(t));
        let bounds = alpha.and_then(|a| {
            let k = constants(n, a).ok()?;
            let c = if n == 0 { 0.0 } else { m as f64 / n as f64 };
            theoretical_bounds(n, max_degree, c, a, k.c_prime).ok()
        });
        ExperimentReport {
            dataset: dataset.to_string(),
            n,
            m,
            max_degree,
            alpha,
            predicted_threshold,
            predicted_bits,
            empirical_threshold: sweep.empirical_threshold,
            empirical_bits: sweep.empirical_max_label,
            bound_bits: bounds.map(|b| b.powerlaw_bound),
            sparse_bits: bounds.map(|b| b.sparse_bound),
            bd_bits: bounds.map(|b| b.bd_bound),
            aktz_bits: bounds.map(|b| b.aktz_bound),
            mode,
            seed,
        }
    }

    pub fn csv_row(&self) -> String {
        fn opt<T: ToString>(v: Option<T>) -> String {
            v.map(|x| x.to_string()).unwrap_or_default()
        }
        let mut s = String::new();
        write!(
            s,
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.dataset,
            self.n,
            self.m,
            self.max_degree,
            opt(self.alpha),
            opt(self.predicted_threshold),
            opt(self.predicted_bits),
            self.empirical_threshold,
            self.empirical_bits,
            opt(self.bound_bits),
            opt(self.sparse_bits),
            opt(self.bd_bits),
            opt(self.aktz_bits),
            self.mode,
            opt(self.seed),
        )
        .expect("writing to a String");
        s
    }
}

//! Maximum thin and fat label sizes for every threshold, computed from the
//! degree profile without materializing labels.

use super::{id_bits, Mode};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepRow {
    pub threshold: usize,
    /// Largest thin label in bits, 0 if no vertex is thin.
    pub max_thin: usize,
    /// Largest fat label in bits, 0 if no vertex is fat.
    pub max_fat: usize,
}

impl SweepRow {
    pub fn max_bits(&self) -> usize {
        self.max_thin.max(self.max_fat)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdSweep {
    pub mode: Mode,
    pub idbits: usize,
    /// One row per threshold `1..=max_degree + 1`, in order.
    pub rows: Vec<SweepRow>,
    pub empirical_threshold: usize,
    pub empirical_max_label: usize,
}

impl ThresholdSweep {
    /// The row for threshold `t`. Thresholds past `max_degree + 1` behave
    /// like `max_degree + 1` (every vertex thin); 0 behaves like 1.
    pub fn row(&self, t: usize) -> SweepRow {
        let idx = t.max(1).min(self.rows.len()) - 1;
        SweepRow {
            threshold: t.max(1),
            ..self.rows[idx]
        }
    }

    pub fn max_label_at(&self, t: usize) -> usize {
        self.row(t).max_bits()
    }
}

pub fn sweep_thresholds(g: &Graph, mode: Mode) -> ThresholdSweep {
    let n = g.vertex_count();
    let idbits = id_bits(n);
    let hist = g.degree_histogram();
    let dmax = hist.max_degree();
    let at_least = hist.suffix_counts();
    let fat_list_len = match mode {
        Mode::Concat => concat_fat_entries(g, dmax),
        Mode::Bitstring => Vec::new(),
    };

    let mut rows = Vec::with_capacity(dmax + 1);
    // Largest degree strictly below the current threshold, if any vertex has it.
    let mut thin_max_degree: Option<usize> = None;
    for t in 1..=dmax + 1 {
        if hist.count(t - 1) > 0 {
            thin_max_degree = Some(t - 1);
        }
        let max_thin = thin_max_degree.map_or(0, |d| 1 + idbits + d * idbits);
        let fat = at_least[t];
        let max_fat = if fat == 0 {
            0
        } else {
            match mode {
                Mode::Bitstring => 1 + idbits + fat,
                Mode::Concat => 1 + idbits + fat_list_len[t] * idbits,
            }
        };
        rows.push(SweepRow {
            threshold: t,
            max_thin,
            max_fat,
        });
    }

    let best = rows
        .iter()
        .min_by_key(|r| (r.max_bits(), r.threshold))
        .copied()
        .expect("at least one threshold");
    ThresholdSweep {
        mode,
        idbits,
        empirical_threshold: best.threshold,
        empirical_max_label: best.max_bits(),
        rows,
    }
}

/// For every threshold `t` in `0..=dmax + 1`, the largest number of fat
/// neighbors of any fat vertex.
///
/// Vertex `v` has at least `j` fat neighbors at threshold `t` iff the `j`-th
/// largest of `min(deg u, deg v)` over its neighbors `u` is `>= t`. Record
/// the best `j` per value and take suffix maxima.
fn concat_fat_entries(g: &Graph, dmax: usize) -> Vec<usize> {
    let mut best = vec![0usize; dmax + 2];
    let mut weights: Vec<usize> = Vec::new();
    for v in 0..g.vertex_count() {
        let dv = g.degree(v);
        weights.clear();
        weights.extend(g.neighbors(v).iter().map(|&u| g.degree(u as usize).min(dv)));
        weights.sort_unstable_by(|a, b| b.cmp(a));
        for (j, &w) in weights.iter().enumerate() {
            if best[w] < j + 1 {
                best[w] = j + 1;
            }
        }
    }
    for t in (0..=dmax).rev() {
        best[t] = best[t].max(best[t + 1]);
    }
    best
}

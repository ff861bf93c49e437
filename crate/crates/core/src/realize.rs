//! Degree-sequence feasibility (Erdős–Gallai) and greedy realization
//! (Havel–Hakimi).

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{DegreeSequence, Graph};

/// Returns true iff some simple graph has exactly these degrees.
pub fn is_graphical(seq: &DegreeSequence) -> bool {
    erdos_gallai_violation(&seq.0).is_none()
}

/// First failing Erdős–Gallai index `k` (1-based), or `Some(0)` for an odd
/// degree sum. `None` means the sequence is graphical.
fn erdos_gallai_violation(degrees: &[usize]) -> Option<usize> {
    let n = degrees.len();
    let total: u128 = degrees.iter().map(|&d| d as u128).sum();
    if total % 2 == 1 {
        return Some(0);
    }
    let mut d = degrees.to_vec();
    d.sort_unstable_by(|a, b| b.cmp(a));

    let mut prefix = vec![0u128; n + 1];
    for i in 0..n {
        prefix[i + 1] = prefix[i] + d[i] as u128;
    }

    // `ge` = number of entries >= k; non-increasing as k grows.
    let mut ge = n;
    for k in 1..=n {
        while ge > 0 && d[ge - 1] < k {
            ge -= 1;
        }
        let j = ge.max(k);
        let lhs = prefix[k];
        let rhs =
            (k as u128) * (k as u128 - 1) + (k as u128) * (j - k) as u128 + (prefix[n] - prefix[j]);
        if lhs > rhs {
            return Some(k);
        }
    }
    None
}

/// Human-readable reason a sequence is not graphical, if it is not.
pub fn graphical_violation(seq: &DegreeSequence) -> Option<String> {
    erdos_gallai_violation(&seq.0).map(|k| match k {
        0 => "degree sum is odd".to_string(),
        k => format!("Erdős–Gallai inequality fails at k = {k}"),
    })
}

/// Realizes a graphical sequence. Vertex `i` of the result has degree
/// `seq[i]`.
///
/// Repeatedly takes the vertex of highest residual degree (lowest index on
/// ties) and joins it to the vertices with the next-highest residual
/// degrees, again preferring lower indices on ties.
pub fn havel_hakimi(seq: &DegreeSequence) -> Result<Graph> {
    if let Some(reason) = graphical_violation(seq) {
        return Err(Error::NotGraphical(reason));
    }
    let n = seq.len();
    let mut queue = ResidualQueue::new(seq.0.iter().copied().enumerate());
    let mut edges = Vec::with_capacity(seq.sum() / 2);
    let leftover = queue.realize(&mut edges);
    if let Some(&(v, r)) = leftover.first() {
        // Unreachable for graphical input; kept as a hard error.
        return Err(Error::NotGraphical(format!(
            "vertex {v} left with residual degree {r}"
        )));
    }
    Ok(Graph::from_edges(n, edges))
}

/// Vertices bucketed by residual degree, for greedy realization.
pub(crate) struct ResidualQueue {
    buckets: Vec<BTreeSet<u32>>,
    top: usize,
}

impl ResidualQueue {
    /// Builds the queue from `(vertex, residual)` pairs. Vertices with
    /// residual 0 are not tracked.
    pub(crate) fn new<I: IntoIterator<Item = (usize, usize)>>(entries: I) -> Self {
        let mut buckets: Vec<BTreeSet<u32>> = Vec::new();
        for (v, r) in entries {
            if r == 0 {
                continue;
            }
            if r >= buckets.len() {
                buckets.resize_with(r + 1, BTreeSet::new);
            }
            buckets[r].insert(v as u32);
        }
        let top = buckets.len().saturating_sub(1);
        ResidualQueue { buckets, top }
    }

    fn settle_top(&mut self) {
        while self.top > 0 && self.buckets[self.top].is_empty() {
            self.top -= 1;
        }
    }

    /// Removes `r` units of demand from the `r` vertices of highest
    /// residual (lowest index on ties), one unit each, and returns them.
    /// Returns fewer than `r` vertices when fewer have positive residual.
    pub(crate) fn take_top(&mut self, r: usize) -> Vec<usize> {
        let mut partners: Vec<(u32, usize)> = Vec::with_capacity(r);
        self.settle_top();
        let mut level = self.top;
        while partners.len() < r && level > 0 {
            let need = r - partners.len();
            partners.extend(self.buckets[level].iter().take(need).map(|&u| (u, level)));
            level -= 1;
        }
        for &(u, level) in &partners {
            self.buckets[level].remove(&u);
            if level > 1 {
                self.buckets[level - 1].insert(u);
            }
        }
        partners.into_iter().map(|(u, _)| u as usize).collect()
    }

    /// Greedy realization among the queued vertices. Appends edges to `out`
    /// and returns the vertices whose demand could not be met, with their
    /// remaining residual. The list is empty iff the queued residuals formed
    /// a graphical sequence.
    pub(crate) fn realize(&mut self, out: &mut Vec<(usize, usize)>) -> Vec<(usize, usize)> {
        let mut leftover = Vec::new();
        loop {
            self.settle_top();
            if self.top == 0 {
                break;
            }
            let r = self.top;
            let v = *self.buckets[r].iter().next().expect("non-empty bucket");
            self.buckets[r].remove(&v);

            let partners = self.take_top(r);
            out.extend(partners.iter().map(|&u| (v as usize, u)));
            if partners.len() < r {
                leftover.push((v as usize, r - partners.len()));
            }
        }
        leftover
    }
}

//! Simple undirected graphs in compressed sparse row form, plus degree
//! statistics.

use crate::error::{Error, Result};

/// A simple undirected graph over dense vertex indices `0..n`.
///
/// Adjacency is stored in CSR layout: the neighbors of `v` are
/// `targets[offsets[v]..offsets[v + 1]]`, strictly ascending. Every edge is
/// stored in both directions.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            offsets: vec![0; n + 1],
            targets: Vec::new(),
        }
    }

    /// Builds a graph from an arbitrary edge iterator. Self-loops are dropped
    /// and parallel edges collapsed; orientation is ignored.
    ///
    /// Panics if an endpoint is `>= n` or `n` does not fit in `u32`.
    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        assert!(n <= u32::MAX as usize, "vertex count exceeds u32 range");
        let mut arcs: Vec<(u32, u32)> = Vec::new();
        for (u, v) in edges {
            assert!(u < n && v < n, "edge ({u}, {v}) out of range for n = {n}");
            if u == v {
                continue;
            }
            arcs.push((u as u32, v as u32));
            arcs.push((v as u32, u as u32));
        }
        arcs.sort_unstable();
        arcs.dedup();

        let mut offsets = vec![0usize; n + 1];
        for &(u, _) in &arcs {
            offsets[u as usize + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let targets = arcs.into_iter().map(|(_, v)| v).collect();
        Graph { offsets, targets }
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        Self::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len().saturating_sub(1)
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.vertex_count()).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count())
            .map(|v| self.degree(v))
            .max()
            .unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.neighbors(a).binary_search(&(b as u32)).is_ok()
    }

    /// Each undirected edge once, as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.vertex_count()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .map(|&v| v as usize)
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn degree_histogram(&self) -> DegreeHistogram {
        DegreeHistogram::from_degrees((0..self.vertex_count()).map(|v| self.degree(v)))
    }

    /// Checks the structural invariants: no loops, strictly ascending
    /// adjacency (hence no duplicates), and symmetry.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let n = self.vertex_count();
        if self.targets.len() % 2 != 0 {
            return Err("odd number of stored arcs".into());
        }
        for u in 0..n {
            let adj = self.neighbors(u);
            for w in adj.windows(2) {
                if w[0] >= w[1] {
                    return Err(format!("adjacency of {u} not strictly ascending"));
                }
            }
            for &v in adj {
                let v = v as usize;
                if v >= n {
                    return Err(format!("neighbor {v} of {u} out of range"));
                }
                if v == u {
                    return Err(format!("self-loop at {u}"));
                }
                if self.neighbors(v).binary_search(&(u as u32)).is_err() {
                    return Err(format!("edge ({u}, {v}) is not symmetric"));
                }
            }
        }
        Ok(())
    }
}

/// Counts of vertices per degree.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DegreeHistogram {
    /// `counts[k]` is the number of vertices of degree `k`; the last entry is
    /// non-zero whenever the histogram is non-empty.
    counts: Vec<usize>,
    n: usize,
}

impl DegreeHistogram {
    pub fn from_degrees<I: IntoIterator<Item = usize>>(degrees: I) -> Self {
        let mut counts = Vec::new();
        let mut n = 0;
        for d in degrees {
            if d >= counts.len() {
                counts.resize(d + 1, 0);
            }
            counts[d] += 1;
            n += 1;
        }
        DegreeHistogram { counts, n }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Largest degree present; 0 for an empty histogram.
    pub fn max_degree(&self) -> usize {
        self.counts.len().saturating_sub(1)
    }

    /// Number of vertices of degree exactly `k`.
    pub fn count(&self, k: usize) -> usize {
        self.counts.get(k).copied().unwrap_or(0)
    }

    /// `(degree, count)` pairs with non-zero count, ascending by degree.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(k, &c)| (k, c))
    }

    /// Number of vertices of degree `>= k`, for every `k` in `0..=max_degree+1`.
    pub fn suffix_counts(&self) -> Vec<usize> {
        let mut out = vec![0; self.counts.len().max(1) + 1];
        for k in (0..self.counts.len()).rev() {
            out[k] = out[k + 1] + self.counts[k];
        }
        out
    }
}

/// A list of vertex degrees, one per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DegreeSequence(pub Vec<usize>);

impl DegreeSequence {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn histogram(&self) -> DegreeHistogram {
        DegreeHistogram::from_degrees(self.0.iter().copied())
    }
}

impl From<Vec<usize>> for DegreeSequence {
    fn from(v: Vec<usize>) -> Self {
        DegreeSequence(v)
    }
}

/// Returns whether `mapping` embeds `h` into `g` as an induced subgraph:
/// for all pairs of `h` vertices, adjacency in `h` equals adjacency of the
/// images in `g`. `mapping[x]` is the image of `h` vertex `x`.
pub fn is_induced_subgraph(g: &Graph, h: &Graph, mapping: &[usize]) -> Result<bool> {
    let hn = h.vertex_count();
    if mapping.len() != hn {
        return Err(Error::Domain(format!(
            "mapping has {} entries but H has {hn} vertices",
            mapping.len()
        )));
    }
    let n = g.vertex_count();
    let mut seen = std::collections::HashSet::with_capacity(hn);
    for &img in mapping {
        if img >= n {
            return Err(Error::VertexOutOfRange { vertex: img, n });
        }
        if !seen.insert(img) {
            return Err(Error::NotInjective(img));
        }
    }
    for a in 0..hn {
        for b in a + 1..hn {
            if h.has_edge(a, b) != g.has_edge(mapping[a], mapping[b]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_histogram() {
        let h = Graph::complete(3).degree_histogram();
        assert_eq!(h.iter().collect::<Vec<_>>(), vec![(2, 3)]);
        assert_eq!(h.max_degree(), 2);
        assert_eq!(h.vertex_count(), 3);
    }

    #[test]
    fn path_histogram() {
        let h = Graph::path(3).degree_histogram();
        assert_eq!(h.iter().collect::<Vec<_>>(), vec![(1, 2), (2, 1)]);
        assert_eq!(h.max_degree(), 2);
    }

    #[test]
    fn empty_histogram() {
        let h = Graph::empty(0).degree_histogram();
        assert_eq!(h.vertex_count(), 0);
        assert_eq!(h.max_degree(), 0);
        assert_eq!(h.count(0), 0);
    }

    #[test]
    fn from_edges_normalizes() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (1, 1), (2, 1), (1, 2)]);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
        g.check_invariants().unwrap();
    }

    #[test]
    fn suffix_counts() {
        let h = DegreeHistogram::from_degrees([0, 1, 1, 3]);
        assert_eq!(h.suffix_counts(), vec![4, 3, 1, 1, 0]);
    }

    #[test]
    fn induced_single_vertex() {
        let h = Graph::empty(1);
        let g = Graph::path(5);
        for t in 0..5 {
            assert!(is_induced_subgraph(&g, &h, &[t]).unwrap());
        }
    }

    #[test]
    fn induced_edge_into_path_ends() {
        let h = Graph::complete(2);
        let g = Graph::path(3);
        assert!(!is_induced_subgraph(&g, &h, &[0, 2]).unwrap());
        assert!(is_induced_subgraph(&g, &h, &[0, 1]).unwrap());
    }

    #[test]
    fn induced_p3_in_k4_minus_edge() {
        // K4 without (0, 3); P3 as 0 - 1 - 3.
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);
        let h = Graph::path(3);
        assert!(is_induced_subgraph(&g, &h, &[0, 1, 3]).unwrap());

        // Brute force over all injective maps: exactly those sending the P3
        // endpoints onto {0, 3} succeed.
        let mut hits = 0;
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    if a == b || b == c || a == c {
                        continue;
                    }
                    let ok = is_induced_subgraph(&g, &h, &[a, b, c]).unwrap();
                    let endpoints = (a.min(c), a.max(c));
                    assert_eq!(ok, endpoints == (0, 3));
                    hits += ok as usize;
                }
            }
        }
        assert_eq!(hits, 4);
    }

    #[test]
    fn induced_mapping_errors() {
        let g = Graph::path(3);
        let h = Graph::complete(2);
        assert!(matches!(
            is_induced_subgraph(&g, &h, &[0, 7]),
            Err(Error::VertexOutOfRange { vertex: 7, n: 3 })
        ));
        assert!(matches!(
            is_induced_subgraph(&g, &h, &[1, 1]),
            Err(Error::NotInjective(1))
        ));
    }
}

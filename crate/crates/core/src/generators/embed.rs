//! Embedding an arbitrary graph on `i1` vertices as an induced subgraph of
//! a proper power-law graph on `n` vertices.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{is_induced_subgraph, Graph};
use crate::powerlaw::{constants, verify_proper};
use crate::realize::ResidualQueue;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub graph: Graph,
    pub h: Graph,
    /// `mapping[x]` is the vertex of `graph` hosting vertex `x` of `h`.
    pub mapping: Vec<usize>,
    /// Degree each vertex was assigned by the partition; equals its final
    /// degree.
    pub target_degree: Vec<usize>,
}

fn infeasible(what: &str, detail: String) -> Error {
    Error::Infeasible(format!("{what} does not hold ({detail})"))
}

fn check_targets(phase: &str, degree: &[usize], target: &[usize]) -> Result<()> {
    match (0..degree.len()).find(|&v| degree[v] > target[v]) {
        Some(v) => Err(Error::Infeasible(format!(
            "{phase}: vertex {v} has degree {} above its target {}",
            degree[v], target[v]
        ))),
        None => Ok(()),
    }
}

/// Builds a proper power-law graph on `n` vertices containing `h` as an
/// induced subgraph. `h` must have exactly `i1` vertices and `alpha > 2`.
///
/// Vertices are laid out by partition: `floor(Cn) - i1` vertices of target
/// degree 1, then `floor(Cn / i^alpha)` of target `i` for `2 <= i < i1`,
/// then singletons of target `i1, i1 + 1, ...`. `h` is placed on singletons
/// chosen by `seed`; the remaining demand is met greedily.
pub fn embed_lower_bound(h: &Graph, n: usize, alpha: f64, seed: u64) -> Result<Embedding> {
    if !(alpha > 2.0) {
        return Err(Error::Domain(format!("alpha must exceed 2, got {alpha}")));
    }
    let consts = constants(n, alpha)?;
    let i1 = consts.i1;
    if h.vertex_count() != i1 {
        return Err(Error::Domain(format!(
            "H must have i1 = {i1} vertices, got {}",
            h.vertex_count()
        )));
    }

    let cn = consts.ideal_count(1).floor() as usize;
    if cn < i1 {
        return Err(infeasible(
            "⌊Cn⌋ − i₁ ≥ 0",
            format!("⌊Cn⌋ = {cn}, i₁ = {i1}"),
        ));
    }
    let v1 = cn - i1;
    let mut target: Vec<usize> = Vec::with_capacity(n);
    target.resize(v1, 1);
    for i in 2..i1 {
        let size = consts.ideal_count(i).floor() as usize;
        target.extend(std::iter::repeat_n(i, size));
    }
    let n_prime = target.len();
    if n_prime > n || n - n_prime < i1 {
        return Err(infeasible(
            "n − n′ ≥ i₁",
            format!("n = {n}, n′ = {n_prime}, i₁ = {i1}"),
        ));
    }
    let singletons = n - n_prime;
    target.extend((0..singletons).map(|j| i1 + j));
    if target[n - 1] >= n {
        return Err(infeasible(
            "i₁ + n − n′ − 1 < n",
            format!("largest target {} on {n} vertices", target[n - 1]),
        ));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mapping: Vec<usize> = rand::seq::index::sample(&mut rng, singletons, i1)
        .into_iter()
        .map(|j| n_prime + j)
        .collect();
    let mut in_h = vec![false; n];
    for &x in &mapping {
        in_h[x] = true;
    }

    let mut degree = vec![0usize; n];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let add = |u: usize, v: usize, degree: &mut [usize], edges: &mut Vec<(usize, usize)>| {
        degree[u] += 1;
        degree[v] += 1;
        edges.push((u, v));
    };
    for (a, b) in h.edges() {
        add(mapping[a], mapping[b], &mut degree, &mut edges);
    }
    check_targets("placing H", &degree, &target)?;

    // V' is everything outside V1 and V_H.
    let mut queue = ResidualQueue::new((v1..n).filter(|&v| !in_h[v]).map(|v| (v, target[v])));

    // Phase 1: V_H against V', largest remaining demand first.
    let mut order: Vec<usize> = mapping.clone();
    order.sort_by_key(|&x| (std::cmp::Reverse(target[x] - degree[x]), x));
    for x in order {
        let need = target[x] - degree[x];
        let partners = queue.take_top(need);
        if partners.len() < need {
            return Err(infeasible(
                "V′ can absorb the demand of V_H",
                format!("vertex {x} short by {}", need - partners.len()),
            ));
        }
        for u in partners {
            add(x, u, &mut degree, &mut edges);
        }
    }
    check_targets("phase 1", &degree, &target)?;

    // Phase 2: V' against itself; leftovers go to fresh V1 vertices.
    let mut phase2 = Vec::new();
    let leftover = queue.realize(&mut phase2);
    for (u, v) in phase2 {
        add(u, v, &mut degree, &mut edges);
    }
    let mut next_v1 = 0;
    for (v, remaining) in leftover {
        if next_v1 + remaining > v1 {
            return Err(infeasible(
                "|V₁| covers the phase 2 leftover",
                format!("|V₁| = {v1}, vertex {v} needs {remaining}"),
            ));
        }
        for w in next_v1..next_v1 + remaining {
            add(v, w, &mut degree, &mut edges);
        }
        next_v1 += remaining;
    }
    check_targets("phase 2", &degree, &target)?;

    // Phase 3: pair the untouched V1 vertices.
    let mut w = next_v1;
    while w + 1 < v1 {
        add(w, w + 1, &mut degree, &mut edges);
        w += 2;
    }
    if w < v1 {
        // One V1 vertex is left; attach it to another, promoting that one.
        if v1 < 2 {
            return Err(infeasible("|V₁| ≥ 2", format!("|V₁| = {v1}")));
        }
        let partner = if w == 0 { 1 } else { 0 };
        target[partner] = 2;
        add(w, partner, &mut degree, &mut edges);
    }
    check_targets("phase 3", &degree, &target)?;

    if let Some(v) = (0..n).find(|&v| degree[v] != target[v]) {
        return Err(Error::Infeasible(format!(
            "vertex {v} ends with degree {} instead of {}",
            degree[v], target[v]
        )));
    }
    let graph = Graph::from_edges(n, edges);
    debug_assert_eq!(graph.degrees(), degree);
    if !is_induced_subgraph(&graph, h, &mapping)? {
        return Err(Error::Infeasible("H is not induced in the result".into()));
    }
    let report = verify_proper(&graph.degree_histogram(), &consts)?;
    if !report.member {
        let first = &report.violations[0];
        return Err(Error::Infeasible(format!(
            "result is not proper: {} at {} (observed {}, allowed {:?})",
            first.condition, first.index, first.observed, first.allowed
        )));
    }
    Ok(Embedding {
        graph,
        h: h.clone(),
        mapping,
        target_degree: target,
    })
}

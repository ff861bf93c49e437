//! Graph synthesis: power-law graphs by degree sampling and Havel–Hakimi
//! realization, the Barabási–Albert model with online labels, and the
//! lower-bound embedding into proper power-law graphs.

mod ba;
mod embed;
mod sampling;

pub use ba::{ba_online_labels, decode_ba, generate_ba, AttachmentLog, BaLabels, BaParams};
pub use embed::{embed_lower_bound, Embedding};
pub use sampling::{sample_powerlaw_degrees, PowerLawSampler};

use crate::error::Result;
use crate::graph::{DegreeSequence, Graph};
use crate::realize::{havel_hakimi, is_graphical};

/// A synthetic power-law graph with the sequences it came from.
#[derive(Debug, Clone)]
pub struct PowerLawGraph {
    pub graph: Graph,
    pub sampled: DegreeSequence,
    /// The sequence actually realized; `graph` has exactly these degrees.
    pub repaired: DegreeSequence,
}

/// Makes a degree sequence graphical with small changes: an odd sum is
/// fixed by incrementing one minimum entry, then the maximum entry is
/// decremented until the Erdős–Gallai conditions hold. Ties pick the lowest
/// index.
pub fn repair_degree_sequence(seq: &DegreeSequence) -> DegreeSequence {
    let mut d = seq.0.clone();
    if d.is_empty() {
        return DegreeSequence(d);
    }
    let cap = d.len() - 1;
    for x in d.iter_mut() {
        *x = (*x).min(cap);
    }
    if d.iter().sum::<usize>() % 2 == 1 {
        let (i, _) = d
            .iter()
            .enumerate()
            .min_by_key(|&(i, &x)| (x, i))
            .expect("non-empty");
        if d[i] < cap {
            d[i] += 1;
        } else {
            // Every entry is at the cap; lowering one is the only fix.
            d[i] -= 1;
        }
    }
    let mut out = DegreeSequence(d);
    while !is_graphical(&out) {
        let (i, _) = out
            .0
            .iter()
            .enumerate()
            .max_by_key(|&(i, &x)| (x, std::cmp::Reverse(i)))
            .expect("non-empty");
        out.0[i] -= 1;
    }
    out
}

/// Samples `n` power-law degrees, repairs them, and realizes them with
/// Havel–Hakimi.
pub fn generate_powerlaw_graph(n: usize, alpha: f64, seed: u64) -> Result<PowerLawGraph> {
    let sampled = sample_powerlaw_degrees(n, alpha, seed)?;
    let repaired = repair_degree_sequence(&sampled);
    let graph = havel_hakimi(&repaired)?;
    Ok(PowerLawGraph {
        graph,
        sampled,
        repaired,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn repair_fixes_parity_and_caps() {
        let r = repair_degree_sequence(&DegreeSequence(vec![1, 1, 1]));
        assert_eq!(r.0, vec![2, 1, 1]);
        assert!(is_graphical(&r));

        let r = repair_degree_sequence(&DegreeSequence(vec![9, 1, 1, 1]));
        assert!(is_graphical(&r));
        assert_eq!(r.0, vec![3, 1, 1, 1]);

        let r = repair_degree_sequence(&DegreeSequence(vec![3, 3, 1, 1]));
        assert!(is_graphical(&r));
    }

    #[test]
    fn repair_leaves_graphical_alone() {
        let d = DegreeSequence(vec![3, 3, 2, 2, 2]);
        assert_eq!(repair_degree_sequence(&d), d);
    }

    #[test]
    fn two_vertex_graphs() {
        for seed in 0..20 {
            let g = generate_powerlaw_graph(2, 2.5, seed).unwrap().graph;
            assert_eq!(g.vertex_count(), 2);
            assert!(g.edge_count() <= 1);
        }
    }

    #[test]
    fn realized_degrees_match_repaired_sequence() {
        for (n, alpha, seed) in [(500, 2.2, 1), (2_000, 2.6, 2), (5_000, 2.8, 3)] {
            let pg = generate_powerlaw_graph(n, alpha, seed).unwrap();
            pg.graph.check_invariants().unwrap();
            assert_eq!(pg.graph.degrees(), pg.repaired.0);
            assert_eq!(pg.graph.degree_histogram(), pg.repaired.histogram());
        }
    }
}

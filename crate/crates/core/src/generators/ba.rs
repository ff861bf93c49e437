//! Barabási–Albert preferential attachment and its online labeling: every
//! vertex stores the identifiers of the vertices it attached to.

use std::io::Write;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bits::BitString;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labeling::id_bits;

/// The attachment history of a BA run. Vertices `0..n0` form the seed
/// graph; vertex `n0 + j` attached to `attachments[j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttachmentLog {
    pub m: usize,
    pub n0: usize,
    pub seed_graph: Graph,
    pub attachments: Vec<Vec<usize>>,
}

impl AttachmentLog {
    /// One line `vertex: t1 t2 ... tm` per added vertex, in insertion order.
    pub fn write<W: Write>(&self, mut out: W) -> Result<()> {
        for (j, targets) in self.attachments.iter().enumerate() {
            write!(out, "{}:", self.n0 + j)?;
            for t in targets {
                write!(out, " {t}")?;
            }
            writeln!(out)?;
        }
        Ok(())
    }
}

fn validate_seed(seed: &Graph, n: usize, m: usize) -> Result<()> {
    let n0 = seed.vertex_count();
    if m == 0 {
        return Err(Error::InvalidSeedGraph("m must be at least 1".into()));
    }
    if seed.edge_count() == 0 {
        return Err(Error::InvalidSeedGraph("seed graph has no edges".into()));
    }
    // Only vertices of positive degree can be drawn; fewer than m of them
    // would make distinct draws impossible.
    let drawable = (0..n0).filter(|&v| seed.degree(v) > 0).count();
    if drawable < m {
        return Err(Error::InvalidSeedGraph(format!(
            "seed graph has {drawable} vertices with edges, need at least m = {m}"
        )));
    }
    if n <= n0 {
        return Err(Error::InvalidSeedGraph(format!(
            "n = {n} must exceed the seed graph size {n0}"
        )));
    }
    Ok(())
}

/// Grows a graph to `n` vertices, each new vertex attaching to `m` distinct
/// existing vertices chosen with probability proportional to degree. Draws
/// repeat until `m` distinct targets are found. The seed graph defaults to
/// `K_{m+1}`.
pub fn generate_ba(
    n: usize,
    m: usize,
    seed: u64,
    seed_graph: Option<&Graph>,
) -> Result<(Graph, AttachmentLog)> {
    let default_seed;
    let seed_graph = match seed_graph {
        Some(g) => g,
        None => {
            default_seed = Graph::complete(m + 1);
            &default_seed
        }
    };
    validate_seed(seed_graph, n, m)?;
    let n0 = seed_graph.vertex_count();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Each vertex appears once per incident edge, so a uniform pick from
    // this list is a degree-proportional pick.
    let mut endpoints: Vec<usize> =
        Vec::with_capacity(2 * (seed_graph.edge_count() + m * (n - n0)));
    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(seed_graph.edge_count() + m * (n - n0));
    for (u, v) in seed_graph.edges() {
        endpoints.push(u);
        endpoints.push(v);
        edges.push((u, v));
    }

    let mut attachments = Vec::with_capacity(n - n0);
    for v in n0..n {
        let mut targets: Vec<usize> = Vec::with_capacity(m);
        while targets.len() < m {
            let t = endpoints[rng.gen_range(0..endpoints.len())];
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
        for &t in &targets {
            endpoints.push(v);
            endpoints.push(t);
            edges.push((v, t));
        }
        attachments.push(targets);
    }

    let graph = Graph::from_edges(n, edges);
    Ok((
        graph,
        AttachmentLog {
            m,
            n0,
            seed_graph: seed_graph.clone(),
            attachments,
        },
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BaParams {
    pub n: usize,
    pub n0: usize,
    pub m: usize,
    pub idbits: usize,
    /// Width of the neighbor count stored in seed-vertex labels.
    pub count_bits: usize,
}

impl BaParams {
    /// Largest label any vertex can receive when seed vertices have at most
    /// `m` seed neighbors.
    pub fn label_bound(&self) -> usize {
        (self.m + 1) * self.idbits + self.count_bits
    }
}

#[derive(Debug, Clone)]
pub struct BaLabels {
    pub params: BaParams,
    pub labels: Vec<BitString>,
}

impl BaLabels {
    pub fn max_label_bits(&self) -> usize {
        self.labels.iter().map(BitString::len).max().unwrap_or(0)
    }

    pub fn adjacent(&self, u: usize, v: usize) -> Result<bool> {
        decode_ba(&self.params, &self.labels[u], &self.labels[v])
    }
}

/// Online labels: vertex `v` gets identifier `v + 1`. An added vertex stores
/// its identifier and its `m` attachment identifiers; a seed vertex stores
/// its identifier, a neighbor count, and its seed neighbors.
pub fn ba_online_labels(log: &AttachmentLog, n: usize) -> Result<BaLabels> {
    let n0 = log.n0;
    if log.seed_graph.vertex_count() != n0 || n0 + log.attachments.len() != n {
        return Err(Error::Domain(format!(
            "attachment log covers {} vertices, expected {n}",
            n0 + log.attachments.len()
        )));
    }
    let params = BaParams {
        n,
        n0,
        m: log.m,
        idbits: id_bits(n),
        count_bits: id_bits(n0),
    };
    let mut labels = Vec::with_capacity(n);
    for v in 0..n0 {
        let nbrs = log.seed_graph.neighbors(v);
        let mut l = BitString::with_capacity(params.idbits * (1 + nbrs.len()) + params.count_bits);
        l.push_bits(v as u64 + 1, params.idbits);
        l.push_bits(nbrs.len() as u64, params.count_bits);
        for &u in nbrs {
            l.push_bits(u as u64 + 1, params.idbits);
        }
        labels.push(l);
    }
    for (j, targets) in log.attachments.iter().enumerate() {
        if targets.len() != log.m || targets.iter().any(|&t| t >= n0 + j) {
            return Err(Error::Domain(format!(
                "attachment list of vertex {} is malformed",
                n0 + j
            )));
        }
        let mut l = BitString::with_capacity(params.idbits * (1 + log.m));
        l.push_bits((n0 + j) as u64 + 1, params.idbits);
        for &t in targets {
            l.push_bits(t as u64 + 1, params.idbits);
        }
        labels.push(l);
    }
    Ok(BaLabels { params, labels })
}

/// Header of a validated label: identifier and the position and length of
/// its identifier list.
struct Header {
    id: u64,
    start: usize,
    count: usize,
}

fn read_id(p: &BaParams, l: &BitString, pos: usize) -> Result<u64> {
    let id = l
        .read_bits(pos, p.idbits)
        .ok_or_else(|| Error::MalformedLabel(format!("label truncated at bit {pos}")))?;
    if id == 0 || id > p.n as u64 {
        return Err(Error::MalformedLabel(format!(
            "identifier {id} outside 1..={}",
            p.n
        )));
    }
    Ok(id)
}

fn header(p: &BaParams, l: &BitString) -> Result<Header> {
    let id = read_id(p, l, 0)?;
    let (count, start) = if id <= p.n0 as u64 {
        let count = l
            .read_bits(p.idbits, p.count_bits)
            .ok_or_else(|| Error::MalformedLabel("seed label missing count".into()))?
            as usize;
        if count >= p.n0.max(1) {
            return Err(Error::MalformedLabel(format!(
                "seed vertex claims {count} neighbors among {} seed vertices",
                p.n0
            )));
        }
        (count, p.idbits + p.count_bits)
    } else {
        (p.m, p.idbits)
    };
    let expected = start + count * p.idbits;
    if l.len() != expected {
        return Err(Error::MalformedLabel(format!(
            "label has {} bits, expected {expected}",
            l.len()
        )));
    }
    Ok(Header { id, start, count })
}

fn list_contains(p: &BaParams, l: &BitString, h: &Header, id: u64) -> Result<bool> {
    for k in 0..h.count {
        if read_id(p, l, h.start + k * p.idbits)? == id {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Adjacency from two online labels: true iff either list names the other.
pub fn decode_ba(params: &BaParams, a: &BitString, b: &BitString) -> Result<bool> {
    let ha = header(params, a)?;
    let hb = header(params, b)?;
    Ok(list_contains(params, a, &ha, hb.id)? || list_contains(params, b, &hb, ha.id)?)
}

//! Thin/fat adjacency labeling.
//!
//! Vertices of degree at least the threshold are *fat* and get identifiers
//! `1..=k`; the rest are *thin* and get `k+1..=n`. Every label starts with a
//! flag bit (0 thin, 1 fat) and the vertex identifier in `idbits` bits,
//! big-endian. A thin label then lists all neighbor identifiers ascending.
//! A fat label carries either a `k`-bit incidence vector over the fat
//! identifiers ([`Mode::Bitstring`]) or the ascending list of its fat
//! neighbors' identifiers ([`Mode::Concat`]).

mod dump;
mod sweep;
mod threshold;

pub use dump::{write_label_dump, write_sweep_csv};
pub use sweep::{sweep_thresholds, SweepRow, ThresholdSweep};
pub use threshold::{
    ceil_log2, powerlaw_threshold, predicted_threshold, sparse_threshold, theoretical_bounds,
    BoundsReport,
};

use std::fmt;
use std::str::FromStr;

use crate::bits::BitString;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Payload layout for fat labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// `k`-bit incidence vector over fat identifiers.
    Bitstring,
    /// Ascending list of fat-neighbor identifiers.
    Concat,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Bitstring => "bitstring",
            Mode::Concat => "concat",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "bitstring" | "bits" => Ok(Mode::Bitstring),
            "concat" | "concatenation" => Ok(Mode::Concat),
            other => Err(Error::Domain(format!("unknown label mode {other:?}"))),
        }
    }
}

/// Bits per identifier for identifiers `1..=n`: `ceil(log2(n + 1))`.
pub fn id_bits(n: usize) -> usize {
    (usize::BITS - n.leading_zeros()) as usize
}

/// Identifier assignment for a given threshold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identifiers {
    /// `id_of[v]` in `1..=n`.
    pub id_of: Vec<usize>,
    pub fat_count: usize,
    pub threshold: usize,
}

impl Identifiers {
    pub fn is_fat(&self, v: usize) -> bool {
        self.id_of[v] <= self.fat_count
    }
}

/// Fat vertices (degree `>= threshold`) get `1..=k` by descending degree,
/// ties by ascending index; thin vertices get `k+1..=n` by ascending index.
/// Thresholds below 1 are treated as 1.
pub fn assign_identifiers(g: &Graph, threshold: usize) -> Identifiers {
    let threshold = threshold.max(1);
    let n = g.vertex_count();
    let mut fat: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= threshold).collect();
    fat.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));

    let mut id_of = vec![0usize; n];
    for (i, &v) in fat.iter().enumerate() {
        id_of[v] = i + 1;
    }
    let mut next = fat.len() + 1;
    for v in 0..n {
        if g.degree(v) < threshold {
            id_of[v] = next;
            next += 1;
        }
    }
    Identifiers {
        id_of,
        fat_count: fat.len(),
        threshold,
    }
}

/// The public parameters a decoder needs besides the two labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SchemeParams {
    pub n: usize,
    pub idbits: usize,
    pub threshold: usize,
    pub mode: Mode,
}

/// Labels for every vertex of a graph.
#[derive(Debug, Clone)]
pub struct LabelSet {
    pub params: SchemeParams,
    pub fat_count: usize,
    pub labels: Vec<BitString>,
    pub id_of: Vec<usize>,
}

impl LabelSet {
    pub fn max_label_bits(&self) -> usize {
        self.labels.iter().map(BitString::len).max().unwrap_or(0)
    }

    pub fn is_fat(&self, v: usize) -> bool {
        self.id_of[v] <= self.fat_count
    }

    /// Adjacency of `u` and `v` from their labels alone.
    pub fn adjacent(&self, u: usize, v: usize) -> Result<bool> {
        decode(&self.params, &self.labels[u], &self.labels[v])
    }
}

pub fn encode(g: &Graph, threshold: usize, mode: Mode) -> LabelSet {
    let n = g.vertex_count();
    let idbits = id_bits(n);
    let ids = assign_identifiers(g, threshold);
    let k = ids.fat_count;

    let mut labels = Vec::with_capacity(n);
    let mut payload: Vec<u64> = Vec::new();
    for v in 0..n {
        let fat = ids.is_fat(v);
        payload.clear();
        payload.extend(
            g.neighbors(v)
                .iter()
                .map(|&u| ids.id_of[u as usize] as u64)
                .filter(|&id| !fat || id as usize <= k),
        );
        payload.sort_unstable();

        let label = if fat && mode == Mode::Bitstring {
            let mut l = BitString::with_capacity(1 + idbits + k);
            l.push(true);
            l.push_bits(ids.id_of[v] as u64, idbits);
            let start = l.len();
            l.push_zeros(k);
            for &id in &payload {
                l.set(start + id as usize - 1, true);
            }
            l
        } else {
            let mut l = BitString::with_capacity(1 + idbits * (1 + payload.len()));
            l.push(fat);
            l.push_bits(ids.id_of[v] as u64, idbits);
            for &id in &payload {
                l.push_bits(id, idbits);
            }
            l
        };
        labels.push(label);
    }

    LabelSet {
        params: SchemeParams {
            n,
            idbits,
            threshold: ids.threshold,
            mode,
        },
        fat_count: k,
        labels,
        id_of: ids.id_of,
    }
}

/// A label split into its fields.
struct Parsed<'a> {
    fat: bool,
    id: u64,
    bits: &'a BitString,
    payload_start: usize,
}

impl<'a> Parsed<'a> {
    fn new(params: &SchemeParams, bits: &'a BitString) -> Result<Self> {
        let idbits = params.idbits;
        if bits.len() < 1 + idbits || idbits == 0 {
            return Err(Error::MalformedLabel(format!(
                "label of {} bits is shorter than flag plus {idbits}-bit identifier",
                bits.len()
            )));
        }
        let fat = bits.get(0) == Some(true);
        let id = bits.read_bits(1, idbits).expect("length checked");
        if id == 0 {
            return Err(Error::MalformedLabel("identifier 0".into()));
        }
        let parsed = Parsed {
            fat,
            id,
            bits,
            payload_start: 1 + idbits,
        };
        if parsed.is_list(params.mode) && parsed.payload_len() % idbits != 0 {
            return Err(Error::MalformedLabel(format!(
                "payload of {} bits is not a multiple of {idbits}",
                parsed.payload_len()
            )));
        }
        Ok(parsed)
    }

    fn is_list(&self, mode: Mode) -> bool {
        !self.fat || mode == Mode::Concat
    }

    fn payload_len(&self) -> usize {
        self.bits.len() - self.payload_start
    }

    /// Binary search for `id` in an ascending identifier list payload.
    fn list_contains(&self, id: u64, idbits: usize) -> bool {
        let entries = self.payload_len() / idbits;
        let (mut lo, mut hi) = (0usize, entries);
        while lo < hi {
            let mid = (lo + hi) / 2;
            let at = self
                .bits
                .read_bits(self.payload_start + mid * idbits, idbits)
                .expect("entry in range");
            match at.cmp(&id) {
                std::cmp::Ordering::Equal => return true,
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
            }
        }
        false
    }
}

/// Decides adjacency from two labels produced by the same encoding.
pub fn decode(params: &SchemeParams, a: &BitString, b: &BitString) -> Result<bool> {
    let pa = Parsed::new(params, a)?;
    let pb = Parsed::new(params, b)?;
    let idbits = params.idbits;
    if !pa.fat {
        return Ok(pa.list_contains(pb.id, idbits));
    }
    if !pb.fat {
        return Ok(pb.list_contains(pa.id, idbits));
    }
    match params.mode {
        Mode::Concat => Ok(pa.list_contains(pb.id, idbits)),
        Mode::Bitstring => {
            let k = pa.payload_len();
            let bit = pb.id as usize - 1;
            if bit >= k {
                return Err(Error::MalformedLabel(format!(
                    "fat identifier {} exceeds fat bit string of length {k}",
                    pb.id
                )));
            }
            Ok(pa.bits.get(pa.payload_start + bit) == Some(true))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(s: &str) -> String {
        s.chars().filter(|c| *c == '0' || *c == '1').collect()
    }

    fn render(b: &BitString) -> String {
        (0..b.len())
            .map(|i| if b.get(i) == Some(true) { '1' } else { '0' })
            .collect()
    }

    #[test]
    fn id_bits_values() {
        assert_eq!(id_bits(0), 0);
        assert_eq!(id_bits(1), 1);
        assert_eq!(id_bits(3), 2);
        assert_eq!(id_bits(4), 3);
        assert_eq!(id_bits(36_692), 16);
        assert_eq!(id_bits(22_963), 15);
        assert_eq!(id_bits(325_729), 19);
    }

    #[test]
    fn path_identifiers() {
        let ids = assign_identifiers(&Graph::path(3), 2);
        assert_eq!(ids.id_of, vec![2, 1, 3]);
        assert_eq!(ids.fat_count, 1);
    }

    #[test]
    fn threshold_above_max_degree_is_all_thin() {
        let g = Graph::path(4);
        let ids = assign_identifiers(&g, 3);
        assert_eq!(ids.fat_count, 0);
        assert_eq!(ids.id_of, vec![1, 2, 3, 4]);
    }

    #[test]
    fn threshold_one_without_isolated_is_all_fat() {
        let g = Graph::complete(4);
        let ids = assign_identifiers(&g, 1);
        assert_eq!(ids.fat_count, 4);
        let ids0 = assign_identifiers(&g, 0);
        assert_eq!(ids0, ids);
    }

    #[test]
    fn fat_order_by_degree_then_index() {
        let g = Graph::from_edges(5, [(1, 0), (1, 2), (1, 3), (2, 3), (3, 4)]);
        let ids = assign_identifiers(&g, 2);
        // Fat: 1 (deg 3), 3 (deg 3), 2 (deg 2).
        assert_eq!(g.degrees(), vec![1, 3, 2, 3, 1]);
        assert_eq!(ids.id_of, vec![4, 1, 3, 2, 5]);
    }

    #[test]
    fn path_layout_bitstring() {
        let g = Graph::path(3);
        let ls = encode(&g, 2, Mode::Bitstring);
        assert_eq!(ls.params.idbits, 2);
        assert_eq!(render(&ls.labels[0]), bits("0 10 01"));
        assert_eq!(render(&ls.labels[1]), bits("1 01 0"));
        assert_eq!(render(&ls.labels[2]), bits("0 11 01"));
        assert!(ls.adjacent(0, 1).unwrap());
        assert!(!ls.adjacent(0, 2).unwrap());
        assert!(!ls.adjacent(1, 1).unwrap());
        assert!(!ls.adjacent(0, 0).unwrap());
    }

    #[test]
    fn path_layout_concat() {
        let g = Graph::path(3);
        let ls = encode(&g, 2, Mode::Concat);
        assert_eq!(render(&ls.labels[1]), bits("1 01"));
        assert_eq!(render(&ls.labels[0]), bits("0 10 01"));
    }

    #[test]
    fn isolated_vertex_label() {
        let g = Graph::from_edges(4, [(0, 1)]);
        for t in 1..4 {
            for mode in [Mode::Bitstring, Mode::Concat] {
                let ls = encode(&g, t, mode);
                assert_eq!(ls.labels[3].len(), 1 + ls.params.idbits);
            }
        }
    }

    #[test]
    fn fat_bitstring_symmetry() {
        let g = Graph::complete(5);
        let ls = encode(&g, 1, Mode::Bitstring);
        assert_eq!(ls.fat_count, 5);
        for u in 0..5 {
            assert_eq!(ls.labels[u].len(), 1 + 3 + 5);
            for v in 0..5 {
                assert_eq!(ls.adjacent(u, v).unwrap(), u != v);
            }
        }
    }

    #[test]
    fn malformed_labels() {
        let params = SchemeParams {
            n: 3,
            idbits: 2,
            threshold: 2,
            mode: Mode::Concat,
        };
        let mut short = BitString::new();
        short.push(false);
        short.push(true);
        let mut ok = BitString::new();
        ok.push(false);
        ok.push_bits(1, 2);
        assert!(matches!(
            decode(&params, &short, &ok),
            Err(Error::MalformedLabel(_))
        ));
        let mut ragged = ok.clone();
        ragged.push(true);
        assert!(matches!(
            decode(&params, &ragged, &ok),
            Err(Error::MalformedLabel(_))
        ));
        let mut zero = BitString::new();
        zero.push(false);
        zero.push_bits(0, 2);
        assert!(decode(&params, &zero, &ok).is_err());

        // Fat/fat bit string whose partner id exceeds the vector.
        let bparams = SchemeParams {
            mode: Mode::Bitstring,
            ..params
        };
        let mut fat1 = BitString::new();
        fat1.push(true);
        fat1.push_bits(1, 2);
        fat1.push(false);
        let mut fat3 = BitString::new();
        fat3.push(true);
        fat3.push_bits(3, 2);
        fat3.push(false);
        assert!(matches!(
            decode(&bparams, &fat1, &fat3),
            Err(Error::MalformedLabel(_))
        ));
    }

    #[test]
    fn mode_parse() {
        assert_eq!("concat".parse::<Mode>().unwrap(), Mode::Concat);
        assert_eq!("BITSTRING".parse::<Mode>().unwrap(), Mode::Bitstring);
        assert!("nope".parse::<Mode>().is_err());
    }
}

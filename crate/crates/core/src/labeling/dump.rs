//! Text formats for label dumps and threshold sweeps.

use std::io::Write;

use super::{LabelSet, ThresholdSweep};
use crate::error::Result;

/// One line per vertex: `external_id identifier flag bit_length hex`, where
/// `hex` is the whole label packed MSB-first with zero pad bits. A leading
/// `#` line records the scheme parameters.
pub fn write_label_dump<W: Write>(
    labels: &LabelSet,
    external_ids: Option<&[u64]>,
    mut out: W,
) -> Result<()> {
    let p = &labels.params;
    writeln!(
        out,
        "# n={} idbits={} threshold={} mode={} fat={}",
        p.n, p.idbits, p.threshold, p.mode, labels.fat_count
    )?;
    for (v, label) in labels.labels.iter().enumerate() {
        let ext = external_ids.map_or(v as u64, |ids| ids[v]);
        writeln!(
            out,
            "{} {} {} {} {}",
            ext,
            labels.id_of[v],
            u8::from(labels.is_fat(v)),
            label.len(),
            label.to_hex()
        )?;
    }
    out.flush()?;
    Ok(())
}

/// `threshold,max_thin_bits,max_fat_bits,max_bits` with one row per
/// threshold.
pub fn write_sweep_csv<W: Write>(sweep: &ThresholdSweep, mut out: W) -> Result<()> {
    writeln!(out, "threshold,max_thin_bits,max_fat_bits,max_bits")?;
    for r in &sweep.rows {
        writeln!(
            out,
            "{},{},{},{}",
            r.threshold,
            r.max_thin,
            r.max_fat,
            r.max_bits()
        )?;
    }
    out.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::labeling::{encode, sweep_thresholds, Mode};

    #[test]
    fn path_dump() {
        let ls = encode(&Graph::path(3), 2, Mode::Bitstring);
        let mut buf = Vec::new();
        write_label_dump(&ls, Some(&[10, 20, 30]), &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "# n=3 idbits=2 threshold=2 mode=bitstring fat=1\n\
             10 2 0 5 48\n\
             20 1 1 4 a0\n\
             30 3 0 5 68\n"
        );
    }

    #[test]
    fn sweep_csv() {
        let s = sweep_thresholds(&Graph::path(3), Mode::Concat);
        let mut buf = Vec::new();
        write_sweep_csv(&s, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        // idbits = 2. t=1: all fat, vertex 1 has two fat neighbors.
        // t=2: vertex 1 fat with none; thin degree 1. t=3: all thin.
        assert_eq!(
            text,
            "threshold,max_thin_bits,max_fat_bits,max_bits\n\
             1,0,7,7\n\
             2,5,3,5\n\
             3,7,0,7\n"
        );
    }
}

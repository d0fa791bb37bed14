//! Text, CSV and JSON renderings of count records.

use std::fmt::Write as _;

use serde::Serialize;

use chordcount_core::CountRecord;

/// JSON shape of a [`CountRecord`]. Counts are decimal strings so that no
/// consumer truncates them to 64 bits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct CountJson {
    pub n: usize,
    pub k: usize,
    pub q: u32,
    pub count: String,
    pub method: String,
}

impl From<&CountRecord> for CountJson {
    fn from(r: &CountRecord) -> Self {
        CountJson {
            n: r.n,
            k: r.k,
            q: r.q,
            count: r.count.to_string(),
            method: r.method.as_str().to_string(),
        }
    }
}

pub const CSV_HEADER: [&str; 6] = ["n", "k", "q", "count", "method", "residue_mod4"];

pub fn records_json(records: &[CountRecord]) -> String {
    let rows: Vec<CountJson> = records.iter().map(CountJson::from).collect();
    let mut s = serde_json::to_string_pretty(&rows).expect("plain structs serialize");
    s.push('\n');
    s
}

/// CSV with a residue-mod-4 column for grouping plots. Zeros stay zeros.
pub fn records_csv(records: &[CountRecord]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("writing to memory");
    for r in records {
        w.write_record([
            r.n.to_string(),
            r.k.to_string(),
            r.q.to_string(),
            r.count.to_string(),
            r.method.as_str().to_string(),
            (r.n % 4).to_string(),
        ])
        .expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("ascii output")
}

/// Left-aligned columns separated by two spaces.
pub fn aligned(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &mut dyn Iterator<Item = &str>| {
        let text: Vec<String> = cells
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        writeln!(out, "{}", text.join("  ").trim_end()).unwrap();
    };
    line(&mut header.iter().copied());
    for row in rows {
        line(&mut row.iter().map(String::as_str));
    }
    out
}

pub fn records_table(records: &[CountRecord]) -> String {
    let rows: Vec<Vec<String>> = records
        .iter()
        .map(|r| {
            vec![
                r.n.to_string(),
                r.k.to_string(),
                r.q.to_string(),
                r.count.to_string(),
                r.method.as_str().to_string(),
                (r.n % 4).to_string(),
            ]
        })
        .collect();
    aligned(&["n", "k", "q", "count", "method", "n mod 4"], &rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use chordcount_core::{BigUint, Method};

    fn sample() -> Vec<CountRecord> {
        vec![
            CountRecord::new(6, 3, 3, BigUint::from(42u32), Method::Brute),
            CountRecord::new(7, 3, 3, BigUint::from(0u32), Method::ClosedForm),
        ]
    }

    #[test]
    fn csv_layout() {
        assert_eq!(
            records_csv(&sample()),
            "n,k,q,count,method,residue_mod4\n6,3,3,42,brute,2\n7,3,3,0,closed_form,3\n"
        );
    }

    #[test]
    fn json_counts_are_strings() {
        let text = records_json(&sample());
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v[0]["count"], "42");
        assert_eq!(v[1]["method"], "closed_form");
        let back: Vec<CountJson> = serde_json::from_str(&text).unwrap();
        assert_eq!(back[1].count, "0");
    }

    #[test]
    fn table_alignment() {
        let t = aligned(&["a", "bb"], &[vec!["123".into(), "x".into()]]);
        assert_eq!(t, "a    bb\n123  x\n");
    }
}

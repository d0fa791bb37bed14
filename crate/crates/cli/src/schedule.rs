//! Slot-to-resource views of colorings on `C_n^(k)`.

use std::fmt::Write as _;

use serde::Serialize;

use chordcount_core::{ChordGraph, Coloring};

/// Resource label for color `c`: `A`, `B`, `C`, ...
pub fn label(c: u32) -> char {
    assert!(c < 26, "labels cover at most 26 colors");
    char::from(b'A' + c as u8)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LabelError {
    #[error("slot {slot}: `{ch}` is not a resource label A-Z")]
    NotALabel { slot: usize, ch: char },
}

/// Parses letters (slot 1 first) back into a coloring; whitespace is ignored.
pub fn parse_assignment(text: &str) -> Result<Coloring, LabelError> {
    let mut colors = Vec::new();
    for ch in text.chars().filter(|c| !c.is_whitespace()) {
        let up = ch.to_ascii_uppercase();
        if !up.is_ascii_uppercase() {
            return Err(LabelError::NotALabel {
                slot: colors.len() + 1,
                ch,
            });
        }
        colors.push(u32::from(up as u8 - b'A'));
    }
    Ok(Coloring::new(colors))
}

/// Kind of constraint an edge of `C_n^(k)` encodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeKind {
    Adjacent,
    Spacing,
    Opposite,
}

impl EdgeKind {
    pub fn of(g: &ChordGraph, u: usize, v: usize) -> EdgeKind {
        let n = g.n();
        let d = (v + n - u) % n;
        let d = d.min(n - d);
        if d == 1 {
            EdgeKind::Adjacent
        } else if d == g.k() {
            EdgeKind::Spacing
        } else {
            EdgeKind::Opposite
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            EdgeKind::Adjacent => "adjacent",
            EdgeKind::Spacing => "spacing",
            EdgeKind::Opposite => "opposite",
        }
    }
}

/// A violated constraint, with 1-based slots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Conflict {
    pub slots: (usize, usize),
    pub kind: EdgeKind,
    pub label: char,
}

/// Every edge of `g` whose endpoints share a color. Assumes matching length.
pub fn conflicts(g: &ChordGraph, colors: &Coloring) -> Vec<Conflict> {
    let c = colors.as_slice();
    g.edges()
        .iter()
        .filter(|&&(u, v)| c[u] == c[v])
        .map(|&(u, v)| Conflict {
            slots: (u + 1, v + 1),
            kind: EdgeKind::of(g, u, v),
            label: label(c[u]),
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScheduleView {
    pub n: usize,
    pub k: usize,
    /// `labels[i]` is the resource for slot `i + 1`.
    pub labels: String,
}

impl ScheduleView {
    pub fn new(n: usize, k: usize, colors: &Coloring) -> Self {
        ScheduleView {
            n,
            k,
            labels: colors.as_slice().iter().map(|&c| label(c)).collect(),
        }
    }

    /// Grid of `Slot Gate` pairs, five per row, slots numbered from 1.
    pub fn render(&self) -> String {
        const PER_ROW: usize = 5;
        let w = self.n.to_string().len().max(4);
        let mut out = String::new();
        let header: Vec<String> = (0..PER_ROW.min(self.n))
            .map(|_| format!("{:<w$}  Gate", "Slot"))
            .collect();
        writeln!(out, "{}", header.join(" | ")).unwrap();
        let labels: Vec<char> = self.labels.chars().collect();
        for (r, chunk) in labels.chunks(PER_ROW).enumerate() {
            let cells: Vec<String> = chunk
                .iter()
                .enumerate()
                .map(|(i, l)| format!("{:<w$}  {l}   ", r * PER_ROW + i + 1))
                .collect();
            writeln!(out, "{}", cells.join(" | ").trim_end()).unwrap();
        }
        out
    }
}

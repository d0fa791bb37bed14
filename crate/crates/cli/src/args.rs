//! Command-line definitions and the small value parsers they use.

use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use chordcount_core::{Limits, Method};

#[derive(Debug, Parser)]
#[command(
    name = "chordcount",
    version,
    about = "Exact proper-coloring counts for cycles with offset chords and diameters"
)]
pub struct Cli {
    /// Enumeration guards as `key=value` pairs: brute_n, dp_states,
    /// automaton_states, alpha_n.
    #[arg(long, global = true, value_parser = parse_limits)]
    pub limits: Option<Limits>,

    #[command(subcommand)]
    pub command: Command,
}

impl Cli {
    pub fn limits(&self) -> Limits {
        self.limits.unwrap_or_default()
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count proper q-colorings of C_n^(k).
    Count(CountArgs),
    /// Tabulate counts over a range of n, cross-checking methods.
    Series(SeriesArgs),
    /// Characteristic polynomial and recurrence of a transfer automaton.
    Spectrum(SpectrumArgs),
    /// Render (or validate) a cyclic slot assignment.
    Schedule(ScheduleArgs),
    /// Independence number and chromatic bounds.
    Bounds(BoundsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
    Bfile,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 3)]
    pub k: usize,
    #[arg(long, default_value_t = 3)]
    pub q: u32,
    /// `auto` or one of brute, dp, window, paired, closed_form.
    #[arg(long, default_value = "auto", value_parser = parse_method_choice)]
    pub method: MethodChoice,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    /// Inclusive range such as `6..35`, `6-35` or `6:35`.
    #[arg(long, value_parser = parse_range)]
    pub range: (usize, usize),
    #[arg(long, default_value_t = 3)]
    pub k: usize,
    #[arg(long, default_value_t = 3)]
    pub q: u32,
    /// `auto`, `all`, or a comma-separated list of methods.
    #[arg(long, default_value = "auto", value_parser = parse_method_set)]
    pub method: MethodSet,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Also compare against the published k = q = 3 values.
    #[arg(long)]
    pub check_reference: bool,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[arg(long, default_value_t = 3)]
    pub k: usize,
    #[arg(long, default_value_t = 3)]
    pub q: u32,
    /// Analyse the 54-state paired automaton for even n (k = q = 3).
    #[arg(long)]
    pub paired: bool,
    /// Print the automaton's states and transitions instead of the report.
    #[arg(long)]
    pub dump: bool,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ScheduleArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 3)]
    pub k: usize,
    #[arg(long, default_value_t = 3)]
    pub q: u32,
    /// Lexicographic rank of the assignment among all feasible ones.
    #[arg(long, default_value = "0")]
    pub index: String,
    /// Validate this assignment (letters, slot 1 first) instead of ranking.
    #[arg(long)]
    pub assignment: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 3)]
    pub k: usize,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodChoice {
    Auto,
    Fixed(Method),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MethodSet {
    Auto,
    List(Vec<Method>),
}

pub fn parse_method_choice(s: &str) -> Result<MethodChoice, String> {
    match s {
        "auto" | "default" => Ok(MethodChoice::Auto),
        _ => Method::from_str(s)
            .map(MethodChoice::Fixed)
            .map_err(|_| format!("unknown method `{s}`")),
    }
}

pub fn parse_method_set(s: &str) -> Result<MethodSet, String> {
    match s {
        "auto" | "default" => Ok(MethodSet::Auto),
        "all" => Ok(MethodSet::List(Method::ALL.to_vec())),
        _ => {
            let mut out = Vec::new();
            for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
                let m = Method::from_str(part).map_err(|_| format!("unknown method `{part}`"))?;
                if !out.contains(&m) {
                    out.push(m);
                }
            }
            if out.is_empty() {
                return Err("empty method list".into());
            }
            Ok(MethodSet::List(out))
        }
    }
}

/// Parses an inclusive range `a..b`, `a..=b`, `a-b` or `a:b`.
pub fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = ["..=", "..", "-", ":"]
        .iter()
        .find_map(|sep| s.split_once(sep))
        .ok_or_else(|| format!("expected a range like 6..35, got `{s}`"))?;
    let parse = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|e| format!("bad range bound `{t}`: {e}"))
    };
    let (lo, hi) = (parse(a)?, parse(b)?);
    if lo < 3 {
        return Err(format!("range must start at n >= 3, got {lo}"));
    }
    if hi < lo {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

/// Parses `key=value` pairs separated by commas on top of the defaults.
pub fn parse_limits(s: &str) -> Result<Limits, String> {
    let mut limits = Limits::default();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| format!("expected key=value, got `{part}`"))?;
        let value: usize = value
            .trim()
            .replace('_', "")
            .parse()
            .map_err(|e| format!("bad value for `{key}`: {e}"))?;
        match key.trim() {
            "brute_n" | "brute_max_n" => limits.brute_max_n = value,
            "dp_states" | "dp_max_states" => limits.dp_max_states = value,
            "automaton_states" | "automaton_max_states" => limits.automaton_max_states = value,
            "alpha_n" | "alpha_max_n" => limits.alpha_max_n = value,
            other => return Err(format!("unknown limit `{other}`")),
        }
    }
    Ok(limits)
}

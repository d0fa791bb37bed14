//! The five subcommands. Each returns its output as strings so that the
//! binary stays a thin shell and tests can drive commands in-process.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use chordcount_core::bounds::{bounds_report, dependent_pair, BoundsReport};
use chordcount_core::closed_form::{cos_term, SequenceCache};
use chordcount_core::direct::FrontierCounter;
use chordcount_core::engine::{count_with, default_method};
use chordcount_core::paired::{PairedAutomaton, M_MIN};
use chordcount_core::poly::coefficient_strings;
use chordcount_core::spectral::{
    char_poly, minimal_recurrence, poly_divides, recurrence_from_charpoly, verify_recurrence,
    RecurrenceCheck,
};
use chordcount_core::window::WindowAutomaton;
use chordcount_core::{
    BigInt, BigUint, ChordGraph, CountRecord, ExactMatrix, IntPolynomial, Limits, Method,
};

use crate::args::{
    BoundsArgs, Cli, Command, CountArgs, Format, MethodChoice, MethodSet, ScheduleArgs, SeriesArgs,
    SpectrumArgs,
};
use crate::schedule::{conflicts, parse_assignment, ScheduleView};
use crate::{bfile, reference, report};

/// Process exit status. These values are a stable contract.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitCode {
    Success = 0,
    Parameter = 2,
    Mismatch = 3,
    Infeasible = 4,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CmdOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: ExitCode,
}

impl CmdOutput {
    fn ok(stdout: String) -> Self {
        CmdOutput {
            stdout,
            stderr: String::new(),
            code: ExitCode::Success,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] chordcount_core::Error),
    #[error("{0}")]
    Parameter(String),
    #[error("no feasible schedule: P(C_{n}^({k}), {q}) = 0")]
    Infeasible { n: usize, k: usize, q: u32 },
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Core(_) | CliError::Parameter(_) => ExitCode::Parameter,
            CliError::Infeasible { .. } => ExitCode::Infeasible,
        }
    }
}

type CmdResult = Result<CmdOutput, CliError>;

pub fn run(cli: &Cli) -> CmdOutput {
    let limits = cli.limits();
    let result = match &cli.command {
        Command::Count(a) => cmd_count(a, &limits),
        Command::Series(a) => cmd_series(a, &limits),
        Command::Spectrum(a) => cmd_spectrum(a, &limits),
        Command::Schedule(a) => cmd_schedule(a, &limits),
        Command::Bounds(a) => cmd_bounds(a, &limits),
    };
    result.unwrap_or_else(|e| CmdOutput {
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
        code: e.exit_code(),
    })
}

fn render_records(records: &[CountRecord], format: Format) -> String {
    match format {
        Format::Table => report::records_table(records),
        Format::Csv => report::records_csv(records),
        Format::Json => report::records_json(records),
        Format::Bfile => bfile::emit(
            &records
                .iter()
                .map(|r| (r.n, r.count.clone()))
                .collect::<Vec<_>>(),
        ),
    }
}

pub fn cmd_count(a: &CountArgs, limits: &Limits) -> CmdResult {
    let method = match a.method {
        MethodChoice::Auto => default_method(a.n, a.k, a.q),
        MethodChoice::Fixed(m) => m,
    };
    let rec = count_with(method, a.n, a.k, a.q, limits)?;
    let stdout = match a.format {
        Format::Table => format!(
            "P(C_{}^({}), {}) = {}  [{}]\n",
            rec.n, rec.k, rec.q, rec.count, rec.method
        ),
        f => render_records(std::slice::from_ref(&rec), f),
    };
    Ok(CmdOutput::ok(stdout))
}

/// Values computed for one `n` in a series.
#[derive(Debug, Clone)]
pub struct SeriesRow {
    pub n: usize,
    pub records: Vec<CountRecord>,
    pub notes: Vec<String>,
    pub mismatch: Option<String>,
}

impl SeriesRow {
    pub fn value(&self) -> Option<&BigUint> {
        self.records.first().map(|r| &r.count)
    }
}

/// Evaluates every requested method at `n` and compares the results.
pub fn series_row(
    n: usize,
    k: usize,
    q: u32,
    methods: &MethodSet,
    check_reference: bool,
    limits: &Limits,
) -> SeriesRow {
    let methods: Vec<Method> = match methods {
        MethodSet::Auto => vec![default_method(n, k, q)],
        MethodSet::List(l) => l.clone(),
    };
    let mut row = SeriesRow {
        n,
        records: Vec::new(),
        notes: Vec::new(),
        mismatch: None,
    };
    for m in methods {
        match count_with(m, n, k, q, limits) {
            Ok(r) => row.records.push(r),
            Err(e) => row.notes.push(format!("n={n}: skipped {m}: {e}")),
        }
    }
    if row.records.is_empty() {
        row.notes
            .push(format!("n={n}: no requested method applies"));
    }
    let mut sources: Vec<(String, BigUint)> = row
        .records
        .iter()
        .map(|r| (r.method.to_string(), r.count.clone()))
        .collect();
    if check_reference && k == 3 && q == 3 {
        if let Some(v) = reference::a383733(n) {
            sources.push(("reference".into(), BigUint::from(v)));
        }
    }
    row.mismatch = mismatch_line(n, &sources);
    row
}

/// A `MISMATCH` row if the labelled values are not all equal.
pub fn mismatch_line(n: usize, sources: &[(String, BigUint)]) -> Option<String> {
    if sources.windows(2).all(|w| w[0].1 == w[1].1) {
        return None;
    }
    let parts: Vec<String> = sources.iter().map(|(s, v)| format!("{s}={v}")).collect();
    Some(format!("MISMATCH n={n} {}", parts.join(" ")))
}

pub fn cmd_series(a: &SeriesArgs, limits: &Limits) -> CmdResult {
    let (lo, hi) = a.range;
    ChordGraph::new(lo, a.k)?;
    let rows: Vec<SeriesRow> = (lo..=hi)
        .into_par_iter()
        .map(|n| series_row(n, a.k, a.q, &a.method, a.check_reference, limits))
        .collect();

    let mut stderr = String::new();
    for note in rows.iter().flat_map(|r| &r.notes) {
        writeln!(stderr, "note: {note}").unwrap();
    }
    let mismatches: Vec<&str> = rows.iter().filter_map(|r| r.mismatch.as_deref()).collect();
    let stdout = match a.format {
        Format::Table => {
            let table: Vec<Vec<String>> = rows
                .iter()
                .filter_map(|r| {
                    let v = r.value()?;
                    let methods: Vec<&str> = r.records.iter().map(|x| x.method.as_str()).collect();
                    Some(vec![
                        r.n.to_string(),
                        (r.n % 4).to_string(),
                        v.to_string(),
                        methods.join(","),
                    ])
                })
                .collect();
            let mut s = report::aligned(&["n", "n mod 4", "count", "methods"], &table);
            for m in &mismatches {
                writeln!(s, "{m}").unwrap();
            }
            s
        }
        Format::Bfile => {
            let terms: Vec<(usize, BigUint)> = rows
                .iter()
                .filter(|r| r.mismatch.is_none())
                .filter_map(|r| Some((r.n, r.value()?.clone())))
                .collect();
            bfile::emit(&terms)
        }
        f => {
            let records: Vec<CountRecord> = rows
                .iter()
                .flat_map(|r| r.records.iter().cloned())
                .collect();
            render_records(&records, f)
        }
    };
    if a.format != Format::Table {
        for m in &mismatches {
            writeln!(stderr, "{m}").unwrap();
        }
    }
    Ok(CmdOutput {
        stdout,
        stderr,
        code: if mismatches.is_empty() {
            ExitCode::Success
        } else {
            ExitCode::Mismatch
        },
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct FactorCheck {
    pub factor: String,
    pub divides: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumReport {
    pub automaton: String,
    pub states: usize,
    pub transitions: usize,
    pub char_poly: String,
    /// Constant term first.
    pub coefficients: Vec<String>,
    pub stated_factors: Vec<FactorCheck>,
    pub cofactor: Option<String>,
    /// Range of `n` on which `L_n + cos_term(n) + 2 s_n + p_n(cofactor) = tr(A^n)` was checked.
    pub power_sum_identity: Option<(usize, usize, bool)>,
    pub recurrence: String,
    pub recurrence_order: usize,
    pub series: String,
    pub series_range: (usize, usize),
    pub recurrence_holds: bool,
    pub first_violation: Option<usize>,
    pub minimal_orders: Vec<(String, usize)>,
}

impl SpectrumReport {
    fn render(&self) -> String {
        let mut s = String::new();
        writeln!(
            s,
            "automaton: {} ({} states, {} transitions)",
            self.automaton, self.states, self.transitions
        )
        .unwrap();
        writeln!(s, "char poly: {}", self.char_poly).unwrap();
        writeln!(
            s,
            "coefficients (constant first): [{}]",
            self.coefficients.join(", ")
        )
        .unwrap();
        for f in &self.stated_factors {
            let verdict = if f.divides {
                "divides"
            } else {
                "DOES NOT divide"
            };
            writeln!(s, "factor {}: {verdict}", f.factor).unwrap();
        }
        if let Some(c) = &self.cofactor {
            writeln!(s, "cofactor: {c}").unwrap();
        }
        if let Some((lo, hi, ok)) = self.power_sum_identity {
            let verdict = if ok { "holds" } else { "FAILS" };
            writeln!(s, "L_n + cos_term(n) + 2 s_n + cofactor power sum = tr(A^n), n in [{lo}, {hi}]: {verdict}").unwrap();
        }
        writeln!(
            s,
            "recurrence (order {}): {}",
            self.recurrence_order, self.recurrence
        )
        .unwrap();
        let (lo, hi) = self.series_range;
        let verdict = match (self.recurrence_holds, self.first_violation) {
            (true, _) => "holds".to_string(),
            (false, Some(i)) => format!("FAILS at term {}", lo + i),
            (false, None) => "FAILS".to_string(),
        };
        writeln!(s, "verified on {} for [{lo}, {hi}]: {verdict}", self.series).unwrap();
        for (what, order) in &self.minimal_orders {
            writeln!(s, "minimal recurrence order of {what}: {order}").unwrap();
        }
        s
    }
}

fn check_on(
    p: &IntPolynomial,
    seq: &[BigInt],
) -> Result<(String, usize, RecurrenceCheck), CliError> {
    let r = recurrence_from_charpoly(p)?;
    let check = verify_recurrence(&r, seq)?;
    Ok((r.to_string(), r.order(), check))
}

/// `tr(M^e)` for `e = 1..=len`.
fn trace_series(m: &ExactMatrix, len: usize) -> Vec<BigInt> {
    let mut p = m.clone();
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(p.trace());
        p = m * &p;
    }
    out
}

pub fn window_spectrum(k: usize, q: u32, limits: &Limits) -> Result<SpectrumReport, CliError> {
    let a = WindowAutomaton::new(k, q, limits)?;
    let m = a.adjacency();
    let p = char_poly(m);
    let d = m.dim();
    let len = 2 * d + 40;
    let traces = trace_series(m, len);
    let (recurrence, order, check) = check_on(&p, &traces)?;

    let mut stated_factors = Vec::new();
    let mut cofactor = None;
    let mut power_sum_identity = None;
    if k == 3 && q == 3 {
        let golden = IntPolynomial::from_coeffs(&[-1, -1, 1]);
        let cyclotomic = IntPolynomial::from_coeffs(&[1, 1, 1]);
        let cubic = IntPolynomial::from_coeffs(&[1, 0, 1, 1]);
        let cubic_sq = cubic.pow(2);
        for f in [&golden, &cyclotomic] {
            stated_factors.push(FactorCheck {
                factor: format!("{f}"),
                divides: poly_divides(f, &p),
            });
        }
        stated_factors.push(FactorCheck {
            factor: format!("({cubic})^2"),
            divides: poly_divides(&cubic_sq, &p),
        });
        if let Some(c) = p.div_exact(&(&(&golden * &cyclotomic) * &cubic_sq)) {
            let sums = c.power_sums(20);
            let mut cache = SequenceCache::new();
            let ok = (1..=20).all(|n| {
                let l = cache.lucas(n).clone();
                let s = cache.s(n).clone();
                l + BigInt::from(cos_term(n)) + 2 * s + &sums[n - 1] == traces[n - 1]
            });
            power_sum_identity = Some((1, 20, ok));
            cofactor = Some(c.to_string());
        }
    }

    let odd: Vec<BigInt> = traces.iter().step_by(2).cloned().collect();
    Ok(SpectrumReport {
        automaton: format!("window k={k} q={q}"),
        states: d,
        transitions: a.transition_count(),
        char_poly: p.to_string(),
        coefficients: coefficient_strings(&p),
        stated_factors,
        cofactor,
        power_sum_identity,
        recurrence,
        recurrence_order: order,
        series: "tr(A^n)".into(),
        series_range: (1, len),
        recurrence_holds: check.holds,
        first_violation: check.first_violation,
        minimal_orders: vec![
            ("tr(A^n)".into(), minimal_recurrence(&traces).order()),
            ("tr(A^n), odd n".into(), minimal_recurrence(&odd).order()),
        ],
    })
}

pub fn paired_spectrum() -> Result<SpectrumReport, CliError> {
    let a = PairedAutomaton::new();
    let m = a.adjacency();
    let p = char_poly(m);
    // The recurrence has order 54, so the even-n counts are taken far enough
    // past m = 30 that every index in [M_MIN, 30] is exercised.
    let hi = (M_MIN + 2 * m.dim() + 4).max(30);
    let mut power = m.pow(M_MIN as u64);
    let mut counts = Vec::with_capacity(hi - M_MIN + 1);
    for _ in M_MIN..=hi {
        counts.push(power.trace_permuted(a.swap()));
        power = m * &power;
    }
    let (recurrence, order, check) = check_on(&p, &counts)?;
    let transitions = (0..m.dim()).map(|i| a.successors(i).count()).sum();
    Ok(SpectrumReport {
        automaton: "paired windows k=3 q=3".into(),
        states: m.dim(),
        transitions,
        char_poly: p.to_string(),
        coefficients: coefficient_strings(&p),
        stated_factors: Vec::new(),
        cofactor: None,
        power_sum_identity: None,
        recurrence,
        recurrence_order: order,
        series: "P(C_2m^(3), 3) indexed by m".into(),
        series_range: (M_MIN, hi),
        recurrence_holds: check.holds,
        first_violation: check.first_violation,
        minimal_orders: vec![("P(C_2m^(3), 3)".into(), minimal_recurrence(&counts).order())],
    })
}

pub fn cmd_spectrum(a: &SpectrumArgs, limits: &Limits) -> CmdResult {
    if a.dump {
        let text = if a.paired {
            PairedAutomaton::new().dump()
        } else {
            WindowAutomaton::new(a.k, a.q, limits)?.dump()
        };
        return Ok(CmdOutput::ok(text));
    }
    let rep = if a.paired {
        paired_spectrum()?
    } else {
        window_spectrum(a.k, a.q, limits)?
    };
    let stdout = match a.format {
        Format::Json => json_line(&rep),
        Format::Table => rep.render(),
        f => return Err(unsupported_format("spectrum", f)),
    };
    let holds = rep.recurrence_holds
        && rep.stated_factors.iter().all(|f| f.divides)
        && rep.power_sum_identity.map_or(true, |(_, _, ok)| ok);
    Ok(CmdOutput {
        stdout,
        stderr: String::new(),
        code: if holds {
            ExitCode::Success
        } else {
            ExitCode::Mismatch
        },
    })
}

fn json_line<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain structs serialize");
    s.push('\n');
    s
}

fn unsupported_format(cmd: &str, f: Format) -> CliError {
    CliError::Parameter(format!("{cmd} supports table and json output, not {f:?}").to_lowercase())
}

#[derive(Debug, Clone, Serialize)]
struct ScheduleJson {
    #[serde(flatten)]
    view: ScheduleView,
    q: u32,
    index: Option<String>,
    feasible_configurations: Option<String>,
    proper: bool,
    conflicts: Vec<crate::schedule::Conflict>,
}

pub fn cmd_schedule(a: &ScheduleArgs, limits: &Limits) -> CmdResult {
    let g = ChordGraph::new(a.n, a.k)?;
    if a.q == 0 || a.q > 26 {
        return Err(CliError::Parameter(format!(
            "schedules use 1 to 26 resources, got q = {}",
            a.q
        )));
    }
    if let Some(text) = &a.assignment {
        let colors = parse_assignment(text).map_err(|e| CliError::Parameter(e.to_string()))?;
        if colors.len() != a.n {
            return Err(CliError::Parameter(format!(
                "assignment covers {} slots, expected {}",
                colors.len(),
                a.n
            )));
        }
        colors.check_range(a.q)?;
        let found = conflicts(&g, &colors);
        let view = ScheduleView::new(a.n, a.k, &colors);
        let stdout = match a.format {
            Format::Json => json_line(&ScheduleJson {
                view,
                q: a.q,
                index: None,
                feasible_configurations: None,
                proper: found.is_empty(),
                conflicts: found.clone(),
            }),
            Format::Table => {
                let mut s = view.render();
                if found.is_empty() {
                    writeln!(s, "valid: proper on C_{}^({})", a.n, a.k).unwrap();
                }
                for c in &found {
                    writeln!(
                        s,
                        "conflict: slots {} and {} ({}) both use {}",
                        c.slots.0,
                        c.slots.1,
                        c.kind.as_str(),
                        c.label
                    )
                    .unwrap();
                }
                s
            }
            f => return Err(unsupported_format("schedule", f)),
        };
        return Ok(CmdOutput {
            stdout,
            stderr: String::new(),
            code: if found.is_empty() {
                ExitCode::Success
            } else {
                ExitCode::Infeasible
            },
        });
    }

    let index: BigUint = a.index.trim().parse().map_err(|_| {
        CliError::Parameter(format!(
            "index must be a non-negative integer, got `{}`",
            a.index
        ))
    })?;
    let counter = FrontierCounter::new(&g, a.q, limits)?;
    let total = counter.total().clone();
    if total == BigUint::from(0u32) {
        return Err(CliError::Infeasible {
            n: a.n,
            k: a.k,
            q: a.q,
        });
    }
    let colors = counter.unrank(&index)?;
    debug_assert!(g.is_proper(&colors)?);
    let view = ScheduleView::new(a.n, a.k, &colors);
    let stdout = match a.format {
        Format::Json => json_line(&ScheduleJson {
            view,
            q: a.q,
            index: Some(index.to_string()),
            feasible_configurations: Some(total.to_string()),
            proper: true,
            conflicts: Vec::new(),
        }),
        Format::Table => {
            let mut s = format!(
                "C_{}^({}) with {} resources: {total} feasible configurations\nconfiguration #{index}:\n",
                a.n, a.k, a.q
            );
            s.push_str(&view.render());
            s
        }
        f => return Err(unsupported_format("schedule", f)),
    };
    Ok(CmdOutput::ok(stdout))
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundsView {
    pub n: usize,
    pub k: usize,
    pub alpha: usize,
    pub chi_lower: usize,
    pub greedy_upper: usize,
    pub chi: usize,
    pub bipartite: bool,
    pub annotations: Vec<String>,
}

/// Notes on where computed bounds differ from previously reported values.
pub fn bounds_annotations(g: &ChordGraph, rep: &BoundsReport) -> Vec<String> {
    let mut notes = Vec::new();
    if rep.k != 3 {
        return notes;
    }
    if let Some(&(_, chi)) = reference::REPORTED_CHI_K3.iter().find(|(n, _)| *n == rep.n) {
        if chi == rep.chi {
            notes.push(format!("reported chi = {chi} confirmed"));
        } else {
            let why = if rep.bipartite {
                " (graph is bipartite)"
            } else {
                ""
            };
            notes.push(format!(
                "reported chi = {chi} differs from computed chi = {}{why}",
                rep.chi
            ));
        }
    }
    let (alpha, witness) = reference::REPORTED_ALPHA_C7_K3;
    if rep.n == 7 {
        let set: Vec<String> = witness.iter().map(usize::to_string).collect();
        let mut note = format!(
            "reported alpha = {alpha} with witness {{{}}}",
            set.join(", ")
        );
        if let Some((u, v)) = dependent_pair(g, &witness) {
            write!(note, ", but {{{u}, {v}}} is an edge").unwrap();
        }
        if alpha != rep.alpha {
            write!(note, "; exhaustive search gives alpha = {}", rep.alpha).unwrap();
        }
        notes.push(note);
    }
    notes
}

pub fn cmd_bounds(a: &BoundsArgs, limits: &Limits) -> CmdResult {
    let g = ChordGraph::new(a.n, a.k)?;
    let rep = bounds_report(&g, limits)?;
    let view = BoundsView {
        n: rep.n,
        k: rep.k,
        alpha: rep.alpha,
        chi_lower: rep.lower,
        greedy_upper: rep.greedy_upper,
        chi: rep.chi,
        bipartite: rep.bipartite,
        annotations: bounds_annotations(&g, &rep),
    };
    let stdout = match a.format {
        Format::Json => json_line(&view),
        Format::Table => {
            let rows = vec![
                vec!["alpha".into(), view.alpha.to_string()],
                vec![
                    "chi lower (ceil n/alpha)".into(),
                    view.chi_lower.to_string(),
                ],
                vec!["greedy upper".into(), view.greedy_upper.to_string()],
                vec!["chi".into(), view.chi.to_string()],
                vec!["bipartite".into(), view.bipartite.to_string()],
            ];
            let mut s = format!("C_{}^({}), degree {}\n", a.n, a.k, g.degree());
            s.push_str(&report::aligned(&["bound", "value"], &rows));
            for note in &view.annotations {
                writeln!(s, "note: {note}").unwrap();
            }
            s
        }
        f => return Err(unsupported_format("bounds", f)),
    };
    Ok(CmdOutput::ok(stdout))
}

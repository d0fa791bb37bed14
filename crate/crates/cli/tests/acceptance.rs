//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the report is printed even when the
//! run succeeds. A criterion listed in `KNOWN_UNATTAINABLE` is still run in
//! full and reported as FAIL; it only stops that failure from failing the
//! process.

use std::process::ExitCode as ProcessExit;
use std::time::Instant;

use clap::Parser;

use chordcount::args::Cli;
use chordcount::commands::{bounds_annotations, paired_spectrum, series_row, window_spectrum};
use chordcount::{args::MethodSet, bfile, run, CmdOutput, ExitCode};
use chordcount_core::bounds::{
    bounds_report, chi_lower, chromatic_number, independence_number_exhaustive, is_bipartite,
};
use chordcount_core::closed_form::{
    asymptotic_params, closed_form_odd, lucas, s_seq, SequenceCache,
};
use chordcount_core::direct::{brute_count, dp_count, for_each_proper};
use chordcount_core::paired::{count_even, inclusion_exclusion_n10};
use chordcount_core::spectral::{recurrence_from_charpoly, verify_recurrence};
use chordcount_core::window::count_via_window;
use chordcount_core::{BigInt, BigUint, ChordGraph, IntPolynomial, Limits, SimpleGraph};

/// Values of P(C_n^(3), 3) for n = 6..=35, as published.
const TABLE: [u64; 30] = [
    42, 0, 0, 18, 186, 66, 0, 234, 930, 750, 0, 2244, 4578, 6498, 120, 18354, 22314, 50922, 2496,
    139500, 111390, 378504, 22008, 1019466, 559302, 2730294, 169536, 7279668, 2825406, 19341210,
];

/// Criteria that cannot hold as written. See the repository README.
const KNOWN_UNATTAINABLE: &[u32] = &[9];

fn table(n: usize) -> BigUint {
    BigUint::from(TABLE[n - 6])
}

fn exec(args: &[&str]) -> CmdOutput {
    let cli = Cli::try_parse_from(std::iter::once("chordcount").chain(args.iter().copied()))
        .expect("arguments parse");
    run(&cli)
}

/// Collects failed sub-checks for one criterion.
#[derive(Default)]
struct Checks {
    failures: Vec<String>,
    passed: usize,
}

impl Checks {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failures.push(what());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, got: T, want: T) {
        let ok = got == want;
        self.check(ok, || format!("{what}: got {got:?}, want {want:?}"));
    }
}

fn c1_table() -> Checks {
    let mut c = Checks::default();
    let limits = Limits::default();
    let start = Instant::now();
    let rows: Vec<_> = (6..=35)
        .map(|n| series_row(n, 3, 3, &MethodSet::Auto, false, &limits))
        .collect();
    let elapsed = start.elapsed();
    for r in &rows {
        c.eq(&format!("a({})", r.n), r.value().cloned(), Some(table(r.n)));
    }
    c.check(elapsed.as_secs_f64() < 5.0, || format!("took {elapsed:?}"));
    c
}

fn c2_cross_methods() -> Checks {
    let mut c = Checks::default();
    let limits = Limits::default();
    for n in 6..=16 {
        let g = ChordGraph::new(n, 3).unwrap();
        let b = brute_count(&g, 3, &limits).unwrap().count;
        let d = dp_count(&g, 3, &limits).unwrap().count;
        c.eq(&format!("brute = dp at n={n}"), b, d);
    }
    for n in (7..=35).step_by(2) {
        let g = ChordGraph::new(n, 3).unwrap();
        let d = dp_count(&g, 3, &limits).unwrap().count;
        let w = count_via_window(n, 3, 3, &limits).unwrap().count;
        let f = closed_form_odd(n).unwrap().count;
        c.eq(&format!("dp = window at n={n}"), &d, &w);
        c.eq(&format!("closed form = window at n={n}"), &f, &w);
    }
    for n in (8..=20).step_by(2) {
        let g = ChordGraph::new(n, 3).unwrap();
        let d = dp_count(&g, 3, &limits).unwrap().count;
        let p = count_even(n / 2).unwrap().count;
        c.eq(&format!("dp = paired at n={n}"), &d, &p);
        if n <= limits.brute_max_n {
            let b = brute_count(&g, 3, &limits).unwrap().count;
            c.eq(&format!("brute = paired at n={n}"), &b, &p);
        }
    }
    c
}

fn c3_inclusion_exclusion() -> Checks {
    let mut c = Checks::default();
    let ie = inclusion_exclusion_n10().unwrap();
    c.eq("local", ie.local.clone(), BigUint::from(216u32));
    c.eq("tied per event", ie.tied_per_event, 6);
    c.eq("result", ie.result.clone(), BigUint::from(186u32));

    // Independent enumeration of the diameter-free graph.
    let base = SimpleGraph::circulant(10, &[1, 3]).unwrap();
    let mut local = 0u64;
    let mut single = [0u64; 5];
    let mut pairs = [[0u64; 5]; 5];
    for_each_proper(&base, 3, &Limits::default(), |col| {
        local += 1;
        let tied: Vec<usize> = (0..5).filter(|&j| col[j] == col[j + 5]).collect();
        for &i in &tied {
            single[i] += 1;
            for &j in &tied {
                pairs[i][j] += 1;
            }
        }
    })
    .unwrap();
    c.eq("enumerated local", local, 216);
    c.eq("enumerated |A_j|", single, [6; 5]);
    for (i, row) in pairs.iter().enumerate() {
        for (j, &both) in row.iter().enumerate() {
            if i != j {
                c.eq(&format!("|A_{i} ∩ A_{j}|"), both, 0);
            }
        }
    }
    c
}

fn c4_spectrum() -> Checks {
    let mut c = Checks::default();
    let rep = window_spectrum(3, 3, &Limits::default()).unwrap();
    c.eq("states", rep.states, 12);
    for f in &rep.stated_factors {
        c.check(f.divides, || format!("{} does not divide", f.factor));
    }
    c.eq("stated factors checked", rep.stated_factors.len(), 3);
    c.eq("cofactor", rep.cofactor.as_deref(), Some("x^2 - 2x + 1"));
    c.eq(
        "power-sum identity",
        rep.power_sum_identity,
        Some((1, 20, true)),
    );
    c
}

fn c5_sequences() -> Checks {
    let mut c = Checks::default();
    c.eq("L_9", lucas(9), BigInt::from(76));
    c.eq("s_9", s_seq(9), BigInt::from(-31));
    c.eq("L_10", lucas(10), BigInt::from(123));
    c.eq("s_10", s_seq(10), BigInt::from(46));
    let companion = IntPolynomial::from_coeffs(&[1, 0, 1, 1]).companion();
    for n in 0..=60u64 {
        c.eq(
            &format!("s_{n} vs companion trace"),
            s_seq(n as usize),
            companion.pow(n).trace(),
        );
    }
    c
}

fn c6_recurrences() -> Checks {
    let mut c = Checks::default();
    let rep = paired_spectrum().unwrap();
    let (lo, hi) = rep.series_range;
    c.check(lo <= 4 && hi >= 30, || {
        format!("series covers only [{lo}, {hi}]")
    });
    c.eq(
        "paired char-poly recurrence order",
        rep.recurrence_order,
        54,
    );
    c.eq("paired recurrence holds", rep.recurrence_holds, true);

    let mut cache = SequenceCache::new();
    cache.lucas(300);
    cache.s(300);
    let lucas_rec = recurrence_from_charpoly(&IntPolynomial::from_coeffs(&[-1, -1, 1])).unwrap();
    let s_rec = recurrence_from_charpoly(&IntPolynomial::from_coeffs(&[1, 0, 1, 1])).unwrap();
    let l = verify_recurrence(&lucas_rec, cache.lucas_values()).unwrap();
    let s = verify_recurrence(&s_rec, cache.s_values()).unwrap();
    c.check(l.holds, || {
        format!("Lucas recurrence fails at {:?}", l.first_violation)
    });
    c.check(s.holds, || {
        format!("s recurrence fails at {:?}", s.first_violation)
    });
    c.check(cache.lucas_values().len() > 300, || {
        "Lucas cache not filled".into()
    });
    c
}

fn c7_zeros() -> Checks {
    let mut c = Checks::default();
    let limits = Limits::default();
    let values: Vec<(usize, BigUint)> = (6..=35)
        .map(|n| {
            (
                n,
                series_row(n, 3, 3, &MethodSet::Auto, false, &limits)
                    .value()
                    .unwrap()
                    .clone(),
            )
        })
        .collect();
    let zeros: Vec<usize> = values
        .iter()
        .filter(|(_, v)| *v == BigUint::from(0u32))
        .map(|(n, _)| *n)
        .collect();
    c.eq("zero set", zeros, vec![7, 8, 12, 16]);
    for (n, want) in [(20, 120u32), (24, 2496), (28, 22008), (32, 169536)] {
        c.eq(
            &format!("a({n})"),
            values[n - 6].1.clone(),
            BigUint::from(want),
        );
    }
    c
}

fn c8_asymptotics() -> Checks {
    let mut c = Checks::default();
    let a35 = closed_form_odd(35).unwrap().count;
    c.eq("a(35)", a35.clone(), BigUint::from(19341210u32));
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let gap = ((a35.to_string().parse::<f64>().unwrap()).ln() / 35.0 - phi.ln()).abs();
    c.check(gap < 0.01, || format!("|log a(35)/35 - log phi| = {gap}"));
    let params = asymptotic_params(10).unwrap();
    c.check(params.rho.within("1.4655", "1.4657"), || {
        format!("rho = {}", params.rho)
    });
    let width_ok = params.rho.width() * BigInt::from(10u64).pow(10)
        <= BigInt::from(10u64).pow(params.rho.scale);
    c.check(width_ok, || {
        format!("rho enclosure too wide: {}", params.rho)
    });
    c
}

fn c9_bounds() -> Checks {
    let mut c = Checks::default();
    let limits = Limits::default();
    for (n, want) in [(6, 3), (9, 3), (7, 4), (8, 4)] {
        let g = ChordGraph::new(n, 3).unwrap();
        c.eq(
            &format!("chi(C_{n}^(3))"),
            chromatic_number(&g, &limits).unwrap(),
            want,
        );
    }
    let g7 = ChordGraph::new(7, 3).unwrap();
    c.eq(
        "exhaustive alpha(C_7^(3))",
        independence_number_exhaustive(&g7).unwrap(),
        2,
    );
    c.eq("chi_lower(C_7^(3))", chi_lower(&g7, &limits).unwrap(), 4);
    let notes = bounds_annotations(&g7, &bounds_report(&g7, &limits).unwrap());
    c.check(
        notes
            .iter()
            .any(|s| s.contains("reported alpha = 3") && s.contains("{0, 4} is an edge")),
        || format!("alpha annotation missing: {notes:?}"),
    );
    c
}

fn c10_divisibility() -> Checks {
    let mut c = Checks::default();
    let limits = Limits::default();
    for (i, &v) in TABLE.iter().enumerate() {
        c.check(v % 6 == 0, || {
            format!("a({}) = {v} not divisible by 6", i + 6)
        });
    }
    for n in (6..=35).filter(|n| n % 4 == 2) {
        let g = ChordGraph::new(n, 3).unwrap();
        c.check(is_bipartite(&g), || format!("C_{n}^(3) not bipartite"));
        c.eq(
            &format!("chi(C_{n}^(3))"),
            chromatic_number(&g, &limits).unwrap(),
            2,
        );
    }
    c
}

fn c11_schedule() -> Checks {
    let mut c = Checks::default();
    let out = exec(&[
        "schedule",
        "--n",
        "20",
        "--k",
        "3",
        "--assignment",
        "ABABABCBCACABABCBCAC",
    ]);
    c.eq(
        "reference 20-slot assignment exit",
        out.code,
        ExitCode::Success,
    );
    c.check(out.stdout.contains("valid: proper"), || out.stdout.clone());
    for index in ["0", "57", "119"] {
        let out = exec(&["schedule", "--n", "20", "--k", "3", "--index", index]);
        c.eq(
            &format!("schedule index {index} exit"),
            out.code,
            ExitCode::Success,
        );
        c.check(out.stdout.contains("120 feasible configurations"), || {
            out.stdout.clone()
        });
    }
    let out = exec(&["schedule", "--n", "12", "--k", "3", "--index", "0"]);
    c.eq("n=12 exit", out.code, ExitCode::Infeasible);
    c
}

fn c12_bfile() -> Checks {
    let mut c = Checks::default();
    let out = exec(&[
        "series", "--range", "6..35", "--k", "3", "--q", "3", "--format", "bfile",
    ]);
    c.eq("exit", out.code, ExitCode::Success);
    c.check(out.stdout.starts_with("6 42\n7 0\n8 0\n9 18\n"), || {
        format!("starts {:?}", &out.stdout[..out.stdout.len().min(30)])
    });
    c.eq("lines", out.stdout.lines().count(), 30);
    match bfile::parse(&out.stdout) {
        Ok(terms) => c.eq("round trip", bfile::emit(&terms), out.stdout.clone()),
        Err(e) => c.check(false, || e.to_string()),
    }
    c
}

type Criterion = (u32, &'static str, fn() -> Checks);

fn main() -> ProcessExit {
    let criteria: [Criterion; 12] = [
        (
            1,
            "published n = 6..35 values via default routing in < 5 s",
            c1_table,
        ),
        (2, "cross-method agreement", c2_cross_methods),
        (3, "inclusion-exclusion at n = 10", c3_inclusion_exclusion),
        (4, "automaton spectrum and power-sum identity", c4_spectrum),
        (5, "Lucas and s sequence identities", c5_sequences),
        (6, "paired, Lucas and s recurrences", c6_recurrences),
        (7, "zero set and non-vanishing mod 4", c7_zeros),
        (8, "growth rate and rho enclosure", c8_asymptotics),
        (9, "chromatic numbers and alpha annotation", c9_bounds),
        (
            10,
            "divisibility by 6 and bipartite n = 2 mod 4",
            c10_divisibility,
        ),
        (11, "schedule validation and feasibility", c11_schedule),
        (12, "b-file emission and round trip", c12_bfile),
    ];
    let mut unexpected = 0;
    let mut failed = 0;
    for (id, name, f) in criteria {
        let start = Instant::now();
        let checks = f();
        let ms = start.elapsed().as_millis();
        if checks.failures.is_empty() {
            println!("PASS  {id:>2}  {name}  ({} checks, {ms} ms)", checks.passed);
            continue;
        }
        failed += 1;
        let known = KNOWN_UNATTAINABLE.contains(&id);
        if !known {
            unexpected += 1;
        }
        let tag = if known { "  [known unattainable]" } else { "" };
        println!(
            "FAIL  {id:>2}  {name}  ({} of {} checks failed){tag}",
            checks.failures.len(),
            checks.failures.len() + checks.passed
        );
        for msg in &checks.failures {
            println!("        - {msg}");
        }
    }
    println!("acceptance: {} of 12 criteria pass", 12 - failed);
    if unexpected == 0 {
        ProcessExit::SUCCESS
    } else {
        ProcessExit::FAILURE
    }
}

//! Count records and resource limits shared by all engines.

use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;

/// Counting engine that produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Brute,
    Dp,
    Window,
    Paired,
    ClosedForm,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Brute,
        Method::Dp,
        Method::Window,
        Method::Paired,
        Method::ClosedForm,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Dp => "dp",
            Method::Window => "window",
            Method::Paired => "paired",
            Method::ClosedForm => "closed_form",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownMethod;

impl fmt::Display for UnknownMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("expected one of brute, dp, window, paired, closed_form")
    }
}

impl FromStr for Method {
    type Err = UnknownMethod;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "brute" => Ok(Method::Brute),
            "dp" => Ok(Method::Dp),
            "window" => Ok(Method::Window),
            "paired" => Ok(Method::Paired),
            "closed_form" | "closed-form" => Ok(Method::ClosedForm),
            _ => Err(UnknownMethod),
        }
    }
}

/// Exact value of `P(C_n^(k), q)` together with the engine that computed it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountRecord {
    pub n: usize,
    pub k: usize,
    pub q: u32,
    pub count: BigUint,
    pub method: Method,
}

impl CountRecord {
    pub fn new(n: usize, k: usize, q: u32, count: BigUint, method: Method) -> Self {
        CountRecord {
            n,
            k,
            q,
            count,
            method,
        }
    }
}

/// Guards on the exponential parts of the toolkit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` accepted by exhaustive enumeration.
    pub brute_max_n: usize,
    /// Cap on the total number of frontier states kept by the dynamic program.
    pub dp_max_states: usize,
    /// Cap on window automaton size `q (q-1)^(k-1)`.
    pub automaton_max_states: usize,
    /// Largest `n` for exact independence number search.
    pub alpha_max_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            brute_max_n: 18,
            dp_max_states: 4_000_000,
            automaton_max_states: 4096,
            alpha_max_n: 60,
        }
    }
}

//! Method applicability and default routing.

use crate::closed_form::closed_form_odd;
use crate::direct::{brute_count, dp_count};
use crate::graph::ChordGraph;
use crate::paired::{count_even, M_MIN};
use crate::record::{CountRecord, Limits, Method};
use crate::window::count_via_window;
use crate::{Error, Result};

/// Checks whether `method` computes `P(C_n^(k), q)` for these parameters,
/// without running it. Size guards are checked only for brute force.
pub fn check_applicable(method: Method, n: usize, k: usize, q: u32, limits: &Limits) -> Result<()> {
    ChordGraph::new(n, k)?;
    let special = k == 3 && q == 3;
    match method {
        Method::Brute if n > limits.brute_max_n => Err(Error::SizeGuard {
            what: "brute-force vertex count",
            size: n as u128,
            limit: limits.brute_max_n as u128,
        }),
        Method::Brute | Method::Dp => Ok(()),
        Method::Window if n % 2 == 0 => Err(Error::Unsupported {
            method,
            requirement: "odd n (it does not model diameter edges)",
            suggested: if special { Method::Paired } else { Method::Dp },
        }),
        Method::Window if n < 2 * k + 1 => Err(Error::Threshold {
            method,
            n,
            reason: "window automaton needs n >= 2k + 1",
            suggested: Method::Brute,
        }),
        Method::Window => Ok(()),
        Method::Paired if !special || n % 2 == 1 => Err(Error::Unsupported {
            method,
            requirement: "k = 3, q = 3 and even n",
            suggested: if n % 2 == 1 {
                Method::Window
            } else {
                Method::Dp
            },
        }),
        Method::Paired if n / 2 < M_MIN => Err(Error::Threshold {
            method,
            n,
            reason: "paired windows are validated only for n >= 8",
            suggested: Method::Brute,
        }),
        Method::Paired => Ok(()),
        Method::ClosedForm if !special || n % 2 == 0 => Err(Error::Unsupported {
            method,
            requirement: "k = 3, q = 3 and odd n",
            suggested: if n % 2 == 0 {
                Method::Dp
            } else {
                Method::Window
            },
        }),
        Method::ClosedForm => Ok(()),
    }
}

/// Odd `n`: closed form for `k = q = 3`, else the window automaton.
/// Even `n`: paired windows for `k = q = 3` (brute force at `n = 6`), else
/// the frontier DP.
pub fn default_method(n: usize, k: usize, q: u32) -> Method {
    let special = k == 3 && q == 3;
    if n % 2 == 1 {
        if special {
            Method::ClosedForm
        } else {
            Method::Window
        }
    } else if special {
        if n / 2 >= M_MIN {
            Method::Paired
        } else {
            Method::Brute
        }
    } else {
        Method::Dp
    }
}

pub fn count_with(
    method: Method,
    n: usize,
    k: usize,
    q: u32,
    limits: &Limits,
) -> Result<CountRecord> {
    check_applicable(method, n, k, q, limits)?;
    match method {
        Method::Brute => brute_count(&ChordGraph::new(n, k)?, q, limits),
        Method::Dp => dp_count(&ChordGraph::new(n, k)?, q, limits),
        Method::Window => {
            let mut r = count_via_window(n, k, q, limits)?;
            r.k = k;
            Ok(r)
        }
        Method::Paired => count_even(n / 2),
        Method::ClosedForm => closed_form_odd(n),
    }
}

pub fn count_default(n: usize, k: usize, q: u32, limits: &Limits) -> Result<CountRecord> {
    count_with(default_method(n, k, q), n, k, q, limits)
}

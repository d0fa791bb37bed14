//! The length-`k` window automaton over `q` colors.
//!
//! A state is a window `(c_i, ..., c_{i+k-1})` with adjacent entries
//! distinct. The shift to `(c_{i+1}, ..., c_{i+k})` is allowed iff
//! `c_{i+k}` differs from both `c_{i+k-1}` (cycle edge) and `c_i` (chord).
//! Closed walks of length `n` are then exactly the cyclic sequences that
//! respect offsets 1 and `k`, so `tr(A^n)` counts colorings of the circulant
//! graph without diameters.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use num_bigint::{BigInt, BigUint};

use crate::matrix::ExactMatrix;
use crate::record::{CountRecord, Limits, Method};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowAutomaton {
    k: usize,
    q: u32,
    states: Vec<Vec<u32>>,
    adjacency: ExactMatrix,
}

/// All length-`len` sequences over `0..q` with adjacent entries distinct, in
/// lexicographic order.
pub(crate) fn legal_windows(len: usize, q: u32) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = alloc::vec![Vec::new()];
    for _ in 0..len {
        let mut grown = Vec::with_capacity(out.len() * q as usize);
        for w in &out {
            for c in 0..q {
                if w.last() != Some(&c) {
                    let mut x = w.clone();
                    x.push(c);
                    grown.push(x);
                }
            }
        }
        out = grown;
    }
    out
}

impl WindowAutomaton {
    pub fn new(k: usize, q: u32, limits: &Limits) -> Result<Self> {
        if k < 2 || q < 2 {
            return Err(Error::ParameterOutOfRange(format!(
                "window automaton needs k >= 2 and q >= 2, got k = {k}, q = {q}"
            )));
        }
        let bound = (q as u128).saturating_mul(
            u128::from(q - 1)
                .checked_pow((k - 1) as u32)
                .unwrap_or(u128::MAX),
        );
        if bound > limits.automaton_max_states as u128 {
            return Err(Error::SizeGuard {
                what: "window automaton states",
                size: bound,
                limit: limits.automaton_max_states as u128,
            });
        }

        let states = legal_windows(k, q);
        let index_of = |w: &[u32]| states.binary_search_by(|s| s.as_slice().cmp(w)).ok();
        let mut adjacency = ExactMatrix::zeros(states.len());
        let mut shifted = Vec::with_capacity(k);
        for (i, w) in states.iter().enumerate() {
            for c in 0..q {
                if c == w[k - 1] || c == w[0] {
                    continue;
                }
                shifted.clear();
                shifted.extend_from_slice(&w[1..]);
                shifted.push(c);
                let j = index_of(&shifted).expect("shifted window is legal");
                adjacency.set(i, j, BigInt::from(1));
            }
        }
        Ok(WindowAutomaton {
            k,
            q,
            states,
            adjacency,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn states(&self) -> &[Vec<u32>] {
        &self.states
    }

    pub fn adjacency(&self) -> &ExactMatrix {
        &self.adjacency
    }

    pub fn successors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.adjacency.row(i);
        (0..row.len()).filter(move |&j| row[j] == BigInt::from(1))
    }

    pub fn transition_count(&self) -> usize {
        (0..self.states.len())
            .map(|i| self.successors(i).count())
            .sum()
    }

    /// One state per line: `index: colors -> successor indices`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (i, w) in self.states.iter().enumerate() {
            let _ = write!(out, "{i}: {}", join(w));
            out.push_str(" ->");
            for j in self.successors(i) {
                let _ = write!(out, " {j}");
            }
            out.push('\n');
        }
        out
    }
}

pub(crate) fn join(colors: &[u32]) -> String {
    let mut s = String::new();
    for (i, c) in colors.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "{c}");
    }
    s
}

/// `tr(M^n)`, exactly.
pub fn matrix_power_trace(m: &ExactMatrix, n: u64) -> BigInt {
    m.pow(n).trace()
}

/// Proper `q`-colorings of the cycle on `Z_n` with offset-`k` chords and no
/// diameters, as `tr(A_{k,q}^n)`. For odd `n` this is `P(C_n^(k), q)`.
pub fn count_via_window(n: usize, k: usize, q: u32, limits: &Limits) -> Result<CountRecord> {
    if n < 2 * k + 1 {
        return Err(Error::Threshold {
            method: Method::Window,
            n,
            reason: "window automaton needs n >= 2k + 1",
            suggested: Method::Brute,
        });
    }
    let automaton = WindowAutomaton::new(k, q, limits)?;
    let trace = matrix_power_trace(automaton.adjacency(), n as u64);
    let count = trace.to_biguint().expect("walk counts are nonnegative");
    Ok(CountRecord::new(n, k, q, count, Method::Window))
}

/// Same as [`count_via_window`] but reusing a built automaton.
pub fn count_with_automaton(automaton: &WindowAutomaton, n: usize) -> Result<BigUint> {
    if n < 2 * automaton.k + 1 {
        return Err(Error::Threshold {
            method: Method::Window,
            n,
            reason: "window automaton needs n >= 2k + 1",
            suggested: Method::Brute,
        });
    }
    Ok(matrix_power_trace(automaton.adjacency(), n as u64)
        .to_biguint()
        .expect("walk counts are nonnegative"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::direct::brute_count_graph;
    use crate::graph::SimpleGraph;

    fn a33() -> WindowAutomaton {
        WindowAutomaton::new(3, 3, &Limits::default()).unwrap()
    }

    /// Closed walks of length `n` by depth-first enumeration.
    fn closed_walks(a: &WindowAutomaton, n: usize) -> u64 {
        fn go(a: &WindowAutomaton, start: usize, at: usize, left: usize) -> u64 {
            if left == 0 {
                return u64::from(at == start);
            }
            a.successors(at).map(|j| go(a, start, j, left - 1)).sum()
        }
        (0..a.states().len()).map(|s| go(a, s, s, n)).sum()
    }

    #[test]
    fn state_counts() {
        assert_eq!(a33().states().len(), 12);
        assert_eq!(
            WindowAutomaton::new(2, 3, &Limits::default())
                .unwrap()
                .states()
                .len(),
            6
        );
        for k in 2..=6 {
            for q in 2..=4u32 {
                let a = WindowAutomaton::new(k, q, &Limits::default()).unwrap();
                assert_eq!(a.states().len() as u32, q * (q - 1).pow(k as u32 - 1));
            }
        }
    }

    #[test]
    fn transitions_of_three_three() {
        let a = a33();
        assert_eq!(a.transition_count(), 18);
        for (i, w) in a.states().iter().enumerate() {
            let out = a.successors(i).count();
            assert_eq!(out, if w[0] == w[2] { 2 } else { 1 }, "state {w:?}");
        }
    }

    #[test]
    fn traces_against_table() {
        let a = a33();
        assert_eq!(matrix_power_trace(a.adjacency(), 9), BigInt::from(18));
        assert_eq!(matrix_power_trace(a.adjacency(), 7), BigInt::from(0));
        let lim = Limits::default();
        assert_eq!(
            count_via_window(9, 3, 3, &lim).unwrap().count,
            BigUint::from(18u32)
        );
        assert_eq!(
            count_via_window(11, 3, 3, &lim).unwrap().count,
            BigUint::from(66u32)
        );
        assert_eq!(
            count_via_window(10, 3, 3, &lim).unwrap().count,
            BigUint::from(216u32)
        );
    }

    #[test]
    fn trace_equals_closed_walks() {
        for (k, q) in [(3, 3), (2, 3), (3, 4), (4, 3)] {
            let a = WindowAutomaton::new(k, q, &Limits::default()).unwrap();
            for n in 1..=8 {
                assert_eq!(
                    matrix_power_trace(a.adjacency(), n as u64),
                    BigInt::from(closed_walks(&a, n)),
                    "k={k} q={q} n={n}"
                );
            }
        }
    }

    #[test]
    fn window_matches_circulant_brute_force() {
        let lim = Limits::default();
        for k in 2..=4 {
            for q in 2..=4 {
                for n in (2 * k + 1)..=14 {
                    let g = SimpleGraph::circulant(n, &[1, k]).unwrap();
                    let expected = brute_count_graph(&g, q, &lim).unwrap();
                    let got = count_via_window(n, k, q, &lim).unwrap().count;
                    assert_eq!(got, expected, "n={n} k={k} q={q}");
                }
            }
        }
    }

    #[test]
    fn threshold_and_guard() {
        let lim = Limits::default();
        assert!(matches!(
            count_via_window(6, 3, 3, &lim),
            Err(Error::Threshold {
                suggested: Method::Brute,
                ..
            })
        ));
        let tight = Limits {
            automaton_max_states: 11,
            ..lim
        };
        assert!(matches!(
            WindowAutomaton::new(3, 3, &tight),
            Err(Error::SizeGuard { .. })
        ));
        assert!(WindowAutomaton::new(1, 3, &lim).is_err());
    }

    #[test]
    fn dump_is_stable() {
        let d = a33().dump();
        assert_eq!(d.lines().count(), 12);
        assert_eq!(d.lines().next(), Some("0: 0,1,0 -> 4 5"));
        assert_eq!(d, a33().dump());
    }
}

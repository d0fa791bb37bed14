//! Characteristic polynomials, the linear recurrences they induce on
//! `tr(M^n)`, and residue-class grouping of count sequences.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::matrix::ExactMatrix;
use crate::poly::IntPolynomial;
use crate::record::CountRecord;
use crate::{Error, Result};

/// `det(xI - M)` by the Samuelson-Berkowitz algorithm, which uses only ring
/// operations (no division).
pub fn char_poly(m: &ExactMatrix) -> IntPolynomial {
    let n = m.dim();
    if n == 0 {
        return IntPolynomial::one();
    }
    // `v` holds the characteristic polynomial of the trailing principal
    // submatrix, highest degree first.
    let mut v: Vec<BigInt> = alloc::vec![BigInt::one(), -&m[(n - 1, n - 1)]];
    for t in (0..n - 1).rev() {
        let s = n - t - 1;
        let a = &m[(t, t)];
        // col = (1, -a, -R C, -R A1 C, ..., -R A1^{s-1} C)
        let mut col: Vec<BigInt> = Vec::with_capacity(s + 2);
        col.push(BigInt::one());
        col.push(-a);
        let mut w: Vec<BigInt> = (0..s).map(|i| m[(t + 1 + i, t)].clone()).collect();
        for step in 0..s {
            let rc: BigInt = (0..s).map(|j| &m[(t, t + 1 + j)] * &w[j]).sum();
            col.push(-rc);
            if step + 1 < s {
                w = (0..s)
                    .map(|i| {
                        (0..s)
                            .map(|j| &m[(t + 1 + i, t + 1 + j)] * &w[j])
                            .sum::<BigInt>()
                    })
                    .collect();
            }
        }
        let next: Vec<BigInt> = (0..s + 2)
            .map(|i| (0..=i.min(s)).map(|j| &col[i - j] * &v[j]).sum::<BigInt>())
            .collect();
        v = next;
    }
    v.reverse();
    IntPolynomial::new(v)
}

/// True iff `d` divides `p` exactly over the integers.
pub fn poly_divides(d: &IntPolynomial, p: &IntPolynomial) -> bool {
    if d.is_zero() {
        return false;
    }
    p.div_exact(d).is_some()
}

/// `a(n+d) + c_{d-1} a(n+d-1) + ... + c_0 a(n) = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recurrence {
    coeffs: Vec<BigInt>,
}

impl Recurrence {
    /// Coefficients `c_0 .. c_{d-1}`.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        Recurrence { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// The term after `window`, whose length must equal the order.
    pub fn next_term(&self, window: &[BigInt]) -> BigInt {
        debug_assert_eq!(window.len(), self.order());
        -self
            .coeffs
            .iter()
            .zip(window)
            .map(|(c, a)| c * a)
            .sum::<BigInt>()
    }

    /// Extends `seed` (at least `order` terms) to `len` terms.
    pub fn extend(&self, seed: &[BigInt], len: usize) -> Vec<BigInt> {
        let d = self.order();
        let mut out = seed.to_vec();
        while out.len() < len {
            let start = out.len() - d;
            let next = self.next_term(&out[start..]);
            out.push(next);
        }
        out
    }
}

impl fmt::Display for Recurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.order();
        if d == 0 {
            return f.write_str("a(n) = 0");
        }
        write!(f, "a(n+{d}) =")?;
        let mut first = true;
        for i in (0..d).rev() {
            let c = -&self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            let term = if i == 0 {
                "a(n)".to_string()
            } else {
                format!("a(n+{i})")
            };
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            match (first, mag.is_one()) {
                (true, true) if sign == "+" => write!(f, " {term}")?,
                (true, true) => write!(f, " -{term}")?,
                (true, false) if sign == "+" => write!(f, " {mag}{term}")?,
                (true, false) => write!(f, " -{mag}{term}")?,
                (false, true) => write!(f, " {sign} {term}")?,
                (false, false) => write!(f, " {sign} {mag}{term}")?,
            }
            first = false;
        }
        if first {
            f.write_str(" 0")?;
        }
        Ok(())
    }
}

/// Recurrence satisfied by `tr(M^n)` when `p` is the characteristic
/// polynomial of `M` (Cayley-Hamilton).
pub fn recurrence_from_charpoly(p: &IntPolynomial) -> Result<Recurrence> {
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    let d = p.degree().unwrap();
    Ok(Recurrence::new(p.coeffs()[..d].to_vec()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceCheck {
    pub holds: bool,
    /// Index of the first term that disagrees with the recurrence.
    pub first_violation: Option<usize>,
}

pub fn verify_recurrence(r: &Recurrence, seq: &[BigInt]) -> Result<RecurrenceCheck> {
    let d = r.order();
    if seq.len() <= d {
        return Err(Error::InsufficientLength {
            len: seq.len(),
            order: d,
        });
    }
    let first_violation = (d..seq.len()).find(|&i| r.next_term(&seq[i - d..i]) != seq[i]);
    Ok(RecurrenceCheck {
        holds: first_violation.is_none(),
        first_violation,
    })
}

/// Shortest linear recurrence with rational coefficients generating `seq`
/// (Berlekamp-Massey over `Q`). The result is only meaningful when
/// `seq.len() >= 2 * order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalRecurrence {
    /// `a(n+d) + c_{d-1} a(n+d-1) + ... + c_0 a(n) = 0`, `c_0 .. c_{d-1}`.
    pub coeffs: Vec<BigRational>,
}

impl MinimalRecurrence {
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Integer form, if every coefficient is an integer.
    pub fn to_integer(&self) -> Option<Recurrence> {
        if self.coeffs.iter().all(BigRational::is_integer) {
            Some(Recurrence::new(
                self.coeffs.iter().map(BigRational::to_integer).collect(),
            ))
        } else {
            None
        }
    }
}

pub fn minimal_recurrence(seq: &[BigInt]) -> MinimalRecurrence {
    let s: Vec<BigRational> = seq
        .iter()
        .map(|v| BigRational::from_integer(v.clone()))
        .collect();
    // Connection polynomial C(x) = 1 + C_1 x + ... + C_L x^L with
    // sum_{i=0}^{L} C_i s_{j-i} = 0 for j >= L.
    let mut c: Vec<BigRational> = alloc::vec![BigRational::one()];
    let mut b: Vec<BigRational> = alloc::vec![BigRational::one()];
    let mut l = 0usize;
    let mut m = 1usize;
    let mut bd = BigRational::one();
    for j in 0..s.len() {
        let mut delta = s[j].clone();
        for i in 1..=l.min(c.len() - 1) {
            delta += &c[i] * &s[j - i];
        }
        if delta.is_zero() {
            m += 1;
            continue;
        }
        let coef = &delta / &bd;
        let old = c.clone();
        if c.len() < b.len() + m {
            c.resize(b.len() + m, BigRational::zero());
        }
        for (i, bi) in b.iter().enumerate() {
            c[i + m] -= &coef * bi;
        }
        if 2 * l <= j {
            l = j + 1 - l;
            b = old;
            bd = delta;
            m = 1;
        } else {
            m += 1;
        }
    }
    c.resize(l + 1, BigRational::zero());
    // a(n+L) + C_1 a(n+L-1) + ... + C_L a(n) = 0  =>  c_i = C_{L-i}
    MinimalRecurrence {
        coeffs: (0..l).map(|i| c[l - i].clone()).collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueEntry {
    pub n: usize,
    pub count: BigUint,
    pub is_zero: bool,
}

/// Groups records by `n mod modulus`, preserving input order within a class.
pub fn residue_report(
    records: &[CountRecord],
    modulus: usize,
) -> Result<BTreeMap<usize, Vec<ResidueEntry>>> {
    if modulus == 0 {
        return Err(Error::ParameterOutOfRange(
            "modulus must be at least 1".to_string(),
        ));
    }
    let mut out: BTreeMap<usize, Vec<ResidueEntry>> = BTreeMap::new();
    for r in records {
        out.entry(r.n % modulus).or_default().push(ResidueEntry {
            n: r.n,
            count: r.count.clone(),
            is_zero: r.count.is_zero(),
        });
    }
    Ok(out)
}

//! Closed form for odd `n` with `k = 3`, `q = 3`:
//!
//! `P(C_n^(3), 3) = L_n + 2cos(2πn/3) + 2 s_n + 2`,
//!
//! where `L_n` are the Lucas numbers and `s_n` the power sums of the roots
//! of `x^3 + x^2 + 1`. The cosine term is always an integer and is computed
//! from `n mod 3`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::Signed;

use crate::poly::IntPolynomial;
use crate::record::{CountRecord, Method};
use crate::{Error, Result};

/// Memo tables for `L_n` and `s_n`.
///
/// Extension takes `&mut self`, so a shared cache needs external locking;
/// prefixes already computed can be read through `&self`.
#[derive(Debug, Clone)]
pub struct SequenceCache {
    lucas: Vec<BigInt>,
    s: Vec<BigInt>,
}

impl Default for SequenceCache {
    fn default() -> Self {
        SequenceCache {
            lucas: alloc::vec![BigInt::from(2), BigInt::from(1)],
            s: alloc::vec![BigInt::from(3), BigInt::from(-1), BigInt::from(1)],
        }
    }
}

impl SequenceCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn lucas(&mut self, n: usize) -> &BigInt {
        while self.lucas.len() <= n {
            let len = self.lucas.len();
            let next = &self.lucas[len - 1] + &self.lucas[len - 2];
            self.lucas.push(next);
        }
        &self.lucas[n]
    }

    pub fn s(&mut self, n: usize) -> &BigInt {
        while self.s.len() <= n {
            let len = self.s.len();
            let next = -(&self.s[len - 1]) - &self.s[len - 3];
            self.s.push(next);
        }
        &self.s[n]
    }

    pub fn lucas_values(&self) -> &[BigInt] {
        &self.lucas
    }

    pub fn s_values(&self) -> &[BigInt] {
        &self.s
    }
}

pub fn lucas(n: usize) -> BigInt {
    SequenceCache::new().lucas(n).clone()
}

pub fn s_seq(n: usize) -> BigInt {
    SequenceCache::new().s(n).clone()
}

/// `ω^n + ω^{2n} = 2cos(2πn/3)`: 2 when `3 | n`, otherwise -1.
pub fn cos_term(n: usize) -> i32 {
    if n % 3 == 0 {
        2
    } else {
        -1
    }
}

/// `L_n + cos_term(n) + 2 s_n + 2` for odd `n >= 7`.
pub fn closed_form_odd(n: usize) -> Result<CountRecord> {
    if n % 2 == 0 {
        return Err(Error::ParameterOutOfRange(format!(
            "closed form needs odd n, got {n}"
        )));
    }
    if n < 7 {
        return Err(Error::Threshold {
            method: Method::ClosedForm,
            n,
            reason: "C_n^(3) needs n >= 7 for odd n",
            suggested: Method::Brute,
        });
    }
    let mut cache = SequenceCache::new();
    let l = cache.lucas(n).clone();
    let value: BigInt = l + BigInt::from(cos_term(n)) + cache.s(n) * 2 + 2;
    let count = value
        .to_biguint()
        .expect("closed form is nonnegative on odd n >= 7");
    Ok(CountRecord::new(n, 3, 3, count, Method::ClosedForm))
}

/// `(1 + (-1)^n) + L_n + cos_term(n) + 2 s_n` for even `n >= 8`: colorings
/// of the cycle with offset-3 chords when diameters are ignored.
pub fn local_baseline_even(n: usize) -> Result<BigInt> {
    if n % 2 == 1 || n < 8 {
        return Err(Error::ParameterOutOfRange(format!(
            "local baseline needs even n >= 8, got {n}"
        )));
    }
    let mut cache = SequenceCache::new();
    let l = cache.lucas(n).clone();
    Ok(BigInt::from(2) + l + BigInt::from(cos_term(n)) + cache.s(n) * 2)
}

/// A real number enclosed in `(lo, hi] * 10^-scale`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enclosure {
    pub lo: BigInt,
    pub hi: BigInt,
    pub scale: u32,
}

impl Enclosure {
    /// Width of the enclosure in units of `10^-scale`.
    pub fn width(&self) -> BigInt {
        &self.hi - &self.lo
    }

    pub fn abs(&self) -> Enclosure {
        if self.lo.is_negative() && !self.hi.is_positive() {
            Enclosure {
                lo: -&self.hi,
                hi: -&self.lo,
                scale: self.scale,
            }
        } else {
            self.clone()
        }
    }

    /// Nearest `f64` to the midpoint.
    pub fn to_f64(&self) -> f64 {
        let mid: BigInt = &self.lo + &self.hi;
        let s = format!("{mid}e-{}", self.scale);
        s.parse::<f64>().map(|v| v / 2.0).unwrap_or(f64::NAN)
    }

    /// True when every point of the enclosure lies in `(a, b)`, with `a` and
    /// `b` given as decimal strings such as `"1.4655"`.
    pub fn within(&self, a: &str, b: &str) -> bool {
        let scaled = |s: &str| parse_scaled(s, self.scale);
        match (scaled(a), scaled(b)) {
            (Some(a), Some(b)) => a < self.lo && self.hi < b,
            _ => false,
        }
    }

    /// Truncated decimal expansion of the lower endpoint with `digits`
    /// fractional digits.
    pub fn to_decimal_string(&self, digits: u32) -> String {
        let digits = digits.min(self.scale);
        let drop = BigInt::from(10u32).pow(self.scale - digits);
        let v = &self.lo / drop;
        let neg = v.is_negative();
        let mag = v.abs().to_string_padded(digits as usize + 1);
        let (int, frac) = mag.split_at(mag.len() - digits as usize);
        format!("{}{}.{}", if neg { "-" } else { "" }, int, frac)
    }
}

trait Padded {
    fn to_string_padded(&self, width: usize) -> String;
}

impl Padded for BigInt {
    fn to_string_padded(&self, width: usize) -> String {
        format!("{:0>width$}", format!("{self}"))
    }
}

fn parse_scaled(s: &str, scale: u32) -> Option<BigInt> {
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if frac.len() > scale as usize {
        return None;
    }
    let mut digits = String::from(int);
    digits.push_str(frac);
    for _ in frac.len()..scale as usize {
        digits.push('0');
    }
    let v: BigInt = digits.parse().ok()?;
    Some(if neg { -v } else { v })
}

impl fmt::Display for Enclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal_string(self.scale))
    }
}

/// Growth constants of the odd-`n` closed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AsymptoticParams {
    /// Golden ratio `(1 + √5) / 2`.
    pub phi: Enclosure,
    /// Largest root modulus of `x^3 + x^2 + 1`.
    pub rho: Enclosure,
    /// The real root of `x^3 + x^2 + 1` (negative, `-rho`).
    pub cubic_real_root: Enclosure,
    /// Squared modulus of the complex pair of roots, `1 / |r|`.
    pub cubic_complex_modulus_sq: Enclosure,
    pub precision: u32,
}

/// Computes `φ` and `ρ` with enclosures narrower than `10^-precision`.
///
/// `ρ` comes from Sturm isolation of the single real root `r` of
/// `x^3 + x^2 + 1`; the other two roots are conjugate with
/// `|u|^2 = 1/|r| < 1 < |r|`, so `ρ = |r|`.
pub fn asymptotic_params(precision: u32) -> Result<AsymptoticParams> {
    if precision < 10 {
        return Err(Error::ParameterOutOfRange(format!(
            "precision must be at least 10 digits, got {precision}"
        )));
    }
    let scale = precision + 2;
    let unit = BigInt::from(10u32).pow(scale);

    // floor(√5 · 10^scale) <= √5 · 10^scale < that + 1
    let root5 = (BigInt::from(5) * &unit * &unit).sqrt();
    let phi_lo: BigInt = (&unit + &root5) >> 1;
    let phi = Enclosure {
        hi: &phi_lo + 1,
        lo: phi_lo,
        scale,
    };

    let cubic = IntPolynomial::from_coeffs(&[1, 0, 1, 1]);
    let roots = cubic.real_roots(scale);
    if roots.len() != 1 {
        return Err(Error::ParameterOutOfRange(format!(
            "expected one real root of {cubic}, found {}",
            roots.len()
        )));
    }
    let (lo, hi) = roots.into_iter().next().unwrap();
    let real = Enclosure { lo, hi, scale };
    let rho = real.abs();

    // 1/|r| enclosed by [10^{2s} / hi, 10^{2s} / lo] at the same scale.
    let sq = &unit * &unit;
    let modulus_sq = Enclosure {
        lo: &sq / &rho.hi,
        hi: &sq / &rho.lo + 1,
        scale,
    };
    if modulus_sq.hi >= rho.lo {
        return Err(Error::ParameterOutOfRange(String::from(
            "complex roots not separated from the real root",
        )));
    }

    Ok(AsymptoticParams {
        phi,
        rho,
        cubic_real_root: real,
        cubic_complex_modulus_sq: modulus_sq,
        precision,
    })
}

/// `P` for odd `n` as an unsigned count, or `None` below the valid range.
pub fn closed_form_value(n: usize) -> Option<BigUint> {
    closed_form_odd(n).ok().map(|r| r.count)
}

//! Integer polynomials, stored constant term first.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::matrix::ExactMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// From small coefficients, constant term first.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_coeffs(&[1])
    }

    /// `x - a`.
    pub fn linear_root(a: i64) -> Self {
        Self::from_coeffs(&[-a, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Quotient and remainder over the rationals.
    pub fn div_rem_rational(&self, d: &IntPolynomial) -> (Vec<BigRational>, Vec<BigRational>) {
        let num = to_rational(&self.coeffs);
        let den = to_rational(&d.coeffs);
        rat_div_rem(&num, &den)
    }

    /// Exact quotient `self / d` when `d` divides `self` with an integer
    /// quotient, else `None`.
    pub fn div_exact(&self, d: &IntPolynomial) -> Option<IntPolynomial> {
        if d.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem_rational(d);
        if !r.is_empty() || q.iter().any(|c| !c.is_integer()) {
            return None;
        }
        Some(IntPolynomial::new(
            q.into_iter().map(|c| c.to_integer()).collect(),
        ))
    }

    /// Companion matrix: subdiagonal ones, last column `-c_0 .. -c_{d-1}`.
    /// Panics on non-monic input.
    pub fn companion(&self) -> ExactMatrix {
        assert!(self.is_monic(), "companion matrix needs a monic polynomial");
        let d = self.degree().unwrap();
        let mut m = ExactMatrix::zeros(d);
        for i in 1..d {
            m.set(i, i - 1, BigInt::one());
        }
        for i in 0..d {
            m.set(i, d - 1, -&self.coeffs[i]);
        }
        m
    }

    /// Power sums `p_0, .., p_{count-1}` of the roots (with multiplicity) of
    /// a monic polynomial, by Newton's identities.
    pub fn power_sums(&self, count: usize) -> Vec<BigInt> {
        assert!(self.is_monic(), "power sums need a monic polynomial");
        let d = self.degree().unwrap();
        // a[j] is the coefficient of x^(d - j), so a[0] = 1.
        let a: Vec<&BigInt> = self.coeffs.iter().rev().collect();
        let mut p: Vec<BigInt> = Vec::with_capacity(count);
        for k in 0..count {
            if k == 0 {
                p.push(BigInt::from(d));
                continue;
            }
            let mut s = BigInt::zero();
            for j in 1..=k.min(d) {
                if j < k {
                    s += a[j] * &p[k - j];
                } else {
                    s += a[j] * BigInt::from(k);
                }
            }
            p.push(-s);
        }
        p
    }

    /// Isolating intervals for the real roots, `(lo, hi]` in units of
    /// `10^-scale`, each of width one unit and containing exactly one root.
    /// Repeated roots are reported once.
    pub fn real_roots(&self, scale: u32) -> Vec<(BigInt, BigInt)> {
        let Some(deg) = self.degree() else {
            return Vec::new();
        };
        if deg == 0 {
            return Vec::new();
        }
        let sq = squarefree(&to_rational(&self.coeffs));
        let chain = sturm_chain(&sq);
        let unit = BigInt::from(10u32).pow(scale);
        // Cauchy bound: every root has |x| < 1 + max |a_i / a_d|.
        let lead = self.leading().unwrap().abs();
        let bound = self
            .coeffs
            .iter()
            .map(|c| (c.abs() + &lead - 1u32) / &lead)
            .max()
            .unwrap()
            + 1u32;
        let lo = -(&bound * &unit);
        let hi = &bound * &unit;

        let count_in = |a: &BigInt, b: &BigInt| -> usize {
            let ra = BigRational::new(a.clone(), unit.clone());
            let rb = BigRational::new(b.clone(), unit.clone());
            sign_changes(&chain, &ra) - sign_changes(&chain, &rb)
        };

        let mut out = Vec::new();
        let mut stack = alloc::vec![(lo, hi)];
        while let Some((a, b)) = stack.pop() {
            let c = count_in(&a, &b);
            if c == 0 {
                continue;
            }
            if &b - &a <= BigInt::one() {
                out.push((a, b));
                continue;
            }
            let mid: BigInt = (&a + &b) >> 1;
            // Upper half first so the lower half pops first.
            stack.push((mid.clone(), b));
            stack.push((a, mid));
        }
        out
    }
}

fn to_rational(c: &[BigInt]) -> Vec<BigRational> {
    c.iter()
        .map(|x| BigRational::from_integer(x.clone()))
        .collect()
}

fn rat_trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn rat_div_rem(num: &[BigRational], den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let den = rat_trim(den.to_vec());
    assert!(!den.is_empty(), "division by the zero polynomial");
    let mut rem = rat_trim(num.to_vec());
    let dd = den.len() - 1;
    if rem.len() < den.len() {
        return (Vec::new(), rem);
    }
    let mut quot = alloc::vec![BigRational::zero(); rem.len() - dd];
    let lead = den[dd].clone();
    while rem.len() >= den.len() {
        let shift = rem.len() - den.len();
        let factor = rem.last().unwrap() / &lead;
        for (i, c) in den.iter().enumerate() {
            rem[shift + i] -= c * &factor;
        }
        quot[shift] = factor;
        rem.pop();
        rem = rat_trim(rem);
    }
    (quot, rem)
}

fn rat_derivative(p: &[BigRational]) -> Vec<BigRational> {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
        .collect()
}

fn rat_gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut a = rat_trim(a.to_vec());
    let mut b = rat_trim(b.to_vec());
    while !b.is_empty() {
        let (_, r) = rat_div_rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

fn squarefree(p: &[BigRational]) -> Vec<BigRational> {
    let g = rat_gcd(p, &rat_derivative(p));
    rat_div_rem(p, &g).0
}

fn sturm_chain(p: &[BigRational]) -> Vec<Vec<BigRational>> {
    let mut chain = alloc::vec![p.to_vec(), rat_trim(rat_derivative(p))];
    loop {
        let n = chain.len();
        if chain[n - 1].is_empty() {
            chain.pop();
            break;
        }
        let (_, r) = rat_div_rem(&chain[n - 2], &chain[n - 1]);
        if r.is_empty() {
            break;
        }
        chain.push(r.into_iter().map(|c| -c).collect());
    }
    chain
}

fn rat_eval(p: &[BigRational], x: &BigRational) -> BigRational {
    p.iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * x + c)
}

fn sign_changes(chain: &[Vec<BigRational>], x: &BigRational) -> usize {
    let signs: Vec<bool> = chain
        .iter()
        .map(|p| rat_eval(p, x))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigInt::zero();
        IntPolynomial::new(
            (0..len)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = alloc::vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Coefficients as decimal strings, constant term first.
pub fn coefficient_strings(p: &IntPolynomial) -> Vec<String> {
    use alloc::string::ToString;
    p.coeffs().iter().map(ToString::to_string).collect()
}

//! Exact integer polynomials in `t = uv` and Laurent polynomials in `u, v`.
//!
//! All Hodge-theoretic invariants computed by this crate are integral, so
//! coefficients are machine integers with overflow checks. Rationals only
//! appear when a polynomial is evaluated.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision reduced fraction.
pub type Rational = BigRational;

/// Parses `"a/b"` or `"a"` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::InvalidInput(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn checked_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("coefficient overflow")
}

fn checked_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("coefficient overflow")
}

fn checked_exp(a: i32, b: i32) -> i32 {
    a.checked_add(b).expect("exponent overflow")
}

/// Dense integer polynomial in one variable, coefficients from degree 0.
///
/// Trailing zeros are never stored; the zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnivariateInt {
    coeffs: Vec<i64>,
}

impl UnivariateInt {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self { coeffs: vec![1] }
    }

    pub fn monomial(degree: usize, c: i64) -> Self {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// `(t - 1)^k`
    pub fn t_minus_one_pow(k: usize) -> Self {
        Self::new(vec![-1, 1]).pow(k)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: i64) -> i64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| checked_add(checked_mul(acc, t), c))
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::new(self.coeffs.iter().map(|&x| checked_mul(x, c)).collect())
    }

    /// `t^n * p(1/t)` as a polynomial; `None` if `deg p > n`.
    pub fn reciprocal(&self, n: usize) -> Option<Self> {
        if self.degree().is_some_and(|d| d > n) {
            return None;
        }
        let mut out = vec![0; n + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[n - i] = c;
        }
        Some(Self::new(out))
    }

    /// Substitutes `t -> u^a v^b`.
    pub fn substitute(&self, a: i32, b: i32) -> BivariateLaurent {
        BivariateLaurent::from_terms(self.coeffs.iter().enumerate().map(|(i, &c)| {
            let i = i32::try_from(i).expect("degree fits in i32");
            (i * a, i * b, c)
        }))
    }

    /// Substitutes `t -> uv`.
    pub fn in_uv(&self) -> BivariateLaurent {
        self.substitute(1, 1)
    }
}

impl Add for &UnivariateInt {
    type Output = UnivariateInt;
    fn add(self, rhs: &UnivariateInt) -> UnivariateInt {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UnivariateInt::new((0..n).map(|i| checked_add(self.coeff(i), rhs.coeff(i))).collect())
    }
}

impl Sub for &UnivariateInt {
    type Output = UnivariateInt;
    fn sub(self, rhs: &UnivariateInt) -> UnivariateInt {
        self + &rhs.scale(-1)
    }
}

impl Mul for &UnivariateInt {
    type Output = UnivariateInt;
    fn mul(self, rhs: &UnivariateInt) -> UnivariateInt {
        if self.is_zero() || rhs.is_zero() {
            return UnivariateInt::zero();
        }
        let mut out = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = checked_add(out[i + j], checked_mul(a, b));
            }
        }
        UnivariateInt::new(out)
    }
}

impl fmt::Display for UnivariateInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.in_uv().to_string().replace("u^", "t^").replace("uv", "t"))
    }
}

impl Serialize for UnivariateInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for UnivariateInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(Self::new(Vec::<i64>::deserialize(d)?))
    }
}

/// Finitely supported Laurent polynomial in `u, v` with integer coefficients.
///
/// Stored sparsely keyed by exponent pair; zero coefficients are never kept,
/// so structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivariateLaurent {
    terms: BTreeMap<(i32, i32), i64>,
}

/// Ring operation selector for [`lp_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub fn lp_arith(a: &BivariateLaurent, b: &BivariateLaurent, op: ArithOp) -> BivariateLaurent {
    match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
    }
}

impl BivariateLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn monomial(pu: i32, pv: i32, c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(pu, pv, c);
        p
    }

    /// Collects terms, merging repeated exponents and dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (i32, i32, i64)>) -> Self {
        let mut p = Self::zero();
        for (pu, pv, c) in terms {
            p.add_term(pu, pv, c);
        }
        p
    }

    pub fn add_term(&mut self, pu: i32, pv: i32, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.terms.entry((pu, pv)).or_insert(0);
        *slot = checked_add(*slot, c);
        if *slot == 0 {
            self.terms.remove(&(pu, pv));
        }
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i32, i64)> + '_ {
        self.terms.iter().map(|(&(pu, pv), &c)| (pu, pv, c))
    }

    pub fn coeff(&self, pu: i32, pv: i32) -> i64 {
        self.terms.get(&(pu, pv)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when no exponent is negative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|&(a, b)| a >= 0 && b >= 0)
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::from_terms(self.terms().map(|(a, b, x)| (a, b, checked_mul(x, c))))
    }

    /// Multiplies by `u^du v^dv`.
    pub fn shift(&self, du: i32, dv: i32) -> Self {
        Self::from_terms(self.terms().map(|(a, b, x)| (checked_exp(a, du), checked_exp(b, dv), x)))
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `(uv - 1)^k`
    pub fn uv_minus_one_pow(k: usize) -> Self {
        UnivariateInt::t_minus_one_pow(k).in_uv()
    }

    /// `(-u)^m * p(u^-1, v)`.
    pub fn mirror_transform(&self, m: u32) -> Self {
        let m_i = i32::try_from(m).expect("mirror degree fits in i32");
        let sign = if m % 2 == 0 { 1 } else { -1 };
        Self::from_terms(self.terms().map(|(a, b, x)| (checked_exp(m_i, -a), b, x * sign)))
    }

    /// `(uv)^n * p(u^-1, v^-1)`; a polynomial with Poincaré duality in
    /// dimension `n` is a fixed point.
    pub fn poincare_dual(&self, n: u32) -> Self {
        let n = i32::try_from(n).expect("dimension fits in i32");
        Self::from_terms(self.terms().map(|(a, b, x)| (n - a, n - b, x)))
    }

    /// Sets `u = 1`; the result is a Laurent polynomial in `v` alone.
    pub fn at_u_one(&self) -> Self {
        Self::from_terms(self.terms().map(|(_, b, x)| (0, b, x)))
    }

    /// Exact value at `(u0, v0)`.
    pub fn eval(&self, u0: &Rational, v0: &Rational) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (a, b, c) in self.terms() {
            if (a < 0 && u0.is_zero()) || (b < 0 && v0.is_zero()) {
                return Err(Error::ZeroAtNegativeExponent(a, b));
            }
            let term = rat_pow(u0, a) * rat_pow(v0, b) * Rational::from_integer(BigInt::from(c));
            acc += term;
        }
        Ok(acc)
    }

    /// `(-1)^(p+q) * a_{p,q}` for every nonzero coefficient.
    pub fn hodge_numbers(&self) -> Vec<(i32, i32, i64)> {
        self.terms()
            .map(|(p, q, a)| (p, q, if (p + q) % 2 == 0 { a } else { -a }))
            .collect()
    }

    pub fn max_total_degree(&self) -> Option<i32> {
        self.terms.keys().map(|&(a, b)| a + b).max()
    }
}

fn rat_pow(x: &Rational, e: i32) -> Rational {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), e.unsigned_abs() as usize)
    }
}

/// Convenience wrapper matching the evaluation contract.
pub fn lp_eval(p: &BivariateLaurent, u0: &Rational, v0: &Rational) -> Result<Rational> {
    p.eval(u0, v0)
}

/// The Euler number `sum (-1)^(p+q) h^{p,q}`, i.e. the sum of all
/// coefficients under the sign convention `a_{p,q} = (-1)^(p+q) h^{p,q}`.
pub fn euler_value(p: &BivariateLaurent) -> i64 {
    p.terms().map(|(_, _, c)| c).fold(0, checked_add)
}

impl Add for &BivariateLaurent {
    type Output = BivariateLaurent;
    fn add(self, rhs: &BivariateLaurent) -> BivariateLaurent {
        let mut out = self.clone();
        for (a, b, c) in rhs.terms() {
            out.add_term(a, b, c);
        }
        out
    }
}

impl Sub for &BivariateLaurent {
    type Output = BivariateLaurent;
    fn sub(self, rhs: &BivariateLaurent) -> BivariateLaurent {
        let mut out = self.clone();
        for (a, b, c) in rhs.terms() {
            out.add_term(a, b, -c);
        }
        out
    }
}

impl Mul for &BivariateLaurent {
    type Output = BivariateLaurent;
    fn mul(self, rhs: &BivariateLaurent) -> BivariateLaurent {
        let mut out = BivariateLaurent::zero();
        for (a1, b1, c1) in self.terms() {
            for (a2, b2, c2) in rhs.terms() {
                out.add_term(checked_exp(a1, a2), checked_exp(b1, b2), checked_mul(c1, c2));
            }
        }
        out
    }
}

impl Neg for &BivariateLaurent {
    type Output = BivariateLaurent;
    fn neg(self) -> BivariateLaurent {
        self.scale(-1)
    }
}

macro_rules! forward_owned {
    ($ty:ty, $($tr:ident :: $m:ident),*) => {$(
        impl $tr for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(BivariateLaurent, Add::add, Sub::sub, Mul::mul);
forward_owned!(UnivariateInt, Add::add, Sub::sub, Mul::mul);

impl fmt::Display for BivariateLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (a, b, c) in self.terms() {
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.unsigned_abs();
            let mut mono = String::new();
            for (name, e) in [("u", a), ("v", b)] {
                match e {
                    0 => {}
                    1 => mono.push_str(name),
                    _ => mono.push_str(&format!("{name}^{e}")),
                }
            }
            if !first {
                write!(f, " ")?;
            }
            match (mono.is_empty(), mag) {
                (true, _) => write!(f, "{sign}{mag}")?,
                (false, 1) => write!(f, "{sign}{mono}")?,
                (false, _) => write!(f, "{sign}{mag}{mono}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl Serialize for BivariateLaurent {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let triples: Vec<[i64; 3]> = self
            .terms()
            .map(|(a, b, c)| [i64::from(a), i64::from(b), c])
            .collect();
        triples.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BivariateLaurent {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let triples = Vec::<[i64; 3]>::deserialize(d)?;
        let mut p = BivariateLaurent::zero();
        for [a, b, c] in triples {
            let a = i32::try_from(a).map_err(D::Error::custom)?;
            let b = i32::try_from(b).map_err(D::Error::custom)?;
            p.add_term(a, b, c);
        }
        Ok(p)
    }
}

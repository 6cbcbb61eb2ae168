//! Sparse multivariate polynomials over the rationals.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose `Ord` is the
//! graded reverse lexicographic order; iteration is therefore ascending and
//! the leading term is the last entry. Zero coefficients are never stored.

mod gcd;

pub use gcd::{gcd, gcd_many};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::linalg::RatMatrix;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("variable count mismatch: {0} vs {1}")]
    VariableMismatch(usize, usize),
    #[error("variable index {index} out of range for {n_vars} variables")]
    VariableOutOfRange { index: usize, n_vars: usize },
    #[error("gcd of an empty or all-zero list")]
    AllZero,
}

/// Exponent vector ordered by grevlex: total degree first, then the monomial
/// with the smaller exponent in the last differing variable is larger.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n_vars: usize) -> Self {
        Monomial(vec![0; n_vars])
    }

    pub fn var(n_vars: usize, i: usize) -> Self {
        let mut e = vec![0; n_vars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn n_vars(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    /// All monomials of total degree `deg` in `n_vars` variables, ascending.
    pub fn all_of_degree(n_vars: usize, deg: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; n_vars];
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i + 1 == cur.len() {
                cur[i] = left;
                out.push(Monomial(cur.clone()));
                return;
            }
            for e in 0..=left {
                cur[i] = e;
                rec(i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        if n_vars == 0 {
            if deg == 0 {
                out.push(Monomial(Vec::new()));
            }
            return out;
        }
        rec(0, deg, &mut cur, &mut out);
        out.sort();
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    n_vars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(n_vars: usize) -> Self {
        Poly {
            n_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n_vars: usize, c: Rational) -> Self {
        let mut p = Self::zero(n_vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(n_vars), c);
        }
        p
    }

    pub fn one(n_vars: usize) -> Self {
        Self::constant(n_vars, Rational::one())
    }

    pub fn from_int(n_vars: usize, c: i64) -> Self {
        Self::constant(n_vars, Rational::from_integer(c.into()))
    }

    pub fn var(n_vars: usize, i: usize) -> Self {
        Self::term(Rational::one(), Monomial::var(n_vars, i))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut p = Self::zero(m.n_vars());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds a polynomial from `(coefficient, exponents)` pairs, merging
    /// repeated monomials.
    pub fn from_terms<I>(n_vars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, Vec<u32>)>,
    {
        let mut p = Self::zero(n_vars);
        for (c, e) in terms {
            assert_eq!(e.len(), n_vars, "exponent vector length");
            p.add_term(Monomial(e), c);
        }
        p
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending grevlex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.n_vars);
        }
        Poly {
            n_vars: self.n_vars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Poly {
        self.scale(&Rational::from_integer(c.into()))
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.n_vars);
        }
        Poly {
            n_vars: self.n_vars,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.mul(m), v * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(self.n_vars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn partial_derivative(&self, i: usize) -> Poly {
        assert!(i < self.n_vars, "variable index out of range");
        let mut out = Poly::zero(self.n_vars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[i] -= 1;
            out.add_term(Monomial(exps), c * Rational::from_integer(e.into()));
        }
        out
    }

    pub fn gradient(&self) -> Vec<Poly> {
        (0..self.n_vars).map(|i| self.partial_derivative(i)).collect()
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.n_vars, "evaluation point length");
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Composition `p(images[0], …, images[n-1])`; all images must share a
    /// variable count, which becomes the variable count of the result.
    pub fn compose(&self, images: &[Poly]) -> Result<Poly, PolyError> {
        if images.len() != self.n_vars {
            return Err(PolyError::VariableMismatch(self.n_vars, images.len()));
        }
        let target_vars = images.first().map_or(0, Poly::n_vars);
        if let Some(bad) = images.iter().find(|p| p.n_vars != target_vars) {
            return Err(PolyError::VariableMismatch(target_vars, bad.n_vars));
        }
        // Powers of each image are cached since monomials share them.
        let mut powers: Vec<Vec<Poly>> = images
            .iter()
            .map(|p| vec![Poly::one(target_vars), p.clone()])
            .collect();
        let mut out = Poly::zero(target_vars);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target_vars, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            out = out + t;
        }
        Ok(out)
    }

    /// `p(m · x)`: each variable `x_i` is replaced by `Σ_j m[i][j] x_j`.
    pub fn substitute_linear(&self, m: &RatMatrix) -> Result<Poly, PolyError> {
        if m.rows() != self.n_vars || m.cols() != self.n_vars {
            return Err(PolyError::VariableMismatch(self.n_vars, m.rows()));
        }
        let images: Vec<Poly> = (0..self.n_vars)
            .map(|i| {
                let mut p = Poly::zero(self.n_vars);
                for j in 0..self.n_vars {
                    p.add_term(Monomial::var(self.n_vars, j), m.get(i, j).clone());
                }
                p
            })
            .collect();
        self.compose(&images)
    }

    /// Sets `x_chart = 1`, dropping that variable.
    pub fn dehomogenize(&self, chart: usize) -> Poly {
        assert!(chart < self.n_vars, "chart index out of range");
        let mut out = Poly::zero(self.n_vars - 1);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            e.remove(chart);
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Inverse of [`Poly::dehomogenize`]: inserts `x_chart` at position
    /// `chart`, raising every term to the top degree.
    pub fn homogenize(&self, chart: usize) -> Poly {
        assert!(chart <= self.n_vars, "chart index out of range");
        let top = self.degree().unwrap_or(0);
        let mut out = Poly::zero(self.n_vars + 1);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            e.insert(chart, top - m.degree());
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Same polynomial viewed in `n_vars` variables; new variables are
    /// appended at the end (or trailing unused ones removed).
    pub fn with_n_vars(&self, n_vars: usize) -> Poly {
        let mut out = Poly::zero(n_vars);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            if n_vars < e.len() {
                assert!(
                    e[n_vars..].iter().all(|&x| x == 0),
                    "dropping a variable that occurs"
                );
            }
            e.resize(n_vars, 0);
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Sets the variable `i` to the constant `value`, keeping the variable
    /// count.
    pub fn specialize(&self, i: usize, value: &Rational) -> Poly {
        let mut out = Poly::zero(self.n_vars);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = e[i];
            e[i] = 0;
            out.add_term(Monomial(e), c * num_traits::pow(value.clone(), k as usize));
        }
        out
    }

    pub fn occurs(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.0[i] > 0)
    }

    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[i]).max()
    }

    /// Exact division: returns `h` with `self = f · h`, or `None`.
    pub fn exact_divide(&self, f: &Poly) -> Result<Option<Poly>, PolyError> {
        if f.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if f.n_vars != self.n_vars {
            return Err(PolyError::VariableMismatch(self.n_vars, f.n_vars));
        }
        let (lm, lc) = f.leading_term().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.n_vars);
        // For a single divisor the leading term of any multiple is divisible
        // by the divisor's leading term, so the first failure is final.
        while let Some((m, c)) = rem.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
            if !lm.divides(&m) {
                return Ok(None);
            }
            let qm = lm.quotient_of(&m);
            let qc = c / &lc;
            rem = rem - f.mul_term(&qm, &qc);
            quot.add_term(qm, qc);
        }
        Ok(Some(quot))
    }

    pub fn is_divisible_by(&self, f: &Poly) -> Result<bool, PolyError> {
        Ok(self.exact_divide(f)?.is_some())
    }

    /// Primitive integer normalization with positive leading coefficient.
    pub fn normalized(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let lcm = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let g = self
            .terms
            .values()
            .fold(BigInt::zero(), |acc, c| acc.gcd(&(c.numer() * (&lcm / c.denom()))));
        let mut factor = Rational::new(lcm, g);
        if self.leading_term().unwrap().1.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Coefficients with respect to `x_i`: entry `j` multiplies `x_i^j`.
    pub(crate) fn coefficients_in(&self, i: usize) -> Vec<Poly> {
        let deg = self.degree_in(i).unwrap_or(0) as usize;
        let mut out = vec![Poly::zero(self.n_vars); deg + 1];
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = e[i] as usize;
            e[i] = 0;
            out[k].add_term(Monomial(e), c.clone());
        }
        out
    }

    pub(crate) fn from_coefficients_in(n_vars: usize, i: usize, coeffs: &[Poly]) -> Poly {
        let mut out = Poly::zero(n_vars);
        for (k, c) in coeffs.iter().enumerate() {
            for (m, v) in &c.terms {
                let mut e = m.0.clone();
                e[i] += k as u32;
                out.add_term(Monomial(e), v.clone());
            }
        }
        out
    }

    fn check_vars(&self, other: &Poly) {
        assert_eq!(
            self.n_vars, other.n_vars,
            "polynomials over different variable counts"
        );
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.check_vars(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        self.check_vars(&rhs);
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.check_vars(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(mut self, rhs: Poly) -> Poly {
        self.check_vars(&rhs);
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
        self
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            n_vars: self.n_vars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.check_vars(rhs);
        let mut out = Poly::zero(self.n_vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

fn fmt_rational_abs(c: &Rational) -> String {
    let a = c.abs();
    if a.is_integer() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

/// Writes a monomial as `x0^2*x1`; empty string for the constant monomial.
pub(crate) fn fmt_monomial(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("x{i}")),
            _ => parts.push(format!("x{i}^{e}")),
        }
    }
    parts.join("*")
}

impl fmt::Display for Poly {
    /// Terms in descending grevlex order, e.g. `3/2*x0^2*x1 - x1^3 + 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mono = fmt_monomial(m);
            let coef = fmt_rational_abs(c);
            if mono.is_empty() {
                write!(f, "{coef}")?;
            } else if coef == "1" {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{coef}*{mono}")?;
            }
        }
        Ok(())
    }
}

/// Formats a rational as `p` or `p/q`.
pub fn fmt_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

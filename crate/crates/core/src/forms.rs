//! Polynomial differential forms on affine space `C^{n+1}`.
//!
//! A [`DiffForm`] of degree `q` maps strictly increasing index tuples
//! `(i_1 < … < i_q)` to polynomial coefficients. Every sign produced by
//! reordering `dx` factors goes through [`sort_with_sign`].

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::poly::{fmt_monomial, fmt_rational, Monomial, Poly};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("variable count mismatch: {0} vs {1}")]
    VariableMismatch(usize, usize),
    #[error("form degree mismatch: expected {expected}, got {got}")]
    FormDegreeMismatch { expected: usize, got: usize },
    #[error("coefficients are not homogeneous of a common degree")]
    Inhomogeneous,
    #[error("coefficient degree mismatch: expected {expected}, got {got}")]
    CoefficientDegreeMismatch { expected: u32, got: u32 },
    #[error("index {index} out of range for {n_vars} variables")]
    IndexOutOfRange { index: usize, n_vars: usize },
    #[error("coordinate vector has length {got}, basis has dimension {expected}")]
    CoordinateLength { expected: usize, got: usize },
}

/// Sorts `idx` in place and returns the sign of the sorting permutation, or
/// `None` when an index repeats (the wedge product vanishes).
pub fn sort_with_sign(idx: &mut [usize]) -> Option<i32> {
    let mut sign = 1;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && idx[j - 1] == idx[j] {
            return None;
        }
    }
    Some(sign)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiffForm {
    n_vars: usize,
    q: usize,
    comps: BTreeMap<Vec<usize>, Poly>,
}

impl DiffForm {
    pub fn zero(n_vars: usize, q: usize) -> Self {
        DiffForm {
            n_vars,
            q,
            comps: BTreeMap::new(),
        }
    }

    /// The 0-form given by a polynomial.
    pub fn function(p: Poly) -> Self {
        let mut f = Self::zero(p.n_vars(), 0);
        f.add_term(&[], p);
        f
    }

    /// `dx_i`.
    pub fn dx(n_vars: usize, i: usize) -> Self {
        let mut f = Self::zero(n_vars, 1);
        f.add_term(&[i], Poly::one(n_vars));
        f
    }

    /// Constant form `dx_{i_1} ∧ … ∧ dx_{i_q}` (indices in any order).
    pub fn basis_form(n_vars: usize, indices: &[usize]) -> Self {
        let mut f = Self::zero(n_vars, indices.len());
        f.add_term(indices, Poly::one(n_vars));
        f
    }

    /// Validated constructor: indices in range, coefficients over `n_vars`
    /// variables and homogeneous of a common degree.
    pub fn from_components<I>(n_vars: usize, q: usize, comps: I) -> Result<Self, FormError>
    where
        I: IntoIterator<Item = (Vec<usize>, Poly)>,
    {
        let mut f = Self::zero(n_vars, q);
        for (idx, c) in comps {
            if idx.len() != q {
                return Err(FormError::FormDegreeMismatch {
                    expected: q,
                    got: idx.len(),
                });
            }
            if let Some(&bad) = idx.iter().find(|&&i| i >= n_vars) {
                return Err(FormError::IndexOutOfRange { index: bad, n_vars });
            }
            if c.n_vars() != n_vars {
                return Err(FormError::VariableMismatch(n_vars, c.n_vars()));
            }
            f.add_term(&idx, c);
        }
        if !f.is_homogeneous() {
            return Err(FormError::Inhomogeneous);
        }
        Ok(f)
    }

    /// Adds `coeff · dx_{indices}`, normalizing the index order.
    pub fn add_term(&mut self, indices: &[usize], coeff: Poly) {
        debug_assert_eq!(indices.len(), self.q);
        if coeff.is_zero() {
            return;
        }
        let mut idx = indices.to_vec();
        let Some(sign) = sort_with_sign(&mut idx) else {
            return;
        };
        let coeff = if sign < 0 { -coeff } else { coeff };
        match self.comps.entry(idx) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn degree(&self) -> usize {
        self.q
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn components(&self) -> impl Iterator<Item = (&Vec<usize>, &Poly)> {
        self.comps.iter()
    }

    pub fn coefficient(&self, indices: &[usize]) -> Poly {
        let mut idx = indices.to_vec();
        match sort_with_sign(&mut idx) {
            None => Poly::zero(self.n_vars),
            Some(s) => {
                let c = self
                    .comps
                    .get(&idx)
                    .cloned()
                    .unwrap_or_else(|| Poly::zero(self.n_vars));
                if s < 0 {
                    -c
                } else {
                    c
                }
            }
        }
    }

    pub fn coefficients(&self) -> impl Iterator<Item = &Poly> {
        self.comps.values()
    }

    /// Common degree of the coefficients; `None` for the zero form or when
    /// they are not homogeneous of a single degree.
    pub fn coefficient_degree(&self) -> Option<u32> {
        let mut degs = self.comps.values().map(|p| {
            if p.is_homogeneous() {
                p.degree()
            } else {
                None
            }
        });
        let first = degs.next()??;
        degs.all(|d| d == Some(first)).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.coefficient_degree().is_some()
    }

    pub fn scale(&self, c: &Rational) -> DiffForm {
        if c.is_zero() {
            return DiffForm::zero(self.n_vars, self.q);
        }
        self.map_coefficients(|p| p.scale(c))
    }

    pub fn scale_int(&self, c: i64) -> DiffForm {
        self.scale(&Rational::from_integer(c.into()))
    }

    pub fn mul_poly(&self, p: &Poly) -> DiffForm {
        self.map_coefficients(|c| c * p)
    }

    /// Applies `f` to every coefficient, dropping zeros.
    pub fn map_coefficients<F>(&self, mut f: F) -> DiffForm
    where
        F: FnMut(&Poly) -> Poly,
    {
        let mut out = DiffForm::zero(self.n_vars, self.q);
        for (idx, c) in &self.comps {
            let v = f(c);
            if !v.is_zero() {
                out.comps.insert(idx.clone(), v);
            }
        }
        out
    }

    fn check_vars(&self, other: &DiffForm) -> Result<(), FormError> {
        if self.n_vars != other.n_vars {
            return Err(FormError::VariableMismatch(self.n_vars, other.n_vars));
        }
        Ok(())
    }

    /// Exterior product. Returns the zero form of degree `q1 + q2` when every
    /// term vanishes, even if that exceeds `n_vars`.
    pub fn wedge(&self, other: &DiffForm) -> Result<DiffForm, FormError> {
        self.check_vars(other)?;
        let q = self.q + other.q;
        let mut out = DiffForm::zero(self.n_vars, q);
        if q > self.n_vars {
            return Ok(out);
        }
        for (i, a) in &self.comps {
            for (j, b) in &other.comps {
                let mut idx = Vec::with_capacity(q);
                idx.extend_from_slice(i);
                idx.extend_from_slice(j);
                out.add_term(&idx, a * b);
            }
        }
        Ok(out)
    }

    /// Exterior derivative `d`.
    pub fn exterior_derivative(&self) -> DiffForm {
        let mut out = DiffForm::zero(self.n_vars, self.q + 1);
        if self.q + 1 > self.n_vars {
            return out;
        }
        for (idx, c) in &self.comps {
            for j in 0..self.n_vars {
                if idx.contains(&j) {
                    continue;
                }
                let dc = c.partial_derivative(j);
                if dc.is_zero() {
                    continue;
                }
                let mut full = Vec::with_capacity(idx.len() + 1);
                full.push(j);
                full.extend_from_slice(idx);
                out.add_term(&full, dc);
            }
        }
        out
    }

    /// Interior product `i_v`. The zero-degree case returns the zero 0-form.
    pub fn interior_product(&self, v: &VectorField) -> Result<DiffForm, FormError> {
        if v.n_vars() != self.n_vars {
            return Err(FormError::VariableMismatch(self.n_vars, v.n_vars()));
        }
        if self.q == 0 {
            return Ok(DiffForm::zero(self.n_vars, 0));
        }
        let mut out = DiffForm::zero(self.n_vars, self.q - 1);
        for (idx, c) in &self.comps {
            for (s, &i) in idx.iter().enumerate() {
                let vi = &v.components[i];
                if vi.is_zero() {
                    continue;
                }
                let mut rest = idx.clone();
                rest.remove(s);
                let term = c * vi;
                out.add_term(&rest, if s % 2 == 0 { term } else { -term });
            }
        }
        Ok(out)
    }

    /// Contraction with the radial field `R = Σ x_i ∂/∂x_i`.
    pub fn radial_contraction(&self) -> DiffForm {
        self.interior_product(&VectorField::radial(self.n_vars))
            .expect("radial field has matching variable count")
    }

    /// Same form viewed in `n_vars` variables (new variables appended).
    pub fn with_n_vars(&self, n_vars: usize) -> DiffForm {
        let mut out = DiffForm::zero(n_vars, self.q);
        for (idx, c) in &self.comps {
            assert!(idx.iter().all(|&i| i < n_vars), "dropping a used dx");
            out.comps.insert(idx.clone(), c.with_n_vars(n_vars));
        }
        out
    }

    /// Pullback along `x = m · y`: coefficients are substituted and each
    /// `dx_i` becomes `Σ_j m[i][j] dy_j`.
    pub fn substitute_linear(&self, m: &crate::linalg::RatMatrix) -> Result<DiffForm, FormError> {
        if m.rows() != self.n_vars || m.cols() != self.n_vars {
            return Err(FormError::VariableMismatch(self.n_vars, m.rows()));
        }
        let nv = self.n_vars;
        let images: Vec<DiffForm> = (0..nv)
            .map(|i| {
                let mut w = DiffForm::zero(nv, 1);
                for j in 0..nv {
                    w.add_term(&[j], Poly::constant(nv, m.get(i, j).clone()));
                }
                w
            })
            .collect();
        let mut out = DiffForm::zero(nv, self.q);
        for (idx, c) in &self.comps {
            let mut term = DiffForm::function(c.substitute_linear(m).expect("square matrix"));
            for &i in idx {
                term = term.wedge(&images[i])?;
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Pullback to the coordinate hyperplane `{x_var = 0}`, expressed in the
    /// remaining variables.
    pub fn restrict_to_coordinate_hyperplane(&self, var: usize) -> DiffForm {
        let n = self.n_vars - 1;
        let mut out = DiffForm::zero(n, self.q);
        for (idx, c) in &self.comps {
            if idx.contains(&var) {
                continue;
            }
            let mut on_h = c.specialize(var, &Rational::zero());
            if on_h.is_zero() {
                continue;
            }
            on_h = on_h.dehomogenize(var);
            let shifted: Vec<usize> = idx
                .iter()
                .map(|&i| if i > var { i - 1 } else { i })
                .collect();
            out.add_term(&shifted, on_h);
        }
        out
    }
}

impl Add for &DiffForm {
    type Output = DiffForm;
    fn add(self, rhs: &DiffForm) -> DiffForm {
        assert_eq!(self.n_vars, rhs.n_vars, "variable count mismatch");
        assert_eq!(self.q, rhs.q, "form degree mismatch");
        let mut out = self.clone();
        for (idx, c) in &rhs.comps {
            out.add_term(idx, c.clone());
        }
        out
    }
}

impl Sub for &DiffForm {
    type Output = DiffForm;
    fn sub(self, rhs: &DiffForm) -> DiffForm {
        self + &(-rhs)
    }
}

impl Neg for &DiffForm {
    type Output = DiffForm;
    fn neg(self) -> DiffForm {
        self.map_coefficients(|c| -c)
    }
}

impl fmt::Display for DiffForm {
    /// Renders in the input grammar, e.g. `x0*dx1 - x1*dx0` or
    /// `(x0^2 + x1^2)*dx0^dx2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (idx, c) in &self.comps {
            let dxs = idx
                .iter()
                .map(|i| format!("dx{i}"))
                .collect::<Vec<_>>()
                .join("^");
            let single = c.len() == 1;
            let (neg, body) = if single {
                let (m, v) = c.terms().next().unwrap();
                let mono = fmt_monomial(m);
                let abs = fmt_rational(&v.abs());
                let body = match (mono.is_empty(), abs == "1") {
                    (true, _) => abs,
                    (false, true) => mono,
                    (false, false) => format!("{abs}*{mono}"),
                };
                (v.is_negative(), body)
            } else {
                (false, format!("({c})"))
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (dxs.is_empty(), body == "1") {
                (true, _) => write!(f, "{body}")?,
                (false, true) => write!(f, "{dxs}")?,
                (false, false) => write!(f, "{body}*{dxs}")?,
            }
        }
        Ok(())
    }
}

/// Polynomial vector field `Σ v_i ∂/∂x_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorField {
    components: Vec<Poly>,
}

impl VectorField {
    pub fn new(components: Vec<Poly>) -> Result<Self, FormError> {
        let n = components.len();
        if let Some(bad) = components.iter().find(|p| p.n_vars() != n) {
            return Err(FormError::VariableMismatch(n, bad.n_vars()));
        }
        Ok(VectorField { components })
    }

    /// The radial (Euler) field with components `x_i`.
    pub fn radial(n_vars: usize) -> Self {
        VectorField {
            components: (0..n_vars).map(|i| Poly::var(n_vars, i)).collect(),
        }
    }

    /// The constant field `∂/∂x_j`.
    pub fn coordinate(n_vars: usize, j: usize) -> Self {
        VectorField {
            components: (0..n_vars)
                .map(|i| {
                    if i == j {
                        Poly::one(n_vars)
                    } else {
                        Poly::zero(n_vars)
                    }
                })
                .collect(),
        }
    }

    pub fn n_vars(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.components.iter().filter(|p| !p.is_zero()).map(|p| {
            if p.is_homogeneous() {
                p.degree()
            } else {
                None
            }
        });
        match degs.next() {
            None => true,
            Some(None) => false,
            Some(first) => degs.all(|d| d == first),
        }
    }
}

/// All strictly increasing `q`-tuples from `0..n`, lexicographically.
pub fn index_tuples(n: usize, q: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < left {
                break;
            }
            cur.push(i);
            rec(i + 1, n, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if q <= n {
        rec(0, n, q, &mut Vec::new(), &mut out);
    }
    out
}

/// Monomial basis `{m · dx_I}` of the space of `q`-forms whose coefficients
/// are homogeneous of degree `e`. Ordered by index tuple (lex), then
/// monomial (grevlex ascending).
#[derive(Debug, Clone)]
pub struct FormBasis {
    n_vars: usize,
    q: usize,
    e: u32,
    tuples: Vec<Vec<usize>>,
    monomials: Vec<Monomial>,
    tuple_index: HashMap<Vec<usize>, usize>,
    monomial_index: HashMap<Monomial, usize>,
}

impl FormBasis {
    /// A negative coefficient degree gives the zero space.
    pub fn new(n_vars: usize, q: usize, e: i64) -> Self {
        let (tuples, monomials) = if e < 0 || q > n_vars {
            (Vec::new(), Vec::new())
        } else {
            (
                index_tuples(n_vars, q),
                Monomial::all_of_degree(n_vars, e as u32),
            )
        };
        let tuple_index = tuples.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let monomial_index = monomials
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        FormBasis {
            n_vars,
            q,
            e: e.max(0) as u32,
            tuples,
            monomials,
            tuple_index,
            monomial_index,
        }
    }

    pub fn dim(&self) -> usize {
        self.tuples.len() * self.monomials.len()
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn form_degree(&self) -> usize {
        self.q
    }

    pub fn coefficient_degree(&self) -> u32 {
        self.e
    }

    /// The `k`-th basis element as (index tuple, monomial).
    pub fn element(&self, k: usize) -> (&[usize], &Monomial) {
        let nm = self.monomials.len();
        (&self.tuples[k / nm], &self.monomials[k % nm])
    }

    pub fn element_form(&self, k: usize) -> DiffForm {
        let (t, m) = self.element(k);
        let mut f = DiffForm::zero(self.n_vars, self.q);
        f.comps
            .insert(t.to_vec(), Poly::term(Rational::one(), m.clone()));
        f
    }

    pub fn index_of(&self, tuple: &[usize], m: &Monomial) -> Option<usize> {
        let t = self.tuple_index.get(tuple)?;
        let j = self.monomial_index.get(m)?;
        Some(t * self.monomials.len() + j)
    }

    /// Coordinates of `a` in this basis.
    pub fn coordinates(&self, a: &DiffForm) -> Result<Vec<Rational>, FormError> {
        if a.n_vars != self.n_vars {
            return Err(FormError::VariableMismatch(self.n_vars, a.n_vars));
        }
        if a.q != self.q {
            return Err(FormError::FormDegreeMismatch {
                expected: self.q,
                got: a.q,
            });
        }
        let mut v = vec![Rational::zero(); self.dim()];
        if a.is_zero() {
            return Ok(v);
        }
        match a.coefficient_degree() {
            None => return Err(FormError::Inhomogeneous),
            Some(d) if d != self.e || self.dim() == 0 => {
                return Err(FormError::CoefficientDegreeMismatch {
                    expected: self.e,
                    got: d,
                })
            }
            Some(_) => {}
        }
        for (idx, c) in &a.comps {
            for (m, val) in c.terms() {
                let k = self.index_of(idx, m).expect("basis covers homogeneous form");
                v[k] = val.clone();
            }
        }
        Ok(v)
    }

    /// Sparse coordinates `(index, value)`, same validation as
    /// [`FormBasis::coordinates`].
    pub fn sparse_coordinates(&self, a: &DiffForm) -> Result<Vec<(usize, Rational)>, FormError> {
        Ok(self
            .coordinates(a)?
            .into_iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .collect())
    }

    pub fn form_from_coordinates(&self, v: &[Rational]) -> Result<DiffForm, FormError> {
        if v.len() != self.dim() {
            return Err(FormError::CoordinateLength {
                expected: self.dim(),
                got: v.len(),
            });
        }
        let mut out = DiffForm::zero(self.n_vars, self.q);
        for (k, val) in v.iter().enumerate() {
            if val.is_zero() {
                continue;
            }
            let (t, m) = self.element(k);
            out.comps
                .entry(t.to_vec())
                .or_insert_with(|| Poly::zero(self.n_vars))
                .add_term(m.clone(), val.clone());
        }
        Ok(out)
    }
}

/// `C(n, k)` as `u64`; zero when `k > n`.
pub fn binomial(n: i64, k: i64) -> u64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse_form, parse_poly};

    fn form(s: &str, n_vars: usize) -> DiffForm {
        parse_form(s, n_vars).unwrap()
    }

    #[test]
    fn sign_routine() {
        assert_eq!(sort_with_sign(&mut [0, 1, 2]), Some(1));
        assert_eq!(sort_with_sign(&mut [1, 0, 2]), Some(-1));
        assert_eq!(sort_with_sign(&mut [2, 0, 1]), Some(1));
        assert_eq!(sort_with_sign(&mut [2, 1, 0]), Some(-1));
        assert_eq!(sort_with_sign(&mut [1, 2, 1]), None);
        assert_eq!(sort_with_sign(&mut [3, 0, 3, 1]), None);
        assert_eq!(sort_with_sign(&mut []), Some(1));
    }

    #[test]
    fn wedge_alternates() {
        let dx0 = DiffForm::dx(2, 0);
        let dx1 = DiffForm::dx(2, 1);
        assert!(dx0.wedge(&dx0).unwrap().is_zero());
        assert_eq!(dx0.wedge(&dx1).unwrap(), -&dx1.wedge(&dx0).unwrap());
    }

    #[test]
    fn contact_form_wedge_its_derivative() {
        let eta = form("x0*dx1 - x1*dx0 + x2*dx3 - x3*dx2", 4);
        let got = eta.wedge(&eta.exterior_derivative()).unwrap();
        let expected = form(
            "2*x0*dx1^dx2^dx3 - 2*x1*dx0^dx2^dx3 + 2*x2*dx0^dx1^dx3 - 2*x3*dx0^dx1^dx2",
            4,
        );
        assert_eq!(got, expected);
    }

    #[test]
    fn exterior_derivative_examples() {
        assert_eq!(
            form("x0*dx1", 2).exterior_derivative(),
            form("dx0^dx1", 2)
        );
        assert_eq!(
            form("x0*dx1 - x1*dx0", 2).exterior_derivative(),
            form("2*dx0^dx1", 2)
        );
    }

    #[test]
    fn interior_product_examples() {
        let r = VectorField::radial(2);
        assert_eq!(
            form("dx0^dx1", 2).interior_product(&r).unwrap(),
            form("x0*dx1 - x1*dx0", 2)
        );
        let f = parse_poly("x0^3 + 2*x1*x2^2", 3).unwrap();
        let df = DiffForm::function(f.clone()).exterior_derivative();
        assert_eq!(df.radial_contraction(), DiffForm::function(f.scale_int(3)));
    }

    #[test]
    fn interior_product_mismatch() {
        let r = VectorField::radial(3);
        assert!(form("dx0", 2).interior_product(&r).is_err());
    }

    #[test]
    fn basis_dimension_and_round_trip() {
        let b = FormBasis::new(4, 1, 1);
        assert_eq!(b.dim(), 16);
        assert_eq!(
            b.coordinates(&DiffForm::zero(4, 1)).unwrap(),
            vec![Rational::zero(); 16]
        );
        let a = form("x0*dx1 - x1*dx0 + 3*x2*dx3", 4);
        let c = b.coordinates(&a).unwrap();
        assert_eq!(b.form_from_coordinates(&c).unwrap(), a);
        for (n, q, e) in [(4usize, 2usize, 3i64), (5, 3, 2), (3, 0, 4)] {
            let b = FormBasis::new(n, q, e);
            assert_eq!(
                b.dim() as u64,
                binomial(n as i64, q as i64) * binomial(e + n as i64 - 1, n as i64 - 1)
            );
        }
    }

    #[test]
    fn coordinates_reject_wrong_degree() {
        let b = FormBasis::new(3, 1, 2);
        assert!(matches!(
            b.coordinates(&form("x0*dx1", 3)),
            Err(FormError::CoefficientDegreeMismatch { .. })
        ));
    }

    #[test]
    fn from_components_rejects_inhomogeneous() {
        let r = DiffForm::from_components(
            2,
            1,
            vec![
                (vec![0], parse_poly("x0", 2).unwrap()),
                (vec![1], parse_poly("1", 2).unwrap()),
            ],
        );
        assert_eq!(r, Err(FormError::Inhomogeneous));
    }

    #[test]
    fn restriction_to_coordinate_hyperplane() {
        let a = form("x0*dx1 - x1*dx0 + x2*dx0", 3);
        let back = a.restrict_to_coordinate_hyperplane(2);
        assert_eq!(back, form("x0*dx1 - x1*dx0", 2));
    }

    #[test]
    fn display_round_trip() {
        let a = form("(x0^2 + x1^2)*dx0^dx2 - 3/2*x1^2*dx1^dx2", 3);
        assert_eq!(form(&a.to_string(), 3), a);
        assert_eq!(form("dx0^dx1", 2).to_string(), "dx0^dx1");
        assert_eq!(form("-x1*dx0", 2).to_string(), "-x1*dx0");
    }
}

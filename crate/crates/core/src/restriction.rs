//! Hypersurfaces `X = {f = 0} ⊂ P^n`, invariance, restriction of sections to
//! `X`, kernels of the restriction map and cohomology dimensions.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::forms::{binomial, DiffForm, FormBasis};
use crate::linalg::{self, Membership, RatMatrix};
use crate::pfaff::{make_section, TwistedSection};
use crate::poly::{Monomial, Poly};
use crate::text::{self, ParseError};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypersurfaceError {
    #[error("defining polynomial is zero")]
    Zero,
    #[error("defining polynomial is not homogeneous")]
    Inhomogeneous,
    #[error("defining polynomial is constant")]
    Constant,
    #[error("bad hypersurface specifier '{0}'")]
    Specifier(String),
    #[error("P^{expected} expected, got P^{got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("a Pfaff equation on P^{n} has 1 <= q <= {n}-1, got q = {q}")]
    FormDegree { q: usize, n: usize },
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// How the smoothness heuristics judged the hypersurface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Smoothness {
    /// A pattern rule proves smoothness.
    Certified(&'static str),
    /// No singular point among the sampled rational points of `X`.
    NoSingularSample { points_on_x: usize },
    /// A rational point of `X` where the gradient vanishes.
    SingularPoint(Vec<Rational>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypersurface {
    f: Poly,
    n: usize,
    d: u32,
    gradient: Vec<Poly>,
    smooth_asserted: bool,
    irreducible_asserted: bool,
    smoothness: Smoothness,
}

pub fn make_hypersurface(f: Poly) -> Result<Hypersurface, HypersurfaceError> {
    if f.is_zero() {
        return Err(HypersurfaceError::Zero);
    }
    if !f.is_homogeneous() {
        return Err(HypersurfaceError::Inhomogeneous);
    }
    let d = f.degree().unwrap();
    if d == 0 {
        return Err(HypersurfaceError::Constant);
    }
    let n = f.n_vars() - 1;
    let gradient = f.gradient();
    let smoothness = judge_smoothness(&f, &gradient, d);
    Ok(Hypersurface {
        f,
        n,
        d,
        gradient,
        smooth_asserted: false,
        irreducible_asserted: false,
        smoothness,
    })
}

impl Hypersurface {
    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn gradient(&self) -> &[Poly] {
        &self.gradient
    }

    pub fn smoothness(&self) -> &Smoothness {
        &self.smoothness
    }

    pub fn smooth_asserted(&self) -> bool {
        self.smooth_asserted
    }

    pub fn irreducible_asserted(&self) -> bool {
        self.irreducible_asserted
    }

    pub fn assert_smooth(mut self, yes: bool) -> Self {
        self.smooth_asserted = yes;
        self
    }

    pub fn assert_irreducible(mut self, yes: bool) -> Self {
        self.irreducible_asserted = yes;
        self
    }

    /// `df` as a 1-form.
    pub fn df(&self) -> DiffForm {
        let mut out = DiffForm::zero(self.n + 1, 1);
        for (i, g) in self.gradient.iter().enumerate() {
            out.add_term(&[i], g.clone());
        }
        out
    }

    fn check(&self, form: &DiffForm) -> Result<(), HypersurfaceError> {
        if form.n_vars() != self.n + 1 {
            return Err(HypersurfaceError::DimensionMismatch {
                expected: self.n,
                got: form.n_vars().saturating_sub(1),
            });
        }
        Ok(())
    }
}

/// `x0^d + … + xn^d`.
pub fn fermat(n: usize, d: u32) -> Hypersurface {
    let mut f = Poly::zero(n + 1);
    for i in 0..=n {
        f = f + Poly::var(n + 1, i).pow(d);
    }
    make_hypersurface(f).unwrap().assert_smooth(true).assert_irreducible(n >= 2 || d == 1)
}

/// `x0^2 + … + xn^2`.
pub fn quadric(n: usize) -> Hypersurface {
    fermat(n, 2)
}

/// Parses `fermat:<n>:<d>`, `quadric:<n>` or polynomial text. Inline
/// polynomials use `n` when given, otherwise the largest variable index.
pub fn parse_hypersurface(spec: &str, n: Option<usize>) -> Result<Hypersurface, HypersurfaceError> {
    let bad = || HypersurfaceError::Specifier(spec.to_string());
    let x = if let Some(rest) = spec.strip_prefix("fermat:") {
        let (a, b) = rest.split_once(':').ok_or_else(bad)?;
        let dim: usize = a.parse().map_err(|_| bad())?;
        let d: u32 = b.parse().map_err(|_| bad())?;
        if dim == 0 || d == 0 {
            return Err(bad());
        }
        fermat(dim, d)
    } else if let Some(rest) = spec.strip_prefix("quadric:") {
        let dim: usize = rest.parse().map_err(|_| bad())?;
        if dim == 0 {
            return Err(bad());
        }
        quadric(dim)
    } else {
        let dim = match n {
            Some(n) => n,
            None => text::max_variable_index(spec).ok_or_else(bad)?.max(1),
        };
        let f = text::parse_homogeneous_poly(spec, dim + 1)?;
        let x = make_hypersurface(f)?;
        let smooth = !matches!(x.smoothness, Smoothness::SingularPoint(_));
        x.assert_smooth(smooth)
    };
    if let Some(n) = n {
        if n != x.n {
            return Err(HypersurfaceError::DimensionMismatch {
                expected: n,
                got: x.n,
            });
        }
    }
    Ok(x)
}

fn judge_smoothness(f: &Poly, gradient: &[Poly], d: u32) -> Smoothness {
    let nv = f.n_vars();
    if d == 1 {
        return Smoothness::Certified("hyperplane");
    }
    // Σ c_i x_i^d with every c_i nonzero: the partials d·c_i·x_i^{d−1}
    // vanish together only at the origin.
    let diagonal = f.len() == nv
        && f.terms().all(|(m, _)| {
            m.exponents().iter().filter(|&&e| e > 0).count() == 1
        })
        && (0..nv).all(|i| f.degree_in(i) == Some(d));
    if diagonal {
        return Smoothness::Certified("diagonal");
    }
    if d == 2 {
        let mut h = RatMatrix::zeros(nv, nv);
        for i in 0..nv {
            for j in 0..nv {
                let c = gradient[i].partial_derivative(j);
                h.set(i, j, c.coefficient(&Monomial::one(nv)));
            }
        }
        if !linalg::determinant(&h).unwrap().is_zero() {
            return Smoothness::Certified("nondegenerate quadric");
        }
    }
    sample_singular_points(f, gradient)
}

/// Scans the points of `{−2,…,2}^{n+1}` with first nonzero coordinate
/// positive that lie on `X`, looking for a common zero of the partials.
fn sample_singular_points(f: &Poly, gradient: &[Poly]) -> Smoothness {
    const BUDGET: usize = 20_000;
    let nv = f.n_vars();
    let mut point = vec![-2i64; nv];
    let mut on_x = 0;
    for _ in 0..BUDGET {
        let first = point.iter().find(|&&v| v != 0);
        if first.is_some_and(|&v| v > 0) {
            let p: Vec<Rational> = point
                .iter()
                .map(|&v| Rational::from_integer(v.into()))
                .collect();
            if f.eval(&p).is_zero() {
                on_x += 1;
                if gradient.iter().all(|g| g.eval(&p).is_zero()) {
                    return Smoothness::SingularPoint(p);
                }
            }
        }
        // odometer increment
        let mut i = nv;
        loop {
            if i == 0 {
                return Smoothness::NoSingularSample { points_on_x: on_x };
            }
            i -= 1;
            if point[i] < 2 {
                point[i] += 1;
                break;
            }
            point[i] = -2;
        }
    }
    Smoothness::NoSingularSample { points_on_x: on_x }
}

/// `df ∧ ω ≡ 0 mod f`.
pub fn is_invariant(x: &Hypersurface, form: &DiffForm) -> Result<bool, HypersurfaceError> {
    x.check(form)?;
    let w = x.df().wedge(form).unwrap();
    let divisible = w
        .coefficients()
        .all(|c| c.is_divisible_by(&x.f).expect("f is nonzero"));
    Ok(divisible)
}

/// Why a form restricts to zero on `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VanishingWitness {
    /// `ω = f·β + df∧γ`.
    Membership { beta: DiffForm, gamma: DiffForm },
    /// `q ≥ n`: every `q`-form vanishes on the `(n−1)`-dimensional `X`.
    ExceedsDimension,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vanishing {
    pub vanishes: bool,
    pub witness: Option<VanishingWitness>,
}

impl Vanishing {
    fn no() -> Self {
        Vanishing {
            vanishes: false,
            witness: None,
        }
    }
}

/// Generators of `f·V(n,q,e−d) + df∧V(n,q−1,e−d+1)`, tagged with the basis
/// element they come from.
struct Generators {
    beta_basis: FormBasis,
    gamma_basis: FormBasis,
    forms: Vec<DiffForm>,
}

fn generators(x: &Hypersurface, q: usize, e: i64) -> Generators {
    let nv = x.n + 1;
    let d = x.d as i64;
    let beta_basis = FormBasis::new(nv, q, e - d);
    let gamma_basis = if q == 0 {
        FormBasis::new(nv, 0, -1)
    } else {
        FormBasis::new(nv, q - 1, e - d + 1)
    };
    let df = x.df();
    let mut forms = Vec::with_capacity(beta_basis.dim() + gamma_basis.dim());
    for i in 0..beta_basis.dim() {
        forms.push(beta_basis.element_form(i).mul_poly(&x.f));
    }
    for i in 0..gamma_basis.dim() {
        forms.push(df.wedge(&gamma_basis.element_form(i)).unwrap());
    }
    Generators {
        beta_basis,
        gamma_basis,
        forms,
    }
}

fn column_matrix(basis: &FormBasis, forms: &[DiffForm]) -> RatMatrix {
    let mut m = RatMatrix::zeros(basis.dim(), forms.len());
    for (j, g) in forms.iter().enumerate() {
        for (i, v) in basis.sparse_coordinates(g).expect("generator degree") {
            m.set(i, j, v);
        }
    }
    m
}

/// Membership test `ω ∈ f·V(n,q,e−d) + df∧V(n,q−1,e−d+1)`; forms of degree
/// `q ≥ n` vanish on `X` regardless, in which case membership is still tried
/// first so a polynomial witness is reported whenever one exists.
pub fn restriction_vanishes(
    x: &Hypersurface,
    form: &DiffForm,
) -> Result<Vanishing, HypersurfaceError> {
    x.check(form)?;
    let q = form.degree();
    let nv = x.n + 1;
    if form.is_zero() {
        return Ok(Vanishing {
            vanishes: true,
            witness: Some(VanishingWitness::Membership {
                beta: DiffForm::zero(nv, q),
                gamma: DiffForm::zero(nv, q.saturating_sub(1)),
            }),
        });
    }
    let fallback = if q >= x.n {
        Vanishing {
            vanishes: true,
            witness: Some(VanishingWitness::ExceedsDimension),
        }
    } else {
        Vanishing::no()
    };
    let Some(e) = form.coefficient_degree() else {
        return Ok(fallback);
    };
    let gens = generators(x, q, e as i64);
    if gens.forms.is_empty() {
        return Ok(fallback);
    }
    let ambient = FormBasis::new(nv, q, e as i64);
    let m = column_matrix(&ambient, &gens.forms);
    let target = ambient.coordinates(form).expect("homogeneous form");
    let sol = match linalg::solve_membership(&m, &target).unwrap() {
        Membership::Solution(c) => c,
        Membership::NotInSpan => return Ok(fallback),
    };
    let nb = gens.beta_basis.dim();
    let beta = gens
        .beta_basis
        .form_from_coordinates(&sol[..nb])
        .unwrap();
    let gamma = if gens.gamma_basis.dim() == 0 {
        DiffForm::zero(nv, q.saturating_sub(1))
    } else {
        gens.gamma_basis.form_from_coordinates(&sol[nb..]).unwrap()
    };
    let beta = if nb == 0 { DiffForm::zero(nv, q) } else { beta };
    assert_eq!(
        &beta.mul_poly(&x.f) + &x.df().wedge(&gamma).unwrap(),
        *form,
        "membership witness must reassemble"
    );
    Ok(Vanishing {
        vanishes: true,
        witness: Some(VanishingWitness::Membership { beta, gamma }),
    })
}

/// Kernel of the restriction `H^0(P^n, Ω^q(k)) → H^0(X, Ω^q_X(k))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionKernel {
    pub n: usize,
    pub q: usize,
    pub k: i64,
    pub d: u32,
    pub basis: Vec<TwistedSection>,
    pub ambient_dim: u64,
}

impl RestrictionKernel {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn injective(&self) -> bool {
        self.basis.is_empty()
    }
}

/// Sections of twist `k` lying in `f·V + df∧V`, as a canonical echelon basis.
pub fn restriction_kernel(x: &Hypersurface, q: usize, k: i64) -> RestrictionKernel {
    let nv = x.n + 1;
    let e = k - q as i64;
    let mut out = RestrictionKernel {
        n: x.n,
        q,
        k,
        d: x.d,
        basis: Vec::new(),
        ambient_dim: h0_bott(x.n, q, k),
    };
    if e < 0 {
        return out;
    }
    let gens = generators(x, q, e);
    if gens.forms.is_empty() {
        return out;
    }
    // combinations of generators killed by i_R
    let combos = if q == 0 {
        let len = gens.forms.len();
        (0..len)
            .map(|i| {
                let mut v = vec![Rational::zero(); len];
                v[i] = Rational::one();
                v
            })
            .collect()
    } else {
        let target = FormBasis::new(nv, q - 1, e + 1);
        let images: Vec<DiffForm> = gens.forms.iter().map(DiffForm::radial_contraction).collect();
        linalg::nullspace(&column_matrix(&target, &images))
    };
    let ambient = FormBasis::new(nv, q, e);
    let cols: Vec<Vec<Rational>> = gens
        .forms
        .iter()
        .map(|g| ambient.coordinates(g).unwrap())
        .collect();
    let vectors: Vec<Vec<Rational>> = combos
        .iter()
        .map(|c| {
            let mut v = vec![Rational::zero(); ambient.dim()];
            for (coef, col) in c.iter().zip(&cols) {
                if coef.is_zero() {
                    continue;
                }
                for (a, b) in v.iter_mut().zip(col) {
                    if !b.is_zero() {
                        *a += coef * b;
                    }
                }
            }
            v
        })
        .collect();
    out.basis = linalg::row_basis(&vectors, ambient.dim())
        .iter()
        .map(|v| make_section(ambient.form_from_coordinates(v).unwrap(), x.n).unwrap())
        .collect();
    out
}

/// Dimension of `H^0(P^n, Ω^q(k))` by the closed formula.
pub fn h0_bott(n: usize, q: usize, k: i64) -> u64 {
    let (n, q) = (n as i64, q as i64);
    if q == 0 {
        return if k >= 0 { binomial(k + n, n) } else { 0 };
    }
    if k <= q {
        return 0;
    }
    binomial(k + n - q, k) * binomial(k - 1, q)
}

/// Dimension of `ker(i_R : V(n,q,k−q) → V(n,q−1,k−q+1))` by exact linear
/// algebra. `i_R` preserves the multidegree `m + e_I` of `m·dx_I`, so the
/// matrix splits into small blocks.
pub fn h0_direct(n: usize, q: usize, k: i64) -> u64 {
    let nv = n + 1;
    let e = k - q as i64;
    let source = FormBasis::new(nv, q, e);
    if source.dim() == 0 {
        return 0;
    }
    if q == 0 {
        return source.dim() as u64;
    }
    let target = FormBasis::new(nv, q - 1, e + 1);
    let mut blocks: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
    for i in 0..source.dim() {
        let (t, m) = source.element(i);
        let mut w = m.exponents().to_vec();
        for &j in t {
            w[j] += 1;
        }
        blocks.entry(w).or_default().push(i);
    }
    let mut kernel = 0u64;
    for members in blocks.values() {
        let images: Vec<Vec<(usize, Rational)>> = members
            .iter()
            .map(|&i| {
                target
                    .sparse_coordinates(&source.element_form(i).radial_contraction())
                    .unwrap()
            })
            .collect();
        let mut local: HashMap<usize, usize> = HashMap::new();
        for img in &images {
            for (r, _) in img {
                let next = local.len();
                local.entry(*r).or_insert(next);
            }
        }
        let mut m = RatMatrix::zeros(local.len(), members.len());
        for (j, img) in images.iter().enumerate() {
            for (r, v) in img {
                m.set(local[r], j, v.clone());
            }
        }
        kernel += (members.len() - linalg::rank(&m)) as u64;
    }
    kernel
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PoincareVerdict {
    Consistent,
    /// An invariant pair with `d > k − q`.
    InconsistencyWitness,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoincareReport {
    pub invariant: bool,
    pub d: u32,
    pub bound: i64,
    pub smooth_asserted: bool,
    pub verdict: PoincareVerdict,
}

/// If `X` is invariant under `s`, checks `deg X ≤ k − q`. Only Pfaff
/// equations (`1 ≤ q ≤ n − 1`) are accepted: top-degree forms leave every
/// hypersurface invariant for trivial reasons.
pub fn poincare_bound_check(x: &Hypersurface, s: &TwistedSection) -> Result<PoincareReport, HypersurfaceError> {
    if s.q() == 0 || s.q() >= x.n {
        return Err(HypersurfaceError::FormDegree { q: s.q(), n: x.n });
    }
    let invariant = is_invariant(x, s.form())?;
    let bound = s.k() - s.q() as i64;
    let verdict = if invariant && x.d as i64 > bound {
        PoincareVerdict::InconsistencyWitness
    } else {
        PoincareVerdict::Consistent
    };
    Ok(PoincareReport {
        invariant,
        d: x.d,
        bound,
        smooth_asserted: x.smooth_asserted,
        verdict,
    })
}

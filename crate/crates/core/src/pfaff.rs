//! Twisted sections of `Ω^q(k)` on `P^n`, saturation, and integrability.

use std::fmt;

use thiserror::Error;

use crate::forms::{DiffForm, VectorField};
use crate::poly::{gcd_many, Poly};
use crate::text::{self, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PfaffError {
    #[error("contraction with the radial field is nonzero")]
    RadialContractionNonzero,
    #[error("coefficients are not homogeneous of a common degree")]
    InhomogeneousCoefficients,
    #[error("the zero form is not a section")]
    ZeroSection,
    #[error("form has {got} variables, P^{n} needs {expected}")]
    VariableMismatch { n: usize, expected: usize, got: usize },
    #[error("operation needs form degree {expected}, got {got}")]
    UnsupportedDegree { expected: &'static str, got: usize },
    #[error("bad section header: {0}")]
    Header(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// A nonzero homogeneous `q`-form on `C^{n+1}` killed by `i_R`, read as a
/// section of `Ω^q_{P^n}(k)` with `k = q + coefficient degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedSection {
    form: DiffForm,
    n: usize,
    k: i64,
}

pub fn make_section(form: DiffForm, n: usize) -> Result<TwistedSection, PfaffError> {
    if form.n_vars() != n + 1 {
        return Err(PfaffError::VariableMismatch {
            n,
            expected: n + 1,
            got: form.n_vars(),
        });
    }
    if form.is_zero() {
        return Err(PfaffError::ZeroSection);
    }
    let Some(e) = form.coefficient_degree() else {
        return Err(PfaffError::InhomogeneousCoefficients);
    };
    if !form.radial_contraction().is_zero() {
        return Err(PfaffError::RadialContractionNonzero);
    }
    let k = form.degree() as i64 + e as i64;
    Ok(TwistedSection { form, n, k })
}

impl TwistedSection {
    pub fn form(&self) -> &DiffForm {
        &self.form
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> usize {
        self.form.degree()
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn coefficient_degree(&self) -> u32 {
        (self.k - self.q() as i64) as u32
    }

    pub fn foliation_degree(&self) -> i64 {
        foliation_degree(self)
    }

    /// Parses the header line `n=<dim> q=<q> k=<twist>` followed by a form.
    pub fn parse(text: &str) -> Result<TwistedSection, PfaffError> {
        let (header, body) = text.split_once('\n').unwrap_or((text, ""));
        let mut n = None;
        let mut q = None;
        let mut k = None;
        for tok in header.split_whitespace() {
            let (key, value) = tok
                .split_once('=')
                .ok_or_else(|| PfaffError::Header(tok.to_string()))?;
            let bad = || PfaffError::Header(tok.to_string());
            match key {
                "n" => n = Some(value.parse::<usize>().map_err(|_| bad())?),
                "q" => q = Some(value.parse::<usize>().map_err(|_| bad())?),
                "k" => k = Some(value.parse::<i64>().map_err(|_| bad())?),
                _ => return Err(bad()),
            }
        }
        let n = n.ok_or_else(|| PfaffError::Header("missing n".into()))?;
        let form = text::parse_form(body, n + 1)?;
        let s = make_section(form, n)?;
        if q.is_some_and(|q| q != s.q()) || k.is_some_and(|k| k != s.k()) {
            return Err(PfaffError::Header(format!(
                "header disagrees with form (q={}, k={})",
                s.q(),
                s.k()
            )));
        }
        Ok(s)
    }
}

impl fmt::Display for TwistedSection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={} q={} k={}", self.n, self.q(), self.k)?;
        write!(f, "{}", self.form)
    }
}

/// `k − q − 1`.
pub fn foliation_degree(s: &TwistedSection) -> i64 {
    s.k - s.q() as i64 - 1
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaturationResult {
    pub saturated: TwistedSection,
    pub removed_divisor: Poly,
    pub twist_drop: u32,
}

impl SaturationResult {
    pub fn removed_anything(&self) -> bool {
        self.twist_drop > 0
    }
}

/// Divides out the GCD of the coefficients.
pub fn saturate(s: &TwistedSection) -> SaturationResult {
    let g = gcd_many(s.form.coefficients()).expect("sections are nonzero");
    let nv = s.form.n_vars();
    if g.is_constant() {
        return SaturationResult {
            saturated: s.clone(),
            removed_divisor: Poly::one(nv),
            twist_drop: 0,
        };
    }
    let form = s.form.map_coefficients(|c| {
        c.exact_divide(&g)
            .expect("gcd is nonzero")
            .expect("gcd divides every coefficient")
    });
    let drop = g.degree().unwrap_or(0);
    let saturated = make_section(form, s.n).expect("quotient of a section is a section");
    SaturationResult {
        saturated,
        removed_divisor: g,
        twist_drop: drop,
    }
}

/// Outcome of a vanishing test together with the form that was tested.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub holds: bool,
    pub witness: DiffForm,
}

/// `ω ∧ dω = 0`, with `ω ∧ dω` as witness.
pub fn is_integrable_codim1(s: &TwistedSection) -> Result<Check, PfaffError> {
    if s.q() != 1 {
        return Err(PfaffError::UnsupportedDegree {
            expected: "1",
            got: s.q(),
        });
    }
    let w = s.form.wedge(&s.form.exterior_derivative()).unwrap();
    Ok(Check {
        holds: w.is_zero(),
        witness: w,
    })
}

/// `ω ∧ ω = 0`, with `ω ∧ ω` as witness.
pub fn is_decomposable_codim2(s: &TwistedSection) -> Result<Check, PfaffError> {
    if s.q() != 2 {
        return Err(PfaffError::UnsupportedDegree {
            expected: "2",
            got: s.q(),
        });
    }
    let w = s.form.wedge(&s.form).unwrap();
    Ok(Check {
        holds: w.is_zero(),
        witness: w,
    })
}

/// Standard integrability criterion for a decomposable 2-form: for every
/// coordinate field `∂_j`, `i_{∂_j}ω ∧ ω = 0` and `i_{∂_j}ω ∧ dω = 0`.
/// Returns the first failing index and witness.
pub fn contraction_criterion(s: &TwistedSection) -> Result<Option<(usize, DiffForm)>, PfaffError> {
    if s.q() != 2 {
        return Err(PfaffError::UnsupportedDegree {
            expected: "2",
            got: s.q(),
        });
    }
    let nv = s.form.n_vars();
    let dw = s.form.exterior_derivative();
    for j in 0..nv {
        let a = s
            .form
            .interior_product(&VectorField::coordinate(nv, j))
            .unwrap();
        for other in [&s.form, &dw] {
            let w = a.wedge(other).unwrap();
            if !w.is_zero() {
                return Ok(Some((j, w)));
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FoliationFailure {
    NotSaturated { divisor: Poly },
    NotIntegrable { witness: DiffForm },
    NotDecomposable { witness: DiffForm },
    ContractionCriterion { index: usize, witness: DiffForm },
}

impl FoliationFailure {
    pub fn label(&self) -> &'static str {
        match self {
            FoliationFailure::NotSaturated { .. } => "not_saturated",
            FoliationFailure::NotIntegrable { .. } => "not_integrable",
            FoliationFailure::NotDecomposable { .. } => "not_decomposable",
            FoliationFailure::ContractionCriterion { .. } => "contraction_criterion",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoliationVerdict {
    pub degree: i64,
    pub failures: Vec<FoliationFailure>,
    /// Whether the q = 2 contraction criterion was evaluated.
    pub contraction_checked: bool,
}

impl FoliationVerdict {
    pub fn is_foliation(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Saturation plus integrability (q = 1) or decomposability (q = 2, with the
/// contraction criterion when `contraction` is set).
pub fn is_foliation(s: &TwistedSection, contraction: bool) -> Result<FoliationVerdict, PfaffError> {
    let mut failures = Vec::new();
    let sat = saturate(s);
    if sat.removed_anything() {
        failures.push(FoliationFailure::NotSaturated {
            divisor: sat.removed_divisor,
        });
    }
    let mut contraction_checked = false;
    match s.q() {
        1 => {
            let c = is_integrable_codim1(s)?;
            if !c.holds {
                failures.push(FoliationFailure::NotIntegrable { witness: c.witness });
            }
        }
        2 => {
            let c = is_decomposable_codim2(s)?;
            if !c.holds {
                failures.push(FoliationFailure::NotDecomposable { witness: c.witness });
            } else if contraction {
                contraction_checked = true;
                if let Some((index, witness)) = contraction_criterion(s)? {
                    failures.push(FoliationFailure::ContractionCriterion { index, witness });
                }
            }
        }
        q => {
            return Err(PfaffError::UnsupportedDegree {
                expected: "1 or 2",
                got: q,
            })
        }
    }
    Ok(FoliationVerdict {
        degree: foliation_degree(s),
        failures,
        contraction_checked,
    })
}

/// `i_R(dx0∧dx1 + dx2∧dx3 + …)` on `P^n`, `n` odd.
pub fn contact(n: usize) -> TwistedSection {
    assert!(n % 2 == 1, "contact form needs odd n");
    let nv = n + 1;
    let mut two = DiffForm::zero(nv, 2);
    for i in (0..nv).step_by(2) {
        two = &two + &DiffForm::basis_form(nv, &[i, i + 1]);
    }
    make_section(two.radial_contraction(), n).unwrap()
}

/// `i_R` of a constant form; a section whenever the result is nonzero.
pub fn radial_of_constant(n: usize, terms: &[&[usize]]) -> Result<TwistedSection, PfaffError> {
    let nv = n + 1;
    let q = terms.first().map_or(0, |t| t.len());
    let mut c = DiffForm::zero(nv, q);
    for t in terms {
        c = &c + &DiffForm::basis_form(nv, t);
    }
    make_section(c.radial_contraction(), n)
}

/// `P dQ − Q dP` for homogeneous `P`, `Q` of equal degree.
pub fn pencil(p: &Poly, q: &Poly) -> DiffForm {
    let dp = DiffForm::function(p.clone()).exterior_derivative();
    let dq = DiffForm::function(q.clone()).exterior_derivative();
    &dq.mul_poly(p) - &dp.mul_poly(q)
}

/// `Σ λ_i (Π_{j≠i} g_j) dg_i`; a section when `Σ λ_i deg g_i = 0`.
pub fn logarithmic(gs: &[Poly], lambdas: &[i64]) -> DiffForm {
    assert_eq!(gs.len(), lambdas.len());
    let nv = gs[0].n_vars();
    let mut out = DiffForm::zero(nv, 1);
    for (i, (g, l)) in gs.iter().zip(lambdas).enumerate() {
        let mut others = Poly::one(nv);
        for (j, h) in gs.iter().enumerate() {
            if j != i {
                others = &others * h;
            }
        }
        let dg = DiffForm::function(g.clone()).exterior_derivative();
        out = &out + &dg.mul_poly(&others).scale_int(*l);
    }
    out
}

/// `deg(g)·g·df − deg(f)·f·dg`.
pub fn omega_fg(f: &Poly, g: &Poly) -> DiffForm {
    let df = DiffForm::function(f.clone()).exterior_derivative();
    let dg = DiffForm::function(g.clone()).exterior_derivative();
    let a = df.mul_poly(g).scale_int(g.degree().unwrap_or(0) as i64);
    let b = dg.mul_poly(f).scale_int(f.degree().unwrap_or(0) as i64);
    &a - &b
}

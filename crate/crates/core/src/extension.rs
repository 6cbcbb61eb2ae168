//! Extension of foliations and distributions from a hypersurface to `P^n`.
//!
//! A foliation on `X` is always handed in as an ambient representative `β`.
//! When the restriction map is injective in the relevant degree, `β` is the
//! only candidate extension, so integrability of `β` itself settles the
//! question.

use thiserror::Error;

use crate::forms::DiffForm;
use crate::pfaff::{self, foliation_degree, TwistedSection};
use crate::restriction::{
    restriction_kernel, restriction_vanishes, Hypersurface, HypersurfaceError, RestrictionKernel,
    Smoothness, VanishingWitness,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtensionError {
    #[error("expected a section of form degree {expected}, got {got}")]
    FormDegree { expected: usize, got: usize },
    #[error("hypersurface lives in P^{x}, section in P^{s}")]
    DimensionMismatch { x: usize, s: usize },
    #[error("distributions need n >= 4, got {0}")]
    AmbientTooSmall(usize),
    #[error("the restriction of beta to X is not integrable")]
    RestrictedFormNotIntegrable,
    #[error("the restriction of beta to X is not decomposable")]
    RestrictedFormNotDecomposable,
    #[error("target dimension {target} must exceed {from}")]
    TargetDimension { from: usize, target: usize },
    #[error(transparent)]
    Hypersurface(#[from] HypersurfaceError),
}

/// `deg X > 2l + 1`.
pub fn theorem_a_hypothesis(x: &Hypersurface, l: i64) -> bool {
    x.degree() as i64 > 2 * l + 1
}

/// `l + 2 ≤ deg X`; meaningful for `n > 3`, `None` otherwise.
pub fn transversality_guaranteed(x: &Hypersurface, l: i64) -> Option<bool> {
    (x.n() > 3).then(|| l + 2 <= x.degree() as i64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutcomeKind {
    UniqueIntegrable,
    UniqueNonIntegrable,
    KernelCoset,
}

impl OutcomeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            OutcomeKind::UniqueIntegrable => "UniqueIntegrable",
            OutcomeKind::UniqueNonIntegrable => "UniqueNonIntegrable",
            OutcomeKind::KernelCoset => "KernelCoset",
        }
    }
}

/// Which sufficient conditions hold; `None` when a condition does not apply
/// to the ambient dimension or form degree.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Hypotheses {
    /// `d > 2l + 1` (foliations, `n > 3`; on surfaces the inequality says nothing).
    pub theorem_a: Option<bool>,
    /// `l + 2 ≤ d`, `n > 3` (foliations).
    pub transversality: Option<bool>,
    /// `k ≤ d` for `q = 1` on `P^3`.
    pub n3_remark: Option<bool>,
    /// `k − q + 1 ≤ d`.
    pub lemma_injectivity: bool,
    /// `n > 4` and `2k − 3 ≤ d` (distributions).
    pub distribution_theorem: Option<bool>,
    /// `n = 4`: distributions may fail to extend here.
    pub n4_regime: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonExtensionCertificate {
    pub hypersurface: Hypersurface,
    pub section: TwistedSection,
    pub kernel_dim: usize,
    pub ambient_dim: u64,
    /// `β∧dβ` (q = 1) or `β∧β` (q = 2).
    pub witness: DiffForm,
    pub restricted: VanishingWitness,
}

impl NonExtensionCertificate {
    /// Re-derives every claim from scratch.
    pub fn verify(&self) -> bool {
        let s = &self.section;
        let expected = match s.q() {
            1 => s.form().wedge(&s.form().exterior_derivative()).unwrap(),
            2 => s.form().wedge(s.form()).unwrap(),
            _ => return false,
        };
        if self.witness.is_zero() || expected != self.witness {
            return false;
        }
        let Ok(v) = restriction_vanishes(&self.hypersurface, &self.witness) else {
            return false;
        };
        v.vanishes
            && self.kernel_dim == 0
            && restriction_kernel(&self.hypersurface, s.q(), s.k()).dim() == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionOutcome {
    pub kind: OutcomeKind,
    pub candidate: TwistedSection,
    pub kernel: RestrictionKernel,
    /// Whether `β` itself is integrable (q = 1) or decomposable (q = 2).
    pub integrable: bool,
    pub witness: DiffForm,
    pub certificate: Option<NonExtensionCertificate>,
    pub hypotheses: Hypotheses,
    pub assumptions: Vec<String>,
}

fn assumptions(x: &Hypersurface) -> Vec<String> {
    let smooth = match x.smoothness() {
        Smoothness::Certified(rule) => format!("X smooth (certified by {rule} rule)"),
        Smoothness::SingularPoint(_) => "X has a sampled singular point".to_string(),
        Smoothness::NoSingularSample { .. } if x.smooth_asserted() => {
            "X smooth (asserted; no singular sample point found)".to_string()
        }
        Smoothness::NoSingularSample { .. } => {
            "X smoothness not asserted; no singular sample point found".to_string()
        }
    };
    vec![
        smooth,
        "foliations on X are given by ambient representatives (restriction map surjective)"
            .to_string(),
    ]
}

fn check_dims(x: &Hypersurface, beta: &TwistedSection, q: usize) -> Result<(), ExtensionError> {
    if beta.q() != q {
        return Err(ExtensionError::FormDegree {
            expected: q,
            got: beta.q(),
        });
    }
    if beta.n() != x.n() {
        return Err(ExtensionError::DimensionMismatch {
            x: x.n(),
            s: beta.n(),
        });
    }
    Ok(())
}

fn decide(
    x: &Hypersurface,
    beta: &TwistedSection,
    witness: DiffForm,
    restricted: VanishingWitness,
    hypotheses: Hypotheses,
) -> ExtensionOutcome {
    let kernel = restriction_kernel(x, beta.q(), beta.k());
    let integrable = witness.is_zero();
    let (kind, certificate) = if !kernel.injective() {
        (OutcomeKind::KernelCoset, None)
    } else if integrable {
        (OutcomeKind::UniqueIntegrable, None)
    } else {
        let cert = NonExtensionCertificate {
            hypersurface: x.clone(),
            section: beta.clone(),
            kernel_dim: 0,
            ambient_dim: kernel.ambient_dim,
            witness: witness.clone(),
            restricted,
        };
        (OutcomeKind::UniqueNonIntegrable, Some(cert))
    };
    ExtensionOutcome {
        kind,
        candidate: beta.clone(),
        kernel,
        integrable,
        witness,
        certificate,
        hypotheses,
        assumptions: assumptions(x),
    }
}

/// Extension of the codimension-one foliation on `X` represented by `beta`.
pub fn extend_codim1(x: &Hypersurface, beta: &TwistedSection) -> Result<ExtensionOutcome, ExtensionError> {
    check_dims(x, beta, 1)?;
    let w = pfaff::is_integrable_codim1(beta).unwrap().witness;
    let v = restriction_vanishes(x, &w)?;
    let Some(restricted) = v.witness.filter(|_| v.vanishes) else {
        return Err(ExtensionError::RestrictedFormNotIntegrable);
    };
    let l = foliation_degree(beta);
    let d = x.degree() as i64;
    let hypotheses = Hypotheses {
        theorem_a: (x.n() > 3).then(|| theorem_a_hypothesis(x, l)),
        transversality: transversality_guaranteed(x, l),
        n3_remark: (x.n() == 3).then_some(beta.k() <= d),
        lemma_injectivity: beta.k() <= d,
        distribution_theorem: None,
        n4_regime: None,
    };
    Ok(decide(x, beta, w, restricted, hypotheses))
}

/// Extension of the codimension-two distribution on `X` represented by `beta`.
pub fn extend_distribution_codim2(
    x: &Hypersurface,
    beta: &TwistedSection,
) -> Result<ExtensionOutcome, ExtensionError> {
    check_dims(x, beta, 2)?;
    if x.n() < 4 {
        return Err(ExtensionError::AmbientTooSmall(x.n()));
    }
    let w = pfaff::is_decomposable_codim2(beta).unwrap().witness;
    let v = restriction_vanishes(x, &w)?;
    let Some(restricted) = v.witness.filter(|_| v.vanishes) else {
        return Err(ExtensionError::RestrictedFormNotDecomposable);
    };
    let d = x.degree() as i64;
    let k = beta.k();
    let hypotheses = Hypotheses {
        theorem_a: None,
        transversality: None,
        n3_remark: None,
        lemma_injectivity: k - 1 <= d,
        distribution_theorem: Some(x.n() > 4 && 2 * k - 3 <= d),
        n4_regime: Some(x.n() == 4),
    };
    let mut out = decide(x, beta, w, restricted, hypotheses);
    if x.n() == 4 && k == 3 {
        out.assumptions.push(
            "n = 4, k = 3: injectivity needs only d >= 2, the shipped non-extension examples use d >= 3"
                .to_string(),
        );
    }
    Ok(out)
}

/// Pullback of a section on `P^{n'}` to `P^n` (`n > n'`) along the linear
/// projection forgetting the trailing coordinates.
pub fn trivial_extension(omega: &TwistedSection, n: usize) -> Result<TwistedSection, ExtensionError> {
    if n <= omega.n() {
        return Err(ExtensionError::TargetDimension {
            from: omega.n(),
            target: n,
        });
    }
    Ok(pfaff::make_section(omega.form().with_n_vars(n + 1), n).expect("pullback stays a section"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoundtripReport {
    /// Hypotheses that fail; the round trip is only asserted when empty.
    pub violations: Vec<String>,
    pub kernel_dim: Option<usize>,
    pub recovered: Option<TwistedSection>,
    pub exact: Option<bool>,
}

/// Restricts an integrable saturated `alpha` to `X` and extends it back.
pub fn theorem_c_roundtrip(x: &Hypersurface, alpha: &TwistedSection) -> Result<RoundtripReport, ExtensionError> {
    check_dims(x, alpha, 1)?;
    let mut violations = Vec::new();
    let l = foliation_degree(alpha);
    if x.n() <= 3 {
        violations.push(format!("n = {} is not > 3", x.n()));
    }
    if !theorem_a_hypothesis(x, l) {
        violations.push(format!("d = {} is not > 2l + 1 = {}", x.degree(), 2 * l + 1));
    }
    if transversality_guaranteed(x, l) == Some(false) {
        violations.push("transversality not guaranteed".to_string());
    }
    if !pfaff::is_integrable_codim1(alpha).unwrap().holds {
        violations.push("alpha is not integrable".to_string());
    }
    if pfaff::saturate(alpha).removed_anything() {
        violations.push("alpha is not saturated".to_string());
    }
    if !violations.is_empty() {
        return Ok(RoundtripReport {
            violations,
            kernel_dim: None,
            recovered: None,
            exact: None,
        });
    }
    let out = extend_codim1(x, alpha)?;
    let exact = out.kind == OutcomeKind::UniqueIntegrable && out.candidate == *alpha;
    Ok(RoundtripReport {
        violations,
        kernel_dim: Some(out.kernel.dim()),
        recovered: Some(out.candidate),
        exact: Some(exact),
    })
}

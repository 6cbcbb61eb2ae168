//! Subcommands: argument definitions and report construction.

use std::path::PathBuf;

use clap::{Args, Subcommand};
use folex::extension::{self, ExtensionOutcome, Hypotheses};
use folex::morse::{self, MorseVerdict, ProbePoint};
use folex::pfaff::{self, make_section, FoliationFailure, TwistedSection};
use folex::restriction::{self, Hypersurface, PoincareVerdict, Smoothness, VanishingWitness};
use folex::text;
use folex::Rational;
use serde_json::{Map, Value};

use crate::report::{self, report};

/// A usage or input error (exit status 2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError(pub String);

impl<E: std::fmt::Display> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError(e.to_string())
    }
}

type Out = Result<Value, CliError>;

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Dimension of H^0(P^n, Ω^q(k)): closed formula and direct kernel
    Dims(DimsArgs),
    /// Kernel of the restriction map of q-forms of twist k to X
    Kernel(KernelArgs),
    /// Is X invariant by ω (df∧ω ≡ 0 mod f)?
    Invariant(PairArgs),
    /// Does ω restrict to zero on X? Reports a witness ω = f·β + df∧γ
    RestrictZero(PairArgs),
    /// Remove the common divisor of the coefficients
    Saturate(FormArgs),
    /// ω∧dω = 0 for a 1-form section, plus the foliation verdict
    Integrable(FormArgs),
    /// ω∧ω = 0 for a 2-form section, plus the foliation verdict
    Decomposable(DecomposableArgs),
    /// Extend the codimension-one foliation on X given by β
    Extend(ExtendArgs),
    /// Extend the codimension-two distribution on X given by β
    ExtendDist(ExtendArgs),
    /// Emit and verify a non-extension certificate
    CertifyNonextension(ExtendArgs),
    /// Pull a section on P^n back to P^m (m > n) along a linear projection
    TrivialExtend(TrivialArgs),
    /// Restrict an integrable section to X and extend it back
    Roundtrip(RoundtripArgs),
    /// If X is invariant, check deg X ≤ k − q
    Poincare(PairArgs),
    /// Value of the Gauss map at a point of X
    Gauss(PointArgs),
    /// Rank of the second fundamental form at a point of X
    SffRank(PointArgs),
    /// Classify a critical point of a first integral restricted to X
    Morse(MorseArgs),
    /// Replay the example corpus
    Corpus(CorpusArgs),
}

#[derive(Args, Debug, Clone)]
pub struct DimsArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub q: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub k: i64,
}

/// Hypersurface: `fermat:<n>:<d>`, `quadric:<n>` or a homogeneous polynomial.
#[derive(Args, Debug, Clone)]
pub struct HyperArgs {
    #[arg(long, value_name = "SPEC")]
    pub f: String,
    /// Ambient dimension (inferred from the specifier when omitted)
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct KernelArgs {
    #[command(flatten)]
    pub x: HyperArgs,
    #[arg(long)]
    pub q: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub k: i64,
}

#[derive(Args, Debug, Clone)]
pub struct PairArgs {
    #[command(flatten)]
    pub x: HyperArgs,
    /// Section: form text, `contact`, or `n=.. q=.. k=..` header plus form
    #[arg(long, allow_hyphen_values = true)]
    pub omega: String,
}

#[derive(Args, Debug, Clone)]
pub struct FormArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub omega: String,
    /// Ambient dimension (inferred from the largest variable index if omitted)
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct DecomposableArgs {
    #[command(flatten)]
    pub form: FormArgs,
    /// Also run the contraction integrability criterion
    #[arg(long)]
    pub contraction: bool,
}

#[derive(Args, Debug, Clone)]
pub struct ExtendArgs {
    #[command(flatten)]
    pub x: HyperArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: String,
}

#[derive(Args, Debug, Clone)]
pub struct TrivialArgs {
    #[command(flatten)]
    pub form: FormArgs,
    /// Target dimension
    #[arg(long)]
    pub to: usize,
}

#[derive(Args, Debug, Clone)]
pub struct RoundtripArgs {
    #[command(flatten)]
    pub x: HyperArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: String,
}

#[derive(Args, Debug, Clone)]
pub struct PointArgs {
    #[command(flatten)]
    pub x: HyperArgs,
    /// Homogeneous coordinates, comma separated (e.g. `1,-1,0,0`)
    #[arg(long, allow_hyphen_values = true)]
    pub point: String,
}

#[derive(Args, Debug, Clone)]
pub struct MorseArgs {
    #[command(flatten)]
    pub x: HyperArgs,
    /// First integral in the homogeneous variable names, chart variable absent
    #[arg(long, allow_hyphen_values = true)]
    pub g: String,
    /// Index of the variable set to 1
    #[arg(long, default_value_t = 0)]
    pub chart: usize,
    /// Affine coordinates of the point (default: chart origin)
    #[arg(long, allow_hyphen_values = true)]
    pub point: Option<String>,
    /// Also compute the λ-family determinant with pivot variable x<K>
    #[arg(long, value_name = "K")]
    pub lambda_family: Option<usize>,
    /// λ values at which to cross-check the family against a direct computation
    #[arg(long, allow_hyphen_values = true, requires = "lambda_family")]
    pub check_lambda: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct CorpusArgs {
    /// Directory of case files to run instead of the shipped corpus
    #[arg(long)]
    pub dir: Option<PathBuf>,
    /// Include per-case wall-clock timings (breaks byte-identical output)
    #[arg(long)]
    pub timings: bool,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Dims(_) => "dims",
            Command::Kernel(_) => "kernel",
            Command::Invariant(_) => "invariant",
            Command::RestrictZero(_) => "restrict-zero",
            Command::Saturate(_) => "saturate",
            Command::Integrable(_) => "integrable",
            Command::Decomposable(_) => "decomposable",
            Command::Extend(_) => "extend",
            Command::ExtendDist(_) => "extend-dist",
            Command::CertifyNonextension(_) => "certify-nonextension",
            Command::TrivialExtend(_) => "trivial-extend",
            Command::Roundtrip(_) => "roundtrip",
            Command::Poincare(_) => "poincare",
            Command::Gauss(_) => "gauss",
            Command::SffRank(_) => "sff-rank",
            Command::Morse(_) => "morse",
            Command::Corpus(_) => "corpus",
        }
    }
}

/// Runs every command except `corpus`.
pub fn execute(cmd: &Command) -> Out {
    let name = cmd.name();
    match cmd {
        Command::Dims(a) => dims(name, a),
        Command::Kernel(a) => kernel(name, a),
        Command::Invariant(a) => invariant(name, a),
        Command::RestrictZero(a) => restrict_zero(name, a),
        Command::Saturate(a) => saturate(name, a),
        Command::Integrable(a) => integrable(name, a),
        Command::Decomposable(a) => decomposable(name, a),
        Command::Extend(a) => extend(name, a, 1),
        Command::ExtendDist(a) => extend(name, a, 2),
        Command::CertifyNonextension(a) => certify(name, a),
        Command::TrivialExtend(a) => trivial(name, a),
        Command::Roundtrip(a) => roundtrip(name, a),
        Command::Poincare(a) => poincare(name, a),
        Command::Gauss(a) => gauss(name, a),
        Command::SffRank(a) => sff(name, a),
        Command::Morse(a) => morse_cmd(name, a),
        Command::Corpus(_) => Err(CliError("corpus cases cannot nest".into())),
    }
}

fn hyper(a: &HyperArgs) -> Result<Hypersurface, CliError> {
    Ok(restriction::parse_hypersurface(a.f.trim(), a.n)?)
}

/// Parses a section on `P^n`.
fn section(textual: &str, n: usize) -> Result<TwistedSection, CliError> {
    let t = textual.trim();
    if t == "contact" {
        if n % 2 == 0 {
            return Err(CliError(format!("contact form needs odd n, got {n}")));
        }
        return Ok(pfaff::contact(n));
    }
    if t.starts_with("n=") {
        let s = TwistedSection::parse(t)?;
        if s.n() != n {
            return Err(CliError(format!("section lives on P^{}, expected P^{n}", s.n())));
        }
        return Ok(s);
    }
    Ok(make_section(text::parse_form(t, n + 1)?, n)?)
}

fn infer_n(textual: &str, n: Option<usize>) -> Result<usize, CliError> {
    let t = textual.trim();
    if let Some(n) = n {
        return Ok(n);
    }
    if let Some(rest) = t.strip_prefix("n=") {
        let digits: String = rest.chars().take_while(char::is_ascii_digit).collect();
        return digits.parse().map_err(|_| CliError("bad section header".into()));
    }
    text::max_variable_index(t)
        .map(|m| m.max(1))
        .ok_or_else(|| CliError("cannot infer n; pass --n".into()))
}

fn section_json(s: &TwistedSection) -> Value {
    serde_json::json!({
        "n": s.n(),
        "q": s.q(),
        "k": s.k(),
        "form": s.form().to_string(),
    })
}

fn hyper_json(m: &mut Map<String, Value>, x: &Hypersurface) {
    m.insert("n".into(), Value::from(x.n()));
    m.insert("d".into(), Value::from(x.degree()));
    m.insert("f".into(), report::poly(x.f()));
    let smooth = match x.smoothness() {
        Smoothness::Certified(rule) => format!("certified:{rule}"),
        Smoothness::NoSingularSample { .. } => "sampled".to_string(),
        Smoothness::SingularPoint(_) => "singular_point_found".to_string(),
    };
    m.insert("smoothness".into(), Value::from(smooth));
    m.insert("smooth_asserted".into(), Value::from(x.smooth_asserted()));
}

fn verdict(m: &mut Map<String, Value>, v: &str) {
    m.insert("verdict".into(), Value::from(v));
}

fn points(text_: &str) -> Result<Vec<Rational>, CliError> {
    text_
        .split(',')
        .map(|s| text::parse_rational(s).map_err(CliError::from))
        .collect()
}

fn dims(name: &str, a: &DimsArgs) -> Out {
    let bott = restriction::h0_bott(a.n, a.q, a.k);
    let direct = restriction::h0_direct(a.n, a.q, a.k);
    let mut m = report(name);
    m.insert("n".into(), a.n.into());
    m.insert("q".into(), a.q.into());
    m.insert("k".into(), a.k.into());
    m.insert("bott".into(), bott.into());
    m.insert("direct".into(), direct.into());
    verdict(&mut m, if bott == direct { "agree" } else { "disagree" });
    Ok(m.into())
}

fn kernel(name: &str, a: &KernelArgs) -> Out {
    let x = hyper(&a.x)?;
    if a.q == 0 || a.q >= x.n() {
        return Err(CliError(format!("q must satisfy 1 <= q <= n-1, got {}", a.q)));
    }
    let k = restriction::restriction_kernel(&x, a.q, a.k);
    let mut m = report(name);
    hyper_json(&mut m, &x);
    m.insert("q".into(), a.q.into());
    m.insert("k".into(), a.k.into());
    m.insert("kernel_dim".into(), k.dim().into());
    m.insert("ambient_dim".into(), k.ambient_dim.into());
    m.insert("injective".into(), k.injective().into());
    m.insert(
        "injectivity_bound".into(),
        (a.k - a.q as i64 + 1 <= x.degree() as i64).into(),
    );
    m.insert(
        "basis".into(),
        Value::Array(k.basis.iter().map(|s| report::form(s.form())).collect()),
    );
    verdict(&mut m, if k.injective() { "injective" } else { "not_injective" });
    Ok(m.into())
}

fn invariant(name: &str, a: &PairArgs) -> Out {
    let x = hyper(&a.x)?;
    let s = section(&a.omega, x.n())?;
    let inv = restriction::is_invariant(&x, s.form())?;
    let mut m = report(name);
    hyper_json(&mut m, &x);
    m.insert("section".into(), section_json(&s));
    m.insert("invariant".into(), inv.into());
    verdict(&mut m, if inv { "invariant" } else { "not_invariant" });
    Ok(m.into())
}

fn witness_json(w: &Option<VanishingWitness>) -> Value {
    match w {
        None => Value::Null,
        Some(VanishingWitness::Membership { beta, gamma }) => serde_json::json!({
            "kind": "membership",
            "beta": beta.to_string(),
            "gamma": gamma.to_string(),
        }),
        Some(VanishingWitness::ExceedsDimension) => serde_json::json!({"kind": "exceeds_dimension"}),
    }
}

fn restrict_zero(name: &str, a: &PairArgs) -> Out {
    let x = hyper(&a.x)?;
    let s = section(&a.omega, x.n())?;
    let v = restriction::restriction_vanishes(&x, s.form())?;
    let mut m = report(name);
    hyper_json(&mut m, &x);
    m.insert("section".into(), section_json(&s));
    m.insert("vanishes".into(), v.vanishes.into());
    m.insert("witness".into(), witness_json(&v.witness));
    verdict(&mut m, if v.vanishes { "vanishes" } else { "does_not_vanish" });
    Ok(m.into())
}

fn saturate(name: &str, a: &FormArgs) -> Out {
    let n = infer_n(&a.omega, a.n)?;
    let s = section(&a.omega, n)?;
    let r = pfaff::saturate(&s);
    let mut m = report(name);
    m.insert("section".into(), section_json(&s));
    m.insert("removed_divisor".into(), report::poly(&r.removed_divisor));
    m.insert("twist_drop".into(), r.twist_drop.into());
    m.insert("saturated".into(), section_json(&r.saturated));
    verdict(&mut m, if r.removed_anything() { "divisor_removed" } else { "saturated" });
    Ok(m.into())
}

fn failures_json(fs: &[FoliationFailure]) -> Value {
    Value::Array(
        fs.iter()
            .map(|f| {
                let detail = match f {
                    FoliationFailure::NotSaturated { divisor } => divisor.to_string(),
                    FoliationFailure::NotIntegrable { witness }
                    | FoliationFailure::NotDecomposable { witness } => witness.to_string(),
                    FoliationFailure::ContractionCriterion { index, witness } => {
                        format!("d/dx{index}: {witness}")
                    }
                };
                serde_json::json!({"failure": f.label(), "detail": detail})
            })
            .collect(),
    )
}

fn integrable(name: &str, a: &FormArgs) -> Out {
    let n = infer_n(&a.omega, a.n)?;
    let s = section(&a.omega, n)?;
    let c = pfaff::is_integrable_codim1(&s)?;
    let fol = pfaff::is_foliation(&s, false)?;
    let mut m = report(name);
    m.insert("section".into(), section_json(&s));
    m.insert("degree".into(), s.foliation_degree().into());
    m.insert("integrable".into(), c.holds.into());
    m.insert("witness".into(), report::form(&c.witness));
    m.insert("foliation".into(), fol.is_foliation().into());
    m.insert("failures".into(), failures_json(&fol.failures));
    verdict(&mut m, if c.holds { "integrable" } else { "not_integrable" });
    Ok(m.into())
}

fn decomposable(name: &str, a: &DecomposableArgs) -> Out {
    let n = infer_n(&a.form.omega, a.form.n)?;
    let s = section(&a.form.omega, n)?;
    let c = pfaff::is_decomposable_codim2(&s)?;
    let fol = pfaff::is_foliation(&s, a.contraction)?;
    let mut m = report(name);
    m.insert("section".into(), section_json(&s));
    m.insert("degree".into(), s.foliation_degree().into());
    m.insert("decomposable".into(), c.holds.into());
    m.insert("witness".into(), report::form(&c.witness));
    m.insert("foliation".into(), fol.is_foliation().into());
    m.insert("failures".into(), failures_json(&fol.failures));
    if fol.contraction_checked {
        m.insert(
            "contraction_criterion".into(),
            Value::from("standard global criterion i_Xi(omega)^omega = i_Xi(omega)^d(omega) = 0, beyond the local definition"),
        );
    }
    verdict(&mut m, if c.holds { "decomposable" } else { "not_decomposable" });
    Ok(m.into())
}

fn hypotheses_json(h: &Hypotheses) -> Value {
    let mut m = Map::new();
    let opt = |v: Option<bool>| v.map_or(Value::Null, Value::from);
    m.insert("theorem_a".into(), opt(h.theorem_a));
    m.insert("transversality".into(), opt(h.transversality));
    m.insert("n3_remark".into(), opt(h.n3_remark));
    m.insert("lemma_injectivity".into(), h.lemma_injectivity.into());
    if h.distribution_theorem.is_some() {
        m.insert("distribution_theorem".into(), opt(h.distribution_theorem));
        m.insert("n4_regime".into(), opt(h.n4_regime));
    }
    m.into()
}

fn run_extension(x: &Hypersurface, beta: &TwistedSection, q: usize) -> Result<ExtensionOutcome, CliError> {
    Ok(match q {
        1 => extension::extend_codim1(x, beta)?,
        _ => extension::extend_distribution_codim2(x, beta)?,
    })
}

fn outcome_json(m: &mut Map<String, Value>, out: &ExtensionOutcome) {
    m.insert("kernel_dim".into(), out.kernel.dim().into());
    m.insert("ambient_dim".into(), out.kernel.ambient_dim.into());
    m.insert(
        "kernel_basis".into(),
        Value::Array(out.kernel.basis.iter().map(|s| report::form(s.form())).collect()),
    );
    m.insert("integrable".into(), out.integrable.into());
    m.insert("witness".into(), report::form(&out.witness));
    m.insert(
        "assumptions".into(),
        Value::Array(out.assumptions.iter().map(|s| Value::from(s.as_str())).collect()),
    );
    m.insert("hypotheses".into(), hypotheses_json(&out.hypotheses));
    m.insert(
        "certificate_valid".into(),
        out.certificate.as_ref().map_or(Value::Null, |c| c.verify().into()),
    );
}

fn extend(name: &str, a: &ExtendArgs, q: usize) -> Out {
    let x = hyper(&a.x)?;
    let beta = section(&a.beta, x.n())?;
    let out = run_extension(&x, &beta, q)?;
    let mut m = report(name);
    hyper_json(&mut m, &x);
    m.insert("section".into(), section_json(&beta));
    outcome_json(&mut m, &out);
    verdict(&mut m, out.kind.as_str());
    Ok(m.into())
}

fn certify(name: &str, a: &ExtendArgs) -> Out {
    let x = hyper(&a.x)?;
    let beta = section(&a.beta, x.n())?;
    let q = beta.q();
    if q != 1 && q != 2 {
        return Err(CliError(format!("certificates cover q = 1 or 2, got {q}")));
    }
    let out = run_extension(&x, &beta, q)?;
    let mut m = report(name);
    hyper_json(&mut m, &x);
    m.insert("section".into(), section_json(&beta));
    m.insert("outcome".into(), out.kind.as_str().into());
    let v = match &out.certificate {
        Some(c) => {
            let valid = c.verify();
            m.insert(
                "certificate".into(),
                serde_json::json!({
                    "kernel_dim": c.kernel_dim,
                    "ambient_dim": c.ambient_dim,
                    "witness": c.witness.to_string(),
                    "restricted_vanishing": witness_json(&Some(c.restricted.clone())),
                    "valid": valid,
                }),
            );
            if valid {
                "certified"
            } else {
                "invalid_certificate"
            }
        }
        None => {
            m.insert("certificate".into(), Value::Null);
            "no_certificate"
        }
    };
    verdict(&mut m, v);
    Ok(m.into())
}

fn trivial(name: &str, a: &TrivialArgs) -> Out {
    let n = infer_n(&a.form.omega, a.form.n)?;
    let s = section(&a.form.omega, n)?;
    let t = extension::trivial_extension(&s, a.to)?;
    let mut back = t.form().clone();
    for var in (n + 1..=a.to).rev() {
        back = back.restrict_to_coordinate_hyperplane(var);
    }
    let restricts_back = back == *s.form();
    let int_in = (s.q() == 1).then(|| pfaff::is_integrable_codim1(&s).unwrap().holds);
    let int_out = (t.q() == 1).then(|| pfaff::is_integrable_codim1(&t).unwrap().holds);
    let mut m = report(name);
    m.insert("section".into(), section_json(&s));
    m.insert("extended".into(), section_json(&t));
    m.insert("restricts_back".into(), restricts_back.into());
    m.insert("integrable_in".into(), int_in.map_or(Value::Null, Value::from));
    m.insert("integrable_out".into(), int_out.map_or(Value::Null, Value::from));
    verdict(&mut m, if restricts_back && int_in == int_out { "ok" } else { "mismatch" });
    Ok(m.into())
}

fn roundtrip(name: &str, a: &RoundtripArgs) -> Out {
    let x = hyper(&a.x)?;
    let alpha = section(&a.alpha, x.n())?;
    let r = extension::theorem_c_roundtrip(&x, &alpha)?;
    let mut m = report(name);
    hyper_json(&mut m, &x);
    m.insert("section".into(), section_json(&alpha));
    m.insert("degree".into(), alpha.foliation_degree().into());
    m.insert(
        "violations".into(),
        Value::Array(r.violations.iter().map(|s| Value::from(s.as_str())).collect()),
    );
    m.insert("kernel_dim".into(), r.kernel_dim.map_or(Value::Null, Value::from));
    m.insert(
        "recovered".into(),
        r.recovered.as_ref().map_or(Value::Null, section_json),
    );
    m.insert("exact".into(), r.exact.map_or(Value::Null, Value::from));
    let v = match r.exact {
        None => "hypothesis_failure",
        Some(true) => "recovered",
        Some(false) => "mismatch",
    };
    verdict(&mut m, v);
    Ok(m.into())
}

fn poincare(name: &str, a: &PairArgs) -> Out {
    let x = hyper(&a.x)?;
    let s = section(&a.omega, x.n())?;
    let r = restriction::poincare_bound_check(&x, &s)?;
    let mut m = report(name);
    hyper_json(&mut m, &x);
    m.insert("section".into(), section_json(&s));
    m.insert("invariant".into(), r.invariant.into());
    m.insert("bound".into(), r.bound.into());
    let v = match r.verdict {
        PoincareVerdict::Consistent => "Consistent",
        PoincareVerdict::InconsistencyWitness => "InconsistencyWitness",
    };
    verdict(&mut m, v);
    Ok(m.into())
}

fn gauss(name: &str, a: &PointArgs) -> Out {
    let x = hyper(&a.x)?;
    let p = points(&a.point)?;
    let g = morse::gauss_map_value(&x, &p)?;
    let mut m = report(name);
    hyper_json(&mut m, &x);
    m.insert(
        "point".into(),
        Value::Array(p.iter().map(report::rational).collect()),
    );
    m.insert(
        "gauss".into(),
        Value::Array(g.iter().map(|v| report::integer_text(v.to_string())).collect()),
    );
    verdict(&mut m, "regular");
    Ok(m.into())
}

fn sff(name: &str, a: &PointArgs) -> Out {
    let x = hyper(&a.x)?;
    let p = points(&a.point)?;
    let r = morse::second_fundamental_rank(&x, &p)?;
    let mut m = report(name);
    hyper_json(&mut m, &x);
    m.insert(
        "point".into(),
        Value::Array(p.iter().map(report::rational).collect()),
    );
    m.insert("rank".into(), r.into());
    verdict(&mut m, if r + 1 == x.n() { "maximal" } else { "degenerate" });
    Ok(m.into())
}

fn morse_cmd(name: &str, a: &MorseArgs) -> Out {
    let x = hyper(&a.x)?;
    let p = match &a.point {
        Some(t) => ProbePoint::new(&x, a.chart, points(t)?)?,
        None => ProbePoint::origin(&x, a.chart)?,
    };
    let g = p.to_chart(&text::parse_poly(a.g.trim(), x.n() + 1)?)?;
    let r = morse::morse_classify(&x, &g, &p)?;
    let mut m = report(name);
    hyper_json(&mut m, &x);
    m.insert("chart".into(), a.chart.into());
    m.insert(
        "point".into(),
        Value::Array(p.projective().iter().map(report::rational).collect()),
    );
    m.insert("critical".into(), (r.verdict != MorseVerdict::NotCritical).into());
    m.insert(
        "multiplier".into(),
        r.multiplier.as_ref().map_or(Value::Null, report::rational),
    );
    m.insert(
        "hessian".into(),
        r.restricted_hessian.as_ref().map_or(Value::Null, report::matrix),
    );
    m.insert("det".into(), r.determinant.as_ref().map_or(Value::Null, report::rational));
    let (mut lp, mut bad) = (Value::Null, Value::Null);
    if let Some(k) = a.lambda_family {
        let fam = morse::lambda_family(&x, &g, &p, k)?;
        lp = report::lambda_poly(&fam.det_poly);
        bad = Value::Array(fam.bad_lambdas.iter().map(report::rational).collect());
        m.insert("lambda_degree".into(), fam.degree.map_or(Value::Null, Value::from));
        if let Some(vals) = &a.check_lambda {
            let mut checks = Vec::new();
            for l in points(vals)? {
                let family = fam.det_poly.eval(std::slice::from_ref(&l));
                let gl = morse::lambda_transform(&g, &p, k, &l)?;
                let direct = morse::morse_classify(&x, &gl, &p)?.determinant;
                checks.push(serde_json::json!({
                    "lambda": report::rational(&l),
                    "family": report::rational(&family),
                    "direct": direct.as_ref().map_or(Value::Null, report::rational),
                    "agree": direct.as_ref() == Some(&family),
                }));
            }
            m.insert("lambda_checks".into(), Value::Array(checks));
        }
    }
    m.insert("lambda_poly".into(), lp);
    m.insert("bad_lambdas".into(), bad);
    verdict(&mut m, r.verdict.as_str());
    Ok(m.into())
}

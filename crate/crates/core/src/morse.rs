//! Pointwise geometry of a hypersurface: Gauss map, second fundamental form
//! rank, and Morse classification of first integrals restricted to `X`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::linalg::{self, RatMatrix};
use crate::poly::Poly;
use crate::restriction::Hypersurface;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorseError {
    #[error("point is not on the hypersurface")]
    NotOnHypersurface,
    #[error("the gradient of f vanishes at the point")]
    SingularPoint,
    #[error("point has {got} coordinates, expected {expected}")]
    PointLength { expected: usize, got: usize },
    #[error("the zero vector is not a projective point")]
    ZeroPoint,
    #[error("chart index {chart} out of range for P^{n}")]
    ChartOutOfRange { chart: usize, n: usize },
    #[error("first integral uses the chart variable x{0}")]
    ChartMismatch(usize),
    #[error("first integral has {got} variables, expected {expected}")]
    IntegralVariables { expected: usize, got: usize },
    #[error("the linear part of the first integral vanishes at the point")]
    ZeroLinearPart,
    #[error("pivot x{0} has zero linear coefficient or is the chart variable")]
    BadPivot(usize),
}

fn check_projective(x: &Hypersurface, p: &[Rational]) -> Result<(), MorseError> {
    let nv = x.n() + 1;
    if p.len() != nv {
        return Err(MorseError::PointLength {
            expected: nv,
            got: p.len(),
        });
    }
    if p.iter().all(Zero::is_zero) {
        return Err(MorseError::ZeroPoint);
    }
    if !x.f().eval(p).is_zero() {
        return Err(MorseError::NotOnHypersurface);
    }
    Ok(())
}

fn eval_all(ps: &[Poly], p: &[Rational]) -> Vec<Rational> {
    ps.iter().map(|g| g.eval(p)).collect()
}

/// Scales a nonzero rational vector to a primitive integer vector whose first
/// nonzero entry is positive.
pub fn primitive_integer_vector(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |a, c| a.lcm(c.denom()));
    let ints: Vec<BigInt> = v.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |a, c| a.gcd(c));
    if g.is_zero() {
        return ints;
    }
    let sign = if ints.iter().find(|c| !c.is_zero()).unwrap().is_negative() {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    ints.into_iter().map(|c| c / &g * &sign).collect()
}

/// `[∂f/∂x_0(p) : … : ∂f/∂x_n(p)]` as a primitive integer vector.
pub fn gauss_map_value(x: &Hypersurface, p: &[Rational]) -> Result<Vec<BigInt>, MorseError> {
    check_projective(x, p)?;
    let g = eval_all(x.gradient(), p);
    if g.iter().all(Zero::is_zero) {
        return Err(MorseError::SingularPoint);
    }
    Ok(primitive_integer_vector(&g))
}

fn hessian_at(f: &Poly, p: &[Rational]) -> RatMatrix {
    let nv = f.n_vars();
    let mut h = RatMatrix::zeros(nv, nv);
    for i in 0..nv {
        let fi = f.partial_derivative(i);
        for j in i..nv {
            let v = fi.partial_derivative(j).eval(p);
            h.set(i, j, v.clone());
            h.set(j, i, v);
        }
    }
    h
}

/// Canonical basis of `{v : g·v = 0}`, as the columns of a matrix.
fn kernel_basis(g: &[Rational]) -> RatMatrix {
    let row = RatMatrix::from_rows(g.len(), vec![g.to_vec()]).unwrap();
    let basis = linalg::nullspace(&row);
    RatMatrix::from_columns(g.len(), &basis).unwrap()
}

fn restrict(h: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    b.transpose().mul(h).unwrap().mul(b).unwrap()
}

/// Rank of `Hess f(p)` on `ker df(p)`. The radial direction lies in the
/// radical, so this is the rank on `ker df(p) / ⟨p⟩`.
pub fn second_fundamental_rank(x: &Hypersurface, p: &[Rational]) -> Result<usize, MorseError> {
    check_projective(x, p)?;
    let g = eval_all(x.gradient(), p);
    if g.iter().all(Zero::is_zero) {
        return Err(MorseError::SingularPoint);
    }
    let h = hessian_at(x.f(), p);
    // Euler: Hess f(p)·p = (d − 1)·∇f(p)
    let hp = h.mul_vec(p).unwrap();
    let dm1 = Rational::from_integer((x.degree() as i64 - 1).into());
    assert!(
        hp.iter().zip(&g).all(|(a, b)| *a == &dm1 * b),
        "Euler identity on second partials"
    );
    Ok(linalg::rank(&restrict(&h, &kernel_basis(&g))))
}

/// A rational point of `X` in the affine chart `{x_chart = 1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbePoint {
    chart: usize,
    coords: Vec<Rational>,
    f_hat: Poly,
    grad: Vec<Rational>,
}

impl ProbePoint {
    /// `coords` are the affine coordinates `x_i / x_chart`, `i ≠ chart`.
    pub fn new(x: &Hypersurface, chart: usize, coords: Vec<Rational>) -> Result<Self, MorseError> {
        let n = x.n();
        if chart > n {
            return Err(MorseError::ChartOutOfRange { chart, n });
        }
        if coords.len() != n {
            return Err(MorseError::PointLength {
                expected: n,
                got: coords.len(),
            });
        }
        let f_hat = x.f().dehomogenize(chart);
        if !f_hat.eval(&coords).is_zero() {
            return Err(MorseError::NotOnHypersurface);
        }
        let grad = eval_all(&f_hat.gradient(), &coords);
        if grad.iter().all(Zero::is_zero) {
            return Err(MorseError::SingularPoint);
        }
        Ok(ProbePoint {
            chart,
            coords,
            f_hat,
            grad,
        })
    }

    /// The chart origin.
    pub fn origin(x: &Hypersurface, chart: usize) -> Result<Self, MorseError> {
        Self::new(x, chart, vec![Rational::zero(); x.n()])
    }

    pub fn chart(&self) -> usize {
        self.chart
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// Homogeneous coordinates of the point.
    pub fn projective(&self) -> Vec<Rational> {
        let mut out = self.coords.clone();
        out.insert(self.chart, Rational::one());
        out
    }

    /// Reads a polynomial written in the homogeneous variable names as a
    /// chart polynomial; the chart variable must not occur.
    pub fn to_chart(&self, g: &Poly) -> Result<Poly, MorseError> {
        if g.n_vars() != self.coords.len() + 1 {
            return Err(MorseError::IntegralVariables {
                expected: self.coords.len() + 1,
                got: g.n_vars(),
            });
        }
        if g.occurs(self.chart) {
            return Err(MorseError::ChartMismatch(self.chart));
        }
        Ok(g.dehomogenize(self.chart))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MorseVerdict {
    Morse,
    Degenerate,
    NotCritical,
}

impl MorseVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            MorseVerdict::Morse => "Morse",
            MorseVerdict::Degenerate => "Degenerate",
            MorseVerdict::NotCritical => "NotCritical",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorseReport {
    pub multiplier: Option<Rational>,
    pub restricted_hessian: Option<RatMatrix>,
    pub determinant: Option<Rational>,
    pub verdict: MorseVerdict,
}

/// `c` with `a = c·b`, if it exists (`b` nonzero).
fn proportionality(a: &[Rational], b: &[Rational]) -> Option<Rational> {
    let j = b.iter().position(|v| !v.is_zero())?;
    let c = &a[j] / &b[j];
    a.iter().zip(b).all(|(x, y)| *x == &c * y).then_some(c)
}

fn check_probe(x: &Hypersurface, p: &ProbePoint) -> Result<(), MorseError> {
    if x.n() != p.coords.len() || x.f().dehomogenize(p.chart) != p.f_hat {
        return Err(MorseError::NotOnHypersurface);
    }
    Ok(())
}

fn check_integral(p: &ProbePoint, g: &Poly) -> Result<(), MorseError> {
    if g.n_vars() != p.coords.len() {
        return Err(MorseError::IntegralVariables {
            expected: p.coords.len(),
            got: g.n_vars(),
        });
    }
    Ok(())
}

/// Classifies the critical point of `ĝ|_X` at `p` (`ĝ` a chart polynomial).
pub fn morse_classify(x: &Hypersurface, g: &Poly, p: &ProbePoint) -> Result<MorseReport, MorseError> {
    check_probe(x, p)?;
    check_integral(p, g)?;
    let ga = eval_all(&g.gradient(), &p.coords);
    let Some(c) = proportionality(&ga, &p.grad) else {
        return Ok(MorseReport {
            multiplier: None,
            restricted_hessian: None,
            determinant: None,
            verdict: MorseVerdict::NotCritical,
        });
    };
    let lagrangian = g - &p.f_hat.scale(&c);
    let h = restrict(&hessian_at(&lagrangian, &p.coords), &kernel_basis(&p.grad));
    let det = linalg::determinant(&h).unwrap();
    let verdict = if det.is_zero() {
        MorseVerdict::Degenerate
    } else {
        MorseVerdict::Morse
    };
    Ok(MorseReport {
        multiplier: Some(c),
        restricted_hessian: Some(h),
        determinant: Some(det),
        verdict,
    })
}

/// Determinant of the restricted Hessian along `ĝ_λ = ĝ ∘ h_λ`, as a
/// polynomial in `λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaFamily {
    /// Univariate polynomial in one variable (printed as `x0`).
    pub det_poly: Poly,
    pub bad_lambdas: Vec<Rational>,
    pub degree: Option<u32>,
    /// Chart index of the pivot coordinate.
    pub pivot: usize,
    /// Chart index of the normal coordinate `x_N`.
    pub normal: usize,
}

/// The linear change of chart coordinates (centred at `p`)
/// `y_k ↦ (1/a_k)(−Σ_{i≠k} a_i y_i + λ ℓ(y))`, other coordinates fixed, where
/// `a = ∇ĝ(p)` and `ℓ(y) = ∇f̂(p)·y / ∂_N f̂(p)` with `N` the last chart
/// coordinate on which `∇f̂(p)` is nonzero. In coordinates where the tangent
/// hyperplane is `{y_N = 0}`, `ℓ = y_N`. Entry `(i, j)` is `∂h_i/∂y_j`, a
/// polynomial in `λ`.
fn lambda_matrix(a: &[Rational], grad_f: &[Rational], k: usize, normal: usize) -> Vec<Vec<Poly>> {
    let n = a.len();
    let lam = Poly::var(1, 0);
    let mut m: Vec<Vec<Poly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Poly::one(1) } else { Poly::zero(1) })
                .collect()
        })
        .collect();
    let ak = &a[k];
    for j in 0..n {
        let mut e = Poly::zero(1);
        if j != k {
            e = e + Poly::constant(1, -&a[j] / ak);
        }
        let lj = &grad_f[j] / &grad_f[normal];
        if !lj.is_zero() {
            e = e + lam.scale(&(lj / ak));
        }
        m[k][j] = e;
    }
    m
}

/// `ĝ_{λ0}` for a concrete `λ0`, built by composing polynomials.
pub fn lambda_transform(g: &Poly, p: &ProbePoint, k: usize, lambda: &Rational) -> Result<Poly, MorseError> {
    check_integral(p, g)?;
    let (ck, normal, a) = lambda_setup(g, p, k)?;
    let m = lambda_matrix(&a, &p.grad, ck, normal);
    let n = a.len();
    // x ↦ p + H(λ0)(x − p)
    let images: Vec<Poly> = (0..n)
        .map(|i| {
            let mut img = Poly::constant(n, p.coords[i].clone());
            for (j, entry) in m[i].iter().enumerate() {
                let c = entry.eval(std::slice::from_ref(lambda));
                if c.is_zero() {
                    continue;
                }
                let shifted = Poly::var(n, j) - Poly::constant(n, p.coords[j].clone());
                img = img + shifted.scale(&c);
            }
            img
        })
        .collect();
    Ok(g.compose(&images).expect("variable counts agree"))
}

/// Returns (pivot chart index, normal chart index, ∇ĝ(p)).
fn lambda_setup(g: &Poly, p: &ProbePoint, k: usize) -> Result<(usize, usize, Vec<Rational>), MorseError> {
    let a = eval_all(&g.gradient(), &p.coords);
    if a.iter().all(Zero::is_zero) {
        return Err(MorseError::ZeroLinearPart);
    }
    if k == p.chart || k > p.coords.len() {
        return Err(MorseError::BadPivot(k));
    }
    let ck = if k > p.chart { k - 1 } else { k };
    if a[ck].is_zero() {
        return Err(MorseError::BadPivot(k));
    }
    let normal = p
        .grad
        .iter()
        .rposition(|v| !v.is_zero())
        .expect("regular point");
    Ok((ck, normal, a))
}

/// Determinant polynomial of the restricted Hessian of `ĝ_λ − c(λ)·f̂` at
/// `p`, where `k` names the pivot by its homogeneous variable index.
pub fn lambda_family(x: &Hypersurface, g: &Poly, p: &ProbePoint, k: usize) -> Result<LambdaFamily, MorseError> {
    check_probe(x, p)?;
    check_integral(p, g)?;
    let (ck, normal, a) = lambda_setup(g, p, k)?;
    let n = a.len();
    let hm = lambda_matrix(&a, &p.grad, ck, normal);
    let gh = hessian_at(g, &p.coords);
    let fh = hessian_at(&p.f_hat, &p.coords);
    let b = kernel_basis(&p.grad);
    let r = b.cols();
    // HB: columns h_λ(b_j), polynomials in λ
    let hb: Vec<Vec<Poly>> = (0..n)
        .map(|i| {
            (0..r)
                .map(|j| {
                    let mut acc = Poly::zero(1);
                    for (l, e) in hm[i].iter().enumerate() {
                        let bv = b.get(l, j);
                        if !bv.is_zero() && !e.is_zero() {
                            acc = acc + e.scale(bv);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect();
    // ∇ĝ_λ(p) = λ·∇f̂(p)/∂_N f̂(p), so c(λ) = λ/∂_N f̂(p)
    let c = Poly::var(1, 0).scale(&(Rational::one() / &p.grad[normal]));
    let mut mat: Vec<Vec<Poly>> = vec![vec![Poly::zero(1); r]; r];
    for (s, row) in mat.iter_mut().enumerate() {
        for (t, entry) in row.iter_mut().enumerate() {
            let mut acc = Poly::zero(1);
            for i in 0..n {
                for j in 0..n {
                    let gij = gh.get(i, j);
                    if !gij.is_zero() {
                        acc = acc + (&hb[i][s] * &hb[j][t]).scale(gij);
                    }
                    let fij = fh.get(i, j);
                    if !fij.is_zero() {
                        let bb = b.get(i, s) * b.get(j, t);
                        if !bb.is_zero() {
                            acc = acc - c.scale(&(fij * bb));
                        }
                    }
                }
            }
            *entry = acc;
        }
    }
    let det_poly = poly_determinant(mat);
    // h_λ fixes ker ∇f̂(p), so λ only enters through c(λ): degree ≤ n − 1
    assert!(det_poly.degree().map_or(true, |e| e as usize <= r));
    let bad_lambdas = rational_roots(&det_poly);
    Ok(LambdaFamily {
        degree: det_poly.degree(),
        det_poly,
        bad_lambdas,
        pivot: ck,
        normal,
    })
}

/// Fraction-free (Bareiss) determinant over `Q[λ]`.
fn poly_determinant(mut a: Vec<Vec<Poly>>) -> Poly {
    let n = a.len();
    if n == 0 {
        return Poly::one(1);
    }
    let mut sign = 1;
    let mut prev = Poly::one(1);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return Poly::zero(1);
            };
            a.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num
                    .exact_divide(&prev)
                    .expect("nonzero pivot")
                    .expect("Bareiss step is exact");
            }
            a[i][k] = Poly::zero(1);
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = BigInt::one();
    while &i * &i <= n {
        if (&n % &i).is_zero() {
            small.push(i.clone());
            let j = &n / &i;
            if j != i {
                large.push(j);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Distinct rational roots of a univariate polynomial, ascending.
pub fn rational_roots(p: &Poly) -> Vec<Rational> {
    if p.is_zero() || p.is_constant() {
        return Vec::new();
    }
    let deg = p.degree().unwrap() as usize;
    let mut coeffs = vec![Rational::zero(); deg + 1];
    for (m, c) in p.terms() {
        coeffs[m.exponents()[0] as usize] = c.clone();
    }
    let mut roots = Vec::new();
    let low = coeffs.iter().position(|c| !c.is_zero()).unwrap();
    if low > 0 {
        roots.push(Rational::zero());
    }
    let lcm = coeffs.iter().fold(BigInt::one(), |a, c| a.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs[low..]
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    if ints.len() > 1 {
        let shifted = Poly::from_terms(
            1,
            ints.iter().enumerate().map(|(i, c)| {
                (Rational::from_integer(c.clone()), vec![i as u32])
            }),
        );
        for num in divisors(&ints[0]) {
            for den in divisors(ints.last().unwrap()) {
                for s in [-1i64, 1] {
                    let r = Rational::new(&num * BigInt::from(s), den.clone());
                    if !roots.contains(&r) && shifted.eval(std::slice::from_ref(&r)).is_zero() {
                        roots.push(r);
                    }
                }
            }
        }
    }
    roots.sort();
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::restriction::{fermat, make_hypersurface, quadric};
    use crate::text::parse_poly;

    fn r(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    fn point(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| r(x)).collect()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn gauss_map_examples() {
        let x = make_hypersurface(parse_poly("x0*x3 - x1*x2", 4).unwrap()).unwrap();
        assert_eq!(gauss_map_value(&x, &point(&[1, 0, 0, 0])).unwrap(), ints(&[0, 0, 0, 1]));
        let h = make_hypersurface(parse_poly("x0", 4).unwrap()).unwrap();
        assert_eq!(gauss_map_value(&h, &point(&[0, 3, -1, 2])).unwrap(), ints(&[1, 0, 0, 0]));
        let c = fermat(3, 3);
        assert_eq!(gauss_map_value(&c, &point(&[1, -1, 0, 0])).unwrap(), ints(&[1, 1, 0, 0]));
        assert_eq!(
            gauss_map_value(&c, &point(&[1, 0, 0, 0])),
            Err(MorseError::NotOnHypersurface)
        );
        let sing = make_hypersurface(parse_poly("x0*x1", 3).unwrap()).unwrap();
        assert_eq!(
            gauss_map_value(&sing, &point(&[0, 0, 1])),
            Err(MorseError::SingularPoint)
        );
    }

    #[test]
    fn sff_rank_examples() {
        let c = fermat(3, 3);
        assert_eq!(second_fundamental_rank(&c, &point(&[1, -1, 0, 0])).unwrap(), 0);
        assert_eq!(second_fundamental_rank(&c, &point(&[1, -1, 2, -2])).unwrap(), 2);
        let q = make_hypersurface(parse_poly("x0^2 + x1^2 - x2^2 - x3^2", 4).unwrap()).unwrap();
        assert_eq!(second_fundamental_rank(&q, &point(&[1, 1, 1, 1])).unwrap(), 2);
        assert!(second_fundamental_rank(&quadric(3), &point(&[1, 0, 0, 0])).is_err());
    }

    fn model() -> (Hypersurface, ProbePoint) {
        let x = make_hypersurface(parse_poly("x1^2 + x2^2 - x0*x3", 4).unwrap()).unwrap();
        let p = ProbePoint::origin(&x, 0).unwrap();
        (x, p)
    }

    #[test]
    fn morse_examples() {
        let (x, p) = model();
        let g = p.to_chart(&parse_poly("x3 + x1^2", 4).unwrap()).unwrap();
        let rep = morse_classify(&x, &g, &p).unwrap();
        assert_eq!(rep.multiplier, Some(r(-1)));
        assert_eq!(rep.restricted_hessian, Some(RatMatrix::from_i64_rows(&[&[4, 0], &[0, 2]])));
        assert_eq!(rep.determinant, Some(r(8)));
        assert_eq!(rep.verdict, MorseVerdict::Morse);

        let g = p.to_chart(&parse_poly("x3", 4).unwrap()).unwrap();
        let rep = morse_classify(&x, &g, &p).unwrap();
        assert_eq!(rep.determinant, Some(r(4)));
        assert_eq!(rep.verdict, MorseVerdict::Morse);

        let g = p.to_chart(&parse_poly("x1", 4).unwrap()).unwrap();
        assert_eq!(morse_classify(&x, &g, &p).unwrap().verdict, MorseVerdict::NotCritical);
        assert_eq!(
            p.to_chart(&parse_poly("x0 + x1", 4).unwrap()),
            Err(MorseError::ChartMismatch(0))
        );
    }

    #[test]
    fn lambda_examples() {
        let (x, p) = model();
        let lam2 = |c: i64, a: i64| {
            // c·λ^2 + a
            Poly::from_terms(
                1,
                [
                    (r(c), vec![2]),
                    (r(a), vec![0]),
                ],
            )
        };
        let g = p.to_chart(&parse_poly("x3", 4).unwrap()).unwrap();
        let fam = lambda_family(&x, &g, &p, 3).unwrap();
        assert_eq!(fam.det_poly, lam2(4, 0));
        assert_eq!(fam.bad_lambdas, vec![r(0)]);

        let g = p.to_chart(&parse_poly("x3 + x1^2 - x2^2", 4).unwrap()).unwrap();
        let fam = lambda_family(&x, &g, &p, 3).unwrap();
        assert_eq!(fam.det_poly, lam2(4, -4));
        assert_eq!(fam.bad_lambdas, vec![r(-1), r(1)]);

        let g = p.to_chart(&parse_poly("x3 + 2*x1*x2", 4).unwrap()).unwrap();
        let fam = lambda_family(&x, &g, &p, 3).unwrap();
        assert_eq!(fam.det_poly, lam2(4, -4));

        let g = p.to_chart(&parse_poly("x1^2", 4).unwrap()).unwrap();
        assert_eq!(lambda_family(&x, &g, &p, 3), Err(MorseError::ZeroLinearPart));
    }

    #[test]
    fn lambda_paths_agree() {
        let (x, p) = model();
        let g = p.to_chart(&parse_poly("x3 + x1 - 2*x2 + x1^2 + 3*x1*x2 - x2*x3", 4).unwrap()).unwrap();
        for k in [1, 2, 3] {
            let fam = lambda_family(&x, &g, &p, k).unwrap();
            for l in [-2, -1, 1, 3, 7] {
                let gl = lambda_transform(&g, &p, k, &r(l)).unwrap();
                let rep = morse_classify(&x, &gl, &p).unwrap();
                assert_eq!(rep.determinant, Some(fam.det_poly.eval(&[r(l)])));
            }
        }
    }

    #[test]
    fn roots_of_scaled_polynomials() {
        let p = parse_poly("6*x0^3 - 5*x0^2 + x0", 1).unwrap();
        let third = Rational::new(1.into(), 3.into());
        let half = Rational::new(1.into(), 2.into());
        assert_eq!(rational_roots(&p), vec![r(0), third, half]);
        assert!(rational_roots(&parse_poly("x0^2 + 1", 1).unwrap()).is_empty());
    }
}

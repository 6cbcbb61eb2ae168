//! Seeded random polynomials, forms and sections for property checks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::forms::{DiffForm, FormBasis};
use crate::pfaff::{self, make_section, TwistedSection};
use crate::poly::{Monomial, Poly};
use crate::restriction::Hypersurface;
use crate::Rational;

/// Coefficients are drawn from `−COEFF..=COEFF` without zero.
const COEFF: i64 = 3;

fn coefficient<R: Rng>(rng: &mut R) -> Rational {
    let mut c = 0;
    while c == 0 {
        c = rng.gen_range(-COEFF..=COEFF);
    }
    Rational::from_integer(c.into())
}

/// Random homogeneous polynomial of degree `deg` with at most `max_terms`
/// terms; nonzero.
pub fn poly<R: Rng>(rng: &mut R, n_vars: usize, deg: u32, max_terms: usize) -> Poly {
    let monos = Monomial::all_of_degree(n_vars, deg);
    let t = rng.gen_range(1..=max_terms.min(monos.len()).max(1));
    let mut out = Poly::zero(n_vars);
    for m in monos.choose_multiple(rng, t) {
        out.add_term(m.clone(), coefficient(rng));
    }
    out
}

/// Random `q`-form with coefficients homogeneous of degree `e`; about
/// `density` of the basis elements get a nonzero coefficient (at least one).
pub fn form<R: Rng>(rng: &mut R, n_vars: usize, q: usize, e: i64, density: f64) -> DiffForm {
    let basis = FormBasis::new(n_vars, q, e);
    let mut coords = vec![Rational::from_integer(0.into()); basis.dim()];
    if basis.dim() == 0 {
        return DiffForm::zero(n_vars, q);
    }
    for c in coords.iter_mut() {
        if rng.gen_bool(density) {
            *c = coefficient(rng);
        }
    }
    let i = rng.gen_range(0..basis.dim());
    coords[i] = coefficient(rng);
    basis.form_from_coordinates(&coords).unwrap()
}

/// Random nonzero section of `Ω^q(k)` on `P^n` (`0 < q < n+1`, `k > q`), as
/// `i_R` of a random `(q+1)`-form.
pub fn section<R: Rng>(rng: &mut R, n: usize, q: usize, k: i64, density: f64) -> TwistedSection {
    assert!(k > q as i64 && q < n + 1, "no sections for q={q}, k={k} on P^{n}");
    loop {
        let w = form(rng, n + 1, q + 1, k - q as i64 - 1, density).radial_contraction();
        if !w.is_zero() {
            return make_section(w, n).unwrap();
        }
    }
}

/// Random nonzero section of twist `k` restricting to zero on `X`: a
/// combination of `f·σ` and `i_R(df∧θ)`. `None` when both pieces are empty.
pub fn vanishing_section<R: Rng>(
    rng: &mut R,
    x: &Hypersurface,
    q: usize,
    k: i64,
    density: f64,
) -> Option<TwistedSection> {
    let n = x.n();
    let d = x.degree() as i64;
    let qi = q as i64;
    let df = x.df();
    for _ in 0..32 {
        let mut w = DiffForm::zero(n + 1, q);
        if k - d > qi && rng.gen_bool(0.7) {
            w = &w + &section(rng, n, q, k - d, density).form().mul_poly(x.f());
        }
        if k - qi - d >= 0 && q >= 1 {
            let theta = form(rng, n + 1, q, k - qi - d, density);
            w = &w + &df.wedge(&theta).unwrap().radial_contraction();
        }
        if !w.is_zero() {
            return Some(make_section(w, n).unwrap());
        }
        if k - d <= qi && k - qi - d < 0 {
            return None;
        }
    }
    None
}

/// `P dQ − Q dP` with random `P`, `Q` of degree `m`; retried until nonzero
/// and saturated.
pub fn pencil<R: Rng>(rng: &mut R, n: usize, m: u32) -> TwistedSection {
    loop {
        let p = poly(rng, n + 1, m, 4);
        let q = poly(rng, n + 1, m, 4);
        if let Ok(s) = make_section(pfaff::pencil(&p, &q), n) {
            if !pfaff::saturate(&s).removed_anything() {
                return s;
            }
        }
    }
}

/// `Σ λ_i (Π_{j≠i} g_j) dg_i` for three random `g_i` of the given degrees,
/// with `λ = (d2 d3 a, d1 d3 b, −d1 d2 (a+b))` so that `Σ λ_i d_i = 0`.
pub fn logarithmic<R: Rng>(rng: &mut R, n: usize, degs: [u32; 3]) -> TwistedSection {
    let [d1, d2, d3] = degs.map(i64::from);
    loop {
        let gs: Vec<Poly> = degs.iter().map(|&d| poly(rng, n + 1, d, 3)).collect();
        let a = rng.gen_range(1..=3);
        let b = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
        if a + b == 0 {
            continue;
        }
        let l = [d2 * d3 * a, d1 * d3 * b, -d1 * d2 * (a + b)];
        if let Ok(s) = make_section(pfaff::logarithmic(&gs, &l), n) {
            if !pfaff::saturate(&s).removed_anything() {
                return s;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::restriction::{fermat, restriction_vanishes};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn sections_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..10 {
            let s = section(&mut rng, 3, 1, 3, 0.3);
            assert_eq!((s.q(), s.k()), (1, 3));
        }
    }

    #[test]
    fn vanishing_sections_vanish() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let x = fermat(3, 2);
        for (q, k) in [(1, 3), (1, 4), (2, 4)] {
            let s = vanishing_section(&mut rng, &x, q, k, 0.3).unwrap();
            assert!(restriction_vanishes(&x, s.form()).unwrap().vanishes);
        }
        assert!(vanishing_section(&mut rng, &x, 1, 2, 0.3).is_none());
    }

    #[test]
    fn integrable_generators() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let p = pencil(&mut rng, 4, 2);
        assert!(pfaff::is_integrable_codim1(&p).unwrap().holds);
        let l = logarithmic(&mut rng, 4, [1, 1, 2]);
        assert!(pfaff::is_integrable_codim1(&l).unwrap().holds);
    }

    #[test]
    fn same_seed_same_sample() {
        let a = section(&mut ChaCha8Rng::seed_from_u64(9), 4, 2, 4, 0.2);
        let b = section(&mut ChaCha8Rng::seed_from_u64(9), 4, 2, 4, 0.2);
        assert_eq!(a, b);
    }
}

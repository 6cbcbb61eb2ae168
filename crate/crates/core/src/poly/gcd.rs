//! Multivariate GCD by recursive content / primitive-part reduction.
//!
//! The main variable is always the lowest-index variable that occurs; the
//! primitive parts are handled by a subresultant PRS whose coefficients live
//! in the polynomial ring of the remaining variables.

use num_traits::Zero;

use super::{Poly, PolyError};

/// Normalized GCD of two polynomials (primitive over the integers, positive
/// leading coefficient). `gcd(0, 0)` is zero.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    gcd_raw(a, b).normalized()
}

/// Normalized GCD of a list; errors when every input is zero.
pub fn gcd_many<'a, I>(ps: I) -> Result<Poly, PolyError>
where
    I: IntoIterator<Item = &'a Poly>,
{
    let mut acc: Option<Poly> = None;
    for p in ps {
        if p.is_zero() {
            continue;
        }
        acc = Some(match acc.take() {
            None => p.clone(),
            Some(g) if g.is_constant() => g,
            Some(g) => gcd_raw(&g, p),
        });
    }
    acc.map(|g| g.normalized()).ok_or(PolyError::AllZero)
}

fn gcd_raw(a: &Poly, b: &Poly) -> Poly {
    let n = a.n_vars();
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one(n);
    }
    let v = (0..n)
        .find(|&i| a.occurs(i) || b.occurs(i))
        .expect("non-constant polynomial has a variable");
    if !a.occurs(v) {
        return gcd_raw(a, &content_in(b, v));
    }
    if !b.occurs(v) {
        return gcd_raw(&content_in(a, v), b);
    }
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let pa = divide(a, &ca);
    let pb = divide(b, &cb);
    let c = gcd_raw(&ca, &cb);
    let g = primitive_gcd(&pa, &pb, v);
    &c * &g
}

fn divide(a: &Poly, b: &Poly) -> Poly {
    a.exact_divide(b)
        .expect("nonzero divisor")
        .expect("content divides its polynomial")
}

/// GCD of the coefficients of `p` viewed as a polynomial in `x_v`.
fn content_in(p: &Poly, v: usize) -> Poly {
    let coeffs = p.coefficients_in(v);
    let mut acc = Poly::zero(p.n_vars());
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        acc = if acc.is_zero() { c.clone() } else { gcd_raw(&acc, c) };
        if acc.is_constant() {
            return Poly::one(p.n_vars());
        }
    }
    acc.normalized()
}

fn primitive_part_in(p: &Poly, v: usize) -> Poly {
    divide(p, &content_in(p, v))
}

fn degree(c: &[Poly]) -> usize {
    c.len() - 1
}

fn trim(c: &mut Vec<Poly>) {
    while c.len() > 1 && c.last().is_some_and(Poly::is_zero) {
        c.pop();
    }
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) · a mod b` in the main variable.
fn pseudo_remainder(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let db = degree(b);
    let lcb = &b[db];
    let delta = degree(a) - db;
    let mut r = a.to_vec();
    let mut steps = 0usize;
    while r.len() > db && !(r.len() == 1 && r[0].is_zero()) {
        let dr = degree(&r);
        if dr < db {
            break;
        }
        let lcr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = c.clone() * lcb.clone();
        }
        for (j, bj) in b.iter().enumerate() {
            let t = &lcr * bj;
            r[j + shift] = &r[j + shift] - &t;
        }
        debug_assert!(r[dr].is_zero());
        r.pop();
        if r.is_empty() {
            r.push(Poly::zero(lcb.n_vars()));
        }
        trim(&mut r);
        steps += 1;
    }
    let extra = (delta + 1).saturating_sub(steps) as u32;
    if extra > 0 {
        let f = lcb.pow(extra);
        for c in r.iter_mut() {
            *c = &*c * &f;
        }
    }
    r
}

fn is_zero_coeffs(c: &[Poly]) -> bool {
    c.iter().all(Poly::is_zero)
}

/// GCD of two polynomials primitive in `x_v`, via the subresultant PRS.
fn primitive_gcd(a: &Poly, b: &Poly, v: usize) -> Poly {
    let n = a.n_vars();
    let mut a_c = a.coefficients_in(v);
    let mut b_c = b.coefficients_in(v);
    if degree(&a_c) < degree(&b_c) {
        std::mem::swap(&mut a_c, &mut b_c);
    }
    let mut g = Poly::one(n);
    let mut h = Poly::one(n);
    loop {
        let delta = degree(&a_c) - degree(&b_c);
        let r = pseudo_remainder(&a_c, &b_c);
        if is_zero_coeffs(&r) {
            break;
        }
        if degree(&r) == 0 {
            return Poly::one(n);
        }
        let divisor = &g * &h.pow(delta as u32);
        a_c = b_c;
        b_c = r.iter().map(|c| divide(c, &divisor)).collect();
        g = a_c[degree(&a_c)].clone();
        if delta > 0 {
            let num = g.pow(delta as u32);
            let den = h.pow(delta as u32 - 1);
            h = divide(&num, &den);
        }
    }
    let result = Poly::from_coefficients_in(n, v, &b_c);
    debug_assert!(!result.terms().any(|(_, c)| c.is_zero()));
    primitive_part_in(&result, v)
}

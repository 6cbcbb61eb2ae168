#![allow(dead_code)]

use folex::forms::DiffForm;
use folex::poly::{Monomial, Poly};
use folex::Rational;
use proptest::prelude::*;

pub fn rat(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// Homogeneous polynomial of degree `deg` in `n` variables (possibly zero).
pub fn homogeneous(n: usize, deg: u32) -> impl Strategy<Value = Poly> {
    let monos = Monomial::all_of_degree(n, deg);
    let len = monos.len();
    prop::collection::vec((0..len, -4i64..=4), 0..5).prop_map(move |terms| {
        let mut p = Poly::zero(n);
        for (i, c) in terms {
            p.add_term(monos[i].clone(), rat(c));
        }
        p
    })
}

/// Arbitrary polynomial of degree at most `max_deg`.
pub fn any_poly(n: usize, max_deg: u32) -> impl Strategy<Value = Poly> {
    prop::collection::vec(
        (prop::collection::vec(0u32..=max_deg, n), -5i64..=5, 1i64..=3),
        0..6,
    )
    .prop_map(move |terms| {
        let mut p = Poly::zero(n);
        for (mut e, c, den) in terms {
            // clamp total degree
            while e.iter().sum::<u32>() > max_deg {
                let i = e.iter().position(|&x| x > 0).unwrap();
                e[i] -= 1;
            }
            p.add_term(Monomial::new(e), Rational::new(c.into(), den.into()));
        }
        p
    })
}

/// Homogeneous `q`-form with coefficient degree `e` in `n` variables.
pub fn form(n: usize, q: usize, e: u32) -> impl Strategy<Value = DiffForm> {
    let tuples = folex::forms::index_tuples(n, q);
    let len = tuples.len();
    prop::collection::vec((0..len, homogeneous(n, e)), 0..4).prop_map(move |comps| {
        let mut w = DiffForm::zero(n, q);
        for (i, c) in comps {
            w.add_term(&tuples[i], c);
        }
        w
    })
}

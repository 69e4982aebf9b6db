//! Randomized property checks shared by the `properties` and `acceptance`
//! targets. Each returns `Err` with the shrunk counterexample on failure.

#![allow(dead_code)]

use curvesym_core::curve::make_curve;
use curvesym_core::groebner::{
    buchberger, is_reduced, normal_form, satisfies_buchberger_criterion, Ideal,
};
use curvesym_core::monomial::{minimize, MonomialIdeal2};
use curvesym_core::ring::{Polynomial, Rational, Ring, Weights};
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

pub const CASES: u32 = 128;

pub type Suite = fn(u32) -> Result<(), String>;

fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    })
}

fn space() -> Ring {
    Ring::space(&Weights::for_curve(1, 1).unwrap())
}

fn poly_strategy(ring: Ring, max_exp: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    let arity = ring.arity();
    prop::collection::vec(
        (-6i64..=6, prop::collection::vec(0..=max_exp, arity)),
        0..=max_terms,
    )
    .prop_map(move |terms| {
        Polynomial::from_terms(ring, terms.into_iter().map(|(c, e)| (BigInt::from(c), e)))
            .expect("exponents fit")
    })
}

fn exps_strategy() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..40, 3)
}

pub fn ring_axioms(cases: u32) -> Result<(), String> {
    let ring = space();
    let p = || poly_strategy(ring, 3, 4);
    runner(cases)
        .run(&(p(), p(), p()), |(a, b, c)| {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a.clone()).is_zero());
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            prop_assert_eq!(&a * &Polynomial::one(ring), a.clone());
            if !b.is_zero() {
                prop_assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn order_axioms(cases: u32) -> Result<(), String> {
    let ring = space();
    let key = |e: &[u32]| {
        let deg = ring.weighted_degree(e).unwrap();
        (deg, e[0], e[1], e[2])
    };
    runner(cases)
        .run(
            &(exps_strategy(), exps_strategy(), exps_strategy()),
            |(ea, eb, ec)| {
                let (a, b, c) = (
                    ring.monomial(&ea).unwrap(),
                    ring.monomial(&eb).unwrap(),
                    ring.monomial(&ec).unwrap(),
                );
                prop_assert_eq!(a.cmp(&b), key(&ea).cmp(&key(&eb)));
                prop_assert_eq!(a.cmp(&b).reverse(), b.cmp(&a));
                if a < b {
                    prop_assert!(a * c < b * c);
                }
                prop_assert!(ring.monomial(&[0, 0, 0]).unwrap() <= a);
                prop_assert!(a.divides(a * c));
                let divides = ea.iter().zip(&eb).all(|(x, y)| x <= y);
                prop_assert_eq!(a.divides(b), divides);
                if divides {
                    prop_assert!(a <= b);
                }
                let l = ring.lcm(a, b);
                let g = ring.gcd(a, b);
                prop_assert!(a.divides(l) && b.divides(l) && g.divides(a) && g.divides(b));
                prop_assert_eq!(l * g, a * b);
                prop_assert_eq!(ring.exponents(a), ea);
                Ok(())
            },
        )
        .map_err(|e| e.to_string())
}

/// Small homogeneous ideals inside the prime of a curve. Each generator is
/// `c1 u1 h1 + c2 u2 h2` with `h1, h2` among `g1, g2, g3, f` and monomials
/// `u1, u2` chosen so both summands have the same weighted degree (the
/// second summand is dropped when no such `u2` exists).
fn curve_family_gens() -> impl Strategy<Value = (Ring, Vec<Polynomial>)> {
    let params = prop::sample::select(vec![(1u32, 1u32), (1, 2), (2, 1)]);
    let generator = (
        (0usize..4, prop::collection::vec(0u32..=2, 3), -3i64..=3),
        prop::option::of((0usize..4, 0usize..64, -3i64..=3)),
    );
    (params, prop::collection::vec(generator, 1..=3)).prop_map(|((q, m), spec)| {
        let c = make_curve(q, m).unwrap();
        let ring = c.ring();
        let base = [c.g1(), c.g2(), c.g3(), c.f()];
        let deg = |p: &Polynomial| p.homogeneity().degree().unwrap();
        let nonzero = |k: i64| Rational::from_integer(if k == 0 { 1.into() } else { k.into() });
        let gens = spec
            .into_iter()
            .map(|((i, e, c1), second)| {
                let u = ring.monomial(&e).unwrap();
                let mut g = base[i].mul_term(u, &nonzero(c1));
                if let Some((j, pick, c2)) = second {
                    let target = deg(&g);
                    let candidates: Vec<Vec<u32>> = (0..4u32)
                        .flat_map(|a| {
                            (0..4u32).flat_map(move |b| (0..4u32).map(move |c| vec![a, b, c]))
                        })
                        .filter(|v| ring.weighted_degree(v).unwrap() + deg(base[j]) == target)
                        .collect();
                    if !candidates.is_empty() {
                        let v = ring.monomial(&candidates[pick % candidates.len()]).unwrap();
                        g = &g + &base[j].mul_term(v, &nonzero(c2));
                    }
                }
                g
            })
            .filter(|g| !g.is_zero())
            .collect::<Vec<_>>();
        let gens = if gens.is_empty() {
            vec![c.g1().clone()]
        } else {
            gens
        };
        (ring, gens)
    })
}

pub fn groebner_postconditions(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(&curve_family_gens(), |(ring, gens)| {
            let gb = buchberger(ring, &gens);
            prop_assert!(satisfies_buchberger_criterion(&gb));
            prop_assert!(is_reduced(&gb));
            for g in &gens {
                prop_assert!(normal_form(g, gb.elements()).is_zero());
            }
            for e in gb.elements() {
                prop_assert!(e
                    .leading_coefficient()
                    .is_some_and(|c| *c == Rational::from_integer(1.into())));
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn groebner_canonical(cases: u32) -> Result<(), String> {
    let extra = (0usize..8, prop::collection::vec(0u32..=2, 3));
    runner(cases)
        .run(
            &(curve_family_gens(), extra),
            |((ring, gens), (pick, e))| {
                let gb = buchberger(ring, &gens);
                let mut other: Vec<Polynomial> = gens
                    .iter()
                    .rev()
                    .map(|g| g.scale(&Rational::new(3.into(), 7.into())))
                    .collect();
                let mono = ring.monomial(&e).unwrap();
                let a = &gens[pick % gens.len()];
                let b = &gens[(pick / 2) % gens.len()];
                other.push(&a.mul_term(mono, &Rational::from_integer(2.into())) + b);
                let gb2 = buchberger(ring, &other);
                prop_assert_eq!(gb.elements(), gb2.elements());
                Ok(())
            },
        )
        .map_err(|e| e.to_string())
}

pub fn normal_form_postconditions(cases: u32) -> Result<(), String> {
    let c = make_curve(1, 1).unwrap();
    let ring = c.ring();
    let basis = c.prime().basis().clone();
    let lms = basis.leading_monomials();
    runner(cases)
        .run(&poly_strategy(ring, 5, 6), |f| {
            let r = normal_form(&f, basis.elements());
            prop_assert!(c.prime().contains(&(&f - &r)));
            for (m, _) in r.terms() {
                prop_assert!(lms.iter().all(|l| !l.divides(*m)));
            }
            prop_assert_eq!(normal_form(&r, basis.elements()), r);
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn colon_sandwich(cases: u32) -> Result<(), String> {
    let divisor = (0usize..3, prop::collection::vec(0u32..=2, 3), any::<bool>());
    runner(cases)
        .run(
            &(curve_family_gens(), divisor),
            |((ring, gens), (v, e, binomial))| {
                let ideal = Ideal::new(ring, gens).unwrap();
                let mono = Polynomial::term(
                    ring,
                    ring.monomial(&e).unwrap(),
                    Rational::from_integer(1.into()),
                );
                let f = if binomial {
                    let x = Polynomial::variable(ring, v).unwrap();
                    &mono + &x
                } else {
                    mono
                };
                let colon = ideal.colon(&f).unwrap();
                prop_assert!(ideal.is_subset_of(&colon));
                let back = Ideal::new(ring, vec![f.clone()])
                    .unwrap()
                    .product(&colon)
                    .unwrap();
                prop_assert!(back.is_subset_of(&ideal));
                prop_assert!(colon.colon(&Polynomial::one(ring)).unwrap().equals(&colon));
                Ok(())
            },
        )
        .map_err(|e| e.to_string())
}

pub fn subset_partial_order(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(
            &(curve_family_gens(), curve_family_gens()),
            |((ring, a), (ring2, b))| {
                let i = Ideal::new(ring, a).unwrap();
                prop_assert!(i.is_subset_of(&i));
                if ring != ring2 {
                    return Ok(());
                }
                let j = Ideal::new(ring, b).unwrap();
                let s = i.sum(&j).unwrap();
                prop_assert!(i.is_subset_of(&s) && j.is_subset_of(&s));
                let p = i.product(&j).unwrap();
                prop_assert!(p.is_subset_of(&i) && p.is_subset_of(&j));
                prop_assert_eq!(i.is_subset_of(&j) && j.is_subset_of(&i), i.equals(&j));
                Ok(())
            },
        )
        .map_err(|e| e.to_string())
}

fn pairs() -> impl Strategy<Value = Vec<(u32, u32)>> {
    prop::collection::vec((0u32..12, 0u32..12), 1..12)
}

pub fn minimize_properties(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(&(pairs(), any::<u64>()), |(v, seed)| {
            let once = minimize(v.clone());
            prop_assert_eq!(minimize(once.clone()), once.clone());
            let mut shuffled = v.clone();
            let n = shuffled.len();
            for i in (1..n).rev() {
                shuffled.swap(i, (seed as usize ^ i.wrapping_mul(0x9e37)) % (i + 1));
            }
            prop_assert_eq!(minimize(shuffled), once.clone());
            let divides = |(a, b): (u32, u32), (c, d): (u32, u32)| a <= c && b <= d;
            for &g in &v {
                prop_assert!(once.iter().any(|&h| divides(h, g)));
            }
            for (i, &g) in once.iter().enumerate() {
                for (j, &h) in once.iter().enumerate() {
                    prop_assert!(i == j || !divides(g, h));
                }
            }
            prop_assert!(once.windows(2).all(|w| w[0].0 > w[1].0 && w[0].1 < w[1].1));
            Ok(())
        })
        .map_err(|e| e.to_string())
}

pub fn hilbert_series_truncation(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(
            &(pairs(), 1u32..8, 1u32..8, 0usize..20),
            |(v, d2, d3, extra)| {
                let ideal = MonomialIdeal2::new(v, d2, d3);
                let res = ideal.hilbert_burch().unwrap();
                let top = res
                    .syzygy_degrees
                    .iter()
                    .chain(&res.generator_degrees)
                    .max()
                    .copied()
                    .unwrap_or(0);
                let len = (top + u64::from(d2 * d3)) as usize + extra;
                let counted: Vec<i64> = ideal
                    .hilbert_function(len as u64 - 1)
                    .into_iter()
                    .map(|x| x as i64)
                    .collect();
                prop_assert_eq!(res.hilbert_series(d2, d3, len), counted);
                Ok(())
            },
        )
        .map_err(|e| e.to_string())
}

/// Every property suite, by name.
pub fn all_suites() -> Vec<(&'static str, Suite)> {
    vec![
        ("ring_axioms", ring_axioms),
        ("order_axioms", order_axioms),
        ("groebner_postconditions", groebner_postconditions),
        ("groebner_canonical", groebner_canonical),
        ("normal_form_postconditions", normal_form_postconditions),
        ("colon_sandwich", colon_sandwich),
        ("subset_partial_order", subset_partial_order),
        ("minimize_properties", minimize_properties),
        ("hilbert_series_truncation", hilbert_series_truncation),
    ]
}

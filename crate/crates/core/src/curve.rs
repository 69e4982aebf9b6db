//! The defining prime of the monomial curve `(t^d, t^(d+m), t^(d+2m))` with
//! `d = 2q + 1`, its distinguished elements, and its symbolic powers.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::One;
use thiserror::Error;

use crate::groebner::{Ideal, IdealError};
use crate::monomial::MonomialIdeal2;
use crate::ring::{Polynomial, Rational, Ring, RingError, Weights};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurveError {
    #[error("q and m must be positive (got q = {q}, m = {m})")]
    NonPositive { q: u32, m: u32 },
    #[error("gcd(2q + 1, m) = gcd({d}, {m}) = {gcd} != 1")]
    NotCoprime { d: u32, m: u32, gcd: u32 },
    #[error("symbolic powers are indexed from 1")]
    ZeroPower,
    #[error("image of {0} modulo x1 is not a single term")]
    NotMonomialModX1(String),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurveParams {
    q: u32,
    m: u32,
}

impl CurveParams {
    pub fn new(q: u32, m: u32) -> Result<Self, CurveError> {
        if q == 0 || m == 0 {
            return Err(CurveError::NonPositive { q, m });
        }
        let d = 2 * q + 1;
        let gcd = num_integer::gcd(d, m);
        if gcd != 1 {
            return Err(CurveError::NotCoprime { d, m, gcd });
        }
        Ok(CurveParams { q, m })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn d(&self) -> u32 {
        2 * self.q + 1
    }

    pub fn weights(&self) -> Weights {
        Weights::for_curve(self.q, self.m).expect("validated parameters")
    }
}

/// `g1, g2, g3` generate the prime; `f` is the extra generator of the second
/// symbolic power.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveElements {
    pub g1: Polynomial,
    pub g2: Polynomial,
    pub g3: Polynomial,
    pub f: Polynomial,
}

pub struct CurveIdeal {
    params: CurveParams,
    weights: Weights,
    ring: Ring,
    elements: CurveElements,
    prime: Ideal,
    maximal: Ideal,
    second: OnceLock<Ideal>,
    symbolic: Mutex<HashMap<u32, Arc<Ideal>>>,
    ordinary: Mutex<HashMap<u32, Arc<Ideal>>>,
}

impl std::fmt::Debug for CurveIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CurveIdeal")
            .field("params", &self.params)
            .field("elements", &self.elements)
            .finish_non_exhaustive()
    }
}

fn int(c: i64) -> Rational {
    Rational::from_integer(c.into())
}

/// Builds `g1, g2, g3, f` for the given parameters in the space ring.
pub fn curve_elements(params: CurveParams) -> CurveElements {
    elements_in(Ring::space(&params.weights()), params.q, params.m)
}

fn elements_in(ring: Ring, q: u32, m: u32) -> CurveElements {
    let p = |terms: Vec<(i64, [u32; 3])>| {
        Polynomial::from_terms(ring, terms.into_iter().map(|(c, e)| (int(c), e.to_vec())))
            .expect("exponents fit")
    };
    CurveElements {
        g1: p(vec![(1, [m + q, 1, 0]), (-1, [0, 0, q + 1])]),
        g2: p(vec![(1, [m + q + 1, 0, 0]), (-1, [0, 1, q])]),
        g3: p(vec![(1, [0, 2, 0]), (-1, [1, 0, 1])]),
        f: p(vec![
            (-1, [2 * (m + q) + 1, 0, 0]),
            (-1, [m + q - 1, 3, q - 1]),
            (3, [m + q, 1, q]),
            (-1, [0, 0, 2 * q + 1]),
        ]),
    }
}

pub fn make_curve(q: u32, m: u32) -> Result<CurveIdeal, CurveError> {
    let params = CurveParams::new(q, m)?;
    let weights = params.weights();
    let ring = Ring::space(&weights);
    let elements = curve_elements(params);
    let prime = Ideal::new(
        ring,
        vec![
            elements.g1.clone(),
            elements.g2.clone(),
            elements.g3.clone(),
        ],
    )?;
    let vars = (0..3)
        .map(|i| Polynomial::variable(ring, i))
        .collect::<Result<Vec<_>, _>>()?;
    let maximal = Ideal::new(ring, vars)?;
    Ok(CurveIdeal {
        params,
        weights,
        ring,
        elements,
        prime,
        maximal,
        second: OnceLock::new(),
        symbolic: Mutex::new(HashMap::new()),
        ordinary: Mutex::new(HashMap::new()),
    })
}

/// Outcome of the cofactor identity check; lists the identities that failed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IdentityCheck {
    pub failed: Vec<&'static str>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.failed.is_empty()
    }
}

/// Checks the exact identities expressing `x_i f` in terms of products of
/// the `g_j`, and the expansion of `f` in the `g_j`.
pub fn verify_cofactor_identities(params: CurveParams, e: &CurveElements) -> IdentityCheck {
    identities(params.q, params.m, e)
}

/// The same identities as polynomial identities over the integers, for any
/// positive `(q, m)`, including pairs with `gcd(2q + 1, m) != 1` that do not
/// define a curve of the family. The grading is only used for term order.
pub fn verify_cofactor_identities_formal(q: u32, m: u32) -> Result<IdentityCheck, CurveError> {
    if q == 0 || m == 0 {
        return Err(CurveError::NonPositive { q, m });
    }
    let ring = Ring::space(&Weights::new(1, 2, 3)?);
    Ok(identities(q, m, &elements_in(ring, q, m)))
}

fn identities(q: u32, m: u32, e: &CurveElements) -> IdentityCheck {
    let ring = e.f.ring();
    let mono = |a: u32, b: u32, c: u32| {
        Polynomial::term(
            ring,
            ring.monomial(&[a, b, c]).expect("exponents fit"),
            Rational::one(),
        )
    };
    let x = |i: usize| Polynomial::variable(ring, i).expect("variable exists");
    let (g1, g2, g3, f) = (&e.g1, &e.g2, &e.g3, &e.f);
    let mut check = IdentityCheck::default();

    let lhs = &x(0) * f;
    let rhs = -(g2 * g2) - &mono(0, 0, q - 1) * &(g1 * g3);
    if lhs != rhs {
        check.failed.push("x1*f = -g2^2 - x3^(q-1)*g1*g3");
    }
    let lhs = &x(1) * f;
    let rhs = -(&mono(m + q - 1, 0, q - 1) * &(g3 * g3)) - g1 * g2;
    if lhs != rhs {
        check
            .failed
            .push("x2*f = -x1^(m+q-1)*x3^(q-1)*g3^2 - g1*g2");
    }
    let lhs = &x(2) * f;
    let rhs = -(g1 * g1) + &mono(m + q - 1, 0, 0) * &(g2 * g3);
    if lhs != rhs {
        check.failed.push("x3*f = -g1^2 + x1^(m+q-1)*g2*g3");
    }
    // The g3 coefficient enters with a minus sign; with a plus sign the
    // difference is 2*x1^(m+q-1)*x2*x3^(q-1)*g3.
    let rhs = &mono(0, 0, q) * g1 - &mono(m + q, 0, 0) * g2 - &mono(m + q - 1, 1, q - 1) * g3;
    if *f != rhs {
        check
            .failed
            .push("f = x3^q*g1 - x1^(m+q)*g2 - x1^(m+q-1)*x2*x3^(q-1)*g3");
    }
    check
}

impl CurveIdeal {
    pub fn params(&self) -> CurveParams {
        self.params
    }

    pub fn weights(&self) -> Weights {
        self.weights
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn elements(&self) -> &CurveElements {
        &self.elements
    }

    pub fn g1(&self) -> &Polynomial {
        &self.elements.g1
    }

    pub fn g2(&self) -> &Polynomial {
        &self.elements.g2
    }

    pub fn g3(&self) -> &Polynomial {
        &self.elements.g3
    }

    pub fn f(&self) -> &Polynomial {
        &self.elements.f
    }

    /// The prime `(g1, g2, g3)`.
    pub fn prime(&self) -> &Ideal {
        &self.prime
    }

    /// `(x1, x2, x3)`.
    pub fn maximal(&self) -> &Ideal {
        &self.maximal
    }

    pub fn x1(&self) -> Polynomial {
        Polynomial::variable(self.ring, 0).expect("x1 exists")
    }

    pub fn verify_cofactor_identities(&self) -> IdentityCheck {
        verify_cofactor_identities(self.params, &self.elements)
    }

    /// `p^2 + (f)`, computed once.
    pub fn second_symbolic_power(&self) -> &Ideal {
        self.second.get_or_init(|| {
            let sq = self.prime.power(2).expect("positive exponent");
            let f = Ideal::new(self.ring, vec![self.elements.f.clone()]).expect("same ring");
            sq.sum(&f).expect("same ring")
        })
    }

    /// `p^(n)` from the recursion `p^(2k) = (p^(2))^k`, `p^(2k+1) = p p^(2k)`.
    ///
    /// The even powers are generated by `f^i p^(2(k-i))`, which is the
    /// binomial expansion of `(p^2 + (f))^k` with duplicate products
    /// already merged.
    ///
    /// Results are memoized per `n`; the shared handle keeps the basis once
    /// any caller has computed it.
    pub fn symbolic_power_structural(&self, n: u32) -> Result<Arc<Ideal>, CurveError> {
        if n == 0 {
            return Err(CurveError::ZeroPower);
        }
        if let Some(hit) = self.symbolic.lock().expect("cache lock").get(&n) {
            return Ok(Arc::clone(hit));
        }
        let ideal = match n {
            1 => self.prime.clone(),
            2 => self.second_symbolic_power().clone(),
            _ => {
                let k = n / 2;
                let mut gens = Vec::new();
                for i in 0..=k {
                    let fi = self.elements.f.pow(i);
                    let e = n - 2 * i;
                    if e == 0 {
                        gens.push(fi);
                    } else {
                        gens.extend(
                            ordinary_power_generators(&self.elements, e)
                                .into_iter()
                                .map(|g| &fi * &g),
                        );
                    }
                }
                Ideal::new(self.ring, gens)?
            }
        };
        let ideal = Arc::new(ideal);
        Ok(Arc::clone(
            self.symbolic
                .lock()
                .expect("cache lock")
                .entry(n)
                .or_insert(ideal),
        ))
    }

    /// `p^n` with generators the degree-`n` monomials in `g1, g2, g3`.
    /// Memoized like the symbolic powers.
    pub fn ordinary_power(&self, n: u32) -> Result<Arc<Ideal>, CurveError> {
        if n == 0 {
            return Err(CurveError::ZeroPower);
        }
        if let Some(hit) = self.ordinary.lock().expect("cache lock").get(&n) {
            return Ok(Arc::clone(hit));
        }
        let ideal = Arc::new(Ideal::new(
            self.ring,
            ordinary_power_generators(&self.elements, n),
        )?);
        Ok(Arc::clone(
            self.ordinary
                .lock()
                .expect("cache lock")
                .entry(n)
                .or_insert(ideal),
        ))
    }

    /// `(p^n : x1^∞)`, the independent route to `p^(n)`.
    pub fn symbolic_power_oracle(&self, n: u32) -> Result<Ideal, CurveError> {
        let pn = self.ordinary_power(n)?;
        Ok(pn.saturate(&self.x1())?)
    }
}

/// All products `g1^a g2^b g3^c` with `a + b + c = n`.
fn ordinary_power_generators(e: &CurveElements, n: u32) -> Vec<Polynomial> {
    let pow = |g: &Polynomial| {
        let mut v = vec![Polynomial::one(g.ring())];
        for i in 1..=n as usize {
            let next = &v[i - 1] * g;
            v.push(next);
        }
        v
    };
    let (p1, p2, p3) = (pow(&e.g1), pow(&e.g2), pow(&e.g3));
    let mut out = Vec::new();
    for a in (0..=n).rev() {
        for b in (0..=n - a).rev() {
            let c = n - a - b;
            out.push(&(&p1[a as usize] * &p2[b as usize]) * &p3[c as usize]);
        }
    }
    out
}

/// Image of `ideal` under `x1 -> 0`, as a monomial ideal of `k[x2, x3]`.
///
/// Every nonzero image of a generator must be a single term; anything else
/// means the ideal is not from the curve family.
pub fn reduce_mod_x1(ideal: &Ideal, weights: &Weights) -> Result<MonomialIdeal2, CurveError> {
    let ring = ideal.ring();
    let mut exps = Vec::new();
    for g in ideal.generators() {
        let image = g.set_variable_zero(0)?;
        match image.terms() {
            [] => {}
            [(m, _)] => {
                let e = ring.exponents(*m);
                exps.push((e[1], e[2]));
            }
            _ => return Err(CurveError::NotMonomialModX1(g.to_string())),
        }
    }
    Ok(MonomialIdeal2::new(exps, weights.d2(), weights.d3()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Homogeneity;

    #[test]
    fn parameters_are_validated() {
        assert!(CurveParams::new(1, 1).is_ok());
        assert!(CurveParams::new(2, 2).is_ok());
        assert_eq!(
            CurveParams::new(1, 3),
            Err(CurveError::NotCoprime { d: 3, m: 3, gcd: 3 })
        );
        assert!(matches!(
            CurveParams::new(0, 1),
            Err(CurveError::NonPositive { .. })
        ));
        assert!(make_curve(1, 0).is_err());
    }

    #[test]
    fn elements_at_q1_m1() {
        let c = make_curve(1, 1).unwrap();
        assert_eq!(c.f().to_string(), "-x1^5 + 3*x1^2*x2*x3 - x1*x2^3 - x3^3");
        let degs: Vec<_> = [c.g1(), c.g2(), c.g3(), c.f()]
            .iter()
            .map(|p| p.homogeneity())
            .collect();
        assert_eq!(degs, [10, 9, 8, 15].map(Homogeneity::Homogeneous).to_vec());
    }

    #[test]
    fn element_degrees_follow_the_weights() {
        for (q, m) in [(1, 2), (2, 1), (2, 3), (3, 2)] {
            let c = make_curve(q, m).unwrap();
            let w = c.weights();
            let (d, d2, d3) = (u64::from(w.d1()), u64::from(w.d2()), u64::from(w.d3()));
            let (q64, m64) = (u64::from(q), u64::from(m));
            assert_eq!(c.g1().homogeneity().degree(), Some((q64 + 1) * d3));
            assert_eq!(c.g2().homogeneity().degree(), Some(d * (m64 + q64 + 1)));
            assert_eq!(c.g3().homogeneity().degree(), Some(2 * d2));
            assert_eq!(c.f().homogeneity().degree(), Some(d * d3));
        }
        let c = make_curve(1, 2).unwrap();
        assert_eq!(
            (c.weights().d1(), c.weights().d2(), c.weights().d3()),
            (3, 5, 7)
        );
        assert_eq!(c.g3().homogeneity().degree(), Some(10));
    }

    #[test]
    fn cofactor_identities_hold() {
        for (q, m) in [(1, 1), (2, 1), (1, 2), (3, 2)] {
            let c = make_curve(q, m).unwrap();
            assert!(
                c.verify_cofactor_identities().passed(),
                "(q, m) = ({q}, {m})"
            );
        }
    }

    #[test]
    fn perturbed_g3_breaks_identities() {
        let c = make_curve(1, 1).unwrap();
        let mut e = c.elements().clone();
        let r = c.ring();
        e.g3 = Polynomial::from_terms(r, vec![(int(1), vec![0, 2, 0]), (int(-2), vec![1, 0, 1])])
            .unwrap();
        let check = verify_cofactor_identities(c.params(), &e);
        assert!(!check.passed());
        assert!(check.failed.contains(&"x1*f = -g2^2 - x3^(q-1)*g1*g3"));
    }

    #[test]
    fn images_mod_x1() {
        for (q, m) in [(1, 1), (2, 3)] {
            let c = make_curve(q, m).unwrap();
            let w = c.weights();
            let p = reduce_mod_x1(c.prime(), &w).unwrap();
            assert_eq!(p.generators(), &[(2, 0), (1, q), (0, q + 1)]);
            let f = Ideal::new(c.ring(), vec![c.f().clone()]).unwrap();
            assert_eq!(
                reduce_mod_x1(&f, &w).unwrap().generators(),
                &[(0, 2 * q + 1)]
            );
            let g1 = Ideal::new(c.ring(), vec![c.g1().clone()]).unwrap();
            assert_eq!(reduce_mod_x1(&g1, &w).unwrap().generators(), &[(0, q + 1)]);
        }
        let c = make_curve(1, 1).unwrap();
        let bad = Ideal::new(c.ring(), vec![c.g3() + c.g1()]).unwrap();
        assert!(matches!(
            reduce_mod_x1(&bad, &c.weights()),
            Err(CurveError::NotMonomialModX1(_))
        ));
    }

    #[test]
    fn structural_powers_small_cases() {
        let c = make_curve(1, 1).unwrap();
        assert!(c.symbolic_power_structural(1).unwrap().equals(c.prime()));
        assert_eq!(
            c.symbolic_power_structural(0).unwrap_err(),
            CurveError::ZeroPower
        );
        let p2 = c.symbolic_power_structural(2).unwrap();
        assert_eq!(p2.generators().len(), 7);
        let p5 = c.symbolic_power_structural(5).unwrap();
        let p2 = c.second_symbolic_power();
        let unrolled = c.prime().product(&p2.product(p2).unwrap()).unwrap();
        assert!(p5.equals(&unrolled));
    }

    #[test]
    fn formal_identities_outside_the_family() {
        assert!(verify_cofactor_identities_formal(1, 3).unwrap().passed());
        assert!(verify_cofactor_identities_formal(2, 5).unwrap().passed());
        assert!(verify_cofactor_identities_formal(0, 1).is_err());
    }
}

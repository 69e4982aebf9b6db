//! Buchberger's algorithm and the ideal operations built on it.
//!
//! Bases are computed over the integers (primitive polynomials, fraction-free
//! reduction) and only converted to monic rational form at the end. Pair
//! selection follows the normal strategy, and pairs are pruned with the
//! Gebauer-Moeller update, which subsumes the coprime and chain criteria.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::ring::{Monomial, Polynomial, Rational, Ring, RingError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("cannot take the colon or saturation by the zero polynomial")]
    ZeroDivisor,
    #[error("the zeroth power of an ideal is not supported")]
    ZeroPower,
}

type Term = (Monomial, BigInt);

fn to_integer_terms(p: &Polynomial) -> Vec<Term> {
    let s = p.primitive_scale();
    p.terms()
        .iter()
        .map(|(m, c)| {
            let v = c * &s;
            debug_assert!(v.is_integer());
            (*m, v.to_integer())
        })
        .collect()
}

fn monic_from_integer(ring: Ring, terms: &[Term]) -> Polynomial {
    let lc = Rational::from_integer(terms[0].1.clone());
    let out = terms
        .iter()
        .map(|(m, c)| (*m, Rational::from_integer(c.clone()) / &lc))
        .collect();
    Polynomial::from_sorted(ring, out)
}

/// Divides out the content of `a` and `b` together, keeping the sign.
fn remove_content(a: &mut [Term], b: &mut [Term]) {
    let mut g = BigInt::zero();
    for (_, c) in a.iter().chain(b.iter()) {
        g = g.gcd(c);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() {
        return;
    }
    for (_, c) in a.iter_mut().chain(b.iter_mut()) {
        *c /= &g;
    }
}

fn make_primitive(p: &mut [Term]) {
    remove_content(p, &mut []);
    if p.first().is_some_and(|(_, c)| c.is_negative()) {
        for (_, c) in p.iter_mut() {
            *c = -std::mem::take(c);
        }
    }
}

/// `a * p - c * u * g`, where the leading terms are known to cancel and are
/// skipped on both sides.
fn cancel_leading(a: &BigInt, p: &[Term], c: &BigInt, u: Monomial, g: &[Term]) -> Vec<Term> {
    let scale_p = !a.is_one();
    let mut out = Vec::with_capacity(p.len() + g.len());
    let (mut i, mut j) = (1, 1);
    while i < p.len() && j < g.len() {
        let gm = g[j].0 * u;
        match p[i].0.cmp(&gm) {
            std::cmp::Ordering::Greater => {
                let v = if scale_p { a * &p[i].1 } else { p[i].1.clone() };
                out.push((p[i].0, v));
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push((gm, -(c * &g[j].1)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let v = if scale_p {
                    a * &p[i].1 - c * &g[j].1
                } else {
                    &p[i].1 - c * &g[j].1
                };
                if !v.is_zero() {
                    out.push((gm, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    for t in &p[i..] {
        let v = if scale_p { a * &t.1 } else { t.1.clone() };
        out.push((t.0, v));
    }
    for t in &g[j..] {
        out.push((t.0 * u, -(c * &t.1)));
    }
    out
}

/// Reducers with their leading monomials, in the order they are tried.
struct Reducers<'a> {
    lms: Vec<Monomial>,
    polys: Vec<&'a [Term]>,
}

impl<'a> Reducers<'a> {
    fn find(&self, m: Monomial) -> Option<usize> {
        self.lms.iter().position(|l| l.divides(m))
    }
}

/// Fraction-free reduction. The result equals the true normal form up to a
/// nonzero rational factor. With `full` unset only the leading term is
/// reduced.
fn reduce_integer(mut p: Vec<Term>, reducers: &Reducers<'_>, full: bool) -> Vec<Term> {
    let mut rem: Vec<Term> = Vec::new();
    let mut start = 0;
    while start < p.len() {
        let (m, _) = p[start];
        let Some(k) = reducers.find(m) else {
            if !full {
                break;
            }
            start += 1;
            continue;
        };
        // Terms before `start` are irreducible; move them out.
        rem.extend(p.drain(..start));
        start = 0;
        let g = reducers.polys[k];
        let u = m.quotient(reducers.lms[k]);
        let lc_g = &g[0].1;
        let c = &p[0].1;
        let d = lc_g.gcd(c);
        let (mut a, mut b) = (lc_g / &d, c / &d);
        if a.is_negative() {
            a = -a;
            b = -b;
        }
        p = cancel_leading(&a, &p, &b, u, g);
        if !a.is_one() {
            for (_, v) in rem.iter_mut() {
                *v *= &a;
            }
        }
        remove_content(&mut rem, &mut p);
    }
    rem.extend(p);
    rem
}

fn spoly(ring: Ring, f: &[Term], g: &[Term]) -> Vec<Term> {
    let l = ring.lcm(f[0].0, g[0].0);
    let uf = l.quotient(f[0].0);
    let ug = l.quotient(g[0].0);
    let d = f[0].1.gcd(&g[0].1);
    let a = &g[0].1 / &d;
    let b = &f[0].1 / &d;
    // a*uf*f - b*ug*g; shift f by uf first so `cancel_leading` can be reused.
    let shifted: Vec<Term> = f.iter().map(|(m, c)| (*m * uf, c.clone())).collect();
    cancel_leading(&a, &shifted, &b, ug, g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Task {
    Pair(usize, usize),
    Input(usize),
}

/// Queue key: normal strategy (weighted degree of the lcm), then the lcm
/// itself, then the indices for determinism.
type TaskKey = (u64, Monomial, Task);

struct Buchberger {
    ring: Ring,
    polys: Vec<Vec<Term>>,
    lms: Vec<Monomial>,
    // Indices of the current basis in the Gebauer-Moeller sense: no leading
    // monomial divides another.
    basis: Vec<usize>,
    queue: BTreeSet<TaskKey>,
}

impl Buchberger {
    fn new(ring: Ring) -> Self {
        Buchberger {
            ring,
            polys: Vec::new(),
            lms: Vec::new(),
            basis: Vec::new(),
            queue: BTreeSet::new(),
        }
    }

    fn reducers(&self) -> Reducers<'_> {
        Reducers {
            lms: self.basis.iter().map(|&i| self.lms[i]).collect(),
            polys: self
                .basis
                .iter()
                .map(|&i| self.polys[i].as_slice())
                .collect(),
        }
    }

    fn insert(&mut self, mut h: Vec<Term>) {
        make_primitive(&mut h);
        let idx = self.polys.len();
        let hm = h[0].0;
        self.polys.push(h);
        self.lms.push(hm);

        let ring = self.ring;
        let lcm_with = |g: usize, lms: &[Monomial]| ring.lcm(hm, lms[g]);

        // Criterion M and F over the new pairs, then drop coprime ones.
        let mut candidates: Vec<(usize, Monomial)> = self
            .basis
            .iter()
            .map(|&g| (g, lcm_with(g, &self.lms)))
            .collect();
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        while let Some((g1, l1)) = candidates.pop() {
            let coprime = hm.is_coprime(self.lms[g1]);
            let dominated = candidates
                .iter()
                .chain(kept.iter())
                .any(|&(_, l2)| l2.divides(l1));
            if coprime || !dominated {
                kept.push((g1, l1));
            }
        }
        kept.retain(|&(g, _)| !hm.is_coprime(self.lms[g]));

        // Chain criterion on the old pairs.
        let lms = &self.lms;
        self.queue.retain(|&(_, l, task)| match task {
            Task::Pair(i, j) => {
                !(hm.divides(l) && ring.lcm(lms[i], hm) != l && ring.lcm(hm, lms[j]) != l)
            }
            Task::Input(_) => true,
        });
        for (g, l) in kept {
            self.queue.insert((l.degree(), l, Task::Pair(g, idx)));
        }

        self.basis.retain(|&g| !hm.divides(lms[g]));
        self.basis.push(idx);
    }

    fn run(mut self, inputs: Vec<Vec<Term>>) -> Vec<Vec<Term>> {
        for (k, p) in inputs.iter().enumerate() {
            let lm = p[0].0;
            self.queue.insert((lm.degree(), lm, Task::Input(k)));
        }
        while let Some(key) = self.queue.pop_first() {
            let s = match key.2 {
                Task::Input(k) => inputs[k].clone(),
                Task::Pair(i, j) => spoly(self.ring, &self.polys[i], &self.polys[j]),
            };
            if s.is_empty() {
                continue;
            }
            let h = reduce_integer(s, &self.reducers(), true);
            if !h.is_empty() {
                self.insert(h);
            }
        }
        self.interreduce()
    }

    /// Reduced basis from the minimal one: tail-reduce every element by the
    /// others and sort by leading monomial.
    fn interreduce(self) -> Vec<Vec<Term>> {
        let mut order = self.basis.clone();
        order.sort_by_key(|&i| self.lms[i]);
        let mut out = Vec::with_capacity(order.len());
        for (k, &i) in order.iter().enumerate() {
            let others = Reducers {
                lms: order
                    .iter()
                    .enumerate()
                    .filter(|&(kk, _)| kk != k)
                    .map(|(_, &j)| self.lms[j])
                    .collect(),
                polys: order
                    .iter()
                    .enumerate()
                    .filter(|&(kk, _)| kk != k)
                    .map(|(_, &j)| self.polys[j].as_slice())
                    .collect(),
            };
            // The head is irreducible by the others, so it survives and is
            // scaled together with the tail.
            let full = reduce_integer(self.polys[i].clone(), &others, true);
            out.push(full);
        }
        out
    }
}

/// Reduced Groebner basis: monic, sorted by increasing leading monomial.
/// Two ideals are equal iff their bases are equal.
#[derive(Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    elements: Vec<Polynomial>,
    integer: Vec<Vec<Term>>,
}

impl fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.elements.iter()).finish()
    }
}

impl GroebnerBasis {
    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].leading_monomial() == Some(Monomial::ONE)
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.integer.iter().map(|p| p[0].0).collect()
    }

    fn reducers(&self) -> Reducers<'_> {
        Reducers {
            lms: self.leading_monomials(),
            polys: self.integer.iter().map(Vec::as_slice).collect(),
        }
    }

    /// Exact normal form over the rationals.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, &self.elements)
    }

    /// Membership test; uses the integer representation.
    pub fn contains(&self, f: &Polynomial) -> bool {
        if f.is_zero() {
            return true;
        }
        assert_eq!(f.ring(), self.ring, "polynomial and basis rings differ");
        let p = to_integer_terms(f);
        let r = self.reducers();
        // Top reduction suffices: the remainder is zero iff its leading
        // term can be eliminated every time.
        reduce_integer(p, &r, false).is_empty()
    }
}

/// Division algorithm: the remainder of `f` modulo `basis`.
///
/// The greatest reducible term is always eliminated next, using the first
/// basis element (in the given order) whose leading monomial divides it.
/// Zero basis elements are ignored.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let ring = f.ring();
    let divisors: Vec<(&Polynomial, Monomial, Rational)> = basis
        .iter()
        .filter_map(|g| {
            assert_eq!(g.ring(), ring, "polynomial and basis rings differ");
            let lm = g.leading_monomial()?;
            Some((g, lm, g.leading_coefficient()?.recip()))
        })
        .collect();
    let mut p = f.clone();
    let mut rem: Vec<(Monomial, Rational)> = Vec::new();
    while let Some((m, c)) = p.terms().first().cloned() {
        match divisors.iter().find(|(_, lm, _)| lm.divides(m)) {
            Some((g, lm, inv)) => {
                p = &p - &g.mul_term(m.quotient(*lm), &(&c * inv));
            }
            None => {
                rem.push((m, c));
                p = Polynomial::from_sorted(ring, p.terms()[1..].to_vec());
            }
        }
    }
    Polynomial::from_sorted(ring, rem)
}

/// Reduced Groebner basis of the ideal generated by `gens`.
pub fn buchberger(ring: Ring, gens: &[Polynomial]) -> GroebnerBasis {
    let inputs: Vec<Vec<Term>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            assert_eq!(g.ring(), ring, "generator ring differs from ideal ring");
            to_integer_terms(g)
        })
        .collect();
    let integer = Buchberger::new(ring).run(inputs);
    let integer: Vec<Vec<Term>> = integer
        .into_iter()
        .map(|mut p| {
            make_primitive(&mut p);
            p
        })
        .collect();
    let elements = integer
        .iter()
        .map(|p| monic_from_integer(ring, p))
        .collect();
    GroebnerBasis {
        ring,
        elements,
        integer,
    }
}

/// An ideal given by generators, with a lazily computed reduced basis.
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
    basis: OnceLock<GroebnerBasis>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let basis = OnceLock::new();
        if let Some(b) = self.basis.get() {
            let _ = basis.set(b.clone());
        }
        Ideal {
            ring: self.ring,
            generators: self.generators.clone(),
            basis,
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ideal")
            .field("ring", &self.ring)
            .field("generators", &self.generators.len())
            .field("basis_cached", &self.basis.get().is_some())
            .finish()
    }
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: Ring, generators: Vec<Polynomial>) -> Result<Self, IdealError> {
        for g in &generators {
            if g.ring() != ring {
                return Err(RingError::RingMismatch {
                    left: ring,
                    right: g.ring(),
                }
                .into());
            }
        }
        Ok(Ideal {
            ring,
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            basis: OnceLock::new(),
        })
    }

    fn from_parts(ring: Ring, generators: Vec<Polynomial>) -> Self {
        Ideal {
            ring,
            generators,
            basis: OnceLock::new(),
        }
    }

    fn with_basis(basis: GroebnerBasis) -> Self {
        let ideal = Ideal::from_parts(basis.ring, basis.elements.clone());
        let _ = ideal.basis.set(basis);
        ideal
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn basis(&self) -> &GroebnerBasis {
        self.basis
            .get_or_init(|| buchberger(self.ring, &self.generators))
    }

    pub fn has_cached_basis(&self) -> bool {
        self.basis.get().is_some()
    }

    /// The same ideal generated by its reduced basis.
    pub fn from_basis(&self) -> Ideal {
        Ideal::with_basis(self.basis().clone())
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.basis().contains(f)
    }

    /// First generator of `self` outside `other`, if any.
    pub fn first_non_member<'a>(&'a self, other: &Ideal) -> Option<&'a Polynomial> {
        let b = other.basis();
        self.generators.iter().find(|g| !b.contains(g))
    }

    pub fn is_subset_of(&self, other: &Ideal) -> bool {
        self.first_non_member(other).is_none()
    }

    pub fn equals(&self, other: &Ideal) -> bool {
        self.ring == other.ring && self.basis() == other.basis()
    }

    fn check_ring(&self, other: &Ideal) -> Result<(), IdealError> {
        if self.ring != other.ring {
            return Err(RingError::RingMismatch {
                left: self.ring,
                right: other.ring,
            }
            .into());
        }
        Ok(())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal, IdealError> {
        self.check_ring(other)?;
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ok(Ideal::from_parts(self.ring, dedup(gens)))
    }

    /// Generators are the pairwise products, with duplicates (up to a
    /// scalar) removed.
    pub fn product(&self, other: &Ideal) -> Result<Ideal, IdealError> {
        self.check_ring(other)?;
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a * b);
            }
        }
        Ok(Ideal::from_parts(self.ring, dedup(gens)))
    }

    /// `I^n` by iterated multiplication.
    pub fn power(&self, n: u32) -> Result<Ideal, IdealError> {
        if n == 0 {
            return Err(IdealError::ZeroPower);
        }
        let mut acc = Ideal::from_parts(self.ring, self.generators.clone());
        for _ in 1..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `I ∩ J`, eliminating `t` from `t*I + (1 - t)*J`.
    pub fn intersection(&self, other: &Ideal) -> Result<Ideal, IdealError> {
        self.check_ring(other)?;
        if self.ring.has_aux() {
            return Err(RingError::RingMismatch {
                left: self.ring,
                right: self.ring.without_aux(),
            }
            .into());
        }
        let aux = self.ring.with_aux();
        let t = Polynomial::variable(aux, aux.arity() - 1)?;
        let one_minus_t = &Polynomial::one(aux) - &t;
        let mut gens = Vec::new();
        for g in self.generating_set() {
            gens.push(&t * &g.embed(aux)?);
        }
        for g in other.generating_set() {
            gens.push(&one_minus_t * &g.embed(aux)?);
        }
        let gb = buchberger(aux, &gens);
        let kept: Vec<Polynomial> = gb
            .elements()
            .iter()
            .filter(|p| p.leading_monomial().is_some_and(|m| m.aux_exponent() == 0))
            .map(|p| p.embed(self.ring))
            .collect::<Result<_, _>>()?;
        // A reduced basis restricted to t-free elements is again reduced.
        let integer = kept.iter().map(to_integer_terms).collect::<Vec<_>>();
        let integer = integer
            .into_iter()
            .map(|mut p| {
                make_primitive(&mut p);
                p
            })
            .collect();
        Ok(Ideal::with_basis(GroebnerBasis {
            ring: self.ring,
            elements: kept,
            integer,
        }))
    }

    /// Whichever of generators and cached basis is smaller.
    fn generating_set(&self) -> &[Polynomial] {
        match self.basis.get() {
            Some(b) if b.len() <= self.generators.len() => b.elements(),
            _ => &self.generators,
        }
    }

    /// `(I : f) = { g : g f ∈ I }`.
    pub fn colon(&self, f: &Polynomial) -> Result<Ideal, IdealError> {
        if f.is_zero() {
            return Err(IdealError::ZeroDivisor);
        }
        if f.ring() != self.ring {
            return Err(RingError::RingMismatch {
                left: self.ring,
                right: f.ring(),
            }
            .into());
        }
        let principal = Ideal::from_parts(self.ring, vec![f.clone()]);
        let meet = self.intersection(&principal)?;
        let quotients: Vec<Polynomial> = meet
            .generators()
            .iter()
            .map(|g| g.div_exact(f).expect("element of (f) is divisible by f"))
            .collect();
        Ok(Ideal::from_parts(self.ring, quotients))
    }

    /// `(I : f^∞)`, iterating colons until the reduced basis stops changing.
    pub fn saturate(&self, f: &Polynomial) -> Result<Ideal, IdealError> {
        let mut current = self.from_basis();
        loop {
            let next = current.colon(f)?;
            if next.equals(&current) {
                return Ok(current);
            }
            current = next.from_basis();
        }
    }
}

/// Normalizes generators to primitive form and removes duplicates, keeping
/// the first occurrence.
fn dedup(gens: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut seen = HashSet::with_capacity(gens.len());
    let mut out = Vec::with_capacity(gens.len());
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let p = g.primitive();
        if seen.insert(p.clone()) {
            out.push(p);
        }
    }
    out
}

/// All S-polynomials of pairs of basis elements reduce to zero.
pub fn satisfies_buchberger_criterion(basis: &GroebnerBasis) -> bool {
    let r = basis.reducers();
    let n = basis.integer.len();
    (0..n).all(|i| {
        (i + 1..n).all(|j| {
            let s = spoly(basis.ring, &basis.integer[i], &basis.integer[j]);
            // Top reduction alone decides whether the remainder vanishes.
            s.is_empty() || reduce_integer(s, &r, false).is_empty()
        })
    })
}

/// Minimal and reduced: no leading monomial divides any term of another
/// element, and every element is monic.
pub fn is_reduced(basis: &GroebnerBasis) -> bool {
    let lms = basis.leading_monomials();
    basis.elements.iter().enumerate().all(|(i, p)| {
        p.leading_coefficient().is_some_and(|c| c.is_one())
            && p.terms().iter().all(|(m, _)| {
                lms.iter()
                    .enumerate()
                    .all(|(j, l)| j == i || !l.divides(*m))
            })
    }) && lms.windows(2).all(|w| w[0] < w[1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::make_curve;
    use crate::ring::Weights;

    fn mono_poly(ring: Ring, e: &[u32]) -> Polynomial {
        Polynomial::from_terms(ring, [(num_bigint::BigInt::from(1), e.to_vec())]).unwrap()
    }

    #[test]
    fn normal_form_examples() {
        let c = make_curve(1, 1).unwrap();
        assert!(normal_form(c.g1(), &[c.g1().clone()]).is_zero());
        let sq = c.prime().power(2).unwrap();
        let x1f = &c.x1() * c.f();
        assert!(sq.basis().normal_form(&x1f).is_zero());
        assert!(!sq.basis().normal_form(c.f()).is_zero());
        assert!(!normal_form(c.f(), sq.basis().elements()).is_zero());
    }

    #[test]
    fn buchberger_examples() {
        let c = make_curve(1, 1).unwrap();
        let gb = buchberger(c.ring(), &[c.g3().clone()]);
        assert_eq!(gb.elements(), &[c.g3().monic()]);
        let ring = c.ring();
        let x1 = mono_poly(ring, &[1, 0, 0]);
        let x2 = mono_poly(ring, &[0, 1, 0]);
        let gb = buchberger(ring, &[x1.clone(), x2.clone()]);
        assert_eq!(gb.elements(), &[x1.clone(), x2]);
        let gb = c.prime().basis();
        assert!(satisfies_buchberger_criterion(gb));
        assert!(is_reduced(gb));
        assert!(buchberger(ring, &[]).is_empty());
        assert!(buchberger(ring, &[Polynomial::one(ring), x1.clone()]).is_unit());
    }

    #[test]
    fn membership() {
        for q in 1..=2 {
            let c = make_curve(q, 1).unwrap();
            assert!(c.prime().contains(c.g1()));
            for j in 1..=q + 1 {
                let pj = c.ordinary_power(2 * j - 1).unwrap();
                assert!(pj.contains(&c.f().pow(j)), "q={q} j={j}");
            }
            for i in 0..3 {
                let xi = Polynomial::variable(c.ring(), i).unwrap();
                assert!(c.ordinary_power(2).unwrap().contains(&(&xi * c.f())));
            }
        }
        let c = make_curve(1, 2).unwrap();
        assert!(!c.ordinary_power(4).unwrap().contains(&c.f().pow(2)));
    }

    #[test]
    fn subsets_and_equality() {
        let c = make_curve(1, 1).unwrap();
        let s2 = c.symbolic_power_structural(2).unwrap();
        let s3 = c.symbolic_power_structural(3).unwrap();
        assert!(s3.is_subset_of(&s2));
        assert!(!s2.is_subset_of(&s3));
        assert!(s2.is_subset_of(&s2));
        for m in [1, 2] {
            let c = make_curve(1, m).unwrap();
            let s4 = c.symbolic_power_structural(4).unwrap();
            assert!(s4.is_subset_of(&c.ordinary_power(3).unwrap()));
            assert!(!s4.is_subset_of(&c.ordinary_power(4).unwrap()));
        }
    }

    #[test]
    fn sums_products_powers() {
        let c = make_curve(1, 1).unwrap();
        let p = c.prime();
        assert!(p.power(1).unwrap().equals(p));
        assert_eq!(p.power(2).unwrap().generators().len(), 6);
        assert_eq!(p.power(0).unwrap_err(), IdealError::ZeroPower);
        let s2 = c.symbolic_power_structural(2).unwrap();
        let prod = p.product(&s2).unwrap();
        assert!(prod.equals(&c.symbolic_power_structural(3).unwrap()));
        let sum = p.sum(&c.maximal().clone()).unwrap();
        assert!(sum.equals(c.maximal()));
    }

    #[test]
    fn colon_examples() {
        let ring = Ring::plane(5, 7);
        let i = Ideal::new(
            ring,
            vec![mono_poly(ring, &[2, 0]), mono_poly(ring, &[1, 1])],
        )
        .unwrap();
        let x2 = mono_poly(ring, &[1, 0]);
        let expected = Ideal::new(ring, vec![x2.clone(), mono_poly(ring, &[0, 1])]).unwrap();
        assert!(i.colon(&x2).unwrap().equals(&expected));
        assert!(i.colon(&Polynomial::one(ring)).unwrap().equals(&i));
        assert_eq!(
            i.colon(&Polynomial::zero(ring)).unwrap_err(),
            IdealError::ZeroDivisor
        );

        let c = make_curve(1, 1).unwrap();
        for n in 1..=4 {
            let s = c.symbolic_power_structural(n).unwrap();
            assert!(s.colon(&c.x1()).unwrap().equals(&s));
        }
    }

    #[test]
    fn saturation_examples() {
        let c = make_curve(1, 1).unwrap();
        let ring = c.ring();
        let x1 = c.x1();
        assert!(c.prime().saturate(&x1).unwrap().equals(c.prime()));
        let i = Ideal::new(ring, vec![mono_poly(ring, &[1, 1, 0])]).unwrap();
        let x2 = Ideal::new(ring, vec![mono_poly(ring, &[0, 1, 0])]).unwrap();
        assert!(i.saturate(&x1).unwrap().equals(&x2));
        let sat = c.ordinary_power(2).unwrap().saturate(&x1).unwrap();
        assert!(sat.equals(c.second_symbolic_power()));
    }

    #[test]
    fn intersection_of_monomial_ideals() {
        let ring = Ring::space(&Weights::new(1, 2, 3).unwrap());
        let a = Ideal::new(ring, vec![mono_poly(ring, &[1, 0, 0])]).unwrap();
        let b = Ideal::new(ring, vec![mono_poly(ring, &[0, 1, 0])]).unwrap();
        let ab = Ideal::new(ring, vec![mono_poly(ring, &[1, 1, 0])]).unwrap();
        assert!(a.intersection(&b).unwrap().equals(&ab));
        assert!(a.intersection(&a).unwrap().equals(&a));
    }

    #[test]
    fn canonical_across_presentations() {
        let c = make_curve(1, 2).unwrap();
        let oracle = c.symbolic_power_oracle(2).unwrap();
        assert_eq!(oracle.basis(), c.second_symbolic_power().basis());
        let cached = c.symbolic_power_structural(4).unwrap();
        let rebuilt = Ideal::new(
            c.ring(),
            cached.generators().iter().rev().cloned().collect(),
        )
        .unwrap();
        assert_eq!(rebuilt.basis(), cached.basis());
    }

    #[test]
    fn ring_mismatch_rejected() {
        let c = make_curve(1, 1).unwrap();
        let plane = Ring::plane(4, 5);
        assert!(Ideal::new(plane, vec![c.g1().clone()]).is_err());
        let other = make_curve(1, 2).unwrap();
        assert!(c.prime().sum(other.prime()).is_err());
    }
}

//! Exact sparse polynomials over the rationals in at most four variables.
//!
//! Every ring carries positive integer weights for its variables. Monomials
//! are ordered by weighted degree first and lexicographically after that,
//! with `x1 > x2 > x3`. Rings with an auxiliary elimination variable `t`
//! (weight zero) use a block order in which the power of `t` is compared
//! before anything else.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("expected {expected} exponents, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("operands belong to different rings ({left} vs {right})")]
    RingMismatch { left: Ring, right: Ring },
    #[error("exponent vector {0:?} does not fit the packed monomial representation")]
    ExponentOverflow(Vec<u32>),
    #[error("invalid weights: {0}")]
    InvalidWeights(String),
    #[error("variable index {index} out of range for a ring with {arity} variables")]
    NoSuchVariable { index: usize, arity: usize },
}

/// Weights `(d, d + m, d + 2m)` of the variables `x1, x2, x3` for the curve
/// with parameters `(q, m)`, where `d = 2q + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Weights {
    d1: u32,
    d2: u32,
    d3: u32,
}

impl Weights {
    pub fn new(d1: u32, d2: u32, d3: u32) -> Result<Self, RingError> {
        if d1 == 0 || d2 <= d1 || d3 <= d2 {
            return Err(RingError::InvalidWeights(format!(
                "({d1}, {d2}, {d3}) is not strictly increasing and positive"
            )));
        }
        if d2 - d1 != d3 - d2 {
            return Err(RingError::InvalidWeights(format!(
                "({d1}, {d2}, {d3}) is not an arithmetic progression"
            )));
        }
        if d1.is_multiple_of(2) {
            return Err(RingError::InvalidWeights(format!("d1 = {d1} is even")));
        }
        if d1.gcd(&(d2 - d1)) != 1 {
            return Err(RingError::InvalidWeights(format!(
                "gcd({d1}, {}) != 1",
                d2 - d1
            )));
        }
        Ok(Weights { d1, d2, d3 })
    }

    pub fn for_curve(q: u32, m: u32) -> Result<Self, RingError> {
        if q == 0 || m == 0 {
            return Err(RingError::InvalidWeights(format!(
                "q = {q} and m = {m} must both be positive"
            )));
        }
        let d = 2 * q + 1;
        Weights::new(d, d + m, d + 2 * m)
    }

    pub fn d1(&self) -> u32 {
        self.d1
    }

    pub fn d2(&self) -> u32 {
        self.d2
    }

    pub fn d3(&self) -> u32 {
        self.d3
    }

    pub fn m(&self) -> u32 {
        self.d2 - self.d1
    }

    pub fn q(&self) -> u32 {
        (self.d1 - 1) / 2
    }
}

/// Which of the curve variables a ring uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variables {
    /// `x1, x2, x3`
    Space,
    /// `x2, x3`, the quotient by `x1`.
    Plane,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Weighted degree, ties broken lexicographically.
    WeightedLex,
    /// Power of the auxiliary variable first, then `WeightedLex`.
    AuxBlock,
}

/// A weighted polynomial ring with at most three curve variables and an
/// optional auxiliary variable `t` of weight zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: Variables,
    weights: [u32; 3],
    aux: bool,
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.names().join(",");
        let w: Vec<String> = (0..self.arity())
            .map(|i| self.weight(i).to_string())
            .collect();
        write!(f, "Q[{names}] wt ({})", w.join(","))
    }
}

impl Ring {
    pub fn space(weights: &Weights) -> Self {
        Ring {
            vars: Variables::Space,
            weights: [weights.d1, weights.d2, weights.d3],
            aux: false,
        }
    }

    pub fn plane(d2: u32, d3: u32) -> Self {
        Ring {
            vars: Variables::Plane,
            weights: [d2, d3, 0],
            aux: false,
        }
    }

    /// Same ring with the auxiliary elimination variable adjoined.
    pub fn with_aux(self) -> Self {
        Ring { aux: true, ..self }
    }

    pub fn without_aux(self) -> Self {
        Ring { aux: false, ..self }
    }

    pub fn has_aux(&self) -> bool {
        self.aux
    }

    pub fn variables(&self) -> Variables {
        self.vars
    }

    pub fn order(&self) -> MonomialOrder {
        if self.aux {
            MonomialOrder::AuxBlock
        } else {
            MonomialOrder::WeightedLex
        }
    }

    fn base_arity(&self) -> usize {
        match self.vars {
            Variables::Space => 3,
            Variables::Plane => 2,
        }
    }

    /// Number of variables; the auxiliary variable, when present, is last.
    pub fn arity(&self) -> usize {
        self.base_arity() + usize::from(self.aux)
    }

    pub fn names(&self) -> Vec<&'static str> {
        let mut names = match self.vars {
            Variables::Space => vec!["x1", "x2", "x3"],
            Variables::Plane => vec!["x2", "x3"],
        };
        if self.aux {
            names.push("t");
        }
        names
    }

    pub fn weight(&self, index: usize) -> u32 {
        if index < self.base_arity() {
            self.weights[index]
        } else {
            0
        }
    }

    pub fn weighted_degree(&self, exponents: &[u32]) -> Result<u64, RingError> {
        self.check_arity(exponents.len())?;
        Ok(exponents
            .iter()
            .enumerate()
            .map(|(i, &e)| u64::from(e) * u64::from(self.weight(i)))
            .sum())
    }

    fn check_arity(&self, got: usize) -> Result<(), RingError> {
        if got != self.arity() {
            return Err(RingError::ArityMismatch {
                expected: self.arity(),
                got,
            });
        }
        Ok(())
    }

    pub fn monomial(&self, exponents: &[u32]) -> Result<Monomial, RingError> {
        self.check_arity(exponents.len())?;
        let mut slots = [0u32; 4];
        let base = self.base_arity();
        slots[..base].copy_from_slice(&exponents[..base]);
        if self.aux {
            slots[AUX_SLOT] = exponents[base];
        }
        let degree = self.weighted_degree(exponents)?;
        Monomial::pack(slots, degree).ok_or_else(|| RingError::ExponentOverflow(exponents.to_vec()))
    }

    pub fn exponents(&self, mono: Monomial) -> Vec<u32> {
        let slots = mono.slots();
        let mut out = slots[..self.base_arity()].to_vec();
        if self.aux {
            out.push(slots[AUX_SLOT]);
        }
        out
    }

    pub fn variable(&self, index: usize) -> Result<Monomial, RingError> {
        if index >= self.arity() {
            return Err(RingError::NoSuchVariable {
                index,
                arity: self.arity(),
            });
        }
        let mut e = vec![0; self.arity()];
        e[index] = 1;
        self.monomial(&e)
    }

    fn slot_degree(&self, slots: &[u32; 4]) -> u64 {
        (0..3)
            .map(|i| u64::from(slots[i]) * u64::from(self.weights[i]))
            .sum()
    }

    /// Least common multiple.
    ///
    /// # Panics
    /// If the result overflows the packed representation.
    pub fn lcm(&self, a: Monomial, b: Monomial) -> Monomial {
        let (sa, sb) = (a.slots(), b.slots());
        let mut s = [0u32; 4];
        for i in 0..4 {
            s[i] = sa[i].max(sb[i]);
        }
        let deg = self.slot_degree(&s);
        Monomial::pack(s, deg).expect("monomial exponent overflow")
    }

    pub fn gcd(&self, a: Monomial, b: Monomial) -> Monomial {
        let (sa, sb) = (a.slots(), b.slots());
        let mut s = [0u32; 4];
        for i in 0..4 {
            s[i] = sa[i].min(sb[i]);
        }
        let deg = self.slot_degree(&s);
        Monomial::pack(s, deg).expect("gcd never overflows")
    }

    pub fn is_constant_monomial(&self, m: Monomial) -> bool {
        m == Monomial::ONE
    }
}

// Packed layout, high to low: aux exponent (8 bits), weighted degree (20
// bits), then the three curve exponents (12 bits each). The top bit of every
// field is a guard bit that must stay clear; with it, `u64` comparison is the
// monomial order and divisibility is a single subtraction.
const AUX_SLOT: usize = 3;
const E2_SHIFT: u32 = 0;
const E1_SHIFT: u32 = 12;
const E0_SHIFT: u32 = 24;
const DEG_SHIFT: u32 = 36;
const AUX_SHIFT: u32 = 56;
const EXP_BITS: u32 = 12;
const DEG_BITS: u32 = 20;
const AUX_BITS: u32 = 8;
const GUARD: u64 = (1 << (E2_SHIFT + EXP_BITS - 1))
    | (1 << (E1_SHIFT + EXP_BITS - 1))
    | (1 << (E0_SHIFT + EXP_BITS - 1))
    | (1 << (DEG_SHIFT + DEG_BITS - 1))
    | (1 << (AUX_SHIFT + AUX_BITS - 1));

/// A monomial in packed form. Only meaningful together with its [`Ring`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(u64);

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.slots();
        write!(f, "Monomial({:?}, deg {})", s, self.degree())
    }
}

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    fn pack(slots: [u32; 4], degree: u64) -> Option<Monomial> {
        let fits = |v: u64, bits: u32| v < (1u64 << (bits - 1));
        if !(fits(u64::from(slots[0]), EXP_BITS)
            && fits(u64::from(slots[1]), EXP_BITS)
            && fits(u64::from(slots[2]), EXP_BITS)
            && fits(u64::from(slots[AUX_SLOT]), AUX_BITS)
            && fits(degree, DEG_BITS))
        {
            return None;
        }
        Some(Monomial(
            (u64::from(slots[AUX_SLOT]) << AUX_SHIFT)
                | (degree << DEG_SHIFT)
                | (u64::from(slots[0]) << E0_SHIFT)
                | (u64::from(slots[1]) << E1_SHIFT)
                | (u64::from(slots[2]) << E2_SHIFT),
        ))
    }

    fn slots(self) -> [u32; 4] {
        let field = |shift: u32, bits: u32| ((self.0 >> shift) & ((1 << bits) - 1)) as u32;
        [
            field(E0_SHIFT, EXP_BITS),
            field(E1_SHIFT, EXP_BITS),
            field(E2_SHIFT, EXP_BITS),
            field(AUX_SHIFT, AUX_BITS),
        ]
    }

    /// Weighted degree (the auxiliary variable has weight zero).
    pub fn degree(self) -> u64 {
        (self.0 >> DEG_SHIFT) & ((1 << DEG_BITS) - 1)
    }

    pub fn aux_exponent(self) -> u32 {
        self.slots()[AUX_SLOT]
    }

    #[inline]
    pub fn divides(self, other: Monomial) -> bool {
        ((other.0 | GUARD).wrapping_sub(self.0)) & GUARD == GUARD
    }

    /// Product, or `None` on overflow of the packed fields.
    #[inline]
    pub fn checked_mul(self, other: Monomial) -> Option<Monomial> {
        let p = self.0 + other.0;
        if p & GUARD != 0 || p < self.0 {
            None
        } else {
            Some(Monomial(p))
        }
    }

    /// Quotient `self / divisor`, which must divide `self`.
    #[inline]
    pub fn quotient(self, divisor: Monomial) -> Monomial {
        debug_assert!(divisor.divides(self));
        Monomial(self.0 - divisor.0)
    }

    pub fn is_coprime(self, other: Monomial) -> bool {
        let (a, b) = (self.slots(), other.slots());
        (0..4).all(|i| a[i] == 0 || b[i] == 0)
    }
}

impl std::ops::Mul for Monomial {
    type Output = Monomial;

    /// # Panics
    /// If an exponent or the degree leaves the packed range.
    fn mul(self, rhs: Monomial) -> Monomial {
        self.checked_mul(rhs).expect("monomial exponent overflow")
    }
}

/// Result of a weighted homogeneity test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    /// The zero polynomial: homogeneous of every degree, so it has none.
    Zero,
    Homogeneous(u64),
    Inhomogeneous,
}

impl Homogeneity {
    pub fn degree(self) -> Option<u64> {
        match self {
            Homogeneity::Homogeneous(d) => Some(d),
            _ => None,
        }
    }
}

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are stored strictly decreasing in the monomial order and no stored
/// coefficient is zero, so equality of values is structural equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, Rational)>,
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Polynomial {
    pub fn zero(ring: Ring) -> Self {
        Polynomial {
            ring,
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: Ring, c: Rational) -> Self {
        Self::term(ring, Monomial::ONE, c)
    }

    pub fn one(ring: Ring) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn term(ring: Ring, mono: Monomial, c: Rational) -> Self {
        let terms = if c.is_zero() { vec![] } else { vec![(mono, c)] };
        Polynomial { ring, terms }
    }

    pub fn variable(ring: Ring, index: usize) -> Result<Self, RingError> {
        Ok(Self::term(ring, ring.variable(index)?, Rational::one()))
    }

    /// Builds a polynomial from `(coefficient, exponents)` pairs; repeated
    /// monomials are summed.
    pub fn from_terms<I, C>(ring: Ring, terms: I) -> Result<Self, RingError>
    where
        I: IntoIterator<Item = (C, Vec<u32>)>,
        C: Into<Rational>,
    {
        let mut raw = Vec::new();
        for (c, e) in terms {
            raw.push((ring.monomial(&e)?, c.into()));
        }
        Ok(Self::from_unsorted(ring, raw))
    }

    pub(crate) fn from_unsorted(ring: Ring, mut raw: Vec<(Monomial, Rational)>) -> Self {
        raw.sort_unstable_by_key(|t| std::cmp::Reverse(t.0));
        let mut terms: Vec<(Monomial, Rational)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            match terms.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => terms.push((m, c)),
            }
        }
        terms.retain(|(_, c)| !c.is_zero());
        Polynomial { ring, terms }
    }

    /// Trusted constructor: `terms` already strictly decreasing and nonzero.
    pub(crate) fn from_sorted(ring: Ring, terms: Vec<(Monomial, Rational)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { ring, terms }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.0)
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn homogeneity(&self) -> Homogeneity {
        let Some((first, _)) = self.terms.first() else {
            return Homogeneity::Zero;
        };
        let d = first.degree();
        if self.terms.iter().all(|(m, _)| m.degree() == d) {
            Homogeneity::Homogeneous(d)
        } else {
            Homogeneity::Inhomogeneous
        }
    }

    fn same_ring(&self, other: &Polynomial) -> Result<(), RingError> {
        if self.ring != other.ring {
            return Err(RingError::RingMismatch {
                left: self.ring,
                right: other.ring,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, RingError> {
        self.same_ring(other)?;
        Ok(self.combine(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, RingError> {
        self.same_ring(other)?;
        Ok(self.combine(other, true))
    }

    fn combine(&self, other: &Polynomial, subtract: bool) -> Polynomial {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let sign = |c: &Rational| if subtract { -c.clone() } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0, sign(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if subtract {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (*m, sign(c))));
        Polynomial::from_sorted(self.ring, out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, RingError> {
        self.same_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.ring));
        }
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                raw.push((*ma * *mb, ca * cb));
            }
        }
        Ok(Polynomial::from_unsorted(self.ring, raw))
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.ring);
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ring);
        }
        let terms = self.terms.iter().map(|(m, a)| (*m, a * c)).collect();
        Polynomial::from_sorted(self.ring, terms)
    }

    pub fn mul_term(&self, mono: Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ring);
        }
        let terms = self.terms.iter().map(|(m, a)| (*m * mono, a * c)).collect();
        Polynomial::from_sorted(self.ring, terms)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Substitutes zero for the variable at `index`.
    pub fn set_variable_zero(&self, index: usize) -> Result<Polynomial, RingError> {
        let var = self.ring.variable(index)?;
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| !var.divides(*m))
            .cloned()
            .collect();
        Ok(Polynomial::from_sorted(self.ring, terms))
    }

    /// Moves the polynomial into `target`, which must share the curve
    /// variables. Fails if an auxiliary exponent cannot be represented.
    pub fn embed(&self, target: Ring) -> Result<Polynomial, RingError> {
        if target.without_aux() != self.ring.without_aux() {
            return Err(RingError::RingMismatch {
                left: self.ring,
                right: target,
            });
        }
        if !target.has_aux() && self.terms.iter().any(|(m, _)| m.aux_exponent() > 0) {
            return Err(RingError::RingMismatch {
                left: self.ring,
                right: target,
            });
        }
        // Curve slots and degree are shared, so the packed values carry over.
        Ok(Polynomial {
            ring: target,
            terms: self.terms.clone(),
        })
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        if self.ring != divisor.ring {
            return None;
        }
        let (dm, dc) = divisor.terms.first()?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            if !dm.divides(m) {
                return None;
            }
            let qm = m.quotient(*dm);
            let qc = c / dc;
            rem = &rem - &divisor.mul_term(qm, &qc);
            quot.push((qm, qc));
        }
        Some(Polynomial::from_sorted(self.ring, quot))
    }

    /// The least common multiple of the coefficient denominators divided by
    /// the gcd of the numerators, with the sign that makes the leading
    /// coefficient positive. Multiplying by it gives a primitive integer
    /// polynomial.
    pub fn primitive_scale(&self) -> Rational {
        if self.is_zero() {
            return Rational::one();
        }
        let mut den = BigInt::one();
        let mut num = BigInt::zero();
        for (_, c) in &self.terms {
            den = den.lcm(c.denom());
            num = num.gcd(c.numer());
        }
        let mut s = Rational::new(den, num);
        if self.terms[0].1.is_negative() {
            s = -s;
        }
        s
    }

    pub fn primitive(&self) -> Polynomial {
        self.scale(&self.primitive_scale())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl std::ops::$tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;

            /// # Panics
            /// If the operands belong to different rings.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }

        impl std::ops::$tr<Polynomial> for Polynomial {
            type Output = Polynomial;

            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect();
        Polynomial::from_sorted(self.ring, terms)
    }
}

impl std::ops::Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, ring: Ring, m: Monomial) -> fmt::Result {
    let names = ring.names();
    let exps = ring.exponents(m);
    // The auxiliary variable is the greatest, so it is printed first.
    let mut order: Vec<usize> = (0..exps.len()).collect();
    if ring.has_aux() {
        order.rotate_right(1);
    }
    let mut first = true;
    for i in order {
        let e = exps[i];
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            f.write_str(names[i])?;
        } else {
            write!(f, "{}^{}", names[i], e)?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    /// Canonical text form, e.g. `-x1^5 + 3*x1^2*x2*x3 - x1*x2^3 - x3^3`,
    /// terms in decreasing monomial order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if *m == Monomial::ONE {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                write_monomial(f, self.ring, *m)?;
            }
        }
        Ok(())
    }
}

//! Initial degree, Waldschmidt constant, the containment numbers `rho_n`,
//! resurgence, and the containment and degree inequalities built on them.
//!
//! Every comparison is exact; rationals are `BigRational`.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::curve::{CurveError, CurveIdeal, CurveParams};
use crate::groebner::{Ideal, IdealError};
use crate::monomial::build_in;
use crate::regularity::{regularity_closed, RegularityError};
use crate::ring::{Homogeneity, Polynomial, Rational, RingError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("alpha of the zero ideal is undefined")]
    ZeroIdeal,
    #[error("ideal has an inhomogeneous basis element")]
    Inhomogeneous,
    #[error("index n must be at least 1")]
    ZeroIndex,
    #[error("rho_{n} scan passed the cap r = {cap} without finding a non-containment")]
    ScanCapExceeded { n: u32, cap: u32 },
    #[error("need n_max >= 2 (got {0})")]
    RangeTooSmall(u32),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Regularity(#[from] RegularityError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

fn ratio(a: u64, b: u64) -> Rational {
    Rational::new(a.into(), b.into())
}

/// Least weighted degree of a nonzero element, read off the reduced basis.
pub fn alpha(ideal: &Ideal) -> Result<u64, InvariantError> {
    let basis = ideal.basis();
    let mut best: Option<u64> = None;
    for p in basis.elements() {
        match p.homogeneity() {
            Homogeneity::Homogeneous(d) => best = Some(best.map_or(d, |b| b.min(d))),
            _ => return Err(InvariantError::Inhomogeneous),
        }
    }
    best.ok_or(InvariantError::ZeroIdeal)
}

/// `alpha(p^(n))`: `15 (n/2)` or `15 (n-1)/2 + 8` at `(1, 1)`, and `2 n d2`
/// everywhere else.
pub fn alpha_symbolic_closed(q: u32, m: u32, n: u32) -> Result<u64, InvariantError> {
    let params = CurveParams::new(q, m)?;
    if n == 0 {
        return Err(InvariantError::ZeroIndex);
    }
    let n = u64::from(n);
    Ok(if (q, m) == (1, 1) {
        if n % 2 == 0 {
            15 * (n / 2)
        } else {
            15 * ((n - 1) / 2) + 8
        }
    } else {
        2 * n * u64::from(params.weights().d2())
    })
}

/// Waldschmidt constant: `15/2` at `(1, 1)`, `2 d2` otherwise.
pub fn gamma_closed(q: u32, m: u32) -> Result<Rational, InvariantError> {
    let params = CurveParams::new(q, m)?;
    Ok(if (q, m) == (1, 1) {
        ratio(15, 2)
    } else {
        Rational::from_integer((2 * params.weights().d2()).into())
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WaldschmidtEstimate {
    /// `min alpha(p^(n)) / n` over `1 <= n <= n_max`.
    pub estimate: Rational,
    /// Smallest `n` attaining the minimum.
    pub attained_at: u32,
    pub closed: Rational,
    /// Computed `alpha(p^(n))` for `n = 1..=n_max`.
    pub alphas: Vec<u64>,
}

pub fn waldschmidt(curve: &CurveIdeal, n_max: u32) -> Result<WaldschmidtEstimate, InvariantError> {
    if n_max < 2 {
        return Err(InvariantError::RangeTooSmall(n_max));
    }
    let mut alphas = Vec::new();
    let mut best: Option<(Rational, u32)> = None;
    for n in 1..=n_max {
        let a = alpha(&*curve.symbolic_power_structural(n)?)?;
        alphas.push(a);
        let r = ratio(a, u64::from(n));
        if best.as_ref().is_none_or(|(b, _)| r < *b) {
            best = Some((r, n));
        }
    }
    let (estimate, attained_at) = best.expect("n_max >= 2");
    let p = curve.params();
    Ok(WaldschmidtEstimate {
        estimate,
        attained_at,
        closed: gamma_closed(p.q(), p.m())?,
        alphas,
    })
}

/// `rho_n(p)` from the closed table: write `n = k(2q+2) + j` with
/// `0 <= j <= 2q+1`; the value is `k(2q+1) + j + 1` for `j` in `{0, 1}` and
/// `k(2q+1) + j` otherwise. `rho_1 = 2` is taken as a convention (the
/// `j = 1` row with `k = 0`).
pub fn rho_n_closed(q: u32, n: u32) -> Result<u32, InvariantError> {
    if n == 0 {
        return Err(InvariantError::ZeroIndex);
    }
    let period = 2 * q + 2;
    let (k, j) = (n / period, n % period);
    Ok(if j <= 1 {
        k * (2 * q + 1) + j + 1
    } else {
        k * (2 * q + 1) + j
    })
}

#[derive(Debug, Clone)]
pub struct RhoEntry {
    pub n: u32,
    pub value: u32,
    /// Generator of `p^(n)` outside `p^value`.
    pub witness: Polynomial,
    /// Whether the scan starting just below the closed form had to fall
    /// back to a scan from `r = 1`.
    pub fell_back: bool,
}

/// Smallest `r` with `p^(n)` not contained in `p^r`.
///
/// The scan starts at `closed - 1`; if containment already fails there it
/// restarts from `r = 1`, so the result never depends on the closed form.
pub fn rho_n_computed(curve: &CurveIdeal, n: u32, cap: u32) -> Result<RhoEntry, InvariantError> {
    if n == 0 {
        return Err(InvariantError::ZeroIndex);
    }
    let sym = curve.symbolic_power_structural(n)?;
    let start = rho_n_closed(curve.params().q(), n)?
        .saturating_sub(1)
        .max(1);
    let scan = |from: u32| -> Result<(u32, Polynomial), InvariantError> {
        for r in from..=cap {
            if let Some(w) = sym.first_non_member(&*curve.ordinary_power(r)?) {
                return Ok((r, w.clone()));
            }
        }
        Err(InvariantError::ScanCapExceeded { n, cap })
    };
    let (value, witness) = scan(start)?;
    if value == start && start > 1 {
        let (value, witness) = scan(1)?;
        return Ok(RhoEntry {
            n,
            value,
            witness,
            fell_back: true,
        });
    }
    Ok(RhoEntry {
        n,
        value,
        witness,
        fell_back: false,
    })
}

/// Verifies a computed entry: the witness lies outside `p^value` and all of
/// `p^(n)` lies in `p^(value - 1)`.
pub fn verify_rho_entry(curve: &CurveIdeal, entry: &RhoEntry) -> Result<bool, InvariantError> {
    let outside = !curve.ordinary_power(entry.value)?.contains(&entry.witness);
    let sym = curve.symbolic_power_structural(entry.n)?;
    let inside = entry.value == 1 || sym.is_subset_of(&*curve.ordinary_power(entry.value - 1)?);
    Ok(outside && inside && sym.contains(&entry.witness))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessCheck {
    pub k: u32,
    /// `f^(k(q+1))` lies in `p^(k(2q+2))` and outside `p^(k(2q+1)+1)`.
    pub f_power: bool,
    /// `g1 f^(k(q+1))` lies in `p^(k(2q+2)+1)` and outside `p^(k(2q+1)+2)`.
    pub g1_f_power: bool,
}

/// The two explicit non-containments behind the closed `rho_n` table.
pub fn check_noncontainment_witnesses(
    curve: &CurveIdeal,
    k: u32,
) -> Result<WitnessCheck, InvariantError> {
    if k == 0 {
        return Err(InvariantError::ZeroIndex);
    }
    let q = curve.params().q();
    let fk = curve.f().pow(k * (q + 1));
    let g1fk = curve.g1() * &fk;
    let n = k * (2 * q + 2);
    let r = k * (2 * q + 1);
    let f_power = curve.symbolic_power_structural(n)?.contains(&fk)
        && !curve.ordinary_power(r + 1)?.contains(&fk);
    let g1_f_power = curve.symbolic_power_structural(n + 1)?.contains(&g1fk)
        && !curve.ordinary_power(r + 2)?.contains(&g1fk);
    Ok(WitnessCheck {
        k,
        f_power,
        g1_f_power,
    })
}

/// `(2q + 2) / (2q + 1)`.
pub fn resurgence_closed(q: u32) -> Rational {
    ratio(u64::from(2 * q + 2), u64::from(2 * q + 1))
}

/// `max n / rho_n` over `1 <= n <= n_max`, using the closed `rho_n`.
pub fn resurgence_table_estimate(q: u32, n_max: u32) -> Result<Rational, InvariantError> {
    let mut best = Rational::zero();
    for n in 1..=n_max {
        let r = ratio(u64::from(n), u64::from(rho_n_closed(q, n)?));
        if r > best {
            best = r;
        }
    }
    Ok(best)
}

/// `m^c`, generated by all monomials of degree `c`.
pub fn maximal_power(curve: &CurveIdeal, c: u32) -> Result<Ideal, InvariantError> {
    let ring = curve.ring();
    if c == 0 {
        return Ok(Ideal::new(ring, vec![Polynomial::one(ring)])?);
    }
    let mut gens = Vec::new();
    for a in (0..=c).rev() {
        for b in (0..=c - a).rev() {
            let mono = ring.monomial(&[a, b, c - a - b])?;
            gens.push(Polynomial::term(ring, mono, Rational::one()));
        }
    }
    Ok(Ideal::new(ring, gens)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContainmentReport {
    pub n: u32,
    /// `p^(2n) ⊆ m^c p^n` with `c = n` for `q = 1` and `c = 2n` for `q > 1`.
    pub even: bool,
    /// `p^(2n-1) ⊆ m^(n-1) p^n`.
    pub odd: bool,
    /// `p^(2n-1) ⊆ m^c p^n` with the same `c` as the even case. Recorded,
    /// not asserted; at `n = 1` it would put `p` inside `m p`.
    pub odd_strong: bool,
    /// Generators outside the target, when `even` or `odd` fails.
    pub even_witness: Option<Polynomial>,
    pub odd_witness: Option<Polynomial>,
}

pub fn check_hh_containments(
    curve: &CurveIdeal,
    n: u32,
) -> Result<ContainmentReport, InvariantError> {
    if n == 0 {
        return Err(InvariantError::ZeroIndex);
    }
    let c = if curve.params().q() == 1 { n } else { 2 * n };
    let pn = curve.ordinary_power(n)?;
    let target = maximal_power(curve, c)?.product(&pn)?;
    let even_witness = curve
        .symbolic_power_structural(2 * n)?
        .first_non_member(&target)
        .cloned();
    let odd_sym = curve.symbolic_power_structural(2 * n - 1)?;
    let odd_target = maximal_power(curve, n - 1)?.product(&pn)?;
    let odd_witness = odd_sym.first_non_member(&odd_target).cloned();
    let odd_strong = odd_sym.is_subset_of(&target);
    Ok(ContainmentReport {
        n,
        even: even_witness.is_none(),
        odd: odd_witness.is_none(),
        odd_strong,
        even_witness,
        odd_witness,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChudnovskyCheck {
    pub n: u32,
    pub lhs: Rational,
    pub rhs: Rational,
    pub holds: bool,
}

/// `alpha(p^(n)) / n >= (alpha(p) + 1) / 2`.
pub fn check_chudnovsky(curve: &CurveIdeal, n: u32) -> Result<ChudnovskyCheck, InvariantError> {
    if n == 0 {
        return Err(InvariantError::ZeroIndex);
    }
    let lhs = ratio(alpha(&*curve.symbolic_power_structural(n)?)?, u64::from(n));
    let rhs = ratio(alpha(curve.prime())? + 1, 2);
    Ok(ChudnovskyCheck {
        n,
        holds: lhs >= rhs,
        lhs,
        rhs,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsCheck {
    pub alpha: u64,
    pub gamma: Rational,
    pub rho: Rational,
    /// `reg(R/p)`.
    pub reg_quotient: i64,
    /// `reg(p) = reg(R/p) + 1`.
    pub reg_ideal: i64,
    pub lower: Rational,
    pub upper: Rational,
    /// `alpha/gamma <= rho <= reg(p)/gamma`.
    pub holds: bool,
    /// The same with `reg(R/p)` in the upper bound.
    pub holds_quotient_convention: bool,
}

/// `alpha(p)/gamma(p) <= rho(p) <= reg(p)/gamma(p)`, with `alpha` computed,
/// `reg(R/p)` computed from `I_1`, and `gamma`, `rho` in closed form.
pub fn check_bh_inequality(curve: &CurveIdeal) -> Result<BoundsCheck, InvariantError> {
    let p = curve.params();
    let alpha = alpha(curve.prime())?;
    let gamma = gamma_closed(p.q(), p.m())?;
    let rho = resurgence_closed(p.q());
    let reg_quotient = build_in(p.q(), p.m(), 1)
        .map_err(RegularityError::from)?
        .regularity_quotient()
        .map_err(RegularityError::from)?;
    debug_assert_eq!(Ok(reg_quotient), regularity_closed(p.q(), p.m(), 1));
    let reg_ideal = reg_quotient + 1;
    let lower = Rational::from_integer(alpha.into()) / &gamma;
    let upper = Rational::from_integer(reg_ideal.into()) / &gamma;
    let upper_q = Rational::from_integer(reg_quotient.into()) / &gamma;
    Ok(BoundsCheck {
        holds: lower <= rho && rho <= upper,
        holds_quotient_convention: lower <= rho && rho <= upper_q,
        alpha,
        gamma,
        rho,
        reg_quotient,
        reg_ideal,
        lower,
        upper,
    })
}

/// Computed and closed-form invariants of one curve.
#[derive(Debug, Clone)]
pub struct InvariantReport {
    pub params: CurveParams,
    pub alpha_p: u64,
    pub alpha_p_closed: u64,
    /// `(n, computed, closed)`.
    pub alpha_symbolic: Vec<(u32, u64, u64)>,
    pub gamma_estimate: Rational,
    pub gamma_closed: Rational,
    pub rho_table: Vec<(RhoEntry, u32)>,
    pub resurgence_estimate: Rational,
    pub resurgence_closed: Rational,
    pub hh_checks: Vec<ContainmentReport>,
    pub chudnovsky_checks: Vec<ChudnovskyCheck>,
    pub bh_inequality: BoundsCheck,
}

impl InvariantReport {
    /// Conjunction of every asserted comparison.
    pub fn all_match(&self) -> bool {
        self.alpha_p == self.alpha_p_closed
            && self.alpha_symbolic.iter().all(|(_, a, b)| a == b)
            && self.gamma_estimate == self.gamma_closed
            && self.rho_table.iter().all(|(e, c)| e.value == *c)
            && self.resurgence_estimate < self.resurgence_closed
            && self.hh_checks.iter().all(|h| h.even && h.odd)
            && self.chudnovsky_checks.iter().all(|c| c.holds)
            && self.bh_inequality.holds
    }
}

/// Collects every invariant for `1 <= n <= n_max` (containments up to
/// `hh_max`).
pub fn invariant_report(
    curve: &CurveIdeal,
    n_max: u32,
    hh_max: u32,
    rho_cap: u32,
) -> Result<InvariantReport, InvariantError> {
    let p = curve.params();
    let (q, m) = (p.q(), p.m());
    let wald = waldschmidt(curve, n_max)?;
    let alpha_symbolic = (1..=n_max)
        .map(|n| {
            Ok((
                n,
                wald.alphas[n as usize - 1],
                alpha_symbolic_closed(q, m, n)?,
            ))
        })
        .collect::<Result<Vec<_>, InvariantError>>()?;
    let rho_table = (1..=n_max)
        .map(|n| Ok((rho_n_computed(curve, n, rho_cap)?, rho_n_closed(q, n)?)))
        .collect::<Result<Vec<_>, InvariantError>>()?;
    let resurgence_estimate = rho_table
        .iter()
        .map(|(e, _)| ratio(u64::from(e.n), u64::from(e.value)))
        .max()
        .unwrap_or_else(Rational::zero);
    Ok(InvariantReport {
        params: p,
        alpha_p: alpha(curve.prime())?,
        alpha_p_closed: 2 * u64::from(p.weights().d2()),
        alpha_symbolic,
        gamma_estimate: wald.estimate,
        gamma_closed: wald.closed,
        rho_table,
        resurgence_estimate,
        resurgence_closed: resurgence_closed(q),
        hh_checks: (1..=hh_max)
            .map(|n| check_hh_containments(curve, n))
            .collect::<Result<_, _>>()?,
        chudnovsky_checks: (1..=n_max)
            .map(|n| check_chudnovsky(curve, n))
            .collect::<Result<_, _>>()?,
        bh_inequality: check_bh_inequality(curve)?,
    })
}

//! Turns each verification suite into report records for one curve.

use std::time::Instant;

use curvesym_core::invariants::{
    alpha, alpha_symbolic_closed, check_bh_inequality, check_chudnovsky, check_hh_containments,
    check_noncontainment_witnesses, gamma_closed, resurgence_closed, rho_n_closed, rho_n_computed,
    verify_rho_entry, waldschmidt,
};
use curvesym_core::monomial::build_in;
use curvesym_core::regularity::{check_plane_lemmas, regularity_closed};
use curvesym_core::{CurveIdeal, Rational};

use crate::config::{RunConfig, Suite};
use crate::report::Record;

fn timed<T>(f: impl FnOnce() -> T) -> (T, u64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_millis() as u64)
}

struct Ctx<'a> {
    curve: &'a CurveIdeal,
    q: u32,
    m: u32,
    n_max: u32,
    rho_cap: u32,
}

impl Ctx<'_> {
    fn rec(
        &self,
        n: Option<u32>,
        id: &str,
        computed: impl ToString,
        closed: impl ToString,
        ok: bool,
    ) -> Record {
        Record::new(self.q, self.m, n, id, computed, closed, ok)
    }

    fn failed(&self, n: Option<u32>, id: &str, err: impl std::fmt::Display) -> Record {
        self.rec(n, id, format!("error: {err}"), "-", false)
    }
}

/// Records of `suite` for one curve, in increasing `n`.
pub fn run_suite(curve: &CurveIdeal, suite: Suite, config: &RunConfig) -> Vec<Record> {
    let p = curve.params();
    let ctx = Ctx {
        curve,
        q: p.q(),
        m: p.m(),
        n_max: config.n_max,
        rho_cap: config.rho_cap,
    };
    match suite {
        Suite::Identities => identities(&ctx),
        Suite::SymbolicOracle => symbolic_oracle(&ctx),
        Suite::Rho => rho(&ctx),
        Suite::AlphaGamma => alpha_gamma(&ctx),
        Suite::Hh => hh(&ctx),
        Suite::Chudnovsky => chudnovsky(&ctx),
        Suite::Regularity => regularity(&ctx),
        Suite::Section5 => section5(&ctx),
        Suite::Bh => bh(&ctx),
        Suite::All => Vec::new(),
    }
}

fn identities(ctx: &Ctx<'_>) -> Vec<Record> {
    let (check, ms) = timed(|| ctx.curve.verify_cofactor_identities());
    let computed = if check.passed() {
        "pass".to_string()
    } else {
        format!("failed: {}", check.failed.join("; "))
    };
    let mut r = ctx.rec(
        None,
        "cofactor_identities",
        computed,
        "pass",
        check.passed(),
    );
    r.runtime_ms = ms;
    vec![r]
}

fn symbolic_oracle(ctx: &Ctx<'_>) -> Vec<Record> {
    (1..=ctx.n_max)
        .map(|n| {
            let id = "symbolic_oracle";
            let (res, ms) = timed(|| {
                let s = ctx.curve.symbolic_power_structural(n)?;
                let o = ctx.curve.symbolic_power_oracle(n)?;
                Ok::<_, curvesym_core::CurveError>((s, o))
            });
            let mut r = match res {
                Ok((s, o)) => {
                    let equal = s.basis() == o.basis();
                    let r = ctx.rec(
                        Some(n),
                        id,
                        format!("{} basis elements", o.basis().len()),
                        format!("{} basis elements", s.basis().len()),
                        equal,
                    );
                    if equal {
                        r
                    } else {
                        let w = o
                            .basis()
                            .elements()
                            .iter()
                            .find(|e| !s.contains(e))
                            .or_else(|| s.basis().elements().iter().find(|e| !o.contains(e)));
                        match w {
                            Some(w) => r.with_witness(w),
                            None => r,
                        }
                    }
                }
                Err(e) => ctx.failed(Some(n), id, e),
            };
            r.runtime_ms = ms;
            r
        })
        .collect()
}

fn rho(ctx: &Ctx<'_>) -> Vec<Record> {
    let q = ctx.q;
    let mut out = Vec::new();
    let mut best: Option<Rational> = None;
    for n in 1..=ctx.n_max {
        let id = "rho_n";
        let (res, ms) = timed(|| {
            let entry = rho_n_computed(ctx.curve, n, ctx.rho_cap)?;
            let verified = verify_rho_entry(ctx.curve, &entry)?;
            Ok::<_, curvesym_core::InvariantError>((entry, verified))
        });
        let closed = rho_n_closed(q, n).expect("n >= 1");
        let mut r = match res {
            Ok((entry, verified)) => {
                let ratio = Rational::new(n.into(), entry.value.into());
                if best.as_ref().is_none_or(|b| ratio > *b) {
                    best = Some(ratio);
                }
                ctx.rec(
                    Some(n),
                    id,
                    entry.value,
                    closed,
                    verified && entry.value == closed,
                )
                .with_witness(&entry.witness)
            }
            Err(e) => ctx.failed(Some(n), id, e),
        };
        r.runtime_ms = ms;
        out.push(r);
    }
    let limit = resurgence_closed(q);
    out.push(match best {
        Some(b) => ctx.rec(None, "resurgence", &b, &limit, b < limit),
        None => ctx.failed(None, "resurgence", "no rho_n computed"),
    });
    let period = 2 * q + 2;
    for k in (1..).take_while(|k| k * period < ctx.n_max) {
        let id = "noncontainment_witness";
        let (res, ms) = timed(|| check_noncontainment_witnesses(ctx.curve, k));
        let mut r = match res {
            Ok(w) => ctx
                .rec(
                    Some(k * period),
                    id,
                    w.f_power && w.g1_f_power,
                    true,
                    w.f_power && w.g1_f_power,
                )
                .with_witness(format!(
                    "f^{e} not in p^{r1}; g1*f^{e} not in p^{r2}",
                    e = k * (q + 1),
                    r1 = k * (2 * q + 1) + 1,
                    r2 = k * (2 * q + 1) + 2
                )),
            Err(e) => ctx.failed(Some(k * period), id, e),
        };
        r.runtime_ms = ms;
        out.push(r);
    }
    out
}

fn alpha_gamma(ctx: &Ctx<'_>) -> Vec<Record> {
    let (q, m) = (ctx.q, ctx.m);
    let mut out = Vec::new();
    let closed_p = 2 * u64::from(ctx.curve.weights().d2());
    let (a, ms) = timed(|| alpha(ctx.curve.prime()));
    let mut r = match a {
        Ok(a) => ctx.rec(None, "alpha_p", a, closed_p, a == closed_p),
        Err(e) => ctx.failed(None, "alpha_p", e),
    };
    r.runtime_ms = ms;
    out.push(r);

    let (w, ms) = timed(|| waldschmidt(ctx.curve, ctx.n_max));
    match w {
        Ok(w) => {
            for (i, &a) in w.alphas.iter().enumerate() {
                let n = i as u32 + 1;
                let closed = alpha_symbolic_closed(q, m, n).expect("valid parameters");
                out.push(ctx.rec(Some(n), "alpha_symbolic", a, closed, a == closed));
            }
            let closed = gamma_closed(q, m).expect("valid parameters");
            let mut r = ctx.rec(
                None,
                "gamma_closed",
                &w.estimate,
                &closed,
                w.estimate == closed,
            );
            r.runtime_ms = ms;
            out.push(r);
        }
        Err(e) => out.push(ctx.failed(None, "gamma_closed", e)),
    }
    out
}

fn hh(ctx: &Ctx<'_>) -> Vec<Record> {
    let mut out = Vec::new();
    for n in 1..=(ctx.n_max / 2).max(1) {
        let (res, ms) = timed(|| check_hh_containments(ctx.curve, n));
        match res {
            Ok(h) => {
                let mut even = ctx.rec(Some(n), "hh_even", h.even, true, h.even);
                if let Some(w) = &h.even_witness {
                    even = even.with_witness(w);
                }
                even.runtime_ms = ms;
                let mut odd = ctx.rec(Some(n), "hh_odd", h.odd, true, h.odd);
                if let Some(w) = &h.odd_witness {
                    odd = odd.with_witness(w);
                }
                out.push(even);
                out.push(odd);
                out.push(ctx.rec(Some(n), "hh_odd_strong", h.odd_strong, "unasserted", true));
            }
            Err(e) => out.push(ctx.failed(Some(n), "hh_even", e)),
        }
    }
    out
}

fn chudnovsky(ctx: &Ctx<'_>) -> Vec<Record> {
    (1..=ctx.n_max)
        .map(|n| {
            let (res, ms) = timed(|| check_chudnovsky(ctx.curve, n));
            let mut r = match res {
                Ok(c) => ctx.rec(Some(n), "chudnovsky", &c.lhs, &c.rhs, c.holds),
                Err(e) => ctx.failed(Some(n), "chudnovsky", e),
            };
            r.runtime_ms = ms;
            r
        })
        .collect()
}

fn regularity(ctx: &Ctx<'_>) -> Vec<Record> {
    (1..=ctx.n_max)
        .map(|n| {
            let id = "regularity";
            let (res, ms) = timed(|| {
                let computed = build_in(ctx.q, ctx.m, n)?.regularity_quotient()?;
                Ok::<_, Box<dyn std::error::Error>>(computed)
            });
            let closed = regularity_closed(ctx.q, ctx.m, n);
            let mut r = match (res, closed) {
                (Ok(a), Ok(b)) => ctx.rec(Some(n), id, a, b, a == b),
                (Err(e), _) => ctx.failed(Some(n), id, e),
                (_, Err(e)) => ctx.failed(Some(n), id, e),
            };
            r.runtime_ms = ms;
            r
        })
        .collect()
}

fn section5(ctx: &Ctx<'_>) -> Vec<Record> {
    let (res, ms) = timed(|| check_plane_lemmas(ctx.curve, ctx.n_max));
    match res {
        Ok(report) => {
            let per = ms / report.checks.len().max(1) as u64;
            report
                .checks
                .iter()
                .map(|c| {
                    let mut r = ctx.rec(Some(c.n), c.id, &c.computed, &c.expected, c.passed);
                    r.runtime_ms = per;
                    r
                })
                .collect()
        }
        Err(e) => vec![ctx.failed(None, "section5", e)],
    }
}

fn bh(ctx: &Ctx<'_>) -> Vec<Record> {
    let (res, ms) = timed(|| check_bh_inequality(ctx.curve));
    match res {
        Ok(b) => {
            let upper_q = Rational::from_integer(b.reg_quotient.into()) / &b.gamma;
            let mut lower = ctx.rec(None, "bh_lower", &b.lower, &b.rho, b.lower <= b.rho);
            lower.runtime_ms = ms;
            vec![
                lower,
                ctx.rec(None, "bh_upper", &b.upper, &b.rho, b.rho <= b.upper),
                ctx.rec(None, "bh_upper_reg_quotient", upper_q, "unasserted", true),
            ]
        }
        Err(e) => vec![ctx.failed(None, "bh_lower", e)],
    }
}

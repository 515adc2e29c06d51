//! Cut-and-join operator, the two-partition generating series, its connected
//! coefficients and their closed forms.

mod biseries;
mod cutjoin;
mod targets;
mod trig;

pub use biseries::{series_exp, series_log, series_log_coeff, BiKey, BiSeries};
pub use cutjoin::{cut_join, PPolynomial};
pub use targets::{closed_targets, find_target, ClosedTarget, Display, TrigErratum};
pub use trig::{trig_eval, TrigExpr};

use crate::arith::{GaussianRational, RatFunc, Var};
use crate::characters::character_table;
use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::partitions::{enumerate, enumerate_up_to, Partition};
use crate::wzw::{w_one, w_pair_skew};

fn exp_i32(x: i64) -> i32 {
    i32::try_from(x).expect("exponent overflow")
}

static RHS: Memo<BiKey, RatFunc> = Memo::new();

/// `Σ_{ν±} χ_{ν⁺}(μ⁺)/z_{μ⁺} · χ_{ν⁻}(μ⁻)/z_{μ⁻} · t^{κ_{ν⁺}} w^{κ_{ν⁻}} · W_{ν⁺,ν⁻}`
pub fn rhs_coeff(plus: &Partition, minus: &Partition) -> RatFunc {
    RHS.get_or_compute((plus.clone(), minus.clone()), || {
        let tp = character_table(plus.size());
        let tm = character_table(minus.size());
        let z = (plus.z_order() * minus.z_order()) as i64;
        let mut acc = RatFunc::zero();
        for np in tp.partitions() {
            let a = tp.get(np, plus);
            if a == 0 {
                continue;
            }
            for nm in tm.partitions() {
                let b = tm.get(nm, minus);
                if b == 0 {
                    continue;
                }
                let w = w_pair_skew(np, nm).into_inner().shift(&[
                    0,
                    exp_i32(np.kappa()),
                    exp_i32(nm.kappa()),
                ]);
                acc = &acc + &w.scale(&GaussianRational::from_ratio(a * b, z));
            }
        }
        acc
    })
}

/// The disconnected series truncated at total degree `cutoff`.
pub fn rhs_series(cutoff: u32) -> BiSeries {
    let mut terms = Vec::new();
    for plus in enumerate_up_to(cutoff) {
        for minus in enumerate_up_to(cutoff - plus.size()) {
            let c = rhs_coeff(&plus, &minus);
            terms.push(((plus.clone(), minus), c));
        }
    }
    BiSeries::from_terms(cutoff, terms)
}

/// Disconnected series over sub-multisets of `(μ⁺, μ⁻)` only.
fn rhs_restricted(plus: &Partition, minus: &Partition) -> BiSeries {
    let cutoff = plus.size() + minus.size();
    let mut terms = Vec::new();
    for a in plus.sub_multisets() {
        for b in minus.sub_multisets() {
            let c = rhs_coeff(&a, &b);
            terms.push(((a.clone(), b), c));
        }
    }
    BiSeries::from_terms(cutoff, terms)
}

/// The `(μ⁺, μ⁻)` coefficient of the formal logarithm of the disconnected series.
pub fn g_predict(plus: &Partition, minus: &Partition, cutoff: u32) -> Result<RatFunc> {
    if plus.size() + minus.size() > cutoff {
        return Err(Error::Precondition(format!(
            "|μ⁺|+|μ⁻| = {} exceeds cutoff {cutoff}",
            plus.size() + minus.size()
        )));
    }
    series_log_coeff(&rhs_restricted(plus, minus), plus, minus)
}

/// `Σ_{ν⁺⊢n} χ_{ν⁺}((n))/n · t^{κ_{ν⁺}} · (W_{ν⁺,(1)} - W_{ν⁺} W_{(1)})`
pub fn g_n1_direct(n: u32) -> RatFunc {
    let one = Partition::row(1);
    let cycle = Partition::row(n);
    let table = character_table(n);
    table.partitions().iter().fold(RatFunc::zero(), |acc, nu| {
        let chi = table.get(nu, &cycle);
        if chi == 0 {
            return acc;
        }
        let diff = w_pair_skew(nu, &one).value() - &(w_one(nu).value() * w_one(&one).value());
        let term = diff
            .shift(&[0, exp_i32(nu.kappa()), 0])
            .scale(&GaussianRational::from_ratio(chi, n as i64));
        &acc + &term
    })
}

/// `Σ_{|ρ|=|η|} χ_ρ(η)/z_η · t^{κ_ρ} · W_ρ`
pub fn marino_vafa_rhs(eta: &Partition) -> RatFunc {
    let table = character_table(eta.size());
    let z = eta.z_order() as i64;
    enumerate(eta.size())
        .iter()
        .fold(RatFunc::zero(), |acc, rho| {
            let chi = table.get(rho, eta);
            if chi == 0 {
                return acc;
            }
            let w = w_one(rho).into_inner().shift(&[0, exp_i32(rho.kappa()), 0]);
            &acc + &w.scale(&GaussianRational::from_ratio(chi, z))
        })
}

/// Single-family series `Σ_η marino_vafa_rhs(η) p_η` truncated at `cutoff`.
pub fn marino_vafa_series(cutoff: u32) -> BiSeries {
    BiSeries::from_terms(
        cutoff,
        enumerate_up_to(cutoff).into_iter().map(|eta| {
            let c = marino_vafa_rhs(&eta);
            ((eta, Partition::empty()), c)
        }),
    )
}

/// `(1/n) ∏_{i=1}^{n-1} sin[(nτ+i+1)λ/2] / sin(iλ/2)`; requires `n ≥ 1`.
pub fn gn1_closed(n: u32) -> Result<RatFunc> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    trig_eval(&targets::gn1_expr(n))
}

/// The verified value of a named closed-form display.
pub fn closed_target(name: &str) -> Result<RatFunc> {
    let t = find_target(name).ok_or_else(|| Error::UnknownName {
        kind: "closed target",
        name: name.to_string(),
    })?;
    trig_eval(t.displays[0].expected())
}

/// Exchanges the roles of `t` and `w`.
pub fn swap_tw(f: &RatFunc) -> RatFunc {
    f.swap_vars(Var::T, Var::W)
}

//! The quantities `W_μ` and `W_{μ,ν}` by independent routes, and the identities relating them.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{quantum_integer, GaussianRational, LaurentPoly, RatFunc};
use crate::characters::character_table;
use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::partitions::{enumerate, Partition};
use crate::symfunc::{
    emu_spec, principal_hook_content, skew_principal, skew_schur, specialize, Alphabet,
};

/// A rational function in `u = q^{1/2}` alone.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WValue(RatFunc);

impl WValue {
    pub fn new(value: RatFunc) -> Result<Self> {
        if !value.is_u_only() {
            return Err(Error::Precondition(format!(
                "W value must depend on u only: {value}"
            )));
        }
        Ok(Self(value))
    }

    pub fn value(&self) -> &RatFunc {
        &self.0
    }

    pub fn into_inner(self) -> RatFunc {
        self.0
    }
}

impl From<WValue> for RatFunc {
    fn from(w: WValue) -> Self {
        w.0
    }
}

impl fmt::Display for WValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn sign(n: u32) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn exp_i32(x: i64) -> i32 {
    i32::try_from(x).expect("exponent overflow")
}

/// `W_μ = q^{κ_μ/4} / ∏_e (q^{h(e)/2} - q^{-h(e)/2})`.
pub fn w_one(mu: &Partition) -> WValue {
    let den = mu.hooks().iter().fold(LaurentPoly::one(), |acc, &h| {
        &acc * &(&LaurentPoly::u_pow(h as i32) - &LaurentPoly::u_pow(-(h as i32)))
    });
    let w = RatFunc::new(LaurentPoly::u_pow(exp_i32(mu.kappa() / 2)), den).expect("nonzero");
    debug_assert!(
        w.rf_equal(&w_one_schur(mu)),
        "hook and Schur routes disagree at {mu}"
    );
    WValue(w)
}

/// `W_μ = (-1)^{|μ|} q^{κ_μ/2 + |μ|/2} s_μ(1, q, q², …)`.
pub fn w_one_schur(mu: &Partition) -> RatFunc {
    let e = exp_i32(mu.kappa() + mu.size() as i64);
    principal_hook_content(mu)
        .shift(&[e, 0, 0])
        .scale(&sign(mu.size()).into())
}

/// `W_{μ,ν} = q^{|ν|/2} W_μ s_ν(q^{μ_i - i})`.
pub fn w_pair_def(mu: &Partition, nu: &Partition) -> WValue {
    let v = (w_one(mu).value() * &emu_spec(nu, mu)).shift(&[nu.size() as i32, 0, 0]);
    WValue(v)
}

static PAIR_SKEW: Memo<(Partition, Partition), RatFunc> = Memo::new();

/// `W_{μ,ν} = (-1)^{|μ|+|ν|} q^{(κ_μ+κ_ν+|μ|+|ν|)/2} Σ_ρ q^{-|ρ|} s_{μ/ρ}(1,q,…) s_{ν/ρ}(1,q,…)`.
pub fn w_pair_skew(mu: &Partition, nu: &Partition) -> WValue {
    WValue(PAIR_SKEW.get_or_compute((mu.clone(), nu.clone()), || {
        let sum = mu.subdiagrams().iter().filter(|rho| nu.contains(rho)).fold(
            RatFunc::zero(),
            |acc, rho| {
                let term = &skew_principal(mu, rho) * &skew_principal(nu, rho);
                &acc + &term.shift(&[-2 * rho.size() as i32, 0, 0])
            },
        );
        let e = exp_i32(mu.kappa() + nu.kappa() + (mu.size() + nu.size()) as i64);
        sum.shift(&[e, 0, 0])
            .scale(&sign(mu.size() + nu.size()).into())
    }))
}

/// `W_{μ,ν} - W_μ W_ν`.
pub fn w_difference(mu: &Partition, nu: &Partition) -> RatFunc {
    w_pair_skew(mu, nu).value() - &(w_one(mu).value() * w_one(nu).value())
}

/// `q^{-(κ₊+κ₋)/2} Σ χ_ν(μ⁺∪μ⁻) χ_{ν⁺}(μ⁺) χ_{ν⁻}(μ⁻) / (z_{μ⁺} z_{μ⁻}) · W_ν q^{κ_ν/2}`.
pub fn tau_one_convolution(nu_plus: &Partition, nu_minus: &Partition) -> WValue {
    let tp = character_table(nu_plus.size());
    let tm = character_table(nu_minus.size());
    let n = nu_plus.size() + nu_minus.size();
    let tn = character_table(n);
    let mut total = RatFunc::zero();
    for nu in enumerate(n) {
        let mut c = GaussianRational::from_integer(0);
        for mp in tp.partitions() {
            let a = tp.get(nu_plus, mp);
            if a == 0 {
                continue;
            }
            for mm in tm.partitions() {
                let b = tm.get(nu_minus, mm);
                if b == 0 {
                    continue;
                }
                let x = tn.get(&nu, &mp.union(mm));
                let z = (mp.z_order() * mm.z_order()) as i64;
                c += &GaussianRational::from_ratio(a * b * x, z);
            }
        }
        if !c.is_zero() {
            let w = w_one(&nu).value().shift(&[exp_i32(nu.kappa()), 0, 0]);
            total = &total + &w.scale(&c);
        }
    }
    WValue(total.shift(&[exp_i32(-nu_plus.kappa() - nu_minus.kappa()), 0, 0]))
}

/// `Σ_ρ s_{ν⁺/ρ}(A) s_{ν⁻/ρ}(A)` with `A = (-q^{1/2}, -q^{3/2}, …)`.
pub fn tau_neg_one_coeff(nu_plus: &Partition, nu_minus: &Partition) -> WValue {
    let at = |mu: &Partition, rho: &Partition| {
        specialize(&skew_schur(mu, rho), &Alphabet::NegatedHalfShift)
    };
    let v = nu_plus
        .subdiagrams()
        .iter()
        .filter(|rho| nu_minus.contains(rho))
        .fold(RatFunc::zero(), |acc, rho| {
            &acc + &(&at(nu_plus, rho) * &at(nu_minus, rho))
        });
    WValue(v)
}

/// One displayed difference `W_{μ,ν} - W_μ W_ν` as printed, with the
/// correct value where the printed one is wrong.
#[derive(Clone, Debug)]
pub struct DifferenceRow {
    pub mu: Partition,
    pub nu: Partition,
    pub printed: RatFunc,
    pub erratum: Option<Erratum>,
}

#[derive(Clone, Debug)]
pub struct Erratum {
    pub corrected: RatFunc,
    pub note: &'static str,
}

impl DifferenceRow {
    /// The value the row should hold.
    pub fn expected(&self) -> &RatFunc {
        self.erratum
            .as_ref()
            .map_or(&self.printed, |e| &e.corrected)
    }
}

#[derive(Serialize)]
struct DifferenceEntry<'a> {
    mu: &'a Partition,
    nu: &'a Partition,
    difference: RatFunc,
}

fn part(p: &[u32]) -> Partition {
    Partition::from_parts(p.to_vec())
}

/// The fourteen displayed differences, in display order.
pub fn difference_table() -> Vec<DifferenceRow> {
    let qi = quantum_integer;
    let u = RatFunc::u_pow;
    let d = |num: RatFunc, dens: &[i32]| {
        dens.iter()
            .fold(num, |acc, &m| acc.checked_div(&qi(m)).expect("nonzero"))
    };
    let cos3 = &u(3) + &u(-3);
    let row = |mu: &[u32], nu: &[u32], printed: RatFunc| DifferenceRow {
        mu: part(mu),
        nu: part(nu),
        printed,
        erratum: None,
    };
    let fixed =
        |mu: &[u32], nu: &[u32], printed: RatFunc, corrected: RatFunc, note| DifferenceRow {
            mu: part(mu),
            nu: part(nu),
            printed,
            erratum: Some(Erratum { corrected, note }),
        };
    vec![
        row(&[1], &[1], RatFunc::one()),
        row(&[2], &[1], d(u(2), &[1])),
        row(&[1, 1], &[1], d(u(-2), &[1])),
        row(&[3], &[1], d(u(5), &[1, 2])),
        row(&[2, 1], &[1], d(RatFunc::one(), &[1, 1])),
        fixed(
            &[1, 1, 1],
            &[1],
            d(u(5), &[1, 2]),
            d(u(-5), &[1, 2]),
            "printed numerator q^{5/2} should be q^{-5/2}",
        ),
        row(&[2], &[1, 1], d(RatFunc::one(), &[1, 1])),
        fixed(
            &[1, 1],
            &[1, 1],
            d(&u(-4) * &qi(3), &[1, 2]),
            d(&u(-4) * &cos3, &[1, 2]),
            "printed numerator factor q^{3/2} - q^{-3/2} should be q^{3/2} + q^{-3/2}",
        ),
        row(&[3], &[1, 1], d(u(3), &[1, 1, 2])),
        row(&[2, 1], &[1, 1], d(&u(-2) * &cos3, &[1, 1, 2])),
        fixed(
            &[1, 1, 1],
            &[1, 1],
            &d(u(-5), &[1, 1, 2]) + &d(u(-10), &[1, 2]),
            &d(u(-5), &[1, 1, 2]) - &d(u(-10), &[1, 2]),
            "the q^{-5} term should carry a minus sign",
        ),
        row(&[2], &[2], d(&u(4) * &cos3, &[1, 2])),
        row(&[3], &[2], &d(u(10), &[1, 2]) + &d(u(5), &[1, 1, 2])),
        row(&[1, 1, 1], &[2], d(u(-3), &[1, 1, 2])),
    ]
}

/// The table as a JSON array of `{mu, nu, difference}` with computed differences.
pub fn difference_table_json() -> String {
    let entries: Vec<DifferenceEntry> = difference_table_rows()
        .iter()
        .map(|r| DifferenceEntry {
            mu: &r.mu,
            nu: &r.nu,
            difference: w_difference(&r.mu, &r.nu),
        })
        .collect();
    serde_json::to_string_pretty(&entries).expect("serializable")
}

fn difference_table_rows() -> &'static [DifferenceRow] {
    static ROWS: std::sync::OnceLock<Vec<DifferenceRow>> = std::sync::OnceLock::new();
    ROWS.get_or_init(difference_table)
}

/// One line per row: `mu nu difference`, with a trailing mark on corrected rows.
pub fn difference_table_text() -> String {
    let mut out = String::new();
    for r in difference_table_rows() {
        let mark = if r.erratum.is_some() {
            "  [corrected]"
        } else {
            ""
        };
        out.push_str(&format!(
            "{} {} {}{}\n",
            r.mu,
            r.nu,
            w_difference(&r.mu, &r.nu),
            mark
        ));
    }
    out
}

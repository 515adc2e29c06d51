//! Symmetric functions in the power-sum and Schur bases, skew Schur
//! functions, and the specializations built on them.

mod alphabet;
pub mod det;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

pub use alphabet::{e_at, h_at, Alphabet};
use det::{determinant, Ring};

use crate::arith::{GaussianRational, LaurentPoly, RatFunc};
use crate::characters::character_table;
use crate::memo::Memo;
use crate::partitions::{enumerate, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Basis {
    PowerSum,
    Schur,
}

/// Finite linear combination of `p_μ` or `s_μ` with rational-function coefficients.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SymFunc {
    basis: Basis,
    #[serde(with = "terms_as_pairs")]
    terms: BTreeMap<Partition, RatFunc>,
}

mod terms_as_pairs {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        terms: &BTreeMap<Partition, RatFunc>,
        s: S,
    ) -> Result<S::Ok, S::Error> {
        let v: Vec<(&Partition, &RatFunc)> = terms.iter().collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<BTreeMap<Partition, RatFunc>, D::Error> {
        let v = Vec::<(Partition, RatFunc)>::deserialize(d)?;
        Ok(v.into_iter().filter(|(_, c)| !c.is_zero()).collect())
    }
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        Self {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: RatFunc, basis: Basis) -> Self {
        Self::from_terms(basis, [(Partition::empty(), c)])
    }

    pub fn one(basis: Basis) -> Self {
        Self::constant(RatFunc::one(), basis)
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, RatFunc)>>(basis: Basis, iter: I) -> Self {
        let mut f = Self::zero(basis);
        for (mu, c) in iter {
            f.add_term(mu, &c);
        }
        f
    }

    /// `p_μ`
    pub fn p(mu: Partition) -> Self {
        Self::from_terms(Basis::PowerSum, [(mu, RatFunc::one())])
    }

    /// `s_μ`
    pub fn s(mu: Partition) -> Self {
        Self::from_terms(Basis::Schur, [(mu, RatFunc::one())])
    }

    /// `h_k = s_{(k)}`, zero for negative `k`.
    pub fn h(k: i64) -> Self {
        if k < 0 {
            return Self::zero(Basis::Schur);
        }
        Self::s(Partition::row(k as u32))
    }

    /// `e_k = s_{(1^k)}`, zero for negative `k`.
    pub fn e(k: i64) -> Self {
        if k < 0 {
            return Self::zero(Basis::Schur);
        }
        Self::s(Partition::column(k as u32))
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, RatFunc> {
        &self.terms
    }

    pub fn coeff(&self, mu: &Partition) -> RatFunc {
        self.terms.get(mu).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mu: Partition, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&mu) {
            Some(x) => {
                *x = &*x + c;
                if x.is_zero() {
                    self.terms.remove(&mu);
                }
            }
            None => {
                self.terms.insert(mu, c.clone());
            }
        }
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero(self.basis);
        }
        Self {
            basis: self.basis,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&RatFunc::integer(n))
    }

    pub fn add(&self, other: &Self) -> Self {
        let other = other.to_basis(self.basis);
        let mut out = self.clone();
        for (mu, c) in &other.terms {
            out.add_term(mu.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale_int(-1))
    }

    pub fn to_basis(&self, basis: Basis) -> Self {
        match basis {
            Basis::PowerSum => self.to_power_sum(),
            Basis::Schur => self.to_schur(),
        }
    }

    /// `s_ν = Σ_μ χ_ν(μ)/z_μ p_μ`
    pub fn to_power_sum(&self) -> Self {
        if self.basis == Basis::PowerSum {
            return self.clone();
        }
        let mut out = Self::zero(Basis::PowerSum);
        for (nu, c) in &self.terms {
            let table = character_table(nu.size());
            for (mu, chi) in table.partitions().iter().zip(table.row(nu)) {
                if *chi != 0 {
                    let w = GaussianRational::from_ratio(*chi, mu.z_order() as i64);
                    out.add_term(mu.clone(), &c.scale(&w));
                }
            }
        }
        out
    }

    /// `p_μ = Σ_ν χ_ν(μ) s_ν`
    pub fn to_schur(&self) -> Self {
        if self.basis == Basis::Schur {
            return self.clone();
        }
        let mut out = Self::zero(Basis::Schur);
        for (mu, c) in &self.terms {
            let table = character_table(mu.size());
            for nu in table.partitions() {
                let chi = table.get(nu, mu);
                if chi != 0 {
                    out.add_term(nu.clone(), &c.scale(&GaussianRational::from_integer(chi)));
                }
            }
        }
        out
    }

    /// Product, computed on power-sum monomials and returned in `self`'s basis.
    pub fn multiply(&self, other: &Self) -> Self {
        let a = self.to_power_sum();
        let b = other.to_power_sum();
        let mut out = Self::zero(Basis::PowerSum);
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                out.add_term(ma.union(mb), &(ca * cb));
            }
        }
        out.to_basis(self.basis)
    }

    /// The involution `ω: s_ν ↦ s_{ν'}`.
    pub fn omega(&self) -> Self {
        let s = self.to_schur();
        let terms = s.terms.iter().map(|(nu, c)| (nu.conjugate(), c.clone()));
        Self::from_terms(Basis::Schur, terms).to_basis(self.basis)
    }

    /// Keeps only the terms of degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        Self::from_terms(
            self.basis,
            self.terms
                .iter()
                .filter(|(m, _)| m.size() == d)
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }
}

impl PartialEq for SymFunc {
    fn eq(&self, other: &Self) -> bool {
        let other = other.to_basis(self.basis);
        self.terms.len() == other.terms.len()
            && self
                .terms
                .iter()
                .all(|(m, c)| other.terms.get(m).is_some_and(|d| c.rf_equal(d)))
    }
}

impl Ring for SymFunc {
    fn zero() -> Self {
        SymFunc::zero(Basis::PowerSum)
    }
    fn one() -> Self {
        SymFunc::one(Basis::PowerSum)
    }
    fn is_zero(&self) -> bool {
        SymFunc::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        SymFunc::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        self.multiply(other)
    }
    fn neg(&self) -> Self {
        self.scale_int(-1)
    }
}

impl Ring for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let sym = match self.basis {
            Basis::PowerSum => "p",
            Basis::Schur => "s",
        };
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("[{c}]·{sym}{m}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `s_ν` expanded in power sums.
pub fn schur_in_p(nu: &Partition) -> SymFunc {
    SymFunc::s(nu.clone()).to_power_sum()
}

/// Schur expansion of any symmetric function.
pub fn expand_in_schur(f: &SymFunc) -> SymFunc {
    f.to_schur()
}

pub fn multiply(f: &SymFunc, g: &SymFunc) -> SymFunc {
    f.multiply(g)
}

static LR: Memo<(Partition, Partition), BTreeMap<Partition, i64>> = Memo::new();

/// Littlewood–Richardson coefficients `c^μ_{νρ}` for all `μ ⊢ |ν|+|ρ|`, via
/// `c^μ_{νρ} = Σ_{α,β} χ_ν(α)χ_ρ(β)χ_μ(α∪β)/(z_α z_β)`.
pub fn lr_coeffs(nu: &Partition, rho: &Partition) -> BTreeMap<Partition, i64> {
    let key = if nu <= rho {
        (nu.clone(), rho.clone())
    } else {
        (rho.clone(), nu.clone())
    };
    LR.get_or_compute(key.clone(), || {
        let (nu, rho) = key;
        let tn = character_table(nu.size());
        let tr = character_table(rho.size());
        let n = nu.size() + rho.size();
        let tm = character_table(n);
        let outer = enumerate(n);
        let mut acc: Vec<BigRational> = vec![BigRational::zero(); outer.len()];
        for alpha in tn.partitions() {
            let ca = tn.get(&nu, alpha);
            if ca == 0 {
                continue;
            }
            for beta in tr.partitions() {
                let cb = tr.get(&rho, beta);
                if cb == 0 {
                    continue;
                }
                let w = BigRational::new(
                    BigInt::from(ca * cb),
                    BigInt::from(alpha.z_order()) * BigInt::from(beta.z_order()),
                );
                let gamma = alpha.union(beta);
                for (slot, mu) in acc.iter_mut().zip(&outer) {
                    let c = tm.get(mu, &gamma);
                    if c != 0 {
                        *slot += &w * BigRational::from_integer(c.into());
                    }
                }
            }
        }
        outer
            .into_iter()
            .zip(acc)
            .filter(|(_, c)| !c.is_zero())
            .map(|(mu, c)| {
                assert!(c.is_integer(), "non-integral LR coefficient");
                let v: i64 = c.to_integer().try_into().expect("LR coefficient fits i64");
                (mu, v)
            })
            .collect()
    })
}

/// `s_{μ/ρ} = Σ_θ c^μ_{ρθ} s_θ` in the Schur basis; zero unless `ρ ⊆ μ`.
pub fn skew_schur(mu: &Partition, rho: &Partition) -> SymFunc {
    let mut out = SymFunc::zero(Basis::Schur);
    if !mu.contains(rho) {
        return out;
    }
    for theta in enumerate(mu.size() - rho.size()) {
        let c = lr_coeffs(rho, &theta).get(mu).copied().unwrap_or(0);
        if c != 0 {
            out.add_term(theta, &RatFunc::integer(c));
        }
    }
    out
}

/// Jacobi–Trudi matrix `(h_{μ_i - ρ_j - i + j})` with `n = l(μ)` rows, built from `h`.
fn jacobi_trudi<R: Ring>(mu: &Partition, rho: &Partition, h: impl Fn(i64) -> R) -> Vec<Vec<R>> {
    let n = mu.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| h(mu.part(i) as i64 - rho.part(j) as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect()
}

/// `s_{μ/ρ}` by the determinantal formula, in the power-sum basis.
pub fn skew_schur_jacobi_trudi(mu: &Partition, rho: &Partition) -> SymFunc {
    if rho.len() > mu.len() {
        return SymFunc::zero(Basis::PowerSum);
    }
    let m = jacobi_trudi(mu, rho, |k| SymFunc::h(k).to_power_sum());
    determinant(&m)
}

static JT_SPEC: Memo<(Partition, Alphabet), RatFunc> = Memo::new();

/// `s_ν(A)` as the determinant `det(h_{ν_i - i + j}(A))`.
pub fn schur_at(nu: &Partition, alphabet: &Alphabet) -> RatFunc {
    if alphabet.finite_len().is_some_and(|l| nu.len() > l) {
        return RatFunc::zero();
    }
    JT_SPEC.get_or_compute((nu.clone(), alphabet.clone()), || {
        let hs: Vec<RatFunc> = (0..=nu.part(0) as i64 + nu.len() as i64)
            .map(|k| h_at(k, alphabet))
            .collect();
        let m = jacobi_trudi(nu, &Partition::empty(), |k| {
            if k < 0 {
                RatFunc::zero()
            } else {
                hs[k as usize].clone()
            }
        });
        determinant(&m)
    })
}

/// Evaluates `f` on an alphabet through Jacobi–Trudi determinants.
pub fn specialize(f: &SymFunc, alphabet: &Alphabet) -> RatFunc {
    f.to_schur()
        .terms
        .iter()
        .fold(RatFunc::zero(), |acc, (nu, c)| {
            &acc + &(c * &schur_at(nu, alphabet))
        })
}

static PRINCIPAL: Memo<Partition, RatFunc> = Memo::new();

/// Hook-content closed form `s_μ(1, q, q², …) = q^{n(μ)} / ∏_e (1 - q^{h(e)})`.
pub fn principal_hook_content(mu: &Partition) -> RatFunc {
    PRINCIPAL.get_or_compute(mu.clone(), || {
        let one = LaurentPoly::one();
        let den = mu.hooks().iter().fold(LaurentPoly::one(), |acc, &h| {
            &acc * &(&one - &LaurentPoly::u_pow(2 * h as i32))
        });
        RatFunc::new(LaurentPoly::u_pow(2 * mu.n_statistic() as i32), den).expect("nonzero")
    })
}

/// `s_μ(1, q^{-1}, q^{-2}, …)`, the hook-content form at `q ↦ q^{-1}`.
fn inverse_principal_hook_content(mu: &Partition) -> RatFunc {
    principal_hook_content(mu).substitute_inverse(crate::arith::Var::U)
}

static SKEW_PRINCIPAL: Memo<(Partition, Partition), RatFunc> = Memo::new();

/// `s_{μ/ρ}(1, q, q², …) = Σ_θ c^μ_{ρθ} s_θ(1, q, …)`.
pub fn skew_principal(mu: &Partition, rho: &Partition) -> RatFunc {
    if !mu.contains(rho) {
        return RatFunc::zero();
    }
    SKEW_PRINCIPAL.get_or_compute((mu.clone(), rho.clone()), || {
        skew_schur(mu, rho)
            .terms
            .iter()
            .fold(RatFunc::zero(), |acc, (theta, c)| {
                &acc + &(c * &principal_hook_content(theta))
            })
    })
}

/// `s_{μ/ρ}` at an alphabet by the determinantal formula in `h_k(A)`.
pub fn skew_at_jacobi_trudi(mu: &Partition, rho: &Partition, alphabet: &Alphabet) -> RatFunc {
    if !mu.contains(rho) {
        return RatFunc::zero();
    }
    let m = jacobi_trudi(mu, rho, |k| h_at(k, alphabet));
    determinant(&m)
}

static EMU: Memo<(Partition, Partition), RatFunc> = Memo::new();

/// `s_ν(q^{μ₁-1}, q^{μ₂-2}, …)` via `s_ν(A ∪ B) = Σ_ρ s_{ν/ρ}(A) s_ρ(B)`, where
/// `A = {q^{μ_i - i}}_{i ≤ l(μ)}` and `B = q^{-(l+1)}·(1, q^{-1}, …)`.
pub fn emu_spec(nu: &Partition, mu: &Partition) -> RatFunc {
    EMU.get_or_compute((nu.clone(), mu.clone()), || {
        let head = Alphabet::shifted_head(mu);
        let tail_shift = -2 * (mu.len() as i32 + 1);
        nu.subdiagrams().iter().fold(RatFunc::zero(), |acc, rho| {
            let a = specialize(&skew_schur(nu, rho), &head);
            if a.is_zero() {
                return acc;
            }
            let b =
                inverse_principal_hook_content(rho).shift(&[tail_shift * rho.size() as i32, 0, 0]);
            &acc + &(&a * &b)
        })
    })
}

/// `Σ_ρ (-1)^{|ρ|} s_{μ/ρ} s_{ρ'/ν'}`, in the Schur basis.
pub fn skew_orthogonality_sum(mu: &Partition, nu: &Partition) -> SymFunc {
    let nu_c = nu.conjugate();
    let mut out = SymFunc::zero(Basis::Schur);
    for rho in mu.subdiagrams() {
        if !rho.contains(nu) {
            continue;
        }
        let left = skew_schur(mu, &rho);
        let right = skew_schur(&rho.conjugate(), &nu_c);
        let sign = if rho.size() % 2 == 0 { 1 } else { -1 };
        out = out.add(&left.multiply(&right).scale_int(sign));
    }
    out
}

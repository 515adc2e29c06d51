use std::collections::BTreeMap;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::arith::{GaussianRational, RatFunc};
use crate::error::{Error, Result};
use crate::partitions::Partition;

/// Key `(μ⁺, μ⁻)` of the monomial `p⁺_{μ⁺} p⁻_{μ⁻}`.
pub type BiKey = (Partition, Partition);

fn degree(key: &BiKey) -> u32 {
    key.0.size() + key.1.size()
}

/// Truncated series in two families of power sums, supported on total degree `≤ cutoff`.
#[derive(Clone, Debug)]
pub struct BiSeries {
    terms: BTreeMap<BiKey, RatFunc>,
    cutoff: u32,
}

impl BiSeries {
    pub fn zero(cutoff: u32) -> Self {
        Self {
            terms: BTreeMap::new(),
            cutoff,
        }
    }

    pub fn one(cutoff: u32) -> Self {
        let mut s = Self::zero(cutoff);
        s.add_term((Partition::empty(), Partition::empty()), &RatFunc::one());
        s
    }

    pub fn from_terms<I: IntoIterator<Item = (BiKey, RatFunc)>>(cutoff: u32, iter: I) -> Self {
        let mut s = Self::zero(cutoff);
        for (k, c) in iter {
            s.add_term(k, &c);
        }
        s
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    pub fn terms(&self) -> &BTreeMap<BiKey, RatFunc> {
        &self.terms
    }

    pub fn coeff(&self, plus: &Partition, minus: &Partition) -> RatFunc {
        self.terms
            .get(&(plus.clone(), minus.clone()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn constant_term(&self) -> RatFunc {
        self.coeff(&Partition::empty(), &Partition::empty())
    }

    /// Adds `c` at `key`; terms above the cutoff are dropped.
    pub fn add_term(&mut self, key: BiKey, c: &RatFunc) {
        if c.is_zero() || degree(&key) > self.cutoff {
            return;
        }
        let slot = self.terms.entry(key.clone()).or_default();
        *slot = &*slot + c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.cutoff.min(other.cutoff));
        for (k, c) in self.terms.iter().chain(&other.terms) {
            out.add_term(k.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        Self::from_terms(
            self.cutoff,
            self.terms.iter().map(|(k, x)| (k.clone(), x * c)),
        )
    }

    /// Product with `p_α p_β = p_{α∪β}` in each family, truncated.
    pub fn mul(&self, other: &Self) -> Self {
        self.mul_filtered(other, &|_| true)
    }

    fn mul_filtered(&self, other: &Self, keep: &dyn Fn(&BiKey) -> bool) -> Self {
        let mut out = Self::zero(self.cutoff.min(other.cutoff));
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                if degree(ka) + degree(kb) > out.cutoff {
                    continue;
                }
                let key = (ka.0.union(&kb.0), ka.1.union(&kb.1));
                if keep(&key) {
                    out.add_term(key, &(ca * cb));
                }
            }
        }
        out
    }

    fn without_constant(&self) -> Self {
        let mut x = self.clone();
        x.terms.remove(&(Partition::empty(), Partition::empty()));
        x
    }

    /// Keeps only keys `(α, β)` with `α ⊆ μ⁺` and `β ⊆ μ⁻` as multisets.
    pub fn restrict_to_submultisets(&self, plus: &Partition, minus: &Partition) -> Self {
        Self::from_terms(
            self.cutoff,
            self.terms
                .iter()
                .filter(|(k, _)| plus.contains_parts(&k.0) && minus.contains_parts(&k.1))
                .map(|(k, c)| (k.clone(), c.clone())),
        )
    }
}

impl PartialEq for BiSeries {
    fn eq(&self, other: &Self) -> bool {
        self.terms.len() == other.terms.len()
            && self
                .terms
                .iter()
                .all(|(k, c)| other.terms.get(k).is_some_and(|d| c.rf_equal(d)))
    }
}

impl Serialize for BiSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<(&Partition, &Partition, &RatFunc)> =
            self.terms.iter().map(|((a, b), c)| (a, b, c)).collect();
        let mut st = s.serialize_struct("BiSeries", 2)?;
        st.serialize_field("cutoff", &self.cutoff)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

fn log_filtered(s: &BiSeries, keep: &dyn Fn(&BiKey) -> bool) -> Result<BiSeries> {
    if !s.constant_term().is_one() {
        return Err(Error::ConstantTerm {
            op: "log",
            expected: "1",
        });
    }
    let x = s.without_constant();
    let mut out = BiSeries::zero(s.cutoff);
    let mut power = x.clone();
    for k in 1..=s.cutoff as i64 {
        if power.terms.is_empty() {
            break;
        }
        let sign = if k % 2 == 1 { 1 } else { -1 };
        out = out.add(&power.scale(&RatFunc::constant(GaussianRational::from_ratio(sign, k))));
        power = power.mul_filtered(&x, keep);
    }
    Ok(out)
}

/// `log S = Σ_{k≥1} (-1)^{k-1} (S-1)^k / k`; requires constant term 1.
pub fn series_log(s: &BiSeries) -> Result<BiSeries> {
    log_filtered(s, &|_| true)
}

/// The `(μ⁺, μ⁻)` coefficient of `log S`, touching only sub-multiset keys.
pub fn series_log_coeff(s: &BiSeries, plus: &Partition, minus: &Partition) -> Result<RatFunc> {
    let r = s.restrict_to_submultisets(plus, minus);
    let keep = |k: &BiKey| plus.contains_parts(&k.0) && minus.contains_parts(&k.1);
    Ok(log_filtered(&r, &keep)?.coeff(plus, minus))
}

/// `exp S = Σ_{k≥0} S^k / k!`; requires constant term 0.
pub fn series_exp(s: &BiSeries) -> Result<BiSeries> {
    if !s.constant_term().is_zero() {
        return Err(Error::ConstantTerm {
            op: "exp",
            expected: "0",
        });
    }
    let mut out = BiSeries::one(s.cutoff);
    let mut power = BiSeries::one(s.cutoff);
    for k in 1..=s.cutoff as i64 {
        power = power.mul(s).scale(&RatFunc::ratio(1, k));
        if power.terms.is_empty() {
            break;
        }
        out = out.add(&power);
    }
    Ok(out)
}

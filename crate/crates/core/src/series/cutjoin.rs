use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::arith::{GaussianRational, RatFunc};
use crate::partitions::Partition;
use crate::symfunc::{Basis, SymFunc};

/// `Σ c_μ p_μ` in a single family of power-sum variables.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct PPolynomial {
    terms: BTreeMap<Partition, RatFunc>,
}

impl PPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(mu: Partition, c: RatFunc) -> Self {
        let mut f = Self::zero();
        f.add_term(mu, &c);
        f
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
        let slot = self.terms.entry(mu.clone()).or_default();
        *slot = &*slot + c;
        if slot.is_zero() {
            self.terms.remove(&mu);
        }
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        let mut out = Self::zero();
        for (mu, x) in &self.terms {
            out.add_term(mu.clone(), &(x * c));
        }
        out
    }
}

impl From<&SymFunc> for PPolynomial {
    fn from(f: &SymFunc) -> Self {
        let p = f.to_power_sum();
        let mut out = Self::zero();
        for (mu, c) in p.terms() {
            out.add_term(mu.clone(), c);
        }
        out
    }
}

impl From<&PPolynomial> for SymFunc {
    fn from(f: &PPolynomial) -> Self {
        SymFunc::from_terms(
            Basis::PowerSum,
            f.terms.iter().map(|(m, c)| (m.clone(), c.clone())),
        )
    }
}

impl PartialEq for PPolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms.len() == other.terms.len()
            && self
                .terms
                .iter()
                .all(|(m, c)| other.terms.get(m).is_some_and(|d| c.rf_equal(d)))
    }
}

/// `K p_μ` as a list of `(monomial, rational weight)`.
fn cut_join_monomial(mu: &Partition) -> Vec<(Partition, GaussianRational)> {
    let mult = mu.multiplicities();
    let mut out = Vec::new();
    let keys: Vec<u32> = mult.keys().copied().collect();
    // join: ½ Σ_{i,j} ij p_{i+j} ∂_i ∂_j
    for &i in &keys {
        for &j in &keys {
            let mi = mult[&i] as i64;
            let pairs = if i == j {
                mi * (mi - 1)
            } else {
                mi * mult[&j] as i64
            };
            if pairs == 0 {
                continue;
            }
            let rest = mu
                .remove_parts(&Partition::from_parts(vec![i, j]))
                .expect("parts present");
            let target = rest.union(&Partition::from_parts(vec![i + j]));
            out.push((
                target,
                GaussianRational::from_ratio(pairs * (i * j) as i64, 2),
            ));
        }
    }
    // cut: ½ Σ_{i,j} (i+j) p_i p_j ∂_{i+j}
    for &k in &keys {
        let rest = mu
            .remove_parts(&Partition::from_parts(vec![k]))
            .expect("part present");
        for i in 1..k {
            let target = rest.union(&Partition::from_parts(vec![i, k - i]));
            out.push((
                target,
                GaussianRational::from_ratio(mult[&k] as i64 * k as i64, 2),
            ));
        }
    }
    out
}

/// `K = ½ Σ_{i,j≥1} (ij p_{i+j} ∂²/∂p_i∂p_j + (i+j) p_i p_j ∂/∂p_{i+j})`.
pub fn cut_join(f: &PPolynomial) -> PPolynomial {
    let mut out = PPolynomial::zero();
    for (mu, c) in &f.terms {
        for (target, w) in cut_join_monomial(mu) {
            out.add_term(target, &c.scale(&w));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn mono(parts: &[u32]) -> PPolynomial {
        PPolynomial::monomial(p(parts), RatFunc::one())
    }

    #[test]
    fn examples() {
        assert!(cut_join(&mono(&[1])).is_zero());
        assert_eq!(cut_join(&mono(&[2])), mono(&[1, 1]));
        let s2 = PPolynomial::from(&SymFunc::s(p(&[2])));
        assert_eq!(cut_join(&s2), s2);
    }

    #[test]
    fn join_of_two_ones() {
        assert_eq!(cut_join(&mono(&[1, 1])), mono(&[2]));
    }

    #[test]
    fn eigenvalues_small() {
        for nu in crate::partitions::enumerate_up_to(5) {
            let s = PPolynomial::from(&SymFunc::s(nu.clone()));
            let want = s.scale(&RatFunc::integer(nu.kappa() / 2));
            assert_eq!(cut_join(&s), want, "{nu}");
        }
    }
}

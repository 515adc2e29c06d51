//! Integer partitions and their statistics.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive parts.
///
/// Ordered by size first and, within one size, descending lexicographically,
/// so `(3) < (2,1) < (1,1,1)` and `∅ < (1) < (2)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Self(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_parts(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// The one-row partition `(n)`, empty for `n = 0`.
    pub fn row(n: u32) -> Self {
        Self::from_parts(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: u32) -> Self {
        Self(vec![1; n as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// `|μ|`
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `l(μ)`
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// `m_j(μ)`
    pub fn multiplicity(&self, j: u32) -> usize {
        self.0.iter().filter(|&&p| p == j).count()
    }

    pub fn multiplicities(&self) -> BTreeMap<u32, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Centralizer order `z_μ = ∏_j m_j! j^{m_j}`.
    pub fn z_order(&self) -> u64 {
        self.multiplicities()
            .into_iter()
            .map(|(j, m)| factorial(m as u32) * (j as u64).pow(m as u32))
            .product()
    }

    /// `κ_μ = Σ_i μ_i(μ_i - 2i + 1)`, always even.
    pub fn kappa(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &m)| m as i64 * (m as i64 - 2 * (i as i64 + 1) + 1))
            .sum()
    }

    /// `n(μ) = Σ_i (i-1) μ_i`.
    pub fn n_statistic(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &m)| i as u64 * m as u64)
            .sum()
    }

    /// `(-1)^{|μ| - l(μ)}`, the sign of a permutation of cycle type μ.
    pub fn sign(&self) -> i64 {
        if (self.size() as usize - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn conjugate(&self) -> Self {
        let first = self.part(0);
        Self(
            (1..=first)
                .map(|i| self.0.iter().filter(|&&p| p >= i).count() as u32)
                .collect(),
        )
    }

    /// Hook lengths of all cells, row by row.
    pub fn hooks(&self) -> Vec<u32> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size() as usize);
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row as usize {
                let arm = row - j as u32 - 1;
                let leg = conj.0[j] - i as u32 - 1;
                out.push(arm + leg + 1);
            }
        }
        out
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Self) -> Self {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Self::from_parts(parts)
    }

    /// Young-diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Self) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Multiset containment of parts: `other` is a sub-multiset of `self`.
    pub fn contains_parts(&self, other: &Self) -> bool {
        let mine = self.multiplicities();
        other
            .multiplicities()
            .into_iter()
            .all(|(j, m)| mine.get(&j).is_some_and(|&k| k >= m))
    }

    /// All partitions whose diagram fits inside this one, in canonical order.
    pub fn subdiagrams(&self) -> Vec<Self> {
        fn go(outer: &[u32], i: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            out.push(Partition(cur.clone()));
            if i == outer.len() {
                return;
            }
            for p in 1..=cap.min(outer[i]) {
                cur.push(p);
                go(outer, i + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(&self.0, 0, self.part(0), &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// All sub-multisets of the parts, in canonical order.
    pub fn sub_multisets(&self) -> Vec<Self> {
        let mut out = vec![Vec::new()];
        for (j, m) in self.multiplicities() {
            let mut next = Vec::new();
            for base in &out {
                for k in 0..=m {
                    let mut v: Vec<u32> = base.clone();
                    v.extend(std::iter::repeat_n(j, k));
                    next.push(v);
                }
            }
            out = next;
        }
        let mut out: Vec<Self> = out.into_iter().map(Self::from_parts).collect();
        out.sort();
        out
    }

    /// Removes the parts of `other` (which must be a sub-multiset).
    pub fn remove_parts(&self, other: &Self) -> Option<Self> {
        let mut parts = self.0.clone();
        for p in &other.0 {
            let pos = parts.iter().position(|x| x == p)?;
            parts.remove(pos);
        }
        Some(Self(parts))
    }
}

fn factorial(n: u32) -> u64 {
    (1..=n as u64).product()
}

/// All partitions of `d` in descending lexicographic order.
pub fn enumerate(d: u32) -> Vec<Partition> {
    fn go(rest: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=cap.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(d, d, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `max`, in canonical order.
pub fn enumerate_up_to(max: u32) -> Vec<Partition> {
    (0..=max).flat_map(enumerate).collect()
}

pub fn z_order(mu: &Partition) -> u64 {
    mu.z_order()
}

pub fn kappa(mu: &Partition) -> i64 {
    mu.kappa()
}

pub fn hooks(mu: &Partition) -> Vec<u32> {
    mu.hooks()
}

pub fn conjugate(mu: &Partition) -> Partition {
    mu.conjugate()
}

pub fn union(a: &Partition, b: &Partition) -> Partition {
    a.union(b)
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Parses comma-separated parts such as `2,1`; `""`, `0` and `∅` are the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .trim();
        if s.is_empty() || s == "0" || s == "∅" {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidPartition(format!("cannot parse `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

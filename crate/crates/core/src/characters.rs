//! Irreducible characters of the symmetric groups.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::partitions::{enumerate, Partition};

/// All values `χ_ν(μ)` for `ν, μ ⊢ d`, rows and columns in descending
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    degree: u32,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn compute(degree: u32) -> Self {
        let partitions = enumerate(degree);
        let index = partitions
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let mut memo = HashMap::new();
        let values = partitions
            .iter()
            .map(|nu| {
                partitions
                    .iter()
                    .map(|mu| mn_chi(nu, mu.parts(), &mut memo))
                    .collect()
            })
            .collect();
        Self {
            degree,
            partitions,
            index,
            values,
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    /// `χ_ν(μ)`; both must be partitions of the table degree.
    pub fn get(&self, nu: &Partition, mu: &Partition) -> i64 {
        self.values[self.index[nu]][self.index[mu]]
    }

    pub fn row(&self, nu: &Partition) -> &[i64] {
        &self.values[self.index[nu]]
    }

    /// Header row of class labels, then one row per irreducible.
    pub fn to_csv(&self) -> String {
        let label = |p: &Partition| format!("\"{}\"", compact(p));
        let mut out = String::from("nu\\mu");
        for mu in &self.partitions {
            out.push(',');
            out.push_str(&label(mu));
        }
        out.push('\n');
        for (nu, row) in self.partitions.iter().zip(&self.values) {
            out.push_str(&label(nu));
            for v in row {
                let _ = write!(out, ",{v}");
            }
            out.push('\n');
        }
        out
    }

    pub fn to_text(&self) -> String {
        let labels: Vec<String> = self.partitions.iter().map(compact).collect();
        let width = labels
            .iter()
            .map(|l| l.len())
            .chain(self.values.iter().flatten().map(|v| v.to_string().len()))
            .max()
            .unwrap_or(1)
            .max(2);
        let mut out = format!("{:>w$}", "", w = width);
        for l in &labels {
            let _ = write!(out, " {l:>width$}");
        }
        out.push('\n');
        for (l, row) in labels.iter().zip(&self.values) {
            let _ = write!(out, "{l:>width$}");
            for v in row {
                let _ = write!(out, " {v:>width$}");
            }
            out.push('\n');
        }
        out
    }
}

fn compact(p: &Partition) -> String {
    if p.is_empty() {
        return "0".into();
    }
    p.parts()
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Murnaghan–Nakayama: strip a rim hook of length `mu[0]` in every possible way.
fn mn_chi(nu: &Partition, mu: &[u32], memo: &mut HashMap<(Partition, Vec<u32>), i64>) -> i64 {
    let Some((&k, rest)) = mu.split_first() else {
        return if nu.is_empty() { 1 } else { 0 };
    };
    let key = (nu.clone(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let len = nu.len();
    let beta: Vec<i64> = (0..len)
        .map(|i| (nu.part(i) as usize + len - 1 - i) as i64)
        .collect();
    let k = k as i64;
    let mut total = 0;
    for &b in &beta {
        let target = b - k;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let height = beta.iter().filter(|&&x| target < x && x < b).count();
        let mut next: Vec<i64> = beta
            .iter()
            .map(|&x| if x == b { target } else { x })
            .collect();
        next.sort_unstable_by(|a, b| b.cmp(a));
        let parts = next
            .iter()
            .enumerate()
            .map(|(i, &x)| (x - (len - 1 - i) as i64) as u32)
            .collect();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * mn_chi(&Partition::from_parts(parts), rest, memo);
    }
    memo.insert(key, total);
    total
}

fn tables() -> &'static Mutex<HashMap<u32, Arc<CharacterTable>>> {
    static TABLES: OnceLock<Mutex<HashMap<u32, Arc<CharacterTable>>>> = OnceLock::new();
    TABLES.get_or_init(Default::default)
}

/// Shared character table of `S_d`, computed once per degree.
pub fn character_table(degree: u32) -> Arc<CharacterTable> {
    if let Some(t) = tables().lock().unwrap().get(&degree) {
        return Arc::clone(t);
    }
    let table = Arc::new(CharacterTable::compute(degree));
    Arc::clone(tables().lock().unwrap().entry(degree).or_insert(table))
}

/// `χ_ν(μ)`.
pub fn chi(nu: &Partition, mu: &Partition) -> Result<i64> {
    if nu.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: nu.to_string(),
            left_size: nu.size(),
            right: mu.to_string(),
            right_size: mu.size(),
        });
    }
    Ok(character_table(nu.size()).get(nu, mu))
}

//! Named verification suites and table emitters.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::arith::{RatFunc, Var};
use crate::characters::character_table;
use crate::error::{Error, Result};
use crate::partitions::{enumerate, enumerate_up_to, Partition};
use crate::series::{
    closed_targets, cut_join, g_predict, gn1_closed, marino_vafa_series, series_log_coeff, swap_tw,
    trig_eval, PPolynomial,
};
use crate::symfunc::{
    e_at, principal_hook_content, schur_at, skew_orthogonality_sum, Alphabet, SymFunc,
};
use crate::wzw::{
    difference_table, difference_table_json, difference_table_text, tau_neg_one_coeff,
    tau_one_convolution, w_difference, w_one, w_pair_def, w_pair_skew,
};

pub const SUITES: [&str; 10] = [
    "orthogonality",
    "w-equivalence",
    "w-symmetry",
    "eigenvalue",
    "tau1",
    "tau-neg1",
    "g-closed",
    "table-7-1",
    "char-orthogonality",
    "hook-identity",
];

pub const TABLES: [&str; 3] = ["w-differences", "g-predictions", "character-table"];

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub case: String,
    pub expected: RatFunc,
    pub actual: RatFunc,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: usize,
    pub failures: Vec<Failure>,
    /// Printed values known to be wrong, with the value actually verified.
    pub notes: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        Self {
            suite: suite.to_string(),
            cases: 0,
            failures: Vec::new(),
            notes: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, case: impl FnOnce() -> String, expected: &RatFunc, actual: &RatFunc) {
        self.cases += 1;
        if !expected.rf_equal(actual) {
            self.failures.push(Failure {
                case: case(),
                expected: expected.clone(),
                actual: actual.clone(),
            });
        }
    }

    /// Compares two symmetric functions coefficientwise in the basis of `expected`.
    fn check_symfunc(&mut self, case: &str, expected: &SymFunc, actual: &SymFunc) {
        self.cases += 1;
        let actual = actual.to_basis(expected.basis());
        let keys: std::collections::BTreeSet<&Partition> = expected
            .terms()
            .keys()
            .chain(actual.terms().keys())
            .collect();
        for k in keys {
            let (e, a) = (expected.coeff(k), actual.coeff(k));
            if !e.rf_equal(&a) {
                self.failures.push(Failure {
                    case: format!("{case} at {k}"),
                    expected: e,
                    actual: a,
                });
            }
        }
    }

    /// One human-readable line per report, plus one per failure.
    pub fn to_text(&self) -> String {
        let status = if self.passed() { "ok" } else { "FAILED" };
        let mut out = format!(
            "{}: {} cases, {} failures: {status}\n",
            self.suite,
            self.cases,
            self.failures.len()
        );
        for f in &self.failures {
            out.push_str(&format!(
                "  {}: expected {} got {}\n",
                f.case, f.expected, f.actual
            ));
        }
        for n in &self.notes {
            out.push_str(&format!("  note: {n}\n"));
        }
        out
    }
}

fn int(n: i64) -> RatFunc {
    RatFunc::integer(n)
}

fn sign(n: u32) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Runs a named suite with partition sizes bounded by `max_size`.
pub fn run_suite(name: &str, max_size: i64) -> Result<SuiteReport> {
    if max_size < 0 {
        return Err(Error::Precondition(format!(
            "max_size must be nonnegative, got {max_size}"
        )));
    }
    let m =
        u32::try_from(max_size).map_err(|_| Error::Precondition("max_size too large".into()))?;
    let start = Instant::now();
    let mut r = match name {
        "orthogonality" => orthogonality(m),
        "w-equivalence" => w_equivalence(m),
        "w-symmetry" => w_symmetry(m),
        "eigenvalue" => eigenvalue(m),
        "tau1" => tau1(m),
        "tau-neg1" => tau_neg1(m),
        "g-closed" => g_closed(m)?,
        "table-7-1" => table_7_1(m),
        "char-orthogonality" => char_orthogonality(m),
        "hook-identity" => hook_identity(m),
        _ => {
            return Err(Error::UnknownName {
                kind: "suite",
                name: name.to_string(),
            })
        }
    };
    r.elapsed = start.elapsed();
    Ok(r)
}

fn orthogonality(m: u32) -> SuiteReport {
    let mut r = SuiteReport::new("orthogonality");
    let parts = enumerate_up_to(m);
    for mu in &parts {
        for nu in &parts {
            let want = if mu == nu {
                SymFunc::constant(int(sign(nu.size())), crate::symfunc::Basis::Schur)
            } else {
                SymFunc::zero(crate::symfunc::Basis::Schur)
            };
            r.check_symfunc(
                &format!("mu={mu} nu={nu}"),
                &want,
                &skew_orthogonality_sum(mu, nu),
            );
        }
    }
    r
}

fn pairs_total(m: u32) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for mu in enumerate_up_to(m) {
        for nu in enumerate_up_to(m - mu.size()) {
            out.push((mu.clone(), nu));
        }
    }
    out
}

fn pairs_each(m: u32) -> Vec<(Partition, Partition)> {
    let parts = enumerate_up_to(m);
    parts
        .iter()
        .flat_map(|a| parts.iter().map(move |b| (a.clone(), b.clone())))
        .collect()
}

fn w_equivalence(m: u32) -> SuiteReport {
    let mut r = SuiteReport::new("w-equivalence");
    for (mu, nu) in pairs_total(m) {
        r.check(
            || format!("mu={mu} nu={nu}"),
            w_pair_skew(&mu, &nu).value(),
            w_pair_def(&mu, &nu).value(),
        );
    }
    r
}

fn w_symmetry(m: u32) -> SuiteReport {
    let mut r = SuiteReport::new("w-symmetry");
    for (mu, nu) in pairs_total(m) {
        r.check(
            || format!("mu={mu} nu={nu}"),
            w_pair_def(&mu, &nu).value(),
            w_pair_def(&nu, &mu).value(),
        );
        if mu.is_empty() {
            r.check(
                || format!("W_(∅,{nu}) = W_{nu}"),
                w_one(&nu).value(),
                w_pair_def(&mu, &nu).value(),
            );
        }
        if nu.is_empty() {
            r.check(
                || format!("W_({mu},∅) = W_{mu}"),
                w_one(&mu).value(),
                w_pair_def(&mu, &nu).value(),
            );
        }
    }
    r
}

fn eigenvalue(m: u32) -> SuiteReport {
    let mut r = SuiteReport::new("eigenvalue");
    for nu in enumerate_up_to(m) {
        let s = PPolynomial::from(&SymFunc::s(nu.clone()));
        let want = s.scale(&int(nu.kappa() / 2));
        r.check_symfunc(
            &format!("nu={nu}"),
            &SymFunc::from(&want),
            &SymFunc::from(&cut_join(&s)),
        );
    }
    r
}

fn tau1(m: u32) -> SuiteReport {
    let mut r = SuiteReport::new("tau1");
    for (a, b) in pairs_each(m) {
        r.check(
            || format!("nu+={a} nu-={b}"),
            w_pair_skew(&a, &b).value(),
            tau_one_convolution(&a, &b).value(),
        );
    }
    r
}

fn tau_neg1(m: u32) -> SuiteReport {
    let mut r = SuiteReport::new("tau-neg1");
    for (a, b) in pairs_each(m) {
        let shift = -(a.kappa() + b.kappa()) as i32;
        let want = w_pair_skew(&a, &b).value().shift(&[shift, 0, 0]);
        r.check(
            || format!("nu+={a} nu-={b}"),
            &want,
            tau_neg_one_coeff(&a, &b).value(),
        );
    }
    r
}

fn g_closed(m: u32) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("g-closed");
    for t in closed_targets() {
        if t.plus.size() > m || t.minus.size() > m {
            continue;
        }
        let cutoff = t.plus.size() + t.minus.size();
        let predicted = g_predict(&t.plus, &t.minus, cutoff)?;
        for (i, d) in t.displays.iter().enumerate() {
            let target = trig_eval(d.expected())?;
            r.check(|| format!("{} form {}", t.name, i + 1), &target, &predicted);
            if let Some(e) = &d.erratum {
                let gap = &trig_eval(&e.corrected)? - &trig_eval(&d.printed)?;
                r.check(
                    || format!("{} form {} erratum", t.name, i + 1),
                    &trig_eval(&e.discrepancy)?,
                    &gap,
                );
                r.notes
                    .push(format!("{} form {}: {}", t.name, i + 1, e.note));
            }
        }
    }
    for n in 1..=m {
        let predicted = g_predict(&Partition::row(n), &Partition::row(1), n + 1)?;
        r.check(
            || format!("G_(({n}),(1)) product formula"),
            &gn1_closed(n)?,
            &predicted,
        );
    }
    for (a, b) in pairs_total(m) {
        if a.is_empty() || b.is_empty() {
            continue;
        }
        let cutoff = a.size() + b.size();
        let ab = g_predict(&a, &b, cutoff)?;
        let ba = g_predict(&b, &a, cutoff)?;
        r.check(|| format!("inverse symmetry {a} {b}"), &ba, &swap_tw(&ab));
    }
    let mv = marino_vafa_series(m);
    for eta in enumerate_up_to(m) {
        if eta.is_empty() {
            continue;
        }
        let want = series_log_coeff(&mv, &eta, &Partition::empty())?;
        let got = g_predict(&eta, &Partition::empty(), eta.size())?;
        r.check(|| format!("single-family log {eta}"), &want, &got);
    }
    Ok(r)
}

fn table_7_1(m: u32) -> SuiteReport {
    let mut r = SuiteReport::new("table-7-1");
    for row in difference_table() {
        if row.mu.size() > m || row.nu.size() > m {
            continue;
        }
        let got = w_difference(&row.mu, &row.nu);
        r.check(
            || format!("mu={} nu={}", row.mu, row.nu),
            row.expected(),
            &got,
        );
        if let Some(e) = &row.erratum {
            r.notes
                .push(format!("mu={} nu={}: {}", row.mu, row.nu, e.note));
        }
    }
    r
}

fn char_orthogonality(m: u32) -> SuiteReport {
    let mut r = SuiteReport::new("char-orthogonality");
    for d in 0..=m {
        let t = character_table(d);
        let ps = t.partitions();
        for a in ps {
            for b in ps {
                let row: RatFunc = ps.iter().fold(RatFunc::zero(), |acc, mu| {
                    &acc + &RatFunc::ratio(t.get(a, mu) * t.get(b, mu), mu.z_order() as i64)
                });
                r.check(|| format!("rows {a} {b}"), &int((a == b) as i64), &row);
                let col: i64 = ps.iter().map(|nu| t.get(nu, a) * t.get(nu, b)).sum();
                let want = if a == b { a.z_order() as i64 } else { 0 };
                r.check(|| format!("columns {a} {b}"), &int(want), &int(col));
            }
            for mu in ps {
                let s = sign(mu.size() - mu.len() as u32);
                r.check(
                    || format!("conjugate {a} at {mu}"),
                    &int(s * t.get(a, mu)),
                    &int(t.get(&a.conjugate(), mu)),
                );
            }
        }
    }
    r
}

fn hook_identity(m: u32) -> SuiteReport {
    let mut r = SuiteReport::new("hook-identity");
    for mu in enumerate_up_to(m) {
        let sum: i64 = mu.hooks().iter().map(|&h| h as i64).sum();
        let want = mu.kappa() / 2 + 2 * mu.n_statistic() as i64 + mu.size() as i64;
        r.check(|| format!("hook sum {mu}"), &int(want), &int(sum));
        let w = w_one(&mu).into_inner();
        let inv = w.substitute_inverse(Var::U);
        let scaled = w.shift(&[-mu.kappa() as i32, 0, 0]);
        r.check(
            || format!("W at q^1/2 -> q^-1/2 {mu}"),
            &scaled.scale(&sign(mu.size()).into()),
            &inv,
        );
        r.check(
            || format!("W at q^1/2 -> -q^-1/2 {mu}"),
            &scaled,
            &inv.substitute_negation(Var::U),
        );
        r.check(
            || format!("principal specialization {mu}"),
            &principal_hook_content(&mu),
            &schur_at(&mu, &Alphabet::Principal),
        );
    }
    if m > 0 {
        r.notes.push(
            "W_μ(q^-1) = q^(-κ/2) W_μ(q) holds for the branch q^1/2 -> -q^-1/2; \
             with q^1/2 -> q^-1/2 it needs the extra factor (-1)^|μ|"
                .into(),
        );
    }
    for n in 0..=m as i64 {
        let inv = e_at(n, &Alphabet::Principal).substitute_inverse(Var::U);
        let want = e_at(n, &Alphabet::Principal)
            .shift(&[-(n * (n - 3)) as i32, 0, 0])
            .scale(&sign(n as u32).into());
        r.check(|| format!("e-reversal n={n}"), &want, &inv);
    }
    r
}

#[derive(Serialize)]
struct GEntry {
    name: &'static str,
    pair: (Partition, Partition),
    predicted: RatFunc,
    target: RatFunc,
    equal: bool,
}

#[derive(Serialize)]
struct CharacterTableDoc<'a> {
    degree: u32,
    partitions: &'a [Partition],
    values: Vec<Vec<i64>>,
}

/// Output format of [`emit_table`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Self::Json),
            "text" => Ok(Self::Text),
            "csv" => Ok(Self::Csv),
            _ => Err(Error::UnknownName {
                kind: "format",
                name: s.to_string(),
            }),
        }
    }
}

fn g_entries() -> Result<Vec<GEntry>> {
    let mut out = Vec::new();
    for t in closed_targets() {
        let predicted = g_predict(&t.plus, &t.minus, t.plus.size() + t.minus.size())?;
        let target = trig_eval(t.displays[0].expected())?;
        let equal = predicted.rf_equal(&target);
        out.push(GEntry {
            name: t.name,
            pair: (t.plus, t.minus),
            predicted,
            target,
            equal,
        });
    }
    Ok(out)
}

/// Deterministic rendering of a named table. `degree` selects the character table.
pub fn emit_table(name: &str, format: Format, degree: u32) -> Result<String> {
    let unsupported = || Error::UnknownName {
        kind: "format for this table",
        name: format!("{format:?}").to_lowercase(),
    };
    let doc = match (name, format) {
        ("w-differences", Format::Json) => difference_table_json(),
        ("w-differences", Format::Text) => difference_table_text(),
        ("g-predictions", Format::Json) => {
            serde_json::to_string_pretty(&g_entries()?).expect("serializable")
        }
        ("g-predictions", Format::Text) => g_entries()?
            .iter()
            .map(|e| {
                format!(
                    "{} {} {} {}\n",
                    e.name,
                    e.pair.0,
                    e.pair.1,
                    if e.equal { "equal" } else { "DIFFERENT" }
                )
            })
            .collect(),
        ("character-table", f) => {
            let t = character_table(degree);
            match f {
                Format::Json => {
                    let values = t.partitions().iter().map(|nu| t.row(nu).to_vec()).collect();
                    let doc = CharacterTableDoc {
                        degree,
                        partitions: t.partitions(),
                        values,
                    };
                    serde_json::to_string_pretty(&doc).expect("serializable")
                }
                Format::Text => t.to_text(),
                Format::Csv => t.to_csv(),
            }
        }
        ("w-differences" | "g-predictions", Format::Csv) => return Err(unsupported()),
        _ => {
            return Err(Error::UnknownName {
                kind: "table",
                name: name.to_string(),
            })
        }
    };
    Ok(if doc.ends_with('\n') { doc } else { doc + "\n" })
}

/// All partitions of `d`, for callers that enumerate cases themselves.
pub fn partitions_of(d: u32) -> Vec<Partition> {
    enumerate(d)
}

//! Acceptance gate: one line per criterion, non-zero exit if any fails.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use hodge_core::arith::Var;
use hodge_core::partitions::{enumerate, enumerate_up_to};
use hodge_core::series::{closed_targets, cut_join, g_predict, gn1_closed, trig_eval, PPolynomial};
use hodge_core::suites::run_suite;
use hodge_core::symfunc::{
    e_at, principal_hook_content, schur_at, schur_in_p, skew_orthogonality_sum, Alphabet, Basis,
    SymFunc,
};
use hodge_core::wzw::{
    difference_table, tau_neg_one_coeff, tau_one_convolution, w_one, w_pair_def, w_pair_skew,
};
use hodge_core::{Partition, RatFunc};

struct Outcome {
    failures: Vec<String>,
    detail: String,
}

impl Outcome {
    fn new() -> Self {
        Self {
            failures: Vec::new(),
            detail: String::new(),
        }
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }
}

fn sign(n: u32) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn ac1() -> Outcome {
    let mut o = Outcome::new();
    let rows = difference_table();
    let mut verbatim = 0;
    let mut errata = Vec::new();
    for row in &rows {
        let (mu, nu) = (&row.mu, &row.nu);
        let prod = w_one(mu).value() * w_one(nu).value();
        let skew = w_pair_skew(mu, nu).value() - &prod;
        let def = w_pair_def(mu, nu).value() - &prod;
        o.expect(skew.rf_equal(&def), || {
            format!("{mu},{nu}: routes disagree")
        });
        o.expect(skew.rf_equal(row.expected()), || {
            format!("{mu},{nu}: value")
        });
        match &row.erratum {
            None => verbatim += 1,
            Some(e) => {
                o.expect(!skew.rf_equal(&row.printed), || {
                    format!("{mu},{nu}: misprint not detected")
                });
                // independent check: conjugate symmetry applied to the printed conjugate row
                let conj = rows.iter().find(|r| {
                    r.mu == mu.conjugate() && r.nu == nu.conjugate() && r.erratum.is_none()
                });
                let s = sign(mu.size() + nu.size());
                let confirmed = conj.is_some_and(|c| {
                    let mirrored = c.printed.substitute_inverse(Var::U).scale(&s.into());
                    mirrored.rf_equal(&e.corrected)
                });
                o.expect(confirmed, || {
                    format!("{mu},{nu}: conjugate row does not confirm correction")
                });
                errata.push(format!("{mu},{nu}"));
            }
        }
    }
    o.expect(rows.len() == 14, || format!("{} rows", rows.len()));
    o.detail = format!(
        "{} displayed differences exact; {verbatim} equal the printed form, \
         3 printed misprints corrected and confirmed by conjugate symmetry: {}",
        rows.len(),
        errata.join("; ")
    );
    o
}

fn ac2() -> Outcome {
    let mut o = Outcome::new();
    let mut n = 0;
    for mu in enumerate_up_to(8) {
        for nu in enumerate_up_to(8 - mu.size()) {
            let def = w_pair_def(&mu, &nu);
            o.expect(def == w_pair_skew(&mu, &nu), || format!("routes {mu},{nu}"));
            o.expect(def == w_pair_def(&nu, &mu), || {
                format!("symmetry {mu},{nu}")
            });
            n += 1;
        }
    }
    o.detail = format!("{n} pairs with |μ|+|ν| ≤ 8, both routes and symmetry exact");
    o
}

fn ac3() -> Outcome {
    let mut o = Outcome::new();
    let parts = enumerate_up_to(5);
    for mu in &parts {
        for nu in &parts {
            let want = if mu == nu {
                SymFunc::constant(RatFunc::integer(sign(nu.size())), Basis::Schur)
            } else {
                SymFunc::zero(Basis::Schur)
            };
            o.expect(skew_orthogonality_sum(mu, nu) == want, || {
                format!("{mu},{nu}")
            });
        }
    }
    o.detail = format!("{} pairs with |μ|,|ν| ≤ 5", parts.len() * parts.len());
    o
}

fn ac4() -> Outcome {
    let mut o = Outcome::new();
    let parts = enumerate_up_to(8);
    for nu in &parts {
        let s = PPolynomial::from(&schur_in_p(nu));
        let want = s.scale(&RatFunc::integer(nu.kappa() / 2));
        o.expect(cut_join(&s) == want, || format!("{nu}"));
    }
    o.detail = format!(
        "K s_ν = (κ_ν/2) s_ν for {} partitions, |ν| ≤ 8",
        parts.len()
    );
    o
}

fn ac5() -> Outcome {
    let mut o = Outcome::new();
    let parts = enumerate_up_to(3);
    for a in &parts {
        for b in &parts {
            o.expect(tau_one_convolution(a, b) == w_pair_skew(a, b), || {
                format!("{a},{b}")
            });
        }
    }
    o.detail = format!("{} pairs with |ν±| ≤ 3", parts.len() * parts.len());
    o
}

fn ac6() -> Outcome {
    let mut o = Outcome::new();
    let parts = enumerate_up_to(4);
    for a in &parts {
        for b in &parts {
            let want = w_pair_skew(a, b)
                .value()
                .shift(&[-(a.kappa() + b.kappa()) as i32, 0, 0]);
            o.expect(tau_neg_one_coeff(a, b).value().rf_equal(&want), || {
                format!("{a},{b}")
            });
        }
    }
    o.detail = format!("{} pairs with |ν±| ≤ 4", parts.len() * parts.len());
    o
}

fn ac7() -> Outcome {
    let mut o = Outcome::new();
    let mut forms = 0;
    let mut errata = Vec::new();
    for t in closed_targets() {
        let g = g_predict(&t.plus, &t.minus, t.plus.size() + t.minus.size()).unwrap();
        for (i, d) in t.displays.iter().enumerate() {
            forms += 1;
            let printed = trig_eval(&d.printed).unwrap();
            match &d.erratum {
                None => o.expect(g.rf_equal(&printed), || {
                    format!("{} form {}", t.name, i + 1)
                }),
                Some(e) => {
                    let corrected = trig_eval(&e.corrected).unwrap();
                    let gap = trig_eval(&e.discrepancy).unwrap();
                    o.expect(g.rf_equal(&corrected), || {
                        format!("{} corrected form", t.name)
                    });
                    o.expect(!g.rf_equal(&printed), || {
                        format!("{} misprint not detected", t.name)
                    });
                    o.expect((&g - &printed).rf_equal(&gap), || {
                        format!("{} discrepancy", t.name)
                    });
                    errata.push(format!("{} form {}", t.name, i + 1));
                }
            }
        }
    }
    let g11 = g_predict(&Partition::row(1), &Partition::row(1), 2).unwrap();
    o.expect(g11.is_one(), || "G_(1),(1) is not 1".into());
    for n in 1..=6 {
        let g = g_predict(&Partition::row(n), &Partition::row(1), n + 1).unwrap();
        o.expect(g.rf_equal(&gn1_closed(n).unwrap()), || {
            format!("G_({n}),(1) product formula")
        });
    }
    o.detail = format!(
        "nine coefficients, {forms} printed forms, G_(1),(1) = 1, G_(n),(1) for n ≤ 6; \
         {} printed forms wrong by an exactly pinned term: {}",
        errata.len(),
        errata.join(", ")
    );
    o
}

type PPair = BTreeMap<(Partition, Partition), RatFunc>;

fn add_pair(acc: &mut PPair, key: (Partition, Partition), c: RatFunc) {
    let slot = acc.entry(key).or_default();
    *slot = &*slot + &c;
}

fn tensor(f: &SymFunc, g: &SymFunc, acc: &mut PPair) {
    for (a, ca) in f.to_power_sum().terms() {
        for (b, cb) in g.to_power_sum().terms() {
            add_pair(acc, (a.clone(), b.clone()), ca * cb);
        }
    }
}

fn same(a: &PPair, b: &PPair) -> bool {
    let keys: std::collections::BTreeSet<_> = a.keys().chain(b.keys()).collect();
    keys.into_iter().all(|k| {
        a.get(k)
            .cloned()
            .unwrap_or_default()
            .rf_equal(&b.get(k).cloned().unwrap_or_default())
    })
}

fn ac8() -> Outcome {
    let mut o = Outcome::new();
    for mu in enumerate_up_to(10) {
        let sum: i64 = mu.hooks().iter().map(|&h| h as i64).sum();
        let want = mu.kappa() / 2 + 2 * mu.n_statistic() as i64 + mu.size() as i64;
        o.expect(sum == want, || format!("hook sum {mu}"));
    }
    for mu in enumerate_up_to(8) {
        let w = w_one(&mu).into_inner();
        let scaled = w.shift(&[-mu.kappa() as i32, 0, 0]);
        let branch = w.substitute_inverse(Var::U).substitute_negation(Var::U);
        o.expect(branch.rf_equal(&scaled), || format!("W at -q^-1/2 {mu}"));
        let natural = w.substitute_inverse(Var::U);
        o.expect(
            natural.rf_equal(&scaled.scale(&sign(mu.size()).into())),
            || format!("W at q^-1/2 {mu}"),
        );
    }
    let chars = run_suite("char-orthogonality", 8).unwrap();
    o.expect(chars.passed(), || chars.to_text());
    for mu in enumerate_up_to(6) {
        o.expect(
            principal_hook_content(&mu).rf_equal(&schur_at(&mu, &Alphabet::Principal)),
            || format!("hook content {mu}"),
        );
    }
    for n in 0..=6i64 {
        let lhs = e_at(n, &Alphabet::Principal).substitute_inverse(Var::U);
        let rhs = e_at(n, &Alphabet::Principal)
            .shift(&[-(n * (n - 3)) as i32, 0, 0])
            .scale(&sign(n as u32).into());
        o.expect(lhs.rf_equal(&rhs), || format!("e-reversal {n}"));
    }
    for d in 0..=6 {
        let (mut ss, mut sts, mut plain, mut signed) =
            (PPair::new(), PPair::new(), PPair::new(), PPair::new());
        for mu in enumerate(d) {
            tensor(&SymFunc::s(mu.clone()), &SymFunc::s(mu.clone()), &mut ss);
            tensor(
                &SymFunc::s(mu.conjugate()),
                &SymFunc::s(mu.clone()),
                &mut sts,
            );
            let z = mu.z_order() as i64;
            add_pair(&mut plain, (mu.clone(), mu.clone()), RatFunc::ratio(1, z));
            add_pair(
                &mut signed,
                (mu.clone(), mu.clone()),
                RatFunc::ratio(mu.sign(), z),
            );
        }
        o.expect(same(&ss, &plain), || format!("Cauchy degree {d}"));
        o.expect(same(&sts, &signed), || format!("dual Cauchy degree {d}"));
    }
    o.detail = "hook sum |μ| ≤ 10; W_μ(q^-1) relation |μ| ≤ 8 (exact as printed for the branch \
                q^1/2 -> -q^-1/2, with (-1)^|μ| for q^1/2 -> q^-1/2); characters d ≤ 8; \
                hook content |μ| ≤ 6; e-reversal n ≤ 6; Cauchy pairs to degree 6"
        .into();
    o
}

type Criterion = (&'static str, fn() -> Outcome, u64);

fn main() {
    let criteria: [Criterion; 8] = [
        ("AC1 W-difference table", ac1, 1),
        ("AC2 W route equivalence and symmetry", ac2, 60),
        ("AC3 skew orthogonality", ac3, 30),
        ("AC4 cut-and-join eigenvalues", ac4, 60),
        ("AC5 tau=1 convolution", ac5, 120),
        ("AC6 tau=-1 coefficients", ac6, 60),
        ("AC7 G closed forms", ac7, 120),
        ("AC8 foundational identities", ac8, 60),
    ];
    let mut all = true;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let out = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(limit);
        let ok = out.failures.is_empty() && in_time;
        all &= ok;
        println!(
            "{} {name} ({:.2}s, limit {limit}s): {}",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            out.detail
        );
        for f in out.failures.iter().take(10) {
            println!("    failed: {f}");
        }
        if !in_time {
            println!("    over time limit");
        }
    }
    if !all {
        std::process::exit(1);
    }
}

//! Independent reference computations checked against the library.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use hodge_core::characters::chi;
use hodge_core::partitions::{enumerate, enumerate_up_to};
use hodge_core::symfunc::{lr_coeffs, schur_in_p};
use hodge_core::wzw::{difference_table, w_one, w_pair_def, w_pair_skew};
use hodge_core::{GaussianRational, Partition, RatFunc};

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

// ---------- Littlewood–Richardson tableaux ----------

/// Counts semistandard fillings of `outer/inner` with content `weight` whose
/// reverse reading word is a lattice word.
fn lr_tableaux(outer: &Partition, inner: &Partition, weight: &Partition) -> i64 {
    if outer.size() != inner.size() + weight.size() || !outer.contains(inner) {
        return 0;
    }
    let rows = outer.len();
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|r| {
            // right to left within a row, rows top to bottom: the reverse reading order
            (inner.part(r) as usize..outer.part(r) as usize)
                .rev()
                .map(move |c| (r, c))
        })
        .collect();
    let mut grid: HashMap<(usize, usize), usize> = HashMap::new();
    let mut used = vec![0u32; weight.len()];
    fn go(
        k: usize,
        cells: &[(usize, usize)],
        inner: &Partition,
        weight: &Partition,
        grid: &mut HashMap<(usize, usize), usize>,
        used: &mut Vec<u32>,
    ) -> i64 {
        if k == cells.len() {
            return 1;
        }
        let (r, c) = cells[k];
        let mut total = 0;
        for v in 0..weight.len() {
            if used[v] == weight.part(v) {
                continue;
            }
            // lattice condition on the reading word so far
            if v > 0 && used[v] + 1 > used[v - 1] {
                continue;
            }
            // rows weakly increase left to right; cell (r, c+1) is already filled
            if let Some(&right) = grid.get(&(r, c + 1)) {
                if v > right {
                    continue;
                }
            }
            // columns strictly increase downward
            if r > 0 && c >= inner.part(r - 1) as usize {
                if let Some(&above) = grid.get(&(r - 1, c)) {
                    if v <= above {
                        continue;
                    }
                }
            }
            grid.insert((r, c), v);
            used[v] += 1;
            total += go(k + 1, cells, inner, weight, grid, used);
            used[v] -= 1;
            grid.remove(&(r, c));
        }
        total
    }
    go(0, &cells, inner, weight, &mut grid, &mut used)
}

#[test]
fn lr_coefficients_match_tableaux_count() {
    for n in 0..=6u32 {
        for outer in enumerate(n) {
            for k in 0..=n {
                for nu in enumerate(k) {
                    for rho in enumerate(n - k) {
                        let want = lr_tableaux(&outer, &nu, &rho);
                        let got = lr_coeffs(&nu, &rho).get(&outer).copied().unwrap_or(0);
                        assert_eq!(got, want, "c^{outer}_({nu},{rho})");
                    }
                }
            }
        }
    }
}

#[test]
fn lr_oracle_sanity() {
    assert_eq!(lr_tableaux(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])), 2);
    assert_eq!(lr_tableaux(&p(&[2]), &p(&[1]), &p(&[1])), 1);
}

// ---------- Frobenius formula for characters ----------

type Poly = HashMap<Vec<i32>, i64>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<i32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn unit(n: usize, i: usize, k: i32) -> Vec<i32> {
    let mut e = vec![0; n];
    e[i] = k;
    e
}

/// `χ_ν(μ)` = coefficient of `x^{ν+δ}` in `p_μ(x) Δ(x)`.
fn frobenius(nu: &Partition, mu: &Partition) -> i64 {
    let n = nu.len().max(1);
    let mut f: Poly = HashMap::from([(vec![0; n], 1)]);
    for i in 0..n {
        for j in i + 1..n {
            let diff = HashMap::from([(unit(n, i, 1), 1), (unit(n, j, 1), -1)]);
            f = poly_mul(&f, &diff);
        }
    }
    for &k in mu.parts() {
        let pk: Poly = (0..n).map(|i| (unit(n, i, k as i32), 1)).collect();
        f = poly_mul(&f, &pk);
    }
    let target: Vec<i32> = (0..n)
        .map(|i| (nu.part(i) as usize + n - 1 - i) as i32)
        .collect();
    f.get(&target).copied().unwrap_or(0)
}

#[test]
fn characters_match_frobenius_formula() {
    for d in 0..=7 {
        for nu in enumerate(d) {
            for mu in enumerate(d) {
                assert_eq!(chi(&nu, &mu).unwrap(), frobenius(&nu, &mu), "χ_{nu}({mu})");
            }
        }
    }
}

// ---------- bialternant evaluation of Schur functions ----------

fn q(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

#[allow(clippy::needless_range_loop)]
fn det(m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut m = m;
    let mut d = BigRational::one();
    for c in 0..n {
        let Some(r) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return BigRational::zero();
        };
        if r != c {
            m.swap(r, c);
            d = -d;
        }
        let piv = m[c][c].clone();
        d *= &piv;
        for r in c + 1..n {
            let f = &m[r][c] / &piv;
            for k in c..n {
                let x = &f * &m[c][k];
                m[r][k] -= x;
            }
        }
    }
    d
}

fn bialternant(nu: &Partition, xs: &[BigRational]) -> BigRational {
    let n = xs.len();
    let num = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| num_traits::pow(xs[i].clone(), nu.part(j) as usize + n - 1 - j))
                .collect()
        })
        .collect();
    let den = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| num_traits::pow(xs[i].clone(), n - 1 - j))
                .collect()
        })
        .collect();
    det(num) / det(den)
}

fn constant_re(c: &RatFunc) -> BigRational {
    let g = c.as_constant().expect("constant coefficient");
    assert!(g.is_real());
    g.re().clone()
}

#[test]
fn schur_power_sum_expansion_matches_bialternant() {
    let xs = vec![q(1, 2), q(2, 1), q(-3, 1), q(5, 7), q(1, 1)];
    for nu in enumerate_up_to(6) {
        if nu.len() > xs.len() {
            continue;
        }
        let f = schur_in_p(&nu);
        let mut total = BigRational::zero();
        for (mu, c) in f.terms() {
            let pm = mu.parts().iter().fold(BigRational::one(), |acc, &k| {
                acc * xs
                    .iter()
                    .map(|x| num_traits::pow(x.clone(), k as usize))
                    .fold(BigRational::zero(), |a, b| a + b)
            });
            total += constant_re(c) * pm;
        }
        assert_eq!(total, bialternant(&nu, &xs), "{nu}");
    }
}

// ---------- W_{μ,ν} from a truncated alphabet in floating point ----------

/// `h_0..=h_k` of a finite list.
fn h_list(xs: &[f64], k: usize) -> Vec<f64> {
    let mut h = vec![0.0; k + 1];
    h[0] = 1.0;
    for &x in xs {
        for j in 1..=k {
            h[j] += x * h[j - 1];
        }
    }
    h
}

#[allow(clippy::needless_range_loop)]
fn det_f64(mut m: Vec<Vec<f64>>) -> f64 {
    let n = m.len();
    let mut d = 1.0;
    for c in 0..n {
        let r = (c..n)
            .max_by(|&a, &b| m[a][c].abs().total_cmp(&m[b][c].abs()))
            .unwrap();
        if m[r][c] == 0.0 {
            return 0.0;
        }
        if r != c {
            m.swap(r, c);
            d = -d;
        }
        d *= m[c][c];
        for r in c + 1..n {
            let f = m[r][c] / m[c][c];
            for k in c..n {
                m[r][k] -= f * m[c][k];
            }
        }
    }
    d
}

/// `q^{|ν|/2} W_μ s_ν(q^{μ_1-1}, q^{μ_2-2}, …)` with the alphabet truncated to 80 letters, at `u = 2`.
fn w_pair_float(mu: &Partition, nu: &Partition) -> f64 {
    let qv: f64 = 4.0;
    let xs: Vec<f64> = (1..=80)
        .map(|i| qv.powi(mu.part(i - 1) as i32 - i as i32))
        .collect();
    let n = nu.len();
    let h = h_list(&xs, nu.part(0) as usize + n);
    let m = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let k = nu.part(i) as i64 - i as i64 + j as i64;
                    if k < 0 {
                        0.0
                    } else {
                        h[k as usize]
                    }
                })
                .collect()
        })
        .collect();
    let s = det_f64(m);
    let w_mu = w_one(mu).value().eval(&point()).unwrap();
    qv.powf(nu.size() as f64 / 2.0) * to_f64(&w_mu) * s
}

fn point() -> [GaussianRational; 3] {
    let two = GaussianRational::from_integer(2);
    [
        two.clone(),
        GaussianRational::from_integer(3),
        GaussianRational::from_ratio(5, 3),
    ]
}

fn to_f64(g: &GaussianRational) -> f64 {
    assert!(g.is_real());
    g.re().to_f64().unwrap()
}

fn close(a: f64, b: f64) -> bool {
    // the Jacobi–Trudi determinant loses a few digits to cancellation
    (a - b).abs() <= 1e-7 * a.abs().max(b.abs()).max(1.0)
}

#[test]
fn w_pair_matches_truncated_alphabet() {
    for mu in enumerate_up_to(4) {
        for nu in enumerate_up_to(4) {
            let want = w_pair_float(&mu, &nu);
            let def = to_f64(&w_pair_def(&mu, &nu).value().eval(&point()).unwrap());
            let skew = to_f64(&w_pair_skew(&mu, &nu).value().eval(&point()).unwrap());
            assert!(close(def, want), "{mu},{nu}: {def} vs {want}");
            assert!(close(skew, want), "{mu},{nu}: {skew} vs {want}");
        }
    }
}

#[test]
fn difference_table_matches_truncated_alphabet() {
    for row in difference_table() {
        let w = |m: &Partition| to_f64(&w_one(m).value().eval(&point()).unwrap());
        let want = w_pair_float(&row.mu, &row.nu) - w(&row.mu) * w(&row.nu);
        let got = to_f64(&row.expected().eval(&point()).unwrap());
        assert!(close(got, want), "{} {}: {got} vs {want}", row.mu, row.nu);
        if row.erratum.is_some() {
            let printed = to_f64(&row.printed.eval(&point()).unwrap());
            assert!(!close(printed, want), "{} {}", row.mu, row.nu);
        }
    }
}

#[test]
fn bigrational_helpers_are_consistent() {
    assert!(det(vec![vec![q(1, 1), q(2, 1)], vec![q(3, 1), q(4, 1)]]) == q(-2, 1));
    assert!(q(-1, 2).is_negative());
}

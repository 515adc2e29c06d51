use crate::arith::{GaussianRational, LaurentPoly, RatFunc};
use crate::partitions::Partition;

/// A specialization of the variables of a symmetric function.
///
/// Infinite alphabets are never materialized; only closed forms of `h_k`
/// and `e_k` are used.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Alphabet {
    /// `1, q, q², …`
    Principal,
    /// `-q^{1/2}, -q^{3/2}, …`
    NegatedHalfShift,
    /// `q^{μ₁-1}, q^{μ₂-2}, …`, i.e. `q^{μ_i - i}` for all `i ≥ 1`.
    ShiftedByPartition(Partition),
    /// Finitely many explicit values.
    FiniteList(Vec<LaurentPoly>),
}

/// `∏_{i=1}^{k} (1 - q^{sign·i})` as a Laurent polynomial.
fn q_pochhammer(k: i64, sign: i32) -> LaurentPoly {
    let one = LaurentPoly::one();
    (1..=k as i32).fold(LaurentPoly::one(), |acc, i| {
        &acc * &(&one - &LaurentPoly::u_pow(2 * sign * i))
    })
}

/// `h_k` and `e_k` of the geometric alphabet `c, c·x, c·x², …` with
/// `c = u^{c_exp}` and `x = q^{sign}`.
fn geometric(k: i64, c_exp: i32, sign: i32, elementary: bool) -> RatFunc {
    let mut exp = c_exp as i64 * k;
    if elementary {
        exp += sign as i64 * k * (k - 1);
    }
    let exp = i32::try_from(exp).expect("exponent overflow");
    RatFunc::new(LaurentPoly::u_pow(exp), q_pochhammer(k, sign)).expect("nonzero product")
}

/// `h_0..=h_max` (or `e_0..=e_max`) of a finite list.
fn finite(values: &[LaurentPoly], max: usize, elementary: bool) -> Vec<RatFunc> {
    let vals: Vec<RatFunc> = values.iter().cloned().map(RatFunc::from_poly).collect();
    let mut acc = vec![RatFunc::zero(); max + 1];
    acc[0] = RatFunc::one();
    for x in &vals {
        if elementary {
            for k in (1..=max).rev() {
                acc[k] = &acc[k] + &(x * &acc[k - 1]);
            }
        } else {
            for k in 1..=max {
                acc[k] = &acc[k] + &(x * &acc[k - 1]);
            }
        }
    }
    acc
}

fn shifted_head(mu: &Partition) -> Vec<LaurentPoly> {
    (0..mu.len())
        .map(|i| LaurentPoly::u_pow(2 * (mu.part(i) as i32 - i as i32 - 1)))
        .collect()
}

fn at(k: i64, alphabet: &Alphabet, elementary: bool) -> RatFunc {
    if k < 0 {
        return RatFunc::zero();
    }
    match alphabet {
        Alphabet::Principal => geometric(k, 0, 1, elementary),
        Alphabet::NegatedHalfShift => {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            geometric(k, 1, 1, elementary).scale(&GaussianRational::from_integer(sign))
        }
        Alphabet::ShiftedByPartition(mu) => {
            // head q^{μ_i - i} (i ≤ l) joined with the tail q^{-(l+1)}·(1, q^{-1}, …)
            let head = finite(&shifted_head(mu), k as usize, elementary);
            let tail_start = -2 * (mu.len() as i32 + 1);
            (0..=k).fold(RatFunc::zero(), |acc, j| {
                let tail = geometric(k - j, tail_start, -1, elementary);
                &acc + &(&head[j as usize] * &tail)
            })
        }
        Alphabet::FiniteList(values) => finite(values, k as usize, elementary).pop().unwrap(),
    }
}

/// Complete homogeneous symmetric function `h_k` of the alphabet; zero for `k < 0`.
pub fn h_at(k: i64, alphabet: &Alphabet) -> RatFunc {
    at(k, alphabet, false)
}

/// Elementary symmetric function `e_k` of the alphabet; zero for `k < 0`.
pub fn e_at(k: i64, alphabet: &Alphabet) -> RatFunc {
    at(k, alphabet, true)
}

impl Alphabet {
    /// The finite list `q^{μ_i - i}`, `i ≤ l(μ)`.
    pub fn shifted_head(mu: &Partition) -> Self {
        Alphabet::FiniteList(shifted_head(mu))
    }

    /// Number of variables, if finite.
    pub fn finite_len(&self) -> Option<usize> {
        match self {
            Alphabet::FiniteList(v) => Some(v.len()),
            _ => None,
        }
    }
}

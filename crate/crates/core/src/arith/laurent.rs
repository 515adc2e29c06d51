use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::GaussianRational;
use crate::error::Error;

/// Exponents of `(u, t, w)`, compared lexicographically.
pub type Exponent = [i32; 3];

/// The three generators: `u = q^{1/2}`, `t = e^{iτλ/2}`, `w = e^{iλ/(2τ)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    U,
    T,
    W,
}

impl Var {
    pub fn index(self) -> usize {
        match self {
            Var::U => 0,
            Var::T => 1,
            Var::W => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::U => "u",
            Var::T => "t",
            Var::W => "w",
        }
    }
}

pub(crate) fn add_exp(a: &Exponent, b: &Exponent) -> Exponent {
    let f = |x: i32, y: i32| x.checked_add(y).expect("exponent overflow");
    [f(a[0], b[0]), f(a[1], b[1]), f(a[2], b[2])]
}

pub(crate) fn neg_exp(a: &Exponent) -> Exponent {
    [-a[0], -a[1], -a[2]]
}

/// Finitely supported map from exponent triples to nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Exponent, GaussianRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::monomial([0, 0, 0], c)
    }

    pub fn monomial(exp: Exponent, c: GaussianRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// `u^k` for a single generator.
    pub fn var_pow(var: Var, k: i32) -> Self {
        let mut e = [0; 3];
        e[var.index()] = k;
        Self::monomial(e, GaussianRational::one())
    }

    pub fn u_pow(k: i32) -> Self {
        Self::var_pow(Var::U, k)
    }

    /// Collects terms, summing repeated exponents and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Exponent, GaussianRational)>>(iter: I) -> Self {
        let mut terms: BTreeMap<Exponent, GaussianRational> = BTreeMap::new();
        for (e, c) in iter {
            *terms.entry(e).or_default() += &c;
        }
        terms.retain(|_, c| !c.is_zero());
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn as_constant(&self) -> Option<&GaussianRational> {
        match self.terms.len() {
            1 => self.terms.get(&[0, 0, 0]),
            _ => None,
        }
    }

    pub fn as_monomial(&self) -> Option<(&Exponent, &GaussianRational)> {
        match self.terms.len() {
            1 => self.terms.iter().next(),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing lexicographic exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &Exponent) -> GaussianRational {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    /// Lexicographically greatest term.
    pub fn leading_term(&self) -> Option<(&Exponent, &GaussianRational)> {
        self.terms.iter().next_back()
    }

    /// Componentwise minimum exponent.
    pub fn min_exponent(&self) -> Option<Exponent> {
        let mut it = self.terms.keys();
        let first = *it.next()?;
        Some(it.fold(first, |m, e| {
            [m[0].min(e[0]), m[1].min(e[1]), m[2].min(e[2])]
        }))
    }

    pub fn involves(&self, var: Var) -> bool {
        self.terms.keys().any(|e| e[var.index()] != 0)
    }

    /// True when no `t` or `w` exponent appears.
    pub fn is_u_only(&self) -> bool {
        !self.involves(Var::T) && !self.involves(Var::W)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Multiplies by the monomial with exponent `shift`.
    pub fn shift(&self, shift: &Exponent) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (add_exp(e, shift), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Applies `f` to every exponent. `f` must be injective.
    pub fn map_exponents(&self, f: impl Fn(&Exponent) -> Exponent) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (f(e), c.clone())).collect(),
        }
    }

    /// Negates every exponent of `var`.
    pub fn substitute_inverse(&self, var: Var) -> Self {
        let i = var.index();
        self.map_exponents(|e| {
            let mut e = *e;
            e[i] = -e[i];
            e
        })
    }

    /// Replaces `var` by `-var`.
    pub fn substitute_negation(&self, var: Var) -> Self {
        let i = var.index();
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, if e[i] % 2 == 0 { c.clone() } else { -c.clone() }))
                .collect(),
        }
    }

    /// Exchanges the exponents of two generators.
    pub fn swap_vars(&self, a: Var, b: Var) -> Self {
        let (i, j) = (a.index(), b.index());
        self.map_exponents(|e| {
            let mut e = *e;
            e.swap(i, j);
            e
        })
    }

    /// Exact evaluation; a negative power of a zero coordinate is a division by zero.
    pub fn eval(&self, point: &[GaussianRational; 3]) -> Result<GaussianRational, Error> {
        let mut acc = GaussianRational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (k, x) in point.iter().enumerate() {
                if e[k] != 0 {
                    term *= &x.pow(e[k] as i64)?;
                }
            }
            acc += &term;
        }
        Ok(acc)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        let mut terms = self.terms.clone();
        for (e, c) in &o.terms {
            let entry = terms.entry(*e).or_default();
            *entry += c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        LaurentPoly { terms }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        let mut terms = self.terms.clone();
        for (e, c) in &o.terms {
            let entry = terms.entry(*e).or_default();
            *entry -= c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        LaurentPoly { terms }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || o.is_zero() {
            return LaurentPoly::zero();
        }
        if let Some(c) = self.as_constant() {
            return o.scale(c);
        }
        if let Some(c) = o.as_constant() {
            return self.scale(c);
        }
        let mut terms: BTreeMap<Exponent, GaussianRational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                *terms.entry(add_exp(ea, eb)).or_default() += &(ca * cb);
            }
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly { terms }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: LaurentPoly) -> LaurentPoly {
        &self + &o
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: LaurentPoly) -> LaurentPoly {
        &self - &o
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: LaurentPoly) -> LaurentPoly {
        &self * &o
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let vars = [Var::U, Var::T, Var::W];
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            let mono: Vec<String> = vars
                .iter()
                .filter(|v| e[v.index()] != 0)
                .map(|v| match e[v.index()] {
                    1 => v.name().to_string(),
                    k => format!("{}^{}", v.name(), k),
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", c, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(k: i32) -> LaurentPoly {
        LaurentPoly::u_pow(k)
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let p = &u(1) - &u(1);
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
    }

    #[test]
    fn difference_of_squares() {
        let a = &u(1) - &LaurentPoly::one();
        let b = &u(1) + &LaurentPoly::one();
        assert_eq!(&a * &b, &u(2) - &LaurentPoly::one());
    }

    #[test]
    fn inverse_and_swap() {
        let p = LaurentPoly::from_terms([([1, 2, -3], GaussianRational::from_integer(5))]);
        assert_eq!(
            p.substitute_inverse(Var::T).terms().next().unwrap().0,
            &[1, -2, -3]
        );
        assert_eq!(
            p.swap_vars(Var::T, Var::W).terms().next().unwrap().0,
            &[1, -3, 2]
        );
    }

    #[test]
    fn eval_with_negative_exponent() {
        let p = &u(1) - &u(-1);
        let two = GaussianRational::from_integer(2);
        let pt = [two, GaussianRational::one(), GaussianRational::one()];
        assert_eq!(p.eval(&pt).unwrap(), GaussianRational::from_ratio(3, 2));
        let zero = [
            GaussianRational::zero(),
            GaussianRational::one(),
            GaussianRational::one(),
        ];
        assert!(p.eval(&zero).is_err());
    }

    #[test]
    fn min_exponent_is_componentwise() {
        let p = LaurentPoly::from_terms([
            ([2, -1, 0], GaussianRational::one()),
            ([-1, 3, 4], GaussianRational::one()),
        ]);
        assert_eq!(p.min_exponent(), Some([-1, -1, 0]));
    }
}

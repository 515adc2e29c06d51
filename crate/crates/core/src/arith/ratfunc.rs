use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::gaussian::{parse_rational, rational_to_string};
use super::laurent::{neg_exp, Exponent, LaurentPoly, Var};
use super::univariate::UPoly;
use super::GaussianRational;
use crate::error::Error;

/// Quotient of two Laurent polynomials in `(u, t, w)`.
///
/// Canonical form: the denominator is shifted so that its componentwise
/// minimum exponent is `(0,0,0)`, and both parts are scaled so that the
/// lexicographically greatest denominator term has coefficient 1. When the
/// denominator involves `u` alone, common factors with the numerator are
/// cancelled as well. Zero is stored as `0/1`.
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    pub fn from_poly(num: LaurentPoly) -> Self {
        Self::canonical(num, LaurentPoly::one())
    }

    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn integer(n: i64) -> Self {
        Self::constant(GaussianRational::from_integer(n))
    }

    pub fn ratio(p: i64, q: i64) -> Self {
        Self::constant(GaussianRational::from_ratio(p, q))
    }

    pub fn monomial(exp: Exponent) -> Self {
        Self::from_poly(LaurentPoly::monomial(exp, GaussianRational::one()))
    }

    /// `u^k`, i.e. `q^{k/2}`.
    pub fn u_pow(k: i32) -> Self {
        Self::monomial([k, 0, 0])
    }

    pub fn var_pow(var: Var, k: i32) -> Self {
        Self::from_poly(LaurentPoly::var_pow(var, k))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn as_constant(&self) -> Option<&GaussianRational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn is_u_only(&self) -> bool {
        self.num.is_u_only() && self.den.is_u_only()
    }

    fn canonical(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let shift = neg_exp(&den.min_exponent().expect("nonzero denominator"));
        let (mut num, mut den) = (num.shift(&shift), den.shift(&shift));
        if den.is_u_only() && den.len() > 1 {
            (num, den) = cancel_u_factors(num, den);
        }
        let lead = den.leading_term().expect("nonzero denominator").1.clone();
        if !lead.is_one() {
            let inv = lead.inv().expect("nonzero lead");
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Self { num, den }
    }

    /// Re-runs canonicalization on the stored representative.
    pub fn canonicalize(&self) -> Self {
        Self::canonical(self.num.clone(), self.den.clone())
    }

    /// Value equality by cross-multiplication.
    pub fn rf_equal(&self, other: &Self) -> bool {
        if self.num == other.num && self.den == other.den {
            return true;
        }
        &self.num * &other.den == &other.num * &self.den
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Multiplies by the monomial `u^e0 t^e1 w^e2`; never changes the denominator.
    pub fn shift(&self, exp: &Exponent) -> Self {
        Self {
            num: self.num.shift(exp),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, Error> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i32) -> Result<Self, Error> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Replaces `var` by its inverse everywhere.
    pub fn substitute_inverse(&self, var: Var) -> Self {
        Self::canonical(
            self.num.substitute_inverse(var),
            self.den.substitute_inverse(var),
        )
    }

    /// Replaces `var` by `-var` everywhere.
    pub fn substitute_negation(&self, var: Var) -> Self {
        Self::canonical(
            self.num.substitute_negation(var),
            self.den.substitute_negation(var),
        )
    }

    pub fn swap_vars(&self, a: Var, b: Var) -> Self {
        Self::canonical(self.num.swap_vars(a, b), self.den.swap_vars(a, b))
    }

    /// Exact value at `(u, t, w)`.
    pub fn eval(&self, point: &[GaussianRational; 3]) -> Result<GaussianRational, Error> {
        let d = self.den.eval(point)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(&self.num.eval(point)? / &d)
    }
}

/// Cancels the greatest common `u`-factor of `den` (u-only, no negative powers)
/// and every `(t, w)`-slice of `num`.
fn cancel_u_factors(num: LaurentPoly, den: LaurentPoly) -> (LaurentPoly, LaurentPoly) {
    let (_, dpoly) = UPoly::from_laurent(&den);
    if dpoly.is_constant() {
        return (num, den);
    }
    let mut slices: BTreeMap<(i32, i32), Vec<(Exponent, GaussianRational)>> = BTreeMap::new();
    for (e, c) in num.terms() {
        slices
            .entry((e[1], e[2]))
            .or_default()
            .push(([e[0], 0, 0], c.clone()));
    }
    let slices: Vec<((i32, i32), (i32, UPoly))> = slices
        .into_iter()
        .map(|(k, ts)| (k, UPoly::from_laurent(&LaurentPoly::from_terms(ts))))
        .collect();
    let mut g = dpoly.clone();
    for (_, (_, p)) in &slices {
        g = g.gcd(p);
        if g.is_constant() {
            return (num, den);
        }
    }
    let den = dpoly.exact_div(&g).expect("gcd divides").to_laurent(0);
    let mut terms = Vec::new();
    for ((et, ew), (s, p)) in slices {
        let q = p.exact_div(&g).expect("gcd divides").to_laurent(s);
        terms.extend(q.terms().map(|(e, c)| ([e[0], et, ew], c.clone())));
    }
    (LaurentPoly::from_terms(terms), den)
}

fn add_impl(a: &RatFunc, b: &RatFunc, negate_b: bool) -> RatFunc {
    let bnum = if negate_b { -&b.num } else { b.num.clone() };
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return RatFunc {
            num: bnum,
            den: b.den.clone(),
        };
    }
    if a.den == b.den {
        return RatFunc::canonical(&a.num + &bnum, a.den.clone());
    }
    if a.den.is_u_only() && b.den.is_u_only() {
        let (_, da) = UPoly::from_laurent(&a.den);
        let (_, db) = UPoly::from_laurent(&b.den);
        let g = da.gcd(&db);
        if !g.is_one() {
            let ca = db.exact_div(&g).expect("gcd divides").to_laurent(0);
            let cb = da.exact_div(&g).expect("gcd divides").to_laurent(0);
            let num = &(&a.num * &ca) + &(&bnum * &cb);
            return RatFunc::canonical(num, &a.den * &ca);
        }
    }
    RatFunc::canonical(&(&a.num * &b.den) + &(&bnum * &a.den), &a.den * &b.den)
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        add_impl(self, o, false)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        add_impl(self, o, true)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFunc::from_poly(&self.num * &o.num);
        }
        RatFunc::canonical(&self.num * &o.num, &self.den * &o.den)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    /// Panics when `o` is zero; see [`RatFunc::checked_div`].
    fn div(self, o: &RatFunc) -> RatFunc {
        self.checked_div(o)
            .expect("division by zero rational function")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, o: RatFunc) -> RatFunc { (&self).$m(&o) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        self.rf_equal(other)
    }
}

impl Eq for RatFunc {}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<GaussianRational> for RatFunc {
    fn from(c: GaussianRational) -> Self {
        Self::constant(c)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

type TermRepr = (Exponent, String, String);

#[derive(Serialize, Deserialize)]
struct RatFuncRepr {
    num: Vec<TermRepr>,
    den: Vec<TermRepr>,
}

fn poly_repr(p: &LaurentPoly) -> Vec<TermRepr> {
    p.terms()
        .map(|(e, c)| (*e, rational_to_string(c.re()), rational_to_string(c.im())))
        .collect()
}

fn poly_from_repr(ts: &[TermRepr]) -> Result<LaurentPoly, Error> {
    let mut out = Vec::with_capacity(ts.len());
    for (e, re, im) in ts {
        out.push((
            *e,
            GaussianRational::new(parse_rational(re)?, parse_rational(im)?),
        ));
    }
    Ok(LaurentPoly::from_terms(out))
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RatFuncRepr {
            num: poly_repr(&self.num),
            den: poly_repr(&self.den),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = RatFuncRepr::deserialize(d)?;
        let num = poly_from_repr(&repr.num).map_err(D::Error::custom)?;
        let den = poly_from_repr(&repr.den).map_err(D::Error::custom)?;
        RatFunc::new(num, den).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(k: i32) -> LaurentPoly {
        LaurentPoly::u_pow(k)
    }

    fn one() -> LaurentPoly {
        LaurentPoly::one()
    }

    fn gr(n: i64) -> GaussianRational {
        GaussianRational::from_integer(n)
    }

    #[test]
    fn sign_cancellation() {
        let a = RatFunc::new(u(1), &u(2) - &one()).unwrap();
        let b = RatFunc::new(-&u(1), &one() - &u(2)).unwrap();
        assert!(a.rf_equal(&b));
    }

    #[test]
    fn monomial_scaling() {
        let a = RatFunc::new(one(), &u(1) - &u(-1)).unwrap();
        let b = RatFunc::new(u(1), &u(2) - &one()).unwrap();
        assert!(a.rf_equal(&b));
    }

    #[test]
    fn one_is_not_q() {
        assert!(!RatFunc::one().rf_equal(&RatFunc::u_pow(2)));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RatFunc::new(one(), LaurentPoly::zero()).unwrap_err(),
            Error::DivisionByZero
        );
    }

    #[test]
    fn invert_u() {
        assert!(RatFunc::u_pow(1)
            .substitute_inverse(Var::U)
            .rf_equal(&RatFunc::u_pow(-1)));
    }

    #[test]
    fn bracket_one_is_antisymmetric() {
        let f = RatFunc::new(one(), &u(1) - &u(-1)).unwrap();
        assert!(f.substitute_inverse(Var::U).rf_equal(&-&f));
    }

    #[test]
    fn eval_examples() {
        let pt = |x: i64| [gr(x), gr(1), gr(1)];
        assert_eq!(RatFunc::u_pow(1).eval(&pt(3)).unwrap(), gr(3));
        let f = RatFunc::new(one(), &u(1) - &u(-1)).unwrap();
        assert_eq!(f.eval(&pt(2)).unwrap(), GaussianRational::from_ratio(2, 3));
        let g = RatFunc::new(one(), &u(1) - &one()).unwrap();
        assert_eq!(g.eval(&pt(1)).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn common_factors_cancel() {
        // (u^2 - 1) / (u - 1) = u + 1
        let f = RatFunc::new(&u(2) - &one(), &u(1) - &one()).unwrap();
        assert!(f.den().is_one());
        assert_eq!(f.num(), &(&u(1) + &one()));
    }

    #[test]
    fn canonical_denominator_shape() {
        let f = RatFunc::new(u(5), (&u(3) - &u(7)).scale(&gr(3))).unwrap();
        assert_eq!(f.den().min_exponent(), Some([0, 0, 0]));
        assert!(f.den().leading_term().unwrap().1.is_one());
    }

    #[test]
    fn json_shape() {
        let f = RatFunc::new(u(1), &u(2) - &one()).unwrap();
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(
            s,
            r#"{"num":[[[1,0,0],"1/1","0/1"]],"den":[[[0,0,0],"-1/1","0/1"],[[2,0,0],"1/1","0/1"]]}"#
        );
        let back: RatFunc = serde_json::from_str(&s).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }

    #[test]
    fn sums_with_shared_denominator_factors() {
        // 1/(u^2-1) + 1/(u-1) = (u+2)/(u^2-1)
        let a = RatFunc::new(one(), &u(2) - &one()).unwrap();
        let b = RatFunc::new(one(), &u(1) - &one()).unwrap();
        let s = &a + &b;
        let want = RatFunc::new(&u(1) + &one().scale(&gr(2)), &u(2) - &one()).unwrap();
        assert!(s.rf_equal(&want));
        assert_eq!(s.den(), want.den());
    }
}

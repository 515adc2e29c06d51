use std::fmt;

use crate::arith::{GaussianRational, LaurentPoly, RatFunc};
use crate::error::Result;

/// Trigonometric expression in `λ` and `τ`.
///
/// `Sin(a, b, c)` is `sin[(aτ + b/τ + c)λ/2]`, likewise `Cos`. With
/// `t = e^{√-1τλ/2}`, `w = e^{√-1λ/(2τ)}` and `u = e^{√-1λ/2}` every leaf
/// is a Laurent polynomial in `(u, t, w)`.
#[derive(Clone, Debug, PartialEq)]
pub enum TrigExpr {
    Const(GaussianRational),
    Sin(i32, i32, i32),
    Cos(i32, i32, i32),
    Sum(Vec<TrigExpr>),
    Product(Vec<TrigExpr>),
    Quotient(Box<TrigExpr>, Box<TrigExpr>),
    Pow(Box<TrigExpr>, u32),
}

impl TrigExpr {
    pub fn int(n: i64) -> Self {
        Self::Const(GaussianRational::from_integer(n))
    }

    pub fn ratio(p: i64, q: i64) -> Self {
        Self::Const(GaussianRational::from_ratio(p, q))
    }

    /// `√-1 · p/q`
    pub fn imag(p: i64, q: i64) -> Self {
        Self::Const(&GaussianRational::i() * &GaussianRational::from_ratio(p, q))
    }

    pub fn over(self, den: TrigExpr) -> Self {
        Self::Quotient(Box::new(self), Box::new(den))
    }

    pub fn pow(self, n: u32) -> Self {
        Self::Pow(Box::new(self), n)
    }
}

impl std::ops::Neg for TrigExpr {
    type Output = Self;

    fn neg(self) -> Self {
        Self::Product(vec![Self::int(-1), self])
    }
}

fn angle(a: i32, b: i32, c: i32) -> LaurentPoly {
    LaurentPoly::monomial([c, a, b], GaussianRational::from_integer(1))
}

/// Exact value of `T` in the field of rational functions of `(u, t, w)`.
pub fn trig_eval(expr: &TrigExpr) -> Result<RatFunc> {
    Ok(match expr {
        TrigExpr::Const(c) => RatFunc::constant(c.clone()),
        TrigExpr::Sin(a, b, c) => {
            let x = &angle(*a, *b, *c) - &angle(-a, -b, -c);
            let half_i = GaussianRational::from_ratio(1, 2) * (-GaussianRational::i());
            RatFunc::from_poly(x.scale(&half_i))
        }
        TrigExpr::Cos(a, b, c) => {
            let x = &angle(*a, *b, *c) + &angle(-a, -b, -c);
            RatFunc::from_poly(x.scale(&GaussianRational::from_ratio(1, 2)))
        }
        TrigExpr::Sum(xs) => {
            let mut acc = RatFunc::zero();
            for x in xs {
                acc = &acc + &trig_eval(x)?;
            }
            acc
        }
        TrigExpr::Product(xs) => {
            let mut acc = RatFunc::one();
            for x in xs {
                acc = &acc * &trig_eval(x)?;
            }
            acc
        }
        TrigExpr::Quotient(n, d) => trig_eval(n)?.checked_div(&trig_eval(d)?)?,
        TrigExpr::Pow(x, n) => trig_eval(x)?.pow(*n as i32)?,
    })
}

fn fmt_angle(f: &mut fmt::Formatter<'_>, a: i32, b: i32, c: i32) -> fmt::Result {
    let mut parts = Vec::new();
    if a != 0 {
        parts.push(format!("{a}τ"));
    }
    if b != 0 {
        parts.push(format!("{b}/τ"));
    }
    if c != 0 || parts.is_empty() {
        parts.push(c.to_string());
    }
    write!(f, "({})λ/2", parts.join(" + ").replace("+ -", "- "))
}

impl fmt::Display for TrigExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |f: &mut fmt::Formatter<'_>, xs: &[TrigExpr], sep: &str| -> fmt::Result {
            write!(f, "(")?;
            for (i, x) in xs.iter().enumerate() {
                if i > 0 {
                    write!(f, "{sep}")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")
        };
        match self {
            TrigExpr::Const(c) => write!(f, "{c}"),
            TrigExpr::Sin(a, b, c) => {
                write!(f, "sin[")?;
                fmt_angle(f, *a, *b, *c)?;
                write!(f, "]")
            }
            TrigExpr::Cos(a, b, c) => {
                write!(f, "cos[")?;
                fmt_angle(f, *a, *b, *c)?;
                write!(f, "]")
            }
            TrigExpr::Sum(xs) => join(f, xs, " + "),
            TrigExpr::Product(xs) => join(f, xs, "·"),
            TrigExpr::Quotient(n, d) => write!(f, "{n}/{d}"),
            TrigExpr::Pow(x, n) => write!(f, "{x}^{n}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{quantum_integer, Var};

    #[test]
    fn dictionary() {
        let s1 = trig_eval(&TrigExpr::Sin(0, 0, 1)).unwrap();
        let want = quantum_integer(1)
            .scale(&(&GaussianRational::from_ratio(1, 2) * &-GaussianRational::i()));
        assert_eq!(s1, want);
        let c3 = trig_eval(&TrigExpr::Cos(0, 0, 3)).unwrap();
        let want =
            (&RatFunc::u_pow(3) + &RatFunc::u_pow(-3)).scale(&GaussianRational::from_ratio(1, 2));
        assert_eq!(c3, want);
        let s = trig_eval(&TrigExpr::Sin(2, 0, 2)).unwrap();
        let tu = RatFunc::monomial([2, 2, 0]);
        let want = (&tu - &RatFunc::monomial([-2, -2, 0]))
            .scale(&(&GaussianRational::from_ratio(1, 2) * &-GaussianRational::i()));
        assert_eq!(s, want);
        assert!(s.num().involves(Var::T));
    }

    #[test]
    fn pythagoras() {
        let x = TrigExpr::Sum(vec![
            TrigExpr::Sin(3, -1, 2).pow(2),
            TrigExpr::Cos(3, -1, 2).pow(2),
        ]);
        assert!(trig_eval(&x).unwrap().is_one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let x = TrigExpr::int(1).over(TrigExpr::Sin(0, 0, 0));
        assert!(trig_eval(&x).is_err());
    }
}

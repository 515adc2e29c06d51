//! Exact coefficient arithmetic: Gaussian rationals, Laurent polynomials in
//! `(u, t, w)` and their quotients.

mod gaussian;
mod laurent;
mod ratfunc;
mod univariate;

pub use gaussian::GaussianRational;
pub use laurent::{Exponent, LaurentPoly, Var};
pub use ratfunc::RatFunc;

use crate::error::Result;

pub fn rf_equal(a: &RatFunc, b: &RatFunc) -> bool {
    a.rf_equal(b)
}

pub fn substitute_inverse(f: &RatFunc, var: Var) -> RatFunc {
    f.substitute_inverse(var)
}

pub fn rf_eval(f: &RatFunc, point: &[GaussianRational; 3]) -> Result<GaussianRational> {
    f.eval(point)
}

/// `[m] = q^{m/2} - q^{-m/2} = u^m - u^{-m}`.
pub fn quantum_integer(m: i32) -> RatFunc {
    RatFunc::from_poly(&LaurentPoly::u_pow(m) - &LaurentPoly::u_pow(-m))
}

//! Dense polynomials in `u` over the Gaussian rationals.
//!
//! Only used to cancel common factors between a numerator and a denominator
//! that involves `u` alone, which covers every W-quantity and every
//! trigonometric display we evaluate.

use num_traits::{One, Zero};

use super::{GaussianRational, LaurentPoly};

/// Coefficients from the constant term upwards, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct UPoly(Vec<GaussianRational>);

impl UPoly {
    fn trim(mut v: Vec<GaussianRational>) -> Self {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        UPoly(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    /// Splits a `u`-only Laurent polynomial into `u^shift · poly` with `poly(0) != 0`.
    pub fn from_laurent(p: &LaurentPoly) -> (i32, UPoly) {
        debug_assert!(p.is_u_only());
        let Some(min) = p.min_exponent() else {
            return (0, UPoly(Vec::new()));
        };
        let shift = min[0];
        let top = p.leading_term().map(|(e, _)| e[0]).unwrap_or(shift);
        let mut v = vec![GaussianRational::zero(); (top - shift + 1) as usize];
        for (e, c) in p.terms() {
            v[(e[0] - shift) as usize] = c.clone();
        }
        (shift, UPoly::trim(v))
    }

    pub fn to_laurent(&self, shift: i32) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.0
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| ([k as i32 + shift, 0, 0], c.clone())),
        )
    }

    fn lead(&self) -> &GaussianRational {
        self.0
            .last()
            .expect("zero polynomial has no leading coefficient")
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lead().inv().expect("nonzero lead");
        UPoly(self.0.iter().map(|c| c * &inv).collect())
    }

    /// Euclidean division; `b` must be nonzero.
    pub fn divrem(&self, b: &UPoly) -> (UPoly, UPoly) {
        assert!(!b.is_zero(), "polynomial division by zero");
        if self.0.len() < b.0.len() {
            return (UPoly(Vec::new()), self.clone());
        }
        let mut r = self.0.clone();
        let db = b.degree();
        let inv = b.lead().inv().expect("nonzero lead");
        let mut q = vec![GaussianRational::zero(); r.len() - db];
        for k in (0..q.len()).rev() {
            let c = &r[k + db] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, bc) in b.0.iter().enumerate() {
                let t = &c * bc;
                r[k + j] -= &t;
            }
            q[k] = c;
        }
        r.truncate(db);
        (UPoly::trim(q), UPoly::trim(r))
    }

    pub fn exact_div(&self, b: &UPoly) -> Option<UPoly> {
        let (q, r) = self.divrem(b);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, b: &UPoly) -> UPoly {
        let mut a = self.monic();
        let mut b = b.monic();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.monic();
        }
        a
    }

    pub fn is_constant(&self) -> bool {
        self.0.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }
}

//! Closed-form displays for connected coefficients, as trigonometric expressions.

use std::ops::Neg;

use super::trig::TrigExpr::{self, Cos, Product, Sin, Sum};
use crate::partitions::Partition;

/// One printed form of a closed-form coefficient.
#[derive(Clone, Debug)]
pub struct Display {
    pub printed: TrigExpr,
    /// Present when the printed form is not equal to the coefficient.
    pub erratum: Option<TrigErratum>,
}

#[derive(Clone, Debug)]
pub struct TrigErratum {
    pub corrected: TrigExpr,
    /// `corrected - printed`
    pub discrepancy: TrigExpr,
    pub note: &'static str,
}

impl Display {
    pub fn expected(&self) -> &TrigExpr {
        self.erratum
            .as_ref()
            .map_or(&self.printed, |e| &e.corrected)
    }
}

/// A named connected coefficient `G_{μ⁺,μ⁻}` with its printed forms.
#[derive(Clone, Debug)]
pub struct ClosedTarget {
    pub name: &'static str,
    pub plus: Partition,
    pub minus: Partition,
    pub displays: Vec<Display>,
}

fn s1() -> TrigExpr {
    Sin(0, 0, 1)
}

fn sl() -> TrigExpr {
    Sin(0, 0, 2)
}

fn prod(xs: impl IntoIterator<Item = TrigExpr>) -> TrigExpr {
    Product(xs.into_iter().collect())
}

/// `num / (k · sin^a(λ/2) · sin^b(λ))`
fn frac(num: TrigExpr, k: i64, a: u32, b: u32) -> TrigExpr {
    let mut den = vec![TrigExpr::int(k)];
    if a > 0 {
        den.push(s1().pow(a));
    }
    if b > 0 {
        den.push(sl().pow(b));
    }
    num.over(Product(den))
}

/// `√-1 · num / (k · sin^a(λ/2) · sin^b(λ))`
fn ifrac(sign: i64, num: TrigExpr, k: i64, a: u32, b: u32) -> TrigExpr {
    prod([TrigExpr::imag(sign, 1), frac(num, k, a, b)])
}

fn plain(printed: TrigExpr) -> Display {
    Display {
        printed,
        erratum: None,
    }
}

fn part(p: &[u32]) -> Partition {
    Partition::from_parts(p.to_vec())
}

fn target(name: &'static str, plus: &[u32], minus: &[u32], displays: Vec<Display>) -> ClosedTarget {
    ClosedTarget {
        name,
        plus: part(plus),
        minus: part(minus),
        displays,
    }
}

/// `(1/n) ∏_{i=1}^{n-1} sin[(nτ+i+1)λ/2] / sin(iλ/2)`
pub fn gn1_expr(n: u32) -> TrigExpr {
    let n = n as i32;
    let num = prod((1..n).map(|i| Sin(n, 0, i + 1)));
    let den = prod(std::iter::once(TrigExpr::int(n as i64)).chain((1..n).map(|i| Sin(0, 0, i))));
    num.over(den)
}

/// The nine displayed coefficients.
pub fn closed_targets() -> Vec<ClosedTarget> {
    let g2_11_first = Sum(vec![
        ifrac(-1, prod([Sin(2, 2, 4), Cos(0, 0, 3)]), 4, 1, 1),
        ifrac(-1, Sin(2, -2, 0), 8, 2, 0),
        ifrac(1, Sin(2, 0, 2), 4, 2, 0),
    ]);
    let g2_11_product = ifrac(1, prod([Sin(2, 0, 2), Sin(0, 1, 1).pow(2)]), 2, 2, 0);
    let g2_11_gap = ifrac(1, Sin(2, 2, 4), 2, 0, 0);

    let g3_11_head = vec![
        ifrac(-1, Sin(6, 2, 10), 12, 1, 1),
        ifrac(1, Cos(6, 2, 5), 24, 2, 1),
        ifrac(1, Cos(6, -2, 3), 24, 2, 1),
        ifrac(-1, prod([Cos(0, 2, 2), Cos(0, 0, 3)]), 12, 2, 1),
        ifrac(-1, Cos(6, 0, 5), 12, 2, 1),
    ];
    let with_last = |k| {
        let mut v = g3_11_head.clone();
        v.push(ifrac(1, TrigExpr::int(1), k, 3, 0));
        Sum(v)
    };

    vec![
        target("G11", &[1], &[1], vec![plain(TrigExpr::int(1))]),
        target("G21", &[2], &[1], vec![plain(frac(Sin(2, 0, 2), 2, 1, 0))]),
        target(
            "G31",
            &[3],
            &[1],
            vec![
                plain(Sum(vec![
                    frac(Cos(6, 0, 5), 6, 1, 1).neg(),
                    frac(TrigExpr::int(1), 12, 2, 0),
                ])),
                plain(frac(prod([Sin(3, 0, 2), Sin(3, 0, 3)]), 3, 1, 1)),
            ],
        ),
        target(
            "G22",
            &[2],
            &[2],
            vec![
                plain(Sum(vec![
                    frac(prod([Cos(2, 2, 4), Cos(0, 0, 3)]), 4, 1, 1).neg(),
                    frac(Cos(2, -2, 0), 8, 2, 0),
                ])),
                plain(Sum(vec![
                    frac(Sin(2, 2, 5), 4, 1, 0),
                    frac(prod([Sin(2, 0, 1), Sin(0, 2, 1)]), 4, 2, 0),
                ])),
            ],
        ),
        target(
            "G32",
            &[3],
            &[2],
            vec![
                plain(Sum(vec![
                    frac(Cos(6, 2, 10), 12, 1, 1).neg(),
                    frac(Sin(6, 2, 5), 24, 2, 1).neg(),
                    frac(Sin(6, -2, 3), 24, 2, 1),
                    frac(prod([Sin(0, 2, 2), Cos(0, 0, 3)]), 12, 2, 1),
                ])),
                plain(frac(
                    Sum(vec![
                        Sin(6, 2, 11).neg(),
                        Sin(6, 2, 9),
                        Sin(6, 2, 5).neg(),
                        Sin(6, -2, 3),
                        Sin(0, 2, 5),
                        Sin(0, 2, -1),
                    ]),
                    24,
                    2,
                    1,
                )),
            ],
        ),
        target(
            "G1_11",
            &[1],
            &[1, 1],
            vec![
                plain(
                    Sum(vec![Cos(0, 2, 2), TrigExpr::int(-1)])
                        .over(prod([TrigExpr::imag(2, 1), s1()])),
                ),
                plain(ifrac(1, Sin(0, 1, 1).pow(2), 1, 1, 0)),
            ],
        ),
        target(
            "G11_1",
            &[1, 1],
            &[1],
            vec![
                plain(
                    Sum(vec![Cos(2, 0, 2), TrigExpr::int(-1)])
                        .over(prod([TrigExpr::imag(2, 1), s1()])),
                ),
                plain(ifrac(1, Sin(1, 0, 1).pow(2), 1, 1, 0)),
            ],
        ),
        target(
            "G2_11",
            &[2],
            &[1, 1],
            vec![
                plain(g2_11_first.clone()),
                Display {
                    printed: g2_11_product.clone(),
                    erratum: Some(TrigErratum {
                        corrected: g2_11_first,
                        discrepancy: g2_11_gap,
                        note: "printed product form omits the term √-1·sin[(τ+1/τ+2)λ]/2",
                    }),
                },
            ],
        ),
        target(
            "G3_11",
            &[3],
            &[1, 1],
            vec![Display {
                printed: with_last(12),
                erratum: Some(TrigErratum {
                    corrected: with_last(24),
                    discrepancy: ifrac(-1, TrigExpr::int(1), 24, 3, 0),
                    note: "last term √-1/(12 sin³(λ/2)) should be √-1/(24 sin³(λ/2))",
                }),
            }],
        ),
    ]
}

/// Resolves a display name; `G21_11` is accepted for `G2_11`.
pub fn find_target(name: &str) -> Option<ClosedTarget> {
    let name = if name == "G21_11" { "G2_11" } else { name };
    closed_targets().into_iter().find(|t| t.name == name)
}

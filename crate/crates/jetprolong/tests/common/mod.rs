//! Shared fixtures: the reference tables transcribed term by term from the
//! printed source, plus small builders to express them as canonical values.
//!
//! Transcriptions are literal; the handful of spots where the printed tables
//! are internally inconsistent are encoded separately as corrections, so
//! tests can check both "matches the print except at the ledgered spots" and
//! "the engines agree with each other there".
//!
//! Every displayed sum family gets its own nested loops over the free
//! summation indices, mirroring the printed layout one bracket at a time.

#![allow(dead_code)]

use num_bigint::BigInt;

use jetprolong::faadibruno::{FSymbol, FaaMonomial, FaaPolynomial, GSymbol};
use jetprolong::jetalgebra::{CoefficientPolynomial, Dims, Head, JetMonomial, JetVariable, RawTerm};

pub fn dims(n: u32, m: u32) -> Dims {
    Dims::new(n, m).unwrap()
}

pub fn rt(
    coeff: i64,
    symbol: Option<(Head, Vec<u32>, Vec<u32>)>,
    factors: Vec<(u32, Vec<u32>)>,
) -> RawTerm {
    RawTerm {
        coeff: BigInt::from(coeff),
        symbol,
        factors,
    }
}

pub fn poly(d: Dims, terms: Vec<RawTerm>) -> CoefficientPolynomial {
    CoefficientPolynomial::canonicalize(d, terms).unwrap()
}

/// A monomial over dims (1,1) described by (order, multiplicity) pairs.
pub fn scalar_mono(d: &Dims, shape: &[(usize, usize)]) -> JetMonomial {
    let mut factors = Vec::new();
    for &(lambda, mu) in shape {
        for _ in 0..mu {
            factors.push(JetVariable::new(d, 1, vec![1; lambda]).unwrap());
        }
    }
    JetMonomial::from_factors(factors)
}

/// One bracket of a scalar table: monomial shape, optional `A·Y_{x^a y^b}`
/// part and optional `B·X_{x^a y^b}` part (the sign of B is stored).
pub type ScalarBracket = (
    &'static [(usize, usize)],
    Option<(i64, usize, usize)>,
    Option<(i64, usize, usize)>,
);

/// Builds the polynomial a scalar bracket table denotes.
pub fn scalar_table_poly(table: &[ScalarBracket]) -> CoefficientPolynomial {
    let d = dims(1, 1);
    let mut raw = Vec::new();
    for &(shape, y_part, x_part) in table {
        let factors: Vec<(u32, Vec<u32>)> = shape
            .iter()
            .flat_map(|&(lambda, mu)| std::iter::repeat((1u32, vec![1u32; lambda])).take(mu))
            .collect();
        if let Some((a, xo, yo)) = y_part {
            raw.push(rt(
                a,
                Some((Head::Y(1), vec![1; xo], vec![1; yo])),
                factors.clone(),
            ));
        }
        if let Some((b, xo, yo)) = x_part {
            raw.push(rt(
                b,
                Some((Head::X(1), vec![1; xo], vec![1; yo])),
                factors.clone(),
            ));
        }
    }
    poly(d, raw)
}

/// The printed third-order scalar table (eleven brackets).
pub const SCALAR_TABLE_3: &[ScalarBracket] = &[
    (&[], Some((1, 3, 0)), None),
    (&[(1, 1)], Some((3, 2, 1)), Some((-1, 3, 0))),
    (&[(1, 2)], Some((3, 1, 2)), Some((-3, 2, 1))),
    (&[(1, 3)], Some((1, 0, 3)), Some((-3, 1, 2))),
    (&[(1, 4)], None, Some((-1, 0, 3))),
    (&[(2, 1)], Some((3, 1, 1)), Some((-3, 2, 0))),
    (&[(1, 1), (2, 1)], Some((3, 0, 2)), Some((-9, 1, 1))),
    (&[(1, 2), (2, 1)], None, Some((-6, 0, 2))),
    (&[(2, 2)], None, Some((-3, 0, 1))),
    (&[(3, 1)], Some((1, 0, 1)), Some((-3, 1, 0))),
    (&[(1, 1), (3, 1)], None, Some((-4, 0, 1))),
];

/// The printed fourth-order scalar table.
pub const SCALAR_TABLE_4: &[ScalarBracket] = &[
    (&[], Some((1, 4, 0)), None),
    (&[(1, 1)], Some((4, 3, 1)), Some((-1, 4, 0))),
    (&[(1, 2)], Some((6, 2, 2)), Some((-4, 3, 1))),
    (&[(1, 3)], Some((4, 1, 3)), Some((-6, 2, 2))),
    (&[(1, 4)], Some((1, 0, 4)), Some((-4, 1, 3))),
    (&[(1, 5)], None, Some((-1, 0, 4))),
    (&[(2, 1)], Some((6, 2, 1)), Some((-4, 3, 0))),
    (&[(1, 1), (2, 1)], Some((12, 1, 2)), Some((-18, 2, 1))),
    (&[(1, 2), (2, 1)], Some((6, 0, 3)), Some((-24, 1, 2))),
    (&[(1, 3), (2, 1)], None, Some((-10, 0, 3))),
    (&[(2, 2)], Some((3, 0, 2)), Some((-12, 1, 1))),
    (&[(1, 1), (2, 2)], None, Some((-15, 0, 2))),
    (&[(3, 1)], Some((4, 1, 1)), Some((-6, 2, 0))),
    (&[(1, 1), (3, 1)], Some((4, 0, 2)), Some((-16, 1, 1))),
    (&[(1, 2), (3, 1)], None, Some((-10, 0, 2))),
    (&[(2, 1), (3, 1)], None, Some((-10, 0, 1))),
    (&[(4, 1)], Some((1, 0, 1)), Some((-4, 1, 0))),
    (&[(1, 1), (4, 1)], None, Some((-5, 0, 1))),
];

/// The printed fifth-order scalar table, exactly as printed, including the
/// suspect `−5·X_y` (instead of `−5·X_x`) on the top-order bracket.
pub const SCALAR_TABLE_5_PRINTED: &[ScalarBracket] = &[
    (&[], Some((1, 5, 0)), None),
    (&[(1, 1)], Some((5, 4, 1)), Some((-1, 5, 0))),
    (&[(1, 2)], Some((10, 3, 2)), Some((-5, 4, 1))),
    (&[(1, 3)], Some((10, 2, 3)), Some((-10, 3, 2))),
    (&[(1, 4)], Some((5, 1, 4)), Some((-10, 2, 3))),
    (&[(1, 5)], Some((1, 0, 5)), Some((-5, 1, 4))),
    (&[(1, 6)], None, Some((-1, 0, 5))),
    (&[(2, 1)], Some((10, 3, 1)), Some((-5, 4, 0))),
    (&[(1, 1), (2, 1)], Some((30, 2, 2)), Some((-30, 3, 1))),
    (&[(1, 2), (2, 1)], Some((30, 1, 3)), Some((-60, 2, 2))),
    (&[(1, 3), (2, 1)], Some((10, 0, 4)), Some((-50, 1, 3))),
    (&[(1, 4), (2, 1)], None, Some((-15, 0, 4))),
    (&[(2, 2)], Some((15, 1, 2)), Some((-30, 2, 1))),
    (&[(1, 1), (2, 2)], Some((15, 0, 3)), Some((-75, 1, 2))),
    (&[(1, 2), (2, 2)], None, Some((-45, 0, 3))),
    (&[(2, 3)], None, Some((-15, 0, 2))),
    (&[(3, 1)], Some((10, 2, 1)), Some((-10, 3, 0))),
    (&[(1, 1), (3, 1)], Some((20, 1, 2)), Some((-40, 2, 1))),
    (&[(1, 2), (3, 1)], Some((10, 0, 3)), Some((-50, 1, 2))),
    (&[(1, 3), (3, 1)], None, Some((-20, 0, 3))),
    (&[(2, 1), (3, 1)], Some((10, 0, 2)), Some((-50, 1, 1))),
    (&[(1, 1), (2, 1), (3, 1)], None, Some((-60, 0, 2))),
    (&[(3, 2)], None, Some((-10, 0, 1))),
    (&[(4, 1)], Some((5, 1, 1)), Some((-10, 2, 0))),
    (&[(1, 1), (4, 1)], Some((5, 0, 2)), Some((-25, 1, 1))),
    (&[(1, 2), (4, 1)], None, Some((-15, 0, 2))),
    (&[(2, 1), (4, 1)], None, Some((-15, 0, 1))),
    // printed as Y_y − 5·X_y; the recursion gives Y_y − 5·X_x
    (&[(5, 1)], Some((1, 0, 1)), Some((-5, 0, 1))),
    (&[(1, 1), (5, 1)], None, Some((-6, 0, 1))),
];

/// The fifth-order bracket with the single ledgered correction applied.
pub const SCALAR_TABLE_5_CORRECTED_BRACKET: ScalarBracket =
    (&[(5, 1)], Some((1, 0, 1)), Some((-5, 1, 0)));

/// The printed sixth-order scalar table, exactly as printed, including the
/// suspect `−6·X_y` (instead of `−6·X_x`) on the top-order bracket.
pub const SCALAR_TABLE_6_PRINTED: &[ScalarBracket] = &[
    (&[], Some((1, 6, 0)), None),
    (&[(1, 1)], Some((6, 5, 1)), Some((-1, 6, 0))),
    (&[(1, 2)], Some((15, 4, 2)), Some((-6, 5, 1))),
    (&[(1, 3)], Some((20, 3, 3)), Some((-15, 4, 2))),
    (&[(1, 4)], Some((15, 2, 4)), Some((-20, 3, 3))),
    (&[(1, 5)], Some((6, 1, 5)), Some((-15, 2, 4))),
    (&[(1, 6)], Some((1, 0, 6)), Some((-6, 1, 5))),
    (&[(1, 7)], None, Some((-1, 0, 6))),
    (&[(2, 1)], Some((15, 4, 1)), Some((-6, 5, 0))),
    (&[(1, 1), (2, 1)], Some((60, 3, 2)), Some((-45, 4, 1))),
    (&[(1, 2), (2, 1)], Some((90, 2, 3)), Some((-120, 3, 2))),
    (&[(1, 3), (2, 1)], Some((60, 1, 4)), Some((-150, 2, 3))),
    (&[(1, 4), (2, 1)], Some((15, 0, 5)), Some((-90, 1, 4))),
    (&[(1, 5), (2, 1)], None, Some((-21, 0, 5))),
    (&[(2, 2)], Some((45, 2, 2)), Some((-60, 3, 1))),
    (&[(1, 1), (2, 2)], Some((90, 1, 3)), Some((-225, 2, 2))),
    (&[(1, 2), (2, 2)], Some((45, 0, 4)), Some((-270, 1, 3))),
    (&[(1, 3), (2, 2)], None, Some((-210, 0, 4))),
    (&[(2, 3)], Some((15, 0, 3)), Some((-90, 1, 2))),
    (&[(1, 1), (2, 3)], None, Some((-105, 0, 3))),
    (&[(3, 1)], Some((20, 3, 1)), Some((-15, 4, 0))),
    (&[(1, 1), (3, 1)], Some((60, 2, 2)), Some((-80, 3, 1))),
    (&[(1, 2), (3, 1)], Some((60, 1, 3)), Some((-150, 2, 2))),
    (&[(1, 3), (3, 1)], Some((20, 0, 4)), Some((-120, 1, 3))),
    (&[(1, 4), (3, 1)], None, Some((-35, 0, 4))),
    (&[(2, 1), (3, 1)], Some((60, 1, 2)), Some((-150, 2, 1))),
    (&[(1, 1), (2, 1), (3, 1)], Some((60, 0, 3)), Some((-360, 1, 2))),
    (&[(1, 2), (2, 1), (3, 1)], None, Some((-210, 0, 3))),
    (&[(2, 2), (3, 1)], None, Some((-105, 0, 2))),
    (&[(3, 2)], Some((10, 0, 2)), Some((-60, 1, 1))),
    (&[(1, 1), (3, 2)], None, Some((-70, 0, 2))),
    (&[(4, 1)], Some((15, 2, 1)), Some((-20, 3, 0))),
    (&[(1, 1), (4, 1)], Some((30, 1, 2)), Some((-75, 2, 1))),
    (&[(1, 2), (4, 1)], Some((15, 0, 3)), Some((-90, 1, 2))),
    (&[(1, 3), (4, 1)], None, Some((-35, 0, 3))),
    (&[(2, 1), (4, 1)], Some((15, 0, 2)), Some((-90, 1, 1))),
    (&[(1, 1), (2, 1), (4, 1)], None, Some((-105, 0, 2))),
    (&[(3, 1), (4, 1)], None, Some((-35, 0, 1))),
    (&[(5, 1)], Some((6, 1, 1)), Some((-15, 2, 0))),
    (&[(1, 1), (5, 1)], Some((6, 0, 2)), Some((-36, 1, 1))),
    (&[(1, 2), (5, 1)], None, Some((-21, 0, 2))),
    (&[(2, 1), (5, 1)], None, Some((-21, 0, 1))),
    // printed as Y_y − 6·X_y; the recursion gives Y_y − 6·X_x
    (&[(6, 1)], Some((1, 0, 1)), Some((-6, 0, 1))),
    (&[(1, 1), (6, 1)], None, Some((-7, 0, 1))),
];

/// The sixth-order bracket with the single ledgered correction applied.
pub const SCALAR_TABLE_6_CORRECTED_BRACKET: ScalarBracket =
    (&[(6, 1)], Some((1, 0, 1)), Some((-6, 1, 0)));

/// Replaces the brackets of `table` whose monomial shape matches one of the
/// corrections.
pub fn with_corrections(
    table: &[ScalarBracket],
    corrections: &[ScalarBracket],
) -> Vec<ScalarBracket> {
    table
        .iter()
        .map(|entry| {
            corrections
                .iter()
                .find(|c| c.0 == entry.0)
                .copied()
                .unwrap_or(*entry)
        })
        .collect()
}

fn d(a: u32, b: u32) -> bool {
    a == b
}

// ---------------------------------------------------------------------------
// several independent variables, one dependent variable
// ---------------------------------------------------------------------------

/// First-order coefficient over several independent variables.
pub fn eq_first_order_n1(n: u32, i1: u32) -> CoefficientPolynomial {
    let dm = dims(n, 1);
    let y = |xs: Vec<u32>, yo: usize| Some((Head::Y(1), xs, vec![1; yo]));
    let x = |k: u32, xs: Vec<u32>, yo: usize| Some((Head::X(k), xs, vec![1; yo]));
    let mut raw = vec![rt(1, y(vec![i1], 0), vec![])];
    for k1 in 1..=n {
        if d(k1, i1) {
            raw.push(rt(1, y(vec![], 1), vec![(1, vec![k1])]));
        }
        raw.push(rt(-1, x(k1, vec![i1], 0), vec![(1, vec![k1])]));
    }
    for k1 in 1..=n {
        for k2 in 1..=n {
            if d(k1, i1) {
                raw.push(rt(
                    -1,
                    x(k2, vec![], 1),
                    vec![(1, vec![k1]), (1, vec![k2])],
                ));
            }
        }
    }
    poly(dm, raw)
}

/// Second-order coefficient over several independent variables
/// (six displayed sum families).
pub fn eq_second_order_n1(n: u32, i1: u32, i2: u32) -> CoefficientPolynomial {
    let dm = dims(n, 1);
    let y = |xs: Vec<u32>, yo: usize| Some((Head::Y(1), xs, vec![1; yo]));
    let x = |k: u32, xs: Vec<u32>, yo: usize| Some((Head::X(k), xs, vec![1; yo]));
    let mut raw = vec![rt(1, y(vec![i1, i2], 0), vec![])];
    for k1 in 1..=n {
        let lin = vec![(1, vec![k1])];
        if d(k1, i1) {
            raw.push(rt(1, y(vec![i2], 1), lin.clone()));
        }
        if d(k1, i2) {
            raw.push(rt(1, y(vec![i1], 1), lin.clone()));
        }
        raw.push(rt(-1, x(k1, vec![i1, i2], 0), lin));
    }
    for k1 in 1..=n {
        for k2 in 1..=n {
            let quad = vec![(1, vec![k1]), (1, vec![k2])];
            if d(k1, i1) && d(k2, i2) {
                raw.push(rt(1, y(vec![], 2), quad.clone()));
            }
            if d(k1, i1) {
                raw.push(rt(-1, x(k2, vec![i2], 1), quad.clone()));
            }
            if d(k1, i2) {
                raw.push(rt(-1, x(k2, vec![i1], 1), quad));
            }
            let second = vec![(1, vec![k1, k2])];
            if d(k1, i1) && d(k2, i2) {
                raw.push(rt(1, y(vec![], 1), second.clone()));
            }
            if d(k1, i1) {
                raw.push(rt(-1, x(k2, vec![i2], 0), second.clone()));
            }
            if d(k1, i2) {
                raw.push(rt(-1, x(k2, vec![i1], 0), second));
            }
        }
    }
    for k1 in 1..=n {
        for k2 in 1..=n {
            for k3 in 1..=n {
                let cubic = vec![(1, vec![k1]), (1, vec![k2]), (1, vec![k3])];
                if d(k1, i1) && d(k2, i2) {
                    raw.push(rt(-1, x(k3, vec![], 2), cubic));
                }
                let mixed = vec![(1, vec![k1]), (1, vec![k2, k3])];
                if d(k1, i1) && d(k2, i2) {
                    raw.push(rt(-1, x(k3, vec![], 1), mixed.clone()));
                }
                if d(k3, i1) && d(k1, i2) {
                    raw.push(rt(-1, x(k2, vec![], 1), mixed.clone()));
                }
                if d(k2, i1) && d(k3, i2) {
                    raw.push(rt(-1, x(k1, vec![], 1), mixed));
                }
            }
        }
    }
    poly(dm, raw)
}

/// Third-order coefficient over several independent variables
/// (eleven displayed sum families).
pub fn eq_third_order_n1(n: u32, i1: u32, i2: u32, i3: u32) -> CoefficientPolynomial {
    let dm = dims(n, 1);
    let y = |xs: Vec<u32>, yo: usize| Some((Head::Y(1), xs, vec![1; yo]));
    let x = |k: u32, xs: Vec<u32>, yo: usize| Some((Head::X(k), xs, vec![1; yo]));
    let mut raw = vec![rt(1, y(vec![i1, i2, i3], 0), vec![])];
    // [δ Y_{x x y} ·3 − X_{xxx}] y_{k1}
    for k1 in 1..=n {
        let lin = vec![(1, vec![k1])];
        if d(k1, i1) {
            raw.push(rt(1, y(vec![i2, i3], 1), lin.clone()));
        }
        if d(k1, i2) {
            raw.push(rt(1, y(vec![i1, i3], 1), lin.clone()));
        }
        if d(k1, i3) {
            raw.push(rt(1, y(vec![i1, i2], 1), lin.clone()));
        }
        raw.push(rt(-1, x(k1, vec![i1, i2, i3], 0), lin));
    }
    // quadratic first-jet family and the second-jet singleton family
    for k1 in 1..=n {
        for k2 in 1..=n {
            let quad = vec![(1, vec![k1]), (1, vec![k2])];
            if d(k1, i1) && d(k2, i2) {
                raw.push(rt(1, y(vec![i3], 2), quad.clone()));
            }
            if d(k1, i3) && d(k2, i1) {
                raw.push(rt(1, y(vec![i2], 2), quad.clone()));
            }
            if d(k1, i2) && d(k2, i3) {
                raw.push(rt(1, y(vec![i1], 2), quad.clone()));
            }
            if d(k1, i1) {
                raw.push(rt(-1, x(k2, vec![i2, i3], 1), quad.clone()));
            }
            if d(k1, i2) {
                raw.push(rt(-1, x(k2, vec![i1, i3], 1), quad.clone()));
            }
            if d(k1, i3) {
                raw.push(rt(-1, x(k2, vec![i1, i2], 1), quad));
            }
            let second = vec![(1, vec![k1, k2])];
            if d(k1, i1) && d(k2, i2) {
                raw.push(rt(1, y(vec![i3], 1), second.clone()));
            }
            if d(k1, i3) && d(k2, i1) {
                raw.push(rt(1, y(vec![i2], 1), second.clone()));
            }
            if d(k1, i2) && d(k2, i3) {
                raw.push(rt(1, y(vec![i1], 1), second.clone()));
            }
            if d(k1, i1) {
                raw.push(rt(-1, x(k2, vec![i2, i3], 0), second.clone()));
            }
            if d(k1, i2) {
                raw.push(rt(-1, x(k2, vec![i1, i3], 0), second.clone()));
            }
            if d(k1, i3) {
                raw.push(rt(-1, x(k2, vec![i1, i2], 0), second));
            }
        }
    }
    // cubic first-jet family, the mixed y_{k1} y_{k2,k3} family and the
    // third-jet singleton family
    for k1 in 1..=n {
        for k2 in 1..=n {
            for k3 in 1..=n {
                let cubic = vec![(1, vec![k1]), (1, vec![k2]), (1, vec![k3])];
                if d(k1, i1) && d(k2, i2) && d(k3, i3) {
                    raw.push(rt(1, y(vec![], 3), cubic.clone()));
                }
                if d(k1, i1) && d(k2, i2) {
                    raw.push(rt(-1, x(k3, vec![i3], 2), cubic.clone()));
                }
                if d(k1, i1) && d(k2, i3) {
                    raw.push(rt(-1, x(k3, vec![i2], 2), cubic.clone()));
                }
                if d(k1, i2) && d(k2, i3) {
                    raw.push(rt(-1, x(k3, vec![i1], 2), cubic));
                }
                let mixed = vec![(1, vec![k1]), (1, vec![k2, k3])];
                for (a, b, c) in [(k1, k2, k3), (k3, k1, k2), (k2, k3, k1)] {
                    if d(a, i1) && d(b, i2) && d(c, i3) {
                        raw.push(rt(1, y(vec![], 2), mixed.clone()));
                    }
                }
                for (rest, xi) in [([i1, i2], i3), ([i1, i3], i2), ([i2, i3], i1)] {
                    if d(k1, rest[0]) && d(k2, rest[1]) {
                        raw.push(rt(-1, x(k3, vec![xi], 1), mixed.clone()));
                    }
                    if d(k3, rest[0]) && d(k1, rest[1]) {
                        raw.push(rt(-1, x(k2, vec![xi], 1), mixed.clone()));
                    }
                    if d(k2, rest[0]) && d(k3, rest[1]) {
                        raw.push(rt(-1, x(k1, vec![xi], 1), mixed.clone()));
                    }
                }
                let third = vec![(1, vec![k1, k2, k3])];
                if d(k1, i1) && d(k2, i2) && d(k3, i3) {
                    raw.push(rt(1, y(vec![], 1), third.clone()));
                }
                if d(k1, i1) && d(k2, i2) {
                    raw.push(rt(-1, x(k3, vec![i3], 0), third.clone()));
                }
                if d(k1, i1) && d(k2, i3) {
                    raw.push(rt(-1, x(k3, vec![i2], 0), third.clone()));
                }
                if d(k1, i2) && d(k2, i3) {
                    raw.push(rt(-1, x(k3, vec![i1], 0), third));
                }
            }
        }
    }
    // weight-four families
    for k1 in 1..=n {
        for k2 in 1..=n {
            for k3 in 1..=n {
                for k4 in 1..=n {
                    let quartic =
                        vec![(1, vec![k1]), (1, vec![k2]), (1, vec![k3]), (1, vec![k4])];
                    if d(k1, i1) && d(k2, i2) && d(k3, i3) {
                        raw.push(rt(-1, x(k4, vec![], 3), quartic));
                    }
                    let squared = vec![(1, vec![k1]), (1, vec![k2]), (1, vec![k3, k4])];
                    for (a, b, c, comp) in [
                        (k1, k2, k3, k4),
                        (k2, k3, k1, k4),
                        (k3, k2, k1, k4),
                        (k3, k4, k1, k2),
                        (k3, k1, k4, k2),
                        (k1, k3, k4, k2),
                    ] {
                        if d(a, i1) && d(b, i2) && d(c, i3) {
                            raw.push(rt(-1, x(comp, vec![], 2), squared.clone()));
                        }
                    }
                    let pairs = vec![(1, vec![k1, k2]), (1, vec![k3, k4])];
                    for (a, b, c, comp) in [(k1, k2, k3, k4), (k2, k3, k1, k4), (k3, k1, k2, k4)] {
                        if d(a, i1) && d(b, i2) && d(c, i3) {
                            raw.push(rt(-1, x(comp, vec![], 1), pairs.clone()));
                        }
                    }
                    let deep = vec![(1, vec![k1]), (1, vec![k2, k3, k4])];
                    for (a, b, c, comp) in [
                        (k1, k2, k3, k4),
                        (k4, k1, k2, k3),
                        (k3, k4, k1, k2),
                        (k2, k3, k4, k1),
                    ] {
                        if d(a, i1) && d(b, i2) && d(c, i3) {
                            raw.push(rt(-1, x(comp, vec![], 1), deep.clone()));
                        }
                    }
                }
            }
        }
    }
    poly(dm, raw)
}

// ---------------------------------------------------------------------------
// one independent variable, several dependent variables
// ---------------------------------------------------------------------------

fn v(l: u32, order: usize) -> (u32, Vec<u32>) {
    (l, vec![1; order])
}

/// First-order coefficient over several dependent variables.
pub fn eq_first_order_1m(m: u32, j: u32) -> CoefficientPolynomial {
    let dm = dims(1, m);
    let y = |xs: usize, ys: Vec<u32>| Some((Head::Y(j), vec![1; xs], ys));
    let x = |xs: usize, ys: Vec<u32>| Some((Head::X(1), vec![1; xs], ys));
    let mut raw = vec![rt(1, y(1, vec![]), vec![])];
    for l1 in 1..=m {
        raw.push(rt(1, y(0, vec![l1]), vec![v(l1, 1)]));
        if d(l1, j) {
            raw.push(rt(-1, x(1, vec![]), vec![v(l1, 1)]));
        }
    }
    for l1 in 1..=m {
        for l2 in 1..=m {
            if d(l1, j) {
                raw.push(rt(-1, x(0, vec![l2]), vec![v(l1, 1), v(l2, 1)]));
            }
        }
    }
    poly(dm, raw)
}

/// Second-order coefficient over several dependent variables
/// (six displayed sum families).
pub fn eq_second_order_1m(m: u32, j: u32) -> CoefficientPolynomial {
    let dm = dims(1, m);
    let y = |xs: usize, ys: Vec<u32>| Some((Head::Y(j), vec![1; xs], ys));
    let x = |xs: usize, ys: Vec<u32>| Some((Head::X(1), vec![1; xs], ys));
    let mut raw = vec![rt(1, y(2, vec![]), vec![])];
    for l1 in 1..=m {
        raw.push(rt(2, y(1, vec![l1]), vec![v(l1, 1)]));
        if d(l1, j) {
            raw.push(rt(-1, x(2, vec![]), vec![v(l1, 1)]));
        }
        raw.push(rt(1, y(0, vec![l1]), vec![v(l1, 2)]));
        if d(l1, j) {
            raw.push(rt(-2, x(1, vec![]), vec![v(l1, 2)]));
        }
    }
    for l1 in 1..=m {
        for l2 in 1..=m {
            let quad = vec![v(l1, 1), v(l2, 1)];
            raw.push(rt(1, y(0, vec![l1, l2]), quad.clone()));
            if d(l1, j) {
                raw.push(rt(-2, x(1, vec![l2]), quad));
            }
            let mixed = vec![v(l1, 1), v(l2, 2)];
            if d(l1, j) {
                raw.push(rt(-1, x(0, vec![l2]), mixed.clone()));
            }
            if d(l2, j) {
                raw.push(rt(-2, x(0, vec![l1]), mixed));
            }
        }
    }
    for l1 in 1..=m {
        for l2 in 1..=m {
            for l3 in 1..=m {
                if d(l1, j) {
                    raw.push(rt(
                        -1,
                        x(0, vec![l2, l3]),
                        vec![v(l1, 1), v(l2, 1), v(l3, 1)],
                    ));
                }
            }
        }
    }
    poly(dm, raw)
}

/// Third-order coefficient over several dependent variables (eleven
/// displayed sum families). The printed second-jet squared bracket carries
/// an unbound index; the scalar reduction forces the first summation index,
/// which is what this transcription uses.
pub fn eq_third_order_1m(m: u32, j: u32) -> CoefficientPolynomial {
    let dm = dims(1, m);
    let y = |xs: usize, ys: Vec<u32>| Some((Head::Y(j), vec![1; xs], ys));
    let x = |xs: usize, ys: Vec<u32>| Some((Head::X(1), vec![1; xs], ys));
    let mut raw = vec![rt(1, y(3, vec![]), vec![])];
    for l1 in 1..=m {
        raw.push(rt(3, y(2, vec![l1]), vec![v(l1, 1)]));
        if d(l1, j) {
            raw.push(rt(-1, x(3, vec![]), vec![v(l1, 1)]));
        }
        raw.push(rt(3, y(1, vec![l1]), vec![v(l1, 2)]));
        if d(l1, j) {
            raw.push(rt(-3, x(2, vec![]), vec![v(l1, 2)]));
        }
        raw.push(rt(1, y(0, vec![l1]), vec![v(l1, 3)]));
        if d(l1, j) {
            raw.push(rt(-3, x(1, vec![]), vec![v(l1, 3)]));
        }
    }
    for l1 in 1..=m {
        for l2 in 1..=m {
            let quad = vec![v(l1, 1), v(l2, 1)];
            raw.push(rt(3, y(1, vec![l1, l2]), quad.clone()));
            if d(l1, j) {
                raw.push(rt(-3, x(2, vec![l2]), quad));
            }
            let first_second = vec![v(l1, 1), v(l2, 2)];
            raw.push(rt(3, y(0, vec![l1, l2]), first_second.clone()));
            if d(l1, j) {
                raw.push(rt(-3, x(1, vec![l2]), first_second.clone()));
            }
            if d(l2, j) {
                raw.push(rt(-6, x(1, vec![l1]), first_second));
            }
            let second_sq = vec![v(l1, 2), v(l2, 2)];
            if d(l1, j) {
                raw.push(rt(-3, x(0, vec![l2]), second_sq));
            }
            let first_third = vec![v(l1, 1), v(l2, 3)];
            if d(l1, j) {
                raw.push(rt(-1, x(0, vec![l2]), first_third.clone()));
            }
            if d(l2, j) {
                raw.push(rt(-3, x(0, vec![l1]), first_third));
            }
        }
    }
    for l1 in 1..=m {
        for l2 in 1..=m {
            for l3 in 1..=m {
                let cubic = vec![v(l1, 1), v(l2, 1), v(l3, 1)];
                raw.push(rt(1, y(0, vec![l1, l2, l3]), cubic.clone()));
                if d(l1, j) {
                    raw.push(rt(-3, x(1, vec![l2, l3]), cubic));
                }
                let sq = vec![v(l1, 1), v(l2, 1), v(l3, 2)];
                if d(l1, j) {
                    raw.push(rt(-3, x(0, vec![l2, l3]), sq.clone()));
                }
                if d(l3, j) {
                    raw.push(rt(-3, x(0, vec![l1, l2]), sq));
                }
            }
        }
    }
    for l1 in 1..=m {
        for l2 in 1..=m {
            for l3 in 1..=m {
                for l4 in 1..=m {
                    if d(l1, j) {
                        raw.push(rt(
                            -1,
                            x(0, vec![l2, l3, l4]),
                            vec![v(l1, 1), v(l2, 1), v(l3, 1), v(l4, 1)],
                        ));
                    }
                }
            }
        }
    }
    poly(dm, raw)
}

/// Fourth-order coefficient over several dependent variables (eighteen
/// displayed brackets). The printed quartic first-jet bracket carries a
/// spurious `x` derivative on the `Y` symbol; the scalar reduction forces
/// the pure `y` derivative used here.
pub fn eq_fourth_order_1m(m: u32, j: u32) -> CoefficientPolynomial {
    let dm = dims(1, m);
    let y = |xs: usize, ys: Vec<u32>| Some((Head::Y(j), vec![1; xs], ys));
    let x = |xs: usize, ys: Vec<u32>| Some((Head::X(1), vec![1; xs], ys));
    let mut raw = vec![rt(1, y(4, vec![]), vec![])];
    // singleton brackets
    for l1 in 1..=m {
        raw.push(rt(4, y(3, vec![l1]), vec![v(l1, 1)]));
        if d(l1, j) {
            raw.push(rt(-1, x(4, vec![]), vec![v(l1, 1)]));
        }
        raw.push(rt(6, y(2, vec![l1]), vec![v(l1, 2)]));
        if d(l1, j) {
            raw.push(rt(-4, x(3, vec![]), vec![v(l1, 2)]));
        }
        raw.push(rt(4, y(1, vec![l1]), vec![v(l1, 3)]));
        if d(l1, j) {
            raw.push(rt(-6, x(2, vec![]), vec![v(l1, 3)]));
        }
        raw.push(rt(1, y(0, vec![l1]), vec![v(l1, 4)]));
        if d(l1, j) {
            raw.push(rt(-4, x(1, vec![]), vec![v(l1, 4)]));
        }
    }
    // two-factor brackets
    for l1 in 1..=m {
        for l2 in 1..=m {
            let f1f1 = vec![v(l1, 1), v(l2, 1)];
            raw.push(rt(6, y(2, vec![l1, l2]), f1f1.clone()));
            if d(l1, j) {
                raw.push(rt(-4, x(3, vec![l2]), f1f1));
            }
            let f1s2 = vec![v(l1, 1), v(l2, 2)];
            raw.push(rt(12, y(1, vec![l1, l2]), f1s2.clone()));
            if d(l1, j) {
                raw.push(rt(-6, x(2, vec![l2]), f1s2.clone()));
            }
            if d(l2, j) {
                raw.push(rt(-12, x(2, vec![l1]), f1s2));
            }
            let s2s2 = vec![v(l1, 2), v(l2, 2)];
            raw.push(rt(3, y(0, vec![l1, l2]), s2s2.clone()));
            if d(l1, j) {
                raw.push(rt(-12, x(1, vec![l2]), s2s2));
            }
            let f1t3 = vec![v(l1, 1), v(l2, 3)];
            raw.push(rt(4, y(0, vec![l1, l2]), f1t3.clone()));
            if d(l1, j) {
                raw.push(rt(-4, x(1, vec![l2]), f1t3.clone()));
            }
            if d(l2, j) {
                raw.push(rt(-12, x(1, vec![l1]), f1t3));
            }
            let s2t3 = vec![v(l1, 2), v(l2, 3)];
            if d(l1, j) {
                raw.push(rt(-4, x(0, vec![l2]), s2t3.clone()));
            }
            if d(l2, j) {
                raw.push(rt(-6, x(0, vec![l1]), s2t3));
            }
            let f1q4 = vec![v(l1, 1), v(l2, 4)];
            if d(l1, j) {
                raw.push(rt(-1, x(0, vec![l2]), f1q4.clone()));
            }
            if d(l2, j) {
                raw.push(rt(-4, x(0, vec![l1]), f1q4));
            }
        }
    }
    // three-factor brackets
    for l1 in 1..=m {
        for l2 in 1..=m {
            for l3 in 1..=m {
                let cubic = vec![v(l1, 1), v(l2, 1), v(l3, 1)];
                raw.push(rt(4, y(1, vec![l1, l2, l3]), cubic.clone()));
                if d(l1, j) {
                    raw.push(rt(-6, x(2, vec![l2, l3]), cubic));
                }
                let cubic_s = vec![v(l1, 1), v(l2, 1), v(l3, 2)];
                raw.push(rt(6, y(0, vec![l1, l2, l3]), cubic_s.clone()));
                if d(l1, j) {
                    raw.push(rt(-12, x(1, vec![l2, l3]), cubic_s.clone()));
                }
                if d(l3, j) {
                    raw.push(rt(-12, x(1, vec![l1, l2]), cubic_s));
                }
                let f_ss = vec![v(l1, 1), v(l2, 2), v(l3, 2)];
                if d(l1, j) {
                    raw.push(rt(-3, x(0, vec![l2, l3]), f_ss.clone()));
                }
                if d(l2, j) {
                    raw.push(rt(-12, x(0, vec![l1, l3]), f_ss));
                }
                let ff_t = vec![v(l1, 1), v(l2, 1), v(l3, 3)];
                if d(l1, j) {
                    raw.push(rt(-4, x(0, vec![l2, l3]), ff_t.clone()));
                }
                if d(l3, j) {
                    raw.push(rt(-6, x(0, vec![l1, l2]), ff_t));
                }
            }
        }
    }
    // four- and five-factor brackets
    for l1 in 1..=m {
        for l2 in 1..=m {
            for l3 in 1..=m {
                for l4 in 1..=m {
                    let quartic = vec![v(l1, 1), v(l2, 1), v(l3, 1), v(l4, 1)];
                    raw.push(rt(1, y(0, vec![l1, l2, l3, l4]), quartic.clone()));
                    if d(l1, j) {
                        raw.push(rt(-4, x(1, vec![l2, l3, l4]), quartic));
                    }
                    let q_s = vec![v(l1, 1), v(l2, 1), v(l3, 1), v(l4, 2)];
                    if d(l1, j) {
                        raw.push(rt(-6, x(0, vec![l2, l3, l4]), q_s.clone()));
                    }
                    if d(l4, j) {
                        raw.push(rt(-4, x(0, vec![l1, l2, l3]), q_s));
                    }
                    for l5 in 1..=m {
                        if d(l1, j) {
                            raw.push(rt(
                                -1,
                                x(0, vec![l2, l3, l4, l5]),
                                vec![v(l1, 1), v(l2, 1), v(l3, 1), v(l4, 1), v(l5, 1)],
                            ));
                        }
                    }
                }
            }
        }
    }
    poly(dm, raw)
}

// ---------------------------------------------------------------------------
// general case
// ---------------------------------------------------------------------------

/// First-order coefficient in the general case.
pub fn eq_first_order_nm(n: u32, m: u32, j: u32, i1: u32) -> CoefficientPolynomial {
    let dm = dims(n, m);
    let y = |xs: Vec<u32>, ys: Vec<u32>| Some((Head::Y(j), xs, ys));
    let x = |k: u32, xs: Vec<u32>, ys: Vec<u32>| Some((Head::X(k), xs, ys));
    let mut raw = vec![rt(1, y(vec![i1], vec![]), vec![])];
    for l1 in 1..=m {
        for k1 in 1..=n {
            let lin = vec![(l1, vec![k1])];
            if d(k1, i1) {
                raw.push(rt(1, y(vec![], vec![l1]), lin.clone()));
            }
            if d(l1, j) {
                raw.push(rt(-1, x(k1, vec![i1], vec![]), lin));
            }
        }
    }
    for l1 in 1..=m {
        for l2 in 1..=m {
            for k1 in 1..=n {
                for k2 in 1..=n {
                    if d(l2, j) && d(k1, i1) {
                        raw.push(rt(
                            -1,
                            x(k2, vec![], vec![l1]),
                            vec![(l1, vec![k1]), (l2, vec![k2])],
                        ));
                    }
                }
            }
        }
    }
    poly(dm, raw)
}

/// Second-order coefficient in the general case (five displayed families;
/// the last monomial is printed with a stray third first-order factor and is
/// transcribed as the mixed jet product its bracket belongs to).
pub fn eq_second_order_nm(n: u32, m: u32, j: u32, i1: u32, i2: u32) -> CoefficientPolynomial {
    let dm = dims(n, m);
    let y = |xs: Vec<u32>, ys: Vec<u32>| Some((Head::Y(j), xs, ys));
    let x = |k: u32, xs: Vec<u32>, ys: Vec<u32>| Some((Head::X(k), xs, ys));
    let mut raw = vec![rt(1, y(vec![i1, i2], vec![]), vec![])];
    for l1 in 1..=m {
        for k1 in 1..=n {
            let lin = vec![(l1, vec![k1])];
            if d(k1, i1) {
                raw.push(rt(1, y(vec![i2], vec![l1]), lin.clone()));
            }
            if d(k1, i2) {
                raw.push(rt(1, y(vec![i1], vec![l1]), lin.clone()));
            }
            if d(l1, j) {
                raw.push(rt(-1, x(k1, vec![i1, i2], vec![]), lin));
            }
            for k2 in 1..=n {
                let second = vec![(l1, vec![k1, k2])];
                if d(k1, i1) && d(k2, i2) {
                    raw.push(rt(1, y(vec![], vec![l1]), second.clone()));
                }
                if d(l1, j) && d(k1, i1) {
                    raw.push(rt(-1, x(k2, vec![i2], vec![]), second.clone()));
                }
                if d(l1, j) && d(k1, i2) {
                    raw.push(rt(-1, x(k2, vec![i1], vec![]), second));
                }
            }
        }
    }
    for l1 in 1..=m {
        for l2 in 1..=m {
            for k1 in 1..=n {
                for k2 in 1..=n {
                    let quad = vec![(l1, vec![k1]), (l2, vec![k2])];
                    if d(k1, i1) && d(k2, i2) {
                        raw.push(rt(1, y(vec![], vec![l1, l2]), quad.clone()));
                    }
                    if d(l2, j) && d(k1, i1) {
                        raw.push(rt(-1, x(k2, vec![i2], vec![l1]), quad.clone()));
                    }
                    if d(l2, j) && d(k1, i2) {
                        raw.push(rt(-1, x(k2, vec![i1], vec![l1]), quad));
                    }
                    for k3 in 1..=n {
                        let mixed = vec![(l1, vec![k1]), (l2, vec![k2, k3])];
                        if d(l1, j) && d(k2, i1) && d(k3, i2) {
                            raw.push(rt(-1, x(k1, vec![], vec![l2]), mixed.clone()));
                        }
                        if d(l2, j) && d(k3, i1) && d(k1, i2) {
                            raw.push(rt(-1, x(k2, vec![], vec![l1]), mixed.clone()));
                        }
                        if d(l2, j) && d(k1, i1) && d(k2, i2) {
                            raw.push(rt(-1, x(k3, vec![], vec![l1]), mixed));
                        }
                    }
                }
            }
        }
    }
    for l1 in 1..=m {
        for l2 in 1..=m {
            for l3 in 1..=m {
                for k1 in 1..=n {
                    for k2 in 1..=n {
                        for k3 in 1..=n {
                            if d(l3, j) && d(k1, i1) && d(k2, i2) {
                                raw.push(rt(
                                    -1,
                                    x(k3, vec![], vec![l1, l2]),
                                    vec![(l1, vec![k1]), (l2, vec![k2]), (l3, vec![k3])],
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    poly(dm, raw)
}

/// Third-order coefficient in the general case (eleven displayed families;
/// one component superscript in the second-jet squared family is printed as
/// an already-constrained index and is transcribed as the free one).
pub fn eq_third_order_nm(
    n: u32,
    m: u32,
    j: u32,
    i1: u32,
    i2: u32,
    i3: u32,
) -> CoefficientPolynomial {
    let dm = dims(n, m);
    let y = |xs: Vec<u32>, ys: Vec<u32>| Some((Head::Y(j), xs, ys));
    let x = |k: u32, xs: Vec<u32>, ys: Vec<u32>| Some((Head::X(k), xs, ys));
    let mut raw = vec![rt(1, y(vec![i1, i2, i3], vec![]), vec![])];
    // single first-jet factor
    for l1 in 1..=m {
        for k1 in 1..=n {
            let lin = vec![(l1, vec![k1])];
            if d(k1, i1) {
                raw.push(rt(1, y(vec![i2, i3], vec![l1]), lin.clone()));
            }
            if d(k1, i2) {
                raw.push(rt(1, y(vec![i1, i3], vec![l1]), lin.clone()));
            }
            if d(k1, i3) {
                raw.push(rt(1, y(vec![i1, i2], vec![l1]), lin.clone()));
            }
            if d(l1, j) {
                raw.push(rt(-1, x(k1, vec![i1, i2, i3], vec![]), lin));
            }
        }
    }
    // two first-jet factors
    for l1 in 1..=m {
        for l2 in 1..=m {
            for k1 in 1..=n {
                for k2 in 1..=n {
                    let quad = vec![(l1, vec![k1]), (l2, vec![k2])];
                    if d(k1, i1) && d(k2, i2) {
                        raw.push(rt(1, y(vec![i3], vec![l1, l2]), quad.clone()));
                    }
                    if d(k1, i3) && d(k2, i1) {
                        raw.push(rt(1, y(vec![i2], vec![l1, l2]), quad.clone()));
                    }
                    if d(k1, i2) && d(k2, i3) {
                        raw.push(rt(1, y(vec![i1], vec![l1, l2]), quad.clone()));
                    }
                    if d(l2, j) && d(k1, i1) {
                        raw.push(rt(-1, x(k2, vec![i2, i3], vec![l1]), quad.clone()));
                    }
                    if d(l2, j) && d(k1, i2) {
                        raw.push(rt(-1, x(k2, vec![i1, i3], vec![l1]), quad.clone()));
                    }
                    if d(l2, j) && d(k1, i3) {
                        raw.push(rt(-1, x(k2, vec![i1, i2], vec![l1]), quad));
                    }
                }
            }
        }
    }
    // three first-jet factors
    for l1 in 1..=m {
        for l2 in 1..=m {
            for l3 in 1..=m {
                for k1 in 1..=n {
                    for k2 in 1..=n {
                        for k3 in 1..=n {
                            let cubic = vec![(l1, vec![k1]), (l2, vec![k2]), (l3, vec![k3])];
                            if d(k1, i1) && d(k2, i2) && d(k3, i3) {
                                raw.push(rt(1, y(vec![], vec![l1, l2, l3]), cubic.clone()));
                            }
                            if d(l3, j) && d(k1, i1) && d(k2, i2) {
                                raw.push(rt(-1, x(k3, vec![i3], vec![l1, l2]), cubic.clone()));
                            }
                            if d(l3, j) && d(k1, i1) && d(k2, i3) {
                                raw.push(rt(-1, x(k3, vec![i2], vec![l1, l2]), cubic.clone()));
                            }
                            if d(l3, j) && d(k1, i2) && d(k2, i3) {
                                raw.push(rt(-1, x(k3, vec![i1], vec![l1, l2]), cubic));
                            }
                        }
                    }
                }
            }
        }
    }
    // four first-jet factors
    for l1 in 1..=m {
        for l2 in 1..=m {
            for l3 in 1..=m {
                for l4 in 1..=m {
                    for k1 in 1..=n {
                        for k2 in 1..=n {
                            for k3 in 1..=n {
                                for k4 in 1..=n {
                                    if d(l4, j) && d(k1, i1) && d(k2, i2) && d(k3, i3) {
                                        raw.push(rt(
                                            -1,
                                            x(k4, vec![], vec![l1, l2, l3]),
                                            vec![
                                                (l1, vec![k1]),
                                                (l2, vec![k2]),
                                                (l3, vec![k3]),
                                                (l4, vec![k4]),
                                            ],
                                        ));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    // one second-jet factor
    for l1 in 1..=m {
        for k1 in 1..=n {
            for k2 in 1..=n {
                let second = vec![(l1, vec![k1, k2])];
                if d(k1, i1) && d(k2, i2) {
                    raw.push(rt(1, y(vec![i3], vec![l1]), second.clone()));
                }
                if d(k1, i3) && d(k2, i1) {
                    raw.push(rt(1, y(vec![i2], vec![l1]), second.clone()));
                }
                if d(k1, i2) && d(k2, i3) {
                    raw.push(rt(1, y(vec![i1], vec![l1]), second.clone()));
                }
                if d(l1, j) && d(k1, i1) {
                    raw.push(rt(-1, x(k2, vec![i2, i3], vec![]), second.clone()));
                }
                if d(l1, j) && d(k1, i2) {
                    raw.push(rt(-1, x(k2, vec![i1, i3], vec![]), second.clone()));
                }
                if d(l1, j) && d(k1, i3) {
                    raw.push(rt(-1, x(k2, vec![i1, i2], vec![]), second));
                }
            }
        }
    }
    // first-jet times second-jet
    for l1 in 1..=m {
        for l2 in 1..=m {
            for k1 in 1..=n {
                for k2 in 1..=n {
                    for k3 in 1..=n {
                        let mixed = vec![(l1, vec![k1]), (l2, vec![k2, k3])];
                        for (a, b, c) in [(k1, k2, k3), (k3, k1, k2), (k2, k3, k1)] {
                            if d(a, i1) && d(b, i2) && d(c, i3) {
                                raw.push(rt(1, y(vec![], vec![l1, l2]), mixed.clone()));
                            }
                        }
                        for (rest, xi) in [([i1, i2], i3), ([i1, i3], i2), ([i2, i3], i1)] {
                            if d(l1, j) && d(k2, rest[0]) && d(k3, rest[1]) {
                                raw.push(rt(-1, x(k1, vec![xi], vec![l2]), mixed.clone()));
                            }
                            if d(l2, j) && d(k3, rest[0]) && d(k1, rest[1]) {
                                raw.push(rt(-1, x(k2, vec![xi], vec![l1]), mixed.clone()));
                            }
                            if d(l2, j) && d(k1, rest[0]) && d(k2, rest[1]) {
                                raw.push(rt(-1, x(k3, vec![xi], vec![l1]), mixed.clone()));
                            }
                        }
                    }
                }
            }
        }
    }
    // two first-jet factors times a second-jet factor
    for l1 in 1..=m {
        for l2 in 1..=m {
            for l3 in 1..=m {
                for k1 in 1..=n {
                    for k2 in 1..=n {
                        for k3 in 1..=n {
                            for k4 in 1..=n {
                                let sq =
                                    vec![(l1, vec![k1]), (l2, vec![k2]), (l3, vec![k3, k4])];
                                for (a, b, c, comp, pin, rest) in [
                                    (k1, k2, k3, k4, l3, [l1, l2]),
                                    (k2, k3, k1, k4, l3, [l1, l2]),
                                    (k3, k2, k1, k4, l3, [l1, l2]),
                                    (k3, k4, k1, k2, l2, [l1, l3]),
                                    (k3, k1, k4, k2, l2, [l1, l3]),
                                    (k1, k3, k4, k2, l2, [l1, l3]),
                                ] {
                                    if d(pin, j) && d(a, i1) && d(b, i2) && d(c, i3) {
                                        raw.push(rt(
                                            -1,
                                            x(comp, vec![], rest.to_vec()),
                                            sq.clone(),
                                        ));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    // two second-jet factors
    for l1 in 1..=m {
        for l2 in 1..=m {
            for k1 in 1..=n {
                for k2 in 1..=n {
                    for k3 in 1..=n {
                        for k4 in 1..=n {
                            let pairs = vec![(l1, vec![k1, k2]), (l2, vec![k3, k4])];
                            for (a, b, c, comp) in
                                [(k1, k2, k3, k4), (k2, k4, k1, k3), (k4, k1, k2, k3)]
                            {
                                if d(l2, j) && d(a, i1) && d(b, i2) && d(c, i3) {
                                    raw.push(rt(
                                        -1,
                                        x(comp, vec![], vec![l1]),
                                        pairs.clone(),
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    // one third-jet factor
    for l1 in 1..=m {
        for k1 in 1..=n {
            for k2 in 1..=n {
                for k3 in 1..=n {
                    let third = vec![(l1, vec![k1, k2, k3])];
                    if d(k1, i1) && d(k2, i2) && d(k3, i3) {
                        raw.push(rt(1, y(vec![], vec![l1]), third.clone()));
                    }
                    if d(l1, j) && d(k1, i1) && d(k2, i2) {
                        raw.push(rt(-1, x(k3, vec![i3], vec![]), third.clone()));
                    }
                    if d(l1, j) && d(k1, i1) && d(k2, i3) {
                        raw.push(rt(-1, x(k3, vec![i2], vec![]), third.clone()));
                    }
                    if d(l1, j) && d(k1, i2) && d(k2, i3) {
                        raw.push(rt(-1, x(k3, vec![i1], vec![]), third));
                    }
                }
            }
        }
    }
    // first-jet times third-jet
    for l1 in 1..=m {
        for l2 in 1..=m {
            for k1 in 1..=n {
                for k2 in 1..=n {
                    for k3 in 1..=n {
                        for k4 in 1..=n {
                            let deep = vec![(l1, vec![k1]), (l2, vec![k2, k3, k4])];
                            for (a, b, c, comp, pin, other) in [
                                (k1, k2, k3, k4, l2, l1),
                                (k4, k1, k2, k3, l2, l1),
                                (k3, k4, k1, k2, l2, l1),
                                (k2, k3, k4, k1, l1, l2),
                            ] {
                                if d(pin, j) && d(a, i1) && d(b, i2) && d(c, i3) {
                                    raw.push(rt(
                                        -1,
                                        x(comp, vec![], vec![other]),
                                        deep.clone(),
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    poly(dm, raw)
}

// ---------------------------------------------------------------------------
// chain-rule fixtures
// ---------------------------------------------------------------------------

pub fn faa_mono(dm: &Dims, f_ls: &[u32], gs: &[(u32, &[u32])]) -> FaaMonomial {
    let f = FSymbol::new(dm, f_ls.to_vec()).unwrap();
    let factors: Vec<GSymbol> = gs
        .iter()
        .map(|&(comp, xs)| GSymbol::new(dm, comp, xs.to_vec()).unwrap())
        .collect();
    FaaMonomial::new(f, factors).unwrap()
}

pub fn faa_from_terms(dm: Dims, terms: Vec<(i64, FaaMonomial)>) -> FaaPolynomial {
    let mut p = FaaPolynomial::zero(dm);
    for (c, mono) in terms {
        p.push(mono, &BigInt::from(c));
    }
    p
}

/// Scalar chain-rule table entry: coefficient, f-order, g shape.
pub type ScalarFaaTerm = (i64, usize, &'static [(usize, usize)]);

pub fn scalar_faa_poly(terms: &[ScalarFaaTerm]) -> FaaPolynomial {
    let dm = dims(1, 1);
    let mut p = FaaPolynomial::zero(dm);
    for &(c, fh, gs) in terms {
        let mut gsyms = Vec::new();
        for &(lambda, mu) in gs {
            for _ in 0..mu {
                gsyms.push(GSymbol::new(&dm, 1, vec![1; lambda]).unwrap());
            }
        }
        let f = FSymbol::new(&dm, vec![1; fh]).unwrap();
        p.push(FaaMonomial::new(f, gsyms).unwrap(), &BigInt::from(c));
    }
    p
}

/// The printed scalar chain-rule tables for orders one through six, with the
/// fifth-order table exactly as printed (the suspected 15/10 swap included).
pub const SCALAR_FAA_TABLES_PRINTED: &[&[ScalarFaaTerm]] = &[
    &[(1, 1, &[(1, 1)])],
    &[(1, 2, &[(1, 2)]), (1, 1, &[(2, 1)])],
    &[(1, 3, &[(1, 3)]), (3, 2, &[(1, 1), (2, 1)]), (1, 1, &[(3, 1)])],
    &[
        (1, 4, &[(1, 4)]),
        (6, 3, &[(1, 2), (2, 1)]),
        (3, 2, &[(2, 2)]),
        (4, 2, &[(1, 1), (3, 1)]),
        (1, 1, &[(4, 1)]),
    ],
    &[
        (1, 5, &[(1, 5)]),
        (10, 4, &[(1, 3), (2, 1)]),
        (15, 3, &[(1, 2), (3, 1)]),
        (10, 3, &[(1, 1), (2, 2)]),
        (10, 2, &[(2, 1), (3, 1)]),
        (5, 2, &[(1, 1), (4, 1)]),
        (1, 1, &[(5, 1)]),
    ],
    &[
        (1, 6, &[(1, 6)]),
        (15, 5, &[(1, 4), (2, 1)]),
        (45, 4, &[(1, 2), (2, 2)]),
        (15, 3, &[(2, 3)]),
        (20, 4, &[(1, 3), (3, 1)]),
        (60, 3, &[(1, 1), (2, 1), (3, 1)]),
        (10, 2, &[(3, 2)]),
        (15, 3, &[(1, 2), (4, 1)]),
        (15, 2, &[(2, 1), (4, 1)]),
        (6, 2, &[(1, 1), (5, 1)]),
        (1, 1, &[(6, 1)]),
    ],
];

/// The two fifth-order terms whose printed coefficients are swapped.
pub const SCALAR_FAA_5_CORRECTED: &[ScalarFaaTerm] =
    &[(10, 3, &[(1, 2), (3, 1)]), (15, 3, &[(1, 1), (2, 2)])];

pub fn corrected_faa_table(order: usize) -> Vec<ScalarFaaTerm> {
    SCALAR_FAA_TABLES_PRINTED[order - 1]
        .iter()
        .map(|entry| {
            SCALAR_FAA_5_CORRECTED
                .iter()
                .find(|c| order == 5 && c.1 == entry.1 && c.2 == entry.2)
                .copied()
                .unwrap_or(*entry)
        })
        .collect()
}

/// Third-order chain-rule table over several independent variables, one
/// dependent variable, as printed.
pub fn faa_n1_third(n: u32, i: [u32; 3]) -> FaaPolynomial {
    let dm = dims(n, 1);
    let [i1, i2, i3] = i;
    faa_from_terms(
        dm,
        vec![
            (1, faa_mono(&dm, &[1, 1, 1], &[(1, &[i1]), (1, &[i2]), (1, &[i3])])),
            (1, faa_mono(&dm, &[1, 1], &[(1, &[i1]), (1, &[i2, i3])])),
            (1, faa_mono(&dm, &[1, 1], &[(1, &[i2]), (1, &[i1, i3])])),
            (1, faa_mono(&dm, &[1, 1], &[(1, &[i3]), (1, &[i1, i2])])),
            (1, faa_mono(&dm, &[1], &[(1, &[i1, i2, i3])])),
        ],
    )
}

/// Fourth-order chain-rule table over several independent variables, one
/// dependent variable, as printed.
pub fn faa_n1_fourth(n: u32, i: [u32; 4]) -> FaaPolynomial {
    let dm = dims(n, 1);
    let [i1, i2, i3, i4] = i;
    let mut terms = vec![(
        1,
        faa_mono(
            &dm,
            &[1, 1, 1, 1],
            &[(1, &[i1]), (1, &[i2]), (1, &[i3]), (1, &[i4])],
        ),
    )];
    for (a, b, pair) in [
        (i2, i3, [i1, i4]),
        (i3, i1, [i2, i4]),
        (i1, i2, [i3, i4]),
        (i1, i4, [i2, i3]),
        (i2, i4, [i1, i3]),
        (i3, i4, [i1, i2]),
    ] {
        terms.push((
            1,
            faa_mono(&dm, &[1, 1, 1], &[(1, &[a]), (1, &[b]), (1, &pair)]),
        ));
    }
    for (p, q) in [([i1, i2], [i3, i4]), ([i1, i3], [i2, i4]), ([i1, i4], [i2, i3])] {
        terms.push((1, faa_mono(&dm, &[1, 1], &[(1, &p), (1, &q)])));
    }
    for (a, rest) in [
        (i1, [i2, i3, i4]),
        (i2, [i1, i3, i4]),
        (i3, [i1, i2, i4]),
        (i4, [i1, i2, i3]),
    ] {
        terms.push((1, faa_mono(&dm, &[1, 1], &[(1, &[a]), (1, &rest)])));
    }
    terms.push((1, faa_mono(&dm, &[1], &[(1, &[i1, i2, i3, i4])])));
    faa_from_terms(dm, terms)
}

/// Chain-rule tables over one independent variable, several dependent
/// variables, orders one through five, as printed.
pub fn faa_1m_table(m: u32, order: usize) -> FaaPolynomial {
    let dm = dims(1, m);
    let mut terms: Vec<(i64, FaaMonomial)> = Vec::new();
    let g = |lambda: usize, l: u32| (l, vec![1u32; lambda]);
    let mono = |f: &[u32], gs: &[(u32, Vec<u32>)]| {
        let gsl: Vec<(u32, &[u32])> = gs.iter().map(|(c, xs)| (*c, xs.as_slice())).collect();
        faa_mono(&dm, f, &gsl)
    };
    match order {
        1 => {
            for l1 in 1..=m {
                terms.push((1, mono(&[l1], &[g(1, l1)])));
            }
        }
        2 => {
            for l1 in 1..=m {
                for l2 in 1..=m {
                    terms.push((1, mono(&[l1, l2], &[g(1, l1), g(1, l2)])));
                }
                terms.push((1, mono(&[l1], &[g(2, l1)])));
            }
        }
        3 => {
            for l1 in 1..=m {
                for l2 in 1..=m {
                    for l3 in 1..=m {
                        terms.push((1, mono(&[l1, l2, l3], &[g(1, l1), g(1, l2), g(1, l3)])));
                    }
                    terms.push((3, mono(&[l1, l2], &[g(1, l1), g(2, l2)])));
                }
                terms.push((1, mono(&[l1], &[g(3, l1)])));
            }
        }
        4 => {
            for l1 in 1..=m {
                for l2 in 1..=m {
                    for l3 in 1..=m {
                        for l4 in 1..=m {
                            terms.push((
                                1,
                                mono(
                                    &[l1, l2, l3, l4],
                                    &[g(1, l1), g(1, l2), g(1, l3), g(1, l4)],
                                ),
                            ));
                        }
                        terms.push((6, mono(&[l1, l2, l3], &[g(1, l1), g(1, l2), g(2, l3)])));
                    }
                    terms.push((3, mono(&[l1, l2], &[g(2, l1), g(2, l2)])));
                    terms.push((4, mono(&[l1, l2], &[g(1, l1), g(3, l2)])));
                }
                terms.push((1, mono(&[l1], &[g(4, l1)])));
            }
        }
        5 => {
            for l1 in 1..=m {
                for l2 in 1..=m {
                    for l3 in 1..=m {
                        for l4 in 1..=m {
                            for l5 in 1..=m {
                                terms.push((
                                    1,
                                    mono(
                                        &[l1, l2, l3, l4, l5],
                                        &[g(1, l1), g(1, l2), g(1, l3), g(1, l4), g(1, l5)],
                                    ),
                                ));
                            }
                            terms.push((
                                10,
                                mono(
                                    &[l1, l2, l3, l4],
                                    &[g(1, l1), g(1, l2), g(1, l3), g(2, l4)],
                                ),
                            ));
                        }
                        terms.push((15, mono(&[l1, l2, l3], &[g(1, l1), g(2, l2), g(2, l3)])));
                        terms.push((10, mono(&[l1, l2, l3], &[g(1, l1), g(1, l2), g(3, l3)])));
                    }
                    terms.push((10, mono(&[l1, l2], &[g(2, l1), g(3, l2)])));
                    terms.push((5, mono(&[l1, l2], &[g(1, l1), g(4, l2)])));
                }
                terms.push((1, mono(&[l1], &[g(5, l1)])));
            }
        }
        _ => panic!("table only covers orders one through five"),
    }
    faa_from_terms(dm, terms)
}

/// General chain-rule tables for orders one through four, as printed.
pub fn faa_nm_table(n: u32, m: u32, order: usize, i: &[u32]) -> FaaPolynomial {
    let dm = dims(n, m);
    let mut terms: Vec<(i64, FaaMonomial)> = Vec::new();
    match order {
        1 => {
            for l1 in 1..=m {
                terms.push((1, faa_mono(&dm, &[l1], &[(l1, &[i[0]])])));
            }
        }
        2 => {
            for l1 in 1..=m {
                for l2 in 1..=m {
                    terms.push((1, faa_mono(&dm, &[l1, l2], &[(l1, &[i[0]]), (l2, &[i[1]])])));
                }
                terms.push((1, faa_mono(&dm, &[l1], &[(l1, &[i[0], i[1]])])));
            }
        }
        3 => {
            let (i1, i2, i3) = (i[0], i[1], i[2]);
            for l1 in 1..=m {
                for l2 in 1..=m {
                    for l3 in 1..=m {
                        terms.push((
                            1,
                            faa_mono(&dm, &[l1, l2, l3], &[(l1, &[i1]), (l2, &[i2]), (l3, &[i3])]),
                        ));
                    }
                    for (a, pair) in [(i1, [i2, i3]), (i2, [i1, i3]), (i3, [i1, i2])] {
                        terms.push((1, faa_mono(&dm, &[l1, l2], &[(l1, &[a]), (l2, &pair)])));
                    }
                }
                terms.push((1, faa_mono(&dm, &[l1], &[(l1, &[i1, i2, i3])])));
            }
        }
        4 => {
            let (i1, i2, i3, i4) = (i[0], i[1], i[2], i[3]);
            for l1 in 1..=m {
                for l2 in 1..=m {
                    for l3 in 1..=m {
                        for l4 in 1..=m {
                            terms.push((
                                1,
                                faa_mono(
                                    &dm,
                                    &[l1, l2, l3, l4],
                                    &[(l1, &[i1]), (l2, &[i2]), (l3, &[i3]), (l4, &[i4])],
                                ),
                            ));
                        }
                        for (a, b, pair) in [
                            (i2, i3, [i1, i4]),
                            (i3, i1, [i2, i4]),
                            (i1, i2, [i3, i4]),
                            (i1, i4, [i2, i3]),
                            (i2, i4, [i3, i1]),
                            (i3, i4, [i1, i2]),
                        ] {
                            terms.push((
                                1,
                                faa_mono(
                                    &dm,
                                    &[l1, l2, l3],
                                    &[(l1, &[a]), (l2, &[b]), (l3, &pair)],
                                ),
                            ));
                        }
                    }
                    for (p, q) in
                        [([i1, i2], [i3, i4]), ([i1, i3], [i2, i4]), ([i1, i4], [i2, i3])]
                    {
                        terms.push((1, faa_mono(&dm, &[l1, l2], &[(l1, &p), (l2, &q)])));
                    }
                    for (a, rest) in [
                        (i1, [i2, i3, i4]),
                        (i2, [i1, i3, i4]),
                        (i3, [i1, i2, i4]),
                        (i4, [i1, i2, i3]),
                    ] {
                        terms.push((1, faa_mono(&dm, &[l1, l2], &[(l1, &[a]), (l2, &rest)])));
                    }
                }
                terms.push((1, faa_mono(&dm, &[l1], &[(l1, &[i1, i2, i3, i4])])));
            }
        }
        _ => panic!("table only covers orders one through four"),
    }
    faa_from_terms(dm, terms)
}

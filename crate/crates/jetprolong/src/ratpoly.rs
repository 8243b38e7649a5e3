//! Minimal exact multivariate polynomial calculus over the rationals:
//! composition, formal differentiation and evaluation. Concrete smooth
//! functions for the numeric identity checks are drawn from this ring, so
//! every residual is an exact rational, never a float.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{JetError, Result};

/// Sparse polynomial with a fixed variable arity; exponent vectors are dense
/// keys, coefficients exact rationals, zeros never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPoly {
    arity: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl RationalPoly {
    pub fn zero(arity: usize) -> Self {
        RationalPoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(arity: usize, c: BigRational) -> Self {
        let mut p = RationalPoly::zero(arity);
        if !c.is_zero() {
            p.terms.insert(vec![0; arity], c);
        }
        p
    }

    pub fn constant_int(arity: usize, c: i64) -> Self {
        Self::constant(arity, BigRational::from(BigInt::from(c)))
    }

    /// The variable with index `var` (0-based).
    pub fn var(arity: usize, var: usize) -> Result<Self> {
        if var >= arity {
            return Err(JetError::Domain(format!(
                "variable {var} outside arity {arity}"
            )));
        }
        let mut exps = vec![0; arity];
        exps[var] = 1;
        let mut p = RationalPoly::zero(arity);
        p.terms.insert(exps, BigRational::one());
        Ok(p)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigRational)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    fn push(&mut self, exps: Vec<u32>, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self
            .terms
            .entry(exps.clone())
            .or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.push(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&BigRational::from(BigInt::from(-1))))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = RationalPoly::zero(self.arity);
        for (e, v) in &self.terms {
            out.push(e.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = RationalPoly::zero(self.arity);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.push(exps, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = RationalPoly::constant(self.arity, BigRational::one());
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Formal partial derivative along variable `var` (0-based).
    pub fn diff(&self, var: usize) -> Result<Self> {
        if var >= self.arity {
            return Err(JetError::Domain(format!(
                "variable {var} outside arity {}",
                self.arity
            )));
        }
        let mut out = RationalPoly::zero(self.arity);
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut exps = e.clone();
            exps[var] -= 1;
            out.push(exps, c * BigRational::from(BigInt::from(e[var])));
        }
        Ok(out)
    }

    pub fn eval(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.len() != self.arity {
            return Err(JetError::Domain(format!(
                "point arity {} does not match polynomial arity {}",
                point.len(),
                self.arity
            )));
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (v, &exp) in e.iter().enumerate() {
                for _ in 0..exp {
                    term *= &point[v];
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.arity != other.arity {
            return Err(JetError::Domain(format!(
                "arity mismatch {} vs {}",
                self.arity, other.arity
            )));
        }
        Ok(())
    }
}

/// Exact composition `f(g_1(x), …, g_m(x))`; `f` has arity `m`, every `g`
/// shares one arity `n`, and the result lives over the `x` variables.
pub fn compose(f: &RationalPoly, gs: &[RationalPoly]) -> Result<RationalPoly> {
    if gs.is_empty() {
        return Err(JetError::Domain("composition needs at least one inner function".into()));
    }
    if f.arity != gs.len() {
        return Err(JetError::Domain(format!(
            "outer arity {} does not match {} inner functions",
            f.arity,
            gs.len()
        )));
    }
    let n = gs[0].arity;
    for g in gs {
        if g.arity != n {
            return Err(JetError::Domain("inner functions have mixed arities".into()));
        }
    }
    // memoized powers of each inner function
    let mut powers: Vec<Vec<RationalPoly>> = gs
        .iter()
        .map(|g| vec![RationalPoly::constant(n, BigRational::one()), g.clone()])
        .collect();
    let mut out = RationalPoly::zero(n);
    for (exps, c) in &f.terms {
        let mut term = RationalPoly::constant(n, c.clone());
        for (v, &e) in exps.iter().enumerate() {
            while powers[v].len() <= e as usize {
                let next = powers[v].last().unwrap().mul(&gs[v])?;
                powers[v].push(next);
            }
            term = term.mul(&powers[v][e as usize])?;
        }
        out = out.add(&term)?;
    }
    Ok(out)
}

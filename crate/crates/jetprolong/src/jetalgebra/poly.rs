use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{DerivativeSymbol, Dims, Head, JetMonomial, JetVariable};
use crate::{JetError, Result};

/// The coefficient attached to one jet monomial: an integer combination of
/// derivative symbols, plus an optional pure-integer part keyed by `None`.
///
/// Zero integers are never stored, so the empty map is the zero combination.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SymbolCombination {
    entries: BTreeMap<Option<DerivativeSymbol>, BigInt>,
}

impl SymbolCombination {
    pub fn zero() -> Self {
        SymbolCombination::default()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn add_term(&mut self, key: Option<DerivativeSymbol>, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.entries.entry(key.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.entries.remove(&key);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Option<DerivativeSymbol>, &BigInt)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, key: &Option<DerivativeSymbol>) -> BigInt {
        self.entries.get(key).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn from_entries<I>(entries: I) -> Self
    where
        I: IntoIterator<Item = (Option<DerivativeSymbol>, BigInt)>,
    {
        let mut c = SymbolCombination::zero();
        for (k, v) in entries {
            c.add_term(k, &v);
        }
        c
    }
}

/// One term of a not-yet-canonical polynomial: jet-variable indices and
/// symbol indices may arrive unsorted and duplicated terms may repeat.
#[derive(Debug, Clone)]
pub struct RawTerm {
    pub coeff: BigInt,
    /// `None` marks a pure integer coefficient.
    pub symbol: Option<(Head, Vec<u32>, Vec<u32>)>,
    /// `(dep, lower indices)` per factor, unsorted.
    pub factors: Vec<(u32, Vec<u32>)>,
}

/// Streaming accumulator producing a canonical [`CoefficientPolynomial`].
/// Terms merge as they are pushed and cancellations are pruned immediately.
#[derive(Debug, Clone)]
pub struct PolyBuilder {
    dims: Dims,
    terms: BTreeMap<JetMonomial, SymbolCombination>,
}

impl PolyBuilder {
    pub fn new(dims: Dims) -> Self {
        PolyBuilder {
            dims,
            terms: BTreeMap::new(),
        }
    }

    pub fn push(&mut self, mono: JetMonomial, key: Option<DerivativeSymbol>, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(mono.clone()).or_default();
        slot.add_term(key, c);
        if slot.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn push_combination(&mut self, mono: &JetMonomial, comb: &SymbolCombination, scale: &BigInt) {
        if scale.is_zero() {
            return;
        }
        for (key, c) in comb.iter() {
            self.push(mono.clone(), key.clone(), &(c * scale));
        }
    }

    pub fn build(self) -> CoefficientPolynomial {
        CoefficientPolynomial {
            dims: self.dims,
            terms: self.terms,
        }
    }
}

/// A canonical polynomial in jet monomials with [`SymbolCombination`]
/// coefficients. Values are immutable once built; all operations return new
/// polynomials, so sharing across threads is safe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientPolynomial {
    dims: Dims,
    terms: BTreeMap<JetMonomial, SymbolCombination>,
}

/// First difference between two polynomials, for mismatch reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermDiff {
    pub monomial: JetMonomial,
    pub left: SymbolCombination,
    pub right: SymbolCombination,
}

impl CoefficientPolynomial {
    pub fn zero(dims: Dims) -> Self {
        CoefficientPolynomial {
            dims,
            terms: BTreeMap::new(),
        }
    }

    /// The constant integer polynomial `c`.
    pub fn constant(dims: Dims, c: BigInt) -> Self {
        let mut b = PolyBuilder::new(dims);
        b.push(JetMonomial::unit(), None, &c);
        b.build()
    }

    /// A derivative symbol as a polynomial (coefficient of the unit monomial).
    pub fn symbol(dims: Dims, sym: DerivativeSymbol) -> Self {
        let mut b = PolyBuilder::new(dims);
        b.push(JetMonomial::unit(), Some(sym), &BigInt::from(1));
        b.build()
    }

    /// A jet variable with integer coefficient one.
    pub fn jet_var(dims: Dims, var: JetVariable) -> Self {
        let mut b = PolyBuilder::new(dims);
        b.push(
            JetMonomial::from_factors(vec![var]),
            None,
            &BigInt::from(1),
        );
        b.build()
    }

    /// Canonicalizes a list of raw terms: validates every index against
    /// `dims`, sorts jet indices and monomial factors, merges like terms and
    /// drops cancellations. The result does not depend on the input order.
    pub fn canonicalize<I>(dims: Dims, raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = RawTerm>,
    {
        let mut b = PolyBuilder::new(dims);
        for term in raw {
            let key = match term.symbol {
                None => None,
                Some((head, xs, ys)) => Some(DerivativeSymbol::new(&dims, head, xs, ys)?),
            };
            let mut factors = Vec::with_capacity(term.factors.len());
            for (dep, indep) in term.factors {
                factors.push(JetVariable::new(&dims, dep, indep)?);
            }
            b.push(JetMonomial::from_factors(factors), key, &term.coeff);
        }
        Ok(b.build())
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&JetMonomial, &SymbolCombination)> {
        self.terms.iter()
    }

    /// The bracketed coefficient of `mono`; zero combination when absent.
    pub fn coefficient_of(&self, mono: &JetMonomial) -> SymbolCombination {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.dims.ensure_same(&other.dims)?;
        let mut b = PolyBuilder::new(self.dims);
        for (mono, comb) in self.terms.iter().chain(other.terms.iter()) {
            for (key, c) in comb.iter() {
                b.push(mono.clone(), key.clone(), c);
            }
        }
        Ok(b.build())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut b = PolyBuilder::new(self.dims);
        for (mono, comb) in &self.terms {
            for (key, v) in comb.iter() {
                b.push(mono.clone(), key.clone(), &(v * c));
            }
        }
        b.build()
    }

    /// Ring product. Derivative symbols are formal generators that only ever
    /// appear linearly, so a term-by-term product of two symbol-carrying
    /// terms is rejected.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.dims.ensure_same(&other.dims)?;
        let mut b = PolyBuilder::new(self.dims);
        for (ml, cl) in &self.terms {
            for (mr, cr) in &other.terms {
                let mono = ml.times_monomial(mr);
                for (kl, vl) in cl.iter() {
                    for (kr, vr) in cr.iter() {
                        let key = match (kl, kr) {
                            (None, None) => None,
                            (Some(s), None) | (None, Some(s)) => Some(s.clone()),
                            (Some(_), Some(_)) => return Err(JetError::LinearityViolation),
                        };
                        b.push(mono.clone(), key, &(vl * vr));
                    }
                }
            }
        }
        Ok(b.build())
    }

    /// The total differentiation operator `D_i`: acts on a derivative symbol
    /// `S` as `S_{x^i} + Σ_l y^l_i · S_{y^l}`, appends `i` to the lower
    /// indices of jet variables, and distributes over products by Leibniz.
    ///
    /// No jet-order truncation is applied; on polynomial operands the
    /// truncated operators of each order act identically.
    pub fn total_derivative(&self, i: u32) -> Result<Self> {
        self.dims.check_x(i)?;
        let mut b = PolyBuilder::new(self.dims);
        for (mono, comb) in &self.terms {
            for (key, c) in comb.iter() {
                if let Some(sym) = key {
                    // derivative of the coefficient symbol
                    b.push(mono.clone(), Some(sym.with_extra_x(i)), c);
                    for l in 1..=self.dims.m() {
                        let yl = JetVariable::new(&self.dims, l, vec![i])?;
                        b.push(mono.times(&yl), Some(sym.with_extra_y(l)), c);
                    }
                }
                // Leibniz over the monomial factors
                for pos in 0..mono.factors().len() {
                    b.push(mono.with_factor_differentiated(pos, i), key.clone(), c);
                }
            }
        }
        Ok(b.build())
    }

    /// First monomial whose coefficients differ, scanning in canonical order.
    pub fn first_difference(&self, other: &Self) -> Option<TermDiff> {
        let mut monos: Vec<&JetMonomial> =
            self.terms.keys().chain(other.terms.keys()).collect();
        monos.sort();
        monos.dedup();
        for mono in monos {
            let l = self.coefficient_of(mono);
            let r = other.coefficient_of(mono);
            if l != r {
                return Some(TermDiff {
                    monomial: (*mono).clone(),
                    left: l,
                    right: r,
                });
            }
        }
        None
    }
}

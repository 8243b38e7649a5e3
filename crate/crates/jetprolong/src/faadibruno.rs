//! The four multivariate Faa di Bruno formulas for higher derivatives of a
//! composition `h = f ∘ g`, with three mutually independent evaluation paths:
//!
//! * [`faa_closed`] sums the explicit formula over weight specifications and
//!   coset transversals;
//! * [`faa_inductive`] applies the derivation operators level by level;
//! * [`faa_partitions`] enumerates set partitions directly, the classical
//!   combinatorial interpretation, sharing no code with the coset machinery.
//!
//! [`extract_faa`] recovers the same polynomials from prolongation
//! coefficients (keep weight-κ terms, drop the `X` symbols), and
//! [`faa_numeric_check`] validates everything against exact rational
//! calculus on concrete polynomial functions.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinatorics::{
    coset_transversal, set_partitions, weight_specs, WeightMode,
};
use crate::jetalgebra::{CoefficientPolynomial, Dims, Head};
use crate::ratpoly::{compose, RationalPoly};
use crate::{JetError, Result};

/// A partial derivative of the outer function: `∂^λ f / ∂y^{l_1}…∂y^{l_λ}`,
/// with the empty multiset standing for `f` itself.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FSymbol {
    y_indices: Vec<u32>,
}

impl FSymbol {
    pub fn new(dims: &Dims, mut y_indices: Vec<u32>) -> Result<Self> {
        for &l in &y_indices {
            dims.check_y(l)?;
        }
        y_indices.sort_unstable();
        Ok(FSymbol { y_indices })
    }

    pub fn y_indices(&self) -> &[u32] {
        &self.y_indices
    }

    pub fn order(&self) -> usize {
        self.y_indices.len()
    }

    fn with_extra(&self, l: u32) -> Self {
        let mut s = self.clone();
        let pos = s.y_indices.partition_point(|&v| v <= l);
        s.y_indices.insert(pos, l);
        s
    }
}

impl Ord for FSymbol {
    fn cmp(&self, other: &Self) -> Ordering {
        self.y_indices
            .len()
            .cmp(&other.y_indices.len())
            .then_with(|| self.y_indices.cmp(&other.y_indices))
    }
}

impl PartialOrd for FSymbol {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A partial derivative of one inner function:
/// `∂^λ g^l / ∂x^{i_1}…∂x^{i_λ}` with `λ ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GSymbol {
    component: u32,
    x_indices: Vec<u32>,
}

impl GSymbol {
    pub fn new(dims: &Dims, component: u32, mut x_indices: Vec<u32>) -> Result<Self> {
        dims.check_y(component)?;
        if x_indices.is_empty() {
            return Err(JetError::Domain(
                "inner-function symbol needs at least one derivative".into(),
            ));
        }
        for &i in &x_indices {
            dims.check_x(i)?;
        }
        x_indices.sort_unstable();
        Ok(GSymbol {
            component,
            x_indices,
        })
    }

    pub fn component(&self) -> u32 {
        self.component
    }

    pub fn x_indices(&self) -> &[u32] {
        &self.x_indices
    }

    pub fn order(&self) -> usize {
        self.x_indices.len()
    }

    fn with_extra(&self, i: u32) -> Self {
        let mut s = self.clone();
        let pos = s.x_indices.partition_point(|&v| v <= i);
        s.x_indices.insert(pos, i);
        s
    }
}

impl Ord for GSymbol {
    fn cmp(&self, other: &Self) -> Ordering {
        self.x_indices
            .len()
            .cmp(&other.x_indices.len())
            .then_with(|| self.x_indices.cmp(&other.x_indices))
            .then_with(|| self.component.cmp(&other.component))
    }
}

impl PartialOrd for GSymbol {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// One monomial of a Faa di Bruno polynomial: an `f`-derivative times a
/// multiset of `g`-derivatives. The chain rule pairs each `y`-slot of the
/// `f`-derivative with one `g`-factor, so the orders always agree; the
/// constructor asserts it rather than assuming it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaaMonomial {
    f: FSymbol,
    gs: Vec<GSymbol>,
}

impl FaaMonomial {
    pub fn new(f: FSymbol, mut gs: Vec<GSymbol>) -> Result<Self> {
        if f.order() != gs.len() {
            return Err(JetError::Verification(format!(
                "f-derivative order {} does not match {} g-factors",
                f.order(),
                gs.len()
            )));
        }
        gs.sort();
        Ok(FaaMonomial { f, gs })
    }

    pub fn f(&self) -> &FSymbol {
        &self.f
    }

    pub fn g_factors(&self) -> &[GSymbol] {
        &self.gs
    }

    /// Total derivative order carried by the g-factors.
    pub fn weight(&self) -> usize {
        self.gs.iter().map(|g| g.order()).sum()
    }

    /// Factors grouped as (symbol, multiplicity).
    pub fn grouped(&self) -> Vec<(&GSymbol, usize)> {
        let mut out: Vec<(&GSymbol, usize)> = Vec::new();
        for g in &self.gs {
            match out.last_mut() {
                Some((w, c)) if *w == g => *c += 1,
                _ => out.push((g, 1)),
            }
        }
        out
    }
}

/// Polynomial with integer coefficients in Faa di Bruno monomials, canonical
/// by construction (sorted map, no zeros).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaaPolynomial {
    dims: Dims,
    terms: BTreeMap<FaaMonomial, BigInt>,
}

impl FaaPolynomial {
    pub fn zero(dims: Dims) -> Self {
        FaaPolynomial {
            dims,
            terms: BTreeMap::new(),
        }
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

    pub fn terms(&self) -> impl Iterator<Item = (&FaaMonomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient_of(&self, mono: &FaaMonomial) -> BigInt {
        self.terms.get(mono).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn push(&mut self, mono: FaaMonomial, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(mono.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&mono);
        }
    }

    /// Sum of all integer coefficients; over one dependent variable this
    /// counts the set partitions the formula enumerates.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn first_difference(&self, other: &Self) -> Option<(FaaMonomial, BigInt, BigInt)> {
        let mut monos: Vec<&FaaMonomial> = self.terms.keys().chain(other.terms.keys()).collect();
        monos.sort();
        monos.dedup();
        for mono in monos {
            let l = self.coefficient_of(mono);
            let r = other.coefficient_of(mono);
            if l != r {
                return Some(((*mono).clone(), l, r));
            }
        }
        None
    }
}

fn validate_tuple(dims: &Dims, kappa: u32, i_tuple: &[u32]) -> Result<()> {
    if kappa == 0 {
        return Err(JetError::Domain("order κ must be at least 1".into()));
    }
    if i_tuple.len() != kappa as usize {
        return Err(JetError::Domain(format!(
            "index tuple length {} does not match κ = {kappa}",
            i_tuple.len()
        )));
    }
    for &i in i_tuple {
        dims.check_x(i)?;
    }
    Ok(())
}

/// Closed evaluation: sum over weight specs of weight exactly κ, dependent
/// index assignments, and coset representatives; each representative sends
/// every derivative slot of the monomial shape to one position of the index
/// tuple.
pub fn faa_closed(dims: Dims, kappa: u32, i_tuple: &[u32]) -> Result<FaaPolynomial> {
    validate_tuple(&dims, kappa, i_tuple)?;
    let mut out = FaaPolynomial::zero(dims);
    let one = BigInt::one();
    for spec in weight_specs(kappa, WeightMode::FaaDiBruno)? {
        let h = spec.height() as usize;
        let slots = spec.slots();
        let groups = spec.groups();
        let slot_group: Vec<usize> = slots
            .iter()
            .map(|s| groups.iter().position(|&g| g == (s.e, s.nu)).unwrap())
            .collect();
        let mut group_slots: Vec<Vec<usize>> = vec![Vec::new(); h];
        for (t, &g) in slot_group.iter().enumerate() {
            group_slots[g].push(t);
        }
        for phi in coset_transversal(&spec) {
            let group_xs: Vec<Vec<u32>> = group_slots
                .iter()
                .map(|slots_of_g| {
                    slots_of_g
                        .iter()
                        .map(|&t| i_tuple[phi.image(t) as usize - 1])
                        .collect()
                })
                .collect();
            let mut ls = vec![1u32; h];
            loop {
                let f = FSymbol::new(&dims, ls.clone())?;
                let gs: Vec<GSymbol> = group_xs
                    .iter()
                    .zip(&ls)
                    .map(|(xs, &l)| GSymbol::new(&dims, l, xs.clone()))
                    .collect::<Result<_>>()?;
                out.push(FaaMonomial::new(f, gs)?, &one);
                if !next_assignment(&mut ls, dims.m()) {
                    break;
                }
            }
        }
    }
    Ok(out)
}

/// Inductive evaluation: start from the chain rule at order one and apply
/// the derivation that upgrades one `g`-factor or splits off a new first
/// derivative, once per remaining index.
pub fn faa_inductive(dims: Dims, kappa: u32, i_tuple: &[u32]) -> Result<FaaPolynomial> {
    validate_tuple(&dims, kappa, i_tuple)?;
    let mut h = FaaPolynomial::zero(dims);
    let one = BigInt::one();
    for l in 1..=dims.m() {
        let f = FSymbol::new(&dims, vec![l])?;
        let g = GSymbol::new(&dims, l, vec![i_tuple[0]])?;
        h.push(FaaMonomial::new(f, vec![g])?, &one);
    }
    for &i in &i_tuple[1..] {
        let mut next = FaaPolynomial::zero(dims);
        for (mono, c) in h.terms() {
            // upgrade one g-factor
            for pos in 0..mono.gs.len() {
                let mut gs = mono.gs.clone();
                gs[pos] = gs[pos].with_extra(i);
                next.push(FaaMonomial::new(mono.f.clone(), gs)?, c);
            }
            // differentiate the f-derivative and append a fresh g-factor
            for l in 1..=dims.m() {
                let f = mono.f.with_extra(l);
                let mut gs = mono.gs.clone();
                gs.push(GSymbol::new(&dims, l, vec![i])?);
                next.push(FaaMonomial::new(f, gs)?, c);
            }
        }
        h = next;
    }
    Ok(h)
}

/// Set-partition oracle: every partition of the κ index positions, with each
/// block assigned a dependent component, contributes one term. Fully
/// decoupled from the coset and derivation machinery.
pub fn faa_partitions(dims: Dims, kappa: u32, i_tuple: &[u32]) -> Result<FaaPolynomial> {
    validate_tuple(&dims, kappa, i_tuple)?;
    let mut out = FaaPolynomial::zero(dims);
    let one = BigInt::one();
    for partition in set_partitions(kappa as usize) {
        let b = partition.len();
        let mut ls = vec![1u32; b];
        loop {
            let f = FSymbol::new(&dims, ls.clone())?;
            let gs: Vec<GSymbol> = partition
                .iter()
                .zip(&ls)
                .map(|(block, &l)| {
                    let xs: Vec<u32> = block.iter().map(|&p| i_tuple[p]).collect();
                    GSymbol::new(&dims, l, xs)
                })
                .collect::<Result<_>>()?;
            out.push(FaaMonomial::new(f, gs)?, &one);
            if !next_assignment(&mut ls, dims.m()) {
                break;
            }
        }
    }
    Ok(out)
}

fn next_assignment(ls: &mut [u32], m: u32) -> bool {
    for v in ls.iter_mut() {
        if *v < m {
            *v += 1;
            return true;
        }
        *v = 1;
    }
    false
}

/// The dictionary from prolongation coefficients to Faa di Bruno
/// polynomials: keep the monomials of weight exactly κ, drop every `X`
/// symbol, read `Y`-derivatives as `f`-derivatives and jet variables as
/// `g`-derivatives.
pub fn extract_faa(prolongation: &CoefficientPolynomial, kappa: u32) -> Result<FaaPolynomial> {
    let dims = prolongation.dims();
    let mut out = FaaPolynomial::zero(dims);
    for (mono, comb) in prolongation.terms() {
        if mono.weight() != kappa as usize {
            continue;
        }
        let gs: Vec<GSymbol> = mono
            .factors()
            .iter()
            .map(|v| GSymbol::new(&dims, v.dep(), v.indep().to_vec()))
            .collect::<Result<_>>()?;
        for (key, c) in comb.iter() {
            let sym = key.as_ref().ok_or_else(|| {
                JetError::Verification("integer coefficient in a prolongation entry".into())
            })?;
            match sym.head() {
                Head::X(_) => continue,
                Head::Y(_) => {
                    if sym.x_order() != 0 {
                        return Err(JetError::Verification(
                            "weight-κ Y-symbol still carries x-derivatives".into(),
                        ));
                    }
                    let f = FSymbol::new(&dims, sym.y_indices().to_vec())?;
                    out.push(FaaMonomial::new(f, gs.clone())?, c);
                }
            }
        }
    }
    Ok(out)
}

/// Exact numeric identity check. Computes `∂^κ (f∘g)` along `i_tuple` by
/// polynomial composition and differentiation, evaluates the closed formula
/// by substituting exact derivative values at `point`, and returns the
/// difference, which must be exactly zero.
pub fn faa_numeric_check(
    f: &RationalPoly,
    gs: &[RationalPoly],
    kappa: u32,
    i_tuple: &[u32],
    point: &[BigRational],
) -> Result<BigRational> {
    let m = gs.len() as u32;
    let n = if gs.is_empty() { 0 } else { gs[0].arity() as u32 };
    let dims = Dims::new(n, m)?;
    validate_tuple(&dims, kappa, i_tuple)?;

    // left side: exact derivative of the composition
    let mut h = compose(f, gs)?;
    for &i in i_tuple {
        h = h.diff(i as usize - 1)?;
    }
    let lhs = h.eval(point)?;

    // right side: the closed formula with exact derivative values
    let g_values: Vec<BigRational> = gs
        .iter()
        .map(|g| g.eval(point))
        .collect::<Result<_>>()?;
    let formula = faa_closed(dims, kappa, i_tuple)?;
    let mut rhs = BigRational::zero();
    for (mono, c) in formula.terms() {
        let mut fd = f.clone();
        for &l in mono.f().y_indices() {
            fd = fd.diff(l as usize - 1)?;
        }
        let mut term = fd.eval(&g_values)?;
        for g_sym in mono.g_factors() {
            let mut gd = gs[g_sym.component() as usize - 1].clone();
            for &i in g_sym.x_indices() {
                gd = gd.diff(i as usize - 1)?;
            }
            term *= gd.eval(point)?;
        }
        rhs += term * BigRational::from(c.clone());
    }
    Ok(lhs - rhs)
}

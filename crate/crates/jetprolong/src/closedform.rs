//! The explicit combinatorial formula for prolongation coefficients.
//!
//! For each weight specification the engine sums over coset representatives
//! of the monomial stabilizer and over ordered-split shuffles of the κ lower
//! indices. Kronecker symbols are contracted eagerly: a representative and a
//! shuffle force the summation index of almost every derivative slot, so the
//! full `n^W` index range is never materialized. Terms stream into a
//! canonical accumulating polynomial.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use std::collections::BTreeMap;

use crate::combinatorics::{
    binomial, coset_transversal, factorial, shuffles, weight_specs, TransversalElement,
    WeightMode, WeightSpec,
};
use crate::jetalgebra::{
    CoefficientPolynomial, DerivativeSymbol, Dims, Head, JetMonomial, JetVariable, PolyBuilder,
};
use crate::{JetError, Result};

/// A single coefficient request: which `Y^j_{i_1..i_κ}` to compute.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFormRequest {
    pub dims: Dims,
    pub kappa: u32,
    pub j: u32,
    pub i_tuple: Vec<u32>,
}

impl ClosedFormRequest {
    pub fn new(dims: Dims, kappa: u32, j: u32, i_tuple: Vec<u32>) -> Result<Self> {
        if kappa == 0 {
            return Err(JetError::Domain("order κ must be at least 1".into()));
        }
        if i_tuple.len() != kappa as usize {
            return Err(JetError::Domain(format!(
                "index tuple length {} does not match κ = {kappa}",
                i_tuple.len()
            )));
        }
        dims.check_y(j)?;
        for &i in &i_tuple {
            dims.check_x(i)?;
        }
        Ok(ClosedFormRequest {
            dims,
            kappa,
            j,
            i_tuple,
        })
    }
}

/// One streamed term of the closed formula, before accumulation.
struct ClosedTerm {
    negative: bool,
    symbol: DerivativeSymbol,
    mono: JetMonomial,
    /// Number of Kronecker constraints contracted to produce this term.
    delta_count: usize,
}

/// Evaluates the closed formula with the canonical transversals.
pub fn prolongation_closed(req: &ClosedFormRequest) -> Result<CoefficientPolynomial> {
    prolongation_closed_with_transversals(req, &coset_transversal)
}

/// Evaluates the closed formula with caller-supplied coset representatives.
/// Any transversal works; this entry point exists so tests can replace each
/// canonical representative by a random stabilizer translate and confirm the
/// result does not move.
pub fn prolongation_closed_with_transversals<F>(
    req: &ClosedFormRequest,
    transversal_of: &F,
) -> Result<CoefficientPolynomial>
where
    F: Fn(&WeightSpec) -> Vec<TransversalElement> + Sync,
{
    let specs = weight_specs(req.kappa, WeightMode::Prolongation)?;
    let parts: Vec<Result<CoefficientPolynomial>> = specs
        .par_iter()
        .map(|spec| {
            let mut builder = PolyBuilder::new(req.dims);
            let one = BigInt::one();
            let minus_one = -BigInt::one();
            enumerate_spec_terms(req, spec, &transversal_of(spec), &mut |term: ClosedTerm| {
                let c = if term.negative { &minus_one } else { &one };
                builder.push(term.mono, Some(term.symbol), c);
            })?;
            Ok(builder.build())
        })
        .collect();

    // constant term Y^j with all κ derivatives along the tuple
    let mut acc = CoefficientPolynomial::symbol(
        req.dims,
        DerivativeSymbol::new(&req.dims, Head::Y(req.j), req.i_tuple.clone(), Vec::new())?,
    );
    for part in parts {
        acc = acc.add(&part?)?;
    }
    Ok(acc)
}

/// Re-runs the term enumeration and checks, for every produced term, that
/// the number of contracted Kronecker symbols equals κ minus the x-order of
/// the derivative symbol. Returns the number of terms inspected.
pub fn verify_kronecker_counts(req: &ClosedFormRequest) -> Result<usize> {
    let specs = weight_specs(req.kappa, WeightMode::Prolongation)?;
    let mut inspected = 0usize;
    for spec in &specs {
        let mut failure: Option<String> = None;
        enumerate_spec_terms(req, spec, &coset_transversal(spec), &mut |term: ClosedTerm| {
            inspected += 1;
            let expected = req.kappa as usize - term.symbol.x_order();
            if term.delta_count != expected && failure.is_none() {
                failure = Some(format!(
                    "spec {spec}: {} Kronecker symbols, expected {expected}",
                    term.delta_count
                ));
            }
        })?;
        if let Some(msg) = failure {
            return Err(JetError::Verification(msg));
        }
    }
    Ok(inspected)
}

fn enumerate_spec_terms(
    req: &ClosedFormRequest,
    spec: &WeightSpec,
    transversal: &[TransversalElement],
    sink: &mut dyn FnMut(ClosedTerm),
) -> Result<()> {
    let dims = req.dims;
    let kappa = req.kappa;
    let w = spec.weight();
    let h = spec.height() as usize;
    let slots = spec.slots();
    let groups = spec.groups();
    // group index of each slot, and slot indices of each group, in lex order
    let slot_group: Vec<usize> = slots
        .iter()
        .map(|s| groups.iter().position(|&g| g == (s.e, s.nu)).unwrap())
        .collect();
    let mut group_slots: Vec<Vec<usize>> = vec![Vec::new(); h];
    for (t, &g) in slot_group.iter().enumerate() {
        group_slots[g].push(t);
    }

    let idx = |pos1: u32| req.i_tuple[pos1 as usize - 1];

    let mono_of = |ks: &[u32], ls: &[u32]| -> Result<JetMonomial> {
        let mut factors = Vec::with_capacity(h);
        for (g, slots_of_g) in group_slots.iter().enumerate() {
            let indices: Vec<u32> = slots_of_g.iter().map(|&t| ks[t]).collect();
            factors.push(JetVariable::new(&dims, ls[g], indices)?);
        }
        Ok(JetMonomial::from_factors(factors))
    };

    for phi in transversal {
        // Y-part: shuffles pairing all W slots with lower indices
        if w <= kappa {
            for tau in shuffles(kappa, w)? {
                let ks: Vec<u32> = (0..slots.len())
                    .map(|t| idx(tau.image(phi.image(t))))
                    .collect();
                let xs: Vec<u32> = (w + 1..=kappa).map(|a| idx(tau.image(a))).collect();
                let mut ls = vec![1u32; h];
                loop {
                    let symbol =
                        DerivativeSymbol::new(&dims, Head::Y(req.j), xs.clone(), ls.clone())?;
                    sink(ClosedTerm {
                        negative: false,
                        symbol,
                        mono: mono_of(&ks, &ls)?,
                        delta_count: w as usize,
                    });
                    if !advance(&mut ls, dims.m(), usize::MAX) {
                        break;
                    }
                }
            }
        }
        // X-part: the slot mapped to W carries the free component index
        let u = phi.preimage(w);
        let g_star = slot_group[u];
        for tau in shuffles(kappa, w - 1)? {
            let mut ks = vec![0u32; slots.len()];
            for t in 0..slots.len() {
                if t != u {
                    ks[t] = idx(tau.image(phi.image(t)));
                }
            }
            let xs: Vec<u32> = (w..=kappa).map(|a| idx(tau.image(a))).collect();
            for ku in 1..=dims.n() {
                ks[u] = ku;
                let mut ls = vec![1u32; h];
                ls[g_star] = req.j;
                loop {
                    let ys: Vec<u32> = (0..h)
                        .filter(|&g| g != g_star)
                        .map(|g| ls[g])
                        .collect();
                    let symbol = DerivativeSymbol::new(&dims, Head::X(ku), xs.clone(), ys)?;
                    sink(ClosedTerm {
                        negative: true,
                        symbol,
                        mono: mono_of(&ks, &ls)?,
                        delta_count: w as usize - 1,
                    });
                    if !advance(&mut ls, dims.m(), g_star) {
                        break;
                    }
                }
            }
        }
    }
    Ok(())
}

/// Odometer step over assignments in `1..=m`, skipping the pinned position.
fn advance(ls: &mut [u32], m: u32, pinned: usize) -> bool {
    for (pos, v) in ls.iter_mut().enumerate() {
        if pos == pinned {
            continue;
        }
        if *v < m {
            *v += 1;
            return true;
        }
        *v = 1;
    }
    false
}

/// The scalar closed formula (one independent and one dependent variable),
/// evaluated directly from the integer coefficient expressions
/// `κ·(κ−1)…(κ−W+1) / ∏ (λ_e!)^{μ_e} μ_e!` without any permutation
/// enumeration. Serves as a third independent path for `n = m = 1`.
pub fn prolongation_closed_scalar(kappa: u32) -> Result<CoefficientPolynomial> {
    if kappa == 0 {
        return Err(JetError::Domain("order κ must be at least 1".into()));
    }
    let dims = Dims::new(1, 1)?;
    let mut builder = PolyBuilder::new(dims);
    builder.push(
        JetMonomial::unit(),
        Some(DerivativeSymbol::new(
            &dims,
            Head::Y(1),
            vec![1; kappa as usize],
            Vec::new(),
        )?),
        &BigInt::one(),
    );
    for spec in weight_specs(kappa, WeightMode::Prolongation)? {
        let w = spec.weight();
        let h = spec.height();
        let denom = denominator(&spec);
        let mono = scalar_monomial(&dims, &spec)?;

        // falling factorial κ…(κ−W+1); zero when W = κ+1
        let mut y_num = BigInt::one();
        for v in (kappa + 1 - w)..=kappa {
            y_num *= v;
        }
        if !y_num.is_zero() {
            let coeff = exact_div(&y_num, &denom)?;
            let sym = DerivativeSymbol::new(
                &dims,
                Head::Y(1),
                vec![1; (kappa - w) as usize],
                vec![1; h as usize],
            )?;
            builder.push(mono.clone(), Some(sym), &coeff);
        }

        // κ…(κ−W+2) · W; the falling factorial is empty when W = 1
        let mut x_num = BigInt::from(w);
        for v in (kappa + 2 - w)..=kappa {
            x_num *= v;
        }
        let coeff = -exact_div(&x_num, &denom)?;
        let sym = DerivativeSymbol::new(
            &dims,
            Head::X(1),
            vec![1; (kappa + 1 - w) as usize],
            vec![1; (h - 1) as usize],
        )?;
        builder.push(mono, Some(sym), &coeff);
    }
    Ok(builder.build())
}

fn denominator(spec: &WeightSpec) -> BigInt {
    let mut acc = BigInt::one();
    for &(lambda, mu) in spec.pairs() {
        acc *= factorial(mu);
        let lf = factorial(lambda);
        for _ in 0..mu {
            acc *= &lf;
        }
    }
    acc
}

/// Division that must be exact; a remainder means the multinomial identity
/// behind the formula was violated.
fn exact_div(num: &BigInt, den: &BigInt) -> Result<BigInt> {
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(JetError::Verification(format!(
            "non-integer coefficient {num}/{den}"
        )));
    }
    Ok(q)
}

fn scalar_monomial(dims: &Dims, spec: &WeightSpec) -> Result<JetMonomial> {
    let mut factors = Vec::new();
    for &(lambda, mu) in spec.pairs() {
        for _ in 0..mu {
            factors.push(JetVariable::new(dims, 1, vec![1; lambda as usize])?);
        }
    }
    Ok(JetMonomial::from_factors(factors))
}

/// The binomial slice of the scalar formula: for each λ the coefficient of
/// `(y_1)^λ` must be `C(κ,λ)·Y_{x^{κ−λ} y^λ} − C(κ,λ−1)·X_{x^{κ−λ+1} y^{λ−1}}`,
/// and the top power `(y_1)^{κ+1}` carries `−X_{y^κ}` alone. Returns the map
/// λ ↦ (A, B) of verified values or a shape-mismatch report.
pub fn binomial_slice(kappa: u32) -> Result<BTreeMap<u32, (BigInt, BigInt)>> {
    let dims = Dims::new(1, 1)?;
    let poly = prolongation_closed_scalar(kappa)?;
    let mut out = BTreeMap::new();
    for lambda in 1..=kappa + 1 {
        let mono = JetMonomial::from_factors(vec![
            JetVariable::new(&dims, 1, vec![1])?;
            lambda as usize
        ]);
        let comb = poly.coefficient_of(&mono);
        let expect_a = if lambda <= kappa {
            binomial(kappa, lambda)
        } else {
            BigInt::zero()
        };
        let expect_b = binomial(kappa, lambda - 1);
        let y_sym = DerivativeSymbol::new(
            &dims,
            Head::Y(1),
            vec![1; kappa.saturating_sub(lambda) as usize],
            vec![1; lambda as usize],
        )?;
        let x_sym = DerivativeSymbol::new(
            &dims,
            Head::X(1),
            vec![1; (kappa + 1 - lambda) as usize],
            vec![1; (lambda - 1) as usize],
        )?;
        let got_a = comb.get(&Some(y_sym));
        let got_b = -comb.get(&Some(x_sym));
        let entries = comb.len();
        let expected_entries = usize::from(!expect_a.is_zero()) + 1;
        if got_a != expect_a || got_b != expect_b || entries != expected_entries {
            return Err(JetError::Verification(format!(
                "binomial slice mismatch at κ={kappa}, λ={lambda}: \
                 got ({got_a}, {got_b}), expected ({expect_a}, {expect_b})"
            )));
        }
        out.insert(lambda, (expect_a, expect_b));
    }
    Ok(out)
}

/// Integrality sweep: every fractional expression in the scalar formula up
/// to `max_kappa` divides exactly. Returns the number of divisions checked.
pub fn verify_scalar_integrality(max_kappa: u32) -> Result<usize> {
    let mut checked = 0usize;
    for kappa in 1..=max_kappa {
        for spec in weight_specs(kappa, WeightMode::Prolongation)? {
            let w = spec.weight();
            let denom = denominator(&spec);
            let mut y_num = BigInt::one();
            for v in (kappa + 1 - w)..=kappa {
                y_num *= v;
            }
            let mut x_num = BigInt::from(w);
            for v in (kappa + 2 - w)..=kappa {
                x_num *= v;
            }
            exact_div(&y_num, &denom)?;
            exact_div(&x_num, &denom)?;
            checked += 2;
        }
    }
    Ok(checked)
}

/// Convenience wrapper: closed-form coefficient with a scalar-notation
/// request, used by tests and the command-line front end.
pub fn closed_entry(
    dims: Dims,
    kappa: u32,
    j: u32,
    i_tuple: &[u32],
) -> Result<CoefficientPolynomial> {
    let req = ClosedFormRequest::new(dims, kappa, j, i_tuple.to_vec())?;
    prolongation_closed(&req)
}

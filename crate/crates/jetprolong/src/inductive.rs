//! Ground-truth engine: prolongation coefficients computed by the classical
//! recursion
//!
//! ```text
//! Y^j_{i_1}        = D_{i_1}(Y^j) − Σ_k D_{i_1}(X^k) · y^j_k
//! Y^j_{i_1..i_λ}   = D_{i_λ}(Y^j_{i_1..i_{λ-1}}) − Σ_k D_{i_λ}(X^k) · y^j_{i_1..i_{λ-1},k}
//! ```
//!
//! Entries are computed bottom-up with memoization under sorted index keys;
//! that the value only depends on the sorted tuple is a theorem about jet
//! coordinates, not an assumption, so [`verify_index_symmetry`] recomputes
//! raw chains and compares.

use std::collections::BTreeMap;
use std::collections::HashMap;

use crate::jetalgebra::{
    CoefficientPolynomial, DerivativeSymbol, Dims, Head, JetVariable,
};
use crate::{JetError, Result};

/// All prolongation coefficients of one vector field up to order `kappa`,
/// keyed by dependent index and sorted multi-index.
#[derive(Debug, Clone)]
pub struct ProlongationTable {
    dims: Dims,
    kappa: u32,
    entries: BTreeMap<(u32, Vec<u32>), CoefficientPolynomial>,
}

impl ProlongationTable {
    pub fn dims(&self) -> Dims {
        self.dims
    }

    pub fn kappa(&self) -> u32 {
        self.kappa
    }

    /// Coefficient for dependent index `j` and index tuple `i_tuple` (any
    /// order; lookups go through the sorted key).
    pub fn entry(&self, j: u32, i_tuple: &[u32]) -> Result<&CoefficientPolynomial> {
        self.dims.check_y(j)?;
        for &i in i_tuple {
            self.dims.check_x(i)?;
        }
        if i_tuple.is_empty() || i_tuple.len() > self.kappa as usize {
            return Err(JetError::MissingEntry(format!(
                "tuple length {} outside 1..={}",
                i_tuple.len(),
                self.kappa
            )));
        }
        let mut key = i_tuple.to_vec();
        key.sort_unstable();
        self.entries
            .get(&(j, key))
            .ok_or_else(|| JetError::MissingEntry(format!("entry ({j}, {i_tuple:?})")))
    }

    pub fn iter(
        &self,
    ) -> impl Iterator<Item = (&(u32, Vec<u32>), &CoefficientPolynomial)> {
        self.entries.iter()
    }
}

/// Computes the full prolongation table up to order `kappa` by the inductive
/// formulas. Rejects `kappa = 0`.
pub fn prolong_inductive(dims: Dims, kappa: u32) -> Result<ProlongationTable> {
    if kappa == 0 {
        return Err(JetError::Domain("order κ must be at least 1".into()));
    }
    let mut entries: BTreeMap<(u32, Vec<u32>), CoefficientPolynomial> = BTreeMap::new();
    for j in 1..=dims.m() {
        for i in 1..=dims.n() {
            entries.insert((j, vec![i]), first_order(dims, j, i)?);
        }
    }
    for level in 2..=kappa {
        let mut tuples = Vec::new();
        sorted_tuples(dims.n(), level as usize, 1, &mut Vec::new(), &mut tuples);
        for j in 1..=dims.m() {
            for tuple in &tuples {
                // the prefix of a sorted tuple is sorted, so it is in the map
                let (prefix, last) = tuple.split_at(tuple.len() - 1);
                let prev = entries
                    .get(&(j, prefix.to_vec()))
                    .expect("previous level present");
                let value = step(dims, j, prev, prefix, last[0])?;
                entries.insert((j, tuple.clone()), value);
            }
        }
    }
    Ok(ProlongationTable {
        dims,
        kappa,
        entries,
    })
}

/// `Y^j_{i}` from the base case of the recursion.
fn first_order(dims: Dims, j: u32, i: u32) -> Result<CoefficientPolynomial> {
    let y = CoefficientPolynomial::symbol(
        dims,
        DerivativeSymbol::component(&dims, Head::Y(j))?,
    );
    let mut acc = y.total_derivative(i)?;
    for k in 1..=dims.n() {
        let x = CoefficientPolynomial::symbol(
            dims,
            DerivativeSymbol::component(&dims, Head::X(k))?,
        );
        let jet = CoefficientPolynomial::jet_var(dims, JetVariable::new(&dims, j, vec![k])?);
        acc = acc.sub(&x.total_derivative(i)?.mul(&jet)?)?;
    }
    Ok(acc)
}

/// One level of the recursion: `D_i(prev) − Σ_k D_i(X^k) · y^j_{prefix,k}`.
fn step(
    dims: Dims,
    j: u32,
    prev: &CoefficientPolynomial,
    prefix: &[u32],
    i: u32,
) -> Result<CoefficientPolynomial> {
    let mut acc = prev.total_derivative(i)?;
    for k in 1..=dims.n() {
        let x = CoefficientPolynomial::symbol(
            dims,
            DerivativeSymbol::component(&dims, Head::X(k))?,
        );
        let mut indices = prefix.to_vec();
        indices.push(k);
        let jet = CoefficientPolynomial::jet_var(dims, JetVariable::new(&dims, j, indices)?);
        acc = acc.sub(&x.total_derivative(i)?.mul(&jet)?)?;
    }
    Ok(acc)
}

fn sorted_tuples(n: u32, len: usize, from: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if cur.len() == len {
        out.push(cur.clone());
        return;
    }
    for i in from..=n {
        cur.push(i);
        sorted_tuples(n, len, i, cur, out);
        cur.pop();
    }
}

/// Recomputes every entry along raw (unsorted) recursion chains and checks
/// that each one canonicalizes to the table value of its sorted key. Returns
/// the number of tuples checked.
pub fn verify_index_symmetry(table: &ProlongationTable) -> Result<usize> {
    let dims = table.dims();
    let mut checked = 0usize;
    for j in 1..=dims.m() {
        let mut memo: HashMap<Vec<u32>, CoefficientPolynomial> = HashMap::new();
        for i in 1..=dims.n() {
            memo.insert(vec![i], first_order(dims, j, i)?);
        }
        let mut level_tuples: Vec<Vec<u32>> =
            (1..=dims.n()).map(|i| vec![i]).collect();
        for _ in 2..=table.kappa() {
            let mut next = Vec::new();
            for prefix in &level_tuples {
                for i in 1..=dims.n() {
                    let mut tuple = prefix.clone();
                    tuple.push(i);
                    let prev = memo.get(prefix).expect("raw prefix present");
                    let value = step(dims, j, prev, prefix, i)?;
                    memo.insert(tuple.clone(), value);
                    next.push(tuple);
                }
            }
            level_tuples = next;
        }
        for (tuple, raw) in &memo {
            let sorted = table.entry(j, tuple)?;
            if raw != sorted {
                return Err(JetError::Verification(format!(
                    "entry ({j}, {tuple:?}) differs from its sorted-key value"
                )));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

/// Structural facts that hold for every coefficient of an order-κ entry:
/// the monomial weight obeys `W ≤ κ + 1`, `Y`-symbols carry derivative
/// orders `(κ − W, H)` and `X`-symbols `(κ − W + 1, H − 1)`.
pub fn check_entry_structure(entry_order: usize, poly: &CoefficientPolynomial) -> Result<()> {
    let kappa = entry_order;
    for (mono, comb) in poly.terms() {
        let w = mono.weight();
        let h = mono.height();
        if w > kappa + 1 {
            return Err(JetError::Verification(format!(
                "monomial weight {w} exceeds κ+1 = {}",
                kappa + 1
            )));
        }
        for (key, _) in comb.iter() {
            let sym = match key {
                Some(s) => s,
                None => {
                    return Err(JetError::Verification(
                        "pure integer coefficient in a prolongation entry".into(),
                    ))
                }
            };
            let (want_x, want_y) = match sym.head() {
                Head::Y(_) => (kappa as isize - w as isize, h as isize),
                Head::X(_) => (kappa as isize - w as isize + 1, h as isize - 1),
            };
            if sym.x_order() as isize != want_x || sym.y_order() as isize != want_y {
                return Err(JetError::Verification(format!(
                    "symbol orders ({}, {}) do not match expected ({want_x}, {want_y}) \
                     for weight {w}, height {h}",
                    sym.x_order(),
                    sym.y_order()
                )));
            }
        }
    }
    Ok(())
}

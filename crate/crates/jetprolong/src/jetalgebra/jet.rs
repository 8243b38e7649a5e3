use std::cmp::Ordering;

use super::Dims;
use crate::Result;

/// A pure jet coordinate `y^j_{k_1..k_λ}` with `λ ≥ 1`. The lower indices are
/// kept sorted ascending, which encodes the symmetry of mixed partials; the
/// order-zero coordinate `y^j` never occurs as a jet variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JetVariable {
    dep: u32,
    indep: Vec<u32>,
}

impl JetVariable {
    pub fn new(dims: &Dims, dep: u32, indep: Vec<u32>) -> Result<Self> {
        dims.check_y(dep)?;
        if indep.is_empty() {
            return Err(crate::JetError::Domain(
                "jet variable needs at least one lower index".into(),
            ));
        }
        let mut indep = indep;
        for &i in &indep {
            dims.check_x(i)?;
        }
        indep.sort_unstable();
        Ok(JetVariable { dep, indep })
    }

    pub fn dep(&self) -> u32 {
        self.dep
    }

    pub fn indep(&self) -> &[u32] {
        &self.indep
    }

    /// Jet order λ.
    pub fn order(&self) -> usize {
        self.indep.len()
    }

    /// The variable with one more lower index, re-sorted: the action of the
    /// total derivative along `x^i`.
    pub fn with_extra_index(&self, i: u32) -> Self {
        let mut v = self.clone();
        let pos = v.indep.partition_point(|&w| w <= i);
        v.indep.insert(pos, i);
        v
    }
}

impl Ord for JetVariable {
    fn cmp(&self, other: &Self) -> Ordering {
        self.indep
            .len()
            .cmp(&other.indep.len())
            .then_with(|| self.indep.cmp(&other.indep))
            .then_with(|| self.dep.cmp(&other.dep))
    }
}

impl PartialOrd for JetVariable {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A multiset of jet variables in canonical sorted order; the empty product
/// is the constant monomial `1`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct JetMonomial {
    factors: Vec<JetVariable>,
}

impl JetMonomial {
    pub fn unit() -> Self {
        JetMonomial::default()
    }

    pub fn from_factors(mut factors: Vec<JetVariable>) -> Self {
        factors.sort();
        JetMonomial { factors }
    }

    pub fn factors(&self) -> &[JetVariable] {
        &self.factors
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    /// Sum of the jet orders of the factors.
    pub fn weight(&self) -> usize {
        self.factors.iter().map(|v| v.order()).sum()
    }

    /// Number of factors, counted with multiplicity.
    pub fn height(&self) -> usize {
        self.factors.len()
    }

    pub fn times(&self, var: &JetVariable) -> Self {
        let mut factors = self.factors.clone();
        let pos = factors.partition_point(|w| w <= var);
        factors.insert(pos, var.clone());
        JetMonomial { factors }
    }

    pub fn times_monomial(&self, other: &JetMonomial) -> Self {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        factors.sort();
        JetMonomial { factors }
    }

    /// Leibniz step: the factor at `pos` gains an extra lower index `i`.
    pub fn with_factor_differentiated(&self, pos: usize, i: u32) -> Self {
        let mut factors = self.factors.clone();
        let var = factors.remove(pos).with_extra_index(i);
        let at = factors.partition_point(|w| *w <= var);
        factors.insert(at, var);
        JetMonomial { factors }
    }

    /// Factors grouped as (variable, multiplicity) in canonical order.
    pub fn grouped(&self) -> Vec<(&JetVariable, usize)> {
        let mut out: Vec<(&JetVariable, usize)> = Vec::new();
        for v in &self.factors {
            match out.last_mut() {
                Some((w, c)) if *w == v => *c += 1,
                _ => out.push((v, 1)),
            }
        }
        out
    }
}

impl Ord for JetMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.factors.cmp(&other.factors))
    }
}

impl PartialOrd for JetMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

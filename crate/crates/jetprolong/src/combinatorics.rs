//! Enumeration of the combinatorial objects the closed formulas sum over:
//! weight specifications of jet monomials, ordered-split shuffle
//! permutations, stabilizer subgroups of a monomial shape, and canonical
//! transversals of their cosets in the symmetric group.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::{JetError, Result};

/// The shape data `(λ_1 < … < λ_d ; μ_1, …, μ_d)` of a jet monomial family
/// `(y_{λ_1})^{μ_1} … (y_{λ_d})^{μ_d}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightSpec {
    pairs: Vec<(u32, u32)>,
}

impl WeightSpec {
    /// Builds a spec from `(λ_e, μ_e)` pairs; λ must be strictly increasing
    /// and every μ positive.
    pub fn new(pairs: Vec<(u32, u32)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(JetError::Domain("weight spec needs at least one pair".into()));
        }
        for w in pairs.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(JetError::Domain(format!(
                    "jet orders must be strictly increasing, got {} then {}",
                    w[0].0, w[1].0
                )));
            }
        }
        for &(lambda, mu) in &pairs {
            if lambda == 0 || mu == 0 {
                return Err(JetError::Domain(
                    "jet orders and multiplicities must be positive".into(),
                ));
            }
        }
        Ok(WeightSpec { pairs })
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    /// Number of distinct jet orders `d`.
    pub fn families(&self) -> usize {
        self.pairs.len()
    }

    /// Weight `W = Σ μ_e λ_e`.
    pub fn weight(&self) -> u32 {
        self.pairs.iter().map(|&(l, m)| l * m).sum()
    }

    /// Height `H = Σ μ_e`, the number of jet-variable factors.
    pub fn height(&self) -> u32 {
        self.pairs.iter().map(|&(_, m)| m).sum()
    }

    /// All slots in lexicographic `(e, ν, γ)` order; there are `W` of them.
    pub fn slots(&self) -> Vec<Slot> {
        let mut out = Vec::with_capacity(self.weight() as usize);
        for (e0, &(lambda, mu)) in self.pairs.iter().enumerate() {
            for nu in 1..=mu {
                for gamma in 1..=lambda {
                    out.push(Slot {
                        e: e0 as u32 + 1,
                        nu,
                        gamma,
                    });
                }
            }
        }
        out
    }

    /// Group labels `(e, ν)` in lexicographic order; there are `H` of them.
    pub fn groups(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.height() as usize);
        for (e0, &(_, mu)) in self.pairs.iter().enumerate() {
            for nu in 1..=mu {
                out.push((e0 as u32 + 1, nu));
            }
        }
        out
    }

    /// Order of the subgroup of slot permutations that leave the monomial
    /// shape unchanged: `∏_e μ_e! (λ_e!)^{μ_e}`.
    pub fn stabilizer_order(&self) -> BigInt {
        let mut acc = BigInt::one();
        for &(lambda, mu) in &self.pairs {
            acc *= factorial(mu);
            let lf = factorial(lambda);
            for _ in 0..mu {
                acc *= &lf;
            }
        }
        acc
    }
}

impl fmt::Display for WeightSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .pairs
            .iter()
            .map(|&(l, m)| format!("({l},{m})"))
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// One derivative slot of a monomial family: group family `e`, group number
/// `ν` within the family, position `γ` within the group. All 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Slot {
    pub e: u32,
    pub nu: u32,
    pub gamma: u32,
}

/// Projection dropping the position within a group: `(e, ν, γ) ↦ (e, ν)`.
pub fn project_pi(slot: Slot) -> (u32, u32) {
    (slot.e, slot.nu)
}

/// Which weight constraint an enumeration obeys.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightMode {
    /// Prolongation coefficients: `W ≤ κ + 1`.
    Prolongation,
    /// Faa di Bruno terms: `W = κ` exactly.
    FaaDiBruno,
}

/// Enumerates every weight spec with `1 ≤ λ_1 < … < λ_d ≤ κ` and the weight
/// constraint of `mode`, in lexicographic `(d, λ-vector, μ-vector)` order.
pub fn weight_specs(kappa: u32, mode: WeightMode) -> Result<Vec<WeightSpec>> {
    if kappa == 0 {
        return Err(JetError::Domain("order κ must be at least 1".into()));
    }
    let max_weight = match mode {
        WeightMode::Prolongation => kappa + 1,
        WeightMode::FaaDiBruno => kappa,
    };
    let mut out = Vec::new();
    for d in 1..=(kappa + 1) as usize {
        let mut lambdas = Vec::with_capacity(d);
        let mut stack = Vec::with_capacity(d);
        enumerate_lambdas(kappa, max_weight, d, 1, &mut lambdas, &mut stack, &mut out);
    }
    if mode == WeightMode::FaaDiBruno {
        out.retain(|s| s.weight() == kappa);
    }
    Ok(out)
}

fn enumerate_lambdas(
    kappa: u32,
    max_weight: u32,
    d: usize,
    min_lambda: u32,
    lambdas: &mut Vec<u32>,
    mus: &mut Vec<u32>,
    out: &mut Vec<WeightSpec>,
) {
    if lambdas.len() == d {
        enumerate_mus(max_weight, d, lambdas, mus, out);
        return;
    }
    // each remaining family needs a strictly larger order, so prune early
    let remaining = (d - lambdas.len()) as u32;
    for lambda in min_lambda..=kappa {
        let used: u32 = lambdas.iter().sum();
        let min_extra = (lambda..lambda + remaining).sum::<u32>();
        if used + min_extra > max_weight {
            break;
        }
        lambdas.push(lambda);
        enumerate_lambdas(kappa, max_weight, d, lambda + 1, lambdas, mus, out);
        lambdas.pop();
    }
}

fn enumerate_mus(
    max_weight: u32,
    d: usize,
    lambdas: &[u32],
    mus: &mut Vec<u32>,
    out: &mut Vec<WeightSpec>,
) {
    if mus.len() == d {
        let pairs = lambdas.iter().copied().zip(mus.iter().copied()).collect();
        out.push(WeightSpec { pairs });
        return;
    }
    let e = mus.len();
    let used: u32 = lambdas
        .iter()
        .zip(mus.iter())
        .map(|(&l, &m)| l * m)
        .sum();
    let tail_min: u32 = lambdas[e + 1..].iter().sum();
    let mut mu = 1;
    loop {
        if used + mu * lambdas[e] + tail_min > max_weight {
            break;
        }
        mus.push(mu);
        enumerate_mus(max_weight, d, lambdas, mus, out);
        mus.pop();
        mu += 1;
    }
}

/// A permutation of `{1..p}` increasing on the first `q` positions and on the
/// last `p − q` positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shuffle {
    images: Vec<u32>,
    split: u32,
}

impl Shuffle {
    /// Image of position `pos` (1-based).
    pub fn image(&self, pos: u32) -> u32 {
        self.images[pos as usize - 1]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn split(&self) -> u32 {
        self.split
    }
}

/// Enumerates the ordered-split permutations of `{1..p}` with split point
/// `q`, in lexicographic order of the first block. `q ∈ {0, p}` yields the
/// identity only; cardinality is `C(p, q)`.
pub fn shuffles(p: u32, q: u32) -> Result<Vec<Shuffle>> {
    if p == 0 {
        return Err(JetError::Domain("shuffle size must be at least 1".into()));
    }
    if q > p {
        return Err(JetError::Domain(format!("split {q} exceeds size {p}")));
    }
    let mut out = Vec::new();
    let mut first = Vec::with_capacity(q as usize);
    choose_first_block(p, q, 1, &mut first, &mut out);
    Ok(out)
}

fn choose_first_block(p: u32, q: u32, from: u32, first: &mut Vec<u32>, out: &mut Vec<Shuffle>) {
    if first.len() == q as usize {
        let mut images = first.clone();
        images.extend((1..=p).filter(|v| !first.contains(v)));
        out.push(Shuffle { images, split: q });
        return;
    }
    for v in from..=p {
        let left = q as usize - first.len() - 1;
        if (p - v) as usize >= left {
            first.push(v);
            choose_first_block(p, q, v + 1, first, out);
            first.pop();
        }
    }
}

/// A coset representative: a bijection from the slot set onto `{1..W}`,
/// stored as the image list over slots in lexicographic order.
///
/// Canonical representatives have increasing images within each group and
/// groups of one family ordered by their smallest image, but arbitrary
/// translates are also representable (the closed formulas must not depend on
/// the choice).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TransversalElement {
    images: Vec<u32>,
}

impl TransversalElement {
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let w = images.len() as u32;
        let mut seen = vec![false; w as usize];
        for &v in &images {
            if v == 0 || v > w {
                return Err(JetError::Domain(format!("image {v} outside 1..={w}")));
            }
            if seen[v as usize - 1] {
                return Err(JetError::Domain(format!("duplicate image {v}")));
            }
            seen[v as usize - 1] = true;
        }
        Ok(TransversalElement { images })
    }

    /// Image of the slot at index `slot_idx` in lexicographic slot order.
    pub fn image(&self, slot_idx: usize) -> u32 {
        self.images[slot_idx]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Slot index carrying the image `value`.
    pub fn preimage(&self, value: u32) -> usize {
        self.images.iter().position(|&v| v == value).unwrap()
    }

    /// Two-line permutation array (slots above, images below) for debugging.
    pub fn two_line(&self) -> String {
        let w = self.images.len();
        let top: Vec<String> = (1..=w).map(|v| v.to_string()).collect();
        let bottom: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
        format!("({} | {})", top.join(" "), bottom.join(" "))
    }

    /// The canonical representative of this element's coset: images sorted
    /// within each group, same-family groups reordered by least image.
    pub fn canonical_in(&self, spec: &WeightSpec) -> TransversalElement {
        let mut images = Vec::with_capacity(self.images.len());
        let mut offset = 0usize;
        for &(lambda, mu) in spec.pairs() {
            let l = lambda as usize;
            let mut blocks: Vec<Vec<u32>> = Vec::with_capacity(mu as usize);
            for nu in 0..mu as usize {
                let mut block: Vec<u32> =
                    self.images[offset + nu * l..offset + (nu + 1) * l].to_vec();
                block.sort_unstable();
                blocks.push(block);
            }
            blocks.sort();
            for block in blocks {
                images.extend(block);
            }
            offset += mu as usize * l;
        }
        TransversalElement { images }
    }
}

/// Enumerates the canonical transversal of the stabilizer cosets for `spec`:
/// one representative per coset, `W! / ∏_e μ_e!(λ_e!)^{μ_e}` in total.
///
/// Representatives are generated directly as ordered set partitions of
/// `{1..W}` (blocks internally sorted, same-family blocks by least element)
/// rather than by filtering all `W!` permutations.
pub fn coset_transversal(spec: &WeightSpec) -> Vec<TransversalElement> {
    let w = spec.weight() as usize;
    let mut out = Vec::new();
    let mut used = vec![false; w + 1];
    let mut images: Vec<u32> = Vec::with_capacity(w);
    assign_family(spec, 0, 0, &mut used, &mut images, &mut out);
    out
}

fn assign_family(
    spec: &WeightSpec,
    family: usize,
    nu: u32,
    used: &mut Vec<bool>,
    images: &mut Vec<u32>,
    out: &mut Vec<TransversalElement>,
) {
    if family == spec.families() {
        out.push(TransversalElement {
            images: images.clone(),
        });
        return;
    }
    let (lambda, mu) = spec.pairs()[family];
    if nu == mu {
        assign_family(spec, family + 1, 0, used, images, out);
        return;
    }
    // lower bound keeping same-family blocks ordered by least element
    let min_floor = if nu == 0 {
        0
    } else {
        images[images.len() - lambda as usize]
    };
    let w = used.len() - 1;
    let candidates: Vec<u32> = (1..=w as u32)
        .filter(|&v| !used[v as usize] && v > min_floor)
        .collect();
    let mut block = Vec::with_capacity(lambda as usize);
    choose_block(
        spec, family, nu, lambda as usize, &candidates, 0, &mut block, used, images, out,
    );
}

#[allow(clippy::too_many_arguments)]
fn choose_block(
    spec: &WeightSpec,
    family: usize,
    nu: u32,
    need: usize,
    candidates: &[u32],
    from: usize,
    block: &mut Vec<u32>,
    used: &mut Vec<bool>,
    images: &mut Vec<u32>,
    out: &mut Vec<TransversalElement>,
) {
    if block.len() == need {
        for &v in block.iter() {
            used[v as usize] = true;
        }
        images.extend_from_slice(block);
        assign_family(spec, family, nu + 1, used, images, out);
        images.truncate(images.len() - need);
        for &v in block.iter() {
            used[v as usize] = false;
        }
        return;
    }
    // The block itself is ascending; the first chosen value is its minimum,
    // so blocks within a family are automatically ordered by least element.
    for idx in from..candidates.len() {
        if candidates.len() - idx < need - block.len() {
            break;
        }
        // a later group of the same family must still find a larger minimum
        block.push(candidates[idx]);
        choose_block(
            spec,
            family,
            nu,
            need,
            candidates,
            idx + 1,
            block,
            used,
            images,
            out,
        );
        block.pop();
    }
}

/// Enumerates the full stabilizer subgroup of `spec` as slot permutations
/// (image lists over slots in lexicographic order). Order grows like
/// `∏ μ_e!(λ_e!)^{μ_e}`; intended for desk-scale verification and for
/// drawing random coset translates.
pub fn stabilizer_elements(spec: &WeightSpec) -> Vec<Vec<usize>> {
    // Per family: permute the slots inside each group and permute whole
    // groups of the family among themselves, then take all combinations.
    let slots = spec.slots();
    let w = slots.len();
    let mut family_choices: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut offset = 0usize;
    for &(lambda, mu) in spec.pairs() {
        let l = lambda as usize;
        let groups: Vec<usize> = (0..mu as usize).map(|nu| offset + nu * l).collect();
        let group_perms = permutations(mu as usize);
        let inner_perms = permutations(l);
        let mut choices: Vec<Vec<usize>> = Vec::new();
        // assignment: for every slot of this family, its image slot index
        let mut inner_idx = vec![0usize; mu as usize];
        loop {
            for gp in &group_perms {
                let mut map = vec![0usize; mu as usize * l];
                for (nu, &start) in groups.iter().enumerate() {
                    let target_start = groups[gp[nu]];
                    let inner = &inner_perms[inner_idx[nu]];
                    for g in 0..l {
                        map[start + g - offset] = target_start + inner[g];
                    }
                }
                choices.push(map);
            }
            // advance the per-group inner permutation counter
            let mut carry = 0usize;
            loop {
                if carry == inner_idx.len() {
                    break;
                }
                inner_idx[carry] += 1;
                if inner_idx[carry] < inner_perms.len() {
                    break;
                }
                inner_idx[carry] = 0;
                carry += 1;
            }
            if carry == inner_idx.len() {
                break;
            }
        }
        family_choices.push(choices);
        offset += mu as usize * l;
    }
    // cartesian product across families
    let mut out: Vec<Vec<usize>> = vec![vec![0usize; w]];
    let mut offset = 0usize;
    for (f, &(lambda, mu)) in spec.pairs().iter().enumerate() {
        let span = lambda as usize * mu as usize;
        let mut next = Vec::with_capacity(out.len() * family_choices[f].len());
        for base in &out {
            for choice in &family_choices[f] {
                let mut perm = base.clone();
                for s in 0..span {
                    perm[offset + s] = choice[s];
                }
                next.push(perm);
            }
        }
        out = next;
        offset += span;
    }
    out
}

/// Applies a stabilizer element to a transversal representative, yielding an
/// equivalent (generally non-canonical) representative of the same coset.
pub fn translate(elem: &TransversalElement, stab: &[usize]) -> TransversalElement {
    // φ ∘ π: the slot at index s takes the image of slot π(s).
    let images = stab.iter().map(|&s| elem.images[s]).collect();
    TransversalElement { images }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..k).collect();
    heap_permute(&mut items, k, &mut out);
    out.sort();
    out
}

fn heap_permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permute(items, k - 1, out);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

/// Enumerates all set partitions of `{0..n-1}` as lists of blocks; blocks
/// are ascending and ordered by least element. Used by the independent
/// Faa di Bruno oracle and by partition counting checks.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    // restricted-growth strings
    let mut out = Vec::new();
    if n == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut rgs = vec![0usize; n];
    loop {
        let blocks_count = rgs.iter().copied().max().unwrap() + 1;
        let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); blocks_count];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i);
        }
        out.push(blocks);
        // next restricted-growth string
        let mut i = n - 1;
        loop {
            if i == 0 {
                return out;
            }
            let max_prefix = rgs[..i].iter().copied().max().unwrap();
            if rgs[i] <= max_prefix {
                rgs[i] += 1;
                for v in rgs[i + 1..].iter_mut() {
                    *v = 0;
                }
                break;
            }
            i -= 1;
        }
    }
}

pub(crate) fn factorial(k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for v in 2..=k {
        acc *= v;
    }
    acc
}

/// Binomial coefficient with exact arithmetic.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

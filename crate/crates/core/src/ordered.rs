//! Natural linear orders on finite distributive lattices, residuals `x − S`,
//! collapsed sets `N(f)` / `N(Φ)`, positive homomorphisms and congruences, and
//! the ordered functors `J′` / `O′`.
//!
//! A natural order is fixed by a linear extension `⊏⁰` of the
//! join-irreducible poset. Elements are then compared antilexicographically by
//! their δ-vectors, with the `⊏⁰`-largest irreducible as the most significant
//! position.

use std::collections::BTreeSet;

use crate::bits::{bit, ones, Mask};
use crate::duality::{j_morphism, o_morphism};
use crate::lattice::{
    enumerate_congruences, enumerate_surjective_homomorphisms, kernel, quotient, validate_homomorphism, Congruence,
    DistLattice, LatticeHom,
};
use crate::poset::{linear_extensions, LinearOrderedPoset, PosetEmbedding};
use crate::{Error, Flags, Result};

/// A set of lattice elements.
pub type ElementSet = BTreeSet<usize>;

/// The antilexicographic order induced on a lattice by an order `⊏⁰` of its join-irreducibles.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NaturalOrder {
    /// Base indices in `⊏⁰` order.
    irr_order: Vec<usize>,
    irr_rank: Vec<usize>,
    /// Elements in `⊏` order.
    sequence: Vec<usize>,
    rank: Vec<usize>,
}

impl NaturalOrder {
    pub fn irr_order(&self) -> &[usize] {
        &self.irr_order
    }

    pub fn irr_rank(&self, t: usize) -> usize {
        self.irr_rank[t]
    }

    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }

    #[inline]
    pub fn rank(&self, x: usize) -> usize {
        self.rank[x]
    }

    /// `x ⊏ y`
    #[inline]
    pub fn precedes(&self, x: usize, y: usize) -> bool {
        self.rank[x] < self.rank[y]
    }

    /// `x ⊑ y`
    #[inline]
    pub fn precedes_eq(&self, x: usize, y: usize) -> bool {
        self.rank[x] <= self.rank[y]
    }

    fn fits(&self, l: &DistLattice) -> bool {
        self.rank.len() == l.len() && self.irr_order.len() == l.base().len()
    }
}

/// Builds the natural order of `l` induced by `irr_order` (base indices, `⊏⁰`-ascending).
pub fn antilex_natural_order(l: &DistLattice, irr_order: &[usize]) -> Result<NaturalOrder> {
    let n = l.base().len();
    let lop = LinearOrderedPoset::from_sequence(l.base().clone(), irr_order)?;
    let irr_rank = lop.positions().to_vec();
    let key = |m: Mask| -> u64 { ones(m).fold(0u64, |acc, t| acc | bit(irr_rank[t])) };
    let mut sequence: Vec<usize> = (0..l.len()).collect();
    sequence.sort_by_key(|&x| key(l.element(x)));
    let mut rank = vec![0; l.len()];
    for (r, &x) in sequence.iter().enumerate() {
        rank[x] = r;
    }
    debug_assert_eq!(irr_rank.len(), n);
    for x in 0..l.len() {
        for y in 0..l.len() {
            assert!(!l.lt(x, y) || rank[x] < rank[y], "natural order fails to extend the lattice order at ({x}, {y})");
        }
    }
    Ok(NaturalOrder { irr_order: irr_order.to_vec(), irr_rank, sequence, rank })
}

/// Recovers `⊏⁰` from a candidate element order if the candidate is natural.
pub fn is_natural_order(l: &DistLattice, candidate: &[usize]) -> Option<Vec<usize>> {
    if candidate.len() != l.len() {
        return None;
    }
    let mut seen = vec![false; l.len()];
    for &x in candidate {
        if x >= l.len() || std::mem::replace(&mut seen[x], true) {
            return None;
        }
    }
    let irr = l.irreducibles();
    let irr_order: Vec<usize> = candidate.iter().filter_map(|&x| irr.iter().position(|&j| j == x)).collect();
    let order = antilex_natural_order(l, &irr_order).ok()?;
    (order.sequence() == candidate).then_some(irr_order)
}

/// One natural order per linear extension of the join-irreducibles.
pub fn enumerate_natural_orders(l: &DistLattice) -> Vec<NaturalOrder> {
    linear_extensions(l.base())
        .iter()
        .map(|lop| antilex_natural_order(l, &lop.sequence()).expect("linear extension"))
        .collect()
}

/// A lattice with a natural order: an object of the ordered lattice category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedLattice {
    lattice: DistLattice,
    order: NaturalOrder,
}

impl OrderedLattice {
    pub fn new(lattice: DistLattice, irr_order: &[usize]) -> Result<Self> {
        let order = antilex_natural_order(&lattice, irr_order)?;
        Ok(OrderedLattice { lattice, order })
    }

    pub fn from_parts(lattice: DistLattice, order: NaturalOrder) -> Result<Self> {
        if !order.fits(&lattice) {
            return Err(Error::OrderMismatch);
        }
        let rebuilt = antilex_natural_order(&lattice, order.irr_order()).map_err(|_| Error::OrderMismatch)?;
        if rebuilt != order {
            return Err(Error::OrderMismatch);
        }
        Ok(OrderedLattice { lattice, order })
    }

    /// `O′(P_≺)`: down-sets of `p` ordered by extending `≺` antilexicographically.
    pub fn from_linear_poset(p: &LinearOrderedPoset) -> Result<Self> {
        OrderedLattice::new(DistLattice::from_poset(p.poset())?, &p.sequence())
    }

    /// The chain lattice with `n` elements and its only natural order.
    pub fn chain(n: usize) -> Self {
        OrderedLattice::new(DistLattice::chain(n), &(0..n - 1).collect::<Vec<_>>()).expect("chain")
    }

    /// `J′(L_⊏)`: the join-irreducibles with the restricted order.
    pub fn j_prime(&self) -> LinearOrderedPoset {
        LinearOrderedPoset::from_sequence(self.lattice.base().clone(), self.order.irr_order()).expect("natural order")
    }

    pub fn lattice(&self) -> &DistLattice {
        &self.lattice
    }

    pub fn order(&self) -> &NaturalOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lattice.is_empty()
    }
}

/// `x − S`: the join of the join-irreducibles below `x` that are not in `S`.
pub fn residual_minus(l: &DistLattice, x: usize, s: &ElementSet) -> usize {
    let irr = l.irreducibles();
    let mask = ones(l.element(x)).filter(|&t| !s.contains(&irr[t])).fold(0, |acc, t| acc | l.base().down(t));
    l.index_of(mask).expect("union of principal down-sets")
}

/// `N(f)`: elements that share their image with a strictly smaller element.
pub fn collapsed_set_hom(l: &DistLattice, f: &LatticeHom) -> ElementSet {
    (0..l.len()).filter(|&x| (0..l.len()).any(|y| l.lt(y, x) && f.apply(y) == f.apply(x))).collect()
}

/// `N(Φ)`: elements congruent to a strictly smaller element.
pub fn collapsed_set_congruence(l: &DistLattice, phi: &Congruence) -> ElementSet {
    (0..l.len()).filter(|&x| (0..l.len()).any(|y| l.lt(y, x) && phi.related(x, y))).collect()
}

/// Outcome of a positivity check; a violation carries the offending pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum Positivity {
    Positive,
    Violated { x: usize, y: usize },
}

impl Positivity {
    pub fn is_positive(&self) -> bool {
        matches!(self, Positivity::Positive)
    }
}

/// Checks `x − N(f) ⊑ y − N(f) ⇒ f(x) ⪯ f(y)` over every pair, equal residuals included.
pub fn is_positive_homomorphism(f: &LatticeHom, src: &OrderedLattice, tgt: &OrderedLattice) -> Result<Positivity> {
    if f.source_len() != src.len() || f.target_len != tgt.len() {
        return Err(Error::OrderMismatch);
    }
    let n = collapsed_set_hom(&src.lattice, f);
    let res: Vec<usize> = (0..src.len()).map(|x| src.order.rank(residual_minus(&src.lattice, x, &n))).collect();
    for x in 0..src.len() {
        for y in 0..src.len() {
            if res[x] <= res[y] && !tgt.order.precedes_eq(f.apply(x), f.apply(y)) {
                return Ok(Positivity::Violated { x, y });
            }
        }
    }
    Ok(Positivity::Positive)
}

/// A positive surjective homomorphism together with its collapsed set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PositiveHom {
    pub hom: LatticeHom,
    pub collapsed: ElementSet,
}

impl PositiveHom {
    pub fn new(hom: LatticeHom, src: &OrderedLattice, tgt: &OrderedLattice) -> Result<Self> {
        if !hom.surjective {
            let missing = (0..tgt.len()).find(|&y| hom.preimage(y).next().is_none()).unwrap_or(0);
            return Err(Error::NotSurjective { missing });
        }
        match is_positive_homomorphism(&hom, src, tgt)? {
            Positivity::Positive => {
                let collapsed = collapsed_set_hom(&src.lattice, &hom);
                Ok(PositiveHom { hom, collapsed })
            }
            Positivity::Violated { x, y } => Err(Error::NotPositive {
                reason: format!("residuals of {x} and {y} are ordered but their images are not"),
            }),
        }
    }

    /// `next ∘ self`, re-checked for positivity.
    pub fn then(&self, next: &PositiveHom, src: &OrderedLattice, tgt: &OrderedLattice) -> Result<PositiveHom> {
        PositiveHom::new(self.hom.then(&next.hom), src, tgt)
    }
}

/// Outcome of a congruence positivity check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum CongruencePositivity {
    Positive,
    /// Blocks `a_block < b_block` with `a − N ⊏ b − N` but `b2 − N ⊏ a2 − N`.
    Mixed {
        a_block: usize,
        b_block: usize,
        a: usize,
        b: usize,
        a2: usize,
        b2: usize,
    },
}

impl CongruencePositivity {
    pub fn is_positive(&self) -> bool {
        matches!(self, CongruencePositivity::Positive)
    }
}

pub fn is_positive_congruence(phi: &Congruence, ol: &OrderedLattice) -> CongruencePositivity {
    let l = &ol.lattice;
    let n = collapsed_set_congruence(l, phi);
    let res: Vec<usize> = (0..l.len()).map(|x| ol.order.rank(residual_minus(l, x, &n))).collect();
    let blocks = phi.blocks();
    for (ai, a_blk) in blocks.iter().enumerate() {
        for (bi, b_blk) in blocks.iter().enumerate().skip(ai + 1) {
            let mut forward = None;
            let mut backward = None;
            for &a in a_blk {
                for &b in b_blk {
                    if res[a] <= res[b] {
                        forward.get_or_insert((a, b));
                    }
                    if res[a] >= res[b] {
                        backward.get_or_insert((a, b));
                    }
                }
            }
            let all_forward = a_blk.iter().all(|&a| b_blk.iter().all(|&b| res[a] <= res[b]));
            let all_backward = a_blk.iter().all(|&a| b_blk.iter().all(|&b| res[a] >= res[b]));
            if !all_forward && !all_backward {
                let (a, b) = forward.expect("mixed orientation has a forward pair");
                let (a2, b2) = a_blk
                    .iter()
                    .flat_map(|&a| b_blk.iter().map(move |&b| (a, b)))
                    .find(|&(a, b)| res[a] > res[b])
                    .or(backward)
                    .expect("mixed orientation has a backward pair");
                return CongruencePositivity::Mixed { a_block: ai, b_block: bi, a, b, a2, b2 };
            }
        }
    }
    CongruencePositivity::Positive
}

/// A congruence that is positive for a given natural order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PositiveCongruence {
    pub congruence: Congruence,
    pub collapsed: ElementSet,
}

impl PositiveCongruence {
    pub fn new(congruence: Congruence, ol: &OrderedLattice) -> Result<Self> {
        match is_positive_congruence(&congruence, ol) {
            CongruencePositivity::Positive => {
                let collapsed = collapsed_set_congruence(&ol.lattice, &congruence);
                Ok(PositiveCongruence { congruence, collapsed })
            }
            CongruencePositivity::Mixed { a_block, b_block, .. } => {
                Err(Error::NotPositive { reason: format!("blocks {a_block} and {b_block} are not uniformly ordered") })
            }
        }
    }
}

/// The quotient `L/Φ` with blocks ordered by their residuals, plus the natural surjection.
///
/// Panics if the block order is not natural; positivity of `Φ` rules that out.
pub fn quotient_natural_order(ol: &OrderedLattice, phi: &PositiveCongruence) -> Result<(OrderedLattice, LatticeHom)> {
    let l = &ol.lattice;
    let cong = &phi.congruence;
    let (q, nat) = quotient(l, cong, Flags::default())?;
    let res_rank = |x: usize| ol.order.rank(residual_minus(l, x, &phi.collapsed));
    let mut blocks: Vec<usize> = (0..cong.num_blocks()).collect();
    blocks.sort_by_key(|&b| res_rank(cong.class_min(b)));
    for w in blocks.windows(2) {
        let (a, b) = (&cong.blocks()[w[0]], &cong.blocks()[w[1]]);
        debug_assert!(a.iter().all(|&x| b.iter().all(|&y| res_rank(x) <= res_rank(y))));
    }
    let candidate: Vec<usize> = blocks.iter().map(|&b| nat.apply(cong.class_min(b))).collect();
    let irr_order = is_natural_order(&q, &candidate).expect("quotient order of a positive congruence is natural");
    Ok((OrderedLattice::new(q, &irr_order)?, nat))
}

/// `J′(f)`: the Birkhoff dual of a positive surjection, validated as an embedding
/// of linearly ordered posets `J′(K) ↪ J′(L)`.
pub fn j_prime_morphism(f: &PositiveHom, src: &OrderedLattice, tgt: &OrderedLattice) -> Result<PosetEmbedding> {
    let map = j_morphism(&f.hom, &src.lattice, &tgt.lattice);
    PosetEmbedding::validate_ordered(&tgt.j_prime(), &src.j_prime(), map)
        .map_err(|e| Error::NotPositive { reason: format!("J(f) is not an ordered embedding: {e}") })
}

/// `O′(φ)` for an ordered embedding `φ : J′(op) ↪ J′(oq)`, as a positive
/// surjection `oq ↠ op`.
///
/// Panics if the result is not positive; ordered embeddings always dualize to
/// positive surjections.
pub fn o_prime_morphism(phi: &PosetEmbedding, op: &OrderedLattice, oq: &OrderedLattice) -> Result<PositiveHom> {
    PosetEmbedding::validate_ordered(&op.j_prime(), &oq.j_prime(), phi.map.clone())?;
    let f = o_morphism(&phi.map, &op.lattice, &oq.lattice)?;
    assert!(f.surjective, "O(φ) of an embedding must be surjective");
    let verdict = is_positive_homomorphism(&f, oq, op)?;
    assert!(verdict.is_positive(), "O′(φ) failed positivity: {verdict:?}");
    Ok(PositiveHom { collapsed: collapsed_set_hom(&oq.lattice, &f), hom: f })
}

/// `Surj⁺(lo, ko)` in lexicographic order of the maps.
pub fn enumerate_positive_surjections(lo: &OrderedLattice, ko: &OrderedLattice) -> Vec<PositiveHom> {
    enumerate_surjective_homomorphisms(&lo.lattice, &ko.lattice)
        .into_iter()
        .filter_map(|f| PositiveHom::new(f, lo, ko).ok())
        .collect()
}

/// The isomorphism of naturally ordered lattices, if any. The only candidate
/// matches elements rank by rank.
pub fn ordered_isomorphism(a: &OrderedLattice, b: &OrderedLattice) -> Option<Vec<usize>> {
    if a.len() != b.len() {
        return None;
    }
    let map: Vec<usize> = (0..a.len()).map(|x| b.order.sequence()[a.order.rank(x)]).collect();
    validate_homomorphism(map.clone(), &a.lattice, &b.lattice, true).ok().map(|_| map)
}

/// `Con⁺(L_⊏)`.
pub fn enumerate_positive_congruences(ol: &OrderedLattice) -> Result<Vec<PositiveCongruence>> {
    Ok(enumerate_congruences(&ol.lattice)?.into_iter().filter_map(|c| PositiveCongruence::new(c, ol).ok()).collect())
}

/// `Con⁺(N, K)`: positive congruences of `no` whose ordered quotient is isomorphic to `ko`.
pub fn con_plus(no: &OrderedLattice, ko: &OrderedLattice) -> Result<Vec<PositiveCongruence>> {
    let mut out = Vec::new();
    for pc in enumerate_positive_congruences(no)? {
        if pc.congruence.num_blocks() != ko.len() || ko.len() < 2 {
            continue;
        }
        let (q, _) = quotient_natural_order(no, &pc)?;
        if ordered_isomorphism(&q, ko).is_some() {
            out.push(pc);
        }
    }
    Ok(out)
}

/// The kernel of a positive surjection as a positive congruence.
pub fn positive_kernel(f: &PositiveHom, src: &OrderedLattice) -> Result<PositiveCongruence> {
    PositiveCongruence::new(kernel(&f.hom, &src.lattice), src)
}

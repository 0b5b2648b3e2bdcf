//! The Birkhoff functors `J` (lattice → poset of join-irreducibles) and `O`
//! (poset → lattice of down-sets), on objects and on morphisms, and the
//! natural isomorphisms `η : L → O(J(L))` and `ε : Q → J(O(Q))`.
//!
//! Both functors are contravariant: a homomorphism `f : L → K` yields
//! `J(f) : J(K) → J(L)` and a poset map `φ : P → Q` yields `O(φ) : O(Q) → O(P)`.
//! Every output is re-validated before it is returned.

use crate::bits::bit;
use crate::lattice::{join_irreducibles, validate_homomorphism, DistLattice, LatticeHom};
use crate::poset::{Poset, PosetEmbedding};
use crate::{Error, Flags, Result};

pub fn j_object(l: &DistLattice) -> Poset {
    join_irreducibles(l)
}

pub fn o_object(q: &Poset) -> Result<DistLattice> {
    DistLattice::from_poset(q)
}

pub fn o_object_with(q: &Poset, flags: Flags) -> Result<DistLattice> {
    DistLattice::from_poset_with(q, flags)
}

/// `J(f)(y) = ⋀ f⁻¹(↑y)` as a map on base indices `J(K) → J(L)`.
///
/// For surjective `f` this agrees with `⋀ f⁻¹(y)`; the agreement is asserted.
pub fn j_morphism(f: &LatticeHom, l: &DistLattice, k: &DistLattice) -> Vec<usize> {
    let irr_l = l.irreducibles();
    k.irreducibles()
        .iter()
        .map(|&y| {
            let m = l.meet_all((0..l.len()).filter(|&x| k.leq(y, f.apply(x))));
            if f.surjective {
                assert_eq!(m, l.meet_all(f.preimage(y)), "preimage formulas disagree for a surjection");
            }
            irr_l.iter().position(|&j| j == m).expect("J(f) lands on join-irreducibles")
        })
        .collect()
}

/// `J(f)` for a surjective `f`, validated as a poset embedding `J(K) ↪ J(L)`.
pub fn j_morphism_embedding(f: &LatticeHom, l: &DistLattice, k: &DistLattice) -> Result<PosetEmbedding> {
    if !f.surjective {
        let missing = (0..k.len()).find(|&y| f.preimage(y).next().is_none()).unwrap_or(0);
        return Err(Error::NotSurjective { missing });
    }
    PosetEmbedding::validate(k.base(), l.base(), j_morphism(f, l, k))
}

/// Checks that `phi : p → q` preserves order.
pub fn check_poset_hom(phi: &[usize], p: &Poset, q: &Poset) -> Result<()> {
    if phi.len() != p.len() {
        return Err(Error::Invalid(format!("map has {} entries, source has {} elements", phi.len(), p.len())));
    }
    if let Some(&bad) = phi.iter().find(|&&y| y >= q.len()) {
        return Err(Error::IndexOutOfRange { index: bad, len: q.len() });
    }
    for (x, y) in p.relation_pairs() {
        if !q.leq(phi[x], phi[y]) {
            return Err(Error::NotMonotone { x, y });
        }
    }
    Ok(())
}

/// `O(φ)(U) = φ⁻¹(U)` as a homomorphism `op ← oq`, where `op = O(p)` and `oq = O(q)`.
pub fn o_morphism(phi: &[usize], op: &DistLattice, oq: &DistLattice) -> Result<LatticeHom> {
    check_poset_hom(phi, op.base(), oq.base())?;
    let map = oq
        .elements()
        .iter()
        .map(|&u| {
            let pre = phi.iter().enumerate().filter(|&(_, &y)| u >> y & 1 == 1).fold(0, |acc, (x, _)| acc | bit(x));
            op.index_of(pre).expect("preimage of a down-set is a down-set")
        })
        .collect();
    validate_homomorphism(map, oq, op, false)
}

/// `η_L : x ↦ ↓_{J(L)} x` as an element table `L → O(J(L))`.
///
/// When `l` was ingested from operation tables, the table is indexed by the
/// raw elements and computed from the raw tables alone.
pub fn eta_iso(l: &DistLattice) -> Result<Vec<usize>> {
    let ojl = DistLattice::from_poset_with(&j_object(l), Flags::PERMISSIVE)?;
    match l.origin() {
        Some(origin) => {
            let raw = &origin.tables;
            let irr = raw.join_irreducibles();
            let eta: Vec<usize> = (0..raw.len())
                .map(|x| {
                    let m = irr.iter().enumerate().filter(|&(_, &j)| raw.leq(j, x)).fold(0, |acc, (t, _)| acc | bit(t));
                    ojl.index_of(m).ok_or_else(|| Error::Invalid(format!("↓{x} is not a down-set")))
                })
                .collect::<Result<_>>()?;
            check_bijection(&eta, ojl.len())?;
            for x in 0..raw.len() {
                for y in 0..raw.len() {
                    if eta[raw.join[x][y]] != ojl.join(eta[x], eta[y])
                        || eta[raw.meet[x][y]] != ojl.meet(eta[x], eta[y])
                    {
                        return Err(Error::Invalid(format!("η does not preserve operations at ({x}, {y})")));
                    }
                }
            }
            Ok(eta)
        }
        None => {
            let irr = l.irreducibles();
            let eta: Vec<usize> = (0..l.len())
                .map(|x| {
                    let m = irr.iter().enumerate().filter(|&(_, &j)| l.leq(j, x)).fold(0, |acc, (t, _)| acc | bit(t));
                    ojl.index_of(m).expect("irreducibles below x form a down-set")
                })
                .collect();
            check_bijection(&eta, ojl.len())?;
            validate_homomorphism(eta.clone(), l, &ojl, true)?;
            Ok(eta)
        }
    }
}

/// `ε_Q : x ↦ ↓x` as an element table `Q → O(Q)`, verified to be an order
/// isomorphism onto the join-irreducibles of `O(Q)`.
pub fn epsilon_iso(q: &Poset) -> Result<Vec<usize>> {
    let oq = DistLattice::from_poset_with(q, Flags::PERMISSIVE)?;
    let eps: Vec<usize> = (0..q.len()).map(|x| oq.index_of(q.down(x)).expect("principal down-set")).collect();
    let mut image = eps.clone();
    image.sort_unstable();
    let irreducible: Vec<usize> = (0..oq.len()).filter(|&u| oq.lower_covers(u).len() == 1).collect();
    if image != irreducible {
        return Err(Error::Invalid("ε is not onto the join-irreducibles".into()));
    }
    for x in 0..q.len() {
        for y in 0..q.len() {
            if q.leq(x, y) != oq.leq(eps[x], eps[y]) {
                return Err(Error::NotEmbedding { x, y });
            }
        }
    }
    Ok(eps)
}

fn check_bijection(map: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    for &y in map {
        if y >= n || std::mem::replace(&mut seen[y], true) {
            return Err(Error::Invalid("map is not a bijection".into()));
        }
    }
    if map.len() != n {
        return Err(Error::Invalid("map is not a bijection".into()));
    }
    Ok(())
}

/// The pair of natural isomorphisms for a lattice and a poset.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct DualityWitness {
    pub eta: Vec<usize>,
    pub epsilon: Vec<usize>,
}

impl DualityWitness {
    pub fn for_lattice(l: &DistLattice) -> Result<Self> {
        Ok(DualityWitness { eta: eta_iso(l)?, epsilon: epsilon_iso(&j_object(l))? })
    }

    pub fn for_poset(q: &Poset) -> Result<Self> {
        let oq = o_object_with(q, Flags::PERMISSIVE)?;
        Ok(DualityWitness { eta: eta_iso(&oq)?, epsilon: epsilon_iso(q)? })
    }
}

//! Finite distributive lattices in down-set encoding, {0,1}-homomorphisms,
//! congruences and quotients.

use crate::bits::{bit, ones, Mask};
use crate::poset::{down_sets_limited, Poset};
use crate::{Error, Flags, LatticeOp, Result};

/// Largest lattice the engine will materialize.
pub const MAX_LATTICE_SIZE: usize = 1 << 12;

/// Largest raw operation table accepted by [`from_tables`].
pub const MAX_RAW_SIZE: usize = 256;

/// Default bound on `|L|` for [`enumerate_congruences`].
pub const DEFAULT_CONGRUENCE_BOUND: usize = 64;

/// User-supplied operation tables on `0..size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawLattice {
    pub join: Vec<Vec<usize>>,
    pub meet: Vec<Vec<usize>>,
    pub bottom: usize,
    pub top: usize,
}

impl RawLattice {
    pub fn len(&self) -> usize {
        self.join.len()
    }

    pub fn is_empty(&self) -> bool {
        self.join.is_empty()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.join[x][y] == y
    }

    /// Elements with exactly one lower cover, ascending.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        let n = self.len();
        (0..n)
            .filter(|&x| {
                let covers = (0..n)
                    .filter(|&y| y != x && self.leq(y, x))
                    .filter(|&y| !(0..n).any(|z| z != x && z != y && self.leq(y, z) && self.leq(z, x)))
                    .count();
                covers == 1
            })
            .collect()
    }
}

/// Raw tables a lattice was ingested from, with the bijection into the canonical encoding.
#[derive(Clone, Debug)]
pub struct RawOrigin {
    pub tables: RawLattice,
    /// `encoding[x]` is the canonical element index of raw element `x`.
    pub encoding: Vec<usize>,
}

/// A finite distributive lattice stored as the down-sets of its join-irreducible poset.
///
/// Element `i` is the down-set `elements[i]`; elements are sorted by mask
/// value, so index 0 is the bottom `∅`, the last index is the top, and every
/// element comes after all of its lower bounds.
#[derive(Clone, Debug)]
pub struct DistLattice {
    base: Poset,
    elements: Vec<Mask>,
    /// `irreducibles[t]` is the element index of `↓t`.
    irreducibles: Vec<usize>,
    origin: Option<Box<RawOrigin>>,
}

impl PartialEq for DistLattice {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && self.elements == other.elements
    }
}

impl Eq for DistLattice {}

impl DistLattice {
    /// The lattice of down-sets of `base`.
    pub fn from_poset(base: &Poset) -> Result<DistLattice> {
        DistLattice::from_poset_with(base, Flags::default())
    }

    pub fn from_poset_with(base: &Poset, flags: Flags) -> Result<DistLattice> {
        if base.is_empty() && !flags.allow_trivial_lattice {
            return Err(Error::TrivialLattice);
        }
        let elements = down_sets_limited(base, MAX_LATTICE_SIZE).ok_or_else(|| Error::BoundExceeded {
            what: "lattice size".into(),
            size: MAX_LATTICE_SIZE + 1,
            bound: MAX_LATTICE_SIZE,
        })?;
        let irreducibles =
            (0..base.len()).map(|t| elements.binary_search(&base.down(t)).expect("principal down-set")).collect();
        Ok(DistLattice { base: base.clone(), elements, irreducibles, origin: None })
    }

    /// The chain lattice with `n` elements (`n ≥ 2`).
    pub fn chain(n: usize) -> DistLattice {
        DistLattice::from_poset(&Poset::chain(n - 1)).expect("chain lattice")
    }

    /// The Boolean lattice with `2^atoms` elements.
    pub fn boolean(atoms: usize) -> DistLattice {
        DistLattice::from_poset(&Poset::antichain(atoms)).expect("boolean lattice")
    }

    pub fn base(&self) -> &Poset {
        &self.base
    }

    pub fn origin(&self) -> Option<&RawOrigin> {
        self.origin.as_deref()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Mask] {
        &self.elements
    }

    #[inline]
    pub fn element(&self, x: usize) -> Mask {
        self.elements[x]
    }

    #[inline]
    pub fn index_of(&self, mask: Mask) -> Option<usize> {
        self.elements.binary_search(&mask).ok()
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.len() - 1
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.index_of(self.elements[x] | self.elements[y]).expect("down-sets are closed under union")
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.index_of(self.elements[x] & self.elements[y]).expect("down-sets are closed under intersection")
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.elements[x] & !self.elements[y] == 0
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    /// Element indices of the join-irreducibles, indexed by base element.
    pub fn irreducibles(&self) -> &[usize] {
        &self.irreducibles
    }

    /// Lower covers of `x`: remove one maximal point from its down-set.
    pub fn lower_covers(&self, x: usize) -> Vec<usize> {
        let u = self.elements[x];
        ones(self.base.maximal_in(u)).map(|m| self.index_of(u & !bit(m)).expect("down-set")).collect()
    }

    pub fn is_join_irreducible(&self, x: usize) -> bool {
        self.base.maximal_in(self.elements[x]).count_ones() == 1
    }

    /// Cover pairs `(lower, upper)` of the lattice order, sorted.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<_> =
            (0..self.len()).flat_map(|y| self.lower_covers(y).into_iter().map(move |x| (x, y))).collect();
        out.sort_unstable();
        out
    }

    /// Join of a set of elements (`0` for the empty set).
    pub fn join_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        let m = xs.into_iter().fold(0, |acc, x| acc | self.elements[x]);
        self.index_of(m).expect("union of down-sets")
    }

    /// Meet of a non-empty set of elements (`1` for the empty set).
    pub fn meet_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        let m = xs.into_iter().fold(self.base.ground(), |acc, x| acc & self.elements[x]);
        self.index_of(m).expect("intersection of down-sets")
    }

    /// Operation tables of this lattice.
    pub fn to_raw(&self) -> RawLattice {
        let n = self.len();
        RawLattice {
            join: (0..n).map(|x| (0..n).map(|y| self.join(x, y)).collect()).collect(),
            meet: (0..n).map(|x| (0..n).map(|y| self.meet(x, y)).collect()).collect(),
            bottom: self.bottom(),
            top: self.top(),
        }
    }
}

/// The poset of join-irreducible elements, indexed like [`DistLattice::irreducibles`].
pub fn join_irreducibles(l: &DistLattice) -> Poset {
    let irr = l.irreducibles();
    let mut by_covers: Vec<usize> = (0..l.len()).filter(|&x| l.lower_covers(x).len() == 1).collect();
    let mut principal = irr.to_vec();
    by_covers.sort_unstable();
    principal.sort_unstable();
    assert_eq!(by_covers, principal, "join-irreducibles must be the principal down-sets");
    let down = irr
        .iter()
        .map(|&y| irr.iter().enumerate().filter(|&(_, &x)| l.leq(x, y)).fold(0, |acc, (i, _)| acc | bit(i)))
        .collect();
    Poset::from_down_rows(down)
}

/// The δ-vector of `x`: `δ[t]` is set iff the t-th join-irreducible lies below `x`.
pub fn canonical_representation(l: &DistLattice, x: usize) -> Vec<bool> {
    l.irreducibles().iter().map(|&j| l.leq(j, x)).collect()
}

/// Validates operation tables and re-encodes them canonically.
///
/// Returns the canonical lattice together with the bijection from raw element
/// indices to canonical ones.
pub fn from_tables(tables: RawLattice, flags: Flags) -> Result<(DistLattice, Vec<usize>)> {
    let n = tables.len();
    if n == 0 {
        return Err(Error::Invalid("empty operation tables".into()));
    }
    if n > MAX_RAW_SIZE {
        return Err(Error::BoundExceeded { what: "raw lattice size".into(), size: n, bound: MAX_RAW_SIZE });
    }
    let (j, m) = (&tables.join, &tables.meet);
    if m.len() != n || j.iter().chain(m.iter()).any(|row| row.len() != n) {
        return Err(Error::Invalid(format!("operation tables must be {n}×{n}")));
    }
    for (x, row) in j.iter().chain(m.iter()).enumerate() {
        if let Some(&v) = row.iter().find(|&&v| v >= n) {
            return Err(Error::NotALattice { law: "closure", x: x % n, y: v, z: v });
        }
    }
    check_lattice_laws(&tables)?;
    let (bot, top) = (tables.bottom, tables.top);
    if bot >= n || top >= n {
        return Err(Error::NotBounded { reason: format!("bottom {bot} / top {top} out of range") });
    }
    for x in 0..n {
        if j[bot][x] != x || m[bot][x] != bot {
            return Err(Error::NotBounded { reason: format!("{bot} is not below {x}") });
        }
        if m[top][x] != x || j[top][x] != top {
            return Err(Error::NotBounded { reason: format!("{top} is not above {x}") });
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if m[x][j[y][z]] != j[m[x][y]][m[x][z]] {
                    return Err(Error::NotDistributive { x, y, z });
                }
            }
        }
    }
    if n == 1 && !flags.allow_trivial_lattice {
        return Err(Error::TrivialLattice);
    }

    let irr = tables.join_irreducibles();
    let base = {
        let down = irr
            .iter()
            .map(|&y| irr.iter().enumerate().filter(|&(_, &x)| tables.leq(x, y)).fold(0, |acc, (i, _)| acc | bit(i)))
            .collect();
        Poset::from_down_rows(down)
    };
    let mut lattice = DistLattice::from_poset_with(&base, Flags { allow_trivial_lattice: true, ..flags })?;
    let encoding: Vec<usize> = (0..n)
        .map(|x| {
            let mask = irr.iter().enumerate().filter(|&(_, &t)| tables.leq(t, x)).fold(0, |acc, (i, _)| acc | bit(i));
            lattice.index_of(mask).expect("irreducibles below an element form a down-set")
        })
        .collect();
    let mut seen = vec![false; lattice.len()];
    for &e in &encoding {
        seen[e] = true;
    }
    if encoding.len() != lattice.len() || seen.iter().any(|s| !s) {
        return Err(Error::Invalid("re-encoding is not a bijection".into()));
    }
    for x in 0..n {
        for y in 0..n {
            if encoding[j[x][y]] != lattice.join(encoding[x], encoding[y])
                || encoding[m[x][y]] != lattice.meet(encoding[x], encoding[y])
            {
                return Err(Error::Invalid(format!("re-encoding does not preserve operations at ({x}, {y})")));
            }
        }
    }
    lattice.origin = Some(Box::new(RawOrigin { tables, encoding: encoding.clone() }));
    Ok((lattice, encoding))
}

fn check_lattice_laws(t: &RawLattice) -> Result<()> {
    let n = t.len();
    let (j, m) = (&t.join, &t.meet);
    for x in 0..n {
        if j[x][x] != x {
            return Err(Error::NotALattice { law: "idempotence (join)", x, y: x, z: x });
        }
        if m[x][x] != x {
            return Err(Error::NotALattice { law: "idempotence (meet)", x, y: x, z: x });
        }
        for y in 0..n {
            if j[x][y] != j[y][x] {
                return Err(Error::NotALattice { law: "commutativity (join)", x, y, z: y });
            }
            if m[x][y] != m[y][x] {
                return Err(Error::NotALattice { law: "commutativity (meet)", x, y, z: y });
            }
            if j[x][m[x][y]] != x || m[x][j[x][y]] != x {
                return Err(Error::NotALattice { law: "absorption", x, y, z: y });
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if j[j[x][y]][z] != j[x][j[y][z]] {
                    return Err(Error::NotALattice { law: "associativity (join)", x, y, z });
                }
                if m[m[x][y]][z] != m[x][m[y][z]] {
                    return Err(Error::NotALattice { law: "associativity (meet)", x, y, z });
                }
            }
        }
    }
    Ok(())
}

/// A checked {0,1}-lattice homomorphism given by its function table.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeHom {
    pub map: Vec<usize>,
    pub target_len: usize,
    pub surjective: bool,
}

impl LatticeHom {
    pub fn validate(
        map: Vec<usize>,
        source: &DistLattice,
        target: &DistLattice,
        require_surjective: bool,
    ) -> Result<Self> {
        validate_homomorphism(map, source, target, require_surjective)
    }

    pub fn identity(l: &DistLattice) -> Self {
        LatticeHom { map: (0..l.len()).collect(), target_len: l.len(), surjective: true }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn source_len(&self) -> usize {
        self.map.len()
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target_len];
        self.map.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &LatticeHom) -> LatticeHom {
        let map: Vec<usize> = self.map.iter().map(|&y| next.map[y]).collect();
        let surjective = self.surjective && next.surjective;
        LatticeHom { map, target_len: next.target_len, surjective }
    }

    /// The fiber `f⁻¹(y)`.
    pub fn preimage(&self, y: usize) -> impl Iterator<Item = usize> + '_ {
        self.map.iter().enumerate().filter(move |&(_, &v)| v == y).map(|(x, _)| x)
    }
}

pub fn validate_homomorphism(
    map: Vec<usize>,
    source: &DistLattice,
    target: &DistLattice,
    require_surjective: bool,
) -> Result<LatticeHom> {
    if map.len() != source.len() {
        return Err(Error::Invalid(format!("map has {} entries, source has {} elements", map.len(), source.len())));
    }
    if let Some(&bad) = map.iter().find(|&&y| y >= target.len()) {
        return Err(Error::IndexOutOfRange { index: bad, len: target.len() });
    }
    let (b, t) = (source.bottom(), source.top());
    if map[b] != target.bottom() {
        return Err(Error::NotHomomorphism { op: LatticeOp::Bottom, x: b, y: b });
    }
    if map[t] != target.top() {
        return Err(Error::NotHomomorphism { op: LatticeOp::Top, x: t, y: t });
    }
    for x in 0..map.len() {
        for y in x + 1..map.len() {
            if map[source.join(x, y)] != target.join(map[x], map[y]) {
                return Err(Error::NotHomomorphism { op: LatticeOp::Join, x, y });
            }
            if map[source.meet(x, y)] != target.meet(map[x], map[y]) {
                return Err(Error::NotHomomorphism { op: LatticeOp::Meet, x, y });
            }
        }
    }
    let mut hit = vec![false; target.len()];
    for &y in &map {
        hit[y] = true;
    }
    let missing = hit.iter().position(|h| !h);
    if require_surjective {
        if let Some(missing) = missing {
            return Err(Error::NotSurjective { missing });
        }
    }
    Ok(LatticeHom { map, target_len: target.len(), surjective: missing.is_none() })
}

/// Every surjective {0,1}-homomorphism `l ↠ k`, in lexicographic order of the maps.
///
/// Elements are assigned in index order. Only join-irreducibles carry a free
/// choice; every other non-zero element is the join of two lower covers and
/// its image is forced. Partial maps are pruned on meets, and each complete
/// candidate is re-validated.
pub fn enumerate_surjective_homomorphisms(l: &DistLattice, k: &DistLattice) -> Vec<LatticeHom> {
    let mut out = Vec::new();
    if k.len() > l.len() {
        return out;
    }
    let covers: Vec<Vec<usize>> = (0..l.len()).map(|x| l.lower_covers(x)).collect();
    let mut map = vec![usize::MAX; l.len()];

    fn consistent(l: &DistLattice, k: &DistLattice, map: &[usize], x: usize) -> bool {
        let fx = map[x];
        if x == l.top() && fx != k.top() {
            return false;
        }
        (0..x).all(|y| map[l.meet(x, y)] == k.meet(fx, map[y]))
    }

    fn go(
        l: &DistLattice,
        k: &DistLattice,
        covers: &[Vec<usize>],
        x: usize,
        map: &mut Vec<usize>,
        out: &mut Vec<LatticeHom>,
    ) {
        if x == l.len() {
            if let Ok(h) = validate_homomorphism(map.clone(), l, k, true) {
                out.push(h);
            }
            return;
        }
        let candidates: Vec<usize> = match covers[x].as_slice() {
            [] => vec![k.bottom()],
            [c] => (0..k.len()).filter(|&y| k.leq(map[*c], y)).collect(),
            [a, b, ..] => vec![k.join(map[*a], map[*b])],
        };
        for y in candidates {
            map[x] = y;
            if consistent(l, k, map, x) {
                go(l, k, covers, x + 1, map, out);
            }
        }
        map[x] = usize::MAX;
    }

    go(l, k, &covers, 0, &mut map, &mut out);
    out
}

/// A congruence given by its blocks.
///
/// Blocks are sorted internally and ordered by their least element
/// (`class_min`), which makes the representation canonical.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Congruence {
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
    class_min: Vec<usize>,
}

impl Congruence {
    pub fn from_blocks(l: &DistLattice, blocks: Vec<Vec<usize>>) -> Result<Congruence> {
        let n = l.len();
        let mut label = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::NotACongruence { reason: format!("block {b} is empty") });
            }
            for &x in block {
                if x >= n {
                    return Err(Error::IndexOutOfRange { index: x, len: n });
                }
                if label[x] != usize::MAX {
                    return Err(Error::NotACongruence { reason: format!("element {x} appears in two blocks") });
                }
                label[x] = b;
            }
        }
        if let Some(x) = label.iter().position(|&b| b == usize::MAX) {
            return Err(Error::NotACongruence { reason: format!("element {x} is in no block") });
        }
        Congruence::from_labels(l, &label)
    }

    /// Builds the partition whose blocks are the classes of `label`.
    pub fn from_labels(l: &DistLattice, label: &[usize]) -> Result<Congruence> {
        let n = l.len();
        if label.len() != n {
            return Err(Error::Invalid(format!("{} labels for {n} elements", label.len())));
        }
        for a in 0..n {
            for b in a + 1..n {
                if label[a] != label[b] {
                    continue;
                }
                for c in 0..n {
                    if label[l.join(a, c)] != label[l.join(b, c)] {
                        return Err(Error::NotACongruence {
                            reason: format!("({a}, {b}) related but joins with {c} are not"),
                        });
                    }
                    if label[l.meet(a, c)] != label[l.meet(b, c)] {
                        return Err(Error::NotACongruence {
                            reason: format!("({a}, {b}) related but meets with {c} are not"),
                        });
                    }
                }
            }
        }
        Ok(Congruence::from_compatible_labels(l, label))
    }

    /// Canonicalizes a labelling already known to be compatible.
    fn from_compatible_labels(l: &DistLattice, label: &[usize]) -> Congruence {
        let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for (x, &b) in label.iter().enumerate() {
            groups.entry(b).or_default().push(x);
        }
        let mut blocks: Vec<(usize, Vec<usize>)> = groups
            .into_values()
            .map(|block| {
                let min = l.meet_all(block.iter().copied());
                assert!(block.contains(&min), "congruence class without a least element");
                (min, block)
            })
            .collect();
        blocks.sort();
        let mut block_of = vec![0; label.len()];
        for (b, (_, block)) in blocks.iter().enumerate() {
            for &x in block {
                block_of[x] = b;
            }
        }
        let (class_min, blocks) = blocks.into_iter().unzip();
        Congruence { blocks, block_of, class_min }
    }

    pub fn identity(l: &DistLattice) -> Congruence {
        Congruence::from_compatible_labels(l, &(0..l.len()).collect::<Vec<_>>())
    }

    pub fn full(l: &DistLattice) -> Congruence {
        Congruence::from_compatible_labels(l, &vec![0; l.len()])
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    pub fn class_min(&self, block: usize) -> usize {
        self.class_min[block]
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.block_of[x] == self.block_of[y]
    }

    /// Whether `other ⊆ self` as relations.
    pub fn contains(&self, other: &Congruence) -> bool {
        other.blocks.iter().all(|b| b.iter().all(|&x| self.block_of[x] == self.block_of[b[0]]))
    }

    /// Every block is closed under join and meet and order-convex.
    pub fn blocks_are_intervals(&self, l: &DistLattice) -> bool {
        self.blocks.iter().all(|block| {
            let lo = l.meet_all(block.iter().copied());
            let hi = l.join_all(block.iter().copied());
            let interval: Vec<usize> = (0..l.len()).filter(|&z| l.leq(lo, z) && l.leq(z, hi)).collect();
            interval == *block
        })
    }
}

/// The kernel of `f`: its fibers.
pub fn kernel(f: &LatticeHom, l: &DistLattice) -> Congruence {
    debug_assert_eq!(f.source_len(), l.len());
    let c = Congruence::from_compatible_labels(l, &f.map);
    debug_assert!(Congruence::from_labels(l, &f.map).is_ok());
    c
}

/// All congruences of `l`, sorted.
pub fn enumerate_congruences(l: &DistLattice) -> Result<Vec<Congruence>> {
    enumerate_congruences_bounded(l, DEFAULT_CONGRUENCE_BOUND)
}

/// All congruences of `l` by search over partitions.
///
/// Elements are placed into blocks in index order (restricted growth
/// labelling). After each placement every substitution instance
/// `(a ≡ b) ⇒ (a∨c ≡ b∨c, a∧c ≡ b∧c)` whose four elements are already placed
/// and which involves the new element is checked; violating prefixes are cut.
pub fn enumerate_congruences_bounded(l: &DistLattice, bound: usize) -> Result<Vec<Congruence>> {
    let n = l.len();
    if n > bound {
        return Err(Error::BoundExceeded { what: "congruence enumeration lattice size".into(), size: n, bound });
    }
    let join: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| l.join(x, y)).collect()).collect();
    let meet: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| l.meet(x, y)).collect()).collect();
    let mut label = vec![usize::MAX; n];
    let mut out = Vec::new();

    struct Ctx<'a> {
        join: &'a [Vec<usize>],
        meet: &'a [Vec<usize>],
    }

    impl Ctx<'_> {
        /// Checks every instance that became decidable when `x` was placed.
        fn ok(&self, label: &[usize], x: usize) -> bool {
            let placed = x + 1;
            for a in 0..placed {
                for b in a + 1..placed {
                    if label[a] != label[b] {
                        continue;
                    }
                    for c in 0..placed {
                        for table in [self.join, self.meet] {
                            let (p, q) = (table[a][c], table[b][c]);
                            if p >= placed || q >= placed {
                                continue;
                            }
                            if (a == x || b == x || c == x || p == x || q == x) && label[p] != label[q] {
                                return false;
                            }
                        }
                    }
                }
            }
            true
        }
    }

    fn go(ctx: &Ctx, l: &DistLattice, x: usize, used: usize, label: &mut Vec<usize>, out: &mut Vec<Congruence>) {
        if x == label.len() {
            out.push(Congruence::from_compatible_labels(l, label));
            return;
        }
        for b in 0..=used {
            label[x] = b;
            if ctx.ok(label, x) {
                go(ctx, l, x + 1, used.max(b + 1), label, out);
            }
        }
        label[x] = usize::MAX;
    }

    let ctx = Ctx { join: &join, meet: &meet };
    go(&ctx, l, 0, 0, &mut label, &mut out);
    out.sort();
    Ok(out)
}

/// The quotient `l / phi` in canonical encoding together with the natural
/// surjection `x ↦ [x]`.
///
/// Panics if a join-irreducible class has a least element that is not
/// join-irreducible in `l`; that cannot happen for a finite distributive
/// lattice.
pub fn quotient(l: &DistLattice, phi: &Congruence, flags: Flags) -> Result<(DistLattice, LatticeHom)> {
    let nb = phi.num_blocks();
    let mins = &phi.class_min;
    let tables = RawLattice {
        join: (0..nb).map(|a| (0..nb).map(|b| phi.block_of(l.join(mins[a], mins[b]))).collect()).collect(),
        meet: (0..nb).map(|a| (0..nb).map(|b| phi.block_of(l.meet(mins[a], mins[b]))).collect()).collect(),
        bottom: phi.block_of(l.bottom()),
        top: phi.block_of(l.top()),
    };
    let (q, enc) = from_tables(tables, flags)?;
    let map: Vec<usize> = (0..l.len()).map(|x| enc[phi.block_of(x)]).collect();
    let nat = validate_homomorphism(map, l, &q, true)?;
    for b in 0..nb {
        if q.is_join_irreducible(enc[b]) {
            assert!(
                l.is_join_irreducible(mins[b]),
                "least element {} of a join-irreducible class is not join-irreducible",
                mins[b]
            );
        }
    }
    Ok((q, nat))
}

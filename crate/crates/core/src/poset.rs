//! Finite posets, linearly ordered posets, embeddings and enumeration up to
//! isomorphism.

use std::collections::{HashMap, VecDeque};

use crate::bits::{bit, full, has, ones, Mask};
use crate::{Error, Flags, Result};

/// Largest ground set representable with `u64` masks.
pub const MAX_POSET_SIZE: usize = 64;

/// Default bound for [`enumerate_posets_up_to_iso`].
pub const DEFAULT_ENUMERATION_BOUND: usize = 6;

/// A finite partial order on `0..n`.
///
/// `down[x]` holds every `y ≤ x` (including `x`), `up[x]` every `y ≥ x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poset {
    down: Vec<Mask>,
    up: Vec<Mask>,
}

impl Poset {
    /// Builds the reflexive-transitive closure of `pairs` (read as `i ≤ j`).
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Poset> {
        Poset::from_pairs_with(n, pairs, Flags::default())
    }

    pub fn from_pairs_with(n: usize, pairs: &[(usize, usize)], flags: Flags) -> Result<Poset> {
        if n == 0 && !flags.allow_empty_poset {
            return Err(Error::EmptyPoset);
        }
        if n > MAX_POSET_SIZE {
            return Err(Error::BoundExceeded { what: "poset size".into(), size: n, bound: MAX_POSET_SIZE });
        }
        let mut down: Vec<Mask> = (0..n).map(bit).collect();
        for &(i, j) in pairs {
            for idx in [i, j] {
                if idx >= n {
                    return Err(Error::IndexOutOfRange { index: idx, len: n });
                }
            }
            down[j] |= bit(i);
        }
        // Warshall on bit rows.
        for k in 0..n {
            for j in 0..n {
                if has(down[j], k) {
                    down[j] |= down[k];
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if has(down[j], i) && has(down[i], j) {
                    return Err(Error::AntisymmetryViolation { cycle: find_cycle(n, pairs, i, j) });
                }
            }
        }
        Ok(Poset::from_down_rows(down))
    }

    /// Trusts `down` to be a closed, antisymmetric relation.
    pub(crate) fn from_down_rows(down: Vec<Mask>) -> Poset {
        let n = down.len();
        let mut up = vec![0; n];
        for (y, &d) in down.iter().enumerate() {
            for x in ones(d) {
                up[x] |= bit(y);
            }
        }
        Poset { down, up }
    }

    pub fn chain(n: usize) -> Poset {
        Poset::from_down_rows((0..n).map(|i| full(i + 1)).collect())
    }

    pub fn antichain(n: usize) -> Poset {
        Poset::from_down_rows((0..n).map(bit).collect())
    }

    pub fn len(&self) -> usize {
        self.down.len()
    }

    pub fn is_empty(&self) -> bool {
        self.down.is_empty()
    }

    /// Mask of the whole ground set.
    pub fn ground(&self) -> Mask {
        full(self.len())
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        has(self.down[y], x)
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// Principal down-set `↓x`.
    #[inline]
    pub fn down(&self, x: usize) -> Mask {
        self.down[x]
    }

    /// Principal up-set `↑x`.
    #[inline]
    pub fn up(&self, x: usize) -> Mask {
        self.up[x]
    }

    pub fn is_down_set(&self, mask: Mask) -> bool {
        ones(mask).all(|x| self.down[x] & !mask == 0)
    }

    pub fn down_closure(&self, mask: Mask) -> Mask {
        ones(mask).fold(0, |acc, x| acc | self.down[x])
    }

    /// Maximal elements of the subset `mask`.
    pub fn maximal_in(&self, mask: Mask) -> Mask {
        ones(mask).filter(|&x| self.up[x] & mask == bit(x)).fold(0, |acc, x| acc | bit(x))
    }

    /// All pairs `(i, j)` with `i ≤ j`, sorted.
    pub fn relation_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.leq(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Cover relation `(lower, upper)`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if self.lt(x, y) {
                    let between = self.up[x] & self.down[y] & !bit(x) & !bit(y);
                    if between == 0 {
                        out.push((x, y));
                    }
                }
            }
        }
        out
    }

    /// Length of the longest chain ending at each element (minimal elements have height 0).
    pub fn heights(&self) -> Vec<usize> {
        let n = self.len();
        let mut h = vec![0usize; n];
        for x in self.topological_order() {
            h[x] = ones(self.down[x] & !bit(x)).map(|y| h[y] + 1).max().unwrap_or(0);
        }
        h
    }

    /// Elements sorted so that every element follows everything strictly below it.
    pub fn topological_order(&self) -> Vec<usize> {
        let mut xs: Vec<usize> = (0..self.len()).collect();
        xs.sort_by_key(|&x| (self.down[x].count_ones(), x));
        xs
    }

    pub fn dual(&self) -> Poset {
        Poset { down: self.up.clone(), up: self.down.clone() }
    }

    /// Sub-poset induced on `elems`, in the given order.
    pub fn induced(&self, elems: &[usize]) -> Poset {
        let down = elems
            .iter()
            .map(|&y| elems.iter().enumerate().filter(|&(_, &x)| self.leq(x, y)).fold(0, |acc, (i, _)| acc | bit(i)))
            .collect();
        Poset::from_down_rows(down)
    }

    /// Poset extended by one new maximal element whose strict down-set is `below`.
    pub fn with_new_top(&self, below: Mask) -> Poset {
        let n = self.len();
        let mut down = self.down.clone();
        down.push(self.down_closure(below) | bit(n));
        Poset::from_down_rows(down)
    }

    fn invariant(&self, x: usize, heights: &[usize]) -> (u32, u32, usize) {
        (self.down[x].count_ones(), self.up[x].count_ones(), heights[x])
    }

    fn invariant_key(&self) -> Vec<(u32, u32, usize)> {
        let h = self.heights();
        let mut key: Vec<_> = (0..self.len()).map(|x| self.invariant(x, &h)).collect();
        key.sort_unstable();
        key
    }
}

fn find_cycle(n: usize, pairs: &[(usize, usize)], i: usize, j: usize) -> Vec<usize> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in pairs {
        if a != b {
            adj[a].push(b);
        }
    }
    let path = |from: usize, to: usize| -> Vec<usize> {
        let mut prev = vec![usize::MAX; n];
        let mut queue = VecDeque::from([from]);
        prev[from] = from;
        while let Some(v) = queue.pop_front() {
            if v == to {
                break;
            }
            for &w in &adj[v] {
                if prev[w] == usize::MAX {
                    prev[w] = v;
                    queue.push_back(w);
                }
            }
        }
        let mut out = vec![to];
        let mut v = to;
        while v != from {
            v = prev[v];
            out.push(v);
        }
        out.reverse();
        out
    };
    let mut cycle = path(i, j);
    let back = path(j, i);
    cycle.extend_from_slice(&back[1..back.len() - 1]);
    cycle
}

/// A poset together with a strict total order `≺` extending it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearOrderedPoset {
    poset: Poset,
    /// `position[x]` is the rank of `x` under `≺`.
    position: Vec<usize>,
}

impl LinearOrderedPoset {
    /// `position[x]` is the rank of element `x`.
    pub fn new(poset: Poset, position: Vec<usize>) -> Result<Self> {
        let n = poset.len();
        if position.len() != n {
            return Err(Error::NotAPermutation { len: n });
        }
        let mut seen = vec![false; n];
        for &p in &position {
            if p >= n || seen[p] {
                return Err(Error::NotAPermutation { len: n });
            }
            seen[p] = true;
        }
        for (lower, upper) in poset.relation_pairs() {
            if lower != upper && position[lower] > position[upper] {
                return Err(Error::NotAnExtension { lower, upper });
            }
        }
        Ok(LinearOrderedPoset { poset, position })
    }

    /// Builds the order from the element sequence `x_0 ≺ x_1 ≺ …`.
    pub fn from_sequence(poset: Poset, sequence: &[usize]) -> Result<Self> {
        let n = poset.len();
        if sequence.len() != n || sequence.iter().any(|&x| x >= n) {
            return Err(Error::NotAPermutation { len: n });
        }
        let mut position = vec![usize::MAX; n];
        for (p, &x) in sequence.iter().enumerate() {
            if position[x] != usize::MAX {
                return Err(Error::NotAPermutation { len: n });
            }
            position[x] = p;
        }
        LinearOrderedPoset::new(poset, position)
    }

    /// The chain `0 < 1 < … < n-1` with its only linear order.
    pub fn chain(n: usize) -> Self {
        LinearOrderedPoset { poset: Poset::chain(n), position: (0..n).collect() }
    }

    /// The antichain on `n` points ordered `0 ≺ 1 ≺ …`.
    pub fn antichain(n: usize) -> Self {
        LinearOrderedPoset { poset: Poset::antichain(n), position: (0..n).collect() }
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn positions(&self) -> &[usize] {
        &self.position
    }

    pub fn position(&self, x: usize) -> usize {
        self.position[x]
    }

    /// Elements listed in `≺` order.
    pub fn sequence(&self) -> Vec<usize> {
        let mut seq = vec![0; self.len()];
        for (x, &p) in self.position.iter().enumerate() {
            seq[p] = x;
        }
        seq
    }

    pub fn precedes(&self, x: usize, y: usize) -> bool {
        self.position[x] < self.position[y]
    }
}

/// Either flavor of poset, for interfaces that receive both.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyPoset {
    Plain(Poset),
    Ordered(LinearOrderedPoset),
}

impl AnyPoset {
    pub fn poset(&self) -> &Poset {
        match self {
            AnyPoset::Plain(p) => p,
            AnyPoset::Ordered(lp) => lp.poset(),
        }
    }

    pub fn is_ordered(&self) -> bool {
        matches!(self, AnyPoset::Ordered(_))
    }
}

/// A checked embedding; `ordered` records that the linear orders are also preserved.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PosetEmbedding {
    pub map: Vec<usize>,
    pub ordered: bool,
}

impl PosetEmbedding {
    pub fn validate(source: &Poset, target: &Poset, map: Vec<usize>) -> Result<Self> {
        check_embedding(source, target, &map, None)?;
        Ok(PosetEmbedding { map, ordered: false })
    }

    pub fn validate_ordered(source: &LinearOrderedPoset, target: &LinearOrderedPoset, map: Vec<usize>) -> Result<Self> {
        check_embedding(source.poset(), target.poset(), &map, Some((source, target)))?;
        Ok(PosetEmbedding { map, ordered: true })
    }

    pub fn identity(n: usize, ordered: bool) -> Self {
        PosetEmbedding { map: (0..n).collect(), ordered }
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn after(&self, inner: &PosetEmbedding) -> PosetEmbedding {
        PosetEmbedding { map: inner.map.iter().map(|&x| self.map[x]).collect(), ordered: self.ordered && inner.ordered }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }
}

fn check_embedding(
    source: &Poset,
    target: &Poset,
    map: &[usize],
    orders: Option<(&LinearOrderedPoset, &LinearOrderedPoset)>,
) -> Result<()> {
    if map.len() != source.len() {
        return Err(Error::Invalid(format!("map has {} entries, source has {} elements", map.len(), source.len())));
    }
    if let Some(&bad) = map.iter().find(|&&y| y >= target.len()) {
        return Err(Error::IndexOutOfRange { index: bad, len: target.len() });
    }
    for x in 0..map.len() {
        for y in 0..map.len() {
            if x != y && map[x] == map[y] {
                return Err(Error::NotEmbedding { x, y });
            }
            if source.leq(x, y) != target.leq(map[x], map[y]) {
                return Err(Error::NotEmbedding { x, y });
            }
            if let Some((s, t)) = orders {
                if s.precedes(x, y) != t.precedes(map[x], map[y]) {
                    return Err(Error::NotEmbedding { x, y });
                }
            }
        }
    }
    Ok(())
}

/// All linear extensions, sorted by position array.
pub fn linear_extensions(p: &Poset) -> Vec<LinearOrderedPoset> {
    let n = p.len();
    let mut positions = Vec::new();
    let mut seq = Vec::with_capacity(n);
    fn go(p: &Poset, placed: Mask, seq: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let n = p.len();
        if seq.len() == n {
            let mut pos = vec![0; n];
            for (i, &x) in seq.iter().enumerate() {
                pos[x] = i;
            }
            out.push(pos);
            return;
        }
        for x in 0..n {
            if !has(placed, x) && p.down(x) & !bit(x) & !placed == 0 {
                seq.push(x);
                go(p, placed | bit(x), seq, out);
                seq.pop();
            }
        }
    }
    go(p, 0, &mut seq, &mut positions);
    positions.sort();
    positions.into_iter().map(|position| LinearOrderedPoset { poset: p.clone(), position }).collect()
}

/// Every down-set of `p`, sorted by mask value. Always contains `∅` and the ground set.
pub fn down_sets(p: &Poset) -> Vec<Mask> {
    down_sets_limited(p, usize::MAX).expect("unlimited")
}

/// As [`down_sets`], giving up with `None` once more than `limit` sets are found.
pub fn down_sets_limited(p: &Poset, limit: usize) -> Option<Vec<Mask>> {
    let order = p.topological_order();
    let mut out = Vec::new();
    fn go(p: &Poset, order: &[usize], i: usize, mask: Mask, limit: usize, out: &mut Vec<Mask>) -> bool {
        if i == order.len() {
            out.push(mask);
            return out.len() <= limit;
        }
        let x = order[i];
        if !go(p, order, i + 1, mask, limit, out) {
            return false;
        }
        if p.down(x) & !bit(x) & !mask == 0 {
            return go(p, order, i + 1, mask | bit(x), limit, out);
        }
        true
    }
    if !go(p, &order, 0, 0, limit, &mut out) {
        return None;
    }
    out.sort_unstable();
    Some(out)
}

/// All embeddings `a ↪ c` in lexicographic order of the maps.
pub fn embeddings(a: &Poset, c: &Poset) -> Vec<PosetEmbedding> {
    search_embeddings(a, c, None).into_iter().map(|map| PosetEmbedding { map, ordered: false }).collect()
}

/// All embeddings `a ↪ c` that also preserve and reflect the linear orders.
pub fn ordered_embeddings(a: &LinearOrderedPoset, c: &LinearOrderedPoset) -> Vec<PosetEmbedding> {
    search_embeddings(a.poset(), c.poset(), Some((a, c)))
        .into_iter()
        .map(|map| PosetEmbedding { map, ordered: true })
        .collect()
}

/// Flavor-checked front end over [`embeddings`] and [`ordered_embeddings`].
pub fn enumerate_embeddings(a: &AnyPoset, c: &AnyPoset, ordered: bool) -> Result<Vec<PosetEmbedding>> {
    match (a, c) {
        (AnyPoset::Ordered(a), AnyPoset::Ordered(c)) if ordered => Ok(ordered_embeddings(a, c)),
        (AnyPoset::Ordered(a), AnyPoset::Ordered(c)) => Ok(embeddings(a.poset(), c.poset())),
        (AnyPoset::Plain(a), AnyPoset::Plain(c)) if !ordered => Ok(embeddings(a, c)),
        _ => Err(Error::FlavorMismatch),
    }
}

fn search_embeddings(
    a: &Poset,
    c: &Poset,
    orders: Option<(&LinearOrderedPoset, &LinearOrderedPoset)>,
) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if a.len() > c.len() {
        return out;
    }
    let mut map = Vec::with_capacity(a.len());
    fn go(
        a: &Poset,
        c: &Poset,
        orders: Option<(&LinearOrderedPoset, &LinearOrderedPoset)>,
        used: Mask,
        map: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let x = map.len();
        if x == a.len() {
            out.push(map.clone());
            return;
        }
        'cand: for y in 0..c.len() {
            if has(used, y) {
                continue;
            }
            for (x2, &y2) in map.iter().enumerate() {
                if a.leq(x2, x) != c.leq(y2, y) || a.leq(x, x2) != c.leq(y, y2) {
                    continue 'cand;
                }
                if let Some((oa, oc)) = orders {
                    if oa.precedes(x2, x) != oc.precedes(y2, y) {
                        continue 'cand;
                    }
                }
            }
            map.push(y);
            go(a, c, orders, used | bit(y), map, out);
            map.pop();
        }
    }
    go(a, c, orders, 0, &mut map, &mut out);
    out
}

/// An order-isomorphism `a → b`, the lexicographically least one when several exist.
pub fn isomorphism(a: &Poset, b: &Poset) -> Option<Vec<usize>> {
    if a.len() != b.len() || a.invariant_key() != b.invariant_key() {
        return None;
    }
    let (ha, hb) = (a.heights(), b.heights());
    let inv_a: Vec<_> = (0..a.len()).map(|x| a.invariant(x, &ha)).collect();
    let inv_b: Vec<_> = (0..b.len()).map(|y| b.invariant(y, &hb)).collect();
    let mut map = Vec::with_capacity(a.len());
    fn go(
        a: &Poset,
        b: &Poset,
        inv_a: &[(u32, u32, usize)],
        inv_b: &[(u32, u32, usize)],
        used: Mask,
        map: &mut Vec<usize>,
    ) -> bool {
        let x = map.len();
        if x == a.len() {
            return true;
        }
        for y in 0..b.len() {
            if has(used, y) || inv_a[x] != inv_b[y] {
                continue;
            }
            let ok =
                map.iter().enumerate().all(|(x2, &y2)| a.leq(x2, x) == b.leq(y2, y) && a.leq(x, x2) == b.leq(y, y2));
            if ok {
                map.push(y);
                if go(a, b, inv_a, inv_b, used | bit(y), map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    go(a, b, &inv_a, &inv_b, 0, &mut map).then_some(map)
}

/// The unique isomorphism of linearly ordered posets, if any. Ordered posets
/// are rigid, so the only candidate matches elements by position.
pub fn ordered_isomorphism(a: &LinearOrderedPoset, b: &LinearOrderedPoset) -> Option<Vec<usize>> {
    if a.len() != b.len() {
        return None;
    }
    let seq_b = b.sequence();
    let map: Vec<usize> = (0..a.len()).map(|x| seq_b[a.position(x)]).collect();
    PosetEmbedding::validate_ordered(a, b, map.clone()).ok().map(|_| map)
}

/// Flavor-checked front end over [`isomorphism`] and [`ordered_isomorphism`].
pub fn are_isomorphic(a: &AnyPoset, b: &AnyPoset) -> Result<Option<Vec<usize>>> {
    match (a, b) {
        (AnyPoset::Plain(a), AnyPoset::Plain(b)) => Ok(isomorphism(a, b)),
        (AnyPoset::Ordered(a), AnyPoset::Ordered(b)) => Ok(ordered_isomorphism(a, b)),
        _ => Err(Error::FlavorMismatch),
    }
}

/// One representative per isomorphism class of posets on `n` points.
pub fn enumerate_posets_up_to_iso(n: usize) -> Result<Vec<Poset>> {
    enumerate_posets_up_to_iso_bounded(n, DEFAULT_ENUMERATION_BOUND)
}

/// As [`enumerate_posets_up_to_iso`] with an explicit size bound.
///
/// Every poset on `n` points arises from one on `n - 1` points by adding a
/// maximal element, so the classes are grown one layer at a time and
/// deduplicated with [`isomorphism`] inside invariant buckets.
pub fn enumerate_posets_up_to_iso_bounded(n: usize, bound: usize) -> Result<Vec<Poset>> {
    if n > bound || n > MAX_POSET_SIZE {
        return Err(Error::BoundExceeded { what: "poset enumeration size".into(), size: n, bound });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut layer = vec![Poset::antichain(1)];
    for _ in 1..n {
        let mut next: Vec<Poset> = Vec::new();
        let mut buckets: HashMap<Vec<(u32, u32, usize)>, Vec<usize>> = HashMap::new();
        for p in &layer {
            for d in down_sets(p) {
                let q = p.with_new_top(d);
                let bucket = buckets.entry(q.invariant_key()).or_default();
                if bucket.iter().all(|&i| isomorphism(&next[i], &q).is_none()) {
                    bucket.push(next.len());
                    next.push(q);
                }
            }
        }
        layer = next;
    }
    Ok(layer)
}

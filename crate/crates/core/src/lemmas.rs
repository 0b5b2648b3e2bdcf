//! Exhaustive lemma battery over the lattices `O(q)` of a list of posets.
//!
//! Every surjective homomorphism between two lattices of the list is checked
//! under every pair of natural orders, every congruence under every natural
//! order, and every ordered embedding between linear extensions of the posets.

use serde::Serialize;

use crate::duality::{j_morphism, o_morphism};
use crate::lattice::{
    enumerate_congruences, enumerate_surjective_homomorphisms, kernel, quotient, DistLattice, LatticeHom,
};
use crate::ordered::{
    collapsed_set_congruence, collapsed_set_hom, enumerate_natural_orders, is_natural_order, is_positive_congruence,
    is_positive_homomorphism, quotient_natural_order, residual_minus, OrderedLattice, PositiveCongruence,
};
use crate::poset::{linear_extensions, ordered_embeddings, LinearOrderedPoset, Poset, PosetEmbedding};
use crate::{Flags, Result};

const MAX_EXAMPLES: usize = 3;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub checked: u64,
    pub violations: u64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub examples: Vec<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, example: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations += 1;
            if self.examples.len() < MAX_EXAMPLES {
                self.examples.push(example());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// Counts and per-lemma tallies. `informational` tallies are findings, not requirements.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub posets: usize,
    pub natural_orders: usize,
    pub surjections: u64,
    pub positive_surjections: u64,
    pub congruences: u64,
    pub positive_congruences: u64,
    pub ordered_embeddings: u64,

    pub natural_order_extension: Tally,
    pub duality_naturality: Tally,
    pub kernel_irreducibles: Tally,
    pub irreducible_image: Tally,
    pub minus_n: Tally,
    pub classic: Tally,
    pub factor: Tally,
    pub poscongr_a: Tally,
    pub poscongr_b: Tally,
    pub composition: Tally,
    pub tech_forward: Tally,
    pub tech_dual: Tally,

    pub informational: Informational,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Informational {
    /// `irreducible_image` with the hypothesis read as `j ≤ x − N(f)` only.
    pub irreducible_image_residual_only: Tally,
    /// `J(f)` an ordered embedding ⇒ `f` positive.
    pub tech_converse: Tally,
}

impl LemmaReport {
    pub fn gated(&self) -> Vec<(&'static str, &Tally)> {
        vec![
            ("natural_order_extension", &self.natural_order_extension),
            ("duality_naturality", &self.duality_naturality),
            ("kernel_irreducibles", &self.kernel_irreducibles),
            ("irreducible_image", &self.irreducible_image),
            ("minus_n", &self.minus_n),
            ("classic", &self.classic),
            ("factor", &self.factor),
            ("poscongr_a", &self.poscongr_a),
            ("poscongr_b", &self.poscongr_b),
            ("composition", &self.composition),
            ("tech_forward", &self.tech_forward),
            ("tech_dual", &self.tech_dual),
        ]
    }

    pub fn all_pass(&self) -> bool {
        self.gated().iter().all(|(_, t)| t.passed())
    }
}

struct Entry {
    lattice: DistLattice,
    orders: Vec<OrderedLattice>,
    j_primes: Vec<LinearOrderedPoset>,
}

/// Runs the battery over `O(q)` for every `q` in `posets`.
pub fn run_lemma_suite(posets: &[Poset]) -> Result<LemmaReport> {
    let mut r = LemmaReport { posets: posets.len(), ..LemmaReport::default() };
    let mut entries = Vec::with_capacity(posets.len());
    for q in posets {
        let lattice = DistLattice::from_poset(q)?;
        let orders: Vec<OrderedLattice> = enumerate_natural_orders(&lattice)
            .into_iter()
            .map(|o| OrderedLattice::from_parts(lattice.clone(), o))
            .collect::<Result<_>>()?;
        for o in &orders {
            check_extension(&mut r.natural_order_extension, o);
        }
        r.natural_orders += orders.len();
        let j_primes = orders.iter().map(OrderedLattice::j_prime).collect();
        entries.push(Entry { lattice, orders, j_primes });
    }

    // positive[i][oi][j][oj]: positive surjections as indices into surj[i][j]
    let mut surj: Vec<Vec<Vec<LatticeHom>>> = Vec::new();
    let mut positive: Vec<Vec<Vec<Vec<Vec<usize>>>>> = Vec::new();
    for (i, src) in entries.iter().enumerate() {
        let mut row = Vec::new();
        let mut pos_i: Vec<Vec<Vec<Vec<usize>>>> =
            (0..src.orders.len()).map(|_| entries.iter().map(|t| vec![Vec::new(); t.orders.len()]).collect()).collect();
        for (j, tgt) in entries.iter().enumerate() {
            let fs = enumerate_surjective_homomorphisms(&src.lattice, &tgt.lattice);
            for (fi, f) in fs.iter().enumerate() {
                r.surjections += 1;
                let tag = || format!("O(q{i}) -> O(q{j}) map {:?}", f.map);
                let positives = check_surjection(&mut r, src, tgt, f, &tag)?;
                for (oi, oj) in positives {
                    pos_i[oi][j][oj].push(fi);
                }
            }
            row.push(fs);
        }
        surj.push(row);
        positive.push(pos_i);
    }

    // composition of positive surjections
    for (i, src) in entries.iter().enumerate() {
        for oi in 0..src.orders.len() {
            for (j, mid) in entries.iter().enumerate() {
                for oj in 0..mid.orders.len() {
                    for &fi in &positive[i][oi][j][oj] {
                        let f = &surj[i][j][fi];
                        for (m, tgt) in entries.iter().enumerate() {
                            for om in 0..tgt.orders.len() {
                                for &gi in &positive[j][oj][m][om] {
                                    let h = f.then(&surj[j][m][gi]);
                                    let ok = h.surjective
                                        && is_positive_homomorphism(&h, &src.orders[oi], &tgt.orders[om])?
                                            .is_positive();
                                    r.composition.record(ok, || format!("{:?} then {:?}", f.map, surj[j][m][gi].map));
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    for (i, e) in entries.iter().enumerate() {
        for phi in enumerate_congruences(&e.lattice)? {
            r.congruences += 1;
            let (quot, nat) = quotient(&e.lattice, &phi, Flags::PERMISSIVE)?;
            for b in 0..phi.num_blocks() {
                if quot.is_join_irreducible(nat.apply(phi.class_min(b))) {
                    r.classic.record(e.lattice.is_join_irreducible(phi.class_min(b)), || {
                        format!("O(q{i}) blocks {:?}, block {b}", phi.blocks())
                    });
                }
            }
            for o in &e.orders {
                if !is_positive_congruence(&phi, o).is_positive() {
                    continue;
                }
                r.positive_congruences += 1;
                if phi.num_blocks() < 2 {
                    continue;
                }
                let pc = PositiveCongruence::new(phi.clone(), o)?;
                check_factor(&mut r, o, &pc, i)?;
            }
        }
    }

    let lops: Vec<LinearOrderedPoset> = posets.iter().flat_map(linear_extensions).collect();
    let lattices: Vec<OrderedLattice> = lops.iter().map(OrderedLattice::from_linear_poset).collect::<Result<_>>()?;
    for (pi, p) in lops.iter().enumerate() {
        for (qi, q) in lops.iter().enumerate() {
            for phi in ordered_embeddings(p, q) {
                r.ordered_embeddings += 1;
                let ok = check_dual(&lattices[pi], &lattices[qi], &phi)?;
                r.tech_dual.record(ok, || format!("{:?} -> {:?} via {:?}", p.sequence(), q.sequence(), phi.map));
            }
        }
    }
    Ok(r)
}

fn check_extension(t: &mut Tally, o: &OrderedLattice) {
    let l = o.lattice();
    for x in 0..l.len() {
        for y in 0..l.len() {
            if l.lt(x, y) {
                t.record(o.order().precedes(x, y), || format!("irr_order {:?}: {x} < {y}", o.order().irr_order()));
            }
        }
    }
}

/// Order-free checks on `f`, then per pair of natural orders. Returns the
/// order pairs under which `f` is positive.
fn check_surjection(
    r: &mut LemmaReport,
    src: &Entry,
    tgt: &Entry,
    f: &LatticeHom,
    tag: &dyn Fn() -> String,
) -> Result<Vec<(usize, usize)>> {
    let (l, k) = (&src.lattice, &tgt.lattice);
    let n = collapsed_set_hom(l, f);
    let phi = j_morphism(f, l, k);
    let irr_l = l.irreducibles();
    let irr_k = k.irreducibles();
    let in_image = |t: usize| phi.iter().position(|&s| s == t);

    let back = o_morphism(&phi, k, l)?;
    r.duality_naturality.record(back.map == f.map, tag);

    for t in 0..l.base().len() {
        r.kernel_irreducibles.record(in_image(t).is_some() != n.contains(&irr_l[t]), tag);
    }
    for x in 0..l.len() {
        let res = residual_minus(l, x, &n);
        r.minus_n.record(f.apply(x) == f.apply(res), tag);
        for t in 0..l.base().len() {
            let conclusion = || in_image(t).is_some_and(|s| f.apply(irr_l[t]) == irr_k[s]);
            if l.leq(irr_l[t], x) && !n.contains(&irr_l[t]) {
                r.irreducible_image.record(conclusion(), tag);
            }
            if l.leq(irr_l[t], res) {
                r.informational
                    .irreducible_image_residual_only
                    .record(conclusion(), || format!("{} at x = {x}, j = {}", tag(), irr_l[t]));
            }
        }
    }

    let ker = kernel(f, l);
    let mut positives = Vec::new();
    for (oi, lo) in src.orders.iter().enumerate() {
        for (oj, ko) in tgt.orders.iter().enumerate() {
            let positive = is_positive_homomorphism(f, lo, ko)?.is_positive();
            let ordered = PosetEmbedding::validate_ordered(&tgt.j_primes[oj], &src.j_primes[oi], phi.clone()).is_ok();
            if positive {
                r.positive_surjections += 1;
                positives.push((oi, oj));
                r.tech_forward.record(ordered, tag);
                r.poscongr_a.record(is_positive_congruence(&ker, lo).is_positive(), tag);
            }
            if ordered {
                r.informational.tech_converse.record(positive, tag);
            }
        }
    }
    Ok(positives)
}

fn check_factor(r: &mut LemmaReport, o: &OrderedLattice, pc: &PositiveCongruence, i: usize) -> Result<()> {
    let l = o.lattice();
    let phi = &pc.congruence;
    let tag = || format!("O(q{i}) irr_order {:?} blocks {:?}", o.order().irr_order(), phi.blocks());
    let (q, nat) = quotient_natural_order(o, pc)?;
    let n = collapsed_set_congruence(l, phi);
    let res: Vec<usize> = (0..l.len()).map(|x| o.order().rank(residual_minus(l, x, &n))).collect();
    // A ⪯ B iff every a − N ⊑ every b − N
    let mut ok = is_natural_order(q.lattice(), q.order().sequence()).is_some();
    for x in 0..l.len() {
        for y in 0..l.len() {
            let (a, b) = (phi.block_of(x), phi.block_of(y));
            if a == b {
                continue;
            }
            let forward = phi.blocks()[a].iter().all(|&u| phi.blocks()[b].iter().all(|&v| res[u] <= res[v]));
            ok &= forward == q.order().precedes(nat.apply(x), nat.apply(y));
        }
    }
    r.factor.record(ok, tag);
    r.poscongr_b.record(is_positive_homomorphism(&nat, o, &q)?.is_positive() && kernel(&nat, l) == *phi, tag);
    Ok(())
}

/// `O(φ)` for an ordered embedding is a positive surjection.
fn check_dual(op: &OrderedLattice, oq: &OrderedLattice, phi: &PosetEmbedding) -> Result<bool> {
    let f = o_morphism(&phi.map, op.lattice(), oq.lattice())?;
    Ok(f.surjective && is_positive_homomorphism(&f, oq, op)?.is_positive())
}

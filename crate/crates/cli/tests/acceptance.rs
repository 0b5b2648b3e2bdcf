//! Acceptance gate. Each criterion prints one PASS/FAIL line; the test fails
//! if any criterion fails. Oracles below are brute force and share no code
//! with the enumerators they check.

use std::collections::BTreeSet;
use std::io::Write;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use lattice_ramsey::duality::{epsilon_iso, eta_iso, j_morphism, j_object};
use lattice_ramsey::lattice::{enumerate_congruences, enumerate_surjective_homomorphisms};
use lattice_ramsey::lemmas::run_lemma_suite;
use lattice_ramsey::ordered::{enumerate_positive_surjections, o_prime_morphism};
use lattice_ramsey::poset::{enumerate_posets_up_to_iso, linear_extensions, ordered_embeddings};
use lattice_ramsey::ramsey::{
    arrow_holds_hom, dual_arrow_congruence_form, dual_coloring, find_ramsey_witness, homs, transport_witness,
};
use lattice_ramsey::{
    Congruence, DistLattice, Flavor, LinearOrderedPoset, Object, OrderedLattice, Poset, PosetEmbedding, SearchConfig,
    Verdict,
};
use lattice_ramsey_cli::corpus::{load_manifest, run_corpus};

const LIMIT_BIRKHOFF: Duration = Duration::from_secs(5);
const LIMIT_CONGRUENCE_COUNT: Duration = Duration::from_secs(30);
const LIMIT_LEMMA_SUITE: Duration = Duration::from_secs(300);
const LIMIT_TECH: Duration = Duration::from_secs(120);
const LIMIT_WITNESS: Duration = Duration::from_secs(1);
const LIMIT_TRANSPORT: Duration = Duration::from_secs(1);
const LIMIT_NEGATIVE: Duration = Duration::from_secs(120);

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check, Duration);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

// ---------- oracles ----------

fn posets_up_to(n: usize) -> Vec<Poset> {
    (1..=n).flat_map(|k| enumerate_posets_up_to_iso(k).unwrap()).collect()
}

fn all_maps(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out.into_iter().flat_map(|p| (0..m).map(move |v| [p.clone(), vec![v]].concat())).collect();
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    all_maps(n, n).into_iter().filter(|p| p.iter().collect::<BTreeSet<_>>().len() == n).collect()
}

fn down_mask(p: &Poset, x: usize) -> u64 {
    (0..p.len()).filter(|&y| p.leq(y, x)).fold(0, |m, y| m | 1 << y)
}

fn is_iso(a: &Poset, b: &Poset) -> bool {
    a.len() == b.len()
        && permutations(a.len())
            .iter()
            .any(|s| (0..a.len()).all(|x| (0..a.len()).all(|y| a.leq(x, y) == b.leq(s[x], s[y]))))
}

/// Position arrays of the linear extensions of `p`.
fn extensions(p: &Poset) -> Vec<Vec<usize>> {
    permutations(p.len())
        .into_iter()
        .filter(|pos| (0..p.len()).all(|x| (0..p.len()).all(|y| !p.lt(x, y) || pos[x] < pos[y])))
        .collect()
}

/// Antilexicographic key of a down-set: the natural order compares these numbers.
fn key(mask: u64, pos: &[usize]) -> u64 {
    (0..pos.len()).filter(|&t| mask >> t & 1 == 1).fold(0, |k, t| k | 1 << pos[t])
}

/// Positivity straight from the definition, on down-set masks. `lpos` and
/// `kpos` are the linear extensions of the base posets inducing the orders.
fn literally_positive(f: &[usize], l: &DistLattice, lpos: &[usize], k: &DistLattice, kpos: &[usize]) -> bool {
    let n = l.len();
    let collapsed: Vec<bool> =
        (0..n).map(|x| (0..n).any(|y| y != x && l.element(y) & !l.element(x) == 0 && f[y] == f[x])).collect();
    let base = l.base();
    let residual = |x: usize| -> u64 {
        (0..base.len())
            .filter(|&t| l.element(x) >> t & 1 == 1)
            .map(|t| down_mask(base, t))
            .filter(|&d| !collapsed[l.index_of(d).unwrap()])
            .fold(0, |a, d| a | d)
    };
    let res: Vec<u64> = (0..n).map(|x| key(residual(x), lpos)).collect();
    (0..n).all(|x| (0..n).all(|y| res[x] > res[y] || key(k.element(f[x]), kpos) <= key(k.element(f[y]), kpos)))
}

fn brute_ordered_embeddings(a: &LinearOrderedPoset, c: &LinearOrderedPoset) -> Vec<Vec<usize>> {
    let n = a.len();
    all_maps(n, c.len())
        .into_iter()
        .filter(|f| {
            (0..n).all(|x| {
                (0..n).all(|y| {
                    (x == y) == (f[x] == f[y])
                        && a.poset().leq(x, y) == c.poset().leq(f[x], f[y])
                        && (a.position(x) < a.position(y)) == (c.position(f[x]) < c.position(f[y]))
                })
            })
        })
        .collect()
}

fn brute_embeddings(a: &Poset, c: &Poset) -> Vec<Vec<usize>> {
    let n = a.len();
    all_maps(n, c.len())
        .into_iter()
        .filter(|f| (0..n).all(|x| (0..n).all(|y| (x == y) == (f[x] == f[y]) && a.leq(x, y) == c.leq(f[x], f[y]))))
        .collect()
}

fn brute_surjections(l: &DistLattice, k: &DistLattice) -> Vec<Vec<usize>> {
    let n = l.len();
    all_maps(n, k.len())
        .into_iter()
        .filter(|f| {
            f[l.bottom()] == k.bottom()
                && f[l.top()] == k.top()
                && (0..k.len()).all(|y| f.contains(&y))
                && (0..n).all(|x| {
                    (0..n).all(|y| f[l.join(x, y)] == k.join(f[x], f[y]) && f[l.meet(x, y)] == k.meet(f[x], f[y]))
                })
        })
        .collect()
}

/// Whether every k-coloring of `vertices` leaves some edge monochromatic.
fn brute_arrow(vertices: usize, edges: &[Vec<usize>], k: usize) -> bool {
    all_maps(vertices, k).iter().all(|c| edges.iter().any(|e| e.iter().all(|&u| c[u] == c[e[0]])))
}

/// Edges of `C -> (B)^A` from explicit morphism lists; `compose(w, f)` is `w · f`.
fn edges(
    hom_ac: &[Vec<usize>],
    hom_bc: &[Vec<usize>],
    hom_ab: &[Vec<usize>],
    compose: impl Fn(&[usize], &[usize]) -> Vec<usize>,
) -> Vec<Vec<usize>> {
    hom_bc
        .iter()
        .map(|w| hom_ab.iter().map(|f| hom_ac.iter().position(|h| *h == compose(w, f)).unwrap()).collect())
        .collect()
}

fn after(w: &[usize], f: &[usize]) -> Vec<usize> {
    f.iter().map(|&x| w[x]).collect()
}

fn before(w: &[usize], f: &[usize]) -> Vec<usize> {
    w.iter().map(|&x| f[x]).collect()
}

fn bicolors_every_edge(coloring: &[usize], edges: &[Vec<usize>]) -> bool {
    edges.iter().all(|e| e.iter().any(|&u| coloring[u] != coloring[e[0]]))
}

/// Congruences by a restricted-growth search over set partitions with a
/// pruning step that only discards prefixes violating substitution among
/// already labelled elements.
fn partition_congruences(l: &DistLattice) -> BTreeSet<Vec<Vec<usize>>> {
    fn go(l: &DistLattice, label: &mut Vec<usize>, max: usize, out: &mut BTreeSet<Vec<Vec<usize>>>) {
        let k = label.len();
        if k > 0 {
            let x = k - 1;
            for y in (0..k).filter(|&y| label[x] == label[y]) {
                for z in 0..k {
                    for (a, b) in [(l.join(x, z), l.join(y, z)), (l.meet(x, z), l.meet(y, z))] {
                        if a < k && b < k && label[a] != label[b] {
                            return;
                        }
                    }
                }
            }
        }
        if k == l.len() {
            let n = l.len();
            let ok = (0..n).all(|x| {
                (0..n).all(|y| {
                    label[x] != label[y]
                        || (0..n).all(|z| {
                            label[l.join(x, z)] == label[l.join(y, z)] && label[l.meet(x, z)] == label[l.meet(y, z)]
                        })
                })
            });
            if ok {
                let mut blocks: Vec<Vec<usize>> =
                    (0..max).map(|c| (0..n).filter(|&x| label[x] == c).collect()).collect();
                blocks.retain(|b| !b.is_empty());
                blocks.sort();
                out.insert(blocks);
            }
            return;
        }
        for c in 0..=max {
            label.push(c);
            go(l, label, max.max(c + 1), out);
            label.pop();
        }
    }
    let mut out = BTreeSet::new();
    go(l, &mut Vec::new(), 0, &mut out);
    out
}

// ---------- criteria ----------

fn criterion_1() -> Check {
    let posets = posets_up_to(5);
    ensure(posets.len() == 87, || format!("{} classes, expected 87", posets.len()))?;
    for q in &posets {
        let oq = DistLattice::from_poset(q).map_err(|e| e.to_string())?;
        let eps = epsilon_iso(q).map_err(|e| e.to_string())?;
        for x in 0..q.len() {
            ensure(oq.element(eps[x]) == down_mask(q, x), || format!("epsilon({x}) is not the principal down-set"))?;
            ensure(oq.lower_covers(eps[x]).len() == 1, || format!("epsilon({x}) is not join-irreducible"))?;
        }
        ensure(eps.iter().collect::<BTreeSet<_>>().len() == oq.irreducibles().len(), || {
            "epsilon not onto J(O(q))".into()
        })?;
        ensure(is_iso(q, &j_object(&oq)), || "J(O(q)) is not isomorphic to q".into())?;

        let eta = eta_iso(&oq).map_err(|e| e.to_string())?;
        let ooq = DistLattice::from_poset(&j_object(&oq)).map_err(|e| e.to_string())?;
        ensure(ooq.len() == oq.len(), || "O(J(O(q))) has the wrong size".into())?;
        for x in 0..oq.len() {
            let want = oq
                .irreducibles()
                .iter()
                .enumerate()
                .filter(|(_, &j)| oq.element(j) & !oq.element(x) == 0)
                .fold(0u64, |m, (t, _)| m | 1 << t);
            ensure(ooq.element(eta[x]) == want, || format!("eta({x}) is not the set of join-irreducibles below it"))?;
        }
    }
    Ok(format!("{} poset classes, epsilon and eta exact", posets.len()))
}

fn criterion_2() -> Check {
    let posets = posets_up_to(4);
    for q in &posets {
        let l = DistLattice::from_poset(q).map_err(|e| e.to_string())?;
        let brute = partition_congruences(&l);
        ensure(brute.len() == 1 << q.len(), || {
            format!("{} congruences by brute force, expected {}", brute.len(), 1 << q.len())
        })?;
        let fast: BTreeSet<Vec<Vec<usize>>> =
            enumerate_congruences(&l).map_err(|e| e.to_string())?.iter().map(|c| c.blocks().to_vec()).collect();
        ensure(fast == brute, || "enumerate_congruences disagrees with brute force".into())?;
    }
    Ok(format!("{} lattices, each with 2^|q| congruences", posets.len()))
}

fn criterion_3() -> Check {
    let posets = posets_up_to(4);
    let report = run_lemma_suite(&posets).map_err(|e| e.to_string())?;
    for (name, tally) in report.gated() {
        ensure(tally.checked > 0, || format!("{name}: nothing checked"))?;
        ensure(tally.violations == 0, || {
            format!("{name}: {} violations, e.g. {:?}", tally.violations, tally.examples)
        })?;
    }

    // positivity counted from the definition over every pair of natural orders
    let lattices: Vec<DistLattice> = posets.iter().map(|q| DistLattice::from_poset(q).unwrap()).collect();
    let mut positive = 0u64;
    let mut surjections = 0u64;
    for l in &lattices {
        let lexts = extensions(l.base());
        for k in &lattices {
            let maps = enumerate_surjective_homomorphisms(l, k);
            surjections += maps.len() as u64;
            let kexts = extensions(k.base());
            for lp in &lexts {
                for kp in &kexts {
                    positive += maps.iter().filter(|f| literally_positive(&f.map, l, lp, k, kp)).count() as u64;
                }
            }
        }
    }
    ensure(positive == report.positive_surjections, || {
        format!("{positive} positive surjections by definition, suite counted {}", report.positive_surjections)
    })?;
    ensure(surjections == report.surjections, || {
        format!("{surjections} surjections, suite counted {}", report.surjections)
    })?;
    let total: u64 = report.gated().iter().map(|(_, t)| t.checked).sum();
    Ok(format!(
        "{} gated checks, 0 violations; {} surjections, {} positive, {} positive congruences",
        total, report.surjections, report.positive_surjections, report.positive_congruences
    ))
}

fn criterion_4() -> Check {
    let posets = posets_up_to(4);
    let lops: Vec<LinearOrderedPoset> = posets.iter().flat_map(linear_extensions).collect();
    let ols: Vec<OrderedLattice> = lops.iter().map(|p| OrderedLattice::from_linear_poset(p).unwrap()).collect();

    // forward: J(f) of a positive surjection is an ordered embedding
    let mut forward = 0;
    for (lo, lp) in ols.iter().zip(&lops) {
        for (ko, kp) in ols.iter().zip(&lops) {
            for f in enumerate_positive_surjections(lo, ko) {
                let phi = j_morphism(&f.hom, lo.lattice(), ko.lattice());
                ensure(brute_ordered_embeddings(kp, lp).contains(&phi), || {
                    format!("J({:?}) is not an ordered embedding", f.hom.map)
                })?;
                forward += 1;
            }
        }
    }

    // dual: O'(phi) of an ordered embedding is a positive surjection
    let mut dual = 0;
    for (p, op) in lops.iter().zip(&ols) {
        for (q, oq) in lops.iter().zip(&ols) {
            let brute = brute_ordered_embeddings(p, q);
            let fast: Vec<Vec<usize>> = ordered_embeddings(p, q).into_iter().map(|e| e.map).collect();
            ensure(fast.iter().collect::<BTreeSet<_>>() == brute.iter().collect::<BTreeSet<_>>(), || {
                "ordered embeddings disagree with brute force".into()
            })?;
            for map in brute {
                let emb = PosetEmbedding::validate_ordered(p, q, map.clone()).map_err(|e| e.to_string())?;
                let f = o_prime_morphism(&emb, op, oq).map_err(|e| e.to_string())?;
                let m = &f.hom.map;
                let surjective = (0..op.len()).all(|y| m.contains(&y));
                ensure(surjective && brute_surjections_contains(oq.lattice(), op.lattice(), m), || {
                    format!("O'({map:?}) is not a surjective homomorphism")
                })?;
                ensure(literally_positive(m, oq.lattice(), q.positions(), op.lattice(), p.positions()), || {
                    format!("O'({map:?}) is not positive")
                })?;
                dual += 1;
            }
        }
    }
    ensure(forward == dual, || format!("{forward} positive surjections but {dual} ordered embeddings"))?;
    Ok(format!("{forward} positive surjections and {dual} ordered embeddings, 0 violations"))
}

/// Homomorphism check on one map, from the definition.
fn brute_surjections_contains(l: &DistLattice, k: &DistLattice, f: &[usize]) -> bool {
    let n = l.len();
    f[l.bottom()] == k.bottom()
        && f[l.top()] == k.top()
        && (0..n)
            .all(|x| (0..n).all(|y| f[l.join(x, y)] == k.join(f[x], f[y]) && f[l.meet(x, y)] == k.meet(f[x], f[y])))
}

fn ordered_arrow_brute(c: &LinearOrderedPoset, b: &LinearOrderedPoset, a: &LinearOrderedPoset, k: usize) -> bool {
    let (ac, bc, ab) = (brute_ordered_embeddings(a, c), brute_ordered_embeddings(b, c), brute_ordered_embeddings(a, b));
    brute_arrow(ac.len(), &edges(&ac, &bc, &ab, after), k)
}

fn criterion_5() -> Check {
    let cfg = SearchConfig::default();
    let (point, chain2, chain3) =
        (LinearOrderedPoset::chain(1), LinearOrderedPoset::chain(2), LinearOrderedPoset::chain(3));
    let ord = |p: &LinearOrderedPoset| Object::OrderedPoset(p.clone());
    let cert = arrow_holds_hom(Flavor::OrderedPosetEmb, &ord(&chain3), &ord(&chain2), &ord(&point), 2, &cfg)
        .map_err(|e| e.to_string())?;
    ensure(cert.verdict == Verdict::Holds, || "3-chain arrow does not hold".into())?;
    ensure(ordered_arrow_brute(&chain3, &chain2, &point, 2), || "brute force over 2^3 colorings disagrees".into())?;

    let mut smaller = 0;
    for q in posets_up_to(2) {
        for c in linear_extensions(&q) {
            let v = arrow_holds_hom(Flavor::OrderedPosetEmb, &ord(&c), &ord(&chain2), &ord(&point), 2, &cfg)
                .map_err(|e| e.to_string())?;
            ensure(v.verdict == Verdict::Fails && !ordered_arrow_brute(&c, &chain2, &point, 2), || {
                format!("size-{} candidate does not fail", c.len())
            })?;
            smaller += 1;
        }
    }
    let w = find_ramsey_witness(&chain2, &point, 2, 4, &cfg).map_err(|e| e.to_string())?;
    ensure(w.c == chain3, || format!("witness search returned {:?}", w.c))?;
    Ok(format!("3-chain holds over all 8 colorings; all {smaller} candidates of size at most 2 fail"))
}

fn is_chain(l: &DistLattice) -> bool {
    (0..l.len()).all(|x| (0..l.len()).all(|y| l.leq(x, y) || l.leq(y, x)))
}

/// Partitions of `0..n` into `parts` consecutive intervals.
fn interval_partitions(n: usize, parts: usize) -> BTreeSet<Vec<Vec<usize>>> {
    all_maps(n - 1, 2)
        .into_iter()
        .filter(|cuts| cuts.iter().sum::<usize>() == parts - 1)
        .map(|cuts| {
            let mut blocks = vec![vec![0]];
            for (i, &c) in cuts.iter().enumerate() {
                if c == 1 {
                    blocks.push(Vec::new());
                }
                blocks.last_mut().unwrap().push(i + 1);
            }
            blocks
        })
        .collect()
}

fn refines(fine: &[Vec<usize>], coarse: &[Vec<usize>]) -> bool {
    fine.iter().all(|b| coarse.iter().any(|c| b.iter().all(|x| c.contains(x))))
}

fn criterion_6() -> Check {
    let cfg = SearchConfig::default();
    let t = transport_witness(
        &LinearOrderedPoset::chain(1),
        &LinearOrderedPoset::chain(2),
        &LinearOrderedPoset::chain(3),
        2,
        &cfg,
    )
    .map_err(|e| e.to_string())?;
    let sizes = (t.a.len(), t.b.len(), t.c.len());
    ensure(sizes == (2, 3, 4), || format!("transported sizes {sizes:?}"))?;
    ensure([&t.a, &t.b, &t.c].iter().all(|x| is_chain(x.lattice())), || "transported lattices are not chains".into())?;
    ensure(t.certificate.holds(), || "transported arrow does not hold".into())?;

    let (c4, c3) = (OrderedLattice::chain(4), OrderedLattice::chain(3));
    let cuts = interval_partitions(4, 2);
    let refinements = interval_partitions(4, 3);
    let edges: Vec<Vec<usize>> = refinements
        .iter()
        .map(|r| cuts.iter().enumerate().filter(|(_, c)| refines(r, c)).map(|(i, _)| i).collect())
        .collect();
    ensure(cuts.len() == 3 && edges.iter().all(|e| e.len() == 2), || "cut structure is not a triangle".into())?;
    let colorings = all_maps(3, 2);
    ensure(colorings.len() == 8, || "expected 8 colorings".into())?;
    ensure(colorings.iter().all(|c| edges.iter().any(|e| c[e[0]] == c[e[1]])), || {
        "some coloring avoids monochromatic refinements".into()
    })?;

    for blocks in [vec![vec![0, 1], vec![2]], vec![vec![0], vec![1, 2]]] {
        let phi = Congruence::from_blocks(c3.lattice(), blocks.clone()).map_err(|e| e.to_string())?;
        let cert = dual_arrow_congruence_form(&c4, &c3, &phi, 2, &cfg).map_err(|e| e.to_string())?;
        ensure(cert.verdict == Verdict::Holds && cert.hom_form == Verdict::Holds, || {
            format!("{blocks:?}: does not hold")
        })?;
        ensure(cert.colored.iter().cloned().collect::<BTreeSet<_>>() == cuts, || {
            "colored set is not the three cuts".into()
        })?;
        ensure(cert.refinements.iter().cloned().collect::<BTreeSet<_>>() == refinements, || {
            "refinements differ".into()
        })?;
    }
    Ok("lattices (2, 3, 4) chains; congruence form holds, all 8 colorings of the 3 cuts checked".into())
}

fn criterion_7() -> Check {
    let cfg = SearchConfig::default();
    let anti = Poset::antichain(2);
    let a = Object::Poset(anti.clone());
    let posets = posets_up_to(5);
    for q in &posets {
        let c = Object::Poset(q.clone());
        let cert = arrow_holds_hom(Flavor::PosetEmb, &c, &a, &a, 2, &cfg).map_err(|e| e.to_string())?;
        ensure(cert.verdict == Verdict::Fails, || "P_emb antichain arrow holds".into())?;
        let ac = brute_embeddings(&anti, q);
        let bc = ac.clone();
        let ab = brute_embeddings(&anti, &anti);
        let e = edges(&ac, &bc, &ab, after);
        let sierpinski: Vec<usize> = ac.iter().map(|m| if m[0] < m[1] { 1 } else { 2 }).collect();
        ensure(bicolors_every_edge(&sierpinski, &e), || "Sierpinski coloring leaves a copy monochromatic".into())?;
        let coloring = cert.coloring.clone().unwrap_or_default();
        let reordered: Vec<usize> =
            ac.iter().map(|m| cert.morphisms.iter().position(|h| h == m).map(|i| coloring[i]).unwrap_or(0)).collect();
        ensure(cert.morphisms.len() == ac.len() && bicolors_every_edge(&reordered, &e), || {
            "certificate coloring does not re-verify".into()
        })?;
    }

    // one dual instance: O(3-antichain) with B = A = O(2-antichain)
    let c_lat = DistLattice::from_poset(&Poset::antichain(3)).unwrap();
    let b_lat = DistLattice::from_poset(&anti).unwrap();
    let (co, bo) = (Object::Lattice(c_lat.clone()), Object::Lattice(b_lat.clone()));
    let cert = arrow_holds_hom(Flavor::LatticeSurj, &co, &bo, &bo, 2, &cfg).map_err(|e| e.to_string())?;
    ensure(cert.verdict == Verdict::Fails, || "D_surj transport holds".into())?;
    let ac = brute_surjections(&c_lat, &b_lat);
    let ab = brute_surjections(&b_lat, &b_lat);
    let e = edges(&ac, &ac, &ab, before);
    ensure(cert.morphisms.iter().collect::<BTreeSet<_>>() == ac.iter().collect::<BTreeSet<_>>(), || {
        "certificate morphisms are not the surjections".into()
    })?;
    let coloring = cert.coloring.clone().unwrap();
    let reordered: Vec<usize> =
        ac.iter().map(|m| coloring[cert.morphisms.iter().position(|h| h == m).unwrap()]).collect();
    ensure(bicolors_every_edge(&reordered, &e), || "D_surj certificate does not re-verify".into())?;
    let surj = homs(Flavor::LatticeSurj, &bo, &co).map_err(|e| e.to_string())?;
    let pulled =
        dual_coloring(&c_lat, &b_lat, &surj, |m| if m[0] < m[1] { 1 } else { 2 }).map_err(|e| e.to_string())?;
    let pulled: Vec<usize> = ac.iter().map(|m| pulled[surj.iter().position(|h| h == m).unwrap()]).collect();
    ensure(bicolors_every_edge(&pulled, &e), || "dual Sierpinski coloring leaves a copy monochromatic".into())?;
    Ok(format!(
        "{} posets fail with re-verified Sierpinski colorings; D_surj instance fails ({} surjections)",
        posets.len(),
        ac.len()
    ))
}

fn criterion_8() -> Check {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus/manifest.json");
    let first = run_corpus(&manifest, None).map_err(|e| e.to_string())?;
    let second = run_corpus(&manifest, None).map_err(|e| e.to_string())?;
    ensure(first == second, || "two runs differ".into())?;
    for w in [2, 4] {
        let par = run_corpus(&manifest, Some(w)).map_err(|e| e.to_string())?;
        ensure(par == first, || format!("--workers {w} changes the output"))?;
    }
    let (dir, m) = load_manifest(&manifest).map_err(|e| e.to_string())?;
    for (case, run) in m.cases.iter().zip(&first) {
        let want = std::fs::read_to_string(dir.join("expected").join(format!("{}.out", case.name)))
            .map_err(|e| e.to_string())?;
        ensure(run.outcome.stdout == want && run.outcome.code == case.exit, || {
            format!("{} differs from its golden output", case.name)
        })?;
    }
    Ok(format!("{} cases byte-identical across runs and with 2 and 4 workers", first.len()))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 8] = [
        ("Birkhoff round trip", criterion_1, LIMIT_BIRKHOFF),
        ("congruence count law", criterion_2, LIMIT_CONGRUENCE_COUNT),
        ("lemma suite", criterion_3, LIMIT_LEMMA_SUITE),
        ("positive surjections and ordered embeddings", criterion_4, LIMIT_TECH),
        ("Ramsey desk witness", criterion_5, LIMIT_WITNESS),
        ("duality transport", criterion_6, LIMIT_TRANSPORT),
        ("negative certificates", criterion_7, LIMIT_NEGATIVE),
        ("determinism", criterion_8, Duration::MAX),
    ];
    let mut failed = Vec::new();
    std::io::stdout().write_all(b"\n").unwrap();
    for (i, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let secs = start.elapsed();
        let result = result.and_then(|msg| {
            if secs > limit {
                Err(format!("took {:.2} s, limit {} s", secs.as_secs_f64(), limit.as_secs()))
            } else {
                Ok(msg)
            }
        });
        let (status, msg) = match result {
            Ok(msg) => ("PASS", msg),
            Err(msg) => {
                failed.push(i + 1);
                ("FAIL", msg)
            }
        };
        // Bypasses libtest capture so the lines always reach the log.
        let line = format!("criterion {} {status} {name}: {msg} ({:.2} s)\n", i + 1, secs.as_secs_f64());
        std::io::stdout().write_all(line.as_bytes()).unwrap();
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

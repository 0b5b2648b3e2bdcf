//! Ramsey arrows `C ⟶ (B)^A_k` over hom-sets in four categories.
//!
//! An arrow instance reduces to hypergraph colorability: the vertices are
//! `hom(A, C)` and every `w ∈ hom(B, C)` contributes the edge
//! `{ w · f : f ∈ hom(A, B) }`. The arrow fails exactly when some k-coloring
//! leaves no edge monochromatic, and such a coloring is the certificate.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::duality::j_morphism;
use crate::lattice::{enumerate_surjective_homomorphisms, kernel, validate_homomorphism, Congruence, DistLattice};
use crate::ordered::{
    con_plus, enumerate_positive_surjections, quotient_natural_order, OrderedLattice, PositiveCongruence,
};
use crate::poset::{
    embeddings, enumerate_posets_up_to_iso_bounded, linear_extensions, ordered_embeddings, LinearOrderedPoset, Poset,
};
use crate::{Error, Result};

/// Default cap on `|hom(A, C)|`.
pub const DEFAULT_COLORING_BOUND: usize = 24;

/// Holds verdicts with `k^|hom(A,C)|` at most this are re-checked by full enumeration.
pub const CROSS_CHECK_LIMIT: u64 = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Flavor {
    /// Posets with embeddings.
    #[serde(rename = "p")]
    PosetEmb,
    /// Linearly ordered posets with order-preserving embeddings.
    #[serde(rename = "p-ord")]
    OrderedPosetEmb,
    /// Distributive lattices with surjective homomorphisms, read in the opposite category.
    #[serde(rename = "d")]
    LatticeSurj,
    /// Naturally ordered lattices with positive surjections, read in the opposite category.
    #[serde(rename = "d-ord")]
    OrderedLatticePos,
}

impl Flavor {
    pub const ALL: [Flavor; 4] =
        [Flavor::PosetEmb, Flavor::OrderedPosetEmb, Flavor::LatticeSurj, Flavor::OrderedLatticePos];

    pub fn name(self) -> &'static str {
        match self {
            Flavor::PosetEmb => "p",
            Flavor::OrderedPosetEmb => "p-ord",
            Flavor::LatticeSurj => "d",
            Flavor::OrderedLatticePos => "d-ord",
        }
    }

    pub fn is_opposite(self) -> bool {
        matches!(self, Flavor::LatticeSurj | Flavor::OrderedLatticePos)
    }

    pub fn is_ordered(self) -> bool {
        matches!(self, Flavor::OrderedPosetEmb | Flavor::OrderedLatticePos)
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Flavor::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown flavor {s:?} (expected p, p-ord, d or d-ord)")))
    }
}

/// An object of one of the four categories.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object {
    Poset(Poset),
    OrderedPoset(LinearOrderedPoset),
    Lattice(DistLattice),
    OrderedLattice(OrderedLattice),
}

impl Object {
    pub fn flavor(&self) -> Flavor {
        match self {
            Object::Poset(_) => Flavor::PosetEmb,
            Object::OrderedPoset(_) => Flavor::OrderedPosetEmb,
            Object::Lattice(_) => Flavor::LatticeSurj,
            Object::OrderedLattice(_) => Flavor::OrderedLatticePos,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Object::Poset(p) => p.len(),
            Object::OrderedPoset(p) => p.len(),
            Object::Lattice(l) => l.len(),
            Object::OrderedLattice(l) => l.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// `hom(x, y)` in the flavor's category, as function tables in lexicographic order.
///
/// For the opposite flavors an arrow `x → y` is a surjection `y ↠ x`.
pub fn homs(flavor: Flavor, x: &Object, y: &Object) -> Result<Vec<Vec<usize>>> {
    if x.flavor() != flavor || y.flavor() != flavor {
        return Err(Error::FlavorMismatch);
    }
    Ok(match (x, y) {
        (Object::Poset(x), Object::Poset(y)) => embeddings(x, y).into_iter().map(|e| e.map).collect(),
        (Object::OrderedPoset(x), Object::OrderedPoset(y)) => {
            ordered_embeddings(x, y).into_iter().map(|e| e.map).collect()
        }
        (Object::Lattice(x), Object::Lattice(y)) => {
            enumerate_surjective_homomorphisms(y, x).into_iter().map(|f| f.map).collect()
        }
        (Object::OrderedLattice(x), Object::OrderedLattice(y)) => {
            enumerate_positive_surjections(y, x).into_iter().map(|f| f.hom.map).collect()
        }
        _ => unreachable!(),
    })
}

/// `w · f` for `f : A → B`, `w : B → C`.
pub fn compose(flavor: Flavor, w: &[usize], f: &[usize]) -> Vec<usize> {
    if flavor.is_opposite() {
        w.iter().map(|&x| f[x]).collect()
    } else {
        f.iter().map(|&x| w[x]).collect()
    }
}

/// The hypergraph form of an arrow instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowInstance {
    pub flavor: Flavor,
    /// `hom(A, C)`, the colored morphisms.
    pub vertices: Vec<Vec<usize>>,
    /// `hom(B, C)`.
    pub copies: Vec<Vec<usize>>,
    pub hom_ab: Vec<Vec<usize>>,
    /// One edge per copy: sorted distinct vertex indices of `w · hom(A, B)`.
    pub edges: Vec<Vec<usize>>,
}

impl ArrowInstance {
    pub fn build(flavor: Flavor, c: &Object, b: &Object, a: &Object, bound: usize) -> Result<Self> {
        let hom_ab = homs(flavor, a, b)?;
        if hom_ab.is_empty() {
            return Err(Error::EmptyHomAB);
        }
        let vertices = homs(flavor, a, c)?;
        if vertices.len() > bound {
            return Err(Error::BoundExceeded { what: "hom(A, C)".into(), size: vertices.len(), bound });
        }
        let copies = homs(flavor, b, c)?;
        let index: HashMap<&[usize], usize> = vertices.iter().enumerate().map(|(i, v)| (v.as_slice(), i)).collect();
        let edges = copies
            .iter()
            .map(|w| {
                let mut e: Vec<usize> = hom_ab
                    .iter()
                    .map(|f| *index.get(compose(flavor, w, f).as_slice()).expect("composite lies in hom(A, C)"))
                    .collect();
                e.sort_unstable();
                e.dedup();
                e
            })
            .collect();
        Ok(ArrowInstance { flavor, vertices, copies, hom_ab, edges })
    }
}

/// Search limits for coloring searches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Maximum `|hom(A, C)|`.
    pub bound: usize,
    /// Worker threads; affects wall time only.
    pub workers: usize,
    pub timeout: Option<Duration>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { bound: DEFAULT_COLORING_BOUND, workers: 1, timeout: None }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails,
}

/// A copy `w` together with two of its composites that received different colors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BicoloredPair {
    pub copy: usize,
    pub first: usize,
    pub second: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowCertificate {
    pub flavor: Flavor,
    pub k: usize,
    pub verdict: Verdict,
    pub hom_ac: usize,
    pub hom_bc: usize,
    pub hom_ab: usize,
    /// Colors in `1..=k`, indexed like `morphisms`. Present when the arrow fails.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coloring: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub morphisms: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub audit: Vec<BicoloredPair>,
}

impl ArrowCertificate {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }
}

/// Searches for a k-coloring of `0..n` under which no edge is monochromatic.
///
/// Colorings are explored as restricted growth strings in lexicographic order,
/// so the result (colors `0..k`) is the lexicographically least valid coloring
/// regardless of the number of workers.
pub fn search_coloring(n: usize, edges: &[Vec<usize>], k: usize, config: &SearchConfig) -> Result<Option<Vec<u8>>> {
    if k == 0 || k > u8::MAX as usize {
        return Err(Error::Invalid(format!("number of colors must be in 1..=255, got {k}")));
    }
    let mut ending: Vec<Vec<&[usize]>> = vec![Vec::new(); n];
    for e in edges {
        match e.last() {
            Some(&v) => ending[v].push(e),
            None => return Ok(None),
        }
    }
    let ctx = SearchCtx {
        n,
        k,
        ending,
        deadline: config.timeout.map(|t| (Instant::now() + t, t.as_secs())),
        timed_out: AtomicBool::new(false),
    };

    let workers = config.workers.max(1);
    let prefixes = if workers == 1 { vec![Vec::new()] } else { ctx.prefixes(workers * 8) };
    let best = AtomicUsize::new(usize::MAX);
    let results: Mutex<Vec<Option<Vec<u8>>>> = Mutex::new(vec![None; prefixes.len()]);
    let next = AtomicUsize::new(0);
    let run = || loop {
        let i = next.fetch_add(1, Ordering::SeqCst);
        if i >= prefixes.len() || ctx.timed_out.load(Ordering::SeqCst) {
            break;
        }
        if i > best.load(Ordering::SeqCst) {
            continue;
        }
        let mut colors = prefixes[i].clone();
        let used = colors.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
        let mut nodes = 0u64;
        if ctx.dfs(&mut colors, used, &mut nodes, &|| i > best.load(Ordering::SeqCst)) {
            best.fetch_min(i, Ordering::SeqCst);
            results.lock().expect("poisoned")[i] = Some(colors);
        }
    };
    if workers == 1 {
        run();
    } else {
        std::thread::scope(|s| {
            for _ in 0..workers {
                s.spawn(run);
            }
        });
    }
    if let Some((_, secs)) = ctx.deadline {
        if ctx.timed_out.load(Ordering::SeqCst) {
            return Err(Error::Timeout { secs });
        }
    }
    Ok(results.into_inner().expect("poisoned").into_iter().flatten().next())
}

struct SearchCtx<'a> {
    n: usize,
    k: usize,
    ending: Vec<Vec<&'a [usize]>>,
    deadline: Option<(Instant, u64)>,
    timed_out: AtomicBool,
}

impl SearchCtx<'_> {
    fn alive(&self, colors: &[u8]) -> bool {
        let v = colors.len() - 1;
        self.ending[v].iter().all(|e| e.iter().any(|&u| colors[u] != colors[v]))
    }

    /// Valid RGS prefixes of a fixed depth, in lexicographic order.
    fn prefixes(&self, want: usize) -> Vec<Vec<u8>> {
        let mut level: Vec<Vec<u8>> = vec![Vec::new()];
        for _ in 0..self.n {
            if level.len() >= want {
                break;
            }
            let mut next = Vec::new();
            for p in &level {
                let used = p.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
                for c in 0..self.k.min(used + 1) {
                    let mut q = p.clone();
                    q.push(c as u8);
                    if self.alive(&q) {
                        next.push(q);
                    }
                }
            }
            level = next;
        }
        level
    }

    fn dfs(&self, colors: &mut Vec<u8>, used: usize, nodes: &mut u64, cancelled: &dyn Fn() -> bool) -> bool {
        if colors.len() == self.n {
            return true;
        }
        *nodes += 1;
        if (*nodes).is_multiple_of(4096) {
            if let Some((deadline, _)) = self.deadline {
                if Instant::now() > deadline {
                    self.timed_out.store(true, Ordering::SeqCst);
                }
            }
        }
        if self.timed_out.load(Ordering::Relaxed) || ((*nodes).is_multiple_of(1024) && cancelled()) {
            return false;
        }
        for c in 0..self.k.min(used + 1) {
            colors.push(c as u8);
            if self.alive(colors) && self.dfs(colors, used.max(c + 1), nodes, cancelled) {
                return true;
            }
            colors.pop();
        }
        false
    }
}

/// Brute force over all `k^n` colorings; returns the first valid one in
/// lexicographic order.
pub fn full_enumeration(n: usize, edges: &[Vec<usize>], k: usize) -> Option<Vec<u8>> {
    let mut colors = vec![0u8; n];
    loop {
        if edges.iter().all(|e| e.iter().any(|&u| colors[u] != colors[e[0]])) {
            return Some(colors);
        }
        let mut i = n;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            colors[i] += 1;
            if (colors[i] as usize) < k {
                break;
            }
            colors[i] = 0;
        }
    }
}

/// Decides `C ⟶ (B)^A_k`.
pub fn arrow_holds_hom(
    flavor: Flavor,
    c: &Object,
    b: &Object,
    a: &Object,
    k: usize,
    config: &SearchConfig,
) -> Result<ArrowCertificate> {
    let inst = ArrowInstance::build(flavor, c, b, a, config.bound)?;
    let found = search_coloring(inst.vertices.len(), &inst.edges, k, config)?;
    if found.is_none() && (k as u64).checked_pow(inst.vertices.len() as u32).is_some_and(|t| t <= CROSS_CHECK_LIMIT) {
        assert!(full_enumeration(inst.vertices.len(), &inst.edges, k).is_none(), "refutation search missed a coloring");
    }
    Ok(certificate(&inst, k, found.map(|c| c.into_iter().map(|x| x as usize + 1).collect())))
}

fn certificate(inst: &ArrowInstance, k: usize, coloring: Option<Vec<usize>>) -> ArrowCertificate {
    let mut cert = ArrowCertificate {
        flavor: inst.flavor,
        k,
        verdict: Verdict::Holds,
        hom_ac: inst.vertices.len(),
        hom_bc: inst.copies.len(),
        hom_ab: inst.hom_ab.len(),
        coloring: None,
        morphisms: Vec::new(),
        audit: Vec::new(),
    };
    if let Some(coloring) = coloring {
        cert.audit = inst
            .edges
            .iter()
            .enumerate()
            .map(|(w, e)| {
                let first = e[0];
                let second = *e.iter().find(|&&u| coloring[u] != coloring[first]).expect("edge is bicolored");
                BicoloredPair { copy: w, first, second }
            })
            .collect();
        cert.verdict = Verdict::Fails;
        cert.coloring = Some(coloring);
        cert.morphisms = inst.vertices.clone();
    }
    cert
}

/// A coloring of `hom(A, C)` refuting the arrow, if one exists.
pub fn find_bad_coloring(
    flavor: Flavor,
    c: &Object,
    b: &Object,
    a: &Object,
    k: usize,
    config: &SearchConfig,
) -> Result<Option<Vec<usize>>> {
    Ok(arrow_holds_hom(flavor, c, b, a, k, config)?.coloring)
}

/// Audits a coloring of `hom(A, C)` (indexed in enumeration order, colors
/// `1..=k`) directly from the morphisms: returns a bicolored pair for every
/// copy of `B`, or `None` if some copy is monochromatic.
pub fn verify_coloring(
    flavor: Flavor,
    c: &Object,
    b: &Object,
    a: &Object,
    k: usize,
    coloring: &[usize],
) -> Result<Option<Vec<BicoloredPair>>> {
    let hom_ac = homs(flavor, a, c)?;
    if coloring.len() != hom_ac.len() || coloring.iter().any(|&x| x == 0 || x > k) {
        return Err(Error::Invalid("coloring does not match hom(A, C) or uses colors outside 1..=k".into()));
    }
    let hom_ab = homs(flavor, a, b)?;
    let color = |m: &[usize]| -> (usize, usize) {
        let i = hom_ac.iter().position(|h| h == m).expect("composite lies in hom(A, C)");
        (i, coloring[i])
    };
    let mut audit = Vec::new();
    for (copy, w) in homs(flavor, b, c)?.iter().enumerate() {
        let composites: Vec<(usize, usize)> = hom_ab.iter().map(|f| color(&compose(flavor, w, f))).collect();
        let (first, c0) = composites[0];
        match composites.iter().find(|&&(_, c)| c != c0) {
            Some(&(second, _)) => audit.push(BicoloredPair { copy, first, second }),
            None => return Ok(None),
        }
    }
    Ok(Some(audit))
}

/// Re-checks a fails certificate against the objects.
pub fn verify_certificate(c: &Object, b: &Object, a: &Object, cert: &ArrowCertificate) -> Result<bool> {
    let Some(coloring) = &cert.coloring else {
        return Ok(false);
    };
    if homs(cert.flavor, a, c)? != cert.morphisms {
        return Ok(false);
    }
    Ok(verify_coloring(cert.flavor, c, b, a, cert.k, coloring)?.is_some())
}

/// Colors an embedding `e` of a two-element poset by whether `e(0) < e(1)` in
/// the index order: 1 if so, 2 otherwise.
pub fn sierpinski_coloring(morphisms: &[Vec<usize>]) -> Vec<usize> {
    morphisms.iter().map(|e| if e[0] < e[1] { 1 } else { 2 }).collect()
}

/// Pulls an embedding coloring back along `J`: a surjection `f : C ↠ A` in
/// `morphisms` receives the color of the embedding `J(f) : J(A) ↪ J(C)`.
pub fn dual_coloring(
    c: &DistLattice,
    a: &DistLattice,
    morphisms: &[Vec<usize>],
    color: impl Fn(&[usize]) -> usize,
) -> Result<Vec<usize>> {
    morphisms
        .iter()
        .map(|m| {
            let f = validate_homomorphism(m.clone(), c, a, true)?;
            Ok(color(&j_morphism(&f, c, a)))
        })
        .collect()
}

/// The first `C` (by size, then enumeration order of posets and their linear
/// extensions) with `C ⟶ (B)^A_k` among linearly ordered posets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamseyWitness {
    pub c: LinearOrderedPoset,
    pub certificate: ArrowCertificate,
    /// Candidates rejected before the witness.
    pub rejected: usize,
}

pub fn find_ramsey_witness(
    b: &LinearOrderedPoset,
    a: &LinearOrderedPoset,
    k: usize,
    max_size: usize,
    config: &SearchConfig,
) -> Result<RamseyWitness> {
    let (bo, ao) = (Object::OrderedPoset(b.clone()), Object::OrderedPoset(a.clone()));
    if homs(Flavor::OrderedPosetEmb, &ao, &bo)?.is_empty() {
        return Err(Error::EmptyHomAB);
    }
    let mut rejected = 0;
    for n in 1..=max_size {
        for q in enumerate_posets_up_to_iso_bounded(n, max_size)? {
            for c in linear_extensions(&q) {
                let co = Object::OrderedPoset(c.clone());
                let certificate = arrow_holds_hom(Flavor::OrderedPosetEmb, &co, &bo, &ao, k, config)?;
                if certificate.holds() {
                    return Ok(RamseyWitness { c, certificate, rejected });
                }
                rejected += 1;
            }
        }
    }
    Err(Error::BoundExceeded { what: "no Ramsey witness within size bound".into(), size: max_size, bound: max_size })
}

/// An arrow among naturally ordered lattices obtained by applying `O′` to an
/// arrow among linearly ordered posets, with an independently computed verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransportedArrow {
    pub a: OrderedLattice,
    pub b: OrderedLattice,
    pub c: OrderedLattice,
    pub certificate: ArrowCertificate,
}

pub fn transport_witness(
    a: &LinearOrderedPoset,
    b: &LinearOrderedPoset,
    c: &LinearOrderedPoset,
    k: usize,
    config: &SearchConfig,
) -> Result<TransportedArrow> {
    let a = OrderedLattice::from_linear_poset(a)?;
    let b = OrderedLattice::from_linear_poset(b)?;
    let c = OrderedLattice::from_linear_poset(c)?;
    let certificate = arrow_holds_hom(
        Flavor::OrderedLatticePos,
        &Object::OrderedLattice(c.clone()),
        &Object::OrderedLattice(b.clone()),
        &Object::OrderedLattice(a.clone()),
        k,
        config,
    )?;
    Ok(TransportedArrow { a, b, c, certificate })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceFormCertificate {
    pub k: usize,
    pub verdict: Verdict,
    /// The colored set `Con⁺(N, L/Φ)`, as block partitions.
    pub colored: Vec<Vec<Vec<usize>>>,
    /// `Con⁺(N, L)`, as block partitions.
    pub refinements: Vec<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coloring: Option<Vec<usize>>,
    /// Verdict of the same arrow phrased with positive surjections.
    pub hom_form: Verdict,
}

/// `N ⟶ (L)^{L/Φ}_k` phrased with positive congruences: every k-coloring of
/// `Con⁺(N, L/Φ)` admits `Ψ ∈ Con⁺(N, L)` whose coarsenings in `Con⁺(N, L/Φ)`
/// are monochromatic.
///
/// Panics if the verdict disagrees with the hom form.
pub fn dual_arrow_congruence_form(
    n: &OrderedLattice,
    l: &OrderedLattice,
    phi: &Congruence,
    k: usize,
    config: &SearchConfig,
) -> Result<CongruenceFormCertificate> {
    let phi = PositiveCongruence::new(phi.clone(), l)?;
    let (quot, _) = quotient_natural_order(l, &phi)?;
    let colored = con_plus(n, &quot)?;
    if colored.len() > config.bound {
        return Err(Error::BoundExceeded { what: "Con⁺(N, L/Φ)".into(), size: colored.len(), bound: config.bound });
    }
    let refinements = con_plus(n, l)?;
    let edges: Vec<Vec<usize>> = refinements
        .iter()
        .map(|psi| (0..colored.len()).filter(|&i| colored[i].congruence.contains(&psi.congruence)).collect())
        .collect();
    let found = search_coloring(colored.len(), &edges, k, config)?;
    let verdict = if found.is_some() { Verdict::Fails } else { Verdict::Holds };

    let hom_form = arrow_holds_hom(
        Flavor::OrderedLatticePos,
        &Object::OrderedLattice(n.clone()),
        &Object::OrderedLattice(l.clone()),
        &Object::OrderedLattice(quot),
        k,
        config,
    )?
    .verdict;
    assert_eq!(verdict, hom_form, "congruence form and hom form disagree");

    let blocks = |v: &[PositiveCongruence]| v.iter().map(|p| p.congruence.blocks().to_vec()).collect();
    Ok(CongruenceFormCertificate {
        k,
        verdict,
        colored: blocks(&colored),
        refinements: blocks(&refinements),
        coloring: found.map(|c| c.into_iter().map(|x| x as usize + 1).collect()),
        hom_form,
    })
}

/// Kernels of a list of surjections `C ↠ A`.
pub fn kernels(c: &DistLattice, a: &DistLattice, morphisms: &[Vec<usize>]) -> Result<Vec<Congruence>> {
    morphisms.iter().map(|m| Ok(kernel(&validate_homomorphism(m.clone(), c, a, true)?, c))).collect()
}

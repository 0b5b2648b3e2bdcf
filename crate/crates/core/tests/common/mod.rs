//! Independent brute-force oracles. None of these call the enumerators under test.
#![allow(dead_code)]

use lattice_ramsey::poset::enumerate_posets_up_to_iso;
use lattice_ramsey::{DistLattice, Poset};

pub fn posets_up_to(n: usize) -> Vec<Poset> {
    (1..=n).flat_map(|k| enumerate_posets_up_to_iso(k).unwrap()).collect()
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                go(cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Position arrays of all linear extensions, sorted.
pub fn brute_linear_extensions(p: &Poset) -> Vec<Vec<usize>> {
    let n = p.len();
    let mut out: Vec<Vec<usize>> = permutations(n)
        .into_iter()
        .filter(|pos| (0..n).all(|x| (0..n).all(|y| !p.lt(x, y) || pos[x] < pos[y])))
        .collect();
    out.sort();
    out
}

pub fn brute_down_sets(p: &Poset) -> Vec<u64> {
    let n = p.len();
    (0..1u64 << n)
        .filter(|&m| (0..n).all(|x| m >> x & 1 == 0 || (0..n).all(|y| !p.leq(y, x) || m >> y & 1 == 1)))
        .collect()
}

/// All maps `0..n → 0..m`, lexicographic.
pub fn all_maps(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0; n];
    if m == 0 {
        return if n == 0 { vec![cur] } else { out };
    }
    loop {
        out.push(cur.clone());
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < m {
                break;
            }
            cur[i] = 0;
        }
    }
}

pub fn brute_embeddings(a: &Poset, c: &Poset) -> Vec<Vec<usize>> {
    let n = a.len();
    all_maps(n, c.len())
        .into_iter()
        .filter(|f| (0..n).all(|x| (0..n).all(|y| (x == y) == (f[x] == f[y]) && a.leq(x, y) == c.leq(f[x], f[y]))))
        .collect()
}

/// Surjective {0,1}-lattice homomorphisms by exhaustive search over all maps.
pub fn brute_surjections(l: &DistLattice, k: &DistLattice) -> Vec<Vec<usize>> {
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

fn canonical_blocks(label: &[usize]) -> Vec<Vec<usize>> {
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut seen: Vec<(usize, usize)> = Vec::new();
    for (x, &c) in label.iter().enumerate() {
        match seen.iter().find(|(l, _)| *l == c) {
            Some(&(_, b)) => blocks[b].push(x),
            None => {
                seen.push((c, blocks.len()));
                blocks.push(vec![x]);
            }
        }
    }
    blocks.sort();
    blocks
}

fn substitution_holds(l: &DistLattice, label: &[usize]) -> bool {
    let n = l.len();
    (0..n).all(|x| {
        (0..n).all(|y| {
            label[x] != label[y]
                || (0..n)
                    .all(|z| label[l.join(x, z)] == label[l.join(y, z)] && label[l.meet(x, z)] == label[l.meet(y, z)])
        })
    })
}

/// Every set partition of the elements, kept if it has the substitution property.
///
/// Partitions are generated as restricted growth strings. A prefix is dropped
/// as soon as two labelled elements are related while some join or meet with a
/// labelled third element lands in different labelled classes; this only cuts
/// branches none of whose completions can be a congruence.
pub fn partition_congruences(l: &DistLattice) -> Vec<Vec<Vec<usize>>> {
    fn go(l: &DistLattice, label: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        let n = l.len();
        let k = label.len();
        if k > 0 {
            let x = k - 1;
            for y in 0..k {
                if label[x] != label[y] {
                    continue;
                }
                for z in 0..k {
                    for (a, b) in [(l.join(x, z), l.join(y, z)), (l.meet(x, z), l.meet(y, z))] {
                        if a < k && b < k && label[a] != label[b] {
                            return;
                        }
                    }
                }
            }
        }
        if k == n {
            if substitution_holds(l, label) {
                out.push(canonical_blocks(label));
            }
            return;
        }
        for c in 0..=max {
            label.push(c);
            go(l, label, if c == max { max + 1 } else { max }, out);
            label.pop();
        }
    }
    let mut out = Vec::new();
    go(l, &mut Vec::new(), 0, &mut out);
    out.sort();
    out
}

/// Congruences generated as closures of unions of principal congruences.
pub fn closure_congruences(l: &DistLattice) -> Vec<Vec<Vec<usize>>> {
    let n = l.len();
    let close = |mut parent: Vec<usize>| -> Vec<usize> {
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut c = x;
            while p[c] != r {
                let next = p[c];
                p[c] = r;
                c = next;
            }
            r
        }
        loop {
            let mut changed = false;
            for x in 0..n {
                for y in 0..n {
                    if find(&mut parent, x) != find(&mut parent, y) {
                        continue;
                    }
                    for z in 0..n {
                        for (a, b) in [(l.join(x, z), l.join(y, z)), (l.meet(x, z), l.meet(y, z))] {
                            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                            if ra != rb {
                                parent[ra.max(rb)] = ra.min(rb);
                                changed = true;
                            }
                        }
                    }
                }
            }
            if !changed {
                return (0..n).map(|x| find(&mut parent, x)).collect();
            }
        }
    };
    let identity: Vec<usize> = (0..n).collect();
    let mut seen = vec![canonical_blocks(&identity)];
    let mut frontier = vec![identity];
    while let Some(label) = frontier.pop() {
        for a in 0..n {
            for b in a + 1..n {
                if label[a] == label[b] {
                    continue;
                }
                let mut parent = label.clone();
                let (ra, rb) = (parent[a], parent[b]);
                for p in parent.iter_mut() {
                    if *p == rb {
                        *p = ra;
                    }
                }
                let merged = close(parent);
                let blocks = canonical_blocks(&merged);
                if !seen.contains(&blocks) {
                    seen.push(blocks);
                    frontier.push(merged);
                }
            }
        }
    }
    seen.sort();
    seen
}

/// `x ⊏ y` by literal comparison of δ-vectors: the largest position where they
/// differ decides, and there `x` has 0.
pub fn delta_precedes(l: &DistLattice, irr_order: &[usize], x: usize, y: usize) -> bool {
    let delta = |e: usize| -> Vec<bool> { irr_order.iter().map(|&t| l.leq(l.irreducibles()[t], e)).collect() };
    let (dx, dy) = (delta(x), delta(y));
    for s in (0..dx.len()).rev() {
        if dx[s] != dy[s] {
            return !dx[s] && dy[s];
        }
    }
    false
}

/// Positivity straight from the definition, computing `x − N` with lattice joins.
pub fn literal_positive(f: &[usize], l: &DistLattice, lrank: &[usize], k: &DistLattice, krank: &[usize]) -> bool {
    let _ = k;
    let n = l.len();
    let collapsed: Vec<bool> = (0..n).map(|x| (0..n).any(|y| l.lt(y, x) && f[y] == f[x])).collect();
    let minus = |x: usize| -> usize {
        l.irreducibles().iter().filter(|&&j| l.leq(j, x) && !collapsed[j]).fold(l.bottom(), |acc, &j| l.join(acc, j))
    };
    let res: Vec<usize> = (0..n).map(minus).collect();
    (0..n).all(|x| (0..n).all(|y| lrank[res[x]] > lrank[res[y]] || krank[f[x]] <= krank[f[y]]))
}

/// Whether some k-coloring of `0..n` leaves every edge bicolored, by full enumeration.
pub fn some_good_coloring(n: usize, edges: &[Vec<usize>], k: usize) -> bool {
    all_maps(n, k).into_iter().any(|c| edges.iter().all(|e| e.iter().any(|&u| c[u] != c[e[0]])))
}

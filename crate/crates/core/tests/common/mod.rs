//! Reference implementations written without the library's topology or
//! invariant code. Each works straight from the crossing tuples.

#![allow(dead_code)]

use knotcert_core::diagram::{Crossing, Sign};
use knotcert_core::LinkDiagram;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

/// Where each arc starts and ends: (crossing, position) pairs.
pub fn arc_ends(crossings: &[Crossing]) -> Vec<[(usize, usize); 2]> {
    let arcs = crossings.len() * 2;
    let mut ends = vec![[(usize::MAX, 0); 2]; arcs];
    for (c, x) in crossings.iter().enumerate() {
        for p in 0..4 {
            let incoming = match p {
                0 => true,
                2 => false,
                1 => x.sign.is_positive(),
                _ => !x.sign.is_positive(),
            };
            let slot = if incoming { 1 } else { 0 };
            ends[x.ends[p]][slot] = (c, p);
        }
    }
    ends
}

/// Faces by corner gluing: corner `(c, p)` sits between positions `p` and
/// `p + 1` at crossing `c`. Walking an arc from tail `(c1, p1)` to head
/// `(c2, p2)`, corner `(c1, p1)` and corner `(c2, p2 - 1)` lie on its left,
/// corners `(c1, p1 - 1)` and `(c2, p2)` on its right.
///
/// Returns the face count and `(left, right)` face ids per arc.
pub fn corner_faces(crossings: &[Crossing]) -> (usize, Vec<(usize, usize)>) {
    let n = crossings.len();
    let corner = |c: usize, p: usize| 4 * c + p % 4;
    let mut uf = UnionFind::new(4 * n);
    let ends = arc_ends(crossings);
    for &[(c1, p1), (c2, p2)] in &ends {
        uf.union(corner(c1, p1), corner(c2, p2 + 3));
        uf.union(corner(c1, p1 + 3), corner(c2, p2));
    }
    let mut ids = std::collections::BTreeMap::new();
    let mut sides = Vec::new();
    for &[(c1, p1), _] in &ends {
        let l = uf.find(corner(c1, p1));
        let r = uf.find(corner(c1, p1 + 3));
        let next = ids.len();
        let l = *ids.entry(l).or_insert(next);
        let next = ids.len();
        let r = *ids.entry(r).or_insert(next);
        sides.push((l, r));
    }
    for k in 0..4 * n {
        let root = uf.find(k);
        let next = ids.len();
        ids.entry(root).or_insert(next);
    }
    (ids.len(), sides)
}

/// Connected components of the crossing graph, ignoring the listed arcs.
pub fn graph_components(crossings: &[Crossing], skip: &[usize]) -> Vec<usize> {
    let n = crossings.len();
    let mut uf = UnionFind::new(n);
    for (a, &[(c1, _), (c2, _)]) in arc_ends(crossings).iter().enumerate() {
        if !skip.contains(&a) {
            uf.union(c1, c2);
        }
    }
    (0..n).map(|c| uf.find(c)).collect()
}

pub fn graph_component_count(crossings: &[Crossing]) -> usize {
    let comp = graph_components(crossings, &[]);
    let mut roots: Vec<usize> = comp.clone();
    roots.sort_unstable();
    roots.dedup();
    roots.len()
}

/// `V - E + F` for every graph component, faces counted by corner gluing.
pub fn euler_by_component(crossings: &[Crossing]) -> Vec<i64> {
    let comp = graph_components(crossings, &[]);
    let (_, sides) = corner_faces(crossings);
    let mut chi = std::collections::BTreeMap::<usize, i64>::new();
    for &c in &comp {
        *chi.entry(c).or_default() += 1;
    }
    let ends = arc_ends(crossings);
    let mut faces_seen = std::collections::BTreeSet::new();
    for (a, &(l, r)) in sides.iter().enumerate() {
        let root = comp[ends[a][0].0];
        *chi.get_mut(&root).unwrap() -= 1;
        for f in [l, r] {
            if faces_seen.insert(f) {
                *chi.get_mut(&root).unwrap() += 1;
            }
        }
    }
    chi.into_values().collect()
}

/// Every 2-point cut with crossings on both sides, as
/// `(arc pair, smaller side size)`, found purely from graph connectivity:
/// in a plane graph a minimal 2-edge cut is a 2-cycle of the dual.
pub fn two_edge_cuts(crossings: &[Crossing]) -> Vec<([usize; 2], usize)> {
    let arcs = crossings.len() * 2;
    let mut cuts = Vec::new();
    for a in 0..arcs {
        for b in a + 1..arcs {
            let comp = graph_components(crossings, &[a, b]);
            let first = comp[0];
            let near = comp.iter().filter(|&&c| c == first).count();
            let mut roots = comp.clone();
            roots.sort_unstable();
            roots.dedup();
            if roots.len() == 2 {
                cuts.push(([a, b], near.min(crossings.len() - near)));
            }
        }
    }
    cuts
}

/// Closed dual walks of length two through distinct arcs, from corner faces.
pub fn dual_two_cycles(crossings: &[Crossing]) -> Vec<[usize; 2]> {
    let (_, sides) = corner_faces(crossings);
    let key = |(l, r): (usize, usize)| (l.min(r), l.max(r));
    let mut out = Vec::new();
    for a in 0..sides.len() {
        for b in a + 1..sides.len() {
            if key(sides[a]) == key(sides[b]) {
                out.push([a, b]);
            }
        }
    }
    out
}

/// Crossing signs after reversing the flagged components, from first
/// principles: reversing exactly one strand at a crossing flips its sign.
pub fn signs_under(d: &LinkDiagram, flips: &[bool]) -> Vec<Sign> {
    (0..d.crossing_count())
        .map(|c| {
            let x = d.crossing(c);
            let under = d.arcs()[x.ends[0]].component;
            let over = d.arcs()[x.ends[1]].component;
            if flips[under] != flips[over] {
                x.sign.flipped()
            } else {
                x.sign
            }
        })
        .collect()
}

/// All orientations (as component flips, first component fixed) making
/// every crossing positive.
pub fn positive_orientations(d: &LinkDiagram) -> Vec<Vec<bool>> {
    let k = d.component_count();
    assert!(k <= 16, "exhaustive search is for small links");
    let mut out = Vec::new();
    for mask in 0..(1u32 << k.saturating_sub(1)) {
        let flips: Vec<bool> = (0..k).map(|i| i > 0 && mask >> (i - 1) & 1 == 1).collect();
        if signs_under(d, &flips).iter().all(|s| s.is_positive()) {
            out.push(flips);
        }
    }
    out
}

/// lk(i, j) as the signed count of crossings where `i` passes over `j`.
pub fn over_linking(d: &LinkDiagram) -> Vec<Vec<i64>> {
    let k = d.component_count();
    let mut m = vec![vec![0i64; k]; k];
    for x in d.crossings() {
        let under = d.arcs()[x.ends[0]].component;
        let over = d.arcs()[x.ends[1]].component;
        if under != over {
            m[over][under] += x.sign.value();
        }
    }
    m
}

/// Gauss code text of a diagram: one component per crossing component,
/// then one empty component per free loop.
pub fn gauss_text(d: &LinkDiagram) -> String {
    let mut comps: Vec<String> = d
        .crossing_components()
        .iter()
        .map(|walk| {
            walk.iter()
                .map(|&a| {
                    let head = d.arcs()[a].head;
                    let tag = if head.position % 2 == 1 { 'O' } else { 'U' };
                    let sign = if d.crossing(head.crossing).sign.is_positive() {
                        '+'
                    } else {
                        '-'
                    };
                    format!("{tag}{}{sign}", head.crossing + 1)
                })
                .collect()
        })
        .collect();
    comps.extend(std::iter::repeat_n(String::new(), d.free_loops()));
    comps.join(";")
}

/// Random single-component Gauss sequence on `n` symbols.
pub fn random_gauss<R: Rng>(rng: &mut R, n: usize) -> String {
    let mut seq: Vec<usize> = (0..n).flat_map(|i| [i, i]).collect();
    for i in (1..seq.len()).rev() {
        let j = rng.gen_range(0..=i);
        seq.swap(i, j);
    }
    let over_first: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let positive: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let mut seen = vec![false; n];
    seq.iter()
        .map(|&s| {
            let over = over_first[s] != seen[s];
            seen[s] = true;
            format!(
                "{}{}{}",
                if over { 'O' } else { 'U' },
                s + 1,
                if positive[s] { '+' } else { '-' }
            )
        })
        .collect()
}

/// Builds crossing tuples for a one-component Gauss word directly and tests
/// planarity by Euler characteristic. `None` when the word repeats a symbol
/// on the same level (not a classical code at all).
pub fn gauss_planar(word: &str) -> Option<bool> {
    let tokens: Vec<(bool, usize, bool)> = word
        .split_inclusive(['+', '-'])
        .map(|t| {
            let over = t.starts_with('O');
            let label: usize = t[1..t.len() - 1].parse().unwrap();
            (over, label, t.ends_with('+'))
        })
        .collect();
    let m = tokens.len();
    let n = m / 2;
    let mut under = vec![usize::MAX; n + 1];
    let mut over = vec![usize::MAX; n + 1];
    let mut sign = vec![true; n + 1];
    for (i, &(o, label, s)) in tokens.iter().enumerate() {
        let slot = if o { &mut over } else { &mut under };
        if slot[label] != usize::MAX {
            return None;
        }
        slot[label] = i;
        sign[label] = s;
    }
    // arc i runs from token i to token i + 1
    let crossings: Vec<Crossing> = (1..=n)
        .map(|l| {
            let (u, o) = (under[l], over[l]);
            let (ua, ud) = ((u + m - 1) % m, u);
            let (oa, od) = ((o + m - 1) % m, o);
            if sign[l] {
                Crossing::new([ua, oa, ud, od], Sign::Positive)
            } else {
                Crossing::new([ua, od, ud, oa], Sign::Negative)
            }
        })
        .collect();
    Some(euler_by_component(&crossings).iter().all(|&c| c == 2))
}

/// Gauss's parity condition: an even number of symbols between the two
/// occurrences of each symbol. Necessary for planarity.
pub fn gauss_parity_holds(word: &str) -> bool {
    let labels: Vec<&str> = word
        .split_inclusive(['+', '-'])
        .map(|t| &t[1..t.len() - 1])
        .collect();
    labels
        .iter()
        .enumerate()
        .all(|(i, l)| match labels[i + 1..].iter().position(|m| m == l) {
            Some(gap) => gap % 2 == 0,
            None => true,
        })
}

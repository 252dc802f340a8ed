//! Digraph isomorphism and automorphism search by backtracking over vertex
//! maps, pruned by distance-profile signatures.  Meant for desk-scale
//! instances (a couple hundred vertices for isomorphism, less for full
//! automorphism enumeration), where canonical-labeling machinery would be
//! overkill.

use crate::digraph::Digraph;
use crate::perm::Permutation;
use std::collections::VecDeque;

struct GraphData {
    n: usize,
    adj: Vec<Vec<u8>>,      // edge multiplicities
    dist_from: Vec<Vec<usize>>,
    dist_to: Vec<Vec<usize>>,
    sig: Vec<Vec<usize>>,   // sorted invariant profile per vertex
}

impl GraphData {
    fn new(g: &Digraph) -> Self {
        let n = g.n();
        let mut adj = vec![vec![0u8; n]; n];
        for (u, v) in g.edges() {
            adj[u][v] = adj[u][v].saturating_add(1);
        }
        let dist_from: Vec<Vec<usize>> = (0..n).map(|v| g.distances_from(v)).collect();
        let dist_to: Vec<Vec<usize>> = (0..n).map(|v| g.distances_to(v)).collect();
        let sig = (0..n)
            .map(|v| {
                let mut s: Vec<usize> = dist_from[v].clone();
                let mut t: Vec<usize> = dist_to[v].clone();
                s.sort_unstable();
                t.sort_unstable();
                s.extend(t);
                let mut m: Vec<usize> = adj[v].iter().map(|&x| x as usize).collect();
                m.sort_unstable();
                s.extend(m.into_iter().rev().take(4));
                s
            })
            .collect();
        GraphData {
            n,
            adj,
            dist_from,
            dist_to,
            sig,
        }
    }

    /// Vertex visit order: BFS over the underlying undirected structure from
    /// vertex 0, so each new vertex touches an assigned one.
    fn visit_order(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.n);
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                order.push(v);
                for w in 0..self.n {
                    if !seen[w] && (self.adj[v][w] > 0 || self.adj[w][v] > 0) {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        order
    }
}

struct Matcher<'a> {
    g: &'a GraphData,
    h: &'a GraphData,
    order: Vec<usize>,
    map: Vec<usize>,      // g vertex -> h vertex or MAX
    used: Vec<bool>,      // h vertex assigned
    found: Vec<Permutation>,
    all: bool,
}

const UNSET: usize = usize::MAX;

impl<'a> Matcher<'a> {
    fn compatible(&self, u: usize, x: usize) -> bool {
        if self.g.sig[u] != self.h.sig[x] {
            return false;
        }
        for w in 0..self.g.n {
            let y = self.map[w];
            if y == UNSET {
                continue;
            }
            if self.g.adj[u][w] != self.h.adj[x][y]
                || self.g.adj[w][u] != self.h.adj[y][x]
                || self.g.dist_from[u][w] != self.h.dist_from[x][y]
                || self.g.dist_to[u][w] != self.h.dist_to[x][y]
            {
                return false;
            }
        }
        true
    }

    fn search(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            self.found
                .push(Permutation::from_images(self.map.clone()).unwrap());
            return !self.all;
        }
        let u = self.order[depth];
        if self.map[u] != UNSET {
            return self.search(depth + 1);
        }
        for x in 0..self.h.n {
            if !self.used[x] && self.compatible(u, x) {
                self.map[u] = x;
                self.used[x] = true;
                if self.search(depth + 1) {
                    return true;
                }
                self.map[u] = UNSET;
                self.used[x] = false;
            }
        }
        false
    }
}

fn run_search(
    g: &Digraph,
    h: &Digraph,
    forced: &[(usize, usize)],
    all: bool,
) -> Vec<Permutation> {
    if g.n() != h.n() || g.degree() != h.degree() {
        return Vec::new();
    }
    let gd = GraphData::new(g);
    let hd = GraphData::new(h);
    {
        let mut gs = gd.sig.clone();
        let mut hs = hd.sig.clone();
        gs.sort();
        hs.sort();
        if gs != hs {
            return Vec::new();
        }
    }
    let mut m = Matcher {
        g: &gd,
        h: &hd,
        order: gd.visit_order(),
        map: vec![UNSET; gd.n],
        used: vec![false; hd.n],
        found: Vec::new(),
        all,
    };
    for &(u, x) in forced {
        if !m.compatible(u, x) {
            return Vec::new();
        }
        m.map[u] = x;
        m.used[x] = true;
    }
    m.search(0);
    m.found
}

/// An edge-multiset-preserving vertex bijection from `g` onto `h`, if one
/// exists.  Deterministic: the lexicographically first map in visit order.
pub fn isomorphic(g: &Digraph, h: &Digraph) -> Option<Permutation> {
    run_search(g, h, &[], false).into_iter().next()
}

/// Like [`isomorphic`] but with `src -> dst` pinned.
pub fn isomorphism_mapping(g: &Digraph, h: &Digraph, src: usize, dst: usize) -> Option<Permutation> {
    run_search(g, h, &[(src, dst)], false).into_iter().next()
}

/// The full automorphism group as a list, identity first, in deterministic
/// order.
pub fn automorphisms(g: &Digraph) -> Vec<Permutation> {
    let mut auts = run_search(g, g, &[], true);
    auts.sort_by(|p, q| p.images().cmp(q.images()));
    debug_assert!(auts.first().is_some_and(|p| p.is_identity()));
    auts
}

pub fn automorphism_order(g: &Digraph) -> usize {
    automorphisms(g).len()
}

/// Brute-force vertex-transitivity oracle: an automorphism moving 0 to every
/// other vertex must exist.
pub fn is_vertex_transitive(g: &Digraph) -> bool {
    (1..g.n()).all(|v| isomorphism_mapping(g, g, 0, v).is_some())
}

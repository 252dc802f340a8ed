//! Regular loopless multidigraphs stored as ordered out-ports, with exact
//! diameters by per-source BFS, line digraphs, and 1-factorization by
//! bipartite matching.

use crate::perm::{PermError, Permutation};
use std::collections::VecDeque;
use thiserror::Error;

pub const UNREACHABLE: usize = usize::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DigraphError {
    #[error("vertex {0} has {1} out-ports, expected {2}")]
    BadOutDegree(usize, usize, usize),
    #[error("vertex {0} has in-degree {1}, expected {2}")]
    BadInDegree(usize, usize, usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("out-neighbor {0} out of range for {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("not strongly connected: no path from {from} to {to}")]
    NotStronglyConnected { from: usize, to: usize },
    #[error("factor {0} is not a derangement (fixed point {1})")]
    FactorNotDerangement(usize, usize),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// A d-regular loopless multidigraph on `{0..n-1}`; `ports[v]` lists the d
/// out-neighbors of `v` in port order (repeats encode multi-edges).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Digraph {
    n: usize,
    d: usize,
    ports: Vec<Vec<usize>>,
    strongly_connected: bool,
}

impl Digraph {
    pub fn from_ports(ports: Vec<Vec<usize>>) -> Result<Self, DigraphError> {
        let n = ports.len();
        let d = ports.first().map_or(0, |p| p.len());
        let mut indeg = vec![0usize; n];
        for (v, out) in ports.iter().enumerate() {
            if out.len() != d {
                return Err(DigraphError::BadOutDegree(v, out.len(), d));
            }
            for &w in out {
                if w >= n {
                    return Err(DigraphError::VertexOutOfRange(w, n));
                }
                if w == v {
                    return Err(DigraphError::Loop(v));
                }
                indeg[w] += 1;
            }
        }
        for (v, &k) in indeg.iter().enumerate() {
            if k != d {
                return Err(DigraphError::BadInDegree(v, k, d));
            }
        }
        let mut g = Digraph {
            n,
            d,
            ports,
            strongly_connected: false,
        };
        g.strongly_connected = g.compute_strong_connectivity();
        Ok(g)
    }

    /// Digraph whose port `i` of vertex `v` is `factors[i](v)`.
    pub fn from_factors(factors: &[Permutation]) -> Result<Self, DigraphError> {
        let n = factors.first().map_or(0, |f| f.size());
        for (i, f) in factors.iter().enumerate() {
            if f.size() != n {
                return Err(PermError::SizeMismatch(f.size(), n).into());
            }
            if let Some(v) = (0..n).find(|&v| f.apply(v) == v) {
                return Err(DigraphError::FactorNotDerangement(i, v));
            }
        }
        let ports = (0..n)
            .map(|v| factors.iter().map(|f| f.apply(v)).collect())
            .collect();
        Self::from_ports(ports)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn ports(&self, v: usize) -> &[usize] {
        &self.ports[v]
    }

    pub fn port_table(&self) -> &[Vec<usize>] {
        &self.ports
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.strongly_connected
    }

    fn compute_strong_connectivity(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let fwd = self.bfs(0, &self.ports);
        if fwd.iter().any(|&x| x == UNREACHABLE) {
            return false;
        }
        let back = self.bfs(0, &self.reverse_ports());
        back.iter().all(|&x| x != UNREACHABLE)
    }

    fn reverse_ports(&self) -> Vec<Vec<usize>> {
        let mut rev = vec![Vec::with_capacity(self.d); self.n];
        for (v, out) in self.ports.iter().enumerate() {
            for &w in out {
                rev[w].push(v);
            }
        }
        rev
    }

    fn bfs(&self, src: usize, adj: &[Vec<usize>]) -> Vec<usize> {
        let mut dist = vec![UNREACHABLE; self.n];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if dist[w] == UNREACHABLE {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// BFS distances from `v`; `UNREACHABLE` marks unreached vertices.
    pub fn distances_from(&self, v: usize) -> Vec<usize> {
        self.bfs(v, &self.ports)
    }

    pub fn distances_to(&self, v: usize) -> Vec<usize> {
        self.bfs(v, &self.reverse_ports())
    }

    pub fn eccentricity(&self, v: usize) -> Result<usize, DigraphError> {
        let dist = self.distances_from(v);
        match dist.iter().position(|&x| x == UNREACHABLE) {
            Some(to) => Err(DigraphError::NotStronglyConnected { from: v, to }),
            None => Ok(dist.into_iter().max().unwrap_or(0)),
        }
    }

    /// Exact directed diameter by one BFS per source.
    pub fn diameter(&self) -> Result<usize, DigraphError> {
        let mut best = 0;
        for v in 0..self.n {
            best = best.max(self.eccentricity(v)?);
        }
        Ok(best)
    }

    /// Diameter with an early exit: `None` as soon as some eccentricity
    /// exceeds `cutoff` (or the digraph is not strongly connected).
    pub fn diameter_at_most(&self, cutoff: usize) -> Option<usize> {
        let mut best = 0;
        for v in 0..self.n {
            match self.eccentricity(v) {
                Ok(e) if e <= cutoff => best = best.max(e),
                _ => return None,
            }
        }
        Some(best)
    }

    /// Edge list in (source, port) order; multi-edges appear once per port.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.ports
            .iter()
            .enumerate()
            .flat_map(|(v, out)| out.iter().map(move |&w| (v, w)))
    }

    /// Sorted edge multiset, for equality up to port order.
    pub fn edge_multiset(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<_> = self.edges().collect();
        e.sort_unstable();
        e
    }

    pub fn count_edges(&self, u: usize, v: usize) -> usize {
        self.ports[u].iter().filter(|&&w| w == v).count()
    }

    /// Line digraph: vertex `u*d + p` is the edge out of port `p` of `u`;
    /// its out-edges follow the head's ports.
    pub fn line_digraph(&self) -> Digraph {
        let d = self.d;
        let mut ports = Vec::with_capacity(self.n * d);
        for u in 0..self.n {
            for p in 0..d {
                let head = self.ports[u][p];
                ports.push((0..d).map(|q| head * d + q).collect());
            }
        }
        Digraph::from_ports(ports).expect("line digraph of a regular loopless digraph is valid")
    }

    /// Count of ordered pairs `(u,v)` where both `(u,v)` and `(v,u)` are
    /// edges (multiplicity-aware).
    pub fn reciprocal_edge_count(&self) -> usize {
        let mut count = 0;
        for u in 0..self.n {
            for &v in &self.ports[u] {
                if self.ports[v].contains(&u) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Every edge reciprocated: the digraph realizes an undirected graph.
    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|u| {
            (0..self.n).all(|v| self.count_edges(u, v) == self.count_edges(v, u))
        })
    }

    /// Girth of the underlying simple undirected graph (symmetric digraphs
    /// only make sense here, but the computation ignores orientation).
    pub fn undirected_girth(&self) -> Option<usize> {
        let mut adj = vec![Vec::new(); self.n];
        for (u, v) in self.edges() {
            if !adj[u].contains(&v) {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        let mut best: Option<usize> = None;
        for src in 0..self.n {
            let mut dist = vec![UNREACHABLE; self.n];
            let mut parent = vec![UNREACHABLE; self.n];
            let mut queue = VecDeque::new();
            dist[src] = 0;
            queue.push_back(src);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if dist[w] == UNREACHABLE {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if parent[v] != w {
                        let cyc = dist[v] + dist[w] + 1;
                        if best.map_or(true, |b| cyc < b) {
                            best = Some(cyc);
                        }
                    }
                }
            }
        }
        best
    }

    /// Relabel vertices by `p`: edge `(u,v)` becomes `(p(u), p(v))`.
    pub fn relabel(&self, p: &Permutation) -> Result<Digraph, DigraphError> {
        if p.size() != self.n {
            return Err(PermError::SizeMismatch(p.size(), self.n).into());
        }
        let mut ports = vec![Vec::new(); self.n];
        for (v, out) in self.ports.iter().enumerate() {
            ports[p.apply(v)] = out.iter().map(|&w| p.apply(w)).collect();
        }
        Digraph::from_ports(ports)
    }

    /// Complete digraph on `n` vertices (one edge each way between every
    /// pair).
    pub fn complete(n: usize) -> Digraph {
        let ports = (0..n)
            .map(|v| (0..n).filter(|&w| w != v).collect())
            .collect();
        Digraph::from_ports(ports).unwrap()
    }

    pub fn directed_cycle(n: usize) -> Digraph {
        Digraph::from_factors(&[Permutation::rotation(n, 1)]).unwrap()
    }

    /// Edge-disjoint decomposition into d derangements, peeling perfect
    /// matchings off the bipartite double cover (out-copies vs in-copies).
    pub fn factorize(&self) -> Factorization {
        // remaining[u] = list of (head, multiplicity) still to assign
        let mut remaining: Vec<Vec<usize>> = self.ports.clone();
        let mut factors = Vec::with_capacity(self.d);
        for _ in 0..self.d {
            let m = perfect_matching(&remaining, self.n);
            for (u, &v) in m.iter().enumerate() {
                let at = remaining[u].iter().position(|&w| w == v).unwrap();
                remaining[u].swap_remove(at);
            }
            factors.push(Permutation::from_images(m).unwrap());
        }
        Factorization { factors }
    }

    /// All 1-factorizations, as unordered sets of factors.  Exponential in
    /// general; intended for small degree-2 digraphs.
    pub fn all_factorizations(&self) -> Vec<Vec<Permutation>> {
        let mut out = Vec::new();
        let mut remaining: Vec<Vec<usize>> = self.ports.clone();
        let mut current = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        self.enum_matchings(&mut remaining, 0, &mut current, &mut used, &mut out);
        // layer ordering makes each unordered set appear d! times;
        // canonicalize and dedup.
        for f in &mut out {
            f.sort_by(|x, y| x.images().cmp(y.images()));
        }
        out.sort_by(|x, y| {
            x.iter()
                .map(|p| p.images())
                .cmp(y.iter().map(|p| p.images()))
        });
        out.dedup();
        out
    }

    fn enum_matchings(
        &self,
        remaining: &mut Vec<Vec<usize>>,
        u: usize,
        current: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<Permutation>>,
    ) {
        if u == self.n {
            let factor = Permutation::from_images(current.clone()).unwrap();
            if remaining.iter().map(|r| r.len()).sum::<usize>() == self.n {
                // last layer: the matching uses every remaining edge
                out.push(vec![factor]);
                return;
            }
            let mut next = remaining.clone();
            for (v, &w) in current.iter().enumerate() {
                let at = next[v].iter().position(|&x| x == w).unwrap();
                next[v].swap_remove(at);
            }
            let mut subs = Vec::new();
            let mut cur2 = vec![usize::MAX; self.n];
            let mut used2 = vec![false; self.n];
            self.enum_matchings(&mut next, 0, &mut cur2, &mut used2, &mut subs);
            for mut s in subs {
                s.push(factor.clone());
                out.push(s);
            }
            return;
        }
        let mut cands: Vec<usize> = remaining[u].clone();
        cands.sort_unstable();
        cands.dedup();
        for w in cands {
            if w != u && !used[w] {
                used[w] = true;
                current[u] = w;
                self.enum_matchings(remaining, u + 1, current, used, out);
                used[w] = false;
            }
        }
    }
}

/// A 1-factorization: d pairwise edge-disjoint derangements covering the
/// edge multiset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub factors: Vec<Permutation>,
}

impl Factorization {
    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    /// Check the defining invariants against a digraph.
    pub fn is_valid_for(&self, g: &Digraph) -> bool {
        if self.factors.len() != g.degree() {
            return false;
        }
        if !self.factors.iter().all(|f| f.is_derangement()) {
            return false;
        }
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for f in &self.factors {
            if f.size() != g.n() {
                return false;
            }
            edges.extend((0..g.n()).map(|v| (v, f.apply(v))));
        }
        edges.sort_unstable();
        edges == g.edge_multiset()
    }
}

/// One perfect matching of the bipartite graph rows -> columns given by
/// `adj`, found by augmenting paths.  Rows must all be matchable (true for
/// regular digraphs, by Hall's theorem).
fn perfect_matching(adj: &[Vec<usize>], n: usize) -> Vec<usize> {
    let mut match_row = vec![usize::MAX; n]; // row -> col
    let mut match_col = vec![usize::MAX; n]; // col -> row
    for u in 0..n {
        let mut visited = vec![false; n];
        let ok = augment(adj, u, &mut visited, &mut match_row, &mut match_col);
        debug_assert!(ok, "regular bipartite graph must have a perfect matching");
    }
    match_row
}

fn augment(
    adj: &[Vec<usize>],
    u: usize,
    visited: &mut [bool],
    match_row: &mut [usize],
    match_col: &mut [usize],
) -> bool {
    for &v in &adj[u] {
        if !visited[v] {
            visited[v] = true;
            if match_col[v] == usize::MAX
                || augment(adj, match_col[v], visited, match_row, match_col)
            {
                match_row[u] = v;
                match_col[v] = u;
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn alegre() -> Digraph {
        let z = Permutation::rotation(25, 1);
        let t = Permutation::parse_cycles(
            "(0,5,10,15,20)(3,23,18,13,8)(1,17,24,21,12,19,16,7,14,11,2,9,6,22,4)",
            25,
        )
        .unwrap();
        Digraph::from_factors(&[z, t]).unwrap()
    }

    #[test]
    fn alegre_shape_and_diameter() {
        let g = alegre();
        assert_eq!(g.n(), 25);
        assert_eq!(g.degree(), 2);
        assert!(g.is_strongly_connected());
        assert_eq!(g.diameter().unwrap(), 4);
    }

    #[test]
    fn directed_cycle_diameter() {
        assert_eq!(Digraph::directed_cycle(9).diameter().unwrap(), 8);
    }

    #[test]
    fn identity_factor_rejected() {
        let e = Digraph::from_factors(&[Permutation::identity(5)]);
        assert!(matches!(e, Err(DigraphError::FactorNotDerangement(0, 0))));
    }

    #[test]
    fn kautz6_from_k3_line_digraph() {
        let k6 = Digraph::complete(3).line_digraph();
        assert_eq!(k6.n(), 6);
        assert_eq!(k6.degree(), 2);
        assert_eq!(k6.diameter().unwrap(), 2);
        let k12 = k6.line_digraph();
        assert_eq!(k12.n(), 12);
        assert_eq!(k12.diameter().unwrap(), 3);
    }

    #[test]
    fn line_digraph_of_cycle_is_cycle() {
        let c = Digraph::directed_cycle(7);
        let l = c.line_digraph();
        assert_eq!(l.n(), 7);
        assert_eq!(l.diameter().unwrap(), 6);
    }

    #[test]
    fn factorize_single_derangement() {
        let p = Permutation::parse_cycles("(0,2,4)(1,3,5)", 6).unwrap();
        let g = Digraph::from_factors(std::slice::from_ref(&p)).unwrap();
        let f = g.factorize();
        assert_eq!(f.factors, vec![p]);
    }

    #[test]
    fn factorize_alegre_valid() {
        let g = alegre();
        let f = g.factorize();
        assert!(f.is_valid_for(&g));
        assert!(f.factors[0].is_disjoint_from(&f.factors[1]).unwrap());
    }

    #[test]
    fn reciprocal_edges() {
        assert_eq!(Digraph::directed_cycle(5).reciprocal_edge_count(), 0);
        assert!(Digraph::complete(4).is_symmetric());
        assert_eq!(Digraph::complete(3).reciprocal_edge_count(), 6);
    }

    #[test]
    fn unique_factorization_of_example_10_3() {
        let rho = Permutation::parse_cycles("(0,1,2,3,4,5)", 6).unwrap();
        let sigma = Permutation::parse_cycles("(0,2,5,3,1,4)", 6).unwrap();
        let g = Digraph::from_factors(&[rho.clone(), sigma.clone()]).unwrap();
        // Two factorizations as edge partitions, swapped by the digraph's
        // automorphism group: unique up to automorphism.
        let all = g.all_factorizations();
        assert_eq!(all.len(), 2);
        let mut expect = vec![rho, sigma];
        expect.sort_by(|x, y| x.images().cmp(y.images()));
        assert!(all.contains(&expect));
        let auts = crate::iso::automorphisms(&g);
        let mapped = auts.iter().any(|p| {
            let mut img: Vec<Permutation> = all[0]
                .iter()
                .map(|f| f.conjugate_by(p).unwrap())
                .collect();
            img.sort_by(|x, y| x.images().cmp(y.images()));
            img == all[1]
        });
        assert!(mapped);
    }

    #[test]
    fn floyd_warshall_oracle_agrees() {
        // independent all-pairs oracle on a few small digraphs
        for g in [
            Digraph::directed_cycle(8),
            Digraph::complete(4),
            alegre(),
        ] {
            let n = g.n();
            let mut dist = vec![vec![usize::MAX / 2; n]; n];
            for v in 0..n {
                dist[v][v] = 0;
                for &w in g.ports(v) {
                    dist[v][w] = 1;
                }
            }
            for k in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        let via = dist[i][k] + dist[k][j];
                        if via < dist[i][j] {
                            dist[i][j] = via;
                        }
                    }
                }
            }
            for v in 0..n {
                assert_eq!(g.distances_from(v), dist[v]);
            }
        }
    }
}

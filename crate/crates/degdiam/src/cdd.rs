//! Cyclic difference digraphs (CDDs) and their generalization.
//!
//! A CDD on `Z_ab` is the degree-2 digraph whose 1-factors are the rotation
//! `Z(k) = k+1` and the companion `Y(ia+j) = (i+t_j)a + pi(j)`, for a
//! permutation `pi` on `Z_a` and offsets `t_j` in `Z_b`.  A generalized
//! cyclic difference digraph (GCD) replaces both factors by semi-direct
//! permutations: a semi-direct derangement `Z` together with `Y = Z∘T` for
//! a semi-direct derangement `T`.  Every CDD is a GCD, and every line
//! digraph of a degree-2 digraph is a GCD.

use crate::digraph::{Digraph, DigraphError};
use crate::perm::{flatten_index, split_index, PermError, Permutation, SemiDirectPerm};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CddError {
    #[error("segment parameters must both exceed 1 (got a={0}, b={1})")]
    DegenerateSegments(usize, usize),
    #[error("pi must permute Z_{0}, got size {1}")]
    BadPi(usize, usize),
    #[error("offset vector has {0} entries, expected {1}")]
    BadOffsets(usize, usize),
    #[error("invalid parameters: companion fixes vertex {0}")]
    CompanionFixedPoint(usize),
    #[error("invalid parameters: companion meets the rotation at vertex {0}")]
    CompanionNotDisjoint(usize),
    #[error("T is not a derangement: Z and Y share the edge out of vertex ({j},{i})")]
    SharedEdge { j: usize, i: usize },
    #[error("Y has a fixed point at ({j},{i}): Z and T form a dicycle")]
    Dicycle { j: usize, i: usize },
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Digraph(#[from] DigraphError),
}

/// Parameters `(a, b, pi, t)` of a cyclic difference digraph on `n = a*b`
/// vertices.  Validated at construction: the induced companion must be a
/// derangement disjoint from the rotation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CddParams {
    a: usize,
    b: usize,
    pi: Permutation,
    t: Vec<usize>,
}

impl CddParams {
    pub fn new(a: usize, b: usize, pi: Permutation, t: Vec<usize>) -> Result<Self, CddError> {
        if a < 2 || b < 2 {
            return Err(CddError::DegenerateSegments(a, b));
        }
        if pi.size() != a {
            return Err(CddError::BadPi(a, pi.size()));
        }
        if t.len() != a {
            return Err(CddError::BadOffsets(t.len(), a));
        }
        let t: Vec<usize> = t.into_iter().map(|x| x % b).collect();
        let params = CddParams { a, b, pi, t };
        let y = params.companion();
        let n = a * b;
        for k in 0..n {
            if y.apply(k) == k {
                return Err(CddError::CompanionFixedPoint(k));
            }
            if y.apply(k) == (k + 1) % n {
                return Err(CddError::CompanionNotDisjoint(k));
            }
        }
        Ok(params)
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn pi(&self) -> &Permutation {
        &self.pi
    }

    pub fn offsets(&self) -> &[usize] {
        &self.t
    }

    pub fn n(&self) -> usize {
        self.a * self.b
    }

    /// The rotation factor `Z(k) = k+1 (mod n)`.
    pub fn rotation(&self) -> Permutation {
        Permutation::rotation(self.n(), 1)
    }

    /// The companion factor `Y(ia+j) = (i+t_j)a + pi(j)`.
    pub fn companion(&self) -> Permutation {
        let n = self.n();
        let mut images = vec![0; n];
        for k in 0..n {
            let (j, i) = split_index(k, self.a);
            images[k] = flatten_index(self.pi.apply(j), (i + self.t[j]) % self.b, self.a);
        }
        Permutation::from_images(images).expect("companion of valid params is a permutation")
    }

    pub fn digraph(&self) -> Digraph {
        Digraph::from_factors(&[self.rotation(), self.companion()])
            .expect("validated params give disjoint derangements")
    }

    /// Length of the companion's cycle through `(j, i)` from the offset
    /// sums: `alpha * c` where `c` is pi's cycle length through `j` and
    /// `alpha` is minimal positive with `alpha * (sum of t along the
    /// cycle) = 0 (mod b)`.
    pub fn companion_cycle_length(&self, j: usize, _i: usize) -> usize {
        let c = self.pi.cycle_length_through(j);
        let mut sum = 0;
        let mut w = j;
        for _ in 0..c {
            sum += self.t[w];
            w = self.pi.apply(w);
        }
        sum %= self.b;
        let mut alpha = 1;
        while alpha * sum % self.b != 0 {
            alpha += 1;
        }
        alpha * c
    }

    /// The row shift `tau(j, i) = (j, i+1)` is an automorphism of every
    /// valid CDD; checked directly on the edge multiset.
    pub fn tau_is_automorphism(&self) -> bool {
        let n = self.n();
        let tau = Permutation::from_images(
            (0..n)
                .map(|k| {
                    let (j, i) = split_index(k, self.a);
                    flatten_index(j, (i + 1) % self.b, self.a)
                })
                .collect(),
        )
        .unwrap();
        let g = self.digraph();
        g.relabel(&tau)
            .map(|h| h.edge_multiset() == g.edge_multiset())
            .unwrap_or(false)
    }

    /// Parameters of the digraph relabeled by `k -> k+1 (mod n)`, obtained
    /// by conjugating the companion and re-extracting `(pi, t)`.
    pub fn shift(&self) -> CddParams {
        let n = self.n();
        let mu = Permutation::rotation(n, 1);
        let y2 = self.companion().conjugate_by(&mu).unwrap();
        Self::extract(self.a, self.b, &y2)
            .expect("conjugate of a CDD companion by the rotation is again a CDD companion")
    }

    /// Recover `(pi, t)` from a companion permutation; fails if `y` is not
    /// of CDD shape.
    pub fn extract(a: usize, b: usize, y: &Permutation) -> Result<CddParams, CddError> {
        let mut pi = vec![0; a];
        let mut t = vec![0; a];
        for j in 0..a {
            let (pj, tj) = split_index(y.apply(j), a);
            pi[j] = pj;
            t[j] = tj;
            for i in 1..b {
                let (j2, i2) = split_index(y.apply(flatten_index(j, i, a)), a);
                if j2 != pj || i2 != (i + tj) % b {
                    return Err(CddError::Perm(PermError::NotSemiDirect { j, i }));
                }
            }
        }
        CddParams::new(a, b, Permutation::from_images(pi)?, t)
    }

    /// The Theorem-5-style semi-direct pair realizing this CDD: `Z` is the
    /// flat rotation seen in `U_ab`, and `T` has outer `j -> pi(j) - 1`
    /// with inner offsets `t_j`, minus one at the column whose outer image
    /// wraps.  The pair's `Z∘T` equals the companion exactly.
    pub fn as_gcd(&self) -> GcdPair {
        let (a, b) = (self.a, self.b);
        let z = SemiDirectPerm::unflatten(&self.rotation(), a, b).unwrap();
        let theta = Permutation::from_images(
            (0..a).map(|j| (self.pi.apply(j) + a - 1) % a).collect(),
        )
        .unwrap();
        let inner = (0..a)
            .map(|j| {
                let wrap = theta.apply(j) == a - 1;
                let off = (self.t[j] + b - usize::from(wrap)) % b;
                Permutation::rotation(b, off)
            })
            .collect();
        let t = SemiDirectPerm::new(theta, inner).unwrap();
        GcdPair::new(z, t).expect("CDD factors always give a valid GCD")
    }

    /// Diameter from the segment representatives `(j, 0)` only; equal to
    /// the full diameter because the row shift is an automorphism.
    pub fn diameter(&self) -> Result<usize, DigraphError> {
        let g = self.digraph();
        let mut best = 0;
        for j in 0..self.a {
            best = best.max(g.eccentricity(j)?);
        }
        Ok(best)
    }
}

/// A GCD generator pair: a semi-direct derangement `Z` and derangement `T`,
/// with companion `Y = Z∘T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GcdPair {
    z: SemiDirectPerm,
    t: SemiDirectPerm,
    y: Permutation,
}

impl GcdPair {
    pub fn new(z: SemiDirectPerm, t: SemiDirectPerm) -> Result<Self, CddError> {
        if (z.a(), z.b()) != (t.a(), t.b()) {
            return Err(PermError::DimMismatch(z.a(), z.b(), t.a(), t.b()).into());
        }
        let a = z.a();
        // T with a fixed point means Z and Y share an edge.
        for j in 0..a {
            for i in 0..z.b() {
                if t.apply(j, i) == (j, i) {
                    return Err(CddError::SharedEdge { j, i });
                }
            }
        }
        let y = z.flatten().compose(&t.flatten())?;
        if let Some(k) = (0..y.size()).find(|&k| y.apply(k) == k) {
            let (j, i) = split_index(k, a);
            return Err(CddError::Dicycle { j, i });
        }
        Ok(GcdPair { z, t, y })
    }

    pub fn z(&self) -> &SemiDirectPerm {
        &self.z
    }

    pub fn t(&self) -> &SemiDirectPerm {
        &self.t
    }

    pub fn companion(&self) -> &Permutation {
        &self.y
    }

    pub fn digraph(&self) -> Result<Digraph, CddError> {
        Ok(Digraph::from_factors(&[self.z.flatten(), self.y.clone()])?)
    }

    /// Build from the two factors themselves (`T = Z^-1 ∘ Y`).
    pub fn from_factors(z: SemiDirectPerm, y: &SemiDirectPerm) -> Result<Self, CddError> {
        let t = z.inverse().compose(y)?;
        GcdPair::new(z, t)
    }
}

/// Present the line digraph of a degree-2 digraph as a GCD on
/// `Z_2 x Z_n`: `Z` keeps the factor index and applies that factor, `T`
/// swaps factor indices.
pub fn line_digraph_as_gcd(g: &Digraph) -> Result<GcdPair, CddError> {
    assert_eq!(g.degree(), 2, "GCD presentation needs degree 2");
    let f = g.factorize().factors;
    let zeta = Permutation::identity(2);
    let z = SemiDirectPerm::new(zeta, vec![f[0].clone(), f[1].clone()]).unwrap();
    let theta = Permutation::parse_cycles("(0,1)", 2).unwrap();
    let t = SemiDirectPerm::from_outer(theta, g.n());
    GcdPair::new(z, t)
}

/// Theorem-7-style automorphism test for a GCD with factors `Z` and
/// `Y = Z∘T`: at every vertex one of the two conjugation conditions must
/// hold.
pub fn gcd_automorphism_check(
    z: &Permutation,
    y: &Permutation,
    alpha: &Permutation,
) -> Result<bool, PermError> {
    if z.size() != alpha.size() || y.size() != alpha.size() {
        return Err(PermError::SizeMismatch(z.size(), alpha.size()));
    }
    let t = z.inverse().compose(y)?;
    let zi_az = z.inverse().compose(alpha)?.compose(z)?; // Z^-1 a Z
    let zi_azt = zi_az.compose(&t)?; // Z^-1 a Z T
    let ti = t.inverse();
    let ti_zi_azt = ti.compose(&zi_azt)?; // T^-1 Z^-1 a Z T
    let ti_zi_az = ti.compose(&zi_az)?; // T^-1 Z^-1 a Z
    Ok((0..alpha.size()).all(|v| {
        let av = alpha.apply(v);
        let b1 = av == zi_az.apply(v) && av == ti_zi_azt.apply(v);
        let b2 = av == zi_azt.apply(v) && av == ti_zi_az.apply(v);
        b1 || b2
    }))
}

impl CddParams {
    /// The cyclic-difference presentation of the Alegre digraph:
    /// a = b = 5, pi = (0,2,4), offsets (1,4,4,1,4).
    pub fn alegre_params() -> CddParams {
        CddParams::new(
            5,
            5,
            Permutation::parse_cycles("(0,2,4)", 5).unwrap(),
            vec![1, 4, 4, 1, 4],
        )
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;
    use crate::iso;

    fn alegre_params() -> CddParams {
        CddParams::alegre_params()
    }

    #[test]
    fn companion_matches_printed_cycles() {
        let y = alegre_params().companion();
        assert_eq!(
            y.to_string(),
            "(0,7,4,20,2,24,15,22,19,10,17,14,5,12,9)(1,21,16,11,6)(3,8,13,18,23)"
        );
        let g = alegre_params().digraph();
        assert!(iso::isomorphic(&g, &builtins::alegre()).is_some());
    }

    #[test]
    fn shift_by_a_when_pi_identity() {
        let p = CddParams::new(3, 4, Permutation::identity(3), vec![1, 1, 1]).unwrap();
        let y = p.companion();
        for k in 0..12 {
            assert_eq!(y.apply(k), (k + 3) % 12);
        }
    }

    #[test]
    fn fixed_point_params_rejected() {
        let e = CddParams::new(3, 4, Permutation::identity(3), vec![0, 1, 1]);
        assert_eq!(e, Err(CddError::CompanionFixedPoint(0)));
        // t_j a = 1 segment makes Y collide with Z at position a-1
        let e = CddParams::new(1, 4, Permutation::identity(1), vec![1]);
        assert!(matches!(e, Err(CddError::DegenerateSegments(1, 4))));
    }

    #[test]
    fn cycle_length_formula() {
        let p = alegre_params();
        assert_eq!(p.companion_cycle_length(0, 0), 15);
        assert_eq!(p.companion_cycle_length(1, 0), 5);
        assert_eq!(p.companion_cycle_length(3, 0), 5);
        let q = CddParams::new(3, 5, Permutation::identity(3), vec![1, 1, 1]).unwrap();
        assert_eq!(q.companion_cycle_length(0, 0), 5);
    }

    #[test]
    fn tau_automorphism_holds() {
        assert!(alegre_params().tau_is_automorphism());
        let q = CddParams::new(2, 3, Permutation::identity(2), vec![1, 1]).unwrap();
        assert!(q.tau_is_automorphism());
    }

    #[test]
    fn shift_twice_reaches_printed_pi() {
        let p = alegre_params();
        let s1 = p.shift();
        assert_eq!(s1.pi().to_string(), "(0,1,3)");
        assert_eq!(s1.offsets(), &[3, 1, 4, 0, 1]);
        let s2 = s1.shift();
        assert_eq!(s2.pi().to_string(), "(1,2,4)");
        assert_eq!(s2.pi(), &Permutation::parse_cycles("(4,1,2)", 5).unwrap());
        assert_eq!(s2.offsets(), &[1, 3, 1, 4, 0]);
        // double shift's companion is the double-rotation conjugate
        let mu2 = Permutation::rotation(25, 2);
        assert_eq!(s2.companion(), p.companion().conjugate_by(&mu2).unwrap());
        // n shifts come home
        let mut q = p.clone();
        for _ in 0..25 {
            q = q.shift();
        }
        assert_eq!(q, p);
    }

    #[test]
    fn as_gcd_reproduces_companion_and_digraph() {
        let p = alegre_params();
        let pair = p.as_gcd();
        assert_eq!(pair.companion(), &p.companion());
        assert_eq!(
            pair.digraph().unwrap().edge_multiset(),
            p.digraph().edge_multiset()
        );
        let q = CddParams::new(3, 4, Permutation::identity(3), vec![1, 1, 1]).unwrap();
        assert_eq!(q.as_gcd().companion(), &q.companion());
    }

    #[test]
    fn gcd_pair_validation() {
        let z = SemiDirectPerm::new(
            Permutation::identity(2),
            vec![
                Permutation::parse_cycles("(0,1,2)", 3).unwrap(),
                Permutation::parse_cycles("(0,2,1)", 3).unwrap(),
            ],
        )
        .unwrap();
        let y = SemiDirectPerm::new(
            Permutation::parse_cycles("(0,1)", 2).unwrap(),
            vec![
                Permutation::identity(3),
                Permutation::parse_cycles("(0,1,2)", 3).unwrap(),
            ],
        )
        .unwrap();
        let pair = GcdPair::from_factors(z.clone(), &y).unwrap();
        let g = pair.digraph().unwrap();
        assert_eq!(g.diameter().unwrap(), 2);
        assert_eq!(g.reciprocal_edge_count(), 0);
        let [r, s] = builtins::example10_2();
        let printed = Digraph::from_factors(&[r, s]).unwrap();
        assert!(iso::isomorphic(&g, &printed).is_some());

        let ident = SemiDirectPerm::identity(2, 3);
        assert!(matches!(
            GcdPair::new(z, ident),
            Err(CddError::SharedEdge { .. })
        ));
    }

    #[test]
    fn line_digraph_presentation() {
        for g in [
            builtins::k3(),
            builtins::kautz(2, 2),
            builtins::alegre(),
        ] {
            let pair = line_digraph_as_gcd(&g).unwrap();
            let h = pair.digraph().unwrap();
            assert!(iso::isomorphic(&h, &g.line_digraph()).is_some());
        }
    }

    #[test]
    fn automorphism_condition_examples() {
        let p = alegre_params();
        let z = p.rotation();
        let y = p.companion();
        let ident = Permutation::identity(25);
        assert!(gcd_automorphism_check(&z, &y, &ident).unwrap());
        let tau = Permutation::from_images((0..25).map(|k| (k + 5) % 25).collect()).unwrap();
        assert!(gcd_automorphism_check(&z, &y, &tau).unwrap());
        let bad = Permutation::parse_cycles("(0,1)", 25).unwrap();
        assert!(!gcd_automorphism_check(&z, &y, &bad).unwrap());
    }

    #[test]
    fn representative_diameter_matches_full() {
        assert_eq!(alegre_params().diameter().unwrap(), 4);
        let q = CddParams::new(2, 3, Permutation::identity(2), vec![1, 1]).unwrap();
        assert_eq!(q.diameter().unwrap(), q.digraph().diameter().unwrap());
    }
}

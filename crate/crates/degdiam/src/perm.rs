//! Permutations, cycle notation, and the semi-direct (wreath product)
//! permutation algebra on `Z_a x Z_b`.
//!
//! Permutations are stored as image arrays on `{0..n-1}` and compose
//! right-to-left: `compose(p, q)` is the function `v -> p(q(v))`.  A 1-factor
//! of a digraph is exactly a derangement under this view, so these values are
//! the common currency for everything else in the crate.

use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("not a bijection: index {0} appears {1} times")]
    NotBijection(usize, usize),
    #[error("index {index} out of range for degree {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("index {0} repeated in cycle notation")]
    RepeatedIndex(usize),
    #[error("malformed cycle notation: {0}")]
    Malformed(String),
    #[error("dimension mismatch: ({0},{1}) vs ({2},{3})")]
    DimMismatch(usize, usize, usize, usize),
    #[error("not semi-direct: outer image of column {j} depends on the row (seen at i={i})")]
    NotSemiDirect { j: usize, i: usize },
}

/// A bijection on `{0..n-1}` stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Build from an image array, rejecting non-bijections.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![0usize; n];
        for &v in &images {
            if v >= n {
                return Err(PermError::IndexOutOfRange { index: v, n });
            }
            seen[v] += 1;
        }
        for (v, &c) in seen.iter().enumerate() {
            if c != 1 {
                return Err(PermError::NotBijection(v, c));
            }
        }
        Ok(Permutation { images })
    }

    /// The permutation `k -> k + shift (mod n)`.
    pub fn rotation(n: usize, shift: usize) -> Self {
        Permutation {
            images: (0..n).map(|k| (k + shift) % n).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.images[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| k == v)
    }

    /// `compose(p, q)(v) = p(q(v))`: words parse right-to-left.
    pub fn compose(&self, q: &Permutation) -> Result<Permutation, PermError> {
        if self.size() != q.size() {
            return Err(PermError::SizeMismatch(self.size(), q.size()));
        }
        Ok(Permutation {
            images: q.images.iter().map(|&v| self.images[v]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.size()];
        for (k, &v) in self.images.iter().enumerate() {
            images[v] = k;
        }
        Permutation { images }
    }

    pub fn pow(&self, e: i64) -> Permutation {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = Permutation::identity(self.size());
        for _ in 0..e.unsigned_abs() {
            out = base.compose(&out).unwrap();
        }
        out
    }

    pub fn conjugate_by(&self, g: &Permutation) -> Result<Permutation, PermError> {
        g.compose(self)?.compose(&g.inverse())
    }

    pub fn is_derangement(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| k != v)
    }

    /// Disjoint as 1-factors: `p(v) != q(v)` for every vertex.
    pub fn is_disjoint_from(&self, q: &Permutation) -> Result<bool, PermError> {
        if self.size() != q.size() {
            return Err(PermError::SizeMismatch(self.size(), q.size()));
        }
        Ok(self
            .images
            .iter()
            .zip(&q.images)
            .all(|(&x, &y)| x != y))
    }

    /// Cycle decomposition in canonical order: each cycle starts at its
    /// minimum element, cycles sorted by that element, fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut v = self.images[start];
            while v != start {
                seen[v] = true;
                cyc.push(v);
                v = self.images[v];
            }
            out.push(cyc);
        }
        out
    }

    /// Length of the cycle through `v` (1 for a fixed point).
    pub fn cycle_length_through(&self, v: usize) -> usize {
        let mut len = 1;
        let mut w = self.images[v];
        while w != v {
            len += 1;
            w = self.images[w];
        }
        len
    }

    /// Parse parenthesized cycle notation, e.g. `"(0,5,10)(1,2)"`.  The empty
    /// string is the identity.  Rejects repeated or out-of-range indices.
    pub fn parse_cycles(text: &str, n: usize) -> Result<Permutation, PermError> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        let body = text.trim();
        let mut rest = body;
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(PermError::Malformed(format!(
                    "expected '(' at \"{}\"",
                    truncate(rest)
                )));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| PermError::Malformed("unclosed '('".into()))?;
            let inner = &rest[1..close];
            let mut cyc = Vec::new();
            for tok in inner.split(',') {
                let tok = tok.trim();
                if tok.is_empty() {
                    return Err(PermError::Malformed("empty entry in cycle".into()));
                }
                let v: usize = tok
                    .parse()
                    .map_err(|_| PermError::Malformed(format!("bad index \"{tok}\"")))?;
                if v >= n {
                    return Err(PermError::IndexOutOfRange { index: v, n });
                }
                if used[v] {
                    return Err(PermError::RepeatedIndex(v));
                }
                used[v] = true;
                cyc.push(v);
            }
            if cyc.len() >= 2 {
                for k in 0..cyc.len() {
                    images[cyc[k]] = cyc[(k + 1) % cyc.len()];
                }
            }
            rest = rest[close + 1..].trim_start();
        }
        Ok(Permutation { images })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cyc in cycles {
            write!(f, "(")?;
            for (k, v) in cyc.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{self}]")
    }
}

/// Vertex `(j, i)` of `Z_a x Z_b` flattened to the integer `i*a + j`.
pub fn flatten_index(j: usize, i: usize, a: usize) -> usize {
    i * a + j
}

/// Inverse of [`flatten_index`]: `k -> (j, i)`.
pub fn split_index(k: usize, a: usize) -> (usize, usize) {
    (k % a, k / a)
}

/// An element of `U_ab = S_b wr S_a`: an outer permutation on the column
/// index `j` together with one inner permutation on `Z_b` per column,
/// `(j, i) -> (outer(j), inner[j](i))`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SemiDirectPerm {
    a: usize,
    b: usize,
    outer: Permutation,
    inner: Vec<Permutation>,
}

impl SemiDirectPerm {
    pub fn new(outer: Permutation, inner: Vec<Permutation>) -> Result<Self, PermError> {
        let a = outer.size();
        if inner.len() != a {
            return Err(PermError::SizeMismatch(inner.len(), a));
        }
        let b = inner.first().map_or(0, |p| p.size());
        for p in &inner {
            if p.size() != b {
                return Err(PermError::SizeMismatch(p.size(), b));
            }
        }
        Ok(SemiDirectPerm { a, b, outer, inner })
    }

    pub fn identity(a: usize, b: usize) -> Self {
        SemiDirectPerm {
            a,
            b,
            outer: Permutation::identity(a),
            inner: vec![Permutation::identity(b); a],
        }
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn outer(&self) -> &Permutation {
        &self.outer
    }

    pub fn inner(&self, j: usize) -> &Permutation {
        &self.inner[j]
    }

    pub fn apply(&self, j: usize, i: usize) -> (usize, usize) {
        (self.outer.apply(j), self.inner[j].apply(i))
    }

    /// Pointwise composition `self(other(v))`; the result is again
    /// semi-direct.
    pub fn compose(&self, other: &SemiDirectPerm) -> Result<SemiDirectPerm, PermError> {
        if (self.a, self.b) != (other.a, other.b) {
            return Err(PermError::DimMismatch(self.a, self.b, other.a, other.b));
        }
        let outer = self.outer.compose(&other.outer)?;
        let inner = (0..self.a)
            .map(|j| self.inner[other.outer.apply(j)].compose(&other.inner[j]))
            .collect::<Result<Vec<_>, _>>()?;
        SemiDirectPerm::new(outer, inner)
    }

    /// Functional inverse.
    pub fn inverse(&self) -> SemiDirectPerm {
        let outer = self.outer.inverse();
        let inner = (0..self.a)
            .map(|j| self.inner[outer.apply(j)].inverse())
            .collect();
        SemiDirectPerm {
            a: self.a,
            b: self.b,
            outer,
            inner,
        }
    }

    /// Derangement test from the column data: every column must move, either
    /// by the outer permutation or by a fixed-point-free inner one.
    pub fn is_derangement(&self) -> bool {
        (0..self.a).all(|j| self.outer.apply(j) != j || self.inner[j].is_derangement())
    }

    /// The same function on `{0..a*b-1}` under `k = i*a + j`.
    pub fn flatten(&self) -> Permutation {
        let n = self.a * self.b;
        let mut images = vec![0; n];
        for k in 0..n {
            let (j, i) = split_index(k, self.a);
            let (j2, i2) = self.apply(j, i);
            images[k] = flatten_index(j2, i2, self.a);
        }
        Permutation { images }
    }

    /// Recover the column structure of a flat permutation, failing when the
    /// outer image of some column depends on the row.
    pub fn unflatten(p: &Permutation, a: usize, b: usize) -> Result<SemiDirectPerm, PermError> {
        if p.size() != a * b {
            return Err(PermError::SizeMismatch(p.size(), a * b));
        }
        let mut outer = vec![0; a];
        let mut inner_images = vec![vec![0; b]; a];
        for j in 0..a {
            let (j0, i0) = split_index(p.apply(flatten_index(j, 0, a)), a);
            outer[j] = j0;
            inner_images[j][0] = i0;
            for i in 1..b {
                let (j2, i2) = split_index(p.apply(flatten_index(j, i, a)), a);
                if j2 != j0 {
                    return Err(PermError::NotSemiDirect { j, i });
                }
                inner_images[j][i] = i2;
            }
        }
        let outer = Permutation::from_images(outer)?;
        let inner = inner_images
            .into_iter()
            .map(Permutation::from_images)
            .collect::<Result<Vec<_>, _>>()?;
        SemiDirectPerm::new(outer, inner)
    }

    /// Element with a single non-identity inner permutation at column `j`.
    pub fn from_inner_at(a: usize, b: usize, j: usize, p: Permutation) -> Self {
        let mut inner = vec![Permutation::identity(b); a];
        inner[j] = p;
        SemiDirectPerm {
            a,
            b,
            outer: Permutation::identity(a),
            inner,
        }
    }

    /// Element with identity inner permutations.
    pub fn from_outer(outer: Permutation, b: usize) -> Self {
        let a = outer.size();
        SemiDirectPerm {
            a,
            b,
            outer,
            inner: vec![Permutation::identity(b); a],
        }
    }
}

fn truncate(s: &str) -> String {
    s.chars().take(16).collect()
}

//! Named digraphs, tables and factor sets used throughout the tests and the
//! CLI: the two 6-element groupoid tables, the Alegre digraph's factor pair,
//! Kautz digraphs, and the small degree-2 diameter-2/3 companions.

use crate::digraph::Digraph;
use crate::groupoid::PartialGroupoid;
use crate::perm::Permutation;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown builtin name: {0}")]
pub struct UnknownBuiltin(pub String);

/// Groupoid table on Z_2 x Z_3 (elements ordered 00,01,02,10,11,12) whose
/// Cayley digraph for generators t = (1,0), s = (0,1) is the 6-vertex Kautz
/// digraph.  Satisfies P1-P3.
pub fn example1_full_table() -> Vec<Vec<usize>> {
    vec![
        vec![0, 1, 2, 3, 4, 5],
        vec![1, 2, 3, 5, 0, 1],
        vec![2, 3, 4, 1, 2, 3],
        vec![3, 4, 5, 0, 1, 2],
        vec![4, 5, 0, 2, 3, 4],
        vec![5, 0, 1, 4, 5, 0],
    ]
}

/// The generator columns (t = element 3, then s = element 1) of
/// [`example1_full_table`].
pub fn example1() -> PartialGroupoid {
    partial_from_full(example1_full_table(), vec![3, 1], Some(0))
}

/// A table on the same elements that keeps P2 and P3 but has no left
/// identity (element 0 works on the right only), stored verbatim.
pub fn example2_full_table() -> Vec<Vec<usize>> {
    vec![
        vec![0, 1, 2, 4, 5, 3],
        vec![1, 2, 0, 3, 4, 5],
        vec![2, 0, 1, 5, 3, 4],
        vec![3, 4, 5, 1, 2, 0],
        vec![4, 5, 3, 0, 1, 2],
        vec![5, 3, 4, 2, 0, 1],
    ]
}

pub fn example2() -> PartialGroupoid {
    partial_from_full(example2_full_table(), vec![3, 1], Some(0))
}

fn partial_from_full(
    full: Vec<Vec<usize>>,
    gens: Vec<usize>,
    identity: Option<usize>,
) -> PartialGroupoid {
    let cols = full
        .iter()
        .map(|row| gens.iter().map(|&g| row[g]).collect())
        .collect();
    PartialGroupoid::new(cols, gens, identity).unwrap()
}

/// The Alegre digraph's 1-factors on Z_25: the Hamiltonian rotation and its
/// companion t-factor (a 5-cycle, a 5-cycle and a 15-cycle).
pub fn alegre_factors() -> [Permutation; 2] {
    [
        Permutation::rotation(25, 1),
        Permutation::parse_cycles(
            "(0,5,10,15,20)(3,23,18,13,8)(1,17,24,21,12,19,16,7,14,11,2,9,6,22,4)",
            25,
        )
        .unwrap(),
    ]
}

/// The 1-factors of the cyclic-difference presentation of the Alegre
/// digraph (offsets (1,4,4,1,4) with column permutation (0,2,4)): the
/// rotation ρ and the companion σ whose covering group has order 187,500.
pub fn alegre_cover_generators() -> [Permutation; 2] {
    [
        Permutation::rotation(25, 1),
        Permutation::parse_cycles(
            "(0,7,4,20,2,24,15,22,19,10,17,14,5,12,9)(1,21,16,11,6)(3,8,13,18,23)",
            25,
        )
        .unwrap(),
    ]
}

/// The Alegre digraph: 25 vertices, degree 2, diameter 4.
pub fn alegre() -> Digraph {
    let [z, t] = alegre_factors();
    Digraph::from_factors(&[z, t]).unwrap()
}

/// The complete digraph on 3 vertices.
pub fn k3() -> Digraph {
    Digraph::complete(3)
}

/// Kautz digraph of degree d and diameter `diam`: the (diam-1)-fold line
/// digraph of the complete digraph on d+1 vertices.
pub fn kautz(d: usize, diam: usize) -> Digraph {
    let mut g = Digraph::complete(d + 1);
    for _ in 1..diam {
        g = g.line_digraph();
    }
    g
}

/// Factor pair of the second 6-vertex degree-2 diameter-2 digraph (no
/// 2-cycles).
pub fn example10_2() -> [Permutation; 2] {
    [
        Permutation::parse_cycles("(0,4,2,3,1,5)", 6).unwrap(),
        Permutation::parse_cycles("(0,2,1)(4,5,3)", 6).unwrap(),
    ]
}

/// Factor pair of the third 6-vertex digraph: Hamiltonian rotation plus a
/// 6-cycle companion; its 1-factorization is unique.
pub fn example10_3() -> [Permutation; 2] {
    [
        Permutation::parse_cycles("(0,1,2,3,4,5)", 6).unwrap(),
        Permutation::parse_cycles("(0,2,5,3,1,4)", 6).unwrap(),
    ]
}

/// Companion cycles (to the rotation on Z_12) of the three degree-2
/// diameter-3 digraphs on 12 vertices, in the order: Kautz 12, line digraph
/// of the `example10_2` digraph, line digraph of the `example10_3` digraph.
pub fn example11_companions() -> [Permutation; 3] {
    [
        Permutation::parse_cycles("(0,6)(1,4,9,8,5)(2,11,7,10,3)", 12).unwrap(),
        Permutation::parse_cycles("(0,4,11,9,7,3,1,6,10,5,2,8)", 12).unwrap(),
        Permutation::parse_cycles("(0,10,4,8,3,11,6,2,9,1,7,5)", 12).unwrap(),
    ]
}

/// A builtin object resolvable by CLI name.
#[derive(Clone, Debug)]
pub enum Builtin {
    Groupoid(PartialGroupoid),
    Digraph(Digraph),
    Factors(Vec<Permutation>),
}

/// Resolve the names accepted by `degdiam build` and friends.
pub fn builtin(name: &str) -> Result<Builtin, UnknownBuiltin> {
    match name {
        "example1" => Ok(Builtin::Groupoid(example1())),
        "example2" => Ok(Builtin::Groupoid(example2())),
        "alegre_factors" => Ok(Builtin::Factors(alegre_factors().to_vec())),
        "alegre" => Ok(Builtin::Digraph(alegre())),
        "k3" => Ok(Builtin::Digraph(k3())),
        "example10_2" => Ok(Builtin::Factors(example10_2().to_vec())),
        "example10_3" => Ok(Builtin::Factors(example10_3().to_vec())),
        "example11_companions" => Ok(Builtin::Factors(example11_companions().to_vec())),
        _ => Err(UnknownBuiltin(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kautz_sizes() {
        assert_eq!(kautz(2, 2).n(), 6);
        assert_eq!(kautz(2, 2).diameter().unwrap(), 2);
        assert_eq!(kautz(2, 3).n(), 12);
        assert_eq!(kautz(2, 3).diameter().unwrap(), 3);
    }

    #[test]
    fn example10_digraphs() {
        let [r, s] = example10_2();
        let g = Digraph::from_factors(&[r, s]).unwrap();
        assert_eq!(g.diameter().unwrap(), 2);
        assert_eq!(g.reciprocal_edge_count(), 0);
        let [r, s] = example10_3();
        let g = Digraph::from_factors(&[r, s]).unwrap();
        assert_eq!(g.diameter().unwrap(), 2);
        assert_eq!(g.reciprocal_edge_count(), 0);
    }

    #[test]
    fn example11_companions_give_diameter_3() {
        for y in example11_companions() {
            let g = Digraph::from_factors(&[Permutation::rotation(12, 1), y]).unwrap();
            assert_eq!(g.diameter().unwrap(), 3);
        }
    }

    #[test]
    fn unknown_name_errors() {
        assert!(builtin("nope").is_err());
        assert!(matches!(builtin("alegre"), Ok(Builtin::Digraph(_))));
    }
}

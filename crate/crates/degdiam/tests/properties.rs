//! Randomized invariant suites.  Random objects are built from a seed via
//! rejection sampling so every proptest case is productive.

use degdiam::cdd::{gcd_automorphism_check, line_digraph_as_gcd, CddParams};
use degdiam::digraph::Digraph;
use degdiam::groupoid::groupoid_from_digraph;
use degdiam::iso;
use degdiam::perm::Permutation;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_perm(n: usize, rng: &mut ChaCha8Rng) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::from_images(images).unwrap()
}

fn derangement(n: usize, seed: u64) -> Permutation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let p = random_perm(n, &mut rng);
        if p.is_derangement() {
            return p;
        }
    }
}

/// A companion of the rotation: derangement with p(v) != v+1 as well.
fn companion(n: usize, seed: u64) -> Permutation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let p = random_perm(n, &mut rng);
        if p.is_derangement() && (0..n).all(|v| p.apply(v) != (v + 1) % n) {
            return p;
        }
    }
}

fn companion_digraph(n: usize, seed: u64) -> (Digraph, [Permutation; 2]) {
    let z = Permutation::rotation(n, 1);
    let y = companion(n, seed);
    let g = Digraph::from_factors(&[z.clone(), y.clone()]).unwrap();
    (g, [z, y])
}

fn cdd_params(a: usize, b: usize, seed: u64) -> CddParams {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let pi = random_perm(a, &mut rng);
        let t: Vec<usize> = (0..a).map(|_| rng.gen_range(0..b)).collect();
        if let Ok(p) = CddParams::new(a, b, pi, t) {
            return p;
        }
    }
}

/// Direct unordered-edge automorphism test for a degree-2 digraph.
fn is_digraph_automorphism(g: &Digraph, alpha: &Permutation) -> bool {
    (0..g.n()).all(|v| {
        let mut want: Vec<usize> = g.ports(alpha.apply(v)).to_vec();
        let mut got: Vec<usize> = g.ports(v).iter().map(|&w| alpha.apply(w)).collect();
        want.sort();
        got.sort();
        want == got
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    // peeling 1-factors and reassembling preserves the edge multiset
    #[test]
    fn petersen_factorization_round_trip(
        n in 4usize..=40,
        d in 1usize..=4,
        seed in any::<u64>(),
    ) {
        let factors: Vec<Permutation> =
            (0..d).map(|k| derangement(n, seed.wrapping_add(k as u64))).collect();
        let g = Digraph::from_factors(&factors).unwrap();
        let f = g.factorize();
        prop_assert!(f.is_valid_for(&g));
        let h = Digraph::from_factors(&f.factors).unwrap();
        prop_assert_eq!(g.edge_multiset(), h.edge_multiset());
    }

    // a digraph equals the Cayley digraph of its canonical extension
    #[test]
    fn canonical_extension_round_trip(
        n in 3usize..=14,
        seed in any::<u64>(),
        root_pick in any::<u64>(),
    ) {
        let (g, factors) = companion_digraph(n, seed);
        let root = (root_pick % n as u64) as usize;
        let pg = groupoid_from_digraph(&g, &factors, root);
        let cayley = pg.cayley_digraph().unwrap();
        prop_assert_eq!(g.port_table(), cayley.port_table());
    }

    // the semi-direct (Z, T) presentation builds the same digraph as the
    // direct definition
    #[test]
    fn semidirect_presentation_equality(
        a in 2usize..=6,
        b in 2usize..=6,
        seed in any::<u64>(),
    ) {
        let p = cdd_params(a, b, seed);
        let direct = p.digraph();
        let via_gcd = p.as_gcd().digraph().unwrap();
        prop_assert_eq!(direct.port_table(), via_gcd.port_table());
    }

    // the grouped presentation of a line digraph is the line digraph
    #[test]
    fn line_digraph_presentation(
        n in 3usize..=10,
        seed in any::<u64>(),
    ) {
        let (g, _) = companion_digraph(n, seed);
        let pair = line_digraph_as_gcd(&g).unwrap();
        let presented = pair.digraph().unwrap();
        let line = g.line_digraph();
        prop_assert!(iso::isomorphic(&presented, &line).is_some());
    }

    // the two-branch conjugation test accepts exactly the digraph
    // automorphisms
    #[test]
    fn conjugation_test_matches_direct_automorphism_check(
        n in 3usize..=10,
        seed in any::<u64>(),
        alpha_seed in any::<u64>(),
    ) {
        let (g, [z, y]) = companion_digraph(n, seed);
        for alpha in iso::automorphisms(&g) {
            prop_assert!(gcd_automorphism_check(&z, &y, &alpha).unwrap());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(alpha_seed);
        let alpha = random_perm(n, &mut rng);
        prop_assert_eq!(
            gcd_automorphism_check(&z, &y, &alpha).unwrap(),
            is_digraph_automorphism(&g, &alpha)
        );
    }

    // closed-form companion cycle lengths agree with direct traversal
    #[test]
    fn companion_cycle_lengths(
        a in 2usize..=8,
        b in 2usize..=8,
        seed in any::<u64>(),
    ) {
        let p = cdd_params(a, b, seed);
        let y = p.companion();
        for j in 0..a {
            for i in 0..b {
                let v = i * a + j;
                prop_assert_eq!(
                    p.companion_cycle_length(j, i),
                    y.cycle_length_through(v)
                );
            }
        }
    }

    // rotating every row is an automorphism
    #[test]
    fn row_rotation_automorphism(
        a in 2usize..=8,
        b in 2usize..=8,
        seed in any::<u64>(),
    ) {
        let p = cdd_params(a, b, seed);
        prop_assert!(p.tau_is_automorphism());
        let n = a * b;
        let tau = Permutation::from_images(
            (0..n).map(|k| ((k / a + 1) % b) * a + k % a).collect(),
        )
        .unwrap();
        prop_assert!(is_digraph_automorphism(&p.digraph(), &tau));
    }

    // the shift isomorphism is exact conjugation by the vertex rotation
    #[test]
    fn shift_is_exact_conjugation(
        a in 2usize..=8,
        b in 2usize..=8,
        seed in any::<u64>(),
    ) {
        let p = cdd_params(a, b, seed);
        let shifted = p.shift();
        let rot = Permutation::rotation(a * b, 1);
        prop_assert_eq!(shifted.companion(), p.companion().conjugate_by(&rot).unwrap());
    }

    // the representative-based diameter equals the full diameter
    #[test]
    fn representative_diameter(
        a in 2usize..=7,
        b in 2usize..=7,
        seed in any::<u64>(),
    ) {
        let p = cdd_params(a, b, seed);
        prop_assert_eq!(p.diameter().ok(), p.digraph().diameter().ok());
    }
}

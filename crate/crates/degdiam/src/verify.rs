//! A data-driven catalog of the published claims this crate reproduces.
//! Each claim is re-derived from scratch when run and reported as pass,
//! fail, flagged-typo (the published value is internally inconsistent and
//! a corrected value is substituted), or skipped-scale (the computation
//! exceeds the resource budget and is reported rather than asserted).

use crate::cdd::CddParams;
use crate::cover;
use crate::digraph::Digraph;
use crate::groupoid;
use crate::perm::Permutation;
use crate::search::{self, SearchSpec};
use crate::{builtins, iso};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClaimStatus {
    Pass,
    Fail,
    FlaggedTypo,
    SkippedScale,
}

impl fmt::Display for ClaimStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ClaimStatus::Pass => "pass",
            ClaimStatus::Fail => "fail",
            ClaimStatus::FlaggedTypo => "flagged-typo",
            ClaimStatus::SkippedScale => "skipped-scale",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
pub struct ClaimResult {
    pub id: &'static str,
    pub description: &'static str,
    pub status: ClaimStatus,
    pub details: String,
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub claims: Vec<ClaimResult>,
}

impl VerifyReport {
    pub fn failures(&self) -> usize {
        self.claims
            .iter()
            .filter(|c| c.status == ClaimStatus::Fail)
            .count()
    }
}

type Check = fn(usize) -> (ClaimStatus, String);

pub const CLAIM_IDS: [&str; 13] = [
    "example1", "example2", "example3", "example4", "example5", "example6", "example7",
    "example8", "example9", "example10", "example11", "theorem12", "properties",
];

fn catalog() -> Vec<(&'static str, &'static str, Check)> {
    vec![
        (
            "example1",
            "6-element groupoid table satisfies P1-P3; its Cayley digraph is the 6-vertex Kautz digraph",
            check_example1,
        ),
        (
            "example2",
            "second 6-element table fails P1 but keeps P2-P3 and the same Cayley digraph",
            check_example2,
        ),
        (
            "example3",
            "Hoffman-Singleton groupoid digraph: 50 vertices, 7-regular, symmetric, diameter 2, girth 5",
            check_example3,
        ),
        (
            "example4",
            "Alegre digraph: 25 vertices, degree 2, strongly connected, diameter 4",
            check_example4,
        ),
        (
            "example5",
            "cyclic-difference parameters (5,5,(0,2,4),(1,4,4,1,4)) reproduce the printed companion",
            check_example5,
        ),
        (
            "example6",
            "shifting the parameters twice gives pi=(4,1,2); printed offsets (4,3,1,1,0) vs derived (1,3,1,4,0)",
            check_example6,
        ),
        (
            "example7",
            "covering group of Alegre: order 187,500, directed diameter 23, 11 extremal; relations 1-9",
            check_example7,
        ),
        (
            "example8",
            "49-vertex generalization: sigma matches printed cycles, diameter 7; group order beyond budget",
            check_example8,
        ),
        (
            "example9",
            "9-point pair generates order 1296 with diameter 14; alternate pair generates the same set",
            check_example9,
        ),
        (
            "example10",
            "exhaustive n=6 diameter-2 search: 3 classes; third class cover order 120, diameter 10",
            check_example10,
        ),
        (
            "example11",
            "exhaustive n=12 diameter-3 search: 3 classes = line digraphs, Aut orders {3,4,6}",
            check_example11,
        ),
        (
            "theorem12",
            "two-element wreath generating pairs hit full order for all a!(b!)^a up to 10^6",
            check_theorem12,
        ),
        (
            "properties",
            "randomized invariant suites (run in full by `cargo test`); smoke subset re-run here",
            check_properties,
        ),
    ]
}

/// Run every claim in the catalog.
pub fn run_all(max_elements: usize) -> VerifyReport {
    VerifyReport {
        claims: catalog()
            .into_iter()
            .map(|(id, description, f)| {
                let (status, details) = f(max_elements);
                ClaimResult {
                    id,
                    description,
                    status,
                    details,
                }
            })
            .collect(),
    }
}

/// Run a single claim by id.
pub fn run_only(id: &str, max_elements: usize) -> Option<ClaimResult> {
    catalog().into_iter().find(|(cid, _, _)| *cid == id).map(
        |(id, description, f)| {
            let (status, details) = f(max_elements);
            ClaimResult {
                id,
                description,
                status,
                details,
            }
        },
    )
}

fn fail(details: String) -> (ClaimStatus, String) {
    (ClaimStatus::Fail, details)
}

fn pass(details: String) -> (ClaimStatus, String) {
    (ClaimStatus::Pass, details)
}

fn check_example1(_: usize) -> (ClaimStatus, String) {
    let g = builtins::example1();
    let report = g.check_properties();
    if !(report.p1 && report.p2 && report.p3) {
        return fail(format!("property check failed: {report:?}"));
    }
    let cayley = match g.cayley_digraph() {
        Ok(c) => c,
        Err(e) => return fail(format!("cayley digraph: {e}")),
    };
    let kautz = builtins::kautz(2, 2);
    if iso::isomorphic(&cayley, &kautz).is_none() {
        return fail("cayley digraph not isomorphic to the 6-vertex Kautz digraph".into());
    }
    match cayley.diameter() {
        Ok(2) => pass("P1-P3 hold; Cayley digraph = Kautz 6, diameter 2".into()),
        other => fail(format!("diameter: {other:?}, wanted 2")),
    }
}

fn check_example2(_: usize) -> (ClaimStatus, String) {
    let g = builtins::example2();
    let report = g.check_properties();
    if report.p1 {
        return fail("P1 unexpectedly holds".into());
    }
    if !(report.p2 && report.p3) {
        return fail(format!("P2/P3 failed: {report:?}"));
    }
    let cayley = match g.cayley_digraph() {
        Ok(c) => c,
        Err(e) => return fail(format!("cayley digraph: {e}")),
    };
    let reference = builtins::example1().cayley_digraph().unwrap();
    if iso::isomorphic(&cayley, &reference).is_none() {
        return fail("cayley digraph differs from the first table's".into());
    }
    pass(format!(
        "P1 fails at {:?}; P2-P3 hold; same Cayley digraph",
        report.p1_witness
    ))
}

fn check_example3(_: usize) -> (ClaimStatus, String) {
    let (_, g) = match groupoid::hoffman_singleton(5) {
        Ok(x) => x,
        Err(e) => return fail(format!("construction: {e}")),
    };
    let mut problems = Vec::new();
    if g.n() != 50 {
        problems.push(format!("order {}", g.n()));
    }
    if g.degree() != 7 {
        problems.push(format!("degree {}", g.degree()));
    }
    if !g.is_symmetric() {
        problems.push("not symmetric".into());
    }
    if g.diameter() != Ok(2) {
        problems.push(format!("diameter {:?}", g.diameter()));
    }
    if g.undirected_girth() != Some(5) {
        problems.push(format!("girth {:?}", g.undirected_girth()));
    }
    let undirected_edges = g.edge_multiset().len() / 2;
    if undirected_edges != 175 {
        problems.push(format!("{undirected_edges} undirected edges"));
    }
    if problems.is_empty() {
        pass("50 vertices, 7-regular, symmetric, diameter 2, girth 5, 175 edges".into())
    } else {
        fail(problems.join("; "))
    }
}

fn check_example4(_: usize) -> (ClaimStatus, String) {
    let g = builtins::alegre();
    if g.n() == 25 && g.degree() == 2 && g.is_strongly_connected() && g.diameter() == Ok(4) {
        pass("25 vertices, degree 2, diameter 4".into())
    } else {
        fail(format!(
            "n={} d={} connected={} diameter={:?}",
            g.n(),
            g.degree(),
            g.is_strongly_connected(),
            g.diameter()
        ))
    }
}

fn check_example5(_: usize) -> (ClaimStatus, String) {
    let p = CddParams::alegre_params();
    let y = p.companion();
    let printed = "(0,7,4,20,2,24,15,22,19,10,17,14,5,12,9)(1,21,16,11,6)(3,8,13,18,23)";
    if y.to_string() != printed {
        return fail(format!("companion {y} != printed {printed}"));
    }
    if iso::isomorphic(&p.digraph(), &builtins::alegre()).is_none() {
        return fail("parameter digraph not isomorphic to the stored one".into());
    }
    // one representative column per pi-orbit: {0,2,4}, {1}, {3}
    let lengths: Vec<usize> = [0, 1, 3].map(|j| p.companion_cycle_length(j, 0)).into();
    let mut sorted = lengths.clone();
    sorted.sort();
    if sorted != [5, 5, 15] {
        return fail(format!("formula cycle lengths {lengths:?}"));
    }
    let mut direct: Vec<usize> = y.cycles().iter().map(Vec::len).collect();
    direct.sort();
    if direct != [5, 5, 15] {
        return fail(format!("direct cycle lengths {direct:?}"));
    }
    pass("companion matches printed cycles; cycle lengths 15, 5, 5".into())
}

fn check_example6(_: usize) -> (ClaimStatus, String) {
    let shifted = CddParams::alegre_params().shift().shift();
    let derived_pi = shifted.pi().clone();
    let pi_ok = derived_pi == Permutation::parse_cycles("(4,1,2)", 5).unwrap();
    let derived_t = shifted.offsets().to_vec();
    let printed_t = vec![4usize, 3, 1, 1, 0];
    if !pi_ok {
        return fail(format!("derived pi {derived_pi} != printed (4,1,2)"));
    }
    if shifted.companion() != builtins::alegre_factors()[1] {
        return fail("derived companion differs from the stored t-factor".into());
    }
    if derived_t == printed_t {
        return fail("printed offsets unexpectedly reproduce the derived parameters".into());
    }
    let printed_params = CddParams::new(5, 5, derived_pi, printed_t.clone());
    let comparison = match printed_params {
        Ok(p) => {
            let g = p.digraph();
            let h = shifted.digraph();
            format!(
                "printed-offset digraph diameter {:?}, derived diameter {:?}, isomorphic: {}",
                g.diameter(),
                h.diameter(),
                iso::isomorphic(&g, &h).is_some()
            )
        }
        Err(e) => format!("printed offsets are not even valid parameters: {e}"),
    };
    (
        ClaimStatus::FlaggedTypo,
        format!(
            "derived offsets {:?} reproduce the stored t-factor exactly; printed {printed_t:?} do not ({comparison})",
            derived_t
        ),
    )
}

fn check_example7(max_elements: usize) -> (ClaimStatus, String) {
    let gens = builtins::alegre_cover_generators();
    let res = match cover::group_bfs_with(&gens, max_elements, true) {
        Ok(r) => r,
        Err(e) => return fail(format!("bfs: {e}")),
    };
    if !res.complete {
        return (
            ClaimStatus::SkippedScale,
            format!("element cap {max_elements} hit before closure"),
        );
    }
    let mut problems = Vec::new();
    if res.order != 187_500 {
        problems.push(format!("order {}", res.order));
    }
    if res.order != 60 * 5usize.pow(5) {
        problems.push("order != 60 * 5^5".into());
    }
    if res.diameter != 23 {
        problems.push(format!("diameter {}", res.diameter));
    }
    if res.extremal.len() != 11 {
        problems.push(format!("{} extremal elements", res.extremal.len()));
    }
    for c in cover::alegre_cover_relations() {
        if !c.holds {
            problems.push(format!("relation failed: {}", c.label));
        }
    }
    if !problems.is_empty() {
        return fail(problems.join("; "));
    }
    // the published conjugation cycle in relation 7 repeats a vertex and
    // cannot be parsed; the recomputed value is used instead
    let printed_theta = "(7,21,24,8,20,12,1,4,13,0,17,9,18,5,22,11,14,23,10,22,16,19,3,15)";
    let parse = Permutation::parse_cycles(printed_theta, 25);
    let note = match parse {
        Err(e) => format!("printed conjugation cycle rejected ({e}); recomputed value verified"),
        Ok(_) => return fail("printed relation-7 cycle unexpectedly parsed".into()),
    };
    (
        ClaimStatus::FlaggedTypo,
        format!("order 187,500 = 60*5^5, diameter 23, 11 extremal; relations 1-6, 8, 9 pass; {note}"),
    )
}

fn check_example8(max_elements: usize) -> (ClaimStatus, String) {
    let (rho, sigma, g) = cover::example8_construct();
    let printed = Permutation::parse_cycles(
        "(0,7,14,21,28,35,42)\
         (1,47,27,22,19,48,43,40,20,15,12,41,36,33,13,8,5,34,29,26,6)\
         (2,11,16,25,30,39,44,4,9,18,23,32,37,46)\
         (3,45,38,31,24,17,10)",
        49,
    )
    .unwrap();
    if sigma != printed {
        return fail(format!("sigma {sigma} != printed cycles"));
    }
    if g.diameter() != Ok(7) {
        return fail(format!("diameter {:?}", g.diameter()));
    }
    let line = builtins::alegre().line_digraph();
    if line.n() != 50 || line.diameter() != Ok(5) {
        return fail(format!(
            "line digraph of Alegre: {} vertices, diameter {:?}",
            line.n(),
            line.diameter()
        ));
    }
    let res = cover::group_bfs(&[rho, sigma], max_elements.min(200_000)).unwrap();
    if res.complete {
        return fail(format!(
            "group unexpectedly closed at {} elements",
            res.order
        ));
    }
    (
        ClaimStatus::SkippedScale,
        "sigma matches printed cycles and the digraph has diameter 7; the covering group \
         (order ~4.15e9) exceeds the element budget, and the published transposition \
         offsets for rho^-1 sigma do not reproduce the printed sigma (corrected offsets \
         (7i+2,7i+10), (7i,7i+6), (7i+4,7i+8) with a C_5^4 tail are used)"
            .into(),
    )
}

fn check_example9(_: usize) -> (ClaimStatus, String) {
    let ((a, b), (alt1, alt2)) = cover::example9_pairs();
    let res = cover::group_bfs(&[a.clone(), b.clone()], 10_000).unwrap();
    if res.order != 1296 || res.diameter != 14 {
        return fail(format!("order {} diameter {}", res.order, res.diameter));
    }
    let main = cover::group_elements(&[a, b], 10_000).unwrap();
    let alt = cover::group_elements(&[alt1, alt2], 10_000).unwrap();
    if main != alt {
        return fail("alternate generating pair spans a different element set".into());
    }
    pass("order 1296, directed diameter 14; alternate pair generates the same set".into())
}

fn check_example10(_: usize) -> (ClaimStatus, String) {
    let res = search::enumerate(&SearchSpec::exhaustive(6, 2));
    if res.representatives.len() != 3 {
        return fail(format!("{} classes", res.representatives.len()));
    }
    let z = Permutation::rotation(6, 1);
    let digraphs: Vec<Digraph> = res
        .representatives
        .iter()
        .map(|y| Digraph::from_factors(&[z.clone(), y.clone()]).unwrap())
        .collect();
    let kautz = builtins::kautz(2, 2);
    let mut non_kautz_reciprocal = 0;
    for g in &digraphs {
        if iso::isomorphic(g, &kautz).is_none() {
            non_kautz_reciprocal += g.reciprocal_edge_count();
        }
    }
    if non_kautz_reciprocal != 0 {
        return fail(format!(
            "{non_kautz_reciprocal} reciprocal edges outside the Kautz class"
        ));
    }
    let third = Digraph::from_factors(&builtins::example10_3()).unwrap();
    let cov = cover::covering_group(&third, 100_000).unwrap();
    if cov.order != 120 || cov.diameter != 10 {
        return fail(format!(
            "third-class cover order {} diameter {}",
            cov.order, cov.diameter
        ));
    }
    let facs = third.all_factorizations();
    if facs.len() != 2 {
        return fail(format!("{} factorizations of the third class", facs.len()));
    }
    // the two factorizations are exchanged by an automorphism, so the
    // decomposition is unique up to symmetry (the stronger published
    // claim of literal uniqueness does not hold)
    let auts = iso::automorphisms(&third);
    let orbit_closed = auts.iter().any(|p| {
        let mapped: Vec<Permutation> = facs[0]
            .iter()
            .map(|f| f.conjugate_by(p).unwrap())
            .collect();
        let mut m = mapped;
        m.sort_by(|x, y| x.images().cmp(y.images()));
        let mut f1 = facs[1].clone();
        f1.sort_by(|x, y| x.images().cmp(y.images()));
        m == f1
    });
    if !orbit_closed {
        return fail("the two factorizations are not related by an automorphism".into());
    }
    pass(
        "3 classes; non-Kautz classes have no reciprocal edges; third-class covering group \
         has order 120 and diameter 10; its 1-factorization is unique up to automorphism \
         (two labeled factorizations forming one orbit)"
            .into(),
    )
}

fn check_example11(_: usize) -> (ClaimStatus, String) {
    let res = search::enumerate(&SearchSpec::exhaustive(12, 3));
    if res.representatives.len() != 3 {
        return fail(format!("{} classes", res.representatives.len()));
    }
    let z = Permutation::rotation(12, 1);
    let digraphs: Vec<Digraph> = res
        .representatives
        .iter()
        .map(|y| Digraph::from_factors(&[z.clone(), y.clone()]).unwrap())
        .collect();
    let small = search::enumerate(&SearchSpec::exhaustive(6, 2));
    let z6 = Permutation::rotation(6, 1);
    let lifted: Vec<Digraph> = small
        .representatives
        .iter()
        .map(|y| {
            Digraph::from_factors(&[z6.clone(), y.clone()])
                .unwrap()
                .line_digraph()
        })
        .collect();
    for g in &digraphs {
        if !lifted.iter().any(|h| iso::isomorphic(g, h).is_some()) {
            return fail("a class is not a line digraph of an n=6 class".into());
        }
    }
    let mut orders: Vec<usize> = digraphs.iter().map(iso::automorphism_order).collect();
    orders.sort();
    if orders != vec![3, 4, 6] {
        return fail(format!("automorphism orders {orders:?}"));
    }
    for y in builtins::example11_companions() {
        let g = Digraph::from_factors(&[z.clone(), y]).unwrap();
        if !digraphs.iter().any(|h| iso::isomorphic(&g, h).is_some()) {
            return fail("a printed companion is outside the found classes".into());
        }
    }
    pass("3 classes, all line digraphs of n=6 classes; Aut orders 3, 4, 6; printed companions matched".into())
}

fn check_theorem12(_: usize) -> (ClaimStatus, String) {
    let mut checked = Vec::new();
    for a in 2..10 {
        for b in 2..10 {
            match cover::universal_order(a, b) {
                Ok(order) if order <= 1_000_000 => {
                    match cover::generates_universal(a, b, 1_000_000) {
                        Ok(true) => checked.push((a, b)),
                        Ok(false) => {
                            return fail(format!("pair for ({a},{b}) generates a proper subgroup"))
                        }
                        Err(e) => return fail(format!("({a},{b}): {e}")),
                    }
                }
                _ => {}
            }
        }
    }
    let (x, y) = cover::universal_generators(3, 3).unwrap();
    if x.flatten() != Permutation::parse_cycles("(0,1)(3,4)(6,7)(2,5,8)", 9).unwrap()
        || y.flatten() != Permutation::parse_cycles("(0,7,8,3,1,2)(4,5,6)", 9).unwrap()
    {
        return fail("(3,3) pair does not match the printed forms".into());
    }
    pass(format!("verified full generation for {checked:?}"))
}

fn check_properties(_: usize) -> (ClaimStatus, String) {
    // a quick deterministic subset; the randomized suites live in the
    // test targets
    let p = CddParams::alegre_params();
    if !p.tau_is_automorphism() {
        return fail("row-rotation automorphism check failed".into());
    }
    if p.as_gcd().digraph().unwrap().port_table() != p.digraph().port_table() {
        return fail("semi-direct form disagrees with the direct construction".into());
    }
    if p.diameter() != Ok(4) {
        return fail("representative-based diameter disagrees".into());
    }
    let g = builtins::kautz(2, 3);
    if g.line_digraph().diameter().unwrap() != g.diameter().unwrap() + 1 {
        return fail("line digraph diameter rule failed".into());
    }
    pass("deterministic spot checks pass; full randomized suites run under cargo test".into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_covers_every_claim_exactly_once() {
        let report = run_all(cover::DEFAULT_MAX_ELEMENTS);
        let ids: Vec<&str> = report.claims.iter().map(|c| c.id).collect();
        assert_eq!(ids, CLAIM_IDS);
        assert_eq!(report.failures(), 0, "failures: {:#?}", report.claims);
        let typos: Vec<&str> = report
            .claims
            .iter()
            .filter(|c| c.status == ClaimStatus::FlaggedTypo)
            .map(|c| c.id)
            .collect();
        assert!(typos.contains(&"example6"));
        assert!(typos.contains(&"example7"));
        let skipped: Vec<&str> = report
            .claims
            .iter()
            .filter(|c| c.status == ClaimStatus::SkippedScale)
            .map(|c| c.id)
            .collect();
        assert_eq!(skipped, vec!["example8"]);
    }

    #[test]
    fn run_only_selects_by_id() {
        let c = run_only("example4", 1000).unwrap();
        assert_eq!(c.status, ClaimStatus::Pass);
        assert!(run_only("example99", 1000).is_none());
    }

    #[test]
    fn low_cap_reports_skipped_scale() {
        let c = run_only("example7", 1000).unwrap();
        assert_eq!(c.status, ClaimStatus::SkippedScale);
    }
}

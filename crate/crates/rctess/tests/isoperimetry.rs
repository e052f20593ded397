//! Isoperimetric formula and iteration tests.

use num::rational::Ratio;
use rctess::error::Error;
use rctess::isoperimetry::{
    animal_bound, animal_counts, beta_closed_form, beta_delta_exact, brute_force_iso, iso_exact,
    peres_iterate, ratio_at_least_iso, ratio_profile,
};
use rctess::tessellation::{build_ball_patch, dual_graph, patch_edge_sets};

const TOL: f64 = 1e-12;

#[test]
fn iso_exact_values() {
    assert!((iso_exact(5, 5).unwrap() - 5f64.sqrt()).abs() < 1e-15);
    assert_eq!(iso_exact(4, 4).unwrap(), 0.0);
    assert_eq!(iso_exact(3, 6).unwrap(), 0.0);
    assert_eq!(iso_exact(6, 3).unwrap(), 0.0);
    for d in 4..=9u32 {
        let expect = ((d as f64 - 2.0) * (d as f64 - 3.0)).sqrt();
        assert!((iso_exact(d, 6).unwrap() - expect).abs() < TOL, "d = {d}");
    }
    assert!(matches!(iso_exact(3, 5), Err(Error::SphericalSpec { .. })));
}

#[test]
fn beta_delta_identities_over_spec_grid() {
    for d in 3..=12u32 {
        for dh in 3..=12u32 {
            if (d - 2) * (dh - 2) < 4 {
                continue;
            }
            let r = beta_delta_exact(d, dh).unwrap();
            // Two algebraic routes to beta must agree.
            let closed = beta_closed_form(d, dh).unwrap();
            assert!((r.beta - closed).abs() < TOL, "({d},{dh}) closed form");
            // Duality: beta(G) + delta(dual G) = 1.
            let dual = beta_delta_exact(dh, d).unwrap();
            assert!((r.beta + dual.delta - 1.0).abs() < TOL, "({d},{dh}) beta+delta");
            assert!((r.delta + dual.beta - 1.0).abs() < TOL, "({d},{dh}) delta+beta");
            if (d - 2) * (dh - 2) > 4 {
                assert!(r.beta + dual.beta > 1.0, "({d},{dh}) nonamenable beta sum");
                assert!(!r.amenable);
            } else {
                assert!((r.beta + dual.beta - 1.0).abs() < TOL);
                assert!(r.amenable);
            }
        }
    }
}

#[test]
fn pentagonal_spec_constants() {
    let r = beta_delta_exact(5, 5).unwrap();
    let s5 = 5f64.sqrt();
    assert!((r.beta - (5.0 + s5) / 10.0).abs() < TOL);
    assert!((r.delta - (5.0 - s5) / 10.0).abs() < TOL);
    assert!((r.beta + r.delta - 1.0).abs() < TOL, "self-dual spec");
    let r37 = beta_delta_exact(3, 7).unwrap();
    let r73 = beta_delta_exact(7, 3).unwrap();
    assert!((r37.beta + r73.delta - 1.0).abs() < TOL);
}

#[test]
fn ratio_profiles() {
    let g = build_ball_patch(5, 5, 4).unwrap();

    let single = patch_edge_sets(&g, &[0]).unwrap();
    let p = ratio_profile(&single).unwrap();
    assert_eq!(p.boundary_to_size, Ratio::new(5, 1));
    assert_eq!(p.size_to_internal, None);
    assert!(matches!(p.size_to_internal_strict(), Err(Error::NoInternalEdges)));
    assert_eq!(p.size_to_star, Ratio::new(1, 5));

    let pentagon = patch_edge_sets(&g, &g.face(0).cycle.clone()).unwrap();
    let p = ratio_profile(&pentagon).unwrap();
    assert_eq!(p.boundary_to_size, Ratio::new(3, 1));
    assert_eq!(p.size_to_internal, Some(Ratio::new(1, 1)));
    assert_eq!(p.size_to_star, Ratio::new(1, 4));

    // Tree sets: |∂K|/|K| = d - 2 + 2/|K|.
    let mut path = vec![0u32];
    let mut cur = 0u32;
    for _ in 0..3 {
        let next = g.neighbors(cur).find(|w| !path.contains(w)).unwrap();
        path.push(next);
        cur = next;
    }
    let tree = patch_edge_sets(&g, &path).unwrap();
    let p = ratio_profile(&tree).unwrap();
    assert_eq!(tree.internal_edges().len(), path.len() - 1, "path is a tree (girth 5)");
    assert_eq!(p.boundary_to_size, Ratio::new(5 - 2, 1) + Ratio::new(2, path.len() as i64));
}

#[test]
fn brute_force_dominates_iso_and_is_monotone() {
    let g = build_ball_patch(5, 5, 7).unwrap();
    let mut prev = Ratio::new(i64::MAX, 1);
    for max_size in 1..=7usize {
        let r = brute_force_iso(&g, 0, max_size, u64::MAX).unwrap();
        assert!(r.min_ratio <= prev, "nonincreasing in max_size");
        assert!(
            ratio_at_least_iso(*r.min_ratio.numer() as u64, *r.min_ratio.denom() as u64, 5, 5)
                .unwrap(),
            "minimum stays above the isoperimetric constant"
        );
        prev = r.min_ratio;
    }
}

#[test]
fn peres_iteration_on_hyperbolic_spec() {
    let g = build_ball_patch(5, 5, 8).unwrap();
    let pair = dual_graph(g).unwrap();
    let trace = peres_iterate(&pair, &[0], 3).unwrap();
    assert!(!trace.truncated);
    assert_eq!(trace.steps.len(), 4);
    assert!(trace.contraction_a < 1.0);
    for w in trace.steps.windows(2) {
        assert!(w[1].kappa < w[0].kappa, "kappa strictly decreasing");
    }
    for s in &trace.steps {
        assert!(
            ratio_at_least_iso(s.k_boundary, s.k_vertices, 5, 5).unwrap(),
            "kappa >= 0 exactly"
        );
        if let Some(dual) = &s.dual {
            assert!(
                ratio_at_least_iso(dual.l_boundary, dual.l_vertices, 5, 5).unwrap(),
                "lambda >= 0 exactly (self-dual spec)"
            );
        }
    }
    assert!(trace.contraction_holds(1e-9));
    // Frozen first rows: K_0 = {o}, K_1 = closure of the five faces at o.
    assert_eq!(trace.steps[0].k_vertices, 1);
    assert_eq!(trace.steps[0].k_boundary, 5);
    assert_eq!(trace.steps[1].k_vertices, 16);
    assert_eq!(trace.steps[1].k_boundary, 40);
}

#[test]
fn peres_iteration_amenable_case() {
    let g = build_ball_patch(4, 4, 9).unwrap();
    let pair = dual_graph(g).unwrap();
    let trace = peres_iterate(&pair, &[0], 3).unwrap();
    assert!(!trace.truncated);
    assert_eq!(trace.iota, 0.0);
    for w in trace.steps.windows(2) {
        assert!(w[1].kappa < w[0].kappa, "ratios decrease toward 0");
    }
    assert!(trace.steps.last().unwrap().kappa < 0.6); // 4/(2n+1) at n = 3
}

#[test]
fn peres_zero_steps_and_truncation() {
    let g = build_ball_patch(5, 5, 4).unwrap();
    let pair = dual_graph(g).unwrap();
    let trace = peres_iterate(&pair, &[0], 0).unwrap();
    assert_eq!(trace.steps.len(), 1);
    assert_eq!(trace.steps[0].k_vertices, 1);
    assert_eq!(trace.steps[0].k_boundary, 5);
    assert!(trace.steps[0].dual.is_none());

    // Too many steps for the patch: partial trace, flagged.
    let trace = peres_iterate(&pair, &[0], 6).unwrap();
    assert!(trace.truncated);
    assert!(trace.steps.len() < 7);
}

#[test]
fn bond_animal_counts_and_bound() {
    let g = build_ball_patch(5, 5, 7).unwrap();
    let counts = animal_counts(&g, 0, 6, u64::MAX).unwrap();
    assert_eq!(counts[0], 5, "b_1 = d");
    assert_eq!(counts[1], 30, "b_2 = C(5,2) + 5*4");
    for (i, &b) in counts.iter().enumerate() {
        let n = (i + 1) as u32;
        assert!((b as f64) <= animal_bound(5, n), "b_{n} within the percolation bound");
    }
    // Against an order-insensitive second enumerator.
    assert_eq!(&counts[..5], hash_animal_counts(&g, 0, 5).as_slice());

    let sq = build_ball_patch(4, 4, 7).unwrap();
    let counts = animal_counts(&sq, 0, 5, u64::MAX).unwrap();
    assert_eq!(counts[0], 4);
    assert_eq!(counts[1], 6 + 4 * 3, "pairs at o plus paths through o");
    assert_eq!(&counts[..5], hash_animal_counts(&sq, 0, 5).as_slice());
}

/// Second, independent bond-animal enumerator: breadth-first growth with
/// set-hash deduplication instead of canonical-path counting.
fn hash_animal_counts(g: &rctess::tessellation::PlanarGraph, root: u32, n_max: usize) -> Vec<u64> {
    use std::collections::BTreeSet;
    use std::collections::HashSet;
    let mut counts = vec![0u64; n_max];
    let mut layer: HashSet<BTreeSet<u32>> = HashSet::new();
    layer.insert(BTreeSet::new());
    for n in 1..=n_max {
        let mut next: HashSet<BTreeSet<u32>> = HashSet::new();
        for set in &layer {
            // Vertices spanned by the subgraph (root always included).
            let mut verts: BTreeSet<u32> = BTreeSet::new();
            verts.insert(root);
            for &e in set {
                let (u, v) = g.edge(e).endpoints();
                verts.insert(u);
                verts.insert(v);
            }
            for &v in &verts {
                for &e in g.incident_edges(v) {
                    if !set.contains(&e) {
                        let mut grown = set.clone();
                        grown.insert(e);
                        next.insert(grown);
                    }
                }
            }
        }
        counts[n - 1] = next.len() as u64;
        layer = next;
    }
    counts
}

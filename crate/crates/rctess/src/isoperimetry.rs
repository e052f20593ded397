//! Isoperimetric constants of `{d, d̂}` graphs and the machinery around
//! them: exact closed forms, empirical ratio calculus, a brute-force
//! minimizer over anchored connected sets, bond-animal enumeration, and the
//! alternating primal/dual closure iteration whose boundary ratios converge
//! to the isoperimetric constant.
//!
//! Ratios are kept as exact integer fractions; comparisons against the
//! (irrational) isoperimetric constant compare squares, so floating-point
//! ties cannot leak into the inequalities.

use crate::error::{Error, Result};
use crate::tessellation::{geometry_of, GraphPair, Patch, PlanarGraph};
use num::rational::Ratio;
use serde::Serialize;

/// `ι'_E(G) = (d-2) sqrt(1 - 4/((d-2)(d̂-2)))` for a planar regular graph
/// of degree `d` with regular dual of degree `d̂`. Zero exactly in the three
/// euclidean cases.
pub fn iso_exact(d: u32, codegree: u32) -> Result<f64> {
    geometry_of(d, codegree)?;
    let dd = (d as f64 - 2.0) * (codegree as f64 - 2.0);
    Ok((d as f64 - 2.0) * (1.0 - 4.0 / dd).sqrt())
}

/// `ι'_E(G)^2` as an exact fraction `(d-2)^2 (D-4)/D`, `D = (d-2)(d̂-2)`.
pub fn iso_exact_squared(d: u32, codegree: u32) -> Result<Ratio<i128>> {
    geometry_of(d, codegree)?;
    let a = d as i128 - 2;
    let b = codegree as i128 - 2;
    Ok(Ratio::new(a * a * (a * b - 4), a * b))
}

/// Exact test of `num/den >= ι'_E(G)`, comparing squares.
pub fn ratio_at_least_iso(num: u64, den: u64, d: u32, codegree: u32) -> Result<bool> {
    let iso2 = iso_exact_squared(d, codegree)?;
    Ok(Ratio::new((num as i128) * (num as i128), (den as i128) * (den as i128)) >= iso2)
}

/// Isoperimetric quantities of a spec and of its dual.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct IsoReport {
    pub d: u32,
    pub codegree: u32,
    /// `ι'_E(G)`.
    pub iota: f64,
    /// `β(G) = 2/(d - ι)`: limiting infimum of `|K|/|E(K)|`.
    pub beta: f64,
    /// `δ(G) = 2/(d + ι)`: limiting supremum of `|K|/|E*(K)|`.
    pub delta: f64,
    pub iota_dual: f64,
    pub beta_dual: f64,
    pub delta_dual: f64,
    pub amenable: bool,
}

/// Closed form for `β(G)` obtained by rationalizing `2/(d - ι)`:
/// `[d(d̂-2) + sqrt((d-2)(d̂-2)(dd̂-2d-2d̂))] / (2(dd̂-d-d̂))`.
/// An independent algebraic route, used to cross-check [`beta_delta_exact`].
pub fn beta_closed_form(d: u32, codegree: u32) -> Result<f64> {
    geometry_of(d, codegree)?;
    let (d, dh) = (d as f64, codegree as f64);
    let disc = (d - 2.0) * (dh - 2.0) * (d * dh - 2.0 * d - 2.0 * dh);
    Ok((d * (dh - 2.0) + disc.sqrt()) / (2.0 * (d * dh - d - dh)))
}

/// Compute `ι`, `β`, `δ` for the spec and its dual. The report satisfies
/// `β(G) + δ(d̂G) = 1` and, for hyperbolic specs, `β(G) + β(d̂G) > 1`.
pub fn beta_delta_exact(d: u32, codegree: u32) -> Result<IsoReport> {
    let iota = iso_exact(d, codegree)?;
    let iota_dual = iso_exact(codegree, d)?;
    Ok(IsoReport {
        d,
        codegree,
        iota,
        beta: 2.0 / (d as f64 - iota),
        delta: 2.0 / (d as f64 + iota),
        iota_dual,
        beta_dual: 2.0 / (codegree as f64 - iota_dual),
        delta_dual: 2.0 / (codegree as f64 + iota_dual),
        amenable: iota == 0.0,
    })
}

/// The three quotients of a finite set: `|∂_E K|/|K|`, `|K|/|E(K)|`,
/// `|K|/|E*(K)|`, as exact fractions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioProfile {
    pub boundary_to_size: Ratio<i64>,
    /// `None` when `E(K)` is empty.
    pub size_to_internal: Option<Ratio<i64>>,
    pub size_to_star: Ratio<i64>,
}

impl RatioProfile {
    pub fn size_to_internal_strict(&self) -> Result<Ratio<i64>> {
        self.size_to_internal.ok_or(Error::NoInternalEdges)
    }
}

pub fn ratio_profile(patch: &Patch<'_>) -> Result<RatioProfile> {
    let k = patch.size() as i64;
    if k == 0 {
        return Err(Error::EmptyPatch);
    }
    let internal = patch.internal_edges().len() as i64;
    let boundary = patch.boundary_edges().len() as i64;
    Ok(RatioProfile {
        boundary_to_size: Ratio::new(boundary, k),
        size_to_internal: (internal > 0).then(|| Ratio::new(k, internal)),
        size_to_star: Ratio::new(k, internal + boundary),
    })
}

/// Enumerate every connected set of interior vertices containing `root`,
/// up to `max_size`, each exactly once. `visit(set, boundary)` returns
/// whether to descend into supersets. Candidate lists are handled with the
/// usual exclusion discipline: once a branch for candidate `v` has been
/// explored, `v` is banned for the remaining branches of that node.
fn enumerate_connected_sets<F>(
    g: &PlanarGraph,
    root: u32,
    max_size: usize,
    cap: u64,
    visit: &mut F,
) -> Result<u64>
where
    F: FnMut(&[u32], i64) -> bool,
{
    const FREE: u8 = 0;
    const IN_SET: u8 = 1;
    const BANNED: u8 = 2;
    const QUEUED: u8 = 3;

    struct Ctx<'g, F> {
        g: &'g PlanarGraph,
        d: i64,
        max_size: usize,
        cap: u64,
        state: Vec<u8>,
        cur: Vec<u32>,
        boundary: i64,
        visited: u64,
        visit: F,
    }

    impl<'g, F: FnMut(&[u32], i64) -> bool> Ctx<'g, F> {
        // On entry every candidate is stamped QUEUED; on return every
        // candidate is stamped BANNED (the caller restores).
        fn recurse(&mut self, cands: &[u32]) -> Result<()> {
            for (i, &v) in cands.iter().enumerate() {
                self.visited += 1;
                if self.visited > self.cap {
                    return Err(Error::BudgetExceeded { visited: self.visited, cap: self.cap });
                }
                let edges_into =
                    self.g.neighbors(v).filter(|&w| self.state[w as usize] == IN_SET).count()
                        as i64;
                let new_boundary = self.boundary + self.d - 2 * edges_into;

                self.cur.push(v);
                let descend = (self.visit)(&self.cur, new_boundary)
                    && self.cur.len() < self.max_size;
                if descend {
                    self.state[v as usize] = IN_SET;
                    let saved_boundary = self.boundary;
                    self.boundary = new_boundary;
                    let mut child: Vec<u32> = cands[i + 1..].to_vec();
                    let fresh_from = child.len();
                    for w in self.g.neighbors(v) {
                        if self.state[w as usize] == FREE && self.g.is_interior(w) {
                            self.state[w as usize] = QUEUED;
                            child.push(w);
                        }
                    }
                    self.recurse(&child)?;
                    for &w in &child[fresh_from..] {
                        self.state[w as usize] = FREE;
                    }
                    for &w in &child[..fresh_from] {
                        self.state[w as usize] = QUEUED;
                    }
                    self.boundary = saved_boundary;
                }
                self.cur.pop();
                self.state[v as usize] = BANNED;
            }
            Ok(())
        }
    }

    if !g.is_interior(root) {
        return Err(Error::FrontierVertex { vertex: root });
    }
    let mut ctx = Ctx {
        g,
        d: g.spec().d as i64,
        max_size,
        cap,
        state: vec![FREE; g.vertex_count()],
        cur: vec![root],
        boundary: g.spec().d as i64,
        visited: 1,
        visit,
    };
    ctx.state[root as usize] = IN_SET;
    let descend = (ctx.visit)(&[root], ctx.boundary) && max_size > 1;
    if descend {
        let cands: Vec<u32> =
            g.neighbors(root).filter(|&w| g.is_interior(w)).collect();
        for &w in &cands {
            ctx.state[w as usize] = QUEUED;
        }
        ctx.recurse(&cands)?;
    }
    Ok(ctx.visited)
}

/// Per-size counts of connected interior vertex sets containing `root`
/// (anchored site animals). Test oracle companion to [`brute_force_iso`].
pub fn connected_set_counts(
    g: &PlanarGraph,
    root: u32,
    max_size: usize,
    cap: u64,
) -> Result<Vec<u64>> {
    let mut counts = vec![0u64; max_size + 1];
    enumerate_connected_sets(g, root, max_size, cap, &mut |set: &[u32], _| {
        counts[set.len()] += 1;
        true
    })?;
    counts.remove(0);
    Ok(counts)
}

/// Result of the exhaustive minimization of `|∂_E K|/|K|`.
#[derive(Debug, Clone)]
pub struct BruteForceResult {
    pub min_ratio: Ratio<i64>,
    /// Lexicographically smallest minimizer, sorted.
    pub argmin: Vec<u32>,
    /// Number of sets inspected (pruned subtrees excluded).
    pub visited: u64,
}

/// Exhaustively minimize `|∂_E K|/|K|` over connected `K ∋ root` with
/// `|K| <= max_size`, restricted to interior vertices (the frontier has
/// unknown surroundings). The minimum is an upper bound on `ι'_E(G)` and is
/// nonincreasing in `max_size`. Subtrees that provably cannot beat the
/// incumbent (each added vertex lowers the boundary by at most `d`) are
/// skipped.
pub fn brute_force_iso(
    g: &PlanarGraph,
    root: u32,
    max_size: usize,
    cap: u64,
) -> Result<BruteForceResult> {
    let d = g.spec().d as i64;
    let mut best_num = i64::MAX;
    let mut best_den = 1i64;
    let mut best_set: Vec<u32> = Vec::new();

    let visited = enumerate_connected_sets(g, root, max_size, cap, &mut |set: &[u32], boundary| {
        let k = set.len() as i64;
        let better = boundary * best_den < best_num * k;
        let tied = boundary * best_den == best_num * k;
        if better || tied {
            let mut sorted = set.to_vec();
            sorted.sort_unstable();
            if better || sorted < best_set {
                best_num = boundary;
                best_den = k;
                best_set = sorted;
            }
        }
        // Descend only if some completion within the size budget could
        // still improve on the incumbent.
        let remaining = (max_size as i64) - k;
        (0..=remaining).any(|extra| {
            let opt_num = (boundary - d * extra).max(1);
            let opt_den = k + extra;
            opt_num * best_den <= best_num * opt_den
        })
    })?;

    Ok(BruteForceResult { min_ratio: Ratio::new(best_num, best_den), argmin: best_set, visited })
}

/// One row of the closure-iteration trace.
#[derive(Debug, Clone, Serialize)]
pub struct IterationStep {
    pub k_vertices: u64,
    pub k_boundary: u64,
    pub k_internal: u64,
    /// `|∂_E K_n|/|K_n| - ι`.
    pub kappa: f64,
    /// Dual-side data; `None` on the final row.
    pub dual: Option<DualStep>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DualStep {
    pub l_vertices: u64,
    pub l_boundary: u64,
    pub l_internal: u64,
    /// `|∂_E L_n|/|L_n| - ι̂`.
    pub lambda: f64,
    /// Slack term `b_n` of the contraction inequality.
    pub b: f64,
}

impl IterationStep {
    pub fn k_ratio(&self) -> f64 {
        self.k_boundary as f64 / self.k_vertices as f64
    }
}

/// Trace of the alternating closure iteration `L_n = (K̂_n)'`,
/// `K_{n+1} = (L̂_n)'`, whose boundary ratios tend to `ι` and `ι̂`.
#[derive(Debug, Clone, Serialize)]
pub struct IterationTrace {
    pub iota: f64,
    pub iota_dual: f64,
    /// `a = [ (d-ι)(d̂-ι̂) / ((d+ι)(d̂+ι̂)) ]^2`, strictly below 1 for
    /// hyperbolic specs.
    pub contraction_a: f64,
    pub steps: Vec<IterationStep>,
    /// True when the iteration reached the patch frontier and stopped early.
    pub truncated: bool,
}

impl IterationTrace {
    /// Verify `2κ_{n+1} <= a · 2κ_n + b_n` at every recorded step.
    pub fn contraction_holds(&self, tol: f64) -> bool {
        self.steps.windows(2).all(|w| {
            let b = w[0].dual.as_ref().map(|d| d.b).unwrap_or(f64::INFINITY);
            2.0 * w[1].kappa <= self.contraction_a * 2.0 * w[0].kappa + b + tol
        })
    }
}

/// Run `steps` iterations of the closure recursion from the connected
/// interior set `k0`. On frontier contact the trace is returned truncated
/// rather than failing.
pub fn peres_iterate(pair: &GraphPair, k0: &[u32], steps: u32) -> Result<IterationTrace> {
    let spec = pair.primal().spec();
    let (d, dh) = (spec.d as f64, spec.codegree as f64);
    let iota = iso_exact(spec.d, spec.codegree)?;
    let iota_dual = iso_exact(spec.codegree, spec.d)?;
    let a = ((d - iota) * (dh - iota_dual) / ((d + iota) * (dh + iota_dual))).powi(2);

    let k_patch = pair.primal_patch(k0)?;
    if !k_patch.is_connected() {
        return Err(Error::DomainError("initial set must be connected".into()));
    }

    let mut rows: Vec<IterationStep> = Vec::new();
    let mut k_row = IterationStep {
        k_vertices: k_patch.size() as u64,
        k_boundary: k_patch.boundary_edges().len() as u64,
        k_internal: k_patch.internal_edges().len() as u64,
        kappa: k_patch.boundary_edges().len() as f64 / k_patch.size() as f64 - iota,
        dual: None,
    };
    let mut k_cur: Vec<u32> = k_patch.vertices().to_vec();
    let mut truncated = false;

    for _ in 0..steps {
        let l = match pair.hat_vertices(&k_cur).and_then(|hat| pair.prime_vertices(&hat)) {
            Ok(l) => l,
            Err(Error::FrontierContact { .. }) => {
                truncated = true;
                break;
            }
            Err(e) => return Err(e),
        };
        let l_patch = match pair.dual_patch(&l) {
            Ok(p) => p,
            Err(Error::FrontierVertex { .. }) => {
                truncated = true;
                break;
            }
            Err(e) => return Err(e),
        };
        let l_boundary = l_patch.boundary_edges().len() as u64;
        let l_internal = l_patch.internal_edges().len() as u64;
        let lambda = l_boundary as f64 / l_patch.size() as f64 - iota_dual;

        let k_next = match pair.hat_faces(&l).and_then(|hat| pair.prime_faces(&hat)) {
            Ok(k) => k,
            Err(Error::FrontierContact { .. }) => {
                truncated = true;
                break;
            }
            Err(e) => return Err(e),
        };
        let k_next_patch = pair.primal_patch(&k_next)?;
        let b = ((d - iota) * (dh - iota_dual) / (dh + iota_dual)).powi(2) / l_internal as f64
            + (d - iota).powi(2) / k_next_patch.internal_edges().len() as f64;

        k_row.dual =
            Some(DualStep { l_vertices: l_patch.size() as u64, l_boundary, l_internal, lambda, b });
        rows.push(k_row);

        k_row = IterationStep {
            k_vertices: k_next_patch.size() as u64,
            k_boundary: k_next_patch.boundary_edges().len() as u64,
            k_internal: k_next_patch.internal_edges().len() as u64,
            kappa: k_next_patch.boundary_edges().len() as f64 / k_next_patch.size() as f64 - iota,
            dual: None,
        };
        k_cur = k_next;
    }
    rows.push(k_row);

    Ok(IterationTrace { iota, iota_dual, contraction_a: a, steps: rows, truncated })
}

/// Exact counts `b_1..b_n_max` of connected subgraphs of `g` containing
/// `root` with exactly `n` edges (anchored bond animals).
///
/// Needs the ball of radius `n_max` about `root` interior, so no candidate
/// edge is missing from the patch.
pub fn animal_counts(g: &PlanarGraph, root: u32, n_max: usize, cap: u64) -> Result<Vec<u64>> {
    let dist = g.bfs_distances(root);
    for v in 0..g.vertex_count() as u32 {
        if (dist[v as usize] as usize) <= n_max && !g.is_interior(v) {
            return Err(Error::FrontierContact {
                context: format!("bond-animal enumeration needs an interior ball of radius {n_max}"),
            });
        }
    }

    const FREE: u8 = 0;
    const IN_SET: u8 = 1;
    const BANNED: u8 = 2;
    const QUEUED: u8 = 3;

    struct Ctx<'g> {
        g: &'g PlanarGraph,
        n_max: usize,
        cap: u64,
        edge_state: Vec<u8>,
        vert_in: Vec<bool>,
        size: usize,
        visited: u64,
        counts: Vec<u64>,
    }

    impl<'g> Ctx<'g> {
        fn recurse(&mut self, cands: &[u32]) -> Result<()> {
            for (i, &e) in cands.iter().enumerate() {
                self.visited += 1;
                if self.visited > self.cap {
                    return Err(Error::BudgetExceeded { visited: self.visited, cap: self.cap });
                }
                self.counts[self.size + 1] += 1;
                if self.size + 1 < self.n_max {
                    self.edge_state[e as usize] = IN_SET;
                    self.size += 1;
                    let (u, v) = self.g.edge(e).endpoints();
                    let new_vertex = if !self.vert_in[u as usize] {
                        Some(u)
                    } else if !self.vert_in[v as usize] {
                        Some(v)
                    } else {
                        None
                    };
                    let mut child: Vec<u32> = cands[i + 1..].to_vec();
                    let fresh_from = child.len();
                    if let Some(w) = new_vertex {
                        self.vert_in[w as usize] = true;
                        for &e2 in self.g.incident_edges(w) {
                            if self.edge_state[e2 as usize] == FREE {
                                self.edge_state[e2 as usize] = QUEUED;
                                child.push(e2);
                            }
                        }
                    }
                    self.recurse(&child)?;
                    for &e2 in &child[fresh_from..] {
                        self.edge_state[e2 as usize] = FREE;
                    }
                    for &e2 in &child[..fresh_from] {
                        self.edge_state[e2 as usize] = QUEUED;
                    }
                    if let Some(w) = new_vertex {
                        self.vert_in[w as usize] = false;
                    }
                    self.size -= 1;
                }
                self.edge_state[e as usize] = BANNED;
            }
            Ok(())
        }
    }

    let mut ctx = Ctx {
        g,
        n_max,
        cap,
        edge_state: vec![FREE; g.edge_count()],
        vert_in: vec![false; g.vertex_count()],
        size: 0,
        visited: 0,
        counts: vec![0u64; n_max + 1],
    };
    ctx.vert_in[root as usize] = true;
    let cands: Vec<u32> = g.incident_edges(root).to_vec();
    for &e in &cands {
        ctx.edge_state[e as usize] = QUEUED;
    }
    if n_max >= 1 {
        ctx.recurse(&cands)?;
    }
    let mut counts = ctx.counts;
    counts.remove(0);
    Ok(counts)
}

/// The animal-count bound `(d-1)^n (1 - 1/(d-1))^{-((d-2)n+d)}` implied by
/// comparison with Bernoulli percolation at `p = 1/(d-1)`.
pub fn animal_bound(d: u32, n: u32) -> f64 {
    let dm1 = d as f64 - 1.0;
    let exponent = (d as f64 - 2.0) * n as f64 + d as f64;
    dm1.powi(n as i32) * (1.0 - 1.0 / dm1).powf(-exponent)
}

/// The two (reciprocal) roots of `z^2 + (1-d) z + 1`, returned as
/// `(smaller, larger)`. For codegree-6 graphs the ball growth rate
/// `θ = lim |B_{n+1}|/|B_n|` is the *larger* root; the smaller one is its
/// reciprocal. Requires `d >= 4`.
pub fn codegree6_growth_roots(d: u32) -> (f64, f64) {
    assert!(d >= 4);
    let t = d as f64 - 1.0;
    let s = (t * t - 4.0).sqrt();
    ((t - s) / 2.0, (t + s) / 2.0)
}

/// Closed form for the sphere sizes `|B_n \ B_{n-1}|` of a `{d, 6}` graph,
/// evaluated at a given root `gamma` of `z^2 + (1-d) z + 1`.
///
/// Derived from the growth generating function
/// `(z^2 + z + 1) / (z^2 + (1-d) z + 1)`: with
/// `s_n = (γ^{n+1} - γ^{-(n+1)}) / (γ - γ^{-1})`, the sphere size is `s_0`
/// for n = 0, `s_1 + s_0` for n = 1 and `s_n + s_{n-1} + s_{n-2}` after
/// that. Only the larger root reproduces the breadth-first counts; see
/// [`codegree6_growth_roots`].
pub fn codegree6_sphere_closed_form(n: u32, gamma: f64) -> f64 {
    let s = |k: i64| -> f64 {
        (gamma.powi(k as i32 + 1) - gamma.powi(-(k as i32) - 1)) / (gamma - 1.0 / gamma)
    };
    match n {
        0 => s(0),
        1 => s(1) + s(0),
        _ => s(n as i64) + s(n as i64 - 1) + s(n as i64 - 2),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tessellation::build_ball_patch;

    #[test]
    fn anchored_site_animal_counts_on_square_lattice() {
        // Connected vertex sets containing a fixed vertex of {4,4} are in
        // bijection with fixed polyominoes marked at a cell: n * A001168(n).
        let g = build_ball_patch(4, 4, 8).unwrap();
        let counts = connected_set_counts(&g, 0, 6, u64::MAX).unwrap();
        assert_eq!(counts, vec![1, 4, 18, 76, 315, 1296]);
    }

    #[test]
    fn brute_force_square_lattice_block() {
        let g = build_ball_patch(4, 4, 12).unwrap();
        let r = brute_force_iso(&g, 0, 9, u64::MAX).unwrap();
        assert_eq!(r.min_ratio, Ratio::new(12, 9));
        assert_eq!(r.argmin.len(), 9);
    }

    #[test]
    fn brute_force_pentagon() {
        let g = build_ball_patch(5, 5, 6).unwrap();
        let r1 = brute_force_iso(&g, 0, 1, u64::MAX).unwrap();
        assert_eq!(r1.min_ratio, Ratio::new(5, 1));
        let r5 = brute_force_iso(&g, 0, 5, u64::MAX).unwrap();
        assert_eq!(r5.min_ratio, Ratio::new(3, 1));
        assert_eq!(r5.argmin, vec![0, 1, 2, 3, 4], "seed pentagon is the lex-smallest minimizer");
        assert!(ratio_at_least_iso(3, 1, 5, 5).unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        let g = build_ball_patch(5, 5, 6).unwrap();
        assert!(matches!(
            brute_force_iso(&g, 0, 8, 100),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(matches!(
            animal_counts(&g, 0, 4, 50),
            Err(Error::BudgetExceeded { .. })
        ));
        // Too shallow a patch for the requested animal size.
        let shallow = build_ball_patch(5, 5, 2).unwrap();
        assert!(matches!(
            animal_counts(&shallow, 0, 6, u64::MAX),
            Err(Error::FrontierContact { .. })
        ));
    }
}

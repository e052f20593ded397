//! Edge-set calculus for a finite vertex set `K`:
//! `E(K)` (both endpoints in `K`), `E*(K)` (at least one endpoint in `K`)
//! and the edge boundary `∂_E K = E*(K) \ E(K)`.

use super::PlanarGraph;
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct Patch<'g> {
    graph: &'g PlanarGraph,
    vertices: Vec<u32>,
    internal_edges: Vec<u32>,
    boundary_edges: Vec<u32>,
}

/// Cache the three edge sets of `K`. All vertices must be interior so that
/// degrees are full.
pub fn patch_edge_sets<'g>(graph: &'g PlanarGraph, k: &[u32]) -> Result<Patch<'g>> {
    Patch::new(graph, k.to_vec())
}

impl<'g> Patch<'g> {
    pub(super) fn new(graph: &'g PlanarGraph, mut vertices: Vec<u32>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyPatch);
        }
        vertices.sort_unstable();
        vertices.dedup();
        for &v in &vertices {
            if !graph.is_interior(v) {
                return Err(Error::FrontierVertex { vertex: v });
            }
        }
        let mut member = vec![false; graph.vertex_count()];
        for &v in &vertices {
            member[v as usize] = true;
        }
        let mut internal_edges = Vec::new();
        let mut boundary_edges = Vec::new();
        for &v in &vertices {
            for &e in graph.incident_edges(v) {
                let w = graph.edge(e).other(v);
                if member[w as usize] {
                    if v < w {
                        internal_edges.push(e);
                    }
                } else {
                    boundary_edges.push(e);
                }
            }
        }
        internal_edges.sort_unstable();
        boundary_edges.sort_unstable();
        Ok(Patch { graph, vertices, internal_edges, boundary_edges })
    }

    pub fn graph(&self) -> &'g PlanarGraph {
        self.graph
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    /// `E(K)`.
    pub fn internal_edges(&self) -> &[u32] {
        &self.internal_edges
    }

    /// `∂_E K`.
    pub fn boundary_edges(&self) -> &[u32] {
        &self.boundary_edges
    }

    /// `|E*(K)| = |E(K)| + |∂_E K|`.
    pub fn star_count(&self) -> usize {
        self.internal_edges.len() + self.boundary_edges.len()
    }

    /// `E*(K)` as a sorted edge list.
    pub fn star_edges(&self) -> Vec<u32> {
        let mut all: Vec<u32> =
            self.internal_edges.iter().chain(self.boundary_edges.iter()).copied().collect();
        all.sort_unstable();
        all
    }

    /// Whether `(K, E(K))` is connected.
    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return false;
        }
        let mut index = std::collections::HashMap::new();
        for (i, &v) in self.vertices.iter().enumerate() {
            index.insert(v, i);
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(i) = stack.pop() {
            let v = self.vertices[i];
            for w in self.graph.neighbors(v) {
                if let Some(&iw) = index.get(&w) {
                    if !seen[iw] {
                        seen[iw] = true;
                        count += 1;
                        stack.push(iw);
                    }
                }
            }
        }
        count == self.vertices.len()
    }
}

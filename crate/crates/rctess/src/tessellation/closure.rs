//! A primal/dual pair with the two closure operators between vertex sets and
//! face sets.
//!
//! For a set of faces `K` (given as dual vertices), `prime` returns the
//! primal vertices bounding those faces. `hat` returns every face enclosed
//! by the outermost cycle of the edges spanned by `prime(K)` — the
//! hole-filled, simply connected hull of `K`. The same two operators exist
//! with the roles of the graphs swapped, acting on primal vertex sets.

use super::{Patch, PlanarGraph, NONE};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct GraphPair {
    primal: PlanarGraph,
    dual: PlanarGraph,
    dual_vertex_of_face: Vec<u32>,
    face_of_dual_vertex: Vec<u32>,
}

impl GraphPair {
    pub(super) fn assemble(
        primal: PlanarGraph,
        dual: PlanarGraph,
        dual_vertex_of_face: Vec<u32>,
        face_of_dual_vertex: Vec<u32>,
    ) -> Self {
        GraphPair { primal, dual, dual_vertex_of_face, face_of_dual_vertex }
    }

    pub fn primal(&self) -> &PlanarGraph {
        &self.primal
    }

    pub fn dual(&self) -> &PlanarGraph {
        &self.dual
    }

    pub fn dual_vertex_of_face(&self, f: u32) -> Option<u32> {
        let dv = self.dual_vertex_of_face[f as usize];
        (dv != NONE).then_some(dv)
    }

    pub fn face_of_dual_vertex(&self, dv: u32) -> u32 {
        self.face_of_dual_vertex[dv as usize]
    }

    /// `K'` for a face set: all primal vertices incident to the given faces.
    ///
    /// Errors with [`Error::FrontierContact`] if any such vertex lies on the
    /// patch frontier, since its surroundings are not fully built.
    pub fn prime_faces(&self, dual_verts: &[u32]) -> Result<Vec<u32>> {
        let mut member = vec![false; self.primal.vertex_count()];
        for &dv in dual_verts {
            let f = self.face_of_dual_vertex[dv as usize];
            for &v in &self.primal.faces[f as usize].cycle {
                member[v as usize] = true;
            }
        }
        let verts: Vec<u32> =
            (0..self.primal.vertex_count() as u32).filter(|&v| member[v as usize]).collect();
        for &v in &verts {
            if !self.primal.is_interior(v) {
                return Err(Error::FrontierContact {
                    context: format!("prime of face set touches frontier vertex {v}"),
                });
            }
        }
        Ok(verts)
    }

    /// `K'` for a primal vertex set: all faces incident to the given
    /// vertices, as dual vertices. Every input vertex must be interior.
    pub fn prime_vertices(&self, verts: &[u32]) -> Result<Vec<u32>> {
        let mut member = vec![false; self.dual.vertex_count()];
        for &v in verts {
            if !self.primal.is_interior(v) {
                return Err(Error::FrontierContact {
                    context: format!("prime of vertex set starts at frontier vertex {v}"),
                });
            }
            for f in self.primal.faces_at(v) {
                member[self.dual_vertex_of_face[f as usize] as usize] = true;
            }
        }
        Ok((0..self.dual.vertex_count() as u32).filter(|&dv| member[dv as usize]).collect())
    }

    /// `K̂` for a face set: the faces inside the outermost cycle of
    /// `E(K')`. Computed by splitting the plane along `E(K')` — faces are
    /// joined when they share an edge outside `E(K')` — and keeping every
    /// region that cannot reach the outer face.
    pub fn hat_faces(&self, dual_verts: &[u32]) -> Result<Vec<u32>> {
        let prime = self.prime_faces(dual_verts)?;
        let mut in_prime = vec![false; self.primal.vertex_count()];
        for &v in &prime {
            in_prime[v as usize] = true;
        }

        let mut uf = UnionFind::new(self.primal.face_count());
        for ed in &self.primal.edges {
            let spanned = in_prime[ed.u as usize] && in_prime[ed.v as usize];
            if !spanned {
                uf.union(ed.faces[0], ed.faces[1]);
            }
        }
        // Every incomplete face is part of the unbounded region.
        let mut outer = NONE;
        for (f, face) in self.primal.faces.iter().enumerate() {
            if !face.complete {
                if outer == NONE {
                    outer = f as u32;
                } else {
                    uf.union(outer, f as u32);
                }
            }
        }
        let outer_root = uf.find(outer);

        let mut out = Vec::new();
        for (f, face) in self.primal.faces.iter().enumerate() {
            if face.complete && uf.find(f as u32) != outer_root {
                out.push(self.dual_vertex_of_face[f]);
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// `K̂` for a primal vertex set: the vertices inside the outermost cycle
    /// of the dual edges spanned by `prime(K)`. Vertices are joined when
    /// they share an edge whose crossing dual edge is not spanned; regions
    /// that cannot reach the frontier are kept.
    pub fn hat_vertices(&self, verts: &[u32]) -> Result<Vec<u32>> {
        let prime = self.prime_vertices(verts)?;
        let mut in_prime = vec![false; self.dual.vertex_count()];
        for &dv in &prime {
            in_prime[dv as usize] = true;
        }

        let mut uf = UnionFind::new(self.primal.vertex_count());
        for ed in &self.primal.edges {
            let [f0, f1] = ed.faces;
            let d0 = self.dual_vertex_of_face[f0 as usize];
            let d1 = self.dual_vertex_of_face[f1 as usize];
            let spanned =
                d0 != NONE && d1 != NONE && in_prime[d0 as usize] && in_prime[d1 as usize];
            if !spanned {
                uf.union(ed.u, ed.v);
            }
        }
        let outer = (0..self.primal.vertex_count() as u32)
            .find(|&v| !self.primal.is_interior(v))
            .expect("patch has a frontier");
        let outer_root = uf.find(outer);

        let mut out: Vec<u32> = (0..self.primal.vertex_count() as u32)
            .filter(|&v| uf.find(v) != outer_root)
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    /// Edge-set calculus for a face set, carried out in the dual graph.
    pub fn dual_patch(&self, dual_verts: &[u32]) -> Result<Patch<'_>> {
        Patch::new(&self.dual, dual_verts.to_vec())
    }

    /// Edge-set calculus for a primal vertex set.
    pub fn primal_patch(&self, verts: &[u32]) -> Result<Patch<'_>> {
        Patch::new(&self.primal, verts.to_vec())
    }
}

pub(crate) struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n as u32).collect() }
    }

    pub(crate) fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let gp = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = gp;
            x = gp;
        }
        x
    }

    pub(crate) fn union(&mut self, a: u32, b: u32) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            // Root at the smaller id: keeps results independent of call order.
            if ra < rb {
                self.parent[rb as usize] = ra;
            } else {
                self.parent[ra as usize] = rb;
            }
        }
    }
}

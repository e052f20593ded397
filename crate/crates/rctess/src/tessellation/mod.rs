//! Finite patches of the `{d, d̂}` regular planar tessellation.
//!
//! A patch is grown face by face from a seed, keeping the invariant that the
//! built region is a topological disk. Every stored complete face is a full
//! `d̂`-gon; the single incomplete face of a freshly built patch is the outer
//! face, whose cycle is the patch boundary. Vertices not on the outer face
//! are *interior*: they carry their full degree `d` and a complete fan of
//! faces.
//!
//! Face cycles are stored with a consistent orientation (interior of the
//! patch to the left), which is what makes the rotation system and the dual
//! construction purely combinatorial.

mod build;
mod closure;
mod dual;
mod json;
mod patch;

pub use closure::GraphPair;
pub use json::{parse_json, GraphJson};
pub use patch::{patch_edge_sets, Patch};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Sentinel for "no face" / "no dual edge" in packed id fields.
pub(crate) const NONE: u32 = u32::MAX;

/// Construction parameters of a `{d, d̂}` patch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TessellationSpec {
    /// Vertex degree `d`.
    pub d: u32,
    /// Face size `d̂` (number of sides per face).
    pub codegree: u32,
    /// Number of construction rings around the seed.
    pub depth: u32,
}

/// Geometry class of a `{d, d̂}` spec, decided by the sign of
/// `(d-2)(d̂-2) - 4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Geometry {
    Euclidean,
    Hyperbolic,
}

impl TessellationSpec {
    pub fn new(d: u32, codegree: u32, depth: u32) -> Result<Self> {
        let spec = TessellationSpec { d, codegree, depth };
        spec.geometry()?;
        Ok(spec)
    }

    /// Classify the spec, rejecting degenerate and spherical inputs.
    pub fn geometry(&self) -> Result<Geometry> {
        if self.d < 3 || self.codegree < 3 {
            return Err(Error::DegenerateSpec { d: self.d, codegree: self.codegree });
        }
        match (self.d as i64 - 2) * (self.codegree as i64 - 2) {
            p if p < 4 => Err(Error::SphericalSpec { d: self.d, codegree: self.codegree, product: p }),
            4 => Ok(Geometry::Euclidean),
            _ => Ok(Geometry::Hyperbolic),
        }
    }
}

/// Classify a `(d, d̂)` pair without a depth.
pub fn geometry_of(d: u32, codegree: u32) -> Result<Geometry> {
    TessellationSpec { d, codegree, depth: 0 }.geometry()
}

#[derive(Debug, Clone)]
pub struct Edge {
    pub u: u32,
    pub v: u32,
    /// The (up to two) incident faces; always both set after construction
    /// (the outer face counts).
    pub faces: [u32; 2],
    /// Id of the crossing edge in the paired dual graph, `NONE` until a
    /// dual has been built.
    pub(crate) dual: u32,
}

impl Edge {
    pub fn endpoints(&self) -> (u32, u32) {
        (self.u, self.v)
    }

    pub fn other(&self, w: u32) -> u32 {
        if w == self.u {
            self.v
        } else {
            debug_assert_eq!(w, self.v);
            self.u
        }
    }

    pub fn dual_edge(&self) -> Option<u32> {
        (self.dual != NONE).then_some(self.dual)
    }
}

#[derive(Debug, Clone)]
pub struct Face {
    /// Vertex cycle, oriented with the face interior on the left.
    pub cycle: Vec<u32>,
    /// Construction ring the face was created in.
    pub ring: u32,
    /// Complete faces have exactly `codegree` sides; the outer face (and,
    /// on dual graphs, any other leftover walk) is incomplete.
    pub complete: bool,
}

/// A finite patch of a planar graph with rotation system and face list.
#[derive(Debug, Clone)]
pub struct PlanarGraph {
    pub(crate) spec: TessellationSpec,
    /// Construction ring per vertex.
    pub(crate) rings: Vec<u32>,
    /// True for vertices on an incomplete face.
    pub(crate) frontier: Vec<bool>,
    pub(crate) edges: Vec<Edge>,
    pub(crate) faces: Vec<Face>,
    /// Cyclic (counterclockwise) edge order per vertex.
    pub(crate) rotations: Vec<Vec<u32>>,
}

/// Build a patch of `depth` face-rings around a seed face.
///
/// A ring consists of all faces sharing at least a vertex with the patch
/// built so far. The construction is deterministic: ids are assigned in
/// breadth-first discovery order from the seed face.
pub fn build_tessellation(spec: TessellationSpec) -> Result<PlanarGraph> {
    spec.geometry()?;
    Ok(build::build_rings(spec))
}

/// Build a patch large enough that the whole ball `B_radius` about the
/// canonical root (vertex 0) is interior. Vertices are saturated in
/// breadth-first distance order from the root, so `rings` holds graph
/// distances.
pub fn build_ball_patch(d: u32, codegree: u32, radius: u32) -> Result<PlanarGraph> {
    geometry_of(d, codegree)?;
    Ok(build::build_ball(d, codegree, radius))
}

/// Construct the planar dual and pair it with the primal; the edge↔dual-edge
/// bijection is recorded on both graphs.
pub fn dual_graph(primal: PlanarGraph) -> Result<GraphPair> {
    dual::pair(primal)
}

impl PlanarGraph {
    pub fn spec(&self) -> TessellationSpec {
        self.spec
    }

    pub fn vertex_count(&self) -> usize {
        self.rings.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// All faces, incomplete ones included.
    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn complete_face_count(&self) -> usize {
        self.faces.iter().filter(|f| f.complete).count()
    }

    pub fn edge(&self, e: u32) -> &Edge {
        &self.edges[e as usize]
    }

    pub fn face(&self, f: u32) -> &Face {
        &self.faces[f as usize]
    }

    pub fn ring(&self, v: u32) -> u32 {
        self.rings[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.rotations[v as usize].len()
    }

    pub fn is_interior(&self, v: u32) -> bool {
        !self.frontier[v as usize]
    }

    /// Both incident faces of `e` are complete.
    pub fn is_interior_edge(&self, e: u32) -> bool {
        let ed = &self.edges[e as usize];
        ed.faces.iter().all(|&f| f != NONE && self.faces[f as usize].complete)
    }

    /// Incident edges of `v` in rotation order.
    pub fn incident_edges(&self, v: u32) -> &[u32] {
        &self.rotations[v as usize]
    }

    pub fn neighbors<'a>(&'a self, v: u32) -> impl Iterator<Item = u32> + 'a {
        self.rotations[v as usize].iter().map(move |&e| self.edges[e as usize].other(v))
    }

    pub fn edge_between(&self, u: u32, v: u32) -> Option<u32> {
        self.rotations[u as usize]
            .iter()
            .copied()
            .find(|&e| self.edges[e as usize].other(u) == v)
    }

    /// Complete faces incident to `v`, in rotation order (starting from the
    /// corner after `rotations[v][0]`). For an interior vertex this is the
    /// full fan of `d` faces.
    pub fn faces_at(&self, v: u32) -> Vec<u32> {
        let rot = &self.rotations[v as usize];
        let mut out = Vec::with_capacity(rot.len());
        for i in 0..rot.len() {
            let a = rot[i];
            let b = rot[(i + 1) % rot.len()];
            if let Some(f) = self.corner_face(a, b) {
                if self.faces[f as usize].complete {
                    out.push(f);
                }
            }
        }
        out
    }

    /// The unique complete face flanked by both edges, if any.
    fn corner_face(&self, a: u32, b: u32) -> Option<u32> {
        let fa = self.edges[a as usize].faces;
        let fb = self.edges[b as usize].faces;
        for &f in &fa {
            if f != NONE && self.faces[f as usize].complete && fb.contains(&f) {
                return Some(f);
            }
        }
        None
    }

    /// `|V| - |E| + |F|`, counting incomplete faces. Equals 2 for every
    /// finite patch.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    /// Breadth-first distances from `origin` over the patch as built.
    pub fn bfs_distances(&self, origin: u32) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.vertex_count()];
        let mut queue = std::collections::VecDeque::new();
        dist[origin as usize] = 0;
        queue.push_back(origin);
        while let Some(v) = queue.pop_front() {
            let dv = dist[v as usize];
            for w in self.neighbors(v) {
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = dv + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// The graph-metric ball `B_r` about `origin` as a [`Patch`].
    ///
    /// Fails with [`Error::TruncatedBall`] if the ball reaches the patch
    /// frontier, where degrees are deficient.
    pub fn ball(&self, origin: u32, radius: u32) -> Result<Patch<'_>> {
        let dist = self.bfs_distances(origin);
        let mut verts = Vec::new();
        for v in 0..self.vertex_count() as u32 {
            if dist[v as usize] <= radius {
                if self.frontier[v as usize] {
                    return Err(Error::TruncatedBall { center: origin, radius });
                }
                verts.push(v);
            }
        }
        Patch::new(self, verts)
    }

    /// Sphere sizes `|B_n \ B_{n-1}|` for `n = 0..=n_max`.
    ///
    /// Requires every vertex within distance `n_max - 1` of `origin` to be
    /// interior, so that the last sphere is still discovered through full
    /// neighborhoods.
    pub fn growth_sequence(&self, origin: u32, n_max: u32) -> Result<Vec<u64>> {
        let dist = self.bfs_distances(origin);
        let mut counts = vec![0u64; n_max as usize + 1];
        for v in 0..self.vertex_count() {
            let dv = dist[v];
            if dv == u32::MAX {
                continue;
            }
            if dv + 1 <= n_max && self.frontier[v] {
                return Err(Error::TruncatedBall { center: origin, radius: n_max });
            }
            if dv <= n_max {
                counts[dv as usize] += 1;
            }
        }
        Ok(counts)
    }

    /// Serialize to the stable graph JSON format.
    pub fn to_json(&self) -> String {
        json::to_json(self)
    }
}

//! Patch construction by filling angular gaps along the outer boundary.
//!
//! The patch is grown as a topological disk. Each boundary vertex has one
//! angular gap on the outer side; `saturate` fills that gap face by face.
//! A new face is glued along a run of consecutive boundary edges: the run
//! is extended through any boundary vertex that already carries its full
//! degree `d`, because such a vertex has no room for further edges and the
//! face in its gap must use both of its boundary edges. This single rule
//! handles every corner case, including triangle codegrees and euclidean
//! lattices.

use super::{Edge, Face, PlanarGraph, TessellationSpec, NONE};
use std::collections::VecDeque;

struct Builder {
    d: u32,
    codegree: u32,
    ring: Vec<u32>,
    deg: Vec<u32>,
    face_count: Vec<u32>,
    on_boundary: Vec<bool>,
    /// (next boundary vertex, connecting edge) along the boundary cycle.
    bnext: Vec<(u32, u32)>,
    bprev: Vec<(u32, u32)>,
    incident: Vec<Vec<u32>>,
    edges: Vec<Edge>,
    faces: Vec<Face>,
    cur_ring: u32,
}

impl Builder {
    fn seed(d: u32, codegree: u32) -> Builder {
        let c = codegree as usize;
        let mut b = Builder {
            d,
            codegree,
            ring: Vec::new(),
            deg: Vec::new(),
            face_count: Vec::new(),
            on_boundary: Vec::new(),
            bnext: Vec::new(),
            bprev: Vec::new(),
            incident: Vec::new(),
            edges: Vec::new(),
            faces: Vec::new(),
            cur_ring: 0,
        };
        for _ in 0..c {
            b.new_vertex();
        }
        let seed_cycle: Vec<u32> = (0..codegree).collect();
        for i in 0..c {
            let u = i as u32;
            let v = ((i + 1) % c) as u32;
            let e = b.new_edge(u, v, 0);
            b.bnext[i] = (v, e);
            b.bprev[(i + 1) % c] = (u, e);
        }
        for i in 0..c {
            b.face_count[i] = 1;
            b.on_boundary[i] = true;
        }
        b.faces.push(Face { cycle: seed_cycle, ring: 0, complete: true });
        b
    }

    fn new_vertex(&mut self) -> u32 {
        let id = self.ring.len() as u32;
        self.ring.push(self.cur_ring);
        self.deg.push(0);
        self.face_count.push(0);
        self.on_boundary.push(false);
        self.bnext.push((NONE, NONE));
        self.bprev.push((NONE, NONE));
        self.incident.push(Vec::new());
        id
    }

    fn new_edge(&mut self, u: u32, v: u32, face: u32) -> u32 {
        let id = self.edges.len() as u32;
        self.edges.push(Edge { u, v, faces: [face, NONE], dual: NONE });
        self.incident[u as usize].push(id);
        self.incident[v as usize].push(id);
        self.deg[u as usize] += 1;
        self.deg[v as usize] += 1;
        id
    }

    fn saturate(&mut self, v: u32) {
        let mut guard = 0;
        while self.on_boundary[v as usize] {
            self.add_face_at(v);
            guard += 1;
            assert!(guard <= self.d, "gap at vertex {v} did not close within d faces");
        }
    }

    /// Add one face into the gap at `v`, glued along the boundary edge
    /// arriving at `v` and along any forced continuation through
    /// full-degree vertices.
    fn add_face_at(&mut self, v: u32) {
        let d = self.d;
        let dh = self.codegree;

        let (a, e0) = self.bprev[v as usize];
        let mut run_vs: VecDeque<u32> = VecDeque::new();
        let mut run_es: VecDeque<u32> = VecDeque::new();
        run_vs.push_back(a);
        run_vs.push_back(v);
        run_es.push_back(e0);

        // Extend backward through the tail while it is already full.
        while self.deg[*run_vs.front().unwrap() as usize] == d {
            let t = *run_vs.front().unwrap();
            let (p, e) = self.bprev[t as usize];
            run_vs.push_front(p);
            run_es.push_front(e);
            debug_assert!(run_es.len() < dh as usize, "run wrapped the boundary");
        }
        // Extend forward through the head while it is already full.
        while self.deg[*run_vs.back().unwrap() as usize] == d {
            let h = *run_vs.back().unwrap();
            let (n, e) = self.bnext[h as usize];
            run_vs.push_back(n);
            run_es.push_back(e);
            debug_assert!(run_es.len() < dh as usize, "run wrapped the boundary");
        }

        let r = run_es.len();
        debug_assert!(r < dh as usize);
        let j = dh as usize - 1 - r; // fresh vertices on the outer side
        let t0 = *run_vs.front().unwrap();
        let tr = *run_vs.back().unwrap();
        debug_assert_ne!(t0, tr, "run consumed the whole boundary");

        let face_id = self.faces.len() as u32;

        // Fresh path from tr back to t0: edges (tr,w1), (w1,w2), .., (wj,t0).
        let mut ws = Vec::with_capacity(j);
        for _ in 0..j {
            ws.push(self.new_vertex());
        }
        let mut path_prev = tr;
        for &w in &ws {
            self.new_edge(path_prev, w, face_id);
            path_prev = w;
        }
        if j == 0 {
            debug_assert!(
                !self.incident[t0 as usize].iter().any(|&e| self.edges[e as usize].other(t0) == tr),
                "closing edge already exists"
            );
        }
        self.new_edge(path_prev, t0, face_id);

        // Attach the face to the run edges and count it on the run vertices.
        for &e in &run_es {
            let ed = &mut self.edges[e as usize];
            debug_assert_eq!(ed.faces[1], NONE, "run edge already has two faces");
            ed.faces[1] = face_id;
        }
        for &t in &run_vs {
            self.face_count[t as usize] += 1;
        }
        for &w in &ws {
            self.face_count[w as usize] = 1;
        }

        // Cycle with the patch interior on the left: the shared run is
        // traversed opposite to the boundary direction.
        let mut cycle: Vec<u32> = run_vs.iter().rev().copied().collect();
        cycle.extend(ws.iter().rev());
        self.faces.push(Face { cycle, ring: self.cur_ring, complete: true });

        // Interior run vertices leave the boundary.
        for i in 1..run_vs.len() - 1 {
            let t = run_vs[i];
            self.on_boundary[t as usize] = false;
            debug_assert_eq!(self.deg[t as usize], d);
            debug_assert_eq!(self.face_count[t as usize], d);
        }

        // Reroute the boundary: t0 -> wj -> .. -> w1 -> tr.
        let mut chain = Vec::with_capacity(j + 2);
        chain.push(t0);
        chain.extend(ws.iter().rev().copied());
        chain.push(tr);
        for k in 0..chain.len() - 1 {
            let x = chain[k];
            let y = chain[k + 1];
            let e = *self.incident[y as usize]
                .iter()
                .find(|&&e| self.edges[e as usize].other(y) == x)
                .expect("chain edge exists");
            self.bnext[x as usize] = (y, e);
            self.bprev[y as usize] = (x, e);
        }
        for &w in &ws {
            self.on_boundary[w as usize] = true;
        }
    }

    fn finish(mut self, spec: TessellationSpec) -> PlanarGraph {
        // Outer face: reverse of the boundary walk, so that every edge is
        // traversed once in each direction over all face cycles.
        let start = (0..self.ring.len())
            .find(|&v| self.on_boundary[v])
            .expect("patch has a boundary") as u32;
        let mut walk = vec![start];
        let mut cur = self.bnext[start as usize].0;
        while cur != start {
            walk.push(cur);
            cur = self.bnext[cur as usize].0;
            assert!(walk.len() <= self.ring.len(), "boundary walk is not a simple cycle");
        }
        debug_assert_eq!(walk.len(), self.on_boundary.iter().filter(|&&b| b).count());
        let outer_id = self.faces.len() as u32;
        walk.reverse();
        self.faces.push(Face { cycle: walk, ring: self.cur_ring, complete: false });

        let mut dangling = 0usize;
        for ed in &mut self.edges {
            if ed.faces[1] == NONE {
                ed.faces[1] = outer_id;
                dangling += 1;
            }
        }
        debug_assert_eq!(dangling, self.faces[outer_id as usize].cycle.len());

        let rotations = rotations_from_faces(self.ring.len(), &self.incident, &self.edges, &self.faces);

        PlanarGraph {
            spec,
            rings: self.ring,
            frontier: self.on_boundary,
            edges: self.edges,
            faces: self.faces,
            rotations,
        }
    }
}

/// Derive the rotation system from the oriented face cycles: at each corner
/// `x -> y -> z` of a face, the edge `(y,z)` follows `(x,y)` around `y`.
/// Walking this successor map from the smallest incident edge yields the
/// cyclic order.
pub(super) fn rotations_from_faces(
    n_vertices: usize,
    incident: &[Vec<u32>],
    edges: &[Edge],
    faces: &[Face],
) -> Vec<Vec<u32>> {
    let edge_between = |x: u32, y: u32| -> u32 {
        *incident[x as usize]
            .iter()
            .find(|&&e| edges[e as usize].other(x) == y)
            .expect("face cycle edge exists")
    };

    let mut succ: Vec<Vec<(u32, u32)>> = vec![Vec::new(); n_vertices];
    for face in faces {
        let m = face.cycle.len();
        for i in 0..m {
            let x = face.cycle[i];
            let y = face.cycle[(i + 1) % m];
            let z = face.cycle[(i + 2) % m];
            succ[y as usize].push((edge_between(x, y), edge_between(y, z)));
        }
    }

    let mut rotations = Vec::with_capacity(n_vertices);
    for v in 0..n_vertices {
        let pairs = &succ[v];
        let degree = incident[v].len();
        assert_eq!(pairs.len(), degree, "vertex {v}: each incident edge enters exactly once");
        let start = *incident[v].iter().min().unwrap();
        let mut rot = Vec::with_capacity(degree);
        let mut cur = start;
        loop {
            rot.push(cur);
            let (_, next) = *pairs
                .iter()
                .find(|&&(e_in, _)| e_in == cur)
                .expect("successor exists");
            cur = next;
            if cur == start {
                break;
            }
            assert!(rot.len() <= degree, "rotation at vertex {v} does not close");
        }
        assert_eq!(rot.len(), degree, "rotation at vertex {v} misses edges");
        rotations.push(rot);
    }
    rotations
}

/// Ring construction: ring `k` saturates every vertex existing after ring
/// `k-1`, producing all faces that share a vertex with the previous patch.
pub(super) fn build_rings(spec: TessellationSpec) -> PlanarGraph {
    let mut b = Builder::seed(spec.d, spec.codegree);
    for k in 1..=spec.depth {
        b.cur_ring = k;
        let existing = b.ring.len() as u32;
        for v in 0..existing {
            b.saturate(v);
        }
    }
    b.finish(spec)
}

/// Ball construction: saturate vertices in breadth-first waves from vertex 0
/// until every vertex within `radius` of the root is interior. The stored
/// rings are graph distances from the root.
pub(super) fn build_ball(d: u32, codegree: u32, radius: u32) -> PlanarGraph {
    let mut b = Builder::seed(d, codegree);
    for t in 0..=radius {
        b.cur_ring = t;
        let dist = builder_bfs(&b, 0);
        let targets: Vec<u32> = (0..b.ring.len() as u32)
            .filter(|&v| dist[v as usize] == t)
            .collect();
        for v in targets {
            b.saturate(v);
        }
    }
    let mut g = b.finish(TessellationSpec { d, codegree, depth: radius });
    g.rings = g.bfs_distances(0);
    g
}

fn builder_bfs(b: &Builder, origin: u32) -> Vec<u32> {
    let mut dist = vec![u32::MAX; b.ring.len()];
    let mut queue = VecDeque::new();
    dist[origin as usize] = 0;
    queue.push_back(origin);
    while let Some(v) = queue.pop_front() {
        let dv = dist[v as usize];
        for &e in &b.incident[v as usize] {
            let w = b.edges[e as usize].other(v);
            if dist[w as usize] == u32::MAX {
                dist[w as usize] = dv + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

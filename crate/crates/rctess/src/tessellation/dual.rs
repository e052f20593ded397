//! Planar dual construction.
//!
//! Dual vertices are the complete faces of the primal; two are joined
//! precisely when the faces share an edge, and that dual edge is recorded
//! against the primal edge it crosses (on both graphs). Complete dual faces
//! are the fans of interior primal vertices; whatever darts remain trace the
//! incomplete outer walk(s) of the dual patch.

use super::closure::GraphPair;
use super::{Edge, Face, PlanarGraph, TessellationSpec, NONE};
use crate::error::{Error, Result};

pub(super) fn pair(mut primal: PlanarGraph) -> Result<GraphPair> {
    let n_faces = primal.faces.len();
    let mut dual_vertex_of_face = vec![NONE; n_faces];
    let mut face_of_dual_vertex = Vec::new();
    let mut rings = Vec::new();
    for (f, face) in primal.faces.iter().enumerate() {
        if face.complete {
            dual_vertex_of_face[f] = face_of_dual_vertex.len() as u32;
            face_of_dual_vertex.push(f as u32);
            rings.push(face.ring);
        }
    }
    if face_of_dual_vertex.is_empty() {
        return Err(Error::NoFaces);
    }

    // One dual edge per interior primal edge, in primal edge order. Any
    // cross-references from an earlier pairing are discarded first.
    for ed in &mut primal.edges {
        ed.dual = NONE;
    }
    let mut dual_edges: Vec<Edge> = Vec::new();
    for e in 0..primal.edges.len() {
        let [f0, f1] = primal.edges[e].faces;
        let d0 = dual_vertex_of_face[f0 as usize];
        let d1 = dual_vertex_of_face[f1 as usize];
        if d0 != NONE && d1 != NONE {
            let id = dual_edges.len() as u32;
            dual_edges.push(Edge { u: d0, v: d1, faces: [NONE, NONE], dual: e as u32 });
            primal.edges[e].dual = id;
        }
    }

    // Rotation of a dual vertex: the crossing edges in the cyclic order of
    // the face's boundary walk.
    let mut incident: Vec<Vec<u32>> = vec![Vec::new(); face_of_dual_vertex.len()];
    for (de, ded) in dual_edges.iter().enumerate() {
        incident[ded.u as usize].push(de as u32);
        incident[ded.v as usize].push(de as u32);
    }
    let mut rotations: Vec<Vec<u32>> = Vec::with_capacity(face_of_dual_vertex.len());
    for &f in &face_of_dual_vertex {
        let cycle = &primal.faces[f as usize].cycle;
        let m = cycle.len();
        let mut rot = Vec::new();
        for i in 0..m {
            let e = primal
                .edge_between(cycle[i], cycle[(i + 1) % m])
                .expect("face side exists");
            let de = primal.edges[e as usize].dual;
            if de != NONE {
                rot.push(de);
            }
        }
        rotations.push(rot);
    }

    // Complete dual faces: fans of interior primal vertices.
    let mut dual_faces: Vec<Face> = Vec::new();
    let mut used = vec![false; 2 * dual_edges.len()];
    fn between(incident: &[Vec<u32>], dual_edges: &[Edge], x: u32, y: u32) -> u32 {
        *incident[x as usize]
            .iter()
            .find(|&&de| dual_edges[de as usize].other(x) == y)
            .expect("dual fan edge exists")
    }
    for v in 0..primal.vertex_count() as u32 {
        if !primal.is_interior(v) {
            continue;
        }
        let fan = primal.faces_at(v);
        debug_assert_eq!(fan.len(), primal.degree(v));
        let cycle: Vec<u32> = fan.iter().map(|&f| dual_vertex_of_face[f as usize]).collect();
        for i in 0..cycle.len() {
            let x = cycle[i];
            let y = cycle[(i + 1) % cycle.len()];
            let de = between(&incident, &dual_edges, x, y);
            let dir = usize::from(dual_edges[de as usize].u != x);
            let dart = 2 * de as usize + dir;
            assert!(!used[dart], "fan orientation clash at primal vertex {v}");
            used[dart] = true;
        }
        dual_faces.push(Face { cycle, ring: primal.rings[v as usize], complete: true });
    }

    // Remaining darts trace the incomplete faces of the dual patch.
    for start in 0..used.len() {
        if used[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut dart = start;
        loop {
            used[dart] = true;
            let de = (dart / 2) as u32;
            let dir = dart % 2;
            let ed = &dual_edges[de as usize];
            let (from, to) = if dir == 0 { (ed.u, ed.v) } else { (ed.v, ed.u) };
            cycle.push(from);
            // Next dart of the same face: successor of `de` in the rotation
            // at `to`.
            let rot = &rotations[to as usize];
            let idx = rot.iter().position(|&x| x == de).expect("edge in rotation");
            let next_e = rot[(idx + 1) % rot.len()];
            let next_dir = usize::from(dual_edges[next_e as usize].u != to);
            dart = 2 * next_e as usize + next_dir;
            if dart == start {
                break;
            }
            assert!(!used[dart], "dart orbit is not simple");
        }
        dual_faces.push(Face { cycle, ring: 0, complete: false });
    }

    // Register face slots on dual edges from all dual face cycles.
    for (fi, face) in dual_faces.iter().enumerate() {
        let m = face.cycle.len();
        for i in 0..m {
            let de = between(&incident, &dual_edges, face.cycle[i], face.cycle[(i + 1) % m]);
            let ed = &mut dual_edges[de as usize];
            if ed.faces[0] == NONE {
                ed.faces[0] = fi as u32;
            } else {
                debug_assert_eq!(ed.faces[1], NONE);
                ed.faces[1] = fi as u32;
            }
        }
    }
    debug_assert!(dual_edges.iter().all(|ed| ed.faces[1] != NONE));

    let mut frontier = vec![false; face_of_dual_vertex.len()];
    for face in &dual_faces {
        if !face.complete {
            for &dv in &face.cycle {
                frontier[dv as usize] = true;
            }
        }
    }

    let dual = PlanarGraph {
        spec: TessellationSpec {
            d: primal.spec.codegree,
            codegree: primal.spec.d,
            depth: primal.spec.depth,
        },
        rings,
        frontier,
        edges: dual_edges,
        faces: dual_faces,
        rotations,
    };

    Ok(GraphPair::assemble(primal, dual, dual_vertex_of_face, face_of_dual_vertex))
}

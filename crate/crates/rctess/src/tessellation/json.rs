//! Stable JSON format for graphs:
//! `{"spec":{"d":..,"codegree":..,"depth":..},"vertices":[{"id","ring"}],
//!   "edges":[{"id","u","v","dual"}],"faces":[{"id","cycle","complete"}]}`

use super::{PlanarGraph, NONE};
use serde::{Deserialize, Serialize};

#[derive(Debug, Serialize, Deserialize)]
pub struct GraphJson {
    pub spec: SpecJson,
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<EdgeJson>,
    pub faces: Vec<FaceJson>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SpecJson {
    pub d: u32,
    pub codegree: u32,
    pub depth: u32,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct VertexJson {
    pub id: u32,
    pub ring: u32,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct EdgeJson {
    pub id: u32,
    pub u: u32,
    pub v: u32,
    pub dual: Option<u32>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct FaceJson {
    pub id: u32,
    pub cycle: Vec<u32>,
    pub complete: bool,
}

pub(super) fn to_json(g: &PlanarGraph) -> String {
    let doc = GraphJson {
        spec: SpecJson { d: g.spec.d, codegree: g.spec.codegree, depth: g.spec.depth },
        vertices: (0..g.vertex_count() as u32)
            .map(|id| VertexJson { id, ring: g.rings[id as usize] })
            .collect(),
        edges: g
            .edges
            .iter()
            .enumerate()
            .map(|(id, e)| EdgeJson {
                id: id as u32,
                u: e.u,
                v: e.v,
                dual: (e.dual != NONE).then_some(e.dual),
            })
            .collect(),
        faces: g
            .faces
            .iter()
            .enumerate()
            .map(|(id, f)| FaceJson { id: id as u32, cycle: f.cycle.clone(), complete: f.complete })
            .collect(),
    };
    serde_json::to_string(&doc).expect("graph serializes")
}

/// Parse the stable format back into its mirror structs.
pub fn parse_json(s: &str) -> Result<GraphJson, serde_json::Error> {
    serde_json::from_str(s)
}

//! Canonical lattice JSON: `qubits[{id,coord}]`, `edges[{id,qubits,basis,
//! colour,boundary}]`, `plaquettes[{id,colour,edges}]`, ids ascending.
//! Optional fields carry planarity and heavy-lattice metadata so the file
//! loads back into a full lattice; corner flags and indices are recomputed.

use super::honeycomb::corner_flag;
use super::{
    Edge, EdgeId, EdgeQubits, Lattice, LatticeKind, PlaqId, Plaquette, Qubit, QubitId, QubitKind,
    Side,
};
use crate::pauli::{Basis, Colour};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Serialize, Deserialize)]
struct QubitJson {
    id: QubitId,
    coord: (i32, i32),
    #[serde(default, skip_serializing_if = "is_false")]
    aux: bool,
    #[serde(default = "yes", skip_serializing_if = "is_true")]
    alive: bool,
}

#[derive(Serialize, Deserialize)]
struct EdgeJson {
    id: EdgeId,
    qubits: Vec<QubitId>,
    basis: Basis,
    colour: Colour,
    boundary: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    side: Option<Side>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    aux: Option<QubitId>,
}

#[derive(Serialize, Deserialize)]
struct PlaqJson {
    id: PlaqId,
    colour: Colour,
    edges: Vec<EdgeId>,
}

#[derive(Serialize, Deserialize)]
struct LatticeJson {
    kind: LatticeKind,
    qubits: Vec<QubitJson>,
    edges: Vec<EdgeJson>,
    plaquettes: Vec<PlaqJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    torus_dims: Option<(i32, i32)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    patch: Option<super::honeycomb::PatchParams>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    boundary_colour: BTreeMap<Side, Colour>,
}

fn is_false(b: &bool) -> bool {
    !*b
}
fn is_true(b: &bool) -> bool {
    *b
}
fn yes() -> bool {
    true
}

pub fn to_json(lat: &Lattice) -> serde_json::Value {
    let dto = LatticeJson {
        kind: lat.kind,
        qubits: lat
            .qubits
            .iter()
            .map(|q| QubitJson {
                id: q.id,
                coord: q.coord,
                aux: q.kind == QubitKind::Aux,
                alive: q.alive,
            })
            .collect(),
        edges: lat
            .edges
            .values()
            .map(|e| EdgeJson {
                id: e.id,
                qubits: e.qubits.iter().collect(),
                basis: e.basis,
                colour: e.colour,
                boundary: e.boundary,
                side: e.side,
                aux: e.aux,
            })
            .collect(),
        plaquettes: lat
            .plaquettes
            .values()
            .map(|p| PlaqJson {
                id: p.id,
                colour: p.colour,
                edges: p.edges.clone(),
            })
            .collect(),
        torus_dims: lat.torus_dims,
        patch: lat.patch,
        boundary_colour: lat.boundary_colour.clone(),
    };
    serde_json::to_value(dto).expect("lattice serialization")
}

pub fn from_json(value: serde_json::Value) -> Result<Lattice, serde_json::Error> {
    let dto: LatticeJson = serde_json::from_value(value)?;
    let mut lat = Lattice::new(dto.kind);
    lat.torus_dims = dto.torus_dims;
    lat.patch = dto.patch;
    lat.boundary_colour = dto.boundary_colour;
    for q in dto.qubits {
        lat.qubits.push(Qubit {
            id: q.id,
            coord: q.coord,
            kind: if q.aux { QubitKind::Aux } else { QubitKind::Data },
            alive: q.alive,
        });
    }
    for e in dto.edges {
        let qubits = match e.qubits.as_slice() {
            [a] => EdgeQubits::One(*a),
            [a, b] => EdgeQubits::Two(*a, *b),
            _ => {
                return Err(serde::de::Error::custom(format!(
                    "edge {} must have 1 or 2 qubits",
                    e.id.0
                )))
            }
        };
        lat.next_edge_id = lat.next_edge_id.max(e.id.0 + 1);
        lat.edges.insert(
            e.id,
            Edge {
                id: e.id,
                qubits,
                basis: e.basis,
                colour: e.colour,
                boundary: e.boundary,
                side: e.side,
                aux: e.aux,
            },
        );
    }
    for p in dto.plaquettes {
        lat.next_plaq_id = lat.next_plaq_id.max(p.id.0 + 1);
        lat.plaquettes.insert(
            p.id,
            Plaquette {
                id: p.id,
                colour: p.colour,
                edges: p.edges,
                corner: false,
            },
        );
    }
    let ids: Vec<PlaqId> = lat.plaquettes.keys().copied().collect();
    for id in ids {
        let members = lat.plaquettes[&id].edges.clone();
        lat.plaquettes.get_mut(&id).unwrap().corner = corner_flag(&lat, &members);
    }
    lat.rebuild_index();
    Ok(lat)
}

//! Periodic 4.8.8 (truncated-square) lattice: red weight-4 squares and
//! green/blue weight-8 octagons in checkerboard.
//!
//! Square (i, j) is the diamond centred at (4i, 4j) with vertices at
//! (4i±1, 4j) and (4i, 4j±1). Octagons are centred at (4i+2, 4j+2) and are
//! green when i + j is even, blue otherwise. Connecting edges between
//! squares are red (X); square sides inherit the third colour from the
//! octagon containing them.

use super::honeycomb::BuildError;
use super::{
    Edge, EdgeId, EdgeQubits, Lattice, LatticeKind, Plaquette, Qubit, QubitId, QubitKind,
};
use crate::pauli::Colour;
use std::collections::BTreeMap;

pub fn build_488(rows: u32, cols: u32) -> Result<Lattice, BuildError> {
    if rows < 2 || cols < 2 || rows % 2 != 0 || cols % 2 != 0 {
        return Err(BuildError::BadDims(rows as i64, cols as i64));
    }
    let (nx, ny) = (cols as i32, rows as i32);
    let (w, h) = (4 * nx, 4 * ny);
    let mut lat = Lattice::new(LatticeKind::FourEightEight);
    lat.torus_dims = Some((w, h));

    // Vertices of all squares, wrapped into the fundamental domain.
    let mut coords: Vec<(i32, i32)> = Vec::new();
    for j in 0..ny {
        for i in 0..nx {
            for (dx, dy) in [(-1, 0), (1, 0), (0, -1), (0, 1)] {
                coords.push(((4 * i + dx).rem_euclid(w), (4 * j + dy).rem_euclid(h)));
            }
        }
    }
    coords.sort_by_key(|&(x, y)| (y, x));
    coords.dedup();
    let mut qubit_of: BTreeMap<(i32, i32), QubitId> = BTreeMap::new();
    for (n, &(x, y)) in coords.iter().enumerate() {
        let id = QubitId(n as u32);
        qubit_of.insert((x, y), id);
        lat.qubits.push(Qubit {
            id,
            coord: (x, y),
            kind: QubitKind::Data,
            alive: true,
        });
    }
    let q = |x: i32, y: i32| qubit_of[&(x.rem_euclid(w), y.rem_euclid(h))];

    let oct_colour = |i: i32, j: i32| {
        if (i + j).rem_euclid(2) == 0 {
            Colour::Green
        } else {
            Colour::Blue
        }
    };

    // Edges, keyed for plaquette assembly.
    let mut edge_ids: BTreeMap<(i32, i32, i32, i32), EdgeId> = BTreeMap::new();
    let add_edge = |lat: &mut Lattice,
                        edge_ids: &mut BTreeMap<(i32, i32, i32, i32), EdgeId>,
                        a: (i32, i32),
                        b: (i32, i32),
                        colour: Colour| {
        let a = (a.0.rem_euclid(w), a.1.rem_euclid(h));
        let b = (b.0.rem_euclid(w), b.1.rem_euclid(h));
        let key = if (a.1, a.0) <= (b.1, b.0) {
            (a.0, a.1, b.0, b.1)
        } else {
            (b.0, b.1, a.0, a.1)
        };
        if let Some(&id) = edge_ids.get(&key) {
            return id;
        }
        let id = lat.fresh_edge_id();
        edge_ids.insert(key, id);
        lat.edges.insert(
            id,
            Edge {
                id,
                qubits: EdgeQubits::Two(q(a.0, a.1), q(b.0, b.1)),
                basis: colour.basis(),
                colour,
                boundary: false,
                side: None,
                aux: None,
            },
        );
        id
    };

    // Square sides then connecting edges, enumerated square by square.
    for j in 0..ny {
        for i in 0..nx {
            let (cx, cy) = (4 * i, 4 * j);
            let e = (cx + 1, cy);
            let n = (cx, cy + 1);
            let wv = (cx - 1, cy);
            let s = (cx, cy - 1);
            // Side in octagon (i,j)+NE has colour third(Red, oct): NE side
            // between n and e lies in octagon (i, j).
            let side = |oct_i: i32, oct_j: i32| Colour::third(Colour::Red, oct_colour(oct_i, oct_j));
            add_edge(&mut lat, &mut edge_ids, n, e, side(i, j));
            add_edge(&mut lat, &mut edge_ids, e, s, side(i, j - 1));
            add_edge(&mut lat, &mut edge_ids, s, wv, side(i - 1, j - 1));
            add_edge(&mut lat, &mut edge_ids, wv, n, side(i - 1, j));
            // Connecting edges to the next square right and up.
            add_edge(&mut lat, &mut edge_ids, e, (cx + 3, cy), Colour::Red);
            add_edge(&mut lat, &mut edge_ids, n, (cx, cy + 3), Colour::Red);
        }
    }

    let lookup = |edge_ids: &BTreeMap<(i32, i32, i32, i32), EdgeId>, a: (i32, i32), b: (i32, i32)| {
        let a = (a.0.rem_euclid(w), a.1.rem_euclid(h));
        let b = (b.0.rem_euclid(w), b.1.rem_euclid(h));
        let key = if (a.1, a.0) <= (b.1, b.0) {
            (a.0, a.1, b.0, b.1)
        } else {
            (b.0, b.1, a.0, a.1)
        };
        edge_ids[&key]
    };

    // Squares.
    for j in 0..ny {
        for i in 0..nx {
            let (cx, cy) = (4 * i, 4 * j);
            let ring = [
                (cx, cy + 1),
                (cx + 1, cy),
                (cx, cy - 1),
                (cx - 1, cy),
            ];
            let id = lat.fresh_plaq_id();
            let edges = (0..4)
                .map(|k| lookup(&edge_ids, ring[k], ring[(k + 1) % 4]))
                .collect();
            lat.plaquettes.insert(
                id,
                Plaquette {
                    id,
                    colour: Colour::Red,
                    edges,
                    corner: false,
                },
            );
        }
    }
    // Octagons.
    for j in 0..ny {
        for i in 0..nx {
            let (bx, by) = (4 * i, 4 * j);
            let ring = [
                (bx + 1, by),
                (bx + 3, by),
                (bx + 4, by + 1),
                (bx + 4, by + 3),
                (bx + 3, by + 4),
                (bx + 1, by + 4),
                (bx, by + 3),
                (bx, by + 1),
            ];
            let id = lat.fresh_plaq_id();
            let edges = (0..8)
                .map(|k| lookup(&edge_ids, ring[k], ring[(k + 1) % 8]))
                .collect();
            lat.plaquettes.insert(
                id,
                Plaquette {
                    id,
                    colour: oct_colour(i, j),
                    edges,
                    corner: false,
                },
            );
        }
    }

    lat.rebuild_index();
    Ok(lat)
}

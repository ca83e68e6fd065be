//! Honeycomb lattices in brick-wall coordinates.
//!
//! Vertices live on an integer grid (column c, row r). Vertical edges
//! connect (c, r)-(c, r+1) where c + r is even; horizontal edges connect
//! (c, r)-(c+1, r) everywhere. Hexagons appear as 3x2 bricks anchored at
//! (c, r) with c + r even, spanning columns c..c+2 and rows r..r+1.
//!
//! Brick colour index is ((c - 3r)/2) mod 3 with 0=Red, 1=Green, 2=Blue;
//! this 3-colouring has period 6 in c and period 2 in r, so a torus closes
//! whenever the column count is a multiple of 6 and the row count is even.
//! Edge colours follow from the two containing bricks.
//!
//! Planar patches are cut from this lattice: straight vertical cuts on the
//! left/right (severed horizontal edges at a fixed column share one colour)
//! and slope -1/3 staircases on the top/bottom (each tread severs one
//! vertical and one horizontal edge of a single colour). Severed edges
//! become single-qubit boundary checks on the surviving endpoint.

use super::cut::cut_to;
use super::{
    Edge, EdgeId, EdgeQubits, Lattice, LatticeKind, Plaquette, Qubit, QubitId, QubitKind, Side,
};
use crate::pauli::Colour;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BuildError {
    #[error("rows and cols must be even and >= 2, got ({0}, {1})")]
    BadDims(i64, i64),
    #[error("d must be >= 2, got {0}")]
    BadDistance(i64),
}

/// Colour index of the brick anchored at (c, r); requires c + r even.
fn brick_colour(c: i32, r: i32) -> Colour {
    debug_assert!((c + r).rem_euclid(2) == 0);
    Colour::from_index(((c - 3 * r).div_euclid(2)).rem_euclid(3) as usize)
}

/// Colour of the vertical edge (c, r)-(c, r+1); requires c + r even.
pub(crate) fn vertical_colour(c: i32, r: i32) -> Colour {
    Colour::from_index((brick_colour(c, r).index() + 1) % 3)
}

/// Colour of the horizontal edge (c, r)-(c+1, r).
pub(crate) fn horizontal_colour(c: i32, r: i32) -> Colour {
    if (c + r).rem_euclid(2) == 0 {
        Colour::from_index((brick_colour(c, r).index() + 2) % 3)
    } else {
        Colour::from_index((((c - 3 * r + 3).div_euclid(2)) + 2).rem_euclid(3) as usize)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) enum Orient {
    H,
    V,
}

/// Infinite-lattice edge identity: orientation plus anchor vertex. The
/// horizontal edge anchored at (c, r) runs to (c+1, r); the vertical one
/// to (c, r+1).
pub(crate) type EdgeKey = (i32, i32, Orient);

pub(crate) fn edge_endpoints(key: EdgeKey) -> ((i32, i32), (i32, i32)) {
    let (c, r, o) = key;
    match o {
        Orient::H => ((c, r), (c + 1, r)),
        Orient::V => ((c, r), (c, r + 1)),
    }
}

pub(crate) fn edge_colour(key: EdgeKey) -> Colour {
    let (c, r, o) = key;
    match o {
        Orient::H => horizontal_colour(c, r),
        Orient::V => vertical_colour(c, r),
    }
}

/// The 3 infinite-lattice edges incident to vertex (c, r).
pub(crate) fn incident_edges(c: i32, r: i32) -> [EdgeKey; 3] {
    let vertical = if (c + r).rem_euclid(2) == 0 {
        (c, r, Orient::V)
    } else {
        (c, r - 1, Orient::V)
    };
    [(c - 1, r, Orient::H), (c, r, Orient::H), vertical]
}

/// Member edges of the brick anchored at (c, r), in cycle walk order.
pub(crate) fn brick_edges(c: i32, r: i32) -> [EdgeKey; 6] {
    [
        (c, r, Orient::H),
        (c + 1, r, Orient::H),
        (c + 2, r, Orient::V),
        (c + 1, r + 1, Orient::H),
        (c, r + 1, Orient::H),
        (c, r, Orient::V),
    ]
}

/// Bricks containing vertex (c, r).
pub(crate) fn bricks_of_vertex(c: i32, r: i32) -> Vec<(i32, i32)> {
    let mut out = Vec::new();
    for bc in [c - 2, c - 1, c] {
        for br in [r - 1, r] {
            if (bc + br).rem_euclid(2) == 0 {
                let within = c >= bc && c <= bc + 2 && r >= br && r <= br + 1;
                if within {
                    out.push((bc, br));
                }
            }
        }
    }
    out
}

/// Periodic honeycomb torus with `3*cols` vertex columns and `rows` vertex
/// rows. Both parameters must be even and at least 2 so the 3-face-colouring
/// closes. Every plaquette is a weight-6 hexagon.
pub fn build_periodic_honeycomb(rows: u32, cols: u32) -> Result<Lattice, BuildError> {
    if rows < 2 || cols < 2 || rows % 2 != 0 || cols % 2 != 0 {
        return Err(BuildError::BadDims(rows as i64, cols as i64));
    }
    let w = 3 * cols as i32;
    let h = rows as i32;
    let mut lat = Lattice::new(LatticeKind::PeriodicHoneycomb);
    lat.torus_dims = Some((w, h));

    let qubit_id = |c: i32, r: i32| -> QubitId {
        QubitId((r.rem_euclid(h) * w + c.rem_euclid(w)) as u32)
    };
    for r in 0..h {
        for c in 0..w {
            lat.qubits.push(Qubit {
                id: qubit_id(c, r),
                coord: (c, r),
                kind: QubitKind::Data,
                alive: true,
            });
        }
    }

    let mut edge_ids: BTreeMap<(i32, i32, Orient), EdgeId> = BTreeMap::new();
    for r in 0..h {
        for c in 0..w {
            let id = lat.fresh_edge_id();
            edge_ids.insert((c, r, Orient::H), id);
            lat.edges.insert(
                id,
                Edge {
                    id,
                    qubits: EdgeQubits::Two(qubit_id(c, r), qubit_id(c + 1, r)),
                    basis: horizontal_colour(c, r).basis(),
                    colour: horizontal_colour(c, r),
                    boundary: false,
                    side: None,
                    aux: None,
                },
            );
        }
    }
    for r in 0..h {
        for c in 0..w {
            if (c + r) % 2 == 0 {
                let id = lat.fresh_edge_id();
                edge_ids.insert((c, r, Orient::V), id);
                lat.edges.insert(
                    id,
                    Edge {
                        id,
                        qubits: EdgeQubits::Two(qubit_id(c, r), qubit_id(c, r + 1)),
                        basis: vertical_colour(c, r).basis(),
                        colour: vertical_colour(c, r),
                        boundary: false,
                        side: None,
                        aux: None,
                    },
                );
            }
        }
    }

    for r in 0..h {
        for c in 0..w {
            if (c + r) % 2 == 0 {
                let id = lat.fresh_plaq_id();
                let edges = brick_edges(c, r)
                    .iter()
                    .map(|&(ec, er, o)| {
                        // Wrap the anchor into the fundamental domain. A
                        // vertical anchored at row h-1 wraps its far endpoint
                        // only, so the anchor row stays in range.
                        let key = (ec.rem_euclid(w), er.rem_euclid(h), o);
                        edge_ids[&key]
                    })
                    .collect();
                lat.plaquettes.insert(
                    id,
                    Plaquette {
                        id,
                        colour: brick_colour(c, r),
                        edges,
                        corner: false,
                    },
                );
            }
        }
    }

    lat.rebuild_index();
    Ok(lat)
}

/// Geometry of a planar patch: a vertical strip of columns `0..width` whose
/// bottom and top follow slope -1/3 staircases. Row r of column c is kept
/// when `bottom(c) <= r < top(c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct PatchParams {
    pub width: i32,
    /// Bottom staircase: bottom(c) = b_r0 - floor((c - b_c0)/3).
    pub b_c0: i32,
    pub b_r0: i32,
    /// Top bound (exclusive): top(c) = t_r0 - floor((c - t_c0)/3).
    pub t_c0: i32,
    pub t_r0: i32,
}

impl PatchParams {
    pub fn bottom(&self, c: i32) -> i32 {
        self.b_r0 - (c - self.b_c0).div_euclid(3)
    }

    pub fn top(&self, c: i32) -> i32 {
        self.t_r0 - (c - self.t_c0).div_euclid(3)
    }

    pub fn keeps(&self, c: i32, r: i32) -> bool {
        c >= 0 && c < self.width && r >= self.bottom(c) && r < self.top(c)
    }

    /// Which side of the patch a removed coordinate lies on.
    pub fn side_of(&self, c: i32, r: i32) -> Option<Side> {
        if c < 0 {
            Some(Side::Left)
        } else if c >= self.width {
            Some(Side::Right)
        } else if r < self.bottom(c) {
            Some(Side::Bottom)
        } else if r >= self.top(c) {
            Some(Side::Top)
        } else {
            None
        }
    }

    /// Distance (in grid steps) from a kept coordinate to the nearest
    /// boundary, used by the edge-choice heuristics.
    pub fn boundary_distance(&self, c: i32, r: i32) -> i32 {
        let d_lr = c.min(self.width - 1 - c);
        let d_bt = (r - self.bottom(c)).min(self.top(c) - 1 - r);
        d_lr.min(d_bt)
    }
}

/// Builds the finite region `keep` of the infinite lattice, with single-qubit
/// boundary edges where severed. Qubit ids are assigned row-major over the
/// coordinates for which `primary` is true first, then the rest; this lets a
/// patch embed into a larger region without renumbering.
pub(crate) fn build_region(
    keep: &dyn Fn(i32, i32) -> bool,
    scan: (i32, i32, i32, i32), // c_min, c_max, r_min, r_max inclusive scan bounds
    primary: &dyn Fn(i32, i32) -> bool,
    side_of: &dyn Fn(i32, i32) -> Option<Side>,
) -> Lattice {
    let (c_min, c_max, r_min, r_max) = scan;
    let mut lat = Lattice::new(LatticeKind::PlanarHoneycomb);

    let mut coords: Vec<(i32, i32)> = Vec::new();
    for r in r_min..=r_max {
        for c in c_min..=c_max {
            if keep(c, r) {
                coords.push((c, r));
            }
        }
    }
    coords.sort_by_key(|&(c, r)| (!primary(c, r), r, c));
    let mut qubit_of: BTreeMap<(i32, i32), QubitId> = BTreeMap::new();
    for (i, &(c, r)) in coords.iter().enumerate() {
        let id = QubitId(i as u32);
        qubit_of.insert((c, r), id);
        lat.qubits.push(Qubit {
            id,
            coord: (c, r),
            kind: QubitKind::Data,
            alive: true,
        });
    }

    // Candidate edges: all infinite edges with at least one kept endpoint,
    // ordered with patch-interior keys first (matching qubit ordering) so a
    // later cut leaves compact ids.
    let mut keys: Vec<EdgeKey> = Vec::new();
    for &(c, r) in &coords {
        for key in incident_edges(c, r) {
            keys.push(key);
        }
    }
    keys.sort();
    keys.dedup();
    let key_rank = |key: &EdgeKey| {
        let (a, b) = edge_endpoints(*key);
        let pa = keep(a.0, a.1) && primary(a.0, a.1);
        let pb = keep(b.0, b.1) && primary(b.0, b.1);
        u8::from(!(pa || pb))
    };
    keys.sort_by_key(|k| (key_rank(k), k.1, k.0, k.2));

    let mut edge_ids: BTreeMap<EdgeKey, EdgeId> = BTreeMap::new();
    for key in keys {
        let (a, b) = edge_endpoints(key);
        let ka = keep(a.0, a.1);
        let kb = keep(b.0, b.1);
        let colour = edge_colour(key);
        let (qubits, boundary, side) = match (ka, kb) {
            (true, true) => (
                EdgeQubits::Two(qubit_of[&a], qubit_of[&b]),
                false,
                None,
            ),
            (true, false) => (EdgeQubits::One(qubit_of[&a]), true, side_of(b.0, b.1)),
            (false, true) => (EdgeQubits::One(qubit_of[&b]), true, side_of(a.0, a.1)),
            (false, false) => continue,
        };
        let id = lat.fresh_edge_id();
        edge_ids.insert(key, id);
        lat.edges.insert(
            id,
            Edge {
                id,
                qubits,
                basis: colour.basis(),
                colour,
                boundary,
                side,
                aux: None,
            },
        );
    }

    // Bricks with at least one kept vertex become plaquettes, truncated to
    // their surviving member edges. Patch-interior bricks first.
    let mut bricks: Vec<(i32, i32)> = Vec::new();
    for &(c, r) in &coords {
        bricks.extend(bricks_of_vertex(c, r));
    }
    bricks.sort();
    bricks.dedup();
    let brick_rank = |&(bc, br): &(i32, i32)| {
        let any_primary = (0..3).any(|dc| {
            (0..2).any(|dr| {
                let (c, r) = (bc + dc, br + dr);
                keep(c, r) && primary(c, r)
            })
        });
        u8::from(!any_primary)
    };
    bricks.sort_by_key(|b| (brick_rank(b), b.1, b.0));

    for (bc, br) in bricks {
        let members: Vec<EdgeId> = brick_edges(bc, br)
            .iter()
            .filter_map(|k| edge_ids.get(k).copied())
            .collect();
        if members.is_empty() {
            continue;
        }
        let id = lat.fresh_plaq_id();
        let corner = corner_flag(&lat, &members);
        lat.plaquettes.insert(
            id,
            Plaquette {
                id,
                colour: brick_colour(bc, br),
                edges: members,
                corner,
            },
        );
    }

    lat.rebuild_index();
    lat
}

/// A plaquette is non-deterministic ("corner") when it carries single-qubit
/// member edges of two or more distinct bases.
pub(crate) fn corner_flag(lat: &Lattice, members: &[EdgeId]) -> bool {
    let mut bases: Vec<_> = members
        .iter()
        .map(|e| &lat.edges[e])
        .filter(|e| matches!(e.qubits, EdgeQubits::One(_)))
        .map(|e| e.basis)
        .collect();
    bases.sort();
    bases.dedup();
    bases.len() >= 2
}

/// Margin (in grid steps) used when embedding a patch back into the bulk for
/// adaptation; generous with respect to the reach of a single removal.
pub(crate) const EMBED_MARGIN: i32 = 12;

/// The patch embedded in a larger chunk of the infinite lattice. Qubits,
/// edges and plaquettes of the patch keep exactly the ids they have in
/// `build_planar_patch`; ghost entities take ids above them.
pub(crate) fn build_embedded(params: &PatchParams) -> Lattice {
    let m = EMBED_MARGIN;
    let scan = (
        -m,
        params.width - 1 + m,
        params.bottom(params.width - 1 + m) - m - 1,
        params.top(-m) + m + 1,
    );
    let keep = |c: i32, r: i32| {
        c >= -m
            && c < params.width + m
            && r >= params.bottom(c) - m
            && r < params.top(c) + m
    };
    let primary = |c: i32, r: i32| params.keeps(c, r);
    let side_of = |_c: i32, _r: i32| None;
    let mut lat = build_region(&keep, scan, &primary, &side_of);
    lat.patch = Some(*params);
    lat
}

/// Planar honeycomb patch with target code distance `d` for both the
/// horizontal and the vertical logical observable.
pub fn build_planar_patch(d: u32) -> Result<Lattice, BuildError> {
    if d < 2 {
        return Err(BuildError::BadDistance(d as i64));
    }
    let params = patch_params(d);
    Ok(build_patch_from_params(&params))
}

pub(crate) fn build_patch_from_params(params: &PatchParams) -> Lattice {
    let embedded = build_embedded(params);
    let keep = |q: &Qubit| params.keeps(q.coord.0, q.coord.1);
    let side_of = |c: i32, r: i32| params.side_of(c, r);
    let mut lat = cut_to(&embedded, &keep, &side_of);
    lat.kind = LatticeKind::PlanarHoneycomb;
    lat.patch = Some(*params);
    // Record the uniform boundary colour of each side.
    for side in Side::ALL {
        let mut colours: Vec<Colour> = lat
            .edges
            .values()
            .filter(|e| e.boundary && e.side == Some(side))
            .map(|e| e.colour)
            .collect();
        colours.sort();
        colours.dedup();
        if colours.len() == 1 {
            lat.boundary_colour.insert(side, colours[0]);
        }
    }
    lat
}

/// Calibrated patch geometry for a target distance. The width/height pair
/// scales like the 2:3 aspect patches used for the memory experiments.
pub fn patch_params(d: u32) -> PatchParams {
    let d = d as i32;
    // Placeholder pending distance calibration; refined by tests.
    PatchParams {
        width: 3 * d,
        b_c0: 2,
        b_r0: 0,
        t_c0: 2,
        t_r0: 2 * d,
    }
}

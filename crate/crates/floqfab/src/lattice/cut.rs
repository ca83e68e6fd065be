//! Cutting a lattice down to a sub-region: removed-side edge endpoints turn
//! two-qubit checks into single-qubit boundary checks, and plaquettes are
//! truncated to their surviving member edges. Ids of surviving entities are
//! preserved.

use super::honeycomb::corner_flag;
use super::{Edge, EdgeQubits, Lattice, Plaquette, Qubit, Side};

pub fn cut_to(
    lat: &Lattice,
    keep: &dyn Fn(&Qubit) -> bool,
    side_of: &dyn Fn(i32, i32) -> Option<Side>,
) -> Lattice {
    let mut out = Lattice::new(lat.kind);
    out.next_edge_id = lat.next_edge_id;
    out.next_plaq_id = lat.next_plaq_id;
    out.torus_dims = None;
    out.patch = lat.patch;
    out.boundary_colour = lat.boundary_colour.clone();

    let kept: Vec<bool> = lat.qubits.iter().map(|q| keep(q)).collect();
    for q in &lat.qubits {
        if kept[q.id.0 as usize] {
            out.qubits.push(q.clone());
        }
    }
    // Ids must stay dense: callers arrange for removed qubits to occupy the
    // tail of the id range.
    for (i, q) in out.qubits.iter().enumerate() {
        assert_eq!(
            q.id.0 as usize, i,
            "cut would leave non-dense qubit ids; region ordering bug"
        );
    }

    for e in lat.edges.values() {
        let new = match e.qubits {
            EdgeQubits::Two(a, b) => {
                match (kept[a.0 as usize], kept[b.0 as usize]) {
                    (true, true) => Some(e.clone()),
                    (true, false) => {
                        let (c, r) = lat.qubit(b).coord;
                        Some(Edge {
                            qubits: EdgeQubits::One(a),
                            boundary: true,
                            side: side_of(c, r),
                            ..e.clone()
                        })
                    }
                    (false, true) => {
                        let (c, r) = lat.qubit(a).coord;
                        Some(Edge {
                            qubits: EdgeQubits::One(b),
                            boundary: true,
                            side: side_of(c, r),
                            ..e.clone()
                        })
                    }
                    (false, false) => None,
                }
            }
            EdgeQubits::One(a) => kept[a.0 as usize].then(|| e.clone()),
        };
        if let Some(e) = new {
            out.edges.insert(e.id, e);
        }
    }

    for p in lat.plaquettes.values() {
        let members: Vec<_> = p
            .edges
            .iter()
            .copied()
            .filter(|e| out.edges.contains_key(e))
            .collect();
        if members.is_empty() {
            continue;
        }
        let corner = corner_flag_after(&out, &members);
        out.plaquettes.insert(
            p.id,
            Plaquette {
                id: p.id,
                colour: p.colour,
                edges: members,
                corner,
            },
        );
    }

    out.rebuild_index();
    out
}

fn corner_flag_after(lat: &Lattice, members: &[super::EdgeId]) -> bool {
    corner_flag(lat, members)
}

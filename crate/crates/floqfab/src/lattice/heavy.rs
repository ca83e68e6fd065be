//! Heavy lattices: an auxiliary qubit on every two-qubit edge mediates the
//! check between its data qubits. Weight-2 plaquette pairs created by
//! adaptation share one auxiliary qubit, so no extra hardware is needed.

use super::{Lattice, LatticeKind, Qubit, QubitId, QubitKind};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HeavyError {
    #[error("lattice is already heavy")]
    AlreadyHeavy,
}

/// Adds one auxiliary qubit per two-qubit edge. Data coordinates are doubled
/// so auxiliary qubits land on integer midpoints.
pub fn to_heavy(lat: &Lattice) -> Result<Lattice, HeavyError> {
    if lat.kind == LatticeKind::HeavyHex || lat.qubits.iter().any(|q| q.kind == QubitKind::Aux) {
        return Err(HeavyError::AlreadyHeavy);
    }
    let mut out = lat.clone();
    out.kind = LatticeKind::HeavyHex;
    for q in &mut out.qubits {
        q.coord = (q.coord.0 * 2, q.coord.1 * 2);
    }
    let mut next = out.qubits.len() as u32;
    let edge_ids: Vec<_> = out.edges.keys().copied().collect();
    for eid in edge_ids {
        let e = &out.edges[&eid];
        let qs: Vec<QubitId> = e.qubits.iter().collect();
        if qs.len() != 2 {
            continue; // single-qubit boundary checks need no mediator
        }
        let (a, b) = (out.qubit(qs[0]).coord, out.qubit(qs[1]).coord);
        let aux = QubitId(next);
        next += 1;
        out.qubits.push(Qubit {
            id: aux,
            coord: (wrap_mid(a.0, b.0), wrap_mid(a.1, b.1)),
            kind: QubitKind::Aux,
            alive: true,
        });
        out.edges.get_mut(&eid).unwrap().aux = Some(aux);
    }
    out.rebuild_index();
    Ok(out)
}

/// Midpoint of two doubled coordinates, placing torus-wrapping edges just
/// past the larger endpoint so auxiliary coordinates stay unique.
fn wrap_mid(a: i32, b: i32) -> i32 {
    if (a - b).abs() <= 4 {
        (a + b) / 2
    } else {
        a.max(b) + 1
    }
}

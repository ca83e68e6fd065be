//! Structural validation: tri-valence, 3-face-colourability, alternation,
//! Euler bookkeeping.

use super::{Lattice, QubitKind};
use crate::pauli::Basis;
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ViolationKind {
    /// Alive qubit whose incident edge count is not 3 (data) or as required.
    Degree,
    /// Two adjacent plaquettes share a colour.
    ColourClash,
    /// A plaquette's member edges do not form alternating two-basis chains.
    Alternation,
    /// A plaquette contains an edge of its own basis.
    BasisClash,
    /// An interior edge is not contained in exactly two plaquettes.
    EdgeCoverage,
    /// Periodic lattice fails E = 3V/2 or V - E + F = 0.
    Euler,
    /// Duplicate (qubit set, basis) pair among edges.
    DuplicateEdge,
}

#[derive(Debug, Clone, Error, Serialize)]
#[error("lattice violation {kind:?}: ids {ids:?}")]
pub struct Violation {
    pub kind: ViolationKind,
    /// Offending entity ids (qubits, edges or plaquettes depending on kind).
    pub ids: Vec<u32>,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct LatticeStats {
    pub v: usize,
    pub e: usize,
    pub f: usize,
    pub chi: i64,
    pub logical_count: i64,
}

/// Validates the lattice and returns counts. All violations are collected
/// into the error, one entry per offending entity.
pub fn check_lattice(lat: &Lattice) -> Result<LatticeStats, Vec<Violation>> {
    let mut violations = Vec::new();

    // Tri-valence: every alive data qubit touches exactly 3 edges, counting
    // single-qubit boundary checks. Dead qubits must touch none. Aux qubits
    // (heavy lattices) touch exactly 1 edge, i.e. 2 data qubits.
    let mut bad_degree = Vec::new();
    for q in &lat.qubits {
        let deg = lat.degree(q.id);
        let want = match (q.alive, q.kind) {
            (false, _) => 0,
            (true, QubitKind::Data) => 3,
            (true, QubitKind::Aux) => usize::MAX, // checked via edge aux slots
        };
        if want != usize::MAX && deg != want {
            bad_degree.push(q.id.0);
        }
    }
    if !bad_degree.is_empty() {
        violations.push(Violation {
            kind: ViolationKind::Degree,
            ids: bad_degree,
        });
    }

    // Duplicate (qubit set, basis) pairs.
    let mut seen: BTreeMap<(Vec<u32>, Basis), u32> = BTreeMap::new();
    let mut dups = Vec::new();
    for e in lat.edges.values() {
        let mut qs: Vec<u32> = e.qubits.iter().map(|q| q.0).collect();
        qs.sort();
        if let Some(&first) = seen.get(&(qs.clone(), e.basis)) {
            dups.push(first);
            dups.push(e.id.0);
        } else {
            seen.insert((qs, e.basis), e.id.0);
        }
    }
    if !dups.is_empty() {
        violations.push(Violation {
            kind: ViolationKind::DuplicateEdge,
            ids: dups,
        });
    }

    // Edge coverage: interior two-qubit edges in exactly 2 plaquettes;
    // boundary single-qubit edges in 1 or 2.
    let mut bad_cover = Vec::new();
    for e in lat.edges.values() {
        let n = lat.plaqs_of_edge(e.id).len();
        let ok = if e.boundary { (1..=2).contains(&n) } else { n == 2 };
        if !ok {
            bad_cover.push(e.id.0);
        }
    }
    if !bad_cover.is_empty() {
        violations.push(Violation {
            kind: ViolationKind::EdgeCoverage,
            ids: bad_cover,
        });
    }

    // 3-face-colourability: adjacent plaquettes never share a colour.
    let mut clashes = Vec::new();
    for (&pid, p) in &lat.plaquettes {
        for other in lat.adjacent_plaquettes(pid) {
            if other > pid && lat.plaquettes[&other].colour == p.colour {
                clashes.push(pid.0);
                clashes.push(other.0);
            }
        }
    }
    if !clashes.is_empty() {
        violations.push(Violation {
            kind: ViolationKind::ColourClash,
            ids: clashes,
        });
    }

    // Per-plaquette structure: no member edge of the plaquette basis, and
    // members form alternating chains/cycles in the two other bases.
    let mut basis_clash = Vec::new();
    let mut bad_alt = Vec::new();
    for (&pid, p) in &lat.plaquettes {
        if p.edges.iter().any(|e| lat.edges[e].basis == p.basis()) {
            basis_clash.push(pid.0);
        }
        if !alternation_ok(lat, pid) {
            bad_alt.push(pid.0);
        }
    }
    if !basis_clash.is_empty() {
        violations.push(Violation {
            kind: ViolationKind::BasisClash,
            ids: basis_clash,
        });
    }
    if !bad_alt.is_empty() {
        violations.push(Violation {
            kind: ViolationKind::Alternation,
            ids: bad_alt,
        });
    }

    let v = lat.alive_data_count();
    let e = lat.edges.len();
    let f = lat.plaquettes.len();
    let chi = v as i64 - e as i64 + f as i64;

    if lat.torus_dims.is_some() {
        let ok = 2 * e == 3 * v && chi == 0;
        if !ok {
            violations.push(Violation {
                kind: ViolationKind::Euler,
                ids: vec![],
            });
        }
    }

    if violations.is_empty() {
        Ok(LatticeStats {
            v,
            e,
            f,
            chi,
            logical_count: lat.logical_count(),
        })
    } else {
        Err(violations)
    }
}

/// A plaquette's member edges must decompose into chains/cycles in which
/// consecutive edges share a qubit and alternate between the two
/// non-plaquette bases. Each member qubit is met by exactly two member-edge
/// endpoints except single-qubit edge endpoints, which terminate chains.
fn alternation_ok(lat: &Lattice, pid: super::PlaqId) -> bool {
    let p = &lat.plaquettes[&pid];
    if p.edges.is_empty() {
        return false;
    }
    // Count member-edge incidences per qubit.
    let mut inc: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (i, &eid) in p.edges.iter().enumerate() {
        for q in lat.edges[&eid].qubits.iter() {
            inc.entry(q.0).or_default().push(i);
        }
    }
    // Every member qubit sees exactly two member-edge incidences (a
    // single-qubit edge contributes one, at its own qubit).
    for (_, v) in &inc {
        if v.len() != 2 {
            return false;
        }
    }
    // Member edges meeting at a qubit must differ in basis.
    for (_, v) in &inc {
        let a = lat.edges[&p.edges[v[0]]].basis;
        let b = lat.edges[&p.edges[v[1]]].basis;
        if a == b {
            return false;
        }
    }
    // Exactly two distinct member bases.
    let mut bases: Vec<Basis> = p.edges.iter().map(|e| lat.edges[e].basis).collect();
    bases.sort();
    bases.dedup();
    bases.len() == 2
}

//! Structural tests for the lattice builders: frozen counts from direct
//! enumeration, invariant checks, and the instantaneous-stabiliser-rank
//! logical-count oracle.

use floqfab::lattice::{
    build_488, build_periodic_honeycomb, build_planar_patch, check_lattice, json, to_heavy,
    EdgeQubits, QubitKind, Side,
};
use floqfab::pauli::{Basis, Colour};

#[test]
fn periodic_2x2_counts() {
    // Smallest torus: 6x2 vertex grid. Enumeration: 12 vertices, one
    // 3-edge star per vertex pair => E = 3V/2 = 18, bricks = V/2 = 6.
    let lat = build_periodic_honeycomb(2, 2).unwrap();
    let stats = check_lattice(&lat).unwrap();
    assert_eq!(stats.v, 12);
    assert_eq!(stats.e, 18);
    assert_eq!(stats.f, 6);
    assert_eq!(stats.chi, 0);
}

#[test]
fn periodic_rejects_odd_dims() {
    assert!(build_periodic_honeycomb(3, 2).is_err());
    assert!(build_periodic_honeycomb(2, 1).is_err());
    assert!(build_periodic_honeycomb(0, 2).is_err());
}

#[test]
fn periodic_all_weight_six_and_trivalent() {
    let lat = build_periodic_honeycomb(4, 4).unwrap();
    for p in lat.plaquettes.values() {
        assert_eq!(p.edges.len(), 6);
    }
    for q in &lat.qubits {
        assert_eq!(lat.degree(q.id), 3);
    }
    check_lattice(&lat).unwrap();
}

#[test]
fn periodic_logical_count_is_two() {
    for (r, c) in [(2, 2), (4, 4), (2, 4)] {
        let lat = build_periodic_honeycomb(r, c).unwrap();
        assert_eq!(lat.logical_count(), 2, "dims ({r},{c})");
    }
}

#[test]
fn periodic_plaquette_operators_are_uniform_basis() {
    let lat = build_periodic_honeycomb(2, 2).unwrap();
    for (&pid, p) in &lat.plaquettes {
        let op = lat.plaquette_operator(pid);
        assert_eq!(op.weight(), 6);
        for (_, b) in op.iter() {
            assert_eq!(b, p.basis(), "plaquette {pid:?}");
        }
    }
}

#[test]
fn four88_2x2_counts() {
    // Unit enumeration: 4 qubits per square, squares = rows*cols,
    // E = 4 sides + 2 connecting per square, octagons = squares.
    let lat = build_488(2, 2).unwrap();
    let stats = check_lattice(&lat).unwrap();
    assert_eq!(stats.v, 16);
    assert_eq!(stats.e, 24);
    assert_eq!(stats.f, 8);
    assert_eq!(stats.chi, 0);
}

#[test]
fn four88_weights_and_colouring() {
    let lat = build_488(2, 4).unwrap();
    for p in lat.plaquettes.values() {
        let w = p.edges.len();
        assert!(w == 4 || w == 8, "weight {w}");
        if w == 4 {
            assert_eq!(p.colour, Colour::Red);
        }
    }
    check_lattice(&lat).unwrap();
    assert_eq!(lat.logical_count(), 2);
}

#[test]
fn heavy_hex_counts_and_degrees() {
    let base = build_periodic_honeycomb(2, 2).unwrap();
    let heavy = to_heavy(&base).unwrap();
    let data = heavy
        .qubits
        .iter()
        .filter(|q| q.kind == QubitKind::Data)
        .count();
    let aux = heavy
        .qubits
        .iter()
        .filter(|q| q.kind == QubitKind::Aux)
        .count();
    assert_eq!(data, 12);
    assert_eq!(aux, 18); // one per edge
    // Each data qubit is incident to three auxiliary qubits, each auxiliary
    // qubit serves one edge (two data qubits).
    for q in heavy.qubits.iter().filter(|q| q.kind == QubitKind::Data) {
        let auxes: Vec<_> = heavy
            .edges_of_qubit(q.id)
            .iter()
            .filter_map(|e| heavy.edge(*e).aux)
            .collect();
        assert_eq!(auxes.len(), 3);
    }
    assert!(to_heavy(&heavy).is_err());
}

#[test]
fn check_reports_degraded_vertices() {
    let mut lat = build_periodic_honeycomb(2, 2).unwrap();
    let eid = *lat.edges.keys().next().unwrap();
    lat.edges.remove(&eid);
    lat.rebuild_index();
    let violations = check_lattice(&lat).unwrap_err();
    let degree = violations
        .iter()
        .find(|v| matches!(v.kind, floqfab::lattice::ViolationKind::Degree))
        .expect("degree violation");
    assert_eq!(degree.ids.len(), 2); // both endpoints now degree 2
}

#[test]
fn planar_patch_structure() {
    for d in [2u32, 3, 4] {
        let lat = build_planar_patch(d).unwrap();
        let stats = check_lattice(&lat).unwrap();
        assert!(stats.v > 0);
        // Every interior vertex has degree 3 counting boundary checks.
        for q in &lat.qubits {
            assert_eq!(lat.degree(q.id), 3, "d={d} qubit {:?}", q.id);
        }
        // Boundary checks are single-qubit and uniformly coloured per side.
        for side in Side::ALL {
            assert!(
                lat.boundary_colour.contains_key(&side),
                "d={d}: side {side:?} has mixed or missing boundary colour"
            );
        }
        // Single-qubit edges measure in the cut colour's basis.
        for e in lat.edges.values() {
            if let EdgeQubits::One(_) = e.qubits {
                assert!(e.boundary);
                assert_eq!(e.basis, e.colour.basis());
            }
        }
    }
}

#[test]
fn planar_patch_logical_count_is_one() {
    for d in [2u32, 3] {
        let lat = build_planar_patch(d).unwrap();
        assert_eq!(lat.logical_count(), 1, "d={d}");
    }
}

#[test]
fn json_round_trip() {
    let lat = build_planar_patch(3).unwrap();
    let val = json::to_json(&lat);
    let back = json::from_json(val.clone()).unwrap();
    assert_eq!(json::to_json(&back), val);
    check_lattice(&back).unwrap();
    // ids ascending in serialized arrays
    let qs = val["qubits"].as_array().unwrap();
    for w in qs.windows(2) {
        assert!(w[0]["id"].as_u64() < w[1]["id"].as_u64());
    }
}

#[test]
fn basis_ordering_for_serialization() {
    assert!(Basis::X < Basis::Y && Basis::Y < Basis::Z);
}

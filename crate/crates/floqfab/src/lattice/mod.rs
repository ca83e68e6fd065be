//! Tri-valent, 3-face-colourable code lattices.
//!
//! Qubits sit on vertices, edges are one- or two-qubit Pauli checks, and
//! plaquettes are edge cycles whose operator product is a stabiliser. The
//! same structures describe pristine lattices and lattices after defect
//! adaptation (super-plaquettes, weight-2 plaquettes, dead qubits).

mod check;
mod cut;
mod four88;
mod heavy;
mod honeycomb;
pub mod json;

pub use check::{check_lattice, LatticeStats, Violation, ViolationKind};
pub use cut::cut_to;
pub use four88::build_488;
pub use heavy::to_heavy;
pub use honeycomb::{build_periodic_honeycomb, build_planar_patch, patch_params, PatchParams};

use crate::pauli::{Basis, Colour, PauliString};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QubitId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PlaqId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LatticeKind {
    PeriodicHoneycomb,
    PlanarHoneycomb,
    FourEightEight,
    HeavyHex,
}

/// Boundary side of a planar patch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
    Bottom,
    Top,
}

impl Side {
    pub const ALL: [Side; 4] = [Side::Left, Side::Right, Side::Bottom, Side::Top];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum QubitKind {
    Data,
    Aux,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Qubit {
    pub id: QubitId,
    /// Brick-embedding position (column, row).
    pub coord: (i32, i32),
    pub kind: QubitKind,
    /// False once removed by defect adaptation; dead qubits keep their id.
    pub alive: bool,
}

/// One or two qubits of an edge check. Single-qubit edges only occur on
/// planar boundaries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EdgeQubits {
    One(QubitId),
    Two(QubitId, QubitId),
}

impl EdgeQubits {
    pub fn iter(self) -> impl Iterator<Item = QubitId> {
        let (a, b) = match self {
            EdgeQubits::One(a) => (Some(a), None),
            EdgeQubits::Two(a, b) => (Some(a), Some(b)),
        };
        a.into_iter().chain(b)
    }

    pub fn len(self) -> usize {
        match self {
            EdgeQubits::One(_) => 1,
            EdgeQubits::Two(_, _) => 2,
        }
    }

    pub fn is_empty(self) -> bool {
        false
    }

    pub fn contains(self, q: QubitId) -> bool {
        self.iter().any(|x| x == q)
    }

    pub fn other(self, q: QubitId) -> Option<QubitId> {
        match self {
            EdgeQubits::Two(a, b) if a == q => Some(b),
            EdgeQubits::Two(a, b) if b == q => Some(a),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Edge {
    pub id: EdgeId,
    pub qubits: EdgeQubits,
    pub basis: Basis,
    pub colour: Colour,
    /// True for single-qubit boundary checks.
    pub boundary: bool,
    /// Side of the patch this boundary edge sits on, if planar.
    pub side: Option<Side>,
    /// Auxiliary qubit measuring this edge on heavy lattices.
    pub aux: Option<QubitId>,
}

impl Edge {
    /// Check operator of this edge: basis on each member qubit.
    pub fn operator(&self) -> PauliString {
        PauliString::from_terms(self.qubits.iter().map(|q| (q.0, self.basis)))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Plaquette {
    pub id: PlaqId,
    pub colour: Colour,
    /// Member edges in cycle/chain walk order.
    pub edges: Vec<EdgeId>,
    /// True for plaquettes with single-qubit member edges of differing
    /// bases; these are never deterministic (patch corners, Fig-style
    /// weight-1 artifacts).
    pub corner: bool,
}

impl Plaquette {
    pub fn basis(&self) -> Basis {
        self.colour.basis()
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Lattice {
    pub kind: LatticeKind,
    pub qubits: Vec<Qubit>,
    pub edges: BTreeMap<EdgeId, Edge>,
    pub plaquettes: BTreeMap<PlaqId, Plaquette>,
    pub next_edge_id: u32,
    pub next_plaq_id: u32,
    /// Uniform single-qubit-check colour per boundary side (planar only).
    pub boundary_colour: BTreeMap<Side, Colour>,
    /// Torus dimensions (vertex columns, vertex rows) for periodic kinds.
    pub torus_dims: Option<(i32, i32)>,
    /// Geometry record allowing planar patches to be re-embedded in the bulk.
    pub patch: Option<honeycomb::PatchParams>,
    #[serde(skip)]
    index: LatticeIndex,
}

#[derive(Debug, Clone, Default)]
struct LatticeIndex {
    edges_of_qubit: BTreeMap<QubitId, Vec<EdgeId>>,
    plaqs_of_edge: BTreeMap<EdgeId, Vec<PlaqId>>,
    built: bool,
}

impl Lattice {
    pub fn new(kind: LatticeKind) -> Self {
        Self {
            kind,
            qubits: Vec::new(),
            edges: BTreeMap::new(),
            plaquettes: BTreeMap::new(),
            next_edge_id: 0,
            next_plaq_id: 0,
            boundary_colour: BTreeMap::new(),
            torus_dims: None,
            patch: None,
            index: LatticeIndex::default(),
        }
    }

    pub fn qubit(&self, q: QubitId) -> &Qubit {
        &self.qubits[q.0 as usize]
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[&e]
    }

    pub fn plaquette(&self, p: PlaqId) -> &Plaquette {
        &self.plaquettes[&p]
    }

    pub fn alive_qubits(&self) -> impl Iterator<Item = &Qubit> {
        self.qubits.iter().filter(|q| q.alive)
    }

    pub fn alive_data_count(&self) -> usize {
        self.alive_qubits()
            .filter(|q| q.kind == QubitKind::Data)
            .count()
    }

    pub fn is_planar(&self) -> bool {
        matches!(self.kind, LatticeKind::PlanarHoneycomb)
            || self.edges.values().any(|e| e.boundary)
    }

    /// Stabiliser operator of a plaquette: product of member edge operators.
    pub fn plaquette_operator(&self, p: PlaqId) -> PauliString {
        let mut op = PauliString::new();
        for &e in &self.plaquettes[&p].edges {
            op.mul_assign(&self.edges[&e].operator());
        }
        op
    }

    pub fn rebuild_index(&mut self) {
        let mut eq: BTreeMap<QubitId, Vec<EdgeId>> = BTreeMap::new();
        let mut pe: BTreeMap<EdgeId, Vec<PlaqId>> = BTreeMap::new();
        for e in self.edges.values() {
            for q in e.qubits.iter() {
                eq.entry(q).or_default().push(e.id);
            }
        }
        for p in self.plaquettes.values() {
            for &e in &p.edges {
                pe.entry(e).or_default().push(p.id);
            }
        }
        self.index = LatticeIndex {
            edges_of_qubit: eq,
            plaqs_of_edge: pe,
            built: true,
        };
    }

    fn index(&self) -> &LatticeIndex {
        assert!(
            self.index.built,
            "lattice index not built; call rebuild_index() after mutation"
        );
        &self.index
    }

    pub fn edges_of_qubit(&self, q: QubitId) -> &[EdgeId] {
        self.index()
            .edges_of_qubit
            .get(&q)
            .map_or(&[], |v| v.as_slice())
    }

    pub fn plaqs_of_edge(&self, e: EdgeId) -> &[PlaqId] {
        self.index()
            .plaqs_of_edge
            .get(&e)
            .map_or(&[], |v| v.as_slice())
    }

    pub fn degree(&self, q: QubitId) -> usize {
        self.edges_of_qubit(q).len()
    }

    /// Plaquettes adjacent to `p` (sharing at least one edge... sharing an
    /// edge means being the other container of one of p's member edges).
    pub fn adjacent_plaquettes(&self, p: PlaqId) -> Vec<PlaqId> {
        let mut out = Vec::new();
        for &e in &self.plaquettes[&p].edges {
            for &other in self.plaqs_of_edge(e) {
                if other != p && !out.contains(&other) {
                    out.push(other);
                }
            }
        }
        out.sort();
        out
    }

    pub fn fresh_edge_id(&mut self) -> EdgeId {
        let id = EdgeId(self.next_edge_id);
        self.next_edge_id += 1;
        id
    }

    pub fn fresh_plaq_id(&mut self) -> PlaqId {
        let id = PlaqId(self.next_plaq_id);
        self.next_plaq_id += 1;
        id
    }

    /// Checks measured in a sub-round of the given colour: all alive edges
    /// (two-qubit and boundary single-qubit) of that colour.
    pub fn checks_of_colour(&self, colour: Colour) -> impl Iterator<Item = &Edge> {
        self.edges.values().filter(move |e| e.colour == colour)
    }

    /// Number of encoded logical qubits: alive data qubits minus the GF(2)
    /// symplectic rank of the instantaneous stabiliser group (all plaquette
    /// operators plus one sub-round's checks). The result must not depend on
    /// which sub-round is used; this is asserted.
    pub fn logical_count(&self) -> i64 {
        let n = self.qubits.len();
        let mut counts = Vec::new();
        for colour in Colour::ALL {
            let mut m = crate::gf2::BitMatrix::new(2 * n);
            for p in self.plaquettes.keys() {
                let op = self.plaquette_operator(*p);
                m.push_row(symplectic_row(&op, n));
            }
            for e in self.checks_of_colour(colour) {
                m.push_row(symplectic_row(&e.operator(), n));
            }
            let rank = m.rank() as i64;
            counts.push(self.alive_data_count() as i64 - rank);
        }
        assert!(
            counts.windows(2).all(|w| w[0] == w[1]),
            "logical count differs between sub-rounds: {counts:?}"
        );
        counts[0]
    }
}

/// Symplectic GF(2) row for a Pauli string over `n` qubits: x bits then z bits.
pub(crate) fn symplectic_row(op: &PauliString, n: usize) -> Vec<u64> {
    let words = (2 * n).div_ceil(64);
    let mut row = vec![0u64; words];
    for (q, b) in op.iter() {
        let (x, z) = b.xz();
        let q = q as usize;
        if x {
            row[q / 64] |= 1 << (q % 64);
        }
        if z {
            let i = n + q;
            row[i / 64] |= 1 << (i % 64);
        }
    }
    row
}

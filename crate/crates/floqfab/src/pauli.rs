//! Pauli bases, plaquette colours and sparse Pauli strings.
//!
//! A Pauli is stored as an (x, z) bit pair: X = (1,0), Y = (1,1), Z = (0,1).
//! Commutation questions reduce to symplectic products over GF(2), which is
//! all the code machinery ever needs; global phases are never tracked.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Measurement basis of an edge check. Total order X < Y < Z is relied on
/// for canonical serialization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Basis {
    X,
    Y,
    Z,
}

impl Basis {
    pub const ALL: [Basis; 3] = [Basis::X, Basis::Y, Basis::Z];

    /// The basis that is neither `a` nor `b`. Panics if `a == b`.
    pub fn third(a: Basis, b: Basis) -> Basis {
        assert_ne!(a, b, "no third basis for equal bases");
        *Basis::ALL
            .iter()
            .find(|&&c| c != a && c != b)
            .expect("three bases")
    }

    pub fn as_char(self) -> char {
        match self {
            Basis::X => 'X',
            Basis::Y => 'Y',
            Basis::Z => 'Z',
        }
    }

    pub fn from_char(c: char) -> Option<Basis> {
        match c {
            'X' => Some(Basis::X),
            'Y' => Some(Basis::Y),
            'Z' => Some(Basis::Z),
            _ => None,
        }
    }

    /// (x, z) symplectic bits of the single-qubit Pauli.
    pub fn xz(self) -> (bool, bool) {
        match self {
            Basis::X => (true, false),
            Basis::Y => (true, true),
            Basis::Z => (false, true),
        }
    }

    pub fn from_xz(x: bool, z: bool) -> Option<Basis> {
        match (x, z) {
            (true, false) => Some(Basis::X),
            (true, true) => Some(Basis::Y),
            (false, true) => Some(Basis::Z),
            (false, false) => None,
        }
    }

    /// Single-qubit anticommutation: true iff the two Paulis differ.
    pub fn anticommutes(self, other: Basis) -> bool {
        self != other
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Plaquette / edge colour. Each lattice kind fixes a colour-to-basis
/// bijection (Red=X, Green=Y, Blue=Z for the honeycomb family).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Colour {
    Red,
    Green,
    Blue,
}

impl Colour {
    pub const ALL: [Colour; 3] = [Colour::Red, Colour::Green, Colour::Blue];

    pub fn index(self) -> usize {
        match self {
            Colour::Red => 0,
            Colour::Green => 1,
            Colour::Blue => 2,
        }
    }

    pub fn from_index(i: usize) -> Colour {
        Colour::ALL[i.rem_euclid(3)]
    }

    /// Fixed colour-to-basis bijection for the code families in scope.
    pub fn basis(self) -> Basis {
        match self {
            Colour::Red => Basis::X,
            Colour::Green => Basis::Y,
            Colour::Blue => Basis::Z,
        }
    }

    pub fn of_basis(b: Basis) -> Colour {
        match b {
            Basis::X => Colour::Red,
            Basis::Y => Colour::Green,
            Basis::Z => Colour::Blue,
        }
    }

    pub fn third(a: Colour, b: Colour) -> Colour {
        assert_ne!(a, b);
        *Colour::ALL
            .iter()
            .find(|&&c| c != a && c != b)
            .expect("three colours")
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Colour::Red => "Red",
            Colour::Green => "Green",
            Colour::Blue => "Blue",
        };
        write!(f, "{s}")
    }
}

/// Sparse multi-qubit Pauli operator, phase-free: qubit index -> basis.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PauliString {
    terms: BTreeMap<u32, Basis>,
}

impl PauliString {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (u32, Basis)>) -> Self {
        let mut s = Self::new();
        for (q, b) in terms {
            s.mul_term(q, b);
        }
        s
    }

    pub fn is_identity(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.terms.len()
    }

    pub fn get(&self, q: u32) -> Option<Basis> {
        self.terms.get(&q).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, Basis)> + '_ {
        self.terms.iter().map(|(&q, &b)| (q, b))
    }

    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.terms.keys().copied()
    }

    /// Multiply a single-qubit Pauli into the string (phase discarded).
    pub fn mul_term(&mut self, q: u32, b: Basis) {
        let (bx, bz) = b.xz();
        let (ox, oz) = self.terms.get(&q).map_or((false, false), |p| p.xz());
        match Basis::from_xz(ox ^ bx, oz ^ bz) {
            Some(nb) => {
                self.terms.insert(q, nb);
            }
            None => {
                self.terms.remove(&q);
            }
        }
    }

    /// Multiply another Pauli string into this one (phase discarded).
    pub fn mul_assign(&mut self, other: &PauliString) {
        for (q, b) in other.iter() {
            self.mul_term(q, b);
        }
    }

    /// Symplectic product: true iff the operators anticommute.
    pub fn anticommutes(&self, other: &PauliString) -> bool {
        let (small, large) = if self.weight() <= other.weight() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = false;
        for (q, b) in small.iter() {
            if let Some(ob) = large.get(q) {
                acc ^= b != ob;
            }
        }
        acc
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "I");
        }
        let mut first = true;
        for (q, b) in self.iter() {
            if !first {
                write!(f, "*")?;
            }
            write!(f, "{}{}", b.as_char(), q)?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn third_basis() {
        assert_eq!(Basis::third(Basis::X, Basis::Y), Basis::Z);
        assert_eq!(Basis::third(Basis::Z, Basis::X), Basis::Y);
    }

    #[test]
    fn pauli_string_multiplication_cancels() {
        let mut p = PauliString::new();
        p.mul_term(3, Basis::X);
        p.mul_term(3, Basis::Z);
        assert_eq!(p.get(3), Some(Basis::Y));
        p.mul_term(3, Basis::Y);
        assert!(p.is_identity());
    }

    #[test]
    fn anticommutation() {
        let a = PauliString::from_terms([(0, Basis::X), (1, Basis::X)]);
        let b = PauliString::from_terms([(1, Basis::Z), (2, Basis::Z)]);
        assert!(a.anticommutes(&b));
        let c = PauliString::from_terms([(0, Basis::Z), (1, Basis::Z)]);
        assert!(!a.anticommutes(&c));
    }
}

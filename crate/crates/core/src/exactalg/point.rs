//! Evaluation points.

use super::field::{FieldElem, SignedMonomial};

/// An `n`-vector of nonzero field elements. Points whose coordinates are all
/// signed monomials keep that form for fast substitution.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Point {
    coords: Vec<FieldElem>,
    monos: Option<Vec<SignedMonomial>>,
}

impl Point {
    pub fn from_monomials(monos: Vec<SignedMonomial>) -> Self {
        let coords = monos.iter().map(|m| m.to_field()).collect();
        Point { coords, monos: Some(monos) }
    }

    pub fn from_coords(coords: Vec<FieldElem>) -> Self {
        assert!(coords.iter().all(|c| !c.is_zero()), "point coordinates must be nonzero");
        let monos: Option<Vec<SignedMonomial>> = coords.iter().map(|c| c.as_monomial()).collect();
        Point { coords, monos }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[FieldElem] {
        &self.coords
    }

    pub fn monomials(&self) -> Option<&[SignedMonomial]> {
        self.monos.as_deref()
    }

    /// Multiplies every coordinate by `c`.
    pub fn scaled(&self, c: &FieldElem) -> Point {
        match (&self.monos, c.as_monomial()) {
            (Some(ms), Some(m)) => Point::from_monomials(ms.iter().map(|x| x.mul(&m)).collect()),
            _ => Point::from_coords(self.coords.iter().map(|x| x * c).collect()),
        }
    }

    /// Coordinatewise inverse.
    pub fn inverse(&self) -> Point {
        match &self.monos {
            Some(ms) => Point::from_monomials(ms.iter().map(|x| x.inv()).collect()),
            None => Point::from_coords(self.coords.iter().map(|x| x.inv().expect("nonzero")).collect()),
        }
    }

    /// Applies `ι` to every coordinate.
    pub fn iota(&self) -> Point {
        self.inverse()
            .monos
            .map(Point::from_monomials)
            .unwrap_or_else(|| Point::from_coords(self.coords.iter().map(|x| x.iota()).collect()))
    }

    /// True when the coordinates are pairwise distinct.
    pub fn distinct(&self) -> bool {
        for i in 0..self.coords.len() {
            for j in i + 1..self.coords.len() {
                if self.coords[i] == self.coords[j] {
                    return false;
                }
            }
        }
        true
    }

    pub fn render(&self) -> String {
        let parts: Vec<String> = self.coords.iter().map(|c| c.render()).collect();
        format!("({})", parts.join(", "))
    }
}

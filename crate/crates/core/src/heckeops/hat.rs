//! Hat-operators acting on finitely supported functions `Z^n → V`.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::combin::{bar_coord, IntVector};
use crate::exactalg::{FieldElem, XPolynomial};

/// Values that can be combined linearly over `Q(q,t,a)`.
pub trait KModule: Clone {
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn scale(&self, c: &FieldElem) -> Self;
}

impl KModule for FieldElem {
    fn add(&self, other: &Self) -> Self {
        self.add_ref(other)
    }
    fn sub(&self, other: &Self) -> Self {
        self.sub_ref(other)
    }
    fn scale(&self, c: &FieldElem) -> Self {
        self.mul_ref(c)
    }
}

impl KModule for XPolynomial {
    fn add(&self, other: &Self) -> Self {
        XPolynomial::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        XPolynomial::sub(self, other)
    }
    fn scale(&self, c: &FieldElem) -> Self {
        XPolynomial::scale(self, c)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("index {0} outside the table support")]
pub struct SupportMiss(pub IntVector);

/// A function on `Z^n` with explicit finite support.
#[derive(Clone, Debug)]
pub struct FamilyTable<V> {
    values: BTreeMap<IntVector, V>,
}

impl<V: KModule> Default for FamilyTable<V> {
    fn default() -> Self {
        Self::new()
    }
}

impl<V: KModule> FamilyTable<V> {
    pub fn new() -> Self {
        FamilyTable { values: BTreeMap::new() }
    }

    pub fn insert(&mut self, v: IntVector, value: V) {
        self.values.insert(v, value);
    }

    pub fn get(&self, v: &IntVector) -> Result<&V, SupportMiss> {
        self.values.get(v).ok_or_else(|| SupportMiss(v.clone()))
    }

    pub fn contains(&self, v: &IntVector) -> bool {
        self.values.contains_key(v)
    }

    pub fn support(&self) -> impl Iterator<Item = &IntVector> {
        self.values.keys()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl<V: KModule> FromIterator<(IntVector, V)> for FamilyTable<V> {
    fn from_iter<I: IntoIterator<Item = (IntVector, V)>>(iter: I) -> Self {
        FamilyTable { values: iter.into_iter().collect() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HatOp {
    /// `Ĥ_i` (1-based).
    H(usize),
    Delta,
    DeltaInv,
    /// `x̂_j` (1-based).
    X(usize),
}

/// `(Ĥ_i f)(v) = t f(v) + (v̄_i − t v̄_{i+1})/(v̄_i − v̄_{i+1}) (f(s_i v) − f(v))`,
/// `(Δ̂f)(v) = f(v^♯)`, `(Δ̂^{-1}f)(v) = f(v^♮)`, `(x̂_j f)(v) = a v̄_j f(v)`.
pub fn hat_apply<V: KModule>(op: HatOp, f: &FamilyTable<V>, v: &IntVector) -> Result<V, SupportMiss> {
    match op {
        HatOp::H(i) => {
            let fv = f.get(v)?;
            let tf = fv.scale(&FieldElem::t());
            if v.0[i - 1] == v.0[i] {
                return Ok(tf);
            }
            let fs = f.get(&v.swapped(i))?;
            let bi = bar_coord(v, i);
            let bj = bar_coord(v, i + 1);
            let coef = (&bi - &(&FieldElem::t() * &bj)) / (&bi - &bj);
            Ok(tf.add(&fs.sub(fv).scale(&coef)))
        }
        HatOp::Delta => f.get(&v.lower()).cloned(),
        HatOp::DeltaInv => f.get(&v.raise()).cloned(),
        HatOp::X(j) => Ok(f.get(v)?.scale(&(&FieldElem::a() * &bar_coord(v, j)))),
    }
}

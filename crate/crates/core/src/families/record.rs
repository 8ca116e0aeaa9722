//! JSON form of a family member.

use serde::{Deserialize, Serialize};

use crate::combin::IntVector;
use crate::exactalg::{ExactError, FieldElem, XMono, XPolynomial};

use super::{FamilyTag, XRational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub monomial: Vec<i32>,
    pub coefficient: String,
}

/// A family member as `numerator / denominator`, both expanded, with terms
/// in ascending monomial order and coefficients in canonical text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberRecord {
    pub family: String,
    pub n: usize,
    pub index: Vec<i32>,
    pub numerator_terms: Vec<TermRecord>,
    pub denominator_terms: Vec<TermRecord>,
}

fn terms_of(p: &XPolynomial) -> Vec<TermRecord> {
    p.terms().map(|(m, c)| TermRecord { monomial: m.exps().to_vec(), coefficient: c.render() }).collect()
}

fn poly_of(n: usize, terms: &[TermRecord]) -> Result<XPolynomial, ExactError> {
    let mut out = XPolynomial::zero(n);
    for t in terms {
        if t.monomial.len() != n {
            return Err(ExactError::DimensionMismatch { expected: n, got: t.monomial.len() });
        }
        out.add_term(XMono::from_slice(&t.monomial), FieldElem::parse(&t.coefficient)?);
    }
    Ok(out)
}

impl MemberRecord {
    pub fn new(tag: FamilyTag, index: &IntVector, value: &XRational) -> Self {
        MemberRecord {
            family: tag.to_string(),
            n: index.n(),
            index: index.entries().to_vec(),
            numerator_terms: terms_of(&value.numerator()),
            denominator_terms: terms_of(&value.denominator()),
        }
    }

    pub fn numerator(&self) -> Result<XPolynomial, ExactError> {
        poly_of(self.n, &self.numerator_terms)
    }

    pub fn denominator(&self) -> Result<XPolynomial, ExactError> {
        poly_of(self.n, &self.denominator_terms)
    }

    /// True when `numerator / denominator` equals `value` as a rational
    /// function.
    pub fn represents(&self, value: &XRational) -> Result<bool, ExactError> {
        let lhs = self.numerator()?.mul(&value.denominator());
        let rhs = value.numerator().mul(&self.denominator()?);
        Ok(lhs == rhs)
    }
}

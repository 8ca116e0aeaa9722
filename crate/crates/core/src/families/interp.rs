//! Interpolation by exact linear algebra.

use crate::combin::{bar_monomials, compositions_up_to, tilde_monomials, IntVector};
use crate::exactalg::{FieldElem, SignedMonomial, XMono, XPolynomial};
use crate::linalg::{solve, SolveError};

fn power(point: &[SignedMonomial], m: &IntVector) -> FieldElem {
    point.iter().zip(m.entries()).fold(SignedMonomial::ONE, |acc, (p, &e)| acc.mul(&p.pow(e))).to_field()
}

/// `G_α` as the unique polynomial of degree `≤ |α|` that vanishes at `β̄`
/// for every composition `β ≠ α` with `|β| ≤ |α|` and has coefficient `1`
/// at `x^α`.
pub fn g_interpolation(alpha: &IntVector) -> Result<XPolynomial, SolveError> {
    assert!(alpha.is_composition());
    let n = alpha.n();
    let d = alpha.weight() as i32;
    let monos = compositions_up_to(n, d);
    let mut rows = Vec::with_capacity(monos.len());
    let mut rhs = Vec::with_capacity(monos.len());
    for beta in &monos {
        if beta == alpha {
            rows.push(monos.iter().map(|m| if m == alpha { FieldElem::one() } else { FieldElem::zero() }).collect());
            rhs.push(FieldElem::one());
        } else {
            let pt = bar_monomials(beta);
            rows.push(monos.iter().map(|m| power(&pt, m)).collect());
            rhs.push(FieldElem::zero());
        }
    }
    let coeffs = solve(rows, rhs)?;
    Ok(XPolynomial::from_terms(n, monos.iter().zip(coeffs).map(|(m, c)| (XMono::from_slice(m.entries()), c))))
}

/// The unique polynomial with top homogeneous part `top` (of degree `d`)
/// vanishing at `β̃` for every composition `β` with `|β| < d`.
pub fn gprime_interpolation(top: &XPolynomial, d: i32) -> Result<XPolynomial, SolveError> {
    let n = top.nvars();
    if d == 0 {
        return Ok(top.clone());
    }
    let monos = compositions_up_to(n, d - 1);
    let mut rows = Vec::with_capacity(monos.len());
    let mut rhs = Vec::with_capacity(monos.len());
    for beta in &monos {
        let pt = tilde_monomials(beta);
        rows.push(monos.iter().map(|m| power(&pt, m)).collect());
        let value = top
            .terms()
            .map(|(m, c)| c.mul_ref(&power(&pt, &IntVector::from(m.exps()))))
            .fold(FieldElem::zero(), |acc, v| acc.add_ref(&v));
        rhs.push(value.neg_ref());
    }
    let coeffs = solve(rows, rhs)?;
    let lower = XPolynomial::from_terms(n, monos.iter().zip(coeffs).map(|(m, c)| (XMono::from_slice(m.entries()), c)));
    Ok(top.add(&lower))
}

//! Operator identities checked on monomial bases.

use crate::combin::compositions_up_to;
use crate::exactalg::{FieldElem, XPolynomial};

use super::{apply_delta, apply_h, apply_h_inv, apply_hw0, apply_j, apply_psi, apply_w0, apply_xi, Variant};

/// First monomial on which two operators disagree.
#[derive(Clone, Debug, PartialEq)]
pub struct RelationFailure {
    pub monomial: Vec<i32>,
    pub lhs: XPolynomial,
    pub rhs: XPolynomial,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RelationCheck {
    pub name: String,
    pub n: usize,
    pub max_degree: i32,
    pub checked: usize,
    pub failure: Option<RelationFailure>,
}

impl RelationCheck {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Exponent vectors of total degree `≤ d`; with `laurent` the bound is on
/// `Σ|e_i|` and negative exponents are included.
pub fn monomial_basis(n: usize, d: i32, laurent: bool) -> Vec<Vec<i32>> {
    if !laurent {
        return compositions_up_to(n, d).into_iter().map(|v| v.0).collect();
    }
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in &out {
            let used: i32 = p.iter().map(|x: &i32| x.abs()).sum();
            for x in -(d - used)..=(d - used) {
                let mut q = p.clone();
                q.push(x);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

/// Compares `lhs(m)` and `rhs(m)` on every basis monomial `m`.
pub fn check_on_monomials<L, R>(name: &str, n: usize, max_degree: i32, laurent: bool, lhs: L, rhs: R) -> RelationCheck
where
    L: Fn(&XPolynomial) -> XPolynomial,
    R: Fn(&XPolynomial) -> XPolynomial,
{
    let basis = monomial_basis(n, max_degree, laurent);
    let mut checked = 0;
    for e in basis {
        let m = XPolynomial::monomial(n, &e, FieldElem::one());
        let l = lhs(&m);
        let r = rhs(&m);
        checked += 1;
        if l != r {
            return RelationCheck {
                name: name.to_string(),
                n,
                max_degree,
                checked,
                failure: Some(RelationFailure { monomial: e, lhs: l, rhs: r }),
            };
        }
    }
    RelationCheck { name: name.to_string(), n, max_degree, checked, failure: None }
}

fn h(i: usize) -> impl Fn(&XPolynomial) -> XPolynomial {
    move |p| apply_h(i, p, Variant::PLAIN)
}

fn delta(p: &XPolynomial) -> XPolynomial {
    apply_delta(p, false, false)
}

/// The defining relations of the extended affine Hecke algebra of type A:
/// quadratic, far commutation, braid, `ΔH_{i+1} = H_iΔ` and
/// `Δ²H_1 = H_{n−1}Δ²`.
pub fn hecke_relations(n: usize, max_degree: i32) -> Vec<RelationCheck> {
    assert!(n >= 2);
    let mut out = Vec::new();
    let t = FieldElem::t();
    for i in 1..n {
        let t = t.clone();
        out.push(check_on_monomials(
            &format!("quadratic (H_{i} - t)(H_{i} + 1) = 0"),
            n,
            max_degree,
            false,
            move |p| {
                let f = apply_h(i, p, Variant::PLAIN).add(p);
                apply_h(i, &f, Variant::PLAIN).sub(&f.scale(&t))
            },
            move |p| XPolynomial::zero(p.nvars()),
        ));
    }
    for i in 1..n {
        for j in i + 2..n {
            out.push(check_on_monomials(
                &format!("commutation H_{i} H_{j} = H_{j} H_{i}"),
                n,
                max_degree,
                false,
                move |p| h(i)(&h(j)(p)),
                move |p| h(j)(&h(i)(p)),
            ));
        }
    }
    for i in 1..n.saturating_sub(1) {
        out.push(check_on_monomials(
            &format!("braid H_{i} H_{} H_{i} = H_{} H_{i} H_{}", i + 1, i + 1, i + 1),
            n,
            max_degree,
            false,
            move |p| h(i)(&h(i + 1)(&h(i)(p))),
            move |p| h(i + 1)(&h(i)(&h(i + 1)(p))),
        ));
    }
    for i in 1..n.saturating_sub(1) {
        out.push(check_on_monomials(
            &format!("Delta H_{} = H_{i} Delta", i + 1),
            n,
            max_degree,
            false,
            move |p| delta(&h(i + 1)(p)),
            move |p| h(i)(&delta(p)),
        ));
    }
    out.push(check_on_monomials(
        &format!("Delta^2 H_1 = H_{} Delta^2", n - 1),
        n,
        max_degree,
        false,
        |p| delta(&delta(&h(1)(p))),
        move |p| h(n - 1)(&delta(&delta(p))),
    ));
    out
}

/// Intertwining and inversion identities for `Ψ`, `J` and `w_0`, together
/// with `H̄_iH_i = t`, commutativity of the `ξ_i` and `ξ_i ξ_i^{-1} = 1`.
pub fn intertwining_relations(n: usize, max_degree: i32) -> Vec<RelationCheck> {
    let mut out = Vec::new();
    let t = FieldElem::t();
    let tn1 = FieldElem::qta(0, n as i32 - 1, 0);
    for i in 1..n {
        let t1 = t.clone();
        out.push(check_on_monomials(
            &format!("Hbar_{i} H_{i} = t"),
            n,
            max_degree,
            true,
            move |p| apply_h(i, &apply_h(i, p, Variant::PLAIN), Variant::BAR),
            move |p| p.scale(&t1),
        ));
        let t2 = t.clone();
        out.push(check_on_monomials(
            &format!("H_{i} Psi = t Psi Hbar°_{i}"),
            n,
            max_degree,
            false,
            move |p| apply_h(i, &apply_psi(p), Variant::PLAIN),
            move |p| apply_psi(&apply_h(i, p, Variant::BAR_CIRC)).scale(&t2),
        ));
        out.push(check_on_monomials(
            &format!("J H_{i} J = (H°_{i})^-1"),
            n,
            max_degree,
            true,
            move |p| apply_j(&apply_h(i, &apply_j(p), Variant::PLAIN)),
            move |p| apply_h_inv(i, p, Variant::CIRC),
        ));
        out.push(check_on_monomials(
            &format!("w0 H_{i} w0 = (H°_{})^-1", n - i),
            n,
            max_degree,
            true,
            move |p| apply_w0(&apply_h(i, &apply_w0(p), Variant::PLAIN)),
            move |p| apply_h_inv(n - i, p, Variant::CIRC),
        ));
    }
    let tn1c = tn1.clone();
    out.push(check_on_monomials(
        "Delta Psi = t^(n-1) Psi Hbar°_(n-1)...Hbar°_1 (Delta°)^-1 H°_(n-1)...H°_1",
        n,
        max_degree,
        false,
        |p| apply_delta(&apply_psi(p), false, false),
        move |p| {
            let mut f = p.clone();
            for k in 1..n {
                f = apply_h(k, &f, Variant::CIRC);
            }
            f = apply_delta(&f, true, true);
            for k in 1..n {
                f = apply_h(k, &f, Variant::BAR_CIRC);
            }
            apply_psi(&f).scale(&tn1c)
        },
    ));
    out.push(check_on_monomials(
        "H_w0 Psi = w0",
        n,
        max_degree,
        false,
        |p| apply_hw0(&apply_psi(p), Variant::PLAIN),
        apply_w0,
    ));
    for i in 1..=n {
        out.push(check_on_monomials(
            &format!("xi_{i}^-1 Psi = Psi xi°_{i}"),
            n,
            max_degree,
            false,
            move |p| apply_xi(i, &apply_psi(p), true, false),
            move |p| apply_psi(&apply_xi(i, p, false, true)),
        ));
        out.push(check_on_monomials(
            &format!("xi_{i} xi_{i}^-1 = 1"),
            n,
            max_degree,
            true,
            move |p| apply_xi(i, &apply_xi(i, p, true, false), false, false),
            |p| p.clone(),
        ));
        for j in i + 1..=n {
            out.push(check_on_monomials(
                &format!("xi_{i} xi_{j} = xi_{j} xi_{i}"),
                n,
                max_degree,
                true,
                move |p| apply_xi(i, &apply_xi(j, p, false, false), false, false),
                move |p| apply_xi(j, &apply_xi(i, p, false, false), false, false),
            ));
        }
    }
    out
}

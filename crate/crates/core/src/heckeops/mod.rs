//! Demazure–Lusztig operators, the affine shift `Δ`, Cherednik operators
//! and the discrete hat-operators.

pub mod hat;
pub mod relations;

use smallvec::SmallVec;

use crate::combin::{check_reduced, longest_word, Permutation, PermutationError};
use crate::exactalg::{ExpVec, FieldElem, SignedMonomial, XMono, XPolynomial};

/// Selects the inverted-parameter (`°`) and bar (`H̄ = H + 1 − t`) forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Variant {
    pub circ: bool,
    pub bar: bool,
}

impl Variant {
    pub const PLAIN: Variant = Variant { circ: false, bar: false };
    pub const BAR: Variant = Variant { circ: false, bar: true };
    pub const CIRC: Variant = Variant { circ: true, bar: false };
    pub const BAR_CIRC: Variant = Variant { circ: true, bar: true };

    /// The Hecke parameter: `t`, or `t^{-1}` for `°`.
    pub fn t(&self) -> FieldElem {
        if self.circ {
            FieldElem::qta(0, -1, 0)
        } else {
            FieldElem::t()
        }
    }

    fn t_mono(&self) -> SignedMonomial {
        SignedMonomial::new(false, [0, if self.circ { -1 } else { 1 }, 0])
    }
}

/// `s_i` (1-based).
pub fn apply_s(i: usize, p: &XPolynomial) -> XPolynomial {
    p.swap_vars(i - 1, i)
}

/// `H_i f = t f − (x_i − t x_{i+1}) ∂_i f` with `∂_i` the divided difference,
/// in the requested variant.
pub fn apply_h(i: usize, p: &XPolynomial, variant: Variant) -> XPolynomial {
    let n = p.nvars();
    assert!(i >= 1 && i < n, "H_{i} needs 1 ≤ i < n = {n}");
    let t = variant.t_mono();
    let d = p.divided_difference(i - 1);
    let mut out = p.scale(&t.to_field());
    for (m, c) in d.terms() {
        // −x_i · c x^m + t x_{i+1} · c x^m
        let mut e1 = m.0.clone();
        e1[i - 1] += 1;
        out.add_term(XMono(e1), c.neg_ref());
        let mut e2 = m.0.clone();
        e2[i] += 1;
        out.add_term(XMono(e2), c.mul_monomial(&t));
    }
    if variant.bar {
        // H̄ = H + 1 − t
        let one_minus_t = &FieldElem::one() - &variant.t();
        out = out.add(&p.scale(&one_minus_t));
    }
    out
}

/// `H_i^{-1} = t^{-1} H̄_i`, `H̄_i^{-1} = t^{-1} H_i`.
pub fn apply_h_inv(i: usize, p: &XPolynomial, variant: Variant) -> XPolynomial {
    let flipped = Variant { circ: variant.circ, bar: !variant.bar };
    apply_h(i, p, flipped).scale(&variant.t().inv().expect("t ≠ 0"))
}

/// `H_w = H_{i_1}⋯H_{i_ℓ}` for a reduced word; `H_{i_ℓ}` acts first.
pub fn apply_hw(word: &[usize], p: &XPolynomial, variant: Variant) -> Result<XPolynomial, PermutationError> {
    check_reduced(p.nvars(), word)?;
    Ok(apply_word_unchecked(word, p, variant))
}

fn apply_word_unchecked(word: &[usize], p: &XPolynomial, variant: Variant) -> XPolynomial {
    word.iter().rev().fold(p.clone(), |acc, &i| apply_h(i, &acc, variant))
}

/// `H_{w_0}` via the fixed reduced word of the longest element.
pub fn apply_hw0(p: &XPolynomial, variant: Variant) -> XPolynomial {
    apply_word_unchecked(&longest_word(p.nvars()), p, variant)
}

/// `H_w` for a permutation, via its bubble-sort reduced word.
pub fn apply_h_perm(w: &Permutation, p: &XPolynomial, variant: Variant) -> XPolynomial {
    apply_word_unchecked(&w.reduced_word(), p, variant)
}

/// `Δf(x) = f(q^{-1}x_n, x_1, …, x_{n−1})`; `Δ°` replaces `q` by `q^{-1}`.
pub fn apply_delta(p: &XPolynomial, circ: bool, inverse: bool) -> XPolynomial {
    let n = p.nvars();
    let sign = if circ { -1 } else { 1 };
    if !inverse {
        p.transform(|e| {
            let mut ne: ExpVec = SmallVec::from_elem(0, n);
            ne[..n - 1].copy_from_slice(&e[1..]);
            ne[n - 1] = e[0];
            (ne, SignedMonomial::new(false, [-sign * e[0], 0, 0]))
        })
    } else {
        // Δ^{-1} f(x) = f(x_2, …, x_n, q x_1)
        p.transform(|e| {
            let mut ne: ExpVec = SmallVec::from_elem(0, n);
            ne[1..].copy_from_slice(&e[..n - 1]);
            ne[0] = e[n - 1];
            (ne, SignedMonomial::new(false, [sign * e[n - 1], 0, 0]))
        })
    }
}

/// `Φ = (x_n − t^{1−n})Δ`.
pub fn apply_phi(p: &XPolynomial) -> XPolynomial {
    let n = p.nvars();
    let d = apply_delta(p, false, false);
    let mut e = vec![0; n];
    e[n - 1] = 1;
    d.mul_xmono(&XMono::from_slice(&e)).sub(&d.scale(&FieldElem::qta(0, 1 - n as i32, 0)))
}

/// Cherednik operator `ξ_i = t^{1−n} H̄_{i−1}⋯H̄_1 Δ^{-1} H_{n−1}⋯H_i`, or
/// its inverse `H̄_i⋯H̄_{n−1} Δ H_1⋯H_{i−1}`; with `circ` all parameters
/// are inverted.
pub fn apply_xi(i: usize, p: &XPolynomial, inverse: bool, circ: bool) -> XPolynomial {
    let n = p.nvars();
    assert!(i >= 1 && i <= n);
    let plain = Variant { circ, bar: false };
    let barv = Variant { circ, bar: true };
    if !inverse {
        let mut f = p.clone();
        for k in i..n {
            f = apply_h(k, &f, plain);
        }
        f = apply_delta(&f, circ, true);
        for k in 1..i {
            f = apply_h(k, &f, barv);
        }
        f.scale(&plain.t().pow(1 - n as i64))
    } else {
        let mut f = p.clone();
        for k in (1..i).rev() {
            f = apply_h(k, &f, plain);
        }
        f = apply_delta(&f, circ, false);
        for k in (i..n).rev() {
            f = apply_h(k, &f, barv);
        }
        f
    }
}

/// `Ξ_j f = x_j^{-1}(f + H_j⋯H_{n−1} Φ H_1⋯H_{j−1} f)`. Panics if the
/// result is not a polynomial.
pub fn apply_big_xi(j: usize, p: &XPolynomial) -> XPolynomial {
    let n = p.nvars();
    assert!(j >= 1 && j <= n);
    let mut f = p.clone();
    for k in (1..j).rev() {
        f = apply_h(k, &f, Variant::PLAIN);
    }
    f = apply_phi(&f);
    for k in (j..n).rev() {
        f = apply_h(k, &f, Variant::PLAIN);
    }
    let sum = p.add(&f);
    let mut e = vec![0; n];
    e[j - 1] = 1;
    sum.div_xmono_polynomial(&XMono::from_slice(&e))
        .expect("residual 1/x_j term in Ξ_j: operator implementation is inconsistent")
}

/// `C_+ = Σ_{w∈S_n} H_w`.
pub fn apply_cplus(p: &XPolynomial) -> XPolynomial {
    Permutation::all(p.nvars())
        .iter()
        .map(|w| apply_h_perm(w, p, Variant::PLAIN))
        .fold(XPolynomial::zero(p.nvars()), |acc, x| acc.add(&x))
}

/// `w_0 f`: `x_i ↦ x_{n+1−i}`.
pub fn apply_w0(p: &XPolynomial) -> XPolynomial {
    p.permute(Permutation::longest(p.nvars()).one_line())
}

/// `Ψ = w_0 H°_{w_0}`.
pub fn apply_psi(p: &XPolynomial) -> XPolynomial {
    apply_w0(&apply_hw0(p, Variant::CIRC))
}

/// `(Jf)(x) = f(x^{-1})`.
pub fn apply_j(p: &XPolynomial) -> XPolynomial {
    p.invert_vars()
}

/// Multiplication by `x_j^k`.
pub fn mul_xj(j: usize, k: i32, p: &XPolynomial) -> XPolynomial {
    let mut e = vec![0; p.nvars()];
    e[j - 1] = k;
    p.mul_xmono(&XMono::from_slice(&e))
}

/// A single operator, for building products.
#[derive(Clone, Debug, PartialEq)]
pub enum Op {
    S(usize),
    H(usize, Variant),
    HInv(usize, Variant),
    Delta {
        circ: bool,
        inverse: bool,
    },
    Phi,
    Xi {
        i: usize,
        inverse: bool,
        circ: bool,
    },
    BigXi(usize),
    W0,
    J,
    Psi,
    /// Multiplication by `x_j^k`.
    X(usize, i32),
    Scalar(FieldElem),
}

pub fn apply_op(op: &Op, p: &XPolynomial) -> XPolynomial {
    match op {
        Op::S(i) => apply_s(*i, p),
        Op::H(i, v) => apply_h(*i, p, *v),
        Op::HInv(i, v) => apply_h_inv(*i, p, *v),
        Op::Delta { circ, inverse } => apply_delta(p, *circ, *inverse),
        Op::Phi => apply_phi(p),
        Op::Xi { i, inverse, circ } => apply_xi(*i, p, *inverse, *circ),
        Op::BigXi(j) => apply_big_xi(*j, p),
        Op::W0 => apply_w0(p),
        Op::J => apply_j(p),
        Op::Psi => apply_psi(p),
        Op::X(j, k) => mul_xj(*j, *k, p),
        Op::Scalar(c) => p.scale(c),
    }
}

/// Applies `ops[0] ops[1] ⋯ ops[k−1]` to `p` (right-most first).
pub fn apply_product(ops: &[Op], p: &XPolynomial) -> XPolynomial {
    ops.iter().rev().fold(p.clone(), |acc, op| apply_op(op, &acc))
}

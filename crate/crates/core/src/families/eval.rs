//! Closed product formulas for principal evaluations.

use crate::combin::{diagram_stats, IntVector};
use crate::exactalg::FieldElem;

/// `G_α(aτ)` from the arm, leg, coarm and coleg of the cells of `α`.
pub fn g_eval_product(alpha: &IntVector) -> FieldElem {
    let n = alpha.n() as i32;
    let mut num = FieldElem::one();
    let mut den = FieldElem::one();
    for s in diagram_stats(alpha) {
        let f1 = &FieldElem::qta(0, 1 - n, 0) - &FieldElem::qta(s.coarm + 1, 1 - s.coleg, 0);
        let f2 = &FieldElem::qta(0, s.coleg, 1) - &FieldElem::qta(s.coarm, 0, 0);
        num = &num * &(&f1 * &f2);
        den = &den * &(&FieldElem::one() - &FieldElem::qta(s.arm + 1, s.leg + 1, 0));
    }
    &num / &den
}

/// `E_α(τ)`, the top `a`-coefficient of [`g_eval_product`].
pub fn e_tau_product(alpha: &IntVector) -> FieldElem {
    let n = alpha.n() as i32;
    let mut out = FieldElem::one();
    for s in diagram_stats(alpha) {
        let num = &FieldElem::qta(0, 1 - n + s.coleg, 0) - &FieldElem::qta(s.coarm + 1, 1, 0);
        let den = &FieldElem::one() - &FieldElem::qta(s.arm + 1, s.leg + 1, 0);
        out = &out * &(&num / &den);
    }
    out
}

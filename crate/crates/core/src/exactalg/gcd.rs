//! Multivariate gcd over `Z[q,t,a]`.
//!
//! The main route is the heuristic gcd (evaluate one variable at a large
//! integer, recurse, and lift the result back by xi-adic expansion), with a
//! trial division that makes every accepted answer exact. When the heuristic
//! gives up, a recursive primitive PRS computes the gcd deterministically.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::parampoly::{Exp3, ParamPoly};

const HEU_ATTEMPTS: usize = 6;

/// gcd normalized to a positive leading coefficient. `gcd(0, 0) = 0`.
pub fn poly_gcd(a: &ParamPoly, b: &ParamPoly) -> ParamPoly {
    debug_assert!(!a.has_negative_exponent() && !b.has_negative_exponent());
    if a.is_zero() {
        return normalize_sign(b.clone());
    }
    if b.is_zero() {
        return normalize_sign(a.clone());
    }
    if a == b {
        return normalize_sign(a.clone());
    }
    // Monomial part.
    let ma = a.min_exponents();
    let mb = b.min_exponents();
    let common: Exp3 = [ma[0].min(mb[0]), ma[1].min(mb[1]), ma[2].min(mb[2])];
    let ra = a.shift(&[-ma[0], -ma[1], -ma[2]]);
    let rb = b.shift(&[-mb[0], -mb[1], -mb[2]]);
    let core = gcd_no_monomial(&ra, &rb);
    normalize_sign(core.shift(&common))
}

/// gcd of polynomials neither of which is divisible by a parameter.
fn gcd_no_monomial(a: &ParamPoly, b: &ParamPoly) -> ParamPoly {
    if a.is_constant() || b.is_constant() {
        return ParamPoly::constant(a.content().gcd(&b.content()));
    }
    if a.is_monomial() || b.is_monomial() {
        // a monomial without parameter factor is a constant; handled above
        return ParamPoly::constant(a.content().gcd(&b.content()));
    }
    let na = normalize_sign(a.clone());
    let nb = normalize_sign(b.clone());
    let ca = na.content();
    let cb = nb.content();
    let pa = na.div_scalar_exact(&ca);
    let pb = nb.div_scalar_exact(&cb);
    let c = ca.gcd(&cb);
    if pa == pb {
        return pa.scale(&c);
    }
    if pa.div_exact(&pb).is_some() {
        return pb.scale(&c);
    }
    if pb.div_exact(&pa).is_some() {
        return pa.scale(&c);
    }
    if let Some((g, _, _)) = heuristic_gcd(&pa, &pb) {
        return normalize_sign(g).scale(&c);
    }
    normalize_sign(prs_gcd(&pa, &pb)).scale(&c)
}

fn normalize_sign(p: ParamPoly) -> ParamPoly {
    match p.leading() {
        Some((_, c)) if c.is_negative() => p.neg(),
        _ => p,
    }
}

fn symmetric_mod(c: &BigInt, xi: &BigInt, half: &BigInt) -> BigInt {
    let mut r = c.mod_floor(xi);
    if &r > half {
        r -= xi;
    }
    r
}

/// Lifts an image polynomial back through `var = xi`.
fn interpolate(mut gamma: ParamPoly, var: usize, xi: &BigInt) -> ParamPoly {
    let half = xi / 2;
    let mut coeffs: Vec<ParamPoly> = Vec::new();
    let mut guard = 0usize;
    while !gamma.is_zero() {
        let gi = ParamPoly::from_terms(gamma.terms().iter().map(|(e, c)| (*e, symmetric_mod(c, xi, &half))));
        gamma = gamma.sub(&gi).div_scalar_exact(xi);
        coeffs.push(gi);
        guard += 1;
        if guard > 100_000 {
            break;
        }
    }
    ParamPoly::from_coefficients_in(var, &coeffs)
}

/// Heuristic gcd; returns `(g, a/g, b/g)` or `None` if all attempts fail.
pub(crate) fn heuristic_gcd(a: &ParamPoly, b: &ParamPoly) -> Option<(ParamPoly, ParamPoly, ParamPoly)> {
    let cg = a.content().gcd(&b.content());
    let a = a.div_scalar_exact(&cg);
    let b = b.div_scalar_exact(&cg);
    let var = (0..3).find(|&v| a.degree(v) > 0 && b.degree(v) > 0);
    let Some(var) = var else {
        return Some((ParamPoly::constant(cg), a, b));
    };
    let min_norm = a.max_norm().min(b.max_norm());
    let mut xi: BigInt = min_norm * 2 + 29;
    for _ in 0..HEU_ATTEMPTS {
        let aa = a.eval_var(var, &xi);
        let bb = b.eval_var(var, &xi);
        if !aa.is_zero() && !bb.is_zero() {
            if let Some((gamma, cfa, cfb)) = heuristic_gcd(&aa, &bb) {
                let g = interpolate(gamma, var, &xi);
                if !g.is_zero() {
                    let g = normalize_sign(g.div_scalar_exact(&g.content()));
                    if let (Some(qa), Some(qb)) = (a.div_exact(&g), b.div_exact(&g)) {
                        return Some((g.scale(&cg), qa, qb));
                    }
                }
                let fa = interpolate(cfa, var, &xi);
                if !fa.is_zero() {
                    if let Some(g) = a.div_exact(&fa) {
                        if let Some(qb) = b.div_exact(&g) {
                            return Some((g.scale(&cg), fa, qb));
                        }
                    }
                }
                let fb = interpolate(cfb, var, &xi);
                if !fb.is_zero() {
                    if let Some(g) = b.div_exact(&fb) {
                        if let Some(qa) = a.div_exact(&g) {
                            return Some((g.scale(&cg), qa, fb));
                        }
                    }
                }
            }
        }
        xi = (&xi * BigInt::from(73794)) / BigInt::from(27011) + BigInt::one();
    }
    None
}

/// Content of `p` viewed as a polynomial in `var`.
fn content_in(p: &ParamPoly, var: usize) -> ParamPoly {
    let mut g = ParamPoly::zero();
    for c in p.coefficients_in(var) {
        if c.is_zero() {
            continue;
        }
        g = if g.is_zero() { normalize_sign(c) } else { poly_gcd(&g, &c) };
        if g.is_one() {
            break;
        }
    }
    g
}

fn trim(mut v: Vec<ParamPoly>) -> Vec<ParamPoly> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Sparse pseudo-remainder of `f` by `g` in `var`.
fn pseudo_rem(f: &ParamPoly, g: &ParamPoly, var: usize) -> ParamPoly {
    let gc = trim(g.coefficients_in(var));
    let dg = gc.len() - 1;
    let lc = gc[dg].clone();
    let mut r = trim(f.coefficients_in(var));
    while !r.is_empty() && r.len() > dg {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - dg;
        let mut next: Vec<ParamPoly> = r.iter().map(|c| c.mul(&lc)).collect();
        for (k, gk) in gc.iter().enumerate() {
            next[k + shift] = next[k + shift].sub(&gk.mul(&lr));
        }
        r = trim(next);
    }
    ParamPoly::from_coefficients_in(var, &r)
}

/// Deterministic recursive primitive PRS gcd.
pub(crate) fn prs_gcd(a: &ParamPoly, b: &ParamPoly) -> ParamPoly {
    if a.is_zero() {
        return normalize_sign(b.clone());
    }
    if b.is_zero() {
        return normalize_sign(a.clone());
    }
    let var = (0..3).find(|&v| a.degree(v) > 0 || b.degree(v) > 0);
    let Some(var) = var else {
        return ParamPoly::constant(a.content().gcd(&b.content()));
    };
    if a.degree(var) == 0 {
        return poly_gcd(a, &content_in(b, var));
    }
    if b.degree(var) == 0 {
        return poly_gcd(&content_in(a, var), b);
    }
    let ca = content_in(a, var);
    let cb = content_in(b, var);
    let c = poly_gcd(&ca, &cb);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let (mut f, mut g) = if pa.degree(var) >= pb.degree(var) { (pa, pb) } else { (pb, pa) };
    while !g.is_zero() {
        let r = pseudo_rem(&f, &g, var);
        f = g;
        g = if r.is_zero() {
            r
        } else if r.degree(var) == 0 {
            // constant in var: the primitive gcd is trivial in var
            f = ParamPoly::one();
            ParamPoly::zero()
        } else {
            let cr = content_in(&r, var);
            r.div_exact(&cr).expect("content divides")
        };
    }
    let cf = content_in(&f, var);
    let pf = f.div_exact(&cf).expect("content divides");
    normalize_sign(pf.mul(&c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(terms: &[([i32; 3], i64)]) -> ParamPoly {
        ParamPoly::from_terms(terms.iter().map(|(e, c)| (*e, BigInt::from(*c))))
    }

    fn one_minus(e: [i32; 3]) -> ParamPoly {
        p(&[([0, 0, 0], 1), (e, -1)])
    }

    #[test]
    fn gcd_of_products_of_binomials() {
        let f1 = one_minus([1, 0, 0]);
        let f2 = one_minus([1, 1, 0]);
        let f3 = p(&[([0, 1, 1], 1), ([2, 0, 0], -1)]);
        let a = f1.mul(&f2).mul(&f2);
        let b = f2.mul(&f3).mul(&f1);
        let g = poly_gcd(&a, &b);
        assert_eq!(g, normalize_sign(f1.mul(&f2)));
        assert_eq!(prs_gcd(&a, &b), g);
    }

    #[test]
    fn gcd_handles_monomial_factors_and_content() {
        let a = p(&[([1, 0, 0], 6), ([1, 1, 0], 6)]); // 6q(1+t)
        let b = p(&[([2, 0, 0], 4), ([2, 1, 0], 4)]); // 4q^2(1+t)
        assert_eq!(poly_gcd(&a, &b), p(&[([1, 0, 0], 2), ([1, 1, 0], 2)]));
    }

    #[test]
    fn coprime_gives_one() {
        let a = one_minus([1, 0, 0]);
        let b = one_minus([0, 1, 0]);
        assert!(poly_gcd(&a, &b).is_one());
        assert!(prs_gcd(&a, &b).is_one());
    }

    fn small_poly() -> impl Strategy<Value = ParamPoly> {
        prop::collection::vec(((0i32..3, 0i32..3, 0i32..2), -3i64..4), 1..4)
            .prop_map(|ts| ParamPoly::from_terms(ts.into_iter().map(|((x, y, z), c)| ([x, y, z], BigInt::from(c)))))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn heuristic_and_prs_agree(f in small_poly(), g in small_poly(), h in small_poly()) {
            prop_assume!(!h.is_zero() && !f.is_zero() && !g.is_zero());
            let a = f.mul(&h);
            let b = g.mul(&h);
            let g1 = poly_gcd(&a, &b);
            let g2 = normalize_sign(prs_gcd(&a, &b));
            prop_assert_eq!(&g1, &g2);
            prop_assert!(a.div_exact(&g1).is_some());
            prop_assert!(b.div_exact(&g1).is_some());
            prop_assert!(g1.div_exact(&normalize_sign(h.clone())).is_some());
        }
    }
}

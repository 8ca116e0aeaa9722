//! Single-instance checks. Each returns the failing sub-identities as
//! witnesses; an empty vector means the instance passed.

use crate::combin::{
    bar_coord, bar_monomials, bar_point, compositions_up_to, inv_stat, longest_length, n_stat, nprime_stat, tau_alpha,
    tau_monomials, tilde_monomials, tilde_point, twisted_contained, IntVector, Permutation,
};
use crate::exactalg::{pochhammer, FieldElem, Point, SignedMonomial, XPolynomial};
use crate::families::{
    ainvtau_point, atau_point, e_tau_product, g_eval_product, gprime_interpolation, minimal_shift, tau_point, Families,
    FamilyError, FamilyKind, FamilyTag, XRational,
};
use crate::heckeops::hat::{hat_apply, FamilyTable, HatOp};
use crate::heckeops::{
    apply_cplus, apply_delta, apply_h, apply_hw0, apply_j, apply_psi, apply_w0, apply_xi, mul_xj, Variant,
};

use super::report::{run_case, Witness};

type R = Result<(), FamilyError>;

fn a() -> FieldElem {
    FieldElem::a()
}

fn mono(i: i32, j: i32, k: i32) -> SignedMonomial {
    SignedMonomial::new(false, [i, j, k])
}

fn at(ms: Vec<SignedMonomial>, c: SignedMonomial) -> Point {
    Point::from_monomials(ms.iter().map(|m| m.mul(&c)).collect())
}

/// `a·ṽ`.
fn a_tilde(v: &IntVector) -> Point {
    at(tilde_monomials(v), mono(0, 0, 1))
}

fn kcirc(fam: &Families, v: &IntVector) -> Result<std::sync::Arc<XRational>, FamilyError> {
    fam.member(FamilyTag::circ(FamilyKind::K), v)
}

fn polynomial(r: &XRational) -> XPolynomial {
    debug_assert!(r.is_polynomial());
    r.numerator()
}

/// `K_u(aṽ) = K_v(aũ)`; for `n = 1` and `u, v ≥ 0` also the closed form.
pub fn duality(fam: &Families, u: &IntVector, v: &IntVector) -> Vec<Witness> {
    run_case(&[("u", u), ("v", v)], |c| -> R {
        let lhs = fam.k(u)?.eval(&a_tilde(v))?;
        let rhs = fam.k(v)?.eval(&a_tilde(u))?;
        c.check("K_u(a v~) = K_v(a u~)", &lhs, &rhs);
        if u.n() == 1 && u.0[0] >= 0 && v.0[0] >= 0 {
            let (m, r) = (u.0[0], v.0[0]);
            let ainv = FieldElem::qta(0, 0, -1);
            let p = |k: i32| pochhammer(&ainv, k as u32, &FieldElem::q());
            let closed = &(&FieldElem::qta(-m * r, 0, 0) * &p(m + r)) / &(&p(m) * &p(r));
            c.check("K_m(a q^-r) closed form", &lhs, &closed);
        }
        Ok(())
    })
}

/// `(H_{w_0}K_u)(aṽ) = (H_{w_0}K_v)(aũ)`.
pub fn twisted_duality(fam: &Families, u: &IntVector, v: &IntVector) -> Vec<Witness> {
    run_case(&[("u", u), ("v", v)], |c| -> R {
        let side = |x: &IntVector, y: &IntVector| -> Result<FieldElem, FamilyError> {
            let h = fam.k(x)?.map_symmetric(|p| apply_hw0(p, Variant::PLAIN));
            Ok(h.eval(&a_tilde(y))?)
        };
        c.check("(H_w0 K_u)(a v~) = (H_w0 K_v)(a u~)", &side(u, v)?, &side(v, u)?);
        Ok(())
    })
}

/// `K′_v(a^{-1}ū) = K′_u(a^{-1}v̄)`.
pub fn primed_duality(fam: &Families, u: &IntVector, v: &IntVector) -> Vec<Witness> {
    run_case(&[("u", u), ("v", v)], |c| -> R {
        let lhs = fam.kprime(v)?.eval(&at(bar_monomials(u), mono(0, 0, -1)))?;
        let rhs = fam.kprime(u)?.eval(&at(bar_monomials(v), mono(0, 0, -1)))?;
        c.check("K'_v(a^-1 u-) = K'_u(a^-1 v-)", &lhs, &rhs);
        Ok(())
    })
}

/// The operator construction of `G′_α` against its characterization (top
/// part `E_α`, vanishing at `β̃` for `|β| < |α|`), and `E_α = t^{I(α)}ΨE°_α`.
pub fn primed_construction(fam: &Families, alpha: &IntVector) -> Vec<Witness> {
    run_case(&[("alpha", alpha)], |c| -> R {
        let gp = fam.gprime(alpha)?;
        let e = fam.e(alpha)?;
        let oracle = gprime_interpolation(&e, alpha.weight() as i32)?;
        c.check("G'_alpha construction = characterization", &gp, &oracle);
        let ec = fam.poly(FamilyTag::circ(FamilyKind::E), alpha)?;
        let rhs = apply_psi(&ec).scale(&FieldElem::qta(0, inv_stat(alpha) as i32, 0));
        c.check("E_alpha = t^I(alpha) Psi E°_alpha", &e, &rhs);
        Ok(())
    })
}

/// `w_0 E_{−w_0u}(x^{-1}) = E_u` for `u ∈ Z^n`.
pub fn inversion(fam: &Families, u: &IntVector) -> Vec<Witness> {
    run_case(&[("u", u)], |c| -> R {
        let lhs = apply_w0(&apply_j(&fam.e(&u.reversed().neg())?));
        c.check("w0 E_{-w0 u}(x^-1) = E_u", &lhs, &fam.e(u)?);
        Ok(())
    })
}

/// `O_α(β̄^{-1}) = K_β(aα̃)`, and `deg O_α ≤ |α|`.
pub fn o_duality(fam: &Families, alpha: &IntVector, beta: &IntVector) -> Vec<Witness> {
    run_case(&[("alpha", alpha), ("beta", beta)], |c| -> R {
        let o = fam.o(alpha)?;
        let lhs = o.eval(&bar_point(beta).inverse())?;
        let rhs = fam.k(beta)?.eval(&a_tilde(alpha))?;
        c.check("O_alpha(beta-^-1) = K_beta(a alpha~)", &lhs, &rhs);
        let deg = o.total_degree().unwrap_or(0);
        c.check_true("deg O_alpha <= |alpha|", deg <= alpha.weight(), || format!("degree {deg}"));
        Ok(())
    })
}

/// Compositions `β ≼ α` of weight at most `|α|`.
fn below(alpha: &IntVector) -> Vec<IntVector> {
    compositions_up_to(alpha.n(), alpha.weight() as i32).into_iter().filter(|b| twisted_contained(b, alpha)).collect()
}

/// The binomial formula and its three rewritten forms.
pub fn binomial(fam: &Families, alpha: &IntVector) -> Vec<Witness> {
    run_case(&[("alpha", alpha)], |c| -> R {
        let n = alpha.n();
        let lhs = polynomial(&fam.k(alpha)?.scale_vars(&mono(0, 0, 1)));
        let zero = XPolynomial::zero(n);
        let (mut f1, mut f2, mut f3, mut f4) = (zero.clone(), zero.clone(), zero.clone(), zero.clone());
        let abar_inv = bar_point(alpha).inverse();
        for beta in below(alpha) {
            let b = fam.binom(alpha, &beta, true)?;
            let tau = tau_alpha(&beta).to_field();
            let w = beta.weight() as i32;
            let g_atau = fam.g_at_atau(&beta)?;
            f1 = f1.add(&fam.gprime(&beta)?.scale(&(&(&b * &FieldElem::qta(0, 0, w)) / &g_atau)));
            let kp = polynomial(&*fam.kprime(&beta)?);
            f2 = f2.add(&kp.scale(&(&b / &tau)));
            let kc = kcirc(fam, &beta)?;
            let ratio = &kc.eval(&abar_inv)? / &(&tau * &kc.eval(&bar_point(&beta).inverse())?);
            f3 = f3.add(&kp.scale(&ratio));
            let moved = polynomial(&kc.scale_vars(&mono(0, n as i32 - 1, 0)));
            f4 = f4.add(&apply_psi(&moved).scale(&ratio));
        }
        f4 = f4.scale(&FieldElem::qta(0, longest_length(n) as i32, 0));
        c.check("K_alpha(ax) = sum a^|b| [a b]° G'_b / G_b(a tau)", &lhs, &f1);
        c.check("K_alpha(ax) = sum tau_b^-1 [a b]° K'_b", &lhs, &f2);
        c.check("K_alpha(ax) = sum K°_b(a-^-1) K'_b / (tau_b K°_b(b-^-1))", &lhs, &f3);
        c.check("K_alpha(ax) = t^l(w0) sum K°_b(a-^-1) Psi K°_b(t^(n-1)x) / (tau_b K°_b(b-^-1))", &lhs, &f4);
        for beta in compositions_up_to(n, alpha.weight() as i32) {
            if !twisted_contained(&beta, alpha) {
                let b = fam.binom(alpha, &beta, true)?;
                if !b.is_zero() {
                    c.fail(&format!("support: [alpha {}]° = 0", beta), b.render(), "0".to_string());
                }
            }
        }
        Ok(())
    })
}

/// The dual binomial formula and its rewritten form.
pub fn dual_binomial(fam: &Families, alpha: &IntVector) -> Vec<Witness> {
    run_case(&[("alpha", alpha)], |c| -> R {
        let n = alpha.n();
        let lhs = polynomial(&*fam.kprime(alpha)?);
        let mut rhs = XPolynomial::zero(n);
        let mut rhs2 = XPolynomial::zero(n);
        let abar = bar_point(alpha);
        for beta in below(alpha) {
            let tau = tau_alpha(&beta).to_field();
            let k = fam.k(&beta)?;
            let kax = polynomial(&k.scale_vars(&mono(0, 0, 1)));
            rhs = rhs.add(&kax.scale(&(&tau * &fam.binom(alpha, &beta, false)?)));
            let ratio = &k.eval(&abar)? / &k.eval(&bar_point(&beta))?;
            rhs2 = rhs2.add(&kax.scale(&(&tau * &ratio)));
        }
        c.check("K'_alpha = sum tau_b [a b] K_b(ax)", &lhs, &rhs);
        let kc = kcirc(fam, alpha)?;
        let lhs2 = apply_psi(&polynomial(&kc.scale_vars(&mono(0, n as i32 - 1, 0))));
        let rhs2 = rhs2.scale(&FieldElem::qta(0, -(longest_length(n) as i32), 0));
        c.check("Psi K°_alpha(t^(n-1)x) = t^-l(w0) sum tau_b K_b(a-) K_b(ax) / K_b(b-)", &lhs2, &rhs2);
        Ok(())
    })
}

/// `Σ_β (τ_β/τ_α)[α β]_{q,t}[β γ]_{q^{-1},t^{-1}} = δ_{αγ}`.
pub fn orthogonality(fam: &Families, alpha: &IntVector, gamma: &IntVector) -> Vec<Witness> {
    run_case(&[("alpha", alpha), ("gamma", gamma)], |c| -> R {
        let tau_a = tau_alpha(alpha).to_field();
        let mut sum = FieldElem::zero();
        for beta in below(alpha).into_iter().filter(|b| twisted_contained(gamma, b)) {
            let term = &(&tau_alpha(&beta).to_field() / &tau_a)
                * &(&fam.binom(alpha, &beta, false)? * &fam.binom(&beta, gamma, true)?);
            sum = &sum + &term;
        }
        let delta = if alpha == gamma { FieldElem::one() } else { FieldElem::zero() };
        c.check("sum (tau_b/tau_a)[a b][b c]° = delta", &sum, &delta);
        Ok(())
    })
}

/// `K⁺_λ(at^{1−n}μ̄^{-1}) = K⁺_μ(at^{1−n}λ̄^{-1})`, and the same at `aμ̃`, `aλ̃`.
pub fn okounkov(fam: &Families, lambda: &IntVector, mu: &IntVector) -> Vec<Witness> {
    run_case(&[("lambda", lambda), ("mu", mu)], |c| -> R {
        let scale = mono(0, 1 - lambda.n() as i32, 1);
        let pt = |v: &IntVector| at(bar_monomials(v).iter().map(|m| m.inv()).collect(), scale);
        let (kl, km) = (fam.kplus(lambda)?, fam.kplus(mu)?);
        c.check(
            "K+_lambda(a t^(1-n) mu-^-1) = K+_mu(a t^(1-n) lambda-^-1)",
            &kl.eval(&pt(mu))?,
            &km.eval(&pt(lambda))?,
        );
        c.check("K+_lambda(a mu~) = K+_mu(a lambda~)", &kl.eval(&a_tilde(mu))?, &km.eval(&a_tilde(lambda))?);
        Ok(())
    })
}

/// `C_+K_α = (Σ_w t^{ℓ(w)})K⁺_λ` for every rearrangement `α` of `λ`.
pub fn symmetrizer(fam: &Families, lambda: &IntVector) -> Vec<Witness> {
    run_case(&[("lambda", lambda)], |c| -> R {
        let n = lambda.n();
        let poincare = Permutation::all(n)
            .iter()
            .fold(FieldElem::zero(), |acc, w| &acc + &FieldElem::qta(0, w.length() as i32, 0));
        let kp = fam.kplus(lambda)?.scale(&poincare);
        let mut seen = std::collections::BTreeSet::new();
        for w in Permutation::all(n) {
            let alpha = w.act(lambda);
            if seen.insert(alpha.clone()) {
                let lhs = apply_cplus(&polynomial(&*fam.k(&alpha)?));
                c.check(&format!("C+ K_({alpha})"), &lhs, &kp);
            }
        }
        Ok(())
    })
}

fn table<I: IntoIterator<Item = IntVector>>(
    fam: &Families,
    idx: I,
    get: impl Fn(&Families, &IntVector) -> Result<XRational, FamilyError>,
) -> Result<FamilyTable<XRational>, FamilyError> {
    idx.into_iter().map(|v| get(fam, &v).map(|k| (v, k))).collect()
}

/// Operator/hat-operator transfer for `K` and `K̄`, and the negative-degree
/// normalizations.
pub fn transfer(fam: &Families, v: &IntVector) -> Vec<Witness> {
    run_case(&[("v", v)], |c| -> R {
        let n = v.n();
        let k = fam.k(v)?;
        let raised = v.raise();
        let kget = |f: &Families, x: &IntVector| f.k(x).map(|r| (*r).clone());
        let mut support = vec![v.clone(), raised.clone()];
        support.extend((1..n).map(|i| v.swapped(i)));
        let kt = table(fam, support.clone(), kget)?;
        for i in 1..n {
            let hat = hat_apply(HatOp::H(i), &kt, v).expect("support");
            c.check(&format!("H_{i} K = hat H_{i} K"), &k.apply_h(i, Variant::PLAIN), &hat);
        }
        for j in 1..=n {
            let rhs = k.scale(&bar_coord(v, j).inv()?);
            c.check(&format!("Xi_{j} K_v = v-_{j}^-1 K_v"), &k.apply_big_xi(j), &rhs);
        }
        let phi = k.apply_phi();
        let coef = &FieldElem::qta(0, 1 - n as i32, 0) * &(&(&a() / &bar_coord(v, 1)) - &FieldElem::one());
        let shifted = hat_apply(HatOp::DeltaInv, &kt, v).expect("support");
        c.check("Phi K_v = t^(1-n)(a v-_1^-1 - 1) K_{v nat}", &phi, &shifted.scale(&coef));
        if v.is_composition() {
            let an = tilde_monomials(v)[n - 1].to_field();
            let coef = &(&a() * &an) - &FieldElem::qta(0, 1 - n as i32, 0);
            c.check("Phi K_alpha = (a alpha~_n - t^(1-n)) K_{alpha nat}", &phi, &shifted.scale(&coef));
        }

        let m = minimal_shift(v);
        let at_atau = k.eval(&atau_point(n))?;
        c.check("K_v(a tau) = 1", &at_atau, &FieldElem::one());
        c.check("K_v independent of the shift m", &*k, &fam.k_shifted(v, m + 1)?);
        let g = fam.g_shifted(v, m)?;
        let g_atau = g.eval(&atau_point(n))?;
        c.check("K_v = G_v / G_v(a tau)", &*k, &g.scale(&g_atau.inv()?));

        let kb = fam.kbar(v)?;
        let bget = |f: &Families, x: &IntVector| f.kbar(x).map(XRational::from_poly);
        let bt = table(fam, support, bget)?;
        for i in 1..n {
            let hat = hat_apply(HatOp::H(i), &bt, v).expect("support");
            let lhs = XRational::from_poly(apply_h(i, &kb, Variant::PLAIN));
            c.check(&format!("H_{i} Kbar = hat H_{i} Kbar"), &lhs, &hat);
        }
        for j in 1..=n {
            let lhs = apply_xi(j, &kb, false, false);
            c.check(&format!("xi_{j} Kbar_v = v-_{j} Kbar_v"), &lhs, &kb.scale(&bar_coord(v, j)));
            let lhs = apply_xi(j, &kb, true, false);
            c.check(&format!("xi_{j}^-1 Kbar_v = v-_{j}^-1 Kbar_v"), &lhs, &kb.scale(&bar_coord(v, j).inv()?));
        }
        let lhs = mul_xj(n, 1, &apply_delta(&kb, false, false));
        let coef = &FieldElem::qta(0, 1 - n as i32, 0) / &bar_coord(v, 1);
        let rhs = fam.kbar(&raised)?.scale(&coef);
        c.check("x_n Delta Kbar_v = t^(1-n) v-_1^-1 Kbar_{v nat}", &lhs, &rhs);
        c.check("Kbar_v independent of the shift m", &kb, &fam.kbar_shifted(v, m + 1)?);
        match k.a_limit() {
            Some((0, lim)) => c.check("Kbar_v = lim K_v(ax)", &lim, &kb),
            other => c.fail("Kbar_v = lim K_v(ax)", format!("{other:?}"), kb.render()),
        }
        Ok(())
    })
}

/// Principal evaluations: the product formulas, the relations between
/// `G`, `G°` and `G′` at `aτ`-type points, and the `n(α)` orbit relation.
pub fn eval_relations(fam: &Families, alpha: &IntVector) -> Vec<Witness> {
    run_case(&[("alpha", alpha)], |c| -> R {
        let n = alpha.n();
        let w = alpha.weight() as i32;
        let l = longest_length(n);
        let i = inv_stat(alpha);
        let g = fam.g(alpha)?;
        let gc = fam.poly(FamilyTag::circ(FamilyKind::G), alpha)?;
        let gp = fam.gprime(alpha)?;
        let g_atau = g.eval(&atau_point(n))?;

        let tau_inv: Vec<SignedMonomial> = tau_monomials(n).iter().map(|m| m.inv()).collect();
        let lhs = gp.eval(&atau_point(n))?;
        let rhs = &FieldElem::qta(0, (1 - n as i32) * w + i as i32 - l as i32, 0)
            * &gc.eval(&at(tau_inv.clone(), mono(0, 0, 1)))?;
        c.check("G'_alpha(a tau) = t^((1-n)|a|+I-l(w0)) G°_alpha(a tau^-1)", &lhs, &rhs);

        let sign = if w % 2 == 0 { FieldElem::one() } else { FieldElem::from_int(-1) };
        let pre = &sign * &FieldElem::qta(nprime_stat(alpha) as i32, (1 - n as i32) * w - n_stat(alpha) as i32, w);
        let rhs = &pre * &gc.eval(&at(tau_inv, mono(0, 0, -1)))?;
        c.check("G_alpha(a tau) = (-a)^|a| t^((1-n)|a|-n(a)) q^n'(a) G°_alpha(a^-1 tau^-1)", &g_atau, &rhs);

        let lhs = gp.eval(&ainvtau_point(n))?;
        let rhs = &(&tau_alpha(alpha).inv().to_field() * &FieldElem::qta(0, 0, -w)) * &g_atau;
        c.check("G'_alpha(a^-1 tau) = tau_alpha^-1 a^-|a| G_alpha(a tau)", &lhs, &rhs);

        let orbit = n_stat(&alpha.sorted_desc()) + l - i;
        c.check("n(alpha) = n(alpha+) + l(w0) - I(alpha)", &n_stat(alpha), &orbit);

        c.check("G_alpha(a tau) = product over cells", &g_atau, &g_eval_product(alpha));
        let e_tau = fam.e(alpha)?.eval(&tau_point(n))?;
        c.check("E_alpha(tau) = product over cells", &e_tau, &e_tau_product(alpha));
        Ok(())
    })
}

/// `A_m(x; v) = ∏_i (q^{1−m} a v̄_i^{-1}; q)_m / (q t^{n−1} x_i; q)_m`.
pub fn a_factor(x: &Point, v: &IntVector, m: i32) -> FieldElem {
    let n = v.n();
    let q = FieldElem::q();
    let mut out = FieldElem::one();
    for i in 1..=n {
        let y = &FieldElem::qta(1 - m, 0, 1) / &bar_coord(v, i);
        let z = &FieldElem::qta(1, n as i32 - 1, 0) * &x.coords()[i - 1];
        out = &out * &(&pochhammer(&y, m as u32, &q) / &pochhammer(&z, m as u32, &q));
    }
    out
}

/// The exchange, raising and shift relations driving the duality proof.
pub fn duality_steps(fam: &Families, u: &IntVector, v: &IntVector) -> Vec<Witness> {
    run_case(&[("u", u), ("v", v)], |c| -> R {
        let n = u.n();
        let t = FieldElem::t();
        let one = FieldElem::one();
        let ku = fam.k(u)?;
        let ku_v = ku.eval(&a_tilde(v))?;
        let vt = tilde_point(v);
        for i in 1..n {
            let (x, y) = (&vt.coords()[i - 1], &vt.coords()[i]);
            let (bx, by) = (bar_coord(u, i), bar_coord(u, i + 1));
            let lhs = &(&(&(&t - &one) * x) / &(x - y)) * &ku_v;
            let lhs = &lhs + &(&(&(x - &(&t * y)) / &(x - y)) * &ku.eval(&a_tilde(&v.swapped(n - i)))?);
            let rhs = &(&(&(&t - &one) * &bx) / &(&bx - &by)) * &ku_v;
            let rhs = &rhs + &(&(&(&bx - &(&t * &by)) / &(&bx - &by)) * &fam.k(&u.swapped(i))?.eval(&a_tilde(v))?);
            c.check(&format!("exchange relation, i = {i}"), &lhs, &rhs);
        }
        let lhs = &(&(&a() / &bar_coord(v, 1)) - &one) * &ku.eval(&a_tilde(&v.raise()))?;
        let rhs = &(&(&a() / &bar_coord(u, 1)) - &one) * &fam.k(&u.raise())?.eval(&a_tilde(v))?;
        c.check("raising relation", &lhs, &rhs);
        for m in 1..=2 {
            let x1 = a_tilde(v);
            let x2 = at(tilde_monomials(u), mono(-m, 0, 1));
            let prod = &a_factor(&x1, u, m) * &a_factor(&x2, &v.shift(-m), m);
            c.check(&format!("A_{m}(a v~; u) A_{m}(q^-{m} a u~; v - {m}) = 1"), &prod, &one);
        }
        Ok(())
    })
}

use macdonald_core::combin::{
    bar_coord, bar_point, compositions_up_to, enumerate_partitions, tilde_point, twisted_contained, vectors_in_box,
    IntVector,
};
use macdonald_core::exactalg::{pochhammer, FieldElem, Point, SignedMonomial, XPolynomial};
use macdonald_core::families::{
    ainvtau_point, atau_point, e_tau_product, g_eval_product, g_interpolation, gprime_interpolation, minimal_shift,
    tau_point, Families, FamilyKind, FamilyTag, MemberRecord, XRational,
};
use macdonald_core::heckeops::{apply_cplus, apply_phi, apply_s, apply_xi};

fn iv(v: &[i32]) -> IntVector {
    IntVector::from(v)
}

fn fe(s: &str) -> FieldElem {
    FieldElem::parse(s).unwrap()
}

fn xp(s: &str, n: usize) -> XPolynomial {
    XPolynomial::parse(s, n).unwrap()
}

fn one_point(c: FieldElem) -> Point {
    Point::from_coords(vec![c])
}

#[test]
fn small_interpolation_polynomials() {
    let f = Families::new();
    assert_eq!(f.g(&iv(&[0, 0])).unwrap(), XPolynomial::one(2));
    assert_eq!(g_interpolation(&iv(&[1])).unwrap(), xp("x1 - 1", 1));
    let g01 = g_interpolation(&iv(&[0, 1])).unwrap();
    assert_eq!(g01, xp("x2 - 1/t", 2));
    assert!(g01.eval(&bar_point(&iv(&[0, 0]))).unwrap().is_zero());
    assert!(g01.eval(&bar_point(&iv(&[1, 0]))).unwrap().is_zero());
    assert_eq!(f.g(&iv(&[0, 0, 1])).unwrap(), xp("x3 - 1/t^2", 3));
    assert_eq!(f.e(&iv(&[0, 0, 1])).unwrap(), xp("x3", 3));
}

#[test]
fn recursion_matches_linear_solve() {
    let f = Families::new();
    for (n, d) in [(1, 4), (2, 4), (3, 3)] {
        for alpha in compositions_up_to(n, d) {
            assert_eq!(f.g(&alpha).unwrap(), g_interpolation(&alpha).unwrap(), "alpha = {alpha}");
        }
    }
}

#[test]
fn vanishing_and_normalization() {
    let f = Families::new();
    for (n, d) in [(2, 4), (3, 3)] {
        let all = compositions_up_to(n, d);
        for alpha in &all {
            let g = f.g(alpha).unwrap();
            assert!(g.coeff(alpha.entries()).is_one());
            for beta in all.iter().filter(|b| b.weight() <= alpha.weight()) {
                let v = g.eval(&bar_point(beta)).unwrap();
                assert_eq!(v.is_zero(), beta != alpha, "alpha = {alpha}, beta = {beta}");
            }
        }
    }
}

#[test]
fn evaluation_products() {
    let f = Families::new();
    for alpha in compositions_up_to(2, 4).into_iter().chain(compositions_up_to(3, 3)) {
        let direct = f.g_at_atau(&alpha).unwrap();
        assert_eq!(g_eval_product(&alpha), direct, "alpha = {alpha}");
        let e_tau = f.e(&alpha).unwrap().eval(&tau_point(alpha.n())).unwrap();
        assert_eq!(e_tau_product(&alpha), e_tau);
        assert_eq!(direct.a_degree(), Some(alpha.weight() as i32));
        assert_eq!(direct.a_leading(), e_tau);
    }
}

/// With the operators as defined, `ξ_i E_α = ᾱ_i E_α`.
#[test]
fn cherednik_eigenvalues() {
    let f = Families::new();
    for alpha in compositions_up_to(2, 3).into_iter().chain(compositions_up_to(3, 2)) {
        let e = f.e(&alpha).unwrap();
        let ec = f.poly(FamilyTag::circ(FamilyKind::E), &alpha).unwrap();
        for i in 1..=alpha.n() {
            let ev = bar_coord(&alpha, i);
            assert_eq!(apply_xi(i, &e, false, false), e.scale(&ev), "alpha = {alpha}, i = {i}");
            assert_eq!(apply_xi(i, &e, true, false), e.scale(&ev.inv().unwrap()));
            assert_eq!(apply_xi(i, &ec, false, true), ec.scale(&ev.iota()));
        }
    }
    // n = 1: ξ_1 = Δ^{-1} acts on x^m by q^m
    let e = f.e(&iv(&[3])).unwrap();
    assert_eq!(e, xp("x1^3", 1));
    assert_eq!(apply_xi(1, &e, false, false), xp("q^3 * x1^3", 1));
    let e10 = f.e(&iv(&[1, 0])).unwrap();
    assert_eq!(apply_xi(1, &e10, false, false), e10.scale(&FieldElem::q()));
}

#[test]
fn shift_relation() {
    let f = Families::new();
    for alpha in compositions_up_to(2, 2) {
        let n = alpha.n();
        let up = alpha.shift(1);
        // G_{α+1}(qx) = q^{|α|} ∏(q x_i − t^{1−n}) G_α(x)
        let lhs = f.g(&up).unwrap().scale_vars(&SignedMonomial::new(false, [1, 0, 0]));
        let mut rhs = f.g(&alpha).unwrap().scale(&FieldElem::qta(alpha.weight() as i32, 0, 0));
        for i in 1..=n {
            let lin = XPolynomial::var(n, i)
                .scale(&FieldElem::q())
                .sub(&XPolynomial::constant(n, FieldElem::qta(0, 1 - n as i32, 0)));
            rhs = rhs.mul(&lin);
        }
        assert_eq!(lhs, rhs, "alpha = {alpha}");
        // K_α = ∏ (1 − a ᾱ_i^{-1})/(1 − q t^{n−1} x_i) K_{α+1}(qx)
        assert_eq!(*f.k(&alpha).unwrap(), f.k_shifted(&alpha, 1).unwrap());
    }
}

#[test]
fn negative_degrees() {
    let f = Families::new();
    for v in vectors_in_box(2, -1, 2) {
        let m = minimal_shift(&v);
        let k = f.k(&v).unwrap();
        assert!(k.eval(&atau_point(2)).unwrap().is_one(), "v = {v}");
        assert_eq!(*k, f.k_shifted(&v, m + 1).unwrap(), "v = {v}");
        let g = f.g_shifted(&v, m).unwrap();
        assert_eq!(g, f.g_shifted(&v, m + 1).unwrap(), "v = {v}");
        let ga = g.eval(&atau_point(2)).unwrap();
        assert_eq!(*k, g.scale(&ga.inv().unwrap()), "v = {v}");
    }
}

#[test]
fn one_variable_closed_forms() {
    let f = Families::new();
    let q = FieldElem::q();
    let a = FieldElem::a();
    let x = fe("q^2*t + a");
    for m in 0..=5 {
        let kneg = f.k(&iv(&[-m])).unwrap();
        let expect = &pochhammer(&(&q * &a), m as u32, &q) / &pochhammer(&(&q * &x), m as u32, &q);
        assert_eq!(kneg.eval(&one_point(x.clone())).unwrap(), expect);

        let kpos = f.k(&iv(&[m])).unwrap();
        let xinv = x.inv().unwrap();
        let expect = &(&(&x / &a).pow(m as i64) * &pochhammer(&xinv, m as u32, &q))
            / &pochhammer(&a.inv().unwrap(), m as u32, &q);
        assert_eq!(kpos.eval(&one_point(x.clone())).unwrap(), expect);

        let kp = f.kprime(&iv(&[m])).unwrap();
        let expect = &pochhammer(&x, m as u32, &q) / &pochhammer(&a.inv().unwrap(), m as u32, &q);
        assert_eq!(kp.eval(&one_point(x.clone())).unwrap(), expect);

        let kpn = f.kprime(&iv(&[-m])).unwrap();
        let qi = q.inv().unwrap();
        let expect = &pochhammer(&(&qi * &a.inv().unwrap()), m as u32, &qi) / &pochhammer(&(&qi * &x), m as u32, &qi);
        assert_eq!(kpn.eval(&one_point(x.clone())).unwrap(), expect);
    }
}

#[test]
fn laurent_family() {
    let f = Families::new();
    let e10 = f.e(&iv(&[1, 0])).unwrap();
    assert_eq!(f.e(&iv(&[2, 1])).unwrap(), e10.mul(&xp("x1*x2", 2)));
    assert!(f.kbar(&iv(&[-1, 1])).unwrap().eval(&tau_point(2)).unwrap().is_one());
    for v in vectors_in_box(2, -1, 2) {
        let kbar = f.kbar(&v).unwrap();
        let m = minimal_shift(&v);
        assert_eq!(kbar, f.kbar_shifted(&v, m).unwrap(), "v = {v}");
        assert_eq!(kbar, f.kbar_shifted(&v, m + 1).unwrap(), "v = {v}");
        let (d, lim) = f.k(&v).unwrap().a_limit().unwrap();
        assert_eq!((d, lim), (0, kbar), "v = {v}");
    }
}

#[test]
fn primed_family() {
    let f = Families::new();
    for alpha in compositions_up_to(2, 3).into_iter().chain(compositions_up_to(3, 2)) {
        let gp = f.gprime(&alpha).unwrap();
        let e = f.e(&alpha).unwrap();
        assert_eq!(gp.top_homogeneous(), e, "alpha = {alpha}");
        for beta in compositions_up_to(alpha.n(), alpha.weight() as i32 - 1) {
            assert!(gp.eval(&tilde_point(&beta)).unwrap().is_zero());
        }
        assert_eq!(gp, gprime_interpolation(&e, alpha.weight() as i32).unwrap());
        // K′_α = G′_α / G′_α(a^{-1}τ)
        let kp = f.kprime(&alpha).unwrap();
        let norm = gp.eval(&ainvtau_point(alpha.n())).unwrap();
        assert_eq!(*kp, XRational::from_poly(gp.scale(&norm.inv().unwrap())), "alpha = {alpha}");
    }
    assert!(f.gprime(&iv(&[1, 0])).unwrap().eval(&tilde_point(&iv(&[0, 0]))).unwrap().is_zero());
}

#[test]
fn o_polynomials() {
    let f = Families::new();
    let o = f.o(&iv(&[1, 0])).unwrap();
    let lhs = o.eval(&bar_point(&iv(&[0, 1])).inverse()).unwrap();
    let rhs = f.k(&iv(&[0, 1])).unwrap().eval(&tilde_point(&iv(&[1, 0])).scaled(&FieldElem::a())).unwrap();
    assert_eq!(lhs, rhs);
    assert!(o.eval(&tau_point(2).inverse()).unwrap().is_one());
    assert!(f.o(&iv(&[2, 0])).unwrap().total_degree().unwrap() <= 2);
}

#[test]
fn symmetric_family() {
    let f = Families::new();
    assert_eq!(f.r(&iv(&[0, 0])).unwrap(), XPolynomial::one(2));
    for lambda in (0..=3).flat_map(|d| enumerate_partitions(2, d)) {
        let r = f.r(&lambda).unwrap();
        assert_eq!(apply_s(1, &r), r);
        assert!(r.coeff(lambda.entries()).is_one());
    }
    let ck = apply_cplus(&f.k(&iv(&[0, 1])).unwrap().to_polynomial().unwrap());
    let kp = f.kplus(&iv(&[1, 0])).unwrap();
    assert_eq!(ck, kp.scale(&fe("1 + t")));
}

#[test]
fn binomial_coefficients() {
    let f = Families::new();
    for alpha in compositions_up_to(2, 3) {
        assert!(f.binom(&alpha, &iv(&[0, 0]), false).unwrap().is_one());
        assert!(f.binom(&alpha, &alpha, false).unwrap().is_one());
        for beta in compositions_up_to(2, 3) {
            let b = f.binom(&alpha, &beta, false).unwrap();
            assert_eq!(b.is_zero(), !twisted_contained(&beta, &alpha), "[{alpha} {beta}]");
            assert_eq!(f.binom(&alpha, &beta, true).unwrap(), b.iota());
        }
    }
    assert!(f.binom(&iv(&[1, 0]), &iv(&[0, 1]), false).unwrap().is_zero());
    // the support is wider than componentwise containment
    assert!(!iv(&[1, 0]).contained_in(&iv(&[0, 2])));
    assert!(!f.binom(&iv(&[0, 2]), &iv(&[1, 0]), false).unwrap().is_zero());
}

#[test]
fn raising_operator_on_g() {
    let f = Families::new();
    assert_eq!(apply_phi(&XPolynomial::one(3)), f.g(&iv(&[0, 0, 1])).unwrap());
}

#[test]
fn records_round_trip() {
    let f = Families::new();
    for (tag, v) in [
        (FamilyTag::plain(FamilyKind::G), iv(&[1, 0])),
        (FamilyTag::plain(FamilyKind::K), iv(&[-1, 0])),
        (FamilyTag::plain(FamilyKind::Kbar), iv(&[-1, 1])),
        (FamilyTag::circ(FamilyKind::K), iv(&[1, 1])),
    ] {
        let value = f.member(tag, &v).unwrap();
        let rec = MemberRecord::new(tag, &v, &value);
        let json = serde_json::to_string(&rec).unwrap();
        let back: MemberRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rec);
        assert!(back.represents(&value).unwrap());
    }
    assert_eq!("Kcirc".parse::<FamilyTag>().unwrap(), FamilyTag::circ(FamilyKind::K));
    assert!("Ocirc".parse::<FamilyTag>().is_err());
}

#[test]
fn cache_agrees_with_fresh_computation() {
    let f = Families::new();
    let ids = [iv(&[2, 0, 1]), iv(&[-1, 2]), iv(&[3, 1])];
    for v in &ids {
        let _ = f.k(v).unwrap();
    }
    assert!(!f.cache().is_empty());
    for v in &ids {
        let cached = f.k(v).unwrap();
        assert_eq!(*cached, *Families::new().k(v).unwrap());
    }
}

//! Rational functions in `x` with a symmetric product denominator
//! `∏_i ∏_{κ∈K} (1 − κ x_i)`.

use std::collections::BTreeMap;

use crate::exactalg::{ExactError, FieldElem, Point, SignedMonomial, XMono, XPolynomial};

/// `scalar · num(x) / ∏_{i=1}^n ∏_{κ∈K} (1 − κ x_i)`, with `K` a multiset
/// of signed monomials in `q, t, a`.
///
/// The representation is not reduced; equality is decided by bringing both
/// sides to a common denominator.
#[derive(Clone, Debug)]
pub struct XRational {
    scalar: FieldElem,
    num: XPolynomial,
    kappas: Vec<SignedMonomial>,
}

type Multiset = BTreeMap<SignedMonomial, usize>;

fn multiset(ks: &[SignedMonomial]) -> Multiset {
    let mut m = Multiset::new();
    for k in ks {
        *m.entry(*k).or_default() += 1;
    }
    m
}

fn flatten(m: &Multiset) -> Vec<SignedMonomial> {
    m.iter().flat_map(|(k, &c)| std::iter::repeat_n(*k, c)).collect()
}

/// Elements of `big` not covered by `small`, with multiplicity.
fn missing(big: &Multiset, small: &Multiset) -> Vec<SignedMonomial> {
    let mut out = Vec::new();
    for (k, &c) in big {
        let have = small.get(k).copied().unwrap_or(0);
        out.extend(std::iter::repeat_n(*k, c.saturating_sub(have)));
    }
    out
}

fn union(a: &Multiset, b: &Multiset) -> Multiset {
    let mut out = a.clone();
    for (k, &c) in b {
        let e = out.entry(*k).or_default();
        *e = (*e).max(c);
    }
    out
}

/// `1 − κ x_i` (0-based `i`).
fn linear_factor(n: usize, i: usize, kappa: &SignedMonomial) -> XPolynomial {
    let mut e = vec![0; n];
    e[i] = 1;
    XPolynomial::one(n).sub(&XPolynomial::monomial(n, &e, kappa.to_field()))
}

fn times_factors(p: &XPolynomial, var: Option<usize>, kappas: &[SignedMonomial]) -> XPolynomial {
    let n = p.nvars();
    let mut out = p.clone();
    for k in kappas {
        match var {
            Some(i) => out = out.mul(&linear_factor(n, i, k)),
            None => {
                for i in 0..n {
                    out = out.mul(&linear_factor(n, i, k));
                }
            }
        }
    }
    out
}

impl XRational {
    pub fn from_poly(p: XPolynomial) -> Self {
        XRational { scalar: FieldElem::one(), num: p, kappas: Vec::new() }
    }

    pub fn new(scalar: FieldElem, num: XPolynomial, mut kappas: Vec<SignedMonomial>) -> Self {
        kappas.sort();
        XRational { scalar, num, kappas }
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn scalar(&self) -> &FieldElem {
        &self.scalar
    }

    /// The numerator without the scalar prefactor.
    pub fn raw_numerator(&self) -> &XPolynomial {
        &self.num
    }

    /// `scalar · num`.
    pub fn numerator(&self) -> XPolynomial {
        if self.scalar.is_one() {
            self.num.clone()
        } else {
            self.num.scale(&self.scalar)
        }
    }

    pub fn kappas(&self) -> &[SignedMonomial] {
        &self.kappas
    }

    /// The expanded denominator.
    pub fn denominator(&self) -> XPolynomial {
        times_factors(&XPolynomial::one(self.nvars()), None, &self.kappas)
    }

    /// Canonical text: the polynomial, or `(numerator) / (denominator)`.
    pub fn render(&self) -> String {
        if self.is_polynomial() {
            self.numerator().render()
        } else {
            format!("({}) / ({})", self.numerator().render(), self.denominator().render())
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.kappas.is_empty()
    }

    /// The underlying (Laurent) polynomial if the denominator is trivial.
    pub fn to_polynomial(&self) -> Option<XPolynomial> {
        self.is_polynomial().then(|| self.numerator())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero() || self.scalar.is_zero()
    }

    /// Rewrites over the denominator given by the multiset `target ⊇ K`.
    fn numerator_over(&self, target: &Multiset) -> XPolynomial {
        let extra = missing(target, &multiset(&self.kappas));
        times_factors(&self.numerator(), None, &extra)
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        assert_eq!(self.nvars(), other.nvars());
        if self.kappas == other.kappas && self.scalar == other.scalar {
            let num = if negate { self.num.sub(&other.num) } else { self.num.add(&other.num) };
            return XRational { scalar: self.scalar.clone(), num, kappas: self.kappas.clone() };
        }
        let target = union(&multiset(&self.kappas), &multiset(&other.kappas));
        let a = self.numerator_over(&target);
        let b = other.numerator_over(&target);
        let num = if negate { a.sub(&b) } else { a.add(&b) };
        XRational { scalar: FieldElem::one(), num, kappas: flatten(&target) }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        XRational { scalar: self.scalar.mul_ref(c), num: self.num.clone(), kappas: self.kappas.clone() }
    }

    pub fn mul_poly(&self, p: &XPolynomial) -> Self {
        XRational { scalar: self.scalar.clone(), num: self.num.mul(p), kappas: self.kappas.clone() }
    }

    pub fn mul_xmono(&self, m: &XMono) -> Self {
        XRational { scalar: self.scalar.clone(), num: self.num.mul_xmono(m), kappas: self.kappas.clone() }
    }

    /// Applies a linear operator that commutes with multiplication by
    /// symmetric functions (such as `H_i`, `s_i`, `C_+`) to the numerator.
    pub fn map_symmetric<F: Fn(&XPolynomial) -> XPolynomial>(&self, f: F) -> Self {
        XRational { scalar: self.scalar.clone(), num: f(&self.num), kappas: self.kappas.clone() }
    }

    /// Substitutes `x_i ↦ c_i x_{σ(i)}` (0-based `σ`), re-symmetrizing the
    /// denominator.
    pub fn substitute_scaled(&self, sigma: &[usize], scales: &[SignedMonomial]) -> Self {
        let n = self.nvars();
        let num = self.num.substitute_scaled(sigma, scales);
        if self.kappas.is_empty() {
            return XRational { scalar: self.scalar.clone(), num, kappas: Vec::new() };
        }
        let mut per_var: Vec<Multiset> = vec![Multiset::new(); n];
        for i in 0..n {
            let moved: Vec<SignedMonomial> = self.kappas.iter().map(|k| k.mul(&scales[i])).collect();
            per_var[sigma[i]] = multiset(&moved);
        }
        let target = per_var.iter().fold(Multiset::new(), |acc, m| union(&acc, m));
        let mut num = num;
        for (j, m) in per_var.iter().enumerate() {
            num = times_factors(&num, Some(j), &missing(&target, m));
        }
        XRational { scalar: self.scalar.clone(), num, kappas: flatten(&target) }
    }

    /// `x ↦ c x`.
    pub fn scale_vars(&self, c: &SignedMonomial) -> Self {
        let n = self.nvars();
        let id: Vec<usize> = (0..n).collect();
        self.substitute_scaled(&id, &vec![*c; n])
    }

    /// `ι` applied to all coefficients and to the denominator.
    pub fn iota(&self) -> Self {
        XRational {
            scalar: self.scalar.iota(),
            num: self.num.map_coeffs(|c| c.iota()),
            kappas: {
                let mut k: Vec<SignedMonomial> = self.kappas.iter().map(|k| k.inv()).collect();
                k.sort();
                k
            },
        }
    }

    pub fn eval(&self, pt: &Point) -> Result<FieldElem, ExactError> {
        let mut den = FieldElem::one();
        for k in &self.kappas {
            for c in pt.coords() {
                den = den.mul_ref(&(&FieldElem::one() - &c.mul_monomial(k)));
            }
        }
        let v = self.num.eval(pt)?;
        v.mul_ref(&self.scalar).checked_div(&den)
    }

    /// `lim_{a→∞} a^{−d} f(a x)` where `d` is the largest power of `a` in
    /// `f(ax)`; returns `(d, limit)`. The denominator must not involve `a`.
    pub fn a_limit(&self) -> Option<(i64, XPolynomial)> {
        let n = self.nvars();
        let f = self.numerator();
        let degs: Vec<(i64, &XMono, &FieldElem)> = f
            .terms()
            .map(|(m, c)| (c.a_degree().expect("nonzero coefficient") as i64 + m.total_degree(), m, c))
            .collect();
        let top = degs.iter().map(|d| d.0).max()?;
        let mut lead = XPolynomial::zero(n);
        for (d, m, c) in &degs {
            if *d == top {
                lead.add_term((*m).clone(), c.a_leading());
            }
        }
        // ∏_i ∏_κ (1 − κ a x_i) ~ ∏_κ (−κ)^n · a^{n|K|} (x_1⋯x_n)^{|K|}
        let mut c = SignedMonomial::ONE;
        for k in &self.kappas {
            assert_eq!(k.exps[2], 0, "a-dependent denominator");
            c = c.mul(&SignedMonomial::new(!k.negative, k.exps).pow(n as i32));
        }
        let r = self.kappas.len() as i32;
        let lead = lead.mul_xmono(&XMono::from_slice(&vec![-r; n])).scale(&c.inv().to_field());
        Some((top - (n as i64) * r as i64, lead))
    }
}

impl PartialEq for XRational {
    fn eq(&self, other: &Self) -> bool {
        self.nvars() == other.nvars() && self.sub(other).num.is_zero()
    }
}

impl From<XPolynomial> for XRational {
    fn from(p: XPolynomial) -> Self {
        XRational::from_poly(p)
    }
}

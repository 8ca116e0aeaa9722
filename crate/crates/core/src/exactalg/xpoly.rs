//! Laurent polynomials in `x_1..x_n` with coefficients in `Q(q,t,a)`.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use smallvec::SmallVec;

use super::field::{FieldElem, SignedMonomial};
use super::parampoly::ParamPoly;
use super::point::Point;
use super::ExactError;

pub type ExpVec = SmallVec<[i32; 4]>;

/// An `x`-monomial, ordered graded-lexicographically with `x_1 < … < x_n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct XMono(pub ExpVec);

impl XMono {
    pub fn one(n: usize) -> Self {
        XMono(SmallVec::from_elem(0, n))
    }

    pub fn from_slice(e: &[i32]) -> Self {
        XMono(SmallVec::from_slice(e))
    }

    pub fn exps(&self) -> &[i32] {
        &self.0
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn mul(&self, other: &XMono) -> XMono {
        XMono(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn is_polynomial(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }
}

impl Ord for XMono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree().cmp(&other.total_degree()).then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for XMono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for XMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

impl fmt::Display for XMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct XPolynomial {
    n: usize,
    terms: BTreeMap<XMono, FieldElem>,
}

impl XPolynomial {
    pub fn zero(n: usize) -> Self {
        XPolynomial { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, FieldElem::one())
    }

    pub fn constant(n: usize, c: FieldElem) -> Self {
        Self::monomial(n, &vec![0; n], c)
    }

    pub fn monomial(n: usize, exps: &[i32], c: FieldElem) -> Self {
        assert_eq!(exps.len(), n, "exponent vector length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(XMono::from_slice(exps), c);
        }
        XPolynomial { n, terms }
    }

    /// The variable `x_i` (1-based).
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i - 1] = 1;
        Self::monomial(n, &e, FieldElem::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (XMono, FieldElem)>>(n: usize, terms: I) -> Self {
        let mut p = Self::zero(n);
        for (m, c) in terms {
            assert_eq!(m.0.len(), n, "exponent vector length");
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&XMono, &FieldElem)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[i32]) -> FieldElem {
        self.terms.get(&XMono::from_slice(exps)).cloned().unwrap_or_else(FieldElem::zero)
    }

    /// True when some exponent is negative.
    pub fn is_laurent(&self) -> bool {
        self.terms.keys().any(|m| !m.is_polynomial())
    }

    pub fn add_term(&mut self, m: XMono, c: FieldElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().add_ref(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_n(&self, other: &Self) {
        assert_eq!(self.n, other.n, "variable count mismatch");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_n(other);
        let (mut big, small) =
            if self.terms.len() >= other.terms.len() { (self.clone(), other) } else { (other.clone(), self) };
        for (m, c) in &small.terms {
            big.add_term(m.clone(), c.clone());
        }
        big
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        XPolynomial { n: self.n, terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg_ref())).collect() }
    }

    pub fn scale(&self, s: &FieldElem) -> Self {
        if s.is_zero() {
            return Self::zero(self.n);
        }
        if s.is_one() {
            return self.clone();
        }
        if let Some(m) = s.as_monomial() {
            return self.map_coeffs(|c| c.mul_monomial(&m));
        }
        self.map_coeffs(|c| c.mul_ref(s))
    }

    pub fn map_coeffs<F: Fn(&FieldElem) -> FieldElem>(&self, f: F) -> Self {
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            let v = f(c);
            if !v.is_zero() {
                out.terms.insert(m.clone(), v);
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_n(other);
        let mut acc: HashMap<XMono, Vec<FieldElem>> = HashMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                acc.entry(m1.mul(m2)).or_default().push(c1.mul_ref(c2));
            }
        }
        let mut out = Self::zero(self.n);
        for (m, cs) in acc {
            let s = sum_fields(&cs);
            if !s.is_zero() {
                out.terms.insert(m, s);
            }
        }
        out
    }

    pub fn mul_xmono(&self, m: &XMono) -> Self {
        XPolynomial { n: self.n, terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one(self.n);
        for _ in 0..k {
            result = result.mul(self);
        }
        result
    }

    /// Exact division by the monomial `x^m`; `None` if a negative exponent
    /// would appear in a polynomial input.
    pub fn div_xmono_polynomial(&self, m: &XMono) -> Option<Self> {
        let inv = XMono(m.0.iter().map(|e| -e).collect());
        let out = self.mul_xmono(&inv);
        if out.is_laurent() && !self.is_laurent() {
            None
        } else {
            Some(out)
        }
    }

    /// Maximum total degree; `None` for zero.
    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// Minimum total degree; `None` for zero.
    pub fn min_total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|m| m.total_degree()).min()
    }

    pub fn homogeneous_part(&self, d: i64) -> Self {
        XPolynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.total_degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The top-degree homogeneous component.
    pub fn top_homogeneous(&self) -> Self {
        match self.total_degree() {
            Some(d) => self.homogeneous_part(d),
            None => self.clone(),
        }
    }

    /// Applies a monomial substitution: each exponent vector `e` is sent to
    /// `f(e) = (e', c)` and the coefficient is multiplied by `c`.
    pub fn transform<F: Fn(&[i32]) -> (ExpVec, SignedMonomial)>(&self, f: F) -> Self {
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            let (e, s) = f(&m.0);
            out.add_term(XMono(e), c.mul_monomial(&s));
        }
        out
    }

    /// Substitutes `x_i ↦ c_i x_{σ(i)}` with signed-monomial factors `c_i`.
    /// `sigma` is 0-based.
    pub fn substitute_scaled(&self, sigma: &[usize], scales: &[SignedMonomial]) -> Self {
        assert_eq!(sigma.len(), self.n);
        assert_eq!(scales.len(), self.n);
        self.transform(|e| {
            let mut ne: ExpVec = SmallVec::from_elem(0, e.len());
            let mut s = SignedMonomial::ONE;
            for (i, &ei) in e.iter().enumerate() {
                ne[sigma[i]] += ei;
                if ei != 0 {
                    s = s.mul(&scales[i].pow(ei));
                }
            }
            (ne, s)
        })
    }

    /// `x_i ↦ c·x_i` for every `i`.
    pub fn scale_vars(&self, c: &SignedMonomial) -> Self {
        let id: Vec<usize> = (0..self.n).collect();
        self.substitute_scaled(&id, &vec![*c; self.n])
    }

    /// Exchanges `x_i` and `x_j` (0-based positions).
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        XPolynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    e.swap(i, j);
                    (XMono(e), c.clone())
                })
                .collect(),
        }
    }

    /// `(w f)(x) = f(x_{w(1)}, …, x_{w(n)})` for `w` in one-line notation
    /// (1-based entries): the exponent of `x_i` moves to position `w(i)`.
    pub fn permute(&self, w: &[usize]) -> Self {
        assert_eq!(w.len(), self.n);
        XPolynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e: ExpVec = SmallVec::from_elem(0, self.n);
                    for (i, &ei) in m.0.iter().enumerate() {
                        e[w[i] - 1] = ei;
                    }
                    (XMono(e), c.clone())
                })
                .collect(),
        }
    }

    /// `f(x_1^{-1}, …, x_n^{-1})`.
    pub fn invert_vars(&self) -> Self {
        XPolynomial {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (XMono(m.0.iter().map(|e| -e).collect()), c.clone())).collect(),
        }
    }

    /// `(f − s f)/(x_i − x_{i+1})` for the transposition of the 0-based
    /// positions `i`, `i+1`. Exact on Laurent polynomials.
    pub fn divided_difference(&self, i: usize) -> Self {
        assert!(i + 1 < self.n, "divided difference index out of range");
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            let (ea, eb) = (m.0[i], m.0[i + 1]);
            if ea == eb {
                continue;
            }
            // x_i^a x_{i+1}^b − x_i^b x_{i+1}^a = (x_i x_{i+1})^b (x_i^{a−b} − x_{i+1}^{a−b})
            let (lo, span, coef) = if ea > eb { (eb, ea - eb, c.clone()) } else { (ea, eb - ea, c.neg_ref()) };
            for k in 0..span {
                let mut e = m.0.clone();
                e[i] = lo + k;
                e[i + 1] = lo + span - 1 - k;
                out.add_term(XMono(e), coef.clone());
            }
        }
        out
    }

    /// True when invariant under every transposition.
    pub fn is_symmetric(&self) -> bool {
        (0..self.n.saturating_sub(1)).all(|i| &self.swap_vars(i, i + 1) == self)
    }

    /// Exact value at a point.
    pub fn eval(&self, pt: &Point) -> Result<FieldElem, ExactError> {
        if pt.len() != self.n {
            return Err(ExactError::DimensionMismatch { expected: self.n, got: pt.len() });
        }
        if let Some(ms) = pt.monomials() {
            return Ok(self.eval_monomial_point(ms));
        }
        let coords = pt.coords();
        let mut cache: HashMap<(usize, i32), FieldElem> = HashMap::new();
        let mut vals = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e != 0 {
                    let p = cache.entry((i, e)).or_insert_with(|| coords[i].pow(e as i64));
                    v = v.mul_ref(p);
                }
            }
            vals.push(v);
        }
        Ok(sum_fields(&vals))
    }

    fn eval_monomial_point(&self, ms: &[SignedMonomial]) -> FieldElem {
        let values = self.terms.iter().map(|(m, c)| {
            let mut s = SignedMonomial::ONE;
            for (i, &e) in m.0.iter().enumerate() {
                if e != 0 {
                    s = s.mul(&ms[i].pow(e));
                }
            }
            (c, s)
        });
        sum_scaled(values)
    }

    /// Canonical rendering: terms in ascending monomial order, each as
    /// `coefficient * monomial`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let t = render_term(m, c);
            if k == 0 {
                out.push_str(&t);
            } else if let Some(rest) = t.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&t);
            }
        }
        out
    }

    pub fn parse(s: &str, n: usize) -> Result<Self, ExactError> {
        super::parse::parse_xpoly(s, n)
    }
}

fn render_term(m: &XMono, c: &FieldElem) -> String {
    let is_const = m.0.iter().all(|&e| e == 0);
    if is_const {
        return c.render();
    }
    if c.is_one() {
        return m.to_string();
    }
    if c == &FieldElem::from_int(-1) {
        return format!("-{}", m);
    }
    let cs = c.render();
    if c.render_is_sum() {
        format!("({}) * {}", cs, m)
    } else {
        format!("{} * {}", cs, m)
    }
}

/// Sums field elements, grouping by denominator so that most additions are
/// plain polynomial additions.
pub fn sum_fields(vals: &[FieldElem]) -> FieldElem {
    match vals.len() {
        0 => return FieldElem::zero(),
        1 => return vals[0].clone(),
        _ => {}
    }
    sum_scaled(vals.iter().map(|v| (v, SignedMonomial::ONE)))
}

/// `Σ c_k · m_k` for signed monomials `m_k`.
pub fn sum_scaled<'a, I: Iterator<Item = (&'a FieldElem, SignedMonomial)>>(items: I) -> FieldElem {
    let mut groups: HashMap<&'a ParamPoly, ParamPoly> = HashMap::new();
    let mut order: Vec<&'a ParamPoly> = Vec::new();
    for (c, s) in items {
        let mut num = c.numerator().shift(&s.exps);
        if s.negative {
            num = num.neg();
        }
        let den = c.denominator();
        match groups.get_mut(den) {
            Some(acc) => *acc = acc.add(&num),
            None => {
                order.push(den);
                groups.insert(den, num);
            }
        }
    }
    let mut parts: Vec<FieldElem> = Vec::with_capacity(order.len());
    for den in order {
        let num = groups.remove(den).expect("group present");
        if num.is_zero() {
            continue;
        }
        parts.push(FieldElem::from_parts(num, den.clone()).expect("nonzero denominator"));
    }
    // pairwise tree summation keeps intermediate denominators balanced
    while parts.len() > 1 {
        let mut next = Vec::with_capacity(parts.len().div_ceil(2));
        let mut it = parts.into_iter();
        while let Some(x) = it.next() {
            match it.next() {
                Some(y) => next.push(x.add_ref(&y)),
                None => next.push(x),
            }
        }
        parts = next;
    }
    parts.pop().unwrap_or_else(FieldElem::zero)
}

impl fmt::Display for XPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Debug for XPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XPolynomial[n={}]({})", self.n, self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xp(s: &str, n: usize) -> XPolynomial {
        XPolynomial::parse(s, n).unwrap()
    }

    #[test]
    fn graded_lex_order() {
        let a = XMono::from_slice(&[2, 0]);
        let b = XMono::from_slice(&[0, 1]);
        let c = XMono::from_slice(&[1, 1]);
        let d = XMono::from_slice(&[0, 2]);
        assert!(b < a && a < c && c < d);
    }

    #[test]
    fn divided_difference_examples() {
        assert_eq!(xp("x1", 2).divided_difference(0), XPolynomial::one(2));
        assert!(xp("q + t", 2).divided_difference(0).is_zero());
        assert_eq!(xp("x1^2", 2).divided_difference(0), xp("x1 + x2", 2));
        assert_eq!(xp("x1^-1", 2).divided_difference(0), xp("-x1^-1*x2^-1", 2));
    }

    #[test]
    fn rendering() {
        let p = xp("(1 - t)/(1 - q*t) * x1^2*x2 + x1 - t*x2 + (1 + q)*x2^2 - 3", 2);
        assert_eq!(p.render(), "-3 + x1 - t * x2 + (1 + q) * x2^2 + (1 - t)/(1 - q*t) * x1^2*x2");
        assert_eq!(xp(&p.render(), 2), p);
    }

    #[test]
    fn evaluation() {
        let pt =
            Point::from_monomials(vec![SignedMonomial::new(false, [1, 0, 0]), SignedMonomial::new(false, [0, -1, 0])]);
        assert_eq!(xp("x1*x2", 2).eval(&pt).unwrap(), FieldElem::qta(1, -1, 0));
        let one = Point::from_monomials(vec![SignedMonomial::ONE]);
        assert!(xp("x1 - 1", 1).eval(&one).unwrap().is_zero());
        let atau =
            Point::from_monomials(vec![SignedMonomial::new(false, [0, 0, 1]), SignedMonomial::new(false, [0, -1, 1])]);
        assert_eq!(xp("x1 + x2", 2).eval(&atau).unwrap(), FieldElem::parse("a*(1 + 1/t)").unwrap());
        assert!(xp("x1", 2).eval(&one).is_err());
    }

    #[test]
    fn permutation_action() {
        // w = s1 in S_2 sends x1 to x2
        assert_eq!(xp("x1", 2).permute(&[2, 1]), xp("x2", 2));
        // cyclic w: x1 -> x2, x2 -> x3, x3 -> x1
        assert_eq!(xp("x1^2*x3", 3).permute(&[2, 3, 1]), xp("x2^2*x1", 3));
    }
}

//! Sparse polynomials in the parameters `q`, `t`, `a` with integer coefficients.
//!
//! Exponents are signed so that Laurent monomials can be represented, but the
//! gcd machinery and exact division only operate on genuine polynomials.
//! Terms are kept sorted ascending in the graded-lexicographic order with
//! `q < t < a`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Exponent triple `(e_q, e_t, e_a)`.
pub type Exp3 = [i32; 3];

pub const VAR_NAMES: [&str; 3] = ["q", "t", "a"];

type OrderKey = (i64, i32, i32, i32);

#[inline]
fn order_key(e: &Exp3) -> OrderKey {
    (e[0] as i64 + e[1] as i64 + e[2] as i64, e[2], e[1], e[0])
}

#[inline]
fn key_exp(k: &OrderKey) -> Exp3 {
    [k.3, k.2, k.1]
}

/// Graded-lexicographic comparison with `q < t < a`.
#[inline]
pub fn cmp_exp(a: &Exp3, b: &Exp3) -> Ordering {
    order_key(a).cmp(&order_key(b))
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ParamPoly {
    terms: Vec<(Exp3, BigInt)>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, [0, 0, 0])
    }

    pub fn from_i64(c: i64) -> Self {
        Self::constant(BigInt::from(c))
    }

    pub fn monomial(c: BigInt, e: Exp3) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            ParamPoly { terms: vec![(e, c)] }
        }
    }

    /// The parameter `var` (0 = q, 1 = t, 2 = a).
    pub fn var(var: usize) -> Self {
        let mut e = [0; 3];
        e[var] = 1;
        Self::monomial(BigInt::one(), e)
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms<I: IntoIterator<Item = (Exp3, BigInt)>>(terms: I) -> Self {
        let mut acc: HashMap<Exp3, BigInt> = HashMap::new();
        for (e, c) in terms {
            *acc.entry(e).or_insert_with(BigInt::zero) += c;
        }
        Self::from_map(acc)
    }

    fn from_map(acc: HashMap<Exp3, BigInt>) -> Self {
        let mut terms: Vec<(Exp3, BigInt)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|x, y| cmp_exp(&x.0, &y.0));
        ParamPoly { terms }
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> &[(Exp3, BigInt)] {
        &self.terms
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == [0, 0, 0] && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == [0, 0, 0])
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Largest term in the monomial order.
    pub fn leading(&self) -> Option<&(Exp3, BigInt)> {
        self.terms.last()
    }

    /// Smallest term in the monomial order.
    pub fn trailing(&self) -> Option<&(Exp3, BigInt)> {
        self.terms.first()
    }

    pub fn constant_term(&self) -> BigInt {
        match self.terms.first() {
            Some((e, c)) if *e == [0, 0, 0] => c.clone(),
            _ => BigInt::zero(),
        }
    }

    pub fn degree(&self, var: usize) -> i32 {
        self.terms.iter().map(|(e, _)| e[var]).max().unwrap_or(0)
    }

    pub fn min_degree(&self, var: usize) -> i32 {
        self.terms.iter().map(|(e, _)| e[var]).min().unwrap_or(0)
    }

    pub fn total_degree(&self) -> i64 {
        self.terms.iter().map(|(e, _)| order_key(e).0).max().unwrap_or(0)
    }

    /// Componentwise minimum exponent over all terms.
    pub fn min_exponents(&self) -> Exp3 {
        let mut m = match self.terms.first() {
            Some((e, _)) => *e,
            None => return [0; 3],
        };
        for (e, _) in &self.terms[1..] {
            for k in 0..3 {
                m[k] = m[k].min(e[k]);
            }
        }
        m
    }

    pub fn has_negative_exponent(&self) -> bool {
        self.terms.iter().any(|(e, _)| e.iter().any(|&x| x < 0))
    }

    /// Positive gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn max_norm(&self) -> BigInt {
        self.terms.iter().map(|(_, c)| c.abs()).max().unwrap_or_else(BigInt::zero)
    }

    pub fn neg(&self) -> Self {
        ParamPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        ParamPoly { terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect() }
    }

    /// Divides every coefficient by `s`; panics if not exact.
    pub fn div_scalar_exact(&self, s: &BigInt) -> Self {
        if s.is_one() {
            return self.clone();
        }
        ParamPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let (qq, r) = c.div_rem(s);
                    assert!(r.is_zero(), "inexact scalar division");
                    (*e, qq)
                })
                .collect(),
        }
    }

    /// Multiplies by the monomial with exponents `shift`. Order is preserved.
    pub fn shift(&self, shift: &Exp3) -> Self {
        if *shift == [0, 0, 0] {
            return self.clone();
        }
        ParamPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| ([e[0] + shift[0], e[1] + shift[1], e[2] + shift[2]], c.clone()))
                .collect(),
        }
    }

    /// Replaces each parameter by its inverse (exponents negated).
    pub fn reflect(&self) -> Self {
        let mut terms: Vec<(Exp3, BigInt)> =
            self.terms.iter().map(|(e, c)| ([-e[0], -e[1], -e[2]], c.clone())).collect();
        terms.sort_unstable_by(|x, y| cmp_exp(&x.0, &y.0));
        ParamPoly { terms }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match cmp_exp(&a[i].0, &b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0, c));
        }
        ParamPoly { terms: out }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.terms.len() == 1 {
            let (e, c) = &self.terms[0];
            return other.shift(e).scale(c);
        }
        if other.terms.len() == 1 {
            let (e, c) = &other.terms[0];
            return self.shift(e).scale(c);
        }
        let mut acc: HashMap<Exp3, BigInt> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
                let prod = ca * cb;
                match acc.get_mut(&e) {
                    Some(v) => *v += prod,
                    None => {
                        acc.insert(e, prod);
                    }
                }
            }
        }
        Self::from_map(acc)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Exact division in `Z[q,t,a]`. Returns `None` when `divisor` does not
    /// divide `self`. Both operands must have nonnegative exponents.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if divisor.terms.len() == 1 {
            let (de, dc) = &divisor.terms[0];
            let mut terms = Vec::with_capacity(self.terms.len());
            for (e, c) in &self.terms {
                let ne = [e[0] - de[0], e[1] - de[1], e[2] - de[2]];
                if ne.iter().any(|&x| x < 0) {
                    return None;
                }
                let (qq, r) = c.div_rem(dc);
                if !r.is_zero() {
                    return None;
                }
                terms.push((ne, qq));
            }
            return Some(ParamPoly { terms });
        }
        let (lde, ldc) = divisor.terms.last().unwrap();
        // Quick rejections on degree.
        for v in 0..3 {
            if self.degree(v) < divisor.degree(v) {
                return None;
            }
        }
        let mut rem: BTreeMap<OrderKey, BigInt> = self.terms.iter().map(|(e, c)| (order_key(e), c.clone())).collect();
        let mut quotient: Vec<(Exp3, BigInt)> = Vec::new();
        while let Some((k, c)) = rem.pop_last() {
            let e = key_exp(&k);
            let qe = [e[0] - lde[0], e[1] - lde[1], e[2] - lde[2]];
            if qe.iter().any(|&x| x < 0) {
                return None;
            }
            let (qc, r) = c.div_rem(ldc);
            if !r.is_zero() {
                return None;
            }
            for (de, dc) in &divisor.terms[..divisor.terms.len() - 1] {
                let ne = [qe[0] + de[0], qe[1] + de[1], qe[2] + de[2]];
                let nk = order_key(&ne);
                let prod = &qc * dc;
                match rem.get_mut(&nk) {
                    Some(v) => {
                        *v -= prod;
                        if v.is_zero() {
                            rem.remove(&nk);
                        }
                    }
                    None => {
                        rem.insert(nk, -prod);
                    }
                }
            }
            quotient.push((qe, qc));
        }
        quotient.reverse();
        Some(ParamPoly { terms: quotient })
    }

    /// Substitutes the integer `value` for parameter `var`.
    pub fn eval_var(&self, var: usize, value: &BigInt) -> Self {
        let maxd = self.degree(var).max(0) as usize;
        let mut powers = Vec::with_capacity(maxd + 1);
        powers.push(BigInt::one());
        for i in 1..=maxd {
            let p = &powers[i - 1] * value;
            powers.push(p);
        }
        let mut acc: HashMap<Exp3, BigInt> = HashMap::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            assert!(e[var] >= 0, "eval_var on a Laurent polynomial");
            let mut ne = *e;
            ne[var] = 0;
            let v = c * &powers[e[var] as usize];
            *acc.entry(ne).or_insert_with(BigInt::zero) += v;
        }
        Self::from_map(acc)
    }

    /// Splits into coefficients with respect to `var`: entry `d` is the
    /// coefficient of `var^d` (a polynomial free of `var`).
    pub fn coefficients_in(&self, var: usize) -> Vec<ParamPoly> {
        let deg = self.degree(var).max(0) as usize;
        let mut parts: Vec<Vec<(Exp3, BigInt)>> = vec![Vec::new(); deg + 1];
        for (e, c) in &self.terms {
            let mut ne = *e;
            let d = ne[var] as usize;
            ne[var] = 0;
            parts[d].push((ne, c.clone()));
        }
        parts
            .into_iter()
            .map(|mut t| {
                t.sort_unstable_by(|x, y| cmp_exp(&x.0, &y.0));
                ParamPoly { terms: t }
            })
            .collect()
    }

    /// Inverse of [`coefficients_in`](Self::coefficients_in).
    pub fn from_coefficients_in(var: usize, coeffs: &[ParamPoly]) -> Self {
        let mut terms = Vec::new();
        for (d, p) in coeffs.iter().enumerate() {
            for (e, c) in &p.terms {
                let mut ne = *e;
                ne[var] += d as i32;
                terms.push((ne, c.clone()));
            }
        }
        terms.sort_unstable_by(|x, y| cmp_exp(&x.0, &y.0));
        ParamPoly { terms }
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.iter().any(|(e, _)| e[var] != 0)
    }

    /// Evaluates at integer values of all three parameters (test helper and
    /// cheap nonzero screening). Requires nonnegative exponents.
    pub fn eval_integers(&self, values: &[BigInt; 3]) -> BigInt {
        let mut total = BigInt::zero();
        for (e, c) in &self.terms {
            let mut v = c.clone();
            for k in 0..3 {
                assert!(e[k] >= 0);
                v *= num_traits::pow(values[k].clone(), e[k] as usize);
            }
            total += v;
        }
        total
    }
}

fn fmt_monomial(e: &Exp3, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut first = true;
    for k in 0..3 {
        if e[k] == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if e[k] == 1 {
            write!(f, "{}", VAR_NAMES[k])?;
        } else {
            write!(f, "{}^{}", VAR_NAMES[k], e[k])?;
        }
    }
    Ok(())
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_const = *e == [0, 0, 0];
            if is_const {
                write!(f, "{}", mag)?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", mag)?;
                }
                fmt_monomial(e, f)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParamPoly({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[([i32; 3], i64)]) -> ParamPoly {
        ParamPoly::from_terms(terms.iter().map(|(e, c)| (*e, BigInt::from(*c))))
    }

    #[test]
    fn ordering_is_graded_lex_with_a_largest() {
        let poly = p(&[([0, 0, 1], 1), ([1, 0, 0], 1), ([0, 1, 0], 1), ([0, 0, 0], 1), ([1, 1, 0], 1)]);
        assert_eq!(poly.to_string(), "1 + q + t + a + q*t");
    }

    #[test]
    fn exact_division_and_failure() {
        let x = p(&[([0, 0, 0], 1), ([1, 0, 0], -1)]); // 1 - q
        let y = p(&[([0, 0, 0], 1), ([1, 1, 0], -1)]); // 1 - q t
        let prod = x.mul(&y);
        assert_eq!(prod.div_exact(&x), Some(y.clone()));
        assert_eq!(prod.div_exact(&y), Some(x.clone()));
        let z = p(&[([0, 0, 0], 1), ([0, 0, 1], 1)]);
        assert_eq!(prod.div_exact(&z), None);
    }

    #[test]
    fn coefficient_split_round_trips() {
        let poly = p(&[([2, 1, 0], 3), ([0, 1, 1], -2), ([1, 0, 0], 5)]);
        let parts = poly.coefficients_in(1);
        assert_eq!(ParamPoly::from_coefficients_in(1, &parts), poly);
    }

    #[test]
    fn eval_var_substitutes() {
        let poly = p(&[([2, 0, 0], 1), ([0, 1, 0], 1)]);
        let v = poly.eval_var(0, &BigInt::from(3));
        assert_eq!(v, p(&[([0, 0, 0], 9), ([0, 1, 0], 1)]));
    }
}

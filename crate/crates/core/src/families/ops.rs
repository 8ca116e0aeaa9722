//! Hecke-algebra operators on rational family members.

use crate::exactalg::{FieldElem, SignedMonomial, XMono, XPolynomial};
use crate::heckeops::hat::KModule;
use crate::heckeops::{apply_h, Variant};

use super::XRational;

impl KModule for XRational {
    fn add(&self, other: &Self) -> Self {
        XRational::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        XRational::sub(self, other)
    }
    fn scale(&self, c: &FieldElem) -> Self {
        XRational::scale(self, c)
    }
}

impl XRational {
    /// `H_i`; the denominator is symmetric, so only the numerator moves.
    pub fn apply_h(&self, i: usize, variant: Variant) -> Self {
        self.map_symmetric(|p| apply_h(i, p, variant))
    }

    /// `Δf(x) = f(q^{-1}x_n, x_1, …, x_{n−1})`, or its inverse
    /// `f(x_2, …, x_n, q x_1)`.
    pub fn apply_delta(&self, inverse: bool) -> Self {
        let n = self.nvars();
        let mut sigma: Vec<usize> = Vec::with_capacity(n);
        let mut scales = vec![SignedMonomial::ONE; n];
        if !inverse {
            sigma.push(n - 1);
            sigma.extend(0..n - 1);
            scales[0] = SignedMonomial::new(false, [-1, 0, 0]);
        } else {
            sigma.extend(1..n);
            sigma.push(0);
            scales[n - 1] = SignedMonomial::new(false, [1, 0, 0]);
        }
        self.substitute_scaled(&sigma, &scales)
    }

    /// `Φ = (x_n − t^{1−n})Δ`.
    pub fn apply_phi(&self) -> Self {
        let n = self.nvars();
        let lin = XPolynomial::var(n, n).sub(&XPolynomial::constant(n, FieldElem::qta(0, 1 - n as i32, 0)));
        self.apply_delta(false).mul_poly(&lin)
    }

    /// `Ξ_j f = x_j^{-1}(f + H_j⋯H_{n−1} Φ H_1⋯H_{j−1} f)`.
    pub fn apply_big_xi(&self, j: usize) -> Self {
        let n = self.nvars();
        let mut f = self.clone();
        for k in (1..j).rev() {
            f = f.apply_h(k, Variant::PLAIN);
        }
        f = f.apply_phi();
        for k in (j..n).rev() {
            f = f.apply_h(k, Variant::PLAIN);
        }
        let mut e = vec![0; n];
        e[j - 1] = -1;
        self.add(&f).mul_xmono(&XMono::from_slice(&e))
    }
}

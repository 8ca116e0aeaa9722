//! Constructors for the interpolation and non-symmetric Macdonald
//! families, with a shared memo table.

pub mod eval;
pub mod interp;
pub mod ops;
pub mod rational;
pub mod record;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::combin::{bar_coord, bar_point, inv_stat, longest_length, tau_monomials, IntVector};
use crate::exactalg::{pochhammer, ExactError, FieldElem, Point, SignedMonomial, XMono, XPolynomial};
use crate::heckeops::{apply_cplus, apply_h, apply_phi, apply_psi, Variant};
use crate::linalg::SolveError;

pub use eval::{e_tau_product, g_eval_product};
pub use interp::{g_interpolation, gprime_interpolation};
pub use rational::XRational;
pub use record::{MemberRecord, TermRecord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyKind {
    E,
    G,
    Gprime,
    K,
    Kprime,
    Kbar,
    O,
    R,
    Kplus,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 9] = [
        FamilyKind::E,
        FamilyKind::G,
        FamilyKind::Gprime,
        FamilyKind::K,
        FamilyKind::Kprime,
        FamilyKind::Kbar,
        FamilyKind::O,
        FamilyKind::R,
        FamilyKind::Kplus,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FamilyKind::E => "E",
            FamilyKind::G => "G",
            FamilyKind::Gprime => "Gprime",
            FamilyKind::K => "K",
            FamilyKind::Kprime => "Kprime",
            FamilyKind::Kbar => "Kbar",
            FamilyKind::O => "O",
            FamilyKind::R => "R",
            FamilyKind::Kplus => "Kplus",
        }
    }

    /// Whether the `°` (inverted parameters) variant exists.
    pub fn has_circ(&self) -> bool {
        matches!(self, FamilyKind::E | FamilyKind::G | FamilyKind::K)
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A family together with the parameter-inversion flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyTag {
    pub kind: FamilyKind,
    pub circ: bool,
}

impl FamilyTag {
    pub const fn plain(kind: FamilyKind) -> Self {
        FamilyTag { kind, circ: false }
    }

    pub const fn circ(kind: FamilyKind) -> Self {
        FamilyTag { kind, circ: true }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.name(), if self.circ { "circ" } else { "" })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown family `{0}`")]
pub struct UnknownFamily(pub String);

impl FromStr for FamilyTag {
    type Err = UnknownFamily;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (base, circ) = match s.strip_suffix("circ").or_else(|| s.strip_suffix('°')) {
            Some(b) => (b, true),
            None => (s, false),
        };
        let kind = FamilyKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(base))
            .ok_or_else(|| UnknownFamily(s.to_string()))?;
        if circ && !kind.has_circ() {
            return Err(UnknownFamily(s.to_string()));
        }
        Ok(FamilyTag { kind, circ })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family} is indexed by compositions, got ({index})")]
    NotComposition { family: FamilyTag, index: IntVector },
    #[error("{family} is indexed by partitions, got ({index})")]
    NotPartition { family: FamilyTag, index: IntVector },
    #[error("{0} has no parameter-inverted variant")]
    NoCircVariant(FamilyKind),
    #[error("shift by {m} does not move ({index}) into the compositions")]
    BadShift { index: IntVector, m: i32 },
    #[error("{family}({index}) is not a polynomial")]
    NotPolynomial { family: FamilyTag, index: IntVector },
    #[error("empty index")]
    EmptyIndex,
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Memo table keyed by family and index. Lookups and inserts take the
/// lock briefly; values are computed outside it, so concurrent callers may
/// duplicate work but never observe partial values.
#[derive(Default)]
pub struct FamilyCache {
    map: RwLock<HashMap<(FamilyTag, IntVector), Arc<XRational>>>,
}

impl FamilyCache {
    pub fn get(&self, tag: FamilyTag, v: &IntVector) -> Option<Arc<XRational>> {
        let map = self.map.read().unwrap_or_else(|e| e.into_inner());
        map.get(&(tag, v.clone())).cloned()
    }

    /// Stores `value` unless an entry is already present; returns the entry.
    pub fn insert(&self, tag: FamilyTag, v: &IntVector, value: XRational) -> Arc<XRational> {
        let mut map = self.map.write().unwrap_or_else(|e| e.into_inner());
        map.entry((tag, v.clone())).or_insert_with(|| Arc::new(value)).clone()
    }

    pub fn len(&self) -> usize {
        self.map.read().unwrap_or_else(|e| e.into_inner()).len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All entries, sorted by family and index.
    pub fn entries(&self) -> Vec<(FamilyTag, IntVector, Arc<XRational>)> {
        let map = self.map.read().unwrap_or_else(|e| e.into_inner());
        let mut out: Vec<_> = map.iter().map(|((t, v), x)| (*t, v.clone(), x.clone())).collect();
        out.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        out
    }

    pub fn clear(&self) {
        self.map.write().unwrap_or_else(|e| e.into_inner()).clear();
    }
}

/// `a·τ`.
pub fn atau_point(n: usize) -> Point {
    Point::from_monomials(tau_monomials(n).iter().map(|m| m.mul(&mono(0, 0, 1))).collect())
}

/// `a^{-1}·τ`.
pub fn ainvtau_point(n: usize) -> Point {
    Point::from_monomials(tau_monomials(n).iter().map(|m| m.mul(&mono(0, 0, -1))).collect())
}

pub fn tau_point(n: usize) -> Point {
    Point::from_monomials(tau_monomials(n))
}

fn mono(i: i32, j: i32, k: i32) -> SignedMonomial {
    SignedMonomial::new(false, [i, j, k])
}

/// Smallest `m ≥ 0` with `v + (mⁿ)` a composition.
pub fn minimal_shift(v: &IntVector) -> i32 {
    (-v.min()).max(0)
}

/// Family constructors sharing one [`FamilyCache`].
#[derive(Default)]
pub struct Families {
    cache: FamilyCache,
}

impl Families {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cache(&self) -> &FamilyCache {
        &self.cache
    }

    /// The family member at `v`, from the cache when present.
    pub fn member(&self, tag: FamilyTag, v: &IntVector) -> Result<Arc<XRational>, FamilyError> {
        if v.n() == 0 {
            return Err(FamilyError::EmptyIndex);
        }
        if let Some(hit) = self.cache.get(tag, v) {
            return Ok(hit);
        }
        let value = self.compute(tag, v)?;
        Ok(self.cache.insert(tag, v, value))
    }

    /// The member at `v`, which must be a (Laurent) polynomial.
    pub fn poly(&self, tag: FamilyTag, v: &IntVector) -> Result<XPolynomial, FamilyError> {
        self.member(tag, v)?.to_polynomial().ok_or_else(|| FamilyError::NotPolynomial { family: tag, index: v.clone() })
    }

    fn compute(&self, tag: FamilyTag, v: &IntVector) -> Result<XRational, FamilyError> {
        if tag.circ {
            if !tag.kind.has_circ() {
                return Err(FamilyError::NoCircVariant(tag.kind));
            }
            return Ok(self.member(FamilyTag::plain(tag.kind), v)?.iota());
        }
        let need_composition = || {
            if v.is_composition() {
                Ok(())
            } else {
                Err(FamilyError::NotComposition { family: tag, index: v.clone() })
            }
        };
        let need_partition = || {
            if v.is_partition() {
                Ok(())
            } else {
                Err(FamilyError::NotPartition { family: tag, index: v.clone() })
            }
        };
        Ok(match tag.kind {
            FamilyKind::G if v.is_composition() => self.g_step(v)?.into(),
            FamilyKind::G => self.g_shifted(v, minimal_shift(v))?,
            FamilyKind::E => self.e_compute(v)?.into(),
            FamilyKind::K if v.is_composition() => {
                let g = self.g(v)?;
                let value = g.eval(&atau_point(v.n()))?;
                XRational::new(value.inv()?, g, Vec::new())
            }
            FamilyKind::K => self.k_shifted(v, minimal_shift(v))?,
            FamilyKind::Kbar => {
                let e = self.e(v)?;
                let value = e.eval(&tau_point(v.n()))?;
                e.scale(&value.inv()?).into()
            }
            FamilyKind::Gprime => {
                need_composition()?;
                self.gprime_compute(v)?.into()
            }
            FamilyKind::Kprime => {
                let n = v.n();
                let kc = self.member(FamilyTag::circ(FamilyKind::K), v)?;
                kc.scale_vars(&mono(0, n as i32 - 1, 0)).map_symmetric(apply_psi).scale(&FieldElem::qta(
                    0,
                    longest_length(n) as i32,
                    0,
                ))
            }
            FamilyKind::O => {
                need_composition()?;
                let n = v.n();
                let sigma: Vec<usize> = (0..n).rev().collect();
                let scales = vec![mono(0, 1 - n as i32, 1); n];
                self.k(v)?.substitute_scaled(&sigma, &scales)
            }
            FamilyKind::R => {
                need_partition()?;
                let c = apply_cplus(&self.g(v)?);
                let lead = c.coeff(v.entries());
                c.scale(&lead.inv()?).into()
            }
            FamilyKind::Kplus => {
                need_partition()?;
                let r = self.r(v)?;
                let value = r.eval(&atau_point(v.n()))?;
                r.scale(&value.inv()?).into()
            }
        })
    }

    /// One step of the raising/exchange recursion for `G_α`.
    fn g_step(&self, alpha: &IntVector) -> Result<XPolynomial, FamilyError> {
        let n = alpha.n();
        if alpha.weight() == 0 {
            return Ok(XPolynomial::one(n));
        }
        if alpha.is_weakly_increasing() {
            let gamma = alpha.lower();
            let g = self.g(&gamma)?;
            return Ok(apply_phi(&g).scale(&FieldElem::qta(gamma.0[0], 0, 0)));
        }
        let i = (1..n).find(|&i| alpha.0[i - 1] > alpha.0[i]).expect("not weakly increasing");
        let beta = alpha.swapped(i);
        let gb = self.g(&beta)?;
        let (bi, bj) = (bar_coord(&beta, i), bar_coord(&beta, i + 1));
        let coef = &(&(&FieldElem::t() - &FieldElem::one()) * &bi) / &(&bi - &bj);
        Ok(apply_h(i, &gb, Variant::PLAIN).sub(&gb.scale(&coef)))
    }

    fn e_compute(&self, v: &IntVector) -> Result<XPolynomial, FamilyError> {
        let m = minimal_shift(v);
        let top = self.g(&v.shift(m))?.top_homogeneous();
        Ok(top.mul_xmono(&XMono::from_slice(&vec![-m; v.n()])))
    }

    fn gprime_compute(&self, alpha: &IntVector) -> Result<XPolynomial, FamilyError> {
        let n = alpha.n() as i32;
        let gc = self.poly(FamilyTag::circ(FamilyKind::G), alpha)?;
        let moved = apply_psi(&gc.scale_vars(&mono(0, n - 1, 0)));
        let e = (1 - n) * alpha.weight() as i32 + inv_stat(alpha) as i32;
        Ok(moved.scale(&FieldElem::qta(0, e, 0)))
    }

    /// `G_v` (rational for `v ∉ C_n`).
    pub fn g(&self, alpha: &IntVector) -> Result<XPolynomial, FamilyError> {
        self.poly(FamilyTag::plain(FamilyKind::G), alpha)
    }

    /// `E_v` (a Laurent polynomial for `v ∉ C_n`).
    pub fn e(&self, v: &IntVector) -> Result<XPolynomial, FamilyError> {
        self.poly(FamilyTag::plain(FamilyKind::E), v)
    }

    pub fn k(&self, v: &IntVector) -> Result<Arc<XRational>, FamilyError> {
        self.member(FamilyTag::plain(FamilyKind::K), v)
    }

    pub fn kbar(&self, v: &IntVector) -> Result<XPolynomial, FamilyError> {
        self.poly(FamilyTag::plain(FamilyKind::Kbar), v)
    }

    pub fn gprime(&self, alpha: &IntVector) -> Result<XPolynomial, FamilyError> {
        self.poly(FamilyTag::plain(FamilyKind::Gprime), alpha)
    }

    pub fn kprime(&self, v: &IntVector) -> Result<Arc<XRational>, FamilyError> {
        self.member(FamilyTag::plain(FamilyKind::Kprime), v)
    }

    pub fn o(&self, alpha: &IntVector) -> Result<XPolynomial, FamilyError> {
        self.poly(FamilyTag::plain(FamilyKind::O), alpha)
    }

    pub fn r(&self, lambda: &IntVector) -> Result<XPolynomial, FamilyError> {
        self.poly(FamilyTag::plain(FamilyKind::R), lambda)
    }

    pub fn kplus(&self, lambda: &IntVector) -> Result<XPolynomial, FamilyError> {
        self.poly(FamilyTag::plain(FamilyKind::Kplus), lambda)
    }

    /// `G_v = q^{−m|v|−m²n} G_{v+(mⁿ)}(q^m x) / ∏_i x_i^m (q^{−m}t^{1−n}x_i^{-1}; q)_m`
    /// for any `m` with `v + (mⁿ) ∈ C_n`.
    pub fn g_shifted(&self, v: &IntVector, m: i32) -> Result<XRational, FamilyError> {
        let (n, shifted) = self.check_shift(v, m)?;
        let g = self.g(&shifted)?.scale_vars(&mono(m, 0, 0));
        // x^m (q^{−m} t^{1−n} x^{-1}; q)_m = ∏_{k=1}^m (−q^{−k} t^{1−n}) (1 − q^k t^{n−1} x)
        let flip = SignedMonomial::new(
            (m as i64 * n as i64) % 2 == 1,
            [-(m * (m + 1) / 2) * n as i32, m * (1 - n as i32) * n as i32, 0],
        );
        let w = v.weight() as i32;
        let scalar = mono(-m * w - m * m * n as i32, 0, 0).mul(&flip.inv()).to_field();
        Ok(XRational::new(scalar, g, shift_kappas(n, m)))
    }

    /// `K_v = A_m(x; v) K_{v+(mⁿ)}(q^m x)` for any `m` with `v + (mⁿ) ∈ C_n`.
    pub fn k_shifted(&self, v: &IntVector, m: i32) -> Result<XRational, FamilyError> {
        let (n, shifted) = self.check_shift(v, m)?;
        let k = self.k(&shifted)?.scale_vars(&mono(m, 0, 0));
        let mut pre = FieldElem::one();
        for i in 1..=n {
            let y = &FieldElem::qta(1 - m, 0, 1) / &bar_coord(v, i);
            pre = &pre * &pochhammer(&y, m as u32, &FieldElem::q());
        }
        Ok(XRational::new(k.scalar().mul_ref(&pre), k.raw_numerator().clone(), shift_kappas(n, m)))
    }

    /// `K̄_v = q^{m|v|} t^{(1−n)nm} ∏_i (v̄_i x_i)^{−m} K̄_{v+(mⁿ)}`.
    pub fn kbar_shifted(&self, v: &IntVector, m: i32) -> Result<XPolynomial, FamilyError> {
        let (n, shifted) = self.check_shift(v, m)?;
        let ni = n as i32;
        let mut c = FieldElem::qta(m * v.weight() as i32, (1 - ni) * ni * m, 0);
        for i in 1..=n {
            c = &c / &bar_coord(v, i).pow(m as i64);
        }
        Ok(self.kbar(&shifted)?.mul_xmono(&XMono::from_slice(&vec![-m; n])).scale(&c))
    }

    fn check_shift(&self, v: &IntVector, m: i32) -> Result<(usize, IntVector), FamilyError> {
        let shifted = v.shift(m);
        if m < 0 || !shifted.is_composition() {
            return Err(FamilyError::BadShift { index: v.clone(), m });
        }
        Ok((v.n(), shifted))
    }

    /// `G_α(aτ)` by direct substitution.
    pub fn g_at_atau(&self, alpha: &IntVector) -> Result<FieldElem, FamilyError> {
        Ok(self.g(alpha)?.eval(&atau_point(alpha.n()))?)
    }

    /// `[α β]_{q,t} = G_β(ᾱ)/G_β(β̄)`, or with `inverted` the
    /// `(q^{-1}, t^{-1})` version `G°_β(ᾱ^{-1})/G°_β(β̄^{-1})`.
    pub fn binom(&self, alpha: &IntVector, beta: &IntVector, inverted: bool) -> Result<FieldElem, FamilyError> {
        let (g, pa, pb) = if inverted {
            (self.poly(FamilyTag::circ(FamilyKind::G), beta)?, bar_point(alpha).inverse(), bar_point(beta).inverse())
        } else {
            (self.g(beta)?, bar_point(alpha), bar_point(beta))
        };
        Ok(g.eval(&pa)?.checked_div(&g.eval(&pb)?)?)
    }
}

/// `q^k t^{n−1}` for `k = 1..m`.
fn shift_kappas(n: usize, m: i32) -> Vec<SignedMonomial> {
    (1..=m).map(|k| mono(k, n as i32 - 1, 0)).collect()
}

/// `G_α` through the recursion, with a private cache.
pub fn g_recursive(alpha: &IntVector) -> Result<XPolynomial, FamilyError> {
    Families::new().g(alpha)
}

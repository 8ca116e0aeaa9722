//! Indexing combinatorics: integral vectors, compositions, evaluation
//! points, permutations and diagram statistics.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactalg::{FieldElem, Point, SignedMonomial};

/// An element of `Z^n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntVector(pub Vec<i32>);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed index vector {0:?}")]
pub struct ParseVectorError(pub String);

impl IntVector {
    pub fn new(v: Vec<i32>) -> Self {
        assert!(!v.is_empty(), "vectors have at least one entry");
        IntVector(v)
    }

    pub fn zeros(n: usize) -> Self {
        IntVector(vec![0; n])
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i32] {
        &self.0
    }

    /// `|v| = Σ v_i`.
    pub fn weight(&self) -> i64 {
        self.0.iter().map(|&x| x as i64).sum()
    }

    pub fn is_composition(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_partition(&self) -> bool {
        self.is_composition() && self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn min(&self) -> i32 {
        *self.0.iter().min().expect("nonempty")
    }

    /// `v + (m^n)`.
    pub fn shift(&self, m: i32) -> IntVector {
        IntVector(self.0.iter().map(|x| x + m).collect())
    }

    pub fn neg(&self) -> IntVector {
        IntVector(self.0.iter().map(|x| -x).collect())
    }

    /// `w_0 v = (v_n, …, v_1)`.
    pub fn reversed(&self) -> IntVector {
        IntVector(self.0.iter().rev().copied().collect())
    }

    /// `s_i v` (1-based `i`).
    pub fn swapped(&self, i: usize) -> IntVector {
        let mut v = self.0.clone();
        v.swap(i - 1, i);
        IntVector(v)
    }

    /// `v^♮ = (v_2, …, v_n, v_1 + 1)`.
    pub fn raise(&self) -> IntVector {
        let mut v: Vec<i32> = self.0[1..].to_vec();
        v.push(self.0[0] + 1);
        IntVector(v)
    }

    /// `v^♯ = (v_n − 1, v_1, …, v_{n−1})`.
    pub fn lower(&self) -> IntVector {
        let n = self.n();
        let mut v = vec![self.0[n - 1] - 1];
        v.extend_from_slice(&self.0[..n - 1]);
        IntVector(v)
    }

    /// Coordinatewise `β ≤ α`.
    pub fn contained_in(&self, other: &IntVector) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// Non-increasing rearrangement `v_+`.
    pub fn sorted_desc(&self) -> IntVector {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        IntVector(v)
    }

    /// Weakly increasing.
    pub fn is_weakly_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl FromStr for IntVector {
    type Err = ParseVectorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Result<Vec<i32>, _> = s.split(',').map(|p| p.trim().parse::<i32>()).collect();
        match parts {
            Ok(v) if !v.is_empty() => Ok(IntVector(v)),
            _ => Err(ParseVectorError(s.to_string())),
        }
    }
}

impl From<Vec<i32>> for IntVector {
    fn from(v: Vec<i32>) -> Self {
        IntVector::new(v)
    }
}

impl From<&[i32]> for IntVector {
    fn from(v: &[i32]) -> Self {
        IntVector::new(v.to_vec())
    }
}

/// `k_i(v) = #{k<i | v_k ≥ v_i} + #{k>i | v_k > v_i}` (1-based `i`).
pub fn k_stat(v: &IntVector, i: usize) -> usize {
    let e = v.entries();
    let vi = e[i - 1];
    e[..i - 1].iter().filter(|&&x| x >= vi).count() + e[i..].iter().filter(|&&x| x > vi).count()
}

/// Coordinates of `v̄` as signed monomials: `q^{v_i} t^{−k_i(v)}`.
pub fn bar_monomials(v: &IntVector) -> Vec<SignedMonomial> {
    (1..=v.n()).map(|i| SignedMonomial::new(false, [v.0[i - 1], -(k_stat(v, i) as i32), 0])).collect()
}

pub fn bar_point(v: &IntVector) -> Point {
    Point::from_monomials(bar_monomials(v))
}

/// `v̄_i` as a field element (1-based `i`).
pub fn bar_coord(v: &IntVector, i: usize) -> FieldElem {
    FieldElem::qta(v.0[i - 1], -(k_stat(v, i) as i32), 0)
}

/// `ṽ = \overline{−w_0 v}`.
pub fn tilde_point(v: &IntVector) -> Point {
    bar_point(&v.reversed().neg())
}

pub fn tilde_monomials(v: &IntVector) -> Vec<SignedMonomial> {
    bar_monomials(&v.reversed().neg())
}

/// `τ = (1, t^{−1}, …, t^{1−n})`.
pub fn tau_monomials(n: usize) -> Vec<SignedMonomial> {
    (0..n).map(|i| SignedMonomial::new(false, [0, -(i as i32), 0])).collect()
}

/// Multiplies every coordinate by `c`.
pub fn scale_monomials(ms: &[SignedMonomial], c: SignedMonomial) -> Vec<SignedMonomial> {
    ms.iter().map(|m| m.mul(&c)).collect()
}

pub fn invert_monomials(ms: &[SignedMonomial]) -> Vec<SignedMonomial> {
    ms.iter().map(|m| m.inv()).collect()
}

/// `y^♮ = (y_2, …, y_n, q y_1)`.
pub fn raise_point(ms: &[SignedMonomial]) -> Vec<SignedMonomial> {
    let mut out: Vec<SignedMonomial> = ms[1..].to_vec();
    out.push(ms[0].mul(&SignedMonomial::new(false, [1, 0, 0])));
    out
}

/// `y^♯ = (q^{−1} y_n, y_1, …, y_{n−1})`.
pub fn lower_point(ms: &[SignedMonomial]) -> Vec<SignedMonomial> {
    let n = ms.len();
    let mut out = vec![ms[n - 1].mul(&SignedMonomial::new(false, [-1, 0, 0]))];
    out.extend_from_slice(&ms[..n - 1]);
    out
}

/// A permutation of `{1..n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermutationError {
    #[error("not a permutation: {0:?}")]
    NotBijective(Vec<usize>),
    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<usize>),
    #[error("generator s_{0} out of range for n = {1}")]
    OutOfRange(usize, usize),
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn from_one_line(w: Vec<usize>) -> Result<Self, PermutationError> {
        let n = w.len();
        let mut seen = vec![false; n];
        for &x in &w {
            if x == 0 || x > n || seen[x - 1] {
                return Err(PermutationError::NotBijective(w));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation(w))
    }

    /// The longest element `i ↦ n + 1 − i`.
    pub fn longest(n: usize) -> Self {
        Permutation((1..=n).rev().collect())
    }

    /// `s_i` (1-based).
    pub fn simple(n: usize, i: usize) -> Self {
        let mut w: Vec<usize> = (1..=n).collect();
        w.swap(i - 1, i);
        Permutation(w)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    /// `w(i)` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// `(u w)(i) = u(w(i))`.
    pub fn compose(&self, w: &Permutation) -> Permutation {
        Permutation(w.0.iter().map(|&i| self.0[i - 1]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &wi) in self.0.iter().enumerate() {
            inv[wi - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// `ℓ(w)`, the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
    }

    /// A reduced word `(i_1, …, i_ℓ)` with `w = s_{i_1} ⋯ s_{i_ℓ}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        if *self == Self::longest(self.n()) {
            return longest_word(self.n());
        }
        // bubble sort: w s_i swaps positions i, i+1 of the one-line notation
        let mut w = self.0.clone();
        let mut word = Vec::new();
        while let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) {
            w.swap(i, i + 1);
            word.push(i + 1);
        }
        word.reverse();
        word
    }

    /// Multiplies out a word of simple reflections.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self, PermutationError> {
        let mut w = Self::identity(n);
        for &i in word {
            if i == 0 || i >= n {
                return Err(PermutationError::OutOfRange(i, n));
            }
            w = w.compose(&Self::simple(n, i));
        }
        Ok(w)
    }

    /// `(w v)_i = v_{w^{-1}(i)}`.
    pub fn act(&self, v: &IntVector) -> IntVector {
        let mut out = vec![0; self.n()];
        for (i, &wi) in self.0.iter().enumerate() {
            out[wi - 1] = v.0[i];
        }
        IntVector(out)
    }

    /// All permutations of `{1..n}` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation(cur.clone()));
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }
}

/// `(s_1)(s_2 s_1)⋯(s_{n−1}⋯s_1)`.
pub fn longest_word(n: usize) -> Vec<usize> {
    let mut word = Vec::new();
    for k in 1..n {
        for i in (1..=k).rev() {
            word.push(i);
        }
    }
    word
}

/// Checks that a word is reduced.
pub fn check_reduced(n: usize, word: &[usize]) -> Result<Permutation, PermutationError> {
    let w = Permutation::from_word(n, word)?;
    if w.length() != word.len() {
        return Err(PermutationError::NotReduced(word.to_vec()));
    }
    Ok(w)
}

/// `ℓ(w_0) = n(n−1)/2`.
pub fn longest_length(n: usize) -> i64 {
    (n * n.saturating_sub(1) / 2) as i64
}

/// `(v_+, w_v)` with `v_+` non-increasing, `w_v(v_+) = v` and `w_v` of
/// minimal length.
pub fn sort_shortest(v: &IntVector) -> (IntVector, Permutation) {
    let mut order: Vec<usize> = (0..v.n()).collect();
    order.sort_by_key(|&i| (-(v.0[i] as i64), i));
    let plus = IntVector(order.iter().map(|&i| v.0[i]).collect());
    let w = Permutation(order.iter().map(|&i| i + 1).collect());
    (plus, w)
}

/// A cell `(i, j)` of a composition diagram with its arm, leg, coarm and
/// coleg.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CellStats {
    pub row: usize,
    pub col: usize,
    pub arm: i32,
    pub leg: i32,
    pub coarm: i32,
    pub coleg: i32,
}

pub fn diagram_stats(alpha: &IntVector) -> Vec<CellStats> {
    let a = alpha.entries();
    let n = a.len();
    let mut cells = Vec::new();
    for i in 0..n {
        for j in 1..=a[i].max(0) {
            let leg = (i + 1..n).filter(|&k| j <= a[k] && a[k] <= a[i]).count()
                + (0..i).filter(|&k| j <= a[k] + 1 && a[k] < a[i]).count();
            let coleg = (i + 1..n).filter(|&k| a[k] > a[i]).count() + (0..i).filter(|&k| a[k] >= a[i]).count();
            cells.push(CellStats {
                row: i + 1,
                col: j as usize,
                arm: a[i] - j,
                leg: leg as i32,
                coarm: j - 1,
                coleg: coleg as i32,
            });
        }
    }
    cells
}

/// `I(α) = #{i<j | α_i ≥ α_j}`.
pub fn inv_stat(alpha: &IntVector) -> i64 {
    let a = alpha.entries();
    (0..a.len()).map(|i| (i + 1..a.len()).filter(|&j| a[i] >= a[j]).count() as i64).sum()
}

/// `n(α) = Σ_s l(s)`.
pub fn n_stat(alpha: &IntVector) -> i64 {
    diagram_stats(alpha).iter().map(|c| c.leg as i64).sum()
}

/// `n′(α) = Σ_s a(s) = Σ_i C(α_i, 2)`.
pub fn nprime_stat(alpha: &IntVector) -> i64 {
    alpha.entries().iter().map(|&x| (x as i64) * (x as i64 - 1) / 2).sum()
}

/// `τ_α = (−1)^{|α|} q^{n′(α)} t^{−n(α_+)}`.
pub fn tau_alpha(alpha: &IntVector) -> SignedMonomial {
    SignedMonomial::new(alpha.weight() % 2 != 0, [nprime_stat(alpha) as i32, -(n_stat(&alpha.sorted_desc()) as i32), 0])
}

/// Containment order on compositions: `β ≼ α` when some `w ∈ S_n` has
/// `β_i < α_{w(i)}` for `i < w(i)` and `β_i ≤ α_{w(i)}` for `i ≥ w(i)`.
/// For partitions this is containment of diagrams.
pub fn twisted_contained(beta: &IntVector, alpha: &IntVector) -> bool {
    assert_eq!(beta.n(), alpha.n());
    Permutation::all(beta.n()).iter().any(|w| {
        (1..=beta.n()).all(|i| {
            let (b, a) = (beta.0[i - 1], alpha.0[w.apply(i) - 1]);
            if i < w.apply(i) {
                b < a
            } else {
                b <= a
            }
        })
    })
}

/// All compositions of `n` parts and weight `d`, lexicographically
/// descending.
pub fn enumerate_compositions(n: usize, d: i32) -> Vec<IntVector> {
    fn rec(n: usize, d: i32, prefix: &mut Vec<i32>, out: &mut Vec<IntVector>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(IntVector(prefix.clone()));
            prefix.pop();
            return;
        }
        for first in (0..=d).rev() {
            prefix.push(first);
            rec(n, d - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, &mut Vec::new(), &mut out);
    out
}

/// All compositions of weight at most `d`, by increasing weight.
pub fn compositions_up_to(n: usize, d: i32) -> Vec<IntVector> {
    (0..=d).flat_map(|k| enumerate_compositions(n, k)).collect()
}

/// Partitions with at most `n` parts (padded with zeros) of weight `d`.
pub fn enumerate_partitions(n: usize, d: i32) -> Vec<IntVector> {
    enumerate_compositions(n, d).into_iter().filter(|v| v.is_partition()).collect()
}

/// All vectors in `{lo..hi}^n`, lexicographically descending.
pub fn vectors_in_box(n: usize, lo: i32, hi: i32) -> Vec<IntVector> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in &out {
            for x in (lo..=hi).rev() {
                let mut q = p.clone();
                q.push(x);
                next.push(q);
            }
        }
        out = next;
    }
    out.into_iter().map(IntVector).collect()
}

/// Weight of `v` after the minimal shift into `C_n`.
pub fn shifted_weight(v: &IntVector) -> i64 {
    let m = (-v.min()).max(0);
    v.weight() + (m as i64) * v.n() as i64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(v: &[i32]) -> IntVector {
        IntVector::from(v)
    }

    #[test]
    fn k_stat_examples() {
        assert_eq!((k_stat(&iv(&[0, 0]), 1), k_stat(&iv(&[0, 0]), 2)), (0, 1));
        assert_eq!((k_stat(&iv(&[0, 1]), 1), k_stat(&iv(&[0, 1]), 2)), (1, 0));
        let v = iv(&[2, 1, 0]);
        assert!((1..=3).all(|i| k_stat(&v, i) == i - 1));
    }

    #[test]
    fn reduced_words() {
        let w = Permutation::from_one_line(vec![3, 1, 2]).unwrap();
        let word = w.reduced_word();
        assert_eq!(word.len(), w.length());
        assert_eq!(Permutation::from_word(3, &word).unwrap(), w);
        assert_eq!(longest_word(3), vec![1, 2, 1]);
        assert_eq!(Permutation::from_word(4, &longest_word(4)).unwrap(), Permutation::longest(4));
        assert!(check_reduced(2, &[1, 1]).is_err());
        assert_eq!(Permutation::all(3).len(), 6);
    }

    #[test]
    fn enumeration_order() {
        assert_eq!(enumerate_compositions(2, 1), vec![iv(&[1, 0]), iv(&[0, 1])]);
        assert_eq!(enumerate_compositions(2, 2).len(), 3);
        assert_eq!(enumerate_compositions(3, 2)[0], iv(&[2, 0, 0]));
    }

    #[test]
    fn vector_parsing() {
        assert_eq!("2,0,-1".parse::<IntVector>().unwrap(), iv(&[2, 0, -1]));
        assert!("2,,1".parse::<IntVector>().is_err());
        assert!("".parse::<IntVector>().is_err());
        assert_eq!(iv(&[2, 0, 1]).to_string(), "2,0,1");
    }
}

//! Free associative algebra on the twelve generators of `U_{r,s}(G2)`.
//!
//! Letters are ordered `f1 < f2 < w1' < w1'^-1 < w2' < w2'^-1 < w1 < w1^-1 <
//! w2 < w2^-1 < e1 < e2`; words are compared degree-lexicographically.

use crate::scalar::RatFunc;
use smallvec::SmallVec;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, serde::Serialize)]
pub enum Gen {
    F1,
    F2,
    W1p,
    W1pInv,
    W2p,
    W2pInv,
    W1,
    W1Inv,
    W2,
    W2Inv,
    E1,
    E2,
}

/// Structural view of a letter. Indices are 0 or 1.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Letter {
    E(usize),
    F(usize),
    /// `w_i^{±1}`
    W(usize, i32),
    /// `w_i'^{±1}`
    Wp(usize, i32),
}

impl Gen {
    pub const ALL: [Gen; 12] = [
        Gen::F1,
        Gen::F2,
        Gen::W1p,
        Gen::W1pInv,
        Gen::W2p,
        Gen::W2pInv,
        Gen::W1,
        Gen::W1Inv,
        Gen::W2,
        Gen::W2Inv,
        Gen::E1,
        Gen::E2,
    ];

    pub fn e(i: usize) -> Gen {
        [Gen::E1, Gen::E2][i]
    }

    pub fn f(i: usize) -> Gen {
        [Gen::F1, Gen::F2][i]
    }

    pub fn w(i: usize, sign: i32) -> Gen {
        match (i, sign > 0) {
            (0, true) => Gen::W1,
            (0, false) => Gen::W1Inv,
            (1, true) => Gen::W2,
            _ => Gen::W2Inv,
        }
    }

    pub fn wp(i: usize, sign: i32) -> Gen {
        match (i, sign > 0) {
            (0, true) => Gen::W1p,
            (0, false) => Gen::W1pInv,
            (1, true) => Gen::W2p,
            _ => Gen::W2pInv,
        }
    }

    pub fn letter(self) -> Letter {
        match self {
            Gen::E1 => Letter::E(0),
            Gen::E2 => Letter::E(1),
            Gen::F1 => Letter::F(0),
            Gen::F2 => Letter::F(1),
            Gen::W1 => Letter::W(0, 1),
            Gen::W1Inv => Letter::W(0, -1),
            Gen::W2 => Letter::W(1, 1),
            Gen::W2Inv => Letter::W(1, -1),
            Gen::W1p => Letter::Wp(0, 1),
            Gen::W1pInv => Letter::Wp(0, -1),
            Gen::W2p => Letter::Wp(1, 1),
            Gen::W2pInv => Letter::Wp(1, -1),
        }
    }

    pub fn from_letter(l: Letter) -> Gen {
        match l {
            Letter::E(i) => Gen::e(i),
            Letter::F(i) => Gen::f(i),
            Letter::W(i, s) => Gen::w(i, s),
            Letter::Wp(i, s) => Gen::wp(i, s),
        }
    }

    pub fn is_group_like(self) -> bool {
        matches!(self.letter(), Letter::W(..) | Letter::Wp(..))
    }

    /// Inverse of a group-like letter.
    pub fn inverse(self) -> Option<Gen> {
        match self.letter() {
            Letter::W(i, s) => Some(Gen::w(i, -s)),
            Letter::Wp(i, s) => Some(Gen::wp(i, -s)),
            _ => None,
        }
    }

    /// Root-lattice weight in the basis of simple roots.
    pub fn weight(self) -> Weight {
        match self.letter() {
            Letter::E(0) => Weight(1, 0),
            Letter::E(_) => Weight(0, 1),
            Letter::F(0) => Weight(-1, 0),
            Letter::F(_) => Weight(0, -1),
            _ => Weight(0, 0),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Gen::F1 => "f1",
            Gen::F2 => "f2",
            Gen::W1p => "w1'",
            Gen::W1pInv => "w1'^-1",
            Gen::W2p => "w2'",
            Gen::W2pInv => "w2'^-1",
            Gen::W1 => "w1",
            Gen::W1Inv => "w1^-1",
            Gen::W2 => "w2",
            Gen::W2Inv => "w2^-1",
            Gen::E1 => "e1",
            Gen::E2 => "e2",
        }
    }

    /// Base name without the inverse marker, and the exponent sign.
    fn base(self) -> (&'static str, i32) {
        match self.letter() {
            Letter::W(0, s) => ("w1", s),
            Letter::W(_, s) => ("w2", s),
            Letter::Wp(0, s) => ("w1'", s),
            Letter::Wp(_, s) => ("w2'", s),
            _ => (self.name(), 1),
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An element of the root lattice, `m1 * alpha1 + m2 * alpha2`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default, serde::Serialize)]
pub struct Weight(pub i32, pub i32);

impl std::ops::Add for Weight {
    type Output = Weight;
    fn add(self, o: Weight) -> Weight {
        Weight(self.0 + o.0, self.1 + o.1)
    }
}

impl std::ops::Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(-self.0, -self.1)
    }
}

/// A word in the generators, ordered degree-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub SmallVec<[Gen; 8]>);

impl Word {
    pub fn empty() -> Self {
        Word(SmallVec::new())
    }

    pub fn from_gens(g: &[Gen]) -> Self {
        Word(SmallVec::from_slice(g))
    }

    pub fn letter(g: Gen) -> Self {
        Self::from_gens(&[g])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn gens(&self) -> &[Gen] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn weight(&self) -> Weight {
        self.0.iter().fold(Weight(0, 0), |w, g| w + g.weight())
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Number of `e` letters and `f` letters.
    pub fn ef_degree(&self) -> (usize, usize) {
        let e = self.0.iter().filter(|g| matches!(g.letter(), Letter::E(_))).count();
        let f = self.0.iter().filter(|g| matches!(g.letter(), Letter::F(_))).count();
        (e, f)
    }

    pub fn render(&self) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        let mut parts: Vec<String> = Vec::new();
        let mut k = 0;
        while k < self.0.len() {
            let g = self.0[k];
            let mut n = 1;
            while k + n < self.0.len() && self.0[k + n] == g {
                n += 1;
            }
            let (base, sign) = g.base();
            let e = sign * n as i32;
            parts.push(if e == 1 { base.to_string() } else { format!("{base}^{e}") });
            k += n;
        }
        parts.join("*")
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.as_slice().cmp(other.0.as_slice()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// A finite `Q(r, s)`-linear combination of words. Zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct NcPoly {
    terms: BTreeMap<Word, RatFunc>,
}

impl NcPoly {
    pub fn zero() -> Self {
        NcPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::scalar(RatFunc::one())
    }

    pub fn scalar(c: RatFunc) -> Self {
        Self::term(c, Word::empty())
    }

    pub fn gen(g: Gen) -> Self {
        Self::term(RatFunc::one(), Word::letter(g))
    }

    pub fn word(w: Word) -> Self {
        Self::term(RatFunc::one(), w)
    }

    pub fn term(c: RatFunc, w: Word) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Word, RatFunc)>) -> Self {
        let mut p = Self::zero();
        for (w, c) in it {
            p.add_term(w, c);
        }
        p
    }

    pub fn add_term(&mut self, w: Word, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &RatFunc)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, RatFunc)> {
        self.terms.into_iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> RatFunc {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// The scalar if this is a multiple of the empty word.
    pub fn as_scalar(&self) -> Option<RatFunc> {
        match self.terms.len() {
            0 => Some(RatFunc::zero()),
            1 => {
                let (w, c) = self.terms.iter().next().unwrap();
                w.is_empty().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Largest word in deglex order with its coefficient.
    pub fn leading(&self) -> Option<(&Word, &RatFunc)> {
        self.terms.iter().next_back()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut p = self.clone();
        for (w, c) in &other.terms {
            p.add_term(w.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut p = self.clone();
        for (w, c) in &other.terms {
            p.add_term(w.clone(), c.neg());
        }
        p
    }

    pub fn neg(&self) -> Self {
        NcPoly { terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect() }
    }

    pub fn scale(&self, k: &RatFunc) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        NcPoly { terms: self.terms.iter().map(|(w, c)| (w.clone(), c.mul(k))).collect() }
    }

    /// Concatenation product in the free algebra.
    pub fn mul(&self, other: &Self) -> Self {
        let mut p = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                p.add_term(a.concat(b), ca.mul(cb));
            }
        }
        p
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// `[a, b] = ab - ba`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// Apply a map to each coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&RatFunc) -> RatFunc) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    /// The common weight of all terms, if homogeneous.
    pub fn weight(&self) -> Option<Weight> {
        let mut it = self.terms.keys().map(Word::weight);
        let w = it.next().unwrap_or_default();
        it.all(|x| x == w).then_some(w)
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    /// Rendered with the smallest word first.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let (neg, body) = render_term(c, w);
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }
}

/// Render `c * w` as a sign and a body.
pub(crate) fn render_term(c: &RatFunc, w: &Word) -> (bool, String) {
    let mono = c.num().is_monomial();
    let neg = mono && c.num().lead().is_some_and(|(_, k)| k < &num_bigint::BigInt::from(0));
    let mag = if neg { c.neg() } else { c.clone() };
    let coef = mag.render();
    let body = if w.is_empty() {
        if mono {
            coef
        } else {
            format!("({coef})")
        }
    } else if mag.is_one() {
        w.render()
    } else if mono {
        format!("{coef}*{}", w.render())
    } else {
        format!("({coef})*{}", w.render())
    };
    (neg, body)
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Root data of type G2 with `alpha1` short and `alpha2` long.
#[derive(Clone, Copy, Debug)]
pub struct CartanData;

impl CartanData {
    /// `a[i][j] = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)`.
    pub const A: [[i32; 2]; 2] = [[2, -3], [-1, 2]];
    /// `d_i = (alpha_i, alpha_i) / 2`.
    pub const D: [u32; 2] = [1, 3];
    /// Simple roots in the basis `eps1, eps2, eps3`.
    pub const SIMPLE_ROOTS: [[i32; 3]; 2] = [[1, -1, 0], [-2, 1, 1]];
    /// Positive roots as `(m1, m2)` with `m1 alpha1 + m2 alpha2`.
    pub const POSITIVE_ROOTS: [Weight; 6] =
        [Weight(1, 0), Weight(0, 1), Weight(1, 1), Weight(2, 1), Weight(3, 1), Weight(3, 2)];

    /// Symmetric form on the root lattice, computed from the eps-coordinates.
    pub fn form(a: Weight, b: Weight) -> i32 {
        let v = |w: Weight| {
            let mut out = [0; 3];
            for k in 0..3 {
                out[k] = w.0 * Self::SIMPLE_ROOTS[0][k] + w.1 * Self::SIMPLE_ROOTS[1][k];
            }
            out
        };
        let (x, y) = (v(a), v(b));
        (0..3).map(|k| x[k] * y[k]).sum()
    }

    /// The simple reflection `s_i`.
    pub fn reflect(i: usize, w: Weight) -> Weight {
        let pair = w.0 * Self::A[i][0] + w.1 * Self::A[i][1];
        if i == 0 {
            Weight(w.0 - pair, w.1)
        } else {
            Weight(w.0, w.1 - pair)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartan_matrix_from_roots() {
        let a = [Weight(1, 0), Weight(0, 1)];
        for i in 0..2 {
            for j in 0..2 {
                let v = 2 * CartanData::form(a[i], a[j]) / CartanData::form(a[i], a[i]);
                assert_eq!(v, CartanData::A[i][j]);
            }
            assert_eq!(CartanData::form(a[i], a[i]) as u32, 2 * CartanData::D[i]);
        }
    }

    #[test]
    fn reflections_permute_positive_roots() {
        for i in 0..2 {
            let simple = [Weight(1, 0), Weight(0, 1)][i];
            assert_eq!(CartanData::reflect(i, simple), -simple);
            for &b in &CartanData::POSITIVE_ROOTS {
                if b != simple {
                    assert!(CartanData::POSITIVE_ROOTS.contains(&CartanData::reflect(i, b)));
                }
            }
        }
    }

    #[test]
    fn deglex_order() {
        let a = Word::from_gens(&[Gen::E2, Gen::E1]);
        let b = Word::from_gens(&[Gen::E1, Gen::E1, Gen::E1]);
        let c = Word::from_gens(&[Gen::E1, Gen::E2]);
        assert!(a < b);
        assert!(c < a);
        assert!(Word::letter(Gen::F1) < Word::letter(Gen::W1p));
        assert!(Word::letter(Gen::W2pInv) < Word::letter(Gen::W1));
    }

    #[test]
    fn render_collapses_runs() {
        let w = Word::from_gens(&[Gen::E1, Gen::E1, Gen::E2, Gen::W1Inv, Gen::W1Inv]);
        assert_eq!(w.render(), "e1^2*e2*w1^-2");
    }

    #[test]
    fn render_poly() {
        let e12 = NcPoly::gen(Gen::E1)
            .mul(&NcPoly::gen(Gen::E2))
            .sub(&NcPoly::gen(Gen::E2).mul(&NcPoly::gen(Gen::E1)).scale(&RatFunc::rs_pow(0, 3)));
        assert_eq!(e12.render(), "e1*e2 - s^3*e2*e1");
    }
}

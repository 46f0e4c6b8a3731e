//! The Drinfeld double `D(B, B')` built from the skew-dual pairing.
//!
//! Elements are sums of `a ⊗ f` with `a` a normal word of `B` and `f` a
//! normal word of `B'`. The product is
//! `(a⊗f)(a'⊗f') = Σ <S(f1), a'1> <f3, a'3> a a'2 ⊗ f2 f'`.

use crate::free::{Gen, Letter, NcPoly, Word};
use crate::hopf::{antipode, coproduct_n, counit};
use crate::pairing::{Pairing, PairingError};
use crate::relations::{Params, OMEGA_F, OMEGA_PRIME_E};
use crate::rewrite::{RewriteError, RuleSet};
use crate::scalar::RatFunc;
use parking_lot::RwLock;
use serde_json::json;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DoubleError {
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    Pairing(#[from] PairingError),
}

/// `Σ c · (a ⊗ f)` with `a ∈ B`, `f ∈ B'`, both in normal form.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DoubleElem(BTreeMap<(Word, Word), RatFunc>);

impl DoubleElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(Word::empty(), Word::empty(), RatFunc::one())
    }

    pub fn term(a: Word, f: Word, c: RatFunc) -> Self {
        let mut d = Self::zero();
        d.add_term(a, f, c);
        d
    }

    pub fn add_term(&mut self, a: Word, f: Word, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        let key = (a, f);
        match self.0.get_mut(&key) {
            Some(v) => {
                *v = v.add(&c);
                if v.is_zero() {
                    self.0.remove(&key);
                }
            }
            None => {
                self.0.insert(key, c);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut d = self.clone();
        for ((a, f), c) in &o.0 {
            d.add_term(a.clone(), f.clone(), c.clone());
        }
        d
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&RatFunc::from_int(-1)))
    }

    pub fn scale(&self, k: &RatFunc) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self(self.0.iter().map(|(w, c)| (w.clone(), c.mul(k))).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &RatFunc)> {
        self.0.iter()
    }

    /// Image in `U` under `a ⊗ f -> a f`.
    pub fn embed(&self) -> NcPoly {
        NcPoly::from_terms(self.0.iter().map(|((a, f), c)| (a.concat(f), c.clone())))
    }

    pub fn render(&self) -> String {
        if self.0.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for ((a, f), c) in &self.0 {
            let a = if a.is_empty() { "1".to_string() } else { a.render() };
            let f = if f.is_empty() { "1".to_string() } else { f.render() };
            parts.push(format!("({}) {} ⊗ {}", c, a, f));
        }
        parts.join(" + ")
    }
}

/// The double together with the rule set used to normalise each factor.
pub struct Double {
    rules: Arc<RuleSet>,
    pairing: Pairing,
    nf: RwLock<HashMap<Word, Vec<(Word, RatFunc)>>>,
}

impl Double {
    pub fn new(params: Params) -> Self {
        Self::with_rules(RuleSet::shared(params))
    }

    pub fn with_rules(rules: Arc<RuleSet>) -> Self {
        let pairing = Pairing::new(rules.params());
        Double { rules, pairing, nf: RwLock::new(HashMap::new()) }
    }

    pub fn rules(&self) -> &RuleSet {
        &self.rules
    }

    pub fn pairing(&self) -> &Pairing {
        &self.pairing
    }

    fn normal_word(&self, w: &Word) -> Result<Vec<(Word, RatFunc)>, RewriteError> {
        if let Some(v) = self.nf.read().get(w) {
            return Ok(v.clone());
        }
        let n = self.rules.word_normal(w)?.to_ncpoly();
        let v: Vec<(Word, RatFunc)> = n.into_terms().collect();
        self.nf.write().insert(w.clone(), v.clone());
        Ok(v)
    }

    fn normal_poly(&self, p: &NcPoly) -> Result<Vec<(Word, RatFunc)>, RewriteError> {
        let mut acc = NcPoly::zero();
        for (w, c) in p.terms() {
            for (v, d) in self.normal_word(w)? {
                acc.add_term(v, d.mul(c));
            }
        }
        Ok(acc.into_terms().collect())
    }

    /// `a ⊗ f` for arbitrary (not necessarily normal) words.
    pub fn pure(&self, a: &Word, f: &Word) -> Result<DoubleElem, DoubleError> {
        let mut d = DoubleElem::zero();
        for (x, cx) in self.normal_word(a)? {
            for (y, cy) in self.normal_word(f)? {
                d.add_term(x.clone(), y, cx.mul(&cy));
            }
        }
        Ok(d)
    }

    /// `â` for `a ∈ B`.
    pub fn hat_a(&self, a: &NcPoly) -> Result<DoubleElem, DoubleError> {
        let mut d = DoubleElem::zero();
        for (x, c) in self.normal_poly(a)? {
            d.add_term(x, Word::empty(), c);
        }
        Ok(d)
    }

    /// `f̂` for `f ∈ B'`.
    pub fn hat_f(&self, f: &NcPoly) -> Result<DoubleElem, DoubleError> {
        let mut d = DoubleElem::zero();
        for (x, c) in self.normal_poly(f)? {
            d.add_term(Word::empty(), x, c);
        }
        Ok(d)
    }

    fn mul_terms(&self, a: &Word, f: &Word, a2: &Word, f2: &Word) -> Result<DoubleElem, DoubleError> {
        let mut out = DoubleElem::zero();
        if f.is_empty() {
            return self.pure(&a.concat(a2), f2);
        }
        if a2.is_empty() {
            return self.pure(a, &f.concat(f2));
        }
        let df = coproduct_n(&NcPoly::word(f.clone()), 3, false);
        let da = coproduct_n(&NcPoly::word(a2.clone()), 3, false);
        for (fs, cf) in df.terms() {
            for (as_, ca) in da.terms() {
                let p3 = self.pairing.pair_words(&fs[2], &as_[2])?;
                if p3.is_zero() {
                    continue;
                }
                let p1 = self.pairing.pair(&antipode(&NcPoly::word(fs[0].clone())), &NcPoly::word(as_[0].clone()))?;
                if p1.is_zero() {
                    continue;
                }
                let k = p1.mul(&p3).mul(cf).mul(ca);
                out = out.add(&self.pure(&a.concat(&as_[1]), &fs[1].concat(f2))?.scale(&k));
            }
        }
        Ok(out)
    }

    /// Bilinear product of the double.
    pub fn mul(&self, p: &DoubleElem, q: &DoubleElem) -> Result<DoubleElem, DoubleError> {
        let mut out = DoubleElem::zero();
        for ((a, f), c) in p.terms() {
            for ((a2, f2), c2) in q.terms() {
                out = out.add(&self.mul_terms(a, f, a2, f2)?.scale(&c.mul(c2)));
            }
        }
        Ok(out)
    }

    /// Right-hand side of `f̂ â = Σ <S(f1), a1> <f3, a3> â2 f̂2`.
    pub fn cross_relation(&self, f: &Word, a: &Word) -> Result<DoubleElem, DoubleError> {
        self.mul_terms(&Word::empty(), f, a, &Word::empty())
    }

    /// Both sides of `Σ <f1, a1> f̂2 â2 = Σ â1 f̂1 <f2, a2>`, the left one
    /// multiplied out in the double.
    pub fn cross_relation_alt(&self, f: &Word, a: &Word) -> Result<(DoubleElem, DoubleElem), DoubleError> {
        let df = coproduct_n(&NcPoly::word(f.clone()), 2, false);
        let da = coproduct_n(&NcPoly::word(a.clone()), 2, false);
        let mut lhs = DoubleElem::zero();
        let mut rhs = DoubleElem::zero();
        for (fs, cf) in df.terms() {
            for (as_, ca) in da.terms() {
                let k = cf.mul(ca);
                let l = self.pairing.pair_words(&fs[0], &as_[0])?;
                if !l.is_zero() {
                    lhs = lhs.add(&self.cross_relation(&fs[1], &as_[1])?.scale(&l.mul(&k)));
                }
                let r = self.pairing.pair_words(&fs[1], &as_[1])?;
                if !r.is_zero() {
                    rhs = rhs.add(&self.pure(&as_[0], &fs[0])?.scale(&r.mul(&k)));
                }
            }
        }
        Ok((lhs, rhs))
    }

    /// `S(a ⊗ f) = (1 ⊗ S(f)) (S(a) ⊗ 1)`.
    pub fn antipode(&self, x: &DoubleElem) -> Result<DoubleElem, DoubleError> {
        let mut out = DoubleElem::zero();
        for ((a, f), c) in x.terms() {
            let sf = self.hat_f(&antipode(&NcPoly::word(f.clone())))?;
            let sa = self.hat_a(&antipode(&NcPoly::word(a.clone())))?;
            out = out.add(&self.mul(&sf, &sa)?.scale(c));
        }
        Ok(out)
    }

    /// Tensor-product coproduct, as pairs of double elements.
    pub fn coproduct(&self, x: &DoubleElem) -> Result<Vec<(DoubleElem, DoubleElem)>, DoubleError> {
        let mut out = Vec::new();
        for ((a, f), c) in x.terms() {
            let da = coproduct_n(&NcPoly::word(a.clone()), 2, false);
            let df = coproduct_n(&NcPoly::word(f.clone()), 2, false);
            for (as_, ca) in da.terms() {
                for (fs, cf) in df.terms() {
                    let left = self.pure(&as_[0], &fs[0])?.scale(&c.mul(ca).mul(cf));
                    out.push((left, self.pure(&as_[1], &fs[1])?));
                }
            }
        }
        Ok(out)
    }

    pub fn counit(&self, x: &DoubleElem) -> RatFunc {
        x.terms().fold(RatFunc::zero(), |acc, ((a, f), c)| {
            acc.add(&c.mul(&counit(&NcPoly::word(a.clone()))).mul(&counit(&NcPoly::word(f.clone()))))
        })
    }

    /// Both antipode identities `m(S⊗id)Δ(x) = ε(x) = m(id⊗S)Δ(x)`.
    pub fn antipode_axiom_holds(&self, x: &DoubleElem) -> Result<bool, DoubleError> {
        let eps = DoubleElem::one().scale(&self.counit(x));
        let mut left = DoubleElem::zero();
        let mut right = DoubleElem::zero();
        for (x1, x2) in self.coproduct(x)? {
            left = left.add(&self.mul(&self.antipode(&x1)?, &x2)?);
            right = right.add(&self.mul(&x1, &self.antipode(&x2)?)?);
        }
        Ok(left == eps && right == eps)
    }
}

/// The relation family of the presentation that a cross pair realises.
pub fn cross_relation_id(f: Gen, a: Gen) -> &'static str {
    match (f.letter(), a.letter()) {
        (Letter::F(_), Letter::E(_)) => "ef-commutator",
        (Letter::F(_), Letter::W(..)) => "omega-conj-f",
        (Letter::Wp(..), Letter::E(_)) => "omega-prime-conj-e",
        _ => "group-commute",
    }
}

/// The swap of `f a` into `a f` read off from the defining relations.
pub fn expected_cross(d: &Double, f: Gen, a: Gen) -> Result<DoubleElem, DoubleError> {
    let p = d.rules().params();
    let fw = Word::letter(f);
    let aw = Word::letter(a);
    let swapped = d.pure(&aw, &fw)?;
    Ok(match (f.letter(), a.letter()) {
        (Letter::F(i), Letter::E(j)) => {
            // f_i e_j = e_j f_i - δ_ij (w_i - w_i') / (rho_i - sigma_i)
            if i != j {
                swapped
            } else {
                let k = d.hat_a(&NcPoly::gen(Gen::w(i, 1)))?.sub(&d.hat_f(&NcPoly::gen(Gen::wp(i, 1)))?);
                swapped.sub(&k.scale(&p.ef_factor(i)))
            }
        }
        (Letter::F(i), Letter::W(j, 1)) => {
            // w_j f_i w_j^-1 = c f_i, so f_i w_j = c^-1 w_j f_i
            let (x, y) = p.apply_exp(OMEGA_F[j][i]);
            swapped.scale(&RatFunc::rs_pow(-x, -y))
        }
        (Letter::Wp(j, 1), Letter::E(i)) => {
            let (x, y) = p.apply_exp(OMEGA_PRIME_E[j][i]);
            swapped.scale(&RatFunc::rs_pow(x, y))
        }
        _ => swapped,
    })
}

/// One line of the cross-pair report.
#[derive(Clone, Debug)]
pub struct CrossPairResult {
    pub f: Gen,
    pub a: Gen,
    pub relation_id: &'static str,
    /// `(8)` equals the relation read off the presentation.
    pub matches_presentation: bool,
    /// `f a` and the image of `(8)` agree in `U`.
    pub matches_in_u: bool,
    /// The two sides of the alternative cross relation agree.
    pub alt_form_agrees: bool,
}

impl CrossPairResult {
    pub fn passed(&self) -> bool {
        self.matches_presentation && self.matches_in_u && self.alt_form_agrees
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "pair": format!("{},{}", self.f.name(), self.a.name()),
            "relation_id": self.relation_id,
            "status": if self.passed() { "pass" } else { "fail" },
            "matches_presentation": self.matches_presentation,
            "matches_in_u": self.matches_in_u,
            "alt_form_agrees": self.alt_form_agrees,
        })
    }
}

pub const CROSS_F: [Gen; 4] = [Gen::F1, Gen::F2, Gen::W1p, Gen::W2p];
pub const CROSS_A: [Gen; 4] = [Gen::E1, Gen::E2, Gen::W1, Gen::W2];

pub fn verify_cross_pair(d: &Double, f: Gen, a: Gen) -> Result<CrossPairResult, DoubleError> {
    let fw = Word::letter(f);
    let aw = Word::letter(a);
    let got = d.cross_relation(&fw, &aw)?;
    let matches_presentation = got == expected_cross(d, f, a)?;
    let fa = NcPoly::word(fw.concat(&aw));
    let matches_in_u = d.rules().equal(&fa, &got.embed())?;
    let (lhs, rhs) = d.cross_relation_alt(&fw, &aw)?;
    Ok(CrossPairResult {
        f,
        a,
        relation_id: cross_relation_id(f, a),
        matches_presentation,
        matches_in_u,
        alt_form_agrees: lhs == rhs,
    })
}

/// All sixteen generator cross pairs.
pub fn verify_double_presentation(d: &Double) -> Result<Vec<CrossPairResult>, DoubleError> {
    let mut out = Vec::new();
    for f in CROSS_F {
        for a in CROSS_A {
            out.push(verify_cross_pair(d, f, a)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f1_e1_cross() {
        let d = Double::new(Params::Standard);
        let got = d.cross_relation(&Word::letter(Gen::F1), &Word::letter(Gen::E1)).unwrap();
        assert_eq!(got, expected_cross(&d, Gen::F1, Gen::E1).unwrap());
        assert_eq!(got.terms().count(), 3);
    }

    #[test]
    fn w2p_e1_scalar() {
        let d = Double::new(Params::Standard);
        let got = d.cross_relation(&Word::letter(Gen::W2p), &Word::letter(Gen::E1)).unwrap();
        let want = DoubleElem::term(Word::letter(Gen::E1), Word::letter(Gen::W2p), RatFunc::rs_pow(0, -3));
        assert_eq!(got, want);
    }

    #[test]
    fn embeddings_collapse() {
        let d = Double::new(Params::Standard);
        let a = d.hat_a(&NcPoly::gen(Gen::E1)).unwrap();
        let b = d.hat_a(&NcPoly::gen(Gen::E2)).unwrap();
        assert_eq!(d.mul(&a, &b).unwrap(), d.pure(&Word::from_gens(&[Gen::E1, Gen::E2]), &Word::empty()).unwrap());
    }
}

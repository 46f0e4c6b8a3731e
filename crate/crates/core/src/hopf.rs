//! Coproduct, counit, antipode and adjoint actions.

use crate::free::{Gen, Letter, NcPoly, Word};
use crate::rewrite::{RewriteError, RuleSet};
use crate::scalar::RatFunc;
use std::collections::BTreeMap;
use std::fmt;

/// A linear combination of `w_1 ⊗ ... ⊗ w_n`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TensorPoly {
    slots: usize,
    terms: BTreeMap<Vec<Word>, RatFunc>,
}

impl TensorPoly {
    pub fn zero(slots: usize) -> Self {
        TensorPoly { slots, terms: BTreeMap::new() }
    }

    /// `1 ⊗ ... ⊗ 1`.
    pub fn unit(slots: usize) -> Self {
        let mut t = Self::zero(slots);
        t.add_term(vec![Word::empty(); slots], RatFunc::one());
        t
    }

    pub fn slots(&self) -> usize {
        self.slots
    }

    pub fn add_term(&mut self, key: Vec<Word>, c: RatFunc) {
        debug_assert_eq!(key.len(), self.slots);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &RatFunc)> {
        self.terms.iter()
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

    pub fn add(&self, o: &Self) -> Self {
        let mut t = self.clone();
        for (k, c) in &o.terms {
            t.add_term(k.clone(), c.clone());
        }
        t
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut t = self.clone();
        for (k, c) in &o.terms {
            t.add_term(k.clone(), c.neg());
        }
        t
    }

    pub fn scale(&self, k: &RatFunc) -> Self {
        let mut t = Self::zero(self.slots);
        for (w, c) in &self.terms {
            t.add_term(w.clone(), c.mul(k));
        }
        t
    }

    /// Slotwise product.
    pub fn mul(&self, o: &Self) -> Self {
        let mut t = Self::zero(self.slots);
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                let key = a.iter().zip(b).map(|(x, y)| x.concat(y)).collect();
                t.add_term(key, ca.mul(cb));
            }
        }
        t
    }

    /// Apply a linear map to one slot.
    pub fn map_slot(&self, slot: usize, f: impl Fn(&Word) -> NcPoly) -> Self {
        let mut t = Self::zero(self.slots);
        for (k, c) in &self.terms {
            for (w, d) in f(&k[slot]).terms() {
                let mut key = k.clone();
                key[slot] = w.clone();
                t.add_term(key, c.mul(d));
            }
        }
        t
    }

    /// Apply a linear map to one slot and then expand it into several
    /// slots (`f` returns a tensor with `width` slots).
    pub fn expand_slot(&self, slot: usize, width: usize, f: impl Fn(&Word) -> TensorPoly) -> Self {
        let mut t = Self::zero(self.slots + width - 1);
        for (k, c) in &self.terms {
            for (ws, d) in f(&k[slot]).terms() {
                let mut key = k[..slot].to_vec();
                key.extend(ws.iter().cloned());
                key.extend(k[slot + 1..].iter().cloned());
                t.add_term(key, c.mul(d));
            }
        }
        t
    }

    /// Multiply the slots together into a single element.
    pub fn multiply_out(&self) -> NcPoly {
        NcPoly::from_terms(
            self.terms.iter().map(|(k, c)| (k.iter().fold(Word::empty(), |acc, w| acc.concat(w)), c.clone())),
        )
    }

    /// Straighten every slot so the result is expressed in the tensor power
    /// of the normal-form basis.
    pub fn straighten(&self, rules: &RuleSet) -> Result<TensorPoly, RewriteError> {
        let mut t = TensorPoly::zero(self.slots);
        for (k, c) in &self.terms {
            let mut partial: Vec<(Vec<Word>, RatFunc)> = vec![(Vec::new(), c.clone())];
            for w in k {
                let nf = rules.straighten(&NcPoly::word(w.clone()))?;
                let mut next = Vec::new();
                for (prefix, pc) in &partial {
                    for (x, xc) in nf.terms() {
                        let mut p = prefix.clone();
                        p.push(x.clone());
                        next.push((p, pc.mul(xc)));
                    }
                }
                partial = next;
            }
            for (key, v) in partial {
                t.add_term(key, v);
            }
        }
        Ok(t)
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (ws, c)) in self.terms.iter().enumerate() {
            let body = ws.iter().map(Word::render).collect::<Vec<_>>().join(" ⊗ ");
            let neg = c.num().is_monomial() && c.num().lead().is_some_and(|(_, x)| x.sign() == num_bigint::Sign::Minus);
            let mag = if neg { c.neg() } else { c.clone() };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if mag.is_one() {
                out.push_str(&format!("({body})"));
            } else if mag.num().is_monomial() {
                out.push_str(&format!("{mag}*({body})"));
            } else {
                out.push_str(&format!("({mag})*({body})"));
            }
        }
        out
    }
}

impl fmt::Display for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// `n`-fold coproduct of a single generator.
fn gen_coproduct(g: Gen, n: usize, op: bool) -> TensorPoly {
    let mut t = TensorPoly::zero(n);
    let one = Word::empty();
    match g.letter() {
        Letter::W(..) | Letter::Wp(..) => {
            t.add_term(vec![Word::letter(g); n], RatFunc::one());
        }
        Letter::E(i) => {
            // slot k holds e_i, earlier slots w_i, later slots 1
            for k in 0..n {
                let mut key = vec![one.clone(); n];
                for s in key.iter_mut().take(k) {
                    *s = Word::letter(Gen::w(i, 1));
                }
                key[k] = Word::letter(g);
                if op {
                    key.reverse();
                }
                t.add_term(key, RatFunc::one());
            }
        }
        Letter::F(i) => {
            // slot k holds f_i, earlier slots 1, later slots w_i'
            for k in 0..n {
                let mut key = vec![one.clone(); n];
                key[k] = Word::letter(g);
                for s in key.iter_mut().skip(k + 1) {
                    *s = Word::letter(Gen::wp(i, 1));
                }
                if op {
                    key.reverse();
                }
                t.add_term(key, RatFunc::one());
            }
        }
    }
    t
}

/// The iterated coproduct `Δ^(n)` (or its opposite) into `n` tensor slots.
pub fn coproduct_n(x: &NcPoly, n: usize, op: bool) -> TensorPoly {
    assert!(n >= 1, "coproduct needs at least one slot");
    let mut out = TensorPoly::zero(n);
    for (w, c) in x.terms() {
        let mut acc = TensorPoly::unit(n);
        for &g in w.gens() {
            acc = acc.mul(&gen_coproduct(g, n, op));
        }
        out = out.add(&acc.scale(c));
    }
    out
}

pub fn coproduct(x: &NcPoly) -> TensorPoly {
    coproduct_n(x, 2, false)
}

pub fn counit(x: &NcPoly) -> RatFunc {
    x.terms()
        .filter(|(w, _)| w.gens().iter().all(|g| g.is_group_like()))
        .fold(RatFunc::zero(), |acc, (_, c)| acc.add(c))
}

fn gen_antipode(g: Gen) -> NcPoly {
    match g.letter() {
        Letter::W(..) | Letter::Wp(..) => NcPoly::gen(g.inverse().unwrap()),
        Letter::E(i) => NcPoly::word(Word::from_gens(&[Gen::w(i, -1), g])).neg(),
        Letter::F(i) => NcPoly::word(Word::from_gens(&[g, Gen::wp(i, -1)])).neg(),
    }
}

/// The antipode, extended as an anti-homomorphism of the free algebra.
pub fn antipode(x: &NcPoly) -> NcPoly {
    let mut out = NcPoly::zero();
    for (w, c) in x.terms() {
        let img = w.gens().iter().rev().fold(NcPoly::one(), |acc, &g| acc.mul(&gen_antipode(g)));
        out = out.add(&img.scale(c));
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdSide {
    Left,
    Right,
}

/// `ad_l a (b) = Σ a(1) b S(a(2))`, `ad_r a (b) = Σ S(a(1)) b a(2)`,
/// straightened in `rules`.
pub fn adjoint(side: AdSide, a: &NcPoly, b: &NcPoly, rules: &RuleSet) -> Result<NcPoly, RewriteError> {
    let d = coproduct(a);
    let mut acc = NcPoly::zero();
    for (k, c) in d.terms() {
        let x = NcPoly::word(k[0].clone());
        let y = NcPoly::word(k[1].clone());
        let term = match side {
            AdSide::Left => x.mul(b).mul(&antipode(&y)),
            AdSide::Right => antipode(&x).mul(b).mul(&y),
        };
        acc = acc.add(&term.scale(c));
    }
    rules.straighten(&acc)
}

/// Outcome of one Hopf-axiom check.
#[derive(Clone, Debug)]
pub struct AxiomFailure {
    pub axiom: &'static str,
    pub input: String,
}

/// Check the bialgebra and antipode axioms on `x`.
pub fn check_hopf_axioms(x: &NcPoly, rules: &RuleSet) -> Result<Vec<AxiomFailure>, RewriteError> {
    let mut failures = Vec::new();
    let d = coproduct(x);
    let fail = |axiom, failures: &mut Vec<AxiomFailure>| failures.push(AxiomFailure { axiom, input: x.render() });
    // coassociativity
    let left = d.expand_slot(0, 2, |w| coproduct(&NcPoly::word(w.clone())));
    let right = d.expand_slot(1, 2, |w| coproduct(&NcPoly::word(w.clone())));
    if !left.sub(&right).straighten(rules)?.is_zero() {
        fail("coassociativity", &mut failures);
    }
    if !coproduct_n(x, 3, false).sub(&left).straighten(rules)?.is_zero() {
        fail("iterated-coproduct", &mut failures);
    }
    // counit
    let eps_left = d.map_slot(0, |w| NcPoly::scalar(counit(&NcPoly::word(w.clone())))).multiply_out();
    let eps_right = d.map_slot(1, |w| NcPoly::scalar(counit(&NcPoly::word(w.clone())))).multiply_out();
    if !rules.equal(&eps_left, x)? || !rules.equal(&eps_right, x)? {
        fail("counit", &mut failures);
    }
    // antipode
    let unit = NcPoly::scalar(counit(x));
    let s_left = d.map_slot(0, |w| antipode(&NcPoly::word(w.clone()))).multiply_out();
    let s_right = d.map_slot(1, |w| antipode(&NcPoly::word(w.clone()))).multiply_out();
    if !rules.equal(&s_left, &unit)? || !rules.equal(&s_right, &unit)? {
        fail("antipode", &mut failures);
    }
    Ok(failures)
}

/// Check that `Δ`, `ε` and `S` annihilate a relation element.
pub fn check_relation_compatible(rel: &NcPoly, rules: &RuleSet) -> Result<bool, RewriteError> {
    Ok(coproduct(rel).straighten(rules)?.is_zero() && counit(rel).is_zero() && rules.is_zero(&antipode(rel))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relations::Params;

    #[test]
    fn coproduct_of_e() {
        let d = coproduct(&NcPoly::gen(Gen::E1));
        assert_eq!(d.render(), "(w1 ⊗ e1) + (e1 ⊗ 1)");
    }

    #[test]
    fn op_reverses_slots() {
        let x = NcPoly::gen(Gen::F2);
        let a = coproduct_n(&x, 3, false);
        let b = coproduct_n(&x, 3, true);
        let mut rev = TensorPoly::zero(3);
        for (k, c) in a.terms() {
            rev.add_term(k.iter().rev().cloned().collect(), c.clone());
        }
        assert_eq!(rev, b);
    }

    #[test]
    fn antipode_is_anti() {
        let x = NcPoly::gen(Gen::E1).mul(&NcPoly::gen(Gen::F2));
        let want = antipode(&NcPoly::gen(Gen::F2)).mul(&antipode(&NcPoly::gen(Gen::E1)));
        assert_eq!(antipode(&x), want);
    }

    #[test]
    fn left_adjoint_gives_root_vector() {
        let rules = RuleSet::free(Params::Standard);
        let got = adjoint(AdSide::Left, &NcPoly::gen(Gen::E1), &NcPoly::gen(Gen::E2), &rules).unwrap();
        let want = NcPoly::gen(Gen::E1)
            .mul(&NcPoly::gen(Gen::E2))
            .sub(&NcPoly::gen(Gen::E2).mul(&NcPoly::gen(Gen::E1)).scale(&RatFunc::rs_pow(0, 3)));
        assert_eq!(got, want);
    }
}

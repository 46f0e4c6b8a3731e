//! The skew-dual pairing between `B' = <f_i, w_i'^±1>` and `B = <e_i, w_i^±1>`.
//!
//! On generators
//! `<f_i, e_j> = δ_ij / (s_i - r_i)`, `<w_i', w_j> = r^a s^b` from
//! [`OMEGA_E`], and all mixed values vanish. It extends by
//! `<f, a1 a2> = <Δ^op(f), a1 ⊗ a2>` and `<f1 f2, a> = <f1 ⊗ f2, Δ(a)>`.

use crate::free::{Gen, Letter, NcPoly, Weight, Word};
use crate::hopf::{antipode, coproduct_n};
use crate::relations::{Params, OMEGA_E};
use crate::scalar::RatFunc;
use parking_lot::RwLock;
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PairingError {
    #[error("left argument must be a word in f_i and w_i' letters: {0}")]
    NotInBPrime(String),
    #[error("right argument must be a word in e_i and w_i letters: {0}")]
    NotInB(String),
    #[error("element is not one-sided: {0}")]
    NotOneSided(String),
}

/// Generator values of the pairing for one parameter choice.
pub struct Pairing {
    params: Params,
    fe: [RatFunc; 2],
    /// `<w_i', w_j>` as `r^a s^b`
    ww: [[(i32, i32); 2]; 2],
    memo: RwLock<HashMap<(Word, Word), RatFunc>>,
}

impl Pairing {
    pub fn new(params: Params) -> Self {
        let fe = [0, 1].map(|i| params.sigma_i(i).sub(&params.rho_i(i)).inv().unwrap());
        let mut ww = [[(0, 0); 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                ww[i][j] = params.apply_exp(OMEGA_E[j][i]);
            }
        }
        Pairing { params, fe, ww, memo: RwLock::new(HashMap::new()) }
    }

    pub fn params(&self) -> Params {
        self.params
    }

    /// `<f_i, e_i>`.
    pub fn fe(&self, i: usize) -> &RatFunc {
        &self.fe[i]
    }

    /// `<w_i'^a, w_j^b>` as exponents of `r` and `s`.
    pub fn ww_exp(&self, i: usize, a: i32, j: usize, b: i32) -> (i32, i32) {
        let (x, y) = self.ww[i][j];
        (a * b * x, a * b * y)
    }

    pub fn ww(&self, i: usize, j: usize) -> RatFunc {
        let (x, y) = self.ww[i][j];
        RatFunc::rs_pow(x, y)
    }

    /// Pairing of two single generators.
    pub fn gen_pair(&self, u: Gen, v: Gen) -> Result<RatFunc, PairingError> {
        Ok(match (u.letter(), v.letter()) {
            (Letter::F(i), Letter::E(j)) => {
                if i == j {
                    self.fe[i].clone()
                } else {
                    RatFunc::zero()
                }
            }
            (Letter::Wp(i, a), Letter::W(j, b)) => {
                let (x, y) = self.ww_exp(i, a, j, b);
                RatFunc::rs_pow(x, y)
            }
            (Letter::F(_), Letter::W(..)) | (Letter::Wp(..), Letter::E(_)) => RatFunc::zero(),
            (Letter::E(_) | Letter::W(..), _) => return Err(PairingError::NotInBPrime(u.name().into())),
            (_, Letter::F(_) | Letter::Wp(..)) => return Err(PairingError::NotInB(v.name().into())),
        })
    }

    fn check_words(&self, u: &Word, v: &Word) -> Result<(), PairingError> {
        if u.gens().iter().any(|g| matches!(g.letter(), Letter::E(_) | Letter::W(..))) {
            return Err(PairingError::NotInBPrime(u.render()));
        }
        if v.gens().iter().any(|g| matches!(g.letter(), Letter::F(_) | Letter::Wp(..))) {
            return Err(PairingError::NotInB(v.render()));
        }
        Ok(())
    }

    /// `<u, v>` for words, peeling the leftmost letter of `v`.
    pub fn pair_words(&self, u: &Word, v: &Word) -> Result<RatFunc, PairingError> {
        self.check_words(u, v)?;
        Ok(self.pair_rec(u, v))
    }

    /// `χ(u, w_j^b)`: `f_i` counts as `w_i'`.
    fn chi_exp(&self, u: &[Gen], j: usize, b: i32) -> (i32, i32) {
        let mut out = (0, 0);
        for g in u {
            let (i, a) = match g.letter() {
                Letter::F(i) => (i, 1),
                Letter::Wp(i, a) => (i, a),
                _ => unreachable!(),
            };
            let (x, y) = self.ww_exp(i, a, j, b);
            out = (out.0 + x, out.1 + y);
        }
        out
    }

    fn pair_rec(&self, u: &Word, v: &Word) -> RatFunc {
        if v.is_empty() {
            return if u.gens().iter().all(|g| g.is_group_like()) { RatFunc::one() } else { RatFunc::zero() };
        }
        if u.weight() + v.weight() != Weight(0, 0) {
            return RatFunc::zero();
        }
        let key = (u.clone(), v.clone());
        if let Some(c) = self.memo.read().get(&key) {
            return c.clone();
        }
        let head = v.gens()[0];
        let rest = Word::from_gens(&v.gens()[1..]);
        let val = match head.letter() {
            Letter::W(j, b) => {
                let (x, y) = self.chi_exp(u.gens(), j, b);
                self.pair_rec(u, &rest).mul(&RatFunc::rs_pow(x, y))
            }
            Letter::E(j) => {
                let mut acc = RatFunc::zero();
                let mut prefix = (0, 0);
                for (k, g) in u.gens().iter().enumerate() {
                    if g.letter() == Letter::F(j) {
                        let mut rem: Vec<Gen> = u.gens()[..k].to_vec();
                        rem.extend_from_slice(&u.gens()[k + 1..]);
                        let inner = self.pair_rec(&Word::from_gens(&rem), &rest);
                        if !inner.is_zero() {
                            acc = acc.add(&inner.mul(&self.fe[j]).mul(&RatFunc::rs_pow(prefix.0, prefix.1)));
                        }
                    }
                    let (x, y) = self.chi_exp(std::slice::from_ref(g), j, 1);
                    prefix = (prefix.0 + x, prefix.1 + y);
                }
                acc
            }
            _ => unreachable!(),
        };
        self.memo.write().insert(key, val.clone());
        val
    }

    /// Bilinear extension of [`Pairing::pair_words`].
    pub fn pair(&self, u: &NcPoly, v: &NcPoly) -> Result<RatFunc, PairingError> {
        let mut acc = RatFunc::zero();
        for (a, ca) in u.terms() {
            for (b, cb) in v.terms() {
                let p = self.pair_words(a, b)?;
                if !p.is_zero() {
                    acc = acc.add(&p.mul(ca).mul(cb));
                }
            }
        }
        Ok(acc)
    }

    /// Independent evaluation: split `v` by the iterated coproduct into one
    /// slot per letter of `u`, then pair each letter with its slot by
    /// splitting the letter with the iterated opposite coproduct.
    pub fn pair_words_by_coproduct(&self, u: &Word, v: &Word) -> Result<RatFunc, PairingError> {
        self.check_words(u, v)?;
        if u.is_empty() {
            return Ok(if v.gens().iter().all(|g| g.is_group_like()) { RatFunc::one() } else { RatFunc::zero() });
        }
        let split = coproduct_n(&NcPoly::word(v.clone()), u.len(), false);
        let mut acc = RatFunc::zero();
        for (slots, c) in split.terms() {
            let mut val = c.clone();
            for (g, w) in u.gens().iter().zip(slots) {
                val = val.mul(&self.letter_with_word(*g, w)?);
                if val.is_zero() {
                    break;
                }
            }
            acc = acc.add(&val);
        }
        Ok(acc)
    }

    fn letter_with_word(&self, g: Gen, w: &Word) -> Result<RatFunc, PairingError> {
        if w.is_empty() {
            return Ok(if g.is_group_like() { RatFunc::one() } else { RatFunc::zero() });
        }
        let split = coproduct_n(&NcPoly::gen(g), w.len(), true);
        let mut acc = RatFunc::zero();
        for (slots, c) in split.terms() {
            let mut val = c.clone();
            for (x, &y) in slots.iter().zip(w.gens()) {
                let xg = match x.gens() {
                    [] => {
                        // <1, y> = ε(y)
                        if y.is_group_like() {
                            continue;
                        }
                        val = RatFunc::zero();
                        break;
                    }
                    [xg] => *xg,
                    _ => unreachable!("coproduct of a letter has single-letter slots"),
                };
                val = val.mul(&self.gen_pair(xg, y)?);
                if val.is_zero() {
                    break;
                }
            }
            acc = acc.add(&val);
        }
        Ok(acc)
    }

    pub fn pair_by_coproduct(&self, u: &NcPoly, v: &NcPoly) -> Result<RatFunc, PairingError> {
        let mut acc = RatFunc::zero();
        for (a, ca) in u.terms() {
            for (b, cb) in v.terms() {
                acc = acc.add(&self.pair_words_by_coproduct(a, b)?.mul(ca).mul(cb));
            }
        }
        Ok(acc)
    }

    /// True iff a one-sided homogeneous element pairs to zero with every word
    /// of the opposite side at the matching weight.
    pub fn zero_oracle(&self, x: &NcPoly) -> Result<bool, PairingError> {
        if x.is_zero() {
            return Ok(true);
        }
        let mut has_e = false;
        let mut has_f = false;
        for (w, _) in x.terms() {
            for g in w.gens() {
                match g.letter() {
                    Letter::E(_) => has_e = true,
                    Letter::F(_) => has_f = true,
                    _ => return Err(PairingError::NotOneSided(x.render())),
                }
            }
        }
        if has_e && has_f {
            return Err(PairingError::NotOneSided(x.render()));
        }
        let Some(wt) = x.weight() else {
            // distinct weight components pair independently
            let mut parts: HashMap<Weight, NcPoly> = HashMap::new();
            for (w, c) in x.terms() {
                parts.entry(w.weight()).or_default().add_term(w.clone(), c.clone());
            }
            for p in parts.values() {
                if !self.zero_oracle(p)? {
                    return Ok(false);
                }
            }
            return Ok(true);
        };
        let (m1, m2) = (wt.0.unsigned_abs() as usize, wt.1.unsigned_abs() as usize);
        let side = if has_e { Gen::f } else { Gen::e };
        for w in words_of_weight(m1, m2, side) {
            let dual = NcPoly::word(w);
            let v = if has_e { self.pair(&dual, x)? } else { self.pair(x, &dual)? };
            if !v.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `<S(u), S(v)> = <u, v>` for words.
    pub fn pair_antipode_check(&self, u: &Word, v: &Word) -> Result<bool, PairingError> {
        let lhs = self.pair(&antipode(&NcPoly::word(u.clone())), &antipode(&NcPoly::word(v.clone())))?;
        Ok(lhs == self.pair_words(u, v)?)
    }
}

/// All words with `m1` copies of `letter(0)` and `m2` of `letter(1)`, in
/// increasing deglex order.
pub fn words_of_weight(m1: usize, m2: usize, letter: fn(usize) -> Gen) -> Vec<Word> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m1 + m2);
    fn go(a: usize, b: usize, cur: &mut Vec<Gen>, out: &mut Vec<Word>, letter: fn(usize) -> Gen) {
        if a == 0 && b == 0 {
            out.push(Word::from_gens(cur));
            return;
        }
        let mut opts = Vec::new();
        if a > 0 {
            opts.push((letter(0), a - 1, b));
        }
        if b > 0 {
            opts.push((letter(1), a, b - 1));
        }
        opts.sort_by_key(|o| o.0);
        for (g, a2, b2) in opts {
            cur.push(g);
            go(a2, b2, cur, out, letter);
            cur.pop();
        }
    }
    go(m1, m2, &mut cur, &mut out, letter);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(g: &[Gen]) -> Word {
        Word::from_gens(g)
    }

    #[test]
    fn generator_values() {
        let p = Pairing::new(Params::Standard);
        let fe = RatFunc::s().sub(&RatFunc::r()).inv().unwrap();
        assert_eq!(p.pair_words(&w(&[Gen::F1]), &w(&[Gen::E1])).unwrap(), fe);
        assert_eq!(p.pair_words(&w(&[Gen::W1p]), &w(&[Gen::W2])).unwrap(), RatFunc::rs_pow(-3, 0));
        assert_eq!(p.pair_words(&w(&[Gen::W2pInv]), &w(&[Gen::W1])).unwrap(), RatFunc::rs_pow(0, -3));
        assert!(p.pair_words(&w(&[Gen::F1]), &w(&[Gen::E2])).unwrap().is_zero());
    }

    #[test]
    fn wrong_side_is_an_error() {
        let p = Pairing::new(Params::Standard);
        assert!(p.pair_words(&w(&[Gen::E1]), &w(&[Gen::E1])).is_err());
        assert!(p.pair_words(&w(&[Gen::F1]), &w(&[Gen::F1])).is_err());
    }

    #[test]
    fn two_routes_agree_on_small_words() {
        let p = Pairing::new(Params::Standard);
        let u = w(&[Gen::F1, Gen::W2p, Gen::F2, Gen::F1]);
        let v = w(&[Gen::E1, Gen::W1, Gen::E1, Gen::E2]);
        let a = p.pair_words(&u, &v).unwrap();
        assert!(!a.is_zero());
        assert_eq!(a, p.pair_words_by_coproduct(&u, &v).unwrap());
    }

    #[test]
    fn weight_enumeration() {
        let ws = words_of_weight(2, 1, Gen::e);
        assert_eq!(ws.len(), 3);
        assert_eq!(ws[0].render(), "e1^2*e2");
    }
}

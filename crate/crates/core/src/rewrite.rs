//! Normal forms in `U_{rho,sigma}(G2)`.
//!
//! A normal monomial is `F * K * E` where `F` is a word in `f1, f2`, `K` a
//! Laurent monomial `w1'^a w2'^b w1^c w2^d` and `E` a word in `e1, e2`. The
//! one-sided words `F` and `E` are reduced by a rewriting system obtained
//! from the Serre relations by a degree-bounded completion. Moving `E` past
//! `F` uses the `[e_i, f_j]` relation; group-likes move by conjugation.

use crate::free::{Gen, Letter, NcPoly, Word};
use crate::relations::{
    serre_e1_e2, serre_e2_e1, serre_f1_f2, serre_f2_f1, Params, RsExp, OMEGA_E, OMEGA_F, OMEGA_PRIME_E, OMEGA_PRIME_F,
};
use crate::scalar::RatFunc;
use parking_lot::RwLock;
use serde_json::json;
use smallvec::SmallVec;
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock};

/// Default completion degree per side.
pub const DEFAULT_DEGREE_BOUND: usize = 8;

/// Environment variable overriding [`DEFAULT_DEGREE_BOUND`].
pub const DEGREE_BOUND_VAR: &str = "QG2_DEGREE_BOUND";

/// Letters of a one-sided word: `0` for index 1, `1` for index 2.
pub type SWord = SmallVec<[u8; 12]>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RewriteError {
    #[error("{side}-degree {degree} exceeds the completion bound {bound} (set {DEGREE_BOUND_VAR} to raise it)")]
    DegreeBound { side: Side, degree: usize, bound: usize },
    #[error("relation is not one-sided: {0}")]
    NotOneSided(String),
    #[error("completion left an unresolved overlap: {0}")]
    NotConfluent(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    E,
    F,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::E => "e",
            Side::F => "f",
        })
    }
}

impl Side {
    fn gen(self, i: u8) -> Gen {
        match self {
            Side::E => Gen::e(i as usize),
            Side::F => Gen::f(i as usize),
        }
    }

    pub fn render(self, w: &[u8]) -> String {
        Word(w.iter().map(|&i| self.gen(i)).collect()).render()
    }
}

/// Read the degree bound from the environment, falling back to the default.
pub fn degree_bound_from_env() -> usize {
    std::env::var(DEGREE_BOUND_VAR).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_DEGREE_BOUND)
}

fn deglex(a: &[u8], b: &[u8]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

#[derive(Clone, PartialEq, Eq, Debug)]
struct Key(SWord);

impl Ord for Key {
    fn cmp(&self, o: &Self) -> Ordering {
        deglex(&self.0, &o.0)
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

type SPoly = BTreeMap<Key, RatFunc>;

fn spoly_add(p: &mut SPoly, w: SWord, c: RatFunc) {
    if c.is_zero() {
        return;
    }
    let k = Key(w);
    match p.get_mut(&k) {
        Some(x) => {
            let s = x.add(&c);
            if s.is_zero() {
                p.remove(&k);
            } else {
                *x = s;
            }
        }
        None => {
            p.insert(k, c);
        }
    }
}

/// An oriented rule `lead -> tail`.
#[derive(Clone, Debug)]
pub struct SerreRule {
    pub lead: SWord,
    pub tail: Vec<(SWord, RatFunc)>,
    pub provenance: String,
}

type NormalForm = Arc<[(SWord, RatFunc)]>;

/// A completed one-sided rewriting system with a memoized normal form.
pub struct SerreSystem {
    side: Side,
    rules: Vec<SerreRule>,
    bound: usize,
    overlaps_checked: usize,
    stable_degree: usize,
    cache: RwLock<HashMap<SWord, NormalForm>>,
}

fn find_redex(rules: &[SerreRule], w: &[u8]) -> Option<(usize, usize)> {
    for pos in 0..w.len() {
        for (k, r) in rules.iter().enumerate() {
            if w[pos..].starts_with(&r.lead) {
                return Some((pos, k));
            }
        }
    }
    None
}

fn splice(w: &[u8], pos: usize, len: usize, mid: &[u8]) -> SWord {
    let mut out = SWord::with_capacity(w.len() - len + mid.len());
    out.extend_from_slice(&w[..pos]);
    out.extend_from_slice(mid);
    out.extend_from_slice(&w[pos + len..]);
    out
}

/// Full reduction without memoization; used while the system is growing.
fn reduce(rules: &[SerreRule], mut p: SPoly) -> SPoly {
    loop {
        let hit = p.iter().rev().find_map(|(k, _)| find_redex(rules, &k.0).map(|h| (k.clone(), h)));
        let Some((key, (pos, ri))) = hit else {
            return p;
        };
        let c = p.remove(&key).unwrap();
        let rule = &rules[ri];
        for (t, d) in &rule.tail {
            spoly_add(&mut p, splice(&key.0, pos, rule.lead.len(), t), c.mul(d));
        }
    }
}

fn make_rule(p: SPoly, provenance: String) -> SerreRule {
    let (lead, lc) = p.iter().next_back().map(|(k, c)| (k.0.clone(), c.clone())).unwrap();
    let inv = lc.inv().unwrap();
    let tail = p.iter().rev().skip(1).map(|(k, c)| (k.0.clone(), c.mul(&inv).neg())).collect();
    SerreRule { lead, tail, provenance }
}

/// `(k, spoly)` for every overlap where a suffix of `a.lead` of length `k`
/// is a prefix of `b.lead`.
fn overlaps(a: &SerreRule, b: &SerreRule) -> Vec<(usize, SPoly)> {
    let (la, lb) = (&a.lead, &b.lead);
    let mut out = Vec::new();
    for k in 1..la.len().min(lb.len()) {
        if la[la.len() - k..] != lb[..k] {
            continue;
        }
        let u = &la[..la.len() - k];
        let v = &lb[k..];
        // a.lead * v = u * b.lead
        let mut s = SPoly::new();
        for (t, c) in &a.tail {
            let mut w: SWord = t.clone();
            w.extend_from_slice(v);
            spoly_add(&mut s, w, c.clone());
        }
        for (t, c) in &b.tail {
            let mut w: SWord = SWord::from_slice(u);
            w.extend_from_slice(t);
            spoly_add(&mut s, w, c.neg());
        }
        out.push((k, s));
    }
    out
}

impl SerreSystem {
    /// A system with no rules: every word is normal.
    pub fn empty(side: Side) -> Self {
        SerreSystem {
            side,
            rules: Vec::new(),
            bound: usize::MAX,
            overlaps_checked: 0,
            stable_degree: 0,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn rules(&self) -> &[SerreRule] {
        &self.rules
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn overlaps_checked(&self) -> usize {
        self.overlaps_checked
    }

    /// Largest degree at which the completion produced a rule.
    pub fn stable_degree(&self) -> usize {
        self.stable_degree
    }

    /// Normal form of a one-sided word.
    pub fn nf(&self, w: &[u8]) -> Result<Arc<[(SWord, RatFunc)]>, RewriteError> {
        if w.len() > self.bound {
            return Err(RewriteError::DegreeBound { side: self.side, degree: w.len(), bound: self.bound });
        }
        Ok(self.nf_unchecked(w))
    }

    fn nf_unchecked(&self, w: &[u8]) -> Arc<[(SWord, RatFunc)]> {
        if let Some(v) = self.cache.read().get(w) {
            return v.clone();
        }
        let res: Arc<[(SWord, RatFunc)]> = match find_redex(&self.rules, w) {
            None => Arc::from(vec![(SWord::from_slice(w), RatFunc::one())]),
            Some((pos, ri)) => {
                let rule = &self.rules[ri];
                let mut acc = SPoly::new();
                for (t, c) in &rule.tail {
                    let nw = splice(w, pos, rule.lead.len(), t);
                    for (m, d) in self.nf_unchecked(&nw).iter() {
                        spoly_add(&mut acc, m.clone(), c.mul(d));
                    }
                }
                acc.into_iter().map(|(k, c)| (k.0, c)).collect::<Vec<_>>().into()
            }
        };
        self.cache.write().insert(SWord::from_slice(w), res.clone());
        res
    }

    pub fn is_normal(&self, w: &[u8]) -> bool {
        find_redex(&self.rules, w).is_none()
    }

    fn to_json(&self) -> serde_json::Value {
        let rules: Vec<_> = self
            .rules
            .iter()
            .map(|r| {
                let tail = NcPoly::from_terms(
                    r.tail.iter().map(|(w, c)| (Word(w.iter().map(|&i| self.side.gen(i)).collect()), c.clone())),
                );
                json!({
                    "lead": self.side.render(&r.lead),
                    "tail": tail.render(),
                    "degree": r.lead.len(),
                    "provenance": r.provenance,
                })
            })
            .collect();
        json!({
            "rules": rules,
            "overlaps_checked": self.overlaps_checked,
            "stable_degree": self.stable_degree,
        })
    }
}

fn one_sided(p: &NcPoly) -> Result<(Side, SPoly), RewriteError> {
    let mut side = None;
    let mut out = SPoly::new();
    for (w, c) in p.terms() {
        let mut sw = SWord::new();
        for g in w.gens() {
            let (s, i) = match g.letter() {
                Letter::E(i) => (Side::E, i),
                Letter::F(i) => (Side::F, i),
                _ => return Err(RewriteError::NotOneSided(p.render())),
            };
            if *side.get_or_insert(s) != s {
                return Err(RewriteError::NotOneSided(p.render()));
            }
            sw.push(i as u8);
        }
        spoly_add(&mut out, sw, c.clone());
    }
    Ok((side.unwrap_or(Side::E), out))
}

/// Degree-bounded completion of one-sided relations.
///
/// Every input becomes an oriented rule; overlaps of degree at most `bound`
/// are resolved in order of increasing degree. The result is re-checked: all
/// overlaps up to `bound` reduce to zero.
pub fn serre_complete(inputs: &[(String, NcPoly)], bound: usize) -> Result<SerreSystem, RewriteError> {
    let mut side = None;
    let mut pending: BTreeMap<usize, Vec<(SPoly, String)>> = BTreeMap::new();
    for (name, p) in inputs {
        let (s, sp) = one_sided(p)?;
        if *side.get_or_insert(s) != s {
            return Err(RewriteError::NotOneSided(p.render()));
        }
        let deg = sp.keys().next_back().map(|k| k.0.len()).unwrap_or(0);
        pending.entry(deg).or_default().push((sp, format!("input:{name}")));
    }
    let side = side.unwrap_or(Side::E);
    let mut rules: Vec<SerreRule> = Vec::new();
    let mut stable = 0;
    while let Some((deg, batch)) = pending.pop_first() {
        for (p, prov) in batch {
            let red = reduce(&rules, p);
            if red.is_empty() {
                continue;
            }
            let idx = rules.len();
            rules.push(make_rule(red, prov));
            stable = stable.max(deg);
            for j in 0..=idx {
                let pairs: &[(usize, usize)] = if j == idx { &[(idx, idx)] } else { &[(idx, j), (j, idx)] };
                for &(a, b) in pairs {
                    for (k, s) in overlaps(&rules[a], &rules[b]) {
                        let d = rules[a].lead.len() + rules[b].lead.len() - k;
                        if d <= bound {
                            pending.entry(d).or_default().push((s, format!("overlap({a},{b})")));
                        }
                    }
                }
            }
        }
    }
    // interreduce tails so every tail word is normal
    for i in 0..rules.len() {
        let mut t = SPoly::new();
        for (w, c) in &rules[i].tail {
            spoly_add(&mut t, w.clone(), c.clone());
        }
        let t = reduce(&rules, t);
        rules[i].tail = t.into_iter().rev().map(|(k, c)| (k.0, c)).collect();
    }
    let mut checked = 0;
    for a in 0..rules.len() {
        for b in 0..rules.len() {
            for (k, s) in overlaps(&rules[a], &rules[b]) {
                if rules[a].lead.len() + rules[b].lead.len() - k > bound {
                    continue;
                }
                checked += 1;
                if !reduce(&rules, s).is_empty() {
                    return Err(RewriteError::NotConfluent(format!("rules {a} and {b}, overlap length {k}")));
                }
            }
        }
    }
    Ok(SerreSystem {
        side,
        rules,
        bound,
        overlaps_checked: checked,
        stable_degree: stable,
        cache: RwLock::new(HashMap::new()),
    })
}

/// A normal monomial `F * w1'^k0 w2'^k1 w1^k2 w2^k3 * E`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Mono {
    pub f: SWord,
    pub k: [i32; 4],
    pub e: SWord,
}

impl Mono {
    pub fn one() -> Self {
        Mono { f: SWord::new(), k: [0; 4], e: SWord::new() }
    }

    pub fn word(&self) -> Word {
        let mut w: SmallVec<[Gen; 8]> = self.f.iter().map(|&i| Gen::f(i as usize)).collect();
        let group = [Gen::W1p, Gen::W2p, Gen::W1, Gen::W2];
        for (g, &n) in group.iter().zip(self.k.iter()) {
            let letter = if n >= 0 { *g } else { g.inverse().unwrap() };
            for _ in 0..n.unsigned_abs() {
                w.push(letter);
            }
        }
        w.extend(self.e.iter().map(|&i| Gen::e(i as usize)));
        Word(w)
    }
}

/// A linear combination of normal monomials.
#[derive(Clone, Default, Debug)]
pub struct Normal {
    terms: HashMap<Mono, RatFunc>,
}

impl Normal {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::mono(Mono::one(), RatFunc::one())
    }

    pub fn mono(m: Mono, c: RatFunc) -> Self {
        let mut n = Self::zero();
        n.add_term(m, c);
        n
    }

    pub fn add_term(&mut self, m: Mono, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::hash_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::hash_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut n = self.clone();
        for (m, c) in &o.terms {
            n.add_term(m.clone(), c.clone());
        }
        n
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&RatFunc::from_int(-1)))
    }

    pub fn scale(&self, k: &RatFunc) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Normal { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.mul(k))).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Mono, &RatFunc)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_ncpoly(&self) -> NcPoly {
        NcPoly::from_terms(self.terms.iter().map(|(m, c)| (m.word(), c.clone())))
    }
}

fn add_exp(a: RsExp, b: RsExp) -> RsExp {
    (a.0 + b.0, a.1 + b.1)
}

fn rs(e: RsExp) -> RatFunc {
    RatFunc::rs_pow(e.0, e.1)
}

type CommuteCache = RwLock<HashMap<(SWord, SWord), Arc<[(Mono, RatFunc)]>>>;

/// Rewriting data for one parameter choice.
pub struct RuleSet {
    params: Params,
    e_sys: SerreSystem,
    f_sys: SerreSystem,
    /// `conj[side][letter][j]`: `K_j x K_j^-1 = r^a s^b x` for the group-like
    /// `K_j` in the order `w1', w2', w1, w2`.
    conj: [[[RsExp; 4]; 2]; 2],
    ef: [RatFunc; 2],
    commute_cache: CommuteCache,
}

impl RuleSet {
    /// Complete the Serre relations up to `bound` on both sides.
    pub fn new(params: Params, bound: usize) -> Result<RuleSet, RewriteError> {
        let e_sys = serre_complete(
            &[("serre-e2-e1".into(), serre_e2_e1(params)), ("serre-e1-e2".into(), serre_e1_e2(params))],
            bound,
        )?;
        let f_sys = serre_complete(
            &[("serre-f2-f1".into(), serre_f2_f1(params)), ("serre-f1-f2".into(), serre_f1_f2(params))],
            bound,
        )?;
        Ok(Self::assemble(params, e_sys, f_sys))
    }

    /// No Serre rules: the algebra generated by `e, f, w, w'` subject only to
    /// the commutation relations.
    pub fn free(params: Params) -> RuleSet {
        Self::assemble(params, SerreSystem::empty(Side::E), SerreSystem::empty(Side::F))
    }

    /// Process-wide rule set for `params` at the environment's degree bound.
    pub fn shared(params: Params) -> Arc<RuleSet> {
        static STD: OnceLock<Arc<RuleSet>> = OnceLock::new();
        static SWP: OnceLock<Arc<RuleSet>> = OnceLock::new();
        let cell = match params {
            Params::Standard => &STD,
            Params::Swapped => &SWP,
        };
        cell.get_or_init(|| Arc::new(RuleSet::new(params, degree_bound_from_env()).expect("Serre completion failed")))
            .clone()
    }

    /// Process-wide rule set without Serre rules.
    pub fn shared_free(params: Params) -> Arc<RuleSet> {
        static STD: OnceLock<Arc<RuleSet>> = OnceLock::new();
        static SWP: OnceLock<Arc<RuleSet>> = OnceLock::new();
        let cell = match params {
            Params::Standard => &STD,
            Params::Swapped => &SWP,
        };
        cell.get_or_init(|| Arc::new(RuleSet::free(params))).clone()
    }

    fn assemble(params: Params, e_sys: SerreSystem, f_sys: SerreSystem) -> RuleSet {
        let mut conj = [[[(0, 0); 4]; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                conj[0][i][j] = params.apply_exp(OMEGA_PRIME_E[j][i]);
                conj[0][i][2 + j] = params.apply_exp(OMEGA_E[j][i]);
                conj[1][i][j] = params.apply_exp(OMEGA_PRIME_F[j][i]);
                conj[1][i][2 + j] = params.apply_exp(OMEGA_F[j][i]);
            }
        }
        RuleSet {
            params,
            e_sys,
            f_sys,
            conj,
            ef: [params.ef_factor(0), params.ef_factor(1)],
            commute_cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn params(&self) -> Params {
        self.params
    }

    pub fn e_system(&self) -> &SerreSystem {
        &self.e_sys
    }

    pub fn f_system(&self) -> &SerreSystem {
        &self.f_sys
    }

    /// `K x K^-1 = r^a s^b x` for a one-sided word `x`.
    fn conj_exp(&self, k: &[i32; 4], side: Side, w: &[u8]) -> RsExp {
        let s = match side {
            Side::E => 0,
            Side::F => 1,
        };
        let mut out = (0, 0);
        for &l in w {
            for j in 0..4 {
                if k[j] != 0 {
                    let c = self.conj[s][l as usize][j];
                    out = add_exp(out, (k[j] * c.0, k[j] * c.1));
                }
            }
        }
        out
    }

    fn nf(&self, side: Side, w: &[u8]) -> Result<Arc<[(SWord, RatFunc)]>, RewriteError> {
        match side {
            Side::E => self.e_sys.nf(w),
            Side::F => self.f_sys.nf(w),
        }
    }

    /// Normal form of `E * F` for one-sided words.
    fn commute(&self, e: &[u8], f: &[u8]) -> Result<Arc<[(Mono, RatFunc)]>, RewriteError> {
        if e.is_empty() || f.is_empty() {
            let (side, w) = if e.is_empty() { (Side::F, f) } else { (Side::E, e) };
            return Ok(self
                .nf(side, w)?
                .iter()
                .map(|(x, c)| {
                    let m = match side {
                        Side::F => Mono { f: x.clone(), k: [0; 4], e: SWord::new() },
                        Side::E => Mono { f: SWord::new(), k: [0; 4], e: x.clone() },
                    };
                    (m, c.clone())
                })
                .collect::<Vec<_>>()
                .into());
        }
        let key = (SWord::from_slice(e), SWord::from_slice(f));
        if let Some(v) = self.commute_cache.read().get(&key) {
            return Ok(v.clone());
        }
        let (rest, last) = (&e[..e.len() - 1], e[e.len() - 1]);
        let mut acc = Normal::zero();
        for (m, c) in self.commute(rest, f)?.iter() {
            let mut w = m.e.clone();
            w.push(last);
            for (x, d) in self.e_sys.nf(&w)?.iter() {
                acc.add_term(Mono { f: m.f.clone(), k: m.k, e: x.clone() }, c.mul(d));
            }
        }
        let i = last as usize;
        for pos in 0..f.len() {
            if f[pos] != last {
                continue;
            }
            let fk = splice(f, pos, 1, &[]);
            let suffix = &f[pos + 1..];
            for (kidx, sign) in [(2 + i, 1i64), (i, -1i64)] {
                let mut kv = [0; 4];
                kv[kidx] = 1;
                let coef = self.ef[i].mul(&rs(self.conj_exp(&kv, Side::F, suffix))).mul(&RatFunc::from_int(sign));
                let neg_k = [-kv[0], -kv[1], -kv[2], -kv[3]];
                for (m, c) in self.commute(rest, &fk)?.iter() {
                    let ex = self.conj_exp(&neg_k, Side::E, &m.e);
                    let mut k = m.k;
                    k[kidx] += 1;
                    acc.add_term(Mono { f: m.f.clone(), k, e: m.e.clone() }, c.mul(&coef).mul(&rs(ex)));
                }
            }
        }
        let mut v: Vec<(Mono, RatFunc)> = acc.terms.into_iter().collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        let v: Arc<[(Mono, RatFunc)]> = v.into();
        self.commute_cache.write().insert(key, v.clone());
        Ok(v)
    }

    fn check_bound(&self, side: Side, degree: usize) -> Result<(), RewriteError> {
        let bound = match side {
            Side::E => self.e_sys.bound,
            Side::F => self.f_sys.bound,
        };
        if degree > bound {
            return Err(RewriteError::DegreeBound { side, degree, bound });
        }
        Ok(())
    }

    /// Product of two normal-form elements.
    pub fn mul_normal(&self, a: &Normal, b: &Normal) -> Result<Normal, RewriteError> {
        let mut acc = Normal::zero();
        for (m1, c1) in &a.terms {
            for (m2, c2) in &b.terms {
                self.check_bound(Side::E, m1.e.len() + m2.e.len())?;
                self.check_bound(Side::F, m1.f.len() + m2.f.len())?;
                let c12 = c1.mul(c2);
                for (m, d) in self.commute(&m1.e, &m2.f)?.iter() {
                    let ex1 = self.conj_exp(&m1.k, Side::F, &m.f);
                    let neg_k2 = [-m2.k[0], -m2.k[1], -m2.k[2], -m2.k[3]];
                    let ex2 = self.conj_exp(&neg_k2, Side::E, &m.e);
                    let coef = c12.mul(d).mul(&rs(add_exp(ex1, ex2)));
                    let mut k = m1.k;
                    for j in 0..4 {
                        k[j] += m.k[j] + m2.k[j];
                    }
                    let mut fw = m1.f.clone();
                    fw.extend_from_slice(&m.f);
                    let mut ew = m.e.clone();
                    ew.extend_from_slice(&m2.e);
                    let fnf = self.f_sys.nf(&fw)?;
                    let enf = self.e_sys.nf(&ew)?;
                    for (fx, x) in fnf.iter() {
                        let cx = coef.mul(x);
                        for (ex, y) in enf.iter() {
                            acc.add_term(Mono { f: fx.clone(), k, e: ex.clone() }, cx.mul(y));
                        }
                    }
                }
            }
        }
        Ok(acc)
    }

    pub fn gen_normal(g: Gen) -> Normal {
        let mut m = Mono::one();
        match g.letter() {
            Letter::E(i) => m.e.push(i as u8),
            Letter::F(i) => m.f.push(i as u8),
            Letter::W(i, s) => m.k[2 + i] = s,
            Letter::Wp(i, s) => m.k[i] = s,
        }
        Normal::mono(m, RatFunc::one())
    }

    /// Normal form of a single word.
    pub fn word_normal(&self, w: &Word) -> Result<Normal, RewriteError> {
        let mut acc = Normal::one();
        for &g in w.gens() {
            acc = self.mul_normal(&acc, &Self::gen_normal(g))?;
        }
        Ok(acc)
    }

    pub fn to_normal(&self, p: &NcPoly) -> Result<Normal, RewriteError> {
        let mut acc = Normal::zero();
        for (w, c) in p.terms() {
            for (m, d) in self.word_normal(w)?.terms {
                acc.add_term(m, d.mul(c));
            }
        }
        Ok(acc)
    }

    /// The unique normal form of `p` in the quotient algebra.
    pub fn straighten(&self, p: &NcPoly) -> Result<NcPoly, RewriteError> {
        Ok(self.to_normal(p)?.to_ncpoly())
    }

    /// Straightened product.
    pub fn mul(&self, a: &NcPoly, b: &NcPoly) -> Result<NcPoly, RewriteError> {
        Ok(self.mul_normal(&self.to_normal(a)?, &self.to_normal(b)?)?.to_ncpoly())
    }

    pub fn is_zero(&self, p: &NcPoly) -> Result<bool, RewriteError> {
        Ok(self.to_normal(p)?.is_zero())
    }

    pub fn equal(&self, a: &NcPoly, b: &NcPoly) -> Result<bool, RewriteError> {
        self.is_zero(&a.sub(b))
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "params": self.params.name(),
            "degree_bound": self.e_sys.bound.min(self.f_sys.bound),
            "e_rules": self.e_sys.to_json(),
            "f_rules": self.f_sys.to_json(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(g: Gen) -> NcPoly {
        NcPoly::gen(g)
    }

    #[test]
    fn low_bound_keeps_only_inputs() {
        let sys = serre_complete(
            &[("a".into(), serre_e2_e1(Params::Standard)), ("b".into(), serre_e1_e2(Params::Standard))],
            4,
        )
        .unwrap();
        assert_eq!(sys.rules().len(), 2);
        assert_eq!(Side::E.render(&sys.rules()[0].lead), "e2^2*e1");
        assert_eq!(Side::E.render(&sys.rules()[1].lead), "e2*e1^4");
    }

    #[test]
    fn omega_moves_left_of_e() {
        let rs = RuleSet::free(Params::Standard);
        let lhs = gen(Gen::W1).mul(&gen(Gen::E1));
        let rhs = gen(Gen::E1).mul(&gen(Gen::W1)).scale(&RatFunc::rs_pow(1, -1));
        assert!(rs.equal(&lhs, &rhs).unwrap());
        assert_eq!(rs.straighten(&lhs).unwrap().render(), "w1*e1");
    }

    #[test]
    fn ef_commutator_straightens() {
        let rs = RuleSet::free(Params::Standard);
        let e1f1 = gen(Gen::E1).mul(&gen(Gen::F1));
        let got = rs.straighten(&e1f1).unwrap();
        let k = RatFunc::r().sub(&RatFunc::s()).inv().unwrap();
        let want = gen(Gen::F1).mul(&gen(Gen::E1)).add(&gen(Gen::W1).scale(&k)).sub(&gen(Gen::W1p).scale(&k));
        assert_eq!(got, want);
    }

    #[test]
    fn inverse_letters_cancel() {
        let rs = RuleSet::free(Params::Swapped);
        let p = gen(Gen::W2p).mul(&gen(Gen::E1)).mul(&gen(Gen::W2pInv));
        // w2' e1 w2'^-1 = s^-3 e1 at (r, s); swapped gives r^3
        assert_eq!(rs.straighten(&p).unwrap(), gen(Gen::E1).scale(&RatFunc::rs_pow(3, 0)));
    }

    #[test]
    fn bound_violation_is_an_error() {
        let rs = RuleSet::new(Params::Standard, 5).unwrap();
        let w = (0..6).fold(NcPoly::one(), |acc, _| acc.mul(&gen(Gen::E1)));
        assert!(matches!(rs.straighten(&w), Err(RewriteError::DegreeBound { .. })));
    }
}

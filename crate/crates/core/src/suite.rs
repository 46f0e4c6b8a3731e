//! The registry of named checks behind `qg2 verify`.
//!
//! Each check returns a pass flag and a JSON detail. Reports list checks in
//! registry order; the only fields that vary between runs are `millis` and
//! `total_millis`.

use crate::double::{verify_cross_pair, Double, CROSS_A, CROSS_F};
use crate::free::{CartanData, Gen, Letter, NcPoly, Weight, Word};
use crate::hopf::{check_hopf_axioms, check_relation_compatible};
use crate::lusztig::{
    adjoint_serre_elements, check_identity, pairing_transport_holds, verify_t_preserves, Identity, Lusztig, LusztigMap,
    RootVectorRegistry, BRACKET_CATALOGUE, LEMMA_SUITE,
};
use crate::pairing::{words_of_weight, Pairing};
use crate::relations::{defining_relations, serre_e1_e2, serre_e2_e1, serre_f1_f2, serre_f2_f1, Params, RELATION_IDS};
use crate::rewrite::RuleSet;
use crate::scalar::{QFunc, RatFunc};
use crate::tabular::{diff_against, parse_f_word, parse_fixture, reference_column_sums, tabular_report, TABULAR_WORDS};
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use std::sync::{Arc, OnceLock};
use std::time::Instant;

/// Seed for every randomized check, so that reports are reproducible.
pub const SEED: u64 = 0x9e2;

/// Shared, lazily built state.
pub struct Ctx {
    rules: Arc<RuleSet>,
    pairing: Pairing,
    lusztig: OnceLock<Lusztig>,
    double: OnceLock<Double>,
}

impl Ctx {
    pub fn new() -> Self {
        Ctx {
            rules: RuleSet::shared(Params::Standard),
            pairing: Pairing::new(Params::Standard),
            lusztig: OnceLock::new(),
            double: OnceLock::new(),
        }
    }

    pub fn rules(&self) -> &RuleSet {
        &self.rules
    }

    pub fn pairing(&self) -> &Pairing {
        &self.pairing
    }

    pub fn lusztig(&self) -> &Lusztig {
        self.lusztig.get_or_init(|| Lusztig::new(self.rules.clone()).expect("generator images straighten"))
    }

    pub fn double(&self) -> &Double {
        self.double.get_or_init(|| Double::with_rules(self.rules.clone()))
    }
}

impl Default for Ctx {
    fn default() -> Self {
        Self::new()
    }
}

/// What a check reports.
pub struct Outcome {
    pub passed: bool,
    pub detail: Value,
}

impl Outcome {
    fn new(passed: bool, detail: Value) -> Self {
        Outcome { passed, detail }
    }

    fn error(e: impl std::fmt::Display) -> Self {
        Outcome { passed: false, detail: json!({ "error": e.to_string() }) }
    }
}

type CheckFn = Box<dyn Fn(&Ctx) -> Outcome + Send + Sync>;

pub struct Check {
    pub id: String,
    pub group: &'static str,
    /// How the result is established: `exact`, `rewriter`, `oracle` or `both`.
    pub method: &'static str,
    run: CheckFn,
}

impl Check {
    fn new(id: impl Into<String>, group: &'static str, run: impl Fn(&Ctx) -> Outcome + Send + Sync + 'static) -> Self {
        Check { id: id.into(), group, method: "exact", run: Box::new(run) }
    }

    fn method(mut self, method: &'static str) -> Self {
        self.method = method;
        self
    }

    pub fn run(&self, ctx: &Ctx) -> CheckResult {
        let start = Instant::now();
        let out = (self.run)(ctx);
        CheckResult {
            id: self.id.clone(),
            group: self.group,
            method: self.method,
            passed: out.passed,
            detail: out.detail,
            millis: start.elapsed().as_millis(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub id: String,
    pub group: &'static str,
    pub method: &'static str,
    pub passed: bool,
    pub detail: Value,
    pub millis: u128,
}

impl CheckResult {
    pub fn to_json(&self, timing: bool) -> Value {
        let mut v = json!({
            "id": self.id,
            "group": self.group,
            "method": self.method,
            "status": if self.passed { "pass" } else { "fail" },
            "detail": self.detail,
        });
        if timing {
            v["millis"] = json!(self.millis);
        }
        v
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub results: Vec<CheckResult>,
    pub total_millis: u128,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| !r.passed)
    }

    pub fn to_json(&self, timing: bool) -> Value {
        let passed = self.results.iter().filter(|r| r.passed).count();
        let mut v = json!({
            "checks": self.results.iter().map(|r| r.to_json(timing)).collect::<Vec<_>>(),
            "summary": { "total": self.results.len(), "passed": passed, "failed": self.results.len() - passed },
        });
        if timing {
            v["total_millis"] = json!(self.total_millis);
        }
        v
    }
}

fn rat(text: &str) -> RatFunc {
    let p = crate::expr::parse_expr(text).expect("constant parses").eval(None).expect("constant evaluates");
    p.as_scalar().expect("constant is a scalar")
}

fn random_word<R: Rng>(rng: &mut R, max_len: usize, alphabet: &[Gen]) -> Word {
    let n = rng.gen_range(1..=max_len);
    let gens: Vec<Gen> = (0..n).map(|_| alphabet[rng.gen_range(0..alphabet.len())]).collect();
    Word::from_gens(&gens)
}

/// Words used by the Hopf-axiom checks: 50 random words of length at most 4.
pub fn hopf_sample_words() -> Vec<Word> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    (0..50).map(|_| random_word(&mut rng, 4, &Gen::ALL)).collect()
}

fn hopf_check(ctx: &Ctx, inputs: &[NcPoly]) -> Outcome {
    let mut failures = Vec::new();
    for x in inputs {
        match check_hopf_axioms(x, ctx.rules()) {
            Ok(f) => failures.extend(f.into_iter().map(|f| format!("{}: {}", f.axiom, f.input))),
            Err(e) => return Outcome::error(e),
        }
    }
    Outcome::new(failures.is_empty(), json!({ "inputs": inputs.len(), "failures": failures }))
}

fn pairing_constants(ctx: &Ctx) -> Outcome {
    use Gen::*;
    let expected: [(Gen, Gen, &str); 10] = [
        (F1, E1, "1/(s - r)"),
        (F2, E2, "1/(s^3 - r^3)"),
        (F1, E2, "0"),
        (F2, E1, "0"),
        (W1p, W1, "r*s^-1"),
        (W1p, W2, "r^-3"),
        (W2p, W1, "s^3"),
        (W2p, W2, "r^3*s^-3"),
        (W1pInv, W2, "r^3"),
        (W2p, W1Inv, "s^-3"),
    ];
    let mut bad = Vec::new();
    for (u, v, want) in expected {
        match ctx.pairing().gen_pair(u, v) {
            Ok(got) if got == rat(want) => {}
            Ok(got) => bad.push(format!("<{}, {}> = {}, expected {want}", u.name(), v.name(), got)),
            Err(e) => bad.push(e.to_string()),
        }
    }
    Outcome::new(bad.is_empty(), json!({ "mismatches": bad }))
}

fn serre_elements() -> [(&'static str, NcPoly); 4] {
    let p = Params::Standard;
    [("e2-e1", serre_e2_e1(p)), ("e1-e2", serre_e1_e2(p)), ("f2-f1", serre_f2_f1(p)), ("f1-f2", serre_f1_f2(p))]
}

/// 20 pairs `(u, v)` with `u` over `f, w'` and `v` over `e, w` of matching weight.
pub fn antipode_sample_pairs() -> Vec<(Word, Word)> {
    use Gen::*;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let group_f = [W1p, W1pInv, W2p, W2pInv];
    let group_e = [W1, W1Inv, W2, W2Inv];
    let mut out = Vec::new();
    while out.len() < 20 {
        let m1 = rng.gen_range(0..=2usize);
        let m2 = rng.gen_range(0..=1usize);
        let fs = words_of_weight(m1, m2, Gen::f);
        let es = words_of_weight(m1, m2, Gen::e);
        let mut u = fs[rng.gen_range(0..fs.len())].gens().to_vec();
        let mut v = es[rng.gen_range(0..es.len())].gens().to_vec();
        for _ in 0..rng.gen_range(0..=2) {
            u.insert(rng.gen_range(0..=u.len()), group_f[rng.gen_range(0..4)]);
            v.insert(rng.gen_range(0..=v.len()), group_e[rng.gen_range(0..4)]);
        }
        if u.is_empty() {
            continue;
        }
        out.push((Word::from_gens(&u), Word::from_gens(&v)));
    }
    out
}

fn tabular_check(ctx: &Ctx, k: usize) -> Outcome {
    let w = parse_f_word(TABULAR_WORDS[k - 1]).unwrap();
    let rep = match tabular_report(&w, ctx.pairing()) {
        Ok(r) => r,
        Err(e) => return Outcome::error(e),
    };
    let reference = reference_column_sums(k);
    let cols_ok: Vec<bool> = (0..5).map(|c| rep.column_sums[c] == reference[c]).collect();
    let fixture_diff = parse_fixture(crate::tabular::fixture_text(k)).map(|r| diff_against(&rep, &r));
    let differing = fixture_diff.as_ref().map(|d| d.computed_only.len()).unwrap_or(usize::MAX);
    let passed = rep.rows.len() == 120 && cols_ok.iter().all(|&b| b) && rep.weighted_total.is_zero();
    Outcome::new(
        passed,
        json!({
            "word": TABULAR_WORDS[k - 1],
            "rows": rep.rows.len(),
            "column_sums_match": cols_ok,
            "weighted_total": rep.weighted_total.render(),
            "rows_differing_from_reference": differing,
        }),
    )
}

fn identity_check(ctx: &Ctx, id: &Identity) -> Outcome {
    let r = check_identity(ctx.lusztig(), ctx.pairing(), id);
    Outcome::new(
        r.passed(),
        json!({ "identity": r.text, "method": r.method, "rewriter": r.rewriter, "oracle": r.oracle, "error": r.error }),
    )
}

/// Random homogeneous `e`-elements of weight at most `(5, 2)`; the first 25
/// lie in the Serre ideal.
pub fn oracle_sample() -> Vec<(NcPoly, bool)> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    let p = Params::Standard;
    let quintic = serre_e1_e2(p);
    let cubic = serre_e2_e1(p);
    let coeff = |rng: &mut ChaCha8Rng| {
        let c = RatFunc::rs_pow(rng.gen_range(-3..=3), rng.gen_range(-3..=3));
        c.mul(&RatFunc::from_int(rng.gen_range(1..=4) * if rng.gen_bool(0.5) { 1 } else { -1 }))
    };
    let mut out = Vec::new();
    while out.len() < 25 {
        // a combination of u * serre * v of one common weight
        let (base, pads): (&NcPoly, Vec<Gen>) = if rng.gen_bool(0.5) {
            let extra = [vec![], vec![Gen::E1], vec![Gen::E2], vec![Gen::E1, Gen::E2]][rng.gen_range(0..4)].clone();
            (&quintic, extra)
        } else {
            let n = rng.gen_range(0..=4);
            (&cubic, vec![Gen::E1; n])
        };
        let mut x = NcPoly::zero();
        for _ in 0..rng.gen_range(1..=3) {
            let mut letters = pads.clone();
            // shuffle the padding letters, then split them around the relation
            for i in (1..letters.len()).rev() {
                letters.swap(i, rng.gen_range(0..=i));
            }
            let cut = rng.gen_range(0..=letters.len());
            let l = NcPoly::word(Word::from_gens(&letters[..cut]));
            let r = NcPoly::word(Word::from_gens(&letters[cut..]));
            x = x.add(&l.mul(base).mul(&r).scale(&coeff(&mut rng)));
        }
        if !x.is_zero() {
            out.push((x, true));
        }
    }
    while out.len() < 50 {
        let m1 = rng.gen_range(0..=5usize);
        let m2 = rng.gen_range(0..=2usize);
        if m1 + m2 == 0 {
            continue;
        }
        let words = words_of_weight(m1, m2, Gen::e);
        let mut x = NcPoly::zero();
        for _ in 0..rng.gen_range(1..=3) {
            let w = words[rng.gen_range(0..words.len())].clone();
            x = x.add(&NcPoly::word(w).scale(&coeff(&mut rng)));
        }
        if !x.is_zero() {
            out.push((x, false));
        }
    }
    out
}

fn oracle_agreement(ctx: &Ctx) -> Outcome {
    let mut disagreements = Vec::new();
    let mut members_nonzero = Vec::new();
    let mut zero_count = 0;
    for (k, (x, member)) in oracle_sample().iter().enumerate() {
        let rw = match ctx.rules().is_zero(x) {
            Ok(b) => b,
            Err(e) => return Outcome::error(e),
        };
        let or = match ctx.pairing().zero_oracle(x) {
            Ok(b) => b,
            Err(e) => return Outcome::error(e),
        };
        if rw != or {
            disagreements.push(k);
        }
        if *member && !rw {
            members_nonzero.push(k);
        }
        zero_count += rw as usize;
    }
    Outcome::new(
        disagreements.is_empty() && members_nonzero.is_empty(),
        json!({ "elements": 50, "zero": zero_count, "disagreements": disagreements, "members_not_zero": members_nonzero }),
    )
}

/// Number of ways to write `m1 a1 + m2 a2` as a sum of positive roots.
pub fn kostant_count(m1: i32, m2: i32) -> u64 {
    fn go(k: usize, m1: i32, m2: i32) -> u64 {
        if m1 == 0 && m2 == 0 {
            return 1;
        }
        if k == CartanData::POSITIVE_ROOTS.len() {
            return 0;
        }
        let Weight(a, b) = CartanData::POSITIVE_ROOTS[k];
        let mut total = 0;
        let mut n = 0;
        while a * n <= m1 && b * n <= m2 {
            total += go(k + 1, m1 - a * n, m2 - b * n);
            n += 1;
        }
        total
    }
    go(0, m1, m2)
}

/// Count normal `e`-words of a weight.
pub fn normal_word_count(rules: &RuleSet, m1: usize, m2: usize) -> usize {
    words_of_weight(m1, m2, Gen::e)
        .iter()
        .filter(|w| {
            let bytes: Vec<u8> = w
                .gens()
                .iter()
                .map(|g| match g.letter() {
                    Letter::E(i) => i as u8,
                    _ => unreachable!(),
                })
                .collect();
            rules.e_system().is_normal(&bytes)
        })
        .count()
}

/// Rank of the pairing matrix between `f`- and `e`-words of one weight,
/// evaluated at a rational point.
pub fn gram_rank(pairing: &Pairing, m1: usize, m2: usize, r: &BigRational, s: &BigRational) -> usize {
    let fs = words_of_weight(m1, m2, Gen::f);
    let es = words_of_weight(m1, m2, Gen::e);
    let mut rows: Vec<Vec<BigRational>> =
        fs.iter().map(|u| es.iter().map(|v| pairing.pair_words(u, v).unwrap().eval(r, s).unwrap()).collect()).collect();
    let mut rank = 0;
    let cols = es.len();
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for i in 0..rows.len() {
            if i != rank && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &pivot;
                for j in c..cols {
                    let d = &rows[rank][j] * &f;
                    rows[i][j] -= d;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn gram_check(ctx: &Ctx) -> Outcome {
    let r = BigRational::from_integer(2.into());
    let s = BigRational::new(5.into(), 3.into());
    let mut table = Vec::new();
    let mut ok = true;
    for m1 in 0..=5usize {
        for m2 in 0..=2usize {
            let kostant = kostant_count(m1 as i32, m2 as i32);
            let normal = normal_word_count(ctx.rules(), m1, m2);
            let rank = gram_rank(ctx.pairing(), m1, m2, &r, &s);
            ok &= kostant as usize == normal && normal == rank;
            table.push(json!({ "weight": [m1, m2], "kostant": kostant, "normal_words": normal, "gram_rank": rank }));
        }
    }
    Outcome::new(ok, json!({ "weights": table }))
}

fn t_weights() -> Outcome {
    let mut bad = Vec::new();
    for i in 0..2 {
        let t = LusztigMap::new(i);
        for g in Gen::ALL {
            let want = CartanData::reflect(i, g.weight());
            if t.image(g).weight() != Some(want) {
                bad.push(format!("T{}({})", i + 1, g.name()));
            }
        }
    }
    Outcome::new(bad.is_empty(), json!({ "mismatches": bad }))
}

/// `(w_i - w_i') / (q_i - q_i^-1)` from the `e f` relation at `r = q, s = 1/q`,
/// with `w_i'` matching `w_i^-1` on every `e_j`.
pub fn specialization_check() -> Outcome {
    let mut detail = Vec::new();
    let mut ok = true;
    let rel = defining_relations(Params::Standard).into_iter().find(|r| r.id == "ef-commutator").unwrap();
    for i in 0..2 {
        let d = CartanData::D[i] as i64;
        let qi = QFunc::monomial(1, d).sub(&QFunc::monomial(1, -d));
        let want = QFunc::one().div(&qi).unwrap();
        // coefficient of w_i in e_i f_i - f_i e_i - c (w_i - w_i')
        let el = rel.elements.iter().find(|el| el.coeff(&Word::from_gens(&[Gen::e(i), Gen::f(i)])).is_one()).unwrap();
        let cw = el.coeff(&Word::from_gens(&[Gen::w(i, 1)])).neg().specialize().ok();
        let cwp = el.coeff(&Word::from_gens(&[Gen::wp(i, 1)])).specialize().ok();
        let good = cw.as_ref() == Some(&want) && cwp.as_ref() == Some(&want);
        ok &= good;
        detail.push(json!({
            "i": i + 1,
            "coefficient": cw.map(|c| c.render()),
            "expected": want.render(),
        }));
    }
    // the pairing becomes symmetric
    let p = Pairing::new(Params::Standard);
    for i in 0..2 {
        for j in 0..2 {
            let a = p.ww(i, j).specialize().unwrap();
            let b = p.ww(j, i).specialize().unwrap();
            ok &= a == b;
        }
    }
    Outcome::new(ok, json!({ "ef": detail }))
}

/// Every check, in report order.
pub fn registry() -> Vec<Check> {
    let mut out = Vec::new();
    out.push(
        Check::new("hopf-axioms-generators", "hopf", |ctx| hopf_check(ctx, &Gen::ALL.map(NcPoly::gen)))
            .method("rewriter"),
    );
    out.push(
        Check::new("hopf-axioms-random-words", "hopf", |ctx| {
            let words: Vec<NcPoly> = hopf_sample_words().into_iter().map(NcPoly::word).collect();
            hopf_check(ctx, &words)
        })
        .method("rewriter"),
    );
    out.push(
        Check::new("hopf-relations-compatible", "hopf", |ctx| {
            let mut bad = Vec::new();
            for rel in defining_relations(Params::Standard) {
                for el in &rel.elements {
                    match check_relation_compatible(el, ctx.rules()) {
                        Ok(true) => {}
                        Ok(false) => bad.push(rel.id),
                        Err(e) => return Outcome::error(e),
                    }
                }
            }
            Outcome::new(bad.is_empty(), json!({ "failing": bad }))
        })
        .method("rewriter"),
    );
    out.push(Check::new("pairing-constants", "pairing", pairing_constants));
    for (name, el) in serre_elements() {
        out.push(
            Check::new(format!("serre-radical-{name}"), "pairing", move |ctx| match ctx.pairing().zero_oracle(&el) {
                Ok(b) => Outcome::new(b, json!({ "element": el.render() })),
                Err(e) => Outcome::error(e),
            })
            .method("oracle"),
        );
    }
    out.push(Check::new("pairing-antipode", "pairing", |ctx| {
        let mut bad = Vec::new();
        let pairs = antipode_sample_pairs();
        for (u, v) in &pairs {
            match ctx.pairing().pair_antipode_check(u, v) {
                Ok(true) => {}
                Ok(false) => bad.push(format!("<{}, {}>", u.render(), v.render())),
                Err(e) => return Outcome::error(e),
            }
        }
        Outcome::new(bad.is_empty(), json!({ "pairs": pairs.len(), "failures": bad }))
    }));
    out.push(Check::new("pairing-nondegenerate", "pairing", gram_check));
    for k in 1..=5 {
        let id = format!("tabular-{}", TABULAR_WORDS[k - 1].replace(['*', '^'], ""));
        out.push(Check::new(id, "tabular", move |ctx| tabular_check(ctx, k)));
    }
    for f in CROSS_F {
        for a in CROSS_A {
            out.push(Check::new(format!("double-{}-{}", f.name(), a.name()), "double", move |ctx| {
                match verify_cross_pair(ctx.double(), f, a) {
                    Ok(r) => Outcome::new(r.passed(), r.to_json()),
                    Err(e) => Outcome::error(e),
                }
            }));
        }
    }
    for id in BRACKET_CATALOGUE {
        out.push(Check::new(id.id, "bracket", move |ctx| identity_check(ctx, id)).method(id.method.name()));
    }
    for id in LEMMA_SUITE {
        out.push(Check::new(id.id, "lemma", move |ctx| identity_check(ctx, id)).method(id.method.name()));
    }
    out.push(Check::new("lemma-oracle-agreement", "lemma", oracle_agreement).method("both"));
    out.push(Check::new("root-vectors-adjoint", "lusztig", |ctx| match RootVectorRegistry::new(ctx.rules()) {
        Ok(reg) => Outcome::new(true, json!({ "vectors": reg.vectors.len() })),
        Err(e) => Outcome::error(e),
    }));
    out.push(Check::new("ad-serre", "lusztig", |ctx| match adjoint_serre_elements(ctx.rules()) {
        Ok(els) => {
            let bad: Vec<String> = els.into_iter().filter(|(_, x)| !x.is_zero()).map(|(n, _)| n).collect();
            Outcome::new(bad.is_empty(), json!({ "nonzero": bad }))
        }
        Err(e) => Outcome::error(e),
    }));
    out.push(Check::new("t-weights", "lusztig", |_| t_weights()));
    out.push(Check::new("t-pairing-transport", "lusztig", |_| {
        let ok = pairing_transport_holds();
        Outcome::new(ok, json!({}))
    }));
    for i in 0..2 {
        for rel in RELATION_IDS {
            out.push(
                Check::new(format!("t-preserve-T{}-{rel}", i + 1), "lusztig", move |ctx| {
                    match verify_t_preserves(ctx.lusztig(), i, rel) {
                        Ok(c) => Outcome::new(c.passed(), json!({ "elements": c.elements, "failing": c.failures })),
                        Err(e) => Outcome::error(e),
                    }
                })
                .method("rewriter"),
            );
        }
    }
    out.push(Check::new("specialization-ef", "specialization", |_| specialization_check()));
    out
}

/// Run every check whose id matches `filter` (a glob), on `jobs` threads.
pub fn run_suite(filter: Option<&str>, jobs: usize) -> Result<SuiteReport, String> {
    let pattern = filter.map(glob::Pattern::new).transpose().map_err(|e| e.to_string())?;
    let checks: Vec<Check> =
        registry().into_iter().filter(|c| pattern.as_ref().is_none_or(|p| p.matches(&c.id))).collect();
    let ctx = Ctx::new();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build().map_err(|e| e.to_string())?;
    let start = Instant::now();
    let results = pool.install(|| {
        use rayon::prelude::*;
        checks.par_iter().map(|c| c.run(&ctx)).collect::<Vec<_>>()
    });
    Ok(SuiteReport { results, total_millis: start.elapsed().as_millis() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kostant_small() {
        assert_eq!(kostant_count(1, 0), 1);
        assert_eq!(kostant_count(1, 1), 2);
        assert_eq!(kostant_count(3, 2), 7);
    }

    #[test]
    fn ids_are_unique() {
        let reg = registry();
        let mut ids: Vec<&str> = reg.iter().map(|c| c.id.as_str()).collect();
        ids.sort();
        let n = ids.len();
        ids.dedup();
        assert_eq!(ids.len(), n);
    }

    #[test]
    fn samples_are_deterministic() {
        assert_eq!(hopf_sample_words(), hopf_sample_words());
        assert_eq!(antipode_sample_pairs(), antipode_sample_pairs());
    }
}

//! Term-by-term evaluation of `<X, quintic e-Serre element>` for words `X`
//! with four `f1` and one `f2`.
//!
//! `Δ^op` splits `X` into five slots; only the 120 terms with exactly one
//! `f` per slot pair non-trivially with the five-letter `e`-words. Each such
//! row contributes `a * x^i * xbar^j * y^k` where
//! `a = <f1,e1>^4 <f2,e2>`, `x = <w1',w1>`, `xbar = <w1',w2>`, `y = <w2',w1>`.

use crate::free::{Gen, Letter, NcPoly, Word};
use crate::hopf::coproduct_n;
use crate::pairing::Pairing;
use crate::relations::{quintic_coeffs, Params};
use crate::scalar::RatFunc;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::json;
use std::collections::BTreeMap;
use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TabularError {
    #[error("expected a word with four f1 and one f2, got {0}")]
    BadWord(String),
    #[error("fixture line {line}: {msg}")]
    Fixture { line: usize, msg: String },
}

/// Exponents of `a, x, xbar, y, z` where `z = <w2', w2>`.
pub type XyExp = [u32; 5];

pub const XY_NAMES: [&str; 5] = ["a", "x", "xbar", "y", "z"];

/// Polynomial in the symbols `a, x, xbar, y, z` with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct XyPoly(pub BTreeMap<XyExp, BigInt>);

impl XyPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn mono(e: XyExp) -> Self {
        let mut p = Self::zero();
        p.add_term(e, BigInt::one());
        p
    }

    pub fn add_term(&mut self, e: XyExp, c: BigInt) {
        let slot = self.0.entry(e).or_default();
        *slot += c;
        if slot.is_zero() {
            self.0.remove(&e);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut p = self.clone();
        for (e, c) in &o.0 {
            p.add_term(*e, c.clone());
        }
        p
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut p = Self::zero();
        for (a, ca) in &self.0 {
            for (b, cb) in &o.0 {
                let mut e = [0; 5];
                for k in 0..5 {
                    e[k] = a[k] + b[k];
                }
                p.add_term(e, ca * cb);
            }
        }
        p
    }

    /// Parse `2*a*x^3*xbar - y + 1`; only sums of monomials are accepted.
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut p = Self::zero();
        let t = text.replace(' ', "");
        if t.is_empty() {
            return Err("empty".into());
        }
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for (i, ch) in t.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 {
                terms.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
            } else if ch == '-' {
                neg = true;
            } else if ch != '+' {
                cur.push(ch);
            }
        }
        terms.push((neg, cur));
        for (neg, body) in terms {
            let mut e = [0u32; 5];
            let mut c = BigInt::one();
            for f in body.split('*') {
                let (base, pow) = match f.split_once('^') {
                    Some((b, p)) => (b, p.parse::<u32>().map_err(|_| format!("bad exponent in {f}"))?),
                    None => (f, 1),
                };
                if let Some(k) = XY_NAMES.iter().position(|n| *n == base) {
                    e[k] += pow;
                } else {
                    let n: BigInt = base.parse().map_err(|_| format!("unknown symbol {base}"))?;
                    c *= num_traits::pow(n, pow as usize);
                }
            }
            p.add_term(e, if neg { -c } else { c });
        }
        Ok(p)
    }

    pub fn render(&self) -> String {
        if self.0.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.0.iter().enumerate() {
            let neg = c.sign() == num_bigint::Sign::Minus;
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = if neg { -c } else { c.clone() };
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() {
                factors.push(mag.to_string());
            }
            for (n, &p) in XY_NAMES.iter().zip(e) {
                match p {
                    0 => {}
                    1 => factors.push(n.to_string()),
                    p => factors.push(format!("{n}^{p}")),
                }
            }
            if factors.is_empty() {
                factors.push("1".into());
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    /// Substitute the pairing values of `pairing`.
    pub fn eval(&self, pairing: &Pairing) -> RatFunc {
        let vals = [
            pairing.fe(0).pow(4).unwrap().mul(pairing.fe(1)),
            pairing.ww(0, 0),
            pairing.ww(0, 1),
            pairing.ww(1, 0),
            pairing.ww(1, 1),
        ];
        let mut acc = RatFunc::zero();
        for (e, c) in &self.0 {
            let mut t = RatFunc::from_bigint(c.clone());
            for k in 0..5 {
                t = t.mul(&vals[k].pow(e[k] as i64).unwrap());
            }
            acc = acc.add(&t);
        }
        acc
    }
}

/// One relevant term of `Δ^op(X)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TabularRow {
    pub column: usize,
    pub slots: [Word; 5],
    pub value: XyExp,
}

/// The full term table for one word `X`.
#[derive(Clone, Debug)]
pub struct TabularReport {
    pub word: Word,
    pub rows: Vec<TabularRow>,
    pub column_sums: [XyPoly; 5],
    /// Column sums with the pairing values substituted.
    pub column_values: [RatFunc; 5],
    /// `Σ c_k * column_k` with the Serre coefficients `c_k`.
    pub weighted_total: RatFunc,
}

/// The `e`-word paired against column `c` (1-based): `e2` sits in slot `6 - c`.
pub fn column_pattern(c: usize) -> [usize; 5] {
    let mut p = [0; 5];
    p[5 - c] = 1;
    p
}

/// The five-term quintic Serre element as a list of `(coefficient, pattern)`
/// in column order.
pub fn column_weights(params: Params) -> [RatFunc; 5] {
    quintic_coeffs().map(|c| params.apply(&c))
}

pub fn tabular_report(x: &Word, pairing: &Pairing) -> Result<TabularReport, TabularError> {
    let n_f1 = x.gens().iter().filter(|g| **g == Gen::F1).count();
    let n_f2 = x.gens().iter().filter(|g| **g == Gen::F2).count();
    if n_f1 != 4 || n_f2 != 1 || x.len() != 5 {
        return Err(TabularError::BadWord(x.render()));
    }
    let split = coproduct_n(&NcPoly::word(x.clone()), 5, true);
    let mut rows = Vec::new();
    for (slots, c) in split.terms() {
        debug_assert!(c.is_one());
        let fs: Vec<Option<usize>> = slots
            .iter()
            .map(|w| {
                let f: Vec<usize> = w
                    .gens()
                    .iter()
                    .filter_map(|g| match g.letter() {
                        Letter::F(i) => Some(i),
                        _ => None,
                    })
                    .collect();
                (f.len() == 1).then(|| f[0])
            })
            .collect();
        if fs.iter().any(Option::is_none) {
            continue;
        }
        let f2_slot = fs.iter().position(|f| *f == Some(1)).unwrap();
        let column = 5 - f2_slot;
        let pattern = column_pattern(column);
        let mut value: XyExp = [1, 0, 0, 0, 0];
        for (w, &e) in slots.iter().zip(pattern.iter()) {
            for g in w.gens() {
                match g.letter() {
                    Letter::F(_) => break,
                    Letter::Wp(i, _) => {
                        let k = match (i, e) {
                            (0, 0) => 1,
                            (0, _) => 2,
                            (_, 0) => 3,
                            _ => 4,
                        };
                        value[k] += 1;
                    }
                    _ => unreachable!(),
                }
            }
        }
        rows.push(TabularRow { column, slots: slots.clone().try_into().unwrap(), value });
    }
    rows.sort_by(|a, b| a.column.cmp(&b.column).then_with(|| a.slots.cmp(&b.slots)));
    let mut column_sums: [XyPoly; 5] = Default::default();
    for row in &rows {
        column_sums[row.column - 1].add_term(row.value, BigInt::one());
    }
    let column_values = column_sums.clone().map(|p| p.eval(pairing));
    let weights = column_weights(pairing.params());
    let weighted_total =
        column_values.iter().zip(weights.iter()).fold(RatFunc::zero(), |acc, (v, w)| acc.add(&v.mul(w)));
    Ok(TabularReport { word: x.clone(), rows, column_sums, column_values, weighted_total })
}

/// Sort runs of commuting `w'` letters so rows compare up to reordering.
fn canonical_slot(w: &Word) -> Vec<Gen> {
    let mut out = Vec::new();
    let mut run: Vec<Gen> = Vec::new();
    for &g in w.gens() {
        if g.is_group_like() {
            run.push(g);
        } else {
            run.sort();
            out.append(&mut run);
            out.push(g);
        }
    }
    run.sort();
    out.append(&mut run);
    out
}

fn value_render(e: &XyExp) -> String {
    XyPoly::mono(*e).render()
}

fn row_key(r: &TabularRow) -> (usize, Vec<Vec<Gen>>, XyExp) {
    (r.column, r.slots.iter().map(canonical_slot).collect(), r.value)
}

/// Parse a transcribed table: `column,slot1,...,slot5,value` with `#`
/// comments and one header line.
pub fn parse_fixture(text: &str) -> Result<Vec<TabularRow>, TabularError> {
    let mut rows = Vec::new();
    let mut header_seen = false;
    for (ln, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if !header_seen {
            header_seen = true;
            continue;
        }
        let err = |msg: String| TabularError::Fixture { line: ln + 1, msg };
        let cells: Vec<&str> = line.split(',').collect();
        if cells.len() != 7 {
            return Err(err(format!("expected 7 cells, got {}", cells.len())));
        }
        let column: usize = cells[0].parse().map_err(|_| err("bad column".into()))?;
        let mut slots: Vec<Word> = Vec::new();
        for cell in &cells[1..6] {
            slots.push(parse_slot(cell).map_err(err)?);
        }
        let v = XyPoly::parse(cells[6]).map_err(err)?;
        if v.0.len() != 1 {
            return Err(err("value must be a monomial".into()));
        }
        let value = *v.0.keys().next().unwrap();
        rows.push(TabularRow { column, slots: slots.try_into().unwrap(), value });
    }
    Ok(rows)
}

fn parse_slot(cell: &str) -> Result<Word, String> {
    let mut gens = Vec::new();
    if cell == "1" {
        return Ok(Word::empty());
    }
    for f in cell.split('*') {
        let (base, pow) = match f.split_once('^') {
            Some((b, p)) => (b, p.parse::<usize>().map_err(|_| format!("bad exponent in {f}"))?),
            None => (f, 1),
        };
        let g = match base {
            "f1" => Gen::F1,
            "f2" => Gen::F2,
            "w1'" => Gen::W1p,
            "w2'" => Gen::W2p,
            _ => return Err(format!("unknown slot letter {base}")),
        };
        gens.extend(std::iter::repeat_n(g, pow));
    }
    Ok(Word::from_gens(&gens))
}

/// Rows present only in the computed table (`+`) or only in the reference
/// (`-`), compared up to reordering of commuting group-likes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FixtureDiff {
    pub computed_only: Vec<TabularRow>,
    pub reference_only: Vec<TabularRow>,
}

impl FixtureDiff {
    pub fn is_empty(&self) -> bool {
        self.computed_only.is_empty() && self.reference_only.is_empty()
    }

    /// Unified-style listing of the differing rows.
    pub fn render(&self) -> String {
        let a: Vec<String> = self.reference_only.iter().map(row_csv).collect();
        let b: Vec<String> = self.computed_only.iter().map(row_csv).collect();
        let before = a.join("\n") + "\n";
        let after = b.join("\n") + "\n";
        similar::TextDiff::from_lines(&before, &after).unified_diff().header("reference", "computed").to_string()
    }
}

pub fn diff_against(report: &TabularReport, reference: &[TabularRow]) -> FixtureDiff {
    let mut pool: BTreeMap<(usize, Vec<Vec<Gen>>, XyExp), Vec<TabularRow>> = BTreeMap::new();
    for r in reference {
        pool.entry(row_key(r)).or_default().push(r.clone());
    }
    let mut computed_only = Vec::new();
    for r in &report.rows {
        match pool.get_mut(&row_key(r)) {
            Some(v) if !v.is_empty() => {
                v.pop();
            }
            _ => computed_only.push(r.clone()),
        }
    }
    let reference_only = pool.into_values().flatten().collect();
    FixtureDiff { computed_only, reference_only }
}

fn row_csv(r: &TabularRow) -> String {
    let mut s = r.column.to_string();
    for w in &r.slots {
        let _ = write!(s, ",{}", w.render());
    }
    let _ = write!(s, ",{}", value_render(&r.value));
    s
}

impl TabularReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("column,slot1,slot2,slot3,slot4,slot5,value\n");
        for r in &self.rows {
            out.push_str(&row_csv(r));
            out.push('\n');
        }
        for (k, (s, v)) in self.column_sums.iter().zip(&self.column_values).enumerate() {
            let _ = writeln!(out, "sum{},,,,,,\"{}\",\"{}\"", k + 1, s.render(), v);
        }
        let _ = writeln!(out, "total,,,,,,,\"{}\"", self.weighted_total);
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "word": self.word.render(),
            "rows": self.rows.iter().map(|r| json!({
                "column": r.column,
                "slots": r.slots.iter().map(Word::render).collect::<Vec<_>>(),
                "value": value_render(&r.value),
            })).collect::<Vec<_>>(),
            "column_sums": self.column_sums.iter().zip(&self.column_values).map(|(s, v)| json!({
                "symbolic": s.render(),
                "value": v.render(),
            })).collect::<Vec<_>>(),
            "weighted_total": self.weighted_total.render(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("X = {}\n", self.word.render());
        let mut last = 0;
        for r in &self.rows {
            if r.column != last {
                last = r.column;
                let _ = writeln!(out, "column {last}");
            }
            let slots: Vec<String> = r.slots.iter().map(Word::render).collect();
            let _ = writeln!(out, "  {:<60} {}", slots.join(" ⊗ "), value_render(&r.value));
        }
        for (k, (s, v)) in self.column_sums.iter().zip(&self.column_values).enumerate() {
            let _ = writeln!(out, "sum of column {}: {}  =  {}", k + 1, s.render(), v);
        }
        let _ = writeln!(out, "weighted total: {}", self.weighted_total);
        out
    }
}

/// The five `f`-words of weight `(-4, -1)` with their reference tables.
pub const TABULAR_WORDS: [&str; 5] = ["f1^4*f2", "f2*f1^4", "f1^2*f2*f1^2", "f1^3*f2*f1", "f1*f2*f1^3"];

/// Reference table `k` (1-based), as shipped in `fixtures/`.
pub fn fixture_text(k: usize) -> &'static str {
    match k {
        1 => include_str!("../fixtures/tabular1.csv"),
        2 => include_str!("../fixtures/tabular2.csv"),
        3 => include_str!("../fixtures/tabular3.csv"),
        4 => include_str!("../fixtures/tabular4.csv"),
        5 => include_str!("../fixtures/tabular5.csv"),
        _ => panic!("no table {k}"),
    }
}

/// Parse `f1^2*f2*f1` style words.
pub fn parse_f_word(text: &str) -> Option<Word> {
    let mut gens = Vec::new();
    for f in text.split('*').map(str::trim) {
        let (b, n) = match f.split_once('^') {
            Some((b, n)) => (b, n.parse::<usize>().ok()?),
            None => (f, 1),
        };
        let g = match b {
            "f1" => Gen::F1,
            "f2" => Gen::F2,
            _ => return None,
        };
        gens.extend(std::iter::repeat_n(g, n));
    }
    Some(Word::from_gens(&gens))
}

const P6: &str = "1 + 3*x + 5*x^2 + 6*x^3 + 5*x^4 + 3*x^5 + x^6";
const P4: &str = "1 + 3*x + 4*x^2 + 3*x^3 + x^4";
const Q5: &str = "1 + 3*x + 5*x^2 + 5*x^3 + 3*x^4 + x^5";
const Q3: &str = "1 + 2*x + 2*x^2 + x^3";

/// Factored column sums of reference table `k`, including the overall `a`.
pub fn reference_column_sums(k: usize) -> [XyPoly; 5] {
    let p = |s: &str| XyPoly::parse(s).unwrap();
    let t = |a: &str, b: &str| p(a).mul(&p(b));
    let cols = match k {
        1 => std::array::from_fn(|c| t(P6, &format!("xbar^{c}"))),
        2 => std::array::from_fn(|c| t(P6, &format!("y^{}", 4 - c))),
        3 => [
            t(P6, "y^2"),
            t(P4, "y").mul(&p("1 + xbar*y*x^2")),
            p("1 + 2*x + x^2")
                .add(&t("xbar*x*y", "1 + 4*x + 6*x^2 + 4*x^3 + x^4"))
                .add(&t("xbar^2*y^2*x^4", "1 + 2*x + x^2")),
            t(P4, "xbar + xbar^2*x^2*y"),
            t(P6, "xbar^2"),
        ],
        4 => [
            t(P6, "y"),
            p(Q3).add(&t("x*xbar*y", Q5)),
            t(P4, "xbar").add(&t(P4, "xbar^2*y*x^2")),
            t(Q5, "xbar^2").add(&t("xbar^3*y", "x^3 + 2*x^4 + 2*x^5 + x^6")),
            t(P6, "xbar^3"),
        ],
        5 => [
            t(P6, "y^3"),
            t("xbar*y^3*x^3", Q3).add(&t(Q5, "y^2")),
            t(P4, "y").add(&t(P4, "xbar*y^2*x^2")),
            t("xbar*y*x", Q5).add(&p(Q3)),
            t(P6, "xbar"),
        ],
        _ => panic!("no table {k}"),
    };
    cols.map(|c: XyPoly| c.mul(&p("a")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xy_parse_roundtrip() {
        let p = XyPoly::parse("a*x^3*xbar*y^2 - 2*y + 1").unwrap();
        assert_eq!(XyPoly::parse(&p.render()).unwrap(), p);
    }

    #[test]
    fn patterns() {
        assert_eq!(column_pattern(1), [0, 0, 0, 0, 1]);
        assert_eq!(column_pattern(5), [1, 0, 0, 0, 0]);
    }

    #[test]
    fn rejects_wrong_word() {
        let p = Pairing::new(Params::Standard);
        let w = Word::from_gens(&[Gen::F1, Gen::F2]);
        assert!(tabular_report(&w, &p).is_err());
    }
}

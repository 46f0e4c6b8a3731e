//! Sparse polynomials in `Z[r, s]`.

use super::upoly::UPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;

/// Exponent pair `(deg_r, deg_s)`.
pub type Exp = (u32, u32);

/// Graded-lex with `r > s`.
pub fn grlex(a: &Exp, b: &Exp) -> Ordering {
    (a.0 + a.1, a.0).cmp(&(b.0 + b.1, b.0))
}

/// Terms sorted by decreasing [`grlex`], no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct BiPoly {
    terms: Vec<(Exp, BigInt)>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, (0, 0))
    }

    pub fn monomial(c: BigInt, e: Exp) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            BiPoly { terms: vec![(e, c)] }
        }
    }

    pub fn r() -> Self {
        Self::monomial(BigInt::one(), (1, 0))
    }

    pub fn s() -> Self {
        Self::monomial(BigInt::one(), (0, 1))
    }

    pub fn from_map(map: BTreeMap<Exp, BigInt>) -> Self {
        let mut terms: Vec<(Exp, BigInt)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| grlex(&b.0, &a.0));
        BiPoly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Exp, BigInt)>) -> Self {
        let mut map: BTreeMap<Exp, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_default() += c;
        }
        Self::from_map(map)
    }

    pub fn terms(&self) -> &[(Exp, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0) && self.terms[0].1.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.terms.len() == 1 && self.terms[0].0 == (0, 0))
    }

    pub fn lead(&self) -> Option<&(Exp, BigInt)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.lead().map(|(e, _)| e.0 + e.1)
    }

    pub fn max_r(&self) -> u32 {
        self.terms.iter().map(|(e, _)| e.0).max().unwrap_or(0)
    }

    pub fn max_s(&self) -> u32 {
        self.terms.iter().map(|(e, _)| e.1).max().unwrap_or(0)
    }

    /// Componentwise minimum exponent over all terms.
    pub fn min_exp(&self) -> Exp {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else {
            return (0, 0);
        };
        it.fold(*first, |acc, (e, _)| (acc.0.min(e.0), acc.1.min(e.1)))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match grlex(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a[i].1 + &b[j].1;
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        BiPoly { terms: out }
    }

    pub fn neg(&self) -> Self {
        BiPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if other.is_monomial() {
            let (e, c) = &other.terms[0];
            return self.mul_term(*e, c);
        }
        if self.is_monomial() {
            let (e, c) = &self.terms[0];
            return other.mul_term(*e, c);
        }
        let mut map: BTreeMap<Exp, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                *map.entry((ea.0 + eb.0, ea.1 + eb.1)).or_default() += ca * cb;
            }
        }
        Self::from_map(map)
    }

    /// Multiply by `c * r^e.0 * s^e.1`; order is preserved.
    pub fn mul_term(&self, e: Exp, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BiPoly { terms: self.terms.iter().map(|(x, a)| ((x.0 + e.0, x.1 + e.1), a * c)).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        self.mul_term((0, 0), c)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Divide by the monomial `r^e.0 s^e.1`; caller guarantees divisibility.
    pub fn div_exp(&self, e: Exp) -> Self {
        BiPoly { terms: self.terms.iter().map(|(x, a)| ((x.0 - e.0, x.1 - e.1), a.clone())).collect() }
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn div_scalar_exact(&self, c: &BigInt) -> Self {
        BiPoly { terms: self.terms.iter().map(|(e, a)| (*e, a / c)).collect() }
    }

    /// Exact division; `None` if `d` does not divide `self` in `Z[r, s]`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (ld_e, ld_c) = d.lead()?.clone();
        if d.is_monomial() {
            let mut out = Vec::with_capacity(self.terms.len());
            for (e, c) in &self.terms {
                if e.0 < ld_e.0 || e.1 < ld_e.1 {
                    return None;
                }
                let (q, rem) = c.div_rem(&ld_c);
                if !rem.is_zero() {
                    return None;
                }
                out.push(((e.0 - ld_e.0, e.1 - ld_e.1), q));
            }
            return Some(BiPoly { terms: out });
        }
        let mut rem = self.clone();
        let mut quot: Vec<(Exp, BigInt)> = Vec::new();
        while let Some((e, c)) = rem.lead().cloned() {
            if e.0 < ld_e.0 || e.1 < ld_e.1 {
                return None;
            }
            let (q, r) = c.div_rem(&ld_c);
            if !r.is_zero() {
                return None;
            }
            let qe = (e.0 - ld_e.0, e.1 - ld_e.1);
            rem = rem.sub(&d.mul_term(qe, &q));
            quot.push((qe, q));
        }
        Some(BiPoly { terms: quot })
    }

    /// View as a polynomial in `s` with coefficients in `Z[r]`.
    fn to_recursive(&self) -> Vec<UPoly> {
        let ds = self.max_s() as usize;
        let dr = self.max_r() as usize;
        let mut rows = vec![vec![BigInt::zero(); dr + 1]; ds + 1];
        for ((i, j), c) in &self.terms {
            rows[*j as usize][*i as usize] = c.clone();
        }
        rows.into_iter().map(UPoly::from_coeffs).collect()
    }

    fn from_recursive(rows: &[UPoly]) -> Self {
        let mut map = BTreeMap::new();
        for (j, row) in rows.iter().enumerate() {
            for (i, c) in row.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    map.insert((i as u32, j as u32), c.clone());
                }
            }
        }
        Self::from_map(map)
    }

    /// Gcd in `Z[r, s]`, normalized so the leading coefficient is positive.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalize_sign().0;
        }
        if other.is_zero() {
            return self.normalize_sign().0;
        }
        if self == other {
            return self.normalize_sign().0;
        }
        if self.is_monomial() || other.is_monomial() {
            return monomial_gcd(self, other);
        }
        // strip common monomial factors first; keeps the recursive view small
        let ma = self.min_exp();
        let mb = other.min_exp();
        let m = (ma.0.min(mb.0), ma.1.min(mb.1));
        let a = self.div_exp(ma);
        let b = other.div_exp(mb);
        let g = recursive_gcd(&a, &b);
        g.mul_term(m, &BigInt::one())
    }

    /// Returns `(±self, sign)` with positive leading coefficient.
    pub fn normalize_sign(&self) -> (Self, bool) {
        match self.lead() {
            Some((_, c)) if c.is_negative() => (self.neg(), true),
            _ => (self.clone(), false),
        }
    }

    /// Substitute rational values for `r` and `s`.
    pub fn eval<T>(&self, r: &T, s: &T) -> T
    where
        T: Clone + Zero + One + std::ops::Mul<Output = T> + std::ops::Add<Output = T> + From<BigInt>,
    {
        let mut acc = T::zero();
        for ((i, j), c) in &self.terms {
            let mut t = T::from(c.clone());
            for _ in 0..*i {
                t = t * r.clone();
            }
            for _ in 0..*j {
                t = t * s.clone();
            }
            acc = acc + t;
        }
        acc
    }
}

fn monomial_gcd(a: &BiPoly, b: &BiPoly) -> BiPoly {
    let c = a.content().gcd(&b.content());
    let ma = a.min_exp();
    let mb = b.min_exp();
    BiPoly::monomial(c, (ma.0.min(mb.0), ma.1.min(mb.1)))
}

fn upoly_gcd_all(rows: &[UPoly]) -> UPoly {
    let mut g = UPoly::zero();
    for row in rows {
        if row.is_zero() {
            continue;
        }
        g = if g.is_zero() { row.clone() } else { g.gcd(row) };
        if g.is_constant() {
            // a constant content only matters through its integer part
            let c = rows.iter().fold(BigInt::zero(), |acc, r| acc.gcd(&r.content()));
            return UPoly::constant(c);
        }
    }
    if g.lead().is_some_and(|l| l.is_negative()) {
        g = g.neg();
    }
    g
}

fn content_split(rows: &[UPoly]) -> (UPoly, Vec<UPoly>) {
    let cont = upoly_gcd_all(rows);
    let prim = rows.iter().map(|r| r.div_exact(&cont).expect("content divides")).collect();
    (cont, trim_rows(prim))
}

fn trim_rows(mut rows: Vec<UPoly>) -> Vec<UPoly> {
    while rows.last().is_some_and(|r| r.is_zero()) {
        rows.pop();
    }
    rows
}

fn rows_prem(a: &[UPoly], b: &[UPoly]) -> Vec<UPoly> {
    let db = b.len() - 1;
    let lb = b[db].clone();
    let mut r: Vec<UPoly> = a.to_vec();
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let mut next: Vec<UPoly> = r.iter().map(|x| x.mul(&lb)).collect();
        for (k, bk) in b.iter().enumerate() {
            let t = bk.mul(&lr);
            next[k + dr - db] = next[k + dr - db].sub(&t);
        }
        r = trim_rows(next);
    }
    r
}

fn recursive_gcd(a: &BiPoly, b: &BiPoly) -> BiPoly {
    let ra = trim_rows(a.to_recursive());
    let rb = trim_rows(b.to_recursive());
    let (ca, mut pa) = content_split(&ra);
    let (cb, mut pb) = content_split(&rb);
    let c = ca.gcd(&cb);
    if pa.len() < pb.len() {
        std::mem::swap(&mut pa, &mut pb);
    }
    while !pb.is_empty() {
        if pb.len() == 1 {
            // a nonzero element of Z[r] that is primitive over Z[r]: unit
            pa = vec![UPoly::one()];
            break;
        }
        let r = rows_prem(&pa, &pb);
        pa = pb;
        pb = if r.is_empty() { r } else { content_split(&r).1 };
    }
    let g = BiPoly::from_recursive(&pa);
    let g = BiPoly::from_recursive(&[c]).mul(&g);
    let (g, _) = g.normalize_sign();
    let k = g.content();
    let g = if k.is_zero() || k.is_one() { g } else { g.div_scalar_exact(&k) };
    // integer content is the gcd of the two integer contents
    let ic = a.content().gcd(&b.content());
    g.scale(&ic)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[((u32, u32), i64)]) -> BiPoly {
        BiPoly::from_terms(terms.iter().map(|(e, c)| (*e, BigInt::from(*c))))
    }

    #[test]
    fn ordering_puts_r_first() {
        let p = poly(&[((0, 2), 1), ((1, 1), 1), ((2, 0), 1)]);
        assert_eq!(p.terms()[0].0, (2, 0));
        assert_eq!(p.terms()[2].0, (0, 2));
    }

    #[test]
    fn difference_of_cubes_divides() {
        let a = poly(&[((3, 0), 1), ((0, 3), -1)]);
        let b = poly(&[((1, 0), 1), ((0, 1), -1)]);
        let delta = poly(&[((2, 0), 1), ((1, 1), 1), ((0, 2), 1)]);
        assert_eq!(a.div_exact(&b), Some(delta.clone()));
        assert_eq!(a.gcd(&b), b);
        assert_eq!(a.gcd(&delta), delta);
    }

    #[test]
    fn gcd_of_products() {
        let x = poly(&[((1, 0), 1), ((0, 1), 1)]);
        let y = poly(&[((2, 0), 1), ((0, 2), 1)]);
        let z = poly(&[((1, 1), 1), ((0, 0), -2)]);
        let a = x.mul(&y).mul(&z).scale(&BigInt::from(6));
        let b = x.mul(&z).mul(&z).scale(&BigInt::from(-4));
        assert_eq!(a.gcd(&b), x.mul(&z).scale(&BigInt::from(2)).normalize_sign().0);
    }

    #[test]
    fn gcd_with_monomial_factor() {
        let a = poly(&[((3, 1), 1), ((1, 3), -1)]);
        let b = poly(&[((2, 0), 1), ((1, 1), -1)]);
        // r s (r-s)(r+s) and r (r - s)
        assert_eq!(a.gcd(&b), poly(&[((2, 0), 1), ((1, 1), -1)]));
    }

    #[test]
    fn coprime_gives_one() {
        let a = poly(&[((1, 0), 1), ((0, 1), 1)]);
        let b = poly(&[((1, 0), 1), ((0, 1), -1)]);
        assert!(a.gcd(&b).is_one());
    }
}

//! Elements of the field `Q(r, s)` in canonical reduced form.

use super::bipoly::{BiPoly, Exp};
use super::qfunc::QFunc;
use super::upoly::UPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// `num / den` with `gcd(num, den) = 1` over `Z[r, s]` and the leading
/// coefficient of `den` positive. Zero is `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: BiPoly,
    den: BiPoly,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("specialization hits a pole at r = q, s = 1/q")]
    Pole,
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: BiPoly::zero(), den: BiPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        RatFunc { num: BiPoly::constant(n), den: BiPoly::one() }
    }

    pub fn from_poly(p: BiPoly) -> Self {
        RatFunc { num: p, den: BiPoly::one() }
    }

    pub fn r() -> Self {
        Self::from_poly(BiPoly::r())
    }

    pub fn s() -> Self {
        Self::from_poly(BiPoly::s())
    }

    /// `c * r^i * s^j` with arbitrary integer exponents.
    pub fn laurent(c: i64, i: i32, j: i32) -> Self {
        let mut num_e: Exp = (0, 0);
        let mut den_e: Exp = (0, 0);
        if i >= 0 {
            num_e.0 = i as u32;
        } else {
            den_e.0 = (-i) as u32;
        }
        if j >= 0 {
            num_e.1 = j as u32;
        } else {
            den_e.1 = (-j) as u32;
        }
        if c == 0 {
            return Self::zero();
        }
        RatFunc { num: BiPoly::monomial(BigInt::from(c), num_e), den: BiPoly::monomial(BigInt::one(), den_e) }
    }

    /// `r^i s^j`.
    pub fn rs_pow(i: i32, j: i32) -> Self {
        Self::laurent(1, i, j)
    }

    /// Build from numerator and denominator, reducing to canonical form.
    pub fn new(num: BiPoly, den: BiPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: BiPoly, den: BiPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        let (den, flip) = den.normalize_sign();
        let num = if flip { num.neg() } else { num };
        RatFunc { num, den }
    }

    pub fn num(&self) -> &BiPoly {
        &self.num
    }

    pub fn den(&self) -> &BiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True for `c * r^i * s^j`.
    pub fn is_monomial(&self) -> bool {
        self.num.is_monomial() && self.den.is_monomial()
    }

    /// Integer constant value, if any.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.den.is_one() && self.num.is_constant() {
            Some(self.num.lead().map(|(_, c)| c.clone()).unwrap_or_default())
        } else {
            None
        }
    }

    /// `(c, i, j)` if this is `c * r^i * s^j` with integer `c`.
    pub fn as_laurent_monomial(&self) -> Option<(BigInt, i32, i32)> {
        if !self.is_monomial() {
            return None;
        }
        let (ne, nc) = self.num.lead()?;
        let (de, dc) = self.den.lead()?;
        if !dc.is_one() {
            return None;
        }
        Some((nc.clone(), ne.0 as i32 - de.0 as i32, ne.1 as i32 - de.1 as i32))
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let n = self.num.add(&other.num);
            if self.den.is_one() {
                return RatFunc { num: n, den: BiPoly::one() };
            }
            return Self::reduce(n, self.den.clone());
        }
        let g = self.den.gcd(&other.den);
        if g.is_one() {
            let n = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            if n.is_zero() {
                return Self::zero();
            }
            // coprime denominators leave nothing to cancel
            return RatFunc { num: n, den: self.den.mul(&other.den) };
        }
        let b1 = self.den.div_exact(&g).expect("gcd divides");
        let d1 = other.den.div_exact(&g).expect("gcd divides");
        let n = self.num.mul(&d1).add(&other.num.mul(&b1));
        let d = b1.mul(&other.den);
        Self::reduce(n, d)
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let a = if g1.is_one() { self.num.clone() } else { self.num.div_exact(&g1).unwrap() };
        let d = if g1.is_one() { other.den.clone() } else { other.den.div_exact(&g1).unwrap() };
        let c = if g2.is_one() { other.num.clone() } else { other.num.div_exact(&g2).unwrap() };
        let b = if g2.is_one() { self.den.clone() } else { self.den.div_exact(&g2).unwrap() };
        let num = a.mul(&c);
        let den = b.mul(&d);
        let (den, flip) = den.normalize_sign();
        RatFunc { num: if flip { num.neg() } else { num }, den }
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let (den, flip) = self.num.normalize_sign();
        let num = if flip { self.den.neg() } else { self.den.clone() };
        Ok(RatFunc { num, den })
    }

    pub fn div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul(&other.inv()?))
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, n: i64) -> Result<Self, ScalarError> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        let mut b = base;
        let mut e = n.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        Ok(acc)
    }

    /// The field automorphism `r -> s^-1, s -> r^-1`.
    pub fn swap(&self) -> Self {
        let dr = self.num.max_s().max(self.den.max_s());
        let ds = self.num.max_r().max(self.den.max_r());
        let sw = |p: &BiPoly| BiPoly::from_terms(p.terms().iter().map(|((i, j), c)| ((dr - j, ds - i), c.clone())));
        Self::reduce(sw(&self.num), sw(&self.den))
    }

    /// Substitute `r = q`, `s = q^-1`.
    pub fn specialize(&self) -> Result<QFunc, ScalarError> {
        let n = to_q(&self.num);
        let d = to_q(&self.den);
        if d.0.is_zero() {
            return Err(ScalarError::Pole);
        }
        QFunc::from_laurent(n.0, n.1, d.0, d.1)
    }

    /// Evaluate at rational `r`, `s`.
    pub fn eval(&self, r: &BigRational, s: &BigRational) -> Result<BigRational, ScalarError> {
        let d = self.den.eval(r, s);
        if d.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(self.num.eval(r, s) / d)
    }

    /// Textual form, e.g. `(r^2 + r*s + s^2)/(r*s)`.
    pub fn render(&self) -> String {
        let n = render_poly(&self.num);
        if self.den.is_one() {
            return n;
        }
        let n = if self.num.terms().len() > 1 { format!("({n})") } else { n };
        let d = render_poly(&self.den);
        let bare = self.den.terms().len() == 1 && !d.contains('*');
        if bare {
            format!("{n}/{d}")
        } else {
            format!("{n}/({d})")
        }
    }
}

/// Maps `r^i s^j` to `q^(i-j)`; returns a polynomial and a shift `k` meaning
/// `poly * q^-k`.
fn to_q(p: &BiPoly) -> (UPoly, usize) {
    let shift = p.terms().iter().map(|((_, j), _)| *j as i64).max().unwrap_or(0);
    let mut coeffs: Vec<BigInt> = Vec::new();
    for ((i, j), c) in p.terms() {
        let e = (*i as i64 - *j as i64 + shift) as usize;
        if coeffs.len() <= e {
            coeffs.resize(e + 1, BigInt::zero());
        }
        coeffs[e] += c;
    }
    (UPoly::from_coeffs(coeffs), shift as usize)
}

pub(crate) fn render_poly(p: &BiPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, ((i, j), c)) in p.terms().iter().enumerate() {
        let neg = c.is_negative();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mag = c.abs();
        let mut factors = Vec::new();
        for (v, e) in [("r", *i), ("s", *j)] {
            match e {
                0 => {}
                1 => factors.push(v.to_string()),
                e => factors.push(format!("{v}^{e}")),
            }
        }
        if factors.is_empty() {
            out.push_str(&mag.to_string());
        } else {
            if !mag.is_one() {
                out.push_str(&format!("{mag}*"));
            }
            out.push_str(&factors.join("*"));
        }
    }
    out
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl std::ops::$tr<&RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                self.$f(rhs)
            }
        }
        impl std::ops::$tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$f(&rhs)
            }
        }
        impl std::ops::$tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$f(rhs)
            }
        }
    };
}
binop!(Add, add, add);
binop!(Sub, sub, sub);
binop!(Mul, mul, mul);

impl std::ops::Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc::neg(&self)
    }
}

impl std::ops::Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r() -> RatFunc {
        RatFunc::r()
    }
    fn s() -> RatFunc {
        RatFunc::s()
    }

    #[test]
    fn cubes_over_difference() {
        let a = r().pow(3).unwrap() - s().pow(3).unwrap();
        let b = r() - s();
        let delta = r() * r() + r() * s() + s() * s();
        assert_eq!(a.div(&b).unwrap(), delta);
    }

    #[test]
    fn swap_examples() {
        assert_eq!(RatFunc::rs_pow(-3, 0).swap(), RatFunc::rs_pow(0, 3));
        assert_eq!(RatFunc::rs_pow(1, -1).swap(), RatFunc::rs_pow(1, -1));
        let x = (r() + s()).inv().unwrap();
        assert_eq!(x.swap(), (r() * s()).div(&(r() + s())).unwrap());
    }

    #[test]
    fn canonical_sign() {
        let a = RatFunc::new(BiPoly::one(), BiPoly::s().sub(&BiPoly::r())).unwrap();
        assert_eq!(a.den().lead().unwrap().1, BigInt::from(1));
        assert_eq!(a.render(), "-1/(r - s)");
    }

    #[test]
    fn division_by_zero_is_error() {
        assert_eq!(RatFunc::one().div(&RatFunc::zero()), Err(ScalarError::DivisionByZero));
        assert!(RatFunc::new(BiPoly::one(), BiPoly::zero()).is_err());
    }

    #[test]
    fn render_forms() {
        assert_eq!(RatFunc::rs_pow(-3, 0).render(), "1/r^3");
        assert_eq!(RatFunc::laurent(-2, 1, -2).render(), "-2*r/s^2");
        assert_eq!(RatFunc::rs_pow(-1, -1).render(), "1/(r*s)");
    }

    #[test]
    fn laurent_monomial_view() {
        assert_eq!(RatFunc::laurent(3, 2, -5).as_laurent_monomial(), Some((BigInt::from(3), 2, -5)));
        assert_eq!((r() + s()).as_laurent_monomial(), None);
    }
}

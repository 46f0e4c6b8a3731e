//! Elements of `Q(q)`, the target of the one-parameter specialization.

use super::ratfunc::ScalarError;
use super::upoly::{render_laurent_terms, UPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// `num / den` in lowest terms over `Z[q]`, `den` with positive lead.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QFunc {
    num: UPoly,
    den: UPoly,
}

impl QFunc {
    pub fn zero() -> Self {
        QFunc { num: UPoly::zero(), den: UPoly::one() }
    }

    pub fn one() -> Self {
        QFunc { num: UPoly::one(), den: UPoly::one() }
    }

    /// `c * q^k`.
    pub fn monomial(c: i64, k: i64) -> Self {
        let c = BigInt::from(c);
        if k >= 0 {
            QFunc { num: UPoly::monomial(c, k as usize), den: UPoly::one() }
        } else {
            Self::reduce(UPoly::constant(c), UPoly::monomial(BigInt::one(), (-k) as usize))
        }
    }

    /// `(n * q^-kn) / (d * q^-kd)`.
    pub(crate) fn from_laurent(n: UPoly, kn: usize, d: UPoly, kd: usize) -> Result<Self, ScalarError> {
        if d.is_zero() {
            return Err(ScalarError::Pole);
        }
        Ok(Self::reduce(n.shift(kd), d.shift(kn)))
    }

    fn reduce(num: UPoly, den: UPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g).expect("gcd divides");
        let mut den = den.div_exact(&g).expect("gcd divides");
        if den.lead().is_some_and(|l| l.is_negative()) {
            num = num.neg();
            den = den.neg();
        }
        QFunc { num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::reduce(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&QFunc { num: o.num.neg(), den: o.den.clone() })
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::reduce(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn div(&self, o: &Self) -> Result<Self, ScalarError> {
        if o.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::reduce(self.num.mul(&o.den), self.den.mul(&o.num)))
    }

    pub fn eval(&self, q: &BigRational) -> Result<BigRational, ScalarError> {
        let d = self.den.eval(q);
        if d.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(self.num.eval(q) / d)
    }

    /// Renders Laurent polynomials without a denominator, e.g. `q^2 + 1 + q^-2`.
    pub fn render(&self) -> String {
        let low = self.den.low_degree().unwrap_or(0);
        if self.den.degree() == Some(low) && self.den.lead().is_some_and(|c| c.is_one()) {
            let terms: Vec<(i64, BigInt)> = self
                .num
                .coeffs()
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as i64 - low as i64, c.clone()))
                .collect();
            return render_laurent_terms(&terms, "q");
        }
        format!("({})/({})", self.num.render("q"), self.den.render("q"))
    }
}

impl fmt::Display for QFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for QFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

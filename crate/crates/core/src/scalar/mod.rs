//! The coefficient field `Q(r, s)` and its specialization to `Q(q)`.

mod bipoly;
mod qfunc;
mod ratfunc;
mod upoly;

pub use bipoly::{BiPoly, Exp};
pub use qfunc::QFunc;
pub use ratfunc::{RatFunc, ScalarError};
pub use upoly::UPoly;

/// `r^2 + r s + s^2`, the constant that recurs throughout the G2 relations.
pub fn delta() -> RatFunc {
    let r = RatFunc::r();
    let s = RatFunc::s();
    &(&(&r * &r) + &(&r * &s)) + &(&s * &s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    #[test]
    fn specialize_delta() {
        assert_eq!(delta().specialize().unwrap().render(), "q^2 + 1 + q^-2");
    }

    #[test]
    fn specialize_agrees_with_evaluation() {
        let x = delta().div(&(RatFunc::r() - RatFunc::s())).unwrap();
        let q = BigRational::from_integer(BigInt::from(2));
        let qi = BigRational::new(BigInt::from(1), BigInt::from(2));
        let direct = x.eval(&q, &qi).unwrap();
        assert_eq!(x.specialize().unwrap().eval(&q).unwrap(), direct);
    }

    #[test]
    fn specialize_pole() {
        let x = RatFunc::one().div(&(RatFunc::r() * RatFunc::s() - RatFunc::one())).unwrap();
        assert_eq!(x.specialize(), Err(ScalarError::Pole));
    }
}

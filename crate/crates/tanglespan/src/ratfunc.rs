//! The field Q(t) of rational functions, in a canonical reduced form.
//!
//! Numerators are Laurent polynomials (they may carry powers of 1/t);
//! denominators are ordinary monic polynomials with nonzero constant term.
//! With the gcd reduced away this representation is unique, so equality is
//! structural equality.

use crate::error::{Error, Result};
use crate::laurent::{poly_div_rem, poly_gcd, LaurentPoly};
use crate::BigRat;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: LaurentPoly, den: LaurentPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RatFunc { num, den: LaurentPoly::one() };
        }
        if den.is_one() {
            return RatFunc { num, den };
        }
        let a = num.min_degree();
        let b = den.min_degree();
        let mut n = num.shifted(-a);
        let mut d = den.shifted(-b);
        let g = poly_gcd(&n, &d);
        if !g.is_one() {
            n = poly_div_rem(&n, &g).0;
            d = poly_div_rem(&d, &g).0;
        }
        let lead = d.leading_coefficient();
        if !lead.is_one() {
            let inv = lead.recip();
            n = n.scale(&inv);
            d = d.scale(&inv);
        }
        RatFunc { num: n.shifted(a - b), den: d }
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        RatFunc { num: p, den: LaurentPoly::one() }
    }

    pub fn constant(c: BigRat) -> Self {
        Self::from_laurent(LaurentPoly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(BigRat::from_integer(n.into()))
    }

    /// The variable t.
    pub fn t() -> Self {
        Self::from_laurent(LaurentPoly::t())
    }

    /// 1/t.
    pub fn t_inv() -> Self {
        Self::from_laurent(LaurentPoly::monomial(BigRat::one(), -1))
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Extracts the underlying Laurent polynomial, failing when a genuine
    /// denominator is left after reduction.
    pub fn as_laurent(&self) -> Result<LaurentPoly> {
        if self.is_polynomial() {
            Ok(self.num.clone())
        } else {
            Err(Error::NotLaurent(self.den.to_string()))
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }

    /// Substitutes t -> 1/t.
    pub fn subst_t_inverse(&self) -> Self {
        Self::reduced(self.num.subst_t_inverse(), self.den.subst_t_inverse())
    }

    /// Exact evaluation; a vanishing denominator is a pole (the fraction is
    /// reduced, so it cannot cancel), and negative powers of t in the
    /// numerator make 0 unevaluable.
    pub fn eval_rat(&self, x: &BigRat) -> Result<BigRat> {
        let d = self.den.eval_rat(x)?;
        if d.is_zero() {
            return Err(Error::PoleAtEvaluationPoint(x.to_string()));
        }
        Ok(self.num.eval_rat(x)? / d)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::reduced(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        assert!(!rhs.is_zero(), "division by zero in Q(t)");
        RatFunc::reduced(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_value_ops {
    ($($op:ident :: $method:ident),*) => {$(
        impl $op for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_value_ops!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        Self::from_laurent(LaurentPoly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::QPoint;

    fn lp(min: i64, cs: &[i64]) -> LaurentPoly {
        LaurentPoly::from_int_coeffs(min, cs)
    }

    fn q(n: i64) -> RatFunc {
        RatFunc::from_laurent(LaurentPoly::qint(n, QPoint::NegT))
    }

    #[test]
    fn difference_of_reciprocal_quantum_integers() {
        // 1/[2] - 1/[3] at the -t point equals t^2 / ((1-t)(1-t+t^2))
        let lhs = &q(2).inv().unwrap() - &q(3).inv().unwrap();
        let den = &lp(0, &[1, -1]) * &lp(0, &[1, -1, 1]);
        let rhs = RatFunc::new(lp(2, &[1]), den).unwrap();
        assert_eq!(lhs, rhs);
        // canonical form: monic denominator with nonzero constant term
        assert_eq!(lhs.denominator(), &lp(0, &[-1, 2, -2, 1]));
        assert_eq!(lhs.numerator(), &lp(2, &[-1]));
        // spot check the value at t = 2
        let two = BigRat::from_integer(2.into());
        assert_eq!(lhs.eval_rat(&two).unwrap(), BigRat::new((-4).into(), 3.into()));
    }

    #[test]
    fn reduction_cancels_common_factors() {
        // (t^2 - 1)/(t + 1) = t - 1
        let f = RatFunc::new(lp(0, &[-1, 0, 1]), lp(0, &[1, 1])).unwrap();
        assert!(f.is_polynomial());
        assert_eq!(f.as_laurent().unwrap(), lp(0, &[-1, 1]));
        // Laurent shifts ride along in the numerator
        let g = RatFunc::new(lp(-3, &[-1, 0, 1]), lp(1, &[1, 1])).unwrap();
        assert_eq!(g.numerator(), &lp(-4, &[-1, 1]));
        assert!(g.is_polynomial());
    }

    #[test]
    fn poles_and_zero_evaluation() {
        let f = RatFunc::new(LaurentPoly::one(), lp(0, &[-1, 1])).unwrap(); // 1/(t-1)
        let one = BigRat::from_integer(1.into());
        assert!(matches!(f.eval_rat(&one), Err(Error::PoleAtEvaluationPoint(_))));
        let two = BigRat::from_integer(2.into());
        assert_eq!(f.eval_rat(&two).unwrap(), one);
        let g = RatFunc::t_inv();
        assert_eq!(g.eval_rat(&BigRat::zero()), Err(Error::ZeroEvaluationPoint));
        assert!(g.as_laurent().is_ok());
        let h = RatFunc::new(LaurentPoly::one(), lp(0, &[1, 1])).unwrap();
        assert!(matches!(h.as_laurent(), Err(Error::NotLaurent(_))));
    }

    #[test]
    fn field_identities() {
        let f = RatFunc::new(lp(-1, &[2, 0, 5]), lp(0, &[1, 3, 1])).unwrap();
        let g = RatFunc::new(lp(0, &[-1, 1]), lp(0, &[7, 1])).unwrap();
        assert_eq!(&(&f * &g) / &g, f);
        assert_eq!(&f * &f.inv().unwrap(), RatFunc::one());
        assert_eq!(&f - &f, RatFunc::zero());
        let h = &f + &g;
        assert_eq!(&h - &g, f);
    }

    #[test]
    fn inverse_substitution_is_involutive() {
        let f = RatFunc::new(lp(-1, &[2, 0, 5]), lp(0, &[1, 3])).unwrap();
        assert_eq!(f.subst_t_inverse().subst_t_inverse(), f);
        // t -> 1/t on t/(1+t) gives 1/(1+t) after clearing
        let g = RatFunc::new(lp(1, &[1]), lp(0, &[1, 1])).unwrap();
        assert_eq!(
            g.subst_t_inverse(),
            RatFunc::new(LaurentPoly::one(), lp(0, &[1, 1])).unwrap()
        );
    }
}

//! Laurent polynomials in t with exact rational coefficients.
//!
//! The representation is a minimum degree together with a dense coefficient
//! vector; the invariant is that the vector is empty exactly for the zero
//! polynomial and otherwise starts and ends with a nonzero coefficient, so
//! equality is plain structural equality.

use crate::error::{Error, Result};
use crate::BigRat;
use num_complex::Complex;
use num_traits::{Float, One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    min_deg: i64,
    coeffs: Vec<BigRat>,
}

/// Evaluation point of a quantum integer: t, -t, 1/t or -1/t.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QPoint {
    T,
    NegT,
    TInv,
    NegTInv,
}

impl QPoint {
    fn term(self, k: i64) -> (i64, i64) {
        // returns (exponent of t, sign) for the k-th power of the point
        let sign = match self {
            QPoint::T | QPoint::TInv => 1,
            QPoint::NegT | QPoint::NegTInv => {
                if k.rem_euclid(2) == 0 {
                    1
                } else {
                    -1
                }
            }
        };
        let exp = match self {
            QPoint::T | QPoint::NegT => k,
            QPoint::TInv | QPoint::NegTInv => -k,
        };
        (exp, sign)
    }
}

fn rat(n: i64) -> BigRat {
    BigRat::from_integer(n.into())
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { min_deg: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigRat::one(), 0)
    }

    /// The variable t.
    pub fn t() -> Self {
        Self::monomial(BigRat::one(), 1)
    }

    pub fn constant(c: BigRat) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: BigRat, deg: i64) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { min_deg: deg, coeffs: vec![c] }
        }
    }

    /// Builds from a coefficient vector starting at `min_deg`, trimming zeros.
    pub fn from_coeffs(min_deg: i64, coeffs: Vec<BigRat>) -> Self {
        let mut p = LaurentPoly { min_deg, coeffs };
        p.trim();
        p
    }

    /// Convenience: integer coefficients starting at `min_deg`.
    pub fn from_int_coeffs(min_deg: i64, coeffs: &[i64]) -> Self {
        Self::from_coeffs(min_deg, coeffs.iter().map(|&c| rat(c)).collect())
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.min_deg += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.min_deg = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.min_deg == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Smallest exponent with nonzero coefficient; 0 for the zero polynomial.
    pub fn min_degree(&self) -> i64 {
        self.min_deg
    }

    /// Largest exponent with nonzero coefficient; 0 for the zero polynomial.
    pub fn max_degree(&self) -> i64 {
        if self.coeffs.is_empty() {
            0
        } else {
            self.min_deg + self.coeffs.len() as i64 - 1
        }
    }

    pub fn coeff(&self, deg: i64) -> BigRat {
        let idx = deg - self.min_deg;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            BigRat::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    pub fn leading_coefficient(&self) -> BigRat {
        self.coeffs.last().cloned().unwrap_or_else(BigRat::zero)
    }

    /// Coefficients from `min_degree()` upward (dense).
    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Multiplies by t^k.
    pub fn shifted(&self, k: i64) -> Self {
        if self.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { min_deg: self.min_deg + k, coeffs: self.coeffs.clone() }
        }
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            min_deg: self.min_deg,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// The quantum integer [n] evaluated at the given point, as a Laurent
    /// polynomial in t: [n]_x = 1 + x + ... + x^{n-1} for n > 0, [0] = 0,
    /// and [-n]_x = -x^{-1} - ... - x^{-n}.
    pub fn qint(n: i64, point: QPoint) -> Self {
        let mut acc = Self::zero();
        let powers: Vec<i64> = if n > 0 {
            (0..n).collect()
        } else {
            (1..=-n).map(|k| -k).collect()
        };
        let outer = if n >= 0 { 1 } else { -1 };
        for k in powers {
            let (exp, sign) = point.term(k);
            acc = &acc + &Self::monomial(rat(outer * sign), exp);
        }
        acc
    }

    /// Substitutes t -> 1/t.
    pub fn subst_t_inverse(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        LaurentPoly { min_deg: -self.max_degree(), coeffs }
    }

    /// Exact evaluation at a rational point; x = 0 needs min_degree >= 0.
    pub fn eval_rat(&self, x: &BigRat) -> Result<BigRat> {
        if x.is_zero() {
            if self.min_deg < 0 {
                return Err(Error::ZeroEvaluationPoint);
            }
            return Ok(self.coeff(0));
        }
        // Horner on the shifted ordinary polynomial, then multiply by x^min_deg.
        let mut acc = BigRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        let mut shift = BigRat::one();
        let (mut base, mut e) = if self.min_deg >= 0 {
            (x.clone(), self.min_deg as u64)
        } else {
            (x.recip(), (-self.min_deg) as u64)
        };
        while e > 0 {
            if e & 1 == 1 {
                shift = &shift * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        Ok(acc * shift)
    }

    /// Floating-point evaluation at a complex point.
    pub fn eval_complex<F: Float>(&self, z: Complex<F>) -> Result<Complex<F>> {
        if z.is_zero() {
            if self.min_deg < 0 {
                return Err(Error::ZeroEvaluationPoint);
            }
            let c = self.coeff(0);
            return Ok(Complex::new(
                F::from(c.to_f64().unwrap_or(f64::NAN)).unwrap(),
                F::zero(),
            ));
        }
        let mut acc = Complex::new(F::zero(), F::zero());
        for c in self.coeffs.iter().rev() {
            let cf = F::from(c.to_f64().unwrap_or(f64::NAN)).unwrap();
            acc = acc * z + Complex::new(cf, F::zero());
        }
        Ok(acc * z.powi(self.min_deg as i32))
    }

    /// Normalizes by a unit +-t^k: minimum degree 0 (so the constant term is
    /// nonzero) and positive leading coefficient.  The Alexander polynomial
    /// is well defined only up to such units.
    pub fn normalize_alexander(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut p = self.shifted(-self.min_deg);
        if p.leading_coefficient().is_negative() {
            p = -&p;
        }
        p
    }

    /// Reports whether two polynomials agree up to a unit +-t^k.
    pub fn eq_up_to_unit(&self, other: &Self) -> bool {
        self.normalize_alexander() == other.normalize_alexander()
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.min_deg.min(rhs.min_deg);
        let hi = self.max_degree().max(rhs.max_degree());
        let mut coeffs = vec![BigRat::zero(); (hi - lo + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.min_deg - lo) as usize + i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[(rhs.min_deg - lo) as usize + i] += c;
        }
        LaurentPoly::from_coeffs(lo, coeffs)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            min_deg: self.min_deg,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::from_coeffs(self.min_deg + rhs.min_deg, coeffs)
    }
}

macro_rules! forward_value_ops {
    ($($op:ident :: $method:ident),*) => {$(
        impl $op for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_value_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for idx in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[idx];
            if c.is_zero() {
                continue;
            }
            let deg = self.min_deg + idx as i64;
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_mag = mag.is_one();
            match (deg, unit_mag) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (_, true) => write!(f, "t^{deg}")?,
                (_, false) => write!(f, "{mag}*t^{deg}")?,
            }
        }
        Ok(())
    }
}

/// Quotient and remainder for ordinary polynomials (min degree >= 0,
/// divisor nonzero); used by the rational-function normal form.
pub(crate) fn poly_div_rem(a: &LaurentPoly, b: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
    assert!(!b.is_zero(), "polynomial division by zero");
    assert!(a.min_degree() >= 0 && b.min_degree() >= 0, "ordinary polynomials required");
    if a.is_zero() {
        return (LaurentPoly::zero(), LaurentPoly::zero());
    }
    let da = a.max_degree() as usize;
    let db = b.max_degree() as usize;
    if da < db {
        return (LaurentPoly::zero(), a.clone());
    }
    let dense = |p: &LaurentPoly, deg: usize| {
        let mut v = vec![BigRat::zero(); deg + 1];
        for (i, c) in p.coeffs.iter().enumerate() {
            v[p.min_deg as usize + i] = c.clone();
        }
        v
    };
    let mut rem = dense(a, da);
    let div = dense(b, db);
    let lead = &div[db];
    let mut quot = vec![BigRat::zero(); da - db + 1];
    for k in (0..=da - db).rev() {
        if rem[k + db].is_zero() {
            continue;
        }
        let c = &rem[k + db] / lead;
        for (j, d) in div.iter().enumerate().take(db) {
            if !d.is_zero() {
                rem[k + j] -= &c * d;
            }
        }
        rem[k + db] = BigRat::zero();
        quot[k] = c;
    }
    rem.truncate(db);
    (LaurentPoly::from_coeffs(0, quot), LaurentPoly::from_coeffs(0, rem))
}

/// Rescales a nonzero polynomial to integer coefficients with content one.
/// Gcds over Q ignore scalar factors, and primitive remainders keep the
/// coefficient growth of the Euclidean algorithm polynomial.
fn primitive_part(p: &LaurentPoly) -> LaurentPoly {
    if p.is_zero() {
        return p.clone();
    }
    let mut denom_lcm = crate::BigInt::one();
    for c in &p.coeffs {
        denom_lcm = num_integer::lcm(denom_lcm, c.denom().clone());
    }
    let mut content = crate::BigInt::zero();
    for c in &p.coeffs {
        content = num_integer::gcd(content, c.numer() * &denom_lcm / c.denom());
    }
    p.scale(&BigRat::new(denom_lcm, content))
}

/// Monic gcd of ordinary polynomials over Q.
pub(crate) fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let constant = |p: &LaurentPoly| !p.is_zero() && p.max_degree() == 0;
    if constant(a) || constant(b) {
        return LaurentPoly::one();
    }
    let mut x = primitive_part(a);
    let mut y = primitive_part(b);
    while !y.is_zero() {
        let (_, r) = poly_div_rem(&x, &y);
        x = y;
        y = primitive_part(&r);
    }
    if x.is_zero() {
        x
    } else {
        let lead = x.leading_coefficient();
        x.scale(&lead.recip())
    }
}

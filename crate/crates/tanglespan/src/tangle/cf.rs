//! Continued fractions: reduced fraction specs, the even continued-fraction
//! expansion used by the 2-bridge pipeline, and the all-positive odd-length
//! expansion used by the canonical rational tangle form.

use crate::error::{Error, Result};
use num_integer::Integer;
use std::fmt;

/// Reduced extended rational p/q with canonical sign (q >= 0; 1/0 is the
/// point at infinity).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalSpec {
    p: i64,
    q: i64,
}

impl RationalSpec {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p == 0 && q == 0 {
            return Err(Error::InvalidFraction { p, q, reason: "0/0 is undefined".into() });
        }
        if q == 0 {
            return Ok(RationalSpec { p: 1, q: 0 });
        }
        let g = p.gcd(&q);
        let (mut p, mut q) = (p / g, q / g);
        if q < 0 {
            p = -p;
            q = -q;
        }
        Ok(RationalSpec { p, q })
    }

    pub fn infinity() -> Self {
        RationalSpec { p: 1, q: 0 }
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn is_infinite(&self) -> bool {
        self.q == 0
    }
}

impl fmt::Display for RationalSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            write!(f, "inf")
        } else {
            write!(f, "{}/{}", self.p, self.q)
        }
    }
}

/// Nearest integer to num/den; exact ties must be impossible at call sites.
fn nearest(num: i64, den: i64) -> i64 {
    let (n, d) = if den < 0 { (-num, -den) } else { (num, den) };
    (2 * n + d).div_euclid(2 * d)
}

/// Even continued-fraction expansion of p/q with p odd, q even,
/// 0 < q < p, gcd(p,q) = 1: the unique expansion
/// p/q = 2k_1 + 1/(2k_2 + 1/(...)) with every entry even and nonzero.
/// Each step takes the nearest even quotient; the remainder is odd and
/// strictly smaller in absolute value, so the expansion terminates and the
/// parity rules out ties.
pub fn even_cf(p: i64, q: i64) -> Result<Vec<i64>> {
    let reject = |reason: &str| Error::InvalidFraction { p, q, reason: reason.into() };
    if p <= 0 || p % 2 == 0 {
        return Err(reject("numerator must be positive and odd"));
    }
    if q <= 0 || q % 2 != 0 || q >= p {
        return Err(reject("denominator must be even with 0 < q < p"));
    }
    if p.gcd(&q) != 1 {
        return Err(reject("fraction must be reduced"));
    }
    let (mut p, mut q) = (p, q);
    let mut out = Vec::new();
    while q != 0 {
        let a = 2 * nearest(p, 2 * q);
        let r = p - a * q;
        debug_assert!(a != 0 && r.abs() < q.abs());
        out.push(a);
        p = q;
        q = r;
    }
    Ok(out)
}

/// Value of a continued fraction a_1 + 1/(a_2 + 1/(...)) as an extended
/// rational; intermediate zeros pass through infinity without dividing.
pub fn cf_eval(entries: &[i64]) -> RationalSpec {
    let (mut num, mut den) = (1i64, 0i64);
    for &a in entries.iter().rev() {
        let next = a * num + den;
        den = num;
        num = next;
    }
    RationalSpec::new(num, den).expect("coprime recursion cannot reach 0/0")
}

/// All-positive odd-length continued fraction of p/q >= 0 (q > 0, reduced):
/// entries at least 1 except that the leading entry may be 0.  An
/// even-length Euclidean expansion is repaired by splitting or merging the
/// final entry.
pub fn positive_odd_cf(p: i64, q: i64) -> Result<Vec<i64>> {
    if p < 0 || q <= 0 || p.gcd(&q) != 1 {
        return Err(Error::InvalidFraction {
            p,
            q,
            reason: "expected a reduced non-negative fraction".into(),
        });
    }
    let (mut n, mut d) = (p, q);
    let mut cf = Vec::new();
    while d != 0 {
        let a = n.div_euclid(d);
        cf.push(a);
        let r = n - a * d;
        n = d;
        d = r;
    }
    if cf.len() % 2 == 0 {
        let last = *cf.last().unwrap();
        if last > 1 {
            *cf.last_mut().unwrap() = last - 1;
            cf.push(1);
        } else {
            cf.pop();
            *cf.last_mut().unwrap() += 1;
        }
    }
    Ok(cf)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn even_expansions() {
        assert_eq!(even_cf(11, 8).unwrap(), vec![2, -2, 2, 2]);
        assert_eq!(even_cf(3, 2).unwrap(), vec![2, -2]);
        assert_eq!(even_cf(5, 2).unwrap(), vec![2, 2]);
    }

    #[test]
    fn even_cf_roundtrip_and_shape() {
        for p in (3..400i64).step_by(2) {
            for q in (2..p).step_by(2) {
                if p.gcd(&q) != 1 {
                    continue;
                }
                let cf = even_cf(p, q).unwrap();
                assert!(cf.iter().all(|a| a % 2 == 0 && *a != 0), "{p}/{q}: {cf:?}");
                assert_eq!(cf.len() % 2, 0, "{p}/{q}: {cf:?}");
                let v = cf_eval(&cf);
                assert_eq!((v.p(), v.q()), (p, q));
            }
        }
    }

    #[test]
    fn even_cf_rejects_bad_input() {
        assert!(even_cf(4, 2).is_err());
        assert!(even_cf(9, 3).is_err());
        assert!(even_cf(3, 8).is_err());
        assert!(even_cf(9, 6).is_err());
    }

    #[test]
    fn cf_eval_examples() {
        assert_eq!(cf_eval(&[1, 1, 1]), RationalSpec::new(3, 2).unwrap());
        assert_eq!(cf_eval(&[7]), RationalSpec::new(7, 1).unwrap());
        assert_eq!(cf_eval(&[]), RationalSpec::infinity());
        // intermediate infinity: 1 + 1/(0 + 1/2) = 3
        assert_eq!(cf_eval(&[1, 0, 2]), RationalSpec::new(3, 1).unwrap());
    }

    #[test]
    fn odd_expansions() {
        assert_eq!(positive_odd_cf(3, 2).unwrap(), vec![1, 1, 1]);
        assert_eq!(positive_odd_cf(7, 16).unwrap(), vec![0, 2, 3, 1, 1]);
        assert_eq!(positive_odd_cf(0, 1).unwrap(), vec![0]);
        assert_eq!(positive_odd_cf(1, 1).unwrap(), vec![1]);
        for p in 0..200i64 {
            for q in 1..60i64 {
                if p.gcd(&q) != 1 {
                    continue;
                }
                let cf = positive_odd_cf(p, q).unwrap();
                assert_eq!(cf.len() % 2, 1);
                assert!(cf.iter().skip(1).all(|&a| a >= 1));
                assert!(cf[0] >= 0);
                let v = cf_eval(&cf);
                assert_eq!((v.p(), v.q()), (p, q), "{cf:?}");
            }
        }
    }

    #[test]
    fn rational_spec_normalizes() {
        let r = RationalSpec::new(-6, -4).unwrap();
        assert_eq!((r.p(), r.q()), (3, 2));
        let r = RationalSpec::new(5, -10).unwrap();
        assert_eq!((r.p(), r.q()), (-1, 2));
        assert_eq!(RationalSpec::new(-7, 0).unwrap(), RationalSpec::infinity());
        assert!(RationalSpec::new(0, 0).is_err());
    }
}

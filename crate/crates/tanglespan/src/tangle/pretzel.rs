//! Pretzel knot specifications and their band decompositions.
//!
//! A pretzel link P(q_1,...,q_n) is the cyclic closure of n vertical bands
//! with q_i half-twists each.  Once orientations are fixed, every band is
//! either a codirected braiding (parallel strands) or an alternating
//! braiding (antiparallel strands), of one crossing sign, evaluated either
//! at t or at t^-1; which combination depends only on the parity pattern of
//! the spec.  The three cases, with the even entry rotated to the front
//! when present:
//!
//! * all entries odd, n odd: every band an alternating negative braiding
//!   at t^-1;
//! * one even entry, n even: all bands codirected negative braidings, odd
//!   bands at t, even bands at t^-1;
//! * one even entry, n odd: band 1 an alternating positive braiding at t,
//!   the rest codirected as in the even case.

use super::CrossingSign;
use crate::error::{Error, Result};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PretzelSpec {
    q: Vec<i64>,
}

impl PretzelSpec {
    pub fn new(q: Vec<i64>) -> Result<Self> {
        if q.is_empty() || q.iter().any(|&x| x == 0) {
            return Err(Error::NotAPretzelKnot(q));
        }
        Ok(PretzelSpec { q })
    }

    pub fn entries(&self) -> &[i64] {
        &self.q
    }

    pub fn len(&self) -> usize {
        self.q.len()
    }

    pub fn is_empty(&self) -> bool {
        self.q.is_empty()
    }

    /// Cyclic rotation bringing the even entry (if any) to the front.
    pub fn rotated_even_first(&self) -> (PretzelSpec, usize) {
        match self.q.iter().position(|&x| x % 2 == 0) {
            Some(i) => {
                let mut q = self.q[i..].to_vec();
                q.extend_from_slice(&self.q[..i]);
                (PretzelSpec { q }, i)
            }
            None => (self.clone(), 0),
        }
    }
}

impl fmt::Display for PretzelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.q.iter().map(|x| x.to_string()).collect();
        write!(f, "P({})", items.join(","))
    }
}

/// Whether the closure of the spec is a knot, with the reason.
pub fn is_pretzel_knot(spec: &PretzelSpec) -> (bool, String) {
    let n = spec.len();
    let evens = spec.q.iter().filter(|&&x| x % 2 == 0).count();
    match evens {
        0 if n % 2 == 1 => (true, "all entries odd with an odd number of bands".into()),
        0 => (false, "all entries odd with an even number of bands closes to a 2-component link".into()),
        1 if n >= 2 => (true, "exactly one even entry".into()),
        1 => (false, "a single even band closes to a 2-component link".into()),
        _ => (false, format!("{evens} even entries close to a link with several components")),
    }
}

/// Parity pattern of a pretzel knot spec.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PretzelCase {
    /// All q_i odd, n odd.
    AllOdd,
    /// One even entry, n even.
    OneEvenNEven,
    /// One even entry, n odd.
    OneEvenNOdd,
}

/// Parameter variant of a braiding: evaluated at t or at t^-1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    AtT,
    AtTInv,
}

/// Braiding kind of one band under the fixed orientation conventions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BandKind {
    Codirected { sign: CrossingSign, variant: Variant },
    Alternating { sign: CrossingSign, variant: Variant },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Band {
    pub twists: i64,
    pub kind: BandKind,
}

/// Band decomposition of a pretzel knot, even entry rotated to the front.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PretzelBands {
    pub spec: PretzelSpec,
    pub rotation: usize,
    pub case: PretzelCase,
    pub bands: Vec<Band>,
}

pub fn pretzel_expr(spec: &PretzelSpec) -> Result<PretzelBands> {
    let (knot, _) = is_pretzel_knot(spec);
    if !knot {
        return Err(Error::NotAPretzelKnot(spec.q.clone()));
    }
    let (rotated, rotation) = spec.rotated_even_first();
    let n = rotated.len();
    let has_even = rotated.q[0] % 2 == 0;
    let case = match (has_even, n % 2) {
        (false, _) => PretzelCase::AllOdd,
        (true, 0) => PretzelCase::OneEvenNEven,
        (true, _) => PretzelCase::OneEvenNOdd,
    };
    let bands = rotated
        .q
        .iter()
        .enumerate()
        .map(|(idx, &twists)| {
            let band_no = idx + 1;
            let codirected = |variant| BandKind::Codirected { sign: CrossingSign::Minus, variant };
            let kind = match case {
                PretzelCase::AllOdd => {
                    BandKind::Alternating { sign: CrossingSign::Minus, variant: Variant::AtTInv }
                }
                PretzelCase::OneEvenNEven => {
                    codirected(if band_no % 2 == 1 { Variant::AtT } else { Variant::AtTInv })
                }
                PretzelCase::OneEvenNOdd => {
                    if band_no == 1 {
                        BandKind::Alternating { sign: CrossingSign::Plus, variant: Variant::AtT }
                    } else {
                        codirected(if band_no % 2 == 1 { Variant::AtT } else { Variant::AtTInv })
                    }
                }
            };
            Band { twists, kind }
        })
        .collect();
    Ok(PretzelBands { spec: rotated, rotation, case, bands })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(q: &[i64]) -> PretzelSpec {
        PretzelSpec::new(q.to_vec()).unwrap()
    }

    #[test]
    fn knot_conditions() {
        assert!(is_pretzel_knot(&spec(&[3, 5, 7])).0);
        assert!(is_pretzel_knot(&spec(&[2, 3])).0);
        assert!(is_pretzel_knot(&spec(&[2, 1, 1, 1, -5])).0);
        assert!(is_pretzel_knot(&spec(&[-1])).0);
        assert!(!is_pretzel_knot(&spec(&[1, 1])).0);
        assert!(!is_pretzel_knot(&spec(&[2, 4, 3])).0);
        assert!(!is_pretzel_knot(&spec(&[2])).0);
        assert!(PretzelSpec::new(vec![3, 0, 5]).is_err());
        assert!(PretzelSpec::new(vec![]).is_err());
    }

    #[test]
    fn even_entry_rotates_to_front() {
        let (r, i) = spec(&[3, 5, 2, 7]).rotated_even_first();
        assert_eq!(r.entries(), &[2, 7, 3, 5]);
        assert_eq!(i, 2);
        let (r, i) = spec(&[3, 5, 7]).rotated_even_first();
        assert_eq!(r.entries(), &[3, 5, 7]);
        assert_eq!(i, 0);
    }

    #[test]
    fn band_kinds_per_case() {
        use CrossingSign::*;
        use Variant::*;
        let b = pretzel_expr(&spec(&[1, 1, 1])).unwrap();
        assert_eq!(b.case, PretzelCase::AllOdd);
        assert!(b
            .bands
            .iter()
            .all(|band| band.kind == BandKind::Alternating { sign: Minus, variant: AtTInv }));

        let b = pretzel_expr(&spec(&[3, 2])).unwrap();
        assert_eq!(b.case, PretzelCase::OneEvenNEven);
        assert_eq!(b.rotation, 1);
        assert_eq!(b.spec.entries(), &[2, 3]);
        assert_eq!(b.bands[0].kind, BandKind::Codirected { sign: Minus, variant: AtT });
        assert_eq!(b.bands[1].kind, BandKind::Codirected { sign: Minus, variant: AtTInv });

        let b = pretzel_expr(&spec(&[2, 1, 1, 1, -5])).unwrap();
        assert_eq!(b.case, PretzelCase::OneEvenNOdd);
        assert_eq!(b.bands[0].kind, BandKind::Alternating { sign: Plus, variant: AtT });
        assert_eq!(b.bands[1].kind, BandKind::Codirected { sign: Minus, variant: AtTInv });
        assert_eq!(b.bands[2].kind, BandKind::Codirected { sign: Minus, variant: AtT });

        assert!(matches!(
            pretzel_expr(&spec(&[1, 1])),
            Err(Error::NotAPretzelKnot(_))
        ));
    }
}

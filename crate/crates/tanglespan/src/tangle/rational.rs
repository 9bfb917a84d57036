//! Builders for rational (2-bridge) tangles and knots.
//!
//! Two constructions are provided.  `rational_2bridge_expr` produces the
//! 4-strand layered diagram of the knot b(p,q) driven by the even
//! continued fraction of p/q: odd layers braid strands 3,4 and even layers
//! braid strands 2,3, every layer an alternating braiding whose first
//! crossing is a quarter-turned generator.  `rational_canonical_expr`
//! produces the canonical nested form of the rational tangle p/q from its
//! all-positive odd-length continued fraction, alternating twist words with
//! quarter-turn wraps.

use super::cf::{even_cf, positive_odd_cf, RationalSpec};
use super::{CrossingSign, Dir, Generator, TangleExpr};
use crate::error::{Error, Result};
use num_integer::Integer;

/// Layer-count parity of a plat-closed diagram; selects the boundary
/// contraction used by the Alexander extraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

/// Layered 2-bridge diagram together with the normalization that produced
/// it.
#[derive(Debug, Clone)]
pub struct TwoBridgeForm {
    pub expr: TangleExpr,
    pub parity: Parity,
    /// Normalized numerator (odd, positive).
    pub p: i64,
    /// Normalized denominator (even, in (0, p)); 0 encodes the unknot b(1,0).
    pub q: i64,
    /// True when the even continued fraction describes the mirror knot.
    pub mirrored: bool,
    pub cf: Vec<i64>,
}

/// Normalizes b(p,q) input: p is made positive, q is reduced modulo p, and
/// an odd q is replaced by p - q (the mirror knot, which shares the
/// Alexander polynomial).  Rejects even p (a 2-component link).
pub fn two_bridge_params(p: i64, q: i64) -> Result<(i64, i64, bool)> {
    if p == 0 {
        return Err(Error::NotAKnot { p, q });
    }
    let (pp, q0) = if p < 0 { (-p, -q) } else { (p, q) };
    if pp % 2 == 0 {
        return Err(Error::NotAKnot { p, q });
    }
    let mut qq = q0.rem_euclid(pp);
    if pp == 1 {
        return Ok((1, 0, false));
    }
    if pp.gcd(&qq) != 1 {
        return Err(Error::InvalidFraction { p, q, reason: "fraction must be reduced".into() });
    }
    let mirrored = qq % 2 == 1;
    if mirrored {
        qq = pp - qq;
    }
    Ok((pp, qq, mirrored))
}

fn down() -> TangleExpr {
    TangleExpr::Id(Dir::Down)
}

/// Alternating twist word realizing the even-layer block: `[X@1, X@3]`
/// repeated |k| times, positive k braided with positive crossings.
fn word_13(k: i64) -> TangleExpr {
    let sign = if k > 0 { CrossingSign::Plus } else { CrossingSign::Minus };
    let mut items = Vec::new();
    for _ in 0..k.abs() {
        items.push(TangleExpr::Gen(Generator::crossing(sign, 1)));
        items.push(TangleExpr::Gen(Generator::crossing(sign, 3)));
    }
    TangleExpr::compose(items)
}

/// Alternating twist word realizing the odd-layer block: `[X@3, X@1]`
/// repeated |k| times, positive k braided with negative crossings.
fn word_31(k: i64) -> TangleExpr {
    let sign = if k > 0 { CrossingSign::Minus } else { CrossingSign::Plus };
    let mut items = Vec::new();
    for _ in 0..k.abs() {
        items.push(TangleExpr::Gen(Generator::crossing(sign, 3)));
        items.push(TangleExpr::Gen(Generator::crossing(sign, 1)));
    }
    TangleExpr::compose(items)
}

/// Layered diagram of the 2-bridge knot b(p,q) on four strands with
/// boundary signature (-,-,+,-).
pub fn rational_2bridge_expr(p: i64, q: i64) -> Result<TwoBridgeForm> {
    let (p, q, mirrored) = two_bridge_params(p, q)?;
    if q == 0 {
        let strands = vec![down(), down(), TangleExpr::Id(Dir::Up), down()];
        return Ok(TwoBridgeForm {
            expr: TangleExpr::Tensor(strands),
            parity: Parity::Even,
            p,
            q,
            mirrored,
            cf: Vec::new(),
        });
    }
    let cf = even_cf(p, q)?;
    if cf.len() % 2 != 0 {
        return Err(Error::NotAKnot { p, q });
    }
    let mut layers = Vec::with_capacity(cf.len());
    for (i, a) in cf.iter().enumerate() {
        let k = a / 2;
        let layer = if i % 2 == 0 {
            TangleExpr::tensor(vec![down(), down(), word_31(k)])
        } else {
            TangleExpr::tensor(vec![down(), word_13(k), down()])
        };
        layers.push(layer);
    }
    let expr = TangleExpr::compose(layers);
    Ok(TwoBridgeForm { expr, parity: Parity::Even, p, q, mirrored, cf })
}

fn vertical_strands() -> TangleExpr {
    TangleExpr::Tensor(vec![TangleExpr::Id(Dir::Up), TangleExpr::Id(Dir::Up)])
}

/// The crossing inserted at a twist position: its rotation class is forced
/// by the incoming signature, its sign by the planar position (the two
/// diagonal slopes a crossing can occupy in the canonical form, mirror
/// swapping them).
fn gen_by_position(pos_a: bool, src: (Dir, Dir)) -> Generator {
    use Dir::*;
    let class: u8 = match src {
        (Up, Up) => 0,
        (Down, Up) => 1,
        (Down, Down) => 2,
        (Up, Down) => 3,
    };
    let a_sign = if class % 2 == 0 { CrossingSign::Plus } else { CrossingSign::Minus };
    let sign = if pos_a { a_sign } else { a_sign.flipped() };
    Generator::crossing(sign, class)
}

fn twist_word(pos_a: bool, count: i64, src: (Dir, Dir)) -> TangleExpr {
    debug_assert!(count > 0);
    let mut sig = src;
    let mut items = Vec::with_capacity(count as usize);
    for _ in 0..count {
        let g = gen_by_position(pos_a, sig);
        let t = g.tgt();
        sig = (t[0], t[1]);
        items.push(TangleExpr::Gen(g));
    }
    TangleExpr::compose(items)
}

/// Canonical nested form of the rational tangle p/q: twist words taken from
/// the odd-length all-positive continued fraction [a_1,...,a_n] of |p|/q,
/// nested innermost-first with quarter-turn wraps (three turns after odd
/// positions, one after even), negative fractions built in the mirror
/// position.  The zero tangle is the quarter turn of two vertical strands.
pub fn rational_canonical_expr(spec: RationalSpec) -> TangleExpr {
    if spec.is_infinite() {
        return vertical_strands();
    }
    if spec.p() == 0 {
        return TangleExpr::Rotate(Box::new(vertical_strands()));
    }
    let mirror = spec.p() < 0;
    let cf = positive_odd_cf(spec.p().abs(), spec.q()).expect("spec is reduced");
    let n = cf.len();
    let pos_a = |pos: usize| (pos % 2 == 1) != mirror;
    let mut e = twist_word(pos_a(n), cf[n - 1], (Dir::Up, Dir::Up));
    for _ in 0..3 {
        e = TangleExpr::rotate(e);
    }
    for pos in (1..n).rev() {
        let count = cf[pos - 1];
        if count > 0 {
            let sig = e.signature().expect("canonical form is well typed");
            let src = (sig.tgt[0], sig.tgt[1]);
            e = TangleExpr::compose(vec![e, twist_word(pos_a(pos), count, src)]);
        }
        let turns = if pos % 2 == 1 { 3 } else { 1 };
        for _ in 0..turns {
            e = TangleExpr::rotate(e);
        }
    }
    e
}

//! Oriented tangle expressions.
//!
//! A tangle is a morphism between finite sequences of signed boundary
//! points; we identify a sign with the direction of the strand through it,
//! `+` for upward and `-` for downward.  Expressions are built from the
//! eight oriented crossings (a sign and a rotation class `@0..@3`), the four
//! oriented cups and caps, identity strands, juxtaposition, stacking, and a
//! quarter-turn rotation of 2-tangles.  Every expression carries derived
//! source and target signatures; stacking is rejected when they do not
//! match.

pub mod cf;
pub mod parse;
pub mod pretzel;
pub mod rational;

pub use cf::{cf_eval, even_cf, positive_odd_cf, RationalSpec};
pub use parse::parse_tangle;
pub use pretzel::{
    is_pretzel_knot, pretzel_expr, Band, BandKind, PretzelBands, PretzelCase, PretzelSpec, Variant,
};
pub use rational::{
    rational_2bridge_expr, rational_canonical_expr, two_bridge_params, Parity, TwoBridgeForm,
};

use crate::error::{Error, Result};
use std::fmt;

/// Direction of a strand through a horizontal boundary line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dir {
    Up,
    Down,
}

impl Dir {
    pub fn reversed(self) -> Dir {
        match self {
            Dir::Up => Dir::Down,
            Dir::Down => Dir::Up,
        }
    }

    pub fn sign(self) -> char {
        match self {
            Dir::Up => '+',
            Dir::Down => '-',
        }
    }
}

impl fmt::Display for Dir {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dir::Up => write!(f, "up"),
            Dir::Down => write!(f, "down"),
        }
    }
}

/// Sequence of boundary signs, one per strand end.
pub type BoundarySignature = Vec<Dir>;

pub fn signature_string(sig: &[Dir]) -> String {
    let inner: Vec<String> = sig.iter().map(|d| d.sign().to_string()).collect();
    format!("({})", inner.join(","))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CrossingSign {
    Plus,
    Minus,
}

impl CrossingSign {
    pub fn flipped(self) -> CrossingSign {
        match self {
            CrossingSign::Plus => CrossingSign::Minus,
            CrossingSign::Minus => CrossingSign::Plus,
        }
    }
}

/// The elementary tangles: eight oriented crossings and four oriented
/// turnbacks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    /// Crossing of the given sign, rotated counterclockwise by `class`
    /// quarter turns.
    Crossing { sign: CrossingSign, class: u8 },
    /// Minimum with the strand oriented right-to-left at the top.
    CupL,
    /// Minimum with the strand oriented left-to-right at the top.
    CupR,
    /// Maximum with the strand oriented left-to-right at the bottom.
    CapL,
    /// Maximum with the strand oriented right-to-left at the bottom.
    CapR,
}

impl Generator {
    pub fn crossing(sign: CrossingSign, class: u8) -> Generator {
        assert!(class < 4, "rotation class out of range");
        Generator::Crossing { sign, class }
    }

    pub fn src(&self) -> BoundarySignature {
        use Dir::*;
        match self {
            Generator::Crossing { class, .. } => match class {
                0 => vec![Up, Up],
                1 => vec![Down, Up],
                2 => vec![Down, Down],
                _ => vec![Up, Down],
            },
            Generator::CupL | Generator::CupR => vec![],
            Generator::CapR => vec![Up, Down],
            Generator::CapL => vec![Down, Up],
        }
    }

    pub fn tgt(&self) -> BoundarySignature {
        use Dir::*;
        match self {
            Generator::Crossing { class, .. } => match class {
                0 => vec![Up, Up],
                1 => vec![Up, Down],
                2 => vec![Down, Down],
                _ => vec![Down, Up],
            },
            Generator::CupR => vec![Down, Up],
            Generator::CupL => vec![Up, Down],
            Generator::CapL | Generator::CapR => vec![],
        }
    }

    /// Reverses the orientation of every strand: crossings rotate by a half
    /// turn, cups and caps swap chirality.
    pub fn reversed(&self) -> Generator {
        match *self {
            Generator::Crossing { sign, class } => Generator::Crossing { sign, class: (class + 2) % 4 },
            Generator::CupL => Generator::CupR,
            Generator::CupR => Generator::CupL,
            Generator::CapL => Generator::CapR,
            Generator::CapR => Generator::CapL,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Crossing { sign: CrossingSign::Plus, class } => write!(f, "X+@{class}"),
            Generator::Crossing { sign: CrossingSign::Minus, class } => write!(f, "X-@{class}"),
            Generator::CupL => write!(f, "cupL"),
            Generator::CupR => write!(f, "cupR"),
            Generator::CapL => write!(f, "capL"),
            Generator::CapR => write!(f, "capR"),
        }
    }
}

/// Source and target boundary signatures of an expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature {
    pub src: BoundarySignature,
    pub tgt: BoundarySignature,
}

impl Signature {
    pub fn is_2tangle(&self) -> bool {
        self.src.len() == 2 && self.tgt.len() == 2
    }
}

/// Tangle expression tree.  `Compose` lists factors bottom to top in
/// diagrammatic order; `Tensor` lists factors left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TangleExpr {
    Gen(Generator),
    Id(Dir),
    Tensor(Vec<TangleExpr>),
    Compose(Vec<TangleExpr>),
    Rotate(Box<TangleExpr>),
}

impl TangleExpr {
    pub fn gen(g: Generator) -> TangleExpr {
        TangleExpr::Gen(g)
    }

    pub fn id(d: Dir) -> TangleExpr {
        TangleExpr::Id(d)
    }

    /// Flattening tensor constructor.
    pub fn tensor(items: Vec<TangleExpr>) -> TangleExpr {
        let mut flat = Vec::with_capacity(items.len());
        for e in items {
            match e {
                TangleExpr::Tensor(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        if flat.len() == 1 {
            flat.pop().unwrap()
        } else {
            TangleExpr::Tensor(flat)
        }
    }

    /// Flattening composition constructor, bottom to top.
    pub fn compose(items: Vec<TangleExpr>) -> TangleExpr {
        assert!(!items.is_empty(), "empty composition");
        let mut flat = Vec::with_capacity(items.len());
        for e in items {
            match e {
                TangleExpr::Compose(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        if flat.len() == 1 {
            flat.pop().unwrap()
        } else {
            TangleExpr::Compose(flat)
        }
    }

    /// Quarter-turn rotation.  On a bare crossing this advances the rotation
    /// class instead of wrapping the node.
    pub fn rotate(e: TangleExpr) -> TangleExpr {
        match e {
            TangleExpr::Gen(Generator::Crossing { sign, class }) => {
                TangleExpr::Gen(Generator::Crossing { sign, class: (class + 1) % 4 })
            }
            other => TangleExpr::Rotate(Box::new(other)),
        }
    }

    /// `n`-fold vertical stacking; the zeroth power is the identity on the
    /// source signature, defined only when source and target agree.
    pub fn pow(self, n: i64) -> Result<TangleExpr> {
        if n < 0 {
            return Err(Error::NegativePower(n));
        }
        if n == 0 {
            let sig = self.signature()?;
            if sig.src != sig.tgt {
                return Err(Error::UnstackablePower(
                    signature_string(&sig.src),
                    signature_string(&sig.tgt),
                ));
            }
            return Ok(TangleExpr::tensor(sig.src.into_iter().map(TangleExpr::Id).collect()));
        }
        if n == 1 {
            return Ok(self);
        }
        Ok(TangleExpr::compose(vec![self; n as usize]))
    }

    pub fn signature(&self) -> Result<Signature> {
        match self {
            TangleExpr::Gen(g) => Ok(Signature { src: g.src(), tgt: g.tgt() }),
            TangleExpr::Id(d) => Ok(Signature { src: vec![*d], tgt: vec![*d] }),
            TangleExpr::Tensor(items) => {
                let mut src = Vec::new();
                let mut tgt = Vec::new();
                for e in items {
                    let s = e.signature()?;
                    src.extend(s.src);
                    tgt.extend(s.tgt);
                }
                Ok(Signature { src, tgt })
            }
            TangleExpr::Compose(items) => {
                let mut iter = items.iter();
                let first = iter
                    .next()
                    .ok_or_else(|| Error::InternalInconsistency("empty composition".into()))?;
                let mut sig = first.signature()?;
                for e in iter {
                    let next = e.signature()?;
                    if sig.tgt != next.src {
                        return Err(Error::BoundaryMismatch {
                            found: signature_string(&sig.tgt),
                            expected: signature_string(&next.src),
                        });
                    }
                    sig.tgt = next.tgt;
                }
                Ok(sig)
            }
            TangleExpr::Rotate(inner) => {
                let s = inner.signature()?;
                if !s.is_2tangle() {
                    return Err(Error::NotA2Tangle { src: s.src.len(), tgt: s.tgt.len() });
                }
                // T: (a,b) -> (c,d) rotates to (-c,a) -> (d,-b)
                let (a, b) = (s.src[0], s.src[1]);
                let (c, d) = (s.tgt[0], s.tgt[1]);
                Ok(Signature { src: vec![c.reversed(), a], tgt: vec![d, b.reversed()] })
            }
        }
    }

    /// Reverses the orientation of every strand.
    pub fn reversed(&self) -> TangleExpr {
        match self {
            TangleExpr::Gen(g) => TangleExpr::Gen(g.reversed()),
            TangleExpr::Id(d) => TangleExpr::Id(d.reversed()),
            TangleExpr::Tensor(items) => {
                TangleExpr::Tensor(items.iter().map(|e| e.reversed()).collect())
            }
            TangleExpr::Compose(items) => {
                TangleExpr::Compose(items.iter().map(|e| e.reversed()).collect())
            }
            TangleExpr::Rotate(inner) => TangleExpr::Rotate(Box::new(inner.reversed())),
        }
    }
}

impl fmt::Display for TangleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TangleExpr::Gen(g) => write!(f, "{g}"),
            TangleExpr::Id(d) => write!(f, "id({d})"),
            TangleExpr::Tensor(items) => {
                write!(f, "tensor(")?;
                for (i, e) in items.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{e}")?;
                }
                write!(f, ")")
            }
            TangleExpr::Compose(items) => {
                write!(f, "compose(")?;
                for (i, e) in items.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{e}")?;
                }
                write!(f, ")")
            }
            TangleExpr::Rotate(inner) => write!(f, "rot({inner})"),
        }
    }
}

//! Span-valued evaluation of tangle expressions over Q(t).
//!
//! Each generator maps to a span: crossings to basic spans of the 2x2
//! braiding matrices (one of f+(t), f-(t) and their t -> t^-1 variants,
//! selected by sign and rotation class), cups and caps to the diagonal
//! one-dimensional spans.  Expressions evaluate by structural recursion;
//! the fast mode collapses maximal runs of stacked crossings into the
//! closed-form codirected and alternating power matrices, which keeps long
//! twist regions linear instead of quadratic in the twist count.

use crate::error::Result;
use crate::laurent::{LaurentPoly, QPoint};
use crate::matrix::Matrix;
use crate::ratfunc::RatFunc;
use crate::span::Span;
use crate::tangle::{CrossingSign, Generator, TangleExpr, Variant};
use crate::{MatrixQt, Qt, SpanQt};
use num_traits::{One, Zero};

/// Evaluation strategy: `Generators` composes raw generator spans (the
/// differential-testing oracle); `Fast` substitutes closed braiding forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Generators,
    Fast,
}

fn lp(min_deg: i64, coeffs: &[i64]) -> Qt {
    RatFunc::from_laurent(LaurentPoly::from_int_coeffs(min_deg, coeffs))
}

/// The map (a1, a2) -> ((1-t)a1 + t a2, a1).
pub fn f_plus() -> MatrixQt {
    Matrix::from_rows(vec![vec![lp(0, &[1, -1]), Qt::t()], vec![Qt::one(), Qt::zero()]])
}

/// The map (a1, a2) -> (a2, t^-1 a1 + (1-t^-1) a2); inverse to `f_plus`.
pub fn f_minus() -> MatrixQt {
    Matrix::from_rows(vec![vec![Qt::zero(), Qt::one()], vec![Qt::t_inv(), lp(-1, &[-1, 1])]])
}

/// The rank-one square-zero map (a1, a2) -> (a1 - a2, a1 - a2).
pub fn h_map() -> MatrixQt {
    let one = Qt::one();
    Matrix::from_rows(vec![vec![one.clone(), -one.clone()], vec![one.clone(), -one]])
}

fn subst_inv(m: &MatrixQt) -> MatrixQt {
    m.map(|x| x.subst_t_inverse())
}

/// The 2x2 matrix of an oriented crossing: sign picks f+ or f-, the
/// rotation class walks the cycle f+(t), f-(t), f+(t^-1), f-(t^-1).
pub fn crossing_matrix(sign: CrossingSign, class: u8) -> MatrixQt {
    use CrossingSign::*;
    match (sign, class) {
        (Plus, 0) => f_plus(),
        (Plus, 1) => f_minus(),
        (Plus, 2) => subst_inv(&f_plus()),
        (Plus, 3) => subst_inv(&f_minus()),
        (Minus, 0) => f_minus(),
        (Minus, 1) => subst_inv(&f_plus()),
        (Minus, 2) => subst_inv(&f_minus()),
        (Minus, 3) => f_plus(),
        _ => unreachable!("rotation class out of range"),
    }
}

fn delta() -> MatrixQt {
    Matrix::from_rows(vec![vec![Qt::one()], vec![Qt::one()]])
}

/// Span of a single generator.
pub fn at_generator(g: Generator) -> SpanQt {
    match g {
        Generator::Crossing { sign, class } => Span::basic(crossing_matrix(sign, class)),
        Generator::CupL | Generator::CupR => Span::new(Matrix::zeros(0, 1), delta()),
        Generator::CapL | Generator::CapR => Span::new(delta(), Matrix::zeros(0, 1)),
    }
}

/// n-th power of f+ or f- in closed form, valid for every integer n:
/// rows built from the quantum integers [-+n] at -t^-1 and [+-n] at -t.
pub fn codirected_power(n: i64, sign: CrossingSign) -> MatrixQt {
    let (top_n, bot_n) = match sign {
        CrossingSign::Plus => (-n, n),
        CrossingSign::Minus => (n, -n),
    };
    let top = RatFunc::from_laurent(LaurentPoly::qint(top_n, QPoint::NegTInv));
    let bot = RatFunc::from_laurent(LaurentPoly::qint(bot_n, QPoint::NegT));
    Matrix::from_rows(vec![
        vec![Qt::one() - top.clone(), top],
        vec![bot.clone(), Qt::one() - bot.clone()],
    ])
}

/// n-th alternating braiding power in closed form, affine in k where
/// n = 2k or 2k+1: even powers are unipotent perturbations of the identity
/// by h, odd powers perturb a single crossing matrix.  The variant selects
/// the parameter: at t the perturbation coefficient is (1 - t^-1), at
/// t^-1 it is (1 - t).
pub fn alternating_power(n: i64, sign: CrossingSign, variant: Variant) -> MatrixQt {
    let k = (n - (n.rem_euclid(2))) / 2;
    let coeff = match variant {
        Variant::AtT => lp(-1, &[-1, 1]),
        Variant::AtTInv => lp(0, &[1, -1]),
    };
    let k_coeff = coeff * RatFunc::from_int(k);
    let perturbation = h_map().scale(&k_coeff);
    let base = if n.rem_euclid(2) == 0 {
        Matrix::identity(2)
    } else {
        match (sign, variant) {
            (CrossingSign::Plus, Variant::AtT) => f_minus(),
            (CrossingSign::Plus, Variant::AtTInv) => subst_inv(&f_minus()),
            (CrossingSign::Minus, Variant::AtT) => subst_inv(&f_plus()),
            (CrossingSign::Minus, Variant::AtTInv) => f_plus(),
        }
    };
    match sign {
        CrossingSign::Plus => base.sub(&perturbation),
        CrossingSign::Minus => base.add(&perturbation),
    }
}

/// Matrix of a maximal stacked run of crossings, segmented into
/// constant-generator chunks (classes 0 and 2, codirected closed form) and
/// sign-constant alternating chunks (classes 1/3, alternating closed form).
fn crossing_run_matrix(run: &[(CrossingSign, u8)]) -> MatrixQt {
    let mut result = Matrix::identity(2);
    let mut i = 0;
    while i < run.len() {
        let (sign, class) = run[i];
        let mut j = i + 1;
        let chunk = if class == 0 || class == 2 {
            while j < run.len() && run[j] == run[i] {
                j += 1;
            }
            let m = codirected_power((j - i) as i64, sign);
            if class == 0 {
                m
            } else {
                subst_inv(&m)
            }
        } else {
            let mut expected = if class == 1 { 3 } else { 1 };
            while j < run.len() && run[j] == (sign, expected) {
                expected = if expected == 1 { 3 } else { 1 };
                j += 1;
            }
            let variant = if class == 1 { Variant::AtT } else { Variant::AtTInv };
            alternating_power((j - i) as i64, sign, variant)
        };
        result = chunk.mul(&result);
        i = j;
    }
    result
}

/// Evaluates a typechecked expression to its span.
pub fn at_tangle(e: &TangleExpr, mode: Mode) -> Result<SpanQt> {
    e.signature()?;
    Ok(eval(e, mode))
}

fn eval(e: &TangleExpr, mode: Mode) -> SpanQt {
    match e {
        TangleExpr::Gen(g) => at_generator(*g),
        TangleExpr::Id(_) => SpanQt::identity(1),
        TangleExpr::Tensor(items) => items
            .iter()
            .fold(SpanQt::identity(0), |acc, item| acc.tensor(&eval(item, mode))),
        TangleExpr::Compose(items) => match mode {
            Mode::Generators => {
                let mut spans = items.iter().map(|item| eval(item, mode));
                let first = spans.next().expect("composition is nonempty");
                spans.fold(first, |acc, s| acc.then(&s))
            }
            Mode::Fast => compose_fast(items),
        },
        TangleExpr::Rotate(inner) => eval(inner, mode).rotate2(),
    }
}

fn compose_fast(items: &[TangleExpr]) -> SpanQt {
    let mut acc: Option<SpanQt> = None;
    let push = |acc: &mut Option<SpanQt>, s: SpanQt| {
        *acc = Some(match acc.take() {
            Some(prev) => prev.then(&s),
            None => s,
        });
    };
    let mut i = 0;
    while i < items.len() {
        if let TangleExpr::Gen(Generator::Crossing { .. }) = items[i] {
            let mut run = Vec::new();
            while let Some(TangleExpr::Gen(Generator::Crossing { sign, class })) = items.get(i) {
                run.push((*sign, *class));
                i += 1;
            }
            push(&mut acc, Span::basic(crossing_run_matrix(&run)));
        } else {
            push(&mut acc, eval(&items[i], Mode::Fast));
            i += 1;
        }
    }
    acc.expect("composition is nonempty")
}

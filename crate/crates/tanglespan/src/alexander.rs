//! Alexander polynomials of rational and pretzel knots by three routes.
//!
//! The span route evaluates the knot's tangle decomposition and contracts
//! the resulting boundary matrix; the continuant route expands a
//! tridiagonal determinant by the three-term recurrence
//! K_m = a_m K_{m-1} - l_m u_{m-1} K_{m-2}; the closed route (pretzels
//! only) applies per-parity-case product formulas.  All routes work in
//! exact arithmetic over Q(t) and must agree after normalization, which
//! makes each an independent check on the others.

use crate::error::{Error, Result};
use crate::functor::{alternating_power, at_tangle, codirected_power, Mode};
use crate::laurent::{LaurentPoly, QPoint};
use crate::matrix::Matrix;
use crate::ratfunc::RatFunc;
use crate::tangle::{
    even_cf, pretzel_expr, rational_2bridge_expr, two_bridge_params, Band, BandKind, Parity,
    PretzelCase, PretzelSpec, TangleExpr, Variant,
};
use crate::{BigInt, BigRat, MatrixQt, Qt};
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Which computation produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Span,
    Continuant,
    Closed,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Span => "span",
            Route::Continuant => "continuant",
            Route::Closed => "closed",
        })
    }
}

/// Cyclic tridiagonal data: entry k of `a` is the diagonal, `u` the entry
/// one step right of the diagonal and `l` one step left, both indices mod
/// n, so `u[n-1]` and `l[0]` are the corner entries.
#[derive(Debug, Clone, PartialEq)]
pub struct CyclicTridiagonal {
    pub n: usize,
    pub a: Vec<Qt>,
    pub u: Vec<Qt>,
    pub l: Vec<Qt>,
}

impl CyclicTridiagonal {
    /// Determinant of the leading principal (n-1) x (n-1) minor by the
    /// continuant recurrence; 1 for n = 1.
    pub fn minor_continuant(&self) -> Qt {
        let n = self.n;
        if n < 2 {
            return Qt::one();
        }
        let mut prev = Qt::one();
        let mut cur = self.a[0].clone();
        for m in 2..n {
            let next =
                self.a[m - 1].clone() * cur.clone() - self.l[m - 1].clone() * self.u[m - 2].clone() * prev;
            prev = cur;
            cur = next;
        }
        cur
    }
}

/// Route-dependent witness of the computation behind a polynomial.
#[derive(Debug, Clone)]
pub enum Presentation {
    /// Boundary-contracted matrix together with its kernel dimension.
    Equalizer { matrix: MatrixQt, kernel_dim: usize },
    /// Arguments of a plain continuant with unit off-diagonals.
    Continuant { args: Vec<Qt> },
    /// Cyclic tridiagonal whose leading principal minor gives delta.
    CyclicMinor(CyclicTridiagonal),
    /// Closed-formula parity case.
    Closed { case: PretzelCase },
}

/// A computed Alexander polynomial with its provenance.
#[derive(Debug, Clone)]
pub struct AlexanderResult {
    /// Normalized polynomial: lowest degree 0, positive leading coefficient.
    pub delta: LaurentPoly,
    pub presentation: Presentation,
    pub route: Route,
    pub mirror_applied: bool,
    /// |delta(-1)|, evaluated exactly.
    pub determinant: BigInt,
}

/// |delta(-1)| of a normalized integral polynomial, exactly.
pub fn knot_determinant(delta: &LaurentPoly) -> BigInt {
    let v = delta
        .eval_rat(&BigRat::from_integer(BigInt::from(-1)))
        .expect("-1 is not a pole of a Laurent polynomial");
    debug_assert!(v.is_integer());
    v.to_integer().abs()
}

fn finish(
    delta_qt: &Qt,
    presentation: Presentation,
    route: Route,
    mirror_applied: bool,
) -> Result<AlexanderResult> {
    let lp = delta_qt.as_laurent().map_err(|_| {
        Error::InternalInconsistency("Alexander polynomial does not clear denominators".into())
    })?;
    if lp.is_zero() {
        return Err(Error::InternalInconsistency(
            "vanishing Alexander polynomial".into(),
        ));
    }
    let delta = lp.normalize_alexander();
    if !delta.is_integral() {
        return Err(Error::InternalInconsistency(
            "normalized Alexander polynomial has non-integer coefficients".into(),
        ));
    }
    let determinant = knot_determinant(&delta);
    Ok(AlexanderResult { delta, presentation, route, mirror_applied, determinant })
}

fn one_minus_t() -> Qt {
    RatFunc::from_laurent(LaurentPoly::from_int_coeffs(0, &[1, -1]))
}

fn one_minus_t_inv() -> Qt {
    RatFunc::from_laurent(LaurentPoly::from_int_coeffs(-1, &[-1, 1]))
}

fn qint_qt(n: i64, point: QPoint) -> Qt {
    RatFunc::from_laurent(LaurentPoly::qint(n, point))
}

/// Contraction closing off a 4-strand layer matrix into the 2x2 matrix
/// whose entries are all the Alexander polynomial up to sign; the parity of
/// the layer count selects the row pairing.
pub fn equalizer_contraction(g: &MatrixQt, parity: Parity) -> Result<(MatrixQt, Qt)> {
    let from = |rows: Vec<Vec<i64>>| {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(RatFunc::from_int).collect())
                .collect(),
        )
    };
    let p = match parity {
        Parity::Odd => from(vec![vec![1, 0, 0, -1], vec![0, 1, -1, 0]]),
        Parity::Even => from(vec![vec![1, -1, 0, 0], vec![0, 0, 1, -1]]),
    };
    let q = from(vec![vec![1, 0], vec![0, 1], vec![0, 1], vec![1, 0]]);
    let gp = p.mul(g).mul(&q);
    let consistent = gp[(0, 1)] == -gp[(0, 0)].clone()
        && gp[(1, 1)] == -gp[(1, 0)].clone()
        && (gp[(1, 0)] == gp[(0, 0)] || gp[(1, 0)] == -gp[(0, 0)].clone());
    if !consistent {
        return Err(Error::NotTwoBridgeLayer(
            "contracted matrix entries do not agree up to sign".into(),
        ));
    }
    let delta = gp[(0, 0)].clone();
    Ok((gp, delta))
}

/// Span route for the 2-bridge knot b(p, q).
pub fn alex_rational_span(p: i64, q: i64) -> Result<AlexanderResult> {
    let form = rational_2bridge_expr(p, q)?;
    let span = at_tangle(&form.expr, Mode::Fast)?;
    let g = span.to_linear_map().ok_or_else(|| {
        Error::InternalInconsistency("layer span has a non-invertible left leg".into())
    })?;
    let (gp, delta_qt) = equalizer_contraction(&g, form.parity)?;
    let kernel_dim = 2 - gp.rank();
    finish(
        &delta_qt,
        Presentation::Equalizer { matrix: gp, kernel_dim },
        Route::Span,
        form.mirrored,
    )
}

/// Span route for a user-supplied 4-strand layer word, closed by the
/// 2-bridge equalizer of the given parity.
pub fn alex_layer_span(expr: &TangleExpr, parity: Parity) -> Result<AlexanderResult> {
    let span = at_tangle(expr, Mode::Fast)?;
    if span.src_dim() != 4 || span.tgt_dim() != 4 {
        return Err(Error::DimensionMismatch(format!(
            "layer words act on 4 strands, got {} -> {}",
            span.src_dim(),
            span.tgt_dim()
        )));
    }
    let g = span.to_linear_map().ok_or_else(|| {
        Error::InternalInconsistency("layer span has a non-invertible left leg".into())
    })?;
    let (gp, delta_qt) = equalizer_contraction(&g, parity)?;
    let kernel_dim = 2 - gp.rank();
    finish(
        &delta_qt,
        Presentation::Equalizer { matrix: gp, kernel_dim },
        Route::Span,
        false,
    )
}

/// Continuant route for b(p, q): the even continued fraction [2k_1, ...]
/// feeds the arguments k_i (1 - t) alternating with -k_i (1 - t^-1).
pub fn alex_rational_continuant(p: i64, q: i64) -> Result<AlexanderResult> {
    let (p_n, q_n, mirrored) = two_bridge_params(p, q)?;
    let args: Vec<Qt> = if p_n == 1 {
        Vec::new()
    } else {
        even_cf(p_n, q_n)?
            .iter()
            .enumerate()
            .map(|(i, &a)| {
                let k = RatFunc::from_int(a / 2);
                if i % 2 == 0 {
                    k * one_minus_t()
                } else {
                    -(k * one_minus_t_inv())
                }
            })
            .collect()
    };
    let mut prev = Qt::one();
    let mut cur = Qt::one();
    for (i, a) in args.iter().enumerate() {
        let next = if i == 0 { a.clone() } else { a.clone() * cur.clone() - prev };
        prev = cur;
        cur = next;
    }
    finish(&cur, Presentation::Continuant { args }, Route::Continuant, mirrored)
}

fn band_matrix(band: &Band) -> MatrixQt {
    match band.kind {
        BandKind::Codirected { sign, variant } => {
            let m = codirected_power(band.twists, sign);
            match variant {
                Variant::AtT => m,
                Variant::AtTInv => m.map(|x| x.subst_t_inverse()),
            }
        }
        BandKind::Alternating { sign, variant } => alternating_power(band.twists, sign, variant),
    }
}

/// Span route for a pretzel knot: close the block-diagonal band matrix by
/// the boundary identifications into a cyclic tridiagonal n x n matrix M
/// with M 1 = 0, and take the determinant of the leading principal minor.
pub fn alex_pretzel_span(spec: &PretzelSpec) -> Result<AlexanderResult> {
    let bands = pretzel_expr(spec)?;
    let n = bands.bands.len();
    let blocks: Vec<MatrixQt> = bands.bands.iter().map(band_matrix).collect();
    let refs: Vec<&MatrixQt> = blocks.iter().collect();
    let dbig = Matrix::block_diag(&refs);
    let mut p = Matrix::zeros(n, 2 * n);
    p[(0, 0)] = -Qt::one();
    p[(0, 2 * n - 1)] = Qt::one();
    for j in 1..n {
        p[(j, 2 * j - 1)] = Qt::one();
        p[(j, 2 * j)] = -Qt::one();
    }
    let mut q = Matrix::zeros(2 * n, n);
    q[(0, 0)] = Qt::one();
    q[(2 * n - 1, 0)] = Qt::one();
    for i in 1..n {
        q[(2 * i - 1, i)] = Qt::one();
        q[(2 * i, i)] = Qt::one();
    }
    let m = p.mul(&dbig).mul(&q);
    for i in 0..n {
        let row_sum = m.row(i).iter().fold(Qt::zero(), |acc, x| acc + x.clone());
        if !row_sum.is_zero() {
            return Err(Error::InternalInconsistency(format!(
                "pretzel closure matrix row {i} does not sum to zero"
            )));
        }
    }
    let delta_qt = m.minor(0, 0).det();
    let kernel_dim = n - m.rank();
    finish(
        &delta_qt,
        Presentation::Equalizer { matrix: m, kernel_dim },
        Route::Span,
        false,
    )
}

/// Continuant route for a pretzel knot, reading the tridiagonal entries
/// straight off the band blocks.
pub fn alex_pretzel_continuant(spec: &PretzelSpec) -> Result<AlexanderResult> {
    let bands = pretzel_expr(spec)?;
    let n = bands.bands.len();
    let blocks: Vec<MatrixQt> = bands.bands.iter().map(band_matrix).collect();
    let a: Vec<Qt> = (0..n)
        .map(|k| blocks[k][(1, 1)].clone() - blocks[(k + 1) % n][(0, 0)].clone())
        .collect();
    let u: Vec<Qt> = (0..n).map(|k| blocks[(k + 1) % n][(0, 1)].clone()).collect();
    let l: Vec<Qt> = (0..n).map(|k| -blocks[k][(1, 0)].clone()).collect();
    let tri = CyclicTridiagonal { n, a, u, l };
    let delta_qt = tri.minor_continuant();
    finish(&delta_qt, Presentation::CyclicMinor(tri), Route::Continuant, false)
}

fn elementary_symmetric(values: &[i64]) -> Vec<BigInt> {
    let mut e = vec![BigInt::from(0); values.len() + 1];
    e[0] = BigInt::from(1);
    for &x in values {
        for j in (1..e.len()).rev() {
            let add = BigInt::from(x) * e[j - 1].clone();
            e[j] += add;
        }
    }
    e
}

fn lp_pow(base: &LaurentPoly, k: usize) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for _ in 0..k {
        acc = acc * base.clone();
    }
    acc
}

/// Closed-formula route, dispatched on the parity case of the spec.
pub fn alex_pretzel_closed(spec: &PretzelSpec) -> Result<AlexanderResult> {
    let bands = pretzel_expr(spec)?;
    let q = bands.spec.entries().to_vec();
    let n = q.len();
    let delta_qt = match bands.case {
        PretzelCase::AllOdd => {
            // 2^-(n-1) sum over i of (t-1)^2i (t+1)^(n-1-2i) sigma_2i(q)
            let sigma = elementary_symmetric(&q);
            let t_minus_1 = LaurentPoly::from_int_coeffs(0, &[-1, 1]);
            let t_plus_1 = LaurentPoly::from_int_coeffs(0, &[1, 1]);
            let mut sum = LaurentPoly::zero();
            for i in 0..=((n - 1) / 2) {
                let term = lp_pow(&t_minus_1, 2 * i)
                    * lp_pow(&t_plus_1, n - 1 - 2 * i)
                    * LaurentPoly::constant(BigRat::from_integer(sigma[2 * i].clone()));
                sum = sum + term;
            }
            let half_pow = BigRat::new(BigInt::from(1), BigInt::from(2).pow((n - 1) as u32));
            RatFunc::from_laurent(sum.scale(&half_pow))
        }
        PretzelCase::OneEvenNEven => {
            // product of [-q_odd] and [q_even] quantum integers times the
            // difference of their reciprocal sums
            let mut prod = Qt::one();
            let mut s = Qt::zero();
            for (idx, &qi) in q.iter().enumerate() {
                if idx % 2 == 0 {
                    let f = qint_qt(-qi, QPoint::NegT);
                    s = s - f.inv()?;
                    prod = prod * f;
                } else {
                    let f = qint_qt(qi, QPoint::NegT);
                    s = s + f.inv()?;
                    prod = prod * f;
                }
            }
            prod * s
        }
        PretzelCase::OneEvenNOdd => {
            // leading even band contributes (q1/2) [-2] and 2/q1 / (t [-2])
            let q1 = q[0];
            let two = qint_qt(-2, QPoint::NegT);
            let mut prod = RatFunc::constant(BigRat::new(BigInt::from(q1), BigInt::from(2)))
                * two.clone();
            let mut s = RatFunc::constant(BigRat::new(BigInt::from(2), BigInt::from(q1)))
                * (Qt::t() * two).inv()?;
            for (idx, &qi) in q.iter().enumerate().skip(1) {
                if idx % 2 == 0 {
                    let f = qint_qt(-qi, QPoint::NegT);
                    s = s - f.inv()?;
                    prod = prod * f;
                } else {
                    let f = qint_qt(qi, QPoint::NegT);
                    s = s + f.inv()?;
                    prod = prod * f;
                }
            }
            prod * s
        }
    };
    finish(
        &delta_qt,
        Presentation::Closed { case: bands.case },
        Route::Closed,
        false,
    )
}

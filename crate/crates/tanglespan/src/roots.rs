//! Numerical root location for Alexander polynomials.
//!
//! Roots are computed in double precision by simultaneous Aberth iteration,
//! started deterministically on a circle just outside the Cauchy bound, so
//! that identical inputs always produce bit-identical reports.  Two checks
//! capture the verified root-location statements: all roots on the unit
//! circle (alternating odd pretzels, and pretzels with one even band among
//! an even total), and all roots in the half plane `Re t > -1` (one even
//! band among an odd total, and two-bridge knots).  [`family_verify`]
//! samples random knots satisfying each statement's hypotheses, runs the
//! matching check, and certifies the exclusion of `t = -1` itself exactly
//! through the odd knot determinant.

use crate::alexander::{alex_pretzel_closed, alex_rational_continuant};
use crate::error::{Error, Result};
use crate::laurent::{poly_div_rem, poly_gcd, LaurentPoly};
use crate::tangle::PretzelSpec;
use crate::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;

/// Convergence tolerance for the simultaneous iteration.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Iteration cap before the finder reports non-convergence.
pub const MAX_ITERATIONS: usize = 200;

/// Default half-width of the annulus accepted by the unit-circle check.
pub const UNIT_CIRCLE_EPS: f64 = 1e-8;

/// Guard band for the strict half-plane inequality `Re t > -1`.
pub const HALFPLANE_GUARD: f64 = 1e-9;

/// Roots of a normalized Alexander polynomial together with residuals.
#[derive(Debug, Clone, PartialEq)]
pub struct RootReport {
    /// Roots sorted by real part, then by imaginary part.
    pub roots: Vec<Complex64>,
    /// `|p(z)|` at each root, in the same order.
    pub residuals: Vec<f64>,
    /// Convergence tolerance the iteration ran with.
    pub tolerance: f64,
    /// Iterations taken until the corrections fell below tolerance.
    pub iterations: usize,
}

impl RootReport {
    /// Number of roots, which equals the polynomial degree after
    /// normalization.
    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    /// Largest residual over all roots, zero for an empty report.
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().fold(0.0, |a, &b| a.max(b))
    }
}

/// Verdict of a root-location check together with its margin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckOutcome {
    pub pass: bool,
    /// Worst `||t| - 1|` for the circle check; smallest `Re t` for the
    /// half-plane check.
    pub margin: f64,
}

/// Finds all roots of `delta` up to the given tolerance.
///
/// The polynomial is first normalized to an honest polynomial with positive
/// leading and non-zero constant coefficients, so unit factors `±t^k` never
/// influence the root set.  Fails with [`Error::NonConvergence`] if the
/// iteration stalls and with [`Error::InternalInconsistency`] on inputs
/// without a root set (the zero polynomial, coefficients overflowing a
/// double).
pub fn find_roots(delta: &LaurentPoly, tol: f64) -> Result<RootReport> {
    if delta.is_zero() {
        return Err(Error::InternalInconsistency(
            "the zero polynomial has no root set".into(),
        ));
    }
    let poly = delta.normalize_alexander();
    let degree = poly.max_degree();
    if degree == 0 {
        return Ok(RootReport {
            roots: Vec::new(),
            residuals: Vec::new(),
            tolerance: tol,
            iterations: 0,
        });
    }
    // Splitting off exact square-free factors first keeps every root simple
    // for the iteration; multiple roots would otherwise only be located to
    // a fractional power of the working precision.
    let mut roots = Vec::with_capacity(degree as usize);
    let mut iterations = 0;
    for (factor, multiplicity) in square_free_factors(&poly) {
        let coeffs = to_doubles(&factor)?;
        let (zs, iters) = aberth(&coeffs, tol)?;
        iterations = iterations.max(iters);
        for z in zs {
            for _ in 0..multiplicity {
                roots.push(z);
            }
        }
    }
    if roots.len() != degree as usize {
        return Err(Error::InternalInconsistency(format!(
            "square-free split lost roots: {} of {degree}",
            roots.len()
        )));
    }
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    let full = to_doubles(&poly)?;
    let residuals = roots.iter().map(|&z| horner(&full, z).0.norm()).collect();
    Ok(RootReport {
        roots,
        residuals,
        tolerance: tol,
        iterations,
    })
}

/// Coefficients of an ordinary polynomial as doubles, degree 0 first.
fn to_doubles(poly: &LaurentPoly) -> Result<Vec<f64>> {
    (0..=poly.max_degree())
        .map(|k| {
            poly.coeff(k).to_f64().filter(|c| c.is_finite()).ok_or_else(|| {
                Error::InternalInconsistency(format!(
                    "coefficient of degree {k} does not fit a double"
                ))
            })
        })
        .collect()
}

/// Formal derivative of an ordinary polynomial.
fn derivative(poly: &LaurentPoly) -> LaurentPoly {
    let coeffs = (1..=poly.max_degree().max(0))
        .map(|k| poly.coeff(k) * crate::BigRat::from_integer(k.into()))
        .collect();
    LaurentPoly::from_coeffs(0, coeffs)
}

/// Yun's square-free decomposition over the rationals.
///
/// Returns pairwise coprime square-free factors with their multiplicities;
/// the multiplicity-weighted degrees sum to the input degree.
fn square_free_factors(poly: &LaurentPoly) -> Vec<(LaurentPoly, usize)> {
    let dp = derivative(poly);
    let g = poly_gcd(poly, &dp);
    if g.max_degree() == 0 {
        return vec![(poly.clone(), 1)];
    }
    let mut c = poly_div_rem(poly, &g).0;
    let mut d = &poly_div_rem(&dp, &g).0 - &derivative(&c);
    let mut out = Vec::new();
    let mut multiplicity = 1;
    while c.max_degree() > 0 {
        let f = poly_gcd(&c, &d);
        if f.max_degree() > 0 {
            out.push((f.clone(), multiplicity));
        }
        c = poly_div_rem(&c, &f).0;
        d = &poly_div_rem(&d, &f).0 - &derivative(&c);
        multiplicity += 1;
    }
    out
}

/// Evaluates the polynomial, its derivative, and the scale `sum |c_k||z|^k`
/// that bounds the attainable residual at `z`.
fn horner(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64, f64) {
    let az = z.norm();
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    let mut scale = 0.0f64;
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
        scale = scale * az + c.abs();
    }
    (p, dp, scale)
}

/// Aberth's simultaneous iteration with Gauss-Seidel updates.
///
/// A root stops moving once its residual drops below the round-off floor
/// of Horner evaluation, so clustered roots cannot stall the step
/// criterion indefinitely.
fn aberth(coeffs: &[f64], tol: f64) -> Result<(Vec<Complex64>, usize)> {
    let floor = 4.0 * f64::EPSILON;
    let degree = coeffs.len() - 1;
    let lead = coeffs[degree];
    let radius = 1.0
        + coeffs[..degree]
            .iter()
            .map(|c| (c / lead).abs())
            .fold(0.0, f64::max);
    // The angular offset keeps the start off the real axis and off its own
    // mirror image, so conjugate root pairs cannot trap the iteration.
    let offset = 0.43;
    let mut z: Vec<Complex64> = (0..degree)
        .map(|k| {
            let angle = std::f64::consts::TAU * k as f64 / degree as f64 + offset;
            Complex64::from_polar(radius, angle)
        })
        .collect();
    for iteration in 1..=MAX_ITERATIONS {
        let mut worst = 0.0f64;
        for k in 0..degree {
            let (p, dp, scale) = horner(coeffs, z[k]);
            if p.norm() <= floor * scale {
                continue;
            }
            let newton = if dp.norm() == 0.0 {
                Complex64::from_polar(tol.sqrt(), offset)
            } else {
                p / dp
            };
            let mut repulsion = Complex64::new(0.0, 0.0);
            for j in 0..degree {
                if j != k {
                    repulsion += (z[k] - z[j]).inv();
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * repulsion;
            let step = if denom.norm() == 0.0 { newton } else { newton / denom };
            z[k] -= step;
            worst = worst.max(step.norm() / (1.0 + z[k].norm()));
        }
        if worst < tol {
            z.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
            return Ok((z, iteration));
        }
    }
    let residual = z.iter().map(|&w| horner(coeffs, w).0.norm()).fold(0.0, f64::max);
    Err(Error::NonConvergence {
        iterations: MAX_ITERATIONS,
        residual,
    })
}

/// Checks that every root lies on the unit circle, within `eps`.
pub fn check_unit_circle(report: &RootReport, eps: f64) -> CheckOutcome {
    let margin = report
        .roots
        .iter()
        .map(|z| (z.norm() - 1.0).abs())
        .fold(0.0, f64::max);
    CheckOutcome {
        pass: margin < eps,
        margin,
    }
}

/// Checks that every root lies strictly right of `Re t = -1`, with a guard
/// band against roots numerically on the line.
pub fn check_halfplane(report: &RootReport, guard: f64) -> CheckOutcome {
    let margin = report
        .roots
        .iter()
        .map(|z| z.re)
        .fold(f64::INFINITY, f64::min);
    CheckOutcome {
        pass: margin > -1.0 + guard,
        margin,
    }
}

/// Header line matching [`csv_rows`].
pub const CSV_HEADER: &str = "id,re,im,abs,residual";

/// Renders one CSV row per root with full double precision.  The id field
/// is quoted, since knot names such as `b(5,2)` contain commas.
pub fn csv_rows(id: &str, report: &RootReport) -> Vec<String> {
    report
        .roots
        .iter()
        .zip(&report.residuals)
        .map(|(z, r)| {
            format!(
                "\"{id}\",{:.17e},{:.17e},{:.17e},{:.3e}",
                z.re,
                z.im,
                z.norm(),
                r
            )
        })
        .collect()
}

/// A sampled knot family, each tied to one root-location statement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `P(q_1, ..., q_n)`, all entries odd and positive, `n` odd: every
    /// root lies on the unit circle.
    OddPretzel,
    /// Exactly one even entry among an even number of positive entries:
    /// every root lies on the unit circle.
    EvenPretzel2p,
    /// Exactly one even entry among an odd number of positive entries:
    /// every root satisfies `Re t > -1`.
    EvenPretzel2p1,
    /// Two-bridge knots `b(p, q)`: every root satisfies `Re t > -1`, and
    /// the determinant is exactly `p`.
    Rational,
}

impl Family {
    /// All families, in a fixed order.
    pub const ALL: [Family; 4] = [
        Family::OddPretzel,
        Family::EvenPretzel2p,
        Family::EvenPretzel2p1,
        Family::Rational,
    ];

    /// Stable identifier, also accepted by [`Family::parse`].
    pub fn name(&self) -> &'static str {
        match self {
            Family::OddPretzel => "odd-pretzel",
            Family::EvenPretzel2p => "even-pretzel-2p",
            Family::EvenPretzel2p1 => "even-pretzel-2p1",
            Family::Rational => "rational",
        }
    }

    /// Which check the family's statement asserts.
    pub fn check_name(&self) -> &'static str {
        match self {
            Family::OddPretzel | Family::EvenPretzel2p => "unit-circle",
            Family::EvenPretzel2p1 | Family::Rational => "half-plane",
        }
    }

    /// Parses the identifiers produced by [`Family::name`].
    pub fn parse(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == s)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A sampled knot, identified by its defining integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KnotSpec {
    /// Two-bridge knot `b(p, q)`.
    Rational { p: i64, q: i64 },
    /// Pretzel knot `P(q_1, ..., q_n)`.
    Pretzel(Vec<i64>),
}

impl KnotSpec {
    /// Human-readable knot name, `b(p,q)` or `P(...)`.
    pub fn id(&self) -> String {
        match self {
            KnotSpec::Rational { p, q } => format!("b({p},{q})"),
            KnotSpec::Pretzel(entries) => format!(
                "P({})",
                entries
                    .iter()
                    .map(|q| q.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ),
        }
    }
}

impl fmt::Display for KnotSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

/// One sampled knot with its verdicts.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilySample {
    /// Human-readable knot name, `P(...)` or `b(p,q)`.
    pub id: String,
    /// Numerical root-location verdict.
    pub outcome: CheckOutcome,
    /// Whether the exact side conditions hold: the determinant is odd, and
    /// for two-bridge knots equals `p`.
    pub exact_ok: bool,
    /// Knot determinant `|delta(-1)|`, computed exactly.
    pub determinant: BigInt,
    /// Full root report, for CSV export.
    pub report: RootReport,
}

impl FamilySample {
    /// True when both the numerical check and the exact conditions hold.
    pub fn passed(&self) -> bool {
        self.outcome.pass && self.exact_ok
    }
}

/// Verdicts over a sampled family.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilyReport {
    pub family: Family,
    pub samples: Vec<FamilySample>,
    /// Number of samples that failed either check.
    pub failures: usize,
}

impl FamilyReport {
    pub fn all_passed(&self) -> bool {
        self.failures == 0
    }
}

/// Draws `samples` knot specs from the family, entries bounded by `bound`.
///
/// The sampler is seeded, so equal arguments reproduce the identical spec
/// list.  Requires `bound >= 3` to leave room for every entry kind.
pub fn sample_family(family: Family, samples: usize, seed: u64, bound: i64) -> Vec<KnotSpec> {
    assert!(bound >= 3, "entry bound must be at least 3");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| match family {
            Family::Rational => {
                let (p, q) = sample_fraction(&mut rng, bound);
                KnotSpec::Rational { p, q }
            }
            _ => KnotSpec::Pretzel(sample_pretzel(&mut rng, family, bound)),
        })
        .collect()
}

/// Computes the knot's Alexander polynomial, finds its roots, and applies
/// the family's check plus the exact determinant conditions.  Pure in its
/// arguments, so batches may fan out over threads.
pub fn verify_sample(family: Family, spec: &KnotSpec, tol: f64) -> Result<FamilySample> {
    let alex = match spec {
        KnotSpec::Rational { p, q } => alex_rational_continuant(*p, *q)?,
        KnotSpec::Pretzel(entries) => alex_pretzel_closed(&PretzelSpec::new(entries.clone())?)?,
    };
    let report = find_roots(&alex.delta, tol)?;
    let outcome = match family.check_name() {
        "unit-circle" => check_unit_circle(&report, UNIT_CIRCLE_EPS),
        _ => check_halfplane(&report, HALFPLANE_GUARD),
    };
    let mut exact_ok = alex.determinant.is_odd();
    if let KnotSpec::Rational { p, .. } = spec {
        exact_ok = exact_ok && alex.determinant == BigInt::from(*p);
    }
    Ok(FamilySample {
        id: spec.id(),
        outcome,
        exact_ok,
        determinant: alex.determinant,
        report,
    })
}

/// Samples `samples` knots from the family and runs the family's
/// root-location check on each.
pub fn family_verify(
    family: Family,
    samples: usize,
    seed: u64,
    bound: i64,
) -> Result<FamilyReport> {
    let specs = sample_family(family, samples, seed, bound);
    let samples: Vec<FamilySample> = specs
        .iter()
        .map(|spec| verify_sample(family, spec, DEFAULT_TOL))
        .collect::<Result<_>>()?;
    let failures = samples.iter().filter(|s| !s.passed()).count();
    Ok(FamilyReport {
        family,
        samples,
        failures,
    })
}

/// A random odd entry in `1..=bound`.
fn odd_entry(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    2 * rng.gen_range(0..=(bound - 1) / 2) + 1
}

/// A random even entry in `2..=bound`.
fn even_entry(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    2 * rng.gen_range(1..=bound / 2)
}

fn sample_pretzel(rng: &mut ChaCha8Rng, family: Family, bound: i64) -> Vec<i64> {
    let n = match family {
        Family::OddPretzel | Family::EvenPretzel2p1 => 2 * rng.gen_range(1..=3) + 1,
        Family::EvenPretzel2p => 2 * rng.gen_range(1..=3),
        Family::Rational => unreachable!("rational specs are sampled separately"),
    };
    if family == Family::OddPretzel {
        return (0..n).map(|_| odd_entry(rng, bound)).collect();
    }
    let even_at = rng.gen_range(0..n);
    (0..n)
        .map(|i| {
            if i == even_at {
                even_entry(rng, bound)
            } else {
                odd_entry(rng, bound)
            }
        })
        .collect()
}

/// An odd `p >= 3` and a coprime `q` in `1..p`.
fn sample_fraction(rng: &mut ChaCha8Rng, bound: i64) -> (i64, i64) {
    loop {
        let p = 2 * rng.gen_range(1..=(bound - 1) / 2) + 1;
        if p < 3 {
            continue;
        }
        let q = rng.gen_range(1..p);
        if p.gcd(&q) == 1 {
            return (p, q);
        }
    }
}

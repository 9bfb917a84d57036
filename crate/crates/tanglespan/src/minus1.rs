//! The t = -1 specialization: slope arithmetic, rational-tangle
//! classification, Fox colorings, and Pluecker coordinates on Gr(2,4).
//!
//! At t = -1 every crossing map has integer entries, and the span of a
//! rational tangle with fraction p/q is equivalent to the basic span of the
//! single map f^s = id + s*h at the slope s = -q/p.  The same two-plane in
//! Q^4 is spanned by the all-ones vector together with the boundary colors
//! of any nontrivial Fox coloring of the diagram, and its Pluecker
//! coordinates land on a rational curve in the Grassmannian whose parameter
//! recovers the fraction.
//!
//! Boundary colors are listed in the order (NW, NE, SW, SE); the stacked
//! basis of a span lists source rows before target rows, so its rows are
//! read in the order (SW, SE, NW, NE).

use crate::error::{Error, Result};
use crate::functor::{at_tangle, Mode};
use crate::tangle::{CrossingSign, Generator, TangleExpr};
use crate::{BigInt, BigRat, MatrixQ, SpanQ};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A point of the projective rational line: a reduced pair `[num : den]`
/// with canonical sign, `den = 0` encoding infinity.  Tangle slopes and
/// tangle fractions both live here.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Slope {
    num: BigInt,
    den: BigInt,
}

impl Slope {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Slope {
        Slope::reduced(num.into(), den.into())
    }

    fn reduced(num: BigInt, den: BigInt) -> Slope {
        assert!(!num.is_zero() || !den.is_zero(), "[0 : 0] is not a projective point");
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / &g, den / &g);
        if den.is_negative() || (den.is_zero() && num.is_negative()) {
            num = -num;
            den = -den;
        }
        Slope { num, den }
    }

    pub fn zero() -> Slope {
        Slope { num: BigInt::zero(), den: BigInt::one() }
    }

    pub fn infinity() -> Slope {
        Slope { num: BigInt::one(), den: BigInt::zero() }
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    /// The finite value as an exact rational.
    pub fn to_rational(&self) -> Option<BigRat> {
        if self.is_infinite() {
            None
        } else {
            Some(BigRat::new(self.num.clone(), self.den.clone()))
        }
    }

    /// Stacked rational tangles add their slopes: f^s then f^s' is
    /// f^(s + s').  Composition with an infinite slope has no meaning at
    /// this level and is rejected.
    pub fn compose(&self, other: &Slope) -> Result<Slope> {
        if self.is_infinite() || other.is_infinite() {
            return Err(Error::InfiniteSlope);
        }
        Ok(Slope::reduced(
            &self.num * &other.den + &other.num * &self.den,
            &self.den * &other.den,
        ))
    }

    /// A quarter turn sends the slope s to -1/s: `[p : q] -> [-q : p]`,
    /// exchanging 0 and infinity.
    pub fn rotate(&self) -> Slope {
        Slope::reduced(-self.den.clone(), self.num.clone())
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            write!(f, "inf")
        } else if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Projective pair `[num : den]` of rationals, cleared of denominators.
fn slope_from_rats(num: &BigRat, den: &BigRat) -> Slope {
    Slope::reduced(num.numer() * den.denom(), den.numer() * num.denom())
}

/// Outcome of classifying a rational tangle at t = -1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    /// Slope s of the basic span id + s*h.
    pub slope: Slope,
    /// Tangle fraction -1/s.
    pub fraction: Slope,
}

/// Evaluates the span functor at t = -1.  A vanishing denominator is
/// reported as a pole rather than skipped; none arises for tangle
/// expressions built by this crate.
pub fn span_at_minus1(e: &TangleExpr) -> Result<SpanQ> {
    let x = -BigRat::one();
    at_tangle(e, Mode::Fast)?.try_map(|f| f.eval_rat(&x))
}

/// The matrix f^s = id + s*h over Q; every rational tangle at t = -1 is
/// equivalent to the basic span of one of these maps.
pub fn slope_map(s: &BigRat) -> MatrixQ {
    MatrixQ::from_rows(vec![
        vec![BigRat::one() + s, -s.clone()],
        vec![s.clone(), BigRat::one() - s],
    ])
}

fn plucker_of_basis(m: &MatrixQ) -> [BigRat; 6] {
    let pair = |i: usize, j: usize| &m[(i, 0)] * &m[(j, 1)] - &m[(j, 0)] * &m[(i, 1)];
    [pair(0, 1), pair(0, 2), pair(0, 3), pair(1, 2), pair(1, 3), pair(2, 3)]
}

/// Classifies a span over Q, already evaluated at t = -1, as the plane of a
/// rational tangle.  The canonical form must be a two-plane in Q^4 through
/// the all-ones vector with equal extreme Pluecker coordinates; the
/// fraction is the ratio `[p12 : p13]` of the stacked basis and the slope
/// its negated reciprocal.
pub fn classify_span(span: &SpanQ) -> Result<Classification> {
    let canon = span.canonicalize();
    if canon.src_dim != 2 || canon.tgt_dim != 2 {
        return Err(Error::NotA2Tangle { src: canon.src_dim, tgt: canon.tgt_dim });
    }
    let basis = &canon.stacked_basis;
    if basis.cols() != 2 {
        return Err(Error::NotRationalShape(format!(
            "stacked legs span a space of rank {}, expected 2",
            basis.cols()
        )));
    }
    let ones = MatrixQ::new(4, 1, vec![BigRat::one(); 4]);
    if basis.hstack(&ones).rank() != 2 {
        return Err(Error::NotRationalShape(
            "the constant coloring is missing from the plane".into(),
        ));
    }
    let p = plucker_of_basis(basis);
    if p[0] != p[5] {
        return Err(Error::NotRationalShape(format!(
            "p12 = {} differs from p34 = {}",
            p[0], p[5]
        )));
    }
    if p[0].is_zero() && p[1].is_zero() {
        return Err(Error::InternalInconsistency("Pluecker point [0 : 0]".into()));
    }
    let fraction = slope_from_rats(&p[0], &p[1]);
    Ok(Classification { slope: fraction.rotate(), fraction })
}

/// Classifies a 2-tangle expression by substituting t = -1 into its span.
pub fn classify_rational(e: &TangleExpr) -> Result<Classification> {
    let sig = e.signature()?;
    if !sig.is_2tangle() {
        return Err(Error::NotA2Tangle { src: sig.src.len(), tgt: sig.tgt.len() });
    }
    classify_span(&span_at_minus1(e)?)
}

/// Integer boundary colors of a tangle diagram, as the matrix
/// `[[a, b], [c, d]] = [[NW, NE], [SW, SE]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringMatrix {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl ColoringMatrix {
    /// Colors in the order (NW, NE, SW, SE).
    pub fn boundary(&self) -> [BigInt; 4] {
        [self.a.clone(), self.b.clone(), self.c.clone(), self.d.clone()]
    }

    /// Boundary colors of genuine colorings satisfy a - b = c - d.
    pub fn diagonal_rule_holds(&self) -> bool {
        &self.a - &self.b == &self.c - &self.d
    }
}

impl fmt::Display for ColoringMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// The tangle fraction (b - a)/(b - d) of a nontrivial boundary coloring;
/// b = d gives the point at infinity.
pub fn fraction_from_coloring(m: &ColoringMatrix) -> Result<Slope> {
    let num = &m.b - &m.a;
    let den = &m.b - &m.d;
    if num.is_zero() && den.is_zero() {
        return Err(Error::TrivialColoring);
    }
    Ok(Slope::reduced(num, den))
}

/// A Fox coloring of a 2-tangle over Q.
#[derive(Debug, Clone, PartialEq)]
pub struct Coloring {
    /// Boundary colors in the order (NW, NE, SW, SE).
    pub boundary: [BigRat; 4],
    /// One color per arc of the diagram, in discovery order.
    pub arcs: Vec<BigRat>,
}

impl Coloring {
    /// The fraction (b - a)/(b - d) of the boundary colors.
    pub fn fraction(&self) -> Result<Slope> {
        let [a, b, _, d] = &self.boundary;
        let num = b - a;
        let den = b - d;
        if num.is_zero() && den.is_zero() {
            return Err(Error::TrivialColoring);
        }
        Ok(slope_from_rats(&num, &den))
    }
}

/// Arcs of a tangle diagram with the Fox relation at each crossing.  Ports
/// on the same arc share a union-find class; each crossing breaks its
/// under-strand and records over and under colors.
struct ArcSystem {
    parent: Vec<usize>,
    /// (over, under in, under out): under in + under out = 2 over.
    relations: Vec<[usize; 3]>,
}

impl ArcSystem {
    fn new() -> Self {
        ArcSystem { parent: Vec::new(), relations: Vec::new() }
    }

    fn fresh(&mut self) -> usize {
        self.parent.push(self.parent.len());
        self.parent.len() - 1
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    /// Port variables (source, target) of `e`.  The crossings whose matrix
    /// is an f+ shape carry the over-strand from SW to NE; the f- shapes
    /// carry it from SE to NW.
    fn ports(&mut self, e: &TangleExpr) -> (Vec<usize>, Vec<usize>) {
        match e {
            TangleExpr::Gen(Generator::Crossing { sign, class }) => {
                let over = self.fresh();
                let under_in = self.fresh();
                let under_out = self.fresh();
                self.relations.push([over, under_in, under_out]);
                let over_up_right = matches!(
                    (sign, class),
                    (CrossingSign::Plus, 0)
                        | (CrossingSign::Plus, 2)
                        | (CrossingSign::Minus, 1)
                        | (CrossingSign::Minus, 3)
                );
                if over_up_right {
                    (vec![over, under_in], vec![under_out, over])
                } else {
                    (vec![under_in, over], vec![over, under_out])
                }
            }
            TangleExpr::Gen(Generator::CupL | Generator::CupR) => {
                let arc = self.fresh();
                (vec![], vec![arc, arc])
            }
            TangleExpr::Gen(Generator::CapL | Generator::CapR) => {
                let arc = self.fresh();
                (vec![arc, arc], vec![])
            }
            TangleExpr::Id(_) => {
                let arc = self.fresh();
                (vec![arc], vec![arc])
            }
            TangleExpr::Tensor(items) => {
                let mut src = Vec::new();
                let mut tgt = Vec::new();
                for item in items {
                    let (s, t) = self.ports(item);
                    src.extend(s);
                    tgt.extend(t);
                }
                (src, tgt)
            }
            TangleExpr::Compose(items) => {
                let mut iter = items.iter();
                let (src, mut tgt) = self.ports(iter.next().expect("nonempty composition"));
                for item in iter {
                    let (s, t) = self.ports(item);
                    assert_eq!(tgt.len(), s.len(), "stacking checked by signature");
                    for (a, b) in tgt.iter().zip(&s) {
                        self.union(*a, *b);
                    }
                    tgt = t;
                }
                (src, tgt)
            }
            TangleExpr::Rotate(inner) => {
                let (s, t) = self.ports(inner);
                (vec![t[0], s[0]], vec![t[1], s[1]])
            }
        }
    }
}

/// Propagates Fox colors through a 2-tangle diagram.  The seeds land on the
/// first two distinct arcs met along the boundary in the order SW, SE, NW,
/// NE; for a tangle whose lower ends lie on different arcs these are the SW
/// and SE colors.  The coloring must be uniquely determined: a diagram with
/// a closed component, for example, keeps a free arc and is rejected.
pub fn coloring_propagate(e: &TangleExpr, seed0: &BigRat, seed1: &BigRat) -> Result<Coloring> {
    let sig = e.signature()?;
    if !sig.is_2tangle() {
        return Err(Error::NotA2Tangle { src: sig.src.len(), tgt: sig.tgt.len() });
    }
    let mut sys = ArcSystem::new();
    let (src, tgt) = sys.ports(e);

    // dense arc indices in first-appearance order
    let nvars = sys.parent.len();
    let mut index: Vec<Option<usize>> = vec![None; nvars];
    let mut arcs = 0usize;
    for v in 0..nvars {
        let root = sys.find(v);
        if index[root].is_none() {
            index[root] = Some(arcs);
            arcs += 1;
        }
    }
    let mut var_arc = vec![0usize; nvars];
    for v in 0..nvars {
        let root = sys.find(v);
        var_arc[v] = index[root].expect("every root is indexed");
    }

    let boundary = [src[0], src[1], tgt[0], tgt[1]];
    let mut seed_arcs: Vec<usize> = Vec::new();
    for port in boundary {
        let arc = var_arc[port];
        if !seed_arcs.contains(&arc) {
            seed_arcs.push(arc);
        }
    }
    seed_arcs.truncate(2);
    let seeds = [seed0, seed1];

    let cols = arcs + 1;
    let mut data: Vec<BigRat> = Vec::with_capacity((sys.relations.len() + seed_arcs.len()) * cols);
    for rel in &sys.relations {
        let mut row = vec![BigRat::zero(); cols];
        row[var_arc[rel[0]]] += BigRat::from_integer(2.into());
        row[var_arc[rel[1]]] -= BigRat::one();
        row[var_arc[rel[2]]] -= BigRat::one();
        data.extend(row);
    }
    for (k, arc) in seed_arcs.iter().enumerate() {
        let mut row = vec![BigRat::zero(); cols];
        row[*arc] = BigRat::one();
        row[arcs] = seeds[k].clone();
        data.extend(row);
    }
    let nrows = sys.relations.len() + seed_arcs.len();
    let mut system = MatrixQ::new(nrows, cols, data);
    let pivots = system.rref();
    if pivots.contains(&arcs) {
        return Err(Error::ColoringInconsistent(
            "no Fox coloring of this diagram takes the seed values".into(),
        ));
    }
    if pivots.len() < arcs {
        return Err(Error::ColoringUnderdetermined(format!(
            "{} of {} arcs stay free after seeding",
            arcs - pivots.len(),
            arcs
        )));
    }
    let mut colors = vec![BigRat::zero(); arcs];
    for (r, col) in pivots.iter().enumerate() {
        colors[*col] = system[(r, arcs)].clone();
    }
    Ok(Coloring {
        boundary: [
            colors[var_arc[tgt[0]]].clone(),
            colors[var_arc[tgt[1]]].clone(),
            colors[var_arc[src[0]]].clone(),
            colors[var_arc[src[1]]].clone(),
        ],
        arcs: colors,
    })
}

/// A coloring with integer arc colors of overall gcd one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralColoring {
    pub matrix: ColoringMatrix,
    pub arcs: Vec<BigInt>,
}

/// Rescales the rational coloring with seeds (0, 1) to a primitive integral
/// one.  The scale is positive, so the second seed arc keeps a positive
/// color; in particular the SE color is never negative.
pub fn integral_coloring(e: &TangleExpr) -> Result<IntegralColoring> {
    let col = coloring_propagate(e, &BigRat::zero(), &BigRat::one())?;
    let mut denoms = BigInt::one();
    for v in &col.arcs {
        denoms = denoms.lcm(v.denom());
    }
    let scale = BigRat::from_integer(denoms);
    let ints: Vec<BigInt> = col.arcs.iter().map(|v| (v * &scale).to_integer()).collect();
    let mut g = BigInt::zero();
    for v in &ints {
        g = g.gcd(v);
    }
    // the second seed is 1, so some arc color is nonzero and g > 0
    let scaled = |v: &BigRat| (v * &scale).to_integer() / &g;
    Ok(IntegralColoring {
        matrix: ColoringMatrix {
            a: scaled(&col.boundary[0]),
            b: scaled(&col.boundary[1]),
            c: scaled(&col.boundary[2]),
            d: scaled(&col.boundary[3]),
        },
        arcs: ints.iter().map(|v| v / &g).collect(),
    })
}

/// Pluecker coordinates of the plane spanned by a boundary coloring and the
/// all-ones vector: a gcd-reduced integer sextuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PluckerPoint {
    pub p12: BigInt,
    pub p13: BigInt,
    pub p14: BigInt,
    pub p23: BigInt,
    pub p24: BigInt,
    pub p34: BigInt,
}

impl PluckerPoint {
    pub fn coords(&self) -> [&BigInt; 6] {
        [&self.p12, &self.p13, &self.p14, &self.p23, &self.p24, &self.p34]
    }

    /// The Grassmannian quadric p12 p34 - p13 p24 + p14 p23 = 0.
    pub fn satisfies_quadric(&self) -> bool {
        (&self.p12 * &self.p34 - &self.p13 * &self.p24 + &self.p14 * &self.p23).is_zero()
    }
}

impl fmt::Display for PluckerPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {}, {}, {})",
            self.p12, self.p13, self.p14, self.p23, self.p24, self.p34
        )
    }
}

/// The point of Gr(2,4) cut out by boundary colors v = (NW, NE, SW, SE):
/// p_ij = v_j - v_i against the all-ones vector, reduced by the common gcd
/// with signs kept.  A constant vector spans no plane.
pub fn plucker_point(v: &[BigInt; 4]) -> Result<PluckerPoint> {
    let diff = |i: usize, j: usize| &v[j] - &v[i];
    let raw = [diff(0, 1), diff(0, 2), diff(0, 3), diff(1, 2), diff(1, 3), diff(2, 3)];
    let mut g = BigInt::zero();
    for x in &raw {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return Err(Error::DegeneratePlane);
    }
    let [p12, p13, p14, p23, p24, p34] = raw.map(|x| x / &g);
    Ok(PluckerPoint { p12, p13, p14, p23, p24, p34 })
}

/// Checks the three line equations p12 - p13 + p23 = 0, p12 - p14 + p24 = 0,
/// p13 - p14 + p34 = 0 and the closing relation p12 = p34 that cut out the
/// rational-tangle curve, together with the Grassmannian quadric.  The
/// curve parameter `[p12 : p13]` is returned whenever it is defined.
pub fn verify_rational_curve(pt: &PluckerPoint) -> (bool, Option<Slope>) {
    let on_curve = (&pt.p12 - &pt.p13 + &pt.p23).is_zero()
        && (&pt.p12 - &pt.p14 + &pt.p24).is_zero()
        && (&pt.p13 - &pt.p14 + &pt.p34).is_zero()
        && pt.p12 == pt.p34
        && pt.satisfies_quadric();
    let parameter = if pt.p12.is_zero() && pt.p13.is_zero() {
        None
    } else {
        Some(Slope::reduced(pt.p12.clone(), pt.p13.clone()))
    };
    (on_curve, parameter)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functor::crossing_matrix;
    use crate::span::Span;
    use crate::tangle::{rational_canonical_expr, Dir, RationalSpec};

    fn expr(p: i64, q: i64) -> TangleExpr {
        rational_canonical_expr(RationalSpec::new(p, q).unwrap())
    }

    fn rat(n: i64, d: i64) -> BigRat {
        BigRat::new(n.into(), d.into())
    }

    fn big(n: i64) -> BigInt {
        n.into()
    }

    #[test]
    fn slope_arithmetic() {
        let s = |n: i64, d: i64| Slope::new(n, d);
        assert_eq!(s(1, 1).compose(&s(1, 1)).unwrap(), s(2, 1));
        assert_eq!(s(5, 7).compose(&s(-5, 7)).unwrap(), Slope::zero());
        assert_eq!(s(1, 2).compose(&s(1, 3)).unwrap(), s(5, 6));
        assert_eq!(s(1, 2).compose(&Slope::infinity()), Err(Error::InfiniteSlope));
        // rotation is the negated reciprocal, exchanging 0 and infinity
        assert_eq!(s(-1, 5).rotate(), s(5, 1));
        assert_eq!(Slope::zero().rotate(), Slope::infinity());
        assert_eq!(Slope::infinity().rotate(), Slope::zero());
        for sl in [s(3, 4), s(-2, 9), Slope::zero(), Slope::infinity()] {
            assert_eq!(sl.rotate().rotate(), sl);
            assert_eq!(sl.rotate().rotate().rotate().rotate(), sl);
        }
        assert_eq!(s(2, -4), s(-1, 2));
        assert_eq!(s(-7, 16).to_string(), "-7/16");
        assert_eq!(s(6, 2).to_string(), "3");
        assert_eq!(Slope::infinity().to_string(), "inf");
    }

    #[test]
    fn classify_single_crossings_and_strands() {
        let xplus = TangleExpr::Gen(Generator::crossing(CrossingSign::Plus, 0));
        let xminus = TangleExpr::Gen(Generator::crossing(CrossingSign::Minus, 0));
        assert_eq!(classify_rational(&xminus).unwrap().fraction, Slope::new(1, 1));
        assert_eq!(classify_rational(&xplus).unwrap().fraction, Slope::new(-1, 1));
        let vertical = classify_rational(&expr(1, 0)).unwrap();
        assert_eq!(vertical.fraction, Slope::infinity());
        assert_eq!(vertical.slope, Slope::zero());
        let horizontal = classify_rational(&expr(0, 1)).unwrap();
        assert_eq!(horizontal.fraction, Slope::zero());
        assert_eq!(horizontal.slope, Slope::infinity());
        // a closed loop beside two strands does not disturb the plane
        let circle = TangleExpr::compose(vec![
            TangleExpr::Gen(Generator::CupL),
            TangleExpr::Gen(Generator::CapR),
        ]);
        let beside = TangleExpr::tensor(vec![
            circle,
            TangleExpr::id(Dir::Up),
            TangleExpr::id(Dir::Up),
        ]);
        assert_eq!(classify_rational(&beside).unwrap().fraction, Slope::infinity());
    }

    #[test]
    fn classify_recovers_the_fraction() {
        let c = classify_rational(&expr(3, 2)).unwrap();
        assert_eq!(c.fraction, Slope::new(3, 2));
        assert_eq!(c.slope, Slope::new(-2, 3));
        let samples =
            [(2, 1), (3, 1), (-3, 2), (7, 16), (16, 7), (28, 17), (-28, 17), (11, 3), (1, 5)];
        for (p, q) in samples {
            let got = classify_rational(&expr(p, q)).unwrap();
            assert_eq!(got.fraction, Slope::new(p, q), "{p}/{q}");
            assert_eq!(got.slope, got.fraction.rotate(), "{p}/{q}");
            // theorem form: the span at t = -1 is basic for id - (q/p) h
            let span = span_at_minus1(&expr(p, q)).unwrap();
            let basic = Span::basic(slope_map(&rat(-q, p)));
            assert_eq!(span.canonicalize(), basic.canonicalize(), "{p}/{q}");
        }
    }

    #[test]
    fn classify_commutes_with_rotation() {
        for (p, q) in [(3, 2), (7, 16), (-5, 3), (2, 1), (0, 1), (1, 0)] {
            let e = expr(p, q);
            let before = classify_rational(&e).unwrap();
            let after = classify_rational(&TangleExpr::rotate(e)).unwrap();
            assert_eq!(after.slope, before.slope.rotate(), "{p}/{q}");
            assert_eq!(after.fraction, before.fraction.rotate(), "{p}/{q}");
        }
    }

    #[test]
    fn classify_rejects_planes_off_the_curve() {
        // plane missing the constant coloring
        let diag = SpanQ::basic(MatrixQ::from_rows(vec![
            vec![rat(2, 1), BigRat::zero()],
            vec![BigRat::zero(), rat(3, 1)],
        ]));
        assert!(matches!(classify_span(&diag), Err(Error::NotRationalShape(_))));
        // fixes the constant coloring but p12 != p34
        let shear = SpanQ::basic(MatrixQ::from_rows(vec![
            vec![BigRat::one(), BigRat::zero()],
            vec![-BigRat::one(), rat(2, 1)],
        ]));
        assert!(matches!(classify_span(&shear), Err(Error::NotRationalShape(_))));
        assert!(matches!(
            classify_rational(&TangleExpr::id(Dir::Up)),
            Err(Error::NotA2Tangle { .. })
        ));
    }

    #[test]
    fn coloring_transport_matches_crossing_matrices() {
        let minus_one = -BigRat::one();
        for sign in [CrossingSign::Plus, CrossingSign::Minus] {
            for class in 0..4u8 {
                let e = TangleExpr::Gen(Generator::crossing(sign, class));
                let col = coloring_propagate(&e, &rat(3, 1), &rat(5, 1)).unwrap();
                let m = crossing_matrix(sign, class)
                    .try_map(|f| f.eval_rat(&minus_one))
                    .unwrap();
                let src = MatrixQ::new(2, 1, vec![col.boundary[2].clone(), col.boundary[3].clone()]);
                let tgt = m.mul(&src);
                assert_eq!(tgt[(0, 0)], col.boundary[0], "{sign:?}@{class} NW");
                assert_eq!(tgt[(1, 0)], col.boundary[1], "{sign:?}@{class} NE");
            }
        }
    }

    #[test]
    fn integral_coloring_of_7_16() {
        let e = expr(7, 16);
        let col = coloring_propagate(&e, &BigRat::zero(), &rat(7, 1)).unwrap();
        assert_eq!(col.boundary, [16, 23, 0, 7].map(|n| rat(n, 1)));
        assert_eq!(col.fraction().unwrap(), Slope::new(7, 16));

        let integral = integral_coloring(&e).unwrap();
        let m = &integral.matrix;
        assert!(m.diagonal_rule_holds());
        assert!(m.c.is_zero());
        assert!(m.d.is_positive());
        assert_eq!(fraction_from_coloring(m).unwrap(), Slope::new(7, 16));
        let mut g = BigInt::zero();
        for v in &integral.arcs {
            g = g.gcd(v);
        }
        assert!(g.is_one(), "integral coloring is primitive");

        let pt = plucker_point(&m.boundary()).unwrap();
        let want = [7, -16, -9, -23, -16, 7].map(big);
        assert_eq!(pt.coords().map(Clone::clone), want);
        assert!(pt.satisfies_quadric());
        let (on_curve, parameter) = verify_rational_curve(&pt);
        assert!(on_curve);
        // the curve parameter and the coloring fraction differ by sign
        assert_eq!(parameter.unwrap(), Slope::new(-7, 16));
    }

    #[test]
    fn coloring_affine_invariance() {
        let e = expr(3, 2);
        let base = coloring_propagate(&e, &rat(2, 1), &rat(5, 1)).unwrap();
        let moved = coloring_propagate(&e, &rat(2 * 3 - 4, 1), &rat(5 * 3 - 4, 1)).unwrap();
        for (x, y) in base.arcs.iter().zip(&moved.arcs) {
            assert_eq!(*y, x * rat(3, 1) + rat(-4, 1));
        }
        assert_eq!(base.fraction().unwrap(), Slope::new(3, 2));
        assert_eq!(moved.fraction().unwrap(), Slope::new(3, 2));
    }

    #[test]
    fn strand_tangle_colorings() {
        let v = coloring_propagate(&expr(1, 0), &rat(1, 1), &rat(4, 1)).unwrap();
        assert_eq!(v.boundary, [rat(1, 1), rat(4, 1), rat(1, 1), rat(4, 1)]);
        assert_eq!(v.fraction().unwrap(), Slope::infinity());
        let h = coloring_propagate(&expr(0, 1), &BigRat::zero(), &rat(9, 1)).unwrap();
        assert_eq!(h.boundary, [rat(9, 1), rat(9, 1), rat(0, 1), rat(0, 1)]);
        assert_eq!(h.fraction().unwrap(), Slope::zero());
        let flat = ColoringMatrix { a: big(5), b: big(5), c: big(5), d: big(5) };
        assert_eq!(fraction_from_coloring(&flat), Err(Error::TrivialColoring));
    }

    #[test]
    fn free_circle_is_underdetermined() {
        let circle = TangleExpr::compose(vec![
            TangleExpr::Gen(Generator::CupL),
            TangleExpr::Gen(Generator::CapR),
        ]);
        let e = TangleExpr::tensor(vec![
            circle,
            TangleExpr::id(Dir::Up),
            TangleExpr::id(Dir::Up),
        ]);
        assert!(matches!(
            coloring_propagate(&e, &BigRat::zero(), &BigRat::one()),
            Err(Error::ColoringUnderdetermined(_))
        ));
    }

    #[test]
    fn coloring_plane_equals_span_plane() {
        for (p, q) in [(3, 2), (7, 16), (5, 3), (9, 2), (-7, 4), (13, 5)] {
            let e = expr(p, q);
            let m = integral_coloring(&e).unwrap().matrix;
            let int = |v: &BigInt| BigRat::from_integer(v.clone());
            // stacked row order: SW, SE, NW, NE
            let plane = MatrixQ::from_rows(vec![
                vec![BigRat::one(), int(&m.c)],
                vec![BigRat::one(), int(&m.d)],
                vec![BigRat::one(), int(&m.a)],
                vec![BigRat::one(), int(&m.b)],
            ]);
            assert_eq!(
                plane.column_space_basis(),
                span_at_minus1(&e).unwrap().canonicalize().stacked_basis,
                "{p}/{q}"
            );
        }
    }

    #[test]
    fn plucker_points_and_curve_membership() {
        let through_e1 = plucker_point(&[2, 1, 1, 1].map(BigInt::from)).unwrap();
        assert_eq!(
            through_e1.coords().map(Clone::clone),
            [-1, -1, -1, 0, 0, 0].map(big)
        );
        assert!(through_e1.satisfies_quadric());
        // any plane through the all-ones vector solves the line equations,
        // but this one misses the closing relation p12 = p34
        assert!(!verify_rational_curve(&through_e1).0);
        assert!(matches!(
            plucker_point(&[3, 3, 3, 3].map(BigInt::from)),
            Err(Error::DegeneratePlane)
        ));
        // the image of [1 : 2] under the curve embedding
        let on = PluckerPoint {
            p12: big(1),
            p13: big(2),
            p14: big(3),
            p23: big(1),
            p24: big(2),
            p34: big(1),
        };
        let (ok, parameter) = verify_rational_curve(&on);
        assert!(ok);
        assert_eq!(parameter.unwrap(), Slope::new(1, 2));
        let off = PluckerPoint {
            p12: big(1),
            p13: big(1),
            p14: big(1),
            p23: big(1),
            p24: big(1),
            p34: big(1),
        };
        assert!(!verify_rational_curve(&off).0);
        // gcd reduction keeps signs
        let vertical = plucker_point(&[0, 14, 0, 14].map(BigInt::from)).unwrap();
        assert_eq!(
            vertical.coords().map(Clone::clone),
            [1, 0, 1, -1, 0, 1].map(big)
        );
        let (ok, parameter) = verify_rational_curve(&vertical);
        assert!(ok);
        assert_eq!(parameter.unwrap(), Slope::infinity());
    }
}

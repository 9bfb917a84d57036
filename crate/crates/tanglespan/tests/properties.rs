//! Property suite: algebraic laws and roundtrips under randomized inputs.
//! Each block states an invariant the modules rely on internally; shrunk
//! counterexamples from any regression land here as seed files.

use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use tanglespan::laurent::LaurentPoly;
use tanglespan::matrix::Matrix;
use tanglespan::ratfunc::RatFunc;
use tanglespan::span::Span;
use tanglespan::tangle::{
    cf_eval, even_cf, parse_tangle, positive_odd_cf, CrossingSign, Dir, Generator, TangleExpr,
};
use tanglespan::{BigInt, BigRat, MatrixQ, SpanQ};

fn small_rat() -> impl Strategy<Value = BigRat> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| BigRat::new(BigInt::from(n), BigInt::from(d)))
}

fn nonzero_rat() -> impl Strategy<Value = BigRat> {
    small_rat().prop_filter("nonzero", |x| !x.is_zero())
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    (-3i64..=3, prop::collection::vec(small_rat(), 0..6))
        .prop_map(|(k, coeffs)| LaurentPoly::from_coeffs(k, coeffs))
}

fn nonzero_laurent() -> impl Strategy<Value = LaurentPoly> {
    laurent().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (laurent(), nonzero_laurent()).prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = MatrixQ> {
    prop::collection::vec(small_rat(), rows * cols)
        .prop_map(move |data| Matrix::new(rows, cols, data))
}

fn any_matrix() -> impl Strategy<Value = MatrixQ> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| matrix(r, c))
}

proptest! {
    #[test]
    fn laurent_addition_forms_an_abelian_group(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &LaurentPoly::zero(), a.clone());
        prop_assert_eq!(&a + &-&a, LaurentPoly::zero());
    }

    #[test]
    fn laurent_multiplication_is_a_commutative_ring(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn degree_shifts_are_multiplication_by_powers_of_t(a in laurent(), j in -4i64..=4, k in -4i64..=4) {
        prop_assert_eq!(a.shifted(j).shifted(k), a.shifted(j + k));
        let t_k = LaurentPoly::monomial(BigRat::one(), k);
        prop_assert_eq!(a.shifted(k), &a * &t_k);
    }

    #[test]
    fn inversion_substitution_is_a_ring_involution(a in laurent(), b in laurent()) {
        prop_assert_eq!(a.subst_t_inverse().subst_t_inverse(), a.clone());
        prop_assert_eq!((&a + &b).subst_t_inverse(), &a.subst_t_inverse() + &b.subst_t_inverse());
        prop_assert_eq!((&a * &b).subst_t_inverse(), &a.subst_t_inverse() * &b.subst_t_inverse());
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(a in laurent(), b in laurent(), x in nonzero_rat()) {
        let sum = (&a + &b).eval_rat(&x).unwrap();
        prop_assert_eq!(sum, a.eval_rat(&x).unwrap() + b.eval_rat(&x).unwrap());
        let product = (&a * &b).eval_rat(&x).unwrap();
        prop_assert_eq!(product, a.eval_rat(&x).unwrap() * b.eval_rat(&x).unwrap());
    }

    #[test]
    fn alexander_normalization_fixes_the_unit(a in nonzero_laurent(), k in -3i64..=3) {
        let n = a.normalize_alexander();
        prop_assert_eq!(n.min_degree(), 0);
        prop_assert!(n.leading_coefficient().is_positive());
        prop_assert_eq!(n.normalize_alexander(), n.clone());
        prop_assert!(a.eq_up_to_unit(&n));
        let unit_multiple = a.shifted(k).scale(&-BigRat::one());
        prop_assert!(unit_multiple.eq_up_to_unit(&a));
    }

    #[test]
    fn rational_functions_form_a_field(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, RatFunc::zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), RatFunc::one());
        }
        prop_assert_eq!(a.subst_t_inverse().subst_t_inverse(), a.clone());
    }

    #[test]
    fn rational_function_equality_ignores_common_factors(
        n in laurent(),
        d in nonzero_laurent(),
        m in nonzero_laurent(),
    ) {
        let reduced = RatFunc::new(n.clone(), d.clone()).unwrap();
        let inflated = RatFunc::new(&n * &m, &d * &m).unwrap();
        prop_assert_eq!(reduced, inflated);
    }

    #[test]
    fn even_continued_fractions_roundtrip(half_p in 1i64..=500, q0 in 1i64..=999) {
        let p = 2 * half_p + 1;
        let q = q0 % p;
        prop_assume!(q > 0 && q % 2 == 0 && num_integer::gcd(p, q) == 1);
        let cf = even_cf(p, q).unwrap();
        prop_assert!(cf.iter().all(|&a| a != 0 && a % 2 == 0));
        let value = cf_eval(&cf);
        prop_assert_eq!((value.p(), value.q()), (p, q));
    }

    #[test]
    fn positive_continued_fractions_have_odd_length(p in 0i64..=400, q in 1i64..=400) {
        prop_assume!(num_integer::gcd(p, q) == 1);
        let cf = positive_odd_cf(p, q).unwrap();
        prop_assert_eq!(cf.len() % 2, 1);
        prop_assert!(cf[0] >= 0);
        prop_assert!(cf.iter().skip(1).all(|&a| a >= 1));
        let value = cf_eval(&cf);
        prop_assert_eq!((value.p(), value.q()), (p, q));
    }

    #[test]
    fn kernel_columns_are_killed_and_count_the_nullity(m in any_matrix()) {
        let kernel = m.kernel_basis();
        let image = m.mul(&kernel);
        for i in 0..image.rows() {
            for j in 0..image.cols() {
                prop_assert!(image[(i, j)].is_zero());
            }
        }
        prop_assert_eq!(m.rank() + kernel.cols(), m.cols());
        prop_assert_eq!(m.transpose().rank(), m.rank());
    }

    #[test]
    fn row_reduction_is_a_projection(m in any_matrix()) {
        let mut once = m.clone();
        let pivots = once.rref();
        let mut twice = once.clone();
        prop_assert_eq!(twice.rref(), pivots);
        prop_assert_eq!(twice, once);
    }

    #[test]
    fn column_space_basis_is_canonical(m in any_matrix()) {
        let basis = m.column_space_basis();
        prop_assert_eq!(basis.cols(), m.rank());
        prop_assert_eq!(basis.hstack(&m).rank(), m.rank());
        prop_assert_eq!(m.hstack(&m).column_space_basis(), basis.clone());
        prop_assert_eq!(basis.column_space_basis(), basis);
    }

    #[test]
    fn determinants_are_multiplicative(
        n in 1usize..=3,
        entries in prop::collection::vec(small_rat(), 18),
    ) {
        let a = Matrix::new(n, n, entries[..n * n].to_vec());
        let b = Matrix::new(n, n, entries[9..9 + n * n].to_vec());
        prop_assert_eq!(a.mul(&b).det(), a.det() * b.det());
        if !a.det().is_zero() {
            prop_assert!(a.mul(&a.inverse().unwrap()).is_identity());
        }
    }

    #[test]
    fn span_equivalence_ignores_the_apex_presentation(
        dims in (0usize..=3, 0usize..=3, 1usize..=3),
        entries in prop::collection::vec(small_rat(), 27),
        basis_change in prop::collection::vec(small_rat(), 9),
    ) {
        let (src, tgt, apex) = dims;
        let left = Matrix::new(src, apex, entries[..src * apex].to_vec());
        let right = Matrix::new(tgt, apex, entries[9..9 + tgt * apex].to_vec());
        let span = SpanQ::new(left.clone(), right.clone());

        let u = Matrix::new(apex, apex, basis_change[..apex * apex].to_vec());
        prop_assume!(!u.det().is_zero());
        let changed = SpanQ::new(left.mul(&u), right.mul(&u));
        prop_assert!(span.equivalent(&changed));

        let padded = SpanQ::new(
            left.hstack(&Matrix::zeros(src, 1)),
            right.hstack(&Matrix::zeros(tgt, 1)),
        );
        prop_assert!(span.equivalent(&padded));
    }

    #[test]
    fn basic_spans_compose_like_linear_maps(
        dims in (1usize..=3, 1usize..=3, 1usize..=3),
        entries in prop::collection::vec(small_rat(), 18),
    ) {
        let (a, b, c) = dims;
        let f = Matrix::new(b, a, entries[..b * a].to_vec());
        let g = Matrix::new(c, b, entries[9..9 + c * b].to_vec());
        let composite = Span::basic(f.clone()).then(&Span::basic(g.clone()));
        prop_assert!(composite.equivalent(&Span::basic(g.mul(&f))));
        prop_assert_eq!(composite.to_linear_map(), Some(g.mul(&f)));
    }

    #[test]
    fn printing_and_parsing_are_inverse(e in expr()) {
        let text = e.to_string();
        let parsed = parse_tangle(&text).unwrap();
        prop_assert_eq!(parsed, e);
    }

    #[test]
    fn orientation_reversal_is_an_involution_that_flips_signatures(e in expr()) {
        prop_assert_eq!(e.reversed().reversed(), e.clone());
        let sig = e.signature().unwrap();
        let rev = e.reversed().signature().unwrap();
        let flip = |dirs: &[Dir]| dirs.iter().map(|d| d.reversed()).collect::<Vec<_>>();
        prop_assert_eq!(rev.src, flip(&sig.src));
        prop_assert_eq!(rev.tgt, flip(&sig.tgt));
    }
}

fn leaf() -> impl Strategy<Value = TangleExpr> {
    prop_oneof![
        (prop::bool::ANY, 0u8..4).prop_map(|(plus, class)| {
            let sign = if plus { CrossingSign::Plus } else { CrossingSign::Minus };
            TangleExpr::Gen(Generator::crossing(sign, class))
        }),
        Just(TangleExpr::Gen(Generator::CupL)),
        Just(TangleExpr::Gen(Generator::CupR)),
        Just(TangleExpr::Gen(Generator::CapL)),
        Just(TangleExpr::Gen(Generator::CapR)),
        Just(TangleExpr::Id(Dir::Up)),
        Just(TangleExpr::Id(Dir::Down)),
    ]
}

/// Well-typed expressions only: tensors are unrestricted, stacking is done
/// with an identity layer on the current target, and rotation applies only
/// to 2-tangles.
fn expr() -> impl Strategy<Value = TangleExpr> {
    leaf().prop_recursive(3, 24, 4, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 2..4).prop_map(TangleExpr::tensor),
            inner.clone().prop_map(|e| {
                let tgt = e.signature().unwrap().tgt;
                if tgt.is_empty() {
                    return e;
                }
                let layer = TangleExpr::tensor(tgt.into_iter().map(TangleExpr::Id).collect());
                TangleExpr::compose(vec![e, layer])
            }),
            inner.prop_map(|e| {
                if e.signature().unwrap().is_2tangle() {
                    TangleExpr::rotate(e)
                } else {
                    e
                }
            }),
        ]
    })
}

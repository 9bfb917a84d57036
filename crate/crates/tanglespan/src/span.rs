//! Spans of linear maps and their category structure.
//!
//! A span from a source space of dimension `m` to a target space of
//! dimension `n` is a pair of linear maps out of a common apex,
//! `src <- apex -> tgt`, stored as an `m x a` left leg and an `n x a` right
//! leg in the column-vector convention.  Composition is pullback, the
//! monoidal product is direct sum, and equivalence is change of apex basis
//! together with enlargement by null directions.  Two spans are equivalent
//! exactly when the stacked matrices `[left; right]` have the same column
//! space, which gives a finite canonical form.

use crate::matrix::{Field, Matrix};

#[derive(Debug, Clone, PartialEq)]
pub struct Span<F> {
    left: Matrix<F>,
    right: Matrix<F>,
}

/// Canonical representative of a span equivalence class: boundary dimensions
/// plus the reduced column basis of the stacked legs.
#[derive(Debug, Clone, PartialEq)]
pub struct CanonicalSpan<F> {
    pub src_dim: usize,
    pub tgt_dim: usize,
    pub stacked_basis: Matrix<F>,
}

impl<F: Field> Span<F> {
    pub fn new(left: Matrix<F>, right: Matrix<F>) -> Self {
        assert_eq!(left.cols(), right.cols(), "span legs must share an apex");
        Span { left, right }
    }

    /// The span of a linear map `f`, with identity left leg.
    pub fn basic(f: Matrix<F>) -> Self {
        let apex = f.cols();
        Span { left: Matrix::identity(apex), right: f }
    }

    pub fn identity(n: usize) -> Self {
        Self::basic(Matrix::identity(n))
    }

    pub fn src_dim(&self) -> usize {
        self.left.rows()
    }

    pub fn tgt_dim(&self) -> usize {
        self.right.rows()
    }

    pub fn apex_dim(&self) -> usize {
        self.left.cols()
    }

    pub fn left(&self) -> &Matrix<F> {
        &self.left
    }

    pub fn right(&self) -> &Matrix<F> {
        &self.right
    }

    pub fn try_map<G: Field, E>(&self, f: impl Fn(&F) -> Result<G, E>) -> Result<Span<G>, E> {
        Ok(Span { left: self.left.try_map(&f)?, right: self.right.try_map(&f)? })
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Span<G> {
        Span { left: self.left.map(&f), right: self.right.map(&f) }
    }

    /// Presents the span as the basic span of a linear map when the left leg
    /// is invertible.
    pub fn to_linear_map(&self) -> Option<Matrix<F>> {
        if self.src_dim() != self.apex_dim() {
            return None;
        }
        self.left.inverse().map(|inv| self.right.mul(&inv))
    }

    /// Diagrammatic composition: `self` followed by `after`, computed as the
    /// pullback of the right leg of `self` against the left leg of `after`.
    pub fn then(&self, after: &Self) -> Self {
        assert_eq!(
            self.tgt_dim(),
            after.src_dim(),
            "span composition boundary mismatch"
        );
        // basic second factor: the pullback is the graph of self.right
        if after.left.is_identity() {
            return Span {
                left: self.left.clone(),
                right: after.right.mul(&self.right),
            };
        }
        self.then_pullback(after)
    }

    pub(crate) fn then_pullback(&self, after: &Self) -> Self {
        let a1 = self.apex_dim();
        let glue = self.right.hstack(&after.left.neg());
        let kernel = glue.kernel_basis();
        let top = kernel.row_slice(0, a1);
        let bottom = kernel.row_slice(a1, kernel.rows());
        Span {
            left: self.left.mul(&top),
            right: after.right.mul(&bottom),
        }
    }

    /// Monoidal product: direct sum on boundaries and apexes.
    pub fn tensor(&self, other: &Self) -> Self {
        Span {
            left: Matrix::block_diag(&[&self.left, &other.left]),
            right: Matrix::block_diag(&[&self.right, &other.right]),
        }
    }

    /// Quarter-turn rotation of a span between two-dimensional boundaries:
    /// the first target coordinate and first source coordinate become the
    /// new source, the remaining two the new target.
    pub fn rotate2(&self) -> Self {
        assert_eq!((self.src_dim(), self.tgt_dim()), (2, 2), "rotation needs 2 -> 2 span");
        let row = |m: &Matrix<F>, i: usize| m.row_slice(i, i + 1);
        Span {
            left: row(&self.right, 0).vstack(&row(&self.left, 0)),
            right: row(&self.right, 1).vstack(&row(&self.left, 1)),
        }
    }

    pub fn canonicalize(&self) -> CanonicalSpan<F> {
        let stacked = self.left.vstack(&self.right);
        CanonicalSpan {
            src_dim: self.src_dim(),
            tgt_dim: self.tgt_dim(),
            stacked_basis: stacked.column_space_basis(),
        }
    }

    pub fn equivalent(&self, other: &Self) -> bool {
        self.canonicalize() == other.canonicalize()
    }
}

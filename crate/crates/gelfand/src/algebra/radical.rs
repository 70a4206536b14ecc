//! The Jacobson radical via the trace form, with validation and a small
//! brute-force fallback.
//!
//! For a finite-dimensional commutative algebra the radical equals the
//! nilradical. Over characteristic zero (and generically in odd
//! characteristic) it is exactly the kernel of the trace form
//! `T(x, y) = tr(L_{xy})`. Small characteristic can inflate that kernel
//! (block multiplicities divisible by p), so the kernel is never trusted
//! blindly: every kernel basis vector must be nilpotent, and the quotient
//! by the kernel must have a nondegenerate trace form. When validation
//! fails over F_p and the algebra is small enough to sweep (`p^dim <=
//! 10^6`), the radical is recovered by enumerating all elements and
//! collecting the nilpotents; otherwise the computation is refused with an
//! explanation rather than silently wrong.

use crate::error::{Error, Result};
use crate::field::FieldDescriptor;
use crate::linalg::{row_space_basis, Matrix};

use super::{AlgElement, Algebra, Ideal};

/// Largest exhaustive sweep permitted by the brute-force fallback.
pub const BRUTE_FORCE_BOUND: u64 = 1_000_000;

impl Algebra {
    /// The Gram matrix of the trace form `T(b_i, b_j) = tr(L_{b_i b_j})`.
    pub fn trace_form(&self) -> Matrix {
        let n = self.dim();
        let mut gram = Matrix::zeros(self.field(), n, n);
        for i in 0..n {
            for j in 0..=i {
                let prod = self.table_row(i, j).to_vec();
                let t = self.regular_matrix(&prod).trace();
                gram.set(i, j, t.clone());
                gram.set(j, i, t);
            }
        }
        gram
    }

    /// A reduced basis of the Jacobson radical (empty when semisimple).
    ///
    /// Strategy: kernel of the trace form, validated by (a) nilpotency of
    /// every kernel basis vector and (b) nondegeneracy of the quotient's
    /// trace form. Falls back to an exhaustive nilpotent sweep over F_p
    /// when validation fails and `p^dim` is small; otherwise errs.
    pub fn jacobson_radical(&self) -> Result<Vec<AlgElement>> {
        let kernel = self.trace_form().kernel_basis()?;
        match self.validate_radical_candidate(&kernel) {
            Ok(true) => return Ok(kernel),
            Ok(false) => {}
            Err(e) => {
                // Over Q_p a validation failure can only be a precision
                // artifact (characteristic zero makes the trace-form
                // characterization a theorem); report it as such.
                if matches!(self.field(), FieldDescriptor::Padic { .. }) {
                    return Err(Error::precision(format!(
                        "trace-form radical validation inconclusive: {e}"
                    )));
                }
                return Err(e);
            }
        }
        self.brute_force_radical()
    }

    /// True when the algebra has zero radical.
    pub fn is_semisimple(&self) -> Result<bool> {
        Ok(self.jacobson_radical()?.is_empty())
    }

    /// Checks that `kernel` really is the radical: every vector nilpotent
    /// (so the span sits inside the nilradical, hence equals the kernel by
    /// the containment radical <= kernel), and the quotient trace form is
    /// nondegenerate.
    fn validate_radical_candidate(&self, kernel: &[AlgElement]) -> Result<bool> {
        let n = self.dim() as u32;
        for v in kernel {
            let power = self.pow_element(v, n);
            if !self.is_zero_element(&power) {
                return Ok(false);
            }
        }
        if kernel.is_empty() {
            // Nondegenerate trace form on A itself: nothing more to check;
            // the kernel computation already certified rank n.
            return Ok(true);
        }
        let ideal = Ideal { generators: kernel.to_vec(), basis: kernel.to_vec() };
        // The kernel of the trace form is an ideal whenever it equals the
        // radical; quotient construction re-checks the ring axioms.
        let saturated = self.ideal(kernel)?;
        if saturated.basis.len() != kernel.len() {
            // Not even an ideal: certainly not the radical.
            return Ok(false);
        }
        let (quot, _) = self.quotient(&ideal)?;
        let det = quot.trace_form().det()?;
        if det.is_zeroish() {
            return Ok(if det.is_zero()? { false } else { true });
        }
        Ok(true)
    }

    /// Exhaustive fallback: over F_p with `p^dim` below the sweep bound,
    /// nilpotents form the radical and can be enumerated directly.
    fn brute_force_radical(&self) -> Result<Vec<AlgElement>> {
        let p = match self.field() {
            FieldDescriptor::Prime { p } => *p,
            _ => {
                return Err(Error::UnsupportedAlgebra(
                    "trace-form radical validation failed outside F_p; \
                     no exhaustive fallback is available"
                        .into(),
                ))
            }
        };
        let n = self.dim();
        let count = (p as f64).powi(n as i32);
        if count > BRUTE_FORCE_BOUND as f64 {
            return Err(Error::UnsupportedAlgebra(format!(
                "trace form degenerates in characteristic {p} <= dimension {n}, \
                 and the exhaustive sweep p^dim = {p}^{n} exceeds {BRUTE_FORCE_BOUND}"
            )));
        }
        let mut nilpotents: Vec<AlgElement> = Vec::new();
        let mut digits = vec![0u64; n];
        loop {
            let x: AlgElement =
                digits.iter().map(|&d| self.field().from_integer(d as i64)).collect();
            if !self.is_zero_element(&x) {
                let power = self.pow_element(&x, n as u32);
                if self.is_zero_element(&power) {
                    nilpotents.push(x);
                }
            }
            // Odometer over base-p digit vectors.
            let mut pos = 0;
            loop {
                if pos == n {
                    return row_space_basis(self.field(), &nilpotents);
                }
                digits[pos] += 1;
                if digits[pos] < p {
                    break;
                }
                digits[pos] = 0;
                pos += 1;
            }
        }
    }

}

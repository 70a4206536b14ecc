//! Finite-dimensional commutative unital algebras presented by structure
//! constants.
//!
//! An algebra is a basis `b_0, ..., b_{n-1}` over a field together with the
//! table `b_i * b_j = sum_k c_{ij}^k b_k` and the coordinates of the unit.
//! Elements are coordinate vectors in that basis. Construction validates
//! commutativity, associativity, and the unit law exactly; everything
//! downstream may then assume a commutative unital ring.
//!
//! The spectrum of an element `a` is the set of field roots of the
//! characteristic polynomial of multiplication-by-`a`; it is computed
//! exactly and may legitimately be empty. Entourage membership
//! (`sigma(b - a)` inside a basic neighborhood) and the spectral radius are
//! derived from it.

use crate::error::{Error, Result};
use crate::field::roots::distinct_roots;
use crate::field::{FieldDescriptor, FieldElement, Magnitude};
use crate::linalg::{complement_indices, in_span, row_space_basis, Matrix};
use crate::poly::Poly;

pub mod idempotents;
pub mod radical;

/// Largest supported dimension; validation cost grows as `dim^5`.
pub const MAX_DIM: usize = 64;

/// Elements are plain coordinate vectors in the algebra's basis.
pub type AlgElement = Vec<FieldElement>;

/// A commutative unital algebra of finite dimension, given by structure
/// constants over one of the supported fields.
#[derive(Debug, Clone)]
pub struct Algebra {
    field: FieldDescriptor,
    dim: usize,
    basis_names: Vec<String>,
    /// Dense structure constants, indexed `(i * dim + j) * dim + k`.
    table: Vec<FieldElement>,
    unit: Vec<FieldElement>,
}

/// An ideal, carried as its original generators plus a saturated reduced
/// row-space basis (closed under multiplication by every basis element).
#[derive(Debug, Clone)]
pub struct Ideal {
    pub generators: Vec<AlgElement>,
    pub basis: Vec<AlgElement>,
}

/// The data of a quotient map A -> A/I: the surviving basis indices, the
/// projection matrix (quotient coordinates of each input vector), and a
/// linear section picking coset representatives.
#[derive(Debug, Clone)]
pub struct QuotientMap {
    pub kept_indices: Vec<usize>,
    /// `(dim A/I) x (dim A)`; applies to coordinate vectors of A.
    pub projection: Matrix,
    /// `(dim A) x (dim A/I)`; embeds quotient coordinates as representatives.
    pub section: Matrix,
}

impl QuotientMap {
    pub fn project(&self, x: &[FieldElement]) -> AlgElement {
        self.projection.mul_vec(x)
    }

    pub fn lift(&self, y: &[FieldElement]) -> AlgElement {
        self.section.mul_vec(y)
    }
}

impl Algebra {
    /// Builds an algebra from a dense table and validates the ring axioms.
    ///
    /// `table[(i * dim + j) * dim + k]` is the coefficient of `b_k` in
    /// `b_i * b_j`. Fails with `NotCommutative`, `NotAssociative`, or
    /// `BadUnit` naming the offending basis indices.
    pub fn new(
        field: FieldDescriptor,
        basis_names: Vec<String>,
        table: Vec<FieldElement>,
        unit: Vec<FieldElement>,
    ) -> Result<Self> {
        let dim = basis_names.len();
        if dim == 0 || dim > MAX_DIM {
            return Err(Error::DimensionOutOfRange { dim });
        }
        assert_eq!(table.len(), dim * dim * dim, "structure table size");
        assert_eq!(unit.len(), dim, "unit coordinate count");
        let alg = Algebra { field, dim, basis_names, table, unit };
        alg.validate()?;
        Ok(alg)
    }

    /// Re-checks commutativity, associativity, and the unit law.
    pub fn validate(&self) -> Result<()> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..i {
                for k in 0..n {
                    if !self.c(i, j, k).try_eq(self.c(j, i, k))? {
                        return Err(Error::NotCommutative { i, j });
                    }
                }
            }
        }
        for j in 0..n {
            let prod = self.mul_basis(&self.unit, j);
            for k in 0..n {
                let expected = if k == j { self.field.one() } else { self.field.zero() };
                if !prod[k].try_eq(&expected)? {
                    return Err(Error::BadUnit { index: j });
                }
            }
        }
        for i in 0..n {
            for j in 0..=i {
                // (b_i b_j) b_k vs b_i (b_j b_k); products with one basis
                // factor cost dim^2, so the whole check is dim^5.
                let ij = self.table_row(i, j).to_vec();
                for k in 0..n {
                    let left = self.mul_basis(&ij, k);
                    let jk = self.table_row(j, k).to_vec();
                    let right = self.mul_basis(&jk, i);
                    for c in 0..n {
                        if !left[c].try_eq(&right[c])? {
                            return Err(Error::NotAssociative { i, j, k });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn c(&self, i: usize, j: usize, k: usize) -> &FieldElement {
        &self.table[(i * self.dim + j) * self.dim + k]
    }

    /// Structure-constant vector of `b_i * b_j`.
    pub(crate) fn table_row(&self, i: usize, j: usize) -> &[FieldElement] {
        let base = (i * self.dim + j) * self.dim;
        &self.table[base..base + self.dim]
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn zero(&self) -> AlgElement {
        vec![self.field.zero(); self.dim]
    }

    pub fn one(&self) -> AlgElement {
        self.unit.clone()
    }

    pub fn basis_element(&self, i: usize) -> AlgElement {
        assert!(i < self.dim, "basis index in range");
        let mut v = self.zero();
        v[i] = self.field.one();
        v
    }

    /// The scalar `c` embedded as `c * 1`.
    pub fn scalar(&self, c: &FieldElement) -> AlgElement {
        self.scale(c, &self.unit)
    }

    pub fn add(&self, x: &[FieldElement], y: &[FieldElement]) -> AlgElement {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        x.iter().zip(y).map(|(a, b)| a.add(b)).collect()
    }

    pub fn sub(&self, x: &[FieldElement], y: &[FieldElement]) -> AlgElement {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        x.iter().zip(y).map(|(a, b)| a.sub(b)).collect()
    }

    pub fn neg(&self, x: &[FieldElement]) -> AlgElement {
        x.iter().map(|a| a.neg()).collect()
    }

    pub fn scale(&self, c: &FieldElement, x: &[FieldElement]) -> AlgElement {
        assert_eq!(x.len(), self.dim);
        x.iter().map(|a| c.mul(a)).collect()
    }

    /// Product against a single basis element: `x * b_j`, cost `dim^2`.
    pub fn mul_basis(&self, x: &[FieldElement], j: usize) -> AlgElement {
        assert_eq!(x.len(), self.dim);
        let mut out = self.zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zeroish() && xi.is_zero().unwrap_or(false) {
                continue;
            }
            for k in 0..self.dim {
                out[k] = out[k].add(&xi.mul(self.c(i, j, k)));
            }
        }
        out
    }

    /// Full product of two coordinate vectors, cost `dim^3`.
    pub fn mul(&self, x: &[FieldElement], y: &[FieldElement]) -> AlgElement {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = self.zero();
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zeroish() && yj.is_zero().unwrap_or(false) {
                continue;
            }
            let xbj = self.mul_basis(x, j);
            for k in 0..self.dim {
                out[k] = out[k].add(&yj.mul(&xbj[k]));
            }
        }
        out
    }

    /// `x^e` by iterated multiplication (exponents stay below `dim` here).
    pub fn pow_element(&self, x: &[FieldElement], e: u32) -> AlgElement {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, x);
        }
        acc
    }

    /// True when every coordinate is (certified or approximate) zero.
    pub fn is_zero_element(&self, x: &[FieldElement]) -> bool {
        x.iter().all(|c| c.is_zeroish())
    }

    /// Exact equality of two elements, erring on exhausted precision.
    pub fn elements_eq(&self, x: &[FieldElement], y: &[FieldElement]) -> Result<bool> {
        for (a, b) in x.iter().zip(y) {
            if !a.try_eq(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The matrix of multiplication by `a` in the chosen basis:
    /// column `j` holds the coordinates of `a * b_j`.
    pub fn regular_matrix(&self, a: &[FieldElement]) -> Matrix {
        assert_eq!(a.len(), self.dim);
        let mut m = Matrix::zeros(&self.field, self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.mul_basis(a, j);
            for (k, v) in col.into_iter().enumerate() {
                m.set(k, j, v);
            }
        }
        m
    }

    /// Characteristic polynomial of multiplication by `a` (monic, degree =
    /// dim), computed division-free.
    pub fn charpoly_of(&self, a: &[FieldElement]) -> Poly {
        self.regular_matrix(a).charpoly()
    }

    /// The spectrum: distinct field roots of the characteristic polynomial
    /// of multiplication by `a`, in canonical order. May be empty.
    pub fn spectrum(&self, a: &[FieldElement]) -> Result<Vec<FieldElement>> {
        distinct_roots(&self.charpoly_of(a))
    }

    /// The largest absolute value attained on the spectrum, or `None` when
    /// the spectrum is empty (the gauge is undefined there, not zero).
    pub fn spectral_radius(&self, a: &[FieldElement]) -> Result<Option<Magnitude>> {
        let spec = self.spectrum(a)?;
        let mut best: Option<Magnitude> = None;
        for lambda in &spec {
            let mag = lambda.abs_value()?;
            best = Some(match best {
                None => mag,
                Some(cur) => {
                    let ord = cur.partial_cmp(&mag).ok_or_else(|| {
                        Error::Internal("incomparable magnitudes in one field".into())
                    })?;
                    if ord == std::cmp::Ordering::Less {
                        mag
                    } else {
                        cur
                    }
                }
            });
        }
        Ok(best)
    }

    /// Whether `(a, b)` lies in the spectral entourage of index `k`:
    /// every point of `sigma(b - a)` lies in the basic neighborhood `U_k`.
    /// An empty spectrum passes vacuously.
    pub fn in_entourage(&self, a: &[FieldElement], b: &[FieldElement], k: i64) -> Result<bool> {
        let spec = self.spectrum(&self.sub(b, a))?;
        for lambda in &spec {
            if !lambda.in_neighborhood(k)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Inverse of `a`, or `Ok(None)` when `a` is not invertible. A returned
    /// inverse is verified: `a * y = 1` exactly (at precision).
    pub fn invert(&self, a: &[FieldElement]) -> Result<Option<AlgElement>> {
        let m = self.regular_matrix(a);
        let Some(y) = m.solve(&self.unit)? else {
            return Ok(None);
        };
        if !self.elements_eq(&self.mul(a, &y), &self.unit)? {
            return Err(Error::Internal("inverse candidate failed verification".into()));
        }
        Ok(Some(y))
    }

    /// The ideal generated by `gens`: saturates the linear span under
    /// multiplication by every basis element.
    pub fn ideal(&self, gens: &[AlgElement]) -> Result<Ideal> {
        for g in gens {
            assert_eq!(g.len(), self.dim);
        }
        let mut basis = row_space_basis(&self.field, gens)?;
        loop {
            let mut extended = basis.clone();
            for v in &basis {
                for j in 0..self.dim {
                    extended.push(self.mul_basis(v, j));
                }
            }
            let new_basis = row_space_basis(&self.field, &extended)?;
            if new_basis.len() == basis.len() {
                return Ok(Ideal { generators: gens.to_vec(), basis: new_basis });
            }
            basis = new_basis;
        }
    }

    pub fn ideal_contains(&self, ideal: &Ideal, x: &[FieldElement]) -> Result<bool> {
        in_span(&self.field, &ideal.basis, x)
    }

    /// Quotient by an ideal. Fails with `ImproperIdeal` when the ideal
    /// contains the unit. Returns the quotient algebra (basis: the original
    /// basis vectors surviving as coset representatives) and the projection
    /// and section data.
    pub fn quotient(&self, ideal: &Ideal) -> Result<(Algebra, QuotientMap)> {
        if self.ideal_contains(ideal, &self.unit)? {
            return Err(Error::ImproperIdeal(format!(
                "ideal of rank {} contains the unit",
                ideal.basis.len()
            )));
        }
        let kept = complement_indices(&self.field, &ideal.basis, self.dim)?;
        let q_dim = kept.len();
        assert_eq!(q_dim + ideal.basis.len(), self.dim, "complement size");

        // Change-of-basis matrix: columns are the ideal basis followed by
        // the kept standard vectors; its inverse reads off coordinates, and
        // the projection keeps the trailing block.
        let n = self.dim;
        let mut cols: Vec<Vec<FieldElement>> = Vec::with_capacity(n);
        cols.extend(ideal.basis.iter().cloned());
        for &i in &kept {
            let mut e = vec![self.field.zero(); n];
            e[i] = self.field.one();
            cols.push(e);
        }
        let m = Matrix::from_rows(&self.field, cols).transpose();
        let inv = m
            .inverse()?
            .ok_or_else(|| Error::Internal("ideal basis plus complement is singular".into()))?;
        let mut projection = Matrix::zeros(&self.field, q_dim, n);
        for r in 0..q_dim {
            for c in 0..n {
                projection.set(r, c, inv.get(ideal.basis.len() + r, c).clone());
            }
        }
        let mut section = Matrix::zeros(&self.field, n, q_dim);
        for (r, &i) in kept.iter().enumerate() {
            section.set(i, r, self.field.one());
        }

        let mut table = Vec::with_capacity(q_dim * q_dim * q_dim);
        for &i in &kept {
            for &j in &kept {
                let prod = self.mul_basis(&self.basis_element(i), j);
                table.extend(projection.mul_vec(&prod));
            }
        }
        let unit = projection.mul_vec(&self.unit);
        let names = kept.iter().map(|&i| self.basis_names[i].clone()).collect();
        let quotient = Algebra::new(self.field.clone(), names, table, unit)?;
        Ok((quotient, QuotientMap { kept_indices: kept, projection, section }))
    }

    /// Renders an element as a named linear combination, e.g. `2*1 + 3*x`.
    pub fn render_element(&self, x: &[FieldElement]) -> String {
        assert_eq!(x.len(), self.dim);
        let mut parts = Vec::new();
        for (i, c) in x.iter().enumerate() {
            if c.is_zeroish() {
                continue;
            }
            parts.push(format!("{}*{}", c, self.basis_names[i]));
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }

    // ---- builders ----

    /// `F[t]/(f)` with basis `1, t, ..., t^{deg-1}`. The modulus must have
    /// invertible leading coefficient and degree at least 1.
    pub fn polynomial_quotient(field: &FieldDescriptor, f: &Poly) -> Result<Algebra> {
        let deg = f.degree().ok_or(Error::DivisionByZero)?;
        if deg == 0 {
            return Err(Error::DimensionOutOfRange { dim: 0 });
        }
        let lead_inv = f.leading().expect("nonzero poly").inverse()?;
        let monic = f.scale(&lead_inv);

        // Powers of t mod f up to t^{2 deg - 2}.
        let mut powers: Vec<Vec<FieldElement>> = Vec::with_capacity(2 * deg - 1);
        let mut cur = vec![field.zero(); deg];
        cur[0] = field.one();
        powers.push(cur.clone());
        for _ in 1..(2 * deg - 1) {
            // Multiply by t: shift up; reduce the overflow via
            // t^deg = -(f - t^deg).
            let overflow = cur[deg - 1].clone();
            let mut next = vec![field.zero(); deg];
            for i in (1..deg).rev() {
                next[i] = cur[i - 1].clone();
            }
            for i in 0..deg {
                next[i] = next[i].sub(&overflow.mul(&monic.coeff(i)));
            }
            powers.push(next.clone());
            cur = next;
        }

        let mut table = Vec::with_capacity(deg * deg * deg);
        for i in 0..deg {
            for j in 0..deg {
                table.extend(powers[i + j].iter().cloned());
            }
        }
        let mut unit = vec![field.zero(); deg];
        unit[0] = field.one();
        let names = (0..deg)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            })
            .collect();
        Algebra::new(field.clone(), names, table, unit)
    }

    /// The pointwise-function algebra `F^n` with the given coordinate
    /// labels: `e_i e_j = delta_ij e_i`, unit = all-ones.
    pub fn pointwise(field: &FieldDescriptor, labels: &[String]) -> Result<Algebra> {
        let n = labels.len();
        if n == 0 || n > MAX_DIM {
            return Err(Error::DimensionOutOfRange { dim: n });
        }
        let mut table = vec![field.zero(); n * n * n];
        for i in 0..n {
            table[(i * n + i) * n + i] = field.one();
        }
        let unit = vec![field.one(); n];
        let names = labels.iter().map(|l| format!("e[{l}]")).collect();
        Algebra::new(field.clone(), names, table, unit)
    }

    /// Product algebra `A x B` with componentwise operations.
    pub fn direct_sum(a: &Algebra, b: &Algebra) -> Result<Algebra> {
        assert!(
            a.field.characteristic() == b.field.characteristic(),
            "summands over one field"
        );
        let field = a.field.clone();
        let n = a.dim + b.dim;
        let mut table = vec![field.zero(); n * n * n];
        for i in 0..a.dim {
            for j in 0..a.dim {
                for k in 0..a.dim {
                    table[(i * n + j) * n + k] = a.c(i, j, k).clone();
                }
            }
        }
        for i in 0..b.dim {
            for j in 0..b.dim {
                for k in 0..b.dim {
                    table[((a.dim + i) * n + (a.dim + j)) * n + (a.dim + k)] =
                        b.c(i, j, k).clone();
                }
            }
        }
        let mut unit = Vec::with_capacity(n);
        unit.extend(a.unit.iter().cloned());
        unit.extend(b.unit.iter().cloned());
        let mut names = Vec::with_capacity(n);
        names.extend(a.basis_names.iter().map(|s| format!("l.{s}")));
        names.extend(b.basis_names.iter().map(|s| format!("r.{s}")));
        Algebra::new(field, names, table, unit)
    }

    /// The same algebra written in the basis whose vectors are the columns
    /// of `p` (an invertible change of basis).
    pub fn conjugate(&self, p: &Matrix) -> Result<Algebra> {
        assert_eq!(p.rows(), self.dim);
        assert_eq!(p.cols(), self.dim);
        let p_inv = p
            .inverse()?
            .ok_or_else(|| Error::Internal("change of basis matrix is singular".into()))?;
        let n = self.dim;
        let new_basis: Vec<AlgElement> = (0..n).map(|i| p.col_vec(i)).collect();
        let mut table = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                let prod = self.mul(&new_basis[i], &new_basis[j]);
                table.extend(p_inv.mul_vec(&prod));
            }
        }
        let unit = p_inv.mul_vec(&self.unit);
        let names = (0..n).map(|i| format!("u{i}")).collect();
        Algebra::new(self.field.clone(), names, table, unit)
    }
}

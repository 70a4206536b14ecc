//! The Boolean algebra of idempotents: complement/meet/join, primitive
//! idempotents via characters of the semisimple quotient plus a Newton
//! lift along the radical, and orthogonalization of idempotent linear
//! combinations into sign-pattern atoms.

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::linalg::row_space_basis;
use crate::spectrum::{enumerate_characters, value_matrix, Character};

use super::{AlgElement, Algebra};

/// Orthogonalization enumerates `2^m` sign patterns; refuse beyond this.
pub const ORTHOGONALIZE_CAP: usize = 16;

/// One output term of orthogonalization: the sign pattern (`true` at `i`
/// means factor `e_i`, `false` means `1 - e_i`), the summed coefficient,
/// and the atom it multiplies.
#[derive(Debug, Clone)]
pub struct OrthogonalTerm {
    pub pattern: Vec<bool>,
    pub coefficient: FieldElement,
    pub atom: AlgElement,
}

impl Algebra {
    /// `x * x = x`, at working precision.
    pub fn is_idempotent(&self, x: &[FieldElement]) -> Result<bool> {
        self.elements_eq(&self.mul(x, x), x)
    }

    fn require_idempotent(&self, x: &[FieldElement]) -> Result<()> {
        if !self.is_idempotent(x)? {
            return Err(Error::NotIdempotent(self.render_element(x)));
        }
        Ok(())
    }

    /// Boolean complement `1 - x` of an idempotent.
    pub fn bool_not(&self, x: &[FieldElement]) -> Result<AlgElement> {
        self.require_idempotent(x)?;
        Ok(self.sub(&self.one(), x))
    }

    /// Boolean meet `x * y` of two idempotents.
    pub fn bool_and(&self, x: &[FieldElement], y: &[FieldElement]) -> Result<AlgElement> {
        self.require_idempotent(x)?;
        self.require_idempotent(y)?;
        Ok(self.mul(x, y))
    }

    /// Boolean join `x + y - x*y` of two idempotents.
    pub fn bool_or(&self, x: &[FieldElement], y: &[FieldElement]) -> Result<AlgElement> {
        self.require_idempotent(x)?;
        self.require_idempotent(y)?;
        Ok(self.sub(&self.add(x, y), &self.mul(x, y)))
    }

    /// The primitive idempotents, one per character of the semisimple
    /// quotient, in the canonical character order.
    ///
    /// Construction: solve for the indicator elements of `A/Jrad` against
    /// its character value matrix, lift through a linear section, then
    /// correct by Newton iteration `e <- 3e^2 - 2e^3` until `e^2 = e`
    /// exactly. Fails with `NotGelfandUnsplit` when the quotient has a
    /// simple factor of dimension above one (fewer characters than its
    /// dimension), and verifies orthogonality and the partition of unity.
    pub fn primitive_idempotents(&self, budget: u64) -> Result<Vec<AlgElement>> {
        let rad = self.jacobson_radical()?;
        let (quot, map) = if rad.is_empty() {
            // Semisimple already; use a trivial quotient by the zero ideal.
            (self.clone(), None)
        } else {
            let ideal = self.ideal(&rad)?;
            let (quot, map) = self.quotient(&ideal)?;
            (quot, Some(map))
        };
        let chars = enumerate_characters(&quot, budget)?;
        if chars.len() != quot.dim() {
            return Err(Error::NotGelfandUnsplit(format!(
                "semisimple quotient of dimension {} has only {} characters; \
                 a simple factor of dimension > 1 was encountered",
                quot.dim(),
                chars.len()
            )));
        }

        // Indicators of the quotient: chi_j(q_i) = delta_ij.
        let values = value_matrix(quot.field(), &chars);
        let mut atoms = Vec::with_capacity(chars.len());
        for i in 0..chars.len() {
            let mut delta = vec![quot.field().zero(); chars.len()];
            delta[i] = quot.field().one();
            let q = values
                .solve(&delta)?
                .ok_or_else(|| Error::Internal("character value matrix is singular".into()))?;
            let lifted = match &map {
                Some(m) => m.lift(&q),
                None => q,
            };
            atoms.push(self.newton_idempotent_lift(lifted)?);
        }

        // The family must be orthogonal, nonzero, and sum to one.
        let mut total = self.zero();
        for (i, e) in atoms.iter().enumerate() {
            if self.is_zero_element(e) {
                return Err(Error::Internal("zero primitive idempotent".into()));
            }
            for other in atoms.iter().skip(i + 1) {
                if !self.is_zero_element(&self.mul(e, other)) {
                    return Err(Error::Internal("primitive idempotents not orthogonal".into()));
                }
            }
            total = self.add(&total, e);
        }
        if !self.elements_eq(&total, &self.one())? {
            return Err(Error::Internal("primitive idempotents do not sum to one".into()));
        }
        Ok(atoms)
    }

    /// Newton correction of an element idempotent modulo the radical; the
    /// iteration squares the error ideal, so `ceil(log2 dim) + 1` rounds
    /// suffice.
    fn newton_idempotent_lift(&self, mut e: AlgElement) -> Result<AlgElement> {
        let max_rounds = (usize::BITS - (self.dim().max(2) - 1).leading_zeros()) + 1;
        for _ in 0..=max_rounds {
            if self.is_idempotent(&e)? {
                return Ok(e);
            }
            let e2 = self.mul(&e, &e);
            let e3 = self.mul(&e2, &e);
            let three = self.field().from_integer(3);
            let two = self.field().from_integer(2);
            e = self.sub(&self.scale(&three, &e2), &self.scale(&two, &e3));
        }
        Err(Error::Internal("idempotent lift failed to converge".into()))
    }

    /// Whether the idempotents span the whole algebra. Unsplit simple
    /// factors mean they cannot, so `NotGelfandUnsplit` maps to `false`
    /// rather than an error.
    pub fn idempotents_span_algebra(&self, budget: u64) -> Result<bool> {
        match self.primitive_idempotents(budget) {
            Ok(atoms) => {
                let basis = row_space_basis(self.field(), &atoms)?;
                Ok(basis.len() == self.dim())
            }
            Err(Error::NotGelfandUnsplit(_)) => Ok(false),
            Err(e) => Err(e),
        }
    }

    /// Rewrites `sum_i c_i e_i` (each `e_i` idempotent) over the orthogonal
    /// atoms `prod_{i in S} e_i * prod_{i not in S} (1 - e_i)`: the
    /// coefficient of the atom at pattern `S` is `sum_{i in S} c_i`.
    /// Zero atoms and zero coefficients are dropped; terms are ordered by
    /// descending pattern size, then lexicographically.
    pub fn orthogonalize(
        &self,
        terms: &[(FieldElement, AlgElement)],
    ) -> Result<Vec<OrthogonalTerm>> {
        let m = terms.len();
        if m > ORTHOGONALIZE_CAP {
            return Err(Error::UnsupportedAlgebra(format!(
                "orthogonalization enumerates 2^m sign patterns; m = {m} exceeds \
                 the cap {ORTHOGONALIZE_CAP}"
            )));
        }
        for (_, e) in terms {
            self.require_idempotent(e)?;
        }

        let mut out = Vec::new();
        for mask in 0u32..(1u32 << m) {
            let mut atom = self.one();
            let mut coefficient = self.field().zero();
            let mut pattern = Vec::with_capacity(m);
            for (i, (c, e)) in terms.iter().enumerate() {
                let positive = mask >> i & 1 == 1;
                pattern.push(positive);
                if positive {
                    atom = self.mul(&atom, e);
                    coefficient = coefficient.add(c);
                } else {
                    atom = self.mul(&atom, &self.sub(&self.one(), e));
                }
            }
            if self.is_zero_element(&atom) || coefficient.is_zeroish() {
                continue;
            }
            out.push(OrthogonalTerm { pattern, coefficient, atom });
        }
        out.sort_by(|a, b| {
            let size_a = a.pattern.iter().filter(|&&x| x).count();
            let size_b = b.pattern.iter().filter(|&&x| x).count();
            size_b.cmp(&size_a).then_with(|| {
                // Lexicographic on the index sets: true-before-false per slot.
                for (x, y) in a.pattern.iter().zip(&b.pattern) {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                std::cmp::Ordering::Equal
            })
        });
        Ok(out)
    }
}

/// Reorders primitive idempotents to match a character list of the same
/// algebra: position `i` holds the unique atom on which `chars[i]`
/// evaluates to one.
pub fn match_atoms_to_characters(
    a: &Algebra,
    atoms: &[AlgElement],
    chars: &[Character],
) -> Result<Vec<AlgElement>> {
    if atoms.len() != chars.len() {
        return Err(Error::NotGelfandUnsplit(format!(
            "{} atoms cannot be matched to {} characters",
            atoms.len(),
            chars.len()
        )));
    }
    let one = a.field().one();
    let mut out = Vec::with_capacity(chars.len());
    for chi in chars {
        let mut hit: Option<&AlgElement> = None;
        for e in atoms {
            if chi.evaluate(e).try_eq(&one)? {
                if hit.is_some() {
                    return Err(Error::Internal("two atoms under one character".into()));
                }
                hit = Some(e);
            }
        }
        let e = hit.ok_or_else(|| Error::Internal("character misses every atom".into()))?;
        out.push(e.clone());
    }
    Ok(out)
}

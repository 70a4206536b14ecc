//! Dense univariate polynomials over a base field.
//!
//! Coefficients are stored little-endian. Trailing coefficients that are
//! *exactly* zero are trimmed; a trailing p-adic coefficient that merely
//! vanished below precision is kept, because it still carries information
//! (the root finder inspects such coefficients explicitly).

use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, FieldElement};
use std::fmt;

#[derive(Debug, Clone)]
pub struct Poly {
    field: FieldDescriptor,
    coeffs: Vec<FieldElement>,
}

fn is_exact_zero(e: &FieldElement) -> bool {
    e.is_zero().unwrap_or(false)
}

impl Poly {
    pub fn new(field: FieldDescriptor, mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().map(is_exact_zero).unwrap_or(false) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: FieldDescriptor) -> Self {
        Poly { field, coeffs: vec![] }
    }

    pub fn constant(c: FieldElement) -> Self {
        Poly::new(c.field(), vec![c])
    }

    /// The monomial `t`.
    pub fn t(field: FieldDescriptor) -> Self {
        let coeffs = vec![field.zero(), field.one()];
        Poly { field, coeffs }
    }

    /// Build from integer coefficients, little-endian.
    pub fn from_integers(field: &FieldDescriptor, cs: &[i64]) -> Self {
        Poly::new(field.clone(), cs.iter().map(|c| field.from_integer(*c)).collect())
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Index of the highest stored coefficient; `None` for the zero
    /// polynomial. Over Q_p the top coefficient may be certified-nonzero or
    /// merely not-exactly-zero; callers that need invertibility check it.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero_poly(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn leading(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    /// Drop trailing coefficients that are zero at the working precision.
    /// Used by p-adic gcd computations, where a cancelled leading term is a
    /// degree drop at precision.
    pub fn trim_zeroish(&self) -> Poly {
        let mut coeffs = self.coeffs.clone();
        while coeffs.last().map(|c| c.is_zeroish()).unwrap_or(false) {
            coeffs.pop();
        }
        Poly { field: self.field.clone(), coeffs }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).add(&other.coeff(i)));
        }
        Poly::new(self.field.clone(), out)
    }

    pub fn neg(&self) -> Self {
        Poly { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        Poly::new(self.field.clone(), self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero_poly() || other.is_zero_poly() {
            return Poly::zero(self.field.clone());
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if is_exact_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::new(self.field.clone(), out)
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero(self.field.clone());
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(c.mul(&self.field.from_integer(i as i64)));
        }
        Poly::new(self.field.clone(), out)
    }

    /// Synthetic division by `t - root`: returns the quotient and remainder
    /// (which equals `self.eval(root)`).
    pub fn deflate_linear(&self, root: &FieldElement) -> (Poly, FieldElement) {
        if self.coeffs.is_empty() {
            return (Poly::zero(self.field.clone()), self.field.zero());
        }
        let n = self.coeffs.len();
        let mut q = vec![self.field.zero(); n.saturating_sub(1)];
        let mut carry = self.field.zero();
        for i in (0..n).rev() {
            let b = self.coeffs[i].add(&carry);
            if i == 0 {
                return (Poly::new(self.field.clone(), q), b);
            }
            q[i - 1] = b.clone();
            carry = b.mul(root);
        }
        unreachable!()
    }

    /// Long division: `self = q*d + r` with `deg r < deg d`. Requires the
    /// divisor's leading coefficient to be invertible (certified nonzero).
    pub fn divrem(&self, d: &Self) -> Result<(Poly, Poly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = d.coeffs[dd].inverse()?;
        let mut r = self.coeffs.clone();
        let mut q = vec![self.field.zero(); self.coeffs.len().saturating_sub(dd)];
        while r.len() > dd {
            let k = r.len() - 1; // degree of remainder working copy
            let factor = r[k].mul(&lead_inv);
            q[k - dd] = factor.clone();
            for i in 0..=dd {
                let delta = factor.mul(&d.coeffs[i]);
                r[k - dd + i] = r[k - dd + i].sub(&delta);
            }
            r.pop(); // leading term cancelled by construction
        }
        Ok((Poly::new(self.field.clone(), q), Poly::new(self.field.clone(), r)))
    }

    /// `f(a + b*t)` by Horner in the polynomial ring.
    pub fn compose_affine(&self, a: &FieldElement, b: &FieldElement) -> Poly {
        let lin = Poly::new(self.field.clone(), vec![a.clone(), b.clone()]);
        let mut acc = Poly::zero(self.field.clone());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&Poly::constant(c.clone()));
        }
        acc
    }

    /// The reversal `t^deg * f(1/t)` of the stored coefficients.
    pub fn reversed(&self) -> Poly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Poly::new(self.field.clone(), coeffs)
    }

    /// Render with the given variable name (used in messages and reports).
    pub fn render(&self, var: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut parts = vec![];
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if is_exact_zero(c) {
                continue;
            }
            let cs = c.to_string();
            let part = match i {
                0 => cs,
                1 if cs == "1" => var.to_string(),
                1 => format!("{cs}*{var}"),
                _ if cs == "1" => format!("{var}^{i}"),
                _ => format!("{cs}*{var}^{i}"),
            };
            parts.push(part);
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("t"))
    }
}

//! Exact arithmetic in the three supported base fields.
//!
//! * `Q` — arbitrary-precision rationals,
//! * `F_p` — prime residue fields,
//! * `Q_p` — p-adic numbers at a fixed global precision (significant
//!   p-adic digits), with per-element tracking of how many digits survive
//!   each operation.
//!
//! Each field carries a countable base of symmetric neighborhoods of zero,
//! addressed by an integer index `k`:
//!
//! * `Q`:   `N(k) = { x : |x| < 2^-k }` (dyadic balls),
//! * `F_p`: `N(k) = { 0 }` for every `k` (discrete),
//! * `Q_p`: `N(k) = p^k Z_p = { x : v(x) >= k }`.
//!
//! The base satisfies the usual axioms of a topological-field neighborhood
//! base of zero (symmetry, nesting, additive/multiplicative refinement,
//! scaling, and stability of inversion near one); the `witness_*` methods
//! return, for each axiom and target index, a concrete index that works, so
//! tests can check the axioms by sampling instead of trusting them.

mod padic;
pub mod roots;

pub use padic::{Padic, PadicValue, Valuation};

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Descriptor of one of the supported base fields. Two descriptors compare
/// equal exactly when they describe the same field at the same precision.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldDescriptor {
    /// The rational numbers with the archimedean absolute value.
    Rational,
    /// The prime field F_p with the discrete topology.
    Prime { p: u64 },
    /// The p-adic field Q_p truncated to `precision` significant digits.
    Padic { p: u64, precision: u32 },
}

/// Largest prime modulus accepted (keeps residue arithmetic in `u128`).
pub const MAX_PRIME: u64 = (1 << 31) - 1;
/// Largest p-adic precision accepted.
pub const MAX_PADIC_PRECISION: u32 = 64;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldDescriptor {
    /// The rational field.
    pub fn rational() -> Self {
        FieldDescriptor::Rational
    }

    /// The prime field F_p. Rejects composite or oversized moduli.
    pub fn prime(p: u64) -> Result<Self> {
        if p > MAX_PRIME || !is_prime(p) {
            return Err(Error::SchemaError {
                location: "field.p".into(),
                message: format!("{p} is not a supported prime modulus"),
            });
        }
        Ok(FieldDescriptor::Prime { p })
    }

    /// The p-adic field Q_p at `precision` significant digits.
    pub fn padic(p: u64, precision: u32) -> Result<Self> {
        if p > MAX_PRIME || !is_prime(p) {
            return Err(Error::SchemaError {
                location: "field.p".into(),
                message: format!("{p} is not a supported prime modulus"),
            });
        }
        if precision == 0 || precision > MAX_PADIC_PRECISION {
            return Err(Error::SchemaError {
                location: "field.precision".into(),
                message: format!("precision {precision} outside 1..={MAX_PADIC_PRECISION}"),
            });
        }
        Ok(FieldDescriptor::Padic { p, precision })
    }

    /// Characteristic of the field (0 for Q and Q_p).
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldDescriptor::Prime { p } => *p,
            _ => 0,
        }
    }

    /// Additive identity.
    pub fn zero(&self) -> FieldElement {
        match self {
            FieldDescriptor::Rational => FieldElement::Rational(BigRational::zero()),
            FieldDescriptor::Prime { p } => FieldElement::Prime { p: *p, r: 0 },
            FieldDescriptor::Padic { p, precision } => {
                FieldElement::Padic(Padic::zero(*p, *precision))
            }
        }
    }

    /// Multiplicative identity.
    pub fn one(&self) -> FieldElement {
        self.from_integer(1)
    }

    /// Embed a machine integer.
    pub fn from_integer(&self, n: i64) -> FieldElement {
        self.from_bigint(&BigInt::from(n))
    }

    /// Embed an arbitrary-precision integer.
    pub fn from_bigint(&self, n: &BigInt) -> FieldElement {
        match self {
            FieldDescriptor::Rational => FieldElement::Rational(BigRational::from(n.clone())),
            FieldDescriptor::Prime { p } => {
                let r = n.mod_floor_u64(*p);
                FieldElement::Prime { p: *p, r }
            }
            FieldDescriptor::Padic { p, precision } => {
                FieldElement::Padic(Padic::from_bigint(*p, *precision, n))
            }
        }
    }

    /// Embed a machine-integer ratio. Fails over F_p when the denominator
    /// vanishes mod p, and everywhere when it is zero.
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<FieldElement> {
        self.from_big_ratio_parts(&BigInt::from(num), &BigInt::from(den))
    }

    /// Embed an exact integer ratio.
    pub fn from_big_ratio_parts(&self, num: &BigInt, den: &BigInt) -> Result<FieldElement> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            FieldDescriptor::Rational => Ok(FieldElement::Rational(BigRational::new(
                num.clone(),
                den.clone(),
            ))),
            FieldDescriptor::Prime { .. } => {
                let n = self.from_bigint(num);
                let d = self.from_bigint(den);
                n.div(&d)
            }
            FieldDescriptor::Padic { p, precision } => {
                Ok(FieldElement::Padic(Padic::from_ratio(*p, *precision, num, den)?))
            }
        }
    }

    /// Parse the canonical textual form of an element. Accepts integers and
    /// `a/b` fractions for every field; additionally, over Q_p, the rendered
    /// forms `u*p^v`, `p^v`, `O(p^m)`, and `u*p^v+O(p^m)`.
    pub fn parse_element(&self, text: &str) -> Result<FieldElement> {
        let s = text.trim();
        let bad = || Error::BadElement { field: self.to_string(), text: text.to_string() };
        if s.is_empty() {
            return Err(bad());
        }
        if let FieldDescriptor::Padic { p, precision } = self {
            return Ok(FieldElement::Padic(Padic::parse(*p, *precision, s)?));
        }
        if let Some((n, d)) = s.split_once('/') {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            return self.from_big_ratio_parts(&n, &d);
        }
        let n: BigInt = s.parse().map_err(|_| bad())?;
        Ok(self.from_bigint(&n))
    }

    /// All field elements, for brute-force sweeps; `None` for infinite fields.
    pub fn enumerate(&self) -> Option<Vec<FieldElement>> {
        match self {
            FieldDescriptor::Prime { p } => {
                Some((0..*p).map(|r| FieldElement::Prime { p: *p, r }).collect())
            }
            _ => None,
        }
    }

    /// Intersection refinement: an index `w` with `N(w) ⊆ N(j) ∩ N(k)`.
    pub fn witness_intersection(&self, j: i64, k: i64) -> i64 {
        j.max(k)
    }

    /// Additive refinement: an index `w` with `N(w) + N(w) ⊆ N(k)`.
    pub fn witness_additive(&self, k: i64) -> i64 {
        match self {
            FieldDescriptor::Rational => k + 1,
            _ => k,
        }
    }

    /// Multiplicative refinement: an index `w` with `N(w)·N(w) ⊆ N(k)`.
    pub fn witness_multiplicative(&self, k: i64) -> i64 {
        match self {
            FieldDescriptor::Prime { .. } => k,
            // |xy| < 2^-2w <= 2^-k  resp.  v(xy) >= 2w >= k.
            _ => (k + 1).div_euclid(2),
        }
    }

    /// Scaling: an index `w` with `x·N(w) ⊆ N(k)`. Total in `x`; for a
    /// p-adic `x` known only up to `O(p^m)` the bound `m` is used, which is
    /// safe because it only makes the witness larger.
    pub fn witness_scaling(&self, x: &FieldElement, k: i64) -> i64 {
        match x {
            FieldElement::Rational(q) => {
                let a = q.abs();
                if a <= BigRational::one() {
                    k
                } else {
                    // smallest e with 2^e >= |x| is at most bit length of ceil|x|
                    let bits = a.ceil().to_integer().magnitude().bits() as i64;
                    k + bits
                }
            }
            FieldElement::Prime { .. } => k,
            FieldElement::Padic(x) => match x.valuation() {
                Valuation::Infinite => k,
                Valuation::Exact(v) => k - v,
                Valuation::AtLeast(m) => k - m,
            },
        }
    }

    /// Inversion near one: an index `w` with `(1 + N(w))^{-1} ⊆ 1 + N(k)`.
    pub fn witness_inverse_shift(&self, k: i64) -> i64 {
        match self {
            FieldDescriptor::Rational => k.max(0) + 1,
            FieldDescriptor::Prime { .. } => k,
            FieldDescriptor::Padic { .. } => k.max(1),
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rational => write!(f, "Q"),
            FieldDescriptor::Prime { p } => write!(f, "F_{p}"),
            FieldDescriptor::Padic { p, precision } => write!(f, "Q_{p}[{precision} digits]"),
        }
    }
}

/// An element of one of the supported fields. Elements carry enough data to
/// compute standalone; mixing elements of different fields panics, since the
/// library never constructs such a pair from validated input.
#[derive(Debug, Clone)]
pub enum FieldElement {
    Rational(BigRational),
    Prime { p: u64, r: u64 },
    Padic(Padic),
}

fn assert_same(a: &FieldElement, b: &FieldElement, op: &str) {
    let fa = a.field();
    let fb = b.field();
    assert_eq!(fa, fb, "field mismatch in {op}: {fa} vs {fb}");
}

fn p_add(p: u64, a: u64, b: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn p_mul(p: u64, a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn p_inv(p: u64, a: u64) -> u64 {
    // extended Euclid; a != 0 mod p, p prime
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1);
    (s0.rem_euclid(p as i128)) as u64
}

impl FieldElement {
    /// The field this element belongs to.
    pub fn field(&self) -> FieldDescriptor {
        match self {
            FieldElement::Rational(_) => FieldDescriptor::Rational,
            FieldElement::Prime { p, .. } => FieldDescriptor::Prime { p: *p },
            FieldElement::Padic(x) => FieldDescriptor::Padic { p: x.p, precision: x.precision },
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_same(self, other, "add");
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => {
                FieldElement::Rational(a + b)
            }
            (FieldElement::Prime { p, r: a }, FieldElement::Prime { r: b, .. }) => {
                FieldElement::Prime { p: *p, r: p_add(*p, *a, *b) }
            }
            (FieldElement::Padic(a), FieldElement::Padic(b)) => FieldElement::Padic(a.add(b)),
            _ => unreachable!(),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            FieldElement::Rational(a) => FieldElement::Rational(-a),
            FieldElement::Prime { p, r } => {
                FieldElement::Prime { p: *p, r: if *r == 0 { 0 } else { p - r } }
            }
            FieldElement::Padic(a) => FieldElement::Padic(a.neg()),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_same(self, other, "mul");
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => {
                FieldElement::Rational(a * b)
            }
            (FieldElement::Prime { p, r: a }, FieldElement::Prime { r: b, .. }) => {
                FieldElement::Prime { p: *p, r: p_mul(*p, *a, *b) }
            }
            (FieldElement::Padic(a), FieldElement::Padic(b)) => FieldElement::Padic(a.mul(b)),
            _ => unreachable!(),
        }
    }

    /// Multiplicative inverse. `DivisionByZero` on exact zero;
    /// `PrecisionExhausted` on a p-adic element with no certified digits.
    pub fn inverse(&self) -> Result<Self> {
        match self {
            FieldElement::Rational(a) => {
                if a.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(FieldElement::Rational(a.recip()))
                }
            }
            FieldElement::Prime { p, r } => {
                if *r == 0 {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(FieldElement::Prime { p: *p, r: p_inv(*p, *r) })
                }
            }
            FieldElement::Padic(a) => Ok(FieldElement::Padic(a.inverse()?)),
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        assert_same(self, other, "div");
        Ok(self.mul(&other.inverse()?))
    }

    /// Nonnegative integer power by repeated squaring.
    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Definite zero test. Over Q_p an element that cancelled below its
    /// certified digits cannot be decided and reports `PrecisionExhausted`.
    pub fn is_zero(&self) -> Result<bool> {
        match self {
            FieldElement::Rational(a) => Ok(a.is_zero()),
            FieldElement::Prime { r, .. } => Ok(*r == 0),
            FieldElement::Padic(a) => a.is_zero(),
        }
    }

    /// Zero at the working precision: exact zeros, plus p-adic elements with
    /// no certified significant digit. Used where an algorithm must commit
    /// to a pivot/rank decision; the honest caveat is recorded by callers.
    pub fn is_zeroish(&self) -> bool {
        match self {
            FieldElement::Rational(a) => a.is_zero(),
            FieldElement::Prime { r, .. } => *r == 0,
            FieldElement::Padic(a) => a.is_zeroish(),
        }
    }

    /// Definite equality test; `PrecisionExhausted` when the difference
    /// vanishes at precision but either operand has no certified digits.
    pub fn try_eq(&self, other: &Self) -> Result<bool> {
        assert_same(self, other, "try_eq");
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => Ok(a == b),
            (FieldElement::Prime { r: a, .. }, FieldElement::Prime { r: b, .. }) => Ok(a == b),
            (FieldElement::Padic(a), FieldElement::Padic(b)) => a.try_eq(b),
            _ => unreachable!(),
        }
    }

    /// Membership in the zero-neighborhood `N(k)` of the element's field.
    pub fn in_neighborhood(&self, k: i64) -> Result<bool> {
        match self {
            FieldElement::Rational(a) => {
                // |a| < 2^-k
                Ok(a.abs() < pow2(-k))
            }
            FieldElement::Prime { r, .. } => Ok(*r == 0),
            FieldElement::Padic(a) => a.in_neighborhood(k),
        }
    }

    /// A neighborhood index the element escapes (`x ∉ N(k)`), witnessing
    /// that the neighborhoods intersect in `{0}`. `None` for exact zero.
    pub fn escape_index(&self) -> Result<Option<i64>> {
        match self {
            FieldElement::Rational(a) => {
                if a.is_zero() {
                    return Ok(None);
                }
                // k with 2^-k <= |a|, i.e. 2^k >= 1/|a|
                let inv = a.abs().recip();
                let bits = inv.ceil().to_integer().magnitude().bits() as i64;
                Ok(Some(bits))
            }
            FieldElement::Prime { r, .. } => Ok(if *r == 0 { None } else { Some(0) }),
            FieldElement::Padic(a) => match a.valuation() {
                Valuation::Infinite => Ok(None),
                Valuation::Exact(v) => Ok(Some(v + 1)),
                Valuation::AtLeast(m) => Err(Error::precision(format!(
                    "cannot certify non-membership for an element known only to O({}^{m})",
                    a.p
                ))),
            },
        }
    }

    /// Absolute value in the field's canonical topology.
    pub fn abs_value(&self) -> Result<Magnitude> {
        match self {
            FieldElement::Rational(a) => {
                if a.is_zero() {
                    Ok(Magnitude::Zero)
                } else {
                    Ok(Magnitude::Rational(a.abs()))
                }
            }
            FieldElement::Prime { r, .. } => {
                Ok(if *r == 0 { Magnitude::Zero } else { Magnitude::One })
            }
            FieldElement::Padic(a) => match a.valuation() {
                Valuation::Infinite => Ok(Magnitude::Zero),
                Valuation::Exact(v) => Ok(Magnitude::PPower { p: a.p, val: v }),
                Valuation::AtLeast(m) => Err(Error::precision(format!(
                    "absolute value of an element known only to O({}^{m})",
                    a.p
                ))),
            },
        }
    }

    /// Deterministic total order used for canonical sorting of spectra and
    /// character tables. It is a structural order, not a field order.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => a.cmp(b),
            (FieldElement::Prime { r: a, .. }, FieldElement::Prime { r: b, .. }) => a.cmp(b),
            (FieldElement::Padic(a), FieldElement::Padic(b)) => a.canonical_cmp(b),
            _ => Ordering::Equal,
        }
    }

    /// The p-adic valuation view of the element, if it lives in a Q_p.
    pub fn padic_valuation(&self) -> Option<Valuation> {
        match self {
            FieldElement::Padic(a) => Some(a.valuation()),
            _ => None,
        }
    }

    /// Exposes the rational value when the element lives in Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldElement::Rational(a) => Some(a),
            _ => None,
        }
    }

    /// Exposes the residue when the element lives in F_p.
    pub fn as_prime_residue(&self) -> Option<u64> {
        match self {
            FieldElement::Prime { r, .. } => Some(*r),
            _ => None,
        }
    }

    /// Exposes p-adic internals for the root finder.
    pub fn as_padic(&self) -> Option<&Padic> {
        match self {
            FieldElement::Padic(a) => Some(a),
            _ => None,
        }
    }
}

fn pow2(e: i64) -> BigRational {
    let two = BigInt::from(2);
    if e >= 0 {
        BigRational::from(two.pow(e as u32))
    } else {
        BigRational::new(BigInt::one(), two.pow((-e) as u32))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(a) => {
                if a.denom().is_one() {
                    write!(f, "{}", a.numer())
                } else {
                    write!(f, "{}/{}", a.numer(), a.denom())
                }
            }
            FieldElement::Prime { r, .. } => write!(f, "{r}"),
            FieldElement::Padic(a) => write!(f, "{}", a.render()),
        }
    }
}

impl std::ops::Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: Self) -> FieldElement {
        FieldElement::add(self, rhs)
    }
}

impl std::ops::Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: Self) -> FieldElement {
        FieldElement::sub(self, rhs)
    }
}

impl std::ops::Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: Self) -> FieldElement {
        FieldElement::mul(self, rhs)
    }
}

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::neg(self)
    }
}

/// Absolute values: exact nonnegative rationals for Q, the trivial value for
/// F_p, and powers `p^-v` for Q_p. Values of different shapes compare by
/// exact conversion where meaningful.
#[derive(Debug, Clone, PartialEq)]
pub enum Magnitude {
    Zero,
    One,
    Rational(BigRational),
    PPower { p: u64, val: i64 },
}

impl Magnitude {
    /// Exact value as a rational, when representable without huge blowup.
    fn as_rational(&self) -> Option<BigRational> {
        match self {
            Magnitude::Zero => Some(BigRational::zero()),
            Magnitude::One => Some(BigRational::one()),
            Magnitude::Rational(q) => Some(q.clone()),
            Magnitude::PPower { p, val } => {
                if val.unsigned_abs() > 4096 {
                    return None;
                }
                let pw = BigInt::from(*p).pow(val.unsigned_abs() as u32);
                Some(if *val >= 0 {
                    BigRational::new(BigInt::one(), pw)
                } else {
                    BigRational::from(pw)
                })
            }
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (Magnitude::Zero, _) | (_, Magnitude::Zero) => Magnitude::Zero,
            (Magnitude::One, x) | (x, Magnitude::One) => x.clone(),
            (Magnitude::Rational(a), Magnitude::Rational(b)) => Magnitude::Rational(a * b),
            (Magnitude::PPower { p, val: a }, Magnitude::PPower { val: b, .. }) => {
                Magnitude::PPower { p: *p, val: a + b }
            }
            (a, b) => {
                let (qa, qb) = (a.as_rational(), b.as_rational());
                match (qa, qb) {
                    (Some(qa), Some(qb)) => Magnitude::Rational(qa * qb),
                    _ => panic!("incomparable magnitude product"),
                }
            }
        }
    }
}

impl PartialOrd for Magnitude {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (Magnitude::Zero, Magnitude::Zero) => Some(Ordering::Equal),
            (Magnitude::Zero, _) => Some(Ordering::Less),
            (_, Magnitude::Zero) => Some(Ordering::Greater),
            (Magnitude::PPower { p: p1, val: a }, Magnitude::PPower { p: p2, val: b })
                if p1 == p2 =>
            {
                // p^-a vs p^-b: larger valuation means smaller value
                Some(b.cmp(a))
            }
            (a, b) => match (a.as_rational(), b.as_rational()) {
                (Some(qa), Some(qb)) => qa.partial_cmp(&qb),
                _ => None,
            },
        }
    }
}

impl fmt::Display for Magnitude {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Magnitude::Zero => write!(f, "0"),
            Magnitude::One => write!(f, "1"),
            Magnitude::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Magnitude::PPower { p, val } => {
                if *val == 0 {
                    write!(f, "1")
                } else {
                    write!(f, "{p}^{}", -val)
                }
            }
        }
    }
}

/// `BigInt` helper: nonnegative residue mod a `u64`.
trait ModFloorU64 {
    fn mod_floor_u64(&self, m: u64) -> u64;
}

impl ModFloorU64 for BigInt {
    fn mod_floor_u64(&self, m: u64) -> u64 {
        use num::Integer;
        let r = self.mod_floor(&BigInt::from(m));
        // r in [0, m)
        let (_, digits) = r.to_u64_digits();
        *digits.first().unwrap_or(&0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldDescriptor {
        FieldDescriptor::rational()
    }

    fn f5() -> FieldDescriptor {
        FieldDescriptor::prime(5).unwrap()
    }

    fn q3(n: u32) -> FieldDescriptor {
        FieldDescriptor::padic(3, n).unwrap()
    }

    #[test]
    fn prime_field_arithmetic_matches_residues() {
        let f = f5();
        let two = f.from_integer(2);
        let three = f.from_integer(3);
        // 2*3 = 6 = 1 mod 5
        assert!(two.mul(&three).try_eq(&f.one()).unwrap());
        // additive inverse
        assert!(two.add(&two.neg()).is_zero().unwrap());
        // inverse of 2 is 3
        assert!(two.inverse().unwrap().try_eq(&three).unwrap());
        // division by zero reported
        assert!(matches!(two.div(&f.zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn rational_arithmetic_is_exact() {
        let f = q();
        let a = f.from_ratio(1, 3).unwrap();
        let b = f.from_ratio(1, 6).unwrap();
        let half = f.from_ratio(1, 2).unwrap();
        assert!(a.add(&b).try_eq(&half).unwrap());
        let prod = a.mul(&b);
        assert!(prod.try_eq(&f.from_ratio(1, 18).unwrap()).unwrap());
        assert!(prod.div(&b).unwrap().try_eq(&a).unwrap());
    }

    #[test]
    fn rational_neighborhoods_are_dyadic_balls() {
        let f = q();
        let third = f.from_ratio(1, 3).unwrap();
        // |1/3| < 1/2
        assert!(third.in_neighborhood(1).unwrap());
        // |1/3| >= 1/4
        assert!(!third.in_neighborhood(2).unwrap());
        let k = third.escape_index().unwrap().unwrap();
        assert!(!third.in_neighborhood(k).unwrap());
    }

    #[test]
    fn prime_neighborhoods_are_trivial() {
        let f = f5();
        assert!(f.zero().in_neighborhood(7).unwrap());
        assert!(!f.one().in_neighborhood(-3).unwrap());
        assert_eq!(f.one().escape_index().unwrap(), Some(0));
        assert_eq!(f.zero().escape_index().unwrap(), None);
    }

    #[test]
    fn padic_valuation_and_neighborhoods() {
        let f = q3(6);
        let nine_u = f.from_integer(18); // 2 * 3^2
        assert_eq!(
            nine_u.padic_valuation(),
            Some(Valuation::Exact(2)),
            "v_3(18) = 2"
        );
        assert!(nine_u.in_neighborhood(2).unwrap());
        assert!(!nine_u.in_neighborhood(3).unwrap());
        assert_eq!(nine_u.abs_value().unwrap(), Magnitude::PPower { p: 3, val: 2 });
    }

    #[test]
    fn padic_cancellation_tracks_precision() {
        let f = q3(4);
        let a = f.from_integer(2);
        let b = f.from_integer(2);
        let d = a.sub(&b);
        // cancelled below the last certified digit: zero at precision only
        assert!(d.is_zeroish());
        assert!(d.is_zero().is_err(), "exhausted comparison must not silently equate");
        // but the two full-precision operands do compare equal
        assert!(a.try_eq(&b).unwrap());
        // and the difference is inside every neighborhood up to the precision
        assert!(d.in_neighborhood(4).unwrap());
        assert!(d.in_neighborhood(2).unwrap());
        assert!(d.in_neighborhood(5).is_err());
    }

    #[test]
    fn padic_digit_loss_on_addition() {
        let f = q3(4);
        // 1 + 2 = 3: valuation rises, one digit lost
        let three = f.from_integer(1).add(&f.from_integer(2));
        assert_eq!(three.padic_valuation(), Some(Valuation::Exact(1)));
        assert!(three.try_eq(&f.from_integer(3)).unwrap());
        // division keeps at least one digit
        let x = f.from_ratio(1, 3).unwrap();
        assert_eq!(x.padic_valuation(), Some(Valuation::Exact(-1)));
        assert!(x.mul(&f.from_integer(3)).try_eq(&f.one()).unwrap());
    }

    #[test]
    fn magnitudes_are_multiplicative() {
        let f = q3(6);
        let a = f.from_integer(6);
        let b = f.from_integer(9);
        let ab = a.mul(&b);
        assert_eq!(
            ab.abs_value().unwrap(),
            a.abs_value().unwrap().mul(&b.abs_value().unwrap())
        );
        let g = q();
        let x = g.from_ratio(-3, 4).unwrap();
        let y = g.from_ratio(2, 9).unwrap();
        assert_eq!(
            x.mul(&y).abs_value().unwrap(),
            x.abs_value().unwrap().mul(&y.abs_value().unwrap())
        );
    }

    #[test]
    fn neighborhood_axiom_witnesses_hold_on_samples() {
        // additive, multiplicative, scaling, inverse-shift witnesses for Q
        let f = q();
        for k in -2..6 {
            let w = f.witness_additive(k);
            // x, y just inside N(w)
            let x = pow2(-w - 1);
            let sum = FieldElement::Rational(&x + &x);
            assert!(sum.in_neighborhood(k).unwrap());

            let wm = f.witness_multiplicative(k);
            let x = FieldElement::Rational(pow2(-wm - 1));
            assert!(x.mul(&x).in_neighborhood(k).unwrap());

            let c = f.from_ratio(17, 3).unwrap();
            let ws = f.witness_scaling(&c, k);
            let y = FieldElement::Rational(pow2(-ws - 1));
            assert!(c.mul(&y).in_neighborhood(k).unwrap());

            let wi = f.witness_inverse_shift(k);
            let v = FieldElement::Rational(pow2(-wi - 1));
            let inv = f.one().add(&v).inverse().unwrap();
            assert!(inv.sub(&f.one()).in_neighborhood(k).unwrap());
        }
        // the same four for Q_3
        let f = q3(12);
        for k in 0..6 {
            let w = f.witness_additive(k);
            let x = f.from_integer(3).pow(w as u64);
            assert!(x.add(&x).in_neighborhood(k).unwrap());
            let wm = f.witness_multiplicative(k);
            let x = f.from_integer(3).pow(wm.max(0) as u64);
            assert!(x.mul(&x).in_neighborhood(k).unwrap());
            let c = f.from_ratio(2, 3).unwrap();
            let ws = f.witness_scaling(&c, k);
            let y = f.from_integer(3).pow(ws.max(0) as u64);
            assert!(c.mul(&y).in_neighborhood(k).unwrap());
            let wi = f.witness_inverse_shift(k);
            let v = f.from_integer(3).pow(wi.max(1) as u64);
            let inv = f.one().add(&v).inverse().unwrap();
            assert!(inv.sub(&f.one()).in_neighborhood(k).unwrap());
        }
    }

    #[test]
    fn parse_and_render_round_trip() {
        let f = q();
        for s in ["0", "7", "-3/4", "12/5"] {
            let x = f.parse_element(s).unwrap();
            assert_eq!(x.to_string(), s);
        }
        let f = f5();
        assert_eq!(f.parse_element("-1").unwrap().to_string(), "4");
        let f = q3(4);
        for s in ["0", "2", "2*3^2", "3^-1", "O(3^3)", "5*3^1+O(3^3)"] {
            let x = f.parse_element(s).unwrap();
            let y = f.parse_element(&x.to_string()).unwrap();
            assert_eq!(x.to_string(), y.to_string());
        }
        // 9 normalizes to a power form
        assert_eq!(f.parse_element("9").unwrap().to_string(), "3^2");
        assert_eq!(f.parse_element("18").unwrap().to_string(), "2*3^2");
        assert!(f.parse_element("2*5^1").is_err(), "wrong prime rejected");
    }
}

//! Fixed-precision p-adic numbers.
//!
//! A nonzero element is stored as `p^val * unit + O(p^(val+digits))` with
//! `unit` a unit mod `p^digits` and `1 <= digits <= precision`, where
//! `precision` is the field-wide digit budget. Valuations are exact
//! integers; only the unit part is truncated.
//!
//! Subtraction of equal full-precision elements does not produce an exact
//! zero — it produces a value known to vanish only up to `O(p^m)`, stored as
//! `ApproxZero { abs_prec: m }`. Definite decisions (equality, zero tests,
//! inversion) on such values report `PrecisionExhausted` instead of
//! guessing; bounded decisions (membership in `p^k Z_p` for `k <= m`) still
//! succeed.

use crate::error::{Error, Result};
use num::bigint::{BigInt, BigUint};
use num::{Integer, One, Signed, Zero};
use std::cmp::Ordering;

/// Valuation view of a p-adic element: exact for certified-nonzero values,
/// a lower bound for values that cancelled below precision, infinite for
/// the exact zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Valuation {
    Exact(i64),
    AtLeast(i64),
    Infinite,
}

#[derive(Debug, Clone, PartialEq)]
pub enum PadicValue {
    /// The exact zero (infinite valuation).
    Zero,
    /// A value known to lie in `p^abs_prec Z_p` with no certified digit.
    ApproxZero { abs_prec: i64 },
    /// `p^val * unit + O(p^(val+digits))`, `unit` coprime to p.
    Unit { val: i64, unit: BigUint, digits: u32 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Padic {
    pub p: u64,
    pub precision: u32,
    pub value: PadicValue,
}

fn pk(p: u64, k: u32) -> BigUint {
    BigUint::from(p).pow(k)
}

/// p-adic valuation of a nonzero natural number.
fn vp(n: &BigUint, p: u64) -> u32 {
    debug_assert!(!n.is_zero());
    let p = BigUint::from(p);
    let mut n = n.clone();
    let mut v = 0u32;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

fn modinv(u: &BigUint, m: &BigUint) -> BigUint {
    let e = BigInt::from(u.clone()).extended_gcd(&BigInt::from(m.clone()));
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(&BigInt::from(m.clone()))
        .to_biguint()
        .expect("mod_floor of positive modulus is nonnegative")
}

impl Padic {
    pub fn zero(p: u64, precision: u32) -> Self {
        Padic { p, precision, value: PadicValue::Zero }
    }

    pub fn one(p: u64, precision: u32) -> Self {
        Padic {
            p,
            precision,
            value: PadicValue::Unit { val: 0, unit: BigUint::one(), digits: precision },
        }
    }

    /// Build from an integer `n` (exact input, truncated to the digit budget).
    pub fn from_bigint(p: u64, precision: u32, n: &BigInt) -> Self {
        if n.is_zero() {
            return Padic::zero(p, precision);
        }
        let mag = n.magnitude();
        let v = vp(mag, p) as i64;
        let unit_full = mag / pk(p, v as u32);
        let modulus = pk(p, precision);
        let mut unit = unit_full.mod_floor(&modulus);
        if n.is_negative() {
            unit = &modulus - unit;
        }
        Padic { p, precision, value: PadicValue::Unit { val: v, unit, digits: precision } }
    }

    /// Build from an exact integer ratio.
    pub fn from_ratio(p: u64, precision: u32, num: &BigInt, den: &BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Padic::zero(p, precision));
        }
        let a = Padic::from_bigint(p, precision, num);
        let b = Padic::from_bigint(p, precision, den);
        Ok(a.mul(&b.inverse()?))
    }

    /// Build from digits: the value `base_val`-shifted integer `n`, known
    /// modulo `p^(abs_prec - base_val)`. Central normalization helper.
    pub(crate) fn from_shifted(
        p: u64,
        precision: u32,
        base_val: i64,
        n: &BigUint,
        abs_prec: i64,
    ) -> Self {
        let window = abs_prec - base_val;
        if window <= 0 {
            return Padic { p, precision, value: PadicValue::ApproxZero { abs_prec } };
        }
        let window = window as u32;
        let r = n.mod_floor(&pk(p, window));
        if r.is_zero() {
            return Padic { p, precision, value: PadicValue::ApproxZero { abs_prec } };
        }
        let t = vp(&r, p);
        debug_assert!(t < window);
        let val = base_val + t as i64;
        let digits = (window - t).min(precision);
        let unit = (r / pk(p, t)).mod_floor(&pk(p, digits));
        debug_assert!(!unit.is_zero());
        Padic { p, precision, value: PadicValue::Unit { val, unit, digits } }
    }

    fn check_compatible(&self, other: &Self) {
        assert_eq!(
            (self.p, self.precision),
            (other.p, other.precision),
            "p-adic operands from different fields"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_compatible(other);
        let (p, n) = (self.p, self.precision);
        match (&self.value, &other.value) {
            (PadicValue::Zero, _) => other.clone(),
            (_, PadicValue::Zero) => self.clone(),
            (PadicValue::ApproxZero { abs_prec: m1 }, PadicValue::ApproxZero { abs_prec: m2 }) => {
                Padic { p, precision: n, value: PadicValue::ApproxZero { abs_prec: *m1.min(m2) } }
            }
            (PadicValue::ApproxZero { abs_prec: m }, PadicValue::Unit { val, unit, digits })
            | (PadicValue::Unit { val, unit, digits }, PadicValue::ApproxZero { abs_prec: m }) => {
                if *val >= *m {
                    Padic { p, precision: n, value: PadicValue::ApproxZero { abs_prec: *m } }
                } else {
                    let d = (*digits).min((m - val) as u32);
                    debug_assert!(d >= 1);
                    let unit = unit.mod_floor(&pk(p, d));
                    Padic { p, precision: n, value: PadicValue::Unit { val: *val, unit, digits: d } }
                }
            }
            (
                PadicValue::Unit { val: v1, unit: u1, digits: d1 },
                PadicValue::Unit { val: v2, unit: u2, digits: d2 },
            ) => {
                let base = (*v1).min(*v2);
                let abs = (v1 + *d1 as i64).min(v2 + *d2 as i64);
                let s1 = u1 * pk(p, (v1 - base) as u32);
                let s2 = u2 * pk(p, (v2 - base) as u32);
                Padic::from_shifted(p, n, base, &(s1 + s2), abs)
            }
        }
    }

    pub fn neg(&self) -> Self {
        let (p, n) = (self.p, self.precision);
        match &self.value {
            PadicValue::Zero | PadicValue::ApproxZero { .. } => self.clone(),
            PadicValue::Unit { val, unit, digits } => {
                let unit = pk(p, *digits) - unit;
                Padic { p, precision: n, value: PadicValue::Unit { val: *val, unit, digits: *digits } }
            }
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_compatible(other);
        let (p, n) = (self.p, self.precision);
        match (&self.value, &other.value) {
            (PadicValue::Zero, _) | (_, PadicValue::Zero) => Padic::zero(p, n),
            (PadicValue::ApproxZero { abs_prec: m1 }, PadicValue::ApproxZero { abs_prec: m2 }) => {
                Padic { p, precision: n, value: PadicValue::ApproxZero { abs_prec: m1 + m2 } }
            }
            (PadicValue::ApproxZero { abs_prec: m }, PadicValue::Unit { val, .. })
            | (PadicValue::Unit { val, .. }, PadicValue::ApproxZero { abs_prec: m }) => {
                Padic { p, precision: n, value: PadicValue::ApproxZero { abs_prec: m + val } }
            }
            (
                PadicValue::Unit { val: v1, unit: u1, digits: d1 },
                PadicValue::Unit { val: v2, unit: u2, digits: d2 },
            ) => {
                let digits = (*d1).min(*d2);
                let unit = (u1 * u2).mod_floor(&pk(p, digits));
                Padic { p, precision: n, value: PadicValue::Unit { val: v1 + v2, unit, digits } }
            }
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        let (p, n) = (self.p, self.precision);
        match &self.value {
            PadicValue::Zero => Err(Error::DivisionByZero),
            PadicValue::ApproxZero { abs_prec } => Err(Error::precision(format!(
                "inverting an element known only to O({p}^{abs_prec})"
            ))),
            PadicValue::Unit { val, unit, digits } => {
                let m = pk(p, *digits);
                Ok(Padic {
                    p,
                    precision: n,
                    value: PadicValue::Unit { val: -val, unit: modinv(unit, &m), digits: *digits },
                })
            }
        }
    }

    pub fn valuation(&self) -> Valuation {
        match &self.value {
            PadicValue::Zero => Valuation::Infinite,
            PadicValue::ApproxZero { abs_prec } => Valuation::AtLeast(*abs_prec),
            PadicValue::Unit { val, .. } => Valuation::Exact(*val),
        }
    }

    pub fn is_zeroish(&self) -> bool {
        !matches!(self.value, PadicValue::Unit { .. })
    }

    pub fn is_zero(&self) -> Result<bool> {
        match &self.value {
            PadicValue::Zero => Ok(true),
            PadicValue::Unit { .. } => Ok(false),
            PadicValue::ApproxZero { abs_prec } => Err(Error::precision(format!(
                "zero test on an element known only to O({}^{abs_prec})",
                self.p
            ))),
        }
    }

    pub fn try_eq(&self, other: &Self) -> Result<bool> {
        self.check_compatible(other);
        if self.value == other.value {
            return Ok(true);
        }
        let diff = self.add(&other.neg());
        match diff.value {
            PadicValue::Zero => Ok(true),
            PadicValue::Unit { .. } => Ok(false),
            PadicValue::ApproxZero { abs_prec } => {
                // equal on every jointly certified digit; definite only if
                // both sides actually have certified digits
                let both_definite = matches!(self.value, PadicValue::Unit { .. })
                    && matches!(other.value, PadicValue::Unit { .. });
                if both_definite {
                    Ok(true)
                } else {
                    Err(Error::precision(format!(
                        "equality test exhausted at O({}^{abs_prec})",
                        self.p
                    )))
                }
            }
        }
    }

    /// Membership in `p^k Z_p`.
    pub fn in_neighborhood(&self, k: i64) -> Result<bool> {
        match self.valuation() {
            Valuation::Infinite => Ok(true),
            Valuation::Exact(v) => Ok(v >= k),
            Valuation::AtLeast(m) => {
                if m >= k {
                    Ok(true)
                } else {
                    Err(Error::precision(format!(
                        "membership in {}^{k} Z_{} for an element known only to O({}^{m})",
                        self.p, self.p, self.p
                    )))
                }
            }
        }
    }

    /// Structural total order for canonical sorting (not a field order).
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        fn rank(v: &PadicValue) -> u8 {
            match v {
                PadicValue::Zero => 0,
                PadicValue::ApproxZero { .. } => 1,
                PadicValue::Unit { .. } => 2,
            }
        }
        match (&self.value, &other.value) {
            (PadicValue::Zero, PadicValue::Zero) => Ordering::Equal,
            (PadicValue::ApproxZero { abs_prec: a }, PadicValue::ApproxZero { abs_prec: b }) => {
                a.cmp(b)
            }
            (
                PadicValue::Unit { val: v1, unit: u1, .. },
                PadicValue::Unit { val: v2, unit: u2, .. },
            ) => v1.cmp(v2).then_with(|| u1.cmp(u2)),
            (a, b) => rank(a).cmp(&rank(b)),
        }
    }

    /// The value as an integer mod `p^m`, when certified to that precision
    /// and integral. Used by Hensel lifting.
    pub fn to_integer_mod(&self, m: u32) -> Option<BigUint> {
        match &self.value {
            PadicValue::Zero => Some(BigUint::zero()),
            PadicValue::ApproxZero { abs_prec } => {
                if *abs_prec >= m as i64 {
                    Some(BigUint::zero())
                } else {
                    None
                }
            }
            PadicValue::Unit { val, unit, digits } => {
                if *val < 0 || val + (*digits as i64) < m as i64 {
                    return None;
                }
                let shifted = unit * pk(self.p, *val as u32);
                Some(shifted.mod_floor(&pk(self.p, m)))
            }
        }
    }

    /// Absolute precision: the exponent `e` such that the value is known
    /// modulo `p^e`; `None` for the exact zero (known to all orders).
    pub fn abs_precision(&self) -> Option<i64> {
        match &self.value {
            PadicValue::Zero => None,
            PadicValue::ApproxZero { abs_prec } => Some(*abs_prec),
            PadicValue::Unit { val, digits, .. } => Some(val + *digits as i64),
        }
    }

    /// Forget digits beyond absolute precision `abs`: the honest truncation.
    pub fn truncate_to(&self, abs: i64) -> Self {
        let cap = Padic {
            p: self.p,
            precision: self.precision,
            value: PadicValue::ApproxZero { abs_prec: abs },
        };
        self.add(&cap)
    }

    pub fn render(&self) -> String {
        let p = self.p;
        match &self.value {
            PadicValue::Zero => "0".to_string(),
            PadicValue::ApproxZero { abs_prec } => format!("O({p}^{abs_prec})"),
            PadicValue::Unit { val, unit, digits } => {
                let mut s = if *val == 0 {
                    format!("{unit}")
                } else if unit.is_one() {
                    format!("{p}^{val}")
                } else {
                    format!("{unit}*{p}^{val}")
                };
                if *digits < self.precision {
                    s.push_str(&format!("+O({p}^{})", val + *digits as i64));
                }
                s
            }
        }
    }

    pub fn parse(p: u64, precision: u32, text: &str) -> Result<Self> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::BadElement {
            field: format!("Q_{p}[{precision} digits]"),
            text: text.to_string(),
        };
        let parse_o = |body: &str| -> Result<i64> {
            // body is "O(p^m)"
            let inner = body
                .strip_prefix("O(")
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(bad)?;
            let (base, expo) = inner.split_once('^').ok_or_else(bad)?;
            if base.parse::<u64>().map_err(|_| bad())? != p {
                return Err(bad());
            }
            expo.parse::<i64>().map_err(|_| bad())
        };
        if s.starts_with("O(") {
            let m = parse_o(&s)?;
            return Ok(Padic { p, precision, value: PadicValue::ApproxZero { abs_prec: m } });
        }
        let (main, tail) = match s.find("+O(") {
            Some(i) => (&s[..i], Some(parse_o(&s[i + 1..])?)),
            None => (s.as_str(), None),
        };
        let base = if let Some((num, den)) = main.split_once('/') {
            let n: BigInt = num.parse().map_err(|_| bad())?;
            let d: BigInt = den.parse().map_err(|_| bad())?;
            Padic::from_ratio(p, precision, &n, &d)?
        } else if let Some((mant, expo)) = main.split_once('^') {
            // forms "p^v" and "u*p^v"
            let (u, base_str) = match mant.split_once('*') {
                Some((u, b)) => (u.parse::<BigInt>().map_err(|_| bad())?, b),
                None => (BigInt::one(), mant),
            };
            if base_str.parse::<u64>().map_err(|_| bad())? != p {
                return Err(bad());
            }
            let v: i64 = expo.parse().map_err(|_| bad())?;
            let u = Padic::from_bigint(p, precision, &u);
            let shift = Padic {
                p,
                precision,
                value: PadicValue::Unit { val: v, unit: BigUint::one(), digits: precision },
            };
            u.mul(&shift)
        } else {
            let n: BigInt = main.parse().map_err(|_| bad())?;
            Padic::from_bigint(p, precision, &n)
        };
        Ok(match tail {
            Some(m) => base.truncate_to(m),
            None => base,
        })
    }
}

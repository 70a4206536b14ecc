//! Roots of univariate polynomials in the base field, with multiplicities.
//!
//! Everything here is exact:
//!
//! * over Q, the rational root theorem (candidates `u/v` with `u` dividing
//!   the constant term and `v` the leading term of the primitive integer
//!   model), so irrational roots are correctly reported absent;
//! * over F_p, a residue sweep (degree one is solved directly, so sweeps
//!   are only needed for degree >= 2 and are capped at a practical prime
//!   size);
//! * over Q_p, exact zeros are stripped, the squarefree part is computed
//!   by a Euclidean gcd at working precision, roots are located residue by
//!   residue with Hensel/Newton lifting for simple residues and recursive
//!   refinement for degenerate ones, and negative-valuation roots come from
//!   the reversed polynomial. Roots over Q_p are certified modulo the
//!   precision actually available; when two roots cannot be separated at
//!   that precision the answer is a `PrecisionExhausted`/`HenselDegenerate`
//!   error, never a silent merge.

use crate::error::{Error, Result};
use crate::field::{FieldDescriptor, FieldElement, Valuation};
use crate::poly::Poly;
use num::bigint::{BigInt, BigUint};
use num::rational::BigRational;
use num::{Integer, One, Zero};
use std::collections::{BTreeMap, BTreeSet};

/// Residue sweeps (F_p roots of degree >= 2, residue refinement over Q_p)
/// enumerate all of F_p; beyond this prime size that is not practical.
pub const RESIDUE_SWEEP_BOUND: u64 = 1 << 20;

/// Upper bound on rational root candidates (divisor pairs); polynomials
/// whose outer coefficients are this smooth do not occur in practice.
const CANDIDATE_BOUND: usize = 1_000_000;

/// All roots of `f` lying in its base field, with multiplicities, in
/// canonical order. The zero polynomial is rejected (every point would be
/// a root).
pub fn roots_in_field(f: &Poly) -> Result<Vec<(FieldElement, usize)>> {
    assert!(!f.is_zero_poly(), "roots of the zero polynomial are undefined");
    let mut roots = match f.field() {
        FieldDescriptor::Rational => rational_roots(f)?,
        FieldDescriptor::Prime { p } => prime_roots(f, *p)?,
        FieldDescriptor::Padic { p, .. } => padic_roots(f, *p)?,
    };
    roots.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    // distinctness audit: indistinguishable-at-precision roots must not be
    // reported as if they were separated
    for w in roots.windows(2) {
        if w[0].0.try_eq(&w[1].0)? {
            return match f.field() {
                FieldDescriptor::Padic { .. } => Err(Error::precision(
                    "two root approximations are indistinguishable at working precision",
                )),
                _ => Err(Error::Internal(format!(
                    "duplicate root {} reported by the root finder",
                    w[0].0
                ))),
            };
        }
    }
    Ok(roots)
}

/// The distinct roots, without multiplicities.
pub fn distinct_roots(f: &Poly) -> Result<Vec<FieldElement>> {
    Ok(roots_in_field(f)?.into_iter().map(|(r, _)| r).collect())
}

/// Multiplicity of `root` in `f` by repeated synthetic division; zero when
/// `f(root)` is not zero (at the working precision).
fn deflation_multiplicity(f: &Poly, root: &FieldElement) -> usize {
    let mut work = f.clone();
    let mut m = 0;
    while work.degree().map(|d| d >= 1).unwrap_or(false) {
        let (q, rem) = work.deflate_linear(root);
        if !rem.is_zeroish() {
            break;
        }
        m += 1;
        work = q;
    }
    m
}

// ---------------------------------------------------------------------------
// Q: rational root theorem
// ---------------------------------------------------------------------------

fn rational_roots(f: &Poly) -> Result<Vec<(FieldElement, usize)>> {
    let field = f.field().clone();
    let mut work = f.clone();
    let mut out = vec![];

    // roots at zero: low coefficients vanish exactly
    let mut zero_mult = 0;
    while work.degree().map(|d| d >= 1).unwrap_or(false) && work.coeff(0).is_zero()? {
        let (q, _) = work.deflate_linear(&field.zero());
        work = q;
        zero_mult += 1;
    }
    if zero_mult > 0 {
        out.push((field.zero(), zero_mult));
    }
    if work.degree().map(|d| d < 1).unwrap_or(true) {
        return Ok(out);
    }
    if work.degree() == Some(1) {
        let root = work.coeff(0).neg().div(&work.coeff(1))?;
        out.push((root, 1));
        return Ok(out);
    }

    // primitive integer model: clear denominators, divide by the content
    let rats: Vec<BigRational> = work
        .coeffs()
        .iter()
        .map(|c| c.as_rational().expect("rational coefficients").clone())
        .collect();
    let mut denom_lcm = BigInt::one();
    for r in &rats {
        denom_lcm = denom_lcm.lcm(r.denom());
    }
    let ints: Vec<BigInt> = rats.iter().map(|r| (r * &denom_lcm).to_integer()).collect();
    let content = ints
        .iter()
        .fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let ints: Vec<BigInt> = ints.iter().map(|c| c / &content).collect();

    let a0 = ints.first().expect("nonconstant").magnitude().clone();
    let an = ints.last().expect("nonconstant").magnitude().clone();
    let num_divs = divisors(&a0)?;
    let den_divs = divisors(&an)?;
    if num_divs
        .len()
        .checked_mul(den_divs.len())
        .map(|n| n > CANDIDATE_BOUND)
        .unwrap_or(true)
    {
        return Err(Error::UnsupportedAlgebra(format!(
            "rational root search over {} x {} divisor candidates exceeds the {} bound",
            num_divs.len(),
            den_divs.len(),
            CANDIDATE_BOUND
        )));
    }

    let mut candidates: BTreeSet<BigRational> = BTreeSet::new();
    for u in &num_divs {
        for v in &den_divs {
            if !u.gcd(v).is_one() {
                continue; // u/v not in lowest terms: the reduced pair is also enumerated
            }
            let q = BigRational::new(BigInt::from(u.clone()), BigInt::from(v.clone()));
            candidates.insert(q.clone());
            candidates.insert(-q);
        }
    }

    for cand in candidates {
        let x = FieldElement::Rational(cand);
        let m = deflation_multiplicity(&work, &x);
        if m > 0 {
            for _ in 0..m {
                work = work.deflate_linear(&x).0;
            }
            out.push((x, m));
        }
        if work.degree().map(|d| d < 1).unwrap_or(true) {
            break;
        }
    }
    Ok(out)
}

/// All positive divisors of `n` (with `divisors(0)` and `divisors(1)` both
/// `[1]`, the right convention for root candidates).
fn divisors(n: &BigUint) -> Result<Vec<BigUint>> {
    if n.is_zero() || n.is_one() {
        return Ok(vec![BigUint::one()]);
    }
    let fact = factorize(n.clone());
    let mut divs = vec![BigUint::one()];
    for (p, e) in &fact {
        let mut next = Vec::with_capacity(divs.len() * (*e as usize + 1));
        let mut pe = BigUint::one();
        for _ in 0..=*e {
            for d in &divs {
                next.push(d * &pe);
            }
            pe *= p;
        }
        divs = next;
        if divs.len() > CANDIDATE_BOUND {
            return Err(Error::UnsupportedAlgebra(format!(
                "coefficient {n} has more than {CANDIDATE_BOUND} divisors"
            )));
        }
    }
    Ok(divs)
}

/// Prime factorization by trial division plus Pollard's rho (Brent's
/// variant). Primality is certified by Miller-Rabin with the first thirteen
/// prime bases, deterministic below 3.3e24; for larger inputs (which do not
/// occur in practice here) the same bases make the error probability
/// negligible.
fn factorize(n: BigUint) -> BTreeMap<BigUint, u32> {
    let mut fact = BTreeMap::new();
    let mut n = n;
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        let bp = BigUint::from(p);
        while (&n % &bp).is_zero() {
            *fact.entry(bp.clone()).or_insert(0) += 1;
            n /= &bp;
        }
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            *fact.entry(m).or_insert(0) += 1;
            continue;
        }
        let d = pollard_rho(&m);
        stack.push(&m / &d);
        stack.push(d);
    }
    fact
}

fn is_probable_prime(n: &BigUint) -> bool {
    if *n < BigUint::from(2u32) {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let bp = BigUint::from(p);
        if *n == bp {
            return true;
        }
        if (n % &bp).is_zero() {
            return false;
        }
    }
    // n - 1 = d * 2^s
    let one = BigUint::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: &BigUint) -> BigUint {
    // perfect squares defeat rho's cycle structure cheaply, catch them first
    let r = n.sqrt();
    if (&r * &r) == *n {
        return r;
    }
    let one = BigUint::one();
    for c in 1u64.. {
        let c = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut x = BigUint::from(2u32);
        let mut y = x.clone();
        loop {
            x = f(&x);
            y = f(&f(&y));
            if x == y {
                break; // cycle without factor: retry with the next offset
            }
            let diff = if x > y { &x - &y } else { &y - &x };
            let g = diff.gcd(n);
            if g > one && g < *n {
                return g;
            }
        }
    }
    unreachable!("factor search is unbounded")
}

// ---------------------------------------------------------------------------
// F_p: residue sweep
// ---------------------------------------------------------------------------

fn prime_roots(f: &Poly, p: u64) -> Result<Vec<(FieldElement, usize)>> {
    let mut work = f.clone();
    let mut out = vec![];
    if work.degree().map(|d| d < 1).unwrap_or(true) {
        return Ok(out);
    }
    if work.degree() == Some(1) {
        let root = work.coeff(0).neg().div(&work.coeff(1))?;
        return Ok(vec![(root, 1)]);
    }
    if p > RESIDUE_SWEEP_BOUND {
        return Err(Error::UnsupportedAlgebra(format!(
            "root search of degree >= 2 over F_{p} sweeps all residues; \
             p exceeds the practical bound {RESIDUE_SWEEP_BOUND}"
        )));
    }
    for r in 0..p {
        let x = FieldElement::Prime { p, r };
        let m = deflation_multiplicity(&work, &x);
        if m > 0 {
            for _ in 0..m {
                work = work.deflate_linear(&x).0;
            }
            out.push((x, m));
        }
        if work.degree().map(|d| d < 1).unwrap_or(true) {
            break;
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Q_p: strip, squarefree, refine residues, lift
// ---------------------------------------------------------------------------

fn padic_roots(f: &Poly, p: u64) -> Result<Vec<(FieldElement, usize)>> {
    let work = f.trim_zeroish();
    if work.is_zero_poly() {
        return Err(Error::precision(
            "every coefficient vanished at working precision; roots are undetermined",
        ));
    }
    if work.degree() == Some(0) {
        return Ok(vec![]);
    }
    let mut out = integral_padic_roots(&work, p)?;

    // negative-valuation roots x of f are 1/s for integral roots s of the
    // reversed polynomial with v(s) >= 1
    let rev = work.reversed().trim_zeroish();
    if rev.degree().map(|d| d >= 1).unwrap_or(false) {
        for (s, m) in integral_padic_roots(&rev, p)? {
            match s.padic_valuation() {
                Some(Valuation::Exact(v)) if v >= 1 => {
                    out.push((s.inverse()?, m));
                }
                Some(Valuation::Exact(_)) | Some(Valuation::Infinite) => {
                    // v = 0 duplicates an integral root of f; s = 0 is the
                    // degree drop already accounted for by trimming
                }
                _ => {
                    return Err(Error::precision(
                        "a root of large negative valuation cannot be certified \
                         at working precision",
                    ));
                }
            }
        }
    }
    Ok(out)
}

/// Roots of `f` in Z_p (valuation >= 0), with multiplicities. `f` must be
/// trimmed (certified-nonzero leading coefficient).
fn integral_padic_roots(f: &Poly, p: u64) -> Result<Vec<(FieldElement, usize)>> {
    let field = f.field().clone();
    let mut work = f.clone();
    let mut out = vec![];

    // exact roots at zero
    let mut zero_mult = 0;
    while work.degree().map(|d| d >= 1).unwrap_or(false) && work.coeff(0).is_zero().unwrap_or(false)
    {
        let (q, _) = work.deflate_linear(&field.zero());
        work = q;
        zero_mult += 1;
    }
    if zero_mult > 0 {
        out.push((field.zero(), zero_mult));
    }
    if work.degree().map(|d| d < 1).unwrap_or(true) {
        return Ok(out);
    }
    if work.degree() == Some(1) {
        let root = work.coeff(0).neg().div(&work.coeff(1))?;
        if let Some(Valuation::Exact(v)) = root.padic_valuation() {
            if v >= 0 {
                out.push((root, 1));
            }
        } else {
            // zero at precision: an integral root indistinguishable from 0
            out.push((root, 1));
        }
        return Ok(out);
    }

    // squarefree part at working precision
    let deriv = work.derivative();
    let gcd = padic_poly_gcd(&work, &deriv)?;
    let squarefree = if gcd.degree().map(|d| d >= 1).unwrap_or(false) {
        work.divrem(&gcd)?.0.trim_zeroish()
    } else {
        work.clone()
    };
    if squarefree.degree().map(|d| d < 1).unwrap_or(true) {
        return Err(Error::precision(
            "squarefree reduction collapsed at working precision",
        ));
    }

    let coeff_abs = min_coeff_abs_precision(&work);
    let depth_budget = padic_precision(&field) + 2;
    let mut residual = work.clone();
    let mut found_any = false;
    for raw in refine_residues(&squarefree, p, depth_budget)? {
        let m = deflation_multiplicity(&work, &raw);
        if m == 0 {
            return Err(Error::HenselDegenerate {
                p,
                residue: raw.to_string(),
                context: "a candidate root of the squarefree part does not divide \
                          the polynomial at working precision"
                    .into(),
            });
        }
        // coefficients known mod p^M pin a multiplicity-m root only mod
        // p^floor(M/m); report no more than that
        let reported = clamp_root_precision(raw.clone(), m, coeff_abs);
        if reported.is_zeroish() && zero_mult > 0 {
            return Err(Error::precision(
                "a refined root is indistinguishable from the exact zero root",
            ));
        }
        for _ in 0..m {
            residual = residual.deflate_linear(&raw).0;
        }
        out.push((reported, m));
        found_any = true;
    }
    // a squarefree reduction that collapsed at precision can hide factors;
    // whatever certifiably remains after deflation is searched again
    let residual = residual.trim_zeroish();
    if found_any && residual.degree().map(|d| d >= 1).unwrap_or(false) {
        out.extend(integral_padic_roots(&residual, p)?);
    }
    Ok(out)
}

/// Minimum absolute precision over the (not exactly zero) coefficients:
/// the modulus to which the polynomial is actually known.
fn min_coeff_abs_precision(f: &Poly) -> Option<i64> {
    let mut min: Option<i64> = None;
    for c in f.coeffs() {
        if let Some(x) = c.as_padic() {
            if let Some(a) = x.abs_precision() {
                min = Some(min.map(|v| v.min(a)).unwrap_or(a));
            }
        }
    }
    min
}

/// Truncate a multiplicity-`m` root to the precision its polynomial can
/// actually certify (`floor(M/m)` digits of absolute precision).
fn clamp_root_precision(root: FieldElement, mult: usize, coeff_abs: Option<i64>) -> FieldElement {
    if mult <= 1 {
        return root;
    }
    let Some(known) = coeff_abs else { return root };
    let bound = known.div_euclid(mult as i64);
    match root {
        FieldElement::Padic(x) => FieldElement::Padic(x.truncate_to(bound)),
        other => other,
    }
}

fn padic_precision(field: &FieldDescriptor) -> u32 {
    match field {
        FieldDescriptor::Padic { precision, .. } => *precision,
        _ => unreachable!("p-adic helper on a non-p-adic field"),
    }
}

/// Euclidean gcd at working precision: remainders whose coefficients all
/// vanished at precision count as zero, so the result is the gcd of the
/// polynomials as they are actually known.
fn padic_poly_gcd(a: &Poly, b: &Poly) -> Result<Poly> {
    let mut a = a.trim_zeroish();
    let mut b = b.trim_zeroish();
    while !b.is_zero_poly() {
        let (_, r) = a.divrem(&b)?;
        a = b;
        b = r.trim_zeroish();
    }
    Ok(a)
}

/// Distinct integral roots of a squarefree-at-precision polynomial, by
/// recursion over residues mod p: a simple residue is lifted by Newton
/// iteration; a degenerate residue `r` is refined by recursing on
/// `g(r + p s) / p^content`.
fn refine_residues(g: &Poly, p: u64, depth_budget: u32) -> Result<Vec<FieldElement>> {
    if depth_budget == 0 {
        return Err(Error::HenselDegenerate {
            p,
            residue: "-".into(),
            context: "residue refinement descended past the working precision".into(),
        });
    }
    let field = g.field().clone();

    // normalize: make the minimum certified valuation zero
    let mut min_val: Option<i64> = None;
    for c in g.coeffs() {
        if let Some(Valuation::Exact(v)) = c.padic_valuation() {
            min_val = Some(min_val.map(|m: i64| m.min(v)).unwrap_or(v));
        }
    }
    let Some(min_val) = min_val else {
        return Err(Error::precision(
            "no certified coefficient left during residue refinement",
        ));
    };
    let scaled = if min_val == 0 {
        g.clone()
    } else {
        let shift = power_of_p(&field, p, -min_val)?;
        g.scale(&shift)
    };

    // working modulus: every coefficient must be known at least mod p
    let mut abs_prec: Option<i64> = None;
    for c in scaled.coeffs() {
        let this = match c.padic_valuation() {
            Some(Valuation::Infinite) => continue,
            Some(Valuation::Exact(_)) | Some(Valuation::AtLeast(_)) => c
                .as_padic()
                .and_then(|x| x.abs_precision())
                .expect("non-exact-zero p-adic has finite absolute precision"),
            None => unreachable!("p-adic coefficient"),
        };
        abs_prec = Some(abs_prec.map(|m: i64| m.min(this)).unwrap_or(this));
    }
    let modulus_exp = abs_prec.unwrap_or_else(|| padic_precision(&field) as i64);
    if modulus_exp < 1 {
        return Err(Error::HenselDegenerate {
            p,
            residue: "-".into(),
            context: "a coefficient is known to fewer than one digit, its residue \
                      mod p is undetermined"
                .into(),
        });
    }
    let modulus_exp = (modulus_exp as u32).min(padic_precision(&field) * 2 + 2);

    // reduction mod p and its roots
    let fp = FieldDescriptor::prime(p)?;
    let reduced = Poly::new(
        fp.clone(),
        scaled
            .coeffs()
            .iter()
            .map(|c| reduce_mod_p(c, p, &fp))
            .collect::<Result<Vec<_>>>()?,
    );
    if reduced.is_zero_poly() {
        return Err(Error::Internal(
            "normalized polynomial reduced to zero mod p".into(),
        ));
    }
    if reduced.degree() == Some(0) {
        return Ok(vec![]);
    }
    let reduced_deriv = reduced.derivative();

    let mut out = vec![];
    for (rbar, _) in prime_roots(&reduced, p)? {
        let r_u64 = rbar.as_prime_residue().expect("residue root");
        let simple = !reduced_deriv.eval(&rbar).is_zero()?;
        if simple {
            out.push(newton_lift(&scaled, p, r_u64, modulus_exp)?);
        } else {
            // recurse on g(r + p s), stripped of its p-power content
            let r_elt = field.from_integer(r_u64 as i64);
            let p_elt = field.from_integer(p as i64);
            let shifted = scaled.compose_affine(&r_elt, &p_elt).trim_zeroish();
            if shifted.is_zero_poly() {
                return Err(Error::HenselDegenerate {
                    p,
                    residue: r_u64.to_string(),
                    context: "recentered polynomial vanished at working precision".into(),
                });
            }
            for s in refine_residues(&shifted, p, depth_budget - 1)? {
                out.push(r_elt.add(&p_elt.mul(&s)));
            }
        }
    }
    Ok(out)
}

/// The element `p^e` (any sign of `e`).
fn power_of_p(field: &FieldDescriptor, p: u64, e: i64) -> Result<FieldElement> {
    let base = field.from_integer(p as i64);
    if e >= 0 {
        Ok(base.pow(e as u64))
    } else {
        base.pow((-e) as u64).inverse()
    }
}

/// Residue of an integral coefficient mod p; exact zeros map to zero.
fn reduce_mod_p(c: &FieldElement, p: u64, fp: &FieldDescriptor) -> Result<FieldElement> {
    let x = c.as_padic().expect("p-adic coefficient");
    match x.to_integer_mod(1) {
        Some(r) => {
            let r: BigInt = r.into();
            Ok(fp.from_bigint(&r))
        }
        None => Err(Error::HenselDegenerate {
            p,
            residue: "-".into(),
            context: "coefficient residue mod p is undetermined at working precision".into(),
        }),
    }
}

/// Newton/Hensel lift of a simple residue root: `g(r) = 0 mod p`,
/// `g'(r) != 0 mod p`, refined to a root mod `p^target`. The result is an
/// element certified to exactly the lifted precision.
fn newton_lift(g: &Poly, p: u64, residue: u64, target: u32) -> Result<FieldElement> {
    let field = g.field().clone();
    let modulus = BigUint::from(p).pow(target);
    let coeffs: Vec<BigUint> = g
        .coeffs()
        .iter()
        .map(|c| {
            c.as_padic()
                .expect("p-adic coefficient")
                .to_integer_mod(target)
                .ok_or_else(|| {
                    Error::precision("coefficient not integral at the lifting precision")
                })
        })
        .collect::<Result<Vec<_>>>()?;
    let deriv: Vec<BigUint> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| (c * BigUint::from(i)) % &modulus)
        .collect();

    let eval = |cs: &[BigUint], x: &BigUint| -> BigUint {
        let mut acc = BigUint::zero();
        for c in cs.iter().rev() {
            acc = (acc * x + c) % &modulus;
        }
        acc
    };

    let mut x = BigUint::from(residue);
    // each Newton step doubles the certified exponent; a fixed iteration
    // count covering `target` keeps the loop simple
    let mut certified = 1u32;
    while certified < target {
        let fx = eval(&coeffs, &x);
        let dx = eval(&deriv, &x);
        let dinv = mod_inverse(&dx, &modulus, p)?;
        let delta = (fx * dinv) % &modulus;
        x = (&x + &modulus - delta) % &modulus;
        certified = certified.saturating_mul(2);
    }
    let as_int: BigInt = x.into();
    let lifted = field.from_bigint(&as_int);
    match lifted {
        FieldElement::Padic(v) => Ok(FieldElement::Padic(v.truncate_to(target as i64))),
        _ => unreachable!("p-adic field"),
    }
}

/// Inverse of `u` mod `p^k` moduli; fails when `u` is divisible by p.
fn mod_inverse(u: &BigUint, modulus: &BigUint, p: u64) -> Result<BigUint> {
    if (u % BigUint::from(p)).is_zero() {
        return Err(Error::HenselDegenerate {
            p,
            residue: "-".into(),
            context: "derivative not invertible during Newton lifting".into(),
        });
    }
    let e = BigInt::from(u.clone()).extended_gcd(&BigInt::from(modulus.clone()));
    Ok(e.x
        .mod_floor(&BigInt::from(modulus.clone()))
        .to_biguint()
        .expect("nonnegative representative"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldDescriptor {
        FieldDescriptor::rational()
    }

    fn q3() -> FieldDescriptor {
        FieldDescriptor::padic(3, 6).unwrap()
    }

    fn root_strings(f: &Poly) -> Vec<(String, usize)> {
        roots_in_field(f)
            .unwrap()
            .into_iter()
            .map(|(r, m)| (r.to_string(), m))
            .collect()
    }

    #[test]
    fn rational_roots_with_denominators() {
        // 6t^2 - 5t + 1 = (2t - 1)(3t - 1)
        let f = Poly::from_integers(&q(), &[1, -5, 6]);
        assert_eq!(root_strings(&f), vec![("1/3".into(), 1), ("1/2".into(), 1)]);
        // t^2 - 2 has no rational roots
        let g = Poly::from_integers(&q(), &[-2, 0, 1]);
        assert!(roots_in_field(&g).unwrap().is_empty());
        // (t-1)^2 (t+2) = t^3 - 3t + 2
        let h = Poly::from_integers(&q(), &[2, -3, 0, 1]);
        assert_eq!(root_strings(&h), vec![("-2".into(), 1), ("1".into(), 2)]);
        // roots at zero: t^2 (t - 4)
        let z = Poly::from_integers(&q(), &[0, 0, -4, 1]);
        assert_eq!(root_strings(&z), vec![("0".into(), 2), ("4".into(), 1)]);
    }

    #[test]
    fn rational_coefficients_are_cleared() {
        // t^2 - 5/2 t + 1 = (t - 2)(t - 1/2)
        let field = q();
        let f = Poly::new(
            field.clone(),
            vec![
                field.from_integer(1),
                field.from_ratio(-5, 2).unwrap(),
                field.from_integer(1),
            ],
        );
        assert_eq!(root_strings(&f), vec![("1/2".into(), 1), ("2".into(), 1)]);
    }

    #[test]
    fn prime_field_roots_by_sweep() {
        let f5 = FieldDescriptor::prime(5).unwrap();
        // t^2 + 1 over F_5: roots 2, 3
        let f = Poly::from_integers(&f5, &[1, 0, 1]);
        assert_eq!(root_strings(&f), vec![("2".into(), 1), ("3".into(), 1)]);
        // no roots over F_3
        let f3 = FieldDescriptor::prime(3).unwrap();
        let g = Poly::from_integers(&f3, &[1, 0, 1]);
        assert!(roots_in_field(&g).unwrap().is_empty());
        // cube roots of unity in F_7: 1, 2, 4
        let f7 = FieldDescriptor::prime(7).unwrap();
        let h = Poly::from_integers(&f7, &[-1, 0, 0, 1]);
        assert_eq!(
            root_strings(&h),
            vec![("1".into(), 1), ("2".into(), 1), ("4".into(), 1)]
        );
    }

    #[test]
    fn linear_solves_avoid_the_sweep_bound() {
        let big = FieldDescriptor::prime(2_147_483_647).unwrap();
        let f = Poly::from_integers(&big, &[-5, 1]);
        assert_eq!(root_strings(&f), vec![("5".into(), 1)]);
        // degree 2 over a huge prime is refused, not attempted
        let g = Poly::from_integers(&big, &[1, 0, 1]);
        assert!(matches!(
            roots_in_field(&g),
            Err(Error::UnsupportedAlgebra(_))
        ));
    }

    #[test]
    fn padic_simple_and_exact_roots() {
        // t^2 - t over Q_3: 0 (exact) and 1
        let f = Poly::from_integers(&q3(), &[0, -1, 1]);
        let roots = roots_in_field(&f).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots[0].0.is_zero().unwrap());
        assert!(roots[1].0.try_eq(&q3().from_integer(1)).unwrap());
        // t^2 - 2 has no roots in Q_3 (2 is not a square mod 3)
        let g = Poly::from_integers(&q3(), &[-2, 0, 1]);
        assert!(roots_in_field(&g).unwrap().is_empty());
        // t^2 - 3 has no roots (odd valuation)
        let h = Poly::from_integers(&q3(), &[-3, 0, 1]);
        assert!(roots_in_field(&h).unwrap().is_empty());
        // t^2 exactly: root 0 with multiplicity 2
        let z = Poly::from_integers(&q3(), &[0, 0, 1]);
        let roots = roots_in_field(&z).unwrap();
        assert_eq!(roots.len(), 1);
        assert!(roots[0].0.is_zero().unwrap());
        assert_eq!(roots[0].1, 2);
    }

    #[test]
    fn padic_square_roots_verified_by_squaring() {
        // 7 = 1 mod 3 is a square in Z_3
        let f = Poly::from_integers(&q3(), &[-7, 0, 1]);
        let roots = roots_in_field(&f).unwrap();
        assert_eq!(roots.len(), 2);
        let seven = q3().from_integer(7);
        for (r, m) in &roots {
            assert_eq!(*m, 1);
            assert!(r.mul(r).try_eq(&seven).unwrap());
        }
        assert!(roots[0].0.add(&roots[1].0).is_zeroish());
    }

    #[test]
    fn padic_double_root_and_residue_collision() {
        // (t - 3)^2: one root of multiplicity 2
        let f = Poly::from_integers(&q3(), &[9, -6, 1]);
        let roots = roots_in_field(&f).unwrap();
        assert_eq!(roots.len(), 1);
        assert!(roots[0].0.try_eq(&q3().from_integer(3)).unwrap());
        assert_eq!(roots[0].1, 2);
        // (t - 1)(t - 4): both roots = 1 mod 3, forcing recursive refinement
        let g = Poly::from_integers(&q3(), &[4, -5, 1]);
        let roots = roots_in_field(&g).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots[0].0.try_eq(&q3().from_integer(1)).unwrap());
        assert!(roots[1].0.try_eq(&q3().from_integer(4)).unwrap());
        // t^2 - 729 = (t - 27)(t + 27): residue 0 repeatedly, three levels deep
        let h = Poly::from_integers(&q3(), &[-729, 0, 1]);
        let roots = roots_in_field(&h).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots[0].0.try_eq(&q3().from_integer(27)).unwrap());
        assert!(roots[1].0.try_eq(&q3().from_integer(-27)).unwrap());
    }

    #[test]
    fn padic_negative_valuation_roots() {
        // (3t - 1)(t - 2) = 3t^2 - 7t + 2: roots 1/3 and 2
        let f = Poly::from_integers(&q3(), &[2, -7, 3]);
        let roots = roots_in_field(&f).unwrap();
        assert_eq!(roots.len(), 2);
        let third = q3().from_ratio(1, 3).unwrap();
        assert!(roots.iter().any(|(r, _)| r.try_eq(&third).unwrap_or(false)));
        assert!(roots
            .iter()
            .any(|(r, _)| r.try_eq(&q3().from_integer(2)).unwrap_or(false)));
    }

    #[test]
    fn padic_precision_wall_reports_only_certified_digits() {
        // 730 - 1 is zero at precision 6: t^2 - (730 - 1) is t^2 - O(3^6).
        // Its roots are +-27 if the hidden value is 729, or +-(3^3 u) for
        // other completions; what is certifiable is "0 mod 3^3, twice".
        let field = q3();
        let hidden = field.from_integer(730).sub(&field.one());
        assert!(hidden.is_zeroish());
        let f = Poly::new(
            field.clone(),
            vec![hidden.neg(), field.zero(), field.one()],
        );
        let roots = roots_in_field(&f).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].1, 2);
        let r = &roots[0].0;
        assert!(r.is_zeroish());
        // membership in 3^3 Z_3 is certified, membership in 3^4 Z_3 is not
        assert!(r.in_neighborhood(3).unwrap());
        assert!(matches!(
            r.in_neighborhood(4),
            Err(Error::PrecisionExhausted { .. })
        ));
    }

    #[test]
    fn padic_double_root_precision_is_clamped() {
        // (t - 3)^2 with coefficients carried mod 3^6 pins the double root
        // only mod 3^3: the result must not claim more digits
        let f = Poly::from_integers(&q3(), &[9, -6, 1]);
        let roots = roots_in_field(&f).unwrap();
        let r = roots[0].0.as_padic().unwrap();
        assert_eq!(r.abs_precision(), Some(3));
    }

    #[test]
    fn factorization_helpers() {
        let n = BigUint::from(2u32 * 2 * 3 * 97);
        let f = factorize(n);
        assert_eq!(f.get(&BigUint::from(2u32)), Some(&2));
        assert_eq!(f.get(&BigUint::from(3u32)), Some(&1));
        assert_eq!(f.get(&BigUint::from(97u32)), Some(&1));
        // a semiprime beyond the trial division range
        let big = BigUint::from(1_000_003u64) * BigUint::from(1_000_033u64);
        let f = factorize(big);
        assert_eq!(f.len(), 2);
        assert!(f.values().all(|e| *e == 1));
        assert_eq!(divisors(&BigUint::from(12u32)).unwrap().len(), 6);
    }
}

//! Property-based laws for field arithmetic, spectra, entourages, the
//! Boolean calculus of idempotents, and serialization round trips.

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gelfand::algebra::{AlgElement, Algebra};
use gelfand::field::{FieldDescriptor, FieldElement, Magnitude};
use gelfand::files::{parse_algebra_str, parse_field_flag, serialize_algebra};
use gelfand::linalg::Matrix;
use gelfand::poly::Poly;

// ---- strategies --------------------------------------------------------

fn rational() -> FieldDescriptor {
    FieldDescriptor::rational()
}

prop_compose! {
    fn arb_rational()(num in -1000i64..=1000, den in 1i64..=60) -> FieldElement {
        rational().from_integer(num).div(&rational().from_integer(den)).expect("den != 0")
    }
}

prop_compose! {
    fn arb_prime_field()(idx in 0usize..4) -> FieldDescriptor {
        let p = [2u64, 3, 5, 7][idx];
        FieldDescriptor::prime(p).expect("small primes")
    }
}

fn random_scalar(rng: &mut ChaCha8Rng, field: &FieldDescriptor) -> FieldElement {
    match field {
        FieldDescriptor::Rational => field.from_integer(rng.gen_range(-4..=4)),
        FieldDescriptor::Prime { p } => field.from_integer(rng.gen_range(0..*p as i64)),
        FieldDescriptor::Padic { .. } => field.from_integer(rng.gen_range(-9..=9)),
    }
}

fn random_invertible(rng: &mut ChaCha8Rng, field: &FieldDescriptor, n: usize) -> Matrix {
    loop {
        let rows: Vec<Vec<FieldElement>> = (0..n)
            .map(|_| (0..n).map(|_| random_scalar(rng, field)).collect())
            .collect();
        let m = Matrix::from_rows(field, rows);
        if m.inverse().expect("exact arithmetic").is_some() {
            return m;
        }
    }
}

/// A random validated algebra over F_p: a direct sum of polynomial
/// quotients in a randomly changed basis. Deterministic in the seed.
fn seeded_algebra(seed: u64, field: &FieldDescriptor, dim: usize) -> Algebra {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut acc: Option<Algebra> = None;
    let mut left = dim;
    while left > 0 {
        let d = rng.gen_range(1..=left);
        let mut coeffs: Vec<FieldElement> =
            (0..d).map(|_| random_scalar(&mut rng, field)).collect();
        coeffs.push(field.one());
        let block = Algebra::polynomial_quotient(field, &Poly::new(field.clone(), coeffs))
            .expect("monic quotient");
        acc = Some(match acc {
            None => block,
            Some(a) => Algebra::direct_sum(&a, &block).expect("direct sum"),
        });
        left -= d;
    }
    let p = random_invertible(&mut rng, field, dim);
    acc.expect("dim >= 1").conjugate(&p).expect("conjugation preserves validity")
}

fn seeded_element(seed: u64, a: &Algebra) -> AlgElement {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..a.dim()).map(|_| random_scalar(&mut rng, a.field())).collect()
}

/// A random sum of primitive idempotents of a scrambled pointwise algebra.
fn seeded_idempotent(a: &Algebra, atoms: &[AlgElement], mask: u32) -> AlgElement {
    let mut e = a.zero();
    for (i, atom) in atoms.iter().enumerate() {
        if mask >> i & 1 == 1 {
            e = a.add(&e, atom);
        }
    }
    e
}

fn scrambled_pointwise(seed: u64, field: &FieldDescriptor, n: usize) -> Algebra {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let labels: Vec<String> = (0..n).map(|i| format!("z{i}")).collect();
    let plain = Algebra::pointwise(field, &labels).expect("pointwise");
    let p = random_invertible(&mut rng, field, n);
    plain.conjugate(&p).expect("conjugate")
}

fn matrices_eq(u: &Matrix, v: &Matrix) -> bool {
    u.rows() == v.rows()
        && u.cols() == v.cols()
        && (0..u.rows()).all(|r| {
            (0..u.cols()).all(|c| u.get(r, c).try_eq(v.get(r, c)).expect("exact"))
        })
}

fn spectra_equal(a: &Algebra, mut u: Vec<FieldElement>, mut v: Vec<FieldElement>) -> bool {
    let _ = a;
    u.sort_by(|x, y| x.canonical_cmp(y));
    v.sort_by(|x, y| x.canonical_cmp(y));
    u.len() == v.len()
        && u.iter().zip(&v).all(|(x, y)| x.try_eq(y).expect("exact"))
}

// ---- rational field laws ------------------------------------------------

proptest! {
    #[test]
    fn rational_add_commutes(a in arb_rational(), b in arb_rational()) {
        prop_assert!(a.add(&b).try_eq(&b.add(&a)).expect("exact"));
    }

    #[test]
    fn rational_mul_commutes(a in arb_rational(), b in arb_rational()) {
        prop_assert!(a.mul(&b).try_eq(&b.mul(&a)).expect("exact"));
    }

    #[test]
    fn rational_mul_associates(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
        prop_assert!(a.mul(&b.mul(&c)).try_eq(&a.mul(&b).mul(&c)).expect("exact"));
    }

    #[test]
    fn rational_distributes(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
        let lhs = a.mul(&b.add(&c));
        let rhs = a.mul(&b).add(&a.mul(&c));
        prop_assert!(lhs.try_eq(&rhs).expect("exact"));
    }

    #[test]
    fn rational_subtraction_cancels(a in arb_rational()) {
        prop_assert!(a.sub(&a).is_zero().expect("exact"));
    }

    #[test]
    fn rational_inverse_law(a in arb_rational()) {
        if !a.is_zero().expect("exact") {
            let inv = a.inverse().expect("nonzero");
            prop_assert!(a.mul(&inv).try_eq(&rational().one()).expect("exact"));
        }
    }

    #[test]
    fn rational_abs_is_multiplicative(a in arb_rational(), b in arb_rational()) {
        let lhs = a.mul(&b).abs_value().expect("exact");
        let rhs = a.abs_value().expect("exact").mul(&b.abs_value().expect("exact"));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rational_cmp_antisymmetric(a in arb_rational(), b in arb_rational()) {
        prop_assert_eq!(a.canonical_cmp(&b), b.canonical_cmp(&a).reverse());
    }
}

// ---- prime field laws ---------------------------------------------------

proptest! {
    #[test]
    fn prime_field_fermat(field in arb_prime_field(), n in 0i64..210) {
        let p = match field {
            FieldDescriptor::Prime { p } => p,
            _ => unreachable!(),
        };
        let a = field.from_integer(n);
        let mut pow = field.one();
        for _ in 0..p {
            pow = pow.mul(&a);
        }
        prop_assert!(pow.try_eq(&a).expect("exact"), "a^p = a must hold in F_p");
    }

    #[test]
    fn prime_field_inverse_law(field in arb_prime_field(), n in 1i64..210) {
        let a = field.from_integer(n);
        if !a.is_zero().expect("exact") {
            let inv = a.inverse().expect("nonzero");
            prop_assert!(a.mul(&inv).try_eq(&field.one()).expect("exact"));
        }
    }
}

// ---- p-adic valuation laws ----------------------------------------------

proptest! {
    #[test]
    fn padic_abs_is_multiplicative(u in 0usize..4, e in 0i64..3, v in 0usize..4, f in 0i64..3) {
        let q3 = FieldDescriptor::padic(3, 8).expect("prime");
        let units = [1i64, 2, 4, 5];
        let a = q3.from_integer(units[u] * 3i64.pow(e as u32));
        let b = q3.from_integer(units[v] * 3i64.pow(f as u32));
        let lhs = a.mul(&b).abs_value().expect("valuation within precision");
        let rhs = a.abs_value().expect("exact").mul(&b.abs_value().expect("exact"));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn padic_ultrametric_bound(u in 0usize..4, e in 0i64..4, v in 0usize..4, f in 0i64..4) {
        let q3 = FieldDescriptor::padic(3, 8).expect("prime");
        let units = [1i64, 2, 4, 5];
        let a = q3.from_integer(units[u] * 3i64.pow(e as u32));
        let b = q3.from_integer(units[v] * 3i64.pow(f as u32));
        let sum = a.add(&b);
        if !matches!(sum.abs_value(), Ok(_)) {
            // The sum cancelled below the stored precision; the bound is
            // then vacuous at this precision.
            return Ok(());
        }
        let abs_sum = sum.abs_value().expect("checked");
        let max = {
            let aa = a.abs_value().expect("exact");
            let bb = b.abs_value().expect("exact");
            if aa.partial_cmp(&bb) == Some(std::cmp::Ordering::Less) { bb } else { aa }
        };
        prop_assert!(
            abs_sum.partial_cmp(&max) != Some(std::cmp::Ordering::Greater),
            "|a + b| must not exceed max(|a|, |b|)"
        );
    }
}

// ---- regular representation and spectra -----------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn regular_representation_is_multiplicative(
        seed in any::<u64>(),
        field in arb_prime_field(),
        dim in 1usize..=4,
        xs in any::<u64>(),
        ys in any::<u64>(),
    ) {
        let a = seeded_algebra(seed, &field, dim);
        let x = seeded_element(xs, &a);
        let y = seeded_element(ys, &a);
        let lhs = a.regular_matrix(&a.mul(&x, &y));
        let rhs = a.regular_matrix(&x).mul(&a.regular_matrix(&y));
        prop_assert!(matrices_eq(&lhs, &rhs));
    }

    #[test]
    fn unit_acts_as_identity_matrix(
        seed in any::<u64>(),
        field in arb_prime_field(),
        dim in 1usize..=4,
    ) {
        let a = seeded_algebra(seed, &field, dim);
        let l_one = a.regular_matrix(&a.one());
        let id = Matrix::identity(&field, dim);
        prop_assert!(matrices_eq(&l_one, &id));
    }

    #[test]
    fn invertible_iff_spectrum_avoids_zero(
        seed in any::<u64>(),
        field in arb_prime_field(),
        dim in 1usize..=4,
        xs in any::<u64>(),
    ) {
        let a = seeded_algebra(seed, &field, dim);
        let x = seeded_element(xs, &a);
        let spectrum = a.spectrum(&x).expect("exact");
        let zero_in = spectrum.iter().any(|l| l.is_zero().expect("exact"));
        match a.invert(&x).expect("exact") {
            Some(inv) => {
                prop_assert!(!zero_in, "invertible elements keep 0 out of the spectrum");
                prop_assert!(a.elements_eq(&a.mul(&x, &inv), &a.one()).expect("exact"));
            }
            None => prop_assert!(zero_in, "non-invertible elements have 0 in the spectrum"),
        }
    }

    #[test]
    fn cayley_hamilton_annihilates(
        seed in any::<u64>(),
        field in arb_prime_field(),
        dim in 1usize..=4,
        xs in any::<u64>(),
    ) {
        let a = seeded_algebra(seed, &field, dim);
        let x = seeded_element(xs, &a);
        let chi = a.regular_matrix(&x).charpoly();
        let mut acc = a.zero();
        for (i, c) in chi.coeffs().iter().enumerate() {
            acc = a.add(&acc, &a.scale(c, &a.pow_element(&x, i as u32)));
        }
        prop_assert!(a.is_zero_element(&acc), "charpoly(L_x) must annihilate x");
    }

    #[test]
    fn spectrum_shifts_with_unit_translates(
        seed in any::<u64>(),
        field in arb_prime_field(),
        dim in 1usize..=4,
        xs in any::<u64>(),
        shift in 0i64..7,
    ) {
        let a = seeded_algebra(seed, &field, dim);
        let x = seeded_element(xs, &a);
        let c = field.from_integer(shift);
        let shifted = a.add(&x, &a.scale(&c, &a.one()));
        let expected: Vec<FieldElement> =
            a.spectrum(&x).expect("exact").iter().map(|l| l.add(&c)).collect();
        let actual = a.spectrum(&shifted).expect("exact");
        prop_assert!(spectra_equal(&a, expected, actual));
    }

    #[test]
    fn spectrum_scales_with_nonzero_factors(
        seed in any::<u64>(),
        field in arb_prime_field(),
        dim in 1usize..=4,
        xs in any::<u64>(),
        factor in 1i64..7,
    ) {
        let a = seeded_algebra(seed, &field, dim);
        let c = field.from_integer(factor);
        if c.is_zero().expect("exact") {
            return Ok(());
        }
        let x = seeded_element(xs, &a);
        let scaled = a.scale(&c, &x);
        let expected: Vec<FieldElement> =
            a.spectrum(&x).expect("exact").iter().map(|l| l.mul(&c)).collect();
        let actual = a.spectrum(&scaled).expect("exact");
        prop_assert!(spectra_equal(&a, expected, actual));
    }

    #[test]
    fn spectral_radius_undefined_iff_spectrum_empty(
        seed in any::<u64>(),
        field in arb_prime_field(),
        dim in 1usize..=4,
        xs in any::<u64>(),
    ) {
        let a = seeded_algebra(seed, &field, dim);
        let x = seeded_element(xs, &a);
        let spectrum = a.spectrum(&x).expect("exact");
        let radius = a.spectral_radius(&x).expect("exact");
        prop_assert_eq!(radius.is_none(), spectrum.is_empty());
    }

    #[test]
    fn spectral_radius_scales_over_q(
        seed in any::<u64>(),
        dim in 1usize..=3,
        xs in any::<u64>(),
        num in -6i64..=6,
        den in 1i64..=4,
    ) {
        let field = rational();
        let a = seeded_algebra(seed, &field, dim);
        let x = seeded_element(xs, &a);
        let c = field.from_integer(num).div(&field.from_integer(den)).expect("den != 0");
        if c.is_zero().expect("exact") {
            return Ok(());
        }
        if let Some(r) = a.spectral_radius(&x).expect("exact") {
            let scaled = a.spectral_radius(&a.scale(&c, &x)).expect("exact");
            let expected = c.abs_value().expect("exact").mul(&r);
            prop_assert_eq!(scaled, Some(expected));
        }
    }
}

// ---- entourage laws -------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn entourages_are_reflexive(
        seed in any::<u64>(),
        field in arb_prime_field(),
        dim in 1usize..=4,
        xs in any::<u64>(),
        k in 0i64..5,
    ) {
        let a = seeded_algebra(seed, &field, dim);
        let x = seeded_element(xs, &a);
        prop_assert!(a.in_entourage(&x, &x, k).expect("exact"));
    }

    #[test]
    fn entourages_are_symmetric(
        seed in any::<u64>(),
        field in arb_prime_field(),
        dim in 1usize..=4,
        xs in any::<u64>(),
        ys in any::<u64>(),
        k in 0i64..5,
    ) {
        let a = seeded_algebra(seed, &field, dim);
        let x = seeded_element(xs, &a);
        let y = seeded_element(ys, &a);
        prop_assert_eq!(
            a.in_entourage(&x, &y, k).expect("exact"),
            a.in_entourage(&y, &x, k).expect("exact")
        );
    }

    #[test]
    fn entourages_shrink_as_k_grows(
        seed in any::<u64>(),
        dim in 1usize..=3,
        xs in any::<u64>(),
        ys in any::<u64>(),
        k in 0i64..5,
    ) {
        let a = seeded_algebra(seed, &rational(), dim);
        let x = seeded_element(xs, &a);
        let y = seeded_element(ys, &a);
        let finer = a.in_entourage(&x, &y, k + 1).expect("exact");
        let coarser = a.in_entourage(&x, &y, k).expect("exact");
        prop_assert!(!finer || coarser, "V_{{k+1}} must be contained in V_k");
    }
}

// ---- Boolean calculus of idempotents ---------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn boolean_de_morgan_and_absorption(
        seed in any::<u64>(),
        field in arb_prime_field(),
        n in 1usize..=5,
        xm in any::<u32>(),
        ym in any::<u32>(),
    ) {
        let a = scrambled_pointwise(seed, &field, n);
        let atoms = a.primitive_idempotents(1_000_000).expect("split algebra");
        let x = seeded_idempotent(&a, &atoms, xm & ((1 << n) - 1));
        let y = seeded_idempotent(&a, &atoms, ym & ((1 << n) - 1));

        let eq = |u: &AlgElement, v: &AlgElement| a.elements_eq(u, v).expect("exact");
        let not_and = a.bool_not(&a.bool_and(&x, &y).expect("idem")).expect("idem");
        let or_nots =
            a.bool_or(&a.bool_not(&x).expect("idem"), &a.bool_not(&y).expect("idem"))
                .expect("idem");
        prop_assert!(eq(&not_and, &or_nots), "De Morgan for the meet");

        let absorbed = a.bool_and(&x, &a.bool_or(&x, &y).expect("idem")).expect("idem");
        prop_assert!(eq(&absorbed, &x), "absorption");

        let meet_complement = a.bool_and(&x, &a.bool_not(&x).expect("idem")).expect("idem");
        prop_assert!(a.is_zero_element(&meet_complement), "x and not-x meet to zero");
    }

    #[test]
    fn orthogonalize_reproduces_the_input(
        seed in any::<u64>(),
        field in arb_prime_field(),
        n in 1usize..=4,
        masks in prop::collection::vec(any::<u32>(), 1..=3),
        coeffs in prop::collection::vec(0i64..7, 3),
    ) {
        let a = scrambled_pointwise(seed, &field, n);
        let atoms = a.primitive_idempotents(1_000_000).expect("split algebra");
        let terms: Vec<(FieldElement, AlgElement)> = masks
            .iter()
            .zip(&coeffs)
            .map(|(m, c)| {
                (field.from_integer(*c), seeded_idempotent(&a, &atoms, m & ((1 << n) - 1)))
            })
            .collect();
        let out = a.orthogonalize(&terms).expect("sums of atoms are idempotent");

        let mut lhs = a.zero();
        for (c, e) in &terms {
            lhs = a.add(&lhs, &a.scale(c, e));
        }
        let mut rhs = a.zero();
        for t in &out {
            rhs = a.add(&rhs, &a.scale(&t.coefficient, &t.atom));
        }
        prop_assert!(a.elements_eq(&lhs, &rhs).expect("exact"));

        for (i, t) in out.iter().enumerate() {
            prop_assert!(a.is_idempotent(&t.atom).expect("exact"));
            prop_assert!(!t.coefficient.is_zeroish(), "zero coefficients are dropped");
            for u in &out[i + 1..] {
                prop_assert!(a.is_zero_element(&a.mul(&t.atom, &u.atom)));
            }
        }
    }
}

// ---- serialization round trips ---------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn algebra_serialization_round_trips(
        seed in any::<u64>(),
        field in arb_prime_field(),
        dim in 1usize..=4,
    ) {
        let a = seeded_algebra(seed, &field, dim);
        let text = serialize_algebra(&a);
        let b = parse_algebra_str(&text, "round-trip").expect("canonical output re-parses");
        prop_assert_eq!(a.dim(), b.dim());
        prop_assert_eq!(a.field(), b.field());
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let pa = a.mul(&a.basis_element(i), &a.basis_element(j));
                let pb = b.mul(&b.basis_element(i), &b.basis_element(j));
                prop_assert!(a.elements_eq(&pa, &pb).expect("exact"));
            }
        }
        prop_assert_eq!(text.clone(), serialize_algebra(&b), "serialization is a fixed point");
    }

    #[test]
    fn field_flags_round_trip(pidx in 0usize..4, precision in 1u32..=12) {
        let p = [2u64, 3, 5, 7][pidx];
        let prime = parse_field_flag(&format!("f{p}")).expect("valid flag");
        prop_assert_eq!(prime, FieldDescriptor::prime(p).expect("prime"));
        let padic = parse_field_flag(&format!("q{p}:{precision}")).expect("valid flag");
        prop_assert_eq!(padic, FieldDescriptor::padic(p, precision).expect("prime"));
        prop_assert_eq!(parse_field_flag("q").expect("valid flag"), rational());
    }
}

// ---- magnitude ordering ------------------------------------------------------

proptest! {
    #[test]
    fn magnitude_product_respects_zero_and_one(num in -60i64..=60, den in 1i64..=12) {
        let f = rational();
        let a = f.from_integer(num).div(&f.from_integer(den)).expect("den != 0");
        let m = a.abs_value().expect("exact");
        prop_assert_eq!(m.clone().mul(&Magnitude::One), m.clone());
        prop_assert_eq!(m.mul(&Magnitude::Zero), Magnitude::Zero);
    }
}

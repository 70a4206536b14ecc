// Spectra of elements in finite-dimensional commutative algebras.
//
// The spectrum of `a` is the set of base-field roots of the
// characteristic polynomial of multiplication by `a`; it can be empty,
// and then the spectral radius is undefined rather than zero. The
// spectral entourages V_k = {(a, b) : every eigenvalue of b - a lies in
// the k-th neighborhood of 0} give the canonical uniformity.

use gelfand::algebra::Algebra;
use gelfand::field::FieldDescriptor;
use gelfand::poly::Poly;
use gelfand::Result;

fn main() {
    run().expect("spectra_and_radius example runs");
}

pub fn run() -> Result<()> {
    let q = FieldDescriptor::rational();

    // Q[x]/(x^2 - 1): x has spectrum {-1, 1}.
    let split = Algebra::polynomial_quotient(&q, &Poly::from_integers(&q, &[-1, 0, 1]))?;
    let x = split.basis_element(1);
    let spec = split.spectrum(&x)?;
    println!(
        "Q[x]/(x^2-1): spectrum of x = {{{}}}",
        spec.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
    );
    println!("  spectral radius: {}", split.spectral_radius(&x)?.expect("nonempty"));
    println!("  invertible: {}", split.invert(&x)?.is_some());

    // Q[x]/(x^2 + 1): x^2 + 1 has no rational roots, so the spectrum of x
    // is empty even though x is invertible (this is the Gaussian field).
    let gauss = Algebra::polynomial_quotient(&q, &Poly::from_integers(&q, &[1, 0, 1]))?;
    let i = gauss.basis_element(1);
    println!("Q[i]: spectrum of i is empty: {}", gauss.spectrum(&i)?.is_empty());
    match gauss.spectral_radius(&i)? {
        Some(m) => println!("  spectral radius: {m}"),
        None => println!("  spectral radius: undefined (empty spectrum), not 0"),
    }
    println!("  yet i is invertible: {}", gauss.invert(&i)?.is_some());

    // Dual numbers Q[x]/(x^2): x is nilpotent, spectrum {0}, radius 0.
    let dual = Algebra::polynomial_quotient(&q, &Poly::from_integers(&q, &[0, 0, 1]))?;
    let eps = dual.basis_element(1);
    println!(
        "dual numbers: spectrum of eps = {{{}}}, radius = {}",
        dual.spectrum(&eps)?.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", "),
        dual.spectral_radius(&eps)?.expect("nonempty")
    );

    // Entourages: perturbing x by a small scalar keeps (x, x + c) inside
    // V_k exactly when |c| < 2^-k, since sigma(c * 1) = {c}.
    let c = q.from_ratio(1, 8)?;
    let x_shift = split.add(&x, &split.scale(&c, &split.one()));
    for k in 0..5 {
        println!(
            "  (x, x + 1/8) in V_{k}: {}",
            split.in_entourage(&x, &x_shift, k)?
        );
    }

    // Over F_p the filter is discrete, so V_0 already pins spectra exactly.
    let f5 = FieldDescriptor::prime(5)?;
    let pointwise = Algebra::pointwise(&f5, &labels(&["u", "v", "w"]))?;
    let g = pointwise.add(
        &pointwise.basis_element(0),
        &pointwise.scale(&f5.from_integer(3), &pointwise.basis_element(2)),
    );
    println!(
        "F_5^3: spectrum of (1,0,3) = {{{}}}",
        pointwise.spectrum(&g)?.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
    );
    Ok(())
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

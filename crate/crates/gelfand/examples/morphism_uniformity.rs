// Unital morphisms shrink spectra and preserve spectral entourages.
//
// For any unital algebra morphism phi: A -> B, sigma(phi(a)) is a
// subset of sigma(a): invertibility of a - lambda transports along phi.
// Consequently (phi(a), phi(b)) lies in the entourage V_k whenever
// (a, b) does -- morphisms are uniformly continuous for the canonical
// uniformity, with the identity as modulus.

use gelfand::algebra::Algebra;
use gelfand::duality::{pullback, FiniteSpace, SpaceMap};
use gelfand::field::FieldDescriptor;
use gelfand::Result;

fn main() {
    run().expect("morphism_uniformity example runs");
}

fn set_text(vals: &[gelfand::field::FieldElement]) -> String {
    let items: Vec<String> = vals.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

pub fn run() -> Result<()> {
    let q = FieldDescriptor::rational();

    // The pullback of the inclusion {p, q} -> {p, q, r} restricts a
    // function on three points to two of them: a genuine quotient of
    // algebras C(X) -> C(Y).
    let big = FiniteSpace::new(vec!["p".into(), "q".into(), "r".into()])?;
    let small = FiniteSpace::new(vec!["p".into(), "q".into()])?;
    let include = SpaceMap::new(small.clone(), big.clone(), vec![0, 1])?;
    let phi = pullback(&q, &include)?;

    // a = (2, 3, 7) on three points has spectrum {2, 3, 7}; its
    // restriction (2, 3) loses the eigenvalue 7.
    let a3: &Algebra = phi.source();
    let a = vec![q.from_integer(2), q.from_integer(3), q.from_integer(7)];
    let fa = phi.apply(&a);
    println!("sigma(a)      = {}", set_text(&a3.spectrum(&a)?));
    println!("sigma(phi(a)) = {}", set_text(&phi.target().spectrum(&fa)?));

    // Entourage preservation: perturb a by 1/4 at one point. The pair
    // (a, b) lies in V_1 (all eigenvalues of b - a below 1/2), and so
    // does the image pair, at the same index.
    let mut b = a.clone();
    b[1] = b[1].add(&q.from_ratio(1, 4)?);
    let fb = phi.apply(&b);
    for k in 0..4 {
        let source_in = a3.in_entourage(&a, &b, k)?;
        let target_in = phi.target().in_entourage(&fa, &fb, k)?;
        println!("k = {k}: (a,b) in V_k: {source_in:5}  (phi a, phi b) in V_k: {target_in}");
        assert!(!source_in || target_in, "morphisms preserve entourages");
    }
    Ok(())
}

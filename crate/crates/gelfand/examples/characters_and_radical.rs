// Characters, maximal ideals, and the Jacobson radical.
//
// A character is a unital algebra morphism into the base field; its
// kernel is a maximal ideal with residue field F. The algebra is
// "Gelfand" when the character count matches the dimension of the
// semisimple quotient A/Jrad, i.e. when every maximal quotient is F.

use gelfand::algebra::Algebra;
use gelfand::field::FieldDescriptor;
use gelfand::poly::Poly;
use gelfand::spectrum::{check_gelfand, enumerate_characters, DEFAULT_SEARCH_BUDGET};
use gelfand::Result;

fn main() {
    run().expect("characters_and_radical example runs");
}

fn report(name: &str, a: &Algebra) -> Result<()> {
    let chars = enumerate_characters(a, DEFAULT_SEARCH_BUDGET)?;
    let rad = a.jacobson_radical()?;
    let check = check_gelfand(a, DEFAULT_SEARCH_BUDGET)?;
    println!("{name}:");
    for chi in &chars {
        println!(
            "  character ({})",
            chi.values().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
        );
    }
    println!("  radical rank {}; Gelfand: {}", rad.len(), check.holds);
    for v in &rad {
        println!("    radical basis vector {}", a.render_element(v));
    }
    Ok(())
}

pub fn run() -> Result<()> {
    let q = FieldDescriptor::rational();
    let f5 = FieldDescriptor::prime(5)?;

    // Split and semisimple: two characters, x -> 1 and x -> -1.
    let split = Algebra::polynomial_quotient(&q, &Poly::from_integers(&q, &[-1, 0, 1]))?;
    report("Q[x]/(x^2-1)", &split)?;

    // 2 is not a square mod 5, so x^2 - 2 is irreducible over F_5: the
    // algebra is a field extension, semisimple but not Gelfand (its one
    // maximal quotient is F_25, not F_5), and it has no characters.
    let nonres = Algebra::polynomial_quotient(&f5, &Poly::from_integers(&f5, &[-2, 0, 1]))?;
    report("F_5[x]/(x^2-2)", &nonres)?;

    // Dual numbers: one character through the nilpotent quotient, radical
    // of rank one. Gelfand but not semisimple.
    let dual = Algebra::polynomial_quotient(&q, &Poly::from_integers(&q, &[0, 0, 1]))?;
    report("Q[x]/(x^2)", &dual)?;

    // Characters respect multiplication by construction; evaluating one
    // at a product shows it.
    let chars = enumerate_characters(&split, DEFAULT_SEARCH_BUDGET)?;
    let chi = &chars[0];
    let x = split.basis_element(1);
    let sq = split.mul(&x, &x);
    println!(
        "multiplicativity: chi(x)^2 = {}, chi(x^2) = {}",
        chi.evaluate(&x).mul(&chi.evaluate(&x)),
        chi.evaluate(&sq)
    );
    Ok(())
}

// The Boolean algebra of idempotents and orthogonal decompositions.
//
// Idempotents form a Boolean algebra under e' = 1-e, e AND f = ef,
// e OR f = e+f-ef. Every linear combination of idempotents rewrites over
// the pairwise-orthogonal "atoms" cut out by full sign patterns, and the
// primitive idempotents of a Gelfand algebra are exactly the atoms
// matching its characters, lifted through the radical by Newton steps.

use gelfand::algebra::Algebra;
use gelfand::field::FieldDescriptor;
use gelfand::poly::Poly;
use gelfand::spectrum::DEFAULT_SEARCH_BUDGET;
use gelfand::Result;

fn main() {
    run().expect("boolean_idempotents example runs");
}

pub fn run() -> Result<()> {
    let q = FieldDescriptor::rational();

    // A function algebra on three points: indicators e_0, e_1, e_2.
    let labels: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
    let alg = Algebra::pointwise(&q, &labels)?;
    let e0 = alg.basis_element(0);
    let e1 = alg.basis_element(1);

    println!("Boolean operations on indicator functions:");
    println!("  not e0       = {}", alg.render_element(&alg.bool_not(&e0)?));
    println!("  e0 and e1    = {}", alg.render_element(&alg.bool_and(&e0, &e1)?));
    println!("  e0 or e1     = {}", alg.render_element(&alg.bool_or(&e0, &e1)?));

    // Orthogonalize 2e + 3f for overlapping idempotents e = e0 + e1 and
    // f = e1 + e2: the atoms are e AND f = e1, e AND NOT f = e0,
    // NOT e AND f = e2, with coefficients 5, 2, 3.
    let e = alg.add(&e0, &e1);
    let f = alg.add(&e1, &alg.basis_element(2));
    let two = q.from_integer(2);
    let three = q.from_integer(3);
    let terms = vec![(two, e), (three, f)];
    println!("orthogonalizing 2e + 3f with e = e0+e1, f = e1+e2:");
    for t in alg.orthogonalize(&terms)? {
        let pattern: Vec<String> = t
            .pattern
            .iter()
            .enumerate()
            .map(|(i, &pos)| if pos { format!("t{i}") } else { format!("!t{i}") })
            .collect();
        println!(
            "  {} * [{}] = {} * ({})",
            t.coefficient,
            pattern.join("&"),
            t.coefficient,
            alg.render_element(&t.atom)
        );
    }

    // Primitive idempotents through a radical: Q[x]/(x^3 - x^2) has a
    // nilpotent part, and the section of the semisimple quotient need not
    // consist of idempotents; Newton iteration e <- 3e^2 - 2e^3 repairs
    // the lift exactly.
    let cubic = Algebra::polynomial_quotient(&q, &Poly::from_integers(&q, &[0, 0, -1, 1]))?;
    let atoms = cubic.primitive_idempotents(DEFAULT_SEARCH_BUDGET)?;
    println!("primitive idempotents of Q[x]/(x^3 - x^2):");
    let mut total = cubic.sub(&cubic.one(), &cubic.one());
    for a in &atoms {
        println!("  {}", cubic.render_element(a));
        assert!(cubic.is_idempotent(a)?);
        total = cubic.add(&total, a);
    }
    assert!(cubic.elements_eq(&total, &cubic.one())?);
    println!("  (orthogonal, idempotent, and summing to 1 -- verified exactly)");

    // They do not span here: the algebra has a radical, so it is not a
    // product of base fields.
    println!(
        "  idempotents span the algebra: {}",
        cubic.idempotents_span_algebra(DEFAULT_SEARCH_BUDGET)?
    );
    Ok(())
}

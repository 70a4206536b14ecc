// Deciding whether an algebra is a product of copies of its base field.
//
// `characterize` combines three exact checks -- Gelfand (characters
// match the semisimple dimension), semisimple (trivial Jacobson
// radical), and idempotents spanning -- and on success returns a
// verified isomorphism onto the function algebra of the character
// space. Failures carry the reasons.

use gelfand::algebra::Algebra;
use gelfand::duality::{characterize, Verdict};
use gelfand::field::FieldDescriptor;
use gelfand::linalg::Matrix;
use gelfand::poly::Poly;
use gelfand::spectrum::DEFAULT_SEARCH_BUDGET as BUDGET;
use gelfand::Result;

fn main() {
    run().expect("characterize_products example runs");
}

fn verdict_line(name: &str, a: &Algebra) -> Result<()> {
    match characterize(a, BUDGET)? {
        Verdict::IsContinuousFunctionAlgebra { space, iso, .. } => {
            println!("{name}: function algebra on {} point(s)", space.len());
            println!("  isomorphism matrix has {} rows (verified bijective)", iso.matrix().rows());
        }
        Verdict::Fails { reasons } => {
            println!("{name}: fails");
            for r in &reasons {
                println!("  - {r}");
            }
        }
    }
    Ok(())
}

pub fn run() -> Result<()> {
    let q = FieldDescriptor::rational();
    let f5 = FieldDescriptor::prime(5)?;

    // F_5 x F_5 in a scrambled basis: conjugating the pointwise algebra
    // by an invertible matrix hides the product structure, and the
    // characterization recovers it with an explicit isomorphism.
    let labels: Vec<String> = ["u", "v"].iter().map(|s| s.to_string()).collect();
    let plain = Algebra::pointwise(&f5, &labels)?;
    let p = Matrix::from_rows(
        &f5,
        vec![
            vec![f5.from_integer(1), f5.from_integer(2)],
            vec![f5.from_integer(1), f5.from_integer(3)],
        ],
    );
    let scrambled = plain.conjugate(&p)?;
    verdict_line("scrambled F_5 x F_5", &scrambled)?;

    // x^2 - 2 is irreducible over F_5 (2 is a quadratic non-residue):
    // the quotient is a field, but the wrong one.
    let nonres = Algebra::polynomial_quotient(&f5, &Poly::from_integers(&f5, &[-2, 0, 1]))?;
    verdict_line("F_5[x]/(x^2-2)", &nonres)?;

    // A nilpotent extension fails semisimplicity (and spanning).
    let dual = Algebra::polynomial_quotient(&q, &Poly::from_integers(&q, &[0, 0, 1]))?;
    verdict_line("Q[x]/(x^2)", &dual)?;

    // Q[x]/(x^2+1) is the Gaussian field: semisimple, yet not Gelfand,
    // because its single maximal quotient is a proper extension of Q.
    let gauss = Algebra::polynomial_quotient(&q, &Poly::from_integers(&q, &[1, 0, 1]))?;
    verdict_line("Q[i]", &gauss)?;
    Ok(())
}

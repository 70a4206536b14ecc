// Exact arithmetic in the three supported base fields and their
// neighborhood filters: archimedean balls over Q, the discrete filter
// over F_p, and the valuation balls of Q_p at fixed working precision.

use gelfand::field::FieldDescriptor;
use gelfand::Result;

fn main() {
    run().expect("exact_fields example runs");
}

pub fn run() -> Result<()> {
    // Rationals: arbitrary-precision fractions, dyadic neighborhoods
    // U_k = { x : |x| < 2^-k }.
    let q = FieldDescriptor::rational();
    let x = q.from_ratio(2, 3)?;
    let y = q.from_ratio(-1, 6)?;
    let sum = x.add(&y);
    println!("over Q: 2/3 + (-1/6) = {sum}, |sum| = {}", sum.abs_value()?);
    println!("  1/2 in U_0 (|.| < 1): {}", sum.in_neighborhood(0)?);
    println!("  1/2 in U_1 (|.| < 1/2): {}", sum.in_neighborhood(1)?);

    // Prime field: residues with the discrete filter, where every
    // neighborhood of 0 is {0} itself.
    let f7 = FieldDescriptor::prime(7)?;
    let a = f7.from_integer(5);
    let b = a.inverse()?;
    println!("over F_7: 5^-1 = {b}, 5 * 5^-1 = {}", a.mul(&b));
    println!("  nonzero element in any neighborhood of 0: {}", a.in_neighborhood(3)?);

    // p-adic field at 6 significant digits: neighborhoods are the cosets
    // p^k Z_p, and |x| = p^-v(x).
    let q3 = FieldDescriptor::padic(3, 6)?;
    let t = q3.parse_element("2*3^2")?;
    println!("over Q_3 (precision 6): t = {t}, |t| = {}", t.abs_value()?);
    println!("  t in 3^2 Z_3: {}", t.in_neighborhood(2)?);
    println!("  t in 3^3 Z_3: {}", t.in_neighborhood(3)?);

    // Precision is tracked, never guessed: subtracting two elements that
    // agree at working precision gives a residual zero of known accuracy
    // only, and asking whether it is exactly zero is refused.
    let u = q3.from_integer(730); // 1 + 3^6, matches 1 at precision 6
    let diff = u.sub(&q3.one());
    match diff.is_zero() {
        Ok(answer) => println!("  exact-zero test answered: {answer}"),
        Err(e) => println!("  exact-zero test refused: {e}"),
    }
    Ok(())
}

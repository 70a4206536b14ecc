// Locally constant approximation on a profinite tower.
//
// Z_3 is the inverse limit of Z/3^k; a continuous function is presented
// by its values on the finest stored level together with a continuity
// modulus m(k). The Van der Put-style approximant at index k is constant
// on the level-m(k) cells and agrees with the function up to 3^k Z_3 at
// every point -- each claim is verified, never assumed.

use gelfand::field::FieldDescriptor;
use gelfand::profinite::{
    in_entourage_fn,
    approximation_within, indicator_basis, total_boundedness_check, vdp_approximate,
    ContFnOracle, ProfiniteTower,
};
use gelfand::Result;

fn main() {
    run().expect("vdp_tower example runs");
}

pub fn run() -> Result<()> {
    let q3 = FieldDescriptor::padic(3, 8)?;
    let tower = ProfiniteTower::standard_zp(3, 4)?; // levels Z/1, Z/3, ..., Z/81

    // f(x) = x^2 + 3 as an oracle; integral coefficients make it
    // 1-Lipschitz, so the modulus is m(k) = k.
    let f = ContFnOracle::polynomial(
        &tower,
        &q3,
        &[q3.from_integer(3), q3.zero(), q3.one()],
    )?;

    println!("approximating f(x) = x^2 + 3 on Z_3 (tower depth {}):", tower.depth());
    for k in 1..=3 {
        let g = vdp_approximate(&tower, &f, k)?;
        let ok = approximation_within(&tower, &f, &g, k)?;
        println!(
            "  k = {k}: locally constant at level {}, {} cells, f - g in 3^{k} Z_3 everywhere: {ok}",
            g.level,
            g.values.len()
        );
    }

    // Successive approximants form a Cauchy sequence for the canonical
    // uniformity: consecutive terms land in ever-smaller entourages.
    let approximants: Vec<_> = (1..=3)
        .map(|k| vdp_approximate(&tower, &f, k))
        .collect::<Result<_>>()?;
    for k in 1..approximants.len() as i64 {
        let close = in_entourage_fn(
            &tower,
            &approximants[(k - 1) as usize],
            &approximants[k as usize],
            k,
        )?;
        println!("  (g_{k}, g_{}) within the index-{k} entourage: {close}", k + 1);
    }

    // The indicator functions of the level-1 cells form an orthogonal
    // partition of unity -- the Boolean skeleton of C(Z_3, Q_3).
    let basis = indicator_basis(&tower, &q3, 1)?;
    println!("indicator basis at level 1 has {} orthogonal idempotents", basis.len());

    // Total boundedness of a finite spectrum: diag(0, 3, 9) in Q_3^3 has
    // spectrum {0, 3, 9}, covered by 3^k-cosets with 1, 2, 3 centers as
    // k grows.
    let labels: Vec<String> = ["u", "v", "w"].iter().map(|s| s.to_string()).collect();
    let alg = gelfand::algebra::Algebra::pointwise(&q3, &labels)?;
    let diag = alg.add(
        &alg.scale(&q3.from_integer(3), &alg.basis_element(1)),
        &alg.scale(&q3.from_integer(9), &alg.basis_element(2)),
    );
    for k in 1..=3 {
        let cover = total_boundedness_check(&alg, &diag, k)?;
        println!("  {{0, 3, 9}} covered by {} coset(s) of 3^{k} Z_3", cover.centers.len());
    }
    Ok(())
}

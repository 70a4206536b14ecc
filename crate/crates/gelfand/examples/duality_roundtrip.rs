// The duality round trip between finite spaces and function algebras.
//
// A finite set X gives the algebra C(X, F) of F-valued functions; its
// maximal spectrum recovers X, point by point, through the transform
// x -> ker(evaluation at x). In the other direction an algebra maps into
// the functions on its character space via a -> (chi -> chi(a)). The two
// constructions are mutually inverse up to canonical isomorphism, and
// they are contravariant: space maps pull back to algebra morphisms and
// algebra morphisms push forward to spectrum maps.

use gelfand::duality::{
    function_algebra, gelfand_map, gelfand_transform, max_spectrum, pullback, spectrum_map,
    triangle_checks, FiniteSpace, SpaceMap,
};
use gelfand::field::FieldDescriptor;
use gelfand::spectrum::DEFAULT_SEARCH_BUDGET as BUDGET;
use gelfand::Result;

fn main() {
    run().expect("duality_roundtrip example runs");
}

pub fn run() -> Result<()> {
    let f3 = FieldDescriptor::prime(3)?;
    let x = FiniteSpace::new(vec!["p".into(), "q".into(), "r".into()])?;

    // Space -> algebra -> space.
    let cx = function_algebra(&f3, &x)?;
    println!("C(X, F_3) for |X| = 3: dimension {}", cx.dim());
    let (max_space, _chars) = max_spectrum(&cx, BUDGET)?;
    println!("its maximal spectrum has {} points", max_space.len());
    let transform = gelfand_transform(&f3, &x, BUDGET)?;
    println!("transform x -> ker(ev_x) is bijective: {}", transform.bijective);
    for (i, label) in x.labels().iter().enumerate() {
        println!("  {label} -> {}", max_space.labels()[transform.map.images[i]]);
    }

    // Algebra -> space -> algebra: the evaluation morphism is an
    // isomorphism exactly because C(X, F_3) is Gelfand and semisimple.
    let data = gelfand_map(&cx, BUDGET)?;
    println!(
        "evaluation morphism: injective {}, surjective {}, kernel = radical {}",
        data.injective, data.surjective, data.kernel_equals_radical
    );

    // Both triangle identities of the adjunction hold elementwise.
    let tri = triangle_checks(&cx, BUDGET)?;
    println!(
        "triangle identities: function side {}, spectrum side {}",
        tri.function_side, tri.spectrum_side
    );

    // Contravariance: collapse r onto q, pull the map back to algebras,
    // then push it forward to spectra again; the round trip restores the
    // original map under the transform's identification.
    let collapse = SpaceMap::new(x.clone(), x.clone(), vec![0, 1, 1])?;
    let phi = pullback(&f3, &collapse)?;
    println!(
        "pullback of the collapse map sends the indicator of q to {}",
        phi.target().render_element(&phi.apply(&phi.source().basis_element(1)))
    );
    let induced = spectrum_map(&phi, BUDGET)?;
    println!("spectrum map of the pullback has images {:?}", induced.images);
    // Naturality: following the collapse and then the transform agrees
    // with the transform followed by the induced spectrum map.
    let natural = (0..x.len()).all(|p| {
        transform.map.images[collapse.images[p]] == induced.images[transform.map.images[p]]
    });
    println!("naturality square commutes: {natural}");
    Ok(())
}

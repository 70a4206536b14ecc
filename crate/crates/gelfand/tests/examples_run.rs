//! Runs every example as a test, so the examples stay correct.

macro_rules! example_mod {
    ($name:ident, $file:expr) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example_mod!(exact_fields, "exact_fields.rs");
example_mod!(spectra_and_radius, "spectra_and_radius.rs");
example_mod!(characters_and_radical, "characters_and_radical.rs");
example_mod!(boolean_idempotents, "boolean_idempotents.rs");
example_mod!(duality_roundtrip, "duality_roundtrip.rs");
example_mod!(characterize_products, "characterize_products.rs");
example_mod!(morphism_uniformity, "morphism_uniformity.rs");
example_mod!(vdp_tower, "vdp_tower.rs");

#[test]
fn exact_fields_example_runs() {
    exact_fields::run().expect("exact_fields example should run");
}

#[test]
fn spectra_and_radius_example_runs() {
    spectra_and_radius::run().expect("spectra_and_radius example should run");
}

#[test]
fn characters_and_radical_example_runs() {
    characters_and_radical::run().expect("characters_and_radical example should run");
}

#[test]
fn boolean_idempotents_example_runs() {
    boolean_idempotents::run().expect("boolean_idempotents example should run");
}

#[test]
fn duality_roundtrip_example_runs() {
    duality_roundtrip::run().expect("duality_roundtrip example should run");
}

#[test]
fn characterize_products_example_runs() {
    characterize_products::run().expect("characterize_products example should run");
}

#[test]
fn morphism_uniformity_example_runs() {
    morphism_uniformity::run().expect("morphism_uniformity example should run");
}

#[test]
fn vdp_tower_example_runs() {
    vdp_tower::run().expect("vdp_tower example should run");
}

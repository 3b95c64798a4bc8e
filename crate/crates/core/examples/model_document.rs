//! Writing a model by hand, saving it as a document and loading it back.

use speclab::catmodel::{load_model, save_model, Mode, Model, ObjectClass};
use speclab::spectra;
use speclab::IdSet;

fn main() -> speclab::Result<()> {
    // two orthogonal Σ-periodic objects: a product of two fields
    let classes = ["k1", "k2"]
        .iter()
        .enumerate()
        .map(|(id, n)| ObjectClass { id, name: n.to_string(), shift_period: Some(1) })
        .collect();
    let mut m = Model::new("two_fields", Mode::LocallyFinite, classes);
    m.validate()?;
    let doc = save_model(&m);
    println!("{doc}");
    let back = load_model(&doc)?;
    assert_eq!(back, m);
    let s = spectra::shift_spectrum(&back)?;
    println!("sspec: {} points, discrete = {}", s.len(), s.is_discrete());
    println!("thick closure of {{k1}}: {:?}", back.names(&back.thick_closure(&IdSet::singleton(2, 0))?));

    m.hom.set(0, 1, 0, 1);
    println!("after adding Hom(k1, k2): {:?}", m.names(&m.perp_left(&IdSet::singleton(2, 1))?));
    let err = load_model("{\"schema_version\": 1, \"name\": 3}").unwrap_err();
    println!("malformed document: {err}");
    Ok(())
}

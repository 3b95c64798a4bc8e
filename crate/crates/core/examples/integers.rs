//! D(Z)^c truncated at a prime bound: supports of Z/p and Z, and radical
//! thick subcategories matching specialization-closed subsets.

use speclab::catmodel::{builtin_model, BuiltinParams, FormalObject};
use speclab::spectra::{self, Guard};

fn main() -> speclab::Result<()> {
    let m = builtin_model("specZ", &BuiltinParams { bound: Some(12), ..Default::default() })?;
    let s = spectra::shift_spectrum(&m)?;
    for c in 0..m.len() {
        let sup = spectra::support(&m, &s, &FormalObject::of_classes(&[c]))?;
        let names: Vec<&str> = sup.iter().map(|i| s.points[i].name.as_str()).collect();
        println!("supp({}) = {{{}}}", m.classes[c].name, names.join(", "));
    }
    let rows = spectra::classify(&m, &s, Guard::default(), 2)?;
    let closed = s.closed_sets(1 << 12)?;
    println!("{} radical thick subcategories, {} closed subsets", rows.len(), closed.len());
    let lat = spectra::enumerate_thicks(&m, Guard::default())?;
    println!("{} thick subcategories, all radical: {}", lat.len(), lat.elements.iter().all(|e| spectra::radical(&s, e) == *e));
    Ok(())
}

//! Singularity categories of A_∞ and D_∞ as declared models: zero is not a
//! radical thick subcategory.

use speclab::catmodel::{builtin_model, BuiltinParams};
use speclab::spectra::{self, Guard};

fn main() -> speclab::Result<()> {
    for name in ["A_infinity", "D_infinity"] {
        let m = builtin_model(name, &BuiltinParams { k: Some(3), ..Default::default() })?;
        let s = spectra::shift_spectrum(&m)?;
        let r0 = spectra::radical(&s, &m.empty_set());
        println!("{name}: sspec has {} point(s); radical(0) = {}", s.len(), spectra::thick_label(&m, &r0));
        for r in spectra::classify(&m, &s, Guard::default(), 1)? {
            println!("  radical {} with support of size {}", spectra::thick_label(&m, &r.thick), r.support.len());
        }
    }
    let m = builtin_model("A_infinity", &BuiltinParams::default())?;
    let lat = spectra::enumerate_thicks(&m, Guard::default())?;
    let spc = spectra::matsui_spectrum(&lat);
    println!("Matsui spectrum of the chain: {} points, Sierpinski = {}", spc.len(), spc.is_sierpinski());
    let f = spectra::fspcnt_space(&lat);
    println!("closed sets of the up-set space: {:?}", f.closed_sets(16)?);
    Ok(())
}

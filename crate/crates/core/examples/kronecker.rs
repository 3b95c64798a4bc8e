//! The truncated Kronecker category: perpendiculars from Hom/Ext, the
//! declared shift-primes, supports, and the shape of the spectrum.

use speclab::catmodel::{builtin_model, BuiltinParams, FormalObject};
use speclab::spectra;
use speclab::verify::{all_pass, verify_kronecker};
use speclab::catmodel::DEFAULT_LAMBDAS;

fn main() -> speclab::Result<()> {
    let rows = verify_kronecker(3, 2, &DEFAULT_LAMBDAS)?;
    for r in rows.iter().filter(|r| r.case.starts_with("alpha(") && !r.case.ends_with("declared")) {
        println!("{r}");
    }
    println!("{} checks, all pass: {}", rows.len(), all_pass(&rows));

    let m = builtin_model("kronecker", &BuiltinParams { nmax: Some(3), jmax: Some(2), ..Default::default() })?;
    let s = spectra::shift_spectrum(&m)?;
    let r = m.class_id("R1^2")?;
    let sup = spectra::support(&m, &s, &FormalObject::of_classes(&[r]))?;
    let names: Vec<&str> = sup.iter().map(|i| s.points[i].name.as_str()).collect();
    println!("supp(R1^2) = {{{}}}", names.join(", "));
    let generic = s.points.iter().position(|p| p.name == "r_generic").unwrap();
    let cl = s.point_closure(generic);
    println!("closure of the generic point: {:?}", cl.iter().map(|i| &s.points[i].name).collect::<Vec<_>>());
    Ok(())
}

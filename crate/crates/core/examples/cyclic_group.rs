//! stmod(k C_p): every nonzero object generates everything, the homological
//! spectrum is indiscrete and collapses to a point.

use speclab::catmodel::{builtin_model, BuiltinParams};
use speclab::spectra;

fn main() -> speclab::Result<()> {
    for p in [2, 3, 5, 7] {
        let m = builtin_model("stmod_Cp", &BuiltinParams { p: Some(p), ..Default::default() })?;
        let h = spectra::shift_homological_spectrum(&m)?;
        let q = h.kolmogorov_quotient();
        let s = spectra::shift_spectrum(&m)?;
        println!(
            "p = {p}: shspec size {} (indiscrete: {}), quotient {} point, sspec {} point; each class generates everything: {:?}",
            h.len(),
            h.is_indiscrete(),
            q.len(),
            s.len(),
            spectra::is_discrete_criterion(&m)?
        );
    }
    let m = builtin_model("stmod_Cp", &BuiltinParams { p: Some(5), ..Default::default() })?;
    println!("shift action on C_5: {}", m.metadata["shift_action"]);
    Ok(())
}

//! D^b(k A_2): five thick subcategories, a discrete three-point
//! shift-spectrum, and supports that do not preserve meets.

use speclab::catmodel::{builtin_model, BuiltinParams};
use speclab::spectra::{self, Guard};

fn main() -> speclab::Result<()> {
    let m = builtin_model("kA2", &BuiltinParams::default())?;
    let lat = spectra::enumerate_thicks(&m, Guard::default())?;
    println!("{} thick subcategories, layers {:?}", lat.len(), lat.layer_sizes());
    for (i, e) in lat.elements.iter().enumerate() {
        println!("  e{i} = {}  covers {:?}", spectra::thick_label(&m, e), lat.covers[i]);
    }

    let s = spectra::shift_spectrum(&m)?;
    println!("sspec: {} points, discrete = {}", s.len(), s.is_discrete());
    for p in &s.points {
        let sup = spectra::support_of_thick(&s, &p.payload);
        let names: Vec<&str> = sup.iter().map(|i| s.points[i].name.as_str()).collect();
        println!("  supp({}) = {{{}}}", p.name, names.join(", "));
    }

    let (p, q) = (&s.points[0].payload, &s.points[1].payload);
    let meet = spectra::support_of_thick(&s, &p.intersection(q));
    let inter = spectra::support_of_thick(&s, p).intersection(&spectra::support_of_thick(&s, q));
    println!("supp(P ∩ P') has {} points, supp(P) ∩ supp(P') has {}", meet.len(), inter.len());

    let rows = spectra::classify(&m, &s, Guard::default(), 1)?;
    println!("{} radical thick subcategories (every one of them)", rows.len());
    println!("homological spectrum collapses onto sspec: {}", {
        let q = spectra::shift_homological_spectrum(&m)?.kolmogorov_quotient();
        q.find_homeomorphism(&s).is_some()
    });
    print!("{}", lat.to_dot("thick(kA2)", &m.names(&m.all_set())));
    Ok(())
}

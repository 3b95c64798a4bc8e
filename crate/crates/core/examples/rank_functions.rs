//! Rank functions θ^A on D^b(k A_3): axioms on Auslander–Reiten triangles,
//! kernels, and decomposition into gcd-reduced candidates.

use speclab::catmodel::{builtin_model, BuiltinParams, FormalObject};
use speclab::rankfn;

fn main() -> speclab::Result<()> {
    let m = builtin_model("An", &BuiltinParams { n: Some(3), ..Default::default() })?;
    for a in 0..m.len() {
        let theta = rankfn::theta_upper(&FormalObject::of_classes(&[a]), &m)?;
        let rep = rankfn::check_axioms(&theta, &m, &m.triangles)?;
        let ker = rankfn::kernel(&theta, &m)?;
        println!(
            "theta^{:<5} = {:?}  axioms ok on {} triangles: {}  kernel {:?}",
            m.classes[a].name,
            theta.values,
            rep.triangles_checked,
            rep.passed(),
            m.names(&ker)
        );
    }
    let cands = rankfn::irreducible_candidates(&m)?;
    let g = rankfn::theta_upper(&FormalObject::of_classes(&(0..m.len()).collect::<Vec<_>>()), &m)?;
    match rankfn::decompose(&g, &cands) {
        Some(d) => println!("theta of the sum of all classes = {:?}", d.iter().map(|(i, n)| format!("{n}*{}", m.classes[*i].name)).collect::<Vec<_>>()),
        None => println!("no decomposition"),
    }
    Ok(())
}

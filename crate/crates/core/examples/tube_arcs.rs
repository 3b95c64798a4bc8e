//! Wide subcategories of a rank-n tube from non-crossing arcs, and the
//! object whose perpendicular recovers each of them.

use speclab::tube::{self, ArcCollection};

fn main() -> speclab::Result<()> {
    let n = 3;
    let all = tube::enumerate_noncrossing(n);
    println!("{} non-crossing arc collections on {n} points", all.len());
    for c in &all {
        let w = tube::wide_from_arcs(c, 2 * n)?;
        let z = tube::perp_object(c)?;
        let ok = tube::perp_set(&z, n, 2 * n)? == w;
        let fmt = |v: &[tube::TubeObject]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        println!("{c:<16} exceptional={:<5} Z = [{}]  |W| = {:<2} perp matches: {ok}", tube::is_exceptional(c)?, fmt(&z), w.len());
    }
    let c = ArcCollection::parse(4, "(0,2),(2,3)")?;
    let parts = tube::perp_object_parts(&c)?;
    println!("{c}: Z1 = {:?}, Z2 = {:?}", parts.z1.iter().map(|x| x.to_string()).collect::<Vec<_>>(), parts.z2.iter().map(|x| x.to_string()).collect::<Vec<_>>());
    Ok(())
}

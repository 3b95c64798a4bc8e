//! Hom and Ext¹ between indecomposable representations, computed by exact
//! linear algebra.

use speclab::quiverrep::{catalog_an, catalog_kronecker, hom_dim, ext1_dim, Param};
use speclab::scalar::{Rational, F2};

fn main() -> speclab::Result<()> {
    let cat = catalog_an::<Rational>(3);
    println!("A3 ({}), entries (hom, ext):", cat.convention);
    let names: Vec<&str> = cat.entries.iter().map(|e| e.name.as_str()).collect();
    println!("{:>6} {}", "", names.iter().map(|n| format!("{n:>7}")).collect::<String>());
    for (row, name) in cat.graded_table()?.iter().zip(&names) {
        let cells: String = row.iter().map(|(h, e)| format!("{:>7}", format!("({h},{e})"))).collect();
        println!("{name:>6} {cells}");
    }

    // same catalog over F_2 gives the same dimensions
    let small = catalog_an::<F2>(3);
    assert_eq!(small.graded_table()?, cat.graded_table()?);

    let kr = catalog_kronecker::<Rational>(2, 2, &[Param::Finite(0), Param::Infinity])?;
    let rep = |n: &str| &kr.entries[kr.index_of(n).unwrap()].rep;
    for (x, y) in [("P0", "P1"), ("P1", "P0"), ("R0^1", "Rinf^1"), ("R0^2", "R0^1"), ("Q0", "P0")] {
        println!("Kronecker: hom({x},{y}) = {}, ext({x},{y}) = {}", hom_dim(rep(x), rep(y))?, ext1_dim(rep(x), rep(y))?);
    }
    Ok(())
}

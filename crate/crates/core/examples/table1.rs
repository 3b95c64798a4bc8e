//! Comparison of spaces parametrising thick subcategories, for the cells
//! computable from finite data.

use speclab::verify::{all_pass, verify_dinfinity, verify_table1};

fn main() -> speclab::Result<()> {
    let mut rows = verify_table1()?;
    rows.extend(verify_dinfinity()?);
    for r in &rows {
        println!("{r}");
    }
    println!("all pass: {}", all_pass(&rows));
    Ok(())
}

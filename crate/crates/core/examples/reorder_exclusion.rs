//! Tries to place rationals on the rows of a table whose diagonal must
//! stay fixed, and shows which ones cannot be placed.

use diaglab::realline::reorder_demo;
use diaglab::Rational;
use std::error::Error;

fn main() -> Result<(), Box<dyn Error>> {
    let diag: Rational = "1/3".parse()?;
    let queries: Vec<Rational> = ["1/6", "11/12", "5/12", "2/3"]
        .iter()
        .map(|s| s.parse())
        .collect::<Result<_, _>>()?;

    let r = reorder_demo(&diag, 3, &queries)?;
    println!("diagonal     0.{}", r.diagonal);
    println!("antidiagonal 0.{}", r.antidiagonal);
    for (q, rows) in queries.iter().zip(&r.feasible) {
        println!("{q:>6} may sit on rows {rows:?}");
    }
    for (q, row) in &r.placements {
        println!("{q:>6} -> row {row}");
    }
    for q in &r.excluded {
        println!("{q:>6} excluded");
    }
    println!(
        "cover of size {} (queries {:?}, rows {:?}) shows no larger placement exists",
        r.certificate.size(),
        r.certificate.queries,
        r.certificate.rows
    );
    Ok(())
}

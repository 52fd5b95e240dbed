//! Exact binary expansions of the enumerated rationals in [0, 1) and the
//! antidiagonal built from them.

use diaglab::realline::{antidiag_rationals, eventually_periodic, expansion_table, q01_list};
use std::error::Error;

fn main() -> Result<(), Box<dyn Error>> {
    let values = q01_list(16);
    print!("{}", expansion_table(&values, 16)?);

    for q in &values[10..] {
        println!("{q} = {}", eventually_periodic(q)?);
    }

    for n in [4, 8, 16] {
        let s = antidiag_rationals(n, 32, 5000)?;
        match s.matched {
            Some((i, q)) => println!("antidiagonal of {n} rows: 0.{} agrees with entry {i} ({q})", s.bits),
            None => println!("antidiagonal of {n} rows: 0.{} matches none of the first 5000", s.bits),
        }
    }
    Ok(())
}

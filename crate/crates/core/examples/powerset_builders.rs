//! The doubling table and the iterated-union construction of bounded
//! power sets.

use diaglab::powerset::{powers_of_two, proof2_rounds, proof3_extend, proof3_table};
use std::error::Error;

fn main() -> Result<(), Box<dyn Error>> {
    let t3 = proof3_table(3)?;
    print!("subsets of {{0,1,2}} by bitmask:\n{t3}");
    let t4 = proof3_extend(&t3)?;
    println!("extending by 3 adds:");
    for (n, s) in t4.entries().iter().enumerate().skip(t3.len()) {
        println!("{n} → {}", s.braced());
    }

    let (k, universe) = (3, 4);
    for (round, sets) in proof2_rounds(k, universe)?.iter().enumerate() {
        println!("union round {}: {} subsets", round + 1, sets.len());
    }

    let powers: Vec<String> = powers_of_two(8).iter().map(ToString::to_string).collect();
    println!("powers of two: {}", powers.join(", "));
    Ok(())
}

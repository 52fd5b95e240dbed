//! Diagonal walks over binary string arrays: the antidiagonal, where it
//! lands in the full array, and the fraction of the array the walk touches.

use diaglab::bitstring::{dc_sequence, diagonal_report, full_array, hamming_census, s2_array, Family};
use std::error::Error;

fn main() -> Result<(), Box<dyn Error>> {
    for k in 1..=5 {
        let a = full_array(k)?;
        let r = diagonal_report(&a)?;
        println!(
            "k={k}: antidiagonal {} at row {:?}, cover {}",
            r.antidiagonal, r.found_at, r.cover
        );
    }

    let s2 = s2_array(4, 4)?;
    let r = diagonal_report(&s2)?;
    print!("two-per-position array:\n{s2}");
    println!("antidiagonal {} found at {:?}, cover {}", r.antidiagonal, r.found_at, r.cover);

    for family in [Family::Full, Family::S2] {
        let terms: Vec<String> = dc_sequence(family, 8).iter().map(|(_, c)| c.to_string()).collect();
        println!("{family:?}: {}", terms.join(" "));
    }

    let c = hamming_census(8);
    println!("k=8: {} strings within one flip of the antidiagonal, {} further", c.included, c.excluded);
    Ok(())
}

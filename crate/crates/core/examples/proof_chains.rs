//! Classifies reductio chains and flags statements that derive both a
//! claim and its negation.
//!
//!     cargo run --example proof_chains -- "~P => Q1 => P"

use diaglab::chain;
use std::error::Error;

fn main() -> Result<(), Box<dyn Error>> {
    let mut chains: Vec<String> = std::env::args().skip(1).collect();
    if chains.is_empty() {
        chains = [
            "A => B => P",
            "~P => Q1 => P",
            "~P <=> Q1 <=> Q2 => Q3 <=> P",
            "~P <=> Q1 <=> FALSUM",
            "~P <=> Q1 <=> Q2 <=> Q3 => Q4 <=> Q5 <=> Q6 => FALSUM",
        ]
        .map(String::from)
        .to_vec();
    }
    for text in &chains {
        let c = chain::parse(text)?;
        let report = chain::audit(&c);
        println!("{c}");
        for line in report.to_record().lines() {
            println!("    {line}");
        }
    }
    Ok(())
}

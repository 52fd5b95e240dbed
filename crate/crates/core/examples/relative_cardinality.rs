//! Limits of |A_n| / |B_n| for counting formulas, symbolic where the
//! formula family allows it and sampled otherwise.

use diaglab::ratio::{dc_as_rho, rho_limit, rho_limit_with, CountingFormula, LimitOptions};
use diaglab::BigUint;
use std::error::Error;

fn main() -> Result<(), Box<dyn Error>> {
    let pairs = [
        ("floor:n/2", "floor:n/3"),
        ("floor:(n+1)/2", "floor:n/2"),
        ("ident:+1", "affine-exp:2,+1"),
        ("poly:0,0,1", "poly:5,3"),
        ("exp:3", "exp:2"),
    ];
    for (a, b) in pairs {
        let report = rho_limit(&a.parse()?, &b.parse()?)?;
        println!("{a:>16} / {b:<16} {} ({})", report.classification, report.method);
    }

    // custom formulas are only sampled, up to n = 2^40
    let naturals: CountingFormula = "ident:+0".parse()?;
    let opts = LimitOptions { acknowledge_comparable: true };
    let thirds = CountingFormula::custom("multiples of 3", |n: &BigUint| (n + 2u32) / 3u32);
    let report = rho_limit_with(&thirds, &naturals, opts)?;
    println!("multiples of 3 / naturals: {} ({})", report.classification, report.method);
    // sqrt(n)/n is still near 1e-6 at the last sample
    let squares = CountingFormula::custom("squares", |n: &BigUint| n.sqrt());
    let report = rho_limit_with(&squares, &naturals, opts)?;
    println!("squares / naturals: {} ({})", report.classification, report.method);

    let dc: Vec<String> = dc_as_rho(6).iter().map(|(_, q)| q.to_string()).collect();
    println!("diagonal cover as a ratio: {}", dc.join(" "));
    Ok(())
}

//! Nested intervals whose endpoints are the first two enumerated rationals
//! inside the previous interval.
//!
//!     cargo run --example nested_intervals -- 200000 8

use diaglab::realline::{approx, nested_intervals, q01_list, Interval};

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>());
    let pool = args.next().and_then(Result::ok).unwrap_or(10_000);
    let steps = args.next().and_then(Result::ok).unwrap_or(10);

    let run = nested_intervals(&q01_list(pool), Interval::unit(), steps);
    for (n, iv) in run.intervals.iter().enumerate().skip(1) {
        println!("{n:>2}  {iv:<24} width {:.3e}", approx(&iv.width()));
    }
    println!("{:?} after {} of {steps} steps over {pool} rationals", run.status, run.steps());
    print!("{}", run.to_csv());
}

//! Ranks finite subsets of the naturals and walks the global enumeration.
//!
//!     cargo run --example subset_codec -- 0,2,5

use diaglab::subset::{self, build_class, class_size, ClassKey, FiniteSubset};
use std::error::Error;

fn main() -> Result<(), Box<dyn Error>> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "0,2,5".to_string());
    let s: FiniteSubset = arg.parse()?;

    let pair = subset::rank(&s)?;
    let pos = subset::position(&s)?;
    println!("{} has rank {pair} and global position {pos}", s.braced());
    assert_eq!(subset::unrank(&pair)?, s);

    // subsets of size 3 whose largest element is 4
    let key = ClassKey::new(3, 4)?;
    println!("class (3, 4) holds {} subsets:", class_size(key));
    for member in build_class(key) {
        println!("  {} -> {}", member.braced(), subset::rank(&member)?);
    }

    println!("first 12 subsets in global order:");
    for (n, s) in subset::enumerate(12).iter().enumerate() {
        println!("  {n:>2}  {}", s.braced());
    }
    Ok(())
}

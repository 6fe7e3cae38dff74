// Hilbert symbols of a few pairs at every relevant place, with the product
// formula checked on each row.
//
// ```bash
// cargo run --example hilbert_symbols
// ```

use locfree::numtheory::{candidate_primes, hilbert_symbol, legendre, Place};
use num_bigint::BigInt;
use num_rational::BigRational;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let q = |n: i64| BigRational::from_integer(n.into());
    for (a, b) in [(-1, -1), (2, 3), (-1, -3), (5, -7), (-2, -17), (6, 35)] {
        let (a, b) = (q(a), q(b));
        let mut places: Vec<Place> = candidate_primes(&a, &b)?.into_iter().map(Place::Finite).collect();
        places.push(Place::INFINITY);
        let mut row = Vec::new();
        let mut product = 1;
        for v in places {
            let s = hilbert_symbol(&a, &b, v)?;
            product *= s;
            row.push(format!("{v}:{s:+}"));
        }
        println!("({a}, {b})  {}", row.join("  "));
        assert_eq!(product, 1);
    }
    println!("(3/7) = {}", legendre(&BigInt::from(3), 7)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}

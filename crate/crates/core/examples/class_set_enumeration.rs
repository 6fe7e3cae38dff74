// Enumerate right ideal classes of Λ(p) by the neighbor search and compare
// with the class number formula and the mass formula.
//
// ```bash
// cargo run --example class_set_enumeration -- 101
// ```

use locfree::latorder::{class_set, eichler_class_number, lambda, mass, unit_count};
use locfree::numtheory::is_prime;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    run_up_to(40)
}

fn run_up_to(limit: u64) -> Result<(), Box<dyn std::error::Error>> {
    println!("{:>5} {:>4} {:>8} {:>10}  units of left orders", "p", "h", "formula", "mass");
    for p in 2..=limit {
        if !is_prime(p)? {
            continue;
        }
        let o = lambda(p)?;
        let reps = class_set(&o)?;
        let units: Vec<usize> = reps.iter().map(|r| unit_count(&r.left_order())).collect::<Result<_, _>>()?;
        let h = eichler_class_number(p)?;
        println!("{p:>5} {:>4} {h:>8} {:>10}  {units:?}", reps.len(), mass(&reps)?.to_string());
        assert_eq!(reps.len() as u64, h);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    let limit = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(40);
    run_up_to(limit)
}

// Presentations of the definite quaternion algebras ramified exactly at
// {p, ∞}, with their ramification re-derived from Hilbert symbols.
//
// ```bash
// cargo run --example quaternion_ramification -- 200
// ```

use locfree::numtheory::is_prime;
use locfree::quatalg::b_p_infinity;

fn table(limit: u64) -> Result<(), Box<dyn std::error::Error>> {
    for p in (2..limit).filter(|&p| is_prime(p).unwrap_or(false)) {
        let alg = b_p_infinity(p)?;
        let ram: Vec<String> = alg.ramified().iter().map(|v| v.to_string()).collect();
        println!("p = {p:>3}  ({:>3}, {:>4})  ramified at {{{}}}", alg.a(), alg.b(), ram.join(", "));
    }
    Ok(())
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    table(60)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    let limit = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(60);
    table(limit)
}

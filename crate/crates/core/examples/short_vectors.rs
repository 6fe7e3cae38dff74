// Units of the Hurwitz order as the norm-one vectors of its norm form.
//
// ```bash
// cargo run --example short_vectors
// ```

use locfree::latorder::{lambda, nrd_gram, short_vectors};
use locfree::quatalg::Quaternion;
use num_rational::BigRational;
use num_traits::One;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let o = lambda(2)?;
    let basis = o.basis();
    let g = nrd_gram(o.algebra(), o.lattice());
    let units = short_vectors(&g, &BigRational::one())?;
    println!("{} units", units.len());
    for v in &units {
        let x = (0..4).fold(Quaternion::zero(), |acc, i| {
            acc.add(&basis[i].scale(&BigRational::from_integer(v[i].clone())))
        });
        println!("  {x}");
    }
    let two = short_vectors(&g, &BigRational::from_integer(2.into()))?;
    println!("{} vectors of norm at most 2", two.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}

// Maximal orders of a few quaternion algebras, including the Hurwitz
// order, with their trace-pairing determinants.
//
// ```bash
// cargo run --example maximal_orders
// ```

use locfree::latorder::maximal_order;
use locfree::quatalg::QuaternionAlgebra;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (a, b) in [(-1, -1), (-1, -3), (-2, -5), (-3, -17), (1, 1), (2, 3), (-1, 7)] {
        let alg = QuaternionAlgebra::from_ints(a, b)?;
        let o = maximal_order(&alg)?;
        let d = o.discriminant_report();
        println!("({a}, {b}): reduced disc {}, det {}", d.reduced_disc, d.trace_det);
        for e in o.basis() {
            println!("    {e}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}

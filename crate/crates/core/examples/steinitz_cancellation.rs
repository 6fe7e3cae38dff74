// Lattices over ℤ[√−5]: the Steinitz class decides isomorphism, so adding
// a free summand never changes the answer.
//
// ```bash
// cargo run --example steinitz_cancellation
// ```

use locfree::quadfield::{class_group, modules_isomorphic, steinitz_class, QuadElem, QuadField, QuadIdeal, QuadModule};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let k = QuadField::from_disc(-20)?;
    let g = class_group(-20, false)?;
    // J = (2, 1 + ω) with ω = √−5
    let j = QuadIdeal::from_generators(k, &[k.int(2), QuadElem::from_ints(k, 1, 1)])?;
    let r = QuadIdeal::unit(k);
    let free = QuadModule::free(k, 1)?;
    let cases = [
        ("R + R", QuadModule::free(k, 2)?),
        ("J + J", QuadModule::new(vec![j.clone(), j.clone()])?),
        ("J + R", QuadModule::new(vec![j.clone(), r.clone()])?),
    ];
    for (name, m) in &cases {
        let c = steinitz_class(m, &g)?;
        println!("{name:<6} rank {}  Steinitz class {}", m.rank(), g.rep(c));
    }
    for (n1, m1) in &cases {
        for (n2, m2) in &cases {
            let iso = modules_isomorphic(m1, m2, &g)?;
            let stable = modules_isomorphic(&m1.direct_sum(&free)?, &m2.direct_sum(&free)?, &g)?;
            assert_eq!(iso, stable);
            println!("{n1} ~ {n2}: {iso}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}

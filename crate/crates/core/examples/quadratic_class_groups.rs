// Wide and narrow class groups of some quadratic discriminants, with their
// reduced forms.
//
// ```bash
// cargo run --example quadratic_class_groups
// ```

use locfree::quadfield::class_group;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for disc in [-4i64, -20, -23, -84, -199, 5, 12, 60, 229] {
        for narrow in [false, true] {
            if narrow && disc < 0 {
                continue;
            }
            let g = class_group(disc, narrow)?;
            let forms: Vec<String> = g.reps().iter().map(|f| f.to_string()).collect();
            println!(
                "D = {disc:>5} {:<6} h = {:<2} {:?}  {}",
                if narrow { "narrow" } else { "wide" },
                g.order(),
                g.structure(),
                forms.join(" ")
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}

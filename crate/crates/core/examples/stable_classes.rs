// In Λ(11) the two ideal classes are stably isomorphic but not
// isomorphic; the group law J ⊕ J' ≅ J'' ⊕ Λ is witnessed by J''.
//
// ```bash
// cargo run --example stable_classes
// ```

use locfree::latorder::{class_set, isomorphic_ideals, lambda};
use locfree::lfcg::{group_law_check, stable_class, stably_isomorphic};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let o = lambda(11)?;
    let reps = class_set(&o)?;
    for (i, j) in reps.iter().enumerate() {
        let s = stable_class(j)?;
        println!("class {i}: nrd {}  stable class {}", s.nrd, s.value);
    }
    let (a, b) = (&reps[0], &reps[1]);
    println!("isomorphic: {}", isomorphic_ideals(a, b)?.is_some());
    println!("stably isomorphic: {}", stably_isomorphic(a, b)?);
    let w = group_law_check(b, b)?;
    println!("J'' = x·J' with x = {}, nrd {} = {} · {}", w.multiplier, w.nrd_j2, w.nrd_j, w.nrd_j1);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}

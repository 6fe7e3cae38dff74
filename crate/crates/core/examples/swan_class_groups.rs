// Ray class groups of algebras over ℚ and quadratic fields, and the
// Eichler condition for each.
//
// ```bash
// cargo run --example swan_class_groups
// ```

use locfree::lfcg::{eichler_condition, swan_class_group, SeparableAlgebraSpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let specs = [
        ("B_{13,inf}", r#"{"factors": [{"kind": {"type": "quaternion", "a": -2, "b": -13}}]}"#),
        ("M_2(Q(sqrt -5))", r#"{"factors": [{"center_disc": -20, "kind": {"type": "matrix", "degree": 2}}]}"#),
        ("totally definite over Q(sqrt 3)", r#"{"factors": [{"center_disc": 12, "kind": {"type": "ramified", "real": [0, 1]}}]}"#),
        ("one real place over Q(sqrt 3)", r#"{"factors": [{"center_disc": 12, "kind": {"type": "ramified", "finite": [3], "real": [1]}}]}"#),
        (
            "product",
            r#"{"factors": [
                {"center_disc": -23, "kind": {"type": "matrix", "degree": 2}},
                {"center_disc": -84, "kind": {"type": "matrix", "degree": 3}},
                {"kind": {"type": "ramified", "finite": [2, 3]}}
            ]}"#,
        ),
    ];
    for (name, text) in specs {
        let a = SeparableAlgebraSpec::from_json(text)?;
        let g = swan_class_group(&a)?;
        let e = eichler_condition(&a)?;
        println!("{name:<34} |Cl| = {:<3} {:?}  Eichler: {}", g.order(), g.elementary_divisors(), e.holds);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}

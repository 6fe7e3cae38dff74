// For which p does cancellation hold for Λ(p)? Compares the class number
// with the order of the locally free class group.
//
// ```bash
// cargo run --example cancellation_table -- 300
// ```

use locfree::lfcg::cancellation_table;

fn table(limit: u64) -> Result<(), Box<dyn std::error::Error>> {
    let rows = cancellation_table(2, limit, false)?;
    let holds: Vec<u64> = rows.iter().filter(|v| v.holds).map(|v| v.p).collect();
    for v in rows.iter().take(12) {
        println!("p = {:>3}  h = {:>2}  |Cl| = {}  {}", v.p, v.h, v.cl, if v.holds { "cancels" } else { "fails" });
    }
    println!("cancellation holds for {holds:?}");
    Ok(())
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    table(300)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    let limit = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(300);
    table(limit)
}

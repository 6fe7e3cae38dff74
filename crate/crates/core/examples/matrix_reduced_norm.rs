// Reduced norms of random invertible matrices over Hamilton's quaternions
// are positive, also after embedding into a larger size.
//
// ```bash
// cargo run --example matrix_reduced_norm
// ```

use locfree::quatalg::{embed_phi_r, matrix_nrd, QuatMatrix, Quaternion, QuaternionAlgebra};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let alg = QuaternionAlgebra::from_ints(-1, -1)?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 1..=3 {
        let entries = (0..n * n)
            .map(|_| Quaternion::from_ints([0; 4].map(|_| rng.gen_range(-3..=3))))
            .collect();
        let x = QuatMatrix::new(n, entries);
        let d = matrix_nrd(&alg, &x)?;
        let d2 = matrix_nrd(&alg, &embed_phi_r(&x, 2))?;
        println!("n = {n}: nrd = {d}, after embedding = {d2}");
        assert_eq!(d, d2);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}

//! ℤ-orders in rational quaternion algebras, right ideals as rank-4
//! lattices, short-vector enumeration, ideal isomorphism testing and
//! class-set enumeration for definite maximal orders.
//!
//! Lattices live in ℚ⁴ with coordinates `(t, x, y, z)` for `t + xi + yj + zk`.

mod classset;
mod gram;
mod ideal;
mod order;

pub use classset::{class_set, class_set_with_primes, eichler_class_number, mass, unit_count};
pub use gram::{lll, minimum, short_vectors, GramMatrix};
pub use ideal::{ideal_mul, isomorphic_ideals, neighbors, right_ideals_of_norm, RightIdeal};
pub use order::{lambda, maximal_order, DiscriminantReport, QuatOrder};

use num_rational::BigRational;

use crate::lattice::{Lattice, QVec};
use crate::quatalg::{Quaternion, QuaternionAlgebra};

type Q = BigRational;

pub(crate) fn to_vec(x: &Quaternion) -> QVec {
    x.coords().to_vec()
}

pub(crate) fn from_vec(v: &[Q]) -> Quaternion {
    Quaternion::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone())
}

pub(crate) fn basis_elems(l: &Lattice) -> Vec<Quaternion> {
    l.basis().iter().map(|b| from_vec(b)).collect()
}

/// Lattice spanned by all products `x·y`, x ∈ l, y ∈ r.
pub(crate) fn lattice_product(alg: &QuaternionAlgebra, l: &Lattice, r: &Lattice) -> Lattice {
    let (lb, rb) = (basis_elems(l), basis_elems(r));
    let gens: Vec<QVec> = lb
        .iter()
        .flat_map(|x| rb.iter().map(move |y| to_vec(&alg.mul(x, y))))
        .collect();
    Lattice::from_generators(&gens, 4).expect("product of full lattices is full")
}

pub(crate) fn lattice_conj(l: &Lattice) -> Lattice {
    let gens: Vec<QVec> = basis_elems(l).iter().map(|x| to_vec(&x.conj())).collect();
    Lattice::from_generators(&gens, 4).unwrap()
}

/// `x·l` or `l·x`.
pub(crate) fn lattice_mul_elem(alg: &QuaternionAlgebra, x: &Quaternion, l: &Lattice, left: bool) -> Lattice {
    let gens: Vec<QVec> = basis_elems(l)
        .iter()
        .map(|b| to_vec(&if left { alg.mul(x, b) } else { alg.mul(b, x) }))
        .collect();
    Lattice::from_generators(&gens, 4).expect("multiplying by a unit of the algebra")
}

/// Gram matrix of the reduced norm on the canonical basis of `l`.
pub fn nrd_gram(alg: &QuaternionAlgebra, l: &Lattice) -> GramMatrix {
    let b = basis_elems(l);
    let entries = b
        .iter()
        .map(|x| b.iter().map(|y| alg.norm_pairing(x, y)).collect())
        .collect();
    GramMatrix::new(entries).expect("norm pairing is symmetric")
}

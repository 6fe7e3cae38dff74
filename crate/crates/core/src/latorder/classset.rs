use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{isomorphic_ideals, neighbors, nrd_gram, short_vectors, QuatOrder, RightIdeal, Q};
use crate::error::{Error, Result};
use crate::numtheory::{is_prime, kronecker};

/// Number of units of an order (norm-1 vectors of the norm form).
pub fn unit_count(o: &QuatOrder) -> Result<usize> {
    if !o.algebra().is_definite() {
        return Err(Error::IndefiniteAlgebra);
    }
    Ok(short_vectors(&nrd_gram(o.algebra(), o.lattice()), &Q::one())?.len())
}

/// `Σ 1/|O_l(I)^×|` over the given ideals.
pub fn mass(reps: &[RightIdeal]) -> Result<Q> {
    let mut acc = Q::zero();
    for r in reps {
        acc += Q::new(BigInt::one(), BigInt::from(unit_count(&r.left_order())?));
    }
    Ok(acc)
}

fn smallest_unramified_prime(o: &QuatOrder) -> Result<u64> {
    let mut q = 2u64;
    loop {
        if is_prime(q)? && !(o.reduced_disc() % q).is_zero() {
            return Ok(q);
        }
        q += 1;
    }
}

/// One representative per right ideal class of a definite maximal order,
/// the unit ideal first.
pub fn class_set(o: &QuatOrder) -> Result<Vec<RightIdeal>> {
    let q = smallest_unramified_prime(o)?;
    class_set_with_primes(o, &[q])
}

/// Breadth-first search over `q`-neighbors for the listed primes, keeping
/// one ideal per isomorphism class; stops when a layer adds no new class.
pub fn class_set_with_primes(o: &QuatOrder, primes: &[u64]) -> Result<Vec<RightIdeal>> {
    if !o.is_maximal() {
        return Err(Error::NonMaximal);
    }
    if !o.algebra().is_definite() {
        return Err(Error::IndefiniteAlgebra);
    }
    for &q in primes {
        if !is_prime(q)? {
            return Err(Error::NotPrime(q.to_string()));
        }
        if (o.reduced_disc() % q).is_zero() {
            return Err(Error::RamifiedPrime(q));
        }
    }
    let unit = RightIdeal::unit(o);
    let mut reps = vec![unit.clone()];
    // unit counts of left orders are isomorphism invariants; compare them first
    let mut counts = vec![unit_count(o)?];
    let mut frontier = vec![unit];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for i in &frontier {
            for &q in primes {
                for j in neighbors(i, q)? {
                    let c = unit_count(&j.left_order())?;
                    let mut new = true;
                    for (r, &rc) in reps.iter().zip(&counts) {
                        if rc == c && isomorphic_ideals(r, &j)?.is_some() {
                            new = false;
                            break;
                        }
                    }
                    if new {
                        reps.push(j.clone());
                        counts.push(c);
                        next.push(j);
                    }
                }
            }
        }
        frontier = next;
    }
    Ok(reps)
}

/// `(p−1)/12 + (1/3)(1 − (−3/p)) + (1/4)(1 − (−4/p))`, checked to be an integer.
pub fn eichler_class_number(p: u64) -> Result<u64> {
    if !is_prime(p)? {
        return Err(Error::NotPrime(p.to_string()));
    }
    let pi = p as i64;
    let k3 = kronecker(&BigInt::from(-3), pi)? as i64;
    let k4 = kronecker(&BigInt::from(-4), pi)? as i64;
    let h = Q::new(BigInt::from(pi - 1), BigInt::from(12))
        + Q::new(BigInt::from(1 - k3), BigInt::from(3))
        + Q::new(BigInt::from(1 - k4), BigInt::from(4));
    if !h.is_integer() {
        return Err(Error::Internal(format!("class number formula gave {h} at p = {p}")));
    }
    Ok(h.to_integer().try_into().expect("positive class number"))
}

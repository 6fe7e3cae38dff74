use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{
    basis_elems, lattice_conj, lattice_mul_elem, lattice_product, nrd_gram, short_vectors, to_vec, QuatOrder, Q,
};
use crate::error::{Error, Result};
use crate::lattice::{Lattice, QVec};
use crate::numtheory::is_prime;
use crate::quatalg::{rational_sqrt, Quaternion};

/// A right ideal `I` of an order `O` (`I·O ⊆ I`), with its reduced norm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightIdeal {
    order: QuatOrder,
    lattice: Lattice,
    nrd: Q,
}

impl RightIdeal {
    /// Checks right closure and derives `nrd(I)` from `[O : I] = nrd(I)²`.
    pub fn new(order: QuatOrder, lattice: Lattice) -> Result<Self> {
        let alg = order.algebra();
        for x in basis_elems(&lattice) {
            for e in order.basis() {
                if !lattice.contains(&to_vec(&alg.mul(&x, &e))) {
                    return Err(Error::InvalidSpec("lattice is not a right ideal of the order".into()));
                }
            }
        }
        let ratio = lattice.covolume() / order.covolume();
        let nrd = rational_sqrt(&ratio)
            .ok_or_else(|| Error::Internal(format!("index {ratio} of ideal is not a square")))?;
        Ok(RightIdeal { order, lattice, nrd })
    }

    /// `O` as a right ideal of itself.
    pub fn unit(order: &QuatOrder) -> Self {
        RightIdeal {
            lattice: order.lattice().clone(),
            order: order.clone(),
            nrd: Q::one(),
        }
    }

    /// The principal ideal `x·O`.
    pub fn principal(order: &QuatOrder, x: &Quaternion) -> Result<Self> {
        if x.is_zero() {
            return Err(Error::Zero);
        }
        let lat = lattice_mul_elem(order.algebra(), x, order.lattice(), true);
        let out = Self::new(order.clone(), lat)?;
        debug_assert_eq!(out.nrd, num_traits::Signed::abs(&order.algebra().nrd(x)));
        Ok(out)
    }

    pub fn order(&self) -> &QuatOrder {
        &self.order
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn basis(&self) -> Vec<Quaternion> {
        basis_elems(&self.lattice)
    }

    pub fn nrd(&self) -> &Q {
        &self.nrd
    }

    pub fn is_integral(&self) -> bool {
        self.order.lattice().contains_lattice(&self.lattice)
    }

    /// `O_l(I) = I·conj(I)/nrd(I)`.
    pub fn left_order(&self) -> QuatOrder {
        let alg = self.order.algebra();
        let l = lattice_product(alg, &self.lattice, &lattice_conj(&self.lattice)).scale(&self.nrd.recip());
        QuatOrder::from_lattice(alg.clone(), l).expect("left order of an invertible ideal")
    }

    /// `conj(I)`, a right ideal of the left order of `I`.
    pub fn conjugate(&self) -> RightIdeal {
        RightIdeal::new(self.left_order(), lattice_conj(&self.lattice)).expect("conjugate ideal")
    }

    /// `x·I` for a nonzero `x`; the right order is unchanged.
    pub fn left_mul(&self, x: &Quaternion) -> Result<RightIdeal> {
        if x.is_zero() {
            return Err(Error::Zero);
        }
        let lat = lattice_mul_elem(self.order.algebra(), x, &self.lattice, true);
        RightIdeal::new(self.order.clone(), lat)
    }

    /// `c·I` for a nonzero rational `c`.
    pub fn scale(&self, c: &Q) -> Result<RightIdeal> {
        if c.is_zero() {
            return Err(Error::Zero);
        }
        Ok(RightIdeal {
            order: self.order.clone(),
            lattice: self.lattice.scale(c),
            nrd: &self.nrd * c * c,
        })
    }

    pub fn basis_strings(&self) -> Vec<Vec<String>> {
        self.lattice
            .basis()
            .iter()
            .map(|r| r.iter().map(|q| q.to_string()).collect())
            .collect()
    }
}

/// `I·J`, defined when the right order of `I` is the left order of `J`.
pub fn ideal_mul(i: &RightIdeal, j: &RightIdeal) -> Result<RightIdeal> {
    if i.order.lattice() != j.left_order().lattice() || i.order.algebra() != j.order.algebra() {
        return Err(Error::IncompatibleOrders);
    }
    let lat = lattice_product(i.order.algebra(), &i.lattice, &j.lattice);
    let out = RightIdeal::new(j.order.clone(), lat)?;
    if out.nrd != &i.nrd * &j.nrd {
        return Err(Error::Internal("reduced norm is not multiplicative".into()));
    }
    Ok(out)
}

/// Right ideals `J ⊆ I` with `nrd(J) = q·nrd(I)`, sorted by lattice.
///
/// Each is `αO + qI` for some `α ∈ I \ qI` with `q·nrd(I) | nrd(α)`; the
/// candidates α run over projective representatives of `I/qI`.
pub fn neighbors(i: &RightIdeal, q: u64) -> Result<Vec<RightIdeal>> {
    if !is_prime(q)? {
        return Err(Error::NotPrime(q.to_string()));
    }
    let alg = i.order.algebra();
    let b = i.basis();
    let g = nrd_gram(alg, &i.lattice);
    let target = &i.nrd * Q::from_integer(q.into());
    let qq = Q::from_integer(q.into());
    let scaled_i: Vec<QVec> = b.iter().map(|x| to_vec(&x.scale(&qq))).collect();
    let order_basis = i.order.basis();
    let index = Q::from_integer(BigInt::from(q * q));
    let mut found: BTreeMap<Lattice, RightIdeal> = BTreeMap::new();
    let total = q.pow(4);
    for idx in 1..total {
        let c: Vec<u64> = (0..4).map(|k| (idx / q.pow(3 - k as u32)) % q).collect();
        if c.iter().find(|&&x| x != 0) != Some(&1) {
            continue;
        }
        let v: Vec<BigInt> = c.iter().map(|&x| BigInt::from(x)).collect();
        if !(g.eval(&v) / &target).is_integer() {
            continue;
        }
        let alpha = (0..4).fold(Quaternion::zero(), |acc, k| acc.add(&b[k].scale(&Q::from_integer(v[k].clone()))));
        let mut gens: Vec<QVec> = order_basis.iter().map(|e| to_vec(&alg.mul(&alpha, e))).collect();
        gens.extend(scaled_i.iter().cloned());
        let lat = Lattice::from_generators(&gens, 4)?;
        if lat.covolume() / i.lattice.covolume() != index || found.contains_key(&lat) {
            continue;
        }
        let j = RightIdeal::new(i.order.clone(), lat.clone())?;
        found.insert(lat, j);
    }
    Ok(found.into_values().collect())
}

/// The `q + 1` integral right ideals of reduced norm `q` of a maximal order.
pub fn right_ideals_of_norm(o: &QuatOrder, q: u64) -> Result<Vec<RightIdeal>> {
    if !is_prime(q)? {
        return Err(Error::NotPrime(q.to_string()));
    }
    if !o.is_maximal() {
        return Err(Error::NonMaximal);
    }
    if (o.reduced_disc() % q).is_zero() {
        return Err(Error::RamifiedPrime(q));
    }
    let out = neighbors(&RightIdeal::unit(o), q)?;
    if out.len() as u64 != q + 1 {
        return Err(Error::Internal(format!("found {} ideals of norm {q}", out.len())));
    }
    Ok(out)
}

/// Decides whether `J = x·I`; on success returns the witness `x`, already
/// checked by lattice equality.
///
/// Searches `J·conj(I)` for `y` with `nrd(y) = nrd(I)·nrd(J)` and sets
/// `x = y / nrd(I)`.
pub fn isomorphic_ideals(i: &RightIdeal, j: &RightIdeal) -> Result<Option<Quaternion>> {
    if i.order != j.order {
        return Err(Error::OrderMismatch);
    }
    let alg = i.order.algebra();
    if !alg.is_definite() {
        return Err(Error::IndefiniteAlgebra);
    }
    if i.lattice == j.lattice {
        return Ok(Some(Quaternion::one()));
    }
    let l = lattice_product(alg, &j.lattice, &lattice_conj(&i.lattice));
    let t = &i.nrd * &j.nrd;
    let g = nrd_gram(alg, &l).scale(&t.recip());
    let b = basis_elems(&l);
    let inv = i.nrd.recip();
    for v in short_vectors(&g, &Q::one())? {
        if g.eval(&v) != Q::one() {
            continue;
        }
        let y = (0..4).fold(Quaternion::zero(), |acc, k| acc.add(&b[k].scale(&Q::from_integer(v[k].clone()))));
        let x = y.scale(&inv);
        if lattice_mul_elem(alg, &x, &i.lattice, true) == j.lattice {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::latorder::{lambda, maximal_order, GramMatrix};
    use crate::quatalg::QuaternionAlgebra;

    fn hurwitz() -> QuatOrder {
        maximal_order(&QuaternionAlgebra::from_ints(-1, -1).unwrap()).unwrap()
    }

    /// All right ideals between qO and O of index q², by brute force over
    /// 2-dimensional subspaces of O/qO.
    fn oracle_count(o: &QuatOrder, q: u64) -> usize {
        let alg = o.algebra();
        let b = o.basis();
        let qq = Q::from_integer(q.into());
        let mut seen = std::collections::BTreeSet::new();
        let vecs: Vec<Vec<u64>> = (1..q.pow(4))
            .map(|idx| (0..4).map(|k| (idx / q.pow(3 - k as u32)) % q).collect())
            .collect();
        let elem = |c: &Vec<u64>| {
            (0..4).fold(Quaternion::zero(), |acc, k| acc.add(&b[k].scale(&Q::from_integer(c[k].into()))))
        };
        for u in &vecs {
            for w in &vecs {
                let mut gens: Vec<QVec> = b.iter().map(|x| to_vec(&x.scale(&qq))).collect();
                gens.push(to_vec(&elem(u)));
                gens.push(to_vec(&elem(w)));
                let lat = Lattice::from_generators(&gens, 4).unwrap();
                if lat.covolume() / o.lattice().covolume() != Q::from_integer((q * q).into()) {
                    continue;
                }
                let closed = basis_elems(&lat)
                    .iter()
                    .all(|x| b.iter().all(|e| lat.contains(&to_vec(&alg.mul(x, e)))));
                if closed {
                    seen.insert(lat);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn neighbor_counts_match_oracle() {
        let h = hurwitz();
        for q in [3u64, 5] {
            let ideals = right_ideals_of_norm(&h, q).unwrap();
            assert_eq!(ideals.len() as u64, q + 1);
            for j in &ideals {
                assert_eq!(j.nrd(), &Q::from_integer(q.into()));
                assert!(j.is_integral());
            }
        }
        assert_eq!(oracle_count(&h, 3), 4);
        let l11 = lambda(11).unwrap();
        assert_eq!(right_ideals_of_norm(&l11, 2).unwrap().len(), 3);
        assert_eq!(oracle_count(&l11, 2), 3);
    }

    #[test]
    fn ramified_prime_rejected() {
        assert_eq!(right_ideals_of_norm(&hurwitz(), 2), Err(Error::RamifiedPrime(2)));
    }

    #[test]
    fn hurwitz_units() {
        let h = hurwitz();
        let g = nrd_gram(h.algebra(), h.lattice());
        let vs = short_vectors(&g, &Q::one()).unwrap();
        assert_eq!(vs.len(), 24);
        // box search oracle
        let mut count = 0;
        for a in -2i64..=2 {
            for b in -2i64..=2 {
                for c in -2i64..=2 {
                    for d in -2i64..=2 {
                        let v = [a, b, c, d].map(BigInt::from);
                        if g.eval(&v) == Q::one() {
                            count += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(count, 24);
        let _ = GramMatrix::identity(1);
    }

    #[test]
    fn principal_ideals_are_isomorphic_to_order() {
        let h = hurwitz();
        let u = RightIdeal::unit(&h);
        assert_eq!(isomorphic_ideals(&u, &u).unwrap(), Some(Quaternion::one()));
        let x = Quaternion::from_ints([1, 2, -1, 3]);
        let xo = RightIdeal::principal(&h, &x).unwrap();
        assert_eq!(xo.nrd(), &Q::from_integer(15.into()));
        assert!(isomorphic_ideals(&xo, &u).unwrap().is_some());
        assert!(isomorphic_ideals(&u, &xo).unwrap().is_some());
    }

    #[test]
    fn lambda_11_has_two_classes_among_norm_three() {
        let o = lambda(11).unwrap();
        let ideals = right_ideals_of_norm(&o, 3).unwrap();
        let u = RightIdeal::unit(&o);
        let principal = ideals.iter().filter(|j| isomorphic_ideals(&u, j).unwrap().is_some()).count();
        assert!(principal > 0 && principal < ideals.len());
    }

    #[test]
    fn product_of_norms_three_and_five() {
        let h = hurwitz();
        let i = &right_ideals_of_norm(&h, 3).unwrap()[0];
        // conj(K) has left order h for any right ideal K of h
        let j = &right_ideals_of_norm(&h, 5).unwrap()[0].conjugate();
        assert_eq!(j.left_order().lattice(), h.lattice());
        let p = ideal_mul(i, j).unwrap();
        assert_eq!(p.nrd(), &Q::from_integer(15.into()));
        assert_eq!(ideal_mul(i, &RightIdeal::unit(&h)).unwrap(), *i);
    }

    #[test]
    fn incompatible_product_rejected() {
        let o = lambda(11).unwrap();
        let ideals = right_ideals_of_norm(&o, 2).unwrap();
        // some norm-2 ideal has a left order different from O
        let odd = ideals.iter().find(|j| j.left_order().lattice() != o.lattice()).unwrap();
        let conj = odd.conjugate();
        assert_eq!(ideal_mul(odd, odd), Err(Error::IncompatibleOrders));
        let prod = ideal_mul(&conj, odd).unwrap();
        assert_eq!(prod.nrd(), &Q::from_integer(4.into()));
    }
}

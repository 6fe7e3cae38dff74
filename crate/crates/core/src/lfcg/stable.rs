use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::ray::swan_class_group_of_order;
use crate::error::{Error, Result};
use crate::latorder::{ideal_mul, nrd_gram, short_vectors, RightIdeal};
use crate::quatalg::Quaternion;

type Q = BigRational;

/// Stable class of an ideal: the class of its reduced norm in `Cl_A(ℤ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableClass {
    pub nrd: Q,
    /// Element index in the (trivial) group; 0 is the identity.
    pub value: usize,
    pub group_order: u64,
}

impl StableClass {
    pub fn is_identity(&self) -> bool {
        self.value == 0
    }
}

/// Over ℚ every nonzero rational is ± a positive generator of its ideal, so
/// the reduced-norm class is always the identity; the reduced norm is still
/// computed and reported.
pub fn stable_class(j: &RightIdeal) -> Result<StableClass> {
    let g = swan_class_group_of_order(j.order())?;
    if !g.is_trivial() {
        return Err(Error::Internal("Swan group over the rationals is not trivial".into()));
    }
    Ok(StableClass {
        nrd: j.nrd().clone(),
        value: 0,
        group_order: g.order(),
    })
}

pub fn stably_isomorphic(j: &RightIdeal, k: &RightIdeal) -> Result<bool> {
    if j.order() != k.order() {
        return Err(Error::OrderMismatch);
    }
    Ok(stable_class(j)?.value == stable_class(k)?.value)
}

/// `J″` with `J ⊕ J′ ≅ J″ ⊕ Λ`, plus the checks made on it.
#[derive(Debug, Clone)]
pub struct GroupLawWitness {
    pub j2: RightIdeal,
    /// `x` with `J″ = x·J′`.
    pub multiplier: Quaternion,
    pub nrd_j: Q,
    pub nrd_j1: Q,
    pub nrd_j2: Q,
    pub stable_ok: bool,
}

/// Builds `J″ = x·J′` where `x = c/k` for the first `c ∈ J` with
/// `nrd(c) = k²·nrd(J)`, so that `nrd(J″) = nrd(J)·nrd(J′)`. The product is
/// taken as `(x·O_l(J′))·J′` with [`ideal_mul`].
pub fn group_law_check(j: &RightIdeal, j1: &RightIdeal) -> Result<GroupLawWitness> {
    if j.order() != j1.order() {
        return Err(Error::IncompatibleOrders);
    }
    let alg = j.order().algebra();
    if !alg.is_definite() {
        return Err(Error::IndefiniteAlgebra);
    }
    let g = nrd_gram(alg, j.lattice()).scale(&j.nrd().recip());
    let basis = j.basis();
    let mut found = None;
    'search: for k in 1u64..=64 {
        let kk = Q::from_integer(BigInt::from(k * k));
        for v in short_vectors(&g, &kk)? {
            if g.eval(&v) == kk {
                let c = (0..4).fold(Quaternion::zero(), |acc, i| {
                    acc.add(&basis[i].scale(&Q::from_integer(v[i].clone())))
                });
                found = Some(c.scale(&Q::new(BigInt::one(), BigInt::from(k))));
                break 'search;
            }
        }
    }
    let x = found.ok_or_else(|| Error::Internal("no element of square norm ratio found".into()))?;
    let left = j1.left_order();
    let xo = RightIdeal::principal(&left, &x)?;
    let j2 = ideal_mul(&xo, j1)?;
    let (s, s1, s2) = (stable_class(j)?, stable_class(j1)?, stable_class(&j2)?);
    let group = swan_class_group_of_order(j.order())?;
    let stable_ok = group.factors()[0].op(s.value, s1.value) == s2.value;
    let nrd_ok = j2.nrd() == &(j.nrd() * j1.nrd());
    if !stable_ok || !nrd_ok {
        return Err(Error::Internal("group law check failed".into()));
    }
    Ok(GroupLawWitness {
        nrd_j: j.nrd().clone(),
        nrd_j1: j1.nrd().clone(),
        nrd_j2: j2.nrd().clone(),
        multiplier: x,
        j2,
        stable_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::latorder::{class_set, isomorphic_ideals, lambda, maximal_order, right_ideals_of_norm};
    use crate::quatalg::QuaternionAlgebra;

    #[test]
    fn stable_class_examples() {
        let h = maximal_order(&QuaternionAlgebra::from_ints(-1, -1).unwrap()).unwrap();
        let j = &right_ideals_of_norm(&h, 3).unwrap()[0];
        let s = stable_class(j).unwrap();
        assert!(s.is_identity());
        assert_eq!(s.nrd.to_string(), "3");
    }

    #[test]
    fn stable_but_not_isomorphic_in_lambda_11() {
        let o = lambda(11).unwrap();
        let reps = class_set(&o).unwrap();
        assert_eq!(reps.len(), 2);
        assert!(isomorphic_ideals(&reps[0], &reps[1]).unwrap().is_none());
        assert!(stably_isomorphic(&reps[0], &reps[1]).unwrap());
    }

    #[test]
    fn group_law_examples() {
        let o = lambda(11).unwrap();
        let u = RightIdeal::unit(&o);
        let w = group_law_check(&u, &u).unwrap();
        assert_eq!(w.j2, u);
        let a = RightIdeal::principal(&o, &Quaternion::from_ints([1, 1, 0, 0])).unwrap();
        let b = RightIdeal::principal(&o, &Quaternion::from_ints([2, 0, 1, 0])).unwrap();
        let w = group_law_check(&a, &b).unwrap();
        assert!(isomorphic_ideals(&u, &w.j2).unwrap().is_some());
        let reps = class_set(&o).unwrap();
        let w = group_law_check(&reps[1], &reps[1]).unwrap();
        assert_eq!(w.nrd_j2, reps[1].nrd() * reps[1].nrd());
    }

    #[test]
    fn order_mismatch() {
        let a = RightIdeal::unit(&lambda(11).unwrap());
        let b = RightIdeal::unit(&lambda(13).unwrap());
        assert_eq!(stably_isomorphic(&a, &b), Err(Error::OrderMismatch));
        assert!(group_law_check(&a, &b).is_err());
    }
}

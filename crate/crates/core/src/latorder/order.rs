use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{basis_elems, lattice_product, to_vec, Q};
use crate::error::{Error, Result};
use crate::lattice::{det, Lattice, QVec};
use crate::numtheory::{factor, is_square};
use crate::quatalg::{b_p_infinity, Quaternion, QuaternionAlgebra};

/// A ℤ-order: a full lattice containing 1 and closed under multiplication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuatOrder {
    algebra: QuaternionAlgebra,
    lattice: Lattice,
    reduced_disc: BigInt,
    disc_sign: i8,
}

/// Reduced discriminant with the signed trace-pairing determinant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscriminantReport {
    pub reduced_disc: BigInt,
    pub trace_det: BigInt,
}

fn is_integral(alg: &QuaternionAlgebra, x: &Quaternion) -> bool {
    alg.trd(x).is_integer() && alg.nrd(x).is_integer()
}

/// det of the trace pairing `trd(eᵢ·eⱼ)`.
fn trace_det(alg: &QuaternionAlgebra, l: &Lattice) -> Q {
    let b = basis_elems(l);
    let m: Vec<QVec> = b
        .iter()
        .map(|x| b.iter().map(|y| alg.trd(&alg.mul(x, y))).collect())
        .collect();
    det(&m)
}

impl QuatOrder {
    /// Order with the given lattice; checks `1 ∈ O`, closure and the
    /// discriminant identity.
    pub fn from_lattice(algebra: QuaternionAlgebra, lattice: Lattice) -> Result<Self> {
        if !lattice.contains(&to_vec(&Quaternion::one())) {
            return Err(Error::InvalidSpec("lattice does not contain 1".into()));
        }
        let b = basis_elems(&lattice);
        for x in &b {
            for y in &b {
                if !lattice.contains(&to_vec(&algebra.mul(x, y))) {
                    return Err(Error::InvalidSpec("lattice is not closed under multiplication".into()));
                }
            }
        }
        let d = trace_det(&algebra, &lattice);
        if !d.is_integer() || d.is_zero() {
            return Err(Error::Internal(format!("trace determinant {d} is not a nonzero integer")));
        }
        let d = d.to_integer();
        let abs = d.abs();
        if !is_square(&abs) {
            return Err(Error::Internal(format!("trace determinant {d} is not ± a square")));
        }
        Ok(QuatOrder {
            algebra,
            lattice,
            reduced_disc: abs.sqrt(),
            disc_sign: if d.is_negative() { -1 } else { 1 },
        })
    }

    pub fn from_generators(algebra: QuaternionAlgebra, gens: &[Quaternion]) -> Result<Self> {
        let v: Vec<QVec> = gens.iter().map(to_vec).collect();
        Self::from_lattice(algebra, Lattice::from_generators(&v, 4)?)
    }

    pub fn algebra(&self) -> &QuaternionAlgebra {
        &self.algebra
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn basis(&self) -> Vec<Quaternion> {
        basis_elems(&self.lattice)
    }

    pub fn reduced_disc(&self) -> &BigInt {
        &self.reduced_disc
    }

    /// Sign of the trace-pairing determinant.
    pub fn disc_sign(&self) -> i8 {
        self.disc_sign
    }

    pub fn is_maximal(&self) -> bool {
        self.reduced_disc == self.algebra.discriminant()
    }

    pub fn contains(&self, x: &Quaternion) -> bool {
        self.lattice.contains(&to_vec(x))
    }

    pub fn discriminant_report(&self) -> DiscriminantReport {
        DiscriminantReport {
            reduced_disc: self.reduced_disc.clone(),
            trace_det: BigInt::from(self.disc_sign) * &self.reduced_disc * &self.reduced_disc,
        }
    }
}

/// Smallest ring containing `l` and `x`, if it consists of integral elements.
fn ring_closure(alg: &QuaternionAlgebra, l: &Lattice, x: &Quaternion) -> Option<Lattice> {
    let mut gens = l.basis();
    gens.push(to_vec(x));
    let mut cur = Lattice::from_generators(&gens, 4).ok()?;
    for _ in 0..16 {
        if !basis_elems(&cur).iter().all(|e| is_integral(alg, e)) {
            return None;
        }
        let next = cur.sum(&lattice_product(alg, &cur, &cur));
        if next == cur {
            return Some(cur);
        }
        cur = next;
    }
    None
}

/// One step of enlargement at ℓ: the first `x ∈ (1/ℓ)O \ O` (coefficients
/// in lexicographic order) whose generated ring is an order.
fn enlarge_at(o: &QuatOrder, l: u64) -> Option<QuatOrder> {
    let alg = &o.algebra;
    let b = o.basis();
    let tr: Vec<i128> = b.iter().map(|e| alg.trd(e).to_integer().to_i128().unwrap()).collect();
    let pair: Vec<Vec<i128>> = b
        .iter()
        .map(|x| {
            b.iter()
                .map(|y| (alg.norm_pairing(x, y) * Q::from_integer(2.into())).to_integer().to_i128().unwrap())
                .collect()
        })
        .collect();
    let l128 = l as i128;
    let total = l.pow(4);
    for idx in 1..total {
        let c: Vec<i128> = (0..4).map(|i| ((idx / l.pow(3 - i as u32)) % l) as i128).collect();
        let t: i128 = (0..4).map(|i| c[i] * tr[i]).sum();
        if t % l128 != 0 {
            continue;
        }
        // 2·nrd(Σcᵢeᵢ) = Σ cᵢcⱼ·trd(eᵢ·conj eⱼ)
        let mut n2: i128 = 0;
        for i in 0..4 {
            for j in 0..4 {
                n2 += c[i] * c[j] * pair[i][j];
            }
        }
        if n2 % (2 * l128 * l128) != 0 {
            continue;
        }
        let ql = Q::from_integer(l.into());
        let x = (0..4).fold(Quaternion::zero(), |acc, i| {
            acc.add(&b[i].scale(&(Q::from_integer(c[i].into()) / &ql)))
        });
        if let Some(lat) = ring_closure(alg, &o.lattice, &x) {
            if let Ok(bigger) = QuatOrder::from_lattice(alg.clone(), lat) {
                return Some(bigger);
            }
        }
    }
    None
}

/// A maximal order of `B`, grown from `ℤ⟨1, i', j', i'j'⟩` (with `i', j'`
/// integral multiples of `i, j`) by enlarging one prime at a time until the
/// reduced discriminant equals that of the algebra.
pub fn maximal_order(alg: &QuaternionAlgebra) -> Result<QuatOrder> {
    let da = Q::from_integer(alg.a().denom().clone());
    let db = Q::from_integer(alg.b().denom().clone());
    let i = Quaternion::new(Q::zero(), da, Q::zero(), Q::zero());
    let j = Quaternion::new(Q::zero(), Q::zero(), db, Q::zero());
    let k = alg.mul(&i, &j);
    let mut o = QuatOrder::from_generators(alg.clone(), &[Quaternion::one(), i, j, k])?;
    let target = alg.discriminant();
    while o.reduced_disc != target {
        let (ratio, rem) = o.reduced_disc.div_rem(&target);
        if !rem.is_zero() {
            return Err(Error::Internal("order discriminant not a multiple of the algebra's".into()));
        }
        let l = factor(&ratio)?
            .primes()
            .next()
            .ok_or_else(|| Error::Internal("no prime to enlarge at".into()))?;
        o = enlarge_at(&o, l).ok_or_else(|| Error::Internal(format!("no enlargement found at {l}")))?;
    }
    if !o.is_maximal() {
        return Err(Error::Internal("maximal order verification failed".into()));
    }
    Ok(o)
}

/// The maximal order Λ(p) of the algebra ramified exactly at `{p, ∞}`.
pub fn lambda(p: u64) -> Result<QuatOrder> {
    maximal_order(&b_p_infinity(p)?)
}

impl QuatOrder {
    pub(crate) fn covolume(&self) -> Q {
        self.lattice.covolume()
    }
}

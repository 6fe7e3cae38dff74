//! Quaternion algebras `(a, b | ℚ)`: element arithmetic, reduced norm and
//! trace, ramification, the algebras ramified exactly at `{p, ∞}`, and
//! reduced norms of quaternionic matrices.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice;
use crate::numtheory::{candidate_primes, hilbert_symbol, is_prime, is_square, Place};

type Q = BigRational;

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// Quaternion algebra over ℚ with basis `1, i, j, k`, `i² = a`, `j² = b`,
/// `k = ij = −ji`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuaternionAlgebra {
    a: Q,
    b: Q,
    ramified: Vec<Place>,
}

/// An element `t + x·i + y·j + z·k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quaternion(pub [Q; 4]);

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [t, x, y, z] = &self.0;
        write!(f, "{t} + {x}i + {y}j + {z}k")
    }
}

impl Quaternion {
    pub fn new(t: Q, x: Q, y: Q, z: Q) -> Self {
        Quaternion([t, x, y, z])
    }

    pub fn from_ints(c: [i64; 4]) -> Self {
        Quaternion(c.map(q))
    }

    pub fn scalar(s: Q) -> Self {
        Quaternion([s, Q::zero(), Q::zero(), Q::zero()])
    }

    pub fn zero() -> Self {
        Self::scalar(Q::zero())
    }

    pub fn one() -> Self {
        Self::scalar(Q::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Canonical involution `(t, x, y, z) ↦ (t, −x, −y, −z)`.
    pub fn conj(&self) -> Self {
        let [t, x, y, z] = &self.0;
        Quaternion([t.clone(), -x.clone(), -y.clone(), -z.clone()])
    }

    pub fn add(&self, o: &Self) -> Self {
        Quaternion(std::array::from_fn(|i| &self.0[i] + &o.0[i]))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Quaternion(std::array::from_fn(|i| &self.0[i] - &o.0[i]))
    }

    pub fn scale(&self, s: &Q) -> Self {
        Quaternion(std::array::from_fn(|i| &self.0[i] * s))
    }

    pub fn coords(&self) -> &[Q; 4] {
        &self.0
    }
}

impl QuaternionAlgebra {
    /// The algebra `(a, b | ℚ)` together with its ramification set.
    pub fn new(a: Q, b: Q) -> Result<Self> {
        let ramified = ramified_places(&a, &b)?;
        Ok(QuaternionAlgebra { a, b, ramified })
    }

    pub fn from_ints(a: i64, b: i64) -> Result<Self> {
        Self::new(q(a), q(b))
    }

    pub fn a(&self) -> &Q {
        &self.a
    }

    pub fn b(&self) -> &Q {
        &self.b
    }

    pub fn ramified(&self) -> &[Place] {
        &self.ramified
    }

    /// Product of the finite ramified primes.
    pub fn discriminant(&self) -> BigInt {
        self.ramified
            .iter()
            .filter_map(|v| match v {
                Place::Finite(p) => Some(BigInt::from(*p)),
                _ => None,
            })
            .product()
    }

    pub fn is_division(&self) -> bool {
        !self.ramified.is_empty()
    }

    /// Ramified at the real place.
    pub fn is_definite(&self) -> bool {
        self.ramified.contains(&Place::INFINITY)
    }

    pub fn mul(&self, l: &Quaternion, r: &Quaternion) -> Quaternion {
        let (a, b) = (&self.a, &self.b);
        let ab = a * b;
        let [t1, x1, y1, z1] = &l.0;
        let [t2, x2, y2, z2] = &r.0;
        let t = t1 * t2 + a * x1 * x2 + b * y1 * y2 - &ab * z1 * z2;
        let x = t1 * x2 + x1 * t2 - b * y1 * z2 + b * z1 * y2;
        let y = t1 * y2 + y1 * t2 + a * x1 * z2 - a * z1 * x2;
        let z = t1 * z2 + z1 * t2 + x1 * y2 - y1 * x2;
        Quaternion([t, x, y, z])
    }

    /// Reduced norm `t² − a·x² − b·y² + ab·z²`.
    pub fn nrd(&self, e: &Quaternion) -> Q {
        let [t, x, y, z] = &e.0;
        t * t - &self.a * x * x - &self.b * y * y + &self.a * &self.b * z * z
    }

    /// Reduced trace `2t`.
    pub fn trd(&self, e: &Quaternion) -> Q {
        q(2) * &e.0[0]
    }

    pub fn inverse(&self, e: &Quaternion) -> Option<Quaternion> {
        let n = self.nrd(e);
        (!n.is_zero()).then(|| e.conj().scale(&n.recip()))
    }

    /// Bilinear form `(x, y) ↦ trd(x·conj(y))/2`, whose diagonal is `nrd`.
    pub fn norm_pairing(&self, l: &Quaternion, r: &Quaternion) -> Q {
        self.trd(&self.mul(l, &r.conj())) / q(2)
    }
}

/// Places at which `(a, b | ℚ)` is ramified (Hilbert symbol −1), sorted with
/// finite primes first and the real place last.
pub fn ramified_places(a: &Q, b: &Q) -> Result<Vec<Place>> {
    let mut out = Vec::new();
    for p in candidate_primes(a, b)? {
        if hilbert_symbol(a, b, Place::Finite(p))? == -1 {
            out.push(Place::Finite(p));
        }
    }
    if hilbert_symbol(a, b, Place::INFINITY)? == -1 {
        out.push(Place::INFINITY);
    }
    Ok(out)
}

fn is_squarefree(n: u64) -> bool {
    (2..).take_while(|d| d * d <= n).all(|d| n % (d * d) != 0)
}

/// The definite algebra ramified exactly at `{p, ∞}`.
///
/// p = 2 gives `(−1, −1)`, p ≡ 3 (mod 4) gives `(−1, −p)`; otherwise
/// `b = −p` and `a = −n` for the smallest squarefree `n ≥ 2` that passes the
/// ramification self-check.
pub fn b_p_infinity(p: u64) -> Result<QuaternionAlgebra> {
    if !is_prime(p)? {
        return Err(Error::NotPrime(p.to_string()));
    }
    let want = vec![Place::Finite(p), Place::INFINITY];
    let candidates: Box<dyn Iterator<Item = (i64, i64)>> = if p == 2 {
        Box::new(std::iter::once((-1, -1)))
    } else if p % 4 == 3 {
        Box::new(std::iter::once((-1, -(p as i64))))
    } else {
        Box::new(
            (2u64..10_000)
                .filter(|&n| is_squarefree(n))
                .map(move |n| (-(n as i64), -(p as i64))),
        )
    };
    for (a, b) in candidates {
        let alg = QuaternionAlgebra::from_ints(a, b)?;
        if alg.ramified == want {
            return Ok(alg);
        }
    }
    Err(Error::Internal(format!("no presentation of B_{{{p},inf}} found")))
}

/// Square matrix over a quaternion algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuatMatrix {
    n: usize,
    entries: Vec<Quaternion>,
}

impl QuatMatrix {
    pub fn new(n: usize, entries: Vec<Quaternion>) -> Self {
        assert_eq!(entries.len(), n * n, "matrix needs n² entries");
        QuatMatrix { n, entries }
    }

    pub fn identity(n: usize) -> Self {
        let entries = (0..n * n)
            .map(|i| if i / n == i % n { Quaternion::one() } else { Quaternion::zero() })
            .collect();
        QuatMatrix { n, entries }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> &Quaternion {
        &self.entries[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Quaternion) {
        self.entries[r * self.n + c] = v;
    }

    /// Block diagonal `diag(self, other)`.
    pub fn block_diag(&self, other: &QuatMatrix) -> QuatMatrix {
        let n = self.n + other.n;
        let mut m = QuatMatrix::new(n, vec![Quaternion::zero(); n * n]);
        for r in 0..self.n {
            for c in 0..self.n {
                m.set(r, c, self.get(r, c).clone());
            }
        }
        for r in 0..other.n {
            for c in 0..other.n {
                m.set(self.n + r, self.n + c, other.get(r, c).clone());
            }
        }
        m
    }

    pub fn mul(&self, alg: &QuaternionAlgebra, o: &QuatMatrix) -> QuatMatrix {
        assert_eq!(self.n, o.n, "size mismatch");
        let n = self.n;
        let mut out = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = Quaternion::zero();
                for k in 0..n {
                    acc = acc.add(&alg.mul(self.get(r, k), o.get(k, c)));
                }
                out.push(acc);
            }
        }
        QuatMatrix::new(n, out)
    }
}

/// `φ_r(X) = diag(X, I_r)`.
pub fn embed_phi_r(x: &QuatMatrix, r: usize) -> QuatMatrix {
    x.block_diag(&QuatMatrix::identity(r))
}

/// Element `u + v·√a` of ℚ(√a) for a fixed nonsquare `a`.
#[derive(Debug, Clone, PartialEq)]
struct Surd {
    u: Q,
    v: Q,
}

impl Surd {
    fn zero() -> Self {
        Surd { u: Q::zero(), v: Q::zero() }
    }
    fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }
    fn sub(&self, o: &Surd) -> Surd {
        Surd { u: &self.u - &o.u, v: &self.v - &o.v }
    }
    fn mul(&self, o: &Surd, a: &Q) -> Surd {
        Surd {
            u: &self.u * &o.u + a * &self.v * &o.v,
            v: &self.u * &o.v + &self.v * &o.u,
        }
    }
    fn inv(&self, a: &Q) -> Surd {
        let n = &self.u * &self.u - a * &self.v * &self.v;
        Surd { u: &self.u / &n, v: -&self.v / &n }
    }
}

fn surd_det(mut m: Vec<Vec<Surd>>, a: &Q) -> Surd {
    let n = m.len();
    let mut acc = Surd { u: Q::one(), v: Q::zero() };
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return Surd::zero();
        };
        if p != c {
            m.swap(p, c);
            acc = Surd { u: -acc.u, v: -acc.v };
        }
        let piv = m[c][c].clone();
        acc = acc.mul(&piv, a);
        let inv = piv.inv(a);
        for r in c + 1..n {
            if m[r][c].is_zero() {
                continue;
            }
            let f = m[r][c].mul(&inv, a);
            for k in c..n {
                let t = f.mul(&m[c][k], a);
                m[r][k] = m[r][k].sub(&t);
            }
        }
    }
    acc
}

pub(crate) fn rational_sqrt(x: &Q) -> Option<Q> {
    if x.is_negative() || !is_square(x.numer()) || !is_square(x.denom()) {
        return None;
    }
    Some(Q::new(x.numer().sqrt(), x.denom().sqrt()))
}

/// Reduced norm of an n×n quaternionic matrix: the determinant of its
/// 2n×2n image under `i ↦ diag(√a, −√a)`, `j ↦ [[0, b], [1, 0]]`.
///
/// When `a` is a rational square the image is already rational and the
/// determinant is taken over ℚ.
pub fn matrix_nrd(alg: &QuaternionAlgebra, x: &QuatMatrix) -> Result<Q> {
    let n = x.size();
    let a = alg.a().clone();
    let b = alg.b().clone();
    // t + x√a, b(y + z√a) / y − z√a, t − x√a
    let blocks = |e: &Quaternion| -> [[Surd; 2]; 2] {
        let [t, xx, y, z] = e.coords();
        [
            [
                Surd { u: t.clone(), v: xx.clone() },
                Surd { u: &b * y, v: &b * z },
            ],
            [
                Surd { u: y.clone(), v: -z.clone() },
                Surd { u: t.clone(), v: -xx.clone() },
            ],
        ]
    };
    if let Some(r) = rational_sqrt(&a) {
        let mut m = vec![vec![Q::zero(); 2 * n]; 2 * n];
        for i in 0..n {
            for j in 0..n {
                let blk = blocks(x.get(i, j));
                for (di, row) in blk.iter().enumerate() {
                    for (dj, s) in row.iter().enumerate() {
                        m[2 * i + di][2 * j + dj] = &s.u + &s.v * &r;
                    }
                }
            }
        }
        return Ok(lattice::det(&m));
    }
    let mut m = vec![vec![Surd::zero(); 2 * n]; 2 * n];
    for i in 0..n {
        for j in 0..n {
            let blk = blocks(x.get(i, j));
            for (di, row) in blk.into_iter().enumerate() {
                for (dj, s) in row.into_iter().enumerate() {
                    m[2 * i + di][2 * j + dj] = s;
                }
            }
        }
    }
    let d = surd_det(m, &a);
    if !d.v.is_zero() {
        return Err(Error::Internal("reduced norm left the base field".into()));
    }
    Ok(d.u)
}

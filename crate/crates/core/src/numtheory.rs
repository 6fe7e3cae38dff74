//! Integer and rational primitives: factorization, residue symbols and
//! local Hilbert symbols over ℚ.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Inputs at or above this bound are rejected by [`is_prime`].
pub const PRIMALITY_BOUND: u64 = 330_000_000_000_000;

const TRIAL_LIMIT: u64 = 1_000_000;
const MR_WITNESSES: [u64; 7] = [2, 3, 5, 7, 11, 13, 17];

/// A place of ℚ or of a quadratic field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Finite(u64),
    /// Index of a real embedding; ℚ has the single index 0.
    Real(u8),
    Complex,
}

impl Place {
    pub const INFINITY: Place = Place::Real(0);

    pub fn is_archimedean(&self) -> bool {
        !matches!(self, Place::Finite(_))
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "{p}"),
            Place::Real(0) => write!(f, "inf"),
            Place::Real(i) => write!(f, "inf{i}"),
            Place::Complex => write!(f, "complex"),
        }
    }
}

impl Serialize for Place {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Signed prime factorization of a nonzero integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub value: BigInt,
    pub sign: i8,
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Product `sign · ∏ pᵉ`; equals `value` by construction.
    pub fn expand(&self) -> BigInt {
        let mut acc = BigInt::from(self.sign);
        for &(p, e) in &self.factors {
            acc *= BigInt::from(p).pow(e);
        }
        acc
    }

    /// Exponent of `p` (zero when absent).
    pub fn exponent(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin, valid below [`PRIMALITY_BOUND`].
pub fn is_prime(n: u64) -> Result<bool> {
    if n >= PRIMALITY_BOUND {
        return Err(Error::PrimalityBound(n.to_string()));
    }
    if n < 2 {
        return Ok(false);
    }
    for &w in &MR_WITNESSES {
        if n == w {
            return Ok(true);
        }
        if n % w == 0 {
            return Ok(false);
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &w in &MR_WITNESSES {
        let mut x = pow_mod(w, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return Ok(false);
    }
    Ok(true)
}

/// Primality of a prime candidate given as a big integer.
pub fn is_prime_big(n: &BigInt) -> Result<bool> {
    match n.to_u64() {
        Some(v) => is_prime(v),
        None if n.is_negative() => Ok(false),
        None => Err(Error::PrimalityBound(n.to_string())),
    }
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

// Brent's variant of Pollard rho; `n` is odd, composite and free of small factors.
fn rho(n: u64) -> u64 {
    for c in 1u64.. {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut g) = (2u64, 2u64, 1u64);
        let mut r = 1u64;
        let mut q = 1u64;
        let mut ys = 2u64;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..(r - k).min(128) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd_u64(q, n);
                k += 128;
            }
            r <<= 1;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd_u64(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!()
}

fn factor_large(n: u64, out: &mut Vec<u64>) -> Result<()> {
    if n == 1 {
        return Ok(());
    }
    if is_prime(n)? {
        out.push(n);
        return Ok(());
    }
    let d = rho(n);
    factor_large(d, out)?;
    factor_large(n / d, out)
}

/// Factor a nonzero integer: trial division to 10⁶, then Pollard rho.
pub fn factor(n: &BigInt) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::Zero);
    }
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut rest = n.abs();
    let mut factors: Vec<(u64, u32)> = Vec::new();
    let mut p = 2u64;
    while p <= TRIAL_LIMIT {
        let pb = BigInt::from(p);
        if &pb * &pb > rest {
            break;
        }
        let mut e = 0;
        loop {
            let (q, r) = rest.div_rem(&pb);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !rest.is_one() {
        let r = rest
            .to_u64()
            .ok_or_else(|| Error::PrimalityBound(rest.to_string()))?;
        let mut big = Vec::new();
        if r <= TRIAL_LIMIT * TRIAL_LIMIT {
            big.push(r);
        } else {
            factor_large(r, &mut big)?;
        }
        big.sort_unstable();
        for q in big {
            match factors.last_mut() {
                Some((last, e)) if *last == q => *e += 1,
                _ => factors.push((q, 1)),
            }
        }
    }
    Ok(Factorization {
        value: n.clone(),
        sign,
        factors,
    })
}

/// p-adic valuation of a nonzero integer.
pub fn valuation(n: &BigInt, p: u64) -> u32 {
    debug_assert!(!n.is_zero());
    let pb = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&pb);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

fn strip(n: &BigInt, p: u64) -> (u32, BigInt) {
    let pb = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&pb);
        if !r.is_zero() {
            return (v, n);
        }
        n = q;
        v += 1;
    }
}

fn mod_u64(a: &BigInt, m: u64) -> u64 {
    a.mod_floor(&BigInt::from(m)).to_u64().unwrap()
}

// Jacobi symbol (a/n) for odd n > 0.
fn jacobi(mut a: u64, mut n: u64) -> i8 {
    debug_assert!(n % 2 == 1);
    a %= n;
    let mut t = 1i8;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                t = -t;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            t = -t;
        }
        a %= n;
    }
    if n == 1 {
        t
    } else {
        0
    }
}

/// Legendre symbol (a/p) for an odd prime p.
pub fn legendre(a: &BigInt, p: u64) -> Result<i8> {
    if p == 2 || !is_prime(p)? {
        return Err(Error::NotOddPrime(p.to_string()));
    }
    Ok(jacobi(mod_u64(a, p), p))
}

/// Kronecker symbol (a/n), the completely multiplicative extension of the
/// Jacobi symbol to all nonzero n.
pub fn kronecker(a: &BigInt, n: i64) -> Result<i8> {
    if n == 0 {
        return Err(Error::Zero);
    }
    let mut t = 1i8;
    if n < 0 && a.is_negative() {
        t = -t;
    }
    let m = n.unsigned_abs();
    let e = m.trailing_zeros();
    let odd = m >> e;
    if e > 0 {
        if a.is_even() {
            return Ok(0);
        }
        if e % 2 == 1 && matches!(mod_u64(a, 8), 3 | 5) {
            t = -t;
        }
    }
    Ok(t * jacobi(mod_u64(a, odd), odd))
}

/// Square-class representative of a nonzero rational as an integer.
fn square_class(q: &BigRational) -> BigInt {
    q.numer() * q.denom()
}

/// Local Hilbert symbol (a, b)_v over ℚ.
///
/// Complex places always return +1.
pub fn hilbert_symbol(a: &BigRational, b: &BigRational, v: Place) -> Result<i8> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::Zero);
    }
    let a = square_class(a);
    let b = square_class(b);
    Ok(match v {
        Place::Complex => 1,
        Place::Real(_) => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Place::Finite(2) => {
            let (alpha, u) = strip(&a, 2);
            let (beta, w) = strip(&b, 2);
            let (u, w) = (mod_u64(&u, 8), mod_u64(&w, 8));
            let eps = |x: u64| ((x - 1) / 2) % 2;
            let omega = |x: u64| ((x * x - 1) / 8) % 2;
            let e = eps(u) * eps(w) + alpha as u64 * omega(w) + beta as u64 * omega(u);
            if e % 2 == 0 {
                1
            } else {
                -1
            }
        }
        Place::Finite(p) => {
            if !is_prime(p)? {
                return Err(Error::NotPrime(p.to_string()));
            }
            let (alpha, u) = strip(&a, p);
            let (beta, w) = strip(&b, p);
            let mut s = 1i8;
            if alpha % 2 == 1 && beta % 2 == 1 && p % 4 == 3 {
                s = -s;
            }
            if beta % 2 == 1 {
                s *= jacobi(mod_u64(&u, p), p);
            }
            if alpha % 2 == 1 {
                s *= jacobi(mod_u64(&w, p), p);
            }
            s
        }
    })
}

/// Finite places at which (a, b) can possibly be ramified: 2 and the primes
/// dividing the numerators and denominators of a and b.
pub fn candidate_primes(a: &BigRational, b: &BigRational) -> Result<Vec<u64>> {
    let mut ps = vec![2u64];
    for n in [a.numer(), a.denom(), b.numer(), b.denom()] {
        if n.is_zero() {
            return Err(Error::Zero);
        }
        ps.extend(factor(n)?.primes());
    }
    ps.sort_unstable();
    ps.dedup();
    Ok(ps)
}

/// Search for a primitive solution of z² ≡ a·x² + b·y² (mod pᵏ).
///
/// Every primitive solution can be scaled by a unit so that x = 1, or
/// p | x and y = 1; both families are searched exhaustively (the family with
/// p | x and p | y forces p | z and is never primitive).
pub fn solve_conic_mod(a: &BigInt, b: &BigInt, p: u64, k: u32) -> Option<(u64, u64, u64)> {
    assert!(k >= 1, "precision must be positive");
    let m = p.checked_pow(k).expect("modulus overflow");
    let a = mod_u64(a, m);
    let b = mod_u64(b, m);
    let mut root = vec![u64::MAX; m as usize];
    for z in 0..m {
        let s = mul_mod(z, z, m) as usize;
        if root[s] == u64::MAX {
            root[s] = z;
        }
    }
    let lookup = |t: u64| {
        let z = root[t as usize];
        (z != u64::MAX).then_some(z)
    };
    for y in 0..m {
        let t = (a + mul_mod(b, mul_mod(y, y, m), m)) % m;
        if let Some(z) = lookup(t) {
            return Some((1, y, z));
        }
    }
    for x in (0..m).step_by(p as usize) {
        let t = (mul_mod(a, mul_mod(x, x, m), m) + b) % m;
        if let Some(z) = lookup(t) {
            return Some((x, 1, z));
        }
    }
    None
}

/// Integer square root of a nonnegative big integer.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(n.sign() != Sign::Minus);
    n.sqrt()
}

pub fn is_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

//! Full-rank lattices in ℚⁿ with a canonical Hermite normal form.
//!
//! A lattice is stored as `(1/den) · H` where `H` is an upper-triangular
//! integer matrix in row Hermite normal form and `den` is the smallest
//! positive denominator. Two lattices are equal iff their canonical forms are.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type QVec = Vec<BigRational>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lattice {
    den: BigInt,
    rows: Vec<Vec<BigInt>>,
}

fn lcm_of_denominators<'a>(vals: impl Iterator<Item = &'a BigRational>) -> BigInt {
    vals.fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Add one integer vector to an upper-triangular row basis (rows indexed by
/// pivot column; `None` = no pivot yet).
fn insert_row(basis: &mut [Option<Vec<BigInt>>], mut v: Vec<BigInt>) {
    let n = v.len();
    for j in 0..n {
        if v[j].is_zero() {
            continue;
        }
        match basis[j].take() {
            None => {
                basis[j] = Some(v);
                return;
            }
            Some(row) => {
                let ext = row[j].extended_gcd(&v[j]);
                let (g, s, t) = (ext.gcd, ext.x, ext.y);
                let rj = &row[j] / &g;
                let vj = &v[j] / &g;
                let new_row: Vec<BigInt> = (0..n).map(|c| &s * &row[c] + &t * &v[c]).collect();
                let rest: Vec<BigInt> = (0..n).map(|c| &rj * &v[c] - &vj * &row[c]).collect();
                basis[j] = Some(new_row);
                v = rest;
            }
        }
    }
}

fn normalize(basis: &mut [Vec<BigInt>]) {
    let n = basis.len();
    for j in 0..n {
        if basis[j][j].is_negative() {
            for x in basis[j].iter_mut() {
                *x = -x.clone();
            }
        }
    }
    // column by column: reducing column j only touches columns to its right
    for j in 0..n {
        let piv = basis[j][j].clone();
        for i in 0..j {
            let q = basis[i][j].div_floor(&piv);
            if !q.is_zero() {
                let rj = basis[j].clone();
                for (x, y) in basis[i].iter_mut().zip(rj.iter()) {
                    *x -= &q * y;
                }
            }
        }
    }
}

/// Row Hermite normal form of the integer lattice spanned by `gens`.
pub fn hnf(gens: &[Vec<BigInt>], n: usize) -> Result<Vec<Vec<BigInt>>> {
    let mut basis: Vec<Option<Vec<BigInt>>> = vec![None; n];
    for g in gens {
        assert_eq!(g.len(), n, "generator dimension mismatch");
        insert_row(&mut basis, g.clone());
        // keep coefficients bounded by reducing after every insertion
        if basis.iter().all(Option::is_some) {
            let mut full: Vec<Vec<BigInt>> = basis.iter().map(|r| r.clone().unwrap()).collect();
            normalize(&mut full);
            basis = full.into_iter().map(Some).collect();
        }
    }
    if basis.iter().any(Option::is_none) {
        return Err(Error::Degenerate);
    }
    let mut full: Vec<Vec<BigInt>> = basis.into_iter().map(Option::unwrap).collect();
    normalize(&mut full);
    Ok(full)
}

impl Lattice {
    /// Lattice spanned over ℤ by rational vectors of length `n`.
    pub fn from_generators(gens: &[QVec], n: usize) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::Degenerate);
        }
        let den = lcm_of_denominators(gens.iter().flatten());
        let ints: Vec<Vec<BigInt>> = gens
            .iter()
            .map(|g| g.iter().map(|q| (q * &den).to_integer()).collect())
            .collect();
        let rows = hnf(&ints, n)?;
        Ok(Self::canonical(den, rows))
    }

    pub fn from_integer_rows(rows: &[Vec<BigInt>], n: usize) -> Result<Self> {
        Ok(Self::canonical(BigInt::one(), hnf(rows, n)?))
    }

    fn canonical(den: BigInt, mut rows: Vec<Vec<BigInt>>) -> Self {
        let g = rows.iter().flatten().fold(den.clone(), |acc, x| acc.gcd(x));
        if !g.is_one() {
            for x in rows.iter_mut().flatten() {
                *x /= &g;
            }
            return Lattice { den: den / g, rows };
        }
        Lattice { den, rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn integer_rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn basis(&self) -> Vec<QVec> {
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| BigRational::new(x.clone(), self.den.clone()))
                    .collect()
            })
            .collect()
    }

    /// Absolute covolume (determinant of the basis).
    pub fn covolume(&self) -> BigRational {
        let diag = self.rows.iter().enumerate().fold(BigInt::one(), |acc, (i, r)| acc * &r[i]);
        BigRational::new(diag, self.den.pow(self.dim() as u32))
    }

    /// Integer coordinates of `v` in the canonical basis, if `v` lies in the lattice.
    pub fn coordinates(&self, v: &[BigRational]) -> Option<Vec<BigInt>> {
        let mut w: Vec<BigInt> = Vec::with_capacity(v.len());
        for q in v {
            let s = q * &self.den;
            if !s.is_integer() {
                return None;
            }
            w.push(s.to_integer());
        }
        let n = self.dim();
        let mut coords = vec![BigInt::zero(); n];
        for j in 0..n {
            let (c, r) = w[j].div_rem(&self.rows[j][j]);
            if !r.is_zero() {
                return None;
            }
            if !c.is_zero() {
                for (x, y) in w.iter_mut().zip(self.rows[j].iter()) {
                    *x -= &c * y;
                }
            }
            coords[j] = c;
        }
        Some(coords)
    }

    pub fn contains(&self, v: &[BigRational]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        other.basis().iter().all(|b| self.contains(b))
    }

    pub fn sum(&self, other: &Lattice) -> Lattice {
        let mut gens = self.basis();
        gens.extend(other.basis());
        Lattice::from_generators(&gens, self.dim()).expect("sum of full lattices is full")
    }

    pub fn scale(&self, q: &BigRational) -> Lattice {
        assert!(!q.is_zero(), "scaling by zero");
        let gens: Vec<QVec> = self
            .basis()
            .into_iter()
            .map(|b| b.into_iter().map(|x| x * q).collect())
            .collect();
        Lattice::from_generators(&gens, self.dim()).unwrap()
    }

    /// `[self : sub]` when `sub ⊆ self`.
    pub fn index_of(&self, sub: &Lattice) -> Option<BigInt> {
        if !self.contains_lattice(sub) {
            return None;
        }
        let r = sub.covolume() / self.covolume();
        debug_assert!(r.is_integer());
        Some(r.to_integer())
    }
}

/// Exact determinant of a square rational matrix by Gaussian elimination over ℚ.
pub fn det(m: &[QVec]) -> BigRational {
    let n = m.len();
    let mut a: Vec<QVec> = m.to_vec();
    let mut acc = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            a.swap(p, c);
            acc = -acc;
        }
        let piv = a[c][c].clone();
        acc *= &piv;
        for r in c + 1..n {
            if a[r][c].is_zero() {
                continue;
            }
            let f = &a[r][c] / &piv;
            for k in c..n {
                let t = &f * &a[c][k];
                a[r][k] -= t;
            }
        }
    }
    acc
}

//! Positive definite Gram matrices, exact LLL reduction and Fincke–Pohst
//! short-vector enumeration.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

type Q = BigRational;

/// Symmetric rational matrix `G`; the form is `v ↦ vᵀ·G·v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramMatrix {
    entries: Vec<Vec<Q>>,
}

impl GramMatrix {
    pub fn new(entries: Vec<Vec<Q>>) -> Result<Self> {
        let n = entries.len();
        if entries.iter().any(|r| r.len() != n) {
            return Err(Error::Degenerate);
        }
        for i in 0..n {
            for j in 0..i {
                if entries[i][j] != entries[j][i] {
                    return Err(Error::InvalidSpec("Gram matrix is not symmetric".into()));
                }
            }
        }
        Ok(GramMatrix { entries })
    }

    pub fn identity(n: usize) -> Self {
        let entries = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
            .collect();
        GramMatrix { entries }
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Q {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<Q>] {
        &self.entries
    }

    pub fn scale(&self, s: &Q) -> GramMatrix {
        GramMatrix {
            entries: self.entries.iter().map(|r| r.iter().map(|x| x * s).collect()).collect(),
        }
    }

    pub fn eval(&self, v: &[BigInt]) -> Q {
        let n = self.rank();
        let mut acc = Q::zero();
        for i in 0..n {
            if v[i].is_zero() {
                continue;
            }
            for j in 0..n {
                acc += &self.entries[i][j] * Q::from_integer(&v[i] * &v[j]);
            }
        }
        acc
    }

    /// `U·G·Uᵀ` for an integer matrix whose rows are new basis vectors.
    fn transform(&self, u: &[Vec<BigInt>]) -> GramMatrix {
        let n = self.rank();
        let ug: Vec<Vec<Q>> = u
            .iter()
            .map(|row| {
                (0..n)
                    .map(|c| {
                        (0..n)
                            .filter(|&k| !row[k].is_zero())
                            .fold(Q::zero(), |acc, k| acc + Q::from_integer(row[k].clone()) * &self.entries[k][c])
                    })
                    .collect()
            })
            .collect();
        let entries = ug
            .iter()
            .map(|r| {
                u.iter()
                    .map(|row| {
                        (0..n)
                            .filter(|&k| !row[k].is_zero())
                            .fold(Q::zero(), |acc, k| acc + &r[k] * Q::from_integer(row[k].clone()))
                    })
                    .collect()
            })
            .collect();
        GramMatrix { entries }
    }

    /// Decomposition `Q(x) = Σ qᵢᵢ (xᵢ + Σ_{j>i} qᵢⱼ xⱼ)²`; fails unless
    /// every `qᵢᵢ > 0`.
    fn cholesky(&self) -> Result<Vec<Vec<Q>>> {
        let n = self.rank();
        let mut q = self.entries.clone();
        for i in 0..n {
            if !q[i][i].is_positive() {
                return Err(Error::IndefiniteGram);
            }
            for j in i + 1..n {
                q[j][i] = q[i][j].clone();
                q[i][j] = &q[i][j] / &q[i][i];
            }
            for k in i + 1..n {
                for l in k..n {
                    let t = &q[k][i] * &q[i][l];
                    q[k][l] -= t;
                }
            }
        }
        Ok(q)
    }

    pub fn is_positive_definite(&self) -> bool {
        self.cholesky().is_ok()
    }
}

fn gso(g: &GramMatrix) -> (Vec<Vec<Q>>, Vec<Q>) {
    let n = g.rank();
    let mut mu = vec![vec![Q::zero(); n]; n];
    let mut b = vec![Q::zero(); n];
    for i in 0..n {
        for j in 0..i {
            let mut s = g.entries[i][j].clone();
            for k in 0..j {
                s -= &mu[j][k] * &mu[i][k] * &b[k];
            }
            mu[i][j] = s / &b[j];
        }
        let mut s = g.entries[i][i].clone();
        for k in 0..i {
            s -= &mu[i][k] * &mu[i][k] * &b[k];
        }
        b[i] = s;
    }
    (mu, b)
}

fn round(x: &Q) -> BigInt {
    let two = BigInt::from(2);
    (x.numer() * &two + x.denom()).div_floor(&(x.denom() * &two))
}

/// LLL reduction (δ = 3/4) of a positive definite Gram matrix. Returns the
/// reduced Gram matrix and the unimodular matrix `U` with `G' = U·G·Uᵀ`.
pub fn lll(g: &GramMatrix) -> Result<(GramMatrix, Vec<Vec<BigInt>>)> {
    if !g.is_positive_definite() {
        return Err(Error::IndefiniteGram);
    }
    let n = g.rank();
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    let delta = Q::new(3.into(), 4.into());
    let mut k = 1;
    while k < n {
        for j in (0..k).rev() {
            let (mu, _) = gso(&g.transform(&u));
            let r = round(&mu[k][j]);
            if !r.is_zero() {
                let bj = u[j].clone();
                for (x, y) in u[k].iter_mut().zip(bj.iter()) {
                    *x -= &r * y;
                }
            }
        }
        let (mu, b) = gso(&g.transform(&u));
        let m = &mu[k][k - 1];
        if b[k] < (&delta - m * m) * &b[k - 1] {
            u.swap(k, k - 1);
            k = (k - 1).max(1);
        } else {
            k += 1;
        }
    }
    Ok((g.transform(&u), u))
}

/// Integers x with `qii·(x − c)² ≤ r`, in increasing order.
fn admissible(qii: &Q, c: &Q, r: &Q) -> Vec<BigInt> {
    let ok = |x: &BigInt| {
        let d = Q::from_integer(x.clone()) - c;
        qii * &d * &d <= *r
    };
    let start: BigInt = c.floor().to_integer();
    let mut lo = start.clone();
    while ok(&lo) {
        lo -= 1;
    }
    let mut hi = start + 1;
    while ok(&hi) {
        hi += 1;
    }
    let mut out = Vec::new();
    let mut x: BigInt = lo + 1;
    while x < hi {
        out.push(x.clone());
        x += 1;
    }
    out
}

fn enumerate(q: &[Vec<Q>], bound: &Q, out: &mut Vec<Vec<BigInt>>) {
    let n = q.len();
    let mut x = vec![BigInt::zero(); n];
    fn rec(q: &[Vec<Q>], i: usize, rem: Q, x: &mut Vec<BigInt>, out: &mut Vec<Vec<BigInt>>) {
        let n = q.len();
        let mut c = Q::zero();
        for j in i + 1..n {
            c -= &q[i][j] * Q::from_integer(x[j].clone());
        }
        for v in admissible(&q[i][i], &c, &rem) {
            let d = Q::from_integer(v.clone()) - &c;
            let left = &rem - &q[i][i] * &d * &d;
            x[i] = v;
            if i == 0 {
                if x.iter().any(|t| !t.is_zero()) {
                    out.push(x.clone());
                }
            } else {
                rec(q, i - 1, left, x, out);
            }
        }
        x[i] = BigInt::zero();
    }
    if n > 0 {
        rec(q, n - 1, bound.clone(), &mut x, out);
    }
}

/// All nonzero integer vectors `v` with `vᵀ·G·v ≤ bound`, sorted.
pub fn short_vectors(g: &GramMatrix, bound: &Q) -> Result<Vec<Vec<BigInt>>> {
    let (reduced, u) = lll(g)?;
    let chol = reduced.cholesky()?;
    let mut found = Vec::new();
    if bound.is_negative() {
        return Ok(found);
    }
    enumerate(&chol, bound, &mut found);
    let n = g.rank();
    let mut out: Vec<Vec<BigInt>> = found
        .into_iter()
        .map(|w| {
            (0..n)
                .map(|c| (0..n).fold(BigInt::zero(), |acc, k| acc + &w[k] * &u[k][c]))
                .collect()
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Smallest nonzero value of the form.
pub fn minimum(g: &GramMatrix) -> Result<Q> {
    let (reduced, _) = lll(g)?;
    // the first reduced basis vector bounds the minimum from above
    let b = reduced.entries[0][0].clone();
    let vs = short_vectors(g, &b)?;
    Ok(vs.iter().map(|v| g.eval(v)).min().unwrap_or(b))
}

//! Quadratic fields ℚ(√d), their maximal orders, fractional ideals, class
//! groups via binary quadratic forms, and Steinitz classes of lattices.
//!
//! Elements of K are written `x + y·ω` with `ω = (D + √D)/2`, where D is the
//! fundamental discriminant; `{1, ω}` is a ℤ-basis of the ring of integers
//! and `ω² = D·ω − (D² − D)/4`.

mod forms;
mod group;
mod ideal;
mod steinitz;

pub use forms::BinaryForm;
pub use group::{class_group, ClassElem, ClassGroup};
pub use ideal::QuadIdeal;
pub use steinitz::{modules_isomorphic, steinitz_class, QuadModule};

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

fn is_squarefree(n: i64) -> bool {
    let n = n.unsigned_abs();
    let mut p = 2u64;
    while p * p <= n {
        if n % (p * p) == 0 {
            return false;
        }
        p += 1;
    }
    true
}

/// True iff `disc` is the discriminant of a quadratic field.
pub fn is_fundamental(disc: i64) -> bool {
    if disc == 0 || disc == 1 {
        return false;
    }
    match disc.rem_euclid(4) {
        1 => is_squarefree(disc),
        0 => {
            let m = disc / 4;
            matches!(m.rem_euclid(4), 2 | 3) && is_squarefree(m)
        }
        _ => false,
    }
}

/// A quadratic field, identified by its fundamental discriminant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadField {
    d: i64,
    disc: i64,
}

impl QuadField {
    pub fn from_disc(disc: i64) -> Result<Self> {
        if !is_fundamental(disc) {
            return Err(Error::NonFundamental(disc));
        }
        let d = if disc.rem_euclid(4) == 0 { disc / 4 } else { disc };
        Ok(QuadField { d, disc })
    }

    /// Field ℚ(√d) for squarefree d ≠ 0, 1.
    pub fn from_squarefree(d: i64) -> Result<Self> {
        if d == 0 || d == 1 || !is_squarefree(d) {
            return Err(Error::NonFundamental(d));
        }
        let disc = if d.rem_euclid(4) == 1 { d } else { 4 * d };
        Ok(QuadField { d, disc })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn disc(&self) -> i64 {
        self.disc
    }

    pub fn real_places(&self) -> u8 {
        if self.d > 0 {
            2
        } else {
            0
        }
    }

    /// Norm of ω, `(D² − D)/4`.
    pub(crate) fn omega_norm(&self) -> BigInt {
        let d = BigInt::from(self.disc);
        (&d * &d - &d) / 4
    }

    pub fn one(&self) -> QuadElem {
        QuadElem::new(*self, BigRational::from_integer(1.into()), BigRational::zero())
    }

    pub fn omega(&self) -> QuadElem {
        QuadElem::new(*self, BigRational::zero(), BigRational::from_integer(1.into()))
    }

    pub fn int(&self, n: i64) -> QuadElem {
        QuadElem::new(*self, BigRational::from_integer(n.into()), BigRational::zero())
    }

    /// `√d` as an element (positive at the first real embedding).
    pub fn sqrt_d(&self) -> QuadElem {
        // √D = 2ω − D and √D = √d or 2√d
        let two_omega_minus_d = QuadElem::new(
            *self,
            BigRational::from_integer((-self.disc).into()),
            BigRational::from_integer(2.into()),
        );
        if self.disc == self.d {
            two_omega_minus_d
        } else {
            two_omega_minus_d.scale(&BigRational::new(1.into(), 2.into()))
        }
    }
}

/// An element `x + y·ω` of a quadratic field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadElem {
    field: QuadField,
    pub x: BigRational,
    pub y: BigRational,
}

impl QuadElem {
    pub fn new(field: QuadField, x: BigRational, y: BigRational) -> Self {
        QuadElem { field, x, y }
    }

    pub fn from_ints(field: QuadField, x: i64, y: i64) -> Self {
        QuadElem::new(field, BigRational::from_integer(x.into()), BigRational::from_integer(y.into()))
    }

    pub fn field(&self) -> QuadField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn mul(&self, other: &QuadElem) -> QuadElem {
        assert_eq!(self.field, other.field, "field mismatch");
        let d = BigRational::from_integer(self.field.disc.into());
        let n = BigRational::from_integer(self.field.omega_norm());
        let yy = &self.y * &other.y;
        let x = &self.x * &other.x - &n * &yy;
        let y = &self.x * &other.y + &other.x * &self.y + &d * &yy;
        QuadElem::new(self.field, x, y)
    }

    pub fn scale(&self, q: &BigRational) -> QuadElem {
        QuadElem::new(self.field, &self.x * q, &self.y * q)
    }

    /// Field norm `x² + D·x·y + N(ω)·y²`.
    pub fn norm(&self) -> BigRational {
        let d = BigRational::from_integer(self.field.disc.into());
        let n = BigRational::from_integer(self.field.omega_norm());
        &self.x * &self.x + d * &self.x * &self.y + n * &self.y * &self.y
    }

    pub fn trace(&self) -> BigRational {
        let d = BigRational::from_integer(self.field.disc.into());
        BigRational::from_integer(2.into()) * &self.x + d * &self.y
    }

    /// Coordinates in the order `(ω, 1)` used by ideal lattices.
    pub fn coords(&self) -> Vec<BigRational> {
        vec![self.y.clone(), self.x.clone()]
    }

    /// Sign under the real embedding `index` (0: √D ↦ +√D, 1: √D ↦ −√D).
    ///
    /// Returns `None` for imaginary fields.
    pub fn sign_at(&self, index: u8) -> Option<Ordering> {
        if self.field.disc < 0 {
            return None;
        }
        // u + v√D with u = x + yD/2, v = y/2
        let half = BigRational::new(1.into(), 2.into());
        let u = &self.x + &self.y * BigRational::from_integer(self.field.disc.into()) * &half;
        let mut v = &self.y * &half;
        if index == 1 {
            v = -v;
        }
        let su = u.cmp(&BigRational::zero());
        let sv = v.cmp(&BigRational::zero());
        if su == sv || sv == Ordering::Equal {
            return Some(su);
        }
        if su == Ordering::Equal {
            return Some(sv);
        }
        // opposite signs: compare u² with D·v²
        let lhs = &u * &u;
        let rhs = BigRational::from_integer(self.field.disc.into()) * &v * &v;
        Some(if lhs > rhs { su } else { sv })
    }

    pub fn is_totally_positive(&self) -> bool {
        match self.field.disc.cmp(&0) {
            Ordering::Less => !self.is_zero(),
            _ => self.sign_at(0) == Some(Ordering::Greater) && self.sign_at(1) == Some(Ordering::Greater),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.x.is_integer() && self.y.is_integer()
    }

    pub fn neg(&self) -> QuadElem {
        QuadElem::new(self.field, -self.x.clone(), -self.y.clone())
    }

    pub fn is_negative_rational(&self) -> bool {
        self.y.is_zero() && self.x.is_negative()
    }
}

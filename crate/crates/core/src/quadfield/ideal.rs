use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use super::{BinaryForm, QuadElem, QuadField};
use crate::error::{Error, Result};
use crate::lattice::Lattice;

/// A fractional ideal of the maximal order of a quadratic field, stored as a
/// canonical lattice in the coordinates `(ω, 1)` so that the Hermite form is
/// `[[c, s], [0, a]]`, i.e. the ideal `aℤ + (s + cω)ℤ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadIdeal {
    field: QuadField,
    lattice: Lattice,
}

impl QuadIdeal {
    /// Ideal generated over the ring of integers by the given elements.
    pub fn from_generators(field: QuadField, gens: &[QuadElem]) -> Result<Self> {
        let omega = field.omega();
        let mut vecs = Vec::with_capacity(2 * gens.len());
        for g in gens {
            if g.field() != field {
                return Err(Error::FieldMismatch);
            }
            vecs.push(g.coords());
            vecs.push(g.mul(&omega).coords());
        }
        Ok(QuadIdeal {
            field,
            lattice: Lattice::from_generators(&vecs, 2)?,
        })
    }

    pub fn principal(gen: &QuadElem) -> Result<Self> {
        if gen.is_zero() {
            return Err(Error::Zero);
        }
        Self::from_generators(gen.field(), std::slice::from_ref(gen))
    }

    pub fn unit(field: QuadField) -> Self {
        Self::principal(&field.one()).unwrap()
    }

    /// Ideal `aℤ + ((−b + √D)/2)ℤ` attached to a form with `a > 0`.
    pub fn from_form(field: QuadField, f: &BinaryForm) -> Result<Self> {
        if f.disc() != field.disc() as i128 {
            return Err(Error::DiscriminantMismatch(f.disc() as i64, field.disc()));
        }
        if f.a <= 0 {
            return Err(Error::InvalidSpec(format!("form {f} has nonpositive leading coefficient")));
        }
        // (−b + √D)/2 = ω − (b + D)/2
        let shift = -(f.b + field.disc() as i128) / 2;
        let rows = vec![
            vec![BigInt::from(1), BigInt::from(shift)],
            vec![BigInt::from(0), BigInt::from(f.a)],
        ];
        let lattice = Lattice::from_integer_rows(&rows, 2)?;
        let ideal = QuadIdeal { field, lattice };
        debug_assert!(ideal.is_ideal());
        Ok(ideal)
    }

    pub fn field(&self) -> QuadField {
        self.field
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    /// Lattice closed under multiplication by ω.
    pub fn is_ideal(&self) -> bool {
        let omega = self.field.omega();
        self.lattice.basis().into_iter().all(|b| {
            let e = QuadElem::new(self.field, b[1].clone(), b[0].clone());
            self.lattice.contains(&e.mul(&omega).coords())
        })
    }

    /// Absolute norm (index in the ring of integers, extended multiplicatively).
    pub fn norm(&self) -> BigRational {
        self.lattice.covolume()
    }

    pub fn contains(&self, e: &QuadElem) -> bool {
        e.field() == self.field && self.lattice.contains(&e.coords())
    }

    pub fn is_integral(&self) -> bool {
        self.lattice.denominator().is_one()
    }

    pub fn basis(&self) -> Vec<QuadElem> {
        self.lattice
            .basis()
            .into_iter()
            .map(|b| QuadElem::new(self.field, b[1].clone(), b[0].clone()))
            .collect()
    }

    pub fn mul(&self, other: &QuadIdeal) -> Result<QuadIdeal> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let mut gens = Vec::with_capacity(4);
        for x in self.basis() {
            for y in other.basis() {
                gens.push(x.mul(&y).coords());
            }
        }
        Ok(QuadIdeal {
            field: self.field,
            lattice: Lattice::from_generators(&gens, 2)?,
        })
    }

    pub fn scale(&self, q: &BigRational) -> QuadIdeal {
        QuadIdeal {
            field: self.field,
            lattice: self.lattice.scale(q),
        }
    }

    /// Split `self = q · P` with `q > 0` rational and `P` primitive integral;
    /// returns `q` and the form attached to `P`.
    pub fn to_form(&self) -> (BigRational, BinaryForm) {
        let den = self.lattice.denominator().clone();
        let rows = self.lattice.integer_rows();
        // integral HNF [[c, s], [0, a]]; the content of an ideal is c
        let (c, s, a) = (&rows[0][0], &rows[0][1], &rows[1][1]);
        let big_a = a / c;
        let shift = s / c;
        let b = -BigInt::from(2) * shift - BigInt::from(self.field.disc());
        let form = BinaryForm::from_ab(
            big_a.to_i128().expect("norm fits in i128"),
            b.to_i128().expect("coefficient fits in i128"),
            self.field.disc() as i128,
        )
        .expect("ideal lattice yields an integral form");
        (BigRational::new(c.clone(), den), form)
    }
}

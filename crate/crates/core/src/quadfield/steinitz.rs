use super::{ClassElem, ClassGroup, QuadField, QuadIdeal};
use crate::error::{Error, Result};

/// A lattice over the ring of integers, presented as a direct sum of
/// fractional ideals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadModule {
    field: QuadField,
    summands: Vec<QuadIdeal>,
}

impl QuadModule {
    pub fn new(summands: Vec<QuadIdeal>) -> Result<Self> {
        let first = summands.first().ok_or(Error::Degenerate)?;
        let field = first.field();
        if summands.iter().any(|s| s.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Ok(QuadModule { field, summands })
    }

    /// The free module Rⁿ.
    pub fn free(field: QuadField, rank: usize) -> Result<Self> {
        Self::new(vec![QuadIdeal::unit(field); rank])
    }

    pub fn field(&self) -> QuadField {
        self.field
    }

    pub fn rank(&self) -> usize {
        self.summands.len()
    }

    pub fn summands(&self) -> &[QuadIdeal] {
        &self.summands
    }

    pub fn direct_sum(&self, other: &QuadModule) -> Result<QuadModule> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let mut s = self.summands.clone();
        s.extend(other.summands.iter().cloned());
        Ok(QuadModule {
            field: self.field,
            summands: s,
        })
    }

    /// Product of the summands as one ideal.
    pub fn product_ideal(&self) -> QuadIdeal {
        self.summands[1..]
            .iter()
            .fold(self.summands[0].clone(), |acc, j| acc.mul(j).expect("same field"))
    }
}

/// Steinitz class: the wide ideal class of the product of the summands.
pub fn steinitz_class(m: &QuadModule, g: &ClassGroup) -> Result<ClassElem> {
    if g.is_narrow() && g.disc() > 0 {
        return Err(Error::NarrowSteinitz);
    }
    if m.field().disc() != g.disc() {
        return Err(Error::DiscriminantMismatch(m.field().disc(), g.disc()));
    }
    g.ideal_class(&m.product_ideal())
}

/// Two lattices are isomorphic iff they have equal rank and equal Steinitz class.
pub fn modules_isomorphic(m: &QuadModule, n: &QuadModule, g: &ClassGroup) -> Result<bool> {
    if m.field() != n.field() {
        return Err(Error::FieldMismatch);
    }
    if m.rank() != n.rank() {
        return Ok(false);
    }
    Ok(steinitz_class(m, g)? == steinitz_class(n, g)?)
}

use std::collections::HashMap;

use serde::Serialize;

use super::forms::{reduced_forms, BinaryForm};
use super::QuadIdeal;
use crate::abelian::group_structure;
use crate::error::{Error, Result};

/// An element of a [`ClassGroup`], indexing its canonical representatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ClassElem(pub usize);

/// Wide or narrow ideal class group of a quadratic field, realized on
/// reduced binary quadratic forms.
///
/// Negative discriminants: classes are reduced positive definite forms.
/// Positive discriminants: narrow classes are ρ-cycles of reduced forms;
/// wide classes additionally identify a cycle with its negation.
#[derive(Debug, Clone)]
pub struct ClassGroup {
    disc: i64,
    narrow: bool,
    reps: Vec<BinaryForm>,
    lookup: HashMap<BinaryForm, usize>,
}

/// Class group of the maximal order of discriminant `disc`.
pub fn class_group(disc: i64, narrow: bool) -> Result<ClassGroup> {
    if !super::is_fundamental(disc) {
        return Err(Error::NonFundamental(disc));
    }
    let d = disc as i128;
    let principal = BinaryForm::principal(d);
    let mut classes: Vec<Vec<BinaryForm>> = Vec::new();
    if disc < 0 {
        classes.extend(reduced_forms(d).into_iter().map(|f| vec![f]));
    } else {
        let mut seen: HashMap<BinaryForm, usize> = HashMap::new();
        for f in reduced_forms(d) {
            if seen.contains_key(&f) {
                continue;
            }
            let mut members = f.cycle();
            if !narrow {
                let neg = f.negated();
                if !members.contains(&neg) {
                    members.extend(neg.cycle());
                }
            }
            for m in &members {
                seen.insert(*m, classes.len());
            }
            classes.push(members);
        }
    }
    let canonical = |members: &Vec<BinaryForm>| *members.iter().min().unwrap();
    let principal_red = if disc < 0 {
        principal.reduce_definite()
    } else {
        principal.reduce_indefinite()
    };
    classes.sort_by_key(|m| (!m.contains(&principal_red), canonical(m)));
    let mut lookup = HashMap::new();
    let mut reps = Vec::with_capacity(classes.len());
    for (i, members) in classes.iter().enumerate() {
        reps.push(canonical(members));
        for m in members {
            lookup.insert(*m, i);
        }
    }
    Ok(ClassGroup {
        disc,
        narrow,
        reps,
        lookup,
    })
}

impl ClassGroup {
    pub fn disc(&self) -> i64 {
        self.disc
    }

    pub fn is_narrow(&self) -> bool {
        self.narrow
    }

    pub fn order(&self) -> usize {
        self.reps.len()
    }

    pub fn identity(&self) -> ClassElem {
        ClassElem(0)
    }

    pub fn elements(&self) -> impl Iterator<Item = ClassElem> {
        (0..self.reps.len()).map(ClassElem)
    }

    /// Canonical form representing a class.
    pub fn rep(&self, x: ClassElem) -> BinaryForm {
        self.reps[x.0]
    }

    pub fn reps(&self) -> &[BinaryForm] {
        &self.reps
    }

    pub fn class_of_form(&self, f: &BinaryForm) -> Result<ClassElem> {
        if f.disc() != self.disc as i128 {
            return Err(Error::DiscriminantMismatch(f.disc() as i64, self.disc));
        }
        let r = if self.disc < 0 {
            if f.a < 0 {
                return Err(Error::InvalidSpec(format!("negative definite form {f}")));
            }
            f.reduce_definite()
        } else {
            f.reduce_indefinite()
        };
        self.lookup
            .get(&r)
            .map(|&i| ClassElem(i))
            .ok_or_else(|| Error::Internal(format!("reduced form {r} missing from class table")))
    }

    pub fn op(&self, x: ClassElem, y: ClassElem) -> ClassElem {
        let f = self.reps[x.0].compose(&self.reps[y.0]);
        self.class_of_form(&f).expect("composition stays in the group")
    }

    pub fn inverse(&self, x: ClassElem) -> ClassElem {
        self.class_of_form(&self.reps[x.0].inverse()).unwrap()
    }

    pub fn pow(&self, x: ClassElem, mut e: u64) -> ClassElem {
        let mut acc = self.identity();
        let mut base = x;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.op(acc, base);
            }
            base = self.op(base, base);
            e >>= 1;
        }
        acc
    }

    /// Class of a fractional ideal. Rational scalars are totally positive
    /// after taking absolute values, so only the primitive part matters.
    pub fn ideal_class(&self, ideal: &QuadIdeal) -> Result<ClassElem> {
        if ideal.field().disc() != self.disc {
            return Err(Error::DiscriminantMismatch(ideal.field().disc(), self.disc));
        }
        let (_, form) = ideal.to_form();
        self.class_of_form(&form)
    }

    /// Invariant factors of the group.
    pub fn structure(&self) -> Vec<u64> {
        group_structure(self.order(), 0, |a, b| self.op(ClassElem(a), ClassElem(b)).0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadfield::{QuadElem, QuadField};
    use num_rational::BigRational;
    use num_traits::One;

    #[test]
    fn spot_orders() {
        assert_eq!(class_group(-4, false).unwrap().order(), 1);
        let g = class_group(-20, false).unwrap();
        assert_eq!(g.reps(), &[BinaryForm::new(1, 0, 5), BinaryForm::new(2, 2, 3)]);
        assert_eq!(class_group(-23, false).unwrap().order(), 3);
        assert_eq!(class_group(12, true).unwrap().order(), 2);
        assert_eq!(class_group(12, false).unwrap().order(), 1);
        // fundamental unit of norm −1: narrow = wide
        assert_eq!(class_group(5, true).unwrap().order(), 1);
        assert_eq!(class_group(-12, false).unwrap_err(), Error::NonFundamental(-12));
    }

    #[test]
    fn group_axioms_hold() {
        for disc in [-23i64, -84, -20, 12, 60, 221, 229, -199] {
            for narrow in [false, true] {
                let g = class_group(disc, narrow).unwrap();
                let e = g.identity();
                for x in g.elements() {
                    assert_eq!(g.op(x, e), x);
                    assert_eq!(g.op(x, g.inverse(x)), e);
                    for y in g.elements() {
                        assert_eq!(g.op(x, y), g.op(y, x));
                        for z in g.elements() {
                            assert_eq!(g.op(g.op(x, y), z), g.op(x, g.op(y, z)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn structure_of_minus_84_is_klein() {
        assert_eq!(class_group(-84, false).unwrap().structure(), vec![2, 2]);
        assert_eq!(class_group(-23, false).unwrap().structure(), vec![3]);
        assert_eq!(class_group(-4, false).unwrap().structure(), Vec::<u64>::new());
    }

    #[test]
    fn ideal_class_examples() {
        let k = QuadField::from_disc(-4).unwrap();
        let g = class_group(-4, false).unwrap();
        let three = QuadIdeal::principal(&k.int(3)).unwrap();
        assert_eq!(g.ideal_class(&three).unwrap(), g.identity());

        let k = QuadField::from_disc(-20).unwrap();
        let g = class_group(-20, false).unwrap();
        let s = k.sqrt_d();
        let j = QuadIdeal::from_generators(k, &[k.int(2), QuadElem::new(k, &s.x + BigRational::one(), s.y.clone())])
            .unwrap();
        assert_ne!(g.ideal_class(&j).unwrap(), g.identity());
        assert_eq!(g.rep(g.ideal_class(&j).unwrap()), BinaryForm::new(2, 2, 3));

        // (√3) has no totally positive generator
        let k = QuadField::from_disc(12).unwrap();
        let root3 = QuadIdeal::principal(&k.sqrt_d()).unwrap();
        let narrow = class_group(12, true).unwrap();
        let wide = class_group(12, false).unwrap();
        assert_ne!(narrow.ideal_class(&root3).unwrap(), narrow.identity());
        assert_eq!(wide.ideal_class(&root3).unwrap(), wide.identity());
    }

    #[test]
    fn discriminant_mismatch_rejected() {
        let k = QuadField::from_disc(-23).unwrap();
        let g = class_group(-20, false).unwrap();
        assert!(matches!(
            g.ideal_class(&QuadIdeal::unit(k)),
            Err(Error::DiscriminantMismatch(-23, -20))
        ));
    }
}

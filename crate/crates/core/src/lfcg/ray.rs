use serde::Serialize;

use super::spec::{Center, FactorKind, SeparableAlgebraSpec};
use crate::abelian::{group_structure, invariant_factors};
use crate::error::{Error, Result};
use crate::latorder::{maximal_order, QuatOrder};
use crate::quadfield::{class_group, ClassElem, ClassGroup, QuadIdeal};
use crate::quatalg::QuaternionAlgebra;

/// Which real places carry a positivity condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Modulus {
    /// Center ℚ: every ideal has a positive generator.
    Trivial,
    Wide,
    Narrow,
    OneReal(u8),
}

/// `Cl_A(R)` for one simple factor.
#[derive(Debug, Clone)]
pub struct FactorRayGroup {
    center_disc: Option<i64>,
    modulus: Modulus,
    group: Option<ClassGroup>,
    /// Class index in `group` ↦ element index of the ray group.
    coset: Vec<usize>,
    reps: Vec<ClassElem>,
    structure: Vec<u64>,
}

impl FactorRayGroup {
    fn trivial() -> Self {
        FactorRayGroup {
            center_disc: None,
            modulus: Modulus::Trivial,
            group: None,
            coset: vec![0],
            reps: Vec::new(),
            structure: Vec::new(),
        }
    }

    fn quadratic(disc: i64, ramified_real: &[u8]) -> Result<Self> {
        let real_places = if disc > 0 { 2 } else { 0 };
        let modulus = match ramified_real.len() {
            0 => Modulus::Wide,
            n if n == real_places => Modulus::Narrow,
            _ => Modulus::OneReal(ramified_real[0]),
        };
        let narrow = modulus != Modulus::Wide;
        let g = class_group(disc, narrow)?;
        let (coset, reps) = match modulus {
            Modulus::OneReal(_) => one_real_cosets(&g)?,
            _ => ((0..g.order()).collect(), g.elements().collect()),
        };
        let n = reps.len();
        let structure = group_structure(n, 0, |a, b| coset[g.op(reps[a], reps[b]).0]);
        Ok(FactorRayGroup {
            center_disc: Some(disc),
            modulus,
            group: Some(g),
            coset,
            reps,
            structure,
        })
    }

    pub fn center_disc(&self) -> Option<i64> {
        self.center_disc
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn order(&self) -> usize {
        self.structure.iter().product::<u64>() as usize
    }

    pub fn structure(&self) -> &[u64] {
        &self.structure
    }

    /// Element of this factor's group containing the ideal.
    pub fn class_of(&self, ideal: &QuadIdeal) -> Result<usize> {
        match &self.group {
            None => Err(Error::UnsupportedCenter("rational center has no quadratic ideals".into())),
            Some(g) => Ok(self.coset[g.ideal_class(ideal)?.0]),
        }
    }

    pub fn op(&self, x: usize, y: usize) -> usize {
        match &self.group {
            None => 0,
            Some(g) => self.coset[g.op(self.reps[x], self.reps[y]).0],
        }
    }
}

/// Positivity at one real place σ only. A principal ideal `(x)` always has
/// a generator positive at σ (replace x by −x), so the subgroup to divide
/// out of the narrow group is generated by the narrow classes of principal
/// ideals whose generators have mixed signs, i.e. by the class of `(√d)`,
/// whose generator is positive at σ₀ and negative at σ₁.
fn one_real_cosets(narrow: &ClassGroup) -> Result<(Vec<usize>, Vec<ClassElem>)> {
    let k = crate::quadfield::QuadField::from_disc(narrow.disc())?;
    let root = QuadIdeal::principal(&k.sqrt_d())?;
    let h = narrow.ideal_class(&root)?;
    let mut sub = vec![narrow.identity()];
    let mut x = h;
    while x != narrow.identity() {
        sub.push(x);
        x = narrow.op(x, h);
    }
    let mut label = vec![usize::MAX; narrow.order()];
    let mut reps = Vec::new();
    for g in narrow.elements() {
        if label[g.0] != usize::MAX {
            continue;
        }
        for s in &sub {
            label[narrow.op(g, *s).0] = reps.len();
        }
        reps.push(g);
    }
    Ok((label, reps))
}

/// `Cl_A(R)` as a product over the simple factors.
#[derive(Debug, Clone)]
pub struct RayClassGroup {
    factors: Vec<FactorRayGroup>,
    divisors: Vec<u64>,
}

impl RayClassGroup {
    pub fn factors(&self) -> &[FactorRayGroup] {
        &self.factors
    }

    /// Invariant factors `d₁ | d₂ | …` of the whole group.
    pub fn elementary_divisors(&self) -> &[u64] {
        &self.divisors
    }

    pub fn order(&self) -> u64 {
        self.divisors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.divisors.is_empty()
    }
}

pub fn ray_class_group(a: &SeparableAlgebraSpec) -> Result<RayClassGroup> {
    let mut factors = Vec::new();
    for f in a.factors() {
        let ram = f.ramified_real()?;
        factors.push(match f.center {
            Center::Rational => FactorRayGroup::trivial(),
            Center::Quadratic(k) => FactorRayGroup::quadratic(k.disc(), &ram)?,
        });
    }
    let all: Vec<u64> = factors.iter().flat_map(|f| f.structure.iter().copied()).collect();
    Ok(RayClassGroup {
        divisors: invariant_factors(&all),
        factors,
    })
}

/// `Cl(Λ) ≅ Cl_A(R)` for a maximal order Λ of `A`. Quaternion factors over
/// ℚ are checked by constructing a maximal order; the remaining factors are
/// taken with their standard maximal orders.
pub fn swan_class_group(a: &SeparableAlgebraSpec) -> Result<RayClassGroup> {
    for f in a.factors() {
        if let (Center::Rational, FactorKind::Quaternion { a, b }) = (&f.center, &f.kind) {
            let alg = QuaternionAlgebra::new(a.clone(), b.clone())?;
            if !maximal_order(&alg)?.is_maximal() {
                return Err(Error::NonMaximal);
            }
        }
    }
    ray_class_group(a)
}

/// Swan's group of a given order, which must be maximal.
pub fn swan_class_group_of_order(o: &QuatOrder) -> Result<RayClassGroup> {
    if !o.is_maximal() {
        return Err(Error::NonMaximal);
    }
    ray_class_group(&SeparableAlgebraSpec::quaternion(o.algebra())?)
}

//! Locally free class groups of maximal orders: the Eichler condition, ray
//! class groups `Cl_A(R)`, Swan's isomorphism, reduced-norm stable classes
//! and cancellation verdicts for the orders Λ(p).

mod cancel;
mod ray;
mod spec;
mod stable;

pub use cancel::{cancellation_check, cancellation_check_verified, cancellation_table, Verdict};
pub use ray::{ray_class_group, swan_class_group, swan_class_group_of_order, FactorRayGroup, Modulus, RayClassGroup};
pub use spec::{eichler_condition, Center, EichlerReport, FactorEichler, FactorKind, SeparableAlgebraSpec, SimpleFactorSpec};
pub use stable::{group_law_check, stable_class, stably_isomorphic, GroupLawWitness, StableClass};

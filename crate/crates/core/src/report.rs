//! JSON shapes for command output. Exact integers are rendered as decimal
//! strings and rationals as `"num/den"` (or plain integers when the
//! denominator is 1), so no consumer ever sees a rounded number.

use num_rational::BigRational;
use serde_json::{json, Value};

use crate::latorder::{QuatOrder, RightIdeal};
use crate::lfcg::{EichlerReport, RayClassGroup, Verdict};
use crate::numtheory::Place;
use crate::quadfield::ClassGroup;
use crate::quatalg::{Quaternion, QuaternionAlgebra};

pub fn int(n: impl ToString) -> Value {
    Value::String(n.to_string())
}

pub fn rat(q: &BigRational) -> Value {
    Value::String(q.to_string())
}

pub fn ints<T: ToString>(xs: impl IntoIterator<Item = T>) -> Value {
    Value::Array(xs.into_iter().map(int).collect())
}

pub fn places(ps: &[Place]) -> Value {
    Value::Array(ps.iter().map(|p| Value::String(p.to_string())).collect())
}

pub fn quaternion(x: &Quaternion) -> Value {
    Value::Array(x.coords().iter().map(rat).collect())
}

pub fn algebra(alg: &QuaternionAlgebra) -> Value {
    json!({
        "a": rat(alg.a()),
        "b": rat(alg.b()),
        "ramified": places(alg.ramified()),
        "discriminant": int(alg.discriminant()),
        "definite": alg.is_definite(),
    })
}

pub fn basis(rows: &[Quaternion]) -> Value {
    Value::Array(rows.iter().map(quaternion).collect())
}

pub fn order(o: &QuatOrder) -> Value {
    let d = o.discriminant_report();
    json!({
        "algebra": algebra(o.algebra()),
        "basis": basis(&o.basis()),
        "reduced_disc": int(d.reduced_disc),
        "trace_det": int(d.trace_det),
        "maximal": o.is_maximal(),
    })
}

pub fn ideal_class(i: &RightIdeal, units: usize) -> Value {
    json!({
        "nrd": rat(i.nrd()),
        "units": int(units),
        "basis": basis(&i.basis()),
    })
}

pub fn class_group(g: &ClassGroup) -> Value {
    json!({
        "disc": int(g.disc()),
        "narrow": g.is_narrow(),
        "order": int(g.order()),
        "structure": ints(g.structure()),
        "forms": Value::Array(g.reps().iter().map(|f| ints([f.a, f.b, f.c])).collect()),
    })
}

pub fn ray_group(g: &RayClassGroup) -> Value {
    json!({
        "order": int(g.order()),
        "elementary_divisors": ints(g.elementary_divisors().iter().copied()),
        "factors": Value::Array(g.factors().iter().map(|f| json!({
            "center_disc": f.center_disc().map(int).unwrap_or(Value::Null),
            "modulus": serde_json::to_value(f.modulus()).expect("plain enum"),
            "order": int(f.order()),
            "structure": ints(f.structure().iter().copied()),
        })).collect()),
    })
}

pub fn eichler(r: &EichlerReport) -> Value {
    json!({
        "holds": r.holds,
        "factors": Value::Array(r.factors.iter().map(|f| json!({
            "index": int(f.index),
            "holds": f.holds,
            "split_places": f.split_places,
        })).collect()),
    })
}

pub fn verdict(v: &Verdict) -> Value {
    let mut m = json!({
        "p": int(v.p),
        "h": int(v.h),
        "cl": int(v.cl),
        "holds": v.holds,
    });
    if let Some(n) = v.enumerated {
        m["enumerated"] = int(n);
    }
    m
}

/// Wraps a result with the command that produced it.
pub fn envelope(command: &str, result: Value) -> Value {
    json!({ "command": command, "result": result })
}

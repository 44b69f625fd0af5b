//! JSON file formats. Objects are `serde_json` maps, which keep keys sorted,
//! so every writer is deterministic.

use serde_json::{Value, json};

use crate::error::{Error, Result};
use crate::exact_arith::{CyclotomicScalar, LaurentPoly, format_rational, parse_rational};
use crate::fusion_ring::FusionRing;
use crate::modular::ModularData;
use crate::pointed_center::{CenterObject, FiniteAbelianGroup, ThreeCocycle};

fn bad(what: &str) -> Error {
    Error::Format(format!("malformed {what}"))
}

fn field<'a>(v: &'a Value, key: &str, what: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Format(format!("{what}: missing field {key:?}")))
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_u64().and_then(|x| usize::try_from(x).ok()).ok_or_else(|| bad(what))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| bad(what))
}

fn usize_list(v: &Value, what: &str) -> Result<Vec<usize>> {
    as_array(v, what)?.iter().map(|x| as_usize(x, what)).collect()
}

/// Parses a document, mapping syntax errors to `Error::Format`.
pub fn parse(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Format(format!("invalid JSON: {e}")))
}

/// Pretty-printed with a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

pub fn scalar_to_json(x: &CyclotomicScalar) -> Value {
    json!({ "order": x.order(), "coeffs": x.coeffs().iter().map(format_rational).collect::<Vec<_>>() })
}

pub fn scalar_from_json(v: &Value) -> Result<CyclotomicScalar> {
    let order = as_usize(field(v, "order", "scalar")?, "scalar order")?;
    let coeffs = as_array(field(v, "coeffs", "scalar")?, "scalar coefficients")?
        .iter()
        .map(|c| parse_rational(c.as_str().ok_or_else(|| bad("scalar coefficient"))?))
        .collect::<Result<Vec<_>>>()?;
    CyclotomicScalar::from_coeffs(order, &coeffs)
}

pub fn laurent_to_json(p: &LaurentPoly) -> Value {
    json!({ "lo": p.lowest_exponent(), "coeffs": p.coeffs().iter().map(format_rational).collect::<Vec<_>>() })
}

pub fn laurent_from_json(v: &Value) -> Result<LaurentPoly> {
    let lo = field(v, "lo", "polynomial")?.as_i64().ok_or_else(|| bad("polynomial exponent"))?;
    let coeffs = as_array(field(v, "coeffs", "polynomial")?, "polynomial coefficients")?
        .iter()
        .map(|c| parse_rational(c.as_str().ok_or_else(|| bad("polynomial coefficient"))?))
        .collect::<Result<Vec<_>>>()?;
    Ok(LaurentPoly::new(lo, coeffs))
}

/// Fusion-ring file, entries sorted by `(i, j, k)`; `dims` is added as a
/// sibling array when given.
pub fn ring_to_json(ring: &FusionRing, dims: Option<&[CyclotomicScalar]>) -> Value {
    let entries: Vec<Value> = ring.entries().map(|(i, j, k, m)| json!([i, j, k, m])).collect();
    let mut v = json!({ "rank": ring.rank(), "dual": ring.duals(), "N": entries });
    if let Some(d) = dims {
        v["dims"] = Value::Array(d.iter().map(scalar_to_json).collect());
    }
    v
}

/// Reads a fusion-ring file; structural checks (range, duplicates) are those
/// of [`FusionRing::new`], the axioms are left to `validate`.
pub fn ring_from_json(v: &Value) -> Result<(FusionRing, Option<Vec<CyclotomicScalar>>)> {
    let rank = as_usize(field(v, "rank", "ring")?, "ring rank")?;
    let dual = usize_list(field(v, "dual", "ring")?, "ring duals")?;
    let mut entries = Vec::new();
    for e in as_array(field(v, "N", "ring")?, "ring entries")? {
        let e = usize_list(e, "ring entry")?;
        let [i, j, k, m] = e[..] else { return Err(bad("ring entry (expected [i, j, k, mult])")) };
        let m = u32::try_from(m).map_err(|_| bad("ring multiplicity"))?;
        if m == 0 {
            return Err(Error::Format(format!("zero multiplicity listed at ({i}, {j}, {k})")));
        }
        entries.push((i, j, k, m));
    }
    let ring = FusionRing::new(rank, dual, entries)?;
    let dims = match v.get("dims") {
        None => None,
        Some(d) => {
            let d = as_array(d, "ring dims")?.iter().map(scalar_from_json).collect::<Result<Vec<_>>>()?;
            if d.len() != rank {
                return Err(Error::Format(format!("{} dims for rank {rank}", d.len())));
            }
            Some(d)
        }
    };
    Ok((ring, dims))
}

pub fn modular_to_json(d: &ModularData) -> Value {
    let row = |r: &[CyclotomicScalar]| Value::Array(r.iter().map(scalar_to_json).collect());
    json!({
        "rank": d.rank(),
        "order": d.order(),
        "S": d.s().iter().map(|r| row(r)).collect::<Vec<_>>(),
        "T": row(d.t()),
        "C": d.c(),
        "dims": row(d.dims()),
    })
}

/// Every scalar must be stored at the declared shared order.
pub fn modular_from_json(v: &Value) -> Result<ModularData> {
    let rank = as_usize(field(v, "rank", "modular data")?, "rank")?;
    let order = as_usize(field(v, "order", "modular data")?, "order")?;
    let scalars = |x: &Value, what: &str| -> Result<Vec<CyclotomicScalar>> {
        let out = as_array(x, what)?.iter().map(scalar_from_json).collect::<Result<Vec<_>>>()?;
        if out.len() != rank {
            return Err(Error::Format(format!("{what} has {} entries for rank {rank}", out.len())));
        }
        if let Some(x) = out.iter().find(|x| x.order() != order) {
            return Err(Error::Format(format!("{what} holds a scalar of order {} instead of {order}", x.order())));
        }
        Ok(out)
    };
    let s_rows = as_array(field(v, "S", "modular data")?, "S")?;
    if s_rows.len() != rank {
        return Err(Error::Format(format!("S has {} rows for rank {rank}", s_rows.len())));
    }
    let s = s_rows.iter().map(|r| scalars(r, "S row")).collect::<Result<Vec<_>>>()?;
    let t = scalars(field(v, "T", "modular data")?, "T")?;
    let dims = scalars(field(v, "dims", "modular data")?, "dims")?;
    let c = usize_list(field(v, "C", "modular data")?, "C")?;
    ModularData::new(s, t, c, dims)?.with_order(order)
}

/// `{ "group": [n_1, ...], "values": [scalar; |G|^3] }`, values in the
/// order `(g, h, k)` with `g` slowest. `group` may be omitted when the
/// caller supplies it.
pub fn cocycle_to_json(w: &ThreeCocycle) -> Value {
    json!({ "group": w.group().orders(), "values": w.values().iter().map(scalar_to_json).collect::<Vec<_>>() })
}

pub fn cocycle_from_json(v: &Value, group: Option<&FiniteAbelianGroup>) -> Result<ThreeCocycle> {
    let listed = v.get("group").map(|g| usize_list(g, "cocycle group").and_then(FiniteAbelianGroup::new)).transpose()?;
    let group = match (listed, group) {
        (Some(a), Some(b)) if a != *b => return Err(Error::Format(format!("cocycle file is for group {a}, not {b}"))),
        (Some(a), _) => a,
        (None, Some(b)) => b.clone(),
        (None, None) => return Err(Error::Format("cocycle file does not name its group".into())),
    };
    let values = as_array(field(v, "values", "cocycle")?, "cocycle values")?.iter().map(scalar_from_json).collect::<Result<Vec<_>>>()?;
    ThreeCocycle::new(group, values)
}

pub fn center_objects_to_json(group: &FiniteAbelianGroup, objects: &[CenterObject]) -> Value {
    let objs: Vec<Value> = objects
        .iter()
        .enumerate()
        .map(|(i, o)| {
            json!({
                "index": i,
                "element": group.digits(o.element),
                "half_braiding": o.half_braidings().iter().map(scalar_to_json).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({ "group": group.orders(), "objects": objs })
}

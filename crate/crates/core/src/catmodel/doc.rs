//! JSON model documents.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::catmodel::{
    FormalObject, GradedHomTable, LatticeElement, Mode, Model, ObjectClass, Prime, Triangle,
};
use crate::error::{model_err, Error, Result};
use crate::idset::IdSet;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Doc {
    schema_version: u32,
    name: String,
    mode: ModeDoc,
    #[serde(default, skip_serializing_if = "is_false")]
    truncated: bool,
    #[serde(default, skip_serializing_if = "is_false")]
    all_thick_radical: bool,
    classes: Vec<ClassDoc>,
    #[serde(default)]
    hom: Vec<HomDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    primes: Option<Vec<PrimeDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    lattice: Option<Vec<LatticeDoc>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    triangles: Vec<TriangleDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    metadata: BTreeMap<String, String>,
}

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Serialize, Deserialize, Clone, Copy)]
#[serde(rename_all = "snake_case")]
enum ModeDoc {
    LocallyFinite,
    Declared,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ClassDoc {
    id: usize,
    name: String,
    shift_period: PeriodDoc,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum PeriodDoc {
    Finite(u32),
    Free(FreeTag),
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum FreeTag {
    Free,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HomDoc {
    src: usize,
    dst: usize,
    shifts: BTreeMap<i64, i64>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PrimeDoc {
    name: String,
    members: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LatticeDoc {
    id: usize,
    members: Vec<usize>,
    covers: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TriangleDoc {
    x: Vec<(usize, i64)>,
    y: Vec<(usize, i64)>,
    z: Vec<(usize, i64)>,
}

/// Canonical pretty-printed JSON for a model.
pub fn save_model(m: &Model) -> String {
    let k = m.len();
    let mut hom = Vec::new();
    for x in 0..k {
        for y in 0..k {
            let e = m.hom.entries(x, y);
            if !e.is_empty() {
                hom.push(HomDoc {
                    src: x,
                    dst: y,
                    shifts: e.iter().map(|(&i, &d)| (i, d as i64)).collect(),
                });
            }
        }
    }
    let doc = Doc {
        schema_version: SCHEMA_VERSION,
        name: m.name.clone(),
        mode: match m.mode {
            Mode::LocallyFinite => ModeDoc::LocallyFinite,
            Mode::Declared => ModeDoc::Declared,
        },
        truncated: m.truncated,
        all_thick_radical: m.all_thick_radical,
        classes: m
            .classes
            .iter()
            .map(|c| ClassDoc {
                id: c.id,
                name: c.name.clone(),
                shift_period: match c.shift_period {
                    Some(p) => PeriodDoc::Finite(p),
                    None => PeriodDoc::Free(FreeTag::Free),
                },
            })
            .collect(),
        hom,
        primes: (m.mode == Mode::Declared || !m.primes.is_empty()).then(|| {
            m.primes
                .iter()
                .map(|p| PrimeDoc { name: p.name.clone(), members: p.members.to_vec() })
                .collect()
        }),
        lattice: m.lattice.as_ref().map(|l| {
            l.iter()
                .enumerate()
                .map(|(id, e)| LatticeDoc { id, members: e.members.to_vec(), covers: e.covers.clone() })
                .collect()
        }),
        triangles: m
            .triangles
            .iter()
            .map(|t| TriangleDoc { x: t.x.0.clone(), y: t.y.0.clone(), z: t.z.0.clone() })
            .collect(),
        metadata: m.metadata.clone(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("model documents always serialize");
    s.push('\n');
    s
}

fn ids(k: usize, v: &[usize], what: &str) -> Result<IdSet> {
    if let Some(bad) = v.iter().find(|&&i| i >= k) {
        return model_err(format!("{what} mentions unknown class id {bad}"));
    }
    Ok(IdSet::from_ids(k, v.iter().copied()))
}

pub fn load_model(text: &str) -> Result<Model> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let doc: Doc = serde_path_to_error::deserialize(de).map_err(|e| Error::Parse {
        path: e.path().to_string(),
        msg: e.inner().to_string(),
    })?;
    if doc.schema_version != SCHEMA_VERSION {
        return Err(Error::Parse {
            path: "schema_version".into(),
            msg: format!("unsupported version {}", doc.schema_version),
        });
    }
    let mode = match doc.mode {
        ModeDoc::LocallyFinite => Mode::LocallyFinite,
        ModeDoc::Declared => Mode::Declared,
    };
    if mode == Mode::Declared && doc.primes.is_none() {
        return Err(Error::Parse { path: "primes".into(), msg: "declared models must list primes".into() });
    }
    let k = doc.classes.len();
    let classes: Vec<ObjectClass> = doc
        .classes
        .into_iter()
        .map(|c| ObjectClass {
            id: c.id,
            name: c.name,
            shift_period: match c.shift_period {
                PeriodDoc::Finite(p) => Some(p),
                PeriodDoc::Free(_) => None,
            },
        })
        .collect();
    let mut hom = GradedHomTable::new(k);
    for h in &doc.hom {
        if h.src >= k || h.dst >= k {
            return model_err(format!("hom entry ({}, {}) mentions an unknown class", h.src, h.dst));
        }
        for (&i, &d) in &h.shifts {
            if d < 0 {
                return model_err(format!("negative dimension {d} for ({}, {}) at shift {i}", h.src, h.dst));
            }
            hom.set(h.src, h.dst, i, d as u64);
        }
    }
    let primes = doc
        .primes
        .unwrap_or_default()
        .into_iter()
        .map(|p| Ok(Prime { members: ids(k, &p.members, &p.name)?, name: p.name }))
        .collect::<Result<Vec<_>>>()?;
    let lattice = match doc.lattice {
        None => None,
        Some(l) => {
            let mut out = Vec::new();
            for (i, e) in l.into_iter().enumerate() {
                if e.id != i {
                    return model_err(format!("lattice ids must be dense: found {} at {i}", e.id));
                }
                out.push(LatticeElement { members: ids(k, &e.members, "lattice")?, covers: e.covers });
            }
            Some(out)
        }
    };
    let triangles = doc
        .triangles
        .into_iter()
        .map(|t| Triangle { x: FormalObject::new(t.x), y: FormalObject::new(t.y), z: FormalObject::new(t.z) })
        .collect();
    let m = Model {
        name: doc.name,
        mode,
        truncated: doc.truncated,
        all_thick_radical: doc.all_thick_radical,
        classes,
        hom,
        primes,
        lattice,
        triangles,
        metadata: doc.metadata,
    };
    m.validate()?;
    Ok(m)
}

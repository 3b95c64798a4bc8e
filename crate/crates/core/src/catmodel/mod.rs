//! Finite models of compact objects: Σ-orbit classes, graded Hom data and
//! declared primes.

mod builtin;
mod doc;

use std::collections::BTreeMap;
use std::fmt;

pub use builtin::{builtin_model, primes_below, AbelianGroup, BuiltinParams, BUILTIN_NAMES, DEFAULT_LAMBDAS};
pub use doc::{load_model, save_model, SCHEMA_VERSION};

use crate::error::{model_err, Error, Result};
use crate::idset::IdSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    LocallyFinite,
    Declared,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::LocallyFinite => "locally_finite",
            Mode::Declared => "declared",
        })
    }
}

/// Period of Σ on an orbit; `None` when the orbit is free.
pub type ShiftPeriod = Option<u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObjectClass {
    pub id: usize,
    pub name: String,
    pub shift_period: ShiftPeriod,
}

/// dim Hom(X, Σ^i Y) for each ordered pair of classes. Pairs involving a
/// periodic orbit store one period of shifts, 0..P.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedHomTable {
    dims: Vec<Vec<BTreeMap<i64, u64>>>,
}

impl GradedHomTable {
    pub fn new(k: usize) -> Self {
        GradedHomTable { dims: vec![vec![BTreeMap::new(); k]; k] }
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn set(&mut self, x: usize, y: usize, shift: i64, dim: u64) {
        if dim == 0 {
            self.dims[x][y].remove(&shift);
        } else {
            self.dims[x][y].insert(shift, dim);
        }
    }

    /// Stored (shift, dim) entries of a pair; all nonzero.
    pub fn entries(&self, x: usize, y: usize) -> &BTreeMap<i64, u64> {
        &self.dims[x][y]
    }

    pub fn any_nonzero(&self, x: usize, y: usize) -> bool {
        !self.dims[x][y].is_empty()
    }
}

/// Finite multiset of (class, shift), kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FormalObject(pub Vec<(usize, i64)>);

impl FormalObject {
    pub fn new(mut parts: Vec<(usize, i64)>) -> Self {
        parts.sort();
        FormalObject(parts)
    }

    pub fn zero() -> Self {
        FormalObject(Vec::new())
    }

    pub fn of_classes(ids: &[usize]) -> Self {
        Self::new(ids.iter().map(|&i| (i, 0)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn classes(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&(c, _)| c)
    }

    pub fn shifted(&self, s: i64) -> Self {
        FormalObject(self.0.iter().map(|&(c, i)| (c, i + s)).collect())
    }

    pub fn sum(&self, o: &FormalObject) -> Self {
        Self::new(self.0.iter().chain(&o.0).copied().collect())
    }
}

/// A distinguished triangle X → Y → Z → ΣX recorded as model metadata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    pub x: FormalObject,
    pub y: FormalObject,
    pub z: FormalObject,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prime {
    pub name: String,
    pub members: IdSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeElement {
    pub members: IdSet,
    /// Indices of upper covers.
    pub covers: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Model {
    pub name: String,
    pub mode: Mode,
    /// A finite truncation of an infinite catalog; perpendiculars are then
    /// computed within the truncation only.
    pub truncated: bool,
    /// Declared fact that every thick subcategory is radical, so the thick
    /// lattice is generated by the primes.
    pub all_thick_radical: bool,
    pub classes: Vec<ObjectClass>,
    pub hom: GradedHomTable,
    pub primes: Vec<Prime>,
    pub lattice: Option<Vec<LatticeElement>>,
    pub triangles: Vec<Triangle>,
    pub metadata: BTreeMap<String, String>,
}

impl Model {
    pub fn new(name: impl Into<String>, mode: Mode, classes: Vec<ObjectClass>) -> Self {
        let k = classes.len();
        let mut hom = GradedHomTable::new(k);
        for c in &classes {
            hom.set(c.id, c.id, 0, 1);
        }
        Model {
            name: name.into(),
            mode,
            truncated: false,
            all_thick_radical: false,
            classes,
            hom,
            primes: Vec::new(),
            lattice: None,
            triangles: Vec::new(),
            metadata: BTreeMap::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn empty_set(&self) -> IdSet {
        IdSet::empty(self.len())
    }

    pub fn all_set(&self) -> IdSet {
        IdSet::full(self.len())
    }

    pub fn class_id(&self, name: &str) -> Result<usize> {
        self.classes
            .iter()
            .position(|c| c.name == name)
            .ok_or_else(|| Error::Usage(format!("unknown class {name:?} in model {}", self.name)))
    }

    pub fn class_set<S: AsRef<str>>(&self, names: &[S]) -> Result<IdSet> {
        let mut s = self.empty_set();
        for n in names {
            s.insert(self.class_id(n.as_ref())?);
        }
        Ok(s)
    }

    pub fn names(&self, s: &IdSet) -> Vec<String> {
        s.iter().map(|i| self.classes[i].name.clone()).collect()
    }

    /// Period of the pair (X, Y) in the shift variable, if any.
    pub fn pair_period(&self, x: usize, y: usize) -> Option<u32> {
        match (self.classes[x].shift_period, self.classes[y].shift_period) {
            (None, None) => None,
            (Some(p), None) | (None, Some(p)) => Some(p),
            (Some(p), Some(q)) => Some(lcm(p, q)),
        }
    }

    /// dim Hom(X, Σ^i Y).
    pub fn hom_dim(&self, x: usize, y: usize, i: i64) -> u64 {
        let i = match self.pair_period(x, y) {
            Some(p) => i.rem_euclid(p as i64),
            None => i,
        };
        self.hom.entries(x, y).get(&i).copied().unwrap_or(0)
    }

    /// Σ_i dim Hom(X, Σ^i Y); an error when the support is infinite.
    pub fn total_hom(&self, x: usize, y: usize) -> Result<u64> {
        let e = self.hom.entries(x, y);
        if e.is_empty() {
            return Ok(0);
        }
        if self.pair_period(x, y).is_some() {
            return model_err(format!(
                "graded Hom from {} to {} has infinite (periodic) support",
                self.classes[x].name, self.classes[y].name
            ));
        }
        Ok(e.values().sum())
    }

    fn require_hom_data(&self, op: &str) -> Result<()> {
        if self.mode != Mode::LocallyFinite {
            return Err(Error::Mode(format!("{op} needs a locally finite model, {} is declared", self.name)));
        }
        Ok(())
    }

    /// {X : Hom(X, Σ^i Y) = 0 for all Y ∈ S and all i}.
    pub fn perp_left(&self, s: &IdSet) -> Result<IdSet> {
        self.require_hom_data("perp_left")?;
        Ok(IdSet::from_ids(
            self.len(),
            (0..self.len()).filter(|&x| s.iter().all(|y| !self.hom.any_nonzero(x, y))),
        ))
    }

    /// {X : Hom(Y, Σ^i X) = 0 for all Y ∈ S and all i}.
    pub fn perp_right(&self, s: &IdSet) -> Result<IdSet> {
        self.require_hom_data("perp_right")?;
        Ok(IdSet::from_ids(
            self.len(),
            (0..self.len()).filter(|&x| s.iter().all(|y| !self.hom.any_nonzero(y, x))),
        ))
    }

    pub fn thick_closure(&self, s: &IdSet) -> Result<IdSet> {
        self.perp_right(&self.perp_left(s)?)
    }

    /// Intersection of all declared primes containing S.
    pub fn prime_hull(&self, s: &IdSet) -> IdSet {
        let mut out = self.all_set();
        for p in self.primes.iter().filter(|p| s.is_subset(&p.members)) {
            out.intersect_with(&p.members);
        }
        out
    }

    /// Smallest thick subcategory containing S, using whatever structure the
    /// model carries: double perpendicular, a declared lattice, or primes
    /// when every thick subcategory is radical.
    pub fn thick_hull(&self, s: &IdSet) -> Result<IdSet> {
        if self.mode == Mode::LocallyFinite {
            return self.thick_closure(s);
        }
        if let Some(lat) = &self.lattice {
            let mut out = self.all_set();
            for e in lat.iter().filter(|e| s.is_subset(&e.members)) {
                out.intersect_with(&e.members);
            }
            return Ok(out);
        }
        if self.all_thick_radical {
            return Ok(self.prime_hull(s));
        }
        Err(Error::Mode(format!(
            "model {} declares neither a thick lattice nor that all thick subcategories are radical",
            self.name
        )))
    }

    /// Checks all structural invariants.
    pub fn validate(&self) -> Result<()> {
        let k = self.len();
        let mut names = std::collections::BTreeSet::new();
        for (i, c) in self.classes.iter().enumerate() {
            if c.id != i {
                return model_err(format!("class ids must be dense: found {} at position {i}", c.id));
            }
            if !names.insert(c.name.as_str()) {
                return model_err(format!("duplicate class name {:?}", c.name));
            }
            if c.shift_period == Some(0) {
                return model_err(format!("class {:?} has shift period 0", c.name));
            }
        }
        if self.hom.len() != k {
            return model_err("hom table size differs from the catalog");
        }
        for x in 0..k {
            if self.hom_dim(x, x, 0) == 0 {
                return model_err(format!("class {:?} has no identity", self.classes[x].name));
            }
            for y in 0..k {
                if let Some(p) = self.pair_period(x, y) {
                    if self.hom.entries(x, y).keys().any(|&i| i < 0 || i >= p as i64) {
                        return model_err(format!(
                            "pair ({}, {}) is periodic with period {p}; shifts must lie in 0..{p}",
                            self.classes[x].name, self.classes[y].name
                        ));
                    }
                }
            }
        }
        if self.mode == Mode::Declared && self.primes.is_empty() {
            return model_err("declared model without primes");
        }
        for p in &self.primes {
            if p.members.universe() != k {
                return model_err(format!("prime {:?} has the wrong universe", p.name));
            }
        }
        if let Some(lat) = &self.lattice {
            for (i, e) in lat.iter().enumerate() {
                if e.members.universe() != k {
                    return model_err(format!("lattice element {i} has the wrong universe"));
                }
                for &c in &e.covers {
                    if c >= lat.len() || !e.members.is_subset(&lat[c].members) || e.members == lat[c].members {
                        return model_err(format!("lattice element {i} has an invalid cover {c}"));
                    }
                }
            }
        }
        for t in &self.triangles {
            for f in [&t.x, &t.y, &t.z] {
                if f.classes().any(|c| c >= k) {
                    return model_err("triangle mentions an unknown class");
                }
            }
        }
        Ok(())
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    fn gcd(a: u32, b: u32) -> u32 {
        if b == 0 { a } else { gcd(b, a % b) }
    }
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ka2() -> Model {
        builtin_model("kA2", &BuiltinParams::default()).unwrap()
    }

    #[test]
    fn perp_examples() {
        let m = ka2();
        assert_eq!(m.perp_left(&m.empty_set()).unwrap(), m.all_set());
        assert!(m.perp_left(&m.all_set()).unwrap().is_empty());
        let s1 = m.class_set(&["S1"]).unwrap();
        assert_eq!(m.names(&m.perp_left(&s1).unwrap()), ["S2"]);
        assert!(m.thick_closure(&m.empty_set()).unwrap().is_empty());
    }

    #[test]
    fn closure_needs_hom_data() {
        let m = builtin_model("A_infinity", &BuiltinParams::default()).unwrap();
        assert!(matches!(m.thick_closure(&m.empty_set()), Err(Error::Mode(_))));
        // the declared lattice still provides hulls
        assert_eq!(m.thick_hull(&m.empty_set()).unwrap(), m.empty_set());
    }

    #[test]
    fn periodic_total_is_infinite() {
        let m = builtin_model("stmod_Cp", &BuiltinParams { p: Some(5), ..Default::default() }).unwrap();
        assert!(matches!(m.total_hom(0, 1), Err(Error::Model(_))));
        assert_eq!(m.hom_dim(0, 0, 2), m.hom_dim(0, 0, 0));
    }

    #[test]
    fn validation_catches_missing_identity() {
        let mut m = ka2();
        m.hom.set(1, 1, 0, 0);
        assert!(m.validate().is_err());
    }
}

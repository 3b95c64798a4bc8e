//! Spectra of thick subcategories and the classification of radical thick
//! subcategories by supports.

mod lattice;
mod space;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::catmodel::{FormalObject, Mode, Model};
use crate::error::{Error, Result};
use crate::idset::IdSet;

pub use lattice::Lattice;
pub use space::{FiniteSpace, Point};

/// A set of class ids standing for a thick subcategory.
pub type ThickSet = IdSet;

/// Spectrum whose points are thick subcategories.
pub type ThickSpace = FiniteSpace<ThickSet>;

/// Enumeration limits. `SPECLAB_GUARD=N` raises the class and point limits
/// to N.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guard {
    pub max_classes: usize,
    pub max_points: usize,
    pub max_sets: usize,
}

impl Default for Guard {
    fn default() -> Self {
        Guard { max_classes: 18, max_points: 18, max_sets: 1 << 20 }
    }
}

impl Guard {
    pub fn from_env() -> Guard {
        let mut g = Guard::default();
        if let Some(n) = std::env::var("SPECLAB_GUARD").ok().and_then(|v| v.trim().parse::<usize>().ok()) {
            g.max_classes = g.max_classes.max(n);
            g.max_points = g.max_points.max(n);
            g.max_sets = g.max_sets.max(1usize << (n + 2).min(40));
        }
        g
    }
}

/// Points are the distinct shift-primes: left perpendiculars of single
/// classes in locally finite models, the declared primes otherwise. The
/// basic closed sets are the supports of the classes.
pub fn shift_spectrum(model: &Model) -> Result<ThickSpace> {
    let points: Vec<Point<ThickSet>> = match model.mode {
        Mode::LocallyFinite => {
            let mut pts: Vec<Point<ThickSet>> = Vec::new();
            for a in 0..model.len() {
                let p = model.perp_left(&IdSet::singleton(model.len(), a))?;
                if !pts.iter().any(|q| q.payload == p) {
                    pts.push(Point { name: format!("perp({})", model.classes[a].name), payload: p });
                }
            }
            pts
        }
        Mode::Declared => model
            .primes
            .iter()
            .map(|p| Point { name: p.name.clone(), payload: p.members.clone() })
            .collect(),
    };
    let closed_basis = (0..model.len())
        .map(|c| IdSet::from_ids(points.len(), (0..points.len()).filter(|&i| !points[i].payload.contains(c))))
        .collect();
    Ok(FiniteSpace { points, closed_basis })
}

/// Points are the classes; X lies in the basic closed set of C when some
/// shifted Hom from C to X is nonzero.
pub fn shift_homological_spectrum(model: &Model) -> Result<FiniteSpace<usize>> {
    if model.mode != Mode::LocallyFinite {
        return Err(Error::Mode(format!(
            "the homological spectrum needs Hom data; model {} is declared",
            model.name
        )));
    }
    let k = model.len();
    let points = model.classes.iter().map(|c| Point { name: c.name.clone(), payload: c.id }).collect();
    let closed_basis = (0..k)
        .map(|c| IdSet::from_ids(k, (0..k).filter(|&x| model.hom.any_nonzero(c, x))))
        .collect();
    Ok(FiniteSpace { points, closed_basis })
}

/// Homological support of a formal object.
pub fn homological_support(model: &Model, space: &FiniteSpace<usize>, c: &FormalObject) -> Result<IdSet> {
    check_ids(model, c)?;
    let mut out = space.none();
    for x in c.classes() {
        out.union_with(&IdSet::from_ids(
            space.len(),
            (0..space.len()).filter(|&i| model.hom.any_nonzero(x, space.points[i].payload)),
        ));
    }
    Ok(out)
}

fn check_ids(model: &Model, c: &FormalObject) -> Result<()> {
    match c.classes().find(|&x| x >= model.len()) {
        Some(x) => Err(Error::Model(format!("class id {x} is not in model {}", model.name))),
        None => Ok(()),
    }
}

/// Points not containing some summand of `c`.
pub fn support(model: &Model, space: &ThickSpace, c: &FormalObject) -> Result<IdSet> {
    check_ids(model, c)?;
    let ids: Vec<usize> = c.classes().collect();
    Ok(IdSet::from_ids(
        space.len(),
        (0..space.len()).filter(|&i| ids.iter().any(|&x| !space.points[i].payload.contains(x))),
    ))
}

/// Union of the supports of the members of `l`.
pub fn support_of_thick(space: &ThickSpace, l: &ThickSet) -> IdSet {
    IdSet::from_ids(space.len(), (0..space.len()).filter(|&i| !l.is_subset(&space.points[i].payload)))
}

/// Intersection of the points containing `l`; the whole catalog if none do.
pub fn radical(space: &ThickSpace, l: &ThickSet) -> ThickSet {
    let mut out = IdSet::full(l.universe());
    for p in space.points.iter().filter(|p| l.is_subset(&p.payload)) {
        out.intersect_with(&p.payload);
    }
    out
}

/// Classes whose support lies in `u`, i.e. the intersection of the points
/// outside `u`.
pub fn psi(model: &Model, space: &ThickSpace, u: &IdSet) -> ThickSet {
    let mut out = model.all_set();
    for (i, p) in space.points.iter().enumerate() {
        if !u.contains(i) {
            out.intersect_with(&p.payload);
        }
    }
    out
}

/// One row of the classification: a radical thick subcategory and its
/// support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifyRow {
    pub thick: ThickSet,
    pub support: IdSet,
}

/// Radical thick subcategories paired with their supports, found by
/// applying Ψ to every subset of points. Checks that support and Ψ are
/// mutually inverse on the result.
pub fn classify(model: &Model, space: &ThickSpace, guard: Guard, jobs: usize) -> Result<Vec<ClassifyRow>> {
    let n = space.len();
    if n > guard.max_points {
        return Err(Error::Guard(format!(
            "{n} points means 2^{n} candidate subsets; limit is 2^{}",
            guard.max_points
        )));
    }
    let work = |m: u64| psi(model, space, &IdSet::from_ids(n, (0..n).filter(|i| m >> i & 1 == 1)));
    let total = 1u64 << n;
    let found: Vec<ThickSet> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Internal(e.to_string()))?;
        pool.install(|| (0..total).into_par_iter().map(work).collect())
    } else {
        (0..total).map(work).collect()
    };
    let mut rows: BTreeMap<ThickSet, IdSet> = BTreeMap::new();
    for l in found {
        if !rows.contains_key(&l) {
            let s = support_of_thick(space, &l);
            rows.insert(l, s);
        }
    }
    for (l, s) in &rows {
        if psi(model, space, s) != *l || radical(space, l) != *l {
            return Err(Error::Internal(format!("support and psi disagree on {l:?}")));
        }
    }
    Ok(rows.into_iter().map(|(thick, support)| ClassifyRow { thick, support }).collect())
}

/// Every thick subcategory, with covers. Locally finite models are
/// enumerated as intersections of right perpendiculars; declared models
/// use the declared lattice, or the radical subcategories when all thick
/// subcategories are declared radical.
pub fn enumerate_thicks(model: &Model, guard: Guard) -> Result<Lattice> {
    let k = model.len();
    match model.mode {
        Mode::LocallyFinite => {
            if k > guard.max_classes {
                return Err(Error::Guard(format!("{k} classes exceeds the limit of {}", guard.max_classes)));
            }
            let gens = (0..k)
                .map(|y| model.perp_right(&IdSet::singleton(k, y)))
                .collect::<Result<Vec<_>>>()?;
            let els = lattice::intersection_closure(k, &gens, guard.max_sets)?;
            Lattice::from_closure(k, els, |s| model.thick_closure(s))
        }
        Mode::Declared => {
            if let Some(l) = lattice::declared_lattice(model) {
                return Ok(l);
            }
            if !model.all_thick_radical {
                return Err(Error::Mode(format!(
                    "model {} declares neither a thick lattice nor that all thick subcategories are radical",
                    model.name
                )));
            }
            let gens: Vec<IdSet> = model.primes.iter().map(|p| p.members.clone()).collect();
            let els = lattice::intersection_closure(k, &gens, guard.max_sets)?;
            Lattice::from_closure(k, els, |s| Ok(model.prime_hull(s)))
        }
    }
}

/// Elements with exactly one upper cover; basic closed sets are
/// {P : A ∉ P} over the classes A.
pub fn matsui_spectrum(lattice: &Lattice) -> ThickSpace {
    let points: Vec<Point<ThickSet>> = (0..lattice.len())
        .filter(|&i| lattice.covers[i].len() == 1)
        .map(|i| Point { name: format!("e{i}"), payload: lattice.elements[i].clone() })
        .collect();
    let closed_basis = (0..lattice.universe)
        .map(|a| IdSet::from_ids(points.len(), (0..points.len()).filter(|&i| !points[i].payload.contains(a))))
        .collect();
    FiniteSpace { points, closed_basis }
}

/// All lattice elements, closed sets generated by the up-sets ∨(L).
pub fn fspcnt_space(lattice: &Lattice) -> ThickSpace {
    let points = (0..lattice.len())
        .map(|i| Point { name: format!("e{i}"), payload: lattice.elements[i].clone() })
        .collect();
    let closed_basis = (0..lattice.len()).map(|i| lattice.up_set(i)).collect();
    FiniteSpace { points, closed_basis }
}

/// For each class A: whether every indecomposable in thick(A) generates
/// the same thick subcategory as A.
pub fn is_discrete_criterion(model: &Model) -> Result<Vec<bool>> {
    let k = model.len();
    let thick: Vec<IdSet> = (0..k)
        .map(|a| model.thick_closure(&IdSet::singleton(k, a)))
        .collect::<Result<_>>()?;
    Ok((0..k).map(|a| thick[a].iter().all(|b| thick[b] == thick[a])).collect())
}

/// Names the classes of a set, in id order.
pub fn thick_label(model: &Model, s: &ThickSet) -> String {
    lattice::set_label(s, &model.names(&model.all_set()))
}

/// Structured description of a space.
pub fn space_to_json<P>(space: &FiniteSpace<P>) -> Value {
    let name = |s: &IdSet| s.iter().map(|i| space.points[i].name.clone()).collect::<Vec<_>>();
    json!({
        "points": space.points.iter().map(|p| p.name.clone()).collect::<Vec<_>>(),
        "closed_basis": space.closed_basis.iter().map(name).collect::<Vec<_>>(),
        "closures": space.closures().iter().map(name).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catmodel::{builtin_model, BuiltinParams};

    fn model(name: &str, p: BuiltinParams) -> Model {
        builtin_model(name, &p).unwrap()
    }

    fn ka2() -> Model {
        model("kA2", BuiltinParams::default())
    }

    #[test]
    fn ka2_spectrum_and_lattice() {
        let m = ka2();
        let s = shift_spectrum(&m).unwrap();
        assert_eq!(s.len(), 3);
        assert!(s.is_discrete());
        let l = enumerate_thicks(&m, Guard::default()).unwrap();
        assert_eq!(l.len(), 5);
        assert_eq!(l.layer_sizes(), vec![1, 3, 1]);
        for (i, p) in s.points.iter().enumerate() {
            assert_eq!(support_of_thick(&s, &p.payload), IdSet::singleton(3, i).complement());
        }
        for e in &l.elements {
            assert_eq!(radical(&s, e), *e);
        }
        assert_eq!(classify(&m, &s, Guard::default(), 1).unwrap().len(), 5);
        let q = shift_homological_spectrum(&m).unwrap().kolmogorov_quotient();
        assert!(q.find_homeomorphism(&s).is_some());
        assert!(is_discrete_criterion(&m).unwrap().iter().all(|&b| b));
    }

    #[test]
    fn ka2_meets_not_preserved() {
        let m = ka2();
        let s = shift_spectrum(&m).unwrap();
        let (p, q) = (&s.points[0].payload, &s.points[1].payload);
        let meet = support_of_thick(&s, &p.intersection(q));
        let inter = support_of_thick(&s, p).intersection(&support_of_thick(&s, q));
        assert!(meet.is_empty());
        assert_ne!(inter, meet);
    }

    #[test]
    fn cyclic_group_spectra() {
        let m = model("stmod_Cp", BuiltinParams { p: Some(5), ..Default::default() });
        let h = shift_homological_spectrum(&m).unwrap();
        assert_eq!(h.len(), 2);
        assert!(h.is_indiscrete());
        assert_eq!(h.kolmogorov_quotient().len(), 1);
        assert_eq!(shift_spectrum(&m).unwrap().len(), 1);
    }

    #[test]
    fn integers() {
        let m = model("specZ", BuiltinParams { bound: Some(10), ..Default::default() });
        let s = shift_spectrum(&m).unwrap();
        assert_eq!(s.len(), 5);
        let z = m.class_id("Z").unwrap();
        assert!(support(&m, &s, &FormalObject::of_classes(&[z])).unwrap().is_full());
        let rows = classify(&m, &s, Guard::default(), 2).unwrap();
        let closed = s.closed_sets(1 << 10).unwrap();
        let mut supports: Vec<IdSet> = rows.iter().map(|r| r.support.clone()).collect();
        supports.sort();
        assert_eq!(supports, closed);
        assert_eq!(enumerate_thicks(&m, Guard::default()).unwrap().len(), 17);
    }

    #[test]
    fn a_infinity() {
        let m = model("A_infinity", BuiltinParams { k: Some(3), ..Default::default() });
        let s = shift_spectrum(&m).unwrap();
        let r0 = radical(&s, &m.empty_set());
        assert!(!r0.is_empty() && !r0.is_full());
        assert_eq!(classify(&m, &s, Guard::default(), 1).unwrap().len(), 2);
        let l = enumerate_thicks(&m, Guard::default()).unwrap();
        assert!(matsui_spectrum(&l).is_sierpinski());
        let f = fspcnt_space(&l);
        let expect: Vec<IdSet> =
            vec![IdSet::empty(3), IdSet::from_ids(3, [2]), IdSet::from_ids(3, [1, 2]), IdSet::full(3)];
        assert_eq!(f.closed_sets(100).unwrap(), expect);
    }

    #[test]
    fn matsui_of_one_element_lattice_is_empty() {
        let l = Lattice { universe: 1, elements: vec![IdSet::full(1)], covers: vec![vec![]] };
        assert!(matsui_spectrum(&l).is_empty());
    }

    #[test]
    fn declared_shspec_is_mode_error() {
        let m = model("A_infinity", BuiltinParams::default());
        assert!(matches!(shift_homological_spectrum(&m), Err(Error::Mode(_))));
    }

    #[test]
    fn guards() {
        let m = model("tube_n", BuiltinParams { n: Some(5), ..Default::default() });
        assert!(matches!(enumerate_thicks(&m, Guard::default()), Err(Error::Guard(_))));
    }
}

use crate::catmodel::{FormalObject, LatticeElement, Mode, Model, ObjectClass, Prime, Triangle};
use crate::error::{Error, Result};
use crate::idset::IdSet;
use crate::quiverrep::{catalog_an, catalog_kronecker, interval_name, Catalog, Family, Param};
use crate::scalar::{Rational, Scalar};
use crate::tube;

pub const BUILTIN_NAMES: &[&str] =
    &["kA2", "An", "kronecker", "tube_n", "specZ", "A_infinity", "D_infinity", "stmod_Cp"];

/// Parameters of builtin models; `None` selects the default.
#[derive(Clone, Debug, Default)]
pub struct BuiltinParams {
    pub n: Option<usize>,
    pub p: Option<u64>,
    pub nmax: Option<usize>,
    pub jmax: Option<usize>,
    pub lambdas: Option<Vec<Param>>,
    pub bound: Option<u64>,
    pub k: Option<usize>,
    /// Length bound for tube truncations.
    pub lmax: Option<usize>,
}

pub const DEFAULT_LAMBDAS: [Param; 4] =
    [Param::Finite(0), Param::Finite(1), Param::Finite(-1), Param::Infinity];

pub fn builtin_model(name: &str, p: &BuiltinParams) -> Result<Model> {
    let m = match name {
        "kA2" => an_model(2)?,
        "An" => an_model(p.n.unwrap_or(3))?,
        "kronecker" => kronecker_model(
            p.nmax.unwrap_or(4),
            p.jmax.unwrap_or(3),
            p.lambdas.as_deref().unwrap_or(&DEFAULT_LAMBDAS),
        )?,
        "tube_n" => {
            let n = p.n.unwrap_or(3);
            tube_model(n, p.lmax.unwrap_or(n))?
        }
        "specZ" => spec_z_model(p.bound.unwrap_or(50))?,
        "A_infinity" => a_infinity_model(p.k.unwrap_or(5)),
        "D_infinity" => d_infinity_model(p.k.unwrap_or(5)),
        "stmod_Cp" => stmod_model(p.p.unwrap_or(5))?,
        other => {
            return Err(Error::Usage(format!(
                "unknown model {other:?}; expected one of {}",
                BUILTIN_NAMES.join(", ")
            )))
        }
    };
    m.validate()?;
    Ok(m)
}

fn free_classes(names: Vec<String>) -> Vec<ObjectClass> {
    names
        .into_iter()
        .enumerate()
        .map(|(id, name)| ObjectClass { id, name, shift_period: None })
        .collect()
}

/// Locally finite model of D^b(mod H) from a hereditary catalog: stalk
/// orbits with Hom in degree 0 and Ext¹ in degree 1.
fn hereditary_model<F: Scalar>(name: &str, cat: &Catalog<F>, mode: Mode) -> Result<Model> {
    let names = cat.entries.iter().map(|e| e.name.clone()).collect();
    let mut m = Model::new(name, mode, free_classes(names));
    for (x, row) in cat.graded_table()?.into_iter().enumerate() {
        for (y, (h, e)) in row.into_iter().enumerate() {
            m.hom.set(x, y, 0, h as u64);
            m.hom.set(x, y, 1, e as u64);
        }
    }
    m.metadata.insert("convention".into(), cat.convention.clone());
    Ok(m)
}

fn an_model(n: usize) -> Result<Model> {
    if n == 0 {
        return Err(Error::Usage("An needs n ≥ 1".into()));
    }
    let cat = catalog_an::<Rational>(n);
    let name = if n == 2 { "kA2".to_string() } else { format!("A{n}") };
    let mut m = hereditary_model(&name, &cat, Mode::LocallyFinite)?;
    m.triangles = an_ar_triangles(n, &cat);
    if n == 2 {
        m.metadata.insert(
            "labels".into(),
            "P(1)=M1_2, P(2)=S2 (simple projective), simple injective S1".into(),
        );
    }
    Ok(m)
}

/// AR triangles of D^b(k A_n) up to shift, one ending in each orbit:
/// module sequences [a+1,b+1] → [a,b+1] ⊕ [a+1,b] → [a,b] for b < n, and
/// the connecting triangles Σ⁻¹[1,v] → [v+1,n] ⊕ Σ⁻¹[1,v−1] → [v,n].
pub(crate) fn an_ar_triangles(n: usize, cat: &Catalog<Rational>) -> Vec<Triangle> {
    let id = |a: usize, b: usize| cat.index_of(&interval_name(a, b)).unwrap();
    let mut out = Vec::new();
    for e in &cat.entries {
        let Family::Interval { start: a, end: b } = e.family else { continue };
        if b < n {
            let mut y = vec![(id(a, b + 1), 0)];
            if a < b {
                y.push((id(a + 1, b), 0));
            }
            out.push(Triangle {
                x: FormalObject::new(vec![(id(a + 1, b + 1), 0)]),
                y: FormalObject::new(y),
                z: FormalObject::new(vec![(id(a, b), 0)]),
            });
        } else {
            let v = a;
            let mut y = Vec::new();
            if v < n {
                y.push((id(v + 1, n), 0));
            }
            if v > 1 {
                y.push((id(1, v - 1), -1));
            }
            out.push(Triangle {
                x: FormalObject::new(vec![(id(1, v), -1)]),
                y: FormalObject::new(y),
                z: FormalObject::new(vec![(id(v, n), 0)]),
            });
        }
    }
    out
}

/// Declared model of the truncated Kronecker catalog. Hom data is computed;
/// primes are the known point list restricted to the truncation.
pub(crate) fn kronecker_model(nmax: usize, jmax: usize, lambdas: &[Param]) -> Result<Model> {
    if nmax < 1 || jmax < 1 {
        return Err(Error::Usage("kronecker needs nmax, jmax ≥ 1".into()));
    }
    let cat = catalog_kronecker::<Rational>(nmax, jmax, lambdas)?;
    let mut m = hereditary_model("kronecker", &cat, Mode::Declared)?;
    m.truncated = true;
    let k = m.len();
    let fam = |i: usize| &cat.entries[i].family;
    let set_where = |pred: &dyn Fn(&Family) -> bool| IdSet::from_ids(k, (0..k).filter(|&i| pred(fam(i))));
    for n in 0..=nmax {
        m.primes.push(Prime {
            name: format!("add(P{n})"),
            members: set_where(&|f| *f == Family::Preprojective(n)),
        });
    }
    for n in 0..=nmax {
        m.primes.push(Prime {
            name: format!("add(Q{n})"),
            members: set_where(&|f| *f == Family::Preinjective(n)),
        });
    }
    let mut ls = lambdas.to_vec();
    ls.sort();
    for l in &ls {
        m.primes.push(Prime {
            name: format!("r_ne({l})"),
            members: set_where(&|f| matches!(f, Family::Regular { param, .. } if param != l)),
        });
    }
    m.primes.push(Prime {
        name: "r_generic".into(),
        members: set_where(&|f| matches!(f, Family::Regular { .. })),
    });
    m.metadata.insert("generic_point".into(), "declared: alpha([G]) = add(r)".into());
    Ok(m)
}

pub(crate) fn tube_model(n: usize, lmax: usize) -> Result<Model> {
    if n == 0 || lmax == 0 {
        return Err(Error::Usage("tube_n needs n, lmax ≥ 1".into()));
    }
    let objs = tube::all_objects(n, lmax);
    let mut m = Model::new(
        format!("tube_{n}"),
        Mode::LocallyFinite,
        free_classes(objs.iter().map(|o| o.to_string()).collect()),
    );
    m.truncated = true;
    for (x, a) in objs.iter().enumerate() {
        for (y, b) in objs.iter().enumerate() {
            m.hom.set(x, y, 0, tube::hom_dim(a, b)? as u64);
            m.hom.set(x, y, 1, tube::ext_dim(a, b)? as u64);
        }
    }
    m.metadata.insert("truncation".into(), format!("regular length <= {lmax}"));
    Ok(m)
}

/// A finitely generated abelian group: free rank plus invariant factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroup {
    pub free_rank: u32,
    pub factors: Vec<u64>,
}

impl AbelianGroup {
    /// M/pM = 0 and no p-torsion: the stalk lies in ⊥(Z/p).
    pub fn orthogonal_to_residue(&self, p: u64) -> bool {
        self.free_rank == 0 && self.factors.iter().all(|f| f % p != 0)
    }

    /// Torsion groups: the stalk lies in ⊥Q.
    pub fn orthogonal_to_rationals(&self) -> bool {
        self.free_rank == 0
    }
}

pub fn primes_below(bound: u64) -> Vec<u64> {
    (2..bound).filter(|&q| (2..q).take_while(|d| d * d <= q).all(|d| q % d != 0)).collect()
}

fn spec_z_model(bound: u64) -> Result<Model> {
    let ps = primes_below(bound);
    if ps.is_empty() {
        return Err(Error::Usage("specZ needs bound > 2".into()));
    }
    let mut groups: Vec<(String, AbelianGroup)> = ps
        .iter()
        .map(|&p| (format!("Z/{p}"), AbelianGroup { free_rank: 0, factors: vec![p] }))
        .collect();
    groups.push(("Z".into(), AbelianGroup { free_rank: 1, factors: vec![] }));
    let k = groups.len();
    let mut m = Model::new("specZ", Mode::Declared, free_classes(groups.iter().map(|g| g.0.clone()).collect()));
    m.truncated = true;
    m.all_thick_radical = true;
    for &p in &ps {
        m.primes.push(Prime {
            name: format!("({p})"),
            members: IdSet::from_ids(k, (0..k).filter(|&i| groups[i].1.orthogonal_to_residue(p))),
        });
    }
    m.primes.push(Prime {
        name: "(0)".into(),
        members: IdSet::from_ids(k, (0..k).filter(|&i| groups[i].1.orthogonal_to_rationals())),
    });
    m.metadata.insert("truncation".into(), format!("primes below {bound}"));
    Ok(m)
}

fn a_infinity_model(kmax: usize) -> Model {
    let mut names: Vec<String> = (1..=kmax).map(|i| format!("(x,y^{i})")).collect();
    names.push("(x)".into());
    let k = names.len();
    let classes = names
        .into_iter()
        .enumerate()
        .map(|(id, name)| ObjectClass { id, name, shift_period: Some(1) })
        .collect();
    let mut m = Model::new("A_infinity", Mode::Declared, classes);
    m.truncated = true;
    let middle = IdSet::from_ids(k, 0..kmax);
    m.primes.push(Prime { name: "alpha(L)".into(), members: middle.clone() });
    m.lattice = Some(vec![
        LatticeElement { members: IdSet::empty(k), covers: vec![1] },
        LatticeElement { members: middle, covers: vec![2] },
        LatticeElement { members: IdSet::full(k), covers: vec![] },
    ]);
    m
}

fn d_infinity_model(kmax: usize) -> Model {
    let mut names: Vec<String> = ["(x)", "(x^2)", "(xy)", "(y)"].iter().map(|s| s.to_string()).collect();
    for i in 1..=kmax {
        for f in ["M", "Y", "X", "N"] {
            names.push(format!("{f}{i}"));
        }
    }
    let k = names.len();
    let mut m = Model::new("D_infinity", Mode::Declared, free_classes(names.clone()));
    m.truncated = true;
    let alpha = IdSet::from_ids(k, (0..k).filter(|&i| names[i] != "(x)" && names[i] != "(xy)"));
    m.primes.push(Prime { name: "alpha(L)".into(), members: alpha });
    m
}

/// Stable module category of k C_p: classes ⟨i⟩ for i ≤ ⌈(p−1)/2⌉ with
/// Σ⟨i⟩ = ⟨p−i⟩, and stable Hom(⟨i⟩,⟨j⟩) of dimension min(i, j, p−i, p−j).
fn stmod_model(p: u64) -> Result<Model> {
    if p < 2 || !primes_below(p + 1).contains(&p) {
        return Err(Error::Usage(format!("stmod_Cp needs a prime p, got {p}")));
    }
    let reps: Vec<u64> = (1..=p / 2).collect();
    let classes = reps
        .iter()
        .enumerate()
        .map(|(id, &i)| ObjectClass {
            id,
            name: format!("<{i}>"),
            shift_period: Some(if 2 * i == p { 1 } else { 2 }),
        })
        .collect();
    let mut m = Model::new(format!("stmod_C{p}"), Mode::LocallyFinite, classes);
    let dim = |i: u64, j: u64| i.min(j).min(p - i).min(p - j);
    for (x, &i) in reps.iter().enumerate() {
        for (y, &j) in reps.iter().enumerate() {
            let per = m.pair_period(x, y).unwrap_or(1) as i64;
            for s in 0..per {
                let target = if s % 2 == 0 { j } else { p - j };
                m.hom.set(x, y, s, dim(i, target));
            }
        }
    }
    let action: Vec<String> = reps.iter().map(|&i| format!("<{i}> -> <{}>", p - i)).collect();
    m.metadata.insert("shift_action".into(), action.join(", "));
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiverrep::{ext1_dim, interval};

    #[test]
    fn names_and_sizes() {
        let d = BuiltinParams::default();
        assert_eq!(builtin_model("kA2", &d).unwrap().len(), 3);
        assert_eq!(builtin_model("kronecker", &d).unwrap().len(), 22);
        assert_eq!(builtin_model("stmod_Cp", &d).unwrap().len(), 2);
        assert_eq!(builtin_model("D_infinity", &d).unwrap().len(), 24);
        assert!(matches!(builtin_model("nope", &d), Err(Error::Usage(_))));
        let z = builtin_model("specZ", &BuiltinParams { bound: Some(10), ..d.clone() }).unwrap();
        let names: Vec<&str> = z.classes.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, ["Z/2", "Z/3", "Z/5", "Z/7", "Z"]);
        assert_eq!(z.primes.len(), 5);
    }

    #[test]
    fn stmod_is_shift_periodic() {
        let m = stmod_model(5).unwrap();
        assert_eq!(m.classes[0].shift_period, Some(2));
        // Hom(<1>, Σ<1>) = Hom(<1>, <4>) has dimension 1
        assert_eq!(m.hom_dim(0, 0, 1), 1);
        assert_eq!(stmod_model(2).unwrap().classes[0].shift_period, Some(1));
        assert_eq!(stmod_model(7).unwrap().len(), 3);
    }

    /// Module-level AR sequences are genuine extensions, and every listed
    /// triangle is additive in K_0 (shifts counted with sign).
    #[test]
    fn an_triangles_are_consistent() {
        for n in 1..=4 {
            let cat = catalog_an::<Rational>(n);
            let tris = an_ar_triangles(n, &cat);
            assert_eq!(tris.len(), cat.len());
            let class_vec = |f: &FormalObject| {
                let mut v = vec![0i64; n];
                for &(c, s) in &f.0 {
                    let sign = if s.rem_euclid(2) == 0 { 1 } else { -1 };
                    for (i, d) in cat.entries[c].rep.dims.iter().enumerate() {
                        v[i] += sign * *d as i64;
                    }
                }
                v
            };
            for t in &tris {
                let (x, y, z) = (class_vec(&t.x), class_vec(&t.y), class_vec(&t.z));
                let sum: Vec<i64> = x.iter().zip(&z).map(|(a, b)| a + b).collect();
                assert_eq!(y, sum);
                if t.x.0[0].1 == 0 {
                    let xi = &cat.entries[t.x.0[0].0].rep;
                    let zi = &cat.entries[t.z.0[0].0].rep;
                    assert_eq!(ext1_dim(zi, xi).unwrap(), 1);
                }
            }
        }
        let _ = interval::<Rational>(2, 1, 1);
    }
}

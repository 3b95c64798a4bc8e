//! Integral rank functions on a catalog model.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::{Map, Value};

use crate::catmodel::{FormalObject, Mode, Model, Triangle};
use crate::error::{Error, Result};
use crate::idset::IdSet;
use crate::linalg::Matrix;
use crate::scalar::Rational;

/// Where a rank function came from; kernels of θ^A are cross-checked
/// against ^⊥A.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Origin {
    Explicit,
    Upper(FormalObject),
    Lower(FormalObject),
}

/// One value per class, hence constant on shift orbits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankFunction {
    pub values: Vec<u64>,
    pub origin: Origin,
}

impl RankFunction {
    pub fn new(values: Vec<u64>) -> Self {
        RankFunction { values, origin: Origin::Explicit }
    }

    pub fn zero(k: usize) -> Self {
        Self::new(vec![0; k])
    }

    pub fn eval(&self, x: &FormalObject) -> u64 {
        x.classes().map(|c| self.values[c]).sum()
    }

    pub fn add(&self, o: &RankFunction) -> RankFunction {
        Self::new(self.values.iter().zip(&o.values).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, n: u64) -> RankFunction {
        Self::new(self.values.iter().map(|v| v * n).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn to_json(&self, model: &Model) -> Value {
        let mut m = Map::new();
        for (c, v) in self.values.iter().enumerate() {
            m.insert(model.classes[c].name.clone(), Value::from(*v));
        }
        Value::Object(m)
    }
}

fn theta(a: &FormalObject, model: &Model, upper: bool) -> Result<RankFunction> {
    if let Some(c) = a.classes().find(|&c| c >= model.len()) {
        return Err(Error::Model(format!("class id {c} is not in model {}", model.name)));
    }
    let mut values = vec![0u64; model.len()];
    for (x, v) in values.iter_mut().enumerate() {
        for y in a.classes() {
            *v += if upper { model.total_hom(x, y)? } else { model.total_hom(y, x)? };
        }
    }
    let origin = if upper { Origin::Upper(a.clone()) } else { Origin::Lower(a.clone()) };
    Ok(RankFunction { values, origin })
}

/// θ^A(X) = Σ_i dim Hom(X, Σ^i A).
pub fn theta_upper(a: &FormalObject, model: &Model) -> Result<RankFunction> {
    theta(a, model, true)
}

/// θ_A(X) = Σ_i dim Hom(A, Σ^i X).
pub fn theta_lower(a: &FormalObject, model: &Model) -> Result<RankFunction> {
    theta(a, model, false)
}

/// {X : ρ(X) = 0}, checked to be thick.
pub fn kernel(rho: &RankFunction, model: &Model) -> Result<IdSet> {
    let k = model.len();
    let ker = IdSet::from_ids(k, (0..k).filter(|&x| rho.values[x] == 0));
    if model.thick_hull(&ker)? != ker {
        return Err(Error::Axiom(format!("kernel {:?} is not thick", model.names(&ker))));
    }
    if let (Origin::Upper(a), Mode::LocallyFinite) = (&rho.origin, model.mode) {
        let perp = model.perp_left(&IdSet::from_ids(k, a.classes()))?;
        if perp != ker {
            return Err(Error::Internal("kernel of theta differs from the left perpendicular".into()));
        }
    }
    Ok(ker)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Shift { class: usize },
    Additivity { x: usize, y: usize },
    Subadditive { triangle: usize, rotation: usize, lhs: u64, rhs: u64 },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub triangles_checked: usize,
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks shift invariance, additivity on class pairs and subadditivity on
/// all rotations of each triangle. Triangles must come from the model.
pub fn check_axioms(rho: &RankFunction, model: &Model, triangles: &[Triangle]) -> Result<AxiomReport> {
    let mut rep = AxiomReport::default();
    let k = model.len();
    for c in 0..k {
        let x = FormalObject::of_classes(&[c]);
        if rho.eval(&x.shifted(1)) != rho.eval(&x) || rho.eval(&x.shifted(-1)) != rho.eval(&x) {
            rep.violations.push(Violation::Shift { class: c });
        }
        for d in 0..k {
            let y = FormalObject::of_classes(&[d]);
            if rho.eval(&x.sum(&y)) != rho.eval(&x) + rho.eval(&y) {
                rep.violations.push(Violation::Additivity { x: c, y: d });
            }
        }
    }
    for (ti, t) in triangles.iter().enumerate() {
        if !model.triangles.contains(t) {
            return Err(Error::Usage(format!("triangle {ti} is not a triangle recorded in model {}", model.name)));
        }
        let (x, y, z) = (rho.eval(&t.x), rho.eval(&t.y), rho.eval(&t.z));
        // rotations (X,Y,Z), (Y,Z,ΣX), (Z,ΣX,ΣY): the middle term is bounded
        for (r, (a, b, c)) in [(x, y, z), (y, z, x), (z, x, y)].into_iter().enumerate() {
            if b > a + c {
                rep.violations.push(Violation::Subadditive { triangle: ti, rotation: r, lhs: b, rhs: a + c });
            }
        }
        rep.triangles_checked += 1;
    }
    Ok(rep)
}

/// θ^X divided by the gcd of its values, one per class.
pub fn irreducible_candidates(model: &Model) -> Result<Vec<RankFunction>> {
    (0..model.len())
        .map(|x| {
            let t = theta_upper(&FormalObject::of_classes(&[x]), model)?;
            let g = t.values.iter().fold(0u64, |g, &v| g.gcd(&v)).max(1);
            Ok(RankFunction::new(t.values.iter().map(|v| v / g).collect()))
        })
        .collect()
}

/// Multiplicities n_i with ρ = Σ n_i · candidates[i], if any exist.
pub fn decompose(rho: &RankFunction, candidates: &[RankFunction]) -> Option<BTreeMap<usize, u64>> {
    let k = rho.values.len();
    let m = candidates.len();
    if candidates.iter().any(|c| c.values.len() != k) {
        return None;
    }
    let a = Matrix::from_rows(
        (0..k)
            .map(|x| candidates.iter().map(|c| Rational::from_integer(c.values[x].into())).collect())
            .collect(),
    );
    if m > 0 && a.rank() == m {
        let b: Vec<Rational> = rho.values.iter().map(|&v| Rational::from_integer(v.into())).collect();
        return solve_full_rank(&a, &b, m, k).and_then(|sol| {
            let mut out = BTreeMap::new();
            for (i, q) in sol.into_iter().enumerate() {
                if !q.is_integer() || q.is_negative() {
                    return None;
                }
                let n = q.to_integer().to_u64()?;
                if n > 0 {
                    out.insert(i, n);
                }
            }
            let re = resum(&out, candidates, k);
            (re == rho.values).then_some(out)
        });
    }
    let bound = rho.values.iter().copied().max().unwrap_or(0);
    let mut mult = vec![0u64; m];
    let mut rest = rho.values.clone();
    dfs(0, candidates, &mut rest, &mut mult, bound).then(|| {
        mult.iter().enumerate().filter(|(_, &n)| n > 0).map(|(i, &n)| (i, n)).collect()
    })
}

fn solve_full_rank(a: &Matrix<Rational>, b: &[Rational], m: usize, k: usize) -> Option<Vec<Rational>> {
    if m == k {
        return a.solve_unique(b);
    }
    // overdetermined: solve the normal equations, then verify exactly
    let mut ata = Matrix::zeros(m, m);
    let mut atb = vec![Rational::zero(); m];
    for i in 0..m {
        for j in 0..m {
            let s = (0..k).fold(Rational::zero(), |s, x| s + a.get(x, i) * a.get(x, j));
            ata.set(i, j, s);
        }
        atb[i] = (0..k).fold(Rational::zero(), |s, x| s + a.get(x, i) * &b[x]);
    }
    ata.solve_unique(&atb)
}

fn resum(mult: &BTreeMap<usize, u64>, candidates: &[RankFunction], k: usize) -> Vec<u64> {
    let mut out = vec![0u64; k];
    for (&i, &n) in mult {
        for (o, v) in out.iter_mut().zip(&candidates[i].values) {
            *o += n * v;
        }
    }
    out
}

fn dfs(i: usize, cands: &[RankFunction], rest: &mut [u64], mult: &mut [u64], bound: u64) -> bool {
    if i == cands.len() {
        return rest.iter().all(|&r| r == 0);
    }
    let c = &cands[i].values;
    let cap = rest
        .iter()
        .zip(c)
        .filter(|(_, &v)| v > 0)
        .map(|(&r, &v)| r / v)
        .min()
        .unwrap_or(0)
        .min(bound);
    for n in (0..=cap).rev() {
        for (r, v) in rest.iter_mut().zip(c) {
            *r -= n * v;
        }
        mult[i] = n;
        if dfs(i + 1, cands, rest, mult, bound) {
            return true;
        }
        for (r, v) in rest.iter_mut().zip(c) {
            *r += n * v;
        }
    }
    mult[i] = 0;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catmodel::{builtin_model, BuiltinParams};
    use crate::spectra::{radical, shift_spectrum};

    fn an(n: usize) -> Model {
        builtin_model("An", &BuiltinParams { n: Some(n), ..Default::default() }).unwrap()
    }

    #[test]
    fn thetas_on_ar_triangles() {
        for n in [2, 3] {
            let m = an(n);
            assert!(!m.triangles.is_empty());
            for a in 0..m.len() {
                let obj = FormalObject::of_classes(&[a]);
                for rho in [theta_upper(&obj, &m).unwrap(), theta_lower(&obj, &m).unwrap()] {
                    assert!(rho.values[a] >= 1);
                    assert!(check_axioms(&rho, &m, &m.triangles).unwrap().passed());
                }
            }
        }
    }

    #[test]
    fn kernels_are_perps_and_radical() {
        let m = an(3);
        let s = shift_spectrum(&m).unwrap();
        for a in 0..m.len() {
            let k = kernel(&theta_upper(&FormalObject::of_classes(&[a]), &m).unwrap(), &m).unwrap();
            assert_eq!(radical(&s, &k), k);
        }
        assert!(kernel(&RankFunction::zero(m.len()), &m).unwrap().is_full());
    }

    #[test]
    fn violation_detected_and_foreign_triangle_rejected() {
        let m = an(2);
        let t = m.triangles[0].clone();
        let mut v = vec![0; m.len()];
        for c in t.y.classes() {
            v[c] = 5;
        }
        let r = check_axioms(&RankFunction::new(v), &m, &[t.clone()]).unwrap();
        assert!(!r.passed());
        let bogus = Triangle { x: t.y.clone(), y: t.x.clone(), z: t.z.clone() };
        assert!(matches!(check_axioms(&RankFunction::zero(m.len()), &m, &[bogus]), Err(Error::Usage(_))));
        assert!(check_axioms(&RankFunction::zero(m.len()), &m, &[]).unwrap().passed());
    }

    #[test]
    fn decomposition() {
        let m = an(2);
        let c = irreducible_candidates(&m).unwrap();
        assert_eq!(c.len(), 3);
        for i in 0..3 {
            for j in 0..i {
                assert_ne!(c[i], c[j]);
            }
            assert_eq!(decompose(&c[i], &c), Some(BTreeMap::from([(i, 1)])));
        }
        let g = theta_upper(&FormalObject::of_classes(&[0, 1, 2]), &m).unwrap();
        let d = decompose(&g, &c).unwrap();
        assert_eq!(d.len(), 3);
    }

    #[test]
    fn dfs_matches_solver() {
        let c = vec![RankFunction::new(vec![1, 1]), RankFunction::new(vec![0, 1]), RankFunction::new(vec![1, 2])];
        let r = RankFunction::new(vec![2, 5]);
        let d = decompose(&r, &c).unwrap();
        assert_eq!(resum(&d, &c, 2), r.values);
        assert!(decompose(&RankFunction::new(vec![3, 1]), &c).is_none());
    }
}

//! Verification suites comparing computed answers against worked examples
//! of the theory.

use std::fmt;

use crate::catmodel::{builtin_model, BuiltinParams, FormalObject, Model, DEFAULT_LAMBDAS};
use crate::error::Result;
use crate::idset::IdSet;
use crate::quiverrep::{catalog_kronecker, Family, Param};
use crate::scalar::Rational;
use crate::spectra::{
    classify, enumerate_thicks, matsui_spectrum, radical, shift_spectrum, support, FiniteSpace, Guard, Point,
    ThickSpace,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub case: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    pub source: String,
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: expected {}, computed {} [{}]",
            if self.pass { "PASS" } else { "FAIL" },
            self.case,
            self.expected,
            self.computed,
            self.source
        )
    }
}

fn row(case: impl Into<String>, expected: impl fmt::Display, computed: impl fmt::Display, source: &str) -> VerificationReport {
    let (expected, computed) = (expected.to_string(), computed.to_string());
    VerificationReport { pass: expected == computed, case: case.into(), expected, computed, source: source.into() }
}

pub fn all_pass(rows: &[VerificationReport]) -> bool {
    rows.iter().all(|r| r.pass)
}

fn names(model: &Model, s: &IdSet) -> String {
    format!("{{{}}}", model.names(s).join(", "))
}

fn point_names<P>(space: &FiniteSpace<P>, s: &IdSet) -> String {
    let v: Vec<&str> = s.iter().map(|i| space.points[i].name.as_str()).collect();
    format!("{{{}}}", v.join(", "))
}

const KRONECKER: &str = "Kronecker example";

/// Perpendiculars, shift-primes and supports of the truncated Kronecker
/// catalog against the closed-form descriptions.
pub fn verify_kronecker(nmax: usize, jmax: usize, lambdas: &[Param]) -> Result<Vec<VerificationReport>> {
    let params = BuiltinParams { nmax: Some(nmax), jmax: Some(jmax), lambdas: Some(lambdas.to_vec()), ..Default::default() };
    let model = builtin_model("kronecker", &params)?;
    let cat = catalog_kronecker::<Rational>(nmax, jmax, lambdas)?;
    let table = cat.graded_table()?;
    let k = cat.len();
    let fam = |i: usize| cat.entries[i].family.clone();
    let set = |pred: &dyn Fn(&Family) -> bool| IdSet::from_ids(k, (0..k).filter(|&i| pred(&fam(i))));
    let is_p = |f: &Family| matches!(f, Family::Preprojective(_));
    let is_q = |f: &Family| matches!(f, Family::Preinjective(_));
    let is_r = |f: &Family| matches!(f, Family::Regular { .. });
    let mut out = Vec::new();

    // Hom(P_m, P_n) = 0 iff m ≥ n+1
    let (mut expect_zero, mut got_zero) = (Vec::new(), Vec::new());
    for m in 0..=nmax {
        for n in 0..=nmax {
            let (a, b) = (cat.index_of(&format!("P{m}")).unwrap(), cat.index_of(&format!("P{n}")).unwrap());
            if m > n {
                expect_zero.push(format!("({m},{n})"));
            }
            if table[a][b].0 == 0 {
                got_zero.push(format!("({m},{n})"));
            }
        }
    }
    out.push(row("Hom(P_m,P_n)=0 pairs", expect_zero.join(" "), got_zero.join(" "), KRONECKER));

    for x in 0..k {
        let perp0 = IdSet::from_ids(k, (0..k).filter(|&m| table[m][x].0 == 0));
        let perp1 = IdSet::from_ids(k, (0..k).filter(|&m| table[m][x].1 == 0));
        let alpha = perp0.intersection(&perp1);
        let (e0, e1, ea) = match fam(x) {
            Family::Preprojective(n) => (
                set(&|f| matches!(f, Family::Preprojective(m) if *m >= n + 1) || is_r(f) || is_q(f)),
                set(&|f| matches!(f, Family::Preprojective(m) if *m <= n + 1)),
                set(&|f| *f == Family::Preprojective(n + 1)),
            ),
            Family::Preinjective(0) => {
                (set(&|f| *f == Family::Preprojective(0)), IdSet::full(k), set(&|f| *f == Family::Preprojective(0)))
            }
            Family::Preinjective(n) => (
                set(&|f| matches!(f, Family::Preinjective(m) if *m + 1 <= n)),
                set(&|f| is_p(f) || is_r(f) || matches!(f, Family::Preinjective(m) if *m + 1 >= n)),
                set(&|f| *f == Family::Preinjective(n - 1)),
            ),
            Family::Regular { param, .. } => {
                let ne = |f: &Family| matches!(f, Family::Regular { param: q, .. } if *q != param);
                (set(&|f| ne(f) || is_q(f)), set(&|f| ne(f) || is_p(f)), set(&ne))
            }
            Family::Interval { .. } => unreachable!("Kronecker catalogs have no interval modules"),
        };
        let name = &cat.entries[x].name;
        out.push(row(format!("perp0({name})"), names(&model, &e0), names(&model, &perp0), KRONECKER));
        out.push(row(format!("perp1({name})"), names(&model, &e1), names(&model, &perp1), KRONECKER));
        out.push(row(format!("alpha({name})"), names(&model, &ea), names(&model, &alpha), KRONECKER));
        // the computed point must be one of the declared primes (or zero past the truncation)
        let declared = model.primes.iter().find(|p| p.members == alpha).map(|p| p.name.clone());
        let expect_decl = if alpha.is_empty() { "none (beyond truncation)".to_string() } else { "declared prime".into() };
        let got_decl = match declared {
            Some(_) => "declared prime".to_string(),
            None if alpha.is_empty() => "none (beyond truncation)".into(),
            None => "undeclared set".into(),
        };
        out.push(row(format!("alpha({name}) is declared"), expect_decl, got_decl, KRONECKER));
    }

    let space = shift_spectrum(&model)?;
    let idx = |nm: &str| space.points.iter().position(|p| p.name == nm).unwrap();
    let n = space.len();
    let pq_points = IdSet::from_ids(n, (0..n).filter(|&i| space.points[i].name.starts_with("add(")));
    for x in 0..k {
        let nm = &cat.entries[x].name;
        let expected = match fam(x) {
            Family::Preprojective(i) => IdSet::singleton(n, idx(&format!("add(P{i})"))).complement(),
            Family::Preinjective(i) => IdSet::singleton(n, idx(&format!("add(Q{i})"))).complement(),
            Family::Regular { param, .. } => {
                let mut s = pq_points.clone();
                s.insert(idx(&format!("r_ne({param})")));
                s
            }
            Family::Interval { .. } => unreachable!(),
        };
        let got = support(&model, &space, &FormalObject::of_classes(&[x]))?;
        out.push(row(format!("ssupp({nm})"), point_names(&space, &expected), point_names(&space, &got), KRONECKER));
    }
    out.push(row("generic point", "declared: alpha([G]) = add(r)", model.metadata.get("generic_point").cloned().unwrap_or_default(), KRONECKER));
    out.push(row("spectrum shape", kronecker_shape_expected(nmax, lambdas.len()), kronecker_shape(&space), KRONECKER));
    Ok(out)
}

fn kronecker_shape_expected(nmax: usize, nl: usize) -> String {
    format!("{} isolated points + {nl} closed points + 1 generic point dense in them", 2 * (nmax + 1))
}

/// Describes the Kronecker spectrum as isolated points plus a projective
/// line: closed points and one generic point.
fn kronecker_shape(space: &ThickSpace) -> String {
    let n = space.len();
    let cl = space.closures();
    let isolated: Vec<usize> =
        (0..n).filter(|&x| cl[x].len() == 1 && (0..n).all(|y| y == x || !cl[y].contains(x))).collect();
    let rest: Vec<usize> = (0..n).filter(|x| !isolated.contains(x)).collect();
    let closed: Vec<usize> = rest.iter().copied().filter(|&x| cl[x].len() == 1).collect();
    let generic: Vec<usize> = rest.iter().copied().filter(|&x| cl[x].len() > 1).collect();
    let dense = generic.len() == 1 && {
        let mut want = IdSet::from_ids(n, closed.iter().copied());
        want.insert(generic[0]);
        cl[generic[0]] == want
    };
    format!(
        "{} isolated points + {} closed points + {} generic point{}",
        isolated.len(),
        closed.len(),
        generic.len(),
        if dense { " dense in them" } else { "" }
    )
}

fn sspec_shape(space: &ThickSpace) -> String {
    if space.is_empty() {
        "empty".into()
    } else if space.len() == 1 {
        "point".into()
    } else if space.is_discrete() {
        format!("{}-point discrete", space.len())
    } else if space.is_sierpinski() {
        "Sierpinski".into()
    } else {
        format!("{}-point space", space.len())
    }
}

/// Prime spectrum of Z truncated at `primes`: closed points (p) and a
/// generic point whose closure is everything.
fn truncated_spec_z(primes: &[u64]) -> FiniteSpace<()> {
    let n = primes.len() + 1;
    let mut points: Vec<Point<()>> = primes.iter().map(|p| Point { name: format!("({p})"), payload: () }).collect();
    points.push(Point { name: "(0)".into(), payload: () });
    let closed_basis = (0..primes.len()).map(|i| IdSet::singleton(n, i)).chain([IdSet::full(n)]).collect();
    FiniteSpace { points, closed_basis }
}

fn homeomorphic_to_spec_z<P>(space: &FiniteSpace<P>, primes: &[u64]) -> String {
    match space.find_homeomorphism(&truncated_spec_z(primes)) {
        Some(_) => format!("truncated Spec(Z) with {} closed points", primes.len()),
        None => format!("not homeomorphic ({} points)", space.len()),
    }
}

const TABLE: &str = "comparison table of spaces parametrising thick subcategories";

/// Cells of the comparison table that are computable from finite data.
pub fn verify_table1() -> Result<Vec<VerificationReport>> {
    let d = BuiltinParams::default();
    let mut out = Vec::new();
    let ka2 = builtin_model("kA2", &d)?;
    out.push(row("sspec(kA2)", "3-point discrete", sspec_shape(&shift_spectrum(&ka2)?), TABLE));
    let kr = builtin_model("kronecker", &d)?;
    out.push(row(
        "sspec(kronecker)",
        kronecker_shape_expected(4, DEFAULT_LAMBDAS.len()),
        kronecker_shape(&shift_spectrum(&kr)?),
        TABLE,
    ));
    let ainf = builtin_model("A_infinity", &d)?;
    out.push(row("sspec(D_sg(A_infinity))", "point", sspec_shape(&shift_spectrum(&ainf)?), TABLE));
    let z = builtin_model("specZ", &d)?;
    let primes = crate::catmodel::primes_below(50);
    let expect_z = format!("truncated Spec(Z) with {} closed points", primes.len());
    out.push(row("sspec(specZ)", &expect_z, homeomorphic_to_spec_z(&shift_spectrum(&z)?, &primes), TABLE));

    let g = Guard::from_env();
    out.push(row("Spc_M(kA2)", "3-point discrete", sspec_shape(&matsui_spectrum(&enumerate_thicks(&ka2, g)?)), TABLE));
    out.push(row(
        "Spc_M(D_sg(A_infinity))",
        "Sierpinski",
        sspec_shape(&matsui_spectrum(&enumerate_thicks(&ainf, g)?)),
        TABLE,
    ));
    out.push(row(
        "Spc_M(specZ)",
        &expect_z,
        homeomorphic_to_spec_z(&matsui_spectrum(&enumerate_thicks(&z, g)?), &primes),
        TABLE,
    ));
    Ok(out)
}

const DINF: &str = "D_infinity hypersurface singularity category";

/// The declared D∞ model: zero is not radical and only two radical thick
/// subcategories exist.
pub fn verify_dinfinity() -> Result<Vec<VerificationReport>> {
    let m = builtin_model("D_infinity", &BuiltinParams::default())?;
    let space = shift_spectrum(&m)?;
    let alpha = &m.primes.iter().find(|p| p.name == "alpha(L)").expect("builtin declares alpha(L)").members;
    let mut out = Vec::new();
    let r0 = radical(&space, &m.empty_set());
    out.push(row("radical(0)", names(&m, alpha), names(&m, &r0), DINF));
    out.push(row("radical(0) is nonzero", true, !r0.is_empty(), DINF));
    for c in ["(x)", "(xy)"] {
        out.push(row(format!("{c} in alpha(L)"), false, alpha.contains(m.class_id(c)?), DINF));
    }
    let gens: Vec<usize> = (0..m.len()).filter(|&i| m.classes[i].name != "(x)" && m.classes[i].name != "(xy)").collect();
    out.push(row("alpha(L) generators", names(&m, &IdSet::from_ids(m.len(), gens)), names(&m, alpha), DINF));
    let rows = classify(&m, &space, Guard::from_env(), 1)?;
    let got: Vec<String> = rows.iter().map(|r| names(&m, &r.thick)).collect();
    out.push(row("radical thick subcategories", format!("{} | {}", names(&m, alpha), names(&m, &m.all_set())), got.join(" | "), DINF));
    Ok(out)
}

/// Every suite with default parameters.
pub fn verify_all() -> Result<Vec<VerificationReport>> {
    let mut out = verify_kronecker(4, 3, &DEFAULT_LAMBDAS)?;
    out.extend(verify_table1()?);
    out.extend(verify_dinfinity()?);
    Ok(out)
}

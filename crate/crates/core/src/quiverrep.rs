//! Quiver representations over an exact field: Hom and Ext¹ dimensions and
//! catalogs of indecomposables for linear A_n and the Kronecker quiver.

use std::fmt;

use crate::error::{model_err, Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: usize,
    pub arrows: Vec<(usize, usize)>,
}

impl Quiver {
    /// Linear orientation 1→2→…→n, stored 0-based.
    pub fn linear_a(n: usize) -> Self {
        Quiver { vertices: n, arrows: (1..n).map(|i| (i - 1, i)).collect() }
    }

    /// Two parallel arrows 0→1.
    pub fn kronecker() -> Self {
        Quiver { vertices: 2, arrows: vec![(0, 1), (0, 1)] }
    }

    /// Oriented cycle on n vertices with arrows v → v−1 (mod n).
    pub fn cyclic(n: usize) -> Self {
        Quiver { vertices: n, arrows: (0..n).map(|v| (v, (v + n - 1) % n)).collect() }
    }

    pub fn is_acyclic(&self) -> bool {
        // Kahn's algorithm on the vertex set.
        let mut indeg = vec![0usize; self.vertices];
        for &(_, t) in &self.arrows {
            indeg[t] += 1;
        }
        let mut stack: Vec<usize> = (0..self.vertices).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for &(s, t) in &self.arrows {
                if s == v {
                    indeg[t] -= 1;
                    if indeg[t] == 0 {
                        stack.push(t);
                    }
                }
            }
        }
        seen == self.vertices
    }

    /// Euler form ⟨d,e⟩ = Σ_v d_v e_v − Σ_{a:i→j} d_i e_j.
    pub fn euler_form(&self, d: &[usize], e: &[usize]) -> i64 {
        let diag: i64 = (0..self.vertices).map(|v| (d[v] * e[v]) as i64).sum();
        let off: i64 = self.arrows.iter().map(|&(i, j)| (d[i] * e[j]) as i64).sum();
        diag - off
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Representation<F> {
    pub quiver: Quiver,
    pub dims: Vec<usize>,
    /// One matrix per arrow, shaped dim(target) × dim(source).
    pub maps: Vec<Matrix<F>>,
}

impl<F: Scalar> Representation<F> {
    pub fn new(quiver: Quiver, dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Result<Self> {
        if dims.len() != quiver.vertices || maps.len() != quiver.arrows.len() {
            return model_err("dimension vector or map list does not fit the quiver");
        }
        for (a, &(s, t)) in quiver.arrows.iter().enumerate() {
            if maps[a].rows() != dims[t] || maps[a].cols() != dims[s] {
                return model_err(format!(
                    "map on arrow {a} has shape {}x{}, expected {}x{}",
                    maps[a].rows(),
                    maps[a].cols(),
                    dims[t],
                    dims[s]
                ));
            }
        }
        Ok(Representation { quiver, dims, maps })
    }

    pub fn zero(quiver: &Quiver) -> Self {
        let maps = quiver.arrows.iter().map(|_| Matrix::zeros(0, 0)).collect();
        Representation { quiver: quiver.clone(), dims: vec![0; quiver.vertices], maps }
    }

    pub fn simple(quiver: &Quiver, v: usize) -> Self {
        let mut dims = vec![0; quiver.vertices];
        dims[v] = 1;
        let maps = quiver.arrows.iter().map(|&(s, t)| Matrix::zeros(dims[t], dims[s])).collect();
        Representation { quiver: quiver.clone(), dims, maps }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn direct_sum(&self, o: &Self) -> Result<Self> {
        if self.quiver != o.quiver {
            return model_err("direct sum over different quivers");
        }
        let dims = self.dims.iter().zip(&o.dims).map(|(a, b)| a + b).collect();
        let maps = self.maps.iter().zip(&o.maps).map(|(a, b)| a.direct_sum(b)).collect();
        Ok(Representation { quiver: self.quiver.clone(), dims, maps })
    }
}

/// Dimension of Hom(M, N): the kernel of the commutation system
/// N_a f_s − f_t M_a = 0 over all arrows a: s → t.
pub fn hom_dim<F: Scalar>(m: &Representation<F>, n: &Representation<F>) -> Result<usize> {
    if m.quiver != n.quiver {
        return model_err("hom_dim: representations over different quivers");
    }
    let q = &m.quiver;
    let mut offset = vec![0usize; q.vertices + 1];
    for v in 0..q.vertices {
        offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
    }
    let unknowns = offset[q.vertices];
    if unknowns == 0 {
        return Ok(0);
    }
    let var = |v: usize, r: usize, c: usize| offset[v] + r * m.dims[v] + c;
    let eqs: usize = q.arrows.iter().map(|&(s, t)| n.dims[t] * m.dims[s]).sum();
    let mut sys = Matrix::<F>::zeros(eqs, unknowns);
    let mut row = 0;
    for (a, &(s, t)) in q.arrows.iter().enumerate() {
        let (na, ma) = (&n.maps[a], &m.maps[a]);
        for r in 0..n.dims[t] {
            for c in 0..m.dims[s] {
                for k in 0..n.dims[s] {
                    let coef = na.get(r, k);
                    if !coef.is_zero() {
                        let j = var(s, k, c);
                        let v = sys.get(row, j).add(coef);
                        sys.set(row, j, v);
                    }
                }
                for k in 0..m.dims[t] {
                    let coef = ma.get(k, c);
                    if !coef.is_zero() {
                        let j = var(t, r, k);
                        let v = sys.get(row, j).sub(coef);
                        sys.set(row, j, v);
                    }
                }
                row += 1;
            }
        }
    }
    Ok(sys.nullity())
}

/// dim Ext¹(M, N) = hom_dim(M, N) − ⟨dim M, dim N⟩.
///
/// Valid for path algebras of finite quivers, including the oriented cycle
/// used for tube computations (nilpotent representations are closed under
/// extensions there).
pub fn ext1_dim<F: Scalar>(m: &Representation<F>, n: &Representation<F>) -> Result<usize> {
    let h = hom_dim(m, n)? as i64;
    let e = h - m.quiver.euler_form(&m.dims, &n.dims);
    if e < 0 {
        return Err(Error::Internal(format!("negative Ext¹ dimension {e}")));
    }
    Ok(e as usize)
}

/// (dim Hom(M,N), dim Ext¹(M,N)): the graded Hom in degrees 0 and 1 between
/// stalk complexes over a hereditary algebra.
pub fn graded_hom_pair<F: Scalar>(
    m: &Representation<F>,
    n: &Representation<F>,
) -> Result<(usize, usize)> {
    Ok((hom_dim(m, n)?, ext1_dim(m, n)?))
}

/// Parameter of a regular Kronecker family: a point of P¹.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Param {
    Finite(i64),
    Infinity,
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Finite(v) => write!(f, "{v}"),
            Param::Infinity => write!(f, "inf"),
        }
    }
}

impl std::str::FromStr for Param {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(Param::Infinity),
            t => t
                .parse::<i64>()
                .map(Param::Finite)
                .map_err(|_| Error::Usage(format!("bad parameter {t:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Family {
    /// Interval module [start, end], 1-based vertices.
    Interval { start: usize, end: usize },
    Preprojective(usize),
    Preinjective(usize),
    Regular { length: usize, param: Param },
}

#[derive(Clone, Debug)]
pub struct CatalogEntry<F> {
    pub name: String,
    pub family: Family,
    pub rep: Representation<F>,
}

#[derive(Clone, Debug)]
pub struct Catalog<F> {
    pub quiver: Quiver,
    pub entries: Vec<CatalogEntry<F>>,
    /// Human-readable description of the coordinate conventions.
    pub convention: String,
}

impl<F> Catalog<F> {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.entries.iter().position(|e| e.name == name)
    }
}

impl<F: Scalar> Catalog<F> {
    /// Full table of graded Hom pairs, indexed [src][dst].
    pub fn graded_table(&self) -> Result<Vec<Vec<(usize, usize)>>> {
        self.entries
            .iter()
            .map(|a| self.entries.iter().map(|b| graded_hom_pair(&a.rep, &b.rep)).collect())
            .collect()
    }
}

/// Name of the interval module [a, b] (1-based).
pub fn interval_name(a: usize, b: usize) -> String {
    if a == b {
        format!("S{a}")
    } else {
        format!("M{a}_{b}")
    }
}

/// Interval module [a, b] over 1→…→n (1-based, a ≤ b ≤ n).
pub fn interval<F: Scalar>(n: usize, a: usize, b: usize) -> Representation<F> {
    let q = Quiver::linear_a(n);
    let dims: Vec<usize> = (1..=n).map(|v| usize::from(a <= v && v <= b)).collect();
    let maps = q
        .arrows
        .iter()
        .map(|&(s, t)| {
            let mut m = Matrix::zeros(dims[t], dims[s]);
            if dims[s] == 1 && dims[t] == 1 {
                m.set(0, 0, F::one());
            }
            m
        })
        .collect();
    Representation { quiver: q, dims, maps }
}

/// The n(n+1)/2 interval modules of linear A_n, ordered by (start, end).
pub fn catalog_an<F: Scalar>(n: usize) -> Catalog<F> {
    let mut entries = Vec::new();
    for a in 1..=n {
        for b in a..=n {
            entries.push(CatalogEntry {
                name: interval_name(a, b),
                family: Family::Interval { start: a, end: b },
                rep: interval(n, a, b),
            });
        }
    }
    Catalog {
        quiver: Quiver::linear_a(n),
        entries,
        convention: format!(
            "arrows i->i+1; projectives are M{{v}}_{n} (S{n} simple projective), S1 is simple injective"
        ),
    }
}

fn kron_rep<F: Scalar>(d0: usize, d1: usize, a: Matrix<F>, b: Matrix<F>) -> Representation<F> {
    Representation { quiver: Quiver::kronecker(), dims: vec![d0, d1], maps: vec![a, b] }
}

/// Preprojective P_n with dimension vector (n, n+1).
pub fn kronecker_p<F: Scalar>(n: usize) -> Representation<F> {
    let mut a = Matrix::zeros(n + 1, n);
    let mut b = Matrix::zeros(n + 1, n);
    for i in 0..n {
        a.set(i, i, F::one());
        b.set(i + 1, i, F::one());
    }
    kron_rep(n, n + 1, a, b)
}

/// Preinjective Q_n with dimension vector (n+1, n).
pub fn kronecker_q<F: Scalar>(n: usize) -> Representation<F> {
    let mut a = Matrix::zeros(n, n + 1);
    let mut b = Matrix::zeros(n, n + 1);
    for i in 0..n {
        a.set(i, i, F::one());
        b.set(i, i + 1, F::one());
    }
    kron_rep(n + 1, n, a, b)
}

/// Regular R_λ^j: (I, J_j(λ)); for λ = ∞ the two arrows swap roles.
pub fn kronecker_r<F: Scalar>(param: Param, j: usize) -> Representation<F> {
    let jordan = |lam: F| {
        let mut m = Matrix::zeros(j, j);
        for i in 0..j {
            m.set(i, i, lam.clone());
            if i + 1 < j {
                m.set(i, i + 1, F::one());
            }
        }
        m
    };
    match param {
        Param::Finite(l) => kron_rep(j, j, Matrix::identity(j), jordan(F::from_i64(l))),
        Param::Infinity => kron_rep(j, j, jordan(F::zero()), Matrix::identity(j)),
    }
}

pub fn kronecker_name(f: &Family) -> String {
    match f {
        Family::Preprojective(n) => format!("P{n}"),
        Family::Preinjective(n) => format!("Q{n}"),
        Family::Regular { length, param } => format!("R{param}^{length}"),
        Family::Interval { start, end } => interval_name(*start, *end),
    }
}

/// Truncated Kronecker catalog: P_0..P_nmax, Q_0..Q_nmax, then R_λ^j ordered
/// by (j, λ).
pub fn catalog_kronecker<F: Scalar>(
    nmax: usize,
    jmax: usize,
    lambdas: &[Param],
) -> Result<Catalog<F>> {
    let mut ls = lambdas.to_vec();
    ls.sort();
    if ls.windows(2).any(|w| w[0] == w[1]) {
        return model_err("duplicate Kronecker parameter");
    }
    let mut fams: Vec<Family> = (0..=nmax).map(Family::Preprojective).collect();
    fams.extend((0..=nmax).map(Family::Preinjective));
    for j in 1..=jmax {
        for &param in &ls {
            fams.push(Family::Regular { length: j, param });
        }
    }
    let entries = fams
        .into_iter()
        .map(|family| {
            let rep = match &family {
                Family::Preprojective(n) => kronecker_p(*n),
                Family::Preinjective(n) => kronecker_q(*n),
                Family::Regular { length, param } => kronecker_r(*param, *length),
                Family::Interval { .. } => unreachable!(),
            };
            CatalogEntry { name: kronecker_name(&family), family, rep }
        })
        .collect();
    Ok(Catalog {
        quiver: Quiver::kronecker(),
        entries,
        convention: "arrows a,b: 0->1; P_n has dims (n, n+1) so P_0 is simple projective; \
                     Q_n has dims (n+1, n); R_lambda^j = (I, J_j(lambda)), R_inf^j = (J_j(0), I)"
            .into(),
    })
}

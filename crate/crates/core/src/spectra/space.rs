//! Finite topological spaces given by a basis of closed sets.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::idset::IdSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point<P> {
    pub name: String,
    pub payload: P,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSpace<P> {
    pub points: Vec<Point<P>>,
    pub closed_basis: Vec<IdSet>,
}

impl<P> FiniteSpace<P> {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn all(&self) -> IdSet {
        IdSet::full(self.len())
    }

    pub fn none(&self) -> IdSet {
        IdSet::empty(self.len())
    }

    /// Closure of a point: the intersection of the basic closed sets
    /// containing it.
    pub fn point_closure(&self, x: usize) -> IdSet {
        let mut c = self.all();
        for b in self.closed_basis.iter().filter(|b| b.contains(x)) {
            c.intersect_with(b);
        }
        c
    }

    pub fn closures(&self) -> Vec<IdSet> {
        (0..self.len()).map(|x| self.point_closure(x)).collect()
    }

    /// Closure of a subset; finite spaces are Alexandrov, so this is the
    /// union of the point closures.
    pub fn closure(&self, s: &IdSet) -> IdSet {
        let mut c = self.none();
        for x in s.iter() {
            c.union_with(&self.point_closure(x));
        }
        c
    }

    pub fn is_closed(&self, s: &IdSet) -> bool {
        self.closure(s) == *s
    }

    /// x ⤳ y: y lies in the closure of x.
    pub fn specializes_to(&self, x: usize, y: usize) -> bool {
        self.point_closure(x).contains(y)
    }

    pub fn is_t0(&self) -> bool {
        let cl = self.closures();
        let distinct: HashSet<&IdSet> = cl.iter().collect();
        distinct.len() == cl.len()
    }

    pub fn is_discrete(&self) -> bool {
        (0..self.len()).all(|x| self.point_closure(x).len() == 1)
    }

    pub fn is_indiscrete(&self) -> bool {
        (0..self.len()).all(|x| self.point_closure(x).is_full())
    }

    /// Two points, exactly one of them closed.
    pub fn is_sierpinski(&self) -> bool {
        self.len() == 2 && self.is_t0() && !self.is_discrete()
    }

    /// Every closed set, ordered canonically. Errors past `guard` sets.
    pub fn closed_sets(&self, guard: usize) -> Result<Vec<IdSet>> {
        // finite intersections of basic sets, then finite unions of those
        let mut inter: HashSet<IdSet> = HashSet::new();
        let mut queue: VecDeque<IdSet> = VecDeque::new();
        let whole = self.all();
        inter.insert(whole.clone());
        queue.push_back(whole);
        while let Some(s) = queue.pop_front() {
            for b in &self.closed_basis {
                let t = s.intersection(b);
                if inter.insert(t.clone()) {
                    if inter.len() > guard {
                        return Err(Error::Guard(format!("more than {guard} closed sets")));
                    }
                    queue.push_back(t);
                }
            }
        }
        let gens: Vec<IdSet> = inter.iter().cloned().collect();
        let mut all: HashSet<IdSet> = inter;
        all.insert(self.none());
        let mut queue: VecDeque<IdSet> = all.iter().cloned().collect();
        while let Some(s) = queue.pop_front() {
            for g in &gens {
                let t = s.union(g);
                if all.insert(t.clone()) {
                    if all.len() > guard {
                        return Err(Error::Guard(format!("more than {guard} closed sets")));
                    }
                    queue.push_back(t);
                }
            }
        }
        let mut v: Vec<IdSet> = all.into_iter().collect();
        v.sort();
        Ok(v)
    }

    /// Identifies points with equal closures; payload lists the original
    /// point indices of each class.
    pub fn kolmogorov_quotient(&self) -> FiniteSpace<Vec<usize>> {
        let cl = self.closures();
        let mut class_of = vec![usize::MAX; self.len()];
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for x in 0..self.len() {
            if class_of[x] != usize::MAX {
                continue;
            }
            let g: Vec<usize> = (x..self.len()).filter(|&y| cl[y] == cl[x]).collect();
            for &y in &g {
                class_of[y] = groups.len();
            }
            groups.push(g);
        }
        let m = groups.len();
        let closed_basis = self
            .closed_basis
            .iter()
            .map(|b| IdSet::from_ids(m, b.iter().map(|x| class_of[x])))
            .collect();
        let points = groups
            .into_iter()
            .map(|g| Point {
                name: g.iter().map(|&x| self.points[x].name.as_str()).collect::<Vec<_>>().join("|"),
                payload: g,
            })
            .collect();
        FiniteSpace { points, closed_basis }
    }

    /// Whether `map` (point of self ↦ point of other) is a homeomorphism.
    pub fn homeomorphic_via<Q>(&self, other: &FiniteSpace<Q>, map: &[usize]) -> bool {
        if self.len() != other.len() || map.len() != self.len() {
            return false;
        }
        let image: BTreeSet<usize> = map.iter().copied().collect();
        if image.len() != self.len() || image.iter().any(|&y| y >= other.len()) {
            return false;
        }
        (0..self.len()).all(|x| {
            let img = IdSet::from_ids(other.len(), self.point_closure(x).iter().map(|y| map[y]));
            img == other.point_closure(map[x])
        })
    }

    /// Searches for a homeomorphism by backtracking on the specialization
    /// preorder (which determines a finite topology).
    pub fn find_homeomorphism<Q>(&self, other: &FiniteSpace<Q>) -> Option<Vec<usize>> {
        let n = self.len();
        if n != other.len() {
            return None;
        }
        let (ca, cb) = (self.closures(), other.closures());
        let sig = |cl: &[IdSet], x: usize| (cl[x].len(), cl.iter().filter(|c| c.contains(x)).count());
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn go(
            x: usize,
            n: usize,
            ca: &[IdSet],
            cb: &[IdSet],
            sig: &dyn Fn(&[IdSet], usize) -> (usize, usize),
            map: &mut Vec<usize>,
            used: &mut Vec<bool>,
        ) -> bool {
            if x == n {
                return true;
            }
            for y in 0..n {
                if used[y] || sig(ca, x) != sig(cb, y) {
                    continue;
                }
                let ok = (0..x).all(|z| {
                    ca[x].contains(z) == cb[y].contains(map[z]) && ca[z].contains(x) == cb[map[z]].contains(y)
                });
                if ok {
                    map[x] = y;
                    used[y] = true;
                    if go(x + 1, n, ca, cb, sig, map, used) {
                        return true;
                    }
                    used[y] = false;
                }
            }
            false
        }
        go(0, n, &ca, &cb, &sig, &mut map, &mut used).then_some(map)
    }

    /// Graph description of the specialization order: an edge x → y for
    /// each cover, y a closed specialization of x.
    pub fn to_dot(&self, graph_name: &str) -> String {
        let cl = self.closures();
        let mut s = format!("digraph \"{graph_name}\" {{\n");
        for (i, p) in self.points.iter().enumerate() {
            s.push_str(&format!("  p{i} [label=\"{}\"];\n", escape(&p.name)));
        }
        for x in 0..self.len() {
            for y in 0..self.len() {
                let below = |a: usize, b: usize| cl[a].contains(b) && cl[b] != cl[a];
                if below(x, y) && !(0..self.len()).any(|z| below(x, z) && below(z, y)) {
                    s.push_str(&format!("  p{x} -> p{y};\n"));
                }
            }
        }
        s.push_str("}\n");
        s
    }
}

pub(crate) fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

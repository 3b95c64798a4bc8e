//! Finite lattices of thick subcategories.

use std::collections::{HashMap, HashSet, VecDeque};

use serde_json::{json, Value};

use crate::catmodel::Model;
use crate::error::{Error, Result};
use crate::idset::IdSet;

use super::space::escape;

/// Elements in canonical order (size, then members), with upper covers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    pub universe: usize,
    pub elements: Vec<IdSet>,
    pub covers: Vec<Vec<usize>>,
}

impl Lattice {
    /// Builds the lattice of `elements`, computing covers of L as the
    /// minimal sets among `join(L ∪ {c})` for c ∉ L.
    pub fn from_closure(
        universe: usize,
        mut elements: Vec<IdSet>,
        join: impl Fn(&IdSet) -> Result<IdSet>,
    ) -> Result<Lattice> {
        elements.sort();
        elements.dedup();
        let index: HashMap<&IdSet, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut covers = Vec::with_capacity(elements.len());
        for e in &elements {
            let mut cands: Vec<IdSet> = Vec::new();
            for c in (0..universe).filter(|&c| !e.contains(c)) {
                let mut s = e.clone();
                s.insert(c);
                let j = join(&s)?;
                if !cands.contains(&j) {
                    cands.push(j);
                }
            }
            let mut up: Vec<usize> = Vec::new();
            for a in &cands {
                if cands.iter().any(|b| b != a && b.is_subset(a)) {
                    continue;
                }
                match index.get(a) {
                    Some(&i) => up.push(i),
                    None => return Err(Error::Internal(format!("join {a:?} is not a lattice element"))),
                }
            }
            up.sort_unstable();
            covers.push(up);
        }
        Ok(Lattice { universe, elements, covers })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, s: &IdSet) -> Option<usize> {
        self.elements.binary_search(s).ok()
    }

    /// Smallest element containing `s`.
    pub fn hull(&self, s: &IdSet) -> Option<usize> {
        self.elements.iter().position(|e| s.is_subset(e))
    }

    pub fn bottom(&self) -> Option<usize> {
        (!self.is_empty()).then_some(0)
    }

    pub fn top(&self) -> Option<usize> {
        self.len().checked_sub(1)
    }

    /// Indices of all elements containing element `i`.
    pub fn up_set(&self, i: usize) -> IdSet {
        let e = &self.elements[i];
        IdSet::from_ids(self.len(), (0..self.len()).filter(|&j| e.is_subset(&self.elements[j])))
    }

    /// Number of elements in each rank layer from the bottom.
    pub fn layer_sizes(&self) -> Vec<usize> {
        let mut depth = vec![0usize; self.len()];
        for i in 0..self.len() {
            for &j in &self.covers[i] {
                depth[j] = depth[j].max(depth[i] + 1);
            }
        }
        let mut out = vec![0; depth.iter().max().map_or(0, |d| d + 1)];
        for d in depth {
            out[d] += 1;
        }
        out
    }

    pub fn to_dot(&self, graph_name: &str, labels: &[String]) -> String {
        let mut s = format!("digraph \"{graph_name}\" {{\n  rankdir=BT;\n");
        for (i, e) in self.elements.iter().enumerate() {
            s.push_str(&format!("  e{i} [label=\"{}\"];\n", escape(&set_label(e, labels))));
        }
        for (i, up) in self.covers.iter().enumerate() {
            for j in up {
                s.push_str(&format!("  e{i} -> e{j};\n"));
            }
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self, labels: &[String]) -> Value {
        json!({
            "universe": self.universe,
            "elements": self.elements.iter().enumerate().map(|(i, e)| json!({
                "id": i,
                "members": e.iter().map(|c| labels.get(c).cloned().unwrap_or_else(|| c.to_string())).collect::<Vec<_>>(),
                "covers": self.covers[i],
            })).collect::<Vec<_>>(),
        })
    }
}

pub(crate) fn set_label(s: &IdSet, labels: &[String]) -> String {
    let names: Vec<String> = s.iter().map(|c| labels.get(c).cloned().unwrap_or_else(|| c.to_string())).collect();
    format!("{{{}}}", names.join(", "))
}

/// Closes `gens` under intersection, always including the full set.
pub(crate) fn intersection_closure(universe: usize, gens: &[IdSet], guard: usize) -> Result<Vec<IdSet>> {
    let mut seen: HashSet<IdSet> = HashSet::new();
    let mut queue = VecDeque::new();
    let full = IdSet::full(universe);
    seen.insert(full.clone());
    queue.push_back(full);
    while let Some(s) = queue.pop_front() {
        for g in gens {
            let t = s.intersection(g);
            if seen.insert(t.clone()) {
                if seen.len() > guard {
                    return Err(Error::Guard(format!("more than {guard} lattice elements")));
                }
                queue.push_back(t);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// The declared lattice of a model, renumbered into canonical order.
pub(crate) fn declared_lattice(model: &Model) -> Option<Lattice> {
    let lat = model.lattice.as_ref()?;
    let mut order: Vec<usize> = (0..lat.len()).collect();
    order.sort_by(|&a, &b| lat[a].members.cmp(&lat[b].members));
    let mut pos = vec![0; lat.len()];
    for (new, &old) in order.iter().enumerate() {
        pos[old] = new;
    }
    let elements = order.iter().map(|&o| lat[o].members.clone()).collect();
    let covers = order
        .iter()
        .map(|&o| {
            let mut c: Vec<usize> = lat[o].covers.iter().map(|&j| pos[j]).collect();
            c.sort_unstable();
            c
        })
        .collect();
    Some(Lattice { universe: model.len(), elements, covers })
}

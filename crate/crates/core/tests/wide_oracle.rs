//! Thick subcategories of D^b(k A_3) against a brute-force enumeration of
//! wide subcategories of mod F_2 A_3 (closed under kernels, cokernels and
//! extensions), computed with bitmask linear algebra.

use std::collections::BTreeSet;

use speclab::catmodel::{builtin_model, BuiltinParams};
use speclab::quiverrep::interval_name;
use speclab::spectra::{enumerate_thicks, Guard};

const N: usize = 3;

/// A linear map F_2^m → F_2^n as m column bitmasks.
type Map = Vec<u32>;

fn apply(a: &Map, x: u32) -> u32 {
    a.iter().enumerate().filter(|(i, _)| x >> i & 1 == 1).fold(0, |acc, (_, c)| acc ^ c)
}

/// Representation of 0 → 1 → 2.
#[derive(Clone, Debug)]
struct Rep {
    dims: [usize; N],
    maps: [Map; N - 1],
}

fn interval(a: usize, b: usize) -> Rep {
    let dims = std::array::from_fn(|v| usize::from(a <= v && v <= b));
    let maps = std::array::from_fn(|v| vec![u32::from(dims[v + 1] == 1); dims[v]]);
    Rep { dims, maps }
}

fn direct_sum(x: &Rep, y: &Rep) -> Rep {
    let dims = std::array::from_fn(|v| x.dims[v] + y.dims[v]);
    let maps = std::array::from_fn(|v| {
        let shift = x.dims[v + 1];
        x.maps[v].iter().copied().chain(y.maps[v].iter().map(|c| c << shift)).collect()
    });
    Rep { dims, maps }
}

fn all_vectors(d: usize) -> impl Iterator<Item = u32> {
    0..1u32 << d
}

fn span_dim(vs: &BTreeSet<u32>) -> usize {
    vs.len().trailing_zeros() as usize
}

/// Multiplicity of [a,b] from ranks of path maps.
fn decompose(r: &Rep) -> Vec<(usize, usize)> {
    let rank = |i: isize, j: isize| -> usize {
        if i < 0 || j >= N as isize || i > j {
            return 0;
        }
        let (i, j) = (i as usize, j as usize);
        let img: BTreeSet<u32> = all_vectors(r.dims[i]).map(|x| (i..j).fold(x, |y, v| apply(&r.maps[v], y))).collect();
        span_dim(&img)
    };
    let mut out = Vec::new();
    for a in 0..N as isize {
        for b in a..N as isize {
            let m = rank(a, b) + rank(a - 1, b + 1) - rank(a - 1, b) - rank(a, b + 1);
            for _ in 0..m {
                out.push((a as usize, b as usize));
            }
        }
    }
    out
}

/// All morphisms x → y, each a map per vertex.
fn morphisms(x: &Rep, y: &Rep) -> Vec<[Map; N]> {
    let sizes: Vec<usize> = (0..N).map(|v| x.dims[v] * y.dims[v]).collect();
    let total: usize = sizes.iter().sum();
    let mut out = Vec::new();
    for bits in 0u32..1 << total {
        let mut off = 0;
        let f: [Map; N] = std::array::from_fn(|v| {
            let cols = (0..x.dims[v])
                .map(|c| (bits >> (off + c * y.dims[v])) & ((1 << y.dims[v]) - 1))
                .collect();
            off += sizes[v];
            cols
        });
        let commutes = (0..N - 1).all(|v| {
            all_vectors(x.dims[v]).all(|e| apply(&y.maps[v], apply(&f[v], e)) == apply(&f[v + 1], apply(&x.maps[v], e)))
        });
        if commutes {
            out.push(f);
        }
    }
    out
}

/// Greedy basis of a subspace given as its full vector set.
fn basis(space: &BTreeSet<u32>) -> Vec<u32> {
    let mut b: Vec<u32> = Vec::new();
    let mut spanned: BTreeSet<u32> = [0].into();
    for &v in space {
        if !spanned.contains(&v) {
            let add: Vec<u32> = spanned.iter().map(|s| s ^ v).collect();
            spanned.extend(add);
            b.push(v);
        }
    }
    b
}

/// Coordinates of `v` in `b` modulo the subspace `modulo`.
fn coords(b: &[u32], modulo: &BTreeSet<u32>, v: u32) -> u32 {
    (0..1u32 << b.len())
        .find(|&c| modulo.contains(&(apply(&b.to_vec(), c) ^ v)))
        .expect("vector lies in the span")
}

fn kernel(x: &Rep, f: &[Map; N]) -> Rep {
    let zero: BTreeSet<u32> = [0].into();
    let bases: Vec<Vec<u32>> = (0..N)
        .map(|v| basis(&all_vectors(x.dims[v]).filter(|&e| apply(&f[v], e) == 0).collect()))
        .collect();
    let dims = std::array::from_fn(|v| bases[v].len());
    let maps = std::array::from_fn(|v| bases[v].iter().map(|&e| coords(&bases[v + 1], &zero, apply(&x.maps[v], e))).collect());
    Rep { dims, maps }
}

fn cokernel(y: &Rep, x: &Rep, f: &[Map; N]) -> Rep {
    let images: Vec<BTreeSet<u32>> = (0..N).map(|v| all_vectors(x.dims[v]).map(|e| apply(&f[v], e)).collect()).collect();
    // complement of the image: extend a basis of the image to the whole space
    let comps: Vec<Vec<u32>> = (0..N)
        .map(|v| {
            let mut spanned = images[v].clone();
            let mut c = Vec::new();
            for e in all_vectors(y.dims[v]) {
                if !spanned.contains(&e) {
                    let add: Vec<u32> = spanned.iter().map(|s| s ^ e).collect();
                    spanned.extend(add);
                    c.push(e);
                }
            }
            c
        })
        .collect();
    let dims = std::array::from_fn(|v| comps[v].len());
    let maps = std::array::from_fn(|v| comps[v].iter().map(|&e| coords(&comps[v + 1], &images[v + 1], apply(&y.maps[v], e))).collect());
    Rep { dims, maps }
}

/// Middle terms of all extensions 0 → y → E → x → 0.
fn extensions(x: &Rep, y: &Rep) -> Vec<Rep> {
    let sizes: Vec<usize> = (0..N - 1).map(|v| x.dims[v] * y.dims[v + 1]).collect();
    let total: usize = sizes.iter().sum();
    let mut out = Vec::new();
    for bits in 0u32..1 << total {
        let mut e = direct_sum(y, x);
        let mut off = 0;
        for v in 0..N - 1 {
            for c in 0..x.dims[v] {
                let h = (bits >> (off + c * y.dims[v + 1])) & ((1 << y.dims[v + 1]) - 1);
                e.maps[v][y.dims[v] + c] ^= h;
            }
            off += sizes[v];
        }
        out.push(e);
    }
    out
}

#[test]
fn wide_subcategories_match_thick_lattice() {
    let ind: Vec<(usize, usize)> = (0..N).flat_map(|a| (a..N).map(move |b| (a, b))).collect();
    let id = |ab: (usize, usize)| ind.iter().position(|&x| x == ab).unwrap();
    // objects: sums of at most two indecomposables, with their summand sets
    let mut objs: Vec<(u32, Rep)> = Vec::new();
    for i in 0..ind.len() {
        objs.push((1 << i, interval(ind[i].0, ind[i].1)));
        for j in i..ind.len() {
            objs.push(((1 << i) | (1 << j), direct_sum(&interval(ind[i].0, ind[i].1), &interval(ind[j].0, ind[j].1))));
        }
    }
    let summands = |r: &Rep| decompose(r).into_iter().fold(0u32, |m, ab| m | 1 << id(ab));
    // for each pair of objects: the indecomposables produced by kernels,
    // cokernels and extensions
    let mut produced: Vec<(u32, u32)> = Vec::new();
    for (sx, x) in &objs {
        for (sy, y) in &objs {
            let mut p = 0u32;
            for f in morphisms(x, y) {
                p |= summands(&kernel(x, &f)) | summands(&cokernel(y, x, &f));
            }
            for e in extensions(x, y) {
                p |= summands(&e);
            }
            produced.push((sx | sy, p));
        }
    }
    let wide: BTreeSet<BTreeSet<String>> = (0u32..1 << ind.len())
        .filter(|&s| produced.iter().all(|&(need, p)| need & !s != 0 || p & !s == 0))
        .map(|s| (0..ind.len()).filter(|i| s >> i & 1 == 1).map(|i| interval_name(ind[i].0 + 1, ind[i].1 + 1)).collect())
        .collect();
    assert_eq!(wide.len(), 14);

    let m = builtin_model("An", &BuiltinParams { n: Some(3), ..Default::default() }).unwrap();
    let lat = enumerate_thicks(&m, Guard::default()).unwrap();
    let thick: BTreeSet<BTreeSet<String>> = lat.elements.iter().map(|e| m.names(e).into_iter().collect()).collect();
    assert_eq!(thick, wide);
}

#[test]
fn oracle_sanity() {
    let p = interval(0, 2);
    assert_eq!(decompose(&p), vec![(0, 2)]);
    let s = direct_sum(&interval(0, 0), &interval(1, 2));
    assert_eq!(decompose(&s), vec![(0, 0), (1, 2)]);
    // the simple at the sink embeds in [0,2] with cokernel [0,1]
    let f = morphisms(&interval(2, 2), &p);
    assert_eq!(f.len(), 2);
    let nonzero = f.iter().find(|g| g[2] != vec![0]).unwrap();
    assert_eq!(decompose(&cokernel(&p, &interval(2, 2), nonzero)), vec![(0, 1)]);
    assert_eq!(decompose(&kernel(&interval(2, 2), nonzero)), vec![]);
}

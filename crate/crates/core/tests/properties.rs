//! Randomized invariants.

use proptest::prelude::*;
use speclab::catmodel::{builtin_model, load_model, save_model, BuiltinParams, FormalObject, Model};
use speclab::linalg::Matrix;
use speclab::quiverrep::{ext1_dim, hom_dim, Quiver, Representation};
use speclab::rankfn::{self, RankFunction};
use speclab::scalar::F3;
use speclab::spectra::{self, FiniteSpace, Point};
use speclab::tube::{self, oracle, TubeObject};
use speclab::IdSet;

fn model(name: &str, p: BuiltinParams) -> Model {
    builtin_model(name, &p).unwrap()
}

fn an(n: usize) -> Model {
    model("An", BuiltinParams { n: Some(n), ..Default::default() })
}

fn lf_models() -> Vec<Model> {
    vec![
        an(2),
        an(3),
        an(4),
        model("tube_n", BuiltinParams { n: Some(2), ..Default::default() }),
        model("tube_n", BuiltinParams { n: Some(3), ..Default::default() }),
        model("stmod_Cp", BuiltinParams { p: Some(7), ..Default::default() }),
    ]
}

fn rep_a3() -> impl Strategy<Value = Representation<F3>> {
    proptest::collection::vec(0usize..3, 3).prop_flat_map(|dims| {
        let shapes = [(dims[1], dims[0]), (dims[2], dims[1])];
        let entries = shapes.map(|(r, c)| proptest::collection::vec(0i64..3, r * c));
        (Just(dims), entries).prop_map(|(dims, [e0, e1])| {
            let mk = |r: usize, c: usize, e: &[i64]| {
                let mut a = Matrix::zeros(r, c);
                for i in 0..r {
                    for j in 0..c {
                        a.set(i, j, F3::new(e[i * c + j]));
                    }
                }
                a
            };
            let maps = vec![mk(dims[1], dims[0], &e0), mk(dims[2], dims[1], &e1)];
            Representation::new(Quiver::linear_a(3), dims, maps).unwrap()
        })
    })
}

fn tube_object() -> impl Strategy<Value = TubeObject> {
    (1usize..=5).prop_flat_map(|n| (Just(n), 0..n as i64, 1..=2 * n)).prop_map(|(n, s, m)| TubeObject::new(n, s, m))
}

fn random_space() -> impl Strategy<Value = FiniteSpace<()>> {
    (1usize..=6).prop_flat_map(|n| {
        proptest::collection::vec(proptest::collection::vec(any::<bool>(), n), 0..5).prop_map(move |basis| FiniteSpace {
            points: (0..n).map(|i| Point { name: format!("x{i}"), payload: () }).collect(),
            closed_basis: basis
                .into_iter()
                .map(|b| IdSet::from_ids(n, (0..n).filter(|&i| b[i])))
                .collect(),
        })
    })
}

fn subset(k: usize, mask: u32) -> IdSet {
    IdSet::from_ids(k, (0..k).filter(|i| mask >> i & 1 == 1))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn hom_is_biadditive_and_euler_holds(m in rep_a3(), n in rep_a3(), l in rep_a3()) {
        let mn = m.direct_sum(&n).unwrap();
        prop_assert_eq!(hom_dim(&mn, &l).unwrap(), hom_dim(&m, &l).unwrap() + hom_dim(&n, &l).unwrap());
        prop_assert_eq!(hom_dim(&l, &mn).unwrap(), hom_dim(&l, &m).unwrap() + hom_dim(&l, &n).unwrap());
        let h = hom_dim(&m, &n).unwrap() as i64;
        let e = ext1_dim(&m, &n).unwrap() as i64;
        prop_assert_eq!(h - e, m.quiver.euler_form(&m.dims, &n.dims));
    }

    #[test]
    fn tube_rules_match_oracle(x in tube_object(), s in 0i64..6, m in 1usize..=10) {
        let y = TubeObject::new(x.n, s, m);
        prop_assert_eq!(tube::hom_dim(&x, &y).unwrap(), oracle::hom_dim::<F3>(&x, &y).unwrap());
        prop_assert_eq!(tube::ext_dim(&x, &y).unwrap(), oracle::ext_dim::<F3>(&x, &y).unwrap());
        // Auslander–Reiten formula
        prop_assert_eq!(tube::ext_dim(&x, &y).unwrap(), tube::hom_dim(&y, &x.tau()).unwrap());
        prop_assert_eq!(x.tau().tau_inverse(), x);
    }

    #[test]
    fn wide_is_perpendicular(n in 1usize..=6, pick in any::<prop::sample::Index>()) {
        let all = tube::enumerate_noncrossing(n);
        let c = &all[pick.index(all.len())];
        prop_assert!(tube::is_noncrossing(c));
        let z = tube::perp_object(c).unwrap();
        prop_assert_eq!(tube::perp_set(&z, n, 2 * n).unwrap(), tube::wide_from_arcs(c, 2 * n).unwrap());
    }

    #[test]
    fn finite_space_invariants(s in random_space()) {
        let closed = s.closed_sets(1 << 12).unwrap();
        let brute: Vec<IdSet> = {
            let mut v: Vec<IdSet> = (0u32..1 << s.len()).map(|m| subset(s.len(), m)).filter(|x| s.is_closed(x)).collect();
            v.sort();
            v
        };
        prop_assert_eq!(&closed, &brute);
        let q = s.kolmogorov_quotient();
        prop_assert!(q.is_t0());
        prop_assert!(q.kolmogorov_quotient().find_homeomorphism(&q).is_some());
        if s.is_t0() {
            prop_assert!(q.find_homeomorphism(&s).is_some());
        }
        let rev: Vec<usize> = (0..s.len()).rev().collect();
        let flipped = FiniteSpace {
            points: s.points.clone(),
            closed_basis: s.closed_basis.iter().map(|b| IdSet::from_ids(s.len(), b.iter().map(|i| rev[i]))).collect(),
        };
        prop_assert!(s.homeomorphic_via(&flipped, &rev));
    }

    #[test]
    fn closure_and_radical_axioms(which in 0usize..6, a in any::<u32>(), b in any::<u32>()) {
        let m = &lf_models()[which];
        let k = m.len();
        let (x, y) = (subset(k, a), subset(k, b));
        let cx = m.thick_closure(&x).unwrap();
        prop_assert!(x.is_subset(&cx));
        prop_assert_eq!(m.thick_closure(&cx).unwrap(), cx.clone());
        let cxy = m.thick_closure(&x.union(&y)).unwrap();
        prop_assert!(cx.is_subset(&cxy));
        let s = spectra::shift_spectrum(m).unwrap();
        let r = spectra::radical(&s, &cx);
        prop_assert_eq!(spectra::support_of_thick(&s, &r), spectra::support_of_thick(&s, &cx));
        let u = subset(s.len(), b);
        let p = spectra::psi(m, &s, &u);
        prop_assert_eq!(spectra::radical(&s, &p), p.clone());
        prop_assert_eq!(m.thick_closure(&p).unwrap(), p);
    }

    #[test]
    fn rank_function_kernels(which in 0usize..3, coeffs in proptest::collection::vec(0u64..4, 20), shift in -3i64..3) {
        let m = &lf_models()[which];
        let k = m.len();
        let cands = rankfn::irreducible_candidates(m).unwrap();
        let half = |off: usize| cands.iter().enumerate().fold(RankFunction::zero(k), |acc, (i, c)| acc.add(&c.scale(coeffs[(i + off) % 20])));
        let (r1, r2) = (half(0), half(7));
        let k1 = rankfn::kernel(&r1, m).unwrap();
        let k2 = rankfn::kernel(&r2, m).unwrap();
        prop_assert_eq!(rankfn::kernel(&r1.add(&r2), m).unwrap(), k1.intersection(&k2));
        let s = spectra::shift_spectrum(m).unwrap();
        prop_assert_eq!(spectra::radical(&s, &k1), k1);
        let d = rankfn::decompose(&r1, &cands).unwrap();
        let mut re = RankFunction::zero(k);
        for (&i, &n) in &d {
            re = re.add(&cands[i].scale(n));
        }
        prop_assert_eq!(re.values, r1.values);
        let a = FormalObject::of_classes(&[coeffs[0] as usize % k]);
        prop_assert_eq!(rankfn::theta_upper(&a.shifted(shift), m).unwrap().values, rankfn::theta_upper(&a, m).unwrap().values);
    }

}

proptest! {
    #![proptest_config(ProptestConfig { cases: 12, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn documents_round_trip(n in 1usize..5, p in prop::sample::select(vec![2u64, 3, 5, 7]), bound in 3u64..30, k in 1usize..6) {
        let params = BuiltinParams { n: Some(n), p: Some(p), bound: Some(bound), k: Some(k), nmax: Some(n), jmax: Some(2), ..Default::default() };
        for name in speclab::catmodel::BUILTIN_NAMES {
            let m = model(name, params.clone());
            prop_assert_eq!(load_model(&save_model(&m)).unwrap(), m);
        }
    }
}

#[test]
fn supports_determine_building() {
    for m in lf_models() {
        let k = m.len();
        let s = spectra::shift_spectrum(&m).unwrap();
        for x in 0..k {
            let sx = spectra::support(&m, &s, &FormalObject::of_classes(&[x])).unwrap();
            let tx = m.thick_closure(&IdSet::singleton(k, x)).unwrap();
            for y in 0..k {
                let sy = spectra::support(&m, &s, &FormalObject::of_classes(&[y])).unwrap();
                let ty = m.thick_closure(&IdSet::singleton(k, y)).unwrap();
                assert_eq!(sx.is_subset(&sy), tx.is_subset(&spectra::radical(&s, &ty)), "{} {x} {y}", m.name);
            }
        }
    }
}

#[test]
fn homological_quotient_is_shift_spectrum() {
    for m in lf_models() {
        let q = spectra::shift_homological_spectrum(&m).unwrap().kolmogorov_quotient();
        let s = spectra::shift_spectrum(&m).unwrap();
        assert!(q.find_homeomorphism(&s).is_some(), "{}", m.name);
    }
}

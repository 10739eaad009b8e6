mod common;

use std::collections::BTreeSet;

use common::{endo, module, quandle};
use proptest::prelude::*;
use qmq_core::builtin::{available_names, builtin_link, builtin_pd, TABLE_LINKS};
use qmq_core::coloring::{
    brute_force_colorings, counting_invariant, enumerate_colorings, enumerate_colorings_with,
    push_coloring, Coloring,
};
use qmq_core::diagram::{Crossing, LinkDiagram, Sign};
use qmq_core::linalg::{brute_force_kernel_count, Ring};
use qmq_core::module::{
    bead_matrix, coloring_weight, module_polynomial, module_polynomial_with, QuandleModule,
    WeightValue,
};
use qmq_core::poly::TwoVarPolynomial;
use qmq_core::quandle::{
    alexander_quandle, conjugation_quandle, core_quandle, enumerate_endomorphisms, Endomorphism,
    GroupTable, Quandle,
};
use qmq_core::quiver::{
    coloring_quiver_with, module_quiver_polynomial, module_quiver_with, PushPolicy,
};
use qmq_core::Execution;

fn probe_quandles() -> Vec<Quandle> {
    vec![
        Quandle::trivial(2).unwrap(),
        alexander_quandle(3, 2).unwrap(),
        alexander_quandle(5, 2).unwrap(),
        alexander_quandle(5, 3).unwrap(),
        core_quandle(&GroupTable::cyclic(4).unwrap()).unwrap(),
        conjugation_quandle(&GroupTable::symmetric(3).unwrap()).unwrap(),
        quandle("q1"),
        quandle("q3"),
        quandle("q5"),
    ]
}

/// Crossing `i` enters on arc `i` and leaves on `perm[i]`.
fn diagram() -> impl Strategy<Value = LinkDiagram> {
    (1usize..=5).prop_flat_map(|k| {
        (
            Just(k).prop_perturb(|k, mut rng| {
                let mut p: Vec<usize> = (0..k).collect();
                for i in (1..k).rev() {
                    p.swap(i, rng.random_range(0..=i));
                }
                p
            }),
            proptest::collection::vec(0..k, k),
            proptest::collection::vec(any::<bool>(), k),
        )
            .prop_map(move |(perm, overs, signs)| {
                let crossings = (0..k)
                    .map(|i| {
                        let sign = if signs[i] {
                            Sign::Negative
                        } else {
                            Sign::Positive
                        };
                        Crossing::new(sign, i, overs[i], perm[i])
                    })
                    .collect();
                LinkDiagram::new("d", k, crossings, vec![]).unwrap()
            })
    })
}

fn quandle_index() -> impl Strategy<Value = usize> {
    0..probe_quandles().len()
}

fn unit_module(q: &Quandle, n: u64, seed: u64) -> QuandleModule {
    let ring = Ring::modulo(n).unwrap();
    let units: Vec<i64> = (1..n as i64).filter(|&u| ring.is_unit(u)).collect();
    QuandleModule::constant(ring, q.order(), units[seed as usize % units.len()]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn backtracking_matches_exhaustive(d in diagram(), qi in quandle_index()) {
        let q = &probe_quandles()[qi];
        let fast = enumerate_colorings_with(&d, q, Execution::Sequential);
        prop_assert_eq!(&fast, &brute_force_colorings(&d, q));
        prop_assert_eq!(&fast, &enumerate_colorings_with(&d, q, Execution::Parallel));
        // constant colorings always exist
        prop_assert!(fast.len() >= q.order());
    }

    #[test]
    fn endomorphisms_push_colorings_to_colorings(d in diagram(), qi in quandle_index()) {
        let q = &probe_quandles()[qi];
        let colorings: BTreeSet<Coloring> = enumerate_colorings(&d, q).into_iter().collect();
        for f in enumerate_endomorphisms(q, 8).unwrap() {
            let bijective = f.as_slice().iter().collect::<BTreeSet<_>>().len() == q.order();
            let image: BTreeSet<Coloring> = colorings
                .iter()
                .map(|c| push_coloring(q, c, &f).unwrap())
                .collect();
            prop_assert!(image.is_subset(&colorings));
            if bijective {
                prop_assert_eq!(&image, &colorings);
            }
        }
    }

    #[test]
    fn weight_is_kernel_size(d in diagram(), qi in quandle_index(), n in 2u64..=6, seed in any::<u64>()) {
        let q = &probe_quandles()[qi];
        let m = unit_module(q, n, seed);
        for c in enumerate_colorings(&d, q) {
            let w = coloring_weight(&d, c.colors(), &m).unwrap();
            let bead = bead_matrix(&d, c.colors(), &m).unwrap();
            let slow = brute_force_kernel_count(&bead, n, 100_000).unwrap();
            prop_assert_eq!(w, WeightValue::Cardinality(slow));
        }
    }

    #[test]
    fn module_polynomial_counts_colorings(d in diagram(), qi in quandle_index(), n in 2u64..=6, seed in any::<u64>()) {
        let q = &probe_quandles()[qi];
        let m = unit_module(q, n, seed);
        let p = module_polynomial_with(&d, q, &m, Execution::Sequential).unwrap();
        prop_assert_eq!(p.at_one(), counting_invariant(&d, q));
        prop_assert_eq!(p, module_polynomial_with(&d, q, &m, Execution::Parallel).unwrap());
    }

    #[test]
    fn quiver_edges_follow_the_maps(d in diagram(), qi in quandle_index(), picks in proptest::collection::vec(any::<usize>(), 1..4)) {
        let q = &probe_quandles()[qi];
        let all = enumerate_endomorphisms(q, 8).unwrap();
        let endos: Vec<Endomorphism> = picks.iter().map(|&i| all[i % all.len()].clone()).collect();
        let wq = coloring_quiver_with(&d, q, &endos, PushPolicy::RequireEndomorphism, Execution::Sequential).unwrap();
        prop_assert_eq!(wq.coloring_count(), wq.vertices.len());
        prop_assert_eq!(wq.edges.len(), wq.vertices.len() * endos.len());
        for (v, vertex) in wq.vertices.iter().enumerate() {
            let c = Coloring::new(&d, q, vertex.colors.clone()).unwrap();
            for (k, f) in endos.iter().enumerate() {
                let target = wq.successor(v, k).unwrap();
                let pushed = push_coloring(q, &c, f).unwrap();
                prop_assert_eq!(&wq.vertices[target].colors, &pushed.colors().to_vec());
            }
        }
        let par = coloring_quiver_with(&d, q, &endos, PushPolicy::RequireEndomorphism, Execution::Parallel).unwrap();
        prop_assert_eq!(wq, par);
    }

    #[test]
    fn quiver_polynomial_specializes(d in diagram(), qi in quandle_index(), n in 2u64..=5, seed in any::<u64>(), picks in proptest::collection::vec(any::<usize>(), 1..4)) {
        let q = &probe_quandles()[qi];
        let m = unit_module(q, n, seed);
        let all = enumerate_endomorphisms(q, 8).unwrap();
        let endos: Vec<Endomorphism> = picks.iter().map(|&i| all[i % all.len()].clone()).collect();
        let p = module_quiver_polynomial(&d, q, &endos, &m, PushPolicy::RequireEndomorphism, Execution::Sequential).unwrap();
        let one = module_polynomial(&d, q, &m).unwrap();
        let tau = p.tau_at_one();
        for t in one.terms() {
            prop_assert_eq!(tau.coefficient(t.exp), t.coeff * endos.len() as u64);
        }
        prop_assert_eq!(p.at_one(), counting_invariant(&d, q) * endos.len() as u64);
        let identity = [Endomorphism::identity(q)];
        let diag = module_quiver_polynomial(&d, q, &identity, &m, PushPolicy::RequireEndomorphism, Execution::Sequential).unwrap();
        prop_assert!(diag.terms().iter().all(|t| t.sigma == t.tau));
    }

    #[test]
    fn native_text_round_trips(d in diagram()) {
        let back = LinkDiagram::parse(&d.to_text()).unwrap();
        prop_assert_eq!(&back.crossings, &d.crossings);
        prop_assert_eq!(back.arc_count, d.arc_count);
        prop_assert_eq!(d.mirror().mirror().crossings, d.crossings.clone());
        prop_assert_eq!(d.reverse_components(1).reverse_components(1).crossings, d.crossings.clone());
    }

    #[test]
    fn polynomial_text_and_json_round_trip(terms in proptest::collection::vec((0u64..40, 0u64..40, 1u64..1000), 0..8)) {
        let mut p = TwoVarPolynomial::new();
        for (a, b, c) in terms {
            p.add_term(a, b, c);
        }
        let text = p.to_string();
        prop_assert_eq!(&text.parse::<TwoVarPolynomial>().unwrap(), &p);
        let json = serde_json::to_string(&p).unwrap();
        let back: TwoVarPolynomial = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&back, &p);
        let one = p.tau_at_one();
        prop_assert_eq!(one.to_string().parse::<qmq_core::poly::OneVarPolynomial>().unwrap(), one);
    }
}

#[test]
fn pd_and_native_diagrams_agree() {
    let quandles = probe_quandles();
    for name in available_names() {
        let Some(pd) = builtin_pd(name) else { continue };
        let pd = pd.unwrap();
        let native = builtin_link(name).unwrap();
        assert_eq!(pd.component_count(), native.component_count(), "{name}");
        for q in &quandles {
            assert_eq!(
                counting_invariant(&pd, q),
                counting_invariant(&native, q),
                "{name}"
            );
        }
        let q = quandle("q5");
        let m = module("q5_z3");
        assert_eq!(
            module_polynomial(&pd, &q, &m).unwrap(),
            module_polynomial(&native, &q, &m).unwrap(),
            "{name}"
        );
    }
}

#[test]
fn identity_quiver_is_diagonal_on_table_links() {
    let q = quandle("q3");
    let m = module("q3_z6");
    let id = [Endomorphism::identity(&q)];
    for name in TABLE_LINKS {
        let d = builtin_link(name).unwrap();
        let p = module_quiver_polynomial(
            &d,
            &q,
            &id,
            &m,
            PushPolicy::RequireEndomorphism,
            Execution::Parallel,
        )
        .unwrap();
        assert!(p.terms().iter().all(|t| t.sigma == t.tau), "{name}: {p}");
        assert_eq!(p.tau_at_one(), module_polynomial(&d, &q, &m).unwrap());
    }
}

#[test]
fn any_map_policy_keeps_one_edge_per_coloring() {
    let q = quandle("q3");
    let m = module("q3_z6");
    let f = [endo("q3", &q)];
    for name in TABLE_LINKS {
        let d = builtin_link(name).unwrap();
        let wq =
            module_quiver_with(&d, &q, &f, &m, PushPolicy::AnyMap, Execution::Sequential).unwrap();
        let colorings = wq.coloring_count();
        assert_eq!(colorings as u64, counting_invariant(&d, &q));
        assert_eq!(wq.edges.len(), colorings);
        assert!(wq.vertices[..colorings].iter().all(|v| v.is_coloring));
        assert!(wq.vertices[colorings..]
            .iter()
            .all(|v| !v.is_coloring && v.weight.is_some()));
        assert!(wq.edges.iter().all(|e| e.source < colorings));
    }
}

#[test]
fn l6a4_counts_do_not_depend_on_orientation() {
    let d = builtin_link("L6a4").unwrap();
    for (name, want) in [("q5", 125), ("q3", 27)] {
        let q = quandle(name);
        for mask in 0..8 {
            for mirror in [false, true] {
                assert_eq!(
                    counting_invariant(&d.variant(mask, mirror), &q),
                    want,
                    "{name} {mask} {mirror}"
                );
            }
        }
    }
}

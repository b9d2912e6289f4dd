use mmds_core::checker::is_feasible;
use mmds_core::graph::io::{parse_graph, parse_solution, serialize_graph, serialize_solution};
use mmds_core::oracle::brute_feasible;
use mmds_core::random::{self, rng_for};
use mmds_core::reductions::{brute_source, reduce_mis_split, reduce_pp1in3sat, SourceProblem};
use mmds_core::registry::{SolveContext, SolverRegistry};
use mmds_core::twdp::{
    build_tree_decomposition, make_nice, parse_td, serialize_td, validate_decomposition,
};
use mmds_core::{Graph, Instance};
use proptest::prelude::*;

fn graph() -> impl Strategy<Value = Graph> {
    (1usize..=9).prop_flat_map(|n| {
        proptest::collection::vec((1..=n, 1..=n), 0..=2 * n).prop_map(move |pairs| {
            Graph::from_edges_dedup(n, pairs.into_iter().filter(|(u, v)| u != v)).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn registered_solvers_agree(g in graph(), k in 1usize..=4) {
        let inst = Instance::new(g, k).unwrap();
        let reg = SolverRegistry::default();
        let ctx = SolveContext::default();
        let expected = brute_feasible(&inst, false).unwrap().is_some();
        for name in reg.names() {
            let s = reg.get(name).unwrap().solve(&inst, &ctx).unwrap();
            prop_assert_eq!(s.is_some(), expected, "{}", name);
            if let Some(s) = s {
                prop_assert!(is_feasible(&inst, &s).is_feasible());
            }
        }
    }

    #[test]
    fn worker_count_does_not_change_answers(g in graph(), k in 1usize..=3) {
        let inst = Instance::new(g, k).unwrap();
        let reg = SolverRegistry::default();
        for name in reg.names() {
            let solver = reg.get(name).unwrap();
            let one = solver.solve(&inst, &SolveContext::default()).unwrap();
            let four = solver.solve(&inst, &SolveContext { jobs: 4, ..SolveContext::default() }).unwrap();
            prop_assert_eq!(one, four, "{}", name);
        }
    }

    #[test]
    fn text_formats_round_trip(g in graph()) {
        let back = parse_graph(&serialize_graph(&g)).unwrap();
        prop_assert_eq!(&back, &g);
        let td = build_tree_decomposition(&g);
        let td_back = parse_td(&serialize_td(&td, g.n())).unwrap();
        prop_assert!(validate_decomposition(&g, &td_back, false).is_valid());
        prop_assert_eq!(td_back.width(), td.width());
        let nice = make_nice(&td).unwrap();
        prop_assert_eq!(nice.width(), td.width());
        if let Some(s) = brute_feasible(&Instance::new(g.clone(), 3).unwrap(), true).unwrap() {
            prop_assert_eq!(parse_solution(&serialize_solution(&s), &g).unwrap(), s);
        }
    }

    #[test]
    fn one_in_three_round_trip(seed in any::<u64>()) {
        let mut rng = rng_for(seed, 0);
        let phi = random::random_positive_3cnf(5, 3, &mut rng);
        let out = reduce_pp1in3sat(&phi).unwrap();
        prop_assert_eq!(
            brute_source(SourceProblem::OneInThree(&phi)).unwrap(),
            brute_feasible(&out.instance, true).unwrap().is_some()
        );
    }

    #[test]
    fn split_round_trip(seed in any::<u64>()) {
        let mut rng = rng_for(seed, 1);
        let g = random::random_colored(&[2, 3], 0.5, &mut rng);
        let out = reduce_mis_split(&g, 2).unwrap();
        prop_assert_eq!(
            brute_source(SourceProblem::Mis(&g)).unwrap(),
            brute_feasible(&out.instance, true).unwrap().is_some()
        );
    }
}

#[test]
fn path_on_three_vertices() {
    let g = Graph::from_edges(3, [(1, 2), (2, 3)]).unwrap();
    let reg = SolverRegistry::default();
    for name in reg.names() {
        let s = reg
            .get(name)
            .unwrap()
            .solve(&Instance::new(g.clone(), 1).unwrap(), &SolveContext::default())
            .unwrap()
            .unwrap();
        assert_eq!(s.members(), &[2], "{name}");
    }
}

use proptest::prelude::*;
use trilist::algo::KPolicy;
use trilist::analysis::{tune_k, KRule};
use trilist::counting::{count_from_stream, matrix_count};
use trilist::generator::GenSpec;
use trilist::graph::{load_edge_list, reorder_by_degree};
use trilist::{AdjacencyMatrix, Algorithm, Graph, Triangle};

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=40).prop_flat_map(|n| {
        prop::collection::vec((0..n as u32, 0..n as u32), 0..250).prop_map(move |e| Graph::from_edges(n, e).0)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn all_algorithms_report_alike(g in arb_graph(), k in 0usize..12) {
        let a = AdjacencyMatrix::new(&g).unwrap();
        let expected = matrix_count(&a);
        prop_assert!(expected.is_consistent_with(&g));
        for algo in Algorithm::ALL {
            prop_assert_eq!(&algo.report(&g, Some(&a), k).unwrap(), &expected, "{}", algo);
        }
    }

    #[test]
    fn relabeling_preserves_triangles(g in arb_graph()) {
        let (h, ord) = reorder_by_degree(&g);
        let mapped: std::collections::BTreeSet<Triangle> = trilist::sparse::forward(&h)
            .map(|t| Triangle::new(ord.vertex(t.a), ord.vertex(t.b), ord.vertex(t.c)))
            .collect();
        let direct: std::collections::BTreeSet<Triangle> = trilist::sparse::forward(&g).collect();
        prop_assert_eq!(mapped, direct);
    }
}

#[test]
fn edge_list_and_binary_file_agree() {
    let g = GenSpec::powerlaw(2_000, 2.3, 11).generate().unwrap();
    let text: String = g.edges().map(|(u, v)| format!("{u} {v}\n")).collect();
    let from_text = load_edge_list(text.as_bytes()).unwrap();

    let path = std::env::temp_dir().join(format!("trilist-api-{}.bin", std::process::id()));
    g.write_binary(std::fs::File::create(&path).unwrap()).unwrap();
    let from_binary = Graph::read_binary(std::fs::File::open(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();

    assert_eq!(from_binary, g);
    // The edge list cannot represent trailing isolated vertices.
    let count = |g: &Graph| count_from_stream(trilist::sparse::compact_forward(g), g.n()).total;
    assert_eq!(count(&from_text), count(&g));
    assert_eq!(from_text.m(), g.m());
}

#[test]
fn serializable_types_round_trip() {
    let spec = GenSpec::powerlaw(500, 2.5, 3);
    let json = serde_json::to_string(&spec).unwrap();
    assert_eq!(serde_json::from_str::<GenSpec>(&json).unwrap(), spec);

    let policy = KPolicy::Auto(KRule::SqrtMLogN);
    for rule in KRule::ALL {
        assert_eq!(serde_json::to_string(&rule).unwrap(), format!("\"{}\"", rule.name()));
    }
    for algo in Algorithm::ALL {
        assert_eq!(serde_json::to_string(&algo).unwrap(), format!("\"{}\"", algo.name()));
    }
    assert_eq!(serde_json::from_str::<KPolicy>(&serde_json::to_string(&policy).unwrap()).unwrap(), policy);

    let sweep = tune_k(&spec.generate().unwrap(), Algorithm::AyzListing, &[0, 8], 1).unwrap();
    let back: trilist::analysis::KSweepResult =
        serde_json::from_str(&serde_json::to_string(&sweep).unwrap()).unwrap();
    assert_eq!(back, sweep);
}

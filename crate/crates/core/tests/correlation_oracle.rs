mod common;

use p2ptopo::correlation::{
    assortativity, degree_ccdf, knn_by_degree, knn_per_node, Assortativity, NO_EDGES, ZERO_VARIANCE,
};
use p2ptopo::Graph;
use proptest::prelude::*;

use common::{directed_neighbor_degree_sum, pearson_assortativity};

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..30).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..100)
            .prop_map(move |edges| Graph::from_edges(n, edges).unwrap())
    })
}

proptest! {
    #[test]
    fn assortativity_matches_pearson(g in arb_graph()) {
        match (assortativity(&g), pearson_assortativity(&g)) {
            (Assortativity::Defined(r), Some(o)) => prop_assert!((r - o).abs() < 1e-9, "{} vs {}", r, o),
            (Assortativity::Undefined { .. }, None) => {}
            (a, o) => prop_assert!(false, "{:?} vs {:?}", a, o),
        }
    }

    #[test]
    fn knn_rows_conserve_neighbor_degrees(g in arb_graph()) {
        let table = knn_by_degree(&g);
        let total: u64 = table.rows.iter().map(|r| r.neighbor_degree_sum).sum();
        prop_assert_eq!(total, directed_neighbor_degree_sum(&g));
        prop_assert!(table.rows.windows(2).all(|w| w[0].k < w[1].k));
        prop_assert!(table.rows.iter().all(|r| r.k > 0 && r.n_k > 0));
    }

    #[test]
    fn knn_row_is_mean_of_per_node_values(g in arb_graph()) {
        let per_node = knn_per_node(&g);
        let deg = g.degrees();
        for row in knn_by_degree(&g).rows {
            let vals: Vec<f64> = (0..g.node_count())
                .filter(|&v| deg[v] == row.k)
                .map(|v| per_node[v].unwrap())
                .collect();
            let mean = vals.iter().sum::<f64>() / vals.len() as f64;
            prop_assert!((mean - row.knn).abs() < 1e-9);
        }
        for v in 0..g.node_count() {
            prop_assert_eq!(per_node[v].is_none(), deg[v] == 0);
        }
    }

    #[test]
    fn isolated_nodes_change_nothing(g in arb_graph(), extra in 1usize..5) {
        let padded = Graph::from_edges(g.node_count() + extra, g.edges()).unwrap();
        prop_assert_eq!(knn_by_degree(&g).rows, knn_by_degree(&padded).rows);
        prop_assert_eq!(assortativity(&g), assortativity(&padded));
    }

    #[test]
    fn ccdf_matches_counting(g in arb_graph()) {
        let deg = g.degrees();
        let n = g.node_count() as f64;
        let ccdf = degree_ccdf(&g);
        prop_assert_eq!(ccdf.len(), g.max_degree() + 2);
        for (k, frac) in ccdf {
            let count = deg.iter().filter(|&&d| d >= k).count() as f64;
            prop_assert_eq!(frac, count / n);
        }
    }
}

#[test]
fn closed_forms() {
    let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
    let per_node = knn_per_node(&star);
    assert_eq!(per_node, vec![Some(1.0), Some(3.0), Some(3.0), Some(3.0)]);
    assert_eq!(assortativity(&star).value(), Some(-1.0));
    let ccdf = degree_ccdf(&star);
    assert_eq!(ccdf[1], (1, 1.0));
    assert_eq!(ccdf[3], (3, 0.25));

    let tri = Graph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
    assert_eq!(knn_per_node(&tri), vec![Some(2.0); 3]);
    assert_eq!(degree_ccdf(&tri), vec![(0, 1.0), (1, 1.0), (2, 1.0), (3, 0.0)]);
    assert_eq!(assortativity(&tri).reason(), Some(ZERO_VARIANCE));
    assert_eq!(assortativity(&Graph::empty(3)).reason(), Some(NO_EDGES));

    let path = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
    let r = assortativity(&path).value().unwrap();
    assert!((r - pearson_assortativity(&path).unwrap()).abs() < 1e-12);
}

mod common;

use common::product_group;
use proptest::prelude::*;
use terwilliger::schemes::{
    johnson, parse_graph_file, parse_scheme_file, rook4, scheme_from_srg, serialize_graph_file, serialize_scheme_file,
    shrikhande, AssociationScheme, Graph, SubconstituentFrame,
};

fn scheme_strategy() -> impl Strategy<Value = AssociationScheme> {
    prop_oneof![
        (1usize..=5, 1usize..=5).prop_map(|(a, b)| product_group(a, b)),
        (4usize..=8).prop_map(|n| johnson(n).unwrap()),
        Just(scheme_from_srg(&rook4()).unwrap().0),
        Just(scheme_from_srg(&shrikhande()).unwrap().0),
    ]
}

/// A scheme together with a random relabeling of its points.
fn relabeled() -> impl Strategy<Value = (AssociationScheme, Vec<usize>)> {
    scheme_strategy().prop_flat_map(|s| {
        let perm = Just((0..s.order()).collect::<Vec<usize>>()).prop_shuffle();
        (Just(s), perm)
    })
}

fn graph_strategy() -> impl Strategy<Value = (Graph, Vec<usize>)> {
    (2usize..=12).prop_flat_map(|n| {
        (prop::collection::vec(any::<bool>(), n * n), prop::collection::vec(0..n, 0..n)).prop_map(move |(bits, subset)| {
            (Graph::from_fn(n, |x, y| bits[x.min(y) * n + x.max(y)]), subset)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn adjacency_products_expand_in_the_basis(s in scheme_strategy()) {
        let r = s.rank();
        let adj: Vec<_> = (0..r).map(|t| s.adjacency(t)).collect();
        for a in 0..r {
            for b in 0..r {
                let product = adj[a].mul(&adj[b]);
                let n = s.order();
                for x in 0..n {
                    for y in 0..n {
                        let u = s.relation(x, y);
                        prop_assert_eq!(product.get(x, y).clone(), s.p(a, b, u).into());
                    }
                }
            }
        }
    }

    #[test]
    fn intersection_numbers_sum_to_valencies(s in scheme_strategy()) {
        let r = s.rank();
        for t in 0..r {
            for u in 0..r {
                let row: u64 = (0..r).map(|v| s.p(t, v, u)).sum();
                prop_assert_eq!(row, s.valency(t));
            }
            prop_assert_eq!(s.valency(t), s.valency(s.dual(t)));
            let ones = s.adjacency(t).row_vecs().iter().all(|row| row.iter().filter(|x| **x == 1.into()).count() as u64 == s.valency(t));
            prop_assert!(ones);
        }
        prop_assert_eq!(s.valencies().iter().sum::<u64>(), s.order() as u64);
    }

    #[test]
    fn relabeling_preserves_intersection_numbers((s, perm) in relabeled()) {
        let t = AssociationScheme::validate(s.table().permute_points(&perm).unwrap()).unwrap();
        prop_assert_eq!(t.rank(), s.rank());
        for a in 0..s.rank() {
            for b in 0..s.rank() {
                for c in 0..s.rank() {
                    prop_assert_eq!(t.p(a, b, c), s.p(a, b, c));
                }
            }
        }
    }

    #[test]
    fn subconstituent_blocks_are_tactical(s in scheme_strategy(), x in any::<prop::sample::Index>()) {
        let x = x.index(s.order());
        let frame = SubconstituentFrame::new(&s, x).unwrap();
        let r = s.rank();
        for a in 0..r {
            for b in 0..r {
                for u in 0..r {
                    let block = frame.subconstituent_block(a, b, u).row_vecs();
                    for row in &block {
                        let sum: usize = row.iter().filter(|e| **e == 1.into()).count();
                        prop_assert_eq!(sum as u64, s.p(b, s.dual(u), a));
                    }
                    for col in 0..frame.cell(b).len() {
                        let sum = block.iter().filter(|row| row[col] == 1.into()).count();
                        prop_assert_eq!(sum as u64, s.p(a, u, b));
                    }
                }
            }
        }
    }

    #[test]
    fn scheme_files_round_trip(s in scheme_strategy()) {
        let text = serialize_scheme_file(s.table());
        prop_assert_eq!(&parse_scheme_file(&text).unwrap(), s.table());
    }

    #[test]
    fn seidel_switching_is_an_involution((g, subset) in graph_strategy()) {
        let once = g.seidel_switch(&subset).unwrap();
        prop_assert_eq!(&once.seidel_switch(&subset).unwrap(), &g);
        let inside: Vec<bool> = (0..g.order()).map(|v| subset.contains(&v)).collect();
        let complement: Vec<usize> = (0..g.order()).filter(|&v| !inside[v]).collect();
        prop_assert_eq!(g.seidel_switch(&complement).unwrap(), once.clone());
        prop_assert_eq!(parse_graph_file(&serialize_graph_file(&once)).unwrap(), once);
    }
}

#[test]
fn johnson_schemes_validate() {
    for n in 5..=12 {
        let s = johnson(n).unwrap();
        let k = n * (n - 1) / 2;
        assert_eq!((s.order(), s.rank()), (k, 3));
        assert_eq!(s.valencies(), &[1, 2 * (n as u64 - 2), ((n - 2) * (n - 3) / 2) as u64]);
        assert!(s.is_symmetric() && s.is_commutative());
    }
}

use proptest::prelude::*;
use segsum::pruning::{parse_pruned, prune, Pruned};
use segsum::schemes::{contents_term, distribute_node, map_term};
use segsum::shapes::parse_term;
use segsum::{Collection, CollectionKind, Node, ShapeKind, Term};

fn term(shape: ShapeKind, depth: u32) -> BoxedStrategy<Term> {
    let base = match shape {
        ShapeKind::List => Just(Term::nil()).boxed(),
        ShapeKind::ETree => (-20i64..=20).prop_map(Term::tip).boxed(),
        ShapeKind::ITree => Just(Term::nilt()).boxed(),
        ShapeKind::HTree => (-20i64..=20).prop_map(Term::leaf).boxed(),
    };
    base.prop_recursive(depth, 40, 2, move |inner| match shape {
        ShapeKind::List => (-20i64..=20, inner).prop_map(|(a, t)| Term::cons(a, t)).boxed(),
        ShapeKind::ETree => (inner.clone(), inner).prop_map(|(t, u)| Term::bin(t, u)).boxed(),
        ShapeKind::ITree => (-20i64..=20, inner.clone(), inner)
            .prop_map(|(a, t, u)| Term::node(a, t, u))
            .boxed(),
        ShapeKind::HTree => (-20i64..=20, inner.clone(), inner)
            .prop_map(|(a, t, u)| Term::fork(a, t, u))
            .boxed(),
    })
    .boxed()
}

fn any_shape() -> impl Strategy<Value = ShapeKind> {
    prop::sample::select(ShapeKind::ALL.to_vec())
}

fn shaped_term() -> impl Strategy<Value = (ShapeKind, Term)> {
    any_shape().prop_flat_map(|s| (Just(s), term(s, 6)))
}

fn small_term() -> impl Strategy<Value = (ShapeKind, Term)> {
    any_shape().prop_flat_map(|s| (Just(s), term(s, 3)))
}

/// Printed form with `E` replaced by a byte below every printable one.
fn order_key(p: &Pruned) -> String {
    p.to_string().replace('E', "\0")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn printing_then_parsing_gives_the_term_back((shape, t) in shaped_term()) {
        let text = t.to_string();
        prop_assert_eq!(parse_term(&text, shape).unwrap(), t.clone());
        prop_assert_eq!(t.shape(), shape);
    }

    #[test]
    fn printing_is_injective_and_orders_terms((_, t) in small_term(), (_, u) in small_term()) {
        let (a, b) = (t.to_string(), u.to_string());
        prop_assert_eq!(a == b, t == u);
        prop_assert_eq!(t.cmp(&u), a.cmp(&b));
    }

    #[test]
    fn parsing_rejects_other_shapes((shape, t) in shaped_term(), other in any_shape()) {
        prop_assume!(other != shape);
        prop_assert!(parse_term(&t.to_string(), other).is_err());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn prunings_round_trip_and_follow_printed_order((shape, t) in small_term()) {
        let ps = prune(&t, CollectionKind::Bag).unwrap();
        let list: Vec<&Pruned> = ps.iter().collect();
        for w in list.windows(2) {
            prop_assert!(order_key(w[0]) < order_key(w[1]), "{} !< {}", w[0], w[1]);
        }
        for p in &list {
            prop_assert_eq!(&parse_pruned(&p.to_string(), shape).unwrap(), *p);
        }
        prop_assert_eq!(ps.iter().filter(|p| p.to_term().is_some()).count(), 1);
        prop_assert!(ps.contains(&Pruned::from_term(&t)));
    }

    #[test]
    fn mapping_labels_commutes_with_contents((_, t) in shaped_term(), k in -5i64..=5) {
        let g = |a: i64| a * 3 + k;
        let mapped = map_term(&g, &t);
        prop_assert_eq!(contents_term(&mapped), contents_term(&t).into_iter().map(g).collect::<Vec<_>>());
        prop_assert_eq!(mapped.size(), t.size());
        prop_assert_eq!(map_term(&|a| a, &t), t);
    }

    #[test]
    fn distributing_counts_multiply(
        kids in prop::collection::vec(prop::collection::vec(0i64..=5, 0..=4), 2),
        label in -3i64..=3,
    ) {
        for kind in [CollectionKind::List, CollectionKind::Bag] {
            let cs: Vec<Collection<i64>> = kids.iter().map(|v| Collection::from_elems(kind, v.clone())).collect();
            let n = Node::Fork(label, cs[0].clone(), cs[1].clone());
            let d = distribute_node(&n, kind).unwrap();
            prop_assert_eq!(d.len(), kids[0].len() * kids[1].len());
            prop_assert!(d.iter().all(|m| m.label() == Some(&label)));
        }
    }

    #[test]
    fn bimap_identity_and_composition(a in -9i64..=9, b in -9i64..=9, c in -9i64..=9) {
        let n: Node<i64, i64> = Node::NodeI(a, b, c);
        prop_assert_eq!(n.clone().bimap(|x| x, |x| x), n.clone());
        let f = |x: i64| x + 1;
        let g = |x: i64| x * 2;
        prop_assert_eq!(n.clone().bimap(|x| f(g(x)), |x| g(f(x))), n.clone().bimap(g, f).bimap(f, g));
    }
}

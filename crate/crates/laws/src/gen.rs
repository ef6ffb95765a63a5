//! Seeded generators for terms, nodes, collections and lists.

use std::ops::RangeInclusive;

use proptest::collection::vec;
use proptest::prelude::*;
use segsum::pruning::prune_count;
use segsum::{Collection, CollectionKind, Node, ShapeKind, Term};

/// Default label range for generated terms.
pub const LABELS: RangeInclusive<i64> = -8..=8;
/// Narrow label range that keeps `(+, *)` products small.
pub const SMALL_LABELS: RangeInclusive<i64> = -2..=2;
/// Default depth bound for generated terms.
pub const DEPTH: u32 = 6;

/// Terms of `shape` with depth at most `max_depth` and labels in `labels`.
pub fn term(shape: ShapeKind, max_depth: u32, labels: RangeInclusive<i64>) -> BoxedStrategy<Term> {
    let l = labels.clone();
    let base: BoxedStrategy<Term> = match shape {
        ShapeKind::List => Just(Term::nil()).boxed(),
        ShapeKind::ETree => l.prop_map(Term::tip).boxed(),
        ShapeKind::ITree => Just(Term::nilt()).boxed(),
        ShapeKind::HTree => l.prop_map(Term::leaf).boxed(),
    };
    base.prop_recursive(max_depth, 32, 2, move |inner| {
        let l = labels.clone();
        match shape {
            ShapeKind::List => (l, inner).prop_map(|(a, t)| Term::cons(a, t)).boxed(),
            ShapeKind::ETree => (inner.clone(), inner).prop_map(|(t, u)| Term::bin(t, u)).boxed(),
            ShapeKind::ITree => (l, inner.clone(), inner)
                .prop_map(|(a, t, u)| Term::node(a, t, u))
                .boxed(),
            ShapeKind::HTree => (l, inner.clone(), inner)
                .prop_map(|(a, t, u)| Term::fork(a, t, u))
                .boxed(),
        }
    })
    .boxed()
}

/// Terms whose bag of prunings has at most `limit` elements.
pub fn prunable_term(
    shape: ShapeKind,
    max_depth: u32,
    labels: RangeInclusive<i64>,
    limit: u128,
) -> BoxedStrategy<Term> {
    term(shape, max_depth, labels)
        .prop_filter("too many prunings", move |t| segs_count(t) <= limit)
        .boxed()
}

/// Total number of prunings over all subterms, the size of bag `segs`.
pub fn segs_count(t: &Term) -> u128 {
    let mut total = prune_count(t);
    let mut stack: Vec<&Term> = t.out().children();
    while let Some(s) = stack.pop() {
        total += prune_count(s);
        stack.extend(s.out().children());
    }
    total
}

/// One node of `shape` with an arbitrary constructor, built from the given
/// label and child strategies.
pub fn node<L, C>(shape: ShapeKind, label: L, child: C) -> BoxedStrategy<Node<L::Value, C::Value>>
where
    L: Strategy + Clone + 'static,
    C: Strategy + Clone + 'static,
    L::Value: Clone,
    C::Value: Clone,
{
    match shape {
        ShapeKind::List => prop_oneof![Just(Node::Nil), (label, child).prop_map(|(a, t)| Node::Cons(a, t)),].boxed(),
        ShapeKind::ETree => prop_oneof![
            label.prop_map(Node::Tip),
            (child.clone(), child).prop_map(|(t, u)| Node::Bin(t, u)),
        ]
        .boxed(),
        ShapeKind::ITree => prop_oneof![
            Just(Node::NilT),
            (label, child.clone(), child).prop_map(|(a, t, u)| Node::NodeI(a, t, u)),
        ]
        .boxed(),
        ShapeKind::HTree => prop_oneof![
            label.clone().prop_map(Node::Leaf),
            (label, child.clone(), child).prop_map(|(a, t, u)| Node::Fork(a, t, u)),
        ]
        .boxed(),
    }
}

/// Every constructor of `shape` with labels and children drawn from the
/// given finite domains.
pub fn all_nodes(shape: ShapeKind, labels: &[i64], children: &[i64]) -> Vec<Node<i64, i64>> {
    let mut out = Vec::new();
    match shape {
        ShapeKind::List => {
            out.push(Node::Nil);
            for &a in labels {
                for &t in children {
                    out.push(Node::Cons(a, t));
                }
            }
        }
        ShapeKind::ETree => {
            out.extend(labels.iter().map(|&a| Node::Tip(a)));
            for &t in children {
                for &u in children {
                    out.push(Node::Bin(t, u));
                }
            }
        }
        ShapeKind::ITree | ShapeKind::HTree => {
            if shape == ShapeKind::ITree {
                out.push(Node::NilT);
            } else {
                out.extend(labels.iter().map(|&a| Node::Leaf(a)));
            }
            for &a in labels {
                for &t in children {
                    for &u in children {
                        out.push(if shape == ShapeKind::ITree {
                            Node::NodeI(a, t, u)
                        } else {
                            Node::Fork(a, t, u)
                        });
                    }
                }
            }
        }
    }
    out
}

/// Collections of `kind` with at most `max_len` elements.
pub fn collection<S>(kind: CollectionKind, elem: S, max_len: usize) -> BoxedStrategy<Collection<S::Value>>
where
    S: Strategy + 'static,
    S::Value: Ord + Clone,
{
    vec(elem, 0..=max_len)
        .prop_map(move |v| Collection::from_elems(kind, v))
        .boxed()
}

/// Nonempty collections of `kind` with at most `max_len` elements.
pub fn nonempty_collection<S>(kind: CollectionKind, elem: S, max_len: usize) -> BoxedStrategy<Collection<S::Value>>
where
    S: Strategy + 'static,
    S::Value: Ord + Clone,
{
    vec(elem, 1..=max_len)
        .prop_map(move |v| Collection::from_elems(kind, v))
        .boxed()
}

/// Integer lists of length at most `max_len`.
pub fn list(labels: RangeInclusive<i64>, max_len: usize) -> BoxedStrategy<Vec<i64>> {
    vec(labels, 0..=max_len).boxed()
}

/// Every list over `domain` of length at most `max_len`, shortest first.
pub fn all_lists(domain: &[i64], max_len: usize) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|xs: &Vec<i64>| {
                domain.iter().map(move |&a| {
                    let mut ys = xs.clone();
                    ys.push(a);
                    ys
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

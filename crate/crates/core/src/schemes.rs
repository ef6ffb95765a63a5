//! Recursion schemes over [`Term`]s and the positional traversals built on
//! the fixed left-to-right order of element positions.

use thiserror::Error;

use crate::collections::{Collection, CollectionError, CollectionKind};
use crate::shapes::{Node, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SchemeError {
    #[error("unfold exceeded the depth bound {0}")]
    DepthExceeded(usize),
}

/// The catamorphism: replaces every constructor by the algebra.
pub fn fold<A>(alg: &impl Fn(Node<i64, A>) -> A, t: &Term) -> A {
    let node = t.out().as_ref().bimap(|a| *a, |c| fold(alg, c));
    alg(node)
}

/// [`fold`] for algebras that may fail; the first error aborts.
pub fn try_fold<A, E>(alg: &impl Fn(Node<i64, A>) -> Result<A, E>, t: &Term) -> Result<A, E> {
    let node = t.out().as_ref().try_bimap(|a| Ok(*a), |c| try_fold(alg, c))?;
    alg(node)
}

/// The paramorphism, as the fold of the tupled algebra that also rebuilds
/// each subterm. Every child slot sees its recursive result together with
/// the original child term.
pub fn para<A>(palg: &impl Fn(Node<i64, (A, Term)>) -> A, t: &Term) -> A {
    fold(
        &|n: Node<i64, (A, Term)>| {
            let original = Term::new(n.as_ref().bimap(|a| *a, |(_, s)| s.clone()));
            (palg(n), original)
        },
        t,
    )
    .0
}

pub fn try_para<A, E>(palg: &impl Fn(Node<i64, (A, Term)>) -> Result<A, E>, t: &Term) -> Result<A, E> {
    try_fold(
        &|n: Node<i64, (A, Term)>| {
            let original = Term::new(n.as_ref().bimap(|a| *a, |(_, s)| s.clone()));
            Ok((palg(n)?, original))
        },
        t,
    )
    .map(|(a, _)| a)
}

/// Unfolds `seed` with `coalg`, refusing to build nodes with children below
/// depth `max_depth` (depth counted in edges from the root).
pub fn unfold_bounded<S>(coalg: &impl Fn(S) -> Node<i64, S>, seed: S, max_depth: usize) -> Result<Term, SchemeError> {
    fn go<S>(
        coalg: &impl Fn(S) -> Node<i64, S>,
        seed: S,
        remaining: usize,
        max_depth: usize,
    ) -> Result<Term, SchemeError> {
        let node = coalg(seed);
        if node.arity() > 0 && remaining == 0 {
            return Err(SchemeError::DepthExceeded(max_depth));
        }
        node.try_map_children(|s| go(coalg, s, remaining - 1, max_depth))
            .map(Term::new)
    }
    go(coalg, seed, max_depth, max_depth)
}

/// Element positions of a diagonal node: label first, then children.
pub fn contents_node<T>(n: Node<T, T>) -> Vec<T> {
    n.contents()
}

/// All labels of a term in preorder.
pub fn contents_term(t: &Term) -> Vec<i64> {
    let mut out = Vec::new();
    let mut stack = vec![t];
    while let Some(t) = stack.pop() {
        let node = t.out();
        if let Some(a) = node.label() {
            out.push(*a);
        }
        stack.extend(node.children().into_iter().rev());
    }
    out
}

/// Relabels a term, written as the fold `fold (in . F (g, id))`.
pub fn map_term(g: &impl Fn(i64) -> i64, t: &Term) -> Term {
    fold(&|n: Node<i64, Term>| Term::new(n.map_label(g)), t)
}

/// Every way of choosing one element from each collection in `cols`, with
/// the last position varying fastest, paired with the product of the chosen
/// multiplicities.
fn odometer<'a, T: Ord>(cols: &[&'a Collection<T>]) -> Vec<(Vec<&'a T>, usize)> {
    let slots: Vec<Vec<(&T, usize)>> = cols.iter().map(|c| c.iter_counted().collect()).collect();
    if slots.iter().any(Vec::is_empty) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; slots.len()];
    loop {
        let choice = idx.iter().zip(&slots).map(|(&i, s)| s[i].0).collect();
        let mult = idx.iter().zip(&slots).map(|(&i, s)| s[i].1).product();
        out.push((choice, mult));
        let mut k = slots.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < slots[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// The distributive law of a shape over a collection monad, on child
/// positions: one choice per child, in positional order.
pub fn distribute_node<T: Ord + Clone>(
    n: &Node<i64, Collection<T>>,
    kind: CollectionKind,
) -> Result<Collection<Node<i64, T>>, CollectionError> {
    let children = n.children();
    for c in &children {
        if c.kind() != kind {
            return Err(CollectionError::KindMismatch {
                expected: kind,
                found: c.kind(),
            });
        }
    }
    let (skeleton, _) = n.as_ref().into_parts();
    let label = n.label().copied().unwrap_or_default();
    Ok(Collection::from_counted(
        kind,
        odometer(&children).into_iter().map(|(choice, m)| {
            let node = skeleton
                .clone()
                .map_label(|_| label)
                .fill(choice.into_iter().cloned().collect());
            (node, m)
        }),
    ))
}

/// The distributive law over every element position of a diagonal node,
/// label included. This is the traversal induced by `contents`.
pub fn distribute_both<T: Ord + Clone>(
    n: &Node<Collection<T>, Collection<T>>,
    kind: CollectionKind,
) -> Result<Collection<Node<T, T>>, CollectionError> {
    let cols = n.as_ref().contents();
    for c in &cols {
        if c.kind() != kind {
            return Err(CollectionError::KindMismatch {
                expected: kind,
                found: c.kind(),
            });
        }
    }
    Ok(Collection::from_counted(
        kind,
        odometer(&cols).into_iter().map(|(choice, m)| {
            let node = n
                .refill(choice.into_iter().cloned().collect())
                .expect("one choice per position");
            (node, m)
        }),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::parse_term;
    use crate::ShapeKind;
    use CollectionKind::*;

    fn ex7() -> Term {
        parse_term("(fork 1 (leaf 2) (fork 3 (leaf 1) (leaf 4)))", ShapeKind::HTree).unwrap()
    }

    fn sum_alg(n: Node<i64, i64>) -> i64 {
        n.contents().into_iter().sum()
    }

    #[test]
    fn fold_examples() {
        assert_eq!(fold(&sum_alg, &Term::from_labels(&[1, 2])), 3);
        assert_eq!(fold(&sum_alg, &Term::nil()), 0);
        assert_eq!(fold(&sum_alg, &ex7()), 11);
        assert_eq!(fold(&|n: Node<i64, usize>| 1 + n.arity(), &Term::nil()), 1);
    }

    #[test]
    fn unfold_examples() {
        let countdown = |n: i64| if n == 0 { Node::Nil } else { Node::Cons(n, n - 1) };
        assert_eq!(
            unfold_bounded(&countdown, 3, 3).unwrap().to_string(),
            "(cons 3 (cons 2 (cons 1 nil)))"
        );
        assert_eq!(unfold_bounded(&countdown, 3, 2), Err(SchemeError::DepthExceeded(2)));
        for d in [0, 1, 7] {
            assert_eq!(unfold_bounded(&|()| Node::Nil, (), d).unwrap(), Term::nil());
        }
        assert_eq!(
            unfold_bounded(&|()| Node::Cons(1, ()), (), 4),
            Err(SchemeError::DepthExceeded(4))
        );
    }

    #[test]
    fn para_sees_original_children() {
        let t = Term::from_labels(&[1, 2]);
        let seen = para(
            &|n: Node<i64, (Vec<String>, Term)>| match n {
                Node::Cons(_, (mut acc, s)) => {
                    acc.push(s.to_string());
                    acc
                }
                _ => vec![],
            },
            &t,
        );
        assert_eq!(seen, vec!["nil", "(cons 2 nil)"]);
        assert_eq!(
            para(&|n: Node<i64, (i64, Term)>| sum_alg(n.map_children(|c| c.0)), &ex7()),
            11
        );
    }

    #[test]
    fn contents_examples() {
        assert_eq!(contents_node::<i64>(Node::Nil), Vec::<i64>::new());
        assert_eq!(contents_node(Node::Cons(4, 7)), vec![4, 7]);
        assert_eq!(contents_node(Node::Fork(3, 1, 4)), vec![3, 1, 4]);
        assert_eq!(contents_term(&Term::nil()), Vec::<i64>::new());
        assert_eq!(contents_term(&Term::from_labels(&[4, -5])), vec![4, -5]);
        assert_eq!(contents_term(&ex7()), vec![1, 2, 3, 1, 4]);
    }

    #[test]
    fn map_term_relabels() {
        assert_eq!(
            map_term(&|a| a * 10, &ex7()).to_string(),
            "(fork 10 (leaf 20) (fork 30 (leaf 10) (leaf 40)))"
        );
    }

    #[test]
    fn distribute_examples() {
        let nil: Node<i64, Collection<i64>> = Node::Nil;
        assert_eq!(
            distribute_node(&nil, Bag).unwrap(),
            Collection::singleton(Bag, Node::Nil)
        );
        let t = Term::leaf(1);
        let u = Term::leaf(2);
        let n = Node::Cons(1, Collection::from_elems(Bag, [t.clone(), u.clone()]));
        assert_eq!(
            distribute_node(&n, Bag).unwrap(),
            Collection::from_elems(Bag, [Node::Cons(1, t), Node::Cons(1, u)])
        );
        let n: Node<i64, Collection<char>> = Node::Bin(
            Collection::from_elems(List, ['a']),
            Collection::from_elems(List, ['b', 'c']),
        );
        assert_eq!(
            distribute_node(&n, List).unwrap().to_vec(),
            vec![Node::Bin('a', 'b'), Node::Bin('a', 'c')]
        );
        let n: Node<i64, Collection<char>> = Node::Fork(0, Collection::empty(Bag), Collection::from_elems(Bag, ['x']));
        assert!(distribute_node(&n, Bag).unwrap().is_empty());
        assert!(distribute_node(&n, Set).is_err());
    }

    #[test]
    fn distribute_both_covers_labels() {
        let n = Node::Cons(
            Collection::from_elems(List, [1, 2]),
            Collection::from_elems(List, [7, 8, 9]),
        );
        let got = distribute_both(&n, List).unwrap();
        assert_eq!(got.len(), 6);
        assert_eq!(got.to_vec()[1], Node::Cons(1, 8));
        let bag = Node::Leaf(Collection::from_elems(Bag, [5, 5]));
        assert_eq!(distribute_both(&bag, Bag).unwrap().len(), 2);
    }
}

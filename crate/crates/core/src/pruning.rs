//! Pruned terms `mu (H a)` with `H a b = 1 + F a b`, the collection-valued
//! `prune` (generic `inits`) and generic `segs`.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::collections::{Collection, CollectionError, CollectionKind};
use crate::labelled::subterms;
use crate::schemes::{distribute_node, try_fold};
use crate::shapes::{expand_node, write_sexp, Node, ParseError, Parser, Piece, Sexp, ShapeKind, Term};

/// Default bound on the size of any intermediate collection of prunings.
pub const DEFAULT_GUARD: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum PruneError {
    #[error("collection of {size} prunings exceeds the guard of {limit}")]
    GuardExceeded { size: u128, limit: usize },
    #[error(transparent)]
    Collection(#[from] CollectionError),
}

/// A term in which any subterm may have been replaced by `E`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Pruned {
    Empty,
    Node(Arc<Node<i64, Pruned>>),
}

impl Pruned {
    pub fn node(n: Node<i64, Pruned>) -> Pruned {
        Pruned::Node(Arc::new(n))
    }

    /// The unpruned copy of a term.
    pub fn from_term(t: &Term) -> Pruned {
        Pruned::node(t.out().as_ref().bimap(|a| *a, Pruned::from_term))
    }

    /// The term, if nothing was pruned.
    pub fn to_term(&self) -> Option<Term> {
        match self {
            Pruned::Empty => None,
            Pruned::Node(n) => Some(Term::new(
                Node::as_ref(n).try_bimap(|a| Ok(*a), |c| c.to_term().ok_or(())).ok()?,
            )),
        }
    }

    /// Number of surviving (non-`E`) nodes.
    pub fn size(&self) -> usize {
        match self {
            Pruned::Empty => 0,
            Pruned::Node(n) => 1 + n.children().into_iter().map(Pruned::size).sum::<usize>(),
        }
    }

    /// Paths (child indices from the root) of the surviving nodes.
    pub fn positions(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut stack = vec![(self, Vec::new())];
        while let Some((p, path)) = stack.pop() {
            if let Pruned::Node(n) = p {
                for (i, c) in n.children().into_iter().enumerate() {
                    let mut q = path.clone();
                    q.push(i);
                    stack.push((c, q));
                }
                out.push(path);
            }
        }
        out.sort();
        out
    }
}

impl Sexp for Pruned {
    fn expand<'a>(&'a self, stack: &mut Vec<Piece<'a, Self>>) {
        match self {
            Pruned::Empty => stack.push(Piece::Empty),
            Pruned::Node(n) => expand_node(n, stack),
        }
    }

    fn layer(&self) -> Option<&Node<i64, Self>> {
        match self {
            Pruned::Empty => None,
            Pruned::Node(n) => Some(n),
        }
    }

    fn shares(&self, other: &Self) -> bool {
        match (self, other) {
            (Pruned::Node(a), Pruned::Node(b)) => Arc::ptr_eq(a, b),
            (Pruned::Empty, Pruned::Empty) => true,
            _ => false,
        }
    }
}

impl fmt::Display for Pruned {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sexp(self, f)
    }
}

impl fmt::Debug for Pruned {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sexp(self, f)
    }
}

impl PartialOrd for Pruned {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Pruned {
    fn cmp(&self, other: &Self) -> Ordering {
        crate::shapes::compare_sexp(self, other)
    }
}

/// Parses the term grammar extended with the atom `E`.
pub fn parse_pruned(text: &str, shape: ShapeKind) -> Result<Pruned, ParseError> {
    Parser::new(text, shape, true)?.parse_all(&Pruned::node, &|| Pruned::Empty)
}

/// Positional paths of every node of a term.
pub fn term_positions(t: &Term) -> Vec<Vec<usize>> {
    Pruned::from_term(t).positions()
}

/// `fold_H (maybe b f)`: `E` becomes `b`, nodes are evaluated by `alg`.
pub fn pruned_fold<A: Clone>(b: &A, alg: &impl Fn(Node<i64, A>) -> A, p: &Pruned) -> A {
    match p {
        Pruned::Empty => b.clone(),
        Pruned::Node(n) => alg(Node::as_ref(n).bimap(|a| *a, |c| pruned_fold(b, alg, c))),
    }
}

pub fn try_pruned_fold<A: Clone, E>(b: &A, alg: &impl Fn(Node<i64, A>) -> Result<A, E>, p: &Pruned) -> Result<A, E> {
    match p {
        Pruned::Empty => Ok(b.clone()),
        Pruned::Node(n) => alg(Node::as_ref(n).try_bimap(|a| Ok(*a), |c| try_pruned_fold(b, alg, c))?),
    }
}

fn guard_check(size: u128, limit: usize) -> Result<(), PruneError> {
    if size > limit as u128 {
        Err(PruneError::GuardExceeded { size, limit })
    } else {
        Ok(())
    }
}

/// All prunings of `t`: the fold whose algebra distributes the node over the
/// children's prunings, wraps each result as a node, and adds `E`.
pub fn prune(t: &Term, kind: CollectionKind) -> Result<Collection<Pruned>, PruneError> {
    prune_with_guard(t, kind, DEFAULT_GUARD)
}

pub fn prune_with_guard(t: &Term, kind: CollectionKind, guard: usize) -> Result<Collection<Pruned>, PruneError> {
    try_fold(
        &|n: Node<i64, Collection<Pruned>>| {
            let size = n
                .children()
                .into_iter()
                .fold(1u128, |acc, c| acc.saturating_mul(c.len() as u128))
                + 1;
            guard_check(size, guard)?;
            let nodes = distribute_node(&n, kind)?.map(|m| Pruned::node(m.clone()));
            Ok(Collection::opt(Pruned::Empty, &nodes))
        },
        t,
    )
}

/// Number of prunings in the bag (or list) monad, without enumerating them.
pub fn prune_count(t: &Term) -> u128 {
    crate::schemes::fold(
        &|n: Node<i64, u128>| {
            n.children()
                .into_iter()
                .fold(1u128, |acc, c| acc.saturating_mul(*c))
                .saturating_add(1)
        },
        t,
    )
}

/// Generic segments: `join . M prune . contents_L . subterms`.
pub fn segs_generic(t: &Term, kind: CollectionKind) -> Result<Collection<Pruned>, PruneError> {
    segs_generic_with_guard(t, kind, DEFAULT_GUARD)
}

pub fn segs_generic_with_guard(t: &Term, kind: CollectionKind, guard: usize) -> Result<Collection<Pruned>, PruneError> {
    let subs = Collection::from_elems(kind, subterms(t).values().into_iter().cloned());
    let mut total: u128 = 0;
    subs.try_bind(|s| {
        let p = prune_with_guard(s, kind, guard)?;
        total += p.len() as u128;
        guard_check(total, guard)?;
        Ok(p)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::parse_term;
    use CollectionKind::*;

    fn ex7() -> Term {
        parse_term("(fork 1 (leaf 2) (fork 3 (leaf 1) (leaf 4)))", ShapeKind::HTree).unwrap()
    }

    fn sum_alg(n: Node<i64, i64>) -> i64 {
        n.contents().into_iter().sum()
    }

    #[test]
    fn prune_leaf() {
        let p = prune(&Term::leaf(2), Bag).unwrap();
        assert_eq!(p.to_string(), "<E,(leaf 2)>");
    }

    #[test]
    fn prune_ex7() {
        let p = prune(&ex7(), Bag).unwrap();
        assert_eq!(p.len(), 11);
        assert_eq!(prune_count(&ex7()), 11);
        let sub = parse_term("(fork 3 (leaf 1) (leaf 4))", ShapeKind::HTree).unwrap();
        assert_eq!(prune(&sub, Bag).unwrap().len(), 5);
        for q in p.iter() {
            assert_eq!(parse_pruned(&q.to_string(), ShapeKind::HTree).unwrap(), *q);
        }
    }

    #[test]
    fn prune_lists() {
        for n in 0..6 {
            let labels: Vec<i64> = (0..n).collect();
            assert_eq!(prune(&Term::from_labels(&labels), Bag).unwrap().len(), n as usize + 2);
        }
        let p = prune(&Term::from_labels(&[1, 2]), List).unwrap();
        assert_eq!(
            p.to_string(),
            "[E,(cons 1 E),(cons 1 (cons 2 E)),(cons 1 (cons 2 nil))]"
        );
    }

    #[test]
    fn pruned_fold_examples() {
        assert_eq!(pruned_fold(&0, &sum_alg, &Pruned::Empty), 0);
        assert_eq!(pruned_fold(&0, &sum_alg, &Pruned::from_term(&ex7())), 11);
        let p = parse_pruned("(fork 1 (leaf 2) E)", ShapeKind::HTree).unwrap();
        assert_eq!(pruned_fold(&0, &sum_alg, &p), 3);
        assert_eq!(p.size(), 2);
        assert_eq!(p.positions(), vec![vec![], vec![0]]);
    }

    #[test]
    fn segs_examples() {
        assert_eq!(segs_generic(&Term::leaf(7), Bag).unwrap().to_string(), "<E,(leaf 7)>");
        assert_eq!(segs_generic(&ex7(), Bag).unwrap().len(), 22);
    }

    #[test]
    fn guard_trips() {
        assert_eq!(
            prune_with_guard(&ex7(), Bag, 4),
            Err(PruneError::GuardExceeded { size: 5, limit: 4 })
        );
        assert!(segs_generic_with_guard(&ex7(), Bag, 12).is_err());
    }

    #[test]
    fn pruned_order_is_printed_order() {
        let a = parse_pruned("(leaf 2)", ShapeKind::HTree).unwrap();
        assert!(Pruned::Empty < a);
        assert_eq!(parse_pruned("E", ShapeKind::List).unwrap(), Pruned::Empty);
        assert!(parse_pruned("(cons E nil)", ShapeKind::List).is_err());
        assert_eq!(Pruned::from_term(&ex7()).to_term(), Some(ex7()));
    }
}

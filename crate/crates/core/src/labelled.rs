//! The labelled variant `mu (G a)` with `G a b = a * F 1 b`: every node
//! carries exactly one value. `subterms` is the generic `tails`, and
//! [`scan_generic`] computes `L (fold f) . subterms` in a single pass.

use crate::schemes::{fold, para, try_fold};
use crate::shapes::{Node, ShapeKind, Term};

/// A value at every node over a unit-labelled skeleton of the source shape.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Labelled<V> {
    pub value: V,
    pub skeleton: Box<Node<(), Labelled<V>>>,
}

impl<V> Labelled<V> {
    pub fn new(value: V, skeleton: Node<(), Labelled<V>>) -> Self {
        Labelled {
            value,
            skeleton: Box::new(skeleton),
        }
    }

    /// The value at the root node.
    pub fn root(&self) -> &V {
        &self.value
    }

    pub fn shape(&self) -> ShapeKind {
        self.skeleton.shape()
    }

    pub fn map<U>(&self, f: &impl Fn(&V) -> U) -> Labelled<U> {
        Labelled::new(
            f(&self.value),
            self.skeleton.as_ref().as_ref().bimap(|_| (), |c| c.map(f)),
        )
    }

    pub fn try_map<U, E>(&self, f: &impl Fn(&V) -> Result<U, E>) -> Result<Labelled<U>, E> {
        Ok(Labelled::new(
            f(&self.value)?,
            self.skeleton
                .as_ref()
                .as_ref()
                .try_bimap(|_| Ok(()), |c| c.try_map(f))?,
        ))
    }

    /// `contents_L`: all values in preorder.
    pub fn values(&self) -> Vec<&V> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(l) = stack.pop() {
            out.push(&l.value);
            stack.extend(l.skeleton.children().into_iter().rev());
        }
        out
    }

    /// Number of nodes, which is also the number of values.
    pub fn size(&self) -> usize {
        self.values().len()
    }

    /// The constructor tags in preorder.
    pub fn tags(&self) -> Vec<Node<(), ()>> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(l) = stack.pop() {
            out.push(l.skeleton.as_ref().as_ref().bimap(|_| (), |_| ()));
            stack.extend(l.skeleton.children().into_iter().rev());
        }
        out
    }
}

impl Labelled<i64> {
    /// For a labelled variant of one of the tree shapes, the isomorphic
    /// leaf-and-fork tree. Lists have no such image and give `None`.
    pub fn to_htree(&self) -> Option<Term> {
        let kids = self
            .skeleton
            .children()
            .into_iter()
            .map(Labelled::to_htree)
            .collect::<Option<Vec<_>>>()?;
        match (self.shape(), kids.as_slice()) {
            (ShapeKind::List, _) => None,
            (_, []) => Some(Term::leaf(self.value)),
            (_, [l, r]) => Some(Term::fork(self.value, l.clone(), r.clone())),
            _ => None,
        }
    }
}

/// The constructor tags of a term in preorder.
pub fn term_tags(t: &Term) -> Vec<Node<(), ()>> {
    let mut out = Vec::new();
    let mut stack = vec![t];
    while let Some(t) = stack.pop() {
        out.push(t.out().as_ref().bimap(|_| (), |_| ()));
        stack.extend(t.out().children().into_iter().rev());
    }
    out
}

fn strip<V>(n: Node<i64, Labelled<V>>) -> Node<(), Labelled<V>> {
    n.map_label(|_| ())
}

/// Labels every node with the subterm rooted there, as a fold that rebuilds
/// each subterm from the roots of the labelled children.
pub fn subterms(t: &Term) -> Labelled<Term> {
    fold(
        &|n: Node<i64, Labelled<Term>>| {
            let here = Term::new(n.as_ref().bimap(|a| *a, |l| l.root().clone()));
            Labelled::new(here, strip(n))
        },
        t,
    )
}

/// [`subterms`] as a paramorphism, which is handed the original subterms
/// instead of reconstructing them.
pub fn subterms_para(t: &Term) -> Labelled<Term> {
    para(
        &|n: Node<i64, (Labelled<Term>, Term)>| {
            let here = Term::new(n.as_ref().bimap(|a| *a, |(_, s)| s.clone()));
            Labelled::new(here, n.bimap(|_| (), |(l, _)| l))
        },
        t,
    )
}

/// The generic scan: each node holds the fold of the subterm rooted there.
pub fn scan_generic<A: Clone>(alg: &impl Fn(Node<i64, A>) -> A, t: &Term) -> Labelled<A> {
    fold(
        &|n: Node<i64, Labelled<A>>| {
            let here = alg(n.as_ref().bimap(|a| *a, |l| l.root().clone()));
            Labelled::new(here, strip(n))
        },
        t,
    )
}

pub fn try_scan_generic<A: Clone, E>(alg: &impl Fn(Node<i64, A>) -> Result<A, E>, t: &Term) -> Result<Labelled<A>, E> {
    try_fold(
        &|n: Node<i64, Labelled<A>>| {
            let here = alg(n.as_ref().bimap(|a| *a, |l| l.root().clone()))?;
            Ok(Labelled::new(here, strip(n)))
        },
        t,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::parse_term;

    fn sum_alg(n: Node<i64, i64>) -> i64 {
        n.contents().into_iter().sum()
    }

    fn ex7() -> Term {
        parse_term("(fork 1 (leaf 2) (fork 3 (leaf 1) (leaf 4)))", ShapeKind::HTree).unwrap()
    }

    #[test]
    fn subterms_of_lists_are_tails() {
        let t = Term::from_labels(&[1, 2, 3]);
        let s = subterms(&t);
        assert_eq!(s.size(), 4);
        assert_eq!(s.root(), &t);
        let printed: Vec<String> = s.values().iter().map(|v| v.to_string()).collect();
        assert_eq!(
            printed,
            [
                "(cons 1 (cons 2 (cons 3 nil)))",
                "(cons 2 (cons 3 nil))",
                "(cons 3 nil)",
                "nil"
            ]
        );
        assert_eq!(subterms(&Term::nil()).values(), vec![&Term::nil()]);
    }

    #[test]
    fn subterms_of_ex7() {
        let s = subterms(&ex7());
        let printed: Vec<String> = s.values().iter().map(|v| v.to_string()).collect();
        assert_eq!(
            printed,
            [
                "(fork 1 (leaf 2) (fork 3 (leaf 1) (leaf 4)))",
                "(leaf 2)",
                "(fork 3 (leaf 1) (leaf 4))",
                "(leaf 1)",
                "(leaf 4)",
            ]
        );
        assert_eq!(subterms_para(&ex7()), s);
        assert_eq!(s.tags(), term_tags(&ex7()));
    }

    #[test]
    fn scan_examples() {
        let l = scan_generic(&sum_alg, &Term::from_labels(&[4, -5]));
        assert_eq!(l.values(), vec![&-1, &-5, &0]);
        let single = scan_generic(&sum_alg, &Term::leaf(9));
        assert_eq!(single.values(), vec![&9]);
        let t = ex7();
        assert_eq!(*scan_generic(&sum_alg, &t).root(), fold(&sum_alg, &t));
        assert_eq!(scan_generic(&sum_alg, &t), subterms(&t).map(&|s| fold(&sum_alg, s)));
    }

    #[test]
    fn tree_shapes_map_to_htree() {
        let t = parse_term("(bin (tip 1) (bin (tip 2) (tip 3)))", ShapeKind::ETree).unwrap();
        let h = scan_generic(&sum_alg, &t).to_htree().unwrap();
        assert_eq!(h.to_string(), "(fork 6 (leaf 1) (fork 5 (leaf 2) (leaf 3)))");
        assert!(scan_generic(&sum_alg, &Term::nil()).to_htree().is_none());
    }
}

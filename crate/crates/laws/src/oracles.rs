//! Independent reference implementations the laws compare against. None of
//! them goes through the recursion schemes they check.

use segsum::horner::segs_list;
use segsum::pruning::Pruned;
use segsum::{ArithError, Collection, CollectionKind, Labelled, Node, Term};

/// `subterms` as an unfold: each seed becomes its own label, and its
/// children become the seeds of the next layer.
pub fn subterms_unfold(t: &Term) -> Labelled<Term> {
    Labelled::new(t.clone(), t.out().as_ref().bimap(|_| (), subterms_unfold))
}

/// Every subterm by explicit preorder enumeration.
pub fn enumerate_subterms(t: &Term) -> Vec<Term> {
    let mut out = vec![t.clone()];
    for c in t.out().children() {
        out.extend(enumerate_subterms(c));
    }
    out
}

/// Prunings by the per-constructor recursive characterisation: `E`, plus the
/// node rebuilt from every combination of child prunings.
pub fn prune_recursive(t: &Term, kind: CollectionKind) -> Collection<Pruned> {
    let mut out = vec![Pruned::Empty];
    match t.out() {
        Node::Nil | Node::NilT | Node::Tip(_) | Node::Leaf(_) => {
            out.push(Pruned::from_term(t));
        }
        Node::Cons(a, s) => {
            for p in prune_recursive(s, kind).iter() {
                out.push(Pruned::node(Node::Cons(*a, p.clone())));
            }
        }
        Node::Bin(s, u) | Node::NodeI(_, s, u) | Node::Fork(_, s, u) => {
            let ps = prune_recursive(s, kind);
            let pu = prune_recursive(u, kind);
            for p in ps.iter() {
                for q in pu.iter() {
                    let (p, q) = (p.clone(), q.clone());
                    out.push(Pruned::node(match t.out() {
                        Node::Bin(..) => Node::Bin(p, q),
                        Node::NodeI(a, ..) => Node::NodeI(*a, p, q),
                        Node::Fork(a, ..) => Node::Fork(*a, p, q),
                        _ => unreachable!(),
                    }));
                }
            }
        }
    }
    Collection::from_elems(kind, out)
}

/// The size recurrence: 2 for a leaf or empty constructor, one more than
/// the product of the child counts otherwise.
pub fn prune_count_recurrence(t: &Term) -> u128 {
    match t.out() {
        Node::Nil | Node::NilT | Node::Tip(_) | Node::Leaf(_) => 2,
        Node::Cons(_, s) => 1 + prune_count_recurrence(s),
        Node::Bin(s, u) | Node::NodeI(_, s, u) | Node::Fork(_, s, u) => {
            1 + prune_count_recurrence(s) * prune_count_recurrence(u)
        }
    }
}

/// Maximum segment sum by brute force over the materialised segments.
pub fn mss_brute(xs: &[i64]) -> i64 {
    segs_list(xs)
        .iter()
        .map(|s| s.iter().sum::<i64>())
        .max()
        .expect("segs is never empty")
}

/// Maximum of the running prefix sums, starting from 0.
pub fn max_prefix_oracle(xs: &[i64]) -> i64 {
    let mut run = 0i64;
    let mut best = 0i64;
    for &a in xs {
        run += a;
        best = best.max(run);
    }
    best
}

/// `sum a_i x^i` by direct powering.
pub fn poly_direct(coeffs: &[i64], x: i64) -> Result<i64, ArithError> {
    coeffs.iter().enumerate().try_fold(0i64, |acc, (i, &a)| {
        let p = x.checked_pow(i as u32).ok_or(ArithError::Overflow)?;
        let term = a.checked_mul(p).ok_or(ArithError::Overflow)?;
        acc.checked_add(term).ok_or(ArithError::Overflow)
    })
}

/// Preorder labels by explicit recursion.
pub fn labels_preorder(t: &Term) -> Vec<i64> {
    let mut out: Vec<i64> = t.out().label().copied().into_iter().collect();
    for c in t.out().children() {
        out.extend(labels_preorder(c));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use segsum::shapes::parse_term;
    use segsum::ShapeKind;

    #[test]
    fn ex7_oracle_counts() {
        let t = parse_term("(fork 1 (leaf 2) (fork 3 (leaf 1) (leaf 4)))", ShapeKind::HTree).unwrap();
        assert_eq!(prune_recursive(&t, CollectionKind::Bag).len(), 11);
        assert_eq!(prune_count_recurrence(&t), 11);
        assert_eq!(enumerate_subterms(&t).len(), 5);
        assert_eq!(labels_preorder(&t), vec![1, 2, 3, 1, 4]);
    }

    #[test]
    fn list_oracles() {
        let ex3 = [4, -5, 6, -3, 2, 0, -4, 5, -6, 5];
        assert_eq!(mss_brute(&ex3), 6);
        assert_eq!(max_prefix_oracle(&ex3), 5);
        assert_eq!(poly_direct(&[1, 2, 3], 2), Ok(17));
    }
}

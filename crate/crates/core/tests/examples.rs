use segsum::horner::{
    horner_generic, horner_list, max_prefix_sum, mss_generic, mss_linear, mss_quadratic, mss_spec, poly_horner,
    HornerError, MssOptions, Via,
};
use segsum::pruning::{parse_pruned, prune, prune_count, segs_generic};
use segsum::shapes::parse_term;
use segsum::{ArithError, CollectionKind, Semiring, ShapeKind, Term};

const LIST: [i64; 10] = [4, -5, 6, -3, 2, 0, -4, 5, -6, 5];

fn fork_tree() -> Term {
    parse_term("(fork 1 (leaf 2) (fork 3 (leaf 1) (leaf 4)))", ShapeKind::HTree).unwrap()
}

#[test]
fn list_algorithms_on_a_fixed_list() {
    assert_eq!(mss_spec(&LIST), Ok(6));
    assert_eq!(mss_quadratic(&LIST), Ok(6));
    assert_eq!(mss_linear(&LIST), Ok(6));
    assert_eq!(max_prefix_sum(&LIST), Ok(5));
    assert_eq!(horner_list(Semiring::MaxPlus, &LIST), Ok(5));
    assert_eq!(mss_linear(&[]), Ok(0));
    assert_eq!(mss_linear(&[-3, -1]), Ok(0));
}

#[test]
fn polynomial_by_nested_multiplication() {
    assert_eq!(poly_horner(&[1, 2, 3], 2), Ok(17));
    assert_eq!(poly_horner(&[], 5), Ok(0));
    assert_eq!(poly_horner(&[0, 0, 1], i64::MAX), Err(ArithError::Overflow));
}

#[test]
fn prunings_of_the_fork_tree_in_canonical_order() {
    let expected = "<E,(fork 1 E E),(fork 1 E (fork 3 E E)),(fork 1 E (fork 3 E (leaf 4))),\
(fork 1 E (fork 3 (leaf 1) E)),(fork 1 E (fork 3 (leaf 1) (leaf 4))),(fork 1 (leaf 2) E),\
(fork 1 (leaf 2) (fork 3 E E)),(fork 1 (leaf 2) (fork 3 E (leaf 4))),\
(fork 1 (leaf 2) (fork 3 (leaf 1) E)),(fork 1 (leaf 2) (fork 3 (leaf 1) (leaf 4)))>";
    let t = fork_tree();
    let p = prune(&t, CollectionKind::Bag).unwrap();
    assert_eq!(p.to_string(), expected);
    assert_eq!(p.len(), 11);
    assert_eq!(prune_count(&t), 11);
    for q in p.iter() {
        assert_eq!(&parse_pruned(&q.to_string(), ShapeKind::HTree).unwrap(), q);
    }
}

#[test]
fn segments_of_a_two_element_list() {
    let t = Term::from_labels(&[1, 2]);
    assert_eq!(
        segs_generic(&t, CollectionKind::Bag).unwrap().to_string(),
        "<E,E,E,(cons 1 E),(cons 1 (cons 2 E)),(cons 1 (cons 2 nil)),(cons 2 E),(cons 2 nil),nil>"
    );
    assert_eq!(
        segs_generic(&t, CollectionKind::Set).unwrap().to_string(),
        "{E,(cons 1 E),(cons 1 (cons 2 E)),(cons 1 (cons 2 nil)),(cons 2 E),(cons 2 nil),nil}"
    );
}

#[test]
fn generic_segment_problems_on_the_fork_tree() {
    let t = fork_tree();
    let opts = MssOptions::default();
    for via in [Via::Scan, Via::Brute] {
        assert_eq!(mss_generic(Semiring::MaxPlus, 0, &t, via, opts), Ok(11));
        assert_eq!(mss_generic(Semiring::MinPlus, 0, &t, via, opts), Ok(0));
        assert_eq!(mss_generic(Semiring::PlusTimes, 1, &t, via, opts), Ok(135));
        assert_eq!(
            mss_generic(Semiring::BoolOrAnd, 1, &t, via, opts),
            Err(HornerError::Arith(ArithError::Domain(2)))
        );
    }
    assert_eq!(horner_generic(Semiring::MaxPlus, 0, &t), Ok(11));
    assert_eq!(
        mss_generic(Semiring::MaxPlus, 0, &Term::leaf(-7), Via::Scan, opts),
        Ok(0)
    );
}

#[test]
fn sets_refuse_a_non_idempotent_addition() {
    let set = MssOptions {
        kind: CollectionKind::Set,
        ..MssOptions::default()
    };
    assert_eq!(
        mss_generic(Semiring::PlusTimes, 1, &fork_tree(), Via::Scan, set),
        Err(HornerError::DistributivityViolation {
            semiring: Semiring::PlusTimes,
            kind: CollectionKind::Set
        })
    );
    assert_eq!(mss_generic(Semiring::MaxPlus, 0, &fork_tree(), Via::Brute, set), Ok(11));
}

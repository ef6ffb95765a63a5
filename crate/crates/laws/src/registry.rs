//! The law table and the bodies of the laws.

use std::ops::RangeInclusive;

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;
use segsum::collections::{cp, dist_list, dist_list_lift2, ReduceError};
use segsum::horner::{
    foldr_list, generic_product_alg, horner_by_pruning, horner_generic, horner_list, horner_list_spec, inits_list,
    max_prefix_sum, mss_generic, mss_linear, mss_quadratic, mss_spec, poly_horner, scanr_list, segs_list, tails_list,
    HornerError, MssOptions, Via,
};
use segsum::labelled::{scan_generic, subterms, subterms_para, term_tags};
use segsum::pruning::{
    parse_pruned, prune, prune_count, pruned_fold, segs_generic, term_positions, PruneError, DEFAULT_GUARD,
};
use segsum::schemes::{
    contents_node, contents_term, distribute_both, distribute_node, fold, map_term, para, unfold_bounded, SchemeError,
};
use segsum::shapes::parse_term;
use segsum::{ArithError, Collection, CollectionKind, Node, ReduceOp, Semiring, ShapeKind, Term};

use crate::engine::{fail, Checked, Ctx, Expectation};
use crate::gen::{self, DEPTH, LABELS, SMALL_LABELS};
use crate::oracles;
use crate::Law;

use CollectionKind::{Bag, List, Set};

const SHAPES: [ShapeKind; 4] = ShapeKind::ALL;
const KINDS: [CollectionKind; 3] = CollectionKind::ALL;

/// Bound on bag `segs` sizes for generated terms in the pruning laws.
const PRUNE_LIMIT: u128 = 20_000;

// ---------------------------------------------------------------------------
// Helpers

/// Errors that stand for arithmetic overflow, which rejects a case rather
/// than failing it.
trait Overflowing: std::fmt::Display {
    fn is_overflow(&self) -> bool;
}

impl Overflowing for ArithError {
    fn is_overflow(&self) -> bool {
        *self == ArithError::Overflow
    }
}

impl Overflowing for ReduceError {
    fn is_overflow(&self) -> bool {
        *self == ReduceError::Arith(ArithError::Overflow)
    }
}

impl Overflowing for HornerError {
    fn is_overflow(&self) -> bool {
        *self == HornerError::Arith(ArithError::Overflow)
    }
}

impl Overflowing for PruneError {
    fn is_overflow(&self) -> bool {
        false
    }
}

fn ok<T, E: Overflowing>(r: Result<T, E>) -> Result<T, TestCaseError> {
    r.map_err(|e| {
        if e.is_overflow() {
            TestCaseError::reject("overflow")
        } else {
            fail(e.to_string())
        }
    })
}

fn sum_alg(n: Node<i64, i64>) -> i64 {
    n.contents().into_iter().fold(0, i64::wrapping_add)
}

/// A family of algebras: a tag-dependent constant plus weighted label and
/// children, in wrapping arithmetic.
#[derive(Clone, Copy, Debug)]
struct Affine {
    base: i64,
    label: i64,
    left: i64,
    right: i64,
}

fn affine() -> impl Strategy<Value = Affine> + Clone {
    (-3i64..=3, -3i64..=3, -3i64..=3, -3i64..=3).prop_map(|(base, label, left, right)| Affine {
        base,
        label,
        left,
        right,
    })
}

fn tag_index<L, C>(n: &Node<L, C>) -> i64 {
    match n {
        Node::Nil | Node::Tip(_) | Node::NilT | Node::Leaf(_) => 1,
        _ => 2,
    }
}

impl Affine {
    fn apply(self, n: Node<i64, i64>) -> i64 {
        let kids = n.children();
        let l = *n.label().unwrap_or(&0);
        let c = |i: usize| kids.get(i).map_or(0, |v| **v);
        self.base
            .wrapping_mul(tag_index(&n))
            .wrapping_add(self.label.wrapping_mul(l))
            .wrapping_add(self.left.wrapping_mul(c(0)))
            .wrapping_add(self.right.wrapping_mul(c(1)))
    }
}

/// `fold` by explicit recursion over the constructors, for comparison.
fn affine_direct(c: Affine, t: &Term) -> i64 {
    let n = match t.out() {
        Node::Nil => Node::Nil,
        Node::NilT => Node::NilT,
        Node::Tip(a) => Node::Tip(*a),
        Node::Leaf(a) => Node::Leaf(*a),
        Node::Cons(a, s) => Node::Cons(*a, affine_direct(c, s)),
        Node::Bin(s, u) => Node::Bin(affine_direct(c, s), affine_direct(c, u)),
        Node::NodeI(a, s, u) => Node::NodeI(*a, affine_direct(c, s), affine_direct(c, u)),
        Node::Fork(a, s, u) => Node::Fork(*a, affine_direct(c, s), affine_direct(c, u)),
    };
    c.apply(n)
}

/// Labels for a semiring's generators: small for `(+, *)`, booleans for
/// `(or, and)`.
fn labels_for(s: Semiring) -> RangeInclusive<i64> {
    match s {
        Semiring::MaxPlus | Semiring::MinPlus => LABELS,
        Semiring::PlusTimes => SMALL_LABELS,
        Semiring::BoolOrAnd => 0..=1,
    }
}

/// Pairs for which the semiring's addition is a valid reduction over the
/// collection kind.
fn gated_pairs() -> Vec<(CollectionKind, Semiring)> {
    KINDS
        .iter()
        .flat_map(|&k| Semiring::ALL.iter().map(move |&s| (k, s)))
        .filter(|(k, s)| s.compatible_with(*k))
        .collect()
}

fn first_op() -> ReduceOp {
    ReduceOp::new("first", |a, b| Ok(if a != 0 { a } else { b }), 0)
}

/// Reductions that are valid for each kind.
fn reduce_ops(kind: CollectionKind) -> Vec<ReduceOp> {
    match kind {
        List => vec![ReduceOp::sum(), ReduceOp::max(), ReduceOp::min(), first_op()],
        Bag => vec![ReduceOp::sum(), ReduceOp::max(), ReduceOp::min()],
        Set => vec![ReduceOp::max(), ReduceOp::min()],
    }
}

fn small_ints() -> RangeInclusive<i64> {
    -4..=4
}

// ---------------------------------------------------------------------------
// Shapes

fn print_parse_roundtrip(ctx: &mut Ctx) -> Checked {
    let cases = ctx.trials().max(1000);
    for shape in SHAPES {
        ctx.check_n(shape.name(), cases, gen::term(shape, DEPTH, LABELS), |t| {
            let printed = t.to_string();
            let back = parse_term(&printed, shape).map_err(|e| fail(e.to_string()))?;
            prop_assert_eq!(&back, t);
            Ok(())
        })?;
        let pruned = (
            gen::prunable_term(shape, 4, LABELS, 2_000),
            any::<prop::sample::Index>(),
        );
        ctx.check(&format!("{shape} pruned"), pruned, |(t, i)| {
            let ps = ok(prune(t, Bag))?.to_vec();
            let p = &ps[i.index(ps.len())];
            let back = parse_pruned(&p.to_string(), shape).map_err(|e| fail(e.to_string()))?;
            prop_assert_eq!(&back, p);
            Ok(())
        })?;
    }
    Ok(())
}

fn print_injective(ctx: &mut Ctx) -> Checked {
    for shape in SHAPES {
        let pair = (gen::term(shape, 4, -2..=2), gen::term(shape, 4, -2..=2));
        ctx.check(shape.name(), pair, |(t, u)| {
            let (pt, pu) = (t.to_string(), u.to_string());
            prop_assert_eq!(t == u, pt == pu);
            prop_assert_eq!(t.cmp(u), pt.cmp(&pu));
            Ok(())
        })?;
    }
    Ok(())
}

fn bimap_functor_laws(ctx: &mut Ctx) -> Checked {
    for shape in SHAPES {
        let strat = (gen::node(shape, LABELS, LABELS), affine(), affine());
        ctx.check(shape.name(), strat, |(n, f, g)| {
            prop_assert_eq!(n.clone().bimap(|a| a, |c| c), n.clone());
            let f1 = |a: i64| a.wrapping_mul(f.label).wrapping_add(f.base);
            let f2 = |a: i64| a.wrapping_mul(g.label).wrapping_add(g.base);
            let g1 = |c: i64| c.wrapping_mul(f.left).wrapping_add(f.right);
            let g2 = |c: i64| c.wrapping_mul(g.left).wrapping_add(g.right);
            let composed = n.clone().bimap(|a| f1(f2(a)), |c| g1(g2(c)));
            let stepwise = n.clone().bimap(f2, g2).bimap(f1, g1);
            prop_assert_eq!(composed, stepwise);
            Ok(())
        })?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Schemes

fn fold_universal(ctx: &mut Ctx) -> Checked {
    for shape in SHAPES {
        ctx.check(shape.name(), (gen::term(shape, DEPTH, LABELS), affine()), |(t, c)| {
            let alg = |n| c.apply(n);
            let lhs = fold(&alg, t);
            let rhs = alg(t.out().as_ref().bimap(|a| *a, |s| fold(&alg, s)));
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(lhs, affine_direct(*c, t));
            Ok(())
        })?;
    }
    Ok(())
}

fn fold_universal_base(ctx: &mut Ctx) -> Checked {
    let bases = [
        Term::nil(),
        Term::nilt(),
        Term::tip(-3),
        Term::tip(4),
        Term::leaf(0),
        Term::leaf(7),
    ];
    ctx.exhaustive("base constructors", bases, |t| {
        for c in [
            Affine {
                base: 2,
                label: 3,
                left: 0,
                right: 0,
            },
            Affine {
                base: -1,
                label: 1,
                left: 5,
                right: 7,
            },
        ] {
            let alg = |n| c.apply(n);
            prop_assert_eq!(fold(&alg, t), alg(t.out().as_ref().bimap(|a| *a, |_| 0)));
        }
        prop_assert_eq!(fold(&sum_alg, t), t.out().label().copied().unwrap_or(0));
        Ok(())
    })
}

/// `(h, f, g)` triples for fold fusion.
#[derive(Clone, Copy, Debug)]
enum Fusion {
    Mod7,
    Double,
}

impl Fusion {
    fn h(self, x: i64) -> i64 {
        match self {
            Fusion::Mod7 => x.rem_euclid(7),
            Fusion::Double => x.wrapping_mul(2),
        }
    }

    fn f(self, n: Node<i64, i64>) -> i64 {
        sum_alg(n)
    }

    fn g(self, n: Node<i64, i64>) -> i64 {
        match self {
            Fusion::Mod7 => sum_alg(n).rem_euclid(7),
            Fusion::Double => {
                let l = n.label().copied().unwrap_or(0);
                n.children()
                    .into_iter()
                    .fold(l.wrapping_mul(2), |acc, c| acc.wrapping_add(*c))
            }
        }
    }
}

fn fold_fusion(ctx: &mut Ctx) -> Checked {
    let domain: Vec<i64> = (-10..=10).collect();
    for fusion in [Fusion::Mod7, Fusion::Double] {
        for shape in SHAPES {
            let nodes = gen::all_nodes(shape, &domain, &domain);
            ctx.exhaustive(&format!("{fusion:?} side condition on {shape}"), nodes, |n| {
                prop_assert_eq!(
                    fusion.h(fusion.f(n.clone())),
                    fusion.g(n.clone().map_children(|c| fusion.h(c)))
                );
                Ok(())
            })?;
        }
        for shape in SHAPES {
            ctx.check(
                &format!("{fusion:?} on {shape}"),
                gen::term(shape, DEPTH, LABELS),
                |t| {
                    prop_assert_eq!(fusion.h(fold(&|n| fusion.f(n), t)), fold(&|n| fusion.g(n), t));
                    Ok(())
                },
            )?;
        }
    }
    Ok(())
}

fn fold_map_fusion(ctx: &mut Ctx) -> Checked {
    for shape in SHAPES {
        let strat = (gen::term(shape, DEPTH, LABELS), affine(), -3i64..=3, -3i64..=3);
        ctx.check(shape.name(), strat, |(t, c, m, k)| {
            let g = |a: i64| a.wrapping_mul(*m).wrapping_add(*k);
            let alg = |n| c.apply(n);
            let lhs = fold(&alg, &map_term(&g, t));
            let rhs = fold(&|n: Node<i64, i64>| alg(n.map_label(g)), t);
            prop_assert_eq!(lhs, rhs);
            Ok(())
        })?;
    }
    Ok(())
}

fn unfold_identity(ctx: &mut Ctx) -> Checked {
    for shape in SHAPES {
        ctx.check(shape.name(), gen::term(shape, DEPTH, LABELS), |t| {
            let out = |s: Term| s.out().clone();
            let d = t.depth();
            prop_assert_eq!(unfold_bounded(&out, t.clone(), d), Ok(t.clone()));
            prop_assert_eq!(unfold_bounded(&out, t.clone(), d + 3), Ok(t.clone()));
            if d > 0 {
                prop_assert_eq!(
                    unfold_bounded(&out, t.clone(), d - 1),
                    Err(SchemeError::DepthExceeded(d - 1))
                );
            }
            Ok(())
        })?;
    }
    Ok(())
}

fn distribute_node_product(ctx: &mut Ctx) -> Checked {
    for shape in SHAPES {
        for kind in [List, Bag] {
            let strat = gen::node(shape, LABELS, gen::collection(kind, 0i64..=9, 4));
            ctx.check(&format!("{shape} {kind}"), strat, |n| {
                let got = distribute_node(n, kind).map_err(|e| fail(e.to_string()))?;
                let kids: Vec<Vec<i64>> = n.children().into_iter().map(|c| c.to_vec()).collect();
                let expected_len: usize = kids.iter().map(Vec::len).product();
                prop_assert_eq!(got.len(), expected_len);
                // Nested loops over positions, the last varying fastest.
                let mut expected: Vec<Vec<i64>> = vec![vec![]];
                for k in &kids {
                    expected = expected
                        .into_iter()
                        .flat_map(|pre| {
                            k.iter().map(move |&x| {
                                let mut v = pre.clone();
                                v.push(x);
                                v
                            })
                        })
                        .collect();
                }
                let label = n.label().copied();
                let expected = expected.into_iter().map(|choice| {
                    let (skeleton, _) = n.as_ref().into_parts();
                    skeleton.map_label(|_| label.unwrap_or(0)).fill(choice)
                });
                prop_assert_eq!(got, Collection::from_elems(kind, expected));
                Ok(())
            })?;
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Labelled

fn scan_lemma(ctx: &mut Ctx) -> Checked {
    for shape in SHAPES {
        ctx.check(shape.name(), (gen::term(shape, DEPTH, LABELS), affine()), |(t, c)| {
            let alg = |n| c.apply(n);
            let scanned = scan_generic(&alg, t);
            let subs = subterms(t);
            prop_assert_eq!(&scanned, &subs.map(&|s| fold(&alg, s)));
            prop_assert_eq!(*scanned.root(), fold(&alg, t));
            prop_assert_eq!(subs.root(), t);
            prop_assert_eq!(subs.size(), t.size());
            prop_assert_eq!(scanned.tags(), term_tags(t));
            let listed: Vec<Term> = subs.values().into_iter().cloned().collect();
            prop_assert_eq!(listed, oracles::enumerate_subterms(t));
            if shape == ShapeKind::List {
                let labels = contents_term(t);
                prop_assert_eq!(subs.size(), labels.len() + 1);
                let sums: Vec<i64> = scan_generic(&sum_alg, t).values().into_iter().copied().collect();
                let classical = scanr_list(|a, z| Ok::<_, ()>(a.wrapping_add(z)), 0, &labels).unwrap();
                prop_assert_eq!(sums, classical);
            }
            Ok(())
        })?;
    }
    Ok(())
}

fn subterms_para_equiv(ctx: &mut Ctx) -> Checked {
    for shape in SHAPES {
        ctx.check(shape.name(), (gen::term(shape, DEPTH, LABELS), affine()), |(t, c)| {
            prop_assert_eq!(subterms_para(t), subterms(t));
            let degenerate = para(&|n: Node<i64, (i64, Term)>| c.apply(n.map_children(|p| p.0)), t);
            prop_assert_eq!(degenerate, fold(&|n| c.apply(n), t));
            Ok(())
        })?;
    }
    Ok(())
}

fn subterms_unfold_equiv(ctx: &mut Ctx) -> Checked {
    for shape in SHAPES {
        ctx.check(shape.name(), gen::term(shape, DEPTH, LABELS), |t| {
            let s = subterms(t);
            prop_assert_eq!(&s, &oracles::subterms_unfold(t));
            prop_assert_eq!(&s, &subterms_para(t));
            Ok(())
        })?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Collections

fn nested(kind: CollectionKind) -> BoxedStrategy<Collection<Collection<i64>>> {
    gen::collection(kind, gen::collection(kind, small_ints(), 3), 3)
}

fn monad_laws(ctx: &mut Ctx) -> Checked {
    for kind in KINDS {
        ctx.check(
            &format!("{kind} unit laws"),
            gen::collection(kind, small_ints(), 5),
            |x| {
                let single = Collection::singleton(kind, x.clone());
                prop_assert_eq!(&Collection::join(&single).unwrap(), x);
                let mapped = x.map(|a| Collection::singleton(kind, *a));
                prop_assert_eq!(&Collection::join(&mapped).unwrap(), x);
                Ok(())
            },
        )?;
        let triple = gen::collection(kind, nested(kind), 3);
        ctx.check(&format!("{kind} associativity"), triple, |xxx| {
            let inner_first = Collection::join(&xxx.map(|xx| Collection::join(xx).unwrap())).unwrap();
            let outer_first = Collection::join(&Collection::join(xxx).unwrap()).unwrap();
            prop_assert_eq!(inner_first, outer_first);
            Ok(())
        })?;
    }
    Ok(())
}

fn join_distributes(ctx: &mut Ctx) -> Checked {
    for kind in KINDS {
        let empty: Collection<Collection<i64>> = Collection::empty(kind);
        ctx.exhaustive(&format!("{kind} empty"), [empty], |e| {
            prop_assert_eq!(Collection::join(e).unwrap(), Collection::empty(kind));
            Ok(())
        })?;
        ctx.check(&format!("{kind} union"), (nested(kind), nested(kind)), |(xx, yy)| {
            let lhs = Collection::join(&xx.union(yy).unwrap()).unwrap();
            let rhs = Collection::join(xx)
                .unwrap()
                .union(&Collection::join(yy).unwrap())
                .unwrap();
            prop_assert_eq!(lhs, rhs);
            Ok(())
        })?;
    }
    Ok(())
}

fn join_zero_axiom(ctx: &mut Ctx) -> Checked {
    for kind in KINDS {
        ctx.check(kind.name(), gen::collection(kind, small_ints(), 5), |x| {
            prop_assert!(x.satisfies_zero_axiom());
            Ok(())
        })?;
    }
    Ok(())
}

fn monad_algebra(ctx: &mut Ctx) -> Checked {
    for kind in KINDS {
        for op in reduce_ops(kind) {
            ctx.check(&format!("{kind} {} unit", op.name), LABELS, |a| {
                prop_assert_eq!(op.reduce(&Collection::singleton(kind, *a)), Ok(*a));
                Ok(())
            })?;
            let xx = gen::collection(kind, gen::nonempty_collection(kind, LABELS, 3), 4);
            ctx.check(&format!("{kind} {} join", op.name), xx, |xx| {
                let flat = ok(op.reduce(&Collection::join(xx).unwrap()))?;
                let inner = ok(xx.try_map(|x| op.reduce(x)))?;
                prop_assert_eq!(flat, ok(op.reduce(&inner))?);
                Ok(())
            })?;
        }
    }
    Ok(())
}

fn reduce_distributes(ctx: &mut Ctx) -> Checked {
    for kind in KINDS {
        for op in reduce_ops(kind) {
            ctx.check(&format!("{kind} {} binary", op.name), (LABELS, LABELS), |(a, b)| {
                let pair = Collection::singleton(kind, *a)
                    .union(&Collection::singleton(kind, *b))
                    .unwrap();
                prop_assert_eq!(ok(op.reduce(&pair))?, ok(op.apply(*a, *b))?);
                Ok(())
            })?;
            let two = (
                gen::collection(kind, LABELS, 5),
                gen::collection(kind, LABELS, 5),
                LABELS,
            );
            ctx.check(&format!("{kind} {} union", op.name), two, |(x, y, b)| {
                let (rx, ry) = (ok(op.reduce(x))?, ok(op.reduce(y))?);
                prop_assert_eq!(ok(op.reduce(&x.union(y).unwrap()))?, ok(op.apply(rx, ry))?);
                prop_assert_eq!(ok(op.reduce(&Collection::opt(*b, x)))?, ok(op.apply(*b, rx))?);
                if kind != List {
                    prop_assert_eq!(ok(op.reduce(&y.union(x).unwrap()))?, ok(op.apply(rx, ry))?);
                }
                if kind == Set {
                    prop_assert_eq!(ok(op.reduce(&x.union(x).unwrap()))?, rx);
                }
                Ok(())
            })?;
        }
    }
    // Reductions that do not respect the kind are refused.
    ctx.check("refusals", gen::collection(Bag, 1i64..=8, 5), |x| {
        let distinct: std::collections::BTreeSet<i64> = x.iter().copied().collect();
        if distinct.len() >= 2 {
            prop_assert!(matches!(first_op().reduce(x), Err(ReduceError::NotCommutative(..))));
        }
        if !x.is_empty() {
            let set = Collection::from_elems(Set, x.iter().copied());
            prop_assert!(matches!(
                ReduceOp::sum().reduce(&set),
                Err(ReduceError::NotIdempotent(_))
            ));
        }
        Ok(())
    })
}

fn reduce_unit_forced(ctx: &mut Ctx) -> Checked {
    for kind in KINDS {
        for op in reduce_ops(kind) {
            ctx.check(&format!("{kind} {}", op.name), gen::collection(kind, LABELS, 5), |x| {
                let e = Collection::empty(kind);
                prop_assert_eq!(op.reduce(&e), Ok(op.unit));
                let rx = ok(op.reduce(x))?;
                prop_assert_eq!(ok(op.reduce(&e.union(x).unwrap()))?, rx);
                prop_assert_eq!(ok(op.reduce(&x.union(&e).unwrap()))?, rx);
                prop_assert_eq!(ok(op.apply(rx, op.unit))?, rx);
                prop_assert_eq!(ok(op.apply(op.unit, rx))?, rx);
                Ok(())
            })?;
        }
    }
    Ok(())
}

fn distlist_defs_equiv(ctx: &mut Ctx) -> Checked {
    for kind in KINDS {
        let xs = prop::collection::vec(gen::collection(kind, small_ints(), 4), 0..=4);
        ctx.check(kind.name(), xs, |xs| {
            let third = dist_list(xs, kind).unwrap();
            prop_assert_eq!(&third, &dist_list_lift2(xs, kind).unwrap());
            let expected: usize = xs.iter().map(Collection::len).product();
            if kind != Set {
                prop_assert_eq!(third.len(), expected);
            }
            Ok(())
        })?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Lists

fn horner_list_law(ctx: &mut Ctx) -> Checked {
    let domain: Vec<i64> = (0..=3).collect();
    ctx.exhaustive("plus-times exhaustive", gen::all_lists(&domain, 6), |xs| {
        prop_assert_eq!(
            horner_list(Semiring::PlusTimes, xs),
            horner_list_spec(Semiring::PlusTimes, xs)
        );
        Ok(())
    })?;
    ctx.exhaustive("bool-or-and exhaustive", gen::all_lists(&[0, 1], 8), |xs| {
        prop_assert_eq!(
            horner_list(Semiring::BoolOrAnd, xs),
            horner_list_spec(Semiring::BoolOrAnd, xs)
        );
        Ok(())
    })?;
    let cases = ctx.trials().max(1000);
    ctx.check_n("max-plus", cases, gen::list(LABELS, 16), |xs| {
        let h = ok(horner_list(Semiring::MaxPlus, xs))?;
        prop_assert_eq!(h, ok(horner_list_spec(Semiring::MaxPlus, xs))?);
        prop_assert_eq!(h, oracles::max_prefix_oracle(xs));
        prop_assert_eq!(h, ok(max_prefix_sum(xs))?);
        Ok(())
    })?;
    ctx.check("min-plus", gen::list(LABELS, 16), |xs| {
        prop_assert_eq!(
            ok(horner_list(Semiring::MinPlus, xs))?,
            ok(horner_list_spec(Semiring::MinPlus, xs))?
        );
        Ok(())
    })
}

fn mss_chain(ctx: &mut Ctx) -> Checked {
    let domain: Vec<i64> = (-2..=2).collect();
    let agree = |xs: &Vec<i64>| -> Result<(), TestCaseError> {
        let spec = ok(mss_spec(xs))?;
        prop_assert_eq!(spec, oracles::mss_brute(xs));
        prop_assert_eq!(ok(mss_quadratic(xs))?, spec);
        prop_assert_eq!(ok(mss_linear(xs))?, spec);
        prop_assert_eq!(ok(max_prefix_sum(xs))?, oracles::max_prefix_oracle(xs));
        Ok(())
    };
    ctx.exhaustive("exhaustive", gen::all_lists(&domain, 6), agree)?;
    let cases = ctx.trials().max(10_000);
    ctx.check_n("random", cases, gen::list(-(1 << 20)..=(1 << 20), 64), agree)?;
    ctx.check("segments", gen::list(LABELS, 12), |xs| {
        let n = xs.len();
        prop_assert_eq!(tails_list(xs).len(), n + 1);
        prop_assert_eq!(inits_list(xs).len(), n + 1);
        prop_assert_eq!(segs_list(xs).len(), (n + 1) * (n + 2) / 2);
        Ok(())
    })
}

fn poly_horner_law(ctx: &mut Ctx) -> Checked {
    ctx.check("random", (gen::list(LABELS, 8), -4i64..=4), |(cs, x)| {
        prop_assert_eq!(poly_horner(cs, *x), oracles::poly_direct(cs, *x));
        Ok(())
    })
}

fn scanr_foldr(ctx: &mut Ctx) -> Checked {
    ctx.check("random", (gen::list(LABELS, 16), LABELS), |(xs, e)| {
        let step = |a: i64, z: i64| Ok::<_, ()>(a.wrapping_mul(3).wrapping_sub(z));
        let scanned = scanr_list(step, *e, xs).unwrap();
        prop_assert_eq!(scanned.len(), xs.len() + 1);
        prop_assert_eq!(scanned[0], foldr_list(step, *e, xs).unwrap());
        let by_tails: Vec<i64> = tails_list(xs)
            .iter()
            .map(|t| foldr_list(step, *e, t).unwrap())
            .collect();
        prop_assert_eq!(scanned, by_tails);
        let rebuilt = foldr_list(
            |a, mut acc: Vec<i64>| {
                acc.insert(0, a);
                Ok::<_, ()>(acc)
            },
            vec![],
            xs,
        )
        .unwrap();
        prop_assert_eq!(&rebuilt, xs);
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// Distributivity

fn reduce_with(s: Semiring, x: &Collection<i64>) -> Result<i64, ReduceError> {
    if s.compatible_with(x.kind()) {
        s.add_op().reduce(x)
    } else {
        Ok(s.add_op().reduce_unchecked(x)?)
    }
}

fn rectangle_distributivity(ctx: &mut Ctx) -> Checked {
    for (kind, s) in gated_pairs() {
        for shape in SHAPES {
            let l = labels_for(s);
            let strat = (gen::node(shape, l.clone(), gen::collection(kind, l.clone(), 4)), l);
            ctx.check(&format!("{kind} {s} {shape}"), strat, |(n, b)| {
                let f = generic_product_alg(s, *b);
                let lhs = ok(distribute_node(n, kind).unwrap().try_map(|m| f(m.clone())))?;
                let lhs = ok(reduce_with(s, &lhs))?;
                let rhs = f(ok(n.clone().try_map_children(|c| reduce_with(s, &c)))?);
                prop_assert_eq!(lhs, ok(rhs)?);
                Ok(())
            })?;
        }
    }
    // Summing a list node and taking the maximum over nonempty bags.
    let ex8 = gen::node(ShapeKind::List, 0i64..=9, gen::nonempty_collection(Bag, 0i64..=9, 4));
    ctx.check("sum over max", ex8, |n| {
        let max = ReduceOp::max();
        let lhs = max.reduce(&distribute_node(n, Bag).unwrap().map(|m| sum_alg(m.clone())));
        let rhs = sum_alg(n.clone().map_children(|c| max.reduce(&c).unwrap()));
        prop_assert_eq!(lhs, Ok(rhs));
        Ok(())
    })
}

fn foldr_mul(s: Semiring, b: i64, xs: &[i64]) -> Result<i64, ArithError> {
    foldr_list(|a, z| s.mul(a, z), b, xs)
}

fn face7_lists(ctx: &mut Ctx) -> Checked {
    for (kind, s) in gated_pairs() {
        for shape in SHAPES {
            let l = labels_for(s);
            let strat = (gen::node(shape, l.clone(), gen::collection(kind, l.clone(), 3)), l);
            ctx.check(&format!("{kind} {s} {shape}"), strat, |(n, b)| {
                let b = *b;
                let f = generic_product_alg(s, b);
                let red = |x: &Collection<i64>| ok(reduce_with(s, x));
                let lifted = n.clone().map_label(|a| Collection::singleton(kind, a));
                let both = distribute_both(&lifted, kind).unwrap();
                let s0 = red(&ok(distribute_node(n, kind).unwrap().try_map(|m| f(m.clone())))?)?;
                let s1 = red(&ok(both.try_map(|m| f(m.clone())))?)?;
                let s2 = red(&ok(both
                    .map(|m| contents_node(m.clone()))
                    .try_map(|c| foldr_mul(s, b, c)))?)?;
                let s3 = red(&ok(dist_list(&lifted.clone().contents(), kind)
                    .unwrap()
                    .try_map(|c| foldr_mul(s, b, c)))?)?;
                let reduced: Vec<i64> = lifted.clone().contents().iter().map(red).collect::<Result<_, _>>()?;
                let s4 = ok(foldr_mul(s, b, &reduced))?;
                let s5 = ok(foldr_mul(
                    s,
                    b,
                    &contents_node(ok(lifted
                        .clone()
                        .try_bimap(|x| reduce_with(s, &x), |x| reduce_with(s, &x)))?),
                ))?;
                let s6 = ok(f(ok(n.clone().try_map_children(|c| reduce_with(s, &c)))?))?;
                let chain = [s0, s1, s2, s3, s4, s5, s6];
                prop_assert!(chain.iter().all(|&v| v == s0), "chain {:?}", chain);
                Ok(())
            })?;
        }
    }
    Ok(())
}

fn cp_distributivity(ctx: &mut Ctx) -> Checked {
    for (kind, s) in gated_pairs() {
        let l = labels_for(s);
        let strat = (gen::collection(kind, l.clone(), 4), gen::collection(kind, l, 4));
        ctx.check(&format!("{kind} {s}"), strat, |(x, y)| {
            let products = ok(cp(x, y).unwrap().try_map(|(a, b)| s.mul(*a, *b)))?;
            let lhs = ok(reduce_with(s, &products))?;
            let rhs = ok(s.mul(ok(reduce_with(s, x))?, ok(reduce_with(s, y))?))?;
            prop_assert_eq!(lhs, rhs);
            Ok(())
        })?;
    }
    Ok(())
}

fn cp_distributivity_set_plus(ctx: &mut Ctx) -> Checked {
    let s = Semiring::PlusTimes;
    let strat = (gen::collection(Set, 0i64..=4, 4), gen::collection(Set, 0i64..=4, 4));
    ctx.check("set plus-times", strat, |(x, y)| {
        let products = ok(cp(x, y).unwrap().try_map(|(a, b)| s.mul(*a, *b)))?;
        let lhs = ok(reduce_with(s, &products))?;
        let rhs = ok(s.mul(ok(reduce_with(s, x))?, ok(reduce_with(s, y))?))?;
        prop_assert_eq!(lhs, rhs, "products {}", products);
        Ok(())
    })
}

fn collection_distributivity(ctx: &mut Ctx) -> Checked {
    let mut pairs = gated_pairs();
    // Scaling by a fixed factor is injective or constant, so it holds even
    // where set reduction by `+` is not a monad algebra.
    pairs.push((Set, Semiring::PlusTimes));
    for (kind, s) in pairs {
        let l = labels_for(s);
        let strat = (l.clone(), gen::collection(kind, l, 5));
        ctx.check(&format!("{kind} {s}"), strat, |(a, x)| {
            let r = ok(reduce_with(s, x))?;
            let left = ok(reduce_with(s, &ok(x.try_map(|v| s.mul(*a, *v)))?))?;
            prop_assert_eq!(left, ok(s.mul(*a, r))?);
            let right = ok(reduce_with(s, &ok(x.try_map(|v| s.mul(*v, *a)))?))?;
            prop_assert_eq!(right, ok(s.mul(r, *a))?);
            Ok(())
        })?;
    }
    Ok(())
}

fn contents_naturality(ctx: &mut Ctx) -> Checked {
    for shape in SHAPES {
        let strat = (gen::term(shape, DEPTH, LABELS), -3i64..=3, -3i64..=3);
        ctx.check(&format!("{shape} terms"), strat, |(t, m, k)| {
            let g = |a: i64| a * m + k;
            let before = contents_term(t);
            prop_assert_eq!(&before, &oracles::labels_preorder(t));
            let after = contents_term(&map_term(&g, t));
            prop_assert_eq!(after, before.iter().map(|&a| g(a)).collect::<Vec<_>>());
            Ok(())
        })?;
        let strat = (gen::node(shape, LABELS, LABELS), -3i64..=3, -3i64..=3);
        ctx.check(&format!("{shape} nodes"), strat, |(n, m, k)| {
            let g = |a: i64| a * m + k;
            let mapped = contents_node(n.clone().bimap(g, g));
            prop_assert_eq!(mapped, contents_node(n.clone()).into_iter().map(g).collect::<Vec<_>>());
            Ok(())
        })?;
    }
    Ok(())
}

fn delta_respects_contents(ctx: &mut Ctx) -> Checked {
    for kind in KINDS {
        for shape in SHAPES {
            let c = gen::collection(kind, small_ints(), 3);
            ctx.check(&format!("{kind} {shape}"), gen::node(shape, c.clone(), c), |n| {
                let lhs = distribute_both(n, kind).unwrap().map(|m| contents_node(m.clone()));
                let rhs = dist_list(&n.clone().contents(), kind).unwrap();
                prop_assert_eq!(lhs, rhs);
                Ok(())
            })?;
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Generic Horner and segments

const GENERIC_SEMIRINGS: [Semiring; 2] = [Semiring::MaxPlus, Semiring::PlusTimes];

fn horner_generic_vs_prune(ctx: &mut Ctx) -> Checked {
    for s in GENERIC_SEMIRINGS {
        for shape in SHAPES {
            let l = labels_for(s);
            let strat = (gen::prunable_term(shape, DEPTH, l.clone(), PRUNE_LIMIT), l);
            ctx.check(&format!("{s} {shape}"), strat, |(t, sample)| {
                let one = s.one();
                let doubled = ok(s.add(one, one))?;
                for b in [one, doubled, *sample] {
                    let fast = ok(horner_generic(s, b, t))?;
                    prop_assert_eq!(fast, ok(horner_by_pruning(s, b, t, Bag, DEFAULT_GUARD))?, "b = {}", b);
                    prop_assert_eq!(
                        fast,
                        ok(horner_by_pruning(s, b, t, List, DEFAULT_GUARD))?,
                        "list, b = {}",
                        b
                    );
                }
                if s == Semiring::MaxPlus {
                    prop_assert_eq!(ok(horner_generic(s, one, t))?, ok(horner_generic(s, doubled, t))?);
                }
                Ok(())
            })?;
        }
    }
    Ok(())
}

fn mss_generic_scan_vs_brute(ctx: &mut Ctx) -> Checked {
    for s in GENERIC_SEMIRINGS {
        for shape in SHAPES {
            let l = labels_for(s);
            let strat = (gen::prunable_term(shape, 5, l.clone(), PRUNE_LIMIT), l);
            ctx.check(&format!("{s} {shape}"), strat, |(t, sample)| {
                for b in [s.default_b(), *sample] {
                    for kind in [Bag, List] {
                        let opts = MssOptions {
                            kind,
                            ..MssOptions::default()
                        };
                        let scan = ok(mss_generic(s, b, t, Via::Scan, opts))?;
                        let brute = ok(mss_generic(s, b, t, Via::Brute, opts))?;
                        prop_assert_eq!(scan, brute, "{} b = {}", kind, b);
                    }
                }
                if s.compatible_with(Set) {
                    let opts = MssOptions {
                        kind: Set,
                        ..MssOptions::default()
                    };
                    let b = s.default_b();
                    prop_assert_eq!(
                        ok(mss_generic(s, b, t, Via::Scan, opts))?,
                        ok(mss_generic(s, b, t, Via::Brute, opts))?
                    );
                }
                Ok(())
            })?;
        }
    }
    Ok(())
}

fn mss_generic_vs_linear(ctx: &mut Ctx) -> Checked {
    let strat = gen::term(ShapeKind::List, 16, LABELS);
    ctx.check("lists", strat, |t| {
        let labels = contents_term(t);
        let opts = MssOptions::default();
        let linear = ok(mss_linear(&labels))?;
        prop_assert_eq!(ok(mss_generic(Semiring::MaxPlus, 0, t, Via::Scan, opts))?, linear);
        prop_assert_eq!(ok(mss_generic(Semiring::MaxPlus, 0, t, Via::Brute, opts))?, linear);
        let values: std::collections::BTreeSet<i64> = ok(segs_generic(t, Bag))?
            .iter()
            .map(|p| pruned_fold(&0, &sum_alg, p))
            .collect();
        for seg in segs_list(&labels) {
            let total: i64 = seg.iter().sum();
            prop_assert!(values.contains(&total), "segment {:?} missing", seg);
        }
        Ok(())
    })
}

fn distributivity_gate(ctx: &mut Ctx) -> Checked {
    let strat = gen::prunable_term(ShapeKind::HTree, 4, SMALL_LABELS, 2_000);
    ctx.check("htree", strat, |t| {
        let set = MssOptions {
            kind: Set,
            ..MssOptions::default()
        };
        for via in [Via::Scan, Via::Brute] {
            prop_assert_eq!(
                mss_generic(Semiring::PlusTimes, 1, t, via, set),
                Err(HornerError::DistributivityViolation {
                    semiring: Semiring::PlusTimes,
                    kind: Set
                })
            );
            for s in [Semiring::MaxPlus, Semiring::MinPlus] {
                prop_assert!(mss_generic(s, s.default_b(), t, via, set).is_ok());
            }
        }
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// Pruning and the set monad

fn set_plus_nonidempotent(ctx: &mut Ctx) -> Checked {
    let op = ReduceOp::sum();
    ctx.check("sum over x union x", gen::collection(Set, 0i64..=8, 4), |x| {
        let doubled = op.reduce_unchecked(&x.union(x).unwrap()).unwrap();
        let r = op.reduce_unchecked(x).unwrap();
        prop_assert_eq!(doubled, r + r, "sum of x union x vs (sum x) + (sum x)");
        Ok(())
    })
}

fn is_subobject(p: &segsum::pruning::Pruned, full: &[Vec<usize>]) -> bool {
    let kept = p.positions();
    kept.iter().all(|path| {
        full.binary_search(path).is_ok()
            && (path.is_empty() || kept.binary_search(&path[..path.len() - 1].to_vec()).is_ok())
    })
}

fn prune_counts(ctx: &mut Ctx) -> Checked {
    for shape in SHAPES {
        let strat = gen::prunable_term(shape, DEPTH, LABELS, PRUNE_LIMIT);
        ctx.check(shape.name(), strat, |t| {
            let bag = ok(prune(t, Bag))?;
            prop_assert_eq!(&bag, &oracles::prune_recursive(t, Bag));
            prop_assert_eq!(bag.len() as u128, oracles::prune_count_recurrence(t));
            prop_assert_eq!(prune_count(t), oracles::prune_count_recurrence(t));
            prop_assert_eq!(ok(prune(t, List))?, oracles::prune_recursive(t, List));
            prop_assert_eq!(ok(prune(t, Set))?, oracles::prune_recursive(t, Set));
            let full = term_positions(t);
            prop_assert!(bag.iter().all(|p| is_subobject(p, &full)));
            if shape == ShapeKind::List {
                prop_assert_eq!(bag.len(), contents_term(t).len() + 2);
            }
            let segs = ok(segs_generic(t, Bag))?;
            prop_assert_eq!(segs.len() as u128, gen::segs_count(t));
            Ok(())
        })?;
    }
    Ok(())
}

fn prune_set_bag_counts(ctx: &mut Ctx) -> Checked {
    for shape in SHAPES {
        let strat = gen::prunable_term(shape, DEPTH, 0..=1, PRUNE_LIMIT);
        ctx.check(shape.name(), strat, |t| {
            prop_assert_eq!(ok(prune(t, Set))?.len(), ok(prune(t, Bag))?.len());
            prop_assert!(ok(segs_generic(t, Set))?.len() <= ok(segs_generic(t, Bag))?.len());
            Ok(())
        })?;
    }
    Ok(())
}

fn segs_set_collapses(ctx: &mut Ctx) -> Checked {
    ctx.check("lists", gen::term(ShapeKind::List, 6, 0..=1), |t| {
        prop_assert_eq!(ok(segs_generic(t, Set))?.len(), ok(segs_generic(t, Bag))?.len());
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// The table

/// Every public operation a law is expected to exercise.
pub const OPERATIONS: &[&str] = &[
    "bimap_node",
    "parse_term",
    "print_term",
    "fold",
    "unfold_bounded",
    "para",
    "contents_node",
    "contents_term",
    "distribute_node",
    "distribute_both",
    "map_term",
    "root",
    "subterms",
    "subterms_para",
    "scan_generic",
    "singleton",
    "empty",
    "union",
    "map",
    "join",
    "reduce",
    "opt",
    "cp",
    "dist_list",
    "prune",
    "pruned_fold",
    "segs_generic",
    "foldr_list",
    "scanr_list",
    "inits_list",
    "tails_list",
    "segs_list",
    "mss_spec",
    "mss_quadratic",
    "max_prefix_sum",
    "mss_linear",
    "horner_list",
    "poly_horner",
    "generic_product_alg",
    "horner_generic",
    "mss_generic",
];

const fn law(
    id: &'static str,
    description: &'static str,
    covers: &'static [&'static str],
    run: fn(&mut Ctx) -> Checked,
) -> Law {
    Law {
        id,
        description,
        covers,
        expectation: Expectation::Holds,
        optional: false,
        run,
    }
}

const fn failing(
    id: &'static str,
    description: &'static str,
    covers: &'static [&'static str],
    run: fn(&mut Ctx) -> Checked,
) -> Law {
    Law {
        id,
        description,
        covers,
        expectation: Expectation::FailsWithWitness,
        optional: false,
        run,
    }
}

pub static REGISTRY: &[Law] = &[
    law(
        "print-parse-roundtrip",
        "parsing a printed term (or pruned term) gives it back",
        &["parse_term", "print_term"],
        print_parse_roundtrip,
    ),
    law(
        "print-injective",
        "distinct terms print differently, and term order is printed order",
        &["print_term"],
        print_injective,
    ),
    law(
        "bimap-functor-laws",
        "bimap preserves identities and composition",
        &["bimap_node"],
        bimap_functor_laws,
    ),
    law(
        "fold-universal",
        "fold f . in = f . F id (fold f), against direct recursion",
        &["fold"],
        fold_universal,
    ),
    law(
        "fold-universal-base",
        "fold on childless constructors applies the algebra once",
        &["fold"],
        fold_universal_base,
    ),
    law(
        "fold-fusion",
        "h . fold f = fold g whenever h . f = g . F h (side condition checked exhaustively)",
        &["fold"],
        fold_fusion,
    ),
    law(
        "fold-map-fusion",
        "fold f . map g = fold (f . F g id)",
        &["fold", "map_term", "bimap_node"],
        fold_map_fusion,
    ),
    law(
        "unfold-identity",
        "unfolding out rebuilds a term within its depth and refuses below it",
        &["unfold_bounded"],
        unfold_identity,
    ),
    law(
        "distribute-node-product",
        "distributing a node yields the positional cartesian product",
        &["distribute_node"],
        distribute_node_product,
    ),
    law(
        "scan-lemma",
        "scan f = L (fold f) . subterms, with root, size and skeleton checks",
        &["scan_generic", "subterms", "root", "scanr_list", "fold"],
        scan_lemma,
    ),
    law(
        "subterms-para-equiv",
        "subterms as a paramorphism equals subterms as a fold",
        &["subterms_para", "subterms", "para"],
        subterms_para_equiv,
    ),
    law(
        "subterms-unfold-equiv",
        "subterms equals its unfold formulation",
        &["subterms", "subterms_para"],
        subterms_unfold_equiv,
    ),
    law(
        "monad-laws",
        "join . return = id, join . M return = id, join . M join = join . join",
        &["singleton", "join", "map"],
        monad_laws,
    ),
    law(
        "join-distributes",
        "join empty = empty and join (x union y) = join x union join y",
        &["join", "union", "empty"],
        join_distributes,
    ),
    Law {
        id: "join-zero-axiom",
        description: "join . M (const empty) = const empty (optional axiom)",
        covers: &["join", "empty", "map"],
        expectation: Expectation::Holds,
        optional: true,
        run: join_zero_axiom,
    },
    law(
        "monad-algebra",
        "reductions satisfy k . return = id and k . join = k . M k",
        &["reduce", "join"],
        monad_algebra,
    ),
    law(
        "reduce-distributes",
        "a + b = reduce (return a union return b) and reduce distributes over union and opt",
        &["reduce", "union", "opt"],
        reduce_distributes,
    ),
    law(
        "reduce-unit-forced",
        "reduce empty is the unit of the operator",
        &["reduce", "empty"],
        reduce_unit_forced,
    ),
    law(
        "distlist-defs-equiv",
        "the foldr-of-cp list distributor equals the liftM2 recursion",
        &["dist_list", "cp"],
        distlist_defs_equiv,
    ),
    law(
        "horner-list",
        "reduce . map product . inits = foldr (u, z -> 1 + u * z) 1",
        &["horner_list", "inits_list", "max_prefix_sum"],
        horner_list_law,
    ),
    law(
        "mss-chain",
        "the cubic, quadratic and linear maximum segment sums agree with brute force",
        &[
            "mss_spec",
            "mss_quadratic",
            "mss_linear",
            "max_prefix_sum",
            "segs_list",
            "tails_list",
            "inits_list",
        ],
        mss_chain,
    ),
    law(
        "poly-horner",
        "nested multiplication equals direct polynomial evaluation",
        &["poly_horner"],
        poly_horner_law,
    ),
    law(
        "scanr-foldr",
        "scanr is the foldr of every tail",
        &["scanr_list", "foldr_list", "tails_list"],
        scanr_foldr,
    ),
    law(
        "rectangle-distributivity",
        "reduce . M f . distribute = f . F id reduce, including sum over max",
        &["distribute_node", "generic_product_alg", "reduce"],
        rectangle_distributivity,
    ),
    law(
        "face7-lists",
        "the seven-step chain from distribute to contents and list folds",
        &[
            "distribute_node",
            "distribute_both",
            "dist_list",
            "contents_node",
            "generic_product_alg",
            "foldr_list",
        ],
        face7_lists,
    ),
    law(
        "cp-distributivity",
        "reduce . M (*) . cp = (*) . (reduce x reduce)",
        &["cp", "reduce"],
        cp_distributivity,
    ),
    failing(
        "cp-distributivity-set-plus",
        "cp distributivity breaks for sets under (+, *): equal products collapse",
        &["cp", "reduce"],
        cp_distributivity_set_plus,
    ),
    law(
        "collection-distributivity",
        "reduce . M (a *) = (a *) . reduce, and on the right",
        &["reduce", "map"],
        collection_distributivity,
    ),
    law(
        "contents-naturality",
        "contents . map g = map g . contents",
        &["contents_term", "contents_node", "map_term"],
        contents_naturality,
    ),
    law(
        "delta-respects-contents",
        "M contents . distribute = dist_list . contents",
        &["distribute_both", "dist_list", "contents_node"],
        delta_respects_contents,
    ),
    law(
        "hornerGeneric-vs-prune",
        "fold ((b +) . f) = reduce . M (fold (maybe b f)) . prune",
        &["horner_generic", "prune", "pruned_fold", "generic_product_alg"],
        horner_generic_vs_prune,
    ),
    law(
        "mssGeneric-scan-vs-brute",
        "reduce . contents . scan ((b +) . f) = reduce . M (fold (maybe b f)) . segs",
        &["mss_generic", "segs_generic", "scan_generic"],
        mss_generic_scan_vs_brute,
    ),
    law(
        "mss-generic-vs-linear",
        "on lists, generic maximum segment sum equals the linear algorithm",
        &["mss_generic", "segs_generic", "pruned_fold", "mss_linear"],
        mss_generic_vs_linear,
    ),
    law(
        "distributivity-gate",
        "sets with a non-idempotent addition are refused, idempotent ones accepted",
        &["mss_generic"],
        distributivity_gate,
    ),
    failing(
        "set-plus-nonidempotent",
        "summing a set is not a reduction: reduce (x union x) differs from reduce x + reduce x",
        &["reduce", "union"],
        set_plus_nonidempotent,
    ),
    law(
        "prune-counts",
        "prune matches its recursive characterisation and size recurrence",
        &["prune", "segs_generic"],
        prune_counts,
    ),
    law(
        "prune-set-bag-counts",
        "prune never repeats a pruning, so sets and bags agree in size",
        &["prune", "segs_generic"],
        prune_set_bag_counts,
    ),
    failing(
        "segs-set-collapses",
        "segs over sets merges the empty segment of every subterm",
        &["segs_generic"],
        segs_set_collapses,
    ),
];

//! Finite collection monads (lists, bags, sets) and their reductions.
//!
//! Every collection carries its [`CollectionKind`]. Bags and sets are kept in
//! canonical form (sorted by the element order, bags as element/multiplicity
//! pairs) so that derived equality is the intended equality.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::ArithError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CollectionKind {
    List,
    Bag,
    Set,
}

impl CollectionKind {
    pub const ALL: [CollectionKind; 3] = [CollectionKind::List, CollectionKind::Bag, CollectionKind::Set];

    pub fn name(self) -> &'static str {
        match self {
            CollectionKind::List => "list",
            CollectionKind::Bag => "bag",
            CollectionKind::Set => "set",
        }
    }
}

impl fmt::Display for CollectionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown collection kind `{0}` (expected list, bag or set)")]
pub struct UnknownKind(pub String);

impl FromStr for CollectionKind {
    type Err = UnknownKind;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "list" => Ok(CollectionKind::List),
            "bag" => Ok(CollectionKind::Bag),
            "set" => Ok(CollectionKind::Set),
            other => Err(UnknownKind(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum CollectionError {
    #[error("collection kind mismatch: expected {expected}, found {found}")]
    KindMismatch {
        expected: CollectionKind,
        found: CollectionKind,
    },
}

fn same_kind(expected: CollectionKind, found: CollectionKind) -> Result<(), CollectionError> {
    if expected == found {
        Ok(())
    } else {
        Err(CollectionError::KindMismatch { expected, found })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Repr<T> {
    List(Vec<T>),
    Bag(BTreeMap<T, usize>),
    Set(BTreeSet<T>),
}

/// A finite list, bag or set.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Collection<T>(Repr<T>);

/// Sorting first keeps already ordered input (the common case) linear, and
/// lets the map be built in bulk.
fn bag_from_counted<T: Ord>(elems: impl Iterator<Item = (T, usize)>) -> BTreeMap<T, usize> {
    let mut v: Vec<(T, usize)> = elems.collect();
    v.sort_by(|x, y| x.0.cmp(&y.0));
    let mut merged: Vec<(T, usize)> = Vec::with_capacity(v.len());
    for (a, n) in v {
        match merged.last_mut() {
            Some((b, m)) if *b == a => *m += n,
            _ => merged.push((a, n)),
        }
    }
    merged.into_iter().collect()
}

impl<T: Ord> Collection<T> {
    pub fn empty(kind: CollectionKind) -> Self {
        Collection(match kind {
            CollectionKind::List => Repr::List(Vec::new()),
            CollectionKind::Bag => Repr::Bag(BTreeMap::new()),
            CollectionKind::Set => Repr::Set(BTreeSet::new()),
        })
    }

    /// `return`.
    pub fn singleton(kind: CollectionKind, a: T) -> Self {
        Self::from_elems(kind, [a])
    }

    pub fn from_elems(kind: CollectionKind, elems: impl IntoIterator<Item = T>) -> Self {
        let elems = elems.into_iter();
        Collection(match kind {
            CollectionKind::List => Repr::List(elems.collect()),
            CollectionKind::Bag => Repr::Bag(bag_from_counted(elems.map(|a| (a, 1)))),
            CollectionKind::Set => Repr::Set(elems.collect()),
        })
    }

    /// Builds a collection from elements with multiplicities. Lists repeat
    /// each element in place; sets ignore multiplicity; zero counts are
    /// dropped.
    pub fn from_counted(kind: CollectionKind, elems: impl IntoIterator<Item = (T, usize)>) -> Self
    where
        T: Clone,
    {
        let elems = elems.into_iter().filter(|(_, n)| *n > 0);
        Collection(match kind {
            CollectionKind::List => {
                let mut v = Vec::new();
                for (a, n) in elems {
                    v.extend(std::iter::repeat_n(a, n));
                }
                Repr::List(v)
            }
            CollectionKind::Bag => Repr::Bag(bag_from_counted(elems)),
            CollectionKind::Set => Repr::Set(elems.map(|(a, _)| a).collect()),
        })
    }

    pub fn kind(&self) -> CollectionKind {
        match &self.0 {
            Repr::List(_) => CollectionKind::List,
            Repr::Bag(_) => CollectionKind::Bag,
            Repr::Set(_) => CollectionKind::Set,
        }
    }

    /// Number of elements, counting multiplicity.
    pub fn len(&self) -> usize {
        match &self.0 {
            Repr::List(v) => v.len(),
            Repr::Bag(m) => m.values().sum(),
            Repr::Set(s) => s.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Elements in canonical order, bag elements repeated by multiplicity.
    pub fn iter(&self) -> Box<dyn Iterator<Item = &T> + '_> {
        match &self.0 {
            Repr::List(v) => Box::new(v.iter()),
            Repr::Bag(m) => Box::new(m.iter().flat_map(|(a, &n)| std::iter::repeat_n(a, n))),
            Repr::Set(s) => Box::new(s.iter()),
        }
    }

    /// Elements paired with their multiplicity. List elements are reported
    /// one at a time, in order.
    pub fn iter_counted(&self) -> Box<dyn Iterator<Item = (&T, usize)> + '_> {
        match &self.0 {
            Repr::List(v) => Box::new(v.iter().map(|a| (a, 1))),
            Repr::Bag(m) => Box::new(m.iter().map(|(a, &n)| (a, n))),
            Repr::Set(s) => Box::new(s.iter().map(|a| (a, 1))),
        }
    }

    pub fn to_vec(&self) -> Vec<T>
    where
        T: Clone,
    {
        self.iter().cloned().collect()
    }

    pub fn contains(&self, a: &T) -> bool {
        match &self.0 {
            Repr::List(v) => v.contains(a),
            Repr::Bag(m) => m.contains_key(a),
            Repr::Set(s) => s.contains(a),
        }
    }

    /// `⊎`: append, bag union (multiplicities add), or set union.
    pub fn union(&self, other: &Self) -> Result<Self, CollectionError>
    where
        T: Clone,
    {
        same_kind(self.kind(), other.kind())?;
        Ok(Collection(match (&self.0, &other.0) {
            (Repr::List(a), Repr::List(b)) => Repr::List(a.iter().chain(b).cloned().collect()),
            (Repr::Bag(a), Repr::Bag(b)) => {
                let mut m = a.clone();
                for (x, n) in b {
                    *m.entry(x.clone()).or_insert(0) += n;
                }
                Repr::Bag(m)
            }
            (Repr::Set(a), Repr::Set(b)) => Repr::Set(a.union(b).cloned().collect()),
            _ => unreachable!("kinds checked above"),
        }))
    }

    /// The functorial map. Bags keep multiplicities (merging elements that
    /// become equal); sets collapse them.
    pub fn map<U: Ord + Clone>(&self, mut f: impl FnMut(&T) -> U) -> Collection<U> {
        Collection::from_counted(self.kind(), self.iter_counted().map(|(a, n)| (f(a), n)))
    }

    pub fn try_map<U: Ord + Clone, E>(&self, mut f: impl FnMut(&T) -> Result<U, E>) -> Result<Collection<U>, E> {
        let mapped = self
            .iter_counted()
            .map(|(a, n)| Ok((f(a)?, n)))
            .collect::<Result<Vec<_>, E>>()?;
        Ok(Collection::from_counted(self.kind(), mapped))
    }

    /// `opt a x = return a ⊎ x`.
    pub fn opt(a: T, x: &Self) -> Self
    where
        T: Clone,
    {
        let mut r = x.clone();
        match &mut r.0 {
            Repr::List(v) => v.insert(0, a),
            Repr::Bag(m) => *m.entry(a).or_insert(0) += 1,
            Repr::Set(s) => {
                s.insert(a);
            }
        }
        r
    }

    /// Monadic bind, `join . M f`.
    pub fn bind<U: Ord + Clone>(&self, f: impl FnMut(&T) -> Collection<U>) -> Result<Collection<U>, CollectionError> {
        Collection::join(&self.map(f))
    }

    /// `join . M f` for a fallible `f`, combining each inner collection as
    /// soon as it is produced instead of building the nested collection.
    pub fn try_bind<U: Ord + Clone, E: From<CollectionError>>(
        &self,
        mut f: impl FnMut(&T) -> Result<Collection<U>, E>,
    ) -> Result<Collection<U>, E> {
        let kind = self.kind();
        let mut elems: Vec<(U, usize)> = Vec::new();
        for (a, n) in self.iter_counted() {
            let inner = f(a)?;
            same_kind(kind, inner.kind())?;
            elems.extend(inner.iter_counted().map(|(b, m)| (b.clone(), n * m)));
        }
        Ok(Collection::from_counted(kind, elems))
    }

    /// Checks the optional zero axiom `join (M (const ∅) x) = ∅`.
    pub fn satisfies_zero_axiom(&self) -> bool
    where
        T: Clone,
    {
        let kind = self.kind();
        matches!(
            Collection::join(&self.map(|_| Collection::<T>::empty(kind))),
            Ok(z) if z.is_empty()
        )
    }
}

impl<T: Ord + Clone> Collection<Collection<T>> {
    /// `join`: unions the inner collections, which must have the outer kind.
    pub fn join(xx: &Self) -> Result<Collection<T>, CollectionError> {
        let kind = xx.kind();
        let mut elems: Vec<(T, usize)> = Vec::new();
        for (inner, n) in xx.iter_counted() {
            same_kind(kind, inner.kind())?;
            for (a, m) in inner.iter_counted() {
                elems.push((a.clone(), n * m));
            }
        }
        Ok(Collection::from_counted(kind, elems))
    }
}

/// Cartesian product `cp (x, y) = join (M (\a -> M (a,) y) x)`.
pub fn cp<A, B>(x: &Collection<A>, y: &Collection<B>) -> Result<Collection<(A, B)>, CollectionError>
where
    A: Ord + Clone,
    B: Ord + Clone,
{
    same_kind(x.kind(), y.kind())?;
    Collection::join(&x.map(|a| y.map(|b| (a.clone(), b.clone()))))
}

/// The list distributor `δ_List = foldr (M(:) . cp) (return [])`.
pub fn dist_list<T: Ord + Clone>(
    xs: &[Collection<T>],
    kind: CollectionKind,
) -> Result<Collection<Vec<T>>, CollectionError> {
    xs.iter()
        .rev()
        .try_fold(Collection::singleton(kind, Vec::new()), |acc, x| {
            same_kind(kind, x.kind())?;
            Ok(cp(x, &acc)?.map(|(a, rest)| {
                let mut v = Vec::with_capacity(rest.len() + 1);
                v.push(a.clone());
                v.extend(rest.iter().cloned());
                v
            }))
        })
}

/// `δ_List` by the monadic recursion `δ (m : ms) = liftM2 (:) m (δ ms)`.
pub fn dist_list_lift2<T: Ord + Clone>(
    xs: &[Collection<T>],
    kind: CollectionKind,
) -> Result<Collection<Vec<T>>, CollectionError> {
    match xs.split_first() {
        None => Ok(Collection::singleton(kind, Vec::new())),
        Some((m, ms)) => {
            same_kind(kind, m.kind())?;
            let rest = dist_list_lift2(ms, kind)?;
            m.bind(|a| {
                rest.map(|r| {
                    let mut v = vec![a.clone()];
                    v.extend(r.iter().cloned());
                    v
                })
            })
        }
    }
}

impl<T: Ord> Collection<T> {
    fn write_with(
        &self,
        f: &mut fmt::Formatter<'_>,
        mut item: impl FnMut(&T, &mut fmt::Formatter<'_>) -> fmt::Result,
    ) -> fmt::Result {
        let (open, close) = match self.kind() {
            CollectionKind::List => ("[", "]"),
            CollectionKind::Bag => ("<", ">"),
            CollectionKind::Set => ("{", "}"),
        };
        f.write_str(open)?;
        for (i, a) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            item(a, f)?;
        }
        f.write_str(close)
    }
}

impl<T: Ord + fmt::Display> fmt::Display for Collection<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, |a, f| write!(f, "{a}"))
    }
}

impl<T: Ord + fmt::Debug> fmt::Debug for Collection<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, |a, f| write!(f, "{a:?}"))
    }
}

// ---------------------------------------------------------------------------
// Reductions

/// Bottom element for maximum over `i64`.
pub const MIN_SENTINEL: i64 = i64::MIN;
/// Top element for minimum over `i64`.
pub const MAX_SENTINEL: i64 = i64::MAX;

/// Number of sampled triples used to validate a reduction before use.
pub const DEFAULT_VALIDATION_TRIALS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ReduceError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("operator is not associative on ({0}, {1}, {2})")]
    NotAssociative(i64, i64, i64),
    #[error("the unit is not a two-sided unit for {0}")]
    NotUnit(i64),
    #[error("operator is not commutative on ({0}, {1}), as a bag reduction requires")]
    NotCommutative(i64, i64),
    #[error("operator is not idempotent on {0}, as a set reduction requires")]
    NotIdempotent(i64),
    #[error("element {0} equals the sentinel unit")]
    SentinelOperand(i64),
}

/// A binary operator `⊕` with unit `e`, used as the reduction `⊕/`.
#[derive(Clone, Copy)]
pub struct ReduceOp {
    pub name: &'static str,
    op: fn(i64, i64) -> Result<i64, ArithError>,
    pub unit: i64,
    sentinel_unit: bool,
}

impl fmt::Debug for ReduceOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ReduceOp")
            .field("name", &self.name)
            .field("unit", &self.unit)
            .finish()
    }
}

impl ReduceOp {
    pub const fn new(name: &'static str, op: fn(i64, i64) -> Result<i64, ArithError>, unit: i64) -> Self {
        ReduceOp {
            name,
            op,
            unit,
            sentinel_unit: false,
        }
    }

    /// Marks the unit as an out-of-range sentinel that elements may not take.
    pub const fn with_sentinel_unit(mut self) -> Self {
        self.sentinel_unit = true;
        self
    }

    pub fn max() -> Self {
        ReduceOp::new("max", |a, b| Ok(a.max(b)), MIN_SENTINEL).with_sentinel_unit()
    }

    pub fn min() -> Self {
        ReduceOp::new("min", |a, b| Ok(a.min(b)), MAX_SENTINEL).with_sentinel_unit()
    }

    pub fn sum() -> Self {
        ReduceOp::new("sum", |a, b| crate::checked(a.checked_add(b)), 0)
    }

    pub fn apply(&self, a: i64, b: i64) -> Result<i64, ArithError> {
        (self.op)(a, b)
    }

    /// `⊕/` without validating the operator against the collection kind.
    pub fn reduce_unchecked(&self, x: &Collection<i64>) -> Result<i64, ArithError> {
        x.iter().try_fold(self.unit, |acc, &a| self.apply(acc, a))
    }

    /// `⊕/`, after checking the laws the collection kind demands.
    pub fn reduce(&self, x: &Collection<i64>) -> Result<i64, ReduceError> {
        self.reduce_with_trials(x, DEFAULT_VALIDATION_TRIALS)
    }

    pub fn reduce_with_trials(&self, x: &Collection<i64>, trials: usize) -> Result<i64, ReduceError> {
        if self.sentinel_unit {
            if let Some(&a) = x.iter().find(|&&a| a == self.unit) {
                return Err(ReduceError::SentinelOperand(a));
            }
        }
        let mut pool: Vec<i64> = x.iter_counted().map(|(a, _)| *a).take(32).collect();
        pool.push(self.unit);
        pool.sort_unstable();
        pool.dedup();
        self.validate(x.kind(), &pool, trials)?;
        Ok(self.reduce_unchecked(x)?)
    }

    /// Samples `trials` triples from `pool` and checks associativity and the
    /// unit laws, plus commutativity for bags and sets and idempotence for
    /// sets.
    pub fn validate(&self, kind: CollectionKind, pool: &[i64], trials: usize) -> Result<(), ReduceError> {
        if pool.is_empty() {
            return Ok(());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_5eed);
        let e = self.unit;
        for _ in 0..trials {
            let (a, b, c) = (
                *pool.choose(&mut rng).unwrap(),
                *pool.choose(&mut rng).unwrap(),
                *pool.choose(&mut rng).unwrap(),
            );
            if self.apply(a, self.apply(b, c)?)? != self.apply(self.apply(a, b)?, c)? {
                return Err(ReduceError::NotAssociative(a, b, c));
            }
            if self.apply(a, e)? != a || self.apply(e, a)? != a {
                return Err(ReduceError::NotUnit(a));
            }
            if kind != CollectionKind::List && self.apply(a, b)? != self.apply(b, a)? {
                return Err(ReduceError::NotCommutative(a, b));
            }
            if kind == CollectionKind::Set && self.apply(a, a)? != a {
                return Err(ReduceError::NotIdempotent(a));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use CollectionKind::*;

    fn bag(xs: &[i64]) -> Collection<i64> {
        Collection::from_elems(Bag, xs.iter().copied())
    }

    fn set(xs: &[i64]) -> Collection<i64> {
        Collection::from_elems(Set, xs.iter().copied())
    }

    fn list(xs: &[i64]) -> Collection<i64> {
        Collection::from_elems(List, xs.iter().copied())
    }

    #[test]
    fn join_of_singleton() {
        for x in [list(&[3, 1, 3]), bag(&[3, 1, 3]), set(&[3, 1])] {
            let s = Collection::singleton(x.kind(), x.clone());
            assert_eq!(Collection::join(&s).unwrap(), x);
        }
    }

    #[test]
    fn union_examples() {
        assert_eq!(bag(&[1, 1]).union(&bag(&[1])).unwrap(), bag(&[1, 1, 1]));
        assert_eq!(bag(&[1, 1, 1]).len(), 3);
        assert_eq!(set(&[1]).union(&set(&[1])).unwrap(), set(&[1]));
        assert_eq!(list(&[2]).union(&list(&[1, 2])).unwrap().to_vec(), vec![2, 1, 2]);
        assert_eq!(
            bag(&[1]).union(&set(&[1])),
            Err(CollectionError::KindMismatch {
                expected: Bag,
                found: Set
            })
        );
    }

    #[test]
    fn bags_are_order_independent() {
        assert_eq!(bag(&[3, 1, 2, 1]), bag(&[1, 1, 2, 3]));
        assert_ne!(list(&[3, 1]), list(&[1, 3]));
        assert_eq!(bag(&[3, 1, 2, 1]).to_string(), "<1,1,2,3>");
        assert_eq!(set(&[3, 1, 3]).to_string(), "{1,3}");
        assert_eq!(list(&[3, 1, 3]).to_string(), "[3,1,3]");
    }

    #[test]
    fn map_respects_kind() {
        assert_eq!(bag(&[1, -1]).map(|a| a * a), bag(&[1, 1]));
        assert_eq!(set(&[1, -1]).map(|a| a * a), set(&[1]));
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(ReduceOp::max().reduce(&bag(&[])), Ok(MIN_SENTINEL));
        assert_eq!(ReduceOp::sum().reduce(&bag(&[1, 1])), Ok(2));
        // The raw fold over a set sees one copy only.
        assert_eq!(ReduceOp::sum().reduce_unchecked(&set(&[1, 1])), Ok(1));
        assert_eq!(ReduceOp::sum().reduce(&set(&[1])), Err(ReduceError::NotIdempotent(1)));
        assert_eq!(ReduceOp::max().reduce(&set(&[1, 5, -2])), Ok(5));
        assert_eq!(
            ReduceOp::max().reduce(&bag(&[MIN_SENTINEL])),
            Err(ReduceError::SentinelOperand(MIN_SENTINEL))
        );
    }

    #[test]
    fn reduce_rejects_non_commutative_on_bags() {
        let first = ReduceOp::new("first", |a, _| Ok(a), 0);
        // `first` has no two-sided unit either; give it a pool where the
        // unit check is the one that trips.
        assert!(first.reduce(&bag(&[1, 2])).is_err());
        let minus = ReduceOp::new("minus", |a, b| crate::checked(a.checked_sub(b)), 0);
        assert!(matches!(
            minus.reduce(&list(&[5, 3])),
            Err(ReduceError::NotAssociative(..) | ReduceError::NotUnit(_))
        ));
    }

    #[test]
    fn opt_examples() {
        assert_eq!(Collection::opt(7, &bag(&[])), Collection::singleton(Bag, 7));
        assert_eq!(Collection::opt(1, &set(&[1])), set(&[1]));
        let x = bag(&[2, 5]);
        let r = ReduceOp::max();
        assert_eq!(
            r.reduce(&Collection::opt(3, &x)).unwrap(),
            r.apply(3, r.reduce(&x).unwrap()).unwrap()
        );
    }

    #[test]
    fn cp_examples() {
        let got = cp(&bag(&[1, 2]), &bag(&[3])).unwrap();
        assert_eq!(got, Collection::from_elems(Bag, [(1, 3), (2, 3)]));
        assert!(cp(&bag(&[]), &bag(&[1, 2])).unwrap().is_empty());
        let got = cp(&list(&[1]), &list(&[2, 3])).unwrap();
        assert_eq!(got.to_vec(), vec![(1, 2), (1, 3)]);
        // Multiplicities multiply.
        assert_eq!(cp(&bag(&[1, 1]), &bag(&[2, 2, 2])).unwrap().len(), 6);
    }

    #[test]
    fn dist_list_examples() {
        assert_eq!(dist_list::<i64>(&[], Bag).unwrap(), Collection::singleton(Bag, vec![]));
        let got = dist_list(&[list(&[1, 2]), list(&[3])], List).unwrap();
        assert_eq!(got.to_vec(), vec![vec![1, 3], vec![2, 3]]);
        let xs = [list(&[1, 2]), list(&[3, 4, 5]), list(&[6])];
        assert_eq!(dist_list(&xs, List).unwrap(), dist_list_lift2(&xs, List).unwrap());
        assert!(dist_list(&[list(&[1])], Bag).is_err());
    }

    #[test]
    fn zero_axiom() {
        assert!(bag(&[1, 2]).satisfies_zero_axiom());
        assert!(list(&[]).satisfies_zero_axiom());
    }

    #[test]
    fn kinds_parse() {
        assert_eq!("bag".parse::<CollectionKind>().unwrap(), Bag);
        assert!("multiset".parse::<CollectionKind>().is_err());
    }
}

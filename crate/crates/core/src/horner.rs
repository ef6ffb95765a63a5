//! Semirings, the list derivation of maximum segment sum, and the generic
//! Horner's rule and segment problem over any shape.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::collections::{Collection, CollectionKind, ReduceError, ReduceOp, MAX_SENTINEL, MIN_SENTINEL};
use crate::labelled::try_scan_generic;
use crate::pruning::{prune_with_guard, segs_generic_with_guard, try_pruned_fold, PruneError, DEFAULT_GUARD};
use crate::schemes::{contents_term, try_fold};
use crate::shapes::{Node, Term};
use crate::{checked, ArithError};

/// The built-in semirings over `i64`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Semiring {
    /// `(max, +)` with the bottom sentinel as additive unit.
    MaxPlus,
    /// `(min, +)` with the top sentinel as additive unit.
    MinPlus,
    /// Ordinary `(+, *)`.
    PlusTimes,
    /// `(or, and)` on `{0, 1}`.
    BoolOrAnd,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown semiring `{0}` (expected max-plus, min-plus, plus-times or bool-or-and)")]
pub struct UnknownSemiring(pub String);

impl FromStr for Semiring {
    type Err = UnknownSemiring;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "max-plus" => Ok(Semiring::MaxPlus),
            "min-plus" => Ok(Semiring::MinPlus),
            "plus-times" => Ok(Semiring::PlusTimes),
            "bool-or-and" => Ok(Semiring::BoolOrAnd),
            other => Err(UnknownSemiring(other.to_string())),
        }
    }
}

impl fmt::Display for Semiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn bool_arg(a: i64) -> Result<bool, ArithError> {
    match a {
        0 => Ok(false),
        1 => Ok(true),
        _ => Err(ArithError::Domain(a)),
    }
}

fn max_add(a: i64, b: i64) -> Result<i64, ArithError> {
    Ok(a.max(b))
}

fn min_add(a: i64, b: i64) -> Result<i64, ArithError> {
    Ok(a.min(b))
}

fn plus(a: i64, b: i64) -> Result<i64, ArithError> {
    checked(a.checked_add(b))
}

fn or(a: i64, b: i64) -> Result<i64, ArithError> {
    Ok((bool_arg(a)? || bool_arg(b)?) as i64)
}

/// `+` where `sentinel` absorbs, so that the additive unit is a zero of the
/// multiplication. A finite sum landing on the sentinel is an overflow.
fn sentinel_plus(a: i64, b: i64, sentinel: i64) -> Result<i64, ArithError> {
    if a == sentinel || b == sentinel {
        return Ok(sentinel);
    }
    match a.checked_add(b) {
        Some(c) if c != sentinel => Ok(c),
        _ => Err(ArithError::Overflow),
    }
}

impl Semiring {
    pub const ALL: [Semiring; 4] = [
        Semiring::MaxPlus,
        Semiring::MinPlus,
        Semiring::PlusTimes,
        Semiring::BoolOrAnd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Semiring::MaxPlus => "max-plus",
            Semiring::MinPlus => "min-plus",
            Semiring::PlusTimes => "plus-times",
            Semiring::BoolOrAnd => "bool-or-and",
        }
    }

    /// `e_⊕`.
    pub fn zero(self) -> i64 {
        match self {
            Semiring::MaxPlus => MIN_SENTINEL,
            Semiring::MinPlus => MAX_SENTINEL,
            Semiring::PlusTimes | Semiring::BoolOrAnd => 0,
        }
    }

    /// `e_⊗`.
    pub fn one(self) -> i64 {
        match self {
            Semiring::MaxPlus | Semiring::MinPlus => 0,
            Semiring::PlusTimes | Semiring::BoolOrAnd => 1,
        }
    }

    pub fn add(self, a: i64, b: i64) -> Result<i64, ArithError> {
        self.add_op().apply(a, b)
    }

    pub fn mul(self, a: i64, b: i64) -> Result<i64, ArithError> {
        match self {
            Semiring::MaxPlus => sentinel_plus(a, b, MIN_SENTINEL),
            Semiring::MinPlus => sentinel_plus(a, b, MAX_SENTINEL),
            Semiring::PlusTimes => checked(a.checked_mul(b)),
            Semiring::BoolOrAnd => Ok((bool_arg(a)? && bool_arg(b)?) as i64),
        }
    }

    /// The reduction `⊕/`.
    pub fn add_op(self) -> ReduceOp {
        match self {
            Semiring::MaxPlus => ReduceOp::new("max", max_add, MIN_SENTINEL).with_sentinel_unit(),
            Semiring::MinPlus => ReduceOp::new("min", min_add, MAX_SENTINEL).with_sentinel_unit(),
            Semiring::PlusTimes => ReduceOp::new("sum", plus, 0),
            Semiring::BoolOrAnd => ReduceOp::new("or", or, 0),
        }
    }

    pub fn add_is_idempotent(self) -> bool {
        !matches!(self, Semiring::PlusTimes)
    }

    /// The `b` used when none is given: `e_⊗`.
    pub fn default_b(self) -> i64 {
        self.one()
    }

    /// Whether reductions by `⊕` are well defined over `kind`: sets demand
    /// an idempotent `⊕`.
    pub fn compatible_with(self, kind: CollectionKind) -> bool {
        kind != CollectionKind::Set || self.add_is_idempotent()
    }
}

// ---------------------------------------------------------------------------
// Lists

/// `foldr`.
pub fn foldr_list<A, E>(mut step: impl FnMut(i64, A) -> Result<A, E>, e: A, xs: &[i64]) -> Result<A, E> {
    xs.iter().rev().try_fold(e, |acc, &a| step(a, acc))
}

/// `scanr f e = foldr h [e] where h a (b:x) = f a b : (b:x)`. The result is
/// built back to front and reversed once.
pub fn scanr_list<A: Clone, E>(mut step: impl FnMut(i64, A) -> Result<A, E>, e: A, xs: &[i64]) -> Result<Vec<A>, E> {
    let mut rev = foldr_list(
        |a, mut acc: Vec<A>| {
            let b = acc.last().expect("scan is never empty").clone();
            acc.push(step(a, b)?);
            Ok(acc)
        },
        vec![e],
        xs,
    )?;
    rev.reverse();
    Ok(rev)
}

pub fn inits_list(xs: &[i64]) -> Vec<Vec<i64>> {
    (0..=xs.len()).map(|j| xs[..j].to_vec()).collect()
}

pub fn tails_list(xs: &[i64]) -> Vec<Vec<i64>> {
    (0..=xs.len()).map(|i| xs[i..].to_vec()).collect()
}

/// `concat . map inits . tails`.
pub fn segs_list(xs: &[i64]) -> Vec<Vec<i64>> {
    tails_list(xs).iter().flat_map(|t| inits_list(t)).collect()
}

fn sum(xs: &[i64]) -> Result<i64, ArithError> {
    xs.iter().try_fold(0i64, |s, &a| plus(s, a))
}

fn maximum(xs: impl IntoIterator<Item = Result<i64, ArithError>>) -> Result<i64, ArithError> {
    let mut it = xs.into_iter();
    let first = it.next().expect("maximum of a nonempty sequence")?;
    it.try_fold(first, |m, x| Ok(m.max(x?)))
}

/// `maximum . map sum . segs`, cubic. Segments are visited as slices in the
/// order `segs` lists them rather than materialised.
pub fn mss_spec(xs: &[i64]) -> Result<i64, ArithError> {
    let n = xs.len();
    maximum((0..=n).flat_map(|i| (i..=n).map(move |j| sum(&xs[i..j]))))
}

/// `maximum . map (maximum . map sum . inits) . tails`, with the sums of the
/// inits of each tail computed as running totals.
pub fn mss_quadratic(xs: &[i64]) -> Result<i64, ArithError> {
    let n = xs.len();
    maximum((0..=n).map(|i| {
        let mut run = 0i64;
        let mut best = 0i64;
        for &a in &xs[i..] {
            run = plus(run, a)?;
            best = best.max(run);
        }
        Ok(best)
    }))
}

/// `u ⊕ z = 0 ⊔ (u + z)`.
fn mps_step(u: i64, z: i64) -> Result<i64, ArithError> {
    Ok(plus(u, z)?.max(0))
}

/// `maximum . map sum . inits = foldr (⊕) 0`.
pub fn max_prefix_sum(xs: &[i64]) -> Result<i64, ArithError> {
    foldr_list(mps_step, 0, xs)
}

/// `maximum . scanr (⊕) 0`.
pub fn mss_linear(xs: &[i64]) -> Result<i64, ArithError> {
    maximum(scanr_list(mps_step, 0, xs)?.into_iter().map(Ok))
}

/// Horner's rule for lists: `foldr (u ⊕ z = e_⊗ ⊕ (u ⊗ z)) e_⊗`.
pub fn horner_list(s: Semiring, xs: &[i64]) -> Result<i64, ArithError> {
    foldr_list(|u, z| s.add(s.one(), s.mul(u, z)?), s.one(), xs)
}

/// `⊕/ . map (⊗/) . inits`, the left-hand side of Horner's rule.
pub fn horner_list_spec(s: Semiring, xs: &[i64]) -> Result<i64, ArithError> {
    inits_list(xs).iter().try_fold(s.zero(), |acc, init| {
        let prod = init.iter().try_fold(s.one(), |p, &a| s.mul(p, a))?;
        s.add(acc, prod)
    })
}

/// `a0 + x (a1 + x (a2 + ...))`.
pub fn poly_horner(coeffs: &[i64], x: i64) -> Result<i64, ArithError> {
    foldr_list(|a, acc| plus(a, checked(x.checked_mul(acc))?), 0, coeffs)
}

// ---------------------------------------------------------------------------
// Generic

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum HornerError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Reduce(ReduceError),
    #[error(transparent)]
    Prune(#[from] PruneError),
    #[error("{semiring} does not distribute over the {kind} monad: its addition is not idempotent")]
    DistributivityViolation { semiring: Semiring, kind: CollectionKind },
}

impl From<ReduceError> for HornerError {
    fn from(e: ReduceError) -> Self {
        match e {
            ReduceError::Arith(a) => HornerError::Arith(a),
            other => HornerError::Reduce(other),
        }
    }
}

/// `f = foldr (⊗) b . contents`.
pub fn generic_product_alg(s: Semiring, b: i64) -> impl Fn(Node<i64, i64>) -> Result<i64, ArithError> {
    move |n| foldr_list(|a, z| s.mul(a, z), b, &n.contents())
}

/// `(b ⊕) . f`.
pub fn horner_alg(s: Semiring, b: i64) -> impl Fn(Node<i64, i64>) -> Result<i64, ArithError> {
    let f = generic_product_alg(s, b);
    move |n| s.add(b, f(n)?)
}

/// Rejects the first operand, in preorder after `b`, that lies outside the
/// carrier, so every evaluation order reports the same one.
fn check_carrier(s: Semiring, b: i64, t: &Term) -> Result<(), ArithError> {
    if s != Semiring::BoolOrAnd {
        return Ok(());
    }
    std::iter::once(b)
        .chain(contents_term(t))
        .try_for_each(|a| bool_arg(a).map(|_| ()))
}

/// The generic Horner fold `fold ((b ⊕) . f)`.
pub fn horner_generic(s: Semiring, b: i64, t: &Term) -> Result<i64, ArithError> {
    check_carrier(s, b, t)?;
    try_fold(&horner_alg(s, b), t)
}

/// `⊕/ . M (fold_H (maybe b f)) . prune`, the specification the generic
/// Horner fold implements.
pub fn horner_by_pruning(
    s: Semiring,
    b: i64,
    t: &Term,
    kind: CollectionKind,
    guard: usize,
) -> Result<i64, HornerError> {
    check_carrier(s, b, t)?;
    let f = generic_product_alg(s, b);
    let values = prune_with_guard(t, kind, guard)?.try_map(|p| try_pruned_fold(&b, &f, p))?;
    Ok(s.add_op().reduce(&values)?)
}

/// Which side of the generic segment equation to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Via {
    /// `⊕/ . contents_L . scan ((b ⊕) . f)`.
    Scan,
    /// `⊕/ . M (fold_H (maybe b f)) . segs`.
    Brute,
}

impl FromStr for Via {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "scan" => Ok(Via::Scan),
            "brute" => Ok(Via::Brute),
            other => Err(format!("unknown method `{other}` (expected scan or brute)")),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct MssOptions {
    pub kind: CollectionKind,
    /// Run even when the semiring does not distribute over the monad.
    pub force: bool,
    pub guard: usize,
}

impl Default for MssOptions {
    fn default() -> Self {
        MssOptions {
            kind: CollectionKind::Bag,
            force: false,
            guard: DEFAULT_GUARD,
        }
    }
}

/// The generic maximum segment problem over `s`.
pub fn mss_generic(s: Semiring, b: i64, t: &Term, via: Via, opts: MssOptions) -> Result<i64, HornerError> {
    let kind = opts.kind;
    if !s.compatible_with(kind) && !opts.force {
        return Err(HornerError::DistributivityViolation { semiring: s, kind });
    }
    check_carrier(s, b, t)?;
    let values = match via {
        Via::Scan => {
            let scanned = try_scan_generic(&horner_alg(s, b), t)?;
            Collection::from_elems(kind, scanned.values().into_iter().copied())
        }
        Via::Brute => {
            let f = generic_product_alg(s, b);
            segs_generic_with_guard(t, kind, opts.guard)?.try_map(|p| try_pruned_fold(&b, &f, p))?
        }
    };
    let op = s.add_op();
    if s.compatible_with(kind) {
        Ok(op.reduce(&values)?)
    } else {
        Ok(op.reduce_unchecked(&values)?)
    }
}

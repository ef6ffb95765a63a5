//! Shape functors, the recursive [`Term`] type, and its s-expression syntax.
//!
//! Four shapes are supported, each a bifunctor `F a b` in a label type `a`
//! and a child type `b`:
//!
//! | shape   | functor               | constructors                 |
//! |---------|-----------------------|------------------------------|
//! | `list`  | `1 + a * b`           | `nil`, `(cons a t)`          |
//! | `etree` | `a + b * b`           | `(tip a)`, `(bin t u)`       |
//! | `itree` | `1 + a * b * b`       | `nilt`, `(node a t u)`       |
//! | `htree` | `a + a * b * b`       | `(leaf a)`, `(fork a t u)`   |
//!
//! All four share a single [`Node`] enum; the variant determines the shape.
//! Child slots are ordered left to right, and a label (when present) comes
//! before the children. That order is what `contents` and the distributive
//! laws enumerate.

use std::cmp::Ordering;
use std::fmt;
use std::io::Write as _;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

/// Which of the four shape functors a node or term belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ShapeKind {
    List,
    ETree,
    ITree,
    HTree,
}

impl ShapeKind {
    pub const ALL: [ShapeKind; 4] = [ShapeKind::List, ShapeKind::ETree, ShapeKind::ITree, ShapeKind::HTree];

    pub fn name(self) -> &'static str {
        match self {
            ShapeKind::List => "list",
            ShapeKind::ETree => "etree",
            ShapeKind::ITree => "itree",
            ShapeKind::HTree => "htree",
        }
    }
}

impl fmt::Display for ShapeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown shape `{0}` (expected list, etree, itree or htree)")]
pub struct UnknownShape(pub String);

impl FromStr for ShapeKind {
    type Err = UnknownShape;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "list" => Ok(ShapeKind::List),
            "etree" => Ok(ShapeKind::ETree),
            "itree" => Ok(ShapeKind::ITree),
            "htree" => Ok(ShapeKind::HTree),
            other => Err(UnknownShape(other.to_string())),
        }
    }
}

/// One layer of a shape functor: a constructor tag with its label slots
/// (`L`) and child slots (`C`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Node<L, C> {
    Nil,
    Cons(L, C),
    Tip(L),
    Bin(C, C),
    NilT,
    NodeI(L, C, C),
    Leaf(L),
    Fork(L, C, C),
}

impl<L, C> Node<L, C> {
    pub fn shape(&self) -> ShapeKind {
        match self {
            Node::Nil | Node::Cons(..) => ShapeKind::List,
            Node::Tip(_) | Node::Bin(..) => ShapeKind::ETree,
            Node::NilT | Node::NodeI(..) => ShapeKind::ITree,
            Node::Leaf(_) | Node::Fork(..) => ShapeKind::HTree,
        }
    }

    /// The functorial action on both arguments.
    pub fn bimap<L2, C2>(self, mut label: impl FnMut(L) -> L2, mut child: impl FnMut(C) -> C2) -> Node<L2, C2> {
        match self {
            Node::Nil => Node::Nil,
            Node::Cons(a, t) => Node::Cons(label(a), child(t)),
            Node::Tip(a) => Node::Tip(label(a)),
            Node::Bin(t, u) => Node::Bin(child(t), child(u)),
            Node::NilT => Node::NilT,
            Node::NodeI(a, t, u) => {
                let a = label(a);
                Node::NodeI(a, child(t), child(u))
            }
            Node::Leaf(a) => Node::Leaf(label(a)),
            Node::Fork(a, t, u) => {
                let a = label(a);
                Node::Fork(a, child(t), child(u))
            }
        }
    }

    /// `bimap` for fallible functions; slots are visited label first, then
    /// children left to right, stopping at the first error.
    pub fn try_bimap<L2, C2, E>(
        self,
        mut label: impl FnMut(L) -> Result<L2, E>,
        mut child: impl FnMut(C) -> Result<C2, E>,
    ) -> Result<Node<L2, C2>, E> {
        Ok(match self {
            Node::Nil => Node::Nil,
            Node::Cons(a, t) => Node::Cons(label(a)?, child(t)?),
            Node::Tip(a) => Node::Tip(label(a)?),
            Node::Bin(t, u) => Node::Bin(child(t)?, child(u)?),
            Node::NilT => Node::NilT,
            Node::NodeI(a, t, u) => Node::NodeI(label(a)?, child(t)?, child(u)?),
            Node::Leaf(a) => Node::Leaf(label(a)?),
            Node::Fork(a, t, u) => Node::Fork(label(a)?, child(t)?, child(u)?),
        })
    }

    pub fn map_children<C2>(self, child: impl FnMut(C) -> C2) -> Node<L, C2> {
        self.bimap(|a| a, child)
    }

    pub fn try_map_children<C2, E>(self, child: impl FnMut(C) -> Result<C2, E>) -> Result<Node<L, C2>, E> {
        self.try_bimap(Ok, child)
    }

    pub fn map_label<L2>(self, label: impl FnMut(L) -> L2) -> Node<L2, C> {
        self.bimap(label, |c| c)
    }

    pub fn as_ref(&self) -> Node<&L, &C> {
        match self {
            Node::Nil => Node::Nil,
            Node::Cons(a, t) => Node::Cons(a, t),
            Node::Tip(a) => Node::Tip(a),
            Node::Bin(t, u) => Node::Bin(t, u),
            Node::NilT => Node::NilT,
            Node::NodeI(a, t, u) => Node::NodeI(a, t, u),
            Node::Leaf(a) => Node::Leaf(a),
            Node::Fork(a, t, u) => Node::Fork(a, t, u),
        }
    }

    pub fn label(&self) -> Option<&L> {
        match self {
            Node::Cons(a, _) | Node::Tip(a) | Node::NodeI(a, ..) | Node::Leaf(a) | Node::Fork(a, ..) => Some(a),
            Node::Nil | Node::Bin(..) | Node::NilT => None,
        }
    }

    /// Child slots in positional order.
    pub fn children(&self) -> Vec<&C> {
        match self {
            Node::Nil | Node::Tip(_) | Node::NilT | Node::Leaf(_) => vec![],
            Node::Cons(_, t) => vec![t],
            Node::Bin(t, u) | Node::NodeI(_, t, u) | Node::Fork(_, t, u) => vec![t, u],
        }
    }

    pub fn arity(&self) -> usize {
        self.children().len()
    }

    /// Splits a node into its child-free skeleton and its children, in order.
    pub fn into_parts(self) -> (Node<L, ()>, Vec<C>) {
        let mut children = Vec::with_capacity(2);
        let skeleton = self.map_children(|c| children.push(c));
        (skeleton, children)
    }
}

impl<L> Node<L, ()> {
    /// Inverse of [`Node::into_parts`]. Panics if `children` does not have
    /// exactly the arity of the skeleton.
    pub fn fill<C>(self, children: Vec<C>) -> Node<L, C> {
        let mut it = children.into_iter();
        let node = self.map_children(|()| it.next().expect("too few children for node"));
        assert!(it.next().is_none(), "too many children for node");
        node
    }
}

impl<T> Node<T, T> {
    /// All element positions of a diagonal node, label first and then the
    /// children left to right.
    pub fn contents(self) -> Vec<T> {
        match self {
            Node::Nil | Node::NilT => vec![],
            Node::Tip(a) | Node::Leaf(a) => vec![a],
            Node::Cons(a, t) => vec![a, t],
            Node::Bin(t, u) => vec![t, u],
            Node::NodeI(a, t, u) | Node::Fork(a, t, u) => vec![a, t, u],
        }
    }

    /// Rebuilds a diagonal node of the same constructor from a contents
    /// list. Returns `None` if the length does not match.
    pub fn refill<U>(&self, contents: Vec<U>) -> Option<Node<U, U>> {
        let mut it = contents.into_iter();
        let mut next = || it.next();
        let node = match self {
            Node::Nil => Node::Nil,
            Node::NilT => Node::NilT,
            Node::Tip(_) => Node::Tip(next()?),
            Node::Leaf(_) => Node::Leaf(next()?),
            Node::Cons(..) => Node::Cons(next()?, next()?),
            Node::Bin(..) => Node::Bin(next()?, next()?),
            Node::NodeI(..) => Node::NodeI(next()?, next()?, next()?),
            Node::Fork(..) => Node::Fork(next()?, next()?, next()?),
        };
        match it.next() {
            None => Some(node),
            Some(_) => None,
        }
    }
}

/// A finite term of one of the four shapes: the least fixed point
/// `mu (F a)` with integer labels.
///
/// Subterms are shared through [`Arc`], so cloning a term, or handing out
/// its subterms, is cheap. Equality is structural. The total order is the
/// byte-wise order of the canonical s-expression printed by `Display`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Term(Arc<Node<i64, Term>>);

impl Term {
    /// The initial-algebra constructor `in`.
    pub fn new(node: Node<i64, Term>) -> Term {
        Term(Arc::new(node))
    }

    /// The inverse of `in`: exposes the top layer.
    pub fn out(&self) -> &Node<i64, Term> {
        &self.0
    }

    pub fn shape(&self) -> ShapeKind {
        self.0.shape()
    }

    pub fn nil() -> Term {
        Term::new(Node::Nil)
    }

    pub fn cons(a: i64, t: Term) -> Term {
        Term::new(Node::Cons(a, t))
    }

    pub fn tip(a: i64) -> Term {
        Term::new(Node::Tip(a))
    }

    pub fn bin(t: Term, u: Term) -> Term {
        Term::new(Node::Bin(t, u))
    }

    pub fn nilt() -> Term {
        Term::new(Node::NilT)
    }

    pub fn node(a: i64, t: Term, u: Term) -> Term {
        Term::new(Node::NodeI(a, t, u))
    }

    pub fn leaf(a: i64) -> Term {
        Term::new(Node::Leaf(a))
    }

    pub fn fork(a: i64, t: Term, u: Term) -> Term {
        Term::new(Node::Fork(a, t, u))
    }

    /// The list term holding `labels` in order.
    pub fn from_labels(labels: &[i64]) -> Term {
        labels.iter().rev().fold(Term::nil(), |t, &a| Term::cons(a, t))
    }

    /// Number of nodes (constructor applications).
    pub fn size(&self) -> usize {
        1 + self.out().children().into_iter().map(Term::size).sum::<usize>()
    }

    /// Height in edges; a single node has depth 0.
    pub fn depth(&self) -> usize {
        self.out()
            .children()
            .into_iter()
            .map(|c| 1 + c.depth())
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sexp(self, f)
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sexp(self, f)
    }
}

impl PartialOrd for Term {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Term {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_sexp(self, other)
    }
}

// ---------------------------------------------------------------------------
// Printing and canonical order

/// A fragment of a printed s-expression.
pub(crate) enum Piece<'a, T> {
    Text(&'static str),
    Int(i64),
    Tree(&'a T),
    /// The `E` atom of pruned terms.
    Empty,
}

/// Trees that print as s-expressions built from [`Node`] layers.
pub(crate) trait Sexp: Sized {
    /// Pushes the pieces of the top layer onto `stack` in reverse order, so
    /// that popping yields them left to right.
    fn expand<'a>(&'a self, stack: &mut Vec<Piece<'a, Self>>);

    /// The top layer, or `None` for the `E` atom.
    fn layer(&self) -> Option<&Node<i64, Self>>;

    /// True when both trees are known to share storage, so they print alike.
    fn shares(&self, _other: &Self) -> bool {
        false
    }
}

pub(crate) fn expand_node<'a, C>(node: &'a Node<i64, C>, stack: &mut Vec<Piece<'a, C>>) {
    use Piece::{Int, Text, Tree};
    let mut push = |pieces: &[Piece<'a, C>]| {
        for p in pieces.iter().rev() {
            stack.push(match p {
                Text(s) => Text(s),
                Int(n) => Int(*n),
                Tree(t) => Tree(*t),
                Piece::Empty => Piece::Empty,
            });
        }
    };
    match node {
        Node::Nil => push(&[Text("nil")]),
        Node::NilT => push(&[Text("nilt")]),
        Node::Cons(a, t) => push(&[Text("(cons "), Int(*a), Text(" "), Tree(t), Text(")")]),
        Node::Tip(a) => push(&[Text("(tip "), Int(*a), Text(")")]),
        Node::Leaf(a) => push(&[Text("(leaf "), Int(*a), Text(")")]),
        Node::Bin(t, u) => push(&[Text("(bin "), Tree(t), Text(" "), Tree(u), Text(")")]),
        Node::NodeI(a, t, u) => push(&[
            Text("(node "),
            Int(*a),
            Text(" "),
            Tree(t),
            Text(" "),
            Tree(u),
            Text(")"),
        ]),
        Node::Fork(a, t, u) => push(&[
            Text("(fork "),
            Int(*a),
            Text(" "),
            Tree(t),
            Text(" "),
            Tree(u),
            Text(")"),
        ]),
    }
}

impl Sexp for Term {
    fn expand<'a>(&'a self, stack: &mut Vec<Piece<'a, Self>>) {
        expand_node(self.out(), stack);
    }

    fn layer(&self) -> Option<&Node<i64, Self>> {
        Some(self.out())
    }

    fn shares(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }
}

pub(crate) fn write_sexp<T: Sexp>(root: &T, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut stack = vec![Piece::Tree(root)];
    while let Some(piece) = stack.pop() {
        match piece {
            Piece::Text(s) => f.write_str(s)?,
            Piece::Int(n) => write!(f, "{n}")?,
            Piece::Tree(t) => t.expand(&mut stack),
            Piece::Empty => f.write_str("E")?,
        }
    }
    Ok(())
}

/// The text a node prints before its first field. Within one shape no head
/// is a prefix of another, and `nil` against `nilt` is settled by the byte
/// after `nil`, which is always below `t`.
fn head<C>(node: &Node<i64, C>) -> &'static [u8] {
    match node {
        Node::Nil => b"nil",
        Node::NilT => b"nilt",
        Node::Cons(..) => b"(cons ",
        Node::Tip(_) => b"(tip ",
        Node::Leaf(_) => b"(leaf ",
        Node::Bin(..) => b"(bin ",
        Node::NodeI(..) => b"(node ",
        Node::Fork(..) => b"(fork ",
    }
}

/// Orders two integers by their decimal text. A shorter text that is a
/// prefix of a longer one is always followed by a space or `)`, both below
/// any digit, so plain string order is the printed order.
fn compare_decimal(a: i64, b: i64) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    let (mut x, mut y) = ([0u8; 20], [0u8; 20]);
    let lx = decimal(a, &mut x);
    let ly = decimal(b, &mut y);
    x[..lx].cmp(&y[..ly])
}

fn decimal(n: i64, buf: &mut [u8; 20]) -> usize {
    let mut cursor = &mut buf[..];
    write!(cursor, "{n}").expect("i64 fits in 20 bytes");
    20 - cursor.len()
}

/// Compares the printed forms of two trees without printing them.
///
/// Printed subtrees are balanced, so none is a proper prefix of a different
/// one; the byte order therefore decides at the first differing head, label
/// or subtree, left to right. Shared subtrees are skipped. The `E` atom
/// orders before everything.
pub(crate) fn compare_sexp<T: Sexp>(a: &T, b: &T) -> Ordering {
    let mut stack = Vec::with_capacity(16);
    stack.push((a, b));
    while let Some((x, y)) = stack.pop() {
        if x.shares(y) {
            continue;
        }
        let (nx, ny) = match (x.layer(), y.layer()) {
            (None, None) => continue,
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some(nx), Some(ny)) => (nx, ny),
        };
        let ord = head(nx).cmp(head(ny));
        if ord.is_ne() {
            return ord;
        }
        if let (Some(&la), Some(&lb)) = (nx.label(), ny.label()) {
            let ord = compare_decimal(la, lb);
            if ord.is_ne() {
                return ord;
            }
        }
        match (nx, ny) {
            (Node::Cons(_, s), Node::Cons(_, t)) => stack.push((s, t)),
            (Node::Bin(s, u), Node::Bin(t, v))
            | (Node::NodeI(_, s, u), Node::NodeI(_, t, v))
            | (Node::Fork(_, s, u), Node::Fork(_, t, v)) => {
                stack.push((u, v));
                stack.push((s, t));
            }
            _ => {}
        }
    }
    Ordering::Equal
}

// ---------------------------------------------------------------------------
// Parsing

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("shape error at byte {offset}: {message}")]
    Shape { offset: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok<'s> {
    Open,
    Close,
    Atom(&'s str),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok<'_>)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b'(' => {
                toks.push((i, Tok::Open));
                i += 1;
            }
            b')' => {
                toks.push((i, Tok::Close));
                i += 1;
            }
            c if c.is_ascii_whitespace() => i += 1,
            c if c.is_ascii_alphanumeric() || c == b'-' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'-') {
                    i += 1;
                }
                toks.push((start, Tok::Atom(&text[start..i])));
            }
            _ => {
                return Err(ParseError::Syntax {
                    offset: i,
                    message: format!("unexpected character {:?}", c as char),
                })
            }
        }
    }
    Ok(toks)
}

/// A recursive-descent parser over the token stream, generic in the tree
/// being built so that terms and pruned terms share the grammar.
pub(crate) struct Parser<'s> {
    toks: Vec<(usize, Tok<'s>)>,
    pos: usize,
    end: usize,
    shape: ShapeKind,
    allow_empty: bool,
}

impl<'s> Parser<'s> {
    pub(crate) fn new(text: &'s str, shape: ShapeKind, allow_empty: bool) -> Result<Self, ParseError> {
        Ok(Parser {
            toks: tokenize(text)?,
            pos: 0,
            end: text.len(),
            shape,
            allow_empty,
        })
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn syntax<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            offset: self.offset(),
            message: message.into(),
        })
    }

    fn next(&mut self) -> Option<(usize, Tok<'s>)> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        let offset = self.offset();
        match self.next() {
            Some((_, Tok::Atom(a))) => {
                let digits = a.strip_prefix('-').unwrap_or(a);
                if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(ParseError::Syntax {
                        offset,
                        message: format!("expected an integer, found `{a}`"),
                    });
                }
                a.parse().map_err(|_| ParseError::Syntax {
                    offset,
                    message: format!("integer `{a}` out of range"),
                })
            }
            Some(_) => Err(ParseError::Syntax {
                offset,
                message: "expected an integer".into(),
            }),
            None => self.syntax("unexpected end of input, expected an integer"),
        }
    }

    /// Parses a complete input into a tree; `mk` is the constructor and
    /// `empty` the value of the `E` atom.
    pub(crate) fn parse_all<T>(
        mut self,
        mk: &impl Fn(Node<i64, T>) -> T,
        empty: &impl Fn() -> T,
    ) -> Result<T, ParseError> {
        let t = self.tree(mk, empty)?;
        if self.pos < self.toks.len() {
            return self.syntax("trailing input after term");
        }
        Ok(t)
    }

    fn tree<T>(&mut self, mk: &impl Fn(Node<i64, T>) -> T, empty: &impl Fn() -> T) -> Result<T, ParseError> {
        let offset = self.offset();
        let shape_err = |message: String| ParseError::Shape { offset, message };
        match self.next() {
            None => self.syntax("unexpected end of input, expected a term"),
            Some((_, Tok::Close)) => Err(ParseError::Syntax {
                offset,
                message: "unexpected `)`".into(),
            }),
            Some((_, Tok::Atom(a))) => {
                let node = match a {
                    "E" if self.allow_empty => return Ok(empty()),
                    "nil" => Node::Nil,
                    "nilt" => Node::NilT,
                    "cons" | "tip" | "bin" | "node" | "leaf" | "fork" => {
                        return Err(shape_err(format!("constructor `{a}` must be parenthesised")))
                    }
                    _ => return Err(shape_err(format!("unknown atom `{a}`"))),
                };
                if node.shape() != self.shape {
                    return Err(shape_err(format!("`{a}` is not a {} constructor", self.shape)));
                }
                Ok(mk(node))
            }
            Some((_, Tok::Open)) => {
                let head_offset = self.offset();
                let head = match self.next() {
                    Some((_, Tok::Atom(a))) => a,
                    _ => {
                        return Err(ParseError::Syntax {
                            offset: head_offset,
                            message: "expected a constructor name after `(`".into(),
                        })
                    }
                };
                let skeleton: Node<(), ()> = match head {
                    "cons" => Node::Cons((), ()),
                    "tip" => Node::Tip(()),
                    "bin" => Node::Bin((), ()),
                    "node" => Node::NodeI((), (), ()),
                    "leaf" => Node::Leaf(()),
                    "fork" => Node::Fork((), (), ()),
                    "nil" | "nilt" | "E" => return Err(shape_err(format!("atom `{head}` cannot be applied"))),
                    _ => return Err(shape_err(format!("unknown constructor `{head}`"))),
                };
                if skeleton.shape() != self.shape {
                    return Err(shape_err(format!("`{head}` is not a {} constructor", self.shape)));
                }
                let label = match skeleton.label() {
                    Some(()) => self.int()?,
                    None => 0,
                };
                let mut children = Vec::with_capacity(2);
                for _ in 0..skeleton.arity() {
                    children.push(self.tree(mk, empty)?);
                }
                let node = skeleton.map_label(|()| label).fill(children);
                match self.next() {
                    Some((_, Tok::Close)) => Ok(mk(node)),
                    Some((o, _)) => Err(ParseError::Shape {
                        offset: o,
                        message: format!("too many arguments to `{head}`"),
                    }),
                    None => self.syntax(format!("unclosed `({head}`")),
                }
            }
        }
    }
}

/// Parses a term of the given shape.
pub fn parse_term(text: &str, shape: ShapeKind) -> Result<Term, ParseError> {
    Parser::new(text, shape, false)?.parse_all(&Term::new, &|| unreachable!("E is rejected"))
}

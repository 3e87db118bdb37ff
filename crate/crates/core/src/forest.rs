//! Ordered colored rooted trees and forests.
//!
//! A forest is a finite ordered word of trees; the empty word is the unit of
//! concatenation. Both the order of the trees in a forest and the order of
//! the branches at every node are significant. The module also carries the
//! forest grammar (parse/print), the canonical total order used everywhere
//! for deterministic output, the unordered quotient ([`UForest`], [`forget`])
//! and the symmetry coefficients [`sigma`] and [`pi`].
//!
//! Grammar (canonical printing uses no whitespace and omits the default
//! color):
//!
//! ```text
//! forest := ws (tree ws)*
//! tree   := color? '(' forest ')'
//! color  := [A-Za-z0-9_]+        (omitted means "0")
//! ws     := spaces and tabs
//! ```

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::rational::factorial;

/// A node color: a nonempty token over `[A-Za-z0-9_]`. Equality is exact
/// token equality; the default color is `"0"`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Color(String);

pub const DEFAULT_COLOR: &str = "0";

#[derive(Debug, Error, PartialEq, Eq)]
#[error("invalid color token {token:?}: colors are nonempty words over [A-Za-z0-9_]")]
pub struct InvalidColor {
    pub token: String,
}

fn is_color_byte(b: u8) -> bool {
    b.is_ascii_alphanumeric() || b == b'_'
}

impl Color {
    pub fn new(token: &str) -> Result<Color, InvalidColor> {
        if !token.is_empty() && token.bytes().all(is_color_byte) {
            Ok(Color(token.to_string()))
        } else {
            Err(InvalidColor {
                token: token.to_string(),
            })
        }
    }

    pub fn token(&self) -> &str {
        &self.0
    }

    pub fn is_default(&self) -> bool {
        self.0 == DEFAULT_COLOR
    }

    /// Internal color used for invisible roots. The parser can never produce
    /// it ('#' is outside the color alphabet), so it cannot collide with any
    /// user forest.
    pub(crate) fn reserved_root() -> Color {
        Color("#root".to_string())
    }
}

impl Default for Color {
    fn default() -> Self {
        Color(DEFAULT_COLOR.to_string())
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// An ordered colored rooted tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    color: Color,
    children: Vec<Tree>,
}

impl Tree {
    pub fn new(color: Color, children: Vec<Tree>) -> Tree {
        Tree { color, children }
    }

    pub fn leaf(color: Color) -> Tree {
        Tree {
            color,
            children: Vec::new(),
        }
    }

    pub fn color(&self) -> &Color {
        &self.color
    }

    pub fn children(&self) -> &[Tree] {
        &self.children
    }

    /// Number of nodes.
    pub fn order(&self) -> usize {
        1 + self.children.iter().map(Tree::order).sum::<usize>()
    }

    /// The forest of this tree's children.
    pub fn child_forest(&self) -> Forest {
        Forest::new(self.children.clone())
    }
}

/// Canonical total order on trees: by order, then color token, then children
/// lexicographically under this same order. This drives the deterministic
/// ordering of every printed linear combination and enumeration.
impl Ord for Tree {
    fn cmp(&self, other: &Tree) -> Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| self.color.cmp(&other.color))
            .then_with(|| self.children.cmp(&other.children))
    }
}

impl PartialOrd for Tree {
    fn partial_cmp(&self, other: &Tree) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An ordered forest: a finite ordered word of trees. The empty forest is the
/// unit of concatenation. Forests compare lexicographically on their trees.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Forest {
    trees: Vec<Tree>,
}

impl Forest {
    pub fn empty() -> Forest {
        Forest { trees: Vec::new() }
    }

    pub fn new(trees: Vec<Tree>) -> Forest {
        Forest { trees }
    }

    pub fn singleton(tree: Tree) -> Forest {
        Forest { trees: vec![tree] }
    }

    pub fn trees(&self) -> &[Tree] {
        &self.trees
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    /// Total number of nodes.
    pub fn order(&self) -> usize {
        self.trees.iter().map(Tree::order).sum()
    }

    /// Number of trees.
    pub fn degree(&self) -> usize {
        self.trees.len()
    }

    pub fn concat(&self, other: &Forest) -> Forest {
        let mut trees = self.trees.clone();
        trees.extend_from_slice(&other.trees);
        Forest { trees }
    }

    /// LaTeX-friendly nested-bracket word: each tree prints as
    /// `a<children>b`, with a color subscript on non-default colors, and the
    /// trees of a forest joined by thin spaces.
    pub fn to_latex(&self) -> String {
        fn tree(t: &Tree, out: &mut String) {
            out.push('a');
            if !t.color().is_default() {
                out.push_str("_{");
                out.push_str(t.color().token());
                out.push('}');
            }
            for c in t.children() {
                tree(c, out);
            }
            out.push('b');
        }
        let mut out = String::new();
        for (i, t) in self.trees.iter().enumerate() {
            if i > 0 {
                out.push_str("\\,");
            }
            tree(t, &mut out);
        }
        out
    }
}

impl From<Tree> for Forest {
    fn from(tree: Tree) -> Forest {
        Forest::singleton(tree)
    }
}

/// Canonical printing: no whitespace, default colors omitted.
impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn tree(t: &Tree, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            if !t.color().is_default() {
                f.write_str(t.color().token())?;
            }
            f.write_str("(")?;
            for c in t.children() {
                tree(c, f)?;
            }
            f.write_str(")")
        }
        for t in &self.trees {
            tree(t, f)?;
        }
        Ok(())
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Forest::singleton(self.clone()).fmt(f)
    }
}

/// Add a root node below a forest, producing a tree.
pub fn b_plus(forest: &Forest, color: Color) -> Tree {
    Tree::new(color, forest.trees().to_vec())
}

/// Remove the root of every tree, concatenating the child forests in order.
pub fn b_minus(forest: &Forest) -> Forest {
    let mut trees = Vec::new();
    for t in forest.trees() {
        trees.extend_from_slice(t.children());
    }
    Forest::new(trees)
}

// ---------------------------------------------------------------------------
// Grammar
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    /// A `)` with no matching `(`.
    UnbalancedClose,
    /// A `(` that is never closed.
    UnclosedOpen,
    /// A color token not followed by `(`.
    ColorWithoutParen,
    /// A byte that can start neither a tree nor whitespace.
    UnexpectedByte(char),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::UnbalancedClose => write!(f, "unbalanced ')'"),
            ParseErrorKind::UnclosedOpen => write!(f, "unclosed '('"),
            ParseErrorKind::ColorWithoutParen => write!(f, "color token not followed by '('"),
            ParseErrorKind::UnexpectedByte(c) => write!(f, "unexpected character {c:?}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at byte {offset}: {kind}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(&b) = self.bytes.get(self.pos) {
            if b == b' ' || b == b'\t' {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn fail(&self, offset: usize, kind: ParseErrorKind) -> ParseError {
        ParseError { offset, kind }
    }

    // forest := ws (tree ws)*  — stops at ')' or end of input.
    fn forest(&mut self) -> Result<Vec<Tree>, ParseError> {
        let mut trees = Vec::new();
        loop {
            self.skip_ws();
            match self.bytes.get(self.pos) {
                None | Some(b')') => return Ok(trees),
                _ => trees.push(self.tree()?),
            }
        }
    }

    // tree := color? '(' forest ')'
    fn tree(&mut self) -> Result<Tree, ParseError> {
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(|&b| is_color_byte(b)) {
            self.pos += 1;
        }
        let color = if self.pos == start {
            Color::default()
        } else {
            Color(
                std::str::from_utf8(&self.bytes[start..self.pos])
                    .unwrap()
                    .to_string(),
            )
        };
        match self.bytes.get(self.pos) {
            Some(b'(') => {
                let open = self.pos;
                self.pos += 1;
                let children = self.forest()?;
                match self.bytes.get(self.pos) {
                    Some(b')') => {
                        self.pos += 1;
                        Ok(Tree::new(color, children))
                    }
                    _ => Err(self.fail(open, ParseErrorKind::UnclosedOpen)),
                }
            }
            _ if self.pos > start => Err(self.fail(self.pos, ParseErrorKind::ColorWithoutParen)),
            Some(&b) => Err(self.fail(self.pos, ParseErrorKind::UnexpectedByte(b as char))),
            None => unreachable!("forest() stops at end of input"),
        }
    }
}

/// Parse a forest in the grammar above. Errors carry the byte offset of the
/// offending input.
pub fn parse_forest(input: &str) -> Result<Forest, ParseError> {
    let mut p = Parser {
        bytes: input.as_bytes(),
        pos: 0,
    };
    let trees = p.forest()?;
    match p.bytes.get(p.pos) {
        None => Ok(Forest::new(trees)),
        Some(b')') => Err(p.fail(p.pos, ParseErrorKind::UnbalancedClose)),
        Some(&b) => Err(p.fail(p.pos, ParseErrorKind::UnexpectedByte(b as char))),
    }
}

impl FromStr for Forest {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Forest, ParseError> {
        parse_forest(s)
    }
}

// ---------------------------------------------------------------------------
// The unordered quotient
// ---------------------------------------------------------------------------

/// An unordered forest: the equivalence class of ordered forests under
/// permutations of the trees of the forest and of the branches at every
/// node. Stored as the canonically least ordered representative.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UForest {
    representative: Forest,
}

impl UForest {
    pub fn empty() -> UForest {
        UForest {
            representative: Forest::empty(),
        }
    }

    pub fn representative(&self) -> &Forest {
        &self.representative
    }

    pub fn order(&self) -> usize {
        self.representative.order()
    }

    pub fn degree(&self) -> usize {
        self.representative.degree()
    }
}

impl fmt::Display for UForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.representative.fmt(f)
    }
}

fn canonical_tree(t: &Tree) -> Tree {
    let mut children: Vec<Tree> = t.children().iter().map(canonical_tree).collect();
    children.sort();
    Tree::new(t.color().clone(), children)
}

/// Project an ordered forest onto its unordered class.
pub fn forget(f: &Forest) -> UForest {
    let mut trees: Vec<Tree> = f.trees().iter().map(canonical_tree).collect();
    trees.sort();
    UForest {
        representative: Forest::new(trees),
    }
}

/// `true` when the two forests differ only by tree/branch permutations.
pub fn equivalent(a: &Forest, b: &Forest) -> bool {
    forget(a) == forget(b)
}

fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head.clone());
            out.push(tail);
        }
    }
    out
}

fn tree_variants(t: &Tree) -> Vec<Tree> {
    let child_variants: Vec<Vec<Tree>> = t.children().iter().map(tree_variants).collect();
    let mut selections = vec![Vec::new()];
    for options in &child_variants {
        let mut next = Vec::new();
        for sel in &selections {
            for opt in options {
                let mut s = sel.clone();
                s.push(opt.clone());
                next.push(s);
            }
        }
        selections = next;
    }
    let mut out = Vec::new();
    for sel in selections {
        for perm in permutations(&sel) {
            out.push(Tree::new(t.color().clone(), perm));
        }
    }
    out
}

/// The set of all ordered forests equivalent to `f` (its `~`-orbit).
pub fn orbit(f: &Forest) -> BTreeSet<Forest> {
    let variants: Vec<Vec<Tree>> = f.trees().iter().map(tree_variants).collect();
    let mut selections = vec![Vec::new()];
    for options in &variants {
        let mut next = Vec::new();
        for sel in &selections {
            for opt in options {
                let mut s = sel.clone();
                s.push(opt.clone());
                next.push(s);
            }
        }
        selections = next;
    }
    let mut out = BTreeSet::new();
    for sel in selections {
        for perm in permutations(&sel) {
            out.insert(Forest::new(perm));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Symmetry coefficients
// ---------------------------------------------------------------------------

/// The classical symmetry coefficient: the number of tree/branch permutations
/// leaving the forest fixed (the isotropy subgroup size).
///
/// Recursion: `sigma(1) = 1`; for a forest the product of the trees' sigmas
/// times `mu!` for every group of mutually equivalent trees; for a tree the
/// sigma of its child forest.
pub fn sigma(f: &Forest) -> BigUint {
    fn sigma_tree(t: &Tree) -> BigUint {
        sigma(&t.child_forest())
    }
    let mut acc = BigUint::one();
    for t in f.trees() {
        acc *= sigma_tree(t);
    }
    // multiplicities of ~-equivalent trees
    let mut classes: Vec<(UForest, usize)> = Vec::new();
    for t in f.trees() {
        let class = forget(&Forest::singleton(t.clone()));
        match classes.iter_mut().find(|(c, _)| *c == class) {
            Some((_, n)) => *n += 1,
            None => classes.push((class, 1)),
        }
    }
    for (_, n) in classes {
        acc *= factorial(n);
    }
    acc
}

/// The total number of tree/branch permutations acting on the forest: `k!`
/// times the product of the trees' own permutation counts. Satisfies
/// `pi = sigma * orbit size`.
pub fn pi(f: &Forest) -> BigUint {
    fn pi_tree(t: &Tree) -> BigUint {
        pi(&t.child_forest())
    }
    let mut acc = factorial(f.degree());
    for t in f.trees() {
        acc *= pi_tree(t);
    }
    acc
}

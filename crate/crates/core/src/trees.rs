//! Planar binary trees with labelled internal vertices.
//!
//! A tree of degree `n` has `n` internal vertices, each carrying a generator
//! label. Trees of degree at least one form the basis of the free dendriform
//! algebra; the bare leaf only shows up as the formal unit inside the product
//! recursions of [`crate::freedend`].
//!
//! The canonical encoding is `·` for the leaf and `(L xa R)` for a vertex
//! labelled `a` with subtrees `L`, `R`. Trees compare by degree first and then
//! lexicographically on that encoding.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const LEAF_SYMBOL: &str = "·";

#[derive(Clone)]
pub struct Tree(Option<Arc<Node>>);

struct Node {
    left: Tree,
    label: u32,
    right: Tree,
    degree: usize,
    code: Box<str>,
}

impl Tree {
    pub fn leaf() -> Tree {
        Tree(None)
    }

    /// Grafts `left` and `right` onto a new root labelled `label`. No range
    /// check on the label; see [`graft`] for the checked version.
    pub fn node(left: Tree, label: u32, right: Tree) -> Tree {
        let degree = left.degree() + right.degree() + 1;
        let code =
            format!("({} x{} {})", left.encoding(), label, right.encoding()).into_boxed_str();
        Tree(Some(Arc::new(Node {
            left,
            label,
            right,
            degree,
            code,
        })))
    }

    /// The one-vertex tree `Y_a`.
    pub fn generator(label: u32) -> Tree {
        Tree::node(Tree::leaf(), label, Tree::leaf())
    }

    pub fn is_leaf(&self) -> bool {
        self.0.is_none()
    }

    pub fn degree(&self) -> usize {
        self.0.as_ref().map_or(0, |n| n.degree)
    }

    pub fn encoding(&self) -> &str {
        self.0.as_ref().map_or(LEAF_SYMBOL, |n| &n.code)
    }

    /// `(left, label, right)` for an internal root, `None` for the leaf.
    pub fn split(&self) -> Option<(&Tree, u32, &Tree)> {
        self.0.as_ref().map(|n| (&n.left, n.label, &n.right))
    }

    pub fn max_label(&self) -> Option<u32> {
        let (l, a, r) = self.split()?;
        Some(
            [l.max_label(), Some(a), r.max_label()]
                .into_iter()
                .flatten()
                .max()
                .unwrap(),
        )
    }

    pub fn labels_below(&self, generators: u32) -> bool {
        self.max_label().is_none_or(|m| m < generators)
    }

    /// Parses the canonical encoding.
    pub fn parse(s: &str) -> Result<Tree> {
        let mut p = Parser { src: s, pos: 0 };
        let t = p.tree()?;
        if p.pos != s.len() {
            return Err(Error::Parse(format!("trailing input in tree {s:?}")));
        }
        Ok(t)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn expect(&mut self, tok: &str) -> Result<()> {
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            Ok(())
        } else {
            Err(Error::Parse(format!(
                "expected {tok:?} at byte {} of {:?}",
                self.pos, self.src
            )))
        }
    }

    fn tree(&mut self) -> Result<Tree> {
        if self.rest().starts_with(LEAF_SYMBOL) {
            self.pos += LEAF_SYMBOL.len();
            return Ok(Tree::leaf());
        }
        self.expect("(")?;
        let left = self.tree()?;
        self.expect(" x")?;
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        // canonical labels have no leading zeros
        let text = &self.rest()[..digits];
        if digits == 0 || (digits > 1 && text.starts_with('0')) {
            return Err(Error::Parse(format!("bad label at byte {}", self.pos)));
        }
        let label = text
            .parse::<u32>()
            .map_err(|e| Error::Parse(e.to_string()))?;
        self.pos += digits;
        self.expect(" ")?;
        let right = self.tree()?;
        self.expect(")")?;
        Ok(Tree::node(left, label, right))
    }
}

impl PartialEq for Tree {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Some(a), Some(b)) => Arc::ptr_eq(a, b) || a.code == b.code,
            (None, None) => true,
            _ => false,
        }
    }
}

impl Eq for Tree {}

impl Hash for Tree {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.encoding().hash(state);
    }
}

impl Ord for Tree {
    fn cmp(&self, other: &Self) -> Ordering {
        tree_compare(self, other)
    }
}

impl PartialOrd for Tree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.encoding())
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tree({})", self.encoding())
    }
}

impl Serialize for Tree {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.encoding())
    }
}

impl<'de> Deserialize<'de> for Tree {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Tree::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// Degree first, then the canonical encoding.
pub fn tree_compare(s: &Tree, t: &Tree) -> Ordering {
    s.degree()
        .cmp(&t.degree())
        .then_with(|| s.encoding().cmp(t.encoding()))
}

/// Checked grafting for an algebra on `generators` generators.
pub fn graft(left: Tree, label: u32, right: Tree, generators: u32) -> Result<Tree> {
    if label >= generators {
        return Err(Error::LabelOutOfRange { label, generators });
    }
    Ok(Tree::node(left, label, right))
}

/// Catalan numbers through `c_n = sum_{i+j=n-1} c_i c_j`.
pub fn catalan(n: usize) -> u64 {
    let mut c = vec![1u64; n + 1];
    for m in 1..=n {
        c[m] = (0..m).map(|i| c[i] * c[m - 1 - i]).sum();
    }
    c[n]
}

/// Number of labelled trees of degree `n` on `g` generators.
pub fn free_dimension(n: usize, g: u32) -> u64 {
    catalan(n) * (g as u64).pow(n as u32)
}

fn shapes(n: usize, g: u32, memo: &mut Vec<Option<Vec<Tree>>>) -> Vec<Tree> {
    if let Some(v) = &memo[n] {
        return v.clone();
    }
    let out = if n == 0 {
        vec![Tree::leaf()]
    } else {
        let mut out = Vec::new();
        for i in 0..n {
            let lefts = shapes(i, g, memo);
            let rights = shapes(n - 1 - i, g, memo);
            for l in &lefts {
                for a in 0..g {
                    for r in &rights {
                        out.push(Tree::node(l.clone(), a, r.clone()));
                    }
                }
            }
        }
        out
    };
    memo[n] = Some(out.clone());
    out
}

/// All trees of degree `n` with labels below `g`, in canonical order.
pub fn enumerate_trees(n: usize, g: u32) -> Result<Vec<Tree>> {
    if n == 0 {
        return Err(Error::EmptyDegree);
    }
    let mut memo = vec![None; n + 1];
    let mut out = shapes(n, g, &mut memo);
    out.sort();
    Ok(out)
}

/// All trees of degree `1..=max_degree`, in canonical order.
pub fn trees_up_to(max_degree: usize, g: u32) -> Vec<Tree> {
    let mut memo = vec![None; max_degree + 1];
    let mut out = Vec::new();
    for n in 1..=max_degree {
        let mut level = shapes(n, g, &mut memo);
        level.sort();
        out.extend(level);
    }
    out
}

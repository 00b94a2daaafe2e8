//! The free dendriform algebra `Dend(X)` over `F_p` on `g` generators.
//!
//! Basis: planar binary trees of degree ≥ 1 with labels in `0..g`. On basis
//! trees `s = s_l ∨_a s_r`, `t = t_l ∨_b t_r` the products are
//!
//! ```text
//!   s ≺ t = s_l ∨_a (s_r ⋆ t)
//!   s ≻ t = (s ⋆ t_l) ∨_b t_r
//!   s ⋆ t = s ≺ t + s ≻ t
//! ```
//!
//! with the bare leaf `|` acting as a formal unit inside the recursion only:
//! `s ≺ | = s`, `| ≺ t = 0`, `| ≻ t = t`, `s ≻ | = 0`, `| ⋆ t = t ⋆ | = t`.
//! These formulas are not trusted: the test suite checks the dendriform axioms
//! on every basis triple up to degree 6.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use rand::Rng;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::field::{FpScalar, Modulus};
use crate::structure::{
    power, Dendriform, InducedLie, Lie, PreLie, PreLieOf, SampleRng, StarOf, VectorSpace,
};
use crate::trees::{catalan, Tree};

/// A finitely supported combination of basis trees.
#[derive(Clone, PartialEq, Eq)]
pub struct DendElem {
    terms: BTreeMap<Tree, u64>,
    modulus: Modulus,
    generators: u32,
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    tree: Tree,
    coeff: i64,
}

impl DendElem {
    pub fn zero(modulus: Modulus, generators: u32) -> Self {
        DendElem {
            terms: BTreeMap::new(),
            modulus,
            generators,
        }
    }

    pub fn from_tree(tree: Tree, modulus: Modulus, generators: u32) -> Result<Self> {
        Self::from_terms([(tree, 1)], modulus, generators)
    }

    /// Builds an element from `(tree, integer coefficient)` pairs, summing
    /// repeats and dropping zeros.
    pub fn from_terms(
        terms: impl IntoIterator<Item = (Tree, i64)>,
        modulus: Modulus,
        generators: u32,
    ) -> Result<Self> {
        let mut out = DendElem::zero(modulus, generators);
        for (t, c) in terms {
            if t.is_leaf() {
                return Err(Error::UnitNotBasis);
            }
            if !t.labels_below(generators) {
                return Err(Error::LabelOutOfRange {
                    label: t.max_label().unwrap_or(0),
                    generators,
                });
            }
            out.add_term(t, modulus.reduce(c));
        }
        Ok(out)
    }

    fn add_term(&mut self, t: Tree, c: u64) {
        if c == 0 {
            return;
        }
        let m = self.modulus;
        match self.terms.entry(t) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = m.add(*o.get(), c);
                if sum == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Wraps already reduced, zero-free terms.
    pub(crate) fn from_map(terms: BTreeMap<Tree, u64>, modulus: Modulus, generators: u32) -> Self {
        debug_assert!(terms.values().all(|c| *c != 0 && *c < modulus.get()));
        DendElem {
            terms,
            modulus,
            generators,
        }
    }

    pub(crate) fn as_map(&self) -> &BTreeMap<Tree, u64> {
        &self.terms
    }

    fn from_accumulator(acc: HashMap<Tree, u64>, modulus: Modulus, generators: u32) -> Self {
        DendElem {
            terms: acc.into_iter().filter(|(_, c)| *c != 0).collect(),
            modulus,
            generators,
        }
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn generators(&self) -> u32 {
        self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical tree order.
    pub fn terms(&self) -> impl Iterator<Item = (&Tree, u64)> {
        self.terms.iter().map(|(t, c)| (t, *c))
    }

    pub fn coefficient(&self, t: &Tree) -> FpScalar {
        FpScalar::from_residue(self.terms.get(t).copied().unwrap_or(0), self.modulus)
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().next().map(Tree::degree)
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(Tree::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.min_degree() == self.max_degree()
    }

    pub fn component(&self, degree: usize) -> DendElem {
        self.filter(|t| t.degree() == degree)
    }

    /// Drops every term of degree above `d`.
    pub fn truncate(&self, d: usize) -> DendElem {
        self.filter(|t| t.degree() <= d)
    }

    fn filter(&self, keep: impl Fn(&Tree) -> bool) -> DendElem {
        DendElem {
            terms: self
                .terms
                .iter()
                .filter(|(t, _)| keep(t))
                .map(|(t, c)| (t.clone(), *c))
                .collect(),
            modulus: self.modulus,
            generators: self.generators,
        }
    }

    fn check_compatible(&self, other: &DendElem) -> Result<()> {
        if self.modulus != other.modulus || self.generators != other.generators {
            return Err(Error::AlgebraMismatch {
                left_p: self.modulus.get(),
                left_g: self.generators,
                right_p: other.modulus.get(),
                right_g: other.generators,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &DendElem) -> Result<DendElem> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (t, c) in other.terms() {
            out.add_term(t.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &DendElem) -> Result<DendElem> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> DendElem {
        self.scale(self.modulus.neg(1))
    }

    pub fn scale(&self, c: u64) -> DendElem {
        let m = self.modulus;
        let c = c % m.get();
        if c == 0 {
            return DendElem::zero(m, self.generators);
        }
        DendElem {
            terms: self
                .terms
                .iter()
                .map(|(t, v)| (t.clone(), m.mul(*v, c)))
                .collect(),
            modulus: m,
            generators: self.generators,
        }
    }

    /// JSON form: `[{"tree": "...", "coeff": n}, ...]` in canonical order.
    pub fn to_json(&self) -> Value {
        let recs: Vec<TermRecord> = self
            .terms()
            .map(|(t, c)| TermRecord {
                tree: t.clone(),
                coeff: c as i64,
            })
            .collect();
        serde_json::to_value(recs).expect("term records serialize")
    }

    pub fn from_json(v: &Value, modulus: Modulus, generators: u32) -> Result<Self> {
        let recs: Vec<TermRecord> = serde_json::from_value(v.clone())?;
        DendElem::from_terms(
            recs.into_iter().map(|r| (r.tree, r.coeff)),
            modulus,
            generators,
        )
    }
}

impl fmt::Debug for DendElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for DendElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (t, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}·{t}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Op {
    Prec,
    Succ,
    Star,
}

type Combination = Arc<Vec<(Tree, u64)>>;

/// The free dendriform algebra on `g` generators over `F_p`, optionally
/// truncated: with truncation `d`, products of degree above `d` are dropped,
/// which computes in the quotient by the ideal of trees of degree `> d`.
pub struct FreeDend {
    modulus: Modulus,
    generators: u32,
    truncation: Option<usize>,
    cache: Mutex<HashMap<(Op, Tree, Tree), Combination>>,
}

impl FreeDend {
    pub fn new(modulus: Modulus, generators: u32) -> Self {
        FreeDend {
            modulus,
            generators,
            truncation: None,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn truncated(modulus: Modulus, generators: u32, d: usize) -> Self {
        FreeDend {
            truncation: Some(d),
            ..FreeDend::new(modulus, generators)
        }
    }

    pub fn generators(&self) -> u32 {
        self.generators
    }

    pub fn truncation(&self) -> Option<usize> {
        self.truncation
    }

    pub fn zero(&self) -> DendElem {
        DendElem::zero(self.modulus, self.generators)
    }

    /// The generator `Y_a` as an element.
    pub fn generator(&self, a: u32) -> Result<DendElem> {
        if a >= self.generators {
            return Err(Error::LabelOutOfRange {
                label: a,
                generators: self.generators,
            });
        }
        DendElem::from_tree(Tree::generator(a), self.modulus, self.generators)
    }

    pub fn basis(&self, t: Tree) -> Result<DendElem> {
        DendElem::from_tree(t, self.modulus, self.generators)
    }

    /// Degree-`n` dimension, `Catalan(n)·g^n`.
    pub fn dimension(&self, n: usize) -> u64 {
        catalan(n) * (self.generators as u64).pow(n as u32)
    }

    fn check(&self, x: &DendElem) -> Result<()> {
        if x.modulus != self.modulus || x.generators != self.generators {
            return Err(Error::AlgebraMismatch {
                left_p: self.modulus.get(),
                left_g: self.generators,
                right_p: x.modulus.get(),
                right_g: x.generators,
            });
        }
        Ok(())
    }

    fn cached(&self, op: Op, s: &Tree, t: &Tree) -> Combination {
        let key = (op, s.clone(), t.clone());
        if let Some(hit) = self.cache.lock().unwrap().get(&key) {
            return hit.clone();
        }
        let value = Arc::new(match op {
            Op::Prec => self.compute_prec(s, t),
            Op::Succ => self.compute_succ(s, t),
            Op::Star => self.compute_star(s, t),
        });
        self.cache.lock().unwrap().insert(key, value.clone());
        value
    }

    fn compute_prec(&self, s: &Tree, t: &Tree) -> Vec<(Tree, u64)> {
        let Some((sl, a, sr)) = s.split() else {
            return Vec::new();
        };
        if t.is_leaf() {
            return vec![(s.clone(), 1)];
        }
        self.cached(Op::Star, sr, t)
            .iter()
            .map(|(u, c)| (Tree::node(sl.clone(), a, u.clone()), *c))
            .collect()
    }

    fn compute_succ(&self, s: &Tree, t: &Tree) -> Vec<(Tree, u64)> {
        let Some((tl, b, tr)) = t.split() else {
            return Vec::new();
        };
        if s.is_leaf() {
            return vec![(t.clone(), 1)];
        }
        self.cached(Op::Star, s, tl)
            .iter()
            .map(|(u, c)| (Tree::node(u.clone(), b, tr.clone()), *c))
            .collect()
    }

    fn compute_star(&self, s: &Tree, t: &Tree) -> Vec<(Tree, u64)> {
        if s.is_leaf() {
            return vec![(t.clone(), 1)];
        }
        if t.is_leaf() {
            return vec![(s.clone(), 1)];
        }
        let m = self.modulus;
        let mut acc: BTreeMap<Tree, u64> = BTreeMap::new();
        for op in [Op::Prec, Op::Succ] {
            for (u, c) in self.cached(op, s, t).iter() {
                let e = acc.entry(u.clone()).or_insert(0);
                *e = m.add(*e, *c);
            }
        }
        acc.into_iter().filter(|(_, c)| *c != 0).collect()
    }

    fn bilinear(&self, op: Op, x: &DendElem, y: &DendElem) -> Result<DendElem> {
        self.check(x)?;
        self.check(y)?;
        let m = self.modulus;
        let mut acc: HashMap<Tree, u64> = HashMap::new();
        for (s, a) in x.terms() {
            for (t, b) in y.terms() {
                if self
                    .truncation
                    .is_some_and(|d| s.degree() + t.degree() > d)
                {
                    continue;
                }
                let ab = m.mul(a, b);
                for (u, c) in self.cached(op, s, t).iter() {
                    let e = acc.entry(u.clone()).or_insert(0);
                    *e = m.add(*e, m.mul(ab, *c));
                }
            }
        }
        Ok(DendElem::from_accumulator(acc, m, self.generators))
    }

    /// `x ≺ y`
    pub fn dend_left(&self, x: &DendElem, y: &DendElem) -> Result<DendElem> {
        self.bilinear(Op::Prec, x, y)
    }

    /// `x ≻ y`
    pub fn dend_right(&self, x: &DendElem, y: &DendElem) -> Result<DendElem> {
        self.bilinear(Op::Succ, x, y)
    }

    /// `x ⋆ y`
    pub fn star(&self, x: &DendElem, y: &DendElem) -> Result<DendElem> {
        self.bilinear(Op::Star, x, y)
    }

    /// `{x, y} = x ≻ y − y ≺ x`
    pub fn prelie_bracket(&self, x: &DendElem, y: &DendElem) -> Result<DendElem> {
        PreLieOf(self).prelie(x, y)
    }

    /// `[x, y] = {x, y} − {y, x}`
    pub fn lie_bracket(&self, x: &DendElem, y: &DendElem) -> Result<DendElem> {
        InducedLie(&PreLieOf(self)).bracket(x, y)
    }

    /// `x^{⋆p}`, left-nested. `p` must be the characteristic.
    pub fn star_power(&self, x: &DendElem, p: u64) -> Result<DendElem> {
        self.check(x)?;
        if p != self.modulus.get() {
            return Err(Error::CharacteristicMismatch {
                expected: self.modulus.get(),
                found: p,
            });
        }
        power(&StarOf(self), x, p)
    }

    /// Uniformly random tree of degree `n`.
    pub fn random_tree(&self, rng: &mut SampleRng, n: usize) -> Tree {
        if n == 0 {
            return Tree::leaf();
        }
        // left subtree size i with weight C_i C_{n-1-i}
        let total = catalan(n);
        let mut pick = rng.random_range(0..total);
        let mut i = 0;
        loop {
            let w = catalan(i) * catalan(n - 1 - i);
            if pick < w {
                break;
            }
            pick -= w;
            i += 1;
        }
        let left = self.random_tree(rng, i);
        let label = rng.random_range(0..self.generators);
        let right = self.random_tree(rng, n - 1 - i);
        Tree::node(left, label, right)
    }
}

impl VectorSpace for FreeDend {
    type Elem = DendElem;

    fn modulus(&self) -> Modulus {
        self.modulus
    }

    fn zero(&self) -> DendElem {
        FreeDend::zero(self)
    }

    fn add(&self, a: &DendElem, b: &DendElem) -> Result<DendElem> {
        a.add(b)
    }

    fn scale(&self, c: u64, a: &DendElem) -> DendElem {
        a.scale(c)
    }

    fn is_zero(&self, a: &DendElem) -> bool {
        a.is_zero()
    }

    fn graded_basis(&self, lo: usize, hi: usize) -> Vec<(DendElem, usize)> {
        let hi = self.truncation.map_or(hi, |d| hi.min(d));
        crate::trees::trees_up_to(hi, self.generators)
            .into_iter()
            .filter(|t| t.degree() >= lo)
            .map(|t| {
                let n = t.degree();
                (self.basis(t).expect("enumerated trees are valid"), n)
            })
            .collect()
    }

    /// One to three terms with nonzero coefficients in degrees `lo..=hi`.
    fn random_element(&self, rng: &mut SampleRng, lo: usize, hi: usize) -> DendElem {
        let lo = lo.max(1);
        if self.generators == 0 || hi < lo {
            return self.zero();
        }
        let p = self.modulus.get();
        let k = rng.random_range(1..=3);
        let mut terms = Vec::with_capacity(k);
        for _ in 0..k {
            let n = rng.random_range(lo..=hi);
            let t = self.random_tree(rng, n);
            let c = rng.random_range(1..p) as i64;
            terms.push((t, c));
        }
        DendElem::from_terms(terms, self.modulus, self.generators).expect("valid random terms")
    }

    fn describe(&self, a: &DendElem) -> Value {
        a.to_json()
    }
}

impl Dendriform for FreeDend {
    fn prec(&self, x: &DendElem, y: &DendElem) -> Result<DendElem> {
        self.dend_left(x, y)
    }

    fn succ(&self, x: &DendElem, y: &DendElem) -> Result<DendElem> {
        self.dend_right(x, y)
    }

    fn star(&self, x: &DendElem, y: &DendElem) -> Result<DendElem> {
        FreeDend::star(self, x, y)
    }
}

/// A single multiplication operator.
#[derive(Clone, Debug)]
pub enum MulOp {
    /// `L_x : y ↦ x ≻ y`
    Left(DendElem),
    /// `R_x : y ↦ y ≺ x`
    Right(DendElem),
}

/// A linear combination of composites of `L_x`/`R_x` operators.
///
/// Each word is stored outermost first, so `[L_x, R_x]` means `L_x ∘ R_x`.
#[derive(Clone, Debug)]
pub struct DendOperator {
    modulus: Modulus,
    words: Vec<(u64, Vec<MulOp>)>,
}

pub fn op_l(x: &DendElem) -> DendOperator {
    DendOperator {
        modulus: x.modulus,
        words: vec![(1, vec![MulOp::Left(x.clone())])],
    }
}

pub fn op_r(x: &DendElem) -> DendOperator {
    DendOperator {
        modulus: x.modulus,
        words: vec![(1, vec![MulOp::Right(x.clone())])],
    }
}

impl DendOperator {
    pub fn identity(modulus: Modulus) -> Self {
        DendOperator {
            modulus,
            words: vec![(1, Vec::new())],
        }
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &DendOperator) -> DendOperator {
        let m = self.modulus;
        let mut words = Vec::with_capacity(self.words.len() * other.words.len());
        for (a, u) in &self.words {
            for (b, v) in &other.words {
                let mut w = u.clone();
                w.extend(v.iter().cloned());
                words.push((m.mul(*a, *b), w));
            }
        }
        DendOperator { modulus: m, words }
    }

    pub fn add(&self, other: &DendOperator) -> DendOperator {
        let mut words = self.words.clone();
        words.extend(other.words.iter().cloned());
        DendOperator {
            modulus: self.modulus,
            words,
        }
    }

    pub fn scale(&self, c: u64) -> DendOperator {
        let m = self.modulus;
        DendOperator {
            modulus: m,
            words: self
                .words
                .iter()
                .map(|(a, w)| (m.mul(*a, c % m.get()), w.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &DendOperator) -> DendOperator {
        self.add(&other.scale(self.modulus.neg(1)))
    }

    pub fn pow(&self, n: u32) -> DendOperator {
        let mut acc = DendOperator::identity(self.modulus);
        for _ in 0..n {
            acc = acc.compose(self);
        }
        acc
    }

    /// Number of stored words (before any cancellation).
    pub fn word_count(&self) -> usize {
        self.words.len()
    }

    pub fn apply(&self, alg: &FreeDend, y: &DendElem) -> Result<DendElem> {
        let mut acc = alg.zero();
        for (c, word) in &self.words {
            if *c == 0 {
                continue;
            }
            let mut v = y.clone();
            for op in word.iter().rev() {
                v = match op {
                    MulOp::Left(x) => alg.dend_right(x, &v)?,
                    MulOp::Right(x) => alg.dend_left(&v, x)?,
                };
            }
            acc = acc.add(&v.scale(*c))?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::trees_up_to;

    fn alg(p: u64, g: u32) -> FreeDend {
        FreeDend::new(Modulus::new(p).unwrap(), g)
    }

    fn t(s: &str) -> Tree {
        Tree::parse(s).unwrap()
    }

    const LEFT_COMB: &str = "((· x0 ·) x0 ·)";
    const RIGHT_COMB: &str = "(· x0 (· x0 ·))";

    #[test]
    fn degree_two_products() {
        let a = alg(3, 1);
        let y = a.generator(0).unwrap();
        let l = a.dend_left(&y, &y).unwrap();
        assert_eq!(l.to_json(), serde_json::json!([{"tree": RIGHT_COMB, "coeff": 1}]));
        let r = a.dend_right(&y, &y).unwrap();
        assert_eq!(r.to_json(), serde_json::json!([{"tree": LEFT_COMB, "coeff": 1}]));
        let s = a.star(&y, &y).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.coefficient(&t(LEFT_COMB)).value(), 1);
        assert_eq!(s.coefficient(&t(RIGHT_COMB)).value(), 1);
        let b = a.prelie_bracket(&y, &y).unwrap();
        assert_eq!(b.coefficient(&t(LEFT_COMB)).value(), 1);
        assert_eq!(b.coefficient(&t(RIGHT_COMB)).value(), 2);
        assert!(a.lie_bracket(&y, &y).unwrap().is_zero());
        let z = a.zero();
        assert!(a.dend_left(&y, &z).unwrap().is_zero());
        assert!(a.dend_right(&z, &y).unwrap().is_zero());
        assert!(a.star(&y, &z).unwrap().is_zero());
        assert!(a.prelie_bracket(&y, &z).unwrap().is_zero());
    }

    #[test]
    fn degree_three_star_is_all_five_trees() {
        let a = alg(5, 1);
        let y = a.generator(0).unwrap();
        let yy = a.star(&y, &y).unwrap();
        let lhs = a.star(&yy, &y).unwrap();
        let rhs = a.star(&y, &yy).unwrap();
        assert_eq!(lhs, rhs);
        // Y⋆Y⋆Y hits every degree-3 tree once
        assert_eq!(lhs.len(), 5);
        assert!(lhs.terms().all(|(_, c)| c == 1));
        let l1 = a.dend_left(&a.dend_left(&y, &y).unwrap(), &y).unwrap();
        let l2 = a.dend_left(&y, &yy).unwrap();
        assert_eq!(l1, l2);
        let m1 = a.dend_left(&a.dend_right(&y, &y).unwrap(), &y).unwrap();
        let m2 = a.dend_right(&y, &a.dend_left(&y, &y).unwrap()).unwrap();
        assert_eq!(m1, m2);
    }

    #[test]
    fn axioms_exhaustive_small() {
        for p in [2, 3] {
            let a = alg(p, 2);
            let basis: Vec<_> = trees_up_to(3, 2)
                .into_iter()
                .map(|t| a.basis(t).unwrap())
                .collect();
            for x in &basis {
                for y in &basis {
                    for z in &basis {
                        if x.max_degree().unwrap() + y.max_degree().unwrap() + z.max_degree().unwrap() > 4 {
                            continue;
                        }
                        let yz = a.star(y, z).unwrap();
                        assert_eq!(
                            a.dend_left(&a.dend_left(x, y).unwrap(), z).unwrap(),
                            a.dend_left(x, &yz).unwrap()
                        );
                        assert_eq!(
                            a.dend_left(&a.dend_right(x, y).unwrap(), z).unwrap(),
                            a.dend_right(x, &a.dend_left(y, z).unwrap()).unwrap()
                        );
                        assert_eq!(
                            a.dend_right(&a.star(x, y).unwrap(), z).unwrap(),
                            a.dend_right(x, &a.dend_right(y, z).unwrap()).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn star_power_examples() {
        let a = alg(2, 1);
        let y = a.generator(0).unwrap();
        assert!(a.star_power(&a.zero(), 2).unwrap().is_zero());
        assert_eq!(a.star_power(&y, 2).unwrap(), a.star(&y, &y).unwrap());
        assert!(matches!(
            a.star_power(&y, 3),
            Err(Error::CharacteristicMismatch { expected: 2, found: 3 })
        ));
        let a5 = alg(5, 1);
        let y5 = a5.generator(0).unwrap();
        let base = a5.star_power(&y5, 5).unwrap();
        for alpha in 0..5u64 {
            let lhs = a5.star_power(&y5.scale(alpha), 5).unwrap();
            assert_eq!(lhs, base.scale(Modulus::new(5).unwrap().pow(alpha, 5)));
        }
    }

    #[test]
    fn mismatched_algebras_rejected() {
        let a = alg(3, 1);
        let b = alg(3, 2);
        let x = a.generator(0).unwrap();
        let y = b.generator(1).unwrap();
        assert!(matches!(
            a.dend_left(&x, &y),
            Err(Error::AlgebraMismatch { .. })
        ));
        assert!(x.add(&y).is_err());
        assert!(a.generator(1).is_err());
        assert!(DendElem::from_tree(Tree::leaf(), Modulus::new(3).unwrap(), 1).is_err());
    }

    #[test]
    fn operators_commute_and_binomial_collapses() {
        let a = alg(3, 1);
        let x = a.generator(0).unwrap();
        let lx = op_l(&x);
        let rx = op_r(&x);
        for t in trees_up_to(2, 1) {
            let y = a.basis(t).unwrap();
            assert_eq!(
                rx.compose(&lx).apply(&a, &y).unwrap(),
                lx.compose(&rx).apply(&a, &y).unwrap()
            );
            assert_eq!(
                lx.sub(&rx).apply(&a, &y).unwrap(),
                a.prelie_bracket(&x, &y).unwrap()
            );
            let d = lx.sub(&rx).pow(3);
            assert_eq!(d.word_count(), 8);
            assert_eq!(
                d.apply(&a, &y).unwrap(),
                lx.pow(3).sub(&rx.pow(3)).apply(&a, &y).unwrap()
            );
        }
    }

    #[test]
    fn json_round_trip_and_order() {
        let a = alg(7, 2);
        let x = DendElem::from_terms(
            [(t("(· x1 (· x0 ·))"), 3), (t("(· x0 ·)"), -1), (t("(· x1 (· x0 ·))"), 4)],
            Modulus::new(7).unwrap(),
            2,
        )
        .unwrap();
        // 3 + 4 = 0 mod 7 cancels the degree-2 term
        assert_eq!(x.len(), 1);
        assert_eq!(x.to_json(), serde_json::json!([{"tree": "(· x0 ·)", "coeff": 6}]));
        let y = a.star(&x, &a.generator(1).unwrap()).unwrap().add(&x).unwrap();
        let back = DendElem::from_json(&y.to_json(), Modulus::new(7).unwrap(), 2).unwrap();
        assert_eq!(back, y);
        let degrees: Vec<_> = y.terms().map(|(t, _)| t.degree()).collect();
        assert!(degrees.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn truncation_drops_high_degree() {
        let a = FreeDend::truncated(Modulus::new(3).unwrap(), 1, 2);
        let y = a.generator(0).unwrap();
        let yy = a.star(&y, &y).unwrap();
        assert_eq!(yy.len(), 2);
        assert!(a.star(&yy, &y).unwrap().is_zero());
        assert_eq!(a.graded_basis(1, 10).len(), 3);
    }
}

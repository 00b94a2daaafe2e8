//! Independent reference implementations used as oracles. Nothing here calls
//! into the library's arithmetic.
#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeMap;
use std::rc::Rc;

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

// ---------- dense matrices, row-major n×n ----------

pub fn mat_mul(n: usize, p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut c = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                c[i * n + j] = (c[i * n + j] + aik * b[k * n + j]) % p;
            }
        }
    }
    c
}

pub fn mat_add(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| (x + y) % p).collect()
}

pub fn mat_sub(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| (x + p - y) % p).collect()
}

pub fn mat_scale(p: u64, c: u64, a: &[u64]) -> Vec<u64> {
    a.iter().map(|x| x * c % p).collect()
}

pub fn commutator(n: usize, p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    mat_sub(p, &mat_mul(n, p, a, b), &mat_mul(n, p, b, a))
}

pub fn mat_pow(n: usize, p: u64, a: &[u64], e: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    for _ in 1..e {
        r = mat_mul(n, p, &r, a);
    }
    r
}

/// Sum of all words of length `p` in `x`, `y` with exactly `i` letters `x`:
/// the coefficient of `λ^i` in `(λx + y)^p`.
pub fn word_sum(n: usize, p: u64, x: &[u64], y: &[u64], i: u32) -> Vec<u64> {
    let mut acc = vec![0; n * n];
    for mask in 0u32..(1 << p) {
        if mask.count_ones() != i {
            continue;
        }
        let mut w = identity(n);
        for pos in 0..p {
            let f = if mask >> pos & 1 == 1 { x } else { y };
            w = mat_mul(n, p, &w, f);
        }
        acc = mat_add(p, &acc, &w);
    }
    acc
}

pub fn identity(n: usize) -> Vec<u64> {
    let mut m = vec![0; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

// ---------- planar binary trees and the free dendriform products ----------

#[derive(Debug)]
pub enum Shape {
    Leaf,
    Node(OTree, u32, OTree),
}

pub type OTree = Rc<Shape>;

pub fn leaf() -> OTree {
    Rc::new(Shape::Leaf)
}

pub fn node(l: OTree, a: u32, r: OTree) -> OTree {
    Rc::new(Shape::Node(l, a, r))
}

pub fn encode(t: &OTree) -> String {
    match &**t {
        Shape::Leaf => "·".to_string(),
        Shape::Node(l, a, r) => format!("({} x{} {})", encode(l), a, encode(r)),
    }
}

pub fn degree(t: &OTree) -> usize {
    match &**t {
        Shape::Leaf => 0,
        Shape::Node(l, _, r) => degree(l) + degree(r) + 1,
    }
}

/// All trees of degree `n`, any order.
pub fn all_trees(n: usize, g: u32) -> Vec<OTree> {
    if n == 0 {
        return vec![leaf()];
    }
    let mut out = Vec::new();
    for i in 0..n {
        for l in all_trees(i, g) {
            for r in all_trees(n - 1 - i, g) {
                for a in 0..g {
                    out.push(node(l.clone(), a, r.clone()));
                }
            }
        }
    }
    out
}

/// Linear combination keyed by encoding.
pub type Comb = BTreeMap<String, (OTree, u64)>;

pub fn comb_add(p: u64, acc: &mut Comb, t: OTree, c: u64) {
    let key = encode(&t);
    let e = acc.entry(key.clone()).or_insert((t, 0));
    e.1 = (e.1 + c) % p;
    if e.1 == 0 {
        acc.remove(&key);
    }
}

fn single(t: &OTree) -> Comb {
    let mut c = Comb::new();
    c.insert(encode(t), (t.clone(), 1));
    c
}

/// `s ≺ t`, `s ≻ t`, `s ⋆ t` from the defining recursions with the leaf as a
/// two-sided unit for `⋆`.
pub fn t_prec(p: u64, s: &OTree, t: &OTree) -> Comb {
    match (&**s, &**t) {
        (Shape::Leaf, _) => Comb::new(),
        (_, Shape::Leaf) => single(s),
        (Shape::Node(sl, a, sr), _) => {
            let mut out = Comb::new();
            for (u, c) in t_star(p, sr, t).into_values() {
                comb_add(p, &mut out, node(sl.clone(), *a, u), c);
            }
            out
        }
    }
}

pub fn t_succ(p: u64, s: &OTree, t: &OTree) -> Comb {
    match (&**s, &**t) {
        (_, Shape::Leaf) => Comb::new(),
        (Shape::Leaf, _) => single(t),
        (_, Shape::Node(tl, b, tr)) => {
            let mut out = Comb::new();
            for (u, c) in t_star(p, s, tl).into_values() {
                comb_add(p, &mut out, node(u, *b, tr.clone()), c);
            }
            out
        }
    }
}

pub fn t_star(p: u64, s: &OTree, t: &OTree) -> Comb {
    if let Shape::Leaf = &**s {
        return single(t);
    }
    if let Shape::Leaf = &**t {
        return single(s);
    }
    let mut out = t_prec(p, s, t);
    for (u, c) in t_succ(p, s, t).into_values() {
        comb_add(p, &mut out, u, c);
    }
    out
}

pub fn comb_op(p: u64, op: fn(u64, &OTree, &OTree) -> Comb, x: &Comb, y: &Comb) -> Comb {
    let mut out = Comb::new();
    for (s, a) in x.values() {
        for (t, b) in y.values() {
            for (u, c) in op(p, s, t).into_values() {
                comb_add(p, &mut out, u, a * b % p * c % p);
            }
        }
    }
    out
}

// ---------- dense row reduction ----------

/// Rank of `rows` over `F_p` by plain Gaussian elimination.
pub fn dense_rank(p: u64, rows: &[Vec<u64>]) -> usize {
    let mut m: Vec<Vec<u64>> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = inv_mod(m[rank][c], p);
        for v in m[rank].iter_mut() {
            *v = *v * inv % p;
        }
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                for k in 0..cols {
                    m[r][k] = (m[r][k] + p * p - f * m[rank][k] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Reduced basis of the row space, dropping zero rows.
pub fn dense_basis(p: u64, rows: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let mut m: Vec<Vec<u64>> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = inv_mod(m[rank][c], p);
        for v in m[rank].iter_mut() {
            *v = *v * inv % p;
        }
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                for k in 0..cols {
                    m[r][k] = (m[r][k] + p * p - f * m[rank][k] % p) % p;
                }
            }
        }
        rank += 1;
    }
    m.truncate(rank);
    m
}

/// Brute-force filtered quotient dimensions of `Dend / ideal(generators)` on
/// `g` generators at truncation `d`, using dense elimination and the identity
/// `dim(I ∩ F_≤n) = dim I − rank(I projected onto degrees > n)`.
pub fn oracle_quotient_dims(p: u64, g: u32, d: usize, generators: &[Comb]) -> Vec<u64> {
    let mut basis_trees = Vec::new();
    for n in 1..=d {
        basis_trees.extend(all_trees(n, g));
    }
    let index: BTreeMap<String, usize> = basis_trees
        .iter()
        .enumerate()
        .map(|(i, t)| (encode(t), i))
        .collect();
    let to_row = |c: &Comb| {
        let mut row = vec![0; basis_trees.len()];
        for (k, (_, v)) in c {
            if let Some(&i) = index.get(k) {
                row[i] = *v;
            }
        }
        row
    };
    let to_comb = |row: &[u64]| {
        let mut c = Comb::new();
        for (i, v) in row.iter().enumerate() {
            if *v != 0 {
                c.insert(encode(&basis_trees[i]), (basis_trees[i].clone(), *v));
            }
        }
        c
    };
    let mult: Vec<Comb> = basis_trees
        .iter()
        .filter(|t| degree(t) < d)
        .map(single)
        .collect();
    let mut rows: Vec<Vec<u64>> = generators.iter().map(to_row).collect();
    let mut rank = dense_rank(p, &rows);
    loop {
        let current = dense_basis(p, &rows);
        let mut next = current.clone();
        for r in &current {
            let rc = to_comb(r);
            for t in &mult {
                for op in [t_prec as fn(u64, &OTree, &OTree) -> Comb, t_succ] {
                    next.push(to_row(&comb_op(p, op, t, &rc)));
                    next.push(to_row(&comb_op(p, op, &rc, t)));
                }
            }
        }
        let new_rank = dense_rank(p, &next);
        rows = next;
        if new_rank == rank {
            break;
        }
        rank = new_rank;
    }
    let ideal = dense_basis(p, &rows);
    let total = ideal.len();
    let mut out = Vec::new();
    let mut cumulative = 0u64;
    for n in 1..=d {
        cumulative += basis_trees.iter().filter(|t| degree(t) == n).count() as u64;
        let high: Vec<Vec<u64>> = ideal
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .map(|(i, v)| if degree(&basis_trees[i]) > n { *v } else { 0 })
                    .collect()
            })
            .collect();
        let in_filtration = total - dense_rank(p, &high);
        out.push(cumulative - in_filtration as u64);
    }
    out
}

pub fn y(a: u32) -> Comb {
    single(&node(leaf(), a, leaf()))
}

pub fn comb_sub(p: u64, x: &Comb, y: &Comb) -> Comb {
    let mut out = x.clone();
    for (t, c) in y.values() {
        comb_add(p, &mut out, t.clone(), p - c);
    }
    out
}

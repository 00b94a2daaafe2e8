//! Finite-dimensional associative algebras over `F_p` given by structure
//! constants, with Rota-Baxter operators, associative Yang-Baxter tensors, and
//! the dendriform structures they induce.
//!
//! Vectors are plain `Vec<u64>` coordinate lists in the algebra's basis.

use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::field::Modulus;
use crate::structure::{Associative, Dendriform, SampleRng, VectorSpace};

pub type Vector = Vec<u64>;

/// A sparse structure-constant entry `[i, j, k, c]`: `e_i · e_j` has `c` on `e_k`.
pub type SparseEntry = (usize, usize, usize, i64);

pub(crate) fn bilinear(m: Modulus, n: usize, c: &[u64], x: &[u64], y: &[u64]) -> Vector {
    let mut out = vec![0; n];
    for (i, &xi) in x.iter().enumerate() {
        if xi == 0 {
            continue;
        }
        for (j, &yj) in y.iter().enumerate() {
            if yj == 0 {
                continue;
            }
            let xy = m.mul(xi, yj);
            let base = (i * n + j) * n;
            for (k, o) in out.iter_mut().enumerate() {
                let ck = c[base + k];
                if ck != 0 {
                    *o = m.add(*o, m.mul(xy, ck));
                }
            }
        }
    }
    out
}

pub(crate) fn vadd(m: Modulus, a: &[u64], b: &[u64]) -> Result<Vector> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            found: b.len(),
        });
    }
    Ok(a.iter().zip(b).map(|(x, y)| m.add(*x, *y)).collect())
}

pub(crate) fn vscale(m: Modulus, c: u64, a: &[u64]) -> Vector {
    let c = c % m.get();
    a.iter().map(|x| m.mul(*x, c)).collect()
}

pub(crate) fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

pub(crate) fn reduce_vector(m: Modulus, v: &[i64]) -> Vector {
    v.iter().map(|x| m.reduce(*x)).collect()
}

pub(crate) fn dense_constants(m: Modulus, n: usize, entries: &[SparseEntry]) -> Result<Vec<u64>> {
    let mut c = vec![0; n * n * n];
    for &(i, j, k, v) in entries {
        if i >= n || j >= n || k >= n {
            return Err(Error::Parse(format!(
                "structure constant index ({i}, {j}, {k}) out of range for dim {n}"
            )));
        }
        let slot = &mut c[(i * n + j) * n + k];
        *slot = m.add(*slot, m.reduce(v));
    }
    Ok(c)
}

pub(crate) fn sparse_constants(n: usize, c: &[u64]) -> Vec<SparseEntry> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = c[(i * n + j) * n + k];
                if v != 0 {
                    out.push((i, j, k, v as i64));
                }
            }
        }
    }
    out
}

pub(crate) fn check_dim(expected: usize, v: &[u64]) -> Result<()> {
    if v.len() != expected {
        return Err(Error::DimensionMismatch {
            expected,
            found: v.len(),
        });
    }
    Ok(())
}

fn default_basis(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("e{i}")).collect()
}

/// JSON algebra format: `{ "p", "dim", "basis", "constants": [[i, j, k, c], ...] }`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub p: u64,
    pub dim: usize,
    #[serde(default)]
    pub basis: Vec<String>,
    pub constants: Vec<SparseEntry>,
}

/// An associative algebra `e_i · e_j = Σ_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SCAlgebra {
    modulus: Modulus,
    dim: usize,
    basis: Vec<String>,
    constants: Vec<u64>,
}

impl SCAlgebra {
    /// Validates associativity on all basis triples.
    pub fn new(modulus: Modulus, basis: Vec<String>, constants: Vec<u64>) -> Result<Self> {
        let n = basis.len();
        if constants.len() != n * n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n * n,
                found: constants.len(),
            });
        }
        let constants = constants.into_iter().map(|c| c % modulus.get()).collect();
        let a = SCAlgebra {
            modulus,
            dim: n,
            basis,
            constants,
        };
        if let Some((i, j, k)) = a.associativity_failure() {
            return Err(Error::NotAssociative(i, j, k));
        }
        Ok(a)
    }

    pub fn from_sparse(modulus: Modulus, basis: Vec<String>, entries: &[SparseEntry]) -> Result<Self> {
        let c = dense_constants(modulus, basis.len(), entries)?;
        SCAlgebra::new(modulus, basis, c)
    }

    pub fn from_file(file: &AlgebraFile) -> Result<Self> {
        let basis = if file.basis.is_empty() {
            default_basis(file.dim)
        } else {
            file.basis.clone()
        };
        if basis.len() != file.dim {
            return Err(Error::DimensionMismatch {
                expected: file.dim,
                found: basis.len(),
            });
        }
        SCAlgebra::from_sparse(Modulus::new(file.p)?, basis, &file.constants)
    }

    pub fn to_file(&self) -> AlgebraFile {
        AlgebraFile {
            p: self.modulus.get(),
            dim: self.dim,
            basis: self.basis.clone(),
            constants: sparse_constants(self.dim, &self.constants),
        }
    }

    fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let eij = self.mul_unchecked(&unit_vector(n, i), &unit_vector(n, j));
                for k in 0..n {
                    let ek = unit_vector(n, k);
                    let lhs = self.mul_unchecked(&eij, &ek);
                    let ejk = self.mul_unchecked(&unit_vector(n, j), &ek);
                    let rhs = self.mul_unchecked(&unit_vector(n, i), &ejk);
                    if lhs != rhs {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> u64 {
        self.constants[(i * self.dim + j) * self.dim + k]
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        unit_vector(self.dim, i)
    }

    pub fn vector(&self, coords: &[i64]) -> Result<Vector> {
        if coords.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: coords.len(),
            });
        }
        Ok(reduce_vector(self.modulus, coords))
    }

    fn mul_unchecked(&self, x: &[u64], y: &[u64]) -> Vector {
        bilinear(self.modulus, self.dim, &self.constants, x, y)
    }

    /// The product via structure constants.
    pub fn algebra_mul(&self, x: &[u64], y: &[u64]) -> Result<Vector> {
        check_dim(self.dim, x)?;
        check_dim(self.dim, y)?;
        Ok(self.mul_unchecked(x, y))
    }

    /// `x^p` for the field characteristic `p`.
    pub fn frobenius(&self, x: &[u64]) -> Result<Vector> {
        check_dim(self.dim, x)?;
        let mut acc = x.to_vec();
        for _ in 1..self.modulus.get() {
            acc = self.mul_unchecked(&acc, x);
        }
        Ok(acc)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| self.constant(i, j, k) == self.constant(j, i, k))))
    }

    /// Every linear map on this algebra, or a seeded sample of them.
    pub fn candidate_operators(&self, mode: SearchMode) -> Result<Vec<LinearOperator>> {
        let n = self.dim;
        let p = self.modulus.get();
        match mode {
            SearchMode::Exhaustive { max_dim } => {
                exhaustive_guard(n, p, max_dim)?;
                let cells = n * n;
                let total = p.pow(cells as u32);
                Ok((0..total)
                    .map(|mut code| {
                        let mut matrix = vec![0; cells];
                        for cell in matrix.iter_mut() {
                            *cell = code % p;
                            code /= p;
                        }
                        LinearOperator {
                            modulus: self.modulus,
                            dim: n,
                            matrix,
                        }
                    })
                    .collect())
            }
            SearchMode::Random { count, seed } => {
                let mut rng = SampleRng::seed_from_u64(seed);
                Ok((0..count)
                    .map(|_| LinearOperator {
                        modulus: self.modulus,
                        dim: n,
                        matrix: (0..n * n).map(|_| rng.random_range(0..p)).collect(),
                    })
                    .collect())
            }
        }
    }
}

fn exhaustive_guard(n: usize, p: u64, max_dim: usize) -> Result<()> {
    if n > max_dim {
        return Err(Error::SearchTooLarge(format!(
            "dimension {n} exceeds the exhaustive cap {max_dim}"
        )));
    }
    if p > 3 {
        return Err(Error::SearchTooLarge(format!(
            "exhaustive search needs p <= 3, got {p}"
        )));
    }
    Ok(())
}

/// How brute-force searches pick candidates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum SearchMode {
    Exhaustive { max_dim: usize },
    Random { count: usize, seed: u64 },
}

impl VectorSpace for SCAlgebra {
    type Elem = Vector;

    fn modulus(&self) -> Modulus {
        self.modulus
    }

    fn zero(&self) -> Vector {
        vec![0; self.dim]
    }

    fn add(&self, a: &Vector, b: &Vector) -> Result<Vector> {
        vadd(self.modulus, a, b)
    }

    fn scale(&self, c: u64, a: &Vector) -> Vector {
        vscale(self.modulus, c, a)
    }

    fn is_zero(&self, a: &Vector) -> bool {
        a.iter().all(|x| *x == 0)
    }

    fn graded_basis(&self, lo: usize, hi: usize) -> Vec<(Vector, usize)> {
        if lo > 1 || hi < 1 {
            return Vec::new();
        }
        (0..self.dim).map(|i| (self.basis_vector(i), 1)).collect()
    }

    fn random_element(&self, rng: &mut SampleRng, _lo: usize, _hi: usize) -> Vector {
        (0..self.dim)
            .map(|_| rng.random_range(0..self.modulus.get()))
            .collect()
    }

    fn describe(&self, a: &Vector) -> Value {
        serde_json::json!(a)
    }
}

impl Associative for SCAlgebra {
    fn mul(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        self.algebra_mul(x, y)
    }
}

/// `M_n(F_p)` with basis `e_ab` at index `a·n + b`.
pub fn matrix_algebra(n: usize, modulus: Modulus) -> SCAlgebra {
    let basis = (0..n)
        .flat_map(|a| (0..n).map(move |b| format!("e{}{}", a + 1, b + 1)))
        .collect();
    let mut entries = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                entries.push((a * n + b, b * n + c, a * n + c, 1));
            }
        }
    }
    SCAlgebra::from_sparse(modulus, basis, &entries).expect("matrix units are associative")
}

/// Upper-triangular `n×n` matrices.
pub fn upper_triangular(n: usize, modulus: Modulus) -> SCAlgebra {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
    let index = |a: usize, b: usize| pairs.iter().position(|&q| q == (a, b)).unwrap();
    let basis = pairs
        .iter()
        .map(|(a, b)| format!("e{}{}", a + 1, b + 1))
        .collect();
    let mut entries = Vec::new();
    for &(a, b) in &pairs {
        for &(b2, c) in &pairs {
            if b == b2 {
                entries.push((index(a, b), index(b, c), index(a, c), 1));
            }
        }
    }
    SCAlgebra::from_sparse(modulus, basis, &entries).expect("triangular matrix units are associative")
}

/// `F_p[x]/(x^N)` with basis `1, x, …, x^(N-1)`.
pub fn truncated_polynomial(order: usize, modulus: Modulus) -> SCAlgebra {
    let basis = (0..order)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        })
        .collect();
    let mut entries = Vec::new();
    for i in 0..order {
        for j in 0..order {
            if i + j < order {
                entries.push((i, j, i + j, 1));
            }
        }
    }
    SCAlgebra::from_sparse(modulus, basis, &entries).expect("polynomial rings are associative")
}

/// A linear map `β`; `matrix[i·n + j]` is the coefficient of `e_i` in `β(e_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearOperator {
    modulus: Modulus,
    dim: usize,
    matrix: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct OperatorFile {
    matrix: Vec<i64>,
}

impl LinearOperator {
    pub fn new(modulus: Modulus, dim: usize, row_major: &[i64]) -> Result<Self> {
        if row_major.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                found: row_major.len(),
            });
        }
        Ok(LinearOperator {
            modulus,
            dim,
            matrix: reduce_vector(modulus, row_major),
        })
    }

    pub fn identity(a: &SCAlgebra) -> Self {
        let n = a.dim;
        let mut matrix = vec![0; n * n];
        for i in 0..n {
            matrix[i * n + i] = 1;
        }
        LinearOperator {
            modulus: a.modulus,
            dim: n,
            matrix,
        }
    }

    pub fn zero(a: &SCAlgebra) -> Self {
        LinearOperator {
            modulus: a.modulus,
            dim: a.dim,
            matrix: vec![0; a.dim * a.dim],
        }
    }

    /// Builds the operator from the images of the basis vectors.
    pub fn from_columns(modulus: Modulus, columns: &[Vector]) -> Result<Self> {
        let n = columns.len();
        let mut matrix = vec![0; n * n];
        for (j, col) in columns.iter().enumerate() {
            check_dim(n, col)?;
            for (i, v) in col.iter().enumerate() {
                matrix[i * n + j] = *v;
            }
        }
        Ok(LinearOperator {
            modulus,
            dim: n,
            matrix,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &[u64] {
        &self.matrix
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.iter().all(|v| *v == 0)
    }

    pub fn apply(&self, x: &[u64]) -> Result<Vector> {
        check_dim(self.dim, x)?;
        let m = self.modulus;
        let n = self.dim;
        Ok((0..n)
            .map(|i| {
                (0..n).fold(0, |acc, j| m.add(acc, m.mul(self.matrix[i * n + j], x[j])))
            })
            .collect())
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(OperatorFile {
            matrix: self.matrix.iter().map(|v| *v as i64).collect(),
        })
        .expect("operator serializes")
    }

    pub fn from_json(v: &Value, a: &SCAlgebra) -> Result<Self> {
        let f: OperatorFile = serde_json::from_value(v.clone())?;
        LinearOperator::new(a.modulus, a.dim, &f.matrix)
    }
}

/// `r = Σ u_i ⊗ v_i`, zero pairs pruned.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    summands: Vec<(Vector, Vector)>,
}

#[derive(Serialize, Deserialize)]
struct TensorFile {
    summands: Vec<(Vec<i64>, Vec<i64>)>,
}

impl TensorElement {
    pub fn new(a: &SCAlgebra, summands: Vec<(Vector, Vector)>) -> Result<Self> {
        for (u, v) in &summands {
            check_dim(a.dim, u)?;
            check_dim(a.dim, v)?;
        }
        Ok(TensorElement {
            summands: summands
                .into_iter()
                .map(|(u, v)| (vscale(a.modulus, 1, &u), vscale(a.modulus, 1, &v)))
                .filter(|(u, v)| u.iter().any(|x| *x != 0) && v.iter().any(|x| *x != 0))
                .collect(),
        })
    }

    pub fn zero() -> Self {
        TensorElement {
            summands: Vec::new(),
        }
    }

    pub fn summands(&self) -> &[(Vector, Vector)] {
        &self.summands
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn to_json(&self) -> Value {
        let f = TensorFile {
            summands: self
                .summands
                .iter()
                .map(|(u, v)| {
                    (
                        u.iter().map(|x| *x as i64).collect(),
                        v.iter().map(|x| *x as i64).collect(),
                    )
                })
                .collect(),
        };
        serde_json::to_value(f).expect("tensor serializes")
    }

    pub fn from_json(v: &Value, a: &SCAlgebra) -> Result<Self> {
        let f: TensorFile = serde_json::from_value(v.clone())?;
        let summands = f
            .summands
            .into_iter()
            .map(|(u, v)| (reduce_vector(a.modulus, &u), reduce_vector(a.modulus, &v)))
            .collect();
        TensorElement::new(a, summands)
    }
}

/// A concrete dendriform structure given by two coefficient tensors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearStructure {
    modulus: Modulus,
    dim: usize,
    basis: Vec<String>,
    prec: Vec<u64>,
    succ: Vec<u64>,
    tag: String,
}

/// JSON dendriform format: `{ "p", "dim", "basis", "prec": [...], "succ": [...], "tag" }`
/// with the same sparse `[i, j, k, c]` entries as [`AlgebraFile`].
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DendriformFile {
    pub p: u64,
    pub dim: usize,
    #[serde(default)]
    pub basis: Vec<String>,
    pub prec: Vec<SparseEntry>,
    pub succ: Vec<SparseEntry>,
    #[serde(default)]
    pub tag: String,
}

impl BilinearStructure {
    pub fn new(
        modulus: Modulus,
        basis: Vec<String>,
        prec: Vec<u64>,
        succ: Vec<u64>,
        tag: impl Into<String>,
    ) -> Result<Self> {
        let n = basis.len();
        for t in [&prec, &succ] {
            if t.len() != n * n * n {
                return Err(Error::DimensionMismatch {
                    expected: n * n * n,
                    found: t.len(),
                });
            }
        }
        Ok(BilinearStructure {
            modulus,
            dim: n,
            basis,
            prec,
            succ,
            tag: tag.into(),
        })
    }

    pub fn from_file(f: &DendriformFile) -> Result<Self> {
        let m = Modulus::new(f.p)?;
        let basis = if f.basis.is_empty() {
            default_basis(f.dim)
        } else {
            f.basis.clone()
        };
        if basis.len() != f.dim {
            return Err(Error::DimensionMismatch {
                expected: f.dim,
                found: basis.len(),
            });
        }
        let prec = dense_constants(m, f.dim, &f.prec)?;
        let succ = dense_constants(m, f.dim, &f.succ)?;
        BilinearStructure::new(m, basis, prec, succ, f.tag.clone())
    }

    pub fn to_file(&self) -> DendriformFile {
        DendriformFile {
            p: self.modulus.get(),
            dim: self.dim,
            basis: self.basis.clone(),
            prec: sparse_constants(self.dim, &self.prec),
            succ: sparse_constants(self.dim, &self.succ),
            tag: self.tag.clone(),
        }
    }

    /// Zero products on an `n`-dimensional space.
    pub fn zero(modulus: Modulus, n: usize) -> Self {
        BilinearStructure::new(
            modulus,
            default_basis(n),
            vec![0; n * n * n],
            vec![0; n * n * n],
            "zero",
        )
        .expect("consistent sizes")
    }

    /// `x ≺ y = x·y`, `x ≻ y = y·x`, the commutative pairing used for
    /// Zinbiel-type checks on commutative algebras.
    pub fn from_product(a: &SCAlgebra, tag: impl Into<String>) -> Self {
        let n = a.dim;
        let mut succ = vec![0; n * n * n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    succ[(i * n + j) * n + k] = a.constant(j, i, k);
                }
            }
        }
        BilinearStructure::new(a.modulus, a.basis.clone(), a.constants.clone(), succ, tag)
            .expect("consistent sizes")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn tag(&self) -> &str {
        &self.tag
    }

    /// Adds `delta` to the `≺` constant at `(i, j, k)`.
    pub fn perturbed(&self, i: usize, j: usize, k: usize, delta: i64) -> Self {
        let mut out = self.clone();
        let slot = &mut out.prec[(i * self.dim + j) * self.dim + k];
        *slot = self.modulus.add(*slot, self.modulus.reduce(delta));
        out.tag = format!("{} (perturbed)", self.tag);
        out
    }
}

impl VectorSpace for BilinearStructure {
    type Elem = Vector;

    fn modulus(&self) -> Modulus {
        self.modulus
    }

    fn zero(&self) -> Vector {
        vec![0; self.dim]
    }

    fn add(&self, a: &Vector, b: &Vector) -> Result<Vector> {
        vadd(self.modulus, a, b)
    }

    fn scale(&self, c: u64, a: &Vector) -> Vector {
        vscale(self.modulus, c, a)
    }

    fn is_zero(&self, a: &Vector) -> bool {
        a.iter().all(|x| *x == 0)
    }

    fn graded_basis(&self, lo: usize, hi: usize) -> Vec<(Vector, usize)> {
        if lo > 1 || hi < 1 {
            return Vec::new();
        }
        (0..self.dim).map(|i| (unit_vector(self.dim, i), 1)).collect()
    }

    fn random_element(&self, rng: &mut SampleRng, _lo: usize, _hi: usize) -> Vector {
        (0..self.dim)
            .map(|_| rng.random_range(0..self.modulus.get()))
            .collect()
    }

    fn describe(&self, a: &Vector) -> Value {
        serde_json::json!(a)
    }
}

impl Dendriform for BilinearStructure {
    fn prec(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        check_dim(self.dim, x)?;
        check_dim(self.dim, y)?;
        Ok(bilinear(self.modulus, self.dim, &self.prec, x, y))
    }

    fn succ(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        check_dim(self.dim, x)?;
        check_dim(self.dim, y)?;
        Ok(bilinear(self.modulus, self.dim, &self.succ, x, y))
    }
}

/// One basis pair on which the Rota-Baxter identity fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RotaBaxterViolation {
    pub i: usize,
    pub j: usize,
    /// `β(e_i)β(e_j) − β(β(e_i)e_j + e_iβ(e_j))`
    pub residual: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RotaBaxterReport {
    pub violations: Vec<RotaBaxterViolation>,
}

impl RotaBaxterReport {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `β(x)β(y) = β(β(x)y + xβ(y))` on every basis pair.
pub fn check_rota_baxter(a: &SCAlgebra, beta: &LinearOperator) -> Result<RotaBaxterReport> {
    if beta.dim != a.dim {
        return Err(Error::DimensionMismatch {
            expected: a.dim,
            found: beta.dim,
        });
    }
    let n = a.dim;
    let m = a.modulus;
    let images: Vec<Vector> = (0..n)
        .map(|i| beta.apply(&a.basis_vector(i)))
        .collect::<Result<_>>()?;
    let mut violations = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let lhs = a.mul_unchecked(&images[i], &images[j]);
            let inner = vadd(
                m,
                &a.mul_unchecked(&images[i], &a.basis_vector(j)),
                &a.mul_unchecked(&a.basis_vector(i), &images[j]),
            )?;
            let rhs = beta.apply(&inner)?;
            if lhs != rhs {
                let residual = lhs.iter().zip(&rhs).map(|(l, r)| m.sub(*l, *r)).collect();
                violations.push(RotaBaxterViolation { i, j, residual });
            }
        }
    }
    Ok(RotaBaxterReport { violations })
}

/// `x ≻ y = β(x)·y`, `x ≺ y = x·β(y)`. Refuses operators that fail the
/// Rota-Baxter check.
pub fn induced_dendriform(a: &SCAlgebra, beta: &LinearOperator) -> Result<BilinearStructure> {
    let report = check_rota_baxter(a, beta)?;
    if let Some(v) = report.violations.first() {
        return Err(Error::NotRotaBaxter(v.i, v.j));
    }
    let n = a.dim;
    let images: Vec<Vector> = (0..n)
        .map(|i| beta.apply(&a.basis_vector(i)))
        .collect::<Result<_>>()?;
    let mut prec = vec![0; n * n * n];
    let mut succ = vec![0; n * n * n];
    for i in 0..n {
        for j in 0..n {
            let base = (i * n + j) * n;
            let s = a.mul_unchecked(&images[i], &a.basis_vector(j));
            let p = a.mul_unchecked(&a.basis_vector(i), &images[j]);
            succ[base..base + n].copy_from_slice(&s);
            prec[base..base + n].copy_from_slice(&p);
        }
    }
    BilinearStructure::new(a.modulus, a.basis.clone(), prec, succ, "rota-baxter")
}

/// Residual of `r13 r12 − r12 r23 + r23 r13` as a dense `n³` tensor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AybeReport {
    pub dim: usize,
    pub residual: Vec<u64>,
}

impl AybeReport {
    pub fn nonzero_entries(&self) -> Vec<(usize, usize, usize, u64)> {
        let n = self.dim;
        self.residual
            .iter()
            .enumerate()
            .filter(|(_, v)| **v != 0)
            .map(|(idx, v)| (idx / (n * n), (idx / n) % n, idx % n, *v))
            .collect()
    }

    pub fn passes(&self) -> bool {
        self.residual.iter().all(|v| *v == 0)
    }
}

fn add_triple(m: Modulus, n: usize, t: &mut [u64], sign: u64, a: &[u64], b: &[u64], c: &[u64]) {
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            if bj == 0 {
                continue;
            }
            let ab = m.mul(m.mul(ai, bj), sign);
            for (k, &ck) in c.iter().enumerate() {
                if ck != 0 {
                    let slot = &mut t[(i * n + j) * n + k];
                    *slot = m.add(*slot, m.mul(ab, ck));
                }
            }
        }
    }
}

/// Evaluates the associative Yang-Baxter equation for `r` in `A⊗A⊗A`.
pub fn check_aybe(a: &SCAlgebra, r: &TensorElement) -> Result<AybeReport> {
    let n = a.dim;
    let m = a.modulus;
    for (u, v) in &r.summands {
        check_dim(n, u)?;
        check_dim(n, v)?;
    }
    let mut t = vec![0; n * n * n];
    let minus = m.neg(1);
    for (ui, vi) in &r.summands {
        for (uj, vj) in &r.summands {
            // r13 r12 = Σ u_i u_j ⊗ v_j ⊗ v_i
            add_triple(m, n, &mut t, 1, &a.mul_unchecked(ui, uj), vj, vi);
            // r12 r23 = Σ u_i ⊗ v_i u_j ⊗ v_j
            add_triple(m, n, &mut t, minus, ui, &a.mul_unchecked(vi, uj), vj);
            // r23 r13 = Σ u_j ⊗ u_i ⊗ v_i v_j
            add_triple(m, n, &mut t, 1, uj, ui, &a.mul_unchecked(vi, vj));
        }
    }
    Ok(AybeReport {
        dim: n,
        residual: t,
    })
}

/// `β(x) = Σ u_i · x · v_i` for an AYBE solution `r`, accepted only after
/// [`check_rota_baxter`] passes.
pub fn rb_from_tensor(a: &SCAlgebra, r: &TensorElement) -> Result<LinearOperator> {
    let aybe = check_aybe(a, r)?;
    if !aybe.passes() {
        return Err(Error::AybeViolated(aybe.nonzero_entries().len()));
    }
    let n = a.dim;
    let m = a.modulus;
    let columns: Vec<Vector> = (0..n)
        .map(|j| {
            let ej = a.basis_vector(j);
            r.summands.iter().try_fold(vec![0; n], |acc, (u, v)| {
                let term = a.mul_unchecked(&a.mul_unchecked(u, &ej), v);
                vadd(m, &acc, &term)
            })
        })
        .collect::<Result<_>>()?;
    let beta = LinearOperator::from_columns(m, &columns)?;
    let gate = check_rota_baxter(a, &beta)?;
    if let Some(v) = gate.violations.first() {
        return Err(Error::NotRotaBaxter(v.i, v.j));
    }
    Ok(beta)
}

/// Operators among the candidates that pass the Rota-Baxter check.
pub fn search_rota_baxter(a: &SCAlgebra, mode: SearchMode) -> Result<Vec<LinearOperator>> {
    let mut found = Vec::new();
    for beta in a.candidate_operators(mode)? {
        if check_rota_baxter(a, &beta)?.passes() {
            found.push(beta);
        }
    }
    Ok(found)
}

/// Single-summand tensors `u ⊗ v` solving the AYBE.
pub fn search_aybe(a: &SCAlgebra, mode: SearchMode) -> Result<Vec<TensorElement>> {
    let n = a.dim;
    let p = a.modulus.get();
    let pairs: Vec<(Vector, Vector)> = match mode {
        SearchMode::Exhaustive { max_dim } => {
            exhaustive_guard(n, p, max_dim)?;
            let vectors: Vec<Vector> = (0..p.pow(n as u32))
                .map(|mut code| {
                    (0..n)
                        .map(|_| {
                            let d = code % p;
                            code /= p;
                            d
                        })
                        .collect()
                })
                .collect();
            vectors
                .iter()
                .flat_map(|u| vectors.iter().map(move |v| (u.clone(), v.clone())))
                .collect()
        }
        SearchMode::Random { count, seed } => {
            let mut rng = SampleRng::seed_from_u64(seed);
            (0..count)
                .map(|_| {
                    let u = a.random_element(&mut rng, 1, 1);
                    let v = a.random_element(&mut rng, 1, 1);
                    (u, v)
                })
                .collect()
        }
    };
    let mut found = Vec::new();
    for (u, v) in pairs {
        let r = TensorElement::new(a, vec![(u, v)])?;
        if check_aybe(a, &r)?.passes() {
            found.push(r);
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: u64) -> Modulus {
        Modulus::new(p).unwrap()
    }

    #[test]
    fn matrix_units() {
        let a = matrix_algebra(2, m(2));
        let e11 = a.basis_vector(0);
        let e12 = a.basis_vector(1);
        assert_eq!(a.algebra_mul(&e12, &e12).unwrap(), vec![0; 4]);
        assert_eq!(a.algebra_mul(&e11, &e12).unwrap(), e12);
        let one = vec![1, 0, 0, 1];
        for i in 0..4 {
            let e = a.basis_vector(i);
            assert_eq!(a.algebra_mul(&one, &e).unwrap(), e);
            assert_eq!(a.algebra_mul(&e, &one).unwrap(), e);
        }
        assert!(a.algebra_mul(&[1, 0], &e11).is_err());
    }

    #[test]
    fn frobenius_examples() {
        let a = matrix_algebra(2, m(2));
        assert_eq!(a.frobenius(&a.basis_vector(1)).unwrap(), vec![0; 4]);
        let a3 = matrix_algebra(2, m(3));
        for x in 0..3 {
            for y in 0..3 {
                let d = vec![x, 0, 0, y];
                let mm = m(3);
                assert_eq!(a3.frobenius(&d).unwrap(), vec![mm.pow(x, 3), 0, 0, mm.pow(y, 3)]);
            }
        }
    }

    #[test]
    fn non_associative_rejected() {
        // e0·e0 = e1, everything else zero except e1·e0 = e0
        let r = SCAlgebra::from_sparse(m(2), vec!["a".into(), "b".into()], &[(0, 0, 1, 1), (1, 0, 0, 1)]);
        assert!(matches!(r, Err(Error::NotAssociative(..))));
    }

    #[test]
    fn rota_baxter_identity_depends_on_characteristic() {
        let a2 = matrix_algebra(2, m(2));
        assert!(check_rota_baxter(&a2, &LinearOperator::zero(&a2)).unwrap().passes());
        // e11·e11 = e11 fails first: LHS e11, RHS 2·e11
        let rep = check_rota_baxter(&a2, &LinearOperator::identity(&a2)).unwrap();
        assert_eq!(rep.violations[0].residual, vec![1, 0, 0, 0]);
        let a3 = matrix_algebra(2, m(3));
        let rep = check_rota_baxter(&a3, &LinearOperator::identity(&a3)).unwrap();
        assert!(!rep.passes());
        assert_eq!(rep.violations[0].i, 0);
        assert_eq!(rep.violations[0].j, 0);
        assert_eq!(rep.violations[0].residual, vec![2, 0, 0, 0]);
        assert!(matches!(
            induced_dendriform(&a3, &LinearOperator::identity(&a3)),
            Err(Error::NotRotaBaxter(0, 0))
        ));
    }

    #[test]
    fn dual_numbers_search() {
        let a = truncated_polynomial(2, m(2));
        let all = a
            .candidate_operators(SearchMode::Exhaustive { max_dim: 3 })
            .unwrap();
        assert_eq!(all.len(), 16);
        let found = search_rota_baxter(&a, SearchMode::Exhaustive { max_dim: 3 }).unwrap();
        assert!(found.contains(&LinearOperator::zero(&a)));
        assert!(!found.contains(&LinearOperator::identity(&a)));
        // multiplication by x squares to zero
        let times_x = LinearOperator::new(m(2), 2, &[0, 0, 1, 0]).unwrap();
        assert!(found.contains(&times_x));
        for beta in &found {
            assert!(check_rota_baxter(&a, beta).unwrap().passes());
        }
    }

    #[test]
    fn exhaustive_guard_applies() {
        let a = matrix_algebra(2, m(2));
        assert!(matches!(
            search_rota_baxter(&a, SearchMode::Exhaustive { max_dim: 3 }),
            Err(Error::SearchTooLarge(_))
        ));
        let a5 = truncated_polynomial(2, m(5));
        assert!(search_aybe(&a5, SearchMode::Exhaustive { max_dim: 3 }).is_err());
    }

    #[test]
    fn aybe_examples() {
        let a = truncated_polynomial(2, m(2));
        assert!(check_aybe(&a, &TensorElement::zero()).unwrap().passes());
        let x = a.basis_vector(1);
        let r = TensorElement::new(&a, vec![(x.clone(), x.clone())]).unwrap();
        assert!(check_aybe(&a, &r).unwrap().passes());
        let beta = rb_from_tensor(&a, &r).unwrap();
        // x·a·x = x²a = 0
        assert!(beta.is_zero());
        assert!(rb_from_tensor(&a, &TensorElement::zero()).unwrap().is_zero());
        let one = a.basis_vector(0);
        let bad = TensorElement::new(&a, vec![(one.clone(), one)]).unwrap();
        assert!(!check_aybe(&a, &bad).unwrap().passes());
        assert!(matches!(rb_from_tensor(&a, &bad), Err(Error::AybeViolated(_))));
    }

    #[test]
    fn tensor_prunes_zero_pairs() {
        let a = truncated_polynomial(2, m(3));
        let r = TensorElement::new(&a, vec![(vec![0, 0], vec![1, 1]), (vec![3, 1], vec![1, 0])]).unwrap();
        assert_eq!(r.summands(), &[(vec![0, 1], vec![1, 0])]);
    }

    #[test]
    fn json_formats() {
        let a = upper_triangular(2, m(3));
        let back = SCAlgebra::from_file(&a.to_file()).unwrap();
        assert_eq!(back, a);
        let beta = LinearOperator::new(m(3), 3, &[1, 2, 0, 0, 1, 0, 0, 0, -1]).unwrap();
        assert_eq!(beta.to_json(), serde_json::json!({"matrix": [1, 2, 0, 0, 1, 0, 0, 0, 2]}));
        assert_eq!(LinearOperator::from_json(&beta.to_json(), &a).unwrap(), beta);
        let r = TensorElement::new(&a, vec![(vec![1, 0, 2], vec![0, 1, 0])]).unwrap();
        assert_eq!(TensorElement::from_json(&r.to_json(), &a).unwrap(), r);
        let d = induced_dendriform(&a, &LinearOperator::zero(&a)).unwrap();
        assert_eq!(BilinearStructure::from_file(&d.to_file()).unwrap(), d);
    }

    #[test]
    fn truncated_polynomial_products() {
        let a = truncated_polynomial(3, m(5));
        let x = a.basis_vector(1);
        assert_eq!(a.algebra_mul(&x, &x).unwrap(), a.basis_vector(2));
        assert_eq!(a.algebra_mul(&a.basis_vector(2), &x).unwrap(), vec![0; 3]);
        assert!(a.is_commutative());
        assert!(!matrix_algebra(2, m(5)).is_commutative());
    }
}

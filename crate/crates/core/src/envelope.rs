//! Truncated enveloping dendriform algebras of finite-dimensional pre-Lie
//! algebras, restricted or not.
//!
//! The relation ideal is generated inside the free dendriform algebra on the
//! basis of `P` and closed under `≺`, `≻` with basis trees on both sides.
//! Products above the truncation degree `d` are discarded, so the computed
//! span is the image of the ideal in `Dend / Dend_{>d}`. Its intersection with
//! the filtration step `F_≤n` contains the true one, which makes the reported
//! quotient dimensions lower bounds that can only grow with `d`.

use std::collections::VecDeque;

use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::field::Modulus;
use crate::freedend::{DendElem, FreeDend};
use crate::jacobson::jacobson_sum;
use crate::laws::{verify_prelie, verify_restricted_prelie, SamplePlan};
use crate::linalg::SparseEchelon;
use crate::scalg::{
    bilinear, check_dim, dense_constants, reduce_vector, sparse_constants, unit_vector, vadd,
    vscale, SparseEntry, Vector,
};
use crate::structure::{InducedLie, PMap, PreLie, SampleRng, VectorSpace};
use crate::trees::{enumerate_trees, free_dimension, trees_up_to, Tree};

/// JSON pre-Lie format: `{ "p", "dim", "basis"?, "constants": [[i, j, k, c]], "pmap"? }`
/// where `pmap[i]` is the coordinate vector of `e_i^[p]`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PreLieFile {
    pub p: u64,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub basis: Vec<String>,
    pub constants: Vec<SparseEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pmap: Option<Vec<Vec<i64>>>,
}

/// A validated finite-dimensional pre-Lie algebra, optionally with a p-map
/// given on the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreLieData {
    modulus: Modulus,
    dim: usize,
    basis: Vec<String>,
    constants: Vec<u64>,
    pmap: Option<Vec<Vector>>,
}

const VALIDATION_SAMPLES: usize = 64;

impl PreLieData {
    /// Checks left symmetry on all basis triples and, with a p-map table,
    /// the restricted relations on basis elements and seeded random sums.
    pub fn new(
        modulus: Modulus,
        basis: Vec<String>,
        constants: Vec<u64>,
        pmap: Option<Vec<Vector>>,
    ) -> Result<Self> {
        let n = basis.len();
        if constants.len() != n * n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n * n,
                found: constants.len(),
            });
        }
        if let Some(table) = &pmap {
            if table.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: table.len(),
                });
            }
            for v in table {
                check_dim(n, v)?;
            }
        }
        let data = PreLieData {
            modulus,
            dim: n,
            basis,
            constants: constants.into_iter().map(|c| c % modulus.get()).collect(),
            pmap: pmap.map(|t| t.iter().map(|v| vscale(modulus, 1, v)).collect()),
        };
        data.validate()?;
        Ok(data)
    }

    fn validate(&self) -> Result<()> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (x, y, z) = (unit_vector(n, i), unit_vector(n, j), unit_vector(n, k));
                    let a = |x: &Vector, y: &Vector| -> Result<Vector> {
                        self.sub(
                            &self.prelie(&self.prelie(x, y)?, &z)?,
                            &self.prelie(x, &self.prelie(y, &z)?)?,
                        )
                    };
                    if a(&x, &y)? != a(&y, &x)? {
                        return Err(Error::NotPreLie(i, j, k));
                    }
                }
            }
        }
        if self.pmap.is_some() {
            let plan = SamplePlan::exhaustive(1)
                .with_total_degree(None)
                .with_random(VALIDATION_SAMPLES, 0)
                .with_max_counterexamples(1);
            let pmap = self.pmap_fn();
            let report = verify_restricted_prelie(self, &pmap, "p-map table", &plan)?;
            if let Some(c) = report.counterexamples.first() {
                return Err(Error::NotRestricted(format!(
                    "{} fails at {}",
                    c.relation,
                    Value::from(c.inputs.clone())
                )));
            }
        }
        Ok(())
    }

    pub fn from_sparse(
        modulus: Modulus,
        dim: usize,
        entries: &[SparseEntry],
        pmap: Option<Vec<Vec<i64>>>,
    ) -> Result<Self> {
        let c = dense_constants(modulus, dim, entries)?;
        let table = pmap.map(|t| t.iter().map(|v| reduce_vector(modulus, v)).collect());
        PreLieData::new(modulus, (0..dim).map(|i| format!("e{}", i + 1)).collect(), c, table)
    }

    pub fn from_file(f: &PreLieFile) -> Result<Self> {
        let m = Modulus::new(f.p)?;
        let mut data = PreLieData::from_sparse(m, f.dim, &f.constants, f.pmap.clone())?;
        if !f.basis.is_empty() {
            if f.basis.len() != f.dim {
                return Err(Error::DimensionMismatch {
                    expected: f.dim,
                    found: f.basis.len(),
                });
            }
            data.basis = f.basis.clone();
        }
        Ok(data)
    }

    pub fn to_file(&self) -> PreLieFile {
        PreLieFile {
            p: self.modulus.get(),
            dim: self.dim,
            basis: self.basis.clone(),
            constants: sparse_constants(self.dim, &self.constants),
            pmap: self
                .pmap
                .as_ref()
                .map(|t| t.iter().map(|v| v.iter().map(|c| *c as i64).collect()).collect()),
        }
    }

    /// The zero product on `F_p^dim`.
    pub fn abelian(modulus: Modulus, dim: usize, pmap: Option<Vec<Vec<i64>>>) -> Result<Self> {
        PreLieData::from_sparse(modulus, dim, &[], pmap)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn has_pmap(&self) -> bool {
        self.pmap.is_some()
    }

    /// The p-map extended from the basis through `(αx)^[p] = α^p x^[p]` and
    /// additivity up to the Jacobson terms.
    pub fn pmap_apply(&self, x: &[u64]) -> Result<Vector> {
        let table = self.pmap.as_ref().ok_or(Error::MissingPMap)?;
        check_dim(self.dim, x)?;
        let m = self.modulus;
        let p = m.get();
        let lie = InducedLie(self);
        let mut acc = vec![0; self.dim];
        let mut acc_p = vec![0; self.dim];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let term = vscale(m, a, &unit_vector(self.dim, i));
            let term_p = vscale(m, m.pow(a, p), &table[i]);
            let s = jacobson_sum(&lie, &acc, &term)?;
            acc_p = vadd(m, &vadd(m, &acc_p, &term_p)?, &s)?;
            acc = vadd(m, &acc, &term)?;
        }
        Ok(acc_p)
    }

    pub fn pmap_fn(&self) -> PMap<'_, Vector> {
        PMap::new("table", move |x: &Vector| self.pmap_apply(x))
    }
}

impl VectorSpace for PreLieData {
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

impl PreLie for PreLieData {
    fn prelie(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        check_dim(self.dim, x)?;
        check_dim(self.dim, y)?;
        Ok(bilinear(self.modulus, self.dim, &self.constants, x, y))
    }
}

/// Checks that `P` still passes the left-symmetry verifier; used by callers
/// that build data without going through [`PreLieData::new`].
pub fn prelie_sanity(p: &PreLieData) -> Result<bool> {
    let plan = SamplePlan::exhaustive(1).with_total_degree(None);
    Ok(verify_prelie(p, "pre-Lie data", &plan)?.passed())
}

fn free_algebra(p: &PreLieData, d: Option<usize>) -> FreeDend {
    match d {
        Some(d) => FreeDend::truncated(p.modulus, p.dim as u32, d),
        None => FreeDend::new(p.modulus, p.dim as u32),
    }
}

/// `Σ x_i Y_i` in degree one.
pub fn embed(alg: &FreeDend, x: &[u64]) -> Result<DendElem> {
    let mut out = alg.zero();
    for (i, &c) in x.iter().enumerate() {
        if c != 0 {
            out = out.add(&alg.generator(i as u32)?.scale(c))?;
        }
    }
    Ok(out)
}

/// `{e_i, e_j} − (Y_i ≻ Y_j − Y_j ≺ Y_i)` for every ordered basis pair.
pub fn relation_generators_u(p: &PreLieData) -> Result<Vec<DendElem>> {
    let alg = free_algebra(p, None);
    let mut out = Vec::with_capacity(p.dim * p.dim);
    for i in 0..p.dim {
        for j in 0..p.dim {
            let (ei, ej) = (unit_vector(p.dim, i), unit_vector(p.dim, j));
            let bracket = embed(&alg, &p.prelie(&ei, &ej)?)?;
            let yi = alg.generator(i as u32)?;
            let yj = alg.generator(j as u32)?;
            out.push(bracket.sub(&alg.prelie_bracket(&yi, &yj)?)?);
        }
    }
    Ok(out)
}

/// The pair relations plus `e_i^[p] − Y_i^{⋆p}` for every basis element.
pub fn relation_generators_up(p: &PreLieData) -> Result<Vec<DendElem>> {
    let table = p.pmap.as_ref().ok_or(Error::MissingPMap)?;
    let alg = free_algebra(p, None);
    let mut out = relation_generators_u(p)?;
    for (i, image) in table.iter().enumerate() {
        let yi = alg.generator(i as u32)?;
        out.push(embed(&alg, image)?.sub(&alg.star_power(&yi, p.modulus.get())?)?);
    }
    Ok(out)
}

/// Echelon basis of the dendriform ideal generated by `generators` inside
/// `alg`, which must carry the truncation.
pub fn ideal_span(alg: &FreeDend, generators: &[DendElem]) -> Result<SparseEchelon<Tree>> {
    let d = alg
        .truncation()
        .ok_or_else(|| Error::Parse("ideal_span needs a truncated algebra".into()))?;
    let mut echelon = SparseEchelon::new(alg.modulus());
    let multipliers: Vec<DendElem> = trees_up_to(d.saturating_sub(1), alg.generators())
        .into_iter()
        .map(|t| alg.basis(t))
        .collect::<Result<_>>()?;
    let mut queue = VecDeque::new();
    for g in generators {
        let g = g.truncate(d);
        if let Some(row) = echelon.insert(g.as_map().clone()) {
            queue.push_back(row);
        }
    }
    while let Some(row) = queue.pop_front() {
        let r = DendElem::from_map(row, alg.modulus(), alg.generators());
        let low = r.min_degree().unwrap_or(d);
        for t in &multipliers {
            if low + t.max_degree().unwrap_or(0) > d {
                break;
            }
            let products = [
                alg.dend_left(t, &r)?,
                alg.dend_left(&r, t)?,
                alg.dend_right(t, &r)?,
                alg.dend_right(&r, t)?,
            ];
            for prod in products {
                if prod.is_zero() {
                    continue;
                }
                if let Some(new) = echelon.insert(prod.as_map().clone()) {
                    queue.push_back(new);
                }
            }
        }
    }
    echelon.canonicalize();
    Ok(echelon)
}

/// One filtration step of a [`QuotientReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientRow {
    pub n: usize,
    pub free_dim: u64,
    pub cumulative_free: u64,
    pub ideal_rank: u64,
    pub quotient_dim: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stabilized: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientReport {
    pub p: u64,
    pub generators: usize,
    pub truncation: usize,
    pub restricted: bool,
    pub relation_count: usize,
    pub rows: Vec<QuotientRow>,
    /// Pivot trees of the reduced echelon basis, in canonical order.
    pub pivots: Vec<Tree>,
    pub warnings: Vec<String>,
}

impl QuotientReport {
    pub fn quotient_dims(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.quotient_dim).collect()
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("reports serialize")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,free_dim,cumulative_free,ideal_rank,quotient_dim,stabilized\n");
        for r in &self.rows {
            let stab = r.stabilized.map_or(String::new(), |s| s.to_string());
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                r.n, r.free_dim, r.cumulative_free, r.ideal_rank, r.quotient_dim, stab
            ));
        }
        out
    }
}

/// The ideal of `U(P)` or `U_p(P)` at one truncation degree.
pub struct Envelope<'a> {
    data: &'a PreLieData,
    algebra: FreeDend,
    generators: Vec<DendElem>,
    echelon: SparseEchelon<Tree>,
    restricted: bool,
    truncation: usize,
}

impl<'a> Envelope<'a> {
    pub fn compute(data: &'a PreLieData, d: usize, restricted: bool) -> Result<Self> {
        if d == 0 {
            return Err(Error::EmptyDegree);
        }
        let generators = if restricted {
            relation_generators_up(data)?
        } else {
            relation_generators_u(data)?
        };
        let algebra = free_algebra(data, Some(d));
        let echelon = ideal_span(&algebra, &generators)?;
        Ok(Envelope {
            data,
            algebra,
            generators,
            echelon,
            restricted,
            truncation: d,
        })
    }

    pub fn algebra(&self) -> &FreeDend {
        &self.algebra
    }

    pub fn generators(&self) -> &[DendElem] {
        &self.generators
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    /// `true` iff `x` reduces to zero against the ideal.
    pub fn contains(&self, x: &DendElem) -> Result<bool> {
        if let Some(deg) = x.max_degree() {
            if deg > self.truncation {
                return Err(Error::DegreeExceedsTruncation {
                    degree: deg,
                    truncation: self.truncation,
                });
            }
        }
        if x.modulus() != self.algebra.modulus() || x.generators() != self.algebra.generators() {
            return Err(Error::AlgebraMismatch {
                left_p: self.algebra.modulus().get(),
                left_g: self.algebra.generators(),
                right_p: x.modulus().get(),
                right_g: x.generators(),
            });
        }
        Ok(self.echelon.contains(x.as_map().clone()))
    }

    pub fn report(&self) -> QuotientReport {
        let g = self.data.dim;
        let d = self.truncation;
        let mut warnings = Vec::new();
        let too_high = self
            .generators
            .iter()
            .filter(|x| x.max_degree().is_some_and(|m| m > d))
            .count();
        if too_high > 0 {
            warnings.push(format!(
                "{too_high} relation generator(s) reach above degree {d}; their top parts were truncated"
            ));
        }
        let mut rows = Vec::new();
        if g > 0 {
            let mut cumulative = 0;
            for n in 1..=d {
                let free = free_dimension(n, g as u32);
                cumulative += free;
                let rank = self.echelon.pivots().filter(|t| t.degree() <= n).count() as u64;
                rows.push(QuotientRow {
                    n,
                    free_dim: free,
                    cumulative_free: cumulative,
                    ideal_rank: rank,
                    quotient_dim: cumulative - rank,
                    stabilized: None,
                });
            }
        }
        QuotientReport {
            p: self.data.modulus.get(),
            generators: g,
            truncation: d,
            restricted: self.restricted,
            relation_count: self.generators.len(),
            rows,
            pivots: self.echelon.pivots().cloned().collect(),
            warnings,
        }
    }
}

/// Filtered quotient dimensions at truncation `d`.
pub fn quotient_dims(p: &PreLieData, d: usize, restricted: bool) -> Result<QuotientReport> {
    Ok(Envelope::compute(p, d, restricted)?.report())
}

/// As [`quotient_dims`], marking each `n` as stabilized when the value agrees
/// with the run at `d + 1`.
pub fn quotient_dims_with_stability(
    p: &PreLieData,
    d: usize,
    restricted: bool,
) -> Result<QuotientReport> {
    let mut report = quotient_dims(p, d, restricted)?;
    let next = quotient_dims(p, d + 1, restricted)?;
    for (row, other) in report.rows.iter_mut().zip(&next.rows) {
        row.stabilized = Some(row.quotient_dim == other.quotient_dim);
    }
    Ok(report)
}

/// Membership of `x` in the ideal at truncation `d`.
pub fn membership_check(p: &PreLieData, d: usize, restricted: bool, x: &DendElem) -> Result<bool> {
    Envelope::compute(p, d, restricted)?.contains(x)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditEntry {
    pub x: Vector,
    pub in_ideal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub explanation: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub seed: u64,
    pub samples: usize,
    pub members: usize,
    pub failures: usize,
    pub unexplained: usize,
    pub entries: Vec<AuditEntry>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.unexplained == 0
    }
}

/// Tests `x^[p] − x^{⋆p}` for seeded random `x` against the ideal generated
/// from basis relations only. Failures with `d < p` are attributed to the
/// truncation; any other failure counts as unexplained.
pub fn pmap_audit(env: &Envelope<'_>, samples: usize, seed: u64) -> Result<AuditReport> {
    if !env.restricted {
        return Err(Error::MissingPMap);
    }
    let data = env.data;
    let alg = &env.algebra;
    let p = data.modulus.get();
    let mut rng = SampleRng::seed_from_u64(seed);
    let mut entries = Vec::with_capacity(samples);
    for _ in 0..samples {
        let x = data.random_element(&mut rng, 1, 1);
        let lhs = embed(alg, &data.pmap_apply(&x)?)?;
        let rhs = alg.star_power(&embed(alg, &x)?, p)?;
        let in_ideal = env.contains(&lhs.sub(&rhs)?)?;
        let explanation = (!in_ideal && env.truncation < p as usize)
            .then(|| format!("truncation {} is below p = {p}", env.truncation));
        entries.push(AuditEntry {
            x,
            in_ideal,
            explanation,
        });
    }
    let members = entries.iter().filter(|e| e.in_ideal).count();
    let failures = samples - members;
    let unexplained = entries
        .iter()
        .filter(|e| !e.in_ideal && e.explanation.is_none())
        .count();
    Ok(AuditReport {
        seed,
        samples,
        members,
        failures,
        unexplained,
        entries,
    })
}

/// `Catalan(n)·g^n` by enumeration, for cross-checks.
pub fn enumerated_dimension(n: usize, g: u32) -> Result<u64> {
    Ok(enumerate_trees(n, g)?.len() as u64)
}

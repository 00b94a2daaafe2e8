//! Identity verifiers producing machine-readable reports.
//!
//! Every verifier evaluates residuals `lhs − rhs` exactly and records the
//! inputs of each nonzero residual. Multilinear identities are complete on
//! basis tuples; relations involving the p-map are also run on seeded random
//! elements because the p-map is not additive.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use serde::Serialize;
use serde_json::Value;

use crate::error::Result;
use crate::jacobson::jacobson_sum;
use crate::structure::{
    iterate_left, power, Dendriform, InducedLie, Lie, PMap, PreLie, PreLieOf, SampleRng, StarOf,
    VectorSpace,
};

/// Which tuples a verifier evaluates. Recorded verbatim in every report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SamplePlan {
    /// Run over all basis tuples in the degree windows.
    pub exhaustive: bool,
    /// Degree window for the first argument.
    pub x_degrees: (usize, usize),
    /// Degree window for the remaining arguments.
    pub y_degrees: (usize, usize),
    /// Cap on the summed degree of a basis tuple.
    pub max_total_degree: Option<usize>,
    pub random_samples: usize,
    pub seed: u64,
    pub max_counterexamples: usize,
}

impl SamplePlan {
    /// All basis tuples with every degree and the combined degree at most `d`.
    pub fn exhaustive(d: usize) -> Self {
        SamplePlan {
            exhaustive: true,
            x_degrees: (1, d),
            y_degrees: (1, d),
            max_total_degree: Some(d),
            random_samples: 0,
            seed: 0,
            max_counterexamples: 10,
        }
    }

    /// `count` seeded random tuples with degrees at most `d`.
    pub fn random(count: usize, seed: u64, d: usize) -> Self {
        SamplePlan {
            exhaustive: false,
            x_degrees: (1, d),
            y_degrees: (1, d),
            max_total_degree: None,
            random_samples: count,
            seed,
            max_counterexamples: 10,
        }
    }

    pub fn with_random(mut self, count: usize, seed: u64) -> Self {
        self.random_samples = count;
        self.seed = seed;
        self
    }

    pub fn with_x_degrees(mut self, lo: usize, hi: usize) -> Self {
        self.x_degrees = (lo, hi);
        self
    }

    pub fn with_y_degrees(mut self, lo: usize, hi: usize) -> Self {
        self.y_degrees = (lo, hi);
        self
    }

    pub fn with_total_degree(mut self, cap: Option<usize>) -> Self {
        self.max_total_degree = cap;
        self
    }

    pub fn with_max_counterexamples(mut self, cap: usize) -> Self {
        self.max_counterexamples = cap;
        self
    }

    fn describe(&self) -> String {
        match (self.exhaustive, self.random_samples) {
            (true, 0) => "basis-exhaustive".into(),
            (true, n) => format!("basis-exhaustive + {n} seeded random"),
            (false, n) => format!("{n} seeded random"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub relation: String,
    pub inputs: Vec<Value>,
    pub residual: Value,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub checked: usize,
    pub violations: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LawReport {
    pub law: String,
    pub structure: String,
    pub sample: String,
    pub plan: SamplePlan,
    pub seed: u64,
    pub verdict: Verdict,
    pub checked: usize,
    pub violations: usize,
    pub relations: BTreeMap<String, Tally>,
    pub counterexamples: Vec<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn tally(&self, relation: &str) -> Tally {
        self.relations.get(relation).cloned().unwrap_or_default()
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("reports serialize")
    }

    /// Folds `other` into `self`, prefixing its relation names.
    pub fn absorb(&mut self, other: LawReport) {
        for (name, t) in other.relations {
            let slot = self
                .relations
                .entry(format!("{}/{name}", other.law))
                .or_default();
            slot.checked += t.checked;
            slot.violations += t.violations;
        }
        self.checked += other.checked;
        self.violations += other.violations;
        for mut c in other.counterexamples {
            c.relation = format!("{}/{}", other.law, c.relation);
            self.counterexamples.push(c);
        }
        self.finish();
    }

    fn finish(&mut self) {
        self.counterexamples.sort_by(|a, b| {
            (&a.relation, a.inputs.iter().map(Value::to_string).collect::<Vec<_>>())
                .cmp(&(&b.relation, b.inputs.iter().map(Value::to_string).collect()))
        });
        self.counterexamples.truncate(self.plan.max_counterexamples);
        self.verdict = if self.violations == 0 {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
    }
}

struct Run<'a, S: VectorSpace> {
    space: &'a S,
    report: LawReport,
    rng: SampleRng,
}

enum Arg<'e, E> {
    Elem(&'e E),
    Scalar(u64),
}

impl<'a, S: VectorSpace> Run<'a, S> {
    fn new(space: &'a S, law: &str, structure: &str, plan: &SamplePlan) -> Self {
        Run {
            space,
            rng: SampleRng::seed_from_u64(plan.seed),
            report: LawReport {
                law: law.into(),
                structure: structure.into(),
                sample: plan.describe(),
                plan: plan.clone(),
                seed: plan.seed,
                verdict: Verdict::Pass,
                checked: 0,
                violations: 0,
                relations: BTreeMap::new(),
                counterexamples: Vec::new(),
                note: None,
            },
        }
    }

    fn record(&mut self, relation: &str, inputs: &[Arg<'_, S::Elem>], lhs: S::Elem, rhs: S::Elem) -> Result<()> {
        let residual = self.space.sub(&lhs, &rhs)?;
        let tally = self.report.relations.entry(relation.to_string()).or_default();
        tally.checked += 1;
        self.report.checked += 1;
        if !self.space.is_zero(&residual) {
            tally.violations += 1;
            self.report.violations += 1;
            // keep a bounded pool; the final cut happens after sorting
            if self.report.counterexamples.len() < 4 * self.report.plan.max_counterexamples.max(1) {
                let inputs = inputs
                    .iter()
                    .map(|a| match a {
                        Arg::Elem(e) => self.space.describe(e),
                        Arg::Scalar(c) => Value::from(*c),
                    })
                    .collect();
                self.report.counterexamples.push(Counterexample {
                    relation: relation.to_string(),
                    inputs,
                    residual: self.space.describe(&residual),
                });
            }
        }
        Ok(())
    }

    fn basis(&self, window: (usize, usize)) -> Vec<(S::Elem, usize)> {
        if window.0 > window.1 {
            return Vec::new();
        }
        self.space.graded_basis(window.0, window.1)
    }

    fn fits(&self, degrees: &[usize]) -> bool {
        self.report
            .plan
            .max_total_degree
            .is_none_or(|cap| degrees.iter().sum::<usize>() <= cap)
    }

    fn random(&mut self, window: (usize, usize)) -> S::Elem {
        self.space.random_element(&mut self.rng, window.0, window.1)
    }

    /// Exhaustive tuples of the given arity, then the random ones.
    fn tuples(&mut self, arity: usize) -> Vec<Vec<S::Elem>> {
        let plan = self.report.plan.clone();
        let mut out = Vec::new();
        if plan.exhaustive {
            let first = self.basis(plan.x_degrees);
            let rest = self.basis(plan.y_degrees);
            let mut partial: Vec<(Vec<S::Elem>, Vec<usize>)> = first
                .into_iter()
                .map(|(e, d)| (vec![e], vec![d]))
                .filter(|(_, d)| self.fits(d))
                .collect();
            for _ in 1..arity {
                let mut next = Vec::new();
                for (es, ds) in &partial {
                    for (e, d) in &rest {
                        let mut ds2 = ds.clone();
                        ds2.push(*d);
                        if self.fits(&ds2) {
                            let mut es2 = es.clone();
                            es2.push(e.clone());
                            next.push((es2, ds2));
                        }
                    }
                }
                partial = next;
            }
            out.extend(partial.into_iter().map(|(es, _)| es));
        }
        for _ in 0..plan.random_samples {
            let mut t = vec![self.random(plan.x_degrees)];
            for _ in 1..arity {
                t.push(self.random(plan.y_degrees));
            }
            out.push(t);
        }
        out
    }

    /// Every scalar for small `p`, otherwise a seeded handful.
    fn scalars(&mut self) -> Vec<u64> {
        let p = self.space.modulus().get();
        if p <= 13 {
            (0..p).collect()
        } else {
            (0..8).map(|_| self.rng.random_range(0..p)).collect()
        }
    }

    fn finish(mut self, note: Option<&str>) -> LawReport {
        self.report.note = note.map(str::to_string);
        self.report.finish();
        self.report
    }
}

const BILINEAR_NOTE: &str =
    "identities are multilinear, so a pass on all basis tuples implies the identity for all elements";

fn note_for(plan: &SamplePlan) -> Option<&'static str> {
    plan.exhaustive.then_some(BILINEAR_NOTE)
}

/// The three dendriform axioms.
pub fn verify_dendriform<D: Dendriform>(d: &D, tag: &str, plan: &SamplePlan) -> Result<LawReport> {
    let mut run = Run::new(d, "dendriform", tag, plan);
    for t in run.tuples(3) {
        let (x, y, z) = (&t[0], &t[1], &t[2]);
        let args = [Arg::Elem(x), Arg::Elem(y), Arg::Elem(z)];
        let lhs = d.prec(&d.prec(x, y)?, z)?;
        let rhs = d.prec(x, &d.star(y, z)?)?;
        run.record("(x≺y)≺z = x≺(y⋆z)", &args, lhs, rhs)?;
        let lhs = d.prec(&d.succ(x, y)?, z)?;
        let rhs = d.succ(x, &d.prec(y, z)?)?;
        run.record("(x≻y)≺z = x≻(y≺z)", &args, lhs, rhs)?;
        let lhs = d.succ(&d.star(x, y)?, z)?;
        let rhs = d.succ(x, &d.succ(y, z)?)?;
        run.record("(x⋆y)≻z = x≻(y≻z)", &args, lhs, rhs)?;
    }
    Ok(run.finish(note_for(plan)))
}

fn associator<P: PreLie>(pl: &P, x: &P::Elem, y: &P::Elem, z: &P::Elem) -> Result<P::Elem> {
    pl.sub(&pl.prelie(&pl.prelie(x, y)?, z)?, &pl.prelie(x, &pl.prelie(y, z)?)?)
}

fn record_prelie<P: PreLie>(run: &mut Run<'_, P>, pl: &P) -> Result<()> {
    for t in run.tuples(3) {
        let (x, y, z) = (&t[0], &t[1], &t[2]);
        run.record(
            "a(x,y,z) = a(y,x,z)",
            &[Arg::Elem(x), Arg::Elem(y), Arg::Elem(z)],
            associator(pl, x, y, z)?,
            associator(pl, y, x, z)?,
        )?;
    }
    Ok(())
}

/// Left symmetry of the associator.
pub fn verify_prelie<P: PreLie>(pl: &P, tag: &str, plan: &SamplePlan) -> Result<LawReport> {
    let mut run = Run::new(pl, "pre-Lie", tag, plan);
    record_prelie(&mut run, pl)?;
    Ok(run.finish(note_for(plan)))
}

/// `x ≻ y = y ≺ x`.
pub fn verify_zinbiel<D: Dendriform>(d: &D, tag: &str, plan: &SamplePlan) -> Result<LawReport> {
    let mut run = Run::new(d, "zinbiel", tag, plan);
    for t in run.tuples(2) {
        let (x, y) = (&t[0], &t[1]);
        run.record("x≻y = y≺x", &[Arg::Elem(x), Arg::Elem(y)], d.succ(x, y)?, d.prec(y, x)?)?;
    }
    Ok(run.finish(note_for(plan)))
}

fn record_restricted_common<S: VectorSpace, L: Lie<Elem = S::Elem>>(
    run: &mut Run<'_, S>,
    lie: &L,
    pmap: &PMap<'_, S::Elem>,
    pairs: &[Vec<S::Elem>],
) -> Result<()> {
    let s = run.space;
    let p = s.modulus().get();
    let m = s.modulus();
    let scalars = run.scalars();
    let mut singles: Vec<S::Elem> = Vec::new();
    for t in pairs {
        if !singles.contains(&t[0]) {
            singles.push(t[0].clone());
        }
    }
    for x in &singles {
        let xp = pmap.apply(x)?;
        for &a in &scalars {
            run.record(
                "(αx)^[p] = α^p x^[p]",
                &[Arg::Scalar(a), Arg::Elem(x)],
                pmap.apply(&s.scale(a, x))?,
                s.scale(m.pow(a, p), &xp),
            )?;
        }
    }
    for t in pairs {
        let (x, y) = (&t[0], &t[1]);
        let lhs = pmap.apply(&s.add(x, y)?)?;
        let rhs = s.add(
            &s.add(&pmap.apply(x)?, &pmap.apply(y)?)?,
            &jacobson_sum(lie, x, y)?,
        )?;
        run.record(
            "(x+y)^[p] = x^[p] + y^[p] + Σ s_i(x,y)",
            &[Arg::Elem(x), Arg::Elem(y)],
            lhs,
            rhs,
        )?;
    }
    Ok(())
}

/// Antisymmetry, Jacobi, then the three p-map relations of a restricted Lie
/// algebra.
pub fn verify_restricted_lie<L: Lie>(
    lie: &L,
    pmap: &PMap<'_, L::Elem>,
    tag: &str,
    plan: &SamplePlan,
) -> Result<LawReport> {
    let mut run = Run::new(lie, "restricted Lie", tag, plan);
    let p = lie.modulus().get();
    for t in run.tuples(1) {
        let x = &t[0];
        run.record("[x,x] = 0", &[Arg::Elem(x)], lie.bracket(x, x)?, lie.zero())?;
    }
    for t in run.tuples(3) {
        let (x, y, z) = (&t[0], &t[1], &t[2]);
        let cyc = lie.add(
            &lie.add(
                &lie.bracket(x, &lie.bracket(y, z)?)?,
                &lie.bracket(y, &lie.bracket(z, x)?)?,
            )?,
            &lie.bracket(z, &lie.bracket(x, y)?)?,
        )?;
        run.record("Jacobi", &[Arg::Elem(x), Arg::Elem(y), Arg::Elem(z)], cyc, lie.zero())?;
    }
    let pairs = run.tuples(2);
    for t in &pairs {
        let (x, y) = (&t[0], &t[1]);
        let lhs = lie.bracket(&pmap.apply(x)?, y)?;
        let rhs = iterate_left(x, y, p, |a, b| lie.bracket(a, b))?;
        run.record("[x^[p],y] = ad_x^p(y)", &[Arg::Elem(x), Arg::Elem(y)], lhs, rhs)?;
    }
    record_restricted_common(&mut run, lie, pmap, &pairs)?;
    Ok(run.finish(None))
}

/// Left symmetry, then the four p-map relations of a restricted pre-Lie
/// algebra. The right-multiplication relation is evaluated on its own even
/// though it may follow from the others.
pub fn verify_restricted_prelie<P: PreLie>(
    pl: &P,
    pmap: &PMap<'_, P::Elem>,
    tag: &str,
    plan: &SamplePlan,
) -> Result<LawReport> {
    let mut run = Run::new(pl, "restricted pre-Lie", tag, plan);
    let lie = InducedLie(pl);
    let p = pl.modulus().get();
    record_prelie(&mut run, pl)?;
    let pairs = run.tuples(2);
    for t in &pairs {
        let (x, y) = (&t[0], &t[1]);
        let xp = pmap.apply(x)?;
        let nested = iterate_left(x, y, p, |a, b| pl.prelie(a, b))?;
        let ad = iterate_left(x, y, p, |a, b| lie.bracket(a, b))?;
        let args = [Arg::Elem(x), Arg::Elem(y)];
        run.record("{x^[p],y} = {x,{x,…,y}}", &args, pl.prelie(&xp, y)?, nested.clone())?;
        run.record(
            "{y,x^[p]} = {x,{x,…,y}} − [x,[x,…,y]]",
            &args,
            pl.prelie(y, &xp)?,
            pl.sub(&nested, &ad)?,
        )?;
    }
    record_restricted_common(&mut run, &lie, pmap, &pairs)?;
    Ok(run.finish(None))
}

/// Witnesses of the forgetful-functor squares: the Lie bracket through the
/// pre-Lie route equals the commutator of `⋆`, and the pre-Lie side's p-map
/// equals the `⋆`-Frobenius.
pub fn verify_functor_squares<D: Dendriform>(d: &D, tag: &str, plan: &SamplePlan) -> Result<LawReport> {
    let mut run = Run::new(d, "functor squares", tag, plan);
    let pre = PreLieOf(d);
    let lie = InducedLie(&pre);
    let star = StarOf(d);
    let p = d.modulus().get();
    let pre_pmap = PMap::star_power(d);
    let pairs = run.tuples(2);
    for t in &pairs {
        let (x, y) = (&t[0], &t[1]);
        let via_ass = d.sub(&d.star(x, y)?, &d.star(y, x)?)?;
        run.record(
            "{x,y} − {y,x} = x⋆y − y⋆x",
            &[Arg::Elem(x), Arg::Elem(y)],
            lie.bracket(x, y)?,
            via_ass,
        )?;
    }
    let mut singles: Vec<D::Elem> = Vec::new();
    for t in &pairs {
        if !singles.contains(&t[0]) {
            singles.push(t[0].clone());
        }
    }
    for x in &singles {
        run.record(
            "p-map(pre-Lie) = Frobenius(⋆)",
            &[Arg::Elem(x)],
            pre_pmap.apply(x)?,
            power(&star, x, p)?,
        )?;
    }
    Ok(run.finish(note_for(plan)))
}

/// Relation `{x^[p],y} = {x,{x,…,y}}` for the p-map `x ↦ {x,{x,…{x,x}}}`.
pub fn verify_nested_pmap<P: PreLie>(pl: &P, tag: &str, plan: &SamplePlan) -> Result<LawReport> {
    let mut run = Run::new(pl, "nested p-map", tag, plan);
    let pmap = PMap::nested_prelie(pl);
    let p = pl.modulus().get();
    for t in run.tuples(2) {
        let (x, y) = (&t[0], &t[1]);
        let lhs = pl.prelie(&pmap.apply(x)?, y)?;
        let rhs = iterate_left(x, y, p, |a, b| pl.prelie(a, b))?;
        run.record("{x^{p},y} = {x,{x,…,y}}", &[Arg::Elem(x), Arg::Elem(y)], lhs, rhs)?;
    }
    Ok(run.finish(None))
}

/// `(x≻y)≺x = x≻(y≺x)` and `(L_x − R_x)^p = L_x^p − R_x^p` applied to `y`,
/// with `L_x y = x≻y`, `R_x y = y≺x`.
pub fn verify_operator_identities<D: Dendriform>(
    d: &D,
    tag: &str,
    plan: &SamplePlan,
) -> Result<LawReport> {
    let mut run = Run::new(d, "L/R operators", tag, plan);
    let p = d.modulus().get();
    for t in run.tuples(2) {
        let (x, y) = (&t[0], &t[1]);
        let args = [Arg::Elem(x), Arg::Elem(y)];
        run.record(
            "(x≻y)≺x = x≻(y≺x)",
            &args,
            d.prec(&d.succ(x, y)?, x)?,
            d.succ(x, &d.prec(y, x)?)?,
        )?;
        let diff = iterate_left(x, y, p, |a, b| d.sub(&d.succ(a, b)?, &d.prec(b, a)?))?;
        let lp = iterate_left(x, y, p, |a, b| d.succ(a, b))?;
        let rp = iterate_left(x, y, p, |a, b| d.prec(b, a))?;
        run.record("(L_x−R_x)^p = L_x^p − R_x^p", &args, diff, d.sub(&lp, &rp)?)?;
    }
    Ok(run.finish(None))
}

//! Jacobson's formula on matrix algebras: the Lie polynomials `s_i` and the
//! restricted Lie laws for the Frobenius map `x ↦ x^p`.

use dendriform_fp::field::Modulus;
use dendriform_fp::jacobson::{jacobson_sum, s_coefficients};
use dendriform_fp::laws::{verify_restricted_lie, SamplePlan};
use dendriform_fp::scalg::matrix_algebra;
use dendriform_fp::structure::{Commutator, PMap, SampleRng, VectorSpace};
use rand::SeedableRng;

fn main() -> dendriform_fp::Result<()> {
    let mut rng = SampleRng::seed_from_u64(1);
    for p in [2, 3, 5] {
        let a = matrix_algebra(2, Modulus::new(p)?);
        let lie = Commutator(&a);
        let x = a.random_element(&mut rng, 1, 1);
        let y = a.random_element(&mut rng, 1, 1);
        println!("p = {p}, x = {x:?}, y = {y:?}");
        for (i, s) in s_coefficients(&lie, &x, &y)?.iter().enumerate() {
            println!("  s_{} = {s:?}", i + 1);
        }
        println!("  Σ s_i = {:?}", jacobson_sum(&lie, &x, &y)?);
        let plan = SamplePlan::exhaustive(1).with_total_degree(None).with_random(50, p);
        let report = verify_restricted_lie(&lie, &PMap::frobenius(&a), "M2", &plan)?;
        println!("  restricted Lie laws: {:?} over {} checks", report.verdict, report.checked);
    }
    Ok(())
}

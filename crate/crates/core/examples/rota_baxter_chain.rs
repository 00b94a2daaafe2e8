//! Rota-Baxter operators on small algebras, the dendriform structures they
//! induce, and which p-maps make the resulting pre-Lie algebras restricted.

use dendriform_fp::field::Modulus;
use dendriform_fp::fixtures::dual_numbers;
use dendriform_fp::laws::{verify_dendriform, verify_restricted_prelie, SamplePlan};
use dendriform_fp::scalg::{
    check_rota_baxter, induced_dendriform, matrix_algebra, search_rota_baxter, LinearOperator,
    SCAlgebra, SearchMode,
};
use dendriform_fp::structure::{PMap, PreLieOf};

fn survey(name: &str, a: &SCAlgebra, max_dim: usize) -> dendriform_fp::Result<()> {
    let plan = SamplePlan::exhaustive(1).with_total_degree(None).with_random(20, 3);
    let found = search_rota_baxter(a, SearchMode::Exhaustive { max_dim })?;
    let (mut star, mut power) = (0, 0);
    for beta in &found {
        let d = induced_dendriform(a, beta)?;
        assert!(verify_dendriform(&d, name, &plan)?.passed());
        let pre = PreLieOf(&d);
        star += verify_restricted_prelie(&pre, &PMap::star_power(&d), name, &plan)?.passed() as usize;
        power += verify_restricted_prelie(&pre, &PMap::frobenius(a), name, &plan)?.passed() as usize;
    }
    println!(
        "{name}: {} operators; restricted with x^⋆p: {star}, with x^·p: {power}",
        found.len()
    );
    Ok(())
}

fn main() -> dendriform_fp::Result<()> {
    let f2 = Modulus::new(2)?;
    survey("F2[x]/(x^2)", &dual_numbers(f2), 3)?;
    survey("M2(F2)", &matrix_algebra(2, f2), 4)?;

    let a = dual_numbers(f2);
    let report = check_rota_baxter(&a, &LinearOperator::identity(&a))?;
    for v in report.violations.iter().take(3) {
        println!("identity fails at (e{}, e{}): residual {:?}", v.i, v.j, v.residual);
    }
    Ok(())
}

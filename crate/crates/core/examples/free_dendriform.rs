//! Products of planar binary trees in the free dendriform algebra, and an
//! exhaustive check of the three axioms up to combined degree 5.

use dendriform_fp::field::Modulus;
use dendriform_fp::freedend::FreeDend;
use dendriform_fp::laws::{verify_dendriform, SamplePlan};
use dendriform_fp::trees::{free_dimension, Tree};

fn main() -> dendriform_fp::Result<()> {
    let m = Modulus::new(3)?;
    let alg = FreeDend::new(m, 1);
    let y = alg.generator(0)?;

    println!("Y ≺ Y = {}", alg.dend_left(&y, &y)?);
    println!("Y ≻ Y = {}", alg.dend_right(&y, &y)?);
    println!("Y ⋆ Y = {}", alg.star(&y, &y)?);

    let left_comb = alg.basis(Tree::parse("((· x0 ·) x0 ·)")?)?;
    println!("Y ⋆ ((· x0 ·) x0 ·) = {}", alg.star(&y, &left_comb)?);
    println!("{{Y, Y ⋆ Y}} = {}", alg.prelie_bracket(&y, &alg.star(&y, &y)?)?);

    let dims: Vec<u64> = (1..=6).map(|n| free_dimension(n, 1)).collect();
    println!("graded dimensions, one generator: {dims:?}");

    let report = verify_dendriform(&alg, "g = 1", &SamplePlan::exhaustive(5))?;
    println!(
        "axioms on all basis triples of degree ≤ 5: {:?} ({} checks)",
        report.verdict, report.checked
    );
    Ok(())
}

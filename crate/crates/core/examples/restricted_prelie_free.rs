//! The p-th ⋆-power as a p-map for the pre-Lie bracket `{x,y} = x≻y − y≺x`
//! on the free dendriform algebra, with the relation counts printed per law.

use dendriform_fp::field::Modulus;
use dendriform_fp::freedend::FreeDend;
use dendriform_fp::laws::{verify_operator_identities, verify_restricted_prelie, SamplePlan};
use dendriform_fp::structure::{PMap, PreLieOf};

fn main() -> dendriform_fp::Result<()> {
    for (p, ymax) in [(2, 3), (3, 2)] {
        let alg = FreeDend::new(Modulus::new(p)?, 1);
        let plan = SamplePlan::exhaustive(ymax)
            .with_total_degree(None)
            .with_x_degrees(1, 1)
            .with_y_degrees(1, ymax)
            .with_random(25, 7);
        let report = verify_restricted_prelie(&PreLieOf(&alg), &PMap::star_power(&alg), "free", &plan)?;
        println!("p = {p}: {:?}", report.verdict);
        for (relation, tally) in &report.relations {
            println!("  {relation:<45} {:>4} checked, {} violations", tally.checked, tally.violations);
        }
        let ops = verify_operator_identities(&alg, "free", &plan)?;
        println!("  L/R operator identities: {:?}", ops.verdict);

        let y = alg.generator(0)?;
        println!("  Y^[p] = {}", alg.star_power(&y, p)?);
    }
    Ok(())
}

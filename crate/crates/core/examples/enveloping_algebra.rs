//! Filtered quotient dimensions of the dendriform enveloping algebra of a
//! pre-Lie algebra, with and without the p-map relations.

use dendriform_fp::envelope::{pmap_audit, quotient_dims_with_stability, Envelope};
use dendriform_fp::field::Modulus;
use dendriform_fp::fixtures::{abelian_prelie, nonabelian_prelie};

fn main() -> dendriform_fp::Result<()> {
    let f2 = Modulus::new(2)?;
    for (name, data) in [
        ("abelian, dim 1", abelian_prelie(f2, Some(0))),
        ("{e2,e1} = e1", nonabelian_prelie(f2, true)),
    ] {
        for restricted in [false, true] {
            let report = quotient_dims_with_stability(&data, 3, restricted)?;
            let label = if restricted { "U_p" } else { "U" };
            println!("{name}, {label}: {:?}", report.quotient_dims());
            for w in &report.warnings {
                println!("  warning: {w}");
            }
        }
    }

    let data = abelian_prelie(f2, Some(0));
    let env = Envelope::compute(&data, 3, true)?;
    let alg = env.algebra();
    let y = alg.generator(0)?;
    println!("Y ⋆ Y in the ideal: {}", env.contains(&alg.star(&y, &y)?)?);
    let audit = pmap_audit(&env, 20, 5)?;
    println!("audit: {} of {} in the ideal", audit.members, audit.samples);
    print!("{}", env.report().to_csv());
    Ok(())
}

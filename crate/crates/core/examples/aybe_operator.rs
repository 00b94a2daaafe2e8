//! Solutions of the associative Yang-Baxter equation and the Rota-Baxter
//! operators `a ↦ Σ u_i a v_i` they define.

use dendriform_fp::field::Modulus;
use dendriform_fp::scalg::{check_aybe, matrix_algebra, rb_from_tensor, search_aybe, SearchMode, TensorElement};

fn main() -> dendriform_fp::Result<()> {
    let a = matrix_algebra(2, Modulus::new(2)?);
    let solutions = search_aybe(&a, SearchMode::Exhaustive { max_dim: 4 })?;
    println!("single-summand AYBE solutions on M2(F2): {}", solutions.len());
    for r in solutions.iter().filter(|r| !r.is_zero()).take(4) {
        let beta = rb_from_tensor(&a, r)?;
        println!("r = {:?}\n  β = {:?}", r.summands(), beta.matrix());
    }

    // e11 ⊗ e11 is not a solution: r13 r12 = e11⊗e11⊗e11 survives
    let e11 = a.basis_vector(0);
    let r = TensorElement::new(&a, vec![(e11.clone(), e11)])?;
    let report = check_aybe(&a, &r)?;
    println!("e11 ⊗ e11: {} nonzero residual entries", report.nonzero_entries().len());
    println!("as an operator: {:?}", rb_from_tensor(&a, &r).err());
    Ok(())
}

//! Small algebras used throughout the tests, examples and shipped JSON files.

use std::path::PathBuf;

use crate::envelope::PreLieData;
use crate::error::Result;
use crate::field::Modulus;
use crate::scalg::{
    induced_dendriform, matrix_algebra, search_rota_baxter, truncated_polynomial, upper_triangular,
    BilinearStructure, LinearOperator, SCAlgebra, SearchMode,
};

/// Directory holding the shipped JSON fixtures.
pub fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn fixture_path(name: &str) -> PathBuf {
    fixture_dir().join(name)
}

/// `F_p[x]/(x²)`.
pub fn dual_numbers(modulus: Modulus) -> SCAlgebra {
    truncated_polynomial(2, modulus)
}

/// `β(a) = x·a` on the dual numbers; Rota-Baxter because `x² = 0`.
pub fn times_x(modulus: Modulus) -> LinearOperator {
    LinearOperator::new(modulus, 2, &[0, 0, 1, 0]).expect("2×2 matrix")
}

/// A dendriform structure with one `≺` constant shifted so that
/// `(x≻y)≺z = x≻(y≺z)` fails at `(1, 1, 1)`.
pub fn broken_dendriform() -> BilinearStructure {
    let m = Modulus::new(3).expect("3 is prime");
    let a = dual_numbers(m);
    induced_dendriform(&a, &times_x(m))
        .expect("x· is Rota-Baxter")
        .perturbed(0, 0, 0, 1)
}

/// One-dimensional abelian pre-Lie algebra, optionally with `x^[p] = c·x`.
pub fn abelian_prelie(modulus: Modulus, pmap: Option<i64>) -> PreLieData {
    PreLieData::abelian(modulus, 1, pmap.map(|c| vec![vec![c]])).expect("abelian data is valid")
}

/// `{e2, e1} = e1` with `e1^[p] = 0`, `e2^[p] = e2`.
pub fn nonabelian_prelie(modulus: Modulus, with_pmap: bool) -> PreLieData {
    let pmap = with_pmap.then(|| vec![vec![0, 0], vec![0, 1]]);
    PreLieData::from_sparse(modulus, 2, &[(1, 0, 0, 1)], pmap).expect("left-symmetric")
}

/// Every dendriform structure induced by a Rota-Baxter operator found by
/// exhaustive search on the small associative fixtures, plus zero structures.
pub fn dendriform_fixtures() -> Result<Vec<(String, BilinearStructure)>> {
    let f2 = Modulus::new(2)?;
    let f3 = Modulus::new(3)?;
    let algebras = [
        ("F2[x]/(x^2)", dual_numbers(f2), 3),
        ("F3[x]/(x^2)", dual_numbers(f3), 3),
        ("F2[x]/(x^3)", truncated_polynomial(3, f2), 3),
        ("UT2(F2)", upper_triangular(2, f2), 3),
        ("M2(F2)", matrix_algebra(2, f2), 4),
    ];
    let mut out = Vec::new();
    for (name, a, cap) in algebras {
        for (idx, beta) in search_rota_baxter(&a, SearchMode::Exhaustive { max_dim: cap })?
            .into_iter()
            .enumerate()
        {
            out.push((format!("{name} β#{idx}"), induced_dendriform(&a, &beta)?));
        }
    }
    out.push(("zero F5^3".into(), BilinearStructure::zero(Modulus::new(5)?, 3)));
    Ok(out)
}

//! Jacobson's correction terms `s_i(x, y)`.
//!
//! `i·s_i(x, y)` is the coefficient of `λ^(i-1)` in the `(p−1)`-fold bracket
//! `[λx+y, [λx+y, … [λx+y, x]…]]`, read innermost first. The expansion is done
//! in a polynomial ring over the ambient Lie algebra, so one code path serves
//! every [`Lie`] implementation.

use crate::error::Result;
use crate::structure::{Lie, VectorSpace};

/// A polynomial in the formal variable `λ` with coefficients in a vector space.
#[derive(Clone, Debug, PartialEq)]
pub struct LambdaPoly<E> {
    coeffs: Vec<E>,
}

impl<E: Clone> LambdaPoly<E> {
    pub fn constant(e: E) -> Self {
        LambdaPoly { coeffs: vec![e] }
    }

    pub fn coefficient(&self, power: usize) -> Option<&E> {
        self.coeffs.get(power)
    }

    pub fn coefficients(&self) -> &[E] {
        &self.coeffs
    }

    /// Highest stored power; trailing zero coefficients are trimmed by
    /// [`LambdaPoly::trim`].
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn trim<S: VectorSpace<Elem = E>>(&mut self, space: &S) {
        while self.coeffs.last().is_some_and(|c| space.is_zero(c)) {
            self.coeffs.pop();
        }
    }

    /// `[λx + y, self]`
    pub fn bracket_with<L: Lie<Elem = E>>(&self, lie: &L, x: &E, y: &E) -> Result<Self> {
        let mut out = Vec::with_capacity(self.coeffs.len() + 1);
        for k in 0..=self.coeffs.len() {
            let mut c = lie.zero();
            if let Some(ck) = self.coeffs.get(k) {
                c = lie.bracket(y, ck)?;
            }
            if k > 0 {
                c = lie.add(&c, &lie.bracket(x, &self.coeffs[k - 1])?)?;
            }
            out.push(c);
        }
        let mut poly = LambdaPoly { coeffs: out };
        poly.trim(lie);
        Ok(poly)
    }
}

/// The formal product `[λx+y, [… [λx+y, x]…]]` with `p−1` outer brackets.
pub fn lambda_expansion<L: Lie>(lie: &L, x: &L::Elem, y: &L::Elem) -> Result<LambdaPoly<L::Elem>> {
    let p = lie.modulus().get();
    let mut poly = LambdaPoly::constant(x.clone());
    poly.trim(lie);
    for _ in 0..p - 1 {
        poly = poly.bracket_with(lie, x, y)?;
    }
    Ok(poly)
}

/// `[s_1, …, s_{p−1}]` for the bracket of `lie` in characteristic `p`.
pub fn s_coefficients<L: Lie>(lie: &L, x: &L::Elem, y: &L::Elem) -> Result<Vec<L::Elem>> {
    let m = lie.modulus();
    let poly = lambda_expansion(lie, x, y)?;
    (1..m.get())
        .map(|i| {
            let c = poly
                .coefficient(i as usize - 1)
                .cloned()
                .unwrap_or_else(|| lie.zero());
            Ok(lie.scale(m.inv(i)?, &c))
        })
        .collect()
}

/// `Σ_i s_i(x, y)`, the additivity defect of a p-map.
pub fn jacobson_sum<L: Lie>(lie: &L, x: &L::Elem, y: &L::Elem) -> Result<L::Elem> {
    let mut acc = lie.zero();
    for s in s_coefficients(lie, x, y)? {
        acc = lie.add(&acc, &s)?;
    }
    Ok(acc)
}

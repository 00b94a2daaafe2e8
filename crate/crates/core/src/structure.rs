//! Traits shared by the free dendriform algebra and the structure-constant
//! algebras, plus the forgetful functors between them as thin adapters.
//!
//! ```text
//!   Dend ──PreLieOf──▶ preLie ──InducedLie──▶ Lie
//!     │                                        ▲
//!     └──StarOf──────▶ Ass ───Commutator───────┘
//! ```

use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use crate::error::Result;
use crate::field::Modulus;

pub type SampleRng = ChaCha8Rng;

/// A graded `F_p`-vector space with a distinguished basis.
pub trait VectorSpace {
    type Elem: Clone + PartialEq + std::fmt::Debug;

    fn modulus(&self) -> Modulus;
    fn zero(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;
    fn scale(&self, c: u64, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        let m = self.modulus();
        self.add(a, &self.scale(m.neg(1), b))
    }

    /// Basis elements whose degree lies in `lo..=hi`, with their degrees.
    /// Structure-constant algebras put every basis vector in degree 1.
    fn graded_basis(&self, lo: usize, hi: usize) -> Vec<(Self::Elem, usize)>;

    /// A random element supported in degrees `lo..=hi`.
    fn random_element(&self, rng: &mut SampleRng, lo: usize, hi: usize) -> Self::Elem;

    fn describe(&self, a: &Self::Elem) -> Value;
}

pub trait Dendriform: VectorSpace {
    /// `x ≺ y`
    fn prec(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem>;
    /// `x ≻ y`
    fn succ(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem>;

    /// `x ⋆ y = x ≺ y + x ≻ y`
    fn star(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem> {
        self.add(&self.prec(x, y)?, &self.succ(x, y)?)
    }
}

pub trait PreLie: VectorSpace {
    /// `{x, y}`
    fn prelie(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem>;
}

pub trait Lie: VectorSpace {
    /// `[x, y]`
    fn bracket(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem>;
}

pub trait Associative: VectorSpace {
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem>;
}

macro_rules! delegate_vector_space {
    ($adapter:ident, $bound:ident) => {
        impl<S: $bound> VectorSpace for $adapter<'_, S> {
            type Elem = S::Elem;

            fn modulus(&self) -> Modulus {
                self.0.modulus()
            }
            fn zero(&self) -> Self::Elem {
                self.0.zero()
            }
            fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
                self.0.add(a, b)
            }
            fn scale(&self, c: u64, a: &Self::Elem) -> Self::Elem {
                self.0.scale(c, a)
            }
            fn is_zero(&self, a: &Self::Elem) -> bool {
                self.0.is_zero(a)
            }
            fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
                self.0.sub(a, b)
            }
            fn graded_basis(&self, lo: usize, hi: usize) -> Vec<(Self::Elem, usize)> {
                self.0.graded_basis(lo, hi)
            }
            fn random_element(&self, rng: &mut SampleRng, lo: usize, hi: usize) -> Self::Elem {
                self.0.random_element(rng, lo, hi)
            }
            fn describe(&self, a: &Self::Elem) -> Value {
                self.0.describe(a)
            }
        }
    };
}

/// The pre-Lie algebra of a dendriform algebra: `{x, y} = x ≻ y − y ≺ x`.
pub struct PreLieOf<'a, D>(pub &'a D);
delegate_vector_space!(PreLieOf, Dendriform);

impl<D: Dendriform> PreLie for PreLieOf<'_, D> {
    fn prelie(&self, x: &D::Elem, y: &D::Elem) -> Result<D::Elem> {
        self.0.sub(&self.0.succ(x, y)?, &self.0.prec(y, x)?)
    }
}

/// The associative algebra `(D, ⋆)` of a dendriform algebra.
pub struct StarOf<'a, D>(pub &'a D);
delegate_vector_space!(StarOf, Dendriform);

impl<D: Dendriform> Associative for StarOf<'_, D> {
    fn mul(&self, x: &D::Elem, y: &D::Elem) -> Result<D::Elem> {
        self.0.star(x, y)
    }
}

/// The Lie algebra of a pre-Lie algebra: `[x, y] = {x, y} − {y, x}`.
pub struct InducedLie<'a, P>(pub &'a P);
delegate_vector_space!(InducedLie, PreLie);

impl<P: PreLie> Lie for InducedLie<'_, P> {
    fn bracket(&self, x: &P::Elem, y: &P::Elem) -> Result<P::Elem> {
        self.0.sub(&self.0.prelie(x, y)?, &self.0.prelie(y, x)?)
    }
}

/// The commutator Lie algebra of an associative algebra.
pub struct Commutator<'a, A>(pub &'a A);
delegate_vector_space!(Commutator, Associative);

impl<A: Associative> Lie for Commutator<'_, A> {
    fn bracket(&self, x: &A::Elem, y: &A::Elem) -> Result<A::Elem> {
        self.0.sub(&self.0.mul(x, y)?, &self.0.mul(y, x)?)
    }
}

/// An associative product read as a pre-Lie product (its associator vanishes).
pub struct AssociativeAsPreLie<'a, A>(pub &'a A);
delegate_vector_space!(AssociativeAsPreLie, Associative);

impl<A: Associative> PreLie for AssociativeAsPreLie<'_, A> {
    fn prelie(&self, x: &A::Elem, y: &A::Elem) -> Result<A::Elem> {
        self.0.mul(x, y)
    }
}

/// Left-nested power `x · x · … · x` with `n ≥ 1` factors.
pub fn power<A: Associative>(a: &A, x: &A::Elem, n: u64) -> Result<A::Elem> {
    assert!(n >= 1, "power needs at least one factor");
    let mut acc = x.clone();
    for _ in 1..n {
        acc = a.mul(&acc, x)?;
    }
    Ok(acc)
}

/// `op(x, op(x, … op(x, y)))` with `times` applications.
pub fn iterate_left<E: Clone>(
    x: &E,
    y: &E,
    times: u64,
    mut op: impl FnMut(&E, &E) -> Result<E>,
) -> Result<E> {
    let mut acc = y.clone();
    for _ in 0..times {
        acc = op(x, &acc)?;
    }
    Ok(acc)
}

/// Linear combination `Σ c_i v_i`.
pub fn combine<S: VectorSpace>(s: &S, terms: &[(u64, S::Elem)]) -> Result<S::Elem> {
    let mut acc = s.zero();
    for (c, v) in terms {
        acc = s.add(&acc, &s.scale(*c, v))?;
    }
    Ok(acc)
}

type PMapFn<'a, E> = dyn Fn(&E) -> Result<E> + 'a;

/// A named unary map `x ↦ x^[p]`.
pub struct PMap<'a, E> {
    name: String,
    f: Box<PMapFn<'a, E>>,
}

impl<'a, E: Clone + 'a> PMap<'a, E> {
    pub fn new(name: impl Into<String>, f: impl Fn(&E) -> Result<E> + 'a) -> Self {
        PMap {
            name: name.into(),
            f: Box::new(f),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn apply(&self, x: &E) -> Result<E> {
        (self.f)(x)
    }

    /// `x ↦ x^p` in an associative algebra.
    pub fn frobenius<A: Associative<Elem = E>>(a: &'a A) -> Self {
        let p = a.modulus().get();
        PMap::new("frobenius", move |x| power(a, x, p))
    }

    /// `x ↦ x^{⋆p}` in a dendriform algebra.
    pub fn star_power<D: Dendriform<Elem = E>>(d: &'a D) -> Self {
        let p = d.modulus().get();
        PMap::new("star-power", move |x| power(&StarOf(d), x, p))
    }

    pub fn zero<S: VectorSpace<Elem = E>>(s: &'a S) -> Self {
        PMap::new("zero", move |_| Ok(s.zero()))
    }

    /// `x ↦ {x, {x, … {x, x}}}` with `p` factors.
    pub fn nested_prelie<P: PreLie<Elem = E>>(pl: &'a P) -> Self {
        let p = pl.modulus().get();
        PMap::new("nested-prelie", move |x| {
            iterate_left(x, x, p - 1, |a, b| pl.prelie(a, b))
        })
    }
}

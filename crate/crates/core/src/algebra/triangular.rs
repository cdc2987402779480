//! Pairs (f, g) over a polynomial ring with the derivation-twisted product
//! (f₁,g₁)(f₂,g₂) = (f₁f₂, f₁g₂ + g₁f₂ + d₁(f₁)d₂(f₂)).

use crate::error::{Error, Result};
use crate::scalars::{Scalar, ScalarRing};
use rand::Rng;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TriElem {
    pub f: Scalar,
    pub g: Scalar,
}

#[derive(Clone, Debug)]
pub struct DerivationTriangularRing {
    ring: ScalarRing,
    d1: String,
    d2: String,
}

impl DerivationTriangularRing {
    pub fn new(ring: &ScalarRing, d1: &str, d2: &str) -> Result<Self> {
        for d in [d1, d2] {
            if !ring.spec().derivations.iter().any(|x| x.name == d) {
                return Err(Error::NoSuchDerivation(d.into()));
            }
        }
        Ok(DerivationTriangularRing { ring: ring.clone(), d1: d1.into(), d2: d2.into() })
    }

    pub fn ring(&self) -> &ScalarRing {
        &self.ring
    }

    pub fn derivations(&self) -> (&str, &str) {
        (&self.d1, &self.d2)
    }

    fn d(&self, name: &str, x: &Scalar) -> Scalar {
        self.ring.derive(x, name).expect("derivation checked at construction")
    }

    pub fn elem(&self, f: &str, g: &str) -> Result<TriElem> {
        Ok(TriElem { f: self.ring.parse(f)?, g: self.ring.parse(g)? })
    }

    pub fn zero(&self) -> TriElem {
        TriElem { f: self.ring.zero(), g: self.ring.zero() }
    }

    pub fn one(&self) -> TriElem {
        TriElem { f: self.ring.one(), g: self.ring.zero() }
    }

    pub fn add(&self, a: &TriElem, b: &TriElem) -> TriElem {
        TriElem { f: self.ring.add(&a.f, &b.f), g: self.ring.add(&a.g, &b.g) }
    }

    pub fn sub(&self, a: &TriElem, b: &TriElem) -> TriElem {
        TriElem { f: self.ring.sub(&a.f, &b.f), g: self.ring.sub(&a.g, &b.g) }
    }

    pub fn mul(&self, a: &TriElem, b: &TriElem) -> TriElem {
        let r = &self.ring;
        let twist = r.mul(&self.d(&self.d1, &a.f), &self.d(&self.d2, &b.f));
        TriElem {
            f: r.mul(&a.f, &b.f),
            g: r.add(&r.add(&r.mul(&a.f, &b.g), &r.mul(&a.g, &b.f)), &twist),
        }
    }

    pub fn commutator(&self, a: &TriElem, b: &TriElem) -> TriElem {
        self.sub(&self.mul(a, b), &self.mul(b, a))
    }

    pub fn is_zero(&self, a: &TriElem) -> bool {
        self.ring.is_zero(&a.f) && self.ring.is_zero(&a.g)
    }

    /// The upper triangular matrix [[f, d₁f, g], [0, f, d₂f], [0, 0, f]].
    pub fn matrix_model(&self, a: &TriElem) -> [[Scalar; 3]; 3] {
        let z = self.ring.zero();
        [
            [a.f.clone(), self.d(&self.d1, &a.f), a.g.clone()],
            [z.clone(), a.f.clone(), self.d(&self.d2, &a.f)],
            [z.clone(), z, a.f.clone()],
        ]
    }

    /// Inverse of [`Self::matrix_model`] on matrices of that shape.
    pub fn from_matrix(&self, m: &[[Scalar; 3]; 3]) -> Option<TriElem> {
        let a = TriElem { f: m[0][0].clone(), g: m[0][2].clone() };
        (self.matrix_model(&a) == *m).then_some(a)
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> TriElem {
        TriElem { f: self.ring.random(rng), g: self.ring.random(rng) }
    }

    pub fn format(&self, a: &TriElem) -> String {
        format!("({}, {})", self.ring.format(&a.f), self.ring.format(&a.g))
    }

    /// Checks that `a` commutes with every sample.
    pub fn commutes_with_all(&self, a: &TriElem, samples: &[TriElem]) -> bool {
        samples.iter().all(|b| self.is_zero(&self.commutator(a, b)))
    }
}

pub fn mat3_mul(ring: &ScalarRing, a: &[[Scalar; 3]; 3], b: &[[Scalar; 3]; 3]) -> [[Scalar; 3]; 3] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            (0..3).fold(ring.zero(), |acc, k| ring.add(&acc, &ring.mul(&a[i][k], &b[k][j])))
        })
    })
}

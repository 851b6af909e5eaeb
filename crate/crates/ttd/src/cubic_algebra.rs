//! The etale algebra k[alpha] = k[t]/(t^3 - c), used to reason about the
//! three cube roots of lambda2/lambda1 at once.
//!
//! The algebra need not be a field (c may be a cube), so there is no
//! division; the norm form detects zero divisors: an element is invertible
//! exactly when its norm is nonzero.

use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, Debug, PartialEq)]
pub struct CubicRadicalAlgebra<K: Field> {
    /// alpha^3 = c, nonzero.
    pub c: K,
}

/// a0 + a1*alpha + a2*alpha^2
#[derive(Clone, Debug, PartialEq)]
pub struct AlgElem<K: Field> {
    pub a: [K; 3],
}

impl<K: Field> CubicRadicalAlgebra<K> {
    pub fn new(c: K) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::DegenerateAlgebra);
        }
        Ok(CubicRadicalAlgebra { c })
    }

    pub fn scalar(&self, x: K) -> AlgElem<K> {
        AlgElem {
            a: [x.clone(), x.zero(), x.zero()],
        }
    }

    pub fn alpha(&self) -> AlgElem<K> {
        let z = self.c.zero();
        AlgElem {
            a: [z.clone(), self.c.one(), z],
        }
    }

    pub fn add(&self, x: &AlgElem<K>, y: &AlgElem<K>) -> AlgElem<K> {
        AlgElem {
            a: [
                x.a[0].add(&y.a[0]),
                x.a[1].add(&y.a[1]),
                x.a[2].add(&y.a[2]),
            ],
        }
    }

    pub fn sub(&self, x: &AlgElem<K>, y: &AlgElem<K>) -> AlgElem<K> {
        AlgElem {
            a: [
                x.a[0].sub(&y.a[0]),
                x.a[1].sub(&y.a[1]),
                x.a[2].sub(&y.a[2]),
            ],
        }
    }

    /// Multiplication reducing by alpha^3 = c.
    pub fn mul(&self, x: &AlgElem<K>, y: &AlgElem<K>) -> AlgElem<K> {
        let z = self.c.zero();
        let mut raw = [z.clone(), z.clone(), z.clone(), z.clone(), z];
        for i in 0..3 {
            for j in 0..3 {
                raw[i + j] = raw[i + j].add(&x.a[i].mul(&y.a[j]));
            }
        }
        AlgElem {
            a: [
                raw[0].add(&raw[3].mul(&self.c)),
                raw[1].add(&raw[4].mul(&self.c)),
                raw[2].clone(),
            ],
        }
    }

    /// Norm down to the base field:
    /// Nm(a0 + a1 a + a2 a^2) = a0^3 + c a1^3 + c^2 a2^3 - 3c a0 a1 a2.
    pub fn norm(&self, x: &AlgElem<K>) -> K {
        let [a0, a1, a2] = &x.a;
        let c = &self.c;
        let cube = |v: &K| v.mul(v).mul(v);
        let three = c.from_i64(3);
        cube(a0)
            .add(&c.mul(&cube(a1)))
            .add(&c.mul(c).mul(&cube(a2)))
            .sub(&three.mul(c).mul(a0).mul(a1).mul(a2))
    }

    /// `true` iff x is a unit of the algebra (nonzero non-zero-divisor).
    pub fn is_unit(&self, x: &AlgElem<K>) -> bool {
        !self.norm(x).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Field};
    use rand::{Rng, SeedableRng};

    #[test]
    fn norm_is_multiplicative() {
        let p = 2_147_483_659u64;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let alg = CubicRadicalAlgebra::new(Fp::from_u64(rng.gen_range(1..p), p)).unwrap();
        for _ in 0..100 {
            let e = |rng: &mut rand_chacha::ChaCha8Rng| AlgElem {
                a: [
                    Fp::from_u64(rng.gen(), p),
                    Fp::from_u64(rng.gen(), p),
                    Fp::from_u64(rng.gen(), p),
                ],
            };
            let u = e(&mut rng);
            let v = e(&mut rng);
            assert_eq!(
                alg.norm(&alg.mul(&u, &v)),
                alg.norm(&u).mul(&alg.norm(&v))
            );
        }
    }

    #[test]
    fn zero_c_rejected() {
        assert!(CubicRadicalAlgebra::new(Fp::new(0, 7919)).is_err());
    }

    #[test]
    fn alpha_cubed_is_c() {
        let alg = CubicRadicalAlgebra::new(Fp::new(5, 7919)).unwrap();
        let a = alg.alpha();
        let a3 = alg.mul(&alg.mul(&a, &a), &a);
        assert_eq!(a3, alg.scalar(Fp::new(5, 7919)));
    }
}

//! Arithmetic in the Eisenstein integers Z[omega], omega^2 + omega + 1 = 0:
//! the ring of integers of Q(sqrt(-3)). Norm-Euclidean with class number
//! one and unit group {±omega^k}, which the factorization code uses
//! freely. Primes are normalized to their primary associate, the unique
//! one congruent to 1 mod 3.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// a + b*omega with arbitrary-precision integer coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EisensteinInt {
    pub a: BigInt,
    pub b: BigInt,
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}*w", self.b)
        } else {
            write!(f, "{}{:+}*w", self.a, self.b)
        }
    }
}

impl fmt::Debug for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl EisensteinInt {
    pub fn new(a: i64, b: i64) -> Self {
        EisensteinInt {
            a: BigInt::from(a),
            b: BigInt::from(b),
        }
    }

    pub fn from_big(a: BigInt, b: BigInt) -> Self {
        EisensteinInt { a, b }
    }

    pub fn zero() -> Self {
        EisensteinInt::new(0, 0)
    }

    pub fn one() -> Self {
        EisensteinInt::new(1, 0)
    }

    pub fn omega() -> Self {
        EisensteinInt::new(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        EisensteinInt::from_big(&self.a + &rhs.a, &self.b + &rhs.b)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        EisensteinInt::from_big(&self.a - &rhs.a, &self.b - &rhs.b)
    }

    pub fn neg(&self) -> Self {
        EisensteinInt::from_big(-&self.a, -&self.b)
    }

    /// (a + b w)(c + d w) = (ac - bd) + (ad + bc - bd) w, using
    /// w^2 = -1 - w.
    pub fn mul(&self, rhs: &Self) -> Self {
        let ac = &self.a * &rhs.a;
        let bd = &self.b * &rhs.b;
        let ad = &self.a * &rhs.b;
        let bc = &self.b * &rhs.a;
        EisensteinInt::from_big(&ac - &bd, ad + bc - bd)
    }

    /// Complex conjugate: a + b w -> (a - b) - b w.
    pub fn conj(&self) -> Self {
        EisensteinInt::from_big(&self.a - &self.b, -&self.b)
    }

    /// N(a + b w) = a^2 - ab + b^2 >= 0.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    /// The six units.
    pub fn units() -> [EisensteinInt; 6] {
        let w = EisensteinInt::omega();
        let w2 = w.mul(&w);
        [
            EisensteinInt::one(),
            w.clone(),
            w2.clone(),
            EisensteinInt::one().neg(),
            w.neg(),
            w2.neg(),
        ]
    }

    /// Euclidean division: q with N(self - q*rhs) < N(rhs), by rounding
    /// the exact quotient's coordinates to nearest integers.
    pub fn div_rem(&self, rhs: &Self) -> Result<(Self, Self)> {
        if rhs.is_zero() {
            return Err(Error::DegenerateInput("division by zero".into()));
        }
        let n = rhs.norm();
        let num = self.mul(&rhs.conj());
        let qa = round_div(&num.a, &n);
        let qb = round_div(&num.b, &n);
        let q = EisensteinInt::from_big(qa, qb);
        let r = self.sub(&q.mul(rhs));
        debug_assert!(r.norm() < n, "Euclidean property");
        Ok((q, r))
    }

    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).map(|(_, r)| r.is_zero()).unwrap_or(false)
    }

    /// Exact quotient, erroring if not divisible.
    pub fn exact_div(&self, rhs: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(rhs)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::DegenerateInput("not divisible".into()))
        }
    }

    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut x = self.clone();
        let mut y = rhs.clone();
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y).expect("nonzero divisor");
            x = y;
            y = r;
        }
        x
    }

    /// The primary associate: the unique unit multiple congruent to 1
    /// mod 3 (exists for every element prime to 3). For elements not
    /// prime to 3 the input is returned unchanged.
    pub fn primary(&self) -> Self {
        let three = BigInt::from(3);
        for u in EisensteinInt::units() {
            let c = u.mul(self);
            if c.a.mod_floor(&three).is_one() && c.b.mod_floor(&three).is_zero() {
                return c;
            }
        }
        self.clone()
    }
}

fn round_div(n: &BigInt, d: &BigInt) -> BigInt {
    // nearest-integer division, ties toward +infinity; adequate for the
    // Euclidean bound N(r) <= 3/4 N(d)
    let two = BigInt::from(2);
    let (q, r) = n.div_mod_floor(d);
    if &(&r * &two) >= &d.abs() {
        q + 1
    } else {
        q
    }
}

/// A factorization unit * prod primes[i]^exps[i] with primary primes.
#[derive(Clone, Debug, PartialEq)]
pub struct EisFactorization {
    pub unit: EisensteinInt,
    pub factors: Vec<(EisensteinInt, u32)>,
}

impl EisFactorization {
    pub fn reassemble(&self) -> EisensteinInt {
        let mut z = self.unit.clone();
        for (p, e) in &self.factors {
            for _ in 0..*e {
                z = z.mul(p);
            }
        }
        z
    }
}

/// Trial division over the integers; desk-scale inputs only.
fn factor_integer(n: &BigInt) -> Vec<(u64, u32)> {
    let mut n = n.abs();
    let mut out = vec![];
    let mut p = 2u64;
    while BigInt::from(p) * BigInt::from(p) <= n {
        let mut e = 0;
        while (&n % p).is_zero() {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > BigInt::one() {
        let d = n.to_u64_digits().1;
        assert!(d.len() == 1, "factor exceeds u64 trial-division scale");
        out.push((d[0], 1));
    }
    out
}

/// Finds a prime of Z[omega] above a rational prime p = 1 mod 3 by
/// searching the norm form a^2 - ab + b^2 = p.
pub fn prime_above(p: u64) -> EisensteinInt {
    assert_eq!(p % 3, 1);
    // a^2 - ab + b^2 = p has a solution with 0 < b <= sqrt(4p/3)
    let bmax = ((4 * p) as f64 / 3.0).sqrt() as i64 + 2;
    for b in 1..=bmax {
        let disc = 4 * p as i128 - 3 * (b as i128) * (b as i128);
        if disc < 0 {
            continue;
        }
        let s = (disc as f64).sqrt() as i128;
        for cand in [s - 1, s, s + 1] {
            if cand >= 0 && cand * cand == disc && (b as i128 + cand) % 2 == 0 {
                let a = (b as i128 + cand) / 2;
                let z = EisensteinInt::new(a as i64, b);
                if z.norm() == BigInt::from(p) {
                    return z.primary();
                }
            }
        }
    }
    unreachable!("every p = 1 mod 3 splits in Z[omega]")
}

/// Factors a nonzero Eisenstein integer into a unit times primary primes.
pub fn eis_factor(z: &EisensteinInt) -> Result<EisFactorization> {
    if z.is_zero() {
        return Err(Error::DegenerateInput("factorization of zero".into()));
    }
    let mut rest = z.clone();
    let mut factors: Vec<(EisensteinInt, u32)> = vec![];
    let nf = factor_integer(&z.norm());
    for (p, _) in nf {
        if p == 3 {
            let pi = EisensteinInt::new(1, -1); // 1 - omega, the ramified prime
            let mut e = 0;
            while pi.divides(&rest) {
                rest = rest.exact_div(&pi)?;
                e += 1;
            }
            if e > 0 {
                factors.push((pi, e));
            }
        } else if p % 3 == 2 {
            let pe = EisensteinInt::new(p as i64, 0).primary();
            let mut e = 0;
            while pe.divides(&rest) {
                rest = rest.exact_div(&pe)?;
                e += 1;
            }
            if e > 0 {
                factors.push((pe, e));
            }
        } else {
            let pi = prime_above(p);
            for q in [pi.clone(), pi.conj().primary()] {
                let mut e = 0;
                while q.divides(&rest) {
                    rest = rest.exact_div(&q)?;
                    e += 1;
                }
                if e > 0 {
                    factors.push((q, e));
                }
            }
        }
    }
    if !rest.is_unit() {
        return Err(Error::InvariantViolation(
            "leftover non-unit after trial division".into(),
        ));
    }
    // all recorded primes are primary (or the conventional 1 - omega), so
    // the leftover unit is the factorization's unit part
    Ok(EisFactorization {
        unit: rest,
        factors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn seven_splits() {
        let f = eis_factor(&EisensteinInt::new(7, 0)).unwrap();
        assert_eq!(f.factors.len(), 2);
        for (p, e) in &f.factors {
            assert_eq!(p.norm(), BigInt::from(7));
            assert_eq!(*e, 1);
        }
        assert_eq!(f.reassemble(), EisensteinInt::new(7, 0));
    }

    #[test]
    fn two_is_inert() {
        let f = eis_factor(&EisensteinInt::new(2, 0)).unwrap();
        assert_eq!(f.factors.len(), 1);
        assert_eq!(f.factors[0].1, 1);
        assert_eq!(f.factors[0].0.norm(), BigInt::from(4));
    }

    #[test]
    fn three_ramifies() {
        // 3 = -omega^2 (1 - omega)^2
        let f = eis_factor(&EisensteinInt::new(3, 0)).unwrap();
        assert_eq!(f.factors, vec![(EisensteinInt::new(1, -1), 2)]);
        let w = EisensteinInt::omega();
        let expect_unit = w.mul(&w).neg();
        assert_eq!(f.unit, expect_unit);
        assert_eq!(f.reassemble(), EisensteinInt::new(3, 0));
    }

    #[test]
    fn factorization_merges_multiplicatively() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(19);
        for _ in 0..60 {
            let z1 = EisensteinInt::new(rng.gen_range(-40..40), rng.gen_range(-40..40));
            let z2 = EisensteinInt::new(rng.gen_range(-40..40), rng.gen_range(-40..40));
            if z1.is_zero() || z2.is_zero() {
                continue;
            }
            let f1 = eis_factor(&z1).unwrap();
            let f2 = eis_factor(&z2).unwrap();
            let f12 = eis_factor(&z1.mul(&z2)).unwrap();
            let mut merged: std::collections::HashMap<(String, String), u32> =
                Default::default();
            for (p, e) in f1.factors.iter().chain(&f2.factors) {
                *merged.entry((p.a.to_string(), p.b.to_string())).or_default() += e;
            }
            let got: std::collections::HashMap<(String, String), u32> = f12
                .factors
                .iter()
                .map(|(p, e)| ((p.a.to_string(), p.b.to_string()), *e))
                .collect();
            assert_eq!(merged, got, "{z1:?} * {z2:?}");
            assert_eq!(f12.reassemble(), z1.mul(&z2));
        }
    }

    #[test]
    fn primary_normalization_is_canonical() {
        let pi = EisensteinInt::new(3, 1); // norm 7
        let pp = pi.primary();
        let three = BigInt::from(3);
        assert!(pp.a.mod_floor(&three).is_one() && pp.b.mod_floor(&three).is_zero());
        // all associates normalize to the same primary
        for u in EisensteinInt::units() {
            assert_eq!(u.mul(&pi).primary(), pp);
        }
    }

    #[test]
    fn euclidean_division() {
        let x = EisensteinInt::new(17, -5);
        let y = EisensteinInt::new(3, 2);
        let (q, r) = x.div_rem(&y).unwrap();
        assert_eq!(q.mul(&y).add(&r), x);
        assert!(r.norm() < y.norm());
    }
}

//! Exact coefficient fields: arbitrary-precision rationals, prime fields
//! F_p with p > 3, and quadratic extensions F_{p^2}.
//!
//! Every field element can mint constants of its own field (`zero`, `one`,
//! `from_i64`), so generic code over [`Field`] never needs a separate
//! context object. Prime-field elements carry their modulus; mixing moduli
//! is a programming error and panics.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Common interface for the exact fields used throughout the crate.
///
/// All operations are exact; `inv` returns `None` on zero rather than
/// panicking so callers can surface degenerate inputs as errors.
pub trait Field: Clone + PartialEq + fmt::Debug {
    fn zero(&self) -> Self;
    fn one(&self) -> Self;
    fn from_i64(&self, n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn inv(&self) -> Option<Self>;

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|i| self.mul(&i))
    }

    fn is_one(&self) -> bool {
        *self == self.one()
    }

    /// Characteristic of the field; `None` in characteristic zero.
    fn characteristic(&self) -> Option<u64>;

    /// Square root, if `self` is a square. The sign is canonical: positive
    /// over Q, least representative in [0, p/2] over F_p.
    fn sqrt(&self) -> Option<Self>;
}

/// Exact rational numbers (a thin re-export; all arithmetic is exact and
/// denominators are kept reduced and positive by `num-rational`).
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl Field for BigRational {
    fn zero(&self) -> Self {
        <BigRational as Zero>::zero()
    }
    fn one(&self) -> Self {
        <BigRational as One>::one()
    }
    fn from_i64(&self, n: i64) -> Self {
        rat(n)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn characteristic(&self) -> Option<u64> {
        None
    }
    fn sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        if &(&n * &n) == self.numer() && &(&d * &d) == self.denom() {
            Some(BigRational::new(n, d))
        } else {
            None
        }
    }
}

/// Deterministic Miller-Rabin, valid for all u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    // extended Euclid on signed 128-bit intermediates
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(((t0 % m as i128 + m as i128) % m as i128) as u64)
}

/// An element of the prime field F_p, p an odd prime > 3.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    pub v: u64,
    pub p: u64,
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.v, self.p)
    }
}

impl Fp {
    pub fn new(v: i64, p: u64) -> Self {
        debug_assert!(p > 3, "prime fields are restricted to p > 3");
        let m = p as i128;
        Fp {
            v: ((v as i128 % m + m) % m) as u64,
            p,
        }
    }

    pub fn from_u64(v: u64, p: u64) -> Self {
        Fp { v: v % p, p }
    }

    /// Reduction of an exact rational mod p; `None` when p divides the
    /// denominator.
    pub fn from_rat(q: &Rat, p: u64) -> Option<Self> {
        let pp = BigInt::from(p);
        let num = q.numer().mod_floor(&pp);
        let den = q.denom().mod_floor(&pp);
        let num = num.to_u64_digits().1.first().copied().unwrap_or(0);
        let den = den.to_u64_digits().1.first().copied().unwrap_or(0);
        let dinv = inv_mod(den, p)?;
        Some(Fp::from_u64(mul_mod(num, dinv, p), p))
    }

    pub fn pow(&self, e: u64) -> Self {
        Fp {
            v: pow_mod(self.v, e, self.p),
            p: self.p,
        }
    }

    /// Legendre symbol as an i32 in {-1, 0, 1}.
    pub fn legendre(&self) -> i32 {
        if self.v == 0 {
            return 0;
        }
        if pow_mod(self.v, (self.p - 1) / 2, self.p) == 1 {
            1
        } else {
            -1
        }
    }
}

trait ModFloorExt {
    fn mod_floor(&self, m: &BigInt) -> BigInt;
}
impl ModFloorExt for BigInt {
    fn mod_floor(&self, m: &BigInt) -> BigInt {
        let r = self % m;
        if r.is_negative() {
            r + m
        } else {
            r
        }
    }
}

impl Field for Fp {
    fn zero(&self) -> Self {
        Fp { v: 0, p: self.p }
    }
    fn one(&self) -> Self {
        Fp { v: 1, p: self.p }
    }
    fn from_i64(&self, n: i64) -> Self {
        Fp::new(n, self.p)
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn add(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        let s = self.v + rhs.v;
        Fp {
            v: if s >= self.p { s - self.p } else { s },
            p: self.p,
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        Fp {
            v: if self.v >= rhs.v {
                self.v - rhs.v
            } else {
                self.v + self.p - rhs.v
            },
            p: self.p,
        }
    }
    fn neg(&self) -> Self {
        Fp {
            v: if self.v == 0 { 0 } else { self.p - self.v },
            p: self.p,
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        Fp {
            v: mul_mod(self.v, rhs.v, self.p),
            p: self.p,
        }
    }
    fn inv(&self) -> Option<Self> {
        inv_mod(self.v, self.p).map(|v| Fp { v, p: self.p })
    }
    fn characteristic(&self) -> Option<u64> {
        Some(self.p)
    }
    fn sqrt(&self) -> Option<Self> {
        sqrt_mod_p(self.v, self.p).map(|v| {
            // canonical sign: least representative
            let v = if v > self.p - v { self.p - v } else { v };
            Fp { v, p: self.p }
        })
    }
}

/// Tonelli-Shanks square root mod an odd prime. Returns any root.
pub fn sqrt_mod_p(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(pow_mod(a, (p + 1) / 4, p));
    }
    let mut q = p - 1;
    let mut s = 0u32;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let mut z = 2;
    while pow_mod(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, (q + 1) / 2, p);
    while t != 1 {
        let mut i = 0u32;
        let mut tt = t;
        while tt != 1 {
            tt = mul_mod(tt, tt, p);
            i += 1;
        }
        let mut b = c;
        for _ in 0..m - i - 1 {
            b = mul_mod(b, b, p);
        }
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Some(r)
}

/// An element a + b*g of F_{p^2} where g^2 = `nr`, a fixed quadratic
/// non-residue mod p. Built on demand for point counting over F_{p^2}.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct Fp2 {
    pub a: u64,
    pub b: u64,
    pub p: u64,
    pub nr: u64,
}

impl fmt::Debug for Fp2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*g (mod {}, g^2={})", self.a, self.b, self.p, self.nr)
    }
}

/// Smallest quadratic non-residue mod p.
pub fn nonresidue(p: u64) -> u64 {
    let mut nr = 2;
    while pow_mod(nr, (p - 1) / 2, p) != p - 1 {
        nr += 1;
    }
    nr
}

impl Fp2 {
    pub fn new(a: u64, b: u64, p: u64, nr: u64) -> Self {
        Fp2 { a: a % p, b: b % p, p, nr }
    }

    pub fn from_fp(x: Fp, nr: u64) -> Self {
        Fp2 { a: x.v, b: 0, p: x.p, nr }
    }

    pub fn pow(&self, mut e: u128) -> Self {
        let mut r = self.one();
        let mut b = *self;
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        r
    }

    /// `true` iff self is a square in F_{p^2}.
    pub fn is_square(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        let e = (self.p as u128 * self.p as u128 - 1) / 2;
        self.pow(e).is_one()
    }
}

impl Field for Fp2 {
    fn zero(&self) -> Self {
        Fp2 { a: 0, b: 0, p: self.p, nr: self.nr }
    }
    fn one(&self) -> Self {
        Fp2 { a: 1, b: 0, p: self.p, nr: self.nr }
    }
    fn from_i64(&self, n: i64) -> Self {
        Fp2 {
            a: Fp::new(n, self.p).v,
            b: 0,
            p: self.p,
            nr: self.nr,
        }
    }
    fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }
    fn add(&self, rhs: &Self) -> Self {
        debug_assert_eq!((self.p, self.nr), (rhs.p, rhs.nr));
        Fp2 {
            a: (self.a + rhs.a) % self.p,
            b: (self.b + rhs.b) % self.p,
            p: self.p,
            nr: self.nr,
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn neg(&self) -> Self {
        Fp2 {
            a: (self.p - self.a) % self.p,
            b: (self.p - self.b) % self.p,
            p: self.p,
            nr: self.nr,
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!((self.p, self.nr), (rhs.p, rhs.nr));
        let p = self.p;
        let ac = mul_mod(self.a, rhs.a, p);
        let bd = mul_mod(self.b, rhs.b, p);
        let ad = mul_mod(self.a, rhs.b, p);
        let bc = mul_mod(self.b, rhs.a, p);
        Fp2 {
            a: (ac + mul_mod(bd, self.nr, p)) % p,
            b: (ad + bc) % p,
            p,
            nr: self.nr,
        }
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // (a + bg)^-1 = (a - bg) / (a^2 - nr b^2)
        let p = self.p;
        let n = (mul_mod(self.a, self.a, p) + p - mul_mod(mul_mod(self.b, self.b, p), self.nr, p) % p) % p;
        let ninv = inv_mod(n, p)?;
        Some(Fp2 {
            a: mul_mod(self.a, ninv, p),
            b: mul_mod((p - self.b) % p, ninv, p),
            p,
            nr: self.nr,
        })
    }
    fn characteristic(&self) -> Option<u64> {
        Some(self.p)
    }
    fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(*self);
        }
        if !self.is_square() {
            return None;
        }
        // Tonelli-Shanks in F_{p^2}
        let q = self.p as u128 * self.p as u128;
        let mut m2 = q - 1;
        let mut s = 0u32;
        while m2 % 2 == 0 {
            m2 /= 2;
            s += 1;
        }
        // find a non-square
        let mut z = Fp2::new(1, 1, self.p, self.nr);
        loop {
            if !z.is_square() && !z.is_zero() {
                break;
            }
            z.a = (z.a + 1) % self.p;
            if z.a == 0 {
                z.b = (z.b + 1) % self.p;
            }
        }
        let mut m = s;
        let mut c = z.pow(m2);
        let mut t = self.pow(m2);
        let mut r = self.pow((m2 + 1) / 2);
        while !t.is_one() {
            let mut i = 0u32;
            let mut tt = t;
            while !tt.is_one() {
                tt = tt.mul(&tt);
                i += 1;
            }
            let mut b = c;
            for _ in 0..m - i - 1 {
                b = b.mul(&b);
            }
            m = i;
            c = b.mul(&b);
            t = t.mul(&c);
            r = r.mul(&b);
        }
        Some(r)
    }
}

/// Random prime with at least `bits` bits (used for grid certification).
pub fn random_prime_at_least(bits: u32, seed: u64) -> u64 {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    loop {
        let c: u64 = rng.gen_range((1u64 << bits)..(1u64 << (bits + 1)));
        let c = c | 1;
        if is_prime_u64(c) {
            return c;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_sqrt_canonical() {
        let x = rat_frac(9, 4);
        assert_eq!(x.sqrt().unwrap(), rat_frac(3, 2));
        assert!(rat(-1).sqrt().is_none());
        assert!(rat_frac(2, 1).sqrt().is_none());
    }

    #[test]
    fn fp_arithmetic() {
        let p = 1_000_003u64;
        let a = Fp::new(-7, p);
        let b = Fp::new(12, p);
        assert_eq!(a.add(&b), Fp::new(5, p));
        assert_eq!(a.mul(&a.inv().unwrap()), a.one());
        let s = Fp::new(49, p).sqrt().unwrap();
        assert_eq!(s.mul(&s), Fp::new(49, p));
        assert!(s.v <= p - s.v, "canonical least representative");
    }

    #[test]
    fn fp2_field_axioms() {
        let p = 101u64;
        let nr = nonresidue(p);
        let x = Fp2::new(3, 5, p, nr);
        let y = Fp2::new(7, 11, p, nr);
        assert_eq!(x.mul(&y), y.mul(&x));
        assert_eq!(x.mul(&x.inv().unwrap()), x.one());
        let sq = x.mul(&x);
        let r = sq.sqrt().unwrap();
        assert!(r == x || r == x.neg());
    }

    #[test]
    fn primality() {
        assert!(is_prime_u64((1 << 31) + 11));
        assert!(!is_prime_u64((1 << 31) + 1));
        assert!(is_prime_u64(2_147_483_647));
    }
}

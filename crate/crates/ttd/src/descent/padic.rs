//! Bounded-precision p-adic numbers and quadratic extensions of Q_p,
//! sufficient for cube-class extraction: elements are p^val * unit with
//! the unit known mod p^prec. All inputs derive from exact rationals, so
//! precision loss is handled by recomputing from scratch at higher
//! precision rather than by tracking error terms.

use crate::error::{Error, Result};
use crate::field::Rat;
use crate::numberfields::localcube::val_rat;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug)]
pub struct Padic {
    pub p: u64,
    /// valuation; meaningless when `zero`
    pub val: i64,
    /// unit part mod p^prec, coprime to p
    pub unit: BigUint,
    /// number of significant base-p digits of the unit
    pub prec: u32,
    pub zero: bool,
}

fn pk(p: u64, k: u32) -> BigUint {
    BigUint::from(p).pow(k)
}

impl Padic {
    pub fn exact_zero(p: u64) -> Self {
        Padic {
            p,
            val: i64::MAX / 4,
            unit: BigUint::zero(),
            prec: 0,
            zero: true,
        }
    }

    pub fn from_rat(q: &Rat, p: u64, prec: u32) -> Self {
        if q.numer().is_zero() {
            return Padic::exact_zero(p);
        }
        let v = val_rat(q, p);
        let pb = BigInt::from(p);
        let mut n = q.numer().clone();
        while (&n % &pb).is_zero() {
            n /= &pb;
        }
        let mut d = q.denom().clone();
        while (&d % &pb).is_zero() {
            d /= &pb;
        }
        let m = BigInt::from(pk(p, prec));
        let nn = n.mod_floor(&m).to_biguint().expect("nonnegative");
        let dd = d.mod_floor(&m).to_biguint().expect("nonnegative");
        let dinv = inv_mod_big(&dd, &m.to_biguint().unwrap()).expect("denominator unit");
        Padic {
            p,
            val: v,
            unit: (nn * dinv) % pk(p, prec),
            prec,
            zero: false,
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.zero || rhs.zero {
            return Padic::exact_zero(self.p);
        }
        let prec = self.prec.min(rhs.prec);
        Padic {
            p: self.p,
            val: self.val + rhs.val,
            unit: (&self.unit * &rhs.unit) % pk(self.p, prec),
            prec,
            zero: false,
        }
    }

    pub fn neg(&self) -> Self {
        if self.zero {
            return self.clone();
        }
        let m = pk(self.p, self.prec);
        Padic {
            p: self.p,
            val: self.val,
            unit: (&m - &self.unit % &m) % &m,
            prec: self.prec,
            zero: false,
        }
    }

    /// Subtraction with explicit failure on full cancellation within the
    /// available precision.
    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        if rhs.zero {
            return Ok(self.clone());
        }
        if self.zero {
            return Ok(rhs.neg());
        }
        let p = self.p;
        let v0 = self.val.min(rhs.val);
        let abs_prec = (self.val + self.prec as i64).min(rhs.val + rhs.prec as i64);
        let digits = (abs_prec - v0).max(0) as u32;
        if digits < 4 {
            return Err(Error::InsufficientPrecision);
        }
        let m = pk(p, digits);
        let a = (&self.unit * pk(p, (self.val - v0) as u32)) % &m;
        let b = (&rhs.unit * pk(p, (rhs.val - v0) as u32)) % &m;
        let c = ((&a + &m) - b) % &m;
        if c.is_zero() {
            return Err(Error::InsufficientPrecision);
        }
        let mut dv = 0u32;
        let mut u = c;
        let pb = BigUint::from(p);
        while (&u % &pb).is_zero() {
            u /= &pb;
            dv += 1;
        }
        let rem = digits - dv;
        if rem < 4 {
            return Err(Error::InsufficientPrecision);
        }
        Ok(Padic {
            p,
            val: v0 + dv as i64,
            unit: u % pk(p, rem),
            prec: rem,
            zero: false,
        })
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.sub(&rhs.neg())
    }

    pub fn inv(&self) -> Result<Self> {
        if self.zero {
            return Err(Error::DegenerateInput("inverse of zero".into()));
        }
        let m = pk(self.p, self.prec);
        let u = inv_mod_big(&self.unit, &m).ok_or(Error::InsufficientPrecision)?;
        Ok(Padic {
            p: self.p,
            val: -self.val,
            unit: u,
            prec: self.prec,
            zero: false,
        })
    }

    /// Unit residue mod p^k (k <= prec).
    pub fn unit_mod(&self, k: u32) -> u64 {
        debug_assert!(!self.zero && k <= self.prec);
        (&self.unit % pk(self.p, k)).to_u64().expect("small modulus")
    }

    /// Square root when the valuation is even and the unit is a square;
    /// `None` when provably not a square.
    pub fn sqrt(&self) -> Option<Self> {
        if self.zero {
            return Some(self.clone());
        }
        if self.val % 2 != 0 {
            return None;
        }
        let p = self.p;
        let u = sqrt_unit_big(&self.unit, p, self.prec)?;
        Some(Padic {
            p,
            val: self.val / 2,
            unit: u,
            prec: if p == 2 { self.prec - 1 } else { self.prec },
            zero: false,
        })
    }
}

pub fn inv_mod_big(a: &BigUint, m: &BigUint) -> Option<BigUint> {
    let a = BigInt::from(a.clone());
    let m = BigInt::from(m.clone());
    let e = a.extended_gcd(&m);
    if !e.gcd.is_one() {
        return None;
    }
    let x = e.x.mod_floor(&m);
    x.to_biguint()
}

/// Square root of a unit mod p^prec (unit square assumed testable): for
/// odd p Tonelli mod p then Newton; for p = 2 requires u = 1 mod 8.
pub fn sqrt_unit_big(u: &BigUint, p: u64, prec: u32) -> Option<BigUint> {
    if p == 2 {
        if prec < 3 || (u % BigUint::from(8u32)) != BigUint::one() {
            return if (u % pk(2, prec.min(3))) == BigUint::one() % pk(2, prec.min(3)) {
                Some(BigUint::one())
            } else {
                None
            };
        }
        // digit lifting: roots mod 2^k extend by adjusting bit k-1
        let m = pk(2, prec);
        let mut x = BigUint::one();
        for k in 3..prec {
            let mk = pk(2, k + 1);
            if ((&x * &x + &mk - (u % &mk)) % &mk) != BigUint::zero() {
                x += pk(2, k - 1);
            }
        }
        x %= &m;
        if (&x * &x) % pk(2, prec) != u % pk(2, prec) {
            // last bit adjustment
            let cands = [
                x.clone(),
                (&x + pk(2, prec - 1)) % &m,
                (&x + pk(2, prec - 2)) % &m,
            ];
            for c in cands {
                if (&c * &c) % pk(2, prec) == u % pk(2, prec) {
                    return Some(c);
                }
            }
            return None;
        }
        return Some(x);
    }
    let u0 = (u % BigUint::from(p)).to_u64().unwrap();
    let r0 = crate::field::sqrt_mod_p(u0, p)?;
    // Newton: x -> (x + u/x)/2
    let m = pk(p, prec);
    let mut x = BigUint::from(r0);
    let inv2 = inv_mod_big(&BigUint::from(2u32), &m)?;
    for _ in 0..(64 - prec.leading_zeros() + 2) {
        let xinv = inv_mod_big(&x, &m)?;
        x = ((&x + (u % &m) * xinv) * &inv2) % &m;
    }
    if (&x * &x) % &m == u % &m {
        Some(x)
    } else {
        None
    }
}

/// Whether an exact rational is a square in Q_p.
pub fn is_square_in_qp(q: &Rat, p: u64) -> bool {
    if q.numer().is_zero() {
        return true;
    }
    if q.is_negative() && false {
        unreachable!()
    }
    let v = val_rat(q, p);
    if v % 2 != 0 {
        return false;
    }
    if p == 2 {
        let u = crate::numberfields::localcube::unit_rat_mod(q, 2, 3);
        u % 8 == 1
    } else {
        let u = crate::numberfields::localcube::unit_rat_mod(q, p, 1);
        crate::field::pow_mod(u, (p - 1) / 2, p) == 1
    }
}

/// An element a + b*delta of Q_p(sqrt(e)), coefficients bounded-precision
/// p-adics. `e` is a squarefree-ish integer with v_p(e) in {0, 1}.
#[derive(Clone, Debug)]
pub struct Quad {
    pub e: i64,
    pub a: Padic,
    pub b: Padic,
}

impl Quad {
    pub fn new(e: i64, a: Padic, b: Padic) -> Self {
        Quad { e, a, b }
    }

    pub fn from_rats(e: i64, a: &Rat, b: &Rat, p: u64, prec: u32) -> Self {
        Quad {
            e,
            a: Padic::from_rat(a, p, prec),
            b: Padic::from_rat(b, p, prec),
        }
    }

    pub fn scalar(e: i64, a: Padic) -> Self {
        let z = Padic::exact_zero(a.p);
        Quad { e, a, b: z }
    }

    pub fn p(&self) -> u64 {
        self.a.p
    }

    pub fn is_exact_zero(&self) -> bool {
        self.a.zero && self.b.zero
    }

    pub fn ramified(&self) -> bool {
        let p = self.p();
        if self.e.unsigned_abs() % p as u128 as u64 == 0 {
            return true;
        }
        // at p = 2 the odd classes -1 and 3 mod squares are also ramified
        p == 2 && self.e.rem_euclid(4) == 3
    }

    /// A uniformizer of the extension as an element.
    fn uniformizer(&self) -> Quad {
        let p = self.p();
        let prec = 32;
        if !self.ramified() {
            Quad::from_rats(
                self.e,
                &Rat::from_integer(BigInt::from(p)),
                &Rat::from_integer(BigInt::zero()),
                p,
                prec,
            )
        } else if self.e.unsigned_abs() % p as u128 as u64 == 0 {
            Quad::from_rats(
                self.e,
                &Rat::from_integer(BigInt::zero()),
                &Rat::from_integer(BigInt::one()),
                p,
                prec,
            )
        } else {
            // p = 2, e = 3 mod 4: pi = 1 + delta, N(pi) = 1 - e with
            // v_2(1 - e) = 1
            Quad::from_rats(
                self.e,
                &Rat::from_integer(BigInt::one()),
                &Rat::from_integer(BigInt::one()),
                p,
                prec,
            )
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        Ok(Quad {
            e: self.e,
            a: self.a.add(&rhs.a)?,
            b: self.b.add(&rhs.b)?,
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        Ok(Quad {
            e: self.e,
            a: self.a.sub(&rhs.a)?,
            b: self.b.sub(&rhs.b)?,
        })
    }

    pub fn neg(&self) -> Self {
        Quad {
            e: self.e,
            a: self.a.neg(),
            b: self.b.neg(),
        }
    }

    pub fn conj(&self) -> Self {
        Quad {
            e: self.e,
            a: self.a.clone(),
            b: self.b.neg(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        // (a + b d)(c + f d) = ac + e b f + (a f + b c) d
        let p = self.p();
        let prec = [&self.a, &self.b, &rhs.a, &rhs.b]
            .iter()
            .filter(|x| !x.zero)
            .map(|x| x.prec)
            .min()
            .unwrap_or(0);
        let erat = Rat::from_integer(BigInt::from(self.e));
        let ep = Padic::from_rat(&erat, p, prec.max(8));
        let ac = self.a.mul(&rhs.a);
        let bf = self.b.mul(&rhs.b);
        let af = self.a.mul(&rhs.b);
        let bc = self.b.mul(&rhs.a);
        Ok(Quad {
            e: self.e,
            a: ac.add(&ep.mul(&bf))?,
            b: af.add(&bc)?,
        })
    }

    pub fn norm(&self) -> Result<Padic> {
        // a^2 - e b^2
        let p = self.p();
        let prec = [&self.a, &self.b]
            .iter()
            .filter(|x| !x.zero)
            .map(|x| x.prec)
            .min()
            .unwrap_or(8);
        let erat = Rat::from_integer(BigInt::from(self.e));
        let ep = Padic::from_rat(&erat, p, prec.max(8));
        self.a.mul(&self.a).sub(&ep.mul(&self.b.mul(&self.b)))
    }

    /// Normalized valuation (w(uniformizer) = 1), computed through the
    /// norm: w = v_p(N) when ramified, v_p(N)/2 when unramified.
    pub fn val(&self) -> Result<i64> {
        if self.is_exact_zero() {
            return Err(Error::DegenerateInput("valuation of zero".into()));
        }
        let n = self.norm()?;
        if n.zero {
            return Err(Error::InsufficientPrecision);
        }
        if self.ramified() {
            Ok(n.val)
        } else {
            debug_assert_eq!(n.val % 2, 0, "unramified norms have even valuation");
            Ok(n.val / 2)
        }
    }

    pub fn inv(&self) -> Result<Self> {
        let n = self.norm()?;
        let ninv = n.inv()?;
        let c = self.conj();
        Ok(Quad {
            e: self.e,
            a: c.a.mul(&ninv),
            b: c.b.mul(&ninv),
        })
    }

    /// Multiplies by uniformizer^k (k may be negative).
    pub fn shift(&self, k: i64) -> Result<Self> {
        if k == 0 {
            return Ok(self.clone());
        }
        if !self.ramified() {
            // fast path: scale coordinate valuations by powers of p
            let move_by = |x: &Padic| {
                if x.zero {
                    x.clone()
                } else {
                    let mut y = x.clone();
                    y.val += k;
                    y
                }
            };
            let mut out = self.clone();
            out.a = move_by(&out.a);
            out.b = move_by(&out.b);
            return Ok(out);
        }
        let pi = self.uniformizer();
        let step = if k > 0 { pi } else { pi.inv()? };
        let mut out = self.clone();
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&step)?;
        }
        Ok(out)
    }

    /// Square root in the quadratic extension; `Ok(None)` when provably
    /// not a square, `Err` on precision exhaustion.
    pub fn sqrt(&self) -> Result<Option<Quad>> {
        if self.is_exact_zero() {
            return Ok(Some(self.clone()));
        }
        let w = self.val()?;
        if w % 2 != 0 {
            return Ok(None);
        }
        let unit = self.shift(-w)?;
        let root_unit = match self.unit_sqrt(&unit)? {
            Some(r) => r,
            None => return Ok(None),
        };
        Ok(Some(root_unit.shift(w / 2)?))
    }

    /// Lower bound on the p-adic valuation of (x - y) for one coordinate
    /// pair, treating full cancellation at working precision as a bound.
    fn coord_diff_bound(x: &Padic, y: &Padic) -> i64 {
        const INF: i64 = i64::MAX / 4;
        if x.zero && y.zero {
            return INF;
        }
        if x.zero {
            return y.val;
        }
        if y.zero {
            return x.val;
        }
        let p = x.p;
        let v0 = x.val.min(y.val);
        let abs_prec = (x.val + x.prec as i64).min(y.val + y.prec as i64);
        let digits = (abs_prec - v0).max(0) as u32;
        let m = pk(p, digits);
        let a = (&x.unit * pk(p, (x.val - v0) as u32)) % &m;
        let b = (&y.unit * pk(p, (y.val - v0) as u32)) % &m;
        let c = ((&a + &m) - b) % &m;
        if c.is_zero() {
            return abs_prec;
        }
        let mut dv = 0i64;
        let mut u = c;
        let pb = BigUint::from(p);
        while (&u % &pb).is_zero() {
            u /= &pb;
            dv += 1;
        }
        v0 + dv
    }

    /// Lower bound on w(self - rhs), in the normalized valuation.
    pub fn diff_wval_bound(&self, rhs: &Quad) -> i64 {
        const INF: i64 = i64::MAX / 4;
        let ba = Quad::coord_diff_bound(&self.a, &rhs.a);
        let bb = Quad::coord_diff_bound(&self.b, &rhs.b);
        if !self.ramified() {
            return ba.min(bb);
        }
        let vpe = self.e.unsigned_abs() % self.p() as u128 as u64 == 0;
        if vpe {
            // delta is a uniformizer: w(a + b delta) = min(2 v(a), 2 v(b) + 1)
            let wa = if ba >= INF { INF } else { 2 * ba };
            let wb = if bb >= INF { INF } else { 2 * bb + 1 };
            wa.min(wb)
        } else {
            // p = 2, e = 3 mod 4: w(a + b delta) >= min(2 v(a), 2 v(b)),
            // conservative by at most one digit
            let wa = if ba >= INF { INF } else { 2 * ba };
            let wb = if bb >= INF { INF } else { 2 * bb };
            wa.min(wb)
        }
    }

    /// Working absolute precision of this element in w-units.
    fn abs_prec_w(&self) -> i64 {
        const INF: i64 = i64::MAX / 4;
        let pa = if self.a.zero { INF } else { self.a.val + self.a.prec as i64 };
        let pb = if self.b.zero { INF } else { self.b.val + self.b.prec as i64 };
        let scale = if self.ramified() { 2 } else { 1 };
        (pa.min(pb)).saturating_mul(scale)
    }

    /// Newton refinement from a Hensel-adequate seed; returns the root
    /// once x^2 - z vanishes to (nearly) working precision.
    fn newton_sqrt(&self, z: &Quad, seed: Quad) -> Result<Option<Quad>> {
        let p = self.p();
        let prec = [&z.a, &z.b]
            .iter()
            .filter(|x| !x.zero)
            .map(|x| x.prec)
            .min()
            .unwrap_or(12)
            .max(8);
        let goal = (z.abs_prec_w() - 4).max(8);
        let half = Padic::from_rat(&Rat::new(BigInt::one(), BigInt::from(2)), p, prec);
        let e2 = if self.ramified() { 2 } else { 1 } * if p == 2 { 1 } else { 0 };
        let floor = 2 * e2 + 6;
        let mut x = seed;
        let mut last = -1i64;
        let mut stalls = 0;
        for _ in 0..80 {
            let xsq = x.mul(&x)?;
            let bound = xsq.diff_wval_bound(z);
            // the iterate's own precision caps what is observable
            let cap = xsq.abs_prec_w().min(z.abs_prec_w()) - 2;
            if bound >= goal.min(cap).max(floor) {
                return Ok(Some(x));
            }
            if bound <= last {
                stalls += 1;
                if stalls >= 2 {
                    return Err(Error::InsufficientPrecision);
                }
            } else {
                stalls = 0;
            }
            last = bound;
            let xin = x.inv()?;
            let nxt = x.add(&z.mul(&xin)?)?;
            x = Quad {
                e: self.e,
                a: nxt.a.mul(&half),
                b: nxt.b.mul(&half),
            };
        }
        Err(Error::InsufficientPrecision)
    }

    /// Square root of a w-unit.
    fn unit_sqrt(&self, z: &Quad) -> Result<Option<Quad>> {
        let p = self.p();
        if p == 2 {
            return self.unit_sqrt_2adic(z);
        }
        // residue-field seed
        let seed = if self.ramified() {
            // residue field F_p, represented by the a-coordinate
            debug_assert!(!z.a.zero && z.a.val == 0);
            let a0 = z.a.unit_mod(1);
            match crate::field::sqrt_mod_p(a0, p) {
                Some(r) => Quad::from_rats(
                    self.e,
                    &Rat::from_integer(BigInt::from(r)),
                    &Rat::from_integer(BigInt::zero()),
                    p,
                    z.a.prec,
                ),
                None => return Ok(None),
            }
        } else {
            use crate::field::{Fp2, Field};
            let nr = (self.e.rem_euclid(p as i64)) as u64;
            let a0 = if z.a.zero || z.a.val > 0 { 0 } else { z.a.unit_mod(1) };
            let b0 = if z.b.zero || z.b.val > 0 { 0 } else { z.b.unit_mod(1) };
            let r = Fp2::new(a0, b0, p, nr);
            match r.sqrt() {
                Some(s) if !s.is_zero() => Quad::from_rats(
                    self.e,
                    &Rat::from_integer(BigInt::from(s.a)),
                    &Rat::from_integer(BigInt::from(s.b)),
                    p,
                    z.a.prec.max(z.b.prec),
                ),
                _ => return Ok(None),
            }
        };
        self.newton_sqrt(z, seed)
    }

    fn unit_sqrt_2adic(&self, z: &Quad) -> Result<Option<Quad>> {
        // Brute-force a seed over residues mod pi^(2 e2 + 1) with
        // e2 = w(2); a square root, if one exists, is congruent to some
        // candidate, so exhaustion proves non-squareness. Then refine.
        let e2: i64 = if self.ramified() { 2 } else { 1 };
        let target = 2 * e2 + 1;
        let span = 1i64 << (target + 1);
        let prec = z.a.prec.max(z.b.prec).max(12);
        for c0 in 0..span {
            for c1 in 0..span {
                let cand = Quad::from_rats(
                    self.e,
                    &Rat::from_integer(BigInt::from(c0)),
                    &Rat::from_integer(BigInt::from(c1)),
                    2,
                    prec,
                );
                // candidate squares are exact integers; avoid fuzzy
                // cancellation by forming them rationally
                let sq = Quad::from_rats(
                    self.e,
                    &Rat::from_integer(BigInt::from(c0 * c0 + self.e * c1 * c1)),
                    &Rat::from_integer(BigInt::from(2 * c0 * c1)),
                    2,
                    prec,
                );
                let bound = sq.diff_wval_bound(z);
                if bound >= target {
                    match self.newton_sqrt(z, cand) {
                        Ok(Some(r)) => return Ok(Some(r)),
                        // a candidate may meet the seed bound without
                        // satisfying Hensel (boundary cases); keep looking
                        Err(Error::InsufficientPrecision) | Ok(None) => continue,
                        Err(e) => return Err(e),
                    }
                }
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, rat_frac};

    #[test]
    fn padic_roundtrip() {
        let x = Padic::from_rat(&rat_frac(50, 9), 5, 20);
        assert_eq!(x.val, 2);
        let y = Padic::from_rat(&rat(7), 5, 20);
        let z = x.mul(&y);
        let w = Padic::from_rat(&rat_frac(350, 9), 5, 20);
        assert_eq!((z.val, &z.unit % BigUint::from(5u32)), (w.val, &w.unit % BigUint::from(5u32)));
    }

    #[test]
    fn padic_sqrt_odd_and_two() {
        for (q, p) in [(rat(49), 7u64), (rat_frac(9, 16), 5), (rat(17), 2)] {
            let x = Padic::from_rat(&q, p, 24);
            let r = x.sqrt().expect("square");
            let back = r.mul(&r);
            assert_eq!(back.val, x.val);
            let k = r.prec.min(x.prec).min(10);
            assert_eq!(back.unit_mod(k), x.unit_mod(k), "p = {p}");
        }
        assert!(Padic::from_rat(&rat(5), 2, 24).sqrt().is_none());
        assert!(Padic::from_rat(&rat(3), 7, 24).sqrt().is_none());
    }

    #[test]
    fn quad_arithmetic_and_norm() {
        // Q_5(sqrt(-3)): (1 + d)(1 - d) = 1 - (-3) = 4
        let one = Padic::from_rat(&rat(1), 5, 20);
        let z = Quad::new(-3, one.clone(), one.clone());
        let n = z.norm().unwrap();
        assert_eq!(n.val, 0);
        assert_eq!(n.unit_mod(2), 4);
    }

    #[test]
    fn quad_sqrt_unramified() {
        // square an element and take the root back in Q_5(sqrt(-3))
        let a = Quad::from_rats(-3, &rat(2), &rat(1), 5, 24);
        let sq = a.mul(&a).unwrap();
        let r = a; // reference
        let got = sq.sqrt().unwrap().expect("is a square");
        // got = +-r: compare norms and traces loosely via norm equality
        let n1 = got.norm().unwrap();
        let n2 = r.norm().unwrap();
        assert_eq!(n1.val, n2.val);
        assert_eq!(n1.unit_mod(6), n2.unit_mod(6));
        // a non-square: delta itself has odd valuation at p = 3
        let d3 = Quad::from_rats(-3, &rat(0), &rat(1), 3, 24);
        assert!(d3.sqrt().unwrap().is_none());
    }

    #[test]
    fn quad_sqrt_ramified_3() {
        // Q_3(sqrt(-3)): square roots of squares exist
        let a = Quad::from_rats(-3, &rat(2), &rat(3), 3, 26);
        let sq = a.mul(&a).unwrap();
        let got = sq.sqrt().unwrap().expect("square");
        let n1 = got.norm().unwrap();
        let n2 = a.norm().unwrap();
        assert_eq!(n1.val, n2.val);
        assert_eq!(n1.unit_mod(4), n2.unit_mod(4));
    }

    #[test]
    fn quad_sqrt_2adic() {
        for e in [-3i64, -1, 2, -2, 3, 6, -6] {
            let a = Quad::from_rats(e, &rat(3), &rat(2), 2, 30);
            let sq = a.mul(&a).unwrap();
            let got = sq.sqrt().unwrap().unwrap_or_else(|| panic!("square for e={e}"));
            let n1 = got.norm().unwrap();
            let n2 = a.norm().unwrap();
            assert_eq!(n1.val, n2.val, "e = {e}");
            assert_eq!(n1.unit_mod(5), n2.unit_mod(5), "e = {e}");
        }
    }

    #[test]
    fn square_test_in_qp() {
        assert!(is_square_in_qp(&rat(49), 7));
        assert!(!is_square_in_qp(&rat(7), 7));
        assert!(is_square_in_qp(&rat(17), 2));
        assert!(!is_square_in_qp(&rat(3), 2));
        assert!(is_square_in_qp(&rat_frac(4, 25), 5));
    }
}

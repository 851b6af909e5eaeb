//! Local cube-class groups: Q_v^x / (Q_v^x)^3 and K_w^x / (K_w^x)^3 for
//! K = Q(omega), as finite F_3 coordinate spaces with deterministic bases.
//!
//! Classes are determined by finite data: the valuation mod 3 plus a unit
//! residue (mod v for v = 1 mod 3, mod 9 for Q_3, the residue field for
//! inert places, and mod (1-omega)^5 at the ramified prime — each bound
//! justified by Hensel's lemma for x^3 - u). Classification functions
//! accept that finite data directly, so both exact global elements and
//! p-adic approximations feed the same code.

use crate::error::{Error, Result};
use crate::field::{pow_mod, Rat};
use crate::numberfields::eisenstein::{prime_above, EisensteinInt};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Valuation of an exact rational at p.
pub fn val_rat(q: &Rat, p: u64) -> i64 {
    assert!(!q.numer().is_zero());
    let pb = BigInt::from(p);
    let mut v = 0i64;
    let mut n = q.numer().clone();
    while (&n % &pb).is_zero() {
        n /= &pb;
        v += 1;
    }
    let mut d = q.denom().clone();
    while (&d % &pb).is_zero() {
        d /= &pb;
        v -= 1;
    }
    v
}

/// Unit part of an exact rational mod p^k (after stripping all powers of p).
pub fn unit_rat_mod(q: &Rat, p: u64, k: u32) -> u64 {
    let pb = BigInt::from(p);
    let mut n = q.numer().clone();
    while (&n % &pb).is_zero() {
        n /= &pb;
    }
    let mut d = q.denom().clone();
    while (&d % &pb).is_zero() {
        d /= &pb;
    }
    let m = p.checked_pow(k).expect("modulus fits u64");
    let mb = BigInt::from(m);
    let nr = n.mod_floor(&mb).to_u64_digits().1.first().copied().unwrap_or(0);
    let dr = d.mod_floor(&mb).to_u64_digits().1.first().copied().unwrap_or(0);
    let dinv = crate::field::inv_mod(dr, m).expect("denominator prime to p");
    crate::field::mul_mod(nr, dinv, m)
}

/// The cube-class space of Q_v^x. Coordinates: [val mod 3] for
/// v = 2 mod 3; [val mod 3, unit dlog] for v = 1 mod 3 and v = 3.
#[derive(Clone, Debug)]
pub struct QClassSpace {
    pub p: u64,
    pub dim: usize,
    /// chi(g) for the fixed smallest non-cube unit g, when v = 1 mod 3.
    chi_g: Option<u64>,
}

impl QClassSpace {
    pub fn new(p: u64) -> Self {
        if p == 3 {
            QClassSpace { p, dim: 2, chi_g: None }
        } else if p % 3 == 1 {
            let mut g = 2;
            while pow_mod(g, (p - 1) / 3, p) == 1 {
                g += 1;
            }
            QClassSpace {
                p,
                dim: 2,
                chi_g: Some(pow_mod(g, (p - 1) / 3, p)),
            }
        } else {
            QClassSpace { p, dim: 1, chi_g: None }
        }
    }

    /// Class from (valuation, unit residue). The residue must be given
    /// mod 9 for p = 3 and mod p for p = 1 mod 3; it is ignored for
    /// p = 2 mod 3 (all units are cubes there).
    pub fn classify_parts(&self, val: i64, unit: u64) -> Vec<u8> {
        let v = (val.rem_euclid(3)) as u8;
        match self.p {
            3 => {
                let u9 = unit % 9;
                let dl = match u9 {
                    1 | 8 => 0,
                    2 | 7 => 1,
                    4 | 5 => 2,
                    _ => unreachable!("unit residue mod 9"),
                };
                vec![v, dl]
            }
            p if p % 3 == 1 => {
                let c = pow_mod(unit % p, (p - 1) / 3, p);
                let g = self.chi_g.expect("split carries chi");
                let dl = if c == 1 {
                    0
                } else if c == g {
                    1
                } else {
                    debug_assert_eq!(c, crate::field::mul_mod(g, g, p));
                    2
                };
                vec![v, dl]
            }
            _ => vec![v],
        }
    }

    pub fn classify_rat(&self, x: &Rat) -> Result<Vec<u8>> {
        if x.numer().is_zero() {
            return Err(Error::DegenerateInput("class of zero".into()));
        }
        let val = val_rat(x, self.p);
        let unit = unit_rat_mod(x, self.p, if self.p == 3 { 2 } else { 1 });
        Ok(self.classify_parts(val, unit))
    }
}

/// Exact local cube class of a nonzero rational at a prime of Q.
pub fn local_cube_class(x: &Rat, p: u64) -> Result<Vec<u8>> {
    QClassSpace::new(p).classify_rat(x)
}

/// Full cube-class coordinates of K_w^x for an inert place (residue field
/// F_{p^2}): [val mod 3, residue dlog]. The H^1(Q_v, Z/3) slice is the
/// val = 0 hyperplane.
#[derive(Clone, Debug)]
pub struct InertSpace {
    pub p: u64,
    /// chi(tau) for a fixed non-cube residue tau, as an F_{p^2} element.
    chi_tau: (u64, u64),
}

impl InertSpace {
    pub fn new(p: u64) -> Self {
        assert_eq!(p % 3, 2, "inert places have p = 2 mod 3");
        let e = ((p as u128 * p as u128 - 1) / 3) as u128;
        // search a residue with chi != 1
        for b in 0..p {
            for a in 0..p {
                if a == 0 && b == 0 {
                    continue;
                }
                let c = fp2_pow((a, b), e, p);
                if c != (1, 0) {
                    return InertSpace { p, chi_tau: c };
                }
            }
        }
        unreachable!("F_{{p^2}} has non-cubes")
    }

    pub fn full_dim(&self) -> usize {
        2
    }

    /// Class from (valuation, residue of the unit part in F_p[omega]).
    pub fn classify_parts(&self, val: i64, res: (u64, u64)) -> Vec<u8> {
        let p = self.p;
        debug_assert!(res.0 % p != 0 || res.1 % p != 0);
        let e = ((p as u128 * p as u128 - 1) / 3) as u128;
        let c = fp2_pow((res.0 % p, res.1 % p), e, p);
        let dl = if c == (1, 0) {
            0
        } else if c == self.chi_tau {
            1
        } else {
            2
        };
        vec![(val.rem_euclid(3)) as u8, dl]
    }

    /// Exact class of a nonzero Eisenstein integer quotient z1/z2.
    pub fn classify_eis(&self, z: &EisensteinInt) -> Vec<u8> {
        let p = BigInt::from(self.p);
        let mut a = z.a.clone();
        let mut b = z.b.clone();
        let mut val = 0i64;
        loop {
            if (&a % &p).is_zero() && (&b % &p).is_zero() {
                a /= &p;
                b /= &p;
                val += 1;
            } else {
                break;
            }
        }
        let ra = a.mod_floor(&p).to_u64_digits().1.first().copied().unwrap_or(0);
        let rb = b.mod_floor(&p).to_u64_digits().1.first().copied().unwrap_or(0);
        self.classify_parts(val, (ra, rb))
    }
}

/// Multiplication in F_p[omega] (omega^2 = -1 - omega).
pub fn fp2w_mul(z: (u64, u64), w: (u64, u64), p: u64) -> (u64, u64) {
    let (a, b) = z;
    let (c, d) = w;
    let m = |x, y| crate::field::mul_mod(x, y, p);
    let ac = m(a, c);
    let bd = m(b, d);
    let ad = m(a, d);
    let bc = m(b, c);
    ((ac + p - bd) % p, (ad + bc + p - bd) % p)
}

fn fp2_pow(z: (u64, u64), mut e: u128, p: u64) -> (u64, u64) {
    let mut r = (1u64, 0u64);
    let mut base = (z.0 % p, z.1 % p);
    while e > 0 {
        if e & 1 == 1 {
            r = fp2w_mul(r, base, p);
        }
        base = fp2w_mul(base, base, p);
        e >>= 1;
    }
    r
}

/// The ramified place of K above 3. Unit classes are read off mod
/// (1 - omega)^5 through a precomputed table; full coordinates are
/// [val mod 3, e1, e2, e3] over the generators omega, 1 - 3 omega,
/// -2 - 6 omega. The norm kernel is the slice {val = 0, e2 = 0}.
#[derive(Clone, Debug)]
pub struct RamifiedSpace {
    cube_keys: std::collections::HashSet<[u8; 5]>,
    class_reps: Vec<([u8; 3], (i64, i64))>,
}

const M3: i64 = 6561; // 3^8, working modulus for pi-digit extraction

fn kw_mul_i(z: (i64, i64), w: (i64, i64)) -> (i64, i64) {
    let (a, b) = z;
    let (c, d) = w;
    (
        (a * c - b * d).rem_euclid(M3),
        (a * d + b * c - b * d).rem_euclid(M3),
    )
}

/// pi-adic digits (pi = 1 - omega) of a unit given mod 3^8.
fn digit_key(mut z: (i64, i64)) -> [u8; 5] {
    let mut out = [0u8; 5];
    for slot in out.iter_mut() {
        let d = (z.0 + z.1).rem_euclid(3);
        *slot = d as u8;
        // z <- (z - d) (2 + omega) / 3
        let shifted = ((z.0 - d).rem_euclid(M3), z.1);
        let prod = kw_mul_i(shifted, (2, 1));
        debug_assert_eq!(prod.0 % 3, 0);
        debug_assert_eq!(prod.1 % 3, 0);
        z = ((prod.0 / 3).rem_euclid(M3), (prod.1 / 3).rem_euclid(M3));
    }
    out
}

impl RamifiedSpace {
    pub fn new() -> Self {
        // cubes of all units mod 27, recorded by their 5-digit keys
        let mut cube_keys = std::collections::HashSet::new();
        for a in 0..27i64 {
            for b in 0..27i64 {
                if (a * a - a * b + b * b) % 3 == 0 {
                    continue;
                }
                let z = (a, b);
                let z2 = kw_mul_i(z, z);
                let z3 = kw_mul_i(z2, z);
                cube_keys.insert(digit_key(z3));
            }
        }
        // class representatives omega^e1 (1-3w)^e2 (-2-6w)^e3
        let gens: [(i64, i64); 3] = [(0, 1), (1, -3), (-2, -6)];
        let mut class_reps = vec![];
        for e1 in 0..3u8 {
            for e2 in 0..3u8 {
                for e3 in 0..3u8 {
                    let mut z = (1i64, 0i64);
                    for (g, e) in gens.iter().zip([e1, e2, e3]) {
                        for _ in 0..e {
                            z = kw_mul_i(z, (g.0.rem_euclid(M3), g.1.rem_euclid(M3)));
                        }
                    }
                    class_reps.push(([e1, e2, e3], z));
                }
            }
        }
        let s = RamifiedSpace { cube_keys, class_reps };
        debug_assert!(s.distinct_reps());
        s
    }

    fn distinct_reps(&self) -> bool {
        // the 27 exponent classes must land in distinct unit classes
        let mut seen = std::collections::HashSet::new();
        for (_, rep) in &self.class_reps {
            let k = digit_key(*rep);
            if !seen.insert(k) {
                return false;
            }
        }
        true
    }

    pub fn full_dim(&self) -> usize {
        4
    }

    /// Unit class of a unit pair mod 3^8.
    pub fn unit_class(&self, z: (i64, i64)) -> Result<[u8; 3]> {
        let z = (z.0.rem_euclid(M3), z.1.rem_euclid(M3));
        for (cls, rep) in &self.class_reps {
            // z / rep = z * conj(rep) / N(rep)
            let conj = ((rep.0 - rep.1).rem_euclid(M3), (-rep.1).rem_euclid(M3));
            let num = kw_mul_i(z, conj);
            let nr = (rep.0 * rep.0 - rep.0 * rep.1 + rep.1 * rep.1).rem_euclid(M3);
            let ninv = crate::field::inv_mod(nr.rem_euclid(M3) as u64, M3 as u64)
                .ok_or(Error::InsufficientPrecision)? as i64;
            let cand = (
                (num.0 * ninv).rem_euclid(M3),
                (num.1 * ninv).rem_euclid(M3),
            );
            if self.cube_keys.contains(&digit_key(cand)) {
                return Ok(*cls);
            }
        }
        Err(Error::InvariantViolation("ramified unit class not found".into()))
    }

    /// Class from the w-valuation and the unit pair mod 3^8.
    pub fn classify_parts(&self, val: i64, unit: (i64, i64)) -> Result<Vec<u8>> {
        let c = self.unit_class(unit)?;
        Ok(vec![(val.rem_euclid(3)) as u8, c[0], c[1], c[2]])
    }

    /// Exact class of a nonzero Eisenstein integer (or quotient scaled to
    /// one): strips pi = 1 - omega and classifies the unit part.
    pub fn classify_eis(&self, z: &EisensteinInt) -> Result<Vec<u8>> {
        let mut cur = z.clone();
        let three = BigInt::from(3);
        let mut val = 0i64;
        loop {
            let n = cur.norm();
            if (&n % &three).is_zero() {
                // divide by pi: z (2 + omega) / 3
                let prod = cur.mul(&EisensteinInt::new(2, 1));
                cur = EisensteinInt::from_big(&prod.a / &three, &prod.b / &three);
                val += 1;
            } else {
                break;
            }
        }
        let m = BigInt::from(M3);
        let a = cur.a.mod_floor(&m).to_u64_digits().1.first().copied().unwrap_or(0) as i64;
        let b = cur.b.mod_floor(&m).to_u64_digits().1.first().copied().unwrap_or(0) as i64;
        self.classify_parts(val, (a, b))
    }
}

impl Default for RamifiedSpace {
    fn default() -> Self {
        Self::new()
    }
}

/// A split place: classes of K at a chosen prime pi above p = 1 mod 3 are
/// classes of Q_p through the embedding omega -> x_pi (mod p).
#[derive(Clone, Debug)]
pub struct SplitSpace {
    pub p: u64,
    pub pi: EisensteinInt,
    /// the residue of omega mod pi, i.e. the root of t^2 + t + 1 in F_p
    /// that the chosen embedding sends omega to
    pub omega_res: u64,
    pub q: QClassSpace,
}

impl SplitSpace {
    pub fn new(p: u64) -> Self {
        assert_eq!(p % 3, 1);
        let pi = prime_above(p);
        // omega = x mod pi for the root x with pi | (omega - x)
        let mut omega_res = None;
        for x in 2..p {
            if (crate::field::mul_mod(x, x, p) + x + 1) % p == 0 {
                let diff = EisensteinInt::new(-(x as i64), 1);
                if pi.divides(&diff) {
                    omega_res = Some(x);
                    break;
                }
            }
        }
        SplitSpace {
            p,
            pi,
            omega_res: omega_res.expect("omega has a residue mod pi"),
            q: QClassSpace::new(p),
        }
    }

    /// Exact class of a nonzero Eisenstein integer at the place pi.
    pub fn classify_eis(&self, z: &EisensteinInt) -> Vec<u8> {
        let mut cur = z.clone();
        let mut val = 0i64;
        while self.pi.divides(&cur) {
            cur = cur.exact_div(&self.pi).expect("divides");
            val += 1;
        }
        // unit residue: a + b * omega_res mod p
        let p = BigInt::from(self.p);
        let a = cur.a.mod_floor(&p).to_u64_digits().1.first().copied().unwrap_or(0);
        let b = cur.b.mod_floor(&p).to_u64_digits().1.first().copied().unwrap_or(0);
        let res = (a + crate::field::mul_mod(b, self.omega_res, self.p)) % self.p;
        self.q.classify_parts(val, res)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;
    use crate::field::rat_frac;

    #[test]
    fn cube_classes_at_small_places() {
        // 2 at v = 7: cubes mod 7 are {1, 6}; 2 is not one
        let c = local_cube_class(&rat(2), 7).unwrap();
        assert_eq!(c[0], 0);
        assert_ne!(c[1], 0);
        // units at v = 5 (2 mod 3): all cubes
        let c5 = local_cube_class(&rat(4), 5).unwrap();
        assert_eq!(c5, vec![0]);
        // 10 = 1 mod 9 is a cube in Q_3
        let c3 = local_cube_class(&rat(10), 3).unwrap();
        assert_eq!(c3, vec![0, 0]);
        // 3 itself has valuation 1
        assert_eq!(local_cube_class(&rat(3), 3).unwrap()[0], 1);
    }

    #[test]
    fn classes_are_homomorphic() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(29);
        for p in [3u64, 5, 7, 13, 11, 37] {
            let space = QClassSpace::new(p);
            for _ in 0..40 {
                let x = rat_frac(rng.gen_range(1..400), rng.gen_range(1..400));
                let y = rat_frac(rng.gen_range(1..400), rng.gen_range(1..400));
                let cx = space.classify_rat(&x).unwrap();
                let cy = space.classify_rat(&y).unwrap();
                let cxy = space.classify_rat(&(x * y)).unwrap();
                let sum: Vec<u8> = cx.iter().zip(&cy).map(|(a, b)| (a + b) % 3).collect();
                assert_eq!(cxy, sum);
            }
        }
    }

    #[test]
    fn ramified_space_tables() {
        let r = RamifiedSpace::new();
        // omega is the first generator
        assert_eq!(r.classify_eis(&EisensteinInt::omega()).unwrap(), vec![0, 1, 0, 0]);
        // cubes are trivial
        let z = EisensteinInt::new(4, 7);
        let z3 = z.mul(&z).mul(&z);
        let c = r.classify_eis(&z3).unwrap();
        assert_eq!(c.iter().map(|&x| x as u32).sum::<u32>() % 3, c[0] as u32 % 3);
        let cz = r.classify_eis(&z).unwrap();
        let tripled: Vec<u8> = cz.iter().map(|&x| (3 * x) % 3).collect();
        assert_eq!(
            c,
            vec![(3 * (cz[0] as i64)).rem_euclid(3) as u8, tripled[1], tripled[2], tripled[3]]
        );
        // 1 - omega has valuation 1
        assert_eq!(r.classify_eis(&EisensteinInt::new(1, -1)).unwrap()[0], 1);
        // homomorphism on a few products
        let a = EisensteinInt::new(2, 5);
        let b = EisensteinInt::new(-7, 3);
        let ca = r.classify_eis(&a).unwrap();
        let cb = r.classify_eis(&b).unwrap();
        let cab = r.classify_eis(&a.mul(&b)).unwrap();
        let sum: Vec<u8> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % 3).collect();
        assert_eq!(cab, sum);
    }

    #[test]
    fn inert_space_basics() {
        let s = InertSpace::new(2);
        // omega is a unit, nontrivial cube class in F_4
        let c = s.classify_eis(&EisensteinInt::omega());
        assert_eq!(c[0], 0);
        assert_ne!(c[1], 0);
        // 2 itself: valuation 1
        let c2 = s.classify_eis(&EisensteinInt::new(2, 0));
        assert_eq!(c2[0], 1);
        // homomorphism
        let a = EisensteinInt::new(3, 5);
        let b = EisensteinInt::new(1, -4);
        let sum: Vec<u8> = s
            .classify_eis(&a)
            .iter()
            .zip(&s.classify_eis(&b))
            .map(|(x, y)| (x + y) % 3)
            .collect();
        assert_eq!(s.classify_eis(&a.mul(&b)), sum);
    }

    #[test]
    fn split_space_embedding() {
        let s = SplitSpace::new(7);
        // omega embeds to a root of t^2+t+1 mod 7 (2 or 4)
        assert!(s.omega_res == 2 || s.omega_res == 4);
        // pi has valuation 1, conjugate has valuation 0
        assert_eq!(s.classify_eis(&s.pi)[0], 1);
        assert_eq!(s.classify_eis(&s.pi.conj())[0], 0);
        // product formula: pi * conj(pi) = 7 has valuation 1 at this place
        let c7 = s.classify_eis(&EisensteinInt::new(7, 0));
        assert_eq!(c7[0], 1);
    }
}

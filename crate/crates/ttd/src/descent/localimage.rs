//! Local images of the two connecting maps at a place v: enumerate points
//! and quadratic Mumford divisors of both curves over Q_v, push them
//! through the connecting evaluations, and grow F_3 subspaces until the
//! product of the two image orders reaches the local bound
//! (81 for v = 3 or v = 1 mod 3, else 9), which certifies saturation.

use crate::descent::padic::{is_square_in_qp, Padic, Quad};
use crate::error::{Error, Result};
use crate::f3::{self, Span};
use crate::field::{Field, Rat};
use crate::numberfields::localcube::{InertSpace, QClassSpace, RamifiedSpace, SplitSpace};
use crate::poly::Poly;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

/// The sigma-side class space at a place.
pub enum SigmaPlace {
    Split(SplitSpace),
    Inert(InertSpace),
    Ramified(Box<RamifiedSpace>),
}

impl SigmaPlace {
    pub fn new(p: u64) -> Self {
        if p == 3 {
            SigmaPlace::Ramified(Box::new(RamifiedSpace::new()))
        } else if p % 3 == 1 {
            SigmaPlace::Split(SplitSpace::new(p))
        } else {
            SigmaPlace::Inert(InertSpace::new(p))
        }
    }

    /// Dimension of the growth space (full cube-class coordinates).
    pub fn full_dim(&self) -> usize {
        match self {
            SigmaPlace::Split(_) => 2,
            SigmaPlace::Inert(_) => 2,
            SigmaPlace::Ramified(_) => 4,
        }
    }

    /// Dimension of H^1(Q_v, Z/3) (the norm-kernel slice).
    pub fn h1_dim(&self) -> usize {
        match self {
            SigmaPlace::Split(_) => 2,
            SigmaPlace::Inert(_) => 1,
            SigmaPlace::Ramified(_) => 2,
        }
    }

    /// Projects a full-coordinate vector onto H^1 coordinates, checking
    /// norm-kernel membership.
    pub fn project(&self, v: &[u8]) -> Result<Vec<u8>> {
        match self {
            SigmaPlace::Split(_) => Ok(v.to_vec()),
            SigmaPlace::Inert(_) => {
                if v[0] != 0 {
                    return Err(Error::InvariantViolation(
                        "sigma image outside the norm kernel (inert valuation)".into(),
                    ));
                }
                Ok(vec![v[1]])
            }
            SigmaPlace::Ramified(_) => {
                if v[0] != 0 || v[2] != 0 {
                    return Err(Error::InvariantViolation(
                        "sigma image outside the norm kernel at 3".into(),
                    ));
                }
                Ok(vec![v[1], v[3]])
            }
        }
    }
}

/// Classifies a K_w value represented in the sqrt(-3) coordinate form
/// a + b*delta (delta^2 = -3), at a non-split place.
pub fn classify_kw_value(place: &SigmaPlace, z: &Quad) -> Result<Vec<u8>> {
    debug_assert_eq!(z.e, -3);
    match place {
        SigmaPlace::Split(_) => unreachable!("split places carry plain Q_v values"),
        SigmaPlace::Inert(space) => {
            let w = z.val()?;
            // unit part: divide both coordinates by p^w
            let za = shift_padic(&z.a, -w);
            let zb = shift_padic(&z.b, -w);
            // delta = 1 + 2 omega, so a + b delta = (a + b) + 2b omega
            let p = space.p;
            let ra = ((resid(&za, p)? + resid(&zb, p)?) % p + p) % p;
            let rb = (2 * resid(&zb, p)?) % p;
            if ra == 0 && rb == 0 {
                return Err(Error::InsufficientPrecision);
            }
            Ok(space.classify_parts(w, (ra, rb)))
        }
        SigmaPlace::Ramified(space) => {
            let w = z.val()?;
            // convert to omega coordinates as exact integers mod 3^K and
            // strip pi = 1 - omega w times
            let kdig = 24u32;
            let (mut ia, mut ib, shift6) = quad_to_int_pair(z, kdig)?;
            // scaling by 27^m shifted the valuation by 6m = 0 mod 3; strip
            // the true w plus the shift
            let strip = w + shift6;
            let m3 = BigInt::from(3).pow(kdig);
            // omega coords: a + b delta = (a + b) + 2b omega
            let mut oa = (&ia + &ib) % &m3;
            let mut ob = (BigInt::from(2) * &ib) % &m3;
            for _ in 0..strip {
                // multiply by (2 + omega) then divide by 3
                let na = (BigInt::from(2) * &oa - &ob) % &m3;
                let nb = (&oa + &ob) % &m3;
                let (qa, ra2) = num_integer::Integer::div_rem(&na, &BigInt::from(3));
                let (qb, rb2) = num_integer::Integer::div_rem(&nb, &BigInt::from(3));
                if !ra2.is_zero() || !rb2.is_zero() {
                    return Err(Error::InsufficientPrecision);
                }
                oa = qa;
                ob = qb;
            }
            ia = oa;
            ib = ob;
            let m8 = BigInt::from(crate::field::pow_mod(3, 8, u64::MAX >> 1));
            let ua = num_integer::Integer::mod_floor(&ia, &m8)
                .to_i64()
                .ok_or(Error::InsufficientPrecision)?;
            let ub = num_integer::Integer::mod_floor(&ib, &m8)
                .to_i64()
                .ok_or(Error::InsufficientPrecision)?;
            if (ua * ua - ua * ub + ub * ub) % 3 == 0 {
                return Err(Error::InsufficientPrecision);
            }
            space.classify_parts(w, (ua, ub))
        }
    }
}

fn shift_padic(x: &Padic, d: i64) -> Padic {
    if x.zero {
        return x.clone();
    }
    let mut y = x.clone();
    y.val += d;
    y
}

fn resid(x: &Padic, p: u64) -> Result<u64> {
    if x.zero {
        return Ok(0);
    }
    if x.val > 0 {
        return Ok(0);
    }
    if x.val < 0 {
        return Err(Error::InsufficientPrecision);
    }
    Ok(x.unit_mod(1) % p)
}

/// Represents a Quad(-3) value as a pair of exact integers mod 3^k (after
/// multiplying by 27^m to clear denominators); returns the 6m valuation
/// shift in w-units divided by 6 (i.e. m), recorded as -6m to undo.
fn quad_to_int_pair(z: &Quad, k: u32) -> Result<(BigInt, BigInt, i64)> {
    let mut m = 0i64;
    for c in [&z.a, &z.b] {
        if !c.zero && c.val < 0 {
            m = m.max((-c.val + 2) / 3);
        }
    }
    let conv = |x: &Padic| -> Result<BigInt> {
        if x.zero {
            return Ok(BigInt::zero());
        }
        let shifted_val = x.val + 3 * m;
        if shifted_val < 0 {
            return Err(Error::InsufficientPrecision);
        }
        // need at least k digits beyond the valuation
        Ok(BigInt::from(x.unit.clone()) * BigInt::from(3).pow(shifted_val as u32))
    };
    let ia = conv(&z.a)?;
    let ib = conv(&z.b)?;
    let _ = k;
    Ok((ia, ib, 6 * m))
}

/// One curve side of the descent at a place: the sextic, the two
/// connecting cubics, and their normalization constants nu_i (classes of
/// -lambda_i on the rational side, -3 lambda~_i on the K side).
pub struct SideData {
    pub f: Poly<Rat>,
    pub g: [Poly<Rat>; 2],
    /// normalizer arguments: -lambda_i (dual) or -3 lambda~_i (sigma)
    pub nu_arg: [Rat; 2],
    /// all four presentations for torsion seeding: (h, g, lambda)
    pub torsion: Vec<(Poly<Rat>, Poly<Rat>, Rat)>,
    /// true for the sigma side (values acquire a sqrt(-3) factor)
    pub with_sqrt_m3: bool,
}

/// Evaluation of prod over the roots of h of c(x), for h quadratic with
/// rational coefficients: Res(h, c)/lc(h)^deg c.
fn prod_over_roots(h: &Poly<Rat>, c: &Poly<Rat>) -> Result<Rat> {
    if c.is_zero() {
        return Ok(Rat::zero());
    }
    let res = h.resultant(c)?;
    let pow = c.deg() as u32;
    let mut denom = Rat::one();
    for _ in 0..pow {
        denom = denom * h.lc();
    }
    Ok(res / denom)
}

/// Exact torsion images gamma(T_j), j = 1..4, in full local coordinates.
/// Component i of gamma(T_i) is recovered by the mixing identity
/// T_1 = T_3 - T_2, T_2 = T_3 - T_1 (supports of H_3 are disjoint from
/// both), so every entry is an honest resultant evaluation.
pub fn torsion_images<CLS: Fn(&Rat) -> Result<Vec<u8>>>(
    side: &SideData,
    classify: &CLS,
) -> Result<Vec<Vec<u8>>> {
    let factor = if side.with_sqrt_m3 {
        // values come in conjugate pairs over the quadratic roots of h:
        // (sqrt(-3))^2 = -3 per pair
        Rat::from_integer(BigInt::from(-3))
    } else {
        Rat::one()
    };
    let nu = [classify(&side.nu_arg[0])?, classify(&side.nu_arg[1])?];
    // w(j, i): class of f_i evaluated at D_j (requires i != j)
    let w = |j: usize, i: usize| -> Result<Vec<u8>> {
        let (hj, gj, _) = &side.torsion[j];
        let gi = &side.torsion[i].1;
        let val = prod_over_roots(hj, &gj.sub(gi))? * factor.clone();
        if val.is_zero() {
            return Err(Error::SharedSupport);
        }
        let c = classify(&val)?;
        Ok(f3::sub(&c, &nu[i]))
    };
    let mut out = vec![];
    for j in 0..4 {
        let mut comps = vec![];
        for i in 0..2 {
            let v = if i != j {
                w(j, i)?
            } else {
                // T_i = T_3 - T_other
                let other = 1 - i;
                f3::sub(&w(2, i)?, &w(other, i)?)
            };
            comps.push(v);
        }
        out.push([comps[0].clone(), comps[1].clone()].concat());
    }
    // consistency: gamma(T_3) = gamma(T_1) + gamma(T_2),
    // gamma(T_4) = gamma(T_1) - gamma(T_2)
    let t3 = f3::add(&out[0], &out[1]);
    let t4 = f3::sub(&out[0], &out[1]);
    if out[2] != t3 || out[3] != t4 {
        return Err(Error::InvariantViolation(
            "torsion images violate the label relations".into(),
        ));
    }
    Ok(out)
}

/// Rational x-candidates for local point search.
pub fn x_candidates(p: u64, round: u32) -> Vec<Rat> {
    let valr = (4 + 2 * round) as i64;
    let mut budget = 40u64 * 6u64.pow(round);
    budget = budget.min(20_000);
    let mut depth = 1u32;
    while p.checked_pow(depth).map_or(false, |v| v < budget) {
        depth += 1;
    }
    let pd = p.pow(depth).min(budget.max(p));
    let mut out = vec![Rat::zero()];
    for e in -valr..=valr {
        let scale = Rat::from_integer(BigInt::from(p)).pow(e as i32);
        for u in 1..pd {
            if u % p == 0 {
                continue;
            }
            let q = Rat::from_integer(BigInt::from(u)) * scale.clone();
            out.push(q.clone());
            out.push(-q);
        }
    }
    out
}

/// The result of evaluating one connecting coordinate at one divisor:
/// full local class coordinates.
type WVec = Vec<u8>;

pub struct PlaceEngine<'a> {
    pub p: u64,
    pub qspace: QClassSpace,
    pub sigma_space: SigmaPlace,
    pub dual: &'a SideData,
    pub sigma: &'a SideData,
    pub prec: u32,
    /// sqrt(-3) in Z_p for split places
    pub sqrt_m3: Option<Padic>,
}

impl<'a> PlaceEngine<'a> {
    pub fn new(p: u64, dual: &'a SideData, sigma: &'a SideData) -> Result<Self> {
        let qspace = QClassSpace::new(p);
        let sigma_space = SigmaPlace::new(p);
        let prec = 48;
        let sqrt_m3 = if p % 3 == 1 {
            let omega_res = match &sigma_space {
                SigmaPlace::Split(s) => s.omega_res,
                _ => unreachable!(),
            };
            // lift omega from its residue, then sqrt(-3) = 1 + 2 omega
            let om = lift_omega(omega_res, p, prec)?;
            let two = Padic::from_rat(&Rat::from_integer(BigInt::from(2)), p, prec);
            let one = Padic::from_rat(&Rat::one(), p, prec);
            Some(one.add(&two.mul(&om))?)
        } else {
            None
        };
        Ok(PlaceEngine {
            p,
            qspace,
            sigma_space,
            dual,
            sigma,
            prec,
            sqrt_m3,
        })
    }

    /// Classifies an exact rational in the dual-side local group.
    pub fn classify_dual_rat(&self, x: &Rat) -> Result<Vec<u8>> {
        self.qspace.classify_rat(x)
    }

    /// Classifies an exact rational as a K_w value on the sigma side.
    pub fn classify_sigma_rat(&self, x: &Rat) -> Result<Vec<u8>> {
        match &self.sigma_space {
            SigmaPlace::Split(_) => self.qspace.classify_rat(x),
            _ => {
                let z = Quad::from_rats(-3, x, &Rat::zero(), self.p, self.prec);
                classify_kw_value(&self.sigma_space, &z)
            }
        }
    }

    fn nu(&self, side: &SideData, sigma: bool) -> Result<[Vec<u8>; 2]> {
        let cls = |x: &Rat| {
            if sigma {
                self.classify_sigma_rat(x)
            } else {
                self.classify_dual_rat(x)
            }
        };
        Ok([cls(&side.nu_arg[0])?, cls(&side.nu_arg[1])?])
    }

    /// w-vector of a rational point (x, y) on the given side; `None` to
    /// skip (shared support or unresolvable cancellation).
    fn point_wvec(&self, side: &SideData, sigma: bool, x: &Rat, y: &PointY) -> Option<WVec> {
        let mut out = vec![];
        for gi in &side.g {
            let gx = gi.eval(x);
            let cls = match (y, sigma, &self.sigma_space) {
                (PointY::Zero, false, _) => {
                    if gx.is_zero() {
                        return None;
                    }
                    self.classify_dual_rat(&(-gx.clone())).ok()?
                }
                (PointY::Zero, true, SigmaPlace::Split(_)) => {
                    // value = -sqrt(-3) g(x): class of g(x) plus class of
                    // -sqrt(-3); fold via the padic route for uniformity
                    let s3 = self.sqrt_m3.as_ref()?;
                    if gx.is_zero() {
                        return None;
                    }
                    let gp = Padic::from_rat(&gx, self.p, self.prec);
                    let v = gp.mul(s3).neg();
                    self.qspace
                        .classify_parts(v.val, v.unit_mod(unit_digits(self.p, &v)?))
                        .into()
                }
                (PointY::Zero, true, _) => {
                    if gx.is_zero() {
                        return None;
                    }
                    // value = -sqrt(-3) g(x) = 0 - g(x) delta
                    let z = Quad::from_rats(-3, &Rat::zero(), &(-gx.clone()), self.p, self.prec);
                    classify_kw_value(&self.sigma_space, &z).ok()?
                }
                (PointY::Padic(yp), false, _) => {
                    let gp = Padic::from_rat(&gx, self.p, self.prec);
                    let d = yp.sub(&gp).ok()?;
                    self.qspace
                        .classify_parts(d.val, d.unit_mod(unit_digits(self.p, &d)?))
                        .into()
                }
                (PointY::Padic(yp), true, SigmaPlace::Split(_)) => {
                    let s3 = self.sqrt_m3.as_ref()?;
                    let gp = Padic::from_rat(&gx, self.p, self.prec);
                    let d = yp.sub(&gp.mul(s3)).ok()?;
                    self.qspace
                        .classify_parts(d.val, d.unit_mod(unit_digits(self.p, &d)?))
                        .into()
                }
                (PointY::Padic(yp), true, _) => {
                    let z = Quad::new(-3, yp.clone(), Padic::from_rat(&(-gx.clone()), self.p, self.prec));
                    classify_kw_value(&self.sigma_space, &z).ok()?
                }
            };
            out.push(cls);
        }
        Some([out[0].clone(), out[1].clone()].concat())
    }

    /// Enumerates rational points on one side, returning deduplicated
    /// w-vectors.
    pub fn rational_point_wvecs(&self, side: &SideData, sigma: bool, round: u32) -> Vec<WVec> {
        let mut seen = std::collections::HashSet::new();
        let mut out = vec![];
        for x in x_candidates(self.p, round) {
            let fx = side.f.eval(&x);
            let y = if fx.is_zero() {
                PointY::Zero
            } else if is_square_in_qp(&fx, self.p) {
                match Padic::from_rat(&fx, self.p, self.prec).sqrt() {
                    Some(r) => PointY::Padic(r),
                    None => continue,
                }
            } else {
                continue;
            };
            if let Some(w) = self.point_wvec(side, sigma, &x, &y) {
                if seen.insert(w.clone()) {
                    out.push(w);
                }
                // the involuted point carries the conjugate classes
                if let PointY::Padic(r) = &y {
                    if let Some(w2) = self.point_wvec(side, sigma, &x, &PointY::Padic(r.neg())) {
                        if seen.insert(w2.clone()) {
                            out.push(w2);
                        }
                    }
                }
            }
        }
        out
    }

    /// Quadratic extension classes to scan for Mumford divisors, with the
    /// convention that the K_w-point mode (extension = K_w) is handled
    /// separately at non-split places.
    fn ext_classes(&self) -> Vec<i64> {
        let p = self.p as i64;
        if self.p == 2 {
            vec![-1, 3, 2, -2, 6, -6]
        } else if self.p == 3 {
            vec![2, 3]
        } else if self.p % 3 == 1 {
            let u0 = crate::field::nonresidue(self.p) as i64;
            vec![u0, p, (u0 * p) % i64::MAX]
        } else {
            vec![p, -3 * p]
        }
    }

    /// Norm-valued Mumford image vectors from points over Q_p(sqrt(e)).
    pub fn mumford_wvecs(&self, side: &SideData, sigma: bool, round: u32) -> Vec<WVec> {
        let mut seen = std::collections::HashSet::new();
        let mut out = vec![];
        let coef_span = 4 + 2 * round as i64;
        let pow_span = 1 + round as i64;
        for e in self.ext_classes() {
            for (x0, x1) in coefficient_grid(self.p, coef_span, pow_span) {
                if x1.is_zero() {
                    continue;
                }
                let x = Quad::from_rats(e, &x0, &x1, self.p, self.prec);
                let Some(w) = self.mumford_value(side, sigma, e, &x) else {
                    continue;
                };
                if seen.insert(w.clone()) {
                    out.push(w);
                }
            }
        }
        // K_w-point mode at non-split places
        if self.p % 3 != 1 {
            for (x0, x1) in coefficient_grid(self.p, coef_span, pow_span) {
                if x1.is_zero() {
                    continue;
                }
                let x = Quad::from_rats(-3, &x0, &x1, self.p, self.prec);
                let Some(w) = self.kw_pair_value(side, sigma, &x) else {
                    continue;
                };
                if seen.insert(w.clone()) {
                    out.push(w);
                }
            }
        }
        out
    }

    /// Value vector of the conjugate-pair divisor over x in Q_p(sqrt(e)),
    /// e not the K_w class.
    fn mumford_value(&self, side: &SideData, sigma: bool, e: i64, x: &Quad) -> Option<WVec> {
        let fx = eval_poly_quad(&side.f, x).ok()?;
        let y = fx.sqrt().ok()??;
        let mut out = vec![];
        for gi in &side.g {
            let gx = eval_poly_quad(gi, x).ok()?;
            let cls = if !sigma {
                // N_{L/Qv}(y - g(x))
                let d = y.sub(&gx).ok()?;
                let n = d.norm().ok()?;
                if n.zero {
                    return None;
                }
                self.qspace
                    .classify_parts(n.val, n.unit_mod(unit_digits(self.p, &n)?))
            } else {
                match &self.sigma_space {
                    SigmaPlace::Split(_) => {
                        let s3 = self.sqrt_m3.as_ref()?;
                        let sg = Quad {
                            e,
                            a: gx.a.mul(s3),
                            b: gx.b.mul(s3),
                        };
                        let d = y.sub(&sg).ok()?;
                        let n = d.norm().ok()?;
                        if n.zero {
                            return None;
                        }
                        self.qspace
                            .classify_parts(n.val, n.unit_mod(unit_digits(self.p, &n)?))
                    }
                    _ => {
                        // N_{M/K_w}(y - delta_K g(x)) with M = K_w(sqrt(e)):
                        // A = y0 - delta_K g0, B = y1 - delta_K g1,
                        // value = A^2 - e B^2 computed over K_w
                        let aa = Quad::new(-3, y.a.clone(), gx.a.neg());
                        let bb = Quad::new(-3, y.b.clone(), gx.b.neg());
                        let a2 = aa.mul(&aa).ok()?;
                        let b2 = bb.mul(&bb).ok()?;
                        let erat = Rat::from_integer(BigInt::from(e));
                        let eb2 = Quad::from_rats(-3, &Rat::zero(), &Rat::zero(), self.p, self.prec)
                            .add(&b2)
                            .ok()?;
                        let eb2 = Quad {
                            e: -3,
                            a: eb2.a.mul(&Padic::from_rat(&erat, self.p, self.prec)),
                            b: eb2.b.mul(&Padic::from_rat(&erat, self.p, self.prec)),
                        };
                        let val = a2.sub(&eb2).ok()?;
                        classify_kw_value(&self.sigma_space, &val).ok()?
                    }
                }
            };
            out.push(cls);
        }
        Some([out[0].clone(), out[1].clone()].concat())
    }

    /// Conjugate-pair divisor over a K_w-point (non-split places): value
    /// = f(P) f(P-bar) computed inside K_w.
    fn kw_pair_value(&self, side: &SideData, sigma: bool, x: &Quad) -> Option<WVec> {
        let fx = eval_poly_quad(&side.f, x).ok()?;
        let y = fx.sqrt().ok()??;
        let xc = x.conj();
        let yc = y.conj();
        let delta = Quad::from_rats(-3, &Rat::zero(), &Rat::one(), self.p, self.prec);
        let mut out = vec![];
        for gi in &side.g {
            let gx = eval_poly_quad(gi, x).ok()?;
            let gxc = eval_poly_quad(gi, &xc).ok()?;
            let (f1, f2) = if !sigma {
                (y.sub(&gx).ok()?, yc.sub(&gxc).ok()?)
            } else {
                (
                    y.sub(&delta.mul(&gx).ok()?).ok()?,
                    yc.sub(&delta.mul(&gxc).ok()?).ok()?,
                )
            };
            let val = f1.mul(&f2).ok()?;
            let cls = if !sigma {
                // the product is Galois-stable: a rational value
                let n = val.a.clone();
                if !val.b.zero && val.b.val < n.val + 6 {
                    // not visibly rational at this precision
                    return None;
                }
                if n.zero {
                    return None;
                }
                self.qspace
                    .classify_parts(n.val, n.unit_mod(unit_digits(self.p, &n)?))
            } else {
                classify_kw_value(&self.sigma_space, &val).ok()?
            };
            out.push(cls);
        }
        Some([out[0].clone(), out[1].clone()].concat())
    }
}

enum PointY {
    Zero,
    Padic(Padic),
}

fn unit_digits(p: u64, x: &Padic) -> Option<u32> {
    let need = if p == 3 { 2 } else { 1 };
    if x.prec >= need {
        Some(need)
    } else {
        None
    }
}

fn lift_omega(res: u64, p: u64, prec: u32) -> Result<Padic> {
    // Hensel-lift the root of t^2 + t + 1 from its residue
    let m = BigUint::from(p).pow(prec);
    let mut x = BigUint::from(res);
    for _ in 0..prec.ilog2() + 2 {
        // x <- x - f(x)/f'(x) mod p^prec
        let fx = (&x * &x + &x + BigUint::one()) % &m;
        let fpx = (BigUint::from(2u32) * &x + BigUint::one()) % &m;
        let inv = crate::descent::padic::inv_mod_big(&fpx, &m)
            .ok_or(Error::InsufficientPrecision)?;
        let delta = (&fx * &inv) % &m;
        x = (&x + &m - delta) % &m;
    }
    let fx = (&x * &x + &x + BigUint::one()) % &m;
    if !fx.is_zero() {
        return Err(Error::InsufficientPrecision);
    }
    Ok(Padic {
        p,
        val: 0,
        unit: x,
        prec,
        zero: false,
    })
}

fn eval_poly_quad(f: &Poly<Rat>, x: &Quad) -> Result<Quad> {
    let p = x.p();
    let prec = [&x.a, &x.b]
        .iter()
        .filter(|c| !c.zero)
        .map(|c| c.prec)
        .min()
        .unwrap_or(24);
    let mut acc = Quad::from_rats(x.e, &Rat::zero(), &Rat::zero(), p, prec);
    for c in f.coeffs().iter().rev() {
        acc = acc.mul(x)?;
        let cq = Quad::from_rats(x.e, c, &Rat::zero(), p, prec);
        acc = acc.add(&cq)?;
    }
    Ok(acc)
}

fn coefficient_grid(p: u64, coef_span: i64, pow_span: i64) -> Vec<(Rat, Rat)> {
    let mut vals = vec![Rat::zero()];
    for m in -pow_span..=pow_span {
        let scale = Rat::from_integer(BigInt::from(p)).pow(m as i32);
        for c in 1..=coef_span {
            let q = Rat::from_integer(BigInt::from(c)) * scale.clone();
            vals.push(q.clone());
            vals.push(-q);
        }
    }
    let mut out = vec![];
    for a in &vals {
        for b in &vals {
            out.push((a.clone(), b.clone()));
        }
    }
    out
}

/// Local image data for one place and one direction.
#[derive(Clone, Debug)]
pub struct LocalImage {
    pub place: u64,
    /// basis vectors in H^1 coordinates (sigma) or full coordinates (dual)
    pub basis: Vec<Vec<u8>>,
    pub dim: usize,
}

/// The eq.-(6.3) local order bound.
pub fn local_bound(p: u64) -> u64 {
    if p == 3 || p % 3 == 1 {
        81
    } else {
        9
    }
}

/// Grows both directions' images at a place until the product of their
/// orders reaches the local bound. Returns (dual image, sigma image in
/// H^1 coordinates).
pub fn local_images(engine: &PlaceEngine) -> Result<(LocalImage, LocalImage)> {
    let bound = local_bound(engine.p);
    let dual_dim = 2 * engine.qspace.dim;
    let sig_h1 = 2 * engine.sigma_space.h1_dim();
    let mut vdual = Span::new(dual_dim);
    let mut vsig = Span::new(sig_h1);
    let nu_dual = engine.nu(engine.dual, false)?;
    let nu_sig = engine.nu(engine.sigma, true)?;
    let nu_dual_cat = [nu_dual[0].clone(), nu_dual[1].clone()].concat();
    let nu_sig_cat = [nu_sig[0].clone(), nu_sig[1].clone()].concat();

    let project_sigma = |v: &[u8], eng: &PlaceEngine| -> Result<Vec<u8>> {
        let n1 = eng.sigma_space.full_dim();
        let a = eng.sigma_space.project(&v[..n1])?;
        let b = eng.sigma_space.project(&v[n1..])?;
        Ok([a, b].concat())
    };

    // exact torsion seeds: the dual side at every place; the sigma side
    // only where the tilde torsion is rational, i.e. at split places
    let cls_dual = |x: &Rat| engine.classify_dual_rat(x);
    for t in torsion_images(engine.dual, &cls_dual)? {
        vdual.add(&t);
    }
    if matches!(engine.sigma_space, SigmaPlace::Split(_)) {
        let cls_sig = |x: &Rat| engine.classify_sigma_rat(x);
        for t in torsion_images(engine.sigma, &cls_sig)? {
            vsig.add(&project_sigma_vec(&engine.sigma_space, &t)?);
        }
    }

    let saturated = |vd: &Span, vs: &Span| -> bool {
        3u64.pow(vd.dim() as u32) * 3u64.pow(vs.dim() as u32) == bound
    };

    for round in 0..3u32 {
        if saturated(&vdual, &vsig) {
            break;
        }
        // rational points, then Mumford divisors, on both sides
        let wd = engine.rational_point_wvecs(engine.dual, false, round);
        add_pair_combinations(&mut vdual, &wd, &nu_dual_cat, None)?;
        let ws = engine.rational_point_wvecs(engine.sigma, true, round);
        add_pair_combinations(&mut vsig, &ws, &nu_sig_cat, Some((engine, &project_sigma)))?;
        if saturated(&vdual, &vsig) {
            break;
        }
        let wd2 = engine.mumford_wvecs(engine.dual, false, round);
        add_single_divisors(&mut vdual, &wd2, &nu_dual_cat, None)?;
        let ws2 = engine.mumford_wvecs(engine.sigma, true, round);
        add_single_divisors(&mut vsig, &ws2, &nu_sig_cat, Some((engine, &project_sigma)))?;
        if saturated(&vdual, &vsig) {
            break;
        }
    }
    if !saturated(&vdual, &vsig) {
        return Err(Error::InconclusiveLocalImage {
            place: engine.p,
            got: 3u64.pow(vdual.dim() as u32) * 3u64.pow(vsig.dim() as u32),
            bound,
        });
    }
    Ok((
        LocalImage {
            place: engine.p,
            basis: vdual.reduced_basis(),
            dim: vdual.dim(),
        },
        LocalImage {
            place: engine.p,
            basis: vsig.reduced_basis(),
            dim: vsig.dim(),
        },
    ))
}

fn project_sigma_vec(space: &SigmaPlace, v: &[u8]) -> Result<Vec<u8>> {
    let n1 = space.full_dim();
    let a = space.project(&v[..n1])?;
    let b = space.project(&v[n1..])?;
    Ok([a, b].concat())
}

type ProjFn<'e, 'f> = (
    &'e PlaceEngine<'f>,
    &'e dyn Fn(&[u8], &PlaceEngine) -> Result<Vec<u8>>,
);

/// Image vectors of [P + Q - kappa] classes: w(P) + w(Q) - nu.
fn add_pair_combinations(
    span: &mut Span,
    ws: &[WVec],
    nu: &[u8],
    project: Option<ProjFn>,
) -> Result<()> {
    for i in 0..ws.len() {
        for j in i..ws.len() {
            let raw = f3::sub(&f3::add(&ws[i], &ws[j]), nu);
            let vec = match &project {
                Some((eng, f)) => f(&raw, eng)?,
                None => raw,
            };
            span.add(&vec);
        }
        if span.dim() == span.n {
            break;
        }
    }
    Ok(())
}

/// Image vectors of weight-2 Mumford divisors: w(D) - nu.
fn add_single_divisors(
    span: &mut Span,
    ws: &[WVec],
    nu: &[u8],
    project: Option<ProjFn>,
) -> Result<()> {
    for w in ws {
        let raw = f3::sub(w, nu);
        let vec = match &project {
            Some((eng, f)) => f(&raw, eng)?,
            None => raw,
        };
        span.add(&vec);
        if span.dim() == span.n {
            break;
        }
    }
    Ok(())
}

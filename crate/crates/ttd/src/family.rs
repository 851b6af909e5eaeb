//! The three-parameter family of genus-2 curves carrying a labelled
//! maximal isotropic (Z/3)^2 in the Jacobian's 3-torsion.
//!
//! A curve in the family is y^2 = F(x) with four decompositions
//! F = G_i^2 + lambda_i H_i^3 (i = 1..4), one labelled presentation per
//! +/- pair of 3-torsion classes, with T_3 = T_1 + T_2 and T_4 = T_1 - T_2.
//! Construction validates every identity before returning; a
//! [`LevelStructure`] that fails its own identities never escapes.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Poly;

/// A point (r, s, t) of the parameter space.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuliPoint<K: Field> {
    pub r: K,
    pub s: K,
    pub t: K,
}

impl<K: Field> ModuliPoint<K> {
    pub fn new(r: K, s: K, t: K) -> Self {
        ModuliPoint { r, s, t }
    }
}

/// One decomposition F = G^2 + lambda H^3, encoding the +/- pair of the
/// 3-torsion classes supported where H vanishes.
#[derive(Clone, Debug, PartialEq)]
pub struct TorsionPresentation<K: Field> {
    pub g: Poly<K>,
    pub h: Poly<K>,
    pub lambda: K,
    /// Label in 1..=4 following the family's conventions.
    pub label: usize,
}

/// The seven discriminant factors and the isogeny determinant Delta.
#[derive(Clone, Debug, PartialEq)]
pub struct DiscriminantData<K: Field> {
    pub delta: [K; 7],
    pub big_delta: K,
    /// 1-based indices of vanishing deltas (empty at non-degenerate points).
    pub vanishing: Vec<usize>,
}

impl<K: Field> DiscriminantData<K> {
    pub fn is_degenerate(&self) -> bool {
        !self.vanishing.is_empty()
    }
}

/// A member of the family: the sextic, its four labelled presentations,
/// the discriminant data, and a quadratic-twist discriminant (1 for the
/// untwisted curve). The twist is stored unexpanded: the curve is
/// d y^2 = F(x) with the presentations attached to the untwisted F.
#[derive(Clone, Debug, PartialEq)]
pub struct LevelStructure<K: Field> {
    pub point: ModuliPoint<K>,
    pub sextic: Poly<K>,
    pub presentations: [TorsionPresentation<K>; 4],
    pub disc: DiscriminantData<K>,
    pub twist_d: K,
}

/// Evaluates delta_1..delta_7 of the discriminant factorization.
pub fn deltas<K: Field>(p: &ModuliPoint<K>) -> [K; 7] {
    let (r, s, t) = (&p.r, &p.s, &p.t);
    let one = r.one();
    let n = |k: i64| r.from_i64(k);
    let r3 = r.mul(r).mul(r);
    let st = s.mul(t);
    let d1 = s.clone();
    let d2 = t.clone();
    let d3 = st.add(&one);
    // r^3 - 3rt + t^2 + t
    let d4 = r3.sub(&n(3).mul(r).mul(t)).add(&t.mul(t)).add(t);
    // r^3 s - 3rst + st^2 + st + t
    let d5 = r3
        .mul(s)
        .sub(&n(3).mul(r).mul(&st))
        .add(&st.mul(t))
        .add(&st)
        .add(t);
    // r^3 s^2 - 3 r s^2 t - 3 r s + s^2 t^2 + s^2 t + 2 s t + s + 1
    let s2 = s.mul(s);
    let d6 = r3
        .mul(&s2)
        .sub(&n(3).mul(r).mul(&s2).mul(t))
        .sub(&n(3).mul(r).mul(s))
        .add(&s2.mul(t).mul(t))
        .add(&s2.mul(t))
        .add(&n(2).mul(&st))
        .add(s)
        .add(&one);
    // r^3 s^2 t + r^3 s - 3 r s^2 t^2 - 3 r s t + s^2 t^3 + s^2 t^2 + 2 s t^2 + t
    let d7 = r3
        .mul(&s2)
        .mul(t)
        .add(&r3.mul(s))
        .sub(&n(3).mul(r).mul(&s2).mul(t).mul(t))
        .sub(&n(3).mul(r).mul(&st))
        .add(&s2.mul(t).mul(t).mul(t))
        .add(&s2.mul(t).mul(t))
        .add(&n(2).mul(&st).mul(t))
        .add(t);
    [d1, d2, d3, d4, d5, d6, d7]
}

/// Evaluates the isogeny determinant Delta (the degree-(6,2,4) polynomial
/// that also appears as det A in the matrix construction).
pub fn big_delta<K: Field>(p: &ModuliPoint<K>) -> K {
    let (r, s, t) = (&p.r, &p.s, &p.t);
    // Delta as a polynomial in r with coefficients in s, t:
    //   r^6 s^2 - 6 r^4 s^2 t - 3 r^4 s + r^3 (2 s^2 t^2 + 2 s^2 t + 3 s t + s + 1)
    // + r^2 (9 s^2 t^2 + 6 s t) - r (6 s^2 t^3 + 6 s^2 t^2 + 9 s t^2 + 3 s t + 3 t)
    // + s^2 t^4 + 2 s^2 t^3 + s^2 t^2 + 2 s t^3 + 3 s t^2 + t^2 + t
    let n = |k: i64| r.from_i64(k);
    let s2 = s.mul(s);
    let t2 = t.mul(t);
    let t3 = t2.mul(t);
    let t4 = t3.mul(t);
    let c6 = s2.clone();
    let c4 = n(-6).mul(&s2).mul(t).sub(&n(3).mul(s));
    let c3 = n(2)
        .mul(&s2)
        .mul(&t2)
        .add(&n(2).mul(&s2).mul(t))
        .add(&n(3).mul(s).mul(t))
        .add(s)
        .add(&n(1));
    let c2 = n(9).mul(&s2).mul(&t2).add(&n(6).mul(s).mul(t));
    let c1 = n(-6)
        .mul(&s2)
        .mul(&t3)
        .sub(&n(6).mul(&s2).mul(&t2))
        .sub(&n(9).mul(s).mul(&t2))
        .sub(&n(3).mul(s).mul(t))
        .sub(&n(3).mul(t));
    let c0 = s2
        .mul(&t4)
        .add(&n(2).mul(&s2).mul(&t3))
        .add(&s2.mul(&t2))
        .add(&n(2).mul(s).mul(&t3))
        .add(&n(3).mul(s).mul(&t2))
        .add(&t2)
        .add(t);
    let c5 = c4.zero();
    let rp = Poly::new(vec![c0, c1, c2, c3, c4, c5, c6]);
    rp.eval(r)
}

/// Computes the discriminant data at a point, reporting (not throwing)
/// which deltas vanish.
pub fn degeneracy<K: Field>(p: &ModuliPoint<K>) -> DiscriminantData<K> {
    let delta = deltas(p);
    let vanishing = delta
        .iter()
        .enumerate()
        .filter(|(_, d)| d.is_zero())
        .map(|(i, _)| i + 1)
        .collect();
    DiscriminantData {
        big_delta: big_delta(p),
        delta,
        vanishing,
    }
}

/// Division-free family data: the four quadratics, the two integral
/// cubics, and the numerators of G_3 and G_4 (whose denominators are
/// st + 1 and delta_5). Everything here is polynomial in (r, s, t), so it
/// can be evaluated at arbitrary grid points, degenerate ones included.
pub struct RawFamily<K: Field> {
    pub h: [Poly<K>; 4],
    pub g1: Poly<K>,
    pub g2: Poly<K>,
    pub g3_num: Poly<K>,
    pub g4_num: Poly<K>,
    /// F = G_1^2 + 4s H_1^3 (the identity defining the sextic).
    pub f: Poly<K>,
}

/// Evaluates the division-free family polynomials at a point.
pub fn raw_family<K: Field>(p: &ModuliPoint<K>) -> RawFamily<K> {
    let (r, s, t) = (&p.r, &p.s, &p.t);
    let n = |k: i64| r.from_i64(k);
    let one = r.one();
    let st = s.mul(t);
    let r2 = r.mul(r);
    let r3 = r2.mul(r);
    let s2 = s.mul(s);
    let t2 = t.mul(t);
    let t3 = t2.mul(t);

    // H1 = x^2 + r x + t, lambda1 = 4s
    let h1 = Poly::new(vec![t.clone(), r.clone(), one.clone()]);
    let l1 = n(4).mul(s);
    // G1 = (s - st - 1) x^3 + 3s(r-t) x^2 + 3sr(r-t) x - st^2 + sr^3 + t
    let rmt = r.sub(t);
    let g1 = Poly::new(vec![
        s.mul(&t2).neg().add(&s.mul(&r3)).add(t),
        n(3).mul(s).mul(r).mul(&rmt),
        n(3).mul(s).mul(&rmt),
        s.sub(&st).sub(&one),
    ]);

    // H2 = x^2 + x + r, lambda2 = 4st
    let h2 = Poly::new(vec![r.clone(), one.clone(), one.clone()]);
    let l2 = n(4).mul(&st);
    // G2 = G1 + 2x^3... printed: (s - st + 1) x^3 + same middle - st^2 + sr^3 - t
    let g2 = Poly::new(vec![
        s.mul(&t2).neg().add(&s.mul(&r3)).sub(t),
        n(3).mul(s).mul(r).mul(&rmt),
        n(3).mul(s).mul(&rmt),
        s.sub(&st).add(&one),
    ]);

    // H3 = s x^2 + (2sr - st - 1) x + s r^2
    let h3 = Poly::new(vec![
        s.mul(&r2),
        n(2).mul(s).mul(r).sub(&st).sub(&one),
        s.clone(),
    ]);
    // G3 = (numerator)/(st+1)
    let g3num = Poly::new(vec![
        s2.mul(&t3)
            .sub(&s2.mul(t).mul(&r3))
            .add(&n(2).mul(s).mul(&t2))
            .add(&s.mul(&r3))
            .add(t),
        n(3).mul(&s2)
            .mul(&t2)
            .mul(r)
            .sub(&n(3).mul(&s2).mul(t).mul(&r2))
            .add(&n(3).mul(s).mul(t).mul(r))
            .add(&n(3).mul(s).mul(&r2)),
        n(3).mul(&s2)
            .mul(&t2)
            .sub(&n(3).mul(&s2).mul(t).mul(r))
            .add(&n(3).mul(&st))
            .add(&n(3).mul(s).mul(r)),
        s2.mul(&t2)
            .sub(&s2.mul(t))
            .add(&n(2).mul(&st))
            .add(s)
            .add(&one),
    ]);
    // H4, lambda4 = 4st/delta5^2, G4 = (numerator)/delta5
    let h4 = Poly::new(vec![
        // st^2 - str^2 - str + sr^3 + t
        st.mul(t)
            .sub(&st.mul(&r2))
            .sub(&st.mul(r))
            .add(&s.mul(&r3))
            .add(t),
        st.mul(t)
            .sub(&st.mul(r))
            .sub(&st)
            .sub(&s.mul(&r3))
            .add(&n(2).mul(s).mul(&r2))
            .add(t),
        st.mul(r).sub(&st).sub(&s.mul(&r2)).add(&s.mul(r)).add(r),
    ]);
    let s2t = s2.mul(t);
    let g4num = Poly::new(vec![
        // - s^2 t^4 + 3 s^2 t^3 r + s^2 t^3 - 6 s^2 t^2 r^2 + 3 s^2 t r^4 + s^2 t r^3
        // - s^2 r^6 - 2 s t^3 + 3 s t^2 r + s t^2 - 2 s t r^3 - t^2
        s2.mul(&t4_of(&t2))
            .neg()
            .add(&n(3).mul(&s2).mul(&t3).mul(r))
            .add(&s2.mul(&t3))
            .sub(&n(6).mul(&s2).mul(&t2).mul(&r2))
            .add(&n(3).mul(&s2t).mul(&r2).mul(&r2))
            .add(&s2t.mul(&r3))
            .sub(&s2.mul(&r3).mul(&r3))
            .sub(&n(2).mul(s).mul(&t3))
            .add(&n(3).mul(s).mul(&t2).mul(r))
            .add(&s.mul(&t2))
            .sub(&n(2).mul(&st).mul(&r3))
            .sub(&t2),
        // -3 s^2 t^3 r + 6 s^2 t^3 - 9 s^2 t^2 r + 3 s^2 t r^4 + 3 s^2 t r^3
        // + 3 s^2 t r^2 - 3 s^2 r^5 - 3 s t^2 r + 6 s t^2 - 3 s t r^2
        n(-3).mul(&s2)
            .mul(&t3)
            .mul(r)
            .add(&n(6).mul(&s2).mul(&t3))
            .sub(&n(9).mul(&s2).mul(&t2).mul(r))
            .add(&n(3).mul(&s2t).mul(&r2).mul(&r2))
            .add(&n(3).mul(&s2t).mul(&r3))
            .add(&n(3).mul(&s2t).mul(&r2))
            .sub(&n(3).mul(&s2).mul(&r3).mul(&r2))
            .sub(&n(3).mul(s).mul(&t2).mul(r))
            .add(&n(6).mul(s).mul(&t2))
            .sub(&n(3).mul(&st).mul(&r2)),
        // 3 s^2 t^3 - 6 s^2 t^2 r^2 - 3 s^2 t^2 + 9 s^2 t r^3 - 3 s^2 t r^2
        // + 3 s^2 t r - 3 s^2 r^4 + 3 s t^2 - 6 s t r^2 + 3 s t r
        n(3).mul(&s2)
            .mul(&t3)
            .sub(&n(6).mul(&s2).mul(&t2).mul(&r2))
            .sub(&n(3).mul(&s2).mul(&t2))
            .add(&n(9).mul(&s2t).mul(&r3))
            .sub(&n(3).mul(&s2t).mul(&r2))
            .add(&n(3).mul(&s2t).mul(r))
            .sub(&n(3).mul(&s2).mul(&r2).mul(&r2))
            .add(&n(3).mul(s).mul(&t2))
            .sub(&n(6).mul(&st).mul(&r2))
            .add(&n(3).mul(&st).mul(r)),
        // s^2 t^3 - 3 s^2 t^2 r - s^2 t r^3 + 6 s^2 t r^2 - 3 s^2 t r + s^2 t
        // - s^2 r^3 + 2 s t^2 - 3 s t r + 2 s t - s r^3 + t
        s2.mul(&t3)
            .sub(&n(3).mul(&s2).mul(&t2).mul(r))
            .sub(&s2t.mul(&r3))
            .add(&n(6).mul(&s2t).mul(&r2))
            .sub(&n(3).mul(&s2t).mul(r))
            .add(&s2t)
            .sub(&s2.mul(&r3))
            .add(&n(2).mul(s).mul(&t2))
            .sub(&n(3).mul(&st).mul(r))
            .add(&n(2).mul(&st))
            .sub(&s.mul(&r3))
            .add(t),
    ]);
    let f = g1.mul(&g1).add(&h1.pow(3).scale(&l1));
    let _ = l2;
    RawFamily {
        h: [h1, h2, h3, h4],
        g1,
        g2,
        g3_num: g3num,
        g4_num: g4num,
        f,
    }
}

/// The four presentations (H_i, G_i, lambda_i) exactly as printed in the
/// family theorem, including the rational-function denominators of
/// lambda_3, lambda_4, G_3, G_4 (nonzero by the delta check).
fn presentations<K: Field>(
    p: &ModuliPoint<K>,
    d: &DiscriminantData<K>,
) -> Result<[TorsionPresentation<K>; 4]> {
    let raw = raw_family(p);
    let (r, s, t) = (&p.r, &p.s, &p.t);
    let n = |k: i64| r.from_i64(k);
    let st = s.mul(t);
    let l1 = n(4).mul(s);
    let l2 = n(4).mul(&st);
    let d3inv = d.delta[2].inv().ok_or_else(|| Error::Degeneracy(vec![3]))?;
    let d5inv = d.delta[4].inv().ok_or_else(|| Error::Degeneracy(vec![5]))?;
    let l3 = n(4).mul(t).mul(&d3inv).mul(&d3inv);
    let l4 = n(4).mul(&st).mul(&d5inv).mul(&d5inv);
    let g3 = raw.g3_num.scale(&d3inv);
    let g4 = raw.g4_num.scale(&d5inv);
    let [h1, h2, h3, h4] = raw.h;
    Ok([
        TorsionPresentation { g: raw.g1, h: h1, lambda: l1, label: 1 },
        TorsionPresentation { g: raw.g2, h: h2, lambda: l2, label: 2 },
        TorsionPresentation { g: g3, h: h3, lambda: l3, label: 3 },
        TorsionPresentation { g: g4, h: h4, lambda: l4, label: 4 },
    ])
}

fn t4_of<K: Field>(t2: &K) -> K {
    t2.mul(t2)
}

/// Builds the level structure at a non-degenerate point, validating all
/// four identities F = G_i^2 + lambda_i H_i^3 and the discriminant
/// factorization Disc(F) = -2^12 3^6 d1^3 d2^3 d3 d4^3 d5 d6^3 d7^3.
pub fn build_level_structure<K: Field>(p: &ModuliPoint<K>) -> Result<LevelStructure<K>> {
    if let Some(ch) = p.r.characteristic() {
        if ch == 2 || ch == 3 {
            return Err(Error::DegenerateInput("characteristic 2 or 3".into()));
        }
    }
    let disc = degeneracy(p);
    if disc.is_degenerate() {
        return Err(Error::Degeneracy(disc.vanishing.clone()));
    }
    let pres = presentations(p, &disc)?;
    let f = pres[0]
        .g
        .mul(&pres[0].g)
        .add(&pres[0].h.pow(3).scale(&pres[0].lambda));
    for pr in &pres {
        let fi = pr.g.mul(&pr.g).add(&pr.h.pow(3).scale(&pr.lambda));
        if fi != f {
            return Err(Error::InvariantViolation(format!(
                "presentation {} does not recombine to F",
                pr.label
            )));
        }
        if pr.h.degree() != Some(2) {
            return Err(Error::InvariantViolation(format!(
                "H_{} is not quadratic",
                pr.label
            )));
        }
        if pr.lambda.is_zero() {
            return Err(Error::InvariantViolation(format!("lambda_{} = 0", pr.label)));
        }
    }
    // pairwise coprime supports
    for i in 0..4 {
        for j in i + 1..4 {
            let g = pres[i].h.gcd(&pres[j].h);
            if g.degree() != Some(0) {
                return Err(Error::InvariantViolation(format!(
                    "H_{} and H_{} share support",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    // discriminant factorization
    let dd = &disc.delta;
    let mut rhs = p.r.from_i64(-4096); // -2^12
    rhs = rhs.mul(&p.r.from_i64(729)); // 3^6
    let cube = |v: &K| v.mul(v).mul(v);
    rhs = rhs
        .mul(&cube(&dd[0]))
        .mul(&cube(&dd[1]))
        .mul(&dd[2])
        .mul(&cube(&dd[3]))
        .mul(&dd[4])
        .mul(&cube(&dd[5]))
        .mul(&cube(&dd[6]));
    let lhs = f.discriminant()?;
    if lhs != rhs {
        return Err(Error::InvariantViolation(
            "Disc(F) does not match the delta-product formula".into(),
        ));
    }
    Ok(LevelStructure {
        point: p.clone(),
        sextic: f,
        presentations: pres,
        disc,
        twist_d: p.r.one(),
    })
}

impl<K: Field> LevelStructure<K> {
    /// The sextic of the expanded model: twist_d^3 * F(x) when the stored
    /// twist discriminant is nontrivial (the model d y^2 = F rescaled by
    /// y -> y/d to a plain y^2 = d^3... kept as d*F for counting, since
    /// d y^2 = F and y'^2 = d F(x) define isomorphic curves over k).
    pub fn twisted_sextic(&self) -> Poly<K> {
        if self.twist_d.is_one() {
            self.sextic.clone()
        } else {
            self.sextic.scale(&self.twist_d)
        }
    }

    /// Quadratic twist by a nonzero d: the curve d y^2 = F(x) with the
    /// presentations kept attached to the untwisted model. Twisting twice
    /// by the same d returns to the original normal form (d^2 is absorbed
    /// as a square).
    pub fn quadratic_twist(&self, d: &K) -> Result<LevelStructure<K>> {
        if d.is_zero() {
            return Err(Error::DegenerateInput("twist by zero".into()));
        }
        let mut out = self.clone();
        out.twist_d = squarefree_part(&self.twist_d.mul(d));
        Ok(out)
    }
}

/// Strips the largest square rational factor from a twist discriminant.
/// Over a general field this is the identity; callers over Q pass integers
/// whose square part is meaningful.
fn squarefree_part<K: Field>(d: &K) -> K {
    // A field-generic squarefree reduction is not available; normalize only
    // the exact squares we can detect (d = e^2 -> 1, d = -e^2 -> -1).
    if let Some(e) = d.sqrt() {
        return e.one();
    }
    if let Some(e) = d.neg().sqrt() {
        let _ = e;
        return d.one().neg();
    }
    d.clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, rat_frac, Fp, Rat};
    use rand::{Rng, SeedableRng};

    fn qpoint(r: i64, s: i64, t: i64) -> ModuliPoint<Rat> {
        ModuliPoint::new(rat(r), rat(s), rat(t))
    }

    #[test]
    fn deltas_at_example_points() {
        let d = degeneracy(&qpoint(2, -1, -2));
        let want = [-1i64, -2, 3, 22, -24, 32, -74];
        for (i, w) in want.iter().enumerate() {
            assert_eq!(d.delta[i], rat(*w), "delta_{}", i + 1);
        }
        assert_eq!(d.big_delta, rat(706));
        assert!(!d.is_degenerate());

        let d2 = degeneracy(&qpoint(-2, 1, 2));
        assert_eq!(d2.big_delta, rat(166));
        assert!(!d2.is_degenerate());

        let d3 = degeneracy(&qpoint(1, 1, 1));
        assert_eq!(d3.vanishing, vec![4]);
    }

    #[test]
    fn example_curve_reproduction() {
        let ls = build_level_structure(&qpoint(2, -1, -2)).unwrap();
        let want: Vec<Rat> = [68i64, 192, 768, 688, 312, 72, 12].iter().map(|&c| rat(c)).collect();
        assert_eq!(ls.sextic.coeffs(), &want[..]);
        // H1 = x^2 + 2x - 2, lambda1 = -4, G1 = -4x^3 - 12x^2 - 24x - 6
        let p1 = &ls.presentations[0];
        assert_eq!(p1.h.coeffs(), &[rat(-2), rat(2), rat(1)][..]);
        assert_eq!(p1.lambda, rat(-4));
        assert_eq!(p1.g.coeffs(), &[rat(-6), rat(-24), rat(-12), rat(-4)][..]);
    }

    #[test]
    fn degenerate_point_rejected() {
        match build_level_structure(&qpoint(1, 1, 1)) {
            Err(Error::Degeneracy(v)) => assert_eq!(v, vec![4]),
            other => panic!("expected degeneracy error, got {:?}", other),
        }
    }

    #[test]
    fn printed_denominators_of_lambda34() {
        // Over Q the denominators of lambda3, lambda4, G3, G4 are exactly
        // (st+1)^2, delta5^2, (st+1), delta5.
        let p = qpoint(2, -1, -2);
        let ls = build_level_structure(&p).unwrap();
        let d = &ls.disc.delta;
        let l3 = &ls.presentations[2].lambda;
        let l4 = &ls.presentations[3].lambda;
        assert_eq!(l3.clone() * d[2].clone() * d[2].clone(), rat(4) * rat(-2));
        assert_eq!(l4.clone() * d[4].clone() * d[4].clone(), rat(4) * rat(2));
    }

    #[test]
    fn random_points_over_big_prime() {
        let p = 2_147_483_659u64;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut built = 0;
        while built < 50 {
            let pt = ModuliPoint::new(
                Fp::from_u64(rng.gen(), p),
                Fp::from_u64(rng.gen(), p),
                Fp::from_u64(rng.gen(), p),
            );
            match build_level_structure(&pt) {
                Ok(ls) => {
                    built += 1;
                    assert_eq!(ls.sextic.degree(), Some(6));
                }
                Err(Error::Degeneracy(_)) => {}
                Err(e) => panic!("unexpected: {e}"),
            }
        }
    }

    #[test]
    fn twist_roundtrip() {
        let ls = build_level_structure(&qpoint(2, -1, -2)).unwrap();
        let t1 = ls.quadratic_twist(&rat(1)).unwrap();
        assert_eq!(t1, ls);
        let tm3 = ls.quadratic_twist(&rat(-3)).unwrap();
        let back = tm3.quadratic_twist(&rat(-3)).unwrap();
        assert_eq!(back.twist_d, rat(1), "twisting twice by -3 restores the normal form");
        assert!(ls.quadratic_twist(&rat(0)).is_err());
        let _ = rat_frac(1, 2);
    }
}

//! The parameter-space symmetries: the three birational involutions
//! psi_1, psi_2, psi_3 generating an S4 action (identified with the
//! transpositions (12), (34), (13) on the presentation labels), the
//! involution psi_0' commuting with all of them, their point maps
//! theta_1..theta_3, and curve equivalence via Igusa-Clebsch invariants.

use crate::error::{Error, Result};
use crate::family::{big_delta, build_level_structure, deltas, ModuliPoint};
use crate::field::Field;
use crate::igusa::igusa_clebsch;
use crate::poly::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuliMap {
    Psi1,
    Psi2,
    Psi3,
    Psi0Prime,
}

impl ModuliMap {
    pub fn name(&self) -> &'static str {
        match self {
            ModuliMap::Psi1 => "psi1",
            ModuliMap::Psi2 => "psi2",
            ModuliMap::Psi3 => "psi3",
            ModuliMap::Psi0Prime => "psi0prime",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "psi1" => Some(ModuliMap::Psi1),
            "psi2" => Some(ModuliMap::Psi2),
            "psi3" => Some(ModuliMap::Psi3),
            "psi0prime" | "psi0'" => Some(ModuliMap::Psi0Prime),
            _ => None,
        }
    }
}

/// Applies the printed rational map, with indeterminacy errors on
/// vanishing denominators.
pub fn apply_psi<K: Field>(map: ModuliMap, p: &ModuliPoint<K>) -> Result<ModuliPoint<K>> {
    let (r, s, t) = (&p.r, &p.s, &p.t);
    let one = r.one();
    let indet = |name: &str| Error::Indeterminacy(format!("{} [{}]", map.name(), name));
    match map {
        ModuliMap::Psi1 => {
            // (t/r^2, r^3 s/t, t^2/r^3)
            let r2 = r.mul(r);
            let r3 = r2.mul(r);
            if r.is_zero() {
                return Err(indet("r"));
            }
            if t.is_zero() {
                return Err(indet("t"));
            }
            Ok(ModuliPoint::new(
                t.div(&r2).unwrap(),
                r3.mul(s).div(t).unwrap(),
                t.mul(t).div(&r3).unwrap(),
            ))
        }
        ModuliMap::Psi2 => {
            // (r, 1/(s delta4), t)
            let d4 = deltas(p)[3].clone();
            let den = s.mul(&d4);
            let inv = den.inv().ok_or_else(|| indet("s delta4"))?;
            Ok(ModuliPoint::new(r.clone(), inv, t.clone()))
        }
        ModuliMap::Psi3 => {
            // (r, t(st+1)/r^3, r^3 s/(st+1))
            let st1 = s.mul(t).add(&one);
            let r3 = r.mul(r).mul(r);
            if r3.is_zero() {
                return Err(indet("r"));
            }
            if st1.is_zero() {
                return Err(indet("st+1"));
            }
            Ok(ModuliPoint::new(
                r.clone(),
                t.mul(&st1).div(&r3).unwrap(),
                r3.mul(s).div(&st1).unwrap(),
            ))
        }
        ModuliMap::Psi0Prime => {
            // (-(r^2-t)(rs-st-1)(delta5-r)/((r-1)^2 delta7),
            //  (r-1)^3 s delta6 delta7^2 / ((rs-st-1)^3 delta5 Delta),
            //  t (rs-st-1)^3 (delta5-r)^3 / ((r-1)^3 delta6 delta7^2))
            let dd = deltas(p);
            let delta = big_delta(p);
            let q = r.mul(s).sub(&s.mul(t)).sub(&one);
            let rm1 = r.sub(&one);
            let r2mt = r.mul(r).sub(t);
            let d5mr = dd[4].sub(r);
            let rm1_2 = rm1.mul(&rm1);
            let rm1_3 = rm1_2.mul(&rm1);
            let q3 = q.mul(&q).mul(&q);
            let d7sq = dd[6].mul(&dd[6]);
            let den_r = rm1_2.mul(&dd[6]);
            let den_s = q3.mul(&dd[4]).mul(&delta);
            let den_t = rm1_3.mul(&dd[5]).mul(&d7sq);
            for (d, n) in [
                (&den_r, "(r-1)^2 delta7"),
                (&den_s, "(rs-st-1)^3 delta5 Delta"),
                (&den_t, "(r-1)^3 delta6 delta7^2"),
            ] {
                if d.is_zero() {
                    return Err(indet(n));
                }
            }
            let new_r = r2mt
                .neg()
                .mul(&q)
                .mul(&d5mr)
                .mul(&den_r.inv().expect("checked"));
            let new_s = rm1_3
                .mul(s)
                .mul(&dd[5])
                .mul(&d7sq)
                .mul(&den_s.inv().expect("checked"));
            let new_t = t
                .mul(&q3)
                .mul(&d5mr)
                .mul(&d5mr)
                .mul(&d5mr)
                .mul(&den_t.inv().expect("checked"));
            Ok(ModuliPoint::new(new_r, new_s, new_t))
        }
    }
}

/// Point-map data for theta_i: x -> (a x + b)/(c x + d), y -> e y/(c x + d)^3,
/// sending points of C at psi_i(p) to points of C at p.
pub fn theta_coefficients<K: Field>(i: usize, p: &ModuliPoint<K>) -> Result<[K; 5]> {
    let (r, s, t) = (&p.r, &p.s, &p.t);
    let zero = r.zero();
    let one = r.one();
    match i {
        1 => {
            // (t/(rx), t y/x^3); the y-multiplier is normalized against
            // (r x)^3, hence the extra r^3
            if r.is_zero() || t.is_zero() {
                return Err(Error::Indeterminacy("theta1 [r t]".into()));
            }
            let e = t.mul(r).mul(r).mul(r);
            Ok([zero.clone(), t.clone(), r.clone(), zero, e])
        }
        2 => {
            // ((r-t)x + (r^2-t))/((r-1)x + (t-r)), s delta4^2 y/((r-1)x + (t-r))^3
            let d4 = deltas(p)[3].clone();
            Ok([
                r.sub(t),
                r.mul(r).sub(t),
                r.sub(&one),
                t.sub(r),
                s.mul(&d4).mul(&d4),
            ])
        }
        3 => {
            // (-rx/(x+r), r^3 y/(x+r)^3)
            Ok([
                r.neg(),
                zero.clone(),
                one.clone(),
                r.clone(),
                r.mul(r).mul(r),
            ])
        }
        _ => Err(Error::Usage("theta index must be 1, 2 or 3".into())),
    }
}

/// Verifies the substitution identity for a fractional-linear point map
/// (x, y) -> ((a x + b)/(c x + d), e y/(c x + d)^3) carrying y^2 = f_src
/// into d_tgt y^2 = f_tgt: clearing denominators,
/// d_tgt e^2 f_src(x) = sum_i f_tgt[i] (a x + b)^i (c x + d)^(6 - i).
pub fn fractional_substitution_check<K: Field>(
    f_src: &Poly<K>,
    f_tgt: &Poly<K>,
    map: &[K; 5],
    d_tgt: &K,
) -> bool {
    let [a, b, c, d, e] = map;
    let lin1 = Poly::new(vec![b.clone(), a.clone()]);
    let lin2 = Poly::new(vec![d.clone(), c.clone()]);
    let mut rhs = Poly::zero();
    for i in 0..=6 {
        let term = lin1.pow(i as u32).mul(&lin2.pow((6 - i) as u32)).scale(&f_tgt.coeff(i));
        rhs = rhs.add(&term);
    }
    let lhs = f_src.scale(&d_tgt.mul(e).mul(e));
    lhs == rhs
}

/// Polynomial-identity verification that theta_i maps C at psi_i(p) into
/// C at p.
pub fn theta_check<K: Field>(i: usize, p: &ModuliPoint<K>) -> Result<bool> {
    let q = apply_psi(
        match i {
            1 => ModuliMap::Psi1,
            2 => ModuliMap::Psi2,
            3 => ModuliMap::Psi3,
            _ => return Err(Error::Usage("theta index must be 1, 2 or 3".into())),
        },
        p,
    )?;
    let src = build_level_structure(&q)?;
    let tgt = build_level_structure(p)?;
    let map = theta_coefficients(i, p)?;
    Ok(fractional_substitution_check(
        &src.sextic,
        &tgt.sextic,
        &map,
        &p.r.one(),
    ))
}

/// The label permutation induced by theta_i on the quadratics: pullback of
/// each H_j of C_p along theta_i is proportional to some H_k of
/// C_{psi_i(p)}; the observed scalar factors are recorded rather than
/// asserted away.
pub fn theta_label_permutation<K: Field>(i: usize, p: &ModuliPoint<K>) -> Result<(Vec<usize>, Vec<K>)> {
    let q = apply_psi(
        match i {
            1 => ModuliMap::Psi1,
            2 => ModuliMap::Psi2,
            3 => ModuliMap::Psi3,
            _ => return Err(Error::Usage("theta index must be 1, 2 or 3".into())),
        },
        p,
    )?;
    let src = build_level_structure(&q)?;
    let tgt = build_level_structure(p)?;
    let map = theta_coefficients(i, p)?;
    let lin1 = Poly::new(vec![map[1].clone(), map[0].clone()]);
    let lin2 = Poly::new(vec![map[3].clone(), map[2].clone()]);
    let mut perm = vec![0usize; 4];
    let mut scalars = Vec::new();
    for (j, pres) in tgt.presentations.iter().enumerate() {
        // numerator of H_j((a x + b)/(c x + d)) * (c x + d)^2
        let h = &pres.h;
        let pull = lin2
            .pow(2)
            .scale(&h.coeff(0))
            .add(&lin1.mul(&lin2).scale(&h.coeff(1)))
            .add(&lin1.pow(2).scale(&h.coeff(2)));
        let mut found = None;
        for (k, sp) in src.presentations.iter().enumerate() {
            if pull.proportional_to(&sp.h) {
                let scalar = pull.lc().div(&sp.h.lc()).expect("nonzero lc");
                found = Some((k, scalar));
                break;
            }
        }
        let (k, scalar) =
            found.ok_or_else(|| Error::InvariantViolation(format!("H_{} has no partner", j + 1)))?;
        perm[j] = k + 1;
        scalars.push(scalar);
    }
    Ok((perm, scalars))
}

/// Igusa-Clebsch equality of the curves at two parameter points.
pub fn curves_equivalent<K: Field>(p: &ModuliPoint<K>, q: &ModuliPoint<K>) -> Result<bool> {
    let a = build_level_structure(p)?;
    let b = build_level_structure(q)?;
    Ok(igusa_clebsch(&a.sextic)?.equivalent(&igusa_clebsch(&b.sextic)?))
}

/// Report of the sampled group relations.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupRelationsReport {
    pub samples: usize,
    pub involutions_ok: bool,
    pub braid_ok: bool,
    pub commute_12_ok: bool,
    pub psi0prime_involution_ok: bool,
    pub psi0prime_central_ok: bool,
    pub label_permutations: [Vec<usize>; 3],
    pub pass: bool,
}

/// Verifies, on sampled points over a large prime field, the S4 relations
/// psi_i^2 = id, (psi1 psi3)^3 = id, psi1 psi2 = psi2 psi1, that psi0' is
/// a central involution, and the printed label permutations. Compositions
/// hitting indeterminacy loci are resampled.
pub fn group_relations_check(prime: u64, samples: usize, seed: u64) -> Result<GroupRelationsReport> {
    use crate::field::Fp;
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let maps = [ModuliMap::Psi1, ModuliMap::Psi2, ModuliMap::Psi3];
    let mut involutions_ok = true;
    let mut braid_ok = true;
    let mut commute_ok = true;
    let mut p0_inv_ok = true;
    let mut p0_central_ok = true;
    let mut done = 0;
    while done < samples {
        let pt = ModuliPoint::new(
            Fp::from_u64(rng.gen(), prime),
            Fp::from_u64(rng.gen(), prime),
            Fp::from_u64(rng.gen(), prime),
        );
        let run = || -> Result<(bool, bool, bool, bool, bool)> {
            let mut inv = true;
            for m in maps {
                let twice = apply_psi(m, &apply_psi(m, &pt)?)?;
                inv &= twice == pt;
            }
            let mut cur = pt.clone();
            for _ in 0..3 {
                cur = apply_psi(ModuliMap::Psi3, &cur)?;
                cur = apply_psi(ModuliMap::Psi1, &cur)?;
            }
            let braid = cur == pt;
            let ab = apply_psi(ModuliMap::Psi2, &apply_psi(ModuliMap::Psi1, &pt)?)?;
            let ba = apply_psi(ModuliMap::Psi1, &apply_psi(ModuliMap::Psi2, &pt)?)?;
            let comm = ab == ba;
            let p0p = apply_psi(ModuliMap::Psi0Prime, &pt)?;
            let p0inv = apply_psi(ModuliMap::Psi0Prime, &p0p)? == pt;
            let mut central = true;
            for m in maps {
                let lhs = apply_psi(m, &apply_psi(ModuliMap::Psi0Prime, &pt)?)?;
                let rhs = apply_psi(ModuliMap::Psi0Prime, &apply_psi(m, &pt)?)?;
                central &= lhs == rhs;
            }
            Ok((inv, braid, comm, p0inv, central))
        };
        match run() {
            Ok((a, b, c, d, e)) => {
                involutions_ok &= a;
                braid_ok &= b;
                commute_ok &= c;
                p0_inv_ok &= d;
                p0_central_ok &= e;
                done += 1;
            }
            Err(Error::Indeterminacy(_)) | Err(Error::Degeneracy(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    // label permutations at one good rational-style point
    let mut perms: [Vec<usize>; 3] = [vec![], vec![], vec![]];
    let mut found = false;
    for seed2 in 0..200u64 {
        let pt = ModuliPoint::new(
            Fp::from_u64(rng.gen::<u64>().wrapping_add(seed2), prime),
            Fp::from_u64(rng.gen(), prime),
            Fp::from_u64(rng.gen(), prime),
        );
        let mut ok = true;
        let mut got: [Vec<usize>; 3] = [vec![], vec![], vec![]];
        for i in 1..=3 {
            match theta_label_permutation(i, &pt) {
                Ok((perm, _)) => got[i - 1] = perm,
                Err(_) => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            perms = got;
            found = true;
            break;
        }
    }
    if !found {
        return Err(Error::InvariantViolation(
            "no non-degenerate sample for label permutations".into(),
        ));
    }
    let printed = [vec![2, 1, 3, 4], vec![1, 2, 4, 3], vec![3, 2, 1, 4]];
    let perm_ok = perms == printed;
    let pass =
        involutions_ok && braid_ok && commute_ok && p0_inv_ok && p0_central_ok && perm_ok;
    Ok(GroupRelationsReport {
        samples,
        involutions_ok,
        braid_ok,
        commute_12_ok: commute_ok,
        psi0prime_involution_ok: p0_inv_ok,
        psi0prime_central_ok: p0_central_ok,
        label_permutations: perms,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, rat_frac, Rat};

    fn qpoint(r: i64, s: i64, t: i64) -> ModuliPoint<Rat> {
        ModuliPoint::new(rat(r), rat(s), rat(t))
    }

    #[test]
    fn psi_values_at_example_point() {
        let p = qpoint(2, -1, -2);
        let q1 = apply_psi(ModuliMap::Psi1, &p).unwrap();
        assert_eq!(
            (q1.r, q1.s, q1.t),
            (rat_frac(-1, 2), rat(4), rat_frac(1, 2))
        );
        let q2 = apply_psi(ModuliMap::Psi2, &p).unwrap();
        assert_eq!(
            (q2.r, q2.s, q2.t),
            (rat(2), rat_frac(-1, 22), rat(-2))
        );
    }

    #[test]
    fn psi_involutions_over_q() {
        let p = qpoint(2, -1, -2);
        for m in [ModuliMap::Psi1, ModuliMap::Psi2, ModuliMap::Psi3, ModuliMap::Psi0Prime] {
            let twice = apply_psi(m, &apply_psi(m, &p).unwrap()).unwrap();
            assert_eq!(twice, p, "{} twice", m.name());
        }
    }

    #[test]
    fn theta_checks_pass() {
        assert!(theta_check(1, &qpoint(2, -1, -2)).unwrap());
        assert!(theta_check(2, &qpoint(2, -1, -2)).unwrap());
        assert!(theta_check(3, &qpoint(-2, 1, 2)).unwrap());
    }

    #[test]
    fn corrupted_theta_fails() {
        let p = qpoint(2, -1, -2);
        let q = apply_psi(ModuliMap::Psi1, &p).unwrap();
        let src = build_level_structure(&q).unwrap();
        let tgt = build_level_structure(&p).unwrap();
        let mut map = theta_coefficients(1, &p).unwrap();
        map[4] = map[4].neg().sub(&rat(1));
        assert!(!fractional_substitution_check(
            &src.sextic,
            &tgt.sextic,
            &map,
            &rat(1)
        ));
    }

    #[test]
    fn psi_curves_are_equivalent() {
        let p = qpoint(2, -1, -2);
        for m in [ModuliMap::Psi1, ModuliMap::Psi2, ModuliMap::Psi3] {
            let q = apply_psi(m, &p).unwrap();
            assert!(curves_equivalent(&p, &q).unwrap(), "{}", m.name());
        }
    }

    #[test]
    fn group_relations_sampled() {
        let rep = group_relations_check(2_147_483_659, 12, 31).unwrap();
        assert!(rep.pass, "{rep:?}");
        assert_eq!(rep.label_permutations[0], vec![2, 1, 3, 4]);
        assert_eq!(rep.label_permutations[1], vec![1, 2, 4, 3]);
        assert_eq!(rep.label_permutations[2], vec![3, 2, 1, 4]);
    }

    #[test]
    fn psi0_vs_twisted_isogenous_invariants() {
        // C at psi0(p) has the Igusa-Clebsch invariants of the (-3)-twist
        // of the isogenous curve at p (they are equal even untwisted,
        // twisting preserving the weighted class).
        use crate::igusa::igusa_clebsch;
        use crate::isogeny::{build_isogenous, psi0};
        let p = qpoint(2, -1, -2);
        let q = psi0(&p).unwrap();
        let at_q = build_level_structure(&q).unwrap();
        let iso = build_isogenous(&build_level_structure(&p).unwrap()).unwrap();
        let twisted = iso.sextic.scale(&rat(-3));
        assert!(igusa_clebsch(&at_q.sextic)
            .unwrap()
            .equivalent(&igusa_clebsch(&twisted).unwrap()));
    }
}

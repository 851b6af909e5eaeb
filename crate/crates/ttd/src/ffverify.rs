//! Finite-field consistency engine: naive point counts over F_p and
//! F_{p^2}, Jacobian orders through the zeta-function relation
//! #J = (N1^2 + N2)/2 - p, isogeny invariance of local orders, and the
//! grid certifier that proves (r, s, t)-polynomial identities by
//! evaluating them on grids exceeding their per-variable degree bounds.

use crate::error::{Error, Result};
use crate::family::{build_level_structure, deltas, raw_family, ModuliPoint};
use crate::field::{nonresidue, Field, Fp, Fp2, Rat};
use crate::isogeny::build_isogenous;
use crate::matrix::Mat;
use crate::poly::{det_bareiss, Poly};
use rayon::prelude::*;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountData {
    pub p: u64,
    pub n1: u64,
    pub n2: u64,
    pub j_order: u64,
}

/// Counts points of y^2 = F(x) over F_p and F_{p^2}, including the points
/// at infinity (2, 1 or 0 over F_p according as lc is a nonzero square,
/// the degree drops to 5, or lc is a non-square; always 2 over F_{p^2}
/// for degree 6, since every F_p scalar is a square there).
pub fn count_sextic(f: &Poly<Fp>, p: u64) -> Result<CountData> {
    let d = f.degree().ok_or_else(|| Error::DegenerateInput("zero sextic".into()))?;
    if d < 5 {
        return Err(Error::DegenerateInput("degree must be 5 or 6".into()));
    }
    let mut n1: u64 = 0;
    for x in 0..p {
        let v = f.eval(&Fp::from_u64(x, p));
        n1 += (1 + v.legendre()) as u64;
    }
    n1 += match (d, f.lc().legendre()) {
        (6, 1) => 2,
        (6, -1) => 0,
        (5, _) => 1,
        _ => unreachable!(),
    };
    let nr = nonresidue(p);
    let f2 = f
        .map(|c| Some(Fp2::from_fp(*c, nr)))
        .expect("总 map is total");
    let mut n2: u64 = 0;
    for a in 0..p {
        for b in 0..p {
            let v = f2.eval(&Fp2::new(a, b, p, nr));
            if v.is_zero() {
                n2 += 1;
            } else if v.is_square() {
                n2 += 2;
            }
        }
    }
    n2 += if d == 6 { 2 } else { 1 };
    let j = (n1 as i128 * n1 as i128 + n2 as i128) / 2 - p as i128;
    // Hasse-Weil windows
    let a1 = (p as i128 + 1) - n1 as i128;
    if a1 * a1 > 16 * p as i128 {
        return Err(Error::InvariantViolation("N1 outside the Hasse-Weil window".into()));
    }
    let (lo, hi) = jacobian_order_window(p);
    if j < lo as i128 || j > hi as i128 {
        return Err(Error::InvariantViolation("#J outside the Hasse-Weil window".into()));
    }
    Ok(CountData {
        p,
        n1,
        n2,
        j_order: j as u64,
    })
}

/// [(sqrt p - 1)^4, (sqrt p + 1)^4] with exact integer bounds.
pub fn jacobian_order_window(p: u64) -> (u64, u64) {
    let s = (p as f64).sqrt();
    let lo = (s - 1.0).max(0.0).powi(4).floor() as u64;
    let hi = (s + 1.0).powi(4).ceil() as u64;
    (lo, hi)
}

/// Reduces an exact rational sextic mod p, requiring the denominators to
/// be prime to p and the degree to stay at 6.
fn reduce_sextic(f: &Poly<Rat>, p: u64) -> Result<Poly<Fp>> {
    let fp = f
        .map(|c| Fp::from_rat(c, p))
        .ok_or(Error::BadReduction(p))?;
    if fp.degree() != Some(6) {
        return Err(Error::BadReduction(p));
    }
    Ok(fp)
}

/// Good-reduction test for a family curve at p: p > 3, every delta is a
/// p-adic unit, and the leading data stays nonzero mod p.
pub fn good_reduction(point: &ModuliPoint<Rat>, p: u64) -> Result<()> {
    if p <= 3 {
        return Err(Error::BadReduction(p));
    }
    for d in deltas(point) {
        match Fp::from_rat(&d, p) {
            Some(v) if !v.is_zero() => {}
            _ => return Err(Error::BadReduction(p)),
        }
    }
    let ls = build_level_structure(point)?;
    reduce_sextic(&ls.sextic, p).map(|_| ())
}

/// Counts the family curve (or its isogenous partner) at a good prime.
pub fn count(point: &ModuliPoint<Rat>, p: u64, tilde: bool) -> Result<CountData> {
    good_reduction(point, p)?;
    let ls = build_level_structure(point)?;
    let f = if tilde {
        // The isogenous model may drop to degree 5 mod p (p | lc) while
        // the curve keeps good reduction; only degree < 5 or a repeated
        // root is genuinely bad.
        let iso = build_isogenous(&ls)?;
        let fp = iso
            .sextic
            .map(|c| Fp::from_rat(c, p))
            .ok_or(Error::BadReduction(p))?;
        match fp.degree() {
            Some(5) | Some(6) if !fp.discriminant()?.is_zero() => {}
            _ => return Err(Error::BadReduction(p)),
        }
        fp
    } else {
        reduce_sextic(&ls.sextic, p)?
    };
    count_sextic(&f, p)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderCheck {
    pub p: u64,
    pub order: u64,
    pub order_tilde: u64,
    pub nine_divides: bool,
    pub nine_divides_tilde: Option<bool>,
    pub pass: bool,
}

/// Isogenous Jacobians have equal orders over every good F_p; the
/// rational (Z/3)^2 forces 9 | #J, and 9 | #J~ whenever p = 1 mod 3.
pub fn isogeny_order_check(point: &ModuliPoint<Rat>, p: u64) -> Result<OrderCheck> {
    let c = count(point, p, false)?;
    let ct = count(point, p, true)?;
    let nine = c.j_order % 9 == 0;
    let nine_tilde = if p % 3 == 1 {
        Some(ct.j_order % 9 == 0)
    } else {
        None
    };
    let pass = c.j_order == ct.j_order && nine && nine_tilde.unwrap_or(true);
    Ok(OrderCheck {
        p,
        order: c.j_order,
        order_tilde: ct.j_order,
        nine_divides: nine,
        nine_divides_tilde: nine_tilde,
        pass,
    })
}

/// Scans upward from 5 for primes of good reduction for both curves.
pub fn good_primes(point: &ModuliPoint<Rat>, below: u64, want: usize) -> Vec<u64> {
    let mut out = vec![];
    let mut p = 5;
    while p < below && out.len() < want {
        if crate::field::is_prime_u64(p)
            && good_reduction(point, p).is_ok()
            && count(point, p, true).is_ok()
        {
            out.push(p);
        }
        p += 2;
    }
    out
}

/// A certifiable identity: per-variable degree bounds in (r, s, t) plus an
/// evaluator returning whether the identity holds at a specialization.
/// Identities marked `interpolation` are polynomial and defined at every
/// point, so a full-grid pass certifies them identically by the standard
/// interpolation argument; pointwise identities (the square-root
/// extraction chain) skip degenerate points and certify only the sampled
/// locus.
pub struct GridIdentity {
    pub id: &'static str,
    pub bounds: [usize; 3],
    pub interpolation: bool,
    eval: fn(&ModuliPoint<Fp>) -> Option<bool>,
}

/// The formal Sylvester determinant of (F, F') with F treated as a formal
/// sextic, as a function of the seven coefficients. Equals Res(F, F')
/// whenever deg F = 6.
fn formal_res_f_fprime(f: &Poly<Fp>) -> Fp {
    let zero = Fp { v: 0, p: f.sample().p };
    let one = Fp { v: 1, p: zero.p };
    let fc: Vec<Fp> = (0..=6).map(|i| f.coeff(i)).collect();
    let dc: Vec<Fp> = (1..=6)
        .map(|i| fc[i].mul(&Fp::from_u64(i as u64, zero.p)))
        .collect();
    let size = 11;
    let mut m = vec![vec![zero; size]; size];
    for row in 0..5 {
        for k in 0..=6 {
            m[row][row + k] = fc[6 - k];
        }
    }
    for row in 0..6 {
        for k in 0..=5 {
            m[5 + row][row + k] = dc[5 - k];
        }
    }
    det_bareiss(m, &zero, &one)
}

fn eval_family_identities(pt: &ModuliPoint<Fp>) -> Option<bool> {
    let raw = raw_family(pt);
    let (s, t) = (&pt.s, &pt.t);
    let four = pt.r.from_i64(4);
    let d = deltas(pt);
    let f = &raw.f;
    // i = 2: F = G2^2 + 4st H2^3
    let id2 = raw
        .g2
        .mul(&raw.g2)
        .add(&raw.h[1].pow(3).scale(&four.mul(s).mul(t)));
    if id2 != *f {
        return Some(false);
    }
    // i = 3 cleared: (st+1)^2 F = g3num^2 + 4t H3^3
    let d3sq = d[2].mul(&d[2]);
    let lhs3 = f.scale(&d3sq);
    let rhs3 = raw
        .g3_num
        .mul(&raw.g3_num)
        .add(&raw.h[2].pow(3).scale(&four.mul(t)));
    if lhs3 != rhs3 {
        return Some(false);
    }
    // i = 4 cleared: delta5^2 F = g4num^2 + 4st H4^3
    let d5sq = d[4].mul(&d[4]);
    let lhs4 = f.scale(&d5sq);
    let rhs4 = raw
        .g4_num
        .mul(&raw.g4_num)
        .add(&raw.h[3].pow(3).scale(&four.mul(s).mul(t)));
    Some(lhs4 == rhs4)
}

fn eval_disc_factorization(pt: &ModuliPoint<Fp>) -> Option<bool> {
    let raw = raw_family(pt);
    let d = deltas(pt);
    // Res(F, F') = -lc(F) Disc(F) for formal degree 6; certify
    // Syl(F, F') + lc * (-2^12 3^6 prod delta^e) = 0.
    let syl = formal_res_f_fprime(&raw.f);
    let lc = raw.f.coeff(6);
    let cube = |v: &Fp| v.mul(v).mul(v);
    let mut rhs = pt.r.from_i64(-4096).mul(&pt.r.from_i64(729));
    rhs = rhs
        .mul(&cube(&d[0]))
        .mul(&cube(&d[1]))
        .mul(&d[2])
        .mul(&cube(&d[3]))
        .mul(&d[4])
        .mul(&cube(&d[5]))
        .mul(&cube(&d[6]));
    Some(syl.add(&lc.mul(&rhs)).is_zero())
}

fn family_matrix(pt: &ModuliPoint<Fp>) -> Mat<Fp> {
    let raw = raw_family(pt);
    let d = deltas(pt);
    let half = pt.r.from_i64(2).inv().expect("p > 2");
    let neg_half = half.neg();
    let rows = vec![
        raw.h.iter().map(|h| h.coeff(2)).collect::<Vec<_>>(),
        raw.h.iter().map(|h| h.coeff(1)).collect(),
        raw.h.iter().map(|h| h.coeff(0)).collect(),
        vec![
            pt.r.mul(&neg_half),
            neg_half,
            d[2].mul(&neg_half),
            d[4].mul(&neg_half),
        ],
    ];
    Mat::from_rows(rows)
}

fn eval_det_a(pt: &ModuliPoint<Fp>) -> Option<bool> {
    let a = family_matrix(pt);
    Some(a.det() == crate::family::big_delta(pt))
}

fn eval_a_adj(pt: &ModuliPoint<Fp>) -> Option<bool> {
    let a = family_matrix(pt);
    let adj = a.cofactor_matrix().transpose();
    Some(a.mul(&adj).is_scalar(&crate::family::big_delta(pt)))
}

fn eval_magic(pt: &ModuliPoint<Fp>) -> Option<bool> {
    let a = family_matrix(pt);
    let m = a.cofactor_matrix();
    let raw = raw_family(pt);
    let delta = crate::family::big_delta(pt);
    let two = pt.r.from_i64(2);
    // H~_k = M_3k x^2 - 2 M_2k x + M_1k; stored lowest degree first
    let ht: Vec<[Fp; 3]> = (0..4)
        .map(|k| {
            [
                m.at(0, k).clone(),
                m.at(1, k).mul(&two).neg(),
                m.at(2, k).clone(),
            ]
        })
        .collect();
    let zero = pt.r.zero();
    let mut grid = [[zero; 3]; 3];
    for k in 0..4 {
        for i in 0..3 {
            for (j, cell) in grid[i].iter_mut().enumerate().take(3) {
                *cell = cell.add(&raw.h[k].coeff(i).mul(&ht[k][j]));
            }
        }
    }
    grid[2][0] = grid[2][0].sub(&delta);
    grid[1][1] = grid[1][1].add(&delta.add(&delta));
    grid[0][2] = grid[0][2].sub(&delta);
    Some(grid.iter().all(|r| r.iter().all(|c| c.is_zero())))
}

fn eval_iso_squares(pt: &ModuliPoint<Fp>) -> Option<bool> {
    match build_level_structure(pt) {
        Ok(ls) => match build_isogenous(&ls) {
            Ok(_) => Some(true),
            Err(Error::DegenerateInput(_)) => None,
            Err(_) => Some(false),
        },
        Err(Error::Degeneracy(_)) | Err(Error::DegenerateInput(_)) => None,
        Err(_) => Some(false),
    }
}

/// Degree bounds, documented per identity:
///
/// F has per-variable degrees at most (6, 2, 4) in (r, s, t) (G_1 carries
/// s r^3 and s t^2, squared; 4s H_1^3 stays below that). The cleared
/// identities multiply by (st+1)^2 or delta_5^2, so
/// family-identities <= (12, 4, 8). The Sylvester determinant of (F, F')
/// is an 11x11 determinant with five F-rows and six F'-rows, each entry
/// bounded by F's degrees, so disc-factorization <= (66, 22, 44) against
/// the right side's (30, 19, 29). The matrix A has entries bounded by
/// (3, 1, 2), its cofactors by (9, 3, 6), so det A, A adj A and the
/// bilinear identity are bounded by (12, 4, 8).
pub fn registry() -> Vec<GridIdentity> {
    vec![
        GridIdentity {
            id: "family-identities",
            bounds: [12, 4, 8],
            interpolation: true,
            eval: eval_family_identities,
        },
        GridIdentity {
            id: "disc-factorization",
            bounds: [66, 22, 44],
            interpolation: true,
            eval: eval_disc_factorization,
        },
        GridIdentity {
            id: "det-a",
            bounds: [12, 4, 8],
            interpolation: true,
            eval: eval_det_a,
        },
        GridIdentity {
            id: "a-adj",
            bounds: [12, 4, 8],
            interpolation: true,
            eval: eval_a_adj,
        },
        GridIdentity {
            id: "magic",
            bounds: [12, 4, 8],
            interpolation: true,
            eval: eval_magic,
        },
        GridIdentity {
            id: "iso-squares",
            bounds: [12, 4, 8],
            interpolation: false,
            eval: eval_iso_squares,
        },
    ]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridReport {
    pub id: String,
    pub prime: u64,
    pub dims: [usize; 3],
    pub points: u64,
    pub skipped: u64,
    pub interpolation_certificate: bool,
    pub pass: bool,
}

/// Evaluates a registered identity on a full product grid mod `prime`.
/// The grid must strictly exceed the identity's per-variable degree
/// bounds; a pass on an interpolation-grade identity certifies it as a
/// polynomial identity over F_prime.
pub fn grid_certify(id: &str, prime: u64, dims: [usize; 3]) -> Result<GridReport> {
    let reg = registry();
    let ident = reg
        .iter()
        .find(|g| g.id == id)
        .ok_or_else(|| Error::Usage(format!("unknown identity {id:?}")))?;
    if dims[0] <= ident.bounds[0] || dims[1] <= ident.bounds[1] || dims[2] <= ident.bounds[2] {
        return Err(Error::BoundViolation {
            need: ident.bounds,
            got: dims,
        });
    }
    let eval = ident.eval;
    let results: Vec<(u64, u64, bool)> = (1..=dims[0] as u64)
        .into_par_iter()
        .map(|r| {
            let mut pts = 0u64;
            let mut skipped = 0u64;
            let mut ok = true;
            for s in 1..=dims[1] as u64 {
                for t in 1..=dims[2] as u64 {
                    let pt = ModuliPoint::new(
                        Fp::from_u64(r, prime),
                        Fp::from_u64(s, prime),
                        Fp::from_u64(t, prime),
                    );
                    match eval(&pt) {
                        Some(true) => pts += 1,
                        Some(false) => {
                            ok = false;
                            pts += 1;
                        }
                        None => skipped += 1,
                    }
                }
            }
            (pts, skipped, ok)
        })
        .collect();
    let points = results.iter().map(|r| r.0).sum();
    let skipped = results.iter().map(|r| r.1).sum();
    let pass = results.iter().all(|r| r.2);
    Ok(GridReport {
        id: id.to_string(),
        prime,
        dims,
        points,
        skipped,
        interpolation_certificate: ident.interpolation && pass && skipped == 0,
        pass,
    })
}

/// Convenience: smallest adequate grid (bounds + 1).
pub fn minimal_dims(id: &str) -> Option<[usize; 3]> {
    registry()
        .iter()
        .find(|g| g.id == id)
        .map(|g| [g.bounds[0] + 1, g.bounds[1] + 1, g.bounds[2] + 1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    fn qpoint(r: i64, s: i64, t: i64) -> ModuliPoint<Rat> {
        ModuliPoint::new(rat(r), rat(s), rat(t))
    }

    #[test]
    fn brute_count_x6_plus_1_over_f5() {
        let f = Poly::from_i64(&Fp::new(1, 5), &[1, 0, 0, 0, 0, 0, 1]);
        let c = count_sextic(&f, 5).unwrap();
        // x = 0: y^2 = 1 -> 2; x=1: 2 -> 2*chi.. direct: F(0)=1 sq, F(1)=2 ns,
        // F(2)=65=0 mod 5 -> 1, F(3)=730=0 mod 5 -> 1, F(4)=4097=2 ns
        // affine = 2 + 0 + 1 + 1 + 0 = 4; lc = 1 square -> +2
        assert_eq!(c.n1, 6);
        let (lo, hi) = jacobian_order_window(5);
        assert!(c.j_order >= lo && c.j_order <= hi);
    }

    #[test]
    fn family_curve_mod_13_has_nine_torsion() {
        let c = count(&qpoint(2, -1, -2), 13, false).unwrap();
        assert_eq!(c.j_order % 9, 0, "rational (Z/3)^2 forces 9 | #J");
    }

    #[test]
    fn bad_reduction_at_11() {
        // 11 | delta4 = 22
        assert_eq!(
            count(&qpoint(2, -1, -2), 11, false),
            Err(Error::BadReduction(11))
        );
    }

    #[test]
    fn isogeny_order_invariance_small() {
        let chk = isogeny_order_check(&qpoint(2, -1, -2), 13).unwrap();
        assert!(chk.pass, "{chk:?}");
        assert_eq!(chk.order, chk.order_tilde);
        // a good prime congruent to 2 mod 3 still has 9 | #J
        let p2 = good_primes(&qpoint(2, -1, -2), 60, 6)
            .into_iter()
            .find(|p| p % 3 == 2)
            .unwrap();
        let chk2 = isogeny_order_check(&qpoint(2, -1, -2), p2).unwrap();
        assert!(chk2.pass && chk2.nine_divides);
    }

    #[test]
    fn grid_bound_violation() {
        match grid_certify("magic", 2_147_483_659, [5, 5, 5]) {
            Err(Error::BoundViolation { .. }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn small_grids_pass() {
        let p = 2_147_483_659;
        for id in ["family-identities", "det-a", "a-adj", "magic"] {
            let dims = minimal_dims(id).unwrap();
            let rep = grid_certify(id, p, dims).unwrap();
            assert!(rep.pass, "{id}");
            assert!(rep.interpolation_certificate, "{id}");
        }
    }

    #[test]
    fn falsified_identity_fails() {
        // evaluating det-a against a wrong Delta must fail somewhere:
        // simulate by checking the evaluator on a point against Delta + 1
        let p = 2_147_483_659;
        let pt = ModuliPoint::new(Fp::new(2, p), Fp::new(5, p), Fp::new(7, p));
        let a = family_matrix(&pt);
        let wrong = crate::family::big_delta(&pt).add(&Fp::new(1, p));
        assert_ne!(a.det(), wrong);
    }
}

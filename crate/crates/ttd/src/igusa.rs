//! Igusa-Clebsch invariants (I2 : I4 : I6 : I10) of a binary sextic,
//! computed through the classical Clebsch transvectants A, B, C, D.
//!
//! Used as the curve-equivalence oracle: two smooth sextics define
//! geometrically isomorphic genus-2 curves iff their tuples agree under
//! the weighted-projective weights (2, 4, 6, 10). With I10 != 0 that is
//! equivalent to equality of the absolute invariants
//! (I2^5/I10, I4^5/I10^2, I6^5/I10^3), which is how `equivalent` decides.
//!
//! Requires characteristic 0 or p > 5 (the transvectant prefactors have
//! denominators dividing 6!^2).

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Poly;

/// A binary form of fixed order n: sum c_i x^i z^(n-i), coefficients
/// lowest x-degree first, length n + 1 (trailing zeros kept).
#[derive(Clone, Debug, PartialEq)]
struct BinForm<K: Field> {
    n: usize,
    c: Vec<K>,
}

impl<K: Field> BinForm<K> {
    fn from_poly(f: &Poly<K>, n: usize) -> Self {
        let zero = f.sample().zero();
        let mut c = vec![zero; n + 1];
        for (i, v) in f.coeffs().iter().enumerate() {
            c[i] = v.clone();
        }
        BinForm { n, c }
    }

    fn dx(&self) -> Self {
        // d/dx: c'[i-1] = i c[i]
        let zero = self.c[0].zero();
        let mut c = vec![zero; self.n];
        for i in 1..=self.n {
            c[i - 1] = self.c[i].mul(&self.c[i].from_i64(i as i64));
        }
        BinForm { n: self.n - 1, c }
    }

    fn dz(&self) -> Self {
        // d/dz: c'[i] = (n - i) c[i]
        let zero = self.c[0].zero();
        let mut c = vec![zero; self.n];
        for i in 0..self.n {
            c[i] = self.c[i].mul(&self.c[i].from_i64((self.n - i) as i64));
        }
        BinForm { n: self.n - 1, c }
    }

    fn deriv(&self, a: usize, b: usize) -> Self {
        let mut f = self.clone();
        for _ in 0..a {
            f = f.dx();
        }
        for _ in 0..b {
            f = f.dz();
        }
        f
    }

    fn mul(&self, rhs: &Self) -> Self {
        let zero = self.c[0].zero();
        let n = self.n + rhs.n;
        let mut c = vec![zero; n + 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in rhs.c.iter().enumerate() {
                c[i + j] = c[i + j].add(&a.mul(b));
            }
        }
        BinForm { n, c }
    }

    fn add_scaled(&mut self, rhs: &Self, s: &K) {
        debug_assert_eq!(self.n, rhs.n);
        for (a, b) in self.c.iter_mut().zip(&rhs.c) {
            *a = a.add(&b.mul(s));
        }
    }
}

fn factorial(k: usize) -> i64 {
    (1..=k as i64).product::<i64>().max(1)
}

fn binom(n: usize, k: usize) -> i64 {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// r-th transvectant of binary forms of orders m and n.
fn transvectant<K: Field>(f: &BinForm<K>, g: &BinForm<K>, r: usize) -> Result<BinForm<K>> {
    let (m, n) = (f.n, g.n);
    let sample = &f.c[0];
    let denom = sample.from_i64(factorial(m)).mul(&sample.from_i64(factorial(n)));
    let pref = sample
        .from_i64(factorial(m - r))
        .mul(&sample.from_i64(factorial(n - r)))
        .div(&denom)
        .ok_or_else(|| Error::DegenerateInput("transvectants need char 0 or p > 5".into()))?;
    let zero = sample.zero();
    let mut acc = BinForm {
        n: m + n - 2 * r,
        c: vec![zero; m + n - 2 * r + 1],
    };
    for k in 0..=r {
        let term = f.deriv(r - k, k).mul(&g.deriv(k, r - k));
        let sign = if k % 2 == 1 { -binom(r, k) } else { binom(r, k) };
        acc.add_scaled(&term, &sample.from_i64(sign));
    }
    for c in acc.c.iter_mut() {
        *c = c.mul(&pref);
    }
    Ok(acc)
}

/// The weighted-projective invariant tuple.
#[derive(Clone, Debug, PartialEq)]
pub struct IgusaClebsch<K: Field> {
    pub i2: K,
    pub i4: K,
    pub i6: K,
    pub i10: K,
}

/// Computes (I2 : I4 : I6 : I10) of a squarefree sextic (degree 5 or 6).
pub fn igusa_clebsch<K: Field>(f: &Poly<K>) -> Result<IgusaClebsch<K>> {
    match f.degree() {
        Some(5) | Some(6) => {}
        _ => {
            return Err(Error::DegenerateInput(
                "Igusa-Clebsch invariants need a quintic or sextic".into(),
            ))
        }
    }
    let disc = f.discriminant()?;
    if disc.is_zero() {
        return Err(Error::DegenerateInput("singular curve".into()));
    }
    let bf = BinForm::from_poly(f, 6);
    let sample = f.sample();
    let i4f = transvectant(&bf, &bf, 4)?; // order 4
    let dlt = transvectant(&i4f, &i4f, 2)?; // order 4
    let y1 = transvectant(&bf, &i4f, 4)?; // order 2
    let y2 = transvectant(&i4f, &y1, 2)?; // order 2
    let y3 = transvectant(&i4f, &y2, 2)?; // order 2
    let av = transvectant(&bf, &bf, 6)?.c[0].clone();
    let bv = transvectant(&i4f, &i4f, 4)?.c[0].clone();
    let cv = transvectant(&i4f, &dlt, 4)?.c[0].clone();
    let dv = transvectant(&y3, &y1, 2)?.c[0].clone();
    let n = |k: i64| sample.from_i64(k);
    let a2 = av.mul(&av);
    let a3 = a2.mul(&av);
    let a5 = a3.mul(&a2);
    let i2 = n(-120).mul(&av);
    let i4 = n(-720).mul(&a2).add(&n(6750).mul(&bv));
    let i6 = n(8640)
        .mul(&a3)
        .sub(&n(108_000).mul(&av).mul(&bv))
        .add(&n(202_500).mul(&cv));
    let i10 = n(-62_208)
        .mul(&a5)
        .add(&n(972_000).mul(&a3).mul(&bv))
        .add(&n(1_620_000).mul(&a2).mul(&cv))
        .sub(&n(3_037_500).mul(&av).mul(&bv).mul(&bv))
        .sub(&n(6_075_000).mul(&bv).mul(&cv))
        .sub(&n(4_556_250).mul(&dv));
    Ok(IgusaClebsch { i2, i4, i6, i10 })
}

impl<K: Field> IgusaClebsch<K> {
    /// Absolute invariants, defined whenever I10 != 0 (all smooth curves).
    pub fn absolute(&self) -> Option<[K; 3]> {
        let inv10 = self.i10.inv()?;
        let p5 = |v: &K| {
            let v2 = v.mul(v);
            v2.mul(&v2).mul(v)
        };
        let x1 = p5(&self.i2).mul(&inv10);
        let x2 = p5(&self.i4).mul(&inv10).mul(&inv10);
        let x3 = p5(&self.i6).mul(&inv10).mul(&inv10).mul(&inv10);
        Some([x1, x2, x3])
    }

    /// Weighted-projective equality (complete for smooth curves).
    pub fn equivalent(&self, other: &Self) -> bool {
        match (self.absolute(), other.absolute()) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, Fp, Rat};
    use rand::{Rng, SeedableRng};

    fn qpoly(cs: &[i64]) -> Poly<Rat> {
        Poly::new(cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn i10_is_the_discriminant() {
        let f = qpoly(&[7, -3, 0, 1, 2, 0, 5]);
        let ic = igusa_clebsch(&f).unwrap();
        assert_eq!(ic.i10, f.discriminant().unwrap());
    }

    #[test]
    fn scaling_invariance() {
        let f = qpoly(&[1, 4, -2, 0, 3, 1, 6]);
        let ic = igusa_clebsch(&f).unwrap();
        let ic2 = igusa_clebsch(&f.scale(&rat(9))).unwrap(); // c^2 F with c = 3
        assert!(ic.equivalent(&ic2));
    }

    #[test]
    fn reversal_invariance() {
        // x -> 1/x: x^6 F(1/x) reverses coefficients
        let f = qpoly(&[1, 4, -2, 0, 3, 1, 6]);
        let rev = qpoly(&[6, 1, 3, 0, -2, 4, 1]);
        let a = igusa_clebsch(&f).unwrap();
        let b = igusa_clebsch(&rev).unwrap();
        assert!(a.equivalent(&b));
    }

    /// Independent oracle: for split sextics over F_p the invariants are
    /// symmetric functions of the root differences (15 pairings for I2,
    /// 10 triple-splits for I4, 60 split-bijections for I6, the full
    /// product for I10).
    #[test]
    fn root_difference_oracle() {
        let p = 10_007u64;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..5 {
            let mut roots = vec![];
            while roots.len() < 6 {
                let r = Fp::from_u64(rng.gen(), p);
                if !roots.contains(&r) {
                    roots.push(r);
                }
            }
            let u = Fp::from_u64(rng.gen_range(1..p), p);
            let mut f = Poly::constant(u);
            for r in &roots {
                f = f.mul(&Poly::linear_root(r));
            }
            let ic = igusa_clebsch(&f).unwrap();
            let d = |i: usize, j: usize| roots[i].sub(&roots[j]);
            let sq = |x: Fp| x.mul(&x);

            // I2: 15 ways to partition {0..5} into three pairs
            let mut i2 = u.zero();
            let pairings = three_pairings();
            for pr in &pairings {
                let mut term = u.one();
                for &(a, b) in pr {
                    term = term.mul(&sq(d(a, b)));
                }
                i2 = i2.add(&term);
            }
            i2 = i2.mul(&sq(u));
            assert_eq!(ic.i2, i2, "I2 root oracle");

            // I4: 10 splits into two unordered triples
            let tri = |a: usize, b: usize, c: usize| sq(d(a, b)).mul(&sq(d(b, c))).mul(&sq(d(c, a)));
            let splits = triple_splits();
            let mut i4 = u.zero();
            for (x, y) in &splits {
                i4 = i4.add(&tri(x[0], x[1], x[2]).mul(&tri(y[0], y[1], y[2])));
            }
            let u4 = sq(u).mul(&sq(u));
            i4 = i4.mul(&u4);
            assert_eq!(ic.i4, i4, "I4 root oracle");

            // I6: splits x bijections between the triples
            let mut i6 = u.zero();
            for (x, y) in &splits {
                for perm in permutations3() {
                    let yy = [y[perm[0]], y[perm[1]], y[perm[2]]];
                    let cross = sq(d(x[0], yy[0])).mul(&sq(d(x[1], yy[1]))).mul(&sq(d(x[2], yy[2])));
                    i6 = i6.add(&tri(x[0], x[1], x[2]).mul(&tri(yy[0], yy[1], yy[2])).mul(&cross));
                }
            }
            i6 = i6.mul(&u4).mul(&sq(u));
            assert_eq!(ic.i6, i6, "I6 root oracle");

            // I10 = u^10 prod (ri - rj)^2
            let mut i10 = u.one();
            for i in 0..6 {
                for j in i + 1..6 {
                    i10 = i10.mul(&sq(d(i, j)));
                }
            }
            let u10 = u4.mul(&u4).mul(&sq(u));
            i10 = i10.mul(&u10);
            assert_eq!(ic.i10, i10, "I10 root oracle");
        }
    }

    fn three_pairings() -> Vec<Vec<(usize, usize)>> {
        let mut out = vec![];
        let items: Vec<usize> = (0..6).collect();
        fn rec(rem: Vec<usize>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
            if rem.is_empty() {
                out.push(cur.clone());
                return;
            }
            let a = rem[0];
            for k in 1..rem.len() {
                let b = rem[k];
                let rest: Vec<usize> = rem[1..].iter().copied().filter(|&x| x != b).collect();
                cur.push((a, b));
                rec(rest, cur, out);
                cur.pop();
            }
        }
        rec(items, &mut vec![], &mut out);
        out
    }

    fn triple_splits() -> Vec<([usize; 3], [usize; 3])> {
        let mut out = vec![];
        for a in 0..6 {
            for b in a + 1..6 {
                for c in b + 1..6 {
                    let x = [a, b, c];
                    let y: Vec<usize> = (0..6).filter(|i| !x.contains(i)).collect();
                    if x[0] == 0 {
                        out.push((x, [y[0], y[1], y[2]]));
                    }
                }
            }
        }
        out
    }

    fn permutations3() -> [[usize; 3]; 6] {
        [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ]
    }
}

//! Dense univariate polynomials over an exact [`Field`].
//!
//! Coefficients are stored lowest degree first with no trailing zeros; the
//! zero polynomial has an empty coefficient list. Everything the rest of
//! the crate needs lives here: evaluation, arithmetic, gcd, resultants via
//! the Sylvester matrix with fraction-free elimination, discriminants, and
//! the canonical-sign polynomial square root.

use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, PartialEq)]
pub struct Poly<K: Field> {
    coeffs: Vec<K>,
}

impl<K: Field> std::fmt::Debug for Poly<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

impl<K: Field> Poly<K> {
    /// Builds a polynomial from coefficients, lowest degree first.
    pub fn new(mut coeffs: Vec<K>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn constant(c: K) -> Self {
        Poly::new(vec![c])
    }

    /// x - a
    pub fn linear_root(a: &K) -> Self {
        Poly::new(vec![a.neg(), a.one()])
    }

    pub fn from_i64(sample: &K, cs: &[i64]) -> Self {
        Poly::new(cs.iter().map(|&c| sample.from_i64(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    /// Coefficient of x^i (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> K {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.sample().zero())
    }

    /// Any element of the coefficient field, for minting constants.
    /// Panics on the zero polynomial (no field context available).
    pub fn sample(&self) -> &K {
        self.coeffs.first().expect("zero polynomial carries no field context")
    }

    pub fn lc(&self) -> K {
        self.coeffs.last().expect("leading coefficient of zero polynomial").clone()
    }

    pub fn eval(&self, x: &K) -> K {
        let mut acc = x.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = rhs.coeffs.get(i);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Poly::new(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let zero = self.sample().zero();
        let mut out = vec![zero; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        if e == 0 {
            return Poly::constant(self.sample().one());
        }
        let mut acc = self.clone();
        for _ in 1..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitute x -> a*x + b.
    pub fn compose_affine(&self, a: &K, b: &K) -> Self {
        let lin = Poly::new(vec![b.clone(), a.clone()]);
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&Poly::constant(c.clone()));
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let out: Vec<K> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&c.from_i64(i as i64)))
            .collect();
        Poly::new(out)
    }

    /// Division with remainder; `None` if `rhs` is zero.
    pub fn div_rem(&self, rhs: &Self) -> Option<(Self, Self)> {
        if rhs.is_zero() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let db = rhs.deg();
        if self.is_zero() || self.deg() < db {
            return Some((Poly::zero(), self.clone()));
        }
        let lcinv = rhs.lc().inv()?;
        let zero = rhs.sample().zero();
        let mut quot = vec![zero; self.deg() - db + 1];
        for i in (db..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = rem[i].mul(&lcinv);
            quot[i - db] = q.clone();
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let idx = i - db + j;
                rem[idx] = rem[idx].sub(&q.mul(b));
            }
        }
        Some((Poly::new(quot), Poly::new(rem)))
    }

    /// Monic gcd (1 for coprime inputs); gcd(0, 0) = 0.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lcinv = a.lc().inv().expect("field");
        a.scale(&lcinv)
    }

    /// Content-free check that two polynomials agree up to a scalar.
    pub fn proportional_to(&self, rhs: &Self) -> bool {
        match (self.degree(), rhs.degree()) {
            (None, None) => true,
            (Some(d1), Some(d2)) if d1 == d2 => {
                let c = rhs.lc().div(&self.lc()).expect("nonzero lc");
                self.scale(&c) == *rhs
            }
            _ => false,
        }
    }

    /// Resultant with the convention
    /// `Res(P, Q) = lc(P)^deg(Q) * prod Q(alpha)` over the roots of P, so
    /// `Res(P, Q) = (-1)^(deg P * deg Q) Res(Q, P)`.
    ///
    /// Computed as the Sylvester determinant by fraction-free (Bareiss)
    /// elimination, which is exact over Q and reduces to modular Gaussian
    /// elimination over F_p.
    pub fn resultant(&self, rhs: &Self) -> Result<K> {
        if self.is_zero() && rhs.is_zero() {
            return Err(Error::DegenerateInput("resultant of two zero polynomials".into()));
        }
        if self.is_zero() {
            return Ok(rhs.sample().zero());
        }
        if rhs.is_zero() {
            return Ok(self.sample().zero());
        }
        let (m, n) = (self.deg(), rhs.deg());
        let one = self.sample().one();
        if m == 0 {
            return Ok(pow_k(&self.coeffs[0], n as u32, &one));
        }
        if n == 0 {
            return Ok(pow_k(&rhs.coeffs[0], m as u32, &one));
        }
        let zero = self.sample().zero();
        let size = m + n;
        // Sylvester matrix: n rows of P followed by m rows of Q,
        // coefficients highest degree first.
        let mut mat = vec![vec![zero.clone(); size]; size];
        for row in 0..n {
            for (k, c) in self.coeffs.iter().rev().enumerate() {
                mat[row][row + k] = c.clone();
            }
        }
        for row in 0..m {
            for (k, c) in rhs.coeffs.iter().rev().enumerate() {
                mat[n + row][row + k] = c.clone();
            }
        }
        Ok(det_bareiss(mat, &zero, &one))
    }

    /// Discriminant: `Disc(P) = (-1)^(d(d-1)/2) Res(P, P') / lc(P)`.
    pub fn discriminant(&self) -> Result<K> {
        match self.degree() {
            None | Some(0) => Err(Error::DegenerateInput(
                "discriminant of a constant polynomial".into(),
            )),
            Some(d) => {
                let res = self.resultant(&self.derivative())?;
                let sign = if (d * (d - 1) / 2) % 2 == 1 { res.neg() } else { res };
                sign.div(&self.lc())
                    .ok_or_else(|| Error::DegenerateInput("zero leading coefficient".into()))
            }
        }
    }

    /// Square root with canonical sign (positive leading coefficient over
    /// Q, least representative over F_p), by coefficient recursion from the
    /// leading term. Errors when the input is not a perfect square; callers
    /// use that as a check outcome.
    pub fn sqrt(&self) -> Result<Self> {
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        let d = self.deg();
        if d % 2 != 0 {
            return Err(Error::NotASquare);
        }
        let m = d / 2;
        let lc_root = self.lc().sqrt().ok_or(Error::NotASquare)?;
        if d == 0 {
            return Ok(Poly::constant(lc_root));
        }
        let zero = self.sample().zero();
        let mut q = vec![zero; m + 1];
        q[m] = lc_root;
        let two_lc_inv = q[m]
            .add(&q[m])
            .inv()
            .ok_or(Error::NotASquare)?;
        for i in (0..m).rev() {
            // coefficient of x^(m+i) in Q^2 equals 2 q_m q_i + cross terms
            let mut cross = q[m].zero();
            for j in i + 1..m {
                let k = m + i - j;
                if k <= m {
                    cross = cross.add(&q[j].mul(&q[k]));
                }
            }
            q[i] = self.coeff(m + i).sub(&cross).mul(&two_lc_inv);
        }
        let cand = Poly::new(q);
        if cand.mul(&cand) == *self {
            Ok(cand)
        } else {
            Err(Error::NotASquare)
        }
    }

    /// Map coefficients into another field (e.g. reduce Q -> F_p).
    pub fn map<L: Field, F: Fn(&K) -> Option<L>>(&self, f: F) -> Option<Poly<L>> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(f(c)?);
        }
        Some(Poly::new(out))
    }
}

fn pow_k<K: Field>(base: &K, e: u32, one: &K) -> K {
    let mut acc = one.clone();
    for _ in 0..e {
        acc = acc.mul(base);
    }
    acc
}

/// Fraction-free determinant (Bareiss). Exact over any field and over the
/// integers embedded in one.
pub fn det_bareiss<K: Field>(mut m: Vec<Vec<K>>, zero: &K, one: &K) -> K {
    let n = m.len();
    if n == 0 {
        return one.clone();
    }
    let mut sign = false;
    let mut prev = one.clone();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return zero.clone();
            };
            m.swap(k, swap);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.div(&prev).expect("Bareiss divisor is exact");
            }
        }
        for r in m.iter_mut().skip(k + 1) {
            r[k] = zero.clone();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        d.neg()
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, Fp, Rat};

    fn qpoly(cs: &[i64]) -> Poly<Rat> {
        Poly::new(cs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn resultant_evaluation_property() {
        // Res(x - a, Q) = Q(a)
        let a = rat(5);
        let q = qpoly(&[1, 2, 7, 3]);
        let lin = Poly::linear_root(&a);
        assert_eq!(lin.resultant(&q).unwrap(), q.eval(&a));
    }

    #[test]
    fn resultant_cyclotomic() {
        // Res(x^2+x+1, x-1) = 3
        let p = qpoly(&[1, 1, 1]);
        let q = qpoly(&[-1, 1]);
        assert_eq!(p.resultant(&q).unwrap(), rat(3));
    }

    #[test]
    fn resultant_sylvester_oracle_4x4() {
        // H1, H2 at (r,s,t) = (2,-1,-2): the 4x4 Sylvester determinant,
        // expanded by hand as the independent oracle.
        let h1 = qpoly(&[-2, 2, 1]);
        let h2 = qpoly(&[-2, 1, 1]);
        let rows: [[i64; 4]; 4] = [[1, 2, -2, 0], [0, 1, 2, -2], [1, 1, -2, 0], [0, 1, 1, -2]];
        let mut det = rat(0);
        // cofactor expansion along the first column
        for i in 0..4 {
            if rows[i][0] == 0 {
                continue;
            }
            let mut minor = vec![];
            for (r, row) in rows.iter().enumerate() {
                if r == i {
                    continue;
                }
                minor.push([row[1], row[2], row[3]]);
            }
            let m3 = |m: &Vec<[i64; 3]>| -> i64 {
                m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                    - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                    + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
            };
            let term = rat(rows[i][0] * m3(&minor));
            det = if i % 2 == 0 { det + term } else { det - term };
        }
        assert_eq!(h1.resultant(&h2).unwrap(), det);
        assert_eq!(det, rat(-2));
    }

    #[test]
    fn resultant_swap_sign() {
        let p = qpoly(&[3, 1, 4, 1]);
        let q = qpoly(&[2, 7, 1]);
        let rpq = p.resultant(&q).unwrap();
        let rqp = q.resultant(&p).unwrap();
        // (-1)^(3*2) = 1
        assert_eq!(rpq, rqp);
    }

    #[test]
    fn resultant_both_zero_is_error() {
        let z: Poly<Rat> = Poly::zero();
        assert!(z.resultant(&Poly::zero()).is_err());
    }

    #[test]
    fn discriminant_quadratic_and_cubic() {
        // Disc(x^2 + bx + c) = b^2 - 4c
        let p = qpoly(&[7, 5, 1]);
        assert_eq!(p.discriminant().unwrap(), rat(25 - 28));
        // Disc(x^3 - 1) = -27
        let c = qpoly(&[-1, 0, 0, 1]);
        assert_eq!(c.discriminant().unwrap(), rat(-27));
        assert!(qpoly(&[5]).discriminant().is_err());
    }

    #[test]
    fn sqrt_roundtrip_and_failures() {
        let q = qpoly(&[1, 0, 0, 2]); // 2x^3 + 1
        assert_eq!(q.mul(&q).sqrt().unwrap(), q);
        // canonical sign: sqrt of (-q)^2 is still +q (positive lc)
        assert_eq!(q.neg().mul(&q.neg()).sqrt().unwrap(), q);
        assert!(qpoly(&[1, 0, 1]).sqrt().is_err()); // x^2 + 1
    }

    #[test]
    fn modular_resultant_matches_rational() {
        let p = 1_000_003u64;
        let a = qpoly(&[3, -4, 0, 9, 1]);
        let b = qpoly(&[-7, 2, 5, 1]);
        let rq = a.resultant(&b).unwrap();
        let ap = a.map(|c| Fp::from_rat(c, p)).unwrap();
        let bp = b.map(|c| Fp::from_rat(c, p)).unwrap();
        let rp = ap.resultant(&bp).unwrap();
        assert_eq!(Fp::from_rat(&rq, p).unwrap(), rp);
    }

    #[test]
    fn multiplicativity_over_fp() {
        use rand::{Rng, SeedableRng};
        let p = 2_147_483_659u64;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let sample = Fp::new(1, p);
        for _ in 0..50 {
            let rnd = |rng: &mut rand_chacha::ChaCha8Rng, d: usize| {
                let mut v: Vec<Fp> = (0..=d).map(|_| Fp::from_u64(rng.gen(), p)).collect();
                if v.last().unwrap().is_zero() {
                    *v.last_mut().unwrap() = sample.one();
                }
                Poly::new(v)
            };
            let a = rnd(&mut rng, 3);
            let b = rnd(&mut rng, 2);
            let c = rnd(&mut rng, 2);
            let lhs = a.resultant(&b).unwrap().mul(&a.resultant(&c).unwrap());
            let rhs = a.resultant(&b.mul(&c)).unwrap();
            assert_eq!(lhs, rhs, "Res(P,Q)Res(P,R) = Res(P,QR)");
        }
    }

    #[test]
    fn discriminant_translation_invariance() {
        use rand::{Rng, SeedableRng};
        let p = 2_147_483_659u64;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
        for _ in 0..20 {
            let v: Vec<Fp> = (0..=6).map(|_| Fp::from_u64(rng.gen(), p)).collect();
            let mut f = Poly::new(v);
            if f.degree() != Some(6) {
                continue;
            }
            let a = Fp::from_u64(rng.gen(), p);
            let shifted = f.compose_affine(&f.sample().one(), &a);
            assert_eq!(
                f.discriminant().unwrap(),
                shifted.discriminant().unwrap()
            );
            f = f.scale(&Fp::new(2, p));
            let _ = f;
        }
    }
}

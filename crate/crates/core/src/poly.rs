//! Univariate polynomials over the rationals.
//!
//! Coefficients are stored lowest degree first with no trailing zeros, so the
//! zero polynomial is the empty vector.

use std::fmt;

use num::{BigInt, Integer, One, Signed, Zero};

use crate::matrix::Matrix;
use crate::scalar::{common_denominator, int, sign, Scalar};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Poly::new(vec![c])
    }

    /// `t - r`
    pub fn linear_root(r: &Scalar) -> Self {
        Poly::new(vec![-r.clone(), Scalar::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn leading(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading();
        self.scale(&lc.recip())
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let mut rem = self.coeffs.clone();
        let d = divisor.degree();
        let lc = divisor.leading();
        if self.is_zero() || self.degree() < d {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Scalar::zero(); self.degree() - d + 1];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + d] / &lc;
            if q.is_zero() {
                continue;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * c;
            }
            quot[k] = q;
        }
        rem.truncate(d);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns `(g, u, v)` with `u*self + v*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = r0.leading().recip();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * int(i as i64)).collect(),
        )
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs.iter().rev().fold(Scalar::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let n = m.rows();
        self.coeffs.iter().rev().fold(Matrix::zeros(n, n), |acc, c| {
            acc.mul(m).add(&Matrix::identity(n).scale(c))
        })
    }

    /// `self / gcd(self, self')`, monic: the product of the distinct
    /// irreducible factors.
    pub fn squarefree_part(&self) -> Poly {
        if self.degree() == 0 {
            return Poly::one();
        }
        self.div_rem(&self.gcd(&self.derivative())).0.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == 0
    }

    /// `p(-t)`
    pub fn reflect(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    /// If only even powers occur, returns `P` with `self(t) = P(t^2)`.
    pub fn as_poly_in_square(&self) -> Option<Poly> {
        if self.coeffs.iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
            return None;
        }
        Some(Poly::new(self.coeffs.iter().step_by(2).cloned().collect()))
    }

    fn sturm_sequence(&self) -> Vec<Poly> {
        let mut seq = vec![self.clone(), self.derivative()];
        while !seq.last().unwrap().is_zero() {
            let n = seq.len();
            let r = seq[n - 2].div_rem(&seq[n - 1]).1;
            seq.push(r.scale(&int(-1)));
        }
        seq.pop();
        seq
    }

    fn sign_changes(signs: impl Iterator<Item = i32>) -> usize {
        let nonzero: Vec<i32> = signs.filter(|&s| s != 0).collect();
        nonzero.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Number of distinct real roots.
    pub fn count_real_roots(&self) -> usize {
        if self.degree() == 0 {
            return 0;
        }
        let seq = self.sturm_sequence();
        let at_neg_inf = Self::sign_changes(seq.iter().map(|p| {
            let s = sign(&p.leading());
            if p.degree() % 2 == 0 { s } else { -s }
        }));
        let at_pos_inf = Self::sign_changes(seq.iter().map(|p| sign(&p.leading())));
        at_neg_inf - at_pos_inf
    }

    /// Number of distinct real roots strictly below zero.
    pub fn count_negative_roots(&self) -> usize {
        if self.degree() == 0 {
            return 0;
        }
        let mut p = self.clone();
        while p.coeff(0).is_zero() {
            p = p.div_rem(&Poly::from_i64(&[0, 1])).0;
        }
        if p.degree() == 0 {
            return 0;
        }
        let seq = p.sturm_sequence();
        let at_neg_inf = Self::sign_changes(seq.iter().map(|q| {
            let s = sign(&q.leading());
            if q.degree() % 2 == 0 { s } else { -s }
        }));
        let at_zero = Self::sign_changes(seq.iter().map(|q| sign(&q.coeff(0))));
        at_neg_inf - at_zero
    }

    /// Distinct rational roots, by the rational root theorem. Returns `None`
    /// when the integer coefficients are too large to enumerate divisors.
    pub fn rational_roots(&self) -> Option<Vec<Scalar>> {
        const DIVISOR_SEARCH_LIMIT: u64 = 1 << 40;
        if self.degree() == 0 {
            return Some(Vec::new());
        }
        let mut roots = Vec::new();
        let mut p = self.clone();
        if p.coeff(0).is_zero() {
            roots.push(Scalar::zero());
            while p.coeff(0).is_zero() {
                p = p.div_rem(&Poly::from_i64(&[0, 1])).0;
            }
        }
        if p.degree() == 0 {
            return Some(roots);
        }
        let l = common_denominator(p.coeffs.iter());
        let ints: Vec<BigInt> =
            p.coeffs.iter().map(|c| (c * Scalar::from_integer(l.clone())).to_integer()).collect();
        let a0 = ints[0].abs();
        let an = ints.last().unwrap().abs();
        let to_u64 = |b: &BigInt| -> Option<u64> { b.try_into().ok() };
        let (a0, an) = (to_u64(&a0)?, to_u64(&an)?);
        if a0 > DIVISOR_SEARCH_LIMIT || an > DIVISOR_SEARCH_LIMIT {
            return None;
        }
        for num in divisors(a0) {
            for den in divisors(an) {
                if num.gcd(&den) != 1 {
                    continue;
                }
                for s in [1i64, -1] {
                    let r = Scalar::new(BigInt::from(s) * BigInt::from(num), BigInt::from(den));
                    if p.eval(&r).is_zero() && !roots.contains(&r) {
                        roots.push(r);
                    }
                }
            }
        }
        roots.sort();
        Some(roots)
    }
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, abs) = (c.is_negative(), c.abs());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let show_coeff = i == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "{}t", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}t^{i}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::frac;

    #[test]
    fn division_and_gcd() {
        // (t-1)(t-2) and (t-1)(t+3)
        let a = Poly::from_i64(&[2, -3, 1]);
        let b = Poly::from_i64(&[-3, 2, 1]);
        assert_eq!(a.gcd(&b), Poly::from_i64(&[-1, 1]));
        let (q, r) = a.div_rem(&Poly::from_i64(&[-1, 1]));
        assert_eq!(q, Poly::from_i64(&[-2, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn extended_gcd_identity() {
        let a = Poly::from_i64(&[0, 1, 0, 1]); // t^3 + t
        let b = Poly::from_i64(&[-4, 0, 1]); // t^2 - 4
        let (g, u, v) = a.ext_gcd(&b);
        assert_eq!(g, Poly::one());
        assert_eq!(u.mul(&a).add(&v.mul(&b)), Poly::one());
    }

    #[test]
    fn squarefree_part_drops_multiplicity() {
        // (t-1)^2 (t+2)
        let p = Poly::from_i64(&[-1, 1]).mul(&Poly::from_i64(&[-1, 1])).mul(&Poly::from_i64(&[2, 1]));
        assert_eq!(p.squarefree_part(), Poly::from_i64(&[-2, 1, 1]));
        assert!(!p.is_squarefree());
    }

    #[test]
    fn sturm_counts() {
        // t (t^2 + 4): one real root
        let p = Poly::from_i64(&[0, 4, 0, 1]);
        assert_eq!(p.count_real_roots(), 1);
        // t (t - 2)(t + 2)
        let q = Poly::from_i64(&[0, -4, 0, 1]);
        assert_eq!(q.count_real_roots(), 3);
        assert_eq!(q.count_negative_roots(), 1);
        // t^2 - 2: irrational real roots
        assert_eq!(Poly::from_i64(&[-2, 0, 1]).count_real_roots(), 2);
        assert_eq!(Poly::from_i64(&[3, 1]).count_negative_roots(), 1);
    }

    #[test]
    fn rational_root_search() {
        // (2t - 1)(t + 3)(t^2 + 1)
        let p = Poly::from_i64(&[-1, 2])
            .mul(&Poly::from_i64(&[3, 1]))
            .mul(&Poly::from_i64(&[1, 0, 1]));
        assert_eq!(p.rational_roots().unwrap(), vec![int(-3), frac(1, 2)]);
        assert_eq!(Poly::from_i64(&[0, 0, 1]).rational_roots().unwrap(), vec![int(0)]);
    }

    #[test]
    fn display() {
        assert_eq!(Poly::from_i64(&[0, 4, 0, 1]).to_string(), "t^3 + 4*t");
        assert_eq!(Poly::from_i64(&[-1, 0, -2]).to_string(), "-2*t^2 - 1");
    }
}

//! Univariate polynomials over the rationals, characteristic polynomials
//! and Sturm root counting.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::rational::{format_rational, int, sign, Rational};

/// Polynomial with coefficients listed lowest degree first. The zero
/// polynomial has no coefficients; otherwise the last one is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
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
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `t`.
    pub fn t() -> Self {
        Poly::from_i64(&[0, 1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(lc) => {
                let inv = lc.recip();
                Poly::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn scale(&self, s: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * s).collect())
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
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lc_inv = divisor.coeffs[d].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(d)];
        while rem.len() > d && !rem.is_empty() {
            let k = rem.len() - 1;
            let f = &rem[k] * &lc_inv;
            if !f.is_zero() {
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    rem[k - d + i] -= &f * c;
                }
            }
            quot[k - d] = f;
            rem.pop();
        }
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.div_rem(divisor).1
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * int(i as i64)).collect())
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, u, v)` with `u*self + v*other = g = gcd(self, other)`, `g` monic.
    pub fn ext_gcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        match r0.leading().cloned() {
            None => (Poly::zero(), s0, t0),
            Some(lc) => {
                let inv = lc.recip();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// `p / gcd(p, p')`, made monic.
    pub fn squarefree_part(&self) -> Result<Poly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        let (q, r) = self.div_rem(&g);
        debug_assert!(r.is_zero());
        Ok(q.monic())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_at_matrix(&self, m: &Mat) -> Mat {
        assert!(m.is_square(), "polynomial evaluation needs a square matrix");
        let n = m.rows();
        let mut acc = Mat::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &acc * m;
            for i in 0..n {
                acc[(i, i)] += c;
            }
        }
        acc
    }
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
            let negative = c.is_negative();
            let abs = c.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{}", format_rational(&abs))?;
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
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

/// Monic `det(t I - m)` by the Samuelson-Berkowitz recurrence, which uses
/// no division.
pub fn char_poly(m: &Mat) -> Poly {
    assert!(m.is_square(), "characteristic polynomial needs a square matrix");
    let n = m.rows();
    if n == 0 {
        return Poly::one();
    }
    // Coefficients highest degree first while iterating.
    let mut p: Vec<Rational> = vec![Rational::one(), -m[(n - 1, n - 1)].clone()];
    for k in (0..n - 1).rev() {
        let size = n - k;
        let a = &m[(k, k)];
        let row: Vec<Rational> = (k + 1..n).map(|j| m[(k, j)].clone()).collect();
        let sub = Mat::from_fn(size - 1, size - 1, |i, j| m[(k + 1 + i, k + 1 + j)].clone());
        let mut col: Vec<Rational> = (k + 1..n).map(|i| m[(i, k)].clone()).collect();
        let mut toeplitz = Vec::with_capacity(size + 1);
        toeplitz.push(Rational::one());
        toeplitz.push(-a.clone());
        for _ in 0..size - 1 {
            let rc: Rational = row.iter().zip(&col).map(|(r, c)| r * c).sum();
            toeplitz.push(-rc);
            col = sub.mul_vec(&col);
        }
        let mut next = vec![Rational::zero(); size + 1];
        for (i, out) in next.iter_mut().enumerate() {
            for (j, pj) in p.iter().enumerate().take(i + 1) {
                if !pj.is_zero() {
                    *out += &toeplitz[i - j] * pj;
                }
            }
        }
        p = next;
    }
    p.reverse();
    Poly::new(p)
}

/// Endpoint of a real interval. Finite endpoints are included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Endpoint {
    NegInfinity,
    PosInfinity,
    At(Rational),
}

/// A closed (at finite ends) possibly unbounded interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Endpoint,
    pub hi: Endpoint,
}

impl Interval {
    pub fn real_line() -> Self {
        Interval { lo: Endpoint::NegInfinity, hi: Endpoint::PosInfinity }
    }

    pub fn closed(lo: Rational, hi: Rational) -> Self {
        Interval { lo: Endpoint::At(lo), hi: Endpoint::At(hi) }
    }

    pub fn up_to(hi: Rational) -> Self {
        Interval { lo: Endpoint::NegInfinity, hi: Endpoint::At(hi) }
    }

    pub fn from(lo: Rational) -> Self {
        Interval { lo: Endpoint::At(lo), hi: Endpoint::PosInfinity }
    }
}

/// Sturm sequence `p, p', -rem(p, p'), ...`.
pub fn sturm_sequence(p: &Poly) -> Vec<Poly> {
    let mut seq = vec![p.clone()];
    let mut next = p.derivative();
    while !next.is_zero() {
        let r = seq.last().expect("nonempty").rem(&next);
        seq.push(next);
        next = r.scale(&int(-1));
    }
    seq
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn variations_at(seq: &[Poly], at: &Endpoint) -> usize {
    match at {
        Endpoint::At(x) => variations(seq.iter().map(|q| sign(&q.eval(x)))),
        Endpoint::PosInfinity => variations(seq.iter().map(|q| q.leading().map_or(0, sign))),
        Endpoint::NegInfinity => variations(seq.iter().map(|q| {
            let s = q.leading().map_or(0, sign);
            if q.degree().unwrap_or(0) % 2 == 1 {
                -s
            } else {
                s
            }
        })),
    }
}

/// Number of distinct real roots of a squarefree polynomial in `interval`.
pub fn sturm_real_roots_in(p: &Poly, interval: &Interval) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.is_squarefree() {
        return Err(Error::NotSquarefree(p.to_string()));
    }
    if p.degree() == Some(0) {
        return Ok(0);
    }
    match (&interval.lo, &interval.hi) {
        (Endpoint::At(a), Endpoint::At(b)) if a > b => return Ok(0),
        (Endpoint::PosInfinity, _) | (_, Endpoint::NegInfinity) => return Ok(0),
        _ => {}
    }
    let seq = sturm_sequence(p);
    // V(a) - V(b) counts roots in (a, b]; a root at a finite left end is added back.
    let lo_root = matches!(&interval.lo, Endpoint::At(a) if p.eval(a).is_zero());
    let v_lo = variations_at(&seq, &interval.lo);
    let v_hi = variations_at(&seq, &interval.hi);
    Ok(v_lo - v_hi + usize::from(lo_root))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn char_poly_examples() {
        assert_eq!(char_poly(&Mat::diagonal(&[int(1), int(-1)])), Poly::from_i64(&[-1, 0, 1]));
        assert_eq!(char_poly(&Mat::from_i64_rows(&[&[0, -1], &[1, 0]])), Poly::from_i64(&[1, 0, 1]));
        let n = Mat::from_i64_rows(&[&[0, 1, 5], &[0, 0, 1], &[0, 0, 0]]);
        assert_eq!(char_poly(&n), Poly::from_i64(&[0, 0, 0, 1]));
        assert_eq!(char_poly(&Mat::zeros(0, 0)), Poly::one());
    }

    #[test]
    fn char_poly_matches_cofactor_expansion_3x3() {
        // det(tI - A) for A = [[2,1,0],[1,3,1],[0,1,4]]: t^3 - 9t^2 + 24t - 18.
        let a = Mat::from_i64_rows(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(char_poly(&a), Poly::from_i64(&[-18, 24, -9, 1]));
    }

    #[test]
    fn squarefree_examples() {
        let t_minus_1_sq = Poly::from_i64(&[1, -2, 1]);
        assert_eq!(t_minus_1_sq.squarefree_part().unwrap(), Poly::from_i64(&[-1, 1]));
        let t2p1 = Poly::from_i64(&[1, 0, 1]);
        assert_eq!(t2p1.squarefree_part().unwrap(), t2p1);
        // t^3 (t^2 - 1) -> t (t^2 - 1)
        let p = Poly::from_i64(&[0, 0, 0, -1, 0, 1]);
        assert_eq!(p.squarefree_part().unwrap(), Poly::from_i64(&[0, -1, 0, 1]));
        assert!(matches!(Poly::zero().squarefree_part(), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn eval_at_matrix_examples() {
        let rot = Mat::from_i64_rows(&[&[0, -1], &[1, 0]]);
        assert_eq!(Poly::t().eval_at_matrix(&rot), rot);
        assert!(Poly::from_i64(&[1, 0, 1]).eval_at_matrix(&rot).is_zero());
        let m = Mat::from_i64_rows(&[&[1, 2, 0], &[3, -1, 4], &[0, 5, 2]]);
        assert!(char_poly(&m).eval_at_matrix(&m).is_zero());
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = Poly::from_i64(&[-1, 0, 1]);
        let b = Poly::from_i64(&[0, 2]);
        let (g, u, v) = a.ext_gcd(&b);
        assert_eq!(g, Poly::one());
        assert_eq!(u.mul(&a).add(&v.mul(&b)), Poly::one());
    }

    #[test]
    fn sturm_examples() {
        let t2m1 = Poly::from_i64(&[-1, 0, 1]);
        assert_eq!(sturm_real_roots_in(&t2m1, &Interval::up_to(int(0))).unwrap(), 1);
        assert_eq!(sturm_real_roots_in(&Poly::from_i64(&[1, 0, 1]), &Interval::real_line()).unwrap(), 0);
        // t (t + 2)(t - 3) = t^3 - t^2 - 6t
        let p = Poly::from_i64(&[0, -6, -1, 1]);
        assert_eq!(sturm_real_roots_in(&p, &Interval::up_to(int(0))).unwrap(), 2);
        assert_eq!(sturm_real_roots_in(&p, &Interval::real_line()).unwrap(), 3);
        assert_eq!(sturm_real_roots_in(&p, &Interval::closed(int(-2), int(3))).unwrap(), 3);
        assert_eq!(sturm_real_roots_in(&p, &Interval::closed(rat(-1, 2), rat(5, 2))).unwrap(), 1);
        assert_eq!(sturm_real_roots_in(&p, &Interval::from(int(0))).unwrap(), 2);
        assert_eq!(sturm_real_roots_in(&p, &Interval::closed(int(3), int(3))).unwrap(), 1);
    }

    #[test]
    fn sturm_rejects_repeated_roots() {
        let p = Poly::from_i64(&[1, -2, 1]);
        assert!(matches!(sturm_real_roots_in(&p, &Interval::real_line()), Err(Error::NotSquarefree(_))));
    }

    #[test]
    fn display() {
        assert_eq!(Poly::from_i64(&[-1, 0, 1]).to_string(), "t^2 - 1");
        assert_eq!(Poly::new(vec![rat(1, 2), int(-1)]).to_string(), "-t + 1/2");
        assert_eq!(Poly::zero().to_string(), "0");
    }
}

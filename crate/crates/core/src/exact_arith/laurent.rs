use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::cyclotomic::CyclotomicScalar;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Laurent polynomial in a single variable `A` with rational coefficients.
///
/// `coeffs[j]` is the coefficient of `A^(lo + j)`. The representation is
/// trimmed: both end coefficients are nonzero, and the zero polynomial has
/// `lo == 0` and no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    lo: i64,
    coeffs: Vec<Rational>,
}

impl LaurentPoly {
    pub fn new(lo: i64, coeffs: Vec<Rational>) -> Self {
        let mut p = LaurentPoly { lo, coeffs };
        p.trim();
        p
    }

    pub fn from_ints(lo: i64, coeffs: &[i64]) -> Self {
        Self::new(lo, coeffs.iter().map(|&c| Rational::from_integer(BigInt::from(c))).collect())
    }

    pub fn zero() -> Self {
        LaurentPoly { lo: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(Rational::one(), 0)
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Rational, exp: i64) -> Self {
        Self::new(exp, vec![c])
    }

    /// The variable `A` itself.
    pub fn variable() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    fn trim(&mut self) {
        let end = self.coeffs.iter().rposition(|c| !c.is_zero()).map_or(0, |p| p + 1);
        self.coeffs.truncate(end);
        let start = self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
        self.coeffs.drain(..start);
        self.lo = if self.coeffs.is_empty() { 0 } else { self.lo + start as i64 };
    }

    pub fn lowest_exponent(&self) -> i64 {
        self.lo
    }

    pub fn highest_exponent(&self) -> i64 {
        self.lo + self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        let idx = exp - self.lo;
        if idx < 0 {
            return Rational::zero();
        }
        self.coeffs.get(idx as usize).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms as `(exponent, coefficient)`, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(j, c)| (self.lo + j as i64, c))
    }

    /// Integer power; negative exponents are only defined for monomials.
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `(-A)^k` for any integer `k`.
    pub fn signed_monomial(k: i64) -> Self {
        let sign = if k.rem_euclid(2) == 0 { 1 } else { -1 };
        Self::monomial(Rational::from_integer(BigInt::from(sign)), k)
    }

    /// Substitutes `A -> A^k`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k != 0);
        let mut out = Self::zero();
        for (e, c) in self.terms() {
            out = &out + &Self::monomial(c.clone(), e * k);
        }
        out
    }

    /// `A -> A^{-1}`.
    pub fn mirror(&self) -> Self {
        self.substitute_power(-1)
    }

    /// Exact evaluation at a cyclotomic scalar.
    pub fn eval(&self, a: &CyclotomicScalar) -> Result<CyclotomicScalar> {
        let order = a.order();
        if self.is_zero() {
            return Ok(CyclotomicScalar::zero(order));
        }
        let start = if a.is_zero() {
            if self.lo < 0 {
                return Err(Error::ZeroBase);
            }
            return Ok(CyclotomicScalar::from_rational(order, &self.coeff(0)));
        } else {
            a.pow(self.lo).ok_or(Error::ZeroBase)?
        };
        // Horner on the polynomial part, then shift by a^lo.
        let mut acc = CyclotomicScalar::zero(order);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * a) + &CyclotomicScalar::from_rational(order, c);
        }
        Ok(&acc * &start)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let abs = c.abs();
            match (abs.is_one(), e) {
                (_, 0) => write!(f, "{abs}")?,
                (true, 1) => write!(f, "A")?,
                (true, _) => write!(f, "A^{e}")?,
                (false, 1) => write!(f, "{abs}*A")?,
                (false, _) => write!(f, "{abs}*A^{e}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(rhs.lo);
        let hi = self.highest_exponent().max(rhs.highest_exponent());
        let coeffs = (lo..=hi).map(|e| self.coeff(e) + rhs.coeff(e)).collect();
        LaurentPoly::new(lo, coeffs)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    coeffs[i + j] += x * y;
                }
            }
        }
        LaurentPoly::new(self.lo + rhs.lo, coeffs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { lo: self.lo, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rational::int;

    fn z(n: usize, k: i64) -> CyclotomicScalar {
        CyclotomicScalar::root_of_unity(n, k)
    }

    #[test]
    fn trimming() {
        let p = LaurentPoly::from_ints(-3, &[0, 0, 1, 2, 0]);
        assert_eq!(p.lowest_exponent(), -1);
        assert_eq!(p.highest_exponent(), 0);
        assert!(LaurentPoly::from_ints(5, &[0, 0]).is_zero());
        assert_eq!(LaurentPoly::from_ints(5, &[0]), LaurentPoly::zero());
    }

    #[test]
    fn eval_a_plus_inverse_at_zeta8_is_sqrt2() {
        let p = LaurentPoly::from_ints(-1, &[1, 0, 1]);
        assert_eq!(p.eval(&z(8, 1)).unwrap(), z(8, 1) + z(8, 7));
    }

    #[test]
    fn eval_constant_one() {
        for a in [z(5, 2), CyclotomicScalar::from_int(3, 7), CyclotomicScalar::zero(4)] {
            assert!(LaurentPoly::one().eval(&a).unwrap().is_one());
        }
    }

    #[test]
    fn eval_loop_value_at_zeta16() {
        let delta = LaurentPoly::from_ints(-2, &[-1, 0, 0, 0, -1]);
        assert_eq!(delta.eval(&z(16, 1)).unwrap(), -(z(16, 2) + z(16, 14)));
        let v = delta.eval(&z(16, 1)).unwrap().to_complex();
        assert!((v.re + std::f64::consts::SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn eval_at_zero_base() {
        let p = LaurentPoly::from_ints(-1, &[1, 0, 1]);
        assert_eq!(p.eval(&CyclotomicScalar::zero(1)), Err(Error::ZeroBase));
        let q = LaurentPoly::from_ints(0, &[3, 1]);
        assert_eq!(q.eval(&CyclotomicScalar::zero(1)).unwrap(), CyclotomicScalar::from_int(1, 3));
    }

    #[test]
    fn arithmetic_and_mirror() {
        let a = LaurentPoly::variable();
        let ainv = LaurentPoly::monomial(int(1), -1);
        assert!((&a * &ainv) == LaurentPoly::one());
        let delta = -(&(&a * &a) + &(&ainv * &ainv));
        assert_eq!(delta.mirror(), delta);
        assert_eq!(format!("{}", LaurentPoly::from_ints(-7, &[1, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, -1])), "-A^5 - A^-3 + A^-7");
    }
}

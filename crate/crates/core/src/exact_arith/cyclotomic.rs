//! Exact arithmetic in the cyclotomic fields Q(zeta_N).
//!
//! A scalar of order `N` is stored in the power basis `1, z, ..., z^(N-1)`
//! with `z = exp(2 pi i / N)`, as an integer numerator vector over a single
//! positive denominator. Every value is kept reduced modulo the cyclotomic
//! polynomial `Phi_N`, so only the first `phi(N)` coordinates can be nonzero
//! and equality at a fixed order is structural.
//!
//! Numerators live in `i128` while they fit and are promoted to `BigInt`
//! on overflow; results are demoted again whenever every entry fits in `i64`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Euler's totient.
pub fn totient(n: usize) -> usize {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

pub fn lcm(a: usize, b: usize) -> usize {
    a / a.gcd(&b) * b
}

/// Coefficients of `Phi_n`, constant term first. Monic, integral.
pub fn cyclotomic_polynomial(n: usize) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.read().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Phi_d for every proper divisor d.
    let mut poly = vec![0i64; n + 1];
    poly[0] = -1;
    poly[n] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let divisor = cyclotomic_polynomial(d);
        poly = divide_monic(&poly, &divisor);
    }
    let poly = Arc::new(poly);
    cache.write().unwrap().insert(n, poly.clone());
    poly
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dn];
    for d in (dn..num.len()).rev() {
        let c = rem[d];
        if c != 0 {
            quot[d - dn] = c;
            for (t, &b) in den.iter().enumerate() {
                rem[d - dn + t] -= c * b;
            }
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    quot
}

trait Int:
    Clone + Integer + Signed + CheckedAdd + CheckedSub + CheckedMul + From<i64> + fmt::Debug
{
}
impl<T> Int for T where
    T: Clone + Integer + Signed + CheckedAdd + CheckedSub + CheckedMul + From<i64> + fmt::Debug
{
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Data<T> {
    num: Vec<T>,
    den: T,
}

/// Reduces `poly` modulo `Phi_n` in place and returns it padded to length `n`.
fn reduce_mod_phi<T: Int>(mut poly: Vec<T>, n: usize) -> Option<Vec<T>> {
    let phi_poly = cyclotomic_polynomial(n);
    let deg = phi_poly.len() - 1;
    for d in (deg..poly.len()).rev() {
        if poly[d].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut poly[d], T::zero());
        for (t, &b) in phi_poly[..deg].iter().enumerate() {
            if b != 0 {
                let term = c.checked_mul(&T::from(b))?;
                poly[d - deg + t] = poly[d - deg + t].checked_sub(&term)?;
            }
        }
    }
    poly.resize(n.max(poly.len()), T::zero());
    poly.truncate(n);
    Some(poly)
}

fn normalize<T: Int>(mut num: Vec<T>, mut den: T) -> Data<T> {
    if num.iter().all(Zero::is_zero) {
        return Data { num, den: T::one() };
    }
    let mut g = den.abs();
    for x in &num {
        if g.is_one() {
            break;
        }
        if !x.is_zero() {
            g = g.gcd(x);
        }
    }
    if den.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for x in num.iter_mut() {
            *x = x.div_floor(&g);
        }
        den = den.div_floor(&g);
    }
    Data { num, den }
}

fn add_data<T: Int>(a: &Data<T>, b: &Data<T>, negate_b: bool) -> Option<Data<T>> {
    let combine = |x: &T, y: &T| if negate_b { x.checked_sub(y) } else { x.checked_add(y) };
    if a.den == b.den {
        let num = a.num.iter().zip(&b.num).map(|(x, y)| combine(x, y)).collect::<Option<Vec<_>>>()?;
        return Some(normalize(num, a.den.clone()));
    }
    let num = a
        .num
        .iter()
        .zip(&b.num)
        .map(|(x, y)| combine(&x.checked_mul(&b.den)?, &y.checked_mul(&a.den)?))
        .collect::<Option<Vec<_>>>()?;
    Some(normalize(num, a.den.checked_mul(&b.den)?))
}

fn mul_data<T: Int>(a: &Data<T>, b: &Data<T>, n: usize, width: usize) -> Option<Data<T>> {
    let mut prod = vec![T::zero(); 2 * width];
    for (i, x) in a.num[..width].iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.num[..width].iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            prod[i + j] = prod[i + j].checked_add(&x.checked_mul(y)?)?;
        }
    }
    let num = reduce_mod_phi(prod, n)?;
    Some(normalize(num, a.den.checked_mul(&b.den)?))
}

fn scale_data<T: Int>(a: &Data<T>, p: &T, q: &T) -> Option<Data<T>> {
    let num = a.num.iter().map(|x| x.checked_mul(p)).collect::<Option<Vec<_>>>()?;
    Some(normalize(num, a.den.checked_mul(q)?))
}

fn rotate_data<T: Int>(a: &Data<T>, k: usize, n: usize) -> Option<Data<T>> {
    let mut num = vec![T::zero(); n];
    for (j, x) in a.num.iter().enumerate() {
        if !x.is_zero() {
            num[(j + k) % n] = x.clone();
        }
    }
    Some(Data { num: reduce_mod_phi(num, n)?, den: a.den.clone() })
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Repr {
    Small(Data<i128>),
    Big(Data<BigInt>),
}

const SMALL_LIMIT: i128 = i64::MAX as i128;

impl Repr {
    fn big(&self) -> Data<BigInt> {
        match self {
            Repr::Small(d) => Data {
                num: d.num.iter().map(|&x| BigInt::from(x)).collect(),
                den: BigInt::from(d.den),
            },
            Repr::Big(d) => d.clone(),
        }
    }

    fn from_big(d: Data<BigInt>) -> Repr {
        let fits = |x: &BigInt| x.to_i128().is_some_and(|v| v.abs() <= SMALL_LIMIT);
        if fits(&d.den) && d.num.iter().all(fits) {
            Repr::Small(Data {
                num: d.num.iter().map(|x| x.to_i128().unwrap()).collect(),
                den: d.den.to_i128().unwrap(),
            })
        } else {
            Repr::Big(d)
        }
    }

    fn from_small(d: Data<i128>) -> Repr {
        if d.den.abs() <= SMALL_LIMIT && d.num.iter().all(|x| x.abs() <= SMALL_LIMIT) {
            Repr::Small(d)
        } else {
            Repr::Big(Data {
                num: d.num.iter().map(|&x| BigInt::from(x)).collect(),
                den: BigInt::from(d.den),
            })
        }
    }

    /// Runs `op` on the small representation when both operands are small,
    /// retrying in big integers if it overflows.
    fn binary(
        a: &Repr,
        b: &Repr,
        small: impl Fn(&Data<i128>, &Data<i128>) -> Option<Data<i128>>,
        big: impl Fn(&Data<BigInt>, &Data<BigInt>) -> Option<Data<BigInt>>,
    ) -> Repr {
        if let (Repr::Small(x), Repr::Small(y)) = (a, b) {
            if let Some(r) = small(x, y) {
                return Repr::from_small(r);
            }
        }
        Repr::from_big(big(&a.big(), &b.big()).expect("big integer arithmetic cannot overflow"))
    }

    fn unary(
        a: &Repr,
        small: impl Fn(&Data<i128>) -> Option<Data<i128>>,
        big: impl Fn(&Data<BigInt>) -> Option<Data<BigInt>>,
    ) -> Repr {
        if let Repr::Small(x) = a {
            if let Some(r) = small(x) {
                return Repr::from_small(r);
            }
        }
        Repr::from_big(big(&a.big()).expect("big integer arithmetic cannot overflow"))
    }

    fn is_zero(&self) -> bool {
        match self {
            Repr::Small(d) => d.num.iter().all(|x| *x == 0),
            Repr::Big(d) => d.num.iter().all(Zero::is_zero),
        }
    }
}

/// An exact element of Q(zeta_N).
#[derive(Clone)]
pub struct CyclotomicScalar {
    order: usize,
    width: usize,
    repr: Repr,
}

impl CyclotomicScalar {
    /// Builds `sum_j coeffs[j] * zeta_N^j`; `coeffs.len()` must equal `order`.
    pub fn from_coeffs(order: usize, coeffs: &[Rational]) -> Result<Self> {
        if order == 0 {
            return Err(Error::Format("cyclotomic order must be positive".into()));
        }
        if coeffs.len() != order {
            return Err(Error::Format(format!(
                "cyclotomic scalar of order {order} needs {order} coefficients, got {}",
                coeffs.len()
            )));
        }
        let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num: Vec<BigInt> = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        let num = reduce_mod_phi(num, order).expect("big integer arithmetic cannot overflow");
        Ok(Self::wrap(order, Repr::from_big(normalize(num, den))))
    }

    fn wrap(order: usize, repr: Repr) -> Self {
        CyclotomicScalar { order, width: totient(order), repr }
    }

    pub fn from_rational(order: usize, r: &Rational) -> Self {
        let mut num = vec![BigInt::zero(); order];
        num[0] = r.numer().clone();
        Self::wrap(order, Repr::from_big(normalize(num, r.denom().clone())))
    }

    pub fn from_int(order: usize, n: i64) -> Self {
        let mut num = vec![0i128; order];
        num[0] = n as i128;
        Self::wrap(order, Repr::from_small(Data { num, den: 1 }))
    }

    pub fn zero(order: usize) -> Self {
        Self::from_int(order, 0)
    }

    pub fn one(order: usize) -> Self {
        Self::from_int(order, 1)
    }

    /// `zeta_N^k` for any integer `k`.
    pub fn root_of_unity(order: usize, k: i64) -> Self {
        Self::one(order).mul_root(k)
    }

    /// `zeta_N + zeta_N^{-1}` scaled: the real number `2 cos(2 pi k / N)`.
    pub fn two_cos(order: usize, k: i64) -> Self {
        Self::root_of_unity(order, k) + Self::root_of_unity(order, -k)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Canonical power-basis coefficients, length `order`.
    pub fn coeffs(&self) -> Vec<Rational> {
        let d = self.repr.big();
        d.num.into_iter().map(|x| Rational::new(x, d.den.clone())).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.repr.is_zero()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one(self.order)
    }

    /// The rational value, if this scalar lies in Q.
    pub fn to_rational(&self) -> Option<Rational> {
        let c = self.coeffs();
        c[1..].iter().all(Zero::is_zero).then(|| c[0].clone())
    }

    /// Embeds into Q(zeta_{order * k}).
    pub fn lift(&self, new_order: usize) -> Self {
        assert!(new_order.is_multiple_of(self.order), "cannot lift order {} to {}", self.order, new_order);
        if new_order == self.order {
            return self.clone();
        }
        let step = new_order / self.order;
        let d = self.repr.big();
        let mut num = vec![BigInt::zero(); new_order];
        for (j, x) in d.num.into_iter().enumerate() {
            num[j * step] = x;
        }
        let num = reduce_mod_phi(num, new_order).unwrap();
        Self::wrap(new_order, Repr::from_big(Data { num, den: d.den }))
    }

    fn with_common<R>(&self, other: &Self, f: impl Fn(&Self, &Self) -> R) -> R {
        if self.order == other.order {
            f(self, other)
        } else {
            let n = lcm(self.order, other.order);
            f(&self.lift(n), &other.lift(n))
        }
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        self.with_common(other, |a, b| {
            Self::wrap(
                a.order,
                Repr::binary(&a.repr, &b.repr, |x, y| add_data(x, y, negate), |x, y| add_data(x, y, negate)),
            )
        })
    }

    fn mul_impl(&self, other: &Self) -> Self {
        self.with_common(other, |a, b| {
            let (n, w) = (a.order, a.width);
            Self::wrap(n, Repr::binary(&a.repr, &b.repr, |x, y| mul_data(x, y, n, w), |x, y| mul_data(x, y, n, w)))
        })
    }

    /// Multiplies by `zeta_N^k`; cheaper than a general product.
    pub fn mul_root(&self, k: i64) -> Self {
        let n = self.order;
        let k = k.rem_euclid(n as i64) as usize;
        if k == 0 {
            return self.clone();
        }
        Self::wrap(n, Repr::unary(&self.repr, |x| rotate_data(x, k, n), |x| rotate_data(x, k, n)))
    }

    pub fn mul_int(&self, m: i64) -> Self {
        self.scale(&Rational::from_integer(BigInt::from(m)))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let (p, q) = (r.numer().clone(), r.denom().clone());
        let small = match (p.to_i128(), q.to_i128()) {
            (Some(a), Some(b)) => Some((a, b)),
            _ => None,
        };
        let repr = match (&self.repr, small) {
            (Repr::Small(x), Some((a, b))) => match scale_data(x, &a, &b) {
                Some(d) => Repr::from_small(d),
                None => Repr::from_big(scale_data(&self.repr.big(), &p, &q).unwrap()),
            },
            _ => Repr::from_big(scale_data(&self.repr.big(), &p, &q).unwrap()),
        };
        Self::wrap(self.order, repr)
    }

    /// Galois automorphism `zeta -> zeta^u`, `u` coprime to the order.
    pub fn galois(&self, u: i64) -> Self {
        let n = self.order as i64;
        assert!(u.gcd(&n) == 1, "galois exponent {u} not a unit mod {n}");
        let d = self.repr.big();
        let mut num = vec![BigInt::zero(); self.order];
        for (j, x) in d.num.into_iter().enumerate() {
            if !x.is_zero() {
                num[((j as i64) * u).rem_euclid(n) as usize] = x;
            }
        }
        let num = reduce_mod_phi(num, self.order).unwrap();
        Self::wrap(self.order, Repr::from_big(Data { num, den: d.den }))
    }

    /// Complex conjugation, realised as `zeta -> zeta^{-1}`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let w = self.width;
        let n = self.order;
        // Column j of the multiplication-by-self matrix is self * zeta^j.
        let mut m: Vec<Vec<Rational>> = vec![vec![Rational::zero(); w + 1]; w];
        let mut col = self.clone();
        for j in 0..w {
            for (i, c) in col.coeffs().into_iter().take(w).enumerate() {
                m[i][j] = c;
            }
            col = col.mul_root(1);
        }
        m[0][w] = Rational::one();
        let sol = solve_rational(m)?;
        let mut coeffs = sol;
        coeffs.resize(n, Rational::zero());
        Some(Self::from_coeffs(n, &coeffs).unwrap())
    }

    pub fn div(&self, other: &Self) -> Option<Self> {
        Some(self * &other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one(self.order);
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        Some(acc)
    }

    /// Numeric embedding with `zeta_N = exp(2 pi i / N)`.
    pub fn to_complex(&self) -> Complex64 {
        let d = self.repr.big();
        let den = d.den.to_f64().unwrap_or(f64::NAN);
        let n = self.order as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, x) in d.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let c = x.to_f64().unwrap_or(f64::NAN) / den;
            let angle = std::f64::consts::TAU * j as f64 / n;
            acc += Complex64::from_polar(c, angle);
        }
        acc
    }

    /// If this scalar is `zeta_N^k`, returns `k` in `0..N`.
    pub fn root_of_unity_exponent(&self) -> Option<usize> {
        let n = self.order;
        let z = self.to_complex();
        if (z.norm() - 1.0).abs() > 1e-6 {
            return None;
        }
        let guess = (z.arg() / std::f64::consts::TAU * n as f64).round() as i64;
        let k = guess.rem_euclid(n as i64) as usize;
        if *self == Self::root_of_unity(n, k as i64) {
            return Some(k);
        }
        (0..n).find(|&k| *self == Self::root_of_unity(n, k as i64))
    }

    /// Multiplicative order when this scalar is a root of unity.
    pub fn root_order(&self) -> Option<usize> {
        let k = self.root_of_unity_exponent()?;
        Some(self.order / self.order.gcd(&k))
    }
}

/// Gaussian elimination on an augmented `w x (w+1)` system with a unique
/// solution.
fn solve_rational(mut m: Vec<Vec<Rational>>) -> Option<Vec<Rational>> {
    let w = m.len();
    for col in 0..w {
        let pivot = (col..w).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for x in m[col][col..].iter_mut() {
            *x *= &inv;
        }
        for r in 0..w {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let (src, dst) = if r < col {
                    let (a, b) = m.split_at_mut(col);
                    (&b[0], &mut a[r])
                } else {
                    let (a, b) = m.split_at_mut(r);
                    (&a[col], &mut b[0])
                };
                for (d, s) in dst[col..].iter_mut().zip(&src[col..]) {
                    *d -= &f * s;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[w].clone()).collect())
}

impl PartialEq for CyclotomicScalar {
    fn eq(&self, other: &Self) -> bool {
        self.with_common(other, |a, b| a.repr == b.repr)
    }
}

impl Eq for CyclotomicScalar {}

impl fmt::Debug for CyclotomicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CyclotomicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
            let abs = c.abs();
            let mag = if abs.is_one() && j > 0 { String::new() } else { abs.to_string() };
            let sep = if !mag.is_empty() && j > 0 { "*" } else { "" };
            let power = match j {
                0 => String::new(),
                1 => format!("z{}", self.order),
                _ => format!("z{}^{}", self.order, j),
            };
            write!(f, "{}{}{}{}", if first { sign.to_string() } else { format!(" {sign} ") }, mag, sep, power)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl<'a> $trait<&'a CyclotomicScalar> for &'a CyclotomicScalar {
            type Output = CyclotomicScalar;
            fn $method(self, rhs: &'a CyclotomicScalar) -> CyclotomicScalar {
                $body(self, rhs)
            }
        }
        impl $trait for CyclotomicScalar {
            type Output = CyclotomicScalar;
            fn $method(self, rhs: CyclotomicScalar) -> CyclotomicScalar {
                $body(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &CyclotomicScalar, b: &CyclotomicScalar| a.add_impl(b, false));
forward_binop!(Sub, sub, |a: &CyclotomicScalar, b: &CyclotomicScalar| a.add_impl(b, true));
forward_binop!(Mul, mul, |a: &CyclotomicScalar, b: &CyclotomicScalar| a.mul_impl(b));

impl Neg for &CyclotomicScalar {
    type Output = CyclotomicScalar;
    fn neg(self) -> CyclotomicScalar {
        self.mul_int(-1)
    }
}

impl Neg for CyclotomicScalar {
    type Output = CyclotomicScalar;
    fn neg(self) -> CyclotomicScalar {
        -&self
    }
}

/// Compares two real scalars through their numeric embeddings, falling back
/// to exact equality. Only meaningful for totally real values.
pub fn real_cmp(a: &CyclotomicScalar, b: &CyclotomicScalar) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    let (x, y) = (a.to_complex().re, b.to_complex().re);
    x.partial_cmp(&y).unwrap_or(Ordering::Equal)
}
